//! Finite fields GF(p^m) and the orthogonality graphs built on the
//! projective points of GF(q)^3.
//!
//! Run with: cargo run --example polarity_graphs

use meandist::constructions::{modified_polarity_graph, polarity_graph};
use meandist::gf::{orthogonal, projective_points, Field};
use meandist::Result;

fn main() -> Result<()> {
    // GF(4) is the smallest proper extension field: residues mod x^2 + x + 1
    let f4 = Field::new(4)?;
    println!(
        "GF(4): characteristic {}, degree {}, modulus {:?}",
        f4.characteristic(),
        f4.extension_degree(),
        f4.modulus()
    );
    let x = f4.from_index(2);
    println!("  x * x     = element {}", f4.index(&f4.mul(&x, &x)));
    println!("  inv(x)    = element {}", f4.index(&f4.inv(&x)?));

    let points = projective_points(&f4);
    println!("  projective points: {}", points.len());
    let selforth = points
        .iter()
        .filter(|p| orthogonal(&f4, p, p).unwrap())
        .count();
    println!("  self-orthogonal:   {selforth}");

    println!();
    println!("{:<4} {:>6} {:>6} {:>9} {:>8}", "q", "order", "edges", "degrees", "c4-free");
    for q in [2u64, 3, 4, 5, 7, 8, 9] {
        let h = polarity_graph(q)?;
        let stats = h.degree_stats()?;
        println!(
            "{:<4} {:>6} {:>6} {:>9} {:>8}",
            q,
            h.order(),
            h.edge_count(),
            format!("{}..{}", stats.min, stats.max),
            h.is_c4_free()
        );
    }

    println!();
    println!("modified variant: drop an absolute vertex, separate its two ports");
    for q in [3u64, 4, 5] {
        let (g, u, v) = modified_polarity_graph(q)?;
        let duv = g.bfs_distances(u)[v];
        println!(
            "  q={q}: order {}, min degree {}, d(u, v) = {duv}",
            g.order(),
            g.degree_stats()?.min
        );
    }
    Ok(())
}
