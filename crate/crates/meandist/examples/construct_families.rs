//! The extremal chain families: clique chains, triangle-free bipartite
//! chains, and the C4-free chain, with their block structure and degree
//! audits.
//!
//! Run with: cargo run --example construct_families

use meandist::constructions::{bipartite_chain, c4_chain, clique_chain};
use meandist::io::to_graph6;
use meandist::metrics::average_distance;
use meandist::ratio::{decimal_str, exact_str};
use meandist::Result;

fn main() -> Result<()> {
    let (g, labels) = clique_chain(28, 8, 3)?;
    let stats = g.degree_stats()?;
    println!("clique chain (n=28, Delta=8, delta=3)");
    println!("  blocks     {}", labels.block_count());
    println!("  degrees    {}..{}", stats.min, stats.max);
    println!("  connectors {:?}", labels.connectors);
    let mu = average_distance(&g)?;
    println!("  mu         {} (~{})", exact_str(&mu), decimal_str(&mu));
    println!("  graph6     {}", to_graph6(&g));

    let (g, labels) = bipartite_chain(20, 5, 3)?;
    println!();
    println!("bipartite chain (n=20, Delta=5, delta=3)");
    println!("  blocks        {}", labels.block_count());
    println!("  triangle-free {}", g.is_triangle_free());
    let mu = average_distance(&g)?;
    println!("  mu            {} (~{})", exact_str(&mu), decimal_str(&mu));

    let (g, labels) = c4_chain(2, 3, 4)?;
    let stats = g.degree_stats()?;
    println!();
    println!("c4-free chain (k=2, ell=3, q=4)");
    println!("  order    {}", g.order());
    println!("  blocks   {}", labels.block_count());
    println!("  degrees  {}..{}", stats.min, stats.max);
    println!("  c4-free  {}", g.is_c4_free());
    let mu = average_distance(&g)?;
    println!("  mu       {} (~{})", exact_str(&mu), decimal_str(&mu));

    // infeasible parameters are rejected, never silently adjusted
    println!();
    match clique_chain(27, 8, 3) {
        Err(e) => println!("clique chain (27, 8, 3) rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
