//! Exact distance invariants of a few graphs: Wiener index, average
//! distance, and the vertex-weighted variants.
//!
//! Run with: cargo run --example compute_invariants

use meandist::constructions::{clique_chain, complete, cycle, path};
use meandist::metrics::{
    weighted_average_distance, weighted_wiener, MetricReport, WeightFunction,
};
use meandist::Result;

fn main() -> Result<()> {
    let named: Vec<(&str, meandist::Graph)> = vec![
        ("P_10", path(10)?),
        ("C_12", cycle(12)?),
        ("K_6", complete(6)?),
        ("clique chain (28, 8, 3)", clique_chain(28, 8, 3)?.0),
    ];
    println!("{:<24} {:>4} {:>8} {:>10} {:>10}", "graph", "n", "wiener", "mu", "~mu");
    for (name, g) in &named {
        let r = MetricReport::for_graph(g)?;
        println!(
            "{:<24} {:>4} {:>8} {:>10} {:>10}",
            name, r.n, r.wiener, r.avg_distance, r.avg_distance_decimal
        );
    }

    // weights scale contributions by c(u) * c(v): constant weight 3 on P_4
    // multiplies the Wiener index by 9 but shifts the average, because the
    // pair count C(N,2) uses the weight total N = 12
    let p4 = path(4)?;
    let c = WeightFunction::from_integers(&[3, 3, 3, 3]);
    println!();
    println!("weighted P_4, constant weight 3:");
    println!("  W_c  = {}", meandist::ratio::exact_str(&weighted_wiener(&p4, &c)?));
    println!(
        "  mu_c = {}",
        meandist::ratio::exact_str(&weighted_average_distance(&p4, &c)?)
    );
    Ok(())
}
