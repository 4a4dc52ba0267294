//! Gap sweep: how close each construction sits to its upper bound across a
//! parameter grid, as the same CSV the `sweep` subcommand writes.
//!
//! Run with: cargo run --example sweep_gaps

use meandist::harness::{sweep, SweepConfig};
use meandist::Result;

fn main() -> Result<()> {
    let clique = SweepConfig {
        family: "clique-chain".into(),
        n_values: (12..=60).collect(),
        delta_values: vec![3],
        max_deg_values: vec![8, 12],
        k_values: vec![],
        ell_values: vec![],
        q_values: vec![],
        certify: false,
        seed: 0,
        output: None,
    };
    let csv = sweep(&clique)?;
    let feasible = csv.lines().skip(1).filter(|l| !l.contains("skip:")).count();
    let skipped = csv.lines().skip(1).count() - feasible;
    println!("clique-chain sweep: {feasible} bound rows, {skipped} skipped grid points");
    for line in csv.lines().take(7) {
        println!("  {line}");
    }

    println!();
    let c4 = SweepConfig {
        family: "c4-chain".into(),
        n_values: vec![],
        delta_values: vec![],
        max_deg_values: vec![],
        k_values: vec![1, 2],
        ell_values: vec![2, 3, 4],
        q_values: vec![4, 5],
        certify: true,
        seed: 0,
        output: None,
    };
    let csv = sweep(&c4)?;
    println!("c4-chain sweep with certificates:");
    for line in csv.lines() {
        println!("  {line}");
    }
    Ok(())
}
