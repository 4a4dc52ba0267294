//! The closed-form average-distance bounds, evaluated exactly with their
//! hypothesis flags.
//!
//! Run with: cargo run --example evaluate_bounds

use meandist::bounds::{evaluate_bound, weighted_path_bound, BoundParams, BoundVariant};
use meandist::ratio::{decimal_str, exact_str, int};
use meandist::Result;

fn main() -> Result<()> {
    let params = BoundParams::new(28, 3, 8)?;
    println!("bounds at n = 28, delta = 3, Delta = 8:");
    println!("{:<16} {:>12} {:>10}  hypotheses", "variant", "exact", "decimal");
    for variant in BoundVariant::ALL {
        let b = evaluate_bound(variant, &params);
        let flags: Vec<String> = b
            .hypotheses
            .iter()
            .map(|h| format!("{}{}", if h.met { "+" } else { "-" }, h.name))
            .collect();
        println!(
            "{:<16} {:>12} {:>10}  {}",
            variant.name(),
            exact_str(&b.value),
            decimal_str(&b.value),
            flags.join(", ")
        );
    }

    // a large maximum degree beats the minimum-degree-only bound
    println!();
    println!("{:<6} {:>16} {:>16}", "n", "degree-only", "with max degree");
    for n in [40u64, 100, 200] {
        let p = BoundParams::new(n, 3, n / 2)?;
        let old = evaluate_bound(BoundVariant::KouiderWinkler, &p);
        let new = evaluate_bound(BoundVariant::Thm4Upper, &p);
        println!(
            "{:<6} {:>16} {:>16}",
            n,
            decimal_str(&old.value),
            decimal_str(&new.value)
        );
    }

    // the weighted-path maximum underlying all three arguments
    println!();
    println!("weighted-path maximum (N - k)/(N - 1) * (N + k)/(3k):");
    for (total, k) in [(12i64, 3u64), (10, 5), (24, 4)] {
        let v = weighted_path_bound(&int(total), k)?;
        println!("  N = {total:>2}, k = {k}: {}", exact_str(&v));
    }
    Ok(())
}
