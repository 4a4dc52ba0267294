//! Exact distance invariants of graphs — Wiener index, average distance and
//! their vertex-weighted variants — together with the degree-based upper and
//! lower bounds on them, the extremal chain and polarity-graph constructions
//! that realize the bounds, and a certification pipeline that replays the
//! bounding argument on an arbitrary input graph and checks every
//! intermediate inequality in exact rational arithmetic.
//!
//! The crate is organized around runnable examples, one per capability:
//!
//! - **`compute_invariants`** — build graphs and compute exact metrics
//! - **`construct_families`** — generate the extremal chain families
//! - **`polarity_graphs`** — GF(q) arithmetic and the orthogonality graphs
//! - **`evaluate_bounds`** — the closed-form bound evaluators
//! - **`certify_theorem`** — full certification runs with check transcripts
//! - **`enumerate_verify`** — exhaustive small-graph verification
//! - **`sweep_gaps`** — CSV gap reports over construction grids
//!
//! ```bash
//! cargo run --example certify_theorem
//! cargo run --example sweep_gaps
//! ```
//!
//! A thin `meandist` binary exposes the same functionality as subcommands
//! (`compute`, `construct`, `bound`, `certify`, `verify-small`, `sweep`).

pub mod bounds;
pub mod cli;
pub mod constructions;
mod error;
pub mod gf;
pub mod graph;
pub mod harness;
pub mod io;
pub mod metrics;
pub mod pipeline;
pub mod ratio;

pub use error::{Error, Result};
pub use graph::{DegreeStats, Dist, DistanceMatrix, EdgeRef, Graph};
pub use metrics::{MetricReport, WeightFunction};
pub use ratio::Rational;

#[cfg(test)]
pub(crate) mod testutil {
    use crate::graph::Graph;
    use proptest::prelude::*;

    /// Arbitrary simple graph with up to `max_n` vertices, edges drawn from a
    /// random bitmask over the vertex pairs.
    pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n, any::<u64>()).prop_map(|(n, mask)| {
            let mut edges = Vec::new();
            let mut bit = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if mask >> (bit % 64) & 1 == 1 {
                        edges.push((u, v));
                    }
                    bit += 1;
                }
            }
            Graph::new(n, &edges).unwrap()
        })
    }

    /// Arbitrary connected graph: the random graph plus a spanning path to
    /// guarantee connectivity.
    pub fn arb_connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n, any::<u64>()).prop_map(|(n, mask)| {
            let mut edges = Vec::new();
            let mut bit = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if mask >> (bit % 64) & 1 == 1 {
                        edges.push((u, v));
                    }
                    bit += 1;
                }
            }
            for u in 1..n {
                edges.push((u - 1, u));
            }
            Graph::new(n, &edges).unwrap()
        })
    }
}
