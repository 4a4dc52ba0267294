//! Exact Wiener index and average distance, plain and vertex-weighted.
//!
//! All values are exact rationals; the weighted variants accept arbitrary
//! nonnegative rational weights and a non-integer total.

use std::collections::VecDeque;

use num::bigint::BigInt;
use num::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ratio::{choose2, decimal_str, exact_str, int, Rational};

/// Nonnegative rational weight per vertex, with the cached total.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightFunction {
    weights: Vec<Rational>,
    total: Rational,
}

impl WeightFunction {
    pub fn new(weights: Vec<Rational>) -> Result<Self> {
        if let Some(v) = weights.iter().position(|w| w.is_negative()) {
            return Err(Error::NegativeWeight(v));
        }
        let total = weights.iter().sum();
        Ok(WeightFunction { weights, total })
    }

    /// Weight 1 on every vertex.
    pub fn unit(n: usize) -> Self {
        WeightFunction {
            weights: vec![int(1); n],
            total: int(n as i64),
        }
    }

    pub fn from_integers(weights: &[u64]) -> Self {
        WeightFunction::new(weights.iter().map(|&w| int(w as i64)).collect()).unwrap()
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn get(&self, v: usize) -> &Rational {
        &self.weights[v]
    }

    pub fn total(&self) -> &Rational {
        &self.total
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    /// Vertices with nonzero weight, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.weights.len())
            .filter(|&v| !self.weights[v].is_zero())
            .collect()
    }
}

/// Sum of distances over all unordered vertex pairs, exactly.
pub fn wiener_index(g: &Graph) -> Result<BigInt> {
    let n = g.order();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut total: u128 = 0;
    let mut dist = vec![u32::MAX; n];
    let mut queue = VecDeque::new();
    for source in 0..n {
        dist.fill(u32::MAX);
        dist[source] = 0;
        queue.push_back(source);
        let mut reached = 0usize;
        while let Some(u) = queue.pop_front() {
            reached += 1;
            for &v in g.neighbors(u) {
                if dist[v] == u32::MAX {
                    dist[v] = dist[u] + 1;
                    total += u128::from(dist[v]);
                    queue.push_back(v);
                }
            }
        }
        if reached != n {
            return Err(Error::Disconnected);
        }
    }
    // every unordered pair was counted once from each side
    Ok(BigInt::from(total / 2))
}

/// Wiener index divided by `C(n,2)`.
pub fn average_distance(g: &Graph) -> Result<Rational> {
    if g.order() < 2 {
        return Err(Error::OrderTooSmall);
    }
    let w = Rational::from_integer(wiener_index(g)?);
    Ok(w / choose2(&int(g.order() as i64)))
}

/// Weighted Wiener index: `sum c(u) c(v) d(u,v)` over unordered pairs.
///
/// BFS runs only from vertices in the support of `c`, so concentrated
/// weight functions stay cheap on large graphs.
pub fn weighted_wiener(g: &Graph, c: &WeightFunction) -> Result<Rational> {
    if c.len() != g.order() {
        return Err(Error::WeightLengthMismatch {
            got: c.len(),
            expected: g.order(),
        });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let support = c.support();
    let mut sum = Rational::zero();
    for (i, &u) in support.iter().enumerate() {
        let dist = g.bfs_distances(u);
        for &v in &support[i + 1..] {
            let d = dist[v].expect_finite();
            sum += c.get(u) * c.get(v) * int(i64::from(d));
        }
    }
    Ok(sum)
}

/// Weighted average distance: `W_c / C(N,2)` with `N` the total weight.
pub fn weighted_average_distance(g: &Graph, c: &WeightFunction) -> Result<Rational> {
    if c.total() <= &Rational::one() {
        return Err(Error::TotalWeightTooSmall(exact_str(c.total())));
    }
    Ok(weighted_wiener(g, c)? / choose2(c.total()))
}

/// Exact metrics of one graph, with decimal renderings for display.
#[derive(Clone, Debug, Serialize)]
pub struct MetricReport {
    pub n: usize,
    pub pair_count: String,
    pub wiener: String,
    pub wiener_decimal: String,
    pub avg_distance: String,
    pub avg_distance_decimal: String,
}

impl MetricReport {
    pub fn for_graph(g: &Graph) -> Result<Self> {
        let w = Rational::from_integer(wiener_index(g)?);
        let mu = average_distance(g)?;
        Ok(MetricReport {
            n: g.order(),
            pair_count: exact_str(&choose2(&int(g.order() as i64))),
            wiener: exact_str(&w),
            wiener_decimal: decimal_str(&w),
            avg_distance: exact_str(&mu),
            avg_distance_decimal: decimal_str(&mu),
        })
    }

    /// Weighted variant; `pair_count` becomes `C(N,2)` for the weight total.
    pub fn for_weighted_graph(g: &Graph, c: &WeightFunction) -> Result<Self> {
        let w = weighted_wiener(g, c)?;
        let mu = weighted_average_distance(g, c)?;
        Ok(MetricReport {
            n: g.order(),
            pair_count: exact_str(&choose2(c.total())),
            wiener: exact_str(&w),
            wiener_decimal: decimal_str(&w),
            avg_distance: exact_str(&mu),
            avg_distance_decimal: decimal_str(&mu),
        })
    }
}
