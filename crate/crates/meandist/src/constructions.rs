//! Generators for the graph families used throughout: basic families, the
//! clique chain, the triangle-free bipartite chain, the orthogonality graphs
//! `H_q` and `H_q'`, and the C4-free chain built from them.
//!
//! Every generator re-audits the properties its family is supposed to have
//! (order, degree extremes, connectivity, forbidden subgraphs) and returns
//! [`Error::ConstructionAudit`] instead of silently producing an off-spec
//! graph.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::{orthogonal, projective_points, Field};
use crate::graph::Graph;

/// Block decomposition of a chain construction. `block_of[v]` is the 0-based
/// block index of vertex `v`; `connectors[i]` is the pair `(u_i, v_i)` of
/// block `i` (for the C4-free chain's first block, both entries name the
/// identified hub).
#[derive(Clone, Debug, Serialize)]
pub struct ChainLabels {
    pub block_of: Vec<usize>,
    pub connectors: Vec<(usize, usize)>,
}

impl ChainLabels {
    pub fn block_count(&self) -> usize {
        self.connectors.len()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasicFamily {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Star(usize),
    /// Two adjacent centers with `a` and `b` leaves.
    DoubleStar(usize, usize),
}

pub fn basic_graph(family: BasicFamily) -> Result<Graph> {
    use BasicFamily::*;
    match family {
        Path(n) => {
            require(n >= 1, "path needs at least 1 vertex")?;
            Graph::new(n, &consecutive(n))
        }
        Cycle(n) => {
            require(n >= 3, "cycle needs at least 3 vertices")?;
            let mut edges = consecutive(n);
            edges.push((n - 1, 0));
            Graph::new(n, &edges)
        }
        Complete(n) => {
            require(n >= 1, "complete graph needs at least 1 vertex")?;
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    edges.push((u, v));
                }
            }
            Graph::new(n, &edges)
        }
        CompleteBipartite(a, b) => {
            require(a >= 1 && b >= 1, "both sides must be nonempty")?;
            let mut edges = Vec::new();
            for u in 0..a {
                for v in 0..b {
                    edges.push((u, a + v));
                }
            }
            Graph::new(a + b, &edges)
        }
        Star(n) => {
            require(n >= 2, "star needs at least 2 vertices")?;
            let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
            Graph::new(n, &edges)
        }
        DoubleStar(a, b) => {
            require(a >= 1 && b >= 1, "double-star needs a leaf on each center")?;
            let mut edges = vec![(0, 1)];
            edges.extend((0..a).map(|i| (0, 2 + i)));
            edges.extend((0..b).map(|i| (1, 2 + a + i)));
            Graph::new(2 + a + b, &edges)
        }
    }
}

pub fn path(n: usize) -> Result<Graph> {
    basic_graph(BasicFamily::Path(n))
}

pub fn cycle(n: usize) -> Result<Graph> {
    basic_graph(BasicFamily::Cycle(n))
}

pub fn complete(n: usize) -> Result<Graph> {
    basic_graph(BasicFamily::Complete(n))
}

pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    basic_graph(BasicFamily::CompleteBipartite(a, b))
}

pub fn star(n: usize) -> Result<Graph> {
    basic_graph(BasicFamily::Star(n))
}

pub fn double_star(a: usize, b: usize) -> Result<Graph> {
    basic_graph(BasicFamily::DoubleStar(a, b))
}

fn consecutive(n: usize) -> Vec<(usize, usize)> {
    (1..n).map(|v| (v - 1, v)).collect()
}

fn require(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameters(msg.into()))
    }
}

fn audit(cond: bool, msg: impl Into<String>) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::ConstructionAudit(msg.into()))
    }
}

/// Chain of one `K_max_deg` block followed by `K_(min_deg+1)` blocks: the
/// interior blocks lose their `u_i v_i` edge and consecutive blocks are
/// joined by a `v_i u_{i+1}` edge. Maximizes average distance for the given
/// degree parameters up to an additive constant.
pub fn clique_chain(n: usize, max_deg: usize, min_deg: usize) -> Result<(Graph, ChainLabels)> {
    require(min_deg >= 3, "minimum degree must be at least 3")?;
    require(max_deg >= min_deg, "maximum degree must be at least the minimum")?;
    require(
        n > max_deg + min_deg,
        "order must be at least max_deg + min_deg + 1",
    )?;
    require(
        (n - max_deg).is_multiple_of(min_deg + 1),
        "n - max_deg must be a multiple of min_deg + 1",
    )?;
    let blocks = (n - max_deg) / (min_deg + 1) + 1;
    let mut sizes = vec![min_deg + 1; blocks];
    sizes[0] = max_deg;

    let (graph, labels) = assemble_chain(&sizes, |_, size| {
        let mut edges = Vec::new();
        for a in 0..size {
            for b in a + 1..size {
                edges.push((a, b));
            }
        }
        (edges, 0, 1)
    })?;

    let stats = graph.degree_stats()?;
    audit(graph.is_connected(), "clique chain is disconnected")?;
    audit(
        stats.min == min_deg,
        format!("clique chain minimum degree is {}, wanted {min_deg}", stats.min),
    )?;
    audit(
        stats.max == max_deg,
        format!("clique chain maximum degree is {}, wanted {max_deg}", stats.max),
    )?;
    Ok((graph, labels))
}

/// Chain of one `K_(min_deg,max_deg)` block followed by `K_(min_deg,min_deg)`
/// blocks, joined the same way as the clique chain. Triangle-free.
pub fn bipartite_chain(n: usize, max_deg: usize, min_deg: usize) -> Result<(Graph, ChainLabels)> {
    require(min_deg >= 3, "minimum degree must be at least 3")?;
    require(max_deg >= min_deg, "maximum degree must be at least the minimum")?;
    require(
        n >= max_deg + 3 * min_deg,
        "order must be at least max_deg + 3 * min_deg",
    )?;
    require(
        (n - max_deg - min_deg).is_multiple_of(2 * min_deg),
        "n - max_deg - min_deg must be a multiple of 2 * min_deg",
    )?;
    let blocks = (n - max_deg + min_deg) / (2 * min_deg);
    let mut sizes = vec![2 * min_deg; blocks];
    sizes[0] = min_deg + max_deg;

    let (graph, labels) = assemble_chain(&sizes, |block, size| {
        // small side first so u_i has the large degree in block 0
        let small = if block == 0 { min_deg } else { size / 2 };
        let mut edges = Vec::new();
        for a in 0..small {
            for b in small..size {
                edges.push((a, b));
            }
        }
        (edges, 0, small)
    })?;

    let stats = graph.degree_stats()?;
    audit(graph.is_connected(), "bipartite chain is disconnected")?;
    audit(
        stats.min == min_deg,
        format!(
            "bipartite chain minimum degree is {}, wanted {min_deg}",
            stats.min
        ),
    )?;
    audit(
        stats.max == max_deg,
        format!(
            "bipartite chain maximum degree is {}, wanted {max_deg}",
            stats.max
        ),
    )?;
    audit(graph.is_triangle_free(), "bipartite chain has a triangle")?;
    Ok((graph, labels))
}

/// Lays out blocks sequentially, deletes the interior `u_i v_i` edges, and
/// adds the `v_i u_{i+1}` chain edges. `block_edges` returns a block's local
/// edge list plus the local indices of its `u` and `v` connectors.
fn assemble_chain(
    sizes: &[usize],
    block_edges: impl Fn(usize, usize) -> (Vec<(usize, usize)>, usize, usize),
) -> Result<(Graph, ChainLabels)> {
    let blocks = sizes.len();
    let n: usize = sizes.iter().sum();
    let mut offset = 0;
    let mut edges = Vec::new();
    let mut block_of = vec![0; n];
    let mut connectors = Vec::with_capacity(blocks);
    for (i, &size) in sizes.iter().enumerate() {
        let (local, u_loc, v_loc) = block_edges(i, size);
        let (u_i, v_i) = (offset + u_loc, offset + v_loc);
        let interior = i > 0 && i + 1 < blocks;
        for (a, b) in local {
            let e = (offset + a, offset + b);
            if interior && (e == (u_i, v_i) || e == (v_i, u_i)) {
                continue;
            }
            edges.push(e);
        }
        block_of[offset..offset + size].fill(i);
        connectors.push((u_i, v_i));
        offset += size;
    }
    for i in 0..blocks - 1 {
        edges.push((connectors[i].1, connectors[i + 1].0));
    }
    let graph = Graph::new(n, &edges)?;
    Ok((graph, ChainLabels { block_of, connectors }))
}

/// The orthogonality graph on the projective points of GF(q)^3: vertices are
/// the canonical points, edges join distinct orthogonal pairs. Order
/// q^2 + q + 1, degrees q or q + 1, connected, C4-free.
pub fn polarity_graph(q: u64) -> Result<Graph> {
    let f = Field::new(q)?;
    let pts = projective_points(&f);
    let n = pts.len();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if orthogonal(&f, &pts[i], &pts[j])? {
                edges.push((i, j));
            }
        }
    }
    let g = Graph::new(n, &edges)?;
    let stats = g.degree_stats()?;
    audit(
        n as u64 == q * q + q + 1,
        format!("polarity graph on {n} vertices, wanted q^2+q+1"),
    )?;
    audit(
        stats.degrees.iter().all(|&d| d as u64 == q || d as u64 == q + 1),
        "polarity graph degree outside {q, q+1}",
    )?;
    audit(g.is_connected(), "polarity graph is disconnected")?;
    audit(g.is_c4_free(), "polarity graph contains a 4-cycle")?;
    Ok(g)
}

/// Modified orthogonality graph: delete a degree-q vertex `z` and every edge
/// joining a neighbor of `u` to a neighbor of `v`, where `u`, `v` are two
/// neighbors of `z`. Returns the graph and the images of `u` and `v`, which
/// end up at distance at least 4.
///
/// `z` is the lowest-indexed degree-q vertex and `u`, `v` its two lowest
/// neighbors, so the output is reproducible.
pub fn modified_polarity_graph(q: u64) -> Result<(Graph, usize, usize)> {
    if q < 3 {
        return Err(Error::InvalidParameters(
            "modified polarity graph needs q >= 3".into(),
        ));
    }
    let h = polarity_graph(q)?;
    let n = h.order();
    let z = (0..n)
        .find(|&v| h.degree(v) as u64 == q)
        .ok_or_else(|| Error::ConstructionAudit("no degree-q vertex found".into()))?;
    let (u, v) = match h.neighbors(z) {
        [a, b, ..] => (*a, *b),
        _ => return Err(Error::ConstructionAudit("degree-q vertex has < 2 neighbors".into())),
    };
    let near_u: Vec<bool> = mark(n, h.neighbors(u));
    let near_v: Vec<bool> = mark(n, h.neighbors(v));
    let relabel = |x: usize| if x > z { x - 1 } else { x };
    let mut edges = Vec::new();
    for e in h.edges() {
        let (a, b) = e.endpoints();
        if a == z || b == z {
            continue;
        }
        if (near_u[a] && near_v[b]) || (near_v[a] && near_u[b]) {
            continue;
        }
        edges.push((relabel(a), relabel(b)));
    }
    let g = Graph::new(n - 1, &edges)?;
    let (u2, v2) = (relabel(u), relabel(v));

    let stats = g.degree_stats()?;
    audit(
        g.order() as u64 == q * q + q,
        "modified polarity graph order is not q^2+q",
    )?;
    audit(
        stats.min as u64 + 1 >= q,
        format!("minimum degree {} fell below q-1", stats.min),
    )?;
    audit(g.is_c4_free(), "modified polarity graph contains a 4-cycle")?;
    audit(g.is_connected(), "modified polarity graph is disconnected")?;
    let duv = g.bfs_distances(u2)[v2];
    audit(
        duv >= crate::graph::Dist::Finite(4),
        format!("ports are at distance {duv}, wanted >= 4"),
    )?;
    Ok((g, u2, v2))
}

/// C4-free chain: `k` orthogonality graphs sharing one identified hub, then
/// `ell - 1` modified orthogonality graphs joined port to port.
///
/// Order `(k + ell - 1)(q^2 + q) + 1`, maximum degree `k(q + 1) + 1`,
/// minimum degree at least `q - 1`, C4-free, connected.
pub fn c4_chain(k: usize, ell: usize, q: u64) -> Result<(Graph, ChainLabels)> {
    require(k >= 1, "need at least one hub lobe")?;
    require(ell >= 2, "need at least 2 blocks")?;
    if q < 4 {
        return Err(Error::InvalidParameters(
            "q must be a prime power at least 4 so the minimum degree is at least 3".into(),
        ));
    }
    let hq = polarity_graph(q)?;
    let (hqm, port_u, port_v) = modified_polarity_graph(q)?;
    let lobe = q as usize * (q as usize + 1); // vertices each lobe adds
    let hub_src = (0..hq.order())
        .find(|&v| hq.degree(v) as u64 == q + 1)
        .ok_or_else(|| Error::ConstructionAudit("no degree-(q+1) vertex found".into()))?;

    let n = (k + ell - 1) * lobe + 1;
    let mut edges = Vec::new();
    let mut block_of = vec![0; n];
    // hub block: vertex 0 is the identified hub, lobes follow contiguously
    for copy in 0..k {
        let offset = 1 + copy * lobe;
        let map = |x: usize| {
            if x == hub_src {
                0
            } else {
                offset + x - usize::from(x > hub_src)
            }
        };
        for e in hq.edges() {
            edges.push((map(e.u()), map(e.v())));
        }
    }
    let mut connectors = vec![(0, 0)];
    // port blocks
    let mut prev_v = 0; // chain edges leave from the previous block's v port
    for i in 0..ell - 1 {
        let offset = 1 + (k + i) * lobe;
        for e in hqm.edges() {
            edges.push((offset + e.u(), offset + e.v()));
        }
        let (u_i, v_i) = (offset + port_u, offset + port_v);
        block_of[offset..offset + lobe].fill(i + 1);
        connectors.push((u_i, v_i));
        edges.push((prev_v, u_i));
        prev_v = v_i;
    }
    let g = Graph::new(n, &edges)?;

    let stats = g.degree_stats()?;
    audit(g.order() == n, "c4 chain order mismatch")?;
    audit(
        stats.max == k * (q as usize + 1) + 1,
        format!(
            "c4 chain maximum degree is {}, wanted {}",
            stats.max,
            k * (q as usize + 1) + 1
        ),
    )?;
    audit(
        stats.min as u64 + 1 >= q,
        format!("c4 chain minimum degree {} fell below q-1", stats.min),
    )?;
    audit(g.is_c4_free(), "c4 chain contains a 4-cycle")?;
    audit(g.is_connected(), "c4 chain is disconnected")?;
    Ok((g, ChainLabels { block_of, connectors }))
}

fn mark(n: usize, items: &[usize]) -> Vec<bool> {
    let mut m = vec![false; n];
    for &x in items {
        m[x] = true;
    }
    m
}
