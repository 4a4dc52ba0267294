//! Certification pipeline: replays the constructive bounding argument on an
//! arbitrary connected input graph and records every intermediate object and
//! inequality in a [`Certificate`].
//!
//! Three variants share one skeleton. Each builds a packing (of vertices or
//! edges), grows a spanning tree around it, concentrates unit vertex weights
//! onto the packing, contracts the tree through a graph power restricted to
//! the packing, and compares the weighted average distances of the stages.
//! Every comparison is an exact rational check; any failure falsifies either
//! the implementation or the bound, so the structural audits return hard
//! errors rather than flags.
//!
//! Tie-breaking is lowest-index everywhere, so a run is a pure function of
//! the input graph.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::bounds::{evaluate_bound, BoundParams, BoundVariant};
use crate::error::{Error, Result};
use crate::graph::{Dist, EdgeRef, Graph};
use crate::metrics::{average_distance, weighted_average_distance, wiener_index, WeightFunction};
use crate::ratio::{choose2, decimal_str, exact_str, int, Rational};
use num::Zero;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TheoremVariant {
    Thm4,
    Thm5,
    Thm6,
}

impl TheoremVariant {
    pub const ALL: [TheoremVariant; 3] =
        [TheoremVariant::Thm4, TheoremVariant::Thm5, TheoremVariant::Thm6];

    pub fn name(&self) -> &'static str {
        match self {
            TheoremVariant::Thm4 => "thm4",
            TheoremVariant::Thm5 => "thm5",
            TheoremVariant::Thm6 => "thm6",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.iter().copied().find(|v| v.name() == s)
    }

    /// The upper bound this variant certifies.
    pub fn bound_variant(&self) -> BoundVariant {
        match self {
            TheoremVariant::Thm4 => BoundVariant::Thm4Upper,
            TheoremVariant::Thm5 => BoundVariant::Thm5Upper,
            TheoremVariant::Thm6 => BoundVariant::Thm6Upper,
        }
    }
}

/// The packing at the root of a pipeline run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Packing {
    Vertices(Vec<usize>),
    Edges(Vec<EdgeRef>),
}

impl Packing {
    pub fn len(&self) -> usize {
        match self {
            Packing::Vertices(v) => v.len(),
            Packing::Edges(e) => e.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// One evaluated inequality (or identity) of a certificate.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
}

impl Check {
    fn le(name: &str, lhs: &Rational, rhs: &Rational) -> Check {
        Check {
            name: name.into(),
            lhs: exact_str(lhs),
            rhs: exact_str(rhs),
            holds: lhs <= rhs,
        }
    }

    fn ge(name: &str, lhs: &Rational, rhs: &Rational) -> Check {
        Check {
            name: name.into(),
            lhs: exact_str(lhs),
            rhs: exact_str(rhs),
            holds: lhs >= rhs,
        }
    }

    fn eq(name: &str, lhs: &Rational, rhs: &Rational) -> Check {
        Check {
            name: name.into(),
            lhs: exact_str(lhs),
            rhs: exact_str(rhs),
            holds: lhs == rhs,
        }
    }
}

/// Exact quantities measured along one run. `mu_cbar_l` only exists for the
/// matching variant, which routes the weights through a line graph.
#[derive(Clone, Debug, Serialize)]
pub struct Quantities {
    pub mu_g: String,
    pub mu_g_decimal: String,
    pub mu_t: String,
    pub mu_c_t: String,
    pub mu_cbar_l: Option<String>,
    pub mu_c_h: String,
    pub mu_cprime_h: String,
    pub hub_distance_sum: String,
    pub upper_bound: String,
    pub upper_bound_decimal: String,
}

/// Full transcript of one pipeline run.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub variant: TheoremVariant,
    pub n: usize,
    pub min_deg: usize,
    pub max_deg: usize,
    pub packing: Packing,
    pub k: usize,
    pub tree_edges: Vec<(usize, usize)>,
    /// Weights on the tree vertices (vertex variants) or on the line-graph
    /// vertices (matching variant); support lies in the packing.
    pub weights_c: WeightFunction,
    /// Reduced weights on the contracted graph's vertices.
    pub weights_cprime: WeightFunction,
    /// The contracted graph `H` and, per `H`-vertex, the original center.
    pub contracted: Graph,
    pub contracted_centers: Packing,
    /// Matching variant only: the edge represented by each line-graph vertex.
    pub line_graph_vertices: Option<Vec<EdgeRef>>,
    pub quantities: Quantities,
    pub checks: Vec<Check>,
}

impl Certificate {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn failed_checks(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.holds).collect()
    }

    /// Deterministic JSON rendering; byte-identical across runs on the same
    /// input.
    pub fn to_json(&self) -> String {
        let packing = match &self.packing {
            Packing::Vertices(v) => serde_json::json!({ "kind": "vertices", "items": v }),
            Packing::Edges(e) => serde_json::json!({
                "kind": "edges",
                "items": e.iter().map(|e| e.endpoints()).collect::<Vec<_>>(),
            }),
        };
        let centers = match &self.contracted_centers {
            Packing::Vertices(v) => serde_json::json!(v),
            Packing::Edges(e) => {
                serde_json::json!(e.iter().map(|e| e.endpoints()).collect::<Vec<_>>())
            }
        };
        let weights = |w: &WeightFunction| -> Vec<serde_json::Value> {
            w.support()
                .into_iter()
                .map(|v| serde_json::json!({ "index": v, "value": exact_str(w.get(v)) }))
                .collect()
        };
        let value = serde_json::json!({
            "variant": self.variant.name(),
            "n": self.n,
            "min_degree": self.min_deg,
            "max_degree": self.max_deg,
            "packing": packing,
            "k": self.k,
            "tree_edges": self.tree_edges,
            "weights_c": weights(&self.weights_c),
            "weights_cprime": weights(&self.weights_cprime),
            "line_graph": self.line_graph_vertices.as_ref().map(|edges| {
                serde_json::json!({
                    "vertices": edges.iter().map(|e| e.endpoints()).collect::<Vec<_>>(),
                })
            }),
            "contracted": {
                "n": self.contracted.order(),
                "edges": self.contracted.edge_pairs(),
                "centers": centers,
            },
            "quantities": self.quantities,
            "checks": self.checks,
            "all_hold": self.all_hold(),
        });
        serde_json::to_string_pretty(&value).expect("certificate serialization cannot fail")
    }
}

/// Pipeline knobs. Tie-breaking is fixed to lowest-index. With
/// `record_internals` off, the certificate drops the bulky transcript parts
/// (tree edges, weight tables, line-graph map); the quantities and checks
/// always stay.
#[derive(Clone, Copy, Debug)]
pub struct PipelineOptions {
    pub record_internals: bool,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        PipelineOptions {
            record_internals: true,
        }
    }
}

fn internal(msg: impl Into<String>) -> Error {
    Error::InternalAudit(msg.into())
}

/// Multi-source BFS distances from a vertex set.
fn multi_source_distances(g: &Graph, sources: &[usize]) -> Vec<Dist> {
    let mut dist = vec![Dist::Inf; g.order()];
    let mut queue = std::collections::VecDeque::new();
    for &s in sources {
        if dist[s] != Dist::Finite(0) {
            dist[s] = Dist::Finite(0);
            queue.push_back(s);
        }
    }
    while let Some(u) = queue.pop_front() {
        let du = dist[u].expect_finite();
        for &v in g.neighbors(u) {
            if dist[v] == Dist::Inf {
                dist[v] = Dist::Finite(du + 1);
                queue.push_back(v);
            }
        }
    }
    dist
}

fn lowest_max_degree_vertex(g: &Graph) -> usize {
    let max = (0..g.order()).map(|v| g.degree(v)).max().unwrap();
    (0..g.order()).find(|&v| g.degree(v) == max).unwrap()
}

/// Greedy vertex packing: start at the lowest-indexed maximum-degree vertex
/// and repeatedly add the lowest-indexed vertex at distance exactly
/// `spacing` from the current set. On return every vertex lies within
/// `spacing - 1` of the set and members are pairwise at least `spacing`
/// apart.
fn greedy_vertex_packing(g: &Graph, spacing: u32) -> Result<Vec<usize>> {
    if g.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut packing = vec![lowest_max_degree_vertex(g)];
    loop {
        let dist = multi_source_distances(g, &packing);
        match (0..g.order()).find(|&v| dist[v] == Dist::Finite(spacing)) {
            Some(v) => packing.push(v),
            None => {
                if let Some(far) = (0..g.order()).find(|&v| dist[v] > Dist::Finite(spacing)) {
                    return Err(internal(format!(
                        "vertex {far} beyond distance {spacing} but none at exactly {spacing}"
                    )));
                }
                return Ok(packing);
            }
        }
    }
}

/// Packing at pairwise distance >= 3, covering radius 2.
pub fn greedy_packing(g: &Graph) -> Result<Vec<usize>> {
    greedy_vertex_packing(g, 3)
}

/// Packing at pairwise distance >= 5, covering radius 4.
pub fn greedy_packing_c4(g: &Graph) -> Result<Vec<usize>> {
    greedy_vertex_packing(g, 5)
}

/// Greedy matching: the lexicographically least edge at a maximum-degree
/// vertex, extended by the lexicographically least edge at edge-distance
/// exactly 3 from the set. On return every edge of the graph is within
/// edge-distance 2 and members are pairwise at edge-distance >= 3.
pub fn greedy_edge_packing(g: &Graph) -> Result<Vec<EdgeRef>> {
    if g.edge_count() == 0 {
        return Err(Error::EdgelessGraph);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let max_deg = (0..g.order()).map(|v| g.degree(v)).max().unwrap();
    let first = g
        .edges()
        .find(|e| g.degree(e.u()) == max_deg || g.degree(e.v()) == max_deg)
        .ok_or_else(|| internal("no edge at a maximum-degree vertex"))?;
    let mut matching = vec![first];
    loop {
        // distance from an edge to the matching = min over its endpoints of
        // the vertex distance to the matching's vertex set
        let sources: Vec<usize> = matching
            .iter()
            .flat_map(|e| [e.u(), e.v()])
            .collect();
        let dist = multi_source_distances(g, &sources);
        let edge_dist = |e: &EdgeRef| dist[e.u()].min(dist[e.v()]);
        match g.edges().find(|e| edge_dist(e) == Dist::Finite(3)) {
            Some(e) => matching.push(e),
            None => {
                if let Some(far) = g.edges().find(|e| edge_dist(e) > Dist::Finite(3)) {
                    return Err(internal(format!(
                        "edge {far} beyond distance 3 but none at exactly 3"
                    )));
                }
                return Ok(matching);
            }
        }
    }
}

/// Union-find over tree edges so cycle insertion is caught immediately.
struct TreeBuilder {
    parent: Vec<usize>,
    edges: Vec<(usize, usize)>,
    in_tree: Vec<bool>,
}

impl TreeBuilder {
    fn new(n: usize) -> Self {
        TreeBuilder {
            parent: (0..n).collect(),
            edges: Vec::with_capacity(n.saturating_sub(1)),
            in_tree: vec![false; n],
        }
    }

    fn root(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let (ru, rv) = (self.root(u), self.root(v));
        if ru == rv {
            return Err(internal(format!("edge ({u}, {v}) would close a cycle")));
        }
        self.parent[ru] = rv;
        self.edges.push((u.min(v), u.max(v)));
        self.in_tree[u] = true;
        self.in_tree[v] = true;
        Ok(())
    }

    fn contains(&self, v: usize) -> bool {
        self.in_tree[v]
    }

    fn into_graph(self, n: usize) -> Result<Graph> {
        if self.edges.len() + 1 != n {
            return Err(internal(format!(
                "spanning tree has {} edges for order {n}",
                self.edges.len()
            )));
        }
        Graph::new(n, &self.edges)
    }
}

/// Grows the variant's spanning tree around the packing.
///
/// Vertex variants: a distance-preserving tree on each ball around a center
/// (radius 1 or 2), one connector edge from each later ball to an earlier
/// one, then the leftovers. The matching variant uses double-stars around
/// the matched edges. Leftovers attach along multi-source BFS parents so
/// distances to the packing survive into the tree; the distance-3 variant
/// only needs its radius-2 coverage, which plain attachment already grants.
pub fn build_spanning_tree(g: &Graph, packing: &Packing, variant: TheoremVariant) -> Result<Graph> {
    let n = g.order();
    let mut tb = TreeBuilder::new(n);
    // ball_of[v] = which packing member claimed v, for connector bookkeeping
    let mut ball_of = vec![usize::MAX; n];

    match (variant, packing) {
        (TheoremVariant::Thm4, Packing::Vertices(centers)) => {
            for (i, &c) in centers.iter().enumerate() {
                ball_of[c] = i;
                for &w in g.neighbors(c) {
                    if ball_of[w] != usize::MAX {
                        return Err(internal(format!(
                            "closed neighborhoods of centers {} and {c} overlap at {w}",
                            centers[ball_of[w]]
                        )));
                    }
                    ball_of[w] = i;
                    tb.add_edge(c, w)?;
                }
            }
        }
        (TheoremVariant::Thm6, Packing::Vertices(centers)) => {
            for (i, &c) in centers.iter().enumerate() {
                let dist = g.bfs_distances(c);
                let mut order: Vec<usize> = (0..n)
                    .filter(|&v| dist[v] <= Dist::Finite(2))
                    .collect();
                order.sort_by_key(|&v| (dist[v], v));
                for &v in &order {
                    if ball_of[v] != usize::MAX {
                        return Err(internal(format!(
                            "second neighborhoods of centers {} and {c} overlap at {v}",
                            centers[ball_of[v]]
                        )));
                    }
                    ball_of[v] = i;
                    if v != c {
                        let d = dist[v].expect_finite();
                        let parent = g
                            .neighbors(v)
                            .iter()
                            .copied()
                            .find(|&w| dist[w] == Dist::Finite(d - 1) && ball_of[w] == i)
                            .ok_or_else(|| internal("no distance-preserving parent in ball"))?;
                        tb.add_edge(parent, v)?;
                    }
                }
            }
        }
        (TheoremVariant::Thm5, Packing::Edges(matching)) => {
            for (i, e) in matching.iter().enumerate() {
                for x in [e.u(), e.v()] {
                    if ball_of[x] != usize::MAX {
                        return Err(internal(format!("double-stars overlap at endpoint {x}")));
                    }
                    ball_of[x] = i;
                }
                tb.add_edge(e.u(), e.v())?;
                for x in [e.u(), e.v()] {
                    for &w in g.neighbors(x) {
                        if w == e.u() || w == e.v() {
                            continue;
                        }
                        if ball_of[w] == i {
                            // a common neighbor of the matched endpoints
                            // would be a triangle
                            return Err(internal(format!("double-star of edge {e} is not a tree")));
                        }
                        if ball_of[w] != usize::MAX {
                            return Err(internal(format!("double-stars overlap at {w}")));
                        }
                        ball_of[w] = i;
                        tb.add_edge(x, w)?;
                    }
                }
            }
        }
        _ => return Err(internal("packing kind does not match the variant")),
    }

    // connector edge from each later ball to the lowest-indexed edge into an
    // earlier ball
    let claimed = ball_of.clone();
    for i in 1..packing.len() {
        let mut connector = None;
        'scan: for x in 0..n {
            if claimed[x] != i {
                continue;
            }
            for &y in g.neighbors(x) {
                if claimed[y] != usize::MAX && claimed[y] < i {
                    connector = Some((x, y));
                    break 'scan;
                }
            }
        }
        let (x, y) = connector
            .ok_or_else(|| internal(format!("no connector edge from ball {i} to earlier balls")))?;
        tb.add_edge(x, y)?;
    }

    // leftover vertices: attach in multi-source BFS layer order so the
    // distance to the packing is preserved in the tree
    let sources: Vec<usize> = match packing {
        Packing::Vertices(centers) => centers.clone(),
        Packing::Edges(matching) => matching.iter().flat_map(|e| [e.u(), e.v()]).collect(),
    };
    let dist = multi_source_distances(g, &sources);
    let mut leftovers: Vec<usize> = (0..n).filter(|&v| !tb.contains(v)).collect();
    leftovers.sort_by_key(|&v| (dist[v], v));
    for &v in &leftovers {
        let d = dist[v].expect_finite();
        if d == 0 {
            return Err(internal(format!("vertex {v} in the packing but not in a ball")));
        }
        let parent = g
            .neighbors(v)
            .iter()
            .copied()
            .find(|&w| dist[w] == Dist::Finite(d - 1) && tb.contains(w))
            .ok_or_else(|| internal(format!("no attachment for leftover vertex {v}")))?;
        tb.add_edge(parent, v)?;
    }

    let tree = tb.into_graph(n)?;
    // tree edges must come from the graph
    for (u, v) in tree.edge_pairs() {
        if !g.has_edge(u, v) {
            return Err(internal(format!("tree edge ({u}, {v}) is not a graph edge")));
        }
    }
    // the matching/distance-5 variants promise exact distance preservation
    if matches!(variant, TheoremVariant::Thm5 | TheoremVariant::Thm6) {
        let tree_dist = multi_source_distances(&tree, &sources);
        for v in 0..n {
            if tree_dist[v] != dist[v] {
                return Err(internal(format!(
                    "tree distance to the packing not preserved at {v}: {} vs {}",
                    tree_dist[v], dist[v]
                )));
            }
        }
    }
    Ok(tree)
}

/// Moves each vertex's unit weight to its nearest center in the tree,
/// breaking ties toward the lowest-indexed center.
pub fn assign_weights(tree: &Graph, centers: &[usize]) -> Result<WeightFunction> {
    let n = tree.order();
    let mut sorted = centers.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let mut nearest = vec![usize::MAX; n];
    let mut best = vec![Dist::Inf; n];
    for &c in &sorted {
        for (v, d) in tree.bfs_distances(c).into_iter().enumerate() {
            if d < best[v] {
                best[v] = d;
                nearest[v] = c;
            }
        }
    }
    let mut counts = vec![0u64; n];
    for v in 0..n {
        if best[v] == Dist::Inf {
            return Err(internal(format!("vertex {v} cannot reach any center")));
        }
        counts[nearest[v]] += 1;
    }
    let weights = WeightFunction::from_integers(&counts);
    if weights.total() != &int(n as i64) {
        return Err(internal("weights do not sum to the order"));
    }
    Ok(weights)
}

/// Weight of each line-graph vertex: the endpoint weights summed on matched
/// edges, zero elsewhere.
pub fn line_weights(
    vertex_weights: &WeightFunction,
    matching: &[EdgeRef],
    line_vertices: &[EdgeRef],
) -> WeightFunction {
    let matched: std::collections::BTreeSet<EdgeRef> = matching.iter().copied().collect();
    let weights = line_vertices
        .iter()
        .map(|e| {
            if matched.contains(e) {
                vertex_weights.get(e.u()) + vertex_weights.get(e.v())
            } else {
                Rational::zero()
            }
        })
        .collect();
    WeightFunction::new(weights).expect("sums of nonnegative weights are nonnegative")
}

/// Contracts: the `power`-th graph power restricted to `centers`. Errors if
/// the restriction is disconnected, which the packing construction rules
/// out.
pub fn contract(base: &Graph, centers: &[usize], power: usize) -> Result<(Graph, Vec<usize>)> {
    let powered = base.power(power)?;
    let (h, map) = powered.induced_subgraph(centers)?;
    if !h.is_connected() {
        return Err(internal("contracted graph is disconnected"));
    }
    Ok((h, map))
}

struct VariantSpec {
    /// pairwise distance the packing must honor
    spacing: u32,
    /// weight shift allowance: 2 * covering radius
    move_slack: i64,
    /// contraction power and the matching stretch factor
    power: usize,
    /// minimum weight of the hub / of the other centers
    hub_floor: i64,
    center_floor: i64,
}

/// Runs the pipeline and certifies every inequality of the variant's
/// bounding argument on `g`.
pub fn certify(g: &Graph, variant: TheoremVariant) -> Result<Certificate> {
    certify_with(g, variant, PipelineOptions::default())
}

pub fn certify_with(
    g: &Graph,
    variant: TheoremVariant,
    options: PipelineOptions,
) -> Result<Certificate> {
    let mut cert = run_pipeline(g, variant)?;
    if !options.record_internals {
        cert.tree_edges.clear();
        cert.weights_c = WeightFunction::unit(0);
        cert.weights_cprime = WeightFunction::unit(0);
        cert.line_graph_vertices = None;
    }
    Ok(cert)
}

fn run_pipeline(g: &Graph, variant: TheoremVariant) -> Result<Certificate> {
    if !g.is_connected() {
        return Err(Error::HypothesisViolation("graph must be connected".into()));
    }
    let stats = g.degree_stats()?;
    if stats.min < 3 {
        return Err(Error::HypothesisViolation(format!(
            "minimum degree {} is below 3",
            stats.min
        )));
    }
    match variant {
        TheoremVariant::Thm5 => {
            if !g.is_triangle_free() {
                return Err(Error::HypothesisViolation(
                    "graph must be triangle-free".into(),
                ));
            }
        }
        TheoremVariant::Thm6 => {
            if !g.is_c4_free() {
                return Err(Error::HypothesisViolation(
                    "graph must contain no 4-cycle".into(),
                ));
            }
        }
        TheoremVariant::Thm4 => {}
    }

    let n = g.order();
    let (dmin, dmax) = (stats.min as i64, stats.max as i64);
    let params = BoundParams::new(n as u64, stats.min as u64, stats.max as u64)?;
    let eps_min = params.epsilon_min() as i64;
    let eps_max = params.epsilon_max() as i64;

    let spec = match variant {
        TheoremVariant::Thm4 => VariantSpec {
            spacing: 3,
            move_slack: 4,
            power: 3,
            hub_floor: dmax + 1,
            center_floor: dmin + 1,
        },
        TheoremVariant::Thm5 => VariantSpec {
            spacing: 3,
            move_slack: 6,
            power: 4,
            hub_floor: dmax + dmin,
            center_floor: 2 * dmin,
        },
        TheoremVariant::Thm6 => VariantSpec {
            spacing: 5,
            move_slack: 8,
            power: 5,
            hub_floor: eps_max,
            center_floor: eps_min,
        },
    };
    // reduced total weight after shrinking the hub
    let reduced_total = match variant {
        TheoremVariant::Thm4 | TheoremVariant::Thm5 => int(n as i64 - dmax + dmin),
        TheoremVariant::Thm6 => int(n as i64 - eps_max + eps_min),
    };
    let hub_excess = match variant {
        TheoremVariant::Thm4 | TheoremVariant::Thm5 => int(dmax - dmin),
        TheoremVariant::Thm6 => int(eps_max - eps_min),
    };
    // per-center weight unit in the packing-size bound
    let weight_unit = match variant {
        TheoremVariant::Thm4 => int(dmin + 1),
        TheoremVariant::Thm5 => int(2 * dmin),
        TheoremVariant::Thm6 => int(eps_min),
    };

    // stage 1: packing
    let packing = match variant {
        TheoremVariant::Thm4 | TheoremVariant::Thm6 => {
            Packing::Vertices(greedy_vertex_packing(g, spec.spacing)?)
        }
        TheoremVariant::Thm5 => Packing::Edges(greedy_edge_packing(g)?),
    };
    let k = packing.len();
    audit_packing(g, &packing, spec.spacing)?;

    // stage 2: spanning tree
    let tree = build_spanning_tree(g, &packing, variant)?;

    // stage 3: weights concentrated on the packing
    let center_vertices: Vec<usize> = match &packing {
        Packing::Vertices(v) => v.clone(),
        Packing::Edges(m) => m.iter().flat_map(|e| [e.u(), e.v()]).collect(),
    };
    let tree_weights = assign_weights(&tree, &center_vertices)?;

    // stage 4: contraction (through the line graph for the matching variant)
    let (c_weights, base_for_h, h_centers, line_vertices, packing_members):
        (WeightFunction, Graph, Vec<usize>, Option<Vec<EdgeRef>>, Packing) = match &packing {
        Packing::Vertices(centers) => (
            tree_weights.clone(),
            tree.clone(),
            centers.clone(),
            None,
            packing.clone(),
        ),
        Packing::Edges(matching) => {
            let (line, line_edges) = tree.line_graph()?;
            let cbar = line_weights(&tree_weights, matching, &line_edges);
            let index_of: BTreeMap<EdgeRef, usize> = line_edges
                .iter()
                .enumerate()
                .map(|(i, e)| (*e, i))
                .collect();
            let centers: Vec<usize> = matching
                .iter()
                .map(|e| {
                    index_of
                        .get(e)
                        .copied()
                        .ok_or_else(|| internal(format!("matched edge {e} missing from the tree")))
                })
                .collect::<Result<_>>()?;
            (cbar, line, centers, Some(line_edges), packing.clone())
        }
    };
    let (h, h_map) = contract(&base_for_h, &h_centers, spec.power)?;
    // packing members in H-vertex order
    let contracted_centers = match (&packing_members, &line_vertices) {
        (Packing::Vertices(_), _) => Packing::Vertices(h_map.clone()),
        (Packing::Edges(_), Some(line_edges)) => {
            Packing::Edges(h_map.iter().map(|&i| line_edges[i]).collect())
        }
        _ => unreachable!(),
    };

    // weights carried onto H, and the reduced version with the hub shrunk
    let h_weights = WeightFunction::new(
        h_map.iter().map(|&orig| c_weights.get(orig).clone()).collect(),
    )
    .expect("restriction of nonnegative weights");
    let hub_new = h_map
        .iter()
        .position(|&orig| {
            orig == match &packing {
                Packing::Vertices(v) => v[0],
                Packing::Edges(_) => h_centers[0],
            }
        })
        .ok_or_else(|| internal("hub missing from contracted graph"))?;
    let mut reduced = h_weights.weights().to_vec();
    reduced[hub_new] = &reduced[hub_new] - &hub_excess;
    if reduced[hub_new] < Rational::zero() {
        return Err(internal("hub weight fell below the reduction amount"));
    }
    let cprime = WeightFunction::new(reduced).expect("checked nonnegative");
    if cprime.total() != &reduced_total {
        return Err(internal(format!(
            "reduced weights sum to {}, expected {}",
            exact_str(cprime.total()),
            exact_str(&reduced_total)
        )));
    }

    // quantities
    let mu_g = average_distance(g)?;
    let mu_t = average_distance(&tree)?;
    let mu_c_t = weighted_average_distance(&tree, &tree_weights)?;
    let mu_cbar_l = match (&packing, &line_vertices) {
        (Packing::Edges(_), Some(_)) => Some(weighted_average_distance(&base_for_h, &c_weights)?),
        _ => None,
    };
    let mu_c_h = weighted_average_distance(&h, &h_weights)?;
    let mu_cprime_h = weighted_average_distance(&h, &cprime)?;
    let hub_dist = h.bfs_distances(hub_new);
    let hub_distance_sum: Rational = (0..h.order())
        .filter(|&v| v != hub_new)
        .map(|v| h_weights.get(v) * int(i64::from(hub_dist[v].expect_finite())))
        .sum();
    let bound = evaluate_bound(variant.bound_variant(), &params);

    // the inequality chain
    let mut checks = Vec::new();
    checks.push(Check::le("tree_dominates", &mu_g, &mu_t));
    checks.push(Check::le(
        "packing_size",
        &int(k as i64),
        &(&reduced_total / &weight_unit),
    ));
    let hub_weight = match &packing {
        Packing::Vertices(v) => tree_weights.get(v[0]).clone(),
        Packing::Edges(_) => c_weights.get(h_centers[0]).clone(),
    };
    checks.push(Check::ge("hub_weight", &hub_weight, &int(spec.hub_floor)));
    if k >= 2 {
        let min_center = h_map
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != hub_new)
            .map(|(i, _)| h_weights.get(i))
            .min()
            .expect("k >= 2 leaves a non-hub center")
            .clone();
        checks.push(Check::ge(
            "center_weights",
            &min_center,
            &int(spec.center_floor),
        ));
    }
    checks.push(Check::le(
        "weight_move_slack",
        &mu_t,
        &(&mu_c_t + int(spec.move_slack)),
    ));
    if let Some(mu_l) = &mu_cbar_l {
        checks.push(Check::le("line_graph_shift", &mu_c_t, &(mu_l + int(1))));
        checks.push(Check::le(
            "contraction_stretch",
            mu_l,
            &(int(spec.power as i64) * &mu_c_h),
        ));
    } else {
        checks.push(Check::le(
            "contraction_stretch",
            &mu_c_t,
            &(int(spec.power as i64) * &mu_c_h),
        ));
    }
    // exact decomposition: mu_c(H) = N(N-1)/(n(n-1)) mu_c'(H)
    //                                + 2*excess/(n(n-1)) * hub_distance_sum
    let nn = int(n as i64);
    let pairs2 = &nn * (&nn - int(1));
    let rhs = &reduced_total * (&reduced_total - int(1)) / &pairs2 * &mu_cprime_h
        + int(2) * &hub_excess / &pairs2 * &hub_distance_sum;
    checks.push(Check::eq("weight_decomposition_identity", &mu_c_h, &rhs));
    checks.push(Check::le(
        "hub_distance_sum",
        &hub_distance_sum,
        &(&reduced_total * (&reduced_total - int(1)) / (int(2) * &weight_unit)),
    ));
    let reduced_mean_cap = match variant {
        TheoremVariant::Thm4 => (&reduced_total + int(dmin + 1)) / int(3 * (dmin + 1)),
        TheoremVariant::Thm5 => (&reduced_total + int(2 * dmin)) / int(6 * dmin),
        TheoremVariant::Thm6 => (&reduced_total + int(eps_min)) / int(3 * eps_min),
    };
    checks.push(Check::le(
        "reduced_mean_bound",
        &mu_cprime_h,
        &reduced_mean_cap,
    ));
    checks.push(Check::le("final_bound", &mu_g, &bound.value));

    // cross-check against the unweighted Wiener index route
    let w = Rational::from_integer(wiener_index(g)?);
    checks.push(Check::le(
        "wiener_consistency",
        &w,
        &(&bound.value * choose2(&nn)),
    ));

    Ok(Certificate {
        variant,
        n,
        min_deg: stats.min,
        max_deg: stats.max,
        packing,
        k,
        tree_edges: tree.edge_pairs(),
        weights_c: c_weights,
        weights_cprime: cprime,
        contracted: h,
        contracted_centers,
        line_graph_vertices: line_vertices,
        quantities: Quantities {
            mu_g: exact_str(&mu_g),
            mu_g_decimal: decimal_str(&mu_g),
            mu_t: exact_str(&mu_t),
            mu_c_t: exact_str(&mu_c_t),
            mu_cbar_l: mu_cbar_l.as_ref().map(exact_str),
            mu_c_h: exact_str(&mu_c_h),
            mu_cprime_h: exact_str(&mu_cprime_h),
            hub_distance_sum: exact_str(&hub_distance_sum),
            upper_bound: exact_str(&bound.value),
            upper_bound_decimal: decimal_str(&bound.value),
        },
        checks,
    })
}

/// Pairwise spacing and covering radius of the packing, asserted on the
/// actual graph.
fn audit_packing(g: &Graph, packing: &Packing, spacing: u32) -> Result<()> {
    match packing {
        Packing::Vertices(centers) => {
            for (i, &a) in centers.iter().enumerate() {
                let dist = g.bfs_distances(a);
                for &b in &centers[i + 1..] {
                    if dist[b] < Dist::Finite(spacing) {
                        return Err(internal(format!(
                            "packing members {a} and {b} are at distance {}",
                            dist[b]
                        )));
                    }
                }
            }
            let dist = multi_source_distances(g, centers);
            if let Some(v) = (0..g.order()).find(|&v| dist[v] > Dist::Finite(spacing - 1)) {
                return Err(internal(format!(
                    "vertex {v} not covered within radius {}",
                    spacing - 1
                )));
            }
        }
        Packing::Edges(matching) => {
            for (i, &a) in matching.iter().enumerate() {
                for &b in &matching[i + 1..] {
                    let d = g.edge_distance(a, b)?;
                    if d < Dist::Finite(3) {
                        return Err(internal(format!(
                            "matched edges {a} and {b} are at distance {d}"
                        )));
                    }
                }
            }
            let sources: Vec<usize> = matching.iter().flat_map(|e| [e.u(), e.v()]).collect();
            let dist = multi_source_distances(g, &sources);
            for e in g.edges() {
                if dist[e.u()].min(dist[e.v()]) > Dist::Finite(2) {
                    return Err(internal(format!("edge {e} not covered within distance 2")));
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{
        bipartite_chain, c4_chain, clique_chain, complete, complete_bipartite, cycle, path,
    };

    #[test]
    fn greedy_packing_examples() {
        let p10 = path(10).unwrap();
        assert_eq!(greedy_packing(&p10).unwrap(), vec![1, 4, 7]);

        let k5 = complete(5).unwrap();
        assert_eq!(greedy_packing(&k5).unwrap(), vec![0]);

        let c7 = cycle(7).unwrap();
        assert_eq!(greedy_packing(&c7).unwrap(), vec![0, 3]);

        let disconnected = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(greedy_packing(&disconnected).is_err());
    }

    #[test]
    fn greedy_edge_packing_examples() {
        let p8 = path(8).unwrap();
        let m = greedy_edge_packing(&p8).unwrap();
        assert_eq!(m, vec![EdgeRef::new(0, 1), EdgeRef::new(4, 5)]);

        let k33 = complete_bipartite(3, 3).unwrap();
        assert_eq!(greedy_edge_packing(&k33).unwrap().len(), 1);

        let c9 = cycle(9).unwrap();
        let m = greedy_edge_packing(&c9).unwrap();
        assert_eq!(m.len(), 2);
        assert_eq!(p8.edge_distance(m[0], m[1]).unwrap(), Dist::Finite(3));
    }

    #[test]
    fn greedy_packing_c4_examples() {
        let p12 = path(12).unwrap();
        assert_eq!(greedy_packing_c4(&p12).unwrap(), vec![1, 6, 11]);

        let k5 = complete(5).unwrap();
        assert_eq!(greedy_packing_c4(&k5).unwrap(), vec![0]);

        let (g, _) = c4_chain(1, 2, 4).unwrap();
        let a = greedy_packing_c4(&g).unwrap();
        assert_eq!(a.len(), 2);
        let d = g.bfs_distances(a[0])[a[1]];
        assert!(d >= Dist::Finite(5));
    }

    #[test]
    fn spanning_tree_examples() {
        // a path is its own spanning tree
        let p7 = path(7).unwrap();
        let a = greedy_packing(&p7).unwrap();
        let t = build_spanning_tree(&p7, &Packing::Vertices(a), TheoremVariant::Thm4).unwrap();
        assert_eq!(t, p7);

        // the star at the single center of a complete graph
        let k5 = complete(5).unwrap();
        let t =
            build_spanning_tree(&k5, &Packing::Vertices(vec![0]), TheoremVariant::Thm4).unwrap();
        assert_eq!(t.edge_pairs(), vec![(0, 1), (0, 2), (0, 3), (0, 4)]);

        // cycle: 6 edges, spanning, subgraph
        let c7 = cycle(7).unwrap();
        let a = greedy_packing(&c7).unwrap();
        let t = build_spanning_tree(&c7, &Packing::Vertices(a), TheoremVariant::Thm4).unwrap();
        assert_eq!(t.edge_count(), 6);
        assert!(t.is_connected());
        for (u, v) in t.edge_pairs() {
            assert!(c7.has_edge(u, v));
        }
    }

    #[test]
    fn assign_weights_examples() {
        let k5 = complete(5).unwrap();
        let t =
            build_spanning_tree(&k5, &Packing::Vertices(vec![0]), TheoremVariant::Thm4).unwrap();
        let w = assign_weights(&t, &[0]).unwrap();
        assert_eq!(w.get(0), &int(5));

        let p10 = path(10).unwrap();
        let w = assign_weights(&p10, &[1, 4, 7]).unwrap();
        let got: Vec<_> = (0..10).map(|v| w.get(v).clone()).collect();
        let want: Vec<_> = [0, 3, 0, 0, 3, 0, 0, 4, 0, 0]
            .iter()
            .map(|&x| int(x))
            .collect();
        assert_eq!(got, want);
        assert_eq!(w.total(), &int(10));
    }

    #[test]
    fn contract_examples() {
        let p10 = path(10).unwrap();
        let (h, map) = contract(&p10, &[1, 4, 7], 3).unwrap();
        assert_eq!(h.order(), 3);
        assert_eq!(h.edge_pairs(), vec![(0, 1), (1, 2)]); // P_3
        assert_eq!(map, vec![1, 4, 7]);

        let (h, _) = contract(&p10, &[3], 3).unwrap();
        assert_eq!((h.order(), h.edge_count()), (1, 0));

        // matching variant on P_8: line graph is P_7, matched edges sit at
        // line distance 4, so the contraction is K_2
        let p8 = path(8).unwrap();
        let m = greedy_edge_packing(&p8).unwrap();
        let t = build_spanning_tree(&p8, &Packing::Edges(m.clone()), TheoremVariant::Thm5).unwrap();
        let (l, line_edges) = t.line_graph().unwrap();
        let centers: Vec<usize> = m
            .iter()
            .map(|e| line_edges.iter().position(|x| x == e).unwrap())
            .collect();
        let (h, _) = contract(&l, &centers, 4).unwrap();
        assert_eq!((h.order(), h.edge_count()), (2, 1));
    }

    #[test]
    fn certify_rejects_hypothesis_violations() {
        let p4 = path(4).unwrap();
        assert!(matches!(
            certify(&p4, TheoremVariant::Thm4),
            Err(Error::HypothesisViolation(_))
        ));

        let k5 = complete(5).unwrap(); // triangles
        assert!(matches!(
            certify(&k5, TheoremVariant::Thm5),
            Err(Error::HypothesisViolation(_))
        ));

        let k44 = complete_bipartite(4, 4).unwrap(); // 4-cycles
        assert!(matches!(
            certify(&k44, TheoremVariant::Thm6),
            Err(Error::HypothesisViolation(_))
        ));

        let disconnected = Graph::new(8, &[(0, 1), (2, 3)]).unwrap();
        assert!(certify(&disconnected, TheoremVariant::Thm4).is_err());
    }

    #[test]
    fn certify_flagship_constructions() {
        let (g, _) = clique_chain(28, 8, 3).unwrap();
        let cert = certify(&g, TheoremVariant::Thm4).unwrap();
        assert!(cert.all_hold(), "failed: {:?}", cert.failed_checks());
        assert_eq!(cert.min_deg, 3);
        assert_eq!(cert.max_deg, 8);
        assert_eq!(cert.quantities.upper_bound, "4295/378");

        let (g, _) = bipartite_chain(20, 5, 3).unwrap();
        let cert = certify(&g, TheoremVariant::Thm5).unwrap();
        assert!(cert.all_hold(), "failed: {:?}", cert.failed_checks());
        assert!(cert.line_graph_vertices.is_some());

        let (g, _) = c4_chain(1, 2, 4).unwrap();
        let cert = certify(&g, TheoremVariant::Thm6).unwrap();
        assert!(cert.all_hold(), "failed: {:?}", cert.failed_checks());
    }

    #[test]
    fn certificates_are_deterministic() {
        let (g, _) = clique_chain(28, 8, 3).unwrap();
        let a = certify(&g, TheoremVariant::Thm4).unwrap().to_json();
        let b = certify(&g, TheoremVariant::Thm4).unwrap().to_json();
        assert_eq!(a, b);
    }

    #[test]
    fn summary_certificates_keep_the_checks() {
        let (g, _) = bipartite_chain(20, 5, 3).unwrap();
        let full = certify(&g, TheoremVariant::Thm5).unwrap();
        let slim = certify_with(
            &g,
            TheoremVariant::Thm5,
            PipelineOptions {
                record_internals: false,
            },
        )
        .unwrap();
        assert!(slim.tree_edges.is_empty());
        assert!(slim.line_graph_vertices.is_none());
        assert_eq!(
            serde_json::to_string(&slim.checks).unwrap(),
            serde_json::to_string(&full.checks).unwrap()
        );
        assert_eq!(slim.quantities.mu_g, full.quantities.mu_g);
    }

    #[test]
    fn certify_polarity_graph_directly() {
        // C4-free, min degree q >= 3, diameter 2: the packing degenerates
        let h = crate::constructions::polarity_graph(5).unwrap();
        let cert = certify(&h, TheoremVariant::Thm6).unwrap();
        assert_eq!(cert.k, 1);
        assert!(cert.all_hold(), "failed: {:?}", cert.failed_checks());
    }

    #[test]
    fn certify_complete_graph_trivial_packing() {
        // k = 1: every pairwise quantity on the packing degenerates to zero
        let k5 = complete(5).unwrap();
        let cert = certify(&k5, TheoremVariant::Thm4).unwrap();
        assert_eq!(cert.k, 1);
        assert!(cert.all_hold(), "failed: {:?}", cert.failed_checks());
    }
}
