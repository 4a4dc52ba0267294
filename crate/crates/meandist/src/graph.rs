//! Immutable simple undirected graphs with exact distance machinery,
//! structural predicates, and derived-graph constructors (induced subgraph,
//! power, line graph).
//!
//! Vertices are dense indices `0..n`. Neighbor lists are sorted ascending and
//! every operation iterates in ascending order, so downstream greedy
//! procedures are reproducible run to run.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// Exact unweighted distance; `Inf` marks an unreachable pair.
///
/// `Inf` is a sentinel, never a large number: callers that need a finite
/// value must go through [`Dist::finite`] or [`Dist::expect_finite`], so
/// arithmetic on an unreachable pair is a detected error.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Dist {
    Finite(u32),
    Inf,
}

impl Dist {
    pub fn is_finite(self) -> bool {
        matches!(self, Dist::Finite(_))
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Dist::Finite(d) => Some(d),
            Dist::Inf => None,
        }
    }

    /// Unwraps a finite distance. Panics on `Inf`; reaching an unreachable
    /// pair here is a bug in the caller, not a recoverable condition.
    pub fn expect_finite(self) -> u32 {
        match self {
            Dist::Finite(d) => d,
            Dist::Inf => panic!("distance is infinite (graph disconnected)"),
        }
    }
}

impl fmt::Display for Dist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dist::Finite(d) => write!(f, "{d}"),
            Dist::Inf => write!(f, "inf"),
        }
    }
}

/// Undirected edge with ordered endpoints `u() < v()`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeRef {
    u: usize,
    v: usize,
}

impl EdgeRef {
    /// Panics if `a == b`: a loop can never reference an edge.
    pub fn new(a: usize, b: usize) -> Self {
        assert!(a != b, "edge endpoints must differ, got ({a}, {b})");
        EdgeRef {
            u: a.min(b),
            v: a.max(b),
        }
    }

    pub fn u(self) -> usize {
        self.u
    }

    pub fn v(self) -> usize {
        self.v
    }

    pub fn endpoints(self) -> (usize, usize) {
        (self.u, self.v)
    }

    pub fn is_incident(self, x: usize) -> bool {
        self.u == x || self.v == x
    }
}

impl fmt::Display for EdgeRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.u, self.v)
    }
}

/// Minimum degree, maximum degree, and the full degree list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeStats {
    pub min: usize,
    pub max: usize,
    pub degrees: Vec<usize>,
}

/// Immutable simple undirected graph in adjacency-list form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Edges are deduplicated; vertices out
    /// of range and self-loops are rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange {
                        vertex: x,
                        order: n,
                    });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        let edge_count = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Ok(Graph { n, adj, edge_count })
    }

    /// Internal constructor from already sorted, symmetric, loop-free
    /// adjacency lists.
    pub(crate) fn from_adj(adj: Vec<Vec<usize>>) -> Self {
        let edge_count = adj.iter().map(Vec::len).sum::<usize>() / 2;
        let g = Graph {
            n: adj.len(),
            adj,
            edge_count,
        };
        debug_assert!(g.check_representation());
        g
    }

    fn check_representation(&self) -> bool {
        self.adj.iter().enumerate().all(|(u, list)| {
            list.windows(2).all(|w| w[0] < w[1])
                && list
                    .iter()
                    .all(|&v| v != u && v < self.n && self.adj[v].binary_search(&u).is_ok())
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Neighbors of `v`, sorted ascending.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges with `u < v`, ascending lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = EdgeRef> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .iter()
                .filter(move |&&v| v > u)
                .map(move |&v| EdgeRef::new(u, v))
        })
    }

    pub fn edge_pairs(&self) -> Vec<(usize, usize)> {
        self.edges().map(EdgeRef::endpoints).collect()
    }

    /// Exact shortest-path distances from `source` to every vertex.
    pub fn bfs_distances(&self, source: usize) -> Vec<Dist> {
        assert!(
            source < self.n,
            "source {source} out of range for order {}",
            self.n
        );
        let mut dist = vec![Dist::Inf; self.n];
        let mut queue = VecDeque::new();
        dist[source] = Dist::Finite(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].expect_finite();
            for &v in &self.adj[u] {
                if dist[v] == Dist::Inf {
                    dist[v] = Dist::Finite(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// All-pairs distances. Row `u` equals `bfs_distances(u)`; rows are
    /// independent, so callers may compute them concurrently on shared
    /// references.
    pub fn distance_matrix(&self) -> DistanceMatrix {
        let mut d = Vec::with_capacity(self.n * self.n);
        for u in 0..self.n {
            d.extend(self.bfs_distances(u));
        }
        DistanceMatrix { n: self.n, d }
    }

    pub fn degree_stats(&self) -> Result<DegreeStats> {
        if self.n == 0 {
            return Err(Error::EmptyGraph);
        }
        let degrees: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        let min = *degrees.iter().min().unwrap();
        let max = *degrees.iter().max().unwrap();
        Ok(DegreeStats { min, max, degrees })
    }

    /// True iff one BFS from vertex 0 reaches every vertex (`n <= 1` counts
    /// as connected).
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        self.bfs_distances(0).iter().all(|d| d.is_finite())
    }

    /// Subgraph induced by `vertices`, relabeled `0..k` preserving ascending
    /// order. Returns the graph together with the map from new index to old
    /// vertex.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let mut keep = vertices.to_vec();
        keep.sort_unstable();
        keep.dedup();
        if let Some(&bad) = keep.iter().find(|&&v| v >= self.n) {
            return Err(Error::VertexOutOfRange {
                vertex: bad,
                order: self.n,
            });
        }
        let mut new_of = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            new_of[v] = i;
        }
        let adj = keep
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter(|&&w| new_of[w] != usize::MAX)
                    .map(|&w| new_of[w])
                    .collect()
            })
            .collect();
        Ok((Graph::from_adj(adj), keep))
    }

    /// k-th power: edge `uv` iff `1 <= d(u,v) <= k`.
    pub fn power(&self, k: usize) -> Result<Graph> {
        if k == 0 {
            return Err(Error::InvalidParameters(
                "power exponent must be at least 1".into(),
            ));
        }
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        for (u, row) in adj.iter_mut().enumerate() {
            for (v, d) in self.bfs_distances(u).into_iter().enumerate() {
                if v != u {
                    if let Some(d) = d.finite() {
                        if d as usize <= k {
                            row.push(v);
                        }
                    }
                }
            }
        }
        Ok(Graph::from_adj(adj))
    }

    /// Line graph: one vertex per edge, adjacency iff the edges share an
    /// endpoint. Also returns the edge represented by each line-graph vertex.
    pub fn line_graph(&self) -> Result<(Graph, Vec<EdgeRef>)> {
        if self.edge_count == 0 {
            return Err(Error::EdgelessGraph);
        }
        let edges: Vec<EdgeRef> = self.edges().collect();
        let mut incident: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        for (i, e) in edges.iter().enumerate() {
            incident[e.u()].push(i);
            incident[e.v()].push(i);
        }
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); edges.len()];
        for list in &incident {
            for (a, &i) in list.iter().enumerate() {
                for &j in &list[a + 1..] {
                    adj[i].push(j);
                    adj[j].push(i);
                }
            }
        }
        for list in &mut adj {
            list.sort_unstable();
            // two distinct edges of a simple graph share at most one vertex
            debug_assert!(list.windows(2).all(|w| w[0] != w[1]));
        }
        Ok((Graph::from_adj(adj), edges))
    }

    /// Distance between two edges: the smallest distance over the four
    /// endpoint pairs. Zero iff the edges are equal or share a vertex.
    pub fn edge_distance(&self, e1: EdgeRef, e2: EdgeRef) -> Result<Dist> {
        for e in [e1, e2] {
            if !self.has_edge(e.u(), e.v()) {
                return Err(Error::NotAnEdge(e.u(), e.v()));
            }
        }
        let from_u = self.bfs_distances(e1.u());
        let from_v = self.bfs_distances(e1.v());
        Ok([
            from_u[e2.u()],
            from_u[e2.v()],
            from_v[e2.u()],
            from_v[e2.v()],
        ]
        .into_iter()
        .min()
        .unwrap())
    }

    /// True iff no edge has a common neighbor across its endpoints.
    pub fn is_triangle_free(&self) -> bool {
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if v > u && sorted_intersects(&self.adj[u], &self.adj[v]) {
                    return false;
                }
            }
        }
        true
    }

    /// True iff every vertex pair has at most one common neighbor. For
    /// subgraph exclusion this is equivalent to containing no 4-cycle.
    pub fn is_c4_free(&self) -> bool {
        let mut common = vec![0u32; self.n];
        for u in 0..self.n {
            let mut touched = Vec::new();
            for &w in &self.adj[u] {
                for &v in &self.adj[w] {
                    if v > u {
                        common[v] += 1;
                        if common[v] == 2 {
                            for &t in &touched {
                                common[t] = 0;
                            }
                            return false;
                        }
                        touched.push(v);
                    }
                }
            }
            for &t in &touched {
                common[t] = 0;
            }
        }
        true
    }

    pub fn structural_predicates(&self) -> (bool, bool) {
        (self.is_triangle_free(), self.is_c4_free())
    }

    /// The set `{u : d(v,u) <= 2}`, including `v` itself, sorted ascending.
    pub fn second_neighborhood(&self, v: usize) -> Vec<usize> {
        assert!(v < self.n, "vertex {v} out of range for order {}", self.n);
        self.bfs_distances(v)
            .into_iter()
            .enumerate()
            .filter(|&(_, d)| d <= Dist::Finite(2))
            .map(|(u, _)| u)
            .collect()
    }
}

fn sorted_intersects(a: &[usize], b: &[usize]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return true,
        }
    }
    false
}

/// All-pairs exact distance table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<Dist>,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> Dist {
        self.d[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[Dist] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    /// Largest finite entry; `None` for the empty graph.
    pub fn max_finite(&self) -> Option<u32> {
        self.d.iter().filter_map(|d| d.finite()).max()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::arb_graph;
    use proptest::prelude::*;

    fn p4() -> Graph {
        Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap()
    }

    fn c5() -> Graph {
        Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::new(n, &edges).unwrap()
    }

    #[test]
    fn build_small_graphs() {
        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(k2.edge_count(), 1);

        let p = p4();
        let stats = p.degree_stats().unwrap();
        assert_eq!(stats.degrees, vec![1, 2, 2, 1]);

        let c = c5();
        assert!(c.degree_stats().unwrap().degrees.iter().all(|&d| d == 2));
    }

    #[test]
    fn build_rejects_bad_input() {
        assert!(matches!(
            Graph::new(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, .. })
        ));
        assert!(matches!(Graph::new(3, &[(1, 1)]), Err(Error::SelfLoop(1))));
    }

    #[test]
    fn build_deduplicates_edges() {
        let g = Graph::new(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn bfs_examples() {
        assert_eq!(
            p4().bfs_distances(0),
            vec![
                Dist::Finite(0),
                Dist::Finite(1),
                Dist::Finite(2),
                Dist::Finite(3)
            ]
        );
        assert_eq!(
            c5().bfs_distances(0),
            vec![
                Dist::Finite(0),
                Dist::Finite(1),
                Dist::Finite(2),
                Dist::Finite(2),
                Dist::Finite(1)
            ]
        );
        let g = Graph::new(3, &[(0, 1)]).unwrap();
        assert_eq!(
            g.bfs_distances(0),
            vec![Dist::Finite(0), Dist::Finite(1), Dist::Inf]
        );
    }

    #[test]
    fn distance_matrix_examples() {
        let k3 = complete(3);
        let m = k3.distance_matrix();
        for u in 0..3 {
            for v in 0..3 {
                let want = if u == v { 0 } else { 1 };
                assert_eq!(m.get(u, v), Dist::Finite(want));
            }
        }
        assert_eq!(p4().distance_matrix().get(0, 3), Dist::Finite(3));
    }

    #[test]
    fn degree_stats_examples() {
        let k4 = complete(4);
        let s = k4.degree_stats().unwrap();
        assert_eq!((s.min, s.max), (3, 3));

        let star5 = Graph::new(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let s = star5.degree_stats().unwrap();
        assert_eq!((s.min, s.max), (1, 4));

        assert!(matches!(
            Graph::new(0, &[]).unwrap().degree_stats(),
            Err(Error::EmptyGraph)
        ));
    }

    #[test]
    fn connectivity() {
        assert!(p4().is_connected());
        let two_k2 = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!two_k2.is_connected());
        assert!(Graph::new(1, &[]).unwrap().is_connected());
        assert!(Graph::new(0, &[]).unwrap().is_connected());
    }

    #[test]
    fn induced_subgraph_examples() {
        let (k3, map) = complete(4).induced_subgraph(&[0, 1, 2]).unwrap();
        assert_eq!(k3.edge_count(), 3);
        assert_eq!(map, vec![0, 1, 2]);

        let (iso, _) = p4().induced_subgraph(&[0, 2]).unwrap();
        assert_eq!(iso.edge_count(), 0);
        assert_eq!(iso.order(), 2);

        let (p3, map) = c5().induced_subgraph(&[0, 1, 2]).unwrap();
        assert_eq!(p3.edge_count(), 2);
        assert_eq!(map, vec![0, 1, 2]);
        assert!(p3.has_edge(0, 1) && p3.has_edge(1, 2));

        assert!(complete(4).induced_subgraph(&[0, 9]).is_err());
    }

    #[test]
    fn power_examples() {
        let sq = p4().power(2).unwrap();
        let got: Vec<_> = sq.edge_pairs();
        assert_eq!(got, vec![(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]);

        assert_eq!(c5().power(1).unwrap(), c5());
        assert_eq!(p4().power(3).unwrap(), complete(4));
        assert!(p4().power(0).is_err());
    }

    #[test]
    fn line_graph_examples() {
        let (l, edges) = p4().line_graph().unwrap();
        assert_eq!(l.order(), 3);
        assert_eq!(l.edge_count(), 2); // P_3
        assert_eq!(edges[0], EdgeRef::new(0, 1));

        let (l, _) = complete(3).line_graph().unwrap();
        assert_eq!((l.order(), l.edge_count()), (3, 3)); // K_3

        let star4 = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let (l, _) = star4.line_graph().unwrap();
        assert_eq!((l.order(), l.edge_count()), (3, 3)); // K_3

        assert!(Graph::new(2, &[]).unwrap().line_graph().is_err());
    }

    #[test]
    fn edge_distance_examples() {
        let p6 = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
        let d = p6
            .edge_distance(EdgeRef::new(0, 1), EdgeRef::new(4, 5))
            .unwrap();
        assert_eq!(d, Dist::Finite(3));

        let d = p6
            .edge_distance(EdgeRef::new(0, 1), EdgeRef::new(1, 2))
            .unwrap();
        assert_eq!(d, Dist::Finite(0));

        let d = p6
            .edge_distance(EdgeRef::new(2, 3), EdgeRef::new(2, 3))
            .unwrap();
        assert_eq!(d, Dist::Finite(0));

        assert!(p6
            .edge_distance(EdgeRef::new(0, 2), EdgeRef::new(4, 5))
            .is_err());
    }

    #[test]
    fn structural_predicate_examples() {
        assert_eq!(c5().structural_predicates(), (true, true));
        let k33 = Graph::new(
            6,
            &[
                (0, 3),
                (0, 4),
                (0, 5),
                (1, 3),
                (1, 4),
                (1, 5),
                (2, 3),
                (2, 4),
                (2, 5),
            ],
        )
        .unwrap();
        assert_eq!(k33.structural_predicates(), (true, false));
        let c4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(!c4.is_c4_free());
        assert!(complete(3).is_c4_free());
        assert!(!complete(3).is_triangle_free());
    }

    #[test]
    fn second_neighborhood_examples() {
        let p5 = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(p5.second_neighborhood(0), vec![0, 1, 2]);
        assert_eq!(complete(4).second_neighborhood(1), vec![0, 1, 2, 3]);
    }

    /// Oracle: exhaustive labeled subgraph search for triangles and 4-cycles.
    fn has_triangle_exhaustive(g: &Graph) -> bool {
        let n = g.order();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    if g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c) {
                        return true;
                    }
                }
            }
        }
        false
    }

    fn has_c4_exhaustive(g: &Graph) -> bool {
        let n = g.order();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        if a < b && a < c && a < d && b < d {
                            // canonical orientation of the 4-cycle a-b-c-d
                            if a != c
                                && b != c
                                && c != d
                                && g.has_edge(a, b)
                                && g.has_edge(b, c)
                                && g.has_edge(c, d)
                                && g.has_edge(d, a)
                            {
                                return true;
                            }
                        }
                    }
                }
            }
        }
        false
    }

    proptest! {
        #[test]
        fn distance_matrix_is_metric(g in arb_graph(8)) {
            let m = g.distance_matrix();
            let n = g.order();
            for u in 0..n {
                prop_assert_eq!(m.get(u, u), Dist::Finite(0));
                for v in 0..n {
                    prop_assert_eq!(m.get(u, v), m.get(v, u));
                    for w in 0..n {
                        if let (Some(a), Some(b), Some(c)) =
                            (m.get(u, v).finite(), m.get(u, w).finite(), m.get(w, v).finite())
                        {
                            prop_assert!(a <= b + c);
                        }
                    }
                }
            }
        }

        #[test]
        fn power_distance_is_ceil_div(g in arb_graph(8), k in 1usize..4) {
            let m = g.distance_matrix();
            let mk = g.power(k).unwrap().distance_matrix();
            for u in 0..g.order() {
                for v in 0..g.order() {
                    match m.get(u, v) {
                        Dist::Inf => prop_assert_eq!(mk.get(u, v), Dist::Inf),
                        Dist::Finite(d) => {
                            let want = d.div_ceil(k as u32);
                            prop_assert_eq!(mk.get(u, v), Dist::Finite(want));
                        }
                    }
                }
            }
        }

        #[test]
        fn predicates_match_exhaustive_search(g in arb_graph(7)) {
            prop_assert_eq!(g.is_triangle_free(), !has_triangle_exhaustive(&g));
            prop_assert_eq!(g.is_c4_free(), !has_c4_exhaustive(&g));
        }

        #[test]
        fn edge_distance_matches_line_graph(g in arb_graph(8)) {
            prop_assume!(g.is_connected() && g.edge_count() >= 2);
            let (l, edges) = g.line_graph().unwrap();
            let lm = l.distance_matrix();
            for i in 0..edges.len() {
                for j in i + 1..edges.len() {
                    let d = g.edge_distance(edges[i], edges[j]).unwrap().expect_finite();
                    prop_assert_eq!(Dist::Finite(d + 1), lm.get(i, j));
                }
            }
        }
    }

    #[test]
    fn graphs_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<Graph>();
        assert_send_sync::<DistanceMatrix>();
        assert_send_sync::<EdgeRef>();
    }

    #[test]
    fn line_graph_of_tree_counts() {
        // a tree on n vertices has n-1 line-graph vertices and
        // sum_v C(deg v, 2) line-graph edges
        let trees = [
            Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]).unwrap(),
            Graph::new(6, &[(0, 1), (0, 2), (0, 3), (3, 4), (3, 5)]).unwrap(),
            Graph::new(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap(),
        ];
        for t in &trees {
            let (l, _) = t.line_graph().unwrap();
            assert_eq!(l.order(), t.order() - 1);
            let want: usize = (0..t.order())
                .map(|v| t.degree(v) * t.degree(v).saturating_sub(1) / 2)
                .sum();
            assert_eq!(l.edge_count(), want);
        }
    }
}
