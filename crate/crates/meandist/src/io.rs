//! Graph readers and writers: plain edge-list text and the graph6 format.
//!
//! Edge-list files start with a line `n m` followed by `m` lines `u v`
//! (0-indexed); `#` starts a comment. graph6 encodes the order, then the
//! upper triangle of the adjacency matrix in column order, six bits per
//! byte, each byte offset by 63.

use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Parses edge-list text.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().filter_map(|line| {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            None
        } else {
            Some(line)
        }
    });
    let header = lines
        .next()
        .ok_or_else(|| Error::Format("missing 'n m' header line".into()))?;
    let mut it = header.split_whitespace();
    let n: usize = parse_num(it.next(), "vertex count")?;
    let m: usize = parse_num(it.next(), "edge count")?;
    if it.next().is_some() {
        return Err(Error::Format("header line must be exactly 'n m'".into()));
    }
    let mut edges = Vec::with_capacity(m);
    for line in lines {
        let mut it = line.split_whitespace();
        let u: usize = parse_num(it.next(), "edge endpoint")?;
        let v: usize = parse_num(it.next(), "edge endpoint")?;
        if it.next().is_some() {
            return Err(Error::Format(format!("malformed edge line: {line:?}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::Format(format!(
            "header declares {m} edges but {} edge lines follow",
            edges.len()
        )));
    }
    Graph::new(n, &edges)
}

fn parse_num(tok: Option<&str>, what: &str) -> Result<usize> {
    tok.ok_or_else(|| Error::Format(format!("missing {what}")))?
        .parse()
        .map_err(|_| Error::Format(format!("invalid {what}: {tok:?}")))
}

/// Renders a graph as edge-list text.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.edge_count());
    for e in g.edges() {
        out.push_str(&format!("{} {}\n", e.u(), e.v()));
    }
    out
}

/// Encodes a graph in graph6. Orders up to 62 use a single size byte
/// `n + 63`; larger orders (up to 258047) use the `~` escape followed by
/// three bytes carrying 18 bits.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    assert!(n <= 258_047, "graph6 order limit exceeded");
    let mut bytes: Vec<u8> = Vec::new();
    if n <= 62 {
        bytes.push(n as u8 + 63);
    } else {
        bytes.push(126);
        bytes.push(((n >> 12) & 0x3f) as u8 + 63);
        bytes.push(((n >> 6) & 0x3f) as u8 + 63);
        bytes.push((n & 0x3f) as u8 + 63);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                bytes.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(bytes).unwrap()
}

/// Decodes a graph6 string. Accepts an optional `>>graph6<<` prefix.
pub fn from_graph6(s: &str) -> Result<Graph> {
    let s = s.trim().strip_prefix(">>graph6<<").unwrap_or(s.trim());
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Format("empty graph6 string".into()));
    }
    let (n, mut pos) = if bytes[0] == 126 {
        if bytes.len() < 4 {
            return Err(Error::Format("truncated graph6 size field".into()));
        }
        if bytes[1] == 126 {
            return Err(Error::Format("graph6 orders above 258047 unsupported".into()));
        }
        let mut n = 0usize;
        for &b in &bytes[1..4] {
            n = (n << 6) | decode6(b)? as usize;
        }
        (n, 4)
    } else {
        (decode6(bytes[0])? as usize, 1)
    };
    let bits = n * n.saturating_sub(1) / 2;
    let want_bytes = bits.div_ceil(6);
    if bytes.len() - pos != want_bytes {
        return Err(Error::Format(format!(
            "graph6 body has {} bytes, expected {want_bytes} for order {n}",
            bytes.len() - pos
        )));
    }
    let mut edges = Vec::new();
    let mut acc = 0u8;
    let mut avail = 0u32;
    for v in 1..n {
        for u in 0..v {
            if avail == 0 {
                acc = decode6(bytes[pos])?;
                pos += 1;
                avail = 6;
            }
            avail -= 1;
            if acc >> avail & 1 == 1 {
                edges.push((u, v));
            }
        }
    }
    if avail > 0 && acc & ((1 << avail) - 1) != 0 {
        return Err(Error::Format("nonzero padding bits in graph6".into()));
    }
    Graph::new(n, &edges)
}

fn decode6(b: u8) -> Result<u8> {
    if !(63..=126).contains(&b) {
        return Err(Error::Format(format!("invalid graph6 byte {b}")));
    }
    Ok(b - 63)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Graph6,
}

/// Reads a graph file, auto-detecting edge list vs graph6 unless `format`
/// pins one.
pub fn read_graph_file(path: &Path, format: Option<GraphFormat>) -> Result<Graph> {
    let text = fs::read_to_string(path)?;
    match format {
        Some(GraphFormat::EdgeList) => parse_edge_list(&text),
        Some(GraphFormat::Graph6) => from_graph6(&text),
        None => {
            let head = text.trim_start();
            // edge-list files start with a digit or comment; graph6 strings
            // start with a byte in 63..=126 that is not a digit
            if head.starts_with('#') || head.chars().next().is_some_and(|c| c.is_ascii_digit()) {
                parse_edge_list(&text)
            } else {
                from_graph6(&text)
            }
        }
    }
}

pub fn write_graph_file(path: &Path, g: &Graph, format: GraphFormat) -> Result<()> {
    let text = match format {
        GraphFormat::EdgeList => to_edge_list(g),
        GraphFormat::Graph6 => {
            let mut s = to_graph6(g);
            s.push('\n');
            s
        }
    };
    fs::write(path, text)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::arb_graph;
    use proptest::prelude::*;

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let text = to_edge_list(&g);
        assert_eq!(text, "4 3\n0 1\n1 2\n2 3\n");
        assert_eq!(parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn edge_list_comments_and_errors() {
        let g = parse_edge_list("# a path\n3 2\n0 1 # first\n1 2\n").unwrap();
        assert_eq!(g.order(), 3);
        assert!(parse_edge_list("").is_err());
        assert!(parse_edge_list("3 2\n0 1\n").is_err());
        assert!(parse_edge_list("3 1\n0 x\n").is_err());
    }

    #[test]
    fn graph6_known_encoding() {
        // 5 vertices, edges 02 04 13 34 encodes to "DQc"
        let g = Graph::new(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g), "DQc");
        assert_eq!(from_graph6("DQc").unwrap(), g);
    }

    #[test]
    fn graph6_trivial_and_prefixed() {
        let k1 = Graph::new(1, &[]).unwrap();
        assert_eq!(to_graph6(&k1), "@");
        assert_eq!(from_graph6(">>graph6<<@").unwrap(), k1);
        assert!(from_graph6("").is_err());
        assert!(from_graph6("D").is_err()); // truncated body
    }

    #[test]
    fn graph6_large_order_escape() {
        let n = 100;
        let mut edges = Vec::new();
        for u in 1..n {
            edges.push((u - 1, u));
        }
        let g = Graph::new(n, &edges).unwrap();
        let s = to_graph6(&g);
        assert_eq!(s.as_bytes()[0], 126);
        assert_eq!(from_graph6(&s).unwrap(), g);
    }

    proptest! {
        #[test]
        fn graph6_round_trip(g in arb_graph(12)) {
            prop_assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
        }

        #[test]
        fn edge_list_round_trip_random(g in arb_graph(12)) {
            prop_assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
        }
    }
}
