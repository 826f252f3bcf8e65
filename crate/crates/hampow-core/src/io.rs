//! Canonical edge-list text format and DOT export.
//!
//! Format: optional '#' comment lines, a "n m" header, then m lines "u v"
//! with 0-based indices, LF endings. Emission sorts edges, so identical
//! graphs serialize byte-identically.

use crate::digraph::{Digraph, GraphError};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IoError {
    #[error("line {0}: {1}")]
    Malformed(usize, String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Canonical serialization: header, then edges in sorted order.
pub fn format_edge_list(g: &Digraph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Same, preceded by '#' comment lines (one per entry), used by generators
/// to record provenance such as the PRNG algorithm and seed.
pub fn format_edge_list_commented(g: &Digraph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        out.push_str(&format!("# {c}\n"));
    }
    out.push_str(&format_edge_list(g));
    out
}

/// Parses the canonical format, skipping blank and '#' comment lines.
/// Simplicity violations surface as the corresponding build errors.
pub fn parse_edge_list(text: &str) -> Result<Digraph, IoError> {
    let mut content = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (line_no, header) = content
        .next()
        .ok_or_else(|| IoError::Malformed(0, "empty input".to_string()))?;
    let mut nums = header.split_whitespace();
    let parse_usize = |tok: Option<&str>, line: usize, what: &str| -> Result<usize, IoError> {
        tok.ok_or_else(|| IoError::Malformed(line, format!("missing {what}")))?
            .parse()
            .map_err(|_| IoError::Malformed(line, format!("bad {what}")))
    };
    let n = parse_usize(nums.next(), line_no, "vertex count")?;
    let m = parse_usize(nums.next(), line_no, "edge count")?;
    if nums.next().is_some() {
        return Err(IoError::Malformed(
            line_no,
            "trailing tokens in header".to_string(),
        ));
    }
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (line_no, line) = content
            .next()
            .ok_or_else(|| IoError::Malformed(0, format!("expected {m} edge lines")))?;
        let mut nums = line.split_whitespace();
        let u = parse_usize(nums.next(), line_no, "edge tail")?;
        let v = parse_usize(nums.next(), line_no, "edge head")?;
        if nums.next().is_some() {
            return Err(IoError::Malformed(
                line_no,
                "trailing tokens on edge line".to_string(),
            ));
        }
        edges.push((u, v));
    }
    if let Some((line_no, _)) = content.next() {
        return Err(IoError::Malformed(
            line_no,
            "content after last edge".to_string(),
        ));
    }
    Ok(Digraph::build(n, &edges)?)
}

/// Plain DOT rendering (no layout hints).
pub fn to_dot(g: &Digraph) -> String {
    let mut out = String::from("digraph g {\n");
    for v in 0..g.n() {
        out.push_str(&format!("  {v};\n"));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -> {v};\n"));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::GraphError;

    fn triangle() -> Digraph {
        Digraph::build(3, &[(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    #[test]
    fn golden_format() {
        assert_eq!(format_edge_list(&triangle()), "3 3\n0 1\n1 2\n2 0\n");
        let empty = Digraph::build(2, &[]).unwrap();
        assert_eq!(format_edge_list(&empty), "2 0\n");
    }

    #[test]
    fn round_trip() {
        for g in [
            triangle(),
            Digraph::build(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap(),
            Digraph::build(1, &[]).unwrap(),
        ] {
            assert_eq!(parse_edge_list(&format_edge_list(&g)).unwrap(), g);
        }
    }

    #[test]
    fn comments_and_blanks_are_skipped() {
        let text = "# prng=chacha8 seed=9\n\n3 3\n# mid comment\n0 1\n1 2\n\n2 0\n";
        assert_eq!(parse_edge_list(text).unwrap(), triangle());
        let emitted = format_edge_list_commented(&triangle(), &["prng=chacha8 seed=9".to_string()]);
        assert_eq!(emitted, "# prng=chacha8 seed=9\n3 3\n0 1\n1 2\n2 0\n");
        assert_eq!(parse_edge_list(&emitted).unwrap(), triangle());
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(parse_edge_list(""), Err(IoError::Malformed(0, _))));
        assert!(matches!(
            parse_edge_list("3\n"),
            Err(IoError::Malformed(1, _))
        ));
        assert!(matches!(
            parse_edge_list("2 1\n0 x\n"),
            Err(IoError::Malformed(2, _))
        ));
        assert!(matches!(
            parse_edge_list("2 2\n0 1\n"),
            Err(IoError::Malformed(0, _))
        ));
        assert!(matches!(
            parse_edge_list("2 1\n0 1\n1 0\n"),
            Err(IoError::Malformed(3, _))
        ));
        assert!(matches!(
            parse_edge_list("2 1 9\n0 1\n"),
            Err(IoError::Malformed(1, _))
        ));
        assert_eq!(
            parse_edge_list("2 1\n1 1\n"),
            Err(IoError::Graph(GraphError::SelfLoop(1)))
        );
        assert_eq!(
            parse_edge_list("2 2\n0 1\n0 1\n"),
            Err(IoError::Graph(GraphError::DuplicateEdge(0, 1)))
        );
        assert_eq!(
            parse_edge_list("2 1\n0 2\n"),
            Err(IoError::Graph(GraphError::VertexOutOfRange(2, 2)))
        );
    }

    #[test]
    fn dot_shape() {
        let dot = to_dot(&Digraph::build(2, &[(0, 1)]).unwrap());
        assert_eq!(dot, "digraph g {\n  0;\n  1;\n  0 -> 1;\n}\n");
    }
}
