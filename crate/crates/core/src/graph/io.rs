//! Edge-list text format.
//!
//! ```text
//! # comment
//! n m
//! u v        (m lines, 0 <= u < v < n)
//! ```
//!
//! Everything after a `#` on a line is ignored, as are blank lines.

use std::fmt::Write;

use super::Graph;
use crate::parse::{content_lines, parse_usize, ParseError};

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = content_lines(text);
    let (header_line, header) = lines
        .next()
        .ok_or_else(|| ParseError::new(0, "missing \"n m\" header"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(ParseError::new(header_line, "header must be \"n m\""));
    }
    let n = parse_usize(header_line, fields[0], "vertex count")?;
    let m = parse_usize(header_line, fields[1], "edge count")?;

    let mut edges = Vec::with_capacity(m);
    for (line, content) in lines {
        let fields: Vec<&str> = content.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(ParseError::new(line, "edge line must be \"u v\""));
        }
        let u = parse_usize(line, fields[0], "vertex id")?;
        let v = parse_usize(line, fields[1], "vertex id")?;
        if u >= v || v >= n {
            return Err(ParseError::new(
                line,
                format!("edge \"{u} {v}\" violates 0 <= u < v < {n}"),
            ));
        }
        if edges.len() == m {
            return Err(ParseError::new(line, format!("more than {m} edges")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(ParseError::new(
            0,
            format!("header promises {m} edges, found {}", edges.len()),
        ));
    }
    Graph::from_edges(n, edges).map_err(|e| ParseError::new(0, e.to_string()))
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{hoffman_singleton, petersen};

    #[test]
    fn round_trip() {
        for g in [petersen(), hoffman_singleton(), Graph::empty(3)] {
            assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
        }
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# triangle\n3 3\n0 1 # first\n\n0 2\n1 2\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = parse_edge_list("3 2\n0 1\n2 1\n").unwrap_err();
        assert_eq!(err.line, 3);
        let err = parse_edge_list("3 2\n0 1\n").unwrap_err();
        assert_eq!(err.line, 0);
        let err = parse_edge_list("3 x\n").unwrap_err();
        assert_eq!(err.line, 1);
        let err = parse_edge_list("3 1\n0 1\n0 1\n").unwrap_err();
        assert_eq!(err.line, 3);
        assert!(parse_edge_list("2 2\n0 1\n0 1\n").is_err());
        assert!(parse_edge_list("").is_err());
    }
}
