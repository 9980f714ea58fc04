//! Text format for graphs, shared with the CLI.
//!
//! Line 1 is `<n> <m>`; the next `m` lines are `<u> <v>` with
//! `0 <= u < v < n`, 0-indexed, single-space separated, LF line endings and no
//! comments. Parsing is strict and every rejection carries the offending line
//! number.

use std::fmt;
use std::path::Path;

use crate::graph::{Graph, GraphError};

#[derive(Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

fn parse_usize(token: &str, line: usize, what: &str) -> Result<usize, ParseError> {
    // Reject signs, leading zeros padding like "+1", whitespace etc.: only
    // ASCII digits are allowed.
    if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) {
        return Err(err(line, format!("expected {what}, found {token:?}")));
    }
    token
        .parse()
        .map_err(|_| err(line, format!("{what} {token:?} out of range")))
}

/// Parses the text format. The final line may or may not end with LF; all
/// other deviations (CR, extra blanks, trailing content) are rejected.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    if text.contains('\r') {
        let line = text.split('\n').position(|l| l.contains('\r')).unwrap() + 1;
        return Err(err(line, "CR line endings are not allowed"));
    }
    let mut lines: Vec<&str> = text.split('\n').collect();
    // A trailing LF leaves one empty final segment; drop it.
    if lines.last() == Some(&"") {
        lines.pop();
    }
    if lines.is_empty() {
        return Err(err(1, "empty input, expected `<n> <m>` header"));
    }

    let header: Vec<&str> = lines[0].split(' ').collect();
    if header.len() != 2 {
        return Err(err(1, "header must be `<n> <m>`"));
    }
    let n = parse_usize(header[0], 1, "vertex count")?;
    let m = parse_usize(header[1], 1, "edge count")?;
    if n == 0 {
        return Err(err(1, "vertex count must be positive"));
    }

    if lines.len() != m + 1 {
        // Point at the first missing or first surplus line.
        let at = if lines.len() < m + 1 { lines.len() + 1 } else { m + 2 };
        return Err(err(
            at,
            format!("expected {} edge lines, found {}", m, lines.len() - 1),
        ));
    }

    let mut edges = Vec::with_capacity(m);
    for (i, raw) in lines[1..].iter().enumerate() {
        let line = i + 2;
        let tokens: Vec<&str> = raw.split(' ').collect();
        if tokens.len() != 2 {
            return Err(err(line, "edge line must be `<u> <v>`"));
        }
        let u = parse_usize(tokens[0], line, "vertex")?;
        let v = parse_usize(tokens[1], line, "vertex")?;
        if u >= v {
            return Err(err(line, format!("edge must satisfy u < v, got {u} {v}")));
        }
        if v >= n {
            return Err(err(line, format!("vertex {v} out of range (n = {n})")));
        }
        edges.push((u, v));
    }

    Graph::build(n, &edges).map_err(|e| match e {
        GraphError::DuplicateEdge(u, v) => {
            // Point at the first line that repeats an earlier edge.
            let at = edges
                .iter()
                .enumerate()
                .position(|(i, &p)| p == (u, v) && edges[..i].contains(&p))
                .unwrap_or(0)
                + 2;
            err(at, format!("duplicate edge {u} {v}"))
        }
        other => err(1, other.to_string()),
    })
}

/// Renders the canonical form: header, then edges in lexicographic order,
/// each line LF-terminated.
pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn read_graph_file(path: impl AsRef<Path>) -> Result<Graph, std::io::Error> {
    let text = std::fs::read_to_string(&path)?;
    parse_graph(&text).map_err(|e| {
        std::io::Error::new(
            std::io::ErrorKind::InvalidData,
            format!("{}: {}", path.as_ref().display(), e),
        )
    })
}

pub fn write_graph_file(g: &Graph, path: impl AsRef<Path>) -> Result<(), std::io::Error> {
    std::fs::write(path, write_graph(g))
}
