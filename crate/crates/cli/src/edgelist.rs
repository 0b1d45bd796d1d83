//! Plain edge-list files.
//!
//! The first data line is `n m`, followed by `m` lines `u v` with vertex ids
//! in `0..n`. Text after `#` is ignored, as are blank lines.

use std::fmt;

use fewlists_core::{Error, Multigraph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based line number, or 0 for end of input.
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            write!(f, "at end of input: {}", self.message)
        } else {
            write!(f, "line {}: {}", self.line, self.message)
        }
    }
}

impl std::error::Error for ParseError {}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, message: message.into() }
}

/// Lines with comments stripped, paired with their 1-based numbers.
fn data_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let content = raw.split('#').next().unwrap_or("");
        let fields: Vec<&str> = content.split_whitespace().collect();
        (!fields.is_empty()).then_some((i + 1, fields))
    })
}

fn number(line: usize, field: &str) -> Result<usize, ParseError> {
    field.parse().map_err(|_| err(line, format!("expected a non-negative integer, found `{field}`")))
}

pub fn parse(text: &str) -> Result<Multigraph, ParseError> {
    let mut lines = data_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| err(0, "missing header `n m`"))?;
    if header.len() != 2 {
        return Err(err(hline, "header must be `n m`"));
    }
    let n = number(hline, header[0])?;
    let m = number(hline, header[1])?;
    let mut edges = Vec::with_capacity(m);
    let mut numbers = Vec::with_capacity(m);
    for (line, fields) in lines {
        if fields.len() != 2 {
            return Err(err(line, "edge line must be `u v`"));
        }
        if edges.len() == m {
            return Err(err(line, format!("more than {m} edges")));
        }
        let u = number(line, fields[0])?;
        let v = number(line, fields[1])?;
        edges.push((u, v));
        numbers.push(line);
    }
    if edges.len() != m {
        return Err(err(0, format!("header announces {m} edges, found {}", edges.len())));
    }
    Multigraph::new(n, edges).map_err(|e| match e {
        Error::Loop { edge, vertex } => err(numbers[edge], format!("loop at vertex {vertex}")),
        Error::VertexOutOfRange { edge, vertex, vertex_count } => {
            err(numbers[edge], format!("vertex {vertex} out of range for {vertex_count} vertices"))
        }
        other => err(0, other.to_string()),
    })
}

pub fn serialize(g: &Multigraph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Whitespace-separated non-negative weights, one per edge.
pub fn parse_weights(text: &str) -> Result<Vec<u8>, ParseError> {
    let mut out = Vec::new();
    for (line, fields) in data_lines(text) {
        for field in fields {
            out.push(field.parse().map_err(|_| err(line, format!("expected a weight in 0..=255, found `{field}`")))?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let g = fewlists_core::corpus::dumbbell();
        assert_eq!(parse(&serialize(&g)).unwrap(), g);
    }

    #[test]
    fn comments_and_errors() {
        let g = parse("# theta\n2 3\n0 1\n\n0 1 # twin\n1 0\n").unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 1), (1, 0)]);
        assert_eq!(parse("2 2\n0 1\n1 1\n").unwrap_err().line, 3);
        assert_eq!(parse("2 1\n0 5\n").unwrap_err().line, 2);
        assert_eq!(parse("2 2\n0 1\n").unwrap_err().line, 0);
        assert_eq!(parse("2 1\n0 x\n").unwrap_err().line, 2);
        assert_eq!(parse("").unwrap_err().line, 0);
        assert_eq!(parse_weights("2 2\n# c\n2\n").unwrap(), vec![2, 2, 2]);
    }
}
