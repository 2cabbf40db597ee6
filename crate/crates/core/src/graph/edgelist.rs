//! Plain-text edge lists.
//!
//! ```text
//! # comment
//! 3 2
//! 0 1
//! 1 2
//! ```
//!
//! The first data line holds the vertex and edge counts, followed by one
//! `u v` pair per edge with 0-based indices. Lines starting with `#` and
//! blank lines are skipped.

use std::fmt::Write;
use std::str::FromStr;

use super::Graph;
use crate::error::{Error, Result};

impl Graph {
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let Some((header_line, header)) = lines.next() else {
            return Err(Error::Parse {
                line: 1,
                message: "missing `n m` header".into(),
            });
        };
        let (n, m) = parse_pair(header_line, header)?;
        if n == 0 {
            return Err(Error::Parse {
                line: header_line,
                message: "vertex count must be positive".into(),
            });
        }

        let mut pairs = Vec::with_capacity(m);
        for (line, content) in lines {
            if pairs.len() == m {
                return Err(Error::Parse {
                    line,
                    message: format!("more than the declared {m} edges"),
                });
            }
            let (u, v) = parse_pair(line, content)?;
            if u >= n || v >= n || u == v {
                return Err(Error::Parse {
                    line,
                    message: format!("invalid edge {u} {v} for {n} vertices"),
                });
            }
            pairs.push((u, v));
        }
        if pairs.len() != m {
            return Err(Error::Parse {
                line: text.lines().count().max(1),
                message: format!("expected {m} edges, found {}", pairs.len()),
            });
        }
        Graph::from_edge_list(n, &pairs)
    }

    /// Serializes the canonical edge set in the format read by
    /// [`Graph::parse_edge_list`].
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.vertex_count(), self.edge_count());
        for (u, v) in self.edges() {
            writeln!(out, "{u} {v}").unwrap();
        }
        out
    }
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Graph::parse_edge_list(s)
    }
}

fn parse_pair(line: usize, content: &str) -> Result<(usize, usize)> {
    let err = |message: String| Error::Parse { line, message };
    let mut fields = content.split_whitespace();
    let mut next = || -> Result<usize> {
        let field = fields
            .next()
            .ok_or_else(|| err(format!("expected two integers, got `{content}`")))?;
        field
            .parse()
            .map_err(|_| err(format!("`{field}` is not a nonnegative integer")))
    };
    let pair = (next()?, next()?);
    if fields.next().is_some() {
        return Err(err(format!("trailing fields in `{content}`")));
    }
    Ok(pair)
}
