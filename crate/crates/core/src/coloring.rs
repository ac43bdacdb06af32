//! Red/blue edge colorings of `K_N` and the `.rbc` text format.
//!
//! A coloring stores its red graph; blue is the complement. The `.rbc`
//! format is line-oriented: `rbc <N>` on the first line, then one `u v`
//! line (0-indexed, `u < v`) per red edge. `#` starts a comment.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn other(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Color::Red => "red",
            Color::Blue => "blue",
        })
    }
}

impl FromStr for Color {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "red" => Ok(Color::Red),
            "blue" => Ok(Color::Blue),
            _ => Err(Error::Params(format!("unknown color {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoColoring {
    red: Graph,
    blue: Graph,
}

impl TwoColoring {
    /// The coloring of `K_N` whose red edges are exactly `red`'s edges.
    pub fn from_red(red: Graph) -> Self {
        let blue = red.complement();
        TwoColoring { red, blue }
    }

    pub fn order(&self) -> usize {
        self.red.order()
    }

    pub fn red(&self) -> &Graph {
        &self.red
    }

    pub fn blue(&self) -> &Graph {
        &self.blue
    }

    pub fn graph(&self, color: Color) -> &Graph {
        match color {
            Color::Red => &self.red,
            Color::Blue => &self.blue,
        }
    }

    pub fn color_of(&self, u: usize, v: usize) -> Option<Color> {
        if u == v || u >= self.order() || v >= self.order() {
            None
        } else if self.red.has_edge(u, v) {
            Some(Color::Red)
        } else {
            Some(Color::Blue)
        }
    }

    /// Colors exchanged.
    pub fn swapped(&self) -> TwoColoring {
        TwoColoring {
            red: self.blue.clone(),
            blue: self.red.clone(),
        }
    }

    /// Canonical `.rbc` text: header plus sorted red edges, no comments.
    pub fn to_rbc(&self) -> String {
        self.to_rbc_with_comments(&[])
    }

    /// `.rbc` text with `# ` comment lines placed after the header.
    pub fn to_rbc_with_comments(&self, comments: &[String]) -> String {
        let mut out = format!("rbc {}\n", self.order());
        for c in comments {
            for line in c.lines() {
                out.push_str("# ");
                out.push_str(line);
                out.push('\n');
            }
        }
        for (u, v) in self.red.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// Hex SHA-256 of the canonical `.rbc` text.
    pub fn sha256(&self) -> String {
        hex::encode(Sha256::digest(self.to_rbc().as_bytes()))
    }

    /// Parses `.rbc` text; also returns the comment lines (without `#`).
    pub fn parse_rbc(text: &str) -> Result<(TwoColoring, Vec<String>)> {
        let mut lines = text.lines().enumerate();
        let (_, header) = lines.next().ok_or(Error::Rbc {
            line: 1,
            msg: "empty file".into(),
        })?;
        let n = header
            .strip_prefix("rbc ")
            .and_then(|s| s.trim().parse::<usize>().ok())
            .ok_or_else(|| Error::Rbc {
                line: 1,
                msg: format!("expected `rbc <N>`, found {header:?}"),
            })?;
        let mut comments = Vec::new();
        let mut edges = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for (i, raw) in lines {
            let line_no = i + 1;
            let err = |msg: String| Error::Rbc { line: line_no, msg };
            let (content, comment) = match raw.split_once('#') {
                Some((c, rest)) => (c, Some(rest)),
                None => (raw, None),
            };
            if let Some(c) = comment {
                comments.push(c.strip_prefix(' ').unwrap_or(c).to_string());
            }
            let mut fields = content.split_whitespace();
            let Some(a) = fields.next() else { continue };
            let b = fields
                .next()
                .ok_or_else(|| err(format!("expected two vertices, found {content:?}")))?;
            if fields.next().is_some() {
                return Err(err(format!("trailing fields in {content:?}")));
            }
            let u: usize = a.parse().map_err(|_| err(format!("bad vertex {a:?}")))?;
            let v: usize = b.parse().map_err(|_| err(format!("bad vertex {b:?}")))?;
            if u >= v {
                return Err(err(format!("edge ({u}, {v}) must satisfy u < v")));
            }
            if v >= n {
                return Err(err(format!("vertex {v} out of range for N = {n}")));
            }
            if !seen.insert((u, v)) {
                return Err(err(format!("duplicate edge ({u}, {v})")));
            }
            edges.push((u, v));
        }
        let red = Graph::from_edges(n, edges).expect("validated edges");
        Ok((TwoColoring::from_red(red), comments))
    }
}
