//! Target patterns and their textual grammar.
//!
//! Sizes follow the order convention for wheels and kipases: `wheel:n` is
//! `K_1 + C_{n-1}` and `kipas:n` is `K_1 + P_{n-1}`, both on `n` vertices,
//! while `fan:n` is `K_1 + nK_2` on `2n + 1` vertices.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PatternSpec {
    Fan(usize),
    Wheel(usize),
    Kipas(usize),
    Clique(usize),
    Cycle(usize),
    Path(usize),
    Matching(usize),
    K4MinusE,
}

impl PatternSpec {
    /// Checks the size constraint of each kind.
    pub fn validate(self) -> Result<Self> {
        let (ok, need) = match self {
            PatternSpec::Fan(n) => (n >= 1, "fan needs n >= 1"),
            PatternSpec::Wheel(n) => (n >= 4, "wheel order must be >= 4"),
            PatternSpec::Kipas(n) => (n >= 3, "kipas order must be >= 3"),
            PatternSpec::Clique(k) => (k >= 1, "clique needs k >= 1"),
            PatternSpec::Cycle(l) => (l >= 3, "cycle length must be >= 3"),
            PatternSpec::Path(p) => (p >= 1, "path order must be >= 1"),
            PatternSpec::Matching(n) => (n >= 1, "matching needs n >= 1"),
            PatternSpec::K4MinusE => (true, ""),
        };
        if ok {
            Ok(self)
        } else {
            Err(Error::Pattern(format!("{self}: {need}")))
        }
    }

    /// Number of vertices of the pattern graph.
    pub fn order(self) -> usize {
        match self {
            PatternSpec::Fan(n) | PatternSpec::Matching(n) => {
                2 * n + usize::from(matches!(self, PatternSpec::Fan(_)))
            }
            PatternSpec::Wheel(n)
            | PatternSpec::Kipas(n)
            | PatternSpec::Clique(n)
            | PatternSpec::Cycle(n)
            | PatternSpec::Path(n) => n,
            PatternSpec::K4MinusE => 4,
        }
    }

    /// The pattern as a concrete graph, laid out in the same role order as
    /// embeddings returned by the detectors (hub first for centered
    /// patterns).
    pub fn to_graph(self) -> Graph {
        let hubbed = |rim: Graph| {
            // move the appended cone vertex to position 0
            let n = rim.order() + 1;
            let coned = rim.cone();
            let mut order = vec![n - 1];
            order.extend(0..n - 1);
            coned.induced(&order).expect("in range")
        };
        match self {
            PatternSpec::Fan(n) => hubbed(Graph::matching(n)),
            PatternSpec::Wheel(n) => hubbed(Graph::cycle(n - 1)),
            PatternSpec::Kipas(n) => hubbed(Graph::path(n - 1)),
            PatternSpec::Clique(k) => Graph::complete(k),
            PatternSpec::Cycle(l) => Graph::cycle(l),
            PatternSpec::Path(p) => Graph::path(p),
            PatternSpec::Matching(n) => Graph::matching(n),
            PatternSpec::K4MinusE => {
                Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).expect("fixed")
            }
        }
    }

    /// Whether `vertices` is an embedding of this pattern into `g`: distinct
    /// in-range vertices such that every edge of [`Self::to_graph`] maps to
    /// an edge of `g`.
    pub fn is_embedding(self, g: &Graph, vertices: &[usize]) -> bool {
        let pattern = self.to_graph();
        if vertices.len() != pattern.order() {
            return false;
        }
        let mut seen = vec![false; g.order()];
        for &v in vertices {
            if v >= g.order() || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        pattern
            .edges()
            .into_iter()
            .all(|(a, b)| g.has_edge(vertices[a], vertices[b]))
    }
}

impl fmt::Display for PatternSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            PatternSpec::Fan(n) => write!(f, "fan:{n}"),
            PatternSpec::Wheel(n) => write!(f, "wheel:{n}"),
            PatternSpec::Kipas(n) => write!(f, "kipas:{n}"),
            PatternSpec::Clique(n) => write!(f, "clique:{n}"),
            PatternSpec::Cycle(n) => write!(f, "cycle:{n}"),
            PatternSpec::Path(n) => write!(f, "path:{n}"),
            PatternSpec::Matching(n) => write!(f, "matching:{n}"),
            PatternSpec::K4MinusE => f.write_str("k4me"),
        }
    }
}

impl FromStr for PatternSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "k4me" {
            return Ok(PatternSpec::K4MinusE);
        }
        let (kind, size) = s
            .split_once(':')
            .ok_or_else(|| Error::Pattern(format!("expected <kind>:<size> or k4me, got {s:?}")))?;
        let n: usize = size
            .parse()
            .map_err(|_| Error::Pattern(format!("bad size {size:?} in {s:?}")))?;
        let p = match kind {
            "fan" => PatternSpec::Fan(n),
            "wheel" => PatternSpec::Wheel(n),
            "kipas" => PatternSpec::Kipas(n),
            "clique" => PatternSpec::Clique(n),
            "cycle" => PatternSpec::Cycle(n),
            "path" => PatternSpec::Path(n),
            "matching" => PatternSpec::Matching(n),
            _ => return Err(Error::Pattern(format!("unknown pattern kind {kind:?}"))),
        };
        p.validate()
    }
}

impl Serialize for PatternSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for PatternSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Every valid pattern with at most `max_order` vertices, each kind at
/// every feasible size.
pub fn patterns_up_to(max_order: usize) -> Vec<PatternSpec> {
    let sized: [fn(usize) -> PatternSpec; 7] = [
        PatternSpec::Fan,
        PatternSpec::Wheel,
        PatternSpec::Kipas,
        PatternSpec::Clique,
        PatternSpec::Cycle,
        PatternSpec::Path,
        PatternSpec::Matching,
    ];
    let mut out: Vec<PatternSpec> = sized
        .iter()
        .flat_map(|make| (1..=max_order).map(make))
        .chain([PatternSpec::K4MinusE])
        .filter(|p| p.validate().is_ok() && p.order() <= max_order)
        .collect();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar_round_trip() {
        for s in [
            "fan:4",
            "wheel:7",
            "kipas:6",
            "clique:5",
            "cycle:6",
            "path:3",
            "matching:2",
            "k4me",
        ] {
            let p: PatternSpec = s.parse().unwrap();
            assert_eq!(p.to_string(), s);
        }
    }

    #[test]
    fn grammar_rejects() {
        for s in [
            "wheel:3", "kipas:2", "fan:0", "cycle:2", "clique", "star:3", "fan:x", "K4me",
        ] {
            assert!(s.parse::<PatternSpec>().is_err(), "{s}");
        }
    }

    #[test]
    fn pattern_graph_shapes() {
        let f = PatternSpec::Fan(3).to_graph();
        assert_eq!((f.order(), f.edge_count(), f.degree(0)), (7, 9, 6));
        let w = PatternSpec::Wheel(6).to_graph();
        assert_eq!((w.order(), w.edge_count(), w.degree(0)), (6, 10, 5));
        let k = PatternSpec::Kipas(5).to_graph();
        assert_eq!((k.order(), k.edge_count()), (5, 7));
        assert_eq!(PatternSpec::K4MinusE.to_graph().edge_count(), 5);
        assert_eq!(PatternSpec::Matching(3).order(), 6);
        assert_eq!(PatternSpec::Fan(3).order(), 7);
    }

    #[test]
    fn embedding_check() {
        let k4 = Graph::complete(4);
        assert!(PatternSpec::K4MinusE.is_embedding(&k4, &[0, 1, 2, 3]));
        assert!(!PatternSpec::K4MinusE.is_embedding(&k4, &[0, 1, 2, 2]));
        let c5 = Graph::cycle(5);
        assert!(PatternSpec::Cycle(5).is_embedding(&c5, &[0, 1, 2, 3, 4]));
        assert!(!PatternSpec::Cycle(5).is_embedding(&c5, &[0, 2, 1, 3, 4]));
    }
}
