//! Brute-force reference deciders, written straight from the definitions and
//! sharing no search code with [`crate::detect`]. Exponential time; orders
//! are capped.
//!
//! Containment enumerates every vertex subset of the pattern's order and
//! asks whether that subset can play the pattern's roles. Hamiltonicity of
//! subsets comes from a subset dynamic program computed once per graph.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pattern::PatternSpec;

pub const CONTAINS_LIMIT: usize = 16;
pub const MATCHING_LIMIT: usize = 14;

fn adjacency_masks(g: &Graph) -> Vec<u32> {
    (0..g.order())
        .map(|u| {
            (0..g.order())
                .filter(|&v| g.has_edge(u, v))
                .fold(0u32, |m, v| m | 1 << v)
        })
        .collect()
}

/// Hamiltonian path / cycle tables over all vertex subsets.
struct SubsetTables {
    adj: Vec<u32>,
    /// `path_ends[S]`: vertices at which some Hamiltonian path of `S` ends.
    path_ends: Vec<u32>,
    /// `anchored_ends[S]`: ends of Hamiltonian paths of `S` that start at
    /// the smallest vertex of `S`.
    anchored_ends: Vec<u32>,
}

impl SubsetTables {
    fn new(g: &Graph, max_size: usize) -> Self {
        let n = g.order();
        let adj = adjacency_masks(g);
        let full = 1usize << n;
        let mut path_ends = vec![0u32; full];
        let mut anchored_ends = vec![0u32; full];
        // masks in increasing numeric order visit every subset after its
        // one-smaller subsets
        for s in 1..full {
            let size = s.count_ones() as usize;
            if size > max_size {
                continue;
            }
            if size == 1 {
                path_ends[s] = s as u32;
                anchored_ends[s] = s as u32;
                continue;
            }
            let low = s.trailing_zeros();
            for v in 0..n {
                if s >> v & 1 == 0 {
                    continue;
                }
                let rest = s & !(1 << v);
                if path_ends[rest] & adj[v] != 0 {
                    path_ends[s] |= 1 << v;
                }
                if v as u32 != low && anchored_ends[rest] & adj[v] != 0 {
                    anchored_ends[s] |= 1 << v;
                }
            }
        }
        SubsetTables {
            adj,
            path_ends,
            anchored_ends,
        }
    }

    fn has_ham_path(&self, s: u32) -> bool {
        s != 0 && self.path_ends[s as usize] != 0
    }

    fn has_ham_cycle(&self, s: u32) -> bool {
        if s.count_ones() < 3 {
            return false;
        }
        let low = s.trailing_zeros() as usize;
        self.anchored_ends[s as usize] & self.adj[low] != 0
    }

    fn has_perfect_matching(&self, s: u32) -> bool {
        if s == 0 {
            return true;
        }
        let v = s.trailing_zeros() as usize;
        let rest = s & !(1 << v);
        let mut partners = rest & self.adj[v];
        while partners != 0 {
            let u = partners.trailing_zeros();
            partners &= partners - 1;
            if self.has_perfect_matching(rest & !(1 << u)) {
                return true;
            }
        }
        false
    }

    fn is_clique(&self, s: u32) -> bool {
        let mut m = s;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            if s & !(1 << v) & !self.adj[v] != 0 {
                return false;
            }
        }
        true
    }

    fn edges_within(&self, s: u32) -> u32 {
        let mut m = s;
        let mut twice = 0;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            twice += (self.adj[v] & s).count_ones();
        }
        twice / 2
    }

    /// Some hub `h` in `s` adjacent to all of `s - h` with `rim(s - h)`.
    fn has_hub(&self, s: u32, rim: impl Fn(u32) -> bool) -> bool {
        let mut m = s;
        while m != 0 {
            let h = m.trailing_zeros() as usize;
            m &= m - 1;
            let rest = s & !(1 << h);
            if rest & !self.adj[h] == 0 && rim(rest) {
                return true;
            }
        }
        false
    }
}

fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = u32> {
    (0u32..(1u32 << n)).filter(move |s| s.count_ones() as usize == k)
}

/// Whether `g` contains `p`, by subset enumeration. Rejects graphs with more
/// than [`CONTAINS_LIMIT`] vertices.
pub fn oracle_contains(g: &Graph, p: PatternSpec) -> Result<bool> {
    let n = g.order();
    if n > CONTAINS_LIMIT {
        return Err(Error::OrderGuard {
            what: "oracle containment",
            order: n,
            limit: CONTAINS_LIMIT,
        });
    }
    let k = p.order();
    if k > n {
        return Ok(false);
    }
    let t = SubsetTables::new(g, k);
    let found = subsets_of_size(n, k).any(|s| match p {
        PatternSpec::Clique(_) => t.is_clique(s),
        PatternSpec::K4MinusE => t.edges_within(s) >= 5,
        PatternSpec::Matching(_) => t.has_perfect_matching(s),
        PatternSpec::Cycle(_) => t.has_ham_cycle(s),
        PatternSpec::Path(_) => t.has_ham_path(s),
        PatternSpec::Fan(_) => t.has_hub(s, |r| t.has_perfect_matching(r)),
        PatternSpec::Wheel(_) => t.has_hub(s, |r| t.has_ham_cycle(r)),
        PatternSpec::Kipas(_) => t.has_hub(s, |r| t.has_ham_path(r)),
    });
    Ok(found)
}

/// Maximum number of pairwise disjoint edges, by recursive inclusion /
/// exclusion of each edge.
pub fn oracle_matching_number(g: &Graph) -> Result<usize> {
    let n = g.order();
    if n > MATCHING_LIMIT {
        return Err(Error::OrderGuard {
            what: "oracle matching",
            order: n,
            limit: MATCHING_LIMIT,
        });
    }
    let edges = g.edges();
    fn best(edges: &[(usize, usize)], used: u32) -> usize {
        let Some((&(u, v), rest)) = edges.split_first() else {
            return 0;
        };
        let skip = best(rest, used);
        if used >> u & 1 == 0 && used >> v & 1 == 0 {
            skip.max(1 + best(rest, used | 1 << u | 1 << v))
        } else {
            skip
        }
    }
    Ok(best(&edges, 0))
}

/// Whether the listed vertices span a copy of `p` in `g` in some role
/// assignment (unlike [`PatternSpec::is_embedding`], the order of
/// `vertices` is ignored).
pub fn oracle_spans(g: &Graph, p: PatternSpec, vertices: &[usize]) -> Result<bool> {
    let sub = g.induced(vertices)?;
    if vertices.len() != p.order() {
        return Ok(false);
    }
    oracle_contains(&sub, p)
}
