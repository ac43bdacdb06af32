//! Parameterized graph families: circulants, canonical regular graphs,
//! complete multipartite graphs and chorded cycles.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::detect;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pattern::PatternSpec;

/// `Circ(n, S)`: `u ~ v` iff the cyclic distance between them lies in `S`.
/// Each offset must satisfy `1 <= s <= n/2`.
pub fn circulant(n: usize, offsets: &[usize]) -> Result<Graph> {
    let max = n / 2;
    for &s in offsets {
        if s == 0 || s > max {
            return Err(Error::OffsetOutOfRange {
                offset: s,
                max,
                order: n,
            });
        }
    }
    let mut g = Graph::blank(n);
    for u in 0..n {
        for &s in offsets {
            g.link(u, (u + s) % n);
        }
    }
    Ok(g)
}

/// Canonical `d`-regular graph on `n` vertices:
/// `Circ(n, {1..d/2} ∪ {n/2 if d odd})`.
pub fn regular_graph(n: usize, d: usize) -> Result<Graph> {
    if n == 0 && d == 0 {
        return Ok(Graph::empty(0));
    }
    if d >= n {
        return Err(Error::Regularity {
            order: n,
            degree: d,
            reason: "degree must be below the order",
        });
    }
    if (n * d) % 2 == 1 {
        return Err(Error::Regularity {
            order: n,
            degree: d,
            reason: "order times degree is odd",
        });
    }
    let mut offsets: Vec<usize> = (1..=d / 2).collect();
    if d % 2 == 1 {
        offsets.push(n / 2);
    }
    circulant(n, &offsets)
}

/// `K_{a_1, .., a_k}`; parts are laid out consecutively.
pub fn complete_multipartite(parts: &[usize]) -> Graph {
    let n: usize = parts.iter().sum();
    let mut part_of = Vec::with_capacity(n);
    for (i, &size) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(i, size));
    }
    let mut g = Graph::blank(n);
    for u in 0..n {
        for v in u + 1..n {
            if part_of[u] != part_of[v] {
                g.link(u, v);
            }
        }
    }
    g
}

/// `C_len` on `0..len` plus the given chords.
pub fn cycle_with_chords(len: usize, chords: &[(usize, usize)]) -> Result<Graph> {
    if len < 3 {
        return Err(Error::Params(format!("cycle length {len} < 3")));
    }
    let mut g = Graph::cycle(len);
    for &(u, v) in chords {
        if u >= len || v >= len {
            return Err(Error::InvalidChord(u, v, "endpoint out of range"));
        }
        if u == v {
            return Err(Error::InvalidChord(u, v, "loop"));
        }
        if g.has_edge(u, v) {
            let reason = if (u + 1) % len == v || (v + 1) % len == u {
                "already a cycle edge"
            } else {
                "duplicate chord"
            };
            return Err(Error::InvalidChord(u, v, reason));
        }
        g.link(u, v);
    }
    Ok(g)
}

/// The 7-cycle with the three distance-3 chords `v2v5, v3v6, v4v7`
/// (1-based), i.e. `(1,4), (2,5), (3,6)` with 0-based labels.
pub fn seven_cycle_with_chords() -> Graph {
    cycle_with_chords(7, &[(1, 4), (2, 5), (3, 6)]).expect("fixed valid chords")
}

/// The Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`,
/// spokes `i ~ i+5`.
pub fn petersen() -> Graph {
    let mut g = Graph::blank(10);
    for i in 0..5 {
        g.link(i, (i + 1) % 5);
        g.link(5 + i, 5 + (i + 2) % 5);
        g.link(i, i + 5);
    }
    g
}

/// `G(n, p)` with a seeded generator.
pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.link(u, v);
            }
        }
    }
    g
}

/// A random graph on `n` vertices containing no `avoid`: pairs are offered
/// in random order and kept when they do not create the pattern, up to a
/// random edge budget. Budgets at the top end give maximal `avoid`-free
/// graphs, which are the hard cases for detectors.
pub fn random_free_graph(n: usize, avoid: PatternSpec, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    pairs.shuffle(&mut rng);
    let budget = rng.gen_range(0..=pairs.len());
    let mut g = Graph::empty(n);
    let mut added = 0;
    for (u, v) in pairs {
        if added == budget {
            break;
        }
        let h = g.with_flipped(u, v);
        if !detect::contains_pattern(&h, avoid) {
            g = h;
            added += 1;
        }
    }
    g
}
