//! Exact containment detectors for the target patterns.
//!
//! Every detector returns a witness embedding on success, laid out in the
//! role order of [`PatternSpec::to_graph`]:
//! - `fan:n`: hub, then the `n` matched pairs;
//! - `wheel:n` / `kipas:n`: hub, then the rim cycle or path in order;
//! - `clique`, `cycle`, `path`: the vertices (in cyclic / path order);
//! - `matching:n`: the matched pairs;
//! - `k4me`: the shared edge `u v`, then two common neighbors.
//!
//! Containment always means not-necessarily-induced subgraph.

mod clique;
mod matching;
mod walks;

pub use clique::{clique_number, find_clique, has_clique};
pub use matching::{matching_number, maximum_matching};
pub use walks::{find_cycle, find_path, has_cycle_of_length, has_path_of_order};

use crate::graph::Graph;
use crate::pattern::PatternSpec;

/// Version tag recorded in certificates.
pub const DETECTOR_VERSION: &str = concat!("ramcert-detect/", env!("CARGO_PKG_VERSION"));

/// An edge `(u, v)` with two common neighbors `x, y`, as `[u, v, x, y]`.
pub fn find_k4_minus_e(g: &Graph) -> Option<Vec<usize>> {
    for (u, v) in g.edges() {
        let common = g.neighbors(u).intersection(g.neighbors(v));
        let mut it = common.iter();
        if let (Some(x), Some(y)) = (it.next(), it.next()) {
            return Some(vec![u, v, x, y]);
        }
    }
    None
}

pub fn has_k4_minus_e(g: &Graph) -> bool {
    find_k4_minus_e(g).is_some()
}

fn first_matching(g: &Graph, n: usize) -> Option<Vec<usize>> {
    let m = maximum_matching(g);
    (m.len() >= n).then(|| m[..n].iter().flat_map(|&(a, b)| [a, b]).collect())
}

/// Tries every vertex of degree at least `min_degree` as the hub and runs
/// `rim` on the subgraph induced by its neighborhood. The lowest-numbered
/// successful hub wins, so results are deterministic under parallelism.
fn find_centered<F>(g: &Graph, min_degree: usize, rim: F) -> Option<Vec<usize>>
where
    F: Fn(&Graph) -> Option<Vec<usize>> + Sync,
{
    let try_hub = |v: usize| -> Option<Vec<usize>> {
        if g.degree(v) < min_degree {
            return None;
        }
        let (h, labels) = g.induced_set(g.neighbors(v));
        rim(&h).map(|w| {
            std::iter::once(v)
                .chain(w.into_iter().map(|i| labels[i]))
                .collect()
        })
    };
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        (0..g.order()).into_par_iter().find_map_first(try_hub)
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..g.order()).find_map(try_hub)
    }
}

/// A witness embedding of `p` in `g`, if one exists.
pub fn find_pattern(g: &Graph, p: PatternSpec) -> Option<Vec<usize>> {
    match p {
        PatternSpec::Fan(n) => find_centered(g, 2 * n, |h| first_matching(h, n)),
        PatternSpec::Wheel(n) => find_centered(g, n - 1, |h| find_cycle(h, n - 1)),
        PatternSpec::Kipas(n) => find_centered(g, n - 1, |h| find_path(h, n - 1)),
        PatternSpec::Clique(k) => find_clique(g, k),
        PatternSpec::Cycle(l) => find_cycle(g, l),
        PatternSpec::Path(p) => find_path(g, p),
        PatternSpec::Matching(n) => first_matching(g, n),
        PatternSpec::K4MinusE => find_k4_minus_e(g),
    }
}

pub fn contains_pattern(g: &Graph, p: PatternSpec) -> bool {
    find_pattern(g, p).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete_multipartite, seven_cycle_with_chords};

    #[test]
    fn k4me_examples() {
        assert!(has_k4_minus_e(&Graph::complete(4)));
        assert!(!has_k4_minus_e(&seven_cycle_with_chords()));
        // bipartite, so no edge has a common neighbor
        assert!(!has_k4_minus_e(&complete_multipartite(&[2, 3])));
        assert!(has_k4_minus_e(&complete_multipartite(&[1, 1, 2])));
        assert!(!has_k4_minus_e(&Graph::cycle(4)));
    }

    #[test]
    fn dispatch_examples() {
        let w6 = Graph::cycle(5).cone();
        assert!(contains_pattern(&w6, PatternSpec::Wheel(6)));
        let f4 = Graph::matching(4).cone();
        assert!(contains_pattern(&f4, PatternSpec::Fan(4)));
        assert!(!contains_pattern(&f4, PatternSpec::Fan(5)));
        let blown = seven_cycle_with_chords().blow_up(&Graph::complete(2));
        assert!(!contains_pattern(&blown, PatternSpec::Wheel(5)));
        assert!(!contains_pattern(&blown, PatternSpec::Wheel(6)));
    }

    #[test]
    fn witnesses_check_out() {
        let g = Graph::complete(9);
        for p in [
            PatternSpec::Fan(4),
            PatternSpec::Wheel(9),
            PatternSpec::Kipas(9),
            PatternSpec::Clique(9),
            PatternSpec::Cycle(7),
            PatternSpec::Path(9),
            PatternSpec::Matching(4),
            PatternSpec::K4MinusE,
        ] {
            let w = find_pattern(&g, p).unwrap();
            assert!(p.is_embedding(&g, &w), "{p} {w:?}");
        }
    }
}
