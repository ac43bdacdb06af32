//! Tabu search for Ramsey witness graphs: a graph avoiding one pattern whose
//! complement avoids another.
//!
//! The state is a graph on a fixed vertex set, moves flip a single pair, and
//! the objective counts violations in both the graph and its complement.
//! Recently flipped pairs are tabu unless flipping them beats the best score
//! seen. A zero score is confirmed with the exact detectors before returning.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bitset::VertexSet;
use crate::detect;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pattern::PatternSpec;

pub const DEFAULT_ORDER_CAP: usize = 64;

#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub order_cap: usize,
    /// Tabu tenure in steps; `None` picks `pairs / 8 + 3`.
    pub tenure: Option<usize>,
    /// Re-randomize after this many steps without a new best score.
    pub restart_after: usize,
    /// Cap on counted violations per pattern, so scores stay bounded.
    pub count_cap: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            order_cap: DEFAULT_ORDER_CAP,
            tenure: None,
            restart_after: 5_000,
            count_cap: 1 << 20,
        }
    }
}

/// Number of `k`-cliques inside `cand`, stopping at `cap`.
fn count_cliques(g: &Graph, cand: &VertexSet, k: usize, cap: u64) -> u64 {
    if k == 0 {
        return 1;
    }
    if k == 1 {
        return cand.len() as u64;
    }
    let mut total = 0;
    for v in cand.iter() {
        let mut next = cand.intersection(g.neighbors(v));
        // count each clique once, from its smallest vertex
        for w in 0..=v {
            next.remove(w);
        }
        if next.len() + 1 < k {
            continue;
        }
        total += count_cliques(g, &next, k - 1, cap - total.min(cap));
        if total >= cap {
            return cap;
        }
    }
    total
}

/// Violation count of `p` in `g`. Zero exactly when `g` avoids `p`.
fn violations(g: &Graph, p: PatternSpec, cap: u64) -> u64 {
    match p {
        PatternSpec::Clique(k) => count_cliques(g, &g.vertex_set(), k, cap),
        PatternSpec::K4MinusE => g
            .edges()
            .into_iter()
            .map(|(u, v)| {
                let c = g.neighbors(u).intersection_len(g.neighbors(v)) as u64;
                c * c.saturating_sub(1) / 2
            })
            .sum::<u64>()
            .min(cap),
        PatternSpec::Fan(_) | PatternSpec::Wheel(_) | PatternSpec::Kipas(_) => {
            // hubs at which the pattern closes
            (0..g.order())
                .filter(|&v| {
                    let (rim, _) = g.induced_set(g.neighbors(v));
                    match p {
                        PatternSpec::Fan(n) => detect::matching_number(&rim) >= n,
                        PatternSpec::Wheel(n) => detect::has_cycle_of_length(&rim, n - 1),
                        PatternSpec::Kipas(n) => detect::has_path_of_order(&rim, n - 1),
                        _ => unreachable!(),
                    }
                })
                .count() as u64
        }
        _ => u64::from(detect::contains_pattern(g, p)),
    }
}

struct State<'a> {
    red: Graph,
    blue: Graph,
    avoid: PatternSpec,
    avoid_complement: PatternSpec,
    cfg: &'a SearchConfig,
}

impl State<'_> {
    fn score(&self) -> u64 {
        violations(&self.red, self.avoid, self.cfg.count_cap)
            + violations(&self.blue, self.avoid_complement, self.cfg.count_cap)
    }

    /// Cliques through the pair `(u, v)` in `g`, whether or not `uv` is
    /// currently an edge.
    fn cliques_through(g: &Graph, u: usize, v: usize, k: usize, cap: u64) -> u64 {
        if k < 2 {
            return 0;
        }
        let common = g.neighbors(u).intersection(g.neighbors(v));
        count_cliques(g, &common, k - 2, cap)
    }

    /// Score after flipping `(u, v)`, given the current score.
    fn score_after_flip(&self, u: usize, v: usize, current: u64) -> u64 {
        if let (PatternSpec::Clique(a), PatternSpec::Clique(b)) =
            (self.avoid, self.avoid_complement)
        {
            let cap = self.cfg.count_cap;
            let red_through = Self::cliques_through(&self.red, u, v, a, cap);
            let blue_through = Self::cliques_through(&self.blue, u, v, b, cap);
            return if self.red.has_edge(u, v) {
                (current + blue_through).saturating_sub(red_through)
            } else {
                (current + red_through).saturating_sub(blue_through)
            };
        }
        let red = self.red.with_flipped(u, v);
        let blue = self.blue.with_flipped(u, v);
        violations(&red, self.avoid, self.cfg.count_cap)
            + violations(&blue, self.avoid_complement, self.cfg.count_cap)
    }

    fn flip(&mut self, u: usize, v: usize) {
        self.red.toggle(u, v);
        self.blue.toggle(u, v);
    }

    fn randomize(&mut self, rng: &mut ChaCha8Rng) {
        let n = self.red.order();
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(0.5) {
                    g.link(u, v);
                }
            }
        }
        self.blue = g.complement();
        self.red = g;
    }

    fn confirmed(&self) -> bool {
        !detect::contains_pattern(&self.red, self.avoid)
            && !detect::contains_pattern(&self.blue, self.avoid_complement)
    }
}

/// Searches for a graph on `order` vertices avoiding `avoid` whose
/// complement avoids `avoid_complement`, for at most `budget` moves.
/// Deterministic in `seed`.
pub fn tabu_search_witness(
    order: usize,
    avoid: PatternSpec,
    avoid_complement: PatternSpec,
    budget: u64,
    seed: u64,
) -> Result<Option<Graph>> {
    tabu_search_with(
        &SearchConfig::default(),
        order,
        avoid,
        avoid_complement,
        budget,
        seed,
    )
}

pub fn tabu_search_with(
    cfg: &SearchConfig,
    order: usize,
    avoid: PatternSpec,
    avoid_complement: PatternSpec,
    budget: u64,
    seed: u64,
) -> Result<Option<Graph>> {
    if order > cfg.order_cap {
        return Err(Error::OrderGuard {
            what: "witness search",
            order,
            limit: cfg.order_cap,
        });
    }
    avoid.validate()?;
    avoid_complement.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut state = State {
        red: Graph::empty(order),
        blue: Graph::complete(order),
        avoid,
        avoid_complement,
        cfg,
    };
    state.randomize(&mut rng);

    let pairs: Vec<(usize, usize)> = (0..order)
        .flat_map(|u| (u + 1..order).map(move |v| (u, v)))
        .collect();
    let tenure = cfg.tenure.unwrap_or(pairs.len() / 8 + 3) as u64;
    let mut tabu_until = vec![0u64; pairs.len()];
    let mut score = state.score();
    let mut best = score;
    let mut since_best = 0usize;

    for step in 0..=budget {
        if score == 0 {
            if state.confirmed() {
                return Ok(Some(state.red));
            }
            // a zero score is exact for every objective; reaching here means a bug
            debug_assert!(false, "zero objective but detectors found a violation");
        }
        if step == budget || pairs.is_empty() {
            break;
        }
        let mut best_moves = Vec::new();
        let mut best_after = u64::MAX;
        for (i, &(u, v)) in pairs.iter().enumerate() {
            let after = state.score_after_flip(u, v, score);
            let allowed = tabu_until[i] <= step || after < best;
            if !allowed {
                continue;
            }
            if after < best_after {
                best_after = after;
                best_moves.clear();
            }
            if after == best_after {
                best_moves.push(i);
            }
        }
        let Some(&i) = best_moves.choose(&mut rng) else {
            // everything tabu: let the oldest entries expire
            tabu_until.iter_mut().for_each(|t| *t = 0);
            continue;
        };
        let (u, v) = pairs[i];
        state.flip(u, v);
        tabu_until[i] = step + 1 + tenure + rng.gen_range(0..=tenure / 2);
        score = best_after;
        if score < best {
            best = score;
            since_best = 0;
        } else {
            since_best += 1;
            if since_best >= cfg.restart_after {
                state.randomize(&mut rng);
                score = state.score();
                best = score;
                since_best = 0;
                tabu_until.iter_mut().for_each(|t| *t = 0);
            }
        }
    }
    Ok(None)
}
