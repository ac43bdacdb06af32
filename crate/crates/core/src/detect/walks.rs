//! Exact-length cycle and exact-order path search.
//!
//! Both searches are depth-first extensions of a vertex sequence with three
//! prunings:
//! - the vertices still reachable from the current end must be able to
//!   supply the remaining length;
//! - for every class of pairwise non-adjacent twins `C` (vertices with equal
//!   neighborhoods), a path alternates out of `C`, so it holds at most
//!   `|path \ C| + 1` vertices of `C` (a cycle at most `|cycle \ C|`);
//! - twins are interchangeable, so among unused twins only the smallest is
//!   tried as the next vertex.
//!
//! Cycles are anchored at their smallest vertex; odd cycles are skipped in
//! bipartite components.

use std::collections::HashMap;

use crate::bitset::VertexSet;
use crate::graph::Graph;

struct Twins {
    class_of: Vec<usize>,
    members: Vec<VertexSet>,
    /// Classes of size >= 2 whose members are pairwise non-adjacent.
    independent: Vec<usize>,
}

impl Twins {
    fn new(g: &Graph) -> Self {
        let n = g.order();
        let mut open: HashMap<&VertexSet, Vec<usize>> = HashMap::new();
        let mut closed: HashMap<VertexSet, Vec<usize>> = HashMap::new();
        for v in 0..n {
            open.entry(g.neighbors(v)).or_default().push(v);
            let mut nv = g.neighbors(v).clone();
            nv.insert(v);
            closed.entry(nv).or_default().push(v);
        }
        let mut class_of = vec![usize::MAX; n];
        let mut members = Vec::new();
        let mut independent = Vec::new();
        let groups = open
            .into_values()
            .map(|vs| (vs, true))
            .chain(closed.into_values().map(|vs| (vs, false)));
        let mut groups: Vec<_> = groups.filter(|(vs, _)| vs.len() >= 2).collect();
        groups.sort();
        for (vs, is_independent) in groups {
            // a vertex cannot have both a false twin and a true twin
            debug_assert!(vs.iter().all(|&v| class_of[v] == usize::MAX));
            let id = members.len();
            for &v in &vs {
                class_of[v] = id;
            }
            members.push(VertexSet::from_iter_with_capacity(n, vs));
            if is_independent {
                independent.push(id);
            }
        }
        for v in 0..n {
            if class_of[v] == usize::MAX {
                class_of[v] = members.len();
                members.push(VertexSet::from_iter_with_capacity(n, [v]));
            }
        }
        Twins {
            class_of,
            members,
            independent,
        }
    }

    /// `v` is the least member of its twin class still in `avail`.
    #[inline]
    fn is_representative(&self, v: usize, avail: &VertexSet) -> bool {
        let cls = &self.members[self.class_of[v]];
        if cls.len() == 1 {
            return true;
        }
        cls.iter().find(|&w| avail.contains(w)) == Some(v)
    }
}

fn reachable(g: &Graph, from: usize, avail: &VertexSet) -> VertexSet {
    let mut seen = g.neighbors(from).intersection(avail);
    let mut frontier = seen.clone();
    while !frontier.is_empty() {
        let mut next = VertexSet::new(g.order());
        for v in frontier.iter() {
            next.union_with(g.neighbors(v));
        }
        next.intersect_with(avail);
        next.difference_with(&seen);
        seen.union_with(&next);
        frontier = next;
    }
    seen
}

fn is_bipartite(g: &Graph, comp: &VertexSet) -> bool {
    let n = g.order();
    let mut side = vec![u8::MAX; n];
    for s in comp.iter() {
        if side[s] != u8::MAX {
            continue;
        }
        side[s] = 0;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for w in g.neighbors(u).iter() {
                if side[w] == u8::MAX {
                    side[w] = 1 - side[u];
                    stack.push(w);
                } else if side[w] == side[u] {
                    return false;
                }
            }
        }
    }
    true
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Shape {
    Path,
    Cycle,
}

struct Search<'g> {
    g: &'g Graph,
    twins: Twins,
    target: usize,
    shape: Shape,
    seq: Vec<usize>,
    avail: VertexSet,
}

impl Search<'_> {
    /// Largest total length any completion of `seq` inside `reach` can have.
    fn length_bound(&self, reach: &VertexSet) -> usize {
        let d = self.seq.len();
        let mut best = d + reach.len();
        for &id in &self.twins.independent {
            let cls = &self.twins.members[id];
            let in_seq = self.seq.iter().filter(|&&v| cls.contains(v)).count();
            let in_reach = reach.intersection_len(cls);
            let others = (d - in_seq) + (reach.len() - in_reach);
            let slack = usize::from(self.shape == Shape::Path);
            best = best.min(others + (in_seq + in_reach).min(others + slack));
        }
        best
    }

    fn extend(&mut self) -> bool {
        let d = self.seq.len();
        let end = *self.seq.last().expect("non-empty sequence");
        if d == self.target {
            return match self.shape {
                Shape::Path => true,
                Shape::Cycle => self.g.has_edge(end, self.seq[0]),
            };
        }
        let mut cand = self.g.neighbors(end).intersection(&self.avail);
        if self.shape == Shape::Cycle && d + 1 == self.target {
            cand.intersect_with(self.g.neighbors(self.seq[0]));
            if let Some(v) = cand.first() {
                self.seq.push(v);
                return true;
            }
            return false;
        }
        if cand.is_empty() {
            return false;
        }
        let reach = reachable(self.g, end, &self.avail);
        if self.shape == Shape::Cycle && !reach.intersects(self.g.neighbors(self.seq[0])) {
            return false;
        }
        if self.length_bound(&reach) < self.target {
            return false;
        }
        for v in cand.iter() {
            if !self.twins.is_representative(v, &self.avail) {
                continue;
            }
            self.seq.push(v);
            self.avail.remove(v);
            if self.extend() {
                return true;
            }
            self.avail.insert(v);
            self.seq.pop();
        }
        false
    }
}

/// A path on exactly `order` vertices, listed in path order.
pub fn find_path(g: &Graph, order: usize) -> Option<Vec<usize>> {
    if order == 0 {
        return Some(Vec::new());
    }
    if order > g.order() {
        return None;
    }
    let mut search = Search {
        g,
        twins: Twins::new(g),
        target: order,
        shape: Shape::Path,
        seq: Vec::with_capacity(order),
        avail: VertexSet::new(g.order()),
    };
    for comp in g.components() {
        if comp.len() < order {
            continue;
        }
        for s in comp.iter() {
            if !search.twins.is_representative(s, &comp) {
                continue;
            }
            search.avail = comp.clone();
            search.avail.remove(s);
            search.seq.clear();
            search.seq.push(s);
            if search.extend() {
                return Some(search.seq);
            }
        }
    }
    None
}

/// A cycle of exactly `len` vertices, listed in cyclic order starting from
/// its smallest vertex.
pub fn find_cycle(g: &Graph, len: usize) -> Option<Vec<usize>> {
    if len < 3 || len > g.order() {
        return None;
    }
    let mut search = Search {
        g,
        twins: Twins::new(g),
        target: len,
        shape: Shape::Cycle,
        seq: Vec::with_capacity(len),
        avail: VertexSet::new(g.order()),
    };
    for comp in g.components() {
        if comp.len() < len || (len % 2 == 1 && is_bipartite(g, &comp)) {
            continue;
        }
        let mut above = comp.clone();
        for s in comp.iter() {
            above.remove(s);
            if !search.twins.is_representative(s, &comp) {
                continue;
            }
            if above.len() + 1 < len || g.neighbors(s).intersection_len(&above) < 2 {
                continue;
            }
            search.avail = above.clone();
            search.seq.clear();
            search.seq.push(s);
            if search.extend() {
                return Some(search.seq);
            }
        }
    }
    None
}

pub fn has_cycle_of_length(g: &Graph, len: usize) -> bool {
    find_cycle(g, len).is_some()
}

pub fn has_path_of_order(g: &Graph, order: usize) -> bool {
    find_path(g, order).is_some()
}
