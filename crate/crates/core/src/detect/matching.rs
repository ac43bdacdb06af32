//! Maximum matching in general graphs by augmenting paths with blossom
//! contraction (Edmonds), O(V^3).

use std::collections::VecDeque;

use crate::graph::Graph;

const NONE: usize = usize::MAX;

struct Blossom<'g> {
    g: &'g Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'g> Blossom<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.order();
        Blossom {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.order()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// BFS over alternating trees rooted at `root`; returns the free vertex
    /// ending an augmenting path, if any.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.order();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for to in self.g.neighbors(v).iter() {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let ppv = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = ppv;
        }
    }

    fn run(mut self) -> Vec<usize> {
        let n = self.g.order();
        // greedy start
        for u in 0..n {
            if self.mate[u] == NONE {
                if let Some(v) = self.g.neighbors(u).iter().find(|&v| self.mate[v] == NONE) {
                    self.mate[u] = v;
                    self.mate[v] = u;
                }
            }
        }
        for root in 0..n {
            if self.mate[root] == NONE {
                if let Some(end) = self.find_path(root) {
                    self.augment(end);
                }
            }
        }
        self.mate
    }
}

/// A maximum matching as a list of edges `(u, v)` with `u < v`, sorted.
pub fn maximum_matching(g: &Graph) -> Vec<(usize, usize)> {
    let mate = Blossom::new(g).run();
    mate.iter()
        .enumerate()
        .filter(|&(u, &v)| v != NONE && u < v)
        .map(|(u, &v)| (u, v))
        .collect()
}

/// Size of a maximum matching.
pub fn matching_number(g: &Graph) -> usize {
    maximum_matching(g).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete_multipartite, petersen};

    #[test]
    fn examples() {
        assert_eq!(matching_number(&Graph::complete(4)), 2);
        assert_eq!(matching_number(&petersen()), 5);
        assert_eq!(matching_number(&Graph::star(5)), 1);
        assert_eq!(matching_number(&Graph::empty(3)), 0);
        assert_eq!(matching_number(&Graph::cycle(9)), 4);
        assert_eq!(matching_number(&complete_multipartite(&[1, 4])), 1);
    }

    #[test]
    fn blossom_needed() {
        // triangle 0-1-2 with pendant paths 2-3 and 0-4-5: greedy picks 0-1,
        // leaving an augmenting path through the odd cycle
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (2, 3), (0, 4), (4, 5)]).unwrap();
        assert_eq!(matching_number(&g), 3);
    }

    #[test]
    fn matching_is_valid() {
        let g = petersen();
        let m = maximum_matching(&g);
        let mut used = [false; 10];
        for &(u, v) in &m {
            assert!(g.has_edge(u, v));
            assert!(!used[u] && !used[v]);
            used[u] = true;
            used[v] = true;
        }
    }
}
