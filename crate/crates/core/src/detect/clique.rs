//! Clique search by branch and bound with a greedy-coloring bound.

use crate::bitset::VertexSet;
use crate::graph::Graph;

/// Orders `cand` by greedy color class and returns `(vertex, color)` pairs
/// with non-decreasing colors. A clique inside the first `i+1` entries has
/// at most `color[i]` vertices.
fn color_order(g: &Graph, cand: &VertexSet) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(cand.len());
    let mut uncolored = cand.clone();
    let mut color = 0;
    while !uncolored.is_empty() {
        color += 1;
        let mut q = uncolored.clone();
        while let Some(v) = q.first() {
            q.remove(v);
            q.difference_with(g.neighbors(v));
            uncolored.remove(v);
            out.push((v, color));
        }
    }
    out
}

fn expand(g: &Graph, cand: &mut VertexSet, current: &mut Vec<usize>, k: usize) -> bool {
    if current.len() == k {
        return true;
    }
    if current.len() + cand.len() < k {
        return false;
    }
    let order = color_order(g, cand);
    for &(v, color) in order.iter().rev() {
        if current.len() + color < k {
            return false;
        }
        current.push(v);
        let mut next = cand.intersection(g.neighbors(v));
        if expand(g, &mut next, current, k) {
            return true;
        }
        current.pop();
        cand.remove(v);
    }
    false
}

/// Some `K_k` in `g`, as a sorted vertex list.
pub fn find_clique(g: &Graph, k: usize) -> Option<Vec<usize>> {
    if k == 0 {
        return Some(Vec::new());
    }
    if k > g.order() {
        return None;
    }
    let mut cand = g.vertex_set();
    let mut current = Vec::with_capacity(k);
    if expand(g, &mut cand, &mut current, k) {
        current.sort_unstable();
        Some(current)
    } else {
        None
    }
}

pub fn has_clique(g: &Graph, k: usize) -> bool {
    find_clique(g, k).is_some()
}

/// Clique number, by repeated decision calls.
pub fn clique_number(g: &Graph) -> usize {
    let mut k = 0;
    while has_clique(g, k + 1) {
        k += 1;
    }
    k
}
