//! Exact maximum clique by branch and bound with greedy-coloring bounds.

use crate::graph::{BitIter, Graph};

struct Solver<'a> {
    g: &'a Graph,
    best: Vec<usize>,
}

fn members(set: &[u64]) -> Vec<usize> {
    set.iter()
        .enumerate()
        .flat_map(|(wi, &w)| BitIter(w).map(move |b| wi * 64 + b))
        .collect()
}

impl Solver<'_> {
    /// Greedy sequential coloring; returns vertices with their color bound,
    /// ordered by nondecreasing color.
    fn color_order(&self, cand: &[u64]) -> Vec<(usize, usize)> {
        let mut uncolored = cand.to_vec();
        let mut out = Vec::new();
        let mut color = 0;
        while uncolored.iter().any(|&w| w != 0) {
            color += 1;
            let mut avail = uncolored.clone();
            while let Some(v) = members(&avail).first().copied() {
                out.push((v, color));
                uncolored[v / 64] &= !(1 << (v % 64));
                avail[v / 64] &= !(1 << (v % 64));
                for (a, r) in avail.iter_mut().zip(self.g.row(v)) {
                    *a &= !r;
                }
            }
        }
        out
    }

    fn expand(&mut self, current: &mut Vec<usize>, cand: Vec<u64>) {
        let order = self.color_order(&cand);
        let mut cand = cand;
        for &(v, color) in order.iter().rev() {
            if current.len() + color <= self.best.len() {
                return;
            }
            current.push(v);
            let next: Vec<u64> = cand.iter().zip(self.g.row(v)).map(|(c, r)| c & r).collect();
            if next.iter().all(|&w| w == 0) {
                if current.len() > self.best.len() {
                    self.best = current.clone();
                }
            } else {
                self.expand(current, next);
            }
            current.pop();
            cand[v / 64] &= !(1 << (v % 64));
        }
    }
}

/// A maximum clique, sorted ascending. Empty only for the empty graph.
pub fn max_clique(g: &Graph) -> Vec<usize> {
    if g.n() == 0 {
        return Vec::new();
    }
    let mut all = vec![0u64; g.words()];
    for v in 0..g.n() {
        all[v / 64] |= 1 << (v % 64);
    }
    let mut s = Solver { g, best: vec![0] };
    s.expand(&mut Vec::new(), all);
    let mut best = s.best;
    best.sort_unstable();
    best
}
