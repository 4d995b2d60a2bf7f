//! Ordered partitions and equitable refinement.
//!
//! Cells are identified by the position of their first vertex in `lab`.
//! Splitting a cell keeps the pieces in place, so a cell's start position
//! never changes and every decision below depends only on positions and
//! neighbor counts, never on vertex labels.

use std::collections::VecDeque;

use crate::graph::Graph;

#[derive(Clone, Debug)]
pub(crate) struct Partition {
    /// Vertices in cell order.
    pub lab: Vec<usize>,
    /// `pos[v]` is the index of `v` in `lab`.
    pub pos: Vec<usize>,
    /// Start of the cell containing each vertex.
    pub cell_of: Vec<usize>,
    /// Length of the cell starting at each start position (garbage elsewhere).
    pub len: Vec<usize>,
    pub cells: usize,
}

#[inline]
fn mix(h: u64, x: u64) -> u64 {
    (h.rotate_left(7) ^ x).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

impl Partition {
    pub fn unit(n: usize) -> Self {
        let mut len = vec![0; n];
        if n > 0 {
            len[0] = n;
        }
        Self {
            lab: (0..n).collect(),
            pos: (0..n).collect(),
            cell_of: vec![0; n],
            len,
            cells: usize::from(n > 0),
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.lab.len()
    }

    #[inline]
    pub fn is_discrete(&self) -> bool {
        self.cells == self.n()
    }

    /// Cell starts in order.
    #[cfg(test)]
    pub fn starts(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.cells);
        let mut s = 0;
        while s < self.n() {
            out.push(s);
            s += self.len[s];
        }
        out
    }

    pub fn cell(&self, start: usize) -> &[usize] {
        &self.lab[start..start + self.len[start]]
    }

    /// First smallest non-singleton cell.
    pub fn target_cell(&self) -> Option<usize> {
        let mut best: Option<(usize, usize)> = None;
        let mut s = 0;
        while s < self.n() {
            let l = self.len[s];
            if l > 1 && best.is_none_or(|(_, bl)| l < bl) {
                best = Some((s, l));
                if l == 2 {
                    break;
                }
            }
            s += l;
        }
        best.map(|(s, _)| s)
    }

    /// Refines to the coarsest equitable partition finer than `self`, starting
    /// from the given splitter cells. Returns a label-invariant trace hash.
    pub fn refine(&mut self, g: &Graph, initial: &[usize]) -> u64 {
        let n = self.n();
        let words = g.words();
        let mut trace = 0x243F_6A88_85A3_08D3u64;
        let mut in_queue = vec![false; n];
        let mut queue = VecDeque::with_capacity(n);
        for &s in initial {
            if !in_queue[s] {
                in_queue[s] = true;
                queue.push_back(s);
            }
        }
        let mut mask = vec![0u64; words];
        let mut counts: Vec<(u32, usize)> = Vec::with_capacity(n);
        while let Some(w) = queue.pop_front() {
            in_queue[w] = false;
            if self.cells == n {
                break;
            }
            mask.iter_mut().for_each(|m| *m = 0);
            for &v in &self.lab[w..w + self.len[w]] {
                mask[v / 64] |= 1 << (v % 64);
            }
            trace = mix(trace, w as u64);
            let mut s = 0;
            while s < n {
                let l = self.len[s];
                if l == 1 {
                    s += 1;
                    continue;
                }
                counts.clear();
                let mut uniform = true;
                for &v in &self.lab[s..s + l] {
                    let row = g.row(v);
                    let c: u32 = row
                        .iter()
                        .zip(&mask)
                        .map(|(a, b)| (a & b).count_ones())
                        .sum();
                    if let Some(&(c0, _)) = counts.first() {
                        uniform &= c0 == c;
                    }
                    counts.push((c, v));
                }
                if uniform {
                    s += l;
                    continue;
                }
                counts.sort_unstable();
                let was_queued = in_queue[s];
                let mut pieces: Vec<(usize, usize)> = Vec::new();
                let mut i = 0;
                while i < l {
                    let c = counts[i].0;
                    let mut j = i;
                    while j < l && counts[j].0 == c {
                        let v = counts[j].1;
                        self.lab[s + j] = v;
                        self.pos[v] = s + j;
                        self.cell_of[v] = s + i;
                        j += 1;
                    }
                    self.len[s + i] = j - i;
                    pieces.push((s + i, j - i));
                    trace = mix(trace, (s as u64) << 40 ^ (c as u64) << 20 ^ (j - i) as u64);
                    i = j;
                }
                self.cells += pieces.len() - 1;
                if was_queued {
                    for &(p, _) in &pieces[1..] {
                        in_queue[p] = true;
                        queue.push_back(p);
                    }
                } else {
                    let mut largest = 0;
                    for (k, &(_, sz)) in pieces.iter().enumerate() {
                        if sz > pieces[largest].1 {
                            largest = k;
                        }
                    }
                    for (k, &(p, _)) in pieces.iter().enumerate() {
                        if k != largest {
                            in_queue[p] = true;
                            queue.push_back(p);
                        }
                    }
                }
                s += l;
            }
        }
        mix(trace, self.cells as u64)
    }

    /// Splits `v` off the front of its cell and refines.
    pub fn individualize(&self, g: &Graph, v: usize) -> (Partition, u64) {
        let mut p = self.clone();
        let s = p.cell_of[v];
        let l = p.len[s];
        debug_assert!(l > 1);
        let other = p.lab[s];
        let pv = p.pos[v];
        p.lab.swap(s, pv);
        p.pos[other] = pv;
        p.pos[v] = s;
        p.len[s] = 1;
        p.len[s + 1] = l - 1;
        for &u in &p.lab[s + 1..s + l] {
            p.cell_of[u] = s + 1;
        }
        p.cells += 1;
        let t = p.refine(g, &[s]);
        (p, mix(t, s as u64))
    }

    pub fn equitable(g: &Graph) -> (Partition, u64) {
        let mut p = Partition::unit(g.n());
        let t = if g.n() > 0 { p.refine(g, &[0]) } else { 0 };
        (p, t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_equitable(g: &Graph, p: &Partition) -> bool {
        let starts = p.starts();
        starts.iter().all(|&x| {
            starts.iter().all(|&w| {
                let cnt = |v: usize| p.cell(w).iter().filter(|&&u| g.adjacent(u, v)).count();
                let c0 = cnt(p.cell(x)[0]);
                p.cell(x).iter().all(|&v| cnt(v) == c0)
            })
        })
    }

    #[test]
    fn degree_split_of_a_star() {
        let g = Graph::from_edges(5, (1..5).map(|i| (0, i))).unwrap();
        let (p, _) = Partition::equitable(&g);
        assert_eq!(p.cells, 2);
        assert_eq!(p.cell(0), &[1, 2, 3, 4]);
        assert_eq!(p.cell(4), &[0]);
        assert_eq!(p.target_cell(), Some(0));
    }

    #[test]
    fn path_refines_to_orbits() {
        let g = Graph::from_edges(6, (1..6).map(|i| (i - 1, i))).unwrap();
        let (p, _) = Partition::equitable(&g);
        assert_eq!(p.cells, 3);
        assert!(is_equitable(&g, &p));
        let (q, _) = p.individualize(&g, 0);
        assert!(q.is_discrete());
    }

    #[test]
    fn traces_are_label_invariant() {
        let g =
            Graph::from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5), (5, 6)]).unwrap();
        let map = [3, 6, 0, 1, 5, 2, 4];
        let h = g.relabel(&map);
        let (pg, tg) = Partition::equitable(&g);
        let (ph, th) = Partition::equitable(&h);
        assert_eq!(tg, th);
        assert!(is_equitable(&g, &pg) && is_equitable(&h, &ph));
        let (_, ig) = pg.individualize(&g, 0);
        let (_, ih) = ph.individualize(&h, map[0]);
        assert_eq!(ig, ih);
    }
}
