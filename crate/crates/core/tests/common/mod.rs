//! Engine-independent reference implementations.
#![allow(dead_code)]

use std::collections::BTreeMap;

use graphsym::Graph;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    (0..g.n())
        .map(|u| (0..g.n()).map(|v| g.adjacent(u, v)).collect())
        .collect()
}

/// Number of automorphisms, by extending partial maps one vertex at a time
/// and checking adjacency against every vertex already placed.
pub fn brute_aut_count(g: &Graph) -> u64 {
    let adj = adjacency(g);
    let n = g.n();
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn go(i: usize, adj: &[Vec<bool>], image: &mut [usize], used: &mut [bool]) -> u64 {
        let n = adj.len();
        if i == n {
            return 1;
        }
        let mut total = 0;
        for c in 0..n {
            if used[c] || (0..i).any(|j| adj[i][j] != adj[c][image[j]]) {
                continue;
            }
            image[i] = c;
            used[c] = true;
            total += go(i + 1, adj, image, used);
            used[c] = false;
        }
        total
    }
    go(0, &adj, &mut image, &mut used)
}

pub fn brute_is_asymmetric(g: &Graph) -> bool {
    brute_aut_count(g) == 1
}

/// Upper-triangle pair list for `n` vertices, in a fixed order.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect()
}

pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let edges = pairs(n)
        .into_iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, e)| e);
    Graph::from_edges(n, edges).unwrap()
}

pub fn mask_of(g: &Graph) -> u64 {
    pairs(g.n())
        .into_iter()
        .enumerate()
        .filter(|(_, (u, v))| g.adjacent(*u, *v))
        .map(|(i, _)| 1u64 << i)
        .sum()
}

pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Precomputed pair-index images under every permutation of `0..n`.
pub struct MaskRelabeler {
    maps: Vec<Vec<u8>>,
}

impl MaskRelabeler {
    pub fn new(n: usize) -> Self {
        let ps = pairs(n);
        let index: BTreeMap<(usize, usize), u8> =
            ps.iter().enumerate().map(|(i, &p)| (p, i as u8)).collect();
        let maps = all_permutations(n)
            .into_iter()
            .map(|p| {
                ps.iter()
                    .map(|&(u, v)| {
                        let (a, b) = (p[u].min(p[v]), p[u].max(p[v]));
                        index[&(a, b)]
                    })
                    .collect()
            })
            .collect();
        Self { maps }
    }

    pub fn relabel(&self, which: usize, mask: u64) -> u64 {
        let map = &self.maps[which];
        let mut out = 0u64;
        let mut m = mask;
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            out |= 1 << map[i];
            m &= m - 1;
        }
        out
    }

    /// Smallest relabeled mask: a canonical form by exhaustion.
    pub fn canonical(&self, mask: u64) -> u64 {
        (0..self.maps.len())
            .map(|i| self.relabel(i, mask))
            .min()
            .unwrap()
    }

    /// Automorphism count by testing every permutation.
    pub fn aut_count(&self, mask: u64) -> usize {
        (0..self.maps.len())
            .filter(|&i| self.relabel(i, mask) == mask)
            .count()
    }

    pub fn orbit(&self, mask: u64) -> Vec<u64> {
        let mut v: Vec<u64> = (0..self.maps.len())
            .map(|i| self.relabel(i, mask))
            .collect();
        v.sort_unstable();
        v.dedup();
        v
    }
}

/// Colour refinement to a fixpoint. A discrete final colouring proves the
/// graph asymmetric; a non-discrete one proves nothing.
pub fn refinement_is_discrete(g: &Graph) -> bool {
    let adj = adjacency(g);
    let n = g.n();
    let mut colour = vec![0usize; n];
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = (0..n).filter(|&u| adj[v][u]).map(|u| colour[u]).collect();
                nb.sort_unstable();
                (colour[v], nb)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = sigs
            .iter()
            .map(|s| distinct.binary_search(s).unwrap())
            .collect();
        let before = colour
            .iter()
            .collect::<std::collections::BTreeSet<_>>()
            .len();
        if distinct.len() == before {
            return distinct.len() == n;
        }
        colour = next;
    }
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let edges: Vec<(usize, usize)> = pairs(n).into_iter().filter(|_| rng.gen_bool(p)).collect();
    Graph::from_edges(n, edges).unwrap()
}

pub fn random_permutation(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// Smallest number of pair toggles turning `mask` into any of `targets`.
pub fn min_distance(mask: u64, targets: &[u64]) -> u32 {
    targets
        .iter()
        .map(|t| (mask ^ t).count_ones())
        .min()
        .unwrap()
}

/// All labeled asymmetric graphs on `n` vertices, as masks.
pub fn labeled_asymmetric(rl: &MaskRelabeler, n: usize) -> Vec<u64> {
    let total = 1u64 << (n * (n - 1) / 2);
    (0..total).filter(|&m| rl.aut_count(m) == 1).collect()
}

/// One representative mask per isomorphism class.
pub fn class_representatives(rl: &MaskRelabeler, n: usize) -> Vec<u64> {
    let total = 1u64 << (n * (n - 1) / 2);
    let mut reps: Vec<u64> = (0..total).map(|m| rl.canonical(m)).collect();
    reps.sort_unstable();
    reps.dedup();
    reps
}
