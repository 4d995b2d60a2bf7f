//! Automorphisms, canonical forms and transposable pairs.

mod partition;
mod perm;
mod search;

use num_bigint::BigUint;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::clique::max_clique;
use crate::graph::{EdgePair, Graph};
use crate::graph6::to_graph6;

pub(crate) use partition::Partition;
pub(crate) use perm::Orbits;
pub use perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("permutation on {perm} points applied to graph on {graph} vertices")]
pub struct LengthMismatch {
    pub perm: usize,
    pub graph: usize,
}

fn biguint_as_string<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// Summary of `Aut(G)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AutReport {
    pub is_asymmetric: bool,
    #[serde(serialize_with = "biguint_as_string")]
    pub order: BigUint,
    pub generators: Vec<Permutation>,
    pub orbits: Vec<Vec<usize>>,
}

pub fn is_automorphism(g: &Graph, p: &Permutation) -> Result<bool, LengthMismatch> {
    if p.len() != g.n() {
        return Err(LengthMismatch {
            perm: p.len(),
            graph: g.n(),
        });
    }
    Ok(search::is_automorphism_unchecked(g, p.as_slice()))
}

pub fn find_nontrivial_automorphism(g: &Graph) -> Option<Permutation> {
    let (root, _) = Partition::equitable(g);
    if root.is_discrete() {
        return None;
    }
    search::group_search(g, true).gens.pop().map(|(_, p)| p)
}

pub fn is_asymmetric(g: &Graph) -> bool {
    find_nontrivial_automorphism(g).is_none()
}

pub fn automorphism_group(g: &Graph) -> AutReport {
    AutGroup::new(g).report()
}

/// Full stabilizer-chain data for one graph, reusable by the edit search.
pub struct AutGroup {
    n: usize,
    search: search::GroupSearch,
}

impl AutGroup {
    pub fn new(g: &Graph) -> Self {
        Self {
            n: g.n(),
            search: search::group_search(g, false),
        }
    }

    pub fn order(&self) -> BigUint {
        self.search
            .orbit_lengths
            .iter()
            .fold(BigUint::from(1u32), |acc, &l| acc * l)
    }

    /// Order as `u64`, `None` on overflow.
    pub fn order_u64(&self) -> Option<u64> {
        self.search
            .orbit_lengths
            .iter()
            .try_fold(1u64, |acc, &l| acc.checked_mul(l as u64))
    }

    pub fn generators(&self) -> Vec<Permutation> {
        self.search.gens.iter().map(|(_, p)| p.clone()).collect()
    }

    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut o = Orbits::new(self.n);
        for (_, p) in &self.search.gens {
            o.absorb(p);
        }
        o.cells()
    }

    pub fn report(&self) -> AutReport {
        AutReport {
            is_asymmetric: self.search.gens.is_empty(),
            order: self.order(),
            generators: self.generators(),
            orbits: self.orbits(),
        }
    }

    /// Every group element, built as products of stabilizer-chain coset
    /// representatives. Returns `None` when the order exceeds `limit`.
    pub fn elements(&self, limit: u64) -> Option<Vec<Permutation>> {
        let order = self.order_u64()?;
        if order > limit {
            return None;
        }
        let fp = &self.search.fp;
        let mut elems = vec![Permutation::identity(self.n)];
        for level in (0..fp.depth()).rev() {
            let level_gens: Vec<&Permutation> = self
                .search
                .gens
                .iter()
                .filter(|(l, _)| *l >= level)
                .map(|(_, p)| p)
                .collect();
            let v = fp.nodes[level].choice;
            // transversal by BFS over the orbit of v
            let mut reps: Vec<(usize, Permutation)> = vec![(v, Permutation::identity(self.n))];
            let mut i = 0;
            while i < reps.len() {
                let (_, t) = reps[i].clone();
                for gen in &level_gens {
                    let nt = gen.compose(&t);
                    let img = nt.apply(v);
                    if !reps.iter().any(|(w, _)| *w == img) {
                        reps.push((img, nt));
                    }
                }
                i += 1;
            }
            if reps.len() == 1 {
                continue;
            }
            elems = reps
                .iter()
                .flat_map(|(_, t)| elems.iter().map(move |h| t.compose(h)))
                .collect();
        }
        debug_assert_eq!(elems.len() as u64, order);
        Some(elems)
    }

    /// Canonical order; `order[p]` is the vertex that receives label `p`.
    fn canonical_order(&self, g: &Graph) -> Vec<usize> {
        search::canonical_order(g, &self.search)
    }
}

/// Label-invariant encoding: graph6 bytes of the canonically relabeled graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(pub Vec<u8>);

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.0).expect("graph6 is ASCII")
    }
}

/// Relabeling `v ↦ label(v)` that produces the canonical graph.
pub fn canonical_labeling(g: &Graph) -> Permutation {
    let order = AutGroup::new(g).canonical_order(g);
    let mut map = vec![0; g.n()];
    for (p, &v) in order.iter().enumerate() {
        map[v] = p;
    }
    Permutation::from_vec_unchecked(map)
}

pub fn canonical_graph(g: &Graph) -> Graph {
    g.relabel(canonical_labeling(g).as_slice())
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    CanonicalForm(to_graph6(&canonical_graph(g)))
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.n() == h.n() && g.edge_count() == h.edge_count() && canonical_form(g) == canonical_form(h)
}

/// All pairs `{u, v}` swapped by some automorphism.
pub fn transposable_pairs(g: &Graph) -> Vec<EdgePair> {
    let group = AutGroup::new(g);
    let gens = group.generators();
    let mut orbits = Orbits::new(g.n());
    for p in &gens {
        orbits.absorb(p);
    }
    let mut out = Vec::new();
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if !orbits.same(u, v) {
                continue;
            }
            let swapped = gens.iter().any(|p| p.apply(u) == v && p.apply(v) == u)
                || search::find_swap(g, u, v).is_some();
            if swapped {
                out.push(EdgePair { u, v });
            }
        }
    }
    out
}

/// Largest pairwise-transposable vertex set `t` and the bound `⌊(t−1)/2⌋`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransposableBound {
    pub clique: Vec<usize>,
    pub t: usize,
    pub bound: usize,
}

pub fn transposable_clique_lower_bound(g: &Graph) -> TransposableBound {
    let pairs = transposable_pairs(g);
    let tg = Graph::from_edges(g.n(), pairs.iter().map(|e| (e.u, e.v))).expect("pairs in range");
    let clique = max_clique(&tg);
    let t = clique.len();
    TransposableBound {
        clique,
        t,
        bound: t.saturating_sub(1) / 2,
    }
}
