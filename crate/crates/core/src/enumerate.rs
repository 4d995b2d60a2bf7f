//! Isomorphism-class enumeration by one-vertex augmentation.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::aut::{canonical_graph, is_asymmetric, CanonicalForm};
use crate::graph::Graph;
use crate::graph6::to_graph6;

fn augment(prev: &[Graph], all_subsets: bool) -> Vec<Graph> {
    let found: BTreeMap<CanonicalForm, Graph> = prev
        .par_iter()
        .flat_map_iter(|g| {
            let n = g.n();
            let subsets: Box<dyn Iterator<Item = u64>> = if all_subsets {
                Box::new(0..1u64 << n)
            } else {
                Box::new((0..n).map(|v| 1u64 << v))
            };
            subsets.map(move |mask| {
                let mut h = g.disjoint_union(&Graph::empty(1));
                for v in 0..n {
                    if mask >> v & 1 == 1 {
                        h.set(v, n, true);
                    }
                }
                let h = canonical_graph(&h);
                (CanonicalForm(to_graph6(&h)), h)
            })
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    found.into_values().collect()
}

/// One canonical representative per isomorphism class on `n` vertices,
/// sorted by canonical form. Practical up to `n = 8`.
pub fn graph_classes(n: usize) -> Vec<Graph> {
    assert!(n <= 10, "class enumeration is limited to n <= 10");
    let mut classes = vec![Graph::empty(0)];
    for _ in 0..n {
        classes = augment(&classes, true);
    }
    classes
}

pub fn asymmetric_classes(n: usize) -> Vec<Graph> {
    graph_classes(n).into_iter().filter(is_asymmetric).collect()
}

/// Unlabeled trees on `n >= 1` vertices.
pub fn trees(n: usize) -> Vec<Graph> {
    assert!((1..=20).contains(&n));
    let mut out = vec![Graph::empty(1)];
    for _ in 1..n {
        out = augment(&out, false);
    }
    out
}
