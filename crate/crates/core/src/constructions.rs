//! Vertex-extension rule, asymmetric trees, and the edit sets behind the
//! complete-graph, split-graph and pendant-cycle bounds.

use crate::edit::FlipSet;
use crate::families::{cycle, path};
use crate::graph::{EdgePair, Graph};

/// Which branch of the one-vertex extension was taken.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Extension {
    /// No pendant vertex: hang the new vertex off a maximum-degree vertex.
    MaxDegree { anchor: usize },
    /// Extend the pendant vertex farthest from any vertex of degree >= 3.
    PendantTail { anchor: usize },
}

impl Extension {
    pub fn anchor(self) -> usize {
        match self {
            Extension::MaxDegree { anchor } | Extension::PendantTail { anchor } => anchor,
        }
    }
}

/// Picks the attachment vertex for the one-vertex, one-edge extension.
/// Ties go to the lowest index.
pub fn extension_anchor(g: &Graph) -> Option<Extension> {
    if g.n() == 0 {
        return None;
    }
    let deg = g.degrees();
    let pendants: Vec<usize> = (0..g.n()).filter(|&v| deg[v] == 1).collect();
    if pendants.is_empty() {
        let max = *deg.iter().max().unwrap();
        let anchor = deg.iter().position(|&d| d == max).unwrap();
        return Some(Extension::MaxDegree { anchor });
    }
    let hubs: Vec<usize> = (0..g.n()).filter(|&v| deg[v] >= 3).collect();
    // distance to the nearest vertex of degree >= 3; unreachable sorts last
    let reach = |u: usize| -> Option<usize> {
        let d = g.distances_from(u);
        hubs.iter().filter_map(|&h| d[h]).min()
    };
    let mut best: Option<(usize, usize)> = None;
    for &u in &pendants {
        if let Some(d) = reach(u) {
            if best.is_none_or(|(_, bd)| d > bd) {
                best = Some((u, d));
            }
        }
    }
    let anchor = best.map(|(u, _)| u).unwrap_or(pendants[0]);
    Some(Extension::PendantTail { anchor })
}

/// Adds vertex `n` and the edge joining it to the chosen anchor.
pub fn extend_by_one(g: &Graph) -> (Graph, Extension) {
    let ext = extension_anchor(g).expect("extension needs a nonempty graph");
    let n = g.n();
    let mut h = g.disjoint_union(&Graph::empty(1));
    h.set(ext.anchor(), n, true);
    (h, ext)
}

/// Spider with legs of length 1, 2 and 3 around center 0: the smallest
/// asymmetric tree.
pub fn smallest_asymmetric_tree() -> Graph {
    Graph::from_edges(7, [(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (5, 6)]).expect("in range")
}

/// Asymmetric tree on `m >= 7` vertices grown from the seven-vertex tree by
/// repeated extension.
pub fn asymmetric_tree(m: usize) -> Graph {
    assert!(m >= 7, "no asymmetric tree on {m} vertices");
    let mut t = smallest_asymmetric_tree();
    while t.n() < m {
        t = extend_by_one(&t).0;
    }
    t
}

/// Removals turning `K_n` into the complement of (asymmetric tree on
/// `0..n-1`) + isolated vertex `n - 1`. Needs `n >= 8`; size `n - 2`.
pub fn complete_graph_flips(n: usize) -> FlipSet {
    assert!(n >= 8);
    FlipSet::new(asymmetric_tree(n - 1).edges().collect(), Vec::new())
}

/// Removals turning `K_n` into the complement of a forest of the given
/// trees plus as many isolated vertices as remain. Trees are laid out
/// after `isolated_first` leading isolated vertices.
pub fn complete_minus_forest(n: usize, isolated_first: usize, trees: &[Graph]) -> FlipSet {
    let mut off = isolated_first;
    let mut removed = Vec::new();
    for t in trees {
        removed.extend(t.edges().map(|e| EdgePair {
            u: e.u + off,
            v: e.v + off,
        }));
        off += t.n();
    }
    assert!(off <= n, "forest does not fit in K_{n}");
    FlipSet::new(removed, Vec::new())
}

/// Edits for `K_s + t K_1`: carve an asymmetric tree out of the clique,
/// thread `t - 1` of the isolated vertices into a path, and hang that path
/// off vertex `s - 1` (the unique maximum-degree vertex of the clique part).
/// Size `s + t - 3` for `t >= 2`, `s - 2` for `t = 1`.
pub fn split_flips(s: usize, t: usize) -> FlipSet {
    assert!(s >= 8 && t >= 1);
    let removed: Vec<EdgePair> = asymmetric_tree(s - 1).edges().collect();
    let mut added = Vec::new();
    if t >= 2 {
        for i in 0..t.saturating_sub(2) {
            added.push(EdgePair {
                u: s + i,
                v: s + i + 1,
            });
        }
        added.push(EdgePair { u: s - 1, v: s });
    }
    FlipSet::new(removed, added)
}

/// `C_l + P_6 + ... + P_{l+5}` and the `l` edges joining the first vertex of
/// path `i` to cycle vertex `i`.
pub fn pendant_cycle(l: usize) -> (Graph, FlipSet) {
    let mut g = cycle(l);
    let mut links = Vec::new();
    for i in 0..l {
        links.push(EdgePair { u: i, v: g.n() });
        g = g.disjoint_union(&path(6 + i));
    }
    (g, FlipSet::new(Vec::new(), links))
}
