//! Individualization-refinement search trees.
//!
//! Every search starts from one node, descends along the "first path"
//! (always individualizing the smallest vertex of the target cell) to a
//! discrete leaf, and then looks for other leaves that induce automorphisms
//! relative to that leaf.

use crate::graph::Graph;

use super::partition::Partition;
use super::perm::{Orbits, Permutation};

pub(crate) struct PathNode {
    pub part: Partition,
    pub target: usize,
    pub cell: Vec<usize>,
    pub choice: usize,
}

pub(crate) struct FirstPath {
    pub nodes: Vec<PathNode>,
    /// `(trace, cells)` of node `j`; index `nodes.len()` is the leaf.
    pub shape: Vec<(u64, usize)>,
    pub leaf: Partition,
}

impl FirstPath {
    pub fn build(g: &Graph, start: Partition, start_trace: u64) -> Self {
        let mut nodes = Vec::new();
        let mut shape = vec![(start_trace, start.cells)];
        let mut cur = start;
        while let Some(t) = cur.target_cell() {
            let mut cell = cur.cell(t).to_vec();
            cell.sort_unstable();
            let choice = cell[0];
            let (next, tr) = cur.individualize(g, choice);
            shape.push((tr, next.cells));
            nodes.push(PathNode {
                part: cur,
                target: t,
                cell,
                choice,
            });
            cur = next;
        }
        Self {
            nodes,
            shape,
            leaf: cur,
        }
    }

    pub fn depth(&self) -> usize {
        self.nodes.len()
    }

    /// Maps the first leaf onto `leaf`, position by position.
    pub fn leaf_map(&self, leaf: &Partition) -> Permutation {
        let mut map = vec![0; leaf.n()];
        for (p, &v) in self.leaf.lab.iter().enumerate() {
            map[v] = leaf.lab[p];
        }
        Permutation::from_vec_unchecked(map)
    }
}

pub(crate) fn is_automorphism_unchecked(g: &Graph, p: &[usize]) -> bool {
    let n = g.n();
    for u in 0..n {
        let pu = p[u];
        if g.deg(u) != g.deg(pu) {
            return false;
        }
        for v in g.neighbors(u) {
            if v > u && !g.adjacent(pu, p[v]) {
                return false;
            }
        }
    }
    true
}

/// Searches the subtree rooted at `node` (which sits at depth `depth`,
/// compared against the first path) for a leaf inducing an automorphism.
pub(crate) fn find_match(
    g: &Graph,
    fp: &FirstPath,
    node: &Partition,
    depth: usize,
) -> Option<Permutation> {
    if depth == fp.depth() {
        if !node.is_discrete() {
            return None;
        }
        let p = fp.leaf_map(node);
        return is_automorphism_unchecked(g, p.as_slice()).then_some(p);
    }
    let t = fp.nodes[depth].target;
    if node.len[t] != fp.nodes[depth].cell.len() || node.cell_of[node.lab[t]] != t {
        return None;
    }
    let mut cell = node.cell(t).to_vec();
    cell.sort_unstable();
    for x in cell {
        let (child, tr) = node.individualize(g, x);
        if (tr, child.cells) != fp.shape[depth + 1] {
            continue;
        }
        if let Some(p) = find_match(g, fp, &child, depth + 1) {
            return Some(p);
        }
    }
    None
}

/// Generators of the automorphism group, each tagged with the first-path
/// level at which it was found (it fixes the choices above that level).
pub(crate) struct GroupSearch {
    pub fp: FirstPath,
    pub gens: Vec<(usize, Permutation)>,
    /// Orbit length of the first-path choice at each level within the
    /// stabilizer of all earlier choices.
    pub orbit_lengths: Vec<usize>,
}

/// Runs the stabilizer-chain search. With `stop_at_first`, returns as soon
/// as one non-identity automorphism is known.
pub(crate) fn group_search(g: &Graph, stop_at_first: bool) -> GroupSearch {
    let (root, tr) = Partition::equitable(g);
    let fp = FirstPath::build(g, root, tr);
    let mut orbits = Orbits::new(g.n());
    let mut gens: Vec<(usize, Permutation)> = Vec::new();
    let mut orbit_lengths = vec![1; fp.depth()];
    for level in (0..fp.depth()).rev() {
        let node = &fp.nodes[level];
        let v = node.choice;
        let mut failed: Vec<usize> = Vec::new();
        for &w in &node.cell[1..] {
            if orbits.same(v, w) || failed.iter().any(|&f| orbits.same(f, w)) {
                continue;
            }
            let (child, tr) = node.part.individualize(g, w);
            let found = if (tr, child.cells) == fp.shape[level + 1] {
                find_match(g, &fp, &child, level + 1)
            } else {
                None
            };
            match found {
                Some(p) => {
                    orbits.absorb(&p);
                    gens.push((level, p));
                    if stop_at_first {
                        return GroupSearch {
                            fp,
                            gens,
                            orbit_lengths,
                        };
                    }
                }
                None => failed.push(w),
            }
        }
        orbit_lengths[level] = node.cell.iter().filter(|&&w| orbits.same(v, w)).count();
    }
    GroupSearch {
        fp,
        gens,
        orbit_lengths,
    }
}

/// Best leaf seen while building a canonical form.
struct CanonState {
    best_bits: Vec<u64>,
    best_lab: Vec<usize>,
    leaves: u64,
}

fn leaf_bits(g: &Graph, lab: &[usize]) -> Vec<u64> {
    let n = g.n();
    let total = n * n.saturating_sub(1) / 2;
    let mut bits = vec![0u64; total.div_ceil(64)];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if g.adjacent(lab[i], lab[j]) {
                bits[k / 64] |= 1 << (63 - k % 64);
            }
            k += 1;
        }
    }
    bits
}

fn canon_dfs(
    g: &Graph,
    gs: &GroupSearch,
    node: &Partition,
    prefix: &mut Vec<usize>,
    on_first_path: bool,
    st: &mut CanonState,
) {
    let Some(t) = node.target_cell() else {
        st.leaves += 1;
        let bits = leaf_bits(g, &node.lab);
        if st.best_lab.is_empty() || bits < st.best_bits {
            st.best_bits = bits;
            st.best_lab = node.lab.clone();
        }
        return;
    };
    let depth = prefix.len();
    // Automorphisms fixing the prefix pointwise permute equivalent children.
    let mut orb = Orbits::new(g.n());
    for (level, p) in &gs.gens {
        let fixes = if on_first_path {
            *level >= depth
        } else {
            prefix.iter().all(|&x| p.apply(x) == x)
        };
        if fixes {
            orb.absorb(p);
        }
    }
    let mut cell = node.cell(t).to_vec();
    cell.sort_unstable();
    let mut done: Vec<usize> = Vec::new();
    for x in cell {
        let r = orb.find(x);
        if done.contains(&r) {
            continue;
        }
        done.push(r);
        let (child, _) = node.individualize(g, x);
        let stays = on_first_path && depth < gs.fp.depth() && gs.fp.nodes[depth].choice == x;
        prefix.push(x);
        canon_dfs(g, gs, &child, prefix, stays, st);
        prefix.pop();
    }
}

/// Canonical vertex order: position `p` of the result holds the vertex that
/// receives label `p`.
pub(crate) fn canonical_order(g: &Graph, gs: &GroupSearch) -> Vec<usize> {
    if g.n() == 0 {
        return Vec::new();
    }
    let (root, _) = Partition::equitable(g);
    let mut st = CanonState {
        best_bits: Vec::new(),
        best_lab: Vec::new(),
        leaves: 0,
    };
    canon_dfs(g, gs, &root, &mut Vec::new(), true, &mut st);
    st.best_lab
}

/// Looks for an automorphism with `u ↦ v` and `v ↦ u`.
pub(crate) fn find_swap(g: &Graph, u: usize, v: usize) -> Option<Permutation> {
    let (root, _) = Partition::equitable(g);
    if root.cell_of[u] != root.cell_of[v] {
        return None;
    }
    let step = |p: &Partition, x: usize| -> (Partition, u64) {
        if p.len[p.cell_of[x]] > 1 {
            p.individualize(g, x)
        } else {
            (p.clone(), 0)
        }
    };
    let (a1, ta1) = step(&root, u);
    let (b1, tb1) = step(&root, v);
    if (ta1, a1.cells) != (tb1, b1.cells) || a1.cell_of[v] != b1.cell_of[u] {
        return None;
    }
    let (a2, ta2) = step(&a1, v);
    let (b2, tb2) = step(&b1, u);
    if (ta2, a2.cells) != (tb2, b2.cells) || a2.pos[v] != b2.pos[u] || a2.pos[u] != b2.pos[v] {
        return None;
    }
    let fp = FirstPath::build(g, a2, ta2);
    find_match(g, &fp, &b2, 0)
}
