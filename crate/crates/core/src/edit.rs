//! Exact asymmetric-index search over edge flips.
//!
//! Layer `k` holds one representative per `Aut(G)`-orbit of `k`-subsets of
//! the togglable pairs. Layer `k + 1` is obtained by extending every layer-`k`
//! representative by one pair and canonicalizing under the group, so the
//! search never tests two flip sets that differ by an automorphism of the
//! base graph. Equivalent flip sets give isomorphic graphs, so skipping
//! them cannot change the index.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use smallvec::SmallVec;
use thiserror::Error;

use crate::aut::{
    canonical_form, is_asymmetric, transposable_clique_lower_bound, AutGroup, Permutation,
};
use crate::graph::{EdgePair, Graph};

/// Removed edges plus added non-edges.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FlipSet {
    pub removed: Vec<EdgePair>,
    pub added: Vec<EdgePair>,
}

impl FlipSet {
    pub fn new(mut removed: Vec<EdgePair>, mut added: Vec<EdgePair>) -> Self {
        removed.sort_unstable();
        added.sort_unstable();
        Self { removed, added }
    }

    pub fn remove(pairs: &[(usize, usize)]) -> Self {
        Self::new(
            pairs
                .iter()
                .map(|&(a, b)| EdgePair::new(a, b).expect("distinct endpoints"))
                .collect(),
            Vec::new(),
        )
    }

    pub fn add(pairs: &[(usize, usize)]) -> Self {
        Self::new(
            Vec::new(),
            pairs
                .iter()
                .map(|&(a, b)| EdgePair::new(a, b).expect("distinct endpoints"))
                .collect(),
        )
    }

    pub fn size(&self) -> usize {
        self.removed.len() + self.added.len()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    /// Undoes `self` on the graph it produced.
    pub fn inverse(&self) -> FlipSet {
        FlipSet {
            removed: self.added.clone(),
            added: self.removed.clone(),
        }
    }

    /// The same pairs read against the complement: removals become additions.
    pub fn complemented(&self) -> FlipSet {
        self.inverse()
    }

    pub fn merged(&self, other: &FlipSet) -> FlipSet {
        let mut r = self.removed.clone();
        r.extend_from_slice(&other.removed);
        let mut a = self.added.clone();
        a.extend_from_slice(&other.added);
        FlipSet::new(r, a)
    }

    pub fn relabeled(&self, map: &[usize]) -> FlipSet {
        let f = |e: &EdgePair| {
            EdgePair::new(map[e.u], map[e.v]).expect("bijection keeps pairs distinct")
        };
        FlipSet::new(
            self.removed.iter().map(f).collect(),
            self.added.iter().map(f).collect(),
        )
    }

    pub fn display_with_offset(&self, offset: usize) -> String {
        let fmt_list = |v: &[EdgePair]| {
            v.iter()
                .map(|e| e.offset(offset).to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        format!(
            "remove [{}] add [{}]",
            fmt_list(&self.removed),
            fmt_list(&self.added)
        )
    }
}

impl fmt::Display for FlipSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with_offset(0))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EditError {
    #[error("cannot remove absent pair {0}")]
    RemoveAbsent(EdgePair),
    #[error("cannot add present edge {0}")]
    AddPresent(EdgePair),
    #[error("pair {0} is both removed and added")]
    Overlap(EdgePair),
    #[error("pair {0} repeated")]
    Repeated(EdgePair),
    #[error("vertex out of range in pair {0}")]
    OutOfRange(EdgePair),
}

pub fn apply_flips(g: &Graph, f: &FlipSet) -> Result<Graph, EditError> {
    let mut seen = HashSet::new();
    for e in f.removed.iter().chain(&f.added) {
        if e.v >= g.n() {
            return Err(EditError::OutOfRange(*e));
        }
        if !seen.insert(*e) {
            return Err(if f.removed.contains(e) && f.added.contains(e) {
                EditError::Overlap(*e)
            } else {
                EditError::Repeated(*e)
            });
        }
    }
    let mut h = g.clone();
    for e in &f.removed {
        if !g.adjacent(e.u, e.v) {
            return Err(EditError::RemoveAbsent(*e));
        }
        h.set(e.u, e.v, false);
    }
    for e in &f.added {
        if g.adjacent(e.u, e.v) {
            return Err(EditError::AddPresent(*e));
        }
        h.set(e.u, e.v, true);
    }
    Ok(h)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    #[default]
    Mixed,
    AddOnly,
    RemoveOnly,
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "mixed" => Ok(Mode::Mixed),
            "add-only" | "add" => Ok(Mode::AddOnly),
            "remove-only" | "remove" => Ok(Mode::RemoveOnly),
            _ => Err(format!(
                "unknown mode {s:?} (expected mixed, add-only or remove-only)"
            )),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Mixed => "mixed",
            Mode::AddOnly => "add-only",
            Mode::RemoveOnly => "remove-only",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    pub mode: Mode,
    pub max_k: usize,
    pub witness_cap: usize,
}

pub const DEFAULT_MAX_K: usize = 8;

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            mode: Mode::Mixed,
            max_k: DEFAULT_MAX_K,
            witness_cap: 1,
        }
    }
}

impl SearchConfig {
    pub fn with_mode(mode: Mode, max_k: usize) -> Self {
        Self {
            mode,
            max_k,
            witness_cap: 1,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    /// Flip sets generated (before deduplication), over all layers.
    pub nodes_explored: u64,
    pub graphs_tested: u64,
    pub dedup_hits: u64,
    /// Orbit representatives per layer, starting with layer 1.
    pub layer_sizes: Vec<u64>,
    pub group_order: String,
    /// Whether dedup used the whole group or only a generating subset.
    pub full_group: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AiResult {
    pub value: usize,
    pub witnesses: Vec<FlipSet>,
    pub mode: Mode,
    pub stats: SearchStats,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AiError {
    #[error("graphs on {n} vertices cannot be made asymmetric (2 <= n <= 5)")]
    NoAsymmetrization { n: usize },
    #[error("no asymmetrization within {budget} flips; index >= {lower_bound}")]
    BudgetExceeded {
        budget: usize,
        lower_bound: usize,
        /// Every subset of the togglable pairs was examined.
        exhausted: bool,
        stats: SearchStats,
    },
}

type Key = SmallVec<[u32; 8]>;

/// Group elements acting on pair indices.
struct PairAction {
    tables: Vec<Vec<u32>>,
    full: bool,
}

const ELEMENT_LIMIT: u64 = 1_000_000;
const TABLE_ENTRY_LIMIT: u64 = 1 << 26;

impl PairAction {
    fn build(group: &AutGroup, universe: &[EdgePair], n: usize) -> Self {
        let mut index = vec![u32::MAX; n * n];
        for (i, e) in universe.iter().enumerate() {
            index[e.u * n + e.v] = i as u32;
            index[e.v * n + e.u] = i as u32;
        }
        let table = |p: &Permutation| -> Vec<u32> {
            universe
                .iter()
                .map(|e| {
                    let t = index[p.apply(e.u) * n + p.apply(e.v)];
                    debug_assert_ne!(t, u32::MAX);
                    t
                })
                .collect()
        };
        let p_len = universe.len().max(1) as u64;
        let limit = ELEMENT_LIMIT.min(TABLE_ENTRY_LIMIT / p_len);
        if let Some(elems) = group.elements(limit) {
            let tables = elems
                .iter()
                .filter(|p| !p.is_identity())
                .map(table)
                .collect();
            return Self { tables, full: true };
        }
        // Generators, their inverses and pairwise products.
        let gens = group.generators();
        let mut base: Vec<Permutation> =
            gens.iter().flat_map(|p| [p.clone(), p.inverse()]).collect();
        let mut products = Vec::new();
        for a in &base {
            for b in &base {
                products.push(a.compose(b));
            }
        }
        base.extend(products);
        base.retain(|p| !p.is_identity());
        base.sort();
        base.dedup();
        Self {
            tables: base.iter().map(table).collect(),
            full: false,
        }
    }

    fn canon(&self, set: &Key) -> Key {
        let mut best = set.clone();
        best.sort_unstable();
        let mut img: Key = SmallVec::with_capacity(set.len());
        for t in &self.tables {
            img.clear();
            img.extend(set.iter().map(|&x| t[x as usize]));
            img.sort_unstable();
            if img < best {
                best.clone_from(&img);
            }
        }
        best
    }
}

fn universe(g: &Graph, mode: Mode) -> Vec<EdgePair> {
    let n = g.n();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let present = g.adjacent(u, v);
            let keep = match mode {
                Mode::Mixed => true,
                Mode::AddOnly => !present,
                Mode::RemoveOnly => present,
            };
            if keep {
                out.push(EdgePair { u, v });
            }
        }
    }
    out
}

fn key_to_flips(g: &Graph, universe: &[EdgePair], key: &Key) -> FlipSet {
    let (mut removed, mut added) = (Vec::new(), Vec::new());
    for &i in key {
        let e = universe[i as usize];
        if g.adjacent(e.u, e.v) {
            removed.push(e);
        } else {
            added.push(e);
        }
    }
    FlipSet::new(removed, added)
}

fn flipped_is_asymmetric(g: &Graph, universe: &[EdgePair], key: &Key) -> bool {
    let mut h = g.clone();
    for &i in key {
        let e = universe[i as usize];
        h.toggle(e.u, e.v);
    }
    is_asymmetric(&h)
}

const TEST_CHUNK: usize = 2048;

/// Minimum number of edge flips (within `cfg.mode`) making `g` asymmetric.
pub fn asymmetric_index(g: &Graph, cfg: &SearchConfig) -> Result<AiResult, AiError> {
    let n = g.n();
    if (2..=5).contains(&n) {
        return Err(AiError::NoAsymmetrization { n });
    }
    if is_asymmetric(g) {
        let stats = SearchStats {
            graphs_tested: 1,
            group_order: "1".into(),
            full_group: true,
            ..Default::default()
        };
        return Ok(AiResult {
            value: 0,
            witnesses: vec![FlipSet::default()],
            mode: cfg.mode,
            stats,
        });
    }
    layered_search(g, cfg, 1)
}

/// Asymmetrizing flip sets of size exactly `k`, one per orbit, up to
/// `cfg.witness_cap`. Smaller layers are generated but not tested.
pub fn witnesses_of_size(g: &Graph, cfg: &SearchConfig, k: usize) -> Result<AiResult, AiError> {
    let n = g.n();
    if (2..=5).contains(&n) {
        return Err(AiError::NoAsymmetrization { n });
    }
    if k == 0 {
        return asymmetric_index(g, &SearchConfig { max_k: 0, ..*cfg });
    }
    layered_search(g, &SearchConfig { max_k: k, ..*cfg }, k)
}

fn layered_search(g: &Graph, cfg: &SearchConfig, first_tested: usize) -> Result<AiResult, AiError> {
    let n = g.n();
    let mut stats = SearchStats {
        graphs_tested: 1,
        ..Default::default()
    };
    let group = AutGroup::new(g);
    stats.group_order = group.order().to_string();
    let uni = universe(g, cfg.mode);
    let action = &PairAction::build(&group, &uni, n);
    stats.full_group = action.full;
    let cap = cfg.witness_cap.max(1);
    let p = uni.len();
    let mut reps: Vec<Key> = vec![Key::new()];
    let top = cfg.max_k.min(p);
    for k in 1..=top {
        let mut cand: Vec<Key> = reps
            .par_iter()
            .flat_map_iter(|r| {
                (0..p as u32).filter(move |x| !r.contains(x)).map(move |x| {
                    let mut s = r.clone();
                    s.push(x);
                    action.canon(&s)
                })
            })
            .collect();
        stats.nodes_explored += cand.len() as u64;
        let before = cand.len();
        cand.par_sort_unstable();
        cand.dedup();
        stats.dedup_hits += (before - cand.len()) as u64;
        stats.layer_sizes.push(cand.len() as u64);
        reps = cand;
        if k < first_tested {
            continue;
        }
        let mut hits: Vec<Key> = Vec::new();
        for chunk in reps.chunks(TEST_CHUNK) {
            let found: Vec<Key> = chunk
                .par_iter()
                .filter(|key| flipped_is_asymmetric(g, &uni, key))
                .cloned()
                .collect();
            stats.graphs_tested += chunk.len() as u64;
            hits.extend(found);
            if hits.len() >= cap {
                break;
            }
        }
        if !hits.is_empty() {
            hits.truncate(cfg.witness_cap);
            let witnesses = hits.iter().map(|key| key_to_flips(g, &uni, key)).collect();
            return Ok(AiResult {
                value: k,
                witnesses,
                mode: cfg.mode,
                stats,
            });
        }
    }
    let lower_bound = if first_tested <= 1 { top + 1 } else { 0 };
    Err(AiError::BudgetExceeded {
        budget: cfg.max_k,
        lower_bound,
        exhausted: cfg.max_k >= p,
        stats,
    })
}

/// Subsets of `0..m` of size `k` in lexicographic order.
pub(crate) fn combinations(m: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut cur: Option<Vec<usize>> = (k <= m).then(|| (0..k).collect());
    std::iter::from_fn(move || {
        let out = cur.clone()?;
        let next = {
            let c = cur.as_mut().unwrap();
            let mut i = k;
            loop {
                if i == 0 {
                    break None;
                }
                i -= 1;
                if c[i] < m - k + i {
                    c[i] += 1;
                    for j in i + 1..k {
                        c[j] = c[j - 1] + 1;
                    }
                    break Some(());
                }
            }
        };
        if next.is_none() {
            cur = None;
        }
        Some(out)
    })
}

/// Number of isomorphism classes of asymmetric graphs reachable by removing
/// exactly `r` edges and adding exactly `s` non-edges.
pub fn count_nonisomorphic_asymmetrizations(g: &Graph, r: usize, s: usize) -> usize {
    let edges: Vec<EdgePair> = g.edges().collect();
    let non_edges: Vec<EdgePair> = g.non_edges().collect();
    let (edges, non_edges) = (&edges, &non_edges);
    let removals: Vec<Vec<usize>> = combinations(edges.len(), r).collect();
    let additions: Vec<Vec<usize>> = combinations(non_edges.len(), s).collect();
    let additions = &additions;
    let forms: HashSet<_> = removals
        .par_iter()
        .flat_map_iter(|rem| {
            additions.iter().filter_map(move |add| {
                let mut h = g.clone();
                for &i in rem {
                    h.set(edges[i].u, edges[i].v, false);
                }
                for &i in add {
                    h.set(non_edges[i].u, non_edges[i].v, true);
                }
                is_asymmetric(&h).then(|| canonical_form(&h))
            })
        })
        .collect();
    forms.len()
}

/// The transposable-clique bound `⌊(t−1)/2⌋`, reported next to search results.
pub fn lower_bound(g: &Graph) -> usize {
    transposable_clique_lower_bound(g).bound
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn combinations_enumerate_binomials() {
        assert_eq!(combinations(5, 2).count(), 10);
        assert_eq!(
            combinations(4, 0).collect::<Vec<_>>(),
            vec![Vec::<usize>::new()]
        );
        assert_eq!(combinations(3, 4).count(), 0);
        assert_eq!(
            combinations(4, 4).collect::<Vec<_>>(),
            vec![vec![0, 1, 2, 3]]
        );
    }

    #[test]
    fn apply_and_undo() {
        let c6 = cycle(6);
        let f = FlipSet::remove(&[(0, 1)]);
        let p = apply_flips(&c6, &f).unwrap();
        assert!(crate::aut::are_isomorphic(&p, &path(6)));
        assert_eq!(apply_flips(&p, &f.inverse()).unwrap(), c6);
        assert_eq!(apply_flips(&c6, &FlipSet::default()).unwrap(), c6);
    }

    #[test]
    fn apply_rejects_wrong_state() {
        let c6 = cycle(6);
        assert!(matches!(
            apply_flips(&c6, &FlipSet::remove(&[(0, 2)])),
            Err(EditError::RemoveAbsent(_))
        ));
        assert!(matches!(
            apply_flips(&c6, &FlipSet::add(&[(0, 1)])),
            Err(EditError::AddPresent(_))
        ));
        let both = FlipSet::new(vec![EdgePair { u: 0, v: 1 }], vec![EdgePair { u: 0, v: 1 }]);
        assert!(matches!(
            apply_flips(&c6, &both),
            Err(EditError::Overlap(_))
        ));
        assert!(matches!(
            apply_flips(&c6, &FlipSet::add(&[(0, 9)])),
            Err(EditError::OutOfRange(_))
        ));
    }

    #[test]
    fn small_graphs_have_no_index() {
        assert_eq!(
            asymmetric_index(&Graph::empty(4), &SearchConfig::default()),
            Err(AiError::NoAsymmetrization { n: 4 })
        );
        assert_eq!(
            asymmetric_index(&Graph::empty(1), &SearchConfig::default())
                .unwrap()
                .value,
            0
        );
    }

    #[test]
    fn paths_and_cycles() {
        let r = asymmetric_index(&path(9), &SearchConfig::default()).unwrap();
        assert_eq!(r.value, 1);
        let r = asymmetric_index(&path(6), &SearchConfig::default()).unwrap();
        assert_eq!(r.witnesses, vec![FlipSet::add(&[(1, 3)])]);
        let r = asymmetric_index(&cycle(7), &SearchConfig::default()).unwrap();
        assert_eq!(r.value, 2);
    }

    #[test]
    fn removals_never_break_cycle_symmetry() {
        let cfg = SearchConfig::with_mode(Mode::RemoveOnly, 7);
        match asymmetric_index(&cycle(7), &cfg) {
            Err(AiError::BudgetExceeded {
                lower_bound,
                exhausted,
                ..
            }) => {
                assert_eq!(lower_bound, 8);
                assert!(exhausted);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn complete_graph_on_six() {
        let k6 = Graph::empty(6).complement();
        let r = asymmetric_index(&k6, &SearchConfig::default()).unwrap();
        assert_eq!(r.value, 6);
        assert!(r.witnesses[0].added.is_empty());
    }

    #[test]
    fn budget_exceeded_reports_bound() {
        let k6 = Graph::empty(6).complement();
        let err = asymmetric_index(&k6, &SearchConfig::with_mode(Mode::Mixed, 3)).unwrap_err();
        assert!(matches!(
            err,
            AiError::BudgetExceeded {
                lower_bound: 4,
                exhausted: false,
                ..
            }
        ));
    }

    #[test]
    fn counting_on_six_cycle() {
        assert_eq!(count_nonisomorphic_asymmetrizations(&cycle(6), 0, 2), 1);
        let fig2 = apply_flips(&cycle(6), &FlipSet::add(&[(0, 2), (0, 3)])).unwrap();
        assert_eq!(count_nonisomorphic_asymmetrizations(&fig2, 0, 0), 1);
    }

    #[test]
    fn lower_bounds() {
        let star = Graph::from_edges(6, (1..6).map(|i| (0, i))).unwrap();
        assert_eq!(lower_bound(&star), 2);
        assert_eq!(lower_bound(&Graph::empty(6).complement()), 2);
    }
}
