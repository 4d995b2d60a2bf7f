use std::collections::{BTreeMap, BTreeSet};
use std::str::FromStr;
use std::sync::OnceLock;

use rayon::prelude::*;

use super::formulas::{self, Variant};
use super::{ClaimReport, ClaimSpec, Evidence, Params, Ranges, Status, SuiteConfig, SuiteError};
use crate::aut::{
    are_isomorphic, canonical_form, find_nontrivial_automorphism, is_asymmetric, AutGroup,
};
use crate::aut::{is_automorphism, transposable_clique_lower_bound, Permutation};
use crate::constructions::{
    complete_graph_flips, complete_minus_forest, extend_by_one, pendant_cycle, Extension,
};
use crate::edit::{
    apply_flips, asymmetric_index, count_nonisomorphic_asymmetrizations, witnesses_of_size,
    AiError, AiResult, FlipSet, Mode, SearchConfig, SearchStats,
};
use crate::enumerate::{graph_classes, trees};
use crate::families::{paper_witness, FamilySpec, Sign, WitnessId};
use crate::graph::Graph;
use crate::graph6::to_graph6_string;

pub(super) const SUITE_BOUND_ID: &str = "Thm1.2";

pub(super) static CATALOG: &[ClaimSpec] = &[
    ClaimSpec {
        id: "Sec1-small-order",
        summary: "no asymmetric graph on 2..5 vertices; one exists on 6",
        defaults: small_order_defaults,
        check: small_order,
    },
    ClaimSpec {
        id: "Prop1.1",
        summary: "Aut(G) = Aut(complement of G)",
        defaults: prop1_1_defaults,
        check: prop1_1,
    },
    ClaimSpec {
        id: "Prop1.2",
        summary: "ai(G) = ai(complement of G)",
        defaults: prop1_2_defaults,
        check: prop1_2,
    },
    ClaimSpec {
        id: "Prop1.3",
        summary: "join of non-isomorphic asymmetric graphs is asymmetric",
        defaults: six_only,
        check: prop1_3,
    },
    ClaimSpec {
        id: "Prop1.4",
        summary: "disjoint union of non-isomorphic asymmetric graphs is asymmetric",
        defaults: six_only,
        check: prop1_4,
    },
    ClaimSpec {
        id: "Lemma1.1",
        summary: "one vertex and one edge extend an asymmetric graph asymmetrically",
        defaults: lemma1_1_defaults,
        check: lemma1_1,
    },
    ClaimSpec {
        id: "Thm1.1",
        summary: "ai(G) is finite for n >= 6",
        defaults: six_only,
        check: thm1_1,
    },
    ClaimSpec {
        id: SUITE_BOUND_ID,
        summary: "0 <= ai(G) <= n(n-1)/2 - (n-2)",
        defaults: six_only,
        check: thm1_2,
    },
    ClaimSpec {
        id: "Lemma1.4",
        summary: "t pairwise-transposable vertices force ai >= floor((t-1)/2)",
        defaults: lemma1_4_defaults,
        check: lemma1_4,
    },
    ClaimSpec {
        id: "Thm2.1",
        summary: "ai(P_n) = 1 for n >= 6",
        defaults: six_to_twelve,
        check: thm2_1,
    },
    ClaimSpec {
        id: "Thm2.2",
        summary: "ai(C_n) = 2 for n >= 6",
        defaults: six_to_twelve,
        check: thm2_2,
    },
    ClaimSpec {
        id: "Thm2.2-remove-only",
        summary: "no set of removals makes C_n asymmetric",
        defaults: six_to_twelve,
        check: thm2_2_remove_only,
    },
    ClaimSpec {
        id: "Sec2.2-two-chords",
        summary: "every chord pair with 2 < k < l, m >= 3 makes C_n asymmetric",
        defaults: six_to_twelve,
        check: two_chords,
    },
    ClaimSpec {
        id: "Sec2.2-aut-cycle",
        summary: "Aut(C_n) is the full symmetric group",
        defaults: aut_cycle_defaults,
        check: aut_cycle,
    },
    ClaimSpec {
        id: "Lemma2.1",
        summary: "partitions of i into distinct parts >= 3 number floor((i-5)/2)",
        defaults: lemma2_1_defaults,
        check: lemma2_1,
    },
    ClaimSpec {
        id: "Rem2.1-text",
        summary: "two-chord asymmetrizations of C_n, running-text formula",
        defaults: six_to_twelve,
        check: rem2_1_text,
    },
    ClaimSpec {
        id: "Rem2.1-remark",
        summary: "two-chord asymmetrizations of C_n, remark formula",
        defaults: six_to_twelve,
        check: rem2_1_remark,
    },
    ClaimSpec {
        id: "Thm2.3",
        summary: "ai(W_n) = 2, W_n on n vertices",
        defaults: thm2_3_defaults,
        check: thm2_3,
    },
    ClaimSpec {
        id: "Thm2.3-alt",
        summary: "ai = 2 for the wheel whose hub has degree n",
        defaults: thm2_3_alt_defaults,
        check: thm2_3_alt,
    },
    ClaimSpec {
        id: "Thm2.4",
        summary: "ai(C_{n^2 +- 1}(1, n)) = 2 and the three explicit witnesses",
        defaults: thm2_4_defaults,
        check: thm2_4,
    },
    ClaimSpec {
        id: "Thm2.5",
        summary: "floor((n-1)/2) <= ai(K_{1,n-1}) <= n-1",
        defaults: thm2_5_defaults,
        check: thm2_5,
    },
    ClaimSpec {
        id: "Thm2.6",
        summary: "ai(K_6) = ai(K_7) = 6",
        defaults: thm2_6_defaults,
        check: thm2_6,
    },
    ClaimSpec {
        id: "Thm2.6-upper",
        summary: "ai(K_n) <= n-2 for n >= 8",
        defaults: eight_to_twelve,
        check: thm2_6_upper,
    },
    ClaimSpec {
        id: "Thm2.6-printed-lower",
        summary: "n - floor((n-1)/7) + 4 <= ai(K_n) <= n-2",
        defaults: eight_to_twelve,
        check: thm2_6_printed_lower,
    },
    ClaimSpec {
        id: "Thm2.6-asymptotic-lower",
        summary: "6 floor(n/7) <= ai(K_n)",
        defaults: thm2_6_asymptotic_defaults,
        check: thm2_6_asymptotic_lower,
    },
    ClaimSpec {
        id: "Sec2.5-K28",
        summary: "ai(K_28) <= 25 via three asymmetric 9-vertex trees",
        defaults: no_params,
        check: k28,
    },
    ClaimSpec {
        id: "Thm2.8",
        summary: "ai(P_r x P_s) = 1 for r, s >= 2",
        defaults: thm2_8_defaults,
        check: thm2_8,
    },
    ClaimSpec {
        id: "Thm2.9",
        summary: "ai(P_r x C_s) = 2 for r >= 2, s >= 3",
        defaults: thm2_9_defaults,
        check: thm2_9,
    },
    ClaimSpec {
        id: "Thm2.10",
        summary: "ai(C_r x C_s) = 3 for r, s >= 10",
        defaults: thm2_10_defaults,
        check: thm2_10,
    },
    ClaimSpec {
        id: "Thm2.10-exploratory",
        summary: "exact ai of a torus below the stated range",
        defaults: thm2_10_exploratory_defaults,
        check: thm2_10_exploratory,
    },
    ClaimSpec {
        id: "Thm3.1",
        summary: "min ai(G_i) <= ai(G) <= sum ai(G_i) over components",
        defaults: thm3_1_defaults,
        check: thm3_1,
    },
    ClaimSpec {
        id: "Ex3.1",
        summary: "C_l + P_6 + ... + P_{l+5} is asymmetrized by l added edges",
        defaults: ex3_1_defaults,
        check: ex3_1,
    },
    ClaimSpec {
        id: "Thm3.2",
        summary: "ai(K_s + t K_1) <= s - 2 + t - 1",
        defaults: thm3_2_defaults,
        check: thm3_2,
    },
];

// ---- parameters ----

fn params(pairs: &[(&str, String)]) -> Params {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

fn get<T: FromStr>(claim: &str, p: &Params, key: &str) -> Result<T, SuiteError> {
    let raw = p.get(key).ok_or_else(|| SuiteError::MissingParam {
        claim: claim.into(),
        param: key.into(),
    })?;
    raw.parse().map_err(|_| SuiteError::BadParam {
        claim: claim.into(),
        param: key.into(),
        value: raw.clone(),
    })
}

fn span(r: Option<(usize, usize)>, default: (usize, usize)) -> std::ops::RangeInclusive<usize> {
    let (lo, hi) = r.unwrap_or(default);
    lo..=hi
}

fn over_n(r: &Ranges, default: (usize, usize)) -> Vec<Params> {
    span(r.n, default)
        .map(|n| params(&[("n", n.to_string())]))
        .collect()
}

fn over_rs(r: &Ranges, dr: (usize, usize), ds: (usize, usize), ordered: bool) -> Vec<Params> {
    let mut out = Vec::new();
    for a in span(r.r, dr) {
        for b in span(r.s, ds) {
            if !ordered || a <= b {
                out.push(params(&[("r", a.to_string()), ("s", b.to_string())]));
            }
        }
    }
    out
}

fn no_params(_: &Ranges) -> Vec<Params> {
    vec![Params::new()]
}

fn six_only(r: &Ranges) -> Vec<Params> {
    over_n(r, (6, 6))
}

fn six_to_twelve(r: &Ranges) -> Vec<Params> {
    over_n(r, (6, 12))
}

fn eight_to_twelve(r: &Ranges) -> Vec<Params> {
    over_n(r, (8, 12))
}

fn small_order_defaults(r: &Ranges) -> Vec<Params> {
    over_n(r, (2, 6))
}

fn prop1_1_defaults(r: &Ranges) -> Vec<Params> {
    over_n(r, (4, 6))
}

fn prop1_2_defaults(r: &Ranges) -> Vec<Params> {
    span(r.n, (6, 6))
        .filter(|n| (6..=MAX_INDEXED_CLASS_N).contains(n))
        .flat_map(|n| {
            (0..classes(n).len())
                .map(move |i| params(&[("n", n.to_string()), ("class", i.to_string())]))
        })
        .collect()
}

fn lemma1_1_defaults(r: &Ranges) -> Vec<Params> {
    over_n(r, (6, 8))
}

fn lemma1_4_defaults(r: &Ranges) -> Vec<Params> {
    let graphs: Vec<String> = match r.n {
        Some(_) => span(r.n, (6, 6))
            .flat_map(|n| [format!("cycle:{n}"), format!("star:{n}")])
            .collect(),
        None => [
            "path:6", "cycle:6", "cycle:7", "cycle:8", "cycle:9", "cycle:10", "wheel:7",
        ]
        .into_iter()
        .chain(["star:6", "star:7", "star:8", "complete:6", "complete:7"])
        .map(String::from)
        .collect(),
    };
    graphs
        .into_iter()
        .map(|g| params(&[("graph", g)]))
        .collect()
}

fn aut_cycle_defaults(r: &Ranges) -> Vec<Params> {
    over_n(r, (6, 8))
}

fn lemma2_1_defaults(r: &Ranges) -> Vec<Params> {
    span(r.n, (6, 60))
        .map(|i| params(&[("i", i.to_string())]))
        .collect()
}

fn thm2_3_defaults(r: &Ranges) -> Vec<Params> {
    over_n(r, (6, 10))
}

fn thm2_3_alt_defaults(r: &Ranges) -> Vec<Params> {
    over_n(r, (6, 9))
}

fn thm2_4_defaults(r: &Ranges) -> Vec<Params> {
    span(r.n, (4, 4))
        .flat_map(|n| ["+", "-"].map(|s| params(&[("n", n.to_string()), ("sign", s.to_string())])))
        .collect()
}

fn thm2_5_defaults(r: &Ranges) -> Vec<Params> {
    over_n(r, (6, 9))
}

fn thm2_6_defaults(r: &Ranges) -> Vec<Params> {
    over_n(r, (6, 7))
}

fn thm2_6_asymptotic_defaults(r: &Ranges) -> Vec<Params> {
    over_n(r, (8, 8))
}

fn thm2_8_defaults(r: &Ranges) -> Vec<Params> {
    over_rs(r, (2, 4), (2, 4), true)
}

fn thm2_9_defaults(r: &Ranges) -> Vec<Params> {
    over_rs(r, (2, 3), (3, 4), false)
}

fn thm2_10_defaults(r: &Ranges) -> Vec<Params> {
    over_rs(r, (10, 10), (10, 10), true)
}

fn thm2_10_exploratory_defaults(r: &Ranges) -> Vec<Params> {
    over_rs(r, (6, 6), (7, 7), false)
}

fn thm3_1_defaults(_: &Ranges) -> Vec<Params> {
    [
        "path:6;path:7",
        "cycle:6;path:7",
        "wheel:7;path:6",
        "cycle:6;cycle:7",
        "path:6;path:6",
    ]
    .into_iter()
    .map(|c| params(&[("components", c.to_string())]))
    .collect()
}

fn ex3_1_defaults(r: &Ranges) -> Vec<Params> {
    span(r.n, (3, 4))
        .map(|l| params(&[("l", l.to_string())]))
        .collect()
}

fn thm3_2_defaults(r: &Ranges) -> Vec<Params> {
    let pairs: Vec<(usize, usize)> = match r.s {
        Some(_) => span(r.s, (8, 8))
            .flat_map(|s| (1..=3).map(move |t| (s, t)))
            .collect(),
        None => vec![(8, 1), (8, 2), (9, 3)],
    };
    pairs
        .into_iter()
        .map(|(s, t)| params(&[("s", s.to_string()), ("t", t.to_string())]))
        .collect()
}

// ---- shared machinery ----

/// Class lists are enumerated at most once per process.
const MAX_CLASS_N: usize = 8;
/// Per-class exact searches stop here.
const MAX_INDEXED_CLASS_N: usize = 7;

fn classes(n: usize) -> &'static [Graph] {
    static CACHE: [OnceLock<Vec<Graph>>; MAX_CLASS_N + 1] =
        [const { OnceLock::new() }; MAX_CLASS_N + 1];
    CACHE[n].get_or_init(|| graph_classes(n))
}

fn asymmetric_class_list(n: usize) -> Vec<&'static Graph> {
    classes(n).iter().filter(|g| is_asymmetric(g)).collect()
}

fn g6(g: &Graph) -> String {
    to_graph6_string(g)
}

fn search_cfg(cfg: &SuiteConfig, mode: Mode) -> SearchConfig {
    SearchConfig {
        mode,
        max_k: cfg.budget,
        witness_cap: cfg.witness_cap,
    }
}

fn values(pairs: &[(&str, String)]) -> Evidence {
    Evidence::Values {
        values: pairs
            .iter()
            .map(|(k, v)| (k.to_string(), v.clone()))
            .collect::<BTreeMap<_, _>>(),
    }
}

fn exhaustion(g: &Graph, mode: Mode, below: usize, stats: &SearchStats) -> Evidence {
    Evidence::Exhaustion {
        graph: g6(g),
        mode,
        below,
        layer_sizes: stats.layer_sizes.clone(),
        group_order: stats.group_order.clone(),
    }
}

/// `Ok(witness)` if `flips` asymmetrizes `g`, else `Err(automorphism)`.
fn check_flips(g: &Graph, flips: &FlipSet) -> Result<Evidence, Evidence> {
    let h = apply_flips(g, flips).expect("construction flips apply cleanly");
    match find_nontrivial_automorphism(&h) {
        None => Ok(Evidence::Witness {
            graph: g6(g),
            flips: flips.clone(),
            result: g6(&h),
        }),
        Some(p) => Err(Evidence::Automorphism {
            graph: g6(&h),
            permutation: p,
        }),
    }
}

fn check_paper_witness(id: WitnessId) -> (Graph, FlipSet, Result<Evidence, Evidence>) {
    let (spec, flips) =
        paper_witness(id).expect("catalog witness parameters are validated by callers");
    let g = spec.generate().expect("valid family");
    let res = check_flips(&g, &flips);
    (g, flips, res)
}

fn result_evidence(g: &Graph, r: &AiResult) -> Vec<Evidence> {
    let mut out: Vec<Evidence> = r
        .witnesses
        .iter()
        .map(|w| check_flips(g, w).expect("search witnesses are asymmetric"))
        .collect();
    if r.value > 0 {
        out.push(exhaustion(g, r.mode, r.value, &r.stats));
    }
    out
}

fn index_text(res: &Result<AiResult, AiError>) -> String {
    match res {
        Ok(r) => format!("ai = {}", r.value),
        Err(AiError::NoAsymmetrization { .. }) => "no asymmetrization".into(),
        Err(AiError::BudgetExceeded { lower_bound, .. }) => format!("ai >= {lower_bound}"),
    }
}

/// Runs the exact search and grades `lo <= ai <= hi`. Returns the value if found.
fn grade_index(
    rep: &mut ClaimReport,
    g: &Graph,
    lo: usize,
    hi: Option<usize>,
    cfg: &SuiteConfig,
) -> Option<usize> {
    let res = asymmetric_index(g, &search_cfg(cfg, Mode::Mixed));
    rep.computed = index_text(&res);
    match res {
        Ok(r) => {
            rep.ai_values.push((g.n(), r.value));
            rep.evidence.extend(result_evidence(g, &r));
            let ok = r.value >= lo && hi.is_none_or(|h| r.value <= h);
            rep.status = if ok {
                Status::Confirmed
            } else {
                Status::Refuted
            };
            Some(r.value)
        }
        Err(AiError::NoAsymmetrization { n }) => {
            rep.evidence
                .push(Evidence::NoAsymmetrization { graph: g6(g), n });
            rep.status = Status::Refuted;
            None
        }
        Err(AiError::BudgetExceeded {
            lower_bound, stats, ..
        }) => {
            if hi.is_some_and(|h| lower_bound > h) {
                rep.evidence
                    .push(exhaustion(g, Mode::Mixed, lower_bound, &stats));
                rep.status = Status::Refuted;
            } else if hi.is_none() && lower_bound >= lo {
                rep.evidence
                    .push(exhaustion(g, Mode::Mixed, lower_bound, &stats));
                rep.status = Status::Confirmed;
            } else {
                rep.status = Status::BudgetExceeded;
            }
            None
        }
    }
}

fn exact(rep: &mut ClaimReport, g: &Graph, expected: usize, cfg: &SuiteConfig) -> Option<usize> {
    rep.expected = format!("ai = {expected}");
    grade_index(rep, g, expected, Some(expected), cfg)
}

fn not_applicable(mut rep: ClaimReport, why: impl Into<String>) -> Result<ClaimReport, SuiteError> {
    rep.status = Status::NotApplicable;
    if rep.expected.is_empty() {
        rep.expected = "outside the stated hypotheses".into();
    }
    rep.computed = "-".into();
    rep.add_note(why);
    Ok(rep)
}

/// Records a paper witness. A failing witness adds an automorphism and a
/// note but leaves the status to the value check.
fn attach_paper_witness(rep: &mut ClaimReport, id: WitnessId, label: &str) -> bool {
    let (_, flips, res) = check_paper_witness(id);
    match res {
        Ok(ev) => {
            rep.evidence.insert(0, ev);
            true
        }
        Err(ev) => {
            rep.evidence.push(ev);
            rep.add_note(format!(
                "{label} ({flips}) leaves a nontrivial automorphism"
            ));
            false
        }
    }
}

fn labeled_graph(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for v in 1..n {
        for u in 0..v {
            if mask >> bit & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::from_edges(n, edges).expect("in range")
}

// ---- section 1 ----

fn small_order(id: &str, p: &Params, _: &SuiteConfig) -> Result<ClaimReport, SuiteError> {
    let n: usize = get(id, p, "n")?;
    let mut rep = ClaimReport::new(id, p);
    if !(2..=7).contains(&n) {
        return not_applicable(rep, "checked for 2 <= n <= 7");
    }
    if n <= 5 {
        let pairs = n * (n - 1) / 2;
        let found = (0..1u64 << pairs)
            .into_par_iter()
            .find_first(|&m| is_asymmetric(&labeled_graph(n, m)));
        rep.expected = "no asymmetric graph".into();
        rep.computed = format!(
            "{} of {} labeled graphs asymmetric",
            found.is_some() as u8,
            1u64 << pairs
        );
        rep.status = match found {
            None => {
                rep.evidence
                    .push(values(&[("labeled graphs", (1u64 << pairs).to_string())]));
                Status::Confirmed
            }
            Some(m) => {
                rep.evidence
                    .push(values(&[("asymmetric graph", g6(&labeled_graph(n, m)))]));
                Status::Refuted
            }
        };
    } else {
        let asym = asymmetric_class_list(n);
        rep.expected = "an asymmetric graph exists".into();
        rep.computed = format!("{} asymmetric classes of {}", asym.len(), classes(n).len());
        match asym.first() {
            Some(g) => {
                rep.evidence.push(values(&[("example", g6(g))]));
                rep.status = Status::Confirmed;
            }
            None => {
                rep.evidence
                    .push(values(&[("classes", classes(n).len().to_string())]));
                rep.status = Status::Refuted;
            }
        }
    }
    Ok(rep)
}

fn prop1_1(id: &str, p: &Params, _: &SuiteConfig) -> Result<ClaimReport, SuiteError> {
    let n: usize = get(id, p, "n")?;
    let mut rep = ClaimReport::new(id, p);
    if !(1..=MAX_CLASS_N).contains(&n) {
        return not_applicable(
            rep,
            format!("class enumeration covers 1 <= n <= {MAX_CLASS_N}"),
        );
    }
    rep.expected = "Aut(G) = Aut(complement) for every class".into();
    let failures: Vec<Evidence> = classes(n)
        .par_iter()
        .filter_map(|g| {
            let h = g.complement();
            let (a, b) = (AutGroup::new(g), AutGroup::new(&h));
            let bad = |x: &Graph, gens: Vec<Permutation>| {
                gens.into_iter().find(|q| !is_automorphism(x, q).unwrap())
            };
            if let Some(q) = bad(&h, a.generators()) {
                return Some(Evidence::Automorphism {
                    graph: g6(g),
                    permutation: q,
                });
            }
            if let Some(q) = bad(g, b.generators()) {
                return Some(Evidence::Automorphism {
                    graph: g6(&h),
                    permutation: q,
                });
            }
            (a.order() != b.order()).then(|| Evidence::GroupOrder {
                graph: g6(g),
                order: a.order().to_string(),
            })
        })
        .collect();
    rep.computed = format!(
        "{} classes, {} exceptions",
        classes(n).len(),
        failures.len()
    );
    rep.status = if failures.is_empty() {
        Status::Confirmed
    } else {
        Status::Refuted
    };
    if failures.is_empty() {
        rep.evidence
            .push(values(&[("classes", classes(n).len().to_string())]));
    }
    rep.evidence.extend(failures);
    Ok(rep)
}

fn prop1_2(id: &str, p: &Params, cfg: &SuiteConfig) -> Result<ClaimReport, SuiteError> {
    let n: usize = get(id, p, "n")?;
    let class: usize = get(id, p, "class")?;
    let mut rep = ClaimReport::new(id, p);
    if !(6..=MAX_INDEXED_CLASS_N).contains(&n) || class >= classes(n).len() {
        return not_applicable(
            rep,
            format!("needs 6 <= n <= {MAX_INDEXED_CLASS_N} and a valid class index"),
        );
    }
    let g = &classes(n)[class];
    let h = g.complement();
    let sc = search_cfg(cfg, Mode::Mixed);
    let (a, b) = (asymmetric_index(g, &sc), asymmetric_index(&h, &sc));
    rep.expected = "ai(G) = ai(complement)".into();
    rep.computed = format!("{} / {}", index_text(&a), index_text(&b));
    match (a, b) {
        (Ok(x), Ok(y)) => {
            rep.ai_values.extend([(n, x.value), (n, y.value)]);
            rep.evidence.extend(result_evidence(g, &x));
            rep.evidence.extend(result_evidence(&h, &y));
            rep.status = if x.value == y.value {
                Status::Confirmed
            } else {
                Status::Refuted
            };
        }
        _ => rep.status = Status::BudgetExceeded,
    }
    Ok(rep)
}

fn combine_check(id: &str, p: &Params, join: bool) -> Result<ClaimReport, SuiteError> {
    let n: usize = get(id, p, "n")?;
    let mut rep = ClaimReport::new(id, p);
    if !(6..=MAX_INDEXED_CLASS_N).contains(&n) {
        return not_applicable(rep, format!("checked for 6 <= n <= {MAX_INDEXED_CLASS_N}"));
    }
    let asym = asymmetric_class_list(n);
    let pairs: Vec<(usize, usize)> = (0..asym.len())
        .flat_map(|i| {
            (0..asym.len())
                .filter(move |&j| j != i)
                .map(move |j| (i, j))
        })
        .collect();
    let failures: Vec<Evidence> = pairs
        .par_iter()
        .filter_map(|&(i, j)| {
            let h = if join {
                asym[i].join(asym[j])
            } else {
                asym[i].disjoint_union(asym[j])
            };
            find_nontrivial_automorphism(&h).map(|q| Evidence::Automorphism {
                graph: g6(&h),
                permutation: q,
            })
        })
        .collect();
    let op = if join { "join" } else { "disjoint union" };
    rep.expected = format!("every {op} asymmetric");
    rep.computed = format!(
        "{} ordered pairs, {} exceptions",
        pairs.len(),
        failures.len()
    );
    rep.status = if failures.is_empty() {
        Status::Confirmed
    } else {
        Status::Refuted
    };
    if failures.is_empty() {
        rep.evidence.push(values(&[
            ("asymmetric classes", asym.len().to_string()),
            ("ordered pairs", pairs.len().to_string()),
        ]));
    }
    rep.evidence.extend(failures);
    Ok(rep)
}

fn prop1_3(id: &str, p: &Params, _: &SuiteConfig) -> Result<ClaimReport, SuiteError> {
    combine_check(id, p, true)
}

fn prop1_4(id: &str, p: &Params, _: &SuiteConfig) -> Result<ClaimReport, SuiteError> {
    combine_check(id, p, false)
}

fn lemma1_1(id: &str, p: &Params, _: &SuiteConfig) -> Result<ClaimReport, SuiteError> {
    let n: usize = get(id, p, "n")?;
    let mut rep = ClaimReport::new(id, p);
    if !(6..=MAX_CLASS_N).contains(&n) {
        return not_applicable(rep, format!("checked for 6 <= n <= {MAX_CLASS_N}"));
    }
    let asym = asymmetric_class_list(n);
    let results: Vec<(bool, Option<Evidence>)> = asym
        .par_iter()
        .map(|g| {
            let (h, ext) = extend_by_one(g);
            let pendant = matches!(ext, Extension::PendantTail { .. });
            (
                pendant,
                find_nontrivial_automorphism(&h).map(|q| Evidence::Automorphism {
                    graph: g6(&h),
                    permutation: q,
                }),
            )
        })
        .collect();
    let pendant = results.iter().filter(|r| r.0).count();
    let failures: Vec<Evidence> = results.into_iter().filter_map(|r| r.1).collect();
    rep.expected = "every extension asymmetric".into();
    rep.computed = format!("{} graphs, {} exceptions", asym.len(), failures.len());
    rep.status = if failures.is_empty() {
        Status::Confirmed
    } else {
        Status::Refuted
    };
    rep.evidence.push(values(&[
        ("max-degree branch", (asym.len() - pendant).to_string()),
        ("pendant branch", pendant.to_string()),
    ]));
    rep.evidence.extend(failures);
    Ok(rep)
}

fn class_indices(n: usize, cfg: &SuiteConfig) -> Vec<Result<AiResult, AiError>> {
    let sc = search_cfg(cfg, Mode::Mixed);
    classes(n)
        .par_iter()
        .map(|g| asymmetric_index(g, &sc))
        .collect()
}

fn thm1_1(id: &str, p: &Params, cfg: &SuiteConfig) -> Result<ClaimReport, SuiteError> {
    let n: usize = get(id, p, "n")?;
    let mut rep = ClaimReport::new(id, p);
    if !(6..=MAX_INDEXED_CLASS_N).contains(&n) {
        return not_applicable(rep, format!("checked for 6 <= n <= {MAX_INDEXED_CLASS_N}"));
    }
    let res = class_indices(n, cfg);
    let found: Vec<usize> = res
        .iter()
        .filter_map(|r| r.as_ref().ok().map(|r| r.value))
        .collect();
    rep.ai_values = found.iter().map(|&a| (n, a)).collect();
    rep.expected = "every class has a finite index".into();
    let max = found.iter().max().copied().unwrap_or(0);
    rep.computed = format!(
        "{} of {} classes resolved, max ai = {max}",
        found.len(),
        res.len()
    );
    rep.status = if found.len() == res.len() {
        Status::Confirmed
    } else {
        Status::BudgetExceeded
    };
    rep.evidence.push(values(&[
        ("classes", res.len().to_string()),
        ("max ai", max.to_string()),
    ]));
    Ok(rep)
}

fn thm1_2(id: &str, p: &Params, cfg: &SuiteConfig) -> Result<ClaimReport, SuiteError> {
    let n: usize = get(id, p, "n")?;
    let mut rep = ClaimReport::new(id, p);
    if !(6..=MAX_INDEXED_CLASS_N).contains(&n) {
        return not_applicable(rep, format!("checked for 6 <= n <= {MAX_INDEXED_CLASS_N}"));
    }
    let observed: Vec<(String, usize, usize)> = class_indices(n, cfg)
        .into_iter()
        .enumerate()
        .filter_map(|(i, r)| r.ok().map(|r| (format!("class {i}"), n, r.value)))
        .collect();
    let mut row = suite_bound_row(&observed);
    row.params = rep.params.clone();
    rep = row;
    Ok(rep)
}

/// The general upper bound checked against every `(source, n, ai)` seen.
pub(super) fn suite_bound_row(observed: &[(String, usize, usize)]) -> ClaimReport {
    let mut rep = ClaimReport::new(SUITE_BOUND_ID, &params(&[("scope", "suite".to_string())]));
    rep.expected = "ai <= n(n-1)/2 - (n-2)".into();
    let violations: Vec<&(String, usize, usize)> = observed
        .iter()
        .filter(|(_, n, a)| *a as i64 > formulas::general_upper_bound(*n as i64))
        .collect();
    let tightest = observed
        .iter()
        .map(|(_, n, a)| formulas::general_upper_bound(*n as i64) - *a as i64)
        .min()
        .map_or("-".to_string(), |s| s.to_string());
    rep.computed = format!("{} values, {} violations", observed.len(), violations.len());
    rep.evidence.push(values(&[
        ("values checked", observed.len().to_string()),
        ("smallest slack", tightest),
    ]));
    for (src, n, a) in &violations {
        rep.evidence.push(values(&[
            ("source", src.clone()),
            ("n", n.to_string()),
            ("ai", a.to_string()),
        ]));
    }
    rep.status = match (observed.is_empty(), violations.is_empty()) {
        (true, _) => Status::NotApplicable,
        (false, true) => Status::Confirmed,
        (false, false) => Status::Refuted,
    };
    rep
}

fn lemma1_4(id: &str, p: &Params, cfg: &SuiteConfig) -> Result<ClaimReport, SuiteError> {
    let spec: FamilySpec = get(id, p, "graph")?;
    let mut rep = ClaimReport::new(id, p);
    let g = match spec.generate() {
        Ok(g) if (6..=16).contains(&g.n()) => g,
        _ => return not_applicable(rep, "checked on graphs with 6..=16 vertices"),
    };
    let tb = transposable_clique_lower_bound(&g);
    let clique: Vec<String> = tb.clique.iter().map(|v| v.to_string()).collect();
    rep.evidence.push(values(&[
        ("t", tb.t.to_string()),
        ("transposable set", clique.join(" ")),
    ]));
    grade_index(&mut rep, &g, tb.bound, None, cfg);
    rep.expected = format!("ai >= {} (t = {})", tb.bound, tb.t);
    Ok(rep)
}

// ---- paths and cycles ----

const MAX_FAMILY_N: usize = 40;

fn thm2_1(id: &str, p: &Params, cfg: &SuiteConfig) -> Result<ClaimReport, SuiteError> {
    let n: usize = get(id, p, "n")?;
    let rep = ClaimReport::new(id, p);
    if !(6..=MAX_FAMILY_N).contains(&n) {
        return not_applicable(
            rep,
            format!("stated for n >= 6; checked up to {MAX_FAMILY_N}"),
        );
    }
    let mut rep = rep;
    exact(&mut rep, &FamilySpec::Path(n).generate().unwrap(), 1, cfg);
    attach_paper_witness(&mut rep, WitnessId::PathAddChord(n), "chord");
    Ok(rep)
}

fn thm2_2(id: &str, p: &Params, cfg: &SuiteConfig) -> Result<ClaimReport, SuiteError> {
    let n: usize = get(id, p, "n")?;
    let rep = ClaimReport::new(id, p);
    if !(6..=MAX_FAMILY_N).contains(&n) {
        return not_applicable(
            rep,
            format!("stated for n >= 6; checked up to {MAX_FAMILY_N}"),
        );
    }
    let mut rep = rep;
    exact(&mut rep, &FamilySpec::Cycle(n).generate().unwrap(), 2, cfg);
    attach_paper_witness(&mut rep, WitnessId::CycleRemoveAdd(n), "remove-add witness");
    Ok(rep)
}

fn thm2_2_remove_only(id: &str, p: &Params, cfg: &SuiteConfig) -> Result<ClaimReport, SuiteError> {
    let n: usize = get(id, p, "n")?;
    let mut rep = ClaimReport::new(id, p);
    if !(6..=16).contains(&n) {
        return not_applicable(rep, "exhaustive removal search runs for 6 <= n <= 16");
    }
    let g = FamilySpec::Cycle(n).generate().unwrap();
    // every subset of the n edges, whatever the configured budget
    let sc = SearchConfig {
        mode: Mode::RemoveOnly,
        max_k: n,
        witness_cap: cfg.witness_cap,
    };
    rep.expected = format!("no removal set of size <= {n} asymmetrizes");
    match asymmetric_index(&g, &sc) {
        Ok(r) => {
            rep.computed = format!("removal witness of size {}", r.value);
            rep.evidence.extend(result_evidence(&g, &r));
            rep.status = Status::Refuted;
        }
        Err(AiError::BudgetExceeded {
            exhausted, stats, ..
        }) => {
            rep.computed = format!(
                "all removal sets tested, none asymmetric ({})",
                if exhausted { "exhausted" } else { "partial" }
            );
            rep.evidence
                .push(exhaustion(&g, Mode::RemoveOnly, n + 1, &stats));
            rep.status = if exhausted {
                Status::Confirmed
            } else {
                Status::BudgetExceeded
            };
        }
        Err(AiError::NoAsymmetrization { .. }) => unreachable!("n >= 6"),
    }
    Ok(rep)
}

/// All `(k, m, l)` with `2 < k < l`, `m >= 3`, `k + m + l = n + 4`.
fn chord_triples(n: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for k in 3..=n {
        for l in k + 1..=n {
            if n + 4 >= k + l + 3 {
                out.push((k, n + 4 - k - l, l));
            }
        }
    }
    out
}

fn two_chords(id: &str, p: &Params, _: &SuiteConfig) -> Result<ClaimReport, SuiteError> {
    let n: usize = get(id, p, "n")?;
    let mut rep = ClaimReport::new(id, p);
    if !(6..=16).contains(&n) {
        return not_applicable(rep, "checked for 6 <= n <= 16");
    }
    let triples = chord_triples(n);
    let mut forms = BTreeSet::new();
    let mut failures = Vec::new();
    for &(k, m, l) in &triples {
        let (g, flips, res) = check_paper_witness(WitnessId::CycleTwoChords { n, k, m, l });
        match res {
            Ok(_) => {
                forms.insert(canonical_form(&apply_flips(&g, &flips).unwrap()));
            }
            Err(ev) => failures.push(ev),
        }
    }
    rep.expected = "every (k, m, l) placement asymmetric".into();
    rep.computed = format!(
        "{} placements, {} exceptions, {} classes",
        triples.len(),
        failures.len(),
        forms.len()
    );
    rep.status = if failures.is_empty() {
        Status::Confirmed
    } else {
        Status::Refuted
    };
    rep.evidence.push(values(&[
        ("placements", triples.len().to_string()),
        ("distinct classes", forms.len().to_string()),
    ]));
    rep.evidence.extend(failures);
    Ok(rep)
}

fn aut_cycle(id: &str, p: &Params, _: &SuiteConfig) -> Result<ClaimReport, SuiteError> {
    let n: usize = get(id, p, "n")?;
    let mut rep = ClaimReport::new(id, p);
    if !(3..=20).contains(&n) {
        return not_applicable(rep, "checked for 3 <= n <= 20");
    }
    let g = FamilySpec::Cycle(n).generate().unwrap();
    let order = AutGroup::new(&g).order();
    let factorial = (1..=n as u64).fold(num_bigint::BigUint::from(1u32), |acc, k| acc * k);
    rep.expected = format!("|Aut| = n! = {factorial}");
    rep.computed = format!("|Aut| = {order}");
    rep.evidence.push(Evidence::GroupOrder {
        graph: g6(&g),
        order: order.to_string(),
    });
    if order == factorial {
        rep.status = Status::Confirmed;
    } else {
        rep.status = Status::Refuted;
        let swap = Permutation::transposition(n, 0, 1);
        if !is_automorphism(&g, &swap).unwrap() {
            rep.evidence
                .push(values(&[("not an automorphism", swap.cycle_notation(0))]));
        }
    }
    Ok(rep)
}

fn lemma2_1(id: &str, p: &Params, _: &SuiteConfig) -> Result<ClaimReport, SuiteError> {
    let i: i64 = get(id, p, "i")?;
    let mut rep = ClaimReport::new(id, p);
    let Ok(formula) = formulas::partition_count(i) else {
        return not_applicable(rep, "stated for i >= 6");
    };
    let oracle = (3..i).filter(|&a| i - a > a).count() as i64;
    rep.expected = format!("floor((i-5)/2) = {formula}");
    rep.computed = format!("{oracle} partitions");
    rep.evidence.push(values(&[
        ("formula", formula.to_string()),
        ("enumerated", oracle.to_string()),
    ]));
    rep.status = if oracle == formula {
        Status::Confirmed
    } else {
        Status::Refuted
    };
    Ok(rep)
}

fn rem2_1(id: &str, p: &Params, variant: Variant) -> Result<ClaimReport, SuiteError> {
    let n: usize = get(id, p, "n")?;
    let mut rep = ClaimReport::new(id, p);
    if !(6..=16).contains(&n) {
        return not_applicable(rep, "counted for 6 <= n <= 16");
    }
    let formula = formulas::cycle_augmentation_formula(n as i64, variant).expect("n >= 6");
    let oracle =
        count_nonisomorphic_asymmetrizations(&FamilySpec::Cycle(n).generate().unwrap(), 0, 2)
            as i64;
    rep.expected = format!("{formula} ({variant} formula)");
    rep.computed = format!("{oracle} classes");
    rep.evidence.push(values(&[
        ("formula", formula.to_string()),
        ("variant", variant.to_string()),
        ("oracle", oracle.to_string()),
    ]));
    rep.status = if oracle == formula {
        Status::Confirmed
    } else {
        Status::Refuted
    };
    Ok(rep)
}

fn rem2_1_text(id: &str, p: &Params, _: &SuiteConfig) -> Result<ClaimReport, SuiteError> {
    rem2_1(id, p, Variant::Text)
}

fn rem2_1_remark(id: &str, p: &Params, _: &SuiteConfig) -> Result<ClaimReport, SuiteError> {
    rem2_1(id, p, Variant::Remark)
}

// ---- wheels, circulants, stars, complete graphs ----

fn thm2_3(id: &str, p: &Params, cfg: &SuiteConfig) -> Result<ClaimReport, SuiteError> {
    let n: usize = get(id, p, "n")?;
    let mut rep = ClaimReport::new(id, p);
    if !(6..=MAX_FAMILY_N).contains(&n) {
        return not_applicable(
            rep,
            format!("stated for n >= 6; checked up to {MAX_FAMILY_N}"),
        );
    }
    exact(&mut rep, &FamilySpec::Wheel(n).generate().unwrap(), 2, cfg);
    attach_paper_witness(
        &mut rep,
        WitnessId::WheelTwoRemovals(n),
        "two-removal witness",
    );
    Ok(rep)
}

fn thm2_3_alt(id: &str, p: &Params, cfg: &SuiteConfig) -> Result<ClaimReport, SuiteError> {
    let n: usize = get(id, p, "n")?;
    let mut rep = ClaimReport::new(id, p);
    if !(6..MAX_FAMILY_N).contains(&n) {
        return not_applicable(
            rep,
            format!("stated for n >= 6; checked below {MAX_FAMILY_N}"),
        );
    }
    exact(
        &mut rep,
        &FamilySpec::Wheel(n + 1).generate().unwrap(),
        2,
        cfg,
    );
    rep.add_note(format!("hub of degree {n}, {} vertices", n + 1));
    Ok(rep)
}

fn thm2_4(id: &str, p: &Params, cfg: &SuiteConfig) -> Result<ClaimReport, SuiteError> {
    let n: usize = get(id, p, "n")?;
    let sign_text: String = get(id, p, "sign")?;
    let sign = match sign_text.as_str() {
        "+" => Sign::Plus,
        "-" => Sign::Minus,
        _ => {
            return Err(SuiteError::BadParam {
                claim: id.into(),
                param: "sign".into(),
                value: sign_text,
            })
        }
    };
    let mut rep = ClaimReport::new(id, p);
    if !(4..=6).contains(&n) {
        return not_applicable(rep, "stated for n >= 4; checked for 4 <= n <= 6");
    }
    let g = FamilySpec::Circulant {
        order: sign.order(n),
        connections: vec![1, n],
    }
    .generate()
    .unwrap();
    let value = exact(&mut rep, &g, 2, cfg);
    let mut all_ok = true;
    for (w, label) in [
        (WitnessId::CirculantRemove2(n, sign), "remove-2 witness"),
        (WitnessId::CirculantAdd2(n, sign), "add-2 witness"),
        (WitnessId::CirculantMixed(n, sign), "mixed witness"),
    ] {
        all_ok &= attach_paper_witness(&mut rep, w, label);
    }
    if value == Some(2) && !all_ok {
        rep.status = Status::Refuted;
    }
    rep.computed = format!(
        "{}, {} witnesses asymmetric",
        rep.computed,
        if all_ok { "all three" } else { "not all" }
    );
    Ok(rep)
}

fn thm2_5(id: &str, p: &Params, cfg: &SuiteConfig) -> Result<ClaimReport, SuiteError> {
    let n: usize = get(id, p, "n")?;
    let mut rep = ClaimReport::new(id, p);
    if !(6..=10).contains(&n) {
        return not_applicable(rep, "stated for n >= 6; exact search runs up to n = 10");
    }
    let (lo, hi) = ((n - 1) / 2, n - 1);
    grade_index(
        &mut rep,
        &FamilySpec::Star(n).generate().unwrap(),
        lo,
        Some(hi),
        cfg,
    );
    rep.expected = format!("{lo} <= ai <= {hi}");
    Ok(rep)
}

fn complete(n: usize) -> Graph {
    FamilySpec::Complete(n).generate().unwrap()
}

fn thm2_6(id: &str, p: &Params, cfg: &SuiteConfig) -> Result<ClaimReport, SuiteError> {
    let n: usize = get(id, p, "n")?;
    let mut rep = ClaimReport::new(id, p);
    if !(6..=7).contains(&n) {
        return not_applicable(rep, "this clause covers n = 6, 7");
    }
    exact(&mut rep, &complete(n), 6, cfg);
    Ok(rep)
}

fn complete_witness(n: usize) -> (Graph, FlipSet, Result<Evidence, Evidence>) {
    let g = complete(n);
    let flips = complete_graph_flips(n);
    let res = check_flips(&g, &flips);
    (g, flips, res)
}

fn thm2_6_upper(id: &str, p: &Params, _: &SuiteConfig) -> Result<ClaimReport, SuiteError> {
    let n: usize = get(id, p, "n")?;
    let mut rep = ClaimReport::new(id, p);
    if !(8..=MAX_FAMILY_N).contains(&n) {
        return not_applicable(
            rep,
            format!("stated for n >= 8; checked up to {MAX_FAMILY_N}"),
        );
    }
    let (_, flips, res) = complete_witness(n);
    rep.expected = format!("ai <= {}", n - 2);
    rep.computed = format!("removal witness of size {}", flips.size());
    rep.status = match res {
        Ok(ev) => {
            rep.evidence.push(ev);
            if flips.size() <= n - 2 {
                Status::Confirmed
            } else {
                Status::BudgetExceeded
            }
        }
        Err(ev) => {
            rep.evidence.push(ev);
            rep.add_note("construction is not asymmetric");
            Status::BudgetExceeded
        }
    };
    Ok(rep)
}

fn thm2_6_printed_lower(id: &str, p: &Params, _: &SuiteConfig) -> Result<ClaimReport, SuiteError> {
    let n: usize = get(id, p, "n")?;
    let mut rep = ClaimReport::new(id, p);
    let Ok(b) = formulas::kn_bound_formulas(n as i64) else {
        return not_applicable(rep, "stated for n >= 8");
    };
    if n > MAX_FAMILY_N {
        return not_applicable(rep, format!("checked up to {MAX_FAMILY_N}"));
    }
    rep.expected = format!("{} <= ai <= {}", b.lower_printed, b.upper);
    rep.evidence.push(values(&[
        ("lower_printed", b.lower_printed.to_string()),
        ("upper", b.upper.to_string()),
    ]));
    let (_, flips, res) = complete_witness(n);
    if let Ok(ev) = res {
        rep.evidence.push(ev);
    }
    if b.printed_consistent() {
        rep.computed = format!("{} <= {}", b.lower_printed, b.upper);
        rep.status = Status::Confirmed;
    } else {
        rep.computed = format!(
            "lower {} > upper {}; witness of size {}",
            b.lower_printed,
            b.upper,
            flips.size()
        );
        rep.status = Status::Refuted;
    }
    Ok(rep)
}

fn thm2_6_asymptotic_lower(
    id: &str,
    p: &Params,
    cfg: &SuiteConfig,
) -> Result<ClaimReport, SuiteError> {
    let n: usize = get(id, p, "n")?;
    let mut rep = ClaimReport::new(id, p);
    let Ok(b) = formulas::kn_bound_formulas(n as i64) else {
        return not_applicable(rep, "stated for n >= 8");
    };
    if n > 9 {
        return not_applicable(rep, "exact search on K_n runs for n <= 9");
    }
    grade_index(
        &mut rep,
        &complete(n),
        b.lower_asymptotic as usize,
        None,
        cfg,
    );
    rep.expected = format!("ai >= {}", b.lower_asymptotic);
    Ok(rep)
}

fn k28(id: &str, p: &Params, _: &SuiteConfig) -> Result<ClaimReport, SuiteError> {
    let mut rep = ClaimReport::new(id, p);
    let asym_trees: Vec<Graph> = trees(9).into_iter().filter(is_asymmetric).collect();
    let flips = complete_minus_forest(28, 1, &asym_trees);
    rep.expected = "ai(K_28) <= 25".into();
    rep.computed = format!(
        "{} asymmetric 9-vertex trees, removal witness of size {}",
        asym_trees.len(),
        flips.size()
    );
    match check_flips(&complete(28), &flips) {
        Ok(ev) => {
            rep.evidence.push(ev);
            rep.status = if flips.size() <= 25 {
                Status::Confirmed
            } else {
                Status::BudgetExceeded
            };
        }
        Err(ev) => {
            rep.evidence.push(ev);
            rep.add_note("construction is not asymmetric");
            rep.status = Status::BudgetExceeded;
        }
    }
    Ok(rep)
}

// ---- products ----

fn thm2_8(id: &str, p: &Params, cfg: &SuiteConfig) -> Result<ClaimReport, SuiteError> {
    let (r, s): (usize, usize) = (get(id, p, "r")?, get(id, p, "s")?);
    let mut rep = ClaimReport::new(id, p);
    if r < 2 || s < 2 || r * s > 64 {
        return not_applicable(rep, "stated for r, s >= 2; checked up to 64 vertices");
    }
    exact(
        &mut rep,
        &FamilySpec::Grid(r, s).generate().unwrap(),
        1,
        cfg,
    );
    attach_paper_witness(&mut rep, WitnessId::GridCorner(r, s), "corner removal");
    Ok(rep)
}

fn thm2_9(id: &str, p: &Params, cfg: &SuiteConfig) -> Result<ClaimReport, SuiteError> {
    let (r, s): (usize, usize) = (get(id, p, "r")?, get(id, p, "s")?);
    let mut rep = ClaimReport::new(id, p);
    if r < 2 || s < 3 || r * s > 64 {
        return not_applicable(rep, "stated for r >= 2, s >= 3; checked up to 64 vertices");
    }
    exact(
        &mut rep,
        &FamilySpec::PathCycleProduct(r, s).generate().unwrap(),
        2,
        cfg,
    );
    attach_paper_witness(
        &mut rep,
        WitnessId::PxcTwoRemovals(r, s),
        "two-removal witness",
    );
    Ok(rep)
}

/// Looks for an asymmetrizing set of exactly three removals.
fn three_removals(rep: &mut ClaimReport, g: &Graph) -> Option<FlipSet> {
    let sc = SearchConfig {
        mode: Mode::RemoveOnly,
        max_k: 3,
        witness_cap: 1,
    };
    let w = witnesses_of_size(g, &sc, 3).ok()?.witnesses.swap_remove(0);
    rep.evidence
        .push(check_flips(g, &w).expect("search witnesses are asymmetric"));
    Some(w)
}

fn thm2_10(id: &str, p: &Params, cfg: &SuiteConfig) -> Result<ClaimReport, SuiteError> {
    let (r, s): (usize, usize) = (get(id, p, "r")?, get(id, p, "s")?);
    let mut rep = ClaimReport::new(id, p);
    if r < 10 || s < 10 {
        return not_applicable(rep, "stated for r, s >= 10");
    }
    if r * s > 144 {
        return not_applicable(rep, "scans run up to 144 vertices");
    }
    let g = FamilySpec::Torus(r, s).generate().unwrap();
    rep.expected = "ai = 3".into();
    // lower bound: every 1- and 2-flip set, one per orbit
    let scan = SearchConfig {
        mode: Mode::Mixed,
        max_k: 2.min(cfg.budget),
        witness_cap: cfg.witness_cap,
    };
    let low = asymmetric_index(&g, &scan);
    let upper = three_removals(&mut rep, &g);
    match low {
        Ok(res) => {
            rep.ai_values.push((g.n(), res.value));
            rep.computed = format!("ai = {}", res.value);
            rep.evidence.splice(0..0, result_evidence(&g, &res));
            rep.status = Status::Refuted;
        }
        Err(AiError::BudgetExceeded {
            lower_bound, stats, ..
        }) => {
            rep.evidence
                .insert(0, exhaustion(&g, Mode::Mixed, lower_bound, &stats));
            match (lower_bound, upper) {
                (3, Some(_)) => {
                    rep.ai_values.push((g.n(), 3));
                    rep.computed = "ai = 3".into();
                    rep.status = Status::Confirmed;
                }
                _ => {
                    rep.computed = format!("ai >= {lower_bound}");
                    rep.status = Status::BudgetExceeded;
                }
            }
        }
        Err(AiError::NoAsymmetrization { .. }) => unreachable!("torus has >= 100 vertices"),
    }
    if let Some(w) = upper_note(&rep) {
        rep.add_note(w);
    }
    Ok(rep)
}

fn upper_note(rep: &ClaimReport) -> Option<String> {
    rep.evidence.iter().find_map(|e| match e {
        Evidence::Witness { flips, .. } if flips.added.is_empty() && flips.size() == 3 => {
            Some(format!("three-removal witness {flips}"))
        }
        _ => None,
    })
}

fn thm2_10_exploratory(id: &str, p: &Params, cfg: &SuiteConfig) -> Result<ClaimReport, SuiteError> {
    let (r, s): (usize, usize) = (get(id, p, "r")?, get(id, p, "s")?);
    let mut rep = ClaimReport::new(id, p);
    if r < 3 || s < 3 || r * s > 100 {
        return not_applicable(rep, "needs r, s >= 3 and at most 100 vertices");
    }
    let g = FamilySpec::Torus(r, s).generate().unwrap();
    rep.expected = "ai = 3 (stated only for r, s >= 10)".into();
    let res = asymmetric_index(&g, &search_cfg(cfg, Mode::Mixed));
    rep.computed = index_text(&res);
    if let Ok(res) = &res {
        rep.ai_values.push((g.n(), res.value));
        rep.evidence.extend(result_evidence(&g, res));
    }
    three_removals(&mut rep, &g);
    rep.status = Status::NotApplicable;
    rep.add_note("below the stated range; exploratory");
    if let Some(w) = upper_note(&rep) {
        rep.add_note(w);
    }
    Ok(rep)
}

// ---- disconnected graphs ----

fn thm3_1(id: &str, p: &Params, cfg: &SuiteConfig) -> Result<ClaimReport, SuiteError> {
    let text: String = get(id, p, "components")?;
    let mut rep = ClaimReport::new(id, p);
    let specs: Vec<FamilySpec> = text
        .split(';')
        .map(|t| t.trim().parse())
        .collect::<Result<_, _>>()
        .map_err(|_| SuiteError::BadParam {
            claim: id.into(),
            param: "components".into(),
            value: text.clone(),
        })?;
    let comps: Vec<Graph> = specs
        .iter()
        .map(|s| s.generate().expect("validated by parse"))
        .collect();
    if comps.len() < 2 || comps.iter().any(|c| c.n() < 6) {
        return not_applicable(
            rep,
            "needs two or more components on at least 6 vertices each",
        );
    }
    if comps.iter().map(Graph::n).sum::<usize>() > 40 {
        return not_applicable(rep, "checked up to 40 vertices");
    }
    for i in 0..comps.len() {
        for j in i + 1..comps.len() {
            if are_isomorphic(&comps[i], &comps[j]) {
                return not_applicable(rep, "isomorphic components");
            }
        }
    }
    let sc = search_cfg(cfg, Mode::Mixed);
    let mut parts = Vec::new();
    for c in &comps {
        match asymmetric_index(c, &sc) {
            Ok(r) => {
                rep.ai_values.push((c.n(), r.value));
                parts.push(r.value);
            }
            Err(_) => {
                rep.computed = "component index not resolved".into();
                rep.status = Status::BudgetExceeded;
                return Ok(rep);
            }
        }
    }
    let (lo, hi) = (*parts.iter().min().unwrap(), parts.iter().sum::<usize>());
    let g = comps[1..]
        .iter()
        .fold(comps[0].clone(), |acc, c| acc.disjoint_union(c));
    grade_index(&mut rep, &g, lo, Some(hi), cfg);
    let shown: Vec<String> = parts.iter().map(|a| a.to_string()).collect();
    rep.expected = format!("{lo} <= ai <= {hi} (components {})", shown.join(", "));
    Ok(rep)
}

fn ex3_1(id: &str, p: &Params, _: &SuiteConfig) -> Result<ClaimReport, SuiteError> {
    let l: usize = get(id, p, "l")?;
    let mut rep = ClaimReport::new(id, p);
    if !(3..=8).contains(&l) {
        return not_applicable(rep, "checked for 3 <= l <= 8");
    }
    let (base, links) = pendant_cycle(l);
    rep.expected = format!("ai <= {l}");
    rep.computed = format!("addition witness of size {}", links.size());
    match check_flips(&base, &links) {
        Ok(ev) => {
            rep.evidence.push(ev);
            rep.status = if links.size() <= l {
                Status::Confirmed
            } else {
                Status::BudgetExceeded
            };
        }
        Err(ev) => {
            rep.evidence.push(ev);
            rep.status = Status::Refuted;
        }
    }
    if l >= 6 {
        rep.add_note(format!("component sum bound is {}", l + 2));
    } else {
        rep.add_note("C_l has fewer than 6 vertices, so the component sum bound is undefined");
    }
    Ok(rep)
}

fn thm3_2(id: &str, p: &Params, _: &SuiteConfig) -> Result<ClaimReport, SuiteError> {
    let (s, t): (usize, usize) = (get(id, p, "s")?, get(id, p, "t")?);
    let mut rep = ClaimReport::new(id, p);
    if s < 8 || t < 1 || s + t > MAX_FAMILY_N {
        return not_applicable(
            rep,
            format!("stated for s >= 8, t >= 1; checked up to {MAX_FAMILY_N} vertices"),
        );
    }
    let (_, flips, res) = check_paper_witness(WitnessId::SplitConstruction(s, t));
    let bound = s - 2 + t - 1;
    rep.expected = format!("ai <= {bound}");
    rep.computed = format!("witness of size {}", flips.size());
    match res {
        Ok(ev) => {
            rep.evidence.push(ev);
            rep.status = if flips.size() <= bound {
                Status::Confirmed
            } else {
                Status::BudgetExceeded
            };
        }
        Err(ev) => {
            rep.evidence.push(ev);
            rep.add_note("construction is not asymmetric");
            rep.status = Status::BudgetExceeded;
        }
    }
    Ok(rep)
}
