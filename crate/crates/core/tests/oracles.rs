mod common;

use common::*;
use graphsym::enumerate::{asymmetric_classes, graph_classes};
use graphsym::theorems::{cycle_augmentation_formula, partition_count, Variant};
use graphsym::{
    apply_flips, are_isomorphic, asymmetric_index, automorphism_group, canonical_form,
    count_nonisomorphic_asymmetrizations, is_asymmetric, paper_witness, AiError, FamilySpec, Graph,
    Mode, SearchConfig, WitnessId,
};

fn family(s: &str) -> Graph {
    s.parse::<FamilySpec>().unwrap().generate().unwrap()
}

fn order(g: &Graph) -> u64 {
    automorphism_group(g).order.try_into().unwrap()
}

#[test]
fn family_orders_match_backtracking() {
    let cases = [
        ("cycle:6", 12),
        ("cycle:9", 18),
        ("path:7", 2),
        ("complete:5", 120),
        ("star:7", 720),
        ("wheel:7", 12),
        ("grid:3x3", 8),
        ("pxc:2x4", 48),
        ("split:5+2", 240),
        ("circulant:10:1,4", 320),
    ];
    for (spec, expected) in cases {
        let g = family(spec);
        assert_eq!(brute_aut_count(&g), expected, "{spec} backtracking");
        assert_eq!(order(&g), expected, "{spec} engine");
    }
}

#[test]
fn six_vertex_classes_by_exhaustion() {
    let rl = MaskRelabeler::new(6);
    let reps = class_representatives(&rl, 6);
    assert_eq!(reps.len(), 156);
    let asym = reps.iter().filter(|&&m| rl.aut_count(m) == 1).count();
    assert_eq!(asym, 8);
    assert_eq!(graph_classes(6).len(), 156);
    assert_eq!(asymmetric_classes(6).len(), 8);

    let mut ours: Vec<u64> = graph_classes(6)
        .iter()
        .map(|g| rl.canonical(mask_of(g)))
        .collect();
    ours.sort_unstable();
    assert_eq!(
        ours, reps,
        "engine classes are exactly the exhaustive classes"
    );
}

#[test]
fn five_vertex_classes_have_no_asymmetric_member() {
    let rl = MaskRelabeler::new(5);
    for m in 0..1u64 << 10 {
        assert!(rl.aut_count(m) > 1);
        assert!(!is_asymmetric(&graph_from_mask(5, m)));
    }
    assert_eq!(class_representatives(&rl, 5).len(), 34);
}

#[test]
fn seven_vertex_class_counts() {
    assert_eq!(graph_classes(7).len(), 1044);
    assert_eq!(asymmetric_classes(7).len(), 152);
}

#[test]
fn index_on_six_vertices_is_nearest_asymmetric_labeling() {
    let rl = MaskRelabeler::new(6);
    let targets = labeled_asymmetric(&rl, 6);
    assert_eq!(targets.len(), 8 * 720);
    for g in graph_classes(6) {
        let want = min_distance(mask_of(&g), &targets) as usize;
        let got = asymmetric_index(&g, &SearchConfig::default()).unwrap();
        assert_eq!(got.value, want, "{g:?}");
        let h = apply_flips(&g, &got.witnesses[0]).unwrap();
        assert!(brute_is_asymmetric(&h));
    }
}

/// Smallest flip set by plain enumeration of pair subsets, checked with the
/// backtracking counter.
fn brute_index(g: &Graph, max_k: usize) -> Option<usize> {
    let ps = pairs(g.n());
    fn rec(
        g: &Graph,
        ps: &[(usize, usize)],
        start: usize,
        left: usize,
        cur: &mut Vec<usize>,
    ) -> bool {
        if left == 0 {
            let mut h = g.clone();
            for &i in cur.iter() {
                let (u, v) = ps[i];
                let e = graphsym::EdgePair::new(u, v).unwrap();
                h = if h.adjacent(u, v) {
                    h.remove_edge(e).unwrap()
                } else {
                    h.add_edge(e).unwrap()
                };
            }
            return brute_is_asymmetric(&h);
        }
        for i in start..ps.len() {
            cur.push(i);
            let hit = rec(g, ps, i + 1, left - 1, cur);
            cur.pop();
            if hit {
                return true;
            }
        }
        false
    }
    (0..=max_k).find(|&k| rec(g, &ps, 0, k, &mut Vec::new()))
}

#[test]
fn small_family_indices_by_enumeration() {
    for spec in [
        "path:6", "path:7", "path:8", "cycle:6", "cycle:7", "cycle:8", "wheel:7", "star:6",
        "grid:2x3",
    ] {
        let g = family(spec);
        let want = brute_index(&g, 5).expect("found within 5");
        let got = asymmetric_index(&g, &SearchConfig::default())
            .unwrap()
            .value;
        assert_eq!(got, want, "{spec}");
    }
    // the transposable-clique bound overshoots on C_7: it gives 3, the index is 2
    let c7 = family("cycle:7");
    assert_eq!(graphsym::lower_bound(&c7), 3);
    assert_eq!(brute_index(&c7, 2), Some(2));
}

#[test]
fn remove_only_on_cycles_never_succeeds() {
    for n in 6..=9 {
        let g = family(&format!("cycle:{n}"));
        let edges: Vec<_> = g.edges().collect();
        for mask in 0u32..1 << n {
            let h = edges
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .fold(g.clone(), |h, (_, e)| h.remove_edge(*e).unwrap());
            assert!(brute_aut_count(&h) > 1, "n={n} mask={mask:b}");
        }
        let err = asymmetric_index(&g, &SearchConfig::with_mode(Mode::RemoveOnly, n)).unwrap_err();
        assert!(matches!(
            err,
            AiError::BudgetExceeded {
                exhausted: true,
                ..
            }
        ));
    }
}

#[test]
fn cycle_automorphism_count_is_twice_the_length() {
    for n in 6..=9 {
        let g = family(&format!("cycle:{n}"));
        assert_eq!(brute_aut_count(&g), 2 * n as u64);
        assert_eq!(order(&g), 2 * n as u64);
    }
}

fn brute_two_chord_count(n: usize) -> usize {
    let rl = MaskRelabeler::new(n);
    let g = family(&format!("cycle:{n}"));
    let base = mask_of(&g);
    let free: Vec<usize> = (0..n * (n - 1) / 2)
        .filter(|i| base >> i & 1 == 0)
        .collect();
    let mut forms = Vec::new();
    for (a, &i) in free.iter().enumerate() {
        for &j in &free[a + 1..] {
            let m = base | 1 << i | 1 << j;
            if rl.aut_count(m) == 1 {
                forms.push(rl.canonical(m));
            }
        }
    }
    forms.sort_unstable();
    forms.dedup();
    forms.len()
}

#[test]
fn two_chord_augmentations_by_exhaustion() {
    let expected = [(6, 1), (7, 3), (8, 7)];
    for (n, want) in expected {
        assert_eq!(brute_two_chord_count(n), want, "n={n}");
        assert_eq!(
            count_nonisomorphic_asymmetrizations(&family(&format!("cycle:{n}")), 0, 2),
            want
        );
    }
    assert_eq!(cycle_augmentation_formula(6, Variant::Text), Ok(1));
    assert_eq!(cycle_augmentation_formula(7, Variant::Text), Ok(2));
    assert_eq!(cycle_augmentation_formula(6, Variant::Remark), Ok(5));
}

#[test]
fn partition_count_by_enumeration() {
    for i in 6..=60i64 {
        let brute = (3..i).filter(|&a| a < i - a).count() as i64;
        assert_eq!(partition_count(i), Ok(brute), "i={i}");
    }
}

#[test]
fn product_with_cycle_index_one() {
    for (r, s) in [(3, 3), (3, 4)] {
        let g = family(&format!("pxc:{r}x{s}"));
        assert!(brute_aut_count(&g) > 1);
        let res = asymmetric_index(&g, &SearchConfig::default()).unwrap();
        assert_eq!(res.value, 1, "{r}x{s}");
        assert!(brute_is_asymmetric(
            &apply_flips(&g, &res.witnesses[0]).unwrap()
        ));
    }
}

#[test]
fn small_grid_square_cannot_be_asymmetrized() {
    assert_eq!(brute_index(&family("grid:2x2"), 6), None);
}

#[test]
fn torus_witnesses_are_asymmetric_by_refinement() {
    let e = |u, v| graphsym::EdgePair::new(u, v).unwrap();
    let big = family("torus:10x10");
    assert!(!refinement_is_discrete(&big));
    let two = graphsym::FlipSet::new(vec![e(0, 1), e(2, 12)], vec![]);
    assert!(refinement_is_discrete(&apply_flips(&big, &two).unwrap()));
    let three = graphsym::FlipSet::new(vec![e(0, 1), e(0, 9), e(1, 11)], vec![]);
    assert!(refinement_is_discrete(&apply_flips(&big, &three).unwrap()));

    let small = family("torus:6x7");
    let three = graphsym::FlipSet::new(vec![e(0, 1), e(0, 6), e(1, 8)], vec![]);
    assert!(refinement_is_discrete(
        &apply_flips(&small, &three).unwrap()
    ));
    let res = asymmetric_index(&small, &SearchConfig::default()).unwrap();
    assert_eq!(res.value, 2);
    let h = apply_flips(&small, &res.witnesses[0]).unwrap();
    assert!(is_asymmetric(&h));
}

#[test]
fn paper_witnesses_by_backtracking() {
    let ids = [
        WitnessId::PathAddChord(6),
        WitnessId::PathAddChord(9),
        WitnessId::CycleRemoveAdd(7),
        WitnessId::WheelTwoRemovals(8),
        WitnessId::CirculantRemove2(4, graphsym::Sign::Plus),
        WitnessId::CirculantAdd2(4, graphsym::Sign::Minus),
        WitnessId::CirculantMixed(4, graphsym::Sign::Plus),
    ];
    for id in ids {
        let (spec, flips) = paper_witness(id).unwrap();
        let g = spec.generate().unwrap();
        assert!(brute_aut_count(&g) > 1, "{id}");
        assert!(
            brute_is_asymmetric(&apply_flips(&g, &flips).unwrap()),
            "{id}"
        );
    }
}

#[test]
fn random_seven_vertex_orders_and_canonical_forms() {
    let mut rng = rng(7);
    for _ in 0..200 {
        let g = random_graph(&mut rng, 7, 0.5);
        assert_eq!(order(&g), brute_aut_count(&g));
        let p = random_permutation(&mut rng, 7);
        let h = g.relabel(&p);
        assert_eq!(canonical_form(&g), canonical_form(&h));
        assert!(are_isomorphic(&g, &h));
    }
}

#[test]
fn canonical_form_separates_classes() {
    let classes = graph_classes(6);
    let mut forms: Vec<_> = classes.iter().map(canonical_form).collect();
    forms.sort();
    forms.dedup();
    assert_eq!(forms.len(), 156);
}

#[test]
fn every_small_class_order_matches_backtracking() {
    for n in 1..=6 {
        for g in graph_classes(n) {
            assert_eq!(order(&g), brute_aut_count(&g), "{g:?}");
            assert_eq!(is_asymmetric(&g), is_asymmetric(&g.complement()));
        }
    }
}

#[test]
fn canonical_form_on_random_relabelings() {
    let mut rng = rng(500);
    for i in 0..500 {
        let n = 1 + i % 12;
        let g = random_graph(&mut rng, n, 0.4);
        let h = g.relabel(&random_permutation(&mut rng, n));
        assert_eq!(canonical_form(&g), canonical_form(&h), "{g:?}");
    }
}

#[test]
fn complement_duality_with_transformed_witnesses() {
    let mut rng = rng(50);
    let cfg = SearchConfig::default();
    for _ in 0..50 {
        let g = random_graph(&mut rng, 7, 0.5);
        let a = asymmetric_index(&g, &cfg).unwrap();
        let c = g.complement();
        assert_eq!(asymmetric_index(&c, &cfg).unwrap().value, a.value);
        let moved = a.witnesses[0].complemented();
        assert!(brute_is_asymmetric(&apply_flips(&c, &moved).unwrap()));
    }
}

#[test]
fn nontrivial_automorphisms_are_genuine() {
    let mut rng = rng(11);
    for _ in 0..200 {
        let g = random_graph(&mut rng, 8, 0.3);
        match graphsym::find_nontrivial_automorphism(&g) {
            Some(p) => {
                assert!(!p.is_identity());
                assert!(graphsym::is_automorphism(&g, &p).unwrap());
            }
            None => assert_eq!(brute_aut_count(&g), 1),
        }
    }
}

#[test]
fn family_degree_checks() {
    for m in 3..=12 {
        let c = family(&format!("circulant:{m}:1"));
        assert_eq!(
            canonical_form(&c),
            canonical_form(&family(&format!("cycle:{m}")))
        );
        assert_eq!(family(&format!("cycle:{m}")).is_regular(), Some(2));
    }
    assert_eq!(family("circulant:17:1,4").is_regular(), Some(4));
    assert_eq!(family("circulant:10:5").is_regular(), Some(1));
    assert_eq!(family("circulant:12:2,6").is_regular(), Some(3));
    for (r, s) in [(3, 3), (4, 6), (6, 7), (10, 10)] {
        let t = family(&format!("torus:{r}x{s}"));
        assert_eq!(t.is_regular(), Some(4));
        assert!(t.check_invariants());
    }
    let w = family("wheel:9");
    assert_eq!(w.degree(0).unwrap(), 8);
    assert!((1..9).all(|v| w.degree(v).unwrap() == 3));
    let s = family("split:8+3");
    assert_eq!(s.edge_count(), 28);
    assert_eq!(s.n(), 11);
}
