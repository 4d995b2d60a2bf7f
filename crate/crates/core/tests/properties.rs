use graphsym::{
    apply_flips, are_isomorphic, asymmetric_index, automorphism_group, canonical_form,
    canonical_labeling, is_automorphism, parse_graph6, to_graph6_string, FamilySpec, FlipSet,
    Graph, SearchConfig,
};
use proptest::prelude::*;
use proptest::sample::subsequence;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let slots = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), slots).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|v| (0..v).map(move |u| (u, v)));
            Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

fn graph_and_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

fn family_spec() -> impl Strategy<Value = FamilySpec> {
    prop_oneof![
        (1usize..15).prop_map(FamilySpec::Path),
        (3usize..15).prop_map(FamilySpec::Cycle),
        (1usize..10).prop_map(FamilySpec::Complete),
        (2usize..12).prop_map(FamilySpec::Star),
        (4usize..12).prop_map(FamilySpec::Wheel),
        (5usize..20, 1usize..3).prop_map(|(m, d)| FamilySpec::Circulant {
            order: m,
            connections: vec![d]
        }),
        (1usize..5, 1usize..5).prop_map(|(r, s)| FamilySpec::Grid(r, s)),
        (1usize..4, 3usize..6).prop_map(|(r, s)| FamilySpec::PathCycleProduct(r, s)),
        (3usize..6, 3usize..6).prop_map(|(r, s)| FamilySpec::Torus(r, s)),
        (1usize..8, 1usize..4).prop_map(|(s, t)| FamilySpec::Split {
            clique: s,
            isolated: t
        }),
        (3usize..6).prop_map(FamilySpec::CycleWithPendantPaths),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn graph6_round_trip(g in graph(69)) {
        let text = to_graph6_string(&g);
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn complement_is_an_involution(g in graph(20)) {
        let c = g.complement();
        prop_assert_eq!(c.edge_count() + g.edge_count(), g.n() * g.n().saturating_sub(1) / 2);
        prop_assert_eq!(c.complement(), g);
    }

    #[test]
    fn operation_sizes(a in graph(8), b in graph(8)) {
        let (n1, n2, m1, m2) = (a.n(), b.n(), a.edge_count(), b.edge_count());
        let u = a.disjoint_union(&b);
        prop_assert_eq!((u.n(), u.edge_count()), (n1 + n2, m1 + m2));
        let j = a.join(&b);
        prop_assert_eq!((j.n(), j.edge_count()), (n1 + n2, m1 + m2 + n1 * n2));
        let p = a.cartesian_product(&b);
        prop_assert_eq!((p.n(), p.edge_count()), (n1 * n2, n1 * m2 + n2 * m1));
        prop_assert!(u.check_invariants() && j.check_invariants() && p.check_invariants());
    }

    #[test]
    fn canonical_form_ignores_labels((g, p) in graph_and_perm(12)) {
        let h = g.relabel(&p);
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        prop_assert!(are_isomorphic(&g, &h));
        let c = canonical_labeling(&g);
        prop_assert_eq!(canonical_form(&g.relabel(c.as_slice())), canonical_form(&g));
    }

    #[test]
    fn group_order_ignores_labels_and_complement((g, p) in graph_and_perm(10)) {
        let base = automorphism_group(&g);
        prop_assert_eq!(&automorphism_group(&g.relabel(&p)).order, &base.order);
        prop_assert_eq!(&automorphism_group(&g.complement()).order, &base.order);
        for gen in &base.generators {
            prop_assert!(is_automorphism(&g, gen).unwrap());
        }
        let mut seen: Vec<usize> = base.orbits.concat();
        seen.sort_unstable();
        prop_assert_eq!(seen, (0..g.n()).collect::<Vec<_>>());
        prop_assert_eq!(base.is_asymmetric, base.order == 1u32.into());
    }

    #[test]
    fn flips_undo((g, picks) in graph(10).prop_flat_map(|g| {
        let n = g.n();
        let all: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
        let len = all.len();
        (Just(g), subsequence(all, 0..=len.min(6)))
    })) {
        let (rem, add): (Vec<_>, Vec<_>) = picks.into_iter().partition(|&(u, v)| g.adjacent(u, v));
        let f = FlipSet::new(
            rem.iter().map(|&(u, v)| graphsym::EdgePair::new(u, v).unwrap()).collect(),
            add.iter().map(|&(u, v)| graphsym::EdgePair::new(u, v).unwrap()).collect(),
        );
        let h = apply_flips(&g, &f).unwrap();
        prop_assert_eq!(h.edge_count() + f.removed.len(), g.edge_count() + f.added.len());
        prop_assert_eq!(apply_flips(&h, &f.inverse()).unwrap(), g.clone());
        prop_assert_eq!(apply_flips(&g.complement(), &f.complemented()).unwrap(), h.complement());
    }

    #[test]
    fn family_text_round_trip(spec in family_spec()) {
        let text = spec.to_string();
        prop_assert_eq!(text.parse::<FamilySpec>().unwrap(), spec.clone());
        let g = spec.generate().unwrap();
        prop_assert_eq!(parse_graph6(&to_graph6_string(&g)).unwrap(), g);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn index_witness_is_minimal_and_complement_symmetric(g in graph(8).prop_filter("n >= 6", |g| g.n() >= 6)) {
        let cfg = SearchConfig::default();
        let r = asymmetric_index(&g, &cfg).unwrap();
        prop_assert_eq!(r.witnesses[0].size(), r.value);
        let h = apply_flips(&g, &r.witnesses[0]).unwrap();
        prop_assert!(automorphism_group(&h).is_asymmetric);
        prop_assert_eq!(asymmetric_index(&g.complement(), &cfg).unwrap().value, r.value);
        if r.value > 0 {
            let tighter = SearchConfig { max_k: r.value - 1, ..cfg };
            prop_assert!(asymmetric_index(&g, &tighter).is_err());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn family_graphs_are_well_formed(spec in family_spec()) {
        let g = spec.generate().unwrap();
        prop_assert!(g.check_invariants());
        match spec {
            FamilySpec::Cycle(_) => prop_assert_eq!(g.is_regular(), Some(2)),
            FamilySpec::Torus(..) => prop_assert_eq!(g.is_regular(), Some(4)),
            FamilySpec::Complete(n) => prop_assert_eq!(g.edge_count(), n * (n - 1) / 2),
            FamilySpec::Circulant { order, ref connections } => {
                let mut s: Vec<usize> = connections.iter().flat_map(|&d| [d % order, (order - d % order) % order]).collect();
                s.sort_unstable();
                s.dedup();
                prop_assert_eq!(g.is_regular(), Some(s.len()));
            }
            _ => {}
        }
    }
}
