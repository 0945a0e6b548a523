mod common;

use factorsmith::formats::{encode_graph6, parse_graph6};
use factorsmith::gf::{find_gf_factor_with, GfEngine};
use factorsmith::matching::max_matching;
use factorsmith::{
    check_iso_condition, extract_component_factor, find_fractional_factor, gf_condition_witness,
    iso_after_removal, isolated_toughness, verify_certificate, verify_fractional, DegreeBounds,
    Graph, MultiGraph, Ratio, Toughness,
};
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let edges = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .zip(bits)
                .filter(|&(_, b)| b)
                .map(|(e, _)| e);
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

/// A multigraph with multiplicities 0..=2 and strict bounds g < f.
fn bounded_multigraph() -> impl Strategy<Value = (MultiGraph, Vec<u32>, Vec<u32>)> {
    (1..=5usize).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (
            proptest::collection::vec(0..=2u8, pairs),
            proptest::collection::vec((0..=3u32, 1..=3u32), n),
        )
            .prop_map(move |(mult, gaps)| {
                let edges = (0..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .zip(mult)
                    .filter(|&(_, m)| m > 0)
                    .map(|((u, v), m)| (u, v, m));
                let m = MultiGraph::from_edges(n, edges).unwrap();
                let g: Vec<u32> = gaps.iter().map(|&(g, _)| g).collect();
                let f: Vec<u32> = gaps.iter().map(|&(g, d)| g + d).collect();
                (m, g, f)
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn graph6_round_trip(g in graph(12)) {
        let text = encode_graph6(&g).unwrap();
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn doubling_doubles_degrees(g in graph(10)) {
        let m = g.double();
        prop_assert_eq!(m.size(), 2 * g.size());
        let expected: Vec<u32> = (0..g.order()).map(|v| 2 * g.degree(v) as u32).collect();
        prop_assert_eq!(m.degrees(), expected);
    }

    #[test]
    fn matching_is_maximum(g in graph(7)) {
        let m = max_matching(&g);
        prop_assert!(m.is_valid_for(&g));
        prop_assert_eq!(m.size(), common::max_matching_size(&g));
    }

    #[test]
    fn condition_matches_subset_scan(g in graph(8), num in 1..8u64, den in 1..4u64) {
        let witness = check_iso_condition(&g, Ratio::new(num, den)).unwrap();
        prop_assert_eq!(witness.is_some(), common::iso_violation(&g, num, den).is_some());
        if let Some(w) = witness {
            let iso = iso_after_removal(&g, &w.s);
            prop_assert_eq!(&iso, &w.isolated);
            prop_assert!(iso.len() as u64 * den > num * w.s.len() as u64);
        }
    }

    #[test]
    fn toughness_matches_subset_scan(g in graph(8)) {
        let got = match isolated_toughness(&g).unwrap() {
            Toughness::Infinite => None,
            Toughness::Finite(r) => Some((r.numer(), r.denom())),
        };
        prop_assert_eq!(got, common::toughness(&g));
    }

    #[test]
    fn engines_match_oracle((m, g, f) in bounded_multigraph()) {
        let b = DegreeBounds::new(g.clone(), f.clone()).unwrap();
        let exists = common::gf_factor_exists(m.order(), m.edges(), &g, &f);
        for engine in [GfEngine::Backtracking, GfEngine::Gadget] {
            let found = find_gf_factor_with(&m, &b, engine).unwrap();
            prop_assert_eq!(found.is_some(), exists, "{:?}", engine);
            if let Some(factor) = found {
                prop_assert!(factor.satisfies(&b));
            }
        }
        prop_assert_eq!(gf_condition_witness(&m, &b).unwrap().is_none(), exists);
    }

    #[test]
    fn fractional_factors_verify(g in graph(10), k in 1..=3u32) {
        if let Some(h) = find_fractional_factor(&g, k).unwrap() {
            prop_assert!(verify_fractional(&g, k, &h).unwrap());
        }
    }

    #[test]
    fn certificates_verify(g in graph(11), k in 1..=3u32) {
        let holds = check_iso_condition(&g, Ratio::k_plus_half(k)).unwrap().is_none();
        let x = extract_component_factor(&g, k).unwrap();
        prop_assert_eq!(x.is_some(), holds);
        if let Some(x) = x {
            prop_assert!(verify_certificate(&g, &x.certificate));
            prop_assert!(x.trace.len() <= g.size());
        }
    }
}
