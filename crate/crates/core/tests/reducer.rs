mod common;

use factorsmith::reducer::{minimize, minimize_with, Catalog, FactorCertificate};
use factorsmith::{
    extract_component_factor, verify_certificate, ColoredFactor, ComponentClass, Error, Graph,
    HalfIntegralAssignment,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn in_range(g: &Graph, k: u32, units: &[u8]) -> bool {
    let mut deg = vec![0u32; g.order()];
    for (&(u, v), &h) in g.edges().iter().zip(units) {
        deg[u] += h as u32;
        deg[v] += h as u32;
    }
    deg.iter().all(|d| (2..=2 * k + 1).contains(d))
}

/// Minimizes from `units` and checks the fixpoint certifies.
fn settles(g: &Graph, k: u32, units: Vec<u8>) {
    let h = HalfIntegralAssignment::from_half_units(g, units).unwrap();
    let f = ColoredFactor::from_assignment(g, k, &h).unwrap();
    let before = f.size();
    let (fixed, trace) = minimize(f).unwrap();
    assert!(trace.len() <= before);
    assert!(fixed.violation().is_none());
    let cert = FactorCertificate::of(&fixed).unwrap();
    assert!(
        cert.is_classified(),
        "{g:?} k={k} {:?}: stopped at {:?}\n{trace}",
        h.half_units(),
        cert.classes()
    );
    assert!(verify_certificate(g, &cert));
}

#[test]
fn every_start_on_five_vertices_settles() {
    // Every valid half-integral factor of every graph on 5 vertices.
    for g in common::all_graphs(5) {
        let m = g.size();
        for code in 0..3u32.pow(m as u32) {
            let units: Vec<u8> = (0..m)
                .map(|i| (code / 3u32.pow(i as u32) % 3) as u8)
                .collect();
            for k in 1..=3 {
                if in_range(&g, k, &units) {
                    settles(&g, k, units.clone());
                }
            }
        }
    }
}

#[test]
fn random_starts_on_larger_graphs_settle() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut tried = 0;
    while tried < 3000 {
        let n = rng.gen_range(6..=10);
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|_| rng.gen_bool(0.5))
            .collect();
        let g = Graph::from_edges(n, edges).unwrap();
        let units: Vec<u8> = (0..g.size()).map(|_| rng.gen_range(0..=2)).collect();
        for k in 1..=3 {
            if in_range(&g, k, &units) {
                settles(&g, k, units.clone());
                tried += 1;
            }
        }
    }
}

#[test]
fn long_cycles_and_paths() {
    for n in 3..=15 {
        for k in 1..=2 {
            let c = extract_component_factor(&Graph::cycle(n), k)
                .unwrap()
                .unwrap();
            assert!(verify_certificate(&Graph::cycle(n), &c.certificate));
        }
        let p = Graph::path(n);
        let x = extract_component_factor(&p, 1).unwrap();
        // P3 has no factor at k = 1; other paths do.
        assert_eq!(x.is_some(), n != 3);
    }
}

#[test]
fn c7_gives_p2_and_p5() {
    let x = extract_component_factor(&Graph::cycle(7), 1)
        .unwrap()
        .unwrap();
    let mut classes = x.certificate.classes();
    classes.sort();
    assert_eq!(classes, vec![ComponentClass::P2, ComponentClass::P5]);
}

#[test]
fn claw_has_no_factor_at_k1() {
    assert!(extract_component_factor(&Graph::star(3), 1)
        .unwrap()
        .is_none());
    let x = extract_component_factor(&Graph::star(2), 2)
        .unwrap()
        .unwrap();
    assert_eq!(x.certificate.classes(), vec![ComponentClass::Star(2)]);
}

#[test]
fn catalogs_are_not_mixed() {
    let g = Graph::cycle(5);
    let h = HalfIntegralAssignment::from_half_units(&g, vec![1; 5]).unwrap();
    let f = ColoredFactor::from_assignment(&g, 1, &h).unwrap();
    assert!(matches!(
        minimize_with(f, Catalog::Large),
        Err(Error::CatalogMismatch { k: 2, factor_k: 1 })
    ));
}

#[test]
fn long_chain_between_branch_vertices() {
    // Two branch vertices joined through two degree-2 vertices, each with
    // two arms of the form branch - s - l - p. Arms end in a red edge.
    let mut edges = vec![(0, 2), (2, 3), (1, 3)];
    let mut units = vec![1, 1, 1];
    let mut next = 4;
    for x in [0, 0, 1, 1] {
        edges.extend([(x, next), (next, next + 1), (next + 1, next + 2)]);
        units.extend([1, 1, 2]);
        next += 3;
    }
    let g = Graph::from_edges(next, edges.clone()).unwrap();
    let units: Vec<u8> = g
        .edges()
        .iter()
        .map(|e| units[edges.iter().position(|x| x == e).unwrap()])
        .collect();
    let h = HalfIntegralAssignment::from_half_units(&g, units).unwrap();
    let f = ColoredFactor::from_assignment(&g, 1, &h).unwrap();
    let (fixed, trace) = minimize(f).unwrap();
    assert_eq!(trace.steps()[0].rule, "R5", "{trace}");
    assert_eq!(trace.steps()[0].location, [0, 2, 3, 1]);
    let cert = FactorCertificate::of(&fixed).unwrap();
    assert!(cert.is_classified());
    assert!(verify_certificate(&g, &cert));
}
