use std::collections::BTreeMap;
use std::sync::OnceLock;

use lmp_core::classify::{all_types, list_minuscule};
use lmp_core::vanishing::{
    allowed_roots, coefficient_lower_bound, dijkstra_order, extremal_graph, ladder_search,
    lattice_lower_bound, shortest_ladder, target_weight, EdgeSet,
};
use lmp_core::weyl::{
    involution_permutation, longest_element, longest_word, orbit, weyl_involution,
};
use lmp_core::{Family, Parabolic, Root, RootSystem, Weight, WeylWord};
use proptest::prelude::*;

const WEIGHT_SYSTEMS: &[&str] = &[
    "A1", "A2", "A3", "A4", "A6", "B2", "B3", "B4", "B6", "C2", "C3", "C4", "C6", "D4", "D5", "D7",
    "E6", "E7", "E8", "F4", "G2",
];

// Every orbit of a fundamental weight here stays small.
const LADDER_SYSTEMS: &[&str] = &[
    "A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "D5", "E6", "F4", "G2",
];

fn system(name: &str) -> &'static RootSystem {
    static CACHE: OnceLock<BTreeMap<String, RootSystem>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| {
        WEIGHT_SYSTEMS
            .iter()
            .chain(LADDER_SYSTEMS)
            .map(|n| (n.to_string(), RootSystem::new(n.parse().unwrap()).unwrap()))
            .collect()
    });
    &cache[name]
}

fn weight_case() -> impl Strategy<Value = (&'static str, Vec<usize>, Vec<i64>)> {
    prop::sample::select(WEIGHT_SYSTEMS).prop_flat_map(|name| {
        let n = system(name).rank();
        (
            Just(name),
            prop::collection::vec(0..n, 0..16),
            prop::collection::vec(-4i64..=4, n),
        )
    })
}

/// A system, an omitted index and a `d`.
fn ladder_case() -> impl Strategy<Value = (&'static str, usize, usize)> {
    prop::sample::select(LADDER_SYSTEMS).prop_flat_map(|name| {
        let n = system(name).rank();
        (Just(name), 0..n, 0..n)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn pairings_are_weyl_invariant((name, letters, lambda) in weight_case(), k in 0usize..120) {
        let rs = system(name);
        let w = WeylWord::from_letters(letters);
        let lambda = Weight::new(lambda);
        let beta = rs.positive_root(k % rs.positive_roots().len()).clone();
        let w_lambda = w.act(rs, &lambda).unwrap();
        let w_beta = w.act_on_root(rs, &beta).unwrap();
        prop_assert!(rs.is_root(w_beta.coords()));
        prop_assert_eq!(
            rs.pairing(&w_lambda, &w_beta).unwrap(),
            rs.pairing(&lambda, &beta).unwrap()
        );
        prop_assert_eq!(rs.half_norm(&w_beta).unwrap(), rs.half_norm(&beta).unwrap());
    }

    #[test]
    fn word_inverse_undoes_action((name, letters, lambda) in weight_case()) {
        let rs = system(name);
        let w = WeylWord::from_letters(letters);
        let lambda = Weight::new(lambda);
        let there = w.act(rs, &lambda).unwrap();
        prop_assert_eq!(w.inverse().act(rs, &there).unwrap(), lambda.clone());
        let ww = w.compose(&w.inverse());
        prop_assert_eq!(ww.act(rs, &lambda).unwrap(), lambda);
    }

    #[test]
    fn longest_elements_are_involutions((name, _, lambda) in weight_case(), mask in any::<u16>()) {
        let rs = system(name);
        let n = rs.rank();
        let lambda = Weight::new(lambda);
        let subset: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let w0 = longest_word(rs);
        let tau = longest_element(rs, &subset).unwrap();
        for w in [&w0, &tau] {
            let once = w.act(rs, &lambda).unwrap();
            prop_assert_eq!(w.act(rs, &once).unwrap(), lambda.clone());
        }
        // τ sends the subsystem's positive roots to negative roots and
        // permutes the remaining positive roots.
        let mut levi = 0;
        for beta in rs.positive_roots() {
            let image = tau.act_on_root(rs, beta).unwrap();
            if beta.leaves(&subset) {
                prop_assert!(image.is_positive());
            } else {
                prop_assert!(image.is_negative());
                levi += 1;
            }
        }
        prop_assert_eq!(tau.len(), levi);
    }

    #[test]
    fn root_lattice_round_trip((name, _, coeffs) in weight_case()) {
        let rs = system(name);
        let n = rs.rank();
        let mut lambda = Weight::zero(n);
        for (j, &c) in coeffs.iter().enumerate() {
            let alpha = rs.root_as_weight(&Root::simple(n, j)).unwrap();
            lambda = lambda.scaled_sub(-c, &alpha);
        }
        prop_assert_eq!(rs.to_root_lattice(&lambda).unwrap(), Some(coeffs));
    }

    #[test]
    fn involution_is_negated_w0((name, _, lambda) in weight_case()) {
        let rs = system(name);
        let lambda = Weight::new(lambda);
        let i_lambda = weyl_involution(rs, &lambda).unwrap();
        let w0 = longest_word(rs);
        prop_assert_eq!(i_lambda.clone(), w0.act(rs, &lambda).unwrap().negate());
        let perm = involution_permutation(rs);
        for (j, &l) in lambda.coords().iter().enumerate() {
            prop_assert_eq!(i_lambda.coords()[perm[j]], l);
        }
    }

    #[test]
    fn lazy_search_matches_full_graph((name, p, d) in ladder_case(), relaxed in any::<bool>()) {
        let rs = system(name);
        let edges = if relaxed { EdgeSet::Relaxed } else { EdgeSet::Strict };
        let parabolic = Parabolic::maximal(rs.rank(), p).unwrap();
        let target = target_weight(rs, &parabolic, d).unwrap();
        let graph = extremal_graph(rs, d, edges).unwrap();
        let full = shortest_ladder(&graph, &target.source, &target.sink).unwrap();
        let lazy = ladder_search(rs, &allowed_roots(rs, d, edges), &target.source, &target.sink)
            .unwrap();
        prop_assert_eq!(&lazy, &full);
        // The witness is a genuine ladder along allowed roots.
        let mut chi = target.source.clone();
        let mut sum = vec![0i64; rs.rank()];
        for step in &lazy.steps {
            prop_assert_eq!(&step.from, &chi);
            prop_assert!(relaxed || step.root.coords()[d] > 0);
            let r = rs.pairing(&chi, &step.root).unwrap();
            prop_assert!(r >= 1);
            prop_assert_eq!(r, step.multiplicity);
            chi = rs.reflect_by_root(&chi, &step.root).unwrap();
            prop_assert_eq!(&step.to, &chi);
            for (s, b) in sum.iter_mut().zip(step.root.coords()) {
                *s += r * b;
            }
        }
        prop_assert_eq!(&chi, &target.sink);
        prop_assert_eq!(lazy.cost as i64, lazy.steps.iter().map(|s| s.multiplicity).sum::<i64>());
        prop_assert_eq!(sum, target.root_coords);
    }

    #[test]
    fn lower_bounds_are_ordered((name, p, d) in ladder_case()) {
        let rs = system(name);
        let parabolic = Parabolic::maximal(rs.rank(), p).unwrap();
        let strict = dijkstra_order(rs, &parabolic, d, EdgeSet::Strict).unwrap().cost;
        let relaxed = dijkstra_order(rs, &parabolic, d, EdgeSet::Relaxed).unwrap().cost;
        let lattice = lattice_lower_bound(rs, &parabolic, d).unwrap().value();
        prop_assert!(relaxed <= strict);
        let lattice = lattice.expect("a ladder exists, so the target decomposes");
        prop_assert!(lattice <= strict);
        if let Some(c) = coefficient_lower_bound(rs, &parabolic, d).unwrap() {
            prop_assert!(c <= lattice);
        }
    }

    #[test]
    fn ladder_respects_diagram_involution((name, p, d) in ladder_case()) {
        let rs = system(name);
        let perm = involution_permutation(rs);
        let n = rs.rank();
        let a = dijkstra_order(rs, &Parabolic::maximal(n, p).unwrap(), d, EdgeSet::Strict).unwrap();
        let b = dijkstra_order(rs, &Parabolic::maximal(n, perm[p]).unwrap(), perm[d], EdgeSet::Strict)
            .unwrap();
        prop_assert_eq!(a.cost, b.cost);
    }

    #[test]
    fn source_is_negated_tau_w0((name, p, d) in ladder_case()) {
        let rs = system(name);
        let n = rs.rank();
        let parabolic = Parabolic::maximal(n, p).unwrap();
        let target = target_weight(rs, &parabolic, d).unwrap();
        let tau = longest_element(rs, &parabolic.retained()).unwrap();
        let w0 = longest_word(rs);
        let omega = Weight::fundamental(n, d);
        let expected = tau.act(rs, &w0.act(rs, &omega).unwrap()).unwrap().negate();
        prop_assert_eq!(&target.source, &expected);
        prop_assert_eq!(&target.sink, &omega.negate());
        prop_assert!(target.root_coords.iter().all(|&c| c >= 0));
    }
}

fn all_systems(max_rank: usize) -> Vec<RootSystem> {
    all_types(max_rank)
        .into_iter()
        .map(|k| RootSystem::new(k).unwrap())
        .collect()
}

#[test]
fn positive_root_counts() {
    for rs in all_systems(12) {
        let n = rs.rank();
        let expected = match rs.kind().family() {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => [36, 63, 120][n - 6],
            Family::F => 24,
            Family::G => 6,
        };
        assert_eq!(rs.positive_roots().len(), expected, "{}", rs.kind());
        assert_eq!(longest_word(&rs).len(), expected, "{}", rs.kind());
        let theta = rs.highest_root();
        assert!(rs
            .positive_roots()
            .iter()
            .all(|b| b.height() <= theta.height()));
    }
}

#[test]
fn roots_closed_under_simple_reflections() {
    for rs in all_systems(8) {
        let n = rs.rank();
        for beta in rs.positive_roots() {
            for i in 0..n {
                let image = rs.simple_reflection_root(i, beta).unwrap();
                assert!(
                    rs.is_root(image.coords()),
                    "{} s{} {:?}",
                    rs.kind(),
                    i + 1,
                    beta
                );
                if *beta != Root::simple(n, i) {
                    assert!(image.is_positive());
                }
            }
        }
    }
}

fn factor(mut k: u64, exps: &mut BTreeMap<u64, i64>, sign: i64) {
    let mut p = 2;
    while k > 1 {
        while k.is_multiple_of(p) {
            *exps.entry(p).or_default() += sign;
            k /= p;
        }
        p += 1;
    }
}

/// `Π ⟨λ+ρ, β∨⟩ / ⟨ρ, β∨⟩` over positive roots, by prime exponents.
fn weyl_dimension(rs: &RootSystem, lambda: &Weight) -> u128 {
    let shifted = lambda.add(&rs.rho());
    let mut exps = BTreeMap::new();
    for beta in rs.positive_roots() {
        factor(rs.pairing(&shifted, beta).unwrap() as u64, &mut exps, 1);
        factor(rs.pairing(&rs.rho(), beta).unwrap() as u64, &mut exps, -1);
    }
    exps.into_iter()
        .map(|(p, e)| {
            assert!(e >= 0);
            (p as u128).pow(e as u32)
        })
        .product()
}

fn binomial(n: u128, k: u128) -> u128 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn minuscule_orbits() {
    for rs in all_systems(9) {
        let n = rs.rank();
        for d in list_minuscule(&rs) {
            let omega = Weight::fundamental(n, d);
            let orb = orbit(&rs, &omega).unwrap();
            assert_eq!(
                orb.len() as u128,
                weyl_dimension(&rs, &omega),
                "{} ω{}",
                rs.kind(),
                d + 1
            );
            for chi in &orb {
                for k in 0..rs.positive_roots().len() {
                    assert!(rs.pairing_positive(chi.coords(), k).abs() <= 1);
                }
            }
        }
    }
}

#[test]
fn classical_orbit_sizes() {
    for n in 1..=9 {
        let rs = RootSystem::new(format!("A{n}").parse().unwrap()).unwrap();
        for d in 0..n {
            let size = orbit(&rs, &Weight::fundamental(n, d)).unwrap().len() as u128;
            assert_eq!(size, binomial(n as u128 + 1, d as u128 + 1));
        }
    }
    for n in 4..=8 {
        let rs = RootSystem::new(format!("D{n}").parse().unwrap()).unwrap();
        for d in 0..n - 2 {
            let size = orbit(&rs, &Weight::fundamental(n, d)).unwrap().len() as u128;
            assert_eq!(size, (1 << (d + 1)) * binomial(n as u128, d as u128 + 1));
        }
        for d in [n - 2, n - 1] {
            let size = orbit(&rs, &Weight::fundamental(n, d)).unwrap().len() as u128;
            assert_eq!(size, 1 << (n - 1));
        }
    }
}

#[test]
fn regular_orbit_is_the_whole_group() {
    for rs in all_systems(5)
        .into_iter()
        .chain(["E6", "F4"].map(|s| system(s).clone()))
    {
        let size = orbit(&rs, &rs.rho()).unwrap().len() as u128;
        assert_eq!(size, rs.kind().weyl_group_order(), "{}", rs.kind());
    }
}

#[test]
fn graph_edges_are_reflections() {
    for name in ["B3", "D5", "E6", "F4"] {
        let rs = system(name);
        for d in 0..rs.rank() {
            let graph = extremal_graph(rs, d, EdgeSet::Relaxed).unwrap();
            let mut incoming = 0usize;
            let mut outgoing = 0usize;
            for u in 0..graph.len() as u32 {
                for e in graph.out_edges(u) {
                    let beta = rs.positive_root(e.root);
                    let chi = graph.node(e.from);
                    assert_eq!(e.cost, rs.pairing(chi, beta).unwrap());
                    assert!(e.cost >= 1);
                    assert_eq!(graph.node(e.to), &rs.reflect_by_root(chi, beta).unwrap());
                    outgoing += 1;
                }
                graph.for_each_in_edge(u, |_| incoming += 1);
            }
            assert_eq!(incoming, outgoing);
        }
    }
}

#[test]
fn targets_are_integral_and_nonnegative() {
    for rs in all_systems(7) {
        let n = rs.rank();
        for p in 0..n {
            let parabolic = Parabolic::maximal(n, p).unwrap();
            for d in 0..n {
                let t = target_weight(&rs, &parabolic, d).unwrap();
                assert!(t.root_coords.iter().all(|&c| c >= 0));
                assert_eq!(rs.to_root_lattice(&t.value).unwrap(), Some(t.root_coords));
            }
        }
    }
}
