mod common;

use std::sync::Arc;

use artin_tits::artin_words::{
    delta_decompose, delta_word, iota_intersection, kappa, pi_tilde, tau_tilde, theta, ArtinWord,
    DeltaFactor, WordOracle,
};
use artin_tits::coxeter::{CoxeterGraph, Label};
use artin_tits::garside::{build_garside, oracle_for};
use artin_tits::refcheck::{artin_relators, bfs_equal, Bounds, Presentation, Verdict};
use artin_tits::GenSet;
use common::{insert_relator, random_word};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn graphs() -> Vec<Arc<CoxeterGraph>> {
    vec![
        Arc::new(CoxeterGraph::type_a(3)),
        Arc::new(CoxeterGraph::type_b(3)),
        Arc::new(CoxeterGraph::affine_a(2)),
        Arc::new(CoxeterGraph::dihedral(Label::Infinity)),
        Arc::new(
            CoxeterGraph::from_edges(
                &["a", "b", "c", "d"],
                &[("a", "b", Label::Finite(5)), ("b", "c", Label::Infinity), ("c", "d", Label::Finite(4))],
            )
            .unwrap(),
        ),
    ]
}

fn coxeter_input() -> impl Strategy<Value = (usize, Vec<usize>, u128)> {
    (0..graphs().len(), prop::collection::vec(0usize..16, 0..14), any::<u128>())
}

fn setup(idx: usize, raw: &[usize], bits: u128) -> (Arc<CoxeterGraph>, Vec<usize>, GenSet) {
    let g = graphs()[idx].clone();
    let n = g.rank();
    let word = raw.iter().map(|&s| s % n).collect();
    (g.clone(), word, GenSet::from_bits(bits).intersection(g.all()))
}

fn colored_word(rng: &mut ChaCha8Rng, g: &Arc<CoxeterGraph>, set: GenSet, max_len: usize) -> ArtinWord {
    let gens: Vec<usize> = set.iter().collect();
    let len = rng.gen_range(0..=max_len);
    let u = random_word(rng, &gens, len);
    u.concat(&tau_tilde(&theta(g, &u).unwrap()).inverse())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn word_times_inverse_reduces_to_identity((idx, raw, bits) in coxeter_input()) {
        let (g, w, _) = setup(idx, &raw, bits);
        let mut full = w.clone();
        full.extend(w.iter().rev());
        prop_assert!(g.reduce(&full).unwrap().is_identity());
        let e = g.reduce(&w).unwrap();
        prop_assert!(e.multiply(&e.inverse()).unwrap().is_identity());
    }

    #[test]
    fn length_changes_by_exactly_one((idx, raw, bits) in coxeter_input()) {
        let (g, w, _) = setup(idx, &raw, bits);
        let e = g.reduce(&w).unwrap();
        for s in 0..g.rank() {
            let l = e.mul_generator(s).unwrap().length();
            prop_assert!(l == e.length() + 1 || l + 1 == e.length());
            prop_assert_eq!(l > e.length(), e.length_increases_right(s).unwrap());
        }
    }

    #[test]
    fn parabolic_decomposition_is_reduced((idx, raw, bits) in coxeter_input()) {
        let (g, w, t) = setup(idx, &raw, bits);
        let e = g.reduce(&w).unwrap();
        let (w0, w1) = e.parabolic_decompose_left(t);
        prop_assert_eq!(e.length(), w0.length() + w1.length());
        prop_assert!(w0.support().is_subset(t));
        prop_assert!(w1.left_descents().intersection(t).is_empty());
        prop_assert_eq!(w0.multiply(&w1).unwrap(), e);
    }

    #[test]
    fn minimal_coset_representatives_are_length_additive((idx, raw, bits) in coxeter_input()) {
        let (g, w, x) = setup(idx, &raw, bits);
        prop_assume!(g.classify_finite(x).is_finite());
        let w1 = g.reduce(&w).unwrap();
        let reduced = w1.right_descents().intersection(x).is_empty();
        let additive = g
            .enumerate_parabolic(x, 10_000)
            .unwrap()
            .iter()
            .all(|u| w1.multiply(u).unwrap().length() == w1.length() + u.length());
        prop_assert_eq!(reduced, additive);
    }

    #[test]
    fn delta_words_have_trivial_image((idx, raw, bits) in coxeter_input(), s in 0usize..16, neg in any::<bool>()) {
        let (g, w, _) = setup(idx, &raw, bits);
        let w = g.reduce(&w).unwrap();
        let s = s % g.rank();
        prop_assume!(w.length_increases_right(s).unwrap());
        let f = DeltaFactor { w, s, sign: if neg { -1 } else { 1 } };
        prop_assert!(theta(&g, &delta_word(&f).unwrap()).unwrap().is_identity());
    }
}

#[test]
fn finite_classification_matches_enumeration() {
    for g in graphs() {
        for bits in 1u128..1 << g.rank() {
            let x = GenSet::from_bits(bits);
            if x.len() > 3 {
                continue;
            }
            let class = g.classify_finite(x);
            match class.order() {
                Some(order) => {
                    let found = g.enumerate_parabolic(x, order as usize + 1).unwrap();
                    assert_eq!(found.len() as u128, order, "{}", g.format_subset(x));
                }
                None => assert!(g.enumerate_parabolic(x, 5_000).is_err(), "{}", g.format_subset(x)),
            }
        }
    }
}

#[test]
fn free_of_infinity_is_closed_under_subsets() {
    for g in graphs() {
        let n = g.rank();
        for bits in 0u128..1 << n {
            let x = GenSet::from_bits(bits);
            if g.classify_finite(x).is_finite() {
                assert!(g.is_free_of_infinity(x));
            }
            if g.is_free_of_infinity(x) {
                for s in x.iter() {
                    assert!(g.is_free_of_infinity(x.without(s)));
                }
            }
        }
    }
}

#[test]
fn delta_decomposition_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for g in [Arc::new(CoxeterGraph::type_a(3)), Arc::new(CoxeterGraph::type_b(3)), Arc::new(CoxeterGraph::affine_a(2))] {
        let oracle = oracle_for(&g, g.all(), &[]).unwrap();
        let gens: Vec<usize> = (0..g.rank()).collect();
        for _ in 0..200 {
            let len = rng.gen_range(0..=10);
            let w = random_word(&mut rng, &gens, len);
            let (factors, residual) = delta_decompose(&g, &w).unwrap();
            let mut rebuilt = ArtinWord::empty();
            for f in &factors {
                rebuilt.extend(&delta_word(f).unwrap());
            }
            rebuilt.extend(&tau_tilde(&residual));
            assert!(oracle.equal(&rebuilt, &w).unwrap(), "{}", w.display(&g));
            assert_eq!(residual, theta(&g, &w).unwrap());
        }
    }
}

#[test]
fn retraction_is_a_homomorphism() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    let g = Arc::new(CoxeterGraph::type_b(3));
    let oracle = oracle_for(&g, g.all(), &[]).unwrap();
    for _ in 0..150 {
        let t = GenSet::from_bits(rng.gen_range(0..8));
        let w1 = colored_word(&mut rng, &g, g.all(), 7);
        let w2 = colored_word(&mut rng, &g, g.all(), 7);
        let joint = pi_tilde(&g, &w1.concat(&w2), t).unwrap();
        let split = pi_tilde(&g, &w1, t).unwrap().concat(&pi_tilde(&g, &w2, t).unwrap());
        assert!(joint.support().is_subset(t));
        assert!(oracle.equal(&joint, &split).unwrap());
    }
}

#[test]
fn kappa_and_iota_are_sound() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let g = Arc::new(CoxeterGraph::type_a(3));
    let z = g.all();
    let oracle = oracle_for(&g, z, &[]).unwrap();
    let relators = artin_relators(&g);
    let (mut members, mut hits) = (0, 0);
    for _ in 0..200 {
        let t = GenSet::from_bits(rng.gen_range(0..8));
        let gens: Vec<usize> = if t.is_empty() { vec![] } else { t.iter().collect() };
        let len = rng.gen_range(0..=5);
        let mut w = random_word(&mut rng, &gens, if gens.is_empty() { 0 } else { len });
        for _ in 0..rng.gen_range(0..=2) {
            w = insert_relator(&mut rng, &w, &relators);
        }
        if rng.gen_bool(0.3) {
            w = random_word(&mut rng, &[0, 1, 2], 6);
        }
        if let Some(k) = kappa(&g, &w, t, z, &oracle).unwrap() {
            members += 1;
            assert!(k.support().is_subset(t.intersection(z)));
            assert!(oracle.equal(&k, &w).unwrap());
        } else {
            assert!(!w.support().is_subset(t));
        }

        let (x, y) = (GenSet::from_bits(rng.gen_range(0..8)), GenSet::from_bits(rng.gen_range(0..8)));
        if let Some(u) = iota_intersection(&g, &w, x, y, z, &oracle).unwrap() {
            hits += 1;
            assert!(u.support().is_subset(y.intersection(z)));
            assert!(kappa(&g, &w.inverse().concat(&u), x, z, &oracle).unwrap().is_some());
        }
    }
    assert!(members > 50 && hits > 20, "{members} members, {hits} intersections");
}

#[test]
fn garside_delta_is_fixed_by_conjugation() {
    for g in [
        Arc::new(CoxeterGraph::type_a(3)),
        Arc::new(CoxeterGraph::type_b(3)),
        Arc::new(CoxeterGraph::dihedral(Label::Finite(5))),
    ] {
        let gs = build_garside(&g, g.all()).unwrap();
        let delta = gs.delta();
        let image: Vec<usize> = delta.word().iter().map(|&s| gs.phi_generator(s).unwrap()).collect();
        assert_eq!(g.reduce(&image).unwrap(), delta);
        for a in gs.simples() {
            let c = gs.complement(&a).unwrap();
            assert_eq!(a.multiply(&c).unwrap(), delta);
            assert_eq!(a.length() + c.length(), delta.length());
        }
    }
}

#[test]
fn product_oracle_agrees_with_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    let g = Arc::new(
        CoxeterGraph::from_edges(
            &["a", "b", "c", "d"],
            &[("a", "b", Label::Finite(3)), ("b", "c", Label::Infinity), ("c", "d", Label::Finite(4))],
        )
        .unwrap(),
    );
    let pres = Presentation::artin(&g);
    let relators = artin_relators(&g);
    let bounds = Bounds { depth: 2, width: 1_000, max_len: 12 };
    let mut proved = 0;
    for x in [g.subset("a b d").unwrap(), g.subset("a c d").unwrap(), g.subset("a b c d").unwrap()] {
        if !g.is_free_of_infinity(x) {
            continue;
        }
        let oracle = oracle_for(&g, x, &[]).unwrap();
        let local: Vec<ArtinWord> =
            relators.iter().filter(|r| r.support().is_subset(x)).cloned().collect();
        let gens: Vec<usize> = x.iter().collect();
        for _ in 0..100 {
            let len = rng.gen_range(0..=6);
            let u = random_word(&mut rng, &gens, len);
            let v = if rng.gen_bool(0.5) {
                insert_relator(&mut rng, &u, &local)
            } else {
                random_word(&mut rng, &gens, len)
            };
            let verdict = oracle.equal(&u, &v).unwrap();
            if bfs_equal(&pres, &u, &v, bounds) == Verdict::Equal {
                proved += 1;
                assert!(verdict, "{} vs {}", u.display(&g), v.display(&g));
            }
            if !verdict {
                assert_ne!(u.free_reduced(), v.free_reduced());
            }
        }
    }
    assert!(proved > 100, "{proved} pairs proved equal");
}
