mod common;

use std::sync::Arc;

use artin_tits::artin_words::{theta, ArtinWord};
use artin_tits::coxeter::{CoxeterGraph, Label};
use artin_tits::cubepath::{artin_equal, is_normal, is_trivial, normalize, word_to_prepath, OracleRegistry};
use artin_tits::refcheck::{all_words, bfs_equal, Bounds, Presentation, Verdict};
use artin_tits::virtual_braids::{
    classify_components, gamma_vb, rewrite_to_semidirect, vb_relators, Permutation, VbComponent, VbLetter,
    VbSolver, VbWord,
};
use artin_tits::GenSet;
use common::random_word;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn path_graphs() -> Vec<Arc<CoxeterGraph>> {
    vec![
        Arc::new(CoxeterGraph::dihedral(Label::Finite(3))),
        Arc::new(CoxeterGraph::dihedral(Label::Finite(4))),
        Arc::new(CoxeterGraph::affine_a(2)),
        Arc::new(
            CoxeterGraph::from_edges(
                &["a", "b", "c"],
                &[("a", "b", Label::Finite(3)), ("b", "c", Label::Infinity), ("a", "c", Label::Finite(4))],
            )
            .unwrap(),
        ),
        Arc::new(gamma_vb(3).unwrap()),
    ]
}

#[test]
fn normalization_invariants() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for g in path_graphs() {
        let reg = OracleRegistry::new(g.clone());
        let gens: Vec<usize> = (0..g.rank()).collect();
        for _ in 0..40 {
            let len = rng.gen_range(0..=8);
            let w = random_word(&mut rng, &gens, len);
            let p = word_to_prepath(&w);
            let (q, mu) = normalize(&reg, &p).unwrap();
            assert!(is_normal(&reg, &q).unwrap(), "{}", w.display(&g));
            assert!(q.len() <= p.len());
            assert_eq!((q.x, q.y), (p.x, p.y));
            assert!(mu.support().is_subset(p.y));

            let before = p.alpha(p.len());
            let after = q.alpha(q.len()).concat(&mu);
            assert_eq!(theta(&g, &before).unwrap(), theta(&g, &after).unwrap());
            assert!(artin_equal(&reg, &before, &after).unwrap(), "{}", w.display(&g));

            let (again, nothing) = normalize(&reg, &q).unwrap();
            assert_eq!(again, q);
            assert!(nothing.is_empty());
        }
    }
}

#[test]
fn search_equalities_are_solver_equalities() {
    let bounds = Bounds { depth: 2, width: 500, max_len: 9 };
    for g in [
        Arc::new(CoxeterGraph::dihedral(Label::Finite(3))),
        Arc::new(CoxeterGraph::dihedral(Label::Finite(4))),
        Arc::new(CoxeterGraph::dihedral(Label::Infinity)),
    ] {
        let reg = OracleRegistry::new(g.clone());
        let pres = Presentation::artin(&g);
        let words = all_words(g.rank(), 3);
        let mut proved = 0;
        for (i, u) in words.iter().enumerate() {
            for v in &words[i..] {
                if bfs_equal(&pres, u, v, bounds) == Verdict::Equal {
                    proved += 1;
                    assert!(artin_equal(&reg, u, v).unwrap(), "{} = {}", u.display(&g), v.display(&g));
                }
            }
        }
        assert!(proved > words.len());
    }
}

fn random_vb(rng: &mut ChaCha8Rng, n: usize, len: usize) -> VbWord {
    let letters = (0..len)
        .map(|_| {
            let index = rng.gen_range(1..n);
            if rng.gen_bool(0.5) {
                VbLetter::Tau { index }
            } else {
                VbLetter::Sigma { index, sign: if rng.gen_bool(0.5) { 1 } else { -1 } }
            }
        })
        .collect();
    VbWord::new(n, letters).unwrap()
}

#[test]
fn rewrite_is_a_homomorphic_scan() {
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    for n in [3, 4, 5] {
        for _ in 0..100 {
            let (lu, lv) = (rng.gen_range(0..8), rng.gen_range(0..8));
            let u = random_vb(&mut rng, n, lu);
            let v = random_vb(&mut rng, n, lv);
            let (ku, pu) = rewrite_to_semidirect(&u);
            let (kv, pv) = rewrite_to_semidirect(&v);
            let (kuv, puv) = rewrite_to_semidirect(&u.concat(&v).unwrap());
            assert_eq!(kuv, ku.concat(&kv.act(&pu)));
            assert_eq!(puv, pu.compose(&pv));

            let mut p = Permutation::identity(n);
            for l in u.letters() {
                if let VbLetter::Tau { index } = *l {
                    p = p.compose(&Permutation::transposition(n, index));
                }
            }
            assert_eq!(pu, p);
        }
    }
}

#[test]
fn vb_equality_survives_relator_insertion() {
    let mut rng = ChaCha8Rng::seed_from_u64(33);
    let solver = VbSolver::new(3).unwrap();
    let relators = vb_relators(3).unwrap();
    for _ in 0..100 {
        let len = rng.gen_range(0..=6);
        let w = random_vb(&mut rng, 3, len);
        let r = &relators[rng.gen_range(0..relators.len())];
        let r = if rng.gen_bool(0.5) { r.clone() } else { r.inverse() };
        let at = rng.gen_range(0..=w.len());
        let mut letters = w.letters()[..at].to_vec();
        letters.extend_from_slice(r.letters());
        letters.extend_from_slice(&w.letters()[at..]);
        let v = VbWord::new(3, letters).unwrap();
        assert!(solver.equal(&w, &v).unwrap(), "{w} vs {v}");

        let other = random_vb(&mut rng, 3, len);
        assert_eq!(solver.equal(&w, &other).unwrap(), solver.equal(&v, &other).unwrap());
    }
}

#[test]
fn component_types_are_paths_or_long_cycles() {
    for n in [3, 4] {
        let g = gamma_vb(n).unwrap();
        let mut cycles = 0;
        for bits in 1u128..1 << g.rank() {
            let x = GenSet::from_bits(bits);
            if !g.is_free_of_infinity(x) {
                continue;
            }
            for c in classify_components(n, x).unwrap() {
                match c {
                    VbComponent::A(k) => assert!(k >= 1),
                    VbComponent::AffineA(k) => {
                        assert!(k >= 2);
                        cycles += 1;
                    }
                }
            }
        }
        assert!(cycles > 0);
    }
}

#[test]
fn infinite_labels_give_free_reduction() {
    let g = Arc::new(
        CoxeterGraph::from_edges(
            &["a", "b", "c"],
            &[("a", "b", Label::Infinity), ("b", "c", Label::Infinity), ("a", "c", Label::Infinity)],
        )
        .unwrap(),
    );
    let reg = OracleRegistry::new(g.clone());
    let mut rng = ChaCha8Rng::seed_from_u64(34);
    for _ in 0..200 {
        let len = rng.gen_range(0..=5);
        let half = random_word(&mut rng, &[0, 1, 2], len);
        let w = if rng.gen_bool(0.5) { half.concat(&half.inverse()) } else { half.concat(&random_word(&mut rng, &[0, 1, 2], 3)) };
        assert_eq!(is_trivial(&reg, &w).unwrap(), w.free_reduced().is_empty(), "{}", w.display(&g));
    }
    assert!(!is_trivial(&reg, &ArtinWord::parse(&g, "a b a^-1 b^-1").unwrap()).unwrap());
}
