use std::sync::Arc;
use std::time::Instant;

use artin_tits::artin_words::{ArtinWord, Letter, WordOracle};
use artin_tits::coxeter::{CoxeterGraph, Label};
use artin_tits::cubepath::{is_normal, is_trivial, normalize, word_to_prepath, OracleRegistry};
use artin_tits::garside::{affine_a_oracle, garside_oracle};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_word(rng: &mut ChaCha8Rng, rank: usize, len: usize) -> ArtinWord {
    let letters = (0..len)
        .map(|_| {
            let g = rng.gen_range(0..rank);
            if rng.gen_bool(0.5) { Letter::pos(g) } else { Letter::neg(g) }
        })
        .collect();
    ArtinWord::new(letters)
}

/// Words that are trivial by construction: `u r u^{-1}` spliced together,
/// plus words `u v u^{-1}` that usually are not.
fn check(reg: &OracleRegistry, reference: &dyn WordOracle, seed: u64, count: usize) {
    let g = reg.graph().clone();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let start = Instant::now();
    for _ in 0..count {
        let len = rng.gen_range(0..=10);
        let w = random_word(&mut rng, g.rank(), len);
        let expected = reference.is_trivial(&w).unwrap();
        assert_eq!(is_trivial(reg, &w).unwrap(), expected, "word {}", w.display(&g));
        let (p, _) = normalize(reg, &word_to_prepath(&w)).unwrap();
        assert!(is_normal(reg, &p).unwrap(), "not normal for {}", w.display(&g));
        let u = random_word(&mut rng, g.rank(), 4);
        let conj = u.concat(&w).concat(&u.inverse()).concat(&w.inverse());
        assert_eq!(is_trivial(reg, &conj).unwrap(), reference.is_trivial(&conj).unwrap());
    }
    eprintln!("{} words in {:?}", count, start.elapsed());
}

#[test]
fn spherical_agreement() {
    for g in [
        CoxeterGraph::dihedral(Label::Finite(3)),
        CoxeterGraph::dihedral(Label::Finite(4)),
        CoxeterGraph::type_a(3),
        CoxeterGraph::type_b(3),
    ] {
        let g = Arc::new(g);
        let reference = garside_oracle(&g, g.all()).unwrap();
        let reg = OracleRegistry::new(g.clone());
        check(&reg, &reference, 7, 150);
    }
}

#[test]
fn affine_agreement() {
    let g = Arc::new(CoxeterGraph::affine_a(2));
    let reference = affine_a_oracle(2).unwrap();
    let reg = OracleRegistry::new(g);
    check(&reg, &reference, 11, 150);
}
