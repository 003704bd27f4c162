#![allow(dead_code)]

use std::sync::Arc;

use artin_tits::artin_words::{ArtinWord, Letter};
use artin_tits::coxeter::{CoxeterGraph, Label};
use artin_tits::virtual_braids::gamma_vb;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn random_word(rng: &mut ChaCha8Rng, gens: &[usize], len: usize) -> ArtinWord {
    ArtinWord::new(
        (0..len)
            .map(|_| {
                let g = gens[rng.gen_range(0..gens.len())];
                if rng.gen_bool(0.5) {
                    Letter::pos(g)
                } else {
                    Letter::neg(g)
                }
            })
            .collect(),
    )
}

/// Inserts `r` or `r^{-1}` at a random position.
pub fn insert_relator(rng: &mut ChaCha8Rng, w: &ArtinWord, relators: &[ArtinWord]) -> ArtinWord {
    let r = &relators[rng.gen_range(0..relators.len())];
    let r = if rng.gen_bool(0.5) { r.clone() } else { r.inverse() };
    let at = rng.gen_range(0..=w.len());
    let l = w.letters();
    let mut out = l[..at].to_vec();
    out.extend_from_slice(r.letters());
    out.extend_from_slice(&l[at..]);
    ArtinWord::new(out)
}

/// The graphs of the relator and soundness criteria.
pub fn solver_graphs() -> Vec<(&'static str, Arc<CoxeterGraph>)> {
    vec![
        ("A_2", Arc::new(CoxeterGraph::dihedral(Label::Finite(3)))),
        ("A_3", Arc::new(CoxeterGraph::type_a(3))),
        ("B_2", Arc::new(CoxeterGraph::dihedral(Label::Finite(4)))),
        ("Gamma_VB3", Arc::new(gamma_vb(3).unwrap())),
        ("Gamma_VB4", Arc::new(gamma_vb(4).unwrap())),
    ]
}
