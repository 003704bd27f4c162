//! Type `Ã_k` through the embedding into the Artin group of type `B_{k+1}`.
//!
//! With `B_{k+1}` generated by `t, s_1, .., s_k` (label 4 on `t - s_1`) and
//! `ρ = t s_1 ⋯ s_k`, the cycle generators map to `a_i ↦ ρ^{i-1} s_1 ρ^{1-i}`.
//! Every defining relation is checked in `B_{k+1}` before the oracle is
//! handed out.

use std::sync::Arc;

use super::{build_garside, GarsideStructure, RawNF};
use crate::artin_words::{ArtinWord, Letter, WordOracle};
use crate::coxeter::{CoxeterGraph, Label};
use crate::error::{Error, Result};
use crate::genset::GenSet;

/// Word oracle for a component of type `Ã_k`.
#[derive(Debug)]
pub struct AffineOracle {
    set: GenSet,
    /// Global generator for each `a_i`, in cycle order.
    cycle: Vec<usize>,
    /// Image of `a_i` in `B_{k+1}`, indexed by global generator.
    images: Vec<Option<ArtinWord>>,
    b: GarsideStructure,
}

/// The generators of a 3-labelled cycle, starting at the smallest and
/// continuing towards its smaller neighbour.
pub(crate) fn cycle_order(graph: &CoxeterGraph, comp: GenSet) -> Option<Vec<usize>> {
    let verts: Vec<usize> = comp.iter().collect();
    if verts.len() < 3 {
        return None;
    }
    let nbrs = |v: usize| -> Vec<usize> {
        verts.iter().copied().filter(|&u| u != v && graph.label(u, v) != Label::Finite(2)).collect()
    };
    for &v in &verts {
        let nb = nbrs(v);
        if nb.len() != 2 || nb.iter().any(|&u| graph.label(u, v) != Label::Finite(3)) {
            return None;
        }
    }
    let start = verts[0];
    let mut order = vec![start];
    let mut prev = start;
    let mut cur = nbrs(start)[0];
    while cur != start {
        order.push(cur);
        let next = nbrs(cur).into_iter().find(|&u| u != prev)?;
        prev = cur;
        cur = next;
    }
    (order.len() == verts.len()).then_some(order)
}

fn power(w: &ArtinWord, e: usize) -> ArtinWord {
    let mut out = ArtinWord::empty();
    for _ in 0..e {
        out.extend(w);
    }
    out
}

impl AffineOracle {
    /// Oracle for the cycle component `comp` of `graph`.
    pub fn for_component(graph: &CoxeterGraph, comp: GenSet) -> Result<Self> {
        let cycle = cycle_order(graph, comp)
            .ok_or_else(|| Error::NotSpherical(graph.format_subset(comp)))?;
        let k = cycle.len() - 1;
        let b = Arc::new(CoxeterGraph::type_b(k + 1));
        let gs = build_garside(&b, b.all())?;
        // Generator 0 of B_{k+1} is t, generators 1..=k are s_1..s_k.
        let rho = ArtinWord::positive(&(0..=k).collect::<Vec<_>>());
        let s1 = ArtinWord::positive(&[1]);
        let mut images = vec![None; graph.rank()];
        let mut by_index = Vec::new();
        for (i, &g) in cycle.iter().enumerate() {
            let r = power(&rho, i);
            let img = r.concat(&s1).concat(&r.inverse());
            images[g] = Some(img.clone());
            by_index.push(img);
        }
        let oracle = AffineOracle { set: comp, cycle, images, b: gs };
        oracle.self_check(graph, &by_index)?;
        Ok(oracle)
    }

    fn self_check(&self, graph: &CoxeterGraph, by_index: &[ArtinWord]) -> Result<()> {
        let n = by_index.len();
        for i in 0..n {
            for j in i + 1..n {
                let (x, y) = (&by_index[i], &by_index[j]);
                let adjacent = j == i + 1 || (i == 0 && j == n - 1);
                let (lhs, rhs) = if adjacent {
                    (x.concat(y).concat(x), y.concat(x).concat(y))
                } else {
                    (x.concat(y), y.concat(x))
                };
                let rel = lhs.concat(&rhs.inverse());
                if self.b.raw_nf(&rel)? != RawNF::default() {
                    return Err(Error::EmbeddingSelfCheckFailed(format!(
                        "{} / {}",
                        graph.name(self.cycle[i]),
                        graph.name(self.cycle[j])
                    )));
                }
            }
        }
        Ok(())
    }

    /// The cycle generators in the order `a_1, .., a_{k+1}`.
    pub fn cycle(&self) -> &[usize] {
        &self.cycle
    }

    /// Image of a word in the type-`B` Artin group.
    pub fn embed(&self, w: &ArtinWord) -> Result<ArtinWord> {
        let mut out = ArtinWord::empty();
        for &Letter { gen, sign } in w.letters() {
            let img = self.images.get(gen).and_then(|i| i.as_ref()).ok_or_else(|| {
                Error::SupportViolation {
                    support: format!("{:?}", w.support()),
                    allowed: format!("{:?}", self.set),
                }
            })?;
            if sign > 0 {
                out.extend(img);
            } else {
                out.extend(&img.inverse());
            }
        }
        Ok(out)
    }
}

impl WordOracle for AffineOracle {
    fn subset(&self) -> GenSet {
        self.set
    }

    fn equal(&self, u: &ArtinWord, v: &ArtinWord) -> Result<bool> {
        let rel = self.embed(&u.concat(&v.inverse()))?;
        Ok(self.b.raw_nf(&rel)? == RawNF::default())
    }
}

/// Oracle for the Artin group of the `(k+1)`-cycle `a1 .. a(k+1)`, i.e. the
/// graph [`CoxeterGraph::affine_a`].
pub fn affine_a_oracle(k: usize) -> Result<AffineOracle> {
    if k < 2 {
        return Err(Error::BadN(k));
    }
    let g = CoxeterGraph::affine_a(k);
    AffineOracle::for_component(&g, g.all())
}
