//! Word oracles for free-of-infinity parabolic subgroups: left-greedy
//! normal forms in spherical type, type `Ã` through an embedding into type
//! `B`, and direct products of commuting components.

mod affine;
mod compose;

use std::sync::Arc;

pub use affine::{affine_a_oracle, AffineOracle};
pub use compose::{component_oracle, oracle_for, product_oracle, ProductOracle};

use crate::artin_words::{ArtinWord, WordOracle};
use crate::coxeter::finite::FiniteTable;
use crate::coxeter::{CoxeterElement, CoxeterGraph, DEFAULT_ENUMERATION_CAP};
use crate::error::{Error, Result};
use crate::genset::GenSet;

/// Simple elements of a spherical `A_X` with the data needed for normal
/// forms. Simples are identified with the elements of the finite `W_X`.
#[derive(Debug)]
pub struct GarsideStructure {
    graph: Arc<CoxeterGraph>,
    set: GenSet,
    table: FiniteTable,
    /// Global generator index to local index.
    local: Vec<Option<usize>>,
    left_desc: Vec<GenSet>,
    right_desc: Vec<GenSet>,
    inverse: Vec<u32>,
    /// `a ↦ Δ a Δ^{-1}`.
    phi: Vec<u32>,
    /// `Δ·s` for each local generator `s`.
    delta_s: Vec<u32>,
}

/// `Δ^inf · canon_1 ⋯ canon_k`, left-weighted, no factor equal to `1` or `Δ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GarsideNF {
    pub inf: i64,
    pub canon: Vec<CoxeterElement>,
}

/// Normal form over simple-element ids; cheap to compare.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub(crate) struct RawNF {
    inf: i64,
    canon: Vec<u32>,
}

/// Builds the simple elements of `A_X` for a spherical `X`.
pub fn build_garside(graph: &Arc<CoxeterGraph>, set: GenSet) -> Result<GarsideStructure> {
    build_garside_capped(graph, set, DEFAULT_ENUMERATION_CAP)
}

pub fn build_garside_capped(
    graph: &Arc<CoxeterGraph>,
    set: GenSet,
    cap: usize,
) -> Result<GarsideStructure> {
    graph.check_subset(set)?;
    if !graph.classify_finite(set).is_finite() {
        return Err(Error::NotSpherical(graph.format_subset(set)));
    }
    let table = FiniteTable::build(graph, set, cap)?;
    let k = table.rank();
    let n = table.size();
    let mut local = vec![None; graph.rank()];
    for (i, &g) in table.gens.iter().enumerate() {
        local[g] = Some(i);
    }
    let mut left_desc = vec![GenSet::EMPTY; n];
    let mut right_desc = vec![GenSet::EMPTY; n];
    for w in 0..n as u32 {
        for s in 0..k {
            if table.len[table.mul_right(w, s) as usize] < table.len[w as usize] {
                right_desc[w as usize].insert(s);
            }
            if table.len[table.mul_left(s, w) as usize] < table.len[w as usize] {
                left_desc[w as usize].insert(s);
            }
        }
    }
    let inverse: Vec<u32> = (0..n)
        .map(|w| table.words[w].iter().fold(0, |acc, &s| table.mul_left(s, acc)))
        .collect();
    let delta = table.longest;
    let phi_gen: Vec<usize> = (0..k)
        .map(|s| {
            let conj = table.mul(table.mul_right(delta, s), delta);
            let word = &table.words[conj as usize];
            debug_assert_eq!(word.len(), 1);
            word[0]
        })
        .collect();
    let phi: Vec<u32> = (0..n)
        .map(|w| table.words[w].iter().fold(0, |acc, &s| table.mul_right(acc, phi_gen[s])))
        .collect();
    let delta_s = (0..k).map(|s| table.mul_right(delta, s)).collect();
    Ok(GarsideStructure {
        graph: graph.clone(),
        set,
        table,
        local,
        left_desc,
        right_desc,
        inverse,
        phi,
        delta_s,
    })
}

impl crate::coxeter::finite::FiniteTable {
    /// `a·b` computed by left-multiplying `b` by the letters of `a`.
    pub(crate) fn mul_left_word(&self, a: u32, b: u32) -> u32 {
        self.words[a as usize].iter().rev().fold(b, |acc, &s| self.mul_left(s, acc))
    }
}

impl GarsideStructure {
    pub fn graph(&self) -> &Arc<CoxeterGraph> {
        &self.graph
    }

    pub fn subset(&self) -> GenSet {
        self.set
    }

    pub fn simple_count(&self) -> usize {
        self.table.size()
    }

    fn element(&self, id: u32) -> CoxeterElement {
        self.graph.reduce(&self.table.global_word(id)).expect("letters of the graph")
    }

    fn id_of(&self, w: &CoxeterElement) -> Result<u32> {
        let mut id = 0;
        for &g in w.word() {
            let s = self.local[g].ok_or_else(|| self.support_error(w.support()))?;
            id = self.table.mul_right(id, s);
        }
        Ok(id)
    }

    fn support_error(&self, support: GenSet) -> Error {
        Error::SupportViolation {
            support: self.graph.format_subset(support),
            allowed: self.graph.format_subset(self.set),
        }
    }

    /// The Garside element `Δ`, lifted from the longest element of `W_X`.
    pub fn delta(&self) -> CoxeterElement {
        self.element(self.table.longest)
    }

    /// All simples, ordered by length.
    pub fn simples(&self) -> Vec<CoxeterElement> {
        (0..self.table.size() as u32).map(|w| self.element(w)).collect()
    }

    /// Conjugation by `Δ` on a generator of `X`.
    pub fn phi_generator(&self, s: usize) -> Result<usize> {
        let ls = self.local[s].ok_or_else(|| self.support_error(GenSet::singleton(s)))?;
        let id = self.phi[self.table.mul_right(0, ls) as usize];
        Ok(self.table.gens[self.table.words[id as usize][0]])
    }

    /// `∂a = a^{-1}Δ`.
    pub fn complement(&self, a: &CoxeterElement) -> Result<CoxeterElement> {
        let a = self.id_of(a)?;
        Ok(self.element(self.table.mul_left_word(self.inverse[a as usize], self.table.longest)))
    }

    fn left_divides(&self, x: u32, a: u32) -> bool {
        let q = self.table.mul_left_word(self.inverse[x as usize], a);
        self.table.len[q as usize] + self.table.len[x as usize] == self.table.len[a as usize]
    }

    /// Greatest common left divisor in the prefix order.
    pub fn meet(&self, a: &CoxeterElement, b: &CoxeterElement) -> Result<CoxeterElement> {
        let (a, b) = (self.id_of(a)?, self.id_of(b)?);
        let mut m = 0;
        'grow: loop {
            for s in 0..self.table.rank() {
                let ms = self.table.mul_right(m, s);
                if self.table.len[ms as usize] > self.table.len[m as usize]
                    && self.left_divides(ms, a)
                    && self.left_divides(ms, b)
                {
                    m = ms;
                    continue 'grow;
                }
            }
            return Ok(self.element(m));
        }
    }

    /// Moves letters from `b` into `a` until the pair is left-weighted.
    /// Returns whether anything moved.
    fn weight_pair(&self, a: &mut u32, b: &mut u32) -> bool {
        let mut moved = false;
        loop {
            let free = self.left_desc[*b as usize].difference(self.right_desc[*a as usize]);
            let Some(s) = free.first() else { return moved };
            *a = self.table.mul_right(*a, s);
            *b = self.table.mul_left(s, *b);
            moved = true;
        }
    }

    fn push_simple(&self, nf: &mut RawNF, x: u32) {
        nf.canon.push(x);
        for j in (0..nf.canon.len() - 1).rev() {
            let (mut a, mut b) = (nf.canon[j], nf.canon[j + 1]);
            if !self.weight_pair(&mut a, &mut b) {
                break;
            }
            nf.canon[j] = a;
            nf.canon[j + 1] = b;
        }
        let delta = self.table.longest;
        let lead = nf.canon.iter().take_while(|&&c| c == delta).count();
        nf.inf += lead as i64;
        nf.canon.drain(..lead);
        while nf.canon.last() == Some(&0) {
            nf.canon.pop();
        }
    }

    pub(crate) fn raw_nf(&self, w: &ArtinWord) -> Result<RawNF> {
        if !w.support().is_subset(self.set) {
            return Err(self.support_error(w.support()));
        }
        let mut nf = RawNF::default();
        for l in w.letters() {
            let s = self.local[l.gen].expect("support checked");
            if l.sign > 0 {
                self.push_simple(&mut nf, self.table.mul_right(0, s));
            } else {
                // c Δ^{-1} = Δ^{-1} φ(c), and σ_s^{-1} = Δ^{-1}·(Δs).
                nf.inf -= 1;
                for c in nf.canon.iter_mut() {
                    *c = self.phi[*c as usize];
                }
                self.push_simple(&mut nf, self.delta_s[s]);
            }
        }
        Ok(nf)
    }

    /// Left-greedy normal form of a word supported in `X`.
    pub fn to_normal_form(&self, w: &ArtinWord) -> Result<GarsideNF> {
        let raw = self.raw_nf(w)?;
        Ok(GarsideNF { inf: raw.inf, canon: raw.canon.iter().map(|&c| self.element(c)).collect() })
    }

    /// Whether consecutive simples are left-weighted and no factor is `1`
    /// or `Δ`.
    pub fn is_left_weighted(&self, nf: &GarsideNF) -> Result<bool> {
        let ids = nf.canon.iter().map(|c| self.id_of(c)).collect::<Result<Vec<_>>>()?;
        if ids.iter().any(|&c| c == 0 || c == self.table.longest) {
            return Ok(false);
        }
        Ok(ids.windows(2).all(|p| {
            self.left_desc[p[1] as usize].is_subset(self.right_desc[p[0] as usize])
        }))
    }

    /// Word spelling `Δ^inf` followed by the positive lifts of the factors.
    pub fn nf_word(&self, nf: &GarsideNF) -> ArtinWord {
        let delta = ArtinWord::positive(&self.table.global_word(self.table.longest));
        let mut out = ArtinWord::empty();
        let power = if nf.inf >= 0 { delta } else { delta.inverse() };
        for _ in 0..nf.inf.unsigned_abs() {
            out.extend(&power);
        }
        for c in &nf.canon {
            out.extend(&ArtinWord::positive(c.word()));
        }
        out
    }
}

/// Equality by comparison of normal forms.
#[derive(Clone, Debug)]
pub struct GarsideOracle {
    gs: Arc<GarsideStructure>,
}

impl GarsideOracle {
    pub fn new(gs: Arc<GarsideStructure>) -> Self {
        GarsideOracle { gs }
    }

    pub fn structure(&self) -> &GarsideStructure {
        &self.gs
    }
}

impl WordOracle for GarsideOracle {
    fn subset(&self) -> GenSet {
        self.gs.set
    }

    fn equal(&self, u: &ArtinWord, v: &ArtinWord) -> Result<bool> {
        Ok(self.gs.raw_nf(&u.concat(&v.inverse()))? == RawNF::default())
    }
}

/// Oracle for a spherical `X`.
pub fn garside_oracle(graph: &Arc<CoxeterGraph>, set: GenSet) -> Result<GarsideOracle> {
    Ok(GarsideOracle::new(Arc::new(build_garside(graph, set)?)))
}
