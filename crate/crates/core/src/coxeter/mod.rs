//! Coxeter groups: canonical reduced words, lengths, descents, parabolic
//! decompositions and finite-type recognition.
//!
//! Elements are stored by their lex-minimal reduced word, so two elements
//! are equal exactly when their words coincide.

mod classify;
pub(crate) mod finite;
mod graph;
mod scalar;
mod walker;

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

pub use classify::{Classification, FiniteType};
pub use graph::{CoxeterGraph, Label, RootRing};
pub use walker::Engine;
pub(crate) use walker::Walker;

use crate::error::{Error, Result};
use crate::genset::GenSet;
use finite::FiniteTable;

/// Default element cap for enumerating finite parabolic subgroups.
pub const DEFAULT_ENUMERATION_CAP: usize = 100_000;

/// An element of `W`, held as its canonical reduced word.
#[derive(Clone)]
pub struct CoxeterElement {
    graph: Arc<CoxeterGraph>,
    word: Vec<usize>,
}

impl PartialEq for CoxeterElement {
    fn eq(&self, other: &Self) -> bool {
        self.word == other.word
            && (Arc::ptr_eq(&self.graph, &other.graph) || self.graph == other.graph)
    }
}
impl Eq for CoxeterElement {}

impl Hash for CoxeterElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.word.hash(state);
    }
}

impl fmt::Debug for CoxeterElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CoxeterElement({self})")
    }
}

impl fmt::Display for CoxeterElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return f.write_str("e");
        }
        f.write_str(&self.names().join(" "))
    }
}

/// Lex-minimal reduced word of the product of `raw`.
pub(crate) fn canonical(g: &CoxeterGraph, raw: &[usize]) -> Vec<usize> {
    Walker::from_word(g, Engine::Auto, raw).canonical_word()
}

/// `w = w0·w1` with `w0 ∈ W_T` and `w1` having no left descent in `T`.
pub(crate) fn decompose_left(g: &CoxeterGraph, w: &[usize], t: GenSet) -> (Vec<usize>, Vec<usize>) {
    let mut walker = Walker::from_word(g, Engine::Auto, w);
    let mut w0 = Vec::new();
    while let Some(s) = t.iter().find(|&s| walker.left_descent(s)) {
        walker.mul_left(s);
        w0.push(s);
    }
    (canonical(g, &w0), walker.canonical_word())
}

impl CoxeterGraph {
    fn check_letters(&self, raw: &[usize]) -> Result<()> {
        match raw.iter().find(|&&s| s >= self.rank()) {
            Some(s) => Err(Error::UnknownGenerator(format!("index {s}"))),
            None => Ok(()),
        }
    }

    pub fn identity(self: &Arc<Self>) -> CoxeterElement {
        CoxeterElement { graph: self.clone(), word: Vec::new() }
    }

    /// Canonicalizes a word given by generator indices.
    pub fn reduce(self: &Arc<Self>, raw: &[usize]) -> Result<CoxeterElement> {
        self.check_letters(raw)?;
        Ok(CoxeterElement { graph: self.clone(), word: canonical(self, raw) })
    }

    /// [`CoxeterGraph::reduce`] with an explicit length engine.
    pub fn reduce_with(self: &Arc<Self>, raw: &[usize], engine: Engine) -> Result<CoxeterElement> {
        self.check_letters(raw)?;
        let word = Walker::from_word(self, engine, raw).canonical_word();
        Ok(CoxeterElement { graph: self.clone(), word })
    }

    /// Canonicalizes a word given by generator names.
    pub fn reduce_names(self: &Arc<Self>, raw: &[&str]) -> Result<CoxeterElement> {
        let idx = raw.iter().map(|s| self.generator(s)).collect::<Result<Vec<_>>>()?;
        self.reduce(&idx)
    }

    /// Parses a whitespace-separated Coxeter word and canonicalizes it.
    pub fn parse_element(self: &Arc<Self>, text: &str) -> Result<CoxeterElement> {
        let names: Vec<&str> = text.split_whitespace().collect();
        self.reduce_names(&names)
    }

    /// All elements of the finite parabolic subgroup `W_X`, by BFS order.
    pub fn enumerate_parabolic(self: &Arc<Self>, set: GenSet, cap: usize) -> Result<Vec<CoxeterElement>> {
        self.check_subset(set)?;
        let table = FiniteTable::build(self, set, cap)?;
        Ok((0..table.size() as u32)
            .map(|w| CoxeterElement { graph: self.clone(), word: table.global_word(w) })
            .collect())
    }
}

impl CoxeterElement {
    pub fn graph(&self) -> &Arc<CoxeterGraph> {
        &self.graph
    }

    /// Canonical word as generator indices.
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn names(&self) -> Vec<&str> {
        self.word.iter().map(|&s| self.graph.name(s)).collect()
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    pub fn support(&self) -> GenSet {
        self.word.iter().copied().collect()
    }

    fn check_gen(&self, s: usize) -> Result<()> {
        self.graph.check_letters(&[s])
    }

    fn check_same(&self, other: &CoxeterElement) -> Result<()> {
        if Arc::ptr_eq(&self.graph, &other.graph) || self.graph == other.graph {
            Ok(())
        } else {
            Err(Error::GraphMismatch)
        }
    }

    /// `ℓ(ws) = ℓ(w) + 1`.
    pub fn length_increases_right(&self, s: usize) -> Result<bool> {
        self.length_increases_right_with(s, Engine::Auto)
    }

    pub fn length_increases_right_with(&self, s: usize, engine: Engine) -> Result<bool> {
        self.check_gen(s)?;
        let mut w = Walker::from_word(&self.graph, engine, &self.word);
        Ok(!w.right_descent(s))
    }

    pub fn multiply(&self, other: &CoxeterElement) -> Result<CoxeterElement> {
        self.check_same(other)?;
        let mut w = Walker::from_word(&self.graph, Engine::Auto, &self.word);
        for &s in &other.word {
            w.mul_right(s);
        }
        Ok(CoxeterElement { graph: self.graph.clone(), word: w.canonical_word() })
    }

    /// `w·s`.
    pub fn mul_generator(&self, s: usize) -> Result<CoxeterElement> {
        self.check_gen(s)?;
        let mut raw = self.word.clone();
        raw.push(s);
        self.graph.reduce(&raw)
    }

    pub fn inverse(&self) -> CoxeterElement {
        let rev: Vec<usize> = self.word.iter().rev().copied().collect();
        CoxeterElement { graph: self.graph.clone(), word: canonical(&self.graph, &rev) }
    }

    /// `{s : ℓ(sw) < ℓ(w)}`.
    pub fn left_descents(&self) -> GenSet {
        Walker::from_word(&self.graph, Engine::Auto, &self.word).left_descents()
    }

    /// `{s : ℓ(ws) < ℓ(w)}`.
    pub fn right_descents(&self) -> GenSet {
        Walker::from_word(&self.graph, Engine::Auto, &self.word).right_descents()
    }

    /// Splits `w = w0·w1` with `w0 ∈ W_T` and no left descent of `w1` in `T`.
    pub fn parabolic_decompose_left(&self, t: GenSet) -> (CoxeterElement, CoxeterElement) {
        let (w0, w1) = decompose_left(&self.graph, &self.word, t);
        (
            CoxeterElement { graph: self.graph.clone(), word: w0 },
            CoxeterElement { graph: self.graph.clone(), word: w1 },
        )
    }

    pub fn is_in_parabolic(&self, t: GenSet) -> bool {
        self.support().is_subset(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> Arc<CoxeterGraph> {
        Arc::new(CoxeterGraph::dihedral(Label::Finite(3)))
    }

    fn elt(g: &Arc<CoxeterGraph>, w: &str) -> CoxeterElement {
        g.parse_element(w).unwrap()
    }

    #[test]
    fn reduce_examples() {
        let g = a2();
        assert!(elt(&g, "s s").is_identity());
        assert_eq!(elt(&g, "s t s t").names(), ["t", "s"]);
        let inf = Arc::new(CoxeterGraph::dihedral(Label::Infinity));
        assert_eq!(elt(&inf, "s t s").names(), ["s", "t", "s"]);
        assert!(matches!(g.parse_element("s u"), Err(Error::UnknownGenerator(_))));
    }

    #[test]
    fn length_test_examples() {
        let g = a2();
        assert!(!elt(&g, "s").length_increases_right(0).unwrap());
        assert!(elt(&g, "s").length_increases_right(1).unwrap());
        let inf = Arc::new(CoxeterGraph::dihedral(Label::Infinity));
        for engine in [Engine::Geometric, Engine::Combinatorial] {
            assert!(!elt(&inf, "s t s t").length_increases_right_with(1, engine).unwrap());
        }
        assert!(elt(&g, "s").length_increases_right(2).is_err());
    }

    #[test]
    fn group_operations() {
        let g = a2();
        assert!(elt(&g, "s").multiply(&elt(&g, "s")).unwrap().is_identity());
        assert_eq!(elt(&g, "s t").left_descents(), GenSet::singleton(0));
        assert_eq!(elt(&g, "s t").right_descents(), GenSet::singleton(1));
        assert!(g.identity().inverse().is_identity());
        assert_eq!(elt(&g, "s t").inverse().names(), ["t", "s"]);
        let other = Arc::new(CoxeterGraph::dihedral(Label::Finite(4)));
        assert_eq!(elt(&g, "s").multiply(&elt(&other, "s")), Err(Error::GraphMismatch));
    }

    #[test]
    fn parabolic_decomposition_examples() {
        let g = a2();
        let s = GenSet::singleton(0);
        let (w0, w1) = elt(&g, "s t").parabolic_decompose_left(s);
        assert_eq!((w0.names(), w1.names()), (vec!["s"], vec!["t"]));
        let (w0, w1) = elt(&g, "t s").parabolic_decompose_left(s);
        assert!(w0.is_identity());
        assert_eq!(w1.names(), ["t", "s"]);
        let (w0, w1) = elt(&g, "s").parabolic_decompose_left(s);
        assert_eq!((w0.names(), w1.is_identity()), (vec!["s"], true));
    }

    #[test]
    fn parabolic_membership() {
        let g = a2();
        assert!(elt(&g, "s t").is_in_parabolic(g.all()));
        assert!(!elt(&g, "s t").is_in_parabolic(GenSet::singleton(0)));
        assert!(g.identity().is_in_parabolic(GenSet::EMPTY));
    }

    #[test]
    fn enumeration_examples() {
        let g = a2();
        let all = g.enumerate_parabolic(g.all(), 100).unwrap();
        assert_eq!(all.len(), 6);
        assert_eq!(all.last().unwrap().names(), ["s", "t", "s"]);
        assert_eq!(all.last().unwrap().right_descents(), g.all());
        let none = g.enumerate_parabolic(GenSet::EMPTY, 100).unwrap();
        assert_eq!(none.len(), 1);
        let b2 = Arc::new(CoxeterGraph::dihedral(Label::Finite(4)));
        let all = b2.enumerate_parabolic(b2.all(), 100).unwrap();
        assert_eq!(all.len(), 8);
        assert_eq!(all.iter().map(|w| w.length()).max(), Some(4));
        let tri = Arc::new(CoxeterGraph::affine_a(2));
        assert!(matches!(tri.enumerate_parabolic(tri.all(), 100), Err(Error::NotFinite(_))));
    }
}
