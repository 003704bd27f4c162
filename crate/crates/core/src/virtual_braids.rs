//! Virtual braid groups `VB_n = K_n ⋊ 𝔖_n`, where `K_n` is the Artin group
//! of the graph `Γ_{VB,n}` on generators `x_{i,j}`.
//!
//! Words are rewritten as `ι(κ)·ι(p)` with `κ` a word in the `δ_{i,j}` and
//! `p` a permutation; the scan uses `ι(p)σ_i = δ_{p(i),p(i+1)}ι(p)`.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::artin_words::{ArtinWord, Letter};
use crate::coxeter::{CoxeterGraph, Label};
use crate::cubepath::{is_trivial, OracleRegistry};
use crate::error::{Error, Result};
use crate::genset::GenSet;
use crate::refcheck::Presentation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VbLetter {
    /// `σ_i^{±1}`.
    Sigma { index: usize, sign: i8 },
    /// `τ_i`, an involution.
    Tau { index: usize },
}

impl VbLetter {
    fn inverse(self) -> Self {
        match self {
            VbLetter::Sigma { index, sign } => VbLetter::Sigma { index, sign: -sign },
            tau => tau,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VbWord {
    n: usize,
    letters: Vec<VbLetter>,
}

fn check_n(n: usize) -> Result<()> {
    if n < 2 {
        Err(Error::BadN(n))
    } else {
        Ok(())
    }
}

impl VbWord {
    pub fn new(n: usize, letters: Vec<VbLetter>) -> Result<Self> {
        check_n(n)?;
        for l in &letters {
            let (VbLetter::Sigma { index, .. } | VbLetter::Tau { index }) = *l;
            if index == 0 || index >= n {
                return Err(Error::IndexOutOfRange { index, n });
            }
        }
        Ok(VbWord { n, letters })
    }

    pub fn empty(n: usize) -> Result<Self> {
        VbWord::new(n, Vec::new())
    }

    /// Parses tokens `s1`, `s1^-1`, `s2^3`, `t1`, `t1^-1` separated by
    /// whitespace or `*`. `τ_i^k` keeps `k mod 2` letters.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        check_n(n)?;
        let mut letters = Vec::new();
        for tok in text.split(|c: char| c.is_whitespace() || c == '*').filter(|t| !t.is_empty()) {
            let (head, power) = match tok.split_once('^') {
                Some((h, p)) => {
                    let k: i64 = p.parse().map_err(|_| Error::Parse(format!("bad exponent in `{tok}`")))?;
                    (h, k)
                }
                None => (tok, 1),
            };
            let bad = || Error::Parse(format!("bad virtual braid letter `{tok}`"));
            let kind = head.chars().next().ok_or_else(bad)?;
            let index: usize = head[1..].parse().map_err(|_| bad())?;
            match kind {
                's' | 'S' => {
                    let sign = if power < 0 { -1 } else { 1 };
                    for _ in 0..power.unsigned_abs() {
                        letters.push(VbLetter::Sigma { index, sign });
                    }
                }
                't' | 'T' => {
                    if power.rem_euclid(2) == 1 {
                        letters.push(VbLetter::Tau { index });
                    }
                }
                _ => return Err(bad()),
            }
        }
        VbWord::new(n, letters)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[VbLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &VbWord) -> Result<VbWord> {
        if self.n != other.n {
            return Err(Error::StrandMismatch(self.n, other.n));
        }
        let mut letters = self.letters.clone();
        letters.extend(&other.letters);
        Ok(VbWord { n: self.n, letters })
    }

    pub fn inverse(&self) -> VbWord {
        VbWord { n: self.n, letters: self.letters.iter().rev().map(|l| l.inverse()).collect() }
    }

    /// The word in the generators of [`vb_presentation`].
    pub fn to_presentation_word(&self) -> ArtinWord {
        let tau0 = self.n - 1;
        ArtinWord::new(
            self.letters
                .iter()
                .map(|l| match *l {
                    VbLetter::Sigma { index, sign } => Letter { gen: index - 1, sign },
                    VbLetter::Tau { index } => Letter::pos(tau0 + index - 1),
                })
                .collect(),
        )
    }
}

impl fmt::Display for VbWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            match *l {
                VbLetter::Sigma { index, sign: 1 } => write!(f, "s{index}")?,
                VbLetter::Sigma { index, .. } => write!(f, "s{index}^-1")?,
                VbLetter::Tau { index } => write!(f, "t{index}")?,
            }
        }
        Ok(())
    }
}

/// A permutation of `{1, .., n}`, stored as its images.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::Parse(format!("{images:?} is not a permutation")));
            }
        }
        Ok(Permutation(images))
    }

    /// `(i, i+1)`.
    pub fn transposition(n: usize, i: usize) -> Self {
        let mut p = Permutation::identity(n);
        p.0.swap(i - 1, i);
        p
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(k, &v)| v == k + 1)
    }

    /// `self ∘ other`, applying `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&v| self.apply(v)).collect())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// A letter `δ_{i,j}^{±1}` of `K_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct KnLetter {
    pub i: usize,
    pub j: usize,
    pub sign: i8,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct KnWord(pub Vec<KnLetter>);

impl KnWord {
    pub fn letters(&self) -> &[KnLetter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> KnWord {
        KnWord(self.0.iter().rev().map(|l| KnLetter { sign: -l.sign, ..*l }).collect())
    }

    pub fn concat(&self, other: &KnWord) -> KnWord {
        KnWord(self.0.iter().chain(&other.0).copied().collect())
    }

    /// `p ⋅ κ`, relabelling `δ_{i,j}` as `δ_{p(i),p(j)}`.
    pub fn act(&self, p: &Permutation) -> KnWord {
        KnWord(self.0.iter().map(|l| KnLetter { i: p.apply(l.i), j: p.apply(l.j), sign: l.sign }).collect())
    }

    /// `[["1,3", 1], ..]`.
    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.0
                .iter()
                .map(|l| serde_json::json!([format!("{},{}", l.i, l.j), l.sign]))
                .collect(),
        )
    }
}

impl fmt::Display for KnWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "d{},{}", l.i, l.j)?;
            if l.sign < 0 {
                f.write_str("^-1")?;
            }
        }
        Ok(())
    }
}

/// Name of the vertex `x_{i,j}`.
pub fn vertex_name(i: usize, j: usize) -> String {
    format!("x{i}_{j}")
}

fn vertex_index(n: usize, i: usize, j: usize) -> usize {
    (i - 1) * (n - 1) + if j < i { j - 1 } else { j - 2 }
}

fn vertex_pair(n: usize, g: usize) -> (usize, usize) {
    let i = g / (n - 1) + 1;
    let r = g % (n - 1) + 1;
    (i, if r < i { r } else { r + 1 })
}

fn vb_label((i, j): (usize, usize), (k, l): (usize, usize)) -> Label {
    if j == k || l == i {
        if (i, j) == (l, k) {
            Label::Infinity
        } else {
            Label::Finite(3)
        }
    } else if i == k || j == l {
        Label::Infinity
    } else {
        Label::Finite(2)
    }
}

/// `Γ_{VB,n}` with vertices `x{i}_{j}` ordered by `(i, j)`.
pub fn gamma_vb(n: usize) -> Result<CoxeterGraph> {
    check_n(n)?;
    let pairs: Vec<(usize, usize)> = (0..n * (n - 1)).map(|g| vertex_pair(n, g)).collect();
    let names: Vec<String> = pairs.iter().map(|&(i, j)| vertex_name(i, j)).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let mut edges = Vec::new();
    for a in 0..pairs.len() {
        for b in a + 1..pairs.len() {
            let m = vb_label(pairs[a], pairs[b]);
            if m != Label::Finite(2) {
                edges.push((refs[a], refs[b], m));
            }
        }
    }
    CoxeterGraph::from_edges(&refs, &edges)
}

/// Rewrites `w` as `ι(κ)·ι(p)`.
pub fn rewrite_to_semidirect(w: &VbWord) -> (KnWord, Permutation) {
    let mut kappa = Vec::new();
    let mut p = Permutation::identity(w.n);
    for l in &w.letters {
        match *l {
            VbLetter::Sigma { index, sign } => {
                kappa.push(KnLetter { i: p.apply(index), j: p.apply(index + 1), sign })
            }
            VbLetter::Tau { index } => p.0.swap(index - 1, index),
        }
    }
    (KnWord(kappa), p)
}

/// Letter-by-letter translation `δ_{i,j}^{±} ↦ σ_{x_{i,j}}^{±}`.
pub fn kn_to_artin(n: usize, kappa: &KnWord) -> Result<ArtinWord> {
    let mut out = ArtinWord::empty();
    for l in &kappa.0 {
        for v in [l.i, l.j] {
            if v == 0 || v > n {
                return Err(Error::IndexOutOfRange { index: v, n });
            }
        }
        if l.i == l.j {
            return Err(Error::IndexOutOfRange { index: l.i, n });
        }
        out.push(Letter { gen: vertex_index(n, l.i, l.j), sign: l.sign });
    }
    Ok(out)
}

/// Type of a connected free-of-infinity piece of `Γ_{VB,n}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VbComponent {
    /// A directed path of `k` arcs.
    A(usize),
    /// A directed cycle of `k + 1` arcs.
    AffineA(usize),
}

impl fmt::Display for VbComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VbComponent::A(k) => write!(f, "A_{k}"),
            VbComponent::AffineA(k) => write!(f, "A~_{k}"),
        }
    }
}

/// Components of `X` read off the arc digraph `{(i, j) : x_{i,j} ∈ X}`,
/// ordered by smallest generator.
pub fn classify_components(n: usize, x: GenSet) -> Result<Vec<VbComponent>> {
    let g = gamma_vb(n)?;
    g.check_subset(x)?;
    if !g.is_free_of_infinity(x) {
        return Err(Error::NotFreeOfInfinity(g.format_subset(x)));
    }
    let mut out = Vec::new();
    for comp in g.components(x) {
        let mut succ = vec![0usize; n + 1];
        let mut pred = vec![0usize; n + 1];
        for a in comp.iter() {
            let (i, j) = vertex_pair(n, a);
            assert!(succ[i] == 0 && pred[j] == 0, "free of infinity bounds the degrees");
            assert!(succ[j] != i, "free of infinity excludes 2-cycles");
            succ[i] = j;
            pred[j] = i;
        }
        let k = comp.len();
        let has_source = (1..=n).any(|v| succ[v] != 0 && pred[v] == 0);
        out.push(if has_source {
            VbComponent::A(k)
        } else {
            assert!(k >= 3);
            VbComponent::AffineA(k - 1)
        });
    }
    Ok(out)
}

/// Largest spherical subset of `Γ_{VB,n}`, found by exhaustive search over
/// arc sets that form disjoint directed paths.
pub fn spherical_dimension(n: usize) -> Result<usize> {
    let g = gamma_vb(n)?;
    let arcs: Vec<(usize, usize)> = (0..g.rank()).map(|a| vertex_pair(n, a)).collect();
    let mut best = GenSet::EMPTY;
    let mut state = PathForest { succ: vec![0; n + 1], pred: vec![0; n + 1] };
    search_paths(&arcs, 0, GenSet::EMPTY, &mut state, &mut best);
    match g.classify_finite(best).is_finite() {
        true => Ok(best.len()),
        false => Err(Error::InvariantBreach(format!("{} is not spherical", g.format_subset(best)))),
    }
}

struct PathForest {
    succ: Vec<usize>,
    pred: Vec<usize>,
}

impl PathForest {
    fn closes_cycle(&self, i: usize, j: usize) -> bool {
        let mut v = j;
        while self.succ[v] != 0 {
            v = self.succ[v];
            if v == i {
                return true;
            }
        }
        false
    }
}

fn search_paths(arcs: &[(usize, usize)], next: usize, chosen: GenSet, st: &mut PathForest, best: &mut GenSet) {
    if chosen.len() > best.len() {
        *best = chosen;
    }
    if chosen.len() + (arcs.len() - next) <= best.len() {
        return;
    }
    for a in next..arcs.len() {
        let (i, j) = arcs[a];
        if st.succ[i] != 0 || st.pred[j] != 0 || st.closes_cycle(i, j) {
            continue;
        }
        st.succ[i] = j;
        st.pred[j] = i;
        search_paths(arcs, a + 1, chosen.with(a), st, best);
        st.succ[i] = 0;
        st.pred[j] = 0;
    }
}

/// Every defining relator of `VB_n`, as words `u v^{-1}`.
pub fn vb_relators(n: usize) -> Result<Vec<VbWord>> {
    check_n(n)?;
    let s = |i: usize| VbLetter::Sigma { index: i, sign: 1 };
    let t = |i: usize| VbLetter::Tau { index: i };
    let rel = |lhs: Vec<VbLetter>, rhs: Vec<VbLetter>| -> Result<VbWord> {
        VbWord::new(n, lhs)?.concat(&VbWord::new(n, rhs)?.inverse())
    };
    let mut out = Vec::new();
    for i in 1..n {
        out.push(rel(vec![t(i), t(i)], vec![])?);
    }
    for i in 1..n {
        for j in 1..n {
            if i.abs_diff(j) >= 2 {
                if i < j {
                    out.push(rel(vec![s(i), s(j)], vec![s(j), s(i)])?);
                    out.push(rel(vec![t(i), t(j)], vec![t(j), t(i)])?);
                }
                out.push(rel(vec![s(i), t(j)], vec![t(j), s(i)])?);
            } else if i.abs_diff(j) == 1 {
                if i < j {
                    out.push(rel(vec![s(i), s(j), s(i)], vec![s(j), s(i), s(j)])?);
                    out.push(rel(vec![t(i), t(j), t(i)], vec![t(j), t(i), t(j)])?);
                }
                out.push(rel(vec![s(i), t(j), t(i)], vec![t(j), t(i), s(j)])?);
            }
        }
    }
    Ok(out)
}

/// The `VB_n` presentation for brute-force checks: generators `σ_1..σ_{n-1}`
/// then `τ_1..τ_{n-1}`.
pub fn vb_presentation(n: usize) -> Result<Presentation> {
    let rels = vb_relators(n)?.iter().map(VbWord::to_presentation_word).collect();
    Ok(Presentation::new(2 * (n - 1), rels))
}

/// Word problem solver for `VB_n`.
pub struct VbSolver {
    n: usize,
    registry: Arc<OracleRegistry>,
}

impl VbSolver {
    /// Builds `Γ_{VB,n}` and its registry, then checks that every defining
    /// relator rewrites to a trivial `κ` with identity permutation.
    pub fn new(n: usize) -> Result<Self> {
        let registry = Arc::new(OracleRegistry::new(Arc::new(gamma_vb(n)?)));
        let solver = VbSolver { n, registry };
        solver.validate_convention()?;
        Ok(solver)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn graph(&self) -> &Arc<CoxeterGraph> {
        self.registry.graph()
    }

    pub fn registry(&self) -> &Arc<OracleRegistry> {
        &self.registry
    }

    pub fn validate_convention(&self) -> Result<()> {
        for r in vb_relators(self.n)? {
            let (kappa, p) = rewrite_to_semidirect(&r);
            if !p.is_identity() || !self.kn_trivial(&kappa)? {
                return Err(Error::InvariantBreach(format!("relator {r} does not rewrite to 1")));
            }
        }
        Ok(())
    }

    pub fn kn_trivial(&self, kappa: &KnWord) -> Result<bool> {
        is_trivial(&self.registry, &kn_to_artin(self.n, kappa)?)
    }

    pub fn equal(&self, u: &VbWord, v: &VbWord) -> Result<bool> {
        for w in [u, v] {
            if w.n != self.n {
                return Err(Error::StrandMismatch(self.n, w.n));
            }
        }
        let (ku, pu) = rewrite_to_semidirect(u);
        let (kv, pv) = rewrite_to_semidirect(v);
        Ok(pu == pv && self.kn_trivial(&ku.concat(&kv.inverse()))?)
    }
}

/// One-shot equality in `VB_n`.
pub fn vb_equal(u: &VbWord, v: &VbWord) -> Result<bool> {
    if u.n != v.n {
        return Err(Error::StrandMismatch(u.n, v.n));
    }
    VbSolver::new(u.n)?.equal(u, v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vb(n: usize, t: &str) -> VbWord {
        VbWord::parse(n, t).unwrap()
    }

    #[test]
    fn gamma_counts() {
        let g = gamma_vb(2).unwrap();
        assert_eq!(g.names(), ["x1_2", "x2_1"]);
        assert_eq!(g.label(0, 1), Label::Infinity);
        let g = gamma_vb(3).unwrap();
        let mut counts = [0; 3];
        for a in 0..6 {
            for b in a + 1..6 {
                match g.label(a, b) {
                    Label::Finite(2) => counts[0] += 1,
                    Label::Finite(3) => counts[1] += 1,
                    Label::Infinity => counts[2] += 1,
                    other => panic!("unexpected {other:?}"),
                }
            }
        }
        assert_eq!(counts, [0, 6, 9]);
        let g = gamma_vb(4).unwrap();
        let (a, b) = (g.generator("x1_2").unwrap(), g.generator("x3_4").unwrap());
        assert_eq!(g.label(a, b), Label::Finite(2));
        assert!(matches!(gamma_vb(1), Err(Error::BadN(1))));
        for k in 0..12 {
            let (i, j) = vertex_pair(4, k);
            assert_eq!(vertex_index(4, i, j), k);
        }
    }

    #[test]
    fn rewrite_examples() {
        let (k, p) = rewrite_to_semidirect(&vb(3, "t1 s2 t1"));
        assert_eq!(k.0, vec![KnLetter { i: 1, j: 3, sign: 1 }]);
        assert!(p.is_identity());
        let (k, p) = rewrite_to_semidirect(&vb(3, "s1"));
        assert_eq!(k.0, vec![KnLetter { i: 1, j: 2, sign: 1 }]);
        assert!(p.is_identity());
        let (k, p) = rewrite_to_semidirect(&vb(3, "t1"));
        assert!(k.is_empty());
        assert_eq!(p, Permutation::transposition(3, 1));
        // δ_{2,1} = τ_1 σ_1 τ_1.
        let (k, _) = rewrite_to_semidirect(&vb(3, "t1 s1 t1"));
        assert_eq!(k.0, vec![KnLetter { i: 2, j: 1, sign: 1 }]);
    }

    #[test]
    fn parse_rules() {
        assert_eq!(vb(3, "t1^-1"), vb(3, "t1"));
        assert_eq!(vb(3, "s2^-2").len(), 2);
        assert!(VbWord::parse(3, "s3").is_err());
        assert!(VbWord::parse(3, "u1").is_err());
        assert_eq!(vb(3, "s1 t2 s2^-1").to_string(), "s1 t2 s2^-1");
    }

    #[test]
    fn kn_translation() {
        let g = gamma_vb(3).unwrap();
        let w = kn_to_artin(3, &KnWord(vec![KnLetter { i: 1, j: 3, sign: 1 }])).unwrap();
        assert_eq!(w.display(&g).to_string(), "x1_3");
        assert!(kn_to_artin(3, &KnWord::default()).unwrap().is_empty());
        assert!(kn_to_artin(3, &KnWord(vec![KnLetter { i: 1, j: 4, sign: 1 }])).is_err());
    }

    #[test]
    fn classification_examples() {
        let g = gamma_vb(3).unwrap();
        let x = g.subset_of(&["x1_2", "x2_3"]).unwrap();
        assert_eq!(classify_components(3, x).unwrap(), vec![VbComponent::A(2)]);
        let x = g.subset_of(&["x1_2", "x2_3", "x3_1"]).unwrap();
        assert_eq!(classify_components(3, x).unwrap(), vec![VbComponent::AffineA(2)]);
        assert!(classify_components(3, GenSet::EMPTY).unwrap().is_empty());
        let x = g.subset_of(&["x1_2", "x2_1"]).unwrap();
        assert!(classify_components(3, x).is_err());
    }

    #[test]
    fn equality_examples() {
        let solver = VbSolver::new(3).unwrap();
        assert!(solver.equal(&vb(3, "s1 t2 t1"), &vb(3, "t2 t1 s2")).unwrap());
        assert!(solver.equal(&vb(3, "t1 t1"), &vb(3, "")).unwrap());
        assert!(!solver.equal(&vb(3, "s1"), &vb(3, "t1")).unwrap());
        assert!(!solver.equal(&vb(3, "s1"), &vb(3, "s2")).unwrap());
        assert!(matches!(vb_equal(&vb(3, "s1"), &vb(4, "s1")), Err(Error::StrandMismatch(3, 4))));
    }

    #[test]
    fn dimension_small() {
        for n in 2..=4 {
            assert_eq!(spherical_dimension(n).unwrap(), n - 1);
        }
    }
}
