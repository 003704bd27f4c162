//! Words in Artin–Tits groups and the retraction machinery on the colored
//! subgroup `CA = ker(θ)`.
//!
//! Words do not carry their graph; every operation takes it explicitly.

use std::fmt;
use std::sync::Arc;

use crate::coxeter::{self, CoxeterElement, CoxeterGraph, Engine, Walker};
use crate::error::{Error, Result};
use crate::genset::GenSet;

/// `σ_gen^{sign}`, with `sign` equal to `1` or `-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: usize,
    pub sign: i8,
}

impl Letter {
    pub fn pos(gen: usize) -> Self {
        Letter { gen, sign: 1 }
    }

    pub fn neg(gen: usize) -> Self {
        Letter { gen, sign: -1 }
    }

    pub fn inverse(self) -> Self {
        Letter { gen: self.gen, sign: -self.sign }
    }
}

/// A word over `Σ ⊔ Σ^{-1}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ArtinWord(Vec<Letter>);

impl ArtinWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        ArtinWord(letters)
    }

    pub fn empty() -> Self {
        ArtinWord(Vec::new())
    }

    /// The positive word `σ_{s_1} ⋯ σ_{s_k}`.
    pub fn positive(gens: &[usize]) -> Self {
        ArtinWord(gens.iter().map(|&g| Letter::pos(g)).collect())
    }

    /// Builds a word from `(generator, exponent)` pairs; exponents expand
    /// into repeated letters.
    pub fn from_powers(powers: &[(usize, i32)]) -> Self {
        let mut out = Vec::new();
        for &(g, e) in powers {
            let l = if e > 0 { Letter::pos(g) } else { Letter::neg(g) };
            out.extend(std::iter::repeat_n(l, e.unsigned_abs() as usize));
        }
        ArtinWord(out)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, l: Letter) {
        self.0.push(l);
    }

    pub fn extend(&mut self, other: &ArtinWord) {
        self.0.extend_from_slice(&other.0);
    }

    pub fn concat(&self, other: &ArtinWord) -> ArtinWord {
        let mut out = self.0.clone();
        out.extend_from_slice(&other.0);
        ArtinWord(out)
    }

    /// The reverse-inverse word, representing `α^{-1}`.
    pub fn inverse(&self) -> ArtinWord {
        ArtinWord(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn support(&self) -> GenSet {
        self.0.iter().map(|l| l.gen).collect()
    }

    /// Generators with signs dropped.
    pub fn unsigned(&self) -> Vec<usize> {
        self.0.iter().map(|l| l.gen).collect()
    }

    /// Cancels adjacent `σ_s^{±1} σ_s^{∓1}` pairs.
    pub fn free_reduced(&self) -> ArtinWord {
        let mut out: Vec<Letter> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        ArtinWord(out)
    }

    /// Letters whose generator lies in `set`, in order.
    pub fn project(&self, set: GenSet) -> ArtinWord {
        ArtinWord(self.0.iter().copied().filter(|l| set.contains(l.gen)).collect())
    }

    /// Parses whitespace-separated tokens `name`, `name^-1` or `name^k`.
    pub fn parse(graph: &CoxeterGraph, text: &str) -> Result<ArtinWord> {
        let mut out = Vec::new();
        for tok in text.split_whitespace() {
            let (name, exp) = match tok.split_once('^') {
                Some((n, e)) => {
                    let e: i32 = e
                        .trim_start_matches('+')
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent in `{tok}`")))?;
                    (n, e)
                }
                None => (tok, 1),
            };
            let g = graph.generator(name)?;
            let l = if exp > 0 { Letter::pos(g) } else { Letter::neg(g) };
            out.extend(std::iter::repeat_n(l, exp.unsigned_abs() as usize));
        }
        Ok(ArtinWord(out))
    }

    pub fn check(&self, graph: &CoxeterGraph) -> Result<()> {
        match self.0.iter().find(|l| l.gen >= graph.rank() || l.sign.abs() != 1) {
            Some(l) => Err(Error::UnknownGenerator(format!("index {}", l.gen))),
            None => Ok(()),
        }
    }

    /// Text form accepted by [`ArtinWord::parse`].
    pub fn display<'a>(&'a self, graph: &'a CoxeterGraph) -> impl fmt::Display + 'a {
        WordDisplay { word: self, graph }
    }
}

struct WordDisplay<'a> {
    word: &'a ArtinWord,
    graph: &'a CoxeterGraph,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.word.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(self.graph.name(l.gen))?;
            if l.sign < 0 {
                f.write_str("^-1")?;
            }
        }
        Ok(())
    }
}

/// `δ(w,s)^{sign} = (τ(w) σ_s² τ(w)^{-1})^{sign}`, defined when `ℓ(ws) > ℓ(w)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaFactor {
    pub w: CoxeterElement,
    pub s: usize,
    pub sign: i8,
}

/// Raw factor: canonical word of `w`, generator, sign.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct RawDelta {
    pub w: Vec<usize>,
    pub s: usize,
    pub sign: i8,
}

/// Decides equality of words supported in a fixed free-of-infinity subset.
///
/// Implementations must be usable from several threads at once.
pub trait WordOracle: Send + Sync {
    /// Generators the oracle is responsible for.
    fn subset(&self) -> GenSet;

    fn equal(&self, u: &ArtinWord, v: &ArtinWord) -> Result<bool>;

    fn is_trivial(&self, w: &ArtinWord) -> Result<bool> {
        self.equal(w, &ArtinWord::empty())
    }
}

impl<O: WordOracle + ?Sized> WordOracle for Arc<O> {
    fn subset(&self) -> GenSet {
        (**self).subset()
    }
    fn equal(&self, u: &ArtinWord, v: &ArtinWord) -> Result<bool> {
        (**self).equal(u, v)
    }
}

pub(crate) fn theta_raw(g: &CoxeterGraph, w: &ArtinWord) -> Vec<usize> {
    coxeter::canonical(g, &w.unsigned())
}

/// `θ(ω)`: forget signs, then reduce.
pub fn theta(graph: &Arc<CoxeterGraph>, w: &ArtinWord) -> Result<CoxeterElement> {
    w.check(graph)?;
    graph.reduce(&w.unsigned())
}

/// `τ(w)`: the positive lift of the canonical reduced word.
pub fn tau_tilde(w: &CoxeterElement) -> ArtinWord {
    ArtinWord::positive(w.word())
}

fn delta_raw(w: &[usize], s: usize, sign: i8) -> ArtinWord {
    let tau = ArtinWord::positive(w);
    let mut out = tau.clone();
    let l = Letter { gen: s, sign };
    out.push(l);
    out.push(l);
    out.extend(&tau.inverse());
    out
}

fn check_delta(g: &CoxeterGraph, w: &[usize], s: usize) -> Result<()> {
    if Walker::from_word(g, Engine::Auto, w).right_descent(s) {
        return Err(Error::SideConditionViolated(g.name(s).to_string()));
    }
    Ok(())
}

/// Explicit word for a δ factor.
pub fn delta_word(f: &DeltaFactor) -> Result<ArtinWord> {
    let g = f.w.graph();
    if f.s >= g.rank() {
        return Err(Error::UnknownGenerator(format!("index {}", f.s)));
    }
    check_delta(g, f.w.word(), f.s)?;
    Ok(delta_raw(f.w.word(), f.s, f.sign))
}

pub(crate) fn delta_decompose_raw<'g>(
    g: &'g CoxeterGraph,
    w: &ArtinWord,
) -> (Vec<RawDelta>, Walker<'g>) {
    let mut u = Walker::new(g, Engine::Auto);
    let mut factors = Vec::new();
    for l in w.letters() {
        let s = l.gen;
        let descent = u.right_descent(s);
        if l.sign > 0 {
            if descent {
                let mut us = u.clone();
                us.mul_right(s);
                factors.push(RawDelta { w: us.canonical_word(), s, sign: 1 });
                u = us;
            } else {
                u.mul_right(s);
            }
        } else if descent {
            u.mul_right(s);
        } else {
            factors.push(RawDelta { w: u.canonical_word(), s, sign: -1 });
            u.mul_right(s);
        }
    }
    (factors, u)
}

/// Writes `α = δ(w_1,t_1)^{μ_1} ⋯ δ(w_m,t_m)^{μ_m} · τ(θ(α))`.
pub fn delta_decompose(
    graph: &Arc<CoxeterGraph>,
    w: &ArtinWord,
) -> Result<(Vec<DeltaFactor>, CoxeterElement)> {
    w.check(graph)?;
    let (raw, mut u) = delta_decompose_raw(graph, w);
    let factors = raw
        .into_iter()
        .map(|f| DeltaFactor { w: graph.reduce(&f.w).expect("valid letters"), s: f.s, sign: f.sign })
        .collect();
    let residual = graph.reduce(&u.canonical_word())?;
    Ok((factors, residual))
}

/// `π̃_T` on a colored word: each factor `δ(w,s)` maps to nothing or to
/// `δ(w_0,t)` where `w = w_0 w_1` and `w_1 s = t w_1`.
pub fn pi_tilde(g: &CoxeterGraph, w: &ArtinWord, t: GenSet) -> Result<ArtinWord> {
    let (factors, u) = delta_decompose_raw(g, w);
    if u.len() != 0 {
        return Err(Error::NotColored);
    }
    let mut out = ArtinWord::empty();
    for f in factors {
        let (w0, w1) = coxeter::decompose_left(g, &f.w, t);
        let mut w1s = Walker::from_word(g, Engine::Auto, &w1);
        w1s.mul_right(f.s);
        if !t.iter().any(|x| w1s.left_descent(x)) {
            continue;
        }
        let mut conj = w1.clone();
        conj.push(f.s);
        conj.extend(w1.iter().rev());
        let conj = coxeter::canonical(g, &conj);
        let tt = match conj.as_slice() {
            [x] if t.contains(*x) => *x,
            _ => {
                return Err(Error::InvariantBreach(format!(
                    "w1 s w1^-1 is not a generator of T for w1 = {w1:?}, s = {}",
                    g.name(f.s)
                )))
            }
        };
        if Walker::from_word(g, Engine::Auto, &w0).right_descent(tt) {
            return Err(Error::InvariantBreach("l(w0 t) < l(w0) in the retraction".into()));
        }
        out.extend(&delta_raw(&w0, tt, f.sign));
    }
    Ok(out)
}

fn check_scope(
    g: &CoxeterGraph,
    w: &ArtinWord,
    z: GenSet,
    oracle: &dyn WordOracle,
) -> Result<()> {
    if !z.is_subset(oracle.subset()) {
        return Err(Error::OracleSubsetMismatch {
            oracle: g.format_subset(oracle.subset()),
            required: g.format_subset(z),
        });
    }
    if !w.support().is_subset(z) {
        return Err(Error::SupportViolation {
            support: g.format_subset(w.support()),
            allowed: g.format_subset(z),
        });
    }
    if !g.is_free_of_infinity(z) {
        return Err(Error::NotFreeOfInfinity(g.format_subset(z)));
    }
    Ok(())
}

/// Membership of `α` in `A_T` for `ω` supported in `Z`. Returns a word over
/// `T ∩ Z` representing `α`, or `None` if `α ∉ A_T`.
pub fn kappa(
    g: &CoxeterGraph,
    w: &ArtinWord,
    t: GenSet,
    z: GenSet,
    oracle: &dyn WordOracle,
) -> Result<Option<ArtinWord>> {
    check_scope(g, w, z, oracle)?;
    kappa_unchecked(g, w, t.intersection(z), oracle)
}

/// [`kappa`] against an oracle for the whole group, without the
/// free-of-infinity requirement on the support.
pub fn kappa_global(
    g: &CoxeterGraph,
    w: &ArtinWord,
    t: GenSet,
    oracle: &dyn WordOracle,
) -> Result<Option<ArtinWord>> {
    if !w.support().is_subset(oracle.subset()) {
        return Err(Error::SupportViolation {
            support: g.format_subset(w.support()),
            allowed: g.format_subset(oracle.subset()),
        });
    }
    kappa_unchecked(g, w, t.intersection(oracle.subset()), oracle)
}

fn kappa_unchecked(
    g: &CoxeterGraph,
    w: &ArtinWord,
    tz: GenSet,
    oracle: &dyn WordOracle,
) -> Result<Option<ArtinWord>> {
    if w.support().is_subset(tz) {
        return Ok(Some(w.clone()));
    }
    let th = theta_raw(g, w);
    if !th.iter().all(|&s| tz.contains(s)) {
        return Ok(None);
    }
    let tau = ArtinWord::positive(&th);
    let beta = w.concat(&tau.inverse());
    let p = pi_tilde(g, &beta, tz)?;
    if oracle.equal(&p, &beta)? {
        Ok(Some(p.concat(&tau)))
    } else {
        Ok(None)
    }
}

/// Decides `αA_X ∩ A_Y ≠ ∅` for `ω` supported in `Z`; on success returns a
/// word over `Y ∩ Z` representing an element of the intersection.
pub fn iota_intersection(
    g: &CoxeterGraph,
    w: &ArtinWord,
    x: GenSet,
    y: GenSet,
    z: GenSet,
    oracle: &dyn WordOracle,
) -> Result<Option<ArtinWord>> {
    check_scope(g, w, z, oracle)?;
    let th = theta_raw(g, w);
    let (w0, w1) = coxeter::decompose_left(g, &th, y);
    if !w1.iter().all(|&s| x.contains(s)) {
        return Ok(None);
    }
    let tau0 = ArtinWord::positive(&w0);
    let beta = tau0.inverse().concat(w).concat(&ArtinWord::positive(&w1).inverse());
    let yz = y.intersection(z);
    let pb = pi_tilde(g, &beta, yz)?;
    let gamma = beta.inverse().concat(&pb);
    let pg = pi_tilde(g, &gamma, x.intersection(z))?;
    if oracle.equal(&pg, &gamma)? {
        Ok(Some(tau0.concat(&pb)))
    } else {
        Ok(None)
    }
}
