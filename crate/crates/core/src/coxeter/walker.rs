//! Length engines.
//!
//! The geometric engine keeps the matrices of `w` and `w^{-1}` in the doubled
//! Tits representation; `s` is a right descent of `w` iff `w(α_s)` is a
//! negative root. The combinatorial engine keeps a reduced word and searches
//! its braid-move class.

use std::cmp::Ordering;
use std::collections::{HashSet, VecDeque};

use num_bigint::BigInt;

use super::graph::{CoxeterGraph, Label, RootRing};
use super::scalar::{Quad, Scalar};
use crate::genset::GenSet;

/// Which length test to run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Engine {
    /// Geometric when the labels allow exact arithmetic, combinatorial otherwise.
    #[default]
    Auto,
    /// Root positivity in the canonical representation. Falls back to the
    /// combinatorial engine on graphs whose labels need other number fields.
    Geometric,
    /// Braid-move search over reduced expressions.
    Combinatorial,
}

#[derive(Clone)]
struct Geo<K> {
    n: usize,
    /// Column `t` holds `w(α_t)`.
    fwd: Vec<K>,
    /// Column `t` holds `w^{-1}(α_t)`.
    inv: Vec<K>,
}

fn coeff<K: Scalar>(g: &CoxeterGraph, s: usize, t: usize) -> K {
    let (a, b) = g.coeff(s, t);
    K::from_parts(a, b)
}

/// `M ← M·S_s`.
fn col_op<K: Scalar>(n: usize, m: &mut [K], g: &CoxeterGraph, s: usize) -> Option<()> {
    let nb = g.neighbors(s);
    let cs: Vec<K> = nb.iter().map(|&t| coeff(g, s, t)).collect();
    for row in m.chunks_mut(n) {
        let v = row[s].clone();
        if v.is_zero() {
            continue;
        }
        for (c, &t) in cs.iter().zip(nb) {
            row[t] = row[t].checked_sub(&c.checked_mul(&v)?)?;
        }
        row[s] = v.neg()?;
    }
    Some(())
}

/// `M ← S_s·M`.
fn row_op<K: Scalar>(n: usize, m: &mut [K], g: &CoxeterGraph, s: usize) -> Option<()> {
    let nb = g.neighbors(s);
    let cs: Vec<K> = nb.iter().map(|&t| coeff(g, s, t)).collect();
    for j in 0..n {
        let mut acc = m[s * n + j].neg()?;
        for (c, &t) in cs.iter().zip(nb) {
            let x = &m[t * n + j];
            if !x.is_zero() {
                acc = acc.checked_sub(&c.checked_mul(x)?)?;
            }
        }
        m[s * n + j] = acc;
    }
    Some(())
}

fn column_negative<K: Scalar>(n: usize, m: &[K], s: usize) -> Option<bool> {
    for r in 0..n {
        match m[r * n + s].signum()? {
            Ordering::Equal => continue,
            o => return Some(o == Ordering::Less),
        }
    }
    unreachable!("a root is never zero")
}

impl<K: Scalar> Geo<K> {
    fn identity(n: usize) -> Self {
        let mut m = vec![K::zero(); n * n];
        for i in 0..n {
            m[i * n + i] = K::from_parts(1, 0);
        }
        Geo { n, fwd: m.clone(), inv: m }
    }

    fn mul_right(&mut self, g: &CoxeterGraph, s: usize) -> Option<()> {
        col_op(self.n, &mut self.fwd, g, s)?;
        row_op(self.n, &mut self.inv, g, s)
    }

    fn mul_left(&mut self, g: &CoxeterGraph, s: usize) -> Option<()> {
        row_op(self.n, &mut self.fwd, g, s)?;
        col_op(self.n, &mut self.inv, g, s)
    }

    fn right_descent(&self, s: usize) -> Option<bool> {
        column_negative(self.n, &self.fwd, s)
    }

    fn left_descent(&self, s: usize) -> Option<bool> {
        column_negative(self.n, &self.inv, s)
    }

    /// Lex-minimal reduced word: repeatedly strip the smallest left descent.
    fn canonical_word(&self, g: &CoxeterGraph) -> Option<Vec<usize>> {
        let n = self.n;
        let mut m = self.inv.clone();
        let mut word = Vec::new();
        'outer: loop {
            for s in 0..n {
                if column_negative(n, &m, s)? {
                    word.push(s);
                    col_op(n, &mut m, g, s)?;
                    continue 'outer;
                }
            }
            return Some(word);
        }
    }
}

#[derive(Clone)]
struct Comb {
    word: Vec<usize>,
}

fn alternating(a: usize, b: usize, m: usize) -> impl Iterator<Item = usize> {
    (0..m).map(move |k| if k % 2 == 0 { a } else { b })
}

/// Words reachable from `word` by one braid move.
fn braid_neighbors(g: &CoxeterGraph, word: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for i in 0..word.len().saturating_sub(1) {
        let (a, b) = (word[i], word[i + 1]);
        if a == b {
            continue;
        }
        let Label::Finite(m) = g.label(a, b) else { continue };
        let m = m as usize;
        if i + m > word.len() || !word[i..i + m].iter().copied().eq(alternating(a, b, m)) {
            continue;
        }
        let mut next = word.to_vec();
        for (slot, x) in next[i..i + m].iter_mut().zip(alternating(b, a, m)) {
            *slot = x;
        }
        out.push(next);
    }
    out
}

/// Breadth-first walk of the braid class of a reduced word. Stops early and
/// returns the first member accepted by `stop`.
fn braid_class(
    g: &CoxeterGraph,
    word: &[usize],
    mut stop: impl FnMut(&[usize]) -> bool,
) -> (Option<Vec<usize>>, HashSet<Vec<usize>>) {
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(word.to_vec());
    queue.push_back(word.to_vec());
    while let Some(w) = queue.pop_front() {
        if stop(&w) {
            return (Some(w), seen);
        }
        for next in braid_neighbors(g, &w) {
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    (None, seen)
}

impl Comb {
    fn ending_in(&self, g: &CoxeterGraph, s: usize) -> Option<Vec<usize>> {
        braid_class(g, &self.word, |w| w.last() == Some(&s)).0
    }

    fn starting_with(&self, g: &CoxeterGraph, s: usize) -> Option<Vec<usize>> {
        braid_class(g, &self.word, |w| w.first() == Some(&s)).0
    }

    fn mul_right(&mut self, g: &CoxeterGraph, s: usize) {
        match self.ending_in(g, s) {
            Some(mut w) => {
                w.pop();
                self.word = w;
            }
            None => self.word.push(s),
        }
    }

    fn mul_left(&mut self, g: &CoxeterGraph, s: usize) {
        match self.starting_with(g, s) {
            Some(mut w) => {
                w.remove(0);
                self.word = w;
            }
            None => self.word.insert(0, s),
        }
    }

    fn canonical_word(&self, g: &CoxeterGraph) -> Vec<usize> {
        let (_, class) = braid_class(g, &self.word, |_| false);
        class.into_iter().min().unwrap_or_default()
    }
}

#[derive(Clone)]
enum Repr {
    Int(Geo<i128>),
    IntBig(Geo<BigInt>),
    R2(Geo<Quad<i128, 2>>),
    R2Big(Geo<Quad<BigInt, 2>>),
    R3(Geo<Quad<i128, 3>>),
    R3Big(Geo<Quad<BigInt, 3>>),
    Comb(Comb),
}

#[derive(Clone, Copy)]
enum Op {
    Left(usize),
    Right(usize),
}

/// Mutable Coxeter group element with constant-time length and fast
/// descent tests.
#[derive(Clone)]
pub(crate) struct Walker<'g> {
    g: &'g CoxeterGraph,
    repr: Repr,
    len: usize,
    /// Operations applied so far, kept while the state uses bounded
    /// integers so it can be replayed in `BigInt` after an overflow.
    history: Option<Vec<Op>>,
}

macro_rules! on_geo {
    ($repr:expr, $st:ident => $body:expr, $comb:ident => $cbody:expr) => {
        match $repr {
            Repr::Int($st) => $body,
            Repr::IntBig($st) => $body,
            Repr::R2($st) => $body,
            Repr::R2Big($st) => $body,
            Repr::R3($st) => $body,
            Repr::R3Big($st) => $body,
            Repr::Comb($comb) => $cbody,
        }
    };
}

impl<'g> Walker<'g> {
    pub(crate) fn new(g: &'g CoxeterGraph, engine: Engine) -> Self {
        let n = g.rank();
        let repr = match (engine, g.ring()) {
            (Engine::Combinatorial, _) | (_, RootRing::Unsupported) => {
                Repr::Comb(Comb { word: Vec::new() })
            }
            (_, RootRing::Integer) => Repr::Int(Geo::identity(n)),
            (_, RootRing::Sqrt2) => Repr::R2(Geo::identity(n)),
            (_, RootRing::Sqrt3) => Repr::R3(Geo::identity(n)),
        };
        let history = matches!(repr, Repr::Int(_) | Repr::R2(_) | Repr::R3(_)).then(Vec::new);
        Walker { g, repr, len: 0, history }
    }

    pub(crate) fn from_word(g: &'g CoxeterGraph, engine: Engine, word: &[usize]) -> Self {
        let mut w = Self::new(g, engine);
        for &s in word {
            w.mul_right(s);
        }
        w
    }

    pub(crate) fn len(&self) -> usize {
        self.len
    }

    /// Replays the history in unbounded arithmetic.
    fn upgrade(&mut self) {
        let ops = self.history.take().expect("bounded state keeps its history");
        let n = self.g.rank();
        fn replay<K: Scalar>(g: &CoxeterGraph, n: usize, ops: &[Op]) -> Geo<K> {
            let mut st = Geo::identity(n);
            for op in ops.iter().filter(|o| matches!(o, Op::Right(_))) {
                let Op::Right(s) = *op else { unreachable!() };
                st.mul_right(g, s).expect("unbounded arithmetic");
            }
            for op in ops.iter().filter(|o| matches!(o, Op::Left(_))) {
                let Op::Left(s) = *op else { unreachable!() };
                st.mul_left(g, s).expect("unbounded arithmetic");
            }
            st
        }
        self.repr = match self.repr {
            Repr::Int(_) => Repr::IntBig(replay(self.g, n, &ops)),
            Repr::R2(_) => Repr::R2Big(replay(self.g, n, &ops)),
            Repr::R3(_) => Repr::R3Big(replay(self.g, n, &ops)),
            _ => unreachable!("only bounded states upgrade"),
        };
    }

    pub(crate) fn right_descent(&mut self, s: usize) -> bool {
        loop {
            let g = self.g;
            let r = on_geo!(&self.repr, st => st.right_descent(s), c => Some(c.ending_in(g, s).is_some()));
            match r {
                Some(b) => return b,
                None => self.upgrade(),
            }
        }
    }

    pub(crate) fn left_descent(&mut self, s: usize) -> bool {
        loop {
            let g = self.g;
            let r = on_geo!(&self.repr, st => st.left_descent(s), c => Some(c.starting_with(g, s).is_some()));
            match r {
                Some(b) => return b,
                None => self.upgrade(),
            }
        }
    }

    pub(crate) fn right_descents(&mut self) -> GenSet {
        (0..self.g.rank()).filter(|&s| self.right_descent(s)).collect()
    }

    pub(crate) fn left_descents(&mut self) -> GenSet {
        (0..self.g.rank()).filter(|&s| self.left_descent(s)).collect()
    }

    pub(crate) fn mul_right(&mut self, s: usize) {
        let shorter = self.right_descent(s);
        self.apply(Op::Right(s));
        if shorter {
            self.len -= 1;
        } else {
            self.len += 1;
        }
    }

    pub(crate) fn mul_left(&mut self, s: usize) {
        let shorter = self.left_descent(s);
        self.apply(Op::Left(s));
        if shorter {
            self.len -= 1;
        } else {
            self.len += 1;
        }
    }

    fn apply(&mut self, op: Op) {
        if let Some(h) = &mut self.history {
            h.push(op);
        }
        let g = self.g;
        let ok = on_geo!(&mut self.repr, st => match op {
            Op::Right(s) => st.mul_right(g, s),
            Op::Left(s) => st.mul_left(g, s),
        }.is_some(), c => {
            match op {
                Op::Right(s) => c.mul_right(g, s),
                Op::Left(s) => c.mul_left(g, s),
            }
            true
        });
        if !ok {
            // The failed operation is already recorded, so the replay includes it.
            self.upgrade();
        }
    }

    pub(crate) fn canonical_word(&mut self) -> Vec<usize> {
        loop {
            let g = self.g;
            let r = on_geo!(&self.repr, st => st.canonical_word(g), c => Some(c.canonical_word(g)));
            match r {
                Some(w) => return w,
                None => self.upgrade(),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> CoxeterGraph {
        CoxeterGraph::dihedral(Label::Finite(3))
    }

    #[test]
    fn lengths_in_a2() {
        let g = a2();
        for engine in [Engine::Geometric, Engine::Combinatorial] {
            let mut w = Walker::from_word(&g, engine, &[0, 1, 0, 1]);
            assert_eq!(w.len(), 2);
            assert_eq!(w.canonical_word(), vec![1, 0]);
            let mut w = Walker::from_word(&g, engine, &[0, 1, 0]);
            assert_eq!(w.right_descents(), GenSet::full(2));
            assert_eq!(w.left_descents(), GenSet::full(2));
        }
    }

    #[test]
    fn left_and_right_multiplication_commute() {
        let g = CoxeterGraph::type_b(3);
        let mut a = Walker::from_word(&g, Engine::Geometric, &[0, 1, 2, 1, 0]);
        a.mul_left(2);
        let mut b = Walker::from_word(&g, Engine::Geometric, &[2, 0, 1, 2, 1, 0]);
        assert_eq!(a.len(), b.len());
        assert_eq!(a.canonical_word(), b.canonical_word());
    }

    #[test]
    fn overflow_upgrades_to_bigint() {
        // Free Coxeter group on three generators: root coordinates grow
        // exponentially along (abc)^k.
        let g = CoxeterGraph::build(
            &["a", "b", "c"],
            &[("a", "b", Label::Infinity), ("a", "c", Label::Infinity), ("b", "c", Label::Infinity)],
        )
        .unwrap();
        let word: Vec<usize> = (0..240).map(|i| i % 3).collect();
        let mut w = Walker::from_word(&g, Engine::Geometric, &word);
        assert!(matches!(w.repr, Repr::IntBig(_)));
        assert_eq!(w.len(), 240);
        assert_eq!(w.canonical_word(), word);
        for s in 0..3 {
            w.mul_left(s);
        }
        assert_eq!(w.len(), 237);
    }

    #[test]
    fn sqrt_rings_agree_with_search() {
        for m in [4, 6] {
            let g = CoxeterGraph::dihedral(Label::Finite(m));
            for len in 0..2 * m as usize + 3 {
                let word: Vec<usize> = (0..len).map(|i| i % 2).collect();
                let mut a = Walker::from_word(&g, Engine::Geometric, &word);
                let mut b = Walker::from_word(&g, Engine::Combinatorial, &word);
                assert_eq!(a.len(), b.len(), "m={m} len={len}");
                assert_eq!(a.canonical_word(), b.canonical_word());
            }
        }
    }
}
