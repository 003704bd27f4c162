//! Brute-force reference checks: bounded bidirectional search over a finite
//! presentation, and free reduction.
//!
//! The search can only ever prove equality.

use std::collections::{BTreeSet, HashMap, HashSet};

use crate::artin_words::{ArtinWord, Letter};
use crate::coxeter::{CoxeterGraph, Label};

/// Generators `0..generators` with formal inverses, plus relators.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub generators: usize,
    pub relators: Vec<ArtinWord>,
    /// `(p, q^{-1})` for every cyclic rotation `pq` of a relator or its inverse.
    rules: Vec<(Vec<Letter>, Vec<Letter>)>,
}

impl Presentation {
    pub fn new(generators: usize, relators: Vec<ArtinWord>) -> Self {
        let relators: Vec<ArtinWord> =
            relators.into_iter().map(|r| r.free_reduced()).filter(|r| !r.is_empty()).collect();
        let mut rules = BTreeSet::new();
        for r in &relators {
            for word in [r.clone(), r.inverse()] {
                let l = word.letters();
                for rot in 0..l.len() {
                    let cyc: Vec<Letter> = l[rot..].iter().chain(&l[..rot]).copied().collect();
                    for cut in 1..=cyc.len() {
                        let p = cyc[..cut].to_vec();
                        let q_inv = ArtinWord::new(cyc[cut..].to_vec()).inverse().letters().to_vec();
                        rules.insert((p, q_inv));
                    }
                }
            }
        }
        Presentation { generators, relators, rules: rules.into_iter().collect() }
    }

    /// The Artin presentation: one braid relator per finite label.
    pub fn artin(graph: &CoxeterGraph) -> Self {
        Presentation::new(graph.rank(), artin_relators(graph))
    }

    /// Words obtained by one relator substitution followed by free
    /// reduction, or by one free cancellation, capped at `max_len` letters.
    pub fn neighbors(&self, w: &ArtinWord, max_len: usize) -> Vec<ArtinWord> {
        let l = w.letters();
        let mut out = BTreeSet::new();
        for i in 0..l.len().saturating_sub(1) {
            if l[i + 1] == l[i].inverse() {
                let mut v = l[..i].to_vec();
                v.extend_from_slice(&l[i + 2..]);
                out.insert(ArtinWord::new(v));
            }
        }
        for (p, q) in &self.rules {
            if p.len() > l.len() {
                continue;
            }
            for i in 0..=l.len() - p.len() {
                if l[i..i + p.len()] != p[..] {
                    continue;
                }
                let mut v = l[..i].to_vec();
                v.extend_from_slice(q);
                v.extend_from_slice(&l[i + p.len()..]);
                let v = ArtinWord::new(v).free_reduced();
                if v.len() <= max_len {
                    out.insert(v);
                }
            }
        }
        out.remove(w);
        out.into_iter().collect()
    }
}

/// `prod(σ_s,σ_t; m) · prod(σ_t,σ_s; m)^{-1}` for every pair with finite label.
pub fn artin_relators(graph: &CoxeterGraph) -> Vec<ArtinWord> {
    let mut out = Vec::new();
    for s in 0..graph.rank() {
        for t in s + 1..graph.rank() {
            if let Label::Finite(m) = graph.label(s, t) {
                out.push(braid_relator(s, t, m as usize));
            }
        }
    }
    out
}

/// The braid relator of length `2m` between `s` and `t`.
pub fn braid_relator(s: usize, t: usize, m: usize) -> ArtinWord {
    let alt = |a: usize, b: usize| -> ArtinWord {
        ArtinWord::positive(&(0..m).map(|k| if k % 2 == 0 { a } else { b }).collect::<Vec<_>>())
    };
    alt(s, t).concat(&alt(t, s).inverse())
}

/// Search limits.
#[derive(Clone, Copy, Debug)]
pub struct Bounds {
    /// Expansion rounds per side.
    pub depth: usize,
    /// Maximum frontier size per side; larger frontiers are truncated.
    pub width: usize,
    /// Longest intermediate word.
    pub max_len: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { depth: 8, width: 20_000, max_len: 24 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Equal,
    /// Not merged within the bounds; `truncated` reports whether a frontier
    /// hit the width bound.
    Unknown { truncated: bool },
}

/// Bidirectional breadth-first search from `u` and `v`.
pub fn bfs_equal(pres: &Presentation, u: &ArtinWord, v: &ArtinWord, bounds: Bounds) -> Verdict {
    let u = u.free_reduced();
    let v = v.free_reduced();
    if u == v {
        return Verdict::Equal;
    }
    let max_len = bounds.max_len.max(u.len()).max(v.len());
    let mut seen = [HashSet::from([u.clone()]), HashSet::from([v.clone()])];
    let mut frontier = [vec![u], vec![v]];
    let mut truncated = false;
    for round in 0..2 * bounds.depth {
        let side = round % 2;
        let mut next = Vec::new();
        for w in &frontier[side] {
            for x in pres.neighbors(w, max_len) {
                if seen[1 - side].contains(&x) {
                    return Verdict::Equal;
                }
                if seen[side].insert(x.clone()) {
                    next.push(x);
                }
            }
        }
        if next.len() > bounds.width {
            next.sort_by_key(|w| (w.len(), w.clone()));
            next.truncate(bounds.width);
            truncated = true;
        }
        frontier[side] = next;
    }
    Verdict::Unknown { truncated }
}

/// Free reduction; equality in a free group is equality of reductions.
pub fn free_reduce(w: &ArtinWord) -> ArtinWord {
    w.free_reduced()
}

/// Classes of words up to `max_len` letters merged by single moves that
/// stay within `max_len`.
pub struct WordClasses {
    index: HashMap<ArtinWord, usize>,
    parent: Vec<usize>,
}

impl WordClasses {
    pub fn build(pres: &Presentation, words: impl IntoIterator<Item = ArtinWord>, max_len: usize) -> Self {
        let mut classes = WordClasses { index: HashMap::new(), parent: Vec::new() };
        let mut stack: Vec<ArtinWord> = words.into_iter().collect();
        for w in &stack {
            classes.id(w);
        }
        while let Some(w) = stack.pop() {
            let a = classes.index[&w];
            for x in pres.neighbors(&w, max_len) {
                let fresh = !classes.index.contains_key(&x);
                let b = classes.id(&x);
                classes.union(a, b);
                if fresh {
                    stack.push(x);
                }
            }
        }
        classes
    }

    fn id(&mut self, w: &ArtinWord) -> usize {
        if let Some(&i) = self.index.get(w) {
            return i;
        }
        let i = self.parent.len();
        self.parent.push(i);
        self.index.insert(w.clone(), i);
        i
    }

    fn find(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]];
            i = self.parent[i];
        }
        i
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.parent[a.max(b)] = a.min(b);
        }
    }

    /// Class representative, or `None` for words never seen.
    pub fn class_of(&mut self, w: &ArtinWord) -> Option<usize> {
        let i = *self.index.get(w)?;
        Some(self.find(i))
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }
}

/// Every word over `generators` generators and their inverses with at most
/// `max_len` letters.
pub fn all_words(generators: usize, max_len: usize) -> Vec<ArtinWord> {
    let letters: Vec<Letter> =
        (0..generators).flat_map(|g| [Letter::pos(g), Letter::neg(g)]).collect();
    let mut out = vec![ArtinWord::empty()];
    let mut layer = vec![Vec::<Letter>::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for &l in &letters {
                let mut x = w.clone();
                x.push(l);
                next.push(x);
            }
        }
        out.extend(next.iter().cloned().map(ArtinWord::new));
        layer = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> CoxeterGraph {
        CoxeterGraph::dihedral(Label::Finite(3))
    }

    #[test]
    fn braid_pair_is_equal() {
        let g = a2();
        let p = Presentation::artin(&g);
        let u = ArtinWord::parse(&g, "s t s").unwrap();
        let v = ArtinWord::parse(&g, "t s t").unwrap();
        let b = Bounds { depth: 4, ..Bounds::default() };
        assert_eq!(bfs_equal(&p, &u, &v, b), Verdict::Equal);
        let u = ArtinWord::parse(&g, "s").unwrap();
        let v = ArtinWord::parse(&g, "t").unwrap();
        assert!(matches!(bfs_equal(&p, &u, &v, b), Verdict::Unknown { .. }));
    }

    #[test]
    fn conjugated_relation_needs_search() {
        let g = a2();
        let p = Presentation::artin(&g);
        let u = ArtinWord::parse(&g, "s t s t^-1 s^-1").unwrap();
        let v = ArtinWord::parse(&g, "t").unwrap();
        assert_eq!(bfs_equal(&p, &u, &v, Bounds::default()), Verdict::Equal);
    }

    #[test]
    fn free_reduce_examples() {
        let g = a2();
        let w = |t: &str| ArtinWord::parse(&g, t).unwrap();
        assert!(free_reduce(&w("s s^-1")).is_empty());
        assert_eq!(free_reduce(&w("s t t^-1")), w("s"));
        assert_eq!(free_reduce(&w("s t s^-1 t^-1")).len(), 4);
    }

    #[test]
    fn classes_merge_short_relations() {
        let g = a2();
        let p = Presentation::artin(&g);
        let mut c = WordClasses::build(&p, all_words(2, 3), 6);
        let w = |t: &str| ArtinWord::parse(&g, t).unwrap();
        assert_eq!(c.class_of(&w("s t s")), c.class_of(&w("t s t")));
        assert_eq!(c.class_of(&w("s s^-1")), c.class_of(&w("")));
        assert_ne!(c.class_of(&w("s")), c.class_of(&w("t")));
        assert_eq!(all_words(2, 2).len(), 1 + 4 + 16);
    }
}
