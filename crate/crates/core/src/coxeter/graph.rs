use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::genset::{GenSet, MAX_GENERATORS};

/// Off-diagonal entry of a Coxeter matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Label {
    Finite(u32),
    Infinity,
}

impl Label {
    pub fn is_infinite(self) -> bool {
        matches!(self, Label::Infinity)
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Label::Finite(m) => Some(m),
            Label::Infinity => None,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Finite(m) => write!(f, "{m}"),
            Label::Infinity => f.write_str("inf"),
        }
    }
}

/// Ring in which the doubled bilinear form `c(s,t) = -2cos(pi/m)` is exact.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootRing {
    /// Labels in `{2, 3, inf}`.
    Integer,
    /// Labels in `{2, 3, 4, inf}`.
    Sqrt2,
    /// Labels in `{2, 3, 6, inf}`.
    Sqrt3,
    /// Some other finite label occurs; only the combinatorial engine applies.
    Unsupported,
}

/// A Coxeter matrix over named generators.
///
/// Immutable after construction. Generator order (the order of `names`) is
/// the tie-break order used everywhere, in particular for lex-minimal
/// reduced words.
#[derive(Clone, Debug)]
pub struct CoxeterGraph {
    names: Vec<String>,
    index: HashMap<String, usize>,
    labels: Vec<Label>,
    ring: RootRing,
    /// `c(s,t)` as `(a, b)` meaning `a + b·sqrt(d)`.
    coeffs: Vec<(i64, i64)>,
    /// Generators `t != s` with `m(s,t) != 2`.
    neighbors: Vec<Vec<usize>>,
}

impl PartialEq for CoxeterGraph {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.labels == other.labels
    }
}
impl Eq for CoxeterGraph {}

impl CoxeterGraph {
    /// Validating constructor: every unordered pair of distinct generators
    /// must be listed exactly once.
    pub fn build(names: &[&str], entries: &[(&str, &str, Label)]) -> Result<Self> {
        let names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        let index = Self::index_names(&names)?;
        let n = names.len();
        let mut labels: Vec<Option<Label>> = vec![None; n * n];
        for &(s, t, m) in entries {
            let i = *index.get(s).ok_or_else(|| Error::UnknownGenerator(s.into()))?;
            let j = *index.get(t).ok_or_else(|| Error::UnknownGenerator(t.into()))?;
            if i == j {
                return Err(Error::BadLabel {
                    s: s.into(),
                    t: t.into(),
                    reason: "diagonal entries are fixed to 1".into(),
                });
            }
            check_label(s, t, m)?;
            if labels[i * n + j].is_some() {
                return Err(Error::AsymmetricOrMissingEntry(s.into(), t.into()));
            }
            labels[i * n + j] = Some(m);
            labels[j * n + i] = Some(m);
        }
        let mut full = vec![Label::Finite(1); n * n];
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                full[i * n + j] = labels[i * n + j].ok_or_else(|| {
                    Error::AsymmetricOrMissingEntry(names[i].clone(), names[j].clone())
                })?;
            }
        }
        Ok(Self::assemble(names, index, full))
    }

    /// Constructor used by file loaders: unlisted pairs commute (`m = 2`).
    pub fn from_edges(names: &[&str], edges: &[(&str, &str, Label)]) -> Result<Self> {
        let owned: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        let index = Self::index_names(&owned)?;
        let mut given = vec![false; names.len() * names.len()];
        let n = names.len();
        let mut entries: Vec<(&str, &str, Label)> = Vec::new();
        for &(s, t, m) in edges {
            let i = *index.get(s).ok_or_else(|| Error::UnknownGenerator(s.into()))?;
            let j = *index.get(t).ok_or_else(|| Error::UnknownGenerator(t.into()))?;
            if i != j {
                given[i * n + j] = true;
                given[j * n + i] = true;
            }
            entries.push((s, t, m));
        }
        for i in 0..n {
            for j in i + 1..n {
                if !given[i * n + j] {
                    entries.push((names[i], names[j], Label::Finite(2)));
                }
            }
        }
        Self::build(names, &entries)
    }

    fn index_names(names: &[String]) -> Result<HashMap<String, usize>> {
        if names.len() > MAX_GENERATORS {
            return Err(Error::TooManyGenerators { max: MAX_GENERATORS, got: names.len() });
        }
        let mut index = HashMap::new();
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() || name.chars().any(|c| c.is_whitespace() || c == '^') {
                return Err(Error::Parse(format!("invalid generator name `{name}`")));
            }
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::DuplicateName(name.clone()));
            }
        }
        Ok(index)
    }

    fn assemble(names: Vec<String>, index: HashMap<String, usize>, labels: Vec<Label>) -> Self {
        let n = names.len();
        let mut has4 = false;
        let mut has6 = false;
        let mut other = false;
        for i in 0..n {
            for j in i + 1..n {
                match labels[i * n + j] {
                    Label::Finite(2) | Label::Finite(3) | Label::Infinity => {}
                    Label::Finite(4) => has4 = true,
                    Label::Finite(6) => has6 = true,
                    Label::Finite(_) => other = true,
                }
            }
        }
        let ring = match (other || (has4 && has6), has4, has6) {
            (true, _, _) => RootRing::Unsupported,
            (false, true, _) => RootRing::Sqrt2,
            (false, _, true) => RootRing::Sqrt3,
            _ => RootRing::Integer,
        };
        let coeffs = labels
            .iter()
            .map(|&l| match l {
                Label::Finite(1) => (2, 0),
                Label::Finite(2) => (0, 0),
                Label::Finite(3) => (-1, 0),
                Label::Finite(4) | Label::Finite(6) => (0, -1),
                Label::Infinity => (-2, 0),
                // Unused: such graphs run on the combinatorial engine.
                Label::Finite(_) => (0, 0),
            })
            .collect();
        let neighbors = (0..n)
            .map(|s| {
                (0..n)
                    .filter(|&t| t != s && labels[s * n + t] != Label::Finite(2))
                    .collect()
            })
            .collect();
        CoxeterGraph { names, index, labels, ring, coeffs, neighbors }
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, g: usize) -> &str {
        &self.names[g]
    }

    pub fn generator(&self, name: &str) -> Result<usize> {
        self.index.get(name).copied().ok_or_else(|| Error::UnknownGenerator(name.into()))
    }

    pub fn all(&self) -> GenSet {
        GenSet::full(self.rank())
    }

    /// `m(s,t)`; `Finite(1)` on the diagonal.
    pub fn label(&self, s: usize, t: usize) -> Label {
        self.labels[s * self.rank() + t]
    }

    pub fn ring(&self) -> RootRing {
        self.ring
    }

    pub(crate) fn coeff(&self, s: usize, t: usize) -> (i64, i64) {
        self.coeffs[s * self.rank() + t]
    }

    pub(crate) fn neighbors(&self, s: usize) -> &[usize] {
        &self.neighbors[s]
    }

    /// Parses a whitespace-separated list of generator names into a subset.
    pub fn subset(&self, text: &str) -> Result<GenSet> {
        text.split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| self.generator(t))
            .collect()
    }

    pub fn subset_of(&self, names: &[&str]) -> Result<GenSet> {
        names.iter().map(|t| self.generator(t)).collect()
    }

    pub fn format_subset(&self, set: GenSet) -> String {
        let inner: Vec<&str> = set.iter().map(|g| self.name(g)).collect();
        format!("{{{}}}", inner.join(", "))
    }

    pub fn check_subset(&self, set: GenSet) -> Result<()> {
        if set.is_subset(self.all()) {
            Ok(())
        } else {
            Err(Error::UnknownGenerator(format!("index {:?}", set.difference(self.all()))))
        }
    }

    /// `Gamma_X` is free of infinity when no pair inside `X` carries `inf`.
    pub fn is_free_of_infinity(&self, set: GenSet) -> bool {
        let members: Vec<usize> = set.iter().collect();
        members.iter().enumerate().all(|(k, &s)| {
            members[k + 1..].iter().all(|&t| !self.label(s, t).is_infinite())
        })
    }

    /// Connected components of `Gamma_X` (edges are labels other than 2),
    /// ordered by smallest member.
    pub fn components(&self, set: GenSet) -> Vec<GenSet> {
        let mut seen = GenSet::EMPTY;
        let mut out = Vec::new();
        for start in set.iter() {
            if seen.contains(start) {
                continue;
            }
            let mut comp = GenSet::singleton(start);
            let mut stack = vec![start];
            while let Some(s) = stack.pop() {
                for &t in self.neighbors(s) {
                    if set.contains(t) && !comp.contains(t) {
                        comp.insert(t);
                        stack.push(t);
                    }
                }
            }
            seen = seen.union(comp);
            out.push(comp);
        }
        out
    }

    /// Maximal free-of-infinity subsets, i.e. maximal cliques of the graph of
    /// finite labels, in increasing bit order.
    pub fn maximal_free_of_infinity(&self) -> Vec<GenSet> {
        let finite_nbrs: Vec<GenSet> = (0..self.rank())
            .map(|s| (0..self.rank()).filter(|&t| t != s && !self.label(s, t).is_infinite()).collect())
            .collect();
        let mut out = Vec::new();
        bron_kerbosch(&finite_nbrs, GenSet::EMPTY, self.all(), GenSet::EMPTY, &mut out);
        out.sort_by_key(|s| s.bits());
        out
    }

    /// The full subgraph on `set`, with the inclusion map of generators.
    pub fn restrict(&self, set: GenSet) -> (CoxeterGraph, Vec<usize>) {
        let members: Vec<usize> = set.iter().collect();
        let names: Vec<String> = members.iter().map(|&g| self.names[g].clone()).collect();
        let index = names.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        let k = members.len();
        let mut labels = vec![Label::Finite(1); k * k];
        for (i, &s) in members.iter().enumerate() {
            for (j, &t) in members.iter().enumerate() {
                labels[i * k + j] = self.label(s, t);
            }
        }
        (Self::assemble(names, index, labels), members)
    }

    /// Dihedral graph on generators `s, t`.
    pub fn dihedral(m: Label) -> Self {
        Self::build(&["s", "t"], &[("s", "t", m)]).expect("valid dihedral graph")
    }

    /// Type `A_n` chain on `s1 .. sn`.
    pub fn type_a(n: usize) -> Self {
        Self::chain(n, None)
    }

    /// Type `B_n`: chain `t - s1 - .. - s(n-1)` with the label 4 on the
    /// `t - s1` edge.
    pub fn type_b(n: usize) -> Self {
        assert!(n >= 2);
        let mut names = vec!["t".to_string()];
        names.extend((1..n).map(|i| format!("s{i}")));
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let mut edges = vec![(refs[0], refs[1], Label::Finite(4))];
        for i in 1..n - 1 {
            edges.push((refs[i], refs[i + 1], Label::Finite(3)));
        }
        Self::from_edges(&refs, &edges).expect("valid B_n graph")
    }

    /// Affine `Ã_k`: a cycle of `k + 1` generators `a1 .. a(k+1)`, all
    /// edges labeled 3.
    pub fn affine_a(k: usize) -> Self {
        assert!(k >= 2);
        let names: Vec<String> = (1..=k + 1).map(|i| format!("a{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let edges: Vec<_> =
            (0..=k).map(|i| (refs[i], refs[(i + 1) % (k + 1)], Label::Finite(3))).collect();
        Self::from_edges(&refs, &edges).expect("valid affine graph")
    }

    fn chain(n: usize, _end: Option<Label>) -> Self {
        let names: Vec<String> = (1..=n).map(|i| format!("s{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let edges: Vec<_> =
            (1..n).map(|i| (refs[i - 1], refs[i], Label::Finite(3))).collect();
        Self::from_edges(&refs, &edges).expect("valid chain graph")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: GraphFile =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("graph JSON: {e}")))?;
        let names: Vec<&str> = file.generators.iter().map(String::as_str).collect();
        let edges: Vec<(&str, &str, Label)> = file
            .edges
            .iter()
            .map(|e| {
                let m = match e.m {
                    Some(m) => Label::Finite(m),
                    None => Label::Infinity,
                };
                (e.s.as_str(), e.t.as_str(), m)
            })
            .collect();
        Self::from_edges(&names, &edges)
    }

    /// JSON with every pair whose label differs from 2; `inf` is `null`.
    pub fn to_json(&self) -> String {
        let n = self.rank();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let l = self.label(i, j);
                if l != Label::Finite(2) {
                    edges.push(EdgeFile {
                        s: self.names[i].clone(),
                        t: self.names[j].clone(),
                        m: l.finite(),
                    });
                }
            }
        }
        let file = GraphFile { generators: self.names.clone(), edges };
        serde_json::to_string_pretty(&file).expect("graph serializes")
    }
}

fn bron_kerbosch(nbrs: &[GenSet], r: GenSet, mut p: GenSet, mut x: GenSet, out: &mut Vec<GenSet>) {
    let Some(pivot) = p.union(x).first() else {
        out.push(r);
        return;
    };
    for v in p.difference(nbrs[pivot]).iter() {
        bron_kerbosch(nbrs, r.with(v), p.intersection(nbrs[v]), x.intersection(nbrs[v]), out);
        p.remove(v);
        x.insert(v);
    }
}

fn check_label(s: &str, t: &str, m: Label) -> Result<()> {
    match m {
        Label::Finite(v) if v < 2 => Err(Error::BadLabel {
            s: s.into(),
            t: t.into(),
            reason: format!("off-diagonal label must be >= 2, got {v}"),
        }),
        _ => Ok(()),
    }
}

#[derive(Serialize, Deserialize)]
struct GraphFile {
    generators: Vec<String>,
    #[serde(default)]
    edges: Vec<EdgeFile>,
}

#[derive(Serialize, Deserialize)]
struct EdgeFile {
    s: String,
    t: String,
    m: Option<u32>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_graph() {
        let g = CoxeterGraph::build(&["s", "t"], &[("s", "t", Label::Finite(3))]).unwrap();
        assert_eq!(g.rank(), 2);
        assert_eq!(g.label(0, 1), Label::Finite(3));
        assert_eq!(g.label(1, 0), Label::Finite(3));
        assert_eq!(g.ring(), RootRing::Integer);
    }

    #[test]
    fn diagonal_entry_is_rejected() {
        let err = CoxeterGraph::build(&["s"], &[("s", "s", Label::Finite(2))]).unwrap_err();
        assert!(matches!(err, Error::BadLabel { .. }));
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            CoxeterGraph::build(&["s", "s"], &[]).unwrap_err(),
            Error::DuplicateName("s".into())
        );
        assert!(matches!(
            CoxeterGraph::build(&["s", "t", "u"], &[("s", "t", Label::Finite(3))]),
            Err(Error::AsymmetricOrMissingEntry(..))
        ));
        assert!(matches!(
            CoxeterGraph::build(
                &["s", "t"],
                &[("s", "t", Label::Finite(3)), ("t", "s", Label::Finite(3))]
            ),
            Err(Error::AsymmetricOrMissingEntry(..))
        ));
        assert!(matches!(
            CoxeterGraph::build(&["s", "t"], &[("s", "t", Label::Finite(1))]),
            Err(Error::BadLabel { .. })
        ));
        assert!(matches!(
            CoxeterGraph::build(&["s", "t"], &[("s", "x", Label::Finite(3))]),
            Err(Error::UnknownGenerator(_))
        ));
    }

    #[test]
    fn rings_follow_labels() {
        assert_eq!(CoxeterGraph::type_b(3).ring(), RootRing::Sqrt2);
        assert_eq!(CoxeterGraph::dihedral(Label::Finite(6)).ring(), RootRing::Sqrt3);
        assert_eq!(CoxeterGraph::dihedral(Label::Finite(5)).ring(), RootRing::Unsupported);
        assert_eq!(CoxeterGraph::dihedral(Label::Infinity).ring(), RootRing::Integer);
    }

    #[test]
    fn json_round_trip_uses_null_for_infinity() {
        let text = r#"{"generators": ["a", "b", "c"],
                       "edges": [{"s": "a", "t": "b", "m": 3}, {"s": "b", "t": "c", "m": null}]}"#;
        let g = CoxeterGraph::from_json(text).unwrap();
        assert_eq!(g.label(0, 2), Label::Finite(2));
        assert_eq!(g.label(1, 2), Label::Infinity);
        assert!(g.to_json().contains("null"));
        assert_eq!(CoxeterGraph::from_json(&g.to_json()).unwrap(), g);
    }

    #[test]
    fn free_of_infinity_and_components() {
        let g = CoxeterGraph::from_json(
            r#"{"generators": ["a", "b", "c", "d"],
                "edges": [{"s": "a", "t": "b", "m": 3}, {"s": "c", "t": "d", "m": null}]}"#,
        )
        .unwrap();
        assert!(g.is_free_of_infinity(g.subset("a b c").unwrap()));
        assert!(!g.is_free_of_infinity(g.subset("c d").unwrap()));
        assert!(g.is_free_of_infinity(GenSet::EMPTY));
        let comps = g.components(g.subset("a b c").unwrap());
        assert_eq!(comps, vec![g.subset("a b").unwrap(), g.subset("c").unwrap()]);
    }
}
