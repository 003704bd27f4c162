//! Recognition of finite Coxeter groups from their graphs.

use std::fmt;

use super::graph::{CoxeterGraph, Label};
use crate::genset::GenSet;

/// Connected finite Coxeter types.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FiniteType {
    A(usize),
    B(usize),
    D(usize),
    E(usize),
    F4,
    H(usize),
    /// Dihedral type for labels other than 3 and 4.
    I2(u32),
}

impl FiniteType {
    pub fn rank(self) -> usize {
        match self {
            FiniteType::A(n) | FiniteType::B(n) | FiniteType::D(n) | FiniteType::E(n) => n,
            FiniteType::H(n) => n,
            FiniteType::F4 => 4,
            FiniteType::I2(_) => 2,
        }
    }

    /// Order of the Coxeter group, if it fits in a `u128`.
    pub fn order(self) -> Option<u128> {
        let fact = |n: usize| (1..=n as u128).try_fold(1u128, |acc, k| acc.checked_mul(k));
        match self {
            FiniteType::A(n) => fact(n + 1),
            FiniteType::B(n) => fact(n)?.checked_mul(1u128.checked_shl(n as u32)?),
            FiniteType::D(n) => fact(n)?.checked_mul(1u128.checked_shl(n as u32 - 1)?),
            FiniteType::E(6) => Some(51_840),
            FiniteType::E(7) => Some(2_903_040),
            FiniteType::E(_) => Some(696_729_600),
            FiniteType::F4 => Some(1152),
            FiniteType::H(3) => Some(120),
            FiniteType::H(_) => Some(14_400),
            FiniteType::I2(m) => Some(2 * m as u128),
        }
    }
}

impl fmt::Display for FiniteType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiniteType::A(n) => write!(f, "A_{n}"),
            FiniteType::B(n) => write!(f, "B_{n}"),
            FiniteType::D(n) => write!(f, "D_{n}"),
            FiniteType::E(n) => write!(f, "E_{n}"),
            FiniteType::F4 => f.write_str("F_4"),
            FiniteType::H(n) => write!(f, "H_{n}"),
            FiniteType::I2(m) => write!(f, "I_2({m})"),
        }
    }
}

/// Result of [`CoxeterGraph::classify_finite`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    /// Component types, one per connected component, sorted.
    Finite(Vec<FiniteType>),
    Infinite,
}

impl Classification {
    pub fn is_finite(&self) -> bool {
        matches!(self, Classification::Finite(_))
    }

    pub fn order(&self) -> Option<u128> {
        match self {
            Classification::Finite(parts) => {
                parts.iter().try_fold(1u128, |acc, t| acc.checked_mul(t.order()?))
            }
            Classification::Infinite => None,
        }
    }
}

impl CoxeterGraph {
    /// Component-wise match against the list of connected finite types.
    pub fn classify_finite(&self, set: GenSet) -> Classification {
        let mut parts = Vec::new();
        for comp in self.components(set) {
            match self.classify_component(comp) {
                Some(t) => parts.push(t),
                None => return Classification::Infinite,
            }
        }
        parts.sort();
        Classification::Finite(parts)
    }

    /// Type of a connected subgraph, or `None` if its group is infinite.
    pub fn classify_component(&self, comp: GenSet) -> Option<FiniteType> {
        let verts: Vec<usize> = comp.iter().collect();
        let k = verts.len();
        let mut edges = Vec::new();
        for (i, &s) in verts.iter().enumerate() {
            for &t in &verts[i + 1..] {
                match self.label(s, t) {
                    Label::Finite(2) => {}
                    Label::Finite(m) => edges.push((s, t, m)),
                    Label::Infinity => return None,
                }
            }
        }
        match k {
            0 => return None,
            1 => return Some(FiniteType::A(1)),
            2 => {
                let (_, _, m) = edges[0];
                return Some(match m {
                    3 => FiniteType::A(2),
                    4 => FiniteType::B(2),
                    m => FiniteType::I2(m),
                });
            }
            _ => {}
        }
        // Connected with k - 1 edges means a tree.
        if edges.len() != k - 1 {
            return None;
        }
        let heavy: Vec<_> = edges.iter().filter(|e| e.2 > 3).collect();
        if heavy.len() > 1 || heavy.iter().any(|e| e.2 > 5) {
            return None;
        }
        let degree = |v: usize| edges.iter().filter(|e| e.0 == v || e.1 == v).count();
        let branch: Vec<usize> = verts.iter().copied().filter(|&v| degree(v) >= 3).collect();
        if let Some(&&(a, b, m)) = heavy.first() {
            if !branch.is_empty() {
                return None;
            }
            let at_end = degree(a) == 1 || degree(b) == 1;
            return match (m, k, at_end) {
                (4, _, true) => Some(FiniteType::B(k)),
                (4, 4, false) => Some(FiniteType::F4),
                (5, 3 | 4, true) => Some(FiniteType::H(k)),
                _ => None,
            };
        }
        match branch.as_slice() {
            [] => Some(FiniteType::A(k)),
            [c] if degree(*c) == 3 => {
                let mut arms: Vec<usize> = edges
                    .iter()
                    .filter_map(|e| {
                        if e.0 == *c {
                            Some(e.1)
                        } else if e.1 == *c {
                            Some(e.0)
                        } else {
                            None
                        }
                    })
                    .map(|start| arm_length(&edges, *c, start))
                    .collect();
                arms.sort();
                match arms.as_slice() {
                    [1, 1, _] => Some(FiniteType::D(k)),
                    [1, 2, 2] => Some(FiniteType::E(6)),
                    [1, 2, 3] => Some(FiniteType::E(7)),
                    [1, 2, 4] => Some(FiniteType::E(8)),
                    _ => None,
                }
            }
            _ => None,
        }
    }
}

/// Number of vertices on the path leaving `center` through `start`.
fn arm_length(edges: &[(usize, usize, u32)], center: usize, start: usize) -> usize {
    let (mut prev, mut cur, mut len) = (center, start, 1);
    loop {
        let next = edges.iter().find_map(|e| {
            if e.0 == cur && e.1 != prev {
                Some(e.1)
            } else if e.1 == cur && e.0 != prev {
                Some(e.0)
            } else {
                None
            }
        });
        match next {
            Some(n) => {
                prev = cur;
                cur = n;
                len += 1;
            }
            None => return len,
        }
    }
}
