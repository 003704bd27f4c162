//! Cube prepaths in the coset complex of free-of-infinity parabolics, the
//! cube intersection and span predicates, normalization to the normal cube
//! path, and the resulting word problem solver.

mod normalize;
mod registry;
mod solver;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use normalize::{is_normal, normalize};
pub use registry::OracleRegistry;
pub use solver::{artin_equal, is_trivial, word_to_prepath, SolverOracle};

use crate::artin_words::{iota_intersection, kappa, ArtinWord};
use crate::coxeter::CoxeterGraph;
use crate::error::{Error, Result};
use crate::genset::GenSet;

/// `C(αA_R, αA_T)` with `α` represented by `base`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cube {
    pub base: ArtinWord,
    pub r: GenSet,
    pub t: GenSet,
}

impl Cube {
    pub fn new(base: ArtinWord, r: GenSet, t: GenSet) -> Self {
        Cube { base, r, t }
    }

    /// The vertex `x(αA_T) = C(αA_T, αA_T)`.
    pub fn vertex(base: ArtinWord, t: GenSet) -> Self {
        Cube { base, r: t, t }
    }

    pub fn dim(&self) -> usize {
        self.t.len() - self.r.len()
    }
}

/// `Span(C_1, C_2)` together with the word `μ` moving the base of `C_1`
/// to a common point of `α_1A_{R_1}` and `α_2A_{R_2}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Span {
    pub mu: ArtinWord,
    pub cube: Cube,
}

fn check_link(g: &CoxeterGraph, nu: &ArtinWord, x: GenSet) -> Result<()> {
    if !g.is_free_of_infinity(x) {
        return Err(Error::PrepathLinkViolation(format!(
            "link subset {} is not free of infinity",
            g.format_subset(x)
        )));
    }
    if !nu.support().is_subset(x) {
        return Err(Error::PrepathLinkViolation(format!(
            "link word support {} is not inside {}",
            g.format_subset(nu.support()),
            g.format_subset(x)
        )));
    }
    Ok(())
}

/// Decides `C_1 ∩ C_2 ≠ ∅` where `base(C_2) = base(C_1)·ν` and `ν` is
/// supported in `x`. On success returns the `R` with
/// `C_1 ∩ C_2 = C(α_1A_R, α_1A_{T_1∩T_2})`.
pub fn cubes_intersect(
    reg: &OracleRegistry,
    c1: &Cube,
    c2: &Cube,
    nu: &ArtinWord,
    x: GenSet,
) -> Result<Option<GenSet>> {
    let g = reg.graph();
    check_link(g, nu, x)?;
    let top = c1.t.intersection(c2.t);
    let floor = c1.r.union(c2.r);
    if !floor.is_subset(top) {
        return Ok(None);
    }
    let oracle = reg.get(x)?;
    if kappa(g, nu, top, x, &*oracle)?.is_none() {
        return Ok(None);
    }
    let mut r = top;
    for s in top.difference(floor).iter() {
        if kappa(g, nu, r.without(s), x, &*oracle)?.is_some() {
            r.remove(s);
        }
    }
    Ok(Some(r))
}

/// Decides whether `C_1` and `C_2` span a cube, under the same linking
/// hypothesis as [`cubes_intersect`].
pub fn cubes_span(
    reg: &OracleRegistry,
    c1: &Cube,
    c2: &Cube,
    nu: &ArtinWord,
    x: GenSet,
) -> Result<Option<Span>> {
    let g = reg.graph();
    check_link(g, nu, x)?;
    let top = c1.t.union(c2.t);
    if !g.is_free_of_infinity(top) {
        return Ok(None);
    }
    let oracle = reg.get(x)?;
    let Some(mu) = iota_intersection(g, nu, c2.r, c1.r, x, &*oracle)? else {
        return Ok(None);
    };
    let cube = Cube::new(c1.base.concat(&mu), c1.r.intersection(c2.r), top);
    Ok(Some(Span { mu, cube }))
}

/// `((ω_1, ν_2, .., ν_n), (R_i), (T_i), (X, Y))`; length 0 when `rs` is empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubePrepath {
    pub omega1: ArtinWord,
    /// `ν_2 .. ν_n`.
    pub nus: Vec<ArtinWord>,
    pub rs: Vec<GenSet>,
    pub ts: Vec<GenSet>,
    pub x: GenSet,
    pub y: GenSet,
}

impl CubePrepath {
    /// The length-0 prepath `((ω), (), (), (X, X))`.
    pub fn point(omega: ArtinWord, x: GenSet) -> Self {
        CubePrepath { omega1: omega, nus: Vec::new(), rs: Vec::new(), ts: Vec::new(), x, y: x }
    }

    pub fn len(&self) -> usize {
        self.rs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rs.is_empty()
    }

    /// `ν_i` for `2 ≤ i ≤ n`, 1-based like the cube indices.
    pub fn nu(&self, i: usize) -> &ArtinWord {
        &self.nus[i - 2]
    }

    pub fn dim(&self, i: usize) -> usize {
        self.ts[i - 1].len() - self.rs[i - 1].len()
    }

    /// Word representing `α_i = ω_1 ν_2 ⋯ ν_i`.
    pub fn alpha(&self, i: usize) -> ArtinWord {
        let mut w = self.omega1.clone();
        for nu in &self.nus[..i.saturating_sub(1)] {
            w.extend(nu);
        }
        w
    }

    /// Cube `C_i`, 1-based.
    pub fn cube(&self, i: usize) -> Cube {
        Cube::new(self.alpha(i), self.rs[i - 1], self.ts[i - 1])
    }

    /// Subset and cube sequence, the data compared by the uniqueness law.
    pub fn shape(&self) -> Vec<(GenSet, GenSet)> {
        self.rs.iter().copied().zip(self.ts.iter().copied()).collect()
    }

    /// Checks the defining conditions of a cube prepath.
    pub fn validate(&self, g: &CoxeterGraph) -> Result<()> {
        let n = self.len();
        let bad = |m: String| Err(Error::PrepathLinkViolation(m));
        if self.ts.len() != n || self.nus.len() != n.saturating_sub(1) {
            return bad("list lengths disagree".into());
        }
        let mut all = vec![self.x, self.y];
        all.extend(&self.rs);
        all.extend(&self.ts);
        for s in all {
            g.check_subset(s)?;
            if !g.is_free_of_infinity(s) {
                return Err(Error::NotFreeOfInfinity(g.format_subset(s)));
            }
        }
        if n == 0 {
            return if self.x == self.y { Ok(()) } else { bad("length 0 needs X = Y".into()) };
        }
        for i in 0..n {
            if !self.rs[i].is_subset(self.ts[i]) {
                return bad(format!("R_{} is not inside T_{}", i + 1, i + 1));
            }
        }
        for i in 1..n {
            let meet = self.ts[i - 1].intersection(self.ts[i]);
            if !self.rs[i - 1].union(self.rs[i]).is_subset(meet) {
                return bad(format!("R_{} ∪ R_{} is not inside T_{} ∩ T_{}", i, i + 1, i, i + 1));
            }
            if !self.nus[i - 1].support().is_subset(meet) {
                return bad(format!("ν_{} is not supported in T_{} ∩ T_{}", i + 1, i, i + 1));
            }
        }
        if !(self.rs[0].is_subset(self.x) && self.x.is_subset(self.ts[0])) {
            return bad("R_1 ⊆ X ⊆ T_1 fails".into());
        }
        if !(self.rs[n - 1].is_subset(self.y) && self.y.is_subset(self.ts[n - 1])) {
            return bad("R_n ⊆ Y ⊆ T_n fails".into());
        }
        Ok(())
    }

    pub fn to_json(&self, g: &CoxeterGraph) -> String {
        let set = |s: &GenSet| s.iter().map(|i| g.name(i).to_string()).collect::<Vec<_>>();
        let file = PrepathFile {
            omega1: self.omega1.display(g).to_string(),
            nus: self.nus.iter().map(|w| w.display(g).to_string()).collect(),
            rs: self.rs.iter().map(set).collect(),
            ts: self.ts.iter().map(set).collect(),
            x: set(&self.x),
            y: set(&self.y),
        };
        serde_json::to_string_pretty(&file).expect("prepath serializes")
    }

    pub fn from_json(g: &CoxeterGraph, text: &str) -> Result<Self> {
        let file: PrepathFile =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("prepath JSON: {e}")))?;
        let set = |names: &Vec<String>| -> Result<GenSet> {
            names.iter().map(|n| g.generator(n)).collect()
        };
        let p = CubePrepath {
            omega1: ArtinWord::parse(g, &file.omega1)?,
            nus: file.nus.iter().map(|w| ArtinWord::parse(g, w)).collect::<Result<_>>()?,
            rs: file.rs.iter().map(set).collect::<Result<_>>()?,
            ts: file.ts.iter().map(set).collect::<Result<_>>()?,
            x: set(&file.x)?,
            y: set(&file.y)?,
        };
        p.validate(g)?;
        Ok(p)
    }

    pub fn display<'a>(&'a self, g: &'a CoxeterGraph) -> impl fmt::Display + 'a {
        PrepathDisplay { p: self, g }
    }
}

#[derive(Serialize, Deserialize)]
struct PrepathFile {
    omega1: String,
    nus: Vec<String>,
    rs: Vec<Vec<String>>,
    ts: Vec<Vec<String>>,
    x: Vec<String>,
    y: Vec<String>,
}

struct PrepathDisplay<'a> {
    p: &'a CubePrepath,
    g: &'a CoxeterGraph,
}

impl fmt::Display for PrepathDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (p, g) = (self.p, self.g);
        writeln!(f, "length {}", p.len())?;
        writeln!(f, "X = {}, Y = {}", g.format_subset(p.x), g.format_subset(p.y))?;
        for i in 1..=p.len() {
            let link = if i == 1 {
                format!("omega1 = [{}]", p.omega1.display(g))
            } else {
                format!("nu{i} = [{}]", p.nu(i).display(g))
            };
            writeln!(
                f,
                "C{i}: R = {}, T = {}, {link}",
                g.format_subset(p.rs[i - 1]),
                g.format_subset(p.ts[i - 1])
            )?;
        }
        if p.is_empty() {
            writeln!(f, "omega = [{}]", p.omega1.display(g))?;
        }
        Ok(())
    }
}
