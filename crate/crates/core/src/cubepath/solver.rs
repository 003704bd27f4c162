use std::sync::Arc;

use super::{normalize, CubePrepath, OracleRegistry};
use crate::artin_words::{ArtinWord, WordOracle};
use crate::error::{Error, Result};
use crate::genset::GenSet;

/// The prepath of `ω = σ_{s_1}^{ε_1} ⋯ σ_{s_k}^{ε_k}` from `x(A_∅)` to
/// `x(αA_∅)`: two cubes `C(·A_∅, ·A_{s_i})` per letter.
pub fn word_to_prepath(w: &ArtinWord) -> CubePrepath {
    let mut p = CubePrepath::point(ArtinWord::empty(), GenSet::EMPTY);
    for (i, &l) in w.letters().iter().enumerate() {
        let s = GenSet::singleton(l.gen);
        if i > 0 {
            p.nus.push(ArtinWord::empty());
        }
        p.nus.push(ArtinWord::new(vec![l]));
        p.rs.extend([GenSet::EMPTY, GenSet::EMPTY]);
        p.ts.extend([s, s]);
    }
    p
}

/// Decides whether `ω` represents the identity.
pub fn is_trivial(reg: &OracleRegistry, w: &ArtinWord) -> Result<bool> {
    w.check(reg.graph())?;
    let (normal, _) = normalize(reg, &word_to_prepath(w))?;
    Ok(normal.is_empty())
}

/// Decides `u = v` in the Artin group.
pub fn artin_equal(reg: &OracleRegistry, u: &ArtinWord, v: &ArtinWord) -> Result<bool> {
    is_trivial(reg, &u.concat(&v.inverse()))
}

/// The whole solver packaged as a word oracle for `S`.
pub struct SolverOracle {
    reg: Arc<OracleRegistry>,
}

impl SolverOracle {
    pub fn new(reg: Arc<OracleRegistry>) -> Self {
        SolverOracle { reg }
    }

    pub fn registry(&self) -> &OracleRegistry {
        &self.reg
    }
}

impl WordOracle for SolverOracle {
    fn subset(&self) -> GenSet {
        self.reg.graph().all()
    }

    fn equal(&self, u: &ArtinWord, v: &ArtinWord) -> Result<bool> {
        let g = self.reg.graph();
        let support = u.support().union(v.support());
        if !support.is_subset(g.all()) {
            return Err(Error::SupportViolation {
                support: format!("{support:?}"),
                allowed: g.format_subset(g.all()),
            });
        }
        artin_equal(&self.reg, u, v)
    }
}
