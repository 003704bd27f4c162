//! Normal cube paths.
//!
//! `normalize` works by induction on `(n, dim C_n)`: normalize the prefix up
//! to a vertex `z` of `C_{n-1} ∩ C_n`, replace `C_n` by `Span(z, y)`, then
//! move `z` to the vertex of `C_n` that spans with `x_{n-2}` and minimizes
//! `dim Span(z', y)`. Every recursive call strictly lowers the measure.

use super::{cubes_intersect, cubes_span, Cube, CubePrepath, OracleRegistry};
use crate::artin_words::{kappa, ArtinWord};
use crate::error::{Error, Result};
use crate::genset::GenSet;

fn breach(what: &str) -> Error {
    Error::InvariantBreach(what.to_string())
}

/// `Z_i = T_i ∩ T_{i+1}` for `1 ≤ i < n`, with `Z_0 = X` and `Z_n = Y`.
fn vertex_sets(p: &CubePrepath) -> Vec<GenSet> {
    let n = p.len();
    let mut z = vec![p.x];
    for i in 1..n {
        z.push(p.ts[i - 1].intersection(p.ts[i]));
    }
    z.push(p.y);
    z
}

fn kappa_into(
    reg: &OracleRegistry,
    w: &ArtinWord,
    t: GenSet,
    support: GenSet,
    what: &str,
) -> Result<ArtinWord> {
    let g = reg.graph();
    let oracle = reg.get(support)?;
    Ok(kappa(g, w, t, support, &*oracle)?.ok_or_else(|| breach(what))?.free_reduced())
}

/// Vertices `x(α_{i+1}A_U)` of `C_{i+1}` that span a cube with `x_{i-1}`,
/// where `ν` links `C_i` to `C_{i+1}` inside `link`.
fn spanning_vertices(
    reg: &OracleRegistry,
    prev: GenSet,
    r: GenSet,
    t: GenSet,
    nu: &ArtinWord,
    link: GenSet,
) -> Result<Vec<(GenSet, ArtinWord)>> {
    let from = Cube::vertex(ArtinWord::empty(), prev);
    let mut out = Vec::new();
    for u in r.intervals_to(t) {
        let to = Cube::vertex(nu.clone(), u);
        if let Some(span) = cubes_span(reg, &from, &to, nu, link)? {
            out.push((u, span.mu));
        }
    }
    Ok(out)
}

/// Whether `p` is the normal cube path from `x` to `y`.
pub fn is_normal(reg: &OracleRegistry, p: &CubePrepath) -> Result<bool> {
    p.validate(reg.graph())?;
    is_normal_unchecked(reg, p)
}

fn is_normal_unchecked(reg: &OracleRegistry, p: &CubePrepath) -> Result<bool> {
    let n = p.len();
    let z = vertex_sets(p);
    for i in 1..=n {
        let (r, t) = (p.rs[i - 1], p.ts[i - 1]);
        if t.len() == r.len() || r != z[i - 1].intersection(z[i]) || t != z[i - 1].union(z[i]) {
            return Ok(false);
        }
    }
    for i in (1..n).rev() {
        let link = p.ts[i - 1].intersection(p.ts[i]);
        let nu = p.nu(i + 1);
        let (c1, c2) = (Cube::new(ArtinWord::empty(), p.rs[i - 1], p.ts[i - 1]),
                        Cube::new(nu.clone(), p.rs[i], p.ts[i]));
        if cubes_intersect(reg, &c1, &c2, nu, link)? != Some(link) {
            return Ok(false);
        }
        let spanning = spanning_vertices(reg, z[i - 1], p.rs[i], p.ts[i], nu, link)?;
        if spanning.len() != 1 || spanning[0].0 != z[i] {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Normalizes a cube prepath from `x` to `y`.
///
/// Returns the normal cube path `P'` with the same endpoints together with
/// a word over `Y` representing `α'^{-1}α`, where `α` and `α'` are the
/// last base points of `p` and `P'` (`ω` for length 0).
pub fn normalize(reg: &OracleRegistry, p: &CubePrepath) -> Result<(CubePrepath, ArtinWord)> {
    p.validate(reg.graph())?;
    run(reg, p.clone(), None, (usize::MAX, usize::MAX))
}

fn measure(p: &CubePrepath) -> (usize, usize) {
    match p.len() {
        0 => (0, 0),
        n => (n, p.dim(n)),
    }
}

fn run(
    reg: &OracleRegistry,
    p: CubePrepath,
    hint: Option<GenSet>,
    bound: (usize, usize),
) -> Result<(CubePrepath, ArtinWord)> {
    let here = measure(&p);
    if here >= bound {
        return Err(breach("normalization measure did not decrease"));
    }
    let n = p.len();
    if n == 0 {
        return Ok((p, ArtinWord::empty()));
    }
    if n == 1 {
        let q = if p.x == p.y {
            CubePrepath::point(p.omega1, p.x)
        } else {
            CubePrepath { rs: vec![p.x.intersection(p.y)], ts: vec![p.x.union(p.y)], ..p }
        };
        return Ok((q, ArtinWord::empty()));
    }
    if is_normal_unchecked(reg, &p)? {
        return Ok((p, ArtinWord::empty()));
    }

    if p.dim(n) == 0 {
        let nu_n = p.nu(n).clone();
        let prefix = truncate(&p, p.y);
        let (q, mu) = run(reg, prefix, None, here)?;
        return Ok((q, mu.concat(&nu_n)));
    }

    // Step 1: normalize the prefix up to z, then reattach C_n.
    let (r_n, t_n) = (p.rs[n - 1], p.ts[n - 1]);
    let link = p.ts[n - 2].intersection(t_n);
    let z = hint.unwrap_or(link);
    if !p.rs[n - 2].union(r_n).is_subset(z) || !z.is_subset(link) {
        return Err(breach("vertex choice outside C_{n-1} ∩ C_n"));
    }
    let nu_n = p.nu(n).clone();
    let (q, mu2) = run(reg, truncate(&p, z), None, here)?;
    let carried = mu2.concat(&nu_n);
    let p3 = if q.is_empty() {
        CubePrepath {
            omega1: q.omega1.concat(&carried),
            nus: Vec::new(),
            rs: vec![r_n],
            ts: vec![t_n],
            x: p.x,
            y: p.y,
        }
    } else {
        let t_last = *q.ts.last().unwrap();
        let nu = kappa_into(reg, &carried, t_last, link, "reattached link left A_{T_{m-1}}")?;
        let mut q = q;
        q.nus.push(nu);
        q.rs.push(r_n);
        q.ts.push(t_n);
        q.y = p.y;
        q
    };
    if p3.len() < n {
        return run(reg, p3, None, here);
    }
    let mut p = p3;

    // Step 2: C_n becomes Span(z, y).
    let y = p.y;
    let t_prev = p.ts[n - 2];
    let link = t_prev.intersection(p.ts[n - 1]);
    let nu = kappa_into(reg, p.nu(n), t_prev.intersection(z.union(y)), link, "link left A_Z")?;
    let old_dim = p.dim(n);
    p.nus[n - 2] = nu;
    p.rs[n - 1] = z.intersection(y);
    p.ts[n - 1] = z.union(y);
    if p.dim(n) < old_dim {
        return run(reg, p, Some(z), here);
    }

    // Step 3: the best vertex of C_n spanning with x_{n-2}.
    let link = t_prev.intersection(p.ts[n - 1]);
    let z_prev = if n == 2 { p.x } else { p.ts[n - 3].intersection(t_prev) };
    let candidates = spanning_vertices(reg, z_prev, p.rs[n - 1], p.ts[n - 1], p.nu(n), link)?;
    let (z_new, mu1) = candidates
        .into_iter()
        .min_by_key(|(u, _)| (u.union(y).len() - u.intersection(y).len(), u.sorted_key()))
        .ok_or_else(|| breach("z does not span with x_{n-2}"))?;
    if z_new == z {
        // Step 4: fixpoint.
        return Ok((p, ArtinWord::empty()));
    }
    let t_prev_new = z_prev.union(z_new);
    if n == 2 {
        p.omega1 = p.omega1.concat(&mu1);
    } else {
        let w = p.nu(n - 1).concat(&mu1);
        let t_pp = p.ts[n - 3];
        let support = t_pp.intersection(t_prev);
        p.nus[n - 3] = kappa_into(reg, &w, t_pp.intersection(t_prev_new), support, "moved link")?;
    }
    p.rs[n - 2] = z_prev.intersection(z_new);
    p.ts[n - 2] = t_prev_new;
    p.rs[n - 1] = z_new.intersection(y);
    p.ts[n - 1] = z_new.union(y);
    let w = mu1.inverse().concat(p.nu(n));
    let target = t_prev_new.intersection(p.ts[n - 1]);
    p.nus[n - 2] = kappa_into(reg, &w, target, link, "moved last link")?;
    run(reg, p, Some(z_new), here)
}

/// The first `n-1` cubes of `p`, ending at `x(α_{n-1}A_y)`.
fn truncate(p: &CubePrepath, y: GenSet) -> CubePrepath {
    let n = p.len();
    CubePrepath {
        omega1: p.omega1.clone(),
        nus: p.nus[..n - 2].to_vec(),
        rs: p.rs[..n - 1].to_vec(),
        ts: p.ts[..n - 1].to_vec(),
        x: p.x,
        y,
    }
}
