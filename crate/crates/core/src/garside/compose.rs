//! Oracles for arbitrary free-of-infinity subsets, assembled from their
//! connected components.

use std::sync::Arc;

use super::affine::{cycle_order, AffineOracle};
use super::garside_oracle;
use crate::artin_words::{ArtinWord, WordOracle};
use crate::coxeter::{CoxeterGraph, Label};
use crate::error::{Error, Result};
use crate::genset::GenSet;

/// Direct product of oracles on pairwise commuting, disjoint subsets.
pub struct ProductOracle {
    set: GenSet,
    parts: Vec<(GenSet, Arc<dyn WordOracle>)>,
}

impl std::fmt::Debug for ProductOracle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<GenSet> = self.parts.iter().map(|p| p.0).collect();
        f.debug_struct("ProductOracle").field("parts", &parts).finish()
    }
}

/// Combines component oracles. Each part is consulted on the letters of
/// its own subset.
pub fn product_oracle(
    graph: &CoxeterGraph,
    parts: Vec<(GenSet, Arc<dyn WordOracle>)>,
) -> Result<ProductOracle> {
    let mut set = GenSet::EMPTY;
    for (i, (a, oa)) in parts.iter().enumerate() {
        if !a.is_subset(oa.subset()) {
            return Err(Error::OracleSubsetMismatch {
                oracle: graph.format_subset(oa.subset()),
                required: graph.format_subset(*a),
            });
        }
        for (b, _) in &parts[i + 1..] {
            let clash = !a.intersection(*b).is_empty()
                || a.iter().any(|s| b.iter().any(|t| graph.label(s, t) != Label::Finite(2)));
            if clash {
                return Err(Error::NotCommutingComponents(
                    graph.format_subset(*a),
                    graph.format_subset(*b),
                ));
            }
        }
        set = set.union(*a);
    }
    Ok(ProductOracle { set, parts })
}

impl WordOracle for ProductOracle {
    fn subset(&self) -> GenSet {
        self.set
    }

    fn equal(&self, u: &ArtinWord, v: &ArtinWord) -> Result<bool> {
        let support = u.support().union(v.support());
        if !support.is_subset(self.set) {
            return Err(Error::SupportViolation {
                support: format!("{support:?}"),
                allowed: format!("{:?}", self.set),
            });
        }
        for (part, oracle) in &self.parts {
            if part.intersection(support).is_empty() {
                continue;
            }
            if !oracle.equal(&u.project(*part), &v.project(*part))? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Short description of a connected component's type.
fn describe(graph: &CoxeterGraph, comp: GenSet) -> String {
    if let Some(t) = graph.classify_component(comp) {
        return format!("spherical {t}");
    }
    if let Some(c) = cycle_order(graph, comp) {
        return format!("affine A~_{}", c.len() - 1);
    }
    if let Some(name) = affine_e(graph, comp) {
        return name;
    }
    format!("infinite type on {} generators", comp.len())
}

/// Recognizes the simply laced affine trees `Ẽ_6, Ẽ_7, Ẽ_8` by arm lengths.
fn affine_e(graph: &CoxeterGraph, comp: GenSet) -> Option<String> {
    let verts: Vec<usize> = comp.iter().collect();
    let nbrs = |v: usize| -> Vec<usize> {
        verts.iter().copied().filter(|&u| u != v && graph.label(u, v) != Label::Finite(2)).collect()
    };
    let mut edges = 0;
    for &v in &verts {
        let nb = nbrs(v);
        if nb.iter().any(|&u| graph.label(u, v) != Label::Finite(3)) {
            return None;
        }
        edges += nb.len();
    }
    if edges / 2 != verts.len() - 1 {
        return None;
    }
    let center = *verts.iter().find(|&&v| nbrs(v).len() == 3)?;
    let mut arms: Vec<usize> = nbrs(center)
        .into_iter()
        .map(|start| {
            let (mut prev, mut cur, mut len) = (center, start, 1);
            while let Some(next) = nbrs(cur).into_iter().find(|&u| u != prev) {
                if nbrs(cur).len() > 2 {
                    return usize::MAX;
                }
                prev = cur;
                cur = next;
                len += 1;
            }
            len
        })
        .collect();
    arms.sort();
    match arms.as_slice() {
        [2, 2, 2] => Some("affine E~_6".into()),
        [1, 3, 3] => Some("affine E~_7".into()),
        [1, 2, 5] => Some("affine E~_8".into()),
        _ => None,
    }
}

/// Oracle for one connected free-of-infinity component: Garside if
/// spherical, the type-`B` embedding for a 3-labelled cycle, otherwise the
/// first user-supplied oracle covering it.
pub fn component_oracle(
    graph: &Arc<CoxeterGraph>,
    comp: GenSet,
    custom: &[Arc<dyn WordOracle>],
) -> Result<Arc<dyn WordOracle>> {
    if graph.classify_component(comp).is_some() {
        return Ok(Arc::new(garside_oracle(graph, comp)?));
    }
    if cycle_order(graph, comp).is_some() {
        return Ok(Arc::new(AffineOracle::for_component(graph, comp)?));
    }
    if let Some(o) = custom.iter().find(|o| comp.is_subset(o.subset())) {
        return Ok(o.clone());
    }
    Err(Error::NoOracleAvailable {
        component: graph.format_subset(comp),
        kind: describe(graph, comp),
    })
}

/// Oracle for a free-of-infinity subset `X`.
pub fn oracle_for(
    graph: &Arc<CoxeterGraph>,
    set: GenSet,
    custom: &[Arc<dyn WordOracle>],
) -> Result<ProductOracle> {
    graph.check_subset(set)?;
    if !graph.is_free_of_infinity(set) {
        return Err(Error::NotFreeOfInfinity(graph.format_subset(set)));
    }
    let parts = graph
        .components(set)
        .into_iter()
        .map(|c| Ok((c, component_oracle(graph, c, custom)?)))
        .collect::<Result<Vec<_>>>()?;
    product_oracle(graph, parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(g: &CoxeterGraph, t: &str) -> ArtinWord {
        ArtinWord::parse(g, t).unwrap()
    }

    #[test]
    fn product_examples() {
        let g = Arc::new(CoxeterGraph::from_edges(&["a", "b"], &[]).unwrap());
        let o = oracle_for(&g, g.all(), &[]).unwrap();
        assert!(o.equal(&w(&g, "a b"), &w(&g, "b a")).unwrap());
        assert!(!o.equal(&w(&g, "a"), &w(&g, "b")).unwrap());
        let trivial = oracle_for(&g, GenSet::EMPTY, &[]).unwrap();
        assert!(trivial.is_trivial(&ArtinWord::empty()).unwrap());
        assert!(trivial.is_trivial(&w(&g, "a")).is_err());
    }

    #[test]
    fn non_commuting_parts_are_rejected() {
        let g = Arc::new(CoxeterGraph::dihedral(Label::Finite(3)));
        let s: Arc<dyn WordOracle> = Arc::new(garside_oracle(&g, GenSet::singleton(0)).unwrap());
        let t: Arc<dyn WordOracle> = Arc::new(garside_oracle(&g, GenSet::singleton(1)).unwrap());
        let err = product_oracle(&g, vec![(GenSet::singleton(0), s), (GenSet::singleton(1), t)]);
        assert!(matches!(err, Err(Error::NotCommutingComponents(..))));
    }

    #[test]
    fn missing_oracle_names_the_component() {
        // Affine E~_6: center c with three arms of length two.
        let names = ["c", "x1", "x2", "y1", "y2", "z1", "z2"];
        let three = Label::Finite(3);
        let g = Arc::new(
            CoxeterGraph::from_edges(
                &names,
                &[
                    ("c", "x1", three),
                    ("x1", "x2", three),
                    ("c", "y1", three),
                    ("y1", "y2", three),
                    ("c", "z1", three),
                    ("z1", "z2", three),
                ],
            )
            .unwrap(),
        );
        match oracle_for(&g, g.all(), &[]) {
            Err(Error::NoOracleAvailable { component, kind }) => {
                assert!(component.contains("x2"));
                assert_eq!(kind, "affine E~_6");
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
