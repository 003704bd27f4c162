//! Multiplication tables of finite parabolic subgroups.

use std::collections::HashMap;

use super::graph::CoxeterGraph;
use super::walker::{Engine, Walker};
use crate::error::{Error, Result};
use crate::genset::GenSet;

/// All elements of a finite `W_X`, indexed in BFS order (so by length).
///
/// Generators are local: letter `i` stands for the `i`-th member of `X`.
#[derive(Clone, Debug)]
pub(crate) struct FiniteTable {
    pub gens: Vec<usize>,
    pub words: Vec<Vec<usize>>,
    pub len: Vec<u32>,
    right: Vec<u32>,
    left: Vec<u32>,
    pub longest: u32,
}

impl FiniteTable {
    pub fn build(graph: &CoxeterGraph, set: GenSet, cap: usize) -> Result<Self> {
        let class = graph.classify_finite(set);
        if !class.is_finite() {
            return Err(Error::NotFinite(graph.format_subset(set)));
        }
        if class.order().is_none_or(|o| o > cap as u128) {
            return Err(Error::CapExceeded(cap));
        }
        let (local, gens) = graph.restrict(set);
        let k = gens.len();
        let mut ids: HashMap<Vec<usize>, u32> = HashMap::new();
        let mut words: Vec<Vec<usize>> = vec![Vec::new()];
        ids.insert(Vec::new(), 0);
        let mut right = Vec::new();
        let mut left = Vec::new();
        let mut next = 0;
        while next < words.len() {
            let base = Walker::from_word(&local, Engine::Auto, &words[next]);
            for s in 0..k {
                for side in [0, 1] {
                    let mut w = base.clone();
                    if side == 0 {
                        w.mul_right(s);
                    } else {
                        w.mul_left(s);
                    }
                    let key = w.canonical_word();
                    let id = match ids.get(&key) {
                        Some(&id) => id,
                        None => {
                            if words.len() >= cap {
                                return Err(Error::CapExceeded(cap));
                            }
                            let id = words.len() as u32;
                            ids.insert(key.clone(), id);
                            words.push(key);
                            id
                        }
                    };
                    if side == 0 {
                        right.push(id);
                    } else {
                        left.push(id);
                    }
                }
            }
            next += 1;
        }
        let len: Vec<u32> = words.iter().map(|w| w.len() as u32).collect();
        let longest = (0..words.len() as u32).max_by_key(|&i| len[i as usize]).unwrap_or(0);
        Ok(FiniteTable { gens, words, len, right, left, longest })
    }

    pub fn size(&self) -> usize {
        self.words.len()
    }

    pub fn rank(&self) -> usize {
        self.gens.len()
    }

    /// `w·s`.
    pub fn mul_right(&self, w: u32, s: usize) -> u32 {
        self.right[w as usize * self.rank() + s]
    }

    /// `s·w`.
    pub fn mul_left(&self, s: usize, w: u32) -> u32 {
        self.left[w as usize * self.rank() + s]
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.words[b as usize].iter().fold(a, |acc, &s| self.mul_right(acc, s))
    }

    pub fn global_word(&self, w: u32) -> Vec<usize> {
        self.words[w as usize].iter().map(|&s| self.gens[s]).collect()
    }
}
