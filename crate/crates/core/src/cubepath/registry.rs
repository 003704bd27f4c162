use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::artin_words::WordOracle;
use crate::coxeter::CoxeterGraph;
use crate::error::{Error, Result};
use crate::garside::{component_oracle, product_oracle};
use crate::genset::GenSet;

/// Hands out word oracles for free-of-infinity subsets of one graph.
///
/// Component oracles are built once and shared by every subset containing
/// that component.
pub struct OracleRegistry {
    graph: Arc<CoxeterGraph>,
    custom: Vec<Arc<dyn WordOracle>>,
    components: Mutex<HashMap<GenSet, Arc<dyn WordOracle>>>,
    subsets: Mutex<HashMap<GenSet, Arc<dyn WordOracle>>>,
}

impl OracleRegistry {
    pub fn new(graph: Arc<CoxeterGraph>) -> Self {
        OracleRegistry {
            graph,
            custom: Vec::new(),
            components: Mutex::new(HashMap::new()),
            subsets: Mutex::new(HashMap::new()),
        }
    }

    /// Adds an oracle used for components that are neither spherical nor of
    /// type `Ã_k`.
    pub fn with_custom(mut self, oracle: Arc<dyn WordOracle>) -> Self {
        self.custom.push(oracle);
        self
    }

    pub fn graph(&self) -> &Arc<CoxeterGraph> {
        &self.graph
    }

    fn component(&self, comp: GenSet) -> Result<Arc<dyn WordOracle>> {
        if let Some(o) = self.components.lock().unwrap().get(&comp) {
            return Ok(o.clone());
        }
        let o = component_oracle(&self.graph, comp, &self.custom)?;
        self.components.lock().unwrap().insert(comp, o.clone());
        Ok(o)
    }

    /// Oracle whose subset is exactly `set`.
    pub fn get(&self, set: GenSet) -> Result<Arc<dyn WordOracle>> {
        if let Some(o) = self.subsets.lock().unwrap().get(&set) {
            return Ok(o.clone());
        }
        self.graph.check_subset(set)?;
        if !self.graph.is_free_of_infinity(set) {
            return Err(Error::NotFreeOfInfinity(self.graph.format_subset(set)));
        }
        let parts = self
            .graph
            .components(set)
            .into_iter()
            .map(|c| Ok((c, self.component(c)?)))
            .collect::<Result<Vec<_>>>()?;
        let o: Arc<dyn WordOracle> = Arc::new(product_oracle(&self.graph, parts)?);
        self.subsets.lock().unwrap().insert(set, o.clone());
        Ok(o)
    }

    /// Builds the oracle of every component of every maximal free-of-infinity
    /// subset, surfacing any missing oracle up front.
    pub fn check_all(&self) -> Result<()> {
        for set in self.graph.maximal_free_of_infinity() {
            self.get(set)?;
        }
        Ok(())
    }
}
