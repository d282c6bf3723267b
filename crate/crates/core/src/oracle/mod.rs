//! Brute-force ground truth.
//!
//! Two independent engines: exhaustive enumeration of permutation
//! factorizations, and exhaustive enumeration of face-oriented embeddings of
//! small Eulerian digraphs by alternating rotation systems and face tracing.
//! Both refuse to start when the search space exceeds the configured budget.
//!
//! Work is split over the outermost enumeration coordinate with rayon and the
//! partial histograms are merged by exact addition, so results do not depend
//! on the worker count.

mod digraph;
mod embeddings;
mod factorizations;

use std::collections::BTreeMap;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::genus::GenusPolynomial;
use crate::{Error, Result};

pub use digraph::{DigraphSpec, EulerianDigraph};
pub use embeddings::{enumerate_embeddings, face_trace, total_embeddings, FaceTrace, RotationSystem};
pub use factorizations::{
    count_factorizations_exhaustive, enumerate_bieulerian_4tuples, enumerate_factorizations, factorization_space,
};

pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleConfig {
    /// Largest search space, in visited objects, the oracle accepts.
    pub budget: BigUint,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            budget: BigUint::from(DEFAULT_BUDGET),
        }
    }
}

pub(crate) fn check_budget(space: &BigUint, config: &OracleConfig) -> Result<()> {
    if space > &config.budget {
        return Err(Error::BudgetExceeded {
            space: space.clone(),
            budget: config.budget.clone(),
        });
    }
    Ok(())
}

/// Exact map `genus → count`; only positive counts are stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenusHistogram {
    counts: BTreeMap<usize, u64>,
}

impl GenusHistogram {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_counts(counts: BTreeMap<usize, u64>) -> Self {
        GenusHistogram {
            counts: counts.into_iter().filter(|&(_, c)| c > 0).collect(),
        }
    }

    pub fn counts(&self) -> &BTreeMap<usize, u64> {
        &self.counts
    }

    pub fn get(&self, genus: usize) -> u64 {
        self.counts.get(&genus).copied().unwrap_or(0)
    }

    pub fn add(&mut self, genus: usize, count: u64) {
        if count > 0 {
            *self.counts.entry(genus).or_insert(0) += count;
        }
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn merge(&mut self, other: &GenusHistogram) {
        for (&g, &c) in &other.counts {
            self.add(g, c);
        }
    }

    pub(crate) fn merge_all(parts: impl IntoIterator<Item = BTreeMap<usize, u64>>) -> Self {
        let mut out = GenusHistogram::new();
        for part in parts {
            for (g, c) in part {
                out.add(g, c);
            }
        }
        out
    }

    /// Dense coefficient vector indexed by genus.
    pub fn to_coeffs(&self) -> Vec<BigUint> {
        let top = self.counts.keys().next_back().map_or(0, |&g| g + 1);
        (0..top).map(|g| BigUint::from(self.get(g))).collect()
    }

    /// Coefficientwise equality with a genus polynomial.
    pub fn matches(&self, poly: &GenusPolynomial) -> bool {
        self.to_coeffs() == poly.coeffs()
    }
}
