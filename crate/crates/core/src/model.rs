//! Model parameters, Boltzmann weights, and exact finite-tree energies.
//!
//! Spins live on a semi-infinite Cayley tree of order `k`: a root with `k`
//! successors per vertex. Two couplings act on it: a nearest-neighbor
//! coupling `J` on tree edges and a prolonged next-nearest-neighbor coupling
//! `Jp` on grandparent-grandchild pairs along the same branch. One-level
//! siblings are not coupled.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum ModelError {
    #[error("temperature must be strictly positive, got {0}")]
    NonPositiveTemperature(f64),
    #[error("tree order must be at least 2, got {0}")]
    OrderTooSmall(i64),
    #[error("non-finite input: {name} = {value}")]
    NonFiniteInput { name: &'static str, value: f64 },
    #[error("Boltzmann weight overflow: exp({exponent}) is not finite")]
    WeightOverflow { exponent: f64 },
    #[error("configuration covers {got} vertices but depth-{depth} ball of order {k} has {expected}")]
    IncompleteConfig {
        depth: usize,
        k: usize,
        expected: usize,
        got: usize,
    },
    #[error("invalid spin value {0}; spins are -1 or +1")]
    InvalidSpin(i8),
    #[error("tree depth must be 1 or 2, got {0}")]
    UnsupportedDepth(usize),
}

/// Coupling constants, temperature, and tree order.
///
/// `beta` is the inverse temperature `1/T` (Boltzmann constant set to 1).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModelParams {
    pub j: f64,
    pub jp: f64,
    pub t: f64,
    pub k: usize,
    pub beta: f64,
}

impl ModelParams {
    pub fn is_even_order(&self) -> bool {
        self.k % 2 == 0
    }
}

/// Construct validated model parameters with `beta = 1/T`.
pub fn make_params(j: f64, jp: f64, t: f64, k: i64) -> Result<ModelParams, ModelError> {
    for (name, value) in [("J", j), ("Jp", jp), ("T", t)] {
        if !value.is_finite() {
            return Err(ModelError::NonFiniteInput { name, value });
        }
    }
    if t <= 0.0 {
        return Err(ModelError::NonPositiveTemperature(t));
    }
    if k < 2 {
        return Err(ModelError::OrderTooSmall(k));
    }
    Ok(ModelParams {
        j,
        jp,
        t,
        k: k as usize,
        beta: 1.0 / t,
    })
}

/// Boltzmann weights `a = e^{beta J}`, `b = e^{beta Jp}`, `c = a^2`, `d = b^2`.
///
/// The log fields are exact (`log_a = beta*J`); the exponentiated fields are
/// derived views. Downstream numerics work on the logs so that powers like
/// `d^k` never materialize outside log space.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivedWeights {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    pub log_a: f64,
    pub log_b: f64,
    pub log_c: f64,
    pub log_d: f64,
}

/// Compute the Boltzmann weights for `params`.
pub fn derived_weights(params: &ModelParams) -> Result<DerivedWeights, ModelError> {
    let log_a = params.beta * params.j;
    let log_b = params.beta * params.jp;
    let log_c = 2.0 * log_a;
    let log_d = 2.0 * log_b;
    for exponent in [log_a, log_b, log_c, log_d] {
        if !exponent.exp().is_finite() {
            return Err(ModelError::WeightOverflow { exponent });
        }
    }
    Ok(DerivedWeights {
        a: log_a.exp(),
        b: log_b.exp(),
        c: log_c.exp(),
        d: log_d.exp(),
        log_a,
        log_b,
        log_c,
        log_d,
    })
}

/// A spin configuration on the ball `V_n` of a depth-1 or depth-2 tree.
///
/// Vertex layout is breadth-first: the root is vertex 0, its successors are
/// `1..=k`, and the successors of vertex `i` (for `i` in `1..=k`) are
/// `k + (i-1)*k + 1 ..= k + i*k`. Spins are stored in that order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteTreeConfig {
    pub depth: usize,
    pub k: usize,
    pub spins: Vec<i8>,
}

/// Number of vertices in the depth-`n` ball of an order-`k` tree.
pub fn ball_size(depth: usize, k: usize) -> Result<usize, ModelError> {
    match depth {
        1 => Ok(1 + k),
        2 => Ok(1 + k + k * k),
        other => Err(ModelError::UnsupportedDepth(other)),
    }
}

impl FiniteTreeConfig {
    pub fn new(depth: usize, k: usize, spins: Vec<i8>) -> Result<Self, ModelError> {
        let expected = ball_size(depth, k)?;
        if spins.len() != expected {
            return Err(ModelError::IncompleteConfig {
                depth,
                k,
                expected,
                got: spins.len(),
            });
        }
        if let Some(&bad) = spins.iter().find(|s| **s != 1 && **s != -1) {
            return Err(ModelError::InvalidSpin(bad));
        }
        Ok(Self { depth, k, spins })
    }

    /// Indices of the direct successors of vertex `v` (empty on the last
    /// generation).
    pub fn successors(&self, v: usize) -> std::ops::Range<usize> {
        successor_range(v, self.k, self.depth)
    }
}

/// Successor index range of vertex `v` in the breadth-first layout.
pub fn successor_range(v: usize, k: usize, depth: usize) -> std::ops::Range<usize> {
    if v == 0 {
        1..k + 1
    } else if v <= k && depth >= 2 {
        let start = k + (v - 1) * k + 1;
        start..start + k
    } else {
        0..0
    }
}

/// Exact energy of a finite configuration:
/// `-Jp * sum(grandparent-grandchild) - J * sum(nearest-neighbor)`,
/// both sums restricted to the ball `V_n`.
pub fn finite_energy(config: &FiniteTreeConfig, params: &ModelParams) -> f64 {
    let mut nn = 0i64;
    let mut prolonged = 0i64;
    for v in 0..config.spins.len() {
        let sv = config.spins[v] as i64;
        for w in config.successors(v) {
            let sw = config.spins[w] as i64;
            nn += sv * sw;
            for g in config.successors(w) {
                prolonged += sv * config.spins[g] as i64;
            }
        }
    }
    -params.jp * prolonged as f64 - params.j * nn as f64
}
