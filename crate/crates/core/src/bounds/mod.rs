//! Growth functions, the greedy sequence μ̄, the bound `C_{r,m}^n`, the
//! earlier bounds it improves on, and the application bounds built from it.

pub mod ackermann;
pub mod applications;
pub mod c_bound;
pub mod growth;
pub mod legacy;
pub mod mu;
pub mod table;

use std::collections::BTreeMap;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

pub use ackermann::{ackermann, iterated_ackermann, AckermannTable, Iterate};
pub use applications::{alpha, bezout_exponents, char_set_order_bound, component_order_bound, nullstellensatz_t};
pub use c_bound::{c_bound, c_bound_via_greedy, paper_gn};
pub use growth::{GrowthFunction, Segment};
pub use legacy::{an_upper_bound, legacy_pierce_bound, leov_ackermann_bound, leov_recursive_bound_m2};
pub use mu::{l_max, mu_next, mu_sequence, mu_sequence_greedy, psi};

/// Which identity produced a [`BoundReport`] value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FormulaPath {
    /// `C_{0,m}^n = 0` or `C_{r,1}^n = r`.
    Base,
    /// `C_{r,m}^1 = A(m-1, C_{r-1,m}^1)` composed `n` times in `r`.
    AckermannRecursion,
    /// `𝔏_{g_n,m}^n + r - n` through the Ψ recursion.
    GreedyPsi,
    /// `2^{𝔏_{f,m}^n + 1} r` with `f(i) = 2^i r`.
    PierceDoubling,
    /// `2^{b_n + 1} r`.
    LeovRecursion,
    /// `2A(m+3, 4r-1)` or `(2/n)A(m+5, 4nr-1)`.
    LeovAckermann,
    /// `A_n(m, r)`.
    IteratedAckermann,
    CharacteristicSet,
    ComponentOrder,
    Nullstellensatz,
    Bezout,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    #[serde(with = "crate::report::decimal")]
    pub value: BigUint,
    pub formula_path: FormulaPath,
    #[serde(with = "crate::report::decimal_map")]
    pub intermediates: BTreeMap<String, BigUint>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl BoundReport {
    pub fn new(value: BigUint, formula_path: FormulaPath) -> Self {
        BoundReport { value, formula_path, intermediates: BTreeMap::new(), notes: Vec::new() }
    }

    pub fn with(mut self, name: impl Into<String>, value: BigUint) -> Self {
        self.intermediates.insert(name.into(), value);
        self
    }

    pub fn note(mut self, text: impl Into<String>) -> Self {
        self.notes.push(text.into());
        self
    }

    pub fn get(&self, name: &str) -> Option<&BigUint> {
        self.intermediates.get(name)
    }
}
