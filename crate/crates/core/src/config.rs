use serde::{Deserialize, Serialize};

/// Resource caps shared by the engines.
///
/// All searches in this crate are exhaustive inside these caps and fail with
/// [`crate::Error::CapExceeded`] or [`crate::Error::BoundExceeded`] outside
/// them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct Caps {
    /// Number of indeterminates allowed in user-facing ideals.
    pub max_vars: usize,
    /// Total degree allowed for ideal generators before a Gröbner computation.
    pub max_degree: usize,
    /// Largest `k` accepted by the length-set reproduction for `<X1,X2>^k`.
    pub max_k: usize,
    /// Largest element allowed in power-monoid sets.
    pub max_power_element: u32,
    /// Largest sequence length for zero-sum factorization.
    pub max_sequence_len: usize,
    /// Number of initial-monomial patterns the atom certifier may examine.
    pub pattern_budget: usize,
    /// Largest `min(d, e)` for which a split is attempted by the atom certifier.
    pub max_split_side: usize,
    /// Generic search-node budget for factorization searches.
    pub search_budget: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_vars: 4,
            max_degree: 20,
            max_k: 8,
            max_power_element: 64,
            max_sequence_len: 16,
            pattern_budget: 20_000,
            max_split_side: 4,
            search_budget: 5_000_000,
        }
    }
}

impl Caps {
    pub fn validate(&self) -> crate::Result<()> {
        let fields = [
            ("max_vars", self.max_vars),
            ("max_degree", self.max_degree),
            ("max_k", self.max_k),
            ("max_power_element", self.max_power_element as usize),
            ("max_sequence_len", self.max_sequence_len),
            ("pattern_budget", self.pattern_budget),
            ("max_split_side", self.max_split_side),
            ("search_budget", self.search_budget),
        ];
        for (name, value) in fields {
            if value == 0 {
                return Err(crate::Error::InvalidArgument(format!(
                    "cap {name} must be positive"
                )));
            }
        }
        if self.max_vars < 2 {
            return Err(crate::Error::InvalidArgument(
                "cap max_vars must be at least 2".into(),
            ));
        }
        Ok(())
    }
}
