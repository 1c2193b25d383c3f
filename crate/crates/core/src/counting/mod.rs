//! Three independent routes to the same counts: closed forms for the two
//! constructed families, a memoized deletion recurrence for arbitrary
//! graphs, and brute-force subset enumeration as the ground-truth oracle
//! for small graphs. Tests hold the engines against each other; none of
//! them is trusted alone.

mod brute;
mod closed;
mod recurrence;

pub use brute::{brute_force_sequence, brute_force_sequence_with};
pub use closed::{gab_sequence, gab_term, generalized_sequence, total_count_identity};
pub use recurrence::{sequence_by_recurrence, sequence_by_recurrence_with};

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Size and memory ceilings for the enumeration engines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountingLimits {
    /// Largest vertex count brute force will touch (hard limit 63).
    pub brute_force_cap: usize,
    /// Largest vertex count the recurrence will touch.
    pub recurrence_cap: usize,
    /// Rough ceiling on memo table heap usage, in bytes.
    pub memo_budget_bytes: usize,
}

impl Default for CountingLimits {
    fn default() -> Self {
        CountingLimits {
            brute_force_cap: 30,
            recurrence_cap: 80,
            memo_budget_bytes: 512 << 20,
        }
    }
}

/// Binomial coefficient, zero outside 0 <= k <= n.
pub fn binomial(n: u64, k: i64) -> BigUint {
    if k < 0 || k as u64 > n {
        return BigUint::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut result = BigUint::one();
    for i in 1..=k {
        // exact at every step: i consecutive integers contain a multiple of i
        result = result * (n - k + i) / i;
    }
    result
}
