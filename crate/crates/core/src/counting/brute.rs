use num_bigint::BigUint;

use crate::counting::CountingLimits;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::sequence::IndependenceSequence;

/// Hard limit: subsets are enumerated as bits of one u64.
const WORD_LIMIT: usize = 63;

pub fn brute_force_sequence(g: &Graph) -> Result<IndependenceSequence> {
    brute_force_sequence_with(g, &CountingLimits::default())
}

/// Counts independent sets by checking every vertex subset. Exponential by
/// design; the cap keeps it inside the regime where that is a feature.
pub fn brute_force_sequence_with(
    g: &Graph,
    limits: &CountingLimits,
) -> Result<IndependenceSequence> {
    let n = g.n();
    let cap = limits.brute_force_cap.min(WORD_LIMIT);
    if n > cap {
        return Err(Error::SizeCapExceeded {
            engine: "brute-force",
            n,
            cap,
        });
    }
    let masks: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).fold(0u64, |m, u| m | 1 << u))
        .collect();
    let mut counts = vec![0u64; n + 1];
    for subset in 0u64..1 << n {
        let mut rest = subset;
        let mut independent = true;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            if masks[v] & subset != 0 {
                independent = false;
                break;
            }
            rest &= rest - 1;
        }
        if independent {
            counts[subset.count_ones() as usize] += 1;
        }
    }
    Ok(IndependenceSequence::from_counts(
        counts.into_iter().map(BigUint::from).collect(),
    ))
}
