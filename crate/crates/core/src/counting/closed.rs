use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::counting::binomial;
use crate::error::Result;
use crate::graph::{GabConstruction, GeneralizedConstruction};
use crate::polynomial::DensePolynomial;
use crate::sequence::IndependenceSequence;

/// Number of independent t-sets in G(a, b): (2^t - 1) C(a, t) + C(b, t).
///
/// A t-set either touches V2 u V3 in at least one matched pair slot, which
/// pins its trace to a choices among a matched pairs with 2^t - 1 mixed
/// patterns after excluding the all-V2 pattern forced away from V1, or it
/// avoids mixing and sits inside an induced b-set.
pub fn gab_term(a: u64, b: u64, t: u64) -> Result<BigUint> {
    GabConstruction::new(a, b)?;
    let mixed = (BigUint::one() << t) - 1u32;
    Ok(mixed * binomial(a, t as i64) + binomial(b, t as i64))
}

/// Full sequence of G(a, b); the independence number is b.
///
/// Runs the binomial factors incrementally, so the whole sequence costs
/// O(b) big-integer operations.
pub fn gab_sequence(a: u64, b: u64) -> Result<IndependenceSequence> {
    GabConstruction::new(a, b)?;
    let mut choose_a = BigUint::one();
    let mut choose_b = BigUint::one();
    let mut pow2 = BigUint::one();
    let mut coeffs = Vec::with_capacity(b as usize + 1);
    coeffs.push(BigUint::one());
    for t in 1..=b {
        choose_b = choose_b * (b - t + 1) / t;
        choose_a = if t <= a {
            choose_a * (a - t + 1) / t
        } else {
            BigUint::zero()
        };
        pow2 = &pow2 << 1;
        coeffs.push((&pow2 - 1u32) * &choose_a + &choose_b);
    }
    Ok(IndependenceSequence::from_counts(coeffs))
}

/// Independence polynomial of the stacked construction, by closed form:
///
///   I(G; x) = (x + (1+x)^k)^a
///           + sum over i of (1+x)^(a_1+..+a_(i-1)) ((1+x)^(a_i) - 1)
///             (x + (1+x)^(k-i))^a
///
/// The i-th summand collects independent sets whose highest occupied upper
/// block is A_i: such a set picks freely from blocks below i, must touch
/// A_i, and each matched pair slot then has its B-members above level i
/// excluded. Every factor has nonnegative coefficients, so the whole
/// computation stays in unsigned integers.
pub fn generalized_sequence(params: &GeneralizedConstruction) -> IndependenceSequence {
    let a = params.a();
    let k = params.k();
    let mut total = pair_slot_factor(k, a);
    let mut prefix = 0u64;
    for (idx, &ai) in params.parts().iter().enumerate() {
        let below = one_plus_x_power(prefix);
        let touch = block_touch_factor(ai);
        let slots = pair_slot_factor(k - (idx + 1), a);
        total = &total + &(&(&below * &touch) * &slots);
        prefix += ai;
    }
    IndependenceSequence::from_polynomial(total)
}

/// (x + (1+x)^c)^a: each of the a matched pair slots offers its A0 vertex
/// or any subset of its c available B vertices.
fn pair_slot_factor(c: usize, a: u64) -> DensePolynomial {
    let mut base = one_plus_x_power(c as u64).into_coefficients();
    if base.len() < 2 {
        base.push(BigUint::zero());
    }
    base[1] += 1u32;
    DensePolynomial::from_coefficients(base).pow(a)
}

/// (1+x)^m as a coefficient row.
fn one_plus_x_power(m: u64) -> DensePolynomial {
    let coeffs = (0..=m).map(|t| binomial(m, t as i64)).collect();
    DensePolynomial::from_coefficients(coeffs)
}

/// (1+x)^m - 1: the nonempty subsets of an m-set.
fn block_touch_factor(m: u64) -> DensePolynomial {
    let coeffs = (0..=m)
        .map(|t| {
            if t == 0 {
                BigUint::zero()
            } else {
                binomial(m, t as i64)
            }
        })
        .collect();
    DensePolynomial::from_coefficients(coeffs)
}

/// Sums the closed-form terms of G(a, b) and checks the sum against the
/// independent evaluation identity 2^b + 3^a - 2^a before returning it.
pub fn total_count_identity(a: u64, b: u64) -> Result<BigUint> {
    GabConstruction::new(a, b)?;
    let mut sum = BigUint::zero();
    for t in 0..=b {
        sum += gab_term(a, b, t)?;
    }
    let closed = (BigUint::one() << b) + BigUint::from(3u32).pow(a as u32) - (BigUint::one() << a);
    assert_eq!(
        sum, closed,
        "total independent set count of G({a}, {b}) must equal 2^{b} + 3^{a} - 2^{a}"
    );
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::brute_force_sequence;
    use crate::graph::{build_gab, build_generalized};

    fn gab_counts(a: u64, b: u64) -> Vec<u64> {
        gab_sequence(a, b)
            .unwrap()
            .coefficients()
            .iter()
            .map(|c| u64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn gab_term_small_values() {
        assert_eq!(gab_term(2, 3, 0).unwrap(), BigUint::one());
        assert_eq!(gab_term(2, 3, 1).unwrap(), BigUint::from(5u32));
        assert_eq!(gab_term(2, 3, 2).unwrap(), BigUint::from(6u32));
        assert_eq!(gab_term(2, 3, 3).unwrap(), BigUint::one());
        // beyond the independence number everything vanishes
        assert_eq!(gab_term(2, 3, 4).unwrap(), BigUint::zero());
    }

    #[test]
    fn gab_term_rejects_bad_params() {
        assert!(gab_term(3, 3, 0).is_err());
        assert!(gab_term(0, 3, 0).is_err());
        assert!(gab_sequence(5, 4).is_err());
        assert!(total_count_identity(1, 1).is_err());
    }

    #[test]
    fn gab_sequence_small_values() {
        assert_eq!(gab_counts(1, 2), vec![1, 3, 1]);
        assert_eq!(gab_counts(2, 3), vec![1, 5, 6, 1]);
    }

    #[test]
    fn gab_sequence_matches_term_by_term() {
        for a in 1..=8u64 {
            for b in a + 1..=10 {
                let seq = gab_sequence(a, b).unwrap();
                assert_eq!(seq.alpha() as u64, b);
                for t in 0..=b {
                    assert_eq!(
                        seq.coefficient(t as usize),
                        gab_term(a, b, t).unwrap(),
                        "G({a}, {b}) at t = {t}"
                    );
                }
            }
        }
    }

    #[test]
    fn gab_sequence_matches_enumeration() {
        for a in 1..=4u64 {
            for b in a + 1..=6 {
                let g = build_gab(&GabConstruction::new(a, b).unwrap());
                assert_eq!(
                    gab_sequence(a, b).unwrap(),
                    brute_force_sequence(&g).unwrap(),
                    "G({a}, {b})"
                );
            }
        }
    }

    #[test]
    fn generalized_single_block_collapses_to_gab() {
        for a in 1..=6u64 {
            for a1 in 1..=4u64 {
                let params = GeneralizedConstruction::new(a, vec![a1]).unwrap();
                assert_eq!(
                    generalized_sequence(&params),
                    gab_sequence(a, a + a1).unwrap(),
                    "a = {a}, a1 = {a1}"
                );
            }
        }
    }

    #[test]
    fn generalized_small_values() {
        let p = GeneralizedConstruction::new(1, vec![1]).unwrap();
        assert_eq!(
            generalized_sequence(&p).to_decimal_strings(),
            ["1", "3", "1"]
        );
        let p = GeneralizedConstruction::new(2, vec![1, 1]).unwrap();
        assert_eq!(
            generalized_sequence(&p).to_decimal_strings(),
            ["1", "8", "18", "13", "2"]
        );
        let p = GeneralizedConstruction::new(3, vec![2, 1]).unwrap();
        assert_eq!(
            generalized_sequence(&p).to_decimal_strings(),
            ["1", "12", "48", "85", "68", "22", "2"]
        );
    }

    #[test]
    fn generalized_matches_enumeration() {
        for a in 1..=3u64 {
            for parts in [
                vec![1],
                vec![2],
                vec![1, 1],
                vec![1, 2],
                vec![2, 1],
                vec![2, 2],
            ] {
                let params = GeneralizedConstruction::new(a, parts.clone()).unwrap();
                let g = build_generalized(&params);
                assert_eq!(
                    generalized_sequence(&params),
                    brute_force_sequence(&g).unwrap(),
                    "a = {a}, parts = {parts:?}"
                );
            }
        }
    }

    #[test]
    fn totals_match_evaluation_identity() {
        assert_eq!(total_count_identity(1, 2).unwrap(), BigUint::from(5u32));
        assert_eq!(total_count_identity(2, 3).unwrap(), BigUint::from(13u32));
        // the identity also counts the actual sets
        let g = build_gab(&GabConstruction::new(3, 5).unwrap());
        assert_eq!(
            total_count_identity(3, 5).unwrap(),
            brute_force_sequence(&g).unwrap().total()
        );
    }
}
