//! Shape analysis of positive integer sequences: unimodality,
//! log-concavity, plateau structure, dip witnesses, and the parameter
//! heuristics that steer the constructed families toward non-unimodal
//! territory.
//!
//! A plateau is a maximal run of equal values strictly greater than both
//! neighbors, with the boundaries treated as minus infinity. A dip is a
//! triple t_low < t_mid < t_high whose middle value is strictly below the
//! two outer values; a sequence is unimodal exactly when it has no dip,
//! equivalently exactly one plateau.

use num_bigint::BigUint;
use num_traits::One;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::Result;
use crate::graph::GeneralizedConstruction;

/// Maximal constant run strictly above its surroundings; inclusive bounds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Plateau {
    pub start: usize,
    pub end: usize,
    #[serde(serialize_with = "serialize_big")]
    pub value: BigUint,
}

/// Lexicographically smallest dip triple, with the three values attached.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DipWitness {
    pub t_low: usize,
    pub t_mid: usize,
    pub t_high: usize,
    #[serde(serialize_with = "serialize_big_slice")]
    pub values: [BigUint; 3],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShapeReport {
    pub is_unimodal: bool,
    pub is_log_concave: bool,
    pub local_maxima: Vec<Plateau>,
    pub dip_witness: Option<DipWitness>,
    pub global_mode: usize,
}

fn serialize_big<S: Serializer>(v: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

fn serialize_big_slice<S: Serializer>(
    values: &[BigUint; 3],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(values.len()))?;
    for v in values {
        seq.serialize_element(&v.to_string())?;
    }
    seq.end()
}

/// No strict rise after a strict fall.
pub fn is_unimodal(seq: &[BigUint]) -> bool {
    assert!(!seq.is_empty(), "shape predicates need a nonempty sequence");
    let mut fell = false;
    for pair in seq.windows(2) {
        if pair[1] < pair[0] {
            fell = true;
        } else if pair[1] > pair[0] && fell {
            return false;
        }
    }
    true
}

/// seq[t]^2 >= seq[t-1] * seq[t+1] at every interior index.
pub fn is_log_concave(seq: &[BigUint]) -> bool {
    assert!(!seq.is_empty(), "shape predicates need a nonempty sequence");
    seq.windows(3).all(|w| &w[1] * &w[1] >= &w[0] * &w[2])
}

/// All plateaus in increasing order of position.
pub fn local_maxima(seq: &[BigUint]) -> Vec<Plateau> {
    assert!(!seq.is_empty(), "shape predicates need a nonempty sequence");
    let mut plateaus = Vec::new();
    let mut start = 0;
    for end in 0..seq.len() {
        if end + 1 < seq.len() && seq[end + 1] == seq[start] {
            continue;
        }
        // run [start, end] of equal values; boundaries count as -infinity
        let rises_left = start == 0 || seq[start - 1] < seq[start];
        let falls_right = end + 1 == seq.len() || seq[end + 1] < seq[end];
        if rises_left && falls_right {
            plateaus.push(Plateau {
                start,
                end,
                value: seq[start].clone(),
            });
        }
        start = end + 1;
    }
    plateaus
}

/// Lexicographically smallest (t_low, t_mid, t_high) with the middle value
/// strictly below both outer values, or None when the sequence is unimodal.
pub fn dip_witness(seq: &[BigUint]) -> Option<DipWitness> {
    assert!(!seq.is_empty(), "shape predicates need a nonempty sequence");
    for low in 0..seq.len() {
        for mid in low + 1..seq.len() {
            if seq[mid] >= seq[low] {
                continue;
            }
            for high in mid + 1..seq.len() {
                if seq[mid] < seq[high] {
                    return Some(DipWitness {
                        t_low: low,
                        t_mid: mid,
                        t_high: high,
                        values: [seq[low].clone(), seq[mid].clone(), seq[high].clone()],
                    });
                }
            }
        }
    }
    None
}

/// Smallest index attaining the maximum.
pub fn global_mode(seq: &[BigUint]) -> usize {
    assert!(!seq.is_empty(), "shape predicates need a nonempty sequence");
    let mut mode = 0;
    for (i, v) in seq.iter().enumerate().skip(1) {
        if *v > seq[mode] {
            mode = i;
        }
    }
    mode
}

pub fn analyze(seq: &[BigUint]) -> ShapeReport {
    let report = ShapeReport {
        is_unimodal: is_unimodal(seq),
        is_log_concave: is_log_concave(seq),
        local_maxima: local_maxima(seq),
        dip_witness: dip_witness(seq),
        global_mode: global_mode(seq),
    };
    debug_assert_eq!(report.is_unimodal, report.local_maxima.len() == 1);
    debug_assert_eq!(report.is_unimodal, report.dip_witness.is_none());
    report
}

/// The b that balances the two summands of the G(a, b) total count:
/// the unique b with 2^b <= 3^a < 2^(b+1), i.e. floor(a log2 3), computed
/// exactly from the bit length of 3^a.
pub fn suggest_b(a: u64) -> u64 {
    BigUint::from(3u32).pow(a as u32).bits() - 1
}

/// Predicted peak positions of the two forces shaping the G(a, b)
/// sequence: the binomial part C(b, t) peaks at floor(b/2), and the
/// matched-pair part, which grows like 2^t C(a, t), peaks near 2a/3.
/// Each position is the smallest argmax of its term sequence, found by an
/// exact integer ratio scan: 2^t C(a, t) rises exactly while
/// 2(a - t) > t + 1.
pub fn predicted_modes(a: u64, b: u64) -> Result<(u64, u64)> {
    crate::graph::GabConstruction::new(a, b)?;
    let binomial_peak = b / 2;
    let mut pair_peak = 0;
    while 2 * (a - pair_peak) > pair_peak + 1 {
        pair_peak += 1;
    }
    Ok((binomial_peak, pair_peak))
}

/// Block sizes that equalize the k + 1 summand magnitudes of the stacked
/// construction's total count: a_i = round(a log2((1 + 2^(k-i+1)) /
/// (1 + 2^(k-i)))), floored at 1. Rounding is exact, by comparing powers
/// of the two bases as big integers; ties round to even.
pub fn balance_generalized(a: u64, k: usize) -> Result<GeneralizedConstruction> {
    if a < 1 || k < 1 {
        return Err(crate::error::Error::InvalidParameters(format!(
            "balancing needs a >= 1 and k >= 1, got a = {a}, k = {k}"
        )));
    }
    let parts = (1..=k as u64)
        .map(|i| {
            let p = BigUint::one() + (BigUint::one() << (k as u64 - i + 1));
            let q = BigUint::one() + (BigUint::one() << (k as u64 - i));
            rounded_log2_ratio_scaled(a, &p, &q).max(1)
        })
        .collect();
    GeneralizedConstruction::new(a, parts)
}

/// round(a * log2(p / q)) for p > q >= 1, exactly: with P = p^a, Q = q^a,
/// first the floor m via bit lengths plus one comparison, then the half
/// case by comparing P^2 against Q^2 * 2^(2m + 1).
fn rounded_log2_ratio_scaled(a: u64, p: &BigUint, q: &BigUint) -> u64 {
    let big_p = p.pow(a as u32);
    let big_q = q.pow(a as u32);
    let mut m = big_p.bits() - big_q.bits();
    if (&big_q << m) > big_p {
        m -= 1;
    }
    debug_assert!((&big_q << m) <= big_p && big_p < (&big_q << (m + 1)));
    let lhs = &big_p * &big_p;
    let rhs = (&big_q * &big_q) << (2 * m + 1);
    match lhs.cmp(&rhs) {
        std::cmp::Ordering::Greater => m + 1,
        std::cmp::Ordering::Less => m,
        std::cmp::Ordering::Equal => m + (m & 1),
    }
}
