use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::polynomial::DensePolynomial;

/// Exact independent set counts of a graph by size: entry t is the number
/// of independent sets with t vertices, for t = 0..=alpha.
///
/// Invariants: entry 0 is 1 (the empty set), the last entry is nonzero, and
/// no interior entry is zero. For a graph on n >= 1 vertices entry 1 is n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndependenceSequence {
    coeffs: Vec<BigUint>,
}

impl IndependenceSequence {
    /// Trims trailing zeros and checks the sequence invariants.
    pub fn from_counts(mut coeffs: Vec<BigUint>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        assert!(
            coeffs.first().is_some_and(One::is_one),
            "count of empty independent sets must be 1"
        );
        assert!(
            coeffs.iter().all(|c| !c.is_zero()),
            "no interior count may be zero"
        );
        IndependenceSequence { coeffs }
    }

    pub fn from_polynomial(p: DensePolynomial) -> Self {
        Self::from_counts(p.into_coefficients())
    }

    /// Independence number: the largest t with a nonzero count.
    pub fn alpha(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficients(&self) -> &[BigUint] {
        &self.coeffs
    }

    /// Count for one size; zero beyond alpha.
    pub fn coefficient(&self, t: usize) -> BigUint {
        self.coeffs.get(t).cloned().unwrap_or_default()
    }

    /// Total number of independent sets.
    pub fn total(&self) -> BigUint {
        self.coeffs.iter().sum()
    }

    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(BigUint::to_string).collect()
    }
}

/// Serializes as an array of decimal strings; the counts routinely exceed
/// every native integer width.
impl Serialize for IndependenceSequence {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&c.to_string())?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(values: &[u64]) -> IndependenceSequence {
        IndependenceSequence::from_counts(values.iter().copied().map(BigUint::from).collect())
    }

    #[test]
    fn trims_and_reports_alpha() {
        let s = seq(&[1, 3, 1, 0, 0]);
        assert_eq!(s.alpha(), 2);
        assert_eq!(s.coefficients().len(), 3);
        assert_eq!(s.coefficient(1), BigUint::from(3u32));
        assert_eq!(s.coefficient(9), BigUint::zero());
        assert_eq!(s.total(), BigUint::from(5u32));
    }

    #[test]
    fn single_entry_sequence() {
        let s = seq(&[1]);
        assert_eq!(s.alpha(), 0);
        assert_eq!(s.total(), BigUint::one());
    }

    #[test]
    #[should_panic(expected = "empty independent sets")]
    fn rejects_wrong_leading_entry() {
        seq(&[2, 1]);
    }

    #[test]
    #[should_panic(expected = "interior count")]
    fn rejects_interior_zero() {
        seq(&[1, 0, 1]);
    }

    #[test]
    fn serializes_as_decimal_strings() {
        let s = seq(&[1, 18446744073709551615]);
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"["1","18446744073709551615"]"#);
    }
}
