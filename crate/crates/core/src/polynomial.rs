use std::ops::{Add, Mul};

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Dense polynomial with nonnegative arbitrary-precision coefficients.
///
/// Canonical form never carries a trailing zero coefficient; the zero
/// polynomial is the empty coefficient vector.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DensePolynomial {
    coeffs: Vec<BigUint>,
}

impl DensePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        DensePolynomial {
            coeffs: vec![BigUint::one()],
        }
    }

    pub fn from_coefficients(mut coeffs: Vec<BigUint>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        DensePolynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coefficients(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub fn into_coefficients(self) -> Vec<BigUint> {
        self.coeffs
    }

    pub fn coefficient(&self, i: usize) -> BigUint {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// Multiplication by x^k.
    pub fn shifted(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigUint::zero(); k];
        coeffs.extend_from_slice(&self.coeffs);
        DensePolynomial { coeffs }
    }

    pub fn pow(&self, mut exponent: u64) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        while exponent > 0 {
            if exponent & 1 == 1 {
                result = &result * &base;
            }
            exponent >>= 1;
            if exponent > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Evaluation at 1.
    pub fn sum_of_coefficients(&self) -> BigUint {
        self.coeffs.iter().sum()
    }

    pub(crate) fn heap_bytes(&self) -> usize {
        let limb_bytes: usize = self
            .coeffs
            .iter()
            .map(|c| (c.bits() as usize).div_ceil(64) * 8)
            .sum();
        limb_bytes + self.coeffs.len() * std::mem::size_of::<BigUint>()
    }
}

impl Add for &DensePolynomial {
    type Output = DensePolynomial;

    fn add(self, other: &DensePolynomial) -> DensePolynomial {
        let (longer, shorter) = if self.coeffs.len() >= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut coeffs = longer.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&shorter.coeffs) {
            *c += s;
        }
        DensePolynomial { coeffs }
    }
}

impl Mul for &DensePolynomial {
    type Output = DensePolynomial;

    fn mul(self, other: &DensePolynomial) -> DensePolynomial {
        if self.is_zero() || other.is_zero() {
            return DensePolynomial::zero();
        }
        let mut coeffs = vec![BigUint::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        DensePolynomial { coeffs }
    }
}
