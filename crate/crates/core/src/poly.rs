//! Dense polynomials in `q` with exact integer coefficients.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::ExactInt;

/// Coefficient `k` of the vector is the coefficient of `q^k`.
///
/// Always normalized: no trailing zeros, and the zero polynomial is empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct QPolynomial {
    coeffs: Vec<ExactInt>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        QPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPolynomial {
            coeffs: vec![BigInt::one()],
        }
    }

    pub fn from_coeffs(mut coeffs: Vec<ExactInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPolynomial { coeffs }
    }

    /// `q^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        QPolynomial { coeffs }
    }

    /// `[m]_q = 1 + q + ⋯ + q^{m-1}`; `[0]_q = 0`.
    pub fn q_integer(m: usize) -> Self {
        QPolynomial {
            coeffs: vec![BigInt::one(); m],
        }
    }

    pub fn coefficients(&self) -> &[ExactInt] {
        &self.coeffs
    }

    pub fn into_coefficients(self) -> Vec<ExactInt> {
        self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `q^k`, zero outside the support.
    pub fn coeff(&self, k: i64) -> ExactInt {
        usize::try_from(k)
            .ok()
            .and_then(|k| self.coeffs.get(k).cloned())
            .unwrap_or_else(BigInt::zero)
    }

    /// Substitutes `q ↦ q^factor`.
    pub fn dilate(&self, factor: usize) -> Self {
        assert!(factor >= 1, "dilation factor must be positive");
        let Some(deg) = self.degree() else {
            return QPolynomial::zero();
        };
        let mut coeffs = vec![BigInt::zero(); deg * factor + 1];
        for (k, a) in self.coeffs.iter().enumerate() {
            coeffs[k * factor] = a.clone();
        }
        QPolynomial { coeffs }
    }

    /// Value at `q = 1`.
    pub fn eval_at_one(&self) -> ExactInt {
        self.coeffs.iter().sum()
    }

    /// Derivative at `q = 1`, i.e. `Σ k·a_k`.
    pub fn first_moment(&self) -> ExactInt {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, a)| a * BigInt::from(k))
            .sum()
    }

    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    pub fn product<I: IntoIterator<Item = QPolynomial>>(factors: I) -> Self {
        factors
            .into_iter()
            .fold(QPolynomial::one(), |acc, f| &acc * &f)
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;

    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return QPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPolynomial::from_coeffs(coeffs)
    }
}

impl Mul for QPolynomial {
    type Output = QPolynomial;

    fn mul(self, rhs: QPolynomial) -> QPolynomial {
        &self * &rhs
    }
}

impl Add for &QPolynomial {
    type Output = QPolynomial;

    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len as i64)
            .map(|k| self.coeff(k) + rhs.coeff(k))
            .collect();
        QPolynomial::from_coeffs(coeffs)
    }
}

impl Sub for &QPolynomial {
    type Output = QPolynomial;

    fn sub(self, rhs: &QPolynomial) -> QPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len as i64)
            .map(|k| self.coeff(k) - rhs.coeff(k))
            .collect();
        QPolynomial::from_coeffs(coeffs)
    }
}
