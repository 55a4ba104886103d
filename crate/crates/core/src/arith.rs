//! Exact integer helpers shared by the counting formulas.
//!
//! Binomial coefficients follow one convention everywhere: `C(a, b) = 0`
//! unless `0 <= b <= a`. Alternating sums over out-of-range indices then
//! vanish on their own.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::ExactInt;

/// `C(a, b)`, zero unless `0 <= b <= a`.
pub fn binomial(a: i64, b: i64) -> ExactInt {
    if b < 0 || a < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for i in 1..=b {
        acc *= a - b + i;
        acc /= i;
    }
    acc
}

/// Number of size-`k` multisets drawn from `n` kinds, `C(n + k - 1, k)`.
///
/// Unlike [`binomial`] this is 1 at `n = k = 0`.
pub fn multichoose(n: i64, k: i64) -> ExactInt {
    if k < 0 || n < 0 {
        return BigInt::zero();
    }
    if k == 0 {
        return BigInt::one();
    }
    binomial(n + k - 1, k)
}

pub fn factorial(n: u64) -> ExactInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `n! / k!` for `k <= n`.
pub fn falling_ratio(n: u64, k: u64) -> ExactInt {
    assert!(k <= n, "falling_ratio: {k} > {n}");
    (k + 1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

pub fn pow(base: u64, exp: u64) -> ExactInt {
    num_traits::pow(BigInt::from(base), exp as usize)
}

/// `(-1)^k` as an exact integer.
pub fn sign(k: u64) -> ExactInt {
    if k.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// Exact quotient; panics if `den` does not divide `num`.
pub fn exact_div(num: &ExactInt, den: &ExactInt) -> ExactInt {
    let (q, r) = num.div_rem(den);
    assert!(r.is_zero(), "inexact division: {num} / {den}");
    q
}

/// Converts a rational known to be integral. Panics otherwise.
pub fn to_integer(value: &BigRational) -> ExactInt {
    assert!(value.is_integer(), "expected an integer, got {value}");
    value.to_integer()
}

/// Order of the group `G_{c,n}`, that is `c^n * n!`.
pub fn group_order(n: usize, c: usize) -> ExactInt {
    pow(c as u64, n as u64) * factorial(n as u64)
}

pub(crate) fn is_nonnegative(x: &ExactInt) -> bool {
    !x.is_negative()
}
