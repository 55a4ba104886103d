//! Colored derangements and colored involutions: counts and `inv_c` totals.
//!
//! A colored derangement has no window position `i` holding the uncolored
//! letter `i`. A colored involution squares to the identity: every cycle has
//! length at most two, a fixed value carries a color `k` with `2k ≡ 0 (mod c)`,
//! and the two colors on a 2-cycle sum to `0 (mod c)`.
//!
//! Sequences with a negative index are zero, and binomials use the
//! zero-unless-`0 <= b <= a` convention from [`crate::arith`].

use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{binomial, exact_div, factorial, falling_ratio, pow, sign};
use crate::mahonian::com_bounded;
use crate::perm::ColoredPermutation;
use crate::stats::UnknownName;
use crate::ExactInt;

/// Subsets of `G_{c,n}` the oracle can filter on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassKind {
    All,
    Derangements,
    Involutions,
}

impl ClassKind {
    pub const ALL: [ClassKind; 3] = [
        ClassKind::All,
        ClassKind::Derangements,
        ClassKind::Involutions,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClassKind::All => "all",
            ClassKind::Derangements => "derangements",
            ClassKind::Involutions => "involutions",
        }
    }

    pub fn contains(self, sigma: &ColoredPermutation) -> bool {
        match self {
            ClassKind::All => true,
            ClassKind::Derangements => sigma.is_derangement(),
            ClassKind::Involutions => sigma.is_involution(),
        }
    }

    pub(crate) fn contains_raw(self, c: usize, values: &[usize], colors: &[usize]) -> bool {
        match self {
            ClassKind::All => true,
            ClassKind::Derangements => is_derangement_raw(values, colors),
            ClassKind::Involutions => is_involution_raw(c, values, colors),
        }
    }
}

pub(crate) fn is_derangement_raw(values: &[usize], colors: &[usize]) -> bool {
    !values
        .iter()
        .zip(colors)
        .enumerate()
        .any(|(i, (&v, &k))| v == i + 1 && k == 0)
}

pub(crate) fn is_involution_raw(c: usize, values: &[usize], colors: &[usize]) -> bool {
    values
        .iter()
        .zip(colors)
        .enumerate()
        .all(|(i, (&v, &k))| values[v - 1] == i + 1 && (colors[v - 1] + k).is_multiple_of(c))
}

impl fmt::Display for ClassKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClassKind {
    type Err = UnknownName;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ClassKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or(UnknownName)
    }
}

/// `d_n^(c) = Σ_{k=0}^{n} (-1)^k c^{n-k} n!/k!`.
pub fn derangement_count(n: usize, c: usize) -> ExactInt {
    let n = n as u64;
    (0..=n)
        .map(|k| sign(k) * pow(c as u64, n - k) * falling_ratio(n, k))
        .sum()
}

/// `d_{m+1} = (cm + c) d_m + (-1)^{m+1}` from `d_0 = 1`.
pub fn derangement_count_recurrence(n: usize, c: usize) -> ExactInt {
    let mut d = BigInt::one();
    for m in 0..n {
        d = BigInt::from(c * m + c) * d + sign(m as u64 + 1);
    }
    d
}

/// Total `inv` over the classical derangements of size `n`:
/// `(n!/12) Σ_{k=0}^{n-1} (-1)^k (3n+k)(n-k-1)/k!`.
pub fn t_classical(n: usize) -> ExactInt {
    let n = n as u64;
    let sum: ExactInt = (0..n)
        .map(|k| sign(k) * BigInt::from((3 * n + k) * (n - k - 1)) * falling_ratio(n, k))
        .sum();
    exact_div(&sum, &BigInt::from(12))
}

/// The four summands of the colored derangement total.
///
/// `a` is the `inv(|σ|)` part, `b` the `col(σ)` part, and `c1 + c2` the
/// `c · #{i<j : σ_i<σ_j, c_j≠0}` part, split by whether the left index is a
/// fixed point of the inclusion–exclusion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerangementInversionTerms {
    pub a: ExactInt,
    pub b: ExactInt,
    pub c1: ExactInt,
    pub c2: ExactInt,
}

impl DerangementInversionTerms {
    pub fn total(&self) -> ExactInt {
        &self.a + &self.b + &self.c1 + &self.c2
    }
}

pub fn t_colored_terms(n: usize, c: usize) -> DerangementInversionTerms {
    assert!(c >= 1, "c must be at least 1");
    let (n, c) = (n as u64, c as u64);

    let a_sum: ExactInt = (0..n)
        .map(|k| {
            sign(k) * pow(c, n - k) * BigInt::from((n - k - 1) * (3 * n + k)) * falling_ratio(n, k)
        })
        .sum();
    let a = exact_div(&a_sum, &BigInt::from(12));

    let b = (0..=n)
        .map(|k| {
            let free = n - k;
            let color_mass: ExactInt = (0..=free * (c - 1))
                .map(|i| BigInt::from(i) * com_bounded(free as usize, i, c as usize))
                .sum();
            sign(k) * falling_ratio(n, k) * color_mass
        })
        .sum();

    let c1_sum: ExactInt = (0..=n)
        .map(|k| sign(k) * pow(c, n - k) * binomial((n - k) as i64, 2) * falling_ratio(n, k))
        .sum();
    let c1 = exact_div(&(c1_sum * BigInt::from(c - 1)), &BigInt::from(2));

    let c2_sum: ExactInt = (1..n)
        .map(|k| sign(k) * pow(c, n - k) * BigInt::from(2 * (n - k) + 1) * falling_ratio(n, k - 1))
        .sum();
    let c2 = exact_div(&(c2_sum * BigInt::from(c - 1)), &BigInt::from(6));

    DerangementInversionTerms { a, b, c1, c2 }
}

/// Total `inv_c` over the colored derangements in `G_{c,n}`.
pub fn t_colored(n: usize, c: usize) -> ExactInt {
    t_colored_terms(n, c).total()
}

/// Number of fixed-point colorings allowed per fixed value: 2 for even `c`, else 1.
fn fixed_point_colors(c: usize) -> u64 {
    if c.is_multiple_of(2) {
        2
    } else {
        1
    }
}

/// `r_n^(c) = Σ_{k ≡ n (2)} C(n,k) (3+(-1)^c)^k c^{(n-k)/2} (n-k)! / (2^{(n+k)/2} ((n-k)/2)!)`.
pub fn involution_count(n: usize, c: usize) -> ExactInt {
    assert!(c >= 1, "c must be at least 1");
    let base = 2 * fixed_point_colors(c);
    (n % 2..=n)
        .step_by(2)
        .map(|k| {
            let pairs = (n - k) / 2;
            let num = binomial(n as i64, k as i64)
                * pow(base, k as u64)
                * pow(c as u64, pairs as u64)
                * factorial((n - k) as u64);
            let den = pow(2, ((n + k) / 2) as u64) * factorial(pairs as u64);
            exact_div(&num, &den)
        })
        .sum()
}

/// `r_{m+1} = a·r_m + c·m·r_{m-1}` with `a = ((-1)^c + 3)/2`, read off from
/// `R'(x) = (a + c·x) R(x)` for the EGF `exp(a·x + c·x²/2)`.
pub fn involution_count_recurrence(n: usize, c: usize) -> ExactInt {
    let a = BigInt::from(fixed_point_colors(c));
    let (mut prev, mut cur) = (BigInt::zero(), BigInt::one());
    for m in 0..n {
        let next = &a * &cur + BigInt::from(c * m) * &prev;
        prev = cur;
        cur = next;
    }
    cur
}

fn r(n: i64, c: usize) -> ExactInt {
    if n < 0 {
        BigInt::zero()
    } else {
        involution_count(n as usize, c)
    }
}

/// Total `inv` over the classical involutions of size `n`.
pub fn involution_inv_total_classical(n: usize) -> ExactInt {
    let n = n as i64;
    binomial(n, 2) * r(n - 2, 1)
        + 2 * binomial(n, 3) * r(n - 3, 1)
        + 6 * binomial(n, 4) * r(n - 4, 1)
}

/// Total `inv_c` over the colored involutions in `G_{c,n}`.
pub fn involution_inv_total(n: usize, c: usize) -> ExactInt {
    assert!(c >= 1, "c must be at least 1");
    let ni = n as i64;
    let ci = c as i64;
    let parity = if c.is_multiple_of(2) { 1 } else { -1 };
    let fixed = exact_div(
        &(BigInt::from(ni * ci * (parity + 1)) * r(ni - 1, c)),
        &BigInt::from(4),
    );
    let pair = BigInt::from(ci * (ci + 1 + parity)) * binomial(ni, 2) * r(ni - 2, c);
    let triple = BigInt::from(2 * ci * ci * (parity + 2)) * binomial(ni, 3) * r(ni - 3, c);
    let quad = BigInt::from(6 * ci * ci * ci) * binomial(ni, 4) * r(ni - 4, c);
    fixed + pair + triple + quad
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    fn big(x: i64) -> ExactInt {
        BigInt::from(x)
    }

    #[test]
    fn derangement_numbers() {
        for c in 1..5 {
            assert_eq!(derangement_count(0, c), big(1));
            assert_eq!(derangement_count_recurrence(0, c), big(1));
        }
        assert_eq!(derangement_count(4, 1), big(9));
        assert_eq!(derangement_count_recurrence(4, 1), big(9));
        assert_eq!(derangement_count(2, 2), big(5));
        assert_eq!(derangement_count_recurrence(2, 2), big(5));
        assert_eq!(derangement_count(1, 1), big(0));
    }

    #[test]
    fn classical_derangement_totals() {
        assert_eq!(t_classical(0), big(0));
        assert_eq!(t_classical(1), big(0));
        assert_eq!(t_classical(2), big(1));
        assert_eq!(t_classical(3), big(4));
        assert_eq!(t_classical(7), big(21784));
    }

    #[test]
    fn colored_derangement_totals() {
        assert_eq!(t_colored(1, 2), big(1));
        assert_eq!(t_colored(2, 2), big(12));
        assert_eq!(t_colored(7, 9), "2671026822324".parse::<BigInt>().unwrap());
        assert_eq!(t_colored(0, 3), big(0));
    }

    #[test]
    fn colored_derangement_terms_for_g22() {
        // derangements of G_{2,2}: 2 1, 2[1] 1, 2 1[1], 2[1] 1[1], 1[1] 2[1]
        let terms = t_colored_terms(2, 2);
        assert_eq!(terms.a, big(4));
        assert_eq!(terms.b, big(6));
        assert_eq!(&terms.c1 + &terms.c2, big(2));
    }

    #[test]
    fn involution_numbers() {
        for c in 1..6 {
            assert_eq!(involution_count(0, c), big(1));
        }
        assert_eq!(involution_count(2, 3), big(4));
        assert_eq!(involution_count(2, 2), big(6));
        assert_eq!(involution_count(2, 4), big(8));
        assert_eq!(involution_count(4, 1), big(10));
        let classical: Vec<_> = (0..7).map(|n| involution_count_recurrence(n, 1)).collect();
        assert_eq!(classical, [1, 1, 2, 4, 10, 26, 76].map(big));
        assert_eq!(involution_count_recurrence(2, 2), big(6));
        assert_eq!(involution_count_recurrence(2, 3), big(4));
    }

    #[test]
    fn involution_totals() {
        assert_eq!(involution_inv_total_classical(2), big(1));
        assert_eq!(involution_inv_total_classical(3), big(5));
        assert_eq!(involution_inv_total_classical(8), big(9240));
        assert_eq!(involution_inv_total_classical(0), big(0));
        assert_eq!(involution_inv_total(1, 2), big(1));
        assert_eq!(involution_inv_total(2, 2), big(12));
        assert_eq!(involution_inv_total(2, 3), big(9));
        assert_eq!(involution_inv_total(0, 4), big(0));
    }

    #[test]
    fn class_names() {
        for k in ClassKind::ALL {
            assert_eq!(k.name().parse::<ClassKind>(), Ok(k));
        }
    }
}
