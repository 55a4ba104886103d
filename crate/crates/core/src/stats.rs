//! Permutation statistics.
//!
//! For `σ ∈ G_{c,n}` with window values `σ_i` and colors `c_i`:
//!
//! ```text
//! inv_c(σ)  = inv(|σ|) + col(σ) + c · #{ i < j : σ_i < σ_j, c_j ≠ 0 }
//! ĩnv_c(σ)  = c · inv(|σ|) + col(σ)
//! ```
//!
//! Both range over `0..=(c-1)n + c·C(n,2)` and share the distribution
//! `[c]_q [2c]_q ⋯ [nc]_q` over `G_{c,n}`.

use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;

use crate::perm::ColoredPermutation;
use crate::ExactInt;

/// Number of pairs `i < j` with `π_i > π_j`.
pub fn inv(pi: &[usize]) -> ExactInt {
    BigInt::from(inv_count(pi))
}

/// Sum of the descent positions `i` (1-based) with `π_i > π_{i+1}`.
pub fn maj(pi: &[usize]) -> ExactInt {
    BigInt::from(maj_count(pi))
}

/// Sum of the window colors.
pub fn col(sigma: &ColoredPermutation) -> ExactInt {
    BigInt::from(col_count(sigma.colors()))
}

/// Pairs `i < j` with `σ_i < σ_j` whose right entry is colored.
pub fn cross_term(sigma: &ColoredPermutation) -> ExactInt {
    BigInt::from(cross_count(sigma.values(), sigma.colors()))
}

pub fn inv_c(sigma: &ColoredPermutation) -> ExactInt {
    BigInt::from(inv_c_raw(sigma.c(), sigma.values(), sigma.colors()))
}

pub fn tilde_inv_c(sigma: &ColoredPermutation) -> ExactInt {
    BigInt::from(tilde_inv_c_raw(sigma.c(), sigma.values(), sigma.colors()))
}

/// `(c-1)n + c·C(n,2)`, attained only by `1^[c-1] ⋯ n^[c-1]`.
pub fn max_inv_c(n: usize, c: usize) -> ExactInt {
    BigInt::from(max_inv_c_small(n, c))
}

pub(crate) fn max_inv_c_small(n: usize, c: usize) -> u64 {
    let (n, c) = (n as u64, c as u64);
    (c - 1) * n + c * (n * n.saturating_sub(1) / 2)
}

pub(crate) fn inv_count(pi: &[usize]) -> u64 {
    let mut total = 0;
    for (i, &a) in pi.iter().enumerate() {
        total += pi[i + 1..].iter().filter(|&&b| a > b).count() as u64;
    }
    total
}

pub(crate) fn maj_count(pi: &[usize]) -> u64 {
    pi.windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] > w[1])
        .map(|(i, _)| i as u64 + 1)
        .sum()
}

pub(crate) fn col_count(colors: &[usize]) -> u64 {
    colors.iter().map(|&k| k as u64).sum()
}

pub(crate) fn cross_count(values: &[usize], colors: &[usize]) -> u64 {
    let mut total = 0;
    for j in 1..values.len() {
        if colors[j] != 0 {
            total += values[..j].iter().filter(|&&a| a < values[j]).count() as u64;
        }
    }
    total
}

pub(crate) fn inv_c_raw(c: usize, values: &[usize], colors: &[usize]) -> u64 {
    inv_count(values) + col_count(colors) + c as u64 * cross_count(values, colors)
}

pub(crate) fn tilde_inv_c_raw(c: usize, values: &[usize], colors: &[usize]) -> u64 {
    c as u64 * inv_count(values) + col_count(colors)
}

/// The statistics the oracle and CLI know how to tabulate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StatisticKind {
    InvC,
    TildeInvC,
    /// `inv` of the underlying permutation.
    InvUnderlying,
    Col,
}

impl StatisticKind {
    pub const ALL: [StatisticKind; 4] = [
        StatisticKind::InvC,
        StatisticKind::TildeInvC,
        StatisticKind::InvUnderlying,
        StatisticKind::Col,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StatisticKind::InvC => "inv_c",
            StatisticKind::TildeInvC => "tilde_inv_c",
            StatisticKind::InvUnderlying => "inv",
            StatisticKind::Col => "col",
        }
    }

    pub fn evaluate(self, sigma: &ColoredPermutation) -> ExactInt {
        BigInt::from(self.evaluate_raw(sigma.c(), sigma.values(), sigma.colors()))
    }

    pub(crate) fn evaluate_raw(self, c: usize, values: &[usize], colors: &[usize]) -> u64 {
        match self {
            StatisticKind::InvC => inv_c_raw(c, values, colors),
            StatisticKind::TildeInvC => tilde_inv_c_raw(c, values, colors),
            StatisticKind::InvUnderlying => inv_count(values),
            StatisticKind::Col => col_count(colors),
        }
    }

    /// Largest value the statistic takes on `G_{c,n}`.
    pub fn max_value(self, n: usize, c: usize) -> u64 {
        let pairs = (n * n.saturating_sub(1) / 2) as u64;
        match self {
            StatisticKind::InvC | StatisticKind::TildeInvC => max_inv_c_small(n, c),
            StatisticKind::InvUnderlying => pairs,
            StatisticKind::Col => (c as u64 - 1) * n as u64,
        }
    }
}

impl fmt::Display for StatisticKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnknownName;

impl fmt::Display for UnknownName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("unknown name")
    }
}

impl FromStr for StatisticKind {
    type Err = UnknownName;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        StatisticKind::ALL
            .into_iter()
            .find(|kind| kind.name() == s)
            .ok_or(UnknownName)
    }
}
