//! Colored Mahonian numbers `i_c(n, k) = #{σ ∈ G_{c,n} : inv_c(σ) = k}`.
//!
//! Seven independent routes compute the same numbers:
//!
//! | method              | route                                                           |
//! |---------------------|-----------------------------------------------------------------|
//! | `gen_func`          | coefficients of `[c]_q [2c]_q ⋯ [nc]_q`                         |
//! | `recurrence`        | `i_c(n,k) = i_c(n,k-1) + i_c(n-1,k) - i_c(n-1,k-cn)`            |
//! | `summation`         | `i_c(n,k) = Σ_{j<cn} i_c(n-1,k-j)`                              |
//! | `knuth_netto`       | binomial series over generalized pentagonal numbers, `k <= n`   |
//! | `partition_conv`    | `Σ_j i(n,j) · p_{≤n,c-1}(k-j)`                                  |
//! | `composition_split` | `Σ_{ca+b=k} Com(n parts, sum b, each < c) · i(n,a)`             |
//! | `lattice_path`      | north/east paths to `(n,k)`, at most `cj-1` north steps at `x=j` |
//!
//! All intermediate tables live inside a single call.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{binomial, exact_div, factorial, multichoose, pow, sign, to_integer};
use crate::poly::QPolynomial;
use crate::stats::{max_inv_c_small, UnknownName};
use crate::ExactInt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MahonianMethod {
    GenFunc,
    Recurrence,
    Summation,
    KnuthNetto,
    PartitionConv,
    CompositionSplit,
    LatticePath,
}

impl MahonianMethod {
    pub const ALL: [MahonianMethod; 7] = [
        MahonianMethod::GenFunc,
        MahonianMethod::Recurrence,
        MahonianMethod::Summation,
        MahonianMethod::KnuthNetto,
        MahonianMethod::PartitionConv,
        MahonianMethod::CompositionSplit,
        MahonianMethod::LatticePath,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MahonianMethod::GenFunc => "gen_func",
            MahonianMethod::Recurrence => "recurrence",
            MahonianMethod::Summation => "summation",
            MahonianMethod::KnuthNetto => "knuth_netto",
            MahonianMethod::PartitionConv => "partition_conv",
            MahonianMethod::CompositionSplit => "composition_split",
            MahonianMethod::LatticePath => "lattice_path",
        }
    }
}

impl fmt::Display for MahonianMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MahonianMethod {
    type Err = UnknownName;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        MahonianMethod::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or(UnknownName)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MahonianError {
    /// The Knuth–Netto series is only valid for `0 <= k <= n`.
    KnuthNettoDomain { n: usize, k: i64 },
}

impl fmt::Display for MahonianError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MahonianError::KnuthNettoDomain { n, k } => {
                write!(f, "knuth_netto needs 0 <= k <= n, got n = {n}, k = {k}")
            }
        }
    }
}

impl core::error::Error for MahonianError {}

/// `Π_{i=1}^{n} [c·i]_q`; coefficient `k` is `i_c(n, k)`.
pub fn gf_colored(n: usize, c: usize) -> QPolynomial {
    assert!(c >= 1, "c must be at least 1");
    QPolynomial::product((1..=n).map(|i| QPolynomial::q_integer(c * i)))
}

/// Mahonian number `i(n, k)`.
pub fn i_classical(n: usize, k: i64) -> ExactInt {
    gf_colored(n, 1).coeff(k)
}

/// `i_c(n, k)` by the chosen method.
pub fn i_colored(
    method: MahonianMethod,
    n: usize,
    k: i64,
    c: usize,
) -> Result<ExactInt, MahonianError> {
    assert!(c >= 1, "c must be at least 1");
    Ok(match method {
        MahonianMethod::GenFunc => gf_colored(n, c).coeff(k),
        MahonianMethod::Recurrence => i_colored_recurrence(n, k, c),
        MahonianMethod::Summation => i_colored_summation(n, k, c),
        MahonianMethod::KnuthNetto => return i_colored_knuth_netto(n, k, c),
        MahonianMethod::PartitionConv => i_colored_partition_conv(n, k, c),
        MahonianMethod::CompositionSplit => i_colored_composition_split(n, k, c),
        MahonianMethod::LatticePath => i_colored_lattice_path(n, k, c),
    })
}

/// The whole row `i_c(n, 0..=max)` by the chosen method.
///
/// For `knuth_netto` the row stops at `min(n, max)`.
pub fn colored_row(method: MahonianMethod, n: usize, c: usize) -> Vec<ExactInt> {
    assert!(c >= 1, "c must be at least 1");
    let max = max_inv_c_small(n, c) as i64;
    match method {
        MahonianMethod::GenFunc => pad(gf_colored(n, c).into_coefficients(), max),
        MahonianMethod::Recurrence => recurrence_rows(n, c).pop().unwrap(),
        MahonianMethod::Summation => summation_rows(n, c).pop().unwrap(),
        MahonianMethod::KnuthNetto => (0..=max.min(n as i64))
            .map(|k| i_colored_knuth_netto(n, k, c).expect("k within domain"))
            .collect(),
        _ => (0..=max)
            .map(|k| i_colored(method, n, k, c).unwrap())
            .collect(),
    }
}

fn pad(mut coeffs: Vec<ExactInt>, max: i64) -> Vec<ExactInt> {
    coeffs.resize(max as usize + 1, BigInt::zero());
    coeffs
}

fn at(row: &[ExactInt], k: i64) -> ExactInt {
    usize::try_from(k)
        .ok()
        .and_then(|k| row.get(k).cloned())
        .unwrap_or_else(BigInt::zero)
}

/// Rows `0..=n` of the recurrence table, seeded by `i_c(0, 0) = 1`.
fn recurrence_rows(n: usize, c: usize) -> Vec<Vec<ExactInt>> {
    let mut rows = vec![vec![BigInt::one()]];
    for m in 1..=n {
        let max = max_inv_c_small(m, c) as i64;
        let prev = &rows[m - 1];
        let mut row: Vec<ExactInt> = Vec::with_capacity(max as usize + 1);
        for k in 0..=max {
            let left = if k > 0 {
                row[k as usize - 1].clone()
            } else {
                BigInt::zero()
            };
            row.push(left + at(prev, k) - at(prev, k - (c * m) as i64));
        }
        rows.push(row);
    }
    rows
}

fn summation_rows(n: usize, c: usize) -> Vec<Vec<ExactInt>> {
    let mut rows = vec![vec![BigInt::one()]];
    for m in 1..=n {
        let max = max_inv_c_small(m, c) as i64;
        let prev = &rows[m - 1];
        let row = (0..=max)
            .map(|k| (0..(c * m) as i64).map(|j| at(prev, k - j)).sum())
            .collect();
        rows.push(row);
    }
    rows
}

pub fn i_colored_recurrence(n: usize, k: i64, c: usize) -> ExactInt {
    at(&recurrence_rows(n, c)[n], k)
}

pub fn i_colored_summation(n: usize, k: i64, c: usize) -> ExactInt {
    at(&summation_rows(n, c)[n], k)
}

/// Knuth–Netto style series, valid for `0 <= k <= n`:
///
/// ```text
/// i_c(n,k) = C(n+k-1, k)
///          + Σ_{j>=1} (-1)^j C(n+k-c·u_j-c·j-1, k-c·u_j-c·j)
///          + Σ_{j>=1} (-1)^j C(n+k-c·u_j-1,     k-c·u_j)
/// ```
///
/// with `u_j = j(3j-1)/2`. Each `C(n+t-1, t)` is read as a multiset count so
/// that `n = k = 0` gives 1.
pub fn i_colored_knuth_netto(n: usize, k: i64, c: usize) -> Result<ExactInt, MahonianError> {
    if k < 0 || k > n as i64 {
        return Err(MahonianError::KnuthNettoDomain { n, k });
    }
    let n = n as i64;
    let c = c as i64;
    let mut total = multichoose(n, k);
    for j in 1.. {
        let (lower, upper) = pentagonal_small(j);
        let short = k - c * lower;
        if short < 0 {
            break;
        }
        let long = k - c * upper;
        total += sign(j as u64) * (multichoose(n, long) + multichoose(n, short));
    }
    Ok(total)
}

pub fn i_colored_partition_conv(n: usize, k: i64, c: usize) -> ExactInt {
    if k < 0 {
        return BigInt::zero();
    }
    let classical = gf_colored(n, 1);
    let parts = p_bounded_row(n, c - 1, k as usize);
    (0..=k)
        .map(|j| classical.coeff(j) * &parts[(k - j) as usize])
        .sum()
}

pub fn i_colored_composition_split(n: usize, k: i64, c: usize) -> ExactInt {
    if k < 0 {
        return BigInt::zero();
    }
    let classical = gf_colored(n, 1);
    (0..=k / c as i64)
        .map(|a| com_bounded(n, (k - c as i64 * a) as u64, c) * classical.coeff(a))
        .sum()
}

/// Counts north/east lattice paths from `(0,0)` to `(n,k)` that take at most
/// `c·x - 1` consecutive north steps while at `x` (none at `x = 0`).
pub fn i_colored_lattice_path(n: usize, k: i64, c: usize) -> ExactInt {
    if k < 0 {
        return BigInt::zero();
    }
    let height = k as usize;
    // arrivals[y]: paths that just stepped east onto the current column at height y
    let mut arrivals = vec![BigInt::zero(); height + 1];
    arrivals[0] = BigInt::one();
    for x in 1..=n {
        let max_run = c * x - 1;
        let mut leaving = vec![BigInt::zero(); height + 1];
        // run[y] counts paths at height y in this column with the current run length
        let mut run = arrivals.clone();
        for step in 0..=max_run {
            for y in 0..=height {
                leaving[y] += &run[y];
            }
            if step == max_run {
                break;
            }
            let mut climbed = vec![BigInt::zero(); height + 1];
            climbed[1..].clone_from_slice(&run[..height]);
            if climbed.iter().all(Zero::is_zero) {
                break;
            }
            run = climbed;
        }
        arrivals = leaving;
    }
    // north steps at x = 0 are not allowed, so n = 0 only reaches height 0
    arrivals.swap_remove(height)
}

/// Partitions of `m` into parts `<= limit_part`, each used at most `limit_mult` times.
pub fn p_bounded(limit_part: usize, limit_mult: usize, m: usize) -> ExactInt {
    p_bounded_row(limit_part, limit_mult, m).swap_remove(m)
}

/// `p_bounded(limit_part, limit_mult, s)` for `s = 0..=max_m`.
pub fn p_bounded_row(limit_part: usize, limit_mult: usize, max_m: usize) -> Vec<ExactInt> {
    let mut ways = vec![BigInt::zero(); max_m + 1];
    ways[0] = BigInt::one();
    for part in 1..=limit_part {
        let mut next = vec![BigInt::zero(); max_m + 1];
        for (s, slot) in next.iter_mut().enumerate() {
            for times in 0..=limit_mult {
                let Some(rest) = s.checked_sub(times * part) else {
                    break;
                };
                *slot += &ways[rest];
            }
        }
        ways = next;
    }
    ways
}

/// Compositions of `total` into `parts` non-negative parts, each `< c`:
/// `Σ_j (-1)^j C(parts, j) C(total - c·j + parts - 1, parts - 1)`.
pub fn com_bounded(parts: usize, total: u64, c: usize) -> ExactInt {
    assert!(c >= 1, "c must be at least 1");
    if parts == 0 {
        return if total == 0 {
            BigInt::one()
        } else {
            BigInt::zero()
        };
    }
    let (p, t, c) = (parts as i64, total as i64, c as i64);
    (0..=p)
        .map(|j| sign(j as u64) * binomial(p, j) * binomial(t - c * j + p - 1, p - 1))
        .sum()
}

/// Generalized pentagonal pair `(j(3j-1)/2, j(3j+1)/2)`.
pub fn pentagonal(j: u64) -> (ExactInt, ExactInt) {
    let j = BigInt::from(j);
    let three_j = &j * 3u32;
    (
        (&j * (&three_j - 1u32)) / 2u32,
        (&j * (&three_j + 1u32)) / 2u32,
    )
}

fn pentagonal_small(j: i64) -> (i64, i64) {
    (j * (3 * j - 1) / 2, j * (3 * j + 1) / 2)
}

/// `I_{c,n} = (c^n n!/2) (c·C(n+1,2) - n)`, the sum of `inv_c` over `G_{c,n}`.
pub fn total_inversions_closed(n: usize, c: usize) -> ExactInt {
    let bracket = BigInt::from(c) * binomial(n as i64 + 1, 2) - n;
    exact_div(
        &(pow(c as u64, n as u64) * factorial(n as u64) * bracket),
        &BigInt::from(2),
    )
}

/// `I_{c,n} = c^n n! (cn-1)/2 + cn·I_{c,n-1}` from `I_{c,1} = C(c,2)`.
pub fn total_inversions_recurrence(n: usize, c: usize) -> ExactInt {
    if n == 0 {
        return BigInt::zero();
    }
    let mut total = binomial(c as i64, 2);
    for m in 2..=n {
        let fresh = pow(c as u64, m as u64) * factorial(m as u64) * BigInt::from(c * m - 1);
        total = exact_div(&fresh, &BigInt::from(2)) + BigInt::from(c * m) * total;
    }
    total
}

/// Chains the ratio `I_{c,m} / I_{c,m-1} = c m² (cm+c-2) / ((m-1)(cm-2))`.
///
/// The ratio needs `I_{c,m-1} ≠ 0`, so for `c = 1` the chain starts from
/// `I_{1,2} = 1` instead of `I_{1,1} = 0`.
pub fn total_inversions_ratio_chain(n: usize, c: usize) -> ExactInt {
    let (mut total, start) = if c == 1 {
        if n <= 1 {
            return BigInt::zero();
        }
        (BigRational::one(), 3)
    } else {
        if n == 0 {
            return BigInt::zero();
        }
        (BigRational::from_integer(binomial(c as i64, 2)), 2)
    };
    for m in start..=n {
        let (m, c) = (m as i64, c as i64);
        let ratio = BigRational::new(
            BigInt::from(c * m * m * (c * m + c - 2)),
            BigInt::from((m - 1) * (c * m - 2)),
        );
        total *= ratio;
        to_integer(&total);
    }
    to_integer(&total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(x: i64) -> ExactInt {
        BigInt::from(x)
    }

    #[test]
    fn generating_function_rows() {
        assert_eq!(gf_colored(0, 3), QPolynomial::one());
        let row: Vec<_> = gf_colored(3, 2)
            .coefficients()
            .iter()
            .map(|a| i64::try_from(a).unwrap())
            .collect();
        assert_eq!(row, [1, 3, 5, 7, 8, 8, 7, 5, 3, 1]);
        assert_eq!(gf_colored(4, 3).coeff(2), big(10));
        assert_eq!(gf_colored(4, 3).degree(), Some(26));
        assert_eq!(gf_colored(4, 3).eval_at_one(), big(81 * 24));
    }

    #[test]
    fn classical_mahonian() {
        assert_eq!(i_classical(4, 2), big(5));
        assert_eq!(i_classical(6, 0), big(1));
        assert_eq!(i_classical(4, 6), big(1));
        assert_eq!(i_classical(4, 7), big(0));
        assert_eq!(i_classical(4, -1), big(0));
    }

    #[test]
    fn spot_values_every_method() {
        for method in MahonianMethod::ALL {
            if method != MahonianMethod::KnuthNetto {
                assert_eq!(i_colored(method, 4, 2, 3), Ok(big(10)), "{method}");
                assert_eq!(i_colored(method, 4, 5, 2), Ok(big(32)), "{method}");
                assert_eq!(i_colored(method, 4, 2, 1), Ok(big(5)), "{method}");
            }
            for n in 0..5 {
                for c in 1..4 {
                    assert_eq!(
                        i_colored(method, n, 0, c),
                        Ok(big(1)),
                        "{method} n={n} c={c}"
                    );
                }
            }
        }
        let full: Vec<_> = (0..10)
            .map(|k| i_colored_composition_split(3, k, 2))
            .collect();
        assert_eq!(full, [1, 3, 5, 7, 8, 8, 7, 5, 3, 1].map(big));
    }

    #[test]
    fn knuth_netto_examples_and_domain() {
        // C(5,2) - [C(3,0) + C(4,1)]
        assert_eq!(i_colored_knuth_netto(4, 2, 1), Ok(big(5)));
        // C(5,2) - C(3,0)
        assert_eq!(i_colored_knuth_netto(4, 2, 2), Ok(big(9)));
        assert_eq!(i_colored_knuth_netto(4, 2, 3), Ok(big(10)));
        assert_eq!(i_colored_knuth_netto(0, 0, 5), Ok(big(1)));
        assert_eq!(
            i_colored_knuth_netto(4, 5, 2),
            Err(MahonianError::KnuthNettoDomain { n: 4, k: 5 })
        );
        assert!(i_colored_knuth_netto(4, -1, 2).is_err());
    }

    #[test]
    fn bounded_partitions() {
        assert_eq!(p_bounded(2, 1, 2), big(1));
        assert_eq!(p_bounded(5, 3, 0), big(1));
        assert_eq!(p_bounded(0, 0, 0), big(1));
        assert_eq!(p_bounded(3, 2, 3), big(2));
        assert_eq!(p_bounded(3, 0, 2), big(0));
    }

    #[test]
    fn bounded_compositions() {
        assert_eq!(com_bounded(2, 2, 2), big(1));
        assert_eq!(com_bounded(4, 0, 3), big(1));
        assert_eq!(com_bounded(0, 0, 3), big(1));
        assert_eq!(com_bounded(0, 1, 3), big(0));
        assert_eq!(com_bounded(3, 2, 2), big(3));
        assert_eq!(com_bounded(3, 7, 2), big(0));
    }

    #[test]
    fn pentagonal_pairs() {
        assert_eq!(pentagonal(1), (big(1), big(2)));
        assert_eq!(pentagonal(2), (big(5), big(7)));
        assert_eq!(pentagonal(3), (big(12), big(15)));
    }

    #[test]
    fn inversion_totals() {
        for c in 1..8 {
            let pairs = big((c * (c - 1) / 2) as i64);
            assert_eq!(total_inversions_closed(1, c), pairs);
            assert_eq!(total_inversions_recurrence(1, c), pairs);
            assert_eq!(total_inversions_ratio_chain(1, c), pairs);
            assert_eq!(total_inversions_closed(0, c), big(0));
            assert_eq!(total_inversions_recurrence(0, c), big(0));
            assert_eq!(total_inversions_ratio_chain(0, c), big(0));
        }
        assert_eq!(total_inversions_closed(2, 2), big(16));
        assert_eq!(total_inversions_recurrence(2, 2), big(16));
        assert_eq!(total_inversions_closed(3, 1), big(9));
        assert_eq!(total_inversions_recurrence(3, 1), big(9));
        assert_eq!(total_inversions_ratio_chain(3, 1), big(9));
        assert_eq!(total_inversions_ratio_chain(2, 1), big(1));
    }

    #[test]
    fn method_names() {
        for m in MahonianMethod::ALL {
            assert_eq!(m.name().parse::<MahonianMethod>(), Ok(m));
        }
    }
}
