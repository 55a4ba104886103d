//! Exhaustive enumeration of `G_{c,n}`: the ground truth every closed form is
//! checked against.
//!
//! Elements come out in a fixed order: underlying permutations in
//! lexicographic order, and for each of them the color vector counted in base
//! `c` with the last position fastest. The stream splits into contiguous
//! blocks by the first value of the underlying permutation; histograms built
//! per block and summed are identical to the sequential result, which is what
//! callers rely on to parallelize.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::arith::{group_order, is_nonnegative};
use crate::lehmer::{self, iter_codes};
use crate::mahonian::{self, colored_row, gf_colored, MahonianMethod};
use crate::perm::ColoredPermutation;
use crate::poly::QPolynomial;
use crate::special::{self, ClassKind};
use crate::stats::{self, StatisticKind};
use crate::ExactInt;

/// Default enumeration cap, in group elements.
pub const DEFAULT_CAP: u64 = 10_000_000;

/// Largest color count the verification suite sweeps.
pub const VERIFY_MAX_COLORS: usize = 9;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleError {
    CapExceeded { size: ExactInt, cap: u64 },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::CapExceeded { size, cap } => {
                write!(f, "enumeration of {size} elements exceeds the cap of {cap}")
            }
        }
    }
}

impl core::error::Error for OracleError {}

fn check_cap(n: usize, c: usize, cap: u64) -> Result<(), OracleError> {
    assert!(c >= 1, "c must be at least 1");
    let size = group_order(n, c);
    if size > BigInt::from(cap) {
        return Err(OracleError::CapExceeded { size, cap });
    }
    Ok(())
}

/// Rearranges `perm` into its lexicographic successor; false at the last one.
fn next_permutation(perm: &mut [usize]) -> bool {
    let Some(i) = perm.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = perm.iter().rposition(|&x| x > perm[i]).unwrap();
    perm.swap(i, j);
    perm[i + 1..].reverse();
    true
}

/// Base-`c` increment, last position fastest; false after wrapping to zero.
fn next_colors(colors: &mut [usize], c: usize) -> bool {
    for k in colors.iter_mut().rev() {
        *k += 1;
        if *k < c {
            return true;
        }
        *k = 0;
    }
    false
}

/// First permutation of the block, or of the whole stream when `first` is `None`.
fn block_start(n: usize, first: Option<usize>) -> Vec<usize> {
    match first {
        None => (1..=n).collect(),
        Some(v) => {
            assert!((1..=n).contains(&v), "first value {v} outside 1..={n}");
            core::iter::once(v)
                .chain((1..=n).filter(|&x| x != v))
                .collect()
        }
    }
}

/// Streaming enumerator of `G_{c,n}` (or one first-value block of it).
#[derive(Clone, Debug)]
pub struct GroupIter {
    c: usize,
    first: Option<usize>,
    values: Vec<usize>,
    colors: Vec<usize>,
    done: bool,
}

impl Iterator for GroupIter {
    type Item = ColoredPermutation;

    fn next(&mut self) -> Option<ColoredPermutation> {
        if self.done {
            return None;
        }
        let item = ColoredPermutation::from_parts_unchecked(
            self.c,
            self.values.clone(),
            self.colors.clone(),
        );
        if !next_colors(&mut self.colors, self.c) {
            let more = next_permutation(&mut self.values);
            let same_block = self.first.is_none_or(|v| self.values.first() == Some(&v));
            self.done = !more || !same_block;
        }
        Some(item)
    }
}

/// Every element of `G_{c,n}` exactly once, provided `c^n n! <= cap`.
pub fn enumerate_group(n: usize, c: usize, cap: u64) -> Result<GroupIter, OracleError> {
    check_cap(n, c, cap)?;
    Ok(GroupIter {
        c,
        first: None,
        values: block_start(n, None),
        colors: vec![0; n],
        done: false,
    })
}

/// The contiguous block of [`enumerate_group`] whose underlying permutation starts with `first`.
pub fn enumerate_block(
    n: usize,
    c: usize,
    first: usize,
    cap: u64,
) -> Result<GroupIter, OracleError> {
    check_cap(n, c, cap)?;
    Ok(GroupIter {
        c,
        first: Some(first),
        values: block_start(n, Some(first)),
        colors: vec![0; n],
        done: false,
    })
}

/// One element of the group during a scan, with per-permutation data cached.
pub(crate) struct Window<'a> {
    pub values: &'a [usize],
    pub colors: &'a [usize],
    inv: u64,
    smaller_left: &'a [u64],
}

impl Window<'_> {
    pub fn statistic(&self, c: usize, kind: StatisticKind) -> u64 {
        let col = stats::col_count(self.colors);
        match kind {
            StatisticKind::InvC => {
                let cross: u64 = self
                    .colors
                    .iter()
                    .zip(self.smaller_left)
                    .filter(|(&k, _)| k != 0)
                    .map(|(_, &s)| s)
                    .sum();
                self.inv + col + c as u64 * cross
            }
            StatisticKind::TildeInvC => c as u64 * self.inv + col,
            StatisticKind::InvUnderlying => self.inv,
            StatisticKind::Col => col,
        }
    }
}

/// Calls `visit` on every element of the block (or the whole group) in stream order.
pub(crate) fn scan(n: usize, c: usize, first: Option<usize>, mut visit: impl FnMut(&Window<'_>)) {
    let mut values = block_start(n, first);
    let mut colors = vec![0; n];
    let mut smaller_left = vec![0u64; n];
    loop {
        for j in 0..n {
            smaller_left[j] = values[..j].iter().filter(|&&a| a < values[j]).count() as u64;
        }
        let inv = stats::inv_count(&values);
        loop {
            visit(&Window {
                values: &values,
                colors: &colors,
                inv,
                smaller_left: &smaller_left,
            });
            if !next_colors(&mut colors, c) {
                break;
            }
        }
        if !next_permutation(&mut values) {
            break;
        }
        if first.is_some_and(|v| values[0] != v) {
            break;
        }
    }
}

/// Histogram of a statistic over a class, keyed by statistic value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Distribution {
    pub c: usize,
    pub n: usize,
    pub class: ClassKind,
    pub statistic: StatisticKind,
    /// Only values with a positive count appear.
    pub histogram: BTreeMap<u64, ExactInt>,
    pub total_count: ExactInt,
}

impl Distribution {
    /// Builds from dense counts indexed by statistic value.
    pub fn from_counts(
        n: usize,
        c: usize,
        class: ClassKind,
        statistic: StatisticKind,
        counts: &[u64],
    ) -> Self {
        let histogram: BTreeMap<u64, ExactInt> = counts
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0)
            .map(|(k, &m)| (k as u64, BigInt::from(m)))
            .collect();
        let total_count = histogram.values().sum();
        Distribution {
            c,
            n,
            class,
            statistic,
            histogram,
            total_count,
        }
    }

    pub fn count(&self, k: u64) -> ExactInt {
        self.histogram.get(&k).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Counts for `k = 0..=max`, zeros included.
    pub fn dense(&self) -> Vec<ExactInt> {
        (0..=self.statistic.max_value(self.n, self.c))
            .map(|k| self.count(k))
            .collect()
    }

    /// `Σ k · count(k)`.
    pub fn first_moment(&self) -> ExactInt {
        self.histogram
            .iter()
            .map(|(&k, m)| BigInt::from(k) * m)
            .sum()
    }

    /// Checks the structural invariants: counts positive, keys in range, total consistent.
    pub fn is_well_formed(&self) -> bool {
        let max = self.statistic.max_value(self.n, self.c);
        self.histogram
            .iter()
            .all(|(&k, m)| k <= max && is_nonnegative(m) && !m.is_zero())
            && self.histogram.values().sum::<ExactInt>() == self.total_count
    }
}

/// Dense counts over one first-value block (or everything when `first` is `None`).
///
/// Summing these over `first = 1..=n` gives the same counts as `first = None`.
pub fn partial_counts(
    n: usize,
    c: usize,
    class: ClassKind,
    statistic: StatisticKind,
    first: Option<usize>,
) -> Vec<u64> {
    let mut counts = vec![0u64; statistic.max_value(n, c) as usize + 1];
    scan(n, c, first, |w| {
        if class.contains_raw(c, w.values, w.colors) {
            counts[w.statistic(c, statistic) as usize] += 1;
        }
    });
    counts
}

pub fn distribution(
    n: usize,
    c: usize,
    class: ClassKind,
    statistic: StatisticKind,
    cap: u64,
) -> Result<Distribution, OracleError> {
    check_cap(n, c, cap)?;
    let counts = partial_counts(n, c, class, statistic, None);
    Ok(Distribution::from_counts(n, c, class, statistic, &counts))
}

/// `Σ k · #{σ in class : statistic(σ) = k}`.
pub fn total_statistic(
    n: usize,
    c: usize,
    class: ClassKind,
    statistic: StatisticKind,
    cap: u64,
) -> Result<ExactInt, OracleError> {
    Ok(distribution(n, c, class, statistic, cap)?.first_moment())
}

/// The elements of the class with statistic value `k`, in stream order.
pub fn members(
    n: usize,
    c: usize,
    class: ClassKind,
    statistic: StatisticKind,
    k: u64,
    cap: u64,
) -> Result<Vec<ColoredPermutation>, OracleError> {
    check_cap(n, c, cap)?;
    let mut found = Vec::new();
    scan(n, c, None, |w| {
        if class.contains_raw(c, w.values, w.colors) && w.statistic(c, statistic) == k {
            found.push(ColoredPermutation::from_parts_unchecked(
                c,
                w.values.to_vec(),
                w.colors.to_vec(),
            ));
        }
    });
    Ok(found)
}

/// `#{ℓ ∈ L^(c)_n : Σℓ = k}` for `k = 0..=max_inv_c(n, c)`.
pub fn code_sum_counts(n: usize, c: usize, cap: u64) -> Result<Vec<ExactInt>, OracleError> {
    let mut counts = vec![0u64; stats::max_inv_c_small(n, c) as usize + 1];
    for code in iter_codes(n, c, cap)? {
        counts[code.sum() as usize] += 1;
    }
    Ok(counts.into_iter().map(BigInt::from).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        }
    }
}

/// One checked identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReportEntry {
    pub identity: String,
    pub params: Vec<(String, String)>,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub entries: Vec<ReportEntry>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.status == Status::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ReportEntry> {
        self.entries.iter().filter(|e| e.status == Status::Fail)
    }
}

/// Accumulates the cases of one identity before it becomes a report entry.
struct Check {
    identity: &'static str,
    params: Vec<(String, String)>,
    cases: u64,
    failures: Vec<String>,
}

impl Check {
    fn new(identity: &'static str) -> Self {
        Check {
            identity,
            params: Vec::new(),
            cases: 0,
            failures: Vec::new(),
        }
    }

    fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.push((key.to_string(), value.to_string()));
        self
    }

    fn expect(&mut self, ok: bool, case: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(case());
        }
    }

    fn finish(self) -> ReportEntry {
        let status = if self.failures.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        };
        let mut detail = format!("{} cases", self.cases);
        if !self.failures.is_empty() {
            detail = format!(
                "{detail}, {} failed: {}",
                self.failures.len(),
                self.failures.join("; ")
            );
        }
        let mut params = self.params;
        params.push(("cases".to_string(), self.cases.to_string()));
        ReportEntry {
            identity: self.identity.to_string(),
            params,
            status,
            detail,
        }
    }
}

/// `(c, n)` pairs with `c <= VERIFY_MAX_COLORS` and `c^n n! <= budget`.
pub fn pairs_within(budget: u64) -> Vec<(usize, usize)> {
    let budget = BigInt::from(budget);
    let mut pairs = Vec::new();
    for c in 1..=VERIFY_MAX_COLORS {
        let mut n = 0;
        while group_order(n, c) <= budget {
            pairs.push((c, n));
            n += 1;
        }
    }
    pairs
}

fn describe_pairs(pairs: &[(usize, usize)]) -> String {
    let mut by_color: BTreeMap<usize, usize> = BTreeMap::new();
    for &(c, n) in pairs {
        let e = by_color.entry(c).or_insert(n);
        *e = (*e).max(n);
    }
    if by_color.is_empty() {
        return "none".to_string();
    }
    by_color
        .iter()
        .map(|(c, n)| format!("c={c}:n<={n}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn ints(v: &[u64]) -> Vec<ExactInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn padded(poly: &QPolynomial, max: u64) -> Vec<ExactInt> {
    (0..=max as i64).map(|k| poly.coeff(k)).collect()
}

/// Everything one pass over `G_{c,n}` collects.
struct Scan {
    size: u64,
    inv_c: Vec<u64>,
    tilde: Vec<u64>,
    derangements: Vec<u64>,
    involutions: Vec<u64>,
    maximisers: Vec<ColoredPermutation>,
}

fn scan_all(n: usize, c: usize) -> Scan {
    let max = stats::max_inv_c_small(n, c);
    let len = max as usize + 1;
    let mut out = Scan {
        size: 0,
        inv_c: vec![0; len],
        tilde: vec![0; len],
        derangements: vec![0; len],
        involutions: vec![0; len],
        maximisers: Vec::new(),
    };
    scan(n, c, None, |w| {
        let k = w.statistic(c, StatisticKind::InvC);
        out.size += 1;
        out.inv_c[k as usize] += 1;
        out.tilde[w.statistic(c, StatisticKind::TildeInvC) as usize] += 1;
        if special::is_derangement_raw(w.values, w.colors) {
            out.derangements[k as usize] += 1;
        }
        if special::is_involution_raw(c, w.values, w.colors) {
            out.involutions[k as usize] += 1;
        }
        if k == max {
            out.maximisers
                .push(ColoredPermutation::from_parts_unchecked(
                    c,
                    w.values.to_vec(),
                    w.colors.to_vec(),
                ));
        }
    });
    out
}

fn moment(counts: &[u64]) -> ExactInt {
    counts
        .iter()
        .enumerate()
        .map(|(k, &m)| BigInt::from(k as u64) * m)
        .sum()
}

/// Largest group order on which the code/permutation bijections are round-tripped.
pub const BIJECTION_BUDGET: u64 = 10_000;

fn check_bijections(n: usize, c: usize, check: &mut Check) {
    let max = stats::max_inv_c_small(n, c);
    let mut images = Vec::new();
    for code in iter_codes(n, c, BIJECTION_BUDGET).expect("within budget") {
        let sigma = lehmer::code_to_colored_perm(&code);
        let (a, b) = lehmer::split_color(&code);
        let (q, r) = lehmer::split_radix(&code);
        let decoded = lehmer::decode(&a);
        let ok = lehmer::perm_to_code(&sigma) == code
            && stats::tilde_inv_c_raw(c, sigma.values(), sigma.colors()) == code.sum()
            && lehmer::encode(&decoded) == a
            && lehmer::join_color(&a, &b, c).as_ref() == Ok(&code)
            && lehmer::join_radix(&q, &r, c).as_ref() == Ok(&code)
            && q.iter().all(|&x| x < c)
            && lehmer::complement(&lehmer::complement(&code)) == code
            && lehmer::complement(&code).sum() == max - code.sum()
            && code.sum() == c as u64 * a.sum() + b.iter().map(|&x| x as u64).sum::<u64>()
            && code.sum()
                == q.iter()
                    .enumerate()
                    .map(|(i, &x)| (i as u64 + 1) * x as u64)
                    .sum::<u64>()
                    + r.sum();
        check.expect(ok, || format!("c={c} n={n} code={code}"));
        images.push(sigma);
    }
    let count = images.len();
    images.sort_by(|x, y| (x.values(), x.colors()).cmp(&(y.values(), y.colors())));
    images.dedup();
    check.expect(
        images.len() == count && BigInt::from(count) == group_order(n, c),
        || format!("c={c} n={n}: code_to_colored_perm is not a bijection"),
    );
}

/// Runs every cross-check; enumeration-based ones cover the pairs with
/// `c^n n! <= budget`, formula-only ones always run.
pub fn verify_suite(budget: u64) -> Report {
    let pairs = pairs_within(budget);
    let coverage = describe_pairs(&pairs);
    let enumerated = |name| {
        Check::new(name)
            .param("pairs", &coverage)
            .param("budget", budget)
    };

    let mut order = enumerated("group_order");
    let mut gf = enumerated("inv_c_generating_function");
    let mut tilde = enumerated("tilde_inv_c_equidistribution");
    let mut codes = enumerated("lehmer_code_sums");
    let mut symmetry = enumerated("palindromic_support");
    let mut maximum = enumerated("sigma_max_unique_maximiser");
    let mut derangements = enumerated("derangement_count");
    let mut der_total = enumerated("derangement_inversion_total");
    let mut involutions = enumerated("involution_count");
    let mut inv_total = enumerated("involution_inversion_total");
    let mut totals = enumerated("total_inversions");
    let mut bijections = Check::new("lehmer_bijections")
        .param(
            "pairs",
            describe_pairs(&pairs_within(budget.min(BIJECTION_BUDGET))),
        )
        .param("budget", budget.min(BIJECTION_BUDGET));
    let mut macmahon = Check::new("maj_inv_equidistribution").param("budget", budget);

    for &(c, n) in &pairs {
        let max = stats::max_inv_c_small(n, c);
        let s = scan_all(n, c);
        let at = |what: &str| format!("{what} at c={c} n={n}");

        order.expect(BigInt::from(s.size) == group_order(n, c), || at("size"));
        let expected = padded(&gf_colored(n, c), max);
        gf.expect(ints(&s.inv_c) == expected, || at("inv_c histogram"));
        tilde.expect(s.tilde == s.inv_c, || at("tilde histogram"));
        let code_counts = code_sum_counts(n, c, budget).expect("pair is within budget");
        codes.expect(code_counts == expected, || at("code sums"));
        symmetry.expect(
            s.inv_c.iter().all(|&m| m > 0) && s.inv_c.iter().eq(s.inv_c.iter().rev()),
            || at("support"),
        );
        // With one color the all-(c-1) window is the identity; the maximiser is the reversal.
        let expected_max = if c == 1 {
            ColoredPermutation::from_parts_unchecked(1, (1..=n).rev().collect(), vec![0; n])
        } else {
            ColoredPermutation::sigma_max(c, n)
        };
        maximum.expect(s.maximisers == [expected_max], || at("maximiser"));

        let der_seen: u64 = s.derangements.iter().sum();
        derangements.expect(
            BigInt::from(der_seen) == special::derangement_count(n, c)
                && special::derangement_count(n, c) == special::derangement_count_recurrence(n, c),
            || at("derangements"),
        );
        let terms = special::t_colored_terms(n, c);
        der_total.expect(
            moment(&s.derangements) == terms.total() && terms.total() == special::t_colored(n, c),
            || at("derangement total"),
        );
        let inv_seen: u64 = s.involutions.iter().sum();
        involutions.expect(
            BigInt::from(inv_seen) == special::involution_count(n, c)
                && special::involution_count(n, c) == special::involution_count_recurrence(n, c),
            || at("involutions"),
        );
        inv_total.expect(
            moment(&s.involutions) == special::involution_inv_total(n, c),
            || at("involution total"),
        );
        totals.expect(
            moment(&s.inv_c) == mahonian::total_inversions_closed(n, c),
            || at("first moment"),
        );
        if group_order(n, c) <= BigInt::from(BIJECTION_BUDGET) {
            check_bijections(n, c, &mut bijections);
        }
        if c == 1 {
            let mut by_maj = vec![0u64; max as usize + 1];
            let mut by_inv = vec![0u64; max as usize + 1];
            scan(n, 1, None, |w| {
                by_maj[stats::maj_count(w.values) as usize] += 1;
                by_inv[w.inv as usize] += 1;
            });
            macmahon.expect(by_maj == by_inv, || at("maj vs inv"));
        }
    }

    let mut entries: Vec<ReportEntry> = [
        order,
        gf,
        tilde,
        codes,
        symmetry,
        maximum,
        derangements,
        der_total,
        involutions,
        inv_total,
        totals,
        bijections,
        macmahon,
    ]
    .into_iter()
    .map(Check::finish)
    .collect();
    if pairs.is_empty() {
        entries.push(ReportEntry {
            identity: "coverage".to_string(),
            params: vec![("budget".to_string(), budget.to_string())],
            status: Status::Pass,
            detail: "no group fits the budget; enumeration checks are empty".to_string(),
        });
    }
    entries.extend(formula_checks().into_iter().map(Check::finish));
    Report { entries }
}

fn formula_checks() -> Vec<Check> {
    let mut methods = Check::new("mahonian_method_agreement")
        .param("n", "0..=8")
        .param("c", "1..=4");
    let mut row_sums = Check::new("mahonian_row_sums")
        .param("n", "0..=8")
        .param("c", "1..=4");
    let mut palindromes = Check::new("mahonian_symmetry")
        .param("n", "0..=8")
        .param("c", "1..=4");
    let mut partitions = Check::new("bounded_partition_generating_function")
        .param("n", "0..=8")
        .param("c", "1..=4");
    for n in 0..=8 {
        for c in 1..=4 {
            let reference = colored_row(MahonianMethod::GenFunc, n, c);
            for method in MahonianMethod::ALL {
                let row = colored_row(method, n, c);
                let agree = row.iter().zip(&reference).all(|(x, y)| x == y)
                    && (method == MahonianMethod::KnuthNetto || row.len() == reference.len());
                methods.expect(agree, || format!("{method} at c={c} n={n}"));
            }
            row_sums.expect(
                reference.iter().sum::<ExactInt>() == group_order(n, c),
                || format!("c={c} n={n}"),
            );
            palindromes.expect(reference.iter().eq(reference.iter().rev()), || {
                format!("c={c} n={n}")
            });
            let product =
                QPolynomial::product((1..=n).map(|i| QPolynomial::q_integer(c).dilate(i)));
            let max = product.degree().unwrap_or(0);
            let dp = mahonian::p_bounded_row(n, c - 1, max);
            partitions.expect(dp == padded(&product, max as u64), || {
                format!("c={c} n={n}")
            });
        }
    }

    let mut compositions = Check::new("bounded_composition_inclusion_exclusion")
        .param("parts", "0..=8")
        .param("c", "1..=5")
        .param("total", "0..=40");
    for c in 1..=5 {
        for parts in 0..=8 {
            let power = QPolynomial::product((0..parts).map(|_| QPolynomial::q_integer(c)));
            for total in 0..=40u64 {
                compositions.expect(
                    mahonian::com_bounded(parts, total, c) == power.coeff(total as i64),
                    || format!("parts={parts} total={total} c={c}"),
                );
            }
        }
    }

    let mut totals = Check::new("total_inversion_formulas")
        .param("n", "0..=30")
        .param("c", "1..=10");
    let mut derangements = Check::new("derangement_formulas")
        .param("n", "0..=30")
        .param("c", "1..=10");
    let mut involutions = Check::new("involution_formulas")
        .param("n", "0..=30")
        .param("c", "1..=10");
    for c in 1..=10 {
        for n in 0..=30 {
            let closed = mahonian::total_inversions_closed(n, c);
            totals.expect(
                closed == mahonian::total_inversions_recurrence(n, c)
                    && closed == mahonian::total_inversions_ratio_chain(n, c),
                || format!("c={c} n={n}"),
            );
            derangements.expect(
                special::derangement_count(n, c) == special::derangement_count_recurrence(n, c),
                || format!("c={c} n={n}"),
            );
            involutions.expect(
                special::involution_count(n, c) == special::involution_count_recurrence(n, c),
                || format!("c={c} n={n}"),
            );
        }
    }

    let mut classical = Check::new("classical_specializations").param("n", "0..=12");
    for n in 0..=12 {
        classical.expect(special::t_classical(n) == special::t_colored(n, 1), || {
            format!("derangement total n={n}")
        });
        classical.expect(
            special::involution_inv_total_classical(n) == special::involution_inv_total(n, 1),
            || format!("involution total n={n}"),
        );
        let expected = mahonian::total_inversions_closed(n, 1).to_u64();
        classical.expect(expected.is_some(), || format!("I_(1,{n}) overflow"));
    }

    vec![
        methods,
        row_sums,
        palindromes,
        partitions,
        compositions,
        totals,
        derangements,
        involutions,
        classical,
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_groups() {
        let all: Vec<_> = enumerate_group(1, 1, 10).unwrap().collect();
        assert_eq!(all, [ColoredPermutation::identity(1, 1)]);
        assert_eq!(enumerate_group(2, 2, 10).unwrap().count(), 8);
        assert_eq!(enumerate_group(2, 3, 100).unwrap().count(), 18);
        assert_eq!(enumerate_group(3, 2, 100).unwrap().count(), 48);
        assert_eq!(enumerate_group(0, 5, 1).unwrap().count(), 1);
    }

    #[test]
    fn stream_order() {
        let all: Vec<_> = enumerate_group(2, 2, 10)
            .unwrap()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(
            all,
            [
                "1 2",
                "1 2[1]",
                "1[1] 2",
                "1[1] 2[1]",
                "2 1",
                "2 1[1]",
                "2[1] 1",
                "2[1] 1[1]"
            ]
        );
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(
            enumerate_group(3, 2, 47).unwrap_err(),
            OracleError::CapExceeded {
                size: BigInt::from(48),
                cap: 47
            }
        );
        assert!(distribution(3, 2, ClassKind::All, StatisticKind::InvC, 47).is_err());
    }

    #[test]
    fn blocks_concatenate_to_stream() {
        let whole: Vec<_> = enumerate_group(3, 2, 100).unwrap().collect();
        let blocks: Vec<_> = (1..=3)
            .flat_map(|v| enumerate_block(3, 2, v, 100).unwrap())
            .collect();
        assert_eq!(whole, blocks);
    }

    #[test]
    fn scan_matches_iterator() {
        let mut from_scan = Vec::new();
        scan(3, 3, None, |w| {
            from_scan.push((
                w.values.to_vec(),
                w.colors.to_vec(),
                w.statistic(3, StatisticKind::InvC),
            ));
        });
        let from_iter: Vec<_> = enumerate_group(3, 3, 1000)
            .unwrap()
            .map(|s| {
                (
                    s.values().to_vec(),
                    s.colors().to_vec(),
                    stats::inv_c_raw(3, s.values(), s.colors()),
                )
            })
            .collect();
        assert_eq!(from_scan, from_iter);
    }

    #[test]
    fn g23_distribution() {
        let d = distribution(3, 2, ClassKind::All, StatisticKind::InvC, 100).unwrap();
        assert_eq!(d.dense(), ints(&[1, 3, 5, 7, 8, 8, 7, 5, 3, 1]));
        assert_eq!(d.total_count, BigInt::from(48));
        assert!(d.is_well_formed());
        let t = distribution(3, 2, ClassKind::All, StatisticKind::TildeInvC, 100).unwrap();
        assert_eq!(t.histogram, d.histogram);
    }

    #[test]
    fn g22_derangements() {
        let d = distribution(2, 2, ClassKind::Derangements, StatisticKind::InvC, 100).unwrap();
        assert_eq!(d.total_count, BigInt::from(5));
        assert_eq!(d.first_moment(), BigInt::from(12));
        let keys: Vec<_> = d
            .histogram
            .iter()
            .map(|(&k, m)| (k, m.to_u64().unwrap()))
            .collect();
        assert_eq!(keys, [(1, 1), (2, 2), (3, 1), (4, 1)]);
    }

    #[test]
    fn totals() {
        assert_eq!(
            total_statistic(2, 2, ClassKind::All, StatisticKind::InvC, 100),
            Ok(BigInt::from(16))
        );
        assert_eq!(
            total_statistic(0, 3, ClassKind::All, StatisticKind::InvC, 100),
            Ok(BigInt::zero())
        );
        assert_eq!(
            total_statistic(2, 2, ClassKind::Derangements, StatisticKind::InvC, 100),
            Ok(BigInt::from(12))
        );
    }

    #[test]
    fn members_by_value() {
        let ones: Vec<_> = members(3, 2, ClassKind::All, StatisticKind::InvC, 1, 100)
            .unwrap()
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(ones, ["1[1] 2 3", "1 3 2", "2 1 3"]);
    }

    #[test]
    fn budget_pairs() {
        let pairs = pairs_within(10_000);
        for needed in [(1, 6), (2, 4), (3, 3), (4, 3)] {
            assert!(pairs.contains(&needed), "{needed:?}");
        }
        assert!(!pairs.contains(&(1, 8)));
        assert!(pairs_within(0).is_empty());
        assert!(pairs_within(1_000_000).contains(&(2, 7)));
    }

    #[test]
    fn small_suite_passes() {
        let report = verify_suite(2_000);
        let failed: Vec<_> = report.failures().collect();
        assert!(failed.is_empty(), "{failed:#?}");
    }

    #[test]
    fn empty_budget_suite() {
        let report = verify_suite(0);
        assert!(report.passed());
        assert!(report.entries.iter().any(|e| e.identity == "coverage"));
    }
}
