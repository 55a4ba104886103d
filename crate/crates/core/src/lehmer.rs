//! Classical and colored Lehmer codes.
//!
//! Codes are value indexed: entry `i` of the code of `π` counts the values
//! smaller than `i` that sit to the right of `i`. A colored code relaxes the
//! bound `ℓ_i < i` to `ℓ_i < c·i`, so `|L^(c)_n| = c^n n!`.
//!
//! Text form is `(0,1,2,0)`.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::arith::group_order;
use crate::oracle::OracleError;
use crate::perm::ColoredPermutation;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CodeError {
    NoColors,
    EntryOutOfRange {
        index: usize,
        entry: usize,
        bound: usize,
    },
    LengthMismatch {
        expected: usize,
        found: usize,
    },
    Malformed(String),
}

impl fmt::Display for CodeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CodeError::NoColors => write!(f, "number of colors must be at least 1"),
            CodeError::EntryOutOfRange {
                index,
                entry,
                bound,
            } => {
                write!(f, "entry {index} is {entry}, must be below {bound}")
            }
            CodeError::LengthMismatch { expected, found } => {
                write!(f, "expected {expected} entries, found {found}")
            }
            CodeError::Malformed(text) => write!(f, "malformed code {text:?}"),
        }
    }
}

impl core::error::Error for CodeError {}

/// A classical Lehmer code, `0 <= ℓ_i < i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LehmerCode(Vec<usize>);

impl LehmerCode {
    pub fn new(entries: Vec<usize>) -> Result<Self, CodeError> {
        check_bounds(&entries, 1)?;
        Ok(LehmerCode(entries))
    }

    pub fn zeros(n: usize) -> Self {
        LehmerCode(vec![0; n])
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }
}

/// A colored Lehmer code, `0 <= ℓ_i < c·i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColoredLehmerCode {
    c: usize,
    entries: Vec<usize>,
}

impl ColoredLehmerCode {
    pub fn new(c: usize, entries: Vec<usize>) -> Result<Self, CodeError> {
        if c == 0 {
            return Err(CodeError::NoColors);
        }
        check_bounds(&entries, c)?;
        Ok(ColoredLehmerCode { c, entries })
    }

    pub fn zeros(c: usize, n: usize) -> Self {
        assert!(c >= 1);
        ColoredLehmerCode {
            c,
            entries: vec![0; n],
        }
    }

    /// Parses `(0,1,2,0)`; `()` is the empty code.
    pub fn parse(text: &str, c: usize) -> Result<Self, CodeError> {
        ColoredLehmerCode::new(c, parse_entries(text)?)
    }

    pub fn c(&self) -> usize {
        self.c
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn sum(&self) -> u64 {
        self.entries.iter().map(|&e| e as u64).sum()
    }
}

fn check_bounds(entries: &[usize], c: usize) -> Result<(), CodeError> {
    for (i, &entry) in entries.iter().enumerate() {
        let bound = c * (i + 1);
        if entry >= bound {
            return Err(CodeError::EntryOutOfRange {
                index: i + 1,
                entry,
                bound,
            });
        }
    }
    Ok(())
}

fn parse_entries(text: &str) -> Result<Vec<usize>, CodeError> {
    let malformed = || CodeError::Malformed(text.to_string());
    let inner = text
        .trim()
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(malformed)?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|part| part.trim().parse::<usize>().map_err(|_| malformed()))
        .collect()
}

fn write_entries(f: &mut fmt::Formatter<'_>, entries: &[usize]) -> fmt::Result {
    f.write_str("(")?;
    for (i, e) in entries.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{e}")?;
    }
    f.write_str(")")
}

impl fmt::Display for LehmerCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_entries(f, &self.0)
    }
}

impl fmt::Display for ColoredLehmerCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_entries(f, &self.entries)
    }
}

/// Lehmer code of a classical permutation of `1..=n`.
pub fn encode(pi: &[usize]) -> LehmerCode {
    let n = pi.len();
    let mut position = vec![0; n + 1];
    for (p, &v) in pi.iter().enumerate() {
        position[v] = p;
    }
    let entries = (1..=n)
        .map(|i| (1..i).filter(|&j| position[j] > position[i]).count())
        .collect();
    LehmerCode(entries)
}

/// Rebuilds the permutation by inserting `i` at the `ℓ_i`-th slot from the right.
pub fn decode(code: &LehmerCode) -> Vec<usize> {
    let mut pi = Vec::with_capacity(code.n());
    for (i, &entry) in code.entries().iter().enumerate() {
        let at = pi.len() - entry;
        pi.insert(at, i + 1);
    }
    pi
}

/// `ℓ_i ↦ c·i - 1 - ℓ_i`; sends entry sum `k` to `max_inv_c(n, c) - k`.
pub fn complement(code: &ColoredLehmerCode) -> ColoredLehmerCode {
    let c = code.c;
    let entries = code
        .entries
        .iter()
        .enumerate()
        .map(|(i, &e)| c * (i + 1) - 1 - e)
        .collect();
    ColoredLehmerCode { c, entries }
}

/// `ℓ_i = c·a_i + b_i` with `0 <= b_i < c`; `a` is a classical code.
pub fn split_color(code: &ColoredLehmerCode) -> (LehmerCode, Vec<usize>) {
    let c = code.c;
    let (a, b) = code.entries.iter().map(|&e| (e / c, e % c)).unzip();
    (LehmerCode(a), b)
}

/// Inverse of [`split_color`].
pub fn join_color(a: &LehmerCode, b: &[usize], c: usize) -> Result<ColoredLehmerCode, CodeError> {
    if c == 0 {
        return Err(CodeError::NoColors);
    }
    if a.n() != b.len() {
        return Err(CodeError::LengthMismatch {
            expected: a.n(),
            found: b.len(),
        });
    }
    if let Some((i, &entry)) = b.iter().enumerate().find(|(_, &k)| k >= c) {
        return Err(CodeError::EntryOutOfRange {
            index: i + 1,
            entry,
            bound: c,
        });
    }
    let entries = a
        .entries()
        .iter()
        .zip(b)
        .map(|(&x, &y)| c * x + y)
        .collect();
    Ok(ColoredLehmerCode { c, entries })
}

/// `ℓ_i = q_i·i + r_i` with `0 <= r_i < i`, so `0 <= q_i < c` and `r` is a classical code.
///
/// `Σ i·q_i` is a partition into parts at most `n`, each used fewer than `c` times.
pub fn split_radix(code: &ColoredLehmerCode) -> (Vec<usize>, LehmerCode) {
    let (q, r) = code
        .entries
        .iter()
        .enumerate()
        .map(|(i, &e)| (e / (i + 1), e % (i + 1)))
        .unzip();
    (q, LehmerCode(r))
}

/// Inverse of [`split_radix`].
pub fn join_radix(q: &[usize], r: &LehmerCode, c: usize) -> Result<ColoredLehmerCode, CodeError> {
    if q.len() != r.n() {
        return Err(CodeError::LengthMismatch {
            expected: r.n(),
            found: q.len(),
        });
    }
    let entries = q
        .iter()
        .zip(r.entries())
        .enumerate()
        .map(|(i, (&qi, &ri))| qi * (i + 1) + ri)
        .collect();
    ColoredLehmerCode::new(c, entries)
}

/// Parts of the partition carried by the quotient vector of [`split_radix`],
/// largest first.
pub fn radix_partition(q: &[usize]) -> Vec<usize> {
    let mut parts = Vec::new();
    for (i, &times) in q.iter().enumerate().rev() {
        parts.extend(core::iter::repeat_n(i + 1, times));
    }
    parts
}

/// Colored permutation with `|σ| = decode(a)` where value `i` carries color `b_i`.
///
/// `ĩnv_c` of the result equals the entry sum of `code`.
pub fn code_to_colored_perm(code: &ColoredLehmerCode) -> ColoredPermutation {
    let (a, b) = split_color(code);
    let values = decode(&a);
    let colors = values.iter().map(|&v| b[v - 1]).collect();
    ColoredPermutation::from_parts_unchecked(code.c, values, colors)
}

/// Inverse of [`code_to_colored_perm`].
pub fn perm_to_code(sigma: &ColoredPermutation) -> ColoredLehmerCode {
    let a = encode(sigma.values());
    let mut b = vec![0; sigma.n()];
    for (&v, &k) in sigma.values().iter().zip(sigma.colors()) {
        b[v - 1] = k;
    }
    let c = sigma.c();
    let entries = a
        .entries()
        .iter()
        .zip(&b)
        .map(|(&x, &y)| c * x + y)
        .collect();
    ColoredLehmerCode { c, entries }
}

/// Every code in `L^(c)_n`, lexicographic with the last entry varying fastest.
pub fn iter_codes(n: usize, c: usize, cap: u64) -> Result<CodeIter, OracleError> {
    iter_codes_with_prefix(n, c, &[], cap)
}

/// The codes of `L^(c)_n` whose leading entries equal `prefix`, in stream order.
///
/// Concatenating the streams for every valid prefix of a fixed length gives
/// exactly the [`iter_codes`] stream.
pub fn iter_codes_with_prefix(
    n: usize,
    c: usize,
    prefix: &[usize],
    cap: u64,
) -> Result<CodeIter, OracleError> {
    assert!(c >= 1, "c must be at least 1");
    let size = group_order(n, c);
    if size > cap.into() {
        return Err(OracleError::CapExceeded { size, cap });
    }
    let valid = prefix.len() <= n && check_bounds(prefix, c).is_ok();
    let mut current = vec![0; n];
    current[..prefix.len().min(n)].copy_from_slice(&prefix[..prefix.len().min(n)]);
    Ok(CodeIter {
        c,
        fixed: prefix.len(),
        current,
        done: !valid,
    })
}

/// Mixed-radix counter over radices `c·1, …, c·n`.
#[derive(Clone, Debug)]
pub struct CodeIter {
    c: usize,
    fixed: usize,
    current: Vec<usize>,
    done: bool,
}

impl CodeIter {
    fn advance(&mut self) {
        for i in (self.fixed..self.current.len()).rev() {
            if self.current[i] + 1 < self.c * (i + 1) {
                self.current[i] += 1;
                return;
            }
            self.current[i] = 0;
        }
        self.done = true;
    }
}

impl Iterator for CodeIter {
    type Item = ColoredLehmerCode;

    fn next(&mut self) -> Option<ColoredLehmerCode> {
        if self.done {
            return None;
        }
        let code = ColoredLehmerCode {
            c: self.c,
            entries: self.current.clone(),
        };
        self.advance();
        Some(code)
    }
}
