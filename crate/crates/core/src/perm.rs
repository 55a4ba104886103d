//! Colored permutations of `Σ_{c,n} = { i^[j] : 1 <= i <= n, 0 <= j < c }`.
//!
//! A colored permutation commutes with the color shift,
//! `σ(i^[j]) = σ(i)^[j]`, so it is determined by its window: the images of
//! the uncolored letters `1..=n`. Only that window is stored.
//!
//! The text form is space separated `v[k]` tokens, with `[0]` omitted:
//! `"3[1] 2 1[2] 4[1]"`.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// A letter `value^[color]` of the colored alphabet.
///
/// Ordering is by value, then color.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColoredElement {
    pub value: usize,
    pub color: usize,
}

impl ColoredElement {
    pub fn new(value: usize, color: usize) -> Self {
        ColoredElement { value, color }
    }
}

impl fmt::Display for ColoredElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.color == 0 {
            write!(f, "{}", self.value)
        } else {
            write!(f, "{}[{}]", self.value, self.color)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PermError {
    NoColors,
    BadToken(String),
    ValueOutOfRange {
        value: usize,
        n: usize,
    },
    DuplicateValue(usize),
    ColorOutOfRange {
        position: usize,
        color: usize,
        c: usize,
    },
    LengthMismatch {
        expected: usize,
        found: usize,
    },
    ShapeMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
}

impl fmt::Display for PermError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PermError::NoColors => write!(f, "number of colors must be at least 1"),
            PermError::BadToken(t) => write!(f, "malformed token {t:?}, expected v or v[k]"),
            PermError::ValueOutOfRange { value, n } => {
                write!(f, "value {value} outside 1..={n}")
            }
            PermError::DuplicateValue(v) => write!(f, "value {v} appears more than once"),
            PermError::ColorOutOfRange { position, color, c } => {
                write!(
                    f,
                    "color {color} at position {position} is not below c = {c}"
                )
            }
            PermError::LengthMismatch { expected, found } => {
                write!(f, "expected {expected} entries, found {found}")
            }
            PermError::ShapeMismatch { left, right } => write!(
                f,
                "(c, n) mismatch: ({}, {}) vs ({}, {})",
                left.0, left.1, right.0, right.1
            ),
        }
    }
}

impl core::error::Error for PermError {}

/// An element of `G_{c,n}`, stored as its one-line window.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColoredPermutation {
    c: usize,
    values: Vec<usize>,
    colors: Vec<usize>,
}

impl ColoredPermutation {
    /// Checks that `values` is a permutation of `1..=n` and every color is below `c`.
    pub fn new(c: usize, values: Vec<usize>, colors: Vec<usize>) -> Result<Self, PermError> {
        if c == 0 {
            return Err(PermError::NoColors);
        }
        let n = values.len();
        if colors.len() != n {
            return Err(PermError::LengthMismatch {
                expected: n,
                found: colors.len(),
            });
        }
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v > n {
                return Err(PermError::ValueOutOfRange { value: v, n });
            }
            if seen[v] {
                return Err(PermError::DuplicateValue(v));
            }
            seen[v] = true;
        }
        if let Some((position, &color)) = colors.iter().enumerate().find(|(_, &k)| k >= c) {
            return Err(PermError::ColorOutOfRange {
                position: position + 1,
                color,
                c,
            });
        }
        Ok(ColoredPermutation { c, values, colors })
    }

    /// Caller guarantees the invariants.
    pub(crate) fn from_parts_unchecked(c: usize, values: Vec<usize>, colors: Vec<usize>) -> Self {
        debug_assert!(ColoredPermutation::new(c, values.clone(), colors.clone()).is_ok());
        ColoredPermutation { c, values, colors }
    }

    pub fn identity(c: usize, n: usize) -> Self {
        assert!(c >= 1, "c must be at least 1");
        ColoredPermutation {
            c,
            values: (1..=n).collect(),
            colors: vec![0; n],
        }
    }

    /// `1^[c-1] 2^[c-1] … n^[c-1]`, the unique maximiser of `inv_c`.
    pub fn sigma_max(c: usize, n: usize) -> Self {
        assert!(c >= 1, "c must be at least 1");
        ColoredPermutation {
            c,
            values: (1..=n).collect(),
            colors: vec![c - 1; n],
        }
    }

    /// Embeds a classical permutation with every color 0.
    pub fn uncolored(c: usize, values: Vec<usize>) -> Result<Self, PermError> {
        let n = values.len();
        ColoredPermutation::new(c, values, vec![0; n])
    }

    /// Parses the `v[k]` text form; `n` is the number of tokens.
    pub fn parse(text: &str, c: usize) -> Result<Self, PermError> {
        let mut values = Vec::new();
        let mut colors = Vec::new();
        for token in text.split_whitespace() {
            let (v, k) = parse_token(token)?;
            values.push(v);
            colors.push(k);
        }
        ColoredPermutation::new(c, values, colors)
    }

    /// Like [`ColoredPermutation::parse`] but also requires exactly `n` tokens.
    pub fn parse_exact(text: &str, c: usize, n: usize) -> Result<Self, PermError> {
        let found = text.split_whitespace().count();
        if found != n {
            return Err(PermError::LengthMismatch { expected: n, found });
        }
        ColoredPermutation::parse(text, c)
    }

    pub fn c(&self) -> usize {
        self.c
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    /// The underlying permutation `|σ|`.
    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// Window entry at 1-based position `i`.
    pub fn entry(&self, i: usize) -> ColoredElement {
        ColoredElement::new(self.values[i - 1], self.colors[i - 1])
    }

    /// `σ(x)`, using `σ(i^[j]) = σ(i)^[j]`.
    pub fn apply(&self, x: ColoredElement) -> ColoredElement {
        assert!(
            (1..=self.n()).contains(&x.value) && x.color < self.c,
            "element {x} is not in the alphabet for c = {}, n = {}",
            self.c,
            self.n()
        );
        let i = x.value - 1;
        ColoredElement::new(self.values[i], (self.colors[i] + x.color) % self.c)
    }

    /// `self ∘ other`, i.e. apply `other` first.
    pub fn compose(&self, other: &ColoredPermutation) -> Result<ColoredPermutation, PermError> {
        if self.c != other.c || self.n() != other.n() {
            return Err(PermError::ShapeMismatch {
                left: (self.c, self.n()),
                right: (other.c, other.n()),
            });
        }
        let (values, colors) = other
            .values
            .iter()
            .zip(&other.colors)
            .map(|(&v, &k)| (self.values[v - 1], (self.colors[v - 1] + k) % self.c))
            .unzip();
        Ok(ColoredPermutation {
            c: self.c,
            values,
            colors,
        })
    }

    pub fn inverse(&self) -> ColoredPermutation {
        let n = self.n();
        let mut values = vec![0; n];
        let mut colors = vec![0; n];
        // σ(i) = v^[k]  ⇒  σ⁻¹(v) = i^[-k]
        for (i, (&v, &k)) in self.values.iter().zip(&self.colors).enumerate() {
            values[v - 1] = i + 1;
            colors[v - 1] = (self.c - k) % self.c;
        }
        ColoredPermutation {
            c: self.c,
            values,
            colors,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.values.iter().enumerate().all(|(i, &v)| v == i + 1)
            && self.colors.iter().all(|&k| k == 0)
    }

    /// Orbits of `σ` on all `c·n` letters.
    ///
    /// Each cycle starts at its smallest letter and cycles are sorted by that
    /// letter.
    pub fn cycle_decomposition(&self) -> Vec<Cycle> {
        let (c, n) = (self.c, self.n());
        let slot = |x: ColoredElement| (x.value - 1) * c + x.color;
        let mut visited = vec![false; c * n];
        let mut cycles = Vec::new();
        for value in 1..=n {
            for color in 0..c {
                let start = ColoredElement::new(value, color);
                if visited[slot(start)] {
                    continue;
                }
                let mut cycle = Vec::new();
                let mut x = start;
                while !visited[slot(x)] {
                    visited[slot(x)] = true;
                    cycle.push(x);
                    x = self.apply(x);
                }
                cycles.push(Cycle(cycle));
            }
        }
        cycles
    }

    /// `σ² = id`.
    pub fn is_involution(&self) -> bool {
        self.values
            .iter()
            .zip(&self.colors)
            .enumerate()
            .all(|(i, (&v, &k))| {
                self.values[v - 1] == i + 1 && (self.colors[v - 1] + k).is_multiple_of(self.c)
            })
    }

    /// No window position `i` holds the uncolored letter `i`.
    pub fn is_derangement(&self) -> bool {
        !self
            .values
            .iter()
            .zip(&self.colors)
            .enumerate()
            .any(|(i, (&v, &k))| v == i + 1 && k == 0)
    }

    /// Display adaptor that draws colors as combining overlines instead of `[k]`.
    pub fn bars(&self) -> Bars<'_> {
        Bars(self)
    }
}

fn parse_token(token: &str) -> Result<(usize, usize), PermError> {
    let bad = || PermError::BadToken(token.to_string());
    let digits = |s: &str| -> Result<usize, PermError> {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        s.parse().map_err(|_| bad())
    };
    match token.split_once('[') {
        None => Ok((digits(token)?, 0)),
        Some((v, rest)) => {
            let k = rest.strip_suffix(']').ok_or_else(bad)?;
            Ok((digits(v)?, digits(k)?))
        }
    }
}

impl fmt::Display for ColoredPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", ColoredElement::new(self.values[i], self.colors[i]))?;
        }
        Ok(())
    }
}

pub struct Bars<'a>(&'a ColoredPermutation);

impl fmt::Display for Bars<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sigma = self.0;
        for i in 0..sigma.n() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", sigma.values[i])?;
            for _ in 0..sigma.colors[i] {
                f.write_str("\u{0305}")?;
            }
        }
        Ok(())
    }
}

/// One orbit of a colored permutation, listed from its smallest letter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cycle(pub Vec<ColoredElement>);

impl Cycle {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn elements(&self) -> &[ColoredElement] {
        &self.0
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;

    fn p(text: &str, c: usize) -> ColoredPermutation {
        ColoredPermutation::parse(text, c).unwrap()
    }

    fn cycles_text(sigma: &ColoredPermutation) -> String {
        sigma
            .cycle_decomposition()
            .iter()
            .map(|z| format!("{z}"))
            .collect()
    }

    #[test]
    fn parse_window_of_worked_example() {
        let sigma = p("3[1] 2 1[2] 4[1]", 3);
        assert_eq!(sigma.values(), &[3, 2, 1, 4]);
        assert_eq!(sigma.colors(), &[1, 0, 2, 1]);
        assert_eq!(sigma.to_string(), "3[1] 2 1[2] 4[1]");
    }

    #[test]
    fn parse_identity_and_explicit_zero() {
        assert!(p("1 2 3", 1).is_identity());
        assert_eq!(p("1[0] 2[0]", 2).to_string(), "1 2");
    }

    #[test]
    fn parse_errors() {
        assert_eq!(
            ColoredPermutation::parse("1[3] 2", 3),
            Err(PermError::ColorOutOfRange {
                position: 1,
                color: 3,
                c: 3
            })
        );
        assert_eq!(
            ColoredPermutation::parse("1 1", 2),
            Err(PermError::DuplicateValue(1))
        );
        assert_eq!(
            ColoredPermutation::parse("1 3", 2),
            Err(PermError::ValueOutOfRange { value: 3, n: 2 })
        );
        assert_eq!(
            ColoredPermutation::parse_exact("1 2", 2, 3),
            Err(PermError::LengthMismatch {
                expected: 3,
                found: 2
            })
        );
        for bad in ["1[", "[1]", "1[x]", "a", "1[1]]", "-1", "1]"] {
            assert!(
                matches!(
                    ColoredPermutation::parse(bad, 3),
                    Err(PermError::BadToken(_))
                ),
                "{bad}"
            );
        }
        assert_eq!(ColoredPermutation::parse("1", 0), Err(PermError::NoColors));
    }

    #[test]
    fn empty_permutation() {
        let e = p("", 4);
        assert_eq!(e.n(), 0);
        assert!(e.is_identity());
        assert!(e.is_involution());
        assert!(e.is_derangement());
        assert_eq!(e.to_string(), "");
        assert!(e.cycle_decomposition().is_empty());
    }

    #[test]
    fn format_examples() {
        assert_eq!(ColoredPermutation::identity(2, 2).to_string(), "1 2");
        assert_eq!(ColoredPermutation::sigma_max(3, 2).to_string(), "1[2] 2[2]");
        assert_eq!(
            p("3[1] 2 1[2]", 3).bars().to_string(),
            "3\u{305} 2 1\u{305}\u{305}"
        );
    }

    #[test]
    fn apply_examples() {
        let sigma = p("3[1] 2 1[2] 4[1]", 3);
        // bottom row of the two-line form, second block
        assert_eq!(
            sigma.apply(ColoredElement::new(1, 1)),
            ColoredElement::new(3, 2)
        );
        assert_eq!(
            sigma.apply(ColoredElement::new(3, 1)),
            ColoredElement::new(1, 0)
        );
        assert_eq!(
            sigma.apply(ColoredElement::new(4, 2)),
            ColoredElement::new(4, 0)
        );
        assert_eq!(
            p("2[1] 1", 2).apply(ColoredElement::new(2, 0)),
            ColoredElement::new(1, 0)
        );
        let id = ColoredPermutation::identity(3, 2);
        assert_eq!(
            id.apply(ColoredElement::new(2, 2)),
            ColoredElement::new(2, 2)
        );
    }

    #[test]
    fn compose_and_inverse_examples() {
        let sigma = p("2 1[1]", 2);
        let tau = p("2[1] 1", 2);
        // σ(τ(1)) = σ(2^[1]) = 1^[2] = 1 and σ(τ(2)) = σ(1) = 2, so τ = σ⁻¹.
        assert!(sigma.compose(&tau).unwrap().is_identity());
        assert_eq!(sigma.inverse(), tau);
        assert_eq!(tau.inverse(), sigma);
        assert!(!tau.is_involution());

        let id = ColoredPermutation::identity(2, 2);
        assert_eq!(id.compose(&tau).unwrap(), tau);
        assert_eq!(id.inverse(), id);

        let inv = p("2 1 4[2] 3[1] 5", 3);
        assert!(inv.compose(&inv).unwrap().is_identity());
        assert_eq!(inv.inverse(), inv);

        assert!(matches!(
            sigma.compose(&ColoredPermutation::identity(3, 2)),
            Err(PermError::ShapeMismatch { .. })
        ));
    }

    #[test]
    fn cycles_of_nine_cycle_example() {
        let sigma = p("5[2] 2 1[1] 4[2] 3[1]", 3);
        assert_eq!(
            cycles_text(&sigma),
            "(1 5[2] 3 1[1] 5 3[1] 1[2] 5[1] 3[2])(2)(2[1])(2[2])(4 4[2] 4[1])"
        );
    }

    #[test]
    fn cycles_of_involution_example() {
        let sigma = p("2 1 4[2] 3[1] 5", 3);
        let cycles = sigma.cycle_decomposition();
        assert_eq!(cycles.len(), 9);
        assert!(cycles.iter().all(|z| z.len() <= 2));
        assert_eq!(
            cycles_text(&sigma),
            "(1 2)(1[1] 2[1])(1[2] 2[2])(3 4[2])(3[1] 4)(3[2] 4[1])(5)(5[1])(5[2])"
        );
        assert!(sigma.is_involution());
    }

    #[test]
    fn identity_cycles() {
        assert_eq!(
            cycles_text(&ColoredPermutation::identity(2, 1)),
            "(1)(1[1])"
        );
    }

    #[test]
    fn involution_color_rules() {
        assert!(ColoredPermutation::identity(5, 4).is_involution());
        assert!(!p("1[1]", 3).is_involution());
        assert!(p("1[2]", 4).is_involution());
        assert!(p("2[1] 1[2]", 3).is_involution());
        assert!(!p("2[1] 1[1]", 3).is_involution());
    }

    #[test]
    fn derangement_examples() {
        assert!(p("5 6[1] 3[2] 2 4[1] 1[1]", 3).is_derangement());
        assert!(!ColoredPermutation::identity(2, 3).is_derangement());
        assert!(p("1[1] 2[1]", 2).is_derangement());
        assert!(!p("2 1 3", 2).is_derangement());
    }
}
