//! Colored permutations and the colored inversion statistic.
//!
//! A colored permutation of size `n` with `c` colors is stored as its one-line
//! window: the underlying permutation `σ_1 … σ_n` together with one color in
//! `0..c` per entry. The crate covers
//!
//! * group operations, cycle structure, derangement/involution tests ([`perm`]),
//! * `inv`, `maj`, `col` and the colored inversion number `inv_c` ([`stats`]),
//! * classical and colored Lehmer codes ([`lehmer`]),
//! * exact q-polynomials and seven independent routes to the colored Mahonian
//!   numbers `i_c(n, k)`, plus the inversion totals `I_{c,n}` ([`mahonian`]),
//! * counts and inversion totals for colored derangements and involutions
//!   ([`special`]),
//! * an exhaustive enumeration oracle and a self-verification suite ([`oracle`]).
//!
//! Every count is an exact [`ExactInt`]. The crate is `no_std` and only needs
//! `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod arith;
pub mod lehmer;
pub mod mahonian;
pub mod oracle;
pub mod perm;
pub mod poly;
pub mod special;
pub mod stats;

/// Unbounded exact integer used for every count and total.
pub type ExactInt = num_bigint::BigInt;

pub use lehmer::{ColoredLehmerCode, LehmerCode};
pub use mahonian::MahonianMethod;
pub use oracle::{Distribution, OracleError, Report, ReportEntry, Status};
pub use perm::{ColoredElement, ColoredPermutation, Cycle, PermError};
pub use poly::QPolynomial;
pub use special::ClassKind;
pub use stats::StatisticKind;
