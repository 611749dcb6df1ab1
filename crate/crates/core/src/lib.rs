//! Vincular pattern statistics on pattern-avoiding permutations.
//!
//! The crate covers one-line permutations and their block sums
//! ([`perm`]), vincular patterns with an occurrence counter ([`pattern`]),
//! statistics ([`statistics`]), the bijections `phi`, `psi` and `mu` on
//! 132-avoiders ([`bijections`]), generation of `S_n` and `S_n(sigma)`
//! ([`enumeration`]), and exhaustive checking and searching on top of them
//! ([`analysis`]). Results can be rendered with [`report`].
//!
//! ```
//! use vincular::{Permutation, VincularPattern};
//!
//! let host: Permutation = "425163".parse().unwrap();
//! let pattern: VincularPattern = "2-13".parse().unwrap();
//! assert_eq!(pattern.count(&host), 4);
//! ```

pub mod analysis;
pub mod bijections;
pub mod enumeration;
pub mod error;
pub mod pattern;
pub mod perm;
pub mod report;
pub mod statistics;

pub use analysis::{
    distribution, equidistributed, first_difference, search_equidistributed, verify_bona_totals, verify_theorem, Check,
    CheckReport, Distribution, SearchReport,
};
pub use bijections::{mu, phi, psi, verify_inverse_prop};
pub use enumeration::{enumerate_all, enumerate_avoiders, AvoidanceClass, Limits, PermClass};
pub use error::{Error, ParseError, Result};
pub use pattern::VincularPattern;
pub use perm::{Permutation, TextStyle};
pub use statistics::{des, rlmax, rlmin, MultiStatistic, Statistic};
