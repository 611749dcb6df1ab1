//! Distribution tables, equidistribution tests, exhaustive verification of
//! the bijection identities, and the search over proper length-3 patterns.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::bijections::{self, PsiCase};
use crate::enumeration::{enumerate, enumerate_all, AvoidanceClass, Limits, PermClass};
use crate::error::{Error, Result};
use crate::pattern::{proper_patterns, VincularPattern};
use crate::perm::Permutation;
use crate::statistics::{des, MultiStatistic};

/// Value tuple -> number of permutations attaining it.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct Distribution {
    entries: BTreeMap<Vec<u64>, u64>,
    total: u64,
}

impl Distribution {
    pub fn from_values<I: IntoIterator<Item = Vec<u64>>>(values: I) -> Self {
        let mut d = Distribution::default();
        for v in values {
            d.add(v, 1);
        }
        d
    }

    fn add(&mut self, key: Vec<u64>, count: u64) {
        *self.entries.entry(key).or_insert(0) += count;
        self.total += count;
    }

    fn merge(mut self, other: Distribution) -> Distribution {
        for (k, c) in other.entries {
            self.add(k, c);
        }
        self
    }

    pub fn entries(&self) -> &BTreeMap<Vec<u64>, u64> {
        &self.entries
    }

    pub fn get(&self, key: &[u64]) -> u64 {
        self.entries.get(key).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

fn format_key(key: &[u64]) -> String {
    if key.len() == 1 {
        key[0].to_string()
    } else {
        let parts: Vec<String> = key.iter().map(u64::to_string).collect();
        format!("({})", parts.join(","))
    }
}

/// `{0:1, 1:3, 2:1}`; tuples print as `(a,b):count`.
impl fmt::Display for Distribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|(k, c)| format!("{}:{c}", format_key(k)))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

impl fmt::Debug for Distribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Distribution{self}")
    }
}

#[derive(Serialize)]
struct DistributionRow<'a> {
    value: &'a [u64],
    count: u64,
}

impl Serialize for Distribution {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<DistributionRow<'_>> = self
            .entries
            .iter()
            .map(|(k, &count)| DistributionRow { value: k, count })
            .collect();
        rows.serialize(serializer)
    }
}

/// Counts `ms` over every permutation of length `n` in `class`.
pub fn distribution(ms: &MultiStatistic, class: PermClass, n: usize, limits: &Limits) -> Result<Distribution> {
    let perms = enumerate(class, n, limits)?;
    Ok(distribution_over(ms, &perms))
}

pub fn distribution_over(ms: &MultiStatistic, perms: &[Permutation]) -> Distribution {
    perms
        .par_iter()
        .fold(Distribution::default, |mut d, p| {
            d.add(ms.eval(p), 1);
            d
        })
        .reduce(Distribution::default, Distribution::merge)
}

/// Where two distributions first disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DistributionMismatch {
    pub n: usize,
    pub value: Vec<u64>,
    pub left_count: u64,
    pub right_count: u64,
}

impl fmt::Display for DistributionMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n = {}: value {} occurs {} times on the left, {} times on the right",
            self.n,
            format_key(&self.value),
            self.left_count,
            self.right_count
        )
    }
}

/// The smallest `n <= n_max` (and smallest value tuple there) where the
/// distributions of `a` and `b` differ.
pub fn first_difference(
    a: &MultiStatistic,
    b: &MultiStatistic,
    class: PermClass,
    n_max: usize,
    limits: &Limits,
) -> Result<Option<DistributionMismatch>> {
    if a.arity() != b.arity() {
        return Err(Error::ArityMismatch {
            left: a.arity(),
            right: b.arity(),
        });
    }
    for n in 0..=n_max {
        let perms = enumerate(class, n, limits)?;
        let da = distribution_over(a, &perms);
        let db = distribution_over(b, &perms);
        if da != db {
            let keys: BTreeSet<&Vec<u64>> = da.entries.keys().chain(db.entries.keys()).collect();
            let value = keys
                .into_iter()
                .find(|k| da.get(k) != db.get(k))
                .expect("distinct tables differ at some key")
                .clone();
            return Ok(Some(DistributionMismatch {
                n,
                left_count: da.get(&value),
                right_count: db.get(&value),
                value,
            }));
        }
    }
    Ok(None)
}

/// True iff `a` and `b` have the same distribution on the class for every
/// `0 <= n <= n_max`.
pub fn equidistributed(
    a: &MultiStatistic,
    b: &MultiStatistic,
    class: PermClass,
    n_max: usize,
    limits: &Limits,
) -> Result<bool> {
    Ok(first_difference(a, b, class, n_max, limits)?.is_none())
}

// ---------------------------------------------------------------------------
// Verification drivers

/// A named identity checked exhaustively.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    /// `phi` is a 132-preserving involution exchanging
    /// `(2-31, 2-13, rlmax, rlmin)` with `(2-13, 2-31, rlmin, rlmax)`.
    Theorem1,
    /// `psi` is a bijection carrying `(2-31, des)` to `(2-13, des)`.
    Theorem2,
    /// `mu` is a bijection carrying `(2-13, des, 1-2])` to `(21-3, des, 1-2])`.
    Theorem3,
    /// `phi` exchanges the `1-2]` and `2-1]` counts.
    Prop1,
    /// The branch taken by `psi` is readable off the image.
    Prop2,
    /// Inversion exchanges `23-1` and `3-12` and keeps `des`.
    Prop4,
    /// `(2-13)(p (+) 1) = (2-31)p + des p` on all of `S_n`.
    Lemma1,
    /// `(2-13)p + (2-1])p = (2-31)p + des p` on all of `S_n`.
    Eq1,
    /// `(21-3)(p (+) 1) = (21-3)p + des p` on all of `S_n`.
    Fact1,
    /// `des` is additive over direct sums and gains one over skew sums of
    /// two non-empty blocks.
    FactDes,
    /// Total occurrences of classical 231 and 213 agree on `S_n(132)`.
    Bona,
}

impl Check {
    pub const ALL: [Check; 11] = [
        Check::Theorem1,
        Check::Theorem2,
        Check::Theorem3,
        Check::Prop1,
        Check::Prop2,
        Check::Prop4,
        Check::Lemma1,
        Check::Eq1,
        Check::Fact1,
        Check::FactDes,
        Check::Bona,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Theorem1 => "theorem1",
            Check::Theorem2 => "theorem2",
            Check::Theorem3 => "theorem3",
            Check::Prop1 => "prop1",
            Check::Prop2 => "prop2",
            Check::Prop4 => "prop4",
            Check::Lemma1 => "lemma1",
            Check::Eq1 => "eq1",
            Check::Fact1 => "fact1",
            Check::FactDes => "fact_des",
            Check::Bona => "bona",
        }
    }

    /// The permutations the check quantifies over.
    pub fn domain(self) -> PermClass {
        match self {
            Check::Lemma1 | Check::Eq1 | Check::Fact1 | Check::FactDes => PermClass::All,
            _ => PermClass::Avoiding(AvoidanceClass::P132),
        }
    }

    /// Largest `n` the check can run at under `limits`.
    pub fn ceiling(self, limits: &Limits) -> usize {
        limits.ceiling(self.domain())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::UnknownCheck(s.to_string()))
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRow {
    pub n: usize,
    /// Number of objects examined at this `n`.
    pub class_size: u64,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub check: Check,
    pub n_max: usize,
    pub rows: Vec<CheckRow>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.passed)
    }

    pub fn first_failure(&self) -> Option<&CheckRow> {
        self.rows.iter().find(|r| !r.passed)
    }
}

fn pat(text: &str) -> VincularPattern {
    text.parse().expect("static pattern")
}

fn ms(text: &str) -> MultiStatistic {
    text.parse().expect("static multistatistic")
}

/// Runs `check` exhaustively for every `n` in range, up to `n_max`.
pub fn verify_theorem(check: Check, n_max: usize, limits: &Limits) -> Result<CheckReport> {
    let ceiling = check.ceiling(limits);
    if n_max > ceiling {
        return Err(Error::LimitExceeded {
            what: "verification",
            n: n_max,
            max: ceiling,
        });
    }
    let rows = match check {
        Check::Bona => verify_bona_totals(n_max, limits)?
            .into_iter()
            .map(BonaRow::into_check_row)
            .collect(),
        Check::FactDes => (0..=n_max).map(|n| fact_des_row(n, limits)).collect::<Result<_>>()?,
        Check::Theorem2 => {
            let psi_total = |p: &Permutation| bijections::psi(p).expect("domain is S_n(132), n >= 1");
            bijection_rows(1, n_max, limits, psi_total, theorem2_pointwise)?
        }
        Check::Theorem3 => {
            let mu_total = |p: &Permutation| bijections::mu(p).expect("domain is S_n(132)");
            bijection_rows(0, n_max, limits, mu_total, theorem3_pointwise)?
        }
        _ => {
            let start = if check == Check::Prop2 { 2 } else { 0 };
            let predicate = pointwise_predicate(check);
            (start..=n_max)
                .map(|n| {
                    let perms = enumerate(check.domain(), n, limits)?;
                    let failure = perms.par_iter().find_map_first(predicate);
                    Ok(CheckRow {
                        n,
                        class_size: perms.len() as u64,
                        passed: failure.is_none(),
                        counterexample: failure,
                        note: None,
                    })
                })
                .collect::<Result<_>>()?
        }
    };
    Ok(CheckReport { check, n_max, rows })
}

type Pointwise = fn(&Permutation) -> Option<String>;

fn pointwise_predicate(check: Check) -> Pointwise {
    match check {
        Check::Theorem1 => theorem1_pointwise,
        Check::Prop1 => prop1_pointwise,
        Check::Prop2 => prop2_pointwise,
        Check::Prop4 => prop4_pointwise,
        Check::Lemma1 => lemma1_pointwise,
        Check::Eq1 => eq1_pointwise,
        Check::Fact1 => fact1_pointwise,
        Check::Theorem2 | Check::Theorem3 | Check::FactDes | Check::Bona => {
            unreachable!("{check} is not pointwise")
        }
    }
}

fn mismatch(p: &Permutation, what: &str, left: impl fmt::Debug, right: impl fmt::Debug) -> Option<String> {
    Some(format!("{p}: {what}: {left:?} != {right:?}"))
}

fn theorem1_pointwise(p: &Permutation) -> Option<String> {
    let q = bijections::phi(p).expect("domain is S_n(132)");
    if !AvoidanceClass::P132.contains(&q) {
        return Some(format!("{p}: phi image {q} contains 132"));
    }
    let back = bijections::phi(&q).expect("image avoids 132");
    if &back != p {
        return mismatch(p, "phi(phi(p)) vs p", back, p);
    }
    let on_image = ms("2-13,2-31,rlmin,rlmax").eval(&q);
    let on_perm = ms("2-31,2-13,rlmax,rlmin").eval(p);
    if on_image != on_perm {
        return mismatch(
            p,
            "(2-13,2-31,rlmin,rlmax)(phi p) vs (2-31,2-13,rlmax,rlmin)(p)",
            on_image,
            on_perm,
        );
    }
    None
}

fn prop1_pointwise(p: &Permutation) -> Option<String> {
    let q = bijections::phi(p).expect("domain is S_n(132)");
    let (rise, fall) = (pat("1-2]"), pat("2-1]"));
    if rise.count(p) != fall.count(&q) {
        return mismatch(p, "(1-2])p vs (2-1])phi(p)", rise.count(p), fall.count(&q));
    }
    if fall.count(p) != rise.count(&q) {
        return mismatch(p, "(2-1])p vs (1-2])phi(p)", fall.count(p), rise.count(&q));
    }
    None
}

/// The branch predicted from the image `sigma` alone.
fn psi_case_from_image(sigma: &Permutation) -> Option<PsiCase> {
    let n = sigma.len();
    if n < 2 {
        return None;
    }
    let top = sigma.position_of(n).expect("n present") as i64;
    let next = sigma.position_of(n - 1).expect("n-1 present") as i64;
    if top == 1 {
        Some(PsiCase::MaxFirst)
    } else if top - next > 1 {
        Some(PsiCase::MaxInside)
    } else if top - next == 1 {
        Some(PsiCase::MaxLast)
    } else {
        None
    }
}

fn prop2_pointwise(p: &Permutation) -> Option<String> {
    let sigma = bijections::psi(p).expect("domain is S_n(132), n >= 2");
    let case = bijections::psi_case(p);
    let predicted = psi_case_from_image(&sigma);
    if case != predicted {
        return Some(format!(
            "{p}: branch {case:?} but psi(p) = {sigma} indicates {predicted:?}"
        ));
    }
    None
}

fn prop4_pointwise(p: &Permutation) -> Option<String> {
    let (on_inverse, on_perm) = bijections::inverse_prop_statistics();
    let inv = p.inverse();
    let (l, r) = (on_inverse.eval(&inv), on_perm.eval(p));
    if l != r {
        return mismatch(p, "(23-1,3-12,des)(p^-1) vs (3-12,23-1,des)(p)", l, r);
    }
    None
}

fn lemma1_pointwise(p: &Permutation) -> Option<String> {
    let lifted = p.direct_sum(&Permutation::identity(1));
    let l = pat("2-13").count(&lifted);
    let r = pat("2-31").count(p) + des(p);
    (l != r).then(|| format!("{p}: (2-13)(p+1) = {l} but (2-31)p + des p = {r}"))
}

fn eq1_pointwise(p: &Permutation) -> Option<String> {
    let l = pat("2-13").count(p) + pat("2-1]").count(p);
    let r = pat("2-31").count(p) + des(p);
    (l != r).then(|| format!("{p}: (2-13 + 2-1])p = {l} but (2-31)p + des p = {r}"))
}

fn fact1_pointwise(p: &Permutation) -> Option<String> {
    let lifted = p.direct_sum(&Permutation::identity(1));
    let l = pat("21-3").count(&lifted);
    let r = pat("21-3").count(p) + des(p);
    (l != r).then(|| format!("{p}: (21-3)(p+1) = {l} but (21-3)p + des p = {r}"))
}

fn theorem2_pointwise(p: &Permutation, image: &Permutation) -> Option<String> {
    let l = ms("2-13,des").eval(image);
    let r = ms("2-31,des").eval(p);
    (l != r).then(|| format!("{p}: (2-13,des)(psi p) = {l:?} but (2-31,des)(p) = {r:?}"))
}

fn theorem3_pointwise(p: &Permutation, image: &Permutation) -> Option<String> {
    if image.last() != p.last() {
        return mismatch(p, "last value of mu(p) vs p", image.last(), p.last());
    }
    let l = ms("21-3,des,1-2]").eval(image);
    let r = ms("2-13,des,1-2]").eval(p);
    (l != r).then(|| format!("{p}: (21-3,des,1-2])(mu p) = {l:?} but (2-13,des,1-2])(p) = {r:?}"))
}

/// Rows for a map claimed to be a bijection on `S_n(132)` together with a
/// pointwise statistic identity.
fn bijection_rows(
    start: usize,
    n_max: usize,
    limits: &Limits,
    map: impl Fn(&Permutation) -> Permutation + Sync,
    pointwise: fn(&Permutation, &Permutation) -> Option<String>,
) -> Result<Vec<CheckRow>> {
    let class = PermClass::Avoiding(AvoidanceClass::P132);
    (start..=n_max)
        .map(|n| {
            let perms = enumerate(class, n, limits)?;
            let images: Vec<Permutation> = perms.par_iter().map(&map).collect();
            let mut failure = perms.par_iter().zip(images.par_iter()).find_map_first(|(p, q)| {
                if !class.contains(q) {
                    return Some(format!("{p}: image {q} contains 132"));
                }
                pointwise(p, q)
            });
            if failure.is_none() {
                let mut sorted = images.clone();
                sorted.sort();
                if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
                    let preimages: Vec<String> = perms
                        .iter()
                        .zip(&images)
                        .filter(|(_, q)| **q == w[0])
                        .map(|(p, _)| p.to_string())
                        .collect();
                    failure = Some(format!("{} is the image of {}", w[0], preimages.join(" and ")));
                } else if sorted != perms {
                    failure = Some("image is not the whole class".to_string());
                }
            }
            Ok(CheckRow {
                n,
                class_size: perms.len() as u64,
                passed: failure.is_none(),
                counterexample: failure,
                note: None,
            })
        })
        .collect()
}

fn fact_des_row(n: usize, limits: &Limits) -> Result<CheckRow> {
    let mut examined = 0u64;
    let mut failure = None;
    'outer: for a in 0..=n {
        let alphas: Vec<Permutation> = enumerate_all(a, limits)?.collect();
        let betas: Vec<Permutation> = enumerate_all(n - a, limits)?.collect();
        examined += (alphas.len() * betas.len()) as u64;
        for alpha in &alphas {
            let found = betas.par_iter().find_map_first(|beta| {
                let direct = des(&alpha.direct_sum(beta));
                if direct != des(alpha) + des(beta) {
                    return Some(format!("des({alpha} (+) {beta}) = {direct}"));
                }
                // the extra descent sits at the block boundary, which
                // exists only when both blocks are non-empty
                let boundary = u64::from(!alpha.is_empty() && !beta.is_empty());
                let skew = des(&alpha.skew_sum(beta));
                if skew != des(alpha) + des(beta) + boundary {
                    return Some(format!("des({alpha} (-) {beta}) = {skew}"));
                }
                None
            });
            if found.is_some() {
                failure = found;
                break 'outer;
            }
        }
    }
    Ok(CheckRow {
        n,
        class_size: examined,
        passed: failure.is_none(),
        counterexample: failure,
        note: Some(format!("pairs (alpha, beta) with |alpha| + |beta| = {n}")),
    })
}

/// Cumulative classical 231 and 213 occurrences over `S_n(132)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BonaRow {
    pub n: usize,
    pub class_size: u64,
    pub total_231: u64,
    pub total_213: u64,
}

impl BonaRow {
    pub fn equal(&self) -> bool {
        self.total_231 == self.total_213
    }

    fn into_check_row(self) -> CheckRow {
        CheckRow {
            n: self.n,
            class_size: self.class_size,
            passed: self.equal(),
            counterexample: (!self.equal())
                .then(|| format!("231 total {} != 213 total {}", self.total_231, self.total_213)),
            note: Some(format!(
                "231 total = {}, 213 total = {}",
                self.total_231, self.total_213
            )),
        }
    }
}

pub fn verify_bona_totals(n_max: usize, limits: &Limits) -> Result<Vec<BonaRow>> {
    let (p231, p213) = (pat("2-3-1"), pat("2-1-3"));
    (0..=n_max)
        .map(|n| {
            let perms = enumerate(PermClass::Avoiding(AvoidanceClass::P132), n, limits)?;
            let (total_231, total_213) = perms
                .par_iter()
                .map(|p| (p231.count(p), p213.count(p)))
                .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
            Ok(BonaRow {
                n,
                class_size: perms.len() as u64,
                total_231,
                total_213,
            })
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Search

/// An element of the group generated by reverse and complement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Symmetry {
    Identity,
    Reverse,
    Complement,
    ReverseComplement,
}

impl Symmetry {
    pub const ALL: [Symmetry; 4] = [
        Symmetry::Identity,
        Symmetry::Reverse,
        Symmetry::Complement,
        Symmetry::ReverseComplement,
    ];

    pub fn apply_pattern(self, p: &VincularPattern) -> VincularPattern {
        match self {
            Symmetry::Identity => p.clone(),
            Symmetry::Reverse => p.reverse(),
            Symmetry::Complement => p.complement(),
            Symmetry::ReverseComplement => p.complement().reverse(),
        }
    }

    pub fn apply_class(self, c: AvoidanceClass) -> AvoidanceClass {
        match self {
            Symmetry::Identity => c,
            Symmetry::Reverse => c.reverse(),
            Symmetry::Complement => c.complement(),
            Symmetry::ReverseComplement => c.complement().reverse(),
        }
    }

    pub fn apply_perm(self, p: &Permutation) -> Permutation {
        match self {
            Symmetry::Identity => p.clone(),
            Symmetry::Reverse => p.reverse(),
            Symmetry::Complement => p.complement(),
            Symmetry::ReverseComplement => p.complement().reverse(),
        }
    }
}

/// How a pair (or family) of patterns came to be equidistributed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FindingStatus {
    /// Not explained by a symmetry of the class or by vanishing counts.
    Equidistributed,
    /// The patterns are images of each other under a symmetry that maps the
    /// class onto itself.
    Symmetric,
    /// Every pattern has the avoided permutation as its word, so every count
    /// is zero on the class.
    Vanishing,
}

impl FindingStatus {
    pub fn is_trivial(self) -> bool {
        self != FindingStatus::Equidistributed
    }
}

impl fmt::Display for FindingStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FindingStatus::Equidistributed => "equidistributed",
            FindingStatus::Symmetric => "symmetric",
            FindingStatus::Vanishing => "vanishing",
        })
    }
}

/// Two patterns with identical distributions on a class for all `n <= n_max`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Finding {
    pub pattern_a: String,
    pub pattern_b: String,
    pub class: String,
    pub n_max: usize,
    pub status: FindingStatus,
}

/// A maximal set of patterns sharing one distribution on a class.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Family {
    pub class: String,
    pub patterns: Vec<String>,
    pub status: FindingStatus,
}

/// Non-trivial families identified under simultaneous reverse/complement of
/// patterns and class. `label` is the smallest member.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SymmetryClass {
    pub label: Family,
    pub members: Vec<Family>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub n_max: usize,
    /// Bound too small for length-3 patterns to occur; every pair matches.
    pub degenerate: bool,
    pub findings: Vec<Finding>,
    pub families: Vec<Family>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub symmetry_classes: Option<Vec<SymmetryClass>>,
}

impl SearchReport {
    pub fn families_on(&self, class: AvoidanceClass) -> Vec<&Family> {
        let key = class.to_string();
        self.families.iter().filter(|f| f.class == key).collect()
    }

    pub fn nontrivial_families(&self) -> impl Iterator<Item = &Family> {
        self.families.iter().filter(|f| !f.status.is_trivial())
    }
}

/// Classifies a set of patterns known to share a distribution on `class`.
fn classify(class: AvoidanceClass, members: &[&VincularPattern]) -> FindingStatus {
    let sigma = class.sigma();
    if members.iter().all(|p| p.word() == &sigma) {
        return FindingStatus::Vanishing;
    }
    let orbit: BTreeSet<VincularPattern> = Symmetry::ALL
        .into_iter()
        .filter(|g| g.apply_class(class) == class)
        .map(|g| g.apply_pattern(members[0]))
        .collect();
    if members.iter().all(|p| orbit.contains(*p)) {
        FindingStatus::Symmetric
    } else {
        FindingStatus::Equidistributed
    }
}

/// Tests every pair of distinct proper length-3 patterns on every classical
/// length-3 avoidance class, comparing single-pattern distributions for all
/// `n <= n_max`.
pub fn search_equidistributed(n_max: usize, modulo_symmetry: bool, limits: &Limits) -> Result<SearchReport> {
    let patterns = proper_patterns();
    // profiles[class][pattern] = per-n distributions of that pattern's count
    let profiles: Vec<Vec<Vec<Distribution>>> = AvoidanceClass::ALL
        .par_iter()
        .map(|&class| class_profiles(class, &patterns, n_max, limits))
        .collect::<Result<_>>()?;

    let mut findings = Vec::new();
    let mut families = Vec::new();
    for (ci, &class) in AvoidanceClass::ALL.iter().enumerate() {
        let by_profile = &profiles[ci];
        for i in 0..patterns.len() {
            for j in i + 1..patterns.len() {
                if by_profile[i] != by_profile[j] {
                    continue;
                }
                let (a, b) = ordered_pair(&patterns[i], &patterns[j]);
                findings.push(Finding {
                    pattern_a: a,
                    pattern_b: b,
                    class: class.to_string(),
                    n_max,
                    status: classify(class, &[&patterns[i], &patterns[j]]),
                });
            }
        }
        let mut groups: BTreeMap<&Vec<Distribution>, Vec<&VincularPattern>> = BTreeMap::new();
        for (profile, pattern) in by_profile.iter().zip(&patterns) {
            groups.entry(profile).or_default().push(pattern);
        }
        for members in groups.into_values().filter(|m| m.len() > 1) {
            let status = classify(class, &members);
            families.push(family(class, members.into_iter(), status));
        }
    }
    findings.sort_by(|x, y| (&x.class, &x.pattern_a, &x.pattern_b).cmp(&(&y.class, &y.pattern_a, &y.pattern_b)));
    families.sort();

    let symmetry_classes = modulo_symmetry.then(|| group_by_symmetry(&families));
    Ok(SearchReport {
        n_max,
        degenerate: n_max < 3,
        findings,
        families,
        symmetry_classes,
    })
}

fn ordered_pair(a: &VincularPattern, b: &VincularPattern) -> (String, String) {
    let (a, b) = (a.to_string(), b.to_string());
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

fn family<'a>(
    class: AvoidanceClass,
    patterns: impl Iterator<Item = &'a VincularPattern>,
    status: FindingStatus,
) -> Family {
    let mut patterns: Vec<String> = patterns.map(|p| p.to_string()).collect();
    patterns.sort();
    Family {
        class: class.to_string(),
        patterns,
        status,
    }
}

fn class_profiles(
    class: AvoidanceClass,
    patterns: &[VincularPattern],
    n_max: usize,
    limits: &Limits,
) -> Result<Vec<Vec<Distribution>>> {
    let mut profiles = vec![Vec::with_capacity(n_max + 1); patterns.len()];
    for n in 0..=n_max {
        let perms = enumerate(PermClass::Avoiding(class), n, limits)?;
        for (profile, pattern) in profiles.iter_mut().zip(patterns) {
            let stat = MultiStatistic::new(vec![pattern.clone().into()]);
            profile.push(distribution_over(&stat, &perms));
        }
    }
    Ok(profiles)
}

/// Image of a family under `g`, applied to its patterns and its class.
pub fn transport(g: Symmetry, f: &Family) -> Family {
    let class: AvoidanceClass = f.class.parse().expect("family class is valid");
    let patterns = f
        .patterns
        .iter()
        .map(|p| g.apply_pattern(&p.parse().expect("family pattern is valid")))
        .collect::<Vec<_>>();
    family(g.apply_class(class), patterns.iter(), f.status)
}

fn group_by_symmetry(families: &[Family]) -> Vec<SymmetryClass> {
    let mut seen: BTreeSet<&Family> = BTreeSet::new();
    let mut classes = Vec::new();
    for f in families.iter().filter(|f| !f.status.is_trivial()) {
        if seen.contains(f) {
            continue;
        }
        let orbit: BTreeSet<Family> = Symmetry::ALL.iter().map(|&g| transport(g, f)).collect();
        let members: Vec<Family> = families.iter().filter(|m| orbit.contains(m)).cloned().collect();
        seen.extend(families.iter().filter(|m| orbit.contains(m)));
        let label = members[0].clone();
        classes.push(SymmetryClass { label, members });
    }
    classes.sort_by(|a, b| a.label.cmp(&b.label));
    classes
}
