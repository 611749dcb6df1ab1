//! Generation of `S_n` and of the six classical length-3 avoidance classes.
//!
//! Every generator yields permutations in lexicographic order.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Environment variable overriding both enumeration ceilings.
pub const MAX_N_ENV: &str = "VINC_MAX_N";

/// Largest `n` each generator accepts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Ceiling for the full symmetric group `S_n`.
    pub max_full: usize,
    /// Ceiling for avoidance classes `S_n(sigma)`.
    pub max_avoiders: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_full: 8,
            max_avoiders: 12,
        }
    }
}

impl Limits {
    /// Defaults, with both ceilings replaced by `VINC_MAX_N` when it is set
    /// to a number.
    pub fn from_env() -> Self {
        match std::env::var(MAX_N_ENV).ok().and_then(|v| v.trim().parse().ok()) {
            Some(n) => Limits {
                max_full: n,
                max_avoiders: n,
            },
            None => Limits::default(),
        }
    }

    pub fn uniform(n: usize) -> Self {
        Limits {
            max_full: n,
            max_avoiders: n,
        }
    }

    pub fn ceiling(&self, class: PermClass) -> usize {
        match class {
            PermClass::All => self.max_full,
            PermClass::Avoiding(_) => self.max_avoiders,
        }
    }

    fn check(&self, class: PermClass, n: usize) -> Result<()> {
        let max = self.ceiling(class);
        if n > max {
            let what = match class {
                PermClass::All => "enumerating S_n",
                PermClass::Avoiding(_) => "enumerating an avoidance class",
            };
            return Err(Error::LimitExceeded { what, n, max });
        }
        Ok(())
    }
}

/// Permutations avoiding one classical pattern of length three.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AvoidanceClass {
    P123,
    P132,
    P213,
    P231,
    P312,
    P321,
}

impl AvoidanceClass {
    pub const ALL: [AvoidanceClass; 6] = [
        AvoidanceClass::P123,
        AvoidanceClass::P132,
        AvoidanceClass::P213,
        AvoidanceClass::P231,
        AvoidanceClass::P312,
        AvoidanceClass::P321,
    ];

    fn digits(self) -> [usize; 3] {
        match self {
            AvoidanceClass::P123 => [1, 2, 3],
            AvoidanceClass::P132 => [1, 3, 2],
            AvoidanceClass::P213 => [2, 1, 3],
            AvoidanceClass::P231 => [2, 3, 1],
            AvoidanceClass::P312 => [3, 1, 2],
            AvoidanceClass::P321 => [3, 2, 1],
        }
    }

    pub fn sigma(self) -> Permutation {
        Permutation::from_values_unchecked(self.digits().to_vec())
    }

    pub fn from_sigma(sigma: &Permutation) -> Option<Self> {
        AvoidanceClass::ALL
            .into_iter()
            .find(|c| c.digits().as_slice() == sigma.values())
    }

    /// True iff `p` avoids this class's pattern.
    pub fn contains(self, p: &Permutation) -> bool {
        p.avoids(&self.sigma())
    }

    pub fn reverse(self) -> Self {
        AvoidanceClass::from_sigma(&self.sigma().reverse()).expect("closed under reverse")
    }

    pub fn complement(self) -> Self {
        AvoidanceClass::from_sigma(&self.sigma().complement()).expect("closed under complement")
    }
}

impl FromStr for AvoidanceClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Permutation::parse(s.trim())
            .ok()
            .and_then(|p| AvoidanceClass::from_sigma(&p))
            .ok_or_else(|| Error::InvalidClass(s.to_string()))
    }
}

impl fmt::Display for AvoidanceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.sigma())
    }
}

/// A permutation class: all of `S_n`, or an avoidance class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PermClass {
    All,
    Avoiding(AvoidanceClass),
}

impl PermClass {
    pub fn contains(self, p: &Permutation) -> bool {
        match self {
            PermClass::All => true,
            PermClass::Avoiding(c) => c.contains(p),
        }
    }
}

impl From<AvoidanceClass> for PermClass {
    fn from(c: AvoidanceClass) -> Self {
        PermClass::Avoiding(c)
    }
}

impl FromStr for PermClass {
    type Err = Error;

    /// `all`/`none` for the full group, otherwise a length-3 pattern.
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "all" | "none" => Ok(PermClass::All),
            other => other.parse().map(PermClass::Avoiding),
        }
    }
}

impl fmt::Display for PermClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PermClass::All => f.write_str("all"),
            PermClass::Avoiding(c) => write!(f, "{c}"),
        }
    }
}

/// Lexicographic iterator over `S_n`.
#[derive(Debug, Clone)]
pub struct AllPermutations {
    next: Option<Vec<usize>>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_lexicographic(&mut succ) {
            self.next = Some(succ);
        }
        Some(Permutation::from_values_unchecked(current))
    }
}

/// Advances to the lexicographic successor; false on the last permutation.
fn next_lexicographic(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let Some(i) = (0..v.len() - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        return false;
    };
    let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).expect("v[i+1] > v[i]");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

pub fn enumerate_all(n: usize, limits: &Limits) -> Result<AllPermutations> {
    limits.check(PermClass::All, n)?;
    Ok(AllPermutations {
        next: Some((1..=n).collect()),
    })
}

/// `S_n(sigma)` by prefix-pruned backtracking.
pub fn enumerate_avoiders(class: AvoidanceClass, n: usize, limits: &Limits) -> Result<std::vec::IntoIter<Permutation>> {
    limits.check(PermClass::Avoiding(class), n)?;
    let sigma = class.digits();
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(n);
    let mut used = vec![false; n + 1];
    extend_avoiding(&sigma, n, &mut prefix, &mut used, &mut out);
    Ok(out.into_iter())
}

fn extend_avoiding(sigma: &[usize], n: usize, prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
    if prefix.len() == n {
        out.push(Permutation::from_values_unchecked(prefix.clone()));
        return;
    }
    for v in 1..=n {
        if used[v] {
            continue;
        }
        prefix.push(v);
        if !ends_with_occurrence(prefix, sigma) {
            used[v] = true;
            extend_avoiding(sigma, n, prefix, used, out);
            used[v] = false;
        }
        prefix.pop();
    }
}

/// True iff some occurrence of `pattern` in `word` uses its last entry.
///
/// Relative order of a prefix never changes as later values are appended, so
/// checking only the newest entry keeps every prefix avoiding.
fn ends_with_occurrence(word: &[usize], pattern: &[usize]) -> bool {
    let k = pattern.len();
    if k == 0 || word.len() < k {
        return k == 0;
    }
    let last = word.len() - 1;
    let mut chosen = Vec::with_capacity(k);
    fn rec(word: &[usize], pattern: &[usize], start: usize, last: usize, chosen: &mut Vec<usize>) -> bool {
        let j = chosen.len();
        let k = pattern.len();
        let candidates = if j == k - 1 { last..last + 1 } else { start..last };
        for i in candidates {
            let consistent = chosen
                .iter()
                .enumerate()
                .all(|(m, &c)| (word[c] < word[i]) == (pattern[m] < pattern[j]));
            if consistent {
                chosen.push(i);
                if j + 1 == k || rec(word, pattern, i + 1, last, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    rec(word, pattern, 0, last, &mut chosen)
}

/// `S_n(132)` built from `(alpha (+) 1) (-) beta` over all splits, sorted.
pub fn enumerate_132_structural(n: usize, limits: &Limits) -> Result<Vec<Permutation>> {
    limits.check(PermClass::Avoiding(AvoidanceClass::P132), n)?;
    let one = Permutation::identity(1);
    let mut by_size: Vec<Vec<Permutation>> = vec![vec![Permutation::empty()]];
    for m in 1..=n {
        let mut level = Vec::new();
        for a in 0..m {
            for alpha in &by_size[a] {
                let top = alpha.direct_sum(&one);
                for beta in &by_size[m - 1 - a] {
                    level.push(top.skew_sum(beta));
                }
            }
        }
        level.sort();
        by_size.push(level);
    }
    Ok(by_size.swap_remove(n))
}

/// All of `S_n` or an avoidance class, collected.
pub fn enumerate(class: PermClass, n: usize, limits: &Limits) -> Result<Vec<Permutation>> {
    match class {
        PermClass::All => Ok(enumerate_all(n, limits)?.collect()),
        PermClass::Avoiding(c) => Ok(enumerate_avoiders(c, n, limits)?.collect()),
    }
}

/// `C_n` by the convolution recurrence.
pub fn catalan(n: usize) -> u64 {
    let mut c = vec![1u64; n + 1];
    for m in 1..=n {
        c[m] = (0..m).map(|i| c[i] * c[m - 1 - i]).sum();
    }
    c[n]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn texts(it: impl Iterator<Item = Permutation>) -> Vec<String> {
        it.map(|p| p.to_string()).collect()
    }

    #[test]
    fn full_group() {
        let l = Limits::default();
        assert_eq!(texts(enumerate_all(0, &l).unwrap()), vec!["ε"]);
        assert_eq!(
            texts(enumerate_all(3, &l).unwrap()),
            vec!["123", "132", "213", "231", "312", "321"]
        );
        assert_eq!(enumerate_all(8, &l).unwrap().count(), 40320);
        assert!(matches!(
            enumerate_all(9, &l),
            Err(Error::LimitExceeded { n: 9, max: 8, .. })
        ));
    }

    #[test]
    fn avoiders() {
        let l = Limits::default();
        assert_eq!(
            texts(enumerate_avoiders(AvoidanceClass::P132, 3, &l).unwrap()),
            vec!["123", "213", "231", "312", "321"]
        );
        for c in AvoidanceClass::ALL {
            assert_eq!(texts(enumerate_avoiders(c, 0, &l).unwrap()), vec!["ε"]);
        }
        assert_eq!(enumerate_avoiders(AvoidanceClass::P132, 10, &l).unwrap().count(), 16796);
        assert!(enumerate_avoiders(AvoidanceClass::P132, 13, &l).is_err());
    }

    #[test]
    fn structural_matches_backtracking() {
        let l = Limits::default();
        for n in 0..=9 {
            let a: Vec<_> = enumerate_avoiders(AvoidanceClass::P132, n, &l).unwrap().collect();
            assert_eq!(enumerate_132_structural(n, &l).unwrap(), a, "n = {n}");
        }
    }

    #[test]
    fn catalan_values() {
        let expected = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796];
        for (n, &c) in expected.iter().enumerate() {
            assert_eq!(catalan(n), c);
        }
    }

    #[test]
    fn class_symmetries() {
        assert_eq!(AvoidanceClass::P132.reverse(), AvoidanceClass::P231);
        assert_eq!(AvoidanceClass::P132.complement(), AvoidanceClass::P312);
        assert_eq!(AvoidanceClass::P123.reverse().complement(), AvoidanceClass::P123);
        assert_eq!("213".parse::<AvoidanceClass>().unwrap(), AvoidanceClass::P213);
        assert!("12".parse::<AvoidanceClass>().is_err());
        assert_eq!("all".parse::<PermClass>().unwrap(), PermClass::All);
    }

    #[test]
    fn limits_uniform() {
        let l = Limits::uniform(3);
        assert!(enumerate_all(4, &l).is_err());
        assert!(enumerate_avoiders(AvoidanceClass::P321, 4, &l).is_err());
    }
}
