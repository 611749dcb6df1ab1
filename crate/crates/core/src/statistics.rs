//! Permutation statistics and multistatistics.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::pattern::VincularPattern;
use crate::perm::Permutation;

/// Number of descents `p_i > p_{i+1}`.
pub fn des(p: &Permutation) -> u64 {
    p.values().windows(2).filter(|w| w[0] > w[1]).count() as u64
}

/// Number of right-to-left maxima.
pub fn rlmax(p: &Permutation) -> u64 {
    let mut best = 0;
    let mut count = 0;
    for &v in p.values().iter().rev() {
        if v > best {
            best = v;
            count += 1;
        }
    }
    count
}

/// Number of right-to-left minima.
pub fn rlmin(p: &Permutation) -> u64 {
    let mut best = usize::MAX;
    let mut count = 0;
    for &v in p.values().iter().rev() {
        if v < best {
            best = v;
            count += 1;
        }
    }
    count
}

/// Last entry minus one; 0 on the empty permutation.
pub fn last_value_minus_one(p: &Permutation) -> u64 {
    p.last().map_or(0, |v| v as u64 - 1)
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Statistic {
    Des,
    Rlmax,
    Rlmin,
    LastValueMinusOne,
    Pattern(VincularPattern),
}

impl Statistic {
    pub fn eval(&self, p: &Permutation) -> u64 {
        match self {
            Statistic::Des => des(p),
            Statistic::Rlmax => rlmax(p),
            Statistic::Rlmin => rlmin(p),
            Statistic::LastValueMinusOne => last_value_minus_one(p),
            Statistic::Pattern(pat) => pat.count(p),
        }
    }

    /// A named statistic (`des`, `rlmax`, `rlmin`, `last`) or pattern text.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        match text {
            "des" => Ok(Statistic::Des),
            "rlmax" => Ok(Statistic::Rlmax),
            "rlmin" => Ok(Statistic::Rlmin),
            "last" => Ok(Statistic::LastValueMinusOne),
            _ if text.starts_with(|c: char| c.is_ascii_alphabetic()) => Err(Error::UnknownStatistic(text.to_string())),
            _ => VincularPattern::parse(text).map(Statistic::Pattern),
        }
    }
}

impl From<VincularPattern> for Statistic {
    fn from(p: VincularPattern) -> Self {
        Statistic::Pattern(p)
    }
}

impl FromStr for Statistic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Statistic::parse(s)
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Statistic::Des => f.write_str("des"),
            Statistic::Rlmax => f.write_str("rlmax"),
            Statistic::Rlmin => f.write_str("rlmin"),
            Statistic::LastValueMinusOne => f.write_str("last"),
            Statistic::Pattern(p) => write!(f, "{p}"),
        }
    }
}

impl fmt::Debug for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Statistic({self})")
    }
}

/// An ordered tuple of statistics.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiStatistic(pub Vec<Statistic>);

impl MultiStatistic {
    pub fn new(stats: Vec<Statistic>) -> Self {
        MultiStatistic(stats)
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn eval(&self, p: &Permutation) -> Vec<u64> {
        self.0.iter().map(|s| s.eval(p)).collect()
    }

    /// Comma-separated statistic list, e.g. `"2-31,des"`. Empty text gives
    /// the empty tuple.
    pub fn parse(text: &str) -> Result<Self> {
        if text.trim().is_empty() {
            return Ok(MultiStatistic::default());
        }
        text.split(',')
            .map(Statistic::parse)
            .collect::<Result<_>>()
            .map(MultiStatistic)
    }
}

pub fn eval_multi(ms: &MultiStatistic, p: &Permutation) -> Vec<u64> {
    ms.eval(p)
}

impl FromStr for MultiStatistic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        MultiStatistic::parse(s)
    }
}

impl fmt::Display for MultiStatistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|s| s.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for MultiStatistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiStatistic{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn descents() {
        assert_eq!(des(&perm("45312")), 2);
        assert_eq!(des(&Permutation::empty()), 0);
        assert_eq!(des(&perm("1")), 0);
        assert_eq!(des(&perm("54321")), 4);
    }

    #[test]
    fn right_to_left_extrema() {
        assert_eq!(rlmax(&perm("21")), 2);
        assert_eq!(rlmax(&perm("12345")), 1);
        assert_eq!(rlmax(&Permutation::empty()), 0);
        assert_eq!(rlmin(&perm("21")), 1);
        assert_eq!(rlmin(&perm("54321")), 1);
        assert_eq!(rlmin(&perm("12345")), 5);
    }

    #[test]
    fn multi() {
        let ms: MultiStatistic = "des,rlmax".parse().unwrap();
        assert_eq!(ms.eval(&perm("45312")), vec![2, 3]);
        assert_eq!(MultiStatistic::default().eval(&perm("312")), Vec::<u64>::new());
        let ms: MultiStatistic = "2-31,des".parse().unwrap();
        assert_eq!(eval_multi(&ms, &perm("231")), vec![1, 1]);
        assert_eq!(ms.to_string(), "(2-31,des)");
    }

    #[test]
    fn parse_rejects_unknown_names() {
        assert!(matches!(Statistic::parse("maj"), Err(Error::UnknownStatistic(_))));
        assert!(matches!(
            MultiStatistic::parse("des,2-2"),
            Err(Error::PatternSyntax { .. })
        ));
    }

    #[test]
    fn last_value() {
        assert_eq!(last_value_minus_one(&perm("425163")), 2);
        assert_eq!(last_value_minus_one(&Permutation::empty()), 0);
    }
}
