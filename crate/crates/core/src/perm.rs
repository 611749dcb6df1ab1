//! Permutations in one-line notation.
//!
//! A [`Permutation`] of length `n` stores the word `p_1 p_2 ... p_n` of its
//! images, 1-based. The empty permutation is a regular value. Besides the
//! symmetries (reverse, complement, inverse) and the two block sums, this
//! module provides the two canonical splittings of a 132-avoider:
//!
//! ```text
//! decompose_left:   p = (alpha (+) 1) (-) beta      n sits at the end of the prefix
//! decompose_right:  p = alpha (-) (beta (+) 1)      the last entry tops its block
//! ```

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, ParseError, Result};

/// Text used for the empty permutation.
pub const EMPTY_TEXT: &str = "ε";

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Permutation {
    values: Vec<usize>,
}

/// Which textual form to emit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TextStyle {
    /// `425163`; only representable for n <= 9.
    Digits,
    /// `4,2,5,1,6,3`; any n.
    Commas,
}

impl TextStyle {
    /// The style a piece of input text was written in.
    pub fn of_input(text: &str) -> TextStyle {
        if text.contains(',') {
            TextStyle::Commas
        } else {
            TextStyle::Digits
        }
    }
}

impl Permutation {
    pub fn empty() -> Self {
        Permutation { values: Vec::new() }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            values: (1..=n).collect(),
        }
    }

    /// Validates that `values` is a rearrangement of `1..=n`.
    pub fn from_values(values: Vec<usize>) -> Result<Self> {
        match first_invalid(&values) {
            None => Ok(Permutation { values }),
            Some((idx, reason)) => Err(Error::PermutationSyntax {
                input: join_commas(&values),
                source: ParseError::new(idx, reason),
            }),
        }
    }

    /// Caller guarantees validity; checked in debug builds.
    pub(crate) fn from_values_unchecked(values: Vec<usize>) -> Self {
        debug_assert!(first_invalid(&values).is_none(), "{values:?}");
        Permutation { values }
    }

    /// The permutation order-isomorphic to a sequence of distinct numbers.
    pub fn standardize(seq: &[usize]) -> Self {
        let mut order: Vec<usize> = (0..seq.len()).collect();
        order.sort_by_key(|&i| seq[i]);
        let mut values = vec![0; seq.len()];
        for (rank, &i) in order.iter().enumerate() {
            values[i] = rank + 1;
        }
        Permutation::from_values_unchecked(values)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn into_values(self) -> Vec<usize> {
        self.values
    }

    pub fn last(&self) -> Option<usize> {
        self.values.last().copied()
    }

    /// 1-based position of `value`, if present.
    pub fn position_of(&self, value: usize) -> Option<usize> {
        self.values.iter().position(|&v| v == value).map(|i| i + 1)
    }

    /// `self (+) other`: `other` placed after and above `self`.
    pub fn direct_sum(&self, other: &Permutation) -> Permutation {
        let shift = self.len();
        let mut values = Vec::with_capacity(self.len() + other.len());
        values.extend_from_slice(&self.values);
        values.extend(other.values.iter().map(|v| v + shift));
        Permutation::from_values_unchecked(values)
    }

    /// `self (-) other`: `other` placed after and below `self`.
    pub fn skew_sum(&self, other: &Permutation) -> Permutation {
        let shift = other.len();
        let mut values = Vec::with_capacity(self.len() + other.len());
        values.extend(self.values.iter().map(|v| v + shift));
        values.extend_from_slice(&other.values);
        Permutation::from_values_unchecked(values)
    }

    pub fn reverse(&self) -> Permutation {
        let values = self.values.iter().rev().copied().collect();
        Permutation::from_values_unchecked(values)
    }

    pub fn complement(&self) -> Permutation {
        let n = self.len();
        let values = self.values.iter().map(|v| n + 1 - v).collect();
        Permutation::from_values_unchecked(values)
    }

    pub fn inverse(&self) -> Permutation {
        let mut values = vec![0; self.len()];
        for (i, &v) in self.values.iter().enumerate() {
            values[v - 1] = i + 1;
        }
        Permutation::from_values_unchecked(values)
    }

    /// True iff some subsequence is order-isomorphic to `pattern`.
    pub fn contains(&self, pattern: &Permutation) -> bool {
        if pattern.is_empty() {
            return true;
        }
        if pattern.len() > self.len() {
            return false;
        }
        let mut chosen = Vec::with_capacity(pattern.len());
        contains_from(&self.values, &pattern.values, 0, &mut chosen)
    }

    pub fn avoids(&self, pattern: &Permutation) -> bool {
        !self.contains(pattern)
    }

    /// Splits a 132-avoider as `(alpha (+) 1) (-) beta`.
    pub fn decompose_left(&self) -> Result<(Permutation, Permutation)> {
        self.require_nonempty_132_avoider()?;
        let n = self.len();
        let top = self.position_of(n).expect("n is present") - 1;
        let beta_len = n - top - 1;
        let alpha = self.values[..top].iter().map(|v| v - beta_len).collect();
        let beta = self.values[top + 1..].to_vec();
        Ok((
            Permutation::from_values_unchecked(alpha),
            Permutation::from_values_unchecked(beta),
        ))
    }

    /// Splits a 132-avoider as `alpha (-) (beta (+) 1)`.
    pub fn decompose_right(&self) -> Result<(Permutation, Permutation)> {
        self.require_nonempty_132_avoider()?;
        let n = self.len();
        let last = self.values[n - 1];
        let alpha_len = n - last;
        let alpha = self.values[..alpha_len].iter().map(|v| v - last).collect();
        let beta = self.values[alpha_len..n - 1].to_vec();
        Ok((
            Permutation::from_values_unchecked(alpha),
            Permutation::from_values_unchecked(beta),
        ))
    }

    fn require_nonempty_132_avoider(&self) -> Result<()> {
        if self.is_empty() {
            return Err(Error::EmptyPermutation);
        }
        let p132 = Permutation::from_values_unchecked(vec![1, 3, 2]);
        if self.contains(&p132) {
            return Err(Error::NotAvoiding {
                perm: self.to_string(),
                pattern: p132.to_string(),
            });
        }
        Ok(())
    }

    pub fn to_text(&self, style: TextStyle) -> String {
        if self.is_empty() {
            return EMPTY_TEXT.to_string();
        }
        match style {
            TextStyle::Digits if self.len() <= 9 => self.values.iter().map(|v| v.to_string()).collect(),
            _ => join_commas(&self.values),
        }
    }

    /// Parses either the digit form or the comma form; `""` and `ε` are empty.
    pub fn parse(text: &str) -> Result<Self> {
        parse_values(text)
            .and_then(|values| match first_invalid(&values) {
                None => Ok(Permutation { values }),
                Some((idx, reason)) => Err(ParseError::new(token_offset(text, idx), reason)),
            })
            .map_err(|source| Error::PermutationSyntax {
                input: text.to_string(),
                source,
            })
    }
}

fn contains_from(host: &[usize], pattern: &[usize], start: usize, chosen: &mut Vec<usize>) -> bool {
    let j = chosen.len();
    if j == pattern.len() {
        return true;
    }
    // leave room for the remaining pattern letters
    let last_start = host.len() - (pattern.len() - j);
    for i in start..=last_start {
        let consistent = chosen
            .iter()
            .enumerate()
            .all(|(m, &c)| (host[c] < host[i]) == (pattern[m] < pattern[j]));
        if consistent {
            chosen.push(i);
            if contains_from(host, pattern, i + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

fn first_invalid(values: &[usize]) -> Option<(usize, String)> {
    let n = values.len();
    let mut seen = vec![false; n + 1];
    for (i, &v) in values.iter().enumerate() {
        if v == 0 || v > n {
            return Some((i, format!("value {v} outside 1..={n}")));
        }
        if seen[v] {
            return Some((i, format!("repeated value {v}")));
        }
        seen[v] = true;
    }
    None
}

fn join_commas(values: &[usize]) -> String {
    values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

/// Character offset of the `idx`-th token of `text`.
fn token_offset(text: &str, idx: usize) -> usize {
    if text.contains(',') {
        let mut offset = 0;
        for (i, tok) in text.split(',').enumerate() {
            if i == idx {
                return offset;
            }
            offset += tok.chars().count() + 1;
        }
        offset
    } else {
        idx
    }
}

fn parse_values(text: &str) -> std::result::Result<Vec<usize>, ParseError> {
    if text.is_empty() || text == EMPTY_TEXT {
        return Ok(Vec::new());
    }
    if text.contains(',') {
        let mut values = Vec::new();
        let mut offset = 0;
        for tok in text.split(',') {
            if tok.is_empty() {
                return Err(ParseError::new(offset, "empty entry"));
            }
            if let Some((i, c)) = tok.char_indices().find(|(_, c)| !c.is_ascii_digit()) {
                return Err(ParseError::new(
                    offset + tok[..i].chars().count(),
                    format!("unexpected character {c:?}"),
                ));
            }
            let v = tok
                .parse::<usize>()
                .map_err(|e| ParseError::new(offset, e.to_string()))?;
            values.push(v);
            offset += tok.chars().count() + 1;
        }
        Ok(values)
    } else {
        text.chars()
            .enumerate()
            .map(|(i, c)| match c.to_digit(10) {
                Some(d) => Ok(d as usize),
                None => Err(ParseError::new(i, format!("unexpected character {c:?}"))),
            })
            .collect()
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Permutation::parse(s)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text(TextStyle::Digits))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}
