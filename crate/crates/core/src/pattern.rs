//! Vincular patterns in dash notation and their occurrence counter.
//!
//! Grammar (letters are the digits `1..=k`):
//!
//! ```text
//! pattern := "["? letter ( "-"? letter )* "]"?
//! ```
//!
//! Two letters written side by side must be matched by adjacent host
//! positions; a dash allows any gap. A leading `[` pins the first letter to
//! host position 1, a trailing `]` pins the last letter to host position n.
//! Classical patterns are therefore written with every dash: `2-3-1`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, ParseError, Result};
use crate::perm::Permutation;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VincularPattern {
    word: Permutation,
    // adjacent[i] constrains letters i+1 and i+2 (1-based)
    adjacent: Vec<bool>,
    begin_hook: bool,
    end_hook: bool,
}

impl VincularPattern {
    /// `adjacent` holds 1-based positions `i` with `1 <= i < k`.
    pub fn new(
        word: Permutation,
        adjacent: impl IntoIterator<Item = usize>,
        begin_hook: bool,
        end_hook: bool,
    ) -> Result<Self> {
        let k = word.len();
        if k == 0 {
            return Err(Error::PatternSyntax {
                input: String::new(),
                source: ParseError::new(0, "empty pattern word"),
            });
        }
        let mut flags = vec![false; k - 1];
        for i in adjacent {
            if i == 0 || i >= k {
                return Err(Error::PatternSyntax {
                    input: word.to_string(),
                    source: ParseError::new(0, format!("adjacency position {i} outside 1..{k}")),
                });
            }
            flags[i - 1] = true;
        }
        Ok(VincularPattern {
            word,
            adjacent: flags,
            begin_hook,
            end_hook,
        })
    }

    pub fn classical(word: Permutation) -> Result<Self> {
        VincularPattern::new(word, [], false, false)
    }

    /// Every pair of neighbouring letters adjacent.
    pub fn consecutive(word: Permutation) -> Result<Self> {
        let k = word.len();
        VincularPattern::new(word, 1..k, false, false)
    }

    pub fn parse(text: &str) -> Result<Self> {
        parse_pattern(text).map_err(|source| Error::PatternSyntax {
            input: text.to_string(),
            source,
        })
    }

    pub fn word(&self) -> &Permutation {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// 1-based adjacency positions in increasing order.
    pub fn adjacent_positions(&self) -> Vec<usize> {
        self.adjacent
            .iter()
            .enumerate()
            .filter(|(_, &a)| a)
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn is_adjacent(&self, position: usize) -> bool {
        position >= 1 && self.adjacent.get(position - 1).copied().unwrap_or(false)
    }

    pub fn begin_hook(&self) -> bool {
        self.begin_hook
    }

    pub fn end_hook(&self) -> bool {
        self.end_hook
    }

    pub fn has_hooks(&self) -> bool {
        self.begin_hook || self.end_hook
    }

    pub fn is_classical(&self) -> bool {
        !self.has_hooks() && self.adjacent.iter().all(|a| !a)
    }

    pub fn is_consecutive(&self) -> bool {
        !self.has_hooks() && self.adjacent.iter().all(|&a| a)
    }

    /// Length three, exactly one adjacency, no hooks.
    pub fn is_proper(&self) -> bool {
        self.len() == 3 && !self.has_hooks() && self.adjacent.iter().filter(|&&a| a).count() == 1
    }

    /// Word reversed, adjacency `i -> k - i`, hooks swapped.
    pub fn reverse(&self) -> VincularPattern {
        let mut adjacent = self.adjacent.clone();
        adjacent.reverse();
        VincularPattern {
            word: self.word.reverse(),
            adjacent,
            begin_hook: self.end_hook,
            end_hook: self.begin_hook,
        }
    }

    pub fn complement(&self) -> VincularPattern {
        VincularPattern {
            word: self.word.complement(),
            ..self.clone()
        }
    }

    /// Number of occurrences in `host`.
    pub fn count(&self, host: &Permutation) -> u64 {
        let k = self.len();
        if k > host.len() {
            return 0;
        }
        let mut chosen = Vec::with_capacity(k);
        self.count_from(host.values(), &mut chosen)
    }

    /// True iff at least one occurrence exists.
    pub fn occurs_in(&self, host: &Permutation) -> bool {
        self.count(host) > 0
    }

    fn count_from(&self, host: &[usize], chosen: &mut Vec<usize>) -> u64 {
        let k = self.len();
        let n = host.len();
        let j = chosen.len();
        if j == k {
            return 1;
        }
        let mut lo = chosen.last().map_or(0, |&prev| prev + 1);
        // leave room for the remaining letters
        let mut hi = n - (k - j);
        if j == 0 && self.begin_hook {
            hi = 0;
        }
        if j > 0 && self.adjacent[j - 1] {
            hi = hi.min(lo);
        }
        if j == k - 1 && self.end_hook {
            lo = n - 1;
        }
        let word = self.word.values();
        let mut total = 0;
        for i in lo..=hi {
            let consistent = chosen
                .iter()
                .enumerate()
                .all(|(m, &c)| (host[c] < host[i]) == (word[m] < word[j]));
            if consistent {
                chosen.push(i);
                total += self.count_from(host, chosen);
                chosen.pop();
            }
        }
        total
    }
}

/// The twelve length-3 patterns with one adjacency and no hooks, ordered by
/// word then adjacency position.
pub fn proper_patterns() -> Vec<VincularPattern> {
    let words = ["123", "132", "213", "231", "312", "321"];
    words
        .iter()
        .flat_map(|w| {
            let word: Permutation = w.parse().expect("static word");
            [1, 2].map(|pos| VincularPattern::new(word.clone(), [pos], false, false).expect("static pattern"))
        })
        .collect()
}

fn parse_pattern(text: &str) -> std::result::Result<VincularPattern, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut pos = 0;
    let begin_hook = chars.first() == Some(&'[');
    if begin_hook {
        pos += 1;
    }
    let mut letters: Vec<usize> = Vec::new();
    let mut adjacent = Vec::new();
    let mut end_hook = false;
    let mut pending_dash: Option<usize> = None;
    while pos < chars.len() {
        let c = chars[pos];
        match c {
            '1'..='9' => {
                if !letters.is_empty() {
                    adjacent.push(pending_dash.is_none());
                }
                pending_dash = None;
                letters.push(c.to_digit(10).unwrap() as usize);
            }
            '-' => {
                if letters.is_empty() {
                    return Err(ParseError::new(pos, "dash before the first letter"));
                }
                if pending_dash.is_some() {
                    return Err(ParseError::new(pos, "repeated dash"));
                }
                pending_dash = Some(pos);
            }
            ']' => {
                if pos + 1 != chars.len() {
                    return Err(ParseError::new(pos, "']' must be the last character"));
                }
                end_hook = true;
            }
            '[' => return Err(ParseError::new(pos, "'[' must be the first character")),
            other => return Err(ParseError::new(pos, format!("unexpected character {other:?}"))),
        }
        pos += 1;
    }
    if let Some(at) = pending_dash {
        return Err(ParseError::new(at, "dash after the last letter"));
    }
    if letters.is_empty() {
        return Err(ParseError::new(pos, "empty pattern word"));
    }
    let k = letters.len();
    let mut seen = vec![false; k + 1];
    for (idx, &v) in letters.iter().enumerate() {
        let at = letter_offset(&chars, idx);
        if v > k {
            return Err(ParseError::new(at, format!("letter {v} outside 1..={k}")));
        }
        if seen[v] {
            return Err(ParseError::new(at, format!("repeated letter {v}")));
        }
        seen[v] = true;
    }
    Ok(VincularPattern {
        word: Permutation::from_values_unchecked(letters),
        adjacent,
        begin_hook,
        end_hook,
    })
}

fn letter_offset(chars: &[char], idx: usize) -> usize {
    chars
        .iter()
        .enumerate()
        .filter(|(_, c)| c.is_ascii_digit())
        .nth(idx)
        .map(|(i, _)| i)
        .unwrap_or(0)
}

impl FromStr for VincularPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        VincularPattern::parse(s)
    }
}

/// Canonical dash notation; inverse of [`VincularPattern::parse`].
impl fmt::Display for VincularPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.begin_hook {
            f.write_str("[")?;
        }
        for (i, v) in self.word.values().iter().enumerate() {
            if i > 0 && !self.adjacent[i - 1] {
                f.write_str("-")?;
            }
            write!(f, "{v}")?;
        }
        if self.end_hook {
            f.write_str("]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for VincularPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VincularPattern({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pat(s: &str) -> VincularPattern {
        s.parse().unwrap()
    }

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn grammar() {
        let p = pat("2-31");
        assert_eq!(p.word(), &perm("231"));
        assert_eq!(p.adjacent_positions(), vec![2]);
        assert!(!p.has_hooks());

        assert_eq!(pat("21-3").adjacent_positions(), vec![1]);
        assert!(pat("2-3-1").is_classical());

        let hooked = pat("[2-13");
        assert_eq!(hooked.word(), &perm("213"));
        assert_eq!(hooked.adjacent_positions(), vec![2]);
        assert!(hooked.begin_hook() && !hooked.end_hook());

        let tail = pat("1-2]");
        assert_eq!(tail.word(), &perm("12"));
        assert!(tail.end_hook() && tail.adjacent_positions().is_empty());

        assert!(pat("21").is_consecutive());
        assert!(pat("2-31").is_proper());
        assert!(!pat("231").is_proper());
        assert!(!pat("[2-31").is_proper());
    }

    #[test]
    fn grammar_errors() {
        let err = |s: &str| match VincularPattern::parse(s) {
            Err(Error::PatternSyntax { source, .. }) => source,
            other => panic!("{s}: expected syntax error, got {other:?}"),
        };
        assert!(err("2-2").reason.contains("repeated"));
        assert_eq!(err("2-2").position, 2);
        assert!(err("").reason.contains("empty"));
        assert!(err("[]").reason.contains("empty"));
        assert_eq!(err("2-x1").position, 2);
        assert_eq!(err("-21").position, 0);
        assert_eq!(err("21-").position, 2);
        assert_eq!(err("2--1").position, 2);
        assert_eq!(err("24-1").position, 1);
        assert_eq!(err("2]1").position, 1);
        assert_eq!(err("2[1").position, 1);
        assert!(err("0").reason.contains("unexpected"));
    }

    #[test]
    fn display_round_trips() {
        for s in ["2-31", "[2-13", "1-2]", "2-3-1", "21", "[12]", "1"] {
            assert_eq!(pat(s).to_string(), s);
        }
    }

    #[test]
    fn worked_counts() {
        assert_eq!(pat("2-13").count(&perm("425163")), 4);
        assert_eq!(pat("[2-13").count(&perm("425163")), 2);
        assert_eq!(pat("2-3-1").count(&perm("13452")), 3);
        assert_eq!(pat("1-2]").count(&perm("425163")), 2);
        assert_eq!(pat("2-13").count(&Permutation::empty()), 0);
        assert_eq!(pat("2-13").count(&perm("1")), 0);
    }

    #[test]
    fn hooks_on_short_hosts() {
        assert_eq!(pat("[1]").count(&perm("1")), 1);
        assert_eq!(pat("[12]").count(&perm("12")), 1);
        assert_eq!(pat("[12]").count(&perm("132")), 0);
        assert_eq!(pat("[1-2]").count(&perm("132")), 1);
        assert_eq!(pat("2-1]").count(&perm("1")), 0);
    }

    #[test]
    fn symmetries() {
        assert_eq!(pat("23-1").reverse(), pat("1-32"));
        assert_eq!(pat("21").reverse(), pat("12"));
        assert_eq!(pat("2-31").reverse(), pat("13-2"));
        assert_eq!(pat("[2-13").reverse(), pat("31-2]"));
        assert_eq!(pat("23-1").complement(), pat("21-3"));
        assert_eq!(pat("2-31").complement(), pat("2-13"));
        assert_eq!(pat("12").complement(), pat("21"));
    }

    #[test]
    fn proper_list() {
        let all = proper_patterns();
        assert_eq!(all.len(), 12);
        assert!(all.iter().all(VincularPattern::is_proper));
        let mut texts: Vec<String> = all.iter().map(|p| p.to_string()).collect();
        texts.sort();
        texts.dedup();
        assert_eq!(texts.len(), 12);
    }

    #[test]
    fn constructor_validates() {
        assert!(VincularPattern::new(perm("12"), [2], false, false).is_err());
        assert!(VincularPattern::new(Permutation::empty(), [], false, false).is_err());
        assert_eq!(VincularPattern::consecutive(perm("231")).unwrap(), pat("231"));
    }
}
