//! Brute-force reference implementations shared by the integration tests.
//! Nothing here calls into the library's pattern matcher or statistics.

#![allow(dead_code)]

use itertools::Itertools;

/// Pattern in dash notation, decoded without the library parser.
#[derive(Debug, Clone)]
pub struct NaivePattern {
    pub word: Vec<usize>,
    /// `adjacent[i]`: letters i and i+1 must sit next to each other.
    pub adjacent: Vec<bool>,
    pub begin: bool,
    pub end: bool,
}

impl NaivePattern {
    pub fn parse(text: &str) -> NaivePattern {
        let begin = text.starts_with('[');
        let end = text.ends_with(']');
        let body = text.trim_start_matches('[').trim_end_matches(']');
        let mut word = Vec::new();
        let mut adjacent = Vec::new();
        let mut dash = false;
        for c in body.chars() {
            if c == '-' {
                dash = true;
                continue;
            }
            if !word.is_empty() {
                adjacent.push(!dash);
            }
            word.push(c.to_digit(10).expect("digit") as usize);
            dash = false;
        }
        NaivePattern {
            word,
            adjacent,
            begin,
            end,
        }
    }
}

fn order_isomorphic(a: &[usize], b: &[usize]) -> bool {
    a.len() == b.len() && (0..a.len()).all(|i| (0..a.len()).all(|j| (a[i] < a[j]) == (b[i] < b[j])))
}

/// Counts occurrences by filtering every position subset.
pub fn naive_count(pattern: &NaivePattern, host: &[usize]) -> u64 {
    let n = host.len();
    let k = pattern.word.len();
    (0..n)
        .combinations(k)
        .filter(|pos| {
            let sub: Vec<usize> = pos.iter().map(|&i| host[i]).collect();
            order_isomorphic(&sub, &pattern.word)
                && pattern
                    .adjacent
                    .iter()
                    .enumerate()
                    .all(|(i, &adj)| !adj || pos[i + 1] == pos[i] + 1)
                && (!pattern.begin || pos.first() == Some(&0))
                && (!pattern.end || pos.last() == Some(&(n - 1)))
        })
        .count() as u64
}

pub fn naive_contains(host: &[usize], word: &[usize]) -> bool {
    (0..host.len())
        .combinations(word.len())
        .any(|pos| order_isomorphic(&pos.iter().map(|&i| host[i]).collect::<Vec<_>>(), word))
}

pub fn naive_des(p: &[usize]) -> u64 {
    p.windows(2).filter(|w| w[0] > w[1]).count() as u64
}

pub fn naive_rlmax(p: &[usize]) -> u64 {
    (0..p.len()).filter(|&i| p[i + 1..].iter().all(|&v| v < p[i])).count() as u64
}

pub fn naive_rlmin(p: &[usize]) -> u64 {
    (0..p.len()).filter(|&i| p[i + 1..].iter().all(|&v| v > p[i])).count() as u64
}

/// All permutations of 1..=n in lexicographic order.
pub fn all_perms(n: usize) -> Vec<Vec<usize>> {
    (1..=n).permutations(n).collect()
}

/// Length-3 proper patterns: each word with one adjacency.
pub fn proper_pattern_texts() -> Vec<String> {
    let mut out = Vec::new();
    for word in (1..=3).permutations(3) {
        let [a, b, c] = [word[0], word[1], word[2]];
        out.push(format!("{a}{b}-{c}"));
        out.push(format!("{a}-{b}{c}"));
    }
    out
}

pub const HOOKED_LENGTH_TWO: [&str; 4] = ["1-2]", "2-1]", "[1-2", "[2-1"];

pub fn catalan(n: usize) -> u64 {
    let mut c = vec![1u64; n + 1];
    for m in 1..=n {
        c[m] = (0..m).map(|i| c[i] * c[m - 1 - i]).sum();
    }
    c[n]
}

pub fn direct_sum(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().copied().chain(b.iter().map(|v| v + a.len())).collect()
}

pub fn skew_sum(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().map(|v| v + b.len()).chain(b.iter().copied()).collect()
}

/// `p = alpha (-) (beta (+) 1)`; returns `(alpha, beta)`.
fn split_right(p: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let n = p.len();
    let last = p[n - 1];
    let alpha = p[..n - last].iter().map(|v| v - last).collect();
    let beta = p[n - last..n - 1].to_vec();
    (alpha, beta)
}

/// `p = (alpha (+) 1) (-) beta`; returns `(alpha, beta)`.
fn split_left(p: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let n = p.len();
    let k = p.iter().position(|&v| v == n).unwrap();
    let b = n - k - 1;
    (p[..k].iter().map(|v| v - b).collect(), p[k + 1..].to_vec())
}

pub fn ref_phi(p: &[usize]) -> Vec<usize> {
    if p.is_empty() {
        return Vec::new();
    }
    let (alpha, beta) = split_right(p);
    skew_sum(&ref_phi(&beta), &direct_sum(&ref_phi(&alpha), &[1]))
}

pub fn ref_psi(p: &[usize]) -> Vec<usize> {
    let n = p.len();
    if n == 0 {
        return Vec::new();
    }
    let k = p.iter().position(|&v| v == n).unwrap();
    if k == 0 {
        return skew_sum(&[1], &ref_psi(&p[1..]));
    }
    if k == n - 1 {
        let (gamma, delta) = split_left(&ref_psi(&p[..n - 1]));
        return skew_sum(&direct_sum(&direct_sum(&gamma, &[1]), &[1]), &delta);
    }
    let (alpha, beta) = split_left(p);
    let (gamma, delta) = split_right(&ref_psi(&beta));
    let inner = skew_sum(&ref_psi(&alpha), &direct_sum(&delta, &[1]));
    skew_sum(&direct_sum(&inner, &[1]), &gamma)
}

pub fn ref_mu(p: &[usize]) -> Vec<usize> {
    if p.is_empty() {
        return Vec::new();
    }
    let (alpha, beta) = split_right(p);
    skew_sum(&ref_mu(&alpha), &direct_sum(&ref_mu(&ref_psi(&beta)), &[1]))
}

pub fn inverse(p: &[usize]) -> Vec<usize> {
    let mut q = vec![0; p.len()];
    for (i, &v) in p.iter().enumerate() {
        q[v - 1] = i + 1;
    }
    q
}
