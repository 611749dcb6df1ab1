mod common;

use common::{all_perms, naive_count, proper_pattern_texts, NaivePattern, HOOKED_LENGTH_TWO};
use proptest::prelude::*;
use vincular::{Permutation, VincularPattern};

#[test]
fn counter_matches_brute_force_on_all_of_s_n() {
    let mut texts = proper_pattern_texts();
    texts.extend(HOOKED_LENGTH_TWO.iter().map(|s| s.to_string()));
    assert_eq!(texts.len(), 16);
    for text in &texts {
        let fast = VincularPattern::parse(text).unwrap();
        let slow = NaivePattern::parse(text);
        for n in 0..=7 {
            for host in all_perms(n) {
                let p = Permutation::from_values(host.clone()).unwrap();
                assert_eq!(fast.count(&p), naive_count(&slow, &host), "{text} on {p}");
            }
        }
    }
}

#[test]
fn worked_examples_agree_with_brute_force() {
    for (text, host, expected) in [
        ("2-13", vec![4, 2, 5, 1, 6, 3], 4),
        ("[2-13", vec![4, 2, 5, 1, 6, 3], 2),
        ("2-3-1", vec![1, 3, 4, 5, 2], 3),
        ("21", vec![4, 5, 3, 1, 2], 2),
    ] {
        assert_eq!(naive_count(&NaivePattern::parse(text), &host), expected, "{text}");
    }
}

fn perm_strategy(max: usize) -> impl Strategy<Value = Vec<usize>> {
    (0..=max).prop_flat_map(|n| Just((1..=n).collect::<Vec<_>>()).prop_shuffle())
}

/// Random vincular pattern text of length 1..=4, with random dashes and hooks.
fn pattern_strategy() -> impl Strategy<Value = String> {
    (1usize..=4)
        .prop_flat_map(|k| {
            (
                Just((1..=k).collect::<Vec<_>>()).prop_shuffle(),
                proptest::collection::vec(any::<bool>(), k - 1),
                any::<bool>(),
                any::<bool>(),
            )
        })
        .prop_map(|(word, dashes, begin, end)| {
            let mut s = String::new();
            if begin {
                s.push('[');
            }
            for (i, v) in word.iter().enumerate() {
                if i > 0 && dashes[i - 1] {
                    s.push('-');
                }
                s.push_str(&v.to_string());
            }
            if end {
                s.push(']');
            }
            s
        })
}

proptest! {
    #[test]
    fn random_patterns_match_brute_force(text in pattern_strategy(), host in perm_strategy(9)) {
        let fast = VincularPattern::parse(&text).unwrap();
        let p = Permutation::from_values(host.clone()).unwrap();
        prop_assert_eq!(fast.count(&p), naive_count(&NaivePattern::parse(&text), &host));
    }

    #[test]
    fn pattern_text_round_trips(text in pattern_strategy()) {
        let p = VincularPattern::parse(&text).unwrap();
        prop_assert_eq!(p.to_string(), text.clone());
        prop_assert_eq!(VincularPattern::parse(&p.to_string()).unwrap(), p);
    }
}
