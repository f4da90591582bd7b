#![allow(dead_code)]

use braid3_core::normal_form::{garside_normal_form, GarsideForm};
use braid3_core::{parse, BraidWord, Generator};
use proptest::prelude::*;

pub fn p(s: &str) -> BraidWord {
    parse(s).unwrap()
}

pub fn word_strategy(max_syllables: usize, max_exp: i64) -> impl Strategy<Value = BraidWord> {
    prop::collection::vec(
        (
            prop::bool::ANY,
            (1..=max_exp).prop_flat_map(|e| prop_oneof![Just(e), Just(-e)]),
        ),
        0..=max_syllables,
    )
    .prop_map(|v| {
        let pairs: Vec<(Generator, i64)> = v
            .into_iter()
            .map(|(a, e)| (if a { Generator::A } else { Generator::B }, e))
            .collect();
        BraidWord::from_pairs(&pairs)
    })
}

fn pair_lists(r: usize, lo: i64, hi: i64) -> Vec<Vec<(i64, i64)>> {
    let mut out = vec![vec![]];
    for _ in 0..r {
        let mut next = Vec::new();
        for prefix in &out {
            for p in lo..=hi {
                for q in lo..=hi {
                    let mut v = prefix.clone();
                    v.push((p, q));
                    next.push(v);
                }
            }
        }
        out = next;
    }
    out
}

/// Garside forms of cases C and D with ℓ in `ls`, r ≤ `max_r`, exponents in
/// `2..=max_exp`.
pub fn cd_forms(ls: std::ops::RangeInclusive<i64>, max_r: usize, max_exp: i64) -> Vec<GarsideForm> {
    let mut out = Vec::new();
    for l in ls {
        for r in 1..=max_r {
            for pairs in pair_lists(r, 2, max_exp) {
                out.push(GarsideForm::C { l, pairs });
            }
            for pairs in pair_lists(r - 1, 2, max_exp) {
                for last in 2..=max_exp {
                    out.push(GarsideForm::D {
                        l,
                        pairs: pairs.clone(),
                        last,
                    });
                }
            }
        }
    }
    out
}

/// Positive knot-closure words with at most three a-syllables and
/// exponents at most 5, together with realized positive C/D forms and torus
/// words, restricted to Garside ℓ ≤ 2.
pub fn positive_sweep() -> Vec<BraidWord> {
    let mut words = Vec::new();
    for r in 1..=3 {
        for pairs in pair_lists(r, 1, 5) {
            let flat: Vec<(Generator, i64)> = pairs
                .iter()
                .flat_map(|&(a, b)| [(Generator::A, a), (Generator::B, b)])
                .collect();
            words.push(BraidWord::from_pairs(&flat));
        }
    }
    words.extend(cd_forms(0..=2, 3, 5).iter().map(GarsideForm::realize));
    for n in 1..=8 {
        words.push(p("ab").pow(n));
    }
    words.retain(|w| w.is_knot() && garside_normal_form(w).0.l() <= 2);
    words
}
