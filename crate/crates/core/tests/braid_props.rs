mod common;

use braid3_core::sweep::reduced_words;
use braid3_core::{parse, BraidWord, Generator, Permutation3};
use common::{p, word_strategy};
use proptest::prelude::*;

/// Strand bookkeeping independent of [`Permutation3`]: follows where the
/// strand starting at each position ends up.
fn strand_cycles(w: &BraidWord) -> usize {
    let mut pos = [0usize, 1, 2];
    for (g, _) in w.letters() {
        let (i, j) = match g {
            Generator::A => (0, 1),
            Generator::B => (1, 2),
        };
        for x in pos.iter_mut() {
            if *x == i {
                *x = j;
            } else if *x == j {
                *x = i;
            }
        }
    }
    let mut seen = [false; 3];
    let mut cycles = 0;
    for s in 0..3 {
        if !seen[s] {
            cycles += 1;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = pos[x];
            }
        }
    }
    cycles
}

#[test]
fn knot_iff_three_cycle_exhaustive() {
    for w in reduced_words(10) {
        let perm = w.permutation();
        assert_eq!(w.is_knot(), perm.is_three_cycle(), "{w}");
        assert_eq!(w.closure_components(), strand_cycles(&w), "{w}");
    }
}

#[test]
fn display_round_trips_exhaustive() {
    for w in reduced_words(8) {
        assert_eq!(parse(&w.to_string()).unwrap(), w);
    }
}

#[test]
fn spec_words() {
    assert_eq!(p("D^2"), p("a b a^2 b a"));
    assert_eq!(p("D^-1"), p("A B A"));
    assert_eq!(p("a^3 B a^-3 B").writhe(), -2);
    assert_eq!(p("A b").closure_components(), 1);
    assert_eq!(p("a^3 b^2").closure_components(), 2);
    assert_eq!(p("").closure_components(), 3);
    assert_eq!(p("D^2").permutation(), Permutation3::identity());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn concat_is_associative(u in word_strategy(6, 4), v in word_strategy(6, 4), w in word_strategy(6, 4)) {
        prop_assert_eq!(u.concat(&v).concat(&w), u.concat(&v.concat(&w)));
    }

    #[test]
    fn identity_and_inverse(w in word_strategy(8, 4)) {
        let e = BraidWord::identity();
        prop_assert_eq!(e.concat(&w), w.clone());
        prop_assert_eq!(w.concat(&e), w.clone());
        prop_assert!(w.concat(&w.inverse()).is_identity());
        prop_assert!(w.inverse().concat(&w).is_identity());
        prop_assert_eq!(w.inverse().inverse(), w.clone());
        prop_assert_eq!(w.mirror().mirror(), w);
    }

    #[test]
    fn writhe_is_additive(u in word_strategy(8, 4), v in word_strategy(8, 4)) {
        prop_assert_eq!(u.concat(&v).writhe(), u.writhe() + v.writhe());
        prop_assert_eq!(u.mirror().writhe(), -u.writhe());
    }

    #[test]
    fn permutation_is_multiplicative(u in word_strategy(8, 4), v in word_strategy(8, 4)) {
        prop_assert_eq!(u.concat(&v).permutation(), u.permutation().then(v.permutation()));
        prop_assert_eq!(u.mirror().permutation(), u.permutation());
    }

    #[test]
    fn syllables_stay_merged(w in word_strategy(10, 4)) {
        let syl = w.syllables();
        prop_assert!(syl.iter().all(|s| s.exponent != 0));
        prop_assert!(syl.windows(2).all(|x| x[0].generator != x[1].generator));
    }

    #[test]
    fn display_round_trips(w in word_strategy(10, 6)) {
        prop_assert_eq!(parse(&w.to_string()).unwrap(), w);
    }
}
