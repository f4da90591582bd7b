mod common;

use braid3_core::invariants::{
    derived_concordance, fdtc, homogenized_upsilon, report, report_for_form, upsilon_garside,
    upsilon_murasugi, upsilon_upper_bound_slope, Exactness, Interval, InvariantReport,
};
use braid3_core::normal_form::{garside_normal_form, GarsideForm, MurasugiForm};
use braid3_core::sweep::{par_map, random_words, reduced_words};
use braid3_core::BraidWord;
use common::{cd_forms, p, word_strategy};
use num_rational::Rational64;
use num_traits::Signed;
use proptest::prelude::*;

fn rep(s: &str) -> InvariantReport {
    report(&p(s)).unwrap()
}

fn ratio(n: i64, d: i64) -> Rational64 {
    Rational64::new(n, d)
}

#[test]
fn torus_values() {
    let t34 = rep("abababab");
    assert_eq!((t34.upsilon, t34.signature), (Some(-2), Some(-6)));
    assert_eq!((t34.genus3, t34.genus4, t34.tau), (Some(3), Some(3), Some(3)));
    assert_eq!(t34.alt, Some(Interval::exact(1)));
    assert_eq!(t34.minimal_r, Some(2));
    assert_eq!(t34.fdtc, ratio(4, 3));
    assert_eq!(t34.homogenized_upsilon, ratio(-8, 3));
    assert_eq!((t34.ballinger_t, t34.gamma4_lower), (Some(4), Some(1)));
    let t35 = rep("ababababab");
    assert_eq!((t35.upsilon, t35.signature), (Some(-3), Some(-8)));
}

#[test]
fn section_five_examples() {
    let k820 = rep("a^3 B a^-3 B");
    assert_eq!((k820.upsilon, k820.signature, k820.s), (Some(0), Some(0), Some(0)));
    assert_eq!(k820.alt, Some(Interval::new(0, 1)));
    assert_eq!(k820.fdtc, ratio(-1, 1));
    assert_eq!(k820.homogenized_upsilon, ratio(0, 1));
    assert_eq!((k820.ballinger_t, k820.gamma4_lower), (Some(0), Some(0)));

    let k821 = rep("a^3 b A^2 b^2");
    assert_eq!((k821.upsilon, k821.signature), (Some(-1), Some(-2)));
    assert_eq!(k821.s, Some(-2 * k821.upsilon.unwrap()));
    assert_eq!(k821.s, Some(-k821.signature.unwrap()));
}

#[test]
fn murasugi_generic_examples() {
    let trefoil = MurasugiForm::Generic { l: 0, pairs: vec![(1, 3)] };
    let r = report(&trefoil.realize()).unwrap();
    assert_eq!((r.signature, r.s, r.tau, r.genus3), (Some(-2), Some(2), Some(1), None));
    assert_eq!(r.alt, Some(Interval::exact(0)));
    let m820 = MurasugiForm::Generic { l: -1, pairs: vec![(1, 5)] };
    assert_eq!(upsilon_murasugi(&m820), Ok(0));
    let m821 = MurasugiForm::Generic { l: 1, pairs: vec![(1, 1), (3, 1)] };
    assert_eq!(upsilon_murasugi(&m821), Ok(-1));
}

#[test]
fn garside_examples() {
    let granny = GarsideForm::C { l: 0, pairs: vec![(3, 3)] };
    assert_eq!(upsilon_garside(&granny), Ok(-2));
    let r = report_for_form(&granny, 1).unwrap();
    assert_eq!((r.genus3, r.genus4, r.tau, r.minimal_r), (Some(2), Some(2), Some(2), Some(1)));
    assert_eq!(r.alt, Some(Interval::exact(0)));
    assert_eq!(upsilon_upper_bound_slope(&granny), Ok(Some(ratio(-2, 1))));

    let d = GarsideForm::D { l: 0, pairs: vec![], last: 3 };
    let slope = upsilon_upper_bound_slope(&d).unwrap().unwrap();
    assert_eq!(slope, Rational64::from_integer(upsilon_garside(&d).unwrap()));
    let c = GarsideForm::C { l: 1, pairs: vec![(3, 3)] };
    assert_eq!(upsilon_upper_bound_slope(&c), Ok(Some(ratio(-4, 1))));
    assert_eq!(upsilon_garside(&c), Ok(-4));

    assert_eq!(fdtc(&GarsideForm::A { l: 1, p: 0 }), ratio(1, 1));
    assert_eq!(fdtc(&GarsideForm::B { l: 0, p: 2 }), ratio(1, 2));
    for l in -3..=3 {
        assert_eq!(homogenized_upsilon(&GarsideForm::A { l, p: 0 }), ratio(-2 * l, 1));
    }
    assert_eq!(derived_concordance(-2, -6), (4, 1));
}

#[test]
fn links_report_braid_invariants_only() {
    let r = rep("a^3");
    assert!(!r.is_knot);
    assert_eq!(r.components, 2);
    assert_eq!(r.fdtc, ratio(0, 1));
    assert_eq!(r.upsilon, None);
    let r = rep("A b");
    assert_eq!((r.upsilon, r.signature), (Some(0), Some(0)));
}

#[test]
fn connected_sum_additivity() {
    for a in (1..=9).step_by(2) {
        for b in (1..=9).step_by(2) {
            let w = BraidWord::from_pairs(&[
                (braid3_core::Generator::A, a),
                (braid3_core::Generator::B, b),
            ]);
            assert_eq!(report(&w).unwrap().upsilon, Some(-(a - 1) / 2 - (b - 1) / 2));
        }
    }
}

fn all_forms() -> Vec<GarsideForm> {
    let mut forms = cd_forms(-3..=3, 3, 4);
    for l in -3..=3 {
        for q in 0..=6 {
            forms.push(GarsideForm::A { l, p: q });
        }
        for q in 1..=3 {
            forms.push(GarsideForm::B { l, p: q });
        }
    }
    forms
}

#[test]
fn fdtc_is_homogenized_upsilon_plus_half_writhe() {
    for g in all_forms() {
        let rhs = homogenized_upsilon(&g) + ratio(g.realize().writhe(), 2);
        assert_eq!(fdtc(&g), rhs, "{g}");
    }
}

#[test]
fn homogenized_upsilon_matches_knot_upsilon() {
    for g in cd_forms(-3..=3, 3, 4) {
        if g.realize().is_knot() {
            let u = upsilon_garside(&g).unwrap();
            assert_eq!(homogenized_upsilon(&g), Rational64::from_integer(u), "{g}");
        }
    }
}

fn omega(w: &BraidWord) -> Rational64 {
    fdtc(&garside_normal_form(w).0)
}

#[test]
fn quasimorphism_defect() {
    let words = random_words(77, 20_000, 30);
    let defects = par_map(&words.chunks(2).collect::<Vec<_>>(), |pair| {
        let (u, v) = (&pair[0], &pair[1]);
        (omega(&u.concat(v)) - omega(u) - omega(v)).abs()
    });
    assert!(defects.iter().all(|d| *d <= Rational64::from_integer(1)));
}

#[test]
fn fdtc_homogeneity() {
    for w in random_words(5, 200, 20) {
        let base = omega(&w);
        for k in -3..=3 {
            assert_eq!(omega(&w.pow(k)), base * k, "{w}^{k}");
        }
    }
}

fn check_knot(w: &BraidWord) -> Result<(), String> {
    let r = report(w).map_err(|e| format!("{w}: {e}"))?;
    let m = report(&w.mirror()).map_err(|e| format!("mirror {w}: {e}"))?;
    let (u, s) = (r.upsilon.unwrap(), r.signature.unwrap());
    if m.upsilon != Some(-u) || m.signature != Some(-s) || m.fdtc != -r.fdtc {
        return Err(format!("{w}: mirror antisymmetry"));
    }
    let g = &r.garside_form;
    if upsilon_garside(g) != upsilon_murasugi(&r.murasugi_form) {
        return Err(format!("{w}: cross-form upsilon"));
    }
    if let MurasugiForm::Generic { l, .. } = r.murasugi_form {
        if s != 2 * u {
            return Err(format!("{w}: signature is not 2 upsilon"));
        }
        let alt = r.alt.unwrap();
        if l != 0 && (alt.lo < l.abs() - 1 || alt.hi > l.abs()) {
            return Err(format!("{w}: alt outside generic bounds"));
        }
    }
    if (2 * u - s).abs() > 2 {
        return Err(format!("{w}: |υ − σ/2| > 1"));
    }
    if let Some(g4) = r.genus4 {
        if u.abs() > g4 {
            return Err(format!("{w}: |υ| > g4"));
        }
    }
    if let Some(syllables) = g.r() {
        if r.alt.unwrap().lo < (syllables + g.l()).abs() - 1 {
            return Err(format!("{w}: alt below |r+ℓ|−1"));
        }
    }
    for i in [r.alt, r.dalt, r.turaev].into_iter().flatten() {
        if i.lo > i.hi {
            return Err(format!("{w}: empty interval"));
        }
    }
    if r.flags.get("alt") == Some(&Exactness::Exact) && !r.alt.unwrap().is_exact() {
        return Err(format!("{w}: exact flag on interval"));
    }
    Ok(())
}

#[test]
fn structural_properties_length_12() {
    let words: Vec<BraidWord> = reduced_words(12).into_iter().filter(|w| w.is_knot()).collect();
    let failures: Vec<String> = par_map(&words, check_knot)
        .into_iter()
        .filter_map(|r| r.err())
        .collect();
    assert!(failures.is_empty(), "{:?}", &failures[..failures.len().min(5)]);
}

#[test]
fn structural_properties_random_long() {
    let words: Vec<BraidWord> = random_words(13, 4000, 40)
        .into_iter()
        .filter(|w| w.is_knot())
        .take(1000)
        .collect();
    assert_eq!(words.len(), 1000);
    let failures: Vec<String> = par_map(&words, check_knot)
        .into_iter()
        .filter_map(|r| r.err())
        .collect();
    assert!(failures.is_empty(), "{:?}", &failures[..failures.len().min(5)]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn report_is_conjugation_invariant(w in word_strategy(8, 4), u in word_strategy(5, 3)) {
        prop_assert_eq!(report(&w.conjugate_by(&u)), report(&w));
    }

    #[test]
    fn json_round_trip(w in word_strategy(8, 4)) {
        let r = report(&w).unwrap();
        let again = report(&braid3_core::parse(&r.garside_form.to_string()).unwrap()).unwrap();
        prop_assert_eq!(
            serde_json::to_string(&r).unwrap(),
            serde_json::to_string(&again).unwrap()
        );
    }
}
