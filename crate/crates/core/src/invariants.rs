//! Closed-form knot and braid invariants read off the normal forms.
//!
//! Knot invariants (υ, σ, s, genera, alternation distances) need a knot
//! closure; the braid invariants ω and υ̃ are defined for every 3-braid.
//! Values that rest on a formula outside the core derivations are flagged
//! [`Exactness::Extension`]; two-sided estimates are [`Interval`]s.

use std::collections::BTreeMap;

use num_rational::Rational64;
use serde::{Serialize, Serializer};

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::normal_form::{garside_normal_form, GarsideForm, MurasugiForm, TorusVariant};

/// Closed integer interval `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: i64,
    pub hi: i64,
}

impl Interval {
    pub fn exact(v: i64) -> Self {
        Interval { lo: v, hi: v }
    }

    pub fn new(lo: i64, hi: i64) -> Self {
        assert!(lo <= hi, "empty interval [{lo}, {hi}]");
        Interval { lo, hi }
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, v: i64) -> bool {
        self.lo <= v && v <= self.hi
    }
}

impl Serialize for Interval {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Interval", 3)?;
        st.serialize_field("lo", &self.lo)?;
        st.serialize_field("hi", &self.hi)?;
        st.serialize_field("exact", &self.is_exact())?;
        st.end()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Exactness {
    Exact,
    Interval,
    Extension,
}

/// A positive torus knot T(3, 3ℓ+k), ℓ ≥ 0, k ∈ {1, 2}, possibly mirrored.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TorusKnot {
    pub l: i64,
    pub k: i64,
    pub mirrored: bool,
}

impl TorusKnot {
    /// The closure of Δ^{2ℓ}(ab)^k, k ∈ {1, 2}, i.e. of (ab)^{3ℓ+k}.
    pub fn from_delta_power(l: i64, k: i64) -> Self {
        if l >= 0 {
            TorusKnot {
                l,
                k,
                mirrored: false,
            }
        } else {
            TorusKnot {
                l: -l - 1,
                k: 3 - k,
                mirrored: true,
            }
        }
    }

    fn sign(&self) -> i64 {
        if self.mirrored {
            -1
        } else {
            1
        }
    }

    pub fn genus(&self) -> i64 {
        3 * self.l + self.k - 1
    }

    pub fn upsilon(&self) -> i64 {
        let v = if self.k == 1 {
            -2 * self.l
        } else {
            -2 * self.l - 1
        };
        self.sign() * v
    }

    pub fn signature(&self) -> i64 {
        let base = -2 * self.sign() * (if self.k == 1 { 2 * self.l } else { 2 * self.l + 1 });
        if self.l % 2 == 1 {
            base - 2 * self.sign()
        } else {
            base
        }
    }
}

fn torus_of_garside(g: &GarsideForm) -> Option<TorusKnot> {
    match *g {
        GarsideForm::B { l, p: 1 } => Some(TorusKnot::from_delta_power(l, 1)),
        GarsideForm::B { l, p: 3 } => Some(TorusKnot::from_delta_power(l, 2)),
        _ => None,
    }
}

fn torus_of_murasugi(m: &MurasugiForm) -> Option<TorusKnot> {
    match *m {
        MurasugiForm::Torus { l, variant } => Some(TorusKnot::from_delta_power(
            l,
            match variant {
                TorusVariant::Ab => 1,
                TorusVariant::Abab => 2,
            },
        )),
        _ => None,
    }
}

pub fn garside_is_knot(g: &GarsideForm) -> bool {
    g.realize().is_knot()
}

pub fn murasugi_is_knot(m: &MurasugiForm) -> bool {
    m.realize().is_knot()
}

fn integral(v: Rational64, what: &str) -> Result<i64> {
    if v.is_integer() {
        Ok(v.to_integer())
    } else {
        Err(Error::Internal(format!("non-integral {what} {v}")))
    }
}

fn half(n: i64) -> Rational64 {
    Rational64::new(n, 2)
}

fn generic_sum(pairs: &[(i64, i64)]) -> i64 {
    pairs.iter().map(|&(p, q)| p - q).sum()
}

/// υ of the closure from the Garside form.
pub fn upsilon_garside(g: &GarsideForm) -> Result<i64> {
    if !garside_is_knot(g) {
        return Err(Error::NotAKnot);
    }
    if let Some(t) = torus_of_garside(g) {
        return Ok(t.upsilon());
    }
    integral(slope_formula(g).expect("knot forms are B, C or D"), "upsilon")
}

/// −Σ/2 + r − 2ℓ for case C, −Σ/2 + r − 2ℓ − 3/2 for case D.
fn slope_formula(g: &GarsideForm) -> Option<Rational64> {
    let r = g.r()?;
    let sum: i64 = g.exponents().iter().sum();
    let base = -half(sum) + r - 2 * g.l();
    Some(match g {
        GarsideForm::D { .. } => base - half(3),
        _ => base,
    })
}

/// υ of the closure from the Murasugi form.
pub fn upsilon_murasugi(m: &MurasugiForm) -> Result<i64> {
    if !murasugi_is_knot(m) {
        return Err(Error::NotAKnot);
    }
    if let Some(t) = torus_of_murasugi(m) {
        return Ok(t.upsilon());
    }
    match m {
        MurasugiForm::Generic { l, pairs } => {
            integral(half(generic_sum(pairs)) - 2 * l, "upsilon")
        }
        _ => Err(Error::NotAKnot),
    }
}

pub fn signature(m: &MurasugiForm) -> Result<i64> {
    if !murasugi_is_knot(m) {
        return Err(Error::NotAKnot);
    }
    if let Some(t) = torus_of_murasugi(m) {
        return Ok(t.signature());
    }
    match m {
        MurasugiForm::Generic { l, pairs } => Ok(generic_sum(pairs) - 4 * l),
        _ => Err(Error::NotAKnot),
    }
}

/// Rasmussen s. Torus closures use s = ±2g, flagged as an extension.
pub fn rasmussen_s(m: &MurasugiForm) -> Result<(i64, Exactness)> {
    if !murasugi_is_knot(m) {
        return Err(Error::NotAKnot);
    }
    if let Some(t) = torus_of_murasugi(m) {
        return Ok((2 * t.sign() * t.genus(), Exactness::Extension));
    }
    match m {
        MurasugiForm::Generic { l, pairs } => {
            let sum = generic_sum(pairs);
            let s = match l.signum() {
                1 => -sum + 6 * l - 2,
                -1 => -sum + 6 * l + 2,
                _ => -signature(m)?,
            };
            Ok((s, Exactness::Exact))
        }
        _ => Err(Error::NotAKnot),
    }
}

/// Three-genus, four-genus and τ.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenusTau {
    pub genus3: Option<i64>,
    pub genus4: Option<i64>,
    pub tau: i64,
    pub exactness: Exactness,
}

/// A positive Garside form conjugate to the braid or to its mirror.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositiveSide {
    pub form: GarsideForm,
    pub mirrored: bool,
}

/// Finds a positive representative of `g` or of its mirror.
pub fn positive_side(g: &GarsideForm) -> Option<PositiveSide> {
    if g.is_positive() {
        return Some(PositiveSide {
            form: g.clone(),
            mirrored: false,
        });
    }
    let (mg, _) = garside_normal_form(&g.realize().mirror());
    mg.is_positive().then_some(PositiveSide {
        form: mg,
        mirrored: true,
    })
}

/// For positive closures all three equal (wr − 2)/2; mirrors of positive
/// closures negate τ (flagged as an extension); alternating Murasugi forms
/// with ℓ = 0 give τ = −σ/2 only.
pub fn genus_tau(g: &GarsideForm, m: &MurasugiForm) -> Result<Option<GenusTau>> {
    if !garside_is_knot(g) {
        return Err(Error::NotAKnot);
    }
    if let Some(side) = positive_side(g) {
        let genus = (side.form.writhe() - 2) / 2;
        return Ok(Some(GenusTau {
            genus3: Some(genus),
            genus4: Some(genus),
            tau: if side.mirrored { -genus } else { genus },
            exactness: if side.mirrored {
                Exactness::Extension
            } else {
                Exactness::Exact
            },
        }));
    }
    if let MurasugiForm::Generic { l: 0, .. } = m {
        return Ok(Some(GenusTau {
            genus3: None,
            genus4: None,
            tau: -signature(m)? / 2,
            exactness: Exactness::Exact,
        }));
    }
    Ok(None)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AltDistances {
    pub alt: Interval,
    pub dalt: Interval,
    pub turaev: Interval,
}

impl AltDistances {
    fn all(v: Interval) -> Self {
        AltDistances {
            alt: v,
            dalt: v,
            turaev: v,
        }
    }
}

fn positive_alt(g: &GarsideForm) -> i64 {
    match torus_of_garside(g) {
        Some(t) => t.l,
        None => g.r().expect("positive knot forms are B, C or D") + g.l() - 1,
    }
}

/// Alternation number, dealternating number and Turaev genus.
pub fn alternating_distances(g: &GarsideForm, m: &MurasugiForm) -> Result<AltDistances> {
    if !garside_is_knot(g) {
        return Err(Error::NotAKnot);
    }
    if let Some(side) = positive_side(g) {
        return Ok(AltDistances::all(Interval::exact(positive_alt(&side.form))));
    }
    match m {
        MurasugiForm::Generic { l: 0, .. } => Ok(AltDistances::all(Interval::exact(0))),
        MurasugiForm::Generic { l, .. } => {
            let a = l.abs();
            Ok(AltDistances::all(Interval::new(a - 1, a)))
        }
        _ => Err(Error::Internal(format!(
            "torus form {m} without a positive representative"
        ))),
    }
}

/// Minimal number of a-syllables g + υ + 1 for positive knot forms.
pub fn minimal_r(g: &GarsideForm) -> Result<Option<i64>> {
    if !garside_is_knot(g) {
        return Err(Error::NotAKnot);
    }
    if !g.is_positive() {
        return Ok(None);
    }
    let genus = (g.writhe() - 2) / 2;
    Ok(Some(genus + upsilon_garside(g)? + 1))
}

/// Fractional Dehn twist coefficient.
pub fn fdtc(g: &GarsideForm) -> Rational64 {
    let l = Rational64::from_integer(g.l());
    match g {
        GarsideForm::A { .. } => l,
        GarsideForm::B { p, .. } => Rational64::new(p + 1, 6) + l,
        GarsideForm::C { .. } | GarsideForm::D { .. } => l + g.r().unwrap(),
    }
}

/// Homogenized upsilon υ̃.
pub fn homogenized_upsilon(g: &GarsideForm) -> Rational64 {
    let l2 = Rational64::from_integer(2 * g.l());
    match g {
        GarsideForm::A { p, .. } => -half(*p) - l2,
        GarsideForm::B { p, .. } => -Rational64::new(p + 1, 3) - l2,
        _ => slope_formula(g).unwrap(),
    }
}

/// Ballinger's t = −2υ and the lower bound |υ − σ/2| on the
/// nonorientable 4-genus.
pub fn derived_concordance(upsilon: i64, signature: i64) -> (i64, i64) {
    (-2 * upsilon, (upsilon - signature / 2).abs())
}

/// −g + r − 1 for a positive knot word with r a-syllables after cyclic
/// alignment.
pub fn syllable_slope_bound(w: &BraidWord) -> Result<i64> {
    if !w.is_positive() {
        return Err(Error::NotPositive);
    }
    if !w.is_knot() {
        return Err(Error::NotAKnot);
    }
    let pairs = w.aligned_pairs().ok_or(Error::NotAKnot)?;
    Ok(-(w.writhe() - 2) / 2 + pairs.len() as i64 - 1)
}

/// Smallest available upper bound on the slope of Υ at t = 1 for positive
/// knot forms.
pub fn upsilon_upper_bound_slope(g: &GarsideForm) -> Result<Option<Rational64>> {
    if !garside_is_knot(g) {
        return Err(Error::NotAKnot);
    }
    if !g.is_positive() {
        return Ok(None);
    }
    let mut best = Rational64::from_integer(syllable_slope_bound(&g.realize())?);
    if let Some(v) = slope_formula(g) {
        best = best.min(v);
    }
    Ok(Some(best))
}

/// Every invariant of one braid word.
#[derive(Debug, Clone, PartialEq)]
pub struct InvariantReport {
    pub components: usize,
    pub is_knot: bool,
    pub upsilon: Option<i64>,
    pub signature: Option<i64>,
    pub s: Option<i64>,
    pub genus3: Option<i64>,
    pub genus4: Option<i64>,
    pub tau: Option<i64>,
    pub alt: Option<Interval>,
    pub dalt: Option<Interval>,
    pub turaev: Option<Interval>,
    pub minimal_r: Option<i64>,
    pub ballinger_t: Option<i64>,
    pub fdtc: Rational64,
    pub homogenized_upsilon: Rational64,
    pub gamma4_lower: Option<i64>,
    pub garside_form: GarsideForm,
    pub murasugi_form: MurasugiForm,
    pub flags: BTreeMap<&'static str, Exactness>,
}

/// Formats a rational as `num/den`.
pub fn ratio_string(r: &Rational64) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

impl Serialize for InvariantReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("InvariantReport", 19)?;
        st.serialize_field("components", &self.components)?;
        st.serialize_field("is_knot", &self.is_knot)?;
        st.serialize_field("upsilon", &self.upsilon)?;
        st.serialize_field("signature", &self.signature)?;
        st.serialize_field("s", &self.s)?;
        st.serialize_field("genus3", &self.genus3)?;
        st.serialize_field("genus4", &self.genus4)?;
        st.serialize_field("tau", &self.tau)?;
        st.serialize_field("alt", &self.alt)?;
        st.serialize_field("dalt", &self.dalt)?;
        st.serialize_field("turaev", &self.turaev)?;
        st.serialize_field("minimal_r", &self.minimal_r)?;
        st.serialize_field("ballinger_t", &self.ballinger_t)?;
        st.serialize_field("fdtc", &ratio_string(&self.fdtc))?;
        st.serialize_field(
            "homogenized_upsilon",
            &ratio_string(&self.homogenized_upsilon),
        )?;
        st.serialize_field("gamma4_lower", &self.gamma4_lower)?;
        st.serialize_field("garside_form", &self.garside_form.to_string())?;
        st.serialize_field("murasugi_form", &self.murasugi_form.to_string())?;
        st.serialize_field("flags", &self.flags)?;
        st.end()
    }
}

/// Classifies `w` and evaluates every invariant that applies.
///
/// υ is computed from both normal forms; disagreement is reported as an
/// internal inconsistency.
pub fn report(w: &BraidWord) -> Result<InvariantReport> {
    let (g, _) = garside_normal_form(w);
    report_for_form(&g, w.closure_components())
}

/// As [`report`], starting from an already computed Garside form.
pub fn report_for_form(g: &GarsideForm, components: usize) -> Result<InvariantReport> {
    let m = g.to_murasugi();
    let mut flags = BTreeMap::new();
    flags.insert("fdtc", Exactness::Exact);
    flags.insert("homogenized_upsilon", Exactness::Exact);
    let mut rep = InvariantReport {
        components,
        is_knot: components == 1,
        upsilon: None,
        signature: None,
        s: None,
        genus3: None,
        genus4: None,
        tau: None,
        alt: None,
        dalt: None,
        turaev: None,
        minimal_r: None,
        ballinger_t: None,
        fdtc: fdtc(g),
        homogenized_upsilon: homogenized_upsilon(g),
        gamma4_lower: None,
        garside_form: g.clone(),
        murasugi_form: m.clone(),
        flags,
    };
    if !rep.is_knot {
        return Ok(rep);
    }
    let ug = upsilon_garside(g)?;
    let um = upsilon_murasugi(&m)?;
    if ug != um {
        return Err(Error::Internal(format!(
            "upsilon disagrees between {g} ({ug}) and {m} ({um})"
        )));
    }
    let sigma = signature(&m)?;
    if sigma % 2 != 0 {
        return Err(Error::Internal(format!("odd signature {sigma}")));
    }
    let (s, s_flag) = rasmussen_s(&m)?;
    let (t, g4_lower) = derived_concordance(ug, sigma);
    rep.upsilon = Some(ug);
    rep.signature = Some(sigma);
    rep.s = Some(s);
    rep.ballinger_t = Some(t);
    rep.gamma4_lower = Some(g4_lower);
    for key in ["upsilon", "signature", "ballinger_t", "gamma4_lower"] {
        rep.flags.insert(key, Exactness::Exact);
    }
    rep.flags.insert("s", s_flag);

    if let Some(gt) = genus_tau(g, &m)? {
        rep.genus3 = gt.genus3;
        rep.genus4 = gt.genus4;
        rep.tau = Some(gt.tau);
        if gt.genus3.is_some() {
            rep.flags.insert("genus3", Exactness::Exact);
            rep.flags.insert("genus4", Exactness::Exact);
        }
        rep.flags.insert("tau", gt.exactness);
    }
    let d = alternating_distances(g, &m)?;
    for (key, v) in [("alt", d.alt), ("dalt", d.dalt), ("turaev", d.turaev)] {
        rep.flags.insert(
            key,
            if v.is_exact() {
                Exactness::Exact
            } else {
                Exactness::Interval
            },
        );
    }
    rep.alt = Some(d.alt);
    rep.dalt = Some(d.dalt);
    rep.turaev = Some(d.turaev);
    rep.minimal_r = minimal_r(g)?;
    if rep.minimal_r.is_some() {
        rep.flags.insert("minimal_r", Exactness::Exact);
    }
    Ok(rep)
}
