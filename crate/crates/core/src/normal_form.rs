//! Conjugacy normal forms of 3-braids.
//!
//! [`garside_normal_form`] rewrites any word into one of four shapes
//!
//! ```text
//! A: Δ^{2ℓ} a^p                        p ≥ 0
//! B: Δ^{2ℓ} a^p b                      p ∈ {1, 2, 3}
//! C: Δ^{2ℓ} a^{p1} b^{q1} … a^{pr} b^{qr}      all exponents ≥ 2
//! D: Δ^{2ℓ+1} a^{p1} b^{q1} … a^{pr}           all exponents ≥ 2
//! ```
//!
//! and records the conjugator that carries the input to the form, so every
//! answer can be checked by the Burau oracle. [`murasugi_normal_form`] maps
//! the result onto the classical Murasugi list.
//!
//! Cases C and D are unique only up to cyclic rotation of the exponent
//! sequence (and, through conjugation by Δ, rotation by a single syllable).
//! The stored rotation is the one whose sequence, read starting from its
//! second entry, is lexicographically least. Murasugi generic forms use the
//! lexicographically least rotation of the pair list.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::braid::{delta_power, write_syllable, BraidWord, Generator};
use crate::burau::words_equal;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "case")]
pub enum GarsideForm {
    A {
        l: i64,
        p: i64,
    },
    B {
        l: i64,
        p: i64,
    },
    C {
        l: i64,
        pairs: Vec<(i64, i64)>,
    },
    /// Δ^{2ℓ+1} a^{p1} b^{q1} … a^{p(r-1)} b^{q(r-1)} a^{last}.
    D {
        l: i64,
        pairs: Vec<(i64, i64)>,
        last: i64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TorusVariant {
    /// Δ^{2ℓ} ab
    Ab,
    /// Δ^{2ℓ} abab
    Abab,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "case")]
pub enum MurasugiForm {
    /// Δ^{2ℓ} a^p, any integer p.
    La { l: i64, p: i64 },
    /// Δ^{2ℓ+1}.
    Lhalf { l: i64 },
    Torus { l: i64, variant: TorusVariant },
    /// Δ^{2ℓ} a^{-p1} b^{q1} … a^{-pr} b^{qr}, all exponents ≥ 1.
    Generic { l: i64, pairs: Vec<(i64, i64)> },
}

/// Evidence that `conjugator · source · conjugator⁻¹ = target`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjugacyCertificate {
    pub conjugator: BraidWord,
    pub source: BraidWord,
    pub target: BraidWord,
}

impl ConjugacyCertificate {
    pub fn verify(&self) -> bool {
        words_equal(&self.source.conjugate_by(&self.conjugator), &self.target)
    }
}

/// `source = Δ^{2k} · positive` with `k ≤ 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaSplit {
    pub source: BraidWord,
    pub k: i64,
    pub positive: BraidWord,
}

impl DeltaSplit {
    pub fn verify(&self) -> bool {
        words_equal(&self.source, &delta_power(2 * self.k).concat(&self.positive))
    }
}

const A: Generator = Generator::A;
const B: Generator = Generator::B;

/// Replaces each inverse letter by a positive word of length five using
/// Δ² a⁻¹ = babab and Δ² b⁻¹ = ababa; the Δ⁻² factors are central.
pub fn delta_positive_split(w: &BraidWord) -> DeltaSplit {
    let (k, positive) = positive_letters(w);
    DeltaSplit {
        source: w.clone(),
        k,
        positive: BraidWord::from_positive_letters(&positive),
    }
}

fn positive_letters(w: &BraidWord) -> (i64, Vec<Generator>) {
    let mut k = 0;
    let mut out = Vec::with_capacity(w.letter_len());
    for (g, sign) in w.letters() {
        if sign > 0 {
            out.push(g);
        } else {
            k -= 1;
            let h = g.swap();
            out.extend_from_slice(&[h, g, h, g, h]);
        }
    }
    (k, out)
}

fn word_of(letters: &[Generator]) -> BraidWord {
    BraidWord::from_positive_letters(letters)
}

fn twisted(letters: &[Generator], m: i64) -> Vec<Generator> {
    letters.iter().map(|g| g.twist(m)).collect()
}

fn is_delta(x: Generator, y: Generator, z: Generator) -> bool {
    x == z && x != y
}

/// Greedy Δ-extraction on the cyclic word Δ^m · x1 … xn.
///
/// Letters are kept in a deque whose back end acts as a stack; an extraction
/// `u Δ v → Δ τ(u) v` swaps every letter still on the stack, which is
/// recorded lazily through `flips`.
struct Extractor {
    m: i64,
    stored: VecDeque<Generator>,
    flips: i64,
    conjugators: Vec<BraidWord>,
}

impl Extractor {
    fn new(m: i64) -> Self {
        Extractor {
            m,
            stored: VecDeque::new(),
            flips: 0,
            conjugators: Vec::new(),
        }
    }

    fn at(&self, i: usize) -> Generator {
        self.stored[i].twist(self.flips)
    }

    fn push(&mut self, g: Generator) {
        self.stored.push_back(g.twist(self.flips));
        let n = self.stored.len();
        if n >= 3 && is_delta(self.at(n - 3), self.at(n - 2), self.at(n - 1)) {
            self.stored.truncate(n - 3);
            self.m += 1;
            self.flips += 1;
        }
    }

    fn pop_front(&mut self) -> Generator {
        let g = self.stored.pop_front().expect("nonempty");
        g.twist(self.flips)
    }

    /// Moves the first `k` letters to the back, where they reappear twisted
    /// by τ^m.
    fn rotate_front(&mut self, k: usize) {
        let moved: Vec<Generator> = (0..k).map(|_| self.pop_front().twist(self.m)).collect();
        self.conjugators.push(word_of(&moved).inverse());
        for g in moved {
            self.push(g);
        }
    }

    fn run(&mut self, letters: &[Generator]) {
        for &g in letters {
            self.push(g);
        }
        loop {
            let n = self.stored.len();
            if n < 3 {
                break;
            }
            let m = self.m;
            let (x1, x2) = (self.at(0).twist(m), self.at(1).twist(m));
            let (y1, y2) = (self.at(n - 2), self.at(n - 1));
            if is_delta(y1, y2, x1) {
                self.rotate_front(1);
            } else if is_delta(y2, x1, x2) {
                self.rotate_front(2);
            } else {
                break;
            }
        }
    }

    fn finish(self) -> State {
        let pos = (0..self.stored.len()).map(|i| self.at(i)).collect();
        State {
            m: self.m,
            pos,
            conjugators: self.conjugators,
        }
    }
}

/// `conj · source · conj⁻¹ = Δ^m · pos`, with the conjugator kept as the list
/// of factors in the order they were applied.
struct State {
    m: i64,
    pos: Vec<Generator>,
    conjugators: Vec<BraidWord>,
}

impl State {
    fn rotate_front(&mut self, k: usize) {
        let moved = twisted(&self.pos[..k], self.m);
        self.conjugators.push(word_of(&moved).inverse());
        self.pos.drain(..k);
        self.pos.extend(moved);
    }

    fn rotate_back(&mut self, k: usize) {
        let n = self.pos.len();
        let tail = self.pos.split_off(n - k);
        self.conjugators.push(word_of(&tail));
        let mut pos = twisted(&tail, self.m);
        pos.append(&mut self.pos);
        self.pos = pos;
    }

    fn swap(&mut self) {
        self.conjugators.push(delta_power(1));
        for g in self.pos.iter_mut() {
            *g = g.swap();
        }
    }

    /// Δ^m x = Δ^{m-1} · aba · x.
    fn unpack_delta(&mut self) {
        self.m -= 1;
        let mut pos = vec![A, B, A];
        pos.append(&mut self.pos);
        self.pos = pos;
    }

    fn conjugator(&self) -> BraidWord {
        let mut w = BraidWord::identity();
        for c in self.conjugators.iter().rev() {
            w = w.concat(c);
        }
        w
    }

    fn syllable_exponents(&self) -> Vec<i64> {
        let mut out: Vec<i64> = Vec::new();
        let mut prev = None;
        for &g in &self.pos {
            if prev == Some(g) {
                *out.last_mut().unwrap() += 1;
            } else {
                out.push(1);
                prev = Some(g);
            }
        }
        out
    }

    /// Rotates by `s` syllables, restoring an `a` at the front when `s` is odd.
    fn rotate_syllables(&mut self, exps: &[i64], s: usize) {
        if s == 0 {
            return;
        }
        let letters: i64 = exps[..s].iter().sum();
        self.rotate_front(letters as usize);
        if s % 2 == 1 {
            self.swap();
        }
    }

    fn classify(mut self) -> (GarsideForm, BraidWord) {
        let form = if self.m.rem_euclid(2) == 0 {
            self.classify_even()
        } else {
            self.classify_odd()
        };
        (form, self.conjugator())
    }

    fn classify_even(&mut self) -> GarsideForm {
        let l = self.m / 2;
        let n = self.pos.len();
        if n == 0 {
            return GarsideForm::A { l, p: 0 };
        }
        let exps = self.syllable_exponents();
        if exps.len() == 1 {
            if self.pos[0] == B {
                self.swap();
            }
            return GarsideForm::A { l, p: n as i64 };
        }
        if self.pos[0] == self.pos[n - 1] {
            let last = *exps.last().unwrap() as usize;
            self.rotate_back(last);
        }
        if self.pos[0] == B {
            self.swap();
        }
        if self.pos.len() == 2 {
            return GarsideForm::B { l, p: 1 };
        }
        let exps = self.syllable_exponents();
        assert!(
            exps.len() % 2 == 0 && exps.iter().all(|&e| e >= 2),
            "Δ-free positive part has an isolated letter"
        );
        let s = canonical_shift(&exps);
        self.rotate_syllables(&exps, s);
        let exps = self.syllable_exponents();
        GarsideForm::C {
            l,
            pairs: exps.chunks(2).map(|c| (c[0], c[1])).collect(),
        }
    }

    fn classify_odd(&mut self) -> GarsideForm {
        let l = (self.m - 1) / 2;
        match self.pos.len() {
            0 => {
                self.unpack_delta();
                self.rotate_back(1);
                return GarsideForm::B { l, p: 2 };
            }
            1 => {
                if self.pos[0] == B {
                    self.swap();
                }
                self.unpack_delta();
                self.rotate_back(2);
                return GarsideForm::B { l, p: 3 };
            }
            _ => {}
        }
        if self.pos[0] == B {
            self.swap();
        }
        if *self.pos.last().unwrap() == B {
            let last = *self.syllable_exponents().last().unwrap() as usize;
            self.rotate_back(last);
        }
        let exps = self.syllable_exponents();
        assert!(
            exps.len() % 2 == 1 && exps.iter().all(|&e| e >= 2),
            "Δ-free positive part has an isolated letter"
        );
        let s = canonical_shift(&exps);
        self.rotate_syllables(&exps, s);
        let exps = self.syllable_exponents();
        let (body, last) = exps.split_at(exps.len() - 1);
        GarsideForm::D {
            l,
            pairs: body.chunks(2).map(|c| (c[0], c[1])).collect(),
            last: last[0],
        }
    }
}

fn rotated<T: Clone>(v: &[T], s: usize) -> Vec<T> {
    let mut out = v[s..].to_vec();
    out.extend_from_slice(&v[..s]);
    out
}

/// Shift `s` for which `rotated(e, s + 1)` is lexicographically least.
fn canonical_shift(e: &[i64]) -> usize {
    let n = e.len();
    (0..n)
        .min_by_key(|&s| rotated(e, (s + 1) % n))
        .unwrap_or(0)
}

/// Classifies `w` and returns the certificate carrying `w` to the form.
pub fn garside_normal_form(w: &BraidWord) -> (GarsideForm, ConjugacyCertificate) {
    let (k, letters) = positive_letters(w);
    let mut ex = Extractor::new(2 * k);
    ex.run(&letters);
    let (form, conjugator) = ex.finish().classify();
    let cert = ConjugacyCertificate {
        conjugator,
        source: w.clone(),
        target: form.realize(),
    };
    (form, cert)
}

/// Murasugi form of `w` via the Garside form, with a certificate.
///
/// The certificate composes the Garside conjugator of `w` with the inverse of
/// the Garside conjugator of the Murasugi representative; both land on the
/// same canonical Garside form.
pub fn murasugi_normal_form(w: &BraidWord) -> (MurasugiForm, ConjugacyCertificate) {
    let (g, c1) = garside_normal_form(w);
    let m = g.to_murasugi();
    let target = m.realize();
    let (g2, c2) = garside_normal_form(&target);
    debug_assert_eq!(g, g2, "Murasugi representative changed conjugacy class");
    let cert = ConjugacyCertificate {
        conjugator: c2.conjugator.inverse().concat(&c1.conjugator),
        source: w.clone(),
        target,
    };
    (m, cert)
}

impl GarsideForm {
    pub fn l(&self) -> i64 {
        match *self {
            GarsideForm::A { l, .. }
            | GarsideForm::B { l, .. }
            | GarsideForm::C { l, .. }
            | GarsideForm::D { l, .. } => l,
        }
    }

    pub fn case_name(&self) -> &'static str {
        match self {
            GarsideForm::A { .. } => "A",
            GarsideForm::B { .. } => "B",
            GarsideForm::C { .. } => "C",
            GarsideForm::D { .. } => "D",
        }
    }

    /// Number of a-syllables in cases C and D.
    pub fn r(&self) -> Option<i64> {
        match self {
            GarsideForm::C { pairs, .. } => Some(pairs.len() as i64),
            GarsideForm::D { pairs, .. } => Some(pairs.len() as i64 + 1),
            _ => None,
        }
    }

    /// Exponent power of Δ in the displayed form.
    pub fn delta_exponent(&self) -> i64 {
        match self {
            GarsideForm::D { l, .. } => 2 * l + 1,
            _ => 2 * self.l(),
        }
    }

    /// Flattened syllable exponents after the Δ-power.
    pub fn exponents(&self) -> Vec<i64> {
        match self {
            GarsideForm::A { p, .. } => {
                if *p == 0 {
                    vec![]
                } else {
                    vec![*p]
                }
            }
            GarsideForm::B { p, .. } => vec![*p, 1],
            GarsideForm::C { pairs, .. } => pairs.iter().flat_map(|&(p, q)| [p, q]).collect(),
            GarsideForm::D { pairs, last, .. } => pairs
                .iter()
                .flat_map(|&(p, q)| [p, q])
                .chain(std::iter::once(*last))
                .collect(),
        }
    }

    pub fn writhe(&self) -> i64 {
        3 * self.delta_exponent() + self.exponents().iter().sum::<i64>()
    }

    /// The form is a positive word exactly when ℓ ≥ 0.
    pub fn is_positive(&self) -> bool {
        self.l() >= 0
    }

    pub fn realize(&self) -> BraidWord {
        let mut w = delta_power(self.delta_exponent());
        for (i, &e) in self.exponents().iter().enumerate() {
            w.push(if i % 2 == 0 { A } else { B }, e);
        }
        w
    }

    /// Checks the exponent constraints of the case.
    pub fn is_well_formed(&self) -> bool {
        match self {
            GarsideForm::A { p, .. } => *p >= 0,
            GarsideForm::B { p, .. } => (1..=3).contains(p),
            GarsideForm::C { pairs, .. } => {
                !pairs.is_empty() && pairs.iter().all(|&(p, q)| p >= 2 && q >= 2)
            }
            GarsideForm::D { pairs, last, .. } => {
                *last >= 2 && pairs.iter().all(|&(p, q)| p >= 2 && q >= 2)
            }
        }
    }

    pub fn to_murasugi(&self) -> MurasugiForm {
        match *self {
            GarsideForm::A { l, p } => MurasugiForm::La { l, p },
            GarsideForm::B { l, p: 1 } => MurasugiForm::Torus {
                l,
                variant: TorusVariant::Ab,
            },
            GarsideForm::B { l, p: 2 } => MurasugiForm::Lhalf { l },
            GarsideForm::B { l, .. } => MurasugiForm::Torus {
                l,
                variant: TorusVariant::Abab,
            },
            GarsideForm::C { l, .. } | GarsideForm::D { l, .. } => {
                let r = self.r().unwrap();
                let b_runs: Vec<i64> = self.exponents().iter().map(|e| e - 2).collect();
                murasugi_from_runs(l + r, &b_runs)
            }
        }
    }
}

/// Builds Δ^{2ℓ} ∏ a⁻¹ b^{f_j} as a Murasugi form, fusing the a⁻¹ letters
/// separated by empty b-runs.
fn murasugi_from_runs(l: i64, f: &[i64]) -> MurasugiForm {
    let n = f.len();
    let Some(j) = f.iter().position(|&x| x > 0) else {
        return MurasugiForm::La { l, p: -(n as i64) };
    };
    let mut pairs = Vec::new();
    let mut run = 0;
    for i in 1..=n {
        let x = f[(j + i) % n];
        run += 1;
        if x > 0 {
            pairs.push((run, x));
            run = 0;
        }
    }
    let s = (0..pairs.len())
        .min_by_key(|&s| rotated(&pairs, s))
        .unwrap_or(0);
    MurasugiForm::Generic {
        l,
        pairs: rotated(&pairs, s),
    }
}

impl MurasugiForm {
    pub fn l(&self) -> i64 {
        match *self {
            MurasugiForm::La { l, .. }
            | MurasugiForm::Lhalf { l }
            | MurasugiForm::Torus { l, .. }
            | MurasugiForm::Generic { l, .. } => l,
        }
    }

    pub fn case_name(&self) -> &'static str {
        match self {
            MurasugiForm::La { .. } => "La",
            MurasugiForm::Lhalf { .. } => "Lhalf",
            MurasugiForm::Torus { .. } => "Torus",
            MurasugiForm::Generic { .. } => "Generic",
        }
    }

    fn delta_exponent(&self) -> i64 {
        match self {
            MurasugiForm::Lhalf { l } => 2 * l + 1,
            _ => 2 * self.l(),
        }
    }

    fn syllables(&self) -> Vec<(Generator, i64)> {
        match self {
            MurasugiForm::La { p, .. } if *p != 0 => vec![(A, *p)],
            MurasugiForm::La { .. } | MurasugiForm::Lhalf { .. } => vec![],
            MurasugiForm::Torus { variant, .. } => match variant {
                TorusVariant::Ab => vec![(A, 1), (B, 1)],
                TorusVariant::Abab => vec![(A, 1), (B, 1), (A, 1), (B, 1)],
            },
            MurasugiForm::Generic { pairs, .. } => {
                pairs.iter().flat_map(|&(p, q)| [(A, -p), (B, q)]).collect()
            }
        }
    }

    pub fn realize(&self) -> BraidWord {
        let mut w = delta_power(self.delta_exponent());
        for (g, e) in self.syllables() {
            w.push(g, e);
        }
        w
    }
}

fn write_form(
    f: &mut fmt::Formatter<'_>,
    delta: i64,
    syllables: &[(Generator, i64)],
) -> fmt::Result {
    let mut tokens = Vec::new();
    match delta {
        0 => {}
        1 => tokens.push("D".to_string()),
        k => tokens.push(format!("D^{k}")),
    }
    for &(g, e) in syllables {
        let mut s = String::new();
        write_syllable(&mut s, g, e)?;
        tokens.push(s);
    }
    f.write_str(&tokens.join(" "))
}

impl fmt::Display for GarsideForm {
    /// Input-grammar syntax, e.g. `D^-3 a^7`. The identity prints as "".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let syllables: Vec<(Generator, i64)> = self
            .exponents()
            .iter()
            .enumerate()
            .map(|(i, &e)| (if i % 2 == 0 { A } else { B }, e))
            .collect();
        write_form(f, self.delta_exponent(), &syllables)
    }
}

impl fmt::Display for MurasugiForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_form(f, self.delta_exponent(), &self.syllables())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::parse;
    use crate::burau::fingerprint;

    fn p(s: &str) -> BraidWord {
        parse(s).unwrap()
    }

    fn gnf(s: &str) -> GarsideForm {
        let (form, cert) = garside_normal_form(&p(s));
        assert!(cert.verify(), "certificate failed for {s}");
        assert!(form.is_well_formed());
        form
    }

    fn mnf(s: &str) -> MurasugiForm {
        let (form, cert) = murasugi_normal_form(&p(s));
        assert!(cert.verify(), "Murasugi certificate failed for {s}");
        form
    }

    #[test]
    fn split_examples() {
        let w = p("a b^2 a");
        let s = delta_positive_split(&w);
        assert_eq!((s.k, &s.positive), (0, &w));
        let s = delta_positive_split(&p("A"));
        assert_eq!(s.k, -1);
        assert_eq!(s.positive, p("babab"));
        assert!(s.verify());
        let s = delta_positive_split(&p("a^3 B a^-3 B"));
        assert_eq!(s.k, -5);
        assert_eq!(s.positive.writhe(), 28);
        assert!(s.positive.is_positive());
        assert!(s.verify());
    }

    #[test]
    fn garside_examples() {
        assert_eq!(gnf("abababab"), GarsideForm::B { l: 1, p: 1 });
        assert_eq!(
            gnf("a^3 B a^-3 B"),
            GarsideForm::D {
                l: -2,
                pairs: vec![],
                last: 7
            }
        );
        assert_eq!(
            gnf("a^3 b a^-2 b^2"),
            GarsideForm::C {
                l: -1,
                pairs: vec![(3, 2), (2, 3)]
            }
        );
        assert_eq!(gnf("aba"), GarsideForm::B { l: 0, p: 2 });
        assert_eq!(gnf(""), GarsideForm::A { l: 0, p: 0 });
        assert_eq!(gnf("b^4"), GarsideForm::A { l: 0, p: 4 });
        assert_eq!(gnf("D a"), GarsideForm::B { l: 0, p: 3 });
        assert_eq!(gnf("ba"), GarsideForm::B { l: 0, p: 1 });
        assert_eq!(gnf("D^-2"), GarsideForm::A { l: -1, p: 0 });
        assert_eq!(gnf("A B"), GarsideForm::B { l: -1, p: 3 });
    }

    #[test]
    fn displays() {
        assert_eq!(gnf("a^3 B a^-3 B").to_string(), "D^-3 a^7");
        assert_eq!(gnf("a^3 b a^-2 b^2").to_string(), "D^-2 a^3 b^2 a^2 b^3");
        assert_eq!(mnf("a^3 b a^-2 b^2").to_string(), "D^2 A b A^3 b");
        assert_eq!(gnf("").to_string(), "");
        assert_eq!(gnf("aba").to_string(), "a^2 b");
        assert_eq!(mnf("a^3 B a^-3 B").to_string(), "D^-2 A b^5");
        assert_eq!(mnf("aba").to_string(), "D");
    }

    #[test]
    fn murasugi_examples() {
        assert_eq!(
            mnf("a^3 b a^-2 b^2"),
            MurasugiForm::Generic {
                l: 1,
                pairs: vec![(1, 1), (3, 1)]
            }
        );
        assert_eq!(
            mnf("a^3 B a^-3 B"),
            MurasugiForm::Generic {
                l: -1,
                pairs: vec![(1, 5)]
            }
        );
        assert_eq!(
            mnf("abababab"),
            MurasugiForm::Torus {
                l: 1,
                variant: TorusVariant::Ab
            }
        );
        assert_eq!(
            mnf("a^3 b"),
            MurasugiForm::Torus {
                l: 0,
                variant: TorusVariant::Abab
            }
        );
        // a^2 b^2 a^2 b^2: every b-run vanishes.
        assert_eq!(mnf("a^2 b^2 a^2 b^2"), MurasugiForm::La { l: 2, p: -4 });
    }

    #[test]
    fn realize_examples() {
        let c = GarsideForm::C {
            l: 0,
            pairs: vec![(3, 3)],
        };
        assert_eq!(c.realize(), p("a^3 b^3"));
        assert_eq!(GarsideForm::A { l: 1, p: 0 }.realize(), delta_power(2));
    }

    #[test]
    fn rotation_invariance() {
        let base = gnf("a^2 b^3 a^4 b^2 a^2 b^5");
        for s in ["b^3 a^4 b^2 a^2 b^5 a^2", "a^3 b^4 a^2 b^2 a^5 b^2"] {
            assert_eq!(gnf(s), base);
        }
        let d = gnf("D a^2 b^3 a^4");
        assert_eq!(gnf("D a^3 b^4 a^2"), d);
        assert_eq!(gnf("D a^4 b^2 a^3"), d);
    }

    #[test]
    fn fingerprint_preserved() {
        for s in ["a^3 b A^2 b^2 a b", "B^3 a b a^5 B", "D^-3 a^2 b"] {
            let w = p(s);
            let (f, _) = garside_normal_form(&w);
            assert_eq!(fingerprint(&f.realize()), fingerprint(&w));
        }
    }
}
