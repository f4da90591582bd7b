//! Words in the Artin generators of B₃.
//!
//! A [`BraidWord`] is stored in maximally merged run-length form: adjacent
//! syllables always carry distinct generators and no exponent is zero. Every
//! constructor re-establishes that, so two words that are equal in the free
//! group have identical representations.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{ParseError, ParseErrorKind};

/// Upper bound on the number of letters [`parse`] will produce.
pub const DEFAULT_MAX_WORD_LEN: usize = 1_000_000;

/// Artin generator: `A` is σ₁ (written `a`), `B` is σ₂ (written `b`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Generator {
    A,
    B,
}

impl Generator {
    /// The other generator; conjugation by Δ acts as this swap.
    pub fn swap(self) -> Self {
        match self {
            Generator::A => Generator::B,
            Generator::B => Generator::A,
        }
    }

    /// Apply the swap `times` times.
    pub fn twist(self, times: i64) -> Self {
        if times.rem_euclid(2) == 1 {
            self.swap()
        } else {
            self
        }
    }

    fn letter(self, inverse: bool) -> char {
        match (self, inverse) {
            (Generator::A, false) => 'a',
            (Generator::B, false) => 'b',
            (Generator::A, true) => 'A',
            (Generator::B, true) => 'B',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Syllable {
    pub generator: Generator,
    pub exponent: i64,
}

impl Syllable {
    pub fn new(generator: Generator, exponent: i64) -> Self {
        assert!(exponent != 0, "syllable exponent must be nonzero");
        Syllable {
            generator,
            exponent,
        }
    }
}

/// A braid word in run-length form. The empty word is the identity.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<Syllable>", into = "Vec<Syllable>")]
pub struct BraidWord {
    syllables: Vec<Syllable>,
}

impl From<Vec<Syllable>> for BraidWord {
    fn from(syllables: Vec<Syllable>) -> Self {
        BraidWord::from_syllables(syllables)
    }
}

impl From<BraidWord> for Vec<Syllable> {
    fn from(w: BraidWord) -> Self {
        w.syllables
    }
}

impl BraidWord {
    pub fn identity() -> Self {
        BraidWord::default()
    }

    /// Builds a word from arbitrary (possibly unmerged, possibly zero)
    /// syllables, merging equal neighbours and cascading cancellations.
    pub fn from_syllables<I>(syllables: I) -> Self
    where
        I: IntoIterator<Item = Syllable>,
    {
        let mut w = BraidWord::identity();
        for s in syllables {
            w.push(s.generator, s.exponent);
        }
        w
    }

    /// Convenience constructor from `(generator, exponent)` pairs.
    pub fn from_pairs(pairs: &[(Generator, i64)]) -> Self {
        let mut w = BraidWord::identity();
        for &(g, e) in pairs {
            w.push(g, e);
        }
        w
    }

    /// Word of single positive letters.
    pub fn from_positive_letters(letters: &[Generator]) -> Self {
        let mut w = BraidWord::identity();
        for &g in letters {
            w.push(g, 1);
        }
        w
    }

    /// Appends `g^e` with free merging at the junction.
    pub fn push(&mut self, g: Generator, e: i64) {
        if e == 0 {
            return;
        }
        match self.syllables.last_mut() {
            Some(last) if last.generator == g => {
                last.exponent += e;
                if last.exponent == 0 {
                    self.syllables.pop();
                }
            }
            _ => self.syllables.push(Syllable {
                generator: g,
                exponent: e,
            }),
        }
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Number of letters, i.e. the sum of |exponent|.
    pub fn letter_len(&self) -> usize {
        self.syllables
            .iter()
            .map(|s| s.exponent.unsigned_abs() as usize)
            .sum()
    }

    /// Expands into single letters `(generator, ±1)`.
    pub fn letters(&self) -> impl Iterator<Item = (Generator, i64)> + '_ {
        self.syllables.iter().flat_map(|s| {
            let sign = s.exponent.signum();
            std::iter::repeat((s.generator, sign)).take(s.exponent.unsigned_abs() as usize)
        })
    }

    /// True when no exponent is negative.
    pub fn is_positive(&self) -> bool {
        self.syllables.iter().all(|s| s.exponent > 0)
    }

    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        let mut w = self.clone();
        for s in &other.syllables {
            w.push(s.generator, s.exponent);
        }
        w
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            syllables: self
                .syllables
                .iter()
                .rev()
                .map(|s| Syllable {
                    generator: s.generator,
                    exponent: -s.exponent,
                })
                .collect(),
        }
    }

    /// Crossing-sign reversal; the closure represents the mirror image with
    /// reversed orientation.
    pub fn mirror(&self) -> BraidWord {
        BraidWord {
            syllables: self
                .syllables
                .iter()
                .map(|s| Syllable {
                    generator: s.generator,
                    exponent: -s.exponent,
                })
                .collect(),
        }
    }

    /// Image under the automorphism a ↔ b (conjugation by Δ).
    pub fn swapped(&self) -> BraidWord {
        BraidWord {
            syllables: self
                .syllables
                .iter()
                .map(|s| Syllable {
                    generator: s.generator.swap(),
                    exponent: s.exponent,
                })
                .collect(),
        }
    }

    /// `self^k` for any integer `k`.
    pub fn pow(&self, k: i64) -> BraidWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut w = BraidWord::identity();
        for _ in 0..k.unsigned_abs() {
            w = w.concat(&base);
        }
        w
    }

    /// `u · self · u⁻¹`.
    pub fn conjugate_by(&self, u: &BraidWord) -> BraidWord {
        u.concat(self).concat(&u.inverse())
    }

    /// Exponents of a cyclic rotation `a^{p1} b^{q1} … a^{pr} b^{qr}` of a
    /// positive word that uses both generators.
    pub fn aligned_pairs(&self) -> Option<Vec<(i64, i64)>> {
        if !self.is_positive() {
            return None;
        }
        let mut syl: Vec<Syllable> = self.syllables.clone();
        if syl.len() >= 2 && syl[0].generator == syl[syl.len() - 1].generator {
            let last = syl.pop().unwrap();
            syl[0].exponent += last.exponent;
        }
        if syl.len() < 2 {
            return None;
        }
        if syl[0].generator == Generator::B {
            syl.rotate_left(1);
        }
        Some(syl.chunks(2).map(|c| (c[0].exponent, c[1].exponent)).collect())
    }

    pub fn writhe(&self) -> i64 {
        self.syllables.iter().map(|s| s.exponent).sum()
    }

    pub fn permutation(&self) -> Permutation3 {
        let mut p = Permutation3::identity();
        for s in &self.syllables {
            if s.exponent % 2 != 0 {
                p = p.then(Permutation3::transposition(s.generator));
            }
        }
        p
    }

    pub fn closure_components(&self) -> usize {
        self.permutation().cycle_count()
    }

    pub fn is_knot(&self) -> bool {
        self.closure_components() == 1
    }
}

/// Δ^k written out as (aba)^k or (a⁻¹b⁻¹a⁻¹)^|k|, merged.
pub fn delta_power(k: i64) -> BraidWord {
    let mut w = BraidWord::identity();
    let (e, n) = if k >= 0 { (1, k) } else { (-1, -k) };
    for _ in 0..n {
        w.push(Generator::A, e);
        w.push(Generator::B, e);
        w.push(Generator::A, e);
    }
    w
}

impl fmt::Display for BraidWord {
    /// Input-grammar syntax: `a^3 B A^2`. The identity prints as the empty
    /// string.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for s in &self.syllables {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write_syllable(f, s.generator, s.exponent)?;
        }
        Ok(())
    }
}

pub(crate) fn write_syllable(f: &mut impl fmt::Write, g: Generator, e: i64) -> fmt::Result {
    f.write_char(g.letter(e < 0))?;
    if e.abs() != 1 {
        write!(f, "^{}", e.abs())?;
    }
    Ok(())
}

/// Permutation of the three strand positions, stored 0-based.
///
/// The word is read left to right (bottom to top in the diagram); `image(i)`
/// is the position at which the strand starting at position `i` ends.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Permutation3 {
    images: [u8; 3],
}

impl Permutation3 {
    pub fn identity() -> Self {
        Permutation3 { images: [0, 1, 2] }
    }

    /// (1 2) for `a`, (2 3) for `b`.
    pub fn transposition(g: Generator) -> Self {
        match g {
            Generator::A => Permutation3 { images: [1, 0, 2] },
            Generator::B => Permutation3 { images: [0, 2, 1] },
        }
    }

    /// `self` followed by `next`.
    pub fn then(self, next: Permutation3) -> Self {
        let mut images = [0u8; 3];
        for (i, img) in images.iter_mut().enumerate() {
            *img = next.images[self.images[i] as usize];
        }
        Permutation3 { images }
    }

    /// 1-based image, matching the usual cycle notation.
    pub fn image(&self, i: usize) -> usize {
        assert!((1..=3).contains(&i));
        self.images[i - 1] as usize + 1
    }

    /// Cycle lengths in non-increasing order: `[1,1,1]`, `[2,1]` or `[3]`.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut seen = [false; 3];
        let mut lens = Vec::new();
        for start in 0..3 {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i] as usize;
                len += 1;
            }
            lens.push(len);
        }
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    pub fn cycle_count(&self) -> usize {
        self.cycle_type().len()
    }

    pub fn is_three_cycle(&self) -> bool {
        self.cycle_type() == [3]
    }
}

/// Parses the word grammar with the default length guard.
pub fn parse(text: &str) -> Result<BraidWord, ParseError> {
    parse_with_limit(text, DEFAULT_MAX_WORD_LEN)
}

/// Parses `word := term*`, `term := letter ("^" signed-int)?` over the
/// letters `a b A B D`. Whitespace is ignored. Positions in errors are
/// 1-based character offsets.
pub fn parse_with_limit(text: &str, max_letters: usize) -> Result<BraidWord, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut w = BraidWord::identity();
    let mut letters: usize = 0;
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let start = i + 1;
        let (gen, sign) = match c {
            'a' => (Some(Generator::A), 1),
            'b' => (Some(Generator::B), 1),
            'A' => (Some(Generator::A), -1),
            'B' => (Some(Generator::B), -1),
            'D' => (None, 1),
            other => {
                return Err(ParseError::new(start, ParseErrorKind::UnexpectedChar(other)));
            }
        };
        i += 1;
        // Whitespace between a letter and its exponent is tolerated.
        let mut j = i;
        while j < chars.len() && chars[j].is_whitespace() {
            j += 1;
        }
        let mut exponent: i64 = 1;
        if j < chars.len() && chars[j] == '^' {
            let (e, next) = parse_exponent(&chars, j + 1)?;
            exponent = e;
            i = next;
        }
        let e = sign * exponent;
        let added = match gen {
            Some(_) => e.unsigned_abs(),
            None => e.unsigned_abs().saturating_mul(3),
        };
        letters = letters.saturating_add(added as usize);
        if letters > max_letters {
            return Err(ParseError::new(
                start,
                ParseErrorKind::TooLong { limit: max_letters },
            ));
        }
        match gen {
            Some(g) => w.push(g, e),
            None => {
                let d = delta_power(e);
                w = w.concat(&d);
            }
        }
    }
    Ok(w)
}

fn parse_exponent(chars: &[char], mut i: usize) -> Result<(i64, usize), ParseError> {
    while i < chars.len() && chars[i].is_whitespace() {
        i += 1;
    }
    let start = i + 1;
    let negative = i < chars.len() && chars[i] == '-';
    if negative {
        i += 1;
    }
    let digits_start = i;
    while i < chars.len() && chars[i].is_ascii_digit() {
        i += 1;
    }
    if i == digits_start {
        return Err(ParseError::new(
            i + 1,
            match chars.get(i) {
                Some(&c) => ParseErrorKind::UnexpectedChar(c),
                None => ParseErrorKind::MissingExponent,
            },
        ));
    }
    let digits: String = chars[digits_start..i].iter().collect();
    let magnitude: i64 = digits
        .parse()
        .map_err(|_| ParseError::new(start, ParseErrorKind::ExponentOverflow))?;
    if magnitude == 0 {
        return Err(ParseError::new(start, ParseErrorKind::ZeroExponent));
    }
    Ok((if negative { -magnitude } else { magnitude }, i))
}
