//! Saddle-move cobordisms between 3-braid closures and connected sums of
//! T(2, odd) torus knots, with Euler characteristic bookkeeping.
//!
//! A certificate records the start word and a list of moves acting on an
//! *active* braid word. A split move cuts a run of one generator out of the
//! active word and sets it aside as a T(2, n) summand; at the end, an active
//! word of the shape a^P b^Q is read as T(2,P) # T(2,Q). [`verify`] replays
//! the moves and rechecks every claim, including |Δυ| ≤ genus.

use std::fmt;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::braid::{BraidWord, Generator};
use crate::error::{Error, Result};
use crate::invariants::upsilon_garside;
use crate::normal_form::{garside_normal_form, GarsideForm};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum SaddleKind {
    /// Adds one positive letter.
    InsertGenerator,
    /// Removes one letter of either sign.
    DeleteGenerator,
    /// Cuts `length` equal letters out as a T(2, ±length) summand.
    SplitToConnectedSum { length: usize },
}

/// A saddle at letter index `position` of the active word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SaddleMove {
    pub kind: SaddleKind,
    pub position: usize,
    pub generator: Generator,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Move {
    Saddle(SaddleMove),
    /// Replaces the active word `w` by `by · w · by⁻¹`.
    Conjugate { by: BraidWord },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Summand {
    /// T(2, n); negative n is the mirror.
    Torus2(i64),
    Closure(BraidWord),
}

impl Summand {
    fn is_unknot(&self) -> bool {
        matches!(self, Summand::Torus2(1) | Summand::Torus2(-1))
    }

    fn is_knot(&self) -> bool {
        match self {
            Summand::Torus2(n) => n % 2 != 0,
            Summand::Closure(w) => w.is_knot(),
        }
    }

    fn upsilon(&self) -> Result<i64> {
        match self {
            Summand::Torus2(n) if n % 2 != 0 => Ok(-n.signum() * (n.abs() - 1) / 2),
            Summand::Torus2(_) => Err(Error::NotAKnot),
            Summand::Closure(w) => {
                if !w.is_knot() {
                    return Err(Error::NotAKnot);
                }
                upsilon_garside(&garside_normal_form(w).0)
            }
        }
    }
}

impl fmt::Display for Summand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Summand::Torus2(n) => write!(f, "T(2,{n})"),
            Summand::Closure(w) if w.is_identity() => f.write_str("closure()"),
            Summand::Closure(w) => write!(f, "closure({w})"),
        }
    }
}

/// Connected sum; the empty sum is the unknot.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct KnotExpr(pub Vec<Summand>);

impl KnotExpr {
    pub fn upsilon(&self) -> Result<i64> {
        self.0.iter().map(Summand::upsilon).sum()
    }

    pub fn is_knot(&self) -> bool {
        self.0.iter().all(Summand::is_knot)
    }

    /// Canonical key: unknots dropped, T(2, n) parameters sorted, closures
    /// replaced by their Garside forms (closures of a^P b^Q are first split
    /// into two T(2, ·) summands).
    fn key(&self) -> (Vec<i64>, Vec<GarsideForm>) {
        let mut tori = Vec::new();
        let mut forms = Vec::new();
        for s in &self.0 {
            for t in normalize_summand(s) {
                match t {
                    Summand::Torus2(n) => tori.push(n),
                    Summand::Closure(w) => forms.push(garside_normal_form(&w).0),
                }
            }
        }
        tori.retain(|n| n.abs() != 1);
        tori.sort_unstable();
        forms.sort_by_key(|f| format!("{f:?}"));
        (tori, forms)
    }

    pub fn same_knot_as(&self, other: &KnotExpr) -> bool {
        self.key() == other.key()
    }
}

impl fmt::Display for KnotExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .filter(|s| !s.is_unknot())
            .map(ToString::to_string)
            .collect();
        if parts.is_empty() {
            f.write_str("unknot")
        } else {
            f.write_str(&parts.join(" # "))
        }
    }
}

/// Cyclically reduced representative: conjugates by the last syllable while
/// it shares a generator with the first.
fn cyclic_reduce(w: &BraidWord) -> BraidWord {
    let mut w = w.clone();
    loop {
        let syl = w.syllables();
        if syl.len() < 2 || syl[0].generator != syl[syl.len() - 1].generator {
            return w;
        }
        let last = syl[syl.len() - 1];
        w = w.conjugate_by(&BraidWord::from_pairs(&[(last.generator, last.exponent)]));
    }
}

fn normalize_summand(s: &Summand) -> Vec<Summand> {
    if let Summand::Closure(w) = s {
        let w = cyclic_reduce(w);
        match w.syllables() {
            [] => return vec![],
            [x] => return vec![Summand::Torus2(x.exponent)],
            [x, y] => return vec![Summand::Torus2(x.exponent), Summand::Torus2(y.exponent)],
            _ => {}
        }
    }
    vec![s.clone()]
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CobordismCertificate {
    pub start: BraidWord,
    pub end: KnotExpr,
    pub moves: Vec<Move>,
    pub euler_char: i64,
    #[serde(with = "ratio_serde")]
    pub genus: Rational64,
}

mod ratio_serde {
    use num_rational::Rational64;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational64, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&crate::invariants::ratio_string(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational64, D::Error> {
        let text = String::deserialize(d)?;
        let (n, m) = text.split_once('/').unwrap_or((&text, "1"));
        let n: i64 = n.trim().parse().map_err(de::Error::custom)?;
        let m: i64 = m.trim().parse().map_err(de::Error::custom)?;
        if m == 0 {
            return Err(de::Error::custom("zero denominator"));
        }
        Ok(Rational64::new(n, m))
    }
}

impl CobordismCertificate {
    pub fn saddle_count(&self) -> usize {
        self.moves
            .iter()
            .filter(|m| matches!(m, Move::Saddle(_)))
            .count()
    }
}

/// Replay state: the active word as signed letters plus split-off summands.
struct Replay {
    letters: Vec<(Generator, i64)>,
    summands: Vec<Summand>,
}

impl Replay {
    fn new(w: &BraidWord) -> Self {
        Replay {
            letters: w.letters().collect(),
            summands: Vec::new(),
        }
    }

    fn word(&self) -> BraidWord {
        BraidWord::from_pairs(&self.letters)
    }

    fn apply(&mut self, m: &Move) -> std::result::Result<(), String> {
        match m {
            Move::Conjugate { by } => {
                self.letters = self.word().conjugate_by(by).letters().collect();
                Ok(())
            }
            Move::Saddle(s) => self.saddle(s),
        }
    }

    fn saddle(&mut self, s: &SaddleMove) -> std::result::Result<(), String> {
        let n = self.letters.len();
        match s.kind {
            SaddleKind::InsertGenerator => {
                if s.position > n {
                    return Err(format!("insert position {} out of range", s.position));
                }
                self.letters.insert(s.position, (s.generator, 1));
            }
            SaddleKind::DeleteGenerator => {
                match self.letters.get(s.position) {
                    Some(&(g, _)) if g == s.generator => {}
                    _ => return Err(format!("no {:?} letter at {}", s.generator, s.position)),
                }
                self.letters.remove(s.position);
            }
            SaddleKind::SplitToConnectedSum { length } => {
                let end = s.position + length;
                if length == 0 || end > n {
                    return Err(format!("split range {}..{end} out of range", s.position));
                }
                let sign = self.letters[s.position].1;
                if self.letters[s.position..end]
                    .iter()
                    .any(|&(g, e)| g != s.generator || e != sign)
                {
                    return Err(format!("split range {}..{end} is not a run", s.position));
                }
                self.letters.drain(s.position..end);
                self.summands.push(Summand::Torus2(sign * length as i64));
            }
        }
        Ok(())
    }

    fn end(self) -> KnotExpr {
        let active = self.word();
        let mut out = self.summands;
        out.push(Summand::Closure(active));
        KnotExpr(out)
    }
}

/// Outcome of [`verify`]; `reasons` is empty exactly when `ok`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verification {
    pub ok: bool,
    pub reasons: Vec<String>,
}

/// Replays the moves and rechecks Euler characteristic, genus, knot ends,
/// the claimed end and the υ inequality.
pub fn verify(cert: &CobordismCertificate) -> Verification {
    let mut reasons = Vec::new();
    let saddles = cert.saddle_count() as i64;
    if cert.euler_char != -saddles {
        reasons.push(format!(
            "euler characteristic {} does not match {saddles} saddles",
            cert.euler_char
        ));
    }
    if saddles % 2 != 0 || !cert.genus.is_integer() {
        reasons.push("non-integral genus".to_string());
    }
    if cert.genus != Rational64::new(saddles, 2) {
        reasons.push(format!(
            "genus {} does not match Euler characteristic",
            crate::invariants::ratio_string(&cert.genus)
        ));
    }
    let mut replay = Replay::new(&cert.start);
    let mut replay_ok = true;
    for (i, m) in cert.moves.iter().enumerate() {
        if let Err(e) = replay.apply(m) {
            reasons.push(format!("move {i}: {e}"));
            replay_ok = false;
            break;
        }
    }
    if !cert.start.is_knot() {
        reasons.push("start is not a knot".to_string());
    }
    if !cert.end.is_knot() {
        reasons.push("end is not a knot".to_string());
    }
    if replay_ok {
        let replayed = replay.end();
        if !replayed.same_knot_as(&cert.end) {
            reasons.push(format!(
                "replayed end {replayed} differs from claimed {}",
                cert.end
            ));
        }
    }
    if cert.start.is_knot() && cert.end.is_knot() {
        match (
            Summand::Closure(cert.start.clone()).upsilon(),
            cert.end.upsilon(),
        ) {
            (Ok(a), Ok(b)) => {
                if Rational64::from_integer((a - b).abs()) > cert.genus {
                    reasons.push("upsilon gap exceeds genus".to_string());
                }
            }
            (Err(e), _) | (_, Err(e)) => reasons.push(format!("upsilon: {e}")),
        }
    }
    Verification {
        ok: reasons.is_empty(),
        reasons,
    }
}

fn certificate(start: BraidWord, end: Vec<Summand>, moves: Vec<Move>) -> CobordismCertificate {
    let saddles = moves
        .iter()
        .filter(|m| matches!(m, Move::Saddle(_)))
        .count() as i64;
    CobordismCertificate {
        start,
        end: KnotExpr(end),
        moves,
        euler_char: -saddles,
        genus: Rational64::new(saddles, 2),
    }
}

/// Conjugator carrying a positive word onto its aligned rotation
/// a^{p1} b^{q1} … a^{pr} b^{qr}.
fn alignment_conjugator(w: &BraidWord) -> BraidWord {
    let syl = w.syllables();
    let mut c = BraidWord::identity();
    let mut cur = w.clone();
    if syl.len() >= 2 && syl[0].generator == syl[syl.len() - 1].generator {
        let last = syl[syl.len() - 1];
        let s = BraidWord::from_pairs(&[(last.generator, last.exponent)]);
        cur = cur.conjugate_by(&s);
        c = s;
    }
    if let Some(first) = cur.syllables().first().copied() {
        if first.generator == Generator::B {
            let s = BraidWord::from_pairs(&[(first.generator, -first.exponent)]);
            c = s.concat(&c);
        }
    }
    c
}

/// Saddle cobordism from a positive knot closure to
/// T(2, Σp+ε_p) # T(2, q1+ε1) # … # T(2, qr+εr), of genus (r − 1 + ε)/2.
pub fn torus_sum_cobordism(w: &BraidWord) -> Result<CobordismCertificate> {
    if !w.is_positive() {
        return Err(Error::NotPositive);
    }
    if !w.is_knot() {
        return Err(Error::NotAKnot);
    }
    let pairs = w.aligned_pairs().ok_or(Error::NotAKnot)?;
    let mut moves = Vec::new();
    let c = alignment_conjugator(w);
    if !c.is_identity() {
        moves.push(Move::Conjugate { by: c });
    }
    let p_total: i64 = pairs.iter().map(|x| x.0).sum();
    let eps_p = i64::from(p_total % 2 == 0);
    let eps: Vec<i64> = pairs.iter().map(|x| i64::from(x.1 % 2 == 0)).collect();

    // Insertions run from the back so earlier positions stay valid.
    let mut offsets = Vec::with_capacity(pairs.len());
    let mut pos = 0usize;
    for &(p, q) in &pairs {
        offsets.push((pos + p as usize, pos + (p + q) as usize));
        pos += (p + q) as usize;
    }
    for i in (0..pairs.len()).rev() {
        let (a_end, b_end) = offsets[i];
        if eps[i] == 1 {
            moves.push(Move::Saddle(SaddleMove {
                kind: SaddleKind::InsertGenerator,
                position: b_end,
                generator: Generator::B,
            }));
        }
        if i == pairs.len() - 1 && eps_p == 1 {
            moves.push(Move::Saddle(SaddleMove {
                kind: SaddleKind::InsertGenerator,
                position: a_end,
                generator: Generator::A,
            }));
        }
    }
    let mut lead = pairs[0].0 as usize;
    let mut end = Vec::new();
    for (i, &(_, q)) in pairs.iter().enumerate().take(pairs.len() - 1) {
        let length = (q + eps[i]) as usize;
        moves.push(Move::Saddle(SaddleMove {
            kind: SaddleKind::SplitToConnectedSum { length },
            position: lead,
            generator: Generator::B,
        }));
        end.push(Summand::Torus2(length as i64));
        lead += pairs[i + 1].0 as usize;
    }
    let mut tail = vec![
        Summand::Torus2(p_total + eps_p),
        Summand::Torus2(pairs[pairs.len() - 1].1 + eps[pairs.len() - 1]),
    ];
    tail.append(&mut end);
    Ok(certificate(w.clone(), tail, moves))
}

/// Genus-one cobordism from the closure of γ·b^{2n} to closure(γ) # T(2, 2n+1).
pub fn twist_trick(gamma: &BraidWord, n: i64) -> Result<CobordismCertificate> {
    if n < 1 {
        return Err(Error::Precondition(format!("twist count {n} must be at least 1")));
    }
    if !gamma.is_knot() {
        return Err(Error::NotAKnot);
    }
    let twist = BraidWord::from_pairs(&[(Generator::B, 2 * n)]);
    let start = gamma.concat(&twist);
    let mut moves = Vec::new();
    let mut core = gamma.clone();
    if let Some(last) = gamma.syllables().last() {
        if last.generator == Generator::B {
            let c = BraidWord::from_pairs(&[(Generator::B, last.exponent)]);
            core = gamma.conjugate_by(&c);
            moves.push(Move::Conjugate { by: c });
        }
    }
    let boundary = core.letter_len();
    moves.push(Move::Saddle(SaddleMove {
        kind: SaddleKind::InsertGenerator,
        position: boundary + 2 * n as usize,
        generator: Generator::B,
    }));
    moves.push(Move::Saddle(SaddleMove {
        kind: SaddleKind::SplitToConnectedSum {
            length: 2 * n as usize + 1,
        },
        position: boundary,
        generator: Generator::B,
    }));
    Ok(certificate(
        start,
        vec![Summand::Closure(gamma.clone()), Summand::Torus2(2 * n + 1)],
        moves,
    ))
}

/// Bounds on the cobordism distance to the alternating knots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AgBounds {
    /// (r + ℓ − 1)/2.
    pub lower: Rational64,
    /// Smallest integer genus allowed by `lower`.
    pub lower_ceil: i64,
    /// (r + ℓ − 1 + ε)/2.
    pub upper: Rational64,
    pub epsilon: i64,
    /// Positive word with r + ℓ a-syllables whose torus-sum cobordism
    /// realizes `upper`.
    pub witness: BraidWord,
}

/// Positive representative of a positive C/D form with exactly r + ℓ
/// a-syllables.
pub fn minimal_syllable_witness(g: &GarsideForm) -> Result<BraidWord> {
    use Generator::{A, B};
    let mut s: Vec<(Generator, i64)> = Vec::new();
    match g {
        GarsideForm::C { l, pairs } if *l >= 0 => {
            if *l > 0 {
                s.push((A, 2 * l));
                s.push((B, 1));
                for _ in 1..*l {
                    s.extend([(A, 2), (B, 2)]);
                }
            }
            let r = pairs.len();
            for (i, &(p, q)) in pairs.iter().enumerate() {
                let p = if i == 0 && *l > 0 { p + 2 } else { p };
                let q = if i == r - 1 && *l > 0 { q + 1 } else { q };
                s.extend([(A, p), (B, q)]);
            }
        }
        GarsideForm::D { l: 0, pairs, last } => {
            for (i, &(p, q)) in pairs.iter().enumerate() {
                s.extend([(A, if i == 0 { p + 1 } else { p }), (B, q)]);
            }
            let extra = if pairs.is_empty() { 2 } else { 1 };
            s.extend([(A, last + extra), (B, 1)]);
        }
        GarsideForm::D { l, pairs, last } if *l > 0 => {
            s.extend([(A, last + 2), (B, 1), (A, 3)]);
            for _ in 1..*l {
                s.extend([(A, 1), (B, 1), (A, 3)]);
            }
            s.push((B, 1));
            match pairs.split_first() {
                Some((&(p1, q1), rest)) => {
                    s.extend([(A, p1 + l + 1), (B, q1)]);
                    for &(p, q) in rest {
                        s.extend([(A, p), (B, q)]);
                    }
                }
                None => s.push((A, l + 1)),
            }
        }
        _ => return Err(Error::NotPositive),
    }
    Ok(BraidWord::from_pairs(&s))
}

pub fn alternating_distance_ag_bounds(g: &GarsideForm) -> Result<AgBounds> {
    let r = g.r().ok_or_else(|| {
        Error::Precondition(format!("form {g} is not of case C or D"))
    })?;
    if !g.is_positive() {
        return Err(Error::NotPositive);
    }
    if !g.realize().is_knot() {
        return Err(Error::NotAKnot);
    }
    let witness = minimal_syllable_witness(g)?;
    let (wg, _) = garside_normal_form(&witness);
    let (gg, _) = garside_normal_form(&g.realize());
    if wg != gg {
        return Err(Error::Internal(format!(
            "witness {witness} is not conjugate to {g}"
        )));
    }
    let base = r + g.l() - 1;
    let cert = torus_sum_cobordism(&witness)?;
    let pairs = witness.aligned_pairs().ok_or(Error::NotAKnot)?;
    if pairs.len() as i64 != r + g.l() {
        return Err(Error::Internal(format!(
            "witness {witness} has {} a-syllables, expected {}",
            pairs.len(),
            r + g.l()
        )));
    }
    let epsilon = cert.saddle_count() as i64 - base;
    let lower = Rational64::new(base, 2);
    Ok(AgBounds {
        lower,
        lower_ceil: lower.ceil().to_integer(),
        upper: cert.genus,
        epsilon,
        witness,
    })
}
