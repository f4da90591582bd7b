//! Reduced Burau representation of B₃ over ℤ[t, t⁻¹].
//!
//! The representation is faithful on B₃, so matrix equality decides the word
//! problem. Conventions:
//!
//! ```text
//! a ↦ [[-t, 1], [0,  1]]      b ↦ [[1, 0], [t, -t]]
//! ```

use std::fmt;

use crate::braid::{BraidWord, Generator};
use crate::laurent::LaurentPoly;

/// 2×2 matrix over Laurent polynomials, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BurauMatrix {
    pub entries: [[LaurentPoly; 2]; 2],
}

impl BurauMatrix {
    pub fn identity() -> Self {
        BurauMatrix {
            entries: [
                [LaurentPoly::one(), LaurentPoly::zero()],
                [LaurentPoly::zero(), LaurentPoly::one()],
            ],
        }
    }

    /// Image of a single generator raised to ±1.
    pub fn generator(g: Generator, inverse: bool) -> Self {
        let mut m = BurauMatrix::identity();
        m.right_mul_letter(g, inverse);
        m
    }

    pub fn is_identity(&self) -> bool {
        *self == BurauMatrix::identity()
    }

    pub fn mul(&self, other: &BurauMatrix) -> BurauMatrix {
        let e = |i: usize, j: usize| {
            self.entries[i][0]
                .mul(&other.entries[0][j])
                .add(&self.entries[i][1].mul(&other.entries[1][j]))
        };
        BurauMatrix {
            entries: [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]],
        }
    }

    pub fn trace(&self) -> LaurentPoly {
        self.entries[0][0].add(&self.entries[1][1])
    }

    pub fn determinant(&self) -> LaurentPoly {
        self.entries[0][0]
            .mul(&self.entries[1][1])
            .sub(&self.entries[0][1].mul(&self.entries[1][0]))
    }

    /// In-place right multiplication by one letter, acting on columns.
    fn right_mul_letter(&mut self, g: Generator, inverse: bool) {
        for row in self.entries.iter_mut() {
            let [c0, c1] = row;
            let (n0, n1) = match (g, inverse) {
                (Generator::A, false) => (c0.mul_unit(true, 1), c0.add(c1)),
                (Generator::A, true) => (c0.mul_unit(true, -1), c0.mul_unit(false, -1).add(c1)),
                (Generator::B, false) => (c0.add(&c1.mul_unit(false, 1)), c1.mul_unit(true, 1)),
                (Generator::B, true) => (c0.add(c1), c1.mul_unit(true, -1)),
            };
            *c0 = n0;
            *c1 = n1;
        }
    }
}

impl fmt::Display for BurauMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = &self.entries;
        write!(f, "[[{}, {}], [{}, {}]]", e[0][0], e[0][1], e[1][0], e[1][1])
    }
}

/// Multiplicative image of the word.
pub fn burau(w: &BraidWord) -> BurauMatrix {
    let mut m = BurauMatrix::identity();
    for (g, sign) in w.letters() {
        m.right_mul_letter(g, sign < 0);
    }
    m
}

/// Decides `u = v` in B₃.
pub fn words_equal(u: &BraidWord, v: &BraidWord) -> bool {
    let w = u.concat(&v.inverse());
    w.is_identity() || burau(&w).is_identity()
}

/// Conjugation-invariant data; equality is necessary, never sufficient, for
/// conjugacy.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConjugacyFingerprint {
    pub writhe: i64,
    pub cycle_type: Vec<usize>,
    pub burau_trace: LaurentPoly,
}

pub fn fingerprint(w: &BraidWord) -> ConjugacyFingerprint {
    ConjugacyFingerprint {
        writhe: w.writhe(),
        cycle_type: w.permutation().cycle_type(),
        burau_trace: burau(w).trace(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{delta_power, parse};

    fn p(s: &str) -> BraidWord {
        parse(s).unwrap()
    }

    #[test]
    fn generator_images() {
        let a = BurauMatrix::generator(Generator::A, false);
        assert_eq!(a.entries[0][0], LaurentPoly::monomial(-1, 1));
        assert_eq!(a.entries[0][1], LaurentPoly::one());
        assert_eq!(a.entries[1][0], LaurentPoly::zero());
        assert_eq!(a.entries[1][1], LaurentPoly::one());
        let b = BurauMatrix::generator(Generator::B, false);
        assert_eq!(b.entries[1][0], LaurentPoly::monomial(1, 1));
        assert_eq!(b.entries[1][1], LaurentPoly::monomial(-1, 1));
        for g in [Generator::A, Generator::B] {
            let m = BurauMatrix::generator(g, false).mul(&BurauMatrix::generator(g, true));
            assert!(m.is_identity());
        }
    }

    #[test]
    fn braid_relation_and_center() {
        assert_eq!(burau(&p("aba")), burau(&p("bab")));
        let d2 = burau(&delta_power(2));
        for g in ["a", "b"] {
            let x = burau(&p(g));
            assert_eq!(d2.mul(&x), x.mul(&d2));
        }
        // Δ² acts as the scalar t³.
        let t3 = LaurentPoly::monomial(1, 3);
        assert_eq!(d2.entries[0][0], t3);
        assert_eq!(d2.entries[1][1], t3);
        assert!(d2.entries[0][1].is_zero() && d2.entries[1][0].is_zero());
    }

    #[test]
    fn determinant_is_unit() {
        let w = p("a^3 B a^-3 B b b a");
        let (sign, k) = burau(&w).determinant().as_unit().unwrap();
        assert_eq!(sign, if w.writhe() % 2 == 0 { 1 } else { -1 });
        assert_eq!(k, w.writhe());
    }

    #[test]
    fn equality_examples() {
        assert!(!words_equal(&p("ab"), &p("ba")));
        assert!(words_equal(&p("D^2 a"), &p("a D^2")));
        assert!(words_equal(&p("D a"), &p("b D")));
    }

    #[test]
    fn fingerprint_examples() {
        assert_eq!(fingerprint(&p("aba")), fingerprint(&p("a^2 b")));
        assert_ne!(fingerprint(&p("ab")), fingerprint(&p("a^3 b")));
        let w = p("a^2 B a b^3");
        let u = p("b A b a a");
        assert_eq!(fingerprint(&w.conjugate_by(&u)), fingerprint(&w));
    }

    #[test]
    fn long_words_use_big_coefficients() {
        let w = p("a B").pow(120);
        let m = burau(&w);
        assert!(m.entries.iter().flatten().any(LaurentPoly::is_big));
        assert!(words_equal(&w.concat(&p("D^2")), &p("D^2").concat(&w)));
    }
}
