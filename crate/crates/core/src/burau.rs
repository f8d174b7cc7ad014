//! Reduced Burau representation of B₃.
//!
//! The representation is faithful on three strands, so equality of Burau
//! matrices decides equality of braids. It is used throughout the test suite
//! as an independent check on the rewriting machinery.

use std::ops::Mul;

use crate::laurent::{LaurentPoly, Var};
use crate::word::Word;

/// A 2×2 matrix over `Z[t, t⁻¹]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BurauMatrix {
    entries: [[LaurentPoly; 2]; 2],
}

fn tp(coeff: i64, exponent: i64) -> LaurentPoly {
    LaurentPoly::monomial(Var::T, coeff, exponent)
}

fn zero() -> LaurentPoly {
    LaurentPoly::zero(Var::T)
}

impl BurauMatrix {
    pub fn new(entries: [[LaurentPoly; 2]; 2]) -> Self {
        BurauMatrix { entries }
    }

    pub fn identity() -> Self {
        BurauMatrix::new([[tp(1, 0), zero()], [zero(), tp(1, 0)]])
    }

    /// `σ1 ↦ [[-t, 1], [0, 1]]`
    pub fn sigma1() -> Self {
        BurauMatrix::new([[tp(-1, 1), tp(1, 0)], [zero(), tp(1, 0)]])
    }

    /// `σ2 ↦ [[1, 0], [t, -t]]`
    pub fn sigma2() -> Self {
        BurauMatrix::new([[tp(1, 0), zero()], [tp(1, 1), tp(-1, 1)]])
    }

    /// Image of `a_i` for `i ∈ {1, 2, 3}`.
    pub fn generator(subscript: u8) -> Self {
        match subscript {
            1 => Self::sigma1(),
            2 => Self::sigma2(),
            _ => &(&Self::sigma1().inverse() * &Self::sigma2()) * &Self::sigma1(),
        }
    }

    pub fn entries(&self) -> &[[LaurentPoly; 2]; 2] {
        &self.entries
    }

    pub fn trace(&self) -> LaurentPoly {
        &self.entries[0][0] + &self.entries[1][1]
    }

    pub fn determinant(&self) -> LaurentPoly {
        let e = &self.entries;
        &(&e[0][0] * &e[1][1]) - &(&e[0][1] * &e[1][0])
    }

    /// Inverse via the adjugate. Panics unless the determinant is `±t^k`,
    /// which holds for every image of a braid.
    pub fn inverse(&self) -> Self {
        let (c, e) = self
            .determinant()
            .as_monomial()
            .expect("Burau determinant must be a unit monomial");
        assert!(
            c == 1 || c == -1,
            "Burau determinant must be a unit monomial"
        );
        let inv_det = LaurentPoly::half_monomial(Var::T, c, -e);
        let m = &self.entries;
        BurauMatrix::new([
            [&m[1][1] * &inv_det, &(-&m[0][1]) * &inv_det],
            [&(-&m[1][0]) * &inv_det, &m[0][0] * &inv_det],
        ])
    }

    pub fn pow(&self, n: i64) -> Self {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        (0..n.abs()).fold(Self::identity(), |acc, _| &acc * &base)
    }
}

impl Mul for &BurauMatrix {
    type Output = BurauMatrix;

    fn mul(self, rhs: &BurauMatrix) -> BurauMatrix {
        let a = &self.entries;
        let b = &rhs.entries;
        let cell = |i: usize, j: usize| &(&a[i][0] * &b[0][j]) + &(&a[i][1] * &b[1][j]);
        BurauMatrix::new([[cell(0, 0), cell(0, 1)], [cell(1, 0), cell(1, 1)]])
    }
}

/// Image of a word under the reduced Burau representation.
pub fn burau(word: &Word) -> BurauMatrix {
    let gens = [
        BurauMatrix::generator(1),
        BurauMatrix::generator(2),
        BurauMatrix::generator(3),
    ];
    word.syllables()
        .iter()
        .fold(BurauMatrix::identity(), |acc, s| {
            &acc * &gens[s.subscript() as usize - 1].pow(s.exponent())
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::parse_word;
    use proptest::prelude::*;

    #[test]
    fn empty_is_identity() {
        assert_eq!(burau(&Word::identity()), BurauMatrix::identity());
    }

    #[test]
    fn braid_relation() {
        let lhs = burau(&parse_word("s1 s2 s1").unwrap());
        let rhs = burau(&parse_word("s2 s1 s2").unwrap());
        assert_eq!(lhs, rhs);
        assert_ne!(
            burau(&parse_word("s1 s2").unwrap()),
            burau(&parse_word("s2 s1").unwrap())
        );
    }

    #[test]
    fn band_relations() {
        let d1 = burau(&parse_word("a2 a1").unwrap());
        let d2 = burau(&parse_word("a3 a2").unwrap());
        let d3 = burau(&parse_word("a1 a3").unwrap());
        assert_eq!(d1, d2);
        assert_eq!(d2, d3);
    }

    #[test]
    fn determinant_is_unit() {
        let m = burau(&parse_word("a1^3 a3^-2 a2").unwrap());
        let (c, e) = m.determinant().as_monomial().unwrap();
        assert_eq!(c.abs(), 1);
        // det σ_i = -t, so det = (-t)^(exponent sum)
        assert_eq!(e, 2 * 2);
        assert_eq!(c, 1);
    }

    fn arb_word() -> impl Strategy<Value = Word> {
        prop::collection::vec((1i64..=3, -3i64..=3), 0..8).prop_map(Word::from_pairs)
    }

    proptest! {
        #[test]
        fn homomorphism(u in arb_word(), v in arb_word()) {
            prop_assert_eq!(burau(&u.concat(&v)), &burau(&u) * &burau(&v));
            prop_assert_eq!(burau(&u.concat(&u.inverse())), BurauMatrix::identity());
        }

        #[test]
        fn classical_conversion_preserves_image(u in arb_word()) {
            prop_assert_eq!(burau(&u.to_classical()), burau(&u));
        }
    }
}
