//! Jones polynomials of closed 3-braids.
//!
//! The braid is sent into the Temperley–Lieb algebra TL₃ through the
//! Kauffman skein relation, closed up with the Markov trace to give the
//! bracket, and normalized by the writhe:
//! `V(t) = (-A^3)^(-writhe) ⟨closure⟩` evaluated at `A = t^(-1/4)`.
//!
//! `t = A^-4` leaves a choice of fourth root. We take `A = i·t^(-1/4)`, so
//! `A^2 = -t^(-1/2)`. Knots do not see the difference; for links with an
//! even number of components it flips the sign, and this branch is the one
//! that agrees with the torus-link formula in [`torus`]. In particular the
//! two-component unlink gets `t^(1/2) + t^(-1/2)`.
//!
//! The closure of `σ1^3 σ2` (a positive trefoil) gets `-t^4 + t^3 + t`.

pub mod tl;
pub mod torus;

pub use tl::{tl_image, TlElement};
pub use torus::torus_jones;

use crate::laurent::{LaurentPoly, Var};
use crate::word::Word;

/// Kauffman bracket of the closed braid, normalized so the unknot is 1.
pub fn bracket_closure(word: &Word) -> LaurentPoly {
    tl_image(word).closure_trace()
}

/// Jones polynomial of the closed braid, in `t` (half-integer exponents for
/// links with an even number of components).
pub fn jones_closure(word: &Word) -> LaurentPoly {
    let writhe = word.exponent_sum();
    // (-A^3)^(-w) = (-1)^w A^(-3w)
    let sign = if writhe % 2 == 0 { 1 } else { -1 };
    let normalizer = LaurentPoly::monomial(Var::A, sign, -3 * writhe);
    let in_a = &normalizer * &bracket_closure(word);
    let in_t = in_a
        .substitute_power(Var::T, -1, 4)
        .expect("writhe-normalized bracket has exponents divisible by 2");
    // A^2 = -t^(-1/2): negate the half-integer powers
    LaurentPoly::from_half_terms(
        Var::T,
        in_t.half_terms()
            .map(|(e, c)| if e % 2 == 0 { (e, c) } else { (e, -c) }),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::parse_word;
    use proptest::prelude::*;

    fn t(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(Var::T, terms.iter().copied())
    }

    #[test]
    fn unlink_of_three() {
        let d = tl::loop_value();
        assert_eq!(bracket_closure(&Word::identity()), d.pow(2));
        let u = LaurentPoly::from_half_terms(Var::T, [(1, -1), (-1, -1)]);
        assert_eq!(jones_closure(&Word::identity()), u.pow(2));
    }

    #[test]
    fn unknot_closure() {
        let b = bracket_closure(&parse_word("s1 s2").unwrap());
        // one positive kink per destabilization: (-A^3)^2 = A^6
        assert_eq!(b, LaurentPoly::monomial(Var::A, 1, 6));
        assert_eq!(jones_closure(&parse_word("s1 s2").unwrap()), t(&[(0, 1)]));
        assert_eq!(
            jones_closure(&parse_word("s1^-1 s2").unwrap()),
            t(&[(0, 1)])
        );
    }

    #[test]
    fn trefoil_chirality() {
        assert_eq!(
            jones_closure(&parse_word("s1^3 s2").unwrap()),
            t(&[(4, -1), (3, 1), (1, 1)])
        );
        assert_eq!(
            jones_closure(&parse_word("s1^-3 s2^-1").unwrap()),
            t(&[(-4, -1), (-3, 1), (-1, 1)])
        );
    }

    #[test]
    fn hopf_and_two_unlink() {
        let hopf = jones_closure(&parse_word("s1^2 s2").unwrap());
        assert_eq!(hopf, LaurentPoly::from_half_terms(Var::T, [(5, 1), (1, 1)]));
        let unlink = jones_closure(&parse_word("s2").unwrap());
        assert_eq!(
            unlink,
            LaurentPoly::from_half_terms(Var::T, [(1, 1), (-1, 1)])
        );
    }

    #[test]
    fn agrees_with_torus_formula() {
        for s in 2..=9 {
            let w = Word::from_pairs([(1, s), (2, 1)]);
            assert_eq!(jones_closure(&w), torus_jones(2, s).unwrap(), "(2, {s})");
        }
        for s in 2..=6 {
            assert_eq!(
                jones_closure(&Word::delta_power(s)),
                torus_jones(3, s).unwrap(),
                "(3, {s})"
            );
        }
    }

    #[test]
    fn figure_eight_is_amphichiral() {
        let v = jones_closure(&parse_word("s1 s2^-1 s1 s2^-1").unwrap());
        assert_eq!(v, t(&[(2, 1), (1, -1), (0, 1), (-1, -1), (-2, 1)]));
    }

    fn arb_word(max_len: usize) -> impl Strategy<Value = Word> {
        prop::collection::vec((1i64..=3, -3i64..=3), 0..max_len).prop_map(Word::from_pairs)
    }

    fn invert_t(p: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::from_half_terms(Var::T, p.half_terms().map(|(e, c)| (-e, c)))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn conjugation_invariant(w in arb_word(6), c in arb_word(4)) {
            prop_assert_eq!(jones_closure(&w.conjugated_by(&c)), jones_closure(&w));
            prop_assert_eq!(bracket_closure(&w.conjugated_by(&c)), bracket_closure(&w));
        }

        #[test]
        fn mirror_inverts_t(w in arb_word(6)) {
            prop_assert_eq!(jones_closure(&w.mirror()), invert_t(&jones_closure(&w)));
        }

        #[test]
        fn knots_have_integer_exponents(w in arb_word(6)) {
            let v = jones_closure(&w);
            prop_assert_eq!(v.has_integer_exponents(), w.component_count() % 2 == 1);
        }
    }
}
