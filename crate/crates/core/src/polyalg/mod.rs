//! Exact polynomial, fraction and truncated-series arithmetic plus the
//! q-analog primitives.

pub mod fraction;
pub mod poly;
pub mod qanalog;
pub mod series;

pub use fraction::PolyFraction;
pub use poly::{poly, Exponents, Poly, Var};
pub use qanalog::{geometric, pochhammer, q_binomial, q_factorial, q_int, q_multinomial, var_int};
pub use series::{Coeff, QExpSeries, TruncSeries};

/// `LaurentPoly` shares the representation; negative exponents are allowed.
pub type LaurentPoly = Poly;
/// Alias kept for readability where nonnegative exponents are expected.
pub type SparsePoly = Poly;

#[cfg(test)]
mod proptests {
    use super::*;
    use proptest::prelude::*;

    fn arb_poly() -> impl Strategy<Value = Poly> {
        proptest::collection::vec((-3i64..4, 0i32..3, 0i32..3, 0i32..2), 0..5).prop_map(|terms| {
            terms.into_iter().fold(Poly::zero(), |acc, (c, a, b, d)| {
                &acc + &Poly::term(c, &[(Var::Q, a), (Var::T, b), (Var::R, d)])
            })
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
        }

        #[test]
        fn exact_division_inverts_multiplication(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).div_exact(&b), Some(a.clone()));
        }

        #[test]
        fn text_round_trip(a in arb_poly()) {
            prop_assert_eq!(poly(&a.to_string()), a);
        }
    }
}
