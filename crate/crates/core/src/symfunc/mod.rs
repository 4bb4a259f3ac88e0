//! Symmetric and quasisymmetric function algebra.

pub mod characters;
pub mod monomial;
pub mod qsym;
pub mod symf;
pub mod sympoly;
pub mod transition;

pub use characters::mn_character;
pub use monomial::MonExpansion;
pub use qsym::{qsym_to_monomial, QSymF};
pub use symf::{sym, Basis, SymF};
pub use sympoly::{plethysm_h, plethysm_p, SymPoly};
pub use transition::TABLE_DEGREE_CAP;

use crate::error::Result;

/// Frobenius characteristic of the restriction to `S_{n-1}`: expand in `n`
/// variables, take `d/dx_n` at `x_n = 0`, and read back the symmetric function.
pub fn restrict_frobenius(f: &SymF, n: usize) -> Result<SymF> {
    symf::check_degree(f, n)?;
    if n == 0 {
        return crate::error::invalid("cannot restrict a degree-0 function");
    }
    let mono = MonExpansion::from_symf(f, n)?;
    mono.derive_last_at_zero()?.to_symf()?.convert(f.basis())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{partitions, Partition};
    use num_rational::BigRational;
    use num_traits::Zero;
    use proptest::prelude::*;

    /// Restriction is `d/dp_1` in the power-sum basis.
    fn restrict_by_p1(f: &SymF) -> SymF {
        let p = f.to_p().unwrap();
        let terms = p.terms().iter().filter(|(l, _)| l.multiplicity(1) > 0).map(|(l, c)| {
            let k = l.multiplicity(1);
            let rest = Partition::from_parts(l.parts().iter().copied().filter(|&x| x != 1)).with_ones(k - 1);
            (rest, c * symf::rat(k as i64))
        });
        SymF::from_terms(Basis::P, terms)
    }

    #[test]
    fn restriction_examples() {
        for n in 1..=6 {
            assert!(restrict_frobenius(&symf::h(n), n).unwrap().equals(&symf::h(n - 1)).unwrap());
        }
        assert_eq!(restrict_frobenius(&sym("s[1,1]"), 2).unwrap(), sym("s[1]"));
        assert!(restrict_frobenius(&sym("s[1,1] + s[1]"), 2).is_err());
    }

    #[test]
    fn restriction_matches_branching_rule() {
        for n in 1..=6 {
            for lambda in partitions(n) {
                let f = SymF::basis_element(Basis::S, lambda.clone());
                let a = restrict_frobenius(&f, n).unwrap();
                assert!(a.equals(&restrict_by_p1(&f)).unwrap(), "{lambda}");
            }
        }
    }

    fn arb_symf() -> impl Strategy<Value = SymF> {
        let basis = prop_oneof![
            Just(Basis::M),
            Just(Basis::H),
            Just(Basis::E),
            Just(Basis::P),
            Just(Basis::S)
        ];
        let terms = proptest::collection::vec((0usize..=5, 0usize..8, -4i64..5, 1i64..4), 0..4);
        (basis, terms).prop_map(|(b, ts)| {
            SymF::from_terms(
                b,
                ts.into_iter().map(|(n, idx, num, den)| {
                    let ps = partitions(n);
                    let l = ps[idx % ps.len()].clone();
                    (l, BigRational::new(num.into(), den.into()))
                }),
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn conversions_round_trip(f in arb_symf(), i in 0usize..5) {
            let b = Basis::ALL[i];
            let g = f.convert(b).unwrap();
            prop_assert_eq!(g.convert(f.basis()).unwrap(), f.clone());
        }

        #[test]
        fn omega_involution_and_commutation(f in arb_symf(), i in 0usize..5) {
            let w = f.omega().unwrap();
            prop_assert_eq!(w.omega().unwrap(), f.clone());
            let g = f.convert(Basis::ALL[i]).unwrap();
            prop_assert!(g.omega().unwrap().equals(&w).unwrap());
            let q = QSymF::from_symf(&f).unwrap();
            prop_assert_eq!(q.omega(), QSymF::from_symf(&w).unwrap());
            prop_assert_eq!(q.omega().omega(), q);
        }

        #[test]
        fn products_agree_across_bases(f in arb_symf(), g in arb_symf()) {
            let a = f.mul(&g).unwrap();
            let b = f.convert(Basis::S).unwrap().mul(&g).unwrap();
            prop_assert!(a.equals(&b).unwrap());
            prop_assert!(!a.is_zero() || f.is_zero() || g.is_zero() || a.terms().values().all(|c| c.is_zero()));
        }

        #[test]
        fn inner_product_is_symmetric(f in arb_symf(), g in arb_symf()) {
            prop_assert_eq!(f.inner(&g).unwrap(), g.inner(&f).unwrap());
            let self_norm = f.inner(&f).unwrap();
            prop_assert!(self_norm >= BigRational::zero());
        }
    }
}
