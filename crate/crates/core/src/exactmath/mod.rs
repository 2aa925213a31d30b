//! Exact integer, rational and sparse multivariate polynomial arithmetic.

mod combin;
mod interp;
mod matrix;
mod poly;
mod text;

pub use combin::{binom, binom_i64, elementary_symmetric, factorial, qbinom, qbinom_neg1};
pub use interp::{interpolate, interpolate_coeffs, interpolate_poly, nodes};
pub use matrix::{det_by_permutations, det_int, det_poly, int_matrix_is_skew, max_abs, Matrix};
pub use poly::{Monomial, SparsePoly, Var};

pub type Integer = num_bigint::BigInt;
pub type Rational = num_rational::BigRational;

/// Shorthand for the polynomial `t`.
pub fn t() -> SparsePoly {
    SparsePoly::var(Var::T)
}

/// Shorthand for the polynomial `u`.
pub fn u() -> SparsePoly {
    SparsePoly::var(Var::U)
}

pub fn eps() -> SparsePoly {
    SparsePoly::var(Var::Eps)
}

pub fn c(x: i64) -> SparsePoly {
    SparsePoly::constant(x)
}

/// `(-1)^k` for any integer `k`.
pub fn sign(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Parses a polynomial, panicking on malformed input. For literals in code.
pub fn poly(s: &str) -> SparsePoly {
    s.parse().unwrap_or_else(|e| panic!("bad polynomial literal {s:?}: {e}"))
}

#[cfg(test)]
mod proptests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::BTreeMap;

    fn arb_poly() -> impl Strategy<Value = SparsePoly> {
        prop::collection::vec((-5i64..=5, 0u32..3, 0u32..3, 0u32..2), 0..6).prop_map(|terms| {
            terms
                .into_iter()
                .map(|(c, a, b, e)| {
                    SparsePoly::term(c, Monomial::from_pairs([(Var::T, a), (Var::U, b), (Var::Eps, e)]))
                })
                .sum()
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
            prop_assert_eq!(&p + &q, &q + &p);
            prop_assert_eq!(&p * &q, &q * &p);
            prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
            prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
            prop_assert!((&p - &p).is_zero());
        }

        #[test]
        fn text_roundtrip(p in arb_poly()) {
            let s = p.to_string();
            let back: SparsePoly = s.parse().unwrap();
            prop_assert_eq!(back, p);
        }

        #[test]
        fn evaluation_is_a_homomorphism(p in arb_poly(), q in arb_poly(), a in -4i64..4, b in -4i64..4, e in -3i64..3) {
            let mut at = BTreeMap::new();
            at.insert(Var::T, Integer::from(a));
            at.insert(Var::U, Integer::from(b));
            at.insert(Var::Eps, Integer::from(e));
            let pv = p.eval(&at).unwrap();
            let qv = q.eval(&at).unwrap();
            prop_assert_eq!((&p * &q).eval(&at).unwrap(), &pv * &qv);
            prop_assert_eq!((&p + &q).eval(&at).unwrap(), pv + qv);
        }

        #[test]
        fn interpolation_recovers(coeffs in prop::collection::vec(-20i64..20, 1..7)) {
            let ints: Vec<Integer> = coeffs.iter().map(|&c| Integer::from(c)).collect();
            let p = SparsePoly::from_univariate(Var::T, &ints);
            let pts: Vec<(Integer, Rational)> = nodes(coeffs.len())
                .into_iter()
                .map(|x| {
                    let mut at = BTreeMap::new();
                    at.insert(Var::T, x.clone());
                    let y = p.eval(&at).unwrap();
                    (x, Rational::from_integer(y))
                })
                .collect();
            prop_assert_eq!(interpolate(&pts, Var::T).unwrap(), p);
        }
    }
}
