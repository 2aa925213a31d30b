use proptest::prelude::*;

use tsscpp::exactmath::{det_poly, Matrix, SparsePoly, Var};
use tsscpp::pfaffian::{pfaffian, pfaffian_oracle, SkewMatrix};
use tsscpp::ppart::{cspp_to_tspp, enumerate_cspp, tspp_to_cspp};

fn skew_from(size: usize, vals: &[i64]) -> SkewMatrix {
    let mut it = vals.iter().cycle();
    SkewMatrix::from_upper(size, |_, _| SparsePoly::constant(*it.next().unwrap()))
}

fn small_poly() -> impl Strategy<Value = SparsePoly> {
    prop::collection::vec((-4i64..=4, 0u32..3, 0u32..3), 0..5).prop_map(|terms| {
        let mut p = SparsePoly::zero();
        for (c, a, b) in terms {
            p += &(&SparsePoly::var_pow(Var::T, a) * &SparsePoly::var_pow(Var::U, b)).scale(&c.into());
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pfaffian_squares_to_determinant(size in 1usize..=8, vals in prop::collection::vec(-30i64..=30, 1..40)) {
        let a = skew_from(size, &vals);
        let p = pfaffian(&a);
        prop_assert_eq!(&p * &p, det_poly(a.matrix()).unwrap());
        if size % 2 == 1 {
            prop_assert!(p.is_zero());
        }
    }

    #[test]
    fn pfaffian_of_congruence(size in 2usize..=6, vals in prop::collection::vec(-5i64..=5, 1..30), pv in prop::collection::vec(-2i64..=2, 36)) {
        let a = skew_from(size, &vals);
        let pm = Matrix::from_fn(size, size, |i, j| SparsePoly::constant(pv[i * 6 + j]));
        let b = pm.mul(a.matrix()).unwrap().mul(&pm.transpose()).unwrap();
        let b = SkewMatrix::new(b).unwrap();
        prop_assert_eq!(pfaffian(&b), &det_poly(&pm).unwrap() * &pfaffian(&a));
    }

    #[test]
    fn polynomial_pfaffian_matches_oracle(size in 2usize..=6, entries in prop::collection::vec(small_poly(), 15)) {
        let mut it = entries.iter().cycle();
        let a = SkewMatrix::from_upper(size, |_, _| it.next().unwrap().clone());
        prop_assert_eq!(pfaffian(&a), pfaffian_oracle(&a).unwrap());
    }

    #[test]
    fn polynomial_text_round_trips(p in small_poly()) {
        let text = p.to_string();
        prop_assert_eq!(text.parse::<SparsePoly>().unwrap(), p);
    }

    #[test]
    fn bijection_round_trips(n in 1usize..=3, m in 0usize..=2, pick in any::<prop::sample::Index>()) {
        let all = enumerate_cspp(n, m).unwrap();
        let c = &all[pick.index(all.len())];
        let b = cspp_to_tspp(c).unwrap();
        prop_assert_eq!(&tspp_to_cspp(&b).unwrap(), c);
        for r in 1..=n + m {
            prop_assert_eq!(c.ubar(r) as usize + b.u(r).unwrap() as usize, n + m - 1);
        }
    }
}
