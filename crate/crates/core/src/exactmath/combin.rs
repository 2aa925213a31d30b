use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::SparsePoly;

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Binomial coefficient, zero when `b < 0` or `b > a`.
pub fn binom(a: i64, b: i64) -> BigInt {
    if b < 0 || b > a {
        return BigInt::zero();
    }
    let b = b.min(a - b);
    let mut out = BigInt::one();
    for k in 0..b {
        out = out * (a - k) / (k + 1);
    }
    out
}

pub fn binom_i64(a: i64, b: i64) -> i64 {
    i64::try_from(binom(a, b)).expect("binomial overflows i64")
}

/// Gaussian binomial `[n choose r]_q` at `q = -1`.
pub fn qbinom_neg1(n: i64, r: i64) -> BigInt {
    if r < 0 || r > n {
        return BigInt::zero();
    }
    if n % 2 == 0 && r % 2 != 0 {
        return BigInt::zero();
    }
    binom(n / 2, r / 2)
}

/// Gaussian binomial as a polynomial in `q`, by the recurrence
/// `[n,r] = [n-1,r-1] + q^r [n-1,r]`.
pub fn qbinom(n: i64, r: i64, q: &SparsePoly) -> SparsePoly {
    if r < 0 || r > n {
        return SparsePoly::zero();
    }
    let n = n as usize;
    let r = r as usize;
    // rows of the q-Pascal triangle, truncated to width r+1
    let mut row = vec![SparsePoly::one()];
    for k in 1..=n {
        let mut next = vec![SparsePoly::zero(); (k + 1).min(r + 1)];
        for (j, slot) in next.iter_mut().enumerate() {
            let mut v = SparsePoly::zero();
            if j >= 1 && j - 1 < row.len() {
                v += &row[j - 1];
            }
            if j < row.len() {
                v += &(&q.pow(j as u32) * &row[j]);
            }
            *slot = v;
        }
        row = next;
    }
    row.get(r).cloned().unwrap_or_default()
}

/// Elementary symmetric polynomial `e_r` of the given values.
pub fn elementary_symmetric(r: i64, vals: &[SparsePoly]) -> SparsePoly {
    if r < 0 || r as usize > vals.len() {
        return SparsePoly::zero();
    }
    let r = r as usize;
    let mut e = vec![SparsePoly::zero(); r + 1];
    e[0] = SparsePoly::one();
    for v in vals {
        for k in (1..=r).rev() {
            let add = &e[k - 1] * v;
            e[k] += &add;
        }
    }
    e.swap_remove(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::Var;

    #[test]
    fn binomials() {
        assert_eq!(binom(5, 2), BigInt::from(10));
        assert_eq!(binom(3, -1), BigInt::zero());
        assert_eq!(binom(3, 4), BigInt::zero());
        assert_eq!(binom(0, 0), BigInt::one());
        assert_eq!(binom(-1, 0), BigInt::zero());
        assert_eq!(factorial(10), BigInt::from(3628800));
    }

    #[test]
    fn q_binomial_at_minus_one_matches_polynomial() {
        let q = SparsePoly::var(Var::Q);
        let mut at = std::collections::BTreeMap::new();
        at.insert(Var::Q, BigInt::from(-1));
        for n in 0..9 {
            for r in -1..=n + 1 {
                let p = qbinom(n, r, &q);
                assert_eq!(p.eval(&at).unwrap(), qbinom_neg1(n, r), "n={n} r={r}");
            }
        }
        assert_eq!(qbinom(4, 2, &q).to_string(), "1 + q + 2*q^2 + q^3 + q^4");
    }

    #[test]
    fn elementary() {
        let xs: Vec<SparsePoly> = (1..=3).map(|i| SparsePoly::var(Var::X(i))).collect();
        assert_eq!(elementary_symmetric(2, &xs).to_string(), "x1*x2 + x1*x3 + x2*x3");
        assert!(elementary_symmetric(4, &xs).is_zero());
        assert!(elementary_symmetric(0, &[]).is_one());
    }
}
