use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::poly::{Monomial, SparsePoly, Var};
use crate::error::{Error, Result};

/// Interpolates the unique polynomial in `v` of degree below `points.len()`
/// through the given points. Fails if a coefficient is not an integer.
pub fn interpolate(points: &[(BigInt, BigRational)], v: Var) -> Result<SparsePoly> {
    let coeffs = interpolate_coeffs(points)?;
    let mut ints = Vec::with_capacity(coeffs.len());
    for (k, c) in coeffs.iter().enumerate() {
        if !c.is_integer() {
            return Err(Error::NonIntegral(format!("coefficient of {v}^{k} is {c}")));
        }
        ints.push(c.to_integer());
    }
    Ok(SparsePoly::from_univariate(v, &ints))
}

/// Newton divided differences, expanded to the monomial basis.
pub fn interpolate_coeffs(points: &[(BigInt, BigRational)]) -> Result<Vec<BigRational>> {
    let n = points.len();
    let xs: Vec<BigRational> = points.iter().map(|(x, _)| BigRational::from_integer(x.clone())).collect();
    let distinct: BTreeSet<&BigInt> = points.iter().map(|(x, _)| x).collect();
    if distinct.len() != n {
        return Err(Error::InvalidParameter("interpolation nodes must be distinct".into()));
    }
    let mut dd: Vec<BigRational> = points.iter().map(|(_, y)| y.clone()).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }
    // Horner on the Newton form
    let mut out: Vec<BigRational> = vec![BigRational::zero(); n.max(1)];
    for k in (0..n).rev() {
        // out = out * (x - xs[k]) + dd[k]
        let mut next = vec![BigRational::zero(); n.max(1)];
        for (d, c) in out.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if d + 1 < next.len() {
                next[d + 1] += c;
            }
            next[d] -= c * &xs[k];
        }
        next[0] += &dd[k];
        out = next;
    }
    while out.len() > 1 && out.last().is_some_and(|c| c.is_zero()) {
        out.pop();
    }
    if n == 0 {
        out.clear();
    }
    Ok(out)
}

/// Interpolation in `v` for values that are themselves polynomials in other
/// variables, done coefficient by coefficient.
pub fn interpolate_poly(points: &[(BigInt, SparsePoly)], v: Var) -> Result<SparsePoly> {
    let mut monos: BTreeSet<Monomial> = BTreeSet::new();
    for (_, p) in points {
        for (m, _) in p.terms() {
            if m.exponent(v) != 0 {
                return Err(Error::InvalidParameter(format!(
                    "interpolation values must not involve {v}"
                )));
            }
            monos.insert(m.clone());
        }
    }
    let mut out = SparsePoly::zero();
    for m in monos {
        let pts: Vec<(BigInt, BigRational)> = points
            .iter()
            .map(|(x, p)| (x.clone(), BigRational::from_integer(p.coeff(&m))))
            .collect();
        let uni = interpolate(&pts, v)?;
        out += &uni.mul_monomial(&m);
    }
    Ok(out)
}

/// Evaluation nodes `0, 1, -1, 2, -2, ...`.
pub fn nodes(count: usize) -> Vec<BigInt> {
    (0..count)
        .map(|k| {
            let h = k.div_ceil(2) as i64;
            BigInt::from(if k % 2 == 1 { h } else { -h })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn three_points() {
        let pts = vec![(BigInt::from(0), q(2)), (BigInt::from(1), q(7)), (BigInt::from(-1), q(1))];
        assert_eq!(interpolate(&pts, Var::T).unwrap().to_string(), "2 + 3*t + 2*t^2");
    }

    #[test]
    fn non_integral_is_rejected() {
        let pts = vec![(BigInt::from(0), q(0)), (BigInt::from(2), q(1))];
        assert!(matches!(interpolate(&pts, Var::T), Err(Error::NonIntegral(_))));
    }

    #[test]
    fn duplicate_nodes_rejected() {
        let pts = vec![(BigInt::from(1), q(0)), (BigInt::from(1), q(1))];
        assert!(interpolate(&pts, Var::T).is_err());
    }

    #[test]
    fn node_sequence() {
        let ns: Vec<i64> = nodes(5).iter().map(|x| x.try_into().unwrap()).collect();
        assert_eq!(ns, vec![0, 1, -1, 2, -2]);
    }

    #[test]
    fn polynomial_values() {
        // f(t,u) = 1 + t*u + t^2
        let f: SparsePoly = "1 + t*u + t^2".parse().unwrap();
        let pts: Vec<(BigInt, SparsePoly)> = nodes(3)
            .into_iter()
            .map(|x| {
                let mut b = std::collections::BTreeMap::new();
                b.insert(Var::T, x.clone());
                (x, f.eval_partial(&b))
            })
            .collect();
        assert_eq!(interpolate_poly(&pts, Var::T).unwrap(), f);
    }
}
