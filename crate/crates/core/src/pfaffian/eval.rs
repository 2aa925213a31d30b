use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::SkewMatrix;
use crate::error::Result;
use crate::exactmath::{interpolate_poly, nodes, Matrix, SparsePoly, Var};

/// Largest evaluation grid before falling back to symbolic expansion.
const GRID_LIMIT: u64 = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PfaffianStrategy {
    Elimination,
    Interpolation,
    Expansion,
}

/// Skew Gaussian elimination over the rationals.
pub fn pfaffian_rational(rows: &[Vec<BigRational>]) -> BigRational {
    let n = rows.len();
    if n % 2 == 1 {
        return BigRational::zero();
    }
    let mut a: Vec<Vec<BigRational>> = rows.to_vec();
    let mut result = BigRational::one();
    let mut k = 0;
    while k < n {
        let Some(p) = (k + 1..n).find(|&j| !a[k][j].is_zero()) else {
            return BigRational::zero();
        };
        if p != k + 1 {
            a.swap(p, k + 1);
            for row in a.iter_mut() {
                row.swap(p, k + 1);
            }
            result = -result;
        }
        let piv = a[k][k + 1].clone();
        result *= &piv;
        for i in k + 2..n {
            for j in i + 1..n {
                let corr = (&a[k][i] * &a[k + 1][j] - &a[k][j] * &a[k + 1][i]) / &piv;
                if corr.is_zero() {
                    continue;
                }
                let v = &a[i][j] - corr;
                a[j][i] = -v.clone();
                a[i][j] = v;
            }
        }
        k += 2;
    }
    result
}

pub fn pfaffian_int(rows: &[Vec<BigInt>]) -> BigInt {
    let q: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect();
    pfaffian_rational(&q).to_integer()
}

/// Per-variable degree bound: half the sum over rows of the largest degree
/// in that row, since a matching uses every row exactly once.
fn degree_bounds(m: &Matrix) -> Vec<(Var, u32)> {
    let n = m.rows();
    m.vars()
        .into_iter()
        .map(|v| {
            let total: u32 = (0..n)
                .map(|i| m.row(i).iter().map(|x| x.degree_in(v)).max().unwrap_or(0))
                .sum();
            (v, total / 2)
        })
        .collect()
}

pub(super) fn choose_strategy(a: &SkewMatrix) -> PfaffianStrategy {
    let m = a.matrix();
    if m.is_constant() {
        return PfaffianStrategy::Elimination;
    }
    let grid = degree_bounds(m)
        .iter()
        .try_fold(1u64, |acc, &(_, d)| acc.checked_mul(d as u64 + 1));
    match grid {
        Some(g) if g <= GRID_LIMIT => PfaffianStrategy::Interpolation,
        _ => PfaffianStrategy::Expansion,
    }
}

pub(super) fn pfaffian_auto(a: &SkewMatrix) -> SparsePoly {
    let n = a.size();
    if n % 2 == 1 {
        return SparsePoly::zero();
    }
    if n == 0 {
        return SparsePoly::one();
    }
    let m = a.matrix();
    match choose_strategy(a) {
        PfaffianStrategy::Elimination => {
            SparsePoly::constant(pfaffian_int(&m.to_int_rows().expect("constant matrix")))
        }
        PfaffianStrategy::Interpolation => {
            let bounds = degree_bounds(m);
            interpolate_grid(m, &bounds).expect("degree bound for interpolation violated")
        }
        PfaffianStrategy::Expansion => super::pfaffian_expand(a).expect("expansion size guard"),
    }
}

fn interpolate_grid(m: &Matrix, vars: &[(Var, u32)]) -> Result<SparsePoly> {
    let Some(&(v, d)) = vars.first() else {
        return Ok(SparsePoly::constant(pfaffian_int(&m.to_int_rows()?)));
    };
    let values: Result<Vec<(BigInt, SparsePoly)>> = nodes(d as usize + 1)
        .into_par_iter()
        .map(|x| {
            let mut at = BTreeMap::new();
            at.insert(v, x.clone());
            let sub = m.eval_partial(&at);
            Ok((x, interpolate_grid(&sub, &vars[1..])?))
        })
        .collect();
    interpolate_poly(&values?, v)
}

/// Strategy the production routine would use, for diagnostics.
pub fn strategy_for(a: &SkewMatrix) -> PfaffianStrategy {
    choose_strategy(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::poly;

    #[test]
    fn pivot_swap_needed() {
        // a12 = 0 forces a swap
        let a = SkewMatrix::from_upper(4, |i, j| SparsePoly::constant(match (i, j) {
            (0, 1) => 0,
            (0, 2) => 2,
            (0, 3) => 1,
            (1, 2) => 3,
            (1, 3) => 5,
            _ => 7,
        }));
        // 0*7 - 2*5 + 1*3
        assert_eq!(pfaffian_int(&a.matrix().to_int_rows().unwrap()), BigInt::from(-7));
    }

    #[test]
    fn strategies() {
        let c = SkewMatrix::from_upper(4, |_, _| SparsePoly::one());
        assert_eq!(choose_strategy(&c), PfaffianStrategy::Elimination);
        let t = SkewMatrix::from_upper(4, |_, _| poly("t"));
        assert_eq!(choose_strategy(&t), PfaffianStrategy::Interpolation);
        assert_eq!(pfaffian_auto(&t).to_string(), "t^2");
    }
}
