//! Pfaffians of skew-symmetric matrices over integer polynomials, the minor
//! summation formula and copfaffian matrices.

mod eval;
mod msf;

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::exactmath::{Matrix, SparsePoly};

pub use eval::{pfaffian_int, pfaffian_rational, strategy_for, PfaffianStrategy};
pub use msf::{minor_summation_check, msf_even, msf_odd, MsfReport, QFormReport};

/// A validated skew-symmetric square matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewMatrix(Matrix);

impl SkewMatrix {
    pub fn new(m: Matrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::NotSkew(format!("{}x{} is not square", m.rows(), m.cols())));
        }
        let n = m.rows();
        for i in 0..n {
            if !m.get(i, i).is_zero() {
                return Err(Error::NotSkew(format!("nonzero diagonal entry at {}", i + 1)));
            }
            for j in i + 1..n {
                if m.get(j, i) != &-m.get(i, j) {
                    return Err(Error::NotSkew(format!("entries ({},{}) and ({},{})", i + 1, j + 1, j + 1, i + 1)));
                }
            }
        }
        Ok(SkewMatrix(m))
    }

    /// Builds from the strict upper triangle, `f(i, j)` with `i < j` (0-based).
    pub fn from_upper(n: usize, mut f: impl FnMut(usize, usize) -> SparsePoly) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i + 1..n {
                let v = f(i, j);
                m.set(j, i, -&v);
                m.set(i, j, v);
            }
        }
        SkewMatrix(m)
    }

    pub fn size(&self) -> usize {
        self.0.rows()
    }

    pub fn get(&self, i: usize, j: usize) -> &SparsePoly {
        self.0.get(i, j)
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn into_matrix(self) -> Matrix {
        self.0
    }

    /// Principal submatrix on sorted 0-based indices.
    pub fn principal(&self, idx: &[usize]) -> SkewMatrix {
        SkewMatrix(self.0.select(idx, idx))
    }

    /// Principal submatrix on a 1-based index set.
    pub fn restrict(&self, idx1: &[usize]) -> SkewMatrix {
        let idx: Vec<usize> = idx1.iter().map(|&i| i - 1).collect();
        self.principal(&idx)
    }
}

impl serde::Serialize for SkewMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// Pfaffian by enumeration of perfect matchings, each signed by its
/// crossing number. Independent reference for sizes up to 12.
pub fn pfaffian_oracle(a: &SkewMatrix) -> Result<SparsePoly> {
    let n = a.size();
    if n > 12 {
        return Err(Error::SizeGuard(format!("matching enumeration limited to size 12, got {n}")));
    }
    if n % 2 == 1 {
        return Ok(SparsePoly::zero());
    }
    let mut total = SparsePoly::zero();
    let mut pairs: Vec<(usize, usize)> = Vec::with_capacity(n / 2);
    let mut free: Vec<usize> = (0..n).collect();
    matchings(&mut free, &mut pairs, &mut |pairs| {
        let crossings = pairs
            .iter()
            .enumerate()
            .flat_map(|(k, &(a, b))| pairs[k + 1..].iter().map(move |&(c, d)| (a, b, c, d)))
            .filter(|&(a, b, c, d)| (a < c && c < b && b < d) || (c < a && a < d && d < b))
            .count();
        let mut prod = SparsePoly::constant(if crossings % 2 == 0 { 1 } else { -1 });
        for &(i, j) in pairs {
            prod = &prod * a.get(i, j);
            if prod.is_zero() {
                return;
            }
        }
        total += &prod;
    });
    Ok(total)
}

fn matchings(free: &mut Vec<usize>, pairs: &mut Vec<(usize, usize)>, f: &mut impl FnMut(&[(usize, usize)])) {
    if free.is_empty() {
        f(pairs);
        return;
    }
    let first = free.remove(0);
    for k in 0..free.len() {
        let partner = free.remove(k);
        pairs.push((first, partner));
        matchings(free, pairs, f);
        pairs.pop();
        free.insert(k, partner);
    }
    free.insert(0, first);
}

/// Production Pfaffian. Odd size gives 0, size 0 gives 1.
pub fn pfaffian(a: &SkewMatrix) -> SparsePoly {
    eval::pfaffian_auto(a)
}

/// Pfaffian by first-row expansion memoised on the remaining index set.
/// Division free; used when evaluation grids would be too large.
pub fn pfaffian_expand(a: &SkewMatrix) -> Result<SparsePoly> {
    let n = a.size();
    if n > 64 {
        return Err(Error::SizeGuard(format!("expansion limited to size 64, got {n}")));
    }
    if n % 2 == 1 {
        return Ok(SparsePoly::zero());
    }
    let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut memo: HashMap<u64, SparsePoly> = HashMap::new();
    Ok(expand(a, full, &mut memo))
}

fn expand(a: &SkewMatrix, set: u64, memo: &mut HashMap<u64, SparsePoly>) -> SparsePoly {
    if set == 0 {
        return SparsePoly::one();
    }
    if let Some(v) = memo.get(&set) {
        return v.clone();
    }
    let i = set.trailing_zeros() as usize;
    let rest = set & !(1u64 << i);
    let mut acc = SparsePoly::zero();
    let mut pos = 0usize;
    let mut bits = rest;
    while bits != 0 {
        let j = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let e = a.get(i, j);
        if !e.is_zero() {
            let sub = expand(a, rest & !(1u64 << j), memo);
            if !sub.is_zero() {
                let term = e * &sub;
                if pos.is_multiple_of(2) {
                    acc += &term;
                } else {
                    acc -= &term;
                }
            }
        }
        pos += 1;
    }
    memo.insert(set, acc.clone());
    acc
}

/// Complement of a 1-based index set in `[n]`.
pub fn complement(idx: &[usize], n: usize) -> Vec<usize> {
    (1..=n).filter(|k| !idx.contains(k)).collect()
}

/// `(-1)^{s(J, I)}` where `J` is the complement of `I` in `[n]` and the
/// shuffle number counts pairs `j in J`, `i in I` with `j > i`.
pub fn shuffle_sign(idx: &[usize], n: usize) -> Result<i64> {
    if idx.windows(2).any(|w| w[0] >= w[1]) || idx.iter().any(|&i| i == 0 || i > n) {
        return Err(Error::InvalidParameter(format!("{idx:?} is not a sorted subset of [{n}]")));
    }
    let comp = complement(idx, n);
    let count: usize = comp.iter().map(|&j| idx.iter().filter(|&&i| j > i).count()).sum();
    Ok(if count.is_multiple_of(2) { 1 } else { -1 })
}

/// The matrix of signed complementary Pfaffians
/// `gamma(i, j) = (-1)^{j-i-1} Pf(A without rows and columns i, j)`.
pub fn copfaffian_matrix(a: &SkewMatrix) -> Result<SkewMatrix> {
    let n = a.size();
    if n % 2 == 1 {
        return Err(Error::InvalidParameter("copfaffian matrix needs even size".into()));
    }
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        for j in i + 1..n {
            let idx: Vec<usize> = (0..n).filter(|&k| k != i && k != j).collect();
            let mut v = pfaffian(&a.principal(&idx));
            if (j - i - 1) % 2 == 1 {
                v = -v;
            }
            m.set(j, i, -&v);
            m.set(i, j, v);
        }
    }
    Ok(SkewMatrix(m))
}

/// All sorted `k`-subsets of `[n]` (1-based) in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..=n {
            if n - x + 1 < k - cur.len() {
                break;
            }
            cur.push(x);
            rec(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(1, n, k, &mut cur, &mut out);
    out
}
