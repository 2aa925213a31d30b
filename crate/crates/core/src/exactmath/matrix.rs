use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::poly::{SparsePoly, Var};
use crate::error::{Error, Result};

/// Dense rectangular matrix of polynomials, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<SparsePoly>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![SparsePoly::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, SparsePoly::one());
        }
        m
    }

    /// The anti-diagonal permutation matrix.
    pub fn anti_identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, n - 1 - i, SparsePoly::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> SparsePoly) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<SparsePoly>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_ints(rows: &[Vec<i64>]) -> Result<Self> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| SparsePoly::constant(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &SparsePoly {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: SparsePoly) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[SparsePoly] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<SparsePoly>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn neg(&self) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| -x).collect() }
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Matrix::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = SparsePoly::zero();
            for k in 0..self.cols {
                let a = self.get(i, k);
                let b = other.get(k, j);
                if !a.is_zero() && !b.is_zero() {
                    acc += &(a * b);
                }
            }
            acc
        }))
    }

    pub fn scale(&self, c: &SparsePoly) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * c).collect() }
    }

    /// Submatrix on the given (0-based) row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        Matrix::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    /// Block matrix `[[a, b], [c, d]]`.
    pub fn block(a: &Matrix, b: &Matrix, c: &Matrix, d: &Matrix) -> Result<Matrix> {
        if a.rows != b.rows || c.rows != d.rows || a.cols != c.cols || b.cols != d.cols {
            return Err(Error::ShapeMismatch("incompatible blocks".into()));
        }
        let rows = a.rows + c.rows;
        let cols = a.cols + b.cols;
        Ok(Matrix::from_fn(rows, cols, |i, j| {
            let (blk, ii) = if i < a.rows { ((a, b), i) } else { ((c, d), i - a.rows) };
            if j < a.cols {
                blk.0.get(ii, j).clone()
            } else {
                blk.1.get(ii, j - a.cols).clone()
            }
        }))
    }

    pub fn map(&self, f: impl Fn(&SparsePoly) -> SparsePoly) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn substitute(&self, b: &BTreeMap<Var, SparsePoly>) -> Matrix {
        self.map(|x| x.substitute(b))
    }

    pub fn eval_partial(&self, b: &BTreeMap<Var, BigInt>) -> Matrix {
        self.map(|x| x.eval_partial(b))
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        self.data.iter().flat_map(|x| x.vars()).collect()
    }

    pub fn is_constant(&self) -> bool {
        self.data.iter().all(|x| x.constant_value().is_some())
    }

    /// Integer entries, failing if some entry involves a variable.
    pub fn to_int_rows(&self) -> Result<Vec<Vec<BigInt>>> {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|x| {
                        x.constant_value()
                            .ok_or_else(|| Error::InvalidParameter(format!("entry {x} is not constant")))
                    })
                    .collect()
            })
            .collect()
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows: Vec<Vec<SparsePoly>> = Vec::deserialize(d)?;
        Matrix::from_rows(rows).map_err(serde::de::Error::custom)
    }
}

/// Determinant by expansion over column subsets; division free, so it works
/// for any polynomial entries. Exponential in the size.
pub fn det_poly(m: &Matrix) -> Result<SparsePoly> {
    if !m.is_square() {
        return Err(Error::ShapeMismatch("determinant of a non-square matrix".into()));
    }
    let n = m.rows();
    if n == 0 {
        return Ok(SparsePoly::one());
    }
    if n > 24 {
        return Err(Error::SizeGuard(format!("polynomial determinant of size {n}")));
    }
    if m.is_constant() {
        return Ok(SparsePoly::constant(det_int(&m.to_int_rows()?)));
    }
    // dp over the set of columns used by the first popcount rows
    let mut layer: HashMap<u32, SparsePoly> = HashMap::new();
    layer.insert(0, SparsePoly::one());
    for r in 0..n {
        let mut next: HashMap<u32, SparsePoly> = HashMap::new();
        for (mask, val) in &layer {
            for c in 0..n {
                if mask & (1 << c) != 0 {
                    continue;
                }
                let e = m.get(r, c);
                if e.is_zero() {
                    continue;
                }
                let inv = (mask >> (c + 1)).count_ones();
                let mut term = val * e;
                if inv % 2 == 1 {
                    term = -term;
                }
                *next.entry(mask | (1 << c)).or_default() += &term;
            }
        }
        next.retain(|_, v| !v.is_zero());
        layer = next;
    }
    Ok(layer.remove(&((1u32 << n) - 1)).unwrap_or_default())
}

/// Fraction-free (Bareiss) determinant of an integer matrix.
pub fn det_int(rows: &[Vec<BigInt>]) -> BigInt {
    let n = rows.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = rows.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Permutation-expansion determinant, for tests.
pub fn det_by_permutations(rows: &[Vec<BigInt>]) -> BigInt {
    let n = rows.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = BigInt::zero();
    permute(&mut perm, 0, &mut |p| {
        let inv = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
        let mut prod = BigInt::one();
        for (i, &j) in p.iter().enumerate() {
            prod *= &rows[i][j];
        }
        if inv % 2 == 1 {
            total -= prod;
        } else {
            total += prod;
        }
    });
    total
}

fn permute(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, f);
        p.swap(k, i);
    }
}

pub fn int_matrix_is_skew(rows: &[Vec<BigInt>]) -> bool {
    let n = rows.len();
    rows.iter().all(|r| r.len() == n)
        && (0..n).all(|i| rows[i][i].is_zero() && (0..n).all(|j| rows[i][j] == -&rows[j][i]))
}

pub fn max_abs(rows: &[Vec<BigInt>]) -> BigInt {
    rows.iter().flatten().map(|x| x.abs()).max().unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[&[i64]]) -> Vec<Vec<BigInt>> {
        v.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn bareiss_matches_permutations() {
        let a = ints(&[&[2, -1, 0, 3], &[1, 4, 2, -2], &[0, 5, -3, 1], &[7, 0, 1, 1]]);
        assert_eq!(det_int(&a), det_by_permutations(&a));
        let z = ints(&[&[0, 1], &[0, 2]]);
        assert_eq!(det_int(&z), BigInt::zero());
    }

    #[test]
    fn polynomial_determinant() {
        let t = SparsePoly::var(Var::T);
        let m = Matrix::from_rows(vec![
            vec![t.clone(), SparsePoly::one()],
            vec![SparsePoly::one(), t.clone()],
        ])
        .unwrap();
        assert_eq!(det_poly(&m).unwrap().to_string(), "-1 + t^2");
        let j = Matrix::anti_identity(3);
        assert_eq!(det_poly(&j).unwrap(), SparsePoly::constant(-1));
    }

    #[test]
    fn block_and_select() {
        let a = Matrix::from_ints(&[vec![1, 2], vec![3, 4]]).unwrap();
        let b = Matrix::block(&a, &a, &a, &a).unwrap();
        assert_eq!(b.rows(), 4);
        assert_eq!(b.get(3, 2), &SparsePoly::constant(3));
        let s = b.select(&[0, 3], &[1, 2]);
        assert_eq!(s.to_int_rows().unwrap(), ints(&[&[2, 1], &[4, 3]]));
    }
}
