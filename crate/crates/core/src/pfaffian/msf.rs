use serde::Serialize;

use super::{complement, pfaffian, shuffle_sign, subsets, SkewMatrix};
use crate::error::{Error, Result};
use crate::exactmath::{det_poly, Matrix, SparsePoly};

#[derive(Clone, Debug, Serialize)]
pub struct QFormReport {
    /// `"even"` for the plain sum of principal sub-Pfaffians, `"odd"` for the
    /// bordered form.
    pub form: &'static str,
    pub lhs: SparsePoly,
    pub rhs: SparsePoly,
    pub matched: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct MsfReport {
    pub lhs: SparsePoly,
    /// `Pf[[O, J T], [-T^t J, B]]`
    pub rhs: SparsePoly,
    /// `Pf[[O, T J], [-J T^t, J B^t J]]`
    pub rhs_alt: SparsePoly,
    pub matched: bool,
    pub qform: QFormReport,
}

impl MsfReport {
    pub fn all_match(&self) -> bool {
        self.matched && self.qform.matched
    }
}

fn columns(t: &Matrix, idx1: &[usize]) -> Matrix {
    let rows: Vec<usize> = (0..t.rows()).collect();
    let cols: Vec<usize> = idx1.iter().map(|&i| i - 1).collect();
    t.select(&rows, &cols)
}

/// Checks the minor summation formula for an `m x n` matrix `T` and an
/// `n x n` skew matrix `B` with `n - m` even, together with the quadratic
/// form identity matching the parity of `m` (bordered by a row of ones when
/// `m` is odd).
pub fn minor_summation_check(t: &Matrix, b: &SkewMatrix) -> Result<MsfReport> {
    let (m, n) = (t.rows(), t.cols());
    if b.size() != n {
        return Err(Error::ShapeMismatch(format!("T is {m}x{n} but B has size {}", b.size())));
    }
    if m > n || (n - m) % 2 == 1 {
        return Err(Error::InvalidParameter(format!("need m <= n and n - m even, got m={m}, n={n}")));
    }
    let mut lhs = SparsePoly::zero();
    for idx in subsets(n, m) {
        let comp = complement(&idx, n);
        let pf = pfaffian(&b.restrict(&comp));
        if pf.is_zero() {
            continue;
        }
        let d = det_poly(&columns(t, &idx))?;
        let s = shuffle_sign(&idx, n)?;
        let term = &pf * &d;
        if s < 0 {
            lhs -= &term;
        } else {
            lhs += &term;
        }
    }
    let jm = Matrix::anti_identity(m);
    let jn = Matrix::anti_identity(n);
    let jt = jm.mul(t)?;
    let big = Matrix::block(&Matrix::zeros(m, m), &jt, &jt.transpose().neg(), b.matrix())?;
    let rhs = pfaffian(&SkewMatrix::new(big)?);
    let tj = t.mul(&jn)?;
    let jbj = jn.mul(&b.matrix().transpose())?.mul(&jn)?;
    let big2 = Matrix::block(&Matrix::zeros(m, m), &tj, &tj.transpose().neg(), &jbj)?;
    let rhs_alt = pfaffian(&SkewMatrix::new(big2)?);
    let matched = lhs == rhs && rhs == rhs_alt;
    let qform = if m % 2 == 0 {
        let (l, r) = msf_even(t, b)?;
        QFormReport { form: "even", matched: l == r, lhs: l, rhs: r }
    } else {
        let border = vec![SparsePoly::one(); n];
        let (l, r) = msf_odd(t, &border, b)?;
        QFormReport { form: "odd", matched: l == r, lhs: l, rhs: r }
    };
    Ok(MsfReport { lhs, rhs, rhs_alt, matched, qform })
}

/// `(sum_I Pf(A_I) det(T_I), Pf(T A T^t))` for `|I| = m` even.
pub fn msf_even(t: &Matrix, a: &SkewMatrix) -> Result<(SparsePoly, SparsePoly)> {
    let (m, n) = (t.rows(), t.cols());
    if m % 2 == 1 || a.size() != n {
        return Err(Error::InvalidParameter("even form needs m even and A of size n".into()));
    }
    let mut lhs = SparsePoly::zero();
    for idx in subsets(n, m) {
        let pf = pfaffian(&a.restrict(&idx));
        if !pf.is_zero() {
            lhs += &(&pf * &det_poly(&columns(t, &idx))?);
        }
    }
    let q = t.mul(a.matrix())?.mul(&t.transpose())?;
    Ok((lhs, pfaffian(&SkewMatrix::new(q)?)))
}

/// Bordered form for `m` odd: with `A0` the matrix `A` bordered by the row
/// `border` in position 0, returns
/// `(sum_I Pf(A0 on {0} + I) det(T_I), Pf(Q))` where `Q` is `T A T^t`
/// bordered by `T border`.
pub fn msf_odd(t: &Matrix, border: &[SparsePoly], a: &SkewMatrix) -> Result<(SparsePoly, SparsePoly)> {
    let (m, n) = (t.rows(), t.cols());
    if m % 2 == 0 || a.size() != n || border.len() != n {
        return Err(Error::InvalidParameter("odd form needs m odd, A of size n and a border of length n".into()));
    }
    let a0 = SkewMatrix::from_upper(n + 1, |i, j| {
        if i == 0 {
            border[j - 1].clone()
        } else {
            a.get(i - 1, j - 1).clone()
        }
    });
    let mut lhs = SparsePoly::zero();
    for idx in subsets(n, m) {
        let mut with0 = vec![1usize];
        with0.extend(idx.iter().map(|&i| i + 1));
        let pf = pfaffian(&a0.restrict(&with0));
        if !pf.is_zero() {
            lhs += &(&pf * &det_poly(&columns(t, &idx))?);
        }
    }
    let tat = t.mul(a.matrix())?.mul(&t.transpose())?;
    let tb: Vec<SparsePoly> = (0..m)
        .map(|j| (0..n).map(|k| &border[k] * t.get(j, k)).sum())
        .collect();
    let q = SkewMatrix::from_upper(m + 1, |i, j| {
        if i == 0 {
            tb[j - 1].clone()
        } else {
            tat.get(i - 1, j - 1).clone()
        }
    });
    Ok((lhs, pfaffian(&q)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::Var;

    #[test]
    fn square_t_reduces_to_determinant() {
        let t = Matrix::from_ints(&[vec![2, 1], vec![1, 3]]).unwrap();
        let b = SkewMatrix::from_upper(2, |_, _| SparsePoly::constant(4));
        let r = minor_summation_check(&t, &b).unwrap();
        assert_eq!(r.lhs, SparsePoly::constant(5));
        assert!(r.all_match());
    }

    #[test]
    fn symbolic_two_by_four() {
        let t = Matrix::from_fn(2, 4, |i, j| SparsePoly::var(Var::X((4 * i + j + 1) as u16)));
        let b = SkewMatrix::from_upper(4, |i, j| SparsePoly::constant((i + 2 * j) as i64 - 3));
        let r = minor_summation_check(&t, &b).unwrap();
        assert!(r.matched, "{} vs {}", r.lhs, r.rhs);
        assert!(r.qform.matched);
    }

    #[test]
    fn odd_bordered_form() {
        let t = Matrix::from_ints(&[vec![1, 2, 0, -1, 3], vec![0, 1, 1, 2, -2], vec![4, 0, 1, 1, 1]]).unwrap();
        let b = SkewMatrix::from_upper(5, |i, j| SparsePoly::constant(((i * 7 + j * 3) % 5) as i64 - 2));
        let r = minor_summation_check(&t, &b).unwrap();
        assert_eq!(r.qform.form, "odd");
        assert!(r.all_match());
    }

    #[test]
    fn parity_precondition() {
        let t = Matrix::zeros(1, 4);
        let b = SkewMatrix::from_upper(4, |_, _| SparsePoly::one());
        assert!(minor_summation_check(&t, &b).is_err());
    }
}
