//! Constant-term expressions: truncated power series in `z_1..z_n` for the
//! Schur-sum kernels, the constant term itself, and the signed minor sum
//! it is equal to.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::exactmath::{binom, det_poly, Matrix, Monomial, SparsePoly, Var};
use crate::genfun::{GfRequest, WeightKind};
use crate::pfaffian::{complement, pfaffian, shuffle_sign, subsets, SkewMatrix};
use crate::structmat::build_skew;

/// Largest number of index subsets visited by [`d_sum`].
pub const MAX_SUBSETS: usize = 100_000;

fn z(i: usize) -> SparsePoly {
    SparsePoly::var(Var::Z(i as u16))
}

/// Dense power series in `z_1..z_n` with coefficients in the other
/// variables, keeping the exponents `0 <= e_i <= caps[i]`.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncSeries {
    caps: Vec<usize>,
    strides: Vec<usize>,
    coeffs: Vec<SparsePoly>,
}

impl TruncSeries {
    pub fn zero(caps: &[usize]) -> Self {
        let mut strides = vec![1; caps.len()];
        for i in (0..caps.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * (caps[i + 1] + 1);
        }
        let len = caps.iter().map(|c| c + 1).product();
        TruncSeries { caps: caps.to_vec(), strides, coeffs: vec![SparsePoly::zero(); len] }
    }

    pub fn one(caps: &[usize]) -> Self {
        let mut s = Self::zero(caps);
        s.coeffs[0] = SparsePoly::one();
        s
    }

    pub fn caps(&self) -> &[usize] {
        &self.caps
    }

    fn index(&self, e: &[usize]) -> Option<usize> {
        if e.len() != self.caps.len() || e.iter().zip(&self.caps).any(|(x, c)| x > c) {
            return None;
        }
        Some(e.iter().zip(&self.strides).map(|(x, s)| x * s).sum())
    }

    fn exponents(&self, mut idx: usize) -> Vec<usize> {
        self.strides
            .iter()
            .map(|s| {
                let e = idx / s;
                idx %= s;
                e
            })
            .collect()
    }

    /// Coefficient of `z^e`; zero outside the box.
    pub fn get(&self, e: &[usize]) -> SparsePoly {
        self.index(e).map(|i| self.coeffs[i].clone()).unwrap_or_default()
    }

    /// Index offset of `z^step` if `z^step` divides `z^e`.
    fn shifted(&self, idx: usize, step: &[usize]) -> Option<usize> {
        let e = self.exponents(idx);
        if e.iter().zip(step).any(|(x, s)| x < s) {
            return None;
        }
        Some(idx - step.iter().zip(&self.strides).map(|(s, st)| s * st).sum::<usize>())
    }

    /// Multiplies by `1 / (1 - w z^step)`.
    pub fn div_one_minus(&mut self, step: &[usize], w: &SparsePoly) {
        for idx in 0..self.coeffs.len() {
            if let Some(prev) = self.shifted(idx, step) {
                let add = &self.coeffs[prev] * w;
                self.coeffs[idx] += &add;
            }
        }
    }

    /// Multiplies by `1 + w z^step`.
    pub fn mul_one_plus(&mut self, step: &[usize], w: &SparsePoly) {
        for idx in (0..self.coeffs.len()).rev() {
            if let Some(prev) = self.shifted(idx, step) {
                let add = &self.coeffs[prev] * w;
                self.coeffs[idx] += &add;
            }
        }
    }

    /// Truncated product.
    pub fn mul(&self, other: &TruncSeries) -> Result<TruncSeries> {
        if self.caps != other.caps {
            return Err(Error::ShapeMismatch("series caps differ".into()));
        }
        let mut out = TruncSeries::zero(&self.caps);
        for (i, a) in self.coeffs.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            let ea = self.exponents(i);
            for (j, b) in other.coeffs.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let e: Vec<usize> = ea.iter().zip(other.exponents(j)).map(|(x, y)| x + y).collect();
                if let Some(k) = out.index(&e) {
                    out.coeffs[k] += &(a * b);
                }
            }
        }
        Ok(out)
    }

    /// Truncation of a polynomial in `z_1..z_n` (other variables go into
    /// the coefficients).
    pub fn from_poly(p: &SparsePoly, caps: &[usize]) -> TruncSeries {
        let mut out = TruncSeries::zero(caps);
        for (mono, c) in p.terms() {
            let (e, rest) = split_z(mono, caps.len());
            if let Some(k) = out.index(&e) {
                out.coeffs[k].add_term(rest, c);
            }
        }
        out
    }

    pub fn to_poly(&self) -> SparsePoly {
        let mut out = SparsePoly::zero();
        for (i, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let m = Monomial::from_pairs(self.exponents(i).into_iter().enumerate().map(|(k, e)| (Var::Z(k as u16 + 1), e as u32)));
            out += &c.mul_monomial(&m);
        }
        out
    }

    /// The part of total degree at most `d`.
    pub fn up_to_degree(&self, d: usize) -> TruncSeries {
        let mut out = self.clone();
        for (i, c) in out.coeffs.iter_mut().enumerate() {
            if self.exponents(i).iter().sum::<usize>() > d {
                *c = SparsePoly::zero();
            }
        }
        out
    }
}

/// Exponents of `z_1..z_n` and the remaining monomial.
fn split_z(mono: &Monomial, n: usize) -> (Vec<usize>, Monomial) {
    let e = (1..=n).map(|k| mono.exponent(Var::Z(k as u16)) as usize).collect();
    let rest = Monomial::from_pairs(mono.pairs().iter().copied().filter(|(v, _)| !matches!(v, Var::Z(_))));
    (e, rest)
}

/// Kernels `F_A` with a product or finite Schur-sum form. Every kernel
/// except `Bounded` carries the factor `prod_{i<j} 1/(1 - z_i z_j)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub enum FKind {
    /// `prod 1/(1 - z_i)`: all Schur functions.
    SBar,
    /// `prod 1/(1 - z_i^2)`: even partitions.
    RBar,
    /// Only the pair factor: partitions with even conjugate.
    CBar,
    /// `prod (1 + t z_i)/(1 - z_i^2)`: `t^{odd rows}`.
    RBarParam(SparsePoly),
    /// `prod 1/(1 - t z_i)`: `t^{odd columns}`.
    CBarParam(SparsePoly),
    /// `sum s_lambda` over `lambda_1 <= k`.
    Bounded(usize),
}

impl FKind {
    pub fn name(&self) -> String {
        match self {
            FKind::SBar => "Sbar".into(),
            FKind::RBar => "Rbar".into(),
            FKind::CBar => "Cbar".into(),
            FKind::RBarParam(t) => format!("Rbar({t})"),
            FKind::CBarParam(t) => format!("Cbar({t})"),
            FKind::Bounded(k) => format!("bounded({k})"),
        }
    }
}

/// The kernel truncated to the box `[0, caps_i]`.
pub fn f_a_series(kind: &FKind, caps: &[usize]) -> Result<TruncSeries> {
    let n = caps.len();
    if n == 0 {
        return Err(invalid("need at least one variable"));
    }
    if let FKind::Bounded(k) = kind {
        return Ok(bounded_schur_sum(*k, caps));
    }
    let mut f = TruncSeries::one(caps);
    let unit = |i: usize, e: usize| -> Vec<usize> { (0..n).map(|k| if k == i { e } else { 0 }).collect() };
    let one = SparsePoly::one();
    for i in 0..n {
        for j in i + 1..n {
            let step: Vec<usize> = (0..n).map(|k| (k == i || k == j) as usize).collect();
            f.div_one_minus(&step, &one);
        }
    }
    for i in 0..n {
        match kind {
            FKind::SBar => f.div_one_minus(&unit(i, 1), &one),
            FKind::RBar => f.div_one_minus(&unit(i, 2), &one),
            FKind::CBar => {}
            FKind::RBarParam(t) => {
                f.div_one_minus(&unit(i, 2), &one);
                f.mul_one_plus(&unit(i, 1), t);
            }
            FKind::CBarParam(t) => f.div_one_minus(&unit(i, 1), t),
            FKind::Bounded(_) => unreachable!(),
        }
    }
    Ok(f)
}

/// `sum_{lambda_1 <= k, l(lambda) <= n} s_lambda(z_1..z_n)` by summing over
/// Gelfand-Tsetlin patterns level by level.
fn bounded_schur_sum(k: usize, caps: &[usize]) -> TruncSeries {
    let n = caps.len();
    // state: top row of the pattern so far -> series in the first levels
    let mut states: BTreeMap<Vec<usize>, BTreeMap<Vec<usize>, BigInt>> = BTreeMap::new();
    states.insert(vec![], BTreeMap::from([(vec![], BigInt::from(1))]));
    for level in 1..=n {
        let mut next: BTreeMap<Vec<usize>, BTreeMap<Vec<usize>, BigInt>> = BTreeMap::new();
        for (nu, series) in &states {
            let nu_size: usize = nu.iter().sum();
            for mu in interlacing(nu, k) {
                let grow = mu.iter().sum::<usize>() - nu_size;
                if grow > caps[level - 1] {
                    continue;
                }
                let target = next.entry(mu).or_default();
                for (e, c) in series {
                    let mut e2 = e.clone();
                    e2.push(grow);
                    *target.entry(e2).or_default() += c;
                }
            }
        }
        states = next;
    }
    let mut out = TruncSeries::zero(caps);
    for series in states.values() {
        for (e, c) in series {
            if let Some(i) = out.index(e) {
                out.coeffs[i] += &SparsePoly::constant(c.clone());
            }
        }
    }
    out
}

/// Partitions `mu` with one more part than `nu` (zeros kept) interlacing it,
/// `k >= mu_1 >= nu_1 >= mu_2 >= ... >= nu_{l} >= mu_{l+1} >= 0`.
fn interlacing(nu: &[usize], k: usize) -> Vec<Vec<usize>> {
    let l = nu.len();
    let mut out = vec![vec![]];
    for j in 0..=l {
        let hi = if j == 0 { k } else { nu[j - 1] };
        let lo = if j < l { nu[j] } else { 0 };
        out = out
            .into_iter()
            .flat_map(|p: Vec<usize>| {
                (lo..=hi).map(move |v| {
                    let mut q = p.clone();
                    q.push(v);
                    q
                })
            })
            .collect();
    }
    out
}

/// Complete homogeneous symmetric polynomial `h_r(z_1..z_n)`.
pub fn complete_homogeneous(r: i64, n: usize) -> SparsePoly {
    if r < 0 {
        return SparsePoly::zero();
    }
    fn rec(var: usize, n: usize, left: u32, cur: &mut Vec<(Var, u32)>, out: &mut SparsePoly) {
        if var > n {
            if left == 0 {
                *out += &SparsePoly::term(1, Monomial::from_pairs(cur.iter().copied()));
            }
            return;
        }
        for e in 0..=left {
            if e > 0 {
                cur.push((Var::Z(var as u16), e));
            }
            rec(var + 1, n, left - e, cur, out);
            if e > 0 {
                cur.pop();
            }
        }
    }
    let mut out = SparsePoly::zero();
    rec(1, n, r as u32, &mut vec![], &mut out);
    out
}

/// `s_lambda(z_1..z_n) = det(h_{lambda_i - i + j})`.
pub fn schur_jacobi_trudi(lambda: &[usize], n: usize) -> Result<SparsePoly> {
    let l = lambda.len();
    if l == 0 {
        return Ok(SparsePoly::one());
    }
    if lambda.iter().filter(|&&p| p > 0).count() > n {
        return Ok(SparsePoly::zero());
    }
    let m = Matrix::from_fn(l, l, |i, j| complete_homogeneous(lambda[i] as i64 - i as i64 + j as i64, n));
    det_poly(&m)
}

/// The bounded kernel at `n = 2` as the ratio
/// `det(z_i^{j-1} - z_i^{k+4-j}) / ((1-z_1)(1-z_2)(z_2-z_1)(1-z_1 z_2))`:
/// the division by `z_2 - z_1` is exact, the rest is a series product.
pub fn bounded_ratio_two(k: usize, caps: &[usize]) -> Result<TruncSeries> {
    if caps.len() != 2 {
        return Err(invalid("the ratio form is implemented for two variables"));
    }
    let p = |i: usize, e: usize| z(i).pow(e as u32);
    let num = Matrix::from_fn(2, 2, |i, j| &p(i + 1, j) - &p(i + 1, k + 3 - j));
    let num = det_poly(&num)?;
    let quotient = num.div_linear(Var::Z(2), &z(1))?;
    let mut s = TruncSeries::from_poly(&quotient, caps);
    let one = SparsePoly::one();
    s.div_one_minus(&[1, 0], &one);
    s.div_one_minus(&[0, 1], &one);
    s.div_one_minus(&[1, 1], &one);
    Ok(s)
}

/// `z^p h^{(m)}_i(1/z, t, u)` with `p = m + i`.
fn reversed_h(p: usize, zk: &SparsePoly, t: &SparsePoly, u: &SparsePoly) -> SparsePoly {
    match p {
        0 => SparsePoly::one(),
        1 => zk + &(t * u),
        _ => &(&(zk + &SparsePoly::one()).pow(p as u32 - 2) * &(zk + t)) * &(zk + u),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CtRequest {
    pub n: usize,
    pub m: usize,
    pub kernel: FKind,
    pub t: SparsePoly,
    pub u: SparsePoly,
}

impl CtRequest {
    /// The constant-term form of a weight kind, where one exists.
    pub fn for_kind(kind: WeightKind, n: usize, m: usize) -> Result<CtRequest> {
        let t = SparsePoly::var(Var::T);
        let u = SparsePoly::var(Var::U);
        let one = SparsePoly::one();
        let (kernel, tt, uu) = match kind {
            WeightKind::Count => (FKind::SBar, one.clone(), one),
            WeightKind::Refined => (FKind::SBar, t, one),
            WeightKind::DoublyRefined => (FKind::SBar, t, u),
            WeightKind::DoublyRefinedColsEven => (FKind::RBar, t, u),
            WeightKind::RefinedVC => (FKind::RBarParam(u), t, one),
            WeightKind::ColsEven => (FKind::RBar, t, one),
            WeightKind::RowsEven => (FKind::CBar, t, one),
            WeightKind::VC => (FKind::RBarParam(t), one.clone(), one),
            WeightKind::VR => (FKind::CBarParam(t), one.clone(), one),
            WeightKind::Mt(k) => (FKind::Bounded(k), t, one),
            _ => return Err(invalid(format!("no constant-term form for {kind}"))),
        };
        if n == 0 {
            return Err(invalid("n must be positive"));
        }
        Ok(CtRequest { n, m, kernel, t: tt, u: uu })
    }

    /// `s_k = (n - k) + (m + n - k)`: the largest power of `1/z_k` in the
    /// prefactor.
    pub fn shifts(&self) -> Vec<usize> {
        (1..=self.n).map(|k| 2 * (self.n - k) + self.m).collect()
    }

    /// `prod z_k^{s_k}` times the prefactor, a polynomial.
    pub fn shifted_prefactor(&self) -> SparsePoly {
        let n = self.n;
        let mut p = SparsePoly::one();
        for i in 1..=n {
            for j in i + 1..=n {
                p = &p * &(&z(i) - &z(j));
            }
        }
        for k in 1..=n {
            p = &p * &reversed_h(self.m + n - k, &z(k), &self.t, &self.u);
        }
        p
    }
}

/// Default cap `2n + m`.
pub fn constant_term(req: &CtRequest) -> Result<SparsePoly> {
    constant_term_with_cap(req, 2 * req.n + req.m)
}

/// The constant term using series truncated at `cap` in every variable.
pub fn constant_term_with_cap(req: &CtRequest, cap: usize) -> Result<SparsePoly> {
    let s = req.shifts();
    if s.iter().any(|&x| x > cap) {
        return Err(invalid(format!("cap {cap} is below the needed {}", s[0])));
    }
    let f = f_a_series(&req.kernel, &vec![cap; req.n])?;
    Ok(pair_with_kernel(&req.shifted_prefactor(), &s, &f))
}

/// `sum_q P_q F_{s-q}`: the coefficient of `z^s` in `P F`.
fn pair_with_kernel(p: &SparsePoly, s: &[usize], f: &TruncSeries) -> SparsePoly {
    let mut out = SparsePoly::zero();
    for (mono, c) in p.terms() {
        let (q, rest) = split_z(mono, s.len());
        if q.iter().zip(s).any(|(a, b)| a > b) {
            continue;
        }
        let e: Vec<usize> = s.iter().zip(&q).map(|(a, b)| a - b).collect();
        let fe = f.get(&e);
        if !fe.is_zero() {
            out += &(&SparsePoly::term(c.clone(), rest) * &fe);
        }
    }
    out
}

/// `sum_I (-1)^{s(I', I)} Pf(A on I') det(B on columns I)` over the
/// `n`-subsets `I` of the columns, `I'` the complement.
pub fn d_sum(b: &Matrix, a: &SkewMatrix) -> Result<SparsePoly> {
    let (n, cols) = (b.rows(), b.cols());
    if a.size() != cols {
        return Err(Error::ShapeMismatch(format!("B has {cols} columns, A has size {}", a.size())));
    }
    if binom(cols as i64, n as i64) > BigInt::from(MAX_SUBSETS) {
        return Err(Error::SizeGuard(format!("too many {n}-subsets of {cols} columns")));
    }
    let rows: Vec<usize> = (0..n).collect();
    let mut total = SparsePoly::zero();
    for idx in subsets(cols, n) {
        let pf = pfaffian(&a.restrict(&complement(&idx, cols)));
        if pf.is_zero() {
            continue;
        }
        let sel: Vec<usize> = idx.iter().map(|i| i - 1).collect();
        let term = &pf * &det_poly(&b.select(&rows, &sel))?;
        if shuffle_sign(&idx, cols)? < 0 {
            total -= &term;
        } else {
            total += &term;
        }
    }
    Ok(total)
}

/// The signed minor sum for a weight kind; for `Mt(k)` the `eps`
/// coefficient at `eps^{floor(k/2)}`, after checking the lower ones vanish.
pub fn d_sum_for(req: &GfRequest) -> Result<SparsePoly> {
    let b = req.kind.b_matrix(req.n, req.m, req.big_n)?;
    let a = build_skew(&req.kind.a_kind(req.n), req.n + req.big_n)?;
    let d = d_sum(&b, &a)?;
    if let WeightKind::Mt(k) = req.kind {
        let low = (k / 2) as u32;
        for j in 0..low {
            if !d.coeff_of(Var::Eps, j).is_zero() {
                return Err(Error::IdentityViolation(format!("minor sum has a nonzero eps^{j} term")));
            }
        }
        return Ok(d.coeff_of(Var::Eps, low));
    }
    Ok(d)
}

/// Sum of all maximal minors of the `n x (2n+m-1)` matrix `binom(m+i, j-i)`.
pub fn zeilberger_minor_sum(n: usize, m: usize) -> Result<BigInt> {
    if n == 0 {
        return Err(invalid("n must be positive"));
    }
    let cols = 2 * n + m - 1;
    let x = Matrix::from_fn(n, cols, |i, j| SparsePoly::constant(binom((m + i) as i64, j as i64 - i as i64)));
    let rows: Vec<usize> = (0..n).collect();
    let mut total = SparsePoly::zero();
    for idx in subsets(cols, n) {
        let sel: Vec<usize> = idx.iter().map(|i| i - 1).collect();
        total += &det_poly(&x.select(&rows, &sel))?;
    }
    total.constant_value().ok_or_else(|| Error::NonIntegral("minor sum is not a constant".into()))
}

/// The constant term with the prefactor `prod_{i<j}(1 - z_j/z_i)`, the
/// factors `(1 + 1/z_i)^{m+n-i}` and the kernel
/// `prod 1/(1 - z_i) prod_{i<j} 1/(1 - z_i z_j)`.
pub fn zeilberger_constant_term(n: usize, m: usize) -> Result<BigInt> {
    let req = CtRequest::for_kind(WeightKind::Count, n, m)?;
    constant_term(&req)?.constant_value().ok_or_else(|| Error::NonIntegral("constant term is not a constant".into()))
}

/// The same constant term with the products taken literally over
/// `i <= j`: `prod_{i<=j}(1 - z_i/z_j)` and `prod_{i<=j} 1/(1 - z_i z_j)`.
/// The diagonal factor `1 - z_i/z_i` vanishes.
pub fn zeilberger_constant_term_diagonal(n: usize, m: usize) -> Result<BigInt> {
    if n == 0 {
        return Err(invalid("n must be positive"));
    }
    // multiplied through by z_j^{j} and z_i^{m+n-i}
    let mut p = SparsePoly::one();
    for i in 1..=n {
        for j in i..=n {
            p = &p * &(&z(j) - &z(i));
        }
        p = &p * &(&z(i) + &SparsePoly::one()).pow((m + n - i) as u32);
    }
    let s: Vec<usize> = (1..=n).map(|k| k + m + n - k).collect();
    let caps: Vec<usize> = s.clone();
    let mut f = TruncSeries::one(&caps);
    let one = SparsePoly::one();
    for i in 0..n {
        for j in i..n {
            let step: Vec<usize> = (0..n).map(|k| (k == i) as usize + (k == j) as usize).collect();
            f.div_one_minus(&step, &one);
        }
        let unit: Vec<usize> = (0..n).map(|k| (k == i) as usize).collect();
        f.div_one_minus(&unit, &one);
    }
    pair_with_kernel(&p, &s, &f)
        .constant_value()
        .ok_or_else(|| Error::NonIntegral("constant term is not a constant".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::poly;
    use crate::genfun::{brute_side, gf_pfaffian};
    use crate::refnum::card_cspp;
    use crate::structmat::partition;

    #[test]
    fn geometric_series() {
        let f = f_a_series(&FKind::SBar, &[5]).unwrap();
        for e in 0..=5 {
            assert_eq!(f.get(&[e]), SparsePoly::one());
        }
        assert_eq!(f_a_series(&FKind::Bounded(0), &[3, 3]).unwrap(), TruncSeries::one(&[3, 3]));
    }

    #[test]
    fn sbar_two_variables() {
        // coefficient of z1 z2: s_(1,1) and s_(2) both contribute
        let f = f_a_series(&FKind::SBar, &[4, 4]).unwrap();
        assert_eq!(f.get(&[1, 1]), SparsePoly::constant(2));
        assert_eq!(f.get(&[2, 2]), SparsePoly::constant(3));
    }

    #[test]
    fn kernels_are_schur_sums() {
        for n in 1..=3 {
            let caps = vec![4; n];
            let boxes = partition::in_box(n, 4);
            let sum = |keep: &dyn Fn(&[usize]) -> bool, weight: &dyn Fn(&[usize]) -> SparsePoly| -> SparsePoly {
                boxes
                    .iter()
                    .filter(|l| partition::size(l) <= 4 && keep(l))
                    .map(|l| &schur_jacobi_trudi(l, n).unwrap() * &weight(l))
                    .sum()
            };
            let one = |_: &[usize]| SparsePoly::one();
            let all = |_: &[usize]| true;
            let cut = |k: &FKind| f_a_series(k, &caps).unwrap().up_to_degree(4).to_poly();
            let t = SparsePoly::var(Var::T);
            assert_eq!(cut(&FKind::SBar), sum(&all, &one), "n={n}");
            assert_eq!(cut(&FKind::RBar), sum(&|l| l.iter().all(|p| p % 2 == 0), &one));
            assert_eq!(cut(&FKind::CBar), sum(&|l| partition::conjugate(l).iter().all(|p| p % 2 == 0), &one));
            assert_eq!(cut(&FKind::RBarParam(t.clone())), sum(&all, &|l| t.pow(partition::odd_rows(l) as u32)));
            assert_eq!(cut(&FKind::CBarParam(t.clone())), sum(&all, &|l| t.pow(partition::odd_cols(l) as u32)));
            for k in 0..=3 {
                assert_eq!(cut(&FKind::Bounded(k)), sum(&|l| l.first().copied().unwrap_or(0) <= k, &one), "k={k}");
            }
        }
    }

    #[test]
    fn bounded_ratio_at_two() {
        for k in 0..=4 {
            let caps = [7, 7];
            assert_eq!(bounded_ratio_two(k, &caps).unwrap(), f_a_series(&FKind::Bounded(k), &caps).unwrap(), "k={k}");
        }
    }

    #[test]
    fn small_constant_terms() {
        let r = CtRequest::for_kind(WeightKind::Refined, 1, 0).unwrap();
        assert_eq!(constant_term(&r).unwrap(), SparsePoly::one());
        let r = CtRequest::for_kind(WeightKind::Refined, 3, 0).unwrap();
        assert_eq!(constant_term(&r).unwrap(), poly("2 + 3*t + 2*t^2"));
        let r = CtRequest::for_kind(WeightKind::Mt(1), 3, 0).unwrap();
        assert_eq!(constant_term(&r).unwrap(), poly("2 + 2*t + t^2"));
        assert!(CtRequest::for_kind(WeightKind::Neg1, 3, 0).is_err());
    }

    #[test]
    fn constant_terms_match_both_sides() {
        for (n, m) in [(1, 1), (2, 0), (2, 1), (3, 0), (1, 2)] {
            let mut kinds: Vec<WeightKind> = WeightKind::ALL.iter().filter(|k| !k.is_signed() && !matches!(k, WeightKind::Mt(_))).copied().collect();
            kinds.extend((0..n + m).map(WeightKind::Mt));
            for kind in kinds {
                let Ok(req) = GfRequest::new(kind, n, m) else { continue };
                let ct = constant_term(&CtRequest::for_kind(kind, n, m).unwrap()).unwrap();
                let r = *kind.r_values(n, m).last().unwrap();
                assert_eq!(ct, brute_side(kind, n, m, r).unwrap(), "{kind} n={n} m={m}");
                assert_eq!(ct, gf_pfaffian(&req).unwrap(), "{kind} n={n} m={m}");
                assert_eq!(ct, d_sum_for(&req).unwrap(), "{kind} n={n} m={m}");
            }
        }
    }

    #[test]
    fn doubling_the_cap_changes_nothing() {
        for kind in [WeightKind::DoublyRefined, WeightKind::VR, WeightKind::Mt(2)] {
            let req = CtRequest::for_kind(kind, 3, 1).unwrap();
            assert_eq!(constant_term(&req).unwrap(), constant_term_with_cap(&req, 2 * (7)).unwrap());
        }
        let req = CtRequest::for_kind(WeightKind::Count, 3, 0).unwrap();
        assert!(constant_term_with_cap(&req, 3).is_err());
    }

    #[test]
    fn zeilberger_identity() {
        for n in 1..=3 {
            for m in 0..=2 {
                let card = card_cspp(n, m);
                assert_eq!(zeilberger_minor_sum(n, m).unwrap(), card);
                assert_eq!(zeilberger_constant_term(n, m).unwrap(), card);
                assert_eq!(zeilberger_constant_term_diagonal(n, m).unwrap(), BigInt::from(0));
            }
        }
    }

    #[test]
    fn d_sum_small() {
        let req = GfRequest::new(WeightKind::Count, 1, 0).unwrap();
        assert_eq!(d_sum_for(&req).unwrap(), SparsePoly::one());
    }
}
