//! Generating functions of column-strict plane partitions as block
//! Pfaffians, the lattice-path determinant for a fixed shape, and the
//! direct enumeration they are compared with.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::exactmath::{det_poly, elementary_symmetric, Matrix, SparsePoly, Var};
use crate::pfaffian::{complement, pfaffian, SkewMatrix};
use crate::ppart::{brute_gf, enumerate_cspp, subset_filter, Cspp, Statistic, SubsetFilter, WeightSpec};
use crate::structmat::{block_matrix, build_b, build_m_matrix, build_skew, index_set_of_partition, partition, BMode, MKind, SkewKind};

/// Largest `n + m` accepted by the multivariate version.
pub const MAX_GENERAL_NM: usize = 6;

/// The weighted enumerations with a block Pfaffian expression.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum WeightKind {
    /// Plain count.
    Count,
    /// `t^{Ubar_r}`.
    Refined,
    /// `t^{Ubar_1} u^{Ubar_r}`, `r >= 2`.
    DoublyRefined,
    /// `t^{Ubar_1} u^{Ubar_r}` over column-even partitions.
    DoublyRefinedColsEven,
    /// `t^{Ubar_r} u^{V^C}`.
    RefinedVC,
    /// `t^{Ubar_r}` over column-even partitions.
    ColsEven,
    /// `t^{Ubar_r}` over row-even partitions.
    RowsEven,
    /// `t^{V^C}`.
    VC,
    /// `t^{V^R}`.
    VR,
    /// `(-1)^{|c|}`.
    Neg1,
    /// `(-1)^{|c|} t^{Ubar_1}`.
    Neg1U1,
    /// `(-1)^{|c|} t^{Ubar_{n+m}}`.
    Neg1USat,
    /// `(-1)^{|c|} t^{V^C}`.
    Neg1VC,
    /// `t^{Ubar_r}` over partitions with at most `k` rows.
    Mt(usize),
}

impl WeightKind {
    /// Every kind, with `Mt` at `k = 1` standing for the family.
    pub const ALL: [WeightKind; 14] = [
        WeightKind::Count,
        WeightKind::Refined,
        WeightKind::DoublyRefined,
        WeightKind::DoublyRefinedColsEven,
        WeightKind::RefinedVC,
        WeightKind::ColsEven,
        WeightKind::RowsEven,
        WeightKind::VC,
        WeightKind::VR,
        WeightKind::Neg1,
        WeightKind::Neg1U1,
        WeightKind::Neg1USat,
        WeightKind::Neg1VC,
        WeightKind::Mt(1),
    ];

    pub fn filter(&self) -> SubsetFilter {
        match self {
            WeightKind::DoublyRefinedColsEven | WeightKind::ColsEven => SubsetFilter::ColsEven,
            WeightKind::RowsEven => SubsetFilter::RowsEven,
            WeightKind::Mt(k) => SubsetFilter::AtMostRows(*k),
            _ => SubsetFilter::All,
        }
    }

    /// The values of `r` for which the kind is stated. Kinds without a
    /// free `r` return `[0]`.
    pub fn r_values(&self, n: usize, m: usize) -> Vec<usize> {
        match self {
            WeightKind::Refined | WeightKind::ColsEven | WeightKind::RowsEven | WeightKind::RefinedVC | WeightKind::Mt(_) => {
                (1..=n + m).collect()
            }
            WeightKind::DoublyRefined | WeightKind::DoublyRefinedColsEven => (2..=n + m).collect(),
            _ => vec![0],
        }
    }

    /// The weight `t^..., u^...` as a product of statistic powers.
    pub fn weight(&self, n: usize, m: usize, r: usize) -> Result<WeightSpec> {
        let w = WeightSpec::new();
        let needs_r = self.r_values(n, m);
        if needs_r != [0] && !needs_r.contains(&r) {
            return Err(invalid(format!("r = {r} is outside the range allowed for {self}")));
        }
        Ok(match self {
            WeightKind::Count => w,
            WeightKind::Refined | WeightKind::ColsEven | WeightKind::RowsEven | WeightKind::Mt(_) => {
                w.var(Statistic::UBar(r), Var::T)?
            }
            WeightKind::DoublyRefined | WeightKind::DoublyRefinedColsEven => {
                w.var(Statistic::UBar(1), Var::T)?.var(Statistic::UBar(r), Var::U)?
            }
            WeightKind::RefinedVC => w.var(Statistic::UBar(r), Var::T)?.var(Statistic::VC, Var::U)?,
            WeightKind::VC => w.var(Statistic::VC, Var::T)?,
            WeightKind::VR => w.var(Statistic::VR, Var::T)?,
            WeightKind::Neg1 => w.sign(Statistic::Size),
            WeightKind::Neg1U1 => w.sign(Statistic::Size).var(Statistic::UBar(1), Var::T)?,
            WeightKind::Neg1USat => w.sign(Statistic::Size).var(Statistic::UBar(n + m), Var::T)?,
            WeightKind::Neg1VC => w.sign(Statistic::Size).var(Statistic::VC, Var::T)?,
        })
    }

    /// The `n x (n+N)` matrix placed in the upper right block.
    pub fn b_matrix(&self, n: usize, m: usize, big_n: usize) -> Result<Matrix> {
        let t = SparsePoly::var(Var::T);
        let u = SparsePoly::var(Var::U);
        match self {
            WeightKind::Count | WeightKind::VC | WeightKind::VR => build_b(n, m, big_n, &BMode::Plain),
            WeightKind::Refined | WeightKind::ColsEven | WeightKind::RowsEven | WeightKind::RefinedVC | WeightKind::Mt(_) => {
                build_b(n, m, big_n, &BMode::Refined(t))
            }
            WeightKind::DoublyRefined | WeightKind::DoublyRefinedColsEven => {
                build_b(n, m, big_n, &BMode::DoublyRefined(t, u))
            }
            WeightKind::Neg1 | WeightKind::Neg1VC => build_m_matrix(n, m, big_n, &MKind::Neg1),
            WeightKind::Neg1U1 => build_m_matrix(n, m, big_n, &MKind::Neg1U1(t)),
            WeightKind::Neg1USat => build_m_matrix(n, m, big_n, &MKind::Neg1USat(t)),
        }
    }

    /// The skew matrix placed in the lower right block.
    pub fn a_kind(&self, n: usize) -> SkewKind {
        let t = SparsePoly::var(Var::T);
        let u = SparsePoly::var(Var::U);
        match self {
            WeightKind::Count
            | WeightKind::Refined
            | WeightKind::DoublyRefined
            | WeightKind::Neg1
            | WeightKind::Neg1U1
            | WeightKind::Neg1USat => SkewKind::SBar,
            WeightKind::DoublyRefinedColsEven | WeightKind::ColsEven => SkewKind::RBar(SparsePoly::zero()),
            WeightKind::RowsEven => SkewKind::CBar(SparsePoly::zero()),
            WeightKind::RefinedVC => SkewKind::RBar(u),
            WeightKind::VC | WeightKind::Neg1VC => SkewKind::RBar(t),
            WeightKind::VR => SkewKind::CBar(t),
            WeightKind::Mt(k) => SkewKind::LBar { m: n, k: *k, eps: SparsePoly::var(Var::Eps) },
        }
    }

    /// Whether the signed weight makes the result depend on `r`.
    pub fn is_signed(&self) -> bool {
        matches!(self, WeightKind::Neg1 | WeightKind::Neg1U1 | WeightKind::Neg1USat | WeightKind::Neg1VC)
    }
}

impl fmt::Display for WeightKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightKind::Count => f.write_str("count"),
            WeightKind::Refined => f.write_str("refined"),
            WeightKind::DoublyRefined => f.write_str("doubly-refined"),
            WeightKind::DoublyRefinedColsEven => f.write_str("doubly-refined-cols-even"),
            WeightKind::RefinedVC => f.write_str("refined-vc"),
            WeightKind::ColsEven => f.write_str("cols-even"),
            WeightKind::RowsEven => f.write_str("rows-even"),
            WeightKind::VC => f.write_str("vc"),
            WeightKind::VR => f.write_str("vr"),
            WeightKind::Neg1 => f.write_str("neg1"),
            WeightKind::Neg1U1 => f.write_str("neg1-u1"),
            WeightKind::Neg1USat => f.write_str("neg1-usat"),
            WeightKind::Neg1VC => f.write_str("neg1-vc"),
            WeightKind::Mt(k) => write!(f, "mt:{k}"),
        }
    }
}

impl FromStr for WeightKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        if let Some(k) = s.strip_prefix("mt:") {
            let k = k.parse().map_err(|_| Error::Parse(format!("bad k in '{s}'")))?;
            return Ok(WeightKind::Mt(k));
        }
        WeightKind::ALL
            .iter()
            .find(|w| !matches!(w, WeightKind::Mt(_)) && w.to_string() == s)
            .copied()
            .ok_or_else(|| Error::Parse(format!("unknown weight kind '{s}'")))
    }
}

/// Smallest even `N >= n + m - 1`.
pub fn default_big_n(n: usize, m: usize) -> usize {
    let lo = (n + m).saturating_sub(1);
    lo + lo % 2
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GfRequest {
    pub kind: WeightKind,
    pub n: usize,
    pub m: usize,
    pub big_n: usize,
}

impl GfRequest {
    pub fn new(kind: WeightKind, n: usize, m: usize) -> Result<Self> {
        Self::with_big_n(kind, n, m, default_big_n(n, m))
    }

    pub fn with_big_n(kind: WeightKind, n: usize, m: usize, big_n: usize) -> Result<Self> {
        if n == 0 {
            return Err(invalid("n must be positive"));
        }
        if big_n % 2 == 1 || big_n + 1 < n + m {
            return Err(invalid(format!("N must be even and at least n+m-1, got N = {big_n}")));
        }
        match kind {
            WeightKind::DoublyRefined | WeightKind::DoublyRefinedColsEven if n + m < 2 => {
                return Err(invalid("the doubly refined weight needs n + m >= 2"));
            }
            WeightKind::Mt(k) if k + 1 > n + m => {
                return Err(invalid(format!("k = {k} must be at most n+m-1")));
            }
            _ => {}
        }
        Ok(GfRequest { kind, n, m, big_n })
    }

    /// `[[O, J B], [-B^t J, A]]`.
    pub fn block(&self) -> Result<SkewMatrix> {
        let b = self.kind.b_matrix(self.n, self.m, self.big_n)?;
        let a = build_skew(&self.kind.a_kind(self.n), self.n + self.big_n)?;
        block_matrix(&b, &a)
    }
}

/// Direct weighted sum over the filtered `CSPP(n, m)` with `Ubar_r`.
pub fn brute_side(kind: WeightKind, n: usize, m: usize, r: usize) -> Result<SparsePoly> {
    let all = enumerate_cspp(n, m)?;
    brute_side_on(&all, kind, n, m, r)
}

/// As [`brute_side`] on an already enumerated `CSPP(n, m)`.
pub fn brute_side_on(all: &[Cspp], kind: WeightKind, n: usize, m: usize, r: usize) -> Result<SparsePoly> {
    let objects = subset_filter(all, kind.filter())?;
    brute_gf(&objects, &kind.weight(n, m, r)?)
}

/// The block Pfaffian for the request; for `Mt(k)` the limit in `eps`.
pub fn gf_pfaffian(req: &GfRequest) -> Result<SparsePoly> {
    if let WeightKind::Mt(k) = req.kind {
        return Ok(gf_mt(req.n, req.m, req.big_n, k, MtVariant::Limit)?.value);
    }
    Ok(pfaffian(&req.block()?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum MtVariant {
    /// `eps^{-floor(k/2)}` times the `Lbar(eps)` Pfaffian at `eps = 0`.
    Limit,
    /// The Pfaffian with the truncated `B` matrix and `Sbar`.
    Truncated,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MtPfaffian {
    /// The Pfaffian before the limit, a polynomial in `t` and `eps`.
    /// Equal to `value` for the truncated variant.
    pub pre_limit: SparsePoly,
    pub value: SparsePoly,
}

/// The generating function of partitions with at most `k` rows by `t^{Ubar_r}`.
pub fn gf_mt(n: usize, m: usize, big_n: usize, k: usize, variant: MtVariant) -> Result<MtPfaffian> {
    let req = GfRequest::with_big_n(WeightKind::Mt(k), n, m, big_n)?;
    match variant {
        MtVariant::Limit => {
            let pre = pfaffian(&req.block()?);
            let low = (k / 2) as u32;
            for j in 0..low {
                let c = pre.coeff_of(Var::Eps, j);
                if !c.is_zero() {
                    return Err(Error::IdentityViolation(format!(
                        "coefficient of eps^{j} is {c}, expected 0 below eps^{low}"
                    )));
                }
            }
            let value = pre.coeff_of(Var::Eps, low);
            Ok(MtPfaffian { pre_limit: pre, value })
        }
        MtVariant::Truncated => {
            let b = build_b(n, m, big_n, &BMode::Truncated { k, t: SparsePoly::var(Var::T) })?;
            let a = build_skew(&SkewKind::SBar, n + big_n)?;
            let value = pfaffian(&block_matrix(&b, &a)?);
            Ok(MtPfaffian { pre_limit: value.clone(), value })
        }
    }
}

/// `T_p = t_p t_{p+1} ... t_{len}` for 1-based `p`.
fn tails(t: &[SparsePoly]) -> Vec<SparsePoly> {
    let mut out = vec![SparsePoly::one(); t.len() + 2];
    for p in (1..=t.len()).rev() {
        out[p] = &out[p + 1] * &t[p - 1];
    }
    out
}

fn check_weights(n: usize, m: usize, t: &[SparsePoly], x: &[SparsePoly]) -> Result<()> {
    if n == 0 {
        return Err(invalid("n must be positive"));
    }
    if t.len() != n + m || x.len() != n + m {
        return Err(Error::ShapeMismatch(format!("weights need length n+m = {}", n + m)));
    }
    Ok(())
}

/// Generating function of `CSPP(n, m)` of shape `lambda'` by
/// `prod t_i^{Ubar_i} x_i^{mu_i}`, as the determinant of elementary
/// symmetric functions `e^{(L-i)}_{lambda_j - j + i}` with `L = n + m`.
pub fn lattice_determinant(lambda: &[usize], n: usize, m: usize, t: &[SparsePoly], x: &[SparsePoly]) -> Result<SparsePoly> {
    check_weights(n, m, t, x)?;
    if lambda.iter().filter(|&&p| p > 0).count() > n {
        return Err(invalid(format!("{lambda:?} has more than {n} parts")));
    }
    let len = n + m;
    let tl = tails(t);
    let part = |j: usize| lambda.get(j - 1).copied().unwrap_or(0) as i64;
    let mat = Matrix::from_fn(n, n, |i0, j0| {
        let (i, j) = (i0 + 1, j0 + 1);
        let vars = len - i;
        let args: Vec<SparsePoly> = (1..=vars)
            .map(|q| if q < vars { &t[q - 1] * &x[q - 1] } else { &tl[q] * &x[q - 1] })
            .collect();
        elementary_symmetric(part(j) - j as i64 + i as i64, &args)
    });
    det_poly(&mat)
}

/// `prod t_i^{Ubar_i(c)} x_i^{mu_i(c)}`.
pub fn general_weight(c: &Cspp, t: &[SparsePoly], x: &[SparsePoly]) -> SparsePoly {
    let mut w = SparsePoly::one();
    for i in 1..=t.len() {
        w = &w * &t[i - 1].pow(c.ubar(i));
        w = &w * &x[i - 1].pow(c.multiplicity(i as u32));
    }
    w
}

/// The block Pfaffian with the general weight matrix and an arbitrary `A`.
pub fn gf_general(n: usize, m: usize, big_n: usize, a: &SkewMatrix, t: &[SparsePoly], x: &[SparsePoly]) -> Result<SparsePoly> {
    check_weights(n, m, t, x)?;
    if n + m > MAX_GENERAL_NM {
        return Err(Error::SizeGuard(format!("n + m = {} exceeds {MAX_GENERAL_NM}", n + m)));
    }
    if a.size() != n + big_n {
        return Err(Error::ShapeMismatch(format!("A has size {} but n+N = {}", a.size(), n + big_n)));
    }
    let b = build_b(n, m, big_n, &BMode::General { t: t.to_vec(), x: x.to_vec() })?;
    Ok(pfaffian(&block_matrix(&b, a)?))
}

/// The left side of the general identity:
/// `sum_c (-1)^{|lambda|} Pf(A on the complement of I_n(lambda)) t^{Ubar} x^c`
/// with `lambda` the conjugate of the shape of `c`.
pub fn general_brute(n: usize, m: usize, big_n: usize, a: &SkewMatrix, t: &[SparsePoly], x: &[SparsePoly]) -> Result<SparsePoly> {
    check_weights(n, m, t, x)?;
    if a.size() != n + big_n {
        return Err(Error::ShapeMismatch(format!("A has size {} but n+N = {}", a.size(), n + big_n)));
    }
    let mut total = SparsePoly::zero();
    for c in enumerate_cspp(n, m)? {
        let lambda = partition::conjugate(&c.shape());
        let idx = index_set_of_partition(&lambda, n)?;
        if idx.iter().any(|&i| i > n + big_n) {
            return Err(invalid(format!("N = {big_n} is too small for the shape of {c}")));
        }
        let pf = pfaffian(&a.restrict(&complement(&idx, n + big_n)));
        if pf.is_zero() {
            continue;
        }
        let term = &pf * &general_weight(&c, t, x);
        if partition::size(&lambda) % 2 == 1 {
            total -= &term;
        } else {
            total += &term;
        }
    }
    Ok(total)
}

/// Indexed weight variables `t_1..t_len`, `x_1..x_len`.
pub fn indexed_weights(len: usize) -> (Vec<SparsePoly>, Vec<SparsePoly>) {
    let t = (1..=len).map(|i| SparsePoly::var(Var::W(i as u16))).collect();
    let x = (1..=len).map(|i| SparsePoly::var(Var::X(i as u16))).collect();
    (t, x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::poly;

    fn ones(k: usize) -> Vec<SparsePoly> {
        vec![SparsePoly::one(); k]
    }

    #[test]
    fn default_n_is_even() {
        assert_eq!(default_big_n(3, 0), 2);
        assert_eq!(default_big_n(2, 2), 4);
        assert_eq!(default_big_n(1, 0), 0);
        assert_eq!(default_big_n(1, 1), 2);
    }

    #[test]
    fn lattice_determinant_small() {
        assert_eq!(lattice_determinant(&[], 3, 0, &ones(3), &ones(3)).unwrap(), SparsePoly::one());
        assert_eq!(lattice_determinant(&[1], 3, 0, &ones(3), &ones(3)).unwrap(), SparsePoly::constant(2));
        let total: SparsePoly = partition::in_box(3, 2)
            .iter()
            .map(|l| lattice_determinant(l, 3, 0, &ones(3), &ones(3)).unwrap())
            .sum();
        assert_eq!(total, SparsePoly::constant(7));
    }

    #[test]
    fn lattice_determinant_matches_shapes() {
        for (n, m) in [(2, 1), (3, 0), (2, 2), (1, 3)] {
            let (t, x) = indexed_weights(n + m);
            let all = enumerate_cspp(n, m).unwrap();
            for lambda in partition::in_box(n, n + m - 1) {
                let direct: SparsePoly = all
                    .iter()
                    .filter(|c| partition::conjugate(&c.shape()) == lambda)
                    .map(|c| general_weight(c, &t, &x))
                    .sum();
                assert_eq!(lattice_determinant(&lambda, n, m, &t, &x).unwrap(), direct, "{lambda:?} n={n} m={m}");
            }
        }
    }

    #[test]
    fn printed_witnesses() {
        let r = GfRequest::new(WeightKind::Refined, 3, 0).unwrap();
        assert_eq!(gf_pfaffian(&r).unwrap(), poly("2 + 3*t + 2*t^2"));
        let r = GfRequest::new(WeightKind::RowsEven, 3, 0).unwrap();
        assert_eq!(gf_pfaffian(&r).unwrap(), poly("1 + t + t^2"));
        let mt = gf_mt(3, 0, 4, 1, MtVariant::Limit).unwrap();
        assert_eq!(mt.pre_limit, poly("2 + 2*t + t^2 + t*eps + t^2*eps"));
        assert_eq!(mt.value, poly("2 + 2*t + t^2"));
        assert_eq!(gf_mt(3, 0, 2, 1, MtVariant::Truncated).unwrap().value, mt.value);
        assert_eq!(gf_mt(3, 0, 2, 0, MtVariant::Limit).unwrap().value, SparsePoly::one());
    }

    #[test]
    fn every_kind_matches_enumeration() {
        for (n, m) in [(1, 0), (1, 1), (2, 0), (2, 1), (3, 0), (1, 2)] {
            let all = enumerate_cspp(n, m).unwrap();
            let mut kinds: Vec<WeightKind> = WeightKind::ALL.iter().filter(|k| !matches!(k, WeightKind::Mt(_))).copied().collect();
            kinds.extend((0..n + m).map(WeightKind::Mt));
            for kind in kinds {
                let Ok(req) = GfRequest::new(kind, n, m) else { continue };
                let pf = gf_pfaffian(&req).unwrap();
                for r in kind.r_values(n, m) {
                    assert_eq!(brute_side_on(&all, kind, n, m, r).unwrap(), pf, "{kind} n={n} m={m} r={r}");
                }
            }
        }
    }

    #[test]
    fn general_identity_with_indexed_weights() {
        let (n, m, big_n) = (2, 1, 2);
        let (t, x) = indexed_weights(n + m);
        let a = build_skew(&SkewKind::RBar(SparsePoly::var(Var::S)), n + big_n).unwrap();
        assert_eq!(gf_general(n, m, big_n, &a, &t, &x).unwrap(), general_brute(n, m, big_n, &a, &t, &x).unwrap());
        let sbar = build_skew(&SkewKind::SBar, n + big_n).unwrap();
        assert_eq!(gf_general(n, m, big_n, &sbar, &ones(3), &ones(3)).unwrap(), SparsePoly::constant(enumerate_cspp(2, 1).unwrap().len() as i64));
    }

    #[test]
    fn kind_names_round_trip() {
        for k in WeightKind::ALL.iter().chain([WeightKind::Mt(3)].iter()) {
            assert_eq!(k.to_string().parse::<WeightKind>().unwrap(), *k);
        }
        assert!("nope".parse::<WeightKind>().is_err());
    }

    #[test]
    fn rejects_bad_requests() {
        assert!(GfRequest::with_big_n(WeightKind::Refined, 3, 0, 3).is_err());
        assert!(GfRequest::with_big_n(WeightKind::Refined, 3, 1, 2).is_err());
        assert!(GfRequest::new(WeightKind::Mt(3), 3, 0).is_err());
        assert!(GfRequest::new(WeightKind::DoublyRefined, 1, 0).is_err());
    }
}
