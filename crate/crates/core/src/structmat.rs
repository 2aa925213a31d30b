//! The structured matrices: the skew families `S, R(t), C(t)` and their
//! barred companions, the bounded families `L, Lbar`, the weight matrices
//! `B` in plain, refined, doubly refined, general and truncated form, the
//! `(-1)`-specialisations `M`, and the block matrix fed to the Pfaffian.

use crate::error::{invalid, Error, Result};
use crate::exactmath::{binom, elementary_symmetric, qbinom_neg1, sign, Matrix, SparsePoly};
use crate::pfaffian::SkewMatrix;

#[derive(Clone, Debug, PartialEq)]
pub enum SkewKind {
    /// All ones above the diagonal.
    S,
    /// `(-1)^{j-i-1}`.
    SBar,
    /// `t^{(i-1 mod 2) + (j mod 2)}`.
    R(SparsePoly),
    /// `t^{j-i-1}`.
    C(SparsePoly),
    /// `(-1)^{j-i-1} t^{j-i-1}`.
    RBar(SparsePoly),
    /// `(-1)^{j-i-1} t^{(n+1-i mod 2) + (n-j mod 2)}`.
    CBar(SparsePoly),
    /// `1` for `j <= m+k`, `eps` beyond.
    L { m: usize, k: usize, eps: SparsePoly },
    /// Signed companion of `L`.
    LBar { m: usize, k: usize, eps: SparsePoly },
}

impl SkewKind {
    pub fn name(&self) -> &'static str {
        match self {
            SkewKind::S => "S",
            SkewKind::SBar => "Sbar",
            SkewKind::R(_) => "R",
            SkewKind::C(_) => "C",
            SkewKind::RBar(_) => "Rbar",
            SkewKind::CBar(_) => "Cbar",
            SkewKind::L { .. } => "L",
            SkewKind::LBar { .. } => "Lbar",
        }
    }
}

fn signed(s: i64, p: SparsePoly) -> SparsePoly {
    if s < 0 {
        -p
    } else {
        p
    }
}

/// Builds the `n x n` skew matrix of the given kind. Parameters are
/// polynomials, so `R(0)` gives the unparametrised `R` with `0^0 = 1`.
pub fn build_skew(kind: &SkewKind, n: usize) -> Result<SkewMatrix> {
    if let SkewKind::L { m, k, .. } | SkewKind::LBar { m, k, .. } = kind {
        if m + k > n {
            return Err(invalid(format!("need m + k <= n, got m={m}, k={k}, n={n}")));
        }
    }
    let ni = n as i64;
    Ok(SkewMatrix::from_upper(n, |i0, j0| {
        let (i, j) = (i0 as i64 + 1, j0 as i64 + 1);
        let s = sign(j - i - 1);
        match kind {
            SkewKind::S => SparsePoly::one(),
            SkewKind::SBar => SparsePoly::constant(s),
            SkewKind::R(t) => t.pow(((i - 1).rem_euclid(2) + j.rem_euclid(2)) as u32),
            SkewKind::C(t) => t.pow((j - i - 1) as u32),
            SkewKind::RBar(t) => signed(s, t.pow((j - i - 1) as u32)),
            SkewKind::CBar(t) => signed(s, t.pow(((ni + 1 - i).rem_euclid(2) + (ni - j).rem_euclid(2)) as u32)),
            SkewKind::L { m, k, eps } => {
                if j <= (m + k) as i64 {
                    SparsePoly::one()
                } else {
                    eps.clone()
                }
            }
            SkewKind::LBar { m, k, eps } => {
                let mk = (m + k) as i64;
                let small = if k % 2 == 0 { i <= mk } else { j <= mk };
                signed(s, if small { eps.clone() } else { SparsePoly::one() })
            }
        }
    }))
}

#[derive(Clone, Debug, PartialEq)]
pub enum BMode {
    /// `binom(i+m, j-i)`.
    Plain,
    /// Refined by the number of ones, parameter `t`.
    Refined(SparsePoly),
    /// Doubly refined, parameters `t, u`.
    DoublyRefined(SparsePoly, SparsePoly),
    /// Elementary symmetric functions of the weights `t_i x_i`, the last
    /// one replaced by the tail product `T_{i+m} x_{i+m}`. Both vectors
    /// have length `n + m`.
    General { t: Vec<SparsePoly>, x: Vec<SparsePoly> },
    /// Refined, with columns `j >= n + k` set to zero.
    Truncated { k: usize, t: SparsePoly },
}

fn check_n(n: usize, m: usize, big_n: usize) -> Result<()> {
    if n == 0 {
        return Err(invalid("n must be positive"));
    }
    if big_n + 1 < n + m {
        return Err(invalid(format!("need N >= n+m-1, got N={big_n}, n={n}, m={m}")));
    }
    Ok(())
}

/// The `n x (n+N)` weight matrix (0-based rows `i` and columns `j`).
pub fn build_b(n: usize, m: usize, big_n: usize, mode: &BMode) -> Result<Matrix> {
    check_n(n, m, big_n)?;
    let b = |a: i64, r: i64| SparsePoly::constant(binom(a, r));
    match mode {
        BMode::Plain => Ok(Matrix::from_fn(n, n + big_n, |i, j| {
            b((i + m) as i64, j as i64 - i as i64)
        })),
        BMode::Refined(t) => Ok(Matrix::from_fn(n, n + big_n, |i, j| refined_entry(i, j, m, t))),
        BMode::DoublyRefined(t, u) => Ok(Matrix::from_fn(n, n + big_n, |i, j| {
            let p = (i + m) as i64;
            let r = j as i64 - i as i64;
            match p {
                0 => SparsePoly::constant((j == 0) as i64),
                1 => &b(0, r) + &(&b(0, r - 1) * &(t * u)),
                _ => &(&b(p - 2, r) + &(&b(p - 2, r - 1) * &(t + u))) + &(&b(p - 2, r - 2) * &(t * u)),
            }
        })),
        BMode::General { t, x } => {
            if t.len() != n + m || x.len() != n + m {
                return Err(Error::ShapeMismatch(format!("weights need length n+m = {}", n + m)));
            }
            // tails[p] = t_p t_{p+1} ... t_{n+m}, 1-based p
            let mut tails = vec![SparsePoly::one(); n + m + 2];
            for p in (1..=n + m).rev() {
                tails[p] = &tails[p + 1] * &t[p - 1];
            }
            let args: Vec<Vec<SparsePoly>> = (0..n)
                .map(|i| {
                    let p = i + m;
                    (1..=p)
                        .map(|q| if q < p { &t[q - 1] * &x[q - 1] } else { &tails[p] * &x[p - 1] })
                        .collect()
                })
                .collect();
            Ok(Matrix::from_fn(n, n + big_n, |i, j| {
                elementary_symmetric(j as i64 - i as i64, &args[i])
            }))
        }
        BMode::Truncated { k, t } => {
            if *k + 1 > n + m {
                return Err(invalid(format!("truncation needs k <= n+m-1, got k={k}")));
            }
            Ok(Matrix::from_fn(n, n + big_n, |i, j| {
                if j >= n + k {
                    SparsePoly::zero()
                } else {
                    refined_entry(i, j, m, t)
                }
            }))
        }
    }
}

fn refined_entry(i: usize, j: usize, m: usize, t: &SparsePoly) -> SparsePoly {
    let p = (i + m) as i64;
    let r = j as i64 - i as i64;
    if p == 0 {
        return SparsePoly::constant((j == 0) as i64);
    }
    &SparsePoly::constant(binom(p - 1, r)) + &(t * &SparsePoly::constant(binom(p - 1, r - 1)))
}

#[derive(Clone, Debug, PartialEq)]
pub enum MKind {
    /// Weight `(-1)^{|c|}`.
    Neg1,
    /// Weight `(-1)^{|c|} t^{Ubar_1}`.
    Neg1U1(SparsePoly),
    /// Weight `(-1)^{|c|} t^{Ubar_{n+m}}`.
    Neg1USat(SparsePoly),
}

/// The `B` matrix specialised at `x_i = (-1)^i`, in closed form through
/// Gaussian binomials at `q = -1`.
pub fn build_m_matrix(n: usize, m: usize, big_n: usize, kind: &MKind) -> Result<Matrix> {
    check_n(n, m, big_n)?;
    let qb = |a: i64, r: i64| SparsePoly::constant(qbinom_neg1(a, r));
    Ok(Matrix::from_fn(n, n + big_n, |i, j| {
        let p = (i + m) as i64;
        let r = j as i64 - i as i64;
        let s = sign(r * (r + 1) / 2);
        if p == 0 {
            return SparsePoly::constant((j == 0) as i64);
        }
        let inner = match kind {
            MKind::Neg1 => qb(p, r),
            MKind::Neg1U1(t) => &signed(sign(r), qb(p - 1, r)) + &(t * &qb(p - 1, r - 1)),
            MKind::Neg1USat(t) => &qb(p - 1, r) + &signed(sign(p - r), t * &qb(p - 1, r - 1)),
        };
        signed(s, inner)
    }))
}

/// `[[O_n, J_n B], [-B^t J_n, A]]`.
pub fn block_matrix(b: &Matrix, a: &SkewMatrix) -> Result<SkewMatrix> {
    let n = b.rows();
    if a.size() != b.cols() {
        return Err(Error::ShapeMismatch(format!(
            "B has {} columns but A has size {}",
            b.cols(),
            a.size()
        )));
    }
    let jb = Matrix::anti_identity(n).mul(b)?;
    let m = Matrix::block(&Matrix::zeros(n, n), &jb, &jb.transpose().neg(), a.matrix())?;
    SkewMatrix::new(m)
}

/// `I_m(lambda) = {lambda_m + 1, lambda_{m-1} + 2, ..., lambda_1 + m}`.
pub fn index_set_of_partition(lambda: &[usize], m: usize) -> Result<Vec<usize>> {
    if lambda.len() > m && lambda[m..].iter().any(|&x| x > 0) {
        return Err(invalid(format!("partition {lambda:?} has more than {m} parts")));
    }
    if lambda.windows(2).any(|w| w[0] < w[1]) {
        return Err(invalid(format!("{lambda:?} is not a partition")));
    }
    let part = |k: usize| lambda.get(k).copied().unwrap_or(0);
    Ok((1..=m).map(|k| part(m - k) + k).collect())
}

/// The congruence used to pass from the refined block matrix with
/// `Rbar(u)` at parameter `m` to the doubly refined block matrix with
/// `Rbar` at `m + 1`: returns `(P M P^t, target)`.
pub fn doubly_refined_transform(n: usize, m: usize, big_n: usize, t: &SparsePoly, u: &SparsePoly) -> Result<(Matrix, Matrix)> {
    let b = build_b(n, m, big_n, &BMode::Refined(t.clone()))?;
    let a = build_skew(&SkewKind::RBar(u.clone()), n + big_n)?;
    let start = block_matrix(&b, &a)?;
    let size = 2 * n + big_n;
    // column j (0-based) receives c_j times column j-1
    let mut p = Matrix::identity(size);
    for j in n + 1..size {
        let c = if j == n + 1 {
            if m == 0 {
                t * u
            } else {
                u.clone()
            }
        } else {
            u.clone()
        };
        p.set(j, j - 1, c);
    }
    let moved = p.mul(start.matrix())?.mul(&p.transpose())?;
    let b2 = build_b(n, m + 1, big_n, &BMode::DoublyRefined(t.clone(), u.clone()))?;
    let a2 = build_skew(&SkewKind::RBar(SparsePoly::zero()), n + big_n)?;
    let target = block_matrix(&b2, &a2)?.into_matrix();
    Ok((moved, target))
}

/// Partition helpers. Partitions are weakly decreasing vectors of positive
/// parts.
pub mod partition {
    pub fn size(lambda: &[usize]) -> usize {
        lambda.iter().sum()
    }

    pub fn conjugate(lambda: &[usize]) -> Vec<usize> {
        let first = lambda.first().copied().unwrap_or(0);
        (1..=first).map(|k| lambda.iter().filter(|&&p| p >= k).count()).collect()
    }

    /// Number of rows of odd length.
    pub fn odd_rows(lambda: &[usize]) -> usize {
        lambda.iter().filter(|&&p| p % 2 == 1).count()
    }

    /// Number of columns of odd length.
    pub fn odd_cols(lambda: &[usize]) -> usize {
        odd_rows(&conjugate(lambda))
    }

    /// Partitions with at most `rows` parts, each at most `cols`.
    pub fn in_box(rows: usize, cols: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(rows: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            out.push(cur.clone());
            if cur.len() == rows {
                return;
            }
            for p in 1..=max {
                cur.push(p);
                rec(rows, p, cur, out);
                cur.pop();
            }
        }
        rec(rows, cols, &mut cur, &mut out);
        out
    }
}
