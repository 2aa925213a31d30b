use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactmath::{SparsePoly, Var};

pub const MAX_MT: usize = 7;

/// A monotone triangle of size `n`: `rows[i - 1]` holds `m_{i,i}, ..., m_{i,n}`,
/// the first row is `1, ..., n`, rows strictly increase, and
/// `m_{i-1,j-1} <= m_{i,j} <= m_{i-1,j}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct MonotoneTriangle {
    pub n: usize,
    pub rows: Vec<Vec<u32>>,
}

impl MonotoneTriangle {
    pub fn new(n: usize, rows: Vec<Vec<u32>>) -> Result<Self> {
        let t = MonotoneTriangle { n, rows };
        t.validate()?;
        Ok(t)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidObject(msg));
        let n = self.n;
        if self.rows.len() != n || (1..=n).any(|i| self.rows[i - 1].len() != n + 1 - i) {
            return bad(format!("a triangle of size {n} needs rows of lengths {n}, ..., 1"));
        }
        if (1..=n).any(|j| self.get(1, j) != j as u32) {
            return bad("first row must be 1, ..., n".into());
        }
        for i in 2..=n {
            for j in i..=n {
                let v = self.get(i, j);
                if v < self.get(i - 1, j - 1) || v > self.get(i - 1, j) {
                    return bad(format!("m_{i}{j} = {v} breaks interlacing"));
                }
                if j > i && self.get(i, j - 1) >= v {
                    return bad(format!("row {i} is not strictly increasing"));
                }
            }
        }
        Ok(())
    }

    /// `m_{ij}`, 1-based, `i <= j`.
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.rows[i - 1][j - i]
    }

    /// The apex `m_{n,n}`.
    pub fn top(&self) -> u32 {
        self.get(self.n, self.n)
    }

    /// Member of `MT^k`: every entry in the first `n - k` columns equals its
    /// minimum `j - i + 1`.
    pub fn in_k(&self, k: usize) -> bool {
        let n = self.n;
        k >= n || (1..=n - k).all(|j| (1..=j).all(|i| self.get(i, j) == (j - i + 1) as u32))
    }

    /// Member of `MT^{k,x,y}`: `x + 1` entries of column `n - k + 1` at their
    /// minimum `n - k - i + 2` and `y + 1` entries of column `n` equal to `n`.
    /// For `k = 0` there is no column `n + 1` and only `x = 0` is allowed.
    pub fn in_kxy(&self, k: usize, x: usize, y: usize) -> bool {
        let n = self.n;
        if k >= n || !self.in_k(k) {
            return false;
        }
        let last = (1..=n).filter(|&i| self.get(i, n) == n as u32).count();
        if last != y + 1 {
            return false;
        }
        if k == 0 {
            return x == 0;
        }
        let col = n - k + 1;
        let at_min = (1..=col).filter(|&i| self.get(i, col) == (col + 1 - i) as u32).count();
        at_min == x + 1
    }
}

impl fmt::Display for MonotoneTriangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        f.write_str(&rows.join(" / "))
    }
}

/// All of `MT_n`, in lexicographic order of the rows read from the first
/// row `1, ..., n` upward.
pub fn enumerate_mt(n: usize) -> Result<Vec<MonotoneTriangle>> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    if n > MAX_MT {
        return Err(Error::SizeGuard(format!("monotone triangles of size {n} exceed {MAX_MT}")));
    }
    let mut rows = vec![(1..=n as u32).collect::<Vec<u32>>()];
    let mut out = Vec::new();
    next_row(n, &mut rows, &mut out);
    Ok(out)
}

fn next_row(n: usize, rows: &mut Vec<Vec<u32>>, out: &mut Vec<MonotoneTriangle>) {
    if rows.len() == n {
        out.push(MonotoneTriangle { n, rows: rows.clone() });
        return;
    }
    let prev = rows.last().unwrap().clone();
    let mut cur = Vec::with_capacity(prev.len() - 1);
    fill_row(n, &prev, &mut cur, rows, out);
}

fn fill_row(n: usize, prev: &[u32], cur: &mut Vec<u32>, rows: &mut Vec<Vec<u32>>, out: &mut Vec<MonotoneTriangle>) {
    let k = cur.len();
    if k + 1 == prev.len() {
        rows.push(cur.clone());
        next_row(n, rows, out);
        rows.pop();
        return;
    }
    let lo = match cur.last() {
        Some(&l) => prev[k].max(l + 1),
        None => prev[k],
    };
    for v in lo..=prev[k + 1] {
        cur.push(v);
        fill_row(n, prev, cur, rows, out);
        cur.pop();
    }
}

pub fn mt_subset(all: &[MonotoneTriangle], k: usize) -> Vec<MonotoneTriangle> {
    all.iter().filter(|t| t.in_k(k)).cloned().collect()
}

pub fn mt_subset_kxy(all: &[MonotoneTriangle], k: usize, x: usize, y: usize) -> Vec<MonotoneTriangle> {
    all.iter().filter(|t| t.in_kxy(k, x, y)).cloned().collect()
}

/// `M_n^k(t)`: the sum over `MT_n^k` of `t^(m_{n,n} - 1)`.
pub fn mt_polynomial(n: usize, k: usize) -> Result<SparsePoly> {
    if k >= n {
        return Err(Error::InvalidParameter(format!("k = {k} must be below n = {n}")));
    }
    let all = enumerate_mt(n)?;
    Ok(all
        .iter()
        .filter(|t| t.in_k(k))
        .map(|t| SparsePoly::var_pow(Var::T, t.top() - 1))
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mt3_listed_order() {
        let shown: Vec<String> = enumerate_mt(3).unwrap().iter().map(|t| t.to_string()).collect();
        assert_eq!(
            shown,
            vec![
                "1 2 3 / 1 2 / 1",
                "1 2 3 / 1 2 / 2",
                "1 2 3 / 1 3 / 1",
                "1 2 3 / 1 3 / 2",
                "1 2 3 / 1 3 / 3",
                "1 2 3 / 2 3 / 2",
                "1 2 3 / 2 3 / 3",
            ]
        );
    }

    #[test]
    fn m3k_polynomials() {
        assert_eq!(mt_polynomial(3, 0).unwrap().to_string(), "1");
        assert_eq!(mt_polynomial(3, 1).unwrap().to_string(), "2 + 2*t + t^2");
        assert_eq!(mt_polynomial(3, 2).unwrap().to_string(), "2 + 3*t + 2*t^2");
    }

    #[test]
    fn mt3_kxy_cardinalities() {
        let all = enumerate_mt(3).unwrap();
        let mut nonzero = Vec::new();
        for k in 0..3 {
            for x in 0..4 {
                for y in 0..4 {
                    let c = mt_subset_kxy(&all, k, x, y).len();
                    if c > 0 {
                        nonzero.push((k, x, y, c));
                    }
                }
            }
        }
        let expected = vec![
            (0, 0, 0, 1),
            (1, 0, 1, 1),
            (1, 0, 2, 1),
            (1, 1, 0, 1),
            (1, 1, 1, 1),
            (1, 2, 0, 1),
            (2, 0, 1, 1),
            (2, 0, 2, 1),
            (2, 1, 0, 2),
            (2, 1, 1, 2),
            (2, 1, 2, 1),
        ];
        assert_eq!(nonzero, expected);
    }

    #[test]
    fn validation() {
        assert!(MonotoneTriangle::new(2, vec![vec![1, 2], vec![3]]).is_err());
        assert!(MonotoneTriangle::new(2, vec![vec![1, 2], vec![2]]).is_ok());
    }
}
