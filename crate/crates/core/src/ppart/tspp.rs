use std::fmt;

use serde::Serialize;

use super::cspp::{check_guard, Cspp};
use crate::error::{Error, Result};

/// A triangular shifted plane partition in `TSPP(n, m)`: entries `b_{ij}`
/// for `1 <= i <= j <= n + m - 1` with `max(n - i, 0) <= b_{ij} <= n`,
/// weakly decreasing along rows and columns.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Tspp {
    pub n: usize,
    pub m: usize,
    /// `rows[i - 1]` holds `b_{i,i}, ..., b_{i,n+m-1}`.
    pub rows: Vec<Vec<u32>>,
}

impl Tspp {
    pub fn new(n: usize, m: usize, rows: Vec<Vec<u32>>) -> Result<Self> {
        let b = Tspp { n, m, rows };
        b.validate()?;
        Ok(b)
    }

    fn side(&self) -> usize {
        (self.n + self.m).saturating_sub(1)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidObject(msg));
        let s = self.side();
        if self.rows.len() != s {
            return bad(format!("expected {s} rows, got {}", self.rows.len()));
        }
        for i in 1..=s {
            if self.rows[i - 1].len() != s + 1 - i {
                return bad(format!("row {i} must have {} entries", s + 1 - i));
            }
            for j in i..=s {
                let v = self.get(i, j);
                let lo = self.n as i64 - i as i64;
                if v > self.n as i64 || v < lo.max(0) {
                    return bad(format!("b_{i}{j} = {v} out of range"));
                }
                if j > i && self.get(i, j - 1) < v {
                    return bad(format!("row {i} increases at column {j}"));
                }
                if i > 1 && self.get(i - 1, j) < v {
                    return bad(format!("column {j} increases at row {i}"));
                }
            }
        }
        Ok(())
    }

    /// `b_{ij}` with the boundary values `b_{0,j} = n` and
    /// `b_{i,n+m} = n - i`.
    pub fn get(&self, i: usize, j: usize) -> i64 {
        let h = self.n + self.m;
        if i == 0 {
            return self.n as i64;
        }
        if j == h {
            return self.n as i64 - i as i64;
        }
        self.rows[i - 1][j - i] as i64
    }

    /// `U_r(b)` for `1 <= r <= n + m`.
    pub fn u(&self, r: usize) -> Result<u32> {
        let h = self.n + self.m;
        if r == 0 || r > h {
            return Err(Error::InvalidParameter(format!("r = {r} outside [1, {h}]")));
        }
        let mut total: i64 = 0;
        for t in 1..=h - r {
            total += self.get(t, t + r - 1) - self.get(t, t + r);
        }
        for t in (h - r + 1).max(1)..h {
            if self.get(t, h - 1) > self.n as i64 - t as i64 {
                total += 1;
            }
        }
        Ok(total as u32)
    }

    /// `Ubar_r = n + m - 1 - U_r`.
    pub fn ubar(&self, r: usize) -> Result<u32> {
        Ok((self.side() as u32).saturating_sub(self.u(r)?))
    }

    /// Member of `TSPP^k`: the first `n + m - 1 - k` columns are all `n`.
    pub fn in_k(&self, k: usize) -> bool {
        let s = self.side();
        if k > s {
            return true;
        }
        (1..=s - k).all(|j| (1..=j).all(|i| self.get(i, j) == self.n as i64))
    }

    /// Member of `TSPP^{k,x,y}`: `x` entries of column `n + m - k` equal `n`
    /// and `y` entries of column `n + m - 1` equal `max(n - i, 0)`.
    pub fn in_kxy(&self, k: usize, x: usize, y: usize) -> bool {
        let h = self.n + self.m;
        if !self.in_k(k) || k >= h {
            return false;
        }
        let col = h - k;
        let rows = col.min(h - 1);
        let at_max = (1..=rows).filter(|&i| self.get(i, col) == self.n as i64).count();
        let s = self.side();
        let at_min = (1..=s)
            .filter(|&i| self.get(i, s) == (self.n as i64 - i as i64).max(0))
            .count();
        at_max == x && at_min == y
    }

    fn word(&self) -> Vec<u32> {
        self.rows.iter().flatten().copied().collect()
    }
}

impl fmt::Display for Tspp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return f.write_str("()");
        }
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        f.write_str(&rows.join(" / "))
    }
}

/// All of `TSPP(n, m)` in decreasing lexicographic order of the row-reading
/// word.
pub fn enumerate_tspp(n: usize, m: usize) -> Result<Vec<Tspp>> {
    check_guard(n, m)?;
    let s = n + m - 1;
    let cells: Vec<(usize, usize)> = (1..=s).flat_map(|i| (i..=s).map(move |j| (i, j))).collect();
    let mut grid = vec![vec![0u32; s + 1]; s + 1];
    let mut out = Vec::new();
    fill(n, m, &cells, 0, &mut grid, &mut out);
    out.sort_by_key(|b| std::cmp::Reverse(b.word()));
    Ok(out)
}

fn fill(n: usize, m: usize, cells: &[(usize, usize)], pos: usize, grid: &mut Vec<Vec<u32>>, out: &mut Vec<Tspp>) {
    if pos == cells.len() {
        let s = n + m - 1;
        let rows = (1..=s).map(|i| grid[i][i..=s].to_vec()).collect();
        out.push(Tspp { n, m, rows });
        return;
    }
    let (i, j) = cells[pos];
    let lo = n.saturating_sub(i) as u32;
    let mut hi = n as u32;
    if j > i {
        hi = hi.min(grid[i][j - 1]);
    }
    if i > 1 {
        hi = hi.min(grid[i - 1][j]);
    }
    for v in lo..=hi {
        grid[i][j] = v;
        fill(n, m, cells, pos + 1, grid, out);
    }
}

/// `n - b_{ij}` is the number of parts `>= 1 - i + j` in row `n + m - j`
/// of `c`.
pub fn cspp_to_tspp(c: &Cspp) -> Result<Tspp> {
    c.validate()?;
    let (n, m) = (c.n, c.m);
    let s = n + m - 1;
    let rows = (1..=s)
        .map(|i| {
            (i..=s)
                .map(|j| {
                    let k = (1 + j - i) as u32;
                    let row = n + m - j;
                    let border = (1..=n).filter(|&l| c.get(row, l) >= k).count();
                    (n - border) as u32
                })
                .collect()
        })
        .collect();
    Tspp::new(n, m, rows)
}

/// Inverse of [`cspp_to_tspp`]: `(x, y, z)` lies in `c` iff
/// `b_{n+m+1-x-z, n+m-x} <= n - y`.
pub fn tspp_to_cspp(b: &Tspp) -> Result<Cspp> {
    b.validate()?;
    let (n, m) = (b.n, b.m);
    let h = n + m;
    let inside = |x: usize, y: usize, z: usize| b.get(h + 1 - x - z, h - x) <= n as i64 - y as i64;
    let mut rows = Vec::new();
    for x in 1..h {
        let mut row = Vec::new();
        for y in 1..=n {
            let top = (1..=h - x).take_while(|&z| inside(x, y, z)).count();
            if (top + 1..=h - x).any(|z| inside(x, y, z)) {
                return Err(Error::InvalidObject(format!("cell ({x},{y}) is not an order ideal")));
            }
            if top > 0 {
                row.push(top as u32);
            }
        }
        if row.is_empty() {
            break;
        }
        rows.push(row);
    }
    Cspp::new(n, m, rows)
}
