use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Upper limit on `n + m` for materialising a whole class.
pub const MAX_NM: usize = 9;
/// Upper limit on the number of objects materialised at once.
pub const MAX_OBJECTS: u64 = 5_000_000;

/// A column-strict plane partition in the class `CSPP(n, m)`: at most `n`
/// columns, rows weakly and columns strictly decreasing, parts of column `j`
/// at most `n + m - j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Cspp {
    pub n: usize,
    pub m: usize,
    pub rows: Vec<Vec<u32>>,
}

impl Cspp {
    pub fn new(n: usize, m: usize, rows: Vec<Vec<u32>>) -> Result<Self> {
        let c = Cspp { n, m, rows };
        c.validate()?;
        Ok(c)
    }

    pub fn empty(n: usize, m: usize) -> Self {
        Cspp { n, m, rows: Vec::new() }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidObject(msg));
        let h = (self.n + self.m) as u32;
        for (i, row) in self.rows.iter().enumerate() {
            if row.is_empty() {
                return bad(format!("row {} is empty", i + 1));
            }
            if row.len() > self.n {
                return bad(format!("row {} has more than {} parts", i + 1, self.n));
            }
            if row.windows(2).any(|w| w[0] < w[1]) || row.contains(&0) {
                return bad(format!("row {} is not a partition", i + 1));
            }
            for (j, &p) in row.iter().enumerate() {
                if p + j as u32 + 1 > h {
                    return bad(format!("part {p} in column {} exceeds {}", j + 1, h - j as u32 - 1));
                }
                if i > 0 {
                    match self.rows[i - 1].get(j) {
                        Some(&above) if above > p => {}
                        _ => return bad(format!("column {} is not strictly decreasing", j + 1)),
                    }
                }
            }
        }
        Ok(())
    }

    /// Entry `c_{ij}` (1-based), zero outside the shape.
    pub fn get(&self, i: usize, j: usize) -> u32 {
        if i == 0 || j == 0 {
            return 0;
        }
        self.rows.get(i - 1).and_then(|r| r.get(j - 1)).copied().unwrap_or(0)
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    /// Row lengths.
    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.len()).collect()
    }

    /// Columns as strictly decreasing sequences.
    pub fn columns(&self) -> Vec<Vec<u32>> {
        let width = self.rows.first().map_or(0, |r| r.len());
        (0..width)
            .map(|j| self.rows.iter().filter_map(|r| r.get(j).copied()).collect())
            .collect()
    }

    pub fn size(&self) -> u32 {
        self.rows.iter().flatten().sum()
    }

    /// Sum of the first row.
    pub fn profile(&self) -> u32 {
        self.rows.first().map_or(0, |r| r.iter().sum())
    }

    /// Number of parts equal to `v`.
    pub fn multiplicity(&self, v: u32) -> u32 {
        self.rows.iter().flatten().filter(|&&p| p == v).count() as u32
    }

    /// First-row parts `c_{1j} = n + m - j`.
    pub fn saturated(&self) -> u32 {
        let h = (self.n + self.m) as u32;
        self.rows
            .first()
            .map_or(0, |r| r.iter().enumerate().filter(|&(j, &p)| p == h - j as u32 - 1).count() as u32)
    }

    /// `Ubar_r`: parts equal to `r`, plus saturated parts smaller than `r`.
    pub fn ubar(&self, r: usize) -> u32 {
        let h = self.n + self.m;
        let sat = (1..r)
            .filter(|&k| k < h && self.get(1, h - k) == k as u32)
            .count() as u32;
        self.multiplicity(r as u32) + sat
    }

    /// Rows of odd length.
    pub fn odd_rows(&self) -> u32 {
        self.rows.iter().filter(|r| r.len() % 2 == 1).count() as u32
    }

    /// Columns of odd length.
    pub fn odd_cols(&self) -> u32 {
        self.columns().iter().filter(|c| c.len() % 2 == 1).count() as u32
    }

    pub fn rows_even(&self) -> bool {
        self.rows.iter().all(|r| r.len() % 2 == 0)
    }

    pub fn cols_even(&self) -> bool {
        self.columns().iter().all(|c| c.len() % 2 == 0)
    }

    /// Member of `CSPP^k`: at most `k` rows.
    pub fn in_k(&self, k: usize) -> bool {
        self.rows.len() <= k
    }

    /// Member of `CSPP^{k,x,y}`: at most `k` rows, row `k` has exactly
    /// `n + m - k - x` parts, and exactly `y` saturated parts. For `k = 0`
    /// the class is `{empty}` at `x = y = 0` and empty otherwise.
    pub fn in_kxy(&self, k: usize, x: usize, y: usize) -> bool {
        if k == 0 {
            return x == 0 && y == 0 && self.rows.is_empty();
        }
        let h = self.n + self.m;
        if !self.in_k(k) || x + k > h {
            return false;
        }
        let len_k = self.rows.get(k - 1).map_or(0, |r| r.len());
        len_k == h - k - x && self.saturated() as usize == y
    }

    /// Sort key: the columns, each padded with zeros, read in order.
    pub(crate) fn column_key(&self) -> Vec<u32> {
        let depth = (self.n + self.m).saturating_sub(1);
        let cols = self.columns();
        let mut key = Vec::with_capacity(self.n * depth);
        for j in 0..self.n {
            for i in 0..depth {
                key.push(cols.get(j).and_then(|c| c.get(i)).copied().unwrap_or(0));
            }
        }
        key
    }
}

impl fmt::Display for Cspp {
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

pub(crate) fn check_guard(n: usize, m: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    if n + m > MAX_NM {
        return Err(Error::SizeGuard(format!("n + m = {} exceeds {MAX_NM}", n + m)));
    }
    let card = crate::refnum::card_cspp(n, m);
    if card > num_bigint::BigInt::from(MAX_OBJECTS) {
        return Err(Error::SizeGuard(format!("class has {card} elements")));
    }
    Ok(())
}

/// All of `CSPP(n, m)`, ordered lexicographically by the column-reading word
/// with columns padded by zeros.
pub fn enumerate_cspp(n: usize, m: usize) -> Result<Vec<Cspp>> {
    check_guard(n, m)?;
    let mut out = Vec::new();
    let mut cols: Vec<Vec<u32>> = Vec::new();
    extend_columns(n, m, &mut cols, &mut out);
    let mut keyed: Vec<(Vec<u32>, Cspp)> = out.into_iter().map(|c| (c.column_key(), c)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(keyed.into_iter().map(|(_, c)| c).collect())
}

fn extend_columns(n: usize, m: usize, cols: &mut Vec<Vec<u32>>, out: &mut Vec<Cspp>) {
    out.push(from_columns(n, m, cols));
    let j = cols.len() + 1;
    if j > n {
        return;
    }
    let cap = (n + m - j) as u32;
    let prev = cols.last().cloned();
    for cand in strict_sequences(cap) {
        if cand.is_empty() {
            continue;
        }
        if let Some(p) = &prev {
            if cand.len() > p.len() || cand.iter().zip(p).any(|(a, b)| a > b) {
                continue;
            }
        }
        cols.push(cand);
        extend_columns(n, m, cols, out);
        cols.pop();
    }
}

fn strict_sequences(cap: u32) -> Vec<Vec<u32>> {
    (0u32..(1u32 << cap))
        .map(|mask| (1..=cap).rev().filter(|v| mask & (1 << (v - 1)) != 0).collect())
        .collect()
}

fn from_columns(n: usize, m: usize, cols: &[Vec<u32>]) -> Cspp {
    let depth = cols.first().map_or(0, |c| c.len());
    let rows = (0..depth)
        .map(|i| cols.iter().filter_map(|c| c.get(i).copied()).collect())
        .collect();
    Cspp { n, m, rows }
}
