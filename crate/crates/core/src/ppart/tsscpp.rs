use serde::Serialize;

use super::cspp::Cspp;
use super::tspp::Tspp;
use crate::error::{Error, Result};

/// Largest `n + m` for which the cube is materialised.
pub const MAX_CUBE_NM: usize = 4;

/// A plane partition inside the cube of side `2(n + m)`, stored as its
/// height function `heights[x-1][y-1] = #{z : (x, y, z) in pi}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Tsscpp {
    pub n: usize,
    pub m: usize,
    pub heights: Vec<Vec<u32>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Moves {
    pub m1: u32,
    pub m2: u32,
    pub m3: u32,
}

fn plus_count(p: [usize; 3], h: usize) -> usize {
    p.iter().filter(|&&c| c > h).count()
}

impl Tsscpp {
    fn half(&self) -> usize {
        self.n + self.m
    }

    pub fn side(&self) -> usize {
        2 * self.half()
    }

    /// Whether the unit cube `(x, y, z)` (1-based) belongs to the partition.
    pub fn contains(&self, x: usize, y: usize, z: usize) -> bool {
        let s = self.side();
        if x == 0 || y == 0 || z == 0 || x > s || y > s {
            return false;
        }
        z <= self.heights[x - 1][y - 1] as usize
    }

    /// Number of unit cubes.
    pub fn volume(&self) -> u64 {
        self.heights.iter().flatten().map(|&v| v as u64).sum()
    }

    /// Checks the plane partition, total symmetry, self-complementarity and
    /// the condition that the central box of side `2m` meets the partition
    /// only in its minus region.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidObject(msg));
        let s = self.side();
        let h = self.half();
        if self.heights.len() != s || self.heights.iter().any(|r| r.len() != s) {
            return bad(format!("height matrix must be {s}x{s}"));
        }
        for x in 0..s {
            for y in 0..s {
                let v = self.heights[x][y];
                if v as usize > s {
                    return bad(format!("height {v} exceeds {s}"));
                }
                if (x > 0 && self.heights[x - 1][y] < v) || (y > 0 && self.heights[x][y - 1] < v) {
                    return bad(format!("heights increase at ({}, {})", x + 1, y + 1));
                }
            }
        }
        for x in 1..=s {
            for y in 1..=s {
                for z in 1..=s {
                    let inn = self.contains(x, y, z);
                    if inn != self.contains(y, x, z) || inn != self.contains(x, z, y) {
                        return bad(format!("not symmetric at ({x}, {y}, {z})"));
                    }
                    if inn == self.contains(s + 1 - x, s + 1 - y, s + 1 - z) {
                        return bad(format!("not self-complementary at ({x}, {y}, {z})"));
                    }
                }
            }
        }
        let (lo, hi) = (self.n + 1, self.n + 2 * self.m);
        for x in lo..=hi {
            for y in lo..=hi {
                for z in lo..=hi {
                    if self.contains(x, y, z) && plus_count([x, y, z], h) >= 2 {
                        return bad(format!("central box cell ({x}, {y}, {z}) lies in the plus region"));
                    }
                }
            }
        }
        Ok(())
    }

    /// Moves needed to reach this partition from the minus half of the
    /// cube, split by orbit type: all coordinates equal, exactly two equal,
    /// all distinct.
    pub fn moves(&self) -> Moves {
        let s = self.side();
        let h = self.half();
        let mut mv = Moves { m1: 0, m2: 0, m3: 0 };
        for x in 1..=s {
            for y in x..=s {
                for z in y..=s {
                    if plus_count([x, y, z], h) > 1 || self.contains(x, y, z) {
                        continue;
                    }
                    match (x == y, y == z) {
                        (true, true) => mv.m1 += 1,
                        (false, false) => mv.m3 += 1,
                        _ => mv.m2 += 1,
                    }
                }
            }
        }
        mv
    }
}

/// Self-conjugate partition whose diagonal hooks encode the strict
/// partition `mu`: `lambda_i = mu_i + i - 1` inside the Durfee square.
fn self_conjugate(mu: &[u32], len: usize) -> Vec<u32> {
    let d = mu.len();
    let mut lam: Vec<u32> = mu.iter().enumerate().map(|(i, &p)| p + i as u32).collect();
    for i in d + 1..=len {
        lam.push(lam[..d].iter().filter(|&&l| l as usize >= i).count() as u32);
    }
    lam.truncate(len);
    lam
}

pub fn cspp_to_tsscpp(c: &Cspp) -> Result<Tsscpp> {
    c.validate()?;
    let (n, m) = (c.n, c.m);
    let h = n + m;
    if h > MAX_CUBE_NM {
        return Err(Error::SizeGuard(format!("cube for n + m = {h} exceeds {MAX_CUBE_NM}")));
    }
    let cols = c.columns();
    // gamma[i][j]: column j of the self-conjugate array, 0-based
    let mut gamma = vec![vec![0u32; h]; h];
    for (j, col) in cols.iter().enumerate() {
        for (i, v) in self_conjugate(col, h).into_iter().enumerate() {
            gamma[i][j] = v;
        }
    }
    let s = 2 * h;
    let member = |p: [usize; 3]| -> bool {
        let inside_pmp = |p: [usize; 3]| -> bool {
            // exactly one coordinate is <= h; read it as the column of gamma
            let minus = p.iter().position(|&c| c <= h).expect("one minus coordinate");
            let others: Vec<usize> = (0..3).filter(|&k| k != minus).map(|k| p[k] - h).collect();
            gamma[others[0] - 1][p[minus] - 1] as usize >= others[1]
        };
        match plus_count(p, h) {
            0 => true,
            3 => false,
            2 => inside_pmp(p),
            _ => !inside_pmp([s + 1 - p[0], s + 1 - p[1], s + 1 - p[2]]),
        }
    };
    let mut heights = vec![vec![0u32; s]; s];
    for x in 1..=s {
        for y in 1..=s {
            let top = (1..=s).take_while(|&z| member([x, y, z])).count();
            if (top + 1..=s).any(|z| member([x, y, z])) {
                return Err(Error::InvalidObject(format!("column ({x}, {y}) is not an order ideal")));
            }
            heights[x - 1][y - 1] = top as u32;
        }
    }
    let pi = Tsscpp { n, m, heights };
    pi.validate()?;
    Ok(pi)
}

/// `c_{ij} = max(a_{i+n+m, j} - (n+m) - i + 1, 0)`.
pub fn tsscpp_to_cspp(pi: &Tsscpp) -> Result<Cspp> {
    pi.validate()?;
    let (n, m) = (pi.n, pi.m);
    let h = n + m;
    let mut rows = Vec::new();
    for i in 1..=h {
        let row: Vec<u32> = (1..=h)
            .map(|j| (pi.heights[i + h - 1][j - 1] as i64 - h as i64 - i as i64 + 1).max(0) as u32)
            .take_while(|&v| v > 0)
            .collect();
        if row.is_empty() {
            break;
        }
        rows.push(row);
    }
    Cspp::new(n, m, rows)
}

/// `b_{ij} = a_{i+1, j+1} - (n + 2m)`.
pub fn tsscpp_to_tspp(pi: &Tsscpp) -> Result<Tspp> {
    pi.validate()?;
    let (n, m) = (pi.n, pi.m);
    let s = n + m - 1;
    let rows = (1..=s)
        .map(|i| {
            (i..=s)
                .map(|j| pi.heights[i][j] as i64 - (n + 2 * m) as i64)
                .map(|v| u32::try_from(v).map_err(|_| Error::InvalidObject(format!("negative entry {v}"))))
                .collect::<Result<Vec<u32>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Tspp::new(n, m, rows)
}

/// Every TSSCPP in `TSSCPP(n, m)` found by a direct search over symmetric,
/// self-complementary height matrices, in lexicographic order of the
/// heights. Independent of the bijection with `CSPP(n, m)`.
pub fn enumerate_tsscpp(n: usize, m: usize) -> Result<Vec<Tsscpp>> {
    let h = n + m;
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    if h > MAX_CUBE_NM {
        return Err(Error::SizeGuard(format!("direct search for n + m = {h} exceeds {MAX_CUBE_NM}")));
    }
    let s = 2 * h;
    let cells: Vec<(usize, usize)> = (0..s).flat_map(|x| (x..s).map(move |y| (x, y))).collect();
    let mut heights = vec![vec![None::<u32>; s]; s];
    let mut out = Vec::new();
    search(n, m, &cells, 0, &mut heights, &mut out);
    Ok(out)
}

fn search(n: usize, m: usize, cells: &[(usize, usize)], pos: usize, a: &mut Vec<Vec<Option<u32>>>, out: &mut Vec<Tsscpp>) {
    let s = a.len();
    if pos == cells.len() {
        let heights: Vec<Vec<u32>> = a.iter().map(|r| r.iter().map(|v| v.unwrap()).collect()).collect();
        let pi = Tsscpp { n, m, heights };
        if pi.validate().is_ok() {
            out.push(pi);
        }
        return;
    }
    let (x, y) = cells[pos];
    let (cx, cy) = (s - 1 - y, s - 1 - x);
    let fits = |a: &Vec<Vec<Option<u32>>>, x: usize, y: usize, v: u32| -> bool {
        let up_ok = |p: Option<u32>| p.is_none_or(|p| p >= v);
        let down_ok = |p: Option<u32>| p.is_none_or(|p| p <= v);
        (x == 0 || up_ok(a[x - 1][y]))
            && (y == 0 || up_ok(a[x][y - 1]))
            && (x + 1 == s || down_ok(a[x + 1][y]))
            && (y + 1 == s || down_ok(a[x][y + 1]))
    };
    if let Some(v) = a[x][y] {
        if fits(a, x, y, v) {
            search(n, m, cells, pos + 1, a, out);
        }
        return;
    }
    for v in 0..=s as u32 {
        if !fits(a, x, y, v) {
            continue;
        }
        let w = s as u32 - v;
        let comp_free = a[cx][cy].is_none();
        if !comp_free && a[cx][cy] != Some(w) {
            continue;
        }
        a[x][y] = Some(v);
        a[y][x] = Some(v);
        let self_paired = (cx, cy) == (x, y) || (cx, cy) == (y, x);
        let ok = if self_paired { v == w } else { fits(a, cx, cy, w) };
        if ok {
            a[cx][cy] = Some(w);
            a[cy][cx] = Some(w);
            search(n, m, cells, pos + 1, a, out);
            if comp_free {
                a[cx][cy] = None;
                a[cy][cx] = None;
            }
        }
        a[x][y] = None;
        a[y][x] = None;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ppart::cspp::enumerate_cspp;
    use crate::ppart::tspp::cspp_to_tspp;

    #[test]
    fn self_conjugate_columns() {
        assert_eq!(self_conjugate(&[3, 1], 4), vec![3, 2, 1, 0]);
        assert_eq!(self_conjugate(&[2], 3), vec![2, 1, 0]);
        assert_eq!(self_conjugate(&[], 2), vec![0, 0]);
    }

    #[test]
    fn empty_is_half_the_cube() {
        let pi = cspp_to_tsscpp(&Cspp::empty(1, 2)).unwrap();
        assert_eq!(pi.volume(), 216 / 2);
        assert_eq!(pi.moves(), Moves { m1: 0, m2: 0, m3: 0 });
    }

    #[test]
    fn round_trips_and_moves() {
        for (n, m) in [(1, 2), (2, 1), (3, 0), (2, 2), (4, 0)] {
            for c in enumerate_cspp(n, m).unwrap() {
                let pi = cspp_to_tsscpp(&c).unwrap();
                assert_eq!(tsscpp_to_cspp(&pi).unwrap(), c);
                assert_eq!(tsscpp_to_tspp(&pi).unwrap(), cspp_to_tspp(&c).unwrap());
                let mv = pi.moves();
                let parts = c.rows.iter().map(|r| r.len() as u32).sum::<u32>();
                assert_eq!((mv.m1, mv.m2, mv.m3), (0, parts, c.size() - parts), "{c}");
            }
        }
    }

    #[test]
    fn single_part_two() {
        // (4,1,4) is one two-equal orbit, (4,1,5) and (5,1,4) share an all-distinct orbit
        let c = Cspp::new(1, 2, vec![vec![2]]).unwrap();
        let pi = cspp_to_tsscpp(&c).unwrap();
        assert!(pi.contains(4, 1, 4) && pi.contains(4, 1, 5) && pi.contains(5, 1, 4));
        assert!(!pi.contains(3, 6, 3));
        assert_eq!(pi.moves(), Moves { m1: 0, m2: 1, m3: 1 });
    }

    #[test]
    fn direct_search_agrees_with_bijection() {
        for (n, m) in [(1, 0), (1, 1), (2, 0), (1, 2), (2, 1), (3, 0), (4, 0), (2, 2), (1, 3), (3, 1)] {
            let mut direct = enumerate_tsscpp(n, m).unwrap();
            let mut image: Vec<Tsscpp> = enumerate_cspp(n, m).unwrap().iter().map(|c| cspp_to_tsscpp(c).unwrap()).collect();
            direct.sort_by(|a, b| a.heights.cmp(&b.heights));
            image.sort_by(|a, b| a.heights.cmp(&b.heights));
            assert_eq!(direct, image, "n={n} m={m}");
        }
    }

    #[test]
    fn size_guard() {
        assert!(matches!(cspp_to_tsscpp(&Cspp::empty(3, 2)), Err(Error::SizeGuard(_))));
    }
}
