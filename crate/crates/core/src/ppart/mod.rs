//! Column-strict plane partitions, shifted plane partitions, totally
//! symmetric self-complementary plane partitions and monotone triangles,
//! with the bijections between the first three and their statistics.

mod cspp;
mod mt;
mod tspp;
mod tsscpp;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;

pub use cspp::{enumerate_cspp, Cspp, MAX_NM, MAX_OBJECTS};
pub use mt::{enumerate_mt, mt_polynomial, mt_subset, mt_subset_kxy, MonotoneTriangle, MAX_MT};
pub use tspp::{cspp_to_tspp, enumerate_tspp, tspp_to_cspp, Tspp};
pub use tsscpp::{cspp_to_tsscpp, enumerate_tsscpp, tsscpp_to_cspp, tsscpp_to_tspp, Moves, Tsscpp, MAX_CUBE_NM};

use crate::error::{Error, Result};
use crate::exactmath::{SparsePoly, Var};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Statistic {
    /// `Ubar_r`
    UBar(usize),
    /// `U_r`, defined on shifted plane partitions.
    U(usize),
    /// Rows of odd length.
    VR,
    /// Columns of odd length.
    VC,
    /// Sum of the first row.
    Profile,
    /// Sum of all parts.
    Size,
    /// Number of parts equal to `i`.
    Mult(u32),
    /// Number of saturated parts.
    Saturated,
    /// `m_{n,n} - 1` of a monotone triangle.
    TopMinusOne,
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Statistic::UBar(r) => write!(f, "ubar{r}"),
            Statistic::U(r) => write!(f, "u{r}"),
            Statistic::VR => f.write_str("vr"),
            Statistic::VC => f.write_str("vc"),
            Statistic::Profile => f.write_str("profile"),
            Statistic::Size => f.write_str("size"),
            Statistic::Mult(i) => write!(f, "mult{i}"),
            Statistic::Saturated => f.write_str("saturated"),
            Statistic::TopMinusOne => f.write_str("top"),
        }
    }
}

impl FromStr for Statistic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        let num = |p: &str| -> Result<usize> {
            s[p.len()..].parse().map_err(|_| Error::Parse(format!("bad statistic index in '{s}'")))
        };
        Ok(match s.as_str() {
            "vr" => Statistic::VR,
            "vc" => Statistic::VC,
            "profile" => Statistic::Profile,
            "size" => Statistic::Size,
            "saturated" => Statistic::Saturated,
            "top" => Statistic::TopMinusOne,
            _ if s.starts_with("ubar") => Statistic::UBar(num("ubar")?),
            _ if s.starts_with("mult") => Statistic::Mult(num("mult")? as u32),
            _ if s.starts_with('u') => Statistic::U(num("u")?),
            _ => return Err(Error::Parse(format!("unknown statistic '{s}'"))),
        })
    }
}

/// Objects carrying statistics.
pub trait Weighted {
    const KIND: &'static str;

    fn stat(&self, s: Statistic) -> Result<u32>;
}

fn inapplicable(s: Statistic, kind: &str) -> Error {
    Error::StatisticInapplicable { stat: s.to_string(), kind: kind.to_string() }
}

fn check_r(r: usize, h: usize) -> Result<()> {
    if r == 0 || r > h {
        return Err(Error::InvalidParameter(format!("r = {r} outside [1, {h}]")));
    }
    Ok(())
}

impl Weighted for Cspp {
    const KIND: &'static str = "cspp";

    fn stat(&self, s: Statistic) -> Result<u32> {
        Ok(match s {
            Statistic::UBar(r) => {
                check_r(r, self.n + self.m)?;
                self.ubar(r)
            }
            Statistic::VR => self.odd_rows(),
            Statistic::VC => self.odd_cols(),
            Statistic::Profile => self.profile(),
            Statistic::Size => self.size(),
            Statistic::Mult(i) => self.multiplicity(i),
            Statistic::Saturated => self.saturated(),
            Statistic::U(_) | Statistic::TopMinusOne => return Err(inapplicable(s, Self::KIND)),
        })
    }
}

impl Weighted for Tspp {
    const KIND: &'static str = "tspp";

    fn stat(&self, s: Statistic) -> Result<u32> {
        match s {
            Statistic::U(r) => self.u(r),
            Statistic::UBar(r) => self.ubar(r),
            _ => Err(inapplicable(s, Self::KIND)),
        }
    }
}

impl Weighted for MonotoneTriangle {
    const KIND: &'static str = "mt";

    fn stat(&self, s: Statistic) -> Result<u32> {
        match s {
            Statistic::TopMinusOne => Ok(self.top() - 1),
            _ => Err(inapplicable(s, Self::KIND)),
        }
    }
}

/// A product of factors `base^stat`, with `base` a variable, a sign or any
/// polynomial.
#[derive(Clone, Debug, Default, Serialize)]
pub struct WeightSpec {
    pub factors: Vec<(Statistic, SparsePoly)>,
}

impl WeightSpec {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `v^stat`. Each variable may be used once.
    pub fn var(mut self, s: Statistic, v: Var) -> Result<Self> {
        let p = SparsePoly::var(v);
        if self.factors.iter().any(|(_, b)| *b == p) {
            return Err(Error::InvalidParameter(format!("variable {} used twice", v.name())));
        }
        self.factors.push((s, p));
        Ok(self)
    }

    /// Adds `(-1)^stat`.
    pub fn sign(mut self, s: Statistic) -> Self {
        self.factors.push((s, SparsePoly::constant(-1)));
        self
    }

    pub fn base(mut self, s: Statistic, base: SparsePoly) -> Self {
        self.factors.push((s, base));
        self
    }

    /// Parses `stat:var` or `stat:-1` items separated by commas, e.g.
    /// `ubar1:t,ubar2:u,size:-1`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut w = WeightSpec::new();
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (stat, base) = item
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("weight item '{item}' needs the form stat:base")))?;
            let stat: Statistic = stat.parse()?;
            let base = base.trim();
            w = match Var::parse(base) {
                Some(v) => w.var(stat, v)?,
                None => w.base(stat, base.parse()?),
            };
        }
        Ok(w)
    }
}

/// Sum over `objects` of the product of `base^stat`. Objects sharing the
/// same exponent vector are grouped before any polynomial arithmetic.
pub fn brute_gf<T: Weighted>(objects: &[T], w: &WeightSpec) -> Result<SparsePoly> {
    let mut counts: HashMap<Vec<u32>, u64> = HashMap::new();
    for o in objects {
        let key = w.factors.iter().map(|(s, _)| o.stat(*s)).collect::<Result<Vec<u32>>>()?;
        *counts.entry(key).or_insert(0) += 1;
    }
    let mut keys: Vec<_> = counts.into_iter().collect();
    keys.sort();
    let mut total = SparsePoly::zero();
    for (exps, count) in keys {
        let mut term = SparsePoly::constant(BigInt::from(count));
        for ((_, base), e) in w.factors.iter().zip(exps) {
            term = &term * &base.pow(e);
        }
        total += &term;
    }
    Ok(total)
}

/// Predicates selecting the subclasses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SubsetFilter {
    All,
    RowsEven,
    ColsEven,
    AtMostRows(usize),
    CsppKxy(usize, usize, usize),
    TsppK(usize),
    TsppKxy(usize, usize, usize),
    MtK(usize),
    MtKxy(usize, usize, usize),
}

impl FromStr for SubsetFilter {
    type Err = Error;

    /// `all`, `rows-even`, `cols-even`, `rows<=K`, `cspp-kxy:K,X,Y`,
    /// `tspp-k:K`, `tspp-kxy:K,X,Y`, `mt-k:K`, `mt-kxy:K,X,Y`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        let nums = |t: &str| -> Result<Vec<usize>> {
            t.split(',')
                .map(|x| x.trim().parse().map_err(|_| Error::Parse(format!("bad filter argument in '{s}'"))))
                .collect()
        };
        let three = |t: &str| -> Result<(usize, usize, usize)> {
            match nums(t)?.as_slice() {
                &[k, x, y] => Ok((k, x, y)),
                _ => Err(Error::Parse(format!("filter '{s}' needs three arguments"))),
            }
        };
        let one = |t: &str| -> Result<usize> {
            match nums(t)?.as_slice() {
                &[k] => Ok(k),
                _ => Err(Error::Parse(format!("filter '{s}' needs one argument"))),
            }
        };
        if let Some(rest) = s.strip_prefix("rows<=") {
            return Ok(SubsetFilter::AtMostRows(one(rest)?));
        }
        let (name, arg) = s.split_once(':').unwrap_or((s.as_str(), ""));
        Ok(match name {
            "all" => SubsetFilter::All,
            "rows-even" => SubsetFilter::RowsEven,
            "cols-even" => SubsetFilter::ColsEven,
            "cspp-kxy" => {
                let (k, x, y) = three(arg)?;
                SubsetFilter::CsppKxy(k, x, y)
            }
            "tspp-k" => SubsetFilter::TsppK(one(arg)?),
            "tspp-kxy" => {
                let (k, x, y) = three(arg)?;
                SubsetFilter::TsppKxy(k, x, y)
            }
            "mt-k" => SubsetFilter::MtK(one(arg)?),
            "mt-kxy" => {
                let (k, x, y) = three(arg)?;
                SubsetFilter::MtKxy(k, x, y)
            }
            _ => return Err(Error::Parse(format!("unknown filter '{s}'"))),
        })
    }
}

pub trait Filterable: Sized + Clone {
    fn matches(&self, f: SubsetFilter) -> Result<bool>;
}

fn wrong_filter(f: SubsetFilter, kind: &str) -> Error {
    Error::InvalidParameter(format!("filter {f:?} does not apply to {kind}"))
}

impl Filterable for Cspp {
    fn matches(&self, f: SubsetFilter) -> Result<bool> {
        Ok(match f {
            SubsetFilter::All => true,
            SubsetFilter::RowsEven => self.rows_even(),
            SubsetFilter::ColsEven => self.cols_even(),
            SubsetFilter::AtMostRows(k) => self.in_k(k),
            SubsetFilter::CsppKxy(k, x, y) => self.in_kxy(k, x, y),
            _ => return Err(wrong_filter(f, "cspp")),
        })
    }
}

impl Filterable for Tspp {
    fn matches(&self, f: SubsetFilter) -> Result<bool> {
        Ok(match f {
            SubsetFilter::All => true,
            SubsetFilter::TsppK(k) => self.in_k(k),
            SubsetFilter::TsppKxy(k, x, y) => self.in_kxy(k, x, y),
            _ => return Err(wrong_filter(f, "tspp")),
        })
    }
}

impl Filterable for MonotoneTriangle {
    fn matches(&self, f: SubsetFilter) -> Result<bool> {
        Ok(match f {
            SubsetFilter::All => true,
            SubsetFilter::MtK(k) => self.in_k(k),
            SubsetFilter::MtKxy(k, x, y) => self.in_kxy(k, x, y),
            _ => return Err(wrong_filter(f, "mt")),
        })
    }
}

/// Filtered sub-list in the original order.
pub fn subset_filter<T: Filterable>(objects: &[T], f: SubsetFilter) -> Result<Vec<T>> {
    let mut out = Vec::new();
    for o in objects {
        if o.matches(f)? {
            out.push(o.clone());
        }
    }
    Ok(out)
}

/// One row of the statistics table: `Ubar_1..Ubar_{n+m}`, `V^R`, `V^C`,
/// profile, size.
#[derive(Clone, Debug, Serialize)]
pub struct StatRow {
    pub ubar: Vec<u32>,
    pub vr: u32,
    pub vc: u32,
    pub profile: u32,
    pub size: u32,
}

pub fn stat_row(c: &Cspp) -> StatRow {
    StatRow {
        ubar: (1..=c.n + c.m).map(|r| c.ubar(r)).collect(),
        vr: c.odd_rows(),
        vc: c.odd_cols(),
        profile: c.profile(),
        size: c.size(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::poly;

    #[test]
    fn table_rows_for_cspp3() {
        let all = enumerate_cspp(3, 0).unwrap();
        let col = |s: Statistic| all.iter().map(|c| c.stat(s).unwrap()).collect::<Vec<_>>();
        assert_eq!(col(Statistic::UBar(1)), vec![0, 1, 2, 0, 1, 1, 2]);
        assert_eq!(col(Statistic::VC), vec![0, 1, 2, 1, 2, 0, 1]);
    }

    #[test]
    fn refined_counts() {
        let all = enumerate_cspp(3, 0).unwrap();
        let w = WeightSpec::new().var(Statistic::UBar(1), Var::T).unwrap();
        assert_eq!(brute_gf(&all, &w).unwrap(), poly("2+3t+2t^2"));
        let rows_even = subset_filter(&all, SubsetFilter::RowsEven).unwrap();
        assert_eq!(brute_gf(&rows_even, &w).unwrap(), poly("1+t+t^2"));
        let one = enumerate_cspp(1, 0).unwrap();
        assert_eq!(brute_gf(&one, &w).unwrap(), SparsePoly::one());
    }

    #[test]
    fn filters() {
        let all = enumerate_cspp(3, 0).unwrap();
        assert_eq!(subset_filter(&all, SubsetFilter::AtMostRows(1)).unwrap().len(), 5);
        let cc: Vec<String> = subset_filter(&all, SubsetFilter::ColsEven).unwrap().iter().map(|c| c.to_string()).collect();
        assert_eq!(cc, vec!["()", "2 / 1"]);
        let kxy: Vec<String> = subset_filter(&all, SubsetFilter::CsppKxy(2, 1, 1)).unwrap().iter().map(|c| c.to_string()).collect();
        assert_eq!(kxy, vec!["1 1", "2"]);
        assert!(subset_filter(&all, SubsetFilter::MtK(1)).is_err());
    }

    #[test]
    fn inapplicable_statistic() {
        let all = enumerate_mt(3).unwrap();
        let w = WeightSpec::new().var(Statistic::VC, Var::T).unwrap();
        assert!(matches!(brute_gf(&all, &w), Err(Error::StatisticInapplicable { .. })));
        assert!(WeightSpec::new().var(Statistic::VC, Var::T).unwrap().var(Statistic::VR, Var::T).is_err());
    }

    #[test]
    fn parse_weights_and_filters() {
        let w = WeightSpec::parse("ubar1:t, ubar2:u, size:-1").unwrap();
        assert_eq!(w.factors.len(), 3);
        assert_eq!(w.factors[2].1, SparsePoly::constant(-1));
        assert_eq!("cspp-kxy:2,1,1".parse::<SubsetFilter>().unwrap(), SubsetFilter::CsppKxy(2, 1, 1));
        assert_eq!("rows<=3".parse::<SubsetFilter>().unwrap(), SubsetFilter::AtMostRows(3));
        assert!("bogus".parse::<SubsetFilter>().is_err());
    }
}
