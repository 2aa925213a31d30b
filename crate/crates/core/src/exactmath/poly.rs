use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Polynomial variables. The derived order is the canonical variable order:
/// `t < u < eps < z1 < z2 < ... < t1 < t2 < ... < x1 < ... < y1 < ... < s < q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    T,
    U,
    Eps,
    Z(u16),
    /// Indexed weight `t_i`.
    W(u16),
    X(u16),
    Y(u16),
    S,
    Q,
}

impl Var {
    pub fn name(&self) -> String {
        match self {
            Var::T => "t".into(),
            Var::U => "u".into(),
            Var::Eps => "eps".into(),
            Var::Z(i) => format!("z{i}"),
            Var::W(i) => format!("t{i}"),
            Var::X(i) => format!("x{i}"),
            Var::Y(i) => format!("y{i}"),
            Var::S => "s".into(),
            Var::Q => "q".into(),
        }
    }

    pub fn parse(name: &str) -> Option<Var> {
        match name {
            "t" => return Some(Var::T),
            "u" => return Some(Var::U),
            "eps" | "ε" => return Some(Var::Eps),
            "s" => return Some(Var::S),
            "q" => return Some(Var::Q),
            _ => {}
        }
        let mut chars = name.chars();
        let head = chars.next()?;
        let rest = chars.as_str();
        if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let idx: u16 = rest.parse().ok()?;
        match head {
            'z' => Some(Var::Z(idx)),
            't' => Some(Var::W(idx)),
            'x' => Some(Var::X(idx)),
            'y' => Some(Var::Y(idx)),
            _ => None,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// A monomial as a sorted list of `(variable, positive exponent)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var, e: u32) -> Self {
        if e == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(v, e)])
        }
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Var, u32)>) -> Self {
        let mut m: BTreeMap<Var, u32> = BTreeMap::new();
        for (v, e) in pairs {
            *m.entry(v).or_insert(0) += e;
        }
        Monomial(m.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0
            .iter()
            .find(|&&(w, _)| w == v)
            .map(|&(_, e)| e)
            .unwrap_or(0)
    }

    pub fn pairs(&self) -> &[(Var, u32)] {
        &self.0
    }

    /// Splits off the exponent of `v`.
    pub fn split(&self, v: Var) -> (u32, Monomial) {
        let e = self.exponent(v);
        (e, Monomial(self.0.iter().copied().filter(|&(w, _)| w != v).collect()))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }
}

fn lex_cmp(a: &[(Var, u32)], b: &[(Var, u32)]) -> Ordering {
    let (mut i, mut j) = (0, 0);
    loop {
        match (a.get(i), b.get(j)) {
            (None, None) => return Ordering::Equal,
            (Some(_), None) => return Ordering::Greater,
            (None, Some(_)) => return Ordering::Less,
            (Some(&(va, ea)), Some(&(vb, eb))) => {
                if va == vb {
                    if ea != eb {
                        return ea.cmp(&eb);
                    }
                    i += 1;
                    j += 1;
                } else if va < vb {
                    return Ordering::Greater;
                } else {
                    return Ordering::Less;
                }
            }
        }
    }
}

// Ascending total degree, then descending lex within a degree, so that
// `1 + t + u + t*u + t^2*u + t*u^2` is the iteration order.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| lex_cmp(&other.0, &self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, &(v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Sparse multivariate polynomial with big-integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SparsePoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl SparsePoly {
    pub fn zero() -> Self {
        SparsePoly::default()
    }

    pub fn one() -> Self {
        SparsePoly::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut p = SparsePoly::zero();
        if !c.is_zero() {
            p.terms.insert(Monomial::one(), c);
        }
        p
    }

    pub fn var(v: Var) -> Self {
        SparsePoly::term(1, Monomial::var(v, 1))
    }

    pub fn var_pow(v: Var, e: u32) -> Self {
        SparsePoly::term(1, Monomial::var(v, e))
    }

    pub fn term(c: impl Into<BigInt>, m: Monomial) -> Self {
        let c = c.into();
        let mut p = SparsePoly::zero();
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.constant_value().is_some_and(|c| c.is_one())
    }

    /// The value of a constant polynomial, `None` if some variable occurs.
    pub fn constant_value(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: Monomial, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(x) => {
                *x += c;
                if x.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn scale(&self, c: &BigInt) -> SparsePoly {
        if c.is_zero() {
            return SparsePoly::zero();
        }
        SparsePoly {
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> SparsePoly {
        SparsePoly {
            terms: self.terms.iter().map(|(k, x)| (k.mul(m), x.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> SparsePoly {
        let mut out = SparsePoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                out = &out * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        out
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        self.terms
            .keys()
            .flat_map(|m| m.pairs().iter().map(|&(v, _)| v))
            .collect()
    }

    /// Coefficient of `v^k`, as a polynomial in the remaining variables.
    pub fn coeff_of(&self, v: Var, k: u32) -> SparsePoly {
        let mut out = SparsePoly::zero();
        for (m, c) in &self.terms {
            let (e, rest) = m.split(v);
            if e == k {
                out.add_term(rest, c);
            }
        }
        out
    }

    /// Lowest exponent of `v` occurring; `None` for the zero polynomial.
    pub fn min_degree_in(&self, v: Var) -> Option<u32> {
        self.terms.keys().map(|m| m.exponent(v)).min()
    }

    /// Replaces each bound variable by the given polynomial.
    pub fn substitute(&self, bindings: &BTreeMap<Var, SparsePoly>) -> SparsePoly {
        if bindings.is_empty() {
            return self.clone();
        }
        let mut cache: BTreeMap<(Var, u32), SparsePoly> = BTreeMap::new();
        let mut out = SparsePoly::zero();
        for (m, c) in &self.terms {
            let mut kept = Vec::new();
            let mut factor = SparsePoly::constant(c.clone());
            for &(v, e) in m.pairs() {
                match bindings.get(&v) {
                    Some(val) => {
                        let p = cache.entry((v, e)).or_insert_with(|| val.pow(e));
                        factor = &factor * &*p;
                    }
                    None => kept.push((v, e)),
                }
            }
            if !kept.is_empty() {
                factor = factor.mul_monomial(&Monomial(kept));
            }
            out += &factor;
        }
        out
    }

    /// Substitutes integer values; unbound variables are kept.
    pub fn eval_partial(&self, values: &BTreeMap<Var, BigInt>) -> SparsePoly {
        let mut out = SparsePoly::zero();
        for (m, c) in &self.terms {
            let mut coef = c.clone();
            let mut kept = Vec::new();
            for &(v, e) in m.pairs() {
                match values.get(&v) {
                    Some(x) => coef *= num_traits::pow(x.clone(), e as usize),
                    None => kept.push((v, e)),
                }
            }
            out.add_term(Monomial(kept), &coef);
        }
        out
    }

    /// Full evaluation; every occurring variable must be bound.
    pub fn eval(&self, values: &BTreeMap<Var, BigInt>) -> Result<BigInt> {
        let p = self.eval_partial(values);
        p.constant_value().ok_or_else(|| {
            Error::InvalidParameter(format!("unbound variables in evaluation of {self}"))
        })
    }

    /// Exact division by `(v - root)` where `root` does not involve `v`.
    pub fn div_linear(&self, v: Var, root: &SparsePoly) -> Result<SparsePoly> {
        if root.vars().contains(&v) {
            return Err(Error::InvalidParameter("root must not contain the variable".into()));
        }
        let d = self.degree_in(v);
        let coeffs: Vec<SparsePoly> = (0..=d).map(|k| self.coeff_of(v, k)).collect();
        // synthetic division from the top coefficient down
        let mut q = vec![SparsePoly::zero(); d as usize];
        let mut carry = SparsePoly::zero();
        for k in (1..=d as usize).rev() {
            carry = &coeffs[k] + &(&carry * root);
            q[k - 1] = carry.clone();
        }
        let rem = &coeffs[0] + &(&carry * root);
        if !rem.is_zero() {
            return Err(Error::IdentityViolation(format!(
                "division by ({v} - ({root})) leaves remainder {rem}"
            )));
        }
        let mut out = SparsePoly::zero();
        for (k, c) in q.into_iter().enumerate() {
            out += &c.mul_monomial(&Monomial::var(v, k as u32));
        }
        Ok(out)
    }

    /// Univariate coefficient list in `v`, requiring no other variable.
    pub fn univariate_coeffs(&self, v: Var) -> Result<Vec<BigInt>> {
        let d = self.degree_in(v) as usize;
        let mut out = vec![BigInt::zero(); if self.is_zero() { 0 } else { d + 1 }];
        for (m, c) in &self.terms {
            let (e, rest) = m.split(v);
            if !rest.is_one() {
                return Err(Error::InvalidParameter(format!("{self} is not univariate in {v}")));
            }
            out[e as usize] = c.clone();
        }
        Ok(out)
    }

    pub fn from_univariate(v: Var, coeffs: &[BigInt]) -> SparsePoly {
        let mut out = SparsePoly::zero();
        for (k, c) in coeffs.iter().enumerate() {
            out.add_term(Monomial::var(v, k as u32), c);
        }
        out
    }

    /// Whether some coefficient is negative.
    pub fn has_negative_coeff(&self) -> bool {
        self.terms.values().any(|c| c.is_negative())
    }
}

impl From<i64> for SparsePoly {
    fn from(c: i64) -> Self {
        SparsePoly::constant(c)
    }
}

impl From<BigInt> for SparsePoly {
    fn from(c: BigInt) -> Self {
        SparsePoly::constant(c)
    }
}

impl From<Var> for SparsePoly {
    fn from(v: Var) -> Self {
        SparsePoly::var(v)
    }
}

impl AddAssign<&SparsePoly> for SparsePoly {
    fn add_assign(&mut self, rhs: &SparsePoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c);
        }
    }
}

impl SubAssign<&SparsePoly> for SparsePoly {
    fn sub_assign(&mut self, rhs: &SparsePoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), &-c);
        }
    }
}

impl MulAssign<&SparsePoly> for SparsePoly {
    fn mul_assign(&mut self, rhs: &SparsePoly) {
        *self = &*self * rhs;
    }
}

impl Add<&SparsePoly> for &SparsePoly {
    type Output = SparsePoly;
    fn add(self, rhs: &SparsePoly) -> SparsePoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&SparsePoly> for &SparsePoly {
    type Output = SparsePoly;
    fn sub(self, rhs: &SparsePoly) -> SparsePoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&SparsePoly> for &SparsePoly {
    type Output = SparsePoly;
    fn mul(self, rhs: &SparsePoly) -> SparsePoly {
        if self.is_zero() || rhs.is_zero() {
            return SparsePoly::zero();
        }
        if let Some(c) = self.constant_value() {
            return rhs.scale(&c);
        }
        if let Some(c) = rhs.constant_value() {
            return self.scale(&c);
        }
        let mut acc: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let m = ma.mul(mb);
                let c = ca * cb;
                match acc.get_mut(&m) {
                    Some(x) => *x += c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        SparsePoly { terms: acc }
    }
}

impl Neg for &SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        SparsePoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<SparsePoly> for SparsePoly {
            type Output = SparsePoly;
            fn $f(self, rhs: SparsePoly) -> SparsePoly {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&SparsePoly> for SparsePoly {
            type Output = SparsePoly;
            fn $f(self, rhs: &SparsePoly) -> SparsePoly {
                (&self).$f(rhs)
            }
        }
        impl $tr<SparsePoly> for &SparsePoly {
            type Output = SparsePoly;
            fn $f(self, rhs: SparsePoly) -> SparsePoly {
                self.$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        -&self
    }
}

impl std::iter::Sum for SparsePoly {
    fn sum<I: Iterator<Item = SparsePoly>>(iter: I) -> SparsePoly {
        let mut out = SparsePoly::zero();
        for p in iter {
            out += &p;
        }
        out
    }
}

impl std::iter::Product for SparsePoly {
    fn product<I: Iterator<Item = SparsePoly>>(iter: I) -> SparsePoly {
        let mut out = SparsePoly::one();
        for p in iter {
            out = &out * &p;
        }
        out
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for SparsePoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for SparsePoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        match v {
            serde_json::Value::String(s) => s.parse().map_err(serde::de::Error::custom),
            serde_json::Value::Number(n) => n.to_string().parse().map_err(serde::de::Error::custom),
            other => Err(serde::de::Error::custom(format!(
                "expected polynomial string or integer, got {other}"
            ))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t() -> SparsePoly {
        SparsePoly::var(Var::T)
    }
    fn u() -> SparsePoly {
        SparsePoly::var(Var::U)
    }

    #[test]
    fn canonical_order_two_vars() {
        let p = (SparsePoly::one() + t()) * (SparsePoly::one() + u());
        assert_eq!(p.to_string(), "1 + t + u + t*u");
        let q = &t() * &t() * u() + &t() * &u() * u();
        assert_eq!(q.to_string(), "t^2*u + t*u^2");
    }

    #[test]
    fn negative_terms_render() {
        let p = SparsePoly::from(-3) + t() - &t() * &t() * SparsePoly::from(2);
        assert_eq!(p.to_string(), "-3 + t - 2*t^2");
        assert_eq!(SparsePoly::zero().to_string(), "0");
        assert_eq!((-t()).to_string(), "-t");
    }

    #[test]
    fn pow_and_substitute() {
        let p = (SparsePoly::one() + t()).pow(3);
        assert_eq!(p.to_string(), "1 + 3*t + 3*t^2 + t^3");
        let mut b = BTreeMap::new();
        b.insert(Var::T, u() + SparsePoly::one());
        assert_eq!(p.substitute(&b).to_string(), "8 + 12*u + 6*u^2 + u^3");
    }

    #[test]
    fn coefficient_extraction() {
        let e = SparsePoly::var(Var::Eps);
        let p = (t() * t() + t() * SparsePoly::from(2) + SparsePoly::from(2)) + (t() * t() + t()) * e;
        assert_eq!(p.coeff_of(Var::Eps, 0).to_string(), "2 + 2*t + t^2");
        assert_eq!(p.coeff_of(Var::Eps, 1).to_string(), "t + t^2");
        assert!(p.coeff_of(Var::Eps, 2).is_zero());
    }

    #[test]
    fn synthetic_division() {
        let z1 = SparsePoly::var(Var::Z(1));
        let z2 = SparsePoly::var(Var::Z(2));
        let p = &z2 * &z2 * &z2 - &z1 * &z1 * &z1;
        let q = p.div_linear(Var::Z(2), &z1).unwrap();
        assert_eq!(&q * &(&z2 - &z1), p);
        assert!((z2.clone() + SparsePoly::one()).div_linear(Var::Z(2), &z1).is_err());
    }

    #[test]
    fn var_names_roundtrip() {
        for v in [Var::T, Var::U, Var::Eps, Var::Z(3), Var::W(2), Var::X(11), Var::Y(1), Var::S, Var::Q] {
            assert_eq!(Var::parse(&v.name()), Some(v));
        }
        assert!(Var::T < Var::U && Var::U < Var::Eps && Var::Eps < Var::Z(1) && Var::Z(1) < Var::Z(2));
    }
}
