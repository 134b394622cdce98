//! Sparse multivariate Laurent polynomials with exact rational coefficients.
//!
//! Terms are kept in a vector sorted by exponent, so sums and monomial shifts are linear merges.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::rational::Q;

/// Largest number of variables.
pub const MAX_VARS: usize = 16;

type Mono = [i16; MAX_VARS];

fn mono(e: &[i32]) -> Mono {
    assert!(e.len() <= MAX_VARS, "at most {MAX_VARS} variables");
    let mut m = [0; MAX_VARS];
    for (a, &b) in m.iter_mut().zip(e) {
        *a = i16::try_from(b).expect("exponent out of range");
    }
    m
}

fn unmono(m: &Mono, n: usize) -> Vec<i32> {
    m[..n].iter().map(|&x| x as i32).collect()
}

fn add_mono(a: &Mono, b: &Mono) -> Mono {
    let mut e = *a;
    for (x, y) in e.iter_mut().zip(b) {
        *x += y;
    }
    e
}

/// Exact coefficient: machine integers where they fit, rationals otherwise. Kept normalised so
/// that equal values have equal representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Coef {
    Small(i64),
    Big(Box<Q>),
}

impl Coef {
    fn from_q(x: &Q) -> Coef {
        if x.is_integer() {
            if let Some(v) = x.numer().to_i64() {
                return Coef::Small(v);
            }
        }
        Coef::Big(Box::new(x.clone()))
    }

    fn to_q(&self) -> Q {
        match self {
            Coef::Small(v) => Q::from_integer(BigInt::from(*v)),
            Coef::Big(x) => (**x).clone(),
        }
    }

    fn is_zero(&self) -> bool {
        matches!(self, Coef::Small(0))
    }

    fn add(&self, o: &Coef) -> Coef {
        if let (Coef::Small(a), Coef::Small(b)) = (self, o) {
            if let Some(v) = a.checked_add(*b) {
                return Coef::Small(v);
            }
        }
        Coef::from_q(&(self.to_q() + o.to_q()))
    }

    fn mul(&self, o: &Coef) -> Coef {
        if let (Coef::Small(a), Coef::Small(b)) = (self, o) {
            if let Some(v) = a.checked_mul(*b) {
                return Coef::Small(v);
            }
        }
        Coef::from_q(&(self.to_q() * o.to_q()))
    }

    fn neg(&self) -> Coef {
        self.mul(&Coef::Small(-1))
    }
}

type Terms = Vec<(Mono, Coef)>;

/// Sorts and combines like terms.
fn normalize(mut t: Terms) -> Terms {
    t.sort_unstable_by_key(|x| x.0);
    let mut out: Terms = Vec::with_capacity(t.len());
    for (e, c) in t {
        match out.last_mut() {
            Some((le, lc)) if *le == e => *lc = lc.add(&c),
            _ => out.push((e, c)),
        }
    }
    out.retain(|(_, c)| !c.is_zero());
    out
}

/// Merges two sorted term lists, `a + s * b`.
fn merge(a: &[(Mono, Coef)], b: &[(Mono, Coef)], s: &Coef) -> Terms {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                out.push((b[j].0, b[j].1.mul(s)));
                j += 1;
            }
            Ordering::Equal => {
                let c = a[i].1.add(&b[j].1.mul(s));
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend(b[j..].iter().map(|(e, c)| (*e, c.mul(s))));
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    nvars: usize,
    terms: Terms,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS, "at most {MAX_VARS} variables");
        LaurentPoly { nvars, terms: Vec::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Q::one())
    }

    pub fn constant(nvars: usize, c: Q) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    pub fn monomial(exps: Vec<i32>, c: Q) -> Self {
        let mut p = Self::zero(exps.len());
        if !c.is_zero() {
            p.terms.push((mono(&exps), Coef::from_q(&c)));
        }
        p
    }

    /// `x_i^k`.
    pub fn var_pow(nvars: usize, i: usize, k: i32) -> Self {
        let mut e = vec![0; nvars];
        e[i] = k;
        Self::monomial(e, Q::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::var_pow(nvars, i, 1)
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<i32>, Q)>) -> Self {
        let t = terms
            .into_iter()
            .map(|(e, c)| {
                assert_eq!(e.len(), nvars);
                (mono(&e), Coef::from_q(&c))
            })
            .collect();
        LaurentPoly { nvars, terms: normalize(t) }
    }

    /// Sum of many polynomials in one pass.
    pub fn sum<'a>(nvars: usize, parts: impl IntoIterator<Item = &'a LaurentPoly>) -> Self {
        let mut t = Vec::new();
        for p in parts {
            assert_eq!(p.nvars, nvars);
            t.extend_from_slice(&p.terms);
        }
        LaurentPoly { nvars, terms: normalize(t) }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (Vec<i32>, Q)> + '_ {
        self.terms.iter().map(|(e, c)| (unmono(e, self.nvars), c.to_q()))
    }

    pub fn coeff(&self, exps: &[i32]) -> Q {
        let m = mono(exps);
        match self.terms.binary_search_by(|(e, _)| e.cmp(&m)) {
            Ok(i) => self.terms[i].1.to_q(),
            Err(_) => Q::zero(),
        }
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        let c = Coef::from_q(c);
        LaurentPoly { nvars: self.nvars, terms: self.terms.iter().map(|(e, x)| (*e, x.mul(&c))).collect() }
    }

    /// Multiplies by the monomial `x^shift`.
    pub fn shift(&self, shift: &[i32]) -> Self {
        let s = mono(shift);
        LaurentPoly { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (add_mono(e, &s), c.clone())).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Rewrites into `nvars` variables, sending variable `i` to `map[i]`.
    pub fn remap(&self, nvars: usize, map: &[usize]) -> Self {
        assert_eq!(map.len(), self.nvars);
        let t = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut ne = [0; MAX_VARS];
                for (i, &k) in e[..self.nvars].iter().enumerate() {
                    ne[map[i]] += k;
                }
                (ne, c.clone())
            })
            .collect();
        LaurentPoly { nvars, terms: normalize(t) }
    }

    /// Integer-linear change of exponents: `e` becomes `sum_i e_i * rows[i]`.
    pub fn linear_substitution(&self, nvars: usize, rows: &[Vec<i32>]) -> Self {
        assert_eq!(rows.len(), self.nvars);
        let t = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut ne = [0; MAX_VARS];
                for (i, &k) in e[..self.nvars].iter().enumerate() {
                    if k != 0 {
                        for (x, &r) in ne.iter_mut().zip(&rows[i]) {
                            *x += k * r as i16;
                        }
                    }
                }
                (ne, c.clone())
            })
            .collect();
        LaurentPoly { nvars, terms: normalize(t) }
    }

    pub fn eval(&self, point: &[Q]) -> Q {
        assert_eq!(point.len(), self.nvars);
        let mut acc = Q::zero();
        for (e, c) in &self.terms {
            let mut t = c.to_q();
            for (x, &k) in point.iter().zip(e.iter()) {
                if k != 0 {
                    let p = num_traits::pow(x.clone(), k.unsigned_abs() as usize);
                    t *= if k > 0 { p } else { p.recip() };
                }
            }
            acc += t;
        }
        acc
    }

    /// Exact division by `x_var^k - m` where `m` is a monomial not involving `x_var` and `k >= 1`.
    pub fn div_by_binomial(&self, var: usize, k: i32, m: &LaurentPoly) -> Result<Self> {
        assert!(k >= 1);
        if m.is_zero() {
            let mut e = vec![0; self.nvars];
            e[var] = -k;
            return Ok(self.shift(&e));
        }
        assert_eq!(m.len(), 1);
        let (me, mc) = &m.terms[0];
        assert_eq!(me[var], 0, "monomial involves the division variable");
        if self.is_zero() {
            return Ok(self.clone());
        }
        // group by the exponent of x_var; each group stays sorted with that exponent cleared
        let mut groups: BTreeMap<i16, Terms> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut rest = *e;
            let p = rest[var];
            rest[var] = 0;
            groups.entry(p).or_default().push((rest, c.clone()));
        }
        let k = k as i16;
        let lo = *groups.keys().next().unwrap();
        let hi = *groups.keys().next_back().unwrap();
        let empty: Terms = Vec::new();
        // B_{j-k} = C_j + m B_j, from the top
        let mut b: BTreeMap<i16, Terms> = BTreeMap::new();
        let step = |j: i16, b: &BTreeMap<i16, Terms>| -> Terms {
            let cj = groups.get(&j).unwrap_or(&empty);
            match b.get(&j) {
                Some(bj) => {
                    let shifted: Terms = bj.iter().map(|(e, c)| (add_mono(e, me), c.clone())).collect();
                    merge(cj, &shifted, mc)
                }
                None => cj.clone(),
            }
        };
        let mut j = hi;
        while j >= lo + k {
            let cj = step(j, &b);
            if !cj.is_empty() {
                b.insert(j - k, cj);
            }
            j -= 1;
        }
        for j in lo..(lo + k).min(hi + 1) {
            if !step(j, &b).is_empty() {
                return Err(Error::InexactDivision);
            }
        }
        let mut out = Vec::new();
        for (p, poly) in b {
            for (mut e, c) in poly {
                e[var] = p;
                out.push((e, c));
            }
        }
        out.sort_unstable_by_key(|x| x.0);
        Ok(LaurentPoly { nvars: self.nvars, terms: out })
    }

    /// Exact division by `x_a - c x_b` for a constant `c`.
    pub fn div_by_difference(&self, a: usize, b: usize, c: &LaurentPoly) -> Result<Self> {
        let m = &LaurentPoly::var(self.nvars, b) * c;
        self.div_by_binomial(a, 1, &m)
    }

    pub fn total_degree_in(&self, vars: std::ops::Range<usize>) -> Option<(i32, i32)> {
        let degs: Vec<i32> =
            self.terms.iter().map(|(e, _)| e[vars.clone()].iter().map(|&x| x as i32).sum()).collect();
        Some((*degs.iter().min()?, *degs.iter().max()?))
    }

    pub fn swap_vars(&self, i: usize, j: usize) -> Self {
        let map: Vec<usize> = (0..self.nvars).map(|k| if k == i { j } else if k == j { i } else { k }).collect();
        self.remap(self.nvars, &map)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.nvars, rhs.nvars);
        LaurentPoly { nvars: self.nvars, terms: merge(&self.terms, &rhs.terms, &Coef::Small(1)) }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.nvars, rhs.nvars);
        LaurentPoly { nvars: self.nvars, terms: merge(&self.terms, &rhs.terms, &Coef::Small(-1)) }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (*e, c.neg())).collect() }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut acc: FxHashMap<Mono, Coef> = FxHashMap::default();
        acc.reserve(self.terms.len().max(rhs.terms.len()));
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let c = c1.mul(c2);
                acc.entry(add_mono(e1, e2)).and_modify(|x| *x = x.add(&c)).or_insert(c);
            }
        }
        let mut t: Terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        t.sort_unstable_by_key(|x| x.0);
        LaurentPoly { nvars: self.nvars, terms: t }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}", c.to_q())?;
            for (i, &x) in e[..self.nvars].iter().enumerate() {
                match x {
                    0 => {}
                    1 => write!(f, "*v{i}")?,
                    _ => write!(f, "*v{i}^{x}")?,
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, q};

    fn x(n: usize, i: usize) -> LaurentPoly {
        LaurentPoly::var(n, i)
    }

    #[test]
    fn arithmetic() {
        let a = &x(2, 0) + &x(2, 1);
        let b = &x(2, 0) - &x(2, 1);
        let p = &a * &b;
        let expect = &x(2, 0).pow(2) - &x(2, 1).pow(2);
        assert_eq!(p, expect);
        assert!((&p - &p).is_zero());
        assert_eq!(LaurentPoly::constant(2, q(3)).scale(&frac(1, 3)), LaurentPoly::one(2));
    }

    #[test]
    fn exact_division() {
        let n = 3;
        let f = &(&x(n, 0) - &x(n, 1)) * &(&x(n, 0).pow(2) + &LaurentPoly::var_pow(n, 2, -1));
        let back = f.div_by_difference(0, 1, &LaurentPoly::one(n)).unwrap();
        assert_eq!(back, &x(n, 0).pow(2) + &LaurentPoly::var_pow(n, 2, -1));
        assert_eq!(x(n, 0).div_by_difference(0, 1, &LaurentPoly::one(n)), Err(Error::InexactDivision));
        // x0^2 - q x1 with q = v2
        let m = &x(n, 1) * &x(n, 2);
        let g = &(&x(n, 0).pow(2) - &m) * &LaurentPoly::var_pow(n, 0, -3);
        assert_eq!(g.div_by_binomial(0, 2, &m).unwrap(), LaurentPoly::var_pow(n, 0, -3));
    }

    #[test]
    fn evaluation() {
        let p = &x(2, 0) + &LaurentPoly::var_pow(2, 1, -2);
        assert_eq!(p.eval(&[q(2), q(3)]), q(2) + frac(1, 9));
    }

    #[test]
    fn remapping() {
        let p = &x(2, 0) * &x(2, 1).pow(2);
        assert_eq!(p.swap_vars(0, 1), &x(2, 1) * &x(2, 0).pow(2));
        assert_eq!(p.remap(3, &[2, 0]), &x(3, 2) * &x(3, 0).pow(2));
    }
}
