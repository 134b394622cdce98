//! Exact rational helpers on top of `BigRational`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn half() -> Q {
    frac(1, 2)
}

pub fn qvec(xs: &[i64]) -> Vec<Q> {
    xs.iter().map(|&x| q(x)).collect()
}

/// Parses `"3"`, `"-1/2"` or `"0.25"`.
pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || Error::Malformed(format!("not a rational: {s:?}"));
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(Q::new(n, d));
    }
    if let Some((ip, fp)) = s.split_once('.') {
        if fp.is_empty() || !fp.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let neg = ip.starts_with('-');
        let ip: BigInt = match ip.trim_start_matches(['-', '+']) {
            "" => BigInt::zero(),
            t => t.parse().map_err(|_| bad())?,
        };
        let fv: BigInt = fp.parse().map_err(|_| bad())?;
        let scale = num_traits::pow(BigInt::from(10), fp.len());
        let v = Q::new(ip * &scale + fv, scale);
        return Ok(if neg { -v } else { v });
    }
    let n: BigInt = s.parse().map_err(|_| bad())?;
    Ok(Q::from_integer(n))
}

pub fn parse_qvec(s: &str) -> Result<Vec<Q>> {
    let s = s.trim().trim_start_matches('[').trim_end_matches(']');
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| parse_q(t.trim().trim_matches('"')))
        .collect()
}

pub fn fmt_q(x: &Q) -> String {
    x.to_string()
}

pub fn fmt_qvec(xs: &[Q]) -> String {
    let parts: Vec<String> = xs.iter().map(fmt_q).collect();
    format!("({})", parts.join(", "))
}

pub fn to_i64(x: &Q) -> Option<i64> {
    if !x.is_integer() {
        return None;
    }
    i64::try_from(x.to_integer()).ok()
}

pub fn is_integral(xs: &[Q]) -> bool {
    xs.iter().all(|x| x.is_integer())
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn sum(xs: &[Q]) -> Q {
    xs.iter().sum()
}

pub fn sign_pow(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

pub fn floor(x: &Q) -> BigInt {
    x.floor().to_integer()
}

pub fn ceil(x: &Q) -> BigInt {
    x.ceil().to_integer()
}

pub fn abs(x: &Q) -> Q {
    x.abs()
}

pub fn one() -> Q {
    Q::one()
}

pub fn zero() -> Q {
    Q::zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_q("-1/2").unwrap(), frac(-1, 2));
        assert_eq!(parse_q("0.25").unwrap(), frac(1, 4));
        assert_eq!(parse_q("-.5").unwrap(), frac(-1, 2));
        assert_eq!(parse_q("7").unwrap(), q(7));
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("x").is_err());
        assert_eq!(parse_qvec("[\"1/2\", -3]").unwrap(), vec![frac(1, 2), q(-3)]);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(3, 0), 1);
        assert_eq!(binomial(2, 3), 0);
    }
}
