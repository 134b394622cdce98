//! K-theory classes of induced weights at `W = 0`.
//!
//! Classes on `G(t)` are written as sums of dominant weights. The layout of `t = d + e` puts
//! the first block before the second at every vertex.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::quiver::{add, Quiver};
use crate::rational::{is_integral, q, sign_pow, Q};
use crate::weights::{dominant_shift, is_dominant, Layout};

use super::poly::LaurentPoly;
use super::product::PARAMS;

/// Dominant weight to multiplicity, nonzero entries only.
pub type KClassSum = BTreeMap<Vec<Q>, i64>;

/// Largest number of weights in `N_{d,e}` accepted by the pushforward.
pub const MAX_NORMAL_WEIGHTS: usize = 20;

/// Weights of `N_{a,b}` on the layout of `a + b`: `beta^v_i(a) - beta^w_j(b)` for every edge
/// `v -> w`.
pub fn normal_weights(quiver: &Quiver, a: &[u32], b: &[u32]) -> Vec<Vec<i64>> {
    let t = add(a, b);
    let l = Layout::new(&t);
    let mut out = Vec::new();
    for e in quiver.edges() {
        for i in 0..a[e.source] as usize {
            for j in 0..b[e.target] as usize {
                let mut x = vec![0; l.len()];
                x[l.coord(e.source, i)] += 1;
                x[l.coord(e.target, a[e.target] as usize + j)] -= 1;
                out.push(x);
            }
        }
    }
    out
}

/// `chi_a` and `chi_b` placed in the `a`-first layout of `a + b`.
pub fn place(a: &[u32], b: &[u32], chi_a: &[Q], chi_b: &[Q]) -> Result<Vec<Q>> {
    let (la, lb) = (Layout::new(a), Layout::new(b));
    la.check(chi_a)?;
    lb.check(chi_b)?;
    let t = add(a, b);
    let l = Layout::new(&t);
    let mut x = vec![Q::zero(); l.len()];
    for v in 0..a.len() {
        for j in 0..a[v] as usize {
            x[l.coord(v, j)] = chi_a[la.coord(v, j)].clone();
        }
        for j in 0..b[v] as usize {
            x[l.coord(v, a[v] as usize + j)] = chi_b[lb.coord(v, j)].clone();
        }
    }
    Ok(x)
}

/// Sum over the roots between the two blocks: `sum_v sum_{i < a^v, j < b^v} (beta_i - beta_{a^v + j})`.
pub fn cross_root_sum(a: &[u32], b: &[u32]) -> Vec<i64> {
    let t = add(a, b);
    let l = Layout::new(&t);
    let mut x = vec![0; l.len()];
    for v in 0..a.len() {
        for i in 0..a[v] as usize {
            for j in 0..b[v] as usize {
                x[l.coord(v, i)] += 1;
                x[l.coord(v, a[v] as usize + j)] -= 1;
            }
        }
    }
    x
}

/// `sum_{I} (-1)^{|I|} [base - sum_{i in I} w_i]`, each term moved to its dominant representative.
pub fn koszul_pushforward(t: &[u32], base: &[Q], weights: &[Vec<i64>]) -> Result<KClassSum> {
    if weights.len() > MAX_NORMAL_WEIGHTS {
        return Err(Error::Capacity { what: format!("{} normal weights", weights.len()), limit: MAX_NORMAL_WEIGHTS });
    }
    let mut out = KClassSum::new();
    for mask in 0u32..(1 << weights.len()) {
        let mut x = base.to_vec();
        for (k, w) in weights.iter().enumerate() {
            if mask >> k & 1 == 1 {
                for (xi, wi) in x.iter_mut().zip(w) {
                    *xi -= q(*wi);
                }
            }
        }
        if let Some(s) = dominant_shift(t, &x)? {
            *out.entry(s.weight).or_insert(0) += s.sign * sign_pow(mask.count_ones() as i64);
        }
    }
    out.retain(|_, c| *c != 0);
    Ok(out)
}

/// Pushforward of `chi_a (x) chi_b` along the `(a, b)` induction.
///
/// Untwisted: the Koszul sum over `N_{a,b}` starting at the placed weight. Twisted: the same
/// sum started at `chi + det N_{a,b} - 2 rho_{a,b}`.
pub fn bbw_pushforward(
    quiver: &Quiver,
    a: &[u32],
    b: &[u32],
    chi_a: &[Q],
    chi_b: &[Q],
    twisted: bool,
) -> Result<KClassSum> {
    quiver.check_dim(a)?;
    quiver.check_dim(b)?;
    if !is_integral(chi_a) || !is_integral(chi_b) {
        return Err(Error::NotIntegral);
    }
    let t = add(a, b);
    let ws = normal_weights(quiver, a, b);
    let mut base = place(a, b, chi_a, chi_b)?;
    if twisted {
        let rho2 = cross_root_sum(a, b);
        for (k, x) in base.iter_mut().enumerate() {
            let det: i64 = ws.iter().map(|w| w[k]).sum();
            *x += q(det - rho2[k]);
        }
    }
    koszul_pushforward(&t, &base, &ws)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MutationReport {
    pub lhs: KClassSum,
    pub rhs: KClassSum,
    pub sign: i64,
}

impl MutationReport {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Both sides of `p_{d,e}(chi_d, chi_e) = (-1)^{chi(d,e)} p_{e,d}^{tw}(chi_e, chi_d)`.
pub fn mutation_sides(quiver: &Quiver, d: &[u32], e: &[u32], chi_d: &[Q], chi_e: &[Q]) -> Result<MutationReport> {
    if !is_dominant(d, chi_d) || !is_dominant(e, chi_e) {
        return Err(Error::NotDominant);
    }
    let lhs = bbw_pushforward(quiver, d, e, chi_d, chi_e, false)?;
    let sign = sign_pow(quiver.euler_form(d, e)?);
    let rhs = bbw_pushforward(quiver, e, d, chi_e, chi_d, true)?
        .into_iter()
        .map(|(k, c)| (k, c * sign))
        .collect();
    Ok(MutationReport { lhs, rhs, sign })
}

pub fn mutation_check(quiver: &Quiver, d: &[u32], e: &[u32], chi_d: &[Q], chi_e: &[Q]) -> Result<bool> {
    Ok(mutation_sides(quiver, d, e, chi_d, chi_e)?.holds())
}

/// Sign and exponents of the determinant of the normal bundle of the `(d, e)` induction,
/// restricted to the diagonal torus of each block: `q^{f_v}` on the `d`-block at `v`, `q^{g_v}`
/// on the `e`-block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DetNormal {
    pub sign: i64,
    pub f_exp: Vec<i64>,
    pub g_exp: Vec<i64>,
}

impl DetNormal {
    /// `f_v + g_v`, the exponent on the joint diagonal.
    pub fn diagonal(&self) -> Vec<i64> {
        self.f_exp.iter().zip(&self.g_exp).map(|(f, g)| f + g).collect()
    }
}

pub fn det_normal_exponents(quiver: &Quiver, d: &[u32], e: &[u32]) -> Result<DetNormal> {
    quiver.check_dim(d)?;
    quiver.check_dim(e)?;
    let n = quiver.vertex_count();
    let mut f_exp: Vec<i64> = e.iter().map(|&x| -(x as i64)).collect();
    let mut g_exp: Vec<i64> = d.iter().map(|&x| x as i64).collect();
    for a in quiver.edges() {
        f_exp[a.source] += e[a.target] as i64;
        g_exp[a.target] -= d[a.source] as i64;
    }
    debug_assert_eq!(f_exp.len(), n);
    Ok(DetNormal { sign: sign_pow(quiver.euler_form(d, e)?), f_exp, g_exp })
}

/// `(prod_{N_{d,e}} (1 - w z^beta), prod_{N_{e,d}} (1 - w z^beta))` in the `d`-first slots of
/// `d + e`, followed by `q, q1, q2`; `w` is the torus label of the edge.
pub fn euler_class_ratio(quiver: &Quiver, d: &[u32], e: &[u32]) -> Result<(LaurentPoly, LaurentPoly)> {
    quiver.check_dim(d)?;
    quiver.check_dim(e)?;
    let t = add(d, e);
    let l = Layout::new(&t);
    let m = l.len();
    let nv = m + PARAMS;
    let factor = |sv: usize, si: usize, tv: usize, ti: usize, w: (i32, i32)| {
        let mut x = vec![0; nv];
        x[l.coord(sv, si)] += 1;
        x[l.coord(tv, ti)] -= 1;
        x[m + 1] = w.0;
        x[m + 2] = w.1;
        &LaurentPoly::one(nv) - &LaurentPoly::monomial(x, Q::one())
    };
    let mut num = LaurentPoly::one(nv);
    let mut den = LaurentPoly::one(nv);
    for a in quiver.edges() {
        for i in 0..d[a.source] as usize {
            for j in 0..e[a.target] as usize {
                num = &num * &factor(a.source, i, a.target, d[a.target] as usize + j, a.weight);
            }
        }
        for i in 0..e[a.source] as usize {
            for j in 0..d[a.target] as usize {
                den = &den * &factor(a.source, d[a.source] as usize + i, a.target, j, a.weight);
            }
        }
    }
    Ok((num, den))
}
