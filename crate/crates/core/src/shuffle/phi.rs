//! Algebra maps between shuffle presentations.
//!
//! Both maps multiply by an explicit Laurent factor. On numerators this is
//! `num -> num * factor * D'_d / D_d` for source and target denominators `D`, `D'`.
//! The targets carry a monomial twist on some `zeta_{ij}`: without it the maps are not
//! multiplicative (see the tests).

use num_traits::One;

use crate::error::{Error, Result};
use crate::quiver::Quiver;
use crate::rational::Q;
use crate::weights::Layout;

use super::kernel::{kmono, Kernel};
use super::poly::LaurentPoly;
use super::product::{at_ratio, denominator, divide_by_denominator, shuffle_mul, ShuffleElement, PARAMS};

/// Source of [`phi_an`]: the quantum loop presentation with `n` colours.
pub fn an_source(n: usize) -> Result<Kernel> {
    Kernel::quantum_loop(n)
}

/// Target of [`phi_an`]: tripled `A_n` at `q1 = q2 = q^-1`, with `zeta_{i+1,i}` multiplied by
/// `-1/x` when `twisted`.
pub fn an_target(n: usize, twisted: bool) -> Result<Kernel> {
    let mut k = Kernel::tripled_an(n)?.specialize_inverse_q()?;
    if twisted {
        let f = kmono(-1, 0, 0, 0).scale(&-Q::one());
        for i in 0..n.saturating_sub(1) {
            k = k.twist(i + 1, i, &f)?;
        }
    }
    Ok(k.relabel(format!("tau:{n}{}", if twisted { "~" } else { "" })))
}

/// Source of [`phi_jordan3`].
pub fn jordan3_source() -> Kernel {
    Kernel::feigin_odeskii()
}

/// Target of [`phi_jordan3`]: the tripled Jordan quiver, with `zeta` multiplied by `1/x` when
/// `twisted`.
pub fn jordan3_target(twisted: bool) -> Result<Kernel> {
    let k = Kernel::edge_weighted(&Quiver::jordan().tripled())?;
    let k = if twisted { k.twist(0, 0, &kmono(-1, 0, 0, 0))? } else { k };
    Ok(k.relabel(if twisted { "q3~" } else { "q3" }))
}

fn transport(src: &Kernel, tgt: &Kernel, f: &ShuffleElement, factor: &LaurentPoly) -> Result<ShuffleElement> {
    let top = &(f.num() * factor) * &denominator(tgt, f.dims());
    ShuffleElement::new(f.dims().to_vec(), divide_by_denominator(src, f.dims(), &top)?)
}

fn check_colours(f: &ShuffleElement, n: usize) -> Result<()> {
    if f.dims().len() != n {
        return Err(Error::Shape(format!("expected {n} colours, got {:?}", f.dims())));
    }
    Ok(())
}

/// `prod_{i} prod_{a < b at i} q^2 * prod_{a at i, b at i+1} (1 - z_a/z_b) / q`.
pub fn phi_an_factor(dims: &[u32]) -> LaurentPoly {
    let l = Layout::new(dims);
    let m = l.len();
    let nv = m + PARAMS;
    let mut qe = 0i32;
    let mut out = LaurentPoly::one(nv);
    for v in 0..dims.len() {
        let k = dims[v] as i32;
        qe += k * (k - 1);
        if v + 1 < dims.len() {
            for a in l.block(v) {
                for b in l.block(v + 1) {
                    let lin = &LaurentPoly::one(super::kernel::KVARS) - &kmono(1, 0, 0, 0);
                    out = &out * &at_ratio(&lin, m, a, b);
                    qe -= 1;
                }
            }
        }
    }
    let mut e = vec![0; nv];
    e[m] = qe;
    out.shift(&e)
}

pub fn phi_an(n: usize, f: &ShuffleElement) -> Result<ShuffleElement> {
    check_colours(f, n)?;
    transport(&an_source(n)?, &an_target(n, true)?, f, &phi_an_factor(f.dims()))
}

/// `prod_{a < b} (1 - z_a / (q1 q2 z_b)) (1 - q1 q2 z_a / z_b)`, times `z_b / z_a` when
/// `twisted`.
pub fn phi_jordan3_factor(dims: &[u32], twisted: bool) -> LaurentPoly {
    let m = dims.iter().sum::<u32>() as usize;
    let nv = m + PARAMS;
    let one = LaurentPoly::one(super::kernel::KVARS);
    let a1 = &one - &kmono(1, 0, -1, -1);
    let a2 = &one - &kmono(1, 0, 1, 1);
    let mut psi = &a1 * &a2;
    if twisted {
        psi = psi.shift(&[-1, 0, 0, 0]);
    }
    let mut out = LaurentPoly::one(nv);
    for a in 0..m {
        for b in a + 1..m {
            out = &out * &at_ratio(&psi, m, a, b);
        }
    }
    out
}

pub fn phi_jordan3(f: &ShuffleElement) -> Result<ShuffleElement> {
    phi_jordan3_with(f, true)
}

/// [`phi_jordan3`] with the untwisted factor and target when `twisted` is false.
pub fn phi_jordan3_with(f: &ShuffleElement, twisted: bool) -> Result<ShuffleElement> {
    check_colours(f, 1)?;
    transport(&jordan3_source(), &jordan3_target(twisted)?, f, &phi_jordan3_factor(f.dims(), twisted))
}

/// `map(f * g) - map(f) * map(g)`; zero when the map is multiplicative on this pair.
pub fn homomorphism_defect(
    src: &Kernel,
    tgt: &Kernel,
    map: impl Fn(&ShuffleElement) -> Result<ShuffleElement>,
    f: &ShuffleElement,
    g: &ShuffleElement,
) -> Result<ShuffleElement> {
    let lhs = map(&shuffle_mul(src, f, g)?)?;
    let rhs = shuffle_mul(tgt, &map(f)?, &map(g)?)?;
    lhs.sub(&rhs)
}

/// Degree-`k` generators `z^k` of every colour with `k` in `ks`, all dimension `e_i`.
pub fn generators(colours: usize, ks: &[i32]) -> Vec<ShuffleElement> {
    (0..colours).flat_map(|c| ks.iter().map(move |&k| ShuffleElement::generator(colours, c, k))).collect()
}
