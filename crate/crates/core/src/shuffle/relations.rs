//! Defining relations checked inside shuffle algebras.

use std::fmt;

use crate::error::{Error, Result};

use super::kernel::Kernel;
use super::product::{shuffle_word, ShuffleElement};

/// `e_i^2 e_j - (q + q^-1) e_i e_j e_i + e_j e_i^2` on degree-zero generators.
pub fn serre(kernel: &Kernel, i: usize, j: usize) -> Result<ShuffleElement> {
    let n = kernel.colours();
    if i >= n || j >= n {
        return Err(Error::Shape(format!("colours {i}, {j} out of range for {n}")));
    }
    let ei = ShuffleElement::generator(n, i, 0);
    let ej = ShuffleElement::generator(n, j, 0);
    let a = shuffle_word(kernel, &[ei.clone(), ei.clone(), ej.clone()])?;
    let b = shuffle_word(kernel, &[ei.clone(), ej.clone(), ei.clone()])?;
    let c = shuffle_word(kernel, &[ej, ei.clone(), ei])?;
    let qb = b.scale_params([1, 0, 0]).add(&b.scale_params([-1, 0, 0]))?;
    a.sub(&qb)?.add(&c)
}

/// Where `q` sits in the quadratic loop relation of `U_q^>(L sl_2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sl2Convention {
    /// `e_{k+1} e_l - q e_l e_{k+1} = q e_k e_{l+1} - e_{l+1} e_k`
    Q,
    /// the same with `q^-1`
    QInverse,
}

impl fmt::Display for Sl2Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sl2Convention::Q => write!(f, "e[k+1]e[l] - q e[l]e[k+1] = q e[k]e[l+1] - e[l+1]e[k]"),
            Sl2Convention::QInverse => {
                write!(f, "e[k+1]e[l] - q^-1 e[l]e[k+1] = q^-1 e[k]e[l+1] - e[l+1]e[k]")
            }
        }
    }
}

/// Left side minus right side of the loop relation at `(k, l)` on a one-colour kernel.
pub fn sl2_defect(kernel: &Kernel, conv: Sl2Convention, k: i32, l: i32) -> Result<ShuffleElement> {
    if kernel.colours() != 1 {
        return Err(Error::Shape("the loop relation needs a one-colour kernel".into()));
    }
    let e = |k: i32| ShuffleElement::generator(1, 0, k);
    let p = |a: i32, b: i32| shuffle_word(kernel, &[e(a), e(b)]);
    let qe = match conv {
        Sl2Convention::Q => 1,
        Sl2Convention::QInverse => -1,
    };
    let lhs = p(k + 1, l)?.sub(&p(l, k + 1)?.scale_params([qe, 0, 0]))?;
    let rhs = p(k, l + 1)?.scale_params([qe, 0, 0]).sub(&p(l + 1, k)?)?;
    lhs.sub(&rhs)
}

/// The convention under which the relation holds at `(0, 0)`.
pub fn pin_sl2_convention(kernel: &Kernel) -> Result<Sl2Convention> {
    for c in [Sl2Convention::Q, Sl2Convention::QInverse] {
        if sl2_defect(kernel, c, 0, 0)?.is_zero() {
            return Ok(c);
        }
    }
    Err(Error::Invariant("no loop relation convention holds at (0, 0)".into()))
}

/// `(k, l)` pairs in `[lo, hi]^2` where the relation fails.
pub fn sl2_failures(kernel: &Kernel, conv: Sl2Convention, lo: i32, hi: i32) -> Result<Vec<(i32, i32)>> {
    let mut bad = Vec::new();
    for k in lo..=hi {
        for l in lo..=hi {
            if !sl2_defect(kernel, conv, k, l)?.is_zero() {
                bad.push((k, l));
            }
        }
    }
    Ok(bad)
}
