//! Shuffle kernels.
//!
//! A kernel is the rational function `zeta_{ij}(x)` for every ordered colour pair, together with
//! the denominator convention of its elements: an element of dimension `d` is `num / D_d` with
//! `D_d = prod_{a != b} E_{c(a) c(b)}(z_a / z_b)` and every `E_{ij}` equal to `1` or to `1 - c x`.
//! The product only needs the Laurent polynomial
//! `cross_{ij}(x) = zeta_{ij}(x) E_{ij}(x) E_{ji}(1/x) (1 - x)^{delta_ij}`, which is stored and
//! checked against `zeta` at construction.
//!
//! Kernel polynomials use the variables `[x, q, q1, q2]`.

use std::fmt;

use num_traits::One;

use crate::error::{Error, Result};
use crate::quiver::Quiver;
use crate::rational::Q;

use super::poly::LaurentPoly;

pub const KVARS: usize = 4;
pub const X: usize = 0;
pub const QV: usize = 1;
pub const Q1: usize = 2;
pub const Q2: usize = 3;

/// The presentations supported by [`Kernel::from_kind`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KernelKind {
    /// Symmetric quiver, no potential, no torus.
    PlainW0(Quiver),
    /// Jordan quiver with the scaling torus: `zeta = (1 - q x) / (1 - x)`.
    JordanEq,
    /// Tripled `A_n` with its torus weights.
    TripledAn(usize),
    /// `zeta = (1 - q1 x)(1 - q2 x) / ((1 - x)(1 - q1 q2 x))` on one colour.
    FeiginOdeskii,
    /// Derived from the torus labels of the quiver.
    EdgeWeighted(Quiver),
    /// `zeta_{ij} = (x - q^{-c_ij}) / (x - 1)` for the `A_n` Cartan matrix.
    QuantumLoop(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Kernel {
    label: String,
    colours: usize,
    zeta: Vec<Vec<(LaurentPoly, LaurentPoly)>>,
    e: Vec<Vec<Option<LaurentPoly>>>,
    cross: Vec<Vec<LaurentPoly>>,
}

fn kconst(c: i64) -> LaurentPoly {
    LaurentPoly::constant(KVARS, Q::from_integer(c.into()))
}

fn kvar(i: usize) -> LaurentPoly {
    LaurentPoly::var(KVARS, i)
}

/// Monomial `q^a q1^b q2^c` in kernel variables.
pub fn kmono(xe: i32, qe: i32, q1e: i32, q2e: i32) -> LaurentPoly {
    LaurentPoly::monomial(vec![xe, qe, q1e, q2e], Q::one())
}

/// `1 - w x`.
fn one_minus(w: &LaurentPoly) -> LaurentPoly {
    &kconst(1) - &(w * &kvar(X))
}

/// `x -> 1/x`.
fn invert_x(p: &LaurentPoly) -> LaurentPoly {
    p.linear_substitution(KVARS, &[vec![-1, 0, 0, 0], vec![0, 1, 0, 0], vec![0, 0, 1, 0], vec![0, 0, 0, 1]])
}

fn edge_monomial(weight: (i32, i32)) -> LaurentPoly {
    kmono(0, 0, weight.0, weight.1)
}

impl Kernel {
    /// Builds a kernel from its `zeta` table and `E` constants; fails if any `cross` is not a
    /// Laurent polynomial.
    pub fn new(
        label: impl Into<String>,
        zeta: Vec<Vec<(LaurentPoly, LaurentPoly)>>,
        e: Vec<Vec<Option<LaurentPoly>>>,
    ) -> Result<Self> {
        let colours = zeta.len();
        if e.len() != colours || zeta.iter().any(|r| r.len() != colours) {
            return Err(Error::Shape("kernel tables must be square".into()));
        }
        let mut cross = vec![vec![LaurentPoly::zero(KVARS); colours]; colours];
        for i in 0..colours {
            for j in 0..colours {
                let (num, den) = &zeta[i][j];
                let mut top = num.clone();
                if let Some(c) = &e[i][j] {
                    top = &top * &one_minus(c);
                }
                if let Some(c) = &e[j][i] {
                    top = &top * &invert_x(&one_minus(c));
                }
                if i == j {
                    top = &top * &one_minus(&kconst(1));
                }
                cross[i][j] = divide_exactly(&top, den)?;
            }
        }
        Ok(Kernel { label: label.into(), colours, zeta, e, cross })
    }

    pub fn from_kind(kind: &KernelKind) -> Result<Self> {
        match kind {
            KernelKind::PlainW0(q) => Self::plain(q),
            KernelKind::JordanEq => Ok(Self::jordan()),
            KernelKind::TripledAn(n) => Self::tripled_an(*n),
            KernelKind::FeiginOdeskii => Ok(Self::feigin_odeskii()),
            KernelKind::EdgeWeighted(q) => Self::edge_weighted(q),
            KernelKind::QuantumLoop(n) => Self::quantum_loop(*n),
        }
    }

    /// `zeta_{ij} = (1 - x)^{c(i,j) - delta_ij}` for a symmetric quiver.
    pub fn plain(quiver: &Quiver) -> Result<Self> {
        if !quiver.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        let n = quiver.vertex_count();
        let lin = one_minus(&kconst(1));
        let zeta = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let den = if i == j { lin.clone() } else { kconst(1) };
                        (lin.pow(quiver.multiplicity(i, j) as u32), den)
                    })
                    .collect()
            })
            .collect();
        Self::new("plain", zeta, vec![vec![None; n]; n])
    }

    pub fn jordan() -> Self {
        let zeta = vec![vec![(one_minus(&kvar(QV)), one_minus(&kconst(1)))]];
        Self::new("jordan", zeta, vec![vec![None]]).expect("jordan kernel")
    }

    /// `zeta_{ij} = prod_{e: i -> j} (1 - w(e) x) / (1 - x)^{delta_ij}`.
    pub fn edge_weighted(quiver: &Quiver) -> Result<Self> {
        let n = quiver.vertex_count();
        let mut zeta = vec![vec![(kconst(1), kconst(1)); n]; n];
        for (i, row) in zeta.iter_mut().enumerate() {
            row[i].1 = one_minus(&kconst(1));
        }
        for e in quiver.edges() {
            let z = &mut zeta[e.source][e.target].0;
            *z = &*z * &one_minus(&edge_monomial(e.weight));
        }
        Self::new("edge", zeta, vec![vec![None; n]; n])
    }

    /// Tripled `A_n`, with the linear quiver oriented `i+1 -> i`.
    pub fn tripled_an(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Precondition("A_n needs n >= 1".into()));
        }
        let edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i + 1, i)).collect();
        let k = Self::edge_weighted(&Quiver::new(n, &edges)?.tripled())?;
        Ok(k.relabel(format!("an:{n}")))
    }

    pub fn feigin_odeskii() -> Self {
        let qq = kmono(0, 0, 1, 1);
        let num = &one_minus(&kvar(Q1)) * &one_minus(&kvar(Q2));
        let den = &one_minus(&kconst(1)) * &one_minus(&qq);
        Self::new("fo", vec![vec![(num, den)]], vec![vec![Some(qq)]]).expect("fo kernel")
    }

    /// The quantum loop presentation of `U_q^>(L sl_{n+1})`, elements normalised by
    /// `E_{i,i+1} = 1 - x`.
    pub fn quantum_loop(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Precondition("quantum loop kernel needs n >= 1".into()));
        }
        let mut zeta = vec![vec![(kconst(1), kconst(1)); n]; n];
        let mut e = vec![vec![None; n]; n];
        for i in 0..n {
            for j in 0..n {
                let c: i32 = if i == j {
                    2
                } else if i.abs_diff(j) == 1 {
                    -1
                } else {
                    continue;
                };
                zeta[i][j] = (&kvar(X) - &kmono(0, -c, 0, 0), &kvar(X) - &kconst(1));
            }
            if i + 1 < n {
                e[i][i + 1] = Some(kconst(1));
            }
        }
        Self::new(format!("sh:{n}"), zeta, e)
    }

    pub fn relabel(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// Multiplies `zeta_{ij}` by `factor`, a Laurent polynomial in the kernel variables.
    pub fn twist(&self, i: usize, j: usize, factor: &LaurentPoly) -> Result<Self> {
        let mut zeta = self.zeta.clone();
        zeta[i][j].0 = &zeta[i][j].0 * factor;
        Self::new(format!("{}~", self.label), zeta, self.e.clone())
    }

    /// Substitutes `q1 = q2 = q^-1`.
    pub fn specialize_inverse_q(&self) -> Result<Self> {
        let rows = [vec![1, 0, 0, 0], vec![0, 1, 0, 0], vec![0, -1, 0, 0], vec![0, -1, 0, 0]];
        let sub = |p: &LaurentPoly| p.linear_substitution(KVARS, &rows);
        let zeta = self
            .zeta
            .iter()
            .map(|r| r.iter().map(|(a, b)| (sub(a), sub(b))).collect())
            .collect();
        let e = self.e.iter().map(|r| r.iter().map(|c| c.as_ref().map(sub)).collect()).collect();
        Self::new(format!("{}|q1=q2=1/q", self.label), zeta, e)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn colours(&self) -> usize {
        self.colours
    }

    pub fn zeta(&self, i: usize, j: usize) -> &(LaurentPoly, LaurentPoly) {
        &self.zeta[i][j]
    }

    pub fn cross(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.cross[i][j]
    }

    /// The constant `c` of `E_{ij} = 1 - c x`, if that factor is present.
    pub fn e_factor(&self, i: usize, j: usize) -> Option<&LaurentPoly> {
        self.e[i][j].as_ref()
    }

    /// Evaluates `zeta_{ij}` at a point `[x, q, q1, q2]`.
    pub fn eval_zeta(&self, i: usize, j: usize, point: &[Q]) -> Q {
        let (n, d) = &self.zeta[i][j];
        n.eval(point) / d.eval(point)
    }
}

impl fmt::Display for Kernel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label)
    }
}

/// Divides by a product of factors `1 - c x` (or `x - c`) and constants; all kernel denominators
/// have this shape.
fn divide_exactly(top: &LaurentPoly, den: &LaurentPoly) -> Result<LaurentPoly> {
    let mut rest = den.clone();
    let mut out = top.clone();
    loop {
        let xdeg = rest.terms().map(|(e, _)| e[X]).collect::<Vec<_>>();
        let (lo, hi) = match (xdeg.iter().min(), xdeg.iter().max()) {
            (Some(&l), Some(&h)) => (l, h),
            _ => return Err(Error::Invariant("zero kernel denominator".into())),
        };
        if lo == hi {
            break;
        }
        let (factor, quot) = split_linear(&rest, lo)?;
        out = div_linear(&out, &factor)?;
        rest = quot;
    }
    // monomial remainder
    if rest.len() != 1 {
        return Err(Error::Invariant(format!("unsupported kernel denominator {den}")));
    }
    let (e, c) = rest.terms().next().map(|(e, c)| (e.to_vec(), c.clone())).unwrap();
    let inv: Vec<i32> = e.iter().map(|k| -k).collect();
    Ok(out.shift(&inv).scale(&c.recip()))
}

/// Finds a factor `x - m` (monomial `m`) of `p`, returning the factor and the quotient.
fn split_linear(p: &LaurentPoly, lo: i32) -> Result<(LaurentPoly, LaurentPoly)> {
    // candidates: ratios of the lowest and next x-degree coefficients
    let low: Vec<_> = p.terms().filter(|(e, _)| e[X] == lo).collect();
    let nxt = lo + 1;
    let next: Vec<_> = p.terms().filter(|(e, _)| e[X] == nxt).collect();
    for (el, cl) in &low {
        for (en, cn) in &next {
            let diff: Vec<i32> = el.iter().zip(en.iter()).map(|(a, b)| a - b).collect();
            let mut me = diff.clone();
            me[X] = 0;
            let m = LaurentPoly::monomial(me, -(*cl).clone() / (*cn).clone());
            let factor = &kvar(X) - &m;
            if let Ok(quot) = p.div_by_binomial(X, 1, &m) {
                return Ok((factor, quot));
            }
        }
    }
    Err(Error::Invariant(format!("kernel denominator {p} does not split into linear factors")))
}

fn div_linear(p: &LaurentPoly, factor: &LaurentPoly) -> Result<LaurentPoly> {
    // factor = x - m
    let m = &kvar(X) - factor;
    p.div_by_binomial(X, 1, &m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, q};

    #[test]
    fn cross_factors() {
        let j = Kernel::jordan();
        assert_eq!(j.cross(0, 0), &one_minus(&kvar(QV)));
        let p = Kernel::plain(&Quiver::loops(3)).unwrap();
        assert_eq!(p.cross(0, 0), &one_minus(&kconst(1)).pow(3));
        let fo = Kernel::feigin_odeskii();
        let qq = kmono(0, 0, 1, 1);
        let expect = &(&one_minus(&kvar(Q1)) * &one_minus(&kvar(Q2))) * &invert_x(&one_minus(&qq));
        assert_eq!(fo.cross(0, 0), &expect);
    }

    #[test]
    fn quantum_loop_cross() {
        let k = Kernel::quantum_loop(2).unwrap();
        assert_eq!(k.cross(0, 0), &(&kmono(0, -2, 0, 0) - &kvar(X)));
        assert_eq!(k.cross(0, 1), &(&kmono(0, 1, 0, 0) - &kvar(X)));
        assert_eq!(k.cross(1, 0), &(&kconst(1) - &kmono(-1, 1, 0, 0)));
    }

    #[test]
    fn edge_weighted_reproduces_plain() {
        let q = Quiver::new(2, &[(0, 1), (1, 0), (0, 0)]).unwrap();
        let a = Kernel::edge_weighted(&q).unwrap();
        let b = Kernel::plain(&q).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(a.cross(i, j), b.cross(i, j));
            }
        }
    }

    #[test]
    fn tripled_an_orientation() {
        let k = Kernel::tripled_an(2).unwrap();
        assert_eq!(k.cross(1, 0), &one_minus(&kvar(Q1)));
        assert_eq!(k.cross(0, 1), &one_minus(&kvar(Q2)));
        let s = k.specialize_inverse_q().unwrap();
        assert_eq!(s.cross(0, 0), &one_minus(&kmono(0, 2, 0, 0)));
        assert_eq!(s.cross(0, 1), &one_minus(&kmono(0, -1, 0, 0)));
    }

    #[test]
    fn zeta_evaluates() {
        let fo = Kernel::feigin_odeskii();
        let pt = [frac(1, 3), q(1), q(2), q(5)];
        let x = frac(1, 3);
        let expect = (q(1) - q(2) * &x) * (q(1) - q(5) * &x) / ((q(1) - &x) * (q(1) - q(10) * &x));
        assert_eq!(fo.eval_zeta(0, 0, &pt), expect);
    }
}
