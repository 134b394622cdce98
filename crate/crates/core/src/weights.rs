//! Weight and cocharacter coordinates for `G(d) = prod GL(d^i)`.
//!
//! Coordinates are vertex-major: vertex 0 occupies the first `d^0` slots, and so on.
//! A weight `beta^i_j - beta^{i'}_{j'}` of `R(d)` is stored as a pair of coordinate indices.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::quiver::{DimVec, Quiver};
use crate::rational::{frac, q, Q};

/// Slot bookkeeping for a dimension vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Layout {
    dims: DimVec,
    offsets: Vec<usize>,
    vertex: Vec<usize>,
}

impl Layout {
    pub fn new(d: &[u32]) -> Self {
        let mut offsets = Vec::with_capacity(d.len());
        let mut vertex = Vec::new();
        for (v, &k) in d.iter().enumerate() {
            offsets.push(vertex.len());
            vertex.extend(std::iter::repeat_n(v, k as usize));
        }
        Layout { dims: d.to_vec(), offsets, vertex }
    }

    pub fn dims(&self) -> &[u32] {
        &self.dims
    }

    pub fn len(&self) -> usize {
        self.vertex.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertex.is_empty()
    }

    pub fn coord(&self, v: usize, j: usize) -> usize {
        self.offsets[v] + j
    }

    pub fn vertex_of(&self, a: usize) -> usize {
        self.vertex[a]
    }

    pub fn block(&self, v: usize) -> std::ops::Range<usize> {
        self.offsets[v]..self.offsets[v] + self.dims[v] as usize
    }

    pub fn check(&self, x: &[Q]) -> Result<()> {
        if x.len() != self.len() {
            return Err(Error::Shape(format!(
                "weight has {} coordinates, expected {}",
                x.len(),
                self.len()
            )));
        }
        Ok(())
    }
}

/// A weight `beta_plus - beta_minus` of `R(d)`, tagged with the edge it comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RWeight {
    pub plus: usize,
    pub minus: usize,
    pub edge: usize,
}

impl RWeight {
    pub fn is_zero(&self) -> bool {
        self.plus == self.minus
    }

    pub fn pair(&self, lambda: &[Q]) -> Q {
        &lambda[self.plus] - &lambda[self.minus]
    }

    pub fn add_to(&self, acc: &mut [Q], c: &Q) {
        if !self.is_zero() {
            acc[self.plus] += c;
            acc[self.minus] -= c;
        }
    }
}

pub fn weight_sum(ws: &[RWeight], n: usize) -> Vec<Q> {
    let mut acc = vec![Q::zero(); n];
    let one = q(1);
    for w in ws {
        w.add_to(&mut acc, &one);
    }
    acc
}

/// `rho` at `(i,j)` is `(d^i - (2j-1))/2` with `j` starting at 1.
pub fn rho(d: &[u32]) -> Vec<Q> {
    d.iter()
        .flat_map(|&k| (1..=k as i64).map(move |j| frac(k as i64 - (2 * j - 1), 2)))
        .collect()
}

/// The diagonal character, averaged over the support of `d`.
pub fn beta_diag(d: &[u32]) -> Vec<Q> {
    let support = d.iter().filter(|&&k| k > 0).count() as i64;
    d.iter()
        .flat_map(|&k| (0..k).map(move |_| frac(1, support * k as i64)))
        .collect()
}

pub fn pairing(lambda: &[Q], chi: &[Q]) -> Result<Q> {
    if lambda.len() != chi.len() {
        return Err(Error::Shape("pairing of vectors of different length".into()));
    }
    Ok(crate::rational::dot(lambda, chi))
}

/// Weakly decreasing inside every vertex block.
pub fn is_dominant(d: &[u32], chi: &[Q]) -> bool {
    let l = Layout::new(d);
    (0..d.len()).all(|v| {
        let b = l.block(v);
        chi[b].windows(2).all(|w| w[0] >= w[1])
    })
}

/// Weakly increasing inside every vertex block.
pub fn is_anti_dominant(d: &[u32], lambda: &[Q]) -> bool {
    let l = Layout::new(d);
    (0..d.len()).all(|v| {
        let b = l.block(v);
        lambda[b].windows(2).all(|w| w[0] <= w[1])
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominantShift {
    pub weight: Vec<Q>,
    pub sign: i64,
    pub length: usize,
}

/// Dominant representative of `chi` under `w * chi = w(chi + rho) - rho`, or `None` when
/// `chi + rho` has a repeated coordinate inside a vertex block.
pub fn dominant_shift(d: &[u32], chi: &[Q]) -> Result<Option<DominantShift>> {
    let l = Layout::new(d);
    l.check(chi)?;
    if !crate::rational::is_integral(chi) {
        return Err(Error::NotIntegral);
    }
    let r = rho(d);
    let mut out = Vec::with_capacity(chi.len());
    let mut length = 0;
    for v in 0..d.len() {
        let b = l.block(v);
        let shifted: Vec<Q> = b.clone().map(|a| &chi[a] + &r[a]).collect();
        for i in 0..shifted.len() {
            for j in i + 1..shifted.len() {
                if shifted[i] == shifted[j] {
                    return Ok(None);
                }
                if shifted[i] < shifted[j] {
                    length += 1;
                }
            }
        }
        let mut sorted = shifted;
        sorted.sort_by(|a, b| b.cmp(a));
        out.extend(sorted.into_iter().zip(b).map(|(x, a)| x - &r[a]));
    }
    Ok(Some(DominantShift { weight: out, sign: crate::rational::sign_pow(length as i64), length }))
}

/// All weights of `R(d)`: for each edge `i -> i'`, `beta^i_j - beta^{i'}_{j'}` over all slots.
pub fn r_weights(quiver: &Quiver, d: &[u32]) -> Vec<RWeight> {
    let l = Layout::new(d);
    let mut out = Vec::new();
    for (k, e) in quiver.edges().iter().enumerate() {
        for a in l.block(e.source) {
            for b in l.block(e.target) {
                out.push(RWeight { plus: a, minus: b, edge: k });
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Attracting {
    pub pos: Vec<RWeight>,
    pub neg: Vec<RWeight>,
    pub fixed: Vec<RWeight>,
    /// Sum of the roots `beta_j - beta_k` (same vertex) pairing positively with `lambda`.
    pub rho_pos: Vec<Q>,
}

pub fn attracting_weights(quiver: &Quiver, d: &[u32], lambda: &[Q]) -> Result<Attracting> {
    quiver.check_dim(d)?;
    let l = Layout::new(d);
    l.check(lambda)?;
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    let mut fixed = Vec::new();
    for w in r_weights(quiver, d) {
        let p = w.pair(lambda);
        if p.is_positive() {
            pos.push(w);
        } else if p.is_negative() {
            neg.push(w);
        } else {
            fixed.push(w);
        }
    }
    let mut rho_pos = vec![Q::zero(); l.len()];
    for v in 0..d.len() {
        for a in l.block(v) {
            for b in l.block(v) {
                if lambda[a] > lambda[b] {
                    rho_pos[a] += q(1);
                    rho_pos[b] -= q(1);
                }
            }
        }
    }
    Ok(Attracting { pos, neg, fixed, rho_pos })
}

/// `lambda - <lambda, beta_d> lambda_d`.
pub fn normalize_cochar(d: &[u32], lambda: &[Q]) -> Vec<Q> {
    let shift = crate::rational::dot(lambda, &beta_diag(d));
    lambda.iter().map(|x| x - &shift).collect()
}

/// Coordinates taken by each part: part `b` takes the next `d_b^v` slots at every vertex.
pub fn place_blocks(d: &[u32], parts: &[DimVec]) -> Result<Vec<Vec<usize>>> {
    let l = Layout::new(d);
    let mut used = vec![0usize; d.len()];
    let mut out = Vec::with_capacity(parts.len());
    for p in parts {
        if p.len() != d.len() {
            return Err(Error::Shape("partition part has wrong length".into()));
        }
        if p.iter().all(|&x| x == 0) {
            return Err(Error::Precondition("empty part in partition".into()));
        }
        let mut coords = Vec::new();
        for (v, &k) in p.iter().enumerate() {
            for _ in 0..k {
                coords.push(l.coord(v, used[v]));
                used[v] += 1;
            }
        }
        out.push(coords);
    }
    if used.iter().zip(d).any(|(&u, &k)| u != k as usize) {
        return Err(Error::Precondition("partition does not sum to d".into()));
    }
    for c in &mut out {
        c.sort_unstable();
    }
    Ok(out)
}

/// Block `b` gets level `b`, then the result is normalized.
pub fn cochar_from_partition(d: &[u32], parts: &[DimVec]) -> Result<Vec<Q>> {
    let blocks = place_blocks(d, parts)?;
    let mut lambda = vec![Q::zero(); Layout::new(d).len()];
    for (b, coords) in blocks.iter().enumerate() {
        for &a in coords {
            lambda[a] = q(b as i64);
        }
    }
    Ok(normalize_cochar(d, &lambda))
}

/// Block dimension vector restricted to coordinates `coords`.
pub fn block_dims(layout: &Layout, coords: &[usize]) -> DimVec {
    let mut out = vec![0u32; layout.dims().len()];
    for &a in coords {
        out[layout.vertex_of(a)] += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qvec;

    #[test]
    fn rho_values() {
        assert_eq!(rho(&[1, 1]), qvec(&[0, 0]));
        assert_eq!(rho(&[2]), vec![frac(1, 2), frac(-1, 2)]);
        assert_eq!(rho(&[3]), qvec(&[1, 0, -1]));
    }

    #[test]
    fn beta_values() {
        assert_eq!(beta_diag(&[1]), qvec(&[1]));
        assert_eq!(beta_diag(&[2]), vec![frac(1, 2), frac(1, 2)]);
        assert_eq!(beta_diag(&[1, 1]), vec![frac(1, 2), frac(1, 2)]);
        assert_eq!(beta_diag(&[2, 0]), vec![frac(1, 2), frac(1, 2)]);
        let ones = vec![q(1); 5];
        assert_eq!(pairing(&ones, &beta_diag(&[2, 3])).unwrap(), q(1));
    }

    #[test]
    fn pairing_example() {
        assert_eq!(pairing(&qvec(&[1, -1]), &qvec(&[3, 5])).unwrap(), q(-2));
        assert!(pairing(&qvec(&[1]), &qvec(&[3, 5])).is_err());
    }

    #[test]
    fn dominant_shift_examples() {
        let s = dominant_shift(&[2], &qvec(&[3, 1])).unwrap().unwrap();
        assert_eq!((s.weight, s.sign, s.length), (qvec(&[3, 1]), 1, 0));
        assert_eq!(dominant_shift(&[2], &qvec(&[0, 1])).unwrap(), None);
        let s = dominant_shift(&[2], &qvec(&[0, 2])).unwrap().unwrap();
        assert_eq!((s.weight, s.sign, s.length), (qvec(&[1, 1]), -1, 1));
        assert_eq!(dominant_shift(&[2], &[frac(1, 2), q(0)]), Err(Error::NotIntegral));
    }

    #[test]
    fn attracting_examples() {
        let m3 = Quiver::loops(3);
        let a = attracting_weights(&m3, &[2], &qvec(&[0, 1])).unwrap();
        assert_eq!(a.pos.len(), 3);
        assert!(a.pos.iter().all(|w| (w.plus, w.minus) == (1, 0)));
        assert_eq!(a.neg.len(), 3);
        assert!(a.neg.iter().all(|w| (w.plus, w.minus) == (0, 1)));
        assert_eq!(a.rho_pos, qvec(&[-1, 1]));
        let triv = attracting_weights(&m3, &[2], &qvec(&[0, 0])).unwrap();
        assert!(triv.pos.is_empty() && triv.neg.is_empty());

        let a2 = Quiver::a_n(2);
        let a = attracting_weights(&a2, &[1, 1], &qvec(&[0, 1])).unwrap();
        assert!(a.pos.is_empty());
        assert_eq!(a.neg.len(), 1);
        assert_eq!((a.neg[0].plus, a.neg[0].minus), (0, 1));
    }

    #[test]
    fn cochar_examples() {
        assert_eq!(cochar_from_partition(&[2], &[vec![2]]).unwrap(), qvec(&[0, 0]));
        assert_eq!(cochar_from_partition(&[2], &[vec![1], vec![1]]).unwrap(), vec![frac(-1, 2), frac(1, 2)]);
        assert_eq!(
            cochar_from_partition(&[1, 1], &[vec![1, 0], vec![0, 1]]).unwrap(),
            vec![frac(-1, 2), frac(1, 2)]
        );
        assert!(cochar_from_partition(&[2], &[vec![0], vec![2]]).is_err());
    }

    #[test]
    fn placement_interleaves_vertices() {
        let b = place_blocks(&[2, 1], &[vec![1, 0], vec![1, 1]]).unwrap();
        assert_eq!(b, vec![vec![0], vec![1, 2]]);
    }
}
