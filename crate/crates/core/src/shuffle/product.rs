//! Shuffle elements and the shuffle product.

use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::quiver::{add, total, DimVec};
use crate::rational::Q;
use crate::weights::Layout;

use super::kernel::{Kernel, KVARS};
use super::poly::LaurentPoly;

/// Largest total dimension accepted by [`shuffle_mul`] and [`symmetrize`].
pub const MAX_SLOTS: usize = 6;

/// Number of equivariant parameters `q, q1, q2` appended after the slot variables.
pub const PARAMS: usize = 3;

/// A shuffle element `num / D_d`; the denominator is fixed by the kernel and kept implicit.
/// Variables are the slots of `dims` in vertex-major order, then `q, q1, q2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShuffleElement {
    dims: DimVec,
    num: LaurentPoly,
}

impl ShuffleElement {
    pub fn new(dims: DimVec, num: LaurentPoly) -> Result<Self> {
        let m = total(&dims) as usize;
        if num.nvars() != m + PARAMS {
            return Err(Error::Shape(format!(
                "numerator has {} variables, dimension {:?} needs {}",
                num.nvars(),
                dims,
                m + PARAMS
            )));
        }
        Ok(ShuffleElement { dims, num })
    }

    pub fn constant(dims: DimVec, c: Q) -> Self {
        let m = total(&dims) as usize;
        ShuffleElement { dims, num: LaurentPoly::constant(m + PARAMS, c) }
    }

    /// `z^k` in dimension `e_colour`.
    pub fn generator(colours: usize, colour: usize, k: i32) -> Self {
        let mut dims = vec![0; colours];
        dims[colour] = 1;
        let mut e = vec![0; 1 + PARAMS];
        e[0] = k;
        ShuffleElement { dims, num: LaurentPoly::monomial(e, Q::one()) }
    }

    pub fn dims(&self) -> &[u32] {
        &self.dims
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn slots(&self) -> usize {
        total(&self.dims) as usize
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn scale(&self, c: &Q) -> Self {
        ShuffleElement { dims: self.dims.clone(), num: self.num.scale(c) }
    }

    /// Multiplies by `q^a q1^b q2^c`.
    pub fn scale_params(&self, exps: [i32; 3]) -> Self {
        let m = self.slots();
        let mut e = vec![0; m + PARAMS];
        e[m..].copy_from_slice(&exps);
        ShuffleElement { dims: self.dims.clone(), num: self.num.shift(&e) }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_dims(other)?;
        Ok(ShuffleElement { dims: self.dims.clone(), num: &self.num + &other.num })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_dims(other)?;
        Ok(ShuffleElement { dims: self.dims.clone(), num: &self.num - &other.num })
    }

    fn same_dims(&self, other: &Self) -> Result<()> {
        if self.dims != other.dims {
            return Err(Error::Shape(format!("dimensions {:?} and {:?} differ", self.dims, other.dims)));
        }
        Ok(())
    }

    /// Invariance of the numerator under adjacent transpositions inside each vertex block.
    pub fn is_symmetric(&self) -> bool {
        let l = Layout::new(&self.dims);
        (0..self.dims.len()).all(|v| {
            let b = l.block(v);
            b.clone().skip(1).all(|a| self.num.swap_vars(a - 1, a) == self.num)
        })
    }

    /// Range of the total degree in the slot variables, `None` for zero.
    pub fn z_degree(&self) -> Option<(i32, i32)> {
        self.num.total_degree_in(0..self.slots())
    }
}

impl fmt::Display for ShuffleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}: {}", self.dims, self.num)
    }
}

fn check_capacity(slots: usize) -> Result<()> {
    if slots > MAX_SLOTS {
        return Err(Error::Capacity { what: format!("shuffle in {slots} slots"), limit: MAX_SLOTS });
    }
    Ok(())
}

/// All permutations of `0..n`.
pub(crate) fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn rec(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == p.len() {
            out.push(p.clone());
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            rec(k + 1, p, out);
            p.swap(k, i);
        }
    }
    rec(0, &mut p, &mut out);
    out
}

/// All `k`-subsets of `0..n`, increasing.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

fn cartesian<T: Clone>(lists: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut out = vec![Vec::new()];
    for l in lists {
        out = out
            .into_iter()
            .flat_map(|pre| {
                l.iter().map(move |x| {
                    let mut v = pre.clone();
                    v.push(x.clone());
                    v
                })
            })
            .collect();
    }
    out
}

/// Sum of the numerator over the per-vertex permutation groups.
pub fn symmetrize(f: &ShuffleElement) -> Result<ShuffleElement> {
    let m = f.slots();
    check_capacity(m)?;
    let l = Layout::new(&f.dims);
    let per_vertex: Vec<Vec<Vec<usize>>> = f.dims.iter().map(|&k| permutations(k as usize)).collect();
    let mut acc = LaurentPoly::zero(m + PARAMS);
    for choice in cartesian(&per_vertex) {
        let mut map: Vec<usize> = (0..m + PARAMS).collect();
        for (v, perm) in choice.iter().enumerate() {
            for (j, &pj) in perm.iter().enumerate() {
                map[l.coord(v, j)] = l.coord(v, pj);
            }
        }
        acc = &acc + &f.num.remap(m + PARAMS, &map);
    }
    Ok(ShuffleElement { dims: f.dims.clone(), num: acc })
}

/// The polynomial `k(z_a / z_b)` in `m` slots, for a kernel-variable polynomial `k`.
pub(crate) fn at_ratio(k: &LaurentPoly, m: usize, a: usize, b: usize) -> LaurentPoly {
    let n = m + PARAMS;
    let mut rows = vec![vec![0; n]; KVARS];
    rows[0][a] += 1;
    rows[0][b] -= 1;
    for p in 0..PARAMS {
        rows[1 + p][m + p] = 1;
    }
    k.linear_substitution(n, &rows)
}

/// The shuffle product of two elements for `kernel`.
///
/// Sums over the per-vertex `(d, e)`-shuffles; inputs are assumed symmetric.
pub fn shuffle_mul(kernel: &Kernel, f: &ShuffleElement, g: &ShuffleElement) -> Result<ShuffleElement> {
    let n = kernel.colours();
    if f.dims.len() != n || g.dims.len() != n {
        return Err(Error::Shape(format!("kernel has {n} colours, got {:?} and {:?}", f.dims, g.dims)));
    }
    let t = add(&f.dims, &g.dims);
    let m = total(&t) as usize;
    check_capacity(m)?;
    let lt = Layout::new(&t);
    let (lf, lg) = (Layout::new(&f.dims), Layout::new(&g.dims));
    let nv = m + PARAMS;
    let colour: Vec<usize> = (0..m).map(|a| lt.vertex_of(a)).collect();
    let same_pairs: Vec<(usize, usize)> =
        (0..m).flat_map(|a| (a + 1..m).map(move |b| (a, b))).filter(|&(a, b)| colour[a] == colour[b]).collect();

    let mut cache: HashMap<(usize, usize), LaurentPoly> = HashMap::new();
    let choices: Vec<Vec<Vec<usize>>> =
        (0..n).map(|v| combinations(t[v] as usize, f.dims[v] as usize)).collect();
    let mut parts = Vec::new();
    for choice in cartesian(&choices) {
        let mut in_f = vec![false; m];
        let mut fmap = vec![0; f.slots() + PARAMS];
        let mut gmap = vec![0; g.slots() + PARAMS];
        for v in 0..n {
            let mut gi = 0;
            let mut fi = 0;
            for s in 0..t[v] as usize {
                let slot = lt.coord(v, s);
                if choice[v].get(fi) == Some(&s) {
                    fmap[lf.coord(v, fi)] = slot;
                    in_f[slot] = true;
                    fi += 1;
                } else {
                    gmap[lg.coord(v, gi)] = slot;
                    gi += 1;
                }
            }
        }
        for p in 0..PARAMS {
            fmap[f.slots() + p] = m + p;
            gmap[g.slots() + p] = m + p;
        }
        // multiply the small kernel factors together before touching f and g
        let mut kern = LaurentPoly::one(nv);
        let mut sign = Q::one();
        let mut shift = vec![0; nv];
        for a in (0..m).filter(|&a| in_f[a]) {
            for b in (0..m).filter(|&b| !in_f[b]) {
                let k = cache
                    .entry((a, b))
                    .or_insert_with(|| at_ratio(kernel.cross(colour[a], colour[b]), m, a, b));
                kern = &kern * k;
                if colour[a] == colour[b] {
                    // 1 / (1 - z_a/z_b) over the Vandermonde factor (z_a - z_b)
                    shift[b] += 1;
                    if a < b {
                        sign = -sign;
                    }
                }
            }
        }
        for &(a, b) in &same_pairs {
            if in_f[a] == in_f[b] {
                kern = &kern * &(&LaurentPoly::var(nv, a) - &LaurentPoly::var(nv, b));
            }
        }
        let fg = &f.num.remap(nv, &fmap) * &g.num.remap(nv, &gmap);
        let term = &fg * &kern;
        parts.push(term.shift(&shift).scale(&sign));
    }
    let mut acc = LaurentPoly::sum(nv, &parts);
    let one = LaurentPoly::one(nv);
    for &(a, b) in &same_pairs {
        acc = acc.div_by_difference(a, b, &one)?;
    }
    Ok(ShuffleElement { dims: t, num: acc })
}

/// Left-associated product of a word of elements.
pub fn shuffle_word(kernel: &Kernel, word: &[ShuffleElement]) -> Result<ShuffleElement> {
    let (first, rest) = word.split_first().ok_or_else(|| Error::Precondition("empty word".into()))?;
    rest.iter().try_fold(first.clone(), |acc, g| shuffle_mul(kernel, &acc, g))
}

/// The implicit denominator `D_d` as a Laurent polynomial.
pub fn denominator(kernel: &Kernel, dims: &[u32]) -> LaurentPoly {
    let l = Layout::new(dims);
    let m = l.len();
    let mut d = LaurentPoly::one(m + PARAMS);
    for a in 0..m {
        for b in 0..m {
            if a == b {
                continue;
            }
            if let Some(c) = kernel.e_factor(l.vertex_of(a), l.vertex_of(b)) {
                let lin = &LaurentPoly::one(KVARS) - &(c * &LaurentPoly::var(KVARS, 0));
                d = &d * &at_ratio(&lin, m, a, b);
            }
        }
    }
    d
}

/// Divides by `D_d` exactly, one factor `1 - c z_a/z_b = (z_b - c z_a) / z_b` at a time.
pub fn divide_by_denominator(kernel: &Kernel, dims: &[u32], p: &LaurentPoly) -> Result<LaurentPoly> {
    let l = Layout::new(dims);
    let m = l.len();
    let mut out = p.clone();
    for a in 0..m {
        for b in 0..m {
            if a == b {
                continue;
            }
            if let Some(c) = kernel.e_factor(l.vertex_of(a), l.vertex_of(b)) {
                let cz = at_ratio(c, m, a, b);
                out = out.div_by_difference(b, a, &cz)?;
                let mut e = vec![0; m + PARAMS];
                e[b] = 1;
                out = out.shift(&e);
            }
        }
    }
    Ok(out)
}

/// Random symmetric element with small exponents; parameter exponents are drawn only where
/// `params` is set.
pub fn random_element<R: Rng>(rng: &mut R, dims: &[u32], terms: usize, zmax: i32, params: [bool; 3]) -> ShuffleElement {
    let m = total(dims) as usize;
    let mut num = LaurentPoly::zero(m + PARAMS);
    for _ in 0..terms {
        let mut e = vec![0; m + PARAMS];
        for x in e.iter_mut().take(m) {
            *x = rng.gen_range(-zmax..=zmax);
        }
        for p in 0..PARAMS {
            if params[p] {
                e[m + p] = rng.gen_range(-1..=1);
            }
        }
        let c = Q::from_integer(rng.gen_range(-3i64..=3).into());
        if !c.is_zero() {
            num = &num + &LaurentPoly::monomial(e, c);
        }
    }
    let f = ShuffleElement { dims: dims.to_vec(), num };
    symmetrize(&f).expect("random element within capacity")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::Quiver;
    use crate::rational::q;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn qpoly(m: usize, qe: i32) -> LaurentPoly {
        let mut e = vec![0; m + PARAMS];
        e[m] = qe;
        LaurentPoly::monomial(e, Q::one())
    }

    #[test]
    fn symmetrize_constant() {
        let f = ShuffleElement::constant(vec![2], q(1));
        assert_eq!(symmetrize(&f).unwrap().num(), &LaurentPoly::constant(5, q(2)));
    }

    #[test]
    fn jordan_one_times_one() {
        let k = Kernel::jordan();
        let one = ShuffleElement::constant(vec![1], q(1));
        let p = shuffle_mul(&k, &one, &one).unwrap();
        assert_eq!(p.num(), &(&LaurentPoly::one(5) + &qpoly(2, 1)));
    }

    #[test]
    fn plain_jordan_is_symmetrization() {
        let k = Kernel::plain(&Quiver::loops(1)).unwrap();
        let f = ShuffleElement::generator(1, 0, 2);
        let g = ShuffleElement::generator(1, 0, -1);
        let p = shuffle_mul(&k, &f, &g).unwrap();
        let z = |i: usize, e: i32| LaurentPoly::var_pow(5, i, e);
        let expect = &(&z(0, 2) * &z(1, -1)) + &(&z(1, 2) * &z(0, -1));
        assert_eq!(p.num(), &expect);
    }

    #[test]
    fn capacity() {
        let k = Kernel::jordan();
        let a = ShuffleElement::constant(vec![4], q(1));
        let b = ShuffleElement::constant(vec![3], q(1));
        assert!(matches!(shuffle_mul(&k, &a, &b), Err(Error::Capacity { .. })));
    }

    #[test]
    fn products_are_symmetric_and_associative() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let k = Kernel::feigin_odeskii();
        for _ in 0..5 {
            let f = random_element(&mut rng, &[1], 2, 2, [false; 3]);
            let g = random_element(&mut rng, &[2], 2, 1, [false, true, false]);
            let h = random_element(&mut rng, &[1], 2, 2, [false; 3]);
            let l = shuffle_mul(&k, &shuffle_mul(&k, &f, &g).unwrap(), &h).unwrap();
            let r = shuffle_mul(&k, &f, &shuffle_mul(&k, &g, &h).unwrap()).unwrap();
            assert!(l.is_symmetric());
            assert_eq!(l, r);
        }
    }

    #[test]
    fn denominator_round_trip() {
        let k = Kernel::feigin_odeskii();
        let d = denominator(&k, &[2]);
        let f = ShuffleElement::generator(1, 0, 1);
        let g = ShuffleElement::generator(1, 0, 0);
        let p = shuffle_mul(&k, &f, &g).unwrap();
        let back = divide_by_denominator(&k, &[2], &(p.num() * &d)).unwrap();
        assert_eq!(&back, p.num());
    }
}
