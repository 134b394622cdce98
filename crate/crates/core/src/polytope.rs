//! The zonotope `W̄ = sum_beta [0, beta] + R beta_d`, its r- and p-invariants, face characters,
//! standard forms and the admissibility test.
//!
//! Everything is exact. Membership `chi in r W̄` means `chi - w beta_d = sum_k c_k beta_k` with
//! `c_k in [-r, 0]`, where `w` is the coordinate sum of `chi` (every generator has sum zero).

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lp::{self, Lp, LpOutcome};
use crate::quiver::{DimVec, OrderedPartition, Quiver};
use crate::rational::{half, q, Q};
use crate::weights::{self, Layout};

/// Largest total dimension accepted by the polytope operations.
pub const MAX_DIM: u32 = 8;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum RValue {
    Finite(Q),
    Infinite,
}

impl RValue {
    pub fn finite(&self) -> Option<&Q> {
        match self {
            RValue::Finite(r) => Some(r),
            RValue::Infinite => None,
        }
    }
}

impl fmt::Display for RValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RValue::Finite(r) => write!(f, "{r}"),
            RValue::Infinite => write!(f, "inf"),
        }
    }
}

/// Generators `beta_plus - beta_minus` (nonzero, with multiplicity) on local coordinates, plus the
/// diagonal direction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolytopeSpec {
    n: usize,
    gens: Vec<(usize, usize)>,
    beta: Vec<Q>,
}

/// A dual certificate together with the optimum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RSolution {
    pub r: RValue,
    /// `chi - w beta_d`.
    pub chi0: Vec<Q>,
    /// Optimal dual point `lambda` with `<lambda, chi0> = -1`, when `r` is finite and positive.
    pub certificate: Option<Vec<Q>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub r: Q,
    /// Normalized anti-dominant levels (for dominant input).
    pub lambda: Vec<Q>,
    /// Coordinate subsets `S` whose indicator satisfies the face equation.
    pub tight: Vec<Vec<usize>>,
    /// Level sets of `lambda`, lowest level first.
    pub levels: Vec<Vec<usize>>,
}

pub fn check_capacity(d: &[u32]) -> Result<()> {
    let t: u32 = d.iter().sum();
    if t > MAX_DIM {
        return Err(Error::Capacity { what: format!("total dimension {t} for polytope operations"), limit: MAX_DIM as usize });
    }
    Ok(())
}

impl PolytopeSpec {
    pub fn new(quiver: &Quiver, d: &[u32]) -> Result<Self> {
        quiver.check_dim(d)?;
        check_capacity(d)?;
        let all: Vec<usize> = (0..Layout::new(d).len()).collect();
        Ok(Self::for_block(quiver, d, &all))
    }

    /// The polytope of the Levi block spanned by the (sorted) global coordinates `coords`.
    pub fn for_block(quiver: &Quiver, d: &[u32], coords: &[usize]) -> Self {
        let layout = Layout::new(d);
        let mut local = vec![usize::MAX; layout.len()];
        for (i, &a) in coords.iter().enumerate() {
            local[a] = i;
        }
        let gens = weights::r_weights(quiver, d)
            .into_iter()
            .filter(|w| !w.is_zero() && local[w.plus] != usize::MAX && local[w.minus] != usize::MAX)
            .map(|w| (local[w.plus], local[w.minus]))
            .collect();
        let dims = weights::block_dims(&layout, coords);
        PolytopeSpec { n: coords.len(), gens, beta: weights::beta_diag(&dims) }
    }

    pub fn from_generators(n: usize, gens: Vec<(usize, usize)>, beta: Vec<Q>) -> Self {
        assert_eq!(beta.len(), n);
        PolytopeSpec { n, gens: gens.into_iter().filter(|(a, b)| a != b).collect(), beta }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[(usize, usize)] {
        &self.gens
    }

    pub fn beta(&self) -> &[Q] {
        &self.beta
    }

    fn check(&self, x: &[Q]) -> Result<()> {
        if x.len() != self.n {
            return Err(Error::Shape(format!("weight has {} coordinates, polytope has {}", x.len(), self.n)));
        }
        Ok(())
    }

    pub fn project(&self, chi: &[Q]) -> Vec<Q> {
        let w: Q = chi.iter().sum();
        chi.iter().zip(&self.beta).map(|(x, b)| x - &w * b).collect()
    }

    /// `h(lambda) = sum_k max(0, <lambda, beta_k>)`.
    pub fn h_plus(&self, lambda: &[Q]) -> Q {
        let mut acc = Q::zero();
        for &(a, b) in &self.gens {
            let p = &lambda[a] - &lambda[b];
            if p.is_positive() {
                acc += p;
            }
        }
        acc
    }

    fn h_plus_subset(&self, mask: u32) -> i64 {
        self.gens.iter().filter(|&&(a, b)| mask >> a & 1 == 1 && mask >> b & 1 == 0).count() as i64
    }

    fn equality_rows(&self, extra: Option<&[Q]>) -> Vec<Vec<Q>> {
        let k = self.gens.len();
        let width = k + usize::from(extra.is_some());
        let mut rows = vec![vec![Q::zero(); width]; self.n];
        for (j, &(a, b)) in self.gens.iter().enumerate() {
            rows[a][j] += q(1);
            rows[b][j] -= q(1);
        }
        if let Some(col) = extra {
            for (row, x) in rows.iter_mut().zip(col) {
                row[k] = x.clone();
            }
        }
        rows
    }

    /// Feasibility of `chi in r W̄` by a direct LP in the coefficients.
    pub fn contains(&self, chi: &[Q], r: &Q) -> Result<bool> {
        self.check(chi)?;
        if r.is_negative() {
            return Err(Error::Precondition("negative dilation".into()));
        }
        let chi0 = self.project(chi);
        if chi0.iter().all(|x| x.is_zero()) {
            return Ok(true);
        }
        if r.is_zero() {
            return Ok(false);
        }
        // sum_k c'_k beta_k = -chi0 with c'_k = -c_k in [0, r]
        let lp = Lp {
            rows: self.equality_rows(None),
            rhs: chi0.iter().map(|x| -x).collect(),
            upper: vec![Some(r.clone()); self.gens.len()],
            objective: vec![Q::zero(); self.gens.len()],
        };
        Ok(matches!(lp::solve(&lp), LpOutcome::Optimal(_)))
    }

    /// Minimal `r` by maximizing `t = 1/r` in `sum_k s_k beta_k + t chi0 = 0`, `s in [0,1]`.
    pub fn r_solution(&self, chi: &[Q]) -> Result<RSolution> {
        self.check(chi)?;
        let chi0 = self.project(chi);
        if chi0.iter().all(|x| x.is_zero()) {
            return Ok(RSolution { r: RValue::Finite(Q::zero()), chi0, certificate: None });
        }
        let k = self.gens.len();
        let mut upper = vec![Some(Q::one()); k];
        upper.push(None);
        let mut objective = vec![Q::zero(); k];
        objective.push(Q::one());
        let lp = Lp { rows: self.equality_rows(Some(&chi0)), rhs: vec![Q::zero(); self.n], upper, objective };
        let sol = match lp::solve(&lp) {
            LpOutcome::Optimal(s) => s,
            LpOutcome::Infeasible => return Err(Error::Invariant("r-LP infeasible at the origin".into())),
            LpOutcome::Unbounded => return Err(Error::Invariant("r-LP unbounded".into())),
        };
        if sol.value.is_zero() {
            return Ok(RSolution { r: RValue::Infinite, chi0, certificate: None });
        }
        let r = sol.value.recip();
        let lambda: Vec<Q> = sol.dual.iter().map(|y| -y).collect();
        let face_eq = crate::rational::dot(&lambda, &chi0) + &r * self.h_plus(&lambda);
        if !face_eq.is_zero() {
            return Err(Error::Invariant(format!("dual certificate is not tight (residual {face_eq})")));
        }
        Ok(RSolution { r: RValue::Finite(r), chi0, certificate: Some(lambda) })
    }

    pub fn r_invariant(&self, chi: &[Q]) -> Result<RValue> {
        Ok(self.r_solution(chi)?.r)
    }

    fn finite_r(&self, chi: &[Q]) -> Result<(Q, Vec<Q>)> {
        let s = self.r_solution(chi)?;
        match s.r {
            RValue::Finite(r) => Ok((r, s.chi0)),
            RValue::Infinite => Err(Error::InfiniteR),
        }
    }

    /// Number of generators whose coefficient is `-r` in every representation at `r = r(chi)`.
    pub fn p_invariant(&self, chi: &[Q]) -> Result<usize> {
        let (r, chi0) = self.finite_r(chi)?;
        if r.is_zero() {
            return Ok(0);
        }
        let k = self.gens.len();
        let rows = self.equality_rows(None);
        let rhs: Vec<Q> = chi0.iter().map(|x| -x / &r).collect();
        let mut forced = 0;
        for j in 0..k {
            let mut objective = vec![Q::zero(); k];
            objective[j] = -Q::one();
            let lp = Lp { rows: rows.clone(), rhs: rhs.clone(), upper: vec![Some(Q::one()); k], objective };
            let sol = lp::solve(&lp).optimal().ok_or_else(|| Error::Invariant("p-LP has no optimum".into()))?;
            if sol.x[j].is_one() {
                forced += 1;
            }
        }
        Ok(forced)
    }

    /// Indicator subsets satisfying `<1_S, chi0> + r h(1_S) = 0`, excluding the empty and full set.
    pub fn tight_subsets(&self, chi0: &[Q], r: &Q) -> Vec<Vec<usize>> {
        let n = self.n;
        let full: u32 = (1u32 << n) - 1;
        let mut out = Vec::new();
        for mask in 1..full {
            let s: Q = (0..n).filter(|&a| mask >> a & 1 == 1).map(|a| &chi0[a]).sum();
            if (s + r * q(self.h_plus_subset(mask))).is_zero() {
                out.push((0..n).filter(|&a| mask >> a & 1 == 1).collect());
            }
        }
        out
    }

    /// The face of `r W̄` containing `chi` in its relative interior, described by its normal cone.
    pub fn face_character(&self, chi: &[Q]) -> Result<Face> {
        let (r, chi0) = self.finite_r(chi)?;
        if r.is_zero() {
            return Err(Error::ZeroR);
        }
        let tight = self.tight_subsets(&chi0, &r);
        let n = self.n;
        // Coordinates are grouped by membership signature; groups with equal membership count are
        // ordered by their smallest coordinate.
        let sig = |a: usize| -> Vec<bool> { tight.iter().map(|s| s.contains(&a)).collect() };
        let mut groups: Vec<(usize, Vec<bool>, Vec<usize>)> = Vec::new();
        for a in 0..n {
            let sa = sig(a);
            match groups.iter_mut().find(|g| g.1 == sa) {
                Some(g) => g.2.push(a),
                None => groups.push((sa.iter().filter(|&&x| x).count(), sa, vec![a])),
            }
        }
        groups.sort_by(|x, y| x.0.cmp(&y.0).then(x.2[0].cmp(&y.2[0])));
        let mut lambda = vec![Q::zero(); n];
        for (level, g) in groups.iter().enumerate() {
            for &a in &g.2 {
                lambda[a] = q(level as i64);
            }
        }
        let shift = crate::rational::dot(&lambda, &self.beta);
        let lambda: Vec<Q> = lambda.iter().map(|x| x - &shift).collect();
        let face_eq = crate::rational::dot(&lambda, &chi0) + &r * self.h_plus(&lambda);
        if !face_eq.is_zero() {
            return Err(Error::Invariant("face character fails the face equation".into()));
        }
        let levels = groups.into_iter().map(|g| g.2).collect();
        Ok(Face { r, lambda, tight, levels })
    }

    /// Generators pairing positively with `lambda`.
    pub fn positive_generators(&self, lambda: &[Q]) -> Vec<(usize, usize)> {
        self.gens.iter().copied().filter(|&(a, b)| lambda[a] > lambda[b]).collect()
    }
}

/// `r` of `chi` for `(quiver, d)`.
pub fn r_invariant(quiver: &Quiver, d: &[u32], chi: &[Q]) -> Result<RValue> {
    PolytopeSpec::new(quiver, d)?.r_invariant(chi)
}

pub fn contains(quiver: &Quiver, d: &[u32], chi: &[Q], r: &Q) -> Result<bool> {
    PolytopeSpec::new(quiver, d)?.contains(chi, r)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SfNode {
    /// Global coordinates of the block this node acts on.
    pub coords: Vec<usize>,
    /// Incoming weight on the block (local coordinates).
    pub input: Vec<Q>,
    pub r: Q,
    /// Normalized face character on the block.
    pub lambda: Vec<Q>,
    /// `sum N^{lambda>0}` as a global weight.
    pub npos_sum: Vec<Q>,
    pub npos_count: usize,
    /// Every tight indicator subset (global coordinates); at `r = 1/2` these are the candidate
    /// characters of the face.
    pub tight: Vec<Vec<usize>>,
    pub children: Vec<SfTree>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SfLeaf {
    pub coords: Vec<usize>,
    pub dims: DimVec,
    /// Residual on the block (local coordinates).
    pub residual: Vec<Q>,
    pub r: Q,
    /// Whether the residual's r is strictly below 1/2.
    pub interior: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SfTree {
    Node(SfNode),
    Leaf(SfLeaf),
}

/// A block of a (possibly truncated) standard form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeviBlock {
    pub coords: Vec<usize>,
    pub dims: DimVec,
    pub residual: Vec<Q>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardForm {
    pub dims: DimVec,
    pub input: Vec<Q>,
    pub root: SfTree,
}

impl SfTree {
    pub fn coords(&self) -> &[usize] {
        match self {
            SfTree::Node(n) => &n.coords,
            SfTree::Leaf(l) => &l.coords,
        }
    }
}

fn decompose(quiver: &Quiver, d: &[u32], coords: Vec<usize>, psi: Vec<Q>, bound: Option<&Q>) -> Result<SfTree> {
    let layout = Layout::new(d);
    let spec = PolytopeSpec::for_block(quiver, d, &coords);
    let (r, _) = spec.finite_r(&psi)?;
    if let Some(b) = bound {
        if r >= *b {
            return Err(Error::Invariant(format!("r did not decrease: {r} after {b}")));
        }
    }
    if r < half() {
        let dims = weights::block_dims(&layout, &coords);
        return Ok(SfTree::Leaf(SfLeaf { coords, dims, residual: psi, r, interior: true }));
    }
    let face = spec.face_character(&psi)?;
    let npos = spec.positive_generators(&face.lambda);
    let mut shifted = psi.clone();
    let mut npos_sum = vec![Q::zero(); layout.len()];
    for &(a, b) in &npos {
        shifted[a] += &r;
        shifted[b] -= &r;
        npos_sum[coords[a]] += q(1);
        npos_sum[coords[b]] -= q(1);
    }
    let mut children = Vec::with_capacity(face.levels.len());
    for level in &face.levels {
        let sub: Vec<usize> = level.iter().map(|&a| coords[a]).collect();
        let sub_psi: Vec<Q> = level.iter().map(|&a| shifted[a].clone()).collect();
        children.push(decompose(quiver, d, sub, sub_psi, Some(&r))?);
    }
    let tight = face.tight.iter().map(|s| s.iter().map(|&a| coords[a]).collect()).collect();
    Ok(SfTree::Node(SfNode {
        coords,
        input: psi,
        r,
        lambda: face.lambda,
        npos_count: npos.len(),
        npos_sum,
        tight,
        children,
    }))
}

/// Standard form of `psi`, peeling every face with `r >= 1/2`.
pub fn standard_form(quiver: &Quiver, d: &[u32], psi: &[Q]) -> Result<StandardForm> {
    quiver.check_dim(d)?;
    check_capacity(d)?;
    let layout = Layout::new(d);
    layout.check(psi)?;
    let root = decompose(quiver, d, (0..layout.len()).collect(), psi.to_vec(), None)?;
    let sf = StandardForm { dims: d.to_vec(), input: psi.to_vec(), root };
    if sf.reconstruct() != sf.input {
        return Err(Error::Invariant("standard form does not reconstruct its input".into()));
    }
    Ok(sf)
}

impl StandardForm {
    pub fn nodes(&self) -> Vec<&SfNode> {
        fn go<'a>(t: &'a SfTree, out: &mut Vec<&'a SfNode>) {
            if let SfTree::Node(n) = t {
                out.push(n);
                for c in &n.children {
                    go(c, out);
                }
            }
        }
        let mut out = Vec::new();
        go(&self.root, &mut out);
        out
    }

    pub fn leaves(&self) -> Vec<&SfLeaf> {
        fn go<'a>(t: &'a SfTree, out: &mut Vec<&'a SfLeaf>) {
            match t {
                SfTree::Node(n) => n.children.iter().for_each(|c| go(c, out)),
                SfTree::Leaf(l) => out.push(l),
            }
        }
        let mut out = Vec::new();
        go(&self.root, &mut out);
        out
    }

    /// `-sum_nodes r N^{lambda>0} + sum_leaves residual`.
    pub fn reconstruct(&self) -> Vec<Q> {
        let mut acc = vec![Q::zero(); self.input.len()];
        for n in self.nodes() {
            for (x, y) in acc.iter_mut().zip(&n.npos_sum) {
                *x -= &n.r * y;
            }
        }
        for l in self.leaves() {
            for (&a, x) in l.coords.iter().zip(&l.residual) {
                acc[a] += x;
            }
        }
        acc
    }

    pub fn levi(&self) -> OrderedPartition {
        self.leaves().iter().map(|l| l.dims.clone()).collect()
    }

    /// Whether r decreases strictly along every root-to-leaf path and every node has r >= 1/2.
    pub fn paths_decrease(&self) -> bool {
        fn go(t: &SfTree, above: Option<&Q>) -> bool {
            match t {
                SfTree::Leaf(l) => above.is_none_or(|a| l.r < *a),
                SfTree::Node(n) => {
                    n.r >= half() && above.is_none_or(|a| n.r < *a) && n.children.iter().all(|c| go(c, Some(&n.r)))
                }
            }
        }
        go(&self.root, None)
    }

    /// Blocks obtained by only peeling faces with `r > 1/2`; the residual of a block is its
    /// incoming weight.
    pub fn truncate_big(&self) -> (Vec<&SfNode>, Vec<LeviBlock>) {
        fn go<'a>(t: &'a SfTree, layout: &Layout, big: &mut Vec<&'a SfNode>, out: &mut Vec<LeviBlock>) {
            match t {
                SfTree::Node(n) if n.r > half() => {
                    big.push(n);
                    n.children.iter().for_each(|c| go(c, layout, big, out));
                }
                SfTree::Node(n) => out.push(LeviBlock {
                    coords: n.coords.clone(),
                    dims: weights::block_dims(layout, &n.coords),
                    residual: n.input.clone(),
                }),
                SfTree::Leaf(l) => out.push(LeviBlock { coords: l.coords.clone(), dims: l.dims.clone(), residual: l.residual.clone() }),
            }
        }
        let layout = Layout::new(&self.dims);
        let mut big = Vec::new();
        let mut out = Vec::new();
        go(&self.root, &layout, &mut big, &mut out);
        (big, out)
    }

    pub fn max_r(&self) -> Option<Q> {
        self.nodes().iter().map(|n| n.r.clone()).max()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfFace {
    pub lambda: Vec<Q>,
    pub coords: Vec<usize>,
    pub candidates: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Admissible {
    pub big: Vec<(Vec<Q>, Q)>,
    pub half: Vec<HalfFace>,
    pub residual: Vec<Q>,
    pub levi: OrderedPartition,
    pub all_big: bool,
    pub all_half: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AdmissibleVerdict {
    NotAdmissible { levi: OrderedPartition },
    Admissible(Admissible),
}

impl AdmissibleVerdict {
    pub fn admissible(&self) -> Option<&Admissible> {
        match self {
            AdmissibleVerdict::Admissible(a) => Some(a),
            AdmissibleVerdict::NotAdmissible { .. } => None,
        }
    }

    pub fn is_all_half(&self) -> bool {
        self.admissible().is_some_and(|a| a.all_half)
    }

    pub fn is_all_big(&self) -> bool {
        self.admissible().is_some_and(|a| a.all_big)
    }
}

/// `sum_i w_i beta_{d_i}` placed block by block, together with the total dimension vector.
pub fn placed_weight(pairs: &[(DimVec, i64)]) -> Result<(DimVec, Vec<Q>, Vec<Vec<usize>>)> {
    let Some(first) = pairs.first() else {
        return Err(Error::Precondition("empty tuple".into()));
    };
    let n = first.0.len();
    let mut d = vec![0u32; n];
    for (di, _) in pairs {
        if di.len() != n {
            return Err(Error::Shape("dimension vectors of different length".into()));
        }
        d = crate::quiver::add(&d, di);
    }
    let parts: Vec<DimVec> = pairs.iter().map(|p| p.0.clone()).collect();
    let blocks = weights::place_blocks(&d, &parts)?;
    let mut chi = vec![Q::zero(); Layout::new(&d).len()];
    for ((di, wi), coords) in pairs.iter().zip(&blocks) {
        let b = weights::beta_diag(di);
        let bi: Vec<&Q> = b.iter().collect();
        for (k, &a) in coords.iter().enumerate() {
            chi[a] = q(*wi) * bi[k];
        }
    }
    Ok((d, chi, blocks))
}

/// Whether the standard form of `sum w_i beta_{d_i} + rho` has Levi exactly `prod G(d_i)`.
pub fn classify_admissible(quiver: &Quiver, pairs: &[(DimVec, i64)]) -> Result<AdmissibleVerdict> {
    let (d, chi, blocks) = placed_weight(pairs)?;
    quiver.check_dim(&d)?;
    let rho = weights::rho(&d);
    let psi: Vec<Q> = chi.iter().zip(&rho).map(|(a, b)| a + b).collect();
    let sf = standard_form(quiver, &d, &psi)?;
    let leaves = sf.leaves();
    let levi = sf.levi();
    let matches = leaves.len() == blocks.len() && leaves.iter().zip(&blocks).all(|(l, b)| l.coords == *b);
    if !matches {
        return Ok(AdmissibleVerdict::NotAdmissible { levi });
    }
    let mut big = Vec::new();
    let mut halves = Vec::new();
    for n in sf.nodes() {
        if n.r == half() {
            halves.push(HalfFace { lambda: n.lambda.clone(), coords: n.coords.clone(), candidates: n.tight.clone() });
        } else {
            big.push((n.lambda.clone(), n.r.clone()));
        }
    }
    let mut residual = vec![Q::zero(); psi.len()];
    for l in &leaves {
        for (&a, x) in l.coords.iter().zip(&l.residual) {
            residual[a] = x.clone();
        }
    }
    Ok(AdmissibleVerdict::Admissible(Admissible {
        all_big: halves.is_empty(),
        all_half: big.is_empty(),
        big,
        half: halves,
        residual,
        levi,
    }))
}

/// Every nonempty ordered subset of an all-half admissible tuple is again admissible with all
/// faces at `r = 1/2`.
pub fn subset_admissible_check(quiver: &Quiver, pairs: &[(DimVec, i64)]) -> Result<bool> {
    if !classify_admissible(quiver, pairs)?.is_all_half() {
        return Err(Error::Precondition("input is not admissible with r = 1/2".into()));
    }
    let k = pairs.len();
    for mask in 1u32..(1 << k) {
        let sub: Vec<(DimVec, i64)> = (0..k).filter(|&i| mask >> i & 1 == 1).map(|i| pairs[i].clone()).collect();
        let v = classify_admissible(quiver, &sub)?;
        if sub.len() > 1 && !v.is_all_half() {
            return Ok(false);
        }
        if v.admissible().is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, qvec};

    fn m_loops(m: usize) -> Quiver {
        Quiver::loops(m)
    }

    #[test]
    fn contains_examples() {
        let p = PolytopeSpec::new(&m_loops(3), &[2]).unwrap();
        assert!(p.contains(&qvec(&[0, 0]), &q(0)).unwrap());
        assert!(p.contains(&qvec(&[1, -1]), &frac(1, 3)).unwrap());
        assert!(!p.contains(&qvec(&[1, -1]), &frac(1, 4)).unwrap());
        let two = PolytopeSpec::new(&Quiver::two_cycle(), &[1, 1]).unwrap();
        assert!(two.contains(&qvec(&[0, 0]), &half()).unwrap());
    }

    #[test]
    fn r_examples() {
        let p = PolytopeSpec::new(&m_loops(3), &[2]).unwrap();
        assert_eq!(p.r_invariant(p.beta()).unwrap(), RValue::Finite(q(0)));
        for m in 1..=4usize {
            let p = PolytopeSpec::new(&m_loops(m), &[2]).unwrap();
            for c in 1..=4i64 {
                assert_eq!(p.r_invariant(&qvec(&[c, -c])).unwrap(), RValue::Finite(frac(c, m as i64)));
            }
        }
        let p = PolytopeSpec::new(&m_loops(0), &[2]).unwrap();
        assert_eq!(p.r_invariant(&qvec(&[1, -1])).unwrap(), RValue::Infinite);
    }

    #[test]
    fn p_examples() {
        let p = PolytopeSpec::new(&m_loops(3), &[2]).unwrap();
        assert_eq!(p.p_invariant(&qvec(&[1, 1])).unwrap(), 0);
        assert_eq!(p.p_invariant(&qvec(&[3, -3])).unwrap(), 3);
        assert_eq!(p.p_invariant(&qvec(&[2, -2])).unwrap(), 3);
    }

    #[test]
    fn face_examples() {
        let p = PolytopeSpec::new(&m_loops(3), &[2]).unwrap();
        let f = p.face_character(&qvec(&[1, -1])).unwrap();
        assert_eq!(f.lambda, vec![frac(-1, 2), frac(1, 2)]);
        assert_eq!(f.r, frac(1, 3));
        assert_eq!(p.face_character(&qvec(&[0, 0])), Err(Error::ZeroR));
    }

    #[test]
    fn standard_form_examples() {
        let q3 = m_loops(3);
        let sf = standard_form(&q3, &[2], &qvec(&[3, -3])).unwrap();
        let nodes = sf.nodes();
        assert_eq!(nodes.len(), 1);
        assert_eq!(nodes[0].r, q(1));
        assert_eq!(nodes[0].lambda, vec![frac(-1, 2), frac(1, 2)]);
        assert_eq!(nodes[0].npos_sum, qvec(&[-3, 3]));
        assert_eq!(sf.levi(), vec![vec![1], vec![1]]);
        assert!(sf.leaves().iter().all(|l| l.residual.iter().all(|x| x.is_zero())));

        let sf = standard_form(&q3, &[2], &[frac(1, 2), frac(-1, 2)]).unwrap();
        assert!(sf.nodes().is_empty());
        assert_eq!(sf.levi(), vec![vec![2]]);
        assert!(sf.paths_decrease());
    }

    #[test]
    fn admissible_examples() {
        for k in 0..=3i64 {
            let q = m_loops(2 * k as usize + 1);
            let v = classify_admissible(&q, &[(vec![1], k), (vec![1], -k)]).unwrap();
            let a = v.admissible().expect("admissible");
            assert!(a.all_half && a.big.is_empty());
            assert_eq!(a.half.len(), 1);
            assert!(subset_admissible_check(&q, &[(vec![1], k), (vec![1], -k)]).unwrap());
        }
        let s = classify_admissible(&m_loops(3), &[(vec![2], 5)]).unwrap();
        let a = s.admissible().unwrap();
        assert!(a.big.is_empty() && a.half.is_empty());
        for k in 1..=3usize {
            let v = classify_admissible(&m_loops(2 * k), &[(vec![1], 0), (vec![1], 0)]).unwrap();
            assert!(!v.is_all_half());
        }
    }
}
