//! Generators of the categories `N̄(d)_w`, the rank recursion for `N(d)_w`, the PBW bijection
//! check and the weight shifts used by the deformed symmetric algebra.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::polytope::{self, PolytopeSpec};
use crate::quiver::{self, DimVec, Quiver};
use crate::rational::{binomial, half, q, Q};
use crate::weights::{self, Layout};

pub type Pair = (DimVec, i64);

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneratorWeight {
    pub d: DimVec,
    pub w: i64,
    pub chi: Vec<Q>,
}

fn require_symmetric(quiver: &Quiver) -> Result<()> {
    if quiver.is_symmetric() {
        Ok(())
    } else {
        Err(Error::NotSymmetric)
    }
}

/// Dominant integral vectors with coordinates in per-coordinate integer ranges.
fn dominant_in_box(d: &[u32], lo: &[i64], hi: &[i64]) -> Vec<Vec<i64>> {
    let layout = Layout::new(d);
    let n = layout.len();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn go(a: usize, layout: &Layout, lo: &[i64], hi: &[i64], cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if a == lo.len() {
            out.push(cur.clone());
            return;
        }
        let mut top = hi[a];
        if a > 0 && layout.vertex_of(a - 1) == layout.vertex_of(a) {
            top = top.min(cur[a - 1]);
        }
        for x in (lo[a]..=top).rev() {
            cur.push(x);
            go(a + 1, layout, lo, hi, cur, out);
            cur.pop();
        }
    }
    go(0, &layout, lo, hi, &mut cur, &mut out);
    out
}

fn to_q(v: &[i64]) -> Vec<Q> {
    v.iter().map(|&x| q(x)).collect()
}

/// Integral dominant `chi` with `sum chi = w` and `chi + rho in (1/2) W̄`.
pub fn magic_generators(quiver: &Quiver, d: &[u32], w: i64) -> Result<Vec<GeneratorWeight>> {
    require_symmetric(quiver)?;
    let spec = PolytopeSpec::new(quiver, d)?;
    let layout = Layout::new(d);
    let n = layout.len();
    let rho = weights::rho(d);
    let beta = weights::beta_diag(d);
    let mut degree = vec![0i64; n];
    for &(a, b) in spec.generators() {
        degree[a] += 1;
        degree[b] += 1;
    }
    let wq = q(w);
    let mut lo = Vec::with_capacity(n);
    let mut hi = Vec::with_capacity(n);
    for a in 0..n {
        let centre = &wq * &beta[a] - &rho[a];
        let slack = Q::new(degree[a].into(), 2.into());
        lo.push(crate::rational::ceil(&(&centre - &slack)).try_into().unwrap_or(i64::MIN / 4));
        hi.push(crate::rational::floor(&(&centre + &slack)).try_into().unwrap_or(i64::MAX / 4));
    }
    let mut out = Vec::new();
    for chi in dominant_in_box(d, &lo, &hi) {
        if chi.iter().sum::<i64>() != w {
            continue;
        }
        let chi = to_q(&chi);
        let psi: Vec<Q> = chi.iter().zip(&rho).map(|(a, b)| a + b).collect();
        if spec.contains(&psi, &half())? {
            out.push(GeneratorWeight { d: d.to_vec(), w, chi });
        }
    }
    Ok(out)
}

/// `(Δ1, Δ2)`: `Δ1 = sum_v e^v(-d^v + sum_{v->u} d^u)`, `Δ2 = sum_v d^v(e^v - sum_{u->v} e^u)`.
pub fn weight_shift(quiver: &Quiver, d: &[u32], e: &[u32]) -> Result<(i64, i64)> {
    quiver.check_dim(d)?;
    quiver.check_dim(e)?;
    let n = quiver.vertex_count();
    let mut d1 = 0i64;
    let mut d2 = 0i64;
    for v in 0..n {
        d1 -= e[v] as i64 * d[v] as i64;
        d2 += d[v] as i64 * e[v] as i64;
    }
    for a in quiver.edges() {
        d1 += e[a.source] as i64 * d[a.target] as i64;
        d2 -= d[a.target] as i64 * e[a.source] as i64;
    }
    Ok((d1, d2))
}

/// Adjacent transposition on a tuple with the weight shifts.
pub fn tau(quiver: &Quiver, tuple: &[Pair], i: usize) -> Result<Vec<Pair>> {
    let (d, w) = &tuple[i];
    let (e, v) = &tuple[i + 1];
    let (d1, d2) = weight_shift(quiver, d, e)?;
    let mut out = tuple.to_vec();
    out[i] = (e.clone(), v + d1);
    out[i + 1] = (d.clone(), w + d2);
    Ok(out)
}

fn distinct_orderings(parts: &[DimVec]) -> Vec<Vec<DimVec>> {
    let mut sorted = parts.to_vec();
    sorted.sort();
    let mut out = vec![sorted.clone()];
    // next lexicographic permutation
    loop {
        let k = sorted.len();
        let Some(i) = (0..k.saturating_sub(1)).rev().find(|&i| sorted[i] < sorted[i + 1]) else { break };
        let j = (i + 1..k).rev().find(|&j| sorted[j] > sorted[i]).unwrap();
        sorted.swap(i, j);
        sorted[i + 1..].reverse();
        out.push(sorted.clone());
    }
    out
}

/// Integer window for `w_i` in a tuple of total weight `w` with block order `parts`: necessary for
/// `r(chi + rho) <= 1/2`.
pub fn half_windows(quiver: &Quiver, d: &[u32], parts: &[DimVec], w: i64) -> Result<Vec<(i64, i64)>> {
    let blocks = weights::place_blocks(d, parts)?;
    let spec = PolytopeSpec::new(quiver, d)?;
    let rho = weights::rho(d);
    let beta = weights::beta_diag(d);
    let n = rho.len();
    let mut out = Vec::with_capacity(blocks.len());
    for b in &blocks {
        let mut inside = vec![false; n];
        for &a in b {
            inside[a] = true;
        }
        let crossing = spec.generators().iter().filter(|&&(x, y)| inside[x] != inside[y]).count() as i64;
        let bi: Q = b.iter().map(|&a| &beta[a]).sum();
        let ri: Q = b.iter().map(|&a| &rho[a]).sum();
        let centre = q(w) * bi - ri;
        let slack = Q::new(crossing.into(), 2.into());
        let lo = crate::rational::ceil(&(&centre - &slack));
        let hi = crate::rational::floor(&(&centre + &slack));
        out.push((i64::try_from(lo).unwrap(), i64::try_from(hi).unwrap()));
    }
    Ok(out)
}

fn weight_tuples(windows: &[(i64, i64)], w: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    fn go(k: usize, windows: &[(i64, i64)], rem: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if k + 1 == windows.len() {
            if windows[k].0 <= rem && rem <= windows[k].1 {
                cur.push(rem);
                out.push(cur.clone());
                cur.pop();
            }
            return;
        }
        for x in windows[k].0..=windows[k].1 {
            cur.push(x);
            go(k + 1, windows, rem - x, cur, out);
            cur.pop();
        }
    }
    if !windows.is_empty() {
        go(0, windows, w, &mut Vec::new(), &mut out);
    }
    out
}

/// Every ordered tuple with at least two parts, total `(d, w)`, admissible with all faces at
/// `r = 1/2`.
pub fn all_half_tuples(quiver: &Quiver, d: &[u32], w: i64) -> Result<Vec<Vec<Pair>>> {
    require_symmetric(quiver)?;
    polytope::check_capacity(d)?;
    let mut out = Vec::new();
    for parts in quiver::multiset_partitions(d) {
        if parts.len() < 2 {
            continue;
        }
        for order in distinct_orderings(&parts) {
            let windows = half_windows(quiver, d, &order, w)?;
            for ws in weight_tuples(&windows, w) {
                let tuple: Vec<Pair> = order.iter().cloned().zip(ws).collect();
                if polytope::classify_admissible(quiver, &tuple)?.is_all_half() {
                    out.push(tuple);
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

/// One orbit of all-half tuples under the adjacent transpositions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitTerm {
    pub representative: Vec<Pair>,
    pub size: usize,
    pub contribution: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Decomposition {
    pub nbar: u64,
    pub n: u64,
    pub orbits: Vec<OrbitTerm>,
    /// Tuples whose transposition image left the admissible set.
    pub closure_violations: Vec<Vec<Pair>>,
}

/// Memoized ranks of `N̄(d)_w` and `N(d)_w`.
pub struct Ranks {
    quiver: Quiver,
    nbar: HashMap<Pair, u64>,
    decomp: HashMap<Pair, Decomposition>,
}

fn multiset_count(pairs: &[Pair], rank: &mut dyn FnMut(&Pair) -> Result<u64>) -> Result<u64> {
    let mut mult: BTreeMap<&Pair, u64> = BTreeMap::new();
    for p in pairs {
        *mult.entry(p).or_default() += 1;
    }
    let mut acc = 1u64;
    for (p, m) in mult {
        let n = rank(p)?;
        acc *= binomial(n + m - 1, m);
    }
    Ok(acc)
}

impl Ranks {
    pub fn new(quiver: &Quiver) -> Result<Self> {
        require_symmetric(quiver)?;
        Ok(Ranks { quiver: quiver.clone(), nbar: HashMap::new(), decomp: HashMap::new() })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn nbar_rank(&mut self, d: &[u32], w: i64) -> Result<u64> {
        let key = (d.to_vec(), w);
        if let Some(&n) = self.nbar.get(&key) {
            return Ok(n);
        }
        let n = magic_generators(&self.quiver, d, w)?.len() as u64;
        self.nbar.insert(key, n);
        Ok(n)
    }

    pub fn n_rank(&mut self, d: &[u32], w: i64) -> Result<u64> {
        Ok(self.decomposition(d, w)?.n)
    }

    /// `nbar(d,w) = n(d,w) + sum over orbits of all-half tuples of the symmetrized products`.
    pub fn decomposition(&mut self, d: &[u32], w: i64) -> Result<Decomposition> {
        let key = (d.to_vec(), w);
        if let Some(dec) = self.decomp.get(&key) {
            return Ok(dec.clone());
        }
        let nbar = self.nbar_rank(d, w)?;
        let tuples = all_half_tuples(&self.quiver, d, w)?;
        let index: HashMap<&Vec<Pair>, usize> = tuples.iter().enumerate().map(|(i, t)| (t, i)).collect();
        let mut parent: Vec<usize> = (0..tuples.len()).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let nx = p[y];
                p[y] = r;
                y = nx;
            }
            r
        }
        let mut violations = Vec::new();
        for (i, t) in tuples.iter().enumerate() {
            for k in 0..t.len() - 1 {
                let img = tau(&self.quiver, t, k)?;
                match index.get(&img) {
                    Some(&j) => {
                        let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                        if a != b {
                            parent[a.max(b)] = a.min(b);
                        }
                    }
                    None => violations.push(t.clone()),
                }
            }
        }
        let mut orbits: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
        for i in 0..tuples.len() {
            let r = find(&mut parent, i);
            let e = orbits.entry(r).or_insert((i, 0));
            e.1 += 1;
        }
        let mut terms = Vec::with_capacity(orbits.len());
        let mut subtract = 0u64;
        for (_, (rep, size)) in orbits {
            let representative = tuples[rep].clone();
            let contribution = multiset_count(&representative, &mut |p| self.n_rank(&p.0, p.1))?;
            subtract += contribution;
            terms.push(OrbitTerm { representative, size, contribution });
        }
        if subtract > nbar {
            return Err(Error::NegativeRank { d: d.to_vec(), w, rank: nbar as i64 - subtract as i64 });
        }
        let dec = Decomposition { nbar, n: nbar - subtract, orbits: terms, closure_violations: violations };
        self.decomp.insert(key, dec.clone());
        Ok(dec)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PbwEntry {
    pub chi: Vec<Q>,
    pub tuple: Vec<Pair>,
    pub components: Vec<Vec<Q>>,
    /// Diagonal multiples `v_i` recovered from the peeled part of the standard form.
    pub shifts: Vec<Q>,
    pub r_values: Vec<Q>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PbwFailure {
    pub chi: Vec<Q>,
    pub reason: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PbwReport {
    pub checked: usize,
    pub entries: Vec<PbwEntry>,
    pub failures: Vec<PbwFailure>,
    /// Entries whose diagonal multiple is not an integer (recorded, not a failure).
    pub fractional_shifts: usize,
}

impl PbwReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn pbw_entry(quiver: &Quiver, d: &[u32], chi: &[Q]) -> std::result::Result<PbwEntry, String> {
    let err = |e: Error| e.to_string();
    let layout = Layout::new(d);
    let rho = weights::rho(d);
    let psi: Vec<Q> = chi.iter().zip(&rho).map(|(a, b)| a + b).collect();
    let sf = polytope::standard_form(quiver, d, &psi).map_err(err)?;
    let (big, blocks) = sf.truncate_big();
    let dims: Vec<DimVec> = blocks.iter().map(|b| b.dims.clone()).collect();
    let placed = weights::place_blocks(d, &dims).map_err(err)?;
    if placed.iter().zip(&blocks).any(|(p, b)| *p != b.coords) {
        return Err("Levi blocks are not in placement order".into());
    }
    let mut peeled = vec![Q::zero(); layout.len()];
    for n in &big {
        for (x, y) in peeled.iter_mut().zip(&n.npos_sum) {
            *x -= &n.r * y;
        }
    }
    let mut tuple = Vec::with_capacity(blocks.len());
    let mut components = Vec::with_capacity(blocks.len());
    let mut shifts = Vec::with_capacity(blocks.len());
    let mut rebuilt = vec![Q::zero(); layout.len()];
    for b in &blocks {
        let rho_i = weights::rho(&b.dims);
        let beta_i = weights::beta_diag(&b.dims);
        // (-sum r N - rho^{lambda>0}) on the block is v_i beta_{d_i}
        let excess: Vec<Q> =
            b.coords.iter().enumerate().map(|(k, &a)| &peeled[a] - (&rho[a] - &rho_i[k])).collect();
        let v = &excess[0] / &beta_i[0];
        if excess.iter().zip(&beta_i).any(|(x, bb)| *x != &v * bb) {
            return Err(format!("peeled part on block {:?} is not diagonal", b.coords));
        }
        let chi_i: Vec<Q> =
            (0..b.coords.len()).map(|k| &b.residual[k] + &v * &beta_i[k] - &rho_i[k]).collect();
        let restricted: Vec<Q> = b.coords.iter().map(|&a| chi[a].clone()).collect();
        if chi_i != restricted {
            return Err("component weight disagrees with the restriction of chi".into());
        }
        if !crate::rational::is_integral(&chi_i) || !weights::is_dominant(&b.dims, &chi_i) {
            return Err("component weight is not dominant integral".into());
        }
        let shifted: Vec<Q> = chi_i.iter().zip(&rho_i).map(|(a, c)| a + c).collect();
        let spec = PolytopeSpec::new(quiver, &b.dims).map_err(err)?;
        if !spec.contains(&shifted, &half()).map_err(err)? {
            return Err(format!("component on {:?} is outside (1/2)W̄", b.dims));
        }
        let w_i = crate::rational::to_i64(&chi_i.iter().sum()).ok_or("non-integral component weight")?;
        for (&a, x) in b.coords.iter().zip(&chi_i) {
            rebuilt[a] += x;
        }
        tuple.push((b.dims.clone(), w_i));
        components.push(chi_i);
        shifts.push(v);
    }
    if rebuilt != chi {
        return Err("components do not sum to chi".into());
    }
    if tuple.len() > 1 {
        let verdict = polytope::classify_admissible(quiver, &tuple).map_err(err)?;
        if !verdict.is_all_big() {
            return Err(format!("tuple {tuple:?} is not admissible with r > 1/2"));
        }
    }
    Ok(PbwEntry { chi: chi.to_vec(), tuple, components, shifts, r_values: big.iter().map(|n| n.r.clone()).collect() })
}

/// Decomposes every dominant integral `chi` in `[-bound, bound]^n` through the standard form of
/// `chi + rho` truncated at `r > 1/2`, and checks the resulting tuples.
pub fn pbw_bijection_check(quiver: &Quiver, d: &[u32], bound: i64) -> Result<PbwReport> {
    require_symmetric(quiver)?;
    quiver.check_dim(d)?;
    polytope::check_capacity(d)?;
    let n = Layout::new(d).len();
    let candidates = dominant_in_box(d, &vec![-bound; n], &vec![bound; n]);
    let results: Vec<(Vec<Q>, std::result::Result<PbwEntry, String>)> = candidates
        .par_iter()
        .map(|c| {
            let chi = to_q(c);
            let r = pbw_entry(quiver, d, &chi);
            (chi, r)
        })
        .collect();
    let mut report = PbwReport { checked: results.len(), ..Default::default() };
    let mut seen: HashSet<(Vec<Pair>, Vec<Vec<Q>>)> = HashSet::new();
    for (chi, r) in results {
        match r {
            Ok(e) => {
                if !seen.insert((e.tuple.clone(), e.components.clone())) {
                    report.failures.push(PbwFailure { chi, reason: "assignment is not injective".into() });
                    continue;
                }
                if e.shifts.iter().any(|v| !v.is_integer()) {
                    report.fractional_shifts += 1;
                }
                report.entries.push(e);
            }
            Err(reason) => report.failures.push(PbwFailure { chi, reason }),
        }
    }
    Ok(report)
}

/// Declared ranks of generator spaces, with the weight window in which they are known.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BaseRanks {
    pub w_min: i64,
    pub w_max: i64,
    pub ranks: BTreeMap<Pair, u64>,
}

impl BaseRanks {
    pub fn get(&self, d: &[u32], w: i64) -> Result<u64> {
        if w < self.w_min || w > self.w_max {
            return Err(Error::WindowTooSmall { d: d.to_vec(), w });
        }
        Ok(self.ranks.get(&(d.to_vec(), w)).copied().unwrap_or(0))
    }

    /// Ranks of `N(d')_w` for every `d' <= d` and `w` in the window.
    pub fn from_recursion(ranks: &mut Ranks, d: &[u32], w_min: i64, w_max: i64) -> Result<Self> {
        let mut out = BTreeMap::new();
        for sub in quiver::sub_vectors(d) {
            for w in w_min..=w_max {
                let n = ranks.n_rank(&sub, w)?;
                if n > 0 {
                    out.insert((sub.clone(), w), n);
                }
            }
        }
        Ok(BaseRanks { w_min, w_max, ranks: out })
    }
}

/// Canonical order of dSym generators on pairs: lexicographic in `d`, then `w` in the direction
/// that makes same-`d` rewriting terminate (descending when `Δ1(d,d) >= 0`).
pub fn pair_key(quiver: &Quiver, d: &[u32], w: i64) -> Result<(DimVec, i64)> {
    let (d1, _) = weight_shift(quiver, d, d)?;
    Ok((d.to_vec(), if d1 >= 0 { w } else { -w }))
}

/// Number of normal-form monomials of dimension `d` and weight `w`, for each `w` in the window.
///
/// A monomial of two or more letters is counted when its pair tuple, read in canonical (weakly
/// decreasing) order, is admissible with all faces at `r = 1/2`.
pub fn dsym_graded_dimension(
    quiver: &Quiver,
    base: &BaseRanks,
    d: &[u32],
    w_min: i64,
    w_max: i64,
) -> Result<Vec<(i64, u64)>> {
    require_symmetric(quiver)?;
    let mut out = Vec::new();
    for w in w_min..=w_max {
        if quiver::is_zero(d) {
            out.push((w, u64::from(w == 0)));
            continue;
        }
        let mut count = base.get(d, w)?;
        let mut seen = BTreeSet::new();
        for t in all_half_tuples(quiver, d, w)? {
            let keys: Vec<(DimVec, i64)> = t.iter().map(|(di, wi)| pair_key(quiver, di, *wi)).collect::<Result<_>>()?;
            if !keys.windows(2).all(|k| k[0] >= k[1]) || !seen.insert(t.clone()) {
                continue;
            }
            count += multiset_count(&t, &mut |p| base.get(&p.0, p.1))?;
        }
        out.push((w, count));
    }
    Ok(out)
}
