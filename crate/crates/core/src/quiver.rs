//! Quivers, dimension vectors, the Euler form, slopes and ordered partitions.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Q;

/// Per-vertex dimensions, compared lexicographically.
pub type DimVec = Vec<u32>;

/// An ordered list of nonzero dimension vectors.
pub type OrderedPartition = Vec<DimVec>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    Orig,
    Bar,
    Omega,
}

/// An edge with an optional role and a torus weight `q1^a q2^b` stored as `(a, b)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub source: usize,
    pub target: usize,
    pub role: Option<Role>,
    pub weight: (i32, i32),
}

impl Edge {
    pub fn plain(source: usize, target: usize) -> Self {
        Edge { source, target, role: None, weight: (0, 0) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: usize,
    edges: Vec<Edge>,
}

impl Quiver {
    pub fn new(vertices: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::from_edges(vertices, edges.iter().map(|&(s, t)| Edge::plain(s, t)).collect())
    }

    pub fn from_edges(vertices: usize, edges: Vec<Edge>) -> Result<Self> {
        for e in &edges {
            if e.source >= vertices || e.target >= vertices {
                return Err(Error::Malformed(format!(
                    "edge {}->{} uses an undeclared vertex (have {vertices})",
                    e.source, e.target
                )));
            }
        }
        Ok(Quiver { vertices, edges })
    }

    /// One vertex with `m` loops.
    pub fn loops(m: usize) -> Self {
        Quiver { vertices: 1, edges: (0..m).map(|_| Edge::plain(0, 0)).collect() }
    }

    pub fn jordan() -> Self {
        Self::loops(1)
    }

    /// Two vertices with one edge in each direction.
    pub fn two_cycle() -> Self {
        Quiver { vertices: 2, edges: vec![Edge::plain(0, 1), Edge::plain(1, 0)] }
    }

    /// Linear quiver 0 -> 1 -> ... -> n-1.
    pub fn a_n(n: usize) -> Self {
        Quiver { vertices: n, edges: (1..n).map(|i| Edge::plain(i - 1, i)).collect() }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Number of edges `i -> j`.
    pub fn multiplicity(&self, i: usize, j: usize) -> usize {
        self.edges.iter().filter(|e| e.source == i && e.target == j).count()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.vertices)
            .all(|i| (i..self.vertices).all(|j| self.multiplicity(i, j) == self.multiplicity(j, i)))
    }

    pub fn has_weights(&self) -> bool {
        self.edges.iter().any(|e| e.role.is_some() || e.weight != (0, 0))
    }

    pub fn check_dim(&self, d: &[u32]) -> Result<()> {
        if d.len() != self.vertices {
            return Err(Error::Shape(format!(
                "dimension vector has {} entries, quiver has {} vertices",
                d.len(),
                self.vertices
            )));
        }
        Ok(())
    }

    /// `(d,e) = sum_i d^i e^i - sum_edges d^s e^t`.
    pub fn euler_form(&self, d: &[u32], e: &[u32]) -> Result<i64> {
        self.check_dim(d)?;
        self.check_dim(e)?;
        let diag: i64 = d.iter().zip(e).map(|(&a, &b)| a as i64 * b as i64).sum();
        let arrows: i64 =
            self.edges.iter().map(|a| d[a.source] as i64 * e[a.target] as i64).sum();
        Ok(diag - arrows)
    }

    /// Tripled quiver: each edge, its reverse, and a loop per vertex, with torus weights
    /// `q1`, `q2`, `q1^-1 q2^-1`.
    pub fn tripled(&self) -> Quiver {
        let mut edges = Vec::with_capacity(2 * self.edges.len() + self.vertices);
        for e in &self.edges {
            edges.push(Edge { source: e.source, target: e.target, role: Some(Role::Orig), weight: (1, 0) });
        }
        for e in &self.edges {
            edges.push(Edge { source: e.target, target: e.source, role: Some(Role::Bar), weight: (0, 1) });
        }
        for i in 0..self.vertices {
            edges.push(Edge { source: i, target: i, role: Some(Role::Omega), weight: (-1, -1) });
        }
        Quiver { vertices: self.vertices, edges }
    }

    /// Each edge together with its reverse.
    pub fn doubled(&self) -> Quiver {
        let mut edges = Vec::with_capacity(2 * self.edges.len());
        for e in &self.edges {
            edges.push(Edge { source: e.source, target: e.target, role: Some(Role::Orig), weight: (1, 0) });
        }
        for e in &self.edges {
            edges.push(Edge { source: e.target, target: e.source, role: Some(Role::Bar), weight: (0, 1) });
        }
        Quiver { vertices: self.vertices, edges }
    }

    /// Adds a framing vertex (index `n`) with `f^i` edges into vertex `i`.
    pub fn framed(&self, f: &[u32]) -> Result<Quiver> {
        self.check_dim(f)?;
        let inf = self.vertices;
        let mut edges = self.edges.clone();
        for (i, &k) in f.iter().enumerate() {
            for _ in 0..k {
                edges.push(Edge::plain(inf, i));
            }
        }
        Ok(Quiver { vertices: inf + 1, edges })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&QuiverFile::from(self)).expect("quiver serializes")
    }

    pub fn from_json(s: &str) -> Result<Quiver> {
        let file: QuiverFile =
            serde_json::from_str(s).map_err(|e| Error::Malformed(format!("quiver file: {e}")))?;
        file.try_into()
    }
}

/// On-disk quiver description.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct QuiverFile {
    pub vertices: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default)]
    pub symmetric: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub roles: Option<Vec<Role>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<[i32; 2]>>,
}

impl From<&Quiver> for QuiverFile {
    fn from(q: &Quiver) -> Self {
        let labelled = q.has_weights();
        QuiverFile {
            vertices: q.vertices,
            edges: q.edges.iter().map(|e| [e.source, e.target]).collect(),
            symmetric: Some(q.is_symmetric()),
            roles: if labelled && q.edges.iter().all(|e| e.role.is_some()) {
                Some(q.edges.iter().map(|e| e.role.unwrap()).collect())
            } else {
                None
            },
            weights: labelled.then(|| q.edges.iter().map(|e| [e.weight.0, e.weight.1]).collect()),
        }
    }
}

impl TryFrom<QuiverFile> for Quiver {
    type Error = Error;

    fn try_from(f: QuiverFile) -> Result<Quiver> {
        let n = f.edges.len();
        if f.roles.as_ref().is_some_and(|r| r.len() != n) {
            return Err(Error::Malformed("roles length differs from edges".into()));
        }
        if f.weights.as_ref().is_some_and(|w| w.len() != n) {
            return Err(Error::Malformed("weights length differs from edges".into()));
        }
        let edges = f
            .edges
            .iter()
            .enumerate()
            .map(|(k, &[s, t])| {
                let role = f.roles.as_ref().map(|r| r[k]);
                let weight = match (&f.weights, role) {
                    (Some(w), _) => (w[k][0], w[k][1]),
                    (None, Some(Role::Orig)) => (1, 0),
                    (None, Some(Role::Bar)) => (0, 1),
                    (None, Some(Role::Omega)) => (-1, -1),
                    (None, None) => (0, 0),
                };
                Edge { source: s, target: t, role, weight }
            })
            .collect();
        let q = Quiver::from_edges(f.vertices, edges)?;
        if f.symmetric == Some(true) && !q.is_symmetric() {
            return Err(Error::Malformed("quiver flagged symmetric but edge counts disagree".into()));
        }
        Ok(q)
    }
}

pub fn total(d: &[u32]) -> u32 {
    d.iter().sum()
}

pub fn is_zero(d: &[u32]) -> bool {
    d.iter().all(|&x| x == 0)
}

pub fn add(d: &[u32], e: &[u32]) -> DimVec {
    d.iter().zip(e).map(|(a, b)| a + b).collect()
}

/// `mu(d) = sum theta^i d^i / sum d^i`; `None` stands for the slope of the zero vector.
pub fn slope(theta: &[Q], d: &[u32]) -> Option<Q> {
    let t = total(d);
    if t == 0 {
        return None;
    }
    let num: Q = theta.iter().zip(d).map(|(th, &x)| th * crate::rational::q(x as i64)).sum();
    Some(num / crate::rational::q(t as i64))
}

pub fn lex_compare(d: &[u32], e: &[u32]) -> Ordering {
    d.cmp(e)
}

/// All nonzero vectors `p <= d` coordinatewise, in lexicographic order.
pub fn sub_vectors(d: &[u32]) -> Vec<DimVec> {
    let mut out = vec![Vec::new()];
    for &x in d {
        out = out
            .into_iter()
            .flat_map(|p: DimVec| {
                (0..=x).map(move |k| {
                    let mut p = p.clone();
                    p.push(k);
                    p
                })
            })
            .collect();
    }
    out.retain(|p| !is_zero(p));
    out
}

/// Every ordered partition of `d` into nonzero parts. `d = 0` gives the empty partition.
pub fn ordered_partitions(d: &[u32]) -> Vec<OrderedPartition> {
    if is_zero(d) {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in sub_vectors(d) {
        let rest: DimVec = d.iter().zip(&first).map(|(a, b)| a - b).collect();
        for mut tail in ordered_partitions(&rest) {
            tail.insert(0, first.clone());
            out.push(tail);
        }
    }
    out
}

/// Unordered partitions of `d`, each listed with parts in weakly decreasing lex order.
pub fn multiset_partitions(d: &[u32]) -> Vec<OrderedPartition> {
    fn go(rem: &[u32], cap: Option<&DimVec>, acc: &mut Vec<DimVec>, out: &mut Vec<OrderedPartition>) {
        if is_zero(rem) {
            out.push(acc.clone());
            return;
        }
        for p in sub_vectors(rem).into_iter().rev() {
            if cap.is_some_and(|c| p > *c) {
                continue;
            }
            let next: DimVec = rem.iter().zip(&p).map(|(a, b)| a - b).collect();
            acc.push(p.clone());
            go(&next, Some(&p), acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(d, None, &mut Vec::new(), &mut out);
    out
}

/// Harder-Narasimhan types: ordered partitions with strictly increasing slopes.
pub fn hn_types(q: &Quiver, theta: &[Q], d: &[u32]) -> Result<Vec<OrderedPartition>> {
    q.check_dim(d)?;
    if theta.len() != q.vertex_count() {
        return Err(Error::Shape("stability has wrong length".into()));
    }
    let mut out: Vec<OrderedPartition> = ordered_partitions(d)
        .into_iter()
        .filter(|p| {
            p.windows(2).all(|w| slope(theta, &w[0]).unwrap() < slope(theta, &w[1]).unwrap())
        })
        .collect();
    out.sort();
    Ok(out)
}

/// Whether `fine` is obtained from `coarse` by splitting each part into consecutive pieces.
pub fn is_refinement(fine: &[DimVec], coarse: &[DimVec]) -> Result<bool> {
    let sum = |p: &[DimVec]| -> Option<DimVec> {
        p.iter().cloned().reduce(|a, b| add(&a, &b))
    };
    if sum(fine) != sum(coarse) {
        return Err(Error::Precondition("partitions have different totals".into()));
    }
    let mut it = fine.iter();
    for target in coarse {
        let mut acc = vec![0; target.len()];
        while acc != *target {
            let Some(p) = it.next() else { return Ok(false) };
            acc = add(&acc, p);
            if acc.iter().zip(target).any(|(a, t)| a > t) {
                return Ok(false);
            }
        }
    }
    Ok(it.next().is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, q};

    #[test]
    fn euler_examples() {
        assert_eq!(Quiver::jordan().euler_form(&[2], &[3]).unwrap(), 0);
        assert_eq!(Quiver::a_n(2).euler_form(&[1, 0], &[0, 1]).unwrap(), -1);
        assert_eq!(Quiver::loops(3).euler_form(&[1], &[1]).unwrap(), -2);
        assert!(Quiver::jordan().euler_form(&[1, 1], &[1]).is_err());
    }

    #[test]
    fn slopes() {
        assert_eq!(slope(&[q(1), q(2)], &[1, 1]), Some(frac(3, 2)));
        assert_eq!(slope(&[q(0), q(0)], &[2, 1]), Some(q(0)));
        assert_eq!(slope(&[q(1)], &[0]), None);
    }

    #[test]
    fn tripled_shapes() {
        let t = Quiver::jordan().tripled();
        assert_eq!(t.vertex_count(), 1);
        assert_eq!(t.edges().len(), 3);
        assert!(t.edges().iter().all(|e| e.source == 0 && e.target == 0));
        let t0 = Quiver::loops(0).tripled();
        assert_eq!(t0.edges().len(), 1);
        assert_eq!(t0.edges()[0].role, Some(Role::Omega));
        let ta = Quiver::a_n(3).tripled();
        assert!(ta.is_symmetric());
        assert_eq!(ta.multiplicity(0, 1), 1);
        assert_eq!(ta.multiplicity(1, 0), 1);
        assert_eq!(ta.multiplicity(1, 1), 1);
        assert_eq!(ta.multiplicity(0, 2), 0);
    }

    #[test]
    fn framed_shapes() {
        let j = Quiver::jordan().framed(&[0]).unwrap();
        assert_eq!((j.vertex_count(), j.edges().len()), (2, 1));
        let j = Quiver::jordan().framed(&[1]).unwrap();
        assert_eq!((j.vertex_count(), j.edges().len()), (2, 2));
        assert_eq!(j.multiplicity(1, 0), 1);
        let a = Quiver::a_n(2).framed(&[1, 1]).unwrap();
        assert_eq!((a.vertex_count(), a.edges().len()), (3, 3));
    }

    #[test]
    fn hn_examples() {
        let a2 = Quiver::a_n(2);
        assert_eq!(hn_types(&a2, &[q(0), q(0)], &[1, 1]).unwrap(), vec![vec![vec![1, 1]]]);
        let got = hn_types(&a2, &[q(0), q(1)], &[1, 1]).unwrap();
        assert_eq!(got, vec![vec![vec![1, 0], vec![0, 1]], vec![vec![1, 1]]]);
        assert_eq!(hn_types(&a2, &[q(0), q(1)], &[0, 0]).unwrap(), vec![Vec::<DimVec>::new()]);
    }

    #[test]
    fn refinements() {
        assert!(is_refinement(&[vec![1], vec![1]], &[vec![2]]).unwrap());
        assert!(!is_refinement(&[vec![2]], &[vec![1], vec![1]]).unwrap());
        let fine = [vec![1, 0], vec![0, 1], vec![1, 0]];
        assert!(is_refinement(&fine, &[vec![1, 1], vec![1, 0]]).unwrap());
        assert!(!is_refinement(&fine, &[vec![2, 0], vec![0, 1]]).unwrap());
        assert!(is_refinement(&[vec![1]], &[vec![2]]).is_err());
    }

    #[test]
    fn partition_counts() {
        // ordered partitions of (2) are (2), (1,1); of (1,1) there are 3.
        assert_eq!(ordered_partitions(&[2]).len(), 2);
        assert_eq!(ordered_partitions(&[1, 1]).len(), 3);
        assert_eq!(multiset_partitions(&[3]), vec![vec![vec![3]], vec![vec![2], vec![1]], vec![vec![1], vec![1], vec![1]]]);
        assert_eq!(multiset_partitions(&[1, 1]).len(), 2);
    }

    #[test]
    fn json_round_trip() {
        let t = Quiver::a_n(2).tripled();
        let back = Quiver::from_json(&t.to_json()).unwrap();
        assert_eq!(back, t);
        let plain = Quiver::from_json(r#"{"vertices": 2, "edges": [[0,1],[1,0]], "symmetric": true}"#).unwrap();
        assert_eq!(plain, Quiver::two_cycle());
        assert!(Quiver::from_json(r#"{"vertices": 2, "edges": [[0,1]], "symmetric": true}"#).is_err());
        assert!(Quiver::from_json(r#"{"vertices": 1, "edges": [[0,1]]}"#).is_err());
    }
}
