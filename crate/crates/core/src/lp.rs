//! Exact bounded-variable primal simplex over `BigRational`.
//!
//! Solves `max c.x` subject to `A x = b`, `0 <= x <= u` (with `u` possibly infinite), using a
//! dense tableau, a two-phase start with one artificial per row and Bland's rule.

use num_traits::{Signed, Zero};

use crate::rational::Q;

#[derive(Clone, Debug)]
pub struct Lp {
    pub rows: Vec<Vec<Q>>,
    pub rhs: Vec<Q>,
    pub upper: Vec<Option<Q>>,
    pub objective: Vec<Q>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpSolution {
    pub x: Vec<Q>,
    pub value: Q,
    /// Multipliers `y` of the equality rows: `c_j - y.A_j` is `<= 0` at lower bound,
    /// `>= 0` at upper bound and `0` for basic columns.
    pub dual: Vec<Q>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal(LpSolution),
    Infeasible,
    Unbounded,
}

impl LpOutcome {
    pub fn optimal(self) -> Option<LpSolution> {
        match self {
            LpOutcome::Optimal(s) => Some(s),
            _ => None,
        }
    }
}

struct Tableau {
    t: Vec<Vec<Q>>,
    beta: Vec<Q>,
    basis: Vec<usize>,
    basic_row: Vec<Option<usize>>,
    at_upper: Vec<bool>,
    upper: Vec<Option<Q>>,
}

enum Step {
    Optimal,
    Unbounded,
    Moved,
}

impl Tableau {
    fn value(&self, j: usize) -> Q {
        match self.basic_row[j] {
            Some(r) => self.beta[r].clone(),
            None if self.at_upper[j] => self.upper[j].clone().expect("at upper implies finite"),
            None => Q::zero(),
        }
    }

    fn reduced_cost(&self, cost: &[Q], j: usize) -> Q {
        let mut d = cost[j].clone();
        for (i, &b) in self.basis.iter().enumerate() {
            if !cost[b].is_zero() && !self.t[i][j].is_zero() {
                d -= &cost[b] * &self.t[i][j];
            }
        }
        d
    }

    fn pivot(&mut self, r: usize, j: usize, entering_value: Q) {
        let p = self.t[r][j].clone();
        for x in self.t[r].iter_mut() {
            if !x.is_zero() {
                *x /= &p;
            }
        }
        let pivot_row = self.t[r].clone();
        for i in 0..self.t.len() {
            if i == r || self.t[i][j].is_zero() {
                continue;
            }
            let f = self.t[i][j].clone();
            for (x, y) in self.t[i].iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        let leaving = self.basis[r];
        self.basic_row[leaving] = None;
        self.basis[r] = j;
        self.basic_row[j] = Some(r);
        self.at_upper[j] = false;
        self.beta[r] = entering_value;
    }

    fn step(&mut self, cost: &[Q]) -> Step {
        let n = cost.len();
        let mut entering = None;
        for j in 0..n {
            if self.basic_row[j].is_some() || self.upper[j].as_ref().is_some_and(|u| u.is_zero()) {
                continue;
            }
            let d = self.reduced_cost(cost, j);
            if (!self.at_upper[j] && d.is_positive()) || (self.at_upper[j] && d.is_negative()) {
                entering = Some(j);
                break;
            }
        }
        let Some(j) = entering else { return Step::Optimal };
        let up = !self.at_upper[j];

        // (limit, basic variable index, row, hits upper bound)
        let mut best: Option<(Q, usize, usize, bool)> = None;
        for (i, &b) in self.basis.iter().enumerate() {
            let a = &self.t[i][j];
            if a.is_zero() {
                continue;
            }
            // basic value moves by -a per unit step in the entering direction
            let rate = if up { -a.clone() } else { a.clone() };
            let cand = if rate.is_negative() {
                Some((&self.beta[i] / -&rate, false))
            } else {
                self.upper[b].as_ref().map(|u| ((u - &self.beta[i]) / &rate, true))
            };
            if let Some((lim, hits_upper)) = cand {
                let better = match &best {
                    None => true,
                    Some((bl, bb, _, _)) => lim < *bl || (lim == *bl && b < *bb),
                };
                if better {
                    best = Some((lim, b, i, hits_upper));
                }
            }
        }
        let flip = self.upper[j].clone();
        let (theta, flipping) = match (&best, &flip) {
            (None, None) => return Step::Unbounded,
            (None, Some(u)) => (u.clone(), true),
            (Some((lim, ..)), Some(u)) if u <= lim => (u.clone(), true),
            (Some((lim, ..)), _) => (lim.clone(), false),
        };

        if !theta.is_zero() {
            for i in 0..self.basis.len() {
                let a = &self.t[i][j];
                if a.is_zero() {
                    continue;
                }
                let delta = a * &theta;
                if up {
                    self.beta[i] -= delta;
                } else {
                    self.beta[i] += delta;
                }
            }
        }
        let old = self.value(j);
        let new_value = if up { old + &theta } else { old - &theta };
        if flipping {
            self.at_upper[j] = up;
            return Step::Moved;
        }
        let (_, leaving, r, hits_upper) = best.unwrap();
        self.pivot(r, j, new_value);
        self.at_upper[leaving] = hits_upper;
        Step::Moved
    }

    fn run(&mut self, cost: &[Q]) -> bool {
        loop {
            match self.step(cost) {
                Step::Optimal => return true,
                Step::Unbounded => return false,
                Step::Moved => {}
            }
        }
    }
}

pub fn solve(lp: &Lp) -> LpOutcome {
    let m = lp.rows.len();
    let n = lp.objective.len();
    assert!(lp.rows.iter().all(|r| r.len() == n), "row length mismatch");
    assert_eq!(lp.rhs.len(), m);
    assert_eq!(lp.upper.len(), n);
    if lp.upper.iter().flatten().any(|u| u.is_negative()) {
        return LpOutcome::Infeasible;
    }

    let sgn: Vec<bool> = lp.rhs.iter().map(|b| b.is_negative()).collect();
    let total = n + m;
    let mut t = Vec::with_capacity(m);
    let mut beta = Vec::with_capacity(m);
    for i in 0..m {
        let mut row: Vec<Q> = lp.rows[i].iter().map(|x| if sgn[i] { -x } else { x.clone() }).collect();
        row.extend((0..m).map(|k| if k == i { Q::from_integer(1.into()) } else { Q::zero() }));
        t.push(row);
        beta.push(if sgn[i] { -&lp.rhs[i] } else { lp.rhs[i].clone() });
    }
    let mut upper = lp.upper.clone();
    upper.extend((0..m).map(|_| None));
    let mut basic_row = vec![None; total];
    for i in 0..m {
        basic_row[n + i] = Some(i);
    }
    let mut tab = Tableau {
        t,
        beta,
        basis: (n..total).collect(),
        basic_row,
        at_upper: vec![false; total],
        upper,
    };

    let mut phase1 = vec![Q::zero(); total];
    for c in phase1.iter_mut().skip(n) {
        *c = Q::from_integer((-1).into());
    }
    tab.run(&phase1);
    let infeasibility: Q = (n..total).map(|a| tab.value(a)).sum();
    if infeasibility.is_positive() {
        return LpOutcome::Infeasible;
    }
    for i in 0..m {
        if tab.basis[i] < n {
            continue;
        }
        if let Some(j) = (0..n).find(|&j| tab.basic_row[j].is_none() && !tab.t[i][j].is_zero()) {
            let v = tab.value(j);
            tab.pivot(i, j, v);
        }
    }
    for a in n..total {
        tab.upper[a] = Some(Q::zero());
        tab.at_upper[a] = false;
    }

    let mut cost = lp.objective.clone();
    cost.extend((0..m).map(|_| Q::zero()));
    if !tab.run(&cost) {
        return LpOutcome::Unbounded;
    }
    let x: Vec<Q> = (0..n).map(|j| tab.value(j)).collect();
    let value = crate::rational::dot(&x, &lp.objective);
    let dual = (0..m)
        .map(|k| {
            let y = -tab.reduced_cost(&cost, n + k);
            if sgn[k] {
                -y
            } else {
                y
            }
        })
        .collect();
    LpOutcome::Optimal(LpSolution { x, value, dual })
}
