//! Exact feasibility for systems of linear constraints, some of them strict.
//!
//! The system `a_i x (<=, <, =) b_i` is homogenized with a scale variable
//! `t` and a single slack `s`:
//!
//! ```text
//! maximize s
//!   a_i x - b_i t     <= 0    (non-strict)
//!   a_i x - b_i t + s <= 0    (strict)
//!   a_i x - b_i t      = 0    (equality)
//!   s - t <= 0,  s <= 1
//! ```
//!
//! The origin is feasible, so a single-phase primal simplex with Bland's
//! rule suffices. The original system is feasible iff the optimum is
//! positive, in which case `x / t` is a witness.

use num_traits::{One, Signed, Zero};

use super::Rational;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    Le,
    Lt,
    Eq,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

impl Constraint {
    pub fn is_satisfied_by(&self, x: &[Rational]) -> bool {
        let lhs = super::dot(&self.coeffs, x);
        match self.relation {
            Relation::Le => lhs <= self.rhs,
            Relation::Lt => lhs < self.rhs,
            Relation::Eq => lhs == self.rhs,
        }
    }
}

/// A list of constraints over `dim` variables. Variables are free unless
/// marked nonnegative, which avoids splitting them inside the solver.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearSystem {
    dim: usize,
    nonnegative: Vec<bool>,
    constraints: Vec<Constraint>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Feasibility {
    Feasible(Vec<Rational>),
    Infeasible,
}

impl Feasibility {
    pub fn witness(&self) -> Option<&[Rational]> {
        match self {
            Feasibility::Feasible(w) => Some(w),
            Feasibility::Infeasible => None,
        }
    }

    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible(_))
    }
}

impl LinearSystem {
    pub fn new(dim: usize) -> Self {
        Self {
            dim,
            nonnegative: vec![false; dim],
            constraints: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn set_nonnegative(&mut self, var: usize) {
        self.nonnegative[var] = true;
    }

    pub fn push(&mut self, coeffs: Vec<Rational>, relation: Relation, rhs: Rational) -> Result<()> {
        if coeffs.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: coeffs.len(),
            });
        }
        self.constraints.push(Constraint { coeffs, relation, rhs });
        Ok(())
    }

    pub fn le(&mut self, coeffs: Vec<Rational>, rhs: Rational) -> Result<()> {
        self.push(coeffs, Relation::Le, rhs)
    }

    pub fn lt(&mut self, coeffs: Vec<Rational>, rhs: Rational) -> Result<()> {
        self.push(coeffs, Relation::Lt, rhs)
    }

    pub fn equal(&mut self, coeffs: Vec<Rational>, rhs: Rational) -> Result<()> {
        self.push(coeffs, Relation::Eq, rhs)
    }

    pub fn ge(&mut self, coeffs: Vec<Rational>, rhs: Rational) -> Result<()> {
        self.push(coeffs.into_iter().map(|c| -c).collect(), Relation::Le, -rhs)
    }

    pub fn gt(&mut self, coeffs: Vec<Rational>, rhs: Rational) -> Result<()> {
        self.push(coeffs.into_iter().map(|c| -c).collect(), Relation::Lt, -rhs)
    }

    /// Subsystem keeping only the listed constraints.
    pub fn subsystem(&self, keep: &[usize]) -> LinearSystem {
        LinearSystem {
            dim: self.dim,
            nonnegative: self.nonnegative.clone(),
            constraints: keep.iter().map(|&i| self.constraints[i].clone()).collect(),
        }
    }

    /// Checks every constraint (and sign restriction) at `x`.
    pub fn is_satisfied_by(&self, x: &[Rational]) -> bool {
        x.len() == self.dim
            && self.nonnegative.iter().zip(x).all(|(&nn, v)| !nn || !v.is_negative())
            && self.constraints.iter().all(|c| c.is_satisfied_by(x))
    }
}

/// Decides whether the system has a solution, strict rows held strictly.
pub fn feasible_strict(sys: &LinearSystem) -> Feasibility {
    // column layout: one or two columns per original variable, then t, then s
    let mut var_cols: Vec<(usize, Option<usize>)> = Vec::with_capacity(sys.dim);
    let mut ncols = 0;
    for &nn in &sys.nonnegative {
        if nn {
            var_cols.push((ncols, None));
            ncols += 1;
        } else {
            var_cols.push((ncols, Some(ncols + 1)));
            ncols += 2;
        }
    }
    let t_col = ncols;
    let s_col = ncols + 1;
    ncols += 2;

    let mut rows: Vec<(Vec<Rational>, Rational)> = Vec::new();
    let make_row = |c: &Constraint, sign: bool, strict: bool| {
        let mut row = vec![Rational::zero(); ncols];
        for (j, a) in c.coeffs.iter().enumerate() {
            let a = if sign { a.clone() } else { -a.clone() };
            let (p, n) = var_cols[j];
            if let Some(n) = n {
                row[n] = -a.clone();
            }
            row[p] = a;
        }
        row[t_col] = if sign { -c.rhs.clone() } else { c.rhs.clone() };
        if strict {
            row[s_col] = Rational::one();
        }
        row
    };
    for c in &sys.constraints {
        match c.relation {
            Relation::Le => rows.push((make_row(c, true, false), Rational::zero())),
            Relation::Lt => rows.push((make_row(c, true, true), Rational::zero())),
            Relation::Eq => {
                rows.push((make_row(c, true, false), Rational::zero()));
                rows.push((make_row(c, false, false), Rational::zero()));
            }
        }
    }
    let mut st = vec![Rational::zero(); ncols];
    st[t_col] = -Rational::one();
    st[s_col] = Rational::one();
    rows.push((st, Rational::zero()));
    let mut cap = vec![Rational::zero(); ncols];
    cap[s_col] = Rational::one();
    rows.push((cap, Rational::one()));

    let mut objective = vec![Rational::zero(); ncols];
    objective[s_col] = Rational::one();

    let values = maximize(&rows, &objective);
    if !values[s_col].is_positive() {
        return Feasibility::Infeasible;
    }
    let t = &values[t_col];
    let witness: Vec<Rational> = var_cols
        .iter()
        .map(|&(p, n)| {
            let v = match n {
                Some(n) => &values[p] - &values[n],
                None => values[p].clone(),
            };
            v / t
        })
        .collect();
    assert!(
        sys.is_satisfied_by(&witness),
        "simplex witness failed the closed-loop check"
    );
    Feasibility::Feasible(witness)
}

/// Primal simplex on `max c.y, A y <= b, y >= 0` with `b >= 0`.
/// Returns the optimal `y`. The caller guarantees boundedness.
fn maximize(rows: &[(Vec<Rational>, Rational)], objective: &[Rational]) -> Vec<Rational> {
    let m = rows.len();
    let n = objective.len();
    let width = n + m;
    // tableau rows: [A | I | b]
    let mut tab: Vec<Vec<Rational>> = rows
        .iter()
        .enumerate()
        .map(|(i, (a, b))| {
            let mut r = Vec::with_capacity(width + 1);
            r.extend(a.iter().cloned());
            r.extend((0..m).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r.push(b.clone());
            r
        })
        .collect();
    // reduced costs, stored as -c so that optimality means no negative entry
    let mut obj: Vec<Rational> = objective.iter().map(|c| -c.clone()).collect();
    obj.extend((0..=m).map(|_| Rational::zero()));
    let mut basis: Vec<usize> = (n..n + m).collect();

    // Bland: lowest-index improving column
    while let Some(enter) = (0..width).find(|&j| obj[j].is_negative()) {
        let mut leave: Option<(usize, Rational)> = None;
        for i in 0..m {
            if tab[i][enter].is_positive() {
                let ratio = &tab[i][width] / &tab[i][enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let (pr, _) = leave.expect("linear program is unbounded");
        pivot(&mut tab, &mut obj, pr, enter);
        basis[pr] = enter;
    }

    let mut y = vec![Rational::zero(); n];
    for (i, &b) in basis.iter().enumerate() {
        if b < n {
            y[b] = tab[i][width].clone();
        }
    }
    y
}

fn pivot(tab: &mut [Vec<Rational>], obj: &mut [Rational], pr: usize, pc: usize) {
    let inv = tab[pr][pc].recip();
    for v in tab[pr].iter_mut() {
        if !v.is_zero() {
            *v = &*v * &inv;
        }
    }
    let prow = tab[pr].clone();
    let nz: Vec<usize> = (0..prow.len()).filter(|&j| !prow[j].is_zero()).collect();
    for (i, row) in tab.iter_mut().enumerate() {
        if i == pr || row[pc].is_zero() {
            continue;
        }
        let f = row[pc].clone();
        for &j in &nz {
            let d = &f * &prow[j];
            row[j] -= d;
        }
    }
    if !obj[pc].is_zero() {
        let f = obj[pc].clone();
        for &j in &nz {
            let d = &f * &prow[j];
            obj[j] -= d;
        }
    }
}
