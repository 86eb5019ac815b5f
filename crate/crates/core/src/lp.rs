//! Exact simplex with certificates.
//!
//! Programs are `min objective·x` subject to `normal_i·x >= offset_i` with
//! free variables. The solver runs a two-phase tableau simplex with Bland's
//! rule over the standard form `A x⁺ - A x⁻ - s = b`, so it terminates on
//! every input. Each outcome carries a certificate that [`verify_outcome`]
//! checks independently of the solver.

use crate::error::{check_dim, Result};
use crate::{LinRel, Scalar, Vector};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinProgram<T> {
    pub constraints: Vec<LinRel<T>>,
    pub objective: Vector<T>,
}

impl<T: Scalar> LinProgram<T> {
    pub fn new(constraints: Vec<LinRel<T>>, objective: Vector<T>) -> Result<Self> {
        for c in &constraints {
            check_dim(objective.dim(), c.dim())?;
        }
        Ok(LinProgram { constraints, objective })
    }

    pub fn dim(&self) -> usize {
        self.objective.dim()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome<T> {
    /// Nonnegative multipliers with `Σ λ_i normal_i = 0` and `Σ λ_i offset_i > 0`.
    Infeasible { farkas: Vec<T> },
    /// A feasible point and a recession direction along which the objective decreases.
    Unbounded { feasible: Vector<T>, ray: Vector<T> },
    /// An optimal basic point, its value, and a dual solution with zero gap.
    Optimal { point: Vector<T>, value: T, dual: Vec<T> },
}

impl<T: Scalar> LpOutcome<T> {
    pub fn is_infeasible(&self) -> bool {
        matches!(self, LpOutcome::Infeasible { .. })
    }

    pub fn is_unbounded(&self) -> bool {
        matches!(self, LpOutcome::Unbounded { .. })
    }

    /// Any feasible point carried by the outcome.
    pub fn feasible_point(&self) -> Option<&Vector<T>> {
        match self {
            LpOutcome::Infeasible { .. } => None,
            LpOutcome::Unbounded { feasible, .. } => Some(feasible),
            LpOutcome::Optimal { point, .. } => Some(point),
        }
    }

    pub fn optimal_value(&self) -> Option<&T> {
        match self {
            LpOutcome::Optimal { value, .. } => Some(value),
            _ => None,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            LpOutcome::Infeasible { .. } => "infeasible",
            LpOutcome::Unbounded { .. } => "unbounded",
            LpOutcome::Optimal { .. } => "optimal",
        }
    }
}

struct Tableau<T> {
    rows: Vec<Vec<T>>,
    /// Reduced costs; the last entry is minus the current objective value.
    cost: Vec<T>,
    basis: Vec<usize>,
    /// Columns at or beyond this index never enter the basis.
    barred: usize,
}

enum Step {
    Optimal,
    Unbounded(usize),
}

impl<T: Scalar> Tableau<T> {
    fn rhs(&self, r: usize) -> &T {
        self.rows[r].last().expect("rhs column")
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let lead = self.rows[r][c].clone();
        for x in self.rows[r].iter_mut() {
            if !x.is_zero() {
                *x = x.clone() / lead.clone();
            }
        }
        let pivot_row = std::mem::take(&mut self.rows[r]);
        let nonzero: Vec<usize> = (0..pivot_row.len()).filter(|&j| !pivot_row[j].is_zero()).collect();
        let eliminate = |row: &mut Vec<T>| {
            if row[c].is_zero() {
                return;
            }
            let f = row[c].clone();
            for &j in &nonzero {
                row[j].sub_mul(&f, &pivot_row[j]);
            }
        };
        for row in self.rows.iter_mut() {
            if !row.is_empty() {
                eliminate(row);
            }
        }
        eliminate(&mut self.cost);
        self.rows[r] = pivot_row;
        self.basis[r] = c;
    }

    /// Bland's rule: lowest-index entering column with negative reduced
    /// cost; ratio ties broken by lowest-index basic variable.
    fn run(&mut self) -> Step {
        loop {
            let Some(enter) = (0..self.barred).find(|&j| self.cost[j].is_negative()) else {
                return Step::Optimal;
            };
            let mut leave: Option<(usize, T)> = None;
            for r in 0..self.rows.len() {
                let a = &self.rows[r][enter];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs(r).clone() / a.clone();
                let better = match &leave {
                    None => true,
                    Some((best_r, best)) => {
                        ratio < *best || (ratio == *best && self.basis[r] < self.basis[*best_r])
                    }
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
            match leave {
                Some((r, _)) => self.pivot(r, enter),
                None => return Step::Unbounded(enter),
            }
        }
    }

    fn set_costs(&mut self, costs: &[T]) {
        let width = self.cost.len();
        let mut d: Vec<T> = costs.to_vec();
        d.push(T::zero());
        debug_assert_eq!(d.len(), width);
        for (r, row) in self.rows.iter().enumerate() {
            let cb = &costs[self.basis[r]];
            if cb.is_zero() {
                continue;
            }
            for (dj, a) in d.iter_mut().zip(row) {
                if !a.is_zero() {
                    dj.sub_mul(cb, a);
                }
            }
        }
        self.cost = d;
    }

    fn basic_values(&self, ncols: usize) -> Vec<T> {
        let mut v = vec![T::zero(); ncols];
        for (r, &b) in self.basis.iter().enumerate() {
            v[b] = self.rhs(r).clone();
        }
        v
    }
}

/// Solves `min objective·x` subject to the program's inequalities.
pub fn solve<T: Scalar>(lp: &LinProgram<T>) -> LpOutcome<T> {
    let n = lp.dim();
    let m_all = lp.constraints.len();

    // Rows with a zero normal are either vacuous or a contradiction by themselves.
    let mut kept = Vec::with_capacity(m_all);
    for (i, c) in lp.constraints.iter().enumerate() {
        if c.is_trivial_normal() {
            if c.offset.is_positive() {
                let mut farkas = vec![T::zero(); m_all];
                farkas[i] = T::one();
                return LpOutcome::Infeasible { farkas };
            }
        } else {
            kept.push(i);
        }
    }
    let m = kept.len();

    // Columns: x⁺ (n), x⁻ (n), slack (m), artificial (one per row whose
    // slack cannot start in the basis), rhs. A row `a·x - s = b` with
    // `b <= 0` is negated so its slack column is a unit vector.
    let needs_art: Vec<bool> = kept.iter().map(|&i| lp.constraints[i].offset.is_positive()).collect();
    let art = 2 * n + m;
    let mut art_col = vec![None; m];
    let mut next = art;
    for r in 0..m {
        if needs_art[r] {
            art_col[r] = Some(next);
            next += 1;
        }
    }
    let total = next;
    let width = total + 1;
    let mut signs = Vec::with_capacity(m);
    let mut rows = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    for (r, &i) in kept.iter().enumerate() {
        let c = &lp.constraints[i];
        let sign = if needs_art[r] { T::one() } else { -T::one() };
        let mut row = vec![T::zero(); width];
        for (j, a) in c.normal.entries().iter().enumerate() {
            if !a.is_zero() {
                row[j] = sign.clone() * a.clone();
                row[n + j] = -(sign.clone() * a.clone());
            }
        }
        row[2 * n + r] = -sign.clone();
        match art_col[r] {
            Some(k) => {
                row[k] = T::one();
                basis.push(k);
            }
            None => basis.push(2 * n + r),
        }
        row[width - 1] = sign.clone() * c.offset.clone();
        rows.push(row);
        signs.push(sign);
    }
    let mut tab = Tableau { rows, cost: vec![T::zero(); width], basis, barred: art };

    let mut phase_one = vec![T::zero(); total];
    for c in &mut phase_one[art..] {
        *c = T::one();
    }
    tab.set_costs(&phase_one);
    // Phase one is bounded below by zero.
    let _ = tab.run();

    // The multiplier of row r is minus the reduced cost of its unit column
    // (slack or artificial), shifted by that column's cost.
    let dual_of = |tab: &Tableau<T>, art_cost: &T| -> Vec<T> {
        let mut out = vec![T::zero(); m_all];
        for (r, &i) in kept.iter().enumerate() {
            let y = match art_col[r] {
                Some(k) => art_cost.clone() - tab.cost[k].clone(),
                None => -tab.cost[2 * n + r].clone(),
            };
            out[i] = signs[r].clone() * y;
        }
        out
    };

    let infeasibility = -tab.cost[width - 1].clone();
    if infeasibility.is_positive() {
        return LpOutcome::Infeasible { farkas: dual_of(&tab, &T::one()) };
    }

    // Drive zero-level artificials out of the basis where possible; those
    // that remain sit on rows with no original-column support and never move.
    for r in 0..m {
        if tab.basis[r] >= art {
            if let Some(j) = (0..art).find(|&j| !tab.rows[r][j].is_zero()) {
                tab.pivot(r, j);
            }
        }
    }

    let mut phase_two = vec![T::zero(); total];
    for (j, c) in lp.objective.entries().iter().enumerate() {
        phase_two[j] = c.clone();
        phase_two[n + j] = -c.clone();
    }
    tab.set_costs(&phase_two);
    let step = tab.run();

    let values = tab.basic_values(total);
    let point = Vector::new((0..n).map(|j| values[j].clone() - values[n + j].clone()).collect());
    match step {
        Step::Optimal => {
            let value = lp.objective.inner(&point);
            LpOutcome::Optimal { point, value, dual: dual_of(&tab, &T::zero()) }
        }
        Step::Unbounded(enter) => {
            let mut dir = vec![T::zero(); total];
            dir[enter] = T::one();
            for (r, &b) in tab.basis.iter().enumerate() {
                dir[b] = -tab.rows[r][enter].clone();
            }
            let ray = Vector::new((0..n).map(|j| dir[j].clone() - dir[n + j].clone()).collect());
            LpOutcome::Unbounded { feasible: point, ray }
        }
    }
}

/// Convenience wrapper around [`solve`].
pub fn minimize<T: Scalar>(constraints: &[LinRel<T>], objective: &Vector<T>) -> LpOutcome<T> {
    solve(&LinProgram { constraints: constraints.to_vec(), objective: objective.clone() })
}

/// Some point satisfying all constraints, if any exists.
pub fn feasible_point<T: Scalar>(constraints: &[LinRel<T>], dim: usize) -> Option<Vector<T>> {
    minimize(constraints, &Vector::zeros(dim)).feasible_point().cloned()
}

/// Checks the certificate invariants of `out` against `lp`, exactly.
pub fn verify_outcome<T: Scalar>(lp: &LinProgram<T>, out: &LpOutcome<T>) -> bool {
    let n = lp.dim();
    let m = lp.constraints.len();
    let combine = |weights: &[T]| -> (Vector<T>, T) {
        let mut normal = Vector::zeros(n);
        let mut offset = T::zero();
        for (w, c) in weights.iter().zip(&lp.constraints) {
            if !w.is_zero() {
                normal = normal.add_scaled(w, &c.normal);
                offset = offset + w.clone() * c.offset.clone();
            }
        }
        (normal, offset)
    };
    let feasible = |x: &Vector<T>| x.dim() == n && lp.constraints.iter().all(|c| c.holds_at(x));
    match out {
        LpOutcome::Infeasible { farkas } => {
            if farkas.len() != m || farkas.iter().any(|w| w.is_negative()) {
                return false;
            }
            let (normal, offset) = combine(farkas);
            normal.is_zero() && offset.is_positive()
        }
        LpOutcome::Unbounded { feasible: x, ray } => {
            feasible(x)
                && ray.dim() == n
                && lp.constraints.iter().all(|c| !c.normal.inner(ray).is_negative())
                && lp.objective.inner(ray).is_negative()
        }
        LpOutcome::Optimal { point, value, dual } => {
            if !feasible(point) || dual.len() != m || dual.iter().any(|w| w.is_negative()) {
                return false;
            }
            let (normal, offset) = combine(dual);
            normal == lp.objective
                && offset == *value
                && lp.objective.inner(point) == *value
                && dual
                    .iter()
                    .zip(&lp.constraints)
                    .all(|(w, c)| w.is_zero() || c.tight_at(point))
        }
    }
}
