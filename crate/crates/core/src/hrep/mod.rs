//! Concrete inequality systems `A x >= b` and the representation-level
//! algorithms on them: membership, LP-backed inclusion, Fourier–Motzkin
//! projection and redundancy elimination.

mod fm;
pub(crate) mod format;
mod redundancy;

use std::collections::HashSet;

pub use fm::{proj0_with_derivations, Derivation};
pub use format::{parse_hformat, to_hformat};

use crate::error::{check_dim, Result};
use crate::lp::{minimize, LpOutcome};
use crate::{LinRel, Scalar, Vector};

/// Row count above which Fourier–Motzkin runs LP-based redundancy removal
/// after an elimination step.
pub const DEFAULT_FM_THRESHOLD: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FmConfig {
    pub redundancy_threshold: usize,
}

impl Default for FmConfig {
    fn default() -> Self {
        FmConfig { redundancy_threshold: DEFAULT_FM_THRESHOLD }
    }
}

/// An inequality system; every row reads `normal·x >= offset`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HPoly<T> {
    dim: usize,
    rows: Vec<LinRel<T>>,
}

impl<T: Scalar> HPoly<T> {
    pub fn new(dim: usize, rows: Vec<LinRel<T>>) -> Result<Self> {
        for r in &rows {
            check_dim(dim, r.dim())?;
        }
        Ok(HPoly { dim, rows })
    }

    pub(crate) fn new_unchecked(dim: usize, rows: Vec<LinRel<T>>) -> Self {
        debug_assert!(rows.iter().all(|r| r.dim() == dim));
        HPoly { dim, rows }
    }

    /// The canonical empty system `0·x >= 1`.
    pub fn empty(dim: usize) -> Self {
        HPoly { dim, rows: vec![LinRel::new(Vector::zeros(dim), T::one())] }
    }

    /// No rows: the whole space.
    pub fn universe(dim: usize) -> Self {
        HPoly { dim, rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> &[LinRel<T>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<LinRel<T>> {
        self.rows
    }

    pub fn is_canonical_empty(&self) -> bool {
        self.rows.len() == 1 && self.rows[0].is_trivial_normal() && self.rows[0].offset == T::one()
    }

    /// Rows of both systems, `self` first.
    pub fn meet(&self, other: &Self) -> Result<Self> {
        check_dim(self.dim, other.dim)?;
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Ok(HPoly { dim: self.dim, rows })
    }

    pub fn member(&self, x: &Vector<T>) -> Result<bool> {
        check_dim(self.dim, x.dim())?;
        Ok(self.rows.iter().all(|r| r.holds_at(x)))
    }

    pub fn feasible_point(&self) -> Option<Vector<T>> {
        crate::lp::feasible_point(&self.rows, self.dim)
    }

    pub fn is_empty(&self) -> bool {
        self.feasible_point().is_none()
    }

    pub fn minimize(&self, objective: &Vector<T>) -> Result<LpOutcome<T>> {
        check_dim(self.dim, objective.dim())?;
        Ok(minimize(&self.rows, objective))
    }

    /// Whether `normal·x >= offset` holds on all of `self`.
    pub fn implies(&self, row: &LinRel<T>) -> Result<bool> {
        Ok(self.violation_of(row)?.is_none())
    }

    /// A point of `self` violating `row`, if any.
    fn violation_of(&self, row: &LinRel<T>) -> Result<Option<Vector<T>>> {
        check_dim(self.dim, row.dim())?;
        Ok(match minimize(&self.rows, &row.normal) {
            LpOutcome::Infeasible { .. } => None,
            LpOutcome::Optimal { point, value, .. } => (value < row.offset).then_some(point),
            LpOutcome::Unbounded { feasible, ray } => {
                // walk along the ray until the row is violated
                let gap = row.slack(&feasible);
                let rate = -row.normal.inner(&ray);
                let t = if gap.is_negative() { T::zero() } else { gap / rate + T::one() };
                Some(feasible.add_scaled(&t, &ray))
            }
        })
    }

    /// Every point of `self` lies in `other`.
    pub fn subset(&self, other: &Self) -> Result<bool> {
        Ok(self.not_subset_witness(other)?.is_none())
    }

    /// A point of `self` outside `other`; `None` iff `self ⊆ other`.
    pub fn not_subset_witness(&self, other: &Self) -> Result<Option<Vector<T>>> {
        check_dim(self.dim, other.dim)?;
        let Some(inside) = self.feasible_point() else {
            return Ok(None);
        };
        let own: HashSet<LinRel<T>> = self.rows.iter().map(|r| r.normalized()).collect();
        for row in &other.rows {
            if !row.holds_at(&inside) {
                return Ok(Some(inside));
            }
            if row.is_trivial_normal() || own.contains(&row.normalized()) {
                continue;
            }
            if let Some(w) = self.violation_of(row)? {
                return Ok(Some(w));
            }
        }
        Ok(None)
    }

    pub fn equiv(&self, other: &Self) -> Result<bool> {
        Ok(self.subset(other)? && other.subset(self)?)
    }

    /// Projection forgetting the first coordinate.
    pub fn proj0(&self) -> Result<Self> {
        self.proj0_with(&FmConfig::default())
    }

    pub fn proj0_with(&self, cfg: &FmConfig) -> Result<Self> {
        if self.dim == 0 {
            return Err(crate::Error::Usage("proj0 needs dimension at least 1".into()));
        }
        Ok(fm::eliminate(self, 0, false, cfg))
    }

    /// Projection forgetting every listed coordinate (0-based), eliminated
    /// in decreasing index order.
    pub fn project_out(&self, coords: &[usize]) -> Result<Self> {
        self.project_out_with(coords, &FmConfig::default())
    }

    pub fn project_out_with(&self, coords: &[usize], cfg: &FmConfig) -> Result<Self> {
        let mut sorted = coords.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if let Some(&bad) = sorted.iter().find(|&&c| c >= self.dim) {
            return Err(crate::Error::Usage(format!(
                "coordinate {} out of range for dimension {}",
                bad + 1,
                self.dim
            )));
        }
        let mut current = self.clone();
        for &axis in sorted.iter().rev() {
            current = fm::eliminate(&current, axis, true, cfg);
        }
        Ok(current)
    }

    /// Inclusion-minimal subsystem describing the same set.
    pub fn remove_redundancy(&self) -> Self {
        redundancy::remove_redundancy(self)
    }

    /// Syntactic cleanup: drops duplicate halfspaces (up to positive
    /// scaling) and vacuous `0 >= b` rows with `b <= 0`; a contradictory
    /// `0 >= b` row yields the canonical empty system.
    pub fn dedup(&self) -> Self {
        let mut seen = HashSet::new();
        let mut rows = Vec::new();
        for r in &self.rows {
            if r.is_trivial_normal() {
                if r.offset.is_positive() {
                    return Self::empty(self.dim);
                }
                continue;
            }
            if seen.insert(r.normalized()) {
                rows.push(r.clone());
            }
        }
        HPoly { dim: self.dim, rows }
    }

    /// Embeds into a larger space: coordinate `i` becomes `offset + i`,
    /// total dimension `dim`.
    pub(crate) fn embed(&self, dim: usize, offset: usize) -> Self {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut normal = vec![T::zero(); dim];
                for (i, a) in r.normal.entries().iter().enumerate() {
                    normal[offset + i] = a.clone();
                }
                LinRel::new(Vector::new(normal), r.offset.clone())
            })
            .collect();
        HPoly { dim, rows }
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use crate::{rat, QHPoly, QLinRel, QVector};

    pub(crate) fn pentagon_h() -> QHPoly {
        QHPoly::new(
            2,
            vec![
                QLinRel::from_i64s(&[2, 1], 5),
                QLinRel::from_i64s(&[5, -2], -1),
                QLinRel::from_i64s(&[-2, -5], -46),
                QLinRel::from_i64s(&[-2, 1], -10),
                QLinRel::from_i64s(&[-1, 4], 2),
            ],
        )
        .unwrap()
    }

    pub(crate) fn cube(n: usize) -> QHPoly {
        let mut rows = Vec::new();
        for i in 0..n {
            rows.push(QLinRel::new(QVector::unit(n, i), rat(0)));
            rows.push(QLinRel::new(QVector::unit(n, i).neg(), rat(-1)));
        }
        QHPoly::new(n, rows).unwrap()
    }

    fn single(normal: &[i64], offset: i64) -> QHPoly {
        QHPoly::new(normal.len(), vec![QLinRel::from_i64s(normal, offset)]).unwrap()
    }

    fn contradictory() -> QHPoly {
        QHPoly::new(1, vec![QLinRel::from_i64s(&[1], 1), QLinRel::from_i64s(&[-1], 0)]).unwrap()
    }

    #[test]
    fn membership() {
        let p = pentagon_h();
        assert!(p.member(&QVector::from_i64s(&[2, 1])).unwrap());
        assert!(!p.member(&QVector::from_i64s(&[0, 0])).unwrap());
        assert!(QHPoly::universe(2).member(&QVector::from_i64s(&[7, -7])).unwrap());
        assert!(p.member(&QVector::zeros(3)).is_err());
    }

    #[test]
    fn inclusion() {
        let p = pentagon_h();
        assert!(p.subset(&single(&[2, 1], 5)).unwrap());
        let w = p.not_subset_witness(&single(&[1, 0], 3)).unwrap().unwrap();
        assert!(p.member(&w).unwrap() && w[0] < rat(3));
        let w = p.not_subset_witness(&single(&[0, 1], 2)).unwrap().unwrap();
        assert!(p.member(&w).unwrap() && w[1] < rat(2));
        assert!(contradictory().subset(&QHPoly::empty(1)).unwrap());
        assert!(p.not_subset_witness(&single(&[2, 1], 5)).unwrap().is_none());

        let sq = cube(2);
        let w = sq.not_subset_witness(&single(&[1, 1], 2)).unwrap().unwrap();
        assert!(sq.member(&w).unwrap() && w[0].clone() + w[1].clone() < rat(2));
    }

    #[test]
    fn witness_from_unbounded_program() {
        let half = single(&[1, 0], 0);
        let w = half.not_subset_witness(&single(&[-1, 0], -5)).unwrap().unwrap();
        assert!(half.member(&w).unwrap());
        assert!(w[0] > rat(5));
    }

    #[test]
    fn equivalence() {
        let p = pentagon_h();
        let mut rows = p.rows().to_vec();
        rows.reverse();
        let permuted = QHPoly::new(2, rows.clone()).unwrap();
        assert!(p.equiv(&permuted).unwrap());
        rows.push(QLinRel::from_i64s(&[1, 1], 0));
        assert!(p.equiv(&QHPoly::new(2, rows).unwrap()).unwrap());
        let tri = QHPoly::new(
            2,
            vec![QLinRel::from_i64s(&[1, 0], 0), QLinRel::from_i64s(&[0, 1], 0), QLinRel::from_i64s(&[-1, -1], -1)],
        )
        .unwrap();
        assert!(!cube(2).equiv(&tri).unwrap());
        assert!(cube(2).not_subset_witness(&tri).unwrap().is_some());
    }

    #[test]
    fn projections() {
        let sq = cube(3).proj0().unwrap();
        assert_eq!(sq.dim(), 2);
        assert!(sq.equiv(&cube(2)).unwrap());

        let seg = pentagon_h().proj0().unwrap();
        let expected = QHPoly::new(1, vec![QLinRel::from_i64s(&[1], 1), QLinRel::from_i64s(&[-1], -8)]).unwrap();
        assert!(seg.equiv(&expected).unwrap());

        assert!(contradictory().proj0().unwrap().is_empty());
        assert!(QHPoly::universe(0).proj0().is_err());
    }

    #[test]
    fn project_out_coordinates() {
        let p = pentagon_h();
        assert!(p.project_out(&[]).unwrap().equiv(&p).unwrap());
        let line = cube(3).project_out(&[0, 1]).unwrap();
        assert!(line.equiv(&cube(1)).unwrap());
        assert!(cube(2).project_out(&[2]).is_err());

        // simplex in R^3 (mu >= 0, sum = 1) minus its last coordinate
        let simplex = QHPoly::new(
            3,
            vec![
                QLinRel::from_i64s(&[1, 0, 0], 0),
                QLinRel::from_i64s(&[0, 1, 0], 0),
                QLinRel::from_i64s(&[0, 0, 1], 0),
                QLinRel::from_i64s(&[1, 1, 1], 1),
                QLinRel::from_i64s(&[-1, -1, -1], -1),
            ],
        )
        .unwrap();
        let tri = QHPoly::new(
            2,
            vec![QLinRel::from_i64s(&[1, 0], 0), QLinRel::from_i64s(&[0, 1], 0), QLinRel::from_i64s(&[-1, -1], -1)],
        )
        .unwrap();
        assert!(simplex.project_out(&[2]).unwrap().equiv(&tri).unwrap());
    }

    #[test]
    fn redundancy_examples() {
        let mut rows = cube(2).into_rows();
        rows.push(rows[0].clone());
        let q = QHPoly::new(2, rows).unwrap().remove_redundancy();
        assert_eq!(q.rows().len(), 4);

        let p = QHPoly::new(
            2,
            vec![QLinRel::from_i64s(&[1, 0], 0), QLinRel::from_i64s(&[0, 1], 0), QLinRel::from_i64s(&[1, 1], -1)],
        )
        .unwrap();
        assert_eq!(p.remove_redundancy().rows(), &p.rows()[..2]);

        let f = pentagon_h();
        let q = f.remove_redundancy();
        assert_eq!(q.rows(), f.rows());
        // each row is needed: dropping it lets some point escape
        for i in 0..5 {
            let mut others = f.rows().to_vec();
            let dropped = others.remove(i);
            let rest = QHPoly::new(2, others).unwrap();
            let escape = QHPoly::new(2, vec![dropped]).unwrap();
            assert!(rest.not_subset_witness(&escape).unwrap().is_some());
        }

        assert!(contradictory().remove_redundancy().is_canonical_empty());
    }
}
