//! Set-semantic polyhedra.
//!
//! A [`Poly`] wraps an inequality system but every public operation only
//! depends on the point set it describes. Facts that need linear programs
//! (a feasible point, the implicit equalities, the affine hull) are computed
//! lazily once per value.

mod base;
mod format;

use std::sync::OnceLock;

pub use base::{Base, EqSpec};
pub use format::{parse_matrix, parse_vformat, to_vformat};

use crate::error::{check_dim, Error, Result};
use crate::lp::{minimize, LinProgram, LpOutcome};
use crate::{AffineSpace, FmConfig, HPoly, LinRel, Matrix, Scalar, Vector};

#[derive(Clone, Debug)]
struct Facts<T> {
    point: Option<Vector<T>>,
    /// Own rows that hold with equality everywhere on the set.
    implicit: Vec<usize>,
    hull: AffineSpace<T>,
}

#[derive(Clone, Debug)]
pub struct Poly<T> {
    hrep: HPoly<T>,
    facts: OnceLock<Facts<T>>,
}

impl<T: Scalar> From<HPoly<T>> for Poly<T> {
    fn from(hrep: HPoly<T>) -> Self {
        Poly::new(hrep)
    }
}

impl<T: Scalar> Poly<T> {
    pub fn new(hrep: HPoly<T>) -> Self {
        Poly { hrep, facts: OnceLock::new() }
    }

    /// Halfspace `e.normal·x >= e.offset`.
    pub fn hs(e: &LinRel<T>) -> Self {
        Poly::new(HPoly::new_unchecked(e.dim(), vec![e.clone()]))
    }

    /// Hyperplane `e.normal·x = e.offset`.
    pub fn hp(e: &LinRel<T>) -> Self {
        Poly::new(HPoly::new_unchecked(e.dim(), vec![e.clone(), e.neg()]))
    }

    pub fn poly0(dim: usize) -> Self {
        Poly::new(HPoly::empty(dim))
    }

    pub fn poly_t(dim: usize) -> Self {
        Poly::new(HPoly::universe(dim))
    }

    /// The single point `x`, as the `2n` rows `x >= v`, `-x >= -v`.
    pub fn pt(x: &Vector<T>) -> Self {
        let n = x.dim();
        let mut rows = Vec::with_capacity(2 * n);
        for i in 0..n {
            let e = LinRel::new(Vector::unit(n, i), x[i].clone());
            rows.push(e.neg());
            rows.push(e);
        }
        Poly::new(HPoly::new_unchecked(n, rows))
    }

    pub fn segm(x: &Vector<T>, y: &Vector<T>) -> Result<Self> {
        check_dim(x.dim(), y.dim())?;
        Self::conv(x.dim(), &[x.clone(), y.clone()])
    }

    pub fn hrep(&self) -> &HPoly<T> {
        &self.hrep
    }

    pub fn dim(&self) -> usize {
        self.hrep.dim()
    }

    pub fn member(&self, x: &Vector<T>) -> Result<bool> {
        self.hrep.member(x)
    }

    fn facts(&self) -> &Facts<T> {
        self.facts.get_or_init(|| {
            let n = self.dim();
            let Some(point) = self.hrep.feasible_point() else {
                return Facts { point: None, implicit: Vec::new(), hull: AffineSpace::Empty { dim: n } };
            };
            let implicit = implicit_equalities(&self.hrep, &point);
            let rels: Vec<LinRel<T>> = implicit.iter().map(|&i| self.hrep.rows()[i].clone()).collect();
            let hull = AffineSpace::of_rels(n, &rels).expect("rows share the dimension");
            debug_assert!(!hull.is_empty());
            Facts { point: Some(point), implicit, hull }
        })
    }

    pub fn is_empty(&self) -> bool {
        self.facts().point.is_none()
    }

    pub fn feasible_point(&self) -> Option<&Vector<T>> {
        self.facts().point.as_ref()
    }

    /// Indices of the own rows that are equalities on the whole set.
    pub fn implicit_equalities(&self) -> &[usize] {
        &self.facts().implicit
    }

    /// Affine hull of the set.
    pub fn hull(&self) -> &AffineSpace<T> {
        &self.facts().hull
    }

    /// Shifted dimension: 0 when empty, 1 for a point, `k + 1` for a `k`-dimensional set.
    pub fn pdim(&self) -> usize {
        self.hull().adim()
    }

    pub fn minimize(&self, c: &Vector<T>) -> Result<LpOutcome<T>> {
        self.hrep.minimize(c)
    }

    pub fn subset(&self, other: &Self) -> Result<bool> {
        self.hrep.subset(&other.hrep)
    }

    /// Set equality.
    pub fn same_set(&self, other: &Self) -> Result<bool> {
        self.hrep.equiv(&other.hrep)
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        Ok(Poly::new(self.hrep.meet(&other.hrep)?))
    }

    /// `{ A x : x ∈ self }`.
    pub fn map(&self, a: &Matrix<T>) -> Result<Self> {
        self.map_with(a, &FmConfig::default())
    }

    pub fn map_with(&self, a: &Matrix<T>, cfg: &FmConfig) -> Result<Self> {
        let n = self.dim();
        check_dim(n, a.cols())?;
        let k = a.rows();
        // variables (y, x); y = A x as equality pairs, then forget x
        let mut lifted = self.hrep.embed(k + n, k).into_rows();
        for i in 0..k {
            let mut normal = vec![T::zero(); k + n];
            normal[i] = T::one();
            for j in 0..n {
                normal[k + j] = -a.get(i, j).clone();
            }
            let e = LinRel::new(Vector::new(normal), T::zero());
            lifted.push(e.neg());
            lifted.push(e);
        }
        let lifted = HPoly::new_unchecked(k + n, lifted);
        let coords: Vec<usize> = (k..k + n).collect();
        Ok(Poly::new(lifted.project_out_with(&coords, cfg)?))
    }

    /// Convex hull of finitely many points, as the image of the standard
    /// simplex under `μ ↦ Σ μ_i v_i`.
    pub fn conv(dim: usize, points: &[Vector<T>]) -> Result<Self> {
        Self::conv_with(dim, points, &FmConfig::default())
    }

    pub fn conv_with(dim: usize, points: &[Vector<T>], cfg: &FmConfig) -> Result<Self> {
        for v in points {
            check_dim(dim, v.dim())?;
        }
        let pts = dedup_points(points);
        match pts.len() {
            0 => return Ok(Self::poly0(dim)),
            1 => return Ok(Self::pt(&pts[0])),
            _ => {}
        }
        let k = pts.len();
        let total = dim + k;
        let mut rows = Vec::new();
        for i in 0..k {
            rows.push(LinRel::new(Vector::unit(total, dim + i), T::zero()));
        }
        let mut sum = vec![T::zero(); total];
        for s in &mut sum[dim..] {
            *s = T::one();
        }
        let sum = LinRel::new(Vector::new(sum), T::one());
        rows.push(sum.clone());
        rows.push(sum.neg());
        for j in 0..dim {
            let mut normal = vec![T::zero(); total];
            normal[j] = T::one();
            for (i, v) in pts.iter().enumerate() {
                normal[dim + i] = -v[j].clone();
            }
            let e = LinRel::new(Vector::new(normal), T::zero());
            rows.push(e.clone());
            rows.push(e.neg());
        }
        let lifted = HPoly::new_unchecked(total, rows);
        let coords: Vec<usize> = (dim..total).collect();
        Ok(Poly::new(lifted.project_out_with(&coords, cfg)?))
    }

    /// Barycentric weights expressing `x` over `points`, when `x` lies in their hull.
    pub fn conv_witness(points: &[Vector<T>], x: &Vector<T>) -> Result<Option<ConvexWitness<T>>> {
        for v in points {
            check_dim(x.dim(), v.dim())?;
        }
        let pts = dedup_points(points);
        if pts.is_empty() {
            return Ok(None);
        }
        let lp = barycentric_program(&pts, x);
        Ok(match crate::lp::solve(&lp) {
            LpOutcome::Infeasible { .. } => None,
            out => {
                let mu = out.feasible_point().expect("feasible outcome");
                let (support, weights) = pts
                    .into_iter()
                    .zip(mu.entries().iter().cloned())
                    .filter(|(_, w)| w.is_positive())
                    .unzip();
                Some(ConvexWitness { support, weights })
            }
        })
    }

    /// A halfspace containing every point of `points` but not `x`; `None`
    /// iff `x` lies in their convex hull. Read off the Farkas certificate
    /// of the barycentric system.
    pub fn separation(points: &[Vector<T>], x: &Vector<T>) -> Result<Option<LinRel<T>>> {
        let n = x.dim();
        for v in points {
            check_dim(n, v.dim())?;
        }
        let pts = dedup_points(points);
        if pts.is_empty() {
            return Ok(Some(LinRel::new(Vector::zeros(n), T::one())));
        }
        let k = pts.len();
        let lp = barycentric_program(&pts, x);
        let LpOutcome::Infeasible { farkas } = crate::lp::solve(&lp) else {
            return Ok(None);
        };
        let offset = farkas[k].clone() - farkas[k + 1].clone();
        let normal = (0..n)
            .map(|j| farkas[k + 3 + 2 * j].clone() - farkas[k + 2 + 2 * j].clone())
            .collect();
        let e = LinRel::new(Vector::new(normal), offset);
        debug_assert!(!e.holds_at(x) && pts.iter().all(|v| e.holds_at(v)));
        Ok(Some(e))
    }

    /// Whether `c·x` is bounded below on the set.
    pub fn bounded(&self, c: &Vector<T>) -> Result<bool> {
        Ok(!self.minimize(c)?.is_unbounded())
    }

    /// Empty, or bounded in every coordinate direction.
    pub fn compact(&self) -> bool {
        if self.is_empty() {
            return true;
        }
        let n = self.dim();
        (0..n).all(|i| {
            let e = Vector::unit(n, i);
            self.bounded(&e).expect("dims agree") && self.bounded(&e.neg()).expect("dims agree")
        })
    }
}

/// Rows of `p` tight at the feasible point `x` that stay tight on all of `p`.
pub(crate) fn implicit_equalities<T: Scalar>(p: &HPoly<T>, x: &Vector<T>) -> Vec<usize> {
    let rows = p.rows();
    let n = p.dim();
    let mut open: Vec<usize> = (0..rows.len()).filter(|&i| rows[i].tight_at(x)).collect();
    // a row and its negation are both equalities without any LP
    let mut implicit: Vec<usize> = open
        .iter()
        .copied()
        .filter(|&i| open.iter().any(|&j| rows[j].normal == rows[i].normal.neg() && rows[j].offset == -rows[i].offset.clone()))
        .collect();
    open.retain(|i| !implicit.contains(i));
    // maximize a common slack t <= 1 over the open rows; t = 0 means the
    // dual support among them is tight everywhere
    while !open.is_empty() {
        let mut lifted = Vec::with_capacity(rows.len() + 1);
        for (i, r) in rows.iter().enumerate() {
            let mut e = r.normal.entries().to_vec();
            e.push(if open.contains(&i) { -T::one() } else { T::zero() });
            lifted.push(LinRel::new(Vector::new(e), r.offset.clone()));
        }
        lifted.push(LinRel::new(Vector::unit(n + 1, n).neg(), -T::one()));
        let LpOutcome::Optimal { point, value, dual } = minimize(&lifted, &Vector::unit(n + 1, n).neg()) else {
            unreachable!("x with t = 0 is feasible and t is bounded")
        };
        if !value.is_zero() {
            break;
        }
        let y = Vector::new(point.entries()[..n].to_vec());
        let found: Vec<usize> = open.iter().copied().filter(|&i| !dual[i].is_zero()).collect();
        if found.is_empty() {
            implicit.extend(open.iter().copied().filter(|&i| always_tight(p, &rows[i])));
            break;
        }
        implicit.extend(found.iter().copied());
        open.retain(|i| !found.contains(i) && rows[*i].tight_at(&y));
    }
    implicit.sort_unstable();
    implicit
}

/// `max normal·x = offset` over nonempty `p`, for a row valid on `p`.
pub(crate) fn always_tight<T: Scalar>(p: &HPoly<T>, r: &LinRel<T>) -> bool {
    if r.is_trivial_normal() {
        return r.offset.is_zero();
    }
    match minimize(p.rows(), &r.normal.neg()) {
        LpOutcome::Optimal { value, .. } => -value == r.offset,
        _ => false,
    }
}

fn dedup_points<T: Scalar>(points: &[Vector<T>]) -> Vec<Vector<T>> {
    let mut out: Vec<Vector<T>> = Vec::with_capacity(points.len());
    for p in points {
        if !out.contains(p) {
            out.push(p.clone());
        }
    }
    out
}

/// `μ >= 0`, `Σ μ = 1`, `Σ μ_i v_i = x` in the variables `μ`. Row layout:
/// `k` sign rows, the two sum rows, then a `>=`/`<=` pair per coordinate.
fn barycentric_program<T: Scalar>(points: &[Vector<T>], x: &Vector<T>) -> LinProgram<T> {
    let k = points.len();
    let mut rows = Vec::with_capacity(k + 2 + 2 * x.dim());
    for i in 0..k {
        rows.push(LinRel::new(Vector::unit(k, i), T::zero()));
    }
    let sum = LinRel::new(Vector::new(vec![T::one(); k]), T::one());
    rows.push(sum.clone());
    rows.push(sum.neg());
    for j in 0..x.dim() {
        let e = LinRel::new(Vector::new(points.iter().map(|v| v[j].clone()).collect()), x[j].clone());
        rows.push(e.clone());
        rows.push(e.neg());
    }
    LinProgram { constraints: rows, objective: Vector::zeros(k) }
}

/// Positive weights summing to one over a finite support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvexWitness<T> {
    pub support: Vec<Vector<T>>,
    pub weights: Vec<T>,
}

impl<T: Scalar> ConvexWitness<T> {
    /// The barycenter `Σ w_v v`.
    pub fn combine(&self) -> Vector<T> {
        let n = self.support.first().map_or(0, |v| v.dim());
        self.support
            .iter()
            .zip(&self.weights)
            .fold(Vector::zeros(n), |acc, (v, w)| acc.add_scaled(w, v))
    }

    pub fn is_valid(&self) -> bool {
        !self.support.is_empty()
            && self.weights.iter().all(|w| w.is_positive())
            && self.weights.iter().fold(T::zero(), |a, w| a + w.clone()) == T::one()
    }
}

impl<T: Scalar> Poly<T> {
    /// `Err` unless the set is compact; used by operations that require it.
    pub(crate) fn require_compact(&self, what: &str) -> Result<()> {
        if self.compact() {
            Ok(())
        } else {
            Err(Error::Precondition(format!("{what} requires a compact polyhedron")))
        }
    }
}
