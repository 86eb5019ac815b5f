//! Faces of polyhedra.
//!
//! A face of `P = {x : A x >= b}` is either empty or `P` with some rows
//! forced to equality. Every nonempty face is identified by its maximal
//! such index set (its active set) over one fixed non-redundant base of
//! `P`; the empty face is kept apart since a point-sized `P` makes every
//! index active on its top face too.

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::exactlin::{kernel_basis, rank};
use crate::lp::LpOutcome;
use crate::poly::always_tight;
use crate::{AffineSpace, Base, LinRel, Matrix, Poly, Scalar, Vector};

#[derive(Clone, Debug)]
pub struct Face<T> {
    /// `base.poly_eq(active)`, or the empty polyhedron.
    pub poly: Poly<T>,
    /// Maximal set of base rows tight on the whole face; all rows for the empty face.
    pub active: BTreeSet<usize>,
    /// Shifted dimension of the face.
    pub rank: usize,
}

impl<T: Scalar> Face<T> {
    pub fn is_empty(&self) -> bool {
        self.rank == 0
    }

    /// Identity within one face set: emptiness plus the active set.
    pub fn key(&self) -> (bool, &BTreeSet<usize>) {
        (self.is_empty(), &self.active)
    }

    /// The single point of a rank-1 face.
    pub fn point(&self) -> Option<&Vector<T>> {
        (self.rank == 1).then(|| self.poly.hull().origin()).flatten()
    }
}

/// All faces of a polyhedron over its non-redundant base, ordered by rank
/// then active set. Index 0 is the empty face and the last one is `P`.
#[derive(Clone, Debug)]
pub struct FaceSet<T> {
    pub base: Base<T>,
    pub faces: Vec<Face<T>>,
}

impl<T: Scalar> FaceSet<T> {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn top(&self) -> &Face<T> {
        self.faces.last().expect("face sets always hold the empty face")
    }

    /// Position of the face containing exactly the points of `q`, for `q` a face.
    pub fn locate(&self, q: &Poly<T>) -> Option<usize> {
        if q.is_empty() {
            return Some(0);
        }
        let act = active(&self.base, q);
        self.faces.iter().position(|f| !f.is_empty() && f.active == act)
    }

    pub fn vertices(&self) -> Vec<Vector<T>> {
        let mut out: Vec<Vector<T>> = self.faces.iter().filter_map(|f| f.point().cloned()).collect();
        out.sort();
        out
    }
}

/// Base rows tight on all of `p`; every row when `p` is empty.
pub fn active<T: Scalar>(base: &Base<T>, p: &Poly<T>) -> BTreeSet<usize> {
    let Some(x) = p.feasible_point() else {
        return base.all_indices();
    };
    base.tight_at(x)
        .into_iter()
        .filter(|&i| {
            let row = &base.items()[i];
            // max and min of normal·x over p both equal the offset
            always_tight(p.hrep(), row) && min_is_offset(p, row)
        })
        .collect()
}

fn min_is_offset<T: Scalar>(p: &Poly<T>, row: &LinRel<T>) -> bool {
    matches!(p.minimize(&row.normal), Ok(LpOutcome::Optimal { value, .. }) if value == row.offset)
}

/// Affine hull of `p`.
pub fn hull<T: Scalar>(p: &Poly<T>) -> AffineSpace<T> {
    p.hull().clone()
}

pub fn pdim<T: Scalar>(p: &Poly<T>) -> usize {
    p.pdim()
}

/// A point of `p` strict on every base row not active on `p`: the
/// isobarycenter of one maximizer per inactive row.
pub fn relint_pt<T: Scalar>(base: &Base<T>, p: &Poly<T>) -> Result<Vector<T>> {
    let Some(x0) = p.feasible_point() else {
        return Err(Error::Precondition("relative interior point of an empty polyhedron".into()));
    };
    let act = active(base, p);
    let mut witnesses = Vec::new();
    for (i, row) in base.items().iter().enumerate() {
        if act.contains(&i) {
            continue;
        }
        let w = match p.minimize(&row.normal.neg())? {
            LpOutcome::Optimal { point, .. } => point,
            LpOutcome::Unbounded { feasible, ray } => feasible.add(&ray),
            LpOutcome::Infeasible { .. } => unreachable!("p is nonempty"),
        };
        witnesses.push(w);
    }
    if witnesses.is_empty() {
        // p is the affine set cut out by the active rows
        return Ok(p.hull().origin().filter(|o| p.member(o).unwrap_or(false)).unwrap_or(x0).clone());
    }
    Ok(Vector::barycenter(&witnesses).expect("nonempty"))
}

/// Points of `p` minimizing `c·x`: empty when `p` is empty or `c` is
/// unbounded below, `p` itself for `c = 0`.
pub fn argmin<T: Scalar>(p: &Poly<T>, c: &Vector<T>) -> Result<Poly<T>> {
    Ok(match p.minimize(c)? {
        LpOutcome::Optimal { value, .. } => {
            if c.is_zero() {
                p.clone()
            } else {
                p.intersect(&Poly::hp(&LinRel::new(c.clone(), value)))?
            }
        }
        _ => Poly::poly0(p.dim()),
    })
}

/// Whether `f` is a face of `p = base.poly()`: empty, or a subset of `p`
/// equal to `p` with its active rows forced to equality.
pub fn is_face<T: Scalar>(f: &Poly<T>, p: &Poly<T>, base: &Base<T>) -> Result<bool> {
    if f.is_empty() {
        return Ok(true);
    }
    if !f.subset(p)? {
        return Ok(false);
    }
    let act = active(base, f);
    f.same_set(&base.poly_eq(&act)?)
}

/// Non-redundant base of `p` (the canonical empty row when `p` is empty).
pub fn nonredundant_base<T: Scalar>(p: &Poly<T>) -> Base<T> {
    Base::from_hpoly(&p.hrep().remove_redundancy())
}

/// The face `base.poly_eq(eqs)` with its maximal active set, or `None` if empty.
fn face_of<T: Scalar>(base: &Base<T>, eqs: &BTreeSet<usize>) -> Option<Face<T>> {
    let poly = base.poly_eq(eqs).expect("indices come from the base");
    if poly.is_empty() {
        return None;
    }
    // rows of poly_eq are the base rows followed by negated copies, so the
    // implicit equalities below base.len() are exactly the active set
    let active: BTreeSet<usize> = poly.implicit_equalities().iter().copied().filter(|&i| i < base.len()).collect();
    debug_assert!(eqs.is_subset(&active));
    let rank = poly.pdim();
    let poly = if active == *eqs { poly } else { base.poly_eq(&active).expect("valid indices") };
    Some(Face { poly, active, rank })
}

fn empty_face<T: Scalar>(base: &Base<T>) -> Face<T> {
    Face { poly: Poly::poly0(base.ambient()), active: base.all_indices(), rank: 0 }
}

/// Faces of `F` one rank below it, given over the base of an ambient
/// polyhedron containing `F` as a face.
fn facets_of_face<T: Scalar>(base: &Base<T>, f: &Face<T>) -> Vec<Face<T>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for e in 0..base.len() {
        if f.active.contains(&e) {
            continue;
        }
        let mut eqs = f.active.clone();
        eqs.insert(e);
        if let Some(g) = face_of(base, &eqs) {
            if g.rank + 1 == f.rank && seen.insert(g.active.clone()) {
                out.push(g);
            }
        }
    }
    out
}

fn normals_matrix<T: Scalar>(base: &Base<T>, rows: impl IntoIterator<Item = usize>) -> Matrix<T> {
    let normals: Vec<Vector<T>> = rows.into_iter().map(|i| base.items()[i].normal.clone()).collect();
    Matrix::from_rows(base.ambient(), &normals).expect("base rows share the dimension")
}

/// Farthest point from `x` along `d` inside the base polyhedron, for `x`
/// feasible and `d` not increasing any tight row below its offset.
fn shoot<T: Scalar>(base: &Base<T>, x: &Vector<T>, d: &Vector<T>) -> Option<Vector<T>> {
    let mut best: Option<T> = None;
    for r in base.items() {
        let rate = r.normal.inner(d);
        if rate.is_negative() {
            let t = (r.normal.inner(x) - r.offset.clone()) / -rate;
            if best.as_ref().is_none_or(|b| t < *b) {
                best = Some(t);
            }
        }
    }
    best.map(|t| x.add_scaled(&t, d))
}

/// Vertices of the compact nonempty polyhedron of `base`, each with the
/// rows tight at it: move `start` to a vertex, then walk the edges.
fn walk_vertices<T: Scalar>(base: &Base<T>, start: &Vector<T>) -> Vec<(Vector<T>, BTreeSet<usize>)> {
    let n = base.ambient();
    let mut x = start.clone();
    loop {
        let Some(d) = kernel_basis(&normals_matrix(base, base.tight_at(&x))).into_iter().next() else {
            break;
        };
        x = shoot(base, &x, &d).or_else(|| shoot(base, &x, &d.neg())).expect("compact polyhedra contain no line");
    }
    let mut out = vec![(x.clone(), base.tight_at(&x))];
    let mut seen = HashSet::from([x]);
    let mut next = 0;
    while next < out.len() {
        let (v, tight) = out[next].clone();
        next += 1;
        let tight: Vec<usize> = tight.into_iter().collect();
        let mut dirs: Vec<Vector<T>> = Vec::new();
        for sub in subsets(&tight, n.saturating_sub(1)) {
            let k = kernel_basis(&normals_matrix(base, sub));
            if k.len() != 1 {
                continue;
            }
            for d in [k[0].clone(), k[0].neg()] {
                let feasible = tight.iter().all(|&i| !base.items()[i].normal.inner(&d).is_negative());
                if feasible && !dirs.contains(&d) {
                    dirs.push(d);
                }
            }
        }
        for d in dirs {
            let w = shoot(base, &v, &d).expect("compact polyhedra have bounded edges");
            if seen.insert(w.clone()) {
                let t = base.tight_at(&w);
                out.push((w, t));
            }
        }
    }
    out
}

fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, &first) in items.iter().enumerate() {
        for mut rest in subsets(&items[i + 1..], k - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Shifted dimension of the hull of a nonempty point set.
fn points_pdim<T: Scalar>(points: &[&Vector<T>]) -> usize {
    let diffs: Vec<Vector<T>> = points[1..].iter().map(|q| q.sub(points[0])).collect();
    1 + rank(&Matrix::from_rows(points[0].dim(), &diffs).expect("same dimension"))
}

/// Facet closure for a compact polyhedron, carried out on vertex sets: a
/// face's vertices are those of its parent tight on the new row, and its
/// active set is the rows tight at all of them.
fn compact_faces<T: Scalar>(base: &Base<T>, top: Face<T>) -> Vec<Face<T>> {
    let x = top.poly.feasible_point().expect("nonempty").clone();
    let verts = walk_vertices(base, &x);
    let all: Vec<usize> = (0..verts.len()).collect();
    let mut seen: HashSet<BTreeSet<usize>> = HashSet::from([top.active.clone()]);
    let mut queue = VecDeque::from([(top.active.clone(), all, top.rank)]);
    let mut faces = vec![top];
    while let Some((active, vs, r)) = queue.pop_front() {
        for e in (0..base.len()).filter(|e| !active.contains(e)) {
            let sub: Vec<usize> = vs.iter().copied().filter(|&v| verts[v].1.contains(&e)).collect();
            if sub.is_empty() {
                continue;
            }
            let act: BTreeSet<usize> =
                sub[1..].iter().fold(verts[sub[0]].1.clone(), |acc, &v| acc.intersection(&verts[v].1).copied().collect());
            if seen.contains(&act) {
                continue;
            }
            let rank = points_pdim(&sub.iter().map(|&v| &verts[v].0).collect::<Vec<_>>());
            if rank + 1 != r {
                continue;
            }
            seen.insert(act.clone());
            let poly = base.poly_eq(&act).expect("valid indices");
            faces.push(Face { poly, active: act.clone(), rank });
            queue.push_back((act, sub, rank));
        }
    }
    faces
}

/// Facet closure with one LP-backed face computation per candidate row.
fn lp_faces<T: Scalar>(base: &Base<T>, top: Face<T>) -> Vec<Face<T>> {
    let mut seen: HashSet<BTreeSet<usize>> = HashSet::from([top.active.clone()]);
    let mut queue = VecDeque::from([top.clone()]);
    let mut faces = vec![top];
    while let Some(f) = queue.pop_front() {
        for g in facets_of_face(base, &f) {
            if seen.insert(g.active.clone()) {
                queue.push_back(g.clone());
                faces.push(g);
            }
        }
    }
    faces
}

/// Every face of `p`, found by closing `{p}` under taking facets.
pub fn face_set<T: Scalar>(p: &Poly<T>) -> FaceSet<T> {
    let base = nonredundant_base(p);
    let bottom = empty_face(&base);
    let Some(top) = face_of(&base, &BTreeSet::new()) else {
        return FaceSet { base, faces: vec![bottom] };
    };
    let mut faces = if p.compact() { compact_faces(&base, top) } else { lp_faces(&base, top) };
    faces.push(bottom);
    faces.sort_by(|a, b| (a.rank, &a.active).cmp(&(b.rank, &b.active)));
    // the empty face sorts first: it is the only rank-0 face
    FaceSet { base, faces }
}

/// Facets of a nonempty `p`: the non-active rows of a non-redundant base,
/// each forced to equality.
pub fn facets<T: Scalar>(p: &Poly<T>) -> Result<Vec<Face<T>>> {
    if p.is_empty() {
        return Err(Error::Precondition("facets of an empty polyhedron".into()));
    }
    let base = nonredundant_base(p);
    let top = face_of(&base, &BTreeSet::new()).expect("nonempty");
    let mut out = Vec::new();
    for e in (0..base.len()).filter(|e| !top.active.contains(e)) {
        let mut eqs = top.active.clone();
        eqs.insert(e);
        let g = face_of(&base, &eqs).ok_or_else(|| Error::Invariant("facet of a non-redundant base is empty".into()))?;
        if g.rank + 1 != top.rank {
            return Err(Error::Invariant(format!("row {e} does not define a facet")));
        }
        out.push(g);
    }
    Ok(out)
}

/// Points `x` such that `{x}` is a face of `p`, sorted.
pub fn vertex_set<T: Scalar>(p: &Poly<T>) -> Vec<Vector<T>> {
    face_set(p).vertices()
}

/// Whether a compact `p` equals the convex hull of its vertices.
pub fn minkowski_check<T: Scalar>(p: &Poly<T>) -> Result<bool> {
    p.require_compact("the Minkowski check")?;
    let hull = Poly::conv(p.dim(), &vertex_set(p))?;
    hull.same_set(p)
}

/// Endpoints of a compact `p` of shifted dimension 2 (a proper segment).
pub fn dim2_segment<T: Scalar>(p: &Poly<T>) -> Result<(Vector<T>, Vector<T>)> {
    p.require_compact("dim2_segment")?;
    if p.pdim() != 2 {
        return Err(Error::Precondition(format!("dim2_segment needs pdim 2, got {}", p.pdim())));
    }
    let d = p.hull().directions()[0].clone();
    let end = |c: &Vector<T>| -> Result<Vector<T>> {
        match p.minimize(c)? {
            LpOutcome::Optimal { point, .. } => Ok(point),
            _ => Err(Error::Invariant("segment endpoint LP not optimal".into())),
        }
    };
    let x = end(&d)?;
    let y = end(&d.neg())?;
    Ok((x, y))
}
