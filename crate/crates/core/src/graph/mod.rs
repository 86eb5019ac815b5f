//! Vertex-edge graphs of polytopes, simplex-style descent, and paths that
//! avoid removed vertices.

use std::collections::{BTreeSet, VecDeque};

use serde_json::{json, Value};

use crate::affine::vector_json;
use crate::error::{Error, Result};
use crate::exactlin::kernel_basis;
use crate::faces::{active, argmin};
use crate::lattice::FaceLattice;
use crate::{LinRel, Matrix, Poly, Scalar, Vector};

/// Vertices in sorted order and edges as index pairs `(i, j)` with `i < j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexGraph<T> {
    vertices: Vec<Vector<T>>,
    edges: Vec<(usize, usize)>,
    adjacent: Vec<Vec<usize>>,
}

impl<T: Scalar> VertexGraph<T> {
    /// Panics if an edge is out of range or a loop.
    pub fn new(mut vertices: Vec<Vector<T>>, edges: impl IntoIterator<Item = (Vector<T>, Vector<T>)>) -> Self {
        vertices.sort();
        vertices.dedup();
        let index = |x: &Vector<T>| vertices.binary_search(x).expect("edge endpoint is a vertex");
        let mut pairs: Vec<(usize, usize)> = edges
            .into_iter()
            .map(|(a, b)| {
                let (i, j) = (index(&a), index(&b));
                assert_ne!(i, j, "graphs have no loops");
                (i.min(j), i.max(j))
            })
            .collect();
        pairs.sort();
        pairs.dedup();
        let mut adjacent = vec![Vec::new(); vertices.len()];
        for &(i, j) in &pairs {
            adjacent[i].push(j);
            adjacent[j].push(i);
        }
        for list in &mut adjacent {
            list.sort();
        }
        VertexGraph { vertices, edges: pairs, adjacent }
    }

    pub fn vertices(&self) -> &[Vector<T>] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn index_of(&self, x: &Vector<T>) -> Option<usize> {
        self.vertices.binary_search(x).ok()
    }

    /// Neighbors of vertex `i`, ascending.
    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adjacent[i]
    }

    pub fn adjacent(&self, x: &Vector<T>, y: &Vector<T>) -> bool {
        match (self.index_of(x), self.index_of(y)) {
            (Some(i), Some(j)) => self.adjacent[i].binary_search(&j).is_ok(),
            _ => false,
        }
    }

    /// Whether the graph stays connected once `removed` vertices are deleted.
    pub fn connected_without(&self, removed: &BTreeSet<usize>) -> bool {
        let Some(start) = (0..self.vertices.len()).find(|i| !removed.contains(i)) else {
            return true;
        };
        let mut seen = vec![false; self.vertices.len()];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        let mut reached = 1;
        while let Some(i) = queue.pop_front() {
            for &j in &self.adjacent[i] {
                if !seen[j] && !removed.contains(&j) {
                    seen[j] = true;
                    reached += 1;
                    queue.push_back(j);
                }
            }
        }
        reached + removed.len() == self.vertices.len()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "vertices": self.vertices.iter().map(vector_json).collect::<Vec<_>>(),
            "edges": self.edges.iter().map(|&(i, j)| json!([i, j])).collect::<Vec<_>>(),
        })
    }
}

/// A walk given by its start and the points visited after it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Path<T> {
    pub start: Vector<T>,
    pub steps: Vec<Vector<T>>,
}

impl<T: Scalar> Path<T> {
    pub fn empty(start: Vector<T>) -> Self {
        Path { start, steps: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn last(&self) -> &Vector<T> {
        self.steps.last().unwrap_or(&self.start)
    }

    /// Start followed by every step.
    pub fn points(&self) -> impl Iterator<Item = &Vector<T>> {
        std::iter::once(&self.start).chain(&self.steps)
    }

    /// Consecutive points are adjacent in `g`.
    pub fn is_walk_in(&self, g: &VertexGraph<T>) -> bool {
        g.index_of(&self.start).is_some() && self.points().zip(&self.steps).all(|(a, b)| g.adjacent(a, b))
    }

    pub fn avoids(&self, removed: &[Vector<T>]) -> bool {
        self.points().all(|x| !removed.contains(x))
    }

    /// Vertex indices of the visited points in `g`.
    pub fn indices(&self, g: &VertexGraph<T>) -> Option<Vec<usize>> {
        self.points().map(|x| g.index_of(x)).collect()
    }
}

/// A polytope with its face lattice and vertex graph computed once.
#[derive(Clone, Debug)]
pub struct Polytope<T> {
    poly: Poly<T>,
    lattice: FaceLattice<T>,
    graph: VertexGraph<T>,
}

impl<T: Scalar> Polytope<T> {
    pub fn new(poly: Poly<T>) -> Result<Self> {
        poly.require_compact("a vertex graph")?;
        let lattice = FaceLattice::build(&poly);
        Ok(Self::from_lattice(poly, lattice))
    }

    fn from_lattice(poly: Poly<T>, lattice: FaceLattice<T>) -> Self {
        let edges = (0..lattice.len()).filter(|&i| lattice.rank(i) == 2).map(|i| {
            let ends = lattice.vertices_of(i);
            debug_assert_eq!(ends.len(), 2, "rank-2 faces of a polytope are segments");
            (ends[0].clone(), ends[1].clone())
        });
        let graph = VertexGraph::new(lattice.vertices(), edges.collect::<Vec<_>>());
        Polytope { poly, lattice, graph }
    }

    pub fn poly(&self) -> &Poly<T> {
        &self.poly
    }

    pub fn lattice(&self) -> &FaceLattice<T> {
        &self.lattice
    }

    pub fn graph(&self) -> &VertexGraph<T> {
        &self.graph
    }

    /// The face with lattice index `i`, with the vertices and edges of `self` it contains.
    pub fn face(&self, i: usize) -> Result<Self> {
        let sub = self.lattice.interval(self.lattice.bottom(), i)?;
        Ok(Self::from_lattice(self.lattice.face(i).poly.clone(), sub))
    }

    fn vertex(&self, x: &Vector<T>) -> Result<usize> {
        self.graph.index_of(x).ok_or_else(|| Error::Precondition(format!("{x} is not a vertex")))
    }

    /// The lexicographically smallest neighbor `w` of `v` with `c·w < c·v`.
    pub fn improve_step(&self, c: &Vector<T>, v: &Vector<T>) -> Result<Option<Vector<T>>> {
        let i = self.vertex(v)?;
        let cv = c.dot(v)?;
        for &j in self.graph.neighbors(i) {
            let w = &self.graph.vertices[j];
            if c.dot(w)? < cv {
                return Ok(Some(w.clone()));
            }
        }
        Ok(None)
    }

    /// Repeated improving steps from `v` until a minimizer of `c` is reached.
    pub fn improve_path(&self, c: &Vector<T>, v: &Vector<T>) -> Result<Path<T>> {
        let mut path = Path::empty(v.clone());
        while let Some(w) = self.improve_step(c, path.last())? {
            path.steps.push(w);
        }
        Ok(path)
    }

    /// A path from `v` to `w`: descend along the sum of the base normals tight at `w`,
    /// whose only minimizer is `w`.
    pub fn connected_path(&self, v: &Vector<T>, w: &Vector<T>) -> Result<Path<T>> {
        self.vertex(v)?;
        self.vertex(w)?;
        let base = self.lattice.base();
        let mut c = Vector::zeros(self.poly.dim());
        for i in active(base, &Poly::pt(w)) {
            c = c.add(&base.items()[i].normal);
        }
        let path = self.improve_path(&c, v)?;
        if path.last() != w {
            return Err(Error::Invariant(format!("descent toward {w} stopped at {}", path.last())));
        }
        Ok(path)
    }

    /// Whether the graph stays connected after removing any `n - 1` vertices,
    /// by exhaustive search.
    pub fn n_connectivity_check(&self) -> Result<bool> {
        let n = self.require_full_dim()?;
        let k = n - 1;
        let count = self.graph.vertices.len();
        let mut subset: Vec<usize> = (0..k).collect();
        if k > count {
            return Ok(true);
        }
        loop {
            if !self.graph.connected_without(&subset.iter().copied().collect()) {
                return Ok(false);
            }
            // next k-subset in lexicographic order
            let Some(pos) = (0..k).rev().find(|&p| subset[p] < count - k + p) else {
                return Ok(true);
            };
            subset[pos] += 1;
            for q in pos + 1..k {
                subset[q] = subset[q - 1] + 1;
            }
        }
    }

    fn require_full_dim(&self) -> Result<usize> {
        let n = self.poly.dim();
        if n == 0 || self.poly.pdim() != n + 1 {
            return Err(Error::Precondition(format!(
                "needs a full-dimensional polytope (pdim {} in dimension {n})",
                self.poly.pdim()
            )));
        }
        Ok(n)
    }

    /// A path from `v` to `w` that avoids the `n - 1` `removed` vertices.
    pub fn balinski_path(&self, removed: &[Vector<T>], v: &Vector<T>, w: &Vector<T>) -> Result<Path<T>> {
        let n = self.require_full_dim()?;
        for x in removed.iter().chain([v, w]) {
            self.vertex(x)?;
        }
        let distinct: BTreeSet<&Vector<T>> = removed.iter().collect();
        if distinct.len() != n - 1 || removed.len() != n - 1 {
            return Err(Error::Precondition(format!("expected {} distinct removed vertices, got {}", n - 1, removed.len())));
        }
        if distinct.contains(v) || distinct.contains(w) {
            return Err(Error::Precondition("path endpoints must not be removed".into()));
        }
        if v == w {
            return Ok(Path::empty(v.clone()));
        }
        if removed.is_empty() {
            return self.connected_path(v, w);
        }

        let mut through: Vec<Vector<T>> = vec![v.clone()];
        through.extend(removed.iter().cloned());
        let mut e = subset_hp(&through, n)?;
        let side = |e: &LinRel<T>, x: &Vector<T>| e.normal.inner(x).cmp(&e.offset);
        match side(&e, w) {
            std::cmp::Ordering::Greater => e = e.neg(),
            std::cmp::Ordering::Equal => {
                let z = self
                    .graph
                    .vertices
                    .iter()
                    .find(|z| side(&e, z).is_ne())
                    .ok_or_else(|| Error::Invariant("polytope lies in a hyperplane".into()))?;
                if side(&e, z).is_gt() {
                    e = e.neg();
                }
            }
            std::cmp::Ordering::Less => {}
        }
        let c = &e.normal;
        let p1 = self.improve_path(c, v)?;
        let p2 = self.improve_path(c, w)?;
        let f = argmin(&self.poly, c)?;
        let fi = self
            .lattice
            .locate(&f)
            .ok_or_else(|| Error::Invariant("minimizing set is not a face".into()))?;
        let p3 = self.face(fi)?.connected_path(p1.last(), p2.last())?;

        let mut steps = p1.steps;
        steps.extend(p3.steps);
        let mut back: Vec<Vector<T>> = std::iter::once(w.clone()).chain(p2.steps).collect();
        back.pop();
        back.reverse();
        steps.extend(back);
        Ok(Path { start: v.clone(), steps })
    }
}

/// A hyperplane through every point of `points`, `0 < |points| <= n`.
pub fn subset_hp<T: Scalar>(points: &[Vector<T>], n: usize) -> Result<LinRel<T>> {
    if points.is_empty() || points.len() > n {
        return Err(Error::Precondition(format!(
            "a hyperplane through {} points needs between 1 and {n} of them",
            points.len()
        )));
    }
    let rows: Vec<Vector<T>> = points
        .iter()
        .map(|x| {
            crate::error::check_dim(n, x.dim())?;
            Ok(x.concat(&Vector::new(vec![-T::one()])))
        })
        .collect::<Result<_>>()?;
    let m = Matrix::from_rows(n + 1, &rows)?;
    let kernel = kernel_basis(&m);
    let k = kernel
        .iter()
        .find(|k| k.entries()[..n].iter().any(|x| !x.is_zero()))
        .ok_or_else(|| Error::Invariant("no hyperplane through the points".into()))?;
    let e = LinRel::new(Vector::new(k.entries()[..n].to_vec()), k.entries()[n].clone());
    Ok(e.normalized())
}
