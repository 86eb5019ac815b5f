#![allow(clippy::needless_range_loop)]

// Independent oracles shared by the unit and integration tests. They use
// only membership, LP feasibility and set comparison, never the facet
// closure or active-set machinery they cross-check.
#![allow(dead_code)]

use std::collections::BTreeSet;

use polyface::{Base, LinRel, Poly, Scalar, Vector};

/// All sets `base.poly_eq(I)` for `I ⊆ base`, plus the empty set,
/// deduplicated by set equality. The empty set comes first.
pub fn brute_force_faces<T: Scalar>(base: &Base<T>) -> Vec<Poly<T>> {
    let m = base.len();
    assert!(m <= 16, "brute force limited to 16 rows");
    let mut unique: Vec<Poly<T>> = vec![Poly::poly0(base.ambient())];
    for mask in 0u32..(1 << m) {
        let eqs: BTreeSet<usize> = (0..m).filter(|i| mask & (1 << i) != 0).collect();
        let q = base.poly_eq(&eqs).unwrap();
        let Some(qx) = q.feasible_point().cloned() else { continue };
        let mut fresh = true;
        for u in unique.iter().skip(1) {
            let ux = u.feasible_point().unwrap();
            // cheap rejection before the LP-based comparison
            if !u.member(&qx).unwrap() || !q.member(ux).unwrap() {
                continue;
            }
            if q.same_set(u).unwrap() {
                fresh = false;
                break;
            }
        }
        if fresh {
            unique.push(q);
        }
    }
    unique
}

/// Vertices as the unique solutions of tight `n x n` subsystems that are
/// feasible, by enumerating every `n`-subset of rows.
pub fn tight_subsystem_vertices<T: Scalar>(rows: &[LinRel<T>], n: usize) -> Vec<Vector<T>> {
    let mut out: Vec<Vector<T>> = Vec::new();
    for subset in subsets(rows.len(), n) {
        if let Some(x) = solve_square(&subset.iter().map(|&i| rows[i].clone()).collect::<Vec<_>>(), n) {
            if rows.iter().all(|r| dot(&r.normal, &x) >= r.offset) && !out.contains(&x) {
                out.push(x);
            }
        }
    }
    out.sort();
    out
}

pub fn dot<T: Scalar>(a: &Vector<T>, b: &Vector<T>) -> T {
    a.entries().iter().zip(b.entries()).fold(T::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

/// Unique solution of a square system by Cramer-free elimination with
/// partial search; `None` when singular.
pub fn solve_square<T: Scalar>(rows: &[LinRel<T>], n: usize) -> Option<Vector<T>> {
    let mut m: Vec<Vec<T>> = rows
        .iter()
        .map(|r| {
            let mut v = r.normal.entries().to_vec();
            v.push(r.offset.clone());
            v
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !m[r][c].is_zero())?;
        m.swap(c, p);
        for r in 0..n {
            if r != c && !m[r][c].is_zero() {
                let f = m[r][c].clone() / m[c][c].clone();
                for k in c..=n {
                    let sub = f.clone() * m[c][k].clone();
                    m[r][k] = m[r][k].clone() - sub;
                }
            }
        }
    }
    Some(Vector::new((0..n).map(|i| m[i][n].clone() / m[i][i].clone()).collect()))
}

pub fn subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            cur.push(i);
            rec(i + 1, m, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, m, k, &mut Vec::new(), &mut out);
    out
}

/// Connectivity of the graph on `0..n` minus `removed`, by BFS.
pub fn connected_without(n: usize, edges: &[(usize, usize)], removed: &[usize]) -> bool {
    let alive: Vec<usize> = (0..n).filter(|i| !removed.contains(i)).collect();
    let Some(&start) = alive.first() else { return true };
    let mut seen = vec![false; n];
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(u) = stack.pop() {
        for &(a, b) in edges {
            let w = if a == u { b } else if b == u { a } else { continue };
            if !removed.contains(&w) && !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    alive.iter().all(|&i| seen[i])
}

/// Some solution of `rows · x = rhs` with free variables set to zero.
pub fn particular_solution<T: Scalar>(rows: &[Vec<T>], rhs: &[T], n: usize) -> Option<Vec<T>> {
    let mut m: Vec<Vec<T>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut v = r.clone();
            v.push(b.clone());
            v
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let lead = m[r][c].clone();
        for k in 0..=n {
            m[r][k] = m[r][k].clone() / lead.clone();
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for k in 0..=n {
                    let sub = f.clone() * m[r][k].clone();
                    m[i][k] = m[i][k].clone() - sub;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if m[r..].iter().any(|row| !row[n].is_zero()) {
        return None;
    }
    let mut x = vec![T::zero(); n];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = m[i][n].clone();
    }
    Some(x)
}

pub fn rank_of<T: Scalar>(rows: &[Vec<T>], n: usize) -> usize {
    let mut m: Vec<Vec<T>> = rows.to_vec();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        for i in r + 1..m.len() {
            let f = m[i][c].clone() / m[r][c].clone();
            for k in c..n {
                let sub = f.clone() * m[r][k].clone();
                m[i][k] = m[i][k].clone() - sub;
            }
        }
        r += 1;
    }
    r
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpClass<T> {
    Infeasible,
    Unbounded,
    Optimal(T),
}

/// Classifies `min c·x s.t. rows` without a simplex method. A nonempty
/// polyhedron has a minimal face cut out by `rank A` independent tight rows,
/// and `c·x` is bounded below iff `c` is a nonnegative combination of
/// linearly independent rows.
pub fn lp_oracle<T: Scalar>(rows: &[LinRel<T>], c: &Vector<T>, n: usize) -> LpClass<T> {
    let a: Vec<Vec<T>> = rows.iter().map(|r| r.normal.entries().to_vec()).collect();
    let r = rank_of(&a, n);
    let feasible_at = |x: &[T]| rows.iter().all(|row| dot(&row.normal, &Vector::new(x.to_vec())) >= row.offset);
    let mut best: Option<T> = None;
    for s in subsets(rows.len(), r) {
        let sub: Vec<Vec<T>> = s.iter().map(|&i| a[i].clone()).collect();
        if rank_of(&sub, n) != r {
            continue;
        }
        let rhs: Vec<T> = s.iter().map(|&i| rows[i].offset.clone()).collect();
        if let Some(x) = particular_solution(&sub, &rhs, n) {
            if feasible_at(&x) {
                let val = dot(c, &Vector::new(x));
                if best.as_ref().is_none_or(|b| val < *b) {
                    best = Some(val);
                }
            }
        }
    }
    let Some(best) = best else { return LpClass::Infeasible };
    let in_cone = (0..=r.min(n)).any(|k| {
        subsets(rows.len(), k).into_iter().any(|s| {
            let cols: Vec<Vec<T>> = s.iter().map(|&i| a[i].clone()).collect();
            if rank_of(&cols, n) != k {
                return false;
            }
            // c = Σ λ_i a_i  as n equations in k unknowns
            let eqs: Vec<Vec<T>> = (0..n).map(|j| cols.iter().map(|col| col[j].clone()).collect()).collect();
            particular_solution(&eqs, c.entries(), k).is_some_and(|lam| lam.iter().all(|l| !l.is_negative()))
        })
    });
    if in_cone {
        LpClass::Optimal(best)
    } else {
        LpClass::Unbounded
    }
}
