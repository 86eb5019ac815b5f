// Face, dimension and graph properties as reusable checks; each returns
// a description of the first violation found.
#![allow(dead_code)]

use std::collections::BTreeSet;

use polyface::faces::{active, argmin, dim2_segment, face_set, facets, is_face};
use polyface::{QAffineSpace, QFaceLattice, QPoly, QPolytope, QVector};

pub type Check = Result<(), String>;

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn err(e: polyface::Error) -> String {
    e.to_string()
}

/// A face of a face of `p` is a face of `p`.
pub fn faces_of_faces(p: &QPoly) -> Check {
    let outer = face_set(p);
    for f in &outer.faces {
        for g in face_set(&f.poly).faces {
            ensure(is_face(&g.poly, p, &outer.base).map_err(err)?, || format!("face of face {:?} is not a face", g.active))?;
            ensure(outer.locate(&g.poly).is_some(), || "face of a face not found in the face set".into())?;
        }
    }
    Ok(())
}

/// The intersection of two faces is a face.
pub fn intersections(p: &QPoly) -> Check {
    let fs = face_set(p);
    for (k, f) in fs.faces.iter().enumerate() {
        for g in &fs.faces[k..] {
            let meet = f.poly.intersect(&g.poly).map_err(err)?;
            let i = fs.locate(&meet).ok_or("intersection is not a face")?;
            ensure(fs.faces[i].poly.same_set(&meet).map_err(err)?, || "located face differs from the intersection".into())?;
        }
    }
    Ok(())
}

/// The hull of a nonempty face is cut out by its active rows.
pub fn face_hulls(p: &QPoly) -> Check {
    let fs = face_set(p);
    for f in fs.faces.iter().filter(|f| !f.is_empty()) {
        let eqs: Vec<_> = f
            .active
            .iter()
            .flat_map(|&i| {
                let r = fs.base.items()[i].clone();
                [r.clone(), r.neg()]
            })
            .collect();
        let expected = QAffineSpace::of_rels(p.dim(), &eqs).map_err(err)?;
        ensure(f.poly.hull() == &expected, || format!("hull of face {:?} is not cut out by its active rows", f.active))?;
    }
    Ok(())
}

/// Every nonempty face is the argmin of the sum of its active normals, and
/// argmin points beat every vertex.
pub fn faces_are_argmins(p: &QPoly) -> Check {
    let fs = face_set(p);
    let verts = fs.vertices();
    for f in fs.faces.iter().filter(|f| !f.is_empty()) {
        let mut c = QVector::zeros(p.dim());
        for &i in &f.active {
            c = c.add(&fs.base.items()[i].normal);
        }
        let q = argmin(p, &c).map_err(err)?;
        ensure(q.same_set(&f.poly).map_err(err)?, || format!("face {:?} is not the argmin of its normals", f.active))?;
        let x = q.feasible_point().ok_or("empty argmin")?;
        for w in &verts {
            ensure(c.dot(x).map_err(err)? <= c.dot(w).map_err(err)?, || "argmin point beaten by a vertex".into())?;
        }
    }
    Ok(())
}

/// Points have pdim 1, proper segments pdim 2, and every rank-2 face of a
/// polytope is the segment between two distinct endpoints.
pub fn small_dimensions(p: &QPoly) -> Check {
    let x = QVector::from_i64s(&vec![1; p.dim()]);
    let y = QVector::zeros(p.dim());
    ensure(QPoly::pt(&x).pdim() == 1, || "pdim of a point".into())?;
    ensure(QPoly::segm(&x, &y).map_err(err)?.pdim() == 2, || "pdim of a segment".into())?;
    if !p.compact() {
        return Ok(());
    }
    let l = QFaceLattice::build(p);
    for i in (0..l.len()).filter(|&i| l.rank(i) == 2) {
        let f = &l.face(i).poly;
        let (a, b) = dim2_segment(f).map_err(err)?;
        ensure(a != b && QPoly::segm(&a, &b).map_err(err)?.same_set(f).map_err(err)?, || "rank-2 face is not a segment".into())?;
    }
    Ok(())
}

/// Facets have rank one below the polyhedron.
pub fn facet_ranks(p: &QPoly) -> Check {
    for f in facets(p).map_err(err)? {
        ensure(f.poly.pdim() + 1 == p.pdim(), || format!("facet {:?} has pdim {}", f.active, f.poly.pdim()))?;
    }
    Ok(())
}

/// Forcing the union of two active sets gives the intersection, whose
/// active set contains the union.
pub fn active_unions(p: &QPoly) -> Check {
    let fs = face_set(p);
    for (k, f) in fs.faces.iter().enumerate().filter(|(_, f)| !f.is_empty()) {
        for g in fs.faces[k..].iter().filter(|g| !g.is_empty()) {
            let union: BTreeSet<usize> = f.active.union(&g.active).copied().collect();
            let meet = fs.base.poly_eq(&union).map_err(err)?;
            ensure(meet.same_set(&f.poly.intersect(&g.poly).map_err(err)?).map_err(err)?, || "union of active sets".into())?;
            if !meet.is_empty() {
                ensure(active(&fs.base, &meet).is_superset(&union), || "active set of the meet".into())?;
            }
        }
    }
    Ok(())
}

/// The graph of a face is the subgraph of edges of `p` inside it.
pub fn face_subgraphs(p: &QPoly) -> Check {
    let whole = QPolytope::new(p.clone()).map_err(err)?;
    for i in 1..whole.lattice().len() {
        let f = whole.face(i).map_err(err)?;
        let alone = QPolytope::new(whole.lattice().face(i).poly.clone()).map_err(err)?;
        ensure(f.graph() == alone.graph(), || format!("graph of face {i} differs from its own graph"))?;
        for &(a, b) in alone.graph().edges() {
            let (x, y) = (&alone.graph().vertices()[a], &alone.graph().vertices()[b]);
            ensure(whole.graph().adjacent(x, y), || format!("edge {x} {y} of a face missing from the graph"))?;
        }
    }
    Ok(())
}

pub type Named = (&'static str, fn(&QPoly) -> Check);

pub const ALL: [Named; 8] = [
    ("faces of faces", faces_of_faces),
    ("intersection closure", intersections),
    ("face hulls", face_hulls),
    ("argmin faces", faces_are_argmins),
    ("small dimensions", small_dimensions),
    ("facet ranks", facet_ranks),
    ("active-set unions", active_unions),
    ("face subgraphs", face_subgraphs),
];
