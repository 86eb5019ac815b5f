use super::*;
use crate::hrep::tests::{cube, pentagon_h};
use crate::poly::tests::{pentagon_vertices, seven_vertices};
use crate::{rat, QLinRel, QPoly, QVector};

fn v(xs: &[i64]) -> QVector {
    QVector::from_i64s(xs)
}

fn seven_vertex() -> QPoly {
    QPoly::conv(3, &seven_vertices()).unwrap()
}

fn pentagon() -> QPoly {
    QPoly::from(pentagon_h())
}

fn square_pyramid() -> QPoly {
    let pts = [v(&[0, 0, 0]), v(&[2, 0, 0]), v(&[0, 2, 0]), v(&[2, 2, 0]), v(&[1, 1, 3])];
    QPoly::conv(3, &pts).unwrap()
}

fn octahedron() -> QPoly {
    let mut pts = Vec::new();
    for i in 0..3 {
        pts.push(QVector::unit(3, i));
        pts.push(QVector::unit(3, i).neg());
    }
    QPoly::conv(3, &pts).unwrap()
}

fn all_checks(l: &FaceLattice<crate::Rational>) -> bool {
    l.check_lattice_axioms()
        && l.check_graded()
        && l.check_atomistic().unwrap()
        && l.check_coatomistic()
        && l.check_diamond()
}

#[test]
fn segment_lattice() {
    let l = FaceLattice::build(&QPoly::segm(&v(&[0, 0]), &v(&[2, 1])).unwrap());
    assert_eq!(l.len(), 4);
    assert_eq!(l.f_vector(), vec![1, 2, 1]);
    assert_eq!(l.hasse().len(), 4);
    assert!(all_checks(&l));
}

#[test]
fn point_and_empty_lattices() {
    let l = FaceLattice::build(&QPoly::pt(&v(&[1, 2])));
    assert_eq!(l.len(), 2);
    assert_eq!(l.hasse(), &[(0, 1)]);
    assert!(all_checks(&l));
    let e = FaceLattice::build(&QPoly::poly0(2));
    assert_eq!(e.len(), 1);
    assert!(e.hasse().is_empty());
    assert!(e.check_graded() && e.check_lattice_axioms());
}

#[test]
fn seven_vertex_counts() {
    let l = FaceLattice::build(&seven_vertex());
    assert_eq!(l.len(), 30);
    assert_eq!(l.f_vector(), vec![1, 7, 13, 8, 1]);
    assert_eq!(l.vertices(), {
        let mut vs = seven_vertices();
        vs.sort();
        vs
    });
    assert!(all_checks(&l));
    assert_eq!(l.euler_sum(), 0);
}

#[test]
fn pentagon_lattice() {
    let l = FaceLattice::build(&pentagon());
    assert_eq!(l.f_vector(), vec![1, 5, 5, 1]);
    assert_eq!(l.vertices(), {
        let mut vs = pentagon_vertices();
        vs.sort();
        vs
    });
    assert!(all_checks(&l));
    // the hasse diagram of a pentagon: 5 + 10 + 5 covers
    assert_eq!(l.hasse().len(), 20);
}

#[test]
fn cube_meets_and_joins() {
    let l = FaceLattice::build(&QPoly::from(cube(3)));
    assert_eq!(l.f_vector(), vec![1, 8, 12, 6, 1]);
    assert!(all_checks(&l));
    let facets: Vec<usize> = (0..l.len()).filter(|&i| l.rank(i) == 3).collect();
    // two adjacent facets meet in an edge, opposite ones in the empty face
    let mut edges = 0;
    let mut empty = 0;
    for (k, &a) in facets.iter().enumerate() {
        for &b in &facets[k + 1..] {
            let m = l.meet(a, b);
            match l.rank(m) {
                2 => edges += 1,
                0 => empty += 1,
                r => panic!("unexpected meet rank {r}"),
            }
            let inter = l.face(a).poly.intersect(&l.face(b).poly).unwrap();
            assert!(inter.same_set(&l.face(m).poly).unwrap());
        }
    }
    assert_eq!((edges, empty), (12, 3));
    let a = l.vertex_index(&v(&[0, 0, 0])).unwrap();
    let b = l.vertex_index(&v(&[1, 1, 1])).unwrap();
    assert_eq!(l.join(a, b), l.top());
    let c = l.vertex_index(&v(&[1, 0, 0])).unwrap();
    assert_eq!(l.rank(l.join(a, c)), 2);
    for i in 0..l.len() {
        assert_eq!(l.meet(i, l.top()), i);
        assert_eq!(l.join(i, l.bottom()), i);
    }
}

#[test]
fn other_polytopes_pass_all_checks() {
    for p in [square_pyramid(), octahedron(), QPoly::from(cube(2))] {
        let l = FaceLattice::build(&p);
        assert!(all_checks(&l));
        assert_eq!(l.euler_sum(), 0);
    }
    let oct = FaceLattice::build(&octahedron());
    assert_eq!(oct.f_vector(), vec![1, 6, 12, 8, 1]);
    let pyr = FaceLattice::build(&square_pyramid());
    assert_eq!(pyr.f_vector(), vec![1, 5, 8, 5, 1]);
}

#[test]
fn unbounded_sets() {
    let quadrant = QPoly::new(
        crate::QHPoly::new(2, vec![QLinRel::from_i64s(&[1, 0], 0), QLinRel::from_i64s(&[0, 1], 0)]).unwrap(),
    );
    let l = FaceLattice::build(&quadrant);
    assert!(l.check_atomistic().is_err());
    assert!(l.check_graded() && l.check_lattice_axioms());
    // the empty face lies below both rays but is not their meet
    assert!(!l.check_coatomistic());
    assert!(!l.is_compact());
}

#[test]
fn intervals() {
    let l = FaceLattice::build(&seven_vertex());
    let whole = l.interval(l.bottom(), l.top()).unwrap();
    assert_eq!(whole.len(), l.len());
    assert_eq!(whole.order(), l.order());
    assert_eq!(l.interval(5, 5).unwrap().len(), 1);
    assert_eq!(l.interval(5, 5).unwrap().rank(0), 0);

    // vertex 3 = (0,2,0) lies on edges 13, 23, 34, 36 and facets 123, 134, 236, 3467
    let v3 = l.vertex_index(&v(&[0, 2, 0])).unwrap();
    let up = l.interval(v3, l.top()).unwrap();
    assert_eq!(up.f_vector(), vec![1, 4, 4, 1]);
    assert!(up.check_graded() && up.check_diamond());

    let v4 = v(&[0, 2, 2]);
    let v6 = v(&[-2, 1, 0]);
    let f3467 = (0..l.len())
        .find(|&i| l.rank(i) == 3 && l.vertices_of(i).len() == 4 && l.vertices_of(i).contains(&v4) && l.vertices_of(i).contains(&v6))
        .unwrap();
    let blue = l.interval(v3, f3467).unwrap();
    assert_eq!(blue.len(), 4);
    assert_eq!(blue.f_vector(), vec![1, 2, 1]);
    let members = l.interval_indices(v3, f3467);
    let edge_ends: Vec<Vec<QVector>> = members[1..3].iter().map(|&i| l.vertices_of(i)).collect();
    assert!(edge_ends.contains(&vec![v(&[0, 2, 0]), v4.clone()]));
    assert!(edge_ends.contains(&vec![v6.clone(), v(&[0, 2, 0])]));

    let v1 = l.vertex_index(&v(&[3, 1, 1])).unwrap();
    assert!(matches!(l.interval(v1, v3), Err(crate::Error::Usage(_))));
    assert!(matches!(l.interval(0, 999), Err(crate::Error::Usage(_))));
}

#[test]
fn vertex_figure_of_seven_vertex() {
    let p = seven_vertex();
    let vf = vertex_figure(&p, &v(&[3, 1, 1])).unwrap();
    assert_eq!(vf.slice_lattice.f_vector(), vec![1, 4, 4, 1]);
    assert_eq!(vf.slice.pdim(), p.pdim() - 1);
    assert!(vf.is_isomorphism());
    let at_v = vf.cut.normal.inner(&v(&[3, 1, 1]));
    assert!(at_v < vf.cut.offset);
    for w in seven_vertices().iter().skip(1) {
        assert!(vf.cut.normal.inner(w) > vf.cut.offset);
    }
}

#[test]
fn vertex_figures_of_cube_and_segment() {
    let cube = QPoly::from(cube(3));
    let l = FaceLattice::build(&cube);
    for x in l.vertices() {
        let vf = vertex_figure(&cube, &x).unwrap();
        assert_eq!(vf.slice_lattice.f_vector(), vec![1, 3, 3, 1]);
        assert!(vf.is_isomorphism());
    }
    let seg = QPoly::segm(&v(&[0, 0]), &v(&[4, 2])).unwrap();
    let vf = vertex_figure(&seg, &v(&[0, 0])).unwrap();
    assert_eq!(vf.slice.pdim(), 1);
    assert!(vf.is_isomorphism());
}

#[test]
fn vertex_figure_preconditions() {
    let p = seven_vertex();
    assert!(matches!(vertex_figure(&p, &v(&[0, 1, 1])), Err(crate::Error::Precondition(_))));
    assert!(matches!(vertex_figure(&QPoly::pt(&v(&[1, 1])), &v(&[1, 1])), Err(crate::Error::Precondition(_))));
    let half = QPoly::hs(&QLinRel::from_i64s(&[1, 0], 0));
    assert!(matches!(vertex_figure(&half, &v(&[0, 0])), Err(crate::Error::Precondition(_))));
}

#[test]
fn json_and_dot() {
    let l = FaceLattice::build(&QPoly::segm(&v(&[0, 0]), &v(&[1, 0])).unwrap());
    let j = l.to_json();
    assert_eq!(j["bottom"], 0);
    assert_eq!(j["top"], 3);
    assert_eq!(j["faces"].as_array().unwrap().len(), 4);
    assert_eq!(j["hasse"].as_array().unwrap().len(), 4);
    assert_eq!(j["faces"][0]["hull"], "empty");
    assert_eq!(j["faces"][3]["vertices"].as_array().unwrap().len(), 2);
    let dot = l.to_dot();
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("->").count(), 4);
    assert!(dot.contains("2:2\\n(0, 0) (1, 0)"));
    assert_eq!(dot.matches("rank=same").count(), 3);
    let _ = rat(0);
}
