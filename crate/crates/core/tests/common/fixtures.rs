// Shared polytopes and random generators for the integration tests.
#![allow(dead_code)]

use polyface::{rat, QHPoly, QLinRel, QPoly, QVector};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn v(xs: &[i64]) -> QVector {
    QVector::from_i64s(xs)
}

/// The pentagon `2x1+x2>=5, 5x1-2x2>=-1, -2x1-5x2>=-46, -2x1+x2>=-10, -x1+4x2>=2`.
pub fn pentagon_rows() -> Vec<QLinRel> {
    vec![
        QLinRel::from_i64s(&[2, 1], 5),
        QLinRel::from_i64s(&[5, -2], -1),
        QLinRel::from_i64s(&[-2, -5], -46),
        QLinRel::from_i64s(&[-2, 1], -10),
        QLinRel::from_i64s(&[-1, 4], 2),
    ]
}

pub fn pentagon_h() -> QPoly {
    QPoly::new(QHPoly::new(2, pentagon_rows()).unwrap())
}

pub fn seven_vertices() -> Vec<QVector> {
    vec![
        v(&[3, 1, 1]),
        v(&[0, 0, 0]),
        v(&[0, 2, 0]),
        v(&[0, 2, 2]),
        v(&[0, 0, 2]),
        v(&[-2, 1, 0]),
        v(&[-2, 1, 1]),
    ]
}

pub fn seven_vertex() -> QPoly {
    QPoly::conv(3, &seven_vertices()).unwrap()
}

pub fn cube_rows(n: usize) -> Vec<QLinRel> {
    let mut rows = Vec::new();
    for i in 0..n {
        rows.push(QLinRel::new(QVector::unit(n, i), rat(0)));
        rows.push(QLinRel::new(QVector::unit(n, i).neg(), rat(-1)));
    }
    rows
}

pub fn cube(n: usize) -> QPoly {
    QPoly::new(QHPoly::new(n, cube_rows(n)).unwrap())
}

pub fn octahedron() -> QPoly {
    let mut pts = Vec::new();
    for i in 0..3 {
        pts.push(QVector::unit(3, i));
        pts.push(QVector::unit(3, i).neg());
    }
    QPoly::conv(3, &pts).unwrap()
}

pub fn square_pyramid() -> QPoly {
    let pts = [v(&[0, 0, 0]), v(&[2, 0, 0]), v(&[0, 2, 0]), v(&[2, 2, 0]), v(&[1, 1, 3])];
    QPoly::conv(3, &pts).unwrap()
}

pub fn random_vector(rng: &mut ChaCha8Rng, d: usize, lo: i64, hi: i64) -> QVector {
    QVector::new((0..d).map(|_| rat(rng.gen_range(lo..=hi))).collect())
}

pub fn random_rows(rng: &mut ChaCha8Rng, n: usize, m: usize, lo: i64, hi: i64) -> Vec<QLinRel> {
    (0..m)
        .map(|_| QLinRel::new(random_vector(rng, n, lo, hi), rat(rng.gen_range(lo..=hi))))
        .collect()
}

pub fn random_points(rng: &mut ChaCha8Rng, k: usize, d: usize, lo: i64, hi: i64) -> Vec<QVector> {
    (0..k).map(|_| random_vector(rng, d, lo, hi)).collect()
}

/// A full-dimensional random polytope in dimension 3: redraw until the hull is solid.
pub fn random_3_polytope(rng: &mut ChaCha8Rng) -> QPoly {
    loop {
        let k = rng.gen_range(4..=9);
        let p = QPoly::conv(3, &random_points(rng, k, 3, -4, 4)).unwrap();
        if p.pdim() == 4 {
            return p;
        }
    }
}
