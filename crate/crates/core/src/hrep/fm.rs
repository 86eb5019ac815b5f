//! Fourier–Motzkin elimination.

use std::collections::HashMap;

use super::{FmConfig, HPoly};
use crate::{LinRel, Scalar};

/// Nonnegative multipliers over the input rows whose combination is an
/// output row (before dropping the eliminated coordinate).
pub type Derivation<T> = Vec<T>;

/// One elimination step of the first coordinate, without any cleanup.
/// Output row `k` equals `Σ_i derivations[k][i] * input_i` with the first
/// coordinate removed.
pub fn proj0_with_derivations<T: Scalar>(p: &HPoly<T>) -> (HPoly<T>, Vec<Derivation<T>>) {
    let (rows, derivs) = pairwise(p, 0);
    (HPoly::new_unchecked(p.dim() - 1, rows), derivs)
}

fn pairwise<T: Scalar>(p: &HPoly<T>, axis: usize) -> (Vec<LinRel<T>>, Vec<Derivation<T>>) {
    let m = p.rows().len();
    let unit = |i: usize, w: T| {
        let mut d = vec![T::zero(); m];
        d[i] = w;
        d
    };
    let mut rows = Vec::new();
    let mut derivs = Vec::new();
    let (mut pos, mut neg) = (Vec::new(), Vec::new());
    for (i, r) in p.rows().iter().enumerate() {
        let a = &r.normal[axis];
        if a.is_zero() {
            rows.push(r.drop_coord(axis));
            derivs.push(unit(i, T::one()));
        } else if a.is_positive() {
            pos.push(i);
        } else {
            neg.push(i);
        }
    }
    for &i in &pos {
        for &j in &neg {
            let (ri, rj) = (&p.rows()[i], &p.rows()[j]);
            let wi = -rj.normal[axis].clone();
            let wj = ri.normal[axis].clone();
            let combined = ri.scale(&wi).add(&rj.scale(&wj));
            debug_assert!(combined.normal[axis].is_zero());
            rows.push(combined.drop_coord(axis));
            let mut d = unit(i, wi);
            d[j] = wj;
            derivs.push(d);
        }
    }
    (rows, derivs)
}

/// An equality `row = -other` with a nonzero coefficient on `axis`, as the
/// indices of its positive and negative copies.
fn equality_pair<T: Scalar>(p: &HPoly<T>, axis: usize) -> Option<(usize, usize)> {
    let mut by_norm: HashMap<LinRel<T>, usize> = HashMap::new();
    for (i, r) in p.rows().iter().enumerate() {
        if r.normal[axis].is_zero() {
            continue;
        }
        let key = r.normalized();
        if let Some(&j) = by_norm.get(&r.neg().normalized()) {
            return Some(if r.normal[axis].is_positive() { (i, j) } else { (j, i) });
        }
        by_norm.entry(key).or_insert(i);
    }
    None
}

/// Eliminates `axis`. With `substitute`, an equality involving `axis` is
/// used to substitute the variable instead of forming all pairs; the set
/// projected is the same, and each output row is still a nonnegative
/// combination of two input rows.
pub(super) fn eliminate<T: Scalar>(p: &HPoly<T>, axis: usize, substitute: bool, cfg: &FmConfig) -> HPoly<T> {
    let dim = p.dim() - 1;
    if p.is_canonical_empty() {
        return HPoly::empty(dim);
    }
    let rows = match equality_pair(p, axis).filter(|_| substitute) {
        Some((up, down)) => {
            let (ru, rd) = (&p.rows()[up], &p.rows()[down]);
            p.rows()
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != up && i != down)
                .map(|(_, r)| {
                    let a = &r.normal[axis];
                    if a.is_zero() {
                        r.drop_coord(axis)
                    } else if a.is_positive() {
                        let w = -rd.normal[axis].clone();
                        r.scale(&w).add(&rd.scale(a)).drop_coord(axis)
                    } else {
                        let w = ru.normal[axis].clone();
                        r.scale(&w).add(&ru.scale(&-a.clone())).drop_coord(axis)
                    }
                })
                .collect()
        }
        None => pairwise(p, axis).0,
    };
    let rows: Vec<LinRel<T>> = rows.into_iter().map(|r| r.normalized()).collect();
    let out = HPoly::new_unchecked(dim, rows).dedup();
    if out.rows().len() > cfg.redundancy_threshold {
        out.remove_redundancy()
    } else {
        out
    }
}
