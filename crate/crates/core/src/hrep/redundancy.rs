use super::HPoly;
use crate::lp::{minimize, LpOutcome};
use crate::Scalar;

/// Greedy single pass: a row is dropped when the rows still kept (earlier
/// survivors and all later rows) imply it. A row kept at its turn stays
/// irredundant as the system only shrinks afterwards.
pub(super) fn remove_redundancy<T: Scalar>(p: &HPoly<T>) -> HPoly<T> {
    let dim = p.dim();
    if p.is_empty() {
        return HPoly::empty(dim);
    }
    let mut rows = p.dedup().into_rows();
    let mut i = 0;
    while i < rows.len() {
        let candidate = rows.remove(i);
        let implied = match minimize(&rows, &candidate.normal) {
            LpOutcome::Optimal { value, .. } => value >= candidate.offset,
            LpOutcome::Infeasible { .. } => true,
            LpOutcome::Unbounded { .. } => false,
        };
        if !implied {
            rows.insert(i, candidate);
            i += 1;
        }
    }
    HPoly::new_unchecked(dim, rows)
}
