//! Finite ranked partial orders and the lattice checks run on them.

use crate::error::{Error, Result};

/// A finite poset with a rank per element, stored as a dense `≤` matrix.
/// Element 0 is expected to be the bottom and the last element the top.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankedOrder {
    ranks: Vec<usize>,
    leq: Vec<Vec<bool>>,
    hasse: Vec<(usize, usize)>,
}

impl RankedOrder {
    /// Builds the order from ranks and a reflexive, antisymmetric,
    /// transitive `leq` relation; covering pairs are derived.
    pub fn new(ranks: Vec<usize>, leq: Vec<Vec<bool>>) -> Result<Self> {
        let n = ranks.len();
        if leq.len() != n || leq.iter().any(|r| r.len() != n) {
            return Err(Error::Usage("order matrix does not match the element count".into()));
        }
        for a in 0..n {
            if !leq[a][a] {
                return Err(Error::Usage(format!("order is not reflexive at {a}")));
            }
            for b in 0..n {
                if a != b && leq[a][b] && leq[b][a] {
                    return Err(Error::Usage(format!("order is not antisymmetric at ({a}, {b})")));
                }
                for c in 0..n {
                    if leq[a][b] && leq[b][c] && !leq[a][c] {
                        return Err(Error::Usage(format!("order is not transitive at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        let hasse = transitive_reduction(&leq);
        Ok(RankedOrder { ranks, leq, hasse })
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    pub fn rank(&self, a: usize) -> usize {
        self.ranks[a]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq[a][b]
    }

    /// Covering pairs `(lo, hi)`.
    pub fn hasse(&self) -> &[(usize, usize)] {
        &self.hasse
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.len() - 1
    }

    /// Greatest lower bound of a set of elements; the top for the empty set.
    pub fn meet_all(&self, elems: &[usize]) -> Option<usize> {
        let lower: Vec<usize> = (0..self.len()).filter(|&c| elems.iter().all(|&e| self.leq[c][e])).collect();
        lower.iter().copied().find(|&c| lower.iter().all(|&d| self.leq[d][c]))
    }

    /// Least upper bound of a set of elements; the bottom for the empty set.
    pub fn join_all(&self, elems: &[usize]) -> Option<usize> {
        let upper: Vec<usize> = (0..self.len()).filter(|&c| elems.iter().all(|&e| self.leq[e][c])).collect();
        upper.iter().copied().find(|&c| upper.iter().all(|&d| self.leq[c][d]))
    }

    pub fn meet(&self, a: usize, b: usize) -> Option<usize> {
        self.meet_all(&[a, b])
    }

    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        self.join_all(&[a, b])
    }

    /// Elements covering the bottom.
    pub fn atoms(&self) -> Vec<usize> {
        self.hasse.iter().filter(|&&(lo, _)| lo == self.bottom()).map(|&(_, hi)| hi).collect()
    }

    /// Elements covered by the top.
    pub fn coatoms(&self) -> Vec<usize> {
        self.hasse.iter().filter(|&&(_, hi)| hi == self.top()).map(|&(lo, _)| lo).collect()
    }

    /// Elements `c` with `lo ≤ c ≤ hi`, in index order.
    pub fn interval(&self, lo: usize, hi: usize) -> Vec<usize> {
        (0..self.len()).filter(|&c| self.leq[lo][c] && self.leq[c][hi]).collect()
    }

    /// The induced order on `elems`, ranks shifted so the least rank is 0.
    pub fn restrict(&self, elems: &[usize]) -> Self {
        let base_rank = elems.iter().map(|&e| self.ranks[e]).min().unwrap_or(0);
        let ranks = elems.iter().map(|&e| self.ranks[e] - base_rank).collect();
        let leq: Vec<Vec<bool>> = elems.iter().map(|&a| elems.iter().map(|&b| self.leq[a][b]).collect()).collect();
        let hasse = transitive_reduction(&leq);
        RankedOrder { ranks, leq, hasse }
    }

    /// Unique bottom and top, all pairwise meets and joins exist, and they
    /// are idempotent, commutative, associative and absorptive.
    pub fn check_lattice_axioms(&self) -> bool {
        let n = self.len();
        if n == 0 || (0..n).any(|c| !self.leq[0][c] || !self.leq[c][n - 1]) {
            return false;
        }
        let mut meet = vec![vec![0; n]; n];
        let mut join = vec![vec![0; n]; n];
        for a in 0..n {
            for b in 0..n {
                match (self.meet(a, b), self.join(a, b)) {
                    (Some(m), Some(j)) => {
                        meet[a][b] = m;
                        join[a][b] = j;
                    }
                    _ => return false,
                }
            }
        }
        for a in 0..n {
            if meet[a][a] != a || join[a][a] != a {
                return false;
            }
            for b in 0..n {
                if meet[a][b] != meet[b][a] || join[a][b] != join[b][a] {
                    return false;
                }
                if meet[a][join[a][b]] != a || join[a][meet[a][b]] != a {
                    return false;
                }
                for c in 0..n {
                    if meet[meet[a][b]][c] != meet[a][meet[b][c]] || join[join[a][b]][c] != join[a][join[b][c]] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Rank strictly increases along `<` and every cover raises it by exactly one.
    pub fn check_graded(&self) -> bool {
        let n = self.len();
        let monotone = (0..n).all(|a| (0..n).all(|b| !self.lt(a, b) || self.ranks[a] < self.ranks[b]));
        monotone && self.hasse.iter().all(|&(lo, hi)| self.ranks[hi] == self.ranks[lo] + 1)
    }

    /// Every element is the join of the atoms below it.
    pub fn check_atomistic(&self) -> bool {
        let atoms = self.atoms();
        (0..self.len()).all(|x| {
            let below: Vec<usize> = atoms.iter().copied().filter(|&a| self.leq[a][x]).collect();
            self.join_all(&below) == Some(x)
        })
    }

    /// Every element is the meet of the coatoms above it.
    pub fn check_coatomistic(&self) -> bool {
        let coatoms = self.coatoms();
        (0..self.len()).all(|x| {
            let above: Vec<usize> = coatoms.iter().copied().filter(|&c| self.leq[x][c]).collect();
            self.meet_all(&above) == Some(x)
        })
    }

    /// Every interval spanning two ranks has exactly four elements.
    pub fn check_diamond(&self) -> bool {
        let n = self.len();
        (0..n).all(|a| {
            (0..n).all(|b| !(self.leq[a][b] && self.ranks[b] == self.ranks[a] + 2) || self.interval(a, b).len() == 4)
        })
    }
}

fn transitive_reduction(leq: &[Vec<bool>]) -> Vec<(usize, usize)> {
    let n = leq.len();
    let lt = |a: usize, b: usize| a != b && leq[a][b];
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if lt(a, b) && !(0..n).any(|c| lt(a, c) && lt(c, b)) {
                out.push((a, b));
            }
        }
    }
    out
}

/// Whether `map` (pairs `(i, j)`) is a bijection from the elements of
/// `from` onto those of `to` with `a ≤ b ⇔ map(a) ≤ map(b)`.
pub fn is_order_isomorphism(from: &RankedOrder, to: &RankedOrder, map: &[(usize, usize)]) -> bool {
    if map.len() != from.len() || from.len() != to.len() {
        return false;
    }
    let mut image = vec![None; from.len()];
    let mut hit = vec![false; to.len()];
    for &(i, j) in map {
        if i >= from.len() || j >= to.len() || image[i].is_some() || hit[j] {
            return false;
        }
        image[i] = Some(j);
        hit[j] = true;
    }
    let image: Vec<usize> = image.into_iter().map(|j| j.expect("total")).collect();
    (0..from.len()).all(|a| (0..from.len()).all(|b| from.leq(a, b) == to.leq(image[a], image[b])))
}
