//! Exact Gaussian elimination over the rationals: reduced row echelon form,
//! nullspace bases, and matrix inversion. Crate-internal; sizes here are tiny
//! (dozens of rows), so clarity beats asymptotics.

use num_traits::{One, Zero};

use crate::exactpoly::Scalar;

/// Reduced row echelon form: no zero rows, pivots strictly increasing, pivot
/// entries 1 and eliminated from every other row. Canonical for the row
/// space, so two spans are equal iff their `Rref`s are equal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub(crate) struct Rref {
    pub rows: Vec<Vec<Scalar>>,
    pub pivots: Vec<usize>,
    pub ncols: usize,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Canonical representative of `v` modulo the row space: subtract
    /// multiples of the rows until every pivot coordinate is zero.
    pub fn reduce(&self, v: &mut [Scalar]) {
        for (r, &p) in self.pivots.iter().enumerate() {
            if v[p].is_zero() {
                continue;
            }
            let c = std::mem::replace(&mut v[p], Scalar::zero());
            for (j, entry) in self.rows[r].iter().enumerate() {
                if j == p || entry.is_zero() {
                    continue;
                }
                let delta = &c * entry;
                v[j] -= delta;
            }
        }
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(Scalar::is_zero)
    }

    /// Canonical nullspace basis, one vector per non-pivot column, ordered by
    /// that column: the free coordinate is 1 and pivot coordinates are solved.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let pivot_row: std::collections::BTreeMap<usize, usize> = self
            .pivots
            .iter()
            .enumerate()
            .map(|(r, &p)| (p, r))
            .collect();
        let mut out = Vec::new();
        for j in 0..self.ncols {
            if pivot_row.contains_key(&j) {
                continue;
            }
            let mut v = vec![Scalar::zero(); self.ncols];
            v[j] = Scalar::one();
            for (&p, &r) in &pivot_row {
                v[p] = -self.rows[r][j].clone();
            }
            out.push(v);
        }
        out
    }
}

pub(crate) fn rref(mut rows: Vec<Vec<Scalar>>, ncols: usize) -> Rref {
    debug_assert!(rows.iter().all(|r| r.len() == ncols));
    let mut pivots = Vec::new();
    let mut rank = 0usize;
    for col in 0..ncols {
        let Some(pivot_row) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot_row);
        let inv = {
            let lead = &rows[rank][col];
            Scalar::one() / lead
        };
        for entry in rows[rank].iter_mut() {
            if !entry.is_zero() {
                *entry *= &inv;
            }
        }
        let pivot = std::mem::take(&mut rows[rank]);
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row.is_empty() || row[col].is_zero() {
                continue;
            }
            let factor = std::mem::replace(&mut row[col], Scalar::zero());
            for (j, entry) in pivot.iter().enumerate() {
                if j == col || entry.is_zero() {
                    continue;
                }
                let delta = &factor * entry;
                row[j] -= delta;
            }
        }
        rows[rank] = pivot;
        pivots.push(col);
        rank += 1;
    }
    rows.truncate(rank);
    Rref { rows, pivots, ncols }
}

/// Inverse of a square matrix, or `None` if singular.
pub(crate) fn invert(mat: &[Vec<Scalar>]) -> Option<Vec<Vec<Scalar>>> {
    let n = mat.len();
    let mut aug: Vec<Vec<Scalar>> = mat
        .iter()
        .enumerate()
        .map(|(i, row)| {
            debug_assert_eq!(row.len(), n);
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }));
            r
        })
        .collect();
    let reduced = rref(std::mem::take(&mut aug), 2 * n);
    if reduced.pivots.len() != n || reduced.pivots.iter().enumerate().any(|(i, &p)| i != p) {
        return None;
    }
    Some(
        reduced
            .rows
            .into_iter()
            .map(|row| row[n..].to_vec())
            .collect(),
    )
}

pub(crate) fn mat_vec(mat: &[Vec<Scalar>], v: &[Scalar]) -> Vec<Scalar> {
    mat.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
        })
        .collect()
}
