//! Canonical subspaces of a finite-dimensional coordinate space, and the
//! projection map induced by quotienting out one of them.
//!
//! A subspace is stored as the reduced row echelon form of any spanning set,
//! which is canonical: two subspaces are equal iff their stored matrices are
//! equal, so `==` decides subspace equality.

use num_traits::{One, Zero};

use crate::exactpoly::Scalar;
use crate::linalg::{self, Rref};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient: usize,
    rref: Rref,
}

impl Subspace {
    pub fn from_spanning<I>(ambient: usize, vectors: I) -> Subspace
    where
        I: IntoIterator<Item = Vec<Scalar>>,
    {
        let rows: Vec<Vec<Scalar>> = vectors.into_iter().collect();
        debug_assert!(rows.iter().all(|r| r.len() == ambient));
        Subspace { ambient, rref: linalg::rref(rows, ambient) }
    }

    pub fn zero(ambient: usize) -> Subspace {
        Subspace::from_spanning(ambient, std::iter::empty())
    }

    pub fn full(ambient: usize) -> Subspace {
        Subspace::from_spanning(
            ambient,
            (0..ambient).map(|i| {
                let mut v = vec![Scalar::zero(); ambient];
                v[i] = Scalar::one();
                v
            }),
        )
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rref.rank()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// Canonical basis rows (the echelon matrix).
    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rref.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.rref.pivots
    }

    /// Coordinates NOT used as pivots, in increasing order. These index the
    /// canonical complement along which a quotient keeps its coordinates.
    pub fn free_coords(&self) -> Vec<usize> {
        let mut free = Vec::with_capacity(self.ambient - self.dim());
        let mut next_pivot = self.rref.pivots.iter().peekable();
        for i in 0..self.ambient {
            if next_pivot.peek() == Some(&&i) {
                next_pivot.next();
            } else {
                free.push(i);
            }
        }
        free
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        debug_assert_eq!(v.len(), self.ambient);
        self.rref.contains(v)
    }

    pub fn contains_space(&self, other: &Subspace) -> bool {
        other.rows().iter().all(|r| self.contains(r))
    }

    /// Canonical representative of `v` modulo this subspace (pivot
    /// coordinates zeroed out).
    pub fn reduce_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut w = v.to_vec();
        self.rref.reduce(&mut w);
        w
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        debug_assert_eq!(self.ambient, other.ambient);
        Subspace::from_spanning(
            self.ambient,
            self.rows().iter().chain(other.rows()).cloned(),
        )
    }
}

/// Linear projection `V -> V/J` in coordinates: reduce modulo `J`, then keep
/// the coordinates at `J`'s non-pivot positions. Built by
/// [`LocalAlgebra::quotient_by_ideal`](super::LocalAlgebra::quotient_by_ideal)
/// and used to transport vectors and subspaces into the quotient.
#[derive(Clone, Debug)]
pub struct QuotientMap {
    ideal: Subspace,
    kept: Vec<usize>,
}

impl QuotientMap {
    pub(crate) fn new(ideal: Subspace) -> QuotientMap {
        let kept = ideal.free_coords();
        QuotientMap { ideal, kept }
    }

    pub fn ideal(&self) -> &Subspace {
        &self.ideal
    }

    /// Source-ambient indices of the coordinates that survive projection,
    /// in order; entry `i` is the source position of target coordinate `i`.
    pub fn kept(&self) -> &[usize] {
        &self.kept
    }

    pub fn source_dim(&self) -> usize {
        self.ideal.ambient_dim()
    }

    pub fn target_dim(&self) -> usize {
        self.kept.len()
    }

    pub fn project(&self, v: &[Scalar]) -> Vec<Scalar> {
        let reduced = self.ideal.reduce_vec(v);
        self.kept.iter().map(|&i| reduced[i].clone()).collect()
    }

    pub fn project_subspace(&self, s: &Subspace) -> Subspace {
        debug_assert_eq!(s.ambient_dim(), self.source_dim());
        Subspace::from_spanning(
            self.target_dim(),
            s.rows().iter().map(|r| self.project(r)),
        )
    }

    /// A preimage of a target vector: place the kept coordinates back at
    /// their source positions (a section of the projection).
    pub fn lift(&self, v: &[Scalar]) -> Vec<Scalar> {
        debug_assert_eq!(v.len(), self.target_dim());
        let mut out = vec![Scalar::zero(); self.source_dim()];
        for (i, &pos) in self.kept.iter().enumerate() {
            out[pos] = v[i].clone();
        }
        out
    }
}
