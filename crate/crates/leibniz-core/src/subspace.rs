//! Exact linear subspaces in canonical reduced-row-echelon form.
//!
//! Equality of subspaces is literal equality of the RREF matrices, so any
//! two generating sets of the same space reduce to the same value.

use crate::linalg::{reduce_against, rref, Vector};
use crate::rational::Rational;

/// A linear subspace of `Q^ambient`, stored as an RREF basis (rows are basis
/// vectors, pivot columns strictly increasing).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self::from_generators(
            ambient,
            (1..=ambient).map(|i| Vector::basis(ambient, i)),
        )
    }

    /// Span of a single standard basis vector.
    pub fn span_basis(ambient: usize, indices: &[usize]) -> Self {
        Self::from_generators(ambient, indices.iter().map(|&i| Vector::basis(ambient, i)))
    }

    pub fn from_generators(ambient: usize, gens: impl IntoIterator<Item = Vector>) -> Self {
        let rows: Vec<Vec<Rational>> = gens
            .into_iter()
            .inspect(|v| assert_eq!(v.dim(), ambient, "generator dimension mismatch"))
            .map(|v| v.coords().to_vec())
            .collect();
        let (rows, pivots) = rref(rows);
        Subspace {
            ambient,
            rows,
            pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    /// Pivot columns, 0-based.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// 1-based indices of standard basis vectors at non-pivot positions;
    /// these represent a complement of the subspace.
    pub fn complement_indices(&self) -> Vec<usize> {
        (0..self.ambient)
            .filter(|c| !self.pivots.contains(c))
            .map(|c| c + 1)
            .collect()
    }

    pub fn basis_vectors(&self) -> Vec<Vector> {
        self.rows
            .iter()
            .map(|r| Vector::from_coords(r.clone()))
            .collect()
    }

    /// Residual of `v` after eliminating against the basis; zero iff `v`
    /// lies in the subspace.
    pub fn reduce(&self, v: &Vector) -> Vector {
        assert_eq!(v.dim(), self.ambient);
        Vector::from_coords(reduce_against(&self.rows, &self.pivots, v.coords()))
    }

    pub fn contains_vector(&self, v: &Vector) -> bool {
        self.reduce(v).is_zero()
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        other
            .basis_vectors()
            .iter()
            .all(|v| self.contains_vector(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient dimension mismatch");
        let gens = self
            .basis_vectors()
            .into_iter()
            .chain(other.basis_vectors());
        Subspace::from_generators(self.ambient, gens)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::ratio(n, d)
    }

    #[test]
    fn canonical_under_shuffle() {
        let a = Vector::from_coords(vec![q(1, 1), q(2, 1), q(0, 1)]);
        let b = Vector::from_coords(vec![q(0, 1), q(1, 1), q(1, 1)]);
        let c = a.add(&b.scale(&q(3, 2)));
        let s1 = Subspace::from_generators(3, vec![a.clone(), b.clone()]);
        let s2 = Subspace::from_generators(3, vec![c, b.clone(), a]);
        assert_eq!(s1, s2);
        assert_eq!(s1.dim(), 2);
    }

    #[test]
    fn membership_and_containment() {
        let s = Subspace::span_basis(4, &[2, 4]);
        assert!(s.contains_vector(&Vector::basis(4, 2)));
        assert!(!s.contains_vector(&Vector::basis(4, 1)));
        assert!(Subspace::full(4).contains(&s));
        assert!(!s.contains(&Subspace::full(4)));
        assert_eq!(s.complement_indices(), vec![1, 3]);
    }

    #[test]
    fn zero_space() {
        let z = Subspace::zero(3);
        assert!(z.is_zero());
        assert_eq!(z.sum(&Subspace::full(3)), Subspace::full(3));
    }
}
