//! Structure-constant tensors and the bracket operations built on them.
//!
//! A tensor stores the nonzero brackets `[e_i, e_j] = sum_k c^k_{ij} e_k` of
//! an algebra on a fixed basis. Absent `(i, j)` pairs are zero brackets.
//! Identity checking runs over basis triples only; bilinearity makes that
//! complete.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::{check_same_dim, LinearMap, Vector};
use crate::rational::Rational;

/// Which Leibniz identity (and which multiplication operators) to use.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn name(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
        }
    }
}

/// Witness that an identity fails on a basis triple: the two sides of the
/// identity evaluated at `(e_r, e_s, e_t)` disagree.
#[derive(Clone, PartialEq, Debug)]
pub struct IdentityViolation {
    pub triple: (usize, usize, usize),
    pub lhs: Vector,
    pub rhs: Vector,
}

/// Sparse structure-constant tensor of a finite-dimensional algebra.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StructureTensor {
    dim: usize,
    brackets: BTreeMap<(usize, usize), Vec<(usize, Rational)>>,
}

impl StructureTensor {
    /// The algebra with all brackets zero.
    pub fn abelian(dim: usize) -> Self {
        StructureTensor {
            dim,
            brackets: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Adds `c * e_k` to `[e_i, e_j]`. Indices must lie in `1..=dim`; the
    /// stored term list stays sorted with zero coefficients pruned.
    pub fn add_term(&mut self, i: usize, j: usize, k: usize, c: Rational) {
        assert!(
            (1..=self.dim).contains(&i) && (1..=self.dim).contains(&j),
            "bracket indices ({i},{j}) out of range for dim {}",
            self.dim
        );
        assert!(
            (1..=self.dim).contains(&k),
            "bracket component e_{k} out of range for dim {}",
            self.dim
        );
        if c.is_zero() {
            return;
        }
        let terms = self.brackets.entry((i, j)).or_default();
        match terms.binary_search_by_key(&k, |(b, _)| *b) {
            Ok(pos) => {
                let new = terms[pos].1.clone() + c;
                if new.is_zero() {
                    terms.remove(pos);
                } else {
                    terms[pos].1 = new;
                }
            }
            Err(pos) => terms.insert(pos, (k, c)),
        }
        if self.brackets.get(&(i, j)).is_some_and(Vec::is_empty) {
            self.brackets.remove(&(i, j));
        }
    }

    /// Structure constant `c^k_{ij}` (zero when absent).
    pub fn coeff(&self, i: usize, j: usize, k: usize) -> Rational {
        self.bracket_basis(i, j)
            .iter()
            .find(|(b, _)| *b == k)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    /// Term list of `[e_i, e_j]` (empty slice when the bracket is zero).
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        self.brackets.get(&(i, j)).map_or(&[], Vec::as_slice)
    }

    /// Iterate over all stored brackets in lexicographic `(i, j)` order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &[(usize, Rational)])> {
        self.brackets.iter().map(|(&(i, j), t)| (i, j, t.as_slice()))
    }

    /// Number of stored nonzero bracket pairs.
    pub fn nonzero_brackets(&self) -> usize {
        self.brackets.len()
    }

    fn bracket_into(&self, x: &Vector, y: &Vector, out: &mut Vector) {
        for (&(i, j), terms) in &self.brackets {
            let c = x.coord(i) * y.coord(j);
            if c.is_zero() {
                continue;
            }
            for (k, v) in terms {
                let cur = out.coord(*k).clone();
                out.set_coord(*k, cur + v * &c);
            }
        }
    }

    /// Bilinear bracket `[x, y]`.
    pub fn bracket(&self, x: &Vector, y: &Vector) -> Result<Vector> {
        check_same_dim("bracket left operand", x.dim(), self.dim)?;
        check_same_dim("bracket right operand", y.dim(), self.dim)?;
        let mut out = Vector::zero(self.dim);
        self.bracket_into(x, y, &mut out);
        Ok(out)
    }

    /// `[x, e_j]` for a coordinate vector `x`.
    fn bracket_vec_basis(&self, x: &Vector, j: usize) -> Vector {
        let mut out = Vector::zero(self.dim);
        for i in 1..=self.dim {
            let xi = x.coord(i);
            if xi.is_zero() {
                continue;
            }
            for (k, v) in self.bracket_basis(i, j) {
                let cur = out.coord(*k).clone();
                out.set_coord(*k, cur + v * xi);
            }
        }
        out
    }

    /// `[e_i, y]` for a coordinate vector `y`.
    fn bracket_basis_vec(&self, i: usize, y: &Vector) -> Vector {
        let mut out = Vector::zero(self.dim);
        for j in 1..=self.dim {
            let yj = y.coord(j);
            if yj.is_zero() {
                continue;
            }
            for (k, v) in self.bracket_basis(i, j) {
                let cur = out.coord(*k).clone();
                out.set_coord(*k, cur + v * yj);
            }
        }
        out
    }

    fn bracket_basis_vector(&self, i: usize, j: usize) -> Vector {
        let mut out = Vector::zero(self.dim);
        for (k, v) in self.bracket_basis(i, j) {
            out.set_coord(*k, v.clone());
        }
        out
    }

    /// Right multiplication operator `R_x(y) = [y, x]` as a matrix.
    pub fn right_mult(&self, x: &Vector) -> Result<LinearMap> {
        check_same_dim("right_mult operand", x.dim(), self.dim)?;
        let cols = (1..=self.dim)
            .map(|j| self.bracket_basis_vec(j, x))
            .collect();
        Ok(LinearMap::from_columns(cols))
    }

    /// Left multiplication operator `L_x(y) = [x, y]` as a matrix.
    pub fn left_mult(&self, x: &Vector) -> Result<LinearMap> {
        check_same_dim("left_mult operand", x.dim(), self.dim)?;
        let cols = (1..=self.dim)
            .map(|j| self.bracket_vec_basis(x, j))
            .collect();
        Ok(LinearMap::from_columns(cols))
    }

    /// `R_{e_j}` without building the basis vector.
    pub fn right_mult_basis(&self, j: usize) -> LinearMap {
        let cols = (1..=self.dim)
            .map(|i| self.bracket_basis_vector(i, j))
            .collect();
        LinearMap::from_columns(cols)
    }

    /// `L_{e_i}` without building the basis vector.
    pub fn left_mult_basis(&self, i: usize) -> LinearMap {
        let cols = (1..=self.dim)
            .map(|j| self.bracket_basis_vector(i, j))
            .collect();
        LinearMap::from_columns(cols)
    }

    /// Multiplication operator of `e_k` on the given side.
    pub fn mult_basis(&self, side: Side, k: usize) -> LinearMap {
        match side {
            Side::Right => self.right_mult_basis(k),
            Side::Left => self.left_mult_basis(k),
        }
    }

    /// All violations of the chosen Leibniz identity on basis triples, in
    /// lexicographic triple order. Exhaustive rather than fail-fast so that
    /// transcription errors surface completely.
    pub fn check_leibniz(&self, side: Side) -> Vec<IdentityViolation> {
        let mut violations = Vec::new();
        for r in 1..=self.dim {
            for s in 1..=self.dim {
                let ers = self.bracket_basis_vector(r, s);
                for t in 1..=self.dim {
                    let lhs = self.bracket_vec_basis(&ers, t);
                    let rhs = match side {
                        Side::Right => {
                            // [[x,z],y] + [x,[y,z]]
                            let ert = self.bracket_basis_vector(r, t);
                            let est = self.bracket_basis_vector(s, t);
                            self.bracket_vec_basis(&ert, s)
                                .add(&self.bracket_basis_vec(r, &est))
                        }
                        Side::Left => {
                            // [x,[y,z]] - [y,[x,z]]
                            let est = self.bracket_basis_vector(s, t);
                            let ert = self.bracket_basis_vector(r, t);
                            self.bracket_basis_vec(r, &est)
                                .sub(&self.bracket_basis_vec(s, &ert))
                        }
                    };
                    if lhs != rhs {
                        violations.push(IdentityViolation {
                            triple: (r, s, t),
                            lhs,
                            rhs,
                        });
                    }
                }
            }
        }
        violations
    }

    pub fn check_right_leibniz(&self) -> Vec<IdentityViolation> {
        self.check_leibniz(Side::Right)
    }

    pub fn check_left_leibniz(&self) -> Vec<IdentityViolation> {
        self.check_leibniz(Side::Left)
    }

    pub fn is_leibniz(&self, side: Side) -> bool {
        self.check_leibniz(side).is_empty()
    }

    /// Does `d([x,y]) = [d(x),y] + [x,d(y)]` hold on all basis pairs?
    pub fn is_derivation(&self, d: &LinearMap) -> Result<bool> {
        check_same_dim("derivation candidate", d.dim(), self.dim)?;
        for i in 1..=self.dim {
            let dei = d.column(i);
            for j in 1..=self.dim {
                let dej = d.column(j);
                let lhs = d.apply(&self.bracket_basis_vector(i, j));
                let rhs = self
                    .bracket_vec_basis(&dei, j)
                    .add(&self.bracket_basis_vec(i, &dej));
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Lie check: alternating bracket plus the (right) Leibniz identity,
    /// which together give antisymmetry and Jacobi.
    pub fn check_lie(&self) -> bool {
        for i in 1..=self.dim {
            if !self.bracket_basis(i, i).is_empty() {
                return false;
            }
            for j in i + 1..=self.dim {
                let fwd = self.bracket_basis_vector(i, j);
                let bwd = self.bracket_basis_vector(j, i);
                if fwd.add(&bwd) != Vector::zero(self.dim) {
                    return false;
                }
            }
        }
        self.check_right_leibniz().is_empty()
    }

    /// Change of basis. Column j of `p` holds the coordinates of the new
    /// basis vector `e'_j` in the old basis.
    pub fn transform_basis(&self, p: &LinearMap) -> Result<StructureTensor> {
        check_same_dim("basis change", p.dim(), self.dim)?;
        let p_inv = p.inverse().ok_or(Error::SingularTransform)?;
        let cols = p.columns();
        let mut out = StructureTensor::abelian(self.dim);
        for i in 1..=self.dim {
            for j in 1..=self.dim {
                let mut w = Vector::zero(self.dim);
                self.bracket_into(&cols[i - 1], &cols[j - 1], &mut w);
                if w.is_zero() {
                    continue;
                }
                let coords = p_inv.apply(&w);
                for k in 1..=self.dim {
                    let c = coords.coord(k);
                    if !c.is_zero() {
                        out.add_term(i, j, k, c.clone());
                    }
                }
            }
        }
        Ok(out)
    }

    /// Restriction to the span of the first `m` basis vectors. Errors if a
    /// bracket of that span has a component outside it.
    pub fn restrict_leading(&self, m: usize) -> Result<StructureTensor> {
        let mut out = StructureTensor::abelian(m);
        for (&(i, j), terms) in &self.brackets {
            if i > m || j > m {
                continue;
            }
            for (k, c) in terms {
                if *k > m {
                    return Err(Error::Precondition(format!(
                        "leading {m}-block is not closed: [e_{i},e_{j}] has a component e_{k}"
                    )));
                }
                out.add_term(i, j, *k, c.clone());
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    /// Dim-1 algebra with [e1,e1] = e1: the right identity fails at (1,1,1)
    /// with lhs = e1 and rhs = 2 e1.
    #[test]
    fn one_dimensional_violation() {
        let mut t = StructureTensor::abelian(1);
        t.add_term(1, 1, 1, q(1));
        let v = t.check_right_leibniz();
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].triple, (1, 1, 1));
        assert_eq!(v[0].lhs, Vector::basis(1, 1));
        assert_eq!(v[0].rhs, Vector::basis(1, 1).scale(&q(2)));
    }

    #[test]
    fn abelian_is_everything() {
        let t = StructureTensor::abelian(3);
        assert!(t.check_right_leibniz().is_empty());
        assert!(t.check_left_leibniz().is_empty());
        assert!(t.check_lie());
        assert!(t.is_derivation(&LinearMap::identity(3)).unwrap());
    }

    #[test]
    fn zero_and_identity_transforms() {
        let mut t = StructureTensor::abelian(2);
        t.add_term(1, 1, 2, q(1));
        assert_eq!(t.transform_basis(&LinearMap::identity(2)).unwrap(), t);
        assert!(matches!(
            t.transform_basis(&LinearMap::zero(2)),
            Err(Error::SingularTransform)
        ));
    }

    #[test]
    fn right_mult_of_zero_vector_is_zero_map() {
        let mut t = StructureTensor::abelian(3);
        t.add_term(1, 1, 2, q(1));
        assert!(t.right_mult(&Vector::zero(3)).unwrap().is_zero());
    }

    #[test]
    fn add_term_cancels() {
        let mut t = StructureTensor::abelian(2);
        t.add_term(1, 2, 1, q(3));
        t.add_term(1, 2, 1, q(-3));
        assert_eq!(t, StructureTensor::abelian(2));
    }
}
