//! Vectors, square matrices and exact elimination routines.
//!
//! Matrices act by columns: the image of the j-th basis vector is column j.
//! Basis indices are 1-based everywhere in the public API, matching the
//! bracket tables this crate encodes.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Coordinate column over the algebra basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Vector {
    coords: Vec<Rational>,
}

impl Vector {
    pub fn from_coords(coords: Vec<Rational>) -> Self {
        Vector { coords }
    }

    pub fn zero(dim: usize) -> Self {
        Vector {
            coords: vec![Rational::zero(); dim],
        }
    }

    /// Standard basis vector `e_i` (1-based).
    pub fn basis(dim: usize, i: usize) -> Self {
        assert!((1..=dim).contains(&i), "basis index out of range");
        let mut v = Self::zero(dim);
        v.coords[i - 1] = Rational::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    /// 1-based coordinate access.
    pub fn coord(&self, i: usize) -> &Rational {
        &self.coords[i - 1]
    }

    pub fn set_coord(&mut self, i: usize, value: Rational) {
        self.coords[i - 1] = value;
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rational::is_zero)
    }

    pub fn add(&self, other: &Vector) -> Vector {
        assert_eq!(self.dim(), other.dim());
        Vector {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        assert_eq!(self.dim(), other.dim());
        Vector {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Vector {
        Vector {
            coords: self.coords.iter().map(|a| a * c).collect(),
        }
    }

    pub fn neg(&self) -> Vector {
        Vector {
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }
}

/// Square rational matrix, column-action convention.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearMap {
    dim: usize,
    // Row-major: entries[(r-1)*dim + (c-1)] is the (r, c) entry.
    entries: Vec<Rational>,
}

impl LinearMap {
    pub fn zero(dim: usize) -> Self {
        LinearMap {
            dim,
            entries: vec![Rational::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 1..=dim {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Matrix unit `E_{r,c}`: 1 in position (r, c), zero elsewhere.
    pub fn unit(dim: usize, r: usize, c: usize) -> Self {
        let mut m = Self::zero(dim);
        m.set(r, c, Rational::one());
        m
    }

    /// Columns are the images of the basis vectors.
    pub fn from_columns(columns: Vec<Vector>) -> Self {
        let dim = columns.len();
        let mut m = Self::zero(dim);
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.dim(), dim, "ragged column");
            for i in 1..=dim {
                m.set(i, j + 1, col.coord(i).clone());
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[(r - 1) * self.dim + (c - 1)]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Rational) {
        self.entries[(r - 1) * self.dim + (c - 1)] = value;
    }

    pub fn add_to(&mut self, r: usize, c: usize, value: Rational) {
        let cur = self.get(r, c).clone();
        self.set(r, c, cur + value);
    }

    pub fn column(&self, c: usize) -> Vector {
        Vector::from_coords((1..=self.dim).map(|r| self.get(r, c).clone()).collect())
    }

    pub fn columns(&self) -> Vec<Vector> {
        (1..=self.dim).map(|c| self.column(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rational::is_zero)
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        assert_eq!(self.dim, v.dim(), "map/vector dimension mismatch");
        let mut out = Vector::zero(self.dim);
        for c in 1..=self.dim {
            let x = v.coord(c);
            if x.is_zero() {
                continue;
            }
            for r in 1..=self.dim {
                let e = self.get(r, c);
                if !e.is_zero() {
                    let cur = out.coord(r).clone();
                    out.set_coord(r, cur + e * x);
                }
            }
        }
        out
    }

    /// Matrix product `self * other`; skips zero entries, which matters for
    /// the very sparse multiplication operators this crate works with.
    pub fn mul(&self, other: &LinearMap) -> LinearMap {
        assert_eq!(self.dim, other.dim, "map dimension mismatch");
        let n = self.dim;
        let mut out = Self::zero(n);
        for r in 1..=n {
            for k in 1..=n {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 1..=n {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        out.add_to(r, c, a * b);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &LinearMap) -> LinearMap {
        assert_eq!(self.dim, other.dim);
        LinearMap {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &LinearMap) -> LinearMap {
        assert_eq!(self.dim, other.dim);
        LinearMap {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> LinearMap {
        LinearMap {
            dim: self.dim,
            entries: self.entries.iter().map(|a| a * c).collect(),
        }
    }

    pub fn neg(&self) -> LinearMap {
        self.scale(&-Rational::one())
    }

    /// `self * other - other * self`.
    pub fn commutator(&self, other: &LinearMap) -> LinearMap {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn pow(&self, exp: usize) -> LinearMap {
        let mut acc = Self::identity(self.dim);
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn trace(&self) -> Rational {
        (1..=self.dim).map(|i| self.get(i, i).clone()).sum()
    }

    /// Top-left `m x m` block.
    pub fn leading_submatrix(&self, m: usize) -> LinearMap {
        assert!(m <= self.dim);
        let mut out = Self::zero(m);
        for r in 1..=m {
            for c in 1..=m {
                out.set(r, c, self.get(r, c).clone());
            }
        }
        out
    }

    /// Exact inverse via Gauss-Jordan on the augmented matrix; `None` when
    /// singular.
    pub fn inverse(&self) -> Option<LinearMap> {
        let n = self.dim;
        let mut aug: Vec<Vec<Rational>> = (1..=n)
            .map(|r| {
                let mut row: Vec<Rational> = (1..=n).map(|c| self.get(r, c).clone()).collect();
                row.extend((1..=n).map(|c| {
                    if c == r {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                }));
                row
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !aug[r][col].is_zero())?;
            aug.swap(col, pivot);
            let inv = aug[col][col].recip().expect("nonzero pivot");
            for x in aug[col].iter_mut() {
                *x = &*x * &inv;
            }
            for r in 0..n {
                if r != col && !aug[r][col].is_zero() {
                    let f = aug[r][col].clone();
                    let pivot_row = aug[col].clone();
                    for (x, p) in aug[r].iter_mut().zip(&pivot_row) {
                        let delta = p * &f;
                        *x = &*x - &delta;
                    }
                }
            }
        }
        let mut out = Self::zero(n);
        for r in 1..=n {
            for c in 1..=n {
                out.set(r, c, aug[r - 1][n + c - 1].clone());
            }
        }
        Some(out)
    }

    pub fn is_invertible(&self) -> bool {
        self.inverse().is_some()
    }
}

/// Reduced row echelon form. Returns the nonzero rows and their pivot
/// columns (0-based), pivots strictly increasing.
pub fn rref(mut rows: Vec<Vec<Rational>>) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot_row) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot_row);
        let inv = rows[rank][col].recip().expect("nonzero pivot");
        for x in rows[rank].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                let pivot_row = rows[rank].clone();
                for (x, p) in rows[r].iter_mut().zip(&pivot_row) {
                    let delta = p * &f;
                    *x = &*x - &delta;
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    rows.truncate(rank);
    (rows, pivots)
}

/// Nullspace basis of a rational constraint matrix, computed by
/// fraction-free (Bareiss) elimination on the integer-scaled rows followed
/// by exact back-substitution. Rows are constraints, columns unknowns.
pub fn nullspace(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    // Scale each row to integers.
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .filter(|row| row.iter().any(|x| !x.is_zero()))
        .map(|row| {
            assert_eq!(row.len(), ncols);
            let lcm = row
                .iter()
                .filter(|x| !x.is_zero())
                .fold(BigInt::one(), |acc, x| acc.lcm(x.denominator()));
            row.iter()
                .map(|x| x.numerator() * (&lcm / x.denominator()))
                .collect()
        })
        .collect();

    // Bareiss forward elimination.
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pr) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pr);
        let pivot = m[rank][col].clone();
        for r in rank + 1..m.len() {
            for c in col + 1..ncols {
                let num = &m[r][c] * &pivot - &m[r][col] * &m[rank][c];
                let (q, rem) = num.div_rem(&prev);
                debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                m[r][c] = q;
            }
            m[r][col] = BigInt::zero();
        }
        prev = pivot;
        pivot_cols.push(col);
        rank += 1;
    }
    m.truncate(rank);

    // Back-substitute for each free column.
    let is_pivot: Vec<bool> = {
        let mut v = vec![false; ncols];
        for &c in &pivot_cols {
            v[c] = true;
        }
        v
    };
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut x = vec![Rational::zero(); ncols];
        x[free] = Rational::one();
        for (row_idx, &pc) in pivot_cols.iter().enumerate().rev() {
            let row = &m[row_idx];
            let mut acc = Rational::zero();
            for c in pc + 1..ncols {
                if !row[c].is_zero() && !x[c].is_zero() {
                    acc += Rational::new(row[c].clone(), BigInt::one()) * x[c].clone();
                }
            }
            let pivot = Rational::new(row[pc].clone(), BigInt::one());
            x[pc] = -(acc / pivot);
        }
        basis.push(x);
    }
    basis
}

/// Plain dense rational Gauss-Jordan nullspace. Independent of [`nullspace`]
/// on purpose: it exists to cross-check the fraction-free path.
pub fn nullspace_dense_reference(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let (reduced, pivots) = rref(rows.to_vec());
    let is_pivot: Vec<bool> = {
        let mut v = vec![false; ncols];
        for &c in &pivots {
            v[c] = true;
        }
        v
    };
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut x = vec![Rational::zero(); ncols];
        x[free] = Rational::one();
        for (row_idx, &pc) in pivots.iter().enumerate() {
            // Row is e_pc + sum over non-pivot columns; pivot entry is 1.
            x[pc] = -reduced[row_idx][free].clone();
        }
        basis.push(x);
    }
    basis
}

/// Residual of `v` after eliminating against RREF `rows` (pivot columns in
/// `pivots`). Zero residual means membership in the row space.
pub fn reduce_against(rows: &[Vec<Rational>], pivots: &[usize], v: &[Rational]) -> Vec<Rational> {
    let mut out = v.to_vec();
    for (row, &pc) in rows.iter().zip(pivots) {
        if !out[pc].is_zero() {
            let f = out[pc].clone();
            for (o, r) in out.iter_mut().zip(row) {
                let delta = r * &f;
                *o = &*o - &delta;
            }
        }
    }
    out
}

pub(crate) fn err_dim(msg: impl Into<String>) -> Error {
    Error::DimensionMismatch(msg.into())
}

pub(crate) fn check_same_dim(what: &str, a: usize, b: usize) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(err_dim(format!("{what}: {a} vs {b}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::ratio(n, d)
    }

    #[test]
    fn inverse_round_trip() {
        let mut m = LinearMap::identity(3);
        m.set(1, 2, q(5, 2));
        m.set(3, 1, q(-1, 3));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), LinearMap::identity(3));
        assert_eq!(inv.mul(&m), LinearMap::identity(3));
    }

    #[test]
    fn singular_detected() {
        let mut m = LinearMap::zero(2);
        m.set(1, 1, q(1, 1));
        m.set(2, 1, q(2, 1));
        assert!(m.inverse().is_none());
    }

    #[test]
    fn rref_canonical() {
        let rows = vec![
            vec![q(2, 1), q(4, 1), q(0, 1)],
            vec![q(1, 1), q(2, 1), q(1, 1)],
        ];
        let (r, p) = rref(rows);
        assert_eq!(p, vec![0, 2]);
        assert_eq!(
            r,
            vec![
                vec![q(1, 1), q(2, 1), q(0, 1)],
                vec![q(0, 1), q(0, 1), q(1, 1)],
            ]
        );
    }

    #[test]
    fn nullspace_matches_reference() {
        // x + 2y - z = 0 ; 2x + 4y - 2z = 0 ; y + z = 0
        let rows = vec![
            vec![q(1, 1), q(2, 1), q(-1, 1)],
            vec![q(2, 1), q(4, 1), q(-2, 1)],
            vec![q(0, 1), q(1, 1), q(1, 1)],
        ];
        let a = nullspace(&rows, 3);
        let b = nullspace_dense_reference(&rows, 3);
        assert_eq!(a.len(), 1);
        assert_eq!(b.len(), 1);
        // Same line: proportional vectors.
        let (u, v) = (&a[0], &b[0]);
        let k = (0..3).find(|&i| !u[i].is_zero()).unwrap();
        let f = &v[k] / &u[k];
        for i in 0..3 {
            assert_eq!(&u[i] * &f, v[i]);
        }
        // And the kernel vector really annihilates the rows.
        for row in &rows {
            let dot: Rational = row.iter().zip(u).map(|(a, b)| a * b).sum();
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn sparse_mul_agrees_with_apply() {
        let mut a = LinearMap::zero(4);
        a.set(2, 1, q(1, 1));
        a.set(3, 2, q(-2, 1));
        let mut b = LinearMap::zero(4);
        b.set(1, 4, q(1, 2));
        b.set(2, 2, q(3, 1));
        let ab = a.mul(&b);
        for j in 1..=4 {
            let ej = Vector::basis(4, j);
            assert_eq!(ab.apply(&ej), a.apply(&b.apply(&ej)));
        }
    }
}
