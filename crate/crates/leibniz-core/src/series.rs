//! Characteristic series, center, nilpotency and solvability.
//!
//! Series indexing follows `L^0 = L`: the reported dimension lists start at
//! the whole algebra, so they are directly comparable with lines like
//! `DS=[n, n-2, 0]`. A non-terminating series is reported with its first
//! repeated dimension and `stabilized = true`.

use crate::error::{Error, Result};
use crate::linalg::{check_same_dim, nullspace, Vector};
use crate::subspace::Subspace;
use crate::tensor::StructureTensor;

/// Dimension profile of a characteristic series.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SeriesResult {
    /// Dimensions of the successive terms, starting at the whole space.
    /// Strictly decreasing except possibly the final entry, which repeats
    /// the previous one exactly when `stabilized` is true.
    pub dims: Vec<usize>,
    /// True when the series became constant at a nonzero term.
    pub stabilized: bool,
}

impl SeriesResult {
    pub fn terminated(&self) -> bool {
        !self.stabilized
    }
}

/// Span of all brackets `[a, b]` with `a in A`, `b in B`.
pub fn product_space(t: &StructureTensor, a: &Subspace, b: &Subspace) -> Result<Subspace> {
    check_same_dim("product_space A", a.ambient_dim(), t.dim())?;
    check_same_dim("product_space B", b.ambient_dim(), t.dim())?;
    let mut gens = Vec::new();
    for x in a.basis_vectors() {
        for y in b.basis_vectors() {
            let w = t.bracket(&x, &y)?;
            if !w.is_zero() {
                gens.push(w);
            }
        }
    }
    Ok(Subspace::from_generators(t.dim(), gens))
}

fn series_terms(
    t: &StructureTensor,
    start: Subspace,
    next: impl Fn(&Subspace) -> Result<Subspace>,
) -> Result<Vec<Subspace>> {
    let mut terms = vec![start];
    loop {
        let cur = terms.last().expect("nonempty");
        if cur.is_zero() {
            break;
        }
        let nxt = next(cur)?;
        let repeat = &nxt == cur;
        terms.push(nxt);
        if repeat {
            break;
        }
        // The series of a finite-dimensional algebra is decreasing, so it
        // either reaches zero or repeats within dim+1 steps.
        debug_assert!(terms.len() <= t.dim() + 2);
    }
    Ok(terms)
}

/// Terms of the lower central series `L^0 = L, L^{k+1} = [L^k, L]`, up to
/// and including the first zero or first repeated term.
pub fn lower_central_terms(t: &StructureTensor) -> Vec<Subspace> {
    let full = Subspace::full(t.dim());
    series_terms(t, full.clone(), |cur| product_space(t, cur, &full))
        .expect("dimensions are consistent by construction")
}

/// Terms of the derived series `L^(0) = L, L^(k+1) = [L^(k), L^(k)]`.
pub fn derived_terms(t: &StructureTensor) -> Vec<Subspace> {
    series_terms(t, Subspace::full(t.dim()), |cur| product_space(t, cur, cur))
        .expect("dimensions are consistent by construction")
}

fn profile(terms: &[Subspace]) -> SeriesResult {
    let dims: Vec<usize> = terms.iter().map(Subspace::dim).collect();
    let stabilized = match dims.as_slice() {
        [.., a, b] => a == b,
        _ => false,
    };
    SeriesResult { dims, stabilized }
}

pub fn lower_central_series(t: &StructureTensor) -> SeriesResult {
    profile(&lower_central_terms(t))
}

pub fn derived_series(t: &StructureTensor) -> SeriesResult {
    profile(&derived_terms(t))
}

pub fn is_nilpotent(t: &StructureTensor) -> bool {
    !lower_central_series(t).stabilized
}

pub fn is_solvable(t: &StructureTensor) -> bool {
    !derived_series(t).stabilized
}

/// Minimal `m` with `L^m = 0` under the `L^0 = L` convention; `None` when
/// the algebra is not nilpotent.
pub fn nil_index(t: &StructureTensor) -> Option<usize> {
    let s = lower_central_series(t);
    if s.stabilized {
        None
    } else {
        Some(s.dims.len() - 1)
    }
}

/// Quasi-filiform test: `L^{n-3} != 0` and `L^{n-2} = 0` for `n = dim`,
/// equivalently nilpotency with nil-index exactly `n - 2`.
pub fn is_quasi_filiform(t: &StructureTensor) -> Result<bool> {
    if t.dim() < 4 {
        return Err(Error::Precondition(format!(
            "quasi-filiform is defined for dim >= 4, got {}",
            t.dim()
        )));
    }
    Ok(nil_index(t) == Some(t.dim() - 2))
}

/// Exact center `{x : [x, e_i] = [e_i, x] = 0 for all i}`, computed as the
/// nullspace of the stacked bracket constraints.
pub fn center(t: &StructureTensor) -> Subspace {
    let n = t.dim();
    let mut rows = Vec::with_capacity(2 * n * n);
    for j in 1..=n {
        for k in 1..=n {
            // sum_i x_i c^k_{ij} = 0  ([x, e_j] = 0)
            rows.push((1..=n).map(|i| t.coeff(i, j, k)).collect::<Vec<_>>());
            // sum_i x_i c^k_{ji} = 0  ([e_j, x] = 0)
            rows.push((1..=n).map(|i| t.coeff(j, i, k)).collect::<Vec<_>>());
        }
    }
    let kernel = nullspace(&rows, n);
    Subspace::from_generators(n, kernel.into_iter().map(Vector::from_coords))
}
