//! Two-sided ideal closures, quotient algebras, the squares ideal, and
//! certificate checking for nilradical candidates.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::Vector;
use crate::series::{product_space, SeriesResult};
use crate::subspace::Subspace;
use crate::tensor::StructureTensor;

/// Smallest two-sided ideal containing `s`, by fixpoint iteration.
pub fn ideal_closure(t: &StructureTensor, s: &Subspace) -> Result<Subspace> {
    let full = Subspace::full(t.dim());
    let mut cur = s.clone();
    loop {
        let grown = cur
            .sum(&product_space(t, &cur, &full)?)
            .sum(&product_space(t, &full, &cur)?);
        if grown == cur {
            return Ok(cur);
        }
        cur = grown;
    }
}

/// Two-sided ideal generated by the squares `[x, x]`; generated by
/// polarization over basis pairs: `[e_i, e_j] + [e_j, e_i]`, `i <= j`.
pub fn squares_ideal(t: &StructureTensor) -> Result<Subspace> {
    let n = t.dim();
    let mut gens = Vec::new();
    for i in 1..=n {
        for j in i..=n {
            let ei = Vector::basis(n, i);
            let ej = Vector::basis(n, j);
            let v = t.bracket(&ei, &ej)?.add(&t.bracket(&ej, &ei)?);
            if !v.is_zero() {
                gens.push(v);
            }
        }
    }
    ideal_closure(t, &Subspace::from_generators(n, gens))
}

fn is_two_sided_ideal(t: &StructureTensor, s: &Subspace) -> Result<bool> {
    Ok(ideal_violation(t, s)?.is_none())
}

/// First bracket of a candidate basis vector with a standard basis vector
/// that escapes the candidate, as `(candidate row, basis index, side)`.
fn ideal_violation(
    t: &StructureTensor,
    s: &Subspace,
) -> Result<Option<(usize, usize, &'static str)>> {
    for (row, v) in s.basis_vectors().iter().enumerate() {
        for j in 1..=t.dim() {
            let ej = Vector::basis(t.dim(), j);
            if !s.contains_vector(&t.bracket(v, &ej)?) {
                return Ok(Some((row + 1, j, "right")));
            }
            if !s.contains_vector(&t.bracket(&ej, v)?) {
                return Ok(Some((row + 1, j, "left")));
            }
        }
    }
    Ok(None)
}

/// Quotient of `t` by a two-sided ideal. The quotient basis consists of the
/// standard basis vectors at the non-pivot positions of the ideal's RREF,
/// in ascending order; brackets of representatives are projected along the
/// ideal.
pub fn quotient_algebra(t: &StructureTensor, ideal: &Subspace) -> Result<StructureTensor> {
    if ideal.ambient_dim() != t.dim() {
        return Err(Error::DimensionMismatch(format!(
            "quotient ideal ambient {} vs algebra {}",
            ideal.ambient_dim(),
            t.dim()
        )));
    }
    if !is_two_sided_ideal(t, ideal)? {
        return Err(Error::Precondition(
            "quotient requires a two-sided ideal".into(),
        ));
    }
    let reps = ideal.complement_indices();
    let m = reps.len();
    let mut out = StructureTensor::abelian(m);
    for (qi, &pi) in reps.iter().enumerate() {
        for (qj, &pj) in reps.iter().enumerate() {
            let w = t.bracket(&Vector::basis(t.dim(), pi), &Vector::basis(t.dim(), pj))?;
            // Reduce along the ideal: the residual is supported on the
            // complement coordinates.
            let residual = ideal.reduce(&w);
            for (qk, &pk) in reps.iter().enumerate() {
                let c = residual.coord(pk);
                if !c.is_zero() {
                    out.add_term(qi + 1, qj + 1, qk + 1, c.clone());
                }
            }
        }
    }
    Ok(out)
}

/// Per-check outcome of a nilradical certificate.
#[derive(Clone, Debug, Serialize)]
pub struct CertificateChecks {
    pub is_ideal: bool,
    pub is_nilpotent_subalgebra: bool,
    pub complement_nonnilpotent: bool,
}

/// Certificate that a subspace behaves like the nilradical: a two-sided
/// ideal, nilpotent, and not extendable to a larger nilpotent subalgebra by
/// any single complement generator. The third check is necessary for
/// maximality but not sufficient, which is recorded in `maximality_note`.
#[derive(Clone, Debug, Serialize)]
pub struct IdealCertificate {
    pub checks: CertificateChecks,
    /// Whether `dim N >= dim L / 2` holds.
    pub dim_bound_holds: bool,
    pub candidate_dim: usize,
    pub algebra_dim: usize,
    /// Complement generator whose extension stayed nilpotent, if any.
    pub failing_generator: Option<usize>,
    /// Internal series dims of a non-nilpotent restriction, when check (b)
    /// fails.
    pub series_witness: Option<Vec<usize>>,
    /// Escaping bracket `(candidate row, basis index, side)`, when the
    /// ideal check fails.
    pub ideal_witness: Option<(usize, usize, &'static str)>,
    pub maximality_note: &'static str,
}

impl IdealCertificate {
    pub fn passes(&self) -> bool {
        self.checks.is_ideal
            && self.checks.is_nilpotent_subalgebra
            && self.checks.complement_nonnilpotent
    }
}

/// Lower central series of a bracket-closed subspace, computed inside the
/// ambient coordinates.
fn subalgebra_series(t: &StructureTensor, s: &Subspace) -> Result<SeriesResult> {
    let mut terms = vec![s.clone()];
    loop {
        let cur = terms.last().expect("nonempty");
        if cur.is_zero() {
            break;
        }
        let next = product_space(t, cur, s)?;
        let repeat = &next == cur;
        terms.push(next);
        if repeat {
            break;
        }
    }
    let dims: Vec<usize> = terms.iter().map(Subspace::dim).collect();
    let stabilized = matches!(dims.as_slice(), [.., a, b] if a == b);
    Ok(SeriesResult { dims, stabilized })
}

/// Checks a candidate nilradical. See [`IdealCertificate`].
pub fn verify_nilradical_certificate(
    t: &StructureTensor,
    candidate: &Subspace,
) -> Result<IdealCertificate> {
    if candidate.ambient_dim() != t.dim() {
        return Err(Error::DimensionMismatch(format!(
            "candidate ambient {} vs algebra {}",
            candidate.ambient_dim(),
            t.dim()
        )));
    }
    let ideal_witness = ideal_violation(t, candidate)?;
    let is_ideal = ideal_witness.is_none();
    let mut series_witness = None;
    let is_nilpotent_subalgebra = if is_ideal {
        let s = subalgebra_series(t, candidate)?;
        let ok = !s.stabilized;
        if !ok {
            series_witness = Some(s.dims.clone());
        }
        ok
    } else {
        false
    };
    let mut failing_generator = None;
    let mut complement_nonnilpotent = true;
    for &g in &candidate.complement_indices() {
        let extended = candidate.sum(&Subspace::span_basis(t.dim(), &[g]));
        // Not closed under the bracket means not a subalgebra at all, so it
        // cannot witness a larger nilpotent one.
        if !extended.contains(&product_space(t, &extended, &extended)?) {
            continue;
        }
        let s = subalgebra_series(t, &extended)?;
        if !s.stabilized {
            complement_nonnilpotent = false;
            failing_generator = Some(g);
            break;
        }
    }
    Ok(IdealCertificate {
        checks: CertificateChecks {
            is_ideal,
            is_nilpotent_subalgebra,
            complement_nonnilpotent,
        },
        dim_bound_holds: 2 * candidate.dim() >= t.dim(),
        candidate_dim: candidate.dim(),
        algebra_dim: t.dim(),
        failing_generator,
        series_witness,
        ideal_witness,
        maximality_note:
            "complement check is necessary for maximality of the nilpotent ideal, not sufficient",
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::l2;
    use crate::rational::Rational;

    #[test]
    fn closure_of_central_vector_is_itself() {
        let t = l2(5);
        let s = Subspace::span_basis(5, &[2]);
        assert_eq!(ideal_closure(&t, &s).unwrap(), s);
    }

    #[test]
    fn closure_grows_to_oracle_value() {
        // Frozen from a hand fixpoint: e3 pulls in e4, e2, e5.
        let t = l2(5);
        let s = Subspace::span_basis(5, &[3]);
        let got = ideal_closure(&t, &s).unwrap();
        assert_eq!(got, Subspace::span_basis(5, &[2, 3, 4, 5]));
    }

    #[test]
    fn closure_of_full_is_full() {
        let t = l2(5);
        assert_eq!(
            ideal_closure(&t, &Subspace::full(5)).unwrap(),
            Subspace::full(5)
        );
    }

    #[test]
    fn squares_ideal_of_nilradical() {
        for n in 4..=7 {
            assert_eq!(
                squares_ideal(&l2(n)).unwrap(),
                Subspace::span_basis(n, &[2])
            );
        }
    }

    #[test]
    fn squares_of_lie_tensor_is_zero() {
        // so(3)-like: [e1,e2]=e3, antisymmetric completion, Jacobi holds.
        let mut t = StructureTensor::abelian(3);
        let one = Rational::one();
        t.add_term(1, 2, 3, one.clone());
        t.add_term(2, 1, 3, -one.clone());
        t.add_term(2, 3, 1, one.clone());
        t.add_term(3, 2, 1, -one.clone());
        t.add_term(3, 1, 2, one.clone());
        t.add_term(1, 3, 2, -one.clone());
        assert!(t.check_lie());
        assert!(squares_ideal(&t).unwrap().is_zero());
    }

    #[test]
    fn quotient_by_squares_is_lie() {
        // Frozen table: quotient of the n=5 nilradical by <e2> has basis
        // (e1, e3, e4, e5) -> (f1, f2, f3, f4) with [f2,f1]=f3, [f3,f1]=f4,
        // [f1,f2]=-f3, [f1,f3]=-f4 and [f1,f1]=0.
        let t = l2(5);
        let q = quotient_algebra(&t, &Subspace::span_basis(5, &[2])).unwrap();
        assert_eq!(q.dim(), 4);
        assert!(q.check_lie());
        assert_eq!(q.coeff(2, 1, 3), Rational::one());
        assert_eq!(q.coeff(3, 1, 4), Rational::one());
        assert_eq!(q.coeff(1, 2, 3), -Rational::one());
        assert_eq!(q.coeff(1, 3, 4), -Rational::one());
        assert!(q.bracket_basis(1, 1).is_empty());
        assert_eq!(q.nonzero_brackets(), 4);
    }

    #[test]
    fn quotient_edge_cases() {
        let t = l2(4);
        assert_eq!(t, quotient_algebra(&t, &Subspace::zero(4)).unwrap());
        let all = quotient_algebra(&t, &Subspace::full(4)).unwrap();
        assert_eq!(all.dim(), 0);
        // <e3> is not an ideal.
        assert!(quotient_algebra(&t, &Subspace::span_basis(4, &[3])).is_err());
    }

    #[test]
    fn nilpotent_algebra_is_its_own_nilradical() {
        let t = l2(5);
        let cert = verify_nilradical_certificate(&t, &Subspace::full(5)).unwrap();
        assert!(cert.passes());
        assert!(cert.dim_bound_holds);
    }
}
