//! Derivation spaces, inner derivations and nil-independence of pairs.

use crate::error::{Error, Result};
use crate::linalg::{check_same_dim, nullspace, rref, LinearMap};
use crate::poly::{count_real_roots, gcd_many, Poly};
use crate::rational::Rational;
use crate::tensor::{Side, StructureTensor};

/// A basis of a space of derivations of a fixed algebra.
#[derive(Clone, Debug)]
pub struct DerivationSpace {
    pub algebra_dim: usize,
    pub basis: Vec<LinearMap>,
}

impl DerivationSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

fn map_to_flat(m: &LinearMap) -> Vec<Rational> {
    let n = m.dim();
    let mut out = Vec::with_capacity(n * n);
    for r in 1..=n {
        for c in 1..=n {
            out.push(m.get(r, c).clone());
        }
    }
    out
}

fn flat_to_map(n: usize, flat: &[Rational]) -> LinearMap {
    let mut m = LinearMap::zero(n);
    for r in 1..=n {
        for c in 1..=n {
            m.set(r, c, flat[(r - 1) * n + (c - 1)].clone());
        }
    }
    m
}

/// All derivations of `t`, solved as a linear system in the n^2 unknown
/// matrix entries by fraction-free elimination.
///
/// The constraint set runs over all basis pairs `(i, j)` and output
/// coordinates `m`:
/// `sum_k c^k_{ij} d_{m,k} - sum_p d_{p,i} c^m_{pj} - sum_p d_{p,j} c^m_{ip} = 0`.
pub fn derivation_space(t: &StructureTensor) -> DerivationSpace {
    let n = t.dim();
    let unknowns = n * n;
    let idx = |r: usize, c: usize| (r - 1) * n + (c - 1);
    let mut rows = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            for m in 1..=n {
                let mut row = vec![Rational::zero(); unknowns];
                let mut any = false;
                for (k, c) in t.bracket_basis(i, j) {
                    row[idx(m, *k)] += c.clone();
                    any = true;
                }
                for p in 1..=n {
                    let cpj = t.coeff(p, j, m);
                    if !cpj.is_zero() {
                        row[idx(p, i)] -= cpj;
                        any = true;
                    }
                    let cip = t.coeff(i, p, m);
                    if !cip.is_zero() {
                        row[idx(p, j)] -= cip;
                        any = true;
                    }
                }
                if any {
                    rows.push(row);
                }
            }
        }
    }
    let kernel = nullspace(&rows, unknowns);
    DerivationSpace {
        algebra_dim: n,
        basis: kernel.iter().map(|v| flat_to_map(n, v)).collect(),
    }
}

/// Span of the multiplication operators of the basis vectors on the given
/// side, reduced to a basis. Requires the corresponding Leibniz identity,
/// since only then are these maps derivations.
pub fn inner_derivations(t: &StructureTensor, side: Side) -> Result<DerivationSpace> {
    if !t.is_leibniz(side) {
        return Err(Error::Precondition(format!(
            "inner derivations on the {} side require the {} Leibniz identity",
            side.name(),
            side.name()
        )));
    }
    let n = t.dim();
    let gens: Vec<Vec<Rational>> = (1..=n)
        .map(|k| map_to_flat(&t.mult_basis(side, k)))
        .collect();
    let (reduced, _) = rref(gens);
    Ok(DerivationSpace {
        algebra_dim: n,
        basis: reduced.iter().map(|v| flat_to_map(n, v)).collect(),
    })
}

/// Nilpotency of a single operator: `D^n = 0` for `n` the matrix size.
pub fn is_nilpotent_map(d: &LinearMap) -> bool {
    d.pow(d.dim()).is_zero()
}

/// Homogeneous bivariate polynomial of fixed degree `k`: coefficient `j`
/// multiplies `alpha^j beta^(k-j)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HomogeneousPoly {
    pub degree: usize,
    pub coeffs: Vec<Rational>,
}

impl HomogeneousPoly {
    fn zero(degree: usize) -> Self {
        HomogeneousPoly {
            degree,
            coeffs: vec![Rational::zero(); degree + 1],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn eval(&self, alpha: &Rational, beta: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc += c * &(alpha.pow(j as i32) * beta.pow((self.degree - j) as i32));
            }
        }
        acc
    }

    /// Restriction to `beta = 1`, a univariate polynomial in `alpha`.
    pub fn at_beta_one(&self) -> Poly {
        Poly::from_coeffs(self.coeffs.clone())
    }
}

/// The trace polynomials `p_k(alpha, beta) = trace((alpha A + beta B)^k)`,
/// `k = 1..n`. Over a field of characteristic zero the combination is
/// nilpotent exactly when all of them vanish.
#[derive(Clone, Debug)]
pub struct TracePencil {
    pub size: usize,
    pub coefficients: Vec<HomogeneousPoly>,
}

// Entries of (alpha A + beta B)^k are homogeneous of degree k; each is kept
// as its coefficient list.
fn pencil_powers(a: &LinearMap, b: &LinearMap) -> TracePencil {
    let n = a.dim();
    // first power: entry (r,c) = a_{rc} alpha + b_{rc} beta
    let first: Vec<HomogeneousPoly> = (1..=n)
        .flat_map(|r| (1..=n).map(move |c| (r, c)))
        .map(|(r, c)| HomogeneousPoly {
            degree: 1,
            coeffs: vec![b.get(r, c).clone(), a.get(r, c).clone()],
        })
        .collect();
    let mut traces = Vec::new();
    let mut cur = first.clone();
    let idx = |r: usize, c: usize| (r - 1) * n + (c - 1);
    for k in 1..=n {
        let mut tr = HomogeneousPoly::zero(k);
        for i in 1..=n {
            let e = &cur[idx(i, i)];
            for (j, c) in e.coeffs.iter().enumerate() {
                tr.coeffs[j] += c.clone();
            }
        }
        traces.push(tr);
        if k == n {
            break;
        }
        // cur := cur * (alpha A + beta B)
        let mut next: Vec<HomogeneousPoly> = (0..n * n).map(|_| HomogeneousPoly::zero(k + 1)).collect();
        for r in 1..=n {
            for m in 1..=n {
                let e = &cur[idx(r, m)];
                if e.is_zero() {
                    continue;
                }
                for c in 1..=n {
                    let lin = &first[idx(m, c)];
                    if lin.is_zero() {
                        continue;
                    }
                    let tgt = &mut next[idx(r, c)];
                    // multiply degree-k entry by the linear entry
                    for (j1, c1) in e.coeffs.iter().enumerate() {
                        if c1.is_zero() {
                            continue;
                        }
                        for (j2, c2) in lin.coeffs.iter().enumerate() {
                            if !c2.is_zero() {
                                tgt.coeffs[j1 + j2] += c1 * c2;
                            }
                        }
                    }
                }
            }
        }
        cur = next;
    }
    TracePencil {
        size: n,
        coefficients: traces,
    }
}

pub fn trace_pencil(a: &LinearMap, b: &LinearMap) -> Result<TracePencil> {
    check_same_dim("trace pencil operands", a.dim(), b.dim())?;
    Ok(pencil_powers(a, b))
}

/// Is every nontrivial real combination `alpha A + beta B` non-nilpotent?
///
/// Works on the trace pencil: all `p_k` identically zero means every
/// combination is nilpotent (false); otherwise the two axes are tested
/// directly, and the remaining candidates `(alpha, 1)` are the common real
/// roots of the nonzero `p_k(alpha, 1)`, counted by Sturm sequences on
/// their gcd.
pub fn nil_independent_pair(a: &LinearMap, b: &LinearMap) -> Result<bool> {
    let pencil = trace_pencil(a, b)?;
    if pencil.coefficients.iter().all(HomogeneousPoly::is_zero) {
        return Ok(false);
    }
    if is_nilpotent_map(a) || is_nilpotent_map(b) {
        // (1, 0) or (0, 1) is a nontrivial nilpotent combination.
        return Ok(false);
    }
    let restricted: Vec<Poly> = pencil
        .coefficients
        .iter()
        .map(HomogeneousPoly::at_beta_one)
        .collect();
    let g = gcd_many(&restricted);
    // Every p_k(.,1) zero would force all p_k = 0, handled above.
    debug_assert!(!g.is_zero());
    if g.degree() == 0 {
        return Ok(true);
    }
    Ok(count_real_roots(&g) == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    #[test]
    fn abelian_derivations_full() {
        let t = StructureTensor::abelian(3);
        assert_eq!(derivation_space(&t).dim(), 9);
        assert!(inner_derivations(&t, Side::Right).unwrap().basis.is_empty());
    }

    #[test]
    fn nilpotent_map_checks() {
        let mut n = LinearMap::zero(3);
        n.set(2, 1, q(1));
        n.set(3, 2, q(4));
        assert!(is_nilpotent_map(&n));
        assert!(!is_nilpotent_map(&LinearMap::identity(3)));
    }

    #[test]
    fn diag_pair_nil_independent() {
        // A = diag(1,0), B = diag(0,1): p1 = alpha + beta,
        // p2 = alpha^2 + beta^2 vanish jointly only at the origin.
        let mut a = LinearMap::zero(2);
        a.set(1, 1, q(1));
        let mut b = LinearMap::zero(2);
        b.set(2, 2, q(1));
        let pencil = trace_pencil(&a, &b).unwrap();
        assert_eq!(pencil.coefficients[0].coeffs, vec![q(1), q(1)]);
        assert_eq!(pencil.coefficients[1].coeffs, vec![q(1), q(0), q(1)]);
        assert!(nil_independent_pair(&a, &b).unwrap());
    }

    #[test]
    fn strictly_triangular_pair_dependent() {
        let mut a = LinearMap::zero(3);
        a.set(1, 2, q(1));
        a.set(2, 3, q(-2));
        assert!(!nil_independent_pair(&a, &a.clone()).unwrap());
        // A and 3A are proportional, so dependent as well.
        assert!(!nil_independent_pair(&a, &a.scale(&q(3))).unwrap());
    }

    #[test]
    fn real_root_makes_pair_dependent() {
        // A = diag(1, -1), B = identity: alpha*A + beta*I is nilpotent for
        // (alpha, beta) = (1, ±1)... actually eigenvalues alpha+beta and
        // -alpha+beta vanish jointly only if alpha = beta = 0; but
        // A = diag(1,0), B = diag(-1,0) has combination alpha - beta on one
        // diagonal slot and 0 on the other: nilpotent along alpha = beta.
        let mut a = LinearMap::zero(2);
        a.set(1, 1, q(1));
        let b = a.scale(&q(-1));
        assert!(!nil_independent_pair(&a, &b).unwrap());
    }

    #[test]
    fn symmetric_in_arguments() {
        let mut a = LinearMap::zero(2);
        a.set(1, 1, q(1));
        let mut b = LinearMap::zero(2);
        b.set(2, 2, q(1));
        assert_eq!(
            nil_independent_pair(&a, &b).unwrap(),
            nil_independent_pair(&b, &a).unwrap()
        );
    }
}
