//! Outer-derivation pairs of the codimension-two construction.
//!
//! These are the two nil-independent outer derivations acting on the
//! nilradical after absorption, still carrying their free parameters. Both
//! matrices are derivations of the nilradical for every parameter choice,
//! and no nontrivial real combination of the pair is nilpotent.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::LinearMap;
use crate::rational::Rational;

/// Free parameters of an outer pair: the `(2,1)` entry, the `(2,3)` entry
/// parameter, and the cascade column `a_{5,3}..a_{n,3}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PencilParams {
    /// `a_{2,1}` on the right side, `b_{2,1}` on the left.
    pub p21: Rational,
    pub a23: Rational,
    /// Keys `5..=n`.
    pub ak3: BTreeMap<usize, Rational>,
}

impl PencilParams {
    fn at(&self, k: usize) -> Rational {
        self.ak3.get(&k).cloned().unwrap_or_else(Rational::zero)
    }

    fn check(&self, n: usize) -> Result<()> {
        if n < 4 {
            return Err(Error::Precondition("outer pairs need n >= 4".into()));
        }
        if let Some(&k) = self.ak3.keys().find(|&&k| !(5..=n).contains(&k)) {
            return Err(Error::Precondition(format!(
                "cascade parameter a_{{{k},3}} out of range 5..={n}"
            )));
        }
        Ok(())
    }
}

fn q(v: i64) -> Rational {
    Rational::from_int(v)
}

/// Shared cascade pattern below the diagonal: `(k, j) = a_{k-j+3,3}` for
/// columns `j >= 3`, rows `k >= j+2`, with an overall sign.
fn fill_cascade(m: &mut LinearMap, n: usize, p: &PencilParams, sign: i64) {
    let s = q(sign);
    for k in 5..=n {
        m.set(k, 3, p.at(k) * s.clone());
    }
    for j in 4..=n {
        for k in j + 2..=n {
            m.set(k, j, p.at(k - j + 3) * s.clone());
        }
    }
}

/// The right-side pair `(R_{e_{n+1}}, R_{e_{n+2}})` restricted to the
/// nilradical.
pub fn right_outer_pair(n: usize, p: &PencilParams) -> Result<(LinearMap, LinearMap)> {
    p.check(n)?;
    let mut r1 = LinearMap::zero(n);
    r1.set(1, 1, q(1));
    r1.set(2, 1, p.p21.clone());
    r1.set(2, 3, p.a23.clone());
    r1.set(3, 1, q(-2));
    r1.set(3, 3, q(-1));
    if n >= 5 {
        r1.set(5, 1, p.at(5));
    }
    for i in 4..=n {
        r1.set(i, i, q(i as i64 - 4));
    }
    fill_cascade(&mut r1, n, p, 1);

    let mut r2 = LinearMap::zero(n);
    r2.set(1, 1, q(1));
    r2.set(2, 1, p.a23.clone());
    r2.set(2, 2, q(1));
    r2.set(2, 3, p.a23.clone());
    r2.set(3, 1, q(-1));
    for i in 4..=n {
        r2.set(i, i, q(i as i64 - 3));
    }
    fill_cascade(&mut r2, n, p, 1);
    // Column 1 of the second derivation carries the derived coefficients
    // A_{6,3} = a_{6,3},
    // A_{m,3} = a_{m,3} - sum_{i=5,6} a_{i,3} a_{m-i+3,3}
    //                   - sum_{i=8}^{m-1} A_{i-1,3} a_{m-i+4,3} / (i-6).
    let derived = cascade_derived(n, p, false);
    for k in 6..=n {
        r2.set(k, 1, -(derived[&k].clone() / q(k as i64 - 5)));
    }
    Ok((r1, r2))
}

/// The left-side pair `(L_{e_{n+1}}, L_{e_{n+2}})` restricted to the
/// nilradical.
pub fn left_outer_pair(n: usize, p: &PencilParams) -> Result<(LinearMap, LinearMap)> {
    p.check(n)?;
    let mut l1 = LinearMap::zero(n);
    l1.set(1, 1, q(-1));
    l1.set(2, 1, p.p21.clone());
    l1.set(2, 3, -p.a23.clone());
    l1.set(3, 1, q(2));
    l1.set(3, 3, q(1));
    if n >= 5 {
        l1.set(5, 1, -p.at(5));
    }
    for i in 4..=n {
        l1.set(i, i, q(4 - i as i64));
    }
    fill_cascade(&mut l1, n, p, -1);

    let mut l2 = LinearMap::zero(n);
    l2.set(1, 1, q(-1));
    l2.set(2, 1, -p.p21.clone() - p.a23.clone() * q(2));
    l2.set(2, 2, q(-2));
    l2.set(2, 3, -p.a23.clone());
    l2.set(3, 3, q(-1));
    for i in 4..=n {
        l2.set(i, i, q(2 - i as i64));
    }
    fill_cascade(&mut l2, n, p, -1);
    // A_{6,3} = 2 a_{6,3},
    // A_{m,3} = 2 a_{m,3} - sum_{i=5,6} (i-4) a_{i,3} a_{m-i+3,3}
    //                     - sum_{i=8}^{m-1} A_{i-1,3} a_{m-i+4,3} / (i-6).
    let derived = cascade_derived(n, p, true);
    for k in 6..=n {
        l2.set(k, 1, derived[&k].clone() / q(k as i64 - 5));
    }
    Ok((l1, l2))
}

fn cascade_derived(n: usize, p: &PencilParams, left: bool) -> BTreeMap<usize, Rational> {
    let mut derived: BTreeMap<usize, Rational> = BTreeMap::new();
    if n >= 6 {
        let a6 = p.at(6);
        derived.insert(6, if left { a6 * q(2) } else { a6 });
    }
    for m in 7..=n {
        let lead = if left {
            p.at(m) * q(2)
        } else {
            p.at(m)
        };
        let mut v = lead;
        for i in 5..=6usize {
            let w = if m + 3 >= i { p.at(i) * p.at(m + 3 - i) } else { Rational::zero() };
            v -= if left { w * q(i as i64 - 4) } else { w };
        }
        for i in 8..m {
            let w = derived[&(i - 1)].clone() * p.at(m + 4 - i) / q(i as i64 - 6);
            v -= w;
        }
        derived.insert(m, v);
    }
    derived
}

/// Deterministic parameter draw for the outer pairs.
pub fn sample_pencil_params(n: usize, seed: u64) -> PencilParams {
    let mut s = seed.wrapping_mul(0x9e3779b97f4a7c15).wrapping_add(n as u64);
    if s == 0 {
        s = 1;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(s);
    let draw = |rng: &mut ChaCha8Rng| {
        Rational::ratio(rng.gen_range(-4i64..=4), rng.gen_range(1i64..=3))
    };
    PencilParams {
        p21: draw(&mut rng),
        a23: draw(&mut rng),
        ak3: (5..=n).map(|k| (k, draw(&mut rng))).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::derivations::nil_independent_pair;
    use crate::families::l2;

    #[test]
    fn pairs_are_derivations_and_nil_independent() {
        for n in [4, 5, 6, 7] {
            let t = l2(n);
            let p = sample_pencil_params(n, 42);
            for pair in [right_outer_pair(n, &p).unwrap(), left_outer_pair(n, &p).unwrap()] {
                assert!(t.is_derivation(&pair.0).unwrap(), "first, n={n}");
                assert!(t.is_derivation(&pair.1).unwrap(), "second, n={n}");
                assert!(nil_independent_pair(&pair.0, &pair.1).unwrap(), "n={n}");
            }
        }
    }

    #[test]
    fn out_of_range_cascade_rejected() {
        let mut p = sample_pencil_params(5, 0);
        p.ak3.insert(9, Rational::one());
        assert!(right_outer_pair(5, &p).is_err());
    }
}
