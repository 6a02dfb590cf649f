//! Univariate polynomials over the rationals and Sturm real-root counting.

use crate::rational::Rational;

/// Dense univariate polynomial, coefficients in ascending degree order.
/// Canonical form: no trailing zero coefficients (zero polynomial is empty).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        let mut p = Poly { coeffs };
        p.normalize();
        p
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The monic linear factor `x - r`.
    pub fn linear_root(r: &Rational) -> Self {
        Self::from_coeffs(vec![-r.clone(), Rational::one()])
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Rational::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the zero polynomial is reported as 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![Rational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c.clone();
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c.clone();
        }
        Poly::from_coeffs(out)
    }

    pub fn neg(&self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::from_coeffs(out)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::from_coeffs(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * &Rational::from_int(i as i64 + 1))
                .collect(),
        )
    }

    /// Euclidean division: `(quotient, remainder)` with
    /// `self = q * divisor + r` and `deg r < deg divisor`.
    pub fn divrem(&self, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let mut rem = self.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len()];
        let dlead = divisor.leading().expect("nonzero divisor").clone();
        while !rem.is_zero() && rem.degree() >= divisor.degree() {
            let shift = rem.degree() - divisor.degree();
            let factor = rem.leading().expect("nonzero").clone() / dlead.clone();
            quot[shift] = factor.clone();
            let mut sub = vec![Rational::zero(); shift];
            sub.extend(divisor.coeffs.iter().map(|c| c * &factor));
            rem = rem.sub(&Poly::from_coeffs(sub));
        }
        (Poly::from_coeffs(quot), rem)
    }

    /// Monic gcd (Euclid); `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.make_monic()
    }

    pub fn make_monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => self.scale(&l.recip().expect("nonzero leading coefficient")),
        }
    }

    /// Square-free part `self / gcd(self, self')`, monic.
    pub fn square_free_part(&self) -> Poly {
        if self.is_zero() || self.degree() == 0 {
            return self.make_monic();
        }
        let g = self.gcd(&self.derivative());
        let (q, r) = self.divrem(&g);
        debug_assert!(r.is_zero());
        q.make_monic()
    }

    fn sign_at_neg_inf(&self) -> i32 {
        match self.leading() {
            None => 0,
            Some(l) => {
                let s = l.signum();
                if self.degree().is_multiple_of(2) {
                    s
                } else {
                    -s
                }
            }
        }
    }

    fn sign_at_pos_inf(&self) -> i32 {
        self.leading().map_or(0, |l| l.signum())
    }
}

fn sign_changes(signs: impl Iterator<Item = i32>) -> usize {
    let mut count = 0;
    let mut last = 0;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Canonical Sturm chain `p, p', -rem(...), ...`.
pub fn sturm_chain(p: &Poly) -> Vec<Poly> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let len = chain.len();
        let last = &chain[len - 1];
        if last.is_zero() {
            chain.pop();
            break;
        }
        let prev = &chain[len - 2];
        let (_, r) = prev.divrem(last);
        if r.is_zero() {
            break;
        }
        chain.push(r.neg());
    }
    chain
}

/// Number of distinct real roots of `p` (Sturm's theorem over the whole
/// line). Constant nonzero polynomials have none; the zero polynomial is
/// rejected.
pub fn count_real_roots(p: &Poly) -> usize {
    assert!(!p.is_zero(), "root counting of the zero polynomial");
    if p.degree() == 0 {
        return 0;
    }
    let chain = sturm_chain(&p.square_free_part());
    let at_neg = sign_changes(chain.iter().map(Poly::sign_at_neg_inf));
    let at_pos = sign_changes(chain.iter().map(Poly::sign_at_pos_inf));
    at_neg - at_pos
}

/// Monic gcd of all nonzero polynomials in the list; zero when all are zero.
pub fn gcd_many(polys: &[Poly]) -> Poly {
    polys
        .iter()
        .filter(|p| !p.is_zero())
        .fold(Poly::zero(), |acc, p| {
            if acc.is_zero() {
                p.make_monic()
            } else {
                acc.gcd(p)
            }
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::ratio(n, d)
    }

    fn poly(coeffs: &[(i64, i64)]) -> Poly {
        Poly::from_coeffs(coeffs.iter().map(|&(n, d)| q(n, d)).collect())
    }

    #[test]
    fn divrem_basic() {
        // x^2 - 1 = (x - 1)(x + 1)
        let p = poly(&[(-1, 1), (0, 1), (1, 1)]);
        let d = poly(&[(-1, 1), (1, 1)]);
        let (quot, rem) = p.divrem(&d);
        assert!(rem.is_zero());
        assert_eq!(quot, poly(&[(1, 1), (1, 1)]));
    }

    #[test]
    fn sturm_counts() {
        // (x-1)(x+2)x has 3 real roots
        let p = Poly::linear_root(&q(1, 1))
            .mul(&Poly::linear_root(&q(-2, 1)))
            .mul(&Poly::linear_root(&q(0, 1)));
        assert_eq!(count_real_roots(&p), 3);
        // x^2 + 1 has none
        let p2 = poly(&[(1, 1), (0, 1), (1, 1)]);
        assert_eq!(count_real_roots(&p2), 0);
        // (x - 1/2)^2 has one distinct real root
        let lin = Poly::linear_root(&q(1, 2));
        assert_eq!(count_real_roots(&lin.mul(&lin)), 1);
        // mixed: (x^2+3)(x-4)
        let p3 = poly(&[(3, 1), (0, 1), (1, 1)]).mul(&Poly::linear_root(&q(4, 1)));
        assert_eq!(count_real_roots(&p3), 1);
    }

    #[test]
    fn gcd_of_common_factor() {
        let f = Poly::linear_root(&q(3, 1));
        let a = f.mul(&poly(&[(1, 1), (1, 1)]));
        let b = f.mul(&poly(&[(5, 1), (0, 1), (2, 1)]));
        assert_eq!(a.gcd(&b), f.make_monic());
    }

    #[test]
    fn square_free() {
        let lin = Poly::linear_root(&q(2, 1));
        let p = lin.mul(&lin).mul(&lin);
        assert_eq!(p.square_free_part(), lin.make_monic());
    }
}
