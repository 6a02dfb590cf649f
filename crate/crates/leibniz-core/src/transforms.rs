//! Basis-change steps, shape patterns, and replay of the classification's
//! absorption and normalization chains.
//!
//! A chain is verified by exact replay: the start tensor is built from its
//! descriptor, the steps are applied in proof order, the nilradical block
//! must stay bit-identical throughout, and the final tensor must match the
//! target shape (required zeros zero, pinned values exact). Entries that
//! the proofs "rename back" are left unconstrained in the pattern.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::families::{
    self, build, l2, key_ak1, key_ak3, key_bj, sample_params, AlgebraDescriptor, Family, KEY_A21,
    KEY_A23, KEY_B, KEY_B21, KEY_B23, KEY_EPSILON, KEY_A,
};
use crate::linalg::LinearMap;
use crate::rational::Rational;
use crate::tensor::StructureTensor;

/// One basis-change step: a description for the suite log plus the full
/// extended-dimension matrix (new basis vectors in old coordinates as
/// columns).
#[derive(Clone, Debug)]
pub struct TransformStep {
    pub description: String,
    pub map: LinearMap,
}

impl TransformStep {
    pub fn new(description: impl Into<String>, map: LinearMap) -> Result<Self> {
        if !map.is_invertible() {
            return Err(Error::SingularTransform);
        }
        Ok(TransformStep {
            description: description.into(),
            map,
        })
    }
}

/// `e'_target = e_target + sum c_k e_k`: identity except one column.
pub fn absorption_shift(
    dim: usize,
    target: usize,
    additions: &[(usize, Rational)],
) -> Result<TransformStep> {
    if !(1..=dim).contains(&target) || additions.iter().any(|(k, _)| !(1..=dim).contains(k)) {
        return Err(Error::Precondition(format!(
            "shift indices out of range for dim {dim}"
        )));
    }
    if additions.iter().any(|(k, _)| *k == target) {
        return Err(Error::Precondition(
            "shift may not add the target vector to itself".into(),
        ));
    }
    let mut map = LinearMap::identity(dim);
    let mut desc = format!("e'_{target} = e_{target}");
    for (k, c) in additions {
        if c.is_zero() {
            continue;
        }
        map.add_to(*k, target, c.clone());
        desc.push_str(&format!(" + ({c}) e_{k}"));
    }
    TransformStep::new(desc, map)
}

/// `e'_i = f_i e_i` on the listed columns, identity elsewhere.
pub fn absorption_scale(dim: usize, factors: &[(usize, Rational)]) -> Result<TransformStep> {
    let mut map = LinearMap::identity(dim);
    let mut desc = String::from("scale");
    for (i, f) in factors {
        if !(1..=dim).contains(i) {
            return Err(Error::Precondition(format!(
                "scale index {i} out of range for dim {dim}"
            )));
        }
        if f.is_zero() {
            return Err(Error::SingularTransform);
        }
        map.set(*i, *i, f.clone());
        desc.push_str(&format!(" e'_{i} = ({f}) e_{i}"));
    }
    TransformStep::new(desc, map)
}

/// Required shape of a bracket table: pinned coefficients, with everything
/// else required to vanish except explicitly unconstrained slots.
#[derive(Clone, Debug)]
pub struct ShapePattern {
    dim: usize,
    fixed: BTreeMap<(usize, usize, usize), Rational>,
    wildcards: BTreeSet<(usize, usize, usize)>,
}

impl ShapePattern {
    /// Pattern pinning exactly the bracket table of `t`.
    pub fn from_tensor(t: &StructureTensor) -> Self {
        let mut fixed = BTreeMap::new();
        for (i, j, terms) in t.entries() {
            for (k, c) in terms {
                fixed.insert((i, j, *k), c.clone());
            }
        }
        ShapePattern {
            dim: t.dim(),
            fixed,
            wildcards: BTreeSet::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Marks one structure-constant slot as unconstrained.
    pub fn with_wildcard(mut self, i: usize, j: usize, k: usize) -> Self {
        self.fixed.remove(&(i, j, k));
        self.wildcards.insert((i, j, k));
        self
    }

    pub fn fixed_entries(&self) -> impl Iterator<Item = (&(usize, usize, usize), &Rational)> {
        self.fixed.iter()
    }

    pub fn wildcard_slots(&self) -> impl Iterator<Item = &(usize, usize, usize)> {
        self.wildcards.iter()
    }

    pub fn insert_fixed(&mut self, i: usize, j: usize, k: usize, c: Rational) {
        self.wildcards.remove(&(i, j, k));
        if c.is_zero() {
            self.fixed.remove(&(i, j, k));
        } else {
            self.fixed.insert((i, j, k), c);
        }
    }

    /// First slot where `t` deviates from the pattern, if any.
    pub fn first_mismatch(&self, t: &StructureTensor) -> Option<(usize, usize, usize)> {
        if t.dim() != self.dim {
            return Some((0, 0, 0));
        }
        for i in 1..=self.dim {
            for j in 1..=self.dim {
                for k in 1..=self.dim {
                    if self.wildcards.contains(&(i, j, k)) {
                        continue;
                    }
                    let want = self.fixed.get(&(i, j, k));
                    let got = t.coeff(i, j, k);
                    let ok = match want {
                        Some(w) => got == *w,
                        None => got.is_zero(),
                    };
                    if !ok {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    pub fn matches(&self, t: &StructureTensor) -> bool {
        self.first_mismatch(t).is_none()
    }
}

/// Applies `steps` to `start` in order, requiring the nilradical block
/// (leading `nil_dim` indices) to stay exactly the nilradical family table
/// after every step. Returns the final tensor.
pub fn replay_chain(
    start: &StructureTensor,
    nil_dim: usize,
    steps: &[TransformStep],
) -> Result<StructureTensor> {
    let nil = l2(nil_dim);
    let mut cur = start.clone();
    for step in steps {
        cur = cur.transform_basis(&step.map)?;
        let block = cur.restrict_leading(nil_dim)?;
        if block != nil {
            return Err(Error::Precondition(format!(
                "step {:?} changed the nilradical block",
                step.description
            )));
        }
    }
    Ok(cur)
}

/// Builds the start descriptor, replays the chain, and checks the target
/// pattern.
pub fn verify_chain(
    start: &AlgebraDescriptor,
    steps: &[TransformStep],
    pattern: &ShapePattern,
) -> Result<bool> {
    let t0 = build(start)?;
    if pattern.dim() != t0.dim() {
        return Err(Error::DimensionMismatch(format!(
            "pattern dim {} vs algebra dim {}",
            pattern.dim(),
            t0.dim()
        )));
    }
    let t = replay_chain(&t0, start.n, steps)?;
    Ok(pattern.matches(&t))
}

/// Exact isomorphism witness check: does `p` carry the bracket table of `a`
/// onto that of `b`?
pub fn iso_witness_check(
    a: &StructureTensor,
    b: &StructureTensor,
    p: &LinearMap,
) -> Result<bool> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch(format!(
            "iso witness dims {} vs {}",
            a.dim(),
            b.dim()
        )));
    }
    Ok(a.transform_basis(p)? == *b)
}

/// A replayable proof chain: start descriptor, steps in proof order, and
/// the target shape.
#[derive(Clone, Debug)]
pub struct ChainPlan {
    pub start: AlgebraDescriptor,
    pub steps: Vec<TransformStep>,
    pub pattern: ShapePattern,
}

impl ChainPlan {
    pub fn verify(&self) -> Result<bool> {
        verify_chain(&self.start, &self.steps, &self.pattern)
    }
}

fn expect_family(desc: &AlgebraDescriptor, family: Family) -> Result<()> {
    if desc.family != family {
        return Err(Error::Precondition(format!(
            "chain expects a {family} descriptor, got {}",
            desc.family
        )));
    }
    Ok(())
}

fn case1_a43(desc: &AlgebraDescriptor) -> Rational {
    let a = desc.param(KEY_A);
    let b = desc.param(KEY_B);
    let shared = ((a - b) * desc.param(KEY_B21)
        + a.clone() * (desc.param(KEY_A21) + desc.param(&key_ak1(4))))
        / (a * &Rational::from_int(2) - b.clone());
    -(b / a) * desc.param(KEY_A23).clone() + shared
}

/// Absorption chain of the generic right case: shift the extension
/// generator by `-A_{4,3} e_1`, then by the tail of the `a_{k,1}` column.
/// Target: the post-absorption family with the same parameters; the
/// `e_2`-coefficient of the extension generator's self-bracket is renamed,
/// hence unconstrained.
pub fn right_case1_absorption(desc: &AlgebraDescriptor) -> Result<ChainPlan> {
    expect_family(desc, Family::RThm1Case1)?;
    let n = desc.n;
    let dim = n + 1;
    let a43 = case1_a43(desc);
    let steps = vec![
        absorption_shift(dim, n + 1, &[(1, -a43)])?,
        absorption_shift(
            dim,
            n + 1,
            &(3..n)
                .map(|k| (k, desc.param(&key_ak1(k + 1)).clone()))
                .collect::<Vec<_>>(),
        )?,
    ];
    let mut target = desc.clone();
    target.family = Family::RThm2Case1;
    for k in 5..=n {
        target.params.remove(&key_ak1(k));
    }
    let pattern = ShapePattern::from_tensor(&build(&target)?).with_wildcard(n + 1, n + 1, 2);
    Ok(ChainPlan {
        start: desc.clone(),
        steps,
        pattern,
    })
}

/// Absorption chain of the degenerate-diagonal right case. Its third step
/// reads the current self-bracket coefficient off the replayed tensor, the
/// way the proof renames it back. Target shape fully pinned.
pub fn right_case3_absorption(desc: &AlgebraDescriptor) -> Result<ChainPlan> {
    expect_family(desc, Family::RThm1Case3)?;
    let n = desc.n;
    let dim = n + 1;
    let b = desc.param(KEY_B).clone();
    let a43 = desc.param(&key_ak3(4)).clone();
    let mut steps = vec![
        absorption_shift(dim, n + 1, &[(1, -a43.clone())])?,
        absorption_shift(
            dim,
            n + 1,
            &(3..n)
                .map(|k| (k, desc.param(&key_ak1(k + 1)).clone()))
                .collect::<Vec<_>>(),
        )?,
    ];
    let partial = replay_chain(&build(desc)?, n, &steps)?;
    let drifted = partial.coeff(n + 1, n + 1, 2);
    steps.push(absorption_shift(dim, n + 1, &[(2, -(drifted / b))])?);

    let mut target = AlgebraDescriptor::new(Family::RThm2Case3, n);
    target.params.insert(
        KEY_A21.into(),
        desc.param(KEY_A21).clone() + desc.param(&key_ak1(4)).clone() - a43.clone(),
    );
    target
        .params
        .insert(KEY_B21.into(), desc.param(KEY_B21).clone() - a43);
    target.params.insert(KEY_B.into(), desc.param(KEY_B).clone());
    for k in 5..=n {
        target
            .params
            .insert(key_ak3(k), desc.param(&key_ak3(k)).clone());
    }
    let pattern = ShapePattern::from_tensor(&build(&target)?);
    Ok(ChainPlan {
        start: desc.clone(),
        steps,
        pattern,
    })
}

fn lcase1_derived(desc: &AlgebraDescriptor) -> (Rational, Rational) {
    let a = desc.param(KEY_A);
    let b = desc.param(KEY_B);
    let amb = a - b;
    let a43 = desc.param(KEY_B23).clone() + a.clone() * desc.param(KEY_A23).clone() / amb.clone();
    let a41 = -desc.param(KEY_A21).clone()
        + ((a * &Rational::from_int(2) - b.clone()) * (desc.param(KEY_A23) + desc.param(KEY_B23))
            - a.clone() * desc.param(KEY_B21).clone())
            / amb;
    (a43, a41)
}

/// Absorption chain of the generic left case: shift by `-A_{4,3} e_1`, then
/// by `A_{4,1} e_3` plus the `a_{k,1}` tail.
pub fn left_case1_absorption(desc: &AlgebraDescriptor) -> Result<ChainPlan> {
    expect_family(desc, Family::LThm1Case1)?;
    let n = desc.n;
    let dim = n + 1;
    let (a43, a41) = lcase1_derived(desc);
    let mut second = vec![(3, a41)];
    second.extend((4..n).map(|k| (k, desc.param(&key_ak1(k + 1)).clone())));
    let steps = vec![
        absorption_shift(dim, n + 1, &[(1, -a43)])?,
        absorption_shift(dim, n + 1, &second)?,
    ];
    let mut target = desc.clone();
    target.family = Family::LThm2Case1;
    for k in 5..=n {
        target.params.remove(&key_ak1(k));
    }
    let pattern = ShapePattern::from_tensor(&build(&target)?).with_wildcard(n + 1, n + 1, 2);
    Ok(ChainPlan {
        start: desc.clone(),
        steps,
        pattern,
    })
}

fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let num = r.numerator().sqrt();
    let den = r.denominator().sqrt();
    let cand = Rational::new(num, den);
    if &(cand.clone() * cand.clone()) == r {
        Some(cand)
    } else {
        None
    }
}

/// Full normalization of the degenerate-diagonal right case down to its
/// canonical family: absorption, clearing of the residual `e_2` entries,
/// scaling of the extension generator, and (when the leading cascade
/// coefficient is nonzero) the quadratic rescaling that pins it to one of
/// the three sign classes. The rescaling is rational only when
/// `a_{5,3}/b` is plus or minus a square, which the paired sampler
/// guarantees; other descriptors are rejected.
pub fn right_case3_normalization(desc: &AlgebraDescriptor) -> Result<ChainPlan> {
    expect_family(desc, Family::RThm1Case3)?;
    let n = desc.n;
    let dim = n + 1;
    let b = desc.param(KEY_B).clone();

    let absorption = right_case3_absorption(desc)?;
    let mut steps = absorption.steps;
    let mut cur = replay_chain(&build(desc)?, n, &steps)?;

    // Clear the (2,1) entries of both multiplication operators.
    let a21c = cur.coeff(1, n + 1, 2);
    let b21c = cur.coeff(n + 1, 1, 2);
    let mut clear = LinearMap::identity(dim);
    clear.set(2, 1, -(a21c + b21c.clone()) / b.clone());
    clear.set(2, 3, -(b21c / b.clone()));
    steps.push(TransformStep::new(
        "clear the e_2 components of columns 1 and 3",
        clear,
    )?);
    // Scale the extension generator to unit diagonal.
    steps.push(absorption_scale(
        dim,
        &[(n + 1, b.recip().expect("b nonzero by the case constraint"))],
    )?);
    cur = replay_chain(&build(desc)?, n, &steps)?;

    // Optional quadratic rescaling of the leading cascade coefficient.
    let lead = if n >= 5 {
        cur.coeff(3, n + 1, 5)
    } else {
        Rational::zero()
    };
    let (epsilon, scale_q) = if lead.is_zero() {
        (Rational::zero(), Rational::one())
    } else {
        let s = lead.abs();
        let q = rational_sqrt(&s).ok_or_else(|| {
            Error::Precondition(format!(
                "cascade coefficient {lead} is not a signed square; the rescaling would be irrational"
            ))
        })?;
        let mut factors = vec![(1, q.clone()), (2, q.clone() * q.clone())];
        for k in 3..=n {
            factors.push((k, q.pow(k as i32 - 2)));
        }
        steps.push(absorption_scale(dim, &factors)?);
        (Rational::from_int(lead.signum() as i64), q)
    };

    // Target: the canonical epsilon family, with coefficients of the tail
    // determined by the replayed scalings.
    let mut target = AlgebraDescriptor::new(Family::G4, n).with_param(KEY_EPSILON, epsilon);
    for j in 1..=n.saturating_sub(5) {
        let a_norm = desc.param(&key_ak3(j + 5)).clone() / b.clone();
        let bj = a_norm / scale_q.pow(j as i32 + 2);
        target.params.insert(key_bj(j), bj);
    }
    let pattern = ShapePattern::from_tensor(&build(&target)?);
    Ok(ChainPlan {
        start: desc.clone(),
        steps,
        pattern,
    })
}

/// Draws case-3 parameters whose leading cascade coefficient is a signed
/// square multiple of `b`, so the normalization chain stays rational.
pub fn sample_case3_normalizable(n: usize, seed: u64) -> Result<AlgebraDescriptor> {
    let mut desc = sample_params(Family::RThm1Case3, n, seed)?;
    if n >= 5 {
        let b = desc.param(KEY_B).clone();
        let sigma = match seed % 3 {
            0 => Rational::zero(),
            1 => Rational::one(),
            _ => -Rational::one(),
        };
        let q = Rational::ratio(1 + (seed % 3) as i64, 1 + (seed % 2) as i64);
        desc.params
            .insert(key_ak3(5), sigma * q.clone() * q * b);
        families::validate(&desc)?;
    }
    Ok(desc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shift_matches_stated_matrix() {
        // e'_6 = e_6 - 2 e_1 at dim 6: identity with -2 in entry (1,6).
        let s = absorption_shift(6, 6, &[(1, Rational::from_int(-2))]).unwrap();
        let mut expect = LinearMap::identity(6);
        expect.set(1, 6, Rational::from_int(-2));
        assert_eq!(s.map, expect);
        // Zero shift is the identity.
        let z = absorption_shift(6, 6, &[]).unwrap();
        assert_eq!(z.map, LinearMap::identity(6));
    }

    #[test]
    fn scale_matches_stated_matrix() {
        let s = absorption_scale(6, &[(6, Rational::ratio(1, 3))]).unwrap();
        let mut expect = LinearMap::identity(6);
        expect.set(6, 6, Rational::ratio(1, 3));
        assert_eq!(s.map, expect);
        assert!(absorption_scale(6, &[(6, Rational::zero())]).is_err());
    }

    #[test]
    fn empty_chain_matches_own_shape() {
        let desc = sample_params(Family::G1, 5, 3).unwrap();
        let t = build(&desc).unwrap();
        let pattern = ShapePattern::from_tensor(&t);
        assert!(verify_chain(&desc, &[], &pattern).unwrap());
    }

    #[test]
    fn iso_witness_basics() {
        let t = l2(5);
        assert!(iso_witness_check(&t, &t, &LinearMap::identity(5)).unwrap());
        // The nilradical is not isomorphic to the abelian algebra under any
        // witness; in particular not under the identity.
        let ab = StructureTensor::abelian(4);
        let t4 = l2(4);
        assert!(!iso_witness_check(&t4, &ab, &LinearMap::identity(4)).unwrap());
    }

    #[test]
    fn composition_order() {
        // Applying s1 then s2 equals the single map s1 * s2 under the
        // columns-are-new-vectors convention.
        let t = l2(5);
        let s1 = absorption_shift(5, 3, &[(2, Rational::from_int(2))]).unwrap();
        let s2 = absorption_scale(5, &[(1, Rational::ratio(1, 2))]).unwrap();
        let two_step = t
            .transform_basis(&s1.map)
            .unwrap()
            .transform_basis(&s2.map)
            .unwrap();
        let composite = t.transform_basis(&s1.map.mul(&s2.map)).unwrap();
        assert_eq!(two_step, composite);
    }

    #[test]
    fn rational_sqrt_works() {
        assert_eq!(
            rational_sqrt(&Rational::ratio(9, 4)),
            Some(Rational::ratio(3, 2))
        );
        assert_eq!(rational_sqrt(&Rational::from_int(2)), None);
        assert_eq!(rational_sqrt(&Rational::from_int(-4)), None);
    }

    #[test]
    fn round_trip_transform() {
        let t = build(&sample_params(Family::G3, 6, 9).unwrap()).unwrap();
        let mut p = LinearMap::identity(7);
        p.set(1, 2, Rational::ratio(3, 2));
        p.set(5, 1, Rational::from_int(-1));
        let inv = p.inverse().unwrap();
        let back = t.transform_basis(&p).unwrap().transform_basis(&inv).unwrap();
        assert_eq!(back, t);
    }
}
