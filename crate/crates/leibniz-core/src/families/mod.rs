//! Generators for every algebra in the classification: the nilradical
//! family, its four right and four left codimension-one solvable extensions,
//! the two codimension-two extensions, and the pre-normalization continuous
//! families they were distilled from.
//!
//! Parameter names mirror the source bracket tables (`a_{2,1}`, `b_{2,3}`,
//! `a_{2,n+1}`, ...) so a descriptor can be audited against them directly.

mod left;
mod nilradical;
pub mod patches;
pub mod pencils;
mod right;
mod sample;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::tensor::StructureTensor;

pub use nilradical::l2;
pub use sample::sample_params;

/// Which Leibniz identity a family satisfies.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IdentitySide {
    RightOnly,
    LeftOnly,
    Both,
}

/// Every family the catalog can build.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum Family {
    /// The nilpotent quasi-filiform nilradical family itself.
    L2,
    /// Right codimension-one extensions, final normalized forms.
    G1,
    G2,
    G3,
    G4,
    /// Right codimension-two extension, final form.
    Gc2,
    /// Left codimension-one extensions, final normalized forms.
    Ll1,
    Ll2,
    Ll3,
    Ll4,
    /// Left codimension-two extension, final form.
    Lc2,
    /// Right pre-absorption continuous families (four parameter cases).
    RThm1Case1,
    RThm1Case2,
    RThm1Case3,
    RThm1Case4,
    /// Right post-absorption families.
    RThm2Case1,
    RThm2Case2,
    RThm2Case3,
    RThm2Case4,
    /// Left pre-absorption families.
    LThm1Case1,
    LThm1Case2,
    LThm1Case3,
    LThm1Case4,
    /// Left post-absorption families.
    LThm2Case1,
    LThm2Case2,
    LThm2Case3,
    LThm2Case4,
}

pub const ALL_FAMILIES: &[Family] = &[
    Family::L2,
    Family::G1,
    Family::G2,
    Family::G3,
    Family::G4,
    Family::Gc2,
    Family::Ll1,
    Family::Ll2,
    Family::Ll3,
    Family::Ll4,
    Family::Lc2,
    Family::RThm1Case1,
    Family::RThm1Case2,
    Family::RThm1Case3,
    Family::RThm1Case4,
    Family::RThm2Case1,
    Family::RThm2Case2,
    Family::RThm2Case3,
    Family::RThm2Case4,
    Family::LThm1Case1,
    Family::LThm1Case2,
    Family::LThm1Case3,
    Family::LThm1Case4,
    Family::LThm2Case1,
    Family::LThm2Case2,
    Family::LThm2Case3,
    Family::LThm2Case4,
];

/// The ten final catalog families plus the nilradical.
pub const CATALOG_FAMILIES: &[Family] = &[
    Family::L2,
    Family::G1,
    Family::G2,
    Family::G3,
    Family::G4,
    Family::Gc2,
    Family::Ll1,
    Family::Ll2,
    Family::Ll3,
    Family::Ll4,
    Family::Lc2,
];

impl Family {
    pub fn name(self) -> &'static str {
        use Family::*;
        match self {
            L2 => "L2",
            G1 => "G1",
            G2 => "G2",
            G3 => "G3",
            G4 => "G4",
            Gc2 => "Gc2",
            Ll1 => "L1",
            Ll2 => "Ll2",
            Ll3 => "Ll3",
            Ll4 => "Ll4",
            Lc2 => "Lc2",
            RThm1Case1 => "RThm1Case1",
            RThm1Case2 => "RThm1Case2",
            RThm1Case3 => "RThm1Case3",
            RThm1Case4 => "RThm1Case4",
            RThm2Case1 => "RThm2Case1",
            RThm2Case2 => "RThm2Case2",
            RThm2Case3 => "RThm2Case3",
            RThm2Case4 => "RThm2Case4",
            LThm1Case1 => "LThm1Case1",
            LThm1Case2 => "LThm1Case2",
            LThm1Case3 => "LThm1Case3",
            LThm1Case4 => "LThm1Case4",
            LThm2Case1 => "LThm2Case1",
            LThm2Case2 => "LThm2Case2",
            LThm2Case3 => "LThm2Case3",
            LThm2Case4 => "LThm2Case4",
        }
    }

    /// Minimal nilradical dimension for this family.
    pub fn min_n(self) -> usize {
        use Family::*;
        match self {
            G2 | G3 | Ll2 | Ll3 | RThm1Case2 | RThm2Case2 | LThm1Case2 | LThm2Case2 => 5,
            _ => 4,
        }
    }

    /// Total algebra dimension for nilradical dimension `n`.
    pub fn total_dim(self, n: usize) -> usize {
        use Family::*;
        match self {
            L2 => n,
            Gc2 | Lc2 => n + 2,
            _ => n + 1,
        }
    }

    /// Which Leibniz identity members of the family satisfy.
    pub fn side(self) -> IdentitySide {
        use Family::*;
        match self {
            L2 => IdentitySide::Both,
            G1 | G2 | G3 | G4 | Gc2 | RThm1Case1 | RThm1Case2 | RThm1Case3 | RThm1Case4
            | RThm2Case1 | RThm2Case2 | RThm2Case3 | RThm2Case4 => IdentitySide::RightOnly,
            _ => IdentitySide::LeftOnly,
        }
    }

    pub fn is_catalog(self) -> bool {
        CATALOG_FAMILIES.contains(&self)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        // "Ll1" is accepted as an alias for the first left family "L1".
        if s == "Ll1" {
            return Ok(Family::Ll1);
        }
        ALL_FAMILIES
            .iter()
            .copied()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Descriptor(format!("unknown family {s:?}")))
    }
}

impl Serialize for Family {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for Family {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Serializable recipe for a catalog algebra: family tag, nilradical
/// dimension, and the family's free parameters.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct AlgebraDescriptor {
    pub family: Family,
    pub n: usize,
    #[serde(default)]
    pub params: BTreeMap<String, Rational>,
}

impl AlgebraDescriptor {
    pub fn new(family: Family, n: usize) -> Self {
        AlgebraDescriptor {
            family,
            n,
            params: BTreeMap::new(),
        }
    }

    pub fn with_param(mut self, name: &str, value: Rational) -> Self {
        self.params.insert(name.to_string(), value);
        self
    }

    pub fn param(&self, name: &str) -> &Rational {
        self.params
            .get(name)
            .unwrap_or_else(|| panic!("validated descriptor missing parameter {name:?}"))
    }
}

pub(crate) fn key_ak1(k: usize) -> String {
    format!("a_{{{k},1}}")
}

pub(crate) fn key_ak3(k: usize) -> String {
    format!("a_{{{k},3}}")
}

pub(crate) fn key_bj(j: usize) -> String {
    format!("b_{j}")
}

pub const KEY_A: &str = "a";
pub const KEY_B: &str = "b";
pub const KEY_DELTA: &str = "delta";
pub const KEY_EPSILON: &str = "epsilon";
pub const KEY_A21: &str = "a_{2,1}";
pub const KEY_A23: &str = "a_{2,3}";
pub const KEY_B21: &str = "b_{2,1}";
pub const KEY_B23: &str = "b_{2,3}";
pub const KEY_A2N1: &str = "a_{2,n+1}";
pub const KEY_ANN1: &str = "a_{n,n+1}";

/// Names of the free parameters `family` takes at nilradical dimension `n`.
pub fn required_params(family: Family, n: usize) -> Vec<String> {
    use Family::*;
    let ak1 = |from: usize| (from..=n).map(key_ak1);
    let ak3 = |from: usize| (from..=n).map(key_ak3);
    let s = |k: &str| k.to_string();
    match family {
        L2 | Gc2 | Lc2 => vec![],
        G1 | Ll1 => vec![s(KEY_A)],
        G2 | G3 | Ll2 | Ll3 => vec![s(KEY_DELTA)],
        G4 | Ll4 => {
            let mut v = vec![s(KEY_EPSILON)];
            v.extend((1..=n.saturating_sub(5)).map(key_bj));
            v
        }
        RThm1Case1 => {
            let mut v = vec![s(KEY_A), s(KEY_B), s(KEY_A21), s(KEY_B21), s(KEY_A23), s(KEY_A2N1)];
            v.extend(ak1(4));
            v.extend(ak3(5));
            v
        }
        RThm1Case2 => {
            let mut v = vec![s(KEY_A), s(KEY_A21), s(KEY_B21), s(KEY_A23), s(KEY_A2N1), s(KEY_ANN1)];
            v.extend(ak1(4));
            v.extend(ak3(5));
            v
        }
        RThm1Case3 => {
            let mut v = vec![s(KEY_B), s(KEY_A21), s(KEY_B21), s(KEY_A2N1)];
            v.extend(ak1(4));
            v.extend(ak3(4));
            v
        }
        RThm1Case4 => {
            let mut v = vec![s(KEY_A), s(KEY_A21), s(KEY_A23), s(KEY_B23), s(KEY_A2N1)];
            v.extend(ak1(4));
            v.extend(ak3(5));
            v
        }
        RThm2Case1 => {
            let mut v = vec![s(KEY_A), s(KEY_B), s(KEY_A21), s(KEY_B21), s(KEY_A23), s(KEY_A2N1), key_ak1(4)];
            v.extend(ak3(5));
            v
        }
        RThm2Case2 => {
            let mut v = vec![s(KEY_A), s(KEY_A21), s(KEY_B21), s(KEY_A23), s(KEY_ANN1), key_ak1(4)];
            v.extend(ak3(5));
            v
        }
        RThm2Case3 => {
            let mut v = vec![s(KEY_B), s(KEY_A21), s(KEY_B21)];
            v.extend(ak3(5));
            v
        }
        RThm2Case4 => {
            let mut v = vec![s(KEY_A), s(KEY_A21), s(KEY_A23)];
            v.extend(ak3(5));
            v
        }
        LThm1Case1 => {
            let mut v = vec![s(KEY_A), s(KEY_B), s(KEY_A21), s(KEY_B21), s(KEY_A23), s(KEY_B23), s(KEY_A2N1)];
            v.extend(ak1(5));
            v.extend(ak3(5));
            v
        }
        LThm1Case2 => {
            let mut v = vec![s(KEY_A), s(KEY_A21), s(KEY_B21), s(KEY_A23), s(KEY_B23), s(KEY_A2N1), s(KEY_ANN1)];
            v.extend(ak1(5));
            v.extend(ak3(5));
            v
        }
        LThm1Case3 => {
            let mut v = vec![s(KEY_B), s(KEY_A21), s(KEY_B21), s(KEY_A23), s(KEY_A2N1)];
            v.extend(ak1(5));
            v.extend(ak3(4));
            v
        }
        LThm1Case4 => {
            let mut v = vec![s(KEY_A), s(KEY_A21), s(KEY_B23), s(KEY_A2N1)];
            v.extend(ak1(4));
            v.extend(ak3(4));
            v
        }
        LThm2Case1 => {
            let mut v = vec![s(KEY_A), s(KEY_B), s(KEY_A21), s(KEY_B21), s(KEY_A23), s(KEY_B23), s(KEY_A2N1)];
            v.extend(ak3(5));
            v
        }
        LThm2Case2 => {
            let mut v = vec![s(KEY_A), s(KEY_A21), s(KEY_B21), s(KEY_A23), s(KEY_B23), s(KEY_ANN1)];
            v.extend(ak3(5));
            v
        }
        LThm2Case3 => {
            let mut v = vec![s(KEY_B), s(KEY_A23), s(KEY_B21)];
            v.extend(ak3(5));
            v
        }
        LThm2Case4 => {
            let mut v = vec![s(KEY_A), s(KEY_A21), s(KEY_B23)];
            v.extend(ak3(5));
            v
        }
    }
}

/// Validates a descriptor: dimension range, exact parameter set, and the
/// family's defining constraints. The violated constraint is named.
pub fn validate(desc: &AlgebraDescriptor) -> Result<()> {
    let f = desc.family;
    let n = desc.n;
    let fail = |msg: String| Err(Error::Descriptor(msg));
    if n < f.min_n() {
        return fail(format!("{f} requires n >= {}", f.min_n()));
    }
    let required = required_params(f, n);
    for name in &required {
        if !desc.params.contains_key(name) {
            return fail(format!("{f} at n={n} requires parameter {name:?}"));
        }
    }
    for name in desc.params.keys() {
        if !required.contains(name) {
            return fail(format!("{f} at n={n} does not take parameter {name:?}"));
        }
    }
    let one = Rational::one();
    let is_sign = |v: &Rational| *v == one || *v == -one.clone();
    use Family::*;
    match f {
        G2 | G3 | Ll2 | Ll3 => {
            if !is_sign(desc.param(KEY_DELTA)) {
                return fail(format!("{f} requires delta in {{1, -1}}"));
            }
        }
        G4 | Ll4 => {
            let eps = desc.param(KEY_EPSILON);
            if !(eps.is_zero() || is_sign(eps)) {
                return fail(format!("{f} requires epsilon in {{0, 1, -1}}"));
            }
            if n == 4 && !eps.is_zero() {
                return fail(format!("{f} requires epsilon = 0 when n = 4"));
            }
        }
        RThm1Case1 | RThm2Case1 => {
            let (a, b) = (desc.param(KEY_A), desc.param(KEY_B));
            if a.is_zero() {
                return fail(format!("{f} requires a != 0"));
            }
            if *b == a * &Rational::from_int(2) {
                return fail(format!("{f} requires b != 2a"));
            }
            if n >= 5 && *b == a * &Rational::from_int(4 - n as i64) {
                return fail(format!("{f} requires b != (4-n)a for n >= 5"));
            }
        }
        RThm1Case2 | RThm2Case2 | LThm1Case2 | LThm2Case2 => {
            if desc.param(KEY_A).is_zero() {
                return fail(format!("{f} requires a != 0"));
            }
        }
        RThm1Case3 | RThm2Case3 | LThm1Case3 | LThm2Case3 => {
            if desc.param(KEY_B).is_zero() {
                return fail(format!("{f} requires b != 0"));
            }
        }
        RThm1Case4 | RThm2Case4 | LThm1Case4 | LThm2Case4 => {
            if desc.param(KEY_A).is_zero() {
                return fail(format!("{f} requires a != 0"));
            }
        }
        LThm1Case1 | LThm2Case1 => {
            let (a, b) = (desc.param(KEY_A), desc.param(KEY_B));
            if a.is_zero() {
                return fail(format!("{f} requires a != 0"));
            }
            if b == a {
                return fail(format!("{f} requires b != a"));
            }
            if n >= 5 && *b == a * &Rational::from_int(4 - n as i64) {
                return fail(format!("{f} requires b != (4-n)a for n >= 5"));
            }
        }
        _ => {}
    }
    Ok(())
}

/// Builds the structure tensor of a descriptor (verbatim transcription plus
/// any ledger patches; see [`patches`]).
pub fn build(desc: &AlgebraDescriptor) -> Result<StructureTensor> {
    build_with_mode(desc, false)
}

/// As [`build`], with `strict = true` disabling ledger patches and keeping
/// the transcription verbatim.
pub fn build_with_mode(desc: &AlgebraDescriptor, strict: bool) -> Result<StructureTensor> {
    validate(desc)?;
    let mut t = match desc.family {
        Family::L2 => l2(desc.n),
        Family::G1 => right::g1(desc),
        Family::G2 => right::g2(desc),
        Family::G3 => right::g3(desc),
        Family::G4 => right::g4(desc),
        Family::Gc2 => right::gc2(desc.n),
        Family::Ll1 => left::ll1(desc),
        Family::Ll2 => left::ll2(desc),
        Family::Ll3 => left::ll3(desc),
        Family::Ll4 => left::ll4(desc),
        Family::Lc2 => left::lc2(desc.n),
        Family::RThm1Case1 => right::rthm1_case1(desc),
        Family::RThm1Case2 => right::rthm1_case2(desc),
        Family::RThm1Case3 => right::rthm1_case3(desc),
        Family::RThm1Case4 => right::rthm1_case4(desc),
        Family::RThm2Case1 => right::rthm2_case1(desc),
        Family::RThm2Case2 => right::rthm2_case2(desc),
        Family::RThm2Case3 => right::rthm2_case3(desc),
        Family::RThm2Case4 => right::rthm2_case4(desc),
        Family::LThm1Case1 => left::lthm1_case1(desc),
        Family::LThm1Case2 => left::lthm1_case2(desc),
        Family::LThm1Case3 => left::lthm1_case3(desc),
        Family::LThm1Case4 => left::lthm1_case4(desc),
        Family::LThm2Case1 => left::lthm2_case1(desc),
        Family::LThm2Case2 => left::lthm2_case2(desc),
        Family::LThm2Case3 => left::lthm2_case3(desc),
        Family::LThm2Case4 => left::lthm2_case4(desc),
    };
    if !strict {
        patches::apply(desc, &mut t);
    }
    Ok(t)
}

/// A coefficient a family derives from its free parameters, exposed for
/// auditing descriptors against the bracket tables they encode.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DerivedCoefficient {
    pub name: &'static str,
    pub value: Rational,
}

/// The derived coefficients of a validated descriptor (empty for the
/// nilradical and the final catalog families, whose tables carry none).
pub fn derived_coefficients(desc: &AlgebraDescriptor) -> Result<Vec<DerivedCoefficient>> {
    validate(desc)?;
    let named = |pairs: Vec<(&'static str, Rational)>| {
        pairs
            .into_iter()
            .map(|(name, value)| DerivedCoefficient { name, value })
            .collect()
    };
    use Family::*;
    Ok(match desc.family {
        RThm1Case1 | RThm2Case1 => {
            let (a43, b23) = right::case1_derived(desc);
            named(vec![("A_{4,3}", a43), ("B_{2,3}", b23)])
        }
        RThm1Case2 | RThm2Case2 => {
            let (a43, b23) = right::case2_derived(desc);
            named(vec![("A_{4,3}", a43), ("B_{2,3}", b23)])
        }
        RThm1Case4 => {
            let a43 = desc.param(KEY_B23).clone() - desc.param(KEY_A23).clone();
            named(vec![("A_{4,3}", a43)])
        }
        LThm1Case1 | LThm2Case1 => {
            let (a43, a41) = left::lcase1_derived(desc);
            named(vec![("A_{4,3}", a43), ("A_{4,1}", a41)])
        }
        LThm1Case2 | LThm2Case2 => {
            let (a43, a41) = left::lcase2_derived(desc);
            named(vec![("A_{4,3}", a43), ("A_{4,1}", a41)])
        }
        LThm1Case3 => {
            let a41 = -desc.param(KEY_A21).clone()
                + desc.param(&key_ak3(4)).clone()
                + desc.param(KEY_A23).clone();
            named(vec![("A_{4,1}", a41)])
        }
        _ => Vec::new(),
    })
}

/// Published invariants of a family, used as test oracles. Series lines are
/// only published for the nilradical and the final catalog families; the
/// identity side is known for all.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExpectedInvariants {
    pub ds_dims: Option<Vec<usize>>,
    pub ls_dims: Option<Vec<usize>>,
    pub ls_stabilized: Option<bool>,
    pub center_dim: Option<usize>,
    pub side: IdentitySide,
}

pub fn expected_invariants(desc: &AlgebraDescriptor) -> ExpectedInvariants {
    let n = desc.n;
    let side = desc.family.side();
    let none = ExpectedInvariants {
        ds_dims: None,
        ls_dims: None,
        ls_stabilized: None,
        center_dim: None,
        side,
    };
    use Family::*;
    match desc.family {
        L2 => {
            // LS = [n, n-2, n-4, n-5, ..., 1, 0]
            let mut ls = vec![n, n - 2];
            let mut d = n as i64 - 4;
            while d >= 0 {
                ls.push(d as usize);
                d -= 1;
            }
            ExpectedInvariants {
                ds_dims: Some(vec![n, n - 2, 0]),
                ls_dims: Some(ls),
                ls_stabilized: Some(false),
                center_dim: Some(2),
                side,
            }
        }
        G1 | G2 | G3 | Ll1 | Ll2 | Ll3 => ExpectedInvariants {
            ds_dims: Some(vec![n + 1, n, n - 2, 0]),
            ls_dims: Some(vec![n + 1, n, n]),
            ls_stabilized: Some(true),
            center_dim: None,
            side,
        },
        G4 | Ll4 => ExpectedInvariants {
            ds_dims: Some(vec![n + 1, n - 1, 0]),
            ls_dims: Some(vec![n + 1, n - 1, n - 1]),
            ls_stabilized: Some(true),
            center_dim: None,
            side,
        },
        Gc2 | Lc2 => ExpectedInvariants {
            ds_dims: Some(vec![n + 2, n, n - 2, 0]),
            ls_dims: Some(vec![n + 2, n, n]),
            ls_stabilized: Some(true),
            center_dim: None,
            side,
        },
        _ => none,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_names_round_trip() {
        for &f in ALL_FAMILIES {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert_eq!("Ll1".parse::<Family>().unwrap(), Family::Ll1);
        assert!("G9".parse::<Family>().is_err());
    }

    #[test]
    fn descriptor_validation_names_constraint() {
        let d = AlgebraDescriptor::new(Family::G2, 4)
            .with_param(KEY_DELTA, Rational::one());
        let err = validate(&d).unwrap_err().to_string();
        assert!(err.contains("requires n >= 5"), "{err}");

        let d = AlgebraDescriptor::new(Family::G2, 5)
            .with_param(KEY_DELTA, Rational::from_int(3));
        assert!(validate(&d).is_err());

        let d = AlgebraDescriptor::new(Family::G1, 4)
            .with_param(KEY_A, Rational::zero());
        assert!(validate(&d).is_ok(), "a = 0 is allowed in the unified family");

        let d = AlgebraDescriptor::new(Family::G1, 4)
            .with_param(KEY_A, Rational::zero())
            .with_param("bogus", Rational::one());
        assert!(validate(&d).is_err());
    }

    #[test]
    fn epsilon_forced_zero_at_n4() {
        let d = AlgebraDescriptor::new(Family::G4, 4)
            .with_param(KEY_EPSILON, Rational::one());
        assert!(validate(&d).is_err());
        let d = AlgebraDescriptor::new(Family::Ll4, 4)
            .with_param(KEY_EPSILON, Rational::zero());
        assert!(validate(&d).is_ok());
    }
}
