//! Right solvable extensions: the four final codimension-one families, the
//! codimension-two family, and the pre/post-absorption parameter cases they
//! come from. Brackets are transcribed verbatim from the classification
//! tables; cascade sums are written with their upper bound at the nilradical
//! dimension, so empty ranges contribute nothing.

use super::nilradical::with_nilradical;
use super::{key_ak1, key_ak3, key_bj, AlgebraDescriptor};
use super::{KEY_A, KEY_A21, KEY_A23, KEY_A2N1, KEY_ANN1, KEY_B, KEY_B21, KEY_B23, KEY_DELTA, KEY_EPSILON};
use crate::rational::Rational;
use crate::tensor::StructureTensor;

fn q(v: i64) -> Rational {
    Rational::from_int(v)
}

/// Coefficient column `a_{*,3}` with the derived slot 4 entry; indices
/// outside `4..=n` read as zero.
struct Col3 {
    n: usize,
    slot4: Rational,
    rest: Vec<Rational>, // a_{5,3}..a_{n,3}
}

impl Col3 {
    fn from_desc(d: &AlgebraDescriptor, slot4: Rational) -> Self {
        let n = d.n;
        let rest = (5..=n).map(|k| d.param(&key_ak3(k)).clone()).collect();
        Col3 { n, slot4, rest }
    }

    fn at(&self, k: usize) -> Rational {
        if k == 4 {
            self.slot4.clone()
        } else if (5..=self.n).contains(&k) {
            self.rest[k - 5].clone()
        } else {
            Rational::zero()
        }
    }
}

pub(super) fn g1(d: &AlgebraDescriptor) -> StructureTensor {
    let n = d.n;
    let a = d.param(KEY_A).clone();
    let en1 = n + 1;
    let mut t = with_nilradical(en1, n);
    t.add_term(1, en1, 1, q(1));
    t.add_term(1, en1, 3, a.clone() - q(2));
    t.add_term(2, en1, 2, a.clone());
    for i in 3..=n {
        t.add_term(i, en1, i, a.clone() + q(i as i64 - 4));
    }
    t.add_term(en1, 1, 1, q(-1));
    t.add_term(en1, 1, 3, -(a.clone() - q(2)));
    t.add_term(en1, 3, 3, q(1) - a.clone());
    t.add_term(en1, 4, 2, q(1));
    t.add_term(en1, 4, 4, -a.clone());
    for j in 5..=n {
        t.add_term(en1, j, j, q(4 - j as i64) - a.clone());
    }
    t
}

pub(super) fn g2(d: &AlgebraDescriptor) -> StructureTensor {
    let n = d.n;
    let delta = d.param(KEY_DELTA).clone();
    let en1 = n + 1;
    let mut t = with_nilradical(en1, n);
    t.add_term(1, en1, 1, q(1));
    t.add_term(1, en1, 3, q(-2));
    t.add_term(1, en1, 5, delta.clone());
    for i in 3..=n {
        t.add_term(i, en1, i, q(i as i64 - 4));
    }
    t.add_term(en1, 1, 1, q(-1));
    t.add_term(en1, 1, 3, q(2));
    t.add_term(en1, 1, 5, -delta);
    t.add_term(en1, 3, 3, q(1));
    t.add_term(en1, 4, 2, q(1));
    for j in 5..=n {
        t.add_term(en1, j, j, q(4 - j as i64));
    }
    t
}

pub(super) fn g3(d: &AlgebraDescriptor) -> StructureTensor {
    let n = d.n;
    let ni = n as i64;
    let delta = d.param(KEY_DELTA).clone();
    let en1 = n + 1;
    let mut t = with_nilradical(en1, n);
    t.add_term(1, en1, 1, q(1));
    t.add_term(1, en1, 3, q(2 - ni));
    t.add_term(2, en1, 2, q(4 - ni));
    for i in 3..n {
        t.add_term(i, en1, i, q(i as i64 - ni));
    }
    t.add_term(en1, en1, n, delta);
    t.add_term(en1, 1, 1, q(-1));
    t.add_term(en1, 1, 3, q(ni - 2));
    t.add_term(en1, 3, 3, q(ni - 3));
    t.add_term(en1, 4, 2, q(1));
    t.add_term(en1, 4, 4, q(ni - 4));
    for j in 5..n {
        t.add_term(en1, j, j, q(ni - j as i64));
    }
    t
}

pub(super) fn g4(d: &AlgebraDescriptor) -> StructureTensor {
    let n = d.n;
    let eps = d.param(KEY_EPSILON).clone();
    let bs: Vec<Rational> = (1..=n.saturating_sub(5))
        .map(|j| d.param(&key_bj(j)).clone())
        .collect();
    let en1 = n + 1;
    let mut t = with_nilradical(en1, n);
    t.add_term(1, en1, 3, q(1));
    t.add_term(2, en1, 2, q(1));
    for i in 3..=n {
        t.add_term(i, en1, i, q(1));
        if i + 2 <= n {
            t.add_term(i, en1, i + 2, eps.clone());
        }
        for k in i + 3..=n {
            t.add_term(i, en1, k, bs[k - i - 3].clone());
        }
    }
    t.add_term(en1, 1, 3, q(-1));
    for i in 3..=n {
        t.add_term(en1, i, i, q(-1));
        if i + 2 <= n {
            t.add_term(en1, i, i + 2, -eps.clone());
        }
        for k in i + 3..=n {
            t.add_term(en1, i, k, -bs[k - i - 3].clone());
        }
    }
    t
}

pub(super) fn gc2(n: usize) -> StructureTensor {
    let (en1, en2) = (n + 1, n + 2);
    let mut t = with_nilradical(n + 2, n);
    t.add_term(1, en1, 1, q(1));
    t.add_term(1, en1, 3, q(-2));
    for i in 3..=n {
        t.add_term(i, en1, i, q(i as i64 - 4));
    }
    t.add_term(en1, 1, 1, q(-1));
    t.add_term(en1, 1, 3, q(2));
    t.add_term(en1, 3, 3, q(1));
    t.add_term(en1, 4, 2, q(1));
    for j in 5..=n {
        t.add_term(en1, j, j, q(4 - j as i64));
    }
    t.add_term(1, en2, 1, q(1));
    t.add_term(1, en2, 3, q(-1));
    t.add_term(2, en2, 2, q(1));
    for i in 3..=n {
        t.add_term(i, en2, i, q(i as i64 - 3));
    }
    t.add_term(en2, 1, 1, q(-1));
    t.add_term(en2, 1, 3, q(1));
    t.add_term(en2, 4, 2, q(1));
    t.add_term(en2, 4, 4, q(-1));
    for j in 5..=n {
        t.add_term(en2, j, j, q(3 - j as i64));
    }
    t
}

/// Derived coefficients of the generic right case:
/// `A_{4,3} = -(b/a) a_{2,3} + ((a-b) b_{2,1} + a (a_{2,1} + a_{4,1})) / (2a - b)`
/// and `B_{2,3}` with the same second summand.
pub(super) fn case1_derived(d: &AlgebraDescriptor) -> (Rational, Rational) {
    let a = d.param(KEY_A);
    let b = d.param(KEY_B);
    let shared = ((a - b) * d.param(KEY_B21)
        + a.clone() * (d.param(KEY_A21) + d.param(&key_ak1(4))))
        / (a * &q(2) - b.clone());
    let a43 = -(b / a) * d.param(KEY_A23).clone() + shared.clone();
    let b23 = -d.param(KEY_A23).clone() + shared;
    (a43, b23)
}

pub(super) fn rthm1_case1(d: &AlgebraDescriptor) -> StructureTensor {
    let n = d.n;
    let en1 = n + 1;
    let a = d.param(KEY_A).clone();
    let b = d.param(KEY_B).clone();
    let (a43, b23_derived) = case1_derived(d);
    let col = Col3::from_desc(d, a43);
    let mut t = with_nilradical(en1, n);
    t.add_term(1, en1, 1, a.clone());
    t.add_term(1, en1, 2, d.param(KEY_A21).clone());
    t.add_term(1, en1, 3, -(a.clone() * q(2) - b.clone()));
    for k in 4..=n {
        t.add_term(1, en1, k, d.param(&key_ak1(k)).clone());
    }
    t.add_term(2, en1, 2, b.clone());
    t.add_term(3, en1, 2, d.param(KEY_A23).clone());
    t.add_term(3, en1, 3, -(a.clone() - b.clone()));
    for k in 4..=n {
        t.add_term(3, en1, k, col.at(k));
    }
    for i in 4..=n {
        t.add_term(i, en1, i, a.clone() * q(i as i64 - 4) + b.clone());
        for k in i + 1..=n {
            t.add_term(i, en1, k, col.at(k - i + 3));
        }
    }
    t.add_term(en1, en1, 2, d.param(KEY_A2N1).clone());
    t.add_term(en1, 1, 1, -a.clone());
    t.add_term(en1, 1, 2, d.param(KEY_B21).clone());
    t.add_term(en1, 1, 3, a.clone() * q(2) - b.clone());
    for k in 4..=n {
        t.add_term(en1, 1, k, -d.param(&key_ak1(k)).clone());
    }
    t.add_term(en1, 3, 2, b23_derived);
    t.add_term(en1, 3, 3, a.clone() - b.clone());
    for k in 4..=n {
        t.add_term(en1, 3, k, -col.at(k));
    }
    t.add_term(en1, 4, 2, a.clone());
    t.add_term(en1, 4, 4, -b.clone());
    for k in 5..=n {
        t.add_term(en1, 4, k, -col.at(k - 1));
    }
    for j in 5..=n {
        t.add_term(en1, j, j, a.clone() * q(4 - j as i64) - b.clone());
        for k in j + 1..=n {
            t.add_term(en1, j, k, -col.at(k - j + 3));
        }
    }
    t
}

pub(super) fn case2_derived(d: &AlgebraDescriptor) -> (Rational, Rational) {
    let n = d.n as i64;
    let shared = (q(n - 3) * d.param(KEY_B21).clone()
        + d.param(KEY_A21).clone()
        + d.param(&key_ak1(4)).clone())
        / q(n - 2);
    let a43 = q(n - 4) * d.param(KEY_A23).clone() + shared.clone();
    let b23 = -d.param(KEY_A23).clone() + shared;
    (a43, b23)
}

pub(super) fn rthm1_case2(d: &AlgebraDescriptor) -> StructureTensor {
    let n = d.n;
    let ni = n as i64;
    let en1 = n + 1;
    let a = d.param(KEY_A).clone();
    let (a43, b23_derived) = case2_derived(d);
    let col = Col3::from_desc(d, a43);
    let mut t = with_nilradical(en1, n);
    t.add_term(1, en1, 1, a.clone());
    t.add_term(1, en1, 2, d.param(KEY_A21).clone());
    t.add_term(1, en1, 3, a.clone() * q(2 - ni));
    for k in 4..=n {
        t.add_term(1, en1, k, d.param(&key_ak1(k)).clone());
    }
    t.add_term(2, en1, 2, a.clone() * q(4 - ni));
    t.add_term(3, en1, 2, d.param(KEY_A23).clone());
    t.add_term(3, en1, 3, a.clone() * q(3 - ni));
    for k in 4..=n {
        t.add_term(3, en1, k, col.at(k));
    }
    for i in 4..n {
        t.add_term(i, en1, i, a.clone() * q(i as i64 - ni));
        for k in i + 1..=n {
            t.add_term(i, en1, k, col.at(k - i + 3));
        }
    }
    t.add_term(en1, en1, 2, d.param(KEY_A2N1).clone());
    t.add_term(en1, en1, n, d.param(KEY_ANN1).clone());
    t.add_term(en1, 1, 1, -a.clone());
    t.add_term(en1, 1, 2, d.param(KEY_B21).clone());
    t.add_term(en1, 1, 3, a.clone() * q(ni - 2));
    for k in 4..=n {
        t.add_term(en1, 1, k, -d.param(&key_ak1(k)).clone());
    }
    t.add_term(en1, 3, 2, b23_derived);
    t.add_term(en1, 3, 3, a.clone() * q(ni - 3));
    for k in 4..=n {
        t.add_term(en1, 3, k, -col.at(k));
    }
    t.add_term(en1, 4, 2, a.clone());
    t.add_term(en1, 4, 4, a.clone() * q(ni - 4));
    for k in 5..=n {
        t.add_term(en1, 4, k, -col.at(k - 1));
    }
    for j in 5..n {
        t.add_term(en1, j, j, a.clone() * q(ni - j as i64));
        for k in j + 1..=n {
            t.add_term(en1, j, k, -col.at(k - j + 3));
        }
    }
    t
}

pub(super) fn rthm1_case3(d: &AlgebraDescriptor) -> StructureTensor {
    let n = d.n;
    let en1 = n + 1;
    let b = d.param(KEY_B).clone();
    // a_{4,3} is a free parameter here.
    let col = Col3::from_desc(d, d.param(&key_ak3(4)).clone());
    let mut t = with_nilradical(en1, n);
    t.add_term(1, en1, 2, d.param(KEY_A21).clone());
    t.add_term(1, en1, 3, b.clone());
    for k in 4..=n {
        t.add_term(1, en1, k, d.param(&key_ak1(k)).clone());
    }
    t.add_term(2, en1, 2, b.clone());
    for i in 3..=n {
        t.add_term(i, en1, i, b.clone());
        for k in i + 1..=n {
            t.add_term(i, en1, k, col.at(k - i + 3));
        }
    }
    t.add_term(en1, en1, 2, d.param(KEY_A2N1).clone());
    t.add_term(en1, 1, 2, d.param(KEY_B21).clone());
    t.add_term(en1, 1, 3, -b.clone());
    for k in 4..=n {
        t.add_term(en1, 1, k, -d.param(&key_ak1(k)).clone());
    }
    t.add_term(en1, 3, 2, d.param(KEY_B21).clone());
    t.add_term(en1, 3, 3, -b.clone());
    for k in 4..=n {
        t.add_term(en1, 3, k, -col.at(k));
    }
    for j in 4..=n {
        t.add_term(en1, j, j, -b.clone());
        for k in j + 1..=n {
            t.add_term(en1, j, k, -col.at(k - j + 3));
        }
    }
    t
}

pub(super) fn rthm1_case4(d: &AlgebraDescriptor) -> StructureTensor {
    let n = d.n;
    let en1 = n + 1;
    let a = d.param(KEY_A).clone();
    let a43 = d.param(KEY_B23).clone() - d.param(KEY_A23).clone();
    let col = Col3::from_desc(d, a43);
    let mut t = with_nilradical(en1, n);
    t.add_term(1, en1, 1, a.clone());
    t.add_term(1, en1, 2, d.param(KEY_A21).clone());
    for k in 4..=n {
        t.add_term(1, en1, k, d.param(&key_ak1(k)).clone());
    }
    t.add_term(2, en1, 2, a.clone() * q(2));
    t.add_term(3, en1, 2, d.param(KEY_A23).clone());
    t.add_term(3, en1, 3, a.clone());
    for k in 4..=n {
        t.add_term(3, en1, k, col.at(k));
    }
    for i in 4..=n {
        t.add_term(i, en1, i, a.clone() * q(i as i64 - 2));
        for k in i + 1..=n {
            t.add_term(i, en1, k, col.at(k - i + 3));
        }
    }
    t.add_term(en1, en1, 2, d.param(KEY_A2N1).clone());
    t.add_term(en1, 1, 1, -a.clone());
    t.add_term(en1, 1, 2, d.param(KEY_A21).clone() + d.param(&key_ak1(4)).clone());
    for k in 4..=n {
        t.add_term(en1, 1, k, -d.param(&key_ak1(k)).clone());
    }
    t.add_term(en1, 3, 2, d.param(KEY_B23).clone());
    t.add_term(en1, 3, 3, -a.clone());
    for k in 4..=n {
        t.add_term(en1, 3, k, -col.at(k));
    }
    t.add_term(en1, 4, 2, a.clone());
    t.add_term(en1, 4, 4, -a.clone() * q(2));
    for k in 5..=n {
        t.add_term(en1, 4, k, -col.at(k - 1));
    }
    for j in 5..=n {
        t.add_term(en1, j, j, a.clone() * q(2 - j as i64));
        for k in j + 1..=n {
            t.add_term(en1, j, k, -col.at(k - j + 3));
        }
    }
    t
}

/// Post-absorption variant of case (1): the `a_{k,1}` column and the
/// derived subdiagonal are gone; only `a_{4,1}` survives inside the
/// combination in front of `e_2`.
pub(super) fn rthm2_case1(d: &AlgebraDescriptor) -> StructureTensor {
    let n = d.n;
    let en1 = n + 1;
    let a = d.param(KEY_A).clone();
    let b = d.param(KEY_B).clone();
    let (a43, _) = case1_derived(d);
    let col = Col3::from_desc(d, Rational::zero());
    let mut t = with_nilradical(en1, n);
    t.add_term(1, en1, 1, a.clone());
    t.add_term(
        1,
        en1,
        2,
        d.param(KEY_A21).clone() + d.param(&key_ak1(4)).clone() - a43.clone(),
    );
    t.add_term(1, en1, 3, -(a.clone() * q(2) - b.clone()));
    t.add_term(2, en1, 2, b.clone());
    t.add_term(3, en1, 2, d.param(KEY_A23).clone());
    t.add_term(3, en1, 3, -(a.clone() - b.clone()));
    for k in 5..=n {
        t.add_term(3, en1, k, col.at(k));
    }
    for i in 4..=n {
        t.add_term(i, en1, i, a.clone() * q(i as i64 - 4) + b.clone());
        for k in i + 2..=n {
            t.add_term(i, en1, k, col.at(k - i + 3));
        }
    }
    t.add_term(en1, en1, 2, d.param(KEY_A2N1).clone());
    t.add_term(en1, 1, 1, -a.clone());
    t.add_term(en1, 1, 2, d.param(KEY_B21).clone() - a43);
    t.add_term(en1, 1, 3, a.clone() * q(2) - b.clone());
    t.add_term(en1, 3, 2, (b.clone() - a.clone()) * d.param(KEY_A23).clone() / a.clone());
    t.add_term(en1, 3, 3, a.clone() - b.clone());
    for k in 5..=n {
        t.add_term(en1, 3, k, -col.at(k));
    }
    t.add_term(en1, 4, 2, a.clone());
    t.add_term(en1, 4, 4, -b.clone());
    for k in 6..=n {
        t.add_term(en1, 4, k, -col.at(k - 1));
    }
    for j in 5..=n {
        t.add_term(en1, j, j, a.clone() * q(4 - j as i64) - b.clone());
        for k in j + 2..=n {
            t.add_term(en1, j, k, -col.at(k - j + 3));
        }
    }
    t
}

pub(super) fn rthm2_case2(d: &AlgebraDescriptor) -> StructureTensor {
    let n = d.n;
    let ni = n as i64;
    let en1 = n + 1;
    let a = d.param(KEY_A).clone();
    let (a43, _) = case2_derived(d);
    let col = Col3::from_desc(d, Rational::zero());
    let mut t = with_nilradical(en1, n);
    t.add_term(1, en1, 1, a.clone());
    t.add_term(
        1,
        en1,
        2,
        d.param(KEY_A21).clone() + d.param(&key_ak1(4)).clone() - a43.clone(),
    );
    t.add_term(1, en1, 3, a.clone() * q(2 - ni));
    t.add_term(2, en1, 2, a.clone() * q(4 - ni));
    t.add_term(3, en1, 2, d.param(KEY_A23).clone());
    t.add_term(3, en1, 3, a.clone() * q(3 - ni));
    for k in 5..=n {
        t.add_term(3, en1, k, col.at(k));
    }
    for i in 4..n {
        t.add_term(i, en1, i, a.clone() * q(i as i64 - ni));
        for k in i + 2..=n {
            t.add_term(i, en1, k, col.at(k - i + 3));
        }
    }
    t.add_term(en1, en1, n, d.param(KEY_ANN1).clone());
    t.add_term(en1, 1, 1, -a.clone());
    t.add_term(en1, 1, 2, d.param(KEY_B21).clone() - a43);
    t.add_term(en1, 1, 3, a.clone() * q(ni - 2));
    t.add_term(en1, 3, 2, q(3 - ni) * d.param(KEY_A23).clone());
    t.add_term(en1, 3, 3, a.clone() * q(ni - 3));
    for k in 5..=n {
        t.add_term(en1, 3, k, -col.at(k));
    }
    t.add_term(en1, 4, 2, a.clone());
    t.add_term(en1, 4, 4, a.clone() * q(ni - 4));
    for k in 6..=n {
        t.add_term(en1, 4, k, -col.at(k - 1));
    }
    for j in 5..n {
        t.add_term(en1, j, j, a.clone() * q(ni - j as i64));
        for k in j + 2..=n {
            t.add_term(en1, j, k, -col.at(k - j + 3));
        }
    }
    t
}

pub(super) fn rthm2_case3(d: &AlgebraDescriptor) -> StructureTensor {
    let n = d.n;
    let en1 = n + 1;
    let b = d.param(KEY_B).clone();
    let col = Col3::from_desc(d, Rational::zero());
    let mut t = with_nilradical(en1, n);
    t.add_term(1, en1, 2, d.param(KEY_A21).clone());
    t.add_term(1, en1, 3, b.clone());
    t.add_term(2, en1, 2, b.clone());
    for i in 3..=n {
        t.add_term(i, en1, i, b.clone());
        for k in i + 2..=n {
            t.add_term(i, en1, k, col.at(k - i + 3));
        }
    }
    t.add_term(en1, 1, 2, d.param(KEY_B21).clone());
    t.add_term(en1, 1, 3, -b.clone());
    t.add_term(en1, 3, 2, d.param(KEY_B21).clone());
    t.add_term(en1, 3, 3, -b.clone());
    for k in 5..=n {
        t.add_term(en1, 3, k, -col.at(k));
    }
    for j in 4..=n {
        t.add_term(en1, j, j, -b.clone());
        for k in j + 2..=n {
            t.add_term(en1, j, k, -col.at(k - j + 3));
        }
    }
    t
}

pub(super) fn rthm2_case4(d: &AlgebraDescriptor) -> StructureTensor {
    let n = d.n;
    let en1 = n + 1;
    let a = d.param(KEY_A).clone();
    let col = Col3::from_desc(d, Rational::zero());
    let mut t = with_nilradical(en1, n);
    t.add_term(1, en1, 1, a.clone());
    t.add_term(1, en1, 2, d.param(KEY_A21).clone());
    t.add_term(2, en1, 2, a.clone() * q(2));
    t.add_term(3, en1, 2, d.param(KEY_A23).clone());
    t.add_term(3, en1, 3, a.clone());
    for k in 5..=n {
        t.add_term(3, en1, k, col.at(k));
    }
    for i in 4..=n {
        t.add_term(i, en1, i, a.clone() * q(i as i64 - 2));
        for k in i + 2..=n {
            t.add_term(i, en1, k, col.at(k - i + 3));
        }
    }
    t.add_term(en1, 1, 1, -a.clone());
    t.add_term(en1, 1, 2, d.param(KEY_A21).clone());
    t.add_term(en1, 3, 2, d.param(KEY_A23).clone());
    t.add_term(en1, 3, 3, -a.clone());
    for k in 5..=n {
        t.add_term(en1, 3, k, -col.at(k));
    }
    t.add_term(en1, 4, 2, a.clone());
    t.add_term(en1, 4, 4, -a.clone() * q(2));
    for k in 6..=n {
        t.add_term(en1, 4, k, -col.at(k - 1));
    }
    for j in 5..=n {
        t.add_term(en1, j, j, a.clone() * q(2 - j as i64));
        for k in j + 2..=n {
            t.add_term(en1, j, k, -col.at(k - j + 3));
        }
    }
    t
}
