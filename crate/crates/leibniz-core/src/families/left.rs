//! Left solvable extensions: mirror catalog of the right side, with its own
//! derived coefficients (`A_{4,1}` appears here in the generic cases).

use super::nilradical::with_nilradical;
use super::{key_ak1, key_ak3, key_bj, AlgebraDescriptor};
use super::{KEY_A, KEY_A21, KEY_A23, KEY_A2N1, KEY_ANN1, KEY_B, KEY_B21, KEY_B23, KEY_DELTA, KEY_EPSILON};
use crate::rational::Rational;
use crate::tensor::StructureTensor;

fn q(v: i64) -> Rational {
    Rational::from_int(v)
}

struct Col {
    n: usize,
    from: usize,
    slot4: Rational,
    rest: Vec<Rational>,
}

impl Col {
    /// `a_{*,3}` column with slot-4 entry `slot4`; free entries are
    /// `a_{from,3}..a_{n,3}` read from the descriptor (from is 4 or 5).
    fn ak3(d: &AlgebraDescriptor, slot4_or_free: Option<Rational>) -> Self {
        let n = d.n;
        match slot4_or_free {
            Some(slot4) => Col {
                n,
                from: 5,
                slot4,
                rest: (5..=n).map(|k| d.param(&key_ak3(k)).clone()).collect(),
            },
            None => Col {
                n,
                from: 4,
                slot4: d.param(&key_ak3(4)).clone(),
                rest: (5..=n).map(|k| d.param(&key_ak3(k)).clone()).collect(),
            },
        }
    }

    /// `a_{*,1}` column with derived slot-4 entry.
    fn ak1(d: &AlgebraDescriptor, slot4: Rational) -> Self {
        let n = d.n;
        Col {
            n,
            from: 5,
            slot4,
            rest: (5..=n).map(|k| d.param(&key_ak1(k)).clone()).collect(),
        }
    }

    fn at(&self, k: usize) -> Rational {
        if k == 4 {
            self.slot4.clone()
        } else if (5..=self.n).contains(&k) {
            self.rest[k - 5].clone()
        } else {
            debug_assert!(k < self.from || k > self.n);
            Rational::zero()
        }
    }
}

pub(super) fn ll1(d: &AlgebraDescriptor) -> StructureTensor {
    let n = d.n;
    let a = d.param(KEY_A).clone();
    let en1 = n + 1;
    let mut t = with_nilradical(en1, n);
    t.add_term(1, en1, 1, q(1));
    t.add_term(1, en1, 3, a.clone() - q(2));
    t.add_term(3, en1, 3, a.clone() - q(1));
    t.add_term(4, en1, 2, q(1) - a.clone());
    t.add_term(4, en1, 4, a.clone());
    for j in 5..=n {
        t.add_term(j, en1, j, a.clone() + q(j as i64 - 4));
    }
    t.add_term(en1, 1, 1, q(-1));
    t.add_term(en1, 1, 3, q(2) - a.clone());
    t.add_term(en1, 2, 2, -a.clone());
    for i in 3..=n {
        t.add_term(en1, i, i, q(4 - i as i64) - a.clone());
    }
    t
}

pub(super) fn ll2(d: &AlgebraDescriptor) -> StructureTensor {
    let n = d.n;
    let delta = d.param(KEY_DELTA).clone();
    let en1 = n + 1;
    let mut t = with_nilradical(en1, n);
    t.add_term(1, en1, 1, q(1));
    t.add_term(1, en1, 3, q(-2));
    t.add_term(1, en1, 5, delta.clone());
    t.add_term(3, en1, 3, q(-1));
    t.add_term(4, en1, 2, q(1));
    for j in 5..=n {
        t.add_term(j, en1, j, q(j as i64 - 4));
    }
    t.add_term(en1, 1, 1, q(-1));
    t.add_term(en1, 1, 3, q(2));
    t.add_term(en1, 1, 5, -delta);
    for i in 3..=n {
        t.add_term(en1, i, i, q(4 - i as i64));
    }
    t
}

pub(super) fn ll3(d: &AlgebraDescriptor) -> StructureTensor {
    let n = d.n;
    let ni = n as i64;
    let delta = d.param(KEY_DELTA).clone();
    let en1 = n + 1;
    let mut t = with_nilradical(en1, n);
    t.add_term(1, en1, 1, q(1));
    t.add_term(1, en1, 3, q(2 - ni));
    t.add_term(3, en1, 3, q(3 - ni));
    t.add_term(4, en1, 2, q(ni - 3));
    t.add_term(4, en1, 4, q(4 - ni));
    for j in 5..n {
        t.add_term(j, en1, j, q(j as i64 - ni));
    }
    t.add_term(en1, en1, n, delta);
    t.add_term(en1, 1, 1, q(-1));
    t.add_term(en1, 1, 3, q(ni - 2));
    t.add_term(en1, 2, 2, q(ni - 4));
    for i in 3..n {
        t.add_term(en1, i, i, q(ni - i as i64));
    }
    t
}

pub(super) fn ll4(d: &AlgebraDescriptor) -> StructureTensor {
    let n = d.n;
    let eps = d.param(KEY_EPSILON).clone();
    let bs: Vec<Rational> = (1..=n.saturating_sub(5))
        .map(|j| d.param(&key_bj(j)).clone())
        .collect();
    let en1 = n + 1;
    let mut t = with_nilradical(en1, n);
    t.add_term(1, en1, 3, q(1));
    t.add_term(4, en1, 2, q(-1));
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
    t.add_term(en1, 2, 2, q(-1));
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

pub(super) fn lc2(n: usize) -> StructureTensor {
    let (en1, en2) = (n + 1, n + 2);
    let mut t = with_nilradical(n + 2, n);
    t.add_term(1, en1, 1, q(1));
    t.add_term(1, en1, 3, q(-2));
    t.add_term(3, en1, 3, q(-1));
    t.add_term(4, en1, 2, q(1));
    for i in 5..=n {
        t.add_term(i, en1, i, q(i as i64 - 4));
    }
    t.add_term(en1, 1, 1, q(-1));
    t.add_term(en1, 1, 3, q(2));
    for j in 3..=n {
        t.add_term(en1, j, j, q(4 - j as i64));
    }
    t.add_term(1, en2, 1, q(1));
    t.add_term(3, en2, 3, q(1));
    t.add_term(4, en2, 2, q(-1));
    t.add_term(4, en2, 4, q(2));
    for i in 5..=n {
        t.add_term(i, en2, i, q(i as i64 - 2));
    }
    t.add_term(en2, 1, 1, q(-1));
    t.add_term(en2, 2, 2, q(-2));
    for j in 3..=n {
        t.add_term(en2, j, j, q(2 - j as i64));
    }
    t
}

/// `A_{4,3} = b_{2,3} + a a_{2,3} / (a - b)`,
/// `A_{4,1} = -a_{2,1} + ((2a - b)(a_{2,3} + b_{2,3}) - a b_{2,1}) / (a - b)`.
pub(super) fn lcase1_derived(d: &AlgebraDescriptor) -> (Rational, Rational) {
    let a = d.param(KEY_A);
    let b = d.param(KEY_B);
    let amb = a - b;
    let a43 = d.param(KEY_B23).clone() + a.clone() * d.param(KEY_A23).clone() / amb.clone();
    let a41 = -d.param(KEY_A21).clone()
        + ((a * &q(2) - b.clone()) * (d.param(KEY_A23) + d.param(KEY_B23))
            - a.clone() * d.param(KEY_B21).clone())
            / amb;
    (a43, a41)
}

pub(super) fn lthm1_case1(d: &AlgebraDescriptor) -> StructureTensor {
    let n = d.n;
    let en1 = n + 1;
    let a = d.param(KEY_A).clone();
    let b = d.param(KEY_B).clone();
    let (a43, a41) = lcase1_derived(d);
    let c3 = Col::ak3(d, Some(a43));
    let c1 = Col::ak1(d, a41);
    let mut t = with_nilradical(en1, n);
    t.add_term(1, en1, 1, a.clone());
    t.add_term(1, en1, 2, d.param(KEY_A21).clone());
    t.add_term(1, en1, 3, -(a.clone() * q(2) - b.clone()));
    for k in 4..=n {
        t.add_term(1, en1, k, c1.at(k));
    }
    t.add_term(3, en1, 2, d.param(KEY_A23).clone());
    t.add_term(3, en1, 3, -(a.clone() - b.clone()));
    for k in 4..=n {
        t.add_term(3, en1, k, c3.at(k));
    }
    t.add_term(4, en1, 2, a.clone() - b.clone());
    t.add_term(4, en1, 4, b.clone());
    for k in 5..=n {
        t.add_term(4, en1, k, c3.at(k - 1));
    }
    for j in 5..=n {
        t.add_term(j, en1, j, a.clone() * q(j as i64 - 4) + b.clone());
        for k in j + 1..=n {
            t.add_term(j, en1, k, c3.at(k - j + 3));
        }
    }
    t.add_term(en1, en1, 2, d.param(KEY_A2N1).clone());
    t.add_term(en1, 1, 1, -a.clone());
    t.add_term(en1, 1, 2, d.param(KEY_B21).clone());
    t.add_term(en1, 1, 3, a.clone() * q(2) - b.clone());
    for k in 4..=n {
        t.add_term(en1, 1, k, -c1.at(k));
    }
    t.add_term(en1, 2, 2, -b.clone());
    t.add_term(en1, 3, 2, d.param(KEY_B23).clone());
    t.add_term(en1, 3, 3, a.clone() - b.clone());
    for k in 4..=n {
        t.add_term(en1, 3, k, -c3.at(k));
    }
    for i in 4..=n {
        t.add_term(en1, i, i, a.clone() * q(4 - i as i64) - b.clone());
        for k in i + 1..=n {
            t.add_term(en1, i, k, -c3.at(k - i + 3));
        }
    }
    t
}

pub(super) fn lcase2_derived(d: &AlgebraDescriptor) -> (Rational, Rational) {
    let n = d.n as i64;
    let a43 = d.param(KEY_B23).clone() + d.param(KEY_A23).clone() / q(n - 3);
    let a41 = -d.param(KEY_A21).clone()
        + (q(n - 2) * (d.param(KEY_A23) + d.param(KEY_B23)) - d.param(KEY_B21).clone()) / q(n - 3);
    (a43, a41)
}

pub(super) fn lthm1_case2(d: &AlgebraDescriptor) -> StructureTensor {
    let n = d.n;
    let ni = n as i64;
    let en1 = n + 1;
    let a = d.param(KEY_A).clone();
    let (a43, a41) = lcase2_derived(d);
    let c3 = Col::ak3(d, Some(a43));
    let c1 = Col::ak1(d, a41);
    let mut t = with_nilradical(en1, n);
    t.add_term(1, en1, 1, a.clone());
    t.add_term(1, en1, 2, d.param(KEY_A21).clone());
    t.add_term(1, en1, 3, a.clone() * q(2 - ni));
    for k in 4..=n {
        t.add_term(1, en1, k, c1.at(k));
    }
    t.add_term(3, en1, 2, d.param(KEY_A23).clone());
    t.add_term(3, en1, 3, a.clone() * q(3 - ni));
    for k in 4..=n {
        t.add_term(3, en1, k, c3.at(k));
    }
    t.add_term(4, en1, 2, a.clone() * q(ni - 3));
    t.add_term(4, en1, 4, a.clone() * q(4 - ni));
    for k in 5..=n {
        t.add_term(4, en1, k, c3.at(k - 1));
    }
    for j in 5..=n {
        t.add_term(j, en1, j, a.clone() * q(j as i64 - ni));
        for k in j + 1..=n {
            t.add_term(j, en1, k, c3.at(k - j + 3));
        }
    }
    t.add_term(en1, en1, 2, d.param(KEY_A2N1).clone());
    t.add_term(en1, en1, n, d.param(KEY_ANN1).clone());
    t.add_term(en1, 1, 1, -a.clone());
    t.add_term(en1, 1, 2, d.param(KEY_B21).clone());
    t.add_term(en1, 1, 3, a.clone() * q(ni - 2));
    for k in 4..=n {
        t.add_term(en1, 1, k, -c1.at(k));
    }
    t.add_term(en1, 2, 2, a.clone() * q(ni - 4));
    t.add_term(en1, 3, 2, d.param(KEY_B23).clone());
    t.add_term(en1, 3, 3, a.clone() * q(ni - 3));
    for k in 4..=n {
        t.add_term(en1, 3, k, -c3.at(k));
    }
    for i in 4..=n {
        t.add_term(en1, i, i, a.clone() * q(ni - i as i64));
        for k in i + 1..=n {
            t.add_term(en1, i, k, -c3.at(k - i + 3));
        }
    }
    t
}

pub(super) fn lthm1_case3(d: &AlgebraDescriptor) -> StructureTensor {
    let n = d.n;
    let en1 = n + 1;
    let b = d.param(KEY_B).clone();
    let a41 = -d.param(KEY_A21).clone() + d.param(&key_ak3(4)).clone() + d.param(KEY_A23).clone();
    let c3 = Col::ak3(d, None); // a_{4,3} free
    let c1 = Col::ak1(d, a41);
    let mut t = with_nilradical(en1, n);
    t.add_term(1, en1, 2, d.param(KEY_A21).clone());
    t.add_term(1, en1, 3, b.clone());
    for k in 4..=n {
        t.add_term(1, en1, k, c1.at(k));
    }
    t.add_term(3, en1, 2, d.param(KEY_A23).clone());
    t.add_term(3, en1, 3, b.clone());
    for k in 4..=n {
        t.add_term(3, en1, k, c3.at(k));
    }
    t.add_term(4, en1, 2, -b.clone());
    t.add_term(4, en1, 4, b.clone());
    for k in 5..=n {
        t.add_term(4, en1, k, c3.at(k - 1));
    }
    for j in 5..=n {
        t.add_term(j, en1, j, b.clone());
        for k in j + 1..=n {
            t.add_term(j, en1, k, c3.at(k - j + 3));
        }
    }
    t.add_term(en1, en1, 2, d.param(KEY_A2N1).clone());
    t.add_term(en1, 1, 2, d.param(KEY_B21).clone());
    t.add_term(en1, 1, 3, -b.clone());
    for k in 4..=n {
        t.add_term(en1, 1, k, -c1.at(k));
    }
    t.add_term(en1, 2, 2, -b.clone());
    t.add_term(en1, 3, 2, d.param(&key_ak3(4)).clone());
    t.add_term(en1, 3, 3, -b.clone());
    for k in 4..=n {
        t.add_term(en1, 3, k, -c3.at(k));
    }
    for i in 4..=n {
        t.add_term(en1, i, i, -b.clone());
        for k in i + 1..=n {
            t.add_term(en1, i, k, -c3.at(k - i + 3));
        }
    }
    t
}

pub(super) fn lthm1_case4(d: &AlgebraDescriptor) -> StructureTensor {
    let n = d.n;
    let en1 = n + 1;
    let a = d.param(KEY_A).clone();
    let c3 = Col::ak3(d, None); // a_{4,3} free
    let mut t = with_nilradical(en1, n);
    t.add_term(1, en1, 1, a.clone());
    t.add_term(1, en1, 2, d.param(KEY_A21).clone());
    t.add_term(1, en1, 3, -a.clone());
    for k in 4..=n {
        t.add_term(1, en1, k, d.param(&key_ak1(k)).clone());
    }
    for i in 3..=n {
        t.add_term(i, en1, i, a.clone() * q(i as i64 - 3));
        for k in i + 1..=n {
            t.add_term(i, en1, k, c3.at(k - i + 3));
        }
    }
    t.add_term(en1, en1, 2, d.param(KEY_A2N1).clone());
    t.add_term(en1, 1, 1, -a.clone());
    t.add_term(en1, 1, 2, d.param(KEY_B23).clone());
    t.add_term(en1, 1, 3, a.clone());
    for k in 4..=n {
        t.add_term(en1, 1, k, -d.param(&key_ak1(k)).clone());
    }
    t.add_term(en1, 2, 2, -a.clone());
    t.add_term(en1, 3, 2, d.param(KEY_B23).clone());
    for k in 4..=n {
        t.add_term(en1, 3, k, -c3.at(k));
    }
    for j in 4..=n {
        t.add_term(en1, j, j, a.clone() * q(3 - j as i64));
        for k in j + 1..=n {
            t.add_term(en1, j, k, -c3.at(k - j + 3));
        }
    }
    t
}

pub(super) fn lthm2_case1(d: &AlgebraDescriptor) -> StructureTensor {
    let n = d.n;
    let en1 = n + 1;
    let a = d.param(KEY_A).clone();
    let b = d.param(KEY_B).clone();
    let (a43, a41) = lcase1_derived(d);
    let c3 = Col::ak3(d, Some(Rational::zero()));
    let mut t = with_nilradical(en1, n);
    t.add_term(1, en1, 1, a.clone());
    t.add_term(1, en1, 2, d.param(KEY_A21).clone() + a41 - a43.clone());
    t.add_term(1, en1, 3, -(a.clone() * q(2) - b.clone()));
    t.add_term(3, en1, 2, d.param(KEY_A23).clone());
    t.add_term(3, en1, 3, -(a.clone() - b.clone()));
    for k in 5..=n {
        t.add_term(3, en1, k, c3.at(k));
    }
    t.add_term(4, en1, 2, a.clone() - b.clone());
    t.add_term(4, en1, 4, b.clone());
    for k in 6..=n {
        t.add_term(4, en1, k, c3.at(k - 1));
    }
    for j in 5..=n {
        t.add_term(j, en1, j, a.clone() * q(j as i64 - 4) + b.clone());
        for k in j + 2..=n {
            t.add_term(j, en1, k, c3.at(k - j + 3));
        }
    }
    t.add_term(en1, en1, 2, d.param(KEY_A2N1).clone());
    t.add_term(en1, 1, 1, -a.clone());
    t.add_term(en1, 1, 2, d.param(KEY_B21).clone() - a43);
    t.add_term(en1, 1, 3, a.clone() * q(2) - b.clone());
    t.add_term(en1, 2, 2, -b.clone());
    t.add_term(
        en1,
        3,
        2,
        a.clone() * d.param(KEY_A23).clone() / (b.clone() - a.clone()),
    );
    t.add_term(en1, 3, 3, a.clone() - b.clone());
    for k in 5..=n {
        t.add_term(en1, 3, k, -c3.at(k));
    }
    for i in 4..=n {
        t.add_term(en1, i, i, a.clone() * q(4 - i as i64) - b.clone());
        for k in i + 2..=n {
            t.add_term(en1, i, k, -c3.at(k - i + 3));
        }
    }
    t
}

pub(super) fn lthm2_case2(d: &AlgebraDescriptor) -> StructureTensor {
    let n = d.n;
    let ni = n as i64;
    let en1 = n + 1;
    let a = d.param(KEY_A).clone();
    let (a43, a41) = lcase2_derived(d);
    let c3 = Col::ak3(d, Some(Rational::zero()));
    let mut t = with_nilradical(en1, n);
    t.add_term(1, en1, 1, a.clone());
    t.add_term(1, en1, 2, d.param(KEY_A21).clone() + a41 - a43.clone());
    t.add_term(1, en1, 3, a.clone() * q(2 - ni));
    t.add_term(3, en1, 2, d.param(KEY_A23).clone());
    t.add_term(3, en1, 3, a.clone() * q(3 - ni));
    for k in 5..=n {
        t.add_term(3, en1, k, c3.at(k));
    }
    t.add_term(4, en1, 2, a.clone() * q(ni - 3));
    t.add_term(4, en1, 4, a.clone() * q(4 - ni));
    for k in 6..=n {
        t.add_term(4, en1, k, c3.at(k - 1));
    }
    for j in 5..=n {
        t.add_term(j, en1, j, a.clone() * q(j as i64 - ni));
        for k in j + 2..=n {
            t.add_term(j, en1, k, c3.at(k - j + 3));
        }
    }
    t.add_term(en1, en1, n, d.param(KEY_ANN1).clone());
    t.add_term(en1, 1, 1, -a.clone());
    t.add_term(en1, 1, 2, d.param(KEY_B21).clone() - a43);
    t.add_term(en1, 1, 3, a.clone() * q(ni - 2));
    t.add_term(en1, 2, 2, a.clone() * q(ni - 4));
    t.add_term(en1, 3, 2, d.param(KEY_A23).clone() / q(3 - ni));
    t.add_term(en1, 3, 3, a.clone() * q(ni - 3));
    for k in 5..=n {
        t.add_term(en1, 3, k, -c3.at(k));
    }
    for i in 4..=n {
        t.add_term(en1, i, i, a.clone() * q(ni - i as i64));
        for k in i + 2..=n {
            t.add_term(en1, i, k, -c3.at(k - i + 3));
        }
    }
    t
}

pub(super) fn lthm2_case3(d: &AlgebraDescriptor) -> StructureTensor {
    let n = d.n;
    let en1 = n + 1;
    let b = d.param(KEY_B).clone();
    let c3 = Col::ak3(d, Some(Rational::zero()));
    let mut t = with_nilradical(en1, n);
    t.add_term(1, en1, 2, d.param(KEY_A23).clone());
    t.add_term(1, en1, 3, b.clone());
    t.add_term(3, en1, 2, d.param(KEY_A23).clone());
    t.add_term(3, en1, 3, b.clone());
    for k in 5..=n {
        t.add_term(3, en1, k, c3.at(k));
    }
    t.add_term(4, en1, 2, -b.clone());
    t.add_term(4, en1, 4, b.clone());
    for k in 6..=n {
        t.add_term(4, en1, k, c3.at(k - 1));
    }
    for j in 5..=n {
        t.add_term(j, en1, j, b.clone());
        for k in j + 2..=n {
            t.add_term(j, en1, k, c3.at(k - j + 3));
        }
    }
    t.add_term(en1, 1, 2, d.param(KEY_B21).clone());
    t.add_term(en1, 1, 3, -b.clone());
    t.add_term(en1, 2, 2, -b.clone());
    for i in 3..=n {
        t.add_term(en1, i, i, -b.clone());
        for k in i + 2..=n {
            t.add_term(en1, i, k, -c3.at(k - i + 3));
        }
    }
    t
}

pub(super) fn lthm2_case4(d: &AlgebraDescriptor) -> StructureTensor {
    let n = d.n;
    let en1 = n + 1;
    let a = d.param(KEY_A).clone();
    let c3 = Col::ak3(d, Some(Rational::zero()));
    let mut t = with_nilradical(en1, n);
    t.add_term(1, en1, 1, a.clone());
    t.add_term(1, en1, 2, d.param(KEY_A21).clone());
    t.add_term(1, en1, 3, -a.clone());
    for i in 3..=n {
        t.add_term(i, en1, i, a.clone() * q(i as i64 - 3));
        for k in i + 2..=n {
            t.add_term(i, en1, k, c3.at(k - i + 3));
        }
    }
    t.add_term(en1, 1, 1, -a.clone());
    t.add_term(en1, 1, 2, d.param(KEY_B23).clone());
    t.add_term(en1, 1, 3, a.clone());
    t.add_term(en1, 2, 2, -a.clone());
    t.add_term(en1, 3, 2, d.param(KEY_B23).clone());
    for k in 5..=n {
        t.add_term(en1, 3, k, -c3.at(k));
    }
    for j in 4..=n {
        t.add_term(en1, j, j, a.clone() * q(3 - j as i64));
        for k in j + 2..=n {
            t.add_term(en1, j, k, -c3.at(k - j + 3));
        }
    }
    t
}
