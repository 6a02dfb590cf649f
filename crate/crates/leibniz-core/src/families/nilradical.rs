//! The nilpotent quasi-filiform family serving as the nilradical of every
//! extension in the catalog.

use crate::rational::Rational;
use crate::tensor::StructureTensor;

/// Nonzero brackets, `n >= 4`:
/// `[e1,e1] = e2`, `[ei,e1] = e_{i+1}` (3 <= i <= n-1),
/// `[e1,e3] = e2 - e4`, `[e1,ej] = -e_{j+1}` (4 <= j <= n-1).
pub fn l2(n: usize) -> StructureTensor {
    assert!(n >= 4, "the family is defined for n >= 4");
    let mut t = StructureTensor::abelian(n);
    let one = Rational::one();
    t.add_term(1, 1, 2, one.clone());
    for i in 3..n {
        t.add_term(i, 1, i + 1, one.clone());
    }
    t.add_term(1, 3, 2, one.clone());
    t.add_term(1, 3, 4, -one.clone());
    for j in 4..n {
        t.add_term(1, j, j + 1, -one.clone());
    }
    t
}

/// Installs the nilradical brackets into a larger tensor (`total >= n`).
pub(super) fn with_nilradical(total: usize, n: usize) -> StructureTensor {
    assert!(total >= n);
    let mut t = StructureTensor::abelian(total);
    let one = Rational::one();
    t.add_term(1, 1, 2, one.clone());
    for i in 3..n {
        t.add_term(i, 1, i + 1, one.clone());
    }
    t.add_term(1, 3, 2, one.clone());
    t.add_term(1, 3, 4, -one.clone());
    for j in 4..n {
        t.add_term(1, j, j + 1, -one.clone());
    }
    t
}
