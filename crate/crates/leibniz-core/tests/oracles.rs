//! Frozen example values: bracket tables, series lines, centers, closures,
//! and derivation-space dimensions cross-checked against independent dense
//! computations before being pinned here.

use leibniz_core::derivations::{
    derivation_space, inner_derivations, is_nilpotent_map, nil_independent_pair,
};
use leibniz_core::families::pencils::{right_outer_pair, PencilParams};
use leibniz_core::families::{
    build, expected_invariants, l2, sample_params, AlgebraDescriptor, Family, IdentitySide,
};
use leibniz_core::linalg::{LinearMap, Vector};
use leibniz_core::quotients::{ideal_closure, squares_ideal, verify_nilradical_certificate};
use leibniz_core::series::{
    center, derived_series, is_nilpotent, is_quasi_filiform, is_solvable, lower_central_series,
    nil_index, product_space,
};
use leibniz_core::subspace::Subspace;
use leibniz_core::suite::reference;
use leibniz_core::tensor::Side;
use leibniz_core::{Rational, StructureTensor};

fn q(n: i64) -> Rational {
    Rational::from_int(n)
}

fn g1(n: usize, a: i64) -> StructureTensor {
    build(&AlgebraDescriptor::new(Family::G1, n).with_param("a", q(a))).unwrap()
}

#[test]
fn right_mult_e1_matrix_at_n6() {
    // 1 at (2,1) and at (i+1, i) for i = 3..5, zero elsewhere.
    let t = l2(6);
    let m = t.right_mult(&Vector::basis(6, 1)).unwrap();
    let mut expect = LinearMap::zero(6);
    expect.set(2, 1, q(1));
    for i in 3..=5 {
        expect.set(i + 1, i, q(1));
    }
    assert_eq!(m, expect);
    // e2 and e_n are central, so their multiplication operators vanish.
    assert!(t.right_mult(&Vector::basis(6, 2)).unwrap().is_zero());
    assert!(t.right_mult(&Vector::basis(6, 6)).unwrap().is_zero());
}

#[test]
fn inner_right_mults_are_derivations() {
    let t = l2(5);
    for i in 1..=5 {
        let d = t.right_mult(&Vector::basis(5, i)).unwrap();
        assert!(t.is_derivation(&d).unwrap(), "R_e{i}");
    }
    // The identity map is not a derivation: d([e1,e1]) = e2 but the sum
    // side doubles it.
    assert!(!l2(4).is_derivation(&LinearMap::identity(4)).unwrap());
    assert!(l2(4).is_derivation(&LinearMap::zero(4)).unwrap());
}

#[test]
fn product_space_examples() {
    let t = l2(5);
    let full = Subspace::full(5);
    let p = product_space(&t, &full, &full).unwrap();
    assert_eq!(p, Subspace::span_basis(5, &[2, 4, 5]));
    assert_eq!(p.dim(), 3);
    // Central members bracket to zero.
    let central = Subspace::span_basis(5, &[2, 5]);
    assert!(product_space(&t, &central, &full).unwrap().is_zero());
    assert!(product_space(&t, &full, &central).unwrap().is_zero());
}

#[test]
fn series_examples() {
    let ls6 = lower_central_series(&l2(6));
    assert_eq!(ls6.dims, vec![6, 4, 2, 1, 0]);
    assert!(!ls6.stabilized);

    // Stabilizing extension: LS = [n+1, n, n, ...] for generic parameter.
    let ext = g1(5, 2);
    let ls = lower_central_series(&ext);
    assert_eq!(ls.dims, vec![6, 5, 5]);
    assert!(ls.stabilized);

    // g at a = 2, n = 4: not nilpotent but solvable.
    let small = g1(4, 2);
    assert!(!is_nilpotent(&small));
    assert!(is_solvable(&small));
    assert_eq!(derived_series(&small).dims, vec![5, 4, 2, 0]);
}

#[test]
fn degenerate_parameter_collapses_series() {
    // At a = 1 the e3 action vanishes and only e1 - e3 survives in the
    // derived algebra, so the published generic lines do not apply. This
    // value is excluded by the sampler; building it stays legal.
    let t = g1(5, 1);
    assert!(t.check_right_leibniz().is_empty());
    let ls = lower_central_series(&t);
    assert_eq!(ls.dims, vec![6, 4, 4]);
    assert!(ls.stabilized);
    assert_eq!(derived_series(&t).dims, vec![6, 4, 1, 0]);
}

#[test]
fn center_examples() {
    assert_eq!(center(&l2(7)), Subspace::span_basis(7, &[2, 7]));
    // The codimension-two extension has trivial center (dense nullspace
    // oracle agreed before this was frozen).
    let t = build(&AlgebraDescriptor::new(Family::Gc2, 4)).unwrap();
    assert!(center(&t).is_zero());
}

#[test]
fn nil_index_convention() {
    // LS of the n=5 nilradical is [5,3,1,0]; minimal m with L^m = 0 under
    // L^0 = L is 3.
    assert_eq!(nil_index(&l2(5)), Some(3));
    assert_eq!(nil_index(&StructureTensor::abelian(3)), Some(1));
    assert_eq!(nil_index(&g1(4, 2)), None);
}

#[test]
fn quasi_filiform_range() {
    for n in 4..=10 {
        assert!(is_quasi_filiform(&l2(n)).unwrap(), "n={n}");
    }
    // The quotient by <e2> is filiform at its own dimension (one step
    // longer), hence not quasi-filiform.
    let t = l2(6);
    let quot =
        leibniz_core::quotients::quotient_algebra(&t, &Subspace::span_basis(6, &[2])).unwrap();
    assert_eq!(quot.dim(), 5);
    assert_eq!(nil_index(&quot), Some(4));
    assert!(!is_quasi_filiform(&quot).unwrap());
}

#[test]
fn derivation_space_dims_match_dense_reference() {
    // Frozen from an independent dense solve: 6, 8, 10 at n = 4, 5, 6.
    for (n, expect) in [(4usize, 6usize), (5, 8), (6, 10)] {
        let t = l2(n);
        let dim = derivation_space(&t).dim();
        assert_eq!(dim, expect, "n={n}");
        assert_eq!(reference::derivation_space_dim_dense(&t), expect, "n={n}");
        // Every basis member is an actual derivation.
        for d in &derivation_space(&t).basis {
            assert!(t.is_derivation(d).unwrap());
        }
    }
}

#[test]
fn inner_derivations_dimensions() {
    for n in 4..=7 {
        let t = l2(n);
        let right = inner_derivations(&t, Side::Right).unwrap();
        // e2 and e_n act as zero on the right, so the span has dim n - 2.
        assert_eq!(right.dim(), n - 2, "n={n}");
        let left = inner_derivations(&t, Side::Left).unwrap();
        assert_eq!(left.dim(), n - 2, "n={n}");
    }
    // Inner derivations require the matching identity.
    let mut bad = StructureTensor::abelian(1);
    bad.add_term(1, 1, 1, q(1));
    assert!(inner_derivations(&bad, Side::Right).is_err());
}

#[test]
fn inner_derivations_inside_derivation_space() {
    // Span containment in the n^2-dimensional coordinate space.
    for n in [4usize, 5] {
        let t = l2(n);
        let all = derivation_space(&t);
        let flat = |m: &LinearMap| {
            let mut v = Vec::new();
            for r in 1..=n {
                for c in 1..=n {
                    v.push(m.get(r, c).clone());
                }
            }
            Vector::from_coords(v)
        };
        let space = Subspace::from_generators(n * n, all.basis.iter().map(flat));
        for side in [Side::Right, Side::Left] {
            for inner in &inner_derivations(&t, side).unwrap().basis {
                assert!(space.contains_vector(&flat(inner)), "side {side:?} n={n}");
            }
        }
    }
}

#[test]
fn nilpotency_of_operators() {
    let t = l2(5);
    assert!(is_nilpotent_map(&t.right_mult(&Vector::basis(5, 1)).unwrap()));
    // Extension operator restricted to the nilradical has diagonal entries.
    let ext = g1(4, 1);
    let op = ext.right_mult_basis(5).leading_submatrix(4);
    assert!(!is_nilpotent_map(&op));
}

#[test]
fn outer_pair_at_zeroed_parameters() {
    // The documented n = 5 example: a_{2,1} = a_{2,3} = a_{5,3} = 0.
    let p = PencilParams {
        p21: q(0),
        a23: q(0),
        ak3: [(5, q(0))].into_iter().collect(),
    };
    let (r1, r2) = right_outer_pair(5, &p).unwrap();
    assert!(l2(5).is_derivation(&r1).unwrap());
    assert!(l2(5).is_derivation(&r2).unwrap());
    assert!(nil_independent_pair(&r1, &r2).unwrap());
}

#[test]
fn catalog_bracket_spot_checks() {
    // a = 2 kills the e3 component of [e1, e_{n+1}].
    let t = g1(4, 2);
    assert_eq!(
        t.bracket(&Vector::basis(5, 1), &Vector::basis(5, 5)).unwrap(),
        Vector::basis(5, 1)
    );
    let e2_minus_2e4 = Vector::basis(5, 2).sub(&Vector::basis(5, 4).scale(&q(2)));
    assert_eq!(
        t.bracket(&Vector::basis(5, 5), &Vector::basis(5, 4)).unwrap(),
        e2_minus_2e4
    );

    let gc2 = build(&AlgebraDescriptor::new(Family::Gc2, 4)).unwrap();
    let e2_minus_e4 = Vector::basis(6, 2).sub(&Vector::basis(6, 4));
    assert_eq!(
        gc2.bracket(&Vector::basis(6, 6), &Vector::basis(6, 4)).unwrap(),
        e2_minus_e4
    );

    let ll4 = build(
        &AlgebraDescriptor::new(Family::Ll4, 5)
            .with_param("epsilon", q(0)),
    )
    .unwrap();
    let m_e2_plus_e4 = Vector::basis(6, 4).sub(&Vector::basis(6, 2));
    assert_eq!(
        ll4.bracket(&Vector::basis(6, 4), &Vector::basis(6, 6)).unwrap(),
        m_e2_plus_e4
    );
}

#[test]
fn expected_invariants_examples() {
    let l2_6 = expected_invariants(&AlgebraDescriptor::new(Family::L2, 6));
    assert_eq!(l2_6.ds_dims, Some(vec![6, 4, 0]));
    assert_eq!(l2_6.ls_dims, Some(vec![6, 4, 2, 1, 0]));
    assert_eq!(l2_6.side, IdentitySide::Both);
    assert_eq!(l2_6.center_dim, Some(2));

    let g4_6 = expected_invariants(&AlgebraDescriptor::new(Family::G4, 6));
    assert_eq!(g4_6.ds_dims, Some(vec![7, 5, 0]));
    assert_eq!(g4_6.ls_dims, Some(vec![7, 5, 5]));
    assert_eq!(g4_6.ls_stabilized, Some(true));
    assert_eq!(g4_6.side, IdentitySide::RightOnly);

    let lc2_5 = expected_invariants(&AlgebraDescriptor::new(Family::Lc2, 5));
    assert_eq!(lc2_5.ds_dims, Some(vec![7, 5, 3, 0]));
    assert_eq!(lc2_5.ls_dims, Some(vec![7, 5, 5]));
    assert_eq!(lc2_5.side, IdentitySide::LeftOnly);
}

#[test]
fn derived_coefficients_match_hand_computation() {
    // a=1, b=3, a_{2,3}=2, b_{2,1}=1, a_{2,1}=1, a_{4,1}=1:
    // A_{4,3} = -(3/1)*2 + ((1-3)*1 + 1*(1+1))/(2-3) = -6,
    // B_{2,3} = -2 + 0/(-1) = -2.
    let mut d = sample_params(Family::RThm1Case1, 4, 0).unwrap();
    for (k, v) in [
        ("a", 1),
        ("b", 3),
        ("a_{2,3}", 2),
        ("b_{2,1}", 1),
        ("a_{2,1}", 1),
        ("a_{4,1}", 1),
    ] {
        d.params.insert(k.into(), q(v));
    }
    let coeffs = leibniz_core::families::derived_coefficients(&d).unwrap();
    assert_eq!(coeffs.len(), 2);
    assert_eq!(coeffs[0].name, "A_{4,3}");
    assert_eq!(coeffs[0].value, q(-6));
    assert_eq!(coeffs[1].name, "B_{2,3}");
    assert_eq!(coeffs[1].value, q(-2));
    // The built tensor carries them: [e3,e5] has A_{4,3} e4 and [e5,e3]
    // has B_{2,3} e2.
    let t = build(&d).unwrap();
    assert_eq!(t.coeff(3, 5, 4), q(-6));
    assert_eq!(t.coeff(5, 3, 2), q(-2));

    // Left generic case: A_{4,3} = b_{2,3} + a*a_{2,3}/(a-b),
    // A_{4,1} = -a_{2,1} + ((2a-b)(a_{2,3}+b_{2,3}) - a*b_{2,1})/(a-b).
    // a=2, b=1, a_{2,3}=3, b_{2,3}=1, a_{2,1}=0, b_{2,1}=2:
    // A_{4,3} = 1 + 6/1 = 7; A_{4,1} = 0 + (3*4 - 4)/1 = 8.
    let mut d = sample_params(Family::LThm1Case1, 4, 0).unwrap();
    for (k, v) in [
        ("a", 2),
        ("b", 1),
        ("a_{2,3}", 3),
        ("b_{2,3}", 1),
        ("a_{2,1}", 0),
        ("b_{2,1}", 2),
    ] {
        d.params.insert(k.into(), q(v));
    }
    let coeffs = leibniz_core::families::derived_coefficients(&d).unwrap();
    assert_eq!(coeffs[0], leibniz_core::families::DerivedCoefficient { name: "A_{4,3}", value: q(7) });
    assert_eq!(coeffs[1], leibniz_core::families::DerivedCoefficient { name: "A_{4,1}", value: q(8) });
    let t = build(&d).unwrap();
    assert_eq!(t.coeff(3, 5, 4), q(7));
    assert_eq!(t.coeff(1, 5, 4), q(8));

    // Final catalog families derive nothing.
    let g = AlgebraDescriptor::new(Family::G1, 4).with_param("a", q(2));
    assert!(leibniz_core::families::derived_coefficients(&g).unwrap().is_empty());
}

#[test]
fn extensions_carry_the_nilradical_verbatim() {
    // Restricting any catalog member to its first n indices reproduces the
    // nilradical bracket table exactly.
    for family in [
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
        Family::LThm1Case3,
    ] {
        for n in family.min_n()..=6 {
            let d = sample_params(family, n, 1).unwrap();
            let t = build(&d).unwrap();
            assert_eq!(t.restrict_leading(n).unwrap(), l2(n), "{family} n={n}");
        }
    }
}

#[test]
fn squares_ideal_of_extension() {
    // [e5, e4] + [e4, e5] contributes e2; the mixed squares cancel.
    let t = g1(4, 3);
    assert_eq!(squares_ideal(&t).unwrap(), Subspace::span_basis(5, &[2]));
}

#[test]
fn nilradical_certificate_examples() {
    let t = g1(4, 1);
    let good = verify_nilradical_certificate(&t, &Subspace::span_basis(5, &[1, 2, 3, 4])).unwrap();
    assert!(good.passes());
    assert!(good.dim_bound_holds, "4 >= 5/2");

    // Too small: [e3, e1] = e4 escapes span{e1, e2, e3}.
    let bad = verify_nilradical_certificate(&t, &Subspace::span_basis(5, &[1, 2, 3])).unwrap();
    assert!(!bad.checks.is_ideal);
    assert!(!bad.passes());
}

#[test]
fn closure_monotone_and_idempotent() {
    let t = l2(6);
    let s3 = Subspace::span_basis(6, &[3]);
    let c3 = ideal_closure(&t, &s3).unwrap();
    assert_eq!(ideal_closure(&t, &c3).unwrap(), c3);
    let s34 = Subspace::span_basis(6, &[3, 4]);
    let c34 = ideal_closure(&t, &s34).unwrap();
    assert!(c34.contains(&c3));
}

#[test]
fn sampled_g4_has_free_tail_parameters() {
    let d = sample_params(Family::G4, 7, 3).unwrap();
    let eps = d.param("epsilon");
    assert!(eps.is_zero() || eps.abs() == Rational::one());
    assert!(d.params.contains_key("b_1"));
    assert!(d.params.contains_key("b_2"));
    assert!(!d.params.contains_key("b_3"));
}

#[test]
fn scaling_step_divides_extension_constants() {
    // e'_{n+1} = e_{n+1}/a divides the (i, n+1) and (n+1, i) structure
    // constants by a (and the self-bracket by a^2).
    let desc = sample_params(Family::RThm2Case1, 5, 2).unwrap();
    let a = desc.param("a").clone();
    let t = build(&desc).unwrap();
    let mut p = LinearMap::identity(6);
    p.set(6, 6, a.recip().unwrap());
    let scaled = t.transform_basis(&p).unwrap();
    for i in 1..=5usize {
        for k in 1..=5usize {
            assert_eq!(scaled.coeff(i, 6, k), t.coeff(i, 6, k) / a.clone());
            assert_eq!(scaled.coeff(6, i, k), t.coeff(6, i, k) / a.clone());
        }
        assert_eq!(
            scaled.coeff(6, 6, i),
            t.coeff(6, 6, i) / (a.clone() * a.clone())
        );
    }
}
