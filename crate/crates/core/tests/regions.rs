use num_bigint::BigInt;
use proptest::prelude::*;
use taylorstab_core::exactnum::{rat, Dyadic};
use taylorstab_core::extremal::{
    coverage_disk_check, decimal_tol, display_round, inner_semidisk_radius, max_modulus, BbConfig, RadiusFormula,
    SemiDisk,
};
use taylorstab_core::region::{
    boundary_trace, contains, nondecreasing_runs, origin_component_class, radial_slice_max, refine_to_bits, snap_to_grid, v_plus,
    Membership, OriginClass, TraceValue,
};
use taylorstab_core::szego::{sigma1_contains, szego_contours, szego_modulus, Grid};
use taylorstab_core::taylorpoly::{e_polynomial, ComplexPoint, RayDirection};

fn modulus_sq_f64(n: u32, x: f64, y: f64) -> f64 {
    let z = num_complex::Complex64::new(x, y);
    let (mut s, mut t) = (num_complex::Complex64::new(0.0, 0.0), num_complex::Complex64::new(1.0, 0.0));
    for k in 0..=n {
        s += t;
        t = t * z / (k + 1) as f64;
    }
    s.norm_sqr()
}

#[test]
fn forward_euler_disk() {
    // U_1 is the closed disk |z + 1| <= 1
    let c = |x: i64, y: i64| contains(1, &ComplexPoint::from_dyadic(Dyadic::from_i64(x), Dyadic::from_i64(y), 64), false).unwrap();
    assert_eq!(c(-1, 0), Membership::Inside);
    assert_eq!(c(-2, 0), Membership::Boundary { width: Dyadic::zero() });
    assert_eq!(c(0, 0), Membership::Boundary { width: Dyadic::zero() });
    assert_eq!(c(1, 0), Membership::Outside);
    assert_eq!(c(-1, 1), Membership::Boundary { width: Dyadic::zero() });
}

#[test]
fn small_radii_exact() {
    let cfg = BbConfig::with_tol(decimal_tol(8));
    let c1 = max_modulus(1, false, &cfg).unwrap();
    assert!(c1.lo <= Dyadic::from_i64(2) && Dyadic::from_i64(2) <= c1.hi);
    // n = 2: 1/2 sqrt(2(1 + sqrt 2)) = 1.09868411...
    let c2 = max_modulus(2, false, &cfg).unwrap();
    assert!((c2.lo.to_f64() - 1.0986841134678).abs() < 1e-7);
    assert_eq!(display_round(&c2.hi, 3, true), "1.099");
}

#[test]
fn certificate_witness_is_feasible() {
    let cfg = BbConfig::with_tol(decimal_tol(6));
    for n in [3u32, 5, 8] {
        for left in [false, true] {
            let c = max_modulus(n, left, &cfg).unwrap();
            assert!(c.is_complete());
            assert!(c.hi.sub(&c.lo) <= cfg.tol);
            let (wx, wy) = (c.witness.0.to_f64(), c.witness.1.to_f64());
            assert!(modulus_sq_f64(n, n as f64 * wx, n as f64 * wy) <= 1.0 + 1e-9);
            assert!(wx.hypot(wy) >= c.lo.to_f64() - 1e-12);
            if left {
                assert!(wx <= 0.0);
            }
        }
    }
}

#[test]
fn left_half_radius_never_exceeds_full() {
    let cfg = BbConfig::with_tol(decimal_tol(5));
    for n in 1..=10 {
        let f = max_modulus(n, false, &cfg).unwrap();
        let l = max_modulus(n, true, &cfg).unwrap();
        assert!(l.lo <= f.hi, "n={n}");
    }
}

#[test]
fn semidisk_classes() {
    let cfg = BbConfig::with_tol(decimal_tol(6));
    for n in 1..=8 {
        match inner_semidisk_radius(n, &cfg).unwrap() {
            SemiDisk::NotApplicable => assert!(matches!(n % 4, 1 | 2)),
            SemiDisk::Radius(c) => {
                assert!(matches!(n % 4, 0 | 3));
                assert!(c.lo.is_positive());
            }
        }
    }
    // n = 3: rho* = 1/sqrt(3)
    let SemiDisk::Radius(c) = inner_semidisk_radius(3, &cfg).unwrap() else { panic!() };
    assert!((c.lo.to_f64() - 3f64.sqrt() / 3.0).abs() < 2e-6);
}

#[test]
fn coverage_monotone_in_radius() {
    let cfg = BbConfig::default();
    assert!(coverage_disk_check(4, &RadiusFormula::Custom(rat(1, 1)), false, &cfg).unwrap());
    assert!(!coverage_disk_check(4, &RadiusFormula::Custom(rat(1, 2)), false, &cfg).unwrap());
}

#[test]
fn v_plus_matches_sign_of_e() {
    for n in 1..=24u32 {
        let v = v_plus(n).unwrap();
        let e = e_polynomial(n).unwrap();
        for w in v.intervals.windows(2) {
            assert!(w[0].hi.hi < w[1].lo.lo);
            // strictly between components E_n > 0
            let mid = w[0].hi.hi.midpoint(&w[1].lo.lo);
            assert!(e.sign_at(&mid) > 0, "n={n}");
        }
        for i in &v.intervals {
            if !i.degenerate {
                assert!(e.sign_at(&i.lo.hi.midpoint(&i.hi.lo)) <= 0, "n={n}");
            }
        }
        let class = origin_component_class(n).unwrap();
        assert_eq!(class == OriginClass::Singleton, matches!(n % 4, 1 | 2));
    }
}

#[test]
fn runs_follow_float_order() {
    let seq: Vec<_> = (1..=12).map(|n| refine_to_bits(v_plus(n).unwrap().max(), &e_polynomial(n).unwrap(), 30)).collect();
    let runs = nondecreasing_runs(&seq).unwrap();
    let f: Vec<f64> = seq.iter().map(|b| b.to_f64()).collect();
    let mut expect = vec![1usize];
    for w in f.windows(2) {
        if w[1] >= w[0] {
            *expect.last_mut().unwrap() += 1;
        } else {
            expect.push(1);
        }
    }
    assert_eq!(runs, expect);
    assert_eq!(runs.iter().sum::<usize>(), 12);
}

#[test]
fn trace_of_forward_euler() {
    // |1 + x + iy| = 1 has smallest root x = -1 + sqrt(1 - y^2)
    let ys = [Dyadic::from_i64(0), Dyadic::new(BigInt::from(1), -1), Dyadic::from_i64(2)];
    let t = boundary_trace(1, &ys).unwrap();
    assert_eq!(t.samples[0].value, TraceValue::Zero);
    match &t.samples[1].value {
        TraceValue::Signed { sign, log10_abs, .. } => {
            assert_eq!(*sign, -1);
            let x = 1.0 - (0.75f64).sqrt();
            assert!((log10_abs.to_f64() - x.log10()).abs() < 1e-8);
        }
        other => panic!("{other:?}"),
    }
    assert_eq!(t.samples[2].value, TraceValue::NoRoot);
}

#[test]
fn snapping() {
    assert_eq!(snap_to_grid(&rat(1, 3), 4), Dyadic::new(BigInt::from(5), -4));
}

#[test]
fn contours_are_on_level_sets() {
    let grid = Grid { nx: 80, ny: 80, ..Grid::default() };
    let pts = szego_contours(&[1.0], &grid);
    assert!(!pts.is_empty());
    for p in &pts {
        assert!((szego_modulus(p.x, p.y) - 1.0).abs() < 0.05);
    }
    assert_eq!(pts, szego_contours(&[1.0], &grid));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn membership_agrees_with_f64(n in 1u32..16, x in -4.0f64..1.0, y in -4.0f64..4.0) {
        let g = modulus_sq_f64(n, x, y) - 1.0;
        prop_assume!(g.abs() > 1e-6);
        let m = contains(n, &ComplexPoint::from_f64(x, y, 64), false).unwrap();
        prop_assert_eq!(m, if g < 0.0 { Membership::Inside } else { Membership::Outside });
    }

    #[test]
    fn sigma1_agrees_with_f64(x in -1.5f64..1.0, y in -1.5f64..1.5) {
        let v = szego_modulus(x, y);
        prop_assume!((v - 1.0).abs() > 1e-9 && (x * x + y * y - 1.0).abs() > 1e-9);
        let m = sigma1_contains(&ComplexPoint::from_f64(x, y, 64)).unwrap();
        let inside = v < 1.0 && x * x + y * y < 1.0;
        prop_assert_eq!(m, if inside { Membership::Inside } else { Membership::Outside });
    }

    #[test]
    fn radial_max_is_on_boundary(n in 1u32..10, phi in 0.0f64..std::f64::consts::PI) {
        let dir = RayDirection::from_angle(phi, 20);
        let r = radial_slice_max(n, &dir).unwrap();
        prop_assert!(r.origin_component.hi <= r.global.hi);
        let (c, s) = dir.cos_sin();
        let (c, s) = (num_traits::ToPrimitive::to_f64(&c).unwrap(), num_traits::ToPrimitive::to_f64(&s).unwrap());
        let (a, b) = (r.global.lo.to_f64(), r.global.hi.to_f64());
        let nf = n as f64;
        prop_assert!(modulus_sq_f64(n, nf * a * c, nf * a * s) <= 1.0 + 1e-9);
        if b > a {
            prop_assert!(modulus_sq_f64(n, nf * b * c, nf * b * s) >= 1.0 - 1e-9);
        }
    }
}

#[test]
fn distance_bound_at_two_over_e() {
    use taylorstab_core::exactnum::exp_minus_one;
    use taylorstab_core::szego::distance_lower_bound;
    let rho = exp_minus_one(128).mul_pow2(1);
    let d = distance_lower_bound(&rho).unwrap();
    let oracle = 1.0 / (std::f64::consts::E.powi(2) + 1.0).sqrt();
    assert!(d.lo().to_f64() <= oracle + 1e-15 && oracle - 1e-15 <= d.hi().to_f64());
    assert!((oracle - 0.345258).abs() < 1e-6);
    assert!(distance_lower_bound(&exp_minus_one(128)).is_err() || distance_lower_bound(&exp_minus_one(128)).unwrap().contains_zero());
}
