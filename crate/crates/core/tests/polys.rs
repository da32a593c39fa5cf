use num_bigint::BigInt;
use proptest::prelude::*;
use taylorstab_core::exactnum::{factorial, rat, BigRat};
use taylorstab_core::taylorpoly::{
    e_polynomial, e_polynomial_expanded, e_tilde, f_m_polynomial, membership_poly, partial_sum, scaled_partial_sum,
    t_n_eval, t_n_ode_identity, ComplexPoint,
};

fn partial_sum_f64(n: u32, x: f64, y: f64) -> (f64, f64) {
    let (mut re, mut im, mut tr, mut ti) = (0.0, 0.0, 1.0, 0.0);
    for k in 0..=n {
        re += tr;
        im += ti;
        let d = (k + 1) as f64;
        let (a, b) = ((tr * x - ti * y) / d, (tr * y + ti * x) / d);
        tr = a;
        ti = b;
    }
    (re, im)
}

#[test]
fn partial_sum_coefficients() {
    let p = partial_sum(4).unwrap();
    let q = p.to_rationals();
    let expect = [rat(1, 1), rat(1, 1), rat(1, 2), rat(1, 6), rat(1, 24)];
    assert_eq!(q, expect);
    let s = scaled_partial_sum(3).unwrap().to_rationals();
    assert_eq!(s, [rat(1, 1), rat(3, 1), rat(9, 2), rat(27, 6)]);
}

#[test]
fn closed_form_agrees_with_expansion() {
    for n in 1..=60 {
        assert!(e_polynomial(n).unwrap().same_value(&e_polynomial_expanded(n).unwrap()), "n={n}");
    }
}

#[test]
fn e_polynomial_small_cases() {
    // |1 + iy|^2 - 1 = y^2
    assert_eq!(e_polynomial(1).unwrap().to_rationals(), [rat(0, 1), rat(0, 1), rat(1, 1)]);
    // |1 + iy - y^2/2|^2 - 1 = y^4/4
    let e2 = e_polynomial(2).unwrap().to_rationals();
    assert_eq!(e2[4], rat(1, 4));
    assert!(e2[..4].iter().all(|c| *c == rat(0, 1)));
}

#[test]
fn e_tilde_is_shifted_e() {
    for n in 1..=20u32 {
        let e = e_polynomial(n).unwrap().to_rationals();
        let t = e_tilde(n).unwrap().to_rationals();
        let f = BigRat::from_integer(factorial(n + 1)) / BigRat::from_integer(BigInt::from(2));
        for (k, c) in t.iter().enumerate() {
            assert_eq!(*c, &e[k + n as usize + 1] * &f, "n={n} k={k}");
        }
    }
}

#[test]
fn f_m_small() {
    // f_1 = -(5/2)(z/3 - z^3/(6*4))
    let f = f_m_polynomial(1).unwrap().to_rationals();
    assert_eq!(f[1], rat(-5, 6));
    assert_eq!(f[3], rat(5, 48));
}

#[test]
fn ode_identity() {
    for n in 1..=15 {
        assert!(t_n_ode_identity(n).unwrap());
    }
}

proptest! {
    #[test]
    fn membership_poly_matches_f64(n in 1u32..14, x in -3.0f64..1.0, y in -3.0f64..3.0) {
        let g = membership_poly(n, false).unwrap();
        let (qx, qy) = (BigRat::from_float(x).unwrap(), BigRat::from_float(y).unwrap());
        let exact: f64 = num_traits::ToPrimitive::to_f64(&g.eval_rational(&qx, &qy)).unwrap();
        let (re, im) = partial_sum_f64(n, x, y);
        let f = re * re + im * im - 1.0;
        prop_assert!((exact - f).abs() <= 1e-9 * (1.0 + f.abs()), "{exact} vs {f}");
    }

    #[test]
    fn scaled_sum_eval_encloses_f64(n in 1u32..20, x in -1.0f64..0.5, y in -1.0f64..1.0) {
        let p = scaled_partial_sum(n).unwrap();
        let v = p.eval_complex(&ComplexPoint::from_f64(x, y, 128));
        let (re, im) = partial_sum_f64(n, n as f64 * x, n as f64 * y);
        let (a, b) = v.to_f64();
        let tol = 1e-9 * (1.0 + re.abs() + im.abs());
        prop_assert!((a - re).abs() < tol && (b - im).abs() < tol);
    }

    #[test]
    fn t_n_is_scaled_quotient(n in 1u32..12, x in 0.3f64..2.0, y in -1.0f64..1.0) {
        // T_n(z) = n! P_n(z) / (nz)^n
        let z = ComplexPoint::from_f64(x, y, 128);
        let t = t_n_eval(n, &z).unwrap().to_f64();
        let (re, im) = partial_sum_f64(n, n as f64 * x, n as f64 * y);
        let c = num_complex::Complex64::new(re, im) * (1..=n).map(|k| k as f64).product::<f64>()
            / num_complex::Complex64::new(n as f64 * x, n as f64 * y).powu(n);
        prop_assert!((t.0 - c.re).abs() < 1e-8 * (1.0 + c.norm()) && (t.1 - c.im).abs() < 1e-8 * (1.0 + c.norm()));
    }
}
