use num_bigint::BigInt;
use proptest::prelude::*;
use taylorstab_core::exactnum::{e_const, factorial, lambert_w, pi, rat, BigRat, Dyadic, DyadicInterval, Round};

fn dy(m: i64, e: i64) -> Dyadic {
    Dyadic::new(BigInt::from(m), e)
}

#[test]
fn constants_enclose_f64_values() {
    let e = e_const(200);
    assert!(e.lo().to_f64() <= std::f64::consts::E && std::f64::consts::E <= e.hi().to_f64());
    let p = pi(200);
    assert!(p.lo().to_f64() <= std::f64::consts::PI && std::f64::consts::PI <= p.hi().to_f64());
    // 2.71828182845904523536028747135266249775724709369995
    assert!(e.contains_rational(&rat(2718281828459045235, 1_000_000_000_000_000_000)) == false);
    let lo = BigRat::new("271828182845904523536028747135".parse().unwrap(), BigInt::from(10).pow(29));
    let hi = BigRat::new("271828182845904523536028747136".parse().unwrap(), BigInt::from(10).pow(29));
    assert!(e.lo().to_rational() > lo && e.hi().to_rational() < hi);
}

#[test]
fn factorial_small() {
    assert_eq!(factorial(0), BigInt::from(1));
    assert_eq!(factorial(10), BigInt::from(3628800));
    assert_eq!(factorial(20), BigInt::from(2432902008176640000u64));
}

#[test]
fn lambert_at_inverse_e() {
    let x = DyadicInterval::one(128).div(&e_const(128)).unwrap();
    let w = lambert_w(&x, 128).unwrap().value;
    assert!((w.to_f64() - 0.278464542761074).abs() < 1e-13);
    // w e^w = x
    assert!(w.mul(&w.exp()).overlaps(&x));
}

#[test]
fn decimal_rounding_directions() {
    let v = Dyadic::from_rational(&rat(2, 3), 80, Round::Floor);
    assert_eq!(v.to_decimal(4, Round::Floor), "0.6666");
    assert_eq!(v.to_decimal(4, Round::Ceil), "0.6667");
    assert_eq!(Dyadic::from_i64(-3).to_decimal(2, Round::Floor), "-3.00");
}

proptest! {
    #[test]
    fn dyadic_ring_ops_are_exact(a in -1_000_000i64..1_000_000, ea in -40i64..40, b in -1_000_000i64..1_000_000, eb in -40i64..40) {
        let (x, y) = (dy(a, ea), dy(b, eb));
        let (qx, qy) = (x.to_rational(), y.to_rational());
        prop_assert_eq!(x.add(&y).to_rational(), &qx + &qy);
        prop_assert_eq!(x.sub(&y).to_rational(), &qx - &qy);
        prop_assert_eq!(x.mul(&y).to_rational(), &qx * &qy);
    }

    #[test]
    fn directed_division_brackets_quotient(a in -1_000_000i64..1_000_000, b in 1i64..1_000_000, prec in 8u32..120) {
        let (x, y) = (Dyadic::from_i64(a), Dyadic::from_i64(b));
        let q = rat(a, b);
        prop_assert!(x.div(&y, prec, Round::Floor).to_rational() <= q);
        prop_assert!(x.div(&y, prec, Round::Ceil).to_rational() >= q);
    }

    #[test]
    fn interval_arithmetic_encloses_f64(a in -50.0f64..50.0, b in -50.0f64..50.0) {
        let (x, y) = (DyadicInterval::from_f64(a, 96), DyadicInterval::from_f64(b, 96));
        let checks = [(x.add(&y), a + b), (x.mul(&y), a * b), (x.sqr(), a * a)];
        for (iv, f) in checks {
            prop_assert!(iv.lo().to_f64() <= f + f.abs() * 1e-15 && f - f.abs() * 1e-15 <= iv.hi().to_f64());
        }
    }

    #[test]
    fn elementary_functions_enclose_libm(a in -20.0f64..20.0) {
        let x = DyadicInterval::from_f64(a, 128);
        for (iv, f) in [(x.exp(), a.exp()), (x.sin(), a.sin()), (x.cos(), a.cos()), (x.cosh(), a.cosh())] {
            let slack = 1e-14 * f.abs().max(1.0);
            prop_assert!(iv.lo().to_f64() <= f + slack && f - slack <= iv.hi().to_f64(), "{a}");
            prop_assert!(iv.hi().to_f64() - iv.lo().to_f64() < slack);
        }
    }

    #[test]
    fn sqrt_squares_back(a in 1u64..1_000_000_000) {
        let x = DyadicInterval::from_i64(a as i64, 128);
        let s = x.sqrt().unwrap();
        prop_assert!(s.sqr().contains_rational(&rat(a as i64, 1)));
    }
}
