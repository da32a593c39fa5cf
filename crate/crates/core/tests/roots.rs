use num_bigint::BigInt;
use proptest::prelude::*;
use taylorstab_core::exactnum::{rat, Dyadic};
use taylorstab_core::rootiso::{isolate_real_roots, refine_root, smallest_abs_root, RootDomain};
use taylorstab_core::taylorpoly::IntPoly;

/// `prod (den x - num)`.
fn from_roots(roots: &[(i64, i64)]) -> IntPoly {
    let mut c = vec![BigInt::from(1)];
    for &(num, den) in roots {
        let mut next = vec![BigInt::from(0); c.len() + 1];
        for (k, a) in c.iter().enumerate() {
            next[k + 1] += a * den;
            next[k] -= a * num;
        }
        c = next;
    }
    IntPoly::from_ints(c)
}

#[test]
fn double_root_is_counted_once() {
    let p = from_roots(&[(1, 1), (1, 1), (-2, 1)]);
    let r = isolate_real_roots(&p, &RootDomain::full());
    assert_eq!(r.len(), 2);
    assert!(r[0].contains_rational(&rat(-2, 1)) && r[1].contains_rational(&rat(1, 1)));
}

#[test]
fn no_real_roots() {
    let p = IntPoly::from_i64s(&[1, 0, 1]);
    assert!(isolate_real_roots(&p, &RootDomain::full()).is_empty());
    assert!(smallest_abs_root(&p).is_none());
}

#[test]
fn sqrt_two_digits() {
    let p = IntPoly::from_i64s(&[-2, 0, 1]);
    let r = isolate_real_roots(&p, &RootDomain::positive());
    assert_eq!(r.len(), 1);
    let b = refine_root(&r[0], &p, &Dyadic::new(BigInt::from(1), -80));
    assert!((b.to_f64() - std::f64::consts::SQRT_2).abs() < 1e-15);
    assert!(b.lo.to_rational().pow(2) <= rat(2, 1) && b.hi.to_rational().pow(2) >= rat(2, 1));
}

proptest! {
    #[test]
    fn isolates_every_rational_root(mut roots in proptest::collection::vec((-60i64..60, 1i64..9), 1..7)) {
        let p = from_roots(&roots);
        let mut qs: Vec<_> = roots.drain(..).map(|(a, b)| rat(a, b)).collect();
        qs.sort();
        qs.dedup();
        let boxes = isolate_real_roots(&p, &RootDomain::full());
        prop_assert_eq!(boxes.len(), qs.len());
        for (b, q) in boxes.iter().zip(&qs) {
            prop_assert!(b.contains_rational(q));
            let fine = refine_root(b, &p, &Dyadic::new(BigInt::from(1), -40));
            prop_assert!(fine.contains_rational(q));
            prop_assert!(fine.width() <= Dyadic::new(BigInt::from(1), -40));
        }
        let s = smallest_abs_root(&p).unwrap();
        let min = qs.iter().map(|q| if *q < rat(0, 1) { -q.clone() } else { q.clone() }).min().unwrap();
        prop_assert!(s.contains_rational(&min) || s.contains_rational(&-min));
    }
}

#[test]
fn float_zeros_agree_with_isolated_real_roots() {
    use taylorstab_core::region::complex_zeros;
    use taylorstab_core::taylorpoly::f_m_polynomial;
    let p = f_m_polynomial(40).unwrap();
    let iso: Vec<f64> = isolate_real_roots(&p, &RootDomain::positive())
        .iter()
        .map(|b| refine_root(b, &p, &Dyadic::new(1.into(), -40)).to_f64())
        .collect();
    assert_eq!(iso.len(), 19);
    let zeros: Vec<(f64, f64)> = complex_zeros(&p).unwrap().iter().map(|z| z.to_f64()).collect();
    assert_eq!(zeros.len(), 159);
    let real: Vec<f64> = zeros.iter().filter(|z| z.0 > 0.0 && z.1.abs() < 1e-9).map(|z| z.0).collect();
    assert_eq!(real.len(), iso.len());
    for (a, b) in real.iter().zip(&iso) {
        assert!((a - b).abs() < 1e-9 * b, "{a} vs {b}");
    }
}
