//! Principal branch of the Lambert W function, `W(x) e^W(x) = x`, `W >= -1`.
//!
//! A float Halley iteration gives the first ~50 bits, dyadic Halley steps
//! extend the estimate to the working precision, and the final enclosure is
//! certified by the sign of `w e^w - x` at both candidate endpoints (the map
//! `w -> w e^w` is increasing on `[-1, inf)`).

use num_bigint::BigInt;

use super::{exp_minus_one, Dyadic, DyadicInterval, Round};
use crate::{Error, Result};

/// A certified Lambert W enclosure together with its argument.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WValue {
    pub argument: DyadicInterval,
    pub value: DyadicInterval,
}

impl WValue {
    /// Checks that `value * exp(value)` covers `argument`.
    pub fn residual_encloses(&self) -> bool {
        let prec = self.value.prec() + 16;
        let g = |d: &Dyadic| {
            let w = DyadicInterval::point(d.clone(), prec);
            w.mul(&w.exp())
        };
        let at_lo = g(self.value.lo());
        let at_hi = g(self.value.hi());
        at_lo.hi() <= self.argument.lo() && at_hi.lo() >= self.argument.hi()
    }
}

fn f64_guess(x: f64) -> f64 {
    const INV_E: f64 = 0.367_879_441_171_442_33;
    let mut w = if x < -0.32 {
        let p = libm::sqrt((2.0 * (core::f64::consts::E * x + 1.0)).max(0.0));
        -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p
    } else if x < 3.0 {
        // blend of the series and log1p guesses
        let l = libm::log1p(x);
        l * (1.0 - libm::log1p(l) / (2.0 + l))
    } else {
        let l1 = libm::log(x);
        let l2 = libm::log(l1);
        l1 - l2 + l2 / l1
    };
    if x <= -INV_E {
        return -1.0;
    }
    for _ in 0..64 {
        let ew = libm::exp(w);
        let f = w * ew - x;
        let wp1 = w + 1.0;
        if wp1.abs() < 1e-300 {
            break;
        }
        let denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
        if denom == 0.0 || !denom.is_finite() {
            break;
        }
        let next = w - f / denom;
        if !next.is_finite() {
            break;
        }
        if (next - w).abs() <= 1e-16 * next.abs().max(1e-300) {
            w = next;
            break;
        }
        w = next;
    }
    w.max(-1.0)
}

/// Sign of `w e^w - x` at an exact point, if decidable at `prec`.
fn residual_sign(w: &Dyadic, x: &Dyadic, prec: u32) -> Option<core::cmp::Ordering> {
    let wi = DyadicInterval::point(w.clone(), prec);
    let r = wi.mul(&wi.exp()).sub(&DyadicInterval::point(x.clone(), prec));
    r.sign()
}

/// Enclosure of `W(a)` for an exact point `a > -1/e`, of width about `2^-prec * max(1, |W|)`.
fn w_point(a: &Dyadic, prec: u32) -> Result<(Dyadic, Dyadic)> {
    use core::cmp::Ordering::*;
    if a.is_zero() {
        return Ok((Dyadic::zero(), Dyadic::zero()));
    }
    let mut w = Dyadic::from_f64(f64_guess(a.to_f64()));
    let mut wp = prec + 32;
    let mut bits = 48u32;
    while bits < wp {
        bits = (bits * 3).min(wp);
        let p = bits + 16;
        let wi = DyadicInterval::point(w.clone(), p);
        let ew = wi.exp();
        let f = wi.mul(&ew).sub(&DyadicInterval::point(a.clone(), p));
        let wp1 = wi.add(&DyadicInterval::one(p));
        if wp1.contains_zero() {
            break;
        }
        let corr = DyadicInterval::from_i64(2, p).add(&wi).mul(&f).div(&wp1.mul_u64(2))?;
        let denom = ew.mul(&wp1).sub(&corr);
        if denom.contains_zero() {
            break;
        }
        let step = f.div(&denom)?;
        w = w.sub(&step.mid()).round(p, Round::Floor);
    }
    let scale = if w.is_zero() { 0 } else { w.abs().ilog2().max(0) };
    let minus_one = Dyadic::from_i64(-1);
    for attempt in 0..8 {
        let eps = Dyadic::new(BigInt::from(1), scale - prec as i64 - 1 + attempt);
        let lo = core::cmp::max(w.sub(&eps), minus_one.clone());
        let hi = w.add(&eps);
        let lo_ok = lo == minus_one || residual_sign(&lo, a, wp) == Some(Less);
        let hi_ok = residual_sign(&hi, a, wp) == Some(Greater);
        if lo_ok && hi_ok {
            return Ok((lo, hi));
        }
        wp += 32;
    }
    Err(Error::PrecisionExhausted(wp))
}

/// Principal-branch Lambert W of an interval argument.
pub fn lambert_w(x: &DyadicInterval, prec: u32) -> Result<WValue> {
    let wp = prec + 16;
    let inv_e = exp_minus_one(wp);
    let branch = inv_e.neg(); // encloses -1/e
    if x.hi() < branch.lo() {
        return Err(Error::Domain("Lambert W argument below -1/e"));
    }
    if x.is_point() && x.lo() > branch.hi() {
        let (lo, hi) = w_point(x.lo(), prec)?;
        return Ok(WValue { argument: x.clone(), value: DyadicInterval::new(lo, hi, prec) });
    }
    let lo = if x.lo() <= branch.hi() { Dyadic::from_i64(-1) } else { w_point(x.lo(), prec)?.0 };
    let hi = if x.hi() <= branch.hi() {
        // argument hugs the branch point
        w_point(&branch.hi().add(&Dyadic::new(BigInt::from(1), -(wp as i64))), prec)?.1
    } else {
        w_point(x.hi(), prec)?.1
    };
    Ok(WValue { argument: x.clone(), value: DyadicInterval::new(lo, hi, prec) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{e_const, rat};
    use proptest::prelude::*;

    #[test]
    fn w_of_zero_is_exact() {
        let w = lambert_w(&DyadicInterval::zero(64), 64).unwrap();
        assert!(w.value.is_zero_point());
    }

    #[test]
    fn w_of_e_is_one() {
        let e = e_const(128);
        let w = lambert_w(&e, 100).unwrap();
        assert!(w.value.contains(&Dyadic::one()));
        assert!(w.value.width().ilog2() < -90);
        assert!(w.residual_encloses());
    }

    #[test]
    fn w_of_inverse_e() {
        let inv_e = exp_minus_one(128);
        let w = lambert_w(&inv_e, 96).unwrap();
        let v = -w.value.to_f64();
        assert!((v + 0.278_464_542_761_073_8).abs() < 1e-15, "{v}");
    }

    #[test]
    fn below_branch_point_is_domain_error() {
        let x = DyadicInterval::from_rational(&rat(-1, 2), 64);
        assert!(matches!(lambert_w(&x, 64), Err(Error::Domain(_))));
    }

    #[test]
    fn interval_argument_is_monotone_hull() {
        let x = DyadicInterval::new(Dyadic::from_i64(1), Dyadic::from_i64(10), 64);
        let w = lambert_w(&x, 64).unwrap();
        assert!(w.residual_encloses());
        assert!(w.value.lo().to_f64() < 0.5672 && w.value.hi().to_f64() > 1.7455);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn residual_encloses_argument(u in 0.0f64..1.0) {
            // spread over [-1/e + 1e-6, 1e3], denser near the branch point
            let x = -0.367_879_441_171_442_3 + 1e-6 + (1e3f64 + 0.368).powf(u) - 1.0;
            let xi = DyadicInterval::from_f64(x.min(1e3), 53);
            let w = lambert_w(&xi, 60).unwrap();
            prop_assert!(w.residual_encloses());
        }
    }

    #[test]
    fn width_contract() {
        for q in [rat(-36, 100), rat(1, 1000), rat(1000, 1), rat(5, 3)] {
            let x = DyadicInterval::point(Dyadic::from_rational(&q, 200, Round::Floor), 200);
            for prec in [64u32, 256] {
                let w = lambert_w(&x, prec).unwrap();
                let mag = core::cmp::max(w.value.mag(), Dyadic::one());
                let bound = Dyadic::new(BigInt::from(1), mag.ilog2() + 1 - prec as i64);
                assert!(w.value.width() <= bound, "{q} @ {prec}");
                assert!(w.residual_encloses());
            }
        }
    }
}
