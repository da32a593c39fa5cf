//! Certified elementary functions on [`DyadicInterval`].
//!
//! Point evaluations use argument reduction plus a Taylor series with an
//! explicit tail bound, all carried out in interval arithmetic at a few guard
//! bits above the requested precision. Monotone functions are extended to
//! intervals through their endpoints.

use num_bigint::BigInt;

use super::{Dyadic, DyadicInterval, Round};
use crate::{Error, Result};

const GUARD: u32 = 24;

fn tiny(wp: u32) -> Dyadic {
    Dyadic::new(BigInt::from(1), -(wp as i64))
}

/// `exp` of an exact dyadic point.
fn exp_point(d: &Dyadic, prec: u32) -> DyadicInterval {
    if d.is_zero() {
        return DyadicInterval::one(prec);
    }
    let lg = d.ilog2();
    let s: u32 = if lg >= -12 { (lg + 13) as u32 } else { 0 };
    let wp = prec + GUARD + s;
    let r = DyadicInterval::point(d.mul_pow2(-(s as i64)), wp);
    let eps = tiny(wp);
    let mut sum = DyadicInterval::one(wp);
    let mut term = DyadicInterval::one(wp);
    let mut k = 1u64;
    loop {
        term = term.mul(&r).div_u64(k);
        sum = sum.add(&term);
        if term.mag() < eps {
            break;
        }
        k += 1;
    }
    // |r| <= 2^-12 so the tail is bounded by the last term.
    sum = sum.widen(&term.mag());
    for _ in 0..s {
        sum = sum.sqr();
    }
    sum.with_prec(prec)
}

fn atanh_series(t: &DyadicInterval, wp: u32) -> DyadicInterval {
    // sum_{j>=0} t^(2j+1)/(2j+1), requires |t| <= 1/3
    let t2 = t.sqr();
    let eps = tiny(wp);
    let mut p = t.clone();
    let mut sum = t.clone();
    let mut j = 1u64;
    loop {
        p = p.mul(&t2);
        let term = p.div_u64(2 * j + 1);
        sum = sum.add(&term);
        if p.mag() < eps {
            break;
        }
        j += 1;
    }
    // tail <= |p t^2| / (1 - t^2) <= 2 |p|
    sum.widen(&p.mag().mul_pow2(1))
}

/// `ln 2` enclosure.
pub fn ln2(prec: u32) -> DyadicInterval {
    let wp = prec + GUARD;
    let third = DyadicInterval::one(wp).div_u64(3);
    atanh_series(&third, wp).mul_pow2(1).with_prec(prec)
}

fn ln_point(d: &Dyadic, prec: u32) -> Result<DyadicInterval> {
    if !d.is_positive() {
        return Err(Error::Domain("logarithm of a non-positive number"));
    }
    if *d == Dyadic::one() {
        return Ok(DyadicInterval::zero(prec));
    }
    let k = d.ilog2();
    let wp = prec + GUARD + 64 - (k.unsigned_abs().leading_zeros());
    let m = DyadicInterval::point(d.mul_pow2(-k), wp); // m in [1, 2)
    let one = DyadicInterval::one(wp);
    let t = m.sub(&one).div(&m.add(&one))?;
    let lnm = atanh_series(&t, wp).mul_pow2(1);
    let total = if k == 0 { lnm } else { lnm.add(&ln2(wp).mul(&DyadicInterval::from_i64(k, wp))) };
    Ok(total.with_prec(prec))
}

fn atan_inv(m: u64, wp: u32) -> DyadicInterval {
    // atan(1/m) = sum (-1)^j / ((2j+1) m^(2j+1)), alternating with decreasing terms
    let x = DyadicInterval::one(wp).div_u64(m);
    let x2 = x.sqr();
    let eps = tiny(wp);
    let mut p = x.clone();
    let mut sum = x.clone();
    let mut j = 1u64;
    loop {
        p = p.mul(&x2);
        let term = p.div_u64(2 * j + 1);
        sum = if j % 2 == 1 { sum.sub(&term) } else { sum.add(&term) };
        if p.mag() < eps {
            break;
        }
        j += 1;
    }
    sum.widen(&p.mag())
}

/// `pi` enclosure via Machin's formula.
pub fn pi(prec: u32) -> DyadicInterval {
    let wp = prec + GUARD;
    let a = atan_inv(5, wp).mul_u64(4);
    let b = atan_inv(239, wp);
    a.sub(&b).mul_u64(4).with_prec(prec)
}

/// Euler's number.
pub fn e_const(prec: u32) -> DyadicInterval {
    exp_point(&Dyadic::one(), prec)
}

/// `1/e`, computed directly as `exp(-1)`.
pub fn exp_minus_one(prec: u32) -> DyadicInterval {
    exp_point(&Dyadic::from_i64(-1), prec)
}

fn sin_cos_series(r: &DyadicInterval, wp: u32) -> (DyadicInterval, DyadicInterval) {
    // Taylor series on an interval argument with |r| small; the tail after
    // r^k/k! is bounded by 2 |r|^k / k! once |r| <= k/2.
    let eps = tiny(wp);
    let r2 = r.sqr();
    let mut s = r.clone();
    let mut c = DyadicInterval::one(wp);
    let mut term = r.clone(); // r^k / k!, k odd
    let mut cterm = DyadicInterval::one(wp);
    let mut k = 1u64;
    loop {
        cterm = cterm.mul(&r2).div_u64((k) * (k + 1));
        c = if (k + 1) % 4 == 2 { c.sub(&cterm) } else { c.add(&cterm) };
        term = term.mul(&r2).div_u64((k + 1) * (k + 2));
        s = if (k + 2) % 4 == 3 { s.sub(&term) } else { s.add(&term) };
        k += 2;
        if term.mag() < eps && cterm.mag() < eps && k > 4 {
            break;
        }
    }
    let tail = term.mag().mul_pow2(1).add(&cterm.mag().mul_pow2(1));
    (s.widen(&tail), c.widen(&tail))
}

fn clamp_unit(v: DyadicInterval) -> DyadicInterval {
    let one = DyadicInterval::one(v.prec());
    let lo = if *v.lo() < one.neg().lo().clone() { Dyadic::from_i64(-1) } else { v.lo().clone() };
    let hi = if *v.hi() > Dyadic::one() { Dyadic::one() } else { v.hi().clone() };
    if lo > hi {
        return v;
    }
    DyadicInterval::new(lo, hi, v.prec())
}

/// Simultaneous `sin` and `cos` of an interval.
pub(crate) fn sin_cos(x: &DyadicInterval) -> (DyadicInterval, DyadicInterval) {
    let prec = x.prec();
    if x.is_zero_point() {
        return (DyadicInterval::zero(prec), DyadicInterval::one(prec));
    }
    let width = x.width();
    if !width.is_zero() && width.ilog2() >= 0 {
        let unit = DyadicInterval::new(Dyadic::from_i64(-1), Dyadic::one(), prec);
        return (unit.clone(), unit);
    }
    let mag = x.mag();
    let extra = if mag.is_zero() { 0 } else { mag.ilog2().max(0) as u32 };
    let wp = prec + GUARD + extra;
    let xw = x.with_prec(wp);
    let half_pi = pi(wp).mul_pow2(-1);
    let q = libm::round(x.mid().to_f64() / core::f64::consts::FRAC_PI_2);
    let k = q as i64;
    let r = xw.sub(&half_pi.mul(&DyadicInterval::from_i64(k, wp)));
    let (s, c) = sin_cos_series(&r, wp);
    let (s, c) = match k.rem_euclid(4) {
        0 => (s, c),
        1 => (c, s.neg()),
        2 => (s.neg(), c.neg()),
        _ => (c.neg(), s),
    };
    (clamp_unit(s.with_prec(prec)), clamp_unit(c.with_prec(prec)))
}

impl DyadicInterval {
    pub fn exp(&self) -> Self {
        if self.is_point() {
            return exp_point(self.lo(), self.prec());
        }
        let a = exp_point(self.lo(), self.prec());
        let b = exp_point(self.hi(), self.prec());
        DyadicInterval::new(a.lo().clone(), b.hi().clone(), self.prec())
    }

    pub fn ln(&self) -> Result<Self> {
        if !self.lo().is_positive() {
            return Err(Error::Domain("logarithm of an interval reaching zero or below"));
        }
        let a = ln_point(self.lo(), self.prec())?;
        if self.is_point() {
            return Ok(a);
        }
        let b = ln_point(self.hi(), self.prec())?;
        Ok(DyadicInterval::new(a.lo().clone(), b.hi().clone(), self.prec()))
    }

    pub fn log10(&self) -> Result<Self> {
        let wp = self.prec() + 8;
        let ln10 = ln_point(&Dyadic::from_i64(10), wp)?;
        Ok(self.with_prec(wp).ln()?.div(&ln10)?.with_prec(self.prec()))
    }

    pub fn sin(&self) -> Self {
        sin_cos(self).0
    }

    pub fn cos(&self) -> Self {
        sin_cos(self).1
    }

    pub fn sinh(&self) -> Self {
        let f = |d: &Dyadic, dir: Round| {
            let p = DyadicInterval::point(d.clone(), self.prec() + 8);
            let v = p.exp().sub(&p.neg().exp()).mul_pow2(-1);
            match dir {
                Round::Floor => v.lo().clone(),
                Round::Ceil => v.hi().clone(),
            }
        };
        DyadicInterval::rounded(f(self.lo(), Round::Floor), f(self.hi(), Round::Ceil), self.prec())
    }

    pub fn cosh(&self) -> Self {
        let f = |d: &Dyadic| {
            let p = DyadicInterval::point(d.clone(), self.prec() + 8);
            p.exp().add(&p.neg().exp()).mul_pow2(-1)
        };
        let lo_abs = self.mig();
        let hi_abs = self.mag();
        let a = f(&lo_abs);
        let b = f(&hi_abs);
        DyadicInterval::rounded(a.lo().clone(), b.hi().clone(), self.prec())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    // 60-digit reference values
    const E_60: &str = "2.71828182845904523536028747135266249775724709369995957496696";
    const PI_60: &str = "3.14159265358979323846264338327950288419716939937510582097494";
    const LN2_60: &str = "0.693147180559945309417232121458176568075500134360255254120680";

    fn parse_decimal(s: &str) -> crate::exactnum::BigRat {
        let (int, frac) = s.split_once('.').unwrap();
        let neg = int.starts_with('-');
        let digits = alloc::format!("{}{}", int.trim_start_matches('-'), frac);
        let num: BigInt = digits.parse().unwrap();
        let den: BigInt = num_traits::pow(BigInt::from(10), frac.len());
        let q = crate::exactnum::BigRat::new(num, den);
        if neg {
            -q
        } else {
            q
        }
    }

    fn near(v: &DyadicInterval, reference: &str, tol_exp: i32) -> bool {
        let r = parse_decimal(reference);
        let tol = crate::exactnum::BigRat::new(BigInt::from(1), num_traits::pow(BigInt::from(10), tol_exp as usize));
        let lo = v.lo().to_rational();
        let hi = v.hi().to_rational();
        lo <= &r + &tol && &r - &tol <= hi
    }

    #[test]
    fn e_at_64_bits_is_tight() {
        let e = e_const(64);
        assert!(near(&e, E_60, 55));
        assert!(e.width().ilog2() < -60);
        let e200 = e_const(200);
        assert!(near(&e200, E_60, 58));
    }

    #[test]
    fn pi_and_ln2() {
        assert!(near(&pi(190), PI_60, 56));
        assert!(near(&ln2(190), LN2_60, 56));
    }

    #[test]
    fn exp_of_zero_is_exact_one() {
        let v = DyadicInterval::zero(64).exp();
        assert!(v.is_point());
        assert_eq!(v.lo(), &Dyadic::one());
    }

    #[test]
    fn exp_large_arguments() {
        let v = DyadicInterval::from_i64(-600, 80).exp();
        // e^-600 = 2.65039655...e-261
        let l = v.log10().unwrap();
        assert!(l.to_f64() + 260.5767 < 1e-3 && l.to_f64() + 260.5767 > -1e-3);
        let w = DyadicInterval::from_i64(700, 80).exp();
        assert!(w.ln().unwrap().contains(&Dyadic::from_i64(700)));
    }

    #[test]
    fn ln_inverts_exp() {
        for q in [rat(1, 7), rat(5, 2), rat(1000, 3)] {
            let x = DyadicInterval::from_rational(&q, 128);
            let back = x.ln().unwrap().exp();
            assert!(back.overlaps(&x));
            assert!(back.width().ilog2() < x.mag().ilog2() - 100);
        }
        assert!(DyadicInterval::zero(64).ln().is_err());
    }

    #[test]
    fn trig_identities() {
        for q in [rat(1, 3), rat(-7, 2), rat(41, 1), rat(-1000, 7)] {
            let x = DyadicInterval::from_rational(&q, 128);
            let (s, c) = sin_cos(&x);
            let one = s.sqr().add(&c.sqr());
            assert!(one.contains(&Dyadic::one()));
            assert!(one.width().ilog2() < -100, "{q}");
        }
        let half_pi = pi(100).mul_pow2(-1);
        assert!(half_pi.sin().contains(&Dyadic::one()));
        assert!(half_pi.cos().contains_zero());
    }

    #[test]
    fn hyperbolic() {
        let two = DyadicInterval::from_i64(2, 100);
        let c = two.cosh();
        let s = two.sinh();
        let one = c.sqr().sub(&s.sqr());
        assert!(one.contains(&Dyadic::one()));
        // cosh(2) = 3.7621956910836314...
        assert!((c.to_f64() - 3.762_195_691_083_631).abs() < 1e-14);
        let sym = DyadicInterval::new(Dyadic::from_i64(-1), Dyadic::from_i64(2), 64).cosh();
        assert!(sym.contains(&Dyadic::one()));
    }

    #[test]
    fn log10_of_power_of_ten() {
        let v = DyadicInterval::from_i64(1000, 100).log10().unwrap();
        assert!(v.contains(&Dyadic::from_i64(3)));
    }
}
