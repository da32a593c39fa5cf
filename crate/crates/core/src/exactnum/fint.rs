//! Outward-rounded `f64` intervals.
//!
//! Each primitive result is computed in round-to-nearest and then widened by
//! one ulp in each direction. Since a correctly rounded operation is off by at
//! most half an ulp, the widened interval contains the exact result.

use core::ops::{Add, Mul, Neg, Sub};

#[inline]
fn down(x: f64) -> f64 {
    if x == f64::INFINITY {
        f64::MAX
    } else {
        x.next_down()
    }
}

#[inline]
fn up(x: f64) -> f64 {
    if x == f64::NEG_INFINITY {
        f64::MIN
    } else {
        x.next_up()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Fi {
    pub lo: f64,
    pub hi: f64,
}

impl Fi {
    pub const ZERO: Fi = Fi { lo: 0.0, hi: 0.0 };
    pub const ONE: Fi = Fi { lo: 1.0, hi: 1.0 };

    #[inline]
    pub fn point(v: f64) -> Fi {
        Fi { lo: v, hi: v }
    }

    #[inline]
    pub fn new(lo: f64, hi: f64) -> Fi {
        debug_assert!(lo <= hi);
        Fi { lo, hi }
    }

    /// Encloses a value known only to nearest rounding (e.g. a decimal literal).
    pub fn around(v: f64) -> Fi {
        Fi { lo: down(v), hi: up(v) }
    }

    #[inline]
    pub fn mag(self) -> f64 {
        self.lo.abs().max(self.hi.abs())
    }

    #[inline]
    pub fn mig(self) -> f64 {
        if self.lo > 0.0 {
            self.lo
        } else if self.hi < 0.0 {
            -self.hi
        } else {
            0.0
        }
    }

    #[inline]
    pub fn contains_zero(self) -> bool {
        self.lo <= 0.0 && self.hi >= 0.0
    }

    #[inline]
    pub fn width(self) -> f64 {
        self.hi - self.lo
    }

    #[inline]
    pub fn sqr(self) -> Fi {
        let a = self.mig();
        let b = self.mag();
        Fi { lo: down(a * a).max(0.0), hi: up(b * b) }
    }

    /// Square root of the non-negative part.
    pub fn sqrt(self) -> Fi {
        let lo = if self.lo > 0.0 { down(libm::sqrt(self.lo)).max(0.0) } else { 0.0 };
        let hi = if self.hi > 0.0 { up(libm::sqrt(self.hi)) } else { 0.0 };
        Fi { lo, hi }
    }

    pub fn scale(self, k: f64) -> Fi {
        Fi::point(k) * self
    }

    /// Division by an interval that excludes zero.
    pub fn div(self, other: Fi) -> Option<Fi> {
        if other.contains_zero() {
            return None;
        }
        let c = [self.lo / other.lo, self.lo / other.hi, self.hi / other.lo, self.hi / other.hi];
        let lo = c.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = c.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        Some(Fi { lo: down(lo), hi: up(hi) })
    }

    pub fn hull(self, other: Fi) -> Fi {
        Fi { lo: self.lo.min(other.lo), hi: self.hi.max(other.hi) }
    }
}

impl Add for Fi {
    type Output = Fi;
    #[inline]
    fn add(self, o: Fi) -> Fi {
        Fi { lo: down(self.lo + o.lo), hi: up(self.hi + o.hi) }
    }
}

impl Sub for Fi {
    type Output = Fi;
    #[inline]
    fn sub(self, o: Fi) -> Fi {
        Fi { lo: down(self.lo - o.hi), hi: up(self.hi - o.lo) }
    }
}

impl Neg for Fi {
    type Output = Fi;
    #[inline]
    fn neg(self) -> Fi {
        Fi { lo: -self.hi, hi: -self.lo }
    }
}

impl Mul for Fi {
    type Output = Fi;
    #[inline]
    fn mul(self, o: Fi) -> Fi {
        let a = self.lo * o.lo;
        let b = self.lo * o.hi;
        let c = self.hi * o.lo;
        let d = self.hi * o.hi;
        Fi { lo: down(a.min(b).min(c).min(d)), hi: up(a.max(b).max(c).max(d)) }
    }
}

/// Rectangular complex interval.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Fc {
    pub re: Fi,
    pub im: Fi,
}

impl Fc {
    pub const ZERO: Fc = Fc { re: Fi::ZERO, im: Fi::ZERO };

    pub fn new(re: Fi, im: Fi) -> Fc {
        Fc { re, im }
    }

    pub fn point(re: f64, im: f64) -> Fc {
        Fc { re: Fi::point(re), im: Fi::point(im) }
    }

    pub fn real(re: Fi) -> Fc {
        Fc { re, im: Fi::ZERO }
    }

    /// Enclosure of the modulus squared.
    pub fn norm_sqr(self) -> Fi {
        self.re.sqr() + self.im.sqr()
    }

    /// Upper bound on the modulus.
    pub fn abs_hi(self) -> f64 {
        let s = self.re.mag() * self.re.mag() + self.im.mag() * self.im.mag();
        up(libm::sqrt(up(s)))
    }

    /// Lower bound on the modulus.
    pub fn abs_lo(self) -> f64 {
        let s = self.re.mig() * self.re.mig() + self.im.mig() * self.im.mig();
        down(libm::sqrt(down(s))).max(0.0)
    }

    pub fn scale(self, k: Fi) -> Fc {
        Fc { re: self.re * k, im: self.im * k }
    }

    /// `self * conj(other)`.
    pub fn mul_conj(self, o: Fc) -> Fc {
        Fc { re: self.re * o.re + self.im * o.im, im: self.im * o.re - self.re * o.im }
    }
}

impl Add for Fc {
    type Output = Fc;
    #[inline]
    fn add(self, o: Fc) -> Fc {
        Fc { re: self.re + o.re, im: self.im + o.im }
    }
}

impl Sub for Fc {
    type Output = Fc;
    #[inline]
    fn sub(self, o: Fc) -> Fc {
        Fc { re: self.re - o.re, im: self.im - o.im }
    }
}

impl Mul for Fc {
    type Output = Fc;
    #[inline]
    fn mul(self, o: Fc) -> Fc {
        Fc { re: self.re * o.re - self.im * o.im, im: self.re * o.im + self.im * o.re }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, BigRat, Dyadic};
    use proptest::prelude::*;

    fn to_rat(v: f64) -> BigRat {
        Dyadic::from_f64(v).to_rational()
    }

    fn contains(i: Fi, q: &BigRat) -> bool {
        &to_rat(i.lo) <= q && q <= &to_rat(i.hi)
    }

    proptest! {
        #[test]
        fn ops_enclose_exact_results(a in -1e6f64..1e6, b in -1e6f64..1e6) {
            let (qa, qb) = (to_rat(a), to_rat(b));
            let (ia, ib) = (Fi::point(a), Fi::point(b));
            prop_assert!(contains(ia + ib, &(&qa + &qb)));
            prop_assert!(contains(ia - ib, &(&qa - &qb)));
            prop_assert!(contains(ia * ib, &(&qa * &qb)));
            prop_assert!(contains(ia.sqr(), &(&qa * &qa)));
            if b != 0.0 {
                prop_assert!(contains(ia.div(ib).unwrap(), &(&qa / &qb)));
            }
        }
    }

    #[test]
    fn third_is_enclosed() {
        let t = Fi::ONE.div(Fi::point(3.0)).unwrap();
        assert!(contains(t, &rat(1, 3)));
        assert!(t.width() < 1e-15);
    }

    #[test]
    fn complex_product() {
        let z = Fc::point(0.0, 1.0);
        let p = z * z;
        assert!(p.re.lo <= -1.0 && p.re.hi >= -1.0);
        assert!(p.im.contains_zero());
    }
}
