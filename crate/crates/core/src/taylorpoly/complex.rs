use crate::exactnum::{Dyadic, DyadicInterval};
use crate::{Error, Result};

/// Rectangular complex enclosure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexPoint {
    pub re: DyadicInterval,
    pub im: DyadicInterval,
}

impl ComplexPoint {
    pub fn new(re: DyadicInterval, im: DyadicInterval) -> ComplexPoint {
        ComplexPoint { re, im }
    }

    pub fn zero(prec: u32) -> ComplexPoint {
        ComplexPoint { re: DyadicInterval::zero(prec), im: DyadicInterval::zero(prec) }
    }

    pub fn real(re: DyadicInterval) -> ComplexPoint {
        let prec = re.prec();
        ComplexPoint { re, im: DyadicInterval::zero(prec) }
    }

    pub fn from_f64(re: f64, im: f64, prec: u32) -> ComplexPoint {
        ComplexPoint { re: DyadicInterval::from_f64(re, prec), im: DyadicInterval::from_f64(im, prec) }
    }

    pub fn from_dyadic(re: Dyadic, im: Dyadic, prec: u32) -> ComplexPoint {
        ComplexPoint { re: DyadicInterval::point(re, prec), im: DyadicInterval::point(im, prec) }
    }

    pub fn add(&self, o: &ComplexPoint) -> ComplexPoint {
        ComplexPoint { re: self.re.add(&o.re), im: self.im.add(&o.im) }
    }

    pub fn sub(&self, o: &ComplexPoint) -> ComplexPoint {
        ComplexPoint { re: self.re.sub(&o.re), im: self.im.sub(&o.im) }
    }

    pub fn mul(&self, o: &ComplexPoint) -> ComplexPoint {
        ComplexPoint {
            re: self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
            im: self.re.mul(&o.im).add(&self.im.mul(&o.re)),
        }
    }

    pub fn scale(&self, k: &DyadicInterval) -> ComplexPoint {
        ComplexPoint { re: self.re.mul(k), im: self.im.mul(k) }
    }

    pub fn conj(&self) -> ComplexPoint {
        ComplexPoint { re: self.re.clone(), im: self.im.neg() }
    }

    pub fn norm_sqr(&self) -> DyadicInterval {
        self.re.sqr().add(&self.im.sqr())
    }

    pub fn abs(&self) -> DyadicInterval {
        self.norm_sqr().sqrt().expect("norm is nonnegative")
    }

    pub fn may_be_zero(&self) -> bool {
        self.re.contains_zero() && self.im.contains_zero()
    }

    pub fn recip(&self) -> Result<ComplexPoint> {
        if self.may_be_zero() {
            return Err(Error::Domain("reciprocal of a complex enclosure containing 0"));
        }
        let n = self.norm_sqr();
        Ok(ComplexPoint { re: self.re.div(&n)?, im: self.im.neg().div(&n)? })
    }

    pub fn div(&self, o: &ComplexPoint) -> Result<ComplexPoint> {
        Ok(self.mul(&o.recip()?))
    }

    /// `exp(z)` via `e^re (cos im + i sin im)`.
    pub fn exp(&self) -> ComplexPoint {
        let m = self.re.exp();
        ComplexPoint { re: m.mul(&self.im.cos()), im: m.mul(&self.im.sin()) }
    }

    /// `sin(z) = sin(re) cosh(im) + i cos(re) sinh(im)`.
    pub fn sin(&self) -> ComplexPoint {
        ComplexPoint {
            re: self.re.sin().mul(&self.im.cosh()),
            im: self.re.cos().mul(&self.im.sinh()),
        }
    }

    pub fn contains(&self, re: &Dyadic, im: &Dyadic) -> bool {
        self.re.contains(re) && self.im.contains(im)
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }
}
