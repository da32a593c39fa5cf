use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{BigRat, Dyadic, Round};
use crate::{Error, Result};

/// A closed interval with dyadic endpoints.
///
/// Every operation rounds its result outward to `prec` significant bits, so
/// the interval always contains the exact result of the operation applied to
/// any points of the operands.
#[derive(Clone, PartialEq, Eq)]
pub struct DyadicInterval {
    lo: Dyadic,
    hi: Dyadic,
    prec: u32,
}

impl DyadicInterval {
    pub fn new(lo: Dyadic, hi: Dyadic, prec: u32) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        DyadicInterval { lo, hi, prec }
    }

    /// Outward rounding of `[lo, hi]` to `prec` bits.
    pub fn rounded(lo: Dyadic, hi: Dyadic, prec: u32) -> Self {
        DyadicInterval::new(lo.round(prec, Round::Floor), hi.round(prec, Round::Ceil), prec)
    }

    pub fn point(v: Dyadic, prec: u32) -> Self {
        DyadicInterval { lo: v.clone(), hi: v, prec }
    }

    pub fn zero(prec: u32) -> Self {
        DyadicInterval::point(Dyadic::zero(), prec)
    }

    pub fn one(prec: u32) -> Self {
        DyadicInterval::point(Dyadic::one(), prec)
    }

    pub fn from_i64(v: i64, prec: u32) -> Self {
        DyadicInterval::point(Dyadic::from_i64(v), prec)
    }

    /// Exact integer point (no rounding, whatever its size).
    pub fn from_int(v: &BigInt, prec: u32) -> Self {
        DyadicInterval::point(Dyadic::from_int(v), prec)
    }

    pub fn from_f64(v: f64, prec: u32) -> Self {
        DyadicInterval::point(Dyadic::from_f64(v), prec)
    }

    pub fn from_rational(q: &BigRat, prec: u32) -> Self {
        DyadicInterval {
            lo: Dyadic::from_rational(q, prec, Round::Floor),
            hi: Dyadic::from_rational(q, prec, Round::Ceil),
            prec,
        }
    }

    pub fn lo(&self) -> &Dyadic {
        &self.lo
    }

    pub fn hi(&self) -> &Dyadic {
        &self.hi
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn with_prec(&self, prec: u32) -> Self {
        DyadicInterval::rounded(self.lo.clone(), self.hi.clone(), prec)
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> Dyadic {
        self.hi.sub(&self.lo)
    }

    pub fn mid(&self) -> Dyadic {
        self.lo.midpoint(&self.hi)
    }

    /// Largest absolute value in the interval.
    pub fn mag(&self) -> Dyadic {
        let a = self.lo.abs();
        let b = self.hi.abs();
        if a > b {
            a
        } else {
            b
        }
    }

    /// Smallest absolute value in the interval.
    pub fn mig(&self) -> Dyadic {
        if self.contains_zero() {
            Dyadic::zero()
        } else if self.lo.is_positive() {
            self.lo.clone()
        } else {
            self.hi.abs()
        }
    }

    pub fn contains(&self, v: &Dyadic) -> bool {
        &self.lo <= v && v <= &self.hi
    }

    pub fn contains_rational(&self, q: &BigRat) -> bool {
        &self.lo.to_rational() <= q && q <= &self.hi.to_rational()
    }

    pub fn contains_interval(&self, other: &DyadicInterval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn overlaps(&self, other: &DyadicInterval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn hull(&self, other: &DyadicInterval) -> Self {
        DyadicInterval {
            lo: core::cmp::min(self.lo.clone(), other.lo.clone()),
            hi: core::cmp::max(self.hi.clone(), other.hi.clone()),
            prec: self.prec.max(other.prec),
        }
    }

    pub fn intersect(&self, other: &DyadicInterval) -> Option<Self> {
        let lo = core::cmp::max(self.lo.clone(), other.lo.clone());
        let hi = core::cmp::min(self.hi.clone(), other.hi.clone());
        (lo <= hi).then(|| DyadicInterval { lo, hi, prec: self.prec.max(other.prec) })
    }

    /// Certain sign: `Some(Less)` if the whole interval is negative, and so on;
    /// `Some(Equal)` only for the exact point zero.
    pub fn sign(&self) -> Option<Ordering> {
        if self.hi.is_negative() {
            Some(Ordering::Less)
        } else if self.lo.is_positive() {
            Some(Ordering::Greater)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(Ordering::Equal)
        } else {
            None
        }
    }

    /// Certified comparison; overlapping intervals are indeterminate.
    pub fn cmp_certain(&self, other: &DyadicInterval) -> Result<Ordering> {
        if self.hi < other.lo {
            Ok(Ordering::Less)
        } else if self.lo > other.hi {
            Ok(Ordering::Greater)
        } else if self.is_point() && other.is_point() && self.lo == other.lo {
            Ok(Ordering::Equal)
        } else {
            Err(Error::Indeterminate)
        }
    }

    pub fn certainly_lt(&self, other: &DyadicInterval) -> bool {
        self.hi < other.lo
    }

    pub fn certainly_le(&self, other: &DyadicInterval) -> bool {
        self.hi <= other.lo
    }

    pub fn certainly_gt(&self, other: &DyadicInterval) -> bool {
        self.lo > other.hi
    }

    pub fn certainly_ge(&self, other: &DyadicInterval) -> bool {
        self.lo >= other.hi
    }

    fn p(&self, other: &DyadicInterval) -> u32 {
        self.prec.max(other.prec)
    }

    pub fn neg(&self) -> Self {
        DyadicInterval { lo: self.hi.neg(), hi: self.lo.neg(), prec: self.prec }
    }

    pub fn abs(&self) -> Self {
        DyadicInterval { lo: self.mig(), hi: self.mag(), prec: self.prec }
    }

    pub fn add(&self, other: &DyadicInterval) -> Self {
        DyadicInterval::rounded(self.lo.add(&other.lo), self.hi.add(&other.hi), self.p(other))
    }

    pub fn sub(&self, other: &DyadicInterval) -> Self {
        DyadicInterval::rounded(self.lo.sub(&other.hi), self.hi.sub(&other.lo), self.p(other))
    }

    pub fn mul(&self, other: &DyadicInterval) -> Self {
        let prec = self.p(other);
        if self.is_point() && other.is_point() {
            let v = self.lo.mul(&other.lo);
            return DyadicInterval::rounded(v.clone(), v, prec);
        }
        let c = [
            self.lo.mul(&other.lo),
            self.lo.mul(&other.hi),
            self.hi.mul(&other.lo),
            self.hi.mul(&other.hi),
        ];
        let lo = c.iter().min().cloned().unwrap_or_else(Dyadic::zero);
        let hi = c.iter().max().cloned().unwrap_or_else(Dyadic::zero);
        DyadicInterval::rounded(lo, hi, prec)
    }

    pub fn sqr(&self) -> Self {
        let a = self.mig();
        let b = self.mag();
        DyadicInterval::rounded(a.square(), b.square(), self.prec)
    }

    pub fn mul_u64(&self, k: u64) -> Self {
        let k = Dyadic::from_int(&BigInt::from(k));
        DyadicInterval::rounded(self.lo.mul(&k), self.hi.mul(&k), self.prec)
    }

    pub fn mul_pow2(&self, k: i64) -> Self {
        DyadicInterval { lo: self.lo.mul_pow2(k), hi: self.hi.mul_pow2(k), prec: self.prec }
    }

    pub fn div_u64(&self, k: u64) -> Self {
        assert!(k > 0);
        let k = Dyadic::from_int(&BigInt::from(k));
        DyadicInterval::new(
            self.lo.div(&k, self.prec, Round::Floor),
            self.hi.div(&k, self.prec, Round::Ceil),
            self.prec,
        )
    }

    pub fn recip(&self) -> Result<Self> {
        if self.contains_zero() {
            return Err(Error::Domain("reciprocal of an interval containing zero"));
        }
        let one = Dyadic::one();
        Ok(DyadicInterval::new(
            one.div(&self.hi, self.prec, Round::Floor),
            one.div(&self.lo, self.prec, Round::Ceil),
            self.prec,
        ))
    }

    pub fn div(&self, other: &DyadicInterval) -> Result<Self> {
        if other.contains_zero() {
            return Err(Error::Domain("division by an interval containing zero"));
        }
        let prec = self.p(other);
        let mut lo: Option<Dyadic> = None;
        let mut hi: Option<Dyadic> = None;
        for a in [&self.lo, &self.hi] {
            for b in [&other.lo, &other.hi] {
                let l = a.div(b, prec, Round::Floor);
                let h = a.div(b, prec, Round::Ceil);
                lo = Some(match lo {
                    Some(x) if x <= l => x,
                    _ => l,
                });
                hi = Some(match hi {
                    Some(x) if x >= h => x,
                    _ => h,
                });
            }
        }
        Ok(DyadicInterval::new(lo.unwrap_or_else(Dyadic::zero), hi.unwrap_or_else(Dyadic::zero), prec))
    }

    pub fn powi(&self, k: u32) -> Self {
        if k == 0 {
            return DyadicInterval::one(self.prec);
        }
        if k % 2 == 0 {
            let half = self.powi(k / 2);
            return half.sqr();
        }
        let mut acc = self.clone();
        let rest = self.powi(k - 1);
        acc = acc.mul(&rest);
        acc
    }

    /// Square root; the part of the interval below zero is discarded.
    pub fn sqrt(&self) -> Result<Self> {
        if self.hi.is_negative() {
            return Err(Error::Domain("square root of a negative interval"));
        }
        let lo = if self.lo.is_positive() { self.lo.sqrt(self.prec, Round::Floor) } else { Dyadic::zero() };
        Ok(DyadicInterval::new(lo, self.hi.sqrt(self.prec, Round::Ceil), self.prec))
    }

    /// Adds `[-r, r]`.
    pub fn widen(&self, r: &Dyadic) -> Self {
        let r = r.abs();
        DyadicInterval::rounded(self.lo.sub(&r), self.hi.add(&r), self.prec)
    }

    pub fn max(&self, other: &DyadicInterval) -> Self {
        DyadicInterval {
            lo: core::cmp::max(self.lo.clone(), other.lo.clone()),
            hi: core::cmp::max(self.hi.clone(), other.hi.clone()),
            prec: self.p(other),
        }
    }

    pub fn min(&self, other: &DyadicInterval) -> Self {
        DyadicInterval {
            lo: core::cmp::min(self.lo.clone(), other.lo.clone()),
            hi: core::cmp::min(self.hi.clone(), other.hi.clone()),
            prec: self.p(other),
        }
    }

    /// Approximate midpoint as `f64`, for reporting only.
    pub fn to_f64(&self) -> f64 {
        self.mid().to_f64()
    }

    pub fn is_zero_point(&self) -> bool {
        self.lo.is_zero() && self.hi.is_zero()
    }
}

impl fmt::Debug for DyadicInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:e}, {:e}]@{}", self.lo.to_f64(), self.hi.to_f64(), self.prec)
    }
}

impl fmt::Display for DyadicInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo.to_sci(17), self.hi.to_sci(17))
    }
}

impl DyadicInterval {
    /// Sum of a slice (empty sum is zero).
    pub fn sum<'a>(items: impl IntoIterator<Item = &'a DyadicInterval>, prec: u32) -> Self {
        let mut acc = DyadicInterval::zero(prec);
        for it in items {
            acc = acc.add(it);
        }
        acc
    }

    pub fn is_nonneg(&self) -> bool {
        !self.lo.is_negative()
    }

    pub fn certainly_positive(&self) -> bool {
        self.lo.is_positive()
    }

    pub fn certainly_negative(&self) -> bool {
        self.hi.is_negative()
    }

    pub fn lo_is_zero(&self) -> bool {
        self.lo.is_zero()
    }
}

impl Default for DyadicInterval {
    fn default() -> Self {
        DyadicInterval::zero(64)
    }
}

impl DyadicInterval {
    pub fn from_bigint_ratio(num: &BigInt, den: &BigInt, prec: u32) -> Self {
        assert!(!den.is_zero());
        DyadicInterval::from_rational(&BigRat::new(num.clone(), den.clone()), prec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use proptest::prelude::*;

    fn iv(q: &BigRat) -> DyadicInterval {
        DyadicInterval::from_rational(q, 53)
    }

    proptest! {
        #[test]
        fn arithmetic_contains_exact_rational(
            a in -1000i64..1000, b in 1i64..500, c in -1000i64..1000, d in 1i64..500
        ) {
            let x = rat(a, b);
            let y = rat(c, d);
            let ix = iv(&x);
            let iy = iv(&y);
            prop_assert!(ix.add(&iy).contains_rational(&(&x + &y)));
            prop_assert!(ix.sub(&iy).contains_rational(&(&x - &y)));
            prop_assert!(ix.mul(&iy).contains_rational(&(&x * &y)));
            if c != 0 {
                prop_assert!(ix.div(&iy).unwrap().contains_rational(&(&x / &y)));
            }
            prop_assert!(ix.sqr().contains_rational(&(&x * &x)));
            prop_assert!(ix.powi(5).contains_rational(&(&x * &x * &x * &x * &x)));
        }

        #[test]
        fn higher_precision_is_nested(a in 1i64..10_000, b in 1i64..10_000) {
            let q = rat(a, b);
            let lo = DyadicInterval::from_rational(&q, 40);
            let hi = DyadicInterval::from_rational(&q, 120);
            prop_assert!(lo.contains_interval(&hi));
            let s_lo = lo.sqrt().unwrap();
            let s_hi = hi.sqrt().unwrap();
            prop_assert!(s_lo.contains_interval(&s_hi.with_prec(40)) || s_lo.overlaps(&s_hi));
        }
    }

    #[test]
    fn division_by_zero_interval_is_domain_error() {
        let a = DyadicInterval::one(64);
        let z = DyadicInterval::new(Dyadic::from_i64(-1), Dyadic::one(), 64);
        assert!(matches!(a.div(&z), Err(Error::Domain(_))));
        assert!(matches!(DyadicInterval::from_i64(-4, 64).sqrt(), Err(Error::Domain(_))));
    }

    #[test]
    fn comparisons_refuse_to_guess() {
        let a = DyadicInterval::new(Dyadic::from_i64(0), Dyadic::from_i64(2), 64);
        let b = DyadicInterval::new(Dyadic::from_i64(1), Dyadic::from_i64(3), 64);
        assert_eq!(a.cmp_certain(&b), Err(Error::Indeterminate));
        let c = DyadicInterval::from_i64(5, 64);
        assert_eq!(a.cmp_certain(&c), Ok(Ordering::Less));
    }

    #[test]
    fn sqrt_two_squared_encloses_two() {
        let s = DyadicInterval::from_i64(2, 64).sqrt().unwrap();
        assert!(s.sqr().contains(&Dyadic::from_i64(2)));
        assert!(s.contains_rational(&rat(141421356, 100000000)) == false);
        assert!(s.to_f64() > 1.414213 && s.to_f64() < 1.414214);
    }
}
