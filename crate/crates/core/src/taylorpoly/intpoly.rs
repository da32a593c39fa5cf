use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::ComplexPoint;
use crate::exactnum::{BigRat, Dyadic, DyadicInterval};

/// Dense univariate polynomial `scale * sum coeffs[k] x^k` with integer coefficients.
#[derive(Clone)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
    scale: BigRat,
}

impl IntPoly {
    /// Builds a polynomial, dropping trailing zero coefficients.
    ///
    /// Panics if `scale` is zero.
    pub fn new(mut coeffs: Vec<BigInt>, scale: BigRat) -> IntPoly {
        assert!(!scale.is_zero(), "IntPoly scale must be nonzero");
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs, scale }
    }

    pub fn from_ints(coeffs: Vec<BigInt>) -> IntPoly {
        IntPoly::new(coeffs, BigRat::one())
    }

    pub fn from_i64s(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_ints(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Clears denominators: the integer part is primitive and the scale is
    /// the (positive) content.
    pub fn from_rationals(q: &[BigRat]) -> IntPoly {
        let mut lcm = BigInt::one();
        for c in q {
            lcm = lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = q.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
        IntPoly::new(ints, BigRat::from_integer(BigInt::one()) / BigRat::from_integer(lcm)).normalized()
    }

    pub fn zero() -> IntPoly {
        IntPoly { coeffs: Vec::new(), scale: BigRat::one() }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn scale(&self) -> &BigRat {
        &self.scale
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Lowest index with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Same value with a primitive integer part; the sign of the scale is kept.
    pub fn normalized(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let g = self.content();
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
            scale: &self.scale * BigRat::from_integer(g),
        }
    }

    /// Exact rational coefficients `scale * coeffs[k]`.
    pub fn to_rationals(&self) -> Vec<BigRat> {
        self.coeffs.iter().map(|c| &self.scale * BigRat::from_integer(c.clone())).collect()
    }

    /// Integer part only (the scale dropped); same real roots and, for positive
    /// scale, the same sign pattern.
    pub fn integer_part(&self) -> IntPoly {
        IntPoly::from_ints(self.coeffs.clone())
    }

    pub fn derivative(&self) -> IntPoly {
        let coeffs = self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c * k).collect();
        IntPoly::new(coeffs, self.scale.clone())
    }

    /// `p(x) / x^k`, assuming the low coefficients vanish.
    pub fn shift_down(&self, k: usize) -> IntPoly {
        debug_assert!(self.coeffs.iter().take(k).all(|c| c.is_zero()));
        IntPoly::new(self.coeffs.iter().skip(k).cloned().collect(), self.scale.clone())
    }

    pub fn eval_rational(&self, x: &BigRat) -> BigRat {
        let mut acc = BigRat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRat::from_integer(c.clone());
        }
        acc * &self.scale
    }

    /// Exact value at a dyadic point.
    pub fn eval_dyadic(&self, x: &Dyadic) -> Dyadic {
        let mut acc = Dyadic::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(&Dyadic::from_int(c));
        }
        acc
    }

    /// Sign of the value at a dyadic point, taking the scale into account.
    pub fn sign_at(&self, x: &Dyadic) -> i32 {
        let s = self.eval_dyadic(x).signum();
        if self.scale.is_negative() {
            -s
        } else {
            s
        }
    }

    pub fn eval_interval(&self, x: &DyadicInterval) -> DyadicInterval {
        let prec = x.prec();
        let mut acc = DyadicInterval::zero(prec);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(&DyadicInterval::from_int(c, prec));
        }
        acc.mul(&DyadicInterval::from_rational(&self.scale, prec))
    }

    pub fn eval_complex(&self, z: &ComplexPoint) -> ComplexPoint {
        let prec = z.re.prec().max(z.im.prec());
        let mut acc = ComplexPoint::zero(prec);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(z).add(&ComplexPoint::real(DyadicInterval::from_int(c, prec)));
        }
        acc.scale(&DyadicInterval::from_rational(&self.scale, prec))
    }

    /// `f64` evaluation of the full value (scale included), for plotting.
    pub fn eval_f64(&self, x: f64) -> f64 {
        let q = self.to_rationals();
        let mut acc = 0.0;
        for c in q.iter().rev() {
            acc = acc * x + rat_to_f64(c);
        }
        acc
    }

    /// `f64` coefficients of the full value.
    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.to_rationals().iter().map(rat_to_f64).collect()
    }

    /// Value equality with another polynomial.
    pub fn same_value(&self, other: &IntPoly) -> bool {
        self.to_rationals() == other.to_rationals()
    }
}

impl PartialEq for IntPoly {
    fn eq(&self, other: &IntPoly) -> bool {
        self.same_value(other)
    }
}

impl Eq for IntPoly {}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) * [", self.scale)?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

pub(crate) fn rat_to_f64(q: &BigRat) -> f64 {
    Dyadic::from_rational(q, 60, crate::exactnum::Round::Floor).to_f64()
}

/// Dense rational polynomial helpers (ascending coefficients).
pub(crate) mod dense {
    use super::*;

    pub fn trim(mut p: Vec<BigRat>) -> Vec<BigRat> {
        while p.last().is_some_and(|c| c.is_zero()) {
            p.pop();
        }
        p
    }

    pub fn add(a: &[BigRat], b: &[BigRat]) -> Vec<BigRat> {
        let n = a.len().max(b.len());
        let mut out = vec![BigRat::zero(); n];
        for (i, c) in a.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in b.iter().enumerate() {
            out[i] += c;
        }
        trim(out)
    }

    pub fn sub(a: &[BigRat], b: &[BigRat]) -> Vec<BigRat> {
        let nb: Vec<BigRat> = b.iter().map(|c| -c).collect();
        add(a, &nb)
    }

    pub fn mul(a: &[BigRat], b: &[BigRat]) -> Vec<BigRat> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![BigRat::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        trim(out)
    }

    pub fn derivative(a: &[BigRat]) -> Vec<BigRat> {
        trim(a.iter().enumerate().skip(1).map(|(k, c)| c * BigRat::from_integer(BigInt::from(k))).collect())
    }

    pub fn monomial(c: BigRat, k: usize) -> Vec<BigRat> {
        let mut out = vec![BigRat::zero(); k + 1];
        out[k] = c;
        trim(out)
    }

    pub fn int_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn trailing_zeros_dropped() {
        let p = IntPoly::from_i64s(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(IntPoly::from_i64s(&[0, 0]).is_zero());
    }

    #[test]
    fn from_rationals_clears_denominators() {
        let p = IntPoly::from_rationals(&[rat(1, 2), rat(-1, 3), rat(2, 3)]);
        assert_eq!(p.coeffs(), &[BigInt::from(3), BigInt::from(-2), BigInt::from(4)]);
        assert_eq!(p.scale(), &rat(1, 6));
        let n = IntPoly::from_rationals(&[rat(2, 1), rat(-4, 1)]);
        assert_eq!(n.coeffs(), &[BigInt::from(1), BigInt::from(-2)]);
        assert_eq!(n.scale(), &rat(2, 1));
    }

    #[test]
    fn evaluation_agrees() {
        let p = IntPoly::new(vec![BigInt::from(3), BigInt::from(-2), BigInt::from(4)], rat(1, 6));
        let x = rat(3, 4);
        let expect = (rat(3, 1) - rat(2, 1) * &x + rat(4, 1) * &x * &x) / rat(6, 1);
        assert_eq!(p.eval_rational(&x), expect);
        let xi = DyadicInterval::from_rational(&x, 64);
        assert!(p.eval_interval(&xi).contains_rational(&expect));
        assert_eq!(p.sign_at(&Dyadic::from_f64(0.75)), 1);
    }

    #[test]
    fn derivative_of_cubic() {
        let p = IntPoly::from_i64s(&[5, 0, 3, 1]);
        assert_eq!(p.derivative(), IntPoly::from_i64s(&[0, 6, 3]));
    }
}
