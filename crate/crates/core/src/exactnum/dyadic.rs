use core::cmp::Ordering;
use core::fmt;

use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::BigRat;

/// Rounding direction for inexact dyadic operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Round {
    Floor,
    Ceil,
}

impl Round {
    pub fn flip(self) -> Round {
        match self {
            Round::Floor => Round::Ceil,
            Round::Ceil => Round::Floor,
        }
    }
}

/// A dyadic rational `mant * 2^exp`.
///
/// Canonical form: the mantissa is odd, or the value is zero with `exp == 0`.
/// Structural equality is therefore value equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Dyadic {
    mant: BigInt,
    exp: i64,
}

fn pow2(k: u64) -> BigInt {
    BigInt::one() << k
}

fn div_round(num: &BigInt, den: &BigInt, dir: Round) -> BigInt {
    // den > 0 is required by callers
    match dir {
        Round::Floor => num.div_floor(den),
        Round::Ceil => -((-num).div_floor(den)),
    }
}

impl Dyadic {
    pub fn new(mant: BigInt, exp: i64) -> Self {
        if mant.is_zero() {
            return Dyadic { mant, exp: 0 };
        }
        let tz = mant.trailing_zeros().unwrap_or(0);
        if tz == 0 {
            Dyadic { mant, exp }
        } else {
            Dyadic { mant: mant >> tz, exp: exp + tz as i64 }
        }
    }

    pub fn zero() -> Self {
        Dyadic { mant: BigInt::zero(), exp: 0 }
    }

    pub fn one() -> Self {
        Dyadic { mant: BigInt::one(), exp: 0 }
    }

    pub fn from_i64(v: i64) -> Self {
        Dyadic::new(BigInt::from(v), 0)
    }

    pub fn from_int(v: &BigInt) -> Self {
        Dyadic::new(v.clone(), 0)
    }

    /// Exact conversion of a finite `f64`.
    pub fn from_f64(v: f64) -> Self {
        assert!(v.is_finite(), "non-finite f64 cannot be a dyadic");
        if v == 0.0 {
            return Dyadic::zero();
        }
        let bits = v.to_bits();
        let sign = if bits >> 63 == 1 { -1i64 } else { 1 };
        let exp_bits = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (m, e) = if exp_bits == 0 {
            (frac, -1074)
        } else {
            (frac | (1u64 << 52), exp_bits - 1075)
        };
        Dyadic::new(BigInt::from(m) * sign, e)
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mant
    }

    pub fn exponent(&self) -> i64 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn signum(&self) -> i32 {
        match self.mant.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn neg(&self) -> Self {
        Dyadic { mant: -&self.mant, exp: self.exp }
    }

    pub fn abs(&self) -> Self {
        Dyadic { mant: self.mant.abs(), exp: self.exp }
    }

    /// Multiply by `2^k` (exact).
    pub fn mul_pow2(&self, k: i64) -> Self {
        if self.is_zero() {
            return Dyadic::zero();
        }
        Dyadic { mant: self.mant.clone(), exp: self.exp + k }
    }

    /// Bit length of the mantissa.
    pub fn bits(&self) -> u64 {
        self.mant.bits()
    }

    /// `floor(log2 |self|)`; panics on zero.
    pub fn ilog2(&self) -> i64 {
        assert!(!self.is_zero(), "log2 of zero");
        self.exp + self.mant.bits() as i64 - 1
    }

    pub fn add(&self, other: &Dyadic) -> Dyadic {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let e = self.exp.min(other.exp);
        let a = &self.mant << (self.exp - e) as u64;
        let b = &other.mant << (other.exp - e) as u64;
        Dyadic::new(a + b, e)
    }

    pub fn sub(&self, other: &Dyadic) -> Dyadic {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Dyadic) -> Dyadic {
        if self.is_zero() || other.is_zero() {
            return Dyadic::zero();
        }
        Dyadic { mant: &self.mant * &other.mant, exp: self.exp + other.exp }
    }

    pub fn mul_int(&self, k: &BigInt) -> Dyadic {
        Dyadic::new(&self.mant * k, self.exp)
    }

    pub fn square(&self) -> Dyadic {
        self.mul(self)
    }

    /// Exact midpoint.
    pub fn midpoint(&self, other: &Dyadic) -> Dyadic {
        self.add(other).mul_pow2(-1)
    }

    /// Round to at most `prec` significant bits in direction `dir`.
    pub fn round(&self, prec: u32, dir: Round) -> Dyadic {
        let bits = self.mant.bits();
        if bits <= prec as u64 {
            return self.clone();
        }
        let shift = bits - prec as u64;
        let m = div_round(&self.mant, &pow2(shift), dir);
        Dyadic::new(m, self.exp + shift as i64)
    }

    /// Round to a multiple of `2^quantum` in direction `dir`.
    pub fn round_to_quantum(&self, quantum: i64, dir: Round) -> Dyadic {
        if self.is_zero() || self.exp >= quantum {
            return self.clone();
        }
        let shift = (quantum - self.exp) as u64;
        let m = div_round(&self.mant, &pow2(shift), dir);
        Dyadic::new(m, quantum)
    }

    /// Quotient rounded in direction `dir` to about `prec` bits. Panics on division by zero.
    pub fn div(&self, other: &Dyadic, prec: u32, dir: Round) -> Dyadic {
        assert!(!other.is_zero(), "dyadic division by zero");
        if self.is_zero() {
            return Dyadic::zero();
        }
        let (num, den) = if other.mant.is_negative() {
            (-&self.mant, -&other.mant)
        } else {
            (self.mant.clone(), other.mant.clone())
        };
        let s = (prec as i64 + den.bits() as i64 - num.bits() as i64 + 2).max(0);
        let num = num << s as u64;
        let q = div_round(&num, &den, dir);
        Dyadic::new(q, self.exp - other.exp - s)
    }

    /// Square root rounded in direction `dir`. Panics on negative input.
    pub fn sqrt(&self, prec: u32, dir: Round) -> Dyadic {
        assert!(!self.is_negative(), "square root of a negative dyadic");
        if self.is_zero() {
            return Dyadic::zero();
        }
        let mut s = (2 * prec as i64 + 4 - self.mant.bits() as i64).max(0);
        if (self.exp - s).rem_euclid(2) != 0 {
            s += 1;
        }
        let n = &self.mant << s as u64;
        let mut r = n.sqrt();
        if dir == Round::Ceil && &r * &r < n {
            r += 1;
        }
        Dyadic::new(r, (self.exp - s) / 2)
    }

    /// Directed rounding of a rational to about `prec` bits.
    pub fn from_rational(q: &BigRat, prec: u32, dir: Round) -> Dyadic {
        let num = q.numer();
        let den = q.denom();
        if num.is_zero() {
            return Dyadic::zero();
        }
        if den.is_one() {
            return Dyadic::from_int(num).round(prec, dir);
        }
        // Exact when the denominator is a power of two.
        if den.magnitude().count_ones() == 1 {
            let k = den.trailing_zeros().unwrap_or(0) as i64;
            return Dyadic::new(num.clone(), -k).round(prec, dir);
        }
        let s = (prec as i64 + den.bits() as i64 - num.bits() as i64 + 2).max(0);
        let q = div_round(&(num << s as u64), den, dir);
        Dyadic::new(q, -s)
    }

    pub fn to_rational(&self) -> BigRat {
        if self.exp >= 0 {
            BigRat::from_integer(&self.mant << self.exp as u64)
        } else {
            BigRat::new(self.mant.clone(), pow2((-self.exp) as u64))
        }
    }

    /// Nearest-ish `f64` (truncates the mantissa); saturates to +-inf or 0 out of range.
    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let bits = self.mant.bits();
        let (m, e) = if bits > 60 {
            let sh = bits - 60;
            (&self.mant >> sh, self.exp + sh as i64)
        } else {
            (self.mant.clone(), self.exp)
        };
        let mf = m.to_f64().unwrap_or(0.0);
        if e > 2000 {
            return mf.signum() * f64::INFINITY;
        }
        if e < -2200 {
            return 0.0;
        }
        let e = e as i32;
        // split the scaling so that intermediate powers stay in range
        let half = e / 2;
        mf * libm::exp2(half as f64) * libm::exp2((e - half) as f64)
    }

    /// Integer part towards `dir`.
    pub fn to_int(&self, dir: Round) -> BigInt {
        if self.exp >= 0 {
            &self.mant << self.exp as u64
        } else {
            div_round(&self.mant, &pow2((-self.exp) as u64), dir)
        }
    }

    /// Fixed-point decimal string with `digits` fractional digits, rounded in direction `dir`.
    pub fn to_decimal(&self, digits: u32, dir: Round) -> String {
        let scaled = self.to_rational() * BigRat::from_integer(num_traits::pow(BigInt::from(10), digits as usize));
        let v = match dir {
            Round::Floor => scaled.floor().to_integer(),
            Round::Ceil => scaled.ceil().to_integer(),
        };
        format_fixed(&v, digits)
    }

    /// Scientific notation with `sig` significant digits (round to nearest-ish, informational).
    pub fn to_sci(&self, sig: u32) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let q = self.to_rational();
        let neg = q.is_negative();
        let mut q = q.abs();
        let ten = BigRat::from_integer(BigInt::from(10));
        let mut e10: i64 = (self.ilog2() as f64 * core::f64::consts::LOG10_2) as i64;
        let scale = |k: i64| -> BigRat {
            if k >= 0 {
                BigRat::from_integer(num_traits::pow(BigInt::from(10), k as usize))
            } else {
                BigRat::new(BigInt::one(), num_traits::pow(BigInt::from(10), (-k) as usize))
            }
        };
        q /= scale(e10);
        while q >= ten {
            q /= &ten;
            e10 += 1;
        }
        while q < BigRat::one() {
            q *= &ten;
            e10 -= 1;
        }
        let m = (q * scale(sig as i64 - 1)).round().to_integer();
        let mut s: Vec<u8> = m.to_string().into_bytes();
        if s.len() > sig as usize {
            // rounding carried into a new digit
            s.truncate(sig as usize);
            e10 += 1;
        }
        let mut out = String::new();
        if neg {
            out.push('-');
        }
        out.push(s[0] as char);
        if s.len() > 1 {
            out.push('.');
            for &c in &s[1..] {
                out.push(c as char);
            }
        }
        out.push('e');
        out.push_str(&e10.to_string());
        out
    }
}

use alloc::string::ToString;

pub(crate) fn format_fixed(v: &BigInt, digits: u32) -> String {
    let neg = v.is_negative();
    let mut s = v.abs().to_string();
    let d = digits as usize;
    if d > 0 {
        while s.len() <= d {
            s.insert(0, '0');
        }
        s.insert(s.len() - d, '.');
    }
    if neg {
        s.insert(0, '-');
    }
    s
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let (sa, sb) = (self.signum(), other.signum());
        if sa != sb {
            return sa.cmp(&sb);
        }
        if sa == 0 {
            return Ordering::Equal;
        }
        // same sign: compare magnitudes by bit position first
        let la = self.ilog2();
        let lb = other.ilog2();
        if la != lb {
            let mag = la.cmp(&lb);
            return if sa > 0 { mag } else { mag.reverse() };
        }
        match self.sub(other).signum() {
            -1 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        }
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*2^{} (~{:e})", self.mant, self.exp, self.to_f64())
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp >= 0 {
            write!(f, "{}", &self.mant << self.exp as u64)
        } else {
            write!(f, "{}/2^{}", self.mant, -self.exp)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn canonical_form() {
        let a = Dyadic::new(BigInt::from(12), 0);
        assert_eq!(a.mantissa(), &BigInt::from(3));
        assert_eq!(a.exponent(), 2);
        assert_eq!(Dyadic::new(BigInt::zero(), 7), Dyadic::zero());
    }

    #[test]
    fn f64_round_trip() {
        for v in [0.1f64, -3.75, 1e-300, 6.02e23, f64::MIN_POSITIVE / 8.0] {
            assert_eq!(Dyadic::from_f64(v).to_f64(), v);
        }
    }

    #[test]
    fn directed_division_brackets_rational() {
        let one = Dyadic::one();
        let three = Dyadic::from_i64(3);
        let lo = one.div(&three, 64, Round::Floor);
        let hi = one.div(&three, 64, Round::Ceil);
        let third = rat(1, 3);
        assert!(lo.to_rational() < third && third < hi.to_rational());
        assert!(hi.sub(&lo).ilog2() <= -64);
    }

    #[test]
    fn sqrt_of_two() {
        let two = Dyadic::from_i64(2);
        let lo = two.sqrt(80, Round::Floor);
        let hi = two.sqrt(80, Round::Ceil);
        assert!(lo.square() < two && two < hi.square());
        assert_eq!(Dyadic::from_i64(9).sqrt(10, Round::Floor), Dyadic::from_i64(3));
        assert_eq!(Dyadic::from_i64(9).sqrt(10, Round::Ceil), Dyadic::from_i64(3));
    }

    #[test]
    fn ordering_across_scales() {
        let tiny = Dyadic::new(BigInt::from(1), -900);
        let neg = Dyadic::from_i64(-5);
        assert!(neg < Dyadic::zero());
        assert!(Dyadic::zero() < tiny);
        assert!(tiny < Dyadic::one());
        assert!(Dyadic::from_i64(-7) < neg);
    }

    #[test]
    fn decimal_rendering() {
        let x = Dyadic::from_rational(&rat(2, 3), 64, Round::Floor);
        assert_eq!(x.to_decimal(3, Round::Floor), "0.666");
        assert_eq!(x.to_decimal(3, Round::Ceil), "0.667");
        assert_eq!(Dyadic::from_i64(-2).to_decimal(2, Round::Ceil), "-2.00");
        assert_eq!(Dyadic::from_f64(0.00125).to_sci(2), "1.3e-3");
    }

    #[test]
    fn rounding_is_directed() {
        let x = Dyadic::from_rational(&rat(-1, 3), 200, Round::Floor);
        let lo = x.round(10, Round::Floor);
        let hi = x.round(10, Round::Ceil);
        assert!(lo <= x && x <= hi);
        assert!(lo.bits() <= 10 && hi.bits() <= 10);
    }
}
