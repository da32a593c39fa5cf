//! Exact and outward-rounded arithmetic.
//!
//! [`Dyadic`] numbers (`mantissa * 2^exponent`) are closed under addition and
//! multiplication, which keeps bisection exact. [`DyadicInterval`] rounds every
//! result outward to a working precision so that the exact value is always
//! enclosed. [`Fi`] is the same idea on `f64` for the hot inner loops of the
//! branch-and-bound.

mod dyadic;
mod elementary;
mod expr;
mod fint;
mod interval;
mod lambert;
mod rational;

pub use dyadic::{Dyadic, Round};
pub use elementary::{e_const, exp_minus_one, ln2, pi};
pub use expr::{interval_eval, interval_eval_adaptive, Expr};
pub use fint::{Fc, Fi};
pub use interval::DyadicInterval;
pub use lambert::{lambert_w, WValue};
pub use rational::{factorial, rat, BigRat};

use crate::{Error, Result};
use num_bigint::BigInt;

/// Starting precision for adaptive evaluation.
pub const DEFAULT_START_BITS: u32 = 64;
/// Default hard cap for adaptive precision doubling.
pub const DEFAULT_MAX_BITS: u32 = 8192;

/// Checks `(n/e)^n sqrt(2 pi n) < n! <= e (n/e)^n sqrt(n)` with certified intervals.
///
/// Both sides are rewritten without division by `e^n`, so the `n = 1` equality
/// case on the right is decided exactly.
pub fn factorial_bounds_check(n: u32) -> Result<bool> {
    factorial_bounds_check_with(n, DEFAULT_MAX_BITS)
}

pub fn factorial_bounds_check_with(n: u32, max_bits: u32) -> Result<bool> {
    if n == 0 {
        return Err(Error::InvalidInput("factorial bounds need n >= 1".into()));
    }
    let fact = factorial(n);
    let mut prec = DEFAULT_START_BITS;
    loop {
        let nn = DyadicInterval::from_int(&BigInt::from(n), prec);
        let nf = DyadicInterval::from_int(&fact, prec);
        let n_pow = DyadicInterval::from_int(&num_traits::pow(BigInt::from(n), n as usize), prec);

        // n^n sqrt(2 pi n) < n! e^n
        let lhs = n_pow.mul(&pi(prec).mul_u64(2).mul(&nn).sqrt()?);
        let rhs = nf.mul(&DyadicInterval::from_i64(n as i64, prec).exp());
        let lower = lhs.certainly_lt(&rhs);
        let lower_false = lhs.certainly_ge(&rhs);

        // n! e^(n-1) <= n^n sqrt(n)
        let lhs2 = nf.mul(&DyadicInterval::from_i64(n as i64 - 1, prec).exp());
        let rhs2 = n_pow.mul(&nn.sqrt()?);
        let upper = lhs2.certainly_le(&rhs2);
        let upper_false = lhs2.certainly_gt(&rhs2);

        if lower_false || upper_false {
            return Ok(false);
        }
        if lower && upper {
            return Ok(true);
        }
        if prec >= max_bits {
            return Err(Error::PrecisionExhausted(prec));
        }
        prec = (prec * 2).min(max_bits);
    }
}
