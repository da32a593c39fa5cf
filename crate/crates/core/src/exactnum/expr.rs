//! Closed-form expressions evaluated in interval arithmetic.

use alloc::rc::Rc;

use num_bigint::BigInt;

use super::{e_const, lambert_w, pi, BigRat, DyadicInterval};
use crate::{Error, Result};

/// Expression node. Subtrees are reference counted so shared parts form a DAG.
#[derive(Debug, Clone)]
pub enum Expr {
    Const(BigRat),
    E,
    Pi,
    Add(Rc<Expr>, Rc<Expr>),
    Sub(Rc<Expr>, Rc<Expr>),
    Mul(Rc<Expr>, Rc<Expr>),
    Div(Rc<Expr>, Rc<Expr>),
    Neg(Rc<Expr>),
    Sqrt(Rc<Expr>),
    Exp(Rc<Expr>),
    Ln(Rc<Expr>),
    Log10(Rc<Expr>),
    Sin(Rc<Expr>),
    Cos(Rc<Expr>),
    Cosh(Rc<Expr>),
    LambertW(Rc<Expr>),
    PowI(Rc<Expr>, u32),
}

impl Expr {
    pub fn int(v: i64) -> Expr {
        Expr::Const(BigRat::from_integer(BigInt::from(v)))
    }

    pub fn rat(q: BigRat) -> Expr {
        Expr::Const(q)
    }

    fn rc(self) -> Rc<Expr> {
        Rc::new(self)
    }

    pub fn add(self, o: Expr) -> Expr {
        Expr::Add(self.rc(), o.rc())
    }
    pub fn sub(self, o: Expr) -> Expr {
        Expr::Sub(self.rc(), o.rc())
    }
    pub fn mul(self, o: Expr) -> Expr {
        Expr::Mul(self.rc(), o.rc())
    }
    pub fn div(self, o: Expr) -> Expr {
        Expr::Div(self.rc(), o.rc())
    }
    pub fn neg(self) -> Expr {
        Expr::Neg(self.rc())
    }
    pub fn sqrt(self) -> Expr {
        Expr::Sqrt(self.rc())
    }
    pub fn exp(self) -> Expr {
        Expr::Exp(self.rc())
    }
    pub fn ln(self) -> Expr {
        Expr::Ln(self.rc())
    }
    pub fn log10(self) -> Expr {
        Expr::Log10(self.rc())
    }
    pub fn sin(self) -> Expr {
        Expr::Sin(self.rc())
    }
    pub fn cos(self) -> Expr {
        Expr::Cos(self.rc())
    }
    pub fn cosh(self) -> Expr {
        Expr::Cosh(self.rc())
    }
    pub fn lambert_w(self) -> Expr {
        Expr::LambertW(self.rc())
    }
    pub fn powi(self, k: u32) -> Expr {
        Expr::PowI(self.rc(), k)
    }
}

/// Evaluates `expr` with working precision `prec`.
pub fn interval_eval(expr: &Expr, prec: u32) -> Result<DyadicInterval> {
    let un = |a: &Rc<Expr>| interval_eval(a, prec);
    Ok(match expr {
        Expr::Const(q) => DyadicInterval::from_rational(q, prec),
        Expr::E => e_const(prec),
        Expr::Pi => pi(prec),
        Expr::Add(a, b) => un(a)?.add(&un(b)?),
        Expr::Sub(a, b) => un(a)?.sub(&un(b)?),
        Expr::Mul(a, b) => un(a)?.mul(&un(b)?),
        Expr::Div(a, b) => un(a)?.div(&un(b)?)?,
        Expr::Neg(a) => un(a)?.neg(),
        Expr::Sqrt(a) => {
            let v = un(a)?;
            if v.hi().is_negative() {
                return Err(Error::Domain("square root of a negative number"));
            }
            if v.lo().is_negative() {
                return Err(Error::Indeterminate);
            }
            v.sqrt()?
        }
        Expr::Exp(a) => un(a)?.exp(),
        Expr::Ln(a) => un(a)?.ln()?,
        Expr::Log10(a) => un(a)?.log10()?,
        Expr::Sin(a) => un(a)?.sin(),
        Expr::Cos(a) => un(a)?.cos(),
        Expr::Cosh(a) => un(a)?.cosh(),
        Expr::LambertW(a) => lambert_w(&un(a)?, prec)?.value,
        Expr::PowI(a, k) => un(a)?.powi(*k),
    })
}

/// Doubles the working precision from 64 bits until the enclosure is narrower
/// than `target_width`, failing with `PrecisionExhausted` past `max_bits`.
pub fn interval_eval_adaptive(expr: &Expr, target_width: &BigRat, max_bits: u32) -> Result<DyadicInterval> {
    let mut prec = 64u32;
    loop {
        match interval_eval(expr, prec) {
            Ok(v) if &v.width().to_rational() <= target_width => return Ok(v),
            Ok(_) | Err(Error::Indeterminate) | Err(Error::Domain(_)) if prec < max_bits => {}
            Ok(_) | Err(Error::Indeterminate) => return Err(Error::PrecisionExhausted(max_bits)),
            Err(e) => return Err(e),
        }
        prec = (prec * 2).min(max_bits);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use num_traits::Signed;

    fn delta(rho: BigRat) -> Expr {
        // (e*rho - 1) / (2 sqrt(e^2 + 1))
        let num = Expr::E.mul(Expr::rat(rho)).sub(Expr::int(1));
        let den = Expr::int(2).mul(Expr::E.powi(2).add(Expr::int(1)).sqrt());
        num.div(den)
    }

    #[test]
    fn delta_matches_reference() {
        let v = interval_eval_adaptive(&delta(rat(95, 100)), &rat(1, 10i64.pow(18)), 8192).unwrap();
        let refv = BigRat::new(
            BigInt::parse_bytes(b"273162371546881129040844376564", 10).unwrap(),
            num_traits::pow(BigInt::from(10), 30),
        );
        let err = (v.mid().to_rational() - refv).abs();
        assert!(err < rat(1, 10i64.pow(18)));
    }

    #[test]
    fn sqrt_of_negative_is_domain_error() {
        let e = Expr::int(-1).sqrt();
        assert!(matches!(interval_eval(&e, 64), Err(Error::Domain(_))));
    }

    #[test]
    fn width_target_is_met() {
        let e = Expr::Pi.mul(Expr::E).ln();
        let tiny = rat(1, 1) / num_traits::pow(BigInt::from(2), 300);
        let v = interval_eval_adaptive(&e, &tiny, 8192).unwrap();
        assert!(v.width().to_rational() <= tiny);
    }

    #[test]
    fn exhausted_cap_is_reported() {
        let e = Expr::Pi;
        let tiny = rat(1, 1) / num_traits::pow(BigInt::from(2), 400);
        assert!(matches!(interval_eval_adaptive(&e, &tiny, 128), Err(Error::PrecisionExhausted(_))));
    }
}
