//! Aberth-Ehrlich simultaneous iteration: double precision first, then
//! dyadic refinement.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exactnum::BigRat;
use crate::taylorpoly::{ComplexPoint, IntPoly};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy)]
pub struct ZeroOptions {
    pub max_iter: usize,
    /// Accept when `|p(z)| <= residual * sum |a_k| |z|^k` at every zero.
    pub residual: f64,
}

impl Default for ZeroOptions {
    fn default() -> Self {
        ZeroOptions { max_iter: 2000, residual: 1e-8 }
    }
}

/// All complex zeros of `p` (float-grade, not certified), sorted by real then
/// imaginary part.
pub fn complex_zeros(p: &IntPoly) -> Result<Vec<ComplexPoint>> {
    complex_zeros_with(p, ZeroOptions::default())
}

pub fn complex_zeros_with(p: &IntPoly, opts: ZeroOptions) -> Result<Vec<ComplexPoint>> {
    let deg = p.degree().unwrap_or(0);
    if deg == 0 {
        return Err(Error::InvalidInput("complex_zeros needs degree at least 1".into()));
    }
    // exact zeros at the origin are split off first
    let v = p.valuation().unwrap_or(0);
    let mut out: Vec<(f64, f64)> = alloc::vec![(0.0, 0.0); v];
    if deg > v {
        let q = p.shift_down(v);
        // p(z) = z^v s(z^d); solve s, then take d-th roots
        let d = q
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .fold(0usize, |g, (k, _)| num_integer::gcd(g, k))
            .max(1);
        let s: Vec<BigInt> = q.coeffs().iter().step_by(d).cloned().collect();
        let (a, r) = balanced_coeffs(&s);
        let scale = libm::ldexp(1.0, r);
        let start: Vec<Complex64> = aberth(&a, opts).into_iter().map(|w| w * scale).collect();
        for u in polished(&IntPoly::from_ints(s), &start, opts)? {
            let base = u.powf(1.0 / d as f64);
            for j in 0..d {
                let z = base * Complex64::from_polar(1.0, 2.0 * core::f64::consts::PI * j as f64 / d as f64);
                out.push((z.re, z.im));
            }
        }
    }
    out.sort_by(|x, y| x.0.total_cmp(&y.0).then(x.1.total_cmp(&y.1)));
    Ok(out.into_iter().map(|(re, im)| ComplexPoint::from_f64(re, im, 53)).collect())
}

fn point(z: &ComplexPoint, prec: u32) -> ComplexPoint {
    ComplexPoint::from_dyadic(z.re.mid(), z.im.mid(), prec)
}

/// Aberth steps on dyadic points at `prec` bits starting from `z`.
fn aberth_mp(s: &IntPoly, ds: &IntPoly, z: &mut [ComplexPoint], prec: u32, max_iter: usize) -> bool {
    let n = z.len();
    let one = ComplexPoint::from_f64(1.0, 0.0, prec);
    let stop = libm::ldexp(1.0, 24 - prec as i32);
    let (mut last, mut stalled) = (f64::INFINITY, 0);
    for _ in 0..max_iter {
        let mut max_step: f64 = 0.0;
        for i in 0..n {
            let p = s.eval_complex(&z[i]);
            if p.may_be_zero() {
                continue;
            }
            let Ok(ratio) = p.div(&ds.eval_complex(&z[i])) else { continue };
            let mut sum = ComplexPoint::zero(prec);
            for j in (0..n).filter(|&j| j != i) {
                if let Ok(r) = z[i].sub(&z[j]).recip() {
                    sum = sum.add(&r);
                }
            }
            let Ok(w) = ratio.div(&one.sub(&ratio.mul(&sum))) else { continue };
            let w = point(&w, prec);
            let next = point(&z[i].sub(&w), prec);
            let size = next.abs().mag().to_f64();
            if size > 0.0 {
                max_step = max_step.max(w.abs().mag().to_f64() / size);
            }
            z[i] = next;
        }
        if max_step < stop {
            return true;
        }
        // below this the steps are rounding noise
        if max_step < 1e-6 && max_step >= 0.5 * last {
            stalled += 1;
            if stalled >= 3 {
                return true;
            }
        } else {
            stalled = 0;
        }
        last = max_step;
    }
    false
}

/// Refines double-precision zeros of `s` in rising precision until two
/// consecutive precisions agree, then applies the residual test.
fn polished(s: &IntPoly, start: &[Complex64], opts: ZeroOptions) -> Result<Vec<Complex64>> {
    let ds = s.derivative();
    let mut prec = 128u32;
    let mut z: Vec<ComplexPoint> = start.iter().map(|u| ComplexPoint::from_f64(u.re, u.im, prec)).collect();
    let mut prev: Option<Vec<Complex64>> = None;
    while prec <= 4096 {
        let z_prec: Vec<ComplexPoint> = z.iter().map(|u| point(u, prec)).collect();
        z = z_prec;
        let done = aberth_mp(s, &ds, &mut z, prec, opts.max_iter.min(500));
        let cur: Vec<Complex64> = z
            .iter()
            .map(|u| {
                let (re, im) = u.to_f64();
                Complex64::new(re, im)
            })
            .collect();
        if done {
            if let Some(p) = &prev {
                let agree = p.iter().zip(&cur).all(|(a, b)| (a - b).norm() <= 1e-13 * b.norm().max(1e-300));
                if agree {
                    let abs = IntPoly::from_ints(s.coeffs().iter().map(|c| c.abs()).collect());
                    let tol = crate::exactnum::DyadicInterval::from_f64(opts.residual, prec);
                    for u in &z {
                        let r = s.eval_complex(u).abs();
                        let norm = abs.eval_interval(&u.abs());
                        if r.lo() > norm.mul(&tol).hi() {
                            return Err(Error::ConvergenceFailure(opts.max_iter));
                        }
                    }
                    return Ok(cur);
                }
            }
            prev = Some(cur);
        }
        prec *= 2;
    }
    Err(Error::ConvergenceFailure(opts.max_iter))
}

fn log2_abs(x: &BigInt) -> f64 {
    let bits = x.bits();
    if bits <= 64 {
        return libm::log2(x.magnitude().to_u64().unwrap_or(0) as f64);
    }
    let top = (x.magnitude() >> (bits - 64) as usize).to_u64().unwrap_or(0);
    libm::log2(top as f64) + (bits - 64) as f64
}

/// Monic coefficients of `p(2^r w)` with `2^r` near the Cauchy radius, so
/// the zeros in `w` have modulus about one whatever the coefficient range.
fn balanced_coeffs(c: &[BigInt]) -> (Vec<f64>, i32) {
    let n = c.len() - 1;
    let ln = log2_abs(&c[n]);
    let mut r = f64::NEG_INFINITY;
    for (k, ck) in c.iter().enumerate().take(n) {
        if !ck.is_zero() {
            r = r.max((log2_abs(ck) - ln) / (n - k) as f64);
        }
    }
    let r = if r.is_finite() { libm::round(r) as i32 } else { 0 };
    let a = c
        .iter()
        .enumerate()
        .map(|(k, ck)| {
            if ck.is_zero() {
                return 0.0;
            }
            let e = r as i64 * (k as i64 - n as i64);
            let p2 = BigInt::one() << e.unsigned_abs() as usize;
            let q = if e >= 0 { BigRat::new(ck * p2, c[n].clone()) } else { BigRat::new(ck.clone(), &c[n] * p2) };
            q.to_f64().unwrap_or(0.0)
        })
        .collect();
    (a, r)
}

fn eval(a: &[f64], z: Complex64) -> (Complex64, Complex64, f64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    let mut norm = 0.0;
    let r = z.norm();
    for c in a.iter().rev() {
        dp = dp * z + p;
        p = p * z + *c;
        norm = norm * r + c.abs();
    }
    (p, dp, norm)
}

/// Double-precision starting values; accuracy is settled by [`polished`].
fn aberth(a: &[f64], opts: ZeroOptions) -> Vec<Complex64> {
    let n = a.len() - 1;
    // Cauchy-type radius 2 max |a_k|^(1/(n-k))
    let mut radius: f64 = 0.0;
    for (k, c) in a.iter().enumerate().take(n) {
        if *c != 0.0 {
            radius = radius.max(libm::pow(c.abs(), 1.0 / (n - k) as f64));
        }
    }
    let radius = if radius > 0.0 { radius } else { 1.0 };
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let t = 2.0 * core::f64::consts::PI * k as f64 / n as f64 + 0.4;
            Complex64::from_polar(radius, t)
        })
        .collect();
    for _ in 0..opts.max_iter {
        let mut max_step: f64 = 0.0;
        for i in 0..n {
            let (p, dp, _) = eval(a, z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let mut s = Complex64::new(0.0, 0.0);
            for (j, zj) in z.iter().enumerate() {
                if j != i {
                    s += (z[i] - zj).inv();
                }
            }
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            if w.is_finite() {
                z[i] -= w;
                max_step = max_step.max(w.norm() / z[i].norm().max(1e-300));
            }
        }
        if max_step < 1e-15 {
            break;
        }
    }
    if z.iter().all(|w| w.is_finite()) {
        z
    } else {
        (0..n).map(|k| Complex64::from_polar(radius, 2.0 * core::f64::consts::PI * k as f64 / n as f64 + 0.4)).collect()
    }
}
