//! Membership in the stability regions, imaginary-axis slices, radial slices,
//! boundary traces near the imaginary axis, and float-grade complex zeros.

mod zeros;

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::exactnum::{e_const, pi, BigRat, Dyadic, DyadicInterval};
use crate::rootiso::{isolate_real_roots, refine_relative, smallest_abs_root, RootBox, RootDomain};
use crate::taylorpoly::{
    e_polynomial, membership_poly, partial_sum, ray_restrict, scaled_partial_sum, ComplexPoint, IntPoly, RatPoly2,
    RayDirection,
};
use crate::{Error, Result};

pub use zeros::{complex_zeros, complex_zeros_with, ZeroOptions};

/// Outcome of a certified membership test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Membership {
    Inside,
    Outside,
    /// The sign of `G_n` is zero or could not be decided; `width` is the width
    /// of the final enclosure of `G_n` (zero when it vanishes exactly).
    Boundary { width: Dyadic },
}

/// Precision cap used by [`contains`] before reporting `Boundary`.
pub const MEMBERSHIP_MAX_BITS: u32 = 2048;

/// Classifies `z` against `U_n` (or `S_n` when `scaled`).
///
/// Point inputs are decided in exact rational arithmetic; proper boxes use
/// interval evaluation with precision doubling up to [`MEMBERSHIP_MAX_BITS`].
pub fn contains(n: u32, z: &ComplexPoint, scaled: bool) -> Result<Membership> {
    let p = if scaled { scaled_partial_sum(n)? } else { partial_sum(n)? };
    if z.re.is_point() && z.im.is_point() {
        let g = exact_modulus_sq_minus_one(&p, &z.re.lo().to_rational(), &z.im.lo().to_rational());
        return Ok(match g.cmp(&BigRat::zero()) {
            core::cmp::Ordering::Less => Membership::Inside,
            core::cmp::Ordering::Greater => Membership::Outside,
            core::cmp::Ordering::Equal => Membership::Boundary { width: Dyadic::zero() },
        });
    }
    let mut prec = z.re.prec().max(z.im.prec()).max(64);
    loop {
        let zz = ComplexPoint::new(z.re.with_prec(prec), z.im.with_prec(prec));
        let g = p.eval_complex(&zz).norm_sqr().sub(&DyadicInterval::one(prec));
        if g.certainly_negative() {
            return Ok(Membership::Inside);
        }
        if g.certainly_positive() {
            return Ok(Membership::Outside);
        }
        if prec >= MEMBERSHIP_MAX_BITS {
            return Ok(Membership::Boundary { width: g.width() });
        }
        prec *= 2;
    }
}

/// `|p(x + iy)|^2 - 1` in exact arithmetic.
fn exact_modulus_sq_minus_one(p: &IntPoly, x: &BigRat, y: &BigRat) -> BigRat {
    let (mut re, mut im) = (BigRat::zero(), BigRat::zero());
    for c in p.coeffs().iter().rev() {
        let nr = &re * x - &im * y + BigRat::from_integer(c.clone());
        let ni = &re * y + &im * x;
        re = nr;
        im = ni;
    }
    let s2 = p.scale() * p.scale();
    (re.clone() * re + im.clone() * im) * s2 - BigRat::one()
}

/// One closed component `[lo, hi]` of `{t >= 0 : p(t) <= 0}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SliceInterval {
    pub lo: RootBox,
    pub hi: RootBox,
    /// A single point where `p` touches zero from above.
    pub degenerate: bool,
}

/// Ordered components of `V_n^+ = {y >= 0 : E_n(y) <= 0}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SliceDecomposition {
    pub n: u32,
    pub intervals: Vec<SliceInterval>,
}

impl SliceDecomposition {
    /// Largest element of the set.
    pub fn max(&self) -> &RootBox {
        &self.intervals.last().expect("V_n^+ always contains 0").hi
    }
}

/// Components of `{t >= 0 : p(t) <= 0}` for `p` with `p(0) = 0` and positive
/// leading coefficient.
pub fn nonpositive_components(p: &IntPoly) -> Vec<SliceInterval> {
    let roots = isolate_real_roots(p, &RootDomain::nonnegative());
    let mut gaps_negative = Vec::with_capacity(roots.len());
    for w in roots.windows(2) {
        let t = w[0].hi.midpoint(&w[1].lo);
        gaps_negative.push(p.sign_at(&t) < 0);
    }
    // beyond the last root p is positive
    gaps_negative.push(false);
    let mut out = Vec::new();
    let mut k = 0;
    while k < roots.len() {
        let start = k;
        while gaps_negative[k] {
            k += 1;
        }
        out.push(SliceInterval { lo: roots[start].clone(), hi: roots[k].clone(), degenerate: start == k });
        k += 1;
    }
    out
}

/// Decomposition of `V_n^+` from the real roots of `E_n`.
pub fn v_plus(n: u32) -> Result<SliceDecomposition> {
    let e = e_polynomial(n)?;
    Ok(SliceDecomposition { n, intervals: nonpositive_components(&e) })
}

/// `max V_n^+`, the largest real root of `E_n`.
pub fn max_v_plus(n: u32) -> Result<RootBox> {
    let e = e_polynomial(n)?;
    let roots = isolate_real_roots(&e, &RootDomain::nonnegative());
    Ok(roots.last().cloned().expect("E_n(0) = 0"))
}

/// Shape of the component of `V_n^+` that contains the origin.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OriginClass {
    Singleton,
    PositiveInterval,
}

/// Decided by the sign of the lowest nonconstant coefficient of `E_n`.
pub fn origin_component_class(n: u32) -> Result<OriginClass> {
    let e = e_polynomial(n)?;
    let v = e.valuation().expect("E_n is not zero");
    let sign: BigInt = e.coeffs()[v].signum() * BigInt::from(if e.scale().is_negative() { -1 } else { 1 });
    Ok(if sign.is_positive() { OriginClass::Singleton } else { OriginClass::PositiveInterval })
}

/// Smallest-modulus boundary abscissa at one height.
#[derive(Debug, Clone, PartialEq)]
pub enum TraceValue {
    /// No real `x` with `|P(x + iy)| = 1`.
    NoRoot,
    /// The root is exactly zero.
    Zero,
    /// `sign * 10^log10_abs`, with the enclosure of `log10 |x|`.
    Signed { sign: i8, log10_abs: DyadicInterval, root: RootBox },
}

impl TraceValue {
    /// `sign(x) * (-1 / log10 |x|)` in double precision; 0 for an exact zero root.
    pub fn inverse_log_scale(&self) -> Option<f64> {
        match self {
            TraceValue::NoRoot => None,
            TraceValue::Zero => Some(0.0),
            TraceValue::Signed { sign, log10_abs, .. } => Some(*sign as f64 * (-1.0 / log10_abs.to_f64())),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TraceSample {
    pub y: Dyadic,
    pub value: TraceValue,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryTrace {
    pub n: u32,
    pub samples: Vec<TraceSample>,
}

/// Relative refinement applied before taking `log10`; 30 bits give about
/// `1.3e-9` in the logarithm.
const TRACE_REL_BITS: u32 = 30;

/// `x_n^min(y)` for one dyadic `y` against the unscaled `G_n`.
pub fn trace_point(g: &RatPoly2, y: &Dyadic) -> Result<TraceValue> {
    let p = g.at_y(&y.to_rational());
    if p.is_zero() {
        return Ok(TraceValue::Zero);
    }
    let b = match smallest_abs_root(&p) {
        None => return Ok(TraceValue::NoRoot),
        Some(b) => b,
    };
    if b.is_point() && b.lo.is_zero() {
        return Ok(TraceValue::Zero);
    }
    let b = refine_relative(&b, &p, TRACE_REL_BITS);
    let sign: i8 = if b.hi.is_positive() { 1 } else { -1 };
    let (a, c) = if sign > 0 { (b.lo.clone(), b.hi.clone()) } else { (b.hi.neg(), b.lo.neg()) };
    let log10_abs = DyadicInterval::new(a, c, 64).log10()?;
    Ok(TraceValue::Signed { sign, log10_abs, root: b })
}

/// `x_n^min` at each requested height.
pub fn boundary_trace(n: u32, ys: &[Dyadic]) -> Result<BoundaryTrace> {
    let g = membership_poly(n, false)?;
    let mut samples = Vec::with_capacity(ys.len());
    for y in ys {
        if y.is_negative() {
            return Err(crate::Error::InvalidInput(alloc::format!("negative height {}", y.to_f64())));
        }
        samples.push(TraceSample { y: y.clone(), value: trace_point(&g, y)? });
    }
    Ok(BoundaryTrace { n, samples })
}

/// Rounds a requested height to the dyadic grid `2^-bits`.
pub fn snap_to_grid(y: &BigRat, bits: u32) -> Dyadic {
    let scaled = y * BigRat::from_integer(BigInt::one() << bits) + BigRat::new(BigInt::one(), BigInt::from(2));
    Dyadic::new(scaled.floor().to_integer(), -(bits as i64))
}

/// Extent of `S_n` along one ray.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadialMax {
    pub direction: RayDirection,
    /// Largest `r >= 0` with `G_n(r cos phi, r sin phi) <= 0`.
    pub global: RootBox,
    /// Largest `r` in the component of that set containing `r = 0`.
    pub origin_component: RootBox,
}

impl RadialMax {
    /// `R_n(phi) = {0}`.
    pub fn zero_only(&self) -> bool {
        self.global.is_point() && self.global.lo.is_zero()
    }
}

/// `max R_n(phi)` for the scaled region, both globally and within the
/// component of the origin.
pub fn radial_slice_max(n: u32, dir: &RayDirection) -> Result<RadialMax> {
    let g = membership_poly(n, true)?;
    radial_slice_max_with(&g, dir)
}

pub fn radial_slice_max_with(g: &RatPoly2, dir: &RayDirection) -> Result<RadialMax> {
    let h = ray_restrict(g, dir);
    let comps = nonpositive_components(&h);
    Ok(RadialMax {
        direction: dir.clone(),
        global: comps.last().expect("0 lies on every ray").hi.clone(),
        origin_component: comps[0].hi.clone(),
    })
}

/// Refines a box to absolute width `2^-bits`, for display.
pub fn refine_to_bits(b: &RootBox, p: &IntPoly, bits: u32) -> RootBox {
    crate::rootiso::refine_root(b, p, &Dyadic::new(BigInt::one(), -(bits as i64)))
}

/// `n/e + ln(n)/(2e) + 1.2604`, the upper envelope of `max V_n^+`.
pub fn o3_bound(n: u32, prec: u32) -> Result<DyadicInterval> {
    let e = e_const(prec);
    let nn = DyadicInterval::from_i64(n as i64, prec);
    let c = DyadicInterval::from_rational(&BigRat::new(BigInt::from(12604), BigInt::from(10000)), prec);
    Ok(nn.div(&e)?.add(&nn.ln()?.div(&e.mul_pow2(1))?).add(&c))
}

/// Certified `max V_n^+ <= o3_bound(n)`; `None` if undecided at 256 bits.
pub fn o3_holds(n: u32) -> Result<Option<bool>> {
    let e = e_polynomial(n)?;
    let m = max_v_plus(n)?;
    for bits in [24, 64, 256] {
        let b = refine_to_bits(&m, &e, bits);
        let bound = o3_bound(n, bits + 16)?;
        if b.hi <= *bound.lo() {
            return Ok(Some(true));
        }
        if b.lo > *bound.hi() {
            return Ok(Some(false));
        }
    }
    Ok(None)
}

/// Lengths of the maximal blocks of adjacent non-decreasing entries.
///
/// Each comparison must be decided by the boxes; an overlap that is not an
/// equality of exact points gives `Indeterminate`.
pub fn nondecreasing_runs(values: &[RootBox]) -> Result<Vec<usize>> {
    let mut runs = Vec::new();
    let mut len = 0;
    for (k, v) in values.iter().enumerate() {
        if k == 0 {
            len = 1;
            continue;
        }
        let prev = &values[k - 1];
        if v.lo >= prev.hi {
            len += 1;
        } else if v.hi < prev.lo {
            runs.push(len);
            len = 1;
        } else {
            return Err(Error::Indeterminate);
        }
    }
    if len > 0 {
        runs.push(len);
    }
    Ok(runs)
}

/// `max V_n^+` for `n = 1..=n_max`, refined to width `2^-bits`.
pub fn max_v_plus_sequence(n_max: u32, bits: u32) -> Result<Vec<RootBox>> {
    (1..=n_max)
        .map(|n| Ok(refine_to_bits(&max_v_plus(n)?, &e_polynomial(n)?, bits)))
        .collect()
}

/// Distances of the endpoints of `I_(4m,k)` from `(2k-2)π` and `(2k-1)π`.
pub fn slice_endpoint_deviation(m: u32, k: u32) -> Result<(DyadicInterval, DyadicInterval)> {
    if m == 0 || k == 0 {
        return Err(Error::InvalidInput("m and k must be positive".into()));
    }
    let n = 4 * m;
    let e = e_polynomial(n)?;
    let v = v_plus(n)?;
    let iv = v.intervals.get(k as usize - 1).ok_or(Error::Domain("V_n^+ has fewer intervals than requested"))?;
    let prec = 96;
    let p = pi(prec);
    let lo = refine_to_bits(&iv.lo, &e, 40).interval(prec);
    let hi = refine_to_bits(&iv.hi, &e, 40).interval(prec);
    let a = lo.sub(&p.mul_u64(2 * k as u64 - 2)).abs();
    let b = hi.sub(&p.mul_u64(2 * k as u64 - 1)).abs();
    Ok((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    fn pt(re: f64, im: f64) -> ComplexPoint {
        ComplexPoint::from_f64(re, im, 64)
    }

    #[test]
    fn membership_examples() {
        for n in 1..=30 {
            assert_eq!(contains(n, &pt(0.0, 0.0), false).unwrap(), Membership::Boundary { width: Dyadic::zero() });
        }
        assert_eq!(contains(1, &pt(-2.0, 0.0), false).unwrap(), Membership::Boundary { width: Dyadic::zero() });
        assert_eq!(contains(2, &pt(-1.2, 0.0), true).unwrap(), Membership::Outside);
        assert_eq!(contains(1, &pt(-1.0, 0.0), false).unwrap(), Membership::Inside);
        let b = ComplexPoint::new(DyadicInterval::from_f64(-1.1, 64).hull(&DyadicInterval::from_f64(-0.9, 64)), DyadicInterval::zero(64));
        assert_eq!(contains(1, &b, false).unwrap(), Membership::Inside);
    }

    #[test]
    fn slices_small_n() {
        let v6 = v_plus(6).unwrap();
        assert!(v6.intervals[0].degenerate && v6.intervals[0].lo.lo.is_zero());
        let v8 = v_plus(8).unwrap();
        assert_eq!(v8.intervals.len(), 1);
        let m = refine_to_bits(v8.max(), &e_polynomial(8).unwrap(), 30).to_f64();
        assert!(m > 3.395 && m < 3.396);
        let v4 = v_plus(4).unwrap();
        let e4 = e_polynomial(4).unwrap();
        let hi = refine_to_bits(&v4.intervals[0].hi, &e4, 40);
        // encloses sqrt(8)
        assert!(hi.lo.square() <= Dyadic::from_i64(8) && Dyadic::from_i64(8) <= hi.hi.square());
    }

    #[test]
    fn slice_samples_have_the_right_sign() {
        for n in 1..=24 {
            let e = e_polynomial(n).unwrap();
            let v = v_plus(n).unwrap();
            for (k, iv) in v.intervals.iter().enumerate() {
                if !iv.degenerate {
                    assert!(e.sign_at(&iv.lo.hi.midpoint(&iv.hi.lo)) < 0);
                }
                if let Some(next) = v.intervals.get(k + 1) {
                    assert!(e.sign_at(&iv.hi.hi.midpoint(&next.lo.lo)) > 0);
                }
            }
        }
    }

    #[test]
    fn origin_class_matches_congruence() {
        for n in 1..=40 {
            let expect = if n % 4 == 1 || n % 4 == 2 { OriginClass::Singleton } else { OriginClass::PositiveInterval };
            assert_eq!(origin_component_class(n).unwrap(), expect, "n = {n}");
        }
    }

    #[test]
    fn trace_small_n() {
        let g = membership_poly(1, false).unwrap();
        assert_eq!(trace_point(&g, &Dyadic::zero()).unwrap(), TraceValue::Zero);
        // |1 + x + iy|^2 = 1 has x = -1 + sqrt(1 - y^2): tiny positive for small y
        let y = Dyadic::new(BigInt::one(), -10);
        match trace_point(&g, &y).unwrap() {
            TraceValue::Signed { sign, log10_abs, .. } => {
                assert_eq!(sign, -1);
                let x = -1.0 + libm::sqrt(1.0 - y.to_f64() * y.to_f64());
                assert!((log10_abs.to_f64() - libm::log10(-x)).abs() < 1e-6);
            }
            v => panic!("{v:?}"),
        }
        assert_eq!(trace_point(&g, &Dyadic::from_i64(2)).unwrap(), TraceValue::NoRoot);
    }

    #[test]
    fn radial_examples() {
        let r = radial_slice_max(6, &RayDirection::HalfAngle(rat(1, 1))).unwrap();
        assert!(r.zero_only());
        let r = radial_slice_max(1, &RayDirection::NegativeReal).unwrap();
        // scaled S_1 meets the negative axis down to -2
        assert!(r.global.is_point() && r.global.lo == Dyadic::from_i64(2));
        let r = radial_slice_max(4, &RayDirection::HalfAngle(rat(1, 1))).unwrap();
        assert!((r.global.to_f64() - libm::sqrt(8.0) / 4.0).abs() < 0.2);
    }

    #[test]
    fn snapping() {
        let y = snap_to_grid(&rat(1, 10), 40);
        assert!((y.to_f64() - 0.1).abs() < 1e-12);
        assert!(y.exponent() >= -40);
    }

    #[test]
    fn o3_and_runs_small() {
        for n in 1..=30 {
            assert_eq!(o3_holds(n).unwrap(), Some(true), "n = {n}");
        }
        let seq = max_v_plus_sequence(30, 40).unwrap();
        let runs = nondecreasing_runs(&seq).unwrap();
        assert_eq!(&runs[..5], &[5, 5, 6, 5, 5]);
        assert_eq!(runs.iter().sum::<usize>(), 30);
    }

    #[test]
    fn endpoint_deviation_shrinks() {
        let (a5, b5) = slice_endpoint_deviation(5, 2).unwrap();
        let (a10, b10) = slice_endpoint_deviation(10, 2).unwrap();
        assert!(a10.certainly_lt(&a5) && b10.certainly_lt(&b5));
        let (a, _) = slice_endpoint_deviation(3, 1).unwrap();
        assert!(a.is_zero_point());
    }
}
