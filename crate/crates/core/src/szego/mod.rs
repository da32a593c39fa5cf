//! Geometry of the Szegő region `Σ₁ = {|z e^(1-z)| <= 1} ∩ D_1` and the
//! auxiliary bounds built on it: the explicit boundary graph, the Lambert W
//! distance construction for left half-arcs `C_ρ`, the Möbius inf/sup values
//! for `|w/(w-1)|` and the sampled bounds on `T_n`.
//!
//! Every per-sample decision is made with outward-rounded intervals. Sampling
//! itself is deterministic (an additive recurrence in `f64` whose points are
//! then taken as exact dyadics).

use alloc::vec::Vec;

use crate::exactnum::{e_const, exp_minus_one, lambert_w, pi, rat, BigRat, Dyadic, DyadicInterval};
use crate::region::{complex_zeros, Membership};
use crate::taylorpoly::{scaled_partial_sum, t_n_eval, ComplexPoint};
use crate::{Error, Result};

/// Working precision for the sampled checks.
pub const SZEGO_PREC: u32 = 128;
/// Cap for the precision doubling in [`sigma1_contains`].
pub const SIGMA1_MAX_BITS: u32 = 1024;

const R2_A: f64 = 0.754_877_666_246_692_7;
const R2_B: f64 = 0.569_840_290_998_053_2;

/// `k`-th point of the two-dimensional additive recurrence, in `[0, 1)^2`.
pub fn r2_point(k: u32) -> (f64, f64) {
    let k = k as f64 + 1.0;
    let a = k * R2_A;
    let b = k * R2_B;
    (a - libm::floor(a), b - libm::floor(b))
}

/// A point together with its classification against `Σ₁`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SzegoQuery {
    pub point: ComplexPoint,
    pub in_sigma1: Membership,
    /// Lower bound on the distance to `Σ₁`, available for outside points with
    /// `Re z <= 0` and `|z| > 1/e`.
    pub distance_lower_bound: Option<DyadicInterval>,
}

pub fn query(z: &ComplexPoint) -> Result<SzegoQuery> {
    let in_sigma1 = sigma1_contains(z)?;
    let mut distance = None;
    if in_sigma1 == Membership::Outside && !z.re.lo().is_positive() && !z.re.hi().is_positive() {
        let rho = z.abs();
        if rho.certainly_gt(&exp_minus_one(rho.prec().max(64))) {
            distance = Some(distance_lower_bound(&rho)?);
        }
    }
    Ok(SzegoQuery { point: z.clone(), in_sigma1, distance_lower_bound: distance })
}

/// Classifies `z` against `Σ₁` from `|z|^2 e^(2 - 2 Re z) - 1` and `|z|^2 - 1`.
pub fn sigma1_contains(z: &ComplexPoint) -> Result<Membership> {
    let mut prec = z.re.prec().max(z.im.prec()).max(64);
    loop {
        let x = z.re.with_prec(prec);
        let r2 = x.sqr().add(&z.im.with_prec(prec).sqr());
        let one = DyadicInterval::one(prec);
        let a = r2.mul(&DyadicInterval::from_i64(2, prec).sub(&x.mul_pow2(1)).exp()).sub(&one);
        let b = r2.sub(&one);
        if a.certainly_positive() || b.certainly_positive() {
            return Ok(Membership::Outside);
        }
        if a.certainly_negative() && b.certainly_negative() {
            return Ok(Membership::Inside);
        }
        if prec >= SIGMA1_MAX_BITS {
            let w = core::cmp::max(a.width(), b.width());
            return Ok(Membership::Boundary { width: w });
        }
        prec *= 2;
    }
}

/// Enclosure of `-W(1/e)`, the leftmost abscissa of `Σ₁`.
pub fn sigma1_left_endpoint(prec: u32) -> Result<DyadicInterval> {
    Ok(lambert_w(&exp_minus_one(prec + 16), prec)?.value.neg())
}

/// Abscissa range of `Σ₁`: an enclosure of `-W(1/e)` and the exact right end `1`.
pub fn sigma1_boundary_x_range() -> Result<(DyadicInterval, Dyadic)> {
    Ok((sigma1_left_endpoint(SZEGO_PREC)?, Dyadic::one()))
}

/// Upper boundary graph `sqrt(e^(2x-2) - x^2)` of `Σ₁`.
///
/// Fails when the radicand is certainly negative, i.e. `x` lies outside the
/// abscissa range.
pub fn boundary_height(x: &DyadicInterval) -> Result<DyadicInterval> {
    let prec = x.prec();
    if x.is_point() && *x.lo() == Dyadic::one() {
        return Ok(DyadicInterval::zero(prec));
    }
    let two = DyadicInterval::from_i64(2, prec);
    let rad = x.mul_pow2(1).sub(&two).exp().sub(&x.sqr());
    if rad.certainly_negative() {
        return Err(Error::Domain("abscissa outside the Szegő region"));
    }
    rad.sqrt()
}

/// Result of the discrete concavity probe of the boundary graph.
#[derive(Debug, Clone, PartialEq)]
pub struct ConcavityProbe {
    pub points: usize,
    /// Largest upper bound seen for a second difference.
    pub max_second_difference: f64,
    pub certified: bool,
}

/// Checks `h(x-s) - 2h(x) + h(x+s) <= 0` on the grid `x = 1 - ks` that stays
/// inside the abscissa range, with step `s`.
pub fn boundary_concavity_probe(step: &BigRat) -> Result<ConcavityProbe> {
    let prec = SZEGO_PREC;
    let left = sigma1_left_endpoint(prec)?;
    let s = DyadicInterval::from_rational(step, prec);
    let one = BigRat::from_integer(1.into());
    let height = |k: u64| -> Result<DyadicInterval> {
        let x = &one - step * BigRat::from_integer(k.into());
        boundary_height(&DyadicInterval::from_rational(&x, prec))
    };
    let mut points = 0;
    let mut worst = f64::NEG_INFINITY;
    let mut certified = true;
    let (mut h_prev, mut h_cur) = (height(0)?, height(1)?);
    let mut k = 1u64;
    loop {
        // the grid point is 1 - k s; its left neighbour must stay in range
        let x_left = DyadicInterval::one(prec).sub(&s.mul_u64(k + 1));
        if !x_left.certainly_ge(&left) {
            break;
        }
        let h_next = height(k + 1)?;
        let d2 = h_prev.sub(&h_cur.mul_pow2(1)).add(&h_next);
        worst = worst.max(d2.hi().to_f64());
        if d2.hi().is_positive() {
            certified = false;
        }
        points += 1;
        h_prev = h_cur;
        h_cur = h_next;
        k += 1;
    }
    Ok(ConcavityProbe { points, max_second_difference: worst, certified })
}

/// `count` points on `∂Σ₁`, split between the upper and lower arcs, with
/// abscissas clustered towards both ends.
pub fn sigma1_boundary_samples(count: usize) -> Result<Vec<ComplexPoint>> {
    let prec = SZEGO_PREC;
    let left = sigma1_left_endpoint(prec)?;
    let left_q = left.hi().to_rational();
    let one = BigRat::from_integer(1.into());
    let half = count.div_ceil(2).max(2);
    let mut out = Vec::with_capacity(count);
    for k in 0..half {
        // cosine spacing, snapped to 2^-40
        let t = 0.5 - 0.5 * libm::cos(core::f64::consts::PI * k as f64 / (half - 1) as f64);
        let t = Dyadic::from_f64(libm::round(t * 1099511627776.0) / 1099511627776.0).to_rational();
        let xq = &left_q + (&one - &left_q) * t;
        let x = DyadicInterval::from_rational(&xq, prec);
        let h = boundary_height(&x)?;
        out.push(ComplexPoint::new(x.clone(), h.clone()));
        if out.len() < count {
            out.push(ComplexPoint::new(x, h.neg()));
        }
    }
    out.truncate(count);
    Ok(out)
}

/// `(ρe - 1)/sqrt(e^2 + 1)`, the lower bound on the distance from `C_ρ` to `Σ₁`.
pub fn distance_lower_bound(rho: &DyadicInterval) -> Result<DyadicInterval> {
    let prec = rho.prec().max(64);
    let e = e_const(prec);
    if !rho.certainly_gt(&exp_minus_one(prec)) {
        return Err(Error::Domain("distance bound needs rho > 1/e"));
    }
    let num = rho.mul(&e).sub(&DyadicInterval::one(prec));
    num.div(&e.sqr().add(&DyadicInterval::one(prec)).sqrt()?)
}

/// `δ_ρ = (ρe - 1)/(2 sqrt(e^2 + 1))`.
pub fn delta_rho(rho: &DyadicInterval) -> Result<DyadicInterval> {
    Ok(distance_lower_bound(rho)?.mul_pow2(-1))
}

/// Distance from `A = ρ e^(iφ)` to the tangent of `∂Σ₁` at the point on the
/// ray through `A`, written with `w = W(-cos φ / e)`; needs `π/2 < φ < π`.
pub fn tangent_distance(rho: &DyadicInterval, phi: &DyadicInterval) -> Result<DyadicInterval> {
    let prec = rho.prec().max(phi.prec()).max(64);
    let p = pi(prec);
    if !phi.certainly_gt(&p.mul_pow2(-1)) || !phi.certainly_lt(&p) {
        return Err(Error::Domain("tangent construction needs pi/2 < phi < pi"));
    }
    let (c, s) = (phi.cos(), phi.sin());
    let w = lambert_w(&c.neg().mul(&exp_minus_one(prec)), prec)?.value;
    let one = DyadicInterval::one(prec);
    let c2 = c.sqr();
    let num = w.add(&one).abs().mul(&w.add(&rho.mul(&c)).abs());
    let den = w.add(&c2).sqr().add(&c2.mul(&s.sqr())).sqrt()?;
    num.div(&den)
}

/// The same distance in the variable `w`:
/// `(w + 1)(ρ e^(w+1) - 1)/sqrt(e^(2w+2)(2w + 1) + 1)`.
pub fn tangent_distance_in_w(rho: &DyadicInterval, w: &DyadicInterval) -> Result<DyadicInterval> {
    let prec = rho.prec().max(w.prec()).max(64);
    let one = DyadicInterval::one(prec);
    let ew = w.add(&one).exp();
    let num = w.add(&one).mul(&rho.mul(&ew).sub(&one));
    let den = ew.sqr().mul(&w.mul_pow2(1).add(&one)).add(&one).sqrt()?;
    num.div(&den)
}

/// Enclosure of the point `ρ e^(iφ)`.
pub fn polar_point(rho: &DyadicInterval, phi: &DyadicInterval) -> ComplexPoint {
    ComplexPoint::new(rho.mul(&phi.cos()), rho.mul(&phi.sin()))
}

/// Checks that every sampled point of `C_ρ` is at least
/// [`distance_lower_bound`] away from every point of `set`.
pub fn distance_consistency(rho: &DyadicInterval, arc_samples: u32, set: &[ComplexPoint]) -> Result<bool> {
    let prec = rho.prec().max(64);
    let bound = distance_lower_bound(rho)?;
    let b2 = bound.sqr();
    let p = pi(prec);
    for k in 0..arc_samples {
        // phi over [pi/2, 3pi/2]
        let t = DyadicInterval::from_rational(&rat(k as i64, arc_samples.max(2) as i64 - 1), prec);
        let phi = p.mul_pow2(-1).add(&p.mul(&t));
        let a = polar_point(rho, &phi);
        for q in set {
            let d2 = a.sub(q).norm_sqr();
            if !d2.certainly_ge(&b2) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Classification of `i/e` and of `samples` further points of `C_(1/e)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InverseECircleProbe {
    pub at_i_over_e: Membership,
    pub outside: u32,
    pub samples: u32,
}

/// Probes `C_(1/e) ∩ Σ₁ = {±i/e}`; the samples avoid the two arc ends.
pub fn inverse_e_circle_probe(samples: u32) -> Result<InverseECircleProbe> {
    let prec = SZEGO_PREC;
    let r = exp_minus_one(prec);
    let i_over_e = ComplexPoint::new(DyadicInterval::zero(prec), r.clone());
    let at_i_over_e = sigma1_contains(&i_over_e)?;
    let p = pi(prec);
    let mut outside = 0;
    for k in 1..=samples {
        let t = DyadicInterval::from_rational(&rat(k as i64, samples as i64 + 1), prec);
        let phi = p.mul_pow2(-1).add(&p.mul(&t));
        if sigma1_contains(&polar_point(&r, &phi))? == Membership::Outside {
            outside += 1;
        }
    }
    Ok(InverseECircleProbe { at_i_over_e, outside, samples })
}

/// `D_(1/4) ⊂ Σ₁`: the bound `e^(5/4)/4 < 1` together with `samples` points of
/// the circle `|z| = 1/4`, each certified inside.
pub fn quarter_disk_check(samples: u32) -> Result<bool> {
    let prec = SZEGO_PREC;
    let quarter = DyadicInterval::from_rational(&rat(1, 4), prec);
    let closed = DyadicInterval::from_rational(&rat(5, 4), prec).exp().mul(&quarter);
    if !closed.certainly_lt(&DyadicInterval::one(prec)) {
        return Ok(false);
    }
    let p = pi(prec);
    for k in 0..samples {
        let t = DyadicInterval::from_rational(&rat(2 * k as i64, samples as i64), prec);
        if sigma1_contains(&polar_point(&quarter, &p.mul(&t)))? != Membership::Inside {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Which value of `|w/(w-1)|` to bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MoebiusQuery {
    /// Infimum over `|w| >= σ`.
    Inf { sigma: DyadicInterval },
    /// Supremum over `{|w, Σ₁| >= δ_ρ, Re w <= δ_ρ}`.
    SupBand { rho: DyadicInterval },
}

/// `(1 + sqrt(1 + e^2))/e`, the point where `δ_ρ = 1/2`.
pub fn sup_band_split(prec: u32) -> DyadicInterval {
    let e = e_const(prec);
    let one = DyadicInterval::one(prec);
    let r = one.add(&one.add(&e.sqr()).sqrt().expect("positive"));
    r.div(&e).expect("e is positive")
}

/// Evaluates the inf/sup values: `σ/(1 + σ)` for `Inf`, and for `SupBand`
/// the bound `1` on `[0.95, split]` or `1.39` on `(split, 2]`.
pub fn moebius_inf_sup(q: &MoebiusQuery) -> Result<DyadicInterval> {
    match q {
        MoebiusQuery::Inf { sigma } => {
            if !sigma.certainly_positive() {
                return Err(Error::Domain("inf needs sigma > 0"));
            }
            sigma.div(&sigma.add(&DyadicInterval::one(sigma.prec())))
        }
        MoebiusQuery::SupBand { rho } => {
            let prec = rho.prec().max(64);
            if rho.hi().to_rational() < rat(95, 100) || *rho.lo() > Dyadic::from_i64(2) {
                return Err(Error::Domain("sup band needs 0.95 <= rho <= 2"));
            }
            if rho.certainly_le(&sup_band_split(prec)) {
                Ok(DyadicInterval::one(prec))
            } else {
                Ok(DyadicInterval::from_rational(&rat(139, 100), prec))
            }
        }
    }
}

/// Maximum of `|w/(w-1)|` over `{|w - 1| >= δ_ρ, Re w <= δ_ρ}` when `δ_ρ >= 1/2`,
/// attained where `|w - 1| = δ_ρ = Re w`.
pub fn sup_band_closed_form(rho: &DyadicInterval) -> Result<DyadicInterval> {
    let prec = rho.prec().max(64);
    let e = e_const(prec);
    let one = DyadicInterval::one(prec);
    let s = one.add(&e.sqr()).sqrt()?;
    let rad = e
        .sqr()
        .mul(&rho.sqr().sub(&DyadicInterval::from_i64(4, prec)))
        .add(&e.mul_pow2(1).mul(&s.mul_pow2(1).sub(&one)).mul(rho))
        .sub(&s.mul_u64(4))
        .sub(&DyadicInterval::from_i64(3, prec));
    if rad.certainly_negative() {
        return Err(Error::Domain("closed form needs delta_rho >= 1/2"));
    }
    rad.sqrt()?.div(&rho.mul(&e).sub(&one))
}

/// Sampled maximisation of `|w/(w-1)|` over the superset
/// `{|w - 1| >= δ_ρ, Re w <= δ_ρ}` of the sup-band constraint set.
#[derive(Debug, Clone, PartialEq)]
pub struct SupBandSamples {
    pub samples: u32,
    pub max_observed: f64,
    /// Every sample certified `<=` the band value.
    pub certified: bool,
}

pub fn sup_band_samples(rho: &DyadicInterval, samples: u32) -> Result<SupBandSamples> {
    let prec = rho.prec().max(64);
    let bound = moebius_inf_sup(&MoebiusQuery::SupBand { rho: rho.clone() })?;
    let b2 = bound.sqr();
    let delta = delta_rho(rho)?;
    let one = DyadicInterval::one(prec);
    let mut pts: Vec<ComplexPoint> = Vec::new();
    let third = samples / 3;
    // vertical line Re w = δ
    for k in 0..third {
        let t = DyadicInterval::from_f64(8.0 * (k as f64 / third.max(1) as f64) - 4.0, prec);
        pts.push(ComplexPoint::new(delta.clone(), t));
    }
    // circle |w - 1| = δ, left of the line (nonempty only when δ >= 1/2)
    let p = pi(prec);
    for k in 0..third {
        let t = DyadicInterval::from_rational(&rat(k as i64, third.max(2) as i64 - 1), prec);
        let phi = p.mul_pow2(-1).add(&p.mul(&t));
        let w = polar_point(&delta, &phi).add(&ComplexPoint::real(one.clone()));
        if w.re.certainly_le(&delta) {
            pts.push(w);
        }
    }
    // interior of the half-plane
    for k in 0..samples - 2 * third {
        let (a, b) = r2_point(k);
        let x = DyadicInterval::from_f64(-4.0 * a, prec).add(&delta);
        let y = DyadicInterval::from_f64(8.0 * b - 4.0, prec);
        pts.push(ComplexPoint::new(x, y));
    }
    let mut max_observed: f64 = 0.0;
    let mut certified = true;
    let mut counted = 0;
    for w in &pts {
        let d = w.sub(&ComplexPoint::real(one.clone())).norm_sqr();
        if d.certainly_lt(&delta.sqr()) {
            continue;
        }
        counted += 1;
        let n = w.norm_sqr();
        if !n.certainly_le(&b2.mul(&d)) {
            certified = false;
        }
        let ratio = libm::sqrt(n.to_f64() / d.to_f64());
        max_observed = max_observed.max(ratio);
    }
    Ok(SupBandSamples { samples: counted, max_observed, certified })
}

/// Outcome of sampling the two `T_n` bounds.
#[derive(Debug, Clone, PartialEq)]
pub struct BuckholtzReport {
    pub n: u32,
    /// Samples on `1 <= |z| <= 3` and the largest `|T_n| / (e sqrt n)`.
    pub ring_samples: u32,
    pub ring_max_ratio: f64,
    pub ring_certified: bool,
    /// Samples certified outside `Σ₁` and the largest `|T_n| / (2e sqrt n)`.
    pub outside_samples: u32,
    pub outside_max_ratio: f64,
    pub outside_certified: bool,
}

impl BuckholtzReport {
    pub fn passed(&self) -> bool {
        self.ring_certified && self.outside_certified
    }
}

/// Samples `|T_n(z)| <= e sqrt(n)` on `{1 <= |z| <= 3}` and
/// `|T_n(z)| <= 2e sqrt(n)` outside `Σ₁`, `samples` points each.
pub fn buckholtz_bounds_check(n: u32, samples: u32) -> Result<BuckholtzReport> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be at least 1".into()));
    }
    let prec = SZEGO_PREC;
    let e = e_const(prec);
    let nn = DyadicInterval::from_i64(n as i64, prec);
    let bound2 = e.sqr().mul(&nn);
    let one = DyadicInterval::one(prec);

    let check = |z: &ComplexPoint, limit2: &DyadicInterval| -> Result<(bool, f64)> {
        let t2 = t_n_eval(n, z)?.norm_sqr();
        Ok((t2.certainly_le(limit2), libm::sqrt(t2.hi().to_f64() / limit2.lo().to_f64())))
    };

    let mut ring_certified = true;
    let mut ring_max: f64 = 0.0;
    let mut ring_samples = 0;
    let mut k = 0;
    while ring_samples < samples {
        let (a, b) = r2_point(k);
        k += 1;
        let r = 1.0 + 2.0 * a;
        let th = 2.0 * core::f64::consts::PI * b;
        let z = ComplexPoint::from_f64(r * libm::cos(th), r * libm::sin(th), prec);
        if !z.norm_sqr().certainly_ge(&one) {
            continue;
        }
        let (ok, ratio) = check(&z, &bound2)?;
        ring_certified &= ok;
        ring_max = ring_max.max(ratio);
        ring_samples += 1;
    }

    let limit2 = bound2.mul_u64(4);
    let boundary = sigma1_boundary_samples(samples as usize)?;
    let mut outside_certified = true;
    let mut outside_max: f64 = 0.0;
    let mut outside_samples = 0;
    let mut k = 0;
    while outside_samples < samples {
        // alternate between points just outside the curve and a wide box
        let (a, b) = r2_point(k);
        let z = if k % 2 == 0 {
            let q = &boundary[(k as usize / 2) % boundary.len()];
            let (x, y) = q.to_f64();
            let s = 1.0 + 0.001 + a * 0.5;
            ComplexPoint::from_f64(x * s, y * s, prec)
        } else {
            ComplexPoint::from_f64(6.0 * a - 3.0, 6.0 * b - 3.0, prec)
        };
        k += 1;
        if k > 100 * samples + 100 {
            break;
        }
        if z.may_be_zero() || sigma1_contains(&z)? != Membership::Outside {
            continue;
        }
        let (ok, ratio) = check(&z, &limit2)?;
        outside_certified &= ok;
        outside_max = outside_max.max(ratio);
        outside_samples += 1;
    }
    Ok(BuckholtzReport {
        n,
        ring_samples,
        ring_max_ratio: ring_max,
        ring_certified,
        outside_samples,
        outside_max_ratio: outside_max,
        outside_certified,
    })
}

/// Float-grade check that every zero of the scaled partial sum lies within
/// `2e/sqrt(n)` of a sampled point set of `Σ₁`.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroCluster {
    pub n: u32,
    pub zeros: usize,
    pub max_distance: f64,
    pub bound: f64,
    /// `false` when the zero finder rejected its own residuals.
    pub residuals_ok: bool,
}

impl ZeroCluster {
    pub fn holds(&self) -> bool {
        self.residuals_ok && self.max_distance <= self.bound
    }
}

pub fn zero_cluster_check(n: u32, set_samples: usize) -> Result<ZeroCluster> {
    let bound = 2.0 * core::f64::consts::E / libm::sqrt(n as f64);
    let zeros = match complex_zeros(&scaled_partial_sum(n)?) {
        Ok(z) => z,
        Err(Error::ConvergenceFailure(_)) => {
            return Ok(ZeroCluster { n, zeros: 0, max_distance: f64::NAN, bound, residuals_ok: false });
        }
        Err(e) => return Err(e),
    };
    let set: Vec<(f64, f64)> = sigma1_boundary_samples(set_samples)?.iter().map(|p| p.to_f64()).collect();
    let mut max_distance: f64 = 0.0;
    for z in &zeros {
        let (zx, zy) = z.to_f64();
        let d = set.iter().map(|(x, y)| libm::hypot(zx - x, zy - y)).fold(f64::INFINITY, f64::min);
        max_distance = max_distance.max(d);
    }
    Ok(ZeroCluster { n, zeros: zeros.len(), max_distance, bound, residuals_ok: true })
}

/// One point of a level curve of `|z e^(1-z)|`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContourPoint {
    pub x: f64,
    pub y: f64,
    pub level: f64,
}

/// Rectangular sampling grid for contour export.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    pub x0: f64,
    pub x1: f64,
    pub y0: f64,
    pub y1: f64,
    pub nx: usize,
    pub ny: usize,
}

impl Default for Grid {
    fn default() -> Self {
        Grid { x0: -1.5, x1: 2.5, y0: -2.0, y1: 2.0, nx: 200, ny: 200 }
    }
}

/// `|z e^(1-z)|` in double precision.
pub fn szego_modulus(x: f64, y: f64) -> f64 {
    libm::hypot(x, y) * libm::exp(1.0 - x)
}

/// Level-set crossings of `|z e^(1-z)|` on the grid edges, by linear
/// interpolation. Output is ordered by level, then row, then column.
pub fn szego_contours(levels: &[f64], grid: &Grid) -> Vec<ContourPoint> {
    let nx = grid.nx.max(2);
    let ny = grid.ny.max(2);
    let xs: Vec<f64> = (0..nx).map(|i| grid.x0 + (grid.x1 - grid.x0) * i as f64 / (nx - 1) as f64).collect();
    let ys: Vec<f64> = (0..ny).map(|j| grid.y0 + (grid.y1 - grid.y0) * j as f64 / (ny - 1) as f64).collect();
    let vals: Vec<f64> = ys.iter().flat_map(|&y| xs.iter().map(move |&x| szego_modulus(x, y))).collect();
    let at = |i: usize, j: usize| vals[j * nx + i];
    let mut out = Vec::new();
    for &level in levels {
        for j in 0..ny {
            for i in 0..nx {
                let v = at(i, j) - level;
                if i + 1 < nx {
                    let w = at(i + 1, j) - level;
                    if (v < 0.0) != (w < 0.0) {
                        let t = v / (v - w);
                        out.push(ContourPoint { x: xs[i] + t * (xs[i + 1] - xs[i]), y: ys[j], level });
                    }
                }
                if j + 1 < ny {
                    let w = at(i, j + 1) - level;
                    if (v < 0.0) != (w < 0.0) {
                        let t = v / (v - w);
                        out.push(ContourPoint { x: xs[i], y: ys[j] + t * (ys[j + 1] - ys[j]), level });
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::interval_eval;
    use crate::exactnum::Expr;

    fn di(v: f64) -> DyadicInterval {
        DyadicInterval::from_f64(v, SZEGO_PREC)
    }

    #[test]
    fn membership_examples() {
        let one = ComplexPoint::from_f64(1.0, 0.0, 64);
        assert!(matches!(sigma1_contains(&one).unwrap(), Membership::Boundary { .. }));
        let fifth = ComplexPoint::real(DyadicInterval::from_rational(&rat(1, 5), 64));
        assert_eq!(sigma1_contains(&fifth).unwrap(), Membership::Inside);
        assert_eq!(sigma1_contains(&ComplexPoint::from_f64(-0.5, 0.0, 64)).unwrap(), Membership::Outside);
        assert_eq!(sigma1_contains(&ComplexPoint::from_f64(1.5, 0.0, 64)).unwrap(), Membership::Outside);
    }

    #[test]
    fn left_endpoint_digits() {
        let (l, r) = sigma1_boundary_x_range().unwrap();
        assert!(l.contains(&Dyadic::from_f64(-0.278464542761074)) || (l.to_f64() + 0.278464543).abs() < 1e-9);
        assert!((l.to_f64() + 0.278_464_542_761_074).abs() < 1e-14);
        assert_eq!(r, Dyadic::one());
    }

    #[test]
    fn boundary_height_values() {
        let h1 = boundary_height(&DyadicInterval::one(SZEGO_PREC)).unwrap();
        assert!(h1.is_zero_point());
        let h0 = boundary_height(&DyadicInterval::zero(SZEGO_PREC)).unwrap();
        assert!(h0.overlaps(&exp_minus_one(SZEGO_PREC)));
        assert!(h0.width().to_f64() < 1e-30);
        assert!(boundary_height(&di(-0.5)).is_err());
    }

    #[test]
    fn distance_bound_at_two_over_e() {
        let rho = exp_minus_one(SZEGO_PREC).mul_u64(2);
        let d = distance_lower_bound(&rho).unwrap();
        // oracle: 1/sqrt(e^2 + 1) from the expression evaluator
        let e = Expr::int(1).exp();
        let oracle = interval_eval(&Expr::int(1).div(e.clone().mul(e).add(Expr::int(1)).sqrt()), 96).unwrap();
        assert!(d.overlaps(&oracle));
        assert!((d.to_f64() - 0.345_257_761_7).abs() < 1e-10);
        assert!(distance_lower_bound(&DyadicInterval::from_rational(&rat(1, 3), 64)).is_err());
    }

    #[test]
    fn step_formulas_agree_and_tend_to_the_bound() {
        let rho = DyadicInterval::one(SZEGO_PREC);
        let bound = distance_lower_bound(&rho).unwrap();
        let at_zero = tangent_distance_in_w(&rho, &DyadicInterval::zero(SZEGO_PREC)).unwrap();
        assert!(at_zero.overlaps(&bound));
        let p = pi(SZEGO_PREC);
        let phi = p.mul_pow2(-1).add(&DyadicInterval::from_f64(1e-12, SZEGO_PREC));
        let near = tangent_distance(&rho, &phi).unwrap();
        assert!((near.to_f64() - bound.to_f64()).abs() < 1e-10);
        let phi = di(2.5);
        let w = lambert_w(&phi.cos().neg().mul(&exp_minus_one(SZEGO_PREC)), SZEGO_PREC).unwrap().value;
        assert!(tangent_distance(&rho, &phi).unwrap().overlaps(&tangent_distance_in_w(&rho, &w).unwrap()));
    }

    #[test]
    fn tangent_distance_increasing() {
        let rho = DyadicInterval::one(SZEGO_PREC);
        let p = pi(SZEGO_PREC);
        let mut prev: Option<DyadicInterval> = None;
        for k in 1..=50 {
            let t = DyadicInterval::from_rational(&rat(k, 102), SZEGO_PREC);
            let phi = p.mul_pow2(-1).add(&p.mul(&t));
            let d = tangent_distance(&rho, &phi).unwrap();
            if let Some(q) = prev {
                assert!(q.certainly_lt(&d), "k = {k}");
            }
            prev = Some(d);
        }
    }

    #[test]
    fn moebius_values() {
        let one = DyadicInterval::one(SZEGO_PREC);
        let v = moebius_inf_sup(&MoebiusQuery::Inf { sigma: one }).unwrap();
        assert!(v.contains_rational(&rat(1, 2)));
        let q = DyadicInterval::from_rational(&rat(1, 4), SZEGO_PREC);
        let v = moebius_inf_sup(&MoebiusQuery::Inf { sigma: q }).unwrap();
        assert!(v.contains_rational(&rat(1, 5)));
        let two = DyadicInterval::from_i64(2, SZEGO_PREC);
        let v = moebius_inf_sup(&MoebiusQuery::SupBand { rho: two.clone() }).unwrap();
        assert!(v.contains_rational(&rat(139, 100)));
        assert!(sup_band_closed_form(&two).unwrap().certainly_lt(&v));
        assert!(moebius_inf_sup(&MoebiusQuery::SupBand { rho: DyadicInterval::from_i64(3, 64) }).is_err());
    }

    #[test]
    fn quarter_disk_and_inverse_e_circle() {
        assert!(quarter_disk_check(100).unwrap());
        let probe = inverse_e_circle_probe(200).unwrap();
        assert!(matches!(probe.at_i_over_e, Membership::Boundary { .. }));
        assert_eq!(probe.outside, 200);
    }

    #[test]
    fn t_one_vanishes_at_minus_one() {
        let t = t_n_eval(1, &ComplexPoint::from_f64(-1.0, 0.0, 64)).unwrap();
        assert!(t.re.is_zero_point() && t.im.is_zero_point());
    }

    #[test]
    fn contours_lie_on_their_level() {
        let pts = szego_contours(&[0.5, 1.0], &Grid::default());
        assert!(!pts.is_empty());
        for p in &pts {
            assert!((szego_modulus(p.x, p.y) - p.level).abs() < 0.05);
        }
    }
}
