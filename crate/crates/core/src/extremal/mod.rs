//! Interval branch-and-bound certificates for extremal radii of the scaled
//! stability regions `S_n`.
//!
//! Boxes are dyadic (bisections of `[-4, 4] x [0, 4]`, which contains the upper
//! half of `D_2`), so their corners are exact `f64` values. `G_n = |P_n|^2 - 1`
//! is enclosed over a box by complex Horner in outward-rounded `f64` interval
//! arithmetic, intersected with the mean-value form around the box center.
//! Conjugate symmetry lets every search stay in `Im z >= 0`.

use alloc::collections::BinaryHeap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exactnum::{rat, BigRat, Dyadic, DyadicInterval, Fc, Fi, Round};
use crate::region::{origin_component_class, OriginClass};
use crate::rootiso::refine_root;
use crate::taylorpoly::{e_polynomial, scaled_partial_sum, ComplexPoint, IntPoly};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mode {
    /// `max |z|` over `S_n`.
    Full,
    /// `max |z|` over `S_n` intersected with `Re z <= 0`.
    LeftHalf,
    /// Largest `rho` with the closed left half-disk of radius `rho` inside `S_n`.
    InnerSemiDisk,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Full => "full",
            Mode::LeftHalf => "left",
            Mode::InnerSemiDisk => "semidisk",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertStatus {
    Complete,
    /// The box budget ran out; `lo` and `hi` are still valid bounds.
    BudgetExhausted,
    /// Boxes reached the minimum width without closing the gap (f64 resolution).
    PrecisionExhausted,
}

/// A proven enclosure `lo <= r <= hi` of an extremal radius.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadiusCertificate {
    pub n: u32,
    pub mode: Mode,
    pub lo: Dyadic,
    pub hi: Dyadic,
    /// For `Full`/`LeftHalf` a feasible point with `|w| >= lo`; for
    /// `InnerSemiDisk` a point outside `S_n` with `Re w <= 0` and `|w| <= hi`.
    pub witness: (Dyadic, Dyadic),
    pub tol: Dyadic,
    pub boxes_processed: u64,
    pub status: CertStatus,
}

impl RadiusCertificate {
    pub fn is_complete(&self) -> bool {
        self.status == CertStatus::Complete
    }

    pub fn witness_point(&self) -> ComplexPoint {
        ComplexPoint::from_dyadic(self.witness.0.clone(), self.witness.1.clone(), 64)
    }

    pub fn interval(&self) -> DyadicInterval {
        DyadicInterval::new(self.lo.clone(), self.hi.clone(), 64)
    }
}

/// Search limits.
#[derive(Debug, Clone)]
pub struct BbConfig {
    pub tol: Dyadic,
    pub max_boxes: u64,
    /// Boxes narrower than `2^-min_width_log2` are not split further.
    pub min_width_log2: u32,
}

impl BbConfig {
    pub fn with_tol(tol: Dyadic) -> BbConfig {
        BbConfig { tol, ..BbConfig::default() }
    }
}

impl Default for BbConfig {
    fn default() -> Self {
        BbConfig { tol: Dyadic::new(BigInt::one(), -20), max_boxes: 20_000_000, min_width_log2: 44 }
    }
}

/// `10^-digits` rounded down to a dyadic, handy for tolerances.
pub fn decimal_tol(digits: u32) -> Dyadic {
    let q = BigRat::new(BigInt::one(), num_traits::pow(BigInt::from(10), digits as usize));
    Dyadic::from_rational(&q, 64, Round::Floor)
}

#[inline]
fn next_up(x: f64) -> f64 {
    x.next_up()
}

#[inline]
fn next_down(x: f64) -> f64 {
    x.next_down()
}

fn fi_meet(a: Fi, b: Fi) -> Fi {
    let lo = a.lo.max(b.lo);
    let hi = a.hi.min(b.hi);
    if lo <= hi {
        Fi::new(lo, hi)
    } else {
        // both enclose the same value, so this only happens through rounding slack
        Fi::new(hi, lo)
    }
}

fn fc_meet(a: Fc, b: Fc) -> Fc {
    Fc::new(fi_meet(a.re, b.re), fi_meet(a.im, b.im))
}

/// `P_n` (scaled) and its derivative with interval `f64` coefficients.
#[derive(Debug, Clone)]
pub struct ScaledEvaluator {
    n: u32,
    p: Vec<Fi>,
    dp: Vec<Fi>,
    exact: IntPoly,
}

fn rat_fi(q: &BigRat) -> Fi {
    let lo = Dyadic::from_rational(q, 64, Round::Floor).to_f64();
    let hi = Dyadic::from_rational(q, 64, Round::Ceil).to_f64();
    Fi::new(next_down(lo), next_up(hi))
}

fn horner(c: &[Fi], z: Fc) -> Fc {
    let mut acc = Fc::ZERO;
    for a in c.iter().rev() {
        acc = acc * z + Fc::real(*a);
    }
    acc
}

/// Enclosures over a box.
#[derive(Debug, Clone, Copy)]
struct BoxEval {
    g: Fi,
    /// `dG/dx = 2 Re(conj(P) P')`.
    gx: Fi,
}

impl ScaledEvaluator {
    pub fn new(n: u32) -> Result<ScaledEvaluator> {
        let exact = scaled_partial_sum(n)?;
        let q = exact.to_rationals();
        let p: Vec<Fi> = q.iter().map(rat_fi).collect();
        let dp: Vec<Fi> = q
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| rat_fi(&(c * BigRat::from_integer(BigInt::from(k)))))
            .collect();
        Ok(ScaledEvaluator { n, p, dp, exact })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    fn eval_box(&self, b: &Rect) -> BoxEval {
        let z = b.fc();
        let (cx, cy) = b.center();
        let c = Fc::point(cx, cy);
        let pz = horner(&self.p, z);
        let dpz = horner(&self.dp, z);
        let pc = horner(&self.p, c);
        let centered = pc + dpz * (z - c);
        let pm = fc_meet(pz, centered);
        let g = pm.norm_sqr() - Fi::ONE;
        let gx = (pm.re * dpz.re + pm.im * dpz.im).scale(2.0);
        BoxEval { g, gx }
    }

    /// Enclosure of `G_n` at a point.
    pub fn g_at(&self, x: f64, y: f64) -> Fi {
        horner(&self.p, Fc::point(x, y)).norm_sqr() - Fi::ONE
    }

    /// Exact sign of `G_n` at a dyadic point.
    pub fn exact_sign(&self, x: &Dyadic, y: &Dyadic) -> i32 {
        let (xr, yr) = (x.to_rational(), y.to_rational());
        let (mut re, mut im) = (BigRat::zero(), BigRat::zero());
        for c in self.exact.coeffs().iter().rev() {
            let nr = &re * &xr - &im * &yr + BigRat::from_integer(c.clone());
            let ni = &re * &yr + &im * &xr;
            re = nr;
            im = ni;
        }
        let s2 = self.exact.scale() * self.exact.scale();
        let g = (re.clone() * re + im.clone() * im) * s2 - BigRat::one();
        match g.cmp(&BigRat::zero()) {
            Ordering::Less => -1,
            Ordering::Equal => 0,
            Ordering::Greater => 1,
        }
    }

    /// Sign of `G_n` at a point, in `f64` when decisive and exactly otherwise.
    fn sign_at(&self, x: f64, y: f64) -> i32 {
        let g = self.g_at(x, y);
        if g.hi < 0.0 {
            -1
        } else if g.lo > 0.0 {
            1
        } else {
            self.exact_sign(&Dyadic::from_f64(x), &Dyadic::from_f64(y))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct Rect {
    x0: f64,
    x1: f64,
    y0: f64,
    y1: f64,
}

impl Rect {
    fn fc(&self) -> Fc {
        Fc::new(Fi::new(self.x0, self.x1), Fi::new(self.y0, self.y1))
    }

    fn center(&self) -> (f64, f64) {
        (0.5 * (self.x0 + self.x1), 0.5 * (self.y0 + self.y1))
    }

    fn width(&self) -> f64 {
        (self.x1 - self.x0).max(self.y1 - self.y0)
    }

    fn max_abs(&self) -> f64 {
        self.fc().abs_hi()
    }

    fn min_abs(&self) -> f64 {
        self.fc().abs_lo()
    }

    fn split(&self) -> [Rect; 2] {
        if self.x1 - self.x0 >= self.y1 - self.y0 {
            let m = 0.5 * (self.x0 + self.x1);
            [Rect { x1: m, ..*self }, Rect { x0: m, ..*self }]
        } else {
            let m = 0.5 * (self.y0 + self.y1);
            [Rect { y1: m, ..*self }, Rect { y0: m, ..*self }]
        }
    }

    /// Corners and center with lower bounds of their moduli.
    fn corners_and_center(&self) -> [(f64, f64, f64); 5] {
        let (cx, cy) = self.center();
        let pts = [(self.x0, self.y0), (self.x0, self.y1), (self.x1, self.y0), (self.x1, self.y1), (cx, cy)];
        pts.map(|(x, y)| (x, y, Fc::point(x, y).abs_lo()))
    }
}

/// Heap entry ordered by key, then by coordinates for a deterministic order.
#[derive(Debug, Clone, Copy)]
struct Entry {
    key: f64,
    r: Rect,
}

impl PartialEq for Entry {
    fn eq(&self, o: &Entry) -> bool {
        self.cmp(o) == Ordering::Equal
    }
}

impl Eq for Entry {}

impl PartialOrd for Entry {
    fn partial_cmp(&self, o: &Entry) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for Entry {
    fn cmp(&self, o: &Entry) -> Ordering {
        self.key
            .total_cmp(&o.key)
            .then(self.r.x0.total_cmp(&o.r.x0))
            .then(self.r.y0.total_cmp(&o.r.y0))
            .then(self.r.x1.total_cmp(&o.r.x1))
            .then(self.r.y1.total_cmp(&o.r.y1))
    }
}

const ROOT_BOX: Rect = Rect { x0: -4.0, x1: 4.0, y0: 0.0, y1: 4.0 };

fn modulus_floor(x: f64, y: f64) -> Dyadic {
    let (dx, dy) = (Dyadic::from_f64(x), Dyadic::from_f64(y));
    dx.square().add(&dy.square()).sqrt(64, Round::Floor)
}

fn modulus_ceil(x: f64, y: f64) -> Dyadic {
    let (dx, dy) = (Dyadic::from_f64(x), Dyadic::from_f64(y));
    dx.square().add(&dy.square()).sqrt(64, Round::Ceil)
}

/// Certified `max |z|` over `S_n` (or its left half).
pub fn max_modulus(n: u32, half_plane_only: bool, cfg: &BbConfig) -> Result<RadiusCertificate> {
    let ev = ScaledEvaluator::new(n)?;
    max_modulus_with(&ev, half_plane_only, cfg)
}

pub fn max_modulus_with(ev: &ScaledEvaluator, half_plane_only: bool, cfg: &BbConfig) -> Result<RadiusCertificate> {
    let tol = cfg.tol.to_f64();
    let min_width = libm::ldexp(1.0, -(cfg.min_width_log2 as i32));
    // z = 0 is always feasible
    let mut best = (0.0f64, 0.0f64);
    let mut lo = 0.0f64;
    let mut heap = BinaryHeap::new();
    let mut boxes = 0u64;
    let root = if half_plane_only { Rect { x1: 0.0, ..ROOT_BOX } } else { ROOT_BOX };
    heap.push(Entry { key: root.max_abs(), r: root });
    let mut status = CertStatus::Complete;
    let hi;
    loop {
        let Some(top) = heap.pop() else {
            hi = lo;
            break;
        };
        if top.key <= lo + tol {
            hi = top.key.max(lo);
            break;
        }
        if boxes >= cfg.max_boxes {
            status = CertStatus::BudgetExhausted;
            hi = top.key;
            break;
        }
        boxes += 1;
        let r = top.r;
        let e = ev.eval_box(&r);
        if e.g.lo > 0.0 {
            continue;
        }
        let mut pts = r.corners_and_center();
        pts.sort_by(|a, b| b.2.total_cmp(&a.2));
        for (px, py, m) in pts {
            if m > lo && ev.sign_at(px, py) <= 0 {
                lo = m;
                best = (px, py);
                break;
            }
        }
        if e.g.hi <= 0.0 {
            // the whole box is feasible; its far corner is the best point in it
            continue;
        }
        if r.width() <= min_width {
            status = CertStatus::PrecisionExhausted;
            hi = top.key;
            break;
        }
        for c in r.split() {
            let k = c.max_abs();
            if k > lo {
                heap.push(Entry { key: k, r: c });
            }
        }
    }
    let witness = (Dyadic::from_f64(best.0), Dyadic::from_f64(best.1));
    if ev.exact_sign(&witness.0, &witness.1) > 0 {
        return Err(Error::InvalidInput("witness failed exact recheck".into()));
    }
    let lo_d = modulus_floor(best.0, best.1);
    let mut hi_d = Dyadic::from_f64(hi);
    if hi_d < lo_d {
        hi_d = lo_d.clone();
    }
    Ok(RadiusCertificate {
        n: ev.n,
        mode: if half_plane_only { Mode::LeftHalf } else { Mode::Full },
        lo: lo_d,
        hi: hi_d,
        witness,
        tol: cfg.tol.clone(),
        boxes_processed: boxes,
        status,
    })
}

/// Result of the inner semi-disk search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SemiDisk {
    /// `S_n` contains no left half-disk of positive radius.
    NotApplicable,
    Radius(RadiusCertificate),
}

/// Certified `rho_n^*` by minimizing `|z|` over `{G_n > 0, Re z <= 0}`.
pub fn inner_semidisk_radius(n: u32, cfg: &BbConfig) -> Result<SemiDisk> {
    if origin_component_class(n)? == OriginClass::Singleton {
        return Ok(SemiDisk::NotApplicable);
    }
    let ev = ScaledEvaluator::new(n)?;
    // lower bound for y_{n,1} / n: no exterior point on the axis below it
    let e = e_polynomial(n)?;
    let y1 = first_positive_root_lower(&e);
    let axis_safe = y1.to_f64() / n as f64;
    let axis_safe = if axis_safe > 0.0 { next_down(axis_safe) } else { 0.0 };
    Ok(SemiDisk::Radius(semidisk_search(&ev, axis_safe, cfg)))
}

/// Lower end of the smallest positive root of `E_n`, refined to 2^-60.
fn first_positive_root_lower(e: &IntPoly) -> Dyadic {
    let shifted = e.shift_down(e.valuation().unwrap_or(0));
    let roots = crate::rootiso::isolate_real_roots(&shifted, &crate::rootiso::RootDomain::positive());
    match roots.first() {
        None => Dyadic::zero(),
        Some(b) => refine_root(b, &shifted, &Dyadic::new(BigInt::one(), -60)).lo,
    }
}

fn semidisk_search(ev: &ScaledEvaluator, axis_safe: f64, cfg: &BbConfig) -> RadiusCertificate {
    let tol = cfg.tol.to_f64();
    let min_width = libm::ldexp(1.0, -(cfg.min_width_log2 as i32));
    // (-4, 0) lies outside D_2, hence outside S_n
    let mut best = (-4.0f64, 0.0f64);
    let mut hi = 4.0f64;
    let mut heap = BinaryHeap::new();
    let root = Rect { x1: 0.0, ..ROOT_BOX };
    // min-heap through negated keys
    heap.push(Entry { key: -root.min_abs(), r: root });
    let mut boxes = 0u64;
    let mut status = CertStatus::Complete;
    let lo;
    loop {
        let Some(top) = heap.pop() else {
            lo = hi;
            break;
        };
        let k = -top.key;
        if k >= hi - tol {
            lo = k.min(hi);
            break;
        }
        if boxes >= cfg.max_boxes {
            status = CertStatus::BudgetExhausted;
            lo = k;
            break;
        }
        boxes += 1;
        let r = top.r;
        let e = ev.eval_box(&r);
        if e.g.hi <= 0.0 {
            continue;
        }
        // G(x, y) <= G(0, y) = E_n(n y) <= 0 when G increases in x
        if r.x1 == 0.0 && r.y1 <= axis_safe && e.gx.lo > 0.0 {
            continue;
        }
        let mut pts = r.corners_and_center().map(|(x, y, _)| (x, y, Fc::point(x, y).abs_hi()));
        pts.sort_by(|a, b| a.2.total_cmp(&b.2));
        for (px, py, m) in pts {
            if m < hi && ev.sign_at(px, py) > 0 {
                hi = m;
                best = (px, py);
                break;
            }
        }
        if r.width() <= min_width {
            status = CertStatus::PrecisionExhausted;
            lo = k;
            break;
        }
        for c in r.split() {
            let k = c.min_abs();
            if k < hi {
                heap.push(Entry { key: -k, r: c });
            }
        }
    }
    let witness = (Dyadic::from_f64(best.0), Dyadic::from_f64(best.1));
    let hi_d = modulus_ceil(best.0, best.1);
    let mut lo_d = Dyadic::from_f64(lo);
    if lo_d > hi_d {
        lo_d = hi_d.clone();
    }
    RadiusCertificate {
        n: ev.n,
        mode: Mode::InnerSemiDisk,
        lo: lo_d,
        hi: hi_d,
        witness,
        tol: cfg.tol.clone(),
        boxes_processed: boxes,
        status,
    }
}

/// The candidate `y_{n,1} / n` as a tight enclosure, when `E_n` has a
/// positive root.
pub fn axis_candidate(n: u32) -> Result<Option<DyadicInterval>> {
    let e = e_polynomial(n)?;
    let shifted = e.shift_down(e.valuation().unwrap_or(0));
    let roots = crate::rootiso::isolate_real_roots(&shifted, &crate::rootiso::RootDomain::positive());
    let Some(b0) = roots.first() else { return Ok(None) };
    let b = refine_root(b0, &shifted, &Dyadic::new(BigInt::one(), -80));
    let nn = Dyadic::from_i64(n as i64);
    Ok(Some(DyadicInterval::new(b.lo.div(&nn, 96, Round::Floor), b.hi.div(&nn, 96, Round::Ceil), 96)))
}

/// Radius used by the coverage check.
#[derive(Debug, Clone)]
pub enum RadiusFormula {
    /// `1/e + (2 + delta) sqrt(e^2 + 1) / sqrt(n)`.
    Cor42 { delta: BigRat },
    Custom(BigRat),
}

/// Upper `f64` bound of the corollary radius, rounded down (a smaller radius
/// only makes the check harder).
fn radius_value(n: u32, f: &RadiusFormula) -> f64 {
    match f {
        RadiusFormula::Custom(r) => Dyadic::from_rational(r, 64, Round::Floor).to_f64().next_down(),
        RadiusFormula::Cor42 { delta } => {
            let prec = 96;
            let e = crate::exactnum::e_const(prec);
            let inv_e = DyadicInterval::one(prec).div(&e).expect("e > 0");
            let s = e.sqr().add(&DyadicInterval::one(prec)).sqrt().expect("positive");
            let two_d = DyadicInterval::from_rational(&(rat(2, 1) + delta), prec);
            let sn = DyadicInterval::from_i64(n as i64, prec).sqrt().expect("positive");
            let r = inv_e.add(&two_d.mul(&s).div(&sn).expect("n > 0"));
            r.lo().to_f64().next_down()
        }
    }
}

/// Proves `S_n cap {|z| > r} = {}` (or its left-half version); `Ok(false)` when
/// a feasible point beyond `r` is found.
pub fn coverage_disk_check(n: u32, radius: &RadiusFormula, half_plane_only: bool, cfg: &BbConfig) -> Result<bool> {
    let ev = ScaledEvaluator::new(n)?;
    let r = radius_value(n, radius);
    coverage_with(&ev, r, half_plane_only, cfg)
}

pub(crate) fn coverage_with(ev: &ScaledEvaluator, r: f64, half_plane_only: bool, cfg: &BbConfig) -> Result<bool> {
    let min_width = libm::ldexp(1.0, -(cfg.min_width_log2 as i32));
    let root = if half_plane_only { Rect { x1: 0.0, ..ROOT_BOX } } else { ROOT_BOX };
    let mut stack = vec![root];
    let mut boxes = 0u64;
    let mut undecided = false;
    let r2 = Dyadic::from_f64(r).square();
    while let Some(b) = stack.pop() {
        boxes += 1;
        if boxes > cfg.max_boxes {
            return Err(Error::PrecisionExhausted(0));
        }
        if b.max_abs() <= r {
            continue;
        }
        let e = ev.eval_box(&b);
        if e.g.lo > 0.0 {
            continue;
        }
        for (px, py, _) in b.corners_and_center() {
            let (dx, dy) = (Dyadic::from_f64(px), Dyadic::from_f64(py));
            if dx.square().add(&dy.square()) > r2 && ev.sign_at(px, py) <= 0 {
                return Ok(false);
            }
        }
        if b.width() <= min_width {
            undecided = true;
            continue;
        }
        let [a, c] = b.split();
        stack.push(c);
        stack.push(a);
    }
    if undecided {
        return Err(Error::Indeterminate);
    }
    Ok(true)
}

/// Rounds `v` up (or down) to `digits` decimals.
pub fn display_round(v: &Dyadic, digits: u32, up: bool) -> alloc::string::String {
    v.to_decimal(digits, if up { Round::Ceil } else { Round::Floor })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(tol_digits: u32) -> BbConfig {
        BbConfig::with_tol(decimal_tol(tol_digits))
    }

    #[test]
    fn n1_full_is_two() {
        let c = max_modulus(1, false, &cfg(6)).unwrap();
        assert!(c.is_complete());
        assert_eq!(c.lo, Dyadic::from_i64(2));
        assert!(c.hi.to_f64() - 2.0 <= 1e-6);
    }

    #[test]
    fn n2_full_closed_form() {
        let c = max_modulus(2, false, &cfg(7)).unwrap();
        let v = 0.5 * libm::sqrt(2.0 * (1.0 + libm::sqrt(2.0)));
        assert!(c.lo.to_f64() <= v + 1e-15 && v <= c.hi.to_f64() + 1e-15, "{c:?}");
        assert!(c.hi.sub(&c.lo).to_f64() <= 1e-7);
    }

    #[test]
    fn left_half_below_full() {
        for n in [3u32, 5, 6] {
            let f = max_modulus(n, false, &cfg(5)).unwrap();
            let l = max_modulus(n, true, &cfg(5)).unwrap();
            assert!(l.lo <= f.hi);
            assert!(l.witness.0 <= Dyadic::zero());
        }
    }

    #[test]
    fn semidisk_n3() {
        let SemiDisk::Radius(c) = inner_semidisk_radius(3, &cfg(9)).unwrap() else { panic!() };
        let v = libm::sqrt(3.0) / 3.0;
        assert!(c.lo.to_f64() <= v + 1e-15 && v <= c.hi.to_f64() + 1e-15, "{c:?}");
        assert_eq!(inner_semidisk_radius(5, &cfg(3)).unwrap(), SemiDisk::NotApplicable);
    }

    #[test]
    fn coverage_examples() {
        let c = cfg(6);
        assert!(coverage_disk_check(2, &RadiusFormula::Custom(rat(8, 5)), false, &c).unwrap());
        assert!(coverage_disk_check(6, &RadiusFormula::Custom(rat(19, 20)), true, &c).unwrap());
        assert!(!coverage_disk_check(1, &RadiusFormula::Custom(rat(3, 2)), false, &c).unwrap());
    }
}
