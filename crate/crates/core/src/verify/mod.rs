//! Named regression checks, one per numbered result, and the suite runner.
//!
//! A check is a list of sub-assertions. Each one is certified true, certified
//! false, or undecided; the check passes only when every sub-assertion is
//! certified true. Float-grade evidence goes into the detail list and never
//! decides a status, except for checks whose whole content is float-grade,
//! which are reported as `Informational`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::exactnum::{
    e_const, exp_minus_one, factorial_bounds_check, lambert_w, pi, rat, BigRat, Dyadic, DyadicInterval, Round,
};
use crate::extremal::{
    coverage_disk_check, decimal_tol, display_round, inner_semidisk_radius, max_modulus, BbConfig,
    RadiusCertificate, RadiusFormula, SemiDisk,
};
use crate::region::{
    complex_zeros, contains, max_v_plus_sequence, nondecreasing_runs, o3_holds, origin_component_class,
    refine_to_bits, slice_endpoint_deviation, v_plus, Membership, OriginClass,
};
use crate::rootiso::{isolate_real_roots, refine_root, RootDomain};
use crate::szego::{
    boundary_concavity_probe, buckholtz_bounds_check, delta_rho, distance_consistency, distance_lower_bound,
    inverse_e_circle_probe, moebius_inf_sup, quarter_disk_check, r2_point, sigma1_boundary_samples,
    sigma1_left_endpoint, sup_band_closed_form, sup_band_samples, sup_band_split, tangent_distance,
    tangent_distance_in_w, zero_cluster_check, MoebiusQuery,
};
use crate::taylorpoly::{
    e_polynomial, e_polynomial_expanded, f_m_polynomial, scaled_partial_sum, ComplexPoint, IntPoly,
};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckStatus {
    Pass,
    Fail,
    Indeterminate,
    /// Float-grade evidence only.
    Informational,
}

impl CheckStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckStatus::Pass => "Pass",
            CheckStatus::Fail => "Fail",
            CheckStatus::Indeterminate => "Indeterminate",
            CheckStatus::Informational => "Informational",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub check_id: String,
    pub status: CheckStatus,
    /// Ordered `(key, value)` pairs: enclosures, parameters and sub-verdicts.
    pub detail: Vec<(String, String)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Profile {
    Quick,
    Full,
}

impl Profile {
    pub fn as_str(self) -> &'static str {
        match self {
            Profile::Quick => "quick",
            Profile::Full => "full",
        }
    }
}

/// Deliberate defects for negative-control runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mutation {
    /// Adds one to a coefficient of the closed-form `E_7`.
    PerturbE7,
}

/// Ranges and sample counts shared by the checks.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CheckParams {
    /// Upper degree for branch-and-bound checks.
    pub n_max: u32,
    /// Upper degree for the exact imaginary-axis checks.
    pub slice_n_max: u32,
    /// Upper `m` for the `f_m` and `I_(4m,k)` checks.
    pub m_max: u32,
    /// Sample count for sampled checks.
    pub samples: u32,
    /// Branch-and-bound tolerance `10^-tol_digits`.
    pub tol_digits: u32,
    pub mutation: Option<Mutation>,
}

impl CheckParams {
    pub fn for_profile(profile: Profile) -> CheckParams {
        match profile {
            Profile::Quick => CheckParams { n_max: 12, slice_n_max: 100, m_max: 10, samples: 200, tol_digits: 6, mutation: None },
            Profile::Full => CheckParams { n_max: 20, slice_n_max: 100, m_max: 25, samples: 500, tol_digits: 6, mutation: None },
        }
    }

    fn cfg(&self) -> BbConfig {
        BbConfig::with_tol(decimal_tol(self.tol_digits))
    }
}

/// A registered check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckInfo {
    pub id: &'static str,
    pub statement: &'static str,
    /// Only run by the full profile.
    pub full_only: bool,
}

const fn info(id: &'static str, statement: &'static str) -> CheckInfo {
    CheckInfo { id, statement, full_only: false }
}

const fn full(id: &'static str, statement: &'static str) -> CheckInfo {
    CheckInfo { id, statement, full_only: true }
}

/// Every registered check, sorted by id.
pub const REGISTRY: &[CheckInfo] = &[
    info("buckholtz", "|T_n| <= e sqrt(n) on |z| >= 1 and <= 2e sqrt(n) outside the Szegő region"),
    info("buckholtz-zeros", "scaled zeros lie within 2e/sqrt(n) of the Szegő region (float-grade)"),
    info("cor-3.4", "S_n is inside D_1.6 for n >= 2"),
    info("cor-4.2", "S_n in the left half-plane is inside D_(1/e + (2+delta) sqrt(e^2+1)/sqrt(n))"),
    info("cor-5.2", "the origin component of V_n^+ is {0} iff n = 1, 2 mod 4"),
    info("eneström-roots", "all zeros of the scaled partial sum lie in D_1"),
    info("lemma-3.1", "S_n is inside D_2"),
    info("lemma-5.1", "closed forms of E_n by residue of n mod 4"),
    info("lemma-5.4", "|f_m - f~_m| <= rho cosh(rho)/(4m) on D_rho"),
    info("lemma-7.1", "(n/e)^n sqrt(2 pi n) < n! <= e (n/e)^n sqrt(n)"),
    info("lemma-7.2", "the Szegő region is strictly convex"),
    info("lemma-7.4", "D_(1/4) is inside the Szegő region"),
    info("lemma-7.5", "distance from C_rho to the Szegő region is at least (rho e - 1)/sqrt(e^2+1)"),
    info("lemma-7.6", "inf and sup of |w/(w-1)| over the relevant sets"),
    info("obs-O1", "origin component of V_n^+ by n mod 4"),
    info("obs-O2", "endpoints of V_n^+ approach the pi grid of the right parity"),
    info("obs-O3", "max V_n^+ <= n/e + ln(n)/(2e) + 1.2604 for n <= 100"),
    info("rem-3.3", "S_n is inside D_1 for 3 <= n <= 20"),
    full("table-1", "max |z| over S_n, rounded up"),
    full("table-2", "max |z| over S_n in the left half-plane, rounded up"),
    full("table-3", "largest left semi-disk radius, rounded down"),
    info("thm-3.2", "S_n is inside D_(1+eps) for n >= (1.0085 e/eps)^2"),
    info("thm-4.4", "S_n in the left half-plane is inside D_0.95 for n >= 3"),
    info("thm-5.6", "endpoints of I_(4m,k) tend to (2k-2)pi and (2k-1)pi"),
    info("thm-6.1", "a left semi-disk of positive radius fits in S_n iff n = 0, 3 mod 4"),
    info("y81-digits", "V_8^+ = [0, y_(8,1)] with y_(8,1) = 3.3951402205749..."),
];

pub fn registry() -> &'static [CheckInfo] {
    REGISTRY
}

/// Ids run by `profile`, in report order.
pub fn checks_for(profile: Profile) -> Vec<&'static str> {
    REGISTRY.iter().filter(|c| profile == Profile::Full || !c.full_only).map(|c| c.id).collect()
}

/// Runs one check. Numeric failures inside the check become `Indeterminate`.
pub fn run_check(check_id: &str, params: &CheckParams) -> Result<CheckResult> {
    let f: fn(&CheckParams, &mut Ctx) -> Result<()> = match check_id {
        "buckholtz" => buckholtz,
        "buckholtz-zeros" => buckholtz_zeros,
        "cor-3.4" => cor_3_4,
        "cor-4.2" => cor_4_2,
        "cor-5.2" => cor_5_2,
        "eneström-roots" => enestrom_roots,
        "lemma-3.1" => lemma_3_1,
        "lemma-5.1" => lemma_5_1,
        "lemma-5.4" => lemma_5_4,
        "lemma-7.1" => lemma_7_1,
        "lemma-7.2" => lemma_7_2,
        "lemma-7.4" => lemma_7_4,
        "lemma-7.5" => lemma_7_5,
        "lemma-7.6" => lemma_7_6,
        "obs-O1" => obs_o1,
        "obs-O2" => obs_o2,
        "obs-O3" => obs_o3,
        "rem-3.3" => rem_3_3,
        "table-1" => table_1,
        "table-2" => table_2,
        "table-3" => table_3,
        "thm-3.2" => thm_3_2,
        "thm-4.4" => thm_4_4,
        "thm-5.6" => thm_5_6,
        "thm-6.1" => thm_6_1,
        "y81-digits" => y81_digits,
        other => return Err(Error::UnknownCheck(other.to_string())),
    };
    let mut ctx = Ctx::default();
    if let Err(e) = f(params, &mut ctx) {
        ctx.undecided = true;
        ctx.note("error", e.to_string());
    }
    Ok(ctx.finish(check_id))
}

/// Runs every check of the profile in id order.
pub fn run_all(profile: Profile) -> Vec<CheckResult> {
    run_all_with(profile, &CheckParams::for_profile(profile))
}

pub fn run_all_with(profile: Profile, params: &CheckParams) -> Vec<CheckResult> {
    checks_for(profile)
        .into_iter()
        .map(|id| run_check(id, params).expect("registered id"))
        .collect()
}

#[derive(Default)]
struct Ctx {
    failed: bool,
    undecided: bool,
    informational: bool,
    detail: Vec<(String, String)>,
}

impl Ctx {
    fn note(&mut self, key: impl Into<String>, value: impl Into<String>) {
        self.detail.push((key.into(), value.into()));
    }

    fn assert(&mut self, key: impl Into<String>, ok: bool, value: impl Into<String>) {
        if !ok {
            self.failed = true;
        }
        let v = value.into();
        let verdict = if ok { "ok" } else { "FAIL" };
        self.note(key, if v.is_empty() { verdict.to_string() } else { format!("{verdict}: {v}") });
    }

    /// `Err` counts as undecided.
    fn decide(&mut self, key: impl Into<String>, r: Result<bool>, value: impl Into<String>) {
        match r {
            Ok(ok) => self.assert(key, ok, value),
            Err(e) => {
                self.undecided = true;
                self.note(key, format!("undecided: {e}"));
            }
        }
    }

    fn finish(self, id: &str) -> CheckResult {
        let status = if self.failed {
            CheckStatus::Fail
        } else if self.informational {
            CheckStatus::Informational
        } else if self.undecided {
            CheckStatus::Indeterminate
        } else {
            CheckStatus::Pass
        };
        CheckResult { check_id: id.to_string(), status, detail: self.detail }
    }
}

const PREC: u32 = 128;

fn fmt_iv(v: &DyadicInterval, digits: u32) -> String {
    format!("[{}, {}]", v.lo().to_decimal(digits, Round::Floor), v.hi().to_decimal(digits, Round::Ceil))
}

fn fmt_cert(c: &RadiusCertificate) -> String {
    format!(
        "[{}, {}] boxes={} {:?}",
        c.lo.to_decimal(9, Round::Floor),
        c.hi.to_decimal(9, Round::Ceil),
        c.boxes_processed,
        c.status
    )
}

fn q(s: &str) -> BigRat {
    let (int, frac) = s.split_once('.').unwrap_or((s, ""));
    let den = num_traits::pow(BigInt::from(10), frac.len());
    let num: BigInt = format!("{int}{frac}").parse().expect("decimal literal");
    BigRat::new(num, den)
}

fn decimals(s: &str) -> u32 {
    s.split_once('.').map_or(0, |(_, f)| f.len() as u32)
}

fn iv(q: &BigRat) -> DyadicInterval {
    DyadicInterval::from_rational(q, PREC)
}

/// Certificate and its complete flag, or the error as undecided.
fn certify(ctx: &mut Ctx, key: &str, r: Result<RadiusCertificate>) -> Option<RadiusCertificate> {
    match r {
        Ok(c) if c.is_complete() => {
            ctx.note(key, fmt_cert(&c));
            Some(c)
        }
        Ok(c) => {
            ctx.undecided = true;
            ctx.note(key, format!("undecided: {}", fmt_cert(&c)));
            None
        }
        Err(e) => {
            ctx.undecided = true;
            ctx.note(key, format!("undecided: {e}"));
            None
        }
    }
}

// printed values of max |z| (full plane, then left half-plane) for n = 3..=20
const TABLE1: [&str; 18] = [
    "0.847", "0.741", "0.690", "0.665", "0.6546", "0.6523", "0.6542", "0.659", "0.664", "0.670", "0.676", "0.682",
    "0.687", "0.692", "0.697", "0.702", "0.707", "0.711",
];
const TABLE2: [&str; 18] = [
    "0.847", "0.741", "0.680", "0.597", "0.566", "0.546", "0.534", "0.527", "0.496", "0.486", "0.480", "0.476",
    "0.474", "0.458", "0.453", "0.450", "0.449", "0.448",
];
// (n, rho_n^*, n rho_n^*), both rounded down
const TABLE3: [(u32, &str, &str); 10] = [
    (3, "0.577", "1.732"),
    (7, "0.252", "1.764"),
    (11, "0.154", "1.701"),
    (15, "0.111", "1.668"),
    (19, "0.086", "1.649"),
    (4, "0.653", "2.615"),
    (8, "0.424", "3.395"),
    (12, "0.281", "3.379"),
    (16, "0.207", "3.324"),
    (20, "0.164", "3.290"),
];

/// Printed table value for `n >= 3`.
pub fn table_value(left_half: bool, n: u32) -> Option<&'static str> {
    let t = if left_half { &TABLE2 } else { &TABLE1 };
    if (3..=20).contains(&n) {
        Some(t[n as usize - 3])
    } else {
        None
    }
}

/// Printed `(rho_n^*, n rho_n^*)` pair.
pub fn table3_value(n: u32) -> Option<(&'static str, &'static str)> {
    TABLE3.iter().find(|r| r.0 == n).map(|r| (r.1, r.2))
}

/// `1/2 sqrt(2(1 + sqrt 2))`, the common `n = 2` entry.
fn n2_value() -> DyadicInterval {
    let two = DyadicInterval::from_i64(2, PREC);
    let s = two.sqrt().expect("positive");
    two.mul(&DyadicInterval::one(PREC).add(&s)).sqrt().expect("positive").mul_pow2(-1)
}

/// Compares a max-modulus certificate with the printed table row.
fn table_row(ctx: &mut Ctx, left_half: bool, n: u32, c: &RadiusCertificate) {
    let key = format!("n={n}.display");
    match n {
        1 => {
            let ok = c.lo == Dyadic::from_i64(2) && c.hi >= Dyadic::from_i64(2);
            ctx.assert(key, ok, "value 2");
        }
        2 => {
            let v = n2_value();
            let ok = c.interval().overlaps(&v) && display_round(&c.hi, 3, true) == "1.099";
            ctx.assert(key, ok, format!("encloses {} shown as 1.099", fmt_iv(&v, 9)));
        }
        _ => {
            let printed = table_value(left_half, n).expect("3..=20");
            let d = decimals(printed);
            let shown = display_round(&c.hi, d, true);
            let shown_lo = display_round(&c.lo, d, true);
            let ok = shown == printed && shown_lo == printed;
            ctx.assert(key, ok, format!("computed {shown}, printed {printed}"));
        }
    }
}

fn full_certs(ctx: &mut Ctx, p: &CheckParams, left_half: bool, ns: impl Iterator<Item = u32>) -> Vec<(u32, RadiusCertificate)> {
    let cfg = p.cfg();
    let mut out = Vec::new();
    for n in ns {
        let key = format!("n={n}.{}", if left_half { "left" } else { "full" });
        if let Some(c) = certify(ctx, &key, max_modulus(n, left_half, &cfg)) {
            out.push((n, c));
        }
    }
    out
}

fn buckholtz(p: &CheckParams, ctx: &mut Ctx) -> Result<()> {
    for n in [6u32, 12, 20].into_iter().filter(|n| *n <= p.n_max) {
        let r = buckholtz_bounds_check(n, 500)?;
        ctx.assert(
            format!("n={n}.ring"),
            r.ring_certified && r.ring_samples == 500,
            format!("{} samples, max |T_n|/(e sqrt n) = {:.6}", r.ring_samples, r.ring_max_ratio),
        );
        ctx.assert(
            format!("n={n}.outside"),
            r.outside_certified && r.outside_samples == 500,
            format!("{} samples, max |T_n|/(2e sqrt n) = {:.6}", r.outside_samples, r.outside_max_ratio),
        );
    }
    Ok(())
}

fn buckholtz_zeros(p: &CheckParams, ctx: &mut Ctx) -> Result<()> {
    ctx.informational = true;
    let n = 12.min(p.n_max.max(1));
    let z = zero_cluster_check(n, 2000)?;
    ctx.note("n", n.to_string());
    ctx.note("zeros", z.zeros.to_string());
    ctx.note("residuals_ok", z.residuals_ok.to_string());
    ctx.note("max_distance", format!("{:.6}", z.max_distance));
    ctx.note("bound", format!("{:.6}", z.bound));
    ctx.note("holds", z.holds().to_string());
    Ok(())
}

fn cor_3_4(p: &CheckParams, ctx: &mut Ctx) -> Result<()> {
    let limit = Dyadic::from_rational(&rat(8, 5), 64, Round::Floor);
    for (n, c) in full_certs(ctx, p, false, 2..=p.n_max) {
        ctx.assert(format!("n={n}.below_1.6"), c.hi < limit, "");
    }
    // n >= 21 through the eps = 0.6 case of the large-n theorem
    let n0 = iv(&q("1.0085")).mul(&e_const(PREC)).div(&iv(&q("0.6")))?.sqr();
    let ok = n0.certainly_gt(&iv(&q("20.87"))) && n0.certainly_lt(&DyadicInterval::from_i64(21, PREC));
    ctx.assert("n0(0.6) in (20.87, 21)", ok, fmt_iv(&n0, 6));
    Ok(())
}

fn cor_4_2(p: &CheckParams, ctx: &mut Ctx) -> Result<()> {
    let cfg = p.cfg();
    let delta = rat(1, 100);
    ctx.note("delta", "1/100");
    for n in 1..=p.n_max {
        let r = coverage_disk_check(n, &RadiusFormula::Cor42 { delta: delta.clone() }, true, &cfg);
        ctx.decide(format!("n={n}.covered"), r, "");
    }
    Ok(())
}

fn cor_5_2(p: &CheckParams, ctx: &mut Ctx) -> Result<()> {
    let mut bad = Vec::new();
    for n in 1..=p.slice_n_max {
        let class = origin_component_class(n)?;
        let expect = if matches!(n % 4, 1 | 2) { OriginClass::Singleton } else { OriginClass::PositiveInterval };
        if class != expect {
            bad.push(n);
        }
    }
    ctx.assert(format!("classes n=1..{}", p.slice_n_max), bad.is_empty(), format!("mismatches {bad:?}"));
    Ok(())
}

fn enestrom_roots(p: &CheckParams, ctx: &mut Ctx) -> Result<()> {
    // 0 <= a_0 <= a_1 <= ... <= a_n puts every zero in the closed unit disk
    let mut bad = Vec::new();
    for n in 1..=p.slice_n_max {
        let c = scaled_partial_sum(n)?;
        let ok = c.coeffs().iter().all(|a| !a.is_negative()) && c.coeffs().windows(2).all(|w| w[0] <= w[1]);
        if !ok {
            bad.push(n);
        }
    }
    ctx.assert(format!("monotone coefficients n=1..{}", p.slice_n_max), bad.is_empty(), format!("violations {bad:?}"));
    let mut worst: f64 = 0.0;
    for n in 1..=p.n_max {
        if let Ok(z) = complex_zeros(&scaled_partial_sum(n)?) {
            for c in z {
                let (x, y) = c.to_f64();
                worst = worst.max(libm::hypot(x, y));
            }
        }
    }
    ctx.note(format!("float max |zeta| n=1..{}", p.n_max), format!("{worst:.12}"));
    Ok(())
}

fn lemma_3_1(p: &CheckParams, ctx: &mut Ctx) -> Result<()> {
    let per_n = (p.samples / 2).max(1);
    for n in 1..=p.n_max {
        let mut outside = 0;
        let mut undecided = 0;
        for k in 0..per_n {
            let (a, b) = r2_point(k);
            let r = 3.0 - a;
            let th = 2.0 * core::f64::consts::PI * b;
            let z = ComplexPoint::from_f64(r * libm::cos(th), r * libm::sin(th), PREC);
            if !z.norm_sqr().certainly_gt(&DyadicInterval::from_i64(4, PREC)) {
                continue;
            }
            match contains(n, &z, true)? {
                Membership::Outside => outside += 1,
                Membership::Inside => {}
                Membership::Boundary { .. } => undecided += 1,
            }
        }
        let ring = format!("{outside} of {per_n} ring points outside");
        if undecided > 0 {
            ctx.undecided = true;
            ctx.note(format!("n={n}.ring"), format!("undecided: {ring}"));
        } else {
            ctx.assert(format!("n={n}.ring"), outside == per_n, ring);
        }
    }
    Ok(())
}

/// `E_n` from the closed form, optionally mutated.
fn e_closed_form(n: u32, mutation: Option<Mutation>) -> Result<IntPoly> {
    let e = e_polynomial(n)?;
    if n == 7 && mutation == Some(Mutation::PerturbE7) {
        let mut c = e.coeffs().to_vec();
        let k = c.len() - 1;
        c[k] += BigInt::one();
        return Ok(IntPoly::new(c, e.scale().clone()));
    }
    Ok(e)
}

fn lemma_5_1(p: &CheckParams, ctx: &mut Ctx) -> Result<()> {
    let n_top = 30;
    let mut bad = Vec::new();
    for n in 1..=n_top {
        if !e_closed_form(n, p.mutation)?.same_value(&e_polynomial_expanded(n)?) {
            bad.push(n);
        }
    }
    if let Some(m) = p.mutation {
        ctx.note("mutation", format!("{m:?}"));
    }
    ctx.assert(format!("exact equality n=1..{n_top}"), bad.is_empty(), format!("mismatches {bad:?}"));
    Ok(())
}

/// `-sum_{k<2m} (-1)^k z^(2k+1)/(2k+1)!`.
fn f_tilde(m: u32) -> IntPoly {
    let deg = 4 * m as usize;
    let mut c = vec![BigRat::zero(); deg];
    for k in 0..2 * m as usize {
        let s: i64 = if k % 2 == 0 { -1 } else { 1 };
        c[2 * k + 1] = BigRat::new(BigInt::from(s), crate::exactnum::factorial(2 * k as u32 + 1));
    }
    IntPoly::from_rationals(&c)
}

fn lemma_5_4(p: &CheckParams, ctx: &mut Ctx) -> Result<()> {
    let per = (p.samples / 10).max(4);
    for rho in [1i64, 2, 5] {
        let r = DyadicInterval::from_i64(rho, PREC);
        let rc = r.mul(&r.cosh());
        for m in 1..=p.m_max {
            let f = f_m_polynomial(m)?;
            let ft = f_tilde(m);
            let bound = rc.div_u64(4 * m as u64);
            let b2 = bound.sqr();
            let mut ok = true;
            let mut worst: f64 = 0.0;
            for k in 0..per {
                let (a, b) = r2_point(k);
                // every fourth point on the circle itself
                let t = if k % 4 == 0 { rho as f64 } else { rho as f64 * libm::sqrt(a) };
                let th = 2.0 * core::f64::consts::PI * b;
                let z = ComplexPoint::from_f64(t * libm::cos(th), t * libm::sin(th), PREC);
                if !z.norm_sqr().certainly_le(&r.sqr()) {
                    continue;
                }
                let d = f.eval_complex(&z).sub(&ft.eval_complex(&z)).norm_sqr();
                ok &= d.certainly_le(&b2);
                worst = worst.max(libm::sqrt(d.hi().to_f64() / b2.lo().to_f64()));
            }
            ctx.assert(format!("rho={rho}.m={m}"), ok, format!("max ratio {worst:.6}"));
        }
    }
    Ok(())
}

fn lemma_7_1(_p: &CheckParams, ctx: &mut Ctx) -> Result<()> {
    let mut bad = Vec::new();
    for n in 1..=200 {
        match factorial_bounds_check(n) {
            Ok(true) => {}
            Ok(false) => bad.push(n),
            Err(e) => return Err(e),
        }
    }
    ctx.assert("bounds n=1..200", bad.is_empty(), format!("violations {bad:?}"));
    Ok(())
}

fn lemma_7_2(_p: &CheckParams, ctx: &mut Ctx) -> Result<()> {
    let probe = boundary_concavity_probe(&rat(1, 1000))?;
    ctx.assert(
        "second differences negative",
        probe.certified,
        format!("{} grid points, max {:.3e}", probe.points, probe.max_second_difference),
    );
    let left = sigma1_left_endpoint(PREC)?;
    let printed = iv(&q("-0.278464543"));
    let ok = left.sub(&printed).abs().certainly_le(&iv(&q("0.0000000005")));
    ctx.assert("-W(1/e) = -0.278464543", ok, fmt_iv(&left, 12));
    Ok(())
}

fn lemma_7_4(p: &CheckParams, ctx: &mut Ctx) -> Result<()> {
    ctx.assert("e^(5/4)/4 < 1 and circle |z| = 1/4 inside", quarter_disk_check(p.samples)?, format!("{} samples", p.samples));
    Ok(())
}

fn lemma_7_5(p: &CheckParams, ctx: &mut Ctx) -> Result<()> {
    let probe = inverse_e_circle_probe(p.samples)?;
    ctx.assert("i/e not outside", probe.at_i_over_e != Membership::Outside, format!("{:?}", probe.at_i_over_e));
    ctx.assert(
        "rest of C_(1/e) outside",
        probe.outside == probe.samples,
        format!("{} of {}", probe.outside, probe.samples),
    );

    let set = sigma1_boundary_samples(p.samples as usize)?;
    let inv_e = exp_minus_one(PREC);
    let w_max = lambert_w(&inv_e, PREC)?.value;
    let half_pi = pi(PREC).mul_pow2(-1);
    for rho_s in ["0.4", "0.5", "0.75", "0.95", "1.2", "1.5", "2"] {
        let rho = iv(&q(rho_s));
        let bound = distance_lower_bound(&rho)?;
        ctx.decide(format!("rho={rho_s}.sampled distance"), distance_consistency(&rho, 50, &set), fmt_iv(&bound, 9));

        // both tangent formulas agree at interior angles
        let mut agree = true;
        for k in 1..=8 {
            let phi = half_pi.add(&half_pi.mul(&iv(&rat(k, 9))));
            let w = lambert_w(&phi.cos().neg().mul(&inv_e), PREC)?.value;
            agree &= tangent_distance(&rho, &phi)?.overlaps(&tangent_distance_in_w(&rho, &w)?);
        }
        ctx.assert(format!("rho={rho_s}.formulas agree"), agree, "");

        let at_zero = tangent_distance_in_w(&rho, &DyadicInterval::zero(PREC))?;
        ctx.assert(format!("rho={rho_s}.limit"), at_zero.overlaps(&bound), fmt_iv(&at_zero, 9));

        let mut prev = at_zero;
        let mut increasing = true;
        for k in 1..=16 {
            let w = w_max.mul(&iv(&rat(k, 16)));
            let d = tangent_distance_in_w(&rho, &w)?;
            increasing &= d.certainly_gt(&prev);
            prev = d;
        }
        ctx.assert(format!("rho={rho_s}.increasing"), increasing, "");
        ctx.assert(format!("rho={rho_s}.upper"), bound.certainly_le(&rho.sub(&inv_e)), "");
    }

    // the derivative numerator in w stays positive over the whole range
    let e = e_const(PREC);
    let one = DyadicInterval::one(PREC);
    let w = DyadicInterval::zero(PREC).hull(&w_max);
    let rho = inv_e.hull(&DyadicInterval::from_i64(2, PREC));
    let ew = w.add(&one).exp();
    let two_w = w.mul_pow2(1);
    let num = ew
        .sqr()
        .mul(&two_w.mul(&w).add(&two_w).add(&one))
        .add(&rho.mul(&ew.powi(3)).mul(&w))
        .add(&rho.mul(&ew).mul(&w.add(&DyadicInterval::from_i64(2, PREC))))
        .sub(&one);
    let _ = e;
    ctx.assert("derivative numerator > 0 on [0, W(1/e)] x [1/e, 2]", num.certainly_positive(), fmt_iv(&num, 6));
    Ok(())
}

fn lemma_7_6(p: &CheckParams, ctx: &mut Ctx) -> Result<()> {
    for (label, sigma) in [("1", iv(&rat(1, 1))), ("1/4", iv(&rat(1, 4))), ("1/e", exp_minus_one(PREC))] {
        let v = moebius_inf_sup(&MoebiusQuery::Inf { sigma: sigma.clone() })?;
        let expect = sigma.div(&sigma.add(&DyadicInterval::one(PREC)))?;
        let exact = match label {
            "1" => v.contains_rational(&rat(1, 2)),
            "1/4" => v.contains_rational(&rat(1, 5)),
            _ => true,
        };
        ctx.assert(format!("inf sigma={label}"), exact && v.overlaps(&expect), fmt_iv(&v, 12));

        // |w|/|w-1| >= sigma/(1+sigma) on samples of |w| >= sigma, equality at w = -sigma
        let v2 = v.sqr();
        let mut ok = true;
        for k in 0..p.samples {
            let (a, b) = r2_point(k);
            let r = sigma.mul(&DyadicInterval::from_f64(1.0 + 4.0 * a, PREC));
            let th = DyadicInterval::from_f64(2.0 * core::f64::consts::PI * b, PREC);
            let w = ComplexPoint::new(r.mul(&th.cos()), r.mul(&th.sin()));
            let d = w.sub(&ComplexPoint::real(DyadicInterval::one(PREC))).norm_sqr();
            ok &= w.norm_sqr().certainly_ge(&v2.mul(&d)) || w.norm_sqr().sub(&v2.mul(&d)).contains_zero();
        }
        ctx.assert(format!("inf sigma={label}.samples"), ok, format!("{} samples", p.samples));
    }

    let split = sup_band_split(PREC);
    ctx.note("split", fmt_iv(&split, 9));
    for rho_s in ["0.95", "1.2", "1.4", "1.5", "1.75", "2"] {
        let rho = iv(&q(rho_s));
        let s = sup_band_samples(&rho, p.samples)?;
        ctx.assert(format!("sup rho={rho_s}.samples"), s.certified, format!("max observed {:.6}", s.max_observed));
    }
    // closed form below 1.39 on pieces covering (split, 2]
    let pieces = 64;
    let lo = split.lo().clone();
    let two = Dyadic::from_i64(2);
    let step = two.sub(&lo).mul_pow2(-6);
    let limit = iv(&rat(139, 100));
    let mut ok = true;
    let mut worst = Dyadic::zero();
    for k in 0..pieces {
        let a = lo.add(&step.mul(&Dyadic::from_i64(k)));
        let b = if k + 1 == pieces { two.clone() } else { lo.add(&step.mul(&Dyadic::from_i64(k + 1))) };
        let v = sup_band_closed_form(&DyadicInterval::new(a, b, PREC))?;
        ok &= v.certainly_lt(&limit);
        if *v.hi() > worst {
            worst = v.hi().clone();
        }
    }
    ctx.assert("sup closed form < 1.39 on (split, 2]", ok, format!("max {}", worst.to_decimal(6, Round::Ceil)));
    Ok(())
}

fn obs_o1(p: &CheckParams, ctx: &mut Ctx) -> Result<()> {
    let mut bad = Vec::new();
    for n in 1..=p.slice_n_max {
        let v = v_plus(n)?;
        let first = &v.intervals[0];
        let singleton = first.degenerate && first.hi.is_point() && first.hi.lo.is_zero();
        if singleton != matches!(n % 4, 1 | 2) {
            bad.push(n);
        }
    }
    ctx.assert(format!("origin component n=1..{}", p.slice_n_max), bad.is_empty(), format!("mismatches {bad:?}"));
    Ok(())
}

/// Distance of the first `count` positive endpoints of `V_n^+` to the grid
/// `pi Z` (even `n`) or `pi/2 + pi Z` (odd `n`).
fn grid_deviation(n: u32, count: usize) -> Result<Option<DyadicInterval>> {
    let e = e_polynomial(n)?;
    let v = v_plus(n)?;
    let p = pi(96);
    let mut worst: Option<DyadicInterval> = None;
    let mut seen = 0;
    for b in v.intervals.iter().flat_map(|i| [&i.lo, &i.hi]) {
        if b.is_point() && b.lo.is_zero() {
            continue;
        }
        if seen == count {
            break;
        }
        seen += 1;
        let x = refine_to_bits(b, &e, 40).interval(96);
        let shift = if n % 2 == 0 { DyadicInterval::zero(96) } else { p.mul_pow2(-1) };
        let t = x.sub(&shift).div(&p)?;
        let k = t.mid().to_rational().round();
        let d = x.sub(&shift).sub(&p.mul(&iv(&k))).abs();
        worst = Some(match worst {
            None => d,
            Some(w) => w.max(&d),
        });
    }
    Ok(worst)
}

fn obs_o2(p: &CheckParams, ctx: &mut Ctx) -> Result<()> {
    // ordered disjoint compact components, starting per the mod 4 rule
    let mut bad = Vec::new();
    for n in 1..=p.slice_n_max {
        let v = v_plus(n)?;
        let ordered = v.intervals.windows(2).all(|w| w[0].hi.hi < w[1].lo.lo)
            && v.intervals.iter().all(|i| i.lo.lo <= i.hi.hi);
        if !ordered {
            bad.push(n);
        }
    }
    ctx.assert(format!("ordered components n=1..{}", p.slice_n_max), bad.is_empty(), format!("{bad:?}"));

    let base = 5;
    let top = p.m_max.max(base + 1);
    let half = iv(&rat(1, 2));
    for r in 0..4 {
        let (n_lo, n_hi) = (4 * base + r, 4 * top + r);
        let d_lo = grid_deviation(n_lo, 3)?;
        let d_hi = grid_deviation(n_hi, 3)?;
        match (d_lo, d_hi) {
            (Some(a), Some(b)) => {
                ctx.assert(format!("n={n_hi}.within 0.5"), b.certainly_lt(&half), fmt_iv(&b, 6));
                ctx.assert(
                    format!("n={n_hi}.closer than n={n_lo}"),
                    b.certainly_lt(&a),
                    format!("{} vs {}", fmt_iv(&b, 6), fmt_iv(&a, 6)),
                );
            }
            _ => ctx.assert(format!("n={n_hi}.endpoints"), false, "too few endpoints"),
        }
    }
    Ok(())
}

/// Block lengths of non-decreasing `max V_n^+`, `n = 1..=99`.
pub const O3_RUNS: [usize; 19] = [5, 5, 6, 5, 5, 5, 6, 5, 5, 5, 5, 6, 5, 5, 5, 6, 5, 5, 5];

fn obs_o3(p: &CheckParams, ctx: &mut Ctx) -> Result<()> {
    let mut bad = Vec::new();
    let mut undecided = Vec::new();
    for n in 1..=p.slice_n_max {
        match o3_holds(n)? {
            Some(true) => {}
            Some(false) => bad.push(n),
            None => undecided.push(n),
        }
    }
    if !undecided.is_empty() {
        ctx.undecided = true;
        ctx.note("bound undecided", format!("{undecided:?}"));
    }
    ctx.assert(format!("bound n=1..{}", p.slice_n_max), bad.is_empty(), format!("violations {bad:?}"));

    let seq = max_v_plus_sequence(p.slice_n_max, 40)?;
    let runs = nondecreasing_runs(&seq)?;
    // every closed block matches; the open last block is a prefix
    let (last, closed) = runs.split_last().expect("nonempty");
    let mut ok = closed.len() <= O3_RUNS.len() && closed.iter().zip(O3_RUNS.iter()).all(|(a, b)| a == b);
    if let Some(expect) = O3_RUNS.get(closed.len()) {
        ok &= last <= expect;
    }
    ctx.assert("run lengths", ok, format!("{runs:?}"));
    Ok(())
}

fn rem_3_3(p: &CheckParams, ctx: &mut Ctx) -> Result<()> {
    for (n, c) in full_certs(ctx, p, false, 3..=p.n_max) {
        ctx.assert(format!("n={n}.below_1"), c.hi < Dyadic::one(), "");
    }
    Ok(())
}

fn table_1(p: &CheckParams, ctx: &mut Ctx) -> Result<()> {
    let certs = full_certs(ctx, p, false, 1..=p.n_max);
    for (n, c) in &certs {
        table_row(ctx, false, *n, c);
    }
    if let Some((_, c8)) = certs.iter().find(|(n, _)| *n == 8) {
        let others_above = certs.iter().filter(|(n, _)| *n != 8).all(|(_, c)| c.lo > c8.hi);
        ctx.assert("minimum at n=8", others_above, "");
    }
    Ok(())
}

fn table_2(p: &CheckParams, ctx: &mut Ctx) -> Result<()> {
    for (n, c) in full_certs(ctx, p, true, 1..=p.n_max) {
        table_row(ctx, true, n, &c);
    }
    Ok(())
}

fn semidisk(ctx: &mut Ctx, n: u32, tol_digits: u32) -> Option<Option<RadiusCertificate>> {
    let cfg = BbConfig::with_tol(decimal_tol(tol_digits));
    match inner_semidisk_radius(n, &cfg) {
        Ok(SemiDisk::NotApplicable) => Some(None),
        Ok(SemiDisk::Radius(c)) => certify(ctx, &format!("n={n}.rho*"), Ok(c)).map(Some),
        Err(e) => {
            ctx.undecided = true;
            ctx.note(format!("n={n}.rho*"), format!("undecided: {e}"));
            None
        }
    }
}

fn table_3(p: &CheckParams, ctx: &mut Ctx) -> Result<()> {
    for (n, rho_s, nrho_s) in TABLE3.iter().copied().filter(|r| r.0 <= p.n_max) {
        let Some(res) = semidisk(ctx, n, 9) else { continue };
        let Some(c) = res else {
            ctx.assert(format!("n={n}.exists"), false, "no semi-disk");
            continue;
        };
        let shown = (display_round(&c.lo, 3, false), display_round(&c.hi, 3, false));
        ctx.assert(format!("n={n}.rho*"), shown.0 == rho_s && shown.1 == rho_s, format!("computed {}, printed {rho_s}", shown.1));
        let nn = Dyadic::from_i64(n as i64);
        let scaled = (display_round(&c.lo.mul(&nn), 3, false), display_round(&c.hi.mul(&nn), 3, false));
        ctx.assert(
            format!("n={n}.n*rho*"),
            scaled.0 == nrho_s && scaled.1 == nrho_s,
            format!("computed {}, printed {nrho_s}", scaled.1),
        );
        if n == 3 {
            let third = rat(1, 3);
            let ok = c.lo.to_rational().pow(2) <= third && c.hi.to_rational().pow(2) >= third;
            ctx.assert("n=3.encloses sqrt(3)/3", ok, "");
        }
        if n == 4 {
            ctx.assert("n=4.below sqrt(8)/4", c.hi.to_rational().pow(2) < rat(1, 2), "");
        }
    }
    Ok(())
}

fn thm_3_2(p: &CheckParams, ctx: &mut Ctx) -> Result<()> {
    let c = q("1.0085");
    let one = BigRat::one();
    let k = rat(17, 4034);
    ctx.assert("17/4034 = (1 - 1/1.0085)/2", k == (&one - &one / &c) / BigRat::from_integer(2.into()), "");
    ctx.assert("17/4034 / 1.0085 = 17000/4068289", &k / &c == rat(17000, 4068289), "");
    let e = e_const(PREC);
    let ce = iv(&c).mul(&e);
    let final_v = iv(&rat(17000, 4068289)).mul(&ce.sqr().exp()).div(&e.sqr())?;
    ctx.assert("final constant > 1.03", final_v.certainly_gt(&iv(&q("1.03"))), fmt_iv(&final_v, 6));

    // direct instances: eps_n = 1.0085 e / sqrt(n) < 1 from n = 8 on
    let cfg = p.cfg();
    for n in 8..=p.n_max {
        let eps = ce.div(&DyadicInterval::from_i64(n as i64, PREC).sqrt()?)?;
        let r = DyadicInterval::one(PREC).add(&eps);
        let radius = r.lo().to_rational();
        let res = coverage_disk_check(n, &RadiusFormula::Custom(radius), false, &cfg);
        ctx.decide(format!("n={n}.inside D_(1+eps_n)"), res, fmt_iv(&r, 6));
    }
    Ok(())
}

/// `(1/(n δ)) sup (1 + 2e/(δ sqrt n))` for the left half-plane theorem.
fn t_prime_bound(n: u32, delta: &DyadicInterval, sup: &DyadicInterval) -> Result<DyadicInterval> {
    let e = e_const(PREC);
    let nn = DyadicInterval::from_i64(n as i64, PREC);
    let inner = DyadicInterval::one(PREC).add(&e.mul_pow2(1).div(&delta.mul(&nn.sqrt()?))?);
    Ok(sup.mul(&inner).div(&nn.mul(delta))?)
}

fn thm_4_4(p: &CheckParams, ctx: &mut Ctx) -> Result<()> {
    let limit = Dyadic::from_rational(&q("0.95"), 64, Round::Floor);
    for (n, c) in full_certs(ctx, p, true, 3..=p.n_max) {
        ctx.assert(format!("n={n}.below_0.95"), c.hi < limit, "");
        table_row(ctx, true, n, &c);
    }

    // n >= 21 constants; the bound decreases in n and, within each band, in rho
    let one = DyadicInterval::one(PREC);
    let rho095 = iv(&q("0.95"));
    let d095 = delta_rho(&rho095)?;
    let sup1 = moebius_inf_sup(&MoebiusQuery::SupBand { rho: rho095.clone() })?;
    let r1 = t_prime_bound(21, &d095, &sup1)?;
    ctx.assert("rho=0.95 n=21: T'/n bound < 1", r1.certainly_lt(&one), fmt_iv(&r1, 6));
    let r2 = t_prime_bound(21, &iv(&rat(1, 2)), &iv(&rat(139, 100)))?;
    ctx.assert("rho=split+ n=21: T'/n bound < 1", r2.certainly_lt(&one), fmt_iv(&r2, 6));
    let t_low = one.sub(&r1.max(&r2)).div_u64(5);
    ctx.assert("|T_n| lower bound >= 4e-4", t_low.certainly_ge(&iv(&q("0.0004"))), fmt_iv(&t_low, 6));

    // grid over rho in [0.95, 2] and n in 21..=60
    let mut grid_ok = true;
    for k in 0..=42 {
        let rho = iv(&q("0.95")).add(&iv(&rat(k, 40)));
        let rho = if rho.certainly_gt(&DyadicInterval::from_i64(2, PREC)) { DyadicInterval::from_i64(2, PREC) } else { rho };
        let d = delta_rho(&rho)?;
        let sup = moebius_inf_sup(&MoebiusQuery::SupBand { rho })?;
        for n in (21..=60).step_by(3) {
            let r = t_prime_bound(n, &d, &sup)?;
            grid_ok &= one.sub(&r).div_u64(5).certainly_ge(&iv(&q("0.0004")));
        }
    }
    ctx.assert("grid rho in [0.95, 2], n in 21..60", grid_ok, "");

    let e = e_const(PREC);
    let mut prev: Option<DyadicInterval> = None;
    let mut increasing = true;
    let mut at21 = None;
    for n in 21..=60u32 {
        let base = e.mul(&rho095);
        let nn = DyadicInterval::from_i64(n as i64, PREC);
        let v = base.powi(n).div(&e.mul(&nn.sqrt()?))?.mul(&iv(&q("0.0004")));
        if n == 21 {
            at21 = Some(v.clone());
        }
        if let Some(pv) = &prev {
            increasing &= v.certainly_gt(pv);
        }
        prev = Some(v);
    }
    let at21 = at21.expect("n = 21 visited");
    ctx.assert("final bound > 14422 at n=21", at21.certainly_gt(&DyadicInterval::from_i64(14422, PREC)), fmt_iv(&at21, 4));
    ctx.assert("final bound increasing in n", increasing, "");
    Ok(())
}

fn thm_5_6(p: &CheckParams, ctx: &mut Ctx) -> Result<()> {
    let ms: Vec<u32> = [5u32, 10, 15, 20, 25].into_iter().filter(|m| *m <= p.m_max.max(5)).collect();
    let half = iv(&rat(1, 2));
    for k in [1u32, 2] {
        let mut devs = Vec::new();
        for &m in &ms {
            let (a, b) = slice_endpoint_deviation(m, k)?;
            ctx.note(format!("k={k}.m={m}"), format!("lo {} hi {}", fmt_iv(&a, 6), fmt_iv(&b, 6)));
            devs.push(a.max(&b));
        }
        let first = devs.first().expect("m = 5 always present");
        let last = devs.last().expect("nonempty");
        let m_last = *ms.last().expect("nonempty");
        ctx.assert(format!("k={k}.m={m_last} within 0.5"), last.certainly_lt(&half), "");
        if ms.len() > 1 {
            ctx.assert(format!("k={k}.m={m_last} closer than m=5"), last.certainly_lt(first), "");
        }
    }
    Ok(())
}

fn thm_6_1(p: &CheckParams, ctx: &mut Ctx) -> Result<()> {
    for n in 1..=p.n_max {
        let expect = matches!(n % 4, 0 | 3);
        let Some(res) = semidisk(ctx, n, p.tol_digits) else { continue };
        match res {
            None => ctx.assert(format!("n={n}.class"), !expect, "no semi-disk"),
            Some(c) => ctx.assert(format!("n={n}.class"), expect && c.lo.is_positive(), "positive radius"),
        }
    }
    Ok(())
}

fn y81_digits(p: &CheckParams, ctx: &mut Ctx) -> Result<()> {
    let e = e_polynomial(8)?;
    let v = v_plus(8)?;
    ctx.assert("V_8^+ is one interval", v.intervals.len() == 1 && !v.intervals[0].degenerate, "");
    let roots = isolate_real_roots(&e, &RootDomain::positive());
    let top = roots.last().ok_or(Error::Domain("E_8 has no positive root"))?;
    let b = refine_root(top, &e, &Dyadic::new(BigInt::one(), -60));
    let printed = q("3.3951402205749");
    let half_ulp = q("0.00000000000005");
    let ok = b.lo.to_rational() >= &printed - &half_ulp && b.hi.to_rational() <= &printed + &half_ulp;
    ctx.assert("y_(8,1) = 3.3951402205749", ok, format!("[{}, {}]", b.lo.to_decimal(16, Round::Floor), b.hi.to_decimal(16, Round::Ceil)));

    // largest origin component at n = 8, largest scaled one at n = 4
    let mut comps: Vec<(u32, Dyadic, Dyadic)> = Vec::new();
    for n in 1..=p.slice_n_max {
        let v = v_plus(n)?;
        let hi = refine_to_bits(&v.intervals[0].hi, &e_polynomial(n)?, 40);
        comps.push((n, hi.lo, hi.hi));
    }
    let by_n = |m: u32| comps.iter().find(|c| c.0 == m).cloned().expect("in range");
    let (_, lo8, _) = by_n(8);
    let ok8 = comps.iter().filter(|c| c.0 != 8).all(|c| c.2 < lo8);
    ctx.assert(format!("largest origin component n<={} at n=8", p.slice_n_max), ok8, "");
    let scaled = |c: &(u32, Dyadic, Dyadic), hi: bool| {
        let nn = Dyadic::from_i64(c.0 as i64);
        if hi { c.2.div(&nn, 64, Round::Ceil) } else { c.1.div(&nn, 64, Round::Floor) }
    };
    let c4 = by_n(4);
    let s4 = scaled(&c4, false);
    let ok4 = comps.iter().filter(|c| c.0 != 4).all(|c| scaled(c, true) < s4);
    ctx.assert(format!("largest scaled component n<={} at n=4", p.slice_n_max), ok4, "");
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_sorted_and_unique() {
        let ids: Vec<&str> = REGISTRY.iter().map(|c| c.id).collect();
        let mut sorted = ids.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(ids, sorted);
    }

    #[test]
    fn registry_covers_required_ids() {
        let required = [
            "lemma-3.1", "cor-3.4", "thm-4.4", "lemma-5.1", "cor-5.2", "thm-5.6", "obs-O1", "obs-O2", "obs-O3",
            "thm-6.1", "lemma-7.1", "lemma-7.4", "lemma-7.5", "lemma-7.6", "buckholtz", "eneström-roots",
        ];
        for id in required {
            assert!(REGISTRY.iter().any(|c| c.id == id), "{id}");
        }
    }

    #[test]
    fn unknown_id() {
        let p = CheckParams::for_profile(Profile::Quick);
        assert_eq!(run_check("lemma-9.9", &p), Err(Error::UnknownCheck("lemma-9.9".into())));
    }

    #[test]
    fn lemma_5_1_and_mutation() {
        let mut p = CheckParams::for_profile(Profile::Quick);
        assert_eq!(run_check("lemma-5.1", &p).unwrap().status, CheckStatus::Pass);
        p.mutation = Some(Mutation::PerturbE7);
        let r = run_check("lemma-5.1", &p).unwrap();
        assert_eq!(r.status, CheckStatus::Fail);
        assert!(r.detail.iter().any(|(_, v)| v.contains("[7]")));
    }

    #[test]
    fn quick_profile_excludes_tables() {
        let q = checks_for(Profile::Quick);
        assert!(!q.iter().any(|id| id.starts_with("table-")));
        assert_eq!(checks_for(Profile::Full).len(), REGISTRY.len());
    }

    #[test]
    fn decimal_helpers() {
        assert_eq!(q("0.6523"), rat(6523, 10000));
        assert_eq!(decimals("0.6523"), 4);
        assert_eq!(decimals("2"), 0);
    }
}
