//! Certified real root isolation for integer polynomials.
//!
//! The polynomial is split into square-free factors (Yun, with a modular
//! shortcut when `gcd(p, p') = 1`), each factor is isolated by Descartes'
//! rule of signs with bisection on Taylor-shifted integer polynomials, and
//! boxes are refined by exact-sign bisection at dyadic points.

mod zpoly;

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::exactnum::Dyadic;
use crate::taylorpoly::IntPoly;
use zpoly::Z;

/// An isolating interval for one distinct real root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootBox {
    pub lo: Dyadic,
    pub hi: Dyadic,
    pub multiplicity: u32,
    /// Sign of the square-free part just left of the root (at `lo` when `lo < hi`).
    pub sign_left: i8,
    /// Sign of the square-free part just right of the root (at `hi` when `lo < hi`).
    pub sign_right: i8,
}

impl RootBox {
    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> Dyadic {
        self.hi.sub(&self.lo)
    }

    pub fn mid(&self) -> Dyadic {
        self.lo.midpoint(&self.hi)
    }

    pub fn contains(&self, x: &Dyadic) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_rational(&self, q: &crate::exactnum::BigRat) -> bool {
        &self.lo.to_rational() <= q && q <= &self.hi.to_rational()
    }

    pub fn to_f64(&self) -> f64 {
        self.mid().to_f64()
    }

    /// The enclosure as a dyadic interval.
    pub fn interval(&self, prec: u32) -> crate::exactnum::DyadicInterval {
        crate::exactnum::DyadicInterval::new(self.lo.clone(), self.hi.clone(), prec)
    }

    pub fn negated(&self) -> RootBox {
        RootBox {
            lo: self.hi.neg(),
            hi: self.lo.neg(),
            multiplicity: self.multiplicity,
            sign_left: -self.sign_right,
            sign_right: -self.sign_left,
        }
    }
}

/// One end of a search domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bound {
    Unbounded,
    Closed(Dyadic),
    Open(Dyadic),
}

/// A real interval, possibly unbounded or half-open.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootDomain {
    pub lo: Bound,
    pub hi: Bound,
}

impl RootDomain {
    pub fn full() -> RootDomain {
        RootDomain { lo: Bound::Unbounded, hi: Bound::Unbounded }
    }

    /// `[0, inf)`.
    pub fn nonnegative() -> RootDomain {
        RootDomain { lo: Bound::Closed(Dyadic::zero()), hi: Bound::Unbounded }
    }

    /// `(0, inf)`.
    pub fn positive() -> RootDomain {
        RootDomain { lo: Bound::Open(Dyadic::zero()), hi: Bound::Unbounded }
    }

    pub fn closed(a: Dyadic, b: Dyadic) -> RootDomain {
        RootDomain { lo: Bound::Closed(a), hi: Bound::Closed(b) }
    }

    pub fn open(a: Dyadic, b: Dyadic) -> RootDomain {
        RootDomain { lo: Bound::Open(a), hi: Bound::Open(b) }
    }

    pub fn contains(&self, x: &Dyadic) -> bool {
        let lo_ok = match &self.lo {
            Bound::Unbounded => true,
            Bound::Closed(a) => a <= x,
            Bound::Open(a) => a < x,
        };
        let hi_ok = match &self.hi {
            Bound::Unbounded => true,
            Bound::Closed(b) => x <= b,
            Bound::Open(b) => x < b,
        };
        lo_ok && hi_ok
    }
}

/// `p = c x^zero_mult prod f_i^(m_i)` with primitive, pairwise coprime, square-free `f_i`.
#[derive(Debug, Clone)]
pub struct SquareFree {
    pub zero_mult: u32,
    pub factors: Vec<(IntPoly, u32)>,
}

impl SquareFree {
    /// Product of the distinct irreducible parts, including `x` when 0 is a root.
    pub fn square_free_part(&self) -> IntPoly {
        IntPoly::from_ints(sqfree_product(self))
    }
}

fn sqfree_product(d: &SquareFree) -> Z {
    let mut s: Z = if d.zero_mult > 0 { vec![BigInt::zero(), BigInt::one()] } else { vec![BigInt::one()] };
    for (f, _) in &d.factors {
        s = zpoly::mul(&s, f.coeffs());
    }
    s
}

/// Square-free decomposition of the integer part of `p`.
pub fn square_free_decomposition(p: &IntPoly) -> SquareFree {
    assert!(!p.is_zero(), "zero polynomial");
    let v = p.valuation().unwrap();
    let q: Z = p.coeffs()[v..].to_vec();
    let factors = zpoly::yun(&q).into_iter().map(|(f, m)| (IntPoly::from_ints(f), m)).collect();
    SquareFree { zero_mult: v as u32, factors }
}

fn dyadic_parts(x: &Dyadic) -> (BigInt, i64) {
    (x.mantissa().clone(), x.exponent())
}

/// Exact sign of an integer polynomial at a dyadic point.
pub(crate) fn sign_at(f: &[BigInt], x: &Dyadic) -> i32 {
    let (m, e) = dyadic_parts(x);
    if e >= 0 {
        zpoly::sign_at_dyadic(f, &(m << e as u64), 0)
    } else {
        zpoly::sign_at_dyadic(f, &m, (-e) as u64)
    }
}

/// `q(t) = f(lo + (hi - lo) t)` up to a positive constant factor.
fn to_unit(f: &[BigInt], lo: &Dyadic, hi: &Dyadic) -> Z {
    let e = lo.exponent().min(hi.exponent());
    let a = lo.mul_pow2(-e).to_int(crate::exactnum::Round::Floor);
    let b = hi.mul_pow2(-e).to_int(crate::exactnum::Round::Floor);
    let h = if e >= 0 { zpoly::scale_up_pow2(f, e as u64) } else { zpoly::scale_down_pow2(f, (-e) as u64) };
    let h = zpoly::taylor_shift(&h, &a);
    let w = b - a;
    let q = if w.is_one() { h } else { zpoly::scale_int(&h, &w) };
    zpoly::primitive(&q)
}

/// Position `c / 2^k` inside the unit interval.
#[derive(Debug, Clone)]
enum UnitRoot {
    Open { c: BigInt, k: u64 },
    Point { c: BigInt, k: u64 },
}

/// Descartes bisection on `(0, 1)` for a square-free `q` without roots at 0 or 1.
fn vca_unit(q: Z, first_only: bool) -> Vec<UnitRoot> {
    enum Job {
        Node(Z, BigInt, u64),
        Point(BigInt, u64),
    }
    let mut out = Vec::new();
    let mut stack = vec![Job::Node(q, BigInt::zero(), 0)];
    while let Some(job) = stack.pop() {
        match job {
            Job::Point(c, k) => {
                out.push(UnitRoot::Point { c, k });
                if first_only {
                    break;
                }
            }
            Job::Node(q, c, k) => {
                let v = zpoly::descartes_unit(&q);
                if v == 0 {
                    continue;
                }
                if v == 1 {
                    out.push(UnitRoot::Open { c, k });
                    if first_only {
                        break;
                    }
                    continue;
                }
                let ql = zpoly::primitive(&zpoly::scale_down_pow2(&q, 1));
                let mut qr = ql.clone();
                zpoly::taylor_shift_one(&mut qr);
                let c2 = &c << 1u32;
                if qr[0].is_zero() {
                    qr.remove(0);
                    stack.push(Job::Node(qr, &c2 + 1, k + 1));
                    stack.push(Job::Point(&c2 + 1, k + 1));
                } else {
                    stack.push(Job::Node(qr, &c2 + 1, k + 1));
                }
                stack.push(Job::Node(ql, c2, k + 1));
            }
        }
    }
    out
}

fn unit_to_x(lo: &Dyadic, width: &Dyadic, c: &BigInt, k: u64) -> Dyadic {
    lo.add(&width.mul_int(c).mul_pow2(-(k as i64)))
}

/// A root box for one factor during isolation.
#[derive(Debug, Clone)]
struct Cand {
    lo: Dyadic,
    hi: Dyadic,
    factor: usize,
}

/// Roots of the square-free `f` in `[lo, hi]` (endpoints included), sorted.
fn isolate_in(f: &[BigInt], lo: &Dyadic, hi: &Dyadic, first_only: bool) -> Vec<(Dyadic, Dyadic)> {
    let mut out = Vec::new();
    if lo >= hi {
        if lo == hi && sign_at(f, lo) == 0 {
            out.push((lo.clone(), lo.clone()));
        }
        return out;
    }
    let lo_root = sign_at(f, lo) == 0;
    let hi_root = sign_at(f, hi) == 0;
    if lo_root {
        out.push((lo.clone(), lo.clone()));
        if first_only {
            return out;
        }
    }
    let mut q = to_unit(f, lo, hi);
    if lo_root {
        q.remove(0);
    }
    if hi_root {
        q = zpoly::div_exact(&q, &[-BigInt::one(), BigInt::one()]);
    }
    let width = hi.sub(lo);
    for r in vca_unit(q, first_only) {
        match r {
            UnitRoot::Open { c, k } => {
                let a = unit_to_x(lo, &width, &c, k);
                let b = unit_to_x(lo, &width, &(c + 1), k);
                out.push((a, b));
            }
            UnitRoot::Point { c, k } => {
                let a = unit_to_x(lo, &width, &c, k);
                out.push((a.clone(), a));
            }
        }
    }
    if hi_root && !(first_only && !out.is_empty()) {
        out.push((hi.clone(), hi.clone()));
    }
    out
}

/// Shrinks `(lo, hi)`, which contains exactly one simple root of `f` in its
/// interior, until `f` is nonzero at both endpoints (or the root is hit exactly).
fn tighten(f: &[BigInt], lo: Dyadic, hi: Dyadic) -> (Dyadic, Dyadic) {
    if lo == hi {
        return (lo, hi);
    }
    let (mut lo, mut hi) = (lo, hi);
    let df = zpoly::derivative(f);
    loop {
        let sl = sign_at(f, &lo);
        let sh = sign_at(f, &hi);
        if sl != 0 && sh != 0 {
            return (lo, hi);
        }
        // effective signs just inside the interval
        let el = if sl != 0 { sl } else { sign_at(&df, &lo) };
        let m = lo.midpoint(&hi);
        let sm = sign_at(f, &m);
        if sm == 0 {
            return (m.clone(), m);
        }
        if sm == el {
            lo = m;
        } else {
            hi = m;
        }
    }
}

/// One bisection step of a tightened box.
fn bisect_once(f: &[BigInt], lo: &Dyadic, hi: &Dyadic) -> (Dyadic, Dyadic) {
    let m = lo.midpoint(hi);
    let sm = sign_at(f, &m);
    if sm == 0 {
        return (m.clone(), m);
    }
    if sm == sign_at(f, lo) {
        (m, hi.clone())
    } else {
        (lo.clone(), m)
    }
}

fn bound_value(b: &Bound, fallback: &Dyadic) -> Dyadic {
    match b {
        Bound::Unbounded => fallback.clone(),
        Bound::Closed(x) | Bound::Open(x) => x.clone(),
    }
}

/// Isolates the real roots of `p` in `domain`.
pub fn isolate_real_roots(p: &IntPoly, domain: &RootDomain) -> Vec<RootBox> {
    let dec = square_free_decomposition(p);
    isolate_decomposed(&dec, domain)
}

pub fn isolate_decomposed(dec: &SquareFree, domain: &RootDomain) -> Vec<RootBox> {
    let x: Z = vec![BigInt::zero(), BigInt::one()];
    let mut factors: Vec<(&[BigInt], u32)> = dec.factors.iter().map(|(f, m)| (f.coeffs(), *m)).collect();
    if dec.zero_mult > 0 {
        factors.push((&x, dec.zero_mult));
    }
    let mut cands: Vec<Cand> = Vec::new();
    for (idx, (f, _)) in factors.iter().enumerate() {
        if let Some(r) = dyadic_linear_root(f) {
            cands.push(Cand { lo: r.clone(), hi: r, factor: idx });
            continue;
        }
        let big = Dyadic::new(BigInt::one(), zpoly::root_bound_log2(f));
        let lo = core::cmp::max(bound_value(&domain.lo, &big.neg()), big.neg());
        let hi = core::cmp::min(bound_value(&domain.hi, &big), big.clone());
        if lo > hi {
            continue;
        }
        for (a, b) in isolate_in(f, &lo, &hi, false) {
            let (a, b) = tighten(f, a, b);
            cands.push(Cand { lo: a, hi: b, factor: idx });
        }
    }
    // trim to the domain
    let mut kept = Vec::new();
    for mut c in cands {
        let f = factors[c.factor].0;
        loop {
            let lo_in = domain.contains(&c.lo);
            let hi_in = domain.contains(&c.hi);
            if lo_in && hi_in {
                kept.push(c);
                break;
            }
            if c.lo == c.hi {
                break;
            }
            let cut = if !lo_in { bound_value(&domain.lo, &c.lo) } else { bound_value(&domain.hi, &c.hi) };
            if cut <= c.lo || cut >= c.hi {
                let (a, b) = bisect_once(f, &c.lo, &c.hi);
                c.lo = a;
                c.hi = b;
                continue;
            }
            let sc = sign_at(f, &cut);
            if sc == 0 {
                c.lo = cut.clone();
                c.hi = cut;
            } else if sc == sign_at(f, &c.lo) {
                c.lo = cut;
            } else {
                c.hi = cut;
            }
        }
    }
    let mut cands = kept;
    // separate boxes of different factors
    cands.sort_by(|a, b| a.lo.cmp(&b.lo).then(a.hi.cmp(&b.hi)));
    loop {
        let mut changed = false;
        for i in 0..cands.len().saturating_sub(1) {
            if cands[i].hi >= cands[i + 1].lo {
                let j = if cands[i].width_cmp(&cands[i + 1]) == Ordering::Less { i + 1 } else { i };
                let f = factors[cands[j].factor].0;
                let (a, b) = bisect_once(f, &cands[j].lo, &cands[j].hi);
                cands[j].lo = a;
                cands[j].hi = b;
                changed = true;
            }
        }
        if !changed {
            break;
        }
        cands.sort_by(|a, b| a.lo.cmp(&b.lo).then(a.hi.cmp(&b.hi)));
    }
    let s = sqfree_product(dec);
    let ds = zpoly::derivative(&s);
    cands.into_iter().map(|c| make_box(&s, &ds, c.lo, c.hi, factors[c.factor].1)).collect()
}

/// The root of `a0 + a1 x` when it is a dyadic rational.
fn dyadic_linear_root(f: &[BigInt]) -> Option<Dyadic> {
    if f.len() != 2 {
        return None;
    }
    let a1 = f[1].abs();
    let k = a1.trailing_zeros().unwrap_or(0);
    if a1 != BigInt::one() << k {
        return None;
    }
    let m = if f[1].is_negative() { f[0].clone() } else { -f[0].clone() };
    Some(Dyadic::new(m, -(k as i64)))
}

impl Cand {
    fn width_cmp(&self, o: &Cand) -> Ordering {
        self.hi.sub(&self.lo).cmp(&o.hi.sub(&o.lo))
    }
}

fn make_box(s: &[BigInt], ds: &[BigInt], lo: Dyadic, hi: Dyadic, multiplicity: u32) -> RootBox {
    let (sl, sr) = if lo == hi {
        let d = sign_at(ds, &lo);
        (-d, d)
    } else {
        (sign_at(s, &lo), sign_at(s, &hi))
    };
    RootBox { lo, hi, multiplicity, sign_left: sl as i8, sign_right: sr as i8 }
}

/// The factor of `p` that vanishes inside `b`.
fn owning_factor(dec: &SquareFree, b: &RootBox) -> Option<Z> {
    if b.is_point() && b.lo.is_zero() && dec.zero_mult > 0 {
        return Some(vec![BigInt::zero(), BigInt::one()]);
    }
    let mut best = None;
    for (f, m) in &dec.factors {
        if *m != b.multiplicity {
            continue;
        }
        let c = f.coeffs();
        if b.is_point() {
            if sign_at(c, &b.lo) == 0 {
                return Some(c.to_vec());
            }
        } else if sign_at(c, &b.lo) * sign_at(c, &b.hi) < 0 {
            best = Some(c.to_vec());
        }
    }
    best
}

/// Bisects `b` until its width is at most `width`; the box stays isolating.
pub fn refine_root(b: &RootBox, p: &IntPoly, width: &Dyadic) -> RootBox {
    if b.is_point() || &b.width() <= width {
        return b.clone();
    }
    let dec = square_free_decomposition(p);
    let f = owning_factor(&dec, b).expect("box does not isolate a root of p");
    let s = sqfree_product(&dec);
    let ds = zpoly::derivative(&s);
    let (mut lo, mut hi) = tighten(&f, b.lo.clone(), b.hi.clone());
    while lo != hi && &hi.sub(&lo) > width {
        let (a, c) = bisect_once(&f, &lo, &hi);
        lo = a;
        hi = c;
    }
    make_box(&s, &ds, lo, hi, b.multiplicity)
}

/// Refines to relative width about `2^-bits` of the root's magnitude.
pub fn refine_relative(b: &RootBox, p: &IntPoly, bits: u32) -> RootBox {
    let mut cur = b.clone();
    loop {
        if cur.is_point() {
            return cur;
        }
        let mag = core::cmp::min(cur.lo.abs(), cur.hi.abs());
        if mag.is_zero() {
            let w = cur.width().mul_pow2(-2);
            cur = refine_root(&cur, p, &w);
            continue;
        }
        let target = Dyadic::new(BigInt::one(), mag.ilog2() - bits as i64);
        if cur.width() <= target {
            return cur;
        }
        return refine_root(&cur, p, &target);
    }
}

/// Smallest positive root of a square-free `f` with `f(0) != 0`.
fn first_positive_root(f: &[BigInt]) -> Option<(Dyadic, Dyadic)> {
    let upper = zpoly::root_bound_log2(f);
    let rev: Z = f.iter().rev().cloned().collect();
    let lower = -zpoly::root_bound_log2(&zpoly::trim(rev));
    let var_below = |j: i64| {
        let q = if j >= 0 { zpoly::scale_up_pow2(f, j as u64) } else { zpoly::scale_down_pow2(f, (-j) as u64) };
        zpoly::descartes_unit(&q)
    };
    if var_below(upper) == 0 {
        return None;
    }
    // invariant: no root in (0, 2^lo_j], variations on (0, 2^hi_j)
    let (mut lo_j, mut hi_j) = (lower, upper);
    while hi_j - lo_j > 1 {
        let mid = lo_j + (hi_j - lo_j) / 2;
        if var_below(mid) == 0 {
            lo_j = mid;
        } else {
            hi_j = mid;
        }
    }
    let mut j = lo_j;
    while j < upper {
        let a = Dyadic::new(BigInt::one(), j);
        let b = Dyadic::new(BigInt::one(), j + 1);
        if let Some(r) = isolate_in(f, &a, &b, true).into_iter().next() {
            return Some(tighten(f, r.0, r.1));
        }
        j += 1;
    }
    None
}

/// The real root of smallest modulus; ties go to the negative root.
pub fn smallest_abs_root(p: &IntPoly) -> Option<RootBox> {
    let dec = square_free_decomposition(p);
    let s = sqfree_product(&dec);
    let ds = zpoly::derivative(&s);
    if dec.zero_mult > 0 {
        return Some(make_box(&s, &ds, Dyadic::zero(), Dyadic::zero(), dec.zero_mult));
    }
    // candidates as (f, negative?, lo, hi, multiplicity) in the orientation of f
    let mut cands: Vec<(Z, bool, Dyadic, Dyadic, u32)> = Vec::new();
    for (f, m) in &dec.factors {
        let c = f.coeffs();
        if let Some((a, b)) = first_positive_root(c) {
            cands.push((c.to_vec(), false, a, b, *m));
        }
        let r = zpoly::reflect(c);
        if let Some((a, b)) = first_positive_root(&r) {
            cands.push((r, true, a, b, *m));
        }
    }
    if cands.is_empty() {
        return None;
    }
    let mut best = 0;
    for i in 1..cands.len() {
        if abs_less(&mut cands, i, best, &s) {
            best = i;
        }
    }
    let (_, neg, a, b, m) = cands.swap_remove(best);
    let bx = make_box(&s, &ds, a, b, m);
    if neg {
        // make_box evaluated s on the positive side; redo on the real location
        let nb = RootBox { lo: bx.hi.neg(), hi: bx.lo.neg(), ..bx };
        Some(make_box(&s, &ds, nb.lo, nb.hi, m))
    } else {
        Some(bx)
    }
}

/// Whether candidate `i` is strictly closer to 0 than candidate `j`, or tied
/// with `i` negative. Refines both as needed.
fn abs_less(c: &mut [(Z, bool, Dyadic, Dyadic, u32)], i: usize, j: usize, s: &[BigInt]) -> bool {
    let mut rounds = 0u32;
    loop {
        let (ai, bi) = (c[i].2.clone(), c[i].3.clone());
        let (aj, bj) = (c[j].2.clone(), c[j].3.clone());
        if bi < aj {
            return true;
        }
        if bj < ai {
            return false;
        }
        if ai == bi && aj == bj {
            // exact tie
            return c[i].1 && !c[j].1;
        }
        rounds += 1;
        if rounds % 64 == 0 && c[i].1 != c[j].1 {
            // possible irrational tie r, -r: test gcd(s(x), s(-x)) on the box
            let g = zpoly::gcd(s, &zpoly::reflect(s));
            if zpoly::deg(&g).unwrap_or(0) > 0 {
                let lo = core::cmp::max(ai.clone(), aj.clone());
                let hi = core::cmp::min(bi.clone(), bj.clone());
                let gi = if c[i].1 { zpoly::reflect(&g) } else { g.clone() };
                if !isolate_in(&gi, &lo, &hi, true).is_empty() {
                    return c[i].1 && !c[j].1;
                }
            }
        }
        for k in [i, j] {
            if c[k].2 != c[k].3 {
                let (a, b) = bisect_once(&c[k].0, &c[k].2, &c[k].3);
                c[k].2 = a;
                c[k].3 = b;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, BigRat};
    use crate::taylorpoly::{e_polynomial, f_m_polynomial};
    use proptest::prelude::*;

    fn d(v: f64) -> Dyadic {
        Dyadic::from_f64(v)
    }

    #[test]
    fn double_root_at_origin() {
        let p = e_polynomial(1).unwrap();
        let r = isolate_real_roots(&p, &RootDomain::nonnegative());
        assert_eq!(r.len(), 1);
        assert!(r[0].is_point() && r[0].lo.is_zero());
        assert_eq!(r[0].multiplicity, 2);
    }

    #[test]
    fn y81_digits() {
        let p = e_polynomial(8).unwrap();
        let r = isolate_real_roots(&p, &RootDomain::positive());
        assert_eq!(r.len(), 1);
        let w = Dyadic::from_rational(&rat(1, 10_000_000_000_000), 64, crate::exactnum::Round::Floor);
        let b = refine_root(&r[0], &p, &w);
        assert!(b.width() <= w);
        let target = BigRat::new(BigInt::from(33_951_402_205_749i64), BigInt::from(10_000_000_000_000i64));
        let tol = rat(1, 10_000_000_000_000);
        assert!(b.lo.to_rational() - &tol <= target && target <= b.hi.to_rational() + &tol);
    }

    #[test]
    fn sqrt3_over_3_from_e3() {
        let p = e_polynomial(3).unwrap();
        let r = isolate_real_roots(&p, &RootDomain::positive());
        let w = Dyadic::new(BigInt::one(), -40);
        let b = refine_root(&r[0], &p, &w);
        // y/3 encloses sqrt(3)/3 iff y encloses sqrt(3)
        let lo = b.lo.to_rational();
        let hi = b.hi.to_rational();
        assert!(&lo * &lo <= rat(3, 1) && rat(3, 1) <= &hi * &hi);
    }

    #[test]
    fn rational_root_is_exact_point() {
        let p = IntPoly::from_i64s(&[-1, 1]);
        let r = isolate_real_roots(&p, &RootDomain::full());
        assert_eq!(r.len(), 1);
        assert!(r[0].is_point() && r[0].lo == Dyadic::one());
        assert_eq!(r[0].sign_left, -1);
        assert_eq!(r[0].sign_right, 1);
    }

    #[test]
    fn f10_roots_near_multiples_of_pi() {
        let p = f_m_polynomial(10).unwrap();
        let r = isolate_real_roots(&p, &RootDomain::open(Dyadic::zero(), d(11.0)));
        assert!(r.len() >= 3, "{r:?}");
        let w = Dyadic::new(BigInt::one(), -10);
        let r0 = refine_root(&r[0], &p, &w);
        let r1 = refine_root(&r[1], &p, &w);
        assert!((r0.to_f64() - core::f64::consts::PI).abs() < 0.2);
        assert!((r1.to_f64() - 2.0 * core::f64::consts::PI).abs() < 0.5);
    }

    #[test]
    fn smallest_abs_examples() {
        let p = IntPoly::from_i64s(&[-1, 0, 1]);
        let b = smallest_abs_root(&p).unwrap();
        assert!(b.is_point() && b.lo == Dyadic::from_i64(-1));
        let p = IntPoly::from_i64s(&[-2, 0, 1]);
        let b = smallest_abs_root(&p).unwrap();
        assert!(b.hi.is_negative());
        let p = IntPoly::from_i64s(&[1, 0, 1]);
        assert!(smallest_abs_root(&p).is_none());
        // roots 3 and -1/1000 and 7
        let p = IntPoly::from_ints(zpoly::mul(
            &zpoly::mul(&[BigInt::from(-3), BigInt::one()], &[BigInt::from(1), BigInt::from(1000)]),
            &[BigInt::from(-7), BigInt::one()],
        ));
        let b = smallest_abs_root(&p).unwrap();
        assert!(b.contains_rational(&rat(-1, 1000)));
    }

    #[test]
    fn tiny_root_far_from_others() {
        // x - 2^-900 times (x^2 + 1)
        let tiny = BigInt::one() << 900u32;
        let p = IntPoly::from_ints(zpoly::mul(&[BigInt::from(-1), tiny.clone()], &[BigInt::one(), BigInt::zero(), BigInt::one()]));
        let b = smallest_abs_root(&p).unwrap();
        assert!(b.contains(&Dyadic::new(BigInt::one(), -900)));
    }

    fn build(roots: &[(i64, u32)]) -> IntPoly {
        let mut p: Z = vec![BigInt::one()];
        for &(r, m) in roots {
            for _ in 0..m {
                p = zpoly::mul(&p, &[BigInt::from(-r), BigInt::one()]);
            }
        }
        IntPoly::from_ints(p)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn recovers_known_roots(spec in proptest::collection::btree_map(-20i64..20, 1u32..=3, 1..5)) {
            let roots: Vec<(i64, u32)> = spec.into_iter().collect();
            let total: u32 = roots.iter().map(|r| r.1).sum();
            prop_assume!(total <= 12);
            let p = build(&roots);
            let boxes = isolate_real_roots(&p, &RootDomain::full());
            prop_assert_eq!(boxes.len(), roots.len());
            for (b, (r, m)) in boxes.iter().zip(roots.iter()) {
                prop_assert!(b.contains(&Dyadic::from_i64(*r)));
                prop_assert_eq!(b.multiplicity, *m);
            }
            for w in boxes.windows(2) {
                prop_assert!(w[0].hi < w[1].lo);
                // sign between consecutive boxes matches the annotations
                let mid = w[0].hi.midpoint(&w[1].lo);
                let s = square_free_decomposition(&p).square_free_part();
                let sg = s.sign_at(&mid) as i8;
                if !w[0].is_point() {
                    prop_assert_eq!(sg, w[0].sign_right);
                }
                if !w[1].is_point() {
                    prop_assert_eq!(sg, w[1].sign_left);
                }
            }
        }

        #[test]
        fn separates_close_irrational_roots(a in 2i64..50) {
            // x^2 - a and x^2 - a - 1 interleave closely
            let p = IntPoly::from_ints(zpoly::mul(&[BigInt::from(-a), BigInt::zero(), BigInt::one()], &[BigInt::from(-a - 1), BigInt::zero(), BigInt::one()]));
            let boxes = isolate_real_roots(&p, &RootDomain::full());
            prop_assert_eq!(boxes.len(), 4);
            for w in boxes.windows(2) {
                prop_assert!(w[0].hi < w[1].lo);
            }
        }
    }
}
