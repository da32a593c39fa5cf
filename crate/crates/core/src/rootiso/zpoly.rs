//! Dense integer polynomial kernels (ascending coefficients).

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub(crate) type Z = Vec<BigInt>;

pub(crate) fn trim(mut p: Z) -> Z {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

pub(crate) fn deg(p: &[BigInt]) -> Option<usize> {
    p.len().checked_sub(1)
}

pub(crate) fn content(p: &[BigInt]) -> BigInt {
    let mut g = BigInt::zero();
    for c in p {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Primitive part with a positive leading coefficient.
pub(crate) fn primitive(p: &[BigInt]) -> Z {
    let p = trim(p.to_vec());
    if p.is_empty() {
        return p;
    }
    let mut g = content(&p);
    if p.last().unwrap().is_negative() {
        g = -g;
    }
    if g.is_one() {
        return p;
    }
    p.iter().map(|c| c / &g).collect()
}

pub(crate) fn derivative(p: &[BigInt]) -> Z {
    trim(p.iter().enumerate().skip(1).map(|(k, c)| c * k).collect())
}

pub(crate) fn sub(a: &[BigInt], b: &[BigInt]) -> Z {
    let n = a.len().max(b.len());
    let mut out = vec![BigInt::zero(); n];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    trim(out)
}

pub(crate) fn mul(a: &[BigInt], b: &[BigInt]) -> Z {
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
    trim(out)
}

/// Pseudo-remainder of `a` by `b`.
pub(crate) fn prem(a: &[BigInt], b: &[BigInt]) -> Z {
    let db = deg(b).expect("division by zero polynomial");
    let mut r = trim(a.to_vec());
    let lc = b[db].clone();
    while let Some(dr) = deg(&r) {
        if dr < db {
            break;
        }
        let lr = r[dr].clone();
        let shift = dr - db;
        for c in r.iter_mut() {
            *c *= &lc;
        }
        for (i, c) in b.iter().enumerate() {
            r[i + shift] -= &lr * c;
        }
        r = trim(r);
    }
    r
}

/// Exact quotient `a / b` when `b` is primitive and divides `a` over the rationals.
pub(crate) fn div_exact(a: &[BigInt], b: &[BigInt]) -> Z {
    let db = deg(b).expect("division by zero polynomial");
    let mut r = trim(a.to_vec());
    let Some(da) = deg(&r) else {
        return Vec::new();
    };
    if da < db {
        return Vec::new();
    }
    let mut q = vec![BigInt::zero(); da - db + 1];
    let lc = &b[db];
    for k in (0..=da - db).rev() {
        let top = r[k + db].clone();
        if top.is_zero() {
            continue;
        }
        let (t, rem) = top.div_rem(lc);
        debug_assert!(rem.is_zero(), "inexact polynomial division");
        for (i, c) in b.iter().enumerate() {
            r[k + i] -= &t * c;
        }
        q[k] = t;
    }
    debug_assert!(r.iter().all(|c| c.is_zero()), "inexact polynomial division");
    trim(q)
}

/// Greatest common divisor over the integers (primitive, positive leading coefficient).
pub(crate) fn gcd(a: &[BigInt], b: &[BigInt]) -> Z {
    let mut a = primitive(a);
    let mut b = primitive(b);
    if a.is_empty() {
        return b;
    }
    if b.is_empty() {
        return a;
    }
    if a.len() < b.len() {
        core::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        if b.len() == 1 {
            return vec![BigInt::one()];
        }
        let r = primitive(&prem(&a, &b));
        a = b;
        b = r;
    }
    a
}

/// `p(x + a)` for an integer shift.
pub(crate) fn taylor_shift(p: &[BigInt], a: &BigInt) -> Z {
    let mut c = p.to_vec();
    let n = c.len();
    if a.is_zero() || n < 2 {
        return c;
    }
    let unit = a.is_one();
    for i in 0..n - 1 {
        for j in (i..n - 1).rev() {
            let t = if unit { c[j + 1].clone() } else { &c[j + 1] * a };
            c[j] += t;
        }
    }
    c
}

/// `p(x + 1)` in place.
pub(crate) fn taylor_shift_one(c: &mut [BigInt]) {
    let n = c.len();
    if n < 2 {
        return;
    }
    for i in 0..n - 1 {
        for j in (i..n - 1).rev() {
            let (lo, hi) = c.split_at_mut(j + 1);
            lo[j] += &hi[0];
        }
    }
}

/// `p(-x)`.
pub(crate) fn reflect(p: &[BigInt]) -> Z {
    p.iter().enumerate().map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() }).collect()
}

/// `2^(k d) p(x / 2^k)` with `d = deg p`: coefficient `i` gets `2^(k (d - i))`.
pub(crate) fn scale_down_pow2(p: &[BigInt], k: u64) -> Z {
    let d = p.len().saturating_sub(1);
    p.iter().enumerate().map(|(i, c)| c << (k * (d - i) as u64)).collect()
}

/// `p(2^k x)`.
pub(crate) fn scale_up_pow2(p: &[BigInt], k: u64) -> Z {
    p.iter().enumerate().map(|(i, c)| c << (k * i as u64)).collect()
}

/// `p(m x)` for an integer `m`.
pub(crate) fn scale_int(p: &[BigInt], m: &BigInt) -> Z {
    let mut pw = BigInt::one();
    p.iter()
        .map(|c| {
            let v = c * &pw;
            pw *= m;
            v
        })
        .collect()
}

/// Number of sign changes, skipping zeros.
pub(crate) fn sign_variations(p: &[BigInt]) -> usize {
    let mut last = Sign::NoSign;
    let mut v = 0;
    for c in p {
        let s = c.sign();
        if s == Sign::NoSign {
            continue;
        }
        if last != Sign::NoSign && s != last {
            v += 1;
        }
        last = s;
    }
    v
}

/// Descartes bound on the number of roots of `p` in the open interval `(0, 1)`.
pub(crate) fn descartes_unit(p: &[BigInt]) -> usize {
    let mut r: Z = p.iter().rev().cloned().collect();
    taylor_shift_one(&mut r);
    sign_variations(&r)
}

/// Sign of `p(m / 2^e)` for integer `m`, decided exactly by homogeneous Horner.
pub(crate) fn sign_at_dyadic(p: &[BigInt], m: &BigInt, e: u64) -> i32 {
    if p.is_empty() {
        return 0;
    }
    // sum c_i m^i 2^(e (d - i))
    let d = p.len() - 1;
    let mut acc = BigInt::zero();
    for (i, c) in p.iter().enumerate().rev() {
        acc = acc * m + (c << (e * (d - i) as u64));
    }
    match acc.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

/// Power-of-two bound `2^b` strictly above the modulus of every root (Fujiwara).
pub(crate) fn root_bound_log2(p: &[BigInt]) -> i64 {
    let d = deg(p).expect("zero polynomial has no root bound");
    let lb = p[d].bits() as i64;
    let mut best = i64::MIN;
    for k in 1..=d {
        let c = &p[d - k];
        if c.is_zero() {
            continue;
        }
        let num = c.bits() as i64 - lb + 1;
        let e = num.div_euclid(k as i64) + i64::from(num.rem_euclid(k as i64) != 0);
        best = best.max(e);
    }
    if best == i64::MIN {
        return 0;
    }
    best + 2
}

/// Residues modulo a word-size prime.
pub(crate) fn reduce_mod(p: &[BigInt], m: u64) -> Vec<u64> {
    let mb = BigInt::from(m);
    p.iter().map(|c| c.mod_floor(&mb).to_u64().unwrap()).collect()
}

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, m);
        }
        a = mulmod(a, a, m);
        e >>= 1;
    }
    r
}

fn trim_mod(mut p: Vec<u64>) -> Vec<u64> {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

/// Degree of `gcd(a, b)` over `GF(m)`.
pub(crate) fn gcd_degree_mod(a: &[u64], b: &[u64], m: u64) -> usize {
    let mut a = trim_mod(a.to_vec());
    let mut b = trim_mod(b.to_vec());
    if a.len() < b.len() {
        core::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let inv = powmod(*b.last().unwrap(), m - 2, m);
        while a.len() >= b.len() {
            let f = mulmod(*a.last().unwrap(), inv, m);
            let shift = a.len() - b.len();
            for (i, c) in b.iter().enumerate() {
                let t = mulmod(f, *c, m);
                a[i + shift] = (a[i + shift] + m - t) % m;
            }
            a = trim_mod(a);
            if a.is_empty() {
                break;
            }
        }
        core::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

/// Primes used for the square-free fast path.
pub(crate) const PRIMES: [u64; 3] = [2_305_843_009_213_693_951, 4_611_686_018_427_387_847, 1_000_000_007];

/// True when `gcd(p, p') = 1` can be certified by a modular computation.
pub(crate) fn certainly_square_free(p: &[BigInt]) -> bool {
    let Some(d) = deg(p) else {
        return false;
    };
    if d == 0 {
        return true;
    }
    let dp = derivative(p);
    for m in PRIMES {
        let lc = reduce_mod(&p[d..], m)[0];
        if lc == 0 || (d as u64) % m == 0 {
            continue;
        }
        // degree of the modular gcd bounds the degree of the integer gcd from above
        return gcd_degree_mod(&reduce_mod(p, m), &reduce_mod(&dp, m), m) == 0;
    }
    false
}

/// Yun's square-free decomposition of a primitive polynomial: `p = prod f_i^i`.
pub(crate) fn yun(p: &[BigInt]) -> Vec<(Z, u32)> {
    let f = primitive(p);
    let mut out = Vec::new();
    if deg(&f).unwrap_or(0) == 0 {
        return out;
    }
    if certainly_square_free(&f) {
        out.push((f, 1));
        return out;
    }
    let df = derivative(&f);
    let a0 = gcd(&f, &df);
    let mut b = div_exact(&f, &a0);
    let mut c = div_exact(&df, &a0);
    let mut d = sub(&c, &derivative(&b));
    let mut i = 1u32;
    while deg(&b).unwrap_or(0) > 0 {
        let a = gcd(&b, &d);
        if deg(&a).unwrap_or(0) > 0 {
            out.push((a.clone(), i));
        }
        b = div_exact(&b, &a);
        c = div_exact(&d, &a);
        d = sub(&c, &derivative(&b));
        i += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(v: &[i64]) -> Z {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn shift_and_scale() {
        // (x+1)^2 = x^2 + 2x + 1 shifted by 1 is (x+2)^2
        assert_eq!(taylor_shift(&z(&[1, 2, 1]), &BigInt::from(1)), z(&[4, 4, 1]));
        assert_eq!(taylor_shift(&z(&[0, 0, 1]), &BigInt::from(-3)), z(&[9, -6, 1]));
        assert_eq!(scale_down_pow2(&z(&[1, 1, 1]), 1), z(&[4, 2, 1]));
    }

    #[test]
    fn gcd_and_division() {
        let a = mul(&z(&[-1, 1]), &z(&[2, 0, 1]));
        let b = mul(&z(&[-1, 1]), &z(&[3, 1]));
        assert_eq!(gcd(&a, &b), z(&[-1, 1]));
        assert_eq!(div_exact(&a, &z(&[-1, 1])), z(&[2, 0, 1]));
    }

    #[test]
    fn yun_recovers_multiplicities() {
        // (x-1)^3 (x+2)^2 (x-5)
        let mut p = z(&[1]);
        for _ in 0..3 {
            p = mul(&p, &z(&[-1, 1]));
        }
        for _ in 0..2 {
            p = mul(&p, &z(&[2, 1]));
        }
        p = mul(&p, &z(&[-5, 1]));
        let f = yun(&p);
        assert_eq!(f, vec![(z(&[-5, 1]), 1), (z(&[2, 1]), 2), (z(&[-1, 1]), 3)]);
        assert!(!certainly_square_free(&p));
        assert!(certainly_square_free(&z(&[-2, 0, 1])));
    }

    #[test]
    fn exact_signs() {
        let p = z(&[-2, 0, 1]);
        // 3/2: 9/4 - 2 > 0; 5/4: 25/16 - 2 < 0
        assert_eq!(sign_at_dyadic(&p, &BigInt::from(3), 1), 1);
        assert_eq!(sign_at_dyadic(&p, &BigInt::from(5), 2), -1);
        assert_eq!(sign_at_dyadic(&z(&[-1, 2]), &BigInt::from(1), 1), 0);
    }

    #[test]
    fn root_bound_is_above_roots() {
        let p = mul(&z(&[-100, 1]), &z(&[3, 1]));
        assert!(root_bound_log2(&p) >= 7);
        assert_eq!(descartes_unit(&z(&[-1, 2])), 1);
    }
}
