//! Polynomial families built from the truncated exponential series.
//!
//! Conventions: `P(z) = sum_{k<=n} z^k/k!` is the partial sum, `P_n(z) = P(nz)`
//! the scaled sum, `E_n(y) = |P(iy)|^2 - 1` the imaginary-axis polynomial and
//! `G_n(x, y) = |P(x + iy)|^2 - 1` the modulus polynomial whose sublevel set
//! `{G_n <= 0}` is the stability region.

mod complex;
pub(crate) mod intpoly;
mod ratpoly2;

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};

pub use complex::ComplexPoint;
pub use intpoly::IntPoly;
pub use ratpoly2::{ray_restrict, RatPoly2, RayDirection};

use crate::exactnum::{factorial, BigRat, DyadicInterval};
use crate::{Error, Result};
use intpoly::dense;

fn require_positive(n: u32, what: &str) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidInput(alloc::format!("{what} must be at least 1")));
    }
    Ok(())
}

fn big(v: u64) -> BigInt {
    BigInt::from(v)
}

fn ratio(num: BigInt, den: BigInt) -> BigRat {
    BigRat::new(num, den)
}

/// `n! * sum z^k/k!` with scale `1/n!`.
pub fn partial_sum(n: u32) -> Result<IntPoly> {
    require_positive(n, "degree")?;
    let nf = factorial(n);
    let mut coeffs = Vec::with_capacity(n as usize + 1);
    let mut c = nf.clone();
    // c runs through n!/k!
    for k in 0..=n {
        if k > 0 {
            c /= k;
        }
        coeffs.push(c.clone());
    }
    Ok(IntPoly::new(coeffs, ratio(BigInt::one(), nf)))
}

/// `P_n(z) = sum (nz)^k/k!`, coefficients `n! n^k / k!` with scale `1/n!`.
pub fn scaled_partial_sum(n: u32) -> Result<IntPoly> {
    let p = partial_sum(n)?;
    let mut pw = BigInt::one();
    let coeffs = p
        .coeffs()
        .iter()
        .map(|c| {
            let v = c * &pw;
            pw *= n;
            v
        })
        .collect();
    Ok(IntPoly::new(coeffs, p.scale().clone()))
}

/// Certified enclosure of `T_n(z) = n!/(nz)^n P_n(z) = sum_j n!/(n-j)! (nz)^-j`.
pub fn t_n_eval(n: u32, z: &ComplexPoint) -> Result<ComplexPoint> {
    require_positive(n, "degree")?;
    if z.may_be_zero() {
        return Err(Error::Domain("T_n is undefined at 0"));
    }
    let prec = z.re.prec().max(z.im.prec());
    let nz = z.scale(&DyadicInterval::from_i64(n as i64, prec));
    let w = nz.recip()?;
    // Horner in w over the falling factorials n!/(n-j)!
    let mut falling = vec![BigInt::one(); n as usize + 1];
    for j in 1..=n as usize {
        falling[j] = &falling[j - 1] * (n as usize - j + 1);
    }
    let mut acc = ComplexPoint::zero(prec);
    for c in falling.iter().rev() {
        acc = acc.mul(&w).add(&ComplexPoint::real(DyadicInterval::from_int(c, prec)));
    }
    Ok(acc)
}

/// Checks `T_n(z) = z/(z-1) (1 + T_n'(z)/n)` as an identity of rational functions.
///
/// With `T_n = P_n / (c z^n)`, `c = n^n/n!`, both sides are multiplied by
/// `n c z^(n+1) (z - 1)` and the polynomials
/// `n P_n z (z-1)` and `z (n c z^(n+1) + P_n' z - n P_n)` compared exactly.
pub fn t_n_ode_identity(n: u32) -> Result<bool> {
    let p = scaled_partial_sum(n)?.to_rationals();
    let dp = dense::derivative(&p);
    let nn = BigRat::from_integer(big(n as u64));
    let c = ratio(num_traits::pow(big(n as u64), n as usize), factorial(n));
    let z = dense::monomial(BigRat::one(), 1);
    let z_minus_1 = dense::sub(&z, &[BigRat::one()]);
    let np: Vec<BigRat> = p.iter().map(|a| a * &nn).collect();
    let lhs = dense::mul(&dense::mul(&np, &z), &z_minus_1);
    let inner = dense::sub(
        &dense::add(&dense::monomial(&nn * &c, n as usize + 1), &dense::mul(&dp, &z)),
        &np,
    );
    let rhs = dense::mul(&z, &inner);
    Ok(lhs == rhs)
}

/// `E_n` from the closed-form case split on `n mod 4`.
pub fn e_polynomial(n: u32) -> Result<IntPoly> {
    require_positive(n, "degree")?;
    let nf = factorial(n);
    let deg = 2 * n as usize;
    let mut q = vec![BigRat::zero(); deg + 1];
    let lead = n as usize + 1;
    match n % 4 {
        0 | 2 => {
            let sign: i64 = if n % 4 == 0 { -1 } else { 1 };
            let half = n as u64 / 2;
            for k in 1..=half {
                let s = if k % 2 == 1 { sign } else { -sign };
                // (2k-1)! (k + n/2)
                let den = factorial(2 * k as u32 - 1) * big(k + half);
                q[lead + 2 * k as usize - 1] = ratio(BigInt::from(s), den * &nf);
            }
        }
        _ => {
            let sign: i64 = if n % 4 == 1 { 1 } else { -1 };
            // k + (n+1)/2 = (2k + n + 1)/2
            for k in 0..=(n as u64 - 1) / 2 {
                let s = if k % 2 == 0 { sign } else { -sign };
                let den = factorial(2 * k as u32) * big(2 * k + n as u64 + 1);
                q[lead + 2 * k as usize] = ratio(BigInt::from(2 * s), den * &nf);
            }
        }
    }
    Ok(IntPoly::from_rationals(&q))
}

/// `|sum (iy)^k/k!|^2 - 1` by direct expansion; the oracle for [`e_polynomial`].
pub fn e_polynomial_expanded(n: u32) -> Result<IntPoly> {
    require_positive(n, "degree")?;
    let ps = partial_sum(n)?;
    // real part: even k with sign (-1)^(k/2); imaginary part: odd k
    let mut re = vec![BigInt::zero(); n as usize + 1];
    let mut im = vec![BigInt::zero(); n as usize + 1];
    for (k, c) in ps.coeffs().iter().enumerate() {
        let v = if (k / 2) % 2 == 0 { c.clone() } else { -c };
        if k % 2 == 0 {
            re[k] = v;
        } else {
            im[k] = v;
        }
    }
    let mut sq = dense::int_mul(&re, &re);
    for (k, v) in dense::int_mul(&im, &im).into_iter().enumerate() {
        sq[k] += v;
    }
    let nf = factorial(n);
    sq[0] -= &nf * &nf;
    Ok(IntPoly::new(sq, ratio(BigInt::one(), &nf * &nf)).normalized())
}

/// `(n+1)!/(2 y^(n+1)) E_n(y)`, a polynomial of degree `n - 1`.
pub fn e_tilde(n: u32) -> Result<IntPoly> {
    let e = e_polynomial(n)?;
    let k = n as usize + 1;
    let shifted = e.shift_down(k);
    let f = ratio(factorial(n + 1), big(2));
    Ok(IntPoly::new(shifted.coeffs().to_vec(), shifted.scale() * f).normalized())
}

/// `f_m(z) = -(4m+1)/2 sum_{k=1}^{2m} (-1)^(k+1) z^(2k-1) / ((2k-1)! (k+2m))`.
pub fn f_m_polynomial(m: u32) -> Result<IntPoly> {
    require_positive(m, "m")?;
    let top = 2 * m as u64;
    let mut q = vec![BigRat::zero(); 4 * m as usize];
    let pre = ratio(-big(4 * m as u64 + 1), big(2));
    for k in 1..=top {
        let s: i64 = if k % 2 == 1 { 1 } else { -1 };
        let den = factorial(2 * k as u32 - 1) * big(k + top);
        q[2 * k as usize - 1] = &pre * ratio(BigInt::from(s), den);
    }
    Ok(IntPoly::from_rationals(&q))
}

/// `G_n(x, y) = |sum (x+iy)^k/k!|^2 - 1`, optionally with `(x, y) -> (nx, ny)`.
pub fn membership_poly(n: u32, scaled: bool) -> Result<RatPoly2> {
    require_positive(n, "degree")?;
    let ps = if scaled { scaled_partial_sum(n)? } else { partial_sum(n)? };
    let (re, im) = split_real_imag(ps.coeffs());
    let mut acc: alloc::collections::BTreeMap<(u32, u32), BigInt> = Default::default();
    for part in [&re, &im] {
        for (&(a1, b1), c1) in part.iter() {
            for (&(a2, b2), c2) in part.iter() {
                *acc.entry((a1 + a2, b1 + b2)).or_insert_with(BigInt::zero) += c1 * c2;
            }
        }
    }
    let s2 = ps.scale() * ps.scale();
    let mut g = RatPoly2::new();
    for ((i, j), c) in acc {
        g.add_term(i, j, &s2 * BigRat::from_integer(c));
    }
    g.add_term(0, 0, -BigRat::one());
    Ok(g)
}

type Bivariate = alloc::collections::BTreeMap<(u32, u32), BigInt>;

/// Real and imaginary parts of `sum c_k (x + iy)^k` as integer bivariate maps.
fn split_real_imag(c: &[BigInt]) -> (Bivariate, Bivariate) {
    let mut re = Bivariate::new();
    let mut im = Bivariate::new();
    for (k, ck) in c.iter().enumerate() {
        for j in 0..=k {
            let b = binomial(big(k as u64), big(j as u64)) * ck;
            let key = ((k - j) as u32, j as u32);
            match j % 4 {
                0 => *re.entry(key).or_insert_with(BigInt::zero) += b,
                1 => *im.entry(key).or_insert_with(BigInt::zero) += b,
                2 => *re.entry(key).or_insert_with(BigInt::zero) -= b,
                _ => *im.entry(key).or_insert_with(BigInt::zero) -= b,
            }
        }
    }
    (re, im)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn partial_sums() {
        let p1 = partial_sum(1).unwrap();
        assert_eq!(p1.coeffs(), ints(&[1, 1]).as_slice());
        assert_eq!(p1.scale(), &rat(1, 1));
        let p3 = partial_sum(3).unwrap();
        assert_eq!(p3.coeffs(), ints(&[6, 6, 3, 1]).as_slice());
        assert_eq!(p3.scale(), &rat(1, 6));
        assert!(partial_sum(0).is_err());
    }

    #[test]
    fn scaled_sums() {
        let p2 = scaled_partial_sum(2).unwrap();
        assert_eq!(p2.coeffs(), ints(&[2, 4, 4]).as_slice());
        assert_eq!(p2.scale(), &rat(1, 2));
        assert_eq!(p2.eval_rational(&rat(-1, 1)), rat(1, 1));
        assert_eq!(scaled_partial_sum(1).unwrap(), IntPoly::from_i64s(&[1, 1]));
        for n in 1..8 {
            let a = scaled_partial_sum(n).unwrap();
            let b = partial_sum(n).unwrap();
            let z = rat(3, 7);
            assert_eq!(a.eval_rational(&z), b.eval_rational(&(z * rat(n as i64, 1))));
        }
    }

    #[test]
    fn t_n_values() {
        let z = ComplexPoint::from_f64(2.0, 0.0, 64);
        let t = t_n_eval(2, &z).unwrap();
        assert!(t.re.contains_rational(&rat(13, 8)));
        assert!(t.im.contains_zero());
        let t1 = t_n_eval(1, &ComplexPoint::from_f64(1.0, 0.0, 64)).unwrap();
        assert!(t1.re.contains_rational(&rat(2, 1)));
        assert!(t_n_eval(3, &ComplexPoint::zero(64)).is_err());
    }

    #[test]
    fn t_n_ode_at_two() {
        // T_2(z) = 1/(2z^2) + 1/z + 1, T_2'(z) = -1/z^3 - 1/z^2
        let z = rat(2, 1);
        let t = rat(13, 8);
        let dt = -rat(1, 8) - rat(1, 4);
        assert_eq!(&z / (&z - rat(1, 1)) * (rat(1, 1) + dt / rat(2, 1)), t);
        for n in 1..=10 {
            assert!(t_n_ode_identity(n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn e_polynomial_small_cases() {
        assert_eq!(e_polynomial(1).unwrap(), IntPoly::from_i64s(&[0, 0, 1]));
        let e2 = IntPoly::new(ints(&[0, 0, 0, 0, 1]), rat(1, 4));
        assert_eq!(e_polynomial(2).unwrap(), e2);
        let e4 = IntPoly::new(ints(&[0, 0, 0, 0, 0, 0, -8, 0, 1]), rat(1, 576));
        assert_eq!(e_polynomial(4).unwrap(), e4);
    }

    #[test]
    fn e_polynomial_matches_expansion() {
        for n in 1..=30 {
            let a = e_polynomial(n).unwrap();
            let b = e_polynomial_expanded(n).unwrap();
            assert_eq!(a.coeffs(), b.coeffs(), "n = {n}");
            assert_eq!(a.scale(), b.scale(), "n = {n}");
        }
    }

    #[test]
    fn f_m_matches_e_tilde() {
        let f1 = f_m_polynomial(1).unwrap();
        assert_eq!(f1.degree(), Some(3));
        assert_eq!(f1.to_rationals()[1], rat(-5, 6));
        for m in 1..=8 {
            let f = f_m_polynomial(m).unwrap();
            assert_eq!(f.degree(), Some(4 * m as usize - 1));
            assert_eq!(f, e_tilde(4 * m).unwrap(), "m = {m}");
        }
    }

    #[test]
    fn f_m_close_to_minus_sine() {
        // |f_m + sin| <= rho cosh(rho) / (4m) on D_rho
        let bound = 2.0 * libm::cosh(2.0);
        for m in [5u32, 10, 20] {
            let f = f_m_polynomial(m).unwrap();
            let lim = DyadicInterval::from_f64(bound / (4.0 * m as f64), 53);
            for s in 0..200u32 {
                let r = 2.0 * libm::sqrt((s as f64 + 0.5) / 200.0);
                let a = s as f64 * 2.399_963_229_728_653;
                let z = ComplexPoint::from_f64(r * libm::cos(a), r * libm::sin(a), 96);
                let d = f.eval_complex(&z).add(&z.sin()).abs();
                assert!(d.certainly_le(&lim), "m = {m}, sample {s}");
            }
        }
    }

    #[test]
    fn membership_poly_basics() {
        let g1 = membership_poly(1, false).unwrap();
        let expect = RatPoly2::from_terms([((1, 0), rat(2, 1)), ((2, 0), rat(1, 1)), ((0, 2), rat(1, 1))]);
        assert_eq!(g1, expect);
        for n in 1..=30 {
            let g = membership_poly(n, false).unwrap();
            assert!(g.coeff(0, 0).is_zero());
            assert!(g.only_even_y());
            assert_eq!(g.total_degree(), 2 * n);
            assert_eq!(g.at_x(&BigRat::zero()), e_polynomial(n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn scaled_membership_is_substitution() {
        for n in [2u32, 5, 9] {
            let g = membership_poly(n, false).unwrap();
            let gs = membership_poly(n, true).unwrap();
            assert_eq!(gs, g.scaled(&rat(n as i64, 1)));
            let (x, y) = (rat(-1, 3), rat(2, 5));
            let nn = rat(n as i64, 1);
            assert_eq!(gs.eval_rational(&x, &y), g.eval_rational(&(&x * &nn), &(&y * &nn)));
        }
    }

    #[test]
    fn ray_restrictions() {
        for n in 1..=12 {
            let g = membership_poly(n, false).unwrap();
            assert_eq!(ray_restrict(&g, &RayDirection::HalfAngle(rat(1, 1))), e_polynomial(n).unwrap());
            let neg = ray_restrict(&g, &RayDirection::NegativeReal);
            let axis = g.at_y(&BigRat::zero());
            for r in [rat(1, 3), rat(5, 2)] {
                assert_eq!(neg.eval_rational(&r), axis.eval_rational(&-r.clone()));
            }
        }
        let g = membership_poly(3, true).unwrap();
        let t = rat(3, 2);
        let dir = RayDirection::HalfAngle(t);
        let (c, s) = dir.cos_sin();
        let p = ray_restrict(&g, &dir);
        let r = rat(2, 7);
        assert_eq!(p.eval_rational(&r), g.eval_rational(&(&r * c), &(&r * s)));
    }

    #[test]
    fn angle_mapping() {
        let d = RayDirection::from_angle(2.0, 40);
        assert!((d.angle_f64() - 2.0).abs() < 1e-6);
    }
}
