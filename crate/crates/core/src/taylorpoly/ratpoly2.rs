use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::IntPoly;
use crate::exactnum::{BigRat, DyadicInterval};

/// Sparse bivariate polynomial `sum a_ij x^i y^j` with rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RatPoly2 {
    terms: BTreeMap<(u32, u32), BigRat>,
}

impl RatPoly2 {
    pub fn new() -> RatPoly2 {
        RatPoly2::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((u32, u32), BigRat)>) -> RatPoly2 {
        let mut p = RatPoly2::new();
        for (k, c) in terms {
            p.add_term(k.0, k.1, c);
        }
        p
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: BigRat) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry((i, j)).or_insert_with(BigRat::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn coeff(&self, i: u32, j: u32) -> BigRat {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(BigRat::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigRat)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|(i, j)| i + j).max().unwrap_or(0)
    }

    pub fn degree_in_x(&self) -> u32 {
        self.terms.keys().map(|k| k.0).max().unwrap_or(0)
    }

    pub fn degree_in_y(&self) -> u32 {
        self.terms.keys().map(|k| k.1).max().unwrap_or(0)
    }

    pub fn only_even_y(&self) -> bool {
        self.terms.keys().all(|(_, j)| j % 2 == 0)
    }

    pub fn eval_rational(&self, x: &BigRat, y: &BigRat) -> BigRat {
        self.terms
            .iter()
            .map(|((i, j), c)| c * num_traits::pow(x.clone(), *i as usize) * num_traits::pow(y.clone(), *j as usize))
            .sum()
    }

    /// Horner in `x` for each power of `y`, then Horner in `y`.
    pub fn eval_interval(&self, x: &DyadicInterval, y: &DyadicInterval) -> DyadicInterval {
        let prec = x.prec().max(y.prec());
        let rows = self.rows_by_y();
        let mut acc = DyadicInterval::zero(prec);
        for row in rows.iter().rev() {
            let mut r = DyadicInterval::zero(prec);
            for c in row.iter().rev() {
                r = r.mul(x).add(&DyadicInterval::from_rational(c, prec));
            }
            acc = acc.mul(y).add(&r);
        }
        acc
    }

    /// `rows[j][i] = a_ij`.
    pub fn rows_by_y(&self) -> Vec<Vec<BigRat>> {
        let dy = self.degree_in_y() as usize;
        let dx = self.degree_in_x() as usize;
        let mut rows = vec![vec![BigRat::zero(); dx + 1]; dy + 1];
        for ((i, j), c) in &self.terms {
            rows[*j as usize][*i as usize] = c.clone();
        }
        rows
    }

    /// Restriction to the line `x = x0`, as a polynomial in `y`.
    pub fn at_x(&self, x0: &BigRat) -> IntPoly {
        self.restrict(x0, true)
    }

    /// Restriction to the line `y = y0`, as a polynomial in `x`.
    pub fn at_y(&self, y0: &BigRat) -> IntPoly {
        self.restrict(y0, false)
    }

    /// Integer arithmetic throughout: with `v = p/q` and `L` the common
    /// denominator, accumulates `L q^d * a_ij v^e`.
    fn restrict(&self, v: &BigRat, fix_x: bool) -> IntPoly {
        let (free_deg, fixed_deg) = if fix_x {
            (self.degree_in_y(), self.degree_in_x())
        } else {
            (self.degree_in_x(), self.degree_in_y())
        };
        let d = fixed_deg as usize;
        let mut l = BigInt::one();
        for c in self.terms.values() {
            l = l.lcm(c.denom());
        }
        let (p, q) = (v.numer(), v.denom());
        let mut pp = vec![BigInt::one()];
        let mut qp = vec![BigInt::one()];
        for k in 0..d {
            let np = &pp[k] * p;
            let nq = &qp[k] * q;
            pp.push(np);
            qp.push(nq);
        }
        let mut out = vec![BigInt::zero(); free_deg as usize + 1];
        for (&(i, j), c) in &self.terms {
            let (slot, e) = if fix_x { (j, i) } else { (i, j) };
            let e = e as usize;
            let a = c.numer() * (&l / c.denom());
            out[slot as usize] += a * &pp[e] * &qp[d - e];
        }
        let scale = BigRat::new(BigInt::one(), l * &qp[d]);
        IntPoly::new(out, scale).normalized()
    }

    /// Substitutes `(x, y) -> (s x, s y)`.
    pub fn scaled(&self, s: &BigRat) -> RatPoly2 {
        RatPoly2 {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| ((i, j), c * num_traits::pow(s.clone(), (i + j) as usize)))
                .collect(),
        }
    }
}

/// A ray direction in the closed upper half-plane, with rational cosine and sine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RayDirection {
    /// `(cos, sin) = ((1 - t^2) / (1 + t^2), 2t / (1 + t^2))`.
    HalfAngle(BigRat),
    /// The direction `(-1, 0)`, i.e. the limit `t -> infinity`.
    NegativeReal,
}

impl RayDirection {
    pub fn cos_sin(&self) -> (BigRat, BigRat) {
        match self {
            RayDirection::HalfAngle(t) => {
                let t2 = t * t;
                let d = BigRat::one() + &t2;
                ((BigRat::one() - &t2) / &d, (t * BigRat::from_integer(BigInt::from(2))) / d)
            }
            RayDirection::NegativeReal => (-BigRat::one(), BigRat::zero()),
        }
    }

    /// Angle in radians (float-grade).
    pub fn angle_f64(&self) -> f64 {
        match self {
            RayDirection::HalfAngle(t) => 2.0 * libm::atan(super::intpoly::rat_to_f64(t)),
            RayDirection::NegativeReal => core::f64::consts::PI,
        }
    }

    /// Nearest half-angle direction to the angle `phi` in `[0, pi]`, with the
    /// parameter rounded to a multiple of `2^-bits`.
    pub fn from_angle(phi: f64, bits: u32) -> RayDirection {
        if phi >= core::f64::consts::PI {
            return RayDirection::NegativeReal;
        }
        let t = libm::tan(phi / 2.0);
        let q = crate::exactnum::Dyadic::from_f64(t).round_to_quantum(-(bits as i64), crate::exactnum::Round::Floor);
        RayDirection::HalfAngle(q.to_rational())
    }
}

/// `r -> g(r cos phi, r sin phi)` as an exact polynomial in `r`.
pub fn ray_restrict(g: &RatPoly2, dir: &RayDirection) -> IntPoly {
    let (c, s) = dir.cos_sin();
    let deg = g.total_degree() as usize;
    let mut q = vec![BigRat::zero(); deg + 1];
    for ((i, j), a) in g.terms() {
        let term = a * num_traits::pow(c.clone(), *i as usize) * num_traits::pow(s.clone(), *j as usize);
        q[(i + j) as usize] += term;
    }
    IntPoly::from_rationals(&q)
}
