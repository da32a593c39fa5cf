use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};
use taylorstab_core::exactnum::{BigRat, Dyadic, Round};
use taylorstab_core::extremal::{CertStatus, Mode, RadiusCertificate};
use taylorstab_core::taylorpoly::{IntPoly, RatPoly2};

use crate::Failure;

/// Exact decimal expansion of a dyadic, without trailing zeros.
pub fn exact_decimal(d: &Dyadic) -> String {
    let digits = (-d.exponent()).max(0) as u32;
    let s = d.to_decimal(digits, Round::Floor);
    if !s.contains('.') {
        return s;
    }
    let t = s.trim_end_matches('0').trim_end_matches('.');
    if t == "-0" {
        "0".to_string()
    } else {
        t.to_string()
    }
}

/// Inverse of [`exact_decimal`]; `None` unless the value is dyadic.
pub fn dyadic_from_decimal(s: &str) -> Option<Dyadic> {
    let q = parse_decimal(s).ok()?;
    let den = q.denom();
    let j = den.trailing_zeros().unwrap_or(0);
    if den != &(BigInt::one() << j) {
        return None;
    }
    Some(Dyadic::new(q.numer().clone(), -(j as i64)))
}

/// Parses `-12.5`, `3`, `1e-6` or `2.5E+3` exactly.
pub fn parse_decimal(s: &str) -> Result<BigRat, Failure> {
    let bad = || Failure::Usage(format!("not a decimal number: `{s}`"));
    let t = s.trim();
    let (mant, exp) = match t.find(['e', 'E']) {
        Some(i) => (&t[..i], t[i + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (t, 0),
    };
    let (neg, mant) = match mant.strip_prefix('-') {
        Some(m) => (true, m),
        None => (false, mant.strip_prefix('+').unwrap_or(mant)),
    };
    let (int, frac) = mant.split_once('.').unwrap_or((mant, ""));
    if int.is_empty() && frac.is_empty() || !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let num: BigInt = format!("{int}{frac}0").parse().map_err(|_| bad())?;
    let num = num / 10;
    let scale = exp - frac.len() as i32;
    let ten = BigInt::from(10);
    let mut q = if scale >= 0 {
        BigRat::from_integer(num * num_traits::pow(ten, scale as usize))
    } else {
        BigRat::new(num, num_traits::pow(ten, (-scale) as usize))
    };
    if neg {
        q = -q;
    }
    Ok(q)
}

/// `1..12`, `1..=12`, `3,4,7` or mixtures like `1..4,8`; all entries >= 1.
pub fn parse_n_list(s: &str) -> Result<Vec<u32>, Failure> {
    let bad = |m: &str| Failure::Usage(format!("bad degree list `{s}`: {m}"));
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        if let Some((a, b)) = part.split_once("..") {
            let b = b.strip_prefix('=').unwrap_or(b);
            let a: u32 = a.trim().parse().map_err(|_| bad(part))?;
            let b: u32 = b.trim().parse().map_err(|_| bad(part))?;
            if a > b {
                return Err(bad("empty range"));
            }
            out.extend(a..=b);
        } else {
            out.push(part.parse().map_err(|_| bad(part))?);
        }
    }
    if out.is_empty() {
        return Err(bad("empty"));
    }
    if out.contains(&0) {
        return Err(bad("degrees start at 1"));
    }
    Ok(out)
}

/// `a..b` sampled with `step` (default: 100 steps), or a comma list.
pub fn parse_values(s: &str, step: Option<&str>) -> Result<Vec<BigRat>, Failure> {
    if let Some((a, b)) = s.split_once("..") {
        let a = parse_decimal(a)?;
        let b = parse_decimal(b.strip_prefix('=').unwrap_or(b))?;
        if a > b {
            return Err(Failure::Usage(format!("empty range `{s}`")));
        }
        let step = match step {
            Some(t) => parse_decimal(t)?,
            None => (&b - &a) / BigRat::from_integer(100.into()),
        };
        if step.is_zero() {
            return Ok(vec![a]);
        }
        if !step.is_positive() {
            return Err(Failure::Usage("step must be positive".into()));
        }
        let count = ((&b - &a) / &step).floor().to_integer();
        let count: u64 = count.try_into().map_err(|_| Failure::Usage("too many samples".into()))?;
        if count > 1_000_000 {
            return Err(Failure::Usage("too many samples".into()));
        }
        return Ok((0..=count).map(|k| &a + &step * BigRat::from_integer(k.into())).collect());
    }
    s.split(',').map(str::trim).filter(|p| !p.is_empty()).map(parse_decimal).collect()
}

pub fn parse_f64_list(s: &str) -> Result<Vec<f64>, Failure> {
    s.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| p.parse::<f64>().map_err(|_| Failure::Usage(format!("not a number: `{p}`"))))
        .collect()
}

pub fn to_csv(header: &[&str], rows: &[Vec<String>]) -> Vec<u8> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(r).expect("in-memory write");
    }
    w.into_inner().expect("in-memory flush")
}

pub fn to_json(v: &Value) -> Vec<u8> {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s.into_bytes()
}

/// 12-decimal outward rounding for CSV columns.
pub fn lo_text(d: &Dyadic) -> String {
    d.to_decimal(12, Round::Floor)
}

pub fn hi_text(d: &Dyadic) -> String {
    d.to_decimal(12, Round::Ceil)
}

pub fn status_str(s: CertStatus) -> &'static str {
    match s {
        CertStatus::Complete => "complete",
        CertStatus::BudgetExhausted => "budget-exhausted",
        CertStatus::PrecisionExhausted => "precision-exhausted",
    }
}

fn status_from(s: &str) -> Option<CertStatus> {
    Some(match s {
        "complete" => CertStatus::Complete,
        "budget-exhausted" => CertStatus::BudgetExhausted,
        "precision-exhausted" => CertStatus::PrecisionExhausted,
        _ => return None,
    })
}

fn mode_from(s: &str) -> Option<Mode> {
    Some(match s {
        "full" => Mode::Full,
        "left" => Mode::LeftHalf,
        "semidisk" => Mode::InnerSemiDisk,
        _ => return None,
    })
}

/// The certificate object `{"n","mode","lo","hi","witness":{"re","im"},"tol"}`.
pub fn cert_json(c: &RadiusCertificate) -> Value {
    json!({
        "n": c.n,
        "mode": c.mode.as_str(),
        "lo": exact_decimal(&c.lo),
        "hi": exact_decimal(&c.hi),
        "witness": {"re": exact_decimal(&c.witness.0), "im": exact_decimal(&c.witness.1)},
        "tol": exact_decimal(&c.tol),
    })
}

pub fn cert_from_json(v: &Value, status: &str, boxes: u64) -> Option<RadiusCertificate> {
    let d = |x: &Value| x.as_str().and_then(dyadic_from_decimal);
    Some(RadiusCertificate {
        n: v["n"].as_u64()? as u32,
        mode: mode_from(v["mode"].as_str()?)?,
        lo: d(&v["lo"])?,
        hi: d(&v["hi"])?,
        witness: (d(&v["witness"]["re"])?, d(&v["witness"]["im"])?),
        tol: d(&v["tol"])?,
        boxes_processed: boxes,
        status: status_from(status)?,
    })
}

fn rat_pair(q: &BigRat) -> Value {
    json!([q.numer().to_string(), q.denom().to_string()])
}

/// `{"n","family","coeffs":[["num","den"],...]}` for a univariate family.
pub fn poly_json(n: u32, family: &str, p: &IntPoly) -> Value {
    json!({"n": n, "family": family, "coeffs": p.to_rationals().iter().map(rat_pair).collect::<Vec<_>>()})
}

/// Bivariate variant: `coeffs[i]` belongs to the monomial `x^a y^b` with
/// `[a, b] = exponents[i]`.
pub fn poly2_json(n: u32, family: &str, g: &RatPoly2) -> Value {
    let (exps, coeffs): (Vec<Value>, Vec<Value>) = g.terms().map(|(&(i, j), c)| (json!([i, j]), rat_pair(c))).unzip();
    json!({"n": n, "family": family, "coeffs": coeffs, "exponents": exps})
}

#[cfg(test)]
mod tests {
    use super::*;
    use taylorstab_core::exactnum::rat;

    #[test]
    fn decimal_parsing() {
        assert_eq!(parse_decimal("1e-6").unwrap(), rat(1, 1_000_000));
        assert_eq!(parse_decimal("-2.50").unwrap(), rat(-5, 2));
        assert_eq!(parse_decimal("38.1").unwrap(), rat(381, 10));
        assert_eq!(parse_decimal(".5").unwrap(), rat(1, 2));
        assert_eq!(parse_decimal("2E+2").unwrap(), rat(200, 1));
        assert!(parse_decimal("abc").is_err());
        assert!(parse_decimal("").is_err());
        assert!(parse_decimal("1.2.3").is_err());
    }

    #[test]
    fn n_lists() {
        assert_eq!(parse_n_list("1..4").unwrap(), vec![1, 2, 3, 4]);
        assert_eq!(parse_n_list("3,4,7..=8").unwrap(), vec![3, 4, 7, 8]);
        assert!(parse_n_list("0..3").is_err());
        assert!(parse_n_list("5..2").is_err());
    }

    #[test]
    fn value_ranges() {
        assert_eq!(parse_values("0..1", Some("0.25")).unwrap().len(), 5);
        assert_eq!(parse_values("0.1,1,10", None).unwrap()[2], rat(10, 1));
        assert_eq!(parse_values("0..3", None).unwrap().len(), 101);
    }

    #[test]
    fn exact_decimal_round_trips() {
        for d in [Dyadic::new(BigInt::from(-3), -5), Dyadic::from_i64(2), Dyadic::new(BigInt::from(7), 3), Dyadic::zero()] {
            let s = exact_decimal(&d);
            assert_eq!(dyadic_from_decimal(&s).unwrap(), d, "{s}");
        }
        assert_eq!(exact_decimal(&Dyadic::new(BigInt::from(1), -1)), "0.5");
        assert!(dyadic_from_decimal("0.1").is_none());
    }
}
