use std::path::PathBuf;

use clap::{Args, ValueEnum};
use serde_json::{json, Value};
use taylorstab_core::region::complex_zeros;
use taylorstab_core::taylorpoly::{e_polynomial, f_m_polynomial, partial_sum, scaled_partial_sum, IntPoly};

use super::Ctx;
use crate::format::{poly_json, to_csv, to_json};
use crate::svg::Plot;
use crate::{write_atomic, Failure, Format, Outcome};

#[derive(Args, Debug)]
pub struct ZerosArgs {
    #[arg(long, value_enum, default_value_t = Family::Scaled)]
    pub family: Family,
    /// Degree, or `m` for the `f` family.
    #[arg(long)]
    pub n: u32,
    /// Also write the polynomial as JSON to this path.
    #[arg(long)]
    pub emit_poly: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// sum z^k/k!
    Psum,
    /// sum (nz)^k/k!
    Scaled,
    /// The imaginary-axis polynomial E_n.
    E,
    /// f_m.
    F,
}

fn polynomial(f: Family, n: u32) -> Result<(IntPoly, Value), Failure> {
    let (p, name) = match f {
        Family::Psum => (partial_sum(n)?, "Psum"),
        Family::Scaled => (scaled_partial_sum(n)?, "Psum"),
        Family::E => (e_polynomial(n)?, "E"),
        Family::F => (f_m_polynomial(n)?, "f"),
    };
    let mut v = poly_json(n, name, &p);
    if name == "Psum" {
        v["scaled"] = json!(f == Family::Scaled);
    }
    Ok((p, v))
}

pub fn run(ctx: &Ctx, a: &ZerosArgs) -> Result<Outcome, Failure> {
    if a.n == 0 {
        return Err(Failure::Usage("n must be at least 1".into()));
    }
    let (p, pj) = polynomial(a.family, a.n)?;
    if let Some(path) = &a.emit_poly {
        write_atomic(path, &to_json(&pj))?;
    }
    let zs: Vec<(f64, f64)> = complex_zeros(&p)?.iter().map(|z| z.to_f64()).collect();
    let bytes = match ctx.global.format {
        Format::Csv => {
            let rows: Vec<Vec<String>> = zs.iter().map(|(x, y)| vec![format!("{x:.15e}"), format!("{y:.15e}")]).collect();
            to_csv(&["re", "im"], &rows)
        }
        Format::Json => {
            let items: Vec<Value> = zs.iter().map(|(x, y)| json!({"re": x, "im": y})).collect();
            to_json(&json!({"polynomial": pj, "zeros": items}))
        }
        Format::Svg => {
            let r = zs.iter().map(|(x, y)| x.hypot(*y)).fold(1.0f64, f64::max) * 1.1;
            let mut p = Plot::new("complex zeros", (-r, r), (-r, r));
            let circle: Vec<(f64, f64)> =
                (0..=128).map(|k| std::f64::consts::TAU * k as f64 / 128.0).map(|t| (t.cos(), t.sin())).collect();
            p.polyline(&circle, "#999999", true);
            p.points(&zs, "black");
            p.finish()
        }
    };
    Ok(Outcome::ok(bytes))
}
