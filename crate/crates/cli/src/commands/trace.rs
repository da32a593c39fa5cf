use clap::Args;
use serde_json::{json, Value};
use taylorstab_core::exactnum::Round;
use taylorstab_core::region::{snap_to_grid, trace_point, TraceValue};
use taylorstab_core::taylorpoly::membership_poly;

use super::{all_ok, Ctx};
use crate::format::{parse_values, to_csv, to_json};
use crate::svg::Plot;
use crate::{Failure, Format, Outcome};

/// Heights are snapped to multiples of `2^-40`.
const Y_GRID_BITS: u32 = 40;

#[derive(Args, Debug)]
pub struct TraceArgs {
    #[arg(long)]
    pub n: u32,
    /// Heights: a range `a..b` (see `--step`) or a list `0.1,1,10`.
    #[arg(long, default_value = "0..3")]
    pub y: String,
    /// Step for a range; defaults to a hundredth of its length.
    #[arg(long)]
    pub step: Option<String>,
}

fn sign_log(v: &TraceValue) -> (String, String) {
    match v {
        TraceValue::NoRoot => ("".into(), "".into()),
        TraceValue::Zero => ("0".into(), "-inf".into()),
        TraceValue::Signed { sign, log10_abs, .. } => (sign.to_string(), format!("{:.9}", log10_abs.to_f64())),
    }
}

pub fn run(ctx: &Ctx, a: &TraceArgs) -> Result<Outcome, Failure> {
    if a.n == 0 {
        return Err(Failure::Usage("n must be at least 1".into()));
    }
    let ys = parse_values(&a.y, a.step.as_deref())?;
    if ys.iter().any(num_traits::Signed::is_negative) {
        return Err(Failure::Usage("heights must be nonnegative".into()));
    }
    let ys: Vec<_> = ys.iter().map(|y| snap_to_grid(y, Y_GRID_BITS)).collect();
    let g = membership_poly(a.n, false)?;
    let vals = all_ok(ctx.par_map(&ys, |y| trace_point(&g, y).map_err(Failure::from)))?;
    let bytes = match ctx.global.format {
        Format::Csv => {
            let rows: Vec<Vec<String>> = ys
                .iter()
                .zip(&vals)
                .map(|(y, v)| {
                    let (s, l) = sign_log(v);
                    vec![a.n.to_string(), y.to_f64().to_string(), s, l]
                })
                .collect();
            to_csv(&["n", "y", "sign", "log10_abs_x"], &rows)
        }
        Format::Json => {
            let items: Vec<Value> = ys
                .iter()
                .zip(&vals)
                .map(|(y, v)| match v {
                    TraceValue::NoRoot => json!({"y": y.to_f64(), "root": null}),
                    TraceValue::Zero => json!({"y": y.to_f64(), "sign": 0, "x": 0.0}),
                    TraceValue::Signed { sign, log10_abs, root } => json!({
                        "y": y.to_f64(),
                        "sign": sign,
                        "log10_abs_x": [log10_abs.lo().to_decimal(12, Round::Floor), log10_abs.hi().to_decimal(12, Round::Ceil)],
                        "x": root.to_f64(),
                        "inverse_log": v.inverse_log_scale(),
                    }),
                })
                .collect();
            to_json(&json!({"n": a.n, "samples": items}))
        }
        Format::Svg => {
            let pts: Vec<(f64, f64)> =
                ys.iter().zip(&vals).filter_map(|(y, v)| v.inverse_log_scale().map(|x| (x, y.to_f64()))).collect();
            let span = pts.iter().map(|p| p.0.abs()).fold(0.1f64, f64::max) * 1.1;
            let (y0, y1) = (ys.first().map_or(0.0, |y| y.to_f64()), ys.last().map_or(1.0, |y| y.to_f64()));
            let mut p = Plot::new(&format!("x_{}^min on the inverse log scale", a.n), (-span, span), (y0, y1));
            p.vline(0.0, "#999999", false);
            // machine-precision guides at +-1e-16, i.e. +-1/16 on this scale
            p.vline(1.0 / 16.0, "#c0392b", true);
            p.vline(-1.0 / 16.0, "#c0392b", true);
            p.polyline(&pts, "black", false);
            p.finish()
        }
    };
    Ok(Outcome::ok(bytes))
}
