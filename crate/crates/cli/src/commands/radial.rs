use std::path::PathBuf;

use clap::Args;
use serde_json::{json, Value};
use taylorstab_core::region::{radial_slice_max_with, refine_to_bits};
use taylorstab_core::taylorpoly::{membership_poly, ray_restrict, RayDirection};

use super::{all_ok, Ctx};
use crate::format::{hi_text, lo_text, poly2_json, to_csv, to_json};
use crate::svg::Plot;
use crate::{write_atomic, Failure, Format, Outcome};

/// Half-angle parameters on a `2^-22` grid keep `|dphi| < 1e-6`.
const ANGLE_BITS: u32 = 22;

#[derive(Args, Debug)]
pub struct RadialArgs {
    #[arg(long)]
    pub n: u32,
    /// Number of directions spanning [pi/2, pi].
    #[arg(long, default_value_t = 64)]
    pub directions: usize,
    /// Also write the scaled modulus polynomial G_n as JSON to this path.
    #[arg(long)]
    pub emit_poly: Option<PathBuf>,
}

struct Ray {
    phi: f64,
    max: (taylorstab_core::exactnum::Dyadic, taylorstab_core::exactnum::Dyadic),
    origin: (taylorstab_core::exactnum::Dyadic, taylorstab_core::exactnum::Dyadic),
}

pub fn run(ctx: &Ctx, a: &RadialArgs) -> Result<Outcome, Failure> {
    if a.n == 0 {
        return Err(Failure::Usage("n must be at least 1".into()));
    }
    if a.directions < 2 {
        return Err(Failure::Usage("--directions must be at least 2".into()));
    }
    let g = membership_poly(a.n, true)?;
    if let Some(path) = &a.emit_poly {
        write_atomic(path, &to_json(&poly2_json(a.n, "G", &g)))?;
    }
    let half_pi = std::f64::consts::FRAC_PI_2;
    let dirs: Vec<RayDirection> = (0..a.directions)
        .map(|k| RayDirection::from_angle(half_pi + half_pi * k as f64 / (a.directions - 1) as f64, ANGLE_BITS))
        .collect();
    let rays = all_ok(ctx.par_map(&dirs, |d| {
        let r = radial_slice_max_with(&g, d)?;
        let h = ray_restrict(&g, d);
        let m = refine_to_bits(&r.global, &h, 40);
        let o = refine_to_bits(&r.origin_component, &h, 40);
        Ok(Ray { phi: d.angle_f64(), max: (m.lo, m.hi), origin: (o.lo, o.hi) })
    }))?;
    let mid = |p: &(taylorstab_core::exactnum::Dyadic, taylorstab_core::exactnum::Dyadic)| (p.0.to_f64() + p.1.to_f64()) / 2.0;
    let bytes = match ctx.global.format {
        Format::Csv => {
            let rows: Vec<Vec<String>> = rays
                .iter()
                .map(|r| vec![format!("{:.9}", r.phi), format!("{:.12}", mid(&r.max)), format!("{:.12}", mid(&r.origin))])
                .collect();
            to_csv(&["phi", "max", "origin_component_max"], &rows)
        }
        Format::Json => {
            let items: Vec<Value> = rays
                .iter()
                .map(|r| {
                    json!({
                        "phi": r.phi,
                        "max": [lo_text(&r.max.0), hi_text(&r.max.1)],
                        "origin_component_max": [lo_text(&r.origin.0), hi_text(&r.origin.1)],
                    })
                })
                .collect();
            to_json(&json!({"n": a.n, "rays": items}))
        }
        Format::Svg => {
            let top = rays.iter().map(|r| mid(&r.max)).fold(0.5f64, f64::max) * 1.1;
            let mut p = Plot::new(&format!("extent of S_{} by angle", a.n), (half_pi, std::f64::consts::PI), (0.0, top));
            p.hline((-1.0f64).exp(), "red", true);
            p.polyline(&rays.iter().map(|r| (r.phi, mid(&r.max))).collect::<Vec<_>>(), "black", false);
            p.polyline(&rays.iter().map(|r| (r.phi, mid(&r.origin))).collect::<Vec<_>>(), "#4a6fa5", false);
            p.finish()
        }
    };
    Ok(Outcome::ok(bytes))
}
