use clap::Args;
use serde_json::{json, Value};
use taylorstab_core::szego::{szego_contours, Grid};

use super::Ctx;
use crate::format::{parse_f64_list, to_csv, to_json};
use crate::svg::Plot;
use crate::{Failure, Format, Outcome};

#[derive(Args, Debug)]
pub struct ContourArgs {
    /// Levels of |z e^(1-z)|, comma separated.
    #[arg(long, default_value = "1")]
    pub levels: String,
    /// `x0,x1,y0,y1`.
    #[arg(long, default_value = "-1.5,2.5,-2,2", allow_hyphen_values = true)]
    pub window: String,
    /// Grid points per axis.
    #[arg(long, default_value_t = 200)]
    pub resolution: usize,
}

pub fn run(ctx: &Ctx, a: &ContourArgs) -> Result<Outcome, Failure> {
    let levels = parse_f64_list(&a.levels)?;
    if levels.is_empty() || levels.iter().any(|l| !l.is_finite() || *l <= 0.0) {
        return Err(Failure::Usage("levels must be positive numbers".into()));
    }
    let w = parse_f64_list(&a.window)?;
    if w.len() != 4 || !(w[0] < w[1] && w[2] < w[3]) {
        return Err(Failure::Usage("--window needs x0<x1,y0<y1".into()));
    }
    if !(2..=5000).contains(&a.resolution) {
        return Err(Failure::Usage("--resolution must be in 2..=5000".into()));
    }
    let grid = Grid { x0: w[0], x1: w[1], y0: w[2], y1: w[3], nx: a.resolution, ny: a.resolution };
    let pts = szego_contours(&levels, &grid);
    let bytes = match ctx.global.format {
        Format::Csv => {
            let rows: Vec<Vec<String>> =
                pts.iter().map(|p| vec![format!("{:.12}", p.x), format!("{:.12}", p.y), p.level.to_string()]).collect();
            to_csv(&["x", "y", "level"], &rows)
        }
        Format::Json => {
            let items: Vec<Value> = pts.iter().map(|p| json!({"x": p.x, "y": p.y, "level": p.level})).collect();
            to_json(&Value::Array(items))
        }
        Format::Svg => {
            let mut p = Plot::new("|z exp(1-z)| level sets", (w[0], w[1]), (w[2], w[3]));
            p.points(&pts.iter().map(|c| (c.x, c.y)).collect::<Vec<_>>(), "black");
            p.finish()
        }
    };
    Ok(Outcome::ok(bytes))
}
