use clap::Args;
use serde_json::{json, Value};
use taylorstab_core::region::{nondecreasing_runs, o3_bound, o3_holds, refine_to_bits, v_plus};
use taylorstab_core::rootiso::RootBox;
use taylorstab_core::taylorpoly::e_polynomial;

use super::{all_ok, Ctx};
use crate::format::{hi_text, lo_text, parse_n_list, to_csv, to_json};
use crate::svg::Plot;
use crate::{Failure, Format, Outcome, EXIT_CHECK_FAILED, EXIT_OK};

#[derive(Args, Debug)]
pub struct SlicesArgs {
    /// Degrees, e.g. `1..20`.
    #[arg(long, default_value = "1..20")]
    pub n: String,
    /// Check and draw the bound n/e + ln(n)/(2e) + 1.2604 on max V_n^+.
    #[arg(long)]
    pub overlay_o3: bool,
    /// Emit the monotone blocks of max V_n^+ instead of the intervals (CSV).
    #[arg(long)]
    pub runs: bool,
    /// Endpoint refinement, in bits after the binary point.
    #[arg(long, default_value_t = 40)]
    pub bits: u32,
}

struct Column {
    n: u32,
    /// `(lo, hi, degenerate)` per component.
    parts: Vec<(RootBox, RootBox, bool)>,
    o3: Option<(f64, bool)>,
}

impl Column {
    fn max(&self) -> &RootBox {
        &self.parts.last().expect("0 is always in V_n^+").1
    }
}

fn column(ctx: &Ctx, n: u32, bits: u32, o3: bool) -> Result<Column, Failure> {
    let e = e_polynomial(n)?;
    let v = v_plus(n)?;
    let parts = v
        .intervals
        .iter()
        .map(|i| (refine_to_bits(&i.lo, &e, bits), refine_to_bits(&i.hi, &e, bits), i.degenerate))
        .collect();
    let o3 = if o3 {
        let holds = o3_holds(n)?.ok_or_else(|| Failure::Exhausted(format!("O3 bound undecided at n={n}")))?;
        Some((o3_bound(n, ctx.global.precision_bits)?.to_f64(), holds))
    } else {
        None
    };
    Ok(Column { n, parts, o3 })
}

fn runs_of(cols: &[Column]) -> Result<Vec<(usize, u32, u32)>, Failure> {
    let maxes: Vec<RootBox> = cols.iter().map(|c| c.max().clone()).collect();
    let lens = nondecreasing_runs(&maxes)?;
    let mut out = Vec::new();
    let mut i = 0;
    for len in lens {
        out.push((len, cols[i].n, cols[i + len - 1].n));
        i += len;
    }
    Ok(out)
}

pub fn run(ctx: &Ctx, a: &SlicesArgs) -> Result<Outcome, Failure> {
    let ns = parse_n_list(&a.n)?;
    let cols = all_ok(ctx.par_map(&ns, |&n| column(ctx, n, a.bits, a.overlay_o3)))?;
    let violated: Vec<u32> = cols.iter().filter(|c| c.o3.is_some_and(|o| !o.1)).map(|c| c.n).collect();
    if !violated.is_empty() {
        eprintln!("max V_n^+ above the O3 bound for n = {violated:?}");
    }
    let bytes = match ctx.global.format {
        Format::Csv if a.runs => {
            let rows: Vec<Vec<String>> = runs_of(&cols)?
                .iter()
                .enumerate()
                .map(|(k, (len, s, e))| vec![(k + 1).to_string(), s.to_string(), e.to_string(), len.to_string()])
                .collect();
            to_csv(&["block", "start_n", "end_n", "length"], &rows)
        }
        Format::Csv => {
            let mut rows = Vec::new();
            for c in &cols {
                for (k, (lo, hi, deg)) in c.parts.iter().enumerate() {
                    rows.push(vec![c.n.to_string(), (k + 1).to_string(), lo_text(&lo.lo), hi_text(&hi.hi), deg.to_string()]);
                }
            }
            to_csv(&["n", "k", "lo", "hi", "degenerate"], &rows)
        }
        Format::Json => {
            let intervals: Vec<Value> = cols
                .iter()
                .flat_map(|c| {
                    c.parts.iter().enumerate().map(move |(k, (lo, hi, deg))| {
                        json!({"n": c.n, "k": k + 1, "lo": lo_text(&lo.lo), "hi": hi_text(&hi.hi), "degenerate": deg})
                    })
                })
                .collect();
            let maxes: Vec<Value> = cols
                .iter()
                .map(|c| {
                    let mut v = json!({"n": c.n, "lo": lo_text(&c.max().lo), "hi": hi_text(&c.max().hi)});
                    if let Some((b, holds)) = c.o3 {
                        v["o3_bound"] = json!(b);
                        v["o3_holds"] = json!(holds);
                    }
                    v
                })
                .collect();
            let runs: Vec<usize> = runs_of(&cols)?.iter().map(|r| r.0).collect();
            to_json(&json!({"intervals": intervals, "max": maxes, "runs": runs}))
        }
        Format::Svg => {
            let top = cols.iter().map(|c| c.max().hi.to_f64()).fold(1.0, f64::max) * 1.05;
            let nmin = cols.iter().map(|c| c.n).min().unwrap_or(1) as f64;
            let nmax = cols.iter().map(|c| c.n).max().unwrap_or(1) as f64;
            let mut p = Plot::new("V_n^+ components", (nmin - 0.5, nmax + 0.5), (0.0, top));
            for c in &cols {
                let x = c.n as f64;
                for (lo, hi, deg) in &c.parts {
                    let (y0, y1) = (lo.lo.to_f64(), hi.hi.to_f64());
                    let y1 = if *deg { y0 + top * 0.004 } else { y1 };
                    p.rect(x - 0.4, y0, x + 0.4, y1, if *deg { "#c0392b" } else { "#4a6fa5" });
                }
            }
            let maxline: Vec<(f64, f64)> = cols.iter().map(|c| (c.n as f64, c.max().to_f64())).collect();
            p.polyline(&maxline, "black", false);
            if a.overlay_o3 {
                let o3: Vec<(f64, f64)> = cols.iter().filter_map(|c| c.o3.map(|o| (c.n as f64, o.0))).collect();
                p.polyline(&o3, "#d35400", true);
            }
            p.finish()
        }
    };
    Ok(Outcome { bytes, code: if violated.is_empty() { EXIT_OK } else { EXIT_CHECK_FAILED } })
}
