use clap::{Args, ValueEnum};
use serde_json::{json, Value};
use taylorstab_core::exactnum::{Dyadic, Round};
use taylorstab_core::extremal::{display_round, inner_semidisk_radius, max_modulus, CertStatus, RadiusCertificate, SemiDisk};
use taylorstab_core::verify::table_value;

use super::{all_ok, Ctx};
use crate::format::{cert_from_json, cert_json, exact_decimal, hi_text, lo_text, parse_n_list, status_str, to_csv, to_json};
use crate::{Cache, Failure, Format, Outcome, EXIT_EXHAUSTED, EXIT_OK};

#[derive(Args, Debug)]
pub struct TablesArgs {
    #[arg(long, value_enum, default_value_t = TableMode::Full)]
    pub mode: TableMode,
    /// Degrees, e.g. `1..12` or `3,4,7,8`.
    #[arg(long, default_value = "1..12")]
    pub n: String,
    /// Display decimals; defaults to the digits of the printed tables.
    #[arg(long)]
    pub digits: Option<u32>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableMode {
    Full,
    Left,
    Semidisk,
}

impl TableMode {
    fn as_str(self) -> &'static str {
        match self {
            TableMode::Full => "full",
            TableMode::Left => "left",
            TableMode::Semidisk => "semidisk",
        }
    }
}

/// One table row; `None` when no semi-disk exists.
struct Row {
    n: u32,
    cert: Option<RadiusCertificate>,
}

fn compute(ctx: &Ctx, mode: TableMode, n: u32) -> Result<Row, Failure> {
    let cfg = ctx.bb_config();
    let params = json!({
        "mode": mode.as_str(),
        "n": n,
        "tol": exact_decimal(&cfg.tol),
        "budget": cfg.max_boxes,
    });
    let key = Cache::key("tables", &params, ctx.global.precision_bits);
    if let Some(v) = ctx.cache.as_ref().and_then(|c| c.load(&key)) {
        if v["not_applicable"] == json!(true) {
            return Ok(Row { n, cert: None });
        }
        let status = v["status"].as_str().unwrap_or("");
        let boxes = v["boxes_processed"].as_u64().unwrap_or(0);
        if let Some(c) = cert_from_json(&v["certificate"], status, boxes) {
            return Ok(Row { n, cert: Some(c) });
        }
    }
    let cert = match mode {
        TableMode::Full => Some(max_modulus(n, false, &cfg)?),
        TableMode::Left => Some(max_modulus(n, true, &cfg)?),
        TableMode::Semidisk => match inner_semidisk_radius(n, &cfg)? {
            SemiDisk::NotApplicable => None,
            SemiDisk::Radius(c) => Some(c),
        },
    };
    if let Some(cache) = &ctx.cache {
        let v = match &cert {
            None => json!({"not_applicable": true}),
            Some(c) => json!({
                "certificate": cert_json(c),
                "status": status_str(c.status),
                "boxes_processed": c.boxes_processed,
            }),
        };
        cache.store(&key, &v)?;
    }
    Ok(Row { n, cert })
}

fn digits_for(mode: TableMode, n: u32, over: Option<u32>) -> u32 {
    over.unwrap_or_else(|| {
        let printed = match mode {
            TableMode::Full => table_value(false, n),
            TableMode::Left => table_value(true, n),
            TableMode::Semidisk => None,
        };
        printed.and_then(|s| s.split_once('.')).map_or(3, |(_, f)| f.len() as u32)
    })
}

/// Display columns: rounded up from `hi` for the radius tables, rounded down
/// from `lo` for the semi-disk table, plus whether both endpoints agree.
fn display(mode: TableMode, c: &RadiusCertificate, digits: u32) -> (String, Option<String>, bool) {
    match mode {
        TableMode::Full | TableMode::Left => {
            let d = display_round(&c.hi, digits, true);
            let same = display_round(&c.lo, digits, true) == d;
            (d, None, same)
        }
        TableMode::Semidisk => {
            let nn = Dyadic::from_i64(c.n as i64);
            let d = display_round(&c.lo, digits, false);
            let nd = display_round(&c.lo.mul(&nn), digits, false);
            let same = display_round(&c.hi, digits, false) == d && display_round(&c.hi.mul(&nn), digits, false) == nd;
            (d, Some(nd), same)
        }
    }
}

pub fn run(ctx: &Ctx, a: &TablesArgs) -> Result<Outcome, Failure> {
    let ns = parse_n_list(&a.n)?;
    let rows = all_ok(ctx.par_map(&ns, |&n| compute(ctx, a.mode, n)))?;
    let exhausted = rows.iter().any(|r| r.cert.as_ref().is_some_and(|c| c.status != CertStatus::Complete));
    let bytes = match ctx.global.format {
        Format::Csv => {
            let semi = a.mode == TableMode::Semidisk;
            let header: Vec<&str> = if semi {
                vec!["n", "mode", "lo", "hi", "rho_display", "n_rho_display", "display_certain", "status"]
            } else {
                vec!["n", "mode", "lo", "hi", "display", "display_certain", "status"]
            };
            let recs: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    let mut rec = vec![r.n.to_string(), a.mode.as_str().to_string()];
                    match &r.cert {
                        None => {
                            rec.extend(["".into(), "".into(), "".into(), "".into(), "".into(), "not-applicable".into()]);
                        }
                        Some(c) => {
                            let (d, nd, same) = display(a.mode, c, digits_for(a.mode, r.n, a.digits));
                            rec.push(lo_text(&c.lo));
                            rec.push(hi_text(&c.hi));
                            rec.push(d);
                            if let Some(nd) = nd {
                                rec.push(nd);
                            }
                            rec.push(same.to_string());
                            rec.push(status_str(c.status).into());
                        }
                    }
                    rec
                })
                .collect();
            to_csv(&header, &recs)
        }
        Format::Json => {
            let items: Vec<Value> = rows
                .iter()
                .map(|r| match &r.cert {
                    None => json!({"n": r.n, "mode": a.mode.as_str(), "status": "not-applicable"}),
                    Some(c) => {
                        let (d, nd, same) = display(a.mode, c, digits_for(a.mode, r.n, a.digits));
                        let mut v = cert_json(c);
                        v["display"] = json!(d);
                        if let Some(nd) = nd {
                            v["n_rho_display"] = json!(nd);
                        }
                        v["display_certain"] = json!(same);
                        v["status"] = json!(status_str(c.status));
                        v["boxes_processed"] = json!(c.boxes_processed);
                        v
                    }
                })
                .collect();
            to_json(&Value::Array(items))
        }
        Format::Svg => return Err(Failure::Usage("tables has no SVG output".into())),
    };
    for r in &rows {
        if let Some(c) = r.cert.as_ref().filter(|c| c.status != CertStatus::Complete) {
            eprintln!("n={}: {} after {} boxes, gap [{}, {}]", r.n, status_str(c.status), c.boxes_processed,
                c.lo.to_decimal(9, Round::Floor), c.hi.to_decimal(9, Round::Ceil));
        }
    }
    Ok(Outcome { bytes, code: if exhausted { EXIT_EXHAUSTED } else { EXIT_OK } })
}
