use clap::{Args, ValueEnum};
use serde_json::{json, Map, Value};
use taylorstab_core::verify::{checks_for, registry, run_check, CheckParams, CheckResult, CheckStatus, Mutation, Profile};

use super::Ctx;
use crate::format::to_json;
use crate::{Failure, Outcome, CODE_VERSION, EXIT_CHECK_FAILED, EXIT_OK};

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = ProfileArg::Quick)]
    pub profile: ProfileArg,
    /// Run only these check ids (comma separated).
    #[arg(long, value_delimiter = ',')]
    pub only: Vec<String>,
    /// Print the registered checks and exit.
    #[arg(long)]
    pub list: bool,
    /// Negative control: inject a known defect.
    #[arg(long, value_enum, hide = true)]
    pub mutate: Option<MutateArg>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ProfileArg {
    Quick,
    Full,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum MutateArg {
    PerturbE7,
}

fn result_json(r: &CheckResult) -> Value {
    let mut detail = Map::new();
    for (k, v) in &r.detail {
        let mut key = k.clone();
        let mut i = 2;
        while detail.contains_key(&key) {
            key = format!("{k}#{i}");
            i += 1;
        }
        detail.insert(key, json!(v));
    }
    json!({"check_id": r.check_id, "status": r.status.as_str(), "detail": detail})
}

/// The report object; contains nothing that depends on scheduling or time.
pub fn report(profile: Profile, results: &[CheckResult]) -> Value {
    let count = |s: CheckStatus| results.iter().filter(|r| r.status == s).count();
    json!({
        "profile": profile.as_str(),
        "code_version": CODE_VERSION,
        "summary": {
            "pass": count(CheckStatus::Pass),
            "fail": count(CheckStatus::Fail),
            "indeterminate": count(CheckStatus::Indeterminate),
            "informational": count(CheckStatus::Informational),
        },
        "checks": results.iter().map(result_json).collect::<Vec<_>>(),
    })
}

pub fn run(ctx: &Ctx, a: &VerifyArgs) -> Result<Outcome, Failure> {
    let profile = match a.profile {
        ProfileArg::Quick => Profile::Quick,
        ProfileArg::Full => Profile::Full,
    };
    if a.list {
        let items: Vec<Value> = registry()
            .iter()
            .map(|c| json!({"check_id": c.id, "statement": c.statement, "full_only": c.full_only}))
            .collect();
        return Ok(Outcome::ok(to_json(&Value::Array(items))));
    }
    let mut params = CheckParams::for_profile(profile);
    params.mutation = a.mutate.map(|MutateArg::PerturbE7| Mutation::PerturbE7);
    let mut ids: Vec<String> = if a.only.is_empty() {
        checks_for(profile).into_iter().map(String::from).collect()
    } else {
        a.only.clone()
    };
    ids.sort();
    ids.dedup();
    for id in &ids {
        if !registry().iter().any(|c| c.id == id) {
            return Err(Failure::Usage(format!("unknown check `{id}`")));
        }
    }
    let results: Vec<CheckResult> = ctx
        .par_map(&ids, |id| run_check(id, &params))
        .into_iter()
        .collect::<Result<_, _>>()?;
    let failed = results.iter().any(|r| r.status == CheckStatus::Fail);
    Ok(Outcome { bytes: to_json(&report(profile, &results)), code: if failed { EXIT_CHECK_FAILED } else { EXIT_OK } })
}
