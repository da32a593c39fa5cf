use taylorstab_core::verify::{checks_for, run_all, run_check, CheckParams, CheckStatus, Mutation, Profile};
use taylorstab_core::Error;

#[test]
fn quick_profile_passes_and_is_deterministic() {
    let a = run_all(Profile::Quick);
    let b = run_all(Profile::Quick);
    assert_eq!(a, b);
    let ids: Vec<_> = a.iter().map(|r| r.check_id.as_str()).collect();
    assert_eq!(ids, checks_for(Profile::Quick));
    for r in &a {
        assert!(matches!(r.status, CheckStatus::Pass | CheckStatus::Informational), "{} {:?}", r.check_id, r.detail);
    }
}

#[test]
fn mutation_is_caught() {
    let mut p = CheckParams::for_profile(Profile::Quick);
    p.mutation = Some(Mutation::PerturbE7);
    assert_eq!(run_check("lemma-5.1", &p).unwrap().status, CheckStatus::Fail);
    assert_eq!(run_check("cor-5.2", &p).unwrap().status, CheckStatus::Pass);
}

#[test]
fn unknown_check_is_an_error() {
    let p = CheckParams::for_profile(Profile::Quick);
    assert!(matches!(run_check("no-such-check", &p), Err(Error::UnknownCheck(_))));
}
