use tsscpp::constterm::{constant_term, CtRequest};
use tsscpp::exactmath::{SparsePoly, Var};
use tsscpp::genfun::{brute_side, gf_pfaffian, GfRequest, WeightKind};
use tsscpp::ppart::{brute_gf, enumerate_cspp, enumerate_tspp, Statistic, WeightSpec};
use tsscpp::refnum::{asm_number, asm_poly, avs_number, card_cspp};
use tsscpp::verify::{self, CaseKind, Suite, VerifyOptions};

fn p(s: &str) -> SparsePoly {
    s.parse().unwrap()
}

#[test]
fn reference_numbers() {
    let asm: Vec<String> = (1..=6).map(|n| asm_number(n).to_string()).collect();
    assert_eq!(asm, ["1", "2", "7", "42", "429", "7436"]);
    let avs: Vec<String> = [1, 3, 5, 7, 9].iter().map(|&s| avs_number(s).unwrap().to_string()).collect();
    assert_eq!(avs, ["1", "1", "3", "26", "646"]);
    assert_eq!(card_cspp(2, 2).to_string(), "25");
    assert_eq!(asm_poly(3).unwrap(), p("2 + 3*t + 2*t^2"));
}

#[test]
fn three_routes_for_every_kind_at_two_one() {
    let all_kinds = WeightKind::ALL.iter().copied().chain((0..3).map(WeightKind::Mt));
    for kind in all_kinds {
        let req = GfRequest::new(kind, 2, 1).unwrap();
        let pf = gf_pfaffian(&req).unwrap();
        let r = *kind.r_values(2, 1).last().unwrap();
        assert_eq!(brute_side(kind, 2, 1, r).unwrap(), pf, "{kind}");
        if !kind.is_signed() {
            assert_eq!(constant_term(&CtRequest::for_kind(kind, 2, 1).unwrap()).unwrap(), pf, "{kind}");
        }
    }
}

#[test]
fn refined_tspp_and_cspp_agree_with_asm() {
    for n in 1..=4 {
        let ts = enumerate_tspp(n, 0).unwrap();
        let cs = enumerate_cspp(n, 0).unwrap();
        let u = brute_gf(&ts, &WeightSpec::new().var(Statistic::U(1), Var::T).unwrap()).unwrap();
        let ubar = brute_gf(&cs, &WeightSpec::new().var(Statistic::UBar(1), Var::T).unwrap()).unwrap();
        assert_eq!(u, asm_poly(n).unwrap());
        assert_eq!(ubar, asm_poly(n).unwrap());
    }
}

#[test]
fn vr_six_is_twenty_six_thirds_of_five() {
    let vr = |n| brute_gf(&enumerate_cspp(n, 0).unwrap(), &WeightSpec::new().var(Statistic::VR, Var::T).unwrap()).unwrap();
    let (p5, p6) = (vr(5), vr(6));
    assert_eq!(p5, p("3(3t^4+18t^3+44t^2+52t+26)"));
    assert_eq!(&p6 * &p("3"), &p("26(t+1)") * &p5);
    assert_ne!(p6, &p("26(t+1)") * &p5);
}

#[test]
fn theorem_cases_all_match_at_small_sizes() {
    let report = verify::run(&Suite::ALL, &VerifyOptions { max_nm: Some(3), ..Default::default() });
    let bad: Vec<_> = report.cases.iter().filter(|c| c.kind == CaseKind::Theorem && !c.matched).collect();
    assert!(bad.is_empty(), "{bad:#?}");
    assert!(report.theorems_ok());
}

#[test]
fn reports_are_deterministic() {
    let opts = VerifyOptions { max_nm: Some(3), ..Default::default() };
    let a = serde_json::to_string(&verify::run(&[Suite::Bijections, Suite::Genfun], &opts)).unwrap();
    let b = serde_json::to_string(&verify::run(&[Suite::Bijections, Suite::Genfun], &opts)).unwrap();
    assert_eq!(a, b);
}

#[test]
fn stated_moves_fail_where_parts_and_profile_differ() {
    let report = verify::run(&[Suite::Statistics], &VerifyOptions { max_nm: Some(3), ..Default::default() });
    let printed = report.cases.iter().find(|c| c.case == "tsscpp-moves-as-printed" && c.params["n"] == 1 && c.params["m"] == 2).unwrap();
    assert_eq!((printed.lhs.as_str(), printed.rhs.as_str()), ("3", "4"));
}
