use ava_core::error::Error;
use ava_core::harness::{
    render, CheckSet, Format, Outcome, Status, Suite, SuiteBody, SuiteConfig, SuiteRegistry,
};

const BUILTIN: [&str; 11] = [
    "lemma3",
    "theorem2",
    "lemma4_5",
    "theorem3",
    "theorem4",
    "prop4",
    "prop5",
    "prop6",
    "lemmas8_12",
    "prop7_families",
    "classification_table",
];

fn small() -> SuiteConfig {
    SuiteConfig { samples: 4, ..SuiteConfig::default() }
}

struct Toy {
    positive: bool,
}

impl Suite for Toy {
    fn id(&self) -> &'static str {
        "toy"
    }

    fn claim(&self) -> &'static str {
        "toy claim"
    }

    fn formulas(&self) -> &'static [&'static str] {
        &["1 + 1 = 2"]
    }

    fn build(&self, _cfg: &SuiteConfig) -> SuiteBody {
        let mut checks = CheckSet::new();
        let positive = self.positive;
        checks.holds("b/sum", move || Ok(Outcome::exact(positive)));
        checks.refutes("a/refuted_with_witness", || Ok(Outcome::exact(false).with_witness([1, 2])));
        checks.refutes("c/refuted_without_witness", || Ok(Outcome::exact(false)));
        checks.holds("d/error", || Err(Error::NoLeftUnit));
        SuiteBody { checks, ..SuiteBody::default() }
    }
}

#[test]
fn builtin_catalog_is_registered_in_order() {
    assert_eq!(SuiteRegistry::builtin().ids(), BUILTIN);
}

#[test]
fn unknown_suite_is_reported() {
    let r = SuiteRegistry::builtin();
    assert!(matches!(r.get("lemma99"), Err(Error::UnknownSuite(_))));
    assert!(matches!(r.run_selection("lemma99", &small()), Err(Error::UnknownSuite(_))));
}

#[test]
fn custom_suites_plug_in_and_replace_by_id() {
    let mut r = SuiteRegistry::empty();
    r.register(Box::new(Toy { positive: false }));
    r.register(Box::new(Toy { positive: true }));
    assert_eq!(r.ids(), ["toy"]);
    let result = r.run("toy", &small()).unwrap();
    let ids: Vec<&str> = result.checks.iter().map(|c| c.id.as_str()).collect();
    assert_eq!(ids, ["a/refuted_with_witness", "b/sum", "c/refuted_without_witness", "d/error"]);
    assert_eq!(result.check("a/refuted_with_witness").unwrap().status, Status::Pass);
    assert_eq!(result.check("b/sum").unwrap().status, Status::Pass);
    assert_eq!(result.check("c/refuted_without_witness").unwrap().status, Status::Inconclusive);
    let err = result.check("d/error").unwrap();
    assert_eq!(err.status, Status::Fail);
    assert!(err.detail.as_deref().unwrap().starts_with("error:"));
    assert!(!result.passed());
}

#[test]
fn formats_parse() {
    assert_eq!("json".parse::<Format>().unwrap(), Format::Json);
    assert_eq!("csv".parse::<Format>().unwrap(), Format::Csv);
    assert_eq!("markdown".parse::<Format>().unwrap(), Format::Md);
    assert!(matches!("xml".parse::<Format>(), Err(Error::Parse(_))));
}

#[test]
fn isometry_suite_passes_and_renders() {
    let report = SuiteRegistry::builtin().run_selection("lemma3", &small()).unwrap();
    assert!(report.passed());
    let json: serde_json::Value = serde_json::from_str(&render(&report, Format::Json).unwrap()).unwrap();
    assert_eq!(json["suites"][0]["suite"], "lemma3");
    assert!(json["suites"][0].get("runtime_ms").is_none());
    assert!(json["errata"].as_array().unwrap().iter().any(|e| e["id"] == "sigma_square_formula"));
    let csv = render(&report, Format::Csv).unwrap();
    assert!(csv.starts_with("suite,check,expected,holds,status,method,witness,detail,runtime_ms"));
    let md = render(&report, Format::Md).unwrap();
    assert!(md.contains("## lemma3"));
}

#[test]
fn reports_are_reproducible() {
    let r = SuiteRegistry::builtin();
    let cfg = SuiteConfig { seed: 3, ..small() };
    let a = render(&r.run_selection("lemmas8_12", &cfg).unwrap(), Format::Json).unwrap();
    let b = render(&r.run_selection("lemmas8_12", &cfg).unwrap(), Format::Json).unwrap();
    assert_eq!(a, b);
    let other = render(&r.run_selection("lemmas8_12", &SuiteConfig { seed: 4, ..cfg }).unwrap(), Format::Json).unwrap();
    assert_ne!(a, other);
}

#[test]
fn timings_are_opt_in() {
    let cfg = SuiteConfig { timings: true, ..small() };
    let result = SuiteRegistry::builtin().run("lemma3", &cfg).unwrap();
    assert!(result.runtime_ms.is_some());
    assert!(result.checks.iter().all(|c| c.runtime_ms.is_some()));
}

#[test]
fn lemma_suite_has_witnesses_for_every_refutation() {
    let result = SuiteRegistry::builtin().run("lemmas8_12", &small()).unwrap();
    assert!(result.passed(), "{:?}", result.summary);
    assert_eq!(result.summary.inconclusive, 0);
    for c in result.checks.iter().filter(|c| c.id.contains("only_if") || c.id.starts_with("twisted_improper_psi")) {
        assert!(c.witness.is_some(), "{} has no witness", c.id);
    }
}

#[test]
fn every_suite_passes_with_few_samples() {
    let report = SuiteRegistry::builtin().run_selection("all", &small()).unwrap();
    for s in &report.suites {
        let failing: Vec<&str> =
            s.checks.iter().filter(|c| c.status != Status::Pass).map(|c| c.id.as_str()).collect();
        assert!(failing.is_empty(), "{}: {failing:?}", s.suite);
    }
    assert!(report.traceability.iter().all(|t| !t.suites.is_empty()));
}
