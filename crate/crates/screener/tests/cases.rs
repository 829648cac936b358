use screener::{render_report, run_case, CaseConfig, CaseReport, Format, ModuleSel, Verdict};

fn schema() -> jsonschema::JSONSchema {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../../schema/report-v1.json")).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    jsonschema::JSONSchema::compile(&v).unwrap()
}

fn assert_valid(r: &CaseReport) {
    let v: serde_json::Value = serde_json::from_slice(&render_report(r, Format::Json)).unwrap();
    let s = schema();
    let msgs: Vec<String> = match s.validate(&v) {
        Ok(()) => vec![],
        Err(errs) => errs.map(|e| format!("{} at {}", e, e.instance_path)).collect(),
    };
    assert!(msgs.is_empty(), "report does not match the schema: {msgs:#?}");
}

/// (V_min module, L(G) module, classes) of each surviving structure.
fn structures(r: &CaseReport) -> Vec<(Option<String>, Option<String>, Vec<String>)> {
    let mut out = Vec::new();
    for c in r.survivors() {
        if let Verdict::Survives { structures, .. } = &c.verdict {
            for s in structures {
                out.push((
                    s.vmin.as_ref().map(|x| x.module.clone()),
                    s.lg.as_ref().map(|x| x.module.clone()),
                    s.classes.clone(),
                ));
            }
        }
    }
    out
}

#[test]
fn empty_report() {
    let r = CaseReport::default();
    assert_eq!(render_report(&r, Format::Text), b"empty report\n");
    let back: CaseReport = serde_json::from_slice(&render_report(&r, Format::Json)).unwrap();
    assert_eq!(back, r);
    assert_valid(&r);
}

#[test]
fn alt5_in_f4_fixes_a_line() {
    let r = run_case(&CaseConfig::new(5, "F4", 5, ModuleSel::Vmin)).unwrap();
    assert_eq!(r.candidates.len(), 3);
    assert!(r.candidates.iter().all(|c| matches!(c.verdict, Verdict::FixesLine { .. })));
    assert_valid(&r);
}

#[test]
fn alt6_in_e8_has_no_survivors() {
    let r = run_case(&CaseConfig::new(6, "E8", 5, ModuleSel::Both)).unwrap();
    assert_eq!(r.summary.survives, 0);
    assert!(r.summary.eliminated_by_jordan > 0);
    assert_eq!(r.summary.candidates, r.summary.fixes_line + r.summary.eliminated_by_jordan);
    assert_valid(&r);
}

#[test]
fn alt7_in_e7() {
    let r = run_case(&CaseConfig::new(7, "E7", 5, ModuleSel::Both)).unwrap();
    assert_eq!(
        structures(&r),
        [(Some("10^2⊕10*^2⊕8^2".into()), Some("10⊕10*⊕P(8)^3⊕8".into()), vec!["A4+A2".to_string()])]
    );
    assert_valid(&r);
}

#[test]
fn alt7_in_e8() {
    let r = run_case(&CaseConfig::new(7, "E8", 5, ModuleSel::Both)).unwrap();
    let s = structures(&r);
    assert_eq!(s.len(), 1);
    assert_eq!(s[0].1.as_deref(), Some("35^4⊕15^4⊕10⊕10*⊕8/6⊕6/8"));
    assert_eq!(s[0].2, ["A4+A3"]);
    assert_valid(&r);
}

#[test]
fn reports_are_deterministic() {
    let mut cfg = CaseConfig::new(6, "E7", 5, ModuleSel::Both);
    let a = render_report(&run_case(&cfg).unwrap(), Format::Json);
    let b = render_report(&run_case(&cfg).unwrap(), Format::Json);
    assert_eq!(a, b);
    cfg.flags.seed = 99;
    let c = run_case(&cfg).unwrap();
    let verdicts = |r: &CaseReport| -> Vec<String> {
        r.candidates.iter().map(|c| format!("{:?} {:?} {:?}", c.vmin, c.lg, c.verdict)).collect()
    };
    let first: CaseReport = serde_json::from_slice(&a).unwrap();
    assert_eq!(verdicts(&first), verdicts(&c));
    assert_valid(&c);
}

#[test]
fn flags_are_echoed() {
    let mut cfg = CaseConfig::new(6, "E6", 3, ModuleSel::Vmin);
    cfg.flags.strict_parity = true;
    cfg.flags.collapse_out_orbits = true;
    let r = run_case(&cfg).unwrap();
    assert!(r.config.strict_parity && r.config.collapse_out_orbits);
    assert_eq!(r.config.group, "Alt(6)");
    assert_valid(&r);
}

#[test]
fn schema_rejects_malformed_reports() {
    let r = run_case(&CaseConfig::new(5, "F4", 5, ModuleSel::Vmin)).unwrap();
    let good: serde_json::Value = serde_json::from_slice(&render_report(&r, Format::Json)).unwrap();
    let s = schema();
    assert!(s.is_valid(&good));
    let mut bad = good.clone();
    bad["candidates"][0].as_object_mut().unwrap().remove("anchor");
    assert!(!s.is_valid(&bad));
    let mut bad = good.clone();
    bad["candidates"][0]["verdict"] = "survives".into();
    assert!(!s.is_valid(&bad));
    let mut bad = good;
    bad["summary"]["survives"] = (-1).into();
    assert!(!s.is_valid(&bad));
}
