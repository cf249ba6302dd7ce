//! The shipped spec files describe exactly the preset models, the CLI
//! exit codes behave as documented, and the JSON report is stable.

use std::path::{Path, PathBuf};
use std::process::Command;

use bibracket::presets::{s1_x_sn1, sphere_products, ModelData};
use bibracket::specfile::{parse_spec_file, SpecFile};

fn spec_path(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("specs").join(name)
}

/// Structural equality between a parsed spec and a preset: same
/// generators, same bracket table, same Hopf values on generators, same
/// moment element, same reduction presentation.
fn assert_matches(spec: &SpecFile, preset: &ModelData) {
    use bibracket::ncpoly::NCPoly;

    let sg: Vec<_> = spec.alg.gens().collect();
    let pg: Vec<_> = preset.alg.gens().collect();
    assert_eq!(sg.len(), pg.len());
    for (&a, &b) in sg.iter().zip(&pg) {
        assert_eq!(spec.alg.decl(a).name, preset.alg.decl(b).name);
        assert_eq!(spec.alg.decl(a).degree, preset.alg.decl(b).degree);
        assert_eq!(spec.alg.decl(a).invertible, preset.alg.decl(b).invertible);
    }

    let sbb = spec.bibracket.as_ref().unwrap();
    assert_eq!(sbb.degree_d(), preset.bibracket.degree_d());
    for (&a, &pa) in sg.iter().zip(&pg) {
        for (&b, &pb) in sg.iter().zip(&pg) {
            assert_eq!(
                sbb.value(a, b),
                preset.bibracket.value(pa, pb),
                "table entry ({}, {})",
                spec.alg.decl(a).name,
                spec.alg.decl(b).name
            );
        }
    }

    let sh = spec.hopf.as_ref().unwrap();
    for (&g, &p) in sg.iter().zip(&pg) {
        let sx = NCPoly::gen(&spec.alg, g);
        let px = NCPoly::gen(&preset.alg, p);
        assert_eq!(
            sh.coproduct(&spec.alg, &sx).unwrap(),
            preset.hopf.coproduct(&preset.alg, &px).unwrap()
        );
        assert_eq!(
            sh.counit(&spec.alg, &sx),
            preset.hopf.counit(&preset.alg, &px)
        );
        assert_eq!(
            sh.antipode(&spec.alg, &sx).unwrap(),
            preset.hopf.antipode(&preset.alg, &px).unwrap()
        );
    }

    assert_eq!(spec.moment.as_ref().unwrap().mu, preset.moment.mu);

    match (&spec.reduction, &preset.reduction) {
        (None, None) => {}
        (Some(sq), Some(pq)) => {
            assert_eq!(sq.target.len(), pq.target.len());
            for i in 0..sq.target.len() {
                assert_eq!(sq.target.gen(i), pq.target.gen(i));
            }
            for (&g, &p) in sg.iter().zip(&pg) {
                assert_eq!(sq.image_of(g), pq.image_of(p));
            }
        }
        _ => panic!("reduction present on one side only"),
    }
}

#[test]
fn shipped_specs_match_presets() {
    for (file, preset) in [
        ("sphere-products-g1.spec", sphere_products(&[(2, 3)])),
        ("sphere-products-g2.spec", sphere_products(&[(2, 3), (3, 2)])),
        ("s1-x-sn1-n3.spec", s1_x_sn1(3)),
        ("s1-x-sn1-n4.spec", s1_x_sn1(4)),
        ("s1-x-sn1-n5.spec", s1_x_sn1(5)),
    ] {
        let spec = parse_spec_file(&spec_path(file)).unwrap_or_else(|e| panic!("{file}: {e}"));
        assert_matches(&spec, &preset);
    }
}

fn run_cli(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_bibracket"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

#[test]
fn cli_passes_on_shipped_specs() {
    let path = spec_path("s1-x-sn1-n3.spec");
    let (code, stdout, _) = run_cli(&["all", path.to_str().unwrap(), "--maxlen", "2", "--N", "1"]);
    assert_eq!(code, 0, "{stdout}");
    assert!(stdout.contains("ALL CHECKS PASSED"));
    assert!(stdout.contains("reduce/table"));
}

#[test]
fn cli_fails_with_witness_on_broken_table() {
    // flip the sign of the (y,y) entry: antisymmetry breaks
    let good = std::fs::read_to_string(spec_path("s1-x-sn1-n3.spec")).unwrap();
    let bad = good.replace(
        "entry y y = 1 (x) y + (-1) * y (x) 1",
        "entry y y = 1 (x) y + y (x) 1",
    );
    assert_ne!(good, bad);
    let dir = std::env::temp_dir();
    let path = dir.join("broken-yy.spec");
    std::fs::write(&path, bad).unwrap();

    let (code, stdout, _) = run_cli(&[
        "check-bibracket",
        path.to_str().unwrap(),
        "--maxlen",
        "2",
    ]);
    assert_eq!(code, 1, "{stdout}");
    assert!(stdout.contains("FAIL"), "{stdout}");
    assert!(stdout.contains("inputs:"), "witness missing:\n{stdout}");
}

#[test]
fn cli_rejects_missing_sections_and_files() {
    let path = spec_path("s1-x-sn1-n3.spec");
    let (code, _, stderr) = run_cli(&["check-lie", path.to_str().unwrap()]);
    assert_eq!(code, 2, "{stderr}");
    assert!(stderr.contains("[lie]"), "{stderr}");

    let (code, _, _) = run_cli(&["check-bibracket", "/nonexistent/x.spec"]);
    assert_eq!(code, 2);

    let dir = std::env::temp_dir();
    let path = dir.join("unknown-key.spec");
    std::fs::write(&path, "[algebra]\nobjekt pt\n").unwrap();
    let (code, _, stderr) = run_cli(&["check-bibracket", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(stderr.contains("line 2"), "{stderr}");
}

#[test]
fn json_report_is_stable() {
    let path = spec_path("sphere-products-g1.spec");
    let args = [
        "check-moment",
        path.to_str().unwrap(),
        "--maxlen",
        "3",
        "--json",
    ];
    let (code1, out1, _) = run_cli(&args);
    let (code2, out2, _) = run_cli(&args);
    assert_eq!(code1, 0);
    assert_eq!(code2, 0);
    assert_eq!(out1, out2, "JSON output must be deterministic");

    let v: serde_json::Value = serde_json::from_str(&out1).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["command"], "check-moment");
    assert_eq!(v["spec"], "sphere-products-g1.spec");
    assert_eq!(v["maxlen"], 3);
    assert_eq!(v["pass"], true);
    assert_eq!(v["spec_digest"].as_str().unwrap().len(), 64);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| {
        c["pass"] == true && c["name"].as_str().unwrap().starts_with("moment/")
    }));

    // the digest is the sha256 of the file bytes
    let spec = parse_spec_file(&path).unwrap();
    assert_eq!(v["spec_digest"], spec.digest.as_str());
}
