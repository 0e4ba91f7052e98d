use std::path::PathBuf;

use assert_cmd::Command;
use predicates::prelude::*;

fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures")
}

fn diagram(name: &str) -> String {
    fixtures().join("diagrams").join(format!("{name}.mkd")).display().to_string()
}

fn cmd() -> Command {
    Command::cargo_bin("skeinmagma").unwrap()
}

#[test]
fn eval_prints_canonical_values() {
    cmd().args(["eval", "--magma", "mkb-poly", &diagram("2_1m")]).assert().success().stdout("-A^3*x - A^-3*y\n");
    cmd().args(["eval", "--magma", "kb-poly", &diagram("O3")]).assert().success().stdout("A^4 + 2 + A^-4\n");
    cmd().args(["eval", "--magma", "kb-poly", &diagram("3_1")]).assert().success().stdout("-A^5 - A^-3 + A^-7\n");
}

#[test]
fn eval_output_is_stable_under_relabelling() {
    let dir = tempfile::tempdir().unwrap();
    let text = std::fs::read_to_string(diagram("6_1_01")).unwrap();
    let d = skeinmagma::MarkedDiagram::parse(&text).unwrap();
    let p = dir.path().join("canon.mkd");
    std::fs::write(&p, d.canonical().to_mkd()).unwrap();
    let a = cmd().args(["eval", "--magma", "mkb-lee", &diagram("6_1_01")]).output().unwrap();
    let b = cmd().args(["eval", "--magma", "mkb-lee", p.to_str().unwrap()]).output().unwrap();
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn machine_record() {
    cmd()
        .args(["eval", "--magma", "mkb-quotient", "--normalize", "rho-writhe", "--format", "machine", "--seed", "1"])
        .arg(diagram("6_1_01"))
        .assert()
        .success()
        .stdout(predicate::str::contains("magma=mkb-quotient\nnormalizers=rho-writhe\nc=4\nm=2\nw=0\norders=pass\n"));
}

#[test]
fn custom_magma_file() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("kb.magma");
    std::fs::write(&p, "name my-kb\nvar A laurent\nstar A ; A^-1 ; 0\nseq geometric -A^2 - A^-2\n").unwrap();
    cmd().args(["eval", "--magma", p.to_str().unwrap(), &diagram("O3")]).assert().success().stdout("A^4 + 2 + A^-4\n");
}

#[test]
fn usage_and_input_errors_exit_2() {
    cmd().args(["eval", "--magma", "kb-poly", "missing.mkd"]).assert().code(2);
    cmd().args(["eval", "--magma", "no-such-magma", &diagram("3_1")]).assert().code(2);
    cmd().args(["eval", &diagram("3_1")]).assert().code(2);
    cmd().args(["frobnicate"]).assert().code(2);
    // Markers without a bullet, and writhe without an orientation.
    cmd().args(["eval", "--magma", "kb-poly", &diagram("2_1m")]).assert().code(2);
    cmd().args(["eval", "--magma", "mkb-poly", "--normalize", "rho-writhe", &diagram("2_1m")]).assert().code(2);
    cmd().args(["eval", "--magma", "kb-poly", "--normalize", "phi-marker", &diagram("3_1")]).assert().code(2);
}

#[test]
fn validate_magma_flags() {
    cmd()
        .args(["validate-magma", "--magma", "mkb-phi", "--format", "machine"])
        .assert()
        .success()
        .stdout(predicate::str::contains("period2=pass\nmixed_entropic=pass\nbullet_absorbing=fail\n"));
    cmd()
        .args(["validate-magma", "--magma", "mkb-quotient", "--format", "machine"])
        .assert()
        .success()
        .stdout(predicate::str::contains("bullet_absorbing=pass").and(predicate::str::contains("gamma8=pass")));
    cmd().args(["validate-magma", "--magma", "kb-affine"]).assert().success();
}

#[test]
fn validate_magma_failure_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("bad.magma");
    std::fs::write(&p, "name bad\nvar A laurent\nstar A ; A ; 0\nseq geometric -A^2 - A^-2\n").unwrap();
    cmd().args(["validate-magma", "--magma", p.to_str().unwrap()]).assert().code(1);
}

#[test]
fn check_moves_patterns() {
    let dir = fixtures().join("moves");
    let dir = dir.to_str().unwrap();
    let out = cmd()
        .args(["check-moves", "--fixtures", dir, "--magma", "mkb-quotient", "--normalize", "rho-writhe", "--format", "machine"])
        .assert()
        .success()
        .get_output()
        .stdout
        .clone();
    let out = String::from_utf8(out).unwrap();
    assert!(!out.contains("result=fail") && !out.contains("expected-fail") && out.contains("move=G8"));
    let out = cmd()
        .args(["check-moves", "--fixtures", dir, "--magma", "mkb-poly", "--format", "machine"])
        .assert()
        .success()
        .get_output()
        .stdout
        .clone();
    let out = String::from_utf8(out).unwrap();
    assert!(out.contains("result=expected-fail") && !out.contains("result=fail"));
}

#[test]
fn resolutions_and_admissibility() {
    cmd()
        .args(["resolutions", &diagram("2_1m")])
        .assert()
        .success()
        .stdout(predicate::str::contains("# L+").and(predicate::str::contains("M ").not()));
    let dir = tempfile::tempdir().unwrap();
    let prefix = dir.path().join("spun");
    cmd().args(["resolutions", &diagram("spun_trefoil"), "--out", prefix.to_str().unwrap()]).assert().success();
    assert!(dir.path().join("spun.plus.mkd").exists() && dir.path().join("spun.minus.mkd").exists());
    for name in ["0_1", "2_1m", "6_1_01", "spun_trefoil"] {
        cmd().args(["admissible", &diagram(name)]).assert().success().stdout("admissible\n");
    }
    cmd().args(["admissible", &diagram("3_1")]).assert().success().stdout("unknown\n");
}

#[test]
fn simplify_writes_reduced_diagram() {
    let dir = tempfile::tempdir().unwrap();
    let kinked = dir.path().join("k.mkd");
    std::fs::write(&kinked, "X 1 1 2 2\n").unwrap();
    cmd().args(["simplify", kinked.to_str().unwrap()]).assert().success().stdout("O 1\n");
    let out = dir.path().join("s.mkd");
    cmd().args(["simplify", &diagram("3_1"), "--seed", "5", "--out", out.to_str().unwrap()]).assert().success();
    assert_eq!(std::fs::read_to_string(out).unwrap().lines().filter(|l| l.starts_with('X')).count(), 3);
}
