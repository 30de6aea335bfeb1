use std::fs;
use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn docs() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../docs/examples")
}

fn kstab(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_kstab")).args(args).current_dir(docs()).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

fn body(stdout: &str) -> Value {
    let v: Value = serde_json::from_str(stdout).unwrap();
    assert!(v["timing"]["seconds"].is_number());
    v["body"].clone()
}

/// Runs a documented example and compares the report body with its golden
/// file; set `KSTAB_UPDATE_GOLDEN=1` to rewrite the golden files.
fn golden(name: &str, args: &[&str], expected_exit: i32) {
    let (code, stdout, stderr) = kstab(args);
    assert_eq!(code, expected_exit, "{name}: {stderr}");
    let actual = body(&stdout);
    let path = docs().join("golden").join(format!("{name}.json"));
    if std::env::var_os("KSTAB_UPDATE_GOLDEN").is_some() {
        fs::write(&path, serde_json::to_string_pretty(&actual).unwrap() + "\n").unwrap();
    }
    let expected: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(actual, expected, "{name} differs from {}", path.display());
}

#[test]
fn df_of_a_product() {
    golden("p1-product.df", &["df", "p1-product.json"], 0);
    let (_, stdout, _) = kstab(&["df", "p1-product.json"]);
    let b = body(&stdout);
    assert_eq!(b["df"], "0");
    assert_eq!(b["norm_sq"], "1/12");
}

#[test]
fn opposite_products() {
    golden("p1-opposite-products.pair", &["pair", "p1-opposite-products.json"], 0);
    golden("p1-opposite-products.distance", &["distance", "p1-opposite-products.json"], 0);
    let (_, stdout, _) = kstab(&["distance", "p1-opposite-products.json"]);
    assert_eq!(body(&stdout)["angle"]["cosine"], "-1");
}

#[test]
fn pairing_with_the_trivial_filtration() {
    golden("p1-versus-trivial.pair", &["pair", "p1-versus-trivial.json"], 0);
    let (_, stdout, _) = kstab(&["pair", "p1-versus-trivial.json"]);
    assert_eq!(body(&stdout)["angle"]["zero_norm"], true);
}

#[test]
fn appendix_filtration() {
    golden("appendix.df", &["df", "appendix.json"], 0);
    golden("appendix.project", &["project", "appendix.json"], 0);
    golden("appendix.specialize", &["specialize", "appendix.json", "--kmax", "10"], 3);
}

#[test]
fn line_and_plane_examples() {
    golden("line-c.specialize", &["specialize", "line-c.json", "--kmax", "12"], 0);
    golden("plane-product.project", &["project", "plane-product.json"], 0);
    golden("conic.df", &["df", "conic.json"], 0);
    golden("conic.project", &["project", "conic.json"], 0);
    let (_, stdout, _) = kstab(&["project", "plane-product.json"]);
    assert_eq!(body(&stdout)["projection"]["verdict"], "degenerate");
}

#[test]
fn appendix_command() {
    golden("appendix-claims", &["appendix"], 0);
    let (code, stdout, _) = kstab(&["appendix", "--max-degree", "3", "--kmax", "4", "--jmax", "4"]);
    assert_eq!(code, 0);
    assert_eq!(body(&stdout)["pass"], true);
}

#[test]
fn reports_are_deterministic() {
    for args in [&["df", "appendix.json"][..], &["distance", "p1-opposite-products.json"], &["appendix"]] {
        let (_, a, _) = kstab(args);
        let (_, b, _) = kstab(args);
        assert_eq!(serde_json::to_string(&body(&a)).unwrap(), serde_json::to_string(&body(&b)).unwrap());
    }
}

#[test]
fn text_reports() {
    let (code, stdout, _) = kstab(&["df", "p1-product.json", "--format", "text"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("norm_sq: 1/12 (≈ 0.083333)"));
    assert!(stdout.lines().last().unwrap().starts_with("timing: "));
}

#[test]
fn two_job_files_pair_like_one() {
    let dir = std::env::temp_dir().join(format!("kstab-golden-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let write = |name: &str, u: &str| {
        let p = dir.join(name);
        fs::write(&p, format!(r#"{{ "ring": {{ "variables": ["x", "y"] }}, "filtration": {{ "product": {u} }} }}"#)).unwrap();
        p
    };
    let (a, b) = (write("a.json", "[0, -1]"), write("b.json", "[-1, 0]"));
    let (code, stdout, _) = kstab(&["pair", a.to_str().unwrap(), b.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(body(&stdout)["angle"]["cosine"], "-1");
    fs::remove_dir_all(dir).unwrap();
}

#[test]
fn validation_errors() {
    let dir = std::env::temp_dir().join(format!("kstab-errors-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let write = |name: &str, text: &str| {
        let p = dir.join(name);
        fs::write(&p, text).unwrap();
        p.to_str().unwrap().to_string()
    };
    let broken = write("broken.json", "{\n  \"ring\": { \"variables\": [\"x\", \"y\"] },\n  \"filtration\": [\n");
    let (code, _, stderr) = kstab(&["df", &broken]);
    assert_eq!(code, 2);
    assert!(stderr.contains("line"), "{stderr}");

    let unknown = write(
        "unknown.json",
        r#"{ "ring": { "variables": ["x", "y"] }, "filtration": { "generators": [ { "t": 1, "element": "x + w" } ] } }"#,
    );
    let (code, _, stderr) = kstab(&["df", &unknown]);
    assert_eq!(code, 2);
    assert!(stderr.contains("filtrations[0].generators[0].element"), "{stderr}");

    let plane = write("plane.json", r#"{ "ring": { "variables": ["x", "y", "z"] }, "filtration": { "product": [0, 0, -1] } }"#);
    let line = docs().join("p1-product.json");
    let (code, _, stderr) = kstab(&["pair", &plane, line.to_str().unwrap()]);
    assert_eq!(code, 2, "{stderr}");

    let (code, _, stderr) = kstab(&["project", "p1-product.json"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("torus"));

    let (code, _, _) = kstab(&["specialize", "p1-product.json"]);
    assert_eq!(code, 2);

    let (code, _, stderr) = kstab(&["appendix", "--kmax", "2"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("out of bounds"), "{stderr}");

    let (code, _, _) = kstab(&["df", "does-not-exist.json"]);
    assert_eq!(code, 1);
    fs::remove_dir_all(dir).unwrap();
}
