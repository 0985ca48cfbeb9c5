use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::sync::atomic::{AtomicUsize, Ordering};

use serde_json::Value;

fn corpus(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus").join(name)
}

fn hopfx<I, S>(args: I) -> Output
where
    I: IntoIterator<Item = S>,
    S: AsRef<std::ffi::OsStr>,
{
    Command::new(env!("CARGO_BIN_EXE_hopfx")).args(args).output().expect("hopfx runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn json_reports(out: &Output) -> Vec<Value> {
    serde_json::Deserializer::from_str(&stdout(out)).into_iter::<Value>().map(|v| v.expect("report JSON")).collect()
}

fn entry<'a>(report: &'a Value, axiom: &str) -> &'a Value {
    report["entries"].as_array().unwrap().iter().find(|e| e["axiom"] == axiom).unwrap_or_else(|| panic!("no {axiom}"))
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn checks_on_the_corpus() {
    for (kind, file) in [
        ("hopf", "k_s3.json"),
        ("square", "normal_pair_v4.json"),
        ("xmod", "conj_a3_s3.json"),
        ("square", "unit_c2.json"),
        ("square", "discrete_a3_s3.json"),
        ("2action", "two_action_v4.json"),
        ("group_square", "group_normal_pair_v4.json"),
    ] {
        let out = hopfx(["check", kind, path(&corpus(file))]);
        assert_eq!(code(&out), 0, "{file}: {}{}", stdout(&out), stderr(&out));
    }
}

#[test]
fn broken_crossed_module_names_cm2_and_the_pair() {
    let out = hopfx(["--report", "json", "check", "xmod", path(&corpus("broken_cm2.json"))]);
    assert_eq!(code(&out), 1);
    let reports = json_reports(&out);
    let cm2 = entry(&reports[0], "CM2");
    assert_eq!(cm2["status"], "fail");
    assert_eq!(cm2["counterexample"]["inputs"].as_array().unwrap().len(), 2);
    assert_eq!(entry(&reports[0], "CM1")["status"], "pass");
}

#[test]
fn text_and_json_reports_agree() {
    let file = corpus("broken_cm2.json");
    let text = stdout(&hopfx(["check", "xmod", path(&file)]));
    let json = json_reports(&hopfx(["--report", "json", "check", "xmod", path(&file)]));
    for e in json[0]["entries"].as_array().unwrap() {
        let tag = if e["status"] == "pass" { "pass" } else { "FAIL" };
        let line = format!("{tag} {} ({} checked)", e["axiom"].as_str().unwrap(), e["checked"]);
        assert!(text.contains(&line), "{line}");
    }
}

#[test]
fn xmod_to_cat1_and_back() {
    let dir = tempfile::tempdir().unwrap();
    let cat1 = dir.path().join("c.json");
    let out = hopfx(["convert", "xmod", "cat1", path(&corpus("conj_a3_s3.json")), "--out", path(&cat1)]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let arrows: Value = serde_json::from_str(&fs::read_to_string(dir.path().join("c.arrows.json")).unwrap()).unwrap();
    assert_eq!(arrows["payload"]["dim"], 18);
    assert_eq!(code(&hopfx(["check", "cat1", path(&cat1)])), 0);
    let back = dir.path().join("x.json");
    assert_eq!(code(&hopfx(["convert", "cat1", "xmod", path(&cat1), "--out", path(&back)])), 0);
    assert_eq!(code(&hopfx(["check", "xmod", path(&back)])), 0);
}

#[test]
fn unit_square_over_the_field_gives_the_trivial_cat2() {
    let dir = tempfile::tempdir().unwrap();
    let square = dir.path().join("u.json");
    assert_eq!(code(&hopfx(["gen", "unit", "--algebra", "k", "--out", path(&square)])), 0);
    let cat2 = dir.path().join("c.json");
    assert_eq!(code(&hopfx(["convert", "square", "cat2", path(&square), "--out", path(&cat2)])), 0);
    let total: Value = serde_json::from_str(&fs::read_to_string(dir.path().join("c.total.json")).unwrap()).unwrap();
    assert_eq!(total["payload"]["dim"], 1);
    assert_eq!(code(&hopfx(["check", "cat2", path(&cat2)])), 0);
}

#[test]
fn cat2_to_square_and_back_stays_a_cat2_of_the_same_size() {
    let dir = tempfile::tempdir().unwrap();
    let d = |n: &str| dir.path().join(n);
    let run = |args: &[&str]| {
        let out = hopfx(args);
        assert_eq!(code(&out), 0, "{args:?}: {}", stderr(&out));
    };
    run(&["convert", "square", "cat2", path(&corpus("unit_c2.json")), "--out", path(&d("a.json"))]);
    run(&["convert", "cat2", "square", path(&d("a.json")), "--out", path(&d("s.json"))]);
    run(&["check", "square", path(&d("s.json"))]);
    run(&["convert", "square", "cat2", path(&d("s.json")), "--out", path(&d("b.json"))]);
    run(&["check", "cat2", path(&d("b.json"))]);
    let dim = |f: &str| serde_json::from_str::<Value>(&fs::read_to_string(d(f)).unwrap()).unwrap()["payload"]["dim"].clone();
    assert_eq!(dim("a.total.json"), 16);
    assert_eq!(dim("a.total.json"), dim("b.total.json"));
}

#[test]
fn two_action_and_pt2_conversions() {
    let dir = tempfile::tempdir().unwrap();
    let pt2 = dir.path().join("p.json");
    assert_eq!(code(&hopfx(["convert", "2action", "pt2", path(&corpus("two_action_v4.json")), "--out", path(&pt2)])), 0);
    assert_eq!(code(&hopfx(["check", "pt2", path(&pt2)])), 0);
    let back = dir.path().join("a.json");
    assert_eq!(code(&hopfx(["convert", "pt2", "2action", path(&pt2), "--out", path(&back)])), 0);
    assert_eq!(code(&hopfx(["check", "2action", path(&back)])), 0);
}

#[test]
fn group_squares_lift_and_extract() {
    let dir = tempfile::tempdir().unwrap();
    let lifted = dir.path().join("l.json");
    let src = corpus("group_normal_pair_v4.json");
    assert_eq!(code(&hopfx(["convert", "group_square", "square", path(&src), "--out", path(&lifted)])), 0);
    assert_eq!(code(&hopfx(["check", "square", path(&lifted)])), 0);
    let back = dir.path().join("g.json");
    assert_eq!(code(&hopfx(["convert", "square", "group_square", path(&lifted), "--out", path(&back)])), 0);
    assert_eq!(code(&hopfx(["check", "group_square", path(&back)])), 0);
}

#[test]
fn round_trips() {
    let out = hopfx(["roundtrip", "xmod", path(&corpus("conj_a3_s3.json"))]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    let out = hopfx(["roundtrip", "2action", path(&corpus("two_action_v4.json"))]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    let out = hopfx(["--report", "json", "roundtrip", "square", path(&corpus("unit_c2.json"))]);
    assert_eq!(code(&out), 0);
    let reports = json_reports(&out);
    assert_eq!(entry(&reports[0], "corner maps")["note"], "identity matrices");
    assert_eq!(entry(&reports[1], "comparison dimension")["note"], "16");
}

#[test]
fn round_trip_of_the_largest_example() {
    let out = hopfx(["--report", "json", "roundtrip", "square", path(&corpus("example4_c3_s3.json"))]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let reports = json_reports(&out);
    assert!(reports.iter().all(|r| r["mode"] == "full"));
    assert_eq!(entry(&reports[1], "comparison dimension")["note"], "162");
}

#[test]
fn round_trip_needs_a_supported_kind() {
    assert_eq!(code(&hopfx(["roundtrip", "hopf", path(&corpus("k_s3.json"))])), 2);
}

#[test]
fn generated_examples_check() {
    let dir = tempfile::tempdir().unwrap();
    for (i, args) in [
        vec!["normal-pair", "--group", "V4"],
        vec!["unit", "--algebra", "k_c3"],
        vec!["discrete", "--xmod", "conj_a3_s3"],
        vec!["shadow", "--xmod", "discrete_c3"],
        vec!["normal-pair", "--group", "S3", "--horizontal", "e,(123),(132)", "--vertical", "e,(123),(132)"],
    ]
    .into_iter()
    .enumerate()
    {
        let out = dir.path().join(format!("g{i}.json"));
        let mut full = vec!["gen"];
        full.extend(args.iter().copied());
        full.extend(["--out", path(&out)]);
        let run = hopfx(&full);
        assert_eq!(code(&run), 0, "{args:?}: {}", stderr(&run));
        assert_eq!(code(&hopfx(["check", "square", path(&out)])), 0, "{args:?}");
    }
}

fn regenerate(dir: &Path) {
    let d = |n: &str| dir.join(n);
    let gens: [(&[&str], &str); 8] = [
        (&["algebra", "--algebra", "k_s3"], "k_s3.json"),
        (&["normal-pair", "--group", "V4"], "normal_pair_v4.json"),
        (&["xmod", "--xmod", "conj_a3_s3"], "conj_a3_s3.json"),
        (&["unit", "--algebra", "k_c2"], "unit_c2.json"),
        (&["unit", "--algebra", "k_c3"], "unit_c3.json"),
        (&["crossed-module", "--xmod", "conj_c3_s3"], "example4_c3_s3.json"),
        (&["discrete", "--xmod", "conj_a3_s3"], "discrete_a3_s3.json"),
        (&["group-normal-pair", "--group", "V4"], "group_normal_pair_v4.json"),
    ];
    for (args, file) in gens {
        let mut full = vec!["gen"];
        full.extend(args);
        let out = d(file);
        full.extend(["--out", path(&out)]);
        assert_eq!(code(&hopfx(&full)), 0, "{file}");
    }
    let out = d("two_action_v4.json");
    assert_eq!(code(&hopfx(["convert", "square", "2action", path(&d("normal_pair_v4.json")), "--out", path(&out)])), 0);
}

#[test]
fn output_is_byte_identical_and_matches_the_corpus() {
    let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    regenerate(a.path());
    regenerate(b.path());
    let mut names: Vec<_> = fs::read_dir(a.path()).unwrap().map(|e| e.unwrap().file_name()).collect();
    names.sort();
    assert!(names.len() > 20);
    for name in names {
        let first = fs::read(a.path().join(&name)).unwrap();
        assert_eq!(first, fs::read(b.path().join(&name)).unwrap(), "{name:?} differs between runs");
        let committed = fs::read(corpus(name.to_str().unwrap())).unwrap_or_default();
        assert_eq!(first, committed, "{name:?} differs from the committed corpus");
    }
}

#[test]
fn conversion_output_is_byte_identical() {
    let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    for dir in [&a, &b] {
        let out = dir.path().join("c.json");
        assert_eq!(code(&hopfx(["convert", "square", "cat2", path(&corpus("normal_pair_v4.json")), "--out", path(&out)])), 0);
    }
    for name in ["c.json", "c.total.json", "c.first.json"] {
        assert_eq!(fs::read(a.path().join(name)).unwrap(), fs::read(b.path().join(name)).unwrap(), "{name}");
    }
}

#[test]
fn the_guide_shows_the_generated_manifest() {
    let guide = fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("../../book/src/command-line.md")).unwrap();
    let block = guide.split("```json\n").nth(2).and_then(|rest| rest.split("```").next()).expect("worked example");
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("k_c2.json");
    assert_eq!(code(&hopfx(["gen", "algebra", "--algebra", "k_c2", "--out", path(&file)])), 0);
    assert_eq!(fs::read_to_string(&file).unwrap(), block);
}

#[test]
fn prime_fields_reinterpret_the_scalars() {
    let out = hopfx(["--field", "fp:5", "check", "hopf", path(&corpus("k_s3.json"))]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("k.json");
    assert_eq!(code(&hopfx(["--field", "fp:3", "gen", "algebra", "--algebra", "S3", "--out", path(&file)])), 0);
    assert!(fs::read_to_string(&file).unwrap().contains("\"fp:3\""));
    assert_eq!(code(&hopfx(["check", "hopf", path(&file)])), 0);
}

/// Copies a corpus file, applies `edit` to its JSON and returns the new path.
fn corrupted(dir: &Path, file: &str, edit: impl FnOnce(&mut Value)) -> PathBuf {
    let mut v: Value = serde_json::from_str(&fs::read_to_string(corpus(file)).unwrap()).unwrap();
    edit(&mut v);
    for entry in fs::read_dir(corpus("")).unwrap() {
        let entry = entry.unwrap();
        fs::copy(entry.path(), dir.join(entry.file_name())).unwrap();
    }
    static COUNTER: AtomicUsize = AtomicUsize::new(0);
    let out = dir.join(format!("bad{}_{file}", COUNTER.fetch_add(1, Ordering::Relaxed)));
    fs::write(&out, serde_json::to_string(&v).unwrap()).unwrap();
    out
}

#[test]
fn input_errors_exit_with_two_and_a_location() {
    let dir = tempfile::tempdir().unwrap();
    let cases: Vec<(PathBuf, &str)> = vec![
        (corrupted(dir.path(), "k_s3.json", |v| v["schema_version"] = "9".into()), "/schema_version"),
        (corrupted(dir.path(), "k_s3.json", |v| v["payload"]["mult"]["entries"][3][3] = "1/0".into()), "/payload/mult/entries/3/3"),
        (corrupted(dir.path(), "k_s3.json", |v| v["payload"]["antipode"]["shape"] = serde_json::json!([6, 5])), "/payload/antipode/shape"),
        (corrupted(dir.path(), "k_s3.json", |v| v["payload"]["unit"]["entries"][0][0] = 9.into()), "/payload/unit/entries/0/0"),
        (corrupted(dir.path(), "conj_a3_s3.json", |v| v["payload"]["base"] = "missing.json".into()), "/payload/base"),
        (corrupted(dir.path(), "conj_a3_s3.json", |v| v["payload"]["base"] = "conj_a3_s3.json".into()), "/payload/base"),
    ];
    for (file, pointer) in cases {
        let kind = if file.to_string_lossy().contains("k_s3") { "hopf" } else { "xmod" };
        let out = hopfx(["check", kind, path(&file)]);
        assert_eq!(code(&out), 2, "{pointer}: {}", stderr(&out));
        assert!(stderr(&out).contains(pointer), "{pointer} not in {}", stderr(&out));
    }
    let garbage = dir.path().join("garbage.json");
    fs::write(&garbage, "{ not json").unwrap();
    let out = hopfx(["check", "hopf", path(&garbage)]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("line 1"));
    assert_eq!(code(&hopfx(["check", "square", path(&corpus("k_s3.json"))])), 2);
    assert_eq!(code(&hopfx(["convert", "hopf", "cat1", path(&corpus("k_s3.json")), "--out", "x.json"])), 2);
    assert_eq!(code(&hopfx(["--paranoid", "sometimes", "check", "hopf", path(&corpus("k_s3.json"))])), 2);
    assert_eq!(code(&hopfx(["frobnicate"])), 2);
}

#[test]
fn budget_exhaustion_exits_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let cat1 = dir.path().join("c.json");
    assert_eq!(code(&hopfx(["convert", "xmod", "cat1", path(&corpus("conj_a3_s3.json")), "--out", path(&cat1)])), 0);
    let out = hopfx(["--budget", "10", "check", "cat1", path(&cat1)]);
    assert_eq!(code(&out), 2, "{}", stderr(&out));
    assert!(stderr(&out).contains("budget"));
}

#[test]
fn axiom_and_precondition_failures_exit_with_one() {
    let dir = tempfile::tempdir().unwrap();
    let out = hopfx([
        "--paranoid",
        "on",
        "convert",
        "xmod",
        "cat1",
        path(&corpus("broken_cm2.json")),
        "--out",
        path(&dir.path().join("c.json")),
    ]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("FAIL kernel commutation"));

    let bad = corrupted(dir.path(), "k_s3.json", |v| v["payload"]["antipode"]["entries"][3][1] = 3.into());
    let out = hopfx(["check", "hopf", path(&bad)]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("FAIL antipode"));

    let out = hopfx([
        "gen",
        "normal-pair",
        "--group",
        "S3",
        "--horizontal",
        "e,(12)",
        "--vertical",
        "e,(123),(132)",
        "--out",
        path(&dir.path().join("n.json")),
    ]);
    assert_eq!(code(&out), 1, "{}", stderr(&out));

    let out = hopfx(["convert", "square", "group_square", path(&corpus("unit_c2.json")), "--out", path(&dir.path().join("g.json"))]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let lifted_without_flags = dir.path().join("unit_c2.horizontal.json");
    let mut h: Value = serde_json::from_str(&fs::read_to_string(&lifted_without_flags).unwrap()).unwrap();
    h["payload"].as_object_mut().unwrap().remove("grouplike");
    fs::write(&lifted_without_flags, serde_json::to_string(&h).unwrap()).unwrap();
    let out = hopfx(["convert", "square", "group_square", path(&dir.path().join("unit_c2.json")), "--out", path(&dir.path().join("h.json"))]);
    assert_eq!(code(&out), 1, "{}", stderr(&out));
}
