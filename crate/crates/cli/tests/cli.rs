use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cubiclines"))
}

fn dir(sub: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests").join(sub)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin().args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped()).spawn().unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let d = std::env::temp_dir().join(format!("cubiclines-cli-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&d).unwrap();
    d
}

#[test]
fn golden_reports_for_the_canonical_systems() {
    for n in 1..=23 {
        let name = format!("system{n:02}.json");
        let out = run(&["classify", dir("data").join(&name).to_str().unwrap(), "--json"]);
        assert_eq!(out.status.code(), Some(0), "{name}");
        let golden = std::fs::read(dir("golden").join(&name)).unwrap();
        assert!(out.stdout == golden, "{name} differs from its golden report");
        let j: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(j["class"], n, "{name}");
        assert_eq!(j["figure"], n, "{name}");
        assert_eq!(j["total_multiplicity"], 9, "{name}");
    }
}

#[test]
fn system_one_from_stdin() {
    let out = run_stdin(&["classify", "-", "--json"], r#"{"p":{"x":"-1","x^3":"1"},"q":{"y":"-1","y^3":"1"}}"#);
    assert_eq!(out.status.code(), Some(0));
    let j: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!((j["class"].clone(), j["figure"].clone()), (1.into(), 1.into()));
    assert_eq!(j["config"], "(3,3,1,1)");
}

#[test]
fn output_is_deterministic() {
    let f = dir("data").join("system14.json");
    let a = run(&["classify", f.to_str().unwrap(), "--json"]);
    let b = run(&["classify", f.to_str().unwrap(), "--json"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn exit_codes() {
    let not_max = r#"{"p":{"1":"1","y":"1","x^3":"1"},"q":{"x":"1","xy":"-1","y^3":"1"}}"#;
    assert_eq!(run_stdin(&["classify", "-"], not_max).status.code(), Some(2));
    for bad in [
        r#"{"p":{},"q":{}}"#,
        r#"{"p":{"x":"1.5","x^3":"1"},"q":{"y^3":"1"}}"#,
        r#"{"p":{"x":1.5},"q":{"y^3":"1"}}"#,
        r#"{"p":{"x^4":"1"},"q":{"y^3":"1"}}"#,
        r#"{"p":{"x^3":"1"},"q":{"y^3":"1"},"r":{}}"#,
        r#"{"p":{"x^3":"1"},"q":{"x^2y":"1"}}"#,
        "not json",
    ] {
        let out = run_stdin(&["classify", "-"], bad);
        assert_eq!(out.status.code(), Some(3), "{bad}");
        assert!(!out.stderr.is_empty(), "{bad}: no diagnostic");
    }
    let out = run(&["classify", "/nonexistent/system.json"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn diagnostics_name_the_offending_key() {
    let out = run_stdin(&["classify", "-"], r#"{"p":{"x^3":"1","xy":"0.25"},"q":{"y^3":"1"}}"#);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("p.xy") && err.contains("0.25"), "{err}");
    let out = run_stdin(&["classify", "-"], "{\"p\":{\"x^3\":\"1\"},\n\"q\":{\"y^3\":2}}");
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn text_report_with_lines_and_certificate() {
    let f = dir("data").join("system08.json");
    let out = run(&["classify", f.to_str().unwrap(), "--lines", "--certificate"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("class 8 (figure 8)"));
    assert_eq!(text.matches("complex multiplicity 1").count(), 2);
    assert_eq!(text.matches("real    multiplicity 3").count(), 2);
    assert!(text.contains("certificate:") && text.contains("L4<0"));
}

#[test]
fn svg_of_system_eight() {
    let out_dir = scratch("svg");
    let target = out_dir.join("s8.svg");
    let f = dir("data").join("system08.json");
    let out = run(&["classify", f.to_str().unwrap(), "--svg", target.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let svg = std::fs::read_to_string(&target).unwrap();
    assert!(svg.contains(r#"version="1.1""#) && svg.contains("<circle"));
    assert_eq!(svg.matches("<polyline").count(), 4);
    assert_eq!(svg.matches("stroke-dasharray").count(), 2);
    assert_eq!(svg.matches(">3</text>").count(), 2);
}

#[test]
fn batch_mode() {
    let out_dir = scratch("batch");
    let out = run(&["classify", "--batch", dir("data").to_str().unwrap(), "--svg", out_dir.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 23);
    for (i, l) in lines.iter().enumerate() {
        assert!(l.starts_with(&format!("system{:02}.json: class {} ", i + 1, i + 1)), "{l}");
    }
    assert_eq!(std::fs::read_dir(&out_dir).unwrap().count(), 23);

    let json = run(&["classify", "--batch", dir("data").to_str().unwrap(), "--json"]);
    let j: serde_json::Value = serde_json::from_slice(&json.stdout).unwrap();
    assert_eq!(j.as_object().unwrap().len(), 23);
    assert_eq!(j["system07.json"]["class"], 7);
}
