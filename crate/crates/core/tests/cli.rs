use linkforge::cli::run;
use serde_json::Value;

fn call(args: &[&str]) -> (i32, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let mut argv = vec!["linkforge"];
    argv.extend_from_slice(args);
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap())
}

fn json(args: &[&str]) -> Value {
    let (code, out) = call(args);
    assert_eq!(code, 0, "{args:?}: {out}");
    serde_json::from_str(&out).unwrap()
}

fn cert(name: &str) -> String {
    format!("{}/data/certificates/{name}.json", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn documented_outputs() {
    let v = json(&["colorings", "9_49", "--modulus", "5"]);
    assert_eq!((v["cardinality"].as_str(), v["dim"].as_u64()), (Some("5^3"), Some(3)));
    let v = json(&["kauffman", "3_1", "--phi5"]);
    assert_eq!([&v["u"], &v["v"], &v["epsilon"], &v["lambda"]], [-1, 0, -1, 0]);
    assert_eq!(json(&["burnside", "T_5", "--p", "3"])["order_exponent"], 14);
}

#[test]
fn deterministic() {
    let args = ["kauffman", "9_40", "--full"];
    assert_eq!(call(&args), call(&args));
}

#[test]
fn exit_codes() {
    assert_eq!(call(&["colorings", "3_1"]).0, 2);
    assert_eq!(call(&["frobnicate"]).0, 2);
    let (code, out) = call(&["parse", "X 1 2 3"]);
    assert_eq!(code, 1);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["error"]["kind"], "Malformed");
    assert_eq!(call(&["burnside", "3_1", "--p", "2"]).0, 1);
}

#[test]
fn inline_inputs() {
    let v = json(&["parse", "X 1 1 2 2"]);
    assert_eq!(v["components"], 1);
    let v = json(&["determinant", "BR 2: 1 1 1"]);
    assert_eq!(v["determinant"], 3);
    let v = json(&["parse", "X 1 5 2 4; X 3 1 4 6; X 5 3 6 2"]);
    assert_eq!(v["crossings"], 3);
}

#[test]
fn moves_and_bounds() {
    let v = json(&["moves", "verify", &cert("8_8")]);
    assert_eq!((v["final_crossings"].as_u64(), v["final_components"].as_u64()), (Some(0), Some(2)));
    let v = json(&["bounds", "8_8", "--certificate", &cert("8_8")]);
    assert_eq!(v["best"], 2);
    let v = json(&["bounds", "3_1", "--against", "4_1"]);
    assert!(v["bounds"].as_array().unwrap().iter().any(|b| b["source"] == "distance" && b["value"] == 2));
    let mv = r#"{"move":{"variant":"R1+","params":{"sign":1}},"site":{"kind":"edges","first":1,"second":1}}"#;
    assert_eq!(json(&["moves", "apply", "3_1", "--move", mv])["crossings"], 4);
}

#[test]
fn lagrangians_and_catalog() {
    assert_eq!(json(&["lagrangian", "--p", "5", "--count", "2"])["count"], "6");
    let v = json(&["lagrangian", "rational 5/3", "--p", "5"]);
    assert_eq!(v["is_lagrangian"], true);
    let names = json(&["catalog", "list"]);
    assert!(names["names"].as_array().unwrap().iter().any(|n| n == "9_49"));
    let show = json(&["catalog", "show", "T_2"]);
    assert_eq!(show["records"], serde_json::json!(["O", "O"]));
}

#[test]
fn text_format() {
    let (code, out) = call(&["--format", "text", "determinant", "4_1"]);
    assert_eq!(code, 0);
    assert!(out.contains("determinant: 5"));
}
