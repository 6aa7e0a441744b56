use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn schubert(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schubert"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn envelope(args: &[&str]) -> (Value, String) {
    let mut all = args.to_vec();
    all.push("--json");
    let out = schubert(&all);
    let text = stdout(&out);
    (serde_json::from_str(&text).expect("valid JSON"), text)
}

/// Renders a JSON class the way the text output does.
fn class_text(terms: &Value) -> String {
    let terms = terms.as_array().unwrap();
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, t) in terms.iter().enumerate() {
        let num = t["coefficient"]["num"].as_str().unwrap();
        let den = t["coefficient"]["den"].as_str().unwrap();
        let (neg, abs) = match num.strip_prefix('-') {
            Some(a) => (true, a),
            None => (false, num),
        };
        out.push_str(match (i, neg) {
            (0, true) => "-",
            (0, false) => "",
            (_, true) => " - ",
            (_, false) => " + ",
        });
        let parts: Vec<String> = t["partition"]
            .as_array()
            .unwrap()
            .iter()
            .map(|p| p.to_string())
            .collect();
        let p = format!("[{}]", parts.join(","));
        match (abs, den) {
            ("1", "1") => out.push_str(&p),
            (a, "1") => out.push_str(&format!("{a}·{p}")),
            (a, d) => out.push_str(&format!("{a}/{d}·{p}")),
        }
    }
    out
}

#[test]
fn roberts_exit_codes_and_verdict_lines() {
    let o = schubert(&["roberts", "3", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("Roberts: yes"));

    let o = schubert(&["roberts", "2", "5"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("Roberts: no; witness degree 2; τ = -1/12·[2]"));

    assert_eq!(schubert(&["roberts", "0", "5"]).status.code(), Some(2));
    assert_eq!(schubert(&["roberts", "5", "5"]).status.code(), Some(2));
    assert_eq!(schubert(&["roberts", "2", "13"]).status.code(), Some(2));
    assert_eq!(schubert(&["roberts", "x", "5"]).status.code(), Some(2));
}

#[test]
fn json_round_trips_byte_for_byte() {
    for args in [
        &["roberts", "2", "5"][..],
        &["table", "5"],
        &["chow", "basis", "2", "4"],
        &["chow", "reduce", "2", "5", "--class", "[1,1]:1/3"],
        &["bundle", "2", "5", "--todd", "--mod-h"],
        &["pfaffian", "classify", "2", "6"],
    ] {
        let (value, text) = envelope(args);
        assert_eq!(serde_json::to_string_pretty(&value).unwrap() + "\n", text, "{args:?}");
        assert_eq!(value["exact_arithmetic"], Value::Bool(true));
        assert!(value["engine_version"].is_string());
    }
}

#[test]
fn json_and_text_agree_on_roberts_reports() {
    for (d, n) in [(2, 5), (3, 6), (2, 6), (1, 4)] {
        let (d, n) = (d.to_string(), n.to_string());
        let args = ["roberts", d.as_str(), n.as_str()];
        let text = stdout(&schubert(&args));
        let (value, _) = envelope(&args);
        let result = &value["result"];
        for rec in result["records"].as_array().unwrap() {
            let zero = if rec["is_zero"].as_bool().unwrap() { "yes" } else { "no" };
            let line = format!(
                "degree {} (index {}): td = {}; τ ≡ {}; zero: {zero}",
                rec["degree"],
                rec["homological_index"],
                class_text(&rec["todd_component"]),
                class_text(&rec["representative"]),
            );
            assert!(text.contains(&line), "missing {line:?} in\n{text}");
        }
        let verdict = result["verdict"].as_bool().unwrap();
        assert_eq!(text.contains("Roberts: yes"), verdict);
        if let Some(w) = result["witness"].as_u64() {
            assert!(text.contains(&format!("witness degree {w}")));
        }
    }
}

#[test]
fn json_and_text_agree_on_bundles() {
    let args = ["bundle", "2", "5", "--ch", "--max-degree", "3", "--mod-h"];
    let text = stdout(&schubert(&args));
    let (value, _) = envelope(&args);
    let lines: Vec<&str> = text.lines().collect();
    let comps = value["result"]["components"].as_array().unwrap();
    assert_eq!(lines.len(), comps.len());
    for (line, c) in lines.iter().zip(comps) {
        assert!(line.contains(&format!("= {};", class_text(&c["class"]))), "{line}");
        assert!(
            line.contains(&format!("mod h: {};", class_text(&c["mod_h"]["representative"]))),
            "{line}"
        );
    }
}

#[test]
fn chow_examples() {
    let o = schubert(&["chow", "multiply", "2", "4", "--", "1", "1"]);
    assert_eq!(stdout(&o), "[1]·[1] = [2] + [1,1]\n");

    let o = schubert(&["chow", "reduce", "2", "5", "--class", "[2]:1"]);
    assert!(stdout(&o).contains("zero: no"));
    let o = schubert(&["chow", "reduce", "2", "5", "--class", "[2]", "--class", "[1,1]"]);
    assert!(stdout(&o).contains("zero: yes"));

    let o = schubert(&["chow", "basis", "3", "6", "--degree", "4"]);
    assert_eq!(stdout(&o), "degree 4 (3): [3,1] [2,2] [2,1,1]\n");

    let o = schubert(&["chow", "pieri", "2", "4", "[1]", "1", "--diagrams"]);
    assert!(stdout(&o).contains("    □□\n"));

    assert_eq!(
        schubert(&["chow", "multiply", "2", "4", "1,2", "1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        schubert(&["chow", "multiply", "2", "4", "3", "1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        schubert(&["chow", "reduce", "2", "5", "--class", "[2]", "--class", "[1]"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn bundle_examples() {
    let o = schubert(&["bundle", "2", "4", "--chern", "--max-degree", "1"]);
    assert_eq!(stdout(&o), "c₁ = 4·[1]\n");
    let o = schubert(&["bundle", "3", "6", "--todd", "--max-degree", "2", "--mod-h"]);
    assert!(stdout(&o).lines().nth(1).unwrap().contains("mod h: 0;"));
    let o = schubert(&["bundle", "2", "5", "--ch", "--bundle", "quotient", "--max-degree", "2"]);
    assert!(stdout(&o).contains("ch₂ = -1/2·[2] + 1/2·[1,1]"));
    assert_eq!(
        schubert(&["bundle", "2", "4", "--todd", "--max-degree", "9"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(schubert(&["bundle", "2", "4"]).status.code(), Some(2));
}

#[test]
fn table_is_symmetric_and_counts() {
    let (value, _) = envelope(&["table", "8"]);
    let rows = value["result"]["rows"].as_array().unwrap();
    let verdict = |d: u64, n: u64| {
        rows.iter().find(|r| r["d"] == d && r["n"] == n).unwrap()["verdict"]
            .as_bool()
            .unwrap()
    };
    for n in 2..=8u64 {
        for d in 1..n {
            assert_eq!(verdict(d, n), verdict(n - d, n));
        }
    }
    let count = rows.iter().filter(|r| r["verdict"] == true).count();
    assert_eq!(value["result"]["roberts_count"], count);
    // G(1,2); d = 1 and d = n-1 for n = 3..8; G(2,4) and G(3,6)
    assert_eq!(count, 1 + 2 * 6 + 2);

    let o = schubert(&["table", "2"]);
    assert_eq!(
        stdout(&o),
        "G(1,2)  Roberts: yes  witness: -\n1 of 1 shapes are Roberts\n"
    );
}

#[test]
fn pfaffian_classify_and_eval() {
    let o = schubert(&["pfaffian", "classify", "2", "5"]);
    assert!(stdout(&o).contains("CI: no; Roberts: no"));
    assert_eq!(o.status.code(), Some(1));
    let o = schubert(&["pfaffian", "classify", "3", "6"]);
    assert!(stdout(&o).contains("CI: yes; Roberts: yes"));
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(schubert(&["pfaffian", "classify", "3", "5"]).status.code(), Some(2));

    // z12 z34 - z13 z24 + z14 z23 = 1·6 - 2·5 + 3·4 = 8
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "4\n0 1 2 3\n-1 0 4 5\n-2 -4 0 6\n-3 -5 -6 0").unwrap();
    let o = schubert(&["pfaffian", "eval", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(
        text.contains("Pf = 8\n") && text.contains("det = 64\n") && text.contains("Pf² = det: yes"),
        "{text}"
    );

    let mut bad = tempfile::NamedTempFile::new().unwrap();
    writeln!(bad, "3\n0 1 2\n-1 0 3\n-2 3 0").unwrap();
    let o = schubert(&["pfaffian", "eval", bad.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8(o.stderr).unwrap().contains("(2,3)"));
}

#[test]
fn cone_dimensions() {
    let o = schubert(&["cone", "2", "4"]);
    assert!(stdout(&o).contains("[0, 0, 0, 1, 0, 1]"));
}
