use std::collections::BTreeMap;
use std::process::{Command, Output};

type Terms = BTreeMap<(Vec<usize>, i64, u32), usize>;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_grothendieck")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap().trim_end().to_string()
}

fn parse_mu(s: &str) -> Vec<usize> {
    let inner = s.trim_start_matches('(').trim_end_matches(')');
    if inner.is_empty() {
        Vec::new()
    } else {
        inner.split(',').map(|p| p.parse().unwrap()).collect()
    }
}

/// Splits the right-hand side into signed term strings.
fn signed_terms(rhs: &str) -> Vec<(i64, String)> {
    let (mut sign, mut rest) = match rhs.strip_prefix('-') {
        Some(r) => (-1, r),
        None => (1, rhs),
    };
    let mut out = Vec::new();
    loop {
        let plus = rest.find(" + ");
        let minus = rest.find(" - ");
        let next = match (plus, minus) {
            (Some(p), Some(m)) => Some(p.min(m)),
            (p, m) => p.or(m),
        };
        match next {
            None => {
                out.push((sign, rest.to_string()));
                return out;
            }
            Some(i) => {
                out.push((sign, rest[..i].to_string()));
                sign = if &rest[i..i + 3] == " - " { -1 } else { 1 };
                rest = &rest[i + 3..];
            }
        }
    }
}

fn text_terms(line: &str) -> Terms {
    let rhs = line.split(" = ").nth(1).unwrap();
    let mut out = Terms::new();
    for (sign, term) in signed_terms(rhs) {
        let (mut magnitude, mut beta, mut mu) = (1i64, 0u32, None);
        for factor in term.split('*') {
            if let Some(rest) = factor.strip_prefix("b^") {
                beta = rest.parse().unwrap();
            } else if factor == "b" {
                beta = 1;
            } else if let Some((_, m)) = factor.split_once('_') {
                mu = Some(parse_mu(m));
            } else {
                magnitude = factor.parse().unwrap();
            }
        }
        *out.entry((mu.unwrap(), sign * magnitude, beta)).or_default() += 1;
    }
    out
}

fn latex_terms(line: &str) -> Terms {
    let rhs = line.split(" = ").nth(1).unwrap();
    let mut out = Terms::new();
    for (sign, term) in signed_terms(rhs) {
        let (prefix, mu) = term.split_once("_{(").unwrap();
        let mu = parse_mu(mu.trim_end_matches(")}"));
        let prefix = prefix.trim_end_matches("\\widetilde{G}").trim_end_matches('G').trim();
        let digits: String = prefix.chars().take_while(char::is_ascii_digit).collect();
        let magnitude = if digits.is_empty() { 1 } else { digits.parse().unwrap() };
        let beta = match prefix[digits.len()..].trim() {
            "" => 0,
            "\\beta" => 1,
            b => b.trim_start_matches("\\beta^{").trim_end_matches('}').parse().unwrap(),
        };
        *out.entry((mu, sign * magnitude, beta)).or_default() += 1;
    }
    out
}

fn json_terms(s: &str) -> Terms {
    let v: serde_json::Value = serde_json::from_str(s).unwrap();
    let mut out = Terms::new();
    for t in v["terms"].as_array().unwrap() {
        let mu = t["mu"].as_array().unwrap().iter().map(|p| p.as_u64().unwrap() as usize).collect();
        let key = (mu, t["coeff"].as_i64().unwrap(), t["beta_power"].as_u64().unwrap() as u32);
        *out.entry(key).or_default() += 1;
    }
    out
}

#[test]
fn documented_outputs() {
    assert_eq!(stdout(&["gpoly", "--lambda", "2,1", "--n", "2"]), "x1^2*x2 + x1*x2^2 + b*x1^2*x2^2");
    assert_eq!(
        stdout(&["expand", "--lambda", "", "--k", "2", "--n", "2", "--format", "text"]),
        "G_() * p_2 = G_(2) - G_(1,1) - b*G_(2,1) + b^2*G_(2,2)"
    );
    assert_eq!(
        stdout(&["expand", "--lambda", "", "--k", "2", "--n", "2", "--format", "latex"]),
        "G_{()} p_{2} = G_{(2)} - G_{(1,1)} - \\beta G_{(2,1)} + \\beta^{2} G_{(2,2)}"
    );
    assert_eq!(stdout(&["expand", "--lambda", "1", "--k", "1", "--n", "2"]), "G_(1) * p_1 = G_(2) + G_(1,1)");
    let tableaux = stdout(&["tableaux", "--kind", "h", "--lambda", "", "--k", "1", "--n", "2"]);
    assert!(tableaux.ends_with("2 tableaux"), "{tableaux}");
    assert!(tableaux.contains("mu=(1,1) sign=-\n0\n1"), "{tableaux}");
    assert_eq!(stdout(&["gpoly", "--lambda", "1", "--n", "2", "--tilde"]), "x1 + x2 + x1*x2");
}

#[test]
fn json_round_trips_byte_for_byte() {
    for (lambda, k, n, basis) in [("", "2", "2", "g"), ("2,1", "3", "3", "g"), ("3,1", "4", "3", "gtilde")] {
        let json = stdout(&["expand", "--lambda", lambda, "--k", k, "--n", n, "--basis", basis, "--format", "json"]);
        let exp = grothendieck::Expansion::from_json(&json).unwrap();
        let again = exp.to_json().unwrap();
        assert_eq!(again, json);
        let a: serde_json::Value = serde_json::from_str(&json).unwrap();
        let b: serde_json::Value = serde_json::from_str(&again).unwrap();
        assert_eq!(a, b);
    }
}

#[test]
fn formats_agree_on_terms() {
    let mut nontrivial = false;
    for (lambda, n) in [("", "3"), ("1", "2"), ("2,1", "3"), ("3,3", "3"), ("2,2,1", "3")] {
        for k in ["1", "2", "3", "4"] {
            for basis in ["g", "gtilde"] {
                let base = ["expand", "--lambda", lambda, "--k", k, "--n", n, "--basis", basis, "--format"];
                let json = json_terms(&stdout(&[&base[..], &["json"]].concat()));
                let text = text_terms(&stdout(&[&base[..], &["text"]].concat()));
                let latex = latex_terms(&stdout(&[&base[..], &["latex"]].concat()));
                assert_eq!(text, json, "{lambda} {k} {n} {basis}");
                assert_eq!(latex, json, "{lambda} {k} {n} {basis}");
                nontrivial |= json.keys().any(|(_, c, _)| c.abs() > 1);
            }
        }
        for kind in ["e", "h"] {
            let base = ["pieri", "--kind", kind, "--lambda", lambda, "--k", "2", "--n", n, "--format"];
            let json = json_terms(&stdout(&[&base[..], &["json"]].concat()));
            assert_eq!(text_terms(&stdout(&[&base[..], &["text"]].concat())), json);
            assert_eq!(latex_terms(&stdout(&[&base[..], &["latex"]].concat())), json);
        }
    }
    assert!(nontrivial, "no coefficient with magnitude above 1 was exercised");
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["expand", "--lambda", "2,1", "--k", "1", "--n", "1"][..],
        &["expand", "--lambda", "1,2", "--k", "1", "--n", "2"],
        &["expand", "--lambda", "a", "--k", "1", "--n", "2"],
        &["expand", "--lambda", "1", "--k", "0", "--n", "2"],
        &["expand", "--lambda", "1", "--k", "1", "--n", "0"],
        &["expand", "--lambda", "1", "--k", "1", "--n", "2", "--basis", "h"],
        &["gpoly", "--lambda", "1,1,1", "--n", "2"],
        &["verify", "--lambda", "1", "--k", "0", "--n", "2"],
        &["sweep", "--max-n", "0", "--max-part", "1", "--max-len", "1", "--max-k", "1"],
        &["frobnicate"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn verify_and_sweep_succeed() {
    let out = run(&["verify", "--lambda", "2,1", "--k", "2", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("ok ")).count(), 5, "{text}");

    let json = stdout(&["verify", "--lambda", "1", "--k", "3", "--n", "3", "--check", "mn", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["ok"], true);
    assert_eq!(v["reports"].as_array().unwrap().len(), 1);

    let out = run(&["sweep", "--max-n", "2", "--max-part", "2", "--max-len", "2", "--max-k", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["cases"].as_u64().unwrap() > 0);
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);

    let a = stdout(&["sweep", "--max-n", "3", "--max-part", "2", "--max-len", "2", "--max-k", "3", "--jobs", "1"]);
    let b = stdout(&["sweep", "--max-n", "3", "--max-part", "2", "--max-len", "2", "--max-k", "3", "--jobs", "4"]);
    assert_eq!(a, b);
}
