use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use sibirsky::groebner::ideal_equal;
use sibirsky::poly::{MonomialOrder, Polynomial, PolynomialRecord, Ring};
use sibirsky::reversibility::{CoefficientPoint, SystemFamily};
use sibirsky::scalars::GaussianRational;
use sibirsky_cli::input::{split_var_order, FamilySpec, OrderName, PointSpec};

const QUADRATIC: &str = "pairs = [[1, 0], [0, 1], [-1, 2]]\n";

fn write(name: &str, contents: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sibirsky"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    assert!(
        out.status.success(),
        "exit {:?}: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_str(&stdout(out)).unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn quadratic_family_lists_five_generators() {
    let f = write("quadratic.toml", QUADRATIC);
    let text = stdout(&run(&["sibirsky", path_str(&f)]));
    assert!(text.contains("generators: 5"), "{text}");
    assert!(text.contains("f1 = a10*a01 - b01*b10"), "{text}");

    let doc = json(&run(&["sibirsky", path_str(&f), "--json"]));
    let gens = doc["generators"].as_array().unwrap();
    assert_eq!(gens.len(), 5);
    let ring = Ring::with_names(
        doc["family"]["variables"]
            .as_array()
            .unwrap()
            .iter()
            .map(|v| v.as_str().unwrap().to_string()),
        MonomialOrder::Lex,
    )
    .unwrap();
    let mut parsed = Vec::new();
    for g in gens {
        let from_text = Polynomial::parse(&ring, g["text"].as_str().unwrap()).unwrap();
        let record: PolynomialRecord = serde_json::from_value(g["record"].clone()).unwrap();
        assert_eq!(Polynomial::from_record(&ring, &record).unwrap(), from_text);
        parsed.push(from_text);
    }
    let reference: Vec<Polynomial> = [
        "a01^3*b2,-1 - a-1,2*b10^3",
        "a10*a01 - b01*b10",
        "a10^3*a-1,2 - b2,-1*b01^3",
        "a10*a-1,2*b10^2 - a01^2*b2,-1*b01",
        "a10^2*a-1,2*b10 - a01*b2,-1*b01^2",
    ]
    .iter()
    .map(|t| Polynomial::parse(&ring, t).unwrap())
    .collect();
    assert!(ideal_equal(&parsed, &reference, &MonomialOrder::Lex).unwrap());
    assert!(doc.get("timing").is_none());
}

#[test]
fn structured_output_is_deterministic() {
    let f = write("quadratic-det.toml", QUADRATIC);
    for args in [
        vec!["sibirsky", path_str(&f), "--json", "--hilbert"],
        vec![
            "sibirsky",
            path_str(&f),
            "--json",
            "--order",
            "block",
            "--parallel",
        ],
        vec!["hilbert", path_str(&f), "--json", "--oracle", "5"],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert_eq!(stdout(&a), stdout(&b));
    }
    let with_timing = json(&run(&["sibirsky", path_str(&f), "--json", "--timing"]));
    assert!(with_timing["timing"]["seconds"].is_number());
}

#[test]
fn order_flags_change_the_presentation_not_the_ideal() {
    let f = write("quadratic-order.toml", QUADRATIC);
    let lex = json(&run(&["sibirsky", path_str(&f), "--json"]));
    let block = json(&run(&[
        "sibirsky",
        path_str(&f),
        "--json",
        "--order",
        "block",
    ]));
    assert_eq!(block["family"]["order"], "block_grevlex");
    let reordered = json(&run(&[
        "sibirsky",
        path_str(&f),
        "--json",
        "--var-order",
        "a10 > a01 > a-1,2 > b10 > b01 > b2,-1",
    ]));
    assert_eq!(reordered["family"]["variables"][3], "b10");

    let ring = SystemFamily::quadratic().default_ab_order();
    let ring = Ring::with_names(ring, MonomialOrder::Lex).unwrap();
    let gens = |doc: &Value| -> Vec<Polynomial> {
        doc["generators"]
            .as_array()
            .unwrap()
            .iter()
            .map(|g| Polynomial::parse(&ring, g["text"].as_str().unwrap()).unwrap())
            .collect()
    };
    for other in [&block, &reordered] {
        assert!(ideal_equal(&gens(&lex), &gens(other), &MonomialOrder::Lex).unwrap());
    }

    let from_file = write(
        "quadratic-file-order.toml",
        "pairs = [[1, 0], [0, 1], [-1, 2]]\norder = \"block_grevlex\"\n",
    );
    let doc = json(&run(&["sibirsky", path_str(&from_file), "--json"]));
    assert_eq!(doc["family"]["order"], "block_grevlex");
}

#[test]
fn single_pair_families() {
    let f = write("one-one.toml", "pairs = [[1, 1]]\n");
    let doc = json(&run(&["sibirsky", path_str(&f), "--json"]));
    assert_eq!(doc["generators"][0]["text"], "a11 - b11");
    assert_eq!(doc["generators"].as_array().unwrap().len(), 1);

    let doc = json(&run(&["hilbert", path_str(&f), "--json"]));
    let vectors: Vec<Value> = doc["hilbert_basis"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["vector"].clone())
        .collect();
    assert_eq!(
        vectors,
        vec![
            serde_json::json!([0, 1]),
            serde_json::json!([1, 0]),
            serde_json::json!([1, 1])
        ]
    );

    let f = write("zero-one.toml", "pairs = [[0, 1]]\n");
    let doc = json(&run(&["sibirsky", path_str(&f), "--json"]));
    assert_eq!(doc["generators"], serde_json::json!([]));
}

#[test]
fn hilbert_command_with_oracle() {
    let f = write("quadratic-hilbert.toml", QUADRATIC);
    let text = stdout(&run(&["hilbert", path_str(&f), "--oracle", "6"]));
    assert!(text.contains("hilbert basis: 13"), "{text}");
    assert!(text.contains("(1,0,0,0,0,1)  a10*b01"), "{text}");
    assert!(text.contains("agreement: true"), "{text}");
    let doc = json(&run(&["hilbert", path_str(&f), "--oracle", "6", "--json"]));
    assert_eq!(doc["oracle"]["agreement"], true);
    assert_eq!(doc["oracle"]["vectors"].as_array().unwrap().len(), 13);
    assert_eq!(
        run(&["hilbert", path_str(&f), "--oracle", "0"])
            .status
            .code(),
        Some(3)
    );
}

#[test]
fn check_command_verdicts() {
    let f = write("quadratic-check.toml", QUADRATIC);
    let cases = [
        (
            "palindrome.toml",
            "point = [\"1\", \"2\", \"3\", \"3\", \"2\", \"1\"]\n",
            "verdict: reversible, gamma = 1",
        ),
        (
            "unit.toml",
            "point = [\"1\", \"0\", \"0\", \"0\", \"0\", \"0\"]\n",
            "verdict: on variety, not reversible, witness index 1",
        ),
        (
            "off.toml",
            "point = [\"1\", \"1\", \"0\", \"0\", \"0\", \"1\"]\n",
            "verdict: off variety, witness f1 = a10*a01 - b01*b10 (value 1)",
        ),
        (
            "scaled.toml",
            "point = [\"1\", \"1\", \"1\", \"1/8\", \"1/2\", \"2\"]\n",
            "verdict: reversible, gamma = 2",
        ),
    ];
    for (name, contents, expected) in cases {
        let p = write(name, contents);
        let text = stdout(&run(&["check", path_str(&f), path_str(&p)]));
        assert!(text.contains(expected), "{name}: {text}");
    }
    let p = write(
        "off-json.toml",
        "point = [\"1\", \"1\", \"0\", \"0\", \"0\", \"1\"]\n",
    );
    let doc = json(&run(&["check", path_str(&f), path_str(&p), "--json"]));
    assert_eq!(doc["check"]["verdict"]["kind"], "off_variety");
    assert_eq!(doc["check"]["verdict"]["witness_text"], "a10*a01 - b01*b10");
    assert!(doc["check"].get("gamma_relation").is_none());

    let p = write(
        "zero.toml",
        "point = [\"0\", \"0\", \"0\", \"0\", \"0\", \"0\"]\n",
    );
    let doc = json(&run(&["check", path_str(&f), path_str(&p), "--json"]));
    assert_eq!(doc["check"]["gamma_relation"]["text"], "unconstrained");
}

#[test]
fn complexify_command() {
    let text = stdout(&run(&["complexify", "0", "0", "0", "0", "0", "0"]));
    assert!(text.contains("point: (0, 0, 0, 0, 0, 0)"), "{text}");
    assert!(text.contains("verdict: reversible"), "{text}");

    let text = stdout(&run(&["complexify", "1", "0", "0", "0", "0", "0"]));
    assert!(
        text.contains("point: (1/4, 1/2, 1/4, 1/4, 1/2, 1/4)"),
        "{text}"
    );
    assert!(text.contains("verdict: reversible, gamma = 1"), "{text}");

    let doc = json(&run(&[
        "complexify",
        "0",
        "1",
        "0",
        "0",
        "0",
        "0",
        "--json",
    ]));
    let point: Vec<GaussianRational> = doc["check"]["point"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap().parse().unwrap())
        .collect();
    // a2 enters a10 and a-1,2 with opposite signs and leaves a01 alone
    assert_eq!(point[0], "-1/4*i".parse().unwrap());
    assert_eq!(point[1], GaussianRational::zero());
    assert_eq!(point[2], "1/4*i".parse().unwrap());
    assert!(point[..3]
        .iter()
        .all(|v| v.re == GaussianRational::zero().re));
    assert!(doc["check"]["verdict"]["kind"].is_string());

    let out = run(&["complexify", "-1/2", "0", "3", "0", "2/3", "0"]);
    assert!(stdout(&out).contains("verdict: reversible, gamma = 1"));
    assert_eq!(
        run(&["complexify", "1", "x", "0", "0", "0", "0"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn exit_codes() {
    let bad = write("bad-pair.toml", "pairs = [[-2, 0]]\n");
    assert_eq!(run(&["sibirsky", path_str(&bad)]).status.code(), Some(3));
    let dup = write("dup.toml", "pairs = [[1, 0], [1, 0]]\n");
    assert_eq!(run(&["sibirsky", path_str(&dup)]).status.code(), Some(3));
    let malformed = write("malformed.toml", "pairs = [[1, 0]\n");
    assert_eq!(
        run(&["sibirsky", path_str(&malformed)]).status.code(),
        Some(2)
    );
    let unknown = write("unknown-key.toml", "pairs = [[1, 0]]\ncolour = 1\n");
    assert_eq!(
        run(&["sibirsky", path_str(&unknown)]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["sibirsky", "/nonexistent/family.toml"]).status.code(),
        Some(1)
    );

    let f = write("quadratic-exit.toml", QUADRATIC);
    let out = run(&["sibirsky", path_str(&f), "--budget-degree", "2"]);
    assert_eq!(out.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget exceeded"));
    assert_eq!(
        run(&["sibirsky", path_str(&f), "--var-order", "a10 a01"])
            .status
            .code(),
        Some(3)
    );

    let short = write("short-point.toml", "point = [\"1\", \"2\"]\n");
    assert_eq!(
        run(&["check", path_str(&f), path_str(&short)])
            .status
            .code(),
        Some(3)
    );
    let garbled = write(
        "garbled-point.toml",
        "point = [\"1\", \"2+\", \"0\", \"0\", \"0\", \"0\"]\n",
    );
    assert_eq!(
        run(&["check", path_str(&f), path_str(&garbled)])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn input_formats_round_trip() {
    let spec = FamilySpec {
        pairs: vec![[1, 0], [0, 1], [-1, 2]],
        order: Some(OrderName::BlockGrevlex),
        var_order: Some(split_var_order("a10 > a01 > a-1,2 > b10 > b01 > b2,-1")),
    };
    assert_eq!(FamilySpec::parse(&spec.to_toml()).unwrap(), spec);
    assert_eq!(spec.var_order.as_ref().unwrap()[2], "a-1,2");
    let bare = FamilySpec::parse(QUADRATIC).unwrap();
    assert_eq!(FamilySpec::parse(&bare.to_toml()).unwrap(), bare);
    assert_eq!(
        FamilySpec::parse("pairs = [[1, 0]]\norder = \"block\"\n")
            .unwrap()
            .order,
        Some(OrderName::BlockGrevlex)
    );

    let point = CoefficientPoint(
        ["1", "-1/2+3*i", "i", "0", "-7/3*i", "5"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect(),
    );
    let spec = PointSpec::from_point(&point);
    assert_eq!(
        PointSpec::parse(&spec.to_toml()).unwrap().point().unwrap(),
        point
    );
}
