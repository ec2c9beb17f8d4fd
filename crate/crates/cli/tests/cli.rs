use std::path::PathBuf;
use std::process::Command;

use qisg_cli::run;
use serde_json::Value;

fn qisg(line: &str) -> qisg_cli::Outcome {
    let mut args = vec!["qisg".to_string()];
    args.extend(line.split_whitespace().map(String::from));
    run(&args)
}

fn json(line: &str) -> (i32, Value) {
    let o = qisg(&format!("{line} --format json"));
    assert!(o.stderr.is_empty(), "{}", o.stderr);
    (o.code, serde_json::from_str(&o.stdout).expect("valid JSON"))
}

fn scratch(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("qisg-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

#[test]
fn hadamard_two_has_dim_seven() {
    let (code, v) = json("qisg check hadamard --n 2");
    assert_eq!(code, 0);
    assert_eq!(v["counts"]["dim"], 7);
    assert_eq!(v["passed"], true);
}

#[test]
fn pair_three_bisections() {
    let (code, v) = json("groupoid bisections pair --points 3 --check-inverse");
    assert_eq!(code, 0);
    assert_eq!(v["counts"]["bisections"], 34);
    assert_eq!(v["counts"]["inverse"], "yes");
}

#[test]
fn brt_regular_on_pair() {
    let (code, v) = json("verify brt-regular --model pair --points 2");
    assert_eq!(code, 0);
    let laws = v["laws"].as_array().unwrap();
    assert!(laws.len() >= 9);
    assert!(laws.iter().all(|l| l["status"] == "pass"));
}

#[test]
fn hpar_z2() {
    let (code, v) = json("verify hpar --group Z2");
    assert_eq!(code, 0);
    assert_eq!(v["counts"]["dim"], 3);
}

#[test]
fn bisection_iso_seventeen() {
    let (code, v) = json("verify bisection-iso --points 2 --group Z2");
    assert_eq!(code, 0);
    assert_eq!(v["counts"]["bisections"], 17);
    assert_eq!(v["counts"]["biretractions"], 17);
}

#[test]
fn torus_q2_certificate() {
    let (code, v) = json("verify torus-q1 --q 2/1");
    assert_eq!(code, 0);
    assert_eq!(v["counts"]["biretractions"], "none");
    assert!(v["details"].as_array().unwrap().iter().any(|d| d == "UV = 2·VU in T_q"));
}

#[test]
fn commutative_torus_has_the_family() {
    let (code, v) = json("verify torus-q1 --q 1 --q-alpha -3/2 --t-alpha 2");
    assert_eq!(code, 0);
    assert_eq!(v["counts"]["α"], "-3/2:2");
}

#[test]
fn every_theorem_id_runs() {
    for id in qisg_cli::verify::THEOREMS {
        let o = qisg(&format!("verify {id}"));
        let want = if *id == "kG-classification" { 1 } else { 0 };
        assert_eq!(o.code, want, "{id}: {}{}", o.stdout, o.stderr);
    }
    assert_eq!(qisg("verify kG-classification --model bundle").code, 0);
}

#[test]
fn mutation_is_caught() {
    let o = qisg("algebroid check mutation");
    assert_eq!(o.code, 1);
    assert!(o.stdout.contains("fail  at "), "{}", o.stdout);
}

#[test]
fn left_zero_semigroup_fails_with_one() {
    let p = scratch("lz.json", r#"{"kind":"semigroup","elements":["a","b"],"table":[["a","a"],["b","b"]]}"#);
    let o = qisg(&format!("semigroup check --file {}", p.display()));
    assert_eq!(o.code, 1, "{}", o.stdout);
    assert!(o.stdout.contains("idempotents commute"));
}

#[test]
fn input_errors_exit_two() {
    assert_eq!(qisg("verify no-such-theorem").code, 2);
    assert_eq!(qisg("qisg check nothing").code, 2);
    assert_eq!(qisg("qisg check").code, 2);
    assert_eq!(qisg("frobnicate").code, 2);
    assert_eq!(qisg("verify torus-q1 --q 1/0").code, 2);
    let p = scratch("bad.json", "{\n \"kind\": \"semigroup\",\n \"elements\": [\"e\"],\n \"table\": [[\"x\"]]\n}");
    let o = qisg(&format!("semigroup check --file {}", p.display()));
    assert_eq!(o.code, 2);
    assert!(o.stderr.contains("table[0][0]"), "{}", o.stderr);
}

#[test]
fn help_exits_zero() {
    let o = qisg("--help");
    assert_eq!(o.code, 0);
    assert!(o.stdout.contains("verify"));
}

#[test]
fn json_is_stable() {
    for line in ["qisg check rook --n 2 --seed 7", "algebroid biretractions pair --table", "verify qisg-span"] {
        let a = qisg(&format!("{line} --format json"));
        let b = qisg(&format!("{line} --format json"));
        assert_eq!(a.stdout, b.stdout, "{line}");
    }
}

#[test]
fn seed_adds_sampled_laws() {
    let (_, v) = json("qisg check hadamard --n 2 --seed 11");
    assert_eq!(v["seed"], 11);
    let names: Vec<&str> = v["laws"].as_array().unwrap().iter().map(|l| l["name"].as_str().unwrap()).collect();
    assert!(names.iter().any(|n| n.starts_with("sampled")));
}

#[test]
fn qisg_from_semigroup_file() {
    let p = scratch("z2.json", r#"{"kind":"semigroup","elements":["e","a"],"table":[["e","a"],["a","e"]]}"#);
    let (code, v) = json(&format!("qisg check --file {}", p.display()));
    assert_eq!(code, 0);
    assert_eq!(v["counts"]["dim"], 2);
}

#[test]
fn group_as_groupoid_file() {
    let body = r#"{"kind":"groupoid","objects":["x"],
        "arrows":[{"name":"1","source":"x","target":"x"},{"name":"a","source":"x","target":"x"}],
        "compose":[["1","1","1"],["1","a","a"],["a","1","a"],["a","a","1"]]}"#;
    let p = scratch("g.json", body);
    let (code, v) = json(&format!("groupoid bisections --file {} --check-inverse", p.display()));
    assert_eq!(code, 0);
    // the empty bisection, 1 and a
    assert_eq!(v["counts"]["bisections"], 3);
}

#[test]
fn algebroid_file_refers_to_registry() {
    let p = scratch("a.json", r#"{"kind":"algebroid","model":"weakhopf","groupoid":"bundle"}"#);
    let (code, v) = json(&format!("algebroid biretractions --file {}", p.display()));
    assert_eq!(code, 0);
    assert_eq!(v["counts"]["biretractions"], 9);
}

#[test]
fn structure_files_round_trip() {
    use qisg_cli::structure::canonicalize;
    let body = r#"{"kind":"qisg","basis":["1"],"products":[{"left":"1","right":"1","value":{"1":"1"}}],
        "unit":{"1":"1.00"},"comult":[{"of":"1","value":[["1","1","1"]]}],"counit":{"1":"1"},"antipode":{"1":{"1":"3/3"}}}"#;
    let once = canonicalize(body).unwrap();
    assert_eq!(canonicalize(&once).unwrap(), once);
    assert!(!once.contains("1.00") && !once.contains("3/3"), "{once}");
    let lz = r#"{"kind":"semigroup","elements":["a","b"],"table":[["a","a"],["b","b"]]}"#;
    let once = canonicalize(lz).unwrap();
    assert_eq!(canonicalize(&once).unwrap(), once);
}

#[test]
fn convolve_by_label_and_on_torus() {
    let (code, v) = json("brt convolve torus --q 1 --left 2:1 --right -1/3:-2");
    assert_eq!(code, 0);
    assert_eq!(v["counts"]["α∗β"], "-2/3:-1");
    assert_eq!(qisg("brt convolve torus --q 3 --left 1:0 --right 1:0").code, 2);
    assert_eq!(qisg("brt convolve pair --left 0 --right 99").code, 2);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_qisg");
    let ok = Command::new(bin).args(["verify", "hpar", "--group", "Z3"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("result: pass"));
    let red = Command::new(bin).args(["algebroid", "check", "mutation"]).output().unwrap();
    assert_eq!(red.status.code(), Some(1));
    let bad = Command::new(bin).args(["verify", "nope"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).starts_with("error:"));
}
