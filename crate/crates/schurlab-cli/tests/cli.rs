use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

use schurlab::algebra::{act_word, unit, Elem, Gen, Tensor};
use schurlab::schur_a::TypeA;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schurlab")).args(args).output().expect("binary runs")
}

fn run_env(args: &[&str], env: (&str, &str)) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schurlab"))
        .args(args)
        .env(env.0, env.1)
        .output()
        .expect("binary runs")
}

fn json(o: &Output) -> Value {
    assert!(o.status.success(), "stderr: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).expect("json output")
}

fn tmp(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name)
}

fn element_file(name: &str, x: &Elem, n: usize, d: u32) -> PathBuf {
    let doc = serde_json::json!({
        "basis": "standard",
        "ambient": {"type": "a", "n": n, "d": d},
        "terms": x,
    });
    let p = tmp(name);
    std::fs::write(&p, serde_json::to_string(&doc).unwrap()).unwrap();
    p
}

#[test]
fn unit_times_unit_is_unit() {
    let fam = TypeA::finite(3);
    let one = unit(&fam, 2);
    let p = element_file("unit.json", &one, 3, 2);
    let p = p.to_str().unwrap();
    let out = json(&run(&["multiply", "--n", "3", "--d", "2", "--in", p, "--in", p]));
    assert_eq!(out["terms"], serde_json::to_value(&one).unwrap());
    assert_eq!(out["ambient"]["n"], 3);
}

fn tensor_of(x: &Elem, y: &Elem) -> Tensor {
    let mut t = Tensor::zero();
    for (a, c) in x.iter() {
        for (b, e) in y.iter() {
            t.add_term(vec![a.clone(), b.clone()], &(c * e));
        }
    }
    t
}

#[test]
fn comult_of_e1_is_the_hopf_formula() {
    let fam = TypeA::finite(3);
    let one = unit(&fam, 1);
    let g = |w: &[Gen]| act_word(&fam, w, &one).unwrap();
    let want = &tensor_of(&g(&[Gen::E(1, 1)]), &g(&[Gen::K(1, 1)])) + &tensor_of(&one, &g(&[Gen::E(1, 1)]));
    let out = json(&run(&["comult", "--n", "3", "--d", "2", "--split", "1,1", "--word", "E 1"]));
    assert_eq!(out["terms"], serde_json::to_value(&want).unwrap());
}

#[test]
fn zeta_on_the_smallest_tensor_space_is_the_identity() {
    let o = run(&["zeta", "--type", "jmath", "--n", "3", "--d", "1", "--format", "csv"]);
    assert!(o.status.success());
    let text = String::from_utf8(o.stdout).unwrap();
    assert_eq!(text, "a,b,coeff\n[1],[1],1\n[2],[2],1\n[3],[3],1\n");
}

#[test]
fn verify_suites_pass_with_stamped_parameters() {
    for args in [
        vec!["verify", "epsilon", "--n", "2", "--d", "2"],
        vec!["verify", "oracle-xcheck", "--n", "2", "--d", "2", "--q-list", "3,5,7"],
        vec!["verify", "relations", "--type", "jmath", "--n", "3", "--d", "2"],
    ] {
        let out = json(&run(&args));
        assert_eq!(out["status"], "pass", "{args:?}");
        assert_eq!(out["version"], env!("CARGO_PKG_VERSION"));
        let n = args[args.iter().position(|a| *a == "--n").unwrap() + 1];
        assert_eq!(out["parameters"]["n"], n.parse::<u64>().unwrap());
        for c in out["certificates"].as_array().unwrap() {
            assert_eq!(c["status"], "pass");
            assert!(!c["parameters"].is_null());
            assert!(c["version"].is_string());
        }
    }
}

#[test]
fn validation_errors_exit_with_2() {
    // ȷ needs odd n
    assert_eq!(run(&["cb", "--type", "jmath", "--n", "4", "--d", "1"]).status.code(), Some(2));
    // comult needs a split
    assert_eq!(run(&["comult", "--n", "3", "--d", "2", "--word", "E 1"]).status.code(), Some(2));
    // bad generator word
    assert_eq!(run(&["multiply", "--n", "2", "--d", "1", "--word", "X 1"]).status.code(), Some(2));
    // relations are a coideal suite
    assert_eq!(run(&["verify", "relations", "--n", "3", "--d", "2"]).status.code(), Some(2));
}

#[test]
fn scale_guards_exit_with_3() {
    let o = run_env(&["verify", "oracle-xcheck", "--n", "2", "--d", "1", "--q-list", "3,5,7"], ("SCHURLAB_MAX_Q", "5"));
    assert_eq!(o.status.code(), Some(3));
    let o = run_env(&["verify", "oracle-xcheck", "--n", "3", "--d", "3", "--q-list", "3,5,7"], ("SCHURLAB_MAX_DIM", "2"));
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn output_is_deterministic() {
    let args = ["cb", "--n", "3", "--d", "2", "--format", "json"];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let p = tmp("cb.csv");
    let ps = p.to_str().unwrap();
    let c = run(&["cb", "--type", "affine-a", "--n", "2", "--d", "2", "--format", "csv", "--out", ps]);
    assert!(c.status.success());
    let first = std::fs::read(&p).unwrap();
    run(&["cb", "--type", "affine-a", "--n", "2", "--d", "2", "--format", "csv", "--out", ps]);
    assert_eq!(std::fs::read(&p).unwrap(), first);
}

#[test]
fn transfer_and_embed_round_out_the_commands() {
    let out = json(&run(&["transfer", "--n", "2", "--d", "3", "--word", "E 1"]));
    assert_eq!(out["ambient"]["d"], 1);
    let out = json(&run(&["embed", "--type", "jmath", "--n", "3", "--d", "1", "--word", "e 1"]));
    assert!(!out["terms"].as_array().unwrap().is_empty());
    let out = json(&run(&["comult", "--type", "imath", "--n", "3", "--d", "2", "--split", "1,1", "--word", "t"]));
    assert!(!out["terms"].as_array().unwrap().is_empty());
}
