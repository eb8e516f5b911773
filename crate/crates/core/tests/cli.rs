//! End-to-end checks of the `csgin` binary: exit codes, JSON shape,
//! determinism, and witness re-checkability from the report alone.

use std::path::PathBuf;
use std::process::{Command, Output};

use csgin::algebra::{Monomial, RingConfig, Variable};
use csgin::groebner::MonomialIdeal;
use csgin::multigrading::{is_borel_fixed, is_radical_monomial};

fn fixture(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("fixtures");
    p.push(name);
    p.display().to_string()
}

fn csgin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_csgin"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}): {}",
            String::from_utf8_lossy(&out.stdout)
        )
    })
}

/// Rebuilds a monomial ideal from the report payload so witnesses can be
/// re-verified with no pipeline state.
fn ideal_from_report(config: &serde_json::Value, gens: &serde_json::Value) -> MonomialIdeal {
    let blocks: Vec<usize> = config["blocks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|b| b.as_u64().unwrap() as usize)
        .collect();
    let prime = config["prime"].as_u64().unwrap();
    let ring = RingConfig::new(blocks, prime).unwrap();
    let monomials: Vec<Monomial> = gens
        .as_array()
        .unwrap()
        .iter()
        .map(|g| {
            let mut exps = vec![0u8; ring.var_count()];
            for pair in g.as_array().unwrap() {
                let row = pair[0].as_u64().unwrap() as usize;
                let col = pair[1].as_u64().unwrap() as usize;
                exps[ring.position(Variable::new(row, col)).unwrap()] += 1;
            }
            Monomial::from_exps(exps)
        })
        .collect();
    MonomialIdeal::new(ring, monomials)
}

#[test]
fn gin_on_path_graph() {
    let out = csgin(&["gin", "--graph", &fixture("path3.txt"), "--rows", "2"]);
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!(v["schema"], "csgin/report/1");
    assert_eq!(v["result"]["stable"], true);
    assert_eq!(v["result"]["generators"].as_array().unwrap().len(), 3);
}

#[test]
fn gin_on_parsed_generators() {
    let out = csgin(&[
        "gin",
        "--gens",
        &fixture("single_det.txt"),
        "--cols",
        "2",
        "--rows",
        "2",
    ]);
    assert!(out.status.success());
    let v = json_of(&out);
    let gens = v["result"]["generators"].as_array().unwrap();
    assert_eq!(gens.len(), 1);
    // generic coordinates turn the determinant's initial ideal into the
    // top-row product
    assert_eq!(gens[0], serde_json::json!([[1, 1], [1, 2]]));
}

#[test]
fn check_cs_exit_codes() {
    // a connected graph instance certifies
    let out = csgin(&["check-cs", "--graph", &fixture("path3.txt"), "--rows", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["result"]["status"], "CS_CERTIFIED");

    // witness re-check from the report alone: radical and Borel-fixed
    let witness = ideal_from_report(&v["config"], &v["result"]["witness"]["generators"]);
    assert!(is_radical_monomial(&witness));
    assert!(is_borel_fixed(&witness).unwrap());

    // the obstruction instance is refuted with a non-squarefree witness
    let out = csgin(&[
        "check-cs",
        "--hypergraph",
        &fixture("obstruction_3_1_5.txt"),
        "--rows",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(10));
    let v = json_of(&out);
    assert_eq!(v["result"]["status"], "NOT_CS");
    let witness = ideal_from_report(&v["config"], &v["result"]["witness"]["generators"]);
    assert!(!is_radical_monomial(&witness));

    // row grading flips the two-disjoint-edges instance
    let out = csgin(&[
        "check-cs",
        "--graph",
        &fixture("two_disjoint_edges.txt"),
        "--rows",
        "2",
        "--grading",
        "rows",
    ]);
    assert_eq!(out.status.code(), Some(10));

    // while the column grading certifies it
    let out = csgin(&[
        "check-cs",
        "--graph",
        &fixture("two_disjoint_edges.txt"),
        "--rows",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(0));

    // the zero ideal certifies with an empty gin
    let out = csgin(&[
        "check-cs",
        "--graph",
        &fixture("edgeless3.txt"),
        "--rows",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(
        v["result"]["witness"]["generators"].as_array().unwrap().len(),
        0
    );
}

#[test]
fn check_cs_cross_prime() {
    let out = csgin(&[
        "check-cs",
        "--graph",
        &fixture("single_edge.txt"),
        "--rows",
        "3",
        "--cross-check-prime",
        "1000003",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["result"]["cross_check"]["prime"], 1000003);
    assert_eq!(v["result"]["cross_check"]["agrees"], true);
}

#[test]
fn predict_verifies_against_engine() {
    let out = csgin(&[
        "predict",
        "--graph",
        &fixture("path3.txt"),
        "--rows",
        "2",
        "--verify",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["result"]["verify"]["match"], true);

    // single edge with three rows: the three predicted generators
    let out = csgin(&[
        "predict",
        "--graph",
        &fixture("single_edge.txt"),
        "--rows",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["result"]["generators"].as_array().unwrap().len(), 3);

    // edgeless graph: empty prediction
    let out = csgin(&[
        "predict",
        "--graph",
        &fixture("edgeless3.txt"),
        "--rows",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert!(v["result"]["generators"].as_array().unwrap().is_empty());
}

#[test]
fn predict_all_graphs_small() {
    let out = csgin(&["predict", "--all-graphs", "3", "--rows", "2", "--verify"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["result"]["instances"].as_array().unwrap().len(), 8);
    assert_eq!(v["result"]["all_match"], true);
}

#[test]
fn classify_fixtures() {
    let out = csgin(&[
        "classify",
        "--hypergraph",
        &fixture("cluster_forest.txt"),
        "--rows",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["result"]["class"], "CS_BY_FOREST");
    assert!(!v["result"]["forest_steps"].as_array().unwrap().is_empty());

    let out = csgin(&[
        "classify",
        "--hypergraph",
        &fixture("obstruction_3_1_5.txt"),
        "--rows",
        "3",
        "--verify",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["result"]["class"], "NOT_CS_BY_CYCLE");
    assert_eq!(v["result"]["verify"]["check_cs"], "NOT_CS");
    assert_eq!(v["result"]["verify"]["concordant"], true);
    assert!(!v["result"]["cycle"].as_array().unwrap().is_empty());

    // the classifier stays silent on the four-triangles example
    let out = csgin(&[
        "classify",
        "--hypergraph",
        &fixture("four_triangles.txt"),
        "--rows",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["result"]["class"], "UNKNOWN");

    let out = csgin(&[
        "classify",
        "--hypergraph",
        &fixture("window_chain.txt"),
        "--rows",
        "5",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["result"]["class"], "NOT_CS_BY_CYCLE");
    assert_eq!(v["result"]["regular_sequence"], "lead_coprime");
}

#[test]
fn complete_graph_fixtures_certify() {
    // K4 with m = 2: predicted and sampled gins agree
    let out = csgin(&[
        "predict",
        "--graph",
        &fixture("k4.txt"),
        "--rows",
        "2",
        "--verify",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["result"]["verify"]["match"], true);

    // the complete 2-uniform hypergraph is the full ideal of 2-minors
    let out = csgin(&[
        "check-cs",
        "--hypergraph",
        &fixture("complete_2u_4.txt"),
        "--rows",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn longer_obstruction_chain_classifies() {
    let out = csgin(&[
        "classify",
        "--hypergraph",
        &fixture("obstruction_3_3_9.txt"),
        "--rows",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["result"]["class"], "NOT_CS_BY_CYCLE");
    let cert = &v["result"]["regular_sequence"];
    assert_eq!(cert["window_starts"], serde_json::json!([1, 3, 5]));
    assert_eq!(cert["extra_edge"], serde_json::json!([1, 7, 8]));
}

#[test]
fn gin_of_four_triangles_hypergraph_is_not_squarefree() {
    let out = csgin(&[
        "gin",
        "--hypergraph",
        &fixture("four_triangles.txt"),
        "--rows",
        "3",
        "--samples",
        "2",
    ]);
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!(v["result"]["stable"], true);
    let gin = ideal_from_report(&v["config"], &v["result"]["generators"]);
    assert!(!is_radical_monomial(&gin));
}

#[test]
fn kpoly_of_determinant() {
    let out = csgin(&[
        "kpoly",
        "--gens",
        &fixture("single_det.txt"),
        "--cols",
        "2",
        "--rows",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    let terms = v["result"]["k_polynomial"].as_array().unwrap();
    assert_eq!(terms.len(), 2);
    assert_eq!(terms[0]["exponents"], serde_json::json!([0, 0]));
    assert_eq!(terms[0]["coeff"], 1);
    assert_eq!(terms[1]["exponents"], serde_json::json!([1, 1]));
    assert_eq!(terms[1]["coeff"], -1);
}

#[test]
fn psi_forward_and_inverse() {
    let out = csgin(&["psi", "--t-ideal", "y1*y2", "--blocks", "2,2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["result"]["roundtrip_ok"], true);
    assert_eq!(v["result"]["numerator_identity_ok"], true);

    // a non-Borel monomial ideal is rejected with the dedicated exit code
    let out = csgin(&[
        "psi",
        "--inverse",
        "--s-ideal",
        "x[2,1]*x[1,2]",
        "--blocks",
        "2,2",
    ]);
    assert_eq!(out.status.code(), Some(30));
}

#[test]
fn reports_are_byte_identical() {
    let args = [
        "check-cs",
        "--graph",
        &fixture("path3.txt"),
        "--rows",
        "2",
        "--samples",
        "2",
        "--seed",
        "7",
    ];
    let a = csgin(&args);
    let b = csgin(&args);
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.is_empty());
}

#[test]
fn timeout_exits_inconclusive() {
    let out = csgin(&[
        "check-cs",
        "--hypergraph",
        &fixture("four_triangles.txt"),
        "--rows",
        "3",
        "--timeout-secs",
        "0",
    ]);
    assert_eq!(out.status.code(), Some(20));
}

#[test]
fn bad_input_exits_nonzero() {
    let out = csgin(&["gin", "--graph", "/nonexistent/file.txt", "--rows", "2"]);
    assert_eq!(out.status.code(), Some(1));
    // --gens without ring flags
    let out = csgin(&["gin", "--gens", &fixture("single_det.txt")]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn output_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = csgin(&[
        "predict",
        "--graph",
        &fixture("single_edge.txt"),
        "--rows",
        "2",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["command"], "predict");
}
