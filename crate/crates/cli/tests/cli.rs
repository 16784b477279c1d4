use std::io::Write;
use std::process::{Command, Output, Stdio};

use reembed::census::CensusRow;
use reembed::{families, Surface};
use reembed_cli::{EmbeddingDump, ReEmbeddingRecord, WalkReport};

const K4: &str = "C~";

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_reembed")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn prism() -> String {
    reembed::emit_graph6(&families::prism())
}

#[test]
fn faces_of_k4_with_one_twist() {
    let o = run(&["faces", "-g", K4, "--twist", "1-2", "--format", "json"]);
    assert!(o.status.success());
    let r: WalkReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.walks, vec![vec![1, 2, 3, 1, 2, 4], vec![1, 3, 4], vec![2, 3, 4]]);
    assert_eq!((r.chi, r.orientable, r.surface, r.strong), (1, false, Surface::ProjectivePlane, false));
}

#[test]
fn faces_of_untwisted_k4() {
    let o = run(&["faces", "-g", K4, "-f", "json"]);
    let r: WalkReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.walks.len(), 4);
    assert!(r.walks.iter().all(|w| w.len() == 3));
    assert_eq!(r.surface, Surface::Sphere);
    assert!(r.strong);
}

#[test]
fn enumerate_k4_projective_strong() {
    let o = run(&["enumerate", "-g", K4, "--surface", "projective", "--strong", "-f", "json"]);
    assert!(o.status.success());
    let rs: Vec<ReEmbeddingRecord> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(rs.len(), 1);
    assert_eq!(rs[0].pattern.as_deref(), Some("K4"));
    assert_eq!(rs[0].twists, (0..6).collect::<Vec<_>>());
    assert!(rs[0].strong);
}

#[test]
fn enumerate_prism_klein_strong() {
    let o = run(&["enumerate", "-g", &prism(), "--surface", "klein", "--strong", "-f", "json"]);
    let rs: Vec<ReEmbeddingRecord> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(rs.len(), 1);
    assert_eq!(rs[0].pattern.as_deref(), Some("K_{2,3}"));
    assert_eq!(rs[0].surface, Surface::KleinBottle);
}

#[test]
fn empty_enumeration_succeeds() {
    let o = run(&["enumerate", "-g", K4, "--surface", "torus", "--strong"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("0 re-embedding(s)"));
}

#[test]
fn folding_reduces_k4_projective() {
    let o = run(&["enumerate", "-g", K4, "-s", "projective", "--fold-automorphisms", "-f", "json"]);
    let rs: Vec<ReEmbeddingRecord> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(rs.len(), 2);
}

#[test]
fn census_rows() {
    let o = run(&["census", "--max-n", "8", "--format", "csv"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "n,g,p,r,k\n4,1,1,0,0\n6,1,1,0,1\n8,2,1,1,2\n");
    let o = run(&["census", "--max-n", "4", "-f", "csv"]);
    assert_eq!(stdout(&o).lines().count(), 2);
}

#[test]
fn census_json_roundtrips() {
    let o = run(&["census", "--max-n", "10", "-f", "json", "--jobs", "2"]);
    let text = stdout(&o);
    let rows: Vec<CensusRow> = serde_json::from_str(&text).unwrap();
    assert_eq!(rows.last().unwrap(), &CensusRow { n: 10, g_count: 5, p_count: 4, r_count: 2, k_count: 5 });
    assert_eq!(serde_json::to_string_pretty(&rows).unwrap() + "\n", text);
}

#[test]
fn verify_small_census() {
    let o = run(&["verify", "--max-n", "8"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 4);
    assert!(text.contains("4/4 graphs passed"));
}

#[test]
fn jobs_do_not_change_output() {
    let a = run(&["census", "--max-n", "10", "-f", "csv", "--jobs", "1"]);
    let b = run(&["census", "--max-n", "10", "-f", "csv", "--jobs", "3"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn input_file_and_stdin() {
    let path = std::env::temp_dir().join(format!("reembed-cli-{}.g6", std::process::id()));
    std::fs::write(&path, format!(">>graph6<<{K4}\n{}\n", prism())).unwrap();
    let o = run(&["enumerate", "--input", path.to_str().unwrap(), "-s", "klein", "--strong", "-f", "json"]);
    std::fs::remove_file(&path).unwrap();
    let rs: Vec<ReEmbeddingRecord> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(rs.len(), 1);
    assert_eq!(rs[0].graph, prism());

    let mut child = Command::new(env!("CARGO_BIN_EXE_reembed"))
        .args(["faces", "--input", "-", "-f", "json"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"C~\n").unwrap();
    let o = child.wait_with_output().unwrap();
    let r: WalkReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.walks.len(), 4);
}

#[test]
fn embedding_dump() {
    let o = run(&["embed", "-g", &prism(), "-f", "json"]);
    let d: EmbeddingDump = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(d.edges.len(), 9);
    assert_eq!(d.faces.len(), 5);
    assert_eq!(d.rotation.len(), 6);
    assert!(d.rotation.values().all(|r| r.len() == 3));
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| run(args).status.code().unwrap();
    assert_eq!(code(&["faces", "-g", K4, "--twist", "1-9"]), 2);
    assert_eq!(code(&["faces", "-g", K4, "--twist", "12"]), 2);
    assert_eq!(code(&["faces", "-g", "!!"]), 2);
    assert_eq!(code(&["faces"]), 2);
    assert_eq!(code(&["census", "--max-n", "16"]), 2);
    // Non-planar, non-cubic, and a 4-vertex non-cubic graph.
    assert_eq!(code(&["faces", "-g", &reembed::emit_graph6(&families::k33())]), 3);
    assert_eq!(code(&["enumerate", "-g", &reembed::emit_graph6(&families::octahedron()), "-s", "torus"]), 3);
    assert_eq!(code(&["faces", "-g", "Cr"]), 3);
}

#[test]
fn records_roundtrip() {
    for s in ["projective", "torus", "klein"] {
        let o = run(&["enumerate", "-g", &prism(), "-s", s, "-f", "json"]);
        let text = stdout(&o);
        let rs: Vec<ReEmbeddingRecord> = serde_json::from_str(&text).unwrap();
        assert!(!rs.is_empty());
        assert_eq!(serde_json::to_string_pretty(&rs).unwrap() + "\n", text);
        let back: Vec<ReEmbeddingRecord> = serde_json::from_str(&serde_json::to_string(&rs).unwrap()).unwrap();
        assert_eq!(back, rs);
    }
}
