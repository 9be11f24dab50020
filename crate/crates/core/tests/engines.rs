use spherecert::meshlab::{build_diagonal_scene, obj_string, read_obj, summarize_scene, validate_scene};
use spherecert::oracle::{self, enumerate_tree_like};
use spherecert::pair_engine::pair_failure;
use spherecert::sketch::{build_sketch, pair_sketches, sketch_dual_tree};
use spherecert::triple_engine::{lemma2_split, triple_failure};
use spherecert::*;

fn seq(v: &[i64]) -> DegreeSequence {
    DegreeSequence::new(v.to_vec()).unwrap()
}

#[test]
fn pair_certificate_survives_json() {
    let (x, y) = (seq(&[1, 2, 2, 1, 3, 1]), seq(&[3, 3, 1, 1, 1, 1]));
    let cert = realize_pair(&x, &y).unwrap();
    let text = serde_json::to_string(&cert).unwrap();
    let back: PairCertificate = serde_json::from_str(&text).unwrap();
    assert_eq!(back, cert);
    assert!(verify_pair_certificate(&back, &x, &y).is_valid());
    // the certificate does not certify anything else
    assert!(!verify_pair_certificate(&back, &y, &x).is_valid());
}

#[test]
fn triple_certificate_survives_json() {
    let xs = [seq(&[2, 2, 1, 1]), seq(&[1, 3, 1, 1]), seq(&[2, 1, 2, 1, 2])];
    let cert = realize_triple(&xs[0], &xs[1], &xs[2]).unwrap();
    let text = serde_json::to_string(&cert).unwrap();
    let back: TripleCertificate = serde_json::from_str(&text).unwrap();
    assert_eq!(back, cert);
    assert!(verify_triple_certificate(&back, &xs[0], &xs[1], &xs[2]).is_valid());
    assert_eq!(back.m, [3, 3, 2]);
}

#[test]
fn triple_failures_are_named() {
    let (a, b) = (seq(&[1, 1]), seq(&[2, 1, 1]));
    assert_eq!(triple_failure([&a, &a, &a]).unwrap().as_str(), "parity");
    let five = seq(&[1, 1, 1, 1, 1]);
    assert_eq!(triple_failure([&a, &a, &five]).unwrap().as_str(), "triangle");
    let bad = seq(&[1, 1, 2]);
    assert!(triple_failure([&a, &a, &bad]).is_none());
    assert_eq!(triple_failure([&a, &b, &seq(&[3, 1, 1, 1])]), None);
    assert!(!decide_triple(&a, &b, &seq(&[1, 1, 1, 1])));
}

#[test]
fn pair_failures_are_named() {
    assert_eq!(pair_failure(&seq(&[1, 1]), &seq(&[2, 1, 1])).unwrap().as_str(), "length");
    assert_eq!(pair_failure(&seq(&[2, 2]), &seq(&[1, 1])).unwrap().as_str(), "x_not_tree_like");
    assert!(realize_pair(&seq(&[1, 1, 2]), &seq(&[3, 1, 1])).is_err());
}

#[test]
fn split_example() {
    let s = lemma2_split(&seq(&[3, 2, 1, 1, 1]), 3, 3).unwrap();
    assert_eq!((s.a, s.b, s.s), (seq(&[2, 1, 1]), seq(&[1, 2, 1]), 1));
}

#[test]
fn sketch_example_and_dual_tree() {
    let x = seq(&[3, 2, 1, 1, 1]);
    let s = build_sketch(&x).unwrap();
    assert_eq!(s.circles.len(), 4);
    let (t, num) = sketch_dual_tree(&s).unwrap();
    assert_eq!(dualtree::degree_sequence_of_tree(&t, &num).unwrap(), x);
    assert!(s.to_svg().starts_with("<svg"));
    assert!(pair_sketches(&x, &seq(&[2, 2, 2, 1, 1])).is_ok());
}

#[test]
fn scenes_for_every_five_region_sequence() {
    for x in enumerate_tree_like(5) {
        let scene = build_diagonal_scene(&x).unwrap();
        assert!(validate_scene(&scene, &x).is_valid(), "{x}");
        let summary = summarize_scene(&scene);
        assert_eq!(summary.f.region_degrees, summary.g.region_degrees);
        let reread = read_obj(&obj_string(&scene.mesh_g)).unwrap();
        assert_eq!(reread, scene.mesh_g);
    }
}

#[test]
fn sequential_and_parallel_reports_agree() {
    let a = oracle::cross_check_triples(4, Exec::Sequential);
    let b = oracle::cross_check_triples(4, Exec::Parallel);
    assert_eq!((a.checked, a.failed, &a.failures), (b.checked, b.failed, &b.failures));
    assert!(a.passed());
    let a = oracle::sweep_mesh(4, Exec::Sequential);
    let b = oracle::sweep_mesh(4, Exec::Parallel);
    assert_eq!((a.checked, &a.per_n.len()), (b.checked, &b.per_n.len()));
}
