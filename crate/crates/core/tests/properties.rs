//! Cross-module invariants that need the whole pipeline: duality of the
//! pair, link-of-vertex manifoldness, and the surjectivity consequence
//! on h'-numbers.

use facekit::complex::Face;
use facekit::face_ring::{artinian_reduction, links_lefschetz};
use facekit::field::FieldSpec;
use facekit::generators::*;
use facekit::homology::{betti, betti_relative};
use facekit::manifold::is_homology_manifold;
use facekit::vectors::{surjectivity_bound_check, FaceVectorSet};

fn gf(p: u64) -> FieldSpec {
    FieldSpec::prime(p).unwrap()
}

#[test]
fn poincare_lefschetz_duality_for_orientable_pairs() {
    // β_{i-1}(Δ, ∂Δ) = β̃_{d-i}(Δ) for 1 <= i < d, and the top relative
    // group pairs with unreduced H₀, so β_{d-1}(Δ, ∂Δ) = β̃₀ + 1.
    let cases: Vec<(&str, facekit::complex::SimplicialComplex, FieldSpec)> = vec![
        ("ball_3", simplex(3), gf(5)),
        ("cone_octahedron", cone(&octahedron(), None).unwrap(), gf(5)),
        ("mobius_5", mobius_5(), gf(2)),
        ("m5_9", kuhnel_lassman(5, 9).unwrap(), gf(2)),
    ];
    for (name, cx, field) in cases {
        let report = is_homology_manifold(&cx, &field);
        assert_eq!(report.orientable, Some(true), "{name}");
        let d = cx.d() as i64;
        let rel = betti_relative(&cx, &report.boundary, &field).unwrap();
        let abs = betti(&cx, &field);
        let get = |v: &[i64], degree: i64| v.get((degree + 1) as usize).copied().unwrap_or(0);
        for i in 1..d {
            assert_eq!(get(&rel, i - 1), get(&abs, d - i), "{name}: i={i}");
        }
        assert_eq!(get(&rel, d - 1), get(&abs, 0) + 1, "{name}: top degree");
    }
}

#[test]
fn vertex_links_are_manifolds_closed_iff_interior() {
    let gf2 = gf(2);
    for (name, cx) in [
        ("mobius_5", mobius_5()),
        ("m5_9", kuhnel_lassman(5, 9).unwrap()),
        ("cone_octahedron", cone(&octahedron(), None).unwrap()),
        ("torus_7", torus_7()),
    ] {
        let report = is_homology_manifold(&cx, &gf2);
        assert!(report.is_manifold, "{name}");
        let boundary_labels: Vec<u32> = report.boundary.labels().to_vec();
        for v in 1..=cx.n() as u32 {
            let link = cx.link(&Face(vec![v])).unwrap();
            let link_report = is_homology_manifold(&link, &gf2);
            assert!(link_report.is_manifold, "{name}: link of {v}");
            assert_eq!(link.dim(), cx.dim() - 1, "{name}: link of {v}");
            let interior = !boundary_labels.contains(&cx.label_of(v));
            assert_eq!(
                !link_report.has_boundary(),
                interior,
                "{name}: vertex {v} closed-link vs interior"
            );
        }
    }
}

#[test]
fn surjectivity_consequence_holds_under_lefschetz_links() {
    let big0 = FieldSpec::prime(65537).unwrap();
    let big2 = FieldSpec::extension(2, 16).unwrap();
    for (name, cx, field) in [
        ("octahedron", octahedron(), &big0),
        ("icosahedron", icosahedron(), &big0),
        ("torus_7", torus_7(), &big2),
        ("cp2_9", cp2_9(), &big0),
    ] {
        assert!(
            links_lefschetz(&cx, field, 0).unwrap(),
            "{name}: link certificate"
        );
        let fv = FaceVectorSet::compute(&cx, field).unwrap();
        let check = surjectivity_bound_check(&fv.h_prime, &fv.betti, fv.d);
        assert!(check.pass, "{name}: {check:?}");
    }
}

#[test]
fn schenzel_holds_on_every_manifold_fixture() {
    // Quotient dimensions equal h' for closed and bounded manifolds
    // alike, and the characteristic matters: over GF(65537) the
    // projective plane has trivial reduced homology, so its h' ends
    // in 0 rather than the characteristic-two value 1.
    let big0 = FieldSpec::prime(65537).unwrap();
    let big2 = FieldSpec::extension(2, 16).unwrap();
    let cases: Vec<(&str, facekit::complex::SimplicialComplex, &FieldSpec)> = vec![
        ("octahedron", octahedron(), &big0),
        ("icosahedron", icosahedron(), &big0),
        ("mobius_5/0", mobius_5(), &big0),
        ("mobius_5/2", mobius_5(), &big2),
        ("ball_3", simplex(3), &big0),
        ("cone_octahedron", cone(&octahedron(), None).unwrap(), &big0),
        ("torus_7", torus_7(), &big2),
        ("rp2_6/0", rp2_6(), &big0),
        ("rp2_6/2", rp2_6(), &big2),
        ("m4_8", kuhnel_lassman(4, 8).unwrap(), &big2),
    ];
    for (name, cx, field) in cases {
        let fv = FaceVectorSet::compute(&cx, field).unwrap();
        for seed in [0u64, 1, 2] {
            let q = artinian_reduction(&cx, field, seed, false).unwrap();
            let dims: Vec<i64> = q.dims.iter().map(|&x| x as i64).collect();
            assert_eq!(dims, fv.h_prime, "{name} seed {seed}");
        }
    }
    let rp2_char0 = FaceVectorSet::compute(&rp2_6(), &big0).unwrap();
    assert_eq!(rp2_char0.h_prime, vec![1, 3, 6, 0]);
    let rp2_char2 = FaceVectorSet::compute(&rp2_6(), &big2).unwrap();
    assert_eq!(rp2_char2.h_prime, vec![1, 3, 6, 1]);
}

#[test]
fn bundle_pipeline_values_are_frozen() {
    // Full pipeline on the 9-vertex cyclic 4-ball bundle over GF(2),
    // where it is orientable. Every sequence was derived by hand from
    // the transform, the Betti profile, and the boundary data.
    let m = kuhnel_lassman(5, 9).unwrap();
    let fv = FaceVectorSet::compute(&m, &gf(2)).unwrap();
    assert_eq!(fv.f, vec![1, 9, 36, 54, 36, 9]);
    assert_eq!(fv.h, vec![1, 4, 10, -10, 5, -1]);
    assert_eq!(fv.h_prime, vec![1, 4, 10, 0, 0, 0]);
    assert_eq!(fv.h_dprime.as_deref(), Some(&[0i64, 0, 0, 0, 0, 0][..]));
    assert_eq!(fv.gbar.as_deref(), Some(&[1i64, 4, 10, 0, -4, 0][..]));
    assert_eq!(fv.im_psi, vec![0, 0, 0, 0, 0]);
    assert_eq!(fv.betti, vec![0, 0, 1, 0, 0, 0]);
    assert_eq!(fv.betti_boundary.as_deref(), Some(&[0i64, 0, 1, 1, 1][..]));
    assert_eq!(fv.f0_interior(), 0);
    assert_eq!(fv.chi_tilde, -1);
}

#[test]
fn even_dimension_middle_branches_agree() {
    // For even d both h'' branches apply at i = d/2; the symmetry
    // identity makes them agree and the pipeline records the pair.
    for (name, cx, field) in [
        ("ball_3", simplex(3), gf(5)),
        ("cone_octahedron", cone(&octahedron(), None).unwrap(), gf(5)),
        ("m4_8", kuhnel_lassman(4, 8).unwrap(), gf(2)),
    ] {
        let fv = FaceVectorSet::compute(&cx, &field).unwrap();
        assert_eq!(fv.d % 2, 0, "{name}");
        let middle = fv
            .middle_agreement
            .unwrap_or_else(|| panic!("{name}: middle not recorded"));
        assert!(middle.agree(), "{name}: {middle:?}");
    }
}

#[test]
fn cone_over_octahedron_is_a_ball_with_octahedron_boundary() {
    let coned = cone(&octahedron(), None).unwrap();
    let report = is_homology_manifold(&coned, &gf(2));
    assert!(report.is_manifold);
    assert_eq!(coned.n(), 7);
    assert_eq!(report.boundary, octahedron());
    assert!(
        betti(&coned, &gf(2)).iter().all(|&b| b == 0),
        "ball is acyclic"
    );
}

#[test]
fn small_fixture_euler_characteristics() {
    assert_eq!(torus_7().reduced_euler(), -1);
    assert_eq!(rp2_6().reduced_euler(), 0);
    assert_eq!(mobius_5().reduced_euler(), -1);
    assert_eq!(cp2_9().reduced_euler(), 2);
}

#[test]
fn boundary_of_boundary_is_empty() {
    let gf2 = gf(2);
    for (name, cx) in [
        ("mobius_5", mobius_5()),
        ("ball_4", simplex(4)),
        ("m4_8", kuhnel_lassman(4, 8).unwrap()),
    ] {
        let report = is_homology_manifold(&cx, &gf2);
        assert!(report.has_boundary(), "{name}");
        let sub = is_homology_manifold(&report.boundary, &gf2);
        assert!(
            sub.is_manifold && !sub.has_boundary(),
            "{name}: ∂∂ nonempty"
        );
    }
}
