//! Homology-manifold recognition over a fixed field, boundary complexes,
//! and orientability.
//!
//! A pure (d-1)-complex is a homology manifold over k when every nonempty
//! face has a link with vanishing reduced homology below degree
//! d - |F| - 1 and top homology of dimension 0 or 1. Faces whose link has
//! vanishing top homology are the boundary faces. Manifoldness is
//! field-relative (the suspension of a mod-2 inhomology sphere is the
//! standard example), so every report is stamped with its field.
//!
//! The face scan checks each link independently; it is the crate's main
//! data-parallel loop.

use serde::Serialize;
use thiserror::Error;

use crate::complex::SimplicialComplex;
use crate::exec::{self, Execution};
use crate::field::FieldSpec;
use crate::homology::{betti, betti_relative};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ManifoldError {
    #[error("complex is not a homology manifold over the given field")]
    NotAManifold,
    #[error("complex is disconnected")]
    Disconnected,
}

/// A reason the manifold predicate failed, or a boundary defect.
#[derive(Debug, Clone, Serialize, PartialEq, Eq, PartialOrd, Ord)]
pub enum Witness {
    /// Facets of more than one dimension; the offending smaller facet.
    NotPure { facet: Vec<u32> },
    /// A link with nonvanishing homology where vanishing is required, or
    /// top homology of dimension > 1. Face in original labels.
    LinkHomology {
        face: Vec<u32>,
        degree: i64,
        betti: i64,
    },
    /// The boundary complex is not a closed homology manifold of
    /// dimension d - 2.
    BoundaryDefect { reason: String },
}

/// Everything the manifold predicate decides about one complex over one
/// field.
#[derive(Debug, Clone, Serialize)]
pub struct ManifoldReport {
    pub field: FieldSpec,
    pub is_manifold: bool,
    /// Boundary complex in the input's original labels; void when closed.
    pub boundary: SimplicialComplex,
    pub boundary_is_closed_manifold: bool,
    pub connected: bool,
    /// `None` when not a manifold or disconnected.
    pub orientable: Option<bool>,
    pub witnesses: Vec<Witness>,
}

impl ManifoldReport {
    pub fn has_boundary(&self) -> bool {
        !self.boundary.is_void()
    }

    /// Number of interior vertices f₀° = f₀(Δ) - f₀(∂Δ).
    pub fn interior_vertex_count(&self, cx: &SimplicialComplex) -> i64 {
        cx.n() as i64 - self.boundary.n() as i64
    }
}

/// Runs the face-link scan and assembles the report.
pub fn is_homology_manifold(cx: &SimplicialComplex, field: &FieldSpec) -> ManifoldReport {
    is_homology_manifold_with(cx, field, Execution::default())
}

pub fn is_homology_manifold_with(
    cx: &SimplicialComplex,
    field: &FieldSpec,
    ex: Execution,
) -> ManifoldReport {
    let d = cx.d() as i64;
    let mut witnesses: Vec<Witness> = Vec::new();

    if !cx.is_pure() {
        let top = cx.d();
        for f in cx.facets() {
            if f.len() < top {
                witnesses.push(Witness::NotPure {
                    facet: f.iter().map(|&v| cx.label_of(v)).collect(),
                });
            }
        }
    }

    let faces = cx.all_faces();
    struct Scan {
        witnesses: Vec<Witness>,
        is_boundary_face: bool,
    }
    let scans: Vec<Scan> = exec::map(ex, &faces, |face| {
        let link = cx.link(face).expect("enumerated face is present");
        let b = betti(&link, field);
        let top = d - face.vertices().len() as i64 - 1;
        let labelled: Vec<u32> = face.vertices().iter().map(|&v| cx.label_of(v)).collect();
        let mut witnesses = Vec::new();
        let get = |i: i64| -> i64 {
            let j = i + 1;
            if j < 0 || j as usize >= b.len() {
                0
            } else {
                b[j as usize]
            }
        };
        for i in -1..top {
            if get(i) != 0 {
                witnesses.push(Witness::LinkHomology {
                    face: labelled.clone(),
                    degree: i,
                    betti: get(i),
                });
            }
        }
        let top_betti = get(top);
        if top_betti > 1 {
            witnesses.push(Witness::LinkHomology {
                face: labelled,
                degree: top,
                betti: top_betti,
            });
        }
        Scan {
            witnesses,
            is_boundary_face: top_betti == 0,
        }
    });

    let mut boundary_faces: Vec<Vec<u32>> = Vec::new();
    for (face, scan) in faces.iter().zip(&scans) {
        if scan.is_boundary_face {
            boundary_faces.push(face.vertices().iter().map(|&v| cx.label_of(v)).collect());
        }
    }
    for scan in scans {
        witnesses.extend(scan.witnesses);
    }

    let facewise_ok = witnesses.is_empty() && cx.is_pure();

    let boundary = if boundary_faces.is_empty() {
        SimplicialComplex::void()
    } else {
        SimplicialComplex::build(&boundary_faces).expect("boundary faces are valid")
    };

    // The boundary, when present, must itself be a closed homology
    // manifold of dimension d - 2.
    let boundary_is_closed_manifold = if boundary.is_void() {
        true
    } else {
        let mut ok = true;
        if boundary.dim() != d - 2 {
            witnesses.push(Witness::BoundaryDefect {
                reason: format!(
                    "boundary has dimension {} instead of {}",
                    boundary.dim(),
                    d - 2
                ),
            });
            ok = false;
        } else {
            let sub = is_homology_manifold_with(&boundary, field, Execution::Sequential);
            if !sub.is_manifold {
                witnesses.push(Witness::BoundaryDefect {
                    reason: "boundary is not a homology manifold".to_string(),
                });
                ok = false;
            } else if sub.has_boundary() {
                witnesses.push(Witness::BoundaryDefect {
                    reason: "boundary has nonempty boundary".to_string(),
                });
                ok = false;
            }
        }
        ok
    };

    let connected = cx.component_count() == 1;
    let orientable = if facewise_ok && connected {
        if boundary.is_void() {
            let b = betti(cx, field);
            let get = |i: i64| -> i64 {
                let j = (i + 1) as usize;
                if j < b.len() {
                    b[j]
                } else {
                    0
                }
            };
            Some(get(d - 1) == get(0) + 1)
        } else {
            let rel = betti_relative(cx, &boundary, field).expect("boundary is a subcomplex");
            let top = rel.get(d as usize).copied().unwrap_or(0);
            Some(top == 1)
        }
    } else {
        None
    };

    witnesses.sort();
    ManifoldReport {
        field: field.clone(),
        is_manifold: facewise_ok,
        boundary,
        boundary_is_closed_manifold,
        connected,
        orientable,
        witnesses,
    }
}

/// The complex generated by the boundary faces; void when closed.
pub fn boundary_complex(
    cx: &SimplicialComplex,
    field: &FieldSpec,
) -> Result<SimplicialComplex, ManifoldError> {
    let report = is_homology_manifold(cx, field);
    if !report.is_manifold {
        return Err(ManifoldError::NotAManifold);
    }
    Ok(report.boundary)
}

/// Orientability over the field: top homology of (Δ, ∂Δ) has dimension 1.
/// Requires a connected homology manifold.
pub fn is_orientable(cx: &SimplicialComplex, field: &FieldSpec) -> Result<bool, ManifoldError> {
    let report = is_homology_manifold(cx, field);
    if !report.is_manifold {
        return Err(ManifoldError::NotAManifold);
    }
    if !report.connected {
        return Err(ManifoldError::Disconnected);
    }
    Ok(report.orientable.expect("manifold and connected"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::Face;

    fn cx(facets: &[&[u32]]) -> SimplicialComplex {
        SimplicialComplex::build(&facets.iter().map(|f| f.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn gf(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    fn octahedron() -> SimplicialComplex {
        cx(&[
            &[1, 3, 5],
            &[1, 3, 6],
            &[1, 4, 5],
            &[1, 4, 6],
            &[2, 3, 5],
            &[2, 3, 6],
            &[2, 4, 5],
            &[2, 4, 6],
        ])
    }

    fn rp2_6() -> SimplicialComplex {
        cx(&[
            &[1, 2, 3],
            &[1, 2, 4],
            &[1, 3, 5],
            &[1, 4, 6],
            &[1, 5, 6],
            &[2, 3, 6],
            &[2, 4, 5],
            &[2, 5, 6],
            &[3, 4, 5],
            &[3, 4, 6],
        ])
    }

    fn suspension_of(base: &SimplicialComplex, a: u32, b: u32) -> SimplicialComplex {
        let mut facets = Vec::new();
        for f in base.facets_by_label() {
            let mut fa = f.clone();
            fa.push(a);
            let mut fb = f;
            fb.push(b);
            facets.push(fa);
            facets.push(fb);
        }
        SimplicialComplex::build(&facets).unwrap()
    }

    #[test]
    fn octahedron_is_a_closed_orientable_manifold() {
        let r = is_homology_manifold(&octahedron(), &gf(2));
        assert!(r.is_manifold);
        assert!(!r.has_boundary());
        assert!(r.boundary_is_closed_manifold);
        assert_eq!(r.orientable, Some(true));
        assert!(r.witnesses.is_empty());
    }

    #[test]
    fn rp2_is_a_manifold_orientable_only_mod_2() {
        let c = rp2_6();
        let r2 = is_homology_manifold(&c, &gf(2));
        assert!(r2.is_manifold);
        assert_eq!(r2.orientable, Some(true));
        let r3 = is_homology_manifold(&c, &gf(3));
        assert!(r3.is_manifold);
        assert_eq!(r3.orientable, Some(false));
    }

    #[test]
    fn suspension_of_rp2_depends_on_the_field() {
        let s = suspension_of(&rp2_6(), 7, 8);
        // Over GF(3) the face-wise predicate holds but the two suspension
        // points come out as 0-dimensional "boundary", which is not a
        // closed 2-manifold.
        let r3 = is_homology_manifold(&s, &gf(3));
        assert!(r3.is_manifold, "{:?}", r3.witnesses);
        assert!(r3.has_boundary());
        assert_eq!(r3.boundary.n(), 2);
        assert_eq!(r3.boundary.dim(), 0);
        assert!(!r3.boundary_is_closed_manifold);

        // Over GF(2) the suspension vertices have links with H̃₁ ≠ 0.
        let r2 = is_homology_manifold(&s, &gf(2));
        assert!(!r2.is_manifold);
        assert!(r2
            .witnesses
            .iter()
            .any(|w| matches!(w, Witness::LinkHomology { degree: 1, .. })));
    }

    #[test]
    fn full_tetrahedron_is_a_ball() {
        let ball = cx(&[&[1, 2, 3, 4]]);
        let r = is_homology_manifold(&ball, &gf(2));
        assert!(r.is_manifold);
        assert!(r.has_boundary());
        assert!(r.boundary_is_closed_manifold);
        assert_eq!(r.boundary.f_vector(), vec![1, 4, 6, 4]);
        assert_eq!(r.orientable, Some(true));
        assert_eq!(r.interior_vertex_count(&ball), 0);
    }

    #[test]
    fn boundary_complex_of_closed_manifold_is_void() {
        let b = boundary_complex(&octahedron(), &gf(2)).unwrap();
        assert!(b.is_void());
    }

    #[test]
    fn mobius_band_boundary_and_orientability() {
        let m = cx(&[&[1, 2, 3], &[2, 3, 4], &[3, 4, 5], &[1, 4, 5], &[1, 2, 5]]);
        let r = is_homology_manifold(&m, &gf(2));
        assert!(r.is_manifold);
        assert_eq!(r.boundary.f_vector(), vec![1, 5, 5]);
        assert_eq!(r.orientable, Some(true), "everything is GF(2)-orientable");
        assert_eq!(is_orientable(&m, &gf(5)), Ok(false));
    }

    #[test]
    fn impure_complex_is_reported() {
        let c = cx(&[&[1, 2, 3], &[4, 5]]);
        let r = is_homology_manifold(&c, &gf(2));
        assert!(!r.is_manifold);
        assert!(r
            .witnesses
            .iter()
            .any(|w| matches!(w, Witness::NotPure { .. })));
        assert!(boundary_complex(&c, &gf(2)).is_err());
    }

    #[test]
    fn disconnected_manifold_has_no_orientability_verdict() {
        let two = cx(&[
            &[1, 2, 3],
            &[1, 2, 4],
            &[1, 3, 4],
            &[2, 3, 4],
            &[5, 6, 7],
            &[5, 6, 8],
            &[5, 7, 8],
            &[6, 7, 8],
        ]);
        let r = is_homology_manifold(&two, &gf(2));
        assert!(r.is_manifold);
        assert!(!r.connected);
        assert_eq!(r.orientable, None);
        assert_eq!(
            is_orientable(&two, &gf(2)),
            Err(ManifoldError::Disconnected)
        );
    }

    #[test]
    fn vertex_links_of_a_manifold_are_manifolds() {
        let c = octahedron();
        for v in 1..=c.n() as u32 {
            let link = c.link(&Face(vec![v])).unwrap();
            let r = is_homology_manifold(&link, &gf(2));
            assert!(r.is_manifold);
            assert_eq!(link.dim(), c.dim() - 1);
            assert!(!r.has_boundary(), "interior vertex has closed link");
        }
    }

    #[test]
    fn parallel_and_sequential_reports_agree() {
        let c = rp2_6();
        let a = is_homology_manifold_with(&c, &gf(2), Execution::Sequential);
        let b = is_homology_manifold_with(&c, &gf(2), Execution::Parallel);
        assert_eq!(a.is_manifold, b.is_manifold);
        assert_eq!(a.boundary, b.boundary);
        assert_eq!(a.witnesses, b.witnesses);
    }
}
