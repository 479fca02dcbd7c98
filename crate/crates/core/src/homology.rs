//! Reduced simplicial homology over a fixed finite field, relative
//! homology of a pair, and the image dimension of the connecting map
//! H_{i-1}(Δ) → H_{i-1}(Δ, ∂Δ).
//!
//! The chain complex is always augmented (∂_0 sends every vertex to the
//! empty face), so absolute Betti numbers are reduced. Relative groups
//! are computed from the quotient of the augmented complexes; for a
//! nonempty subcomplex the empty face is quotiented away and the result
//! is ordinary relative homology, while relative to the void complex the
//! computation reproduces the reduced homology of the ambient complex.
//! Faces are ordered lexicographically in every matrix, so results are
//! deterministic.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::complex::{Face, SimplicialComplex};
use crate::exec::{self, Execution};
use crate::field::{image_dim_mod, FieldSpec, Matrix};
use crate::report::CheckReport;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HomologyError {
    #[error("boundary map index {0} out of range")]
    BadDimension(i64),
    #[error("index {0} out of range")]
    BadIndex(i64),
    #[error("not a subcomplex: face {0:?} missing from the ambient complex")]
    NotASubcomplex(Vec<u32>),
}

fn face_index(faces: &[Face]) -> BTreeMap<&[u32], usize> {
    faces
        .iter()
        .enumerate()
        .map(|(i, f)| (f.vertices(), i))
        .collect()
}

/// Matrix of ∂_i : C_i → C_{i-1} for the augmented chain complex, faces
/// ordered lexicographically, the face missing its j-th vertex signed
/// (-1)^j. Valid for -1 <= i <= dim.
pub fn boundary_matrix(
    cx: &SimplicialComplex,
    i: i64,
    field: &FieldSpec,
) -> Result<Matrix, HomologyError> {
    if i < -1 || i > cx.dim() {
        return Err(HomologyError::BadDimension(i));
    }
    let domain = cx.faces_of_dim(i);
    let codomain = cx.faces_of_dim(i - 1);
    let index = face_index(&codomain);
    let mut m = Matrix::new(codomain.len(), domain.len(), field.clone());
    for (col, face) in domain.iter().enumerate() {
        for (j, _) in face.vertices().iter().enumerate() {
            let mut sub = face.vertices().to_vec();
            sub.remove(j);
            let row = index[&sub[..]];
            let sign = if j % 2 == 0 { 1 } else { -1 };
            m.set(row, col, field.from_i64(sign));
        }
    }
    Ok(m)
}

/// Reduced Betti numbers β̃_{-1}, β̃_0, ..., β̃_{dim}; entry `i` is
/// β̃_{i-1}. Empty for the void complex.
pub fn betti(cx: &SimplicialComplex, field: &FieldSpec) -> Vec<i64> {
    betti_with(cx, field, Execution::default())
}

pub fn betti_with(cx: &SimplicialComplex, field: &FieldSpec, ex: Execution) -> Vec<i64> {
    if cx.is_void() {
        return Vec::new();
    }
    let dim = cx.dim();
    let dims: Vec<i64> = (0..=dim).collect();
    // rank(∂_i) for i = 0..=dim; ∂_{-1} and ∂_{dim+1} have rank 0.
    let ranks: Vec<usize> = exec::map(ex, &dims, |&i| {
        boundary_matrix(cx, i, field)
            .expect("index in range")
            .rank()
    });
    let rank = |i: i64| -> i64 {
        if i < 0 || i > dim {
            0
        } else {
            ranks[i as usize] as i64
        }
    };
    let mut out = Vec::with_capacity((dim + 2) as usize);
    for i in -1..=dim {
        let faces = cx.f_vector()[(i + 1) as usize];
        out.push(faces - rank(i) - rank(i + 1));
    }
    out
}

/// Membership test for a face of `cx` (dense ids) in the subcomplex `b`,
/// whose labels are `cx`'s original labels.
fn in_subcomplex(cx: &SimplicialComplex, b: &SimplicialComplex, face: &Face) -> bool {
    if face.vertices().is_empty() {
        return !b.is_void();
    }
    let mut dense = Vec::with_capacity(face.vertices().len());
    for &v in face.vertices() {
        let label = cx.label_of(v);
        match b.labels().binary_search(&label) {
            Ok(pos) => dense.push(pos as u32 + 1),
            Err(_) => return false,
        }
    }
    b.contains(&Face(dense))
}

/// Betti numbers of the pair (cx, b): homology of the quotient of the
/// augmented chain complexes. Entry `j` is β_{j-1}(cx, b). `b` must be a
/// subcomplex (labels interpreted as `cx`'s original labels); the void
/// complex is allowed and gives the reduced homology of `cx`.
pub fn betti_relative(
    cx: &SimplicialComplex,
    b: &SimplicialComplex,
    field: &FieldSpec,
) -> Result<Vec<i64>, HomologyError> {
    for facet in b.facets_by_label() {
        let dense: Result<Vec<u32>, _> = facet
            .iter()
            .map(|l| {
                cx.labels()
                    .binary_search(l)
                    .map(|p| p as u32 + 1)
                    .map_err(|_| HomologyError::NotASubcomplex(facet.clone()))
            })
            .collect();
        let dense = dense?;
        if !cx.contains(&Face(dense)) {
            return Err(HomologyError::NotASubcomplex(facet));
        }
    }

    let dim = cx.dim();
    // Relative faces per dimension, -1..=dim.
    let rel_faces: Vec<Vec<Face>> = (-1..=dim)
        .map(|i| {
            cx.faces_of_dim(i)
                .into_iter()
                .filter(|f| !in_subcomplex(cx, b, f))
                .collect()
        })
        .collect();
    let rel_matrix = |i: i64| -> Matrix {
        let domain = &rel_faces[(i + 1) as usize];
        let codomain: &[Face] = if i == -1 { &[] } else { &rel_faces[i as usize] };
        let index = face_index(codomain);
        let mut m = Matrix::new(codomain.len(), domain.len(), field.clone());
        for (col, face) in domain.iter().enumerate() {
            for (j, _) in face.vertices().iter().enumerate() {
                let mut sub = face.vertices().to_vec();
                sub.remove(j);
                if let Some(&row) = index.get(&sub[..]) {
                    let sign = if j % 2 == 0 { 1 } else { -1 };
                    m.set(row, col, field.from_i64(sign));
                }
            }
        }
        m
    };
    let ranks: Vec<usize> = (0..=dim).map(|i| rel_matrix(i).rank()).collect();
    let rank = |i: i64| -> i64 {
        if i < 0 || i > dim {
            0
        } else {
            ranks[i as usize] as i64
        }
    };
    let mut out = Vec::with_capacity((dim + 2) as usize);
    for i in -1..=dim {
        out.push(rel_faces[(i + 1) as usize].len() as i64 - rank(i) - rank(i + 1));
    }
    Ok(out)
}

/// dim Im(H_{i-1}(Δ) → H_{i-1}(Δ, ∂Δ)) for 1 <= i <= d, computed as
/// dim((Z + B_rel)/B_rel) where Z = ker ∂_{i-1} and B_rel is spanned by
/// ∂C_i(Δ) together with C_{i-1}(∂Δ). With empty boundary ψ is an
/// isomorphism and the reduced Betti number is returned.
pub fn im_psi(
    cx: &SimplicialComplex,
    boundary: &SimplicialComplex,
    i: i64,
    field: &FieldSpec,
) -> Result<i64, HomologyError> {
    let d = cx.d() as i64;
    if i < 1 || i > d {
        return Err(HomologyError::BadIndex(i));
    }
    if boundary.is_void() {
        return Ok(betti(cx, field)[i as usize]);
    }
    let cycles = boundary_matrix(cx, i - 1, field)?.kernel_basis();
    let faces = cx.faces_of_dim(i - 1);
    // At i = d there are no i-faces and the boundary summand is empty.
    let boundaries = if i > cx.dim() {
        Matrix::new(faces.len(), 0, field.clone())
    } else {
        boundary_matrix(cx, i, field)?
    };
    let in_b: Vec<usize> = faces
        .iter()
        .enumerate()
        .filter(|(_, f)| in_subcomplex(cx, boundary, f))
        .map(|(row, _)| row)
        .collect();
    let mut indicator = Matrix::new(faces.len(), in_b.len(), field.clone());
    for (col, &row) in in_b.iter().enumerate() {
        indicator.set(row, col, 1);
    }
    let b_rel = boundaries.hstack(&indicator).expect("same row space");
    Ok(image_dim_mod(&cycles, &b_rel).expect("same row space") as i64)
}

/// Reduced, boundary, relative Betti numbers and the ψ image dimensions
/// of one complex over one field.
#[derive(Debug, Clone, Serialize)]
pub struct BettiProfile {
    pub field: FieldSpec,
    /// Entry j is β̃_{j-1}(Δ).
    pub beta: Vec<i64>,
    /// Entry j is β̃_{j-1}(∂Δ); `None` when ∂Δ = ∅.
    pub beta_boundary: Option<Vec<i64>>,
    /// Entry j is β_{j-1}(Δ, ∂Δ).
    pub beta_relative: Vec<i64>,
    /// Entry i-1 is dim Im ψ_i for i = 1..=d.
    pub im_psi: Vec<i64>,
}

impl BettiProfile {
    /// Computes the full profile. `boundary` is the boundary complex in
    /// `cx`'s original labels; pass the void complex when ∂Δ = ∅.
    pub fn compute(
        cx: &SimplicialComplex,
        boundary: &SimplicialComplex,
        field: &FieldSpec,
    ) -> Result<Self, HomologyError> {
        let beta = betti(cx, field);
        let beta_boundary = if boundary.is_void() {
            None
        } else {
            Some(betti(boundary, field))
        };
        let beta_relative = betti_relative(cx, boundary, field)?;
        let d = cx.d() as i64;
        let im_psi_vals: Vec<i64> = (1..=d)
            .map(|i| im_psi(cx, boundary, i, field))
            .collect::<Result<_, _>>()?;
        Ok(BettiProfile {
            field: field.clone(),
            beta,
            beta_boundary,
            beta_relative,
            im_psi: im_psi_vals,
        })
    }

    /// β̃_i(Δ); zero outside the stored range (i = -1 is the empty-face
    /// degree).
    pub fn beta(&self, i: i64) -> i64 {
        idx(&self.beta, i)
    }

    /// β̃_i(∂Δ); zero for the empty boundary.
    pub fn beta_boundary(&self, i: i64) -> i64 {
        self.beta_boundary.as_ref().map_or(0, |b| idx(b, i))
    }

    /// β_i(Δ, ∂Δ).
    pub fn beta_relative(&self, i: i64) -> i64 {
        idx(&self.beta_relative, i)
    }

    /// dim Im ψ_i, with ψ_0 = 0 by convention.
    pub fn im_psi(&self, i: i64) -> i64 {
        if i < 1 || i as usize > self.im_psi.len() {
            0
        } else {
            self.im_psi[(i - 1) as usize]
        }
    }

    pub fn has_boundary(&self) -> bool {
        self.beta_boundary.is_some()
    }

    /// Σ (-1)^i β̃_i, which must equal the reduced Euler characteristic.
    pub fn euler_from_betti(&self) -> i64 {
        self.beta
            .iter()
            .enumerate()
            .map(|(j, &b)| if j % 2 == 0 { -b } else { b })
            .sum()
    }
}

fn idx(v: &[i64], dim_degree: i64) -> i64 {
    let j = dim_degree + 1;
    if j < 0 || j as usize >= v.len() {
        0
    } else {
        v[j as usize]
    }
}

/// Verifies the alternating-sum consequence of the long exact sequence of
/// the pair: for every 1 <= i <= d the truncated alternating sum of
/// relative, boundary and absolute Betti numbers equals dim Im ψ_i.
pub fn les_identity_check(
    cx: &SimplicialComplex,
    boundary: &SimplicialComplex,
    field: &FieldSpec,
) -> CheckReport {
    let mut report = CheckReport::new("long-exact-sequence identity");
    report.set_context("field", field.to_string());
    let profile = match BettiProfile::compute(cx, boundary, field) {
        Ok(p) => p,
        Err(e) => {
            report.condition(format!("betti profile: {e}"), false);
            return report;
        }
    };
    let d = cx.d() as i64;
    for i in 1..=d {
        let mut sum = 0i64;
        for j in 0..i {
            let sign = if (i - 1 - j) % 2 == 0 { 1 } else { -1 };
            sum += sign
                * (profile.beta_relative(j) - profile.beta_boundary(j - 1) + profile.beta(j - 1));
        }
        report.residual(format!("i={i}"), sum - profile.im_psi(i));
    }
    report.set_context("im_psi", profile.im_psi.clone());
    report
}
