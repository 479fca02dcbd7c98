//! Constructions and named fixtures: simplices, spheres, cyclic
//! polytopes, cones, suspensions, unions, the cyclic ball-bundle family,
//! boundary connected sums, subdivisions, and coned-off boundaries.
//!
//! Constructions whose combinatorics are asserted rather than derived
//! (the cyclic ball bundles, boundary connected sums, the bundled
//! CP²-triangulation) are validated against their stated invariants and
//! fail loudly instead of returning a wrong complex.

use thiserror::Error;

use crate::complex::{ComplexError, SimplicialComplex};
use crate::field::FieldSpec;
use crate::homology::betti;
use crate::manifold::is_homology_manifold;
use crate::util::binomial;
use crate::vectors::f_to_h;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenError {
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("label sets overlap; relabel one side first")]
    LabelCollision,
    #[error("no complexes given")]
    EmptyInput,
    #[error("face {0:?} is not a facet")]
    FaceNotFacet(Vec<u32>),
    #[error("face {0:?} is not a boundary facet")]
    NotBoundaryFace(Vec<u32>),
    #[error("construction failed validation: {0}")]
    ValidationFailure(String),
    #[error("complex has empty boundary")]
    EmptyBoundary,
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

/// The full d-simplex on d+1 vertices.
pub fn simplex(d: usize) -> SimplicialComplex {
    SimplicialComplex::build(&[(1..=d as u32 + 1).collect()]).expect("valid facet")
}

/// Boundary of the d-simplex: the (d-1)-sphere on d+1 vertices.
pub fn boundary_simplex(d: usize) -> SimplicialComplex {
    let all: Vec<u32> = (1..=d as u32 + 1).collect();
    let facets: Vec<Vec<u32>> = (0..=d)
        .map(|skip| {
            all.iter()
                .enumerate()
                .filter(|(i, _)| *i != skip)
                .map(|(_, &v)| v)
                .collect()
        })
        .collect();
    SimplicialComplex::build(&facets).expect("valid facets")
}

fn max_label(cx: &SimplicialComplex) -> u32 {
    cx.labels().iter().copied().max().unwrap_or(0)
}

/// Cone with a fresh apex (max label + 1), or a chosen apex label that
/// must not collide with existing ones.
pub fn cone(cx: &SimplicialComplex, apex: Option<u32>) -> Result<SimplicialComplex, GenError> {
    let apex = apex.unwrap_or_else(|| max_label(cx) + 1);
    if cx.labels().contains(&apex) {
        return Err(GenError::LabelCollision);
    }
    if cx.is_void() || cx.is_irrelevant() {
        return Ok(SimplicialComplex::build(&[vec![apex]])?);
    }
    let facets: Vec<Vec<u32>> = cx
        .facets_by_label()
        .into_iter()
        .map(|mut f| {
            f.push(apex);
            f
        })
        .collect();
    Ok(SimplicialComplex::build(&facets)?)
}

/// Join with the two-point complex: two fresh apexes.
pub fn suspension(cx: &SimplicialComplex) -> Result<SimplicialComplex, GenError> {
    let a = max_label(cx) + 1;
    let b = a + 1;
    let mut facets = Vec::new();
    for f in cx.facets_by_label() {
        let mut fa = f.clone();
        fa.push(a);
        facets.push(fa);
        let mut fb = f;
        fb.push(b);
        facets.push(fb);
    }
    Ok(SimplicialComplex::build(&facets)?)
}

/// Join of two complexes on disjoint label sets.
pub fn join(a: &SimplicialComplex, b: &SimplicialComplex) -> Result<SimplicialComplex, GenError> {
    if a.labels().iter().any(|l| b.labels().contains(l)) {
        return Err(GenError::LabelCollision);
    }
    let mut facets = Vec::new();
    for fa in a.facets_by_label() {
        for fb in b.facets_by_label() {
            let mut f = fa.clone();
            f.extend_from_slice(&fb);
            facets.push(f);
        }
    }
    Ok(SimplicialComplex::build(&facets)?)
}

/// Union by shared labels: a facet list merge.
pub fn union(a: &SimplicialComplex, b: &SimplicialComplex) -> Result<SimplicialComplex, GenError> {
    let mut facets = a.facets_by_label();
    facets.extend(b.facets_by_label());
    Ok(SimplicialComplex::build(&facets)?)
}

/// Disjoint union: components relabelled into consecutive blocks.
pub fn disjoint_union(parts: &[&SimplicialComplex]) -> Result<SimplicialComplex, GenError> {
    if parts.is_empty() {
        return Err(GenError::EmptyInput);
    }
    let mut facets = Vec::new();
    let mut offset = 0u32;
    for part in parts {
        for f in part.facets() {
            facets.push(f.iter().map(|&v| v + offset).collect());
        }
        offset += part.n() as u32;
    }
    Ok(SimplicialComplex::build(&facets)?)
}

/// Boundary of the cyclic d-polytope with n vertices: the d-subsets of
/// `[n]` satisfying Gale's evenness condition.
pub fn cyclic_polytope_boundary(n: usize, d: usize) -> Result<SimplicialComplex, GenError> {
    if d < 2 || n < d + 1 {
        return Err(GenError::BadParams(format!(
            "need n >= d+1 >= 3, got n={n}, d={d}"
        )));
    }
    let verts: Vec<u32> = (1..=n as u32).collect();
    let mut facets = Vec::new();
    for subset in crate::complex::subsets_of_size(&verts, d) {
        let outside: Vec<u32> = verts
            .iter()
            .copied()
            .filter(|v| !subset.contains(v))
            .collect();
        let even = outside.iter().enumerate().all(|(x, &i)| {
            outside[x + 1..]
                .iter()
                .all(|&j| subset.iter().filter(|&&k| i < k && k < j).count() % 2 == 0)
        });
        if even {
            facets.push(subset);
        }
    }
    Ok(SimplicialComplex::build(&facets)?)
}

/// The cyclic (d-1)-ball bundle over the circle: facets
/// {i, i+1, ..., i+d-1} mod n. Validated against its stated invariants:
/// h₂ = C(d,2), every vertex on the boundary, and the boundary's first
/// Betti number (1 for d >= 5; 2 in characteristic two when d = 4).
pub fn kuhnel_lassman(d: usize, n: usize) -> Result<SimplicialComplex, GenError> {
    if d < 4 || n < 2 * d - 1 {
        return Err(GenError::BadParams(format!(
            "need d >= 4 and n >= 2d-1, got d={d}, n={n}"
        )));
    }
    let facets: Vec<Vec<u32>> = (0..n)
        .map(|i| (0..d).map(|j| ((i + j) % n) as u32 + 1).collect())
        .collect();
    let cx = SimplicialComplex::build(&facets)?;

    let h = f_to_h(&cx.f_vector(), d).expect("consistent dimensions");
    if h[2] != binomial(d as i64, 2) {
        return Err(GenError::ValidationFailure(format!(
            "h_2 = {} but C(d,2) = {}",
            h[2],
            binomial(d as i64, 2)
        )));
    }
    let gf2 = FieldSpec::prime(2).expect("2 is prime");
    let report = is_homology_manifold(&cx, &gf2);
    if !report.is_manifold || !report.boundary_is_closed_manifold {
        return Err(GenError::ValidationFailure(
            "not a manifold with manifold boundary".into(),
        ));
    }
    if report.interior_vertex_count(&cx) != 0 {
        return Err(GenError::ValidationFailure(
            "expected every vertex on the boundary".into(),
        ));
    }
    let beta_bd = betti(&report.boundary, &gf2);
    let expected_b1 = if d >= 5 { 1 } else { 2 };
    if beta_bd.get(2).copied().unwrap_or(0) != expected_b1 {
        return Err(GenError::ValidationFailure(format!(
            "boundary has first Betti number {:?}, expected {expected_b1}",
            beta_bd.get(2)
        )));
    }
    Ok(cx)
}

/// Glues two manifolds with boundary along one boundary facet each,
/// identifying vertices pointwise (`face_a[i]` with `face_b[i]`).
/// Validates that the result is still a homology manifold with boundary
/// over the given field.
pub fn boundary_connected_sum(
    a: &SimplicialComplex,
    face_a: &[u32],
    b: &SimplicialComplex,
    face_b: &[u32],
    field: &FieldSpec,
) -> Result<SimplicialComplex, GenError> {
    if face_a.len() != face_b.len() {
        return Err(GenError::BadParams(
            "identified faces differ in size".into(),
        ));
    }
    let bd_a = is_homology_manifold(a, field).boundary;
    let bd_b = is_homology_manifold(b, field).boundary;
    let mut fa = face_a.to_vec();
    fa.sort_unstable();
    let mut fb = face_b.to_vec();
    fb.sort_unstable();
    if !bd_a.facets_by_label().contains(&fa) {
        return Err(GenError::NotBoundaryFace(face_a.to_vec()));
    }
    if !bd_b.facets_by_label().contains(&fb) {
        return Err(GenError::NotBoundaryFace(face_b.to_vec()));
    }

    // Relabel b: identified vertices take a's labels, the rest are fresh.
    let mut fresh = max_label(a);
    let map = |v: u32, fresh: &mut u32, pairs: &[(u32, u32)]| -> u32 {
        match pairs.iter().find(|(from, _)| *from == v) {
            Some(&(_, to)) => to,
            None => {
                *fresh += 1;
                *fresh
            }
        }
    };
    let pairs: Vec<(u32, u32)> = face_b.iter().copied().zip(face_a.iter().copied()).collect();
    let mut relabel = std::collections::BTreeMap::new();
    let mut facets = a.facets_by_label();
    for f in b.facets_by_label() {
        let mapped: Vec<u32> = f
            .iter()
            .map(|&v| {
                *relabel
                    .entry(v)
                    .or_insert_with(|| map(v, &mut fresh, &pairs))
            })
            .collect();
        facets.push(mapped);
    }
    let glued = SimplicialComplex::build(&facets)?;
    let report = is_homology_manifold(&glued, field);
    if !report.is_manifold || !report.has_boundary() || !report.boundary_is_closed_manifold {
        return Err(GenError::ValidationFailure(
            "identification does not yield a manifold with boundary".into(),
        ));
    }
    Ok(glued)
}

/// Stellar subdivision of one facet: the facet is replaced by the cone
/// over its boundary with a fresh vertex.
pub fn stellar_subdivide_facet(
    cx: &SimplicialComplex,
    facet: &[u32],
) -> Result<SimplicialComplex, GenError> {
    let mut sorted = facet.to_vec();
    sorted.sort_unstable();
    if !cx.facets_by_label().contains(&sorted) {
        return Err(GenError::FaceNotFacet(facet.to_vec()));
    }
    let apex = max_label(cx) + 1;
    let mut facets: Vec<Vec<u32>> = cx
        .facets_by_label()
        .into_iter()
        .filter(|f| *f != sorted)
        .collect();
    for skip in 0..sorted.len() {
        let mut f: Vec<u32> = sorted
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != skip)
            .map(|(_, &v)| v)
            .collect();
        f.push(apex);
        facets.push(f);
    }
    Ok(SimplicialComplex::build(&facets)?)
}

/// Performs d successive stellar subdivisions inside one facet so that
/// the final complex has a facet all of whose vertices are interior.
/// Returns the complex and that facet (in labels). The postcondition is
/// validated with a manifold scan over the given field.
pub fn make_interior_facet(
    cx: &SimplicialComplex,
    facet: &[u32],
    field: &FieldSpec,
) -> Result<(SimplicialComplex, Vec<u32>), GenError> {
    let d = cx.d();
    let mut sorted = facet.to_vec();
    sorted.sort_unstable();
    if !cx.facets_by_label().contains(&sorted) {
        return Err(GenError::FaceNotFacet(facet.to_vec()));
    }
    let originals = sorted.clone();
    let mut current = cx.clone();
    let mut target = sorted;
    for &out in originals.iter().take(d) {
        let apex = max_label(&current) + 1;
        current = stellar_subdivide_facet(&current, &target)?;
        // Swap out the original vertices one at a time; the fresh apexes
        // accumulate until the whole facet is new.
        target.retain(|&v| v != out);
        target.push(apex);
        target.sort_unstable();
    }
    let report = is_homology_manifold(&current, field);
    if !report.is_manifold {
        return Err(GenError::ValidationFailure(
            "subdivision broke manifoldness".into(),
        ));
    }
    let boundary_labels = report.boundary.labels();
    if target.iter().any(|v| boundary_labels.contains(v)) {
        return Err(GenError::ValidationFailure(
            "target facet still touches the boundary".into(),
        ));
    }
    Ok((current, target))
}

/// Deletes one open facet, keeping all of its proper faces.
pub fn remove_facet(cx: &SimplicialComplex, facet: &[u32]) -> Result<SimplicialComplex, GenError> {
    let mut sorted = facet.to_vec();
    sorted.sort_unstable();
    if !cx.facets_by_label().contains(&sorted) {
        return Err(GenError::FaceNotFacet(facet.to_vec()));
    }
    let mut facets: Vec<Vec<u32>> = cx
        .facets_by_label()
        .into_iter()
        .filter(|f| *f != sorted)
        .collect();
    for skip in 0..sorted.len() {
        facets.push(
            sorted
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != skip)
                .map(|(_, &v)| v)
                .collect(),
        );
    }
    Ok(SimplicialComplex::build(&facets)?)
}

/// Cones off each boundary component with a fresh apex. Returns
/// (Γ, Σ): the capped complex and the union of the cones.
pub fn cone_off_boundary(
    cx: &SimplicialComplex,
    field: &FieldSpec,
) -> Result<(SimplicialComplex, SimplicialComplex), GenError> {
    let report = is_homology_manifold(cx, field);
    if !report.is_manifold {
        return Err(GenError::ValidationFailure(
            "not a homology manifold".into(),
        ));
    }
    if !report.has_boundary() {
        return Err(GenError::EmptyBoundary);
    }
    let boundary = &report.boundary;
    let mut apex = max_label(cx);
    let mut gamma_facets = cx.facets_by_label();
    let mut sigma_facets = Vec::new();
    for component in boundary.components() {
        apex += 1;
        let piece = boundary.restrict_to(&component);
        for f in piece.facets_by_label() {
            let mut coned = f;
            coned.push(apex);
            gamma_facets.push(coned.clone());
            sigma_facets.push(coned);
        }
    }
    let gamma = SimplicialComplex::build(&gamma_facets)?;
    let sigma = SimplicialComplex::build(&sigma_facets)?;
    Ok((gamma, sigma))
}

// ---------------------------------------------------------------------
// Named fixtures.
// ---------------------------------------------------------------------

/// The octahedron: a 2-sphere on 6 vertices, antipodal pairs (1,2),
/// (3,4), (5,6).
pub fn octahedron() -> SimplicialComplex {
    SimplicialComplex::build(&[
        vec![1, 3, 5],
        vec![1, 3, 6],
        vec![1, 4, 5],
        vec![1, 4, 6],
        vec![2, 3, 5],
        vec![2, 3, 6],
        vec![2, 4, 5],
        vec![2, 4, 6],
    ])
    .expect("valid facets")
}

/// The icosahedron: a 2-sphere on 12 vertices, 20 facets.
pub fn icosahedron() -> SimplicialComplex {
    SimplicialComplex::build(&[
        vec![1, 2, 3],
        vec![1, 3, 4],
        vec![1, 4, 5],
        vec![1, 5, 6],
        vec![1, 2, 6],
        vec![2, 3, 8],
        vec![3, 8, 9],
        vec![3, 4, 9],
        vec![4, 9, 10],
        vec![4, 5, 10],
        vec![5, 10, 11],
        vec![5, 6, 11],
        vec![6, 11, 7],
        vec![2, 6, 7],
        vec![2, 7, 8],
        vec![12, 7, 8],
        vec![12, 8, 9],
        vec![12, 9, 10],
        vec![12, 10, 11],
        vec![12, 11, 7],
    ])
    .expect("valid facets")
}

/// The 6-vertex real projective plane (icosahedron antipodal quotient).
pub fn rp2_6() -> SimplicialComplex {
    SimplicialComplex::build(&[
        vec![1, 2, 3],
        vec![1, 2, 4],
        vec![1, 3, 5],
        vec![1, 4, 6],
        vec![1, 5, 6],
        vec![2, 3, 6],
        vec![2, 4, 5],
        vec![2, 5, 6],
        vec![3, 4, 5],
        vec![3, 4, 6],
    ])
    .expect("valid facets")
}

/// The 7-vertex torus: cyclic facets {i, i+1, i+3} and {i, i+2, i+3}.
pub fn torus_7() -> SimplicialComplex {
    let mut facets = Vec::new();
    for i in 0..7u32 {
        facets.push(vec![i % 7 + 1, (i + 1) % 7 + 1, (i + 3) % 7 + 1]);
        facets.push(vec![i % 7 + 1, (i + 2) % 7 + 1, (i + 3) % 7 + 1]);
    }
    SimplicialComplex::build(&facets).expect("valid facets")
}

/// The 5-vertex Möbius band: cyclic strip {i, i+1, i+2} mod 5.
pub fn mobius_5() -> SimplicialComplex {
    let facets: Vec<Vec<u32>> = (0..5u32)
        .map(|i| vec![i % 5 + 1, (i + 1) % 5 + 1, (i + 2) % 5 + 1])
        .collect();
    SimplicialComplex::build(&facets).expect("valid facets")
}

/// The 9-vertex complex projective plane: 36 four-dimensional facets,
/// invariant under the translations of the 3x3 vertex grid (vertex
/// 3a + b + 1 for (a, b) in Z₃²). The list is the lexicographically
/// least representative of the translation-invariant triangulation; see
/// the derivation test, which regenerates it by exhaustive search.
pub fn cp2_9() -> SimplicialComplex {
    SimplicialComplex::build(&CP2_9_FACETS.iter().map(|f| f.to_vec()).collect::<Vec<_>>())
        .expect("valid facets")
}

pub(crate) const CP2_9_FACETS: [[u32; 5]; 36] = [
    [1, 2, 3, 4, 5],
    [1, 2, 3, 4, 6],
    [1, 2, 3, 5, 6],
    [1, 2, 4, 5, 7],
    [1, 2, 4, 6, 8],
    [1, 2, 4, 7, 8],
    [1, 2, 5, 6, 7],
    [1, 2, 6, 7, 9],
    [1, 2, 6, 8, 9],
    [1, 2, 7, 8, 9],
    [1, 3, 4, 5, 9],
    [1, 3, 4, 6, 9],
    [1, 3, 5, 6, 7],
    [1, 3, 5, 7, 8],
    [1, 3, 5, 8, 9],
    [1, 3, 6, 7, 9],
    [1, 3, 7, 8, 9],
    [1, 4, 5, 7, 8],
    [1, 4, 5, 8, 9],
    [1, 4, 6, 8, 9],
    [2, 3, 4, 5, 9],
    [2, 3, 4, 6, 8],
    [2, 3, 4, 7, 8],
    [2, 3, 4, 7, 9],
    [2, 3, 5, 6, 8],
    [2, 3, 5, 8, 9],
    [2, 3, 7, 8, 9],
    [2, 4, 5, 7, 9],
    [2, 5, 6, 7, 9],
    [2, 5, 6, 8, 9],
    [3, 4, 6, 7, 8],
    [3, 4, 6, 7, 9],
    [3, 5, 6, 7, 8],
    [4, 5, 6, 7, 8],
    [4, 5, 6, 7, 9],
    [4, 5, 6, 8, 9],
];

/// Looks up a bundled fixture by name.
pub fn fixture(name: &str) -> Option<SimplicialComplex> {
    match name {
        "octahedron" => Some(octahedron()),
        "icosahedron" => Some(icosahedron()),
        "rp2_6" => Some(rp2_6()),
        "torus_7" => Some(torus_7()),
        "mobius_5" => Some(mobius_5()),
        "cp2_9" => Some(cp2_9()),
        _ => None,
    }
}

pub const FIXTURE_NAMES: [&str; 6] = [
    "octahedron",
    "icosahedron",
    "rp2_6",
    "torus_7",
    "mobius_5",
    "cp2_9",
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::homology::betti;
    use crate::vectors::f_to_h;

    fn gf(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    #[test]
    fn simplex_and_boundary() {
        let s = simplex(3);
        assert_eq!(s.f_vector(), vec![1, 4, 6, 4, 1]);
        let b = boundary_simplex(3);
        assert_eq!(b.f_vector(), vec![1, 4, 6, 4]);
        assert_eq!(betti(&b, &gf(2)), vec![0, 0, 0, 1]);
    }

    #[test]
    fn cone_adds_faces_by_the_pascal_rule() {
        for base in [octahedron(), rp2_6(), boundary_simplex(2)] {
            let c = cone(&base, None).unwrap();
            let f = base.f_vector();
            let fc = c.f_vector();
            for (i, &count) in fc.iter().enumerate() {
                let prev = if i == 0 {
                    0
                } else {
                    f.get(i - 1).copied().unwrap_or(0)
                };
                assert_eq!(count, f.get(i).copied().unwrap_or(0) + prev, "i={i}");
            }
        }
    }

    #[test]
    fn closed_star_is_cone_over_link() {
        for cx in [octahedron(), rp2_6(), torus_7()] {
            for v in 1..=cx.n() as u32 {
                let star = cx.closed_star(v).unwrap();
                let link = cx.link(&crate::complex::Face(vec![v])).unwrap();
                let coned = cone(&link, Some(cx.label_of(v))).unwrap();
                assert_eq!(star, coned, "vertex {v}");
            }
        }
    }

    #[test]
    fn suspension_of_sphere_is_sphere() {
        let s = suspension(&boundary_simplex(2)).unwrap();
        assert_eq!(betti(&s, &gf(3)), vec![0, 0, 0, 1]);
    }

    #[test]
    fn join_of_two_circles_is_s3() {
        let a = boundary_simplex(2);
        let b = boundary_simplex(2).shift_labels(3);
        let j = join(&a, &b).unwrap();
        assert_eq!(j.f_vector(), vec![1, 6, 15, 18, 9]);
        assert_eq!(f_to_h(&j.f_vector(), 4).unwrap(), vec![1, 2, 3, 2, 1]);
        assert_eq!(betti(&j, &gf(2)), vec![0, 0, 0, 0, 1]);
        assert!(matches!(
            join(&a, &boundary_simplex(2)),
            Err(GenError::LabelCollision)
        ));
    }

    #[test]
    fn disjoint_union_relabels() {
        let u = disjoint_union(&[&boundary_simplex(2), &boundary_simplex(2)]).unwrap();
        assert_eq!(u.n(), 6);
        assert_eq!(u.component_count(), 2);
        assert!(disjoint_union(&[]).is_err());
    }

    #[test]
    fn cyclic_polytope_small_cases() {
        let c = cyclic_polytope_boundary(5, 4).unwrap();
        assert_eq!(c, boundary_simplex(4));

        let c = cyclic_polytope_boundary(8, 4).unwrap();
        assert_eq!(c.f_vector()[2], binomial(8, 2)); // 2-neighborly
        assert_eq!(betti(&c, &gf(2)), vec![0, 0, 0, 0, 1]);

        let c = cyclic_polytope_boundary(7, 4).unwrap();
        let h = f_to_h(&c.f_vector(), 4).unwrap();
        let rev: Vec<i64> = h.iter().rev().copied().collect();
        assert_eq!(h, rev, "sphere h-vector is symmetric");

        assert!(cyclic_polytope_boundary(3, 4).is_err());
    }

    #[test]
    fn kuhnel_lassman_family_validates() {
        let m59 = kuhnel_lassman(5, 9).unwrap();
        let h = f_to_h(&m59.f_vector(), 5).unwrap();
        assert_eq!(h[2], 10);
        assert_eq!(m59.f_vector()[2], 36);

        let m48 = kuhnel_lassman(4, 8).unwrap();
        let h = f_to_h(&m48.f_vector(), 4).unwrap();
        assert_eq!(h[2], 6);

        assert!(kuhnel_lassman(3, 9).is_err());
        assert!(kuhnel_lassman(5, 8).is_err());
    }

    #[test]
    fn kuhnel_lassman_matrix_of_parameters() {
        for d in [4usize, 5, 6] {
            for n in (2 * d - 1)..=(2 * d + 3) {
                let cx = kuhnel_lassman(d, n).unwrap_or_else(|e| panic!("d={d}, n={n}: {e}"));
                let h = f_to_h(&cx.f_vector(), d).unwrap();
                assert_eq!(h[2], binomial(d as i64, 2), "d={d}, n={n}");
            }
        }
    }

    #[test]
    fn stellar_subdivision_grows_h2_by_one() {
        let b = boundary_simplex(3);
        let facet = b.facets_by_label()[0].clone();
        let sub = stellar_subdivide_facet(&b, &facet).unwrap();
        assert_eq!(sub.f_vector(), vec![1, 5, 9, 6]);
        let h0 = f_to_h(&b.f_vector(), 3).unwrap();
        let h1 = f_to_h(&sub.f_vector(), 3).unwrap();
        assert_eq!(h1[2] - h0[2], 1);
        assert!(stellar_subdivide_facet(&b, &[1, 2]).is_err());
    }

    #[test]
    fn remove_facet_keeps_proper_faces() {
        let b = boundary_simplex(3);
        let facet = b.facets_by_label()[0].clone();
        let open = remove_facet(&b, &facet).unwrap();
        let f = open.f_vector();
        assert_eq!(f[..3], b.f_vector()[..3]);
        assert_eq!(f[3], b.f_vector()[3] - 1);
        let report = is_homology_manifold(&open, &gf(2));
        assert!(report.is_manifold);
        assert_eq!(report.boundary.f_vector(), vec![1, 3, 3]);
    }

    #[test]
    fn cone_off_ball_gives_sphere() {
        let ball = simplex(3);
        let (gamma, sigma) = cone_off_boundary(&ball, &gf(2)).unwrap();
        assert_eq!(gamma.n(), 5);
        assert_eq!(gamma, boundary_simplex(4));
        assert_eq!(sigma.n(), 5);
        assert_eq!(betti(&gamma, &gf(2)), vec![0, 0, 0, 0, 1]);
        assert!(cone_off_boundary(&octahedron(), &gf(2)).is_err());
    }

    #[test]
    fn cone_off_counts_match() {
        let m = mobius_5();
        let (gamma, _sigma) = cone_off_boundary(&m, &gf(2)).unwrap();
        let report = is_homology_manifold(&m, &gf(2));
        assert_eq!(gamma.n(), m.n() + 1);
        assert_eq!(
            gamma.f_vector()[2],
            m.f_vector()[2] + report.boundary.f_vector()[1]
        );
    }

    #[test]
    fn fixtures_have_their_documented_profiles() {
        assert_eq!(octahedron().f_vector(), vec![1, 6, 12, 8]);
        assert_eq!(icosahedron().f_vector(), vec![1, 12, 30, 20]);
        assert_eq!(betti(&icosahedron(), &gf(5)), vec![0, 0, 0, 1]);
        assert_eq!(rp2_6().f_vector(), vec![1, 6, 15, 10]);
        assert_eq!(betti(&rp2_6(), &gf(2)), vec![0, 0, 1, 1]);
        assert_eq!(betti(&rp2_6(), &gf(3)), vec![0, 0, 0, 0]);
        assert_eq!(torus_7().f_vector(), vec![1, 7, 21, 14]);
        assert_eq!(betti(&torus_7(), &gf(5)), vec![0, 0, 2, 1]);
        assert_eq!(betti(&torus_7(), &gf(2)), vec![0, 0, 2, 1]);
        assert_eq!(mobius_5().f_vector(), vec![1, 5, 10, 5]);
        assert_eq!(betti(&mobius_5(), &gf(2)), vec![0, 0, 1, 0]);
    }

    #[test]
    fn fixture_lookup() {
        for name in FIXTURE_NAMES {
            assert!(fixture(name).is_some(), "{name}");
        }
        assert!(fixture("nope").is_none());
    }
}
