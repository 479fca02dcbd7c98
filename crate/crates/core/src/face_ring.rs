//! Stanley-Reisner face rings: graded dimensions, Artinian reductions by
//! certified-generic linear forms, algebraic rigidity, and hard Lefschetz
//! rank checks.
//!
//! Genericity is probabilistic: coefficients are drawn from a field of
//! size at least 2^16 with a seeded generator, and a linear system of
//! parameters is certified by the facet-rank criterion (every facet's
//! column submatrix of the coefficient rows has full rank). Draws retry a
//! bounded number of times; every result carries its seed so runs replay
//! exactly. Quotient dimensions are computed degree by degree from
//! explicit relation matrices; the degrees needed never exceed d + 1 and
//! the bases stay small, so no Gröbner machinery is involved.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;
use thiserror::Error;

use crate::complex::SimplicialComplex;
use crate::field::{FieldSpec, Matrix};
use crate::generators::{cone_off_boundary, GenError};
use crate::homology::betti;
use crate::report::CheckReport;
use crate::util::{binomial, DetRng};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RingError {
    #[error("field of size {0} is too small; need at least 2^16")]
    FieldTooSmall(u64),
    #[error("no certified linear system of parameters after {0} attempts")]
    GenericityFailure(u32),
    #[error("degree {0} out of range")]
    DegreeOutOfRange(usize),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error(transparent)]
    Gen(#[from] GenError),
}

const MIN_FIELD_SIZE: u64 = 1 << 16;
const LSOP_ATTEMPTS: u32 = 8;

/// A monomial as a sorted multiset of dense vertex ids: x₁²x₃ = `[1,1,3]`.
pub type Monomial = Vec<u32>;

/// All degree-q monomials supported on faces, lexicographically ordered.
pub fn monomial_basis(cx: &SimplicialComplex, degree: usize) -> Vec<Monomial> {
    if degree == 0 {
        return vec![vec![]];
    }
    let mut out = BTreeSet::new();
    for face in cx.all_faces() {
        let verts = face.vertices();
        if verts.is_empty() || verts.len() > degree {
            continue;
        }
        // Compositions of `degree` into |verts| positive parts.
        let mut exps = vec![1usize; verts.len()];
        let spare = degree - verts.len();
        compositions(spare, 0, &mut exps, &mut |exps| {
            let mut mono = Vec::with_capacity(degree);
            for (v, &e) in verts.iter().zip(exps.iter()) {
                for _ in 0..e {
                    mono.push(*v);
                }
            }
            out.insert(mono);
        });
    }
    out.into_iter().collect()
}

fn compositions(spare: usize, from: usize, exps: &mut Vec<usize>, emit: &mut impl FnMut(&[usize])) {
    if spare == 0 {
        emit(exps);
        return;
    }
    if from == exps.len() {
        return;
    }
    for extra in 0..=spare {
        exps[from] += extra;
        compositions(spare - extra, from + 1, exps, emit);
        exps[from] -= extra;
    }
}

/// dim of the q-th graded piece of the face ring: the number of
/// degree-q monomials supported on faces.
pub fn hilbert_dim(cx: &SimplicialComplex, degree: usize) -> usize {
    monomial_basis(cx, degree).len()
}

/// Coefficient of λ^q in (Σ h_i λ^i) / (1-λ)^d, the series form of the
/// same dimension.
pub fn hilbert_series_coefficient(h: &[i64], d: usize, q: usize) -> i64 {
    let d = d as i64;
    let q = q as i64;
    (0..=q.min(d))
        .map(|i| h[i as usize] * binomial(q - i + d - 1, d - 1))
        .sum()
}

/// Cached monomial bases of one complex up to a degree bound.
struct Presentation {
    n: usize,
    faces: BTreeSet<Vec<u32>>,
    bases: Vec<Vec<Monomial>>,
    index: Vec<HashMap<Monomial, usize>>,
}

impl Presentation {
    fn new(cx: &SimplicialComplex, up_to: usize) -> Self {
        let faces: BTreeSet<Vec<u32>> = cx
            .all_faces()
            .into_iter()
            .map(|f| f.vertices().to_vec())
            .collect();
        let bases: Vec<Vec<Monomial>> = (0..=up_to).map(|q| monomial_basis(cx, q)).collect();
        let index = bases
            .iter()
            .map(|b| b.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect())
            .collect();
        Presentation {
            n: cx.n(),
            faces,
            bases,
            index,
        }
    }

    fn dim(&self, q: usize) -> usize {
        self.bases[q].len()
    }

    fn is_face(&self, support: &[u32]) -> bool {
        self.faces.contains(support)
    }

    /// Matrix of multiplication by a linear form from degree q to q + 1.
    fn mult_matrix(&self, form: &[u64], q: usize, field: &FieldSpec) -> Matrix {
        let domain = &self.bases[q];
        let mut m = Matrix::new(self.dim(q + 1), domain.len(), field.clone());
        for (col, mono) in domain.iter().enumerate() {
            for v in 1..=self.n as u32 {
                let coeff = form[(v - 1) as usize];
                if coeff == 0 {
                    continue;
                }
                let mut prod = mono.clone();
                let pos = prod.partition_point(|&w| w <= v);
                prod.insert(pos, v);
                let mut support = prod.clone();
                support.dedup();
                if !self.is_face(&support) {
                    continue;
                }
                let row = self.index[q + 1][&prod];
                m.set(row, col, coeff);
            }
        }
        m
    }

    /// Degree-q relations of the ideal generated by the given forms:
    /// the columns θ_j · m for every basis monomial m of degree q - 1.
    fn relations(&self, thetas: &[Vec<u64>], q: usize, field: &FieldSpec) -> Matrix {
        let mut acc = Matrix::new(self.dim(q), 0, field.clone());
        for theta in thetas {
            let m = self.mult_matrix(theta, q - 1, field);
            acc = acc.hstack(&m).expect("same degree");
        }
        acc
    }
}

fn draw_forms(n: usize, count: usize, field: &FieldSpec, rng: &mut DetRng) -> Vec<Vec<u64>> {
    (0..count)
        .map(|_| (0..n).map(|_| field.random(rng)).collect())
        .collect()
}

/// Facet-rank criterion: the coefficient rows of the first d forms
/// restricted to each facet's columns must have rank |facet|.
fn lsop_certified(cx: &SimplicialComplex, thetas: &[Vec<u64>], field: &FieldSpec) -> bool {
    let d = cx.d();
    for facet in cx.facets() {
        let mut m = Matrix::new(d.min(thetas.len()), facet.len(), field.clone());
        for (r, theta) in thetas.iter().take(d).enumerate() {
            for (c, &v) in facet.iter().enumerate() {
                m.set(r, c, theta[(v - 1) as usize]);
            }
        }
        if m.rank() != facet.len() {
            return false;
        }
    }
    true
}

/// An Artinian reduction `k[Δ]/(θ₁, …, θ_d)`, with an optional extra
/// generic form ω kept aside as a multiplication operator.
#[derive(Serialize)]
pub struct GradedQuotient {
    pub field: FieldSpec,
    pub seed: u64,
    /// Number of forms drawn; the quotient always divides by the first d.
    pub theta_count: usize,
    /// Dimensions of the quotient in degrees 0..=d.
    pub dims: Vec<usize>,
    pub lsop_certificate: bool,
    #[serde(skip)]
    complex: SimplicialComplex,
    #[serde(skip)]
    thetas: Vec<Vec<u64>>,
    #[serde(skip)]
    pres: Presentation,
}

/// Draws d (or d+1 with `extra_omega`) seeded random linear forms,
/// certifies the first d as a linear system of parameters with bounded
/// retries, and computes the quotient dimensions degree by degree.
///
/// The quotient is always by the first d forms; the optional extra form
/// serves as a multiplication operator.
pub fn artinian_reduction(
    cx: &SimplicialComplex,
    field: &FieldSpec,
    seed: u64,
    extra_omega: bool,
) -> Result<GradedQuotient, RingError> {
    if field.size() < MIN_FIELD_SIZE {
        return Err(RingError::FieldTooSmall(field.size()));
    }
    let d = cx.d();
    let count = if extra_omega { d + 1 } else { d };
    // Quotient dimensions and ω-multiplications never leave degree d.
    let pres = Presentation::new(cx, d);
    for attempt in 0..LSOP_ATTEMPTS {
        let mut rng = DetRng::derive(seed, attempt as u64);
        let thetas = draw_forms(cx.n(), count, field, &mut rng);
        if !lsop_certified(cx, &thetas, field) {
            continue;
        }
        let dims: Vec<usize> = (0..=d)
            .map(|q| {
                if q == 0 {
                    1
                } else {
                    pres.dim(q) - pres.relations(&thetas[..d], q, field).rank()
                }
            })
            .collect();
        return Ok(GradedQuotient {
            field: field.clone(),
            seed,
            theta_count: count,
            dims,
            lsop_certificate: true,
            complex: cx.clone(),
            thetas,
            pres,
        });
    }
    Err(RingError::GenericityFailure(LSOP_ATTEMPTS))
}

impl GradedQuotient {
    pub fn d(&self) -> usize {
        self.complex.d()
    }

    /// Rank and kernel dimension of ·ω^e : Q_q → Q_{q+e} where ω is the
    /// extra form beyond the d quotient generators.
    pub fn multiplication_rank(
        &self,
        power: usize,
        from_degree: usize,
    ) -> Result<(usize, usize), RingError> {
        let d = self.d();
        if self.theta_count <= d {
            return Err(RingError::Precondition("no extra form ω was drawn".into()));
        }
        if from_degree + power > d {
            return Err(RingError::DegreeOutOfRange(from_degree + power));
        }
        let omega = &self.thetas[d];
        let field = &self.field;
        let mut map = Matrix::identity(self.pres.dim(from_degree), field.clone());
        for step in 0..power {
            let stage = self.pres.mult_matrix(omega, from_degree + step, field);
            map = stage.multiply(&map).expect("chained degrees");
        }
        let target = from_degree + power;
        let relations = if target == 0 {
            Matrix::new(self.pres.dim(0), 0, field.clone())
        } else {
            self.pres.relations(&self.thetas[..d], target, field)
        };
        let rank = map.hstack(&relations).expect("same degree").rank() - relations.rank();
        Ok((rank, self.dims[from_degree] - rank))
    }
}

/// One injectivity step of the rigidity ladder.
#[derive(Debug, Clone, Serialize)]
pub struct RigidityStep {
    /// 1-based index of the form being multiplied by.
    pub step: usize,
    pub kernel_dim: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct RigidityReport {
    pub rigid: bool,
    pub steps: Vec<RigidityStep>,
    pub first_failure: Option<usize>,
    /// dim `(k[Δ]/(θ₁..θ_d))₂`; equals h₂ when rigid.
    pub dim2_after_d: usize,
    /// dim `(k[Δ]/(θ₁..θ_{d+1}))₂`; equals g₂ when rigid.
    pub dim2_after_d_plus_one: usize,
    pub seed: u64,
    pub field: FieldSpec,
}

/// Rigidity: multiplication by each successive generic form must be
/// injective from degree 1 to degree 2 of the previous quotient, for
/// d + 1 forms.
pub fn is_k_rigid(
    cx: &SimplicialComplex,
    field: &FieldSpec,
    seed: u64,
) -> Result<RigidityReport, RingError> {
    if field.size() < MIN_FIELD_SIZE {
        return Err(RingError::FieldTooSmall(field.size()));
    }
    let d = cx.d();
    let pres = Presentation::new(cx, 2);
    'attempt: for attempt in 0..LSOP_ATTEMPTS {
        let mut rng = DetRng::derive(seed, attempt as u64);
        let thetas = draw_forms(cx.n(), d + 1, field, &mut rng);
        if !lsop_certified(cx, &thetas, field) {
            continue 'attempt;
        }
        let mut steps = Vec::with_capacity(d + 1);
        let mut first_failure = None;
        for i in 1..=d + 1 {
            let prior = &thetas[..i - 1];
            // dim of span{θ₁..θ_{i-1}} inside degree 1.
            let mut rows = Matrix::new(pres.dim(1), i - 1, field.clone());
            for (c, theta) in prior.iter().enumerate() {
                for (v, &coeff) in theta.iter().enumerate() {
                    rows.set(v, c, coeff);
                }
            }
            let r1 = rows.rank();
            if r1 != i - 1 {
                // Degenerate draw; a fresh attempt is cheaper than special
                // casing dependent forms.
                continue 'attempt;
            }
            let relations = pres.relations(prior, 2, field);
            let mult = pres.mult_matrix(&thetas[i - 1], 1, field);
            let induced_rank = mult.hstack(&relations).expect("degree 2").rank() - relations.rank();
            let kernel = (pres.dim(1) - induced_rank) - r1;
            steps.push(RigidityStep {
                step: i,
                kernel_dim: kernel,
            });
            if kernel > 0 && first_failure.is_none() {
                first_failure = Some(i);
            }
        }
        let dim2_after_d = pres.dim(2) - pres.relations(&thetas[..d], 2, field).rank();
        let dim2_after_d_plus_one = pres.dim(2) - pres.relations(&thetas, 2, field).rank();
        return Ok(RigidityReport {
            rigid: first_failure.is_none(),
            steps,
            first_failure,
            dim2_after_d,
            dim2_after_d_plus_one,
            seed,
            field: field.clone(),
        });
    }
    Err(RingError::GenericityFailure(LSOP_ATTEMPTS))
}

/// Measured quotient dimensions of a disjoint union of rigid complexes:
/// dim `(k[Δ]/Θ)₂` must be h₂ + C(d,2)(b-1) and the kernel of ·ω on
/// degree 1 must be d(b-1).
pub fn rigidity_union_dims(
    cx: &SimplicialComplex,
    field: &FieldSpec,
    seed: u64,
) -> Result<(CheckReport, usize, usize), RingError> {
    let d = cx.d();
    let b = cx.component_count() as i64;
    let quotient = artinian_reduction(cx, field, seed, true)?;
    let dim2 = quotient.dims[2];
    let (_, omega_kernel) = quotient.multiplication_rank(1, 1)?;
    let h = crate::vectors::f_to_h(&cx.f_vector(), d)
        .map_err(|e| RingError::Precondition(e.to_string()))?;
    let mut report = CheckReport::new("disjoint-union quotient dimensions");
    report.set_context("components", b);
    report.set_context("seed", seed);
    report.set_context("field", field.to_string());
    let expected_dim2 = h[2] + binomial(d as i64, 2) * (b - 1);
    report.residual("dim_2 - (h_2 + C(d,2)(b-1))", dim2 as i64 - expected_dim2);
    let expected_kernel = d as i64 * (b - 1);
    report.residual("ker ω - d(b-1)", omega_kernel as i64 - expected_kernel);
    Ok((report, dim2, omega_kernel))
}

#[derive(Debug, Clone, Serialize)]
pub struct LefschetzReport {
    pub passed: bool,
    /// (i, rank, expected) per middle degree with e = d - 2i >= 1.
    pub ranks: Vec<(usize, usize, usize)>,
    pub seed: u64,
    pub field: FieldSpec,
}

/// Hard Lefschetz check for a homology sphere: ·ω^{d-2i} : Q_i → Q_{d-i}
/// must be bijective for every i < d/2. A pass is evidence at this seed,
/// not a proof; a failure at a certified l.s.o.p. is definitive for the
/// drawn forms.
pub fn lefschetz_check(
    cx: &SimplicialComplex,
    field: &FieldSpec,
    seed: u64,
) -> Result<LefschetzReport, RingError> {
    let d = cx.d();
    let b = betti(cx, field);
    let below_top_trivial = b[..d].iter().all(|&x| x == 0);
    if !below_top_trivial || b[d] != 1 {
        return Err(RingError::Precondition(
            "hard Lefschetz check needs a homology sphere over this field".into(),
        ));
    }
    let quotient = artinian_reduction(cx, field, seed, true)?;
    let mut ranks = Vec::new();
    let mut passed = true;
    for i in 0..=(d.saturating_sub(1)) / 2 {
        let e = d - 2 * i;
        if e == 0 {
            continue;
        }
        let (rank, _) = quotient.multiplication_rank(e, i)?;
        let expected = quotient.dims[i];
        // Bijective onto Q_{d-i}: ranks match both sides.
        if rank != expected || quotient.dims[d - i] != expected {
            passed = false;
        }
        ranks.push((i, rank, expected));
    }
    Ok(LefschetzReport {
        passed,
        ranks,
        seed,
        field: field.clone(),
    })
}

/// Runs the Lefschetz check on every vertex link; the certificate the
/// general Betti bound is conditional on.
pub fn links_lefschetz(
    cx: &SimplicialComplex,
    field: &FieldSpec,
    seed: u64,
) -> Result<bool, RingError> {
    for v in 1..=cx.n() as u32 {
        let link = cx
            .link(&crate::complex::Face(vec![v]))
            .expect("vertex exists");
        let report = lefschetz_check(&link, field, seed)?;
        if !report.passed {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, Serialize)]
pub struct ConeIdealReport {
    pub dim_i1: usize,
    pub dim_i2: usize,
    pub f0_interior: i64,
    pub beta0_boundary: i64,
    pub check: CheckReport,
    pub seed: u64,
}

/// Cones off each boundary component, quotients both the capped complex
/// Γ and the cone union Σ by the same d generic forms, and measures the
/// kernel ideal I of k(Γ) → k(Σ) in degrees 1 and 2. For an orientable
/// manifold with boundary, dim I₁ = f₀°(Δ) and
/// dim I₁ + d β̃₀(∂Δ) <= dim I₂.
pub fn boundary_cone_ideal_dims(
    cx: &SimplicialComplex,
    field: &FieldSpec,
    seed: u64,
) -> Result<ConeIdealReport, RingError> {
    if field.size() < MIN_FIELD_SIZE {
        return Err(RingError::FieldTooSmall(field.size()));
    }
    let (gamma, sigma) = cone_off_boundary(cx, field)?;
    let d = cx.d();
    let report = crate::manifold::is_homology_manifold(cx, field);
    let f0_interior = report.interior_vertex_count(cx);
    let beta0_boundary = betti(&report.boundary, field).get(1).copied().unwrap_or(0);

    let pres_gamma = Presentation::new(&gamma, 2);
    let pres_sigma = Presentation::new(&sigma, 2);
    for attempt in 0..LSOP_ATTEMPTS {
        let mut rng = DetRng::derive(seed, attempt as u64);
        let thetas = draw_forms(gamma.n(), d, field, &mut rng);
        if !lsop_certified(&gamma, &thetas, field) {
            continue;
        }
        // Restrict each form to Σ's vertices through the shared labels.
        let restricted: Vec<Vec<u64>> = thetas
            .iter()
            .map(|theta| {
                sigma
                    .labels()
                    .iter()
                    .map(|l| {
                        let pos = gamma
                            .labels()
                            .binary_search(l)
                            .expect("Σ vertices live in Γ");
                        theta[pos]
                    })
                    .collect()
            })
            .collect();
        if !lsop_certified(&sigma, &restricted, field) {
            continue;
        }
        let dim_q = |pres: &Presentation, forms: &[Vec<u64>], q: usize| -> usize {
            pres.dim(q) - pres.relations(forms, q, field).rank()
        };
        let dim_i1 = dim_q(&pres_gamma, &thetas, 1) - dim_q(&pres_sigma, &restricted, 1);
        let dim_i2 = dim_q(&pres_gamma, &thetas, 2) - dim_q(&pres_sigma, &restricted, 2);
        let mut check = CheckReport::new("cone-ideal dimensions");
        check.set_context("seed", seed);
        check.set_context("field", field.to_string());
        check.residual("dim I_1 - f0_interior", dim_i1 as i64 - f0_interior);
        check.slack(
            "dim I_2 - dim I_1 - d*b0(bd)",
            dim_i2 as i64 - dim_i1 as i64 - d as i64 * beta0_boundary,
        );
        return Ok(ConeIdealReport {
            dim_i1,
            dim_i2,
            f0_interior,
            beta0_boundary,
            check,
            seed,
        });
    }
    Err(RingError::GenericityFailure(LSOP_ATTEMPTS))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{
        boundary_simplex, cone, cyclic_polytope_boundary, disjoint_union, octahedron, rp2_6,
        stellar_subdivide_facet, torus_7, union,
    };
    use crate::vectors::f_to_h;

    fn big2() -> FieldSpec {
        FieldSpec::extension(2, 16).unwrap()
    }

    fn big0() -> FieldSpec {
        FieldSpec::prime(65537).unwrap()
    }

    #[test]
    fn monomial_basis_counts() {
        let oct = octahedron();
        assert_eq!(monomial_basis(&oct, 0), vec![Vec::<u32>::new()]);
        // 6 squares + 12 edge products.
        assert_eq!(monomial_basis(&oct, 2).len(), 18);
        let cycle = boundary_simplex(2);
        // 3 cubes + 2 per edge × 3 edges.
        assert_eq!(monomial_basis(&cycle, 3).len(), 9);
    }

    #[test]
    fn monomial_count_formula() {
        // Σ_j f_{j-1} C(q-1, j-1) for q >= 1.
        for cx in [octahedron(), torus_7(), boundary_simplex(3)] {
            let f = cx.f_vector();
            for q in 1..=4usize {
                let expect: i64 = (1..f.len())
                    .map(|j| f[j] * binomial(q as i64 - 1, j as i64 - 1))
                    .sum();
                assert_eq!(hilbert_dim(&cx, q) as i64, expect, "q={q}");
            }
        }
    }

    #[test]
    fn hilbert_dims_match_series() {
        for cx in [octahedron(), torus_7(), rp2_6(), boundary_simplex(4)] {
            let d = cx.d();
            let h = f_to_h(&cx.f_vector(), d).unwrap();
            for q in 0..=d + 2 {
                assert_eq!(
                    hilbert_dim(&cx, q) as i64,
                    hilbert_series_coefficient(&h, d, q),
                    "q={q}"
                );
            }
        }
    }

    #[test]
    fn field_size_is_enforced() {
        let small = FieldSpec::prime(5).unwrap();
        assert!(matches!(
            artinian_reduction(&octahedron(), &small, 0, false),
            Err(RingError::FieldTooSmall(5))
        ));
    }

    #[test]
    fn schenzel_dims_for_sphere() {
        let q = artinian_reduction(&boundary_simplex(4), &big0(), 0, false).unwrap();
        assert!(q.lsop_certificate);
        assert_eq!(q.dims, vec![1, 1, 1, 1, 1]);
    }

    #[test]
    fn schenzel_dims_for_torus_and_rp2_at_three_seeds() {
        for seed in [0u64, 1, 2] {
            let q = artinian_reduction(&torus_7(), &big0(), seed, false).unwrap();
            assert_eq!(q.dims, vec![1, 4, 10, 1], "torus seed {seed}");
            let q = artinian_reduction(&rp2_6(), &big2(), seed, false).unwrap();
            assert_eq!(q.dims, vec![1, 3, 6, 1], "rp2 seed {seed}");
        }
    }

    #[test]
    fn determinism_per_seed() {
        let a = artinian_reduction(&torus_7(), &big0(), 7, true).unwrap();
        let b = artinian_reduction(&torus_7(), &big0(), 7, true).unwrap();
        assert_eq!(a.dims, b.dims);
        assert_eq!(a.thetas, b.thetas);
        assert_eq!(
            a.multiplication_rank(1, 1).unwrap(),
            b.multiplication_rank(1, 1).unwrap()
        );
    }

    #[test]
    fn multiplication_by_omega_is_injective_on_spheres() {
        let q = artinian_reduction(&octahedron(), &big0(), 0, true).unwrap();
        let (rank, kernel) = q.multiplication_rank(1, 1).unwrap();
        assert_eq!(kernel, 0);
        assert_eq!(rank, q.dims[1]);
        assert!(matches!(
            q.multiplication_rank(4, 0),
            Err(RingError::DegreeOutOfRange(4))
        ));
    }

    #[test]
    fn union_quotient_dimensions_follow_the_component_count() {
        for b in [2usize, 3] {
            let parts: Vec<SimplicialComplex> = (0..b).map(|_| boundary_simplex(3)).collect();
            let refs: Vec<&SimplicialComplex> = parts.iter().collect();
            let u = disjoint_union(&refs).unwrap();
            let (report, dim2, kernel) = rigidity_union_dims(&u, &big0(), 3).unwrap();
            assert!(report.pass, "{report:?}");
            let h = f_to_h(&u.f_vector(), 3).unwrap();
            assert_eq!(dim2 as i64, h[2] + binomial(3, 2) * (b as i64 - 1));
            assert_eq!(kernel, 3 * (b - 1));
        }
    }

    #[test]
    fn octahedron_is_rigid_with_h2_and_g2_dims() {
        let r = is_k_rigid(&octahedron(), &big0(), 0).unwrap();
        assert!(r.rigid, "{r:?}");
        assert_eq!(r.dim2_after_d, 3); // h2
        assert_eq!(r.dim2_after_d_plus_one, 0); // g2
    }

    #[test]
    fn surfaces_are_rigid_in_characteristic_two() {
        for cx in [torus_7(), rp2_6()] {
            let r = is_k_rigid(&cx, &big2(), 0).unwrap();
            assert!(r.rigid, "{r:?}");
            let h = f_to_h(&cx.f_vector(), 3).unwrap();
            assert_eq!(r.dim2_after_d as i64, h[2]);
            assert_eq!(r.dim2_after_d_plus_one as i64, h[2] - h[1]);
        }
    }

    #[test]
    fn disjoint_union_fails_rigidity_with_the_predicted_kernels() {
        let u = disjoint_union(&[&boundary_simplex(3), &boundary_simplex(3)]).unwrap();
        let r = is_k_rigid(&u, &big0(), 0).unwrap();
        assert!(!r.rigid);
        assert_eq!(r.first_failure, Some(2));
        // Kernel at step i is (i-1)(b-1) = i-1 here.
        for step in &r.steps {
            assert_eq!(step.kernel_dim, step.step - 1, "{step:?}");
        }
    }

    #[test]
    fn cone_preserves_rigidity() {
        let base = octahedron();
        assert!(is_k_rigid(&base, &big0(), 1).unwrap().rigid);
        let coned = cone(&base, None).unwrap();
        assert!(is_k_rigid(&coned, &big0(), 1).unwrap().rigid);
    }

    #[test]
    fn gluing_along_enough_vertices_stays_rigid() {
        // Two octahedra sharing the facet {1, 3, 5} (= d vertices).
        let a = octahedron();
        let b = SimplicialComplex::build(&[
            vec![1, 3, 5],
            vec![1, 3, 9],
            vec![1, 7, 5],
            vec![1, 7, 9],
            vec![8, 3, 5],
            vec![8, 3, 9],
            vec![8, 7, 5],
            vec![8, 7, 9],
        ])
        .unwrap();
        let glued = union(&a, &b).unwrap();
        assert_eq!(glued.n(), 9);
        let r = is_k_rigid(&glued, &big0(), 0).unwrap();
        assert!(r.rigid, "{r:?}");
    }

    #[test]
    fn lefschetz_for_simplex_boundaries_and_cyclic_polytopes() {
        for d in [3usize, 4] {
            let r = lefschetz_check(&boundary_simplex(d), &big0(), 0).unwrap();
            assert!(r.passed, "boundary_simplex({d}): {r:?}");
        }
        let c84 = cyclic_polytope_boundary(8, 4).unwrap();
        let r = lefschetz_check(&c84, &big0(), 0).unwrap();
        assert!(r.passed, "{r:?}");
    }

    #[test]
    fn lefschetz_for_a_stacked_sphere() {
        let mut cx = boundary_simplex(4);
        for _ in 0..2 {
            let facet = cx.facets_by_label()[0].clone();
            cx = stellar_subdivide_facet(&cx, &facet).unwrap();
        }
        assert_eq!(cx.n(), 7);
        let r = lefschetz_check(&cx, &big0(), 0).unwrap();
        assert!(r.passed, "{r:?}");
    }

    #[test]
    fn lefschetz_rejects_non_spheres() {
        assert!(matches!(
            lefschetz_check(&torus_7(), &big0(), 0),
            Err(RingError::Precondition(_))
        ));
    }

    #[test]
    fn cone_ideal_dims_of_a_ball() {
        let ball = crate::generators::simplex(3);
        let r = boundary_cone_ideal_dims(&ball, &big0(), 0).unwrap();
        assert_eq!(r.dim_i1, 0);
        assert!(r.check.pass, "{:?}", r.check);
    }
}
