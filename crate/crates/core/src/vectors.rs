//! Face-vector calculus: the f↔h transform, g-vectors, Betti-corrected
//! h'- and h''-vectors, pseudopowers, and residual checkers for the
//! Dehn-Sommerville relations and the Macaulay/Kühnel/Kalai-type bounds.
//!
//! Betti-number slices throughout this module use the same convention as
//! [`crate::homology::betti`]: entry `j` of the slice is β̃_{j-1}, so the
//! reduced homology of the empty face sits in slot 0. The helper `bt`
//! reads a Betti number by homological degree with out-of-range indices
//! giving zero, which keeps every formula aligned with its source.

use serde::Serialize;
use thiserror::Error;

use crate::complex::SimplicialComplex;
use crate::field::FieldSpec;
use crate::homology::BettiProfile;
use crate::manifold::{is_homology_manifold, ManifoldReport};
use crate::report::CheckReport;
use crate::util::{binomial, binomial_real};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum VectorsError {
    #[error("sequence has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("pseudopower argument must be nonnegative")]
    NegativeInput,
    #[error("dimension must be even (d odd) for the middle-Betti bound")]
    WrongParity,
    #[error("index {0} out of range")]
    BadIndex(i64),
    #[error("operation requires a nonempty boundary")]
    EmptyBoundary,
    #[error("bound requires d >= 4")]
    DimensionTooSmall,
    #[error("the d = 4 case is stated only in characteristic two")]
    WrongCharacteristic,
    #[error("Betti precondition violated: β_{0} must vanish")]
    BettiPreconditionViolated(i64),
    #[error("complex is not a homology manifold over this field")]
    NotAManifold,
    #[error("h''-vector is undefined for disconnected complexes")]
    Disconnected,
    #[error("complex is not orientable over this field")]
    NotOrientable,
}

/// β̃_i read from a slice whose entry j is β̃_{j-1}; zero out of range.
fn bt(betti: &[i64], i: i64) -> i64 {
    let j = i + 1;
    if j < 0 || j as usize >= betti.len() {
        0
    } else {
        betti[j as usize]
    }
}

fn at(v: &[i64], i: i64) -> i64 {
    if i < 0 || i as usize >= v.len() {
        0
    } else {
        v[i as usize]
    }
}

/// h from f: h_i = Σ_j (-1)^{i-j} C(d-j, i-j) f_{j-1}. `f` is indexed from
/// f_{-1} and must have length d + 1.
pub fn f_to_h(f: &[i64], d: usize) -> Result<Vec<i64>, VectorsError> {
    if f.len() != d + 1 {
        return Err(VectorsError::LengthMismatch {
            expected: d + 1,
            got: f.len(),
        });
    }
    let d = d as i64;
    Ok((0..=d)
        .map(|i| {
            (0..=i)
                .map(|j| {
                    let sign = if (i - j) % 2 == 0 { 1 } else { -1 };
                    sign * binomial(d - j, i - j) * f[j as usize]
                })
                .sum()
        })
        .collect())
}

/// Inverse transform: f_{i-1} = Σ_j C(d-j, i-j) h_j.
pub fn h_to_f(h: &[i64], d: usize) -> Result<Vec<i64>, VectorsError> {
    if h.len() != d + 1 {
        return Err(VectorsError::LengthMismatch {
            expected: d + 1,
            got: h.len(),
        });
    }
    let d = d as i64;
    Ok((0..=d)
        .map(|i| {
            (0..=i)
                .map(|j| binomial(d - j, i - j) * h[j as usize])
                .sum()
        })
        .collect())
}

/// g_i = h_i - h_{i-1}, with h read as zero outside its stored range (so
/// the g-vector of a boundary complex extends to index d).
pub fn g_at(h: &[i64], i: i64) -> i64 {
    at(h, i) - at(h, i - 1)
}

/// h'_i = h_i + C(d,i) Σ_{j=1}^{i-1} (-1)^{i-j-1} β̃_{j-1}; `betti` in
/// the crate convention (entry j is β̃_{j-1}).
pub fn h_prime(h: &[i64], betti: &[i64], d: usize) -> Result<Vec<i64>, VectorsError> {
    if h.len() != d + 1 {
        return Err(VectorsError::LengthMismatch {
            expected: d + 1,
            got: h.len(),
        });
    }
    let d = d as i64;
    Ok((0..=d)
        .map(|i| {
            let correction: i64 = (1..i)
                .map(|j| {
                    let sign = if (i - j - 1) % 2 == 0 { 1 } else { -1 };
                    sign * bt(betti, j - 1)
                })
                .sum();
            h[i as usize] + binomial(d, i) * correction
        })
        .collect())
}

/// Closed-manifold h'': h''_d = h'_d and h''_i = h'_i - C(d,i) β̃_{i-1}.
/// Caller guarantees a connected orientable closed homology manifold.
pub fn h_dprime_closed(h_prime: &[i64], betti: &[i64], d: usize) -> Vec<i64> {
    let d = d as i64;
    (0..=d)
        .map(|i| {
            if i == d {
                h_prime[i as usize]
            } else {
                h_prime[i as usize] - binomial(d, i) * bt(betti, i - 1)
            }
        })
        .collect()
}

/// ḡ_i(∂Δ) = h'_i(∂Δ) - h'_{i-1}(∂Δ) + C(d-1, i-1) β̃_{i-2}(∂Δ),
/// evaluated for i = 0..=d with out-of-range h' read as zero.
pub fn g_bar(h_prime_boundary: &[i64], betti_boundary: &[i64], d: usize) -> Vec<i64> {
    let d = d as i64;
    (0..=d)
        .map(|i| {
            at(h_prime_boundary, i) - at(h_prime_boundary, i - 1)
                + binomial(d - 1, i - 1) * bt(betti_boundary, i - 2)
        })
        .collect()
}

/// Both evaluations of h''_{d/2} when d is even; the symmetry identity
/// makes them agree on orientable manifolds and we record rather than
/// assume it.
#[derive(Debug, Clone, Copy, Serialize, PartialEq, Eq)]
pub struct MiddleAgreement {
    pub via_boundary_formula: i64,
    pub via_betti_formula: i64,
}

impl MiddleAgreement {
    pub fn agree(&self) -> bool {
        self.via_boundary_formula == self.via_betti_formula
    }
}

/// Boundary-case h'': the low half subtracts ḡ and the ψ-image term, the
/// high half subtracts the Betti term; at i = d/2 both formulas run.
/// `im_psi` entry i-1 is dim Im ψ_i (ψ_0 = 0).
pub fn h_dprime_boundary(
    h_prime: &[i64],
    gbar: &[i64],
    im_psi: &[i64],
    betti: &[i64],
    d: usize,
) -> Result<(Vec<i64>, Option<MiddleAgreement>), VectorsError> {
    if gbar.is_empty() {
        return Err(VectorsError::EmptyBoundary);
    }
    if gbar.len() != d + 1 {
        return Err(VectorsError::LengthMismatch {
            expected: d + 1,
            got: gbar.len(),
        });
    }
    if im_psi.len() != d {
        return Err(VectorsError::LengthMismatch {
            expected: d,
            got: im_psi.len(),
        });
    }
    let d = d as i64;
    let psi = |i: i64| -> i64 {
        if i < 1 {
            0
        } else {
            im_psi[(i - 1) as usize]
        }
    };
    let low = |i: i64| at(h_prime, i) - at(gbar, i) - binomial(d, i) * psi(i);
    let high = |i: i64| at(h_prime, i) - binomial(d, i) * bt(betti, i - 1);
    let mut middle = None;
    let values = (0..=d)
        .map(|i| {
            if 2 * i < d {
                low(i)
            } else if 2 * i > d {
                high(i)
            } else {
                let pair = MiddleAgreement {
                    via_boundary_formula: low(i),
                    via_betti_formula: high(i),
                };
                middle = Some(pair);
                pair.via_boundary_formula
            }
        })
        .collect();
    Ok((values, middle))
}

/// The Macaulay pseudopower m^{<i>}: with m = C(x, i) for the unique real
/// x > i-1, returns C(x+1, i+1); 0^{<i>} = 0. Exact when m is C(a, i) for
/// an integer a, bisection to 1e-9 otherwise.
pub fn pseudopower(m: f64, i: u32) -> Result<f64, VectorsError> {
    if m < 0.0 {
        return Err(VectorsError::NegativeInput);
    }
    if m == 0.0 {
        return Ok(0.0);
    }
    if i == 0 {
        // C(x, 0) = 1 only; degree-0 bound never arises but keep it total.
        return Ok(m);
    }
    if m.fract() == 0.0 {
        let target = m as i64;
        let mut a = i as i64;
        while binomial(a, i as i64) < target {
            a += 1;
        }
        if binomial(a, i as i64) == target {
            return Ok(binomial(a + 1, i as i64 + 1) as f64);
        }
    }
    let mut lo = i as f64 - 1.0;
    let mut hi = i as f64;
    while binomial_real(hi, i) < m {
        hi += hi - (i as f64 - 1.0);
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if binomial_real(mid, i) < m {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo < 1e-9 {
            break;
        }
    }
    let x = 0.5 * (lo + hi);
    Ok(binomial_real(x + 1.0, i + 1))
}

/// Dehn-Sommerville for closed manifolds:
/// h_{d-i} - h_i = (-1)^i C(d,i) ((-1)^{d-1} χ̃ - 1).
pub fn ds_closed_residual(h: &[i64], chi: i64, d: usize) -> CheckReport {
    let mut report = CheckReport::new("dehn-sommerville (closed)");
    report.set_context("chi_tilde", chi);
    let d = d as i64;
    let euler_term = if (d - 1) % 2 == 0 { chi } else { -chi };
    for i in 0..=d {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        let rhs = sign * binomial(d, i) * (euler_term - 1);
        report.residual(format!("i={i}"), (at(h, d - i) - at(h, i)) - rhs);
    }
    report
}

/// Helper: g_i(∂Δ) for i = 0..=d from the boundary h-vector.
pub fn boundary_g(h_boundary: &[i64], d: usize) -> Vec<i64> {
    (0..=d as i64).map(|i| g_at(h_boundary, i)).collect()
}

/// Dehn-Sommerville for manifolds with boundary:
/// h_{d-i} - h_i = C(d,i) (-1)^{d-1-i} χ̃ - g_i(∂Δ).
pub fn ds_boundary_residual(h: &[i64], chi: i64, g_boundary: &[i64], d: usize) -> CheckReport {
    let mut report = CheckReport::new("dehn-sommerville (boundary)");
    report.set_context("chi_tilde", chi);
    report.set_context("g_boundary", g_boundary.to_vec());
    let d = d as i64;
    for i in 0..=d {
        let sign = if (d - 1 - i) % 2 == 0 { 1 } else { -1 };
        let rhs = binomial(d, i) * sign * chi - at(g_boundary, i);
        report.residual(format!("i={i}"), (at(h, d - i) - at(h, i)) - rhs);
    }
    report
}

/// Duality of h'-numbers for closed connected orientable manifolds:
/// h'_{d-i} - h'_i = C(d,i)(γ_i - γ_{i-1}) where γ is the reduced Betti
/// vector with the top entry decremented by one (the orientation class).
/// With that convention the identity holds at every index 0..=d; the
/// plain β̃ form only holds away from the top.
pub fn hprime_duality_residual(h_prime: &[i64], betti: &[i64], d: usize) -> CheckReport {
    let mut report = CheckReport::new("h' duality (closed orientable)");
    let d = d as i64;
    let gamma = |i: i64| -> i64 {
        if i < 0 || i >= d {
            0
        } else if i == d - 1 {
            bt(betti, i) - 1
        } else {
            bt(betti, i)
        }
    };
    for i in 0..=d {
        let rhs = binomial(d, i) * (gamma(i) - gamma(i - 1));
        report.residual(
            format!("i={i}"),
            (at(h_prime, d - i) - at(h_prime, i)) - rhs,
        );
    }
    report
}

const PSEUDOPOWER_GUARD: f64 = 1e-6;

/// Lower and upper bounds on h'-numbers: h'_i >= C(d,i) β̃_{i-1} and
/// h'_{i+1} <= (h'_i - C(d,i) β̃_{i-1})^{<i>}.
pub fn macaulay_bounds(h_prime: &[i64], betti: &[i64], d: usize) -> CheckReport {
    let mut report = CheckReport::new("macaulay bounds on h'");
    let d = d as i64;
    for i in 1..=d {
        let reduced = at(h_prime, i) - binomial(d, i) * bt(betti, i - 1);
        report.slack(format!("h'_{i} >= C(d,{i})b_{}", i - 1), reduced);
        if i < d {
            match pseudopower(reduced.max(0) as f64, i as u32) {
                Ok(bound) => {
                    report.slack_real(
                        format!("h'_{} <= ({reduced})^<{i}>", i + 1),
                        bound - at(h_prime, i + 1) as f64,
                        PSEUDOPOWER_GUARD,
                    );
                }
                Err(_) => {
                    report.condition(format!("pseudopower defined at i={i}"), false);
                }
            }
        }
    }
    report
}

/// Middle-Betti upper bound for 2k-dimensional orientable manifolds:
/// C(2k+1, k) β_k <= C(n-k-2, k+1); equality forces β_i = 0 below the
/// middle, and β_k >= 1 forces n >= 3k+3.
pub fn kuhnel_middle_check(n: usize, betti: &[i64], d: usize) -> Result<CheckReport, VectorsError> {
    if d.is_multiple_of(2) {
        return Err(VectorsError::WrongParity);
    }
    let k = (d as i64 - 1) / 2;
    let n = n as i64;
    let mut report = CheckReport::new("middle Betti bound");
    report.set_context("k", k);
    report.set_context("n", n);
    let beta_k = bt(betti, k);
    let slack = binomial(n - k - 2, k + 1) - binomial(2 * k + 1, k) * beta_k;
    report.slack("C(n-k-2,k+1) - C(2k+1,k)b_k", slack);
    if slack == 0 {
        for i in 0..k {
            report.condition(format!("equality => b_{i} = 0"), bt(betti, i) == 0);
        }
    }
    if beta_k >= 1 {
        report.condition("b_k >= 1 => n >= 3k+3", n >= 3 * k + 3);
    }
    Ok(report)
}

/// Face data of the vertex-minimal 2k-manifold with a single middle Betti
/// number: n = 3k+3 vertices, h_i = h'_i = C(k+1+i, i) up to the middle,
/// the upper half filled in by the closed Dehn-Sommerville relations.
#[derive(Debug, Clone, Serialize)]
pub struct MkReference {
    pub k: i64,
    pub n: i64,
    pub d: usize,
    /// Crate-convention Betti slice: only the middle and top entries are
    /// nonzero.
    pub betti: Vec<i64>,
    pub h: Vec<i64>,
    pub h_prime: Vec<i64>,
    pub f: Vec<i64>,
}

pub fn mk_reference(k: u32) -> MkReference {
    let k = k as i64;
    let d = (2 * k + 1) as usize;
    let n = 3 * k + 3;
    let chi = 1 + if k % 2 == 0 { 1 } else { -1 };
    let mut h = vec![0i64; d + 1];
    for (i, slot) in h.iter_mut().enumerate().take(k as usize + 2) {
        *slot = binomial(k + 1 + i as i64, i as i64);
    }
    // Upper half from h_{d-i} = h_i + (-1)^i C(d,i)(χ̃ - 1); dim is even
    // so the sign of χ̃ is direct.
    for i in 0..k {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        h[(2 * k + 1 - i) as usize] = h[i as usize] + sign * binomial(2 * k + 1, i) * (chi - 1);
    }
    let mut betti = vec![0i64; d + 1];
    betti[(k + 1) as usize] = 1;
    betti[d] = 1;
    let h_prime = h_prime_from(&h, &betti, d);
    let f = h_to_f(&h, d).expect("length d+1");
    MkReference {
        k,
        n,
        d,
        betti,
        h,
        h_prime,
        f,
    }
}

fn h_prime_from(h: &[i64], betti: &[i64], d: usize) -> Vec<i64> {
    h_prime(h, betti, d).expect("length checked")
}

/// f-numbers reconstructed from h'_0..h'_k and the middle Betti number,
/// for manifolds whose Betti numbers vanish below the middle. Also
/// returns the alternating coefficient of β_k at each upper index, which
/// must be nonnegative.
#[derive(Debug, Clone, Serialize)]
pub struct MiddleBettiF {
    pub f: Vec<i64>,
    /// Coefficient of β_k in f_{i-1} for i = k+1..=2k+1.
    pub beta_coefficients: Vec<i64>,
}

pub fn f_from_middle_betti(
    h_prime_low: &[i64],
    beta_k: i64,
    k: u32,
) -> Result<MiddleBettiF, VectorsError> {
    let k = k as i64;
    if h_prime_low.len() != (k + 1) as usize {
        return Err(VectorsError::LengthMismatch {
            expected: (k + 1) as usize,
            got: h_prime_low.len(),
        });
    }
    let d = 2 * k + 1;
    let mut f = vec![1i64];
    let mut beta_coefficients = Vec::new();
    for i in 1..=d {
        if i <= k {
            let value = (0..=i)
                .map(|j| binomial(d - j, d - i) * h_prime_low[j as usize])
                .sum();
            f.push(value);
        } else {
            let base: i64 = (0..=k)
                .map(|j| (binomial(d - j, d - i) + binomial(j, d - i)) * h_prime_low[j as usize])
                .sum();
            let coeff: i64 = (0..=i - k - 1)
                .map(|j| {
                    let sign = if j % 2 == 0 { 1 } else { -1 };
                    sign * binomial(k - j, d - i) * binomial(2 * k + 1, k - j)
                })
                .sum();
            beta_coefficients.push(coeff);
            f.push(base + beta_k * coeff);
        }
    }
    Ok(MiddleBettiF {
        f,
        beta_coefficients,
    })
}

/// Componentwise comparison of a manifold's f-vector with the minimal
/// reference: slack_i = f_{i-1}(Δ) - f_{i-1}(M_k) >= 0. Preconditions:
/// β_l = 0 for l < k and β_k >= 1.
pub fn kalai_comparison(f: &[i64], betti: &[i64], k: u32) -> Result<CheckReport, VectorsError> {
    let ki = k as i64;
    for l in 0..ki {
        if bt(betti, l) != 0 {
            return Err(VectorsError::BettiPreconditionViolated(l));
        }
    }
    if bt(betti, ki) < 1 {
        return Err(VectorsError::BettiPreconditionViolated(ki));
    }
    let reference = mk_reference(k);
    let mut report = CheckReport::new("minimal f-vector comparison");
    report.set_context("k", ki);
    report.set_context("reference_f", reference.f.clone());
    for i in 1..=(2 * ki + 1) {
        report.slack(format!("f_{}", i - 1), at(f, i) - at(&reference.f, i));
    }
    Ok(report)
}

/// General Betti bound C(d+1, j+1) β_j <= C(n-d+j-1, j+1) for
/// 0 <= j <= ⌊d/2⌋ - 1, conditional on the vertex links having the hard
/// Lefschetz property; the caller passes that certificate for the record.
pub fn kuhnel_general_check(
    n: usize,
    d: usize,
    betti: &[i64],
    j: i64,
    lefschetz_certified: bool,
) -> Result<CheckReport, VectorsError> {
    let half = (d as i64) / 2;
    if j < 0 || j > half - 1 {
        return Err(VectorsError::BadIndex(j));
    }
    let n = n as i64;
    let d = d as i64;
    let mut report = CheckReport::new("general Betti bound");
    report.set_context("j", j);
    report.set_context("lefschetz_certified", lefschetz_certified);
    let slack = binomial(n - d + j - 1, j + 1) - binomial(d + 1, j + 1) * bt(betti, j);
    report.slack("C(n-d+j-1,j+1) - C(d+1,j+1)b_j", slack);
    if slack == 0 {
        for i in 0..half {
            if i != j {
                report.condition(format!("equality => b_{i} = 0"), bt(betti, i) == 0);
            }
        }
    }
    Ok(report)
}

/// h'' monotonicity: h''_{j+1} - h''_j >= C(d,j) β_j for j up to the
/// middle.
pub fn kalai_monotonicity_check(h_dprime: &[i64], betti: &[i64], d: usize) -> CheckReport {
    let mut report = CheckReport::new("h'' monotonicity");
    let d = d as i64;
    for j in 0..=(d / 2 - 1).max(-1) {
        let slack = (at(h_dprime, j + 1) - at(h_dprime, j)) - binomial(d, j) * bt(betti, j);
        report.slack(format!("j={j}"), slack);
    }
    report
}

/// Consequence of multiplication-by-ω surjectivity in the reduced face
/// ring: h'_{d-j} <= h'_{d-j-1} - C(d, d-j-1) β_{d-j-2} for j up to the
/// middle. Meaningful once the vertex links pass the Lefschetz check.
pub fn surjectivity_bound_check(h_prime: &[i64], betti: &[i64], d: usize) -> CheckReport {
    let mut report = CheckReport::new("surjectivity consequence on h'");
    let d = d as i64;
    for j in 0..=(d / 2 - 1).max(-1) {
        let slack = (at(h_prime, d - j - 1) - binomial(d, d - j - 1) * bt(betti, d - j - 2))
            - at(h_prime, d - j);
        report.slack(format!("j={j}"), slack);
    }
    report
}

/// The h'' symmetry identity for orientable manifolds with boundary:
/// h'_{d-i} - C(d, d-i) β̃_{d-i-1} = h'_i - ḡ_i - C(d,i) dim Im ψ_i for
/// all 0 <= i < d.
pub fn hdprime_boundary_symmetry(
    h_prime: &[i64],
    gbar: &[i64],
    im_psi: &[i64],
    betti: &[i64],
    d: usize,
) -> CheckReport {
    let mut report = CheckReport::new("h'' boundary symmetry identity");
    let d = d as i64;
    let psi = |i: i64| -> i64 {
        if i < 1 || i as usize > im_psi.len() {
            0
        } else {
            im_psi[(i - 1) as usize]
        }
    };
    for i in 0..d {
        let lhs = at(h_prime, d - i) - binomial(d, d - i) * bt(betti, d - i - 1);
        let rhs = at(h_prime, i) - at(gbar, i) - binomial(d, i) * psi(i);
        report.residual(format!("i={i}"), lhs - rhs);
    }
    report
}

/// Edge bound for manifolds with orientable boundary:
/// h_2 >= f₀° + C(d,2) β̃_1(∂Δ) + d β̃_0(∂Δ) for d >= 5, and with
/// coefficients 3 and 4 in the characteristic-two d = 4 case.
pub fn h2_boundary_check(
    h2: i64,
    f0_interior: i64,
    beta1_boundary: i64,
    beta0_boundary: i64,
    d: usize,
    characteristic: u64,
) -> Result<CheckReport, VectorsError> {
    if d < 4 {
        return Err(VectorsError::DimensionTooSmall);
    }
    if d == 4 && characteristic != 2 {
        return Err(VectorsError::WrongCharacteristic);
    }
    let (c1, c2) = if d >= 5 {
        (binomial(d as i64, 2), d as i64)
    } else {
        (3, 4)
    };
    let mut report = CheckReport::new("edge bound with boundary");
    report.set_context("f0_interior", f0_interior);
    report.set_context("beta1_boundary", beta1_boundary);
    report.set_context("beta0_boundary", beta0_boundary);
    report.slack(
        "h_2 - f0_int - c1*b1(bd) - c2*b0(bd)",
        h2 - f0_interior - c1 * beta1_boundary - c2 * beta0_boundary,
    );
    Ok(report)
}

/// Every face-number sequence of one complex over one field.
#[derive(Debug, Clone, Serialize)]
pub struct FaceVectorSet {
    pub field: FieldSpec,
    pub d: usize,
    /// f_{-1}..f_{d-1}.
    pub f: Vec<i64>,
    pub h: Vec<i64>,
    /// g_i = h_i - h_{i-1} for i = 0..=d.
    pub g: Vec<i64>,
    /// Interior face counts f°_i = f_i - f_i(∂Δ).
    pub f_interior: Vec<i64>,
    /// h° from f° through the same transform.
    pub h_interior: Vec<i64>,
    pub h_prime: Vec<i64>,
    /// Defined for connected orientable manifolds; `None` otherwise.
    pub h_dprime: Option<Vec<i64>>,
    /// Both middle evaluations when d is even and the boundary is nonempty.
    pub middle_agreement: Option<MiddleAgreement>,
    /// ḡ(∂Δ) for i = 0..=d; `None` for closed complexes.
    pub gbar: Option<Vec<i64>>,
    pub betti: Vec<i64>,
    pub betti_boundary: Option<Vec<i64>>,
    pub im_psi: Vec<i64>,
    pub chi_tilde: i64,
    pub connected: bool,
    pub orientable: Option<bool>,
}

impl FaceVectorSet {
    /// Runs the full pipeline: manifold scan, Betti profile, transforms.
    /// Fails when the complex is not a homology manifold over the field.
    pub fn compute(cx: &SimplicialComplex, field: &FieldSpec) -> Result<Self, VectorsError> {
        let report = is_homology_manifold(cx, field);
        Self::compute_with_report(cx, field, &report)
    }

    /// Same as [`FaceVectorSet::compute`] but reuses an existing manifold
    /// report.
    pub fn compute_with_report(
        cx: &SimplicialComplex,
        field: &FieldSpec,
        report: &ManifoldReport,
    ) -> Result<Self, VectorsError> {
        if !report.is_manifold {
            return Err(VectorsError::NotAManifold);
        }
        let d = cx.d();
        let f = cx.f_vector();
        let h = f_to_h(&f, d)?;
        let g: Vec<i64> = (0..=d as i64).map(|i| g_at(&h, i)).collect();
        let profile = BettiProfile::compute(cx, &report.boundary, field)
            .map_err(|_| VectorsError::NotAManifold)?;

        let boundary_f = report.boundary.f_vector();
        let f_interior: Vec<i64> = (0..f.len())
            .map(|i| f[i] - boundary_f.get(i).copied().unwrap_or(0))
            .collect();
        let h_interior = f_to_h(&f_interior, d)?;

        let hp = h_prime(&h, &profile.beta, d)?;

        let (gbar_vec, h_dprime, middle_agreement) = if report.has_boundary() {
            let bd = report.boundary.d();
            let boundary_h = f_to_h(&boundary_f, bd)?;
            let beta_bd = profile.beta_boundary.clone().unwrap_or_default();
            let boundary_hp = h_prime(&boundary_h, &beta_bd, bd)?;
            let gbar_vec = g_bar(&boundary_hp, &beta_bd, d);
            if report.connected && report.orientable == Some(true) {
                let (hdp, middle) =
                    h_dprime_boundary(&hp, &gbar_vec, &profile.im_psi, &profile.beta, d)?;
                (Some(gbar_vec), Some(hdp), middle)
            } else {
                (Some(gbar_vec), None, None)
            }
        } else if report.connected && report.orientable == Some(true) {
            (None, Some(h_dprime_closed(&hp, &profile.beta, d)), None)
        } else {
            (None, None, None)
        };

        Ok(FaceVectorSet {
            field: field.clone(),
            d,
            chi_tilde: cx.reduced_euler(),
            f,
            h,
            g,
            f_interior,
            h_interior,
            h_prime: hp,
            h_dprime,
            middle_agreement,
            gbar: gbar_vec,
            betti: profile.beta.clone(),
            betti_boundary: profile.beta_boundary.clone(),
            im_psi: profile.im_psi.clone(),
            connected: report.connected,
            orientable: report.orientable,
        })
    }

    pub fn h2(&self) -> i64 {
        at(&self.h, 2)
    }

    pub fn f0_interior(&self) -> i64 {
        at(&self.f_interior, 1)
    }

    /// The h''-vector, failing loudly where it is undefined instead of
    /// returning `None`.
    pub fn h_dprime_strict(&self) -> Result<&[i64], VectorsError> {
        if !self.connected {
            return Err(VectorsError::Disconnected);
        }
        self.h_dprime.as_deref().ok_or(VectorsError::NotOrientable)
    }
}
