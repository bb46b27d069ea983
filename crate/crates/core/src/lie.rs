//! Lie-group side: SLD quantum Fisher information matrices for explicit Hermitian
//! generators, the pencil ratio `r_F`, and the `g(T)` converse certificate.
//!
//! A Lie-group action is described only through Hermitian generators
//! `X_1, …, X_m`; no structure constants are checked.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{self, CMatrix, CVector, RMatrix};
use crate::state::PureState;
use crate::tolerance::Tolerances;

/// Hermitian generators `X_1, …, X_m` acting on `C^d`.
#[derive(Debug, Clone)]
pub struct GeneratorSet {
    dim: usize,
    generators: Vec<CMatrix>,
}

impl GeneratorSet {
    pub fn new(generators: Vec<CMatrix>, tol: &Tolerances) -> Result<Self> {
        let dim = generators
            .first()
            .map(|x| x.nrows())
            .ok_or_else(|| Error::InvalidArgument("no generators".into()))?;
        for (l, x) in generators.iter().enumerate() {
            if x.nrows() != dim || x.ncols() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: x.nrows().max(x.ncols()),
                });
            }
            if linalg::hermiticity_defect(x) > tol.unitary {
                return Err(Error::NotHermitianGenerator(l));
            }
        }
        Ok(Self { dim, generators })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn generators(&self) -> &[CMatrix] {
        &self.generators
    }

    /// `Σ_l v_l X_l`.
    pub fn combination(&self, v: &[f64]) -> CMatrix {
        self.generators
            .iter()
            .zip(v)
            .fold(CMatrix::zeros(self.dim, self.dim), |acc, (x, &c)| acc + x * Complex64::new(c, 0.0))
    }

    /// Generators `X'_i = Σ_j A_ij X_j`.
    pub fn transform(&self, a: &RMatrix) -> Result<Self> {
        if a.ncols() != self.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                got: a.ncols(),
            });
        }
        let generators = (0..a.nrows())
            .map(|i| self.combination(a.row(i).transpose().as_slice()))
            .collect();
        Ok(Self {
            dim: self.dim,
            generators,
        })
    }

    /// Generators `X ⊗ I + I ⊗ X` of the two-copy action.
    pub fn two_copy(&self) -> Self {
        let id = CMatrix::identity(self.dim, self.dim);
        let generators = self
            .generators
            .iter()
            .map(|x| linalg::kron(x, &id) + linalg::kron(&id, x))
            .collect();
        Self {
            dim: self.dim * self.dim,
            generators,
        }
    }
}

/// Real symmetric PSD `m×m` matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Qfim {
    pub matrix: RMatrix,
}

impl Qfim {
    pub fn new(matrix: RMatrix) -> Result<Self> {
        if matrix.nrows() != matrix.ncols() {
            return Err(Error::DimensionMismatch {
                expected: matrix.nrows(),
                got: matrix.ncols(),
            });
        }
        Ok(Self {
            matrix: (&matrix + matrix.transpose()) * 0.5,
        })
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    /// `vᵀ F v`.
    pub fn quadratic(&self, v: &[f64]) -> f64 {
        let v = nalgebra::DVector::from_column_slice(v);
        (v.transpose() * &self.matrix * v)[(0, 0)]
    }
}

fn check_density(rho: &CMatrix, dim: usize) -> Result<(Vec<f64>, CMatrix)> {
    if rho.nrows() != rho.ncols() {
        return Err(Error::NotAState("matrix is not square".into()));
    }
    if rho.nrows() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            got: rho.nrows(),
        });
    }
    let defect = linalg::hermiticity_defect(rho);
    if defect > 1e-10 {
        return Err(Error::NotAState(format!("not Hermitian (defect {defect:e})")));
    }
    let trace = rho.trace();
    if (trace - linalg::ONE).norm() > 1e-10 {
        return Err(Error::NotAState(format!("trace is {trace}")));
    }
    let (p, vecs) = linalg::hermitian_eigen(rho);
    if p[0] < -1e-10 {
        return Err(Error::NotAState(format!("negative eigenvalue {}", p[0])));
    }
    Ok((p, vecs))
}

/// SLD quantum Fisher information matrix of `ρ` for the family
/// `e^{-iΣθ_l X_l} ρ e^{iΣθ_l X_l}` at `θ = 0`, from the spectral formula
/// `F_ij = Σ_{k,l} 2(p_k - p_l)²/(p_k + p_l) Re[⟨k|X_i|l⟩⟨l|X_j|k⟩]`.
pub fn qfim(rho: &CMatrix, gens: &GeneratorSet, tol: &Tolerances) -> Result<Qfim> {
    let (p, vecs) = check_density(rho, gens.dim())?;
    let in_basis: Vec<CMatrix> = gens
        .generators()
        .iter()
        .map(|x| vecs.adjoint() * x * &vecs)
        .collect();
    let m = gens.len();
    let d = p.len();
    let mut f = RMatrix::zeros(m, m);
    for k in 0..d {
        for l in 0..d {
            let sum = p[k] + p[l];
            if sum <= tol.supp {
                continue;
            }
            let weight = 2.0 * (p[k] - p[l]).powi(2) / sum;
            if weight == 0.0 {
                continue;
            }
            for i in 0..m {
                for j in i..m {
                    let term = weight * (in_basis[i][(k, l)] * in_basis[j][(l, k)]).re;
                    f[(i, j)] += term;
                    if i != j {
                        f[(j, i)] += term;
                    }
                }
            }
        }
    }
    let out = Qfim::new(f)?;
    if p[d - 1] > 1.0 - 1e-10 {
        // Rank one: must agree with four times the symmetrized covariance.
        let psi = PureState::normalized(vecs.column(d - 1).iter().copied().collect())?;
        let cov = qfim_pure(&psi, gens)?;
        debug_assert!((&cov.matrix - &out.matrix).abs().max() <= 1e-8 * (1.0 + cov.matrix.abs().max()));
    }
    Ok(out)
}

/// `4·Cov_sym(X)` for a pure state: `4(Re⟨X_i X_j⟩ - ⟨X_i⟩⟨X_j⟩)`.
pub fn qfim_pure(state: &PureState, gens: &GeneratorSet) -> Result<Qfim> {
    if state.dim() != gens.dim() {
        return Err(Error::DimensionMismatch {
            expected: gens.dim(),
            got: state.dim(),
        });
    }
    let v = state.amplitudes();
    let applied: Vec<CVector> = gens.generators().iter().map(|x| x * v).collect();
    let means: Vec<f64> = applied.iter().map(|xv| v.dotc(xv).re).collect();
    let m = gens.len();
    let f = RMatrix::from_fn(m, m, |i, j| 4.0 * (applied[i].dotc(&applied[j]).re - means[i] * means[j]));
    Qfim::new(f)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RfMethod {
    ClosedForm,
    SchurComplement,
    Bisection,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RfResult {
    /// `sup{r : F_ψ ⪰ r F_φ}`; `+∞` when `F_φ = 0`.
    pub r_f: f64,
    /// Direction `v` attaining `vᵀF_ψv = r_F vᵀF_φv` (absent when `r_F = ∞`).
    pub direction: Option<Vec<f64>>,
    pub method: RfMethod,
}

/// Eigenvalues of `F_φ` at or below this fraction of its largest one span its kernel.
const KERNEL_RTOL: f64 = 1e-10;

/// `r_F = sup{r : F_ψ - r F_φ ⪰ 0}`.
///
/// With `F_φ ≻ 0` this is `λ_min(F_φ^{-1/2} F_ψ F_φ^{-1/2})`. Otherwise the kernel
/// of `F_φ` is eliminated through the Schur complement `S = C - Bᵀ A⁺ B` of `F_ψ`
/// (blocks: `A` kernel, `C` range) and `r_F = λ_min(D^{-1/2} S D^{-1/2})` with `D`
/// the nonzero spectrum of `F_φ`. The reported value is the Rayleigh quotient of
/// the minimizing direction.
pub fn rf_ratio(f_psi: &Qfim, f_phi: &Qfim) -> Result<RfResult> {
    let m = f_psi.dim();
    if f_phi.dim() != m {
        return Err(Error::DimensionMismatch {
            expected: m,
            got: f_phi.dim(),
        });
    }
    let (vals, vecs) = linalg::symmetric_eigen(&f_phi.matrix);
    let top = vals.iter().copied().fold(0.0, f64::max);
    if top <= 0.0 {
        return Ok(RfResult {
            r_f: f64::INFINITY,
            direction: None,
            method: RfMethod::ClosedForm,
        });
    }
    let cutoff = KERNEL_RTOL * top;
    let range: Vec<usize> = (0..m).filter(|&k| vals[k] > cutoff).collect();
    let kernel: Vec<usize> = (0..m).filter(|&k| vals[k] <= cutoff).collect();
    let basis_r = vecs.select_columns(&range);
    let basis_k = vecs.select_columns(&kernel);

    let c = basis_r.transpose() * &f_psi.matrix * &basis_r;
    let (schur, coupling) = if kernel.is_empty() {
        (c, None)
    } else {
        let a = basis_k.transpose() * &f_psi.matrix * &basis_k;
        let b = basis_k.transpose() * &f_psi.matrix * &basis_r;
        let a_scale = a.abs().max().max(f_psi.matrix.abs().max());
        let a_pinv = linalg::symmetric_pinv(&a, KERNEL_RTOL * a_scale.max(f64::MIN_POSITIVE));
        let s = &c - b.transpose() * &a_pinv * &b;
        (s, Some(a_pinv * b))
    };
    let inv_sqrt_d = RMatrix::from_diagonal(&nalgebra::DVector::from_iterator(
        range.len(),
        range.iter().map(|&k| 1.0 / vals[k].sqrt()),
    ));
    let pencil = &inv_sqrt_d * &schur * &inv_sqrt_d;
    let (_, pvecs) = linalg::symmetric_eigen(&pencil);
    let v_r = &inv_sqrt_d * pvecs.column(0);
    let mut v = &basis_r * &v_r;
    if let Some(k) = coupling {
        let v_k = -(k * &v_r);
        v += &basis_k * v_k;
    }
    let norm = v.norm();
    let v: Vec<f64> = v.iter().map(|x| x / norm).collect();
    let r_f = (f_psi.quadratic(&v) / f_phi.quadratic(&v)).max(0.0);
    Ok(RfResult {
        r_f,
        direction: Some(v),
        method: if kernel.is_empty() {
            RfMethod::ClosedForm
        } else {
            RfMethod::SchurComplement
        },
    })
}

/// Whether `F_ψ - r F_φ ⪰ 0`, with slack `tol·max(1, ‖F_ψ‖, r‖F_φ‖)`.
pub fn pencil_is_psd(f_psi: &Qfim, f_phi: &Qfim, r: f64, tol: f64) -> bool {
    let diff = &f_psi.matrix - &f_phi.matrix * r;
    let scale = 1f64
        .max(f_psi.matrix.abs().max())
        .max(r * f_phi.matrix.abs().max());
    linalg::min_symmetric_eigenvalue(&diff) >= -tol * scale
}

/// `r_F` by bisection on `r` with the PSD test [`pencil_is_psd`]; an independent
/// route to [`rf_ratio`].
pub fn rf_ratio_bisection(f_psi: &Qfim, f_phi: &Qfim, tol: f64) -> Result<RfResult> {
    if f_phi.dim() != f_psi.dim() {
        return Err(Error::DimensionMismatch {
            expected: f_psi.dim(),
            got: f_phi.dim(),
        });
    }
    let inf = RfResult {
        r_f: f64::INFINITY,
        direction: None,
        method: RfMethod::Bisection,
    };
    if f_phi.matrix.abs().max() == 0.0 {
        return Ok(inf);
    }
    let (mut lo, mut hi) = (0.0, 1.0);
    while pencil_is_psd(f_psi, f_phi, hi, tol) {
        lo = hi;
        hi *= 2.0;
        if hi > 1e15 {
            return Ok(inf);
        }
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if pencil_is_psd(f_psi, f_phi, mid, tol) {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= 1e-15 * hi {
            break;
        }
    }
    Ok(RfResult {
        r_f: lo,
        direction: None,
        method: RfMethod::Bisection,
    })
}

/// `g(x) = x^{x/(1-x)} - x^{1/(1-x)} = (1 - x)·x^{x/(1-x)}` on `[0, 1)`, with
/// `g(0) = 1`.
pub fn g_function(x: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&x) {
        return Err(Error::DomainError(x));
    }
    if x == 0.0 {
        return Ok(1.0);
    }
    Ok((1.0 - x) * x.powf(x / (1.0 - x)))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConverseCertificate {
    pub impossible: bool,
    pub r_f: f64,
    pub witness_direction: Option<Vec<f64>>,
    /// `T = vᵀF_ψv / (r·vᵀF_φv)` along the witness direction.
    pub t: Option<f64>,
    pub g_t: Option<f64>,
    /// `4√δ`.
    pub threshold: f64,
}

/// Certifies that `ψ^{⊗N} → φ^{⊗⌊rN⌋}` with error at most `delta` fails for large
/// `N`, when `r > r_F` and `g(T) > 4√δ` (strict) along the pencil minimizer.
pub fn converse_certificate(f_psi: &Qfim, f_phi: &Qfim, r: f64, delta: f64) -> Result<ConverseCertificate> {
    if !(r > 0.0 && r.is_finite()) {
        return Err(Error::InvalidArgument(format!("rate must be positive, got {r}")));
    }
    if !(delta >= 0.0 && delta.is_finite()) {
        return Err(Error::InvalidArgument(format!("error must be nonnegative, got {delta}")));
    }
    let rf = rf_ratio(f_psi, f_phi)?;
    let threshold = 4.0 * delta.sqrt();
    let mut cert = ConverseCertificate {
        impossible: false,
        r_f: rf.r_f,
        witness_direction: None,
        t: None,
        g_t: None,
        threshold,
    };
    if r <= rf.r_f {
        return Ok(cert);
    }
    let v = rf.direction.expect("finite r_F has a direction");
    let t = (f_psi.quadratic(&v) / (r * f_phi.quadratic(&v))).clamp(0.0, 1.0 - f64::EPSILON);
    let g = g_function(t)?;
    cert.impossible = g > threshold;
    cert.witness_direction = Some(v);
    cert.t = Some(t);
    cert.g_t = Some(g);
    Ok(cert)
}

/// `θ ↦ ⟨ψ|e^{-iθY}|ψ⟩` for a fixed Hermitian `Y`, through the spectrum of `Y`.
#[derive(Debug, Clone)]
pub struct CharacteristicCurve {
    eigenvalues: Vec<f64>,
    weights: Vec<f64>,
}

impl CharacteristicCurve {
    pub fn new(state: &PureState, y: &CMatrix) -> Self {
        let (eigenvalues, vecs) = linalg::hermitian_eigen(y);
        let overlaps = vecs.adjoint() * state.amplitudes();
        Self {
            eigenvalues,
            weights: overlaps.iter().map(|z| z.norm_sqr()).collect(),
        }
    }

    pub fn value(&self, theta: f64) -> Complex64 {
        self.eigenvalues
            .iter()
            .zip(&self.weights)
            .map(|(&y, &w)| Complex64::from_polar(w, -theta * y))
            .sum()
    }

    /// `ln|χ(θ)|` from `|χ|² = 1 - 2Σ_{k,l} w_k w_l sin²(θ(y_k - y_l)/2)`, which keeps
    /// full relative precision for small `θ`.
    pub fn log_modulus(&self, theta: f64) -> f64 {
        let mut loss = 0.0;
        for (k, (&yk, &wk)) in self.eigenvalues.iter().zip(&self.weights).enumerate() {
            for (&yl, &wl) in self.eigenvalues[..k].iter().zip(&self.weights) {
                loss += 2.0 * wk * wl * (0.5 * theta * (yk - yl)).sin().powi(2);
            }
        }
        0.5 * (-2.0 * loss).ln_1p()
    }
}

/// `|log χ_ψ(θ) - (-i θ·⟨X⟩ - θᵀFθ/8)|` for each grid point, where
/// `χ_ψ(θ) = ⟨ψ|e^{-iΣθ_l X_l}|ψ⟩`. Per copy, this is also the residual of
/// `N⁻¹ log χ_{ψ^{⊗N}}`. The imaginary part is taken modulo `2π`.
pub fn clt_residuals(state: &PureState, gens: &GeneratorSet, grid: &[Vec<f64>]) -> Result<Vec<f64>> {
    let f = qfim_pure(state, gens)?;
    let means: Vec<f64> = gens.generators().iter().map(|x| state.expectation(x).re).collect();
    grid.iter()
        .map(|theta| {
            if theta.len() != gens.len() {
                return Err(Error::DimensionMismatch {
                    expected: gens.len(),
                    got: theta.len(),
                });
            }
            if theta.iter().all(|&t| t == 0.0) {
                return Ok(0.0);
            }
            let y = gens.combination(theta);
            let chi = CharacteristicCurve::new(state, &y).value(1.0);
            let linear: f64 = theta.iter().zip(&means).map(|(t, x)| t * x).sum();
            let model = Complex64::new(-f.quadratic(theta) / 8.0, -linear);
            let diff = chi.ln() - model;
            let im = diff.im - std::f64::consts::TAU * (diff.im / std::f64::consts::TAU).round();
            Ok(Complex64::new(diff.re, im).norm())
        })
        .collect()
}

/// Largest residual over the grid.
pub fn clt_diagnostic(state: &PureState, gens: &GeneratorSet, grid: &[Vec<f64>]) -> Result<f64> {
    Ok(clt_residuals(state, gens, grid)?.into_iter().fold(0.0, f64::max))
}
