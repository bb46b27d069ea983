//! Fourier-domain tools for finite abelian groups.
//!
//! A finite abelian group is identified with `Z_{n_1}×…×Z_{n_k}` through an
//! [`AbelianBasis`]. Dual-group labels (charges) use the same tuples, flattened
//! row-major with the last factor fastest, so for a group built by
//! [`FiniteGroup::named`] a charge label and an element index coincide.
//!
//! For a state with charge distribution `p`, the dual coefficients
//! `λ_a(p) = Σ_k p_k e^{2πi a·k/n}` equal `χ_ψ(a)`. Convertibility
//! `ψ^{⊗N} → φ^{⊗M}` then amounts to `p^{*N} = q^{*M} * w` for a probability vector
//! `w`, which [`fourier_weights`] reconstructs by inverse transform.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::convertibility::MODULUS_CLAMP_LN;
use crate::error::{Error, Result};
use crate::group::{mixed_radix_digits, mixed_radix_index, parse_cyclic_product, FiniteGroup};
use crate::linalg::{self, CMatrix, CVector};
use crate::rep::ProjectiveRep;
use crate::state::PureState;
use crate::tolerance::Tolerances;

/// Eigenvalues closer than this are treated as one degenerate eigenspace.
pub const DEGENERACY_TOL: f64 = 1e-8;

/// Isomorphism between an abelian group and `Z_{n_1}×…×Z_{n_k}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianBasis {
    shape: Vec<usize>,
    generators: Vec<usize>,
    /// `element_of_label[l]` is the element with coordinate tuple `l` (row-major).
    element_of_label: Vec<usize>,
    label_of_element: Vec<usize>,
}

impl AbelianBasis {
    /// Uses the standard coordinates when `group` carries a `Z_…` name whose table it
    /// matches, and otherwise searches for a basis of cyclic factors.
    pub fn of(group: &FiniteGroup) -> Result<Self> {
        if !group.is_abelian() {
            return Err(Error::NotAbelian);
        }
        if let Some(shape) = group.name().and_then(|n| {
            let compact: String = n.chars().filter(|c| !c.is_whitespace()).collect();
            parse_cyclic_product(&compact)
        }) {
            if shape.iter().product::<usize>() == group.order()
                && FiniteGroup::named(group.name().unwrap_or_default())
                    .map(|g| g.table() == group.table())
                    .unwrap_or(false)
            {
                let n = group.order();
                let generators = (0..shape.len())
                    .map(|j| {
                        let mut digits = vec![0; shape.len()];
                        digits[j] = 1 % shape[j];
                        mixed_radix_index(&digits, &shape)
                    })
                    .collect();
                return Ok(Self {
                    shape,
                    generators,
                    element_of_label: (0..n).collect(),
                    label_of_element: (0..n).collect(),
                });
            }
        }
        Self::search(group)
    }

    fn search(group: &FiniteGroup) -> Result<Self> {
        let n = group.order();
        if n == 1 {
            return Self::from_generators(group, vec![group.identity()], vec![1]);
        }
        let mut by_order: Vec<(usize, usize)> = group
            .elements()
            .filter(|&g| g != group.identity())
            .map(|g| (group.element_order(g), g))
            .collect();
        by_order.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));

        let mut gens = Vec::new();
        let start = vec![group.identity()];
        if extend_basis(group, &by_order, &start, &mut gens) {
            let shape = gens.iter().map(|&g| group.element_order(g)).collect();
            Self::from_generators(group, gens, shape)
        } else {
            // Every finite abelian group has a basis; reaching this is a bug.
            Err(Error::NotAbelian)
        }
    }

    fn from_generators(group: &FiniteGroup, generators: Vec<usize>, shape: Vec<usize>) -> Result<Self> {
        let n = group.order();
        let mut element_of_label = vec![0; n];
        let mut label_of_element = vec![usize::MAX; n];
        for (label, slot) in element_of_label.iter_mut().enumerate() {
            let digits = mixed_radix_digits(label, &shape);
            let g = digits
                .iter()
                .zip(&generators)
                .fold(group.identity(), |acc, (&d, &x)| group.mul(acc, group.pow(x, d)));
            *slot = g;
            label_of_element[g] = label;
        }
        if label_of_element.contains(&usize::MAX) {
            return Err(Error::NotAbelian);
        }
        Ok(Self {
            shape,
            generators,
            element_of_label,
            label_of_element,
        })
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn element_of_label(&self, label: usize) -> usize {
        self.element_of_label[label]
    }

    pub fn label_of_element(&self, g: usize) -> usize {
        self.label_of_element[g]
    }
}

/// Backtracking search for independent cyclic generators whose product is the group.
fn extend_basis(group: &FiniteGroup, candidates: &[(usize, usize)], span: &[usize], gens: &mut Vec<usize>) -> bool {
    if span.len() == group.order() {
        return true;
    }
    for &(ord, h) in candidates {
        if span.len() * ord > group.order() || !group.order().is_multiple_of(span.len() * ord) {
            continue;
        }
        // ⟨h⟩ ∩ span = {e}
        let mut x = h;
        let mut independent = true;
        for _ in 1..ord {
            if span.contains(&x) {
                independent = false;
                break;
            }
            x = group.mul(x, h);
        }
        if !independent {
            continue;
        }
        let mut next = Vec::with_capacity(span.len() * ord);
        let mut power = group.identity();
        for _ in 0..ord {
            next.extend(span.iter().map(|&s| group.mul(s, power)));
            power = group.mul(power, h);
        }
        gens.push(h);
        if extend_basis(group, candidates, &next, gens) {
            return true;
        }
        gens.pop();
    }
    false
}

/// Probability vector over charge labels.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ChargeDistribution {
    shape: Vec<usize>,
    probs: Vec<f64>,
}

impl ChargeDistribution {
    /// Validates nonnegativity (within `tol.norm`) and normalization; tiny negative
    /// entries are clipped to zero.
    pub fn new(shape: Vec<usize>, probs: Vec<f64>, tol: &Tolerances) -> Result<Self> {
        if shape.is_empty() || shape.contains(&0) {
            return Err(Error::InvalidDistribution(format!("invalid shape {shape:?}")));
        }
        let n: usize = shape.iter().product();
        if probs.len() != n {
            return Err(Error::InvalidDistribution(format!(
                "{} probabilities for shape {shape:?} (expected {n})",
                probs.len()
            )));
        }
        if let Some(p) = probs.iter().find(|p| !p.is_finite() || **p < -tol.norm) {
            return Err(Error::InvalidDistribution(format!("negative or non-finite entry {p}")));
        }
        let total: f64 = probs.iter().sum();
        if (total - 1.0).abs() > tol.norm {
            return Err(Error::InvalidDistribution(format!("probabilities sum to {total}")));
        }
        Ok(Self {
            shape,
            probs: probs.into_iter().map(|p| p.max(0.0)).collect(),
        })
    }

    pub fn point_mass(shape: Vec<usize>, label: usize) -> Self {
        let n = shape.iter().product();
        let mut probs = vec![0.0; n];
        probs[label] = 1.0;
        Self { shape, probs }
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    /// Distribution of the sum of independent charges.
    pub fn convolve(&self, other: &ChargeDistribution) -> Result<ChargeDistribution> {
        if self.shape != other.shape {
            return Err(Error::ShapeMismatch(self.shape.clone(), other.shape.clone()));
        }
        let n = self.len();
        let mut out = vec![0.0; n];
        for (a, &pa) in self.probs.iter().enumerate().filter(|(_, &p)| p != 0.0) {
            for (b, &pb) in other.probs.iter().enumerate() {
                out[label_add(a, b, &self.shape)] += pa * pb;
            }
        }
        Ok(Self {
            shape: self.shape.clone(),
            probs: out,
        })
    }

    /// `n`-fold self-convolution (`n = 0` gives the point mass at 0).
    pub fn convolution_power(&self, n: u64) -> ChargeDistribution {
        (0..n).fold(Self::point_mass(self.shape.clone(), 0), |acc, _| {
            acc.convolve(self).expect("same shape")
        })
    }

    /// Relabels every charge `k → k - shift`.
    pub fn translate(&self, shift: usize) -> ChargeDistribution {
        let neg = label_neg(shift, &self.shape);
        let mut out = vec![0.0; self.len()];
        for (k, &p) in self.probs.iter().enumerate() {
            out[label_add(k, neg, &self.shape)] = p;
        }
        Self {
            shape: self.shape.clone(),
            probs: out,
        }
    }
}

fn label_add(a: usize, b: usize, shape: &[usize]) -> usize {
    let (da, db) = (mixed_radix_digits(a, shape), mixed_radix_digits(b, shape));
    let sum: Vec<usize> = da.iter().zip(&db).map(|(x, y)| x + y).collect();
    mixed_radix_index(&sum, shape)
}

fn label_neg(a: usize, shape: &[usize]) -> usize {
    let d: Vec<usize> = mixed_radix_digits(a, shape)
        .iter()
        .zip(shape)
        .map(|(&x, &n)| (n - x) % n)
        .collect();
    mixed_radix_index(&d, shape)
}

/// `a·k/n = Σ_j a_j k_j / n_j` modulo 1, as a fraction of a full turn.
fn pairing(a: usize, k: usize, shape: &[usize]) -> f64 {
    let (da, dk) = (mixed_radix_digits(a, shape), mixed_radix_digits(k, shape));
    da.iter()
        .zip(&dk)
        .zip(shape)
        .map(|((&x, &y), &n)| ((x * y) % n) as f64 / n as f64)
        .sum::<f64>()
        .fract()
}

/// `λ_a` for every dual label `a`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DualCoefficients {
    pub shape: Vec<usize>,
    pub values: Vec<Complex64>,
}

/// `λ_a(p) = Σ_k p_k e^{2πi a·k/n}`.
pub fn dual_fourier(dist: &ChargeDistribution) -> DualCoefficients {
    let n = dist.len();
    let values = (0..n)
        .map(|a| {
            if a == 0 {
                return linalg::ONE;
            }
            dist.probs
                .iter()
                .enumerate()
                .filter(|(_, &p)| p != 0.0)
                .map(|(k, &p)| Complex64::from_polar(p, TAU * pairing(a, k, &dist.shape)))
                .sum()
        })
        .collect();
    DualCoefficients {
        shape: dist.shape.clone(),
        values,
    }
}

/// Inverse of [`dual_fourier`]: `w_k = |G|⁻¹ Σ_a λ_a e^{-2πi a·k/n}`.
pub fn inverse_fourier(coeffs: &DualCoefficients) -> Vec<Complex64> {
    let n = coeffs.values.len();
    (0..n)
        .map(|k| {
            coeffs
                .values
                .iter()
                .enumerate()
                .map(|(a, &l)| l * Complex64::from_polar(1.0, -TAU * pairing(a, k, &coeffs.shape)))
                .sum::<Complex64>()
                / n as f64
        })
        .collect()
}

/// Outcome of the Fourier-domain convertibility test.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FourierWeights {
    /// Candidate weights `w` (empty when the zero-set rule already fails).
    pub w: Vec<f64>,
    pub lambda_w: Vec<Complex64>,
    pub min_w: f64,
    pub feasible: bool,
    /// Dual label where `λ(q)^M = 0` but `λ(p)^N ≠ 0`.
    pub zero_set_violation: Option<usize>,
}

/// Solves `λ(p)^N = λ(q)^M · λ(w)` for `w` and checks `w ≥ 0`.
pub fn fourier_weights(
    p: &ChargeDistribution,
    q: &ChargeDistribution,
    n: u64,
    m: u64,
    tol: &Tolerances,
) -> Result<FourierWeights> {
    if p.shape != q.shape {
        return Err(Error::ShapeMismatch(p.shape.clone(), q.shape.clone()));
    }
    if n == 0 {
        return Err(Error::InvalidArgument("number of input copies must be at least 1".into()));
    }
    let (lp, lq) = (dual_fourier(p), dual_fourier(q));
    let is_zero = |z: Complex64| z.norm() <= tol.zero;
    let mut lambda_w = Vec::with_capacity(lp.values.len());
    for (a, (&x, &y)) in lp.values.iter().zip(&lq.values).enumerate() {
        let target_zero = m > 0 && is_zero(y);
        if target_zero && !is_zero(x) {
            return Ok(FourierWeights {
                w: Vec::new(),
                lambda_w: Vec::new(),
                min_w: f64::NEG_INFINITY,
                feasible: false,
                zero_set_violation: Some(a),
            });
        }
        let value = if a == 0 {
            linalg::ONE
        } else if target_zero {
            linalg::ZERO
        } else {
            let ln_x = if x.norm() == 0.0 { f64::NEG_INFINITY } else { x.norm().ln().min(0.0) };
            let ln_y = if m == 0 { 0.0 } else { y.norm().ln().min(0.0) };
            let ln_mod = (n as f64 * ln_x - m as f64 * ln_y).min(MODULUS_CLAMP_LN);
            let phase = n as f64 * x.arg() - if m == 0 { 0.0 } else { m as f64 * y.arg() };
            Complex64::from_polar(ln_mod.exp(), phase)
        };
        lambda_w.push(value);
    }
    let w: Vec<f64> = inverse_fourier(&DualCoefficients {
        shape: p.shape.clone(),
        values: lambda_w.clone(),
    })
    .into_iter()
    .map(|z| z.re)
    .collect();
    let min_w = w.iter().copied().fold(f64::INFINITY, f64::min);
    let total: f64 = w.iter().sum();
    Ok(FourierWeights {
        feasible: min_w >= -tol.w && (total - 1.0).abs() <= tol.norm,
        w,
        lambda_w,
        min_w,
        zero_set_violation: None,
    })
}

/// Translates the support so that every `λ_a` with `|λ_a| = 1` becomes exactly 1.
///
/// Returns the canonical distribution and the label it was shifted by.
pub fn shift_canonicalize(dist: &ChargeDistribution, tol: &Tolerances) -> (ChargeDistribution, usize) {
    let lambda = dual_fourier(dist);
    let unimodular: Vec<usize> = (0..dist.len())
        .filter(|&a| lambda.values[a].norm() >= 1.0 - tol.one)
        .collect();
    let canonical = unimodular
        .iter()
        .all(|&a| (lambda.values[a] - linalg::ONE).norm() <= tol.one.sqrt());
    if canonical {
        return (dist.clone(), 0);
    }
    // |λ_a| = 1 forces a·k to be constant on the support, so one support label works.
    let shift = dist
        .probs
        .iter()
        .enumerate()
        .max_by(|x, y| x.1.total_cmp(y.1))
        .map(|(k, _)| k)
        .unwrap_or(0);
    (dist.translate(shift), shift)
}

/// Charge distribution of `state` under an abelian (possibly projectively gauged)
/// representation.
///
/// Each basis generator `U_j` is rescaled so that `U_j^{n_j} = I`; the rescaled
/// generators must commute. Their joint eigenspaces are found by repeatedly
/// diagonalizing random Hermitian combinations within each block until every
/// generator acts as a scalar on every block; `seed` fixes those combinations.
pub fn charge_distribution(
    rep: &ProjectiveRep,
    state: &PureState,
    basis: &AbelianBasis,
    seed: u64,
    tol: &Tolerances,
) -> Result<ChargeDistribution> {
    let group = rep.group();
    if !group.is_abelian() {
        return Err(Error::NotAbelian);
    }
    if state.dim() != rep.dim() {
        return Err(Error::DimensionMismatch {
            expected: rep.dim(),
            got: state.dim(),
        });
    }
    let d = rep.dim();
    let gens: Vec<CMatrix> = basis
        .generators
        .iter()
        .zip(&basis.shape)
        .map(|(&g, &n)| {
            let u = rep.matrix(g);
            let un = (1..n).fold(u.clone(), |acc, _| &acc * u);
            let lambda = un.trace() / d as f64;
            let fix = Complex64::from_polar(1.0, -lambda.arg() / n as f64);
            u * fix
        })
        .collect();
    let check = 1e3 * tol.unitary.max(1e-12);
    for (i, a) in gens.iter().enumerate() {
        for b in &gens[i + 1..] {
            if linalg::max_abs_diff(&(a * b), &(b * a)) > check {
                return Err(Error::NotSimultaneouslyDiagonalizable);
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut blocks = vec![CMatrix::identity(d, d)];
    for _ in 0..16 {
        let mut refined = Vec::new();
        let mut all_scalar = true;
        for block in &blocks {
            let restricted: Vec<CMatrix> = gens.iter().map(|u| block.adjoint() * u * block).collect();
            let k = block.ncols();
            let scalar = restricted.iter().all(|a| {
                let mean = a.trace() / k as f64;
                linalg::max_abs_diff(a, &(CMatrix::identity(k, k) * mean)) <= DEGENERACY_TOL
            });
            if scalar {
                refined.push(block.clone());
                continue;
            }
            all_scalar = false;
            let mut h = CMatrix::zeros(k, k);
            for a in &restricted {
                let (x, y): (f64, f64) = (rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
                let re = (a + a.adjoint()) * Complex64::new(0.5, 0.0);
                let im = (a - a.adjoint()) * Complex64::new(0.0, -0.5);
                h += re * Complex64::new(x, 0.0) + im * Complex64::new(y, 0.0);
            }
            let (vals, vecs) = linalg::hermitian_eigen(&h);
            let mut start = 0;
            while start < vals.len() {
                let mut end = start + 1;
                while end < vals.len() && vals[end] - vals[end - 1] <= DEGENERACY_TOL {
                    end += 1;
                }
                refined.push(block * vecs.columns(start, end - start));
                start = end;
            }
        }
        blocks = refined;
        if all_scalar {
            break;
        }
    }

    let n: usize = basis.shape.iter().product();
    let mut probs = vec![0.0; n];
    for block in &blocks {
        let k = block.ncols();
        let mut digits = Vec::with_capacity(gens.len());
        for (u, &order) in gens.iter().zip(&basis.shape) {
            let a = block.adjoint() * u * block;
            let mean = a.trace() / k as f64;
            if linalg::max_abs_diff(&a, &(CMatrix::identity(k, k) * mean)) > 1e2 * DEGENERACY_TOL {
                return Err(Error::NotSimultaneouslyDiagonalizable);
            }
            let turns = mean.arg() / TAU * order as f64;
            let digit = turns.round().rem_euclid(order as f64) as usize;
            digits.push(digit % order);
        }
        let amp: CVector = block.adjoint() * state.amplitudes();
        probs[mixed_radix_index(&digits, &basis.shape)] += amp.norm_squared();
    }
    ChargeDistribution::new(basis.shape.clone(), probs, tol)
}

/// Diagonal representation `U(a) = diag_k(e^{2πi a·k/n})` over all charges: the
/// regular representation in the Fourier basis.
pub fn character_rep(group: std::sync::Arc<FiniteGroup>, tol: &Tolerances) -> Result<ProjectiveRep> {
    let basis = AbelianBasis::of(&group)?;
    let n = group.order();
    let matrices = group
        .elements()
        .map(|g| {
            let a = basis.label_of_element(g);
            CMatrix::from_diagonal(&CVector::from_iterator(
                n,
                (0..n).map(|k| Complex64::from_polar(1.0, TAU * pairing(a, k, &basis.shape))),
            ))
        })
        .collect();
    ProjectiveRep::validate(group, matrices, tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charfn::CharFunction;
    use std::sync::Arc;

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    fn dist(shape: &[usize], p: &[f64]) -> ChargeDistribution {
        ChargeDistribution::new(shape.to_vec(), p.to_vec(), &tol()).unwrap()
    }

    #[test]
    fn z2_charges_from_state() {
        let g = Arc::new(FiniteGroup::named("Z_2").unwrap());
        let rep = character_rep(g.clone(), &tol()).unwrap();
        let psi = PureState::from_populations(&[0.8, 0.2]).unwrap();
        let basis = AbelianBasis::of(&g).unwrap();
        let p = charge_distribution(&rep, &psi, &basis, 0, &tol()).unwrap();
        assert!((p.probs()[0] - 0.8).abs() < 1e-12 && (p.probs()[1] - 0.2).abs() < 1e-12);
        let p0 = charge_distribution(&rep, &PureState::basis(2, 0), &basis, 0, &tol()).unwrap();
        assert_eq!(p0.probs(), &[1.0, 0.0]);
    }

    #[test]
    fn z4_uniform_state_has_uniform_charges() {
        let g = Arc::new(FiniteGroup::named("Z_4").unwrap());
        let rep = character_rep(g.clone(), &tol()).unwrap();
        let psi = PureState::from_populations(&[1.0; 4]).unwrap();
        let p = charge_distribution(&rep, &psi, &AbelianBasis::of(&g).unwrap(), 7, &tol()).unwrap();
        for &x in p.probs() {
            assert!((x - 0.25).abs() < 1e-12);
        }
    }

    #[test]
    fn degenerate_permuted_rep() {
        // Regular rep of Z_2×Z_2 in the permutation basis: each generator is doubly
        // degenerate, so one random combination per block is not always enough.
        let g = Arc::new(FiniteGroup::named("Z_2×Z_2").unwrap());
        let rep = ProjectiveRep::regular(g.clone());
        let psi = PureState::normalized(
            [0.3, -0.2, 0.7, 0.1].iter().map(|&x| Complex64::new(x, 0.1 * x)).collect(),
        )
        .unwrap();
        let basis = AbelianBasis::of(&g).unwrap();
        let p = charge_distribution(&rep, &psi, &basis, 3, &tol()).unwrap();
        let chi = CharFunction::new(&rep, &psi).unwrap();
        let lambda = dual_fourier(&p);
        for a in 0..4 {
            assert!((lambda.values[a] - chi.to_complex(basis.element_of_label(a))).norm() < 1e-10);
        }
    }

    #[test]
    fn genuinely_projective_rep_is_rejected() {
        let g = Arc::new(FiniteGroup::named("Z_2×Z_2").unwrap());
        let i = Complex64::new(0.0, 1.0);
        let (o, z) = (linalg::ONE, linalg::ZERO);
        let x = CMatrix::from_row_slice(2, 2, &[z, o, o, z]);
        let zz = CMatrix::from_row_slice(2, 2, &[o, z, z, -o]);
        let y = CMatrix::from_row_slice(2, 2, &[z, -i, i, z]);
        let rep = ProjectiveRep::validate(g.clone(), vec![CMatrix::identity(2, 2), zz, x, y], &tol()).unwrap();
        let err = charge_distribution(&rep, &PureState::basis(2, 0), &AbelianBasis::of(&g).unwrap(), 0, &tol())
            .unwrap_err();
        assert_eq!(err, Error::NotSimultaneouslyDiagonalizable);
    }

    #[test]
    fn nonabelian_is_rejected() {
        let g = Arc::new(FiniteGroup::named("S_3").unwrap());
        assert_eq!(AbelianBasis::of(&g).unwrap_err(), Error::NotAbelian);
        let rep = ProjectiveRep::regular(g);
        let basis = AbelianBasis::of(&FiniteGroup::named("Z_6").unwrap()).unwrap();
        let err = charge_distribution(&rep, &PureState::basis(6, 0), &basis, 0, &tol()).unwrap_err();
        assert_eq!(err, Error::NotAbelian);
    }

    #[test]
    fn searched_basis_for_unnamed_groups() {
        for name in ["Z_6", "Z_2×Z_4", "Z_2×Z_2×Z_2", "Z_4×Z_4", "Z_3×Z_6"] {
            let named = FiniteGroup::named(name).unwrap();
            let g = FiniteGroup::from_table(named.table().to_vec(), None).unwrap();
            let b = AbelianBasis::of(&g).unwrap();
            assert_eq!(b.shape().iter().product::<usize>(), g.order(), "{name}");
            // The labeling must be a group isomorphism.
            for x in 0..g.order() {
                for y in 0..g.order() {
                    let lx = b.label_of_element(x);
                    let ly = b.label_of_element(y);
                    assert_eq!(b.label_of_element(g.mul(x, y)), label_add(lx, ly, b.shape()));
                }
            }
        }
    }

    #[test]
    fn dual_fourier_examples() {
        let l = dual_fourier(&dist(&[2], &[0.8, 0.2]));
        assert!((l.values[1] - Complex64::new(0.6, 0.0)).norm() < 1e-15);
        let point = dual_fourier(&ChargeDistribution::point_mass(vec![3], 0));
        assert!(point.values.iter().all(|z| (*z - linalg::ONE).norm() < 1e-15));
        let uniform = dual_fourier(&dist(&[5], &[0.2; 5]));
        assert!((uniform.values[0] - linalg::ONE).norm() < 1e-15);
        assert!(uniform.values[1..].iter().all(|z| z.norm() < 1e-15));
    }

    #[test]
    fn fourier_weight_examples() {
        let p = dist(&[2], &[0.8, 0.2]);
        let same = fourier_weights(&p, &p, 1, 1, &tol()).unwrap();
        assert!(same.feasible);
        assert!((same.w[0] - 1.0).abs() < 1e-14 && same.w[1].abs() < 1e-14);

        // λ_1(q) = 0.36 ⇔ q = (0.68, 0.32).
        let q = dist(&[2], &[0.68, 0.32]);
        let two = fourier_weights(&p, &q, 2, 1, &tol()).unwrap();
        assert!(two.feasible);
        assert!((two.w[0] - 1.0).abs() < 1e-12 && two.w[1].abs() < 1e-12);

        let one = fourier_weights(&p, &q, 1, 1, &tol()).unwrap();
        assert!(!one.feasible);
        assert!((one.lambda_w[1].re - 5.0 / 3.0).abs() < 1e-12);
        assert!((one.w[0] - 4.0 / 3.0).abs() < 1e-12 && (one.w[1] + 1.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn fourier_zero_rule_and_shapes() {
        let p = dist(&[2], &[0.8, 0.2]);
        let q = dist(&[2], &[0.5, 0.5]);
        let r = fourier_weights(&p, &q, 3, 1, &tol()).unwrap();
        assert!(!r.feasible);
        assert_eq!(r.zero_set_violation, Some(1));
        let other = dist(&[3], &[0.2, 0.3, 0.5]);
        assert!(matches!(fourier_weights(&p, &other, 1, 1, &tol()), Err(Error::ShapeMismatch(..))));
    }

    #[test]
    fn convolution_reproduces_source() {
        let p = dist(&[2], &[0.8, 0.2]);
        let q = dist(&[2], &[0.68, 0.32]);
        let r = fourier_weights(&p, &q, 2, 1, &tol()).unwrap();
        let w = ChargeDistribution::new(vec![2], r.w.clone(), &tol()).unwrap();
        let lhs = p.convolution_power(2);
        let rhs = q.convolve(&w).unwrap();
        for (a, b) in lhs.probs().iter().zip(rhs.probs()) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn shift_examples() {
        let canonical = dist(&[3], &[0.5, 0.3, 0.2]);
        assert_eq!(shift_canonicalize(&canonical, &tol()), (canonical.clone(), 0));

        let (c, s) = shift_canonicalize(&dist(&[2], &[0.0, 1.0]), &tol());
        assert_eq!(s, 1);
        assert_eq!(c.probs(), &[1.0, 0.0]);
        assert!((dual_fourier(&c).values[1] - linalg::ONE).norm() < 1e-15);

        let odd = dist(&[4], &[0.0, 0.6, 0.0, 0.4]);
        assert!((dual_fourier(&odd).values[2] + linalg::ONE).norm() < 1e-12);
        let (c, s) = shift_canonicalize(&odd, &tol());
        assert_eq!(s, 1);
        assert_eq!(c.probs(), &[0.6, 0.0, 0.4, 0.0]);
        assert!((dual_fourier(&c).values[2] - linalg::ONE).norm() < 1e-12);
    }

    #[test]
    fn distribution_validation() {
        assert!(ChargeDistribution::new(vec![2], vec![0.5, 0.6], &tol()).is_err());
        assert!(ChargeDistribution::new(vec![2], vec![1.5, -0.5], &tol()).is_err());
        assert!(ChargeDistribution::new(vec![2, 2], vec![1.0], &tol()).is_err());
    }
}
