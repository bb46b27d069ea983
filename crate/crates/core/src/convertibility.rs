//! Single-shot exact convertibility.
//!
//! `ψ → φ` is possible by a covariant operation iff `χ_ψ = χ_φ·f` for some positive
//! definite `f` on the group. On `G ∖ zero(φ)` the only candidate is `χ_ψ/χ_φ`; on
//! `zero(φ)` we set `f = 0`. Positive definiteness is decided from the Gram matrix
//! `M[g,h] = f(g⁻¹h)`.

use std::sync::Arc;

use num_complex::Complex64;
use serde::Serialize;

use crate::charfn::CharFunction;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::linalg::{self, CMatrix};
use crate::tolerance::Tolerances;

/// Interpolator moduli are clamped here before the Gram test; any such `f` is far
/// outside the feasible region (`|f| ≤ 1` is necessary).
pub(crate) const MODULUS_CLAMP_LN: f64 = 230.0;

/// Cap on `N_max` for [`minimal_copies_search`].
pub const MAX_SEARCH_COPIES: u64 = 10_000;

/// Complex function on a finite group.
#[derive(Debug, Clone)]
pub struct GroupFunction {
    group: Arc<FiniteGroup>,
    values: Vec<Complex64>,
}

impl GroupFunction {
    pub fn new(group: Arc<FiniteGroup>, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != group.order() {
            return Err(Error::DimensionMismatch {
                expected: group.order(),
                got: values.len(),
            });
        }
        Ok(Self { group, values })
    }

    /// Plain complex values of a characteristic function.
    pub fn from_char(chi: &CharFunction) -> Self {
        Self {
            group: chi.group().clone(),
            values: chi.group().elements().map(|g| chi.to_complex(g)).collect(),
        }
    }

    /// Indicator function of a subset.
    pub fn indicator(group: Arc<FiniteGroup>, set: &crate::group::ElementSet) -> Self {
        let values = group
            .elements()
            .map(|g| if set.contains(&g) { linalg::ONE } else { linalg::ZERO })
            .collect();
        Self { group, values }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    /// Pointwise product.
    pub fn product(&self, other: &GroupFunction) -> Result<GroupFunction> {
        if self.group.table() != other.group.table() {
            return Err(Error::GroupMismatch);
        }
        Ok(Self {
            group: self.group.clone(),
            values: self.values.iter().zip(&other.values).map(|(a, b)| a * b).collect(),
        })
    }

    /// `M[g,h] = f(g⁻¹h)`.
    pub fn gram_matrix(&self) -> CMatrix {
        let g = &self.group;
        let n = g.order();
        CMatrix::from_fn(n, n, |a, b| self.values[g.mul(g.inv(a), b)])
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Gram,
    Fourier,
}

#[derive(Debug, Clone)]
pub struct FeasibilityResult {
    pub feasible: bool,
    pub min_gram_eigenvalue: f64,
    pub f: GroupFunction,
    pub method: Method,
    /// First element with `|f(g)| > 1`, which alone rules the conversion out.
    pub modulus_witness: Option<usize>,
}

/// `f = χ_ψ/χ_φ` off `zero(φ)`, `f = 0` on it.
pub fn build_interpolator(psi: &CharFunction, phi: &CharFunction, tol: &Tolerances) -> Result<GroupFunction> {
    if !psi.same_group(phi) {
        return Err(Error::GroupMismatch);
    }
    let zero_psi = psi.classify(tol.one, tol.zero)?.zero;
    let zero_phi = phi.classify(tol.one, tol.zero)?.zero;
    if let Some(&g) = zero_phi.difference(&zero_psi).next() {
        return Err(Error::ZeroSetViolation(g));
    }
    let group = psi.group().clone();
    let e = group.identity();
    let values = group
        .elements()
        .map(|g| {
            if g == e {
                linalg::ONE
            } else if zero_phi.contains(&g) {
                linalg::ZERO
            } else {
                let (a, b) = (psi.value(g), phi.value(g));
                let ln_mod = (a.logmod - b.logmod).min(MODULUS_CLAMP_LN);
                Complex64::from_polar(ln_mod.exp(), a.phase - b.phase)
            }
        })
        .collect();
    Ok(GroupFunction { group, values })
}

/// Gram-matrix test of positive definiteness.
///
/// Passes when the smallest eigenvalue of `M[g,h] = f(g⁻¹h)` is at least
/// `-tol.psd·|G|`. A non-Hermitian `M` is reported as [`Error::NotHermitian`].
pub fn is_positive_definite(f: &GroupFunction, tol: &Tolerances) -> Result<FeasibilityResult> {
    let n = f.group.order();
    let gram = f.gram_matrix();
    let scale = linalg::max_abs(&gram).max(1.0);
    let defect = linalg::hermiticity_defect(&gram);
    if defect > tol.psd * scale {
        return Err(Error::NotHermitian(defect));
    }
    let min_eig = linalg::min_hermitian_eigenvalue(&gram);
    let modulus_witness = f.values.iter().position(|z| z.norm() > 1.0 + tol.psd);
    Ok(FeasibilityResult {
        feasible: min_eig >= -tol.psd * n as f64,
        min_gram_eigenvalue: min_eig,
        f: f.clone(),
        method: Method::Gram,
        modulus_witness,
    })
}

/// Verdict for `ψ^{⊗n} → φ^{⊗m}`. `m = 0` (no output copies) is always feasible.
pub fn feasible_exact(
    psi: &CharFunction,
    phi: &CharFunction,
    n: u64,
    m: u64,
    tol: &Tolerances,
) -> Result<FeasibilityResult> {
    if n == 0 {
        return Err(Error::InvalidArgument("number of input copies must be at least 1".into()));
    }
    let f = build_interpolator(&psi.power(n), &phi.power(m), tol)?;
    is_positive_definite(&f, tol)
}

/// Smallest `N ≤ n_max` such that `ψ^{⊗N'} → φ^{⊗⌊rN'⌋}` is feasible for every
/// `N' ∈ [N, n_max]`.
pub fn minimal_copies_search(
    psi: &CharFunction,
    phi: &CharFunction,
    r: f64,
    n_max: u64,
    tol: &Tolerances,
) -> Result<Option<u64>> {
    if !(r > 0.0 && r.is_finite()) {
        return Err(Error::InvalidArgument(format!("rate must be positive, got {r}")));
    }
    if n_max == 0 || n_max > MAX_SEARCH_COPIES {
        return Err(Error::InvalidArgument(format!(
            "n_max must lie in [1, {MAX_SEARCH_COPIES}], got {n_max}"
        )));
    }
    if !psi.same_group(phi) {
        return Err(Error::GroupMismatch);
    }
    let mut smallest = None;
    for n in (1..=n_max).rev() {
        let m = (r * n as f64).floor() as u64;
        let ok = match feasible_exact(psi, phi, n, m, tol) {
            Ok(res) => res.feasible,
            Err(Error::ZeroSetViolation(_)) | Err(Error::NotHermitian(_)) => false,
            Err(e) => return Err(e),
        };
        if !ok {
            break;
        }
        smallest = Some(n);
    }
    Ok(smallest)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2_char(a: f64) -> CharFunction {
        let g = Arc::new(FiniteGroup::named("Z_2").unwrap());
        CharFunction::from_values(g, &[linalg::ONE, Complex64::new(a, 0.0)]).unwrap()
    }

    fn z2_fn(values: [f64; 2]) -> GroupFunction {
        let g = Arc::new(FiniteGroup::named("Z_2").unwrap());
        GroupFunction::new(g, values.iter().map(|&x| Complex64::new(x, 0.0)).collect()).unwrap()
    }

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    #[test]
    fn interpolator_examples() {
        let f = build_interpolator(&z2_char(0.6), &z2_char(0.7), &tol()).unwrap();
        assert!((f.values()[1].re - 6.0 / 7.0).abs() < 1e-14);
        let same = build_interpolator(&z2_char(0.6), &z2_char(0.6), &tol()).unwrap();
        assert!((same.values()[1] - linalg::ONE).norm() < 1e-14);
        assert!(is_positive_definite(&same, &tol()).unwrap().feasible);
        let err = build_interpolator(&z2_char(0.6), &z2_char(0.0), &tol()).unwrap_err();
        assert_eq!(err, Error::ZeroSetViolation(1));
    }

    #[test]
    fn gram_examples() {
        let r = is_positive_definite(&z2_fn([1.0, 1.0]), &tol()).unwrap();
        assert!(r.feasible && r.min_gram_eigenvalue.abs() < 1e-14);
        let r = is_positive_definite(&z2_fn([1.0, 6.0 / 7.0]), &tol()).unwrap();
        assert!(r.feasible && (r.min_gram_eigenvalue - 1.0 / 7.0).abs() < 1e-14);
        let r = is_positive_definite(&z2_fn([1.0, 1.2]), &tol()).unwrap();
        assert!(!r.feasible && (r.min_gram_eigenvalue + 0.2).abs() < 1e-14);
        assert_eq!(r.modulus_witness, Some(1));
    }

    #[test]
    fn non_hermitian_gram() {
        let g = Arc::new(FiniteGroup::named("Z_3").unwrap());
        // f(g⁻¹) must equal conj f(g).
        let f = GroupFunction::new(
            g,
            vec![linalg::ONE, Complex64::new(0.5, 0.0), Complex64::new(0.1, 0.0)],
        )
        .unwrap();
        assert!(matches!(is_positive_definite(&f, &tol()), Err(Error::NotHermitian(_))));
    }

    #[test]
    fn feasible_exact_examples() {
        let (a, b) = (z2_char(0.6), z2_char(0.36));
        assert!(feasible_exact(&a, &z2_char(0.6), 1, 1, &tol()).unwrap().feasible);
        let r = feasible_exact(&a, &b, 2, 1, &tol()).unwrap();
        assert!(r.feasible);
        assert!((r.f.values()[1].re - 1.0).abs() < 1e-12);
        let r = feasible_exact(&a, &b, 1, 1, &tol()).unwrap();
        assert!(!r.feasible);
        assert!((r.f.values()[1].re - 5.0 / 3.0).abs() < 1e-12);
        assert!(feasible_exact(&a, &b, 0, 1, &tol()).is_err());
    }

    #[test]
    fn search_below_and_above_rate() {
        let (a, b) = (z2_char(0.6), z2_char(0.36));
        let n = minimal_copies_search(&a, &b, 0.25, 200, &tol()).unwrap();
        assert!(matches!(n, Some(k) if k <= 7));
        assert_eq!(minimal_copies_search(&a, &b, 0.51, 200, &tol()).unwrap(), None);
        assert!(minimal_copies_search(&a, &b, 0.25, 0, &tol()).is_err());
        assert!(minimal_copies_search(&a, &b, 0.25, MAX_SEARCH_COPIES + 1, &tol()).is_err());
    }

    #[test]
    fn symmetric_target_needs_one_copy() {
        let g = Arc::new(FiniteGroup::named("Z_2").unwrap());
        let phi = CharFunction::from_values(g, &[linalg::ONE, -linalg::ONE]).unwrap();
        for r in [0.3, 1.0, 17.0] {
            assert_eq!(minimal_copies_search(&z2_char(0.6), &phi, r, 50, &tol()).unwrap(), Some(1));
        }
    }
}
