use serde::{Deserialize, Serialize};

/// Numerical tolerances shared by every computation.
///
/// Defaults: `unitary = norm = one = zero = 1e-10`, `psd = w = 1e-9`, `supp = 1e-12`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    /// Max-entry deviation allowed in unitarity and projective-law checks.
    pub unitary: f64,
    /// Deviation of a state norm from 1.
    pub norm: f64,
    /// `|χ| ≥ 1 - one` classifies an element as symmetric.
    pub one: f64,
    /// `|χ| ≤ zero` classifies an element as a zero.
    pub zero: f64,
    /// Gram test passes when `λ_min ≥ -psd·|G|`; also used for QFIM pencils.
    pub psd: f64,
    /// Inverse-Fourier weights pass when `min w ≥ -w`.
    pub w: f64,
    /// Pairs of eigenvalues with `p_k + p_l ≤ supp` are dropped from the QFIM sum.
    pub supp: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            unitary: 1e-10,
            norm: 1e-10,
            one: 1e-10,
            zero: 1e-10,
            psd: 1e-9,
            w: 1e-9,
            supp: 1e-12,
        }
    }
}
