use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{self, CMatrix, CVector};
use crate::tolerance::Tolerances;

/// Unit vector in `C^d`.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    amplitudes: CVector,
}

impl PureState {
    /// Accepts `amplitudes` only if its norm is 1 within `tol.norm`.
    pub fn new(amplitudes: Vec<Complex64>, tol: &Tolerances) -> Result<Self> {
        if amplitudes.is_empty() {
            return Err(Error::InvalidArgument("empty state".into()));
        }
        let v = CVector::from_vec(amplitudes);
        let norm = v.norm();
        if (norm - 1.0).abs() > tol.norm {
            return Err(Error::NotNormalized(norm));
        }
        Ok(Self { amplitudes: v })
    }

    /// Rescales `amplitudes` to unit norm.
    pub fn normalized(amplitudes: Vec<Complex64>) -> Result<Self> {
        let v = CVector::from_vec(amplitudes);
        let norm = v.norm();
        if v.is_empty() || norm == 0.0 || !norm.is_finite() {
            return Err(Error::NotNormalized(norm));
        }
        Ok(Self {
            amplitudes: v / Complex64::new(norm, 0.0),
        })
    }

    /// State with real amplitudes `sqrt(p_k)`.
    pub fn from_populations(p: &[f64]) -> Result<Self> {
        Self::normalized(p.iter().map(|&x| Complex64::new(x.max(0.0).sqrt(), 0.0)).collect())
    }

    pub fn basis(dim: usize, k: usize) -> Self {
        let mut v = CVector::zeros(dim);
        v[k] = Complex64::new(1.0, 0.0);
        Self { amplitudes: v }
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &CVector {
        &self.amplitudes
    }

    pub fn tensor(&self, other: &PureState) -> PureState {
        PureState {
            amplitudes: linalg::kron_vec(&self.amplitudes, &other.amplitudes),
        }
    }

    pub fn tensor_power(&self, k: usize) -> PureState {
        (1..k.max(1)).fold(self.clone(), |acc, _| acc.tensor(self))
    }

    /// `|ψ⟩⟨ψ|`.
    pub fn density(&self) -> CMatrix {
        &self.amplitudes * self.amplitudes.adjoint()
    }

    /// `⟨ψ|M|ψ⟩`.
    pub fn expectation(&self, m: &CMatrix) -> Complex64 {
        linalg::expectation(m, &self.amplitudes)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_unnormalized() {
        let err = PureState::new(vec![Complex64::new(1.0, 0.0); 2], &Tolerances::default()).unwrap_err();
        assert!(matches!(err, Error::NotNormalized(n) if (n - 2f64.sqrt()).abs() < 1e-12));
    }

    #[test]
    fn tensor_power_norm() {
        let s = PureState::from_populations(&[0.8, 0.2]).unwrap();
        let t = s.tensor_power(3);
        assert_eq!(t.dim(), 8);
        assert!((t.amplitudes().norm() - 1.0).abs() < 1e-12);
        assert!((t.amplitudes()[0].re - 0.8f64.powf(1.5)).abs() < 1e-12);
    }
}
