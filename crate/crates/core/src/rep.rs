//! Projective unitary representations of finite groups.

use std::sync::Arc;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::linalg::{self, CMatrix, ONE, ZERO};
use crate::tolerance::Tolerances;

/// Unitaries `U(g)` satisfying `U(g)U(h) = e^{iω(g,h)} U(gh)`.
#[derive(Debug, Clone)]
pub struct ProjectiveRep {
    group: Arc<FiniteGroup>,
    dim: usize,
    matrices: Vec<CMatrix>,
    cocycle: Vec<Vec<f64>>,
}

impl ProjectiveRep {
    /// Checks unitarity of every matrix and the projective law for every pair, and
    /// records the cocycle `ω(g,h) = arg [U(g)U(h)U(gh)^†]_{00}`.
    pub fn validate(group: Arc<FiniteGroup>, matrices: Vec<CMatrix>, tol: &Tolerances) -> Result<Self> {
        let n = group.order();
        if matrices.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: matrices.len(),
            });
        }
        let dim = matrices[0].nrows();
        if dim == 0 {
            return Err(Error::InvalidArgument("zero-dimensional representation".into()));
        }
        for m in &matrices {
            if m.nrows() != dim || m.ncols() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: if m.nrows() != dim { m.nrows() } else { m.ncols() },
                });
            }
        }
        for (g, m) in matrices.iter().enumerate() {
            if linalg::unitarity_defect(m) > tol.unitary {
                return Err(Error::NotUnitary(g));
            }
        }
        let identity = CMatrix::identity(dim, dim);
        let adjoints: Vec<CMatrix> = matrices.iter().map(|m| m.adjoint()).collect();
        let mut cocycle = vec![vec![0.0; n]; n];
        for g in 0..n {
            for h in 0..n {
                let w = &matrices[g] * &matrices[h] * &adjoints[group.mul(g, h)];
                let omega = w[(0, 0)].arg();
                let deviation =
                    linalg::max_abs_diff(&w, &(&identity * Complex64::from_polar(1.0, omega)));
                if deviation > tol.unitary {
                    return Err(Error::NotProjective { g, h, deviation });
                }
                cocycle[g][h] = omega;
            }
        }
        Ok(Self {
            group,
            dim,
            matrices,
            cocycle,
        })
    }

    /// Left-regular representation `U(g)|h⟩ = |gh⟩` (ordinary, faithful).
    pub fn regular(group: Arc<FiniteGroup>) -> Self {
        let n = group.order();
        let matrices = (0..n)
            .map(|g| {
                let mut m = CMatrix::from_element(n, n, ZERO);
                for h in 0..n {
                    m[(group.mul(g, h), h)] = ONE;
                }
                m
            })
            .collect();
        Self {
            cocycle: vec![vec![0.0; n]; n],
            group,
            dim: n,
            matrices,
        }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self, g: usize) -> &CMatrix {
        &self.matrices[g]
    }

    pub fn matrices(&self) -> &[CMatrix] {
        &self.matrices
    }

    /// `ω(g,h)` in radians.
    pub fn cocycle(&self, g: usize, h: usize) -> f64 {
        self.cocycle[g][h]
    }

    /// True if every cocycle phase is zero within `tol`.
    pub fn is_ordinary(&self, tol: f64) -> bool {
        self.cocycle
            .iter()
            .flatten()
            .all(|&w| Complex64::from_polar(1.0, w).re > 1.0 - tol)
    }

    /// `U(g) → e^{iφ_g} U(g)`.
    pub fn regauge(&self, phases: &[f64], tol: &Tolerances) -> Result<Self> {
        if phases.len() != self.group.order() {
            return Err(Error::DimensionMismatch {
                expected: self.group.order(),
                got: phases.len(),
            });
        }
        let matrices = self
            .matrices
            .iter()
            .zip(phases)
            .map(|(m, &p)| m * Complex64::from_polar(1.0, p))
            .collect();
        Self::validate(self.group.clone(), matrices, tol)
    }

    /// `U^{⊗k}` on the `dim^k`-dimensional space.
    pub fn tensor_power(&self, k: usize, tol: &Tolerances) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidArgument("tensor power must be at least 1".into()));
        }
        let matrices = self
            .matrices
            .iter()
            .map(|m| (1..k).fold(m.clone(), |acc, _| linalg::kron(&acc, m)))
            .collect();
        Self::validate(self.group.clone(), matrices, tol)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::CVector;

    fn diag(entries: &[Complex64]) -> CMatrix {
        CMatrix::from_diagonal(&CVector::from_row_slice(entries))
    }

    #[test]
    fn z2_diagonal_rep_is_ordinary() {
        let g = Arc::new(FiniteGroup::named("Z_2").unwrap());
        let rep = ProjectiveRep::validate(
            g,
            vec![CMatrix::identity(2, 2), diag(&[ONE, -ONE])],
            &Tolerances::default(),
        )
        .unwrap();
        assert!(rep.is_ordinary(1e-12));
    }

    #[test]
    fn z4_phase_rep_is_ordinary() {
        let g = Arc::new(FiniteGroup::named("Z_4").unwrap());
        let i = Complex64::new(0.0, 1.0);
        let mats = (0..4).map(|k| diag(&[ONE, i.powi(k)])).collect();
        let rep = ProjectiveRep::validate(g, mats, &Tolerances::default()).unwrap();
        for a in 0..4 {
            for b in 0..4 {
                assert!(rep.cocycle(a, b).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn non_unitary_is_rejected() {
        let g = Arc::new(FiniteGroup::named("Z_2").unwrap());
        let shear = CMatrix::from_row_slice(2, 2, &[ONE, ONE, ZERO, ONE]);
        let err = ProjectiveRep::validate(g, vec![CMatrix::identity(2, 2), shear], &Tolerances::default())
            .unwrap_err();
        assert_eq!(err, Error::NotUnitary(1));
    }

    #[test]
    fn wrong_group_law_is_not_projective() {
        // diag(1, i) squares to diag(1, -1), which is not a phase times U(e) = I.
        let g = Arc::new(FiniteGroup::named("Z_2").unwrap());
        let i = Complex64::new(0.0, 1.0);
        let err = ProjectiveRep::validate(g, vec![CMatrix::identity(2, 2), diag(&[ONE, i])], &Tolerances::default())
            .unwrap_err();
        assert!(matches!(err, Error::NotProjective { g: 1, h: 1, .. }));
    }

    #[test]
    fn pauli_rep_of_klein_group_is_projective() {
        let g = Arc::new(FiniteGroup::named("Z_2×Z_2").unwrap());
        let i = Complex64::new(0.0, 1.0);
        let x = CMatrix::from_row_slice(2, 2, &[ZERO, ONE, ONE, ZERO]);
        let z = diag(&[ONE, -ONE]);
        let y = CMatrix::from_row_slice(2, 2, &[ZERO, -i, i, ZERO]);
        // Row-major labels: (0,0)=0, (0,1)=1, (1,0)=2, (1,1)=3.
        let rep = ProjectiveRep::validate(g, vec![CMatrix::identity(2, 2), z, x, y], &Tolerances::default())
            .unwrap();
        assert!(!rep.is_ordinary(1e-9));
    }

    #[test]
    fn regular_rep_validates() {
        for name in ["Z_3", "S_3", "D_4", "Q_8"] {
            let g = Arc::new(FiniteGroup::named(name).unwrap());
            let rep = ProjectiveRep::regular(g.clone());
            let again = ProjectiveRep::validate(g, rep.matrices().to_vec(), &Tolerances::default()).unwrap();
            assert!(again.is_ordinary(1e-12));
        }
    }
}
