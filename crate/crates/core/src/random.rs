//! Seeded random instances for tests, benchmarks and the example corpus.

use rand::Rng;
use rand_distr::{Distribution, Exp1, StandardNormal};

use crate::group::ElementSet;
use crate::linalg::{CMatrix, CVector, RMatrix};
use crate::rep::ProjectiveRep;
use crate::state::PureState;
use crate::Complex64;

fn gaussian_complex<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    Complex64::new(StandardNormal.sample(rng), StandardNormal.sample(rng))
}

/// Haar-random pure state.
pub fn state<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> PureState {
    loop {
        let v: Vec<Complex64> = (0..dim).map(|_| gaussian_complex(rng)).collect();
        if let Ok(s) = PureState::normalized(v) {
            return s;
        }
    }
}

/// Probability vector, uniform on the simplex.
pub fn populations<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<f64> {
    let x: Vec<f64> = (0..n).map(|_| Exp1.sample(rng)).collect();
    let total: f64 = x.iter().sum();
    x.into_iter().map(|v| v / total).collect()
}

/// Hermitian matrix with Gaussian entries.
pub fn hermitian<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> CMatrix {
    let a = CMatrix::from_fn(dim, dim, |_, _| gaussian_complex(rng));
    (&a + a.adjoint()) * Complex64::new(0.5, 0.0)
}

/// Real matrix with standard normal entries.
pub fn real_matrix<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize) -> RMatrix {
    RMatrix::from_fn(rows, cols, |_, _| StandardNormal.sample(rng))
}

/// Symmetric positive definite matrix `AAᵀ + shift·I`.
pub fn spd<R: Rng + ?Sized>(rng: &mut R, m: usize, shift: f64) -> RMatrix {
    let a = real_matrix(rng, m, m);
    &a * a.transpose() + RMatrix::identity(m, m) * shift
}

/// Random state in the range of `(1/|H|) Σ_{h∈H} U(h)`, i.e. invariant under
/// `H` up to the representation phases. `None` if that range looks empty.
pub fn invariant_state<R: Rng + ?Sized>(
    rng: &mut R,
    rep: &ProjectiveRep,
    subgroup: &ElementSet,
) -> Option<PureState> {
    let d = rep.dim();
    let projector = subgroup
        .iter()
        .fold(CMatrix::zeros(d, d), |acc, &h| acc + rep.matrix(h))
        * Complex64::new(1.0 / subgroup.len() as f64, 0.0);
    for _ in 0..8 {
        let v = CVector::from_fn(d, |_, _| gaussian_complex(rng));
        let w = &projector * v;
        if w.norm() > 1e-6 {
            return PureState::normalized(w.iter().copied().collect()).ok();
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charfn::CharFunction;
    use crate::group::FiniteGroup;
    use crate::Tolerances;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::sync::Arc;

    #[test]
    fn seeded_states_are_reproducible() {
        let a = state(&mut ChaCha8Rng::seed_from_u64(3), 4);
        let b = state(&mut ChaCha8Rng::seed_from_u64(3), 4);
        assert_eq!(a.amplitudes(), b.amplitudes());
        assert!((a.amplitudes().norm() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn populations_sum_to_one() {
        let p = populations(&mut ChaCha8Rng::seed_from_u64(1), 7);
        assert!((p.iter().sum::<f64>() - 1.0).abs() < 1e-14);
        assert!(p.iter().all(|&x| x > 0.0));
    }

    #[test]
    fn invariant_state_has_subgroup_in_sym() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let g = Arc::new(FiniteGroup::named("S_3").unwrap());
        let rep = ProjectiveRep::regular(g.clone());
        let t = Tolerances::default();
        for h in g.subgroups() {
            let s = invariant_state(&mut rng, &rep, &h).unwrap();
            let sym = CharFunction::new(&rep, &s).unwrap().classify(t.one, t.zero).unwrap().sym;
            assert!(h.is_subset(&sym));
        }
    }
}
