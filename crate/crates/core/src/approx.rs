//! Approximate i.i.d. conversion for finite groups.
//!
//! `ψ^{⊗|G|N}` approaches the uniform state of its own symmetry subgroup
//! exponentially fast, and a uniform state with symmetry `H` converts exactly into
//! any number of copies of `φ` once `H ⊆ sym(φ)`. The approximate rate is therefore
//! unbounded when `sym(ψ) ⊆ sym(φ)` and zero otherwise.
//!
//! The convergence curve reported here is the characteristic-function distance
//! `δ_N = ½ Σ_{g ∉ sym(ψ)} |χ_ψ(g)|^{|G|N}`, next to its upper bound
//! `ε_N = |G| s^{|G|N} / 2`. Both are also kept as logarithms, since they underflow
//! quickly.

use std::sync::Arc;

use serde::Serialize;

use crate::charfn::CharFunction;
use crate::error::{Error, Result};
use crate::group::{ElementSet, FiniteGroup};
use crate::convertibility::GroupFunction;
use crate::tolerance::Tolerances;

/// Characteristic function of the uniform state with symmetry `H`: `1_H`.
#[derive(Debug, Clone)]
pub struct UniformCharFunction {
    group: Arc<FiniteGroup>,
    subgroup: ElementSet,
}

impl UniformCharFunction {
    pub fn new(group: Arc<FiniteGroup>, subgroup: ElementSet) -> Result<Self> {
        if !group.is_subgroup(&subgroup) {
            return Err(Error::NotASubgroup);
        }
        Ok(Self { group, subgroup })
    }

    pub fn subgroup(&self) -> &ElementSet {
        &self.subgroup
    }

    pub fn value(&self, g: usize) -> f64 {
        if self.subgroup.contains(&g) {
            1.0
        } else {
            0.0
        }
    }

    pub fn to_group_function(&self) -> GroupFunction {
        GroupFunction::indicator(self.group.clone(), &self.subgroup)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ApproxClass {
    Unbounded,
    Zero,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CurvePoint {
    pub n: u64,
    pub value: f64,
    pub ln_value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConvergenceCurves {
    /// Largest `|χ_ψ|` off `sym(ψ)` (0 when `ψ` is symmetric).
    pub s: f64,
    pub bound: Vec<CurvePoint>,
    pub measured: Vec<CurvePoint>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ApproxReport {
    pub classification: ApproxClass,
    pub sym_psi: ElementSet,
    pub sym_phi: ElementSet,
    /// An element of `sym(ψ) ∖ sym(φ)` when the rate is zero.
    pub witness: Option<usize>,
    /// Whether the uniform state of `sym(ψ)` generates `φ` (the second stage).
    pub generation_ok: bool,
    pub curves: Option<ConvergenceCurves>,
}

fn log_sum_exp(xs: impl Iterator<Item = f64>) -> f64 {
    let xs: Vec<f64> = xs.collect();
    let max = xs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if max == f64::NEG_INFINITY {
        return max;
    }
    max + xs.iter().map(|x| (x - max).exp()).sum::<f64>().ln()
}

/// `ε_N` and `δ_N` for each `N` in `ns`.
pub fn convergence_to_uniform(psi: &CharFunction, ns: &[u64], tol: &Tolerances) -> Result<ConvergenceCurves> {
    let sets = psi.classify(tol.one, tol.zero)?;
    let group = psi.group();
    let order = group.order() as f64;
    let off_sym: Vec<f64> = group
        .elements()
        .filter(|g| !sets.sym.contains(g))
        .map(|g| psi.value(g).logmod)
        .collect();
    let ln_s = off_sym.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if ln_s >= (1.0 - tol.one).ln() {
        return Err(Error::NoDecay);
    }
    let mut bound = Vec::with_capacity(ns.len());
    let mut measured = Vec::with_capacity(ns.len());
    for &n in ns {
        let k = order * n as f64;
        let ln_eps = if off_sym.is_empty() {
            f64::NEG_INFINITY
        } else {
            order.ln() + k * ln_s - std::f64::consts::LN_2
        };
        let ln_delta = log_sum_exp(off_sym.iter().map(|&l| k * l)) - std::f64::consts::LN_2;
        debug_assert!(ln_delta <= ln_eps + 1e-12 || ln_delta == f64::NEG_INFINITY);
        bound.push(CurvePoint {
            n,
            value: ln_eps.exp(),
            ln_value: ln_eps,
        });
        measured.push(CurvePoint {
            n,
            value: ln_delta.exp(),
            ln_value: ln_delta,
        });
    }
    Ok(ConvergenceCurves {
        s: ln_s.exp(),
        bound,
        measured,
    })
}

/// Outcome of the uniform-state generation check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GenerationCheck {
    /// `H ⊆ sym(φ)`.
    pub possible: bool,
    /// `1_H(g) = 1_H(g)·χ_φ(g)^{|G|M}` for all `g`, including phases.
    pub identity_holds: bool,
}

/// Whether the uniform state with symmetry `h` converts exactly into `φ^{⊗m}`.
pub fn can_generate_from_uniform(
    h: &UniformCharFunction,
    phi: &CharFunction,
    m: u64,
    tol: &Tolerances,
) -> Result<GenerationCheck> {
    if h.group.table() != phi.group().table() {
        return Err(Error::GroupMismatch);
    }
    let sym_phi = phi.classify(tol.one, tol.zero)?.sym;
    let possible = h.subgroup.is_subset(&sym_phi);
    let target = phi.power(h.group.order() as u64 * m);
    let identity_holds = possible
        && h.group.elements().all(|g| {
            let lhs = h.value(g);
            let rhs = lhs * target.to_complex(g);
            (rhs - num_complex::Complex64::new(lhs, 0.0)).norm() <= 1e-8
        });
    Ok(GenerationCheck {
        possible,
        identity_holds,
    })
}

/// Classifies the approximate rate as unbounded (`sym(ψ) ⊆ sym(φ)`) or zero, and
/// attaches convergence curves for each `N` in `ns` when `ψ` decays.
pub fn approx_rate_class(
    psi: &CharFunction,
    phi: &CharFunction,
    ns: &[u64],
    tol: &Tolerances,
) -> Result<ApproxReport> {
    if !psi.same_group(phi) {
        return Err(Error::GroupMismatch);
    }
    let sym_psi = psi.classify(tol.one, tol.zero)?.sym;
    let sym_phi = phi.classify(tol.one, tol.zero)?.sym;
    let witness = sym_psi.difference(&sym_phi).next().copied();
    let classification = if witness.is_none() {
        ApproxClass::Unbounded
    } else {
        ApproxClass::Zero
    };
    let uniform = UniformCharFunction::new(psi.group().clone(), sym_psi.clone())?;
    let generation_ok = can_generate_from_uniform(&uniform, phi, 1, tol)?.possible;
    let curves = match convergence_to_uniform(psi, ns, tol) {
        Ok(c) => Some(c),
        Err(Error::NoDecay) => None,
        Err(e) => return Err(e),
    };
    Ok(ApproxReport {
        classification,
        sym_psi,
        sym_phi,
        witness,
        generation_ok,
        curves,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convertibility::is_positive_definite;
    use num_complex::Complex64;

    fn z2(a: f64) -> CharFunction {
        let g = Arc::new(FiniteGroup::named("Z_2").unwrap());
        CharFunction::from_values(g, &[Complex64::new(1.0, 0.0), Complex64::new(a, 0.0)]).unwrap()
    }

    #[test]
    fn uniform_examples() {
        let z4 = Arc::new(FiniteGroup::named("Z_4").unwrap());
        let u = UniformCharFunction::new(z4.clone(), ElementSet::from([0, 2])).unwrap();
        assert_eq!((0..4).map(|g| u.value(g)).collect::<Vec<_>>(), vec![1.0, 0.0, 1.0, 0.0]);
        let trivial = UniformCharFunction::new(z4.clone(), ElementSet::from([0])).unwrap();
        assert_eq!(trivial.value(1), 0.0);
        let full = UniformCharFunction::new(z4.clone(), (0..4).collect()).unwrap();
        assert!((0..4).all(|g| full.value(g) == 1.0));
        assert!(matches!(
            UniformCharFunction::new(z4, ElementSet::from([0, 1])),
            Err(Error::NotASubgroup)
        ));
    }

    #[test]
    fn subgroup_indicators_are_positive_definite() {
        for name in ["Z_6", "S_3", "D_4", "Q_8", "Z_2×Z_2"] {
            let g = Arc::new(FiniteGroup::named(name).unwrap());
            for h in g.subgroups() {
                let u = UniformCharFunction::new(g.clone(), h).unwrap();
                assert!(is_positive_definite(&u.to_group_function(), &Tolerances::default()).unwrap().feasible);
            }
        }
    }

    #[test]
    fn z2_curve_point() {
        let c = convergence_to_uniform(&z2(0.6), &[5], &Tolerances::default()).unwrap();
        assert!((c.bound[0].value - 0.6f64.powi(10)).abs() < 1e-15);
        assert!((c.measured[0].value - 0.6f64.powi(10) / 2.0).abs() < 1e-15);
        assert!((c.s - 0.6).abs() < 1e-15);
    }

    #[test]
    fn symmetric_state_has_zero_distance() {
        let c = convergence_to_uniform(&z2(-1.0), &[1, 2, 3], &Tolerances::default()).unwrap();
        assert!(c.measured.iter().all(|p| p.value == 0.0));
    }

    #[test]
    fn classification_examples() {
        let t = Tolerances::default();
        let r = approx_rate_class(&z2(0.6), &z2(0.9), &[1], &t).unwrap();
        assert_eq!(r.classification, ApproxClass::Unbounded);
        assert!(r.generation_ok);
        let r = approx_rate_class(&z2(1.0), &z2(0.3), &[1], &t).unwrap();
        assert_eq!(r.classification, ApproxClass::Zero);
        assert_eq!(r.witness, Some(1));
        assert!(r.curves.is_some());
        let r = approx_rate_class(&z2(0.3), &z2(0.3), &[1], &t).unwrap();
        assert_eq!(r.classification, ApproxClass::Unbounded);
    }

    #[test]
    fn generation_examples() {
        let t = Tolerances::default();
        let g = Arc::new(FiniteGroup::named("Z_2").unwrap());
        let trivial = UniformCharFunction::new(g.clone(), ElementSet::from([0])).unwrap();
        for m in [1, 4] {
            let c = can_generate_from_uniform(&trivial, &z2(0.3), m, &t).unwrap();
            assert!(c.possible && c.identity_holds);
        }
        let full = UniformCharFunction::new(g, ElementSet::from([0, 1])).unwrap();
        assert!(!can_generate_from_uniform(&full, &z2(0.3), 1, &t).unwrap().possible);
        let ok = can_generate_from_uniform(&full, &z2(-1.0), 3, &t).unwrap();
        assert!(ok.possible && ok.identity_holds);
    }
}
