//! Optimal exact i.i.d. conversion rate for finite groups.
//!
//! With `S = sym(φ) ∪ zero(φ)`, the rate is `min_{g ∉ S} L(ψ,g)/L(φ,g)` when
//! `zero(φ) ⊆ zero(ψ)` and zero otherwise. When `sym(φ) = {e}` this is exactly the
//! general finite-group formula; for abelian groups the same expression holds with
//! nontrivial `sym(φ)`. Outside both cases the value is still computed but reported
//! with `assumption_ok = false`.

use serde::Serialize;

use crate::charfn::CharFunction;
use crate::error::{Error, Result};
use crate::group::ElementSet;
use crate::tolerance::Tolerances;

/// Relative slack under which two ratios count as tied for the witness.
const TIE_RTOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", content = "value")]
pub enum Rate {
    Finite(f64),
    Zero,
    Unbounded,
}

impl Rate {
    /// Numeric value, with `Unbounded` as `+∞`.
    pub fn value(&self) -> f64 {
        match *self {
            Rate::Finite(x) => x,
            Rate::Zero => 0.0,
            Rate::Unbounded => f64::INFINITY,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RateReport {
    pub rate: Rate,
    /// Smallest-index minimizer of the ratio (or the zero-set witness when
    /// `rate = Zero`).
    pub witness: Option<usize>,
    pub assumption_ok: bool,
    pub commutative: bool,
    pub excluded_set: ElementSet,
    pub sym_psi: ElementSet,
    pub sym_phi: ElementSet,
    pub zero_psi: ElementSet,
    pub zero_phi: ElementSet,
    /// Copy count from [`copies_bound`] when a sub-rate was requested.
    pub n_bound: Option<u64>,
    pub warnings: Vec<String>,
}

/// Optimal exact rate for `ψ → φ`.
///
/// `commutative` selects the abelian variant, which allows `sym(φ) ⊋ {e}`.
pub fn exact_rate(
    psi: &CharFunction,
    phi: &CharFunction,
    commutative: bool,
    tol: &Tolerances,
) -> Result<RateReport> {
    if !psi.same_group(phi) {
        return Err(Error::GroupMismatch);
    }
    let group = psi.group();
    let sets_psi = psi.classify(tol.one, tol.zero)?;
    let sets_phi = phi.classify(tol.one, tol.zero)?;
    let excluded: ElementSet = sets_phi.sym.union(&sets_phi.zero).copied().collect();

    let mut warnings = Vec::new();
    let trivial_sym = sets_phi.sym.len() == 1;
    let abelian = group.is_abelian();
    if commutative && !abelian {
        warnings.push("commutative variant requested for a nonabelian group".to_string());
    }
    let assumption_ok = trivial_sym || (commutative && abelian);
    if !assumption_ok {
        warnings.push(
            "sym(phi) is nontrivial and the group is not treated as commutative; \
             the formula value is not guaranteed to be the optimal rate"
                .to_string(),
        );
    }

    let mut report = RateReport {
        rate: Rate::Unbounded,
        witness: None,
        assumption_ok,
        commutative,
        excluded_set: excluded.clone(),
        sym_psi: sets_psi.sym.clone(),
        sym_phi: sets_phi.sym.clone(),
        zero_psi: sets_psi.zero.clone(),
        zero_phi: sets_phi.zero.clone(),
        n_bound: None,
        warnings,
    };

    if let Some(&g) = sets_phi.zero.difference(&sets_psi.zero).next() {
        report.rate = Rate::Zero;
        report.witness = Some(g);
        return Ok(report);
    }

    let mut best: Option<(usize, f64)> = None;
    for g in group.elements().filter(|g| !excluded.contains(g)) {
        let l_psi = -psi.value(g).logmod;
        let l_phi = -phi.value(g).logmod;
        let ratio = l_psi / l_phi;
        if !ratio.is_finite() {
            continue;
        }
        match best {
            Some((_, b)) if ratio >= b * (1.0 - TIE_RTOL) - f64::MIN_POSITIVE => {}
            _ => best = Some((g, ratio)),
        }
    }
    if let Some((g, ratio)) = best {
        report.rate = Rate::Finite(ratio.max(0.0));
        report.witness = Some(g);
    } else {
        report.warnings.push(
            "every non-excluded element has infinite ratio (or none remain)".to_string(),
        );
    }
    Ok(report)
}

/// Copy count `⌈2 ln|G| / (-ln s)⌉ + 1` above which `ψ^{⊗N} → φ^{⊗⌊rN⌋}` is
/// guaranteed, with `s = max_{g ∉ sym(φ) ∪ zero(φ)} |χ_ψ(g)| / |χ_φ(g)|^r`.
pub fn copies_bound(psi: &CharFunction, phi: &CharFunction, r: f64, tol: &Tolerances) -> Result<u64> {
    if !psi.same_group(phi) {
        return Err(Error::GroupMismatch);
    }
    if !(r > 0.0 && r.is_finite()) {
        return Err(Error::InvalidArgument(format!("rate must be positive, got {r}")));
    }
    let sets_psi = psi.classify(tol.one, tol.zero)?;
    let sets_phi = phi.classify(tol.one, tol.zero)?;
    if let Some(&g) = sets_phi.zero.difference(&sets_psi.zero).next() {
        return Err(Error::ZeroSetViolation(g));
    }
    let log_s = psi
        .group()
        .elements()
        .filter(|g| !sets_phi.sym.contains(g) && !sets_phi.zero.contains(g))
        .map(|g| psi.value(g).logmod - r * phi.value(g).logmod)
        .fold(f64::NEG_INFINITY, f64::max);
    if log_s >= 0.0 {
        return Err(Error::RateNotBelowOptimal { s: log_s.exp() });
    }
    let order = psi.group().order() as f64;
    let threshold = 2.0 * order.ln() / -log_s;
    Ok(threshold.ceil() as u64 + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use num_complex::Complex64;
    use std::sync::Arc;

    fn z2(a: f64) -> CharFunction {
        let g = Arc::new(FiniteGroup::named("Z_2").unwrap());
        CharFunction::from_values(g, &[Complex64::new(1.0, 0.0), Complex64::new(a, 0.0)]).unwrap()
    }

    fn z2_pair(a: f64, b: f64) -> (CharFunction, CharFunction) {
        let x = z2(a);
        let y = CharFunction::from_values(x.group().clone(), &[Complex64::new(1.0, 0.0), Complex64::new(b, 0.0)])
            .unwrap();
        (x, y)
    }

    #[test]
    fn z2_half_rate() {
        let (psi, phi) = z2_pair(0.6, 0.36);
        let rep = exact_rate(&psi, &phi, false, &Tolerances::default()).unwrap();
        match rep.rate {
            Rate::Finite(r) => assert!((r - 0.5).abs() < 1e-14),
            other => panic!("{other:?}"),
        }
        assert_eq!(rep.witness, Some(1));
        assert!(rep.assumption_ok);
    }

    #[test]
    fn identical_states_rate_one() {
        let (psi, phi) = z2_pair(0.3, 0.3);
        let rep = exact_rate(&psi, &phi, false, &Tolerances::default()).unwrap();
        assert_eq!(rep.rate, Rate::Finite(1.0));
    }

    #[test]
    fn zero_set_violation_gives_zero_rate() {
        let (psi, phi) = z2_pair(0.6, 0.0);
        let rep = exact_rate(&psi, &phi, false, &Tolerances::default()).unwrap();
        assert_eq!(rep.rate, Rate::Zero);
        assert_eq!(rep.witness, Some(1));
    }

    #[test]
    fn symmetric_target_is_unbounded() {
        let (psi, phi) = z2_pair(0.6, 1.0);
        let rep = exact_rate(&psi, &phi, true, &Tolerances::default()).unwrap();
        assert_eq!(rep.rate, Rate::Unbounded);
        assert!(rep.assumption_ok);
        let rep = exact_rate(&psi, &phi, false, &Tolerances::default()).unwrap();
        assert!(!rep.assumption_ok);
        assert!(!rep.warnings.is_empty());
    }

    #[test]
    fn source_zero_gives_infinite_ratio() {
        // χ_ψ(g1) = 0 while χ_φ(g1) ≠ 0: the only ratio is infinite.
        let (psi, phi) = z2_pair(0.0, 0.5);
        let rep = exact_rate(&psi, &phi, false, &Tolerances::default()).unwrap();
        assert_eq!(rep.rate, Rate::Unbounded);
    }

    #[test]
    fn copies_bound_example() {
        let (psi, phi) = z2_pair(0.6, 0.36);
        assert_eq!(copies_bound(&psi, &phi, 0.25, &Tolerances::default()).unwrap(), 7);
    }

    #[test]
    fn copies_bound_rejects_optimal_rate() {
        let (psi, phi) = z2_pair(0.6, 0.36);
        for r in [0.5 + 1e-9, 0.7, 3.0] {
            assert!(matches!(
                copies_bound(&psi, &phi, r, &Tolerances::default()),
                Err(Error::RateNotBelowOptimal { .. })
            ));
        }
    }

    #[test]
    fn copies_bound_small_rate_limit() {
        // r → 0: s → |χ_ψ|.
        let (psi, phi) = z2_pair(0.6, 0.36);
        let n = copies_bound(&psi, &phi, 1e-12, &Tolerances::default()).unwrap();
        let expected = (2.0 * 2f64.ln() / -(0.6f64.ln())).ceil() as u64 + 1;
        assert_eq!(n, expected);
    }

    #[test]
    fn power_scales_rate() {
        let (psi, phi) = z2_pair(0.6, 0.2);
        let base = exact_rate(&psi, &phi, false, &Tolerances::default()).unwrap().rate.value();
        for k in 1..=3 {
            let r = exact_rate(&psi.power(k), &phi, false, &Tolerances::default())
                .unwrap()
                .rate
                .value();
            assert!((r - k as f64 * base).abs() < 1e-12);
        }
    }
}
