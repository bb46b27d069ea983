//! Characteristic functions `χ_ψ(g) = ⟨ψ|U(g)|ψ⟩`, the measures `L(ψ,g)`, and the
//! symmetry / zero sets.
//!
//! Values are stored as `(ln|χ|, arg χ)` so that tensor powers `ψ^{⊗N}` with very
//! large `N` stay representable: `char_power` only rescales the pair. A
//! [`CharFunction`] also remembers how many copies it describes, and every
//! classification is made on the per-copy modulus, so `sym` and `zero` of `ψ^{⊗N}`
//! coincide with those of `ψ` regardless of how small `|χ|^N` gets.

use std::f64::consts::PI;
use std::sync::Arc;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::group::{ElementSet, FiniteGroup};
use crate::rep::ProjectiveRep;
use crate::state::PureState;

/// One value of a characteristic function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CharValue {
    /// `ln|χ(g)|`, `-∞` when `χ(g) = 0`.
    pub logmod: f64,
    /// `arg χ(g)` in `(-π, π]`.
    pub phase: f64,
}

impl CharValue {
    pub const ONE: CharValue = CharValue {
        logmod: 0.0,
        phase: 0.0,
    };

    pub fn from_complex(z: Complex64) -> Self {
        let m = z.norm();
        if m == 0.0 {
            CharValue {
                logmod: f64::NEG_INFINITY,
                phase: 0.0,
            }
        } else {
            CharValue {
                logmod: m.ln().min(0.0),
                phase: z.arg(),
            }
        }
    }

    pub fn modulus(&self) -> f64 {
        self.logmod.exp()
    }

    /// Plain complex value; underflows to 0 for very negative `logmod`.
    pub fn to_complex(&self) -> Complex64 {
        Complex64::from_polar(self.modulus(), self.phase)
    }
}

/// `χ` over a finite group, for the state `ψ^{⊗copies}`.
#[derive(Debug, Clone)]
pub struct CharFunction {
    group: Arc<FiniteGroup>,
    values: Vec<CharValue>,
    copies: u64,
}

/// Elements where `|χ| = 1` (`sym`) and where `χ = 0` (`zero`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassSets {
    pub sym: ElementSet,
    pub zero: ElementSet,
}

/// Wraps an angle into `(-π, π]`.
pub fn wrap_phase(x: f64) -> f64 {
    let y = (x + PI).rem_euclid(2.0 * PI) - PI;
    if y == -PI {
        PI
    } else {
        y
    }
}

impl CharFunction {
    /// `χ_ψ(g) = ⟨ψ|U(g)|ψ⟩` for every `g`; `χ(e)` is set to exactly 1.
    pub fn new(rep: &ProjectiveRep, state: &PureState) -> Result<Self> {
        if state.dim() != rep.dim() {
            return Err(Error::DimensionMismatch {
                expected: rep.dim(),
                got: state.dim(),
            });
        }
        let group = rep.group().clone();
        let e = group.identity();
        let values = group
            .elements()
            .map(|g| {
                if g == e {
                    CharValue::ONE
                } else {
                    CharValue::from_complex(state.expectation(rep.matrix(g)))
                }
            })
            .collect();
        Ok(Self {
            group,
            values,
            copies: 1,
        })
    }

    /// Builds a single-copy characteristic function from plain complex values.
    ///
    /// `values[e]` must be 1 and every modulus at most 1, both within `1e-9`.
    pub fn from_values(group: Arc<FiniteGroup>, values: &[Complex64]) -> Result<Self> {
        if values.len() != group.order() {
            return Err(Error::DimensionMismatch {
                expected: group.order(),
                got: values.len(),
            });
        }
        let e = group.identity();
        if (values[e] - Complex64::new(1.0, 0.0)).norm() > 1e-9 {
            return Err(Error::InvalidArgument(format!(
                "value at the identity is {}, expected 1",
                values[e]
            )));
        }
        if let Some((g, z)) = values.iter().enumerate().find(|(_, z)| z.norm() > 1.0 + 1e-9) {
            return Err(Error::InvalidArgument(format!(
                "|χ({g})| = {} exceeds 1",
                z.norm()
            )));
        }
        let values = values
            .iter()
            .enumerate()
            .map(|(g, &z)| {
                if g == e {
                    CharValue::ONE
                } else {
                    CharValue::from_complex(z)
                }
            })
            .collect();
        Ok(Self {
            group,
            values,
            copies: 1,
        })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    /// Number of tensor copies this function describes.
    pub fn copies(&self) -> u64 {
        self.copies
    }

    pub fn values(&self) -> &[CharValue] {
        &self.values
    }

    pub fn value(&self, g: usize) -> CharValue {
        self.values[g]
    }

    pub fn modulus(&self, g: usize) -> f64 {
        self.values[g].modulus()
    }

    pub fn to_complex(&self, g: usize) -> Complex64 {
        self.values[g].to_complex()
    }

    /// `ln|χ(g)|` divided by the number of copies.
    pub fn per_copy_logmod(&self, g: usize) -> f64 {
        let v = self.values[g].logmod;
        if self.copies == 0 {
            v
        } else {
            v / self.copies as f64
        }
    }

    /// `L(ψ,g) = -ln|χ_ψ(g)|`, `+∞` where `χ` vanishes.
    pub fn resource_measure(&self, g: usize) -> Result<f64> {
        self.group.check_element(g)?;
        Ok(-self.values[g].logmod + 0.0)
    }

    /// Classifies every element as symmetric (`|χ| ≥ 1 - tol_one`) and/or zero
    /// (`|χ| ≤ tol_zero`), per copy.
    pub fn classify(&self, tol_one: f64, tol_zero: f64) -> Result<ClassSets> {
        for t in [tol_one, tol_zero] {
            if !(t > 0.0 && t < 1.0) {
                return Err(Error::InvalidArgument(format!(
                    "classification tolerance {t} outside (0, 1)"
                )));
            }
        }
        let one_cut = (1.0 - tol_one).ln();
        let zero_cut = tol_zero.ln();
        let e = self.group.identity();
        let mut sets = ClassSets {
            sym: ElementSet::new(),
            zero: ElementSet::new(),
        };
        for g in self.group.elements() {
            let l = self.per_copy_logmod(g);
            if g == e || l >= one_cut {
                sets.sym.insert(g);
            } else if l == f64::NEG_INFINITY || l <= zero_cut {
                sets.zero.insert(g);
            }
        }
        if !self.group.is_subgroup(&sets.sym) {
            return Err(Error::SymNotSubgroup);
        }
        Ok(sets)
    }

    /// Characteristic function of `ψ^{⊗n}` under `U^{⊗n}`.
    ///
    /// `n = 0` yields the constant function 1 (the empty tensor product).
    pub fn power(&self, n: u64) -> CharFunction {
        let e = self.group.identity();
        let values = self
            .values
            .iter()
            .enumerate()
            .map(|(g, v)| {
                if g == e || n == 0 {
                    CharValue::ONE
                } else if v.logmod == f64::NEG_INFINITY {
                    *v
                } else {
                    CharValue {
                        logmod: v.logmod * n as f64,
                        phase: wrap_phase(v.phase * n as f64),
                    }
                }
            })
            .collect();
        CharFunction {
            group: self.group.clone(),
            values,
            copies: self.copies * n,
        }
    }

    pub fn same_group(&self, other: &CharFunction) -> bool {
        Arc::ptr_eq(&self.group, &other.group) || self.group.table() == other.group.table()
    }
}
