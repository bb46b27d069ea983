//! # asym-core
//!
//! Pure-state convertibility under group-covariant operations.
//!
//! For a finite group `G` acting through a (projective) unitary representation `U`,
//! the characteristic function `χ_ψ(g) = ⟨ψ|U(g)|ψ⟩` controls which conversions
//! `ψ^{⊗N} → φ^{⊗M}` are possible:
//!
//! - [`charfn`]: characteristic functions in log-modulus/phase form, the measures
//!   `L(ψ,g) = -ln|χ_ψ(g)|`, and the symmetry / zero sets.
//! - [`exact_rate`]: the optimal exact i.i.d. rate and the copy-count bound of the
//!   constructive direct part.
//! - [`convertibility`]: the single-shot oracle (positive definiteness of the
//!   interpolating function `χ_ψ/χ_φ`, tested through its Gram matrix).
//! - [`abelian`]: charge distributions and an independent Fourier-domain oracle
//!   for finite abelian groups.
//! - [`approx`]: uniform states, convergence bounds and the ∞/0 classification of
//!   the approximate rate.
//! - [`lie`]: SLD quantum Fisher information matrices for explicit Hermitian
//!   generators, the pencil ratio `r_F`, and the `g(T)` converse certificate.
//!
//! Groups are always materialized as multiplication tables ([`group::FiniteGroup`]).
//! Natural logarithms are used throughout.

#![forbid(unsafe_code)]

pub mod abelian;
pub mod approx;
pub mod charfn;
pub mod convertibility;
pub mod exact_rate;
pub mod formats;
pub mod group;
pub mod lie;
pub mod linalg;
pub mod random;
pub mod rep;
pub mod state;

mod error;
mod tolerance;

pub use error::{Axiom, Error, Result};
pub use tolerance::Tolerances;

pub use abelian::{AbelianBasis, ChargeDistribution, DualCoefficients, FourierWeights};
pub use approx::{ApproxClass, ApproxReport, CurvePoint, UniformCharFunction};
pub use charfn::{CharFunction, ClassSets};
pub use convertibility::{FeasibilityResult, GroupFunction, Method};
pub use exact_rate::{Rate, RateReport};
pub use group::{ElementSet, FiniteGroup};
pub use lie::{ConverseCertificate, GeneratorSet, Qfim, RfMethod, RfResult};
pub use rep::ProjectiveRep;
pub use state::PureState;

pub use num_complex::Complex64;
