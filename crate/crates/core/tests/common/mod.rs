#![allow(dead_code)]

use std::sync::Arc;

use asym_core::abelian::character_rep;
use asym_core::{random, CharFunction, FiniteGroup, ProjectiveRep, PureState, Tolerances};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const CORPUS: [&str; 7] = ["Z_2", "Z_3", "Z_4", "Z_2xZ_2", "S_3", "D_4", "Q_8"];

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn tol() -> Tolerances {
    Tolerances::default()
}

pub fn group(name: &str) -> Arc<FiniteGroup> {
    Arc::new(FiniteGroup::named(name).unwrap())
}

/// Faithful representation: diagonal characters for abelian groups, regular otherwise.
pub fn faithful_rep(name: &str) -> ProjectiveRep {
    let g = group(name);
    if g.is_abelian() {
        character_rep(g, &tol()).unwrap()
    } else {
        ProjectiveRep::regular(g)
    }
}

pub fn random_char(rep: &ProjectiveRep, rng: &mut ChaCha8Rng) -> CharFunction {
    CharFunction::new(rep, &random::state(rng, rep.dim())).unwrap()
}

/// State with charge populations `p` in the diagonal character representation.
pub fn charge_state(p: &[f64]) -> PureState {
    PureState::from_populations(p).unwrap()
}
