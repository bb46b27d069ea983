//! The bundled example corpus: groups with one faithful representation each,
//! plus states, charge distributions and generators used by the docs and tests.

use std::path::Path;
use std::sync::Arc;

use asym_core::abelian::character_rep;
use asym_core::formats::{DistributionFile, GeneratorsFile, GroupFile, RepFile, StateFile};
use asym_core::linalg::{CMatrix, CVector, I, ONE, ZERO};
use asym_core::{random, Complex64, FiniteGroup, GeneratorSet, ProjectiveRep, PureState, Tolerances};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::input::{Failure, Outcome};

pub const GROUPS: [(&str, &str); 7] = [
    ("z2", "Z_2"),
    ("z3", "Z_3"),
    ("z4", "Z_4"),
    ("z2xz2", "Z_2xZ_2"),
    ("s3", "S_3"),
    ("d4", "D_4"),
    ("q8", "Q_8"),
];

/// `(file name, pretty JSON)` for every corpus file, in a fixed order.
pub fn files() -> Vec<(String, String)> {
    let tol = Tolerances::default();
    let mut out = Vec::new();
    let mut push = |name: String, value: &dyn erased::Json| out.push((name, value.pretty()));

    for (seed, (stem, name)) in GROUPS.iter().enumerate() {
        let group = Arc::new(FiniteGroup::named(name).expect("built-in group"));
        let rep = if group.is_abelian() {
            character_rep(group.clone(), &tol).expect("character representation")
        } else {
            ProjectiveRep::regular(group.clone())
        };
        push(format!("{stem}.json"), &GroupFile::from_group(&group));
        push(format!("{stem}_rep.json"), &RepFile::from_rep(&rep));
        let mut rng = ChaCha8Rng::seed_from_u64(seed as u64);
        for role in ["psi", "phi"] {
            let s = random::state(&mut rng, rep.dim());
            push(format!("{stem}_{role}.json"), &StateFile::from_state(&s));
        }
    }

    let pop = |p: &[f64]| StateFile::from_state(&PureState::from_populations(p).expect("valid populations"));
    push("psi08.json".into(), &pop(&[0.8, 0.2]));
    push("psi_sq.json".into(), &pop(&[0.68, 0.32]));
    push("plus.json".into(), &pop(&[0.5, 0.5]));
    push("zero_state.json".into(), &pop(&[1.0, 0.0]));

    let dist = |p: &[f64]| DistributionFile {
        shape: vec![p.len()],
        probs: p.to_vec(),
    };
    push("p08.json".into(), &dist(&[0.8, 0.2]));
    push("q068.json".into(), &dist(&[0.68, 0.32]));

    let half = Complex64::new(0.5, 0.0);
    let sz = CMatrix::from_diagonal(&CVector::from_vec(vec![half, -half]));
    let sx = CMatrix::from_row_slice(2, 2, &[ZERO, ONE, ONE, ZERO]) * half;
    let sy = CMatrix::from_row_slice(2, 2, &[ZERO, -I, I, ZERO]) * half;
    let gens = |m: Vec<CMatrix>| GeneratorsFile::from_generators(&GeneratorSet::new(m, &tol).expect("Hermitian"));
    push("half_z.json".into(), &gens(vec![sz.clone()]));
    push("spin_half.json".into(), &gens(vec![sx, sy, sz]));
    out
}

mod erased {
    pub trait Json {
        fn pretty(&self) -> String;
    }

    impl<T: super::Serialize> Json for T {
        fn pretty(&self) -> String {
            serde_json::to_string_pretty(self).expect("corpus serializes") + "\n"
        }
    }
}

pub fn write(dir: &Path) -> Outcome<Vec<String>> {
    let io = |e: std::io::Error| Failure::Io {
        path: dir.display().to_string(),
        message: e.to_string(),
    };
    std::fs::create_dir_all(dir).map_err(io)?;
    let mut names = Vec::new();
    for (name, body) in files() {
        std::fs::write(dir.join(&name), body).map_err(io)?;
        names.push(name);
    }
    Ok(names)
}
