//! Subcommand arguments and the reports they produce.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use asym_core::abelian::{self, AbelianBasis};
use asym_core::approx::approx_rate_class;
use asym_core::convertibility::{feasible_exact, minimal_copies_search, MAX_SEARCH_COPIES};
use asym_core::exact_rate::{copies_bound, exact_rate};
use asym_core::lie::{self, GeneratorSet, Qfim};
use asym_core::{ApproxClass, CharFunction, Error, FiniteGroup, ProjectiveRep, Rate};
use clap::Args;
use serde_json::Value;

use crate::input::{Failure, Inputs, Outcome};
use crate::obj;
use crate::output::{complex, matrix, num, nums, set};

#[derive(Debug, Args)]
pub struct GroupArgs {
    /// Group file, or a built-in name (Z_n, Z_axZ_b, S_3, D_4, Q_8).
    #[arg(long)]
    pub group: String,
    /// Representation file; the regular representation when omitted.
    #[arg(long)]
    pub rep: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PairArgs {
    #[command(flatten)]
    pub group: GroupArgs,
    #[arg(long)]
    pub psi: PathBuf,
    #[arg(long)]
    pub phi: PathBuf,
}

#[derive(Debug, Args)]
pub struct ChiArgs {
    #[command(flatten)]
    pub group: GroupArgs,
    #[arg(long)]
    pub state: PathBuf,
    /// Number of tensor copies.
    #[arg(long, default_value_t = 1)]
    pub power: u64,
}

#[derive(Debug, Args)]
pub struct RateExactArgs {
    #[command(flatten)]
    pub pair: PairArgs,
    /// Use the commutative variant (allows a nontrivial symmetry group of phi).
    #[arg(long)]
    pub commutative: bool,
    /// Also report the copy count guaranteeing conversion at this sub-optimal rate.
    #[arg(long)]
    pub rate: Option<f64>,
}

#[derive(Debug, Args)]
pub struct ConvertArgs {
    #[command(flatten)]
    pub pair: PairArgs,
    /// Input and output copy numbers.
    #[arg(long, num_args = 2, value_names = ["N", "M"], required = true)]
    pub copies: Vec<u64>,
}

#[derive(Debug, Args)]
pub struct MinCopiesArgs {
    #[command(flatten)]
    pub pair: PairArgs,
    #[arg(long)]
    pub rate: f64,
    #[arg(long, default_value_t = 1000)]
    pub nmax: u64,
}

#[derive(Debug, Args)]
pub struct ChargesArgs {
    #[command(flatten)]
    pub group: GroupArgs,
    #[arg(long)]
    pub state: PathBuf,
}

#[derive(Debug, Args)]
pub struct ConvertAbelianArgs {
    #[arg(long)]
    pub p: PathBuf,
    #[arg(long)]
    pub q: PathBuf,
    #[arg(long, num_args = 2, value_names = ["N", "M"], required = true)]
    pub copies: Vec<u64>,
}

#[derive(Debug, Args)]
pub struct ApproxArgs {
    #[command(flatten)]
    pub pair: PairArgs,
    /// Copy numbers at which to evaluate the convergence curves.
    #[arg(long, value_delimiter = ',', default_value = "1,2,3,4,5")]
    pub curve: Vec<u64>,
}

#[derive(Debug, Args)]
pub struct QfimArgs {
    #[arg(long)]
    pub state: PathBuf,
    #[arg(long)]
    pub generators: PathBuf,
}

#[derive(Debug, Args)]
pub struct RfArgs {
    #[arg(long)]
    pub psi: PathBuf,
    #[arg(long)]
    pub phi: PathBuf,
    #[arg(long)]
    pub generators: PathBuf,
    /// Target rate for the converse certificate.
    #[arg(long)]
    pub rate: Option<f64>,
    /// Allowed conversion error for the converse certificate.
    #[arg(long, default_value_t = 0.0)]
    pub delta: f64,
}

fn load_group_rep(inputs: &mut Inputs, args: &GroupArgs) -> Outcome<(Arc<FiniteGroup>, ProjectiveRep)> {
    let group = inputs.group(&args.group)?;
    let rep = inputs.rep(&group, args.rep.as_deref())?;
    Ok((group, rep))
}

fn load_pair(inputs: &mut Inputs, args: &PairArgs) -> Outcome<(CharFunction, CharFunction)> {
    let (_, rep) = load_group_rep(inputs, &args.group)?;
    let psi = inputs.state("psi", &args.psi)?;
    let phi = inputs.state("phi", &args.phi)?;
    let chi_psi = CharFunction::new(&rep, &psi).map_err(|e| at(e, &args.psi))?;
    let chi_phi = CharFunction::new(&rep, &phi).map_err(|e| at(e, &args.phi))?;
    Ok((chi_psi, chi_phi))
}

fn at(error: Error, path: &Path) -> Failure {
    Failure::Core {
        error,
        path: Some(path.display().to_string()),
    }
}

fn copies_pair(copies: &[u64]) -> (u64, u64) {
    (copies[0], copies[1])
}

fn opt_usize(x: Option<usize>) -> Value {
    x.map(Value::from).unwrap_or(Value::Null)
}

fn rate_value(rate: Rate) -> (Value, &'static str) {
    match rate {
        Rate::Finite(x) => (num(x), "finite"),
        Rate::Zero => (num(0.0), "zero"),
        Rate::Unbounded => (num(f64::INFINITY), "unbounded"),
    }
}

pub fn chi(inputs: &mut Inputs, args: &ChiArgs) -> Outcome<Value> {
    let (group, rep) = load_group_rep(inputs, &args.group)?;
    let state = inputs.state("state", &args.state)?;
    let chi = CharFunction::new(&rep, &state).map_err(|e| at(e, &args.state))?.power(args.power);
    let sets = chi.classify(inputs.tol.one, inputs.tol.zero)?;
    let elements: Vec<Value> = group
        .elements()
        .map(|g| {
            let v = chi.value(g);
            obj! {
                "g" => g,
                "modulus" => num(v.modulus()),
                "ln_modulus" => num(v.logmod),
                "phase" => num(v.phase),
                "L" => num(chi.resource_measure(g).expect("element in range")),
            }
        })
        .collect();
    Ok(obj! {
        "group_order" => group.order(),
        "copies" => args.power,
        "elements" => elements,
        "sym" => set(&sets.sym),
        "zero" => set(&sets.zero),
    })
}

pub fn rate_exact(inputs: &mut Inputs, args: &RateExactArgs) -> Outcome<Value> {
    let (psi, phi) = load_pair(inputs, &args.pair)?;
    let mut report = exact_rate(&psi, &phi, args.commutative, &inputs.tol)?;
    if let Some(r) = args.rate {
        report.n_bound = Some(copies_bound(&psi, &phi, r, &inputs.tol)?);
    }
    let (rate, kind) = rate_value(report.rate);
    Ok(obj! {
        "rate" => rate,
        "rate_kind" => kind,
        "witness" => opt_usize(report.witness),
        "assumption_ok" => report.assumption_ok,
        "commutative" => report.commutative,
        "excluded_set" => set(&report.excluded_set),
        "sym_psi" => set(&report.sym_psi),
        "sym_phi" => set(&report.sym_phi),
        "zero_psi" => set(&report.zero_psi),
        "zero_phi" => set(&report.zero_phi),
        "requested_rate" => args.rate.map(num).unwrap_or(Value::Null),
        "n_bound" => report.n_bound.map(Value::from).unwrap_or(Value::Null),
        "warnings" => report.warnings,
    })
}

pub fn convert(inputs: &mut Inputs, args: &ConvertArgs) -> Outcome<Value> {
    let (psi, phi) = load_pair(inputs, &args.pair)?;
    let (n, m) = copies_pair(&args.copies);
    let res = feasible_exact(&psi, &phi, n, m, &inputs.tol)?;
    let interpolator: Vec<Value> = res
        .f
        .values()
        .iter()
        .enumerate()
        .map(|(g, &z)| {
            let mut v = complex(z);
            v.as_object_mut().unwrap().shift_insert(0, "g".into(), Value::from(g));
            v
        })
        .collect();
    Ok(obj! {
        "n" => n,
        "m" => m,
        "feasible" => res.feasible,
        "min_gram_eigenvalue" => num(res.min_gram_eigenvalue),
        "method" => "gram",
        "modulus_witness" => opt_usize(res.modulus_witness),
        "interpolator" => interpolator,
    })
}

pub fn min_copies(inputs: &mut Inputs, args: &MinCopiesArgs) -> Outcome<Value> {
    let (psi, phi) = load_pair(inputs, &args.pair)?;
    let n = minimal_copies_search(&psi, &phi, args.rate, args.nmax, &inputs.tol)?;
    let bound = match copies_bound(&psi, &phi, args.rate, &inputs.tol) {
        Ok(b) => Value::from(b),
        Err(Error::RateNotBelowOptimal { .. }) | Err(Error::ZeroSetViolation(_)) => Value::Null,
        Err(e) => return Err(e.into()),
    };
    Ok(obj! {
        "rate" => num(args.rate),
        "n_max" => args.nmax,
        "n_max_cap" => MAX_SEARCH_COPIES,
        "minimal_copies" => n.map(Value::from).unwrap_or(Value::Null),
        "copies_bound" => bound,
    })
}

pub fn charges(inputs: &mut Inputs, args: &ChargesArgs, seed: u64) -> Outcome<Value> {
    let (group, rep) = load_group_rep(inputs, &args.group)?;
    let state = inputs.state("state", &args.state)?;
    let basis = AbelianBasis::of(&group)?;
    let dist = abelian::charge_distribution(&rep, &state, &basis, seed, &inputs.tol)?;
    let (canonical, shift) = abelian::shift_canonicalize(&dist, &inputs.tol);
    let lambda: Vec<Value> = abelian::dual_fourier(&dist).values.into_iter().map(complex).collect();
    Ok(obj! {
        "shape" => basis.shape().to_vec(),
        "basis_generators" => basis.generators().to_vec(),
        "probs" => nums(dist.probs().iter().copied()),
        "fourier" => lambda,
        "shift" => shift,
        "canonical_probs" => nums(canonical.probs().iter().copied()),
    })
}

pub fn convert_abelian(inputs: &mut Inputs, args: &ConvertAbelianArgs) -> Outcome<Value> {
    let p = inputs.distribution("p", &args.p)?;
    let q = inputs.distribution("q", &args.q)?;
    let (n, m) = copies_pair(&args.copies);
    let res = abelian::fourier_weights(&p, &q, n, m, &inputs.tol)?;
    Ok(obj! {
        "n" => n,
        "m" => m,
        "feasible" => res.feasible,
        "method" => "fourier",
        "min_w" => num(res.min_w),
        "w" => nums(res.w.iter().copied()),
        "zero_set_violation" => opt_usize(res.zero_set_violation),
    })
}

pub fn approx(inputs: &mut Inputs, args: &ApproxArgs) -> Outcome<Value> {
    let (psi, phi) = load_pair(inputs, &args.pair)?;
    let report = approx_rate_class(&psi, &phi, &args.curve, &inputs.tol)?;
    let curves = match &report.curves {
        None => Value::Null,
        Some(c) => {
            let points: Vec<Value> = c
                .bound
                .iter()
                .zip(&c.measured)
                .map(|(b, d)| {
                    obj! {
                        "n" => b.n,
                        "epsilon" => num(b.value),
                        "delta" => num(d.value),
                        "ln_epsilon" => num(b.ln_value),
                        "ln_delta" => num(d.ln_value),
                    }
                })
                .collect();
            obj! {"s" => num(c.s), "points" => points}
        }
    };
    Ok(obj! {
        "classification" => match report.classification {
            ApproxClass::Unbounded => "unbounded",
            ApproxClass::Zero => "zero",
        },
        "sym_psi" => set(&report.sym_psi),
        "sym_phi" => set(&report.sym_phi),
        "witness" => opt_usize(report.witness),
        "generation_ok" => report.generation_ok,
        "curves" => curves,
    })
}

fn qfim_value(f: &Qfim) -> Value {
    matrix(f.matrix.row_iter().map(|r| r.iter().copied().collect()))
}

fn state_qfim(inputs: &mut Inputs, role: &str, path: &Path, gens: &GeneratorSet) -> Outcome<Qfim> {
    let state = inputs.state(role, path)?;
    lie::qfim(&state.density(), gens, &inputs.tol).map_err(|e| at(e, path))
}

pub fn qfim(inputs: &mut Inputs, args: &QfimArgs) -> Outcome<Value> {
    let gens = inputs.generators(&args.generators)?;
    let f = state_qfim(inputs, "state", &args.state, &gens)?;
    Ok(obj! {
        "generators" => gens.len(),
        "qfim" => qfim_value(&f),
    })
}

pub fn rf(inputs: &mut Inputs, args: &RfArgs) -> Outcome<Value> {
    let gens = inputs.generators(&args.generators)?;
    let f_psi = state_qfim(inputs, "psi", &args.psi, &gens)?;
    let f_phi = state_qfim(inputs, "phi", &args.phi, &gens)?;
    let res = lie::rf_ratio(&f_psi, &f_phi)?;
    let certificate = match args.rate {
        None => Value::Null,
        Some(r) => {
            let c = lie::converse_certificate(&f_psi, &f_phi, r, args.delta)?;
            obj! {
                "rate" => num(r),
                "delta" => num(args.delta),
                "impossible" => c.impossible,
                "t" => c.t.map(num).unwrap_or(Value::Null),
                "g_t" => c.g_t.map(num).unwrap_or(Value::Null),
                "threshold" => num(c.threshold),
                "witness_direction" => c.witness_direction.map(nums).unwrap_or(Value::Null),
            }
        }
    };
    Ok(obj! {
        "qfim_psi" => qfim_value(&f_psi),
        "qfim_phi" => qfim_value(&f_phi),
        "r_f" => num(res.r_f),
        "method" => serde_json::to_value(res.method).expect("enum serializes"),
        "direction" => res.direction.map(nums).unwrap_or(Value::Null),
        "certificate" => certificate,
    })
}
