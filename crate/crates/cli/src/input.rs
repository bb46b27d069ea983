//! Loading input files, recording their digests, and the CLI failure type.

use std::path::Path;
use std::sync::Arc;

use asym_core::formats::{DistributionFile, GeneratorsFile, GroupFile, RepFile, StateFile};
use asym_core::{ChargeDistribution, Error, FiniteGroup, GeneratorSet, ProjectiveRep, PureState, Tolerances};
use serde::de::DeserializeOwned;
use serde_json::{Map, Value};
use sha2::{Digest, Sha256};

use crate::obj;

/// Anything that stops a run, with its exit status and JSON error object.
#[derive(Debug)]
pub enum Failure {
    Io { path: String, message: String },
    Parse { path: String, line: usize, column: usize, message: String },
    Usage(String),
    Core { error: Error, path: Option<String> },
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Core { error, .. } if !error.is_validation() => 1,
            _ => 2,
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Failure::Io { path, message } => obj! {"error" => "IoError", "message" => message.as_str(), "path" => path.as_str()},
            Failure::Parse { path, line, column, message } => obj! {
                "error" => "ParseError",
                "message" => message.as_str(),
                "path" => path.as_str(),
                "line" => *line,
                "column" => *column,
            },
            Failure::Usage(message) => obj! {"error" => "UsageError", "message" => message.as_str()},
            Failure::Core { error, path } => {
                let mut v = obj! {"error" => error.name(), "message" => error.to_string()};
                if let Some(p) = path {
                    v["path"] = Value::from(p.as_str());
                }
                v
            }
        }
    }
}

impl From<Error> for Failure {
    fn from(error: Error) -> Self {
        Failure::Core { error, path: None }
    }
}

pub type Outcome<T> = std::result::Result<T, Failure>;

fn at(path: &Path) -> impl Fn(Error) -> Failure + '_ {
    move |error| Failure::Core {
        error,
        path: Some(path.display().to_string()),
    }
}

/// Parses input files and keeps a digest of each under its role name.
pub struct Inputs {
    pub tol: Tolerances,
    records: Map<String, Value>,
}

impl Inputs {
    pub fn new(tol: Tolerances) -> Self {
        Self {
            tol,
            records: Map::new(),
        }
    }

    pub fn records(self) -> Value {
        Value::Object(self.records)
    }

    pub fn record(&mut self, role: &str, value: Value) {
        self.records.insert(role.to_string(), value);
    }

    fn read_json<T: DeserializeOwned>(&mut self, role: &str, path: &Path) -> Outcome<T> {
        let shown = path.display().to_string();
        let bytes = std::fs::read(path).map_err(|e| Failure::Io {
            path: shown.clone(),
            message: e.to_string(),
        })?;
        let parsed = serde_json::from_slice(&bytes).map_err(|e| Failure::Parse {
            path: shown.clone(),
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        self.record(role, obj! {"path" => shown, "sha256" => hex::encode(Sha256::digest(&bytes))});
        Ok(parsed)
    }

    /// A group file, or a built-in name such as `Z_4`, `Z_2xZ_2`, `S_3`, `D_4`, `Q_8`.
    pub fn group(&mut self, spec: &str) -> Outcome<Arc<FiniteGroup>> {
        let path = Path::new(spec);
        if path.exists() || spec.ends_with(".json") {
            let file: GroupFile = self.read_json("group", path)?;
            return Ok(Arc::new(file.into_group().map_err(at(path))?));
        }
        let g = FiniteGroup::named(spec)?;
        self.record("group", obj! {"name" => spec});
        Ok(Arc::new(g))
    }

    /// The representation file, or the regular representation when absent.
    pub fn rep(&mut self, group: &Arc<FiniteGroup>, path: Option<&Path>) -> Outcome<ProjectiveRep> {
        match path {
            Some(p) => {
                let file: RepFile = self.read_json("rep", p)?;
                file.into_rep(group.clone(), &self.tol).map_err(at(p))
            }
            None => {
                self.record("rep", obj! {"regular" => true});
                Ok(ProjectiveRep::regular(group.clone()))
            }
        }
    }

    pub fn state(&mut self, role: &str, path: &Path) -> Outcome<PureState> {
        let file: StateFile = self.read_json(role, path)?;
        file.into_state(&self.tol).map_err(at(path))
    }

    pub fn distribution(&mut self, role: &str, path: &Path) -> Outcome<ChargeDistribution> {
        let file: DistributionFile = self.read_json(role, path)?;
        file.into_distribution(&self.tol).map_err(at(path))
    }

    pub fn generators(&mut self, path: &Path) -> Outcome<GeneratorSet> {
        let file: GeneratorsFile = self.read_json("generators", path)?;
        file.into_generators(&self.tol).map_err(at(path))
    }
}
