//! Serializable file formats and their conversions to core types.
//!
//! Complex numbers are `[re, im]` pairs. Matrices are row-major nested arrays.
//! Serialized groups always have the identity at index 0.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::abelian::ChargeDistribution;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::lie::GeneratorSet;
use crate::linalg::CMatrix;
use crate::rep::ProjectiveRep;
use crate::state::PureState;
use crate::tolerance::Tolerances;
use crate::Complex64;

pub type ComplexPair = [f64; 2];
pub type MatrixData = Vec<Vec<ComplexPair>>;

fn to_complex(p: &ComplexPair) -> Complex64 {
    Complex64::new(p[0], p[1])
}

fn from_complex(z: Complex64) -> ComplexPair {
    [z.re, z.im]
}

pub fn matrix_from_data(data: &MatrixData, dim: usize) -> Result<CMatrix> {
    if data.len() != dim || data.iter().any(|row| row.len() != dim) {
        return Err(Error::DimensionMismatch {
            expected: dim,
            got: data.iter().map(Vec::len).chain([data.len()]).find(|&n| n != dim).unwrap_or(dim),
        });
    }
    Ok(CMatrix::from_fn(dim, dim, |i, j| to_complex(&data[i][j])))
}

pub fn matrix_to_data(m: &CMatrix) -> MatrixData {
    (0..m.nrows())
        .map(|i| (0..m.ncols()).map(|j| from_complex(m[(i, j)])).collect())
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub order: usize,
    pub mult_table: Vec<Vec<usize>>,
}

impl GroupFile {
    pub fn from_group(g: &FiniteGroup) -> Self {
        Self {
            name: g.name().map(str::to_string),
            order: g.order(),
            mult_table: g.table().to_vec(),
        }
    }

    pub fn into_group(self) -> Result<FiniteGroup> {
        if self.mult_table.len() != self.order {
            return Err(Error::MalformedTable(format!(
                "order is {} but the table has {} rows",
                self.order,
                self.mult_table.len()
            )));
        }
        let g = FiniteGroup::from_table(self.mult_table, self.name)?;
        if g.identity() != 0 {
            return Err(Error::MalformedTable(format!(
                "identity must be element 0, found element {}",
                g.identity()
            )));
        }
        Ok(g)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepFile {
    pub dim: usize,
    pub matrices: Vec<MatrixData>,
}

impl RepFile {
    pub fn from_rep(rep: &ProjectiveRep) -> Self {
        Self {
            dim: rep.dim(),
            matrices: rep.matrices().iter().map(matrix_to_data).collect(),
        }
    }

    pub fn into_rep(self, group: Arc<FiniteGroup>, tol: &Tolerances) -> Result<ProjectiveRep> {
        let matrices = self
            .matrices
            .iter()
            .map(|m| matrix_from_data(m, self.dim))
            .collect::<Result<Vec<_>>>()?;
        ProjectiveRep::validate(group, matrices, tol)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateFile {
    pub dim: usize,
    pub amplitudes: Vec<ComplexPair>,
}

impl StateFile {
    pub fn from_state(s: &PureState) -> Self {
        Self {
            dim: s.dim(),
            amplitudes: s.amplitudes().iter().map(|&z| from_complex(z)).collect(),
        }
    }

    pub fn into_state(self, tol: &Tolerances) -> Result<PureState> {
        if self.amplitudes.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: self.amplitudes.len(),
            });
        }
        PureState::new(self.amplitudes.iter().map(to_complex).collect(), tol)
    }
}

/// Distribution over dual labels in row-major order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DistributionFile {
    pub shape: Vec<usize>,
    pub probs: Vec<f64>,
}

impl DistributionFile {
    pub fn from_distribution(d: &ChargeDistribution) -> Self {
        Self {
            shape: d.shape().to_vec(),
            probs: d.probs().to_vec(),
        }
    }

    pub fn into_distribution(self, tol: &Tolerances) -> Result<ChargeDistribution> {
        ChargeDistribution::new(self.shape, self.probs, tol)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorsFile {
    pub dim: usize,
    pub generators: Vec<MatrixData>,
}

impl GeneratorsFile {
    pub fn from_generators(g: &GeneratorSet) -> Self {
        Self {
            dim: g.dim(),
            generators: g.generators().iter().map(matrix_to_data).collect(),
        }
    }

    pub fn into_generators(self, tol: &Tolerances) -> Result<GeneratorSet> {
        let gens = self
            .generators
            .iter()
            .map(|m| matrix_from_data(m, self.dim))
            .collect::<Result<Vec<_>>>()?;
        GeneratorSet::new(gens, tol)
    }
}
