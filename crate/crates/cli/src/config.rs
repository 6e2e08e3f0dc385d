use std::path::Path;

use serde::{Deserialize, Serialize};
use wbcode::algcode::{build_algebra, MonomialAlgebra, MonomialOrder, OrderKind, SemigroupData};
use wbcode::gf::FieldConfig;
use wbcode::wbcore::{build_wb_table, BuildMode, IndexSet, IndexedBasis, Side, Variant, WbTable};
use wbcode::{Elem, Field};

use crate::CliError;

/// On-disk job description. Either `algebra` or `field` + `basis` must be set.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<AlgebraConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<Vec<u64>>>,
    /// Second basis of the pair `(B, U)`; defaults to the first.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub u_basis: Option<Vec<Vec<u64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub semigroup: Option<SemigroupConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub index_set: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target_dim: Option<usize>,
    #[serde(default)]
    pub side: Side,
    #[serde(default)]
    pub variant: Variant,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<TableSource>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraConfig {
    pub field: FieldConfig,
    /// Redundant with `point_sets.len()`; checked when present.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vars: Option<usize>,
    #[serde(default = "default_order")]
    pub order: MonomialOrder,
    pub point_sets: Vec<Vec<u64>>,
}

fn default_order() -> MonomialOrder {
    MonomialOrder::new(OrderKind::GradedLex, Vec::new())
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged, deny_unknown_fields)]
pub enum SemigroupConfig {
    Numerical {
        r: usize,
        generators: Vec<u32>,
        delta: Vec<u32>,
    },
    Box {
        r: usize,
        #[serde(rename = "box")]
        bounds: Vec<u32>,
        #[serde(default = "default_order")]
        order: MonomialOrder,
    },
}

/// Where the WB table comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TableSource {
    /// Classify every pair from the bases.
    Exhaustive,
    /// Sums of weights: `alpha(i) + alpha(j) = alpha(l)`. Needs an algebra or
    /// semigroup data and `U = B`.
    Semigroup,
}

/// A validated job.
pub struct Job {
    pub field: Field,
    pub g: IndexedBasis,
    pub u: Option<IndexedBasis>,
    pub algebra: Option<MonomialAlgebra>,
    pub semigroup: Option<SemigroupData>,
    pub indices: Option<IndexSet>,
    pub side: Side,
    pub variant: Variant,
    pub t: Option<usize>,
    pub source: TableSource,
}

fn config_err(e: impl std::fmt::Display) -> CliError {
    CliError::Config(e.to_string())
}

pub fn load(path: &Path) -> Result<JobConfig, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))
}

fn elems(field: &Field, values: &[u64]) -> Result<Vec<Elem>, CliError> {
    values.iter().map(|&v| field.elem(v).map_err(config_err)).collect()
}

impl JobConfig {
    pub fn resolve(&self) -> Result<Job, CliError> {
        let (field, g, algebra) = match (&self.algebra, &self.field, &self.basis) {
            (Some(a), None, None) => {
                let field = Field::from_config(&a.field).map_err(config_err)?;
                if let Some(m) = a.vars {
                    if m != a.point_sets.len() {
                        return Err(CliError::Config(format!("vars = {m} but {} point sets given", a.point_sets.len())));
                    }
                }
                let sets = a.point_sets.iter().map(|s| elems(&field, s)).collect::<Result<Vec<_>, _>>()?;
                let alg = build_algebra(&field, a.order.clone(), sets).map_err(config_err)?;
                (field, alg.eval_basis().clone(), Some(alg))
            }
            (None, Some(f), Some(rows)) => {
                let field = Field::from_config(f).map_err(config_err)?;
                let g = IndexedBasis::from_ints(&field, rows).map_err(config_err)?;
                (field, g, None)
            }
            _ => return Err(CliError::Config("give either `algebra` or both `field` and `basis`".into())),
        };
        let n = g.len();
        let u = match &self.u_basis {
            Some(rows) => {
                let u = IndexedBasis::from_ints(&field, rows).map_err(config_err)?;
                if u.len() != n {
                    return Err(CliError::Config(format!("u_basis has length {}, basis has {n}", u.len())));
                }
                Some(u)
            }
            None => None,
        };

        let semigroup = match (&self.semigroup, &algebra) {
            (Some(SemigroupConfig::Numerical { r, generators, delta }), _) => {
                if *r != 1 {
                    return Err(CliError::Config(format!("numerical semigroup data needs r = 1, got {r}")));
                }
                Some(SemigroupData::numerical(generators, delta).map_err(config_err)?)
            }
            (Some(SemigroupConfig::Box { r, bounds, order }), _) => {
                if *r != bounds.len() {
                    return Err(CliError::Config(format!("r = {r} but box has {} sides", bounds.len())));
                }
                Some(SemigroupData::boxed(bounds, order).map_err(config_err)?)
            }
            (None, Some(a)) => Some(SemigroupData::from_algebra(a)),
            (None, None) => None,
        };
        if let Some(s) = &semigroup {
            if s.len() != n {
                return Err(CliError::Config(format!("semigroup data has {} weights, basis has {n}", s.len())));
            }
        }

        let indices = match (&self.index_set, self.target_dim) {
            (Some(_), Some(_)) => return Err(CliError::Config("give `index_set` or `target_dim`, not both".into())),
            (Some(members), None) => Some(IndexSet::new(n, members.iter().copied()).map_err(config_err)?),
            (None, Some(dim)) => {
                let s = semigroup
                    .as_ref()
                    .ok_or_else(|| CliError::Config("`target_dim` needs an algebra or semigroup data".into()))?;
                Some(s.greedy_index_set(dim, self.side).map_err(config_err)?)
            }
            (None, None) => None,
        };

        let source = match self.table {
            Some(s) => s,
            None if semigroup.is_some() && u.is_none() => TableSource::Semigroup,
            None => TableSource::Exhaustive,
        };
        if source == TableSource::Semigroup {
            if semigroup.is_none() {
                return Err(CliError::Config("`table: semigroup` needs an algebra or semigroup data".into()));
            }
            if u.is_some() {
                return Err(CliError::Config("`table: semigroup` describes (B, B); drop `u_basis`".into()));
            }
        }

        Ok(Job { field, g, u, algebra, semigroup, indices, side: self.side, variant: self.variant, t: self.t, source })
    }
}

impl Job {
    pub fn n(&self) -> usize {
        self.g.len()
    }

    pub fn u(&self) -> &IndexedBasis {
        self.u.as_ref().unwrap_or(&self.g)
    }

    pub fn indices(&self) -> Result<&IndexSet, CliError> {
        self.indices.as_ref().ok_or_else(|| CliError::Config("this command needs `index_set` or `target_dim`".into()))
    }

    /// WB table over `(B, U)`.
    pub fn table(&self) -> Result<WbTable, CliError> {
        match self.source {
            TableSource::Semigroup => Ok(self.semigroup.as_ref().expect("checked in resolve").wb_table()),
            TableSource::Exhaustive => build_wb_table(&self.g, self.u(), BuildMode::Exhaustive).map_err(config_err),
        }
    }

    /// The table as given to the decoder: `None` means build it exhaustively
    /// over the dual basis.
    pub fn decoder_table(&self) -> Option<WbTable> {
        match self.source {
            TableSource::Semigroup => self.semigroup.as_ref().map(SemigroupData::wb_table),
            TableSource::Exhaustive => None,
        }
    }

    pub fn parse_vector(&self, text: &str) -> Result<Vec<Elem>, CliError> {
        let values = text
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<u64>().map_err(|e| CliError::Config(format!("bad vector entry {s:?}: {e}"))))
            .collect::<Result<Vec<_>, _>>()?;
        elems(&self.field, &values)
    }
}
