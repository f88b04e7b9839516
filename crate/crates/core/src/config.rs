//! Model files: JSON descriptions of a [`FieldModel`].
//!
//! ```json
//! {
//!   "dimension": 4,
//!   "metric_mode": "formal",
//!   "group": "su2",
//!   "xi": "1",
//!   "mass": "1",
//!   "sectors_enabled": { "fermion": false, "gauge": true, "ghost": true }
//! }
//! ```
//!
//! `group` is `"u1"`, `"su2"`, `"su3"` or an object
//! `{ "c": [[[c^I_JK]]], "l": [[[l_I row-major]]] }` whose entries are
//! numbers or Gaussian-rational strings such as `"-1/2i"`. Missing keys
//! default to `dimension = 4`, constant metric, `xi = 1`, `mass = 1` and
//! all sectors enabled.

use std::path::Path;

use serde::Deserialize;
use serde_json::Value;

use crate::gauge::{FieldModel, LieAlgebraData, Matrix, MetricMode, Sectors};
use crate::scalar::GQ;
use crate::Error;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawModel {
    #[serde(default = "default_dimension")]
    dimension: usize,
    #[serde(default)]
    metric_mode: Option<MetricMode>,
    group: Value,
    #[serde(default)]
    xi: Option<Value>,
    #[serde(default)]
    mass: Option<Value>,
    #[serde(default)]
    sectors_enabled: Option<RawSectors>,
}

fn default_dimension() -> usize {
    4
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSectors {
    fermion: Option<bool>,
    gauge: Option<bool>,
    ghost: Option<bool>,
}

fn number(v: &Value) -> Result<GQ, Error> {
    match v {
        Value::Number(n) => match n.as_i64() {
            Some(i) => Ok(GQ::int(i)),
            None => Err(Error::InvalidModel(format!("non-integer number {n}; use a string like \"1/2\""))),
        },
        Value::String(s) => s.parse().map_err(|_| Error::InvalidModel(format!("cannot parse `{s}` as a Gaussian rational"))),
        other => Err(Error::InvalidModel(format!("expected a number, found {other}"))),
    }
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>, Error> {
    v.as_array().ok_or_else(|| Error::InvalidModel(format!("`{what}` must be an array")))
}

fn inline_group(obj: &serde_json::Map<String, Value>) -> Result<LieAlgebraData, Error> {
    let c = obj.get("c").ok_or_else(|| Error::InvalidModel("inline group needs `c`".into()))?;
    let l = obj.get("l").ok_or_else(|| Error::InvalidModel("inline group needs `l`".into()))?;
    let structure = array(c, "c")?
        .iter()
        .map(|m| array(m, "c[I]")?.iter().map(|row| array(row, "c[I][J]")?.iter().map(number).collect()).collect())
        .collect::<Result<Vec<Vec<Vec<GQ>>>, Error>>()?;
    let rep = array(l, "l")?
        .iter()
        .map(|m| {
            let rows = array(m, "l[I]")?
                .iter()
                .map(|row| array(row, "l[I][i]")?.iter().map(number).collect())
                .collect::<Result<Vec<Vec<GQ>>, Error>>()?;
            if rows.iter().any(|r| r.len() != rows.len()) {
                return Err(Error::InvalidModel("representation matrices must be square".into()));
            }
            Ok(Matrix::from_rows(rows))
        })
        .collect::<Result<Vec<Matrix>, Error>>()?;
    LieAlgebraData::from_parts("inline", structure, rep)
}

/// Parses a model from JSON text and validates its Lie algebra.
pub fn parse_model(text: &str) -> Result<FieldModel, Error> {
    let raw: RawModel = serde_json::from_str(text)?;
    if !matches!(raw.dimension, 2 | 4) {
        return Err(Error::UnsupportedDimension(raw.dimension));
    }
    let algebra = match &raw.group {
        Value::String(name) => {
            LieAlgebraData::builtin(name).ok_or_else(|| Error::InvalidModel(format!("unknown group `{name}`")))?
        }
        Value::Object(obj) => inline_group(obj)?,
        other => return Err(Error::InvalidModel(format!("invalid group {other}"))),
    };
    let report = algebra.validate();
    if let Some(f) = report.failures().next() {
        return Err(Error::LieAxiom(format!("{}: {}", f.name, f.witness.clone().unwrap_or_default())));
    }
    let mut model = FieldModel::new(raw.dimension, raw.metric_mode.unwrap_or(MetricMode::Constant), algebra);
    if let Some(xi) = &raw.xi {
        model.xi = number(xi)?;
    }
    if let Some(mass) = &raw.mass {
        model.mass = number(mass)?;
    }
    if let Some(s) = raw.sectors_enabled {
        model.sectors = Sectors {
            fermion: s.fermion.unwrap_or(true),
            gauge: s.gauge.unwrap_or(true),
            ghost: s.ghost.unwrap_or(true),
        };
    }
    Ok(model)
}

pub fn load_model(path: &Path) -> Result<FieldModel, Error> {
    parse_model(&std::fs::read_to_string(path)?)
}
