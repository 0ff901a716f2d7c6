//! Query documents: parsing and validation.

use serde::{Deserialize, Serialize};
use sphere_dubins::{Configuration, Rotation, SolverTolerances, TurningRadius};

use crate::CliError;

/// Rotations further than this from orthonormal are rejected rather than repaired.
const REPAIR_LIMIT: f64 = 1e-6;

pub const DEFAULT_SAMPLES: usize = 50;

type Rows = [[f64; 3]; 3];

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawQuery {
    initial: Option<Rows>,
    #[serde(rename = "final")]
    final_: Rows,
    r: Option<f64>,
    #[serde(default)]
    tolerances: RawTolerances,
    samples_per_segment: Option<usize>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTolerances {
    clamp_eps: Option<f64>,
    residual_tol: Option<f64>,
    degenerate_eps: Option<f64>,
}

/// Flags that override document fields.
#[derive(Debug, Default, Clone, Copy)]
pub struct Overrides {
    pub r: Option<f64>,
    pub samples: Option<usize>,
    pub residual_tol: Option<f64>,
}

#[derive(Debug, Clone)]
pub struct Query {
    pub initial: Configuration,
    pub final_: Configuration,
    pub r: TurningRadius,
    pub tolerances: SolverTolerances,
    pub samples_per_segment: usize,
}

/// The query as the planner saw it, echoed in reports.
#[derive(Debug, Serialize)]
pub struct QueryEcho {
    initial: Rows,
    #[serde(rename = "final")]
    final_: Rows,
    r: f64,
    tolerances: ToleranceEcho,
    samples_per_segment: usize,
}

#[derive(Debug, Serialize)]
struct ToleranceEcho {
    clamp_eps: f64,
    residual_tol: f64,
    degenerate_eps: f64,
}

fn rotation(field: &str, rows: Rows) -> Result<Rotation, CliError> {
    if let Ok(m) = Rotation::new(rows) {
        return Ok(m);
    }
    let err = Rotation::from_rows_unchecked(rows).orthonormality_error();
    if err <= REPAIR_LIMIT {
        if let Some(m) = Rotation::nearest(rows) {
            return Ok(m);
        }
    }
    let det = Rotation::from_rows_unchecked(rows).det();
    Err(CliError::Domain(format!(
        "field `{field}`: not a rotation matrix (orthonormality error {err:e}, det {det})"
    )))
}

pub fn parse(text: &str, flags: &Overrides) -> Result<Query, CliError> {
    let raw: RawQuery =
        serde_json::from_str(text).map_err(|e| CliError::Input(format!("invalid query: {e}")))?;
    let initial = match raw.initial {
        Some(rows) => rotation("initial", rows)?,
        None => Rotation::IDENTITY,
    };
    let final_ = rotation("final", raw.final_)?;
    let r = flags
        .r
        .or(raw.r)
        .ok_or_else(|| CliError::Input("invalid query: missing field `r`".into()))?;
    let r = TurningRadius::new(r).map_err(|e| CliError::Domain(format!("field `r`: {e}")))?;
    let defaults = SolverTolerances::default();
    let tolerances = SolverTolerances {
        clamp_eps: raw.tolerances.clamp_eps.unwrap_or(defaults.clamp_eps),
        residual_tol: flags
            .residual_tol
            .or(raw.tolerances.residual_tol)
            .unwrap_or(defaults.residual_tol),
        degenerate_eps: raw
            .tolerances
            .degenerate_eps
            .unwrap_or(defaults.degenerate_eps),
    }
    .validate()
    .map_err(|e| CliError::Domain(format!("field `tolerances`: {e}")))?;
    let samples_per_segment = flags
        .samples
        .or(raw.samples_per_segment)
        .unwrap_or(DEFAULT_SAMPLES);
    if samples_per_segment < 2 {
        return Err(CliError::Domain(format!(
            "field `samples_per_segment`: at least 2 samples are required, got {samples_per_segment}"
        )));
    }
    Ok(Query {
        initial: Configuration::new(initial).map_err(|e| CliError::Domain(e.to_string()))?,
        final_: Configuration::new(final_).map_err(|e| CliError::Domain(e.to_string()))?,
        r,
        tolerances,
        samples_per_segment,
    })
}

impl Query {
    pub fn echo(&self) -> QueryEcho {
        QueryEcho {
            initial: self.initial.rotation().rows(),
            final_: self.final_.rotation().rows(),
            r: self.r.get(),
            tolerances: ToleranceEcho {
                clamp_eps: self.tolerances.clamp_eps,
                residual_tol: self.tolerances.residual_tol,
                degenerate_eps: self.tolerances.degenerate_eps,
            },
            samples_per_segment: self.samples_per_segment,
        }
    }
}
