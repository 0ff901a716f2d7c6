use std::fmt::Write as _;

use serde::Serialize;
use sphere_dubins::oracle::round_trip;
use sphere_dubins::segments::{sample_segment, segment_length, segment_rotation};
use sphere_dubins::{plan, PathFamily, PathSolution, PlanReport, SolverTolerances, TurningRadius};

use crate::format::{g17, to_json};
use crate::query::{Query, QueryEcho};
use crate::CliError;

pub const GENERATOR: &str = concat!("sphere-dubins ", env!("CARGO_PKG_VERSION"));

pub const DEFAULT_RADII: [f64; 4] = [0.2, 0.5, std::f64::consts::FRAC_1_SQRT_2, 0.8];

#[derive(Serialize)]
struct Solution {
    family: &'static str,
    angles: [f64; 3],
    length: f64,
    residual: f64,
    branch: &'static str,
}

impl From<&PathSolution> for Solution {
    fn from(s: &PathSolution) -> Self {
        Solution {
            family: s.family.label(),
            angles: s.angles.to_array(),
            length: s.length,
            residual: s.residual,
            branch: s.branch.label(),
        }
    }
}

#[derive(Serialize)]
struct Report {
    generator: &'static str,
    query: QueryEcho,
    best: Option<Solution>,
    candidates: Vec<Solution>,
}

fn run_planner(query: &Query) -> Result<PlanReport, CliError> {
    plan(&query.initial, &query.final_, query.r, &query.tolerances)
        .map_err(|e| CliError::Domain(e.to_string()))
}

/// Returns the JSON report and whether a path was found.
pub fn plan_report(query: &Query) -> Result<(String, bool), CliError> {
    let report = run_planner(query)?;
    let doc = Report {
        generator: GENERATOR,
        query: query.echo(),
        best: report.best().map(Solution::from),
        candidates: report.candidates.iter().map(Solution::from).collect(),
    };
    Ok((to_json(&doc), report.best().is_some()))
}

/// CSV polyline of the best path, or `None` if there is no path.
pub fn sample_csv(query: &Query) -> Result<Option<String>, CliError> {
    let report = run_planner(query)?;
    let Some(best) = report.best() else {
        return Ok(None);
    };
    let mut out = String::from("segment_index,s,x,y,z\n");
    let row = |out: &mut String, i: usize, s: f64, p: [f64; 3]| {
        let _ = writeln!(
            out,
            "{i},{},{},{},{}",
            g17(s),
            g17(p[0]),
            g17(p[1]),
            g17(p[2])
        );
    };
    if best.length == 0.0 {
        row(&mut out, 0, 0.0, query.initial.position());
        return Ok(Some(out));
    }
    let n = query.samples_per_segment;
    let mut start = query.initial;
    let mut s0 = 0.0;
    for (i, &(kind, phi)) in best.family.segments(&best.angles).iter().enumerate() {
        let pts = sample_segment(&start, kind, best.r, phi, n)
            .map_err(|e| CliError::Domain(e.to_string()))?;
        let len = segment_length(kind, best.r, phi);
        for (k, p) in pts.iter().enumerate().skip(usize::from(i > 0)) {
            row(
                &mut out,
                i,
                s0 + len * k as f64 / (n - 1) as f64,
                p.position(),
            );
        }
        start = start.advance(&segment_rotation(kind, best.r, phi));
        s0 += len;
    }
    Ok(Some(out))
}

/// A round trip that found no path: family, radius and seed.
pub type Failure = (PathFamily, f64, u64);

pub struct VerifySettings {
    pub seed: u64,
    pub trials: u64,
    pub radii: Vec<f64>,
    pub tolerances: SolverTolerances,
}

/// Round-trip summary text and the failing `(family, r, seed)` triples.
pub fn verify(settings: &VerifySettings) -> Result<(String, Vec<Failure>), CliError> {
    if settings.trials == 0 {
        return Err(CliError::Domain("--trials must be at least 1".into()));
    }
    let tol = settings
        .tolerances
        .validate()
        .map_err(|e| CliError::Domain(e.to_string()))?;
    let radii = settings
        .radii
        .iter()
        .map(|&r| TurningRadius::new(r).map_err(|e| CliError::Domain(e.to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    let mut out = String::new();
    let _ = writeln!(out, "# {GENERATOR}");
    let _ = writeln!(out, "# seed {} trials {}", settings.seed, settings.trials);
    let mut failures = Vec::new();
    for family in PathFamily::ALL {
        for &r in &radii {
            let mut ok = 0u64;
            let mut worst = 0.0f64;
            for seed in settings.seed..settings.seed.saturating_add(settings.trials) {
                let rt = round_trip(family, r, seed, &tol);
                match rt.min_residual() {
                    Some(res) => {
                        ok += 1;
                        worst = worst.max(res);
                    }
                    None => failures.push((family, r.get(), seed)),
                }
            }
            let _ = writeln!(
                out,
                "{:<6} r={:<20} success={}/{} max_residual={}",
                family.label(),
                g17(r.get()),
                ok,
                settings.trials,
                g17(worst)
            );
        }
    }
    for (family, r, seed) in &failures {
        let _ = writeln!(out, "FAIL {} r={} seed={}", family.label(), g17(*r), seed);
    }
    let total = PathFamily::ALL.len() as u64 * radii.len() as u64 * settings.trials;
    let _ = writeln!(
        out,
        "{} of {} round trips succeeded",
        total - failures.len() as u64,
        total
    );
    Ok((out, failures))
}
