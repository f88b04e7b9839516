//! Named checks and the batch runner.

pub mod properties;

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::gauge::{
    curvature_like, dirac_projectors, identities, on_shell_momenta, FieldModel, GammaAlgebra, GaugeSystem,
    MetricMode, Sectors,
};
use crate::jet::{JetPolynomial, JetSpace};
use crate::report::{CheckReport, Finding};
use crate::scalar::{Grade, GQ};
use crate::Error;

pub const REPORT_SCHEMA_VERSION: u32 = 1;

/// Default number of random cases per property.
pub const DEFAULT_CORPUS: usize = 50;

/// Registered checks with a one-line description, in report order.
pub const CHECKS: &[(&str, &str)] = &[
    ("fock-axioms", "ladder super-commutation relations on random mode sets"),
    ("fock-lattice", "lattice equal-time relations and charge generation"),
    ("jet-ring", "graded-commutative jet ring axioms"),
    ("dh-nilpotent", "d_H ∘ d_H = 0 for m = 2 and m = 4"),
    ("dh-delta-commute", "δ[v] ∘ d_H = d_H ∘ δ[v] for m = 2 and m = 4"),
    ("splitting", "δ[v]L − F⌋v = d_H(P⌋v) for orders 1 and 2"),
    ("variational-triviality", "EL of divergences, δ[v] derivation, bracket of fields"),
    ("lie-algebra", "Lie algebra data axioms"),
    ("gamma", "Clifford relation and gamma hermiticity"),
    ("nilpotency", "S² = 0 on coordinates and random polynomials"),
    ("theta-s", "θ·S = δ[v] on random polynomials"),
    ("ghost-exactness", "L_ghost = S K + d_H M and δ[v]L_ghost = θ d_H N"),
    ("gauge-invariance", "δ[v](L_ψ + L_A) = 0 and δ[v]L = θ d_H N"),
    ("brst-current", "Noether BRST current and its conservation"),
    ("fp-current", "Faddeev–Popov current identities and [v_FP, v] = v"),
    ("second-order", "second-order ghost density equivalence"),
    ("dirac-projectors", "electron/positron projectors at on-shell momenta"),
    ("curvature", "curvature-like tensor examples"),
];

/// What to run.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub model: FieldModel,
    /// Check names; empty means all.
    pub checks: Vec<String>,
    pub seed: u64,
    pub corpus: usize,
    /// Worker threads; `0` uses the rayon default.
    pub jobs: usize,
    /// Include wall-clock times (makes reports non-reproducible).
    pub timings: bool,
}

impl RunConfig {
    pub fn new(model: FieldModel) -> Self {
        RunConfig { model, checks: Vec::new(), seed: 0, corpus: DEFAULT_CORPUS, jobs: 0, timings: false }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
    pub findings: Vec<Finding>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ModelSummary {
    pub dimension: usize,
    pub metric_mode: MetricMode,
    pub group: String,
    pub xi: String,
    pub mass: String,
    pub sectors: Sectors,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub seed: u64,
    pub model: ModelSummary,
    pub checks: Vec<CheckResult>,
    pub summary: Summary,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            match c.wall_time_ms {
                Some(ms) => out.push_str(&format!("{status} {} ({ms} ms)\n", c.name)),
                None => out.push_str(&format!("{status} {}\n", c.name)),
            }
            for f in &c.findings {
                let mark = if f.passed { "ok  " } else { "FAIL" };
                out.push_str(&format!("  {mark} {}\n", f.name));
                if let Some(w) = &f.witness {
                    out.push_str(&format!("       {w}\n"));
                }
            }
        }
        out.push_str(&format!(
            "{} checks, {} passed, {} failed\n",
            self.summary.total, self.summary.passed, self.summary.failed
        ));
        out
    }
}

pub fn check_names() -> impl Iterator<Item = &'static str> {
    CHECKS.iter().map(|(n, _)| *n)
}

/// Systems on which the gauge identities run: the model itself, split
/// into a formal-metric bosonic system and a constant-metric system with
/// fermions when both are requested.
pub fn gauge_systems(model: &FieldModel) -> Result<Vec<(String, GaugeSystem)>, Error> {
    if model.metric_mode == MetricMode::Formal && model.sectors.fermion {
        let bosonic = model.clone().with_sectors(Sectors { fermion: false, ..model.sectors });
        let full = model.clone().with_metric(MetricMode::Constant);
        Ok(vec![
            ("formal metric".into(), GaugeSystem::new(bosonic)?),
            ("constant metric".into(), GaugeSystem::new(full)?),
        ])
    } else {
        let label = match model.metric_mode {
            MetricMode::Formal => "formal metric",
            MetricMode::Constant => "constant metric",
        };
        Ok(vec![(label.into(), GaugeSystem::new(model.clone())?)])
    }
}

fn labelled(label: &str, r: CheckReport) -> CheckReport {
    let mut out = CheckReport::new();
    for f in r.findings {
        out.findings.push(Finding { name: format!("[{label}] {}", f.name), ..f });
    }
    out
}

fn per_system<F>(model: &FieldModel, f: F) -> Result<CheckReport, Error>
where
    F: Fn(&GaugeSystem) -> Result<CheckReport, Error>,
{
    let mut out = CheckReport::new();
    for (label, sys) in gauge_systems(model)? {
        out.extend(labelled(&label, f(&sys)?));
    }
    Ok(out)
}

fn dirac_check(model: &FieldModel) -> Result<CheckReport, Error> {
    let gamma = GammaAlgebra::dirac(model.base_dim)?;
    let mut out = CheckReport::new();
    let momenta = on_shell_momenta(model.base_dim, 3, 24);
    let mut failure = None;
    for (p, m) in &momenta {
        // halve every other momentum to exercise non-integer entries
        let den = if p.iter().sum::<i64>() % 2 == 0 { 1 } else { 2 };
        let pq: Vec<GQ> = p.iter().map(|&x| GQ::ratio(x, den)).collect();
        let mass = GQ::ratio(*m, den);
        let r = dirac_projectors(&gamma, &pq, &mass)?.check(&gamma);
        let first = r.failures().next().map(|f| f.name.clone());
        if let Some(name) = first {
            failure = Some(format!("p = {p:?}/{den}, m = {m}/{den}: {name}"));
            break;
        }
    }
    out.record(format!("projector identities at {} on-shell momenta", momenta.len()), failure);
    let off = dirac_projectors(&gamma, &vec![GQ::int(3); model.base_dim], &GQ::int(1));
    out.record(
        "off-shell momentum rejected",
        (!matches!(off, Err(Error::OffShell(_)))).then(|| "off-shell momentum accepted".to_string()),
    );
    Ok(out)
}

fn curvature_check(model: &FieldModel) -> CheckReport {
    let m = model.base_dim;
    let d = model.algebra.dim();
    let mut space = JetSpace::new(m).expect("validated dimension");
    let p_ids: Vec<_> = (0..m).map(|a| space.add_field(format!("p{a}"), Grade::Even)).collect();
    let chi_ids: Vec<_> = (0..d).map(|i| space.add_field(format!("chi{i}"), Grade::Even)).collect();
    let alpha_ids: Vec<Vec<_>> =
        (0..m).map(|a| (0..d).map(|i| space.add_field(format!("alpha{a}.{i}"), Grade::Even)).collect()).collect();
    let p: Vec<JetPolynomial> = p_ids.iter().map(|&id| space.coord(id)).collect();
    let chi: Vec<JetPolynomial> = chi_ids.iter().map(|&id| space.coord(id)).collect();
    let alpha: Vec<Vec<JetPolynomial>> =
        alpha_ids.iter().map(|row| row.iter().map(|&id| space.coord(id)).collect()).collect();
    let mut out = CheckReport::new();
    let rho = curvature_like(&model.algebra, &p, &alpha);
    let anti = (0..d).find_map(|i| {
        (0..m).find_map(|a| (0..m).find_map(|b| crate::gauge::witness(&space, &format!("ρ^{i}_{{{a}{b}}} + ρ^{i}_{{{b}{a}}}"), &(&rho[i][a][b] + &rho[i][b][a]))))
    });
    out.record("ρ antisymmetric", anti);
    let pure: Vec<Vec<JetPolynomial>> = (0..m).map(|a| chi.iter().map(|c| &p[a] * c).collect()).collect();
    let lin = curvature_like(&crate::gauge::LieAlgebraData { structure: vec![vec![vec![GQ::from(0); d]; d]; d], ..model.algebra.clone() }, &p, &pure);
    let w = lin.iter().flatten().flatten().find_map(|x| crate::gauge::witness(&space, "i p∧(p⊗χ)", x));
    out.record("i p∧(p⊗χ) = 0", w);
    out
}

fn run_one(name: &str, cfg: &RunConfig) -> Result<CheckReport, Error> {
    let seed = cfg.seed;
    let n = cfg.corpus;
    let model = &cfg.model;
    match name {
        "fock-axioms" => Ok(properties::fock_axioms(seed, n.min(20))),
        "fock-lattice" => properties::fock_lattice(),
        "jet-ring" => Ok(properties::jet_ring(seed, n)),
        "dh-nilpotent" => {
            let mut r = properties::d_h_nilpotent(seed, 2, n);
            r.extend(properties::d_h_nilpotent(seed, 4, n));
            Ok(r)
        }
        "dh-delta-commute" => {
            let mut r = properties::d_h_delta_commute(seed, 2, n);
            r.extend(properties::d_h_delta_commute(seed, 4, n));
            Ok(r)
        }
        "splitting" => {
            let half = n.div_ceil(2);
            let mut r = properties::splitting(seed, 1, half)?;
            r.extend(properties::splitting(seed, 2, half)?);
            Ok(r)
        }
        "variational-triviality" => {
            let mut r = properties::variational_triviality(seed, n)?;
            r.extend(properties::vertical_bracket(seed, n));
            Ok(r)
        }
        "lie-algebra" => Ok(model.algebra.validate()),
        "gamma" => Ok(GammaAlgebra::dirac(model.base_dim)?.validate()),
        "nilpotency" => per_system(model, |s| Ok(identities::check_nilpotent(s, seed, n))),
        "theta-s" => per_system(model, |s| Ok(identities::check_theta_s(s, seed, n))),
        "ghost-exactness" => per_system(model, |s| Ok(identities::ghost_exactness(s).2)),
        "gauge-invariance" => per_system(model, |s| Ok(identities::gauge_invariance(s))),
        "brst-current" => per_system(model, |s| Ok(identities::brst_current(s).1)),
        "fp-current" => per_system(model, |s| Ok(identities::fp_current(s))),
        "second-order" => per_system(model, |s| Ok(identities::second_order_equivalence(s))),
        "dirac-projectors" => dirac_check(model),
        "curvature" => Ok(curvature_check(model)),
        other => Err(Error::UnknownCheck(other.to_string())),
    }
}

/// Runs the selected checks. Unknown names are rejected before any work;
/// identity failures are reported, infrastructure errors abort.
pub fn run(cfg: &RunConfig) -> Result<Report, Error> {
    let selected: Vec<&'static str> = if cfg.checks.is_empty() || cfg.checks.iter().any(|c| c == "all") {
        check_names().collect()
    } else {
        for c in &cfg.checks {
            if !check_names().any(|n| n == c) {
                return Err(Error::UnknownCheck(c.clone()));
            }
        }
        check_names().filter(|n| cfg.checks.iter().any(|c| c == n)).collect()
    };
    let work = || -> Result<Vec<CheckResult>, Error> {
        selected
            .par_iter()
            .map(|name| {
                let start = Instant::now();
                let report = run_one(name, cfg)?;
                let wall = cfg.timings.then(|| start.elapsed().as_millis() as u64);
                Ok(CheckResult { name: name.to_string(), passed: report.passed(), wall_time_ms: wall, findings: report.findings })
            })
            .collect()
    };
    let checks = if cfg.jobs > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.jobs)
            .build()
            .map_err(|e| Error::InvalidModel(format!("thread pool: {e}")))?
            .install(work)?
    } else {
        work()?
    };
    let passed = checks.iter().filter(|c| c.passed).count();
    let m = &cfg.model;
    Ok(Report {
        schema_version: REPORT_SCHEMA_VERSION,
        seed: cfg.seed,
        model: ModelSummary {
            dimension: m.base_dim,
            metric_mode: m.metric_mode,
            group: m.algebra.name.clone(),
            xi: m.xi.to_string(),
            mass: m.mass.to_string(),
            sectors: m.sectors,
        },
        summary: Summary { total: checks.len(), passed, failed: checks.len() - passed },
        checks,
    })
}
