use std::collections::BTreeMap;
use std::time::Instant;

use esn_core::geometry::FrontierLabel;
use esn_core::matroid::{MatroidInstance, DEFAULT_ENUMERATION_CAP};
use esn_core::oracle::{adjacency_graph, brute_force_frontiers, check_connectivity, verify_report, Violation};
use esn_core::solvers::{SolveError, Solver};
use esn_core::{Basis, BiCost, Point2, Rational, WeightInterval};
use serde::Serialize;

use crate::instance::InstanceFile;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunStats {
    pub iterations: u64,
    pub independence_tests: u64,
    /// Only present with `timing`; never part of the determinism guarantee.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionEntry {
    pub lo: Rational,
    pub hi: Rational,
    pub point: Point2,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunReport {
    pub solver: Solver,
    pub instance_digest: String,
    /// Sorted by `y1` ascending.
    pub esn: Vec<Point2>,
    /// `representatives[i]` attains `esn[i]`.
    pub representatives: Vec<Basis>,
    /// Increasing in `λ`, covering `[0, 1]`.
    pub decomposition: Vec<DecompositionEntry>,
    pub stats: RunStats,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violations: Option<Vec<Violation>>,
}

impl RunReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn has_violations(&self) -> bool {
        self.violations.as_ref().is_some_and(|v| !v.is_empty())
    }
}

#[derive(Clone, Copy, Debug)]
pub struct RunOptions {
    /// Cross-check against the brute-force oracle.
    pub verify: bool,
    /// Record wall time in the report.
    pub timing: bool,
    pub enumeration_cap: u128,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            verify: false,
            timing: false,
            enumeration_cap: DEFAULT_ENUMERATION_CAP,
        }
    }
}

pub fn run_solver(
    file: &InstanceFile,
    instance: &MatroidInstance,
    costs: &BiCost,
    solver: Solver,
    options: RunOptions,
) -> Result<RunReport, SolveError> {
    let start = Instant::now();
    let report = solver.run(instance, costs, options.enumeration_cap)?;
    let elapsed = start.elapsed();

    let violations = if options.verify {
        let truth = brute_force_frontiers(instance, costs, options.enumeration_cap)?;
        Some(verify_report(&report, &truth))
    } else {
        None
    };

    let mut pairs: Vec<(Point2, Basis)> = report
        .esn_points
        .iter()
        .cloned()
        .zip(report.representatives.iter().cloned())
        .collect();
    pairs.sort();
    let (esn, representatives) = pairs.into_iter().unzip();

    Ok(RunReport {
        solver,
        instance_digest: file.digest(),
        esn,
        representatives,
        decomposition: report
            .weight_decomposition
            .iter()
            .map(|(w, y)| DecompositionEntry {
                lo: w.lo.clone(),
                hi: w.hi.clone(),
                point: y.clone(),
            })
            .collect(),
        stats: RunStats {
            iterations: report.stats.iterations,
            independence_tests: report.stats.independence_tests,
            wall_time_ms: options.timing.then_some(elapsed.as_secs_f64() * 1e3),
        },
        violations,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ImageEntry {
    pub point: Point2,
    pub label: FrontierLabel,
    /// Number of bases with this image.
    pub bases: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weight_set: Option<WeightInterval>,
}

/// Ground truth summary written by the `oracle` command.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub instance_digest: String,
    pub bases: usize,
    /// Distinct images sorted by `(y1, y2)`.
    pub images: Vec<ImageEntry>,
    pub y_n: Vec<Point2>,
    pub y_sn: Vec<Point2>,
    pub y_esn: Vec<Point2>,
    pub adjacency_edges: usize,
    pub d_connected: bool,
    pub d_e_connected: bool,
    pub d_se_connected: bool,
    pub d_ese_connected: bool,
}

impl OracleReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

pub fn run_oracle(
    file: &InstanceFile,
    instance: &MatroidInstance,
    costs: &BiCost,
    cap: u128,
) -> Result<OracleReport, SolveError> {
    let truth = brute_force_frontiers(instance, costs, cap)?;
    let mut images: BTreeMap<Point2, (FrontierLabel, usize)> = BTreeMap::new();
    for (y, label) in truth.images.iter().zip(&truth.labels) {
        images.entry(y.clone()).or_insert((*label, 0)).1 += 1;
    }
    let d = adjacency_graph(&truth.bases);
    let all = truth.bases.iter().cloned().collect();
    Ok(OracleReport {
        instance_digest: file.digest(),
        bases: truth.bases.len(),
        images: images
            .into_iter()
            .map(|(point, (label, bases))| ImageEntry {
                weight_set: truth.image_components.get(&point).cloned(),
                point,
                label,
                bases,
            })
            .collect(),
        y_n: truth.y_n.iter().cloned().collect(),
        y_sn: truth.y_sn.iter().cloned().collect(),
        y_esn: truth.y_esn.iter().cloned().collect(),
        adjacency_edges: d.edges.len(),
        d_connected: check_connectivity(&d, &all),
        d_e_connected: check_connectivity(&d, &truth.x_e),
        d_se_connected: check_connectivity(&d, &truth.x_se),
        d_ese_connected: check_connectivity(&d, &truth.x_ese),
    })
}
