use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use super::FrontierTruth;
use crate::geometry::Point2;
use crate::rational::Rational;
use crate::solvers::{FrontierReport, SweepResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViolationKind {
    /// A reported basis is not supported efficient.
    NotSupported,
    /// Reported extreme images differ from `Y_ESN`.
    ExtremeMismatch,
    /// A weight interval differs from the true component.
    IntervalMismatch,
    /// Consecutive bases of an adjacency-claiming sweep are not adjacent.
    NotAdjacent,
    /// Decomposition intervals do not chain from 0 to 1.
    CoverageGap,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}: {}", self.kind, self.detail)
    }
}

fn violation(kind: ViolationKind, detail: String) -> Violation {
    Violation { kind, detail }
}

fn extreme_mismatch(found: BTreeSet<Point2>, truth: &FrontierTruth) -> Option<Violation> {
    (found != truth.y_esn).then(|| {
        violation(
            ViolationKind::ExtremeMismatch,
            format!("reported {:?}, expected {:?}", found, truth.y_esn),
        )
    })
}

/// Checks a sweep against the ground truth of the same instance.
pub fn verify_sweep(result: &SweepResult, truth: &FrontierTruth) -> Vec<Violation> {
    let mut out = Vec::new();
    for v in &result.visited {
        match truth.weight_components.get(&v.basis) {
            None => out.push(violation(
                ViolationKind::NotSupported,
                format!("{:?} with image {:?}", v.basis, v.image),
            )),
            Some(w) if *w != v.interval => out.push(violation(
                ViolationKind::IntervalMismatch,
                format!("{:?}: reported {:?}, expected {:?}", v.basis, v.interval, w),
            )),
            Some(_) => {}
        }
    }
    out.extend(extreme_mismatch(result.extreme_images().into_iter().collect(), truth));
    if result.adjacent_steps {
        for pair in result.visited.windows(2) {
            if pair[0].basis.symmetric_difference_len(&pair[1].basis) != 2 {
                out.push(violation(
                    ViolationKind::NotAdjacent,
                    format!("{:?} -> {:?}", pair[0].basis, pair[1].basis),
                ));
            }
        }
    }
    out
}

/// Checks a solver's frontier report: points, representatives and the
/// weight set decomposition.
pub fn verify_report(report: &FrontierReport, truth: &FrontierTruth) -> Vec<Violation> {
    let mut out = Vec::new();
    out.extend(extreme_mismatch(report.esn_points.iter().cloned().collect(), truth));
    for (b, y) in report.representatives.iter().zip(&report.esn_points) {
        if !truth.x_ese.contains(b) || truth.image_of(b) != Some(y) {
            out.push(violation(
                ViolationKind::NotSupported,
                format!("{b:?} does not represent {y:?}"),
            ));
        }
    }
    let mut expected_lo = Rational::zero();
    for (w, y) in &report.weight_decomposition {
        if let Some(t) = truth.image_components.get(y) {
            if t != w {
                out.push(violation(
                    ViolationKind::IntervalMismatch,
                    format!("{y:?}: reported {w:?}, expected {t:?}"),
                ));
            }
        }
        if w.lo != expected_lo {
            out.push(violation(
                ViolationKind::CoverageGap,
                format!("{w:?} starts at {}, expected {expected_lo}", w.lo),
            ));
        }
        expected_lo = w.hi.clone();
    }
    if expected_lo != Rational::one() {
        out.push(violation(
            ViolationKind::CoverageGap,
            format!("decomposition ends at {expected_lo}"),
        ));
    }
    out
}
