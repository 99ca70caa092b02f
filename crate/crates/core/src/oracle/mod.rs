//! Brute-force ground truth: every basis is enumerated and classified.
//!
//! Nothing here reuses the solvers. Supportedness is decided by exact
//! optimality checks at finitely many weights, which is enough because the
//! set of optimal images only changes where two images tie.

mod adjacency;
pub mod random;
mod verify;

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::geometry::{
    build_event_schedule, classify_frontier, critical_pairs_among, lower_hull, slope_between, BiCost, FrontierLabel,
    Point2, Slope, WeightInterval,
};
use crate::matroid::{Basis, MatroidInstance};
use crate::rational::Rational;
use crate::solvers::{check_costs, SolveError};

pub use adjacency::{adjacency_graph, check_connectivity, AdjacencyGraph};
pub use verify::{verify_report, verify_sweep, Violation, ViolationKind};

#[derive(Clone, Debug, Serialize)]
pub struct FrontierTruth {
    pub bases: Vec<Basis>,
    /// `images[i]` is the image of `bases[i]`.
    pub images: Vec<Point2>,
    pub labels: Vec<FrontierLabel>,
    pub y_n: BTreeSet<Point2>,
    pub y_sn: BTreeSet<Point2>,
    pub y_esn: BTreeSet<Point2>,
    pub x_e: BTreeSet<Basis>,
    pub x_se: BTreeSet<Basis>,
    pub x_ese: BTreeSet<Basis>,
    /// `Λ(x)` for every supported efficient basis.
    pub weight_components: BTreeMap<Basis, WeightInterval>,
    /// `Λ` per supported image, shared by all its preimages.
    pub image_components: BTreeMap<Point2, WeightInterval>,
    /// Weights at which optimality was tested, ascending, all in `[0, 1]`.
    pub probes: Vec<Rational>,
}

impl FrontierTruth {
    pub fn image_of(&self, basis: &Basis) -> Option<&Point2> {
        self.bases.binary_search(basis).ok().map(|i| &self.images[i])
    }

    /// Bases optimal for `P_λ`.
    pub fn optimal_at(&self, lambda: &Rational) -> BTreeSet<Basis> {
        let best = self.images.iter().map(|y| y.weighted(lambda)).min();
        match best {
            None => BTreeSet::new(),
            Some(best) => self
                .bases
                .iter()
                .zip(&self.images)
                .filter(|(_, y)| y.weighted(lambda) == best)
                .map(|(b, _)| b.clone())
                .collect(),
        }
    }

    /// Distinct event weights of the instance, ascending.
    pub fn event_lambdas(instance: &MatroidInstance, costs: &BiCost) -> Vec<Rational> {
        let pairs = critical_pairs_among(costs, &instance.available_elements());
        build_event_schedule(&pairs).lambdas().cloned().collect()
    }
}

/// Enumerates all bases (up to `cap` candidate sets) and classifies them.
pub fn brute_force_frontiers(
    instance: &MatroidInstance,
    costs: &BiCost,
    cap: u128,
) -> Result<FrontierTruth, SolveError> {
    check_costs(instance, costs)?;
    let mut bases = instance.enumerate_bases(cap)?;
    bases.sort();
    let images: Vec<Point2> = bases.iter().map(|b| costs.image(b)).collect();
    let labels = classify_frontier(&images);

    let distinct: BTreeSet<Point2> = images.iter().cloned().collect();
    let distinct: Vec<Point2> = distinct.into_iter().collect();
    let y_n: BTreeSet<Point2> = images
        .iter()
        .zip(&labels)
        .filter(|(_, l)| **l != FrontierLabel::Dominated)
        .map(|(y, _)| y.clone())
        .collect();
    let y_esn: BTreeSet<Point2> = lower_hull(&images).into_iter().collect();

    // Only nondominated images can be optimal at an interior weight, so
    // probing and ties are restricted to them.
    let frontier: Vec<Point2> = y_n.iter().cloned().collect();
    let probes = probe_weights(instance, costs, &frontier);
    let mut y_sn = BTreeSet::new();
    for lambda in probes.iter().filter(|l| !l.is_zero() && **l != Rational::one()) {
        let best = frontier
            .iter()
            .map(|y| y.weighted(lambda))
            .min()
            .expect("at least one basis");
        y_sn.extend(frontier.iter().filter(|y| y.weighted(lambda) == best).cloned());
    }
    debug_assert!(y_esn.is_subset(&y_sn));

    let mut image_components = BTreeMap::new();
    for y in &y_sn {
        image_components.insert(y.clone(), component(y, &distinct)?);
    }

    let pick = |set: &BTreeSet<Point2>| -> BTreeSet<Basis> {
        bases
            .iter()
            .zip(&images)
            .filter(|(_, y)| set.contains(*y))
            .map(|(b, _)| b.clone())
            .collect()
    };
    let x_e = pick(&y_n);
    let x_se = pick(&y_sn);
    let x_ese = pick(&y_esn);
    let weight_components = bases
        .iter()
        .zip(&images)
        .filter_map(|(b, y)| image_components.get(y).map(|w| (b.clone(), w.clone())))
        .collect();

    Ok(FrontierTruth {
        bases,
        images,
        labels,
        y_n,
        y_sn,
        y_esn,
        x_e,
        x_se,
        x_ese,
        weight_components,
        image_components,
        probes,
    })
}

/// Event weights, weights where two of `images` tie, the endpoints, and the
/// midpoints between consecutive values.
fn probe_weights(instance: &MatroidInstance, costs: &BiCost, images: &[Point2]) -> Vec<Rational> {
    let mut values: BTreeSet<Rational> = FrontierTruth::event_lambdas(instance, costs).into_iter().collect();
    values.insert(Rational::zero());
    values.insert(Rational::one());
    for (i, a) in images.iter().enumerate() {
        for b in &images[i + 1..] {
            if let Ok(Slope::Finite(s)) = slope_between(a, b) {
                if !s.is_positive() {
                    values.insert(Slope::Finite(s).lambda().expect("nonpositive slope"));
                }
            }
        }
    }
    let sorted: Vec<Rational> = values.into_iter().collect();
    let mut probes = Vec::with_capacity(2 * sorted.len());
    for w in sorted.windows(2) {
        probes.push(w[0].clone());
        probes.push(Rational::midpoint(&w[0], &w[1]));
    }
    probes.extend(sorted.last().cloned());
    probes
}

/// `[λ(α^x), λ(α_x)]` with `α^x = min` slope towards larger `f1` (and `0`),
/// `α_x = max` slope towards smaller `f1` (and `-∞`).
fn component(y: &Point2, images: &[Point2]) -> Result<WeightInterval, SolveError> {
    let alpha_up = images
        .iter()
        .filter(|z| z.y1 > y.y1)
        .map(|z| slope_between(y, z).expect("distinct f1"))
        .chain(std::iter::once(Slope::finite(0)))
        .min()
        .expect("nonempty");
    let alpha_down = images
        .iter()
        .filter(|z| z.y1 < y.y1)
        .map(|z| slope_between(y, z).expect("distinct f1"))
        .chain(std::iter::once(Slope::NegInfinity))
        .max()
        .expect("nonempty");
    Ok(crate::geometry::weight_interval(&alpha_up, &alpha_down)?)
}
