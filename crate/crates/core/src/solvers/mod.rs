//! Greedy and the frontier solvers.
//!
//! Every solver returns exact images and weight intervals together with
//! counters (loop iterations, independence queries) so runs can be compared
//! against the expected `O(m²)` behaviour.

mod dichotomic;
mod sweep;
mod tailored;

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::{slope_between, BiCost, GeometryError, Point2, WeightInterval};
use crate::matroid::{Basis, ElementId, IndependenceOracle, MatroidError, MatroidInstance};
use crate::rational::Rational;

pub use dichotomic::dichotomic_search;
pub use sweep::{
    adjacency_esn_sweep, adjacency_esn_sweep_with, global_esn_sweep, neighbors, neighbors_less, start_midway_sweep,
    Direction, Neighbor, NeighborScan,
};
pub use tailored::{tailored_esn_sweep, tailored_esn_trace, TailoredTrace};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error(transparent)]
    Matroid(#[from] MatroidError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("cost list has {costs} entries but the ground set has {ground} elements")]
    CostCountMismatch { costs: usize, ground: usize },
    #[error("unknown solver `{0}`")]
    UnknownSolver(String),
    #[error("start set is not a basis")]
    InvalidStart,
    #[error("no bases to sweep")]
    NoBases,
}

impl SolveError {
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, SolveError::Matroid(e) if e.is_resource_limit())
    }
}

/// Counters every solver reports.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolverStats {
    pub iterations: u64,
    pub independence_tests: u64,
}

/// A permutation of the ground set, scanned front to back by Greedy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementOrdering(Vec<ElementId>);

impl ElementOrdering {
    /// Checks that `order` is a permutation of `0..ground_size`.
    pub fn new(order: Vec<ElementId>, ground_size: usize) -> Option<Self> {
        let mut seen = vec![false; ground_size];
        for e in &order {
            if e.0 >= ground_size || std::mem::replace(&mut seen[e.0], true) {
                return None;
            }
        }
        (order.len() == ground_size).then_some(ElementOrdering(order))
    }

    pub fn as_slice(&self) -> &[ElementId] {
        &self.0
    }
}

/// Tie-break inside blocks of equal weighted cost: `S↑` sorts by `c1`
/// ascending, `S↓` by `c1` descending. Residual ties go to the smaller id.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tiebreak {
    C1Ascending,
    C1Descending,
}

/// Which objective leads in a lexicographic ordering.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Objective {
    First,
    Second,
}

pub(crate) fn check_costs(instance: &MatroidInstance, costs: &BiCost) -> Result<(), SolveError> {
    if costs.len() != instance.ground_size() {
        return Err(SolveError::CostCountMismatch {
            costs: costs.len(),
            ground: instance.ground_size(),
        });
    }
    Ok(())
}

/// `S↑_λ` or `S↓_λ`: nondescending in `c_λ`, ties by `c1`, then by id.
pub fn lex_ordering(costs: &BiCost, lambda: &Rational, tiebreak: Tiebreak) -> Result<ElementOrdering, GeometryError> {
    if !lambda.in_unit_interval() {
        return Err(GeometryError::WeightOutOfRange(lambda.clone()));
    }
    let ids: Vec<ElementId> = (0..costs.len()).map(ElementId).collect();
    Ok(ElementOrdering(sorted_by_weight(costs, lambda, tiebreak, ids)))
}

pub(crate) fn sorted_by_weight(
    costs: &BiCost,
    lambda: &Rational,
    tiebreak: Tiebreak,
    ids: Vec<ElementId>,
) -> Vec<ElementId> {
    let mut keyed: Vec<(Rational, ElementId)> = ids.into_iter().map(|e| (costs.weighted(lambda, e), e)).collect();
    keyed.sort_by(|(wa, a), (wb, b)| {
        wa.cmp(wb)
            .then_with(|| match tiebreak {
                Tiebreak::C1Ascending => costs.c1(*a).cmp(costs.c1(*b)),
                Tiebreak::C1Descending => costs.c1(*b).cmp(costs.c1(*a)),
            })
            .then_with(|| a.cmp(b))
    });
    keyed.into_iter().map(|(_, e)| e).collect()
}

/// Lexicographic ordering by `(c1, c2)` or `(c2, c1)`, then id.
pub fn lexicographic_ordering(costs: &BiCost, lead: Objective) -> ElementOrdering {
    let mut ids: Vec<ElementId> = (0..costs.len()).map(ElementId).collect();
    ids.sort_by(|&a, &b| {
        let (ka, kb) = match lead {
            Objective::First => ((costs.c1(a), costs.c2(a)), (costs.c1(b), costs.c2(b))),
            Objective::Second => ((costs.c2(a), costs.c1(a)), (costs.c2(b), costs.c1(b))),
        };
        ka.cmp(&kb).then_with(|| a.cmp(&b))
    });
    ElementOrdering(ids)
}

/// Greedy: scan `ordering`, keep each element whose addition stays
/// independent. Stops scanning once the set reaches the rank.
pub fn greedy_basis<M: IndependenceOracle + ?Sized>(instance: &M, ordering: &ElementOrdering) -> Basis {
    let rank = instance.rank();
    let mut current: Vec<ElementId> = Vec::with_capacity(rank);
    for &e in ordering.as_slice() {
        if current.len() == rank {
            break;
        }
        if !instance.is_available(e) {
            continue;
        }
        current.push(e);
        if !instance.independent(&current) {
            current.pop();
        }
    }
    Basis::new(current)
}

/// One basis visited by a sweep, with its weight set component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VisitedBasis {
    pub basis: Basis,
    pub image: Point2,
    pub interval: WeightInterval,
    pub extreme: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepResult {
    pub visited: Vec<VisitedBasis>,
    /// `λ^1 ≤ … ≤ λ^l`, one per transition.
    pub breakpoints: Vec<Rational>,
    pub stats: SolverStats,
    /// Whether consecutive visited bases are claimed to differ in one element.
    pub adjacent_steps: bool,
}

impl SweepResult {
    /// Images of the visited bases flagged extreme.
    pub fn extreme_images(&self) -> Vec<Point2> {
        self.visited
            .iter()
            .filter(|v| v.extreme)
            .map(|v| v.image.clone())
            .collect()
    }

    /// Keeps extreme entries, merging equal consecutive images.
    pub fn frontier(&self) -> FrontierReport {
        let mut report = FrontierReport {
            stats: self.stats,
            ..FrontierReport::default()
        };
        for v in self.visited.iter().filter(|v| v.extreme) {
            report.push(v.basis.clone(), v.image.clone(), v.interval.clone());
        }
        report
    }
}

/// `Y_ESN` with one representative basis per point and the weight set
/// decomposition, in increasing `λ` order (so `y1` decreasing).
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct FrontierReport {
    pub esn_points: Vec<Point2>,
    pub representatives: Vec<Basis>,
    pub weight_decomposition: Vec<(WeightInterval, Point2)>,
    pub stats: SolverStats,
}

impl FrontierReport {
    /// Appends a point, extending the previous interval when the image repeats.
    pub(crate) fn push(&mut self, basis: Basis, image: Point2, interval: WeightInterval) {
        if let Some((last_interval, last_image)) = self.weight_decomposition.last_mut() {
            if *last_image == image {
                last_interval.hi = interval.hi;
                return;
            }
        }
        self.esn_points.push(image.clone());
        self.representatives.push(basis);
        self.weight_decomposition.push((interval, image));
    }

    /// Builds a report from images in `λ` order, deriving breakpoints from
    /// the slopes between consecutive points.
    pub(crate) fn from_chain(chain: Vec<(Basis, Point2)>, stats: SolverStats) -> Result<Self, GeometryError> {
        let mut report = FrontierReport {
            stats,
            ..FrontierReport::default()
        };
        let mut lo = Rational::zero();
        for i in 0..chain.len() {
            let hi = match chain.get(i + 1) {
                Some((_, next)) => slope_between(&chain[i].1, next)?.lambda()?,
                None => Rational::one(),
            };
            let interval = WeightInterval::new(lo, hi.clone())?;
            report.push(chain[i].0.clone(), chain[i].1.clone(), interval);
            lo = hi;
        }
        Ok(report)
    }

    /// Points sorted by `y1` ascending.
    pub fn points_by_y1(&self) -> Vec<Point2> {
        let mut pts = self.esn_points.clone();
        pts.sort();
        pts
    }
}

/// The four frontier solvers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Solver {
    Global,
    Adjacency,
    Tailored,
    Dichotomic,
}

impl Solver {
    pub const ALL: [Solver; 4] = [Solver::Global, Solver::Adjacency, Solver::Tailored, Solver::Dichotomic];

    pub fn name(self) -> &'static str {
        match self {
            Solver::Global => "global",
            Solver::Adjacency => "adjacency",
            Solver::Tailored => "tailored",
            Solver::Dichotomic => "dichotomic",
        }
    }

    /// Runs the solver. `enumeration_cap` only matters for [`Solver::Global`].
    pub fn run(
        self,
        instance: &MatroidInstance,
        costs: &BiCost,
        enumeration_cap: u128,
    ) -> Result<FrontierReport, SolveError> {
        check_costs(instance, costs)?;
        match self {
            Solver::Global => {
                let bases = instance.enumerate_bases(enumeration_cap)?;
                Ok(global_esn_sweep(&bases, costs)?.frontier())
            }
            Solver::Adjacency => Ok(adjacency_esn_sweep(instance, costs)?.frontier()),
            Solver::Tailored => tailored_esn_sweep(instance, costs),
            Solver::Dichotomic => dichotomic_search(instance, costs),
        }
    }
}

impl fmt::Display for Solver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Solver {
    type Err = SolveError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Solver::ALL
            .into_iter()
            .find(|solver| solver.name() == s)
            .ok_or_else(|| SolveError::UnknownSolver(s.to_string()))
    }
}

/// Candidate order used by the sweeps: larger slope first, then smaller
/// `y1`, then the lexicographically smaller basis.
pub(crate) fn better_step(
    a: (&crate::geometry::Slope, &Point2, &Basis),
    b: (&crate::geometry::Slope, &Point2, &Basis),
) -> Ordering {
    b.0.cmp(a.0)
        .then_with(|| a.1.y1.cmp(&b.1.y1))
        .then_with(|| a.2.cmp(b.2))
}

#[cfg(test)]
pub(crate) mod fixtures {
    use crate::geometry::BiCost;
    use crate::matroid::MatroidInstance;

    pub fn fig1() -> (MatroidInstance, BiCost) {
        let g = MatroidInstance::graphic(5, vec![(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        let costs = BiCost::from_integers(&[(-1, 4), (0, 0), (0, 0), (0, 4), (4, 0), (2, 2)]);
        (g, costs)
    }

    /// Left triangle mirrored onto the costs of the right one.
    pub fn ex28() -> (MatroidInstance, BiCost) {
        let g = MatroidInstance::graphic(5, vec![(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        let costs = BiCost::from_integers(&[(2, 2), (0, 4), (4, 0), (0, 4), (4, 0), (2, 2)]);
        (g, costs)
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn greedy_lexicographic_extremes_on_fig1() {
        let (g, costs) = fig1();
        let right = greedy_basis(&g, &lexicographic_ordering(&costs, Objective::Second));
        assert_eq!(costs.image(&right), Point2::new(6, 2));
        let left = greedy_basis(&g, &lexicographic_ordering(&costs, Objective::First));
        assert_eq!(costs.image(&left), Point2::new(1, 10));
    }

    #[test]
    fn greedy_on_uniform_takes_prefix() {
        let u = MatroidInstance::uniform(4, 2).unwrap();
        let order = ElementOrdering::new(vec![ElementId(2), ElementId(0), ElementId(3), ElementId(1)], 4).unwrap();
        assert_eq!(greedy_basis(&u, &order), Basis::from_indices([0, 2]));
    }

    #[test]
    fn orderings() {
        let (_, costs) = fig1();
        let s0 = lex_ordering(&costs, &Rational::zero(), Tiebreak::C1Ascending).unwrap();
        assert_eq!(s0, lexicographic_ordering(&costs, Objective::Second));

        let half = lex_ordering(&costs, &Rational::new(1, 2), Tiebreak::C1Ascending).unwrap();
        let pos = |e: usize| half.as_slice().iter().position(|&x| x == ElementId(e)).unwrap();
        // v3v4 (c1=0) < v4v5 (c1=2) < v3v5 (c1=4), all with c_{1/2} = 2
        assert!(pos(3) < pos(5) && pos(5) < pos(4));

        let tied = BiCost::from_integers(&[(1, 1), (1, 1)]);
        for tb in [Tiebreak::C1Ascending, Tiebreak::C1Descending] {
            let o = lex_ordering(&tied, &Rational::new(1, 3), tb).unwrap();
            assert_eq!(o.as_slice(), &[ElementId(0), ElementId(1)]);
        }
        assert!(lex_ordering(&costs, &Rational::from(2), Tiebreak::C1Ascending).is_err());
    }

    #[test]
    fn element_ordering_validates_permutations() {
        assert!(ElementOrdering::new(vec![ElementId(0), ElementId(0)], 2).is_none());
        assert!(ElementOrdering::new(vec![ElementId(0)], 2).is_none());
        assert!(ElementOrdering::new(vec![ElementId(1), ElementId(0)], 2).is_some());
    }

    #[test]
    fn solver_names_round_trip() {
        for s in Solver::ALL {
            assert_eq!(s.name().parse::<Solver>().unwrap(), s);
        }
        assert!("simplex".parse::<Solver>().is_err());
    }

    #[test]
    fn cost_count_mismatch_is_rejected() {
        let (g, _) = fig1();
        let costs = BiCost::from_integers(&[(0, 0); 5]);
        assert_eq!(
            Solver::Tailored.run(&g, &costs, 10),
            Err(SolveError::CostCountMismatch { costs: 5, ground: 6 })
        );
    }
}
