use crate::geometry::{slope_between, BiCost, Point2, Slope, WeightInterval};
use crate::matroid::{circuit_of, Basis, CountingOracle, ElementId, IndependenceOracle, MatroidInstance};
use crate::rational::Rational;

use super::{
    better_step, check_costs, greedy_basis, lexicographic_ordering, Objective, SolveError, SolverStats, SweepResult,
    VisitedBasis,
};

/// Side of the current image a neighbour lies on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// `f1(B') < f1(B)`
    Less,
    /// `f1(B') > f1(B)`
    Greater,
}

/// How neighbours are enumerated.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum NeighborScan {
    /// One fundamental circuit per non-basis element.
    #[default]
    Circuit,
    /// Test every `(e, f)` exchange directly. Debug mode.
    Raw,
}

/// `B' = (B - removed) + added`, with its image and slope `s(B', B)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Neighbor {
    pub basis: Basis,
    pub image: Point2,
    pub slope: Slope,
    pub removed: ElementId,
    pub added: ElementId,
}

fn wanted(direction: Direction, costs: &BiCost, removed: ElementId, added: ElementId) -> bool {
    match direction {
        Direction::Less => costs.c1(added) < costs.c1(removed),
        Direction::Greater => costs.c1(added) > costs.c1(removed),
    }
}

/// Adjacent bases on one side of `b`.
pub fn neighbors<M: IndependenceOracle + ?Sized>(
    oracle: &M,
    b: &Basis,
    costs: &BiCost,
    direction: Direction,
    scan: NeighborScan,
) -> Vec<Neighbor> {
    let image = costs.image(b);
    let outside: Vec<ElementId> = (0..oracle.ground_size())
        .map(ElementId)
        .filter(|&f| !b.contains(f) && oracle.is_available(f))
        .collect();

    let mut exchanges: Vec<(ElementId, ElementId)> = Vec::new();
    match scan {
        NeighborScan::Circuit => {
            for &f in &outside {
                if !b.elements().iter().any(|&e| wanted(direction, costs, e, f)) {
                    continue;
                }
                let circuit = circuit_of(oracle, b.elements(), f);
                for &e in circuit.elements() {
                    if e != f && wanted(direction, costs, e, f) {
                        exchanges.push((e, f));
                    }
                }
            }
        }
        NeighborScan::Raw => {
            for &e in b.elements() {
                for &f in &outside {
                    if wanted(direction, costs, e, f) {
                        let candidate = b.exchange(e, f);
                        if oracle.independent(candidate.elements()) {
                            exchanges.push((e, f));
                        }
                    }
                }
            }
        }
    }

    exchanges
        .into_iter()
        .map(|(e, f)| {
            let next = Point2 {
                y1: &image.y1 - costs.c1(e) + costs.c1(f),
                y2: &image.y2 - costs.c2(e) + costs.c2(f),
            };
            let slope = slope_between(&image, &next).expect("exchange changes f1");
            Neighbor {
                basis: b.exchange(e, f),
                image: next,
                slope,
                removed: e,
                added: f,
            }
        })
        .collect()
}

/// `N^<(b)` with slopes `s(b', b)`.
pub fn neighbors_less(instance: &MatroidInstance, b: &Basis, costs: &BiCost) -> Vec<(Basis, Slope)> {
    neighbors(instance, b, costs, Direction::Less, NeighborScan::Circuit)
        .into_iter()
        .map(|n| (n.basis, n.slope))
        .collect()
}

type Step = (Basis, Point2, Slope);

/// Shared loop of the sweeps: from `start`, repeatedly move to the
/// maximal-slope candidate returned by `next`, recording each solution's
/// weight interval `[λ^k, λ^{k+1}]`.
fn sweep_from<F>(
    start: Basis,
    start_image: Point2,
    start_lo: Rational,
    mut next: F,
) -> Result<(Vec<VisitedBasis>, Vec<Rational>), SolveError>
where
    F: FnMut(&Basis, &Point2) -> Option<Step>,
{
    let mut visited = Vec::new();
    let mut breakpoints = Vec::new();
    let (mut current, mut image, mut lo) = (start, start_image, start_lo);
    loop {
        match next(&current, &image) {
            None => {
                let interval = WeightInterval::new(lo, Rational::one())?;
                visited.push(VisitedBasis {
                    extreme: interval.has_interior(),
                    basis: current,
                    image,
                    interval,
                });
                return Ok((visited, breakpoints));
            }
            Some((basis, next_image, slope)) => {
                let hi = slope.lambda()?;
                let interval = WeightInterval::new(lo, hi.clone())?;
                visited.push(VisitedBasis {
                    extreme: interval.has_interior(),
                    basis: current,
                    image,
                    interval,
                });
                breakpoints.push(hi.clone());
                current = basis;
                image = next_image;
                lo = hi;
            }
        }
    }
}

fn best<I: Iterator<Item = Step>>(candidates: I) -> Option<Step> {
    candidates.min_by(|a, b| better_step((&a.2, &a.1, &a.0), (&b.2, &b.1, &b.0)))
}

/// Sweep over an explicit list of all bases.
pub fn global_esn_sweep(all_bases: &[Basis], costs: &BiCost) -> Result<SweepResult, SolveError> {
    let images: Vec<Point2> = all_bases.iter().map(|b| costs.image(b)).collect();
    let start = (0..all_bases.len())
        .min_by(|&i, &j| {
            (&images[i].y2, &images[i].y1, &all_bases[i]).cmp(&(&images[j].y2, &images[j].y1, &all_bases[j]))
        })
        .ok_or(SolveError::NoBases)?;

    // α^x over X^>(x) ∪ {0}
    let alpha_up = images
        .iter()
        .filter(|y| y.y1 > images[start].y1)
        .map(|y| slope_between(&images[start], y).expect("distinct f1"))
        .chain(std::iter::once(Slope::finite(0)))
        .min()
        .expect("nonempty");
    let lo = alpha_up.lambda()?;

    let (visited, breakpoints) = sweep_from(all_bases[start].clone(), images[start].clone(), lo, |_, image| {
        best(
            all_bases
                .iter()
                .zip(&images)
                .filter(|(_, y)| y.y1 < image.y1)
                .map(|(b, y)| (b.clone(), y.clone(), slope_between(image, y).expect("distinct f1"))),
        )
    })?;

    Ok(SweepResult {
        stats: SolverStats {
            iterations: breakpoints.len() as u64,
            independence_tests: 0,
        },
        visited,
        breakpoints,
        adjacent_steps: false,
    })
}

fn adjacency_sweep_from(
    oracle: &CountingOracle<'_, MatroidInstance>,
    costs: &BiCost,
    start: Basis,
    lo: Rational,
    scan: NeighborScan,
) -> Result<SweepResult, SolveError> {
    let image = costs.image(&start);
    let (visited, breakpoints) = sweep_from(start, image, lo, |b, _| {
        best(
            neighbors(oracle, b, costs, Direction::Less, scan)
                .into_iter()
                .map(|n| (n.basis, n.image, n.slope)),
        )
    })?;
    Ok(SweepResult {
        stats: SolverStats {
            iterations: breakpoints.len() as u64,
            independence_tests: oracle.calls(),
        },
        visited,
        breakpoints,
        adjacent_steps: true,
    })
}

/// Adjacency-based sweep from the lexicographic `(f2, f1)` optimum.
pub fn adjacency_esn_sweep(instance: &MatroidInstance, costs: &BiCost) -> Result<SweepResult, SolveError> {
    adjacency_esn_sweep_with(instance, costs, NeighborScan::Circuit)
}

pub fn adjacency_esn_sweep_with(
    instance: &MatroidInstance,
    costs: &BiCost,
    scan: NeighborScan,
) -> Result<SweepResult, SolveError> {
    check_costs(instance, costs)?;
    let oracle = CountingOracle::new(instance);
    let start = greedy_basis(&oracle, &lexicographic_ordering(costs, Objective::Second));
    adjacency_sweep_from(&oracle, costs, start, Rational::zero(), scan)
}

/// Adjacency-based sweep started at a supported basis `start`.
///
/// The first interval's lower end comes from the minimal slope towards
/// neighbours of larger `f1`.
pub fn start_midway_sweep(
    instance: &MatroidInstance,
    costs: &BiCost,
    start: &Basis,
) -> Result<SweepResult, SolveError> {
    check_costs(instance, costs)?;
    if !instance.is_basis(start.elements()) {
        return Err(SolveError::InvalidStart);
    }
    let oracle = CountingOracle::new(instance);
    let alpha_up = neighbors(&oracle, start, costs, Direction::Greater, NeighborScan::Circuit)
        .into_iter()
        .map(|n| n.slope)
        .chain(std::iter::once(Slope::finite(0)))
        .min()
        .expect("nonempty");
    adjacency_sweep_from(&oracle, costs, start.clone(), alpha_up.lambda()?, NeighborScan::Circuit)
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;
    use crate::matroid::DEFAULT_ENUMERATION_CAP;

    fn images(r: &SweepResult) -> Vec<Point2> {
        r.visited.iter().map(|v| v.image.clone()).collect()
    }

    fn p(a: i64, b: i64) -> Point2 {
        Point2::new(a, b)
    }

    #[test]
    fn global_sweep_on_fig1_takes_the_long_jump() {
        let (g, costs) = fig1();
        let bases = g.enumerate_bases(DEFAULT_ENUMERATION_CAP).unwrap();
        let r = global_esn_sweep(&bases, &costs).unwrap();
        assert_eq!(images(&r), vec![p(6, 2), p(2, 6), p(1, 10)]);
        assert_eq!(r.breakpoints, vec![Rational::new(1, 2), Rational::new(4, 5)]);
        assert!(r.visited.iter().all(|v| v.extreme));
        assert_eq!(
            r.visited[0].interval,
            WeightInterval::new(Rational::zero(), Rational::new(1, 2)).unwrap()
        );
    }

    #[test]
    fn global_sweep_single_basis() {
        let costs = BiCost::from_integers(&[(3, 1)]);
        let r = global_esn_sweep(&[Basis::from_indices([0])], &costs).unwrap();
        assert_eq!(r.visited.len(), 1);
        assert_eq!(r.visited[0].interval, WeightInterval::full());
        assert!(global_esn_sweep(&[], &costs).is_err());
    }

    #[test]
    fn global_sweep_on_ex28() {
        let (g, costs) = ex28();
        let bases = g.enumerate_bases(DEFAULT_ENUMERATION_CAP).unwrap();
        let r = global_esn_sweep(&bases, &costs).unwrap();
        assert_eq!(r.extreme_images(), vec![p(12, 4), p(4, 12)]);
    }

    #[test]
    fn neighbors_of_t1() {
        let (g, costs) = fig1();
        let t1 = Basis::from_indices([1, 2, 4, 5]);
        assert_eq!(costs.image(&t1), p(6, 2));
        let found: Vec<Point2> = neighbors_less(&g, &t1, &costs)
            .iter()
            .map(|(b, _)| costs.image(b))
            .collect();
        assert!(found.contains(&p(4, 4)));
        assert!(found.contains(&p(2, 6)));

        let t4 = Basis::from_indices([0, 1, 3, 5]);
        assert_eq!(costs.image(&t4), p(1, 10));
        assert!(neighbors_less(&g, &t4, &costs).is_empty());

        let u = MatroidInstance::uniform(3, 3).unwrap();
        let c = BiCost::from_integers(&[(1, 2), (2, 1), (0, 0)]);
        assert!(neighbors_less(&u, &Basis::from_indices([0, 1, 2]), &c).is_empty());
    }

    #[test]
    fn raw_and_circuit_scans_agree() {
        let (g, costs) = fig1();
        for b in g.enumerate_bases(DEFAULT_ENUMERATION_CAP).unwrap() {
            for dir in [Direction::Less, Direction::Greater] {
                let mut a = neighbors(&g, &b, &costs, dir, NeighborScan::Circuit);
                let mut r = neighbors(&g, &b, &costs, dir, NeighborScan::Raw);
                a.sort_by(|x, y| x.basis.cmp(&y.basis));
                r.sort_by(|x, y| x.basis.cmp(&y.basis));
                assert_eq!(a, r);
            }
        }
    }

    #[test]
    fn adjacency_sweep_on_fig1() {
        let (g, costs) = fig1();
        let r = adjacency_esn_sweep(&g, &costs).unwrap();
        assert_eq!(r.extreme_images(), vec![p(6, 2), p(2, 6), p(1, 10)]);
        assert!(r.adjacent_steps);
        let raw = adjacency_esn_sweep_with(&g, &costs, NeighborScan::Raw).unwrap();
        assert_eq!(raw.visited, r.visited);
        // graphic circuits come from tree paths, so only Greedy queries the oracle
        assert!(raw.stats.independence_tests > r.stats.independence_tests);
    }

    #[test]
    fn adjacency_sweep_on_ex28_passes_through_nonextreme_bases() {
        let (g, costs) = ex28();
        let r = adjacency_esn_sweep(&g, &costs).unwrap();
        assert_eq!(r.extreme_images(), vec![p(12, 4), p(4, 12)]);
        assert!(r.visited.iter().any(|v| !v.extreme));
        for w in r.visited.windows(2) {
            assert_eq!(w[0].basis.symmetric_difference_len(&w[1].basis), 2);
        }
    }

    #[test]
    fn start_midway_examples() {
        let (g, costs) = fig1();
        let t2 = Basis::from_indices([1, 2, 3, 4]);
        assert_eq!(costs.image(&t2), p(4, 4));
        let r = start_midway_sweep(&g, &costs, &t2).unwrap();
        assert_eq!(r.extreme_images(), vec![p(2, 6), p(1, 10)]);
        assert_eq!(r.visited[0].interval.lo, Rational::new(1, 2));

        let lex = greedy_basis(&g, &lexicographic_ordering(&costs, Objective::Second));
        assert_eq!(
            start_midway_sweep(&g, &costs, &lex).unwrap().visited,
            adjacency_esn_sweep(&g, &costs).unwrap().visited
        );

        let leftmost = Basis::from_indices([0, 1, 3, 5]);
        let r = start_midway_sweep(&g, &costs, &leftmost).unwrap();
        assert_eq!(r.visited.len(), 1);

        assert_eq!(
            start_midway_sweep(&g, &costs, &Basis::from_indices([0, 1, 2])),
            Err(SolveError::InvalidStart)
        );
    }
}
