use crate::geometry::{slope_between, BiCost, Point2};
use crate::matroid::{Basis, CountingOracle, MatroidInstance};

use super::{
    check_costs, greedy_basis, lex_ordering, lexicographic_ordering, FrontierReport, Objective, SolveError,
    SolverStats, Tiebreak,
};

/// Dichotomic search over the weighted-sum problem.
///
/// Starts from both lexicographic optima and, for each pair of adjacent known
/// extreme points, probes the weight at which they tie. Greedy on `S↑_λ`
/// returns the optimum of least `f1`, so a probe either lands strictly below
/// the connecting segment (a new extreme point) or on the left endpoint.
pub fn dichotomic_search(instance: &MatroidInstance, costs: &BiCost) -> Result<FrontierReport, SolveError> {
    check_costs(instance, costs)?;
    let oracle = CountingOracle::new(instance);
    let mut probes = 0u64;
    let mut solve = |ordering| {
        probes += 1;
        let b = greedy_basis(&oracle, &ordering);
        let y = costs.image(&b);
        (b, y)
    };

    let right = solve(lexicographic_ordering(costs, Objective::Second));
    let left = solve(lexicographic_ordering(costs, Objective::First));

    // Points are kept in λ order: rightmost (small f2) first.
    let mut chain: Vec<(Basis, Point2)> = vec![right.clone()];
    if left.1 != right.1 {
        let mut stack = vec![(right, left.clone())];
        let mut found = Vec::new();
        while let Some((r, l)) = stack.pop() {
            let lambda = slope_between(&r.1, &l.1)?.lambda()?;
            let probe = solve(lex_ordering(costs, &lambda, Tiebreak::C1Ascending)?);
            if probe.1.weighted(&lambda) < l.1.weighted(&lambda) {
                found.push(probe.clone());
                stack.push((r, probe.clone()));
                stack.push((probe, l));
            }
        }
        found.sort_by(|a, b| b.1.y1.cmp(&a.1.y1));
        chain.extend(found);
        chain.push(left);
    }

    let stats = SolverStats {
        iterations: probes,
        independence_tests: oracle.calls(),
    };
    Ok(FrontierReport::from_chain(chain, stats)?)
}
