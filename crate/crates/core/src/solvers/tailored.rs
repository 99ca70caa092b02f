use crate::geometry::{build_event_schedule, critical_pairs_among, BiCost, EventSchedule, WeightInterval};
use crate::matroid::{Basis, CountingOracle, ElementId, IndependenceOracle, MatroidInstance};
use crate::rational::Rational;

use super::{
    check_costs, greedy_basis, lexicographic_ordering, sorted_by_weight, FrontierReport, Objective, SolveError,
    SolverStats, Tiebreak,
};

/// Every intermediate basis of the event sweep: `bases[0]` is the
/// lexicographic `(f2, f1)` optimum and `bases[k]` the basis after event `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TailoredTrace {
    pub schedule: EventSchedule,
    pub bases: Vec<Basis>,
    pub stats: SolverStats,
}

impl TailoredTrace {
    /// `λ^k` for `k = 0..=s`, with `λ^0 = 0`.
    pub fn lambda(&self, k: usize) -> Rational {
        if k == 0 {
            Rational::zero()
        } else {
            self.schedule.events[k - 1].lambda.clone()
        }
    }
}

/// Event-driven sweep: at each crossing value `λ`, drop `E_λ` from the
/// current basis and re-add its elements in `(c_λ, c1)` order while they stay
/// independent.
pub fn tailored_esn_trace(instance: &MatroidInstance, costs: &BiCost) -> Result<TailoredTrace, SolveError> {
    check_costs(instance, costs)?;
    let oracle = CountingOracle::new(instance);
    let rank = oracle.rank();
    let schedule = build_event_schedule(&critical_pairs_among(costs, &instance.available_elements()));

    let mut bases = Vec::with_capacity(schedule.len() + 1);
    bases.push(greedy_basis(&oracle, &lexicographic_ordering(costs, Objective::Second)));

    for event in &schedule.events {
        let previous = bases.last().expect("B^0 pushed");
        let mut current: Vec<ElementId> = previous
            .elements()
            .iter()
            .copied()
            .filter(|e| event.elements.binary_search(e).is_err())
            .collect();
        for e in sorted_by_weight(costs, &event.lambda, Tiebreak::C1Ascending, event.elements.clone()) {
            if current.len() == rank {
                break;
            }
            current.push(e);
            if !oracle.independent(&current) {
                current.pop();
            }
        }
        bases.push(Basis::new(current));
    }

    Ok(TailoredTrace {
        stats: SolverStats {
            iterations: schedule.len() as u64,
            independence_tests: oracle.calls(),
        },
        schedule,
        bases,
    })
}

/// `Y_ESN` via the event sweep. `B^k` is optimal on `[λ^k, λ^{k+1}]`;
/// consecutive bases with equal images are merged into one point.
pub fn tailored_esn_sweep(instance: &MatroidInstance, costs: &BiCost) -> Result<FrontierReport, SolveError> {
    let trace = tailored_esn_trace(instance, costs)?;
    let mut report = FrontierReport {
        stats: trace.stats,
        ..FrontierReport::default()
    };
    let s = trace.schedule.len();
    for (k, basis) in trace.bases.iter().enumerate() {
        let hi = if k == s { Rational::one() } else { trace.lambda(k + 1) };
        let interval = WeightInterval::new(trace.lambda(k), hi)?;
        report.push(basis.clone(), costs.image(basis), interval);
    }
    Ok(report)
}
