use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::BiCost;
use crate::matroid::ElementId;
use crate::rational::Rational;

/// An ordered pair `(e, f)` with `c1(e) > c1(f)` and `c2(e) < c2(f)`, whose
/// weighted costs cross at `lambda ∈ (0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct CriticalPair {
    pub e: ElementId,
    pub f: ElementId,
    pub lambda: Rational,
}

/// All critical pairs over the ground set `0..costs.len()`.
pub fn critical_pairs(costs: &BiCost) -> Vec<CriticalPair> {
    let all: Vec<ElementId> = (0..costs.len()).map(ElementId).collect();
    critical_pairs_among(costs, &all)
}

/// Critical pairs restricted to `elements`, ordered by `(e, f)` position.
pub fn critical_pairs_among(costs: &BiCost, elements: &[ElementId]) -> Vec<CriticalPair> {
    let mut pairs = Vec::new();
    for &e in elements {
        let (c1e, c2e) = (costs.c1(e), costs.c2(e));
        for &f in elements {
            let (c1f, c2f) = (costs.c1(f), costs.c2(f));
            if c1e > c1f && c2e < c2f {
                let rise = c2f - c2e;
                let run = c1e - c1f;
                let lambda = &rise / (&rise + run);
                pairs.push(CriticalPair { e, f, lambda });
            }
        }
    }
    pairs
}

/// One event value `λ` with `E_λ`, the union of both elements of every pair
/// crossing at `λ` (sorted by id).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Event {
    pub lambda: Rational,
    pub elements: Vec<ElementId>,
}

/// Distinct crossing values in increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize)]
pub struct EventSchedule {
    pub events: Vec<Event>,
}

impl EventSchedule {
    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    pub fn lambdas(&self) -> impl Iterator<Item = &Rational> {
        self.events.iter().map(|ev| &ev.lambda)
    }

    /// `Σ |E_λ|`.
    pub fn total_elements(&self) -> usize {
        self.events.iter().map(|ev| ev.elements.len()).sum()
    }
}

pub fn build_event_schedule(pairs: &[CriticalPair]) -> EventSchedule {
    let mut grouped: BTreeMap<&Rational, BTreeSet<ElementId>> = BTreeMap::new();
    for pair in pairs {
        let set = grouped.entry(&pair.lambda).or_default();
        set.insert(pair.e);
        set.insert(pair.f);
    }
    EventSchedule {
        events: grouped
            .into_iter()
            .map(|(lambda, elements)| Event {
                lambda: lambda.clone(),
                elements: elements.into_iter().collect(),
            })
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig1_costs() -> BiCost {
        BiCost::from_integers(&[(-1, 4), (0, 0), (0, 0), (0, 4), (4, 0), (2, 2)])
    }

    #[test]
    fn symmetric_costs_cross_at_half() {
        let costs = BiCost::from_integers(&[(4, 0), (0, 4)]);
        let pairs = critical_pairs(&costs);
        assert_eq!(pairs.len(), 1);
        assert_eq!((pairs[0].e, pairs[0].f), (ElementId(0), ElementId(1)));
        assert_eq!(pairs[0].lambda, Rational::new(1, 2));
    }

    #[test]
    fn fig1_v3v5_against_v1v2() {
        let pairs = critical_pairs(&fig1_costs());
        let pair = pairs
            .iter()
            .find(|p| p.e == ElementId(4) && p.f == ElementId(0))
            .unwrap();
        assert_eq!(pair.lambda, Rational::new(4, 9));
    }

    #[test]
    fn dominated_pair_is_not_critical() {
        let costs = BiCost::from_integers(&[(1, 1), (0, 0)]);
        assert!(critical_pairs(&costs).is_empty());
        assert!(build_event_schedule(&[]).is_empty());
    }

    #[test]
    fn fig1_schedule() {
        let schedule = build_event_schedule(&critical_pairs(&fig1_costs()));
        let lambdas: Vec<Rational> = schedule.lambdas().cloned().collect();
        assert_eq!(
            lambdas,
            vec![
                Rational::new(2, 5),
                Rational::new(4, 9),
                Rational::new(1, 2),
                Rational::new(4, 5)
            ]
        );
        let half = &schedule.events[2];
        assert_eq!(half.elements, vec![ElementId(3), ElementId(4), ElementId(5)]);
    }
}
