//! Exact bi-objective geometry: element costs, outcome points, slopes and
//! the weight/slope duality `α(λ) = -λ/(1-λ)`, `λ(α) = α/(α-1)`.

mod events;
mod frontier;

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::matroid::{Basis, ElementId};
use crate::rational::Rational;

pub use events::{build_event_schedule, critical_pairs, critical_pairs_among, CriticalPair, Event, EventSchedule};
pub use frontier::{classify_frontier, lower_hull, nondominated_filter, FrontierLabel};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("weight {0} is outside [0, 1]")]
    WeightOutOfRange(Rational),
    #[error("slope is undefined between points with equal first objective")]
    UndefinedSlope,
    #[error("slope {0} is positive and has no weight")]
    PositiveSlope(Rational),
    #[error("inverted weight interval [{lo}, {hi}]")]
    InvertedInterval { lo: Rational, hi: Rational },
    #[error("element {0} has no cost")]
    MissingCost(ElementId),
}

/// An outcome `(f1, f2)`. Ordered lexicographically by `(y1, y2)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Point2 {
    pub y1: Rational,
    pub y2: Rational,
}

impl Point2 {
    pub fn new(y1: impl Into<Rational>, y2: impl Into<Rational>) -> Self {
        Point2 {
            y1: y1.into(),
            y2: y2.into(),
        }
    }

    /// `λ·y1 + (1-λ)·y2`.
    pub fn weighted(&self, lambda: &Rational) -> Rational {
        lambda * &self.y1 + (Rational::one() - lambda) * &self.y2
    }

    /// Componentwise `self ≤ other` with `self ≠ other`.
    pub fn dominates(&self, other: &Point2) -> bool {
        self.y1 <= other.y1 && self.y2 <= other.y2 && self != other
    }
}

impl fmt::Debug for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.y1, self.y2)
    }
}

impl fmt::Display for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

// Points travel as ["p/q", "p/q"] pairs.
impl Serialize for Point2 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        (&self.y1, &self.y2).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Point2 {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let (y1, y2) = <(Rational, Rational)>::deserialize(d)?;
        Ok(Point2 { y1, y2 })
    }
}

/// Per-element cost pairs `c(e) = (c1(e), c2(e))`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BiCost {
    pairs: Vec<(Rational, Rational)>,
}

impl BiCost {
    pub fn new(pairs: Vec<(Rational, Rational)>) -> Self {
        BiCost { pairs }
    }

    pub fn from_integers(pairs: &[(i64, i64)]) -> Self {
        BiCost::new(
            pairs
                .iter()
                .map(|&(a, b)| (Rational::from(a), Rational::from(b)))
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[(Rational, Rational)] {
        &self.pairs
    }

    pub fn c1(&self, e: ElementId) -> &Rational {
        &self.pairs[e.0].0
    }

    pub fn c2(&self, e: ElementId) -> &Rational {
        &self.pairs[e.0].1
    }

    pub fn point(&self, e: ElementId) -> Point2 {
        Point2 {
            y1: self.pairs[e.0].0.clone(),
            y2: self.pairs[e.0].1.clone(),
        }
    }

    /// `c_λ(e)` without range checks.
    pub fn weighted(&self, lambda: &Rational, e: ElementId) -> Rational {
        let (c1, c2) = &self.pairs[e.0];
        lambda * c1 + (Rational::one() - lambda) * c2
    }

    /// Image `f(B) = Σ_{e∈B} c(e)`.
    pub fn image(&self, basis: &Basis) -> Point2 {
        self.image_of(basis.elements())
    }

    pub fn image_of(&self, set: &[ElementId]) -> Point2 {
        let mut y1 = Rational::zero();
        let mut y2 = Rational::zero();
        for &e in set {
            y1 = y1 + &self.pairs[e.0].0;
            y2 = y2 + &self.pairs[e.0].1;
        }
        Point2 { y1, y2 }
    }
}

/// `λ·c1(e) + (1-λ)·c2(e)`.
pub fn weighted_cost(lambda: &Rational, e: ElementId, costs: &BiCost) -> Result<Rational, GeometryError> {
    if !lambda.in_unit_interval() {
        return Err(GeometryError::WeightOutOfRange(lambda.clone()));
    }
    if e.0 >= costs.len() {
        return Err(GeometryError::MissingCost(e));
    }
    Ok(costs.weighted(lambda, e))
}

/// A segment slope: a finite rational or `-∞`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Slope {
    NegInfinity,
    Finite(Rational),
}

impl Slope {
    pub fn finite(value: impl Into<Rational>) -> Self {
        Slope::Finite(value.into())
    }

    /// `λ(α) = α/(α-1)` on `(-∞, 0]`, with `λ(-∞) = 1`.
    pub fn lambda(&self) -> Result<Rational, GeometryError> {
        match self {
            Slope::NegInfinity => Ok(Rational::one()),
            Slope::Finite(a) if a.is_positive() => Err(GeometryError::PositiveSlope(a.clone())),
            Slope::Finite(a) => Ok(a / (a - Rational::one())),
        }
    }
}

impl Ord for Slope {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Slope::NegInfinity, Slope::NegInfinity) => Ordering::Equal,
            (Slope::NegInfinity, Slope::Finite(_)) => Ordering::Less,
            (Slope::Finite(_), Slope::NegInfinity) => Ordering::Greater,
            (Slope::Finite(a), Slope::Finite(b)) => a.cmp(b),
        }
    }
}

impl PartialOrd for Slope {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Slope::NegInfinity => write!(f, "-inf"),
            Slope::Finite(a) => write!(f, "{a}"),
        }
    }
}

/// `(y_to.y2 - y_from.y2) / (y_to.y1 - y_from.y1)`.
pub fn slope_between(y_from: &Point2, y_to: &Point2) -> Result<Slope, GeometryError> {
    let d1 = &y_to.y1 - &y_from.y1;
    if d1.is_zero() {
        return Err(GeometryError::UndefinedSlope);
    }
    Ok(Slope::Finite((&y_to.y2 - &y_from.y2) / d1))
}

/// `α(λ) = -λ/(1-λ)`, with `α(1) = -∞`.
pub fn alpha_of_lambda(lambda: &Rational) -> Result<Slope, GeometryError> {
    if !lambda.in_unit_interval() {
        return Err(GeometryError::WeightOutOfRange(lambda.clone()));
    }
    if *lambda == Rational::one() {
        return Ok(Slope::NegInfinity);
    }
    Ok(Slope::Finite(-lambda / (Rational::one() - lambda)))
}

/// `λ(α) = α/(α-1)`, with `λ(-∞) = 1`.
pub fn lambda_of_alpha(alpha: &Slope) -> Result<Rational, GeometryError> {
    alpha.lambda()
}

/// A closed sub-interval `[lo, hi]` of the weight set `[0, 1]`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl WeightInterval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self, GeometryError> {
        if lo > hi || !lo.in_unit_interval() || !hi.in_unit_interval() {
            return Err(GeometryError::InvertedInterval { lo, hi });
        }
        Ok(WeightInterval { lo, hi })
    }

    pub fn full() -> Self {
        WeightInterval {
            lo: Rational::zero(),
            hi: Rational::one(),
        }
    }

    /// More than a single weight.
    pub fn has_interior(&self) -> bool {
        self.lo < self.hi
    }

    pub fn contains(&self, lambda: &Rational) -> bool {
        &self.lo <= lambda && lambda <= &self.hi
    }
}

impl fmt::Debug for WeightInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// `[λ(α^x), λ(α_x)]` from the minimal slope towards larger `f1` (`alpha_up`,
/// `0` when there is none) and the maximal slope towards smaller `f1`
/// (`alpha_down`, `-∞` when there is none).
pub fn weight_interval(alpha_up: &Slope, alpha_down: &Slope) -> Result<WeightInterval, GeometryError> {
    let lo = alpha_up.lambda()?;
    let hi = alpha_down.lambda()?;
    WeightInterval::new(lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn p(a: i64, b: i64) -> Point2 {
        Point2::new(a, b)
    }

    #[test]
    fn weighted_cost_examples() {
        let costs = BiCost::from_integers(&[(-1, 4), (4, 0)]);
        assert_eq!(weighted_cost(&q(0, 1), ElementId(0), &costs).unwrap(), q(4, 1));
        assert_eq!(weighted_cost(&q(1, 1), ElementId(0), &costs).unwrap(), q(-1, 1));
        assert_eq!(weighted_cost(&q(1, 2), ElementId(1), &costs).unwrap(), q(2, 1));
        assert!(matches!(
            weighted_cost(&q(3, 2), ElementId(0), &costs),
            Err(GeometryError::WeightOutOfRange(_))
        ));
        assert!(matches!(
            weighted_cost(&q(1, 2), ElementId(7), &costs),
            Err(GeometryError::MissingCost(_))
        ));
    }

    #[test]
    fn slope_examples() {
        assert_eq!(slope_between(&p(6, 2), &p(2, 6)).unwrap(), Slope::finite(-1));
        assert_eq!(slope_between(&p(2, 6), &p(1, 10)).unwrap(), Slope::finite(-4));
        assert_eq!(slope_between(&p(0, 0), &p(1, 0)).unwrap(), Slope::finite(0));
        assert_eq!(slope_between(&p(1, 0), &p(1, 5)), Err(GeometryError::UndefinedSlope));
    }

    #[test]
    fn duality_examples() {
        assert_eq!(alpha_of_lambda(&q(1, 2)).unwrap(), Slope::finite(-1));
        assert_eq!(lambda_of_alpha(&Slope::finite(-1)).unwrap(), q(1, 2));
        assert_eq!(alpha_of_lambda(&q(0, 1)).unwrap(), Slope::finite(0));
        assert_eq!(lambda_of_alpha(&Slope::finite(0)).unwrap(), q(0, 1));
        assert_eq!(lambda_of_alpha(&Slope::finite(-4)).unwrap(), q(4, 5));
        assert_eq!(alpha_of_lambda(&q(1, 1)).unwrap(), Slope::NegInfinity);
        assert_eq!(lambda_of_alpha(&Slope::NegInfinity).unwrap(), q(1, 1));
        assert!(lambda_of_alpha(&Slope::finite(1)).is_err());
    }

    #[test]
    fn slope_order_puts_neg_infinity_first() {
        assert!(Slope::NegInfinity < Slope::finite(-1000));
        assert!(Slope::finite(-4) < Slope::finite(-1));
    }

    #[test]
    fn weight_interval_examples() {
        let w = weight_interval(&Slope::finite(0), &Slope::finite(-1)).unwrap();
        assert_eq!(w, WeightInterval::new(q(0, 1), q(1, 2)).unwrap());
        let w = weight_interval(&Slope::finite(-1), &Slope::finite(-4)).unwrap();
        assert_eq!(w, WeightInterval::new(q(1, 2), q(4, 5)).unwrap());
        let w = weight_interval(&Slope::finite(-4), &Slope::NegInfinity).unwrap();
        assert_eq!(w.hi, q(1, 1));
        assert!(matches!(
            weight_interval(&Slope::finite(-4), &Slope::finite(-1)),
            Err(GeometryError::InvertedInterval { .. })
        ));
    }

    #[test]
    fn point_serializes_as_rational_strings() {
        let pt = Point2 {
            y1: q(1, 2),
            y2: q(-3, 1),
        };
        let s = serde_json::to_string(&pt).unwrap();
        assert_eq!(s, r#"["1/2","-3"]"#);
        assert_eq!(serde_json::from_str::<Point2>(&s).unwrap(), pt);
    }
}
