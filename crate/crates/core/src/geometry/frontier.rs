use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::Point2;
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FrontierLabel {
    Dominated,
    NondominatedUnsupported,
    SupportedNonextreme,
    ExtremeSupported,
}

/// Points not dominated by any other input point; duplicates collapse.
pub fn nondominated_filter(points: &[Point2]) -> BTreeSet<Point2> {
    nondominated_sorted(points).into_iter().collect()
}

/// Nondominated points sorted by `y1` ascending (so `y2` strictly descending).
fn nondominated_sorted(points: &[Point2]) -> Vec<Point2> {
    let unique: BTreeSet<&Point2> = points.iter().collect();
    let mut kept: Vec<Point2> = Vec::new();
    for p in unique {
        if kept.last().is_none_or(|last| p.y2 < last.y2) {
            kept.push(p.clone());
        }
    }
    kept
}

/// Twice the signed area of the triangle `(a, b, c)`.
fn cross(a: &Point2, b: &Point2, c: &Point2) -> Rational {
    (&b.y1 - &a.y1) * (&c.y2 - &a.y2) - (&b.y2 - &a.y2) * (&c.y1 - &a.y1)
}

/// Vertices of the lower-left boundary of `conv(points) + R²≥0`, sorted by
/// `y1` ascending. Collinear boundary points are not vertices.
pub fn lower_hull(points: &[Point2]) -> Vec<Point2> {
    let mut hull: Vec<Point2> = Vec::new();
    for p in nondominated_sorted(points) {
        while hull.len() >= 2 && !cross(&hull[hull.len() - 2], &hull[hull.len() - 1], &p).is_positive() {
            hull.pop();
        }
        hull.push(p);
    }
    hull
}

/// Labels each input point (equal points get equal labels).
pub fn classify_frontier(points: &[Point2]) -> Vec<FrontierLabel> {
    let nondominated = nondominated_filter(points);
    let hull = lower_hull(points);
    let extreme: BTreeSet<&Point2> = hull.iter().collect();

    points
        .iter()
        .map(|p| {
            if !nondominated.contains(p) {
                FrontierLabel::Dominated
            } else if extreme.contains(p) {
                FrontierLabel::ExtremeSupported
            } else {
                // Nondominated points lie within the y1-range of the hull.
                let right = hull.partition_point(|h| h.y1 < p.y1);
                let (a, b) = (&hull[right - 1], &hull[right]);
                if cross(a, b, p).is_zero() {
                    FrontierLabel::SupportedNonextreme
                } else {
                    FrontierLabel::NondominatedUnsupported
                }
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(v: &[(i64, i64)]) -> Vec<Point2> {
        v.iter().map(|&(a, b)| Point2::new(a, b)).collect()
    }

    fn fig1_images() -> Vec<Point2> {
        pts(&[(6, 2), (4, 4), (2, 6), (1, 10), (1, 10), (5, 6), (5, 6), (3, 8), (3, 8)])
    }

    #[test]
    fn fig1_nondominated() {
        let nd = nondominated_filter(&fig1_images());
        assert_eq!(nd, pts(&[(1, 10), (2, 6), (4, 4), (6, 2)]).into_iter().collect());
    }

    #[test]
    fn trivial_filters() {
        assert_eq!(nondominated_filter(&pts(&[(3, 3)])).len(), 1);
        assert_eq!(
            nondominated_filter(&pts(&[(0, 0), (0, 0)])),
            pts(&[(0, 0)]).into_iter().collect()
        );
    }

    #[test]
    fn fig1_labels() {
        use FrontierLabel::*;
        let labels = classify_frontier(&fig1_images());
        assert_eq!(
            labels,
            vec![
                ExtremeSupported,
                SupportedNonextreme,
                ExtremeSupported,
                ExtremeSupported,
                ExtremeSupported,
                Dominated,
                Dominated,
                Dominated,
                Dominated
            ]
        );
    }

    #[test]
    fn collinear_frontier_has_two_vertices() {
        use FrontierLabel::*;
        let images = pts(&[(12, 4), (10, 6), (8, 8), (6, 10), (4, 12)]);
        assert_eq!(
            classify_frontier(&images),
            vec![
                ExtremeSupported,
                SupportedNonextreme,
                SupportedNonextreme,
                SupportedNonextreme,
                ExtremeSupported
            ]
        );
    }

    #[test]
    fn unsupported_point_above_hull() {
        use FrontierLabel::*;
        let images = pts(&[(0, 10), (10, 0), (6, 6)]);
        assert_eq!(
            classify_frontier(&images),
            vec![ExtremeSupported, ExtremeSupported, NondominatedUnsupported]
        );
    }

    #[test]
    fn single_point_is_extreme() {
        assert_eq!(
            classify_frontier(&pts(&[(2, 2)])),
            vec![FrontierLabel::ExtremeSupported]
        );
        assert_eq!(classify_frontier(&[]), vec![]);
    }
}
