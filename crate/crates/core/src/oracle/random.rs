//! Seeded random instances for the oracle corpus and the benchmarks.

use std::ops::RangeInclusive;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;
use thiserror::Error;

use crate::geometry::BiCost;
use crate::matroid::graphic::DisjointSets;
use crate::matroid::{MatroidError, MatroidInstance};

/// Default integer cost range; negatives and heavy ties included.
pub const DEFAULT_COSTS: RangeInclusive<i64> = -5..=9;

/// Redraws allowed before giving up on a connected graph.
const MAX_DRAWS: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenerateError {
    #[error("invalid generator parameter: {0}")]
    InvalidParameter(String),
    #[error("no connected graph after {0} draws")]
    TooManyDraws(usize),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
}

/// Plain description of a generated matroid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum GeneratedMatroid {
    Graphic {
        vertices: usize,
        edges: Vec<(usize, usize)>,
    },
    Uniform {
        ground_size: usize,
        rank: usize,
    },
    Partition {
        blocks: Vec<usize>,
        capacities: Vec<usize>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratedInstance {
    pub matroid: GeneratedMatroid,
    pub costs: Vec<(i64, i64)>,
}

impl GeneratedInstance {
    pub fn build(&self) -> Result<(MatroidInstance, BiCost), MatroidError> {
        let m = match &self.matroid {
            GeneratedMatroid::Graphic { vertices, edges } => MatroidInstance::graphic(*vertices, edges.clone())?,
            GeneratedMatroid::Uniform { ground_size, rank } => MatroidInstance::uniform(*ground_size, *rank)?,
            GeneratedMatroid::Partition { blocks, capacities } => {
                MatroidInstance::partition(blocks.clone(), capacities.clone())?
            }
        };
        Ok((m, BiCost::from_integers(&self.costs)))
    }

    pub fn ground_size(&self) -> usize {
        self.costs.len()
    }
}

fn random_costs<R: Rng + ?Sized>(rng: &mut R, m: usize, range: &RangeInclusive<i64>) -> Vec<(i64, i64)> {
    (0..m)
        .map(|_| (rng.gen_range(range.clone()), rng.gen_range(range.clone())))
        .collect()
}

fn connected(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut sets = DisjointSets::new(n);
    let merged = edges.iter().filter(|&&(u, v)| sets.union(u, v)).count();
    merged + 1 == n
}

/// `G(n, p)` redrawn until connected, with costs drawn from `costs`.
pub fn random_graphic<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    p: f64,
    costs: &RangeInclusive<i64>,
) -> Result<GeneratedInstance, GenerateError> {
    if n < 2 {
        return Err(GenerateError::InvalidParameter(format!(
            "graphic needs n >= 2, got {n}"
        )));
    }
    if !(p > 0.0 && p <= 1.0) {
        return Err(GenerateError::InvalidParameter(format!(
            "edge probability {p} not in (0, 1]"
        )));
    }
    for _ in 0..MAX_DRAWS {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        if connected(n, &edges) {
            let costs = random_costs(rng, edges.len(), costs);
            return Ok(GeneratedInstance {
                matroid: GeneratedMatroid::Graphic { vertices: n, edges },
                costs,
            });
        }
    }
    Err(GenerateError::TooManyDraws(MAX_DRAWS))
}

pub fn random_uniform<R: Rng + ?Sized>(
    rng: &mut R,
    m: usize,
    r: usize,
    costs: &RangeInclusive<i64>,
) -> Result<GeneratedInstance, GenerateError> {
    if r > m {
        return Err(GenerateError::InvalidParameter(format!(
            "rank {r} exceeds ground size {m}"
        )));
    }
    Ok(GeneratedInstance {
        matroid: GeneratedMatroid::Uniform {
            ground_size: m,
            rank: r,
        },
        costs: random_costs(rng, m, costs),
    })
}

/// `m` elements over `k` nonempty blocks; capacities sum to `r`.
pub fn random_partition<R: Rng + ?Sized>(
    rng: &mut R,
    m: usize,
    k: usize,
    r: usize,
    costs: &RangeInclusive<i64>,
) -> Result<GeneratedInstance, GenerateError> {
    if k == 0 || k > m {
        return Err(GenerateError::InvalidParameter(format!(
            "need 1 <= blocks <= {m}, got {k}"
        )));
    }
    if r > m {
        return Err(GenerateError::InvalidParameter(format!(
            "rank {r} exceeds ground size {m}"
        )));
    }
    let mut blocks: Vec<usize> = (0..m).map(|i| if i < k { i } else { rng.gen_range(0..k) }).collect();
    blocks.shuffle(rng);
    let mut sizes = vec![0usize; k];
    for &b in &blocks {
        sizes[b] += 1;
    }
    let mut capacities = vec![0usize; k];
    for _ in 0..r {
        let open: Vec<usize> = (0..k).filter(|&b| capacities[b] < sizes[b]).collect();
        let b = *open.choose(rng).expect("r <= m leaves room");
        capacities[b] += 1;
    }
    Ok(GeneratedInstance {
        matroid: GeneratedMatroid::Partition { blocks, capacities },
        costs: random_costs(rng, m, costs),
    })
}

/// Oracle corpus graphic draw: `n ∈ [4, 7]`, `p = 0.6`.
pub fn corpus_graphic<R: Rng + ?Sized>(rng: &mut R) -> GeneratedInstance {
    let n = rng.gen_range(4..=7);
    random_graphic(rng, n, 0.6, &DEFAULT_COSTS).expect("valid corpus parameters")
}

/// Oracle corpus uniform or partition draw with `m ∈ [3, 9]`.
pub fn corpus_uniform_or_partition<R: Rng + ?Sized>(rng: &mut R) -> GeneratedInstance {
    let m = rng.gen_range(3..=9);
    let r = rng.gen_range(1..=m);
    if rng.gen_bool(0.5) {
        random_uniform(rng, m, r, &DEFAULT_COSTS)
    } else {
        let k = rng.gen_range(1..=3.min(m));
        random_partition(rng, m, k, r, &DEFAULT_COSTS)
    }
    .expect("valid corpus parameters")
}
