use std::ops::RangeInclusive;

use esn_core::oracle::random::{
    random_graphic, random_partition, random_uniform, GenerateError, GeneratedMatroid, DEFAULT_COSTS,
};
use esn_core::Rational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::instance::{InstanceFile, MatroidSpec, FORMAT_VERSION};

/// Size parameters per family.
#[derive(Clone, Debug, PartialEq)]
pub enum Family {
    /// `G(n, p)`, redrawn until connected.
    Graphic {
        n: usize,
        p: f64,
    },
    Uniform {
        m: usize,
        rank: usize,
    },
    Partition {
        m: usize,
        blocks: usize,
        rank: usize,
    },
}

impl Family {
    /// Graphic family with expected average degree `degree`.
    pub fn graphic_with_degree(n: usize, degree: f64) -> Family {
        let p = if n > 1 { (degree / (n - 1) as f64).min(1.0) } else { 1.0 };
        Family::Graphic { n, p }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::Graphic { .. } => "graphic",
            Family::Uniform { .. } => "uniform",
            Family::Partition { .. } => "partition",
        }
    }

    /// `n` for graphic, `m` otherwise.
    pub fn size(&self) -> usize {
        match self {
            Family::Graphic { n, .. } => *n,
            Family::Uniform { m, .. } | Family::Partition { m, .. } => *m,
        }
    }
}

/// Deterministic instance for `(seed, family)`.
pub fn generate_instance(
    seed: u64,
    family: &Family,
    costs: &RangeInclusive<i64>,
) -> Result<InstanceFile, GenerateError> {
    if costs.is_empty() {
        return Err(GenerateError::InvalidParameter(format!("empty cost range {costs:?}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let generated = match *family {
        Family::Graphic { n, p } => random_graphic(&mut rng, n, p, costs)?,
        Family::Uniform { m, rank } => random_uniform(&mut rng, m, rank, costs)?,
        Family::Partition { m, blocks, rank } => random_partition(&mut rng, m, blocks, rank, costs)?,
    };
    let matroid = match generated.matroid {
        GeneratedMatroid::Graphic { vertices, edges } => MatroidSpec::Graphic { vertices, edges },
        GeneratedMatroid::Uniform { ground_size, rank } => MatroidSpec::Uniform { ground_size, rank },
        GeneratedMatroid::Partition { blocks, capacities } => MatroidSpec::Partition { blocks, capacities },
    };
    Ok(InstanceFile {
        version: FORMAT_VERSION,
        matroid,
        costs: generated
            .costs
            .into_iter()
            .map(|(a, b)| (Rational::from(a), Rational::from(b)))
            .collect(),
    })
}

pub fn default_costs() -> RangeInclusive<i64> {
    DEFAULT_COSTS
}

#[cfg(test)]
mod tests {
    use super::*;
    use esn_core::matroid::DEFAULT_ENUMERATION_CAP;

    #[test]
    fn same_seed_same_bytes() {
        let fam = Family::Graphic { n: 5, p: 0.6 };
        let a = generate_instance(1, &fam, &default_costs()).unwrap().to_json();
        let b = generate_instance(1, &fam, &default_costs()).unwrap().to_json();
        assert_eq!(a, b);
        InstanceFile::from_json(&a).unwrap().build().unwrap();
    }

    #[test]
    fn uniform_has_56_bases() {
        let file = generate_instance(2, &Family::Uniform { m: 8, rank: 3 }, &default_costs()).unwrap();
        let (g, _) = file.build().unwrap();
        assert_eq!(g.enumerate_bases(DEFAULT_ENUMERATION_CAP).unwrap().len(), 56);
    }

    #[test]
    fn partition_is_feasible() {
        let file = generate_instance(
            3,
            &Family::Partition {
                m: 9,
                blocks: 3,
                rank: 4,
            },
            &default_costs(),
        )
        .unwrap();
        let MatroidSpec::Partition { capacities, .. } = &file.matroid else {
            panic!("partition expected")
        };
        assert_eq!(capacities.iter().sum::<usize>(), 4);
        let (g, _) = file.build().unwrap();
        assert_eq!(g.rank_of(), 4);
    }

    #[test]
    fn infeasible_parameters() {
        assert!(generate_instance(1, &Family::Uniform { m: 3, rank: 4 }, &default_costs()).is_err());
        assert!(generate_instance(1, &Family::Graphic { n: 5, p: 0.0 }, &default_costs()).is_err());
        assert_eq!(Family::graphic_with_degree(4, 6.0), Family::Graphic { n: 4, p: 1.0 });
    }
}
