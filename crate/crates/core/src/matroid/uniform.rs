use super::{ElementId, IndependenceOracle, MatroidError};

/// `U(r, m)`: every set of at most `r` elements is independent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniformMatroid {
    ground_size: usize,
    rank: usize,
}

impl UniformMatroid {
    pub fn new(ground_size: usize, rank: usize) -> Result<Self, MatroidError> {
        if rank > ground_size {
            return Err(MatroidError::RankTooLarge { rank, ground_size });
        }
        Ok(UniformMatroid { ground_size, rank })
    }
}

impl IndependenceOracle for UniformMatroid {
    fn ground_size(&self) -> usize {
        self.ground_size
    }

    fn rank(&self) -> usize {
        self.rank
    }

    fn independent(&self, set: &[ElementId]) -> bool {
        set.len() <= self.rank
    }
}
