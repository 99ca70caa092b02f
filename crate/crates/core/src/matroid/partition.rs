use super::{ElementId, IndependenceOracle, MatroidError};

/// Each element belongs to one block; a set is independent when no block
/// holds more elements than its capacity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionMatroid {
    blocks: Vec<usize>,
    capacities: Vec<usize>,
    rank: usize,
}

impl PartitionMatroid {
    pub fn new(blocks: Vec<usize>, capacities: Vec<usize>) -> Result<Self, MatroidError> {
        if let Some((e, &b)) = blocks.iter().enumerate().find(|(_, &b)| b >= capacities.len()) {
            return Err(MatroidError::InvalidPartition(format!(
                "element {e} is assigned to block {b}, but only {} capacities are given",
                capacities.len()
            )));
        }
        let mut sizes = vec![0usize; capacities.len()];
        for &b in &blocks {
            sizes[b] += 1;
        }
        let rank = sizes.iter().zip(&capacities).map(|(&s, &c)| s.min(c)).sum();
        Ok(PartitionMatroid {
            blocks,
            capacities,
            rank,
        })
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    pub fn capacities(&self) -> &[usize] {
        &self.capacities
    }
}

impl IndependenceOracle for PartitionMatroid {
    fn ground_size(&self) -> usize {
        self.blocks.len()
    }

    fn rank(&self) -> usize {
        self.rank
    }

    fn independent(&self, set: &[ElementId]) -> bool {
        let mut used = vec![0usize; self.capacities.len()];
        set.iter().all(|e| {
            let b = self.blocks[e.0];
            used[b] += 1;
            used[b] <= self.capacities[b]
        })
    }
}
