use itertools::Itertools;

use super::{Basis, ElementId, IndependenceOracle, MatroidError, MatroidInstance};

/// Default limit on the number of candidate sets `C(m, r)` examined.
pub const DEFAULT_ENUMERATION_CAP: u128 = 1_000_000;

fn binomial(n: usize, k: usize) -> u128 {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
        if acc == u128::MAX {
            break;
        }
    }
    acc
}

pub(super) fn enumerate_bases(instance: &MatroidInstance, cap: u128) -> Result<Vec<Basis>, MatroidError> {
    let available: Vec<ElementId> = instance.available_elements();
    let rank = instance.rank();
    let candidates = binomial(available.len(), rank);
    if candidates > cap {
        return Err(MatroidError::EnumerationCap { candidates, cap });
    }
    Ok(available
        .into_iter()
        .combinations(rank)
        .filter(|set| instance.independent(set))
        .map(Basis::new)
        .collect())
}
