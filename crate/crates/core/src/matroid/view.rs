use std::sync::Arc;

use super::{ElementId, IndependenceOracle, MatroidError, MatroidInstance};

/// Deletion/contraction minor of a concrete base instance.
///
/// Element ids are those of the base. Deleted and contracted elements stay in
/// the id space but are unavailable: no independent set of the view contains
/// them. A set `I` is independent in the view iff it avoids both sets and
/// `I ∪ contracted` is independent in the base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatroidView {
    base: Arc<MatroidInstance>,
    deleted: Vec<bool>,
    contracted: Vec<ElementId>,
    removed: Vec<bool>,
    rank: usize,
}

impl MatroidView {
    pub fn base(&self) -> &MatroidInstance {
        &self.base
    }

    pub fn deleted(&self) -> Vec<ElementId> {
        self.deleted
            .iter()
            .enumerate()
            .filter(|(_, &d)| d)
            .map(|(i, _)| ElementId(i))
            .collect()
    }

    pub fn contracted(&self) -> &[ElementId] {
        &self.contracted
    }

    pub fn ground_size(&self) -> usize {
        self.removed.len()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_available(&self, e: ElementId) -> bool {
        !self.removed[e.0]
    }

    fn with_contracted(&self, set: &[ElementId]) -> Vec<ElementId> {
        let mut full = Vec::with_capacity(set.len() + self.contracted.len());
        full.extend_from_slice(set);
        full.extend_from_slice(&self.contracted);
        full
    }

    pub fn independent(&self, set: &[ElementId]) -> bool {
        set.iter().all(|&e| self.is_available(e)) && self.base.independent(&self.with_contracted(set))
    }

    pub fn circuit_hook(&self, basis: &[ElementId], f: ElementId) -> Option<Vec<ElementId>> {
        let circuit = self.base.circuit_hook(&self.with_contracted(basis), f)?;
        Some(
            circuit
                .into_iter()
                .filter(|e| self.contracted.binary_search(e).is_err())
                .collect(),
        )
    }
}

impl IndependenceOracle for MatroidView {
    fn ground_size(&self) -> usize {
        MatroidView::ground_size(self)
    }

    fn rank(&self) -> usize {
        MatroidView::rank(self)
    }

    fn independent(&self, set: &[ElementId]) -> bool {
        MatroidView::independent(self, set)
    }

    fn is_available(&self, e: ElementId) -> bool {
        MatroidView::is_available(self, e)
    }

    fn circuit_hook(&self, basis: &[ElementId], f: ElementId) -> Option<Vec<ElementId>> {
        MatroidView::circuit_hook(self, basis, f)
    }
}

pub(super) fn restrict_contract(
    instance: &MatroidInstance,
    delete: &[ElementId],
    contract: &[ElementId],
) -> Result<MatroidView, MatroidError> {
    let (base, mut deleted, mut contracted) = match instance {
        MatroidInstance::View(v) => (v.base.clone(), v.deleted.clone(), v.contracted.clone()),
        other => (Arc::new(other.clone()), vec![false; other.ground_size()], Vec::new()),
    };

    for &e in delete {
        if contracted.contains(&e) || contract.contains(&e) {
            return Err(MatroidError::OverlappingMinor(e));
        }
    }
    for &e in contract {
        if contracted.contains(&e) {
            return Err(MatroidError::AlreadyContracted(e));
        }
        if deleted[e.0] {
            return Err(MatroidError::OverlappingMinor(e));
        }
    }

    for &e in delete {
        deleted[e.0] = true;
    }
    contracted.extend_from_slice(contract);
    contracted.sort_unstable();
    contracted.dedup();
    if !base.independent(&contracted) {
        return Err(MatroidError::DependentContraction);
    }

    let removed: Vec<bool> = (0..base.ground_size())
        .map(|i| deleted[i] || contracted.binary_search(&ElementId(i)).is_ok())
        .collect();

    // Extend the contracted set greedily inside E \ deleted; what it gains is
    // the rank of the minor.
    let mut grown = contracted.clone();
    for (i, _) in removed.iter().enumerate().filter(|(_, r)| !**r) {
        grown.push(ElementId(i));
        if !base.independent(&grown) {
            grown.pop();
        }
    }
    let rank = grown.len() - contracted.len();

    Ok(MatroidView {
        base,
        deleted,
        contracted,
        removed,
        rank,
    })
}
