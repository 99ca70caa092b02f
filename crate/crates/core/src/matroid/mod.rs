//! Matroids behind a uniform independence-oracle interface.
//!
//! A [`MatroidInstance`] is one of a few concrete kinds (graphic, uniform,
//! partition) or a [`MatroidView`] that deletes and contracts elements of a
//! base instance. Instances are immutable; every query is read-only, so an
//! instance can be shared across threads freely.

mod enumerate;
pub(crate) mod graphic;
mod partition;
mod uniform;
mod view;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use enumerate::DEFAULT_ENUMERATION_CAP;
pub use graphic::GraphicMatroid;
pub use partition::PartitionMatroid;
pub use uniform::UniformMatroid;
pub use view::MatroidView;

/// Index of a ground-set element, in `[0, m)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ElementId(pub usize);

impl ElementId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Debug for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A basis, stored as a sorted list of distinct element ids.
///
/// The derived ordering is lexicographic on the sorted ids; solvers use it as
/// the final tie-break between bases with equal images.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Basis {
    elements: Vec<ElementId>,
}

impl Basis {
    pub fn new(elements: impl IntoIterator<Item = ElementId>) -> Self {
        let mut elements: Vec<ElementId> = elements.into_iter().collect();
        elements.sort_unstable();
        elements.dedup();
        Basis { elements }
    }

    pub fn from_indices(indices: impl IntoIterator<Item = usize>) -> Self {
        Basis::new(indices.into_iter().map(ElementId))
    }

    pub fn elements(&self) -> &[ElementId] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, e: ElementId) -> bool {
        self.elements.binary_search(&e).is_ok()
    }

    /// `(self - removed) + added`.
    pub fn exchange(&self, removed: ElementId, added: ElementId) -> Basis {
        let mut elements: Vec<ElementId> = self.elements.iter().copied().filter(|&x| x != removed).collect();
        if let Err(pos) = elements.binary_search(&added) {
            elements.insert(pos, added);
        }
        Basis { elements }
    }

    /// Elements of `self` that are not in `other`.
    pub fn difference(&self, other: &Basis) -> Vec<ElementId> {
        self.elements.iter().copied().filter(|&e| !other.contains(e)).collect()
    }

    /// Size of the symmetric difference.
    pub fn symmetric_difference_len(&self, other: &Basis) -> usize {
        self.difference(other).len() + other.difference(self).len()
    }
}

impl fmt::Debug for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.elements.iter()).finish()
    }
}

/// A minimal dependent set.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Circuit {
    elements: Vec<ElementId>,
}

impl Circuit {
    pub(crate) fn new(mut elements: Vec<ElementId>) -> Self {
        elements.sort_unstable();
        elements.dedup();
        Circuit { elements }
    }

    pub fn elements(&self) -> &[ElementId] {
        &self.elements
    }

    pub fn contains(&self, e: ElementId) -> bool {
        self.elements.binary_search(&e).is_ok()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatroidError {
    #[error("element {id} is out of range for a ground set of size {ground_size}")]
    OutOfRange { id: usize, ground_size: usize },
    #[error("element {0} is already in the basis")]
    ElementInBasis(ElementId),
    #[error("element {0} was removed by the view")]
    Unavailable(ElementId),
    #[error("the given set is not a basis")]
    NotABasis,
    #[error("contraction set is dependent")]
    DependentContraction,
    #[error("deleted and contracted sets overlap at element {0}")]
    OverlappingMinor(ElementId),
    #[error("element {0} was already contracted by this view")]
    AlreadyContracted(ElementId),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("rank {rank} exceeds ground set size {ground_size}")]
    RankTooLarge { rank: usize, ground_size: usize },
    #[error("enumeration needs {candidates} candidate sets, above the cap of {cap}")]
    EnumerationCap { candidates: u128, cap: u128 },
}

impl MatroidError {
    /// True for errors caused by a configured resource limit rather than by
    /// malformed input.
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, MatroidError::EnumerationCap { .. })
    }
}

/// Query interface shared by concrete matroids, views and counting wrappers.
///
/// `independent` takes ids that are already known to be in range; public
/// entry points on [`MatroidInstance`] validate before delegating here.
pub trait IndependenceOracle {
    fn ground_size(&self) -> usize;

    fn rank(&self) -> usize;

    fn independent(&self, set: &[ElementId]) -> bool;

    /// Whether `e` may appear in an independent set at all. Views report
    /// deleted and contracted elements as unavailable.
    fn is_available(&self, _e: ElementId) -> bool {
        true
    }

    /// Kind-specific fast route to the fundamental circuit of `basis + f`.
    /// `None` means the caller should use the generic elimination route.
    fn circuit_hook(&self, _basis: &[ElementId], _f: ElementId) -> Option<Vec<ElementId>> {
        None
    }
}

/// Counts independence queries issued by a solver run.
pub struct CountingOracle<'a, M: ?Sized> {
    inner: &'a M,
    calls: std::cell::Cell<u64>,
}

impl<'a, M: IndependenceOracle + ?Sized> CountingOracle<'a, M> {
    pub fn new(inner: &'a M) -> Self {
        CountingOracle {
            inner,
            calls: std::cell::Cell::new(0),
        }
    }

    pub fn calls(&self) -> u64 {
        self.calls.get()
    }
}

impl<M: IndependenceOracle + ?Sized> IndependenceOracle for CountingOracle<'_, M> {
    fn ground_size(&self) -> usize {
        self.inner.ground_size()
    }

    fn rank(&self) -> usize {
        self.inner.rank()
    }

    fn independent(&self, set: &[ElementId]) -> bool {
        self.calls.set(self.calls.get() + 1);
        self.inner.independent(set)
    }

    fn is_available(&self, e: ElementId) -> bool {
        self.inner.is_available(e)
    }

    fn circuit_hook(&self, basis: &[ElementId], f: ElementId) -> Option<Vec<ElementId>> {
        self.inner.circuit_hook(basis, f)
    }
}

/// Fundamental circuit of `basis + f`.
///
/// Uses the oracle's hook when it has one; otherwise removes basis elements
/// one at a time as long as the remainder plus `f` stays dependent.
pub fn circuit_of<M: IndependenceOracle + ?Sized>(oracle: &M, basis: &[ElementId], f: ElementId) -> Circuit {
    if let Some(circuit) = oracle.circuit_hook(basis, f) {
        return Circuit::new(circuit);
    }
    let mut current: Vec<ElementId> = basis.to_vec();
    current.push(f);
    for &e in basis {
        let trial: Vec<ElementId> = current.iter().copied().filter(|&x| x != e).collect();
        if !oracle.independent(&trial) {
            current = trial;
        }
    }
    Circuit::new(current)
}

/// A matroid over the ground set `{0, .., m-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatroidInstance {
    Graphic(GraphicMatroid),
    Uniform(UniformMatroid),
    Partition(PartitionMatroid),
    View(MatroidView),
}

impl MatroidInstance {
    pub fn graphic(vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self, MatroidError> {
        GraphicMatroid::new(vertices, edges).map(MatroidInstance::Graphic)
    }

    pub fn uniform(ground_size: usize, rank: usize) -> Result<Self, MatroidError> {
        UniformMatroid::new(ground_size, rank).map(MatroidInstance::Uniform)
    }

    pub fn partition(blocks: Vec<usize>, capacities: Vec<usize>) -> Result<Self, MatroidError> {
        PartitionMatroid::new(blocks, capacities).map(MatroidInstance::Partition)
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            MatroidInstance::Graphic(_) => "graphic",
            MatroidInstance::Uniform(_) => "uniform",
            MatroidInstance::Partition(_) => "partition",
            MatroidInstance::View(_) => "view",
        }
    }

    fn check_ids(&self, set: &[ElementId]) -> Result<(), MatroidError> {
        let m = self.ground_size();
        match set.iter().find(|e| e.0 >= m) {
            Some(e) => Err(MatroidError::OutOfRange {
                id: e.0,
                ground_size: m,
            }),
            None => Ok(()),
        }
    }

    /// Independence test with range checking.
    pub fn is_independent(&self, set: &[ElementId]) -> Result<bool, MatroidError> {
        self.check_ids(set)?;
        let mut set = set.to_vec();
        set.sort_unstable();
        set.dedup();
        Ok(self.independent(&set))
    }

    pub fn rank_of(&self) -> usize {
        self.rank()
    }

    /// Elements that can occur in some independent set.
    pub fn available_elements(&self) -> Vec<ElementId> {
        (0..self.ground_size())
            .map(ElementId)
            .filter(|&e| self.is_available(e))
            .collect()
    }

    /// True if `set` is an independent set of size `rank`.
    pub fn is_basis(&self, set: &[ElementId]) -> bool {
        set.len() == self.rank() && self.is_independent(set).unwrap_or(false)
    }

    /// The unique circuit in `b + f`.
    pub fn fundamental_circuit(&self, b: &Basis, f: ElementId) -> Result<Circuit, MatroidError> {
        self.check_ids(b.elements())?;
        self.check_ids(&[f])?;
        if b.contains(f) {
            return Err(MatroidError::ElementInBasis(f));
        }
        if !self.is_basis(b.elements()) {
            return Err(MatroidError::NotABasis);
        }
        if !self.is_available(f) {
            return Err(MatroidError::Unavailable(f));
        }
        Ok(circuit_of(self, b.elements(), f))
    }

    /// All bases in lexicographic order of their sorted element lists.
    pub fn enumerate_bases(&self, cap: u128) -> Result<Vec<Basis>, MatroidError> {
        enumerate::enumerate_bases(self, cap)
    }

    /// Minor that deletes `delete` and contracts `contract`.
    ///
    /// Views never nest: applying this to a view folds the new sets into the
    /// existing deleted/contracted sets of the same base.
    pub fn restrict_contract(
        &self,
        delete: &[ElementId],
        contract: &[ElementId],
    ) -> Result<MatroidInstance, MatroidError> {
        self.check_ids(delete)?;
        self.check_ids(contract)?;
        view::restrict_contract(self, delete, contract).map(MatroidInstance::View)
    }
}

impl IndependenceOracle for MatroidInstance {
    fn ground_size(&self) -> usize {
        match self {
            MatroidInstance::Graphic(g) => g.ground_size(),
            MatroidInstance::Uniform(u) => u.ground_size(),
            MatroidInstance::Partition(p) => p.ground_size(),
            MatroidInstance::View(v) => v.ground_size(),
        }
    }

    fn rank(&self) -> usize {
        match self {
            MatroidInstance::Graphic(g) => g.rank(),
            MatroidInstance::Uniform(u) => u.rank(),
            MatroidInstance::Partition(p) => p.rank(),
            MatroidInstance::View(v) => v.rank(),
        }
    }

    fn independent(&self, set: &[ElementId]) -> bool {
        match self {
            MatroidInstance::Graphic(g) => g.independent(set),
            MatroidInstance::Uniform(u) => u.independent(set),
            MatroidInstance::Partition(p) => p.independent(set),
            MatroidInstance::View(v) => v.independent(set),
        }
    }

    fn is_available(&self, e: ElementId) -> bool {
        match self {
            MatroidInstance::View(v) => v.is_available(e),
            _ => true,
        }
    }

    fn circuit_hook(&self, basis: &[ElementId], f: ElementId) -> Option<Vec<ElementId>> {
        match self {
            MatroidInstance::Graphic(g) => g.circuit_hook(basis, f),
            MatroidInstance::View(v) => v.circuit_hook(basis, f),
            _ => None,
        }
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    /// Edges v1v2, v1v3, v2v3, v3v4, v3v5, v4v5 on vertices v1..v5 (0-based).
    pub fn fig1_graph() -> MatroidInstance {
        MatroidInstance::graphic(5, vec![(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap()
    }

    pub fn ids(v: &[usize]) -> Vec<ElementId> {
        v.iter().copied().map(ElementId).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    const V1V2: usize = 0;
    const V1V3: usize = 1;
    const V2V3: usize = 2;
    const V3V4: usize = 3;
    const V3V5: usize = 4;
    const V4V5: usize = 5;

    #[test]
    fn triangle_is_dependent() {
        let g = fig1_graph();
        assert!(!g.is_independent(&ids(&[V1V2, V1V3, V2V3])).unwrap());
    }

    #[test]
    fn empty_set_is_independent_everywhere() {
        let instances = [
            fig1_graph(),
            MatroidInstance::uniform(4, 2).unwrap(),
            MatroidInstance::partition(vec![0, 0, 1], vec![1, 1]).unwrap(),
        ];
        for m in &instances {
            assert!(m.is_independent(&[]).unwrap());
        }
    }

    #[test]
    fn uniform_rejects_oversized_sets() {
        let u = MatroidInstance::uniform(4, 2).unwrap();
        assert!(!u.is_independent(&ids(&[0, 1, 2])).unwrap());
        assert!(u.is_independent(&ids(&[0, 3])).unwrap());
    }

    #[test]
    fn out_of_range_ids_are_input_errors() {
        let u = MatroidInstance::uniform(4, 2).unwrap();
        assert_eq!(
            u.is_independent(&ids(&[4])),
            Err(MatroidError::OutOfRange { id: 4, ground_size: 4 })
        );
    }

    #[test]
    fn ranks() {
        assert_eq!(fig1_graph().rank_of(), 4);
        assert_eq!(MatroidInstance::uniform(6, 3).unwrap().rank_of(), 3);
        let contracted = fig1_graph().restrict_contract(&[], &ids(&[V1V3])).unwrap();
        assert_eq!(contracted.rank_of(), 3);
    }

    #[test]
    fn fundamental_circuits() {
        let g = fig1_graph();
        let b = Basis::from_indices([V1V3, V2V3, V3V5, V4V5]);
        let c = g.fundamental_circuit(&b, ElementId(V1V2)).unwrap();
        assert_eq!(c.elements(), ids(&[V1V2, V1V3, V2V3]).as_slice());

        let b = Basis::from_indices([V1V3, V2V3, V3V4, V3V5]);
        let c = g.fundamental_circuit(&b, ElementId(V4V5)).unwrap();
        assert_eq!(c.elements(), ids(&[V3V4, V3V5, V4V5]).as_slice());

        let u = MatroidInstance::uniform(4, 2).unwrap();
        let c = u
            .fundamental_circuit(&Basis::from_indices([0, 1]), ElementId(2))
            .unwrap();
        assert_eq!(c.elements(), ids(&[0, 1, 2]).as_slice());
    }

    #[test]
    fn fundamental_circuit_rejects_basis_member() {
        let g = fig1_graph();
        let b = Basis::from_indices([V1V3, V2V3, V3V5, V4V5]);
        assert_eq!(
            g.fundamental_circuit(&b, ElementId(V1V3)),
            Err(MatroidError::ElementInBasis(ElementId(V1V3)))
        );
    }

    #[test]
    fn generic_circuit_route_matches_graphic_hook() {
        struct NoHook<'a>(&'a MatroidInstance);
        impl IndependenceOracle for NoHook<'_> {
            fn ground_size(&self) -> usize {
                self.0.ground_size()
            }
            fn rank(&self) -> usize {
                self.0.rank()
            }
            fn independent(&self, set: &[ElementId]) -> bool {
                self.0.independent(set)
            }
        }
        let g = fig1_graph();
        for b in g.enumerate_bases(DEFAULT_ENUMERATION_CAP).unwrap() {
            for f in 0..6 {
                let f = ElementId(f);
                if b.contains(f) {
                    continue;
                }
                assert_eq!(
                    circuit_of(&g, b.elements(), f),
                    circuit_of(&NoHook(&g), b.elements(), f)
                );
            }
        }
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(fig1_graph().enumerate_bases(DEFAULT_ENUMERATION_CAP).unwrap().len(), 9);
        let u = MatroidInstance::uniform(4, 2).unwrap();
        assert_eq!(u.enumerate_bases(DEFAULT_ENUMERATION_CAP).unwrap().len(), 6);
    }

    #[test]
    fn enumeration_cap_is_a_resource_error() {
        let u = MatroidInstance::uniform(30, 15).unwrap();
        let err = u.enumerate_bases(1000).unwrap_err();
        assert!(err.is_resource_limit());
    }

    #[test]
    fn counting_oracle_counts() {
        let g = fig1_graph();
        let counted = CountingOracle::new(&g);
        counted.independent(&ids(&[0]));
        counted.independent(&ids(&[0, 1]));
        assert_eq!(counted.calls(), 2);
    }

    #[test]
    fn basis_exchange_keeps_sorted() {
        let b = Basis::from_indices([1, 3, 5]);
        assert_eq!(b.exchange(ElementId(3), ElementId(0)), Basis::from_indices([0, 1, 5]));
        assert_eq!(b.symmetric_difference_len(&Basis::from_indices([1, 3, 4])), 2);
    }
}
