use std::collections::VecDeque;

use super::{ElementId, IndependenceOracle, MatroidError};

/// Cycle matroid of a connected multigraph; bases are spanning trees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphicMatroid {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

/// Disjoint-set forest with path halving and union by size.
pub(crate) struct DisjointSets {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl DisjointSets {
    pub(crate) fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the classes of `a` and `b`; false if they were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }
}

impl GraphicMatroid {
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self, MatroidError> {
        if vertices == 0 {
            return Err(MatroidError::InvalidGraph("graph needs at least one vertex".into()));
        }
        if let Some((i, &(u, v))) = edges
            .iter()
            .enumerate()
            .find(|(_, &(u, v))| u >= vertices || v >= vertices)
        {
            return Err(MatroidError::InvalidGraph(format!(
                "edge {i} = ({u}, {v}) has an endpoint outside 0..{vertices}"
            )));
        }
        let mut dsu = DisjointSets::new(vertices);
        let components = edges
            .iter()
            .fold(vertices, |c, &(u, v)| if dsu.union(u, v) { c - 1 } else { c });
        if components != 1 {
            return Err(MatroidError::Disconnected);
        }
        Ok(GraphicMatroid { vertices, edges })
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn ground_size(&self) -> usize {
        self.edges.len()
    }

    pub fn rank(&self) -> usize {
        self.vertices - 1
    }

    pub fn independent(&self, set: &[ElementId]) -> bool {
        let mut dsu = DisjointSets::new(self.vertices);
        set.iter().all(|e| {
            let (u, v) = self.edges[e.0];
            dsu.union(u, v)
        })
    }

    /// Tree path between the endpoints of `f`, plus `f`.
    pub fn circuit_hook(&self, basis: &[ElementId], f: ElementId) -> Option<Vec<ElementId>> {
        let (source, target) = self.edges[f.0];
        if source == target {
            return Some(vec![f]);
        }
        let mut adjacency: Vec<Vec<(usize, ElementId)>> = vec![Vec::new(); self.vertices];
        for &e in basis {
            let (u, v) = self.edges[e.0];
            adjacency[u].push((v, e));
            adjacency[v].push((u, e));
        }
        let mut via: Vec<Option<(usize, ElementId)>> = vec![None; self.vertices];
        let mut seen = vec![false; self.vertices];
        seen[source] = true;
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            if x == target {
                break;
            }
            for &(y, e) in &adjacency[x] {
                if !seen[y] {
                    seen[y] = true;
                    via[y] = Some((x, e));
                    queue.push_back(y);
                }
            }
        }
        if !seen[target] {
            // basis + f is independent; not a spanning tree input
            return None;
        }
        let mut circuit = vec![f];
        let mut x = target;
        while let Some((prev, e)) = via[x] {
            circuit.push(e);
            x = prev;
        }
        Some(circuit)
    }
}

impl IndependenceOracle for GraphicMatroid {
    fn ground_size(&self) -> usize {
        GraphicMatroid::ground_size(self)
    }

    fn rank(&self) -> usize {
        GraphicMatroid::rank(self)
    }

    fn independent(&self, set: &[ElementId]) -> bool {
        GraphicMatroid::independent(self, set)
    }

    fn circuit_hook(&self, basis: &[ElementId], f: ElementId) -> Option<Vec<ElementId>> {
        GraphicMatroid::circuit_hook(self, basis, f)
    }
}
