use std::collections::{BTreeSet, HashMap, VecDeque};

use serde::Serialize;

use crate::matroid::Basis;

/// The basis graph: an edge joins bases that differ in exactly one element.
#[derive(Clone, Debug, Serialize)]
pub struct AdjacencyGraph {
    pub nodes: Vec<Basis>,
    /// Index pairs `(i, j)` with `i < j`, sorted.
    pub edges: Vec<(usize, usize)>,
    #[serde(skip)]
    neighbors: Vec<Vec<usize>>,
}

impl AdjacencyGraph {
    pub fn node_index(&self, basis: &Basis) -> Option<usize> {
        self.nodes.iter().position(|b| b == basis)
    }

    pub fn neighbors_of(&self, i: usize) -> &[usize] {
        &self.neighbors[i]
    }
}

/// Two distinct bases of equal size are adjacent iff they share a set of
/// size `r - 1`, and then they share exactly one, so grouping by every
/// one-element deletion finds each edge once.
pub fn adjacency_graph(bases: &[Basis]) -> AdjacencyGraph {
    let mut groups: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
    for (i, b) in bases.iter().enumerate() {
        let elems: Vec<usize> = b.elements().iter().map(|e| e.index()).collect();
        for skip in 0..elems.len() {
            let mut key = elems.clone();
            key.remove(skip);
            groups.entry(key).or_default().push(i);
        }
    }
    let mut edges = BTreeSet::new();
    for members in groups.values() {
        for (a, &i) in members.iter().enumerate() {
            for &j in &members[a + 1..] {
                if bases[i] != bases[j] && bases[i].len() == bases[j].len() {
                    edges.insert((i.min(j), i.max(j)));
                }
            }
        }
    }
    let mut neighbors = vec![Vec::new(); bases.len()];
    for &(i, j) in &edges {
        neighbors[i].push(j);
        neighbors[j].push(i);
    }
    AdjacencyGraph {
        nodes: bases.to_vec(),
        edges: edges.into_iter().collect(),
        neighbors,
    }
}

/// Whether the subgraph induced by `subset` is connected. Members of
/// `subset` that are not nodes make the answer `false`.
pub fn check_connectivity(graph: &AdjacencyGraph, subset: &BTreeSet<Basis>) -> bool {
    let index: HashMap<&Basis, usize> = graph.nodes.iter().enumerate().map(|(i, b)| (b, i)).collect();
    let mut inside = vec![false; graph.nodes.len()];
    for b in subset {
        match index.get(b) {
            Some(&i) => inside[i] = true,
            None => return false,
        }
    }
    let Some(start) = inside.iter().position(|&x| x) else {
        return true;
    };
    let mut seen = vec![false; graph.nodes.len()];
    seen[start] = true;
    let mut reached = 1;
    let mut queue = VecDeque::from([start]);
    while let Some(i) = queue.pop_front() {
        for &j in &graph.neighbors[i] {
            if inside[j] && !seen[j] {
                seen[j] = true;
                reached += 1;
                queue.push_back(j);
            }
        }
    }
    reached == subset.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::{MatroidInstance, DEFAULT_ENUMERATION_CAP};
    use crate::oracle::brute_force_frontiers;
    use crate::solvers::fixtures::{ex28, fig1};

    #[test]
    fn fig1_graph_has_eighteen_edges() {
        let (g, _) = fig1();
        let bases = g.enumerate_bases(DEFAULT_ENUMERATION_CAP).unwrap();
        let d = adjacency_graph(&bases);
        assert_eq!(d.nodes.len(), 9);
        assert_eq!(d.edges.len(), 18);
        for &(i, j) in &d.edges {
            assert_eq!(d.nodes[i].symmetric_difference_len(&d.nodes[j]), 2);
        }
        assert!(check_connectivity(&d, &bases.iter().cloned().collect()));
    }

    #[test]
    fn trivial_graphs() {
        let d = adjacency_graph(&[Basis::from_indices([0, 1])]);
        assert!(d.edges.is_empty());
        assert!(check_connectivity(&d, &BTreeSet::new()));
        assert!(check_connectivity(&d, &d.nodes.iter().cloned().collect()));

        let u = MatroidInstance::uniform(3, 2).unwrap();
        let d = adjacency_graph(&u.enumerate_bases(DEFAULT_ENUMERATION_CAP).unwrap());
        assert_eq!(d.edges, vec![(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn supported_subgraphs() {
        let (g, costs) = fig1();
        let t = brute_force_frontiers(&g, &costs, DEFAULT_ENUMERATION_CAP).unwrap();
        let d = adjacency_graph(&t.bases);
        assert!(check_connectivity(&d, &t.x_se));

        let (g, costs) = ex28();
        let t = brute_force_frontiers(&g, &costs, DEFAULT_ENUMERATION_CAP).unwrap();
        let d = adjacency_graph(&t.bases);
        assert_eq!(t.x_ese.len(), 2);
        assert!(!check_connectivity(&d, &t.x_ese));
        assert!(check_connectivity(&d, &t.x_se));
    }
}
