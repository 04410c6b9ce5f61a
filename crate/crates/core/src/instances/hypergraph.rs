use std::collections::BTreeSet;

use super::{check_vertex, InstanceError, Vertex};
use crate::Color;

/// Hypergraph on `0..n` with distinct, sorted, non-empty edges.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: usize,
    edges: BTreeSet<Vec<Vertex>>,
}

impl Hypergraph {
    pub fn new(n: usize) -> Self {
        Hypergraph { n, edges: BTreeSet::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn add_vertex(&mut self) -> Vertex {
        self.n += 1;
        self.n - 1
    }

    /// Inserts an edge after sorting it. Returns false if it was already present.
    pub fn insert_edge(&mut self, mut edge: Vec<Vertex>) -> Result<bool, InstanceError> {
        if edge.is_empty() {
            return Err(InstanceError::EmptyEdge);
        }
        edge.sort_unstable();
        for w in edge.windows(2) {
            if w[0] == w[1] {
                return Err(InstanceError::RepeatedVertex(w[0]));
            }
        }
        check_vertex(*edge.last().unwrap(), self.n)?;
        Ok(self.edges.insert(edge))
    }

    pub fn edges(&self) -> impl Iterator<Item = &[Vertex]> + '_ {
        self.edges.iter().map(Vec::as_slice)
    }

    pub fn contains_edge(&self, edge: &[Vertex]) -> bool {
        let mut e = edge.to_vec();
        e.sort_unstable();
        self.edges.contains(&e)
    }

    pub fn is_uniform(&self, l: usize) -> bool {
        self.edges.iter().all(|e| e.len() == l)
    }

    /// No edge is monochromatic. Singleton edges can never be satisfied.
    pub fn is_proper(&self, coloring: &[Color]) -> bool {
        self.edges
            .iter()
            .all(|e| e.iter().any(|&v| coloring[v] != coloring[e[0]]))
    }
}
