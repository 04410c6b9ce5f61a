use std::collections::BTreeSet;

use super::{check_vertex, Graph, InstanceError, Vertex};

/// Sorts each set ascending and the sets lexicographically.
///
/// Every set must have exactly `d` distinct vertices. Equal sets are kept.
pub fn canonicalize_urfc_tuple(
    sets: &[Vec<Vertex>],
    d: usize,
) -> Result<Vec<Vec<Vertex>>, InstanceError> {
    let mut out = Vec::with_capacity(sets.len());
    for set in sets {
        if set.len() != d {
            return Err(InstanceError::WrongSetSize { expected: d, found: set.len() });
        }
        let mut s = set.clone();
        s.sort_unstable();
        if let Some(w) = s.windows(2).find(|w| w[0] == w[1]) {
            return Err(InstanceError::RepeatedVertex(w[0]));
        }
        out.push(s);
    }
    out.sort();
    Ok(out)
}

/// Constraints of one shape `(d, l)`: a set of canonical `l`-tuples of `d`-sets.
///
/// Tuples are stored flattened; set `j` of a tuple occupies `j*d..(j+1)*d`.
/// Iteration follows the canonical (lexicographic) order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UrfcBlock {
    d: usize,
    l: usize,
    tuples: BTreeSet<Vec<Vertex>>,
}

impl UrfcBlock {
    pub fn new(d: usize, l: usize) -> Self {
        assert!(d >= 1 && l >= 1, "block shape must be positive");
        UrfcBlock { d, l, tuples: BTreeSet::new() }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    /// Canonicalizes and inserts a tuple. Returns false for a duplicate.
    pub fn insert(&mut self, sets: &[Vec<Vertex>]) -> Result<bool, InstanceError> {
        if sets.len() != self.l {
            return Err(InstanceError::WrongTupleLength { expected: self.l, found: sets.len() });
        }
        let canon = canonicalize_urfc_tuple(sets, self.d)?;
        Ok(self.tuples.insert(canon.concat()))
    }

    /// Inserts a flattened tuple that is already canonical.
    pub(crate) fn insert_flat(&mut self, flat: Vec<Vertex>) -> bool {
        debug_assert_eq!(flat.len(), self.d * self.l);
        self.tuples.insert(flat)
    }

    /// Flattened tuples in canonical order.
    pub fn tuples(&self) -> impl Iterator<Item = &[Vertex]> + '_ {
        self.tuples.iter().map(Vec::as_slice)
    }

    pub fn contains(&self, flat: &[Vertex]) -> bool {
        self.tuples.contains(flat)
    }

    /// The `j`-th set of a flattened tuple.
    pub fn set<'a>(&self, flat: &'a [Vertex], j: usize) -> &'a [Vertex] {
        &flat[j * self.d..(j + 1) * self.d]
    }

    /// Keeps the tuples for which `keep` returns true.
    pub fn retain(&mut self, mut keep: impl FnMut(&[Vertex]) -> bool) {
        self.tuples.retain(|t| keep(t));
    }

    /// Empty block of the same shape.
    pub fn cleared(&self) -> Self {
        UrfcBlock::new(self.d, self.l)
    }

    fn max_vertex(&self) -> Option<Vertex> {
        self.tuples.iter().flat_map(|t| t.iter().copied()).max()
    }
}

/// URFC instance: a graph and one block of constraints.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UrfcInstance {
    pub graph: Graph,
    pub block: UrfcBlock,
}

impl UrfcInstance {
    pub fn new(graph: Graph, block: UrfcBlock) -> Result<Self, InstanceError> {
        if let Some(v) = block.max_vertex() {
            check_vertex(v, graph.n())?;
        }
        Ok(UrfcInstance { graph, block })
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// `|E| + |F|`.
    pub fn constraint_count(&self) -> usize {
        self.graph.m() + self.block.len()
    }
}

/// Generalized URFC: a graph and several blocks of possibly different shapes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GurfcInstance {
    pub graph: Graph,
    pub blocks: Vec<UrfcBlock>,
}

impl GurfcInstance {
    pub fn new(graph: Graph, blocks: Vec<UrfcBlock>) -> Result<Self, InstanceError> {
        for b in &blocks {
            if let Some(v) = b.max_vertex() {
                check_vertex(v, graph.n())?;
            }
        }
        Ok(GurfcInstance { graph, blocks })
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn constraint_count(&self) -> usize {
        self.graph.m() + self.blocks.iter().map(UrfcBlock::len).sum::<usize>()
    }
}

impl From<UrfcInstance> for GurfcInstance {
    fn from(inst: UrfcInstance) -> Self {
        GurfcInstance { graph: inst.graph, blocks: vec![inst.block] }
    }
}
