use std::fmt;

use super::{check_vertex, InstanceError, Vertex};
use crate::{Color, MAX_COLORS};

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    m: usize,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], m: 0 }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.ensure_edge(u, v);
            }
        }
        g
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn add_vertex(&mut self) -> Vertex {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    /// Adds an edge; loops, duplicates and unknown vertices are errors.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<(), InstanceError> {
        check_vertex(u, self.n())?;
        check_vertex(v, self.n())?;
        if u == v {
            return Err(InstanceError::Loop(u));
        }
        if !self.ensure_edge(u, v) {
            return Err(InstanceError::DuplicateEdge(u.min(v), u.max(v)));
        }
        Ok(())
    }

    /// Adds the edge if absent. Returns whether it was added.
    ///
    /// # Panics
    /// On a loop or an unknown vertex.
    pub fn ensure_edge(&mut self, u: Vertex, v: Vertex) -> bool {
        assert!(u != v, "loop at vertex {u}");
        let pos = match self.adj[u].binary_search(&v) {
            Ok(_) => return false,
            Err(pos) => pos,
        };
        self.adj[u].insert(pos, v);
        let pos = self.adj[v].binary_search(&u).unwrap_err();
        self.adj[v].insert(pos, u);
        self.m += 1;
        true
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj.get(u).is_some_and(|a| a.binary_search(&v).is_ok())
    }

    /// Sorted neighbor list.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Subgraph induced by `vertices`; vertex `vertices[i]` becomes `i`.
    pub fn induced(&self, vertices: &[Vertex]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::new(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = index[w];
                if j != usize::MAX && i < j {
                    g.ensure_edge(i, j);
                }
            }
        }
        g
    }

    /// Whether `coloring[v]` differs across every edge.
    pub fn is_proper(&self, coloring: &[Color]) -> bool {
        self.edges().all(|(u, v)| coloring[u] != coloring[v])
    }
}

/// Set of colors in `1..=64` as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColorSet(u64);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);

    pub fn full(q: usize) -> Self {
        assert!(q <= MAX_COLORS);
        if q == 64 {
            ColorSet(u64::MAX)
        } else {
            ColorSet((1u64 << q) - 1)
        }
    }

    pub fn single(c: Color) -> Self {
        ColorSet(1 << (c - 1))
    }

    pub fn from_bits(bits: u64) -> Self {
        ColorSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, c: Color) -> bool {
        c >= 1 && (c as usize) <= MAX_COLORS && self.0 >> (c - 1) & 1 == 1
    }

    pub fn insert(&mut self, c: Color) {
        self.0 |= 1 << (c - 1);
    }

    pub fn remove(&mut self, c: Color) {
        self.0 &= !(1 << (c - 1));
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn intersect(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 & other.0)
    }

    pub fn iter(self) -> impl Iterator<Item = Color> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let c = bits.trailing_zeros() as Color + 1;
            bits &= bits - 1;
            Some(c)
        })
    }
}

impl FromIterator<Color> for ColorSet {
    fn from_iter<I: IntoIterator<Item = Color>>(iter: I) -> Self {
        let mut s = ColorSet::EMPTY;
        for c in iter {
            s.insert(c);
        }
        s
    }
}

impl fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Per-vertex allowed colors. Empty lists are legal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ListAssignment {
    q: usize,
    lists: Vec<ColorSet>,
}

impl ListAssignment {
    pub fn full(n: usize, q: usize) -> Self {
        ListAssignment { q, lists: vec![ColorSet::full(q); n] }
    }

    pub fn new(q: usize, lists: Vec<ColorSet>) -> Result<Self, InstanceError> {
        let allowed = ColorSet::full(q);
        for set in &lists {
            if let Some(c) = set.iter().find(|&c| !allowed.contains(c)) {
                return Err(InstanceError::ColorOutOfRange { color: c as usize, q });
            }
        }
        Ok(ListAssignment { q, lists })
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    pub fn get(&self, v: Vertex) -> ColorSet {
        self.lists[v]
    }

    pub fn set(&mut self, v: Vertex, list: ColorSet) {
        debug_assert!(list.bits() & !ColorSet::full(self.q).bits() == 0);
        self.lists[v] = list;
    }

    pub fn push(&mut self, list: ColorSet) -> Vertex {
        debug_assert!(list.bits() & !ColorSet::full(self.q).bits() == 0);
        self.lists.push(list);
        self.lists.len() - 1
    }

    pub fn as_slice(&self) -> &[ColorSet] {
        &self.lists
    }
}
