use super::{check_vertex, Graph, InstanceError, Vertex};

/// Splits `G - X` into connected components and checks each one is complete.
///
/// Components are returned with sorted vertices, ordered by smallest vertex.
pub fn validate_clique_kv(g: &Graph, x: &[Vertex]) -> Result<Vec<Vec<Vertex>>, InstanceError> {
    let mut removed = vec![false; g.n()];
    for &v in x {
        check_vertex(v, g.n())?;
        removed[v] = true;
    }
    let mut seen = removed.clone();
    let mut cliques = Vec::new();
    for start in 0..g.n() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start];
        let mut i = 0;
        while i < comp.len() {
            for &w in g.neighbors(comp[i]) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
            i += 1;
        }
        comp.sort_unstable();
        for (a, &u) in comp.iter().enumerate() {
            // Degree inside G - X must be |comp| - 1.
            let inside = g.neighbors(u).iter().filter(|&&w| !removed[w]).count();
            if inside != comp.len() - 1 {
                let v = comp[a + 1..]
                    .iter()
                    .chain(&comp[..a])
                    .copied()
                    .find(|&v| !g.has_edge(u, v))
                    .expect("component vertex with missing neighbor");
                return Err(InstanceError::NotAClique {
                    component: comp[0],
                    missing: (u.min(v), u.max(v)),
                });
            }
        }
        cliques.push(comp);
    }
    Ok(cliques)
}

/// Graph with a modulator `X` whose removal leaves disjoint cliques.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CliqueKvInstance {
    graph: Graph,
    modulator: Vec<Vertex>,
    cliques: Vec<Vec<Vertex>>,
}

impl CliqueKvInstance {
    pub fn new(graph: Graph, mut modulator: Vec<Vertex>) -> Result<Self, InstanceError> {
        modulator.sort_unstable();
        if let Some(w) = modulator.windows(2).find(|w| w[0] == w[1]) {
            return Err(InstanceError::RepeatedVertex(w[0]));
        }
        let cliques = validate_clique_kv(&graph, &modulator)?;
        Ok(CliqueKvInstance { graph, modulator, cliques })
    }

    /// Like [`CliqueKvInstance::new`], also rejecting cliques larger than `t`.
    pub fn with_bound(graph: Graph, modulator: Vec<Vertex>, t: usize) -> Result<Self, InstanceError> {
        let inst = Self::new(graph, modulator)?;
        let size = inst.max_clique();
        if size > t {
            return Err(InstanceError::CliqueTooLarge { size, bound: t });
        }
        Ok(inst)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Sorted modulator vertices.
    pub fn modulator(&self) -> &[Vertex] {
        &self.modulator
    }

    pub fn k(&self) -> usize {
        self.modulator.len()
    }

    pub fn cliques(&self) -> &[Vec<Vertex>] {
        &self.cliques
    }

    pub fn max_clique(&self) -> usize {
        self.cliques.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn into_parts(self) -> (Graph, Vec<Vertex>) {
        (self.graph, self.modulator)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> Graph {
        let mut g = Graph::new(3);
        g.add_edge(0, 1).unwrap();
        g.add_edge(1, 2).unwrap();
        g
    }

    #[test]
    fn triangle_is_one_clique() {
        assert_eq!(validate_clique_kv(&Graph::complete(3), &[]).unwrap(), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn induced_path_is_rejected() {
        assert_eq!(
            validate_clique_kv(&path3(), &[]),
            Err(InstanceError::NotAClique { component: 0, missing: (0, 2) })
        );
    }

    #[test]
    fn removing_the_middle_splits_the_path() {
        assert_eq!(validate_clique_kv(&path3(), &[1]).unwrap(), vec![vec![0], vec![2]]);
        let inst = CliqueKvInstance::with_bound(path3(), vec![1], 1).unwrap();
        assert_eq!(inst.k(), 1);
        assert!(CliqueKvInstance::with_bound(Graph::complete(3), vec![], 2).is_err());
    }
}
