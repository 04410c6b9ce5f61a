use super::{check_vertex, Graph, InstanceError, ListAssignment, Vertex};
use crate::relations::Relation;

fn check_constraints(
    graph: &Graph,
    relation: &Relation,
    constraints: &[Vec<Vertex>],
) -> Result<(), InstanceError> {
    for c in constraints {
        if c.len() != relation.arity() {
            return Err(InstanceError::WrongTupleLength {
                expected: relation.arity(),
                found: c.len(),
            });
        }
        for &v in c {
            check_vertex(v, graph.n())?;
        }
    }
    Ok(())
}

/// R-constrained coloring: proper `q`-coloring with every constraint tuple in `R`.
///
/// `q` is the domain size of the relation. Constraint tuples may repeat vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RccInstance {
    pub graph: Graph,
    pub relation: Relation,
    pub constraints: Vec<Vec<Vertex>>,
}

impl RccInstance {
    pub fn new(
        graph: Graph,
        relation: Relation,
        constraints: Vec<Vec<Vertex>>,
    ) -> Result<Self, InstanceError> {
        check_constraints(&graph, &relation, &constraints)?;
        Ok(RccInstance { graph, relation, constraints })
    }

    pub fn q(&self) -> usize {
        self.relation.q()
    }

    /// `|E| + |F|`.
    pub fn constraint_count(&self) -> usize {
        self.graph.m() + self.constraints.len()
    }
}

/// List variant: additionally `c(v)` must lie in `lists[v]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RclcInstance {
    pub graph: Graph,
    pub relation: Relation,
    pub lists: ListAssignment,
    pub constraints: Vec<Vec<Vertex>>,
}

impl RclcInstance {
    pub fn new(
        graph: Graph,
        relation: Relation,
        lists: ListAssignment,
        constraints: Vec<Vec<Vertex>>,
    ) -> Result<Self, InstanceError> {
        check_constraints(&graph, &relation, &constraints)?;
        if lists.len() != graph.n() {
            return Err(InstanceError::Invalid(format!(
                "{} lists for {} vertices",
                lists.len(),
                graph.n()
            )));
        }
        if lists.q() != relation.q() {
            return Err(InstanceError::Invalid(format!(
                "lists over [{}] but relation over [{}]",
                lists.q(),
                relation.q()
            )));
        }
        Ok(RclcInstance { graph, relation, lists, constraints })
    }

    pub fn q(&self) -> usize {
        self.relation.q()
    }

    pub fn constraint_count(&self) -> usize {
        self.graph.m() + self.constraints.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constraints_are_checked() {
        let rel = Relation::new(2, 2, vec![vec![1, 1], vec![2, 2]]).unwrap();
        let mut g = Graph::new(2);
        g.add_edge(0, 1).unwrap();
        let inst = RccInstance::new(g.clone(), rel.clone(), vec![vec![0, 1]]).unwrap();
        assert_eq!(inst.constraint_count(), 2);
        assert!(RccInstance::new(g.clone(), rel.clone(), vec![vec![0]]).is_err());
        assert!(RccInstance::new(g.clone(), rel.clone(), vec![vec![0, 2]]).is_err());
        assert!(RclcInstance::new(g, rel, ListAssignment::full(1, 2), vec![]).is_err());
    }
}
