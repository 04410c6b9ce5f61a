use std::collections::HashSet;

use crate::instances::{RccInstance, Vertex};

/// Finds a full product `{x_1, y_1} x ... x {x_r, y_r}` with `x_i < y_i`
/// inside `present`, given its smallest corner `lo` and largest corner `hi`.
fn is_full_product(lo: &[Vertex], hi: &[Vertex], present: &HashSet<Vec<Vertex>>) -> bool {
    let r = lo.len();
    let mut corner = vec![0; r];
    (0u64..1 << r).all(|mask| {
        for i in 0..r {
            corner[i] = if mask >> i & 1 == 1 { hi[i] } else { lo[i] };
        }
        present.contains(&corner)
    })
}

/// Removes constraint tuples until no product of 2-element sets lies entirely in `F`.
///
/// For each such product the lexicographically last tuple is dropped (all
/// copies of it). When `R` defines no OR of arity `r`, a coloring that
/// satisfies the other `2^r - 1` tuples of a product also satisfies the
/// last one, so the solution set is unchanged. Products are only ever
/// destroyed by removals, so one pass over candidate pairs suffices.
pub fn kernelize_carbonnel(inst: &RccInstance) -> RccInstance {
    let mut present: HashSet<Vec<Vertex>> = inst.constraints.iter().cloned().collect();
    let mut sorted: Vec<Vec<Vertex>> = present.iter().cloned().collect();
    sorted.sort_unstable();
    for a in 0..sorted.len() {
        if !present.contains(&sorted[a]) {
            continue;
        }
        for b in a + 1..sorted.len() {
            let (lo, hi) = (&sorted[a], &sorted[b]);
            if present.contains(hi) && lo.iter().zip(hi).all(|(x, y)| x < y) && is_full_product(lo, hi, &present) {
                present.remove(hi);
            }
        }
    }
    let constraints = inst.constraints.iter().filter(|t| present.contains(*t)).cloned().collect();
    RccInstance { graph: inst.graph.clone(), relation: inst.relation.clone(), constraints }
}

/// Whether some product of 2-element sets lies entirely in the constraint set.
pub fn has_full_product(constraints: &[Vec<Vertex>]) -> bool {
    let present: HashSet<Vec<Vertex>> = constraints.iter().cloned().collect();
    let mut sorted: Vec<&Vec<Vertex>> = present.iter().collect();
    sorted.sort_unstable();
    sorted.iter().enumerate().any(|(a, lo)| {
        sorted[a + 1..]
            .iter()
            .any(|hi| lo.iter().zip(hi.iter()).all(|(x, y)| x < y) && is_full_product(lo, hi, &present))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::Graph;
    use crate::relations::make_nur;
    use crate::Limits;

    fn product(sets: &[[Vertex; 2]]) -> Vec<Vec<Vertex>> {
        let r = sets.len();
        (0..1u32 << r)
            .map(|mask| (0..r).map(|i| sets[i][(mask >> i & 1) as usize]).collect())
            .collect()
    }

    #[test]
    fn full_product_collapses() {
        let rel = make_nur(1, 3, 2, &Limits::default()).unwrap();
        let f = product(&[[0, 1], [2, 3], [4, 5]]);
        let inst = RccInstance::new(Graph::new(6), rel, f).unwrap();
        assert!(has_full_product(&inst.constraints));
        let k = kernelize_carbonnel(&inst);
        assert_eq!(k.constraints.len(), 7);
        assert!(!k.constraints.contains(&vec![1, 3, 5]));
        assert!(!has_full_product(&k.constraints));
    }

    #[test]
    fn no_product_means_no_change() {
        let rel = make_nur(1, 3, 2, &Limits::default()).unwrap();
        let f = vec![vec![0, 1, 2], vec![1, 2, 3], vec![0, 2, 3]];
        let inst = RccInstance::new(Graph::new(4), rel, f).unwrap();
        assert_eq!(kernelize_carbonnel(&inst), inst);
    }
}
