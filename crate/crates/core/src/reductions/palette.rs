use super::{Reduced, ReductionError, ReductionReport};
use crate::instances::{RccInstance, RclcInstance};
use crate::relations::is_permutation_invariant;

/// Drops the lists by adding a palette clique `z_1..z_q` and joining each
/// vertex `v` to every `z_i` with `i` outside its list.
///
/// The palette vertices are appended after the original ones, `z_i` at index
/// `n + i - 1`. Needs a permutation-invariant relation.
pub fn rclc_to_rcc(inst: &RclcInstance) -> Result<Reduced<RccInstance>, ReductionError> {
    if !is_permutation_invariant(&inst.relation) {
        return Err(ReductionError::NotPermutationInvariant);
    }
    let q = inst.q();
    let n = inst.graph.n();
    let mut g = inst.graph.clone();
    let z: Vec<_> = (0..q).map(|_| g.add_vertex()).collect();
    for (a, &za) in z.iter().enumerate() {
        for &zb in &z[a + 1..] {
            g.ensure_edge(za, zb);
        }
    }
    let mut wires = 0;
    for v in 0..n {
        let list = inst.lists.get(v);
        for (i, &zi) in z.iter().enumerate() {
            if !list.contains(i as crate::Color + 1) {
                g.ensure_edge(v, zi);
                wires += 1;
            }
        }
    }
    let mut report = ReductionReport::new("rclc_to_rcc", "n", n);
    report.count("palette_clique", 1);
    report.count("palette_edge", wires);
    report.output_vertices = g.n();
    report.output_parameter = g.n();
    report.bound = Some((1, q));
    let instance = RccInstance::new(g, inst.relation.clone(), inst.constraints.clone())?;
    Ok(Reduced { instance, report })
}
