use std::collections::BTreeSet;

use super::{Reduced, ReductionError, ReductionReport};
use crate::instances::{Hypergraph, UrfcInstance, Vertex};
use crate::util::combinations;

/// Turns a `(1, l)` URFC instance into an `l`-uniform hypergraph with the
/// same `q`-colorability.
///
/// Graph edges and the vertex sets of the tuples become hyperedges; the ones
/// smaller than `l` are padded with every fitting subset of an extra vertex
/// set `Z` of size `(l-1)q`, whose `l`-subsets are all edges too. `Z` is
/// appended after the original vertices.
pub fn urfc_to_hypergraph(inst: &UrfcInstance, q: usize) -> Result<Reduced<Hypergraph>, ReductionError> {
    let (d, l) = (inst.block.d(), inst.block.l());
    if d != 1 {
        return Err(ReductionError::Shape(format!("hypergraph encoding needs d = 1, got d = {d}")));
    }
    if l < 2 {
        return Err(ReductionError::Shape(format!("hypergraph encoding needs l >= 2, got l = {l}")));
    }
    if q < 2 {
        return Err(ReductionError::TooFewColors { q, need: 2 });
    }
    let n = inst.n();
    let mut small: BTreeSet<Vec<Vertex>> = inst.graph.edges().map(|(u, v)| vec![u, v]).collect();
    for t in inst.block.tuples() {
        let mut e = t.to_vec();
        e.sort_unstable();
        e.dedup();
        small.insert(e);
    }
    let z: Vec<Vertex> = (n..n + (l - 1) * q).collect();
    let mut h = Hypergraph::new(n + z.len());
    let mut report = ReductionReport::new("urfc_to_hypergraph", "n", n);
    for s in combinations(&z, l) {
        h.insert_edge(s)?;
        report.count("z_edge", 1);
    }
    for e in &small {
        if e.len() == l {
            h.insert_edge(e.clone())?;
            report.count("kept_edge", 1);
            continue;
        }
        for s in combinations(&z, l - e.len()) {
            let mut padded = e.clone();
            padded.extend(s);
            if h.insert_edge(padded)? {
                report.count("padded_edge", 1);
            }
        }
    }
    report.output_vertices = h.n();
    report.output_parameter = h.n();
    report.bound = Some((1, (l - 1) * q));
    Ok(Reduced { instance: h, report })
}
