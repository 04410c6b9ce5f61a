use super::{Reduced, ReductionError, ReductionReport};
use crate::instances::{CliqueKvInstance, Graph, GurfcInstance, InstanceError, UrfcBlock, Vertex};
use crate::polykernel::{kernelize_gurfc, KernelMeta};
use crate::util::combinations;

fn check_bound(q: usize, t: usize) -> Result<(), ReductionError> {
    if t == 0 || t > q {
        return Err(ReductionError::Shape(format!("clique bound t={t} must lie in 1..={q}")));
    }
    Ok(())
}

/// Pushes every tuple `(F_1, …, F_l)` with `F_i` drawn from `choices[i]`.
fn product(choices: &[Vec<Vec<Vertex>>], prefix: &mut Vec<Vec<Vertex>>, block: &mut UrfcBlock) -> Result<(), InstanceError> {
    match choices.split_first() {
        None => block.insert(prefix).map(|_| ()),
        Some((first, rest)) => {
            for f in first {
                prefix.push(f.clone());
                product(rest, prefix, block)?;
                prefix.pop();
            }
            Ok(())
        }
    }
}

/// The URFC constraints on `G[X]` that capture which colorings of the
/// modulator extend over the cliques.
///
/// Block `l - 1` has shape `(q-l+1, l)` for `l` in `1..=t`. For every
/// `l`-subset `{v_1, …, v_l}` of a clique of `G - X` it holds every tuple
/// `(F_1, …, F_l)` with `F_i` a `(q-l+1)`-subset of `N(v_i) ∩ X`. Modulator
/// vertex `inst.modulator()[i]` becomes vertex `i`.
pub fn extract_clique_constraints(inst: &CliqueKvInstance, q: usize, t: usize) -> Result<Reduced<GurfcInstance>, ReductionError> {
    check_bound(q, t)?;
    let size = inst.max_clique();
    if size > t {
        return Err(InstanceError::CliqueTooLarge { size, bound: t }.into());
    }
    let g = inst.graph();
    let x = inst.modulator();
    let mut index = vec![usize::MAX; g.n()];
    for (i, &v) in x.iter().enumerate() {
        index[v] = i;
    }
    let near: Vec<Vec<Vertex>> = (0..g.n())
        .map(|v| {
            let mut nb: Vec<Vertex> = g.neighbors(v).iter().map(|&w| index[w]).filter(|&i| i != usize::MAX).collect();
            nb.sort_unstable();
            nb
        })
        .collect();
    let mut blocks: Vec<UrfcBlock> = (1..=t).map(|l| UrfcBlock::new(q - l + 1, l)).collect();
    for clique in inst.cliques() {
        for l in 1..=t.min(clique.len()) {
            let d = q - l + 1;
            for subset in combinations(clique, l) {
                let choices: Vec<Vec<Vec<Vertex>>> = subset.iter().map(|&v| combinations(&near[v], d)).collect();
                if choices.iter().any(Vec::is_empty) {
                    continue;
                }
                product(&choices, &mut Vec::with_capacity(l), &mut blocks[l - 1])?;
            }
        }
    }
    let mut report = ReductionReport::new("extract_clique_constraints", "k", inst.k());
    for b in &blocks {
        report.count("tuple", b.len());
    }
    report.output_vertices = x.len();
    report.output_parameter = x.len();
    report.bound = Some((1, 0));
    let instance = GurfcInstance::new(g.induced(x), blocks)?;
    Ok(Reduced { instance, report })
}

/// Realizes every tuple of a GURFC instance with blocks `(q-l+1, l)` as a
/// fresh `l`-clique whose `i`-th vertex sees the `i`-th set.
///
/// The original vertices form the modulator, so `k = n`.
pub fn gurfc_to_cliquekv(inst: &GurfcInstance, q: usize) -> Result<Reduced<CliqueKvInstance>, ReductionError> {
    for b in &inst.blocks {
        if b.d() + b.l() != q + 1 {
            return Err(ReductionError::Shape(format!(
                "block ({}, {}) is not of the form (q-l+1, l) for q={q}",
                b.d(),
                b.l()
            )));
        }
    }
    let n = inst.n();
    let mut g: Graph = inst.graph.clone();
    let mut report = ReductionReport::new("gurfc_to_cliquekv", "n", n);
    for b in &inst.blocks {
        for flat in b.tuples() {
            let vs: Vec<Vertex> = (0..b.l()).map(|_| g.add_vertex()).collect();
            for (i, &v) in vs.iter().enumerate() {
                for &w in &vs[..i] {
                    g.ensure_edge(w, v);
                }
                for &u in b.set(flat, i) {
                    g.ensure_edge(u, v);
                }
            }
            report.count("clique", 1);
            report.count("clique_vertex", b.l());
        }
    }
    report.output_vertices = g.n();
    report.output_parameter = n;
    report.bound = Some((1, 0));
    let instance = CliqueKvInstance::new(g, (0..n).collect())?;
    Ok(Reduced { instance, report })
}

/// Kernel for `q`-coloring with a clique modulator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueKvKernel {
    pub instance: CliqueKvInstance,
    pub report: ReductionReport,
    /// The clique bound used; `q` when none was given.
    pub t: usize,
    /// Per-block kernel metadata; empty when the answer was decided.
    pub blocks: Vec<KernelMeta>,
    /// Set when a clique larger than `q` settled the answer as NO.
    pub decided_no: bool,
}

/// Shrinks the cliques outside the modulator to `O(k^r)` many.
///
/// With `t = None` clique sizes are unbounded: a clique larger than `q` makes
/// the answer NO (returned as `K_{q+1}` with every vertex in the modulator),
/// otherwise `t = q` is used. The pipeline extracts the constraints on
/// `G[X]`, kernelizes them and rebuilds one clique per surviving tuple.
pub fn kernelize_cliquekv(inst: &CliqueKvInstance, q: usize, t: Option<usize>) -> Result<CliqueKvKernel, ReductionError> {
    if q < 3 {
        return Err(ReductionError::TooFewColors { q, need: 3 });
    }
    let bound = t.unwrap_or(q);
    check_bound(q, bound)?;
    if t.is_none() && inst.max_clique() > q {
        let instance = CliqueKvInstance::new(Graph::complete(q + 1), (0..=q).collect())?;
        let mut report = ReductionReport::new("kernelize_cliquekv", "k", inst.k());
        report.output_vertices = q + 1;
        report.output_parameter = q + 1;
        return Ok(CliqueKvKernel { instance, report, t: bound, blocks: Vec::new(), decided_no: true });
    }
    let extracted = extract_clique_constraints(inst, q, bound)?;
    let kernel = kernelize_gurfc(&extracted.instance, q)?;
    let rebuilt = gurfc_to_cliquekv(&kernel.instance, q)?;
    let mut report = rebuilt.report;
    report.reduction = "kernelize_cliquekv";
    report.parameter = "k";
    report.input_parameter = inst.k();
    report.bound = None;
    Ok(CliqueKvKernel { instance: rebuilt.instance, report, t: bound, blocks: kernel.blocks, decided_no: false })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::{extend_to_cliques, find_graph_qcol, is_uniformly_rainbow, solve_graph_qcol};
    use crate::util::next_tuple;
    use crate::{Color, Limits};

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v).unwrap();
        }
        g
    }

    #[test]
    fn single_vertex_with_three_neighbors() {
        let g = graph(4, &[(3, 0), (3, 1), (3, 2)]);
        let inst = CliqueKvInstance::new(g, vec![0, 1, 2]).unwrap();
        let out = extract_clique_constraints(&inst, 3, 1).unwrap();
        assert_eq!(out.instance.blocks.len(), 1);
        assert_eq!(out.instance.blocks[0].tuples().collect::<Vec<_>>(), vec![&[0, 1, 2][..]]);
    }

    #[test]
    fn few_neighbors_contribute_nothing() {
        let g = graph(3, &[(2, 0), (2, 1)]);
        let inst = CliqueKvInstance::new(g, vec![0, 1]).unwrap();
        let out = extract_clique_constraints(&inst, 3, 1).unwrap();
        assert!(out.instance.blocks[0].is_empty());
    }

    #[test]
    fn clique_above_bound_is_rejected() {
        let g = graph(3, &[(1, 2)]);
        let inst = CliqueKvInstance::new(g, vec![0]).unwrap();
        assert!(extract_clique_constraints(&inst, 3, 1).is_err());
    }

    #[test]
    fn extension_matches_rainbow_tuples() {
        // X = {0,1,2,3}; cliques {4,5} and {6}.
        let g = graph(
            7,
            &[(0, 1), (4, 5), (4, 0), (4, 1), (4, 2), (5, 1), (5, 2), (5, 3), (6, 0), (6, 2), (6, 3)],
        );
        let inst = CliqueKvInstance::new(g, vec![0, 1, 2, 3]).unwrap();
        let q = 3;
        let ext = extract_clique_constraints(&inst, q, 2).unwrap().instance;
        let mut c: Vec<Color> = vec![1; 4];
        loop {
            if ext.graph.is_proper(&c) {
                let rainbow = ext
                    .blocks
                    .iter()
                    .any(|b| b.tuples().any(|tu| is_uniformly_rainbow(tu, b.d(), &c)));
                let extends = extend_to_cliques(&inst, q, &c).unwrap().is_some();
                assert_eq!(extends, !rainbow, "{c:?}");
            }
            if !next_tuple(&mut c, q) {
                break;
            }
        }
    }

    #[test]
    fn round_trip_and_kernel_preserve_colorability() {
        let g = graph(4, &[(0, 1), (1, 2)]);
        let mut b1 = UrfcBlock::new(3, 1);
        b1.insert(&[vec![0, 1, 3]]).unwrap();
        let mut b2 = UrfcBlock::new(2, 2);
        b2.insert(&[vec![0, 2], vec![1, 3]]).unwrap();
        let gurfc = GurfcInstance::new(g, vec![b1, b2]).unwrap();
        let built = gurfc_to_cliquekv(&gurfc, 3).unwrap();
        assert_eq!(built.instance.k(), 4);
        assert_eq!(built.report.output_vertices, 4 + 1 + 2);
        let back = extract_clique_constraints(&built.instance, 3, 2).unwrap().instance;
        let limits = Limits::default();
        assert_eq!(
            crate::oracles::solve_gurfc(&back, 3, &limits).unwrap(),
            crate::oracles::solve_gurfc(&gurfc, 3, &limits).unwrap()
        );
        let k = kernelize_cliquekv(&built.instance, 3, Some(2)).unwrap();
        assert_eq!(
            find_graph_qcol(k.instance.graph(), 3, &limits).unwrap().is_some(),
            !solve_graph_qcol(built.instance.graph(), 3, &limits).unwrap().is_empty()
        );
    }

    #[test]
    fn oversized_clique_without_bound_is_no() {
        let inst = CliqueKvInstance::new(Graph::complete(4), vec![]).unwrap();
        let k = kernelize_cliquekv(&inst, 3, None).unwrap();
        assert!(k.decided_no);
        assert!(find_graph_qcol(k.instance.graph(), 3, &Limits::default()).unwrap().is_none());
        assert!(kernelize_cliquekv(&inst, 3, Some(3)).is_err());
    }

    #[test]
    fn empty_outside_keeps_modulator_graph() {
        let g = graph(3, &[(0, 1)]);
        let inst = CliqueKvInstance::new(g.clone(), vec![0, 1, 2]).unwrap();
        let k = kernelize_cliquekv(&inst, 3, Some(2)).unwrap();
        assert_eq!(k.instance.graph(), &g);
        assert_eq!(k.instance.modulator(), &[0, 1, 2]);
    }
}
