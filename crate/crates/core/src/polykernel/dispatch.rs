//! Kernels for URFC and GURFC instances, dispatched on the shape's exponent.

use std::fmt::Write;

use super::{build_capture, kernelize_poly, BasisStats, KernelError, PrimeField};
use crate::instances::{Graph, GurfcInstance, UrfcBlock, UrfcInstance, Vertex};
use crate::relations::{EtaCase, UrfcShape};

/// How a block was reduced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KernelMethod {
    /// Duplicate removal only; canonical instances are already duplicate free.
    Deduplicate,
    /// Polynomial-basis selection.
    Basis(BasisStats),
    /// Solved outright; the output is a constant-size instance with this answer.
    Decided { yes: bool },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelMeta {
    pub shape: UrfcShape,
    pub eta: usize,
    pub case: EtaCase,
    pub method: KernelMethod,
    pub n: usize,
    pub input_tuples: usize,
    pub output_tuples: usize,
}

impl KernelMeta {
    /// `key=value` pairs for output headers and reports.
    pub fn fields(&self) -> Vec<(String, String)> {
        let s = self.shape;
        let mut out: Vec<(String, String)> = vec![
            ("shape".into(), format!("{},{},{}", s.d, s.l, s.q)),
            ("eta".into(), self.eta.to_string()),
            ("case".into(), format!("{:?}", self.case).to_lowercase()),
            ("input_tuples".into(), self.input_tuples.to_string()),
            ("output_tuples".into(), self.output_tuples.to_string()),
        ];
        match &self.method {
            KernelMethod::Deduplicate => out.push(("method".into(), "dedup".into())),
            KernelMethod::Decided { yes } => {
                out.push(("method".into(), "decided".into()));
                out.push(("answer".into(), if *yes { "yes" } else { "no" }.into()));
            }
            KernelMethod::Basis(b) => {
                // Each kept tuple costs d*l vertex ids of ceil(log2 n) bits.
                let id_bits = usize::BITS - self.n.max(2).saturating_sub(1).leading_zeros();
                let adjacency_bits = self.n * self.n.saturating_sub(1) / 2;
                out.extend([
                    ("method".into(), "basis".into()),
                    ("field_modulus".into(), b.modulus.to_string()),
                    ("capture_item".into(), b.item.index().to_string()),
                    ("vector_len".into(), b.m.to_string()),
                    ("degree".into(), b.degree.to_string()),
                    ("basis_size".into(), b.basis_size.to_string()),
                    ("binomial_bound".into(), b.bound.to_string()),
                    ("adjacency_bits".into(), adjacency_bits.to_string()),
                    ("bits_per_tuple".into(), (s.d * s.l * id_bits as usize).to_string()),
                ]);
            }
        }
        out
    }

    /// The fields as `# key=value` comment lines.
    pub fn header(&self) -> String {
        let mut out = String::new();
        for (k, v) in self.fields() {
            let _ = writeln!(out, "# {k}={v}");
        }
        out
    }

    /// Whether the output has the same solution set as the input
    /// (rather than only the same answer).
    pub fn preserves_solutions(&self) -> bool {
        !matches!(self.method, KernelMethod::Decided { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UrfcKernel {
    pub instance: UrfcInstance,
    pub meta: KernelMeta,
}

fn is_bipartite(g: &Graph) -> bool {
    let mut side = vec![u8::MAX; g.n()];
    for s in 0..g.n() {
        if side[s] != u8::MAX {
            continue;
        }
        side[s] = 0;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if side[w] == u8::MAX {
                    side[w] = 1 - side[u];
                    stack.push(w);
                } else if side[w] == side[u] {
                    return false;
                }
            }
        }
    }
    true
}

fn find(parent: &mut [Vertex], v: Vertex) -> Vertex {
    let mut root = v;
    while parent[root] != root {
        root = parent[root];
    }
    let mut v = v;
    while parent[v] != root {
        let next = parent[v];
        parent[v] = root;
        v = next;
    }
    root
}

/// Decides the shapes with exponent 0 in polynomial time.
fn decide_trivial(inst: &UrfcInstance, q: usize) -> bool {
    let g = &inst.graph;
    let block = &inst.block;
    if q == 1 {
        // Only d = 1 is possible and every singleton tuple is uniformly rainbow.
        return g.m() == 0 && block.is_empty();
    }
    match (block.d(), block.l()) {
        (1, 1) => block.is_empty() && is_bipartite(g),
        (1, 2) => {
            // ({x}, {y}) forbids c(x) = c(y): an edge.
            let mut h = g.clone();
            for t in block.tuples() {
                if t[0] == t[1] {
                    return false;
                }
                h.ensure_edge(t[0], t[1]);
            }
            is_bipartite(&h)
        }
        (2, 1) => {
            // ({x, y}) forbids c(x) != c(y) with two colors: merge x and y.
            let mut parent: Vec<Vertex> = (0..g.n()).collect();
            for t in block.tuples() {
                let (a, b) = (find(&mut parent, t[0]), find(&mut parent, t[1]));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
            let mut h = Graph::new(g.n());
            for (u, v) in g.edges() {
                let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                if a == b {
                    return false;
                }
                h.ensure_edge(a, b);
            }
            is_bipartite(&h)
        }
        _ => unreachable!("exponent 0 with q = 2 needs d*l <= 2"),
    }
}

/// Constant-size instance of the block's shape with the given answer.
fn constant_instance(d: usize, l: usize, q: usize, yes: bool) -> UrfcInstance {
    let graph = if yes { Graph::new(1) } else { Graph::complete(q + 1) };
    UrfcInstance::new(graph, UrfcBlock::new(d, l)).expect("empty block")
}

/// Kernel for a URFC instance with `q` colors.
///
/// For exponent at least 2 the output keeps the graph and a subset of the
/// tuples with the same solution set. For exponent 0 the instance is solved
/// and replaced by a constant-size instance with the same answer.
pub fn kernelize_urfc(inst: &UrfcInstance, q: usize) -> Result<UrfcKernel, KernelError> {
    let (d, l) = (inst.block.d(), inst.block.l());
    let shape = UrfcShape::new(d, l, q)?;
    let case = shape.eta_case();
    let (instance, method) = match case {
        EtaCase::Full | EtaCase::Quadratic => (inst.clone(), KernelMethod::Deduplicate),
        EtaCase::OneBelow | EtaCase::DropRow => {
            let cp = build_capture(d, l, q, PrimeField::at_least(q))?;
            let (k, stats) = kernelize_poly(inst, &cp)?;
            (k, KernelMethod::Basis(stats))
        }
        EtaCase::Trivial => {
            let yes = decide_trivial(inst, q);
            (constant_instance(d, l, q, yes), KernelMethod::Decided { yes })
        }
    };
    let meta = KernelMeta {
        shape,
        eta: shape.eta(),
        case,
        method,
        n: inst.n(),
        input_tuples: inst.block.len(),
        output_tuples: instance.block.len(),
    };
    Ok(UrfcKernel { instance, meta })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GurfcKernel {
    pub instance: GurfcInstance,
    /// One entry per block.
    pub blocks: Vec<KernelMeta>,
}

/// Applies [`kernelize_urfc`] to every block; each block must have exponent at least 2.
pub fn kernelize_gurfc(inst: &GurfcInstance, q: usize) -> Result<GurfcKernel, KernelError> {
    for (i, b) in inst.blocks.iter().enumerate() {
        let eta = UrfcShape::new(b.d(), b.l(), q)?.eta();
        if eta < 2 {
            return Err(KernelError::ExponentTooSmall { block: i, d: b.d(), l: b.l(), q, eta });
        }
    }
    let mut blocks = Vec::with_capacity(inst.blocks.len());
    let mut metas = Vec::with_capacity(inst.blocks.len());
    for b in &inst.blocks {
        let single = UrfcInstance::new(inst.graph.clone(), b.clone()).expect("block of a valid instance");
        let k = kernelize_urfc(&single, q)?;
        blocks.push(k.instance.block);
        metas.push(k.meta);
    }
    let instance = GurfcInstance::new(inst.graph.clone(), blocks).expect("subsets of valid blocks");
    Ok(GurfcKernel { instance, blocks: metas })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::{find_urfc, solve_gurfc, solve_urfc};
    use crate::Limits;

    fn lim() -> Limits {
        Limits::default()
    }

    fn block(d: usize, l: usize, tuples: &[&[usize]]) -> UrfcBlock {
        let mut b = UrfcBlock::new(d, l);
        for t in tuples {
            let sets: Vec<Vec<usize>> = t.chunks(d).map(<[usize]>::to_vec).collect();
            b.insert(&sets).unwrap();
        }
        b
    }

    #[test]
    fn dedup_shapes_are_unchanged() {
        let inst = UrfcInstance::new(Graph::new(3), block(1, 2, &[&[0, 1], &[1, 2]])).unwrap();
        let k = kernelize_urfc(&inst, 3).unwrap();
        assert_eq!(k.meta.method, KernelMethod::Deduplicate);
        assert_eq!(k.meta.eta, 2);
        assert_eq!(k.instance, inst);
    }

    #[test]
    fn basis_shape_keeps_solutions() {
        let mut g = Graph::new(5);
        g.add_edge(0, 4).unwrap();
        let all: Vec<Vec<usize>> = crate::util::combinations(&[0, 1, 2, 3, 4], 2);
        let mut b = UrfcBlock::new(2, 2);
        for s in &all {
            for t in &all {
                b.insert(&[s.clone(), t.clone()]).unwrap();
            }
        }
        let inst = UrfcInstance::new(g, b).unwrap();
        let k = kernelize_urfc(&inst, 3).unwrap();
        let KernelMethod::Basis(stats) = &k.meta.method else { panic!() };
        assert_eq!(stats.item.index(), 3);
        assert!((k.instance.block.len() as u128) <= stats.bound);
        assert!(k.instance.block.len() < inst.block.len());
        assert_eq!(solve_urfc(&inst, 3, &lim()).unwrap(), solve_urfc(&k.instance, 3, &lim()).unwrap());
        let again = kernelize_urfc(&k.instance, 3).unwrap();
        assert_eq!(again.instance, k.instance);
        assert!(k.meta.header().contains("# field_modulus=3\n"));
    }

    #[test]
    fn trivial_shapes_are_decided() {
        let cases: Vec<(UrfcInstance, usize)> = vec![
            // (2,1,2): merging 0 and 1 across the edge 0-1 is impossible.
            (UrfcInstance::new(Graph::complete(2), block(2, 1, &[&[0, 1]])).unwrap(), 2),
            (UrfcInstance::new(Graph::complete(2), block(2, 1, &[])).unwrap(), 2),
            (UrfcInstance::new(Graph::new(3), block(2, 1, &[&[0, 1], &[1, 2]])).unwrap(), 2),
            // (1,2,2): constraints act as edges; a triangle is not 2-colorable.
            (UrfcInstance::new(Graph::new(3), block(1, 2, &[&[0, 1], &[1, 2], &[0, 2]])).unwrap(), 2),
            (UrfcInstance::new(Graph::new(3), block(1, 2, &[&[0, 1], &[1, 1]])).unwrap(), 2),
            (UrfcInstance::new(Graph::new(2), block(1, 2, &[&[0, 1]])).unwrap(), 2),
            (UrfcInstance::new(Graph::new(2), block(1, 1, &[&[0]])).unwrap(), 2),
            (UrfcInstance::new(Graph::complete(2), block(1, 1, &[])).unwrap(), 2),
            (UrfcInstance::new(Graph::new(2), block(1, 3, &[])).unwrap(), 1),
            (UrfcInstance::new(Graph::new(2), block(1, 3, &[&[0, 1, 1]])).unwrap(), 1),
            (UrfcInstance::new(Graph::complete(2), block(1, 1, &[])).unwrap(), 1),
        ];
        for (inst, q) in cases {
            let k = kernelize_urfc(&inst, q).unwrap();
            let KernelMethod::Decided { yes } = k.meta.method else { panic!() };
            let truth = find_urfc(&inst, q, &lim()).unwrap().is_some();
            assert_eq!(yes, truth, "{inst:?}");
            assert_eq!(find_urfc(&k.instance, q, &lim()).unwrap().is_some(), truth);
            assert!(k.instance.n() <= 3);
        }
    }

    #[test]
    fn gurfc_requires_exponent_two() {
        let g = GurfcInstance::new(Graph::new(3), vec![block(1, 1, &[])]).unwrap();
        assert!(matches!(kernelize_gurfc(&g, 2), Err(KernelError::ExponentTooSmall { .. })));
        let g = GurfcInstance::new(
            Graph::new(4),
            vec![block(2, 2, &[&[0, 1, 2, 3], &[0, 2, 1, 3]]), block(1, 2, &[&[0, 1]])],
        )
        .unwrap();
        let k = kernelize_gurfc(&g, 3).unwrap();
        assert_eq!(k.blocks.len(), 2);
        assert_eq!(solve_gurfc(&g, 3, &lim()).unwrap(), solve_gurfc(&k.instance, 3, &lim()).unwrap());
    }
}
