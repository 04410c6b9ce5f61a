//! Seeded random instances.
//!
//! All randomness comes from [`rng`], a ChaCha8 stream seeded with a single
//! `u64`, so an instance is a pure function of its parameters and the seed.
//! Densities are probabilities in `[0, 1]`: each candidate edge or tuple is
//! kept independently with that probability.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::instances::{
    CliqueKvInstance, CnfFormula, Graph, GurfcInstance, Hypergraph, ListAssignment, RccInstance, RclcInstance, UrfcBlock,
    UrfcInstance, Vertex,
};
use crate::instances::{ColorSet, Literal};
use crate::relations::Relation;
use crate::util::combinations;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `G(n, p)`.
pub fn random_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                g.ensure_edge(u, v);
            }
        }
    }
    g
}

/// `l`-uniform hypergraph keeping each `l`-subset with probability `p`.
pub fn random_hypergraph<R: Rng>(n: usize, l: usize, p: f64, rng: &mut R) -> Hypergraph {
    let vertices: Vec<Vertex> = (0..n).collect();
    let mut h = Hypergraph::new(n);
    for e in combinations(&vertices, l) {
        if rng.random_bool(p) {
            h.insert_edge(e).expect("distinct vertices in range");
        }
    }
    h
}

/// Every canonical `l`-tuple of `d`-subsets of `0..n`, flattened, in canonical order.
pub fn all_urfc_tuples(n: usize, d: usize, l: usize) -> Vec<Vec<Vertex>> {
    let vertices: Vec<Vertex> = (0..n).collect();
    let sets = combinations(&vertices, d);
    let mut out = Vec::new();
    if sets.is_empty() {
        return out;
    }
    // Nondecreasing index sequences give sorted multisets of sets.
    let mut idx = vec![0usize; l];
    loop {
        out.push(idx.iter().flat_map(|&i| sets[i].iter().copied()).collect());
        let Some(p) = (0..l).rev().find(|&p| idx[p] + 1 < sets.len()) else {
            break;
        };
        let next = idx[p] + 1;
        for slot in &mut idx[p..] {
            *slot = next;
        }
    }
    out
}

/// A `(d, l)` block keeping each canonical tuple with probability `density`.
pub fn random_block<R: Rng>(n: usize, d: usize, l: usize, density: f64, rng: &mut R) -> UrfcBlock {
    let mut block = UrfcBlock::new(d, l);
    for t in all_urfc_tuples(n, d, l) {
        if rng.random_bool(density) {
            block.insert_flat(t);
        }
    }
    block
}

pub fn random_urfc<R: Rng>(n: usize, d: usize, l: usize, edge_p: f64, density: f64, rng: &mut R) -> UrfcInstance {
    let g = random_graph(n, edge_p, rng);
    let block = random_block(n, d, l, density, rng);
    UrfcInstance::new(g, block).expect("tuples over 0..n")
}

pub fn random_gurfc<R: Rng>(n: usize, shapes: &[(usize, usize)], edge_p: f64, density: f64, rng: &mut R) -> GurfcInstance {
    let g = random_graph(n, edge_p, rng);
    let blocks = shapes.iter().map(|&(d, l)| random_block(n, d, l, density, rng)).collect();
    GurfcInstance::new(g, blocks).expect("tuples over 0..n")
}

/// `m` clauses, each on `k` distinct variables out of `n` with random signs.
pub fn random_cnf<R: Rng>(n: usize, m: usize, k: usize, rng: &mut R) -> CnfFormula {
    assert!(k <= n, "clause width {k} exceeds {n} variables");
    let clauses = (0..m)
        .map(|_| {
            let vars = sample(rng, n, k).into_vec();
            vars.into_iter()
                .map(|i| {
                    let v = i as Literal + 1;
                    if rng.random_bool(0.5) {
                        v
                    } else {
                        -v
                    }
                })
                .collect()
        })
        .collect();
    CnfFormula::new(n, clauses).expect("distinct variables in range")
}

/// Modulator `0..k` with edges of probability `edge_p`, followed by
/// `cliques` cliques of random size in `1..=t`, each outside vertex joined to
/// each modulator vertex with probability `attach_p`.
pub fn random_cliquekv<R: Rng>(k: usize, t: usize, cliques: usize, edge_p: f64, attach_p: f64, rng: &mut R) -> CliqueKvInstance {
    let mut g = random_graph(k, edge_p, rng);
    for _ in 0..cliques {
        let size = rng.random_range(1..=t.max(1));
        let vs: Vec<Vertex> = (0..size).map(|_| g.add_vertex()).collect();
        for (i, &v) in vs.iter().enumerate() {
            for &w in &vs[..i] {
                g.ensure_edge(w, v);
            }
            for x in 0..k {
                if rng.random_bool(attach_p) {
                    g.ensure_edge(x, v);
                }
            }
        }
    }
    CliqueKvInstance::new(g, (0..k).collect()).expect("cliques attached only to the modulator")
}

fn random_constraints<R: Rng>(n: usize, arity: usize, m: usize, rng: &mut R) -> Vec<Vec<Vertex>> {
    (0..m).map(|_| (0..arity).map(|_| rng.random_range(0..n)).collect()).collect()
}

/// `m` constraints with uniformly random scopes (repeats allowed).
pub fn random_rcc<R: Rng>(n: usize, rel: &Relation, edge_p: f64, m: usize, rng: &mut R) -> RccInstance {
    let g = random_graph(n, edge_p, rng);
    let cs = if n == 0 { Vec::new() } else { random_constraints(n, rel.arity(), m, rng) };
    RccInstance::new(g, rel.clone(), cs).expect("scopes over 0..n")
}

/// As [`random_rcc`], plus lists that keep each color with probability
/// `list_p` (never empty).
pub fn random_rclc<R: Rng>(n: usize, rel: &Relation, edge_p: f64, m: usize, list_p: f64, rng: &mut R) -> RclcInstance {
    let base = random_rcc(n, rel, edge_p, m, rng);
    let q = rel.q();
    let lists = (0..n)
        .map(|_| {
            let mut s: ColorSet = (1..=q as crate::Color).filter(|_| rng.random_bool(list_p)).collect();
            if s.is_empty() {
                s.insert(rng.random_range(1..=q as crate::Color));
            }
            s
        })
        .collect();
    let lists = ListAssignment::new(q, lists).expect("colors in 1..=q");
    RclcInstance::new(base.graph, base.relation, lists, base.constraints).expect("same scopes")
}
