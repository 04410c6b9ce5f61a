//! Exhaustive ground-truth solvers.
//!
//! Every solver returns the complete set of solutions (or, in the `find_*`
//! variants, the first one reached). Search effort is capped by
//! [`Limits::search_nodes`]; running out is an error, never a partial answer.

mod cliques;
mod search;

use thiserror::Error;

use crate::instances::{
    CnfFormula, ColorSet, Graph, GurfcInstance, Hypergraph, RccInstance, RclcInstance, UrfcBlock, UrfcInstance,
    Vertex,
};
use crate::{BudgetExceeded, Color, Limits, MAX_COLORS};
use search::Problem;

pub use cliques::extend_to_cliques;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
    #[error("{q} colors exceed the supported maximum of {MAX_COLORS}")]
    TooManyColors { q: usize },
    #[error("invalid partial coloring: {0}")]
    BadColoring(String),
}

/// All solutions of an instance, sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SolutionSet {
    q: usize,
    colorings: Vec<Vec<Color>>,
}

impl SolutionSet {
    pub fn q(&self) -> usize {
        self.q
    }

    pub fn len(&self) -> usize {
        self.colorings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colorings.is_empty()
    }

    pub fn colorings(&self) -> &[Vec<Color>] {
        &self.colorings
    }

    pub fn contains(&self, coloring: &[Color]) -> bool {
        self.colorings.binary_search_by(|c| c.as_slice().cmp(coloring)).is_ok()
    }
}

fn palette(q: usize) -> Result<ColorSet, OracleError> {
    if q > MAX_COLORS {
        return Err(OracleError::TooManyColors { q });
    }
    Ok(ColorSet::full(q))
}

fn solve<F>(
    graph: &Graph,
    domains: Vec<ColorSet>,
    scopes: &[Vec<Vertex>],
    check: F,
    limits: &Limits,
    first_only: bool,
) -> Result<Vec<Vec<Color>>, OracleError>
where
    F: Fn(usize, &[Color]) -> bool,
{
    let problem = Problem { graph, domains, scopes, check };
    Ok(search::run(problem, limits, first_only)?)
}

fn rcc_search(inst: &RccInstance, domains: Vec<ColorSet>, limits: &Limits, first: bool) -> Result<Vec<Vec<Color>>, OracleError> {
    let rel = &inst.relation;
    let check = |i: usize, colors: &[Color]| {
        let t: Vec<Color> = inst.constraints[i].iter().map(|&v| colors[v]).collect();
        rel.contains(&t)
    };
    solve(&inst.graph, domains, &inst.constraints, check, limits, first)
}

pub fn solve_rcc(inst: &RccInstance, limits: &Limits) -> Result<SolutionSet, OracleError> {
    let domains = vec![palette(inst.q())?; inst.graph.n()];
    let colorings = rcc_search(inst, domains, limits, false)?;
    Ok(SolutionSet { q: inst.q(), colorings })
}

pub fn find_rcc(inst: &RccInstance, limits: &Limits) -> Result<Option<Vec<Color>>, OracleError> {
    let domains = vec![palette(inst.q())?; inst.graph.n()];
    Ok(rcc_search(inst, domains, limits, true)?.pop())
}

fn rclc_as_rcc(inst: &RclcInstance) -> RccInstance {
    RccInstance { graph: inst.graph.clone(), relation: inst.relation.clone(), constraints: inst.constraints.clone() }
}

pub fn solve_rclc(inst: &RclcInstance, limits: &Limits) -> Result<SolutionSet, OracleError> {
    palette(inst.q())?;
    let colorings = rcc_search(&rclc_as_rcc(inst), inst.lists.as_slice().to_vec(), limits, false)?;
    Ok(SolutionSet { q: inst.q(), colorings })
}

pub fn find_rclc(inst: &RclcInstance, limits: &Limits) -> Result<Option<Vec<Color>>, OracleError> {
    palette(inst.q())?;
    Ok(rcc_search(&rclc_as_rcc(inst), inst.lists.as_slice().to_vec(), limits, true)?.pop())
}

/// Whether every set of the tuple is rainbow and all sets use the same colors.
///
/// Works on color bitmasks, independently of the `NUR` relation encoding.
pub fn is_uniformly_rainbow(tuple: &[Vertex], d: usize, colors: &[Color]) -> bool {
    let mut common: Option<u64> = None;
    for set in tuple.chunks(d) {
        let mask = set.iter().fold(0u64, |m, &v| m | 1 << (colors[v] - 1));
        if mask.count_ones() as usize != d || common.is_some_and(|c| c != mask) {
            return false;
        }
        common = Some(mask);
    }
    true
}

fn gurfc_search(
    graph: &Graph,
    blocks: &[&UrfcBlock],
    q: usize,
    limits: &Limits,
    first: bool,
) -> Result<Vec<Vec<Color>>, OracleError> {
    let domains = vec![palette(q)?; graph.n()];
    let mut scopes = Vec::new();
    let mut widths = Vec::new();
    for b in blocks {
        for t in b.tuples() {
            scopes.push(t.to_vec());
            widths.push(b.d());
        }
    }
    let check = |i: usize, colors: &[Color]| !is_uniformly_rainbow(&scopes[i], widths[i], colors);
    solve(graph, domains, &scopes, check, limits, first)
}

pub fn solve_urfc(inst: &UrfcInstance, q: usize, limits: &Limits) -> Result<SolutionSet, OracleError> {
    let colorings = gurfc_search(&inst.graph, &[&inst.block], q, limits, false)?;
    Ok(SolutionSet { q, colorings })
}

pub fn find_urfc(inst: &UrfcInstance, q: usize, limits: &Limits) -> Result<Option<Vec<Color>>, OracleError> {
    Ok(gurfc_search(&inst.graph, &[&inst.block], q, limits, true)?.pop())
}

pub fn solve_gurfc(inst: &GurfcInstance, q: usize, limits: &Limits) -> Result<SolutionSet, OracleError> {
    let blocks: Vec<&UrfcBlock> = inst.blocks.iter().collect();
    let colorings = gurfc_search(&inst.graph, &blocks, q, limits, false)?;
    Ok(SolutionSet { q, colorings })
}

pub fn find_gurfc(inst: &GurfcInstance, q: usize, limits: &Limits) -> Result<Option<Vec<Color>>, OracleError> {
    let blocks: Vec<&UrfcBlock> = inst.blocks.iter().collect();
    Ok(gurfc_search(&inst.graph, &blocks, q, limits, true)?.pop())
}

fn hypergraph_search(h: &Hypergraph, q: usize, limits: &Limits, first: bool) -> Result<Vec<Vec<Color>>, OracleError> {
    let domains = vec![palette(q)?; h.n()];
    let scopes: Vec<Vec<Vertex>> = h.edges().map(<[Vertex]>::to_vec).collect();
    let check = |i: usize, colors: &[Color]| {
        let e = &scopes[i];
        e.iter().any(|&v| colors[v] != colors[e[0]])
    };
    solve(&Graph::new(h.n()), domains, &scopes, check, limits, first)
}

/// Colorings with no monochromatic edge.
pub fn solve_hypergraph_qcol(h: &Hypergraph, q: usize, limits: &Limits) -> Result<SolutionSet, OracleError> {
    Ok(SolutionSet { q, colorings: hypergraph_search(h, q, limits, false)? })
}

pub fn find_hypergraph_qcol(h: &Hypergraph, q: usize, limits: &Limits) -> Result<Option<Vec<Color>>, OracleError> {
    Ok(hypergraph_search(h, q, limits, true)?.pop())
}

/// All proper `q`-colorings of a graph.
pub fn solve_graph_qcol(g: &Graph, q: usize, limits: &Limits) -> Result<SolutionSet, OracleError> {
    let colorings = solve(g, vec![palette(q)?; g.n()], &[], |_, _| true, limits, false)?;
    Ok(SolutionSet { q, colorings })
}

pub fn find_graph_qcol(g: &Graph, q: usize, limits: &Limits) -> Result<Option<Vec<Color>>, OracleError> {
    Ok(solve(g, vec![palette(q)?; g.n()], &[], |_, _| true, limits, true)?.pop())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CnfMode {
    Sat,
    Nae,
}

/// Every satisfying assignment, in lexicographic order (`false < true`,
/// variable 1 most significant).
pub fn solve_cnf(f: &CnfFormula, mode: CnfMode, limits: &Limits) -> Result<Vec<Vec<bool>>, OracleError> {
    limits.check_power("enumerating truth assignments", 2, f.n())?;
    let n = f.n();
    let mut out = Vec::new();
    let mut a = vec![false; n];
    loop {
        let ok = match mode {
            CnfMode::Sat => f.satisfied_by(&a),
            CnfMode::Nae => f.nae_satisfied_by(&a),
        };
        if ok {
            out.push(a.clone());
        }
        // Binary odometer, last variable fastest.
        match a.iter().rposition(|&b| !b) {
            Some(i) => {
                a[i] = true;
                a[i + 1..].iter_mut().for_each(|b| *b = false);
            }
            None => break,
        }
    }
    Ok(out)
}

/// Direct predicate checks, used to re-verify solver output.
pub mod verify {
    use super::*;

    pub fn proper(g: &Graph, colors: &[Color], q: usize) -> bool {
        colors.len() == g.n() && colors.iter().all(|&c| c >= 1 && c as usize <= q) && g.is_proper(colors)
    }

    pub fn rcc(inst: &RccInstance, colors: &[Color]) -> bool {
        proper(&inst.graph, colors, inst.q())
            && inst.constraints.iter().all(|t| {
                let row: Vec<Color> = t.iter().map(|&v| colors[v]).collect();
                inst.relation.contains(&row)
            })
    }

    pub fn rclc(inst: &RclcInstance, colors: &[Color]) -> bool {
        rcc(&rclc_as_rcc(inst), colors)
            && colors.iter().enumerate().all(|(v, &c)| inst.lists.get(v).contains(c))
    }

    pub fn gurfc(inst: &GurfcInstance, q: usize, colors: &[Color]) -> bool {
        proper(&inst.graph, colors, q)
            && inst.blocks.iter().all(|b| b.tuples().all(|t| !is_uniformly_rainbow(t, b.d(), colors)))
    }

    pub fn urfc(inst: &UrfcInstance, q: usize, colors: &[Color]) -> bool {
        proper(&inst.graph, colors, q) && inst.block.tuples().all(|t| !is_uniformly_rainbow(t, inst.block.d(), colors))
    }
}
