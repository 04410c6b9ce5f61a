//! Depth-first search over colorings with list pruning.
//!
//! Each vertex keeps a domain of still-possible colors. Assigning a vertex
//! removes its color from uncolored neighbors and, for every constraint left
//! with a single uncolored vertex, filters that vertex's domain down to the
//! colors that satisfy the constraint. Constraints are checked in full once
//! all of their vertices are colored. The next vertex is the uncolored one
//! with the smallest domain, lowest index first.

use crate::instances::{ColorSet, Graph, Vertex};
use crate::limits::Needed;
use crate::{BudgetExceeded, Color, Limits};

pub(crate) struct Problem<'a, F> {
    pub graph: &'a Graph,
    pub domains: Vec<ColorSet>,
    /// Vertices of each constraint (repeats allowed).
    pub scopes: &'a [Vec<Vertex>],
    /// `check(i, colors)` decides constraint `i` once its scope is colored.
    pub check: F,
}

struct Search<'a, F> {
    graph: &'a Graph,
    scopes: &'a [Vec<Vertex>],
    check: F,
    incidence: Vec<Vec<usize>>,
    uncolored: Vec<usize>,
    domains: Vec<ColorSet>,
    colors: Vec<Color>,
    nodes: u64,
    budget: u64,
    first_only: bool,
    found: Vec<Vec<Color>>,
}

/// Returns every solution in lexicographic order, or just the first one found.
pub(crate) fn run<F>(problem: Problem<'_, F>, limits: &Limits, first_only: bool) -> Result<Vec<Vec<Color>>, BudgetExceeded>
where
    F: Fn(usize, &[Color]) -> bool,
{
    let n = problem.graph.n();
    let mut incidence = vec![Vec::new(); n];
    let mut uncolored = Vec::with_capacity(problem.scopes.len());
    for (i, scope) in problem.scopes.iter().enumerate() {
        let mut distinct = scope.clone();
        distinct.sort_unstable();
        distinct.dedup();
        for &v in &distinct {
            incidence[v].push(i);
        }
        uncolored.push(distinct.len());
    }
    let mut s = Search {
        graph: problem.graph,
        scopes: problem.scopes,
        check: problem.check,
        incidence,
        uncolored,
        domains: problem.domains,
        colors: vec![0; n],
        nodes: 0,
        budget: limits.search_nodes,
        first_only,
        found: Vec::new(),
    };
    // Constraints with an empty scope, or those already decided, are settled up front.
    for i in 0..s.scopes.len() {
        if s.uncolored[i] == 0 && !(s.check)(i, &s.colors) {
            return Ok(Vec::new());
        }
    }
    let mut trail = Vec::new();
    for i in 0..s.scopes.len() {
        if s.uncolored[i] == 1 && !s.filter_last(i, &mut trail) {
            return Ok(Vec::new());
        }
    }
    s.dfs(0)?;
    let mut found = s.found;
    found.sort_unstable();
    Ok(found)
}

impl<F: Fn(usize, &[Color]) -> bool> Search<'_, F> {
    fn dfs(&mut self, colored: usize) -> Result<bool, BudgetExceeded> {
        let n = self.colors.len();
        if colored == n {
            self.found.push(self.colors.clone());
            return Ok(self.first_only);
        }
        let v = (0..n)
            .filter(|&v| self.colors[v] == 0)
            .min_by_key(|&v| self.domains[v].len())
            .expect("an uncolored vertex remains");
        for c in self.domains[v].iter() {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(BudgetExceeded {
                    what: "searching colorings",
                    needed: Needed::AtLeast(self.budget),
                    budget: self.budget,
                });
            }
            let mut trail: Vec<(Vertex, ColorSet)> = Vec::new();
            self.colors[v] = c;
            let ok = self.propagate(v, c, &mut trail);
            let stop = ok && self.dfs(colored + 1)?;
            self.colors[v] = 0;
            for &i in &self.incidence[v] {
                self.uncolored[i] += 1;
            }
            for (w, dom) in trail.into_iter().rev() {
                self.domains[w] = dom;
            }
            if stop {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Updates domains after coloring `v` with `c`. Always decrements the
    /// counters of every constraint on `v` so that undo is uniform.
    fn propagate(&mut self, v: Vertex, c: Color, trail: &mut Vec<(Vertex, ColorSet)>) -> bool {
        for &i in &self.incidence[v] {
            self.uncolored[i] -= 1;
        }
        for &w in self.graph.neighbors(v) {
            if self.colors[w] == 0 && self.domains[w].contains(c) {
                trail.push((w, self.domains[w]));
                self.domains[w].remove(c);
                if self.domains[w].is_empty() {
                    return false;
                }
            }
        }
        for k in 0..self.incidence[v].len() {
            let i = self.incidence[v][k];
            match self.uncolored[i] {
                0 => {
                    if !(self.check)(i, &self.colors) {
                        return false;
                    }
                }
                1 => {
                    if !self.filter_last(i, trail) {
                        return false;
                    }
                }
                _ => {}
            }
        }
        true
    }

    /// Restricts the only uncolored vertex of constraint `i` to satisfying colors.
    fn filter_last(&mut self, i: usize, trail: &mut Vec<(Vertex, ColorSet)>) -> bool {
        let w = *self.scopes[i]
            .iter()
            .find(|&&w| self.colors[w] == 0)
            .expect("constraint has one uncolored vertex");
        let before = self.domains[w];
        let mut after = ColorSet::EMPTY;
        for c in before.iter() {
            self.colors[w] = c;
            if (self.check)(i, &self.colors) {
                after.insert(c);
            }
        }
        self.colors[w] = 0;
        if after != before {
            trail.push((w, before));
            self.domains[w] = after;
        }
        !after.is_empty()
    }
}
