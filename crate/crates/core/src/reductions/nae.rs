use std::fmt;
use std::str::FromStr;

use super::{Reduced, ReductionError, ReductionReport};
use crate::instances::{CnfFormula, Graph, Literal, UrfcBlock, UrfcInstance, Vertex};
use crate::Color;

/// Which tuple shape [`nae_to_urfc`] emits per clause.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NaeVariant {
    /// `({y_1}, …, {y_k})`, shape `(1, k)`.
    Singletons,
    /// `({y_1, ¬y_2}, …, {y_1, ¬y_k})`, shape `(2, k-1)`.
    Pairs,
}

impl NaeVariant {
    pub fn name(self) -> &'static str {
        match self {
            NaeVariant::Singletons => "singletons",
            NaeVariant::Pairs => "pairs",
        }
    }

    pub fn shape(self, k: usize) -> (usize, usize) {
        match self {
            NaeVariant::Singletons => (1, k),
            NaeVariant::Pairs => (2, k - 1),
        }
    }
}

impl fmt::Display for NaeVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NaeVariant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "singletons" => Ok(NaeVariant::Singletons),
            "pairs" => Ok(NaeVariant::Pairs),
            _ => Err(format!("unknown variant {s:?} (expected singletons or pairs)")),
        }
    }
}

/// Vertex `i` is the literal `x_{i+1}`, vertex `n + i` its negation.
fn literal_vertex(lit: Literal, n: usize) -> Vertex {
    let i = lit.unsigned_abs() as usize - 1;
    if lit > 0 {
        i
    } else {
        n + i
    }
}

fn negate(v: Vertex, n: usize) -> Vertex {
    if v < n {
        v + n
    } else {
        v - n
    }
}

/// Truth assignment of a 2-coloring of the output: color 1 means true.
pub fn nae_assignment(coloring: &[Color], n: usize) -> Vec<bool> {
    coloring[..n].iter().map(|&c| c == 1).collect()
}

/// Encodes NAE-satisfiability of a `k`-CNF formula as URFC with two colors.
///
/// The graph is the perfect matching between each literal and its negation.
/// Every clause must have exactly `k >= 2` literals.
pub fn nae_to_urfc(formula: &CnfFormula, k: usize, variant: NaeVariant) -> Result<Reduced<UrfcInstance>, ReductionError> {
    if k < 2 {
        return Err(ReductionError::WidthTooSmall(k));
    }
    for (i, clause) in formula.clauses().iter().enumerate() {
        if clause.len() != k {
            return Err(ReductionError::WidthMismatch { clause: i, width: clause.len(), k });
        }
    }
    let n = formula.n();
    let mut g = Graph::new(2 * n);
    for i in 0..n {
        g.ensure_edge(i, n + i);
    }
    let (d, l) = variant.shape(k);
    let mut block = UrfcBlock::new(d, l);
    for clause in formula.clauses() {
        let y: Vec<Vertex> = clause.iter().map(|&lit| literal_vertex(lit, n)).collect();
        let sets: Vec<Vec<Vertex>> = match variant {
            NaeVariant::Singletons => y.iter().map(|&v| vec![v]).collect(),
            NaeVariant::Pairs => y[1..].iter().map(|&v| vec![y[0], negate(v, n)]).collect(),
        };
        block.insert(&sets)?;
    }
    let mut report = ReductionReport::new("nae_to_urfc", "n", n);
    report.count("matching_edge", n);
    report.count("clause_tuple", block.len());
    report.output_vertices = 2 * n;
    report.output_parameter = 2 * n;
    report.bound = Some((2, 0));
    let instance = UrfcInstance::new(g, block)?;
    Ok(Reduced { instance, report })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::{solve_cnf, solve_urfc, CnfMode};
    use crate::Limits;

    #[test]
    fn one_clause_counts_match() {
        let phi = CnfFormula::new(3, vec![vec![1, 2, 3]]).unwrap();
        let nae = solve_cnf(&phi, CnfMode::Nae, &Limits::default()).unwrap();
        assert_eq!(nae.len(), 6);
        for variant in [NaeVariant::Singletons, NaeVariant::Pairs] {
            let out = nae_to_urfc(&phi, 3, variant).unwrap();
            assert_eq!((out.instance.graph.n(), out.instance.graph.m()), (6, 3));
            let sols = solve_urfc(&out.instance, 2, &Limits::default()).unwrap();
            let mut decoded: Vec<_> = sols.colorings().iter().map(|c| nae_assignment(c, 3)).collect();
            decoded.sort();
            let mut expected = nae.clone();
            expected.sort();
            assert_eq!(decoded, expected, "{variant}");
        }
    }

    #[test]
    fn width_two_pairs_are_single_sets() {
        let phi = CnfFormula::new(2, vec![vec![1, -2]]).unwrap();
        let out = nae_to_urfc(&phi, 2, NaeVariant::Pairs).unwrap();
        assert_eq!((out.instance.block.d(), out.instance.block.l()), (2, 1));
        // ({x1, ¬¬x2}) = ({x1, x2}) at vertices 0 and 1.
        assert!(out.instance.block.contains(&[0, 1]));
        let nae = solve_cnf(&phi, CnfMode::Nae, &Limits::default()).unwrap();
        let sols = solve_urfc(&out.instance, 2, &Limits::default()).unwrap();
        assert_eq!(sols.len(), nae.len());
    }

    #[test]
    fn rejects_bad_widths() {
        let phi = CnfFormula::new(3, vec![vec![1, 2, 3]]).unwrap();
        assert_eq!(nae_to_urfc(&phi, 1, NaeVariant::Singletons), Err(ReductionError::WidthTooSmall(1)));
        assert!(matches!(nae_to_urfc(&phi, 2, NaeVariant::Pairs), Err(ReductionError::WidthMismatch { .. })));
        assert_eq!("pairs".parse::<NaeVariant>(), Ok(NaeVariant::Pairs));
        assert!("both".parse::<NaeVariant>().is_err());
    }
}
