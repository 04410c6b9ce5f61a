use super::{forbid_pair_gadget, ReductionError, ReductionReport};
use crate::instances::{CnfFormula, ColorSet, Graph, ListAssignment, RclcInstance, Vertex};
use crate::relations::{OrWitness, Relation};
use crate::Color;

/// Output of [`sat_to_rclc`] with the vertex layout needed to decode colorings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SatReduction {
    pub instance: RclcInstance,
    pub report: ReductionReport,
    /// `t[i][s]` is the true-side vertex of variable `i` at witness position `s`.
    pub t: Vec<Vec<Vertex>>,
    /// `f[i][s]`, adjacent to `t[i][s]`.
    pub f: Vec<Vec<Vertex>>,
    /// One vertex per relation position outside the witness, in position order.
    pub anchors: Vec<Vertex>,
    pub witness: OrWitness,
}

impl SatReduction {
    /// Reads the assignment off a solution: `x_i` is true iff `t[i][0]` took
    /// its witness alternative `beta[0]`.
    pub fn decode(&self, coloring: &[Color]) -> Vec<bool> {
        self.t.iter().map(|ts| coloring[ts[0]] == self.witness.beta[0]).collect()
    }
}

/// Encodes satisfiability of a `k`-CNF formula as an R-constrained list coloring.
///
/// `witness` must define an OR of arity `k >= 3` from `rel`, and every clause
/// must have exactly `k` literals. Literal `s` of a clause lands on witness
/// position `s`.
pub fn sat_to_rclc(formula: &CnfFormula, rel: &Relation, witness: &OrWitness) -> Result<SatReduction, ReductionError> {
    let q = rel.q();
    if q < 3 {
        return Err(ReductionError::TooFewColors { q, need: 3 });
    }
    if !witness.validate(rel) {
        return Err(ReductionError::InvalidWitness);
    }
    let k = witness.arity();
    if k < 3 {
        return Err(ReductionError::WitnessTooSmall { k });
    }
    for (i, clause) in formula.clauses().iter().enumerate() {
        if clause.len() != k {
            return Err(ReductionError::WidthMismatch { clause: i, width: clause.len(), k });
        }
    }
    let n = formula.n();
    let r = rel.arity();
    let pos = &witness.positions;
    let alpha = |s: usize| witness.alpha[pos[s]];
    let beta = |s: usize| witness.beta[s];

    let mut g = Graph::new(0);
    let mut lists = ListAssignment::full(0, q);
    let mut report = ReductionReport::new("sat_to_rclc", "n", n);
    let mut t = Vec::with_capacity(n);
    let mut f = Vec::with_capacity(n);
    for _ in 0..n {
        let (mut ts, mut fs) = (Vec::with_capacity(k), Vec::with_capacity(k));
        for s in 0..k {
            let d: ColorSet = [alpha(s), beta(s)].into_iter().collect();
            let tv = g.add_vertex();
            lists.push(d);
            let fv = g.add_vertex();
            lists.push(d);
            g.ensure_edge(tv, fv);
            ts.push(tv);
            fs.push(fv);
        }
        t.push(ts);
        f.push(fs);
    }
    report.count("true_false_pair", n * k);

    let mut anchors = Vec::with_capacity(r - k);
    let mut slot = vec![None; r];
    for (s, &p) in pos.iter().enumerate() {
        slot[p] = Some(s);
    }
    for (p, s) in slot.iter().enumerate() {
        if s.is_none() {
            let v = g.add_vertex();
            lists.push(ColorSet::single(witness.alpha[p]));
            anchors.push(v);
        }
    }
    report.count("anchor", anchors.len());

    let before = g.n();
    for ts in &t {
        for s in 0..k - 1 {
            for (a1, a2) in [(alpha(s), beta(s + 1)), (beta(s), alpha(s + 1))] {
                let kind = forbid_pair_gadget(&mut g, &mut lists, ts[s], ts[s + 1], a1, a2)?;
                report.count(kind.name(), 1);
            }
        }
    }
    let per_variable = if n == 0 { 0 } else { (g.n() - before) / n };

    let mut constraints = Vec::with_capacity(formula.clauses().len());
    for clause in formula.clauses() {
        let mut anchor = anchors.iter();
        let z: Vec<Vertex> = slot
            .iter()
            .map(|s| match s {
                Some(s) => {
                    let lit = clause[*s];
                    let i = lit.unsigned_abs() as usize - 1;
                    if lit > 0 {
                        t[i][*s]
                    } else {
                        f[i][*s]
                    }
                }
                None => *anchor.next().expect("one anchor per free position"),
            })
            .collect();
        constraints.push(z);
    }
    report.count("clause_tuple", constraints.len());

    report.output_vertices = g.n();
    report.output_parameter = g.n();
    report.bound = Some((2 * k + 6 * (k - 1), r - k));
    debug_assert_eq!(g.n(), (2 * k + per_variable) * n + r - k);
    let instance = RclcInstance::new(g, rel.clone(), lists, constraints)?;
    Ok(SatReduction { instance, report, t, f, anchors, witness: witness.clone() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::{find_rclc, solve_cnf, solve_rclc, CnfMode};
    use crate::relations::{make_nur, nur_or_witness, NurItem};
    use crate::Limits;

    fn nur135() -> (Relation, OrWitness) {
        let rel = make_nur(1, 3, 5, &Limits::default()).unwrap();
        let w = nur_or_witness(1, 3, 5, NurItem::Full).unwrap();
        assert!(w.validate(&rel));
        (rel, w)
    }

    #[test]
    fn empty_formula_is_yes() {
        let (rel, w) = nur135();
        let out = sat_to_rclc(&CnfFormula::new(0, vec![]).unwrap(), &rel, &w).unwrap();
        assert!(out.instance.constraints.is_empty());
        assert_eq!(out.instance.graph.n(), rel.arity() - w.arity());
        assert!(find_rclc(&out.instance, &Limits::default()).unwrap().is_some());
    }

    #[test]
    fn single_clause_is_yes_and_decodes() {
        let (rel, w) = nur135();
        let phi = CnfFormula::new(3, vec![vec![1, 2, 3]]).unwrap();
        let out = sat_to_rclc(&phi, &rel, &w).unwrap();
        assert!(out.report.within_bound());
        assert_eq!(out.report.output_vertices, out.instance.graph.n());
        let sols = solve_rclc(&out.instance, &Limits::default()).unwrap();
        assert!(!sols.is_empty());
        for c in sols.colorings() {
            assert!(phi.satisfied_by(&out.decode(c)));
        }
    }

    #[test]
    fn all_sign_patterns_are_no() {
        let (rel, w) = nur135();
        let mut clauses = Vec::new();
        for mask in 0..8 {
            clauses.push((1..=3).map(|v| if mask >> (v - 1) & 1 == 1 { -v } else { v }).collect());
        }
        let phi = CnfFormula::new(3, clauses).unwrap();
        assert!(solve_cnf(&phi, CnfMode::Sat, &Limits::default()).unwrap().is_empty());
        let out = sat_to_rclc(&phi, &rel, &w).unwrap();
        assert!(find_rclc(&out.instance, &Limits::default()).unwrap().is_none());
    }

    #[test]
    fn width_must_match_witness() {
        let (rel, w) = nur135();
        let phi = CnfFormula::new(4, vec![vec![1, 2, 3, 4]]).unwrap();
        assert!(matches!(sat_to_rclc(&phi, &rel, &w), Err(ReductionError::WidthMismatch { .. })));
        let mut bad = w.clone();
        bad.alpha[0] = bad.beta[0];
        assert_eq!(sat_to_rclc(&CnfFormula::default(), &rel, &bad), Err(ReductionError::InvalidWitness));
    }
}
