use super::InstanceError;

/// DIMACS-style literal: `v` or `-v` for variable `v` in `1..=n`.
pub type Literal = i32;

/// CNF formula over variables `1..=n`. Within a clause, variables are distinct.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CnfFormula {
    n: usize,
    clauses: Vec<Vec<Literal>>,
}

impl CnfFormula {
    pub fn new(n: usize, clauses: Vec<Vec<Literal>>) -> Result<Self, InstanceError> {
        let mut f = CnfFormula { n, clauses: Vec::with_capacity(clauses.len()) };
        for clause in clauses {
            f.push_clause(clause)?;
        }
        Ok(f)
    }

    pub fn push_clause(&mut self, clause: Vec<Literal>) -> Result<(), InstanceError> {
        let index = self.clauses.len();
        let mut seen = vec![false; self.n + 1];
        for &lit in &clause {
            let v = lit.unsigned_abs() as usize;
            if lit == 0 || v > self.n {
                return Err(InstanceError::BadLiteral { literal: lit as i64, n: self.n });
            }
            if seen[v] {
                return Err(InstanceError::RepeatedVariable { clause: index, variable: v });
            }
            seen[v] = true;
        }
        self.clauses.push(clause);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn clauses(&self) -> &[Vec<Literal>] {
        &self.clauses
    }

    /// Whether every clause has exactly `k` literals.
    pub fn is_k_cnf(&self, k: usize) -> bool {
        self.clauses.iter().all(|c| c.len() == k)
    }

    /// Common clause width, if all clauses agree and there is at least one.
    pub fn width(&self) -> Option<usize> {
        let w = self.clauses.first()?.len();
        self.is_k_cnf(w).then_some(w)
    }

    /// `assignment[i]` is the value of variable `i + 1`.
    pub fn literal_value(lit: Literal, assignment: &[bool]) -> bool {
        assignment[lit.unsigned_abs() as usize - 1] == (lit > 0)
    }

    pub fn satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses
            .iter()
            .all(|c| c.iter().any(|&l| Self::literal_value(l, assignment)))
    }

    pub fn nae_satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|c| {
            c.iter().any(|&l| Self::literal_value(l, assignment))
                && c.iter().any(|&l| !Self::literal_value(l, assignment))
        })
    }
}
