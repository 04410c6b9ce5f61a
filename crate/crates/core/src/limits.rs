use std::fmt;

use thiserror::Error;

/// Enumeration caps shared by the exhaustive routines.
///
/// Budgets are hard errors: no routine ever truncates its search silently.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of tuples a relation/matrix enumeration may visit.
    pub enumeration: u64,
    /// Maximum number of search nodes an oracle may expand.
    pub search_nodes: u64,
}

impl Limits {
    pub const DEFAULT_ENUMERATION: u64 = 10_000_000;
    pub const DEFAULT_SEARCH_NODES: u64 = 1 << 30;

    /// Checks that `base^exp` does not exceed the enumeration budget.
    pub fn check_power(&self, what: &'static str, base: usize, exp: usize) -> Result<u64, BudgetExceeded> {
        let needed = checked_pow(base as u64, exp);
        match needed {
            Some(n) if n <= self.enumeration => Ok(n),
            _ => Err(BudgetExceeded {
                what,
                needed: needed.map(Needed::Exact).unwrap_or(Needed::Overflow),
                budget: self.enumeration,
            }),
        }
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            enumeration: Self::DEFAULT_ENUMERATION,
            search_nodes: Self::DEFAULT_SEARCH_NODES,
        }
    }
}

pub(crate) fn checked_pow(base: u64, exp: usize) -> Option<u64> {
    let mut acc: u64 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base)?;
    }
    Some(acc)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Needed {
    Exact(u64),
    AtLeast(u64),
    Overflow,
}

impl fmt::Display for Needed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Needed::Exact(n) => write!(f, "{n}"),
            Needed::AtLeast(n) => write!(f, "more than {n}"),
            Needed::Overflow => write!(f, "more than 2^64"),
        }
    }
}

#[derive(Clone, Copy, Debug, Error, PartialEq, Eq)]
#[error("budget exceeded while {what}: needs {needed} steps, budget is {budget}")]
pub struct BudgetExceeded {
    pub what: &'static str,
    pub needed: Needed,
    pub budget: u64,
}
