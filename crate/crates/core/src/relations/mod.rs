//! Explicit finite-domain relations and their analysis.

mod exponent;
mod nur;
pub(crate) mod text;
mod witness;

use std::cmp::Ordering;

use thiserror::Error;

use crate::util::{next_permutation, next_tuple};
use crate::{BudgetExceeded, Color, Limits, MAX_COLORS};

pub use exponent::{eta, r_clique, r_clique_closed_form, EtaCase, UrfcShape};
pub use nur::{columns_uniformly_rainbow, make_nur};
pub use text::{parse_relation, serialize_relation, RelationSpec};
pub use witness::{find_or_witness, max_or_arity, max_or_witness, nur_or_witness, NurItem, OrWitness};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum RelationError {
    #[error("domain size must be in 1..={MAX_COLORS}, got {0}")]
    BadDomain(usize),
    #[error("arity must be positive")]
    ZeroArity,
    #[error("tuple has length {found}, expected arity {expected}")]
    TupleLength { expected: usize, found: usize },
    #[error("value {value} outside the domain 1..={q}")]
    ValueOutOfRange { value: usize, q: usize },
    #[error("OR arity {k} outside 1..={r}")]
    ArityOutOfRange { k: usize, r: usize },
    #[error("invalid parameters: {0}")]
    Precondition(String),
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
}

/// Default largest domain for which permutation invariance is checked
/// against every permutation rather than a generating set.
pub const DEFAULT_PERMUTATION_CAP: usize = 8;

/// A relation `R ⊆ [q]^r`, stored explicitly.
///
/// Tuples are kept flattened, sorted lexicographically and duplicate free,
/// so membership is a binary search.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Relation {
    q: usize,
    arity: usize,
    data: Vec<Color>,
}

impl Relation {
    pub fn new<I, T>(q: usize, arity: usize, tuples: I) -> Result<Self, RelationError>
    where
        I: IntoIterator<Item = T>,
        T: AsRef<[Color]>,
    {
        check_shape(q, arity)?;
        let mut rows: Vec<Vec<Color>> = Vec::new();
        for t in tuples {
            let t = t.as_ref();
            if t.len() != arity {
                return Err(RelationError::TupleLength { expected: arity, found: t.len() });
            }
            if let Some(&v) = t.iter().find(|&&v| v == 0 || v as usize > q) {
                return Err(RelationError::ValueOutOfRange { value: v as usize, q });
            }
            rows.push(t.to_vec());
        }
        rows.sort_unstable();
        rows.dedup();
        Ok(Relation { q, arity, data: rows.concat() })
    }

    /// Builds from tuples already sorted, deduplicated and in range.
    pub(crate) fn from_sorted_flat(q: usize, arity: usize, data: Vec<Color>) -> Self {
        debug_assert!(data.len() % arity == 0);
        debug_assert!(data.chunks_exact(arity).zip(data.chunks_exact(arity).skip(1)).all(|(a, b)| a < b));
        Relation { q, arity, data }
    }

    pub fn empty(q: usize, arity: usize) -> Result<Self, RelationError> {
        check_shape(q, arity)?;
        Ok(Relation { q, arity, data: Vec::new() })
    }

    /// The full relation `[q]^r`.
    pub fn full(q: usize, arity: usize, limits: &Limits) -> Result<Self, RelationError> {
        Self::from_predicate(q, arity, limits, |_| true)
    }

    /// All tuples of `[q]^r` accepted by `keep`, enumerated in lexicographic order.
    pub fn from_predicate(
        q: usize,
        arity: usize,
        limits: &Limits,
        mut keep: impl FnMut(&[Color]) -> bool,
    ) -> Result<Self, RelationError> {
        check_shape(q, arity)?;
        limits.check_power("enumerating relation tuples", q, arity)?;
        let mut data = Vec::new();
        let mut t = vec![1 as Color; arity];
        loop {
            if keep(&t) {
                data.extend_from_slice(&t);
            }
            if !next_tuple(&mut t, q) {
                break;
            }
        }
        Ok(Self::from_sorted_flat(q, arity, data))
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn len(&self) -> usize {
        self.data.len() / self.arity
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn tuples(&self) -> impl ExactSizeIterator<Item = &[Color]> + '_ {
        self.data.chunks_exact(self.arity)
    }

    pub fn tuple(&self, i: usize) -> &[Color] {
        &self.data[i * self.arity..(i + 1) * self.arity]
    }

    pub fn contains(&self, t: &[Color]) -> bool {
        if t.len() != self.arity {
            return false;
        }
        let (mut lo, mut hi) = (0, self.len());
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.tuple(mid).cmp(t) {
                Ordering::Less => lo = mid + 1,
                Ordering::Greater => hi = mid,
                Ordering::Equal => return true,
            }
        }
        false
    }

    fn closed_under(&self, perm: &[Color]) -> bool {
        let mut image = vec![0 as Color; self.arity];
        self.tuples().all(|t| {
            for (dst, &v) in image.iter_mut().zip(t) {
                *dst = perm[v as usize - 1];
            }
            self.contains(&image)
        })
    }
}

fn check_shape(q: usize, arity: usize) -> Result<(), RelationError> {
    if q == 0 || q > MAX_COLORS {
        return Err(RelationError::BadDomain(q));
    }
    if arity == 0 {
        return Err(RelationError::ZeroArity);
    }
    Ok(())
}

/// Whether every domain permutation applied entrywise maps the relation to itself.
pub fn is_permutation_invariant(rel: &Relation) -> bool {
    is_permutation_invariant_with_cap(rel, DEFAULT_PERMUTATION_CAP)
}

/// As [`is_permutation_invariant`], enumerating all `q!` permutations when
/// `q <= cap` and otherwise only the transpositions and the `q`-cycle.
///
/// Every permutation is a bijection on `[q]^r`, so `π(R) ⊆ R` already gives
/// `π(R) = R`; closure under a generating set therefore covers the group.
pub fn is_permutation_invariant_with_cap(rel: &Relation, cap: usize) -> bool {
    let q = rel.q;
    let identity: Vec<Color> = (1..=q as Color).collect();
    if q <= cap {
        let mut perm = identity;
        loop {
            if !rel.closed_under(&perm) {
                return false;
            }
            if !next_permutation(&mut perm) {
                return true;
            }
        }
    }
    let cycle: Vec<Color> = (0..q).map(|i| ((i + 1) % q) as Color + 1).collect();
    if !rel.closed_under(&cycle) {
        return false;
    }
    for a in 0..q {
        for b in a + 1..q {
            let mut perm = identity.clone();
            perm.swap(a, b);
            if !rel.closed_under(&perm) {
                return false;
            }
        }
    }
    true
}
