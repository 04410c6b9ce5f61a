use super::{Relation, RelationError};
use crate::util::{next_combination, next_tuple};
use crate::{Color, Limits};

/// Certificate that an OR relation of arity `k` is definable from a relation.
///
/// Position `p` ranges over `{alpha[p], beta[p]}` when `p` is in
/// `positions` and is fixed to `alpha[p]` otherwise. Of the `2^k` tuples in
/// that product exactly one, `alpha`, lies outside the relation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrWitness {
    /// 0-based, strictly increasing.
    pub positions: Vec<usize>,
    pub alpha: Vec<Color>,
    /// `beta[s]` is the alternative value at `positions[s]`.
    pub beta: Vec<Color>,
}

impl OrWitness {
    pub fn arity(&self) -> usize {
        self.positions.len()
    }

    fn is_well_formed(&self, rel: &Relation) -> bool {
        let q = rel.q() as Color;
        self.alpha.len() == rel.arity()
            && self.beta.len() == self.positions.len()
            && self.positions.windows(2).all(|w| w[0] < w[1])
            && self.positions.iter().all(|&p| p < rel.arity())
            && self.alpha.iter().chain(&self.beta).all(|&v| (1..=q).contains(&v))
            && self.positions.iter().zip(&self.beta).all(|(&p, &b)| self.alpha[p] != b)
    }

    /// Every tuple of the witness product, indexed by the subset mask of
    /// positions that take their `beta` value.
    pub fn product(&self) -> impl Iterator<Item = Vec<Color>> + '_ {
        (0u64..1 << self.arity()).map(move |mask| {
            let mut t = self.alpha.clone();
            for (s, (&p, &b)) in self.positions.iter().zip(&self.beta).enumerate() {
                if mask >> s & 1 == 1 {
                    t[p] = b;
                }
            }
            t
        })
    }

    /// Checks the witness against `rel` by enumerating its `2^k` product.
    pub fn validate(&self, rel: &Relation) -> bool {
        if !self.is_well_formed(rel) || self.arity() >= 64 {
            return false;
        }
        let mut members = 0u64;
        for t in self.product() {
            if rel.contains(&t) {
                members += 1;
            } else if t != self.alpha {
                return false;
            }
        }
        !rel.contains(&self.alpha) && members + 1 == 1 << self.arity()
    }
}

/// Searches for an OR witness of arity `k`.
///
/// Positions are tried in lexicographic order, then `alpha`, then `beta`,
/// each lexicographically; the first hit is returned.
pub fn find_or_witness(rel: &Relation, k: usize) -> Result<Option<OrWitness>, RelationError> {
    let r = rel.arity();
    if k == 0 || k > r {
        return Err(RelationError::ArityOutOfRange { k, r });
    }
    let q = rel.q();
    if q < 2 {
        return Ok(None);
    }
    let mut positions: Vec<usize> = (0..k).collect();
    loop {
        let mut alpha = vec![1 as Color; r];
        loop {
            if !rel.contains(&alpha) {
                let mut beta = vec![0 as Color; k];
                let mut scratch = alpha.clone();
                if extend_beta(rel, &positions, &alpha, &mut beta, 0, &mut scratch) {
                    return Ok(Some(OrWitness { positions, alpha, beta }));
                }
            }
            if !next_tuple(&mut alpha, q) {
                break;
            }
        }
        if !next_combination(&mut positions, r) {
            return Ok(None);
        }
    }
}

/// Assigns `beta[s..]` in lexicographic order so that every product tuple
/// using a `beta` value at some position lies in the relation.
fn extend_beta(
    rel: &Relation,
    positions: &[usize],
    alpha: &[Color],
    beta: &mut [Color],
    s: usize,
    scratch: &mut [Color],
) -> bool {
    if s == positions.len() {
        return true;
    }
    for v in 1..=rel.q() as Color {
        if v == alpha[positions[s]] {
            continue;
        }
        beta[s] = v;
        // New product tuples: those using beta at s and any subset of earlier positions.
        let ok = (0u64..1 << s).all(|mask| {
            scratch.copy_from_slice(alpha);
            scratch[positions[s]] = v;
            for (i, &p) in positions[..s].iter().enumerate() {
                if mask >> i & 1 == 1 {
                    scratch[p] = beta[i];
                }
            }
            rel.contains(scratch)
        });
        if ok && extend_beta(rel, positions, alpha, beta, s + 1, scratch) {
            return true;
        }
    }
    false
}

/// Witness of the largest definable OR arity, searching `k = r, r-1, ..., 1`.
pub fn max_or_witness(rel: &Relation, limits: &Limits) -> Result<Option<OrWitness>, RelationError> {
    limits.check_power("searching OR witnesses", rel.q(), rel.arity())?;
    for k in (1..=rel.arity()).rev() {
        if let Some(w) = find_or_witness(rel, k)? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// Largest `k` with an OR witness of arity `k`; 0 when there is none.
pub fn max_or_arity(rel: &Relation, limits: &Limits) -> Result<usize, RelationError> {
    Ok(max_or_witness(rel, limits)?.map_or(0, |w| w.arity()))
}

/// The three explicit OR witnesses for `NUR^q_{d,l}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NurItem {
    /// Arity `d*l`; needs `l >= 2` and `q >= d + 2`.
    Full,
    /// Arity `d*l - 1`; needs `q >= d + 1`.
    OneBelow,
    /// Arity `(d-1)*l`; needs `q >= d`.
    DropRow,
}

impl NurItem {
    pub const ALL: [NurItem; 3] = [NurItem::Full, NurItem::OneBelow, NurItem::DropRow];

    pub fn from_index(item: usize) -> Option<Self> {
        match item {
            1 => Some(NurItem::Full),
            2 => Some(NurItem::OneBelow),
            3 => Some(NurItem::DropRow),
            _ => None,
        }
    }

    pub fn index(self) -> usize {
        match self {
            NurItem::Full => 1,
            NurItem::OneBelow => 2,
            NurItem::DropRow => 3,
        }
    }

    pub fn applies(self, d: usize, l: usize, q: usize) -> bool {
        d >= 1
            && l >= 1
            && match self {
                NurItem::Full => l >= 2 && q >= d + 2,
                NurItem::OneBelow => q > d,
                NurItem::DropRow => q >= d,
            }
    }

    pub fn arity(self, d: usize, l: usize) -> usize {
        match self {
            NurItem::Full => d * l,
            NurItem::OneBelow => d * l - 1,
            NurItem::DropRow => (d - 1) * l,
        }
    }
}

/// Explicit OR witness for `NUR^q_{d,l}`.
///
/// `alpha` puts value `i` on row `i` of every column. `beta` depends on the item:
/// * `Full`: every entry varies; `d+1` in the first column, `d+2` elsewhere;
/// * `OneBelow`: all entries but `(1,1)` vary; `d+1` on row 1, `1` elsewhere;
/// * `DropRow`: rows `2..=d` vary, all to `1`.
pub fn nur_or_witness(d: usize, l: usize, q: usize, item: NurItem) -> Result<OrWitness, RelationError> {
    if !item.applies(d, l, q) {
        return Err(RelationError::Precondition(format!(
            "witness item {} does not apply to d={d} l={l} q={q}",
            item.index()
        )));
    }
    let d_color = |v: usize| v as Color;
    let alpha: Vec<Color> = (0..d * l).map(|p| d_color(p % d + 1)).collect();
    let mut positions = Vec::new();
    let mut beta = Vec::new();
    for p in 0..d * l {
        let (row, col) = (p % d, p / d);
        let b = match item {
            NurItem::Full => Some(if col == 0 { d + 1 } else { d + 2 }),
            NurItem::OneBelow if (row, col) == (0, 0) => None,
            NurItem::OneBelow => Some(if row == 0 { d + 1 } else { 1 }),
            NurItem::DropRow => (row > 0).then_some(1),
        };
        if let Some(b) = b {
            positions.push(p);
            beta.push(d_color(b));
        }
    }
    Ok(OrWitness { positions, alpha, beta })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relations::make_nur;

    fn limits() -> Limits {
        Limits::default()
    }

    #[test]
    fn search_examples() {
        let nur123 = make_nur(1, 2, 3, &limits()).unwrap();
        let w = find_or_witness(&nur123, 2).unwrap().unwrap();
        assert!(w.validate(&nur123));
        assert_eq!(max_or_arity(&nur123, &limits()).unwrap(), 2);

        let nur212 = make_nur(2, 1, 2, &limits()).unwrap();
        assert_eq!(find_or_witness(&nur212, 2).unwrap(), None);
        let w = find_or_witness(&nur212, 1).unwrap().unwrap();
        assert!(w.validate(&nur212));
        assert_eq!(max_or_arity(&nur212, &limits()).unwrap(), 1);

        let full = Relation::full(3, 3, &limits()).unwrap();
        for k in 1..=3 {
            assert_eq!(find_or_witness(&full, k).unwrap(), None);
        }
        assert_eq!(max_or_arity(&full, &limits()).unwrap(), 0);
        assert_eq!(max_or_arity(&Relation::empty(2, 2).unwrap(), &limits()).unwrap(), 0);
    }

    #[test]
    fn first_witness_is_lexicographic() {
        // NUR(1,2,3) is the disequality relation; first excluded alpha is (1,1),
        // first beta that keeps (2,1), (1,2) and excludes nothing else is (2,2)
        // but (2,2) is itself excluded; (2,3) works.
        let rel = make_nur(1, 2, 3, &limits()).unwrap();
        let w = find_or_witness(&rel, 2).unwrap().unwrap();
        assert_eq!(w.positions, vec![0, 1]);
        assert_eq!(w.alpha, vec![1, 1]);
        assert_eq!(w.beta, vec![2, 3]);
    }

    #[test]
    fn arity_bounds() {
        let rel = make_nur(1, 2, 3, &limits()).unwrap();
        assert_eq!(find_or_witness(&rel, 0).unwrap_err(), RelationError::ArityOutOfRange { k: 0, r: 2 });
        assert!(find_or_witness(&rel, 3).is_err());
    }

    #[test]
    fn figure_witnesses() {
        let w = nur_or_witness(3, 4, 5, NurItem::Full).unwrap();
        assert_eq!(w.arity(), 12);
        for (&p, &b) in w.positions.iter().zip(&w.beta) {
            assert_eq!(b, if p / 3 == 0 { 4 } else { 5 });
        }
        let w = nur_or_witness(3, 4, 4, NurItem::OneBelow).unwrap();
        assert_eq!(w.arity(), 11);
        assert!(!w.positions.contains(&0));
        for (&p, &b) in w.positions.iter().zip(&w.beta) {
            assert_eq!(b, if p % 3 == 0 { 4 } else { 1 });
        }
        let w = nur_or_witness(3, 4, 3, NurItem::DropRow).unwrap();
        assert_eq!(w.arity(), 8);
        assert!(w.positions.iter().all(|p| p % 3 != 0));
        assert!(w.beta.iter().all(|&b| b == 1));
        assert_eq!(w.alpha, [1, 2, 3].repeat(4));
    }

    #[test]
    fn witnesses_validate() {
        for (d, l, q) in [(1, 2, 3), (2, 2, 4), (2, 2, 3), (3, 1, 3), (2, 3, 2)] {
            let rel = make_nur(d, l, q, &limits()).unwrap();
            for item in NurItem::ALL {
                if item.applies(d, l, q) {
                    let w = nur_or_witness(d, l, q, item).unwrap();
                    assert!(w.validate(&rel), "({d},{l},{q}) item {item:?}");
                }
            }
        }
    }

    #[test]
    fn item_preconditions() {
        assert!(nur_or_witness(2, 1, 4, NurItem::Full).is_err());
        assert!(nur_or_witness(2, 2, 3, NurItem::Full).is_err());
        assert!(nur_or_witness(2, 2, 2, NurItem::OneBelow).is_err());
        assert!(nur_or_witness(3, 2, 2, NurItem::DropRow).is_err());
    }

    #[test]
    fn corrupted_witness_fails() {
        let rel = make_nur(2, 2, 4, &limits()).unwrap();
        let mut w = nur_or_witness(2, 2, 4, NurItem::Full).unwrap();
        w.beta[0] = w.alpha[w.positions[0]];
        assert!(!w.validate(&rel));
    }
}
