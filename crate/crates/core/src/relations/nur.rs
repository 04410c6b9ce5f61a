use super::{Relation, RelationError};
use crate::{Color, Limits};

/// Whether a `d x l` matrix, flattened column by column, is uniformly
/// rainbow: every column holds `d` distinct values and all columns hold the
/// same value set.
pub fn columns_uniformly_rainbow(matrix: &[Color], d: usize, l: usize) -> bool {
    debug_assert_eq!(matrix.len(), d * l);
    let mut first: Vec<Color> = matrix[..d].to_vec();
    first.sort_unstable();
    if first.windows(2).any(|w| w[0] == w[1]) {
        return false;
    }
    let mut col = vec![0; d];
    matrix.chunks_exact(d).skip(1).all(|c| {
        col.copy_from_slice(c);
        col.sort_unstable();
        col == first
    })
}

/// The uniformly rainbow free relation `NUR^q_{d,l}` of arity `d*l`.
///
/// Tuple position `j*d + i` (0-based) holds row `i` of column `j`.
pub fn make_nur(d: usize, l: usize, q: usize, limits: &Limits) -> Result<Relation, RelationError> {
    if d == 0 || l == 0 || q < d {
        return Err(RelationError::Precondition(format!(
            "NUR needs q >= d >= 1 and l >= 1, got d={d} l={l} q={q}"
        )));
    }
    Relation::from_predicate(q, d * l, limits, |t| !columns_uniformly_rainbow(t, d, l))
}
