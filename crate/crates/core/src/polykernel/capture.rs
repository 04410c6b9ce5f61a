//! Color vectors and polynomials that detect uniformly rainbow tuples.
//!
//! A pair `(C, p)` captures shape `(d, l, q)` when, for every assignment of
//! vectors from `C` to the `d*l` columns of an `m x (d*l)` matrix, `p` is
//! nonzero exactly when the tuple of column blocks is uniformly rainbow.
//! Variable `(row i, column j)` has index `j*m + i`.

use std::fmt;

use super::{KernelError, PrimeField, SparsePoly};
use crate::oracles::is_uniformly_rainbow;
use crate::util::next_tuple;
use crate::{Color, Limits};

/// The `q` vectors `(1, a, a^2, ..., a^(m-1))` for `a = 0, 1, ..., q-1`.
pub fn vandermonde_set(m: usize, q: usize, field: PrimeField) -> Result<Vec<Vec<u32>>, KernelError> {
    if m == 0 {
        return Err(KernelError::Shape("vector length must be at least 1".into()));
    }
    if (field.p() as usize) < q {
        return Err(KernelError::FieldTooSmall { p: field.p(), q });
    }
    Ok((0..q as u32)
        .map(|a| (0..m).map(|i| field.pow(a, i as u64)).collect())
        .collect())
}

/// Determinant of the first `t` rows of the given columns, with row 0 replaced by ones.
/// `columns[j][i]` is the entry in row `i` of column `j`.
fn ones_row_det(field: PrimeField, nvars: usize, columns: &[Vec<SparsePoly>]) -> SparsePoly {
    let t = columns.len();
    let matrix: Vec<Vec<SparsePoly>> = (0..t)
        .map(|i| {
            (0..t)
                .map(|j| if i == 0 { SparsePoly::constant(field, nvars, 1) } else { columns[j][i].clone() })
                .collect()
        })
        .collect();
    SparsePoly::determinant(field, nvars, &matrix)
}

/// Variable columns `first..first+count` of an `m`-row variable matrix.
fn var_columns(field: PrimeField, nvars: usize, m: usize, first: usize, count: usize) -> Vec<Vec<SparsePoly>> {
    (first..first + count)
        .map(|j| (0..m).map(|i| SparsePoly::var(field, nvars, j * m + i)).collect())
        .collect()
}

/// The determinant polynomial on an `m x t` variable matrix: first `t` rows,
/// row 0 replaced by ones. Degree `t - 1`.
pub fn det_poly(field: PrimeField, m: usize, t: usize) -> Result<SparsePoly, KernelError> {
    if t == 0 || t > m {
        return Err(KernelError::Shape(format!("need 1 <= t <= m, got t={t}, m={m}")));
    }
    let nvars = m * t;
    Ok(ones_row_det(field, nvars, &var_columns(field, nvars, m, 0, t)))
}

/// Which construction produced a capture pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CaptureItem {
    /// `l = 1`, `q >= d`, vectors of length `d`; degree `d - 1`.
    SingleSet,
    /// `q = d`, vectors of length `d`, one determinant per set; degree `(d - 1) l`.
    ExactPalette,
    /// `q = d + 1`, vectors of length `q`; the first set fixes the missing
    /// color and every other set must be completed by it; degree `d l - 1`.
    SparePalette,
}

impl CaptureItem {
    /// 1, 2 or 3, in the order the constructions are usually listed.
    pub fn index(self) -> usize {
        match self {
            CaptureItem::SingleSet => 1,
            CaptureItem::ExactPalette => 2,
            CaptureItem::SparePalette => 3,
        }
    }

    /// The construction used for a shape, if any applies.
    pub fn for_shape(d: usize, l: usize, q: usize) -> Option<Self> {
        if d == 0 || l == 0 || q < d {
            None
        } else if l == 1 {
            // Length-1 vectors cannot tell two colors apart.
            (d >= 2 || q == 1).then_some(CaptureItem::SingleSet)
        } else if q == d {
            Some(CaptureItem::ExactPalette)
        } else if q == d + 1 {
            Some(CaptureItem::SparePalette)
        } else {
            None
        }
    }

    pub fn vector_len(self, d: usize, q: usize) -> usize {
        match self {
            CaptureItem::SingleSet | CaptureItem::ExactPalette => d,
            CaptureItem::SparePalette => q,
        }
    }

    pub fn degree_bound(self, d: usize, l: usize) -> usize {
        match self {
            CaptureItem::SingleSet => d - 1,
            CaptureItem::ExactPalette => (d - 1) * l,
            CaptureItem::SparePalette => d * l - 1,
        }
    }
}

impl fmt::Display for CaptureItem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CapturePair {
    pub field: PrimeField,
    pub d: usize,
    pub l: usize,
    pub item: CaptureItem,
    /// Vector length.
    pub m: usize,
    /// `colors[c - 1]` is the vector for color `c`.
    pub colors: Vec<Vec<u32>>,
    /// Polynomial on `m * d * l` variables.
    pub poly: SparsePoly,
}

impl CapturePair {
    pub fn q(&self) -> usize {
        self.colors.len()
    }

    pub fn degree_bound(&self) -> usize {
        self.item.degree_bound(self.d, self.l)
    }
}

pub fn build_capture(d: usize, l: usize, q: usize, field: PrimeField) -> Result<CapturePair, KernelError> {
    let item = CaptureItem::for_shape(d, l, q).ok_or(KernelError::NoCapture { d, l, q })?;
    let m = item.vector_len(d, q);
    let colors = vandermonde_set(m, q, field)?;
    let nvars = m * d * l;
    let poly = match item {
        CaptureItem::SingleSet => ones_row_det(field, nvars, &var_columns(field, nvars, m, 0, d)),
        CaptureItem::ExactPalette => (0..l).fold(SparsePoly::constant(field, nvars, 1), |acc, block| {
            acc.mul(&ones_row_det(field, nvars, &var_columns(field, nvars, m, block * d, d)))
        }),
        CaptureItem::SparePalette => {
            let first = var_columns(field, nvars, m, 0, d);
            // The color vector missing from the first block: (sum of all vectors) - (sum of its columns).
            let missing: Vec<SparsePoly> = (0..m)
                .map(|i| {
                    let total = colors.iter().fold(0, |s, v| field.add(s, v[i]));
                    first
                        .iter()
                        .fold(SparsePoly::constant(field, nvars, total as i64), |acc, col| acc.sub(&col[i]))
                })
                .collect();
            let mut p = ones_row_det(field, nvars, &first);
            for block in 1..l {
                let mut cols = var_columns(field, nvars, m, block * d, d);
                cols.push(missing.clone());
                p = p.mul(&ones_row_det(field, nvars, &cols));
            }
            p
        }
    };
    Ok(CapturePair { field, d, l, item, m, colors, poly })
}

/// Checks the capture property by evaluating on every assignment of colors to columns.
pub fn check_captures(cp: &CapturePair, d: usize, l: usize, q: usize, limits: &Limits) -> Result<bool, KernelError> {
    let cols = d * l;
    if cp.colors.len() != q || cp.poly.nvars() != cp.m * cols || cp.colors.iter().any(|v| v.len() != cp.m) {
        return Ok(false);
    }
    let mut distinct = cp.colors.clone();
    distinct.sort();
    distinct.dedup();
    if distinct.len() != q {
        return Ok(false);
    }
    limits.check_power("checking a capture pair", q, cols)?;
    let scope: Vec<usize> = (0..cols).collect();
    let mut coloring = vec![1 as Color; cols];
    let mut point = vec![0u32; cp.m * cols];
    loop {
        for (j, &c) in coloring.iter().enumerate() {
            point[j * cp.m..(j + 1) * cp.m].copy_from_slice(&cp.colors[c as usize - 1]);
        }
        let nonzero = cp.poly.evaluate(&point) != 0;
        if nonzero != is_uniformly_rainbow(&scope, d, &coloring) {
            return Ok(false);
        }
        if !next_tuple(&mut coloring, q) {
            return Ok(true);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn vandermonde_points() {
        let c = vandermonde_set(2, 3, gf(3)).unwrap();
        assert_eq!(c, vec![vec![1, 0], vec![1, 1], vec![1, 2]]);
        assert!(vandermonde_set(2, 4, gf(3)).is_err());
        let c = vandermonde_set(3, 5, gf(5)).unwrap();
        assert!(c.iter().all(|v| v[0] == 1));
    }

    #[test]
    fn pairs_restricted_to_two_rows_are_independent() {
        let f = gf(3);
        let c = vandermonde_set(2, 3, f).unwrap();
        for i in 0..3 {
            for j in i + 1..3 {
                let det = f.sub(f.mul(c[i][0], c[j][1]), f.mul(c[j][0], c[i][1]));
                assert_ne!(det, 0);
            }
        }
    }

    #[test]
    fn det_poly_2x2_is_difference() {
        let f = gf(5);
        let p = det_poly(f, 2, 2).unwrap();
        // Columns (1, a) and (1, b): variables x1 = a, x3 = b.
        for a in 0..5 {
            for b in 0..5 {
                assert_eq!(p.evaluate(&[1, a, 1, b]), f.sub(b, a));
            }
        }
        assert_eq!(det_poly(gf(5), 3, 3).unwrap().degree(), 2);
        assert!(det_poly(f, 2, 3).is_err());
    }

    #[test]
    fn det_poly_vanishes_on_equal_columns() {
        let f = gf(5);
        let c = vandermonde_set(3, 5, f).unwrap();
        let p = det_poly(f, 3, 3).unwrap();
        let point: Vec<u32> = [&c[1], &c[4], &c[1]].iter().flat_map(|v| v.iter().copied()).collect();
        assert_eq!(p.evaluate(&point), 0);
    }

    #[test]
    fn items_and_degrees() {
        let cp = build_capture(2, 2, 3, gf(3)).unwrap();
        assert_eq!(cp.item, CaptureItem::SparePalette);
        assert!(cp.poly.degree() as usize <= 3);
        let cp = build_capture(3, 1, 5, gf(5)).unwrap();
        assert_eq!(cp.item, CaptureItem::SingleSet);
        assert_eq!(cp.poly.degree(), 2);
        let cp = build_capture(2, 3, 2, gf(2)).unwrap();
        assert_eq!(cp.item, CaptureItem::ExactPalette);
        assert_eq!(cp.poly.degree(), 3);
        assert!(matches!(build_capture(2, 2, 4, gf(5)), Err(KernelError::NoCapture { .. })));
        assert!(matches!(build_capture(1, 1, 3, gf(3)), Err(KernelError::NoCapture { .. })));
    }

    #[test]
    fn small_captures_hold() {
        let lim = Limits::default();
        for (d, l, q) in [(2, 2, 3), (3, 1, 4), (1, 2, 2), (1, 3, 2), (2, 1, 2), (1, 1, 1)] {
            let cp = build_capture(d, l, q, PrimeField::at_least(q)).unwrap();
            assert!(check_captures(&cp, d, l, q, &lim).unwrap(), "({d},{l},{q})");
        }
    }

    #[test]
    fn dropping_a_monomial_breaks_capture() {
        let lim = Limits::default();
        let mut cp = build_capture(2, 2, 3, PrimeField::at_least(3)).unwrap();
        let lead = cp.poly.terms().next().unwrap().0.clone();
        cp.poly.remove_term(&lead);
        assert!(!check_captures(&cp, 2, 2, 3, &lim).unwrap());
    }
}
