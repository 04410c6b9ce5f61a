//! Sparse multivariate polynomials over a prime field.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use super::PrimeField;
use crate::util::next_permutation;

/// A monomial as `(variable, exponent)` pairs, sorted by variable, exponents positive.
///
/// Ordered graded-lexicographically: higher total degree first, then the
/// larger exponent on the lowest-indexed variable where they differ.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    factors: Vec<(u32, u32)>,
    degree: u32,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: u32) -> Self {
        Monomial { factors: vec![(v, 1)], degree: 1 }
    }

    /// Builds from arbitrary `(variable, exponent)` pairs, merging repeats.
    pub fn from_factors(pairs: impl IntoIterator<Item = (u32, u32)>) -> Self {
        let mut factors: Vec<(u32, u32)> = pairs.into_iter().filter(|&(_, e)| e > 0).collect();
        factors.sort_unstable();
        let mut merged: Vec<(u32, u32)> = Vec::with_capacity(factors.len());
        for (v, e) in factors {
            match merged.last_mut() {
                Some(last) if last.0 == v => last.1 += e,
                _ => merged.push((v, e)),
            }
        }
        let degree = merged.iter().map(|&(_, e)| e).sum();
        Monomial { factors: merged, degree }
    }

    pub fn factors(&self) -> &[(u32, u32)] {
        &self.factors
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::from_factors(self.factors.iter().chain(&other.factors).copied())
    }

    pub fn max_var(&self) -> Option<u32> {
        self.factors.last().map(|&(v, _)| v)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| {
            let (mut a, mut b) = (self.factors.iter(), other.factors.iter());
            loop {
                match (a.next(), b.next()) {
                    (None, None) => return Ordering::Equal,
                    (None, Some(_)) => return Ordering::Less,
                    (Some(_), None) => return Ordering::Greater,
                    (Some(&(va, ea)), Some(&(vb, eb))) => {
                        if va != vb {
                            return vb.cmp(&va);
                        }
                        if ea != eb {
                            return ea.cmp(&eb);
                        }
                    }
                }
            }
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (i, &(v, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            write!(f, "x{v}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Polynomial in `nvars` variables over GF(p); zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct SparsePoly {
    field: PrimeField,
    nvars: usize,
    terms: BTreeMap<Monomial, u32>,
}

impl SparsePoly {
    pub fn zero(field: PrimeField, nvars: usize) -> Self {
        SparsePoly { field, nvars, terms: BTreeMap::new() }
    }

    pub fn constant(field: PrimeField, nvars: usize, c: i64) -> Self {
        let mut p = Self::zero(field, nvars);
        p.add_term(Monomial::one(), field.elem(c));
        p
    }

    pub fn var(field: PrimeField, nvars: usize, v: usize) -> Self {
        assert!(v < nvars, "variable {v} out of range");
        let mut p = Self::zero(field, nvars);
        p.add_term(Monomial::var(v as u32), 1);
        p
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest monomial degree; 0 for constants and for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms.keys().next_back().map_or(0, Monomial::degree)
    }

    /// Terms from the leading monomial down.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, u32)> + '_ {
        self.terms.iter().rev().map(|(m, &c)| (m, c))
    }

    pub fn coefficient(&self, m: &Monomial) -> u32 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, m: Monomial, c: u32) {
        debug_assert!(m.max_var().is_none_or(|v| (v as usize) < self.nvars));
        let c = c % self.field.p();
        if c == 0 {
            return;
        }
        let f = self.field;
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = f.add(*e.get(), c);
                if sum == 0 {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Removes a term, returning its coefficient.
    pub fn remove_term(&mut self, m: &Monomial) -> Option<u32> {
        self.terms.remove(m)
    }

    fn check_compatible(&self, other: &SparsePoly) {
        assert_eq!(self.field, other.field, "polynomials over different fields");
        assert_eq!(self.nvars, other.nvars, "polynomials in different variable counts");
    }

    pub fn add(&self, other: &SparsePoly) -> SparsePoly {
        self.check_compatible(other);
        let mut out = self.clone();
        for (m, &c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn scale(&self, c: u32) -> SparsePoly {
        let mut out = SparsePoly::zero(self.field, self.nvars);
        for (m, &a) in &self.terms {
            out.add_term(m.clone(), self.field.mul(a, c));
        }
        out
    }

    pub fn sub(&self, other: &SparsePoly) -> SparsePoly {
        self.add(&other.scale(self.field.neg(1)))
    }

    pub fn mul(&self, other: &SparsePoly) -> SparsePoly {
        self.check_compatible(other);
        let mut out = SparsePoly::zero(self.field, self.nvars);
        for (ma, &a) in &self.terms {
            for (mb, &b) in &other.terms {
                out.add_term(ma.mul(mb), self.field.mul(a, b));
            }
        }
        out
    }

    pub fn evaluate(&self, point: &[u32]) -> u32 {
        assert_eq!(point.len(), self.nvars, "point has the wrong dimension");
        let f = self.field;
        self.terms.iter().fold(0, |acc, (m, &c)| {
            let v = m
                .factors()
                .iter()
                .fold(c, |t, &(var, e)| f.mul(t, f.pow(point[var as usize], e as u64)));
            f.add(acc, v)
        })
    }

    /// Renames every variable `v` to `map(v)` in a space of `nvars` variables.
    /// Variables mapped to the same target multiply together.
    pub fn rename(&self, nvars: usize, map: impl Fn(u32) -> u32) -> SparsePoly {
        let mut out = SparsePoly::zero(self.field, nvars);
        for (m, &c) in &self.terms {
            out.add_term(Monomial::from_factors(m.factors().iter().map(|&(v, e)| (map(v), e))), c);
        }
        out
    }

    /// Determinant of a square matrix of polynomials (Leibniz expansion).
    pub fn determinant(field: PrimeField, nvars: usize, matrix: &[Vec<SparsePoly>]) -> SparsePoly {
        let t = matrix.len();
        assert!(matrix.iter().all(|row| row.len() == t), "matrix must be square");
        let mut perm: Vec<usize> = (0..t).collect();
        let mut total = SparsePoly::zero(field, nvars);
        loop {
            let inversions = (0..t).flat_map(|i| (i + 1..t).map(move |j| (i, j))).filter(|&(i, j)| perm[i] > perm[j]).count();
            let mut term = SparsePoly::constant(field, nvars, if inversions % 2 == 0 { 1 } else { -1 });
            for (row, &col) in perm.iter().enumerate() {
                term = term.mul(&matrix[row][col]);
                if term.is_zero() {
                    break;
                }
            }
            total = total.add(&term);
            if !next_permutation(&mut perm) {
                return total;
            }
        }
    }
}

impl fmt::Debug for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0 over {:?}", self.field);
        }
        for (i, (m, c)) in self.terms().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}*{m:?}")?;
        }
        write!(f, " over {:?}", self.field)
    }
}
