use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap};

use super::{CaptureItem, CapturePair, KernelError, Monomial, SparsePoly};
use crate::instances::{UrfcInstance, Vertex};
use crate::util::binomial;

/// Bookkeeping from one run of the basis kernel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisStats {
    pub item: CaptureItem,
    pub modulus: u32,
    /// Vector length per vertex.
    pub m: usize,
    /// Degree bound of the capture polynomial.
    pub degree: usize,
    /// Number of kept tuples (the rank of the instantiated polynomials).
    pub basis_size: usize,
    /// `binomial(m*n + degree, degree)`, the dimension of the polynomial space.
    pub bound: u128,
}

/// Instantiates the capture polynomial on the variables of the tuple's vertices.
/// Column `j` of the tuple (vertex `tuple[j]`) takes variables `tuple[j]*m .. tuple[j]*m + m`.
pub fn instantiate(cp: &CapturePair, tuple: &[Vertex], n: usize) -> SparsePoly {
    let m = cp.m as u32;
    cp.poly.rename(cp.m * n, |var| tuple[(var / m) as usize] as u32 * m + var % m)
}

/// Keeps each tuple whose polynomial is independent of the ones kept before it.
///
/// Tuples are processed in canonical order and the result has exactly the
/// same solution set as the input.
pub fn kernelize_poly(inst: &UrfcInstance, cp: &CapturePair) -> Result<(UrfcInstance, BasisStats), KernelError> {
    let block = &inst.block;
    if block.d() != cp.d || block.l() != cp.l {
        return Err(KernelError::Shape(format!(
            "capture pair is for shape ({}, {}) but the block has shape ({}, {})",
            cp.d,
            cp.l,
            block.d(),
            block.l()
        )));
    }
    let n = inst.n();
    let polys: Vec<SparsePoly> = block.tuples().map(|t| instantiate(cp, t, n)).collect();

    // Monomial ids in decreasing graded-lex order, so the leading term has the smallest id.
    let monomials: BTreeSet<&Monomial> = polys.iter().flat_map(|p| p.terms().map(|(m, _)| m)).collect();
    let ids: std::collections::HashMap<&Monomial, u32> =
        monomials.iter().rev().enumerate().map(|(i, &m)| (m, i as u32)).collect();
    let vectors: Vec<Vec<(u32, u32)>> = polys
        .iter()
        .map(|p| p.terms().map(|(m, c)| (ids[m], c)).collect())
        .collect();

    let mut echelon = Echelon::new(cp.field.p(), monomials.len());
    let mut out = block.cleared();
    for (tuple, v) in block.tuples().zip(&vectors) {
        if echelon.insert(v) {
            out.insert_flat(tuple.to_vec());
        }
    }
    let degree = cp.degree_bound();
    let stats = BasisStats {
        item: cp.item,
        modulus: cp.field.p(),
        m: cp.m,
        degree,
        basis_size: out.len(),
        bound: binomial((cp.m * n + degree) as u64, degree as u64),
    };
    let kernel = UrfcInstance::new(inst.graph.clone(), out).expect("subset of a valid instance");
    Ok((kernel, stats))
}

/// Row-echelon basis of sparse vectors over GF(p), keyed by leading (smallest) index.
struct Echelon {
    p: u64,
    rows: Vec<Vec<(u32, u32)>>,
    pivot: Vec<Option<u32>>,
    acc: Vec<u32>,
    queued: Vec<bool>,
}

impl Echelon {
    fn new(p: u32, dim: usize) -> Self {
        Echelon { p: p as u64, rows: Vec::new(), pivot: vec![None; dim], acc: vec![0; dim], queued: vec![false; dim] }
    }

    fn inv(&self, a: u64) -> u64 {
        let (mut base, mut exp, mut acc) = (a % self.p, self.p - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc
    }

    /// Reduces `v` by the basis; adds it and returns true if something nonzero remains.
    fn insert(&mut self, v: &[(u32, u32)]) -> bool {
        let p = self.p;
        let mut heap: BinaryHeap<Reverse<u32>> = BinaryHeap::new();
        let mut touched: Vec<u32> = Vec::new();
        for &(i, c) in v {
            self.acc[i as usize] = c;
            self.queued[i as usize] = true;
            touched.push(i);
            heap.push(Reverse(i));
        }
        let mut lead = None;
        while let Some(Reverse(i)) = heap.pop() {
            self.queued[i as usize] = false;
            let c = self.acc[i as usize] as u64;
            if c == 0 {
                continue;
            }
            let Some(r) = self.pivot[i as usize] else {
                lead = Some(i);
                break;
            };
            // Rows are normalized, so subtracting c * row clears entry i.
            for &(k, rc) in &self.rows[r as usize] {
                let slot = &mut self.acc[k as usize];
                *slot = ((*slot as u64 + p - c * rc as u64 % p) % p) as u32;
                if !self.queued[k as usize] {
                    self.queued[k as usize] = true;
                    touched.push(k);
                    heap.push(Reverse(k));
                }
            }
        }
        let added = if let Some(i) = lead {
            let scale = self.inv(self.acc[i as usize] as u64);
            let mut row: Vec<(u32, u32)> = touched
                .iter()
                .copied()
                .filter(|&k| k >= i && self.acc[k as usize] != 0)
                .map(|k| (k, (self.acc[k as usize] as u64 * scale % p) as u32))
                .collect();
            row.sort_unstable();
            row.dedup_by_key(|e| e.0);
            self.pivot[i as usize] = Some(self.rows.len() as u32);
            self.rows.push(row);
            true
        } else {
            false
        };
        for k in touched {
            self.acc[k as usize] = 0;
            self.queued[k as usize] = false;
        }
        added
    }
}
