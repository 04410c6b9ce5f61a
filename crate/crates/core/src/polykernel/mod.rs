//! Kernels: GF(p) polynomials, capture pairs, the polynomial-basis kernel and
//! its URFC/GURFC dispatch, and the product-pruning kernel for relations
//! without a full-arity OR.

mod basis;
mod capture;
mod carbonnel;
mod dispatch;
mod field;
mod poly;

use thiserror::Error;

use crate::relations::RelationError;
use crate::BudgetExceeded;

pub use basis::{instantiate, kernelize_poly, BasisStats};
pub use capture::{build_capture, check_captures, det_poly, vandermonde_set, CaptureItem, CapturePair};
pub use carbonnel::{has_full_product, kernelize_carbonnel};
pub use dispatch::{kernelize_gurfc, kernelize_urfc, GurfcKernel, KernelMeta, KernelMethod, UrfcKernel};
pub use field::{is_prime, PrimeField};
pub use poly::{Monomial, SparsePoly};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum KernelError {
    #[error("{0} is not a supported prime modulus")]
    NotPrime(u32),
    #[error("GF({p}) has fewer than {q} elements")]
    FieldTooSmall { p: u32, q: usize },
    #[error("no capture construction for shape d={d} l={l} q={q}")]
    NoCapture { d: usize, l: usize, q: usize },
    #[error("{0}")]
    Shape(String),
    #[error("block {block} with shape d={d} l={l} q={q} has exponent {eta}; every block needs at least 2")]
    ExponentTooSmall { block: usize, d: usize, l: usize, q: usize, eta: usize },
    #[error(transparent)]
    Relation(#[from] RelationError),
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
}
