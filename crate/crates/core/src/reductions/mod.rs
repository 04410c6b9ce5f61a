//! Transformations between the problems, each with a size report.
//!
//! Every function here is a pure construction. The returned
//! [`ReductionReport`] records the parameter before and after and the number
//! of gadgets of each kind, so linear-parameter bounds can be checked by
//! scripts and tests.

mod cliques;
mod gadget;
mod hypergraph;
mod nae;
mod palette;
mod sat;

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::instances::InstanceError;
use crate::polykernel::KernelError;
use crate::relations::RelationError;

pub use cliques::{extract_clique_constraints, gurfc_to_cliquekv, kernelize_cliquekv, CliqueKvKernel};
pub use gadget::{forbid_pair_gadget, PairGadget};
pub use hypergraph::urfc_to_hypergraph;
pub use nae::{nae_assignment, nae_to_urfc, NaeVariant};
pub use palette::rclc_to_rcc;
pub use sat::{sat_to_rclc, SatReduction};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ReductionError {
    #[error("need at least {need} colors, got {q}")]
    TooFewColors { q: usize, need: usize },
    #[error("the gadget endpoints must be distinct (both are vertex {})", .0 + 1)]
    SameEndpoint(usize),
    #[error("color {color} outside 1..={q}")]
    ColorOutOfRange { color: usize, q: usize },
    #[error("witness does not define an OR from the relation")]
    InvalidWitness,
    #[error("OR witness has arity {k}; need at least 3")]
    WitnessTooSmall { k: usize },
    #[error("clause {} has width {width}, expected {k}", .clause + 1)]
    WidthMismatch { clause: usize, width: usize, k: usize },
    #[error("clause width must be at least 2, got {0}")]
    WidthTooSmall(usize),
    #[error("relation is not permutation-invariant")]
    NotPermutationInvariant,
    #[error("{0}")]
    Shape(String),
    #[error(transparent)]
    Instance(#[from] InstanceError),
    #[error(transparent)]
    Kernel(#[from] KernelError),
    #[error(transparent)]
    Relation(#[from] RelationError),
}

/// Size bookkeeping for one transformation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionReport {
    pub reduction: &'static str,
    /// `"n"` (variables or vertices) or `"k"` (modulator size).
    pub parameter: &'static str,
    pub input_parameter: usize,
    pub output_parameter: usize,
    pub output_vertices: usize,
    /// `output_parameter <= multiplier * input_parameter + offset` for the
    /// linear-parameter transformations; `None` for kernels.
    pub bound: Option<(usize, usize)>,
    pub gadgets: BTreeMap<&'static str, usize>,
}

impl ReductionReport {
    fn new(reduction: &'static str, parameter: &'static str, input: usize) -> Self {
        ReductionReport {
            reduction,
            parameter,
            input_parameter: input,
            output_parameter: 0,
            output_vertices: 0,
            bound: None,
            gadgets: BTreeMap::new(),
        }
    }

    fn count(&mut self, gadget: &'static str, by: usize) {
        *self.gadgets.entry(gadget).or_insert(0) += by;
    }

    /// Whether the output parameter respects the recorded linear bound.
    pub fn within_bound(&self) -> bool {
        match self.bound {
            Some((a, b)) => self.output_parameter <= a * self.input_parameter + b,
            None => true,
        }
    }

    /// `key=value` pairs in output order.
    pub fn fields(&self) -> Vec<(String, String)> {
        let mut out = vec![
            ("reduction".to_string(), self.reduction.to_string()),
            ("parameter".to_string(), self.parameter.to_string()),
            ("input_parameter".to_string(), self.input_parameter.to_string()),
            ("output_parameter".to_string(), self.output_parameter.to_string()),
            ("output_vertices".to_string(), self.output_vertices.to_string()),
        ];
        if let Some((a, b)) = self.bound {
            out.push(("multiplier".to_string(), a.to_string()));
            out.push(("offset".to_string(), b.to_string()));
        }
        for (name, count) in &self.gadgets {
            out.push((format!("gadget.{name}"), count.to_string()));
        }
        out
    }
}

impl fmt::Display for ReductionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in self.fields() {
            writeln!(f, "{k}={v}")?;
        }
        Ok(())
    }
}

/// An output instance with its report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduced<T> {
    pub instance: T,
    pub report: ReductionReport,
}

pub(crate) fn check_color(color: crate::Color, q: usize) -> Result<(), ReductionError> {
    if color == 0 || color as usize > q {
        return Err(ReductionError::ColorOutOfRange { color: color as usize, q });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_prints_key_values() {
        let mut r = ReductionReport::new("demo", "n", 3);
        r.output_parameter = 7;
        r.output_vertices = 7;
        r.bound = Some((2, 1));
        r.count("edge", 2);
        r.count("edge", 1);
        let text = r.to_string();
        assert!(text.contains("reduction=demo\n"));
        assert!(text.contains("gadget.edge=3\n"));
        assert!(text.contains("multiplier=2\n"));
        assert!(r.within_bound());
        r.output_parameter = 8;
        assert!(!r.within_bound());
    }
}
