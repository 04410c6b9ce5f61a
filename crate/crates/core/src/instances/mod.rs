//! Problem instances and their text formats.

mod cliquekv;
mod cnf;
mod constrained;
mod graph;
mod hypergraph;
mod text;
mod urfc;

use thiserror::Error;

use crate::relations::RelationError;
use crate::text::ParseError;

pub use cliquekv::{validate_clique_kv, CliqueKvInstance};
pub use cnf::{CnfFormula, Literal};
pub use constrained::{RccInstance, RclcInstance};
pub use graph::{ColorSet, Graph, ListAssignment};
pub use hypergraph::Hypergraph;
pub use text::{parse, parse_with, serialize, Instance, Kind, ParseContext};
pub use urfc::{canonicalize_urfc_tuple, GurfcInstance, UrfcBlock, UrfcInstance};

/// Vertex id, 0-based in memory.
pub type Vertex = usize;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum InstanceError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    /// A semantic error tied to an input line.
    #[error("line {line}: {source}")]
    At { line: usize, source: Box<InstanceError> },
    #[error("vertex {} out of range for {n} vertices", .vertex + 1)]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("loop at vertex {}", .0 + 1)]
    Loop(Vertex),
    #[error("duplicate edge {{{}, {}}}", .0 + 1, .1 + 1)]
    DuplicateEdge(Vertex, Vertex),
    #[error("set has {found} vertices, expected {expected}")]
    WrongSetSize { expected: usize, found: usize },
    #[error("vertex {} repeated inside a set", .0 + 1)]
    RepeatedVertex(Vertex),
    #[error("tuple has {found} sets, expected {expected}")]
    WrongTupleLength { expected: usize, found: usize },
    #[error("component containing vertex {} is not a clique: {} and {} are not adjacent", .component + 1, .missing.0 + 1, .missing.1 + 1)]
    NotAClique { component: Vertex, missing: (Vertex, Vertex) },
    #[error("clique of size {size} exceeds the bound {bound}")]
    CliqueTooLarge { size: usize, bound: usize },
    #[error("color {color} outside 1..={q}")]
    ColorOutOfRange { color: usize, q: usize },
    #[error("clause {} uses variable {variable} twice", .clause + 1)]
    RepeatedVariable { clause: usize, variable: usize },
    #[error("literal {literal} invalid for {n} variables")]
    BadLiteral { literal: i64, n: usize },
    #[error("hyperedge must be non-empty")]
    EmptyEdge,
    #[error("invalid instance: {0}")]
    Invalid(String),
    #[error(transparent)]
    Relation(#[from] RelationError),
}

pub(crate) fn check_vertex(v: Vertex, n: usize) -> Result<(), InstanceError> {
    if v < n {
        Ok(())
    } else {
        Err(InstanceError::VertexOutOfRange { vertex: v, n })
    }
}
