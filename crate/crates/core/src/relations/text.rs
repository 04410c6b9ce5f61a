//! Relation text format.
//!
//! ```text
//! relation q=<q> r=<r>
//! 1 2
//! 2 1
//! ```
//!
//! or the one-line shorthand `nur d=<d> l=<l> q=<q>`.

use std::fmt::Write;

use super::{make_nur, Relation, RelationError, UrfcShape};
use crate::text::{Line, Lines, ParseError};
use crate::{Color, Limits};

/// A parsed relation file: explicit tuples or the `NUR` shorthand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RelationSpec {
    Explicit(Relation),
    Nur(UrfcShape),
}

impl RelationSpec {
    pub fn materialize(&self, limits: &Limits) -> Result<Relation, RelationError> {
        match self {
            RelationSpec::Explicit(rel) => Ok(rel.clone()),
            RelationSpec::Nur(s) => make_nur(s.d, s.l, s.q, limits),
        }
    }

    pub fn nur_shape(&self) -> Option<UrfcShape> {
        match self {
            RelationSpec::Nur(s) => Some(*s),
            RelationSpec::Explicit(_) => None,
        }
    }
}

pub fn parse_relation(src: &str) -> Result<RelationSpec, ParseError> {
    let mut lines = Lines::new(src);
    let head = lines.expect("`relation` or `nur` header")?;
    if head.keyword() == "nur" {
        let parsed = parse_nur_header(&head)?;
        lines.expect_end()?;
        return Ok(parsed);
    }
    let v = head.header("relation", &["q", "r"])?;
    let (q, r) = (v[0], v[1]);
    let mut tuples = Vec::new();
    while let Some(line) = lines.next_line() {
        tuples.push(parse_tuple(&line, q, r)?);
    }
    Relation::new(q, r, tuples)
        .map(RelationSpec::Explicit)
        .map_err(|e| head.error(e.to_string()))
}

pub(crate) fn parse_nur_header(line: &Line<'_>) -> Result<RelationSpec, ParseError> {
    let v = line.header("nur", &["d", "l", "q"])?;
    UrfcShape::new(v[0], v[1], v[2])
        .map(RelationSpec::Nur)
        .map_err(|e| line.error(e.to_string()))
}

pub(crate) fn parse_tuple(line: &Line<'_>, q: usize, r: usize) -> Result<Vec<Color>, ParseError> {
    let values: Vec<usize> = line.numbers(0)?;
    if values.len() != r {
        return Err(line.error(format!("tuple has {} entries, expected {r}", values.len())));
    }
    values
        .into_iter()
        .map(|v| {
            if (1..=q).contains(&v) {
                Ok(v as Color)
            } else {
                Err(line.error(format!("value {v} outside 1..={q}")))
            }
        })
        .collect()
}

pub(crate) fn write_tuples(out: &mut String, rel: &Relation) {
    for t in rel.tuples() {
        let row: Vec<String> = t.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
}

pub fn serialize_relation(rel: &Relation) -> String {
    let mut out = format!("relation q={} r={}\n", rel.q(), rel.arity());
    write_tuples(&mut out, rel);
    out
}
