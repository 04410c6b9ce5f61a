//! Text formats for every instance kind.
//!
//! Vertex ids and colors are 1-based in text. The sections are
//!
//! ```text
//! graph n=<n> m=<m>              followed by m lines `e u v`
//! block d=<d> l=<l> count=<c>    followed by c lines of d*l ids, set by set
//! rel q=<q> r=<r> count=<c>      followed by c tuples; or `rel nur d= l= q=`; or `rel file <path>`
//! list v: c1 c2 ...              one per vertex (rclc only)
//! constraints count=<c>          followed by c lines of r ids
//! modulator k=<k>                followed by one line of k ids when k > 0
//! hgraph n=<n> m=<m>             followed by m lines `he s v1 ... vs`
//! ```
//!
//! CNF formulas use DIMACS.

use std::fmt::{self, Write};
use std::str::FromStr;

use super::{
    CliqueKvInstance, CnfFormula, ColorSet, Graph, GurfcInstance, Hypergraph, InstanceError,
    ListAssignment, RccInstance, RclcInstance, UrfcBlock, UrfcInstance, Vertex,
};
use crate::relations::text::{parse_nur_header, parse_tuple, write_tuples};
use crate::relations::{parse_relation, Relation};
use crate::text::{Line, Lines, ParseError};
use crate::{Color, Limits};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    Graph,
    Urfc,
    Gurfc,
    Rcc,
    Rclc,
    CliqueKv,
    Hypergraph,
    Cnf,
}

impl Kind {
    pub const ALL: [Kind; 8] = [
        Kind::Graph,
        Kind::Urfc,
        Kind::Gurfc,
        Kind::Rcc,
        Kind::Rclc,
        Kind::CliqueKv,
        Kind::Hypergraph,
        Kind::Cnf,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Kind::Graph => "graph",
            Kind::Urfc => "urfc",
            Kind::Gurfc => "gurfc",
            Kind::Rcc => "rcc",
            Kind::Rclc => "rclc",
            Kind::CliqueKv => "cliquekv",
            Kind::Hypergraph => "hypergraph",
            Kind::Cnf => "cnf",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Kind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Kind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown problem kind `{s}`"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    Graph(Graph),
    Urfc(UrfcInstance),
    Gurfc(GurfcInstance),
    Rcc(RccInstance),
    Rclc(RclcInstance),
    CliqueKv(CliqueKvInstance),
    Hypergraph(Hypergraph),
    Cnf(CnfFormula),
}

impl Instance {
    pub fn kind(&self) -> Kind {
        match self {
            Instance::Graph(_) => Kind::Graph,
            Instance::Urfc(_) => Kind::Urfc,
            Instance::Gurfc(_) => Kind::Gurfc,
            Instance::Rcc(_) => Kind::Rcc,
            Instance::Rclc(_) => Kind::Rclc,
            Instance::CliqueKv(_) => Kind::CliqueKv,
            Instance::Hypergraph(_) => Kind::Hypergraph,
            Instance::Cnf(_) => Kind::Cnf,
        }
    }
}

/// Settings for parsing: budget for materializing `rel nur` and a loader for `rel file`.
#[derive(Clone, Copy, Default)]
pub struct ParseContext<'a> {
    pub limits: Limits,
    pub resolve: Option<&'a dyn Fn(&str) -> Result<String, String>>,
}

pub fn parse(kind: Kind, src: &str) -> Result<Instance, InstanceError> {
    parse_with(kind, src, &ParseContext::default())
}

pub fn parse_with(kind: Kind, src: &str, ctx: &ParseContext<'_>) -> Result<Instance, InstanceError> {
    if kind == Kind::Cnf {
        return parse_dimacs(src).map(Instance::Cnf);
    }
    let mut lines = Lines::new(src);
    let inst = match kind {
        Kind::Graph => Instance::Graph(parse_graph(&mut lines)?),
        Kind::Urfc => {
            let graph = parse_graph(&mut lines)?;
            let head = lines.expect("`block` header")?;
            let block = parse_block(&mut lines, &head, graph.n())?;
            Instance::Urfc(UrfcInstance::new(graph, block)?)
        }
        Kind::Gurfc => {
            let graph = parse_graph(&mut lines)?;
            let mut blocks = Vec::new();
            while let Some(head) = lines.next_line() {
                blocks.push(parse_block(&mut lines, &head, graph.n())?);
            }
            Instance::Gurfc(GurfcInstance::new(graph, blocks)?)
        }
        Kind::Rcc => {
            let graph = parse_graph(&mut lines)?;
            let relation = parse_rel(&mut lines, ctx)?;
            let constraints = parse_constraints(&mut lines, graph.n(), relation.arity())?;
            Instance::Rcc(RccInstance::new(graph, relation, constraints)?)
        }
        Kind::Rclc => {
            let graph = parse_graph(&mut lines)?;
            let relation = parse_rel(&mut lines, ctx)?;
            let lists = parse_lists(&mut lines, graph.n(), relation.q())?;
            let constraints = parse_constraints(&mut lines, graph.n(), relation.arity())?;
            Instance::Rclc(RclcInstance::new(graph, relation, lists, constraints)?)
        }
        Kind::CliqueKv => {
            let graph = parse_graph(&mut lines)?;
            let head = lines.expect("`modulator` header")?;
            let k = head.header("modulator", &["k"])?[0];
            let modulator = if k == 0 {
                Vec::new()
            } else {
                let line = lines.expect("modulator vertices")?;
                let ids = vertex_ids(&line, 0, graph.n())?;
                if ids.len() != k {
                    return Err(line.error(format!("expected {k} modulator vertices, found {}", ids.len())).into());
                }
                ids
            };
            let number = head.number;
            Instance::CliqueKv(CliqueKvInstance::new(graph, modulator).map_err(|e| at(number, e))?)
        }
        Kind::Hypergraph => Instance::Hypergraph(parse_hypergraph(&mut lines)?),
        Kind::Cnf => unreachable!(),
    };
    lines.expect_end()?;
    Ok(inst)
}

fn at(line: usize, e: InstanceError) -> InstanceError {
    match e {
        InstanceError::Parse(_) | InstanceError::At { .. } => e,
        other => InstanceError::At { line, source: Box::new(other) },
    }
}

/// Converts 1-based ids from `skip` on to 0-based vertices below `n`.
fn vertex_ids(line: &Line<'_>, skip: usize, n: usize) -> Result<Vec<Vertex>, InstanceError> {
    line.numbers::<usize>(skip)?
        .into_iter()
        .map(|id| {
            if id == 0 {
                Err(line.error("vertex ids start at 1").into())
            } else if id > n {
                Err(at(line.number, InstanceError::VertexOutOfRange { vertex: id - 1, n }))
            } else {
                Ok(id - 1)
            }
        })
        .collect()
}

fn parse_graph(lines: &mut Lines<'_>) -> Result<Graph, InstanceError> {
    let head = lines.expect("`graph` header")?;
    let v = head.header("graph", &["n", "m"])?;
    let (n, m) = (v[0], v[1]);
    let mut g = Graph::new(n);
    for _ in 0..m {
        let line = lines.expect("edge line `e u v`")?;
        if line.keyword() != "e" || line.tokens.len() != 3 {
            return Err(line.error("expected edge line `e u v`").into());
        }
        let ids = vertex_ids(&line, 1, n)?;
        g.add_edge(ids[0], ids[1]).map_err(|e| at(line.number, e))?;
    }
    Ok(g)
}

fn parse_block(lines: &mut Lines<'_>, head: &Line<'_>, n: usize) -> Result<UrfcBlock, InstanceError> {
    let v = head.header("block", &["d", "l", "count"])?;
    let (d, l, count) = (v[0], v[1], v[2]);
    if d == 0 || l == 0 {
        return Err(head.error("block shape must have d >= 1 and l >= 1").into());
    }
    let mut block = UrfcBlock::new(d, l);
    for _ in 0..count {
        let line = lines.expect("constraint tuple")?;
        let ids = vertex_ids(&line, 0, n)?;
        if ids.len() != d * l {
            return Err(line.error(format!("tuple has {} ids, expected {}", ids.len(), d * l)).into());
        }
        let sets: Vec<Vec<Vertex>> = ids.chunks(d).map(<[Vertex]>::to_vec).collect();
        block.insert(&sets).map_err(|e| at(line.number, e))?;
    }
    Ok(block)
}

fn parse_rel(lines: &mut Lines<'_>, ctx: &ParseContext<'_>) -> Result<Relation, InstanceError> {
    let head = lines.expect("`rel` line")?;
    if head.keyword() != "rel" || head.tokens.len() < 2 {
        return Err(head.error("expected `rel` line").into());
    }
    let rest = Line { number: head.number, tokens: head.tokens[1..].to_vec() };
    let parsed = match rest.keyword() {
        "nur" => parse_nur_header(&rest)?,
        "file" => {
            if rest.tokens.len() != 2 {
                return Err(head.error("expected `rel file <path>`").into());
            }
            let resolve = ctx
                .resolve
                .ok_or_else(|| head.error("relation file references are not available here"))?;
            let text = resolve(rest.tokens[1]).map_err(|e| head.error(e))?;
            parse_relation(&text).map_err(|e| head.error(format!("in `{}`: {e}", rest.tokens[1])))?
        }
        _ => {
            let tokens: Vec<&str> = std::iter::once("rel").chain(rest.tokens.iter().copied()).collect();
            let v = Line { number: head.number, tokens }.header("rel", &["q", "r", "count"])?;
            let (q, r, count) = (v[0], v[1], v[2]);
            let mut tuples = Vec::with_capacity(count);
            for _ in 0..count {
                let line = lines.expect("relation tuple")?;
                tuples.push(parse_tuple(&line, q, r)?);
            }
            return Relation::new(q, r, tuples).map_err(|e| at(head.number, e.into()));
        }
    };
    parsed.materialize(&ctx.limits).map_err(|e| at(head.number, e.into()))
}

fn parse_lists(lines: &mut Lines<'_>, n: usize, q: usize) -> Result<ListAssignment, InstanceError> {
    let mut lists: Vec<Option<ColorSet>> = vec![None; n];
    for _ in 0..n {
        let line = lines.expect("`list v: ...` line")?;
        let id = line
            .tokens
            .get(1)
            .and_then(|t| t.strip_suffix(':'))
            .filter(|_| line.keyword() == "list")
            .ok_or_else(|| line.error("expected `list v: c1 c2 ...`"))?;
        let id: usize = id.parse().map_err(|_| line.error(format!("`{id}` is not a vertex id")))?;
        if id == 0 || id > n {
            return Err(line.error(format!("vertex {id} out of range 1..={n}")).into());
        }
        if lists[id - 1].is_some() {
            return Err(line.error(format!("second list for vertex {id}")).into());
        }
        let mut set = ColorSet::EMPTY;
        for c in line.numbers::<usize>(2)? {
            if c == 0 || c > q {
                return Err(at(line.number, InstanceError::ColorOutOfRange { color: c, q }));
            }
            if set.contains(c as Color) {
                return Err(line.error(format!("color {c} listed twice")).into());
            }
            set.insert(c as Color);
        }
        lists[id - 1] = Some(set);
    }
    ListAssignment::new(q, lists.into_iter().map(|l| l.expect("every vertex listed")).collect())
}

fn parse_constraints(lines: &mut Lines<'_>, n: usize, r: usize) -> Result<Vec<Vec<Vertex>>, InstanceError> {
    let head = lines.expect("`constraints` header")?;
    let count = head.header("constraints", &["count"])?[0];
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let line = lines.expect("constraint tuple")?;
        let ids = vertex_ids(&line, 0, n)?;
        if ids.len() != r {
            return Err(line.error(format!("constraint has {} ids, expected {r}", ids.len())).into());
        }
        out.push(ids);
    }
    Ok(out)
}

fn parse_hypergraph(lines: &mut Lines<'_>) -> Result<Hypergraph, InstanceError> {
    let head = lines.expect("`hgraph` header")?;
    let v = head.header("hgraph", &["n", "m"])?;
    let mut h = Hypergraph::new(v[0]);
    for _ in 0..v[1] {
        let line = lines.expect("hyperedge line `he s v1 ... vs`")?;
        if line.keyword() != "he" || line.tokens.len() < 2 {
            return Err(line.error("expected hyperedge line `he s v1 ... vs`").into());
        }
        let s: usize = line.numbers(1)?[0];
        let ids = vertex_ids(&line, 2, h.n())?;
        if ids.len() != s {
            return Err(line.error(format!("hyperedge declares {s} vertices but lists {}", ids.len())).into());
        }
        if !h.insert_edge(ids).map_err(|e| at(line.number, e))? {
            return Err(line.error("duplicate hyperedge").into());
        }
    }
    Ok(h)
}

fn parse_dimacs(src: &str) -> Result<CnfFormula, InstanceError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut formula = CnfFormula::default();
    let mut current: Vec<i32> = Vec::new();
    let mut last_line = 0;
    for (i, raw) in src.lines().enumerate() {
        let number = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() || content.starts_with('c') {
            continue;
        }
        if content.starts_with('%') {
            break;
        }
        last_line = number;
        if content.starts_with('p') {
            let t: Vec<&str> = content.split_whitespace().collect();
            if header.is_some() || t.len() != 4 || t[0] != "p" || t[1] != "cnf" {
                return Err(ParseError::new(number, "expected a single `p cnf <vars> <clauses>` line").into());
            }
            let n = t[2].parse().map_err(|_| ParseError::new(number, "bad variable count"))?;
            let m = t[3].parse().map_err(|_| ParseError::new(number, "bad clause count"))?;
            header = Some((n, m, number));
            formula = CnfFormula::new(n, Vec::new())?;
            continue;
        }
        if header.is_none() {
            return Err(ParseError::new(number, "clause before `p cnf` header").into());
        }
        for tok in content.split_whitespace() {
            let lit: i32 = tok
                .parse()
                .map_err(|_| ParseError::new(number, format!("`{tok}` is not a literal")))?;
            if lit == 0 {
                formula
                    .push_clause(std::mem::take(&mut current))
                    .map_err(|e| at(number, e))?;
            } else {
                current.push(lit);
            }
        }
    }
    let (_, m, head_line) = header.ok_or_else(|| ParseError::new(1, "missing `p cnf` header"))?;
    if !current.is_empty() {
        return Err(ParseError::new(last_line, "last clause is not terminated by 0").into());
    }
    if formula.clauses().len() != m {
        return Err(ParseError::new(
            head_line,
            format!("header declares {m} clauses, found {}", formula.clauses().len()),
        )
        .into());
    }
    Ok(formula)
}

fn join_ids(out: &mut String, ids: impl IntoIterator<Item = Vertex>) {
    let mut first = true;
    for v in ids {
        if !first {
            out.push(' ');
        }
        first = false;
        let _ = write!(out, "{}", v + 1);
    }
}

fn write_graph(out: &mut String, g: &Graph) {
    let _ = writeln!(out, "graph n={} m={}", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
}

fn write_block(out: &mut String, b: &UrfcBlock) {
    let _ = writeln!(out, "block d={} l={} count={}", b.d(), b.l(), b.len());
    for t in b.tuples() {
        join_ids(out, t.iter().copied());
        out.push('\n');
    }
}

fn write_rel(out: &mut String, rel: &Relation) {
    let _ = writeln!(out, "rel q={} r={} count={}", rel.q(), rel.arity(), rel.len());
    write_tuples(out, rel);
}

fn write_constraints(out: &mut String, constraints: &[Vec<Vertex>]) {
    let _ = writeln!(out, "constraints count={}", constraints.len());
    for c in constraints {
        join_ids(out, c.iter().copied());
        out.push('\n');
    }
}

pub fn serialize(inst: &Instance) -> String {
    let mut out = String::new();
    match inst {
        Instance::Graph(g) => write_graph(&mut out, g),
        Instance::Urfc(u) => {
            write_graph(&mut out, &u.graph);
            write_block(&mut out, &u.block);
        }
        Instance::Gurfc(u) => {
            write_graph(&mut out, &u.graph);
            for b in &u.blocks {
                write_block(&mut out, b);
            }
        }
        Instance::Rcc(r) => {
            write_graph(&mut out, &r.graph);
            write_rel(&mut out, &r.relation);
            write_constraints(&mut out, &r.constraints);
        }
        Instance::Rclc(r) => {
            write_graph(&mut out, &r.graph);
            write_rel(&mut out, &r.relation);
            for (v, list) in r.lists.as_slice().iter().enumerate() {
                let _ = write!(out, "list {}:", v + 1);
                for c in list.iter() {
                    let _ = write!(out, " {c}");
                }
                out.push('\n');
            }
            write_constraints(&mut out, &r.constraints);
        }
        Instance::CliqueKv(c) => {
            write_graph(&mut out, c.graph());
            let _ = writeln!(out, "modulator k={}", c.k());
            if c.k() > 0 {
                join_ids(&mut out, c.modulator().iter().copied());
                out.push('\n');
            }
        }
        Instance::Hypergraph(h) => {
            let _ = writeln!(out, "hgraph n={} m={}", h.n(), h.m());
            for e in h.edges() {
                let _ = write!(out, "he {} ", e.len());
                join_ids(&mut out, e.iter().copied());
                out.push('\n');
            }
        }
        Instance::Cnf(f) => {
            let _ = writeln!(out, "p cnf {} {}", f.n(), f.clauses().len());
            for c in f.clauses() {
                for l in c {
                    let _ = write!(out, "{l} ");
                }
                out.push_str("0\n");
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn roundtrip(kind: Kind, src: &str) -> Instance {
        let inst = parse(kind, src).unwrap();
        let text = serialize(&inst);
        assert_eq!(text, src, "canonical text must survive a round trip");
        assert_eq!(parse(kind, &text).unwrap(), inst);
        inst
    }

    #[test]
    fn dimacs() {
        let Instance::Cnf(f) = parse(Kind::Cnf, "c demo\np cnf 3 1\n1 -2 3 0\n").unwrap() else {
            panic!()
        };
        assert_eq!(f.clauses(), &[vec![1, -2, 3]]);
        roundtrip(Kind::Cnf, "p cnf 3 2\n1 -2 3 0\n-1 0\n");
        assert!(parse(Kind::Cnf, "p cnf 2 1\n1 1 0\n").is_err());
        assert!(parse(Kind::Cnf, "p cnf 2 2\n1 0\n").is_err());
        assert!(parse(Kind::Cnf, "p cnf 2 1\n1 2\n").is_err());
    }

    #[test]
    fn graph_errors() {
        let err = parse(Kind::Graph, "graph n=2 m=2\ne 1 2\ne 2 1\n").unwrap_err();
        assert_eq!(
            err,
            InstanceError::At { line: 3, source: Box::new(InstanceError::DuplicateEdge(0, 1)) }
        );
        assert!(matches!(
            parse(Kind::Graph, "graph n=2 m=1\ne 1 1\n"),
            Err(InstanceError::At { line: 2, .. })
        ));
        assert!(parse(Kind::Graph, "graph n=2 m=1\ne 1 3\n").is_err());
        assert!(parse(Kind::Graph, "graph n=2 m=1\n").is_err());
        assert!(parse(Kind::Graph, "graph n=2 m=0\ne 1 2\n").is_err());
        roundtrip(Kind::Graph, "graph n=3 m=2\ne 1 2\ne 2 3\n");
    }

    #[test]
    fn urfc_sets_are_canonicalized() {
        let inst = parse(Kind::Urfc, "graph n=4 m=0\nblock d=2 l=2 count=2\n4 2 3 1\n1 3 2 4\n").unwrap();
        assert_eq!(serialize(&inst), "graph n=4 m=0\nblock d=2 l=2 count=1\n1 3 2 4\n");
        let err = parse(Kind::Urfc, "graph n=4 m=0\nblock d=2 l=1 count=1\n2 2\n").unwrap_err();
        assert!(matches!(err, InstanceError::At { line: 3, .. }));
        roundtrip(Kind::Gurfc, "graph n=3 m=1\ne 1 2\nblock d=1 l=2 count=1\n1 3\nblock d=3 l=1 count=0\n");
    }

    #[test]
    fn rcc_and_rclc() {
        roundtrip(Kind::Rcc, "graph n=2 m=0\nrel q=2 r=2 count=2\n1 1\n2 2\nconstraints count=1\n1 2\n");
        let inst = roundtrip(
            Kind::Rclc,
            "graph n=2 m=1\ne 1 2\nrel q=3 r=1 count=1\n2\nlist 1: 1 3\nlist 2:\nconstraints count=1\n2\n",
        );
        let Instance::Rclc(r) = inst else { panic!() };
        assert!(r.lists.get(1).is_empty());
        let nur = parse(Kind::Rcc, "graph n=2 m=0\nrel nur d=1 l=2 q=2\nconstraints count=0\n").unwrap();
        let Instance::Rcc(r) = nur else { panic!() };
        assert_eq!(r.relation.len(), 2);
        assert!(parse(Kind::Rcc, "graph n=1 m=0\nrel file x\nconstraints count=0\n").is_err());
        let resolve = |_: &str| Ok::<_, String>("relation q=2 r=1\n1\n".to_string());
        let ctx = ParseContext { resolve: Some(&resolve), ..Default::default() };
        let Instance::Rcc(r) = parse_with(Kind::Rcc, "graph n=1 m=0\nrel file x\nconstraints count=0\n", &ctx).unwrap()
        else {
            panic!()
        };
        assert_eq!(r.relation.len(), 1);
    }

    #[test]
    fn cliquekv_and_hypergraph() {
        roundtrip(Kind::CliqueKv, "graph n=3 m=2\ne 1 2\ne 2 3\nmodulator k=1\n2\n");
        roundtrip(Kind::CliqueKv, "graph n=2 m=1\ne 1 2\nmodulator k=0\n");
        assert!(matches!(
            parse(Kind::CliqueKv, "graph n=3 m=2\ne 1 2\ne 2 3\nmodulator k=0\n"),
            Err(InstanceError::At { source, .. }) if matches!(*source, InstanceError::NotAClique { .. })
        ));
        roundtrip(Kind::Hypergraph, "hgraph n=4 m=2\nhe 3 1 2 4\nhe 2 3 4\n");
        assert!(parse(Kind::Hypergraph, "hgraph n=3 m=2\nhe 2 1 2\nhe 2 2 1\n").is_err());
    }
}
