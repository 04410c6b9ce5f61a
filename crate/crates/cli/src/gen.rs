//! Seeded instance generation. Every instance is a function of the flags and
//! `--seed`, drawn from one ChaCha8 stream.

use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use ccker::generate::{
    random_cliquekv, random_cnf, random_graph, random_gurfc, random_hypergraph, random_rcc, random_rclc, random_urfc, rng,
};
use ccker::instances::{serialize, Instance, Kind};
use ccker::Limits;
use clap::Args;

use crate::io::{field, header, load_relation, write_output};
use crate::{ShapeArgs, Status};

#[derive(Args, Debug)]
pub struct GenArgs {
    #[arg(long, value_parser = crate::parse_kind)]
    pub problem: Kind,
    #[command(flatten)]
    pub shape: ShapeArgs,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Probability of keeping each candidate tuple, hyperedge or clique attachment.
    #[arg(long, default_value_t = 0.3)]
    pub density: f64,
    /// Probability of each graph edge.
    #[arg(long, default_value_t = 0.2)]
    pub edge_density: f64,
    /// Probability of keeping each color in an rclc list.
    #[arg(long, default_value_t = 0.7)]
    pub list_density: f64,
    /// Clause count for cnf, constraint count for rcc and rclc.
    #[arg(long, visible_alias = "clauses")]
    pub constraints: Option<usize>,
    /// Number of cliques outside the modulator (cliquekv).
    #[arg(long, default_value_t = 3)]
    pub cliques: usize,
    /// Extra `d,l` block shapes for gurfc; `--d`/`--l` give the first.
    #[arg(long = "shape", value_parser = parse_shape)]
    pub shapes: Vec<(usize, usize)>,
    /// Relation file for rcc and rclc.
    #[arg(long)]
    pub relation: Option<PathBuf>,
    #[arg(short = 'o', long = "output")]
    pub output: Option<PathBuf>,
}

fn parse_shape(s: &str) -> Result<(usize, usize), String> {
    let (d, l) = s.split_once(',').ok_or_else(|| format!("expected d,l, got {s:?}"))?;
    let num = |x: &str| x.trim().parse::<usize>().map_err(|e| format!("{x:?}: {e}"));
    Ok((num(d)?, num(l)?))
}

fn probability(name: &str, p: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&p) {
        bail!("--{name} must lie in [0, 1], got {p}");
    }
    Ok(p)
}

pub fn run(args: &GenArgs, limits: &Limits) -> Result<Status> {
    let s = &args.shape;
    let density = probability("density", args.density)?;
    let edge_p = probability("edge-density", args.edge_density)?;
    let list_p = probability("list-density", args.list_density)?;
    let n = || s.n.context("--n is required");
    let mut r = rng(args.seed);
    let mut meta = vec![field("generator", "chacha8"), field("seed", args.seed), field("problem", args.problem)];
    let inst = match args.problem {
        Kind::Graph => Instance::Graph(random_graph(n()?, edge_p, &mut r)),
        Kind::Urfc => {
            let (d, l) = (s.d.context("--d is required")?, s.l.context("--l is required")?);
            if d == 0 || l == 0 {
                bail!("--d and --l must be positive");
            }
            if let Some(q) = s.q {
                meta.push(field("q", q));
            }
            Instance::Urfc(random_urfc(n()?, d, l, edge_p, density, &mut r))
        }
        Kind::Gurfc => {
            let mut shapes: Vec<(usize, usize)> = s.d.zip(s.l).into_iter().collect();
            shapes.extend(&args.shapes);
            if shapes.is_empty() {
                bail!("give --d and --l or at least one --shape d,l");
            }
            if shapes.iter().any(|&(d, l)| d == 0 || l == 0) {
                bail!("block shapes must be positive");
            }
            if let Some(q) = s.q {
                meta.push(field("q", q));
            }
            Instance::Gurfc(random_gurfc(n()?, &shapes, edge_p, density, &mut r))
        }
        Kind::Hypergraph => {
            let l = s.l.context("--l is required")?;
            if l == 0 {
                bail!("--l must be positive");
            }
            Instance::Hypergraph(random_hypergraph(n()?, l, density, &mut r))
        }
        Kind::Cnf => {
            let n = n()?;
            let k = s.k.unwrap_or(3);
            if k == 0 || k > n {
                bail!("clause width --k {k} must lie in 1..={n}");
            }
            Instance::Cnf(random_cnf(n, args.constraints.unwrap_or(2 * n), k, &mut r))
        }
        Kind::CliqueKv => {
            let k = s.k.context("--k (modulator size) is required")?;
            let t = s.t.context("--t (largest clique) is required")?;
            Instance::CliqueKv(random_cliquekv(k, t, args.cliques, edge_p, density, &mut r))
        }
        Kind::Rcc | Kind::Rclc => {
            let path = args.relation.as_deref().context("--relation is required")?;
            let (_, rel) = load_relation(path, limits)?;
            let n = n()?;
            let m = args.constraints.unwrap_or(n);
            if n == 0 && m > 0 {
                bail!("constraints need at least one vertex");
            }
            if args.problem == Kind::Rcc {
                Instance::Rcc(random_rcc(n, &rel, edge_p, m, &mut r))
            } else {
                Instance::Rclc(random_rclc(n, &rel, edge_p, m, list_p, &mut r))
            }
        }
    };
    write_output(args.output.as_deref(), &(header(&meta) + &serialize(&inst)))?;
    Ok(Status::Ok)
}
