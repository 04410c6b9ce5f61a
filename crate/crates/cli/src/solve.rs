use anyhow::{bail, Context, Result};
use ccker::instances::Instance;
use ccker::oracles::{
    find_graph_qcol, find_gurfc, find_hypergraph_qcol, find_rcc, find_rclc, find_urfc, solve_cnf, solve_graph_qcol,
    solve_gurfc, solve_hypergraph_qcol, solve_rcc, solve_rclc, solve_urfc, CnfMode, SolutionSet,
};
use ccker::{Color, Limits};

use crate::io::load_instance;
use crate::{Mode, SolveArgs, Status};

pub fn cnf_mode(mode: Option<Mode>) -> Result<CnfMode> {
    match mode {
        None | Some(Mode::Sat) => Ok(CnfMode::Sat),
        Some(Mode::Nae) => Ok(CnfMode::Nae),
        Some(m) => bail!("--mode {m:?} does not apply to CNF solving; use sat or nae"),
    }
}

fn need_q(q: Option<usize>) -> Result<usize> {
    q.context("--q is required for this problem")
}

/// Every solution, as sorted colorings; CNF assignments map true to 1 and false to 2.
pub fn solutions(inst: &Instance, q: Option<usize>, mode: CnfMode, limits: &Limits) -> Result<Vec<Vec<Color>>> {
    let set: SolutionSet = match inst {
        Instance::Graph(g) => solve_graph_qcol(g, need_q(q)?, limits)?,
        Instance::Urfc(u) => solve_urfc(u, need_q(q)?, limits)?,
        Instance::Gurfc(g) => solve_gurfc(g, need_q(q)?, limits)?,
        Instance::Rcc(r) => solve_rcc(r, limits)?,
        Instance::Rclc(r) => solve_rclc(r, limits)?,
        Instance::CliqueKv(c) => solve_graph_qcol(c.graph(), need_q(q)?, limits)?,
        Instance::Hypergraph(h) => solve_hypergraph_qcol(h, need_q(q)?, limits)?,
        Instance::Cnf(f) => {
            let mut out: Vec<Vec<Color>> = solve_cnf(f, mode, limits)?
                .into_iter()
                .map(|a| a.into_iter().map(|b| if b { 1 } else { 2 }).collect())
                .collect();
            out.sort();
            return Ok(out);
        }
    };
    let mut out = set.colorings().to_vec();
    out.sort();
    Ok(out)
}

pub fn satisfiable(inst: &Instance, q: Option<usize>, mode: CnfMode, limits: &Limits) -> Result<bool> {
    Ok(match inst {
        Instance::Graph(g) => find_graph_qcol(g, need_q(q)?, limits)?.is_some(),
        Instance::Urfc(u) => find_urfc(u, need_q(q)?, limits)?.is_some(),
        Instance::Gurfc(g) => find_gurfc(g, need_q(q)?, limits)?.is_some(),
        Instance::Rcc(r) => find_rcc(r, limits)?.is_some(),
        Instance::Rclc(r) => find_rclc(r, limits)?.is_some(),
        Instance::CliqueKv(c) => find_graph_qcol(c.graph(), need_q(q)?, limits)?.is_some(),
        Instance::Hypergraph(h) => find_hypergraph_qcol(h, need_q(q)?, limits)?.is_some(),
        // No first-solution search for CNF; formulas here are desk-sized.
        Instance::Cnf(f) => !solve_cnf(f, mode, limits)?.is_empty(),
    })
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "YES"
    } else {
        "NO"
    }
}

pub fn run(args: &SolveArgs, limits: &Limits) -> Result<Status> {
    let inst = load_instance(args.problem, &args.input, limits)?;
    let mode = cnf_mode(args.mode)?;
    if args.count {
        let all = solutions(&inst, args.shape.q, mode, limits)?;
        println!("{}", yes_no(!all.is_empty()));
        println!("count={}", all.len());
    } else {
        println!("{}", yes_no(satisfiable(&inst, args.shape.q, mode, limits)?));
    }
    Ok(Status::Ok)
}
