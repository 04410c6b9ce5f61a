//! kernelize, reduce and verify.

use anyhow::{bail, Context, Result};
use ccker::instances::{serialize, Instance, Kind};
use ccker::oracles::CnfMode;
use ccker::polykernel::{has_full_product, kernelize_carbonnel, kernelize_gurfc, kernelize_urfc};
use ccker::reductions::{
    extract_clique_constraints, gurfc_to_cliquekv, kernelize_cliquekv, nae_to_urfc, rclc_to_rcc, sat_to_rclc,
    urfc_to_hypergraph,
};
use ccker::relations::{find_or_witness, max_or_arity};
use ccker::Limits;

use crate::io::{field, header, load_instance, load_relation, parse_text, print_fields, read_text, write_output};
use crate::solve::{satisfiable, solutions, yes_no};
use crate::{Mode, RunArgs, Status};

type Fields = Vec<(String, String)>;

struct Output {
    instance: Instance,
    fields: Fields,
    /// Same vertex set and same solutions, not just the same answer.
    same_solutions: bool,
}

fn need(v: Option<usize>, flag: &str) -> Result<usize> {
    v.with_context(|| format!("{flag} is required here"))
}

fn prefixed(prefix: &str, fields: Fields) -> Fields {
    fields.into_iter().map(|(k, v)| (format!("{prefix}{k}"), v)).collect()
}

fn kernel(inst: &Instance, args: &RunArgs, limits: &Limits) -> Result<Output> {
    let q = args.shape.q;
    Ok(match inst {
        Instance::Urfc(u) => {
            let k = kernelize_urfc(u, need(q, "--q")?)?;
            let same = k.meta.preserves_solutions();
            Output { instance: Instance::Urfc(k.instance), fields: k.meta.fields(), same_solutions: same }
        }
        Instance::Gurfc(g) => {
            let k = kernelize_gurfc(g, need(q, "--q")?)?;
            let same = k.blocks.iter().all(|m| m.preserves_solutions());
            let mut fields = vec![field("blocks", k.blocks.len())];
            for (i, m) in k.blocks.iter().enumerate() {
                fields.extend(prefixed(&format!("block{}.", i + 1), m.fields()));
            }
            Output { instance: Instance::Gurfc(k.instance), fields, same_solutions: same }
        }
        Instance::CliqueKv(c) => {
            let k = kernelize_cliquekv(c, need(q, "--q")?, args.shape.t)?;
            let mut fields = k.report.fields();
            fields.push(field("t", k.t));
            fields.push(field("decided_no", k.decided_no));
            for (i, m) in k.blocks.iter().enumerate() {
                fields.extend(prefixed(&format!("block{}.", i + 1), m.fields()));
            }
            Output { instance: Instance::CliqueKv(k.instance), fields, same_solutions: false }
        }
        Instance::Rcc(r) => {
            let arity = r.relation.arity();
            let or = max_or_arity(&r.relation, limits)?;
            if or >= arity {
                bail!("the relation defines OR of its full arity {arity}; no pruning kernel applies");
            }
            let out = kernelize_carbonnel(r);
            let fields = vec![
                field("max_or_arity", or),
                field("arity", arity),
                field("input_constraints", r.constraints.len()),
                field("output_constraints", out.constraints.len()),
                field("full_product_kept", has_full_product(&out.constraints)),
            ];
            Output { instance: Instance::Rcc(out), fields, same_solutions: true }
        }
        other => bail!("no kernel for {} instances (use urfc, gurfc, cliquekv or rcc)", other.kind()),
    })
}

fn reduce(inst: &Instance, to: Kind, args: &RunArgs, limits: &Limits) -> Result<Output> {
    let q = args.shape.q;
    let (instance, report) = match (inst, to) {
        (Instance::Cnf(f), Kind::Rclc) => {
            let path = args.relation.as_deref().context("--relation is required for cnf to rclc")?;
            let (_, rel) = load_relation(path, limits)?;
            let k = match (f.width(), args.shape.k) {
                (Some(w), _) => w,
                (None, Some(k)) => k,
                (None, None) => bail!("the formula has mixed or no clause widths; pass --k"),
            };
            let witness = find_or_witness(&rel, k)?.with_context(|| format!("the relation does not define OR of arity {k}"))?;
            let out = sat_to_rclc(f, &rel, &witness)?;
            (Instance::Rclc(out.instance), out.report)
        }
        (Instance::Rclc(r), Kind::Rcc) => {
            let out = rclc_to_rcc(r)?;
            (Instance::Rcc(out.instance), out.report)
        }
        (Instance::Cnf(f), Kind::Urfc) => {
            let k = match (args.shape.k, f.width()) {
                (Some(k), _) | (None, Some(k)) => k,
                (None, None) => bail!("the formula has mixed or no clause widths; pass --k"),
            };
            let out = nae_to_urfc(f, k, args.variant)?;
            (Instance::Urfc(out.instance), out.report)
        }
        (Instance::Urfc(u), Kind::Hypergraph) => {
            let out = urfc_to_hypergraph(u, need(q, "--q")?)?;
            (Instance::Hypergraph(out.instance), out.report)
        }
        (Instance::Gurfc(g), Kind::CliqueKv) => {
            let out = gurfc_to_cliquekv(g, need(q, "--q")?)?;
            (Instance::CliqueKv(out.instance), out.report)
        }
        (Instance::CliqueKv(c), Kind::Gurfc) => {
            let t = args.shape.t.unwrap_or(c.max_clique().max(1));
            let out = extract_clique_constraints(c, need(q, "--q")?, t)?;
            (Instance::Gurfc(out.instance), out.report)
        }
        (i, to) => bail!(
            "no reduction from {} to {to}; supported: cnf->rclc, rclc->rcc, cnf->urfc, urfc->hypergraph, gurfc->cliquekv, cliquekv->gurfc",
            i.kind()
        ),
    };
    Ok(Output { instance, fields: report.fields(), same_solutions: false })
}

fn emit(out: &Output, args: &RunArgs) -> Result<()> {
    let text = header(&out.fields) + &serialize(&out.instance);
    write_output(args.output.as_deref(), &text)?;
    if args.output.is_some() {
        print_fields(&out.fields);
    }
    Ok(())
}

pub fn kernelize_cmd(args: &RunArgs, limits: &Limits) -> Result<Status> {
    let inst = load_instance(args.problem, &args.input, limits)?;
    emit(&kernel(&inst, args, limits)?, args)?;
    Ok(Status::Ok)
}

pub fn reduce_cmd(args: &RunArgs, limits: &Limits) -> Result<Status> {
    let to = args.to.context("--to is required")?;
    let inst = load_instance(args.problem, &args.input, limits)?;
    emit(&reduce(&inst, to, args, limits)?, args)?;
    Ok(Status::Ok)
}

/// A saved output, plus whether its header says it was decided outright.
fn load_saved(kind: Kind, args: &RunArgs, limits: &Limits) -> Result<Option<(Instance, bool)>> {
    let Some(path) = &args.against else { return Ok(None) };
    let text = read_text(path)?;
    let decided = text.lines().any(|l| {
        l.strip_prefix('#')
            .and_then(|rest| rest.trim().split_once('='))
            .is_some_and(|(k, v)| k.ends_with("method") && v == "decided")
    });
    Ok(Some((parse_text(kind, path, &text, limits)?, decided)))
}

fn vertex_count(inst: &Instance) -> Option<usize> {
    match inst {
        Instance::Graph(g) => Some(g.n()),
        Instance::Urfc(u) => Some(u.n()),
        Instance::Gurfc(g) => Some(g.n()),
        Instance::Rcc(r) => Some(r.graph.n()),
        Instance::Rclc(r) => Some(r.graph.n()),
        _ => None,
    }
}

/// Colors of the output side of a reduction.
fn target_q(out: &Instance, q: Option<usize>) -> Option<usize> {
    match out {
        Instance::Urfc(_) if q.is_none() => Some(2),
        _ => q,
    }
}

pub fn verify_cmd(args: &RunArgs, limits: &Limits) -> Result<Status> {
    let mode = args.mode.unwrap_or(if args.to.is_some() { Mode::Reduction } else { Mode::Kernel });
    let inst = load_instance(args.problem, &args.input, limits)?;
    let q = args.shape.q;
    let mut report: Fields = Vec::new();
    let ok = match mode {
        Mode::Kernel => {
            let out = match load_saved(args.problem, args, limits)? {
                Some((instance, decided)) => {
                    let same = !decided && !matches!(instance, Instance::CliqueKv(_));
                    Output { instance, fields: Vec::new(), same_solutions: same }
                }
                None => kernel(&inst, args, limits)?,
            };
            let cnf = CnfMode::Sat;
            if out.same_solutions && vertex_count(&inst) == vertex_count(&out.instance) {
                let before = solutions(&inst, q, cnf, limits)?;
                let after = solutions(&out.instance, q, cnf, limits)?;
                report.extend([
                    field("check", "solutions"),
                    field("before", yes_no(!before.is_empty())),
                    field("after", yes_no(!after.is_empty())),
                    field("before_count", before.len()),
                    field("after_count", after.len()),
                ]);
                before == after
            } else {
                let before = satisfiable(&inst, q, cnf, limits)?;
                let after = satisfiable(&out.instance, q, cnf, limits)?;
                report.extend([field("check", "answers"), field("before", yes_no(before)), field("after", yes_no(after))]);
                before == after
            }
        }
        Mode::Reduction => {
            let to = args.to.context("--to is required for --mode reduction")?;
            let out = match load_saved(to, args, limits)? {
                Some((instance, _)) => instance,
                None => reduce(&inst, to, args, limits)?.instance,
            };
            let cnf = match to {
                Kind::Urfc => CnfMode::Nae,
                _ => CnfMode::Sat,
            };
            let before = satisfiable(&inst, q, cnf, limits)?;
            let after = satisfiable(&out, target_q(&out, q), cnf, limits)?;
            report.extend([field("check", "answers"), field("before", yes_no(before)), field("after", yes_no(after))]);
            before == after
        }
        Mode::Sat | Mode::Nae => bail!("verify takes --mode kernel or --mode reduction"),
    };
    report.push(field("verified", if ok { "yes" } else { "no" }));
    print_fields(&report);
    Ok(if ok { Status::Ok } else { Status::Mismatch })
}
