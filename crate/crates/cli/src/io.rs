use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use ccker::instances::{parse_with, Instance, InstanceError, Kind, ParseContext};
use ccker::oracles::OracleError;
use ccker::polykernel::KernelError;
use ccker::reductions::ReductionError;
use ccker::relations::{parse_relation, Relation, RelationError, RelationSpec};
use ccker::{BudgetExceeded, Limits};

pub fn read_text(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading stdin")?;
        return Ok(s);
    }
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn base_dir(path: &Path) -> PathBuf {
    match path.parent() {
        Some(p) if path != Path::new("-") => p.to_path_buf(),
        _ => PathBuf::from("."),
    }
}

/// Parses an instance; `rel file <path>` lines resolve relative to the instance file.
pub fn load_instance(kind: Kind, path: &Path, limits: &Limits) -> Result<Instance> {
    parse_text(kind, path, &read_text(path)?, limits)
}

/// As [`load_instance`] for text already read from `path`.
pub fn parse_text(kind: Kind, path: &Path, text: &str, limits: &Limits) -> Result<Instance> {
    let dir = base_dir(path);
    let resolve = |p: &str| fs::read_to_string(dir.join(p)).map_err(|e| format!("{p}: {e}"));
    let ctx = ParseContext { limits: *limits, resolve: Some(&resolve) };
    parse_with(kind, text, &ctx).with_context(|| format!("parsing {} as {kind}", path.display()))
}

pub fn load_relation(path: &Path, limits: &Limits) -> Result<(RelationSpec, Relation)> {
    let text = read_text(path)?;
    let parsed = parse_relation(&text).with_context(|| format!("parsing relation {}", path.display()))?;
    let rel = parsed.materialize(limits)?;
    Ok((parsed, rel))
}

/// Writes to `path` through a temporary file in the same directory, or to stdout.
pub fn write_output(path: Option<&Path>, text: &str) -> Result<()> {
    let Some(path) = path else {
        print!("{text}");
        return Ok(());
    };
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).with_context(|| format!("creating a file in {}", dir.display()))?;
    tmp.write_all(text.as_bytes())?;
    tmp.persist(path).with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

pub fn header(fields: &[(String, String)]) -> String {
    fields.iter().map(|(k, v)| format!("# {k}={v}\n")).collect()
}

pub fn print_fields(fields: &[(String, String)]) {
    for (k, v) in fields {
        println!("{k}={v}");
    }
}

pub fn field(key: &str, value: impl ToString) -> (String, String) {
    (key.to_string(), value.to_string())
}

/// Whether the failure was a budget cap rather than bad input.
pub fn is_budget(err: &anyhow::Error) -> bool {
    err.chain().any(|e| {
        e.downcast_ref::<BudgetExceeded>().is_some()
            || matches!(e.downcast_ref::<OracleError>(), Some(OracleError::Budget(_)))
            || e.downcast_ref::<RelationError>().is_some_and(relation_budget)
            || e.downcast_ref::<KernelError>().is_some_and(kernel_budget)
            || e.downcast_ref::<InstanceError>().is_some_and(instance_budget)
            || e.downcast_ref::<ReductionError>().is_some_and(|r| match r {
                ReductionError::Kernel(k) => kernel_budget(k),
                ReductionError::Relation(r) => relation_budget(r),
                ReductionError::Instance(i) => instance_budget(i),
                _ => false,
            })
    })
}

fn relation_budget(e: &RelationError) -> bool {
    matches!(e, RelationError::Budget(_))
}

fn kernel_budget(e: &KernelError) -> bool {
    match e {
        KernelError::Budget(_) => true,
        KernelError::Relation(r) => relation_budget(r),
        _ => false,
    }
}

fn instance_budget(e: &InstanceError) -> bool {
    match e {
        InstanceError::Relation(r) => relation_budget(r),
        InstanceError::At { source, .. } => instance_budget(source),
        _ => false,
    }
}
