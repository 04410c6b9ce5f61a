use std::path::Path;

use anyhow::Result;
use ccker::relations::{is_permutation_invariant, max_or_witness, NurItem};
use ccker::Limits;

use crate::io::{field, load_relation, print_fields};
use crate::Status;

fn join<T: ToString>(xs: impl IntoIterator<Item = T>) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn run(path: &Path, limits: &Limits) -> Result<Status> {
    let (parsed, rel) = load_relation(path, limits)?;
    let mut out = vec![
        field("arity", rel.arity()),
        field("domain", rel.q()),
        field("tuples", rel.len()),
        field("invariant", if is_permutation_invariant(&rel) { "yes" } else { "no" }),
    ];
    match max_or_witness(&rel, limits)? {
        Some(w) => {
            out.push(field("max_or_arity", w.arity()));
            out.push(field("witness_positions", join(w.positions.iter().map(|p| p + 1))));
            out.push(field("witness_alpha", join(&w.alpha)));
            out.push(field("witness_beta", join(&w.beta)));
        }
        None => out.push(field("max_or_arity", 0)),
    }
    if let Some(shape) = parsed.nur_shape() {
        out.push(field("shape", format!("{},{},{}", shape.d, shape.l, shape.q)));
        out.push(field("eta", shape.eta()));
        out.push(field("eta_case", format!("{:?}", shape.eta_case()).to_lowercase()));
        let items: Vec<NurItem> = NurItem::ALL
            .into_iter()
            .filter(|it| it.applies(shape.d, shape.l, shape.q) && it.arity(shape.d, shape.l) > 0)
            .collect();
        out.push(field("witness_items", join(items.iter().map(|it| it.index()))));
        for it in items {
            out.push(field(&format!("item{}.arity", it.index()), it.arity(shape.d, shape.l)));
        }
    }
    print_fields(&out);
    Ok(Status::Ok)
}
