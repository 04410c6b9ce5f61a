use super::{check_color, ReductionError};
use crate::instances::{ColorSet, Graph, ListAssignment, Vertex};
use crate::Color;

/// Which path [`forbid_pair_gadget`] inserted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PairGadget {
    /// Two inner vertices, for distinct forbidden colors.
    Distinct,
    /// Three inner vertices, for a repeated forbidden color.
    Equal,
}

impl PairGadget {
    pub fn name(self) -> &'static str {
        match self {
            PairGadget::Distinct => "forbid_pair_distinct",
            PairGadget::Equal => "forbid_pair_equal",
        }
    }

    pub fn vertices(self) -> usize {
        match self {
            PairGadget::Distinct => 2,
            PairGadget::Equal => 3,
        }
    }
}

fn smallest_outside(q: usize, excluded: &[Color]) -> Color {
    (1..=q as Color).find(|c| !excluded.contains(c)).expect("q exceeds the excluded count")
}

fn attach_path(g: &mut Graph, lists: &mut ListAssignment, u1: Vertex, u2: Vertex, inner: &[ColorSet]) {
    let mut prev = u1;
    for &list in inner {
        let v = g.add_vertex();
        lists.push(list);
        g.ensure_edge(prev, v);
        prev = v;
    }
    g.ensure_edge(prev, u2);
}

/// Adds a path between `u1` and `u2` whose list-colorings exist exactly when
/// `(c(u1), c(u2)) != (a1, a2)`.
///
/// For `a1 != a2` the inner lists are `{a1, β}, {a2, β}`; for `a1 = a2 = α`
/// they are `{α, β}, {β, γ}, {α, γ}`. Helper colors are the smallest ones
/// not excluded. The palette size is `lists.q()`.
pub fn forbid_pair_gadget(
    g: &mut Graph,
    lists: &mut ListAssignment,
    u1: Vertex,
    u2: Vertex,
    a1: Color,
    a2: Color,
) -> Result<PairGadget, ReductionError> {
    let q = lists.q();
    if q < 3 {
        return Err(ReductionError::TooFewColors { q, need: 3 });
    }
    if lists.len() != g.n() {
        return Err(ReductionError::Shape(format!("{} lists for {} vertices", lists.len(), g.n())));
    }
    for v in [u1, u2] {
        crate::instances::check_vertex(v, g.n())?;
    }
    if u1 == u2 {
        return Err(ReductionError::SameEndpoint(u1));
    }
    check_color(a1, q)?;
    check_color(a2, q)?;
    if a1 != a2 {
        let beta = smallest_outside(q, &[a1, a2]);
        let pair = |a| [a, beta].into_iter().collect::<ColorSet>();
        attach_path(g, lists, u1, u2, &[pair(a1), pair(a2)]);
        Ok(PairGadget::Distinct)
    } else {
        let alpha = a1;
        let beta = smallest_outside(q, &[alpha]);
        let gamma = smallest_outside(q, &[alpha, beta]);
        let set = |a, b| [a, b].into_iter().collect::<ColorSet>();
        attach_path(g, lists, u1, u2, &[set(alpha, beta), set(beta, gamma), set(alpha, gamma)]);
        Ok(PairGadget::Equal)
    }
}
