use super::{palette, OracleError};
use crate::instances::{CliqueKvInstance, ColorSet};
use crate::Color;

/// Extends a coloring of the modulator to the whole graph, if possible.
///
/// `x_colors[i]` is the color of `inst.modulator()[i]`. Each clique of `G - X`
/// is colored independently by a bipartite matching between its vertices and
/// the colors not used on their modulator neighbors; a clique with no
/// saturating matching means no extension exists.
pub fn extend_to_cliques(
    inst: &CliqueKvInstance,
    q: usize,
    x_colors: &[Color],
) -> Result<Option<Vec<Color>>, OracleError> {
    let all = palette(q)?;
    let g = inst.graph();
    let x = inst.modulator();
    if x_colors.len() != x.len() {
        return Err(OracleError::BadColoring(format!(
            "{} colors for {} modulator vertices",
            x_colors.len(),
            x.len()
        )));
    }
    let mut colors = vec![0 as Color; g.n()];
    for (&v, &c) in x.iter().zip(x_colors) {
        if !all.contains(c) {
            return Err(OracleError::BadColoring(format!("color {c} outside 1..={q}")));
        }
        colors[v] = c;
    }
    for (i, &u) in x.iter().enumerate() {
        for &v in &x[i + 1..] {
            if g.has_edge(u, v) && colors[u] == colors[v] {
                return Err(OracleError::BadColoring(format!(
                    "modulator vertices {} and {} are adjacent and share color {}",
                    u + 1,
                    v + 1,
                    colors[u]
                )));
            }
        }
    }
    for clique in inst.cliques() {
        let available: Vec<ColorSet> = clique
            .iter()
            .map(|&v| {
                let mut set = all;
                for &w in g.neighbors(v) {
                    if colors[w] != 0 {
                        set.remove(colors[w]);
                    }
                }
                set
            })
            .collect();
        match saturating_matching(&available) {
            Some(assigned) => {
                for (&v, c) in clique.iter().zip(assigned) {
                    colors[v] = c;
                }
            }
            None => return Ok(None),
        }
    }
    Ok(Some(colors))
}

/// Assigns distinct colors to all left vertices, or `None` if impossible.
fn saturating_matching(available: &[ColorSet]) -> Option<Vec<Color>> {
    let mut owner: [Option<usize>; 65] = [None; 65];
    for left in 0..available.len() {
        let mut visited = 0u64;
        if !augment(left, available, &mut owner, &mut visited) {
            return None;
        }
    }
    let mut out = vec![0 as Color; available.len()];
    for (c, o) in owner.iter().enumerate() {
        if let Some(v) = o {
            out[*v] = c as Color;
        }
    }
    Some(out)
}

fn augment(left: usize, available: &[ColorSet], owner: &mut [Option<usize>; 65], visited: &mut u64) -> bool {
    for c in available[left].iter() {
        let bit = 1u64 << (c - 1);
        if *visited & bit != 0 {
            continue;
        }
        *visited |= bit;
        let free = match owner[c as usize] {
            None => true,
            Some(other) => augment(other, available, owner, visited),
        };
        if free {
            owner[c as usize] = Some(left);
            return true;
        }
    }
    false
}
