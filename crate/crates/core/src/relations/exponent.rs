use super::RelationError;

/// Shape `(d, l, q)` of a uniformly rainbow free coloring problem:
/// `l`-tuples of `d`-sets, `q` colors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UrfcShape {
    pub d: usize,
    pub l: usize,
    pub q: usize,
}

/// Which branch of the exponent formula applies to a shape.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EtaCase {
    /// `l >= 2`, `q >= d + 2`: exponent `d*l`.
    Full,
    /// `l >= 2`, `q = d + 1`, `(d, l) != (1, 2)`: exponent `d*l - 1`.
    OneBelow,
    /// `l >= 2` and `q = d >= 2`, or `l = 1` and `d >= 3`: exponent `(d-1)*l`.
    DropRow,
    /// `l = 1`, `d <= 2`, `q >= 3`: exponent 2.
    Quadratic,
    /// `q = 2` and `d*l <= 2`, or `q = 1`: polynomial time, exponent 0.
    Trivial,
}

impl UrfcShape {
    pub fn new(d: usize, l: usize, q: usize) -> Result<Self, RelationError> {
        if d == 0 || l == 0 || q < d {
            return Err(RelationError::Precondition(format!(
                "shape needs q >= d >= 1 and l >= 1, got d={d} l={l} q={q}"
            )));
        }
        Ok(UrfcShape { d, l, q })
    }

    pub fn arity(&self) -> usize {
        self.d * self.l
    }

    pub fn eta_case(&self) -> EtaCase {
        let UrfcShape { d, l, q } = *self;
        let cases = [
            (l >= 2 && q >= d + 2, EtaCase::Full),
            (l >= 2 && q == d + 1 && (d, l) != (1, 2), EtaCase::OneBelow),
            ((l >= 2 && q == d && d >= 2) || (l == 1 && d >= 3), EtaCase::DropRow),
            (l == 1 && d <= 2 && q >= 3, EtaCase::Quadratic),
            ((q == 2 && d * l <= 2) || q == 1, EtaCase::Trivial),
        ];
        debug_assert_eq!(
            cases.iter().filter(|(hit, _)| *hit).count(),
            1,
            "exponent cases must be disjoint and exhaustive for {self:?}"
        );
        cases
            .iter()
            .find(|(hit, _)| *hit)
            .map(|&(_, case)| case)
            .expect("exponent cases cover every shape with q >= d")
    }

    /// The kernel exponent of the shape.
    pub fn eta(&self) -> usize {
        let UrfcShape { d, l, .. } = *self;
        match self.eta_case() {
            EtaCase::Full => d * l,
            EtaCase::OneBelow => d * l - 1,
            EtaCase::DropRow => (d - 1) * l,
            EtaCase::Quadratic => 2,
            EtaCase::Trivial => 0,
        }
    }
}

/// Kernel exponent of the `(d, l, q)` shape.
///
/// # Panics
/// If the shape is invalid (`q < d`, `d = 0` or `l = 0`).
pub fn eta(d: usize, l: usize, q: usize) -> usize {
    UrfcShape::new(d, l, q).expect("invalid URFC shape").eta()
}

fn check_clique_params(q: usize, t: usize) -> Result<(), RelationError> {
    if q < 3 || t == 0 || t > q {
        return Err(RelationError::Precondition(format!("need q >= 3 and 1 <= t <= q, got q={q} t={t}")));
    }
    Ok(())
}

/// Exponent for coloring graphs a `k`-vertex modulator away from disjoint
/// cliques of size at most `t`: the largest `eta(q-l+1, l, q)` over `l <= t`.
pub fn r_clique(q: usize, t: usize) -> Result<usize, RelationError> {
    check_clique_params(q, t)?;
    Ok((1..=t).map(|l| eta(q - l + 1, l, q)).max().unwrap_or(0))
}

/// Piecewise closed form of [`r_clique`].
pub fn r_clique_closed_form(q: usize, t: usize) -> Result<usize, RelationError> {
    check_clique_params(q, t)?;
    Ok(if t == 1 {
        q - 1
    } else if t == 2 || (t == 3 && q == 3) {
        2 * q - 3
    } else if t >= 3 && 2 * t < q + 1 {
        (q - t + 1) * t
    } else {
        (q + 1) * (q + 1) / 4
    })
}
