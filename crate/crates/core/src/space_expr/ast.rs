use std::fmt;

use serde::Serialize;

/// Named compact Lie groups with a registered presentation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum GroupAtom {
    /// `SO(3) ≅ RP³`; `name` keeps the spelling the user wrote.
    Rp3 { name: String },
    /// `T^k = (S¹)^k`.
    Torus(u32),
    /// `SO(m)` for `4 <= m <= 10`: category from the registry only.
    SpecialOrthogonal(u32),
}

impl GroupAtom {
    pub fn dim(&self) -> u32 {
        match self {
            GroupAtom::Rp3 { .. } => 3,
            GroupAtom::Torus(k) => *k,
            GroupAtom::SpecialOrthogonal(m) => m * (m - 1) / 2,
        }
    }

    pub fn name(&self) -> String {
        match self {
            GroupAtom::Rp3 { name } => name.clone(),
            GroupAtom::Torus(k) => format!("T{k}"),
            GroupAtom::SpecialOrthogonal(m) => format!("SO{m}"),
        }
    }

    /// Category of `SO(m)` taken on trust: it equals the mod-2 cup-length
    /// plus one for `m <= 10`. The mod-2 ring is a tensor product of
    /// truncated polynomial algebras on `x_i`, `i` odd, `i < m`, of height
    /// the least power of two `2^s` with `2^s · i >= m`.
    pub fn registry_cat(&self) -> Option<u32> {
        match self {
            GroupAtom::SpecialOrthogonal(m) => Some(
                1 + (1..*m)
                    .step_by(2)
                    .map(|i| {
                        let mut h = 1;
                        while h * i < *m {
                            h *= 2;
                        }
                        h - 1
                    })
                    .sum::<u32>(),
            ),
            _ => None,
        }
    }
}

/// Abstract syntax of spaces.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SpaceExpr {
    Sphere(u32),
    Euclidean(u32),
    Point,
    Group(GroupAtom),
    Product(Vec<SpaceExpr>),
    Wedge(Vec<SpaceExpr>),
    /// Ordered configuration space of two distinct points.
    Config2(Box<SpaceExpr>),
}

impl SpaceExpr {
    /// Dimension: sum over products, max over wedges, twice the inner
    /// dimension for two-point configuration spaces.
    pub fn dim(&self) -> u32 {
        match self {
            SpaceExpr::Sphere(m) => *m,
            SpaceExpr::Euclidean(n) => *n,
            SpaceExpr::Point => 0,
            SpaceExpr::Group(g) => g.dim(),
            SpaceExpr::Product(c) => c.iter().map(SpaceExpr::dim).sum(),
            SpaceExpr::Wedge(c) => c.iter().map(SpaceExpr::dim).max().unwrap_or(0),
            SpaceExpr::Config2(inner) => 2 * inner.dim(),
        }
    }

    /// Every expression in the language denotes a connected space.
    pub fn is_connected(&self) -> bool {
        true
    }

    /// Whether the space is a compact connected Lie group: `S¹`, `S³`, the
    /// named group atoms, a point, and products of these.
    pub fn is_compact_lie_group(&self) -> bool {
        match self {
            SpaceExpr::Sphere(m) => *m == 1 || *m == 3,
            SpaceExpr::Group(_) | SpaceExpr::Point => true,
            SpaceExpr::Product(c) => c.iter().all(SpaceExpr::is_compact_lie_group),
            _ => false,
        }
    }

    pub fn children(&self) -> &[SpaceExpr] {
        match self {
            SpaceExpr::Product(c) | SpaceExpr::Wedge(c) => c,
            SpaceExpr::Config2(inner) => std::slice::from_ref(inner),
            _ => &[],
        }
    }

    pub fn product(children: Vec<SpaceExpr>) -> SpaceExpr {
        SpaceExpr::Product(children)
    }

    pub fn wedge(children: Vec<SpaceExpr>) -> SpaceExpr {
        SpaceExpr::Wedge(children)
    }

    pub fn rp3() -> SpaceExpr {
        SpaceExpr::Group(GroupAtom::Rp3 { name: "RP3".into() })
    }
}

impl fmt::Display for SpaceExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceExpr::Sphere(m) => write!(f, "S{m}"),
            SpaceExpr::Euclidean(n) => write!(f, "R^{n}"),
            SpaceExpr::Point => write!(f, "pt"),
            SpaceExpr::Group(g) => write!(f, "{}", g.name()),
            SpaceExpr::Product(c) => {
                for (i, e) in c.iter().enumerate() {
                    if i > 0 {
                        write!(f, " x ")?;
                    }
                    if matches!(e, SpaceExpr::Product(_)) {
                        write!(f, "({e})")?;
                    } else {
                        write!(f, "{e}")?;
                    }
                }
                Ok(())
            }
            SpaceExpr::Wedge(c) => {
                write!(f, "wedge(")?;
                for (i, e) in c.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{e}")?;
                }
                write!(f, ")")
            }
            SpaceExpr::Config2(inner) => write!(f, "F({inner}, 2)"),
        }
    }
}
