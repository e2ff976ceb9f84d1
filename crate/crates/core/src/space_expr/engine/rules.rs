use crate::space_expr::{GroupAtom, SpaceExpr};

use super::{cohomology, cup_length, zcl, EngineError, Invariant, RuleId, Run};

use Invariant::{Cat, Tc, TcM};

/// Category interval of `X × Y` for two existing nodes, assembled from
/// recorded cup-lengths (lower) and the product inequality (upper).
struct ProductCat {
    lo: Option<(u32, String)>,
    hi: Option<(u32, String)>,
}

impl Run<'_> {
    pub(super) fn ring_rules(&mut self, rule: RuleId, n: usize) -> Result<bool, EngineError> {
        let done = match rule {
            RuleId::R1 => self.nodes[n].cup_done,
            _ => self.nodes[n].zcl_done,
        };
        if done {
            return Ok(false);
        }
        match rule {
            RuleId::R1 => self.nodes[n].cup_done = true,
            _ => self.nodes[n].zcl_done = true,
        }
        let mut changed = false;
        for &field in self.fields {
            let ring = match cohomology(&self.nodes[n].space, field) {
                Ok(r) => r,
                Err(e) => {
                    self.conditional
                        .insert(format!("{}: no ring over {field} ({e})", self.name(n)));
                    continue;
                }
            };
            let name = self.name(n).to_string();
            if rule == RuleId::R1 {
                let c = cup_length(&ring);
                self.nodes[n].cup.insert(field, c);
                changed = true;
                self.raise(rule, n, Cat, 1 + c as u32, || {
                    format!("cup_{field}({name}) = {c}")
                })?;
            } else {
                let z = zcl(&ring);
                self.nodes[n].zcl.insert(field, z);
                changed = true;
                self.raise(rule, n, Tc, 1 + z as u32, || {
                    format!("zcl_{field}({name}) = {z}")
                })?;
            }
        }
        Ok(changed)
    }

    pub(super) fn product_cat(&mut self, n: usize) -> Result<bool, EngineError> {
        if !matches!(self.nodes[n].space, SpaceExpr::Product(_)) {
            return Ok(false);
        }
        let children = self.nodes[n].children.clone();
        let his: Option<Vec<u32>> = children.iter().map(|&c| self.nodes[c].cat.hi).collect();
        let Some(his) = his else {
            return Ok(false);
        };
        let bound = his.iter().sum::<u32>() + 1 - children.len() as u32;
        let premises = children
            .iter()
            .zip(&his)
            .map(|(&c, h)| format!("cat({}) <= {h}", self.name(c)))
            .collect::<Vec<_>>()
            .join(", ");
        self.lower(RuleId::R3, n, Cat, bound, || premises)
    }

    pub(super) fn wedge_cat(&mut self, n: usize) -> Result<bool, EngineError> {
        if !matches!(self.nodes[n].space, SpaceExpr::Wedge(_)) {
            return Ok(false);
        }
        let children = self.nodes[n].children.clone();
        let lo = children
            .iter()
            .map(|&c| self.nodes[c].cat.lo)
            .max()
            .unwrap_or(1);
        let describe = |run: &Self| {
            children
                .iter()
                .map(|&c| format!("cat({}) = {}", run.name(c), run.nodes[c].cat))
                .collect::<Vec<_>>()
                .join(", ")
        };
        let p = describe(self);
        let mut changed = self.raise(RuleId::R4, n, Cat, lo, || p)?;
        let his: Option<Vec<u32>> = children.iter().map(|&c| self.nodes[c].cat.hi).collect();
        if let Some(hi) = his.and_then(|h| h.into_iter().max()) {
            let p = describe(self);
            changed |= self.lower(RuleId::R4, n, Cat, hi, || p)?;
        }
        Ok(changed)
    }

    pub(super) fn atom_cat(&mut self, n: usize) -> Result<bool, EngineError> {
        let (value, premise) = match &self.nodes[n].space {
            SpaceExpr::Sphere(m) => (2, format!("S{m} is a sphere")),
            SpaceExpr::Point => (1, "contractible".to_string()),
            SpaceExpr::Group(g @ GroupAtom::SpecialOrthogonal(_)) => match g.registry_cat() {
                Some(v) => (v, format!("external registry value for {}", g.name())),
                None => return Ok(false),
            },
            _ => return Ok(false),
        };
        let p = premise.clone();
        let a = self.raise(RuleId::R5, n, Cat, value, || p)?;
        let b = self.lower(RuleId::R5, n, Cat, value, || premise)?;
        Ok(a | b)
    }

    pub(super) fn tc_from_cat(&mut self, n: usize) -> Result<bool, EngineError> {
        let Some(hi) = self.nodes[n].cat.hi else {
            return Ok(false);
        };
        self.lower(RuleId::R6, n, Tc, 2 * hi - 1, || format!("cat <= {hi}"))
    }

    /// Contributes only the directions not already implied by R9:
    /// `TC <= cat` and `TC^M <= TC`.
    pub(super) fn lie_group(&mut self, n: usize) -> Result<bool, EngineError> {
        let space = &self.nodes[n].space;
        let atom = !matches!(space, SpaceExpr::Product(_) | SpaceExpr::Wedge(_));
        if !(atom && space.is_compact_lie_group()) {
            return Ok(false);
        }
        let mut changed = false;
        if let Some(h) = self.nodes[n].cat.hi {
            changed |= self.lower(RuleId::R7, n, Tc, h, || format!("Lie group, cat <= {h}"))?;
        }
        if let Some(h) = self.nodes[n].tc.hi {
            changed |= self.lower(RuleId::R7, n, TcM, h, || format!("Lie group, TC <= {h}"))?;
        }
        Ok(changed)
    }

    pub(super) fn sphere_tc(&mut self, n: usize) -> Result<bool, EngineError> {
        let SpaceExpr::Sphere(m) = self.nodes[n].space else {
            return Ok(false);
        };
        let v = if m % 2 == 1 { 2 } else { 3 };
        let parity = if m % 2 == 1 { "odd" } else { "even" };
        let mut changed = self.raise(RuleId::R8, n, Tc, v, || format!("m = {m} {parity}"))?;
        changed |= self.lower(RuleId::R8, n, Tc, v, || format!("m = {m} {parity}"))?;
        if let Some(h) = self.nodes[n].tc.hi {
            changed |= self.lower(RuleId::R8, n, TcM, h, || format!("sphere, TC <= {h}"))?;
        }
        Ok(changed)
    }

    pub(super) fn general_inequalities(&mut self, n: usize) -> Result<bool, EngineError> {
        let r = RuleId::R9;
        let mut changed = false;
        let cat = self.nodes[n].cat;
        changed |= self.raise(r, n, Tc, cat.lo, || format!("cat >= {}", cat.lo))?;
        let tc = self.nodes[n].tc;
        if let Some(h) = tc.hi {
            changed |= self.lower(r, n, Cat, h, || format!("TC <= {h}"))?;
            changed |= self.lower(r, n, TcM, h + 1, || format!("TC <= {h}"))?;
        }
        changed |= self.raise(r, n, TcM, tc.lo, || format!("TC >= {}", tc.lo))?;
        let tcm = self.nodes[n].tcm;
        if let Some(h) = tcm.hi {
            changed |= self.lower(r, n, Tc, h, || format!("TC^M <= {h}"))?;
        }
        Ok(changed)
    }

    fn product_cat_of(&self, x: usize, y: usize) -> ProductCat {
        let (nx, ny) = (&self.nodes[x], &self.nodes[y]);
        let lo = self
            .fields
            .iter()
            .filter_map(|f| {
                let (a, b) = (nx.cup.get(f)?, ny.cup.get(f)?);
                Some((
                    (1 + a + b) as u32,
                    format!("cup_{f}({}) + cup_{f}({}) = {a} + {b}", nx.expr, ny.expr),
                ))
            })
            .fold(None, |best: Option<(u32, String)>, cand| match best {
                Some(b) if b.0 >= cand.0 => Some(b),
                _ => Some(cand),
            });
        let hi = if self.rules.contains(RuleId::R3) {
            match (nx.cat.hi, ny.cat.hi) {
                (Some(a), Some(b)) => Some((
                    a + b - 1,
                    format!("cat({}) + cat({}) - 1 = {a} + {b} - 1", nx.expr, ny.expr),
                )),
                _ => None,
            }
        } else {
            None
        };
        ProductCat { lo, hi }
    }

    fn binary_wedge(&self, n: usize) -> Option<(usize, usize)> {
        match (&self.nodes[n].space, self.nodes[n].children.as_slice()) {
            (SpaceExpr::Wedge(_), &[x, y]) => Some((x, y)),
            _ => None,
        }
    }

    pub(super) fn wedge_formula(&mut self, n: usize) -> Result<bool, EngineError> {
        let Some((x, y)) = self.binary_wedge(n) else {
            return Ok(false);
        };
        let d = self.nodes[x].dim.max(self.nodes[y].dim);
        let pc = self.product_cat_of(x, y);
        let cat_lo = pc.lo.as_ref().map_or(1, |(v, _)| *v);
        let (tx, ty) = (self.nodes[x].tc, self.nodes[y].tc);
        let lo = tx.lo.max(ty.lo).max(cat_lo);
        if lo < d + 2 {
            return Ok(false);
        }
        let premise = format!(
            "TC({}) = {tx}, TC({}) = {ty}, cat(product) >= {cat_lo}, dim = {d}",
            self.name(x),
            self.name(y)
        );
        let p = premise.clone();
        let mut changed = self.raise(RuleId::R10, n, Tc, lo, || p)?;
        if let (Some(a), Some(b), Some((c, _))) = (tx.hi, ty.hi, pc.hi) {
            changed |= self.lower(RuleId::R10, n, Tc, a.max(b).max(c), || premise)?;
        }
        Ok(changed)
    }

    pub(super) fn wedge_with_sphere(&mut self, n: usize) -> Result<bool, EngineError> {
        let Some((a, b)) = self.binary_wedge(n) else {
            return Ok(false);
        };
        for (x, s) in [(a, b), (b, a)] {
            if !matches!(self.nodes[s].space, SpaceExpr::Sphere(_)) {
                continue;
            }
            let nx = &self.nodes[x];
            let (Some(c), Some(t), Some(tm)) = (nx.cat.exact(), nx.tc.exact(), nx.tcm.exact())
            else {
                continue;
            };
            if c != t || t != tm {
                continue;
            }
            let pc = self.product_cat_of(x, s);
            let (Some((lo, why_lo)), Some((hi, why_hi))) = (pc.lo, pc.hi) else {
                continue;
            };
            if lo != hi || lo != c + 1 {
                continue;
            }
            let premise = format!(
                "cat = TC = TC^M = {c} on {}; cat({} x {}) = {lo} via {why_lo} and {why_hi}",
                self.name(x),
                self.name(x),
                self.name(s)
            );
            let mut changed = false;
            for inv in [Tc, TcM] {
                let p = premise.clone();
                changed |= self.raise(RuleId::R11, n, inv, c + 1, || p)?;
                let p = premise.clone();
                changed |= self.lower(RuleId::R11, n, inv, c + 1, || p)?;
            }
            return Ok(changed);
        }
        Ok(false)
    }

    pub(super) fn sharp_product(&mut self, n: usize) -> Result<bool, EngineError> {
        if !matches!(self.nodes[n].space, SpaceExpr::Product(_)) {
            return Ok(false);
        }
        let children = self.nodes[n].children.clone();
        for &field in self.fields {
            let mut total = 0;
            let mut premises = Vec::new();
            let sharp = children.iter().all(|&c| {
                let node = &self.nodes[c];
                match (node.tc.exact(), node.zcl.get(&field)) {
                    (Some(t), Some(&z)) if t == 1 + z as u32 => {
                        total += t;
                        premises.push(format!("TC({}) = {t} = 1 + zcl_{field}", node.expr));
                        true
                    }
                    _ => false,
                }
            });
            if !sharp {
                continue;
            }
            let value = total + 1 - children.len() as u32;
            let premise = premises.join(", ");
            let p = premise.clone();
            let mut changed = self.raise(RuleId::R12, n, Tc, value, || p)?;
            changed |= self.lower(RuleId::R12, n, Tc, value, || premise)?;
            return Ok(changed);
        }
        Ok(false)
    }

    /// Lower half only; the upper bound 3 follows from R4, R5 and R6.
    pub(super) fn wedge_of_spheres(&mut self, n: usize) -> Result<bool, EngineError> {
        let SpaceExpr::Wedge(children) = &self.nodes[n].space else {
            return Ok(false);
        };
        let dims: Option<Vec<u32>> = children
            .iter()
            .map(|c| match c {
                SpaceExpr::Sphere(m) => Some(*m),
                _ => None,
            })
            .collect();
        let Some(dims) = dims else {
            return Ok(false);
        };
        if dims.len() < 2 && dims.iter().all(|m| m % 2 == 1) {
            return Ok(false);
        }
        self.raise(RuleId::R13, n, Tc, 3, || {
            format!("wedge of {} spheres of dimensions {dims:?}", dims.len())
        })
    }

    pub(super) fn dimension_bound(&mut self, n: usize) -> Result<bool, EngineError> {
        let d = self.nodes[n].dim;
        self.lower(RuleId::R14, n, Cat, d + 1, || format!("dim = {d}"))
    }
}
