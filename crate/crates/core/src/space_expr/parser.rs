//! Space expressions such as `F(S1 x R^2, 2)` or `wedge(RP3, S5)`.
//!
//! ```text
//! expr := term (('x' | '×' | '*') term)*
//! term := atom | 'wedge' '(' expr (',' expr)* ')' | 'F' '(' expr ',' '2' ')' | '(' expr ')'
//! atom := 'S'<m> | 'R^'<n> | 'RP3' | 'SO'<m> | 'SO(' <m> ')' | 'T'<k> | 'pt'
//! ```
//!
//! Whitespace is ignored and atom names are case-insensitive.

use super::{GroupAtom, SpaceError, SpaceExpr};

struct Parser {
    // lowercased input; byte offsets match the original for ASCII
    text: Vec<char>,
    pos: usize,
}

impl Parser {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, SpaceError> {
        Err(SpaceError::Syntax {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.text.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text.get(self.pos).copied()
    }

    fn starts_with(&mut self, s: &str) -> bool {
        self.skip_ws();
        let n = s.chars().count();
        self.text.len() >= self.pos + n
            && self.text[self.pos..self.pos + n]
                .iter()
                .copied()
                .eq(s.chars())
    }

    fn eat(&mut self, s: &str) -> bool {
        if self.starts_with(s) {
            self.pos += s.chars().count();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, s: &str) -> Result<(), SpaceError> {
        if self.eat(s) {
            Ok(())
        } else {
            self.err(format!("expected '{s}'"))
        }
    }

    fn number(&mut self) -> Result<u32, SpaceError> {
        let start = self.pos;
        while self.text.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a number");
        }
        let s: String = self.text[start..self.pos].iter().collect();
        s.parse().or_else(|_| {
            self.pos = start;
            self.err("number too large")
        })
    }

    fn expr(&mut self) -> Result<SpaceExpr, SpaceError> {
        let mut factors = vec![self.term()?];
        while self.eat("x") || self.eat("×") || self.eat("*") {
            factors.push(self.term()?);
        }
        Ok(if factors.len() == 1 {
            factors.pop().unwrap()
        } else {
            SpaceExpr::Product(factors)
        })
    }

    fn term(&mut self) -> Result<SpaceExpr, SpaceError> {
        let start = {
            self.skip_ws();
            self.pos
        };
        if self.eat("wedge") {
            self.expect("(")?;
            let mut parts = vec![self.expr()?];
            while self.eat(",") {
                parts.push(self.expr()?);
            }
            self.expect(")")?;
            return Ok(SpaceExpr::Wedge(parts));
        }
        if self.eat("f") {
            self.expect("(")?;
            let inner = self.expr()?;
            self.expect(",")?;
            self.skip_ws();
            let k_pos = self.pos;
            let k = self.number()?;
            if k != 2 {
                self.pos = k_pos;
                return self.err("only two-point configuration spaces are supported");
            }
            self.expect(")")?;
            let config = SpaceExpr::Config2(Box::new(inner));
            return match check_config_hypotheses(&config) {
                Ok(()) => Ok(config),
                Err(msg) => Err(SpaceError::Semantic { pos: start, msg }),
            };
        }
        if self.eat("(") {
            let e = self.expr()?;
            self.expect(")")?;
            return Ok(e);
        }
        if self.eat("rp3") {
            return Ok(SpaceExpr::rp3());
        }
        if self.eat("so") {
            let paren = self.eat("(");
            let m = self.number()?;
            if paren {
                self.expect(")")?;
            }
            return match m {
                2 => Ok(SpaceExpr::Sphere(1)),
                3 => Ok(SpaceExpr::Group(GroupAtom::Rp3 { name: "SO3".into() })),
                4..=10 => Ok(SpaceExpr::Group(GroupAtom::SpecialOrthogonal(m))),
                _ => {
                    self.pos = start;
                    self.err("SO(m) is registered for 2 <= m <= 10 only")
                }
            };
        }
        if self.eat("pt") {
            return Ok(SpaceExpr::Point);
        }
        if self.eat("r^") || self.eat("r") {
            return Ok(SpaceExpr::Euclidean(self.number()?));
        }
        if self.eat("s") {
            let m = self.number()?;
            if m == 0 {
                self.pos = start;
                return self.err("S0 is disconnected");
            }
            return Ok(SpaceExpr::Sphere(m));
        }
        if self.eat("t") {
            let k = self.number()?;
            return match k {
                0 => Ok(SpaceExpr::Point),
                1 => Ok(SpaceExpr::Sphere(1)),
                _ => Ok(SpaceExpr::Group(GroupAtom::Torus(k))),
            };
        }
        match self.peek() {
            Some(c) => self.err(format!("unexpected '{c}'")),
            None => self.err("unexpected end of input"),
        }
    }
}

/// `F(-, 2)` is accepted over `G × R^n` or over `G` alone, with `G` a
/// compact connected Lie group of positive dimension.
pub(crate) fn check_config_hypotheses(e: &SpaceExpr) -> Result<(), String> {
    let SpaceExpr::Config2(inner) = e else {
        return Ok(());
    };
    let (group, _) = split_group_euclidean(inner);
    match group {
        Some(g) if g.is_compact_lie_group() && g.dim() >= 1 => Ok(()),
        _ => Err(format!(
            "F(-, 2) needs a compact connected Lie group times a Euclidean space, got {inner}"
        )),
    }
}

/// Splits a product into its non-Euclidean part and total Euclidean
/// dimension.
pub(crate) fn split_group_euclidean(e: &SpaceExpr) -> (Option<SpaceExpr>, u32) {
    let factors: Vec<&SpaceExpr> = match e {
        SpaceExpr::Product(c) => c.iter().collect(),
        other => vec![other],
    };
    let n = factors
        .iter()
        .map(|f| match f {
            SpaceExpr::Euclidean(n) => *n,
            _ => 0,
        })
        .sum();
    let rest: Vec<SpaceExpr> = factors
        .into_iter()
        .filter(|f| !matches!(f, SpaceExpr::Euclidean(_)))
        .cloned()
        .collect();
    let group = match rest.len() {
        0 => None,
        1 => rest.into_iter().next(),
        _ => Some(SpaceExpr::Product(rest)),
    };
    (group, n)
}

pub fn parse(text: &str) -> Result<SpaceExpr, SpaceError> {
    let mut p = Parser {
        text: text.to_lowercase().chars().collect(),
        pos: 0,
    };
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(e)
}
