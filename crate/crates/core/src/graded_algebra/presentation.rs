//! Text presentations of rings, e.g. `tensor(trunc(a:1, h=4), exterior(x:3))@Z2`.
//!
//! ```text
//! ring  := expr ('@' field)?
//! expr  := 'exterior' '(' gen (',' gen)* ')'
//!        | 'trunc' '(' gen ',' 'h' '=' int ')'
//!        | ('tensor' | 'wedge') '(' expr (',' expr)+ ')'
//!        | 'S' int | 'T' int | 'RP3' | 'pt'
//! gen   := name ':' int
//! ```

use thiserror::Error;

use crate::exact_linalg::Field;

use super::{AlgebraError, GradedAlgebra};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PresentationError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone)]
enum Ast {
    Exterior(Vec<(String, u32)>),
    Trunc(String, u32, usize),
    Tensor(Vec<Ast>),
    Wedge(Vec<Ast>),
    Sphere(u32),
    Torus(usize),
    Rp3,
    Point,
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, PresentationError> {
        Err(PresentationError::Syntax {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.text[self.pos..].starts_with(char::is_whitespace) {
            self.pos += self.text[self.pos..].chars().next().unwrap().len_utf8();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), PresentationError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{c}'"))
        }
    }

    fn ident(&mut self) -> Result<String, PresentationError> {
        self.skip_ws();
        let rest = &self.text[self.pos..];
        let len = rest
            .find(|c: char| !(c.is_alphanumeric() || c == '_'))
            .unwrap_or(rest.len());
        if len == 0 {
            return self.err("expected a name");
        }
        self.pos += len;
        Ok(rest[..len].to_string())
    }

    fn int(&mut self) -> Result<u64, PresentationError> {
        self.skip_ws();
        let rest = &self.text[self.pos..];
        let len = rest
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(rest.len());
        if len == 0 {
            return self.err("expected an integer");
        }
        let v = rest[..len]
            .parse()
            .or_else(|_| self.err("integer too large"))?;
        self.pos += len;
        Ok(v)
    }

    fn gen(&mut self) -> Result<(String, u32), PresentationError> {
        let name = self.ident()?;
        self.expect(':')?;
        let d = self.int()? as u32;
        Ok((name, d))
    }

    fn expr(&mut self) -> Result<Ast, PresentationError> {
        let start = self.pos;
        let word = self.ident()?;
        let lower = word.to_ascii_lowercase();
        match lower.as_str() {
            "exterior" => {
                self.expect('(')?;
                let mut gens = vec![self.gen()?];
                while self.eat(',') {
                    gens.push(self.gen()?);
                }
                self.expect(')')?;
                Ok(Ast::Exterior(gens))
            }
            "trunc" => {
                self.expect('(')?;
                let (name, d) = self.gen()?;
                self.expect(',')?;
                if !self.ident()?.eq_ignore_ascii_case("h") {
                    return self.err("expected 'h=<height>'");
                }
                self.expect('=')?;
                let h = self.int()? as usize;
                self.expect(')')?;
                Ok(Ast::Trunc(name, d, h))
            }
            "tensor" | "wedge" => {
                self.expect('(')?;
                let mut parts = vec![self.expr()?];
                while self.eat(',') {
                    parts.push(self.expr()?);
                }
                self.expect(')')?;
                if parts.len() < 2 {
                    return self.err("combinator needs at least two rings");
                }
                Ok(if lower == "tensor" {
                    Ast::Tensor(parts)
                } else {
                    Ast::Wedge(parts)
                })
            }
            "pt" => Ok(Ast::Point),
            "rp3" => Ok(Ast::Rp3),
            _ => {
                let (head, digits) = lower.split_at(1);
                match (head, digits.parse::<u32>()) {
                    ("s", Ok(m)) if m >= 1 => Ok(Ast::Sphere(m)),
                    ("t", Ok(k)) if k >= 1 => Ok(Ast::Torus(k as usize)),
                    _ => {
                        self.pos = start;
                        self.err(format!("unknown ring '{word}'"))
                    }
                }
            }
        }
    }
}

fn build(ast: &Ast, field: Field) -> Result<GradedAlgebra, AlgebraError> {
    Ok(match ast {
        Ast::Exterior(gens) => GradedAlgebra::exterior_named(gens, field)?,
        Ast::Trunc(name, d, h) => GradedAlgebra::truncated_named(name, *d, *h, field)?,
        Ast::Sphere(m) => GradedAlgebra::sphere(*m, field),
        Ast::Torus(k) => GradedAlgebra::torus(*k, field),
        Ast::Point => GradedAlgebra::ground(field),
        Ast::Rp3 => crate::space_expr::rp3_ring(field),
        Ast::Tensor(parts) | Ast::Wedge(parts) => {
            let mut acc = build(&parts[0], field)?;
            for p in &parts[1..] {
                let next = build(p, field)?;
                acc = if matches!(ast, Ast::Tensor(_)) {
                    acc.tensor_product(&next)?
                } else {
                    acc.wedge_sum(&next)?
                };
            }
            acc
        }
    })
}

/// Parses a ring presentation. A trailing `@Q`/`@Z2` overrides
/// `default_field`.
pub fn parse_presentation(
    text: &str,
    default_field: Field,
) -> Result<GradedAlgebra, PresentationError> {
    let mut c = Cursor { text, pos: 0 };
    let ast = c.expr()?;
    let mut field = default_field;
    if c.eat('@') {
        let at = c.pos;
        let name = c.ident()?;
        field = match Field::parse(&name) {
            Some(f) => f,
            None => {
                c.pos = at;
                return c.err(format!("unknown field '{name}'"));
            }
        };
    }
    if c.peek().is_some() {
        return c.err("trailing input");
    }
    Ok(build(&ast, field)?)
}
