//! Text format for polynomials and scalars.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := atom ('^' ['-'] int)?
//! atom   := int | 'x' int | 'z' | 'a' | '(' expr ')'
//! ```
//!
//! `z` is ζ_N in ℚ(ζ_N); `a` is the fixed multiplicative generator of a
//! finite field. Division and negative powers are allowed only for nonzero
//! constants.

use num_bigint::BigInt;

use super::MultiPoly;
use crate::error::{Error, Result};
use crate::exactnum::{Field, FieldKind, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Var(usize),
    Sym(char),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            out.push(Tok::Int(text.parse().unwrap()));
        } else if c == 'x' {
            let start = i + 1;
            i += 1;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            let k: usize = text.parse().map_err(|_| Error::Parse(format!("bad variable near position {start}")))?;
            if k == 0 {
                return Err(Error::Parse("variables are numbered from x1".into()));
            }
            out.push(Tok::Var(k - 1));
        } else if c == 'z' || c == 'a' {
            out.push(Tok::Sym(c));
            i += 1;
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character '{c}'")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    field: &'a Field,
    nvars: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let neg = self.eat('-');
        let mut acc = self.term()?;
        if neg {
            acc = -&acc;
        }
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.factor()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.factor()?;
            } else if self.eat('/') {
                let d = self.factor()?;
                let inv = constant_of(&d).and_then(|c| c.inv()).ok_or_else(|| {
                    Error::Parse(format!("division by non-constant or zero '{d}'"))
                })?;
                acc = acc.scale(&inv);
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<MultiPoly> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let neg = self.eat('-');
        let e = match self.toks.get(self.pos) {
            Some(Tok::Int(v)) => {
                self.pos += 1;
                u32::try_from(v).map_err(|_| Error::Parse("exponent too large".into()))?
            }
            _ => return Err(Error::Parse("expected integer exponent".into())),
        };
        if !neg {
            return Ok(base.pow(e));
        }
        let c = constant_of(&base)
            .and_then(|c| c.inv())
            .ok_or_else(|| Error::Parse("negative power of a non-constant or zero".into()))?;
        Ok(MultiPoly::constant(c.pow_u(e as u64), self.nvars))
    }

    fn atom(&mut self) -> Result<MultiPoly> {
        let tok = self.peek().cloned().ok_or_else(|| Error::Parse("unexpected end of input".into()))?;
        self.pos += 1;
        match tok {
            Tok::Int(v) => Ok(MultiPoly::constant(self.field.from_bigint(&v), self.nvars)),
            Tok::Var(k) => {
                if k >= self.nvars {
                    return Err(Error::Parse(format!("variable x{} out of range (n = {})", k + 1, self.nvars)));
                }
                Ok(MultiPoly::var(self.field, self.nvars, k))
            }
            Tok::Sym('z') => match self.field.kind() {
                FieldKind::Cyclotomic { .. } => Ok(MultiPoly::constant(self.field.zeta_power(1), self.nvars)),
                _ => Err(Error::Parse(format!("'z' is not defined over {}", self.field))),
            },
            Tok::Sym(_) => {
                if !self.field.is_finite() {
                    return Err(Error::Parse(format!("'a' is not defined over {}", self.field)));
                }
                Ok(MultiPoly::constant(self.field.generator(), self.nvars))
            }
            Tok::Op('(') => {
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::Parse("missing ')'".into()));
                }
                Ok(inner)
            }
            Tok::Op(c) => Err(Error::Parse(format!("unexpected '{c}'"))),
        }
    }
}

fn constant_of(p: &MultiPoly) -> Option<Scalar> {
    if p.is_zero() {
        return Some(p.field().zero());
    }
    if !p.is_constant() {
        return None;
    }
    p.leading_coeff().cloned()
}

/// Parse a polynomial in x1..x_nvars over `field`.
pub fn parse_poly(field: &Field, nvars: usize, s: &str) -> Result<MultiPoly> {
    let toks = tokenize(s)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser { toks, pos: 0, field, nvars };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input in '{s}'")));
    }
    Ok(out)
}

/// Parse a field element, e.g. `3/4`, `1 - z^2`, `a^5`.
pub fn parse_scalar(field: &Field, s: &str) -> Result<Scalar> {
    let p = parse_poly(field, 0, s)?;
    constant_of(&p).ok_or_else(|| Error::Parse(format!("not a scalar: '{s}'")))
}
