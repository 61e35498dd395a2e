//! Recursive-descent reader for polynomial and 1-form expressions.
//!
//! ```text
//! expr   := [sign] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := base ('^' uint)?
//! base   := rational | var | '(' expr ')'
//! form   := [sign] fterm (('+'|'-') fterm)*
//! fterm  := [term ['*']] 'd'var
//! ```
//!
//! Juxtaposition is rejected for polynomials; in forms it is accepted only
//! in front of a differential (`x dy`).

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Coeff, MPoly, Monomial, Ring};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(Coeff),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Comma,
}

fn syntax(col: usize, msg: impl Into<String>) -> Error {
    Error::Syntax {
        col,
        msg: msg.into(),
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let num: String = chars[start..i].iter().collect();
            let mut value = Coeff::from_integer(num.parse::<BigInt>().expect("digits"));
            if i + 1 < chars.len() && chars[i] == '/' && chars[i + 1].is_ascii_digit() {
                i += 1;
                let dstart = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let den: BigInt = chars[dstart..i]
                    .iter()
                    .collect::<String>()
                    .parse()
                    .expect("digits");
                if den.is_zero() {
                    return Err(syntax(dstart + 1, "zero denominator"));
                }
                value /= Coeff::from_integer(den);
            }
            out.push((Tok::Num(value), col));
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), col));
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ',' => Tok::Comma,
            _ => return Err(syntax(col, format!("unexpected character `{c}`"))),
        };
        out.push((tok, col));
        i += 1;
    }
    Ok(out)
}

pub(crate) struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end_col: usize,
    ring: &'a Ring,
}

impl<'a> Parser<'a> {
    pub(crate) fn new(text: &str, ring: &'a Ring) -> Result<Self> {
        Ok(Parser {
            toks: lex(text)?,
            pos: 0,
            end_col: text.chars().count() + 1,
            ring,
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |(_, c)| *c)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        self.pos += 1;
        t
    }

    fn expect_end(&self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(t) => Err(syntax(self.col(), format!("unexpected {}", describe(t)))),
        }
    }

    pub(crate) fn parse_poly(mut self) -> Result<MPoly> {
        if self.toks.is_empty() {
            return Err(syntax(1, "empty expression"));
        }
        let p = self.expr()?;
        self.expect_end()?;
        Ok(p)
    }

    /// Parses `A_1 dx_1 + … + A_n dx_n` into its coefficient list.
    pub(crate) fn parse_form(mut self) -> Result<Vec<MPoly>> {
        let n = self.ring.dim();
        let mut coeffs = vec![MPoly::zero(self.ring); n];
        if self.toks.is_empty() {
            return Err(syntax(1, "empty form"));
        }
        let mut negate = self.sign();
        loop {
            let (coef, var) = self.form_term()?;
            let coef = if negate { -coef } else { coef };
            coeffs[var] = &coeffs[var] + &coef;
            match self.peek() {
                None => break,
                Some(Tok::Plus) => {
                    self.bump();
                    negate = false;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    negate = true;
                }
                Some(t) => {
                    return Err(syntax(self.col(), format!("unexpected {}", describe(t))));
                }
            }
        }
        Ok(coeffs)
    }

    /// Index of the ring variable `v` when `name` reads `dv` and is not
    /// itself a variable.
    fn differential(&self, name: &str) -> Option<usize> {
        if self.ring.index_of(name).is_some() {
            return None;
        }
        name.strip_prefix('d').and_then(|v| self.ring.index_of(v))
    }

    fn peek_differential(&self) -> Option<usize> {
        match self.peek() {
            Some(Tok::Ident(name)) => self.differential(name),
            _ => None,
        }
    }

    fn form_term(&mut self) -> Result<(MPoly, usize)> {
        if let Some(v) = self.peek_differential() {
            self.bump();
            return Ok((MPoly::one(self.ring), v));
        }
        let mut acc = self.factor()?;
        loop {
            if let Some(v) = self.peek_differential() {
                self.bump();
                return Ok((acc, v));
            }
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    if let Some(v) = self.peek_differential() {
                        self.bump();
                        return Ok((acc, v));
                    }
                    let f = self.factor()?;
                    acc = &acc * &f;
                }
                _ => return Err(syntax(self.col(), "expected a differential such as `dx`")),
            }
        }
    }

    fn sign(&mut self) -> bool {
        match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                true
            }
            Some(Tok::Plus) => {
                self.bump();
                false
            }
            _ => false,
        }
    }

    fn expr(&mut self) -> Result<MPoly> {
        let neg = self.sign();
        let mut acc = self.term()?;
        if neg {
            acc = -acc;
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    let t = self.term()?;
                    acc = &acc + &t;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    let t = self.term()?;
                    acc = &acc - &t;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MPoly> {
        let mut acc = self.factor()?;
        while let Some(Tok::Star) = self.peek() {
            self.bump();
            let f = self.factor()?;
            acc = &acc * &f;
        }
        match self.peek() {
            Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen) => Err(syntax(
                self.col(),
                "implicit multiplication is not allowed; use `*`",
            )),
            _ => Ok(acc),
        }
    }

    fn factor(&mut self) -> Result<MPoly> {
        let base = self.base()?;
        if let Some(Tok::Caret) = self.peek() {
            self.bump();
            let col = self.col();
            match self.bump() {
                Some(Tok::Num(e)) if e.is_integer() => {
                    let e: u32 = e
                        .to_integer()
                        .try_into()
                        .map_err(|_| syntax(col, "exponent too large"))?;
                    return Ok(base.pow(e));
                }
                _ => return Err(syntax(col, "expected a nonnegative integer exponent")),
            }
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<MPoly> {
        let col = self.col();
        match self.bump() {
            Some(Tok::Num(c)) => Ok(MPoly::constant(self.ring, c)),
            Some(Tok::Ident(name)) => match self.ring.index_of(&name) {
                Some(i) => Ok(MPoly::monomial(
                    self.ring,
                    Monomial::var(self.ring.dim(), i, 1),
                    Coeff::one(),
                )),
                None => Err(Error::UnknownVariable(name)),
            },
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(syntax(self.toks.get(self.pos - 1).map_or(self.end_col, |t| t.1), "expected `)`")),
                }
            }
            Some(t) => Err(syntax(col, format!("unexpected {}", describe(&t)))),
            None => Err(syntax(col, "unexpected end of input")),
        }
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Num(c) => format!("number `{c}`"),
        Tok::Ident(s) => format!("identifier `{s}`"),
        Tok::Plus => "`+`".into(),
        Tok::Minus => "`-`".into(),
        Tok::Star => "`*`".into(),
        Tok::Caret => "`^`".into(),
        Tok::LParen => "`(`".into(),
        Tok::RParen => "`)`".into(),
        Tok::Comma => "`,`".into(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{frac, rat};

    fn xy() -> Ring {
        Ring::new(["x", "y"]).unwrap()
    }

    #[test]
    fn term_counts() {
        assert_eq!(xy().parse("y^2 - x^5").unwrap().num_terms(), 2);
        let r = Ring::new(["x", "y", "z"]).unwrap();
        assert_eq!(r.parse("x^3 + y*z^2 + y^3 + x*y^4").unwrap().num_terms(), 4);
        assert!(xy().parse("0").unwrap().is_zero());
    }

    #[test]
    fn rationals_and_parentheses() {
        let r = xy();
        let p = r.parse("(x + 1/2)^2").unwrap();
        assert_eq!(p.constant_term(), frac(1, 4));
        assert_eq!(r.parse("-(x - y)").unwrap(), r.parse("y - x").unwrap());
        assert_eq!(r.parse("2^3").unwrap().constant_term(), rat(8));
    }

    #[test]
    fn errors_carry_columns() {
        let r = xy();
        assert_eq!(
            r.parse("x + z"),
            Err(Error::UnknownVariable("z".into()))
        );
        assert!(matches!(r.parse("x y"), Err(Error::Syntax { col: 3, .. })));
        assert!(matches!(r.parse("x +"), Err(Error::Syntax { col: 4, .. })));
        assert!(matches!(r.parse("(x"), Err(Error::Syntax { .. })));
        assert!(matches!(r.parse("x^y"), Err(Error::Syntax { col: 3, .. })));
        assert!(matches!(r.parse("x $"), Err(Error::Syntax { col: 3, .. })));
        assert!(matches!(r.parse(""), Err(Error::Syntax { col: 1, .. })));
    }

    #[test]
    fn forms() {
        let r = Ring::new(["x", "y", "z"]).unwrap();
        let c = Parser::new("z dx + x dy + y*dz", &r).unwrap().parse_form().unwrap();
        assert_eq!(c[0], r.parse("z").unwrap());
        assert_eq!(c[2], r.parse("y").unwrap());
        let s = xy();
        let c = Parser::new("-(2*x^7 + 5*y^5) dx - x*y^2*(5*y^2 + 3*x^5) dy + dx", &s)
            .unwrap()
            .parse_form()
            .unwrap();
        assert_eq!(c[0], s.parse("1 - 2*x^7 - 5*y^5").unwrap());
        assert_eq!(c[1], s.parse("-5*x*y^4 - 3*x^6*y^2").unwrap());
        assert!(Parser::new("x + dy", &s).unwrap().parse_form().is_err());
    }
}
