//! Line-oriented session files.

use std::collections::HashMap;
use std::fmt;

use singinv::poly::Parametrization;
use singinv::{Error, MPoly, OneForm, Ring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.col, self.msg)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug)]
pub enum Binding {
    Poly(MPoly),
    Form(OneForm),
    Curve(MPoly),
    Theta(Vec<Vec<MPoly>>),
    Param(Parametrization),
}

impl Binding {
    fn kind(&self) -> Kind {
        match self {
            Binding::Poly(_) => Kind::Poly,
            Binding::Form(_) => Kind::Form,
            Binding::Curve(_) => Kind::Curve,
            Binding::Theta(_) => Kind::Theta,
            Binding::Param(_) => Kind::Param,
        }
    }

    /// Canonical text, used in records.
    pub fn render(&self) -> String {
        match self {
            Binding::Poly(p) | Binding::Curve(p) => p.to_string(),
            Binding::Form(w) => w.to_string(),
            Binding::Theta(rows) => {
                let rows: Vec<String> = rows
                    .iter()
                    .map(|r| r.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", "))
                    .collect();
                format!("[{}]", rows.join("; "))
            }
            Binding::Param(p) => {
                let c: Vec<String> = p.components().iter().map(|c| c.to_string()).collect();
                format!("({})", c.join(", "))
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Poly,
    Form,
    Curve,
    Theta,
    Param,
}

/// What a directive argument may refer to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Slot {
    Form,
    /// A curve or a bare polynomial.
    Curve,
    Theta,
    Param,
    FormOrCurve,
}

impl Slot {
    fn accepts(self, k: Kind) -> bool {
        match self {
            Slot::Form => k == Kind::Form,
            Slot::Curve => matches!(k, Kind::Curve | Kind::Poly),
            Slot::Theta => k == Kind::Theta,
            Slot::Param => k == Kind::Param,
            Slot::FormOrCurve => matches!(k, Kind::Form | Kind::Curve | Kind::Poly),
        }
    }

    fn name(self) -> &'static str {
        match self {
            Slot::Form => "a form",
            Slot::Curve => "a curve",
            Slot::Theta => "a theta",
            Slot::Param => "a param",
            Slot::FormOrCurve => "a form or a curve",
        }
    }
}

/// Directive names with required and optional argument slots.
const DIRECTIVES: &[(&str, &[Slot], &[Slot])] = &[
    ("invariants", &[Slot::Form, Slot::Curve], &[]),
    ("br", &[Slot::Form, Slot::Curve], &[Slot::Theta]),
    ("br-rel", &[Slot::Form, Slot::Curve], &[Slot::Theta]),
    ("gsv", &[Slot::Form, Slot::Curve], &[]),
    ("milnor", &[Slot::FormOrCurve], &[]),
    ("tjurina", &[Slot::Curve], &[]),
    ("tang", &[Slot::Form, Slot::Curve], &[]),
    ("radial", &[Slot::Form, Slot::Curve], &[]),
    ("euler", &[Slot::Form, Slot::Curve], &[]),
    ("blowup", &[Slot::Form], &[]),
    ("blowup-verify", &[Slot::Form, Slot::Curve], &[]),
    ("pullback-order", &[Slot::Form, Slot::Param], &[Slot::Curve]),
    ("gc-check", &[Slot::Form, Slot::Curve, Slot::Curve], &[]),
    ("p2-check", &[Slot::Form, Slot::Curve], &[]),
];

pub fn directive_names() -> impl Iterator<Item = &'static str> {
    DIRECTIVES.iter().map(|d| d.0)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Directive {
    pub line: usize,
    pub name: String,
    pub args: Vec<String>,
}

impl fmt::Display for Directive {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)?;
        for a in &self.args {
            write!(f, " {a}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default)]
pub struct Session {
    pub ring: Option<Ring>,
    names: HashMap<String, Binding>,
    pub directives: Vec<Directive>,
}

impl Session {
    pub fn get(&self, name: &str) -> Option<&Binding> {
        self.names.get(name)
    }

    pub fn ring(&self) -> &Ring {
        self.ring.as_ref().expect("directives imply a ring")
    }
}

fn is_ident(s: &str) -> bool {
    let mut c = s.chars();
    c.next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && c.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
}

/// Replaces bound polynomial names by their parenthesized values.
fn substitute(expr: &str, names: &HashMap<String, Binding>) -> String {
    let mut out = String::with_capacity(expr.len());
    let mut word = String::new();
    let flush = |word: &mut String, out: &mut String| {
        match names.get(word.as_str()) {
            Some(Binding::Poly(p)) | Some(Binding::Curve(p)) => {
                out.push('(');
                out.push_str(&p.to_string());
                out.push(')');
            }
            _ => out.push_str(word),
        }
        word.clear();
    };
    for ch in expr.chars() {
        if ch.is_ascii_alphanumeric() || ch == '_' {
            word.push(ch);
        } else {
            flush(&mut word, &mut out);
            out.push(ch);
        }
    }
    flush(&mut word, &mut out);
    out
}

struct LineCtx<'a> {
    line: usize,
    text: &'a str,
}

impl LineCtx<'_> {
    fn err(&self, at: &str, msg: impl Into<String>) -> ParseError {
        ParseError {
            line: self.line,
            col: self.col_of(at),
            msg: msg.into(),
        }
    }

    /// 1-based column of a subslice of the line.
    fn col_of(&self, at: &str) -> usize {
        let base = self.text.as_ptr() as usize;
        let p = at.as_ptr() as usize;
        if p >= base && p <= base + self.text.len() {
            self.text[..p - base].chars().count() + 1
        } else {
            1
        }
    }

    fn core(&self, at: &str, e: Error, shifted: bool) -> ParseError {
        match e {
            Error::Syntax { col, msg } if !shifted => ParseError {
                line: self.line,
                col: self.col_of(at) + col.saturating_sub(1),
                msg,
            },
            e => self.err(at, e.to_string()),
        }
    }
}

pub fn parse_session(text: &str) -> Result<Session, ParseError> {
    let mut s = Session::default();
    for (i, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("");
        let ctx = LineCtx { line: i + 1, text: raw };
        let trimmed = body.trim();
        if trimmed.is_empty() {
            continue;
        }
        let (kw, rest) = match trimmed.find(char::is_whitespace) {
            Some(k) => (&trimmed[..k], trimmed[k..].trim_start()),
            None => (trimmed, ""),
        };
        match kw {
            "ring" => {
                if s.ring.is_some() {
                    return Err(ctx.err(trimmed, "ring declared twice"));
                }
                let vars: Vec<&str> = rest.split(',').map(str::trim).collect();
                if let Some(bad) = vars.iter().find(|v| !is_ident(v)) {
                    return Err(ctx.err(rest, format!("bad variable name `{bad}`")));
                }
                s.ring = Some(Ring::new(vars).map_err(|e| ctx.err(rest, e.to_string()))?);
            }
            "poly" | "form" | "curve" | "theta" | "param" => {
                let Some(ring) = s.ring.clone() else {
                    return Err(ctx.err(trimmed, "declare the ring first"));
                };
                let Some(eq) = rest.find('=') else {
                    return Err(ctx.err(rest, format!("expected `{kw} NAME = ...`")));
                };
                let name = rest[..eq].trim();
                let expr = rest[eq + 1..].trim();
                if !is_ident(name) {
                    return Err(ctx.err(rest, format!("bad name `{name}`")));
                }
                if s.names.contains_key(name) {
                    return Err(ctx.err(rest, format!("`{name}` is already bound")));
                }
                if ring.index_of(name).is_some() {
                    return Err(ctx.err(rest, format!("`{name}` is a ring variable")));
                }
                if expr.is_empty() {
                    return Err(ctx.err(rest, "missing expression"));
                }
                let sub = substitute(expr, &s.names);
                let shifted = sub != expr;
                let b = match kw {
                    "poly" => Binding::Poly(ring.parse(&sub).map_err(|e| ctx.core(expr, e, shifted))?),
                    "curve" => Binding::Curve(ring.parse(&sub).map_err(|e| ctx.core(expr, e, shifted))?),
                    "form" => Binding::Form(OneForm::parse(&sub, &ring).map_err(|e| ctx.core(expr, e, shifted))?),
                    "theta" => Binding::Theta(parse_theta(&ctx, expr, &sub, &ring)?),
                    _ => Binding::Param(parse_param(&ctx, expr)?),
                };
                s.names.insert(name.to_string(), b);
            }
            "compute" => {
                let mut words = rest.split_whitespace();
                let Some(name) = words.next() else {
                    return Err(ctx.err(trimmed, "missing directive"));
                };
                let Some(&(_, req, opt)) = DIRECTIVES.iter().find(|d| d.0 == name) else {
                    return Err(ctx.err(rest, format!("unknown directive `{name}`")));
                };
                let args: Vec<&str> = words.collect();
                if args.len() < req.len() || args.len() > req.len() + opt.len() {
                    return Err(ctx.err(rest, format!(
                        "`{name}` takes {} argument(s), got {}",
                        if opt.is_empty() { req.len().to_string() } else { format!("{} or {}", req.len(), req.len() + opt.len()) },
                        args.len()
                    )));
                }
                for (a, slot) in args.iter().zip(req.iter().chain(opt)) {
                    let Some(b) = s.names.get(*a) else {
                        return Err(ctx.err(a, format!("`{a}` is not bound")));
                    };
                    if !slot.accepts(b.kind()) {
                        return Err(ctx.err(a, format!("`{a}` must be {}", slot.name())));
                    }
                }
                s.directives.push(Directive {
                    line: i + 1,
                    name: name.to_string(),
                    args: args.iter().map(|a| a.to_string()).collect(),
                });
            }
            _ => return Err(ctx.err(trimmed, format!("unknown statement `{kw}`"))),
        }
    }
    Ok(s)
}

fn parse_theta(ctx: &LineCtx, expr: &str, sub: &str, ring: &Ring) -> Result<Vec<Vec<MPoly>>, ParseError> {
    let inner = sub
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| ctx.err(expr, "expected `[f, g, ...; ...]`"))?;
    let mut rows = Vec::new();
    for row in inner.split(';') {
        let comps = row
            .split(',')
            .map(|c| ring.parse(c.trim()).map_err(|e| ctx.err(expr, e.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        if comps.len() != ring.dim() {
            return Err(ctx.err(expr, format!(
                "a vector field needs {} components, got {}",
                ring.dim(),
                comps.len()
            )));
        }
        rows.push(comps);
    }
    Ok(rows)
}

fn parse_param(ctx: &LineCtx, expr: &str) -> Result<Parametrization, ParseError> {
    let inner = expr
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| ctx.err(expr, "expected `(x(t), y(t))`"))?;
    let comps: Vec<&str> = inner.split(',').map(str::trim).collect();
    Parametrization::parse(&comps, "t").map_err(|e| ctx.err(expr, e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bindings_and_directives() {
        let s = parse_session(
            "# comment\nring x, y\npoly f = y^2 - x^3\ncurve X = f\nform w = x dy + y dx  # pencil\n\
             param g = (t^2, t^3)\ntheta T = [2*x, 3*y; 2*y, 3*x^2]\ncompute br w X T\n",
        )
        .unwrap();
        assert_eq!(s.directives.len(), 1);
        assert_eq!(s.directives[0].to_string(), "br w X T");
        assert_eq!(s.get("X").unwrap().render(), "y^2 - x^3");
        assert_eq!(s.get("g").unwrap().render(), "(t^2, t^3)");
    }

    #[test]
    fn positions() {
        let e = parse_session("ring x, y\ncurve X = y^2 - x^^3").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(e.col > 10, "{e}");
        let e = parse_session("ring x, y\nform w = dx\ncompute br w Y").unwrap_err();
        assert_eq!((e.line, e.col), (3, 14));
        let e = parse_session("ring x, y\nform w = dx\ncompute br w w").unwrap_err();
        assert!(e.msg.contains("must be a curve"), "{e}");
        assert!(parse_session("curve X = x").is_err());
        assert!(parse_session("ring x, y\ncompute frobnicate").is_err());
        assert!(parse_session("ring x, y\npoly x = y").is_err());
    }

    #[test]
    fn empty_session() {
        let s = parse_session("").unwrap();
        assert!(s.directives.is_empty() && s.ring.is_none());
    }
}
