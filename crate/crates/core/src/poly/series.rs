//! Truncated power series in one variable and pullbacks along
//! parametrizations.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};

use super::{rat, Coeff, MPoly, Ring};
use crate::error::{Error, Result};

/// `Σ c_k t^k` known modulo `t^trunc`.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    var: String,
    terms: BTreeMap<u32, Coeff>,
    trunc: u32,
}

impl TruncatedSeries {
    pub fn zero(var: &str, trunc: u32) -> Self {
        TruncatedSeries {
            var: var.to_string(),
            terms: BTreeMap::new(),
            trunc,
        }
    }

    pub fn constant(var: &str, c: Coeff, trunc: u32) -> Self {
        Self::from_terms(var, [(0, c)], trunc)
    }

    pub fn from_terms<I>(var: &str, terms: I, trunc: u32) -> Self
    where
        I: IntoIterator<Item = (u32, Coeff)>,
    {
        let mut s = Self::zero(var, trunc);
        for (k, c) in terms {
            if k < trunc {
                *s.terms.entry(k).or_insert_with(Coeff::zero) += c;
            }
        }
        s.terms.retain(|_, c| !c.is_zero());
        s
    }

    /// Reads a polynomial in a one-variable ring.
    pub fn from_poly(p: &MPoly, trunc: u32) -> Result<Self> {
        if p.ring().dim() != 1 {
            return Err(Error::UnsupportedDimension(p.ring().dim()));
        }
        Ok(Self::from_terms(
            p.ring().var_name(0),
            p.terms().iter().map(|(m, c)| (m.exponents()[0], c.clone())),
            trunc,
        ))
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn trunc(&self) -> u32 {
        self.trunc
    }

    pub fn coeff(&self, k: u32) -> Coeff {
        self.terms.get(&k).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &Coeff)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().next().copied()
    }

    pub fn add(&self, other: &Self) -> Self {
        let trunc = self.trunc.min(other.trunc);
        Self::from_terms(
            &self.var,
            self.terms
                .iter()
                .chain(other.terms.iter())
                .map(|(k, c)| (*k, c.clone())),
            trunc,
        )
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        Self::from_terms(&self.var, self.terms.iter().map(|(k, a)| (*k, a * c)), self.trunc)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let trunc = self.trunc.min(other.trunc);
        let mut out: BTreeMap<u32, Coeff> = BTreeMap::new();
        for (i, a) in &self.terms {
            for (j, b) in &other.terms {
                if i + j >= trunc {
                    break;
                }
                *out.entry(i + j).or_insert_with(Coeff::zero) += a * b;
            }
        }
        out.retain(|_, c| !c.is_zero());
        TruncatedSeries {
            var: self.var.clone(),
            terms: out,
            trunc,
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::constant(&self.var, Coeff::one(), self.trunc);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// `d/dt`; known one order less than the input.
    pub fn derivative(&self) -> Self {
        Self::from_terms(
            &self.var,
            self.terms
                .iter()
                .filter(|(k, _)| **k > 0)
                .map(|(k, c)| (k - 1, c * rat(*k as i64))),
            self.trunc.saturating_sub(1),
        )
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*{}", self.var)?,
                _ => write!(f, "({c})*{}^{k}", self.var)?,
            }
        }
        if !self.terms.is_empty() {
            f.write_str(" + ")?;
        }
        write!(f, "O({}^{})", self.var, self.trunc)
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncatedSeries({self})")
    }
}

/// A polynomial map `t -> (x_1(t), …, x_n(t))` with `x_i(0) = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Parametrization {
    comps: Vec<MPoly>,
}

impl Parametrization {
    pub fn new(comps: Vec<MPoly>) -> Result<Self> {
        let Some(first) = comps.first() else {
            return Err(Error::InvalidInput("empty parametrization".into()));
        };
        let tring = first.ring().clone();
        if tring.dim() != 1 {
            return Err(Error::UnsupportedDimension(tring.dim()));
        }
        for c in &comps {
            tring.check_same(c.ring())?;
            if !c.vanishes_at_origin() {
                return Err(Error::InvalidInput(format!(
                    "parametrization component {c} does not vanish at t = 0"
                )));
            }
        }
        if comps.iter().all(MPoly::is_zero) {
            return Err(Error::InvalidInput("constant parametrization".into()));
        }
        Ok(Parametrization { comps })
    }

    /// Parses components over a one-variable ring.
    pub fn parse(texts: &[&str], var: &str) -> Result<Self> {
        let tring = Ring::new([var])?;
        let comps = texts
            .iter()
            .map(|s| tring.parse(s))
            .collect::<Result<Vec<_>>>()?;
        Self::new(comps)
    }

    pub fn components(&self) -> &[MPoly] {
        &self.comps
    }

    pub fn dim(&self) -> usize {
        self.comps.len()
    }

    pub fn var(&self) -> &str {
        self.comps[0].ring().var_name(0)
    }

    /// Exact check that `f(x(t)) = 0`.
    pub fn on_curve(&self, f: &MPoly) -> Result<bool> {
        if f.ring().dim() != self.dim() {
            return Err(Error::ShapeMismatch(format!(
                "parametrization has {} components, ring has {} variables",
                self.dim(),
                f.ring().dim()
            )));
        }
        Ok(f.compose(&self.comps).is_zero())
    }

    pub fn series(&self, trunc: u32) -> Vec<TruncatedSeries> {
        self.comps
            .iter()
            .map(|c| TruncatedSeries::from_poly(c, trunc).expect("one-variable ring"))
            .collect()
    }
}

fn check_shape(f: &MPoly, param: &[TruncatedSeries]) -> Result<()> {
    if f.ring().dim() != param.len() {
        return Err(Error::ShapeMismatch(format!(
            "{} series for a ring of dimension {}",
            param.len(),
            f.ring().dim()
        )));
    }
    if param.iter().any(|s| !s.coeff(0).is_zero()) {
        return Err(Error::InvalidInput("series must have zero constant term".into()));
    }
    Ok(())
}

fn substitute(f: &MPoly, param: &[TruncatedSeries], trunc: u32) -> TruncatedSeries {
    let var = param[0].var().to_string();
    let mut cache: HashMap<(usize, u32), TruncatedSeries> = HashMap::new();
    let mut acc = TruncatedSeries::zero(&var, trunc);
    for (m, c) in f.terms() {
        let mut term = TruncatedSeries::constant(&var, c.clone(), trunc);
        for (i, &e) in m.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            let p = cache
                .entry((i, e))
                .or_insert_with(|| param[i].pow(e))
                .clone();
            term = term.mul(&p);
            if term.is_zero() {
                break;
            }
        }
        acc = acc.add(&term);
    }
    acc
}

/// `f(x(t))` modulo `t^trunc`.
pub fn pullback_poly(f: &MPoly, param: &[TruncatedSeries], trunc: u32) -> Result<TruncatedSeries> {
    check_shape(f, param)?;
    let s = substitute(f, param, trunc);
    if s.is_zero() {
        return Err(Error::InconclusiveTruncation(s.trunc()));
    }
    Ok(s)
}

/// `Σ A_i(x(t)) x_i'(t)` modulo `t^(trunc - 1)`, the coefficient of `dt` in
/// the pulled-back form.
pub fn pullback_form(coeffs: &[MPoly], param: &[TruncatedSeries], trunc: u32) -> Result<TruncatedSeries> {
    let Some(first) = coeffs.first() else {
        return Err(Error::InvalidInput("empty form".into()));
    };
    check_shape(first, param)?;
    if coeffs.len() != param.len() {
        return Err(Error::ShapeMismatch("form and parametrization differ in length".into()));
    }
    let var = param[0].var().to_string();
    let mut acc = TruncatedSeries::zero(&var, trunc.saturating_sub(1));
    for (a, x) in coeffs.iter().zip(param) {
        let dx = x.derivative();
        if dx.is_zero() || a.is_zero() {
            continue;
        }
        acc = acc.add(&substitute(a, param, trunc).mul(&dx));
    }
    if acc.is_zero() {
        return Err(Error::InconclusiveTruncation(acc.trunc()));
    }
    Ok(acc)
}
