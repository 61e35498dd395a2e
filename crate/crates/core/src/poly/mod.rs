//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Terms are kept sorted by the local monomial ordering (see [`Monomial`]),
//! largest first, so the leading term is `terms[0]`, the order of the
//! polynomial is the degree of the first term and the total degree is the
//! degree of the last one.

mod gcd;
mod monomial;
mod parse;
mod series;
mod univariate;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use gcd::{gcd, gcd_all};
pub use monomial::Monomial;
pub(crate) use parse::Parser;
pub use series::{pullback_form, pullback_poly, Parametrization, TruncatedSeries};
pub use univariate::{resultant, UPoly};

/// Exact rational coefficient.
pub type Coeff = BigRational;

pub fn rat(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Coeff {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// An ordered list of variable names; cheap to clone.
#[derive(Clone)]
pub struct Ring {
    vars: Arc<[String]>,
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Ring {
    pub fn new<I, S>(vars: I) -> Result<Ring>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        if vars.is_empty() {
            return Err(Error::InvalidRing("a ring needs at least one variable".into()));
        }
        for (i, v) in vars.iter().enumerate() {
            if !is_identifier(v) {
                return Err(Error::InvalidRing(format!("`{v}` is not a valid variable name")));
            }
            if vars[..i].contains(v) {
                return Err(Error::InvalidRing(format!("variable `{v}` declared twice")));
            }
        }
        Ok(Ring { vars: vars.into() })
    }

    pub fn dim(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.vars[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn check_same(&self, other: &Ring) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch {
                expected: self.to_string(),
                found: other.to_string(),
            })
        }
    }

    /// Parses a polynomial expression over this ring.
    pub fn parse(&self, text: &str) -> Result<MPoly> {
        MPoly::parse(text, self)
    }

    /// The variable `x_i` as a polynomial.
    pub fn var(&self, i: usize) -> MPoly {
        MPoly::var(self, i)
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars
    }
}

impl Eq for Ring {}

impl Hash for Ring {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.vars.hash(state);
    }
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring({self})")
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.vars.join(", "))
    }
}

/// Polynomial in `ring` with nonzero rational coefficients, terms sorted
/// largest-first in the local ordering.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MPoly {
    ring: Ring,
    terms: Vec<(Monomial, Coeff)>,
}

impl MPoly {
    pub fn zero(ring: &Ring) -> Self {
        MPoly {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Ring, c: Coeff) -> Self {
        Self::monomial(ring, Monomial::one(ring.dim()), c)
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, Coeff::one())
    }

    pub fn from_int(ring: &Ring, n: i64) -> Self {
        Self::constant(ring, rat(n))
    }

    pub fn var(ring: &Ring, i: usize) -> Self {
        Self::monomial(ring, Monomial::var(ring.dim(), i, 1), Coeff::one())
    }

    pub fn monomial(ring: &Ring, m: Monomial, c: Coeff) -> Self {
        assert_eq!(m.len(), ring.dim(), "monomial arity differs from ring dimension");
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        MPoly {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds a polynomial from arbitrary terms, combining repeats.
    pub fn from_terms<I>(ring: &Ring, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Coeff)>,
    {
        let mut acc: BTreeMap<Monomial, Coeff> = BTreeMap::new();
        for (m, c) in terms {
            assert_eq!(m.len(), ring.dim(), "monomial arity differs from ring dimension");
            *acc.entry(m).or_insert_with(Coeff::zero) += c;
        }
        MPoly {
            ring: ring.clone(),
            terms: acc.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn parse(text: &str, ring: &Ring) -> Result<MPoly> {
        Parser::new(text, ring)?.parse_poly()
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn constant_term(&self) -> Coeff {
        match self.terms.first() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => Coeff::zero(),
        }
    }

    /// True when the polynomial vanishes at the origin, i.e. is not a unit
    /// of the local ring.
    pub fn vanishes_at_origin(&self) -> bool {
        self.constant_term().is_zero()
    }

    /// Leading term in the local ordering (a term of lowest degree).
    pub fn leading(&self) -> Option<&(Monomial, Coeff)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coeff(&self) -> Option<&Coeff> {
        self.terms.first().map(|(_, c)| c)
    }

    /// Order (lowest total degree of a term); `None` for the zero polynomial.
    pub fn ord(&self) -> Option<u32> {
        self.terms.first().map(|(m, _)| m.degree())
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.last().map(|(m, _)| m.degree())
    }

    /// Degree in the single variable `x_i`.
    pub fn degree_in(&self, i: usize) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.exponents()[i]).max()
    }

    /// `degree - ord`, the écart of the polynomial.
    pub fn ecart(&self) -> u32 {
        match (self.degree(), self.ord()) {
            (Some(d), Some(o)) => d - o,
            _ => 0,
        }
    }

    pub fn coefficient(&self, m: &Monomial) -> Coeff {
        match self.terms.binary_search_by(|(t, _)| m.cmp(t)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Coeff::zero(),
        }
    }

    /// Sum of the terms of total degree `k`.
    pub fn homogeneous_part(&self, k: u32) -> MPoly {
        MPoly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == k)
                .cloned()
                .collect(),
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        match (self.ord(), self.degree()) {
            (Some(a), Some(b)) => a == b,
            _ => true,
        }
    }

    /// Drops every term of total degree `>= bound`.
    pub fn truncate_at_degree(&mut self, bound: u32) {
        let cut = self.terms.partition_point(|(m, _)| m.degree() < bound);
        self.terms.truncate(cut);
    }

    pub fn truncated(&self, bound: u32) -> MPoly {
        let mut p = self.clone();
        p.truncate_at_degree(bound);
        p
    }

    pub fn scale(&self, c: &Coeff) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(&self.ring);
        }
        MPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// Multiplies by the term `c * m`.
    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(&self.ring);
        }
        MPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect(),
        }
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> MPoly {
        match self.leading_coeff() {
            Some(c) if !c.is_one() => self.scale(&c.recip()),
            _ => self.clone(),
        }
    }

    /// `self + c * m * other`, computed by a single merge.
    pub fn add_scaled(&self, other: &MPoly, c: &Coeff, m: &Monomial) -> MPoly {
        debug_assert_eq!(self.ring, other.ring);
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().map(|(t, x)| (t.mul(m), x * c)).peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => out.push(b.next().unwrap()),
                (Some((ma, _)), Some((mb, _))) => match ma.cmp(mb) {
                    std::cmp::Ordering::Greater => out.push(a.next().unwrap().clone()),
                    std::cmp::Ordering::Less => out.push(b.next().unwrap()),
                    std::cmp::Ordering::Equal => {
                        let (ma, ca) = a.next().unwrap();
                        let (_, cb) = b.next().unwrap();
                        let s = ca + cb;
                        if !s.is_zero() {
                            out.push((ma.clone(), s));
                        }
                    }
                },
            }
        }
        MPoly {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn pow(&self, mut e: u32) -> MPoly {
        let mut base = self.clone();
        let mut acc = MPoly::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal partial derivative with respect to `x_i` (0-based).
    pub fn partial(&self, i: usize) -> Result<MPoly> {
        let n = self.ring.dim();
        if i >= n {
            return Err(Error::IndexOutOfRange { index: i, dim: n });
        }
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exponents()[i] > 0)
            .map(|(m, c)| {
                let e = m.exponents()[i];
                let mut d = m.clone();
                d.exponents_mut()[i] -= 1;
                (d, c * rat(e as i64))
            })
            .collect();
        // dividing every monomial by x_i preserves the ordering
        Ok(MPoly {
            ring: self.ring.clone(),
            terms,
        })
    }

    /// All partial derivatives, in variable order.
    pub fn gradient(&self) -> Vec<MPoly> {
        (0..self.ring.dim())
            .map(|i| self.partial(i).expect("index in range"))
            .collect()
    }

    pub fn eval(&self, point: &[Coeff]) -> Coeff {
        assert_eq!(point.len(), self.ring.dim());
        let mut total = Coeff::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    v *= num_traits::pow(x.clone(), e as usize);
                }
            }
            total += v;
        }
        total
    }

    /// Substitutes `x_i -> images[i]`; the result lives in the images' ring.
    pub fn compose(&self, images: &[MPoly]) -> MPoly {
        assert_eq!(images.len(), self.ring.dim(), "one image per variable");
        let target = images
            .first()
            .map(|p| p.ring.clone())
            .expect("ring has at least one variable");
        let mut cache: HashMap<(usize, u32), MPoly> = HashMap::new();
        let mut power = |i: usize, e: u32| -> MPoly {
            if let Some(p) = cache.get(&(i, e)) {
                return p.clone();
            }
            let p = images[i].pow(e);
            cache.insert((i, e), p.clone());
            p
        };
        let mut acc: BTreeMap<Monomial, Coeff> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut prod = MPoly::constant(&target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    prod = &prod * &power(i, e);
                }
            }
            for (tm, tc) in prod.terms {
                *acc.entry(tm).or_insert_with(Coeff::zero) += tc;
            }
        }
        MPoly {
            ring: target,
            terms: acc.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    /// `f(x + shift)`: moves the point `shift` to the origin.
    pub fn translate(&self, shift: &[Coeff]) -> MPoly {
        assert_eq!(shift.len(), self.ring.dim());
        if shift.iter().all(Zero::is_zero) {
            return self.clone();
        }
        let images: Vec<MPoly> = shift
            .iter()
            .enumerate()
            .map(|(i, c)| &MPoly::var(&self.ring, i) + &MPoly::constant(&self.ring, c.clone()))
            .collect();
        self.compose(&images)
    }

    /// Re-expresses the polynomial in another ring with the same number of
    /// variables, matching variables by position.
    pub fn with_ring(&self, ring: &Ring) -> MPoly {
        assert_eq!(ring.dim(), self.ring.dim());
        MPoly {
            ring: ring.clone(),
            terms: self.terms.clone(),
        }
    }

    /// Exact quotient `f / g` in the polynomial ring, or `None` when `g`
    /// does not divide `f`.
    pub fn exact_divide(&self, g: &MPoly) -> Result<Option<MPoly>> {
        self.ring.check_same(&g.ring)?;
        if g.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // Division needs a global (well-founded) ordering: graded lex.
        let key = |m: &Monomial| (m.degree(), m.exponents().to_vec());
        let mut rem: BTreeMap<(u32, Vec<u32>), (Monomial, Coeff)> = self
            .terms
            .iter()
            .map(|(m, c)| (key(m), (m.clone(), c.clone())))
            .collect();
        let (glm, glc) = g
            .terms
            .iter()
            .max_by_key(|(m, _)| key(m))
            .map(|(m, c)| (m.clone(), c.clone()))
            .expect("nonzero divisor");
        let mut quotient = Vec::new();
        while let Some((_, (m, c))) = rem.pop_last() {
            let Some(qm) = m.checked_div(&glm) else {
                return Ok(None);
            };
            let qc = &c / &glc;
            for (gm, gc) in &g.terms {
                if *gm == glm {
                    continue;
                }
                let tm = gm.mul(&qm);
                let k = key(&tm);
                let delta = -(gc * &qc);
                match rem.get_mut(&k) {
                    Some(entry) => {
                        entry.1 += delta;
                        if entry.1.is_zero() {
                            rem.remove(&k);
                        }
                    }
                    None => {
                        rem.insert(k, (tm, delta));
                    }
                }
            }
            quotient.push((qm, qc));
        }
        Ok(Some(MPoly::from_terms(&self.ring, quotient)))
    }

    /// True when `g` divides `self`.
    pub fn is_divisible_by(&self, g: &MPoly) -> Result<bool> {
        Ok(self.exact_divide(g)?.is_some())
    }

    fn fmt_coeff_monomial(&self, m: &Monomial, c: &Coeff, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut factors: Vec<String> = Vec::new();
        for (i, &e) in m.exponents().iter().enumerate() {
            match e {
                0 => {}
                1 => factors.push(self.ring.var_name(i).to_string()),
                _ => factors.push(format!("{}^{}", self.ring.var_name(i), e)),
            }
        }
        let a = c.abs();
        if factors.is_empty() {
            write!(f, "{a}")
        } else if a.is_one() {
            write!(f, "{}", factors.join("*"))
        } else {
            write!(f, "{}*{}", a, factors.join("*"))
        }
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            self.fmt_coeff_monomial(m, c, f)?;
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly({self})")
    }
}

impl<'a> Add<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        assert_eq!(self.ring, rhs.ring, "ring mismatch in addition");
        self.add_scaled(rhs, &Coeff::one(), &Monomial::one(self.ring.dim()))
    }
}

impl<'a> Sub<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        assert_eq!(self.ring, rhs.ring, "ring mismatch in subtraction");
        self.add_scaled(rhs, &-Coeff::one(), &Monomial::one(self.ring.dim()))
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl<'a> Mul<&'a MPoly> for &'a MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        assert_eq!(self.ring, rhs.ring, "ring mismatch in multiplication");
        if self.is_zero() || rhs.is_zero() {
            return MPoly::zero(&self.ring);
        }
        if rhs.terms.len() == 1 {
            let (m, c) = &rhs.terms[0];
            return self.mul_term(m, c);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return rhs.mul_term(m, c);
        }
        let mut acc: BTreeMap<Monomial, Coeff> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                *acc.entry(ma.mul(mb)).or_insert_with(Coeff::zero) += ca * cb;
            }
        }
        MPoly {
            ring: self.ring.clone(),
            terms: acc.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<MPoly> for MPoly {
            type Output = MPoly;
            fn $method(self, rhs: MPoly) -> MPoly {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a MPoly> for MPoly {
            type Output = MPoly;
            fn $method(self, rhs: &MPoly) -> MPoly {
                (&self).$method(rhs)
            }
        }
        impl<'a> $tr<MPoly> for &'a MPoly {
            type Output = MPoly;
            fn $method(self, rhs: MPoly) -> MPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> Ring {
        Ring::new(["x", "y"]).unwrap()
    }

    #[test]
    fn ring_rejects_bad_names() {
        assert!(Ring::new(Vec::<String>::new()).is_err());
        assert!(Ring::new(["x", "x"]).is_err());
        assert!(Ring::new(["1x"]).is_err());
        assert_eq!(Ring::new(["x", "y", "z"]).unwrap().dim(), 3);
    }

    #[test]
    fn ord_examples() {
        let r = xy();
        assert_eq!(r.parse("y^2 - x^5").unwrap().ord(), Some(2));
        assert_eq!(r.parse("2*x^7 + 5*y^5").unwrap().ord(), Some(5));
        assert_eq!(MPoly::zero(&r).ord(), None);
    }

    #[test]
    fn partial_examples() {
        let r = xy();
        let f = r.parse("y^2 - x^5").unwrap();
        assert_eq!(f.partial(0).unwrap(), r.parse("-5*x^4").unwrap());
        assert!(r.parse("7").unwrap().partial(0).unwrap().is_zero());
        assert!(matches!(f.partial(2), Err(Error::IndexOutOfRange { .. })));
        let s = Ring::new(["x", "y", "z"]).unwrap();
        let g = s.parse("x^3 + y*z^2 + y^3 + x*y^4").unwrap();
        assert_eq!(g.partial(1).unwrap(), s.parse("z^2 + 3*y^2 + 4*x*y^3").unwrap());
    }

    #[test]
    fn exact_divide_examples() {
        let r = Ring::new(["x", "t"]).unwrap();
        let xt = r.parse("x*t").unwrap();
        let x = r.parse("x").unwrap();
        assert_eq!(xt.exact_divide(&x).unwrap(), Some(r.parse("t").unwrap()));

        let r = xy();
        let phi = r.parse("y^2 - x^5").unwrap();
        let prod = &phi * &r.parse("x + y").unwrap();
        assert_eq!(prod.exact_divide(&phi).unwrap(), Some(r.parse("x + y").unwrap()));
        let s = r.parse("x^2 + y^2").unwrap();
        assert_eq!(s.exact_divide(&r.parse("x").unwrap()).unwrap(), None);
        assert_eq!(s.exact_divide(&MPoly::zero(&r)), Err(Error::DivisionByZero));
    }

    #[test]
    fn leading_term_is_lowest_degree() {
        let r = xy();
        let f = r.parse("x + x^2").unwrap();
        assert_eq!(f.leading_monomial(), Some(&Monomial::from_exponents(&[1, 0])));
        assert_eq!(f.degree(), Some(2));
        assert_eq!(f.ecart(), 1);
    }

    #[test]
    fn display_round_trips() {
        let r = xy();
        for s in ["y^2 - x^5", "-4/3*x^2*y - x", "3 + x*y", "0"] {
            let p = r.parse(s).unwrap();
            assert_eq!(r.parse(&p.to_string()).unwrap(), p);
        }
        assert_eq!(r.parse("y^2 - x^5").unwrap().to_string(), "y^2 - x^5");
    }

    #[test]
    fn translate_and_compose() {
        let r = xy();
        let f = r.parse("x^2 - y").unwrap();
        let g = f.translate(&[rat(1), rat(1)]);
        assert_eq!(g, r.parse("x^2 + 2*x - y").unwrap());
        let t = Ring::new(["t"]).unwrap();
        let img = [t.parse("t^2").unwrap(), t.parse("t^4").unwrap()];
        assert!(f.compose(&img).is_zero());
    }

    #[test]
    fn truncation_keeps_low_degrees() {
        let r = xy();
        let f = r.parse("1 + x + x*y + y^3").unwrap();
        assert_eq!(f.truncated(2), r.parse("1 + x").unwrap());
    }
}
