//! Ideals of the local ring at the origin: standard bases, colength and an
//! independent linear-algebra oracle.

mod minors;
mod oracle;
mod standard;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Sub};

use crate::error::{Error, Result};
use crate::poly::{gcd_all, MPoly, Monomial, Ring};

pub use minors::{determinant, minors};
pub use oracle::{colength_oracle, colength_oracle_auto, OracleValue};
pub use standard::{standard_basis, StandardBasis, DEFAULT_MAX_STEPS};

/// Negative degree reverse lexicographic ordering. This is the `Ord` of
/// [`Monomial`]; the marker type exists for callers that want to name it.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LocalOrdering;

impl LocalOrdering {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        a.cmp(b)
    }
}

/// Finitely generated ideal of the local ring; zero generators are dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalIdeal {
    ring: Ring,
    gens: Vec<MPoly>,
}

impl LocalIdeal {
    pub fn new(ring: &Ring, gens: impl IntoIterator<Item = MPoly>) -> Result<Self> {
        let mut out = Vec::new();
        for g in gens {
            ring.check_same(g.ring())?;
            if !g.is_zero() {
                out.push(g);
            }
        }
        Ok(LocalIdeal {
            ring: ring.clone(),
            gens: out,
        })
    }

    /// Builds the ideal from a nonempty list, taking the ring from it.
    pub fn from_gens(gens: Vec<MPoly>) -> Result<Self> {
        let Some(first) = gens.first() else {
            return Err(Error::InvalidInput("an ideal needs at least one generator".into()));
        };
        let ring = first.ring().clone();
        Self::new(&ring, gens)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn gens(&self) -> &[MPoly] {
        &self.gens
    }

    /// True when every generator vanished, i.e. this is the zero ideal.
    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn with(&self, extra: impl IntoIterator<Item = MPoly>) -> Result<Self> {
        Self::new(&self.ring, self.gens.iter().cloned().chain(extra))
    }

    /// `dim O/I` with the default step budget.
    pub fn colength(&self) -> Result<Colength> {
        colength(self, DEFAULT_MAX_STEPS)
    }
}

impl fmt::Display for LocalIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(">")
    }
}

/// `dim O/I`, possibly infinite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Colength {
    Finite(u64),
    Infinite,
}

impl Colength {
    pub fn is_finite(&self) -> bool {
        matches!(self, Colength::Finite(_))
    }

    pub fn finite(&self) -> Option<u64> {
        match self {
            Colength::Finite(v) => Some(*v),
            Colength::Infinite => None,
        }
    }

    /// The finite value, or a non-isolated error naming `what`.
    pub fn require(&self, what: &str) -> Result<u64> {
        self.finite()
            .ok_or_else(|| Error::NonIsolated(what.to_string()))
    }
}

impl PartialOrd for Colength {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Colength {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Colength::Finite(a), Colength::Finite(b)) => a.cmp(b),
            (Colength::Finite(_), Colength::Infinite) => Ordering::Less,
            (Colength::Infinite, Colength::Finite(_)) => Ordering::Greater,
            (Colength::Infinite, Colength::Infinite) => Ordering::Equal,
        }
    }
}

impl Add for Colength {
    type Output = Colength;
    fn add(self, rhs: Colength) -> Colength {
        match (self, rhs) {
            (Colength::Finite(a), Colength::Finite(b)) => Colength::Finite(a + b),
            _ => Colength::Infinite,
        }
    }
}

impl Sub<u64> for Colength {
    type Output = Colength;
    fn sub(self, rhs: u64) -> Colength {
        match self {
            Colength::Finite(a) => Colength::Finite(a.saturating_sub(rhs)),
            Colength::Infinite => Colength::Infinite,
        }
    }
}

impl fmt::Display for Colength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Colength::Finite(v) => write!(f, "{v}"),
            Colength::Infinite => f.write_str("infinity"),
        }
    }
}

/// Number of monomials outside the staircase of a set of leading monomials.
pub fn staircase_count(n: usize, leading: &[Monomial]) -> Colength {
    let mut bounds = vec![None; n];
    for m in leading {
        if m.is_one() {
            return Colength::Finite(0);
        }
        if let Some((i, e)) = m.as_pure_power() {
            bounds[i] = Some(bounds[i].map_or(e, |b: u32| b.min(e)));
        }
    }
    let Some(bounds) = bounds.into_iter().collect::<Option<Vec<u32>>>() else {
        return Colength::Infinite;
    };
    let mut count = 0u64;
    walk_box(&bounds, leading, &mut vec![0; n], 0, &mut |_| count += 1);
    Colength::Finite(count)
}

/// Calls `visit` on every exponent vector inside the box `bounds` that no
/// element of `leading` divides.
pub(crate) fn walk_box(
    bounds: &[u32],
    leading: &[Monomial],
    cur: &mut Vec<u32>,
    i: usize,
    visit: &mut dyn FnMut(&[u32]),
) {
    if i == bounds.len() {
        let m = Monomial::from_exponents(cur);
        if !leading.iter().any(|l| l.divides(&m)) {
            visit(cur);
        }
        return;
    }
    for e in 0..bounds[i] {
        cur[i] = e;
        // prune: once the partial vector is divisible, larger e stays divisible
        if i + 1 < bounds.len() {
            let partial = Monomial::from_exponents(
                &cur[..=i]
                    .iter()
                    .copied()
                    .chain(std::iter::repeat_n(0, bounds.len() - i - 1))
                    .collect::<Vec<_>>(),
            );
            if leading.iter().any(|l| l.divides(&partial)) {
                break;
            }
        }
        walk_box(bounds, leading, cur, i + 1, visit);
    }
    cur[i] = 0;
}

/// `dim O/I` by counting the staircase of a standard basis.
///
/// Works modulo `m^d` for growing `d` first: a value `c < d` for `I + m^d`
/// forces `m^c ⊂ I` by Nakayama, so it is the answer. When that does not
/// settle quickly, a common factor through the origin means a curve of
/// zeros. In two variables its absence makes the ideal isolated, so the
/// loop ends; otherwise it falls back to the untruncated algorithm past
/// degree 256.
pub fn colength(ideal: &LocalIdeal, max_steps: usize) -> Result<Colength> {
    if ideal.is_zero() {
        return Ok(Colength::Infinite);
    }
    let n = ideal.ring().dim();
    let mut d = 4u32;
    loop {
        let c = standard::truncated_colength(ideal, max_steps, d)?;
        if c < d as u64 {
            return Ok(Colength::Finite(c));
        }
        if d == 16 && n >= 2 {
            let g = gcd_all(ideal.gens());
            if !g.is_constant() && g.ord().is_some_and(|o| o > 0) {
                return Ok(Colength::Infinite);
            }
        }
        if n != 2 && d >= 256 {
            break;
        }
        d *= 2;
    }
    let sb = standard_basis(ideal, max_steps)?;
    Ok(sb.colength())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(r: &Ring, gens: &[&str]) -> LocalIdeal {
        LocalIdeal::new(r, gens.iter().map(|g| r.parse(g).unwrap())).unwrap()
    }

    #[test]
    fn colength_examples() {
        let r = Ring::new(["x", "y"]).unwrap();
        assert_eq!(ideal(&r, &["x", "y"]).colength().unwrap(), Colength::Finite(1));
        assert_eq!(ideal(&r, &["y^2", "x^5"]).colength().unwrap(), Colength::Finite(10));
        assert_eq!(ideal(&r, &["y"]).colength().unwrap(), Colength::Infinite);
        assert_eq!(ideal(&r, &["0"]).colength().unwrap(), Colength::Infinite);
        assert_eq!(ideal(&r, &["1 + x"]).colength().unwrap(), Colength::Finite(0));
    }

    #[test]
    fn large_and_infinite_colengths() {
        let r = Ring::new(["x", "y"]).unwrap();
        // needs several rounds of the degree doubling
        assert_eq!(ideal(&r, &["y^2", "x^40"]).colength().unwrap(), Colength::Finite(80));
        // i(f, x^19) + i(f, y^2) for f = y^3 - x^20
        assert_eq!(ideal(&r, &["y^3 - x^20", "x^19*y^2"]).colength().unwrap(), Colength::Finite(19 * 3 + 2 * 20));
        // a shared factor y, up to units at the origin
        assert_eq!(ideal(&r, &["3*y - 2*y^2", "y*(1 + x) + y^3"]).colength().unwrap(), Colength::Infinite);
        // the shared factor 1 + x is a unit here
        assert_eq!(ideal(&r, &["x*(1 + x)", "y*(1 + x)"]).colength().unwrap(), Colength::Finite(1));
        let r3 = Ring::new(["x", "y", "z"]).unwrap();
        assert_eq!(ideal(&r3, &["x", "y", "z^5"]).colength().unwrap(), Colength::Finite(5));
        assert_eq!(ideal(&r3, &["x*z", "y*z"]).colength().unwrap(), Colength::Infinite);
        assert_eq!(ideal(&r3, &["x", "y"]).colength().unwrap(), Colength::Infinite);
    }

    #[test]
    fn staircase_of_monomials() {
        let m = |e: &[u32]| Monomial::from_exponents(e);
        assert_eq!(staircase_count(2, &[m(&[0, 2]), m(&[5, 0])]), Colength::Finite(10));
        assert_eq!(staircase_count(2, &[m(&[0, 2]), m(&[3, 0]), m(&[1, 1])]), Colength::Finite(4));
        assert_eq!(staircase_count(2, &[m(&[1, 1])]), Colength::Infinite);
    }

    #[test]
    fn colength_arithmetic() {
        assert_eq!(Colength::Finite(2) + Colength::Finite(3), Colength::Finite(5));
        assert_eq!(Colength::Finite(2) + Colength::Infinite, Colength::Infinite);
        assert!(Colength::Finite(100) < Colength::Infinite);
        assert_eq!(Colength::Infinite.to_string(), "infinity");
    }
}
