use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

/// Exponent vector of a monomial.
///
/// `Ord` is the local (negative degree reverse lexicographic) ordering used
/// throughout the crate: a monomial of smaller total degree is *larger*, so
/// `1` is the maximum, and ties are broken by reverse lexicographic comparison
/// (a smaller exponent in the last differing variable wins). The ordering is
/// compatible with multiplication.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial(SmallVec<[u32; 4]>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(SmallVec::from_elem(0, n))
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    /// `x_i^e` in `n` variables.
    pub fn var(n: usize, i: usize, e: u32) -> Self {
        let mut m = Self::one(n);
        m.0[i] = e;
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// True when `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial(
            self.0.iter().zip(other.0.iter()).map(|(a, b)| a - b).collect(),
        ))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    /// `Some((i, e))` when the monomial is `x_i^e` with `e > 0`.
    pub fn as_pure_power(&self) -> Option<(usize, u32)> {
        let mut found = None;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((i, e));
            }
        }
        found
    }

    pub(crate) fn exponents_mut(&mut self) -> &mut [u32] {
        &mut self.0
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.0.len(), other.0.len());
        let (da, db) = (self.degree(), other.degree());
        if da != db {
            return db.cmp(&da);
        }
        for (a, b) in self.0.iter().rev().zip(other.0.iter().rev()) {
            if a != b {
                return b.cmp(a);
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}
