//! Dense univariate polynomials over the rationals: Euclidean gcd, rational
//! roots and resultants of bivariate polynomials.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{rat, Coeff, MPoly, Monomial, Ring};
use crate::error::{Error, Result};

/// Coefficients lowest power first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UPoly(Vec<Coeff>);

impl UPoly {
    pub fn new(mut coeffs: Vec<Coeff>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UPoly(coeffs)
    }

    pub fn zero() -> Self {
        UPoly(Vec::new())
    }

    pub fn coeffs(&self) -> &[Coeff] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Coeff> {
        self.0.last()
    }

    /// Reads `f` as a polynomial in `x_var`; `None` if another variable
    /// occurs.
    pub fn from_mpoly(f: &MPoly, var: usize) -> Option<UPoly> {
        let mut coeffs = vec![Coeff::zero(); f.degree_in(var).unwrap_or(0) as usize + 1];
        for (m, c) in f.terms() {
            let e = m.exponents();
            if e.iter().enumerate().any(|(i, &k)| i != var && k > 0) {
                return None;
            }
            coeffs[e[var] as usize] = c.clone();
        }
        Some(UPoly::new(coeffs))
    }

    pub fn to_mpoly(&self, ring: &Ring, var: usize) -> MPoly {
        MPoly::from_terms(
            ring,
            self.0
                .iter()
                .enumerate()
                .map(|(e, c)| (Monomial::var(ring.dim(), var, e as u32), c.clone())),
        )
    }

    pub fn eval(&self, x: &Coeff) -> Coeff {
        let mut acc = Coeff::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn monic(&self) -> UPoly {
        match self.leading() {
            Some(l) if !l.is_one() => UPoly(self.0.iter().map(|c| c / l).collect()),
            _ => self.clone(),
        }
    }

    pub fn div_rem(&self, d: &UPoly) -> (UPoly, UPoly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead = d.leading().unwrap().clone();
        let mut r = self.0.clone();
        let mut q = vec![Coeff::zero(); r.len().saturating_sub(dd)];
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1 - dd;
            let c = r.last().unwrap() / &lead;
            for (i, dc) in d.0.iter().enumerate() {
                r[k + i] -= &c * dc;
            }
            q[k] = c;
            r.pop();
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        (UPoly::new(q), UPoly::new(r))
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Distinct rational roots in increasing order, together with the
    /// cofactor left after dividing out every rational root with its
    /// multiplicity. The cofactor has degree 0 exactly when all roots are
    /// rational.
    pub fn rational_roots(&self) -> Result<(Vec<Coeff>, UPoly)> {
        if self.is_zero() {
            return Err(Error::InvalidInput("roots of the zero polynomial".into()));
        }
        let mut rest = self.clone();
        let mut roots = Vec::new();
        // root at zero
        if rest.0[0].is_zero() {
            roots.push(Coeff::zero());
            let k = rest.0.iter().take_while(|c| c.is_zero()).count();
            rest = UPoly(rest.0[k..].to_vec());
        }
        if rest.degree().unwrap_or(0) > 0 {
            let ints = integer_coeffs(&rest.0);
            let a0 = ints[0].abs();
            let an = ints.last().unwrap().abs();
            let ps = divisors(&a0)?;
            let qs = divisors(&an)?;
            let mut cands: Vec<Coeff> = Vec::new();
            for p in &ps {
                for q in &qs {
                    let c = Coeff::new(p.clone(), q.clone());
                    cands.push(c.clone());
                    cands.push(-c);
                }
            }
            cands.sort();
            cands.dedup();
            for c in cands {
                if rest.degree().unwrap_or(0) == 0 {
                    break;
                }
                let mut hit = false;
                while rest.degree().unwrap_or(0) > 0 && rest.eval(&c).is_zero() {
                    rest = rest.deflate(&c);
                    hit = true;
                }
                if hit {
                    roots.push(c);
                }
            }
        }
        roots.sort();
        Ok((roots, rest))
    }

    /// Quotient by `(x - c)` where `c` is a root.
    fn deflate(&self, c: &Coeff) -> UPoly {
        let n = self.0.len();
        let mut q = vec![Coeff::zero(); n - 1];
        let mut carry = Coeff::zero();
        for i in (1..n).rev() {
            carry = &self.0[i] + carry * c;
            q[i - 1] = carry.clone();
        }
        UPoly::new(q)
    }
}

fn integer_coeffs(c: &[Coeff]) -> Vec<BigInt> {
    let l = c
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    c.iter()
        .map(|x| (x * Coeff::from_integer(l.clone())).to_integer())
        .collect()
}

const TRIAL_LIMIT: u64 = 1_000_000;

/// Positive divisors of a nonzero integer, by trial division.
fn divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let mut n = n.abs();
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let mut p = 2u64;
    while p <= TRIAL_LIMIT {
        let bp = BigInt::from(p);
        if &bp * &bp > n {
            break;
        }
        let mut e = 0;
        while (&n % &bp).is_zero() {
            n /= &bp;
            e += 1;
        }
        if e > 0 {
            primes.push((bp, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > BigInt::one() {
        let limit = BigInt::from(TRIAL_LIMIT) * BigInt::from(TRIAL_LIMIT);
        if n >= limit {
            return Err(Error::InvalidInput(format!(
                "coefficient {n} too large to factor for rational root search"
            )));
        }
        primes.push((n, 1));
    }
    let mut out = vec![BigInt::one()];
    for (p, e) in primes {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for d in &out {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        out = next;
    }
    out.sort();
    Ok(out)
}

fn det(mut m: Vec<Vec<Coeff>>) -> Coeff {
    let n = m.len();
    let mut d = Coeff::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Coeff::zero();
        };
        if piv != col {
            m.swap(piv, col);
            d = -d;
        }
        let p = m[col][col].clone();
        d *= &p;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &p;
            let (top, rest) = m.split_at_mut(r);
            for (x, y) in rest[0][col..n].iter_mut().zip(&top[col][col..n]) {
                *x -= &f * y;
            }
        }
    }
    d
}

/// Sylvester determinant of two univariate coefficient lists with the given
/// formal degrees.
fn sylvester(f: &[Coeff], df: usize, g: &[Coeff], dg: usize) -> Coeff {
    let n = df + dg;
    if n == 0 {
        return Coeff::one();
    }
    let at = |v: &[Coeff], i: usize| v.get(i).cloned().unwrap_or_else(Coeff::zero);
    let mut m = vec![vec![Coeff::zero(); n]; n];
    for r in 0..dg {
        for i in 0..=df {
            m[r][r + i] = at(f, df - i);
        }
    }
    for r in 0..df {
        for i in 0..=dg {
            m[dg + r][r + i] = at(g, dg - i);
        }
    }
    det(m)
}

/// Resultant of two bivariate polynomials with respect to `x_var`, as a
/// polynomial in the other variable. Uses the formal degrees in `x_var`.
pub fn resultant(f: &MPoly, g: &MPoly, var: usize) -> Result<UPoly> {
    f.ring().check_same(g.ring())?;
    if f.ring().dim() != 2 {
        return Err(Error::UnsupportedDimension(f.ring().dim()));
    }
    let other = 1 - var;
    let df = f.degree_in(var).unwrap_or(0) as usize;
    let dg = g.degree_in(var).unwrap_or(0) as usize;
    let bound = (f.degree().unwrap_or(0) * g.degree().unwrap_or(0)) as usize;
    let mut xs = Vec::with_capacity(bound + 1);
    let mut ys = Vec::with_capacity(bound + 1);
    for k in 0..=bound {
        let x = rat(k as i64);
        let at_point = |p: &MPoly| -> Vec<Coeff> {
            let d = p.degree_in(var).unwrap_or(0) as usize;
            let mut v = vec![Coeff::zero(); d + 1];
            for (m, c) in p.terms() {
                let e = m.exponents();
                v[e[var] as usize] += c * num_traits::pow(x.clone(), e[other] as usize);
            }
            v
        };
        ys.push(sylvester(&at_point(f), df, &at_point(g), dg));
        xs.push(x);
    }
    Ok(interpolate(&xs, &ys))
}

/// Newton interpolation through the given points.
fn interpolate(xs: &[Coeff], ys: &[Coeff]) -> UPoly {
    let n = xs.len();
    let mut dd: Vec<Coeff> = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - j]);
        }
    }
    let mut acc = UPoly::zero();
    for i in (0..n).rev() {
        // acc = acc * (x - xs[i]) + dd[i]
        let mut next = vec![Coeff::zero(); acc.0.len() + 1];
        for (k, c) in acc.0.iter().enumerate() {
            next[k + 1] += c;
            next[k] -= c * &xs[i];
        }
        next[0] += &dd[i];
        acc = UPoly::new(next);
    }
    acc
}
