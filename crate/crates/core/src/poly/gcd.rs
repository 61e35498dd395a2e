//! Multivariate gcd over the rationals by recursive subresultant sequences.

use num_traits::One;

use super::{Coeff, MPoly, Monomial};

/// Coefficients of `f` as a polynomial in `x_v`, lowest power first.
fn to_uni(f: &MPoly, v: usize) -> Vec<MPoly> {
    let ring = f.ring();
    let deg = f.degree_in(v).unwrap_or(0) as usize;
    let mut buckets: Vec<Vec<(Monomial, Coeff)>> = vec![Vec::new(); deg + 1];
    for (m, c) in f.terms() {
        let e = m.exponents()[v] as usize;
        let mut rest = m.clone();
        rest.exponents_mut()[v] = 0;
        buckets[e].push((rest, c.clone()));
    }
    buckets
        .into_iter()
        .map(|ts| MPoly::from_terms(ring, ts))
        .collect()
}

fn from_uni(coeffs: &[MPoly], v: usize, like: &MPoly) -> MPoly {
    let ring = like.ring();
    let n = ring.dim();
    let mut acc = MPoly::zero(ring);
    for (e, c) in coeffs.iter().enumerate() {
        if !c.is_zero() {
            acc = &acc + &c.mul_term(&Monomial::var(n, v, e as u32), &Coeff::one());
        }
    }
    acc
}

fn trim(p: &mut Vec<MPoly>) {
    while p.len() > 1 && p.last().is_some_and(MPoly::is_zero) {
        p.pop();
    }
}

fn uni_is_zero(p: &[MPoly]) -> bool {
    p.iter().all(MPoly::is_zero)
}

fn deg(p: &[MPoly]) -> usize {
    p.len() - 1
}

fn exact(a: &MPoly, b: &MPoly) -> MPoly {
    a.exact_divide(b)
        .expect("same ring")
        .expect("exact division inside subresultant sequence")
}

/// Pseudo-remainder of `a` by `b` in the variable.
fn prem(a: &[MPoly], b: &[MPoly]) -> Vec<MPoly> {
    let (m, n) = (deg(a), deg(b));
    let lb = b[n].clone();
    let mut r: Vec<MPoly> = a.to_vec();
    let mut steps = 0;
    while !uni_is_zero(&r) && deg(&r) >= n {
        let dr = deg(&r);
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c = &*c * &lb;
        }
        for (i, bc) in b.iter().enumerate() {
            let idx = dr - n + i;
            r[idx] = &r[idx] - &(&lr * bc);
        }
        r.pop();
        trim(&mut r);
        steps += 1;
        if r.is_empty() {
            r.push(MPoly::zero(lb.ring()));
        }
    }
    let missing = (m + 1 - n) as u32 - steps.min((m + 1 - n) as u32);
    if missing > 0 {
        let f = lb.pow(missing);
        for c in r.iter_mut() {
            *c = &*c * &f;
        }
    }
    r
}

fn content(p: &[MPoly]) -> MPoly {
    gcd_all(p.iter())
}

fn primitive(p: &[MPoly]) -> Vec<MPoly> {
    let c = content(p);
    if c.is_zero() {
        return p.to_vec();
    }
    p.iter().map(|x| exact(x, &c)).collect()
}

fn uni_gcd(mut a: Vec<MPoly>, mut b: Vec<MPoly>) -> Vec<MPoly> {
    if deg(&a) < deg(&b) {
        std::mem::swap(&mut a, &mut b);
    }
    let ring = a[0].ring().clone();
    let mut g = MPoly::one(&ring);
    let mut h = MPoly::one(&ring);
    loop {
        let d = deg(&a) - deg(&b);
        let r = prem(&a, &b);
        if uni_is_zero(&r) {
            return primitive(&b);
        }
        if deg(&r) == 0 {
            return vec![MPoly::one(&ring)];
        }
        let denom = &g * &h.pow(d as u32);
        a = b;
        b = r.iter().map(|c| exact(c, &denom)).collect();
        g = a[deg(&a)].clone();
        h = if d == 0 {
            h
        } else {
            exact(&g.pow(d as u32), &h.pow(d as u32 - 1))
        };
    }
}

fn normalize(p: MPoly) -> MPoly {
    p.monic()
}

/// Greatest common divisor, normalized to leading coefficient one in the
/// local ordering. `gcd(0, 0) = 0`.
pub fn gcd(f: &MPoly, g: &MPoly) -> MPoly {
    assert_eq!(f.ring(), g.ring(), "ring mismatch in gcd");
    if f.is_zero() {
        return normalize(g.clone());
    }
    if g.is_zero() {
        return normalize(f.clone());
    }
    if f.is_constant() || g.is_constant() {
        return MPoly::one(f.ring());
    }
    let n = f.ring().dim();
    let v = (0..n)
        .rev()
        .find(|&i| f.degree_in(i).unwrap_or(0) > 0 || g.degree_in(i).unwrap_or(0) > 0)
        .expect("nonconstant input");
    let fu = to_uni(f, v);
    let gu = to_uni(g, v);
    let (cf, cg) = (content(&fu), content(&gu));
    let c = gcd(&cf, &cg);
    if deg(&fu) == 0 || deg(&gu) == 0 {
        // one side is free of x_v, so it is its own content
        return c;
    }
    let pf: Vec<MPoly> = fu.iter().map(|x| exact(x, &cf)).collect();
    let pg: Vec<MPoly> = gu.iter().map(|x| exact(x, &cg)).collect();
    let h = uni_gcd(pf, pg);
    normalize(&c * &from_uni(&h, v, f))
}

/// Gcd of a list; zero for an empty or all-zero list.
pub fn gcd_all<'a, I>(items: I) -> MPoly
where
    I: IntoIterator<Item = &'a MPoly>,
{
    let mut it = items.into_iter();
    let Some(first) = it.next() else {
        panic!("gcd_all needs at least one polynomial");
    };
    let mut acc = normalize(first.clone());
    for p in it {
        if acc.is_constant() && !acc.is_zero() {
            return MPoly::one(first.ring());
        }
        acc = gcd(&acc, p);
    }
    if !acc.is_zero() && acc.is_constant() {
        return MPoly::one(first.ring());
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Ring;

    fn check(r: &Ring, f: &str, g: &str, expect: &str) {
        let (f, g) = (r.parse(f).unwrap(), r.parse(g).unwrap());
        let got = gcd(&f, &g);
        let want = r.parse(expect).unwrap().monic();
        assert_eq!(got, want, "gcd({f}, {g})");
    }

    #[test]
    fn bivariate() {
        let r = Ring::new(["x", "t"]).unwrap();
        check(&r, "-x*t^2", "2*x^2*t", "x*t");
        check(&r, "x^2", "x*t", "x");
        check(&r, "x + t", "x - t", "1");
        check(&r, "(t^2 - x^3)*(x + 2*t)", "(t^2 - x^3)*(1 + x*t)", "t^2 - x^3");
        check(&r, "0", "3*x", "x");
    }

    #[test]
    fn trivariate() {
        let r = Ring::new(["x", "y", "z"]).unwrap();
        check(&r, "(x*y - z)*(x + y + z)^2", "(x*y - z)*(x - z)", "x*y - z");
        check(&r, "x*y*z", "y*z^2 + y^2*z", "y*z");
    }

    #[test]
    fn gcd_divides_both() {
        let r = Ring::new(["x", "y"]).unwrap();
        let a = r.parse("(y^2 - x^3)*(x - 1/2*y)").unwrap();
        let b = r.parse("(y^2 - x^3)^2*(3 + y)").unwrap();
        let g = gcd(&a, &b);
        assert!(a.is_divisible_by(&g).unwrap());
        assert!(b.is_divisible_by(&g).unwrap());
        assert_eq!(g.degree(), Some(3));
    }
}
