//! Rational common zeros of two plane polynomials.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::{gcd, rat, resultant, Coeff, MPoly, UPoly};

fn derivative(p: &UPoly) -> UPoly {
    UPoly::new(
        p.coeffs()
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * rat(i as i64))
            .collect(),
    )
}

fn squarefree(p: &UPoly) -> UPoly {
    let g = p.gcd(&derivative(p));
    if g.degree().unwrap_or(0) == 0 {
        p.monic()
    } else {
        p.div_rem(&g).0.monic()
    }
}

fn all_rational_roots(p: &UPoly, what: &str) -> Result<Vec<Coeff>> {
    if p.degree().unwrap_or(0) == 0 {
        return Ok(Vec::new());
    }
    let (roots, rest) = squarefree(p).rational_roots()?;
    if rest.degree().unwrap_or(0) > 0 {
        return Err(Error::IrrationalPoint(format!(
            "{what} has {} non-rational solution(s)",
            rest.degree().unwrap()
        )));
    }
    Ok(roots)
}

/// `f(x + c y, y)`.
fn shear(f: &MPoly, c: &Coeff) -> MPoly {
    let r = f.ring();
    let (x, y) = (r.var(0), r.var(1));
    f.compose(&[&x + &y.scale(c), y])
}

/// Leading coefficient in `y` is a nonzero constant.
fn monic_in_y(f: &MPoly) -> bool {
    f.degree_in(1) == f.degree()
}

fn at_x(f: &MPoly, x0: &Coeff) -> UPoly {
    let r = f.ring();
    let g = f.compose(&[MPoly::constant(r, x0.clone()), r.var(1)]);
    UPoly::from_mpoly(&g, 1).expect("univariate in y")
}

/// All common zeros of `f` and `g` in the affine plane, sorted. Fails when
/// they share a component or when some zero has a non-rational coordinate.
pub fn common_zeros(f: &MPoly, g: &MPoly, what: &str) -> Result<Vec<[Coeff; 2]>> {
    f.ring().check_same(g.ring())?;
    if f.ring().dim() != 2 {
        return Err(Error::UnsupportedDimension(f.ring().dim()));
    }
    if f.is_zero() || g.is_zero() {
        return Err(Error::NonIsolated(format!("{what}: a zero equation")));
    }
    if f.is_constant() || g.is_constant() {
        return Ok(Vec::new());
    }
    let h = gcd(f, g);
    if !h.is_constant() {
        return Err(Error::NonIsolated(format!("{what}: common component {h}")));
    }
    let mut k = 0i64;
    let c = loop {
        let c = rat(if k % 2 == 0 { k / 2 } else { -(k + 1) / 2 });
        if monic_in_y(&shear(f, &c)) && monic_in_y(&shear(g, &c)) {
            break c;
        }
        k += 1;
    };
    let (fs, gs) = (shear(f, &c), shear(g, &c));
    let res = resultant(&fs, &gs, 1)?;
    let mut out = Vec::new();
    for x0 in all_rational_roots(&res, what)? {
        let common = at_x(&fs, &x0).gcd(&at_x(&gs, &x0));
        for y0 in all_rational_roots(&common, what)? {
            out.push([&x0 + &c * &y0, y0]);
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Rational roots of a univariate restriction; `Ok(None)` when it vanishes
/// identically.
pub fn line_zeros(p: &UPoly, what: &str) -> Result<Option<Vec<Coeff>>> {
    if p.is_zero() {
        return Ok(None);
    }
    if p.coeffs().len() == 1 && !p.coeffs()[0].is_zero() {
        return Ok(Some(Vec::new()));
    }
    all_rational_roots(p, what).map(Some)
}
