//! Germs of holomorphic foliations on `(C^2, 0)` given by `ω = A dx + B dy`.

mod blowup;

use std::fmt;

use crate::config::Config;
use crate::error::{Error, Result};
use crate::form::OneForm;
use crate::invariants::{self, HypersurfaceGerm};
use crate::local::{colength, Colength, LocalIdeal};
use crate::poly::{gcd, Coeff, MPoly, Parametrization, Ring};

pub use blowup::{
    blowup, delta_d, exceptional_singularities, strict_transform_curve, verify_blowup_formula,
    BlowupReport, BlowupResult, Chart, CurveBlowup, DivisorPoint, ExceptionalSingularity,
};

/// A saturated plane foliation: `gcd(A, B) = 1`.
#[derive(Clone, PartialEq, Eq)]
pub struct PlaneFoliation {
    a: MPoly,
    b: MPoly,
}

impl PlaneFoliation {
    /// Divides `A` and `B` by their gcd.
    pub fn saturate(a: MPoly, b: MPoly) -> Result<Self> {
        a.ring().check_same(b.ring())?;
        if a.ring().dim() != 2 {
            return Err(Error::UnsupportedDimension(a.ring().dim()));
        }
        if a.is_zero() && b.is_zero() {
            return Err(Error::ZeroForm);
        }
        let g = gcd(&a, &b);
        if g.is_constant() {
            return Ok(PlaneFoliation { a, b });
        }
        let a = a.exact_divide(&g)?.expect("gcd divides");
        let b = b.exact_divide(&g)?.expect("gcd divides");
        Ok(PlaneFoliation { a, b })
    }

    pub fn from_form(w: &OneForm) -> Result<Self> {
        if w.ring().dim() != 2 {
            return Err(Error::UnsupportedDimension(w.ring().dim()));
        }
        Self::saturate(w.coeff(0).clone(), w.coeff(1).clone())
    }

    pub fn parse(text: &str, ring: &Ring) -> Result<Self> {
        Self::from_form(&OneForm::parse(text, ring)?)
    }

    pub fn ring(&self) -> &Ring {
        self.a.ring()
    }

    pub fn a(&self) -> &MPoly {
        &self.a
    }

    pub fn b(&self) -> &MPoly {
        &self.b
    }

    pub fn form(&self) -> OneForm {
        OneForm::new(vec![self.a.clone(), self.b.clone()]).expect("same ring")
    }

    /// The dual vector field `v = -B ∂x + A ∂y`.
    pub fn vector_field(&self) -> [MPoly; 2] {
        [-&self.b, self.a.clone()]
    }

    /// Algebraic multiplicity `ν = min(ord A, ord B)`.
    pub fn nu(&self) -> u32 {
        [&self.a, &self.b]
            .iter()
            .filter_map(|p| p.ord())
            .min()
            .expect("nonzero form")
    }

    /// True when the origin is a singular point.
    pub fn is_singular(&self) -> bool {
        self.a.vanishes_at_origin() && self.b.vanishes_at_origin()
    }

    pub fn milnor(&self, cfg: &Config) -> Result<Colength> {
        invariants::milnor_form(&self.form(), cfg)
    }

    /// The same foliation with `point` moved to the origin.
    pub fn translate(&self, point: &[Coeff]) -> PlaneFoliation {
        PlaneFoliation {
            a: self.a.translate(point),
            b: self.b.translate(point),
        }
    }

    /// True when both forms define the same foliation, i.e. differ by a
    /// nonzero constant.
    pub fn same_as(&self, other: &PlaneFoliation) -> bool {
        if self.ring() != other.ring() {
            return false;
        }
        let (p, q) = if self.a.is_zero() {
            (&self.b, &other.b)
        } else {
            (&self.a, &other.a)
        };
        let (Some(c1), Some(c2)) = (p.leading_coeff(), q.leading_coeff()) else {
            return false;
        };
        let c = c2 / c1;
        self.a.scale(&c) == other.a && self.b.scale(&c) == other.b
    }
}

impl fmt::Display for PlaneFoliation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.form().fmt(f)
    }
}

impl fmt::Debug for PlaneFoliation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PlaneFoliation({self})")
    }
}

fn check_plane(f: &PlaneFoliation, x: &HypersurfaceGerm) -> Result<()> {
    f.ring().check_same(x.ring())
}

/// `tang(F, X, 0) = dim O/⟨φ, v(φ)⟩`.
pub fn tangency_order(f: &PlaneFoliation, x: &HypersurfaceGerm, cfg: &Config) -> Result<Colength> {
    check_plane(f, x)?;
    if invariants::is_invariant(&f.form(), x)? {
        return Err(Error::InvariantHypersurface);
    }
    let [p, q] = f.vector_field();
    let vphi = &(&p * &x.phi().partial(0)?) + &(&q * &x.phi().partial(1)?);
    colength(&LocalIdeal::new(x.ring(), [x.phi().clone(), vphi])?, cfg.max_steps)
}

/// Intersection multiplicity `i_0(f, g) = dim O/⟨f, g⟩`.
pub fn intersection_mult(f: &MPoly, g: &MPoly, cfg: &Config) -> Result<Colength> {
    f.ring().check_same(g.ring())?;
    colength(&LocalIdeal::new(f.ring(), [f.clone(), g.clone()])?, cfg.max_steps)
}

/// `ord_t` of the pullback of `ω` along a parametrization. Truncation
/// starts at `cfg.truncation` and doubles up to `cfg.max_truncation`.
pub fn order_pullback(w: &OneForm, param: &Parametrization, cfg: &Config) -> Result<u32> {
    if param.dim() != w.ring().dim() {
        return Err(Error::ShapeMismatch(format!(
            "parametrization has {} components, ring has {} variables",
            param.dim(),
            w.ring().dim()
        )));
    }
    let mut trunc = cfg.truncation.max(2);
    loop {
        match crate::poly::pullback_form(w.coeffs(), &param.series(trunc), trunc) {
            Ok(s) => return Ok(s.order().expect("nonzero series")),
            Err(Error::InconclusiveTruncation(t)) => {
                if trunc >= cfg.max_truncation {
                    return Err(Error::InconclusiveTruncation(t));
                }
                trunc = (trunc * 2).min(cfg.max_truncation);
            }
            Err(e) => return Err(e),
        }
    }
}

/// Checks that `param` lies on `X`.
pub fn check_parametrization(x: &HypersurfaceGerm, param: &Parametrization) -> Result<()> {
    if param.on_curve(x.phi())? {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!(
            "the parametrization does not lie on {}",
            x.phi()
        )))
    }
}

/// Comparison of a foliation with its separatrix curve along `X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralizedCurveReport {
    pub mu_br: u64,
    pub mu_br_sep: u64,
    pub mu_br_rel: u64,
    pub mu_br_rel_sep: u64,
    pub mu0: u64,
    pub mu0_sep: u64,
    /// `[μ_BR(F) - μ_BR(f)] - [μ_BR⁻(F) - μ_BR⁻(f)]`.
    pub delta: i64,
}

impl GeneralizedCurveReport {
    /// The generalized-curve equality `Δ = 0`.
    pub fn equality(&self) -> bool {
        self.delta == 0
    }

    /// `Δ` agrees with `μ₀(F) - μ₀(f)`.
    pub fn consistent(&self) -> bool {
        self.delta == self.mu0 as i64 - self.mu0_sep as i64
    }
}

/// Compares `F` with the exact foliation `d f_sep` of its separatrices.
pub fn generalized_curve_check(
    f: &PlaneFoliation,
    f_sep: &MPoly,
    x: &HypersurfaceGerm,
    cfg: &Config,
) -> Result<GeneralizedCurveReport> {
    check_plane(f, x)?;
    let sep = HypersurfaceGerm::new(f_sep.clone())?;
    if !invariants::is_invariant(&f.form(), &sep)? {
        return Err(Error::InvalidInput(format!(
            "{f_sep} is not invariant by {f}"
        )));
    }
    let w = f.form();
    let dsep = OneForm::exact(f_sep);
    let mu_br = invariants::bruce_roberts(&w, x, cfg)?;
    let mu_br_sep = invariants::bruce_roberts(&dsep, x, cfg)?;
    let mu_br_rel = invariants::br_relative(&w, x, cfg)?;
    let mu_br_rel_sep = invariants::br_relative(&dsep, x, cfg)?;
    let mu0 = f.milnor(cfg)?.require("the Milnor number of the foliation")?;
    let mu0_sep = invariants::milnor_form(&dsep, cfg)?.require("the Milnor number of the separatrix")?;
    let delta = (mu_br as i64 - mu_br_sep as i64) - (mu_br_rel as i64 - mu_br_rel_sep as i64);
    Ok(GeneralizedCurveReport {
        mu_br,
        mu_br_sep,
        mu_br_rel,
        mu_br_rel_sep,
        mu0,
        mu0_sep,
        delta,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn plane() -> Ring {
        Ring::new(["x", "y"]).unwrap()
    }

    #[test]
    fn saturation() {
        let r = plane();
        let f = PlaneFoliation::saturate(r.parse("x^2").unwrap(), r.parse("x*y").unwrap()).unwrap();
        assert_eq!(f.a(), &r.parse("x").unwrap());
        assert_eq!(f.b(), &r.parse("y").unwrap());
        let f = PlaneFoliation::parse("2*x dy - 3*y dx", &r).unwrap();
        assert_eq!(f.to_string(), "-3*y dx + 2*x dy");
        assert_eq!(f.nu(), 1);
        assert_eq!(
            PlaneFoliation::saturate(MPoly::zero(&r), MPoly::zero(&r)),
            Err(Error::ZeroForm)
        );
    }

    #[test]
    fn tangency() {
        let r = plane();
        let cfg = Config::default();
        let f = PlaneFoliation::parse("2*x dy - 3*y dx", &r).unwrap();
        let x = HypersurfaceGerm::parse("y^2 - x^5", &r).unwrap();
        assert_eq!(tangency_order(&f, &x, &cfg).unwrap(), Colength::Finite(10));
        let inv = HypersurfaceGerm::parse("y^2 - x^3", &r).unwrap();
        assert_eq!(tangency_order(&f, &inv, &cfg), Err(Error::InvariantHypersurface));
    }

    #[test]
    fn intersections() {
        let r = plane();
        let cfg = Config::default();
        let p = |s: &str| r.parse(s).unwrap();
        assert_eq!(intersection_mult(&p("y^2 - x^3"), &p("y"), &cfg).unwrap(), Colength::Finite(3));
        assert_eq!(intersection_mult(&p("x"), &p("y"), &cfg).unwrap(), Colength::Finite(1));
        assert_eq!(intersection_mult(&p("x*y"), &p("x"), &cfg).unwrap(), Colength::Infinite);
    }

    #[test]
    fn pullback_orders() {
        let r = plane();
        let cfg = Config::default();
        let w = OneForm::parse("x dy + y dx", &r).unwrap();
        let par = Parametrization::parse(&["t^2", "t^5"], "t").unwrap();
        assert_eq!(order_pullback(&w, &par, &cfg).unwrap(), 6);
        let df = OneForm::exact(&r.parse("y").unwrap());
        let par = Parametrization::parse(&["t^2", "t^3"], "t").unwrap();
        assert_eq!(order_pullback(&df, &par, &cfg).unwrap(), 2);
        let dphi = OneForm::exact(&r.parse("y^2 - x^3").unwrap());
        let small = Config {
            truncation: 8,
            max_truncation: 32,
            ..Config::default()
        };
        assert_eq!(order_pullback(&dphi, &par, &small), Err(Error::InconclusiveTruncation(31)));
    }

    #[test]
    fn translation_and_equality() {
        let r = plane();
        let f = PlaneFoliation::parse("(x - 1) dy - y dx", &r).unwrap();
        let g = f.translate(&[rat(1), rat(0)]);
        assert!(g.same_as(&PlaneFoliation::parse("-2*y dx + 2*x dy", &r).unwrap()));
        assert!(g.is_singular());
        assert!(!f.is_singular());
    }

    #[test]
    fn generalized_curves() {
        let r = plane();
        let cfg = Config::default();
        let x = HypersurfaceGerm::parse("y - x", &r).unwrap();
        let f = PlaneFoliation::parse("x dy + 2*y dx", &r).unwrap();
        let rep = generalized_curve_check(&f, &r.parse("x*y").unwrap(), &x, &cfg).unwrap();
        assert!(rep.equality() && rep.consistent());
        let bad = generalized_curve_check(&f, &r.parse("x + y").unwrap(), &x, &cfg);
        assert!(matches!(bad, Err(Error::InvalidInput(_))));
    }
}
