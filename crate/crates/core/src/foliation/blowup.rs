//! The blow-up of the origin in the charts `(x, t) -> (x, tx)` and
//! `(u, y) -> (uy, y)`.

use std::fmt;

use num_traits::Zero;

use super::PlaneFoliation;
use crate::config::Config;
use crate::error::{Error, Result};
use crate::invariants::{self, HypersurfaceGerm};
use crate::poly::{Coeff, MPoly, Monomial, Ring, UPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Chart {
    /// `(x, t) -> (x, tx)`, exceptional divisor `x = 0`.
    One,
    /// `(u, y) -> (uy, y)`, exceptional divisor `y = 0`.
    Two,
}

impl Chart {
    /// Index of the exceptional coordinate in the chart ring.
    pub fn divisor_var(self) -> usize {
        match self {
            Chart::One => 0,
            Chart::Two => 1,
        }
    }
}

impl fmt::Display for Chart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Chart::One => f.write_str("chart 1"),
            Chart::Two => f.write_str("chart 2"),
        }
    }
}

/// A rational point of the exceptional divisor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorPoint {
    pub chart: Chart,
    /// Chart coordinates; the divisor coordinate is zero.
    pub coords: [Coeff; 2],
}

impl DivisorPoint {
    fn chart1(t: Coeff) -> Self {
        DivisorPoint {
            chart: Chart::One,
            coords: [Coeff::zero(), t],
        }
    }

    fn chart2_origin() -> Self {
        DivisorPoint {
            chart: Chart::Two,
            coords: [Coeff::zero(), Coeff::zero()],
        }
    }
}

impl fmt::Display for DivisorPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({}, {})", self.chart, self.coords[0], self.coords[1])
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExceptionalSingularity {
    pub point: DivisorPoint,
    pub mu: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlowupResult {
    pub original: PlaneFoliation,
    pub chart1: PlaneFoliation,
    pub chart2: PlaneFoliation,
    pub nu: u32,
    /// Power `k` of `x` with `π*ω = x^k · ω̃` in chart 1.
    pub divisor_power: u32,
    pub dicritical: bool,
}

impl BlowupResult {
    pub fn chart(&self, c: Chart) -> &PlaneFoliation {
        match c {
            Chart::One => &self.chart1,
            Chart::Two => &self.chart2,
        }
    }

    /// The strict transform with `p` moved to the origin.
    pub fn at(&self, p: &DivisorPoint) -> PlaneFoliation {
        self.chart(p.chart).translate(&p.coords)
    }

    /// Transports chart 1 to chart 2 through `x = uy, t = 1/u` and compares.
    pub fn charts_agree(&self) -> Result<bool> {
        let (a, b) = (self.chart1.a(), self.chart1.b());
        let r2 = self.chart2.ring();
        let u = r2.var(0);
        let y = r2.var(1);
        let dt = [a, b].iter().filter_map(|p| p.degree_in(1)).max().unwrap_or(0);
        let n = dt + 2;
        // u^n * A(uy, 1/u) and u^(n-2) * B(uy, 1/u)
        let sub = |p: &MPoly, shift: u32| -> MPoly {
            MPoly::from_terms(
                r2,
                p.terms().iter().map(|(m, c)| {
                    let (i, j) = (m.exponents()[0], m.exponents()[1]);
                    (Monomial::from_exponents(&[i + shift - j, i]), c.clone())
                }),
            )
        };
        let an = sub(a, n);
        let bn = sub(b, n - 2);
        // dx = u dy + y du, dt = -du / u^2
        let du = &(&an * &y) - &bn;
        let dy = &an * &u;
        let moved = PlaneFoliation::saturate(du, dy)?;
        Ok(moved.same_as(&self.chart2))
    }
}

fn chart_rings(r: &Ring) -> Result<(Ring, Ring)> {
    let (x, y) = (r.var_name(0), r.var_name(1));
    let pick = |base: &str| {
        let mut name = base.to_string();
        while name == x || name == y {
            name.push('1');
        }
        name
    };
    Ok((Ring::new([x.to_string(), pick("t")])?, Ring::new([pick("u"), y.to_string()])?))
}

fn valuation(p: &MPoly, i: usize) -> Option<u32> {
    p.terms().iter().map(|(m, _)| m.exponents()[i]).min()
}

fn divide_var_power(p: &MPoly, i: usize, k: u32) -> MPoly {
    let d = Monomial::var(p.ring().dim(), i, k);
    MPoly::from_terms(
        p.ring(),
        p.terms()
            .iter()
            .map(|(m, c)| (m.checked_div(&d).expect("valuation"), c.clone())),
    )
}

/// `π*ω` in both charts, with the exceptional power factored out.
pub fn blowup(f: &PlaneFoliation) -> Result<BlowupResult> {
    let (r1, r2) = chart_rings(f.ring())?;
    let nu = f.nu();
    let (x, t) = (r1.var(0), r1.var(1));
    let img1 = [x.clone(), &t * &x];
    let (a1, b1) = (f.a().compose(&img1), f.b().compose(&img1));
    let p1 = &a1 + &(&t * &b1);
    let q1 = &x * &b1;
    let k = valuation(&p1, 0)
        .into_iter()
        .chain(valuation(&q1, 0))
        .min()
        .expect("nonzero pullback");
    let chart1 = PlaneFoliation::saturate(divide_var_power(&p1, 0, k), divide_var_power(&q1, 0, k))?;

    let (u, y) = (r2.var(0), r2.var(1));
    let img2 = [&u * &y, y.clone()];
    let (a2, b2) = (f.a().compose(&img2), f.b().compose(&img2));
    let p2 = &y * &a2;
    let q2 = &(&u * &a2) + &b2;
    let k2 = valuation(&p2, 1)
        .into_iter()
        .chain(valuation(&q2, 1))
        .min()
        .expect("nonzero pullback");
    let chart2 = PlaneFoliation::saturate(divide_var_power(&p2, 1, k2), divide_var_power(&q2, 1, k2))?;
    if k != k2 || (k != nu && k != nu + 1) {
        return Err(Error::Consistency(format!(
            "divisor powers {k} and {k2} for algebraic multiplicity {nu}"
        )));
    }
    Ok(BlowupResult {
        original: f.clone(),
        chart1,
        chart2,
        nu,
        divisor_power: k,
        dicritical: k == nu + 1,
    })
}

fn restrict_to_divisor(p: &MPoly, chart: Chart) -> UPoly {
    let i = chart.divisor_var();
    let other = 1 - i;
    let kept = MPoly::from_terms(
        p.ring(),
        p.terms()
            .iter()
            .filter(|(m, _)| m.exponents()[i] == 0)
            .cloned(),
    );
    UPoly::from_mpoly(&kept, other).expect("univariate after restriction")
}

fn rational_points(poly: &UPoly, what: &str) -> Result<Vec<Coeff>> {
    if poly.is_zero() {
        return Err(Error::Consistency(format!(
            "{what} vanishes along the whole divisor"
        )));
    }
    let (roots, rest) = poly.rational_roots()?;
    if rest.degree().is_some_and(|d| d > 0) {
        return Err(Error::IrrationalPoint(format!(
            "{what} has roots outside the rationals: {}",
            rest.to_mpoly(&Ring::new(["t"])?, 0)
        )));
    }
    Ok(roots)
}

/// Singular points of the strict transform on the exceptional divisor,
/// with their Milnor numbers; `exclude` is skipped.
pub fn exceptional_singularities(
    r: &BlowupResult,
    exclude: Option<&DivisorPoint>,
    cfg: &Config,
) -> Result<Vec<ExceptionalSingularity>> {
    let f1 = &r.chart1;
    let on_div = if r.dicritical {
        restrict_to_divisor(f1.a(), Chart::One).gcd(&restrict_to_divisor(f1.b(), Chart::One))
    } else {
        restrict_to_divisor(f1.a(), Chart::One)
    };
    let mut points: Vec<DivisorPoint> = if on_div.degree() == Some(0) {
        Vec::new()
    } else {
        rational_points(&on_div, "the strict transform")?
            .into_iter()
            .map(DivisorPoint::chart1)
            .collect()
    };
    if r.chart2.is_singular() {
        points.push(DivisorPoint::chart2_origin());
    }
    let mut out = Vec::new();
    for p in points {
        if exclude == Some(&p) {
            continue;
        }
        let local = r.at(&p);
        if !local.is_singular() {
            return Err(Error::Consistency(format!("{p} is not singular")));
        }
        let mu = local.milnor(cfg)?.require("the Milnor number at a divisor point")?;
        out.push(ExceptionalSingularity { point: p, mu });
    }
    Ok(out)
}

/// Strict transform of a curve germ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveBlowup {
    pub m: u32,
    pub chart1: MPoly,
    pub chart2: MPoly,
    /// Points where the strict transform meets the divisor.
    pub points: Vec<DivisorPoint>,
}

impl CurveBlowup {
    pub fn chart(&self, c: Chart) -> &MPoly {
        match c {
            Chart::One => &self.chart1,
            Chart::Two => &self.chart2,
        }
    }

    /// The strict transform as a germ at `p`.
    pub fn germ_at(&self, p: &DivisorPoint) -> Result<HypersurfaceGerm> {
        HypersurfaceGerm::new(self.chart(p.chart).translate(&p.coords))
    }
}

pub fn strict_transform_curve(x: &HypersurfaceGerm) -> Result<CurveBlowup> {
    if x.ring().dim() != 2 {
        return Err(Error::UnsupportedDimension(x.ring().dim()));
    }
    let (r1, r2) = chart_rings(x.ring())?;
    let m = x.multiplicity();
    let (xx, t) = (r1.var(0), r1.var(1));
    let chart1 = divide_var_power(&x.phi().compose(&[xx.clone(), &t * &xx]), 0, m);
    let (u, y) = (r2.var(0), r2.var(1));
    let chart2 = divide_var_power(&x.phi().compose(&[&u * &y, y.clone()]), 1, m);
    let mut points: Vec<DivisorPoint> =
        rational_points(&restrict_to_divisor(&chart1, Chart::One), "the tangent cone")?
            .into_iter()
            .map(DivisorPoint::chart1)
            .collect();
    if chart2.vanishes_at_origin() {
        points.push(DivisorPoint::chart2_origin());
    }
    Ok(CurveBlowup {
        m,
        chart1,
        chart2,
        points,
    })
}

/// `D = τ₀(X) - τ_q(X̃) - m(m-1)/2`, after checking
/// `μ₀(X) - μ_q(X̃) = m(m-1)`.
pub fn delta_d(x: &HypersurfaceGerm, q: &DivisorPoint, cfg: &Config) -> Result<i64> {
    let c = strict_transform_curve(x)?;
    if !c.points.contains(q) {
        return Err(Error::InvalidInput(format!(
            "{q} is not on the strict transform"
        )));
    }
    let xq = c.germ_at(q)?;
    let m = c.m as i64;
    let mu0 = invariants::milnor_hyp(x, cfg)?.require("the Milnor number")? as i64;
    let muq = invariants::milnor_hyp(&xq, cfg)?.require("the Milnor number at q")? as i64;
    if mu0 - muq != m * (m - 1) {
        return Err(Error::Consistency(format!(
            "Milnor numbers drop by {} instead of m(m-1) = {}; the germ is not irreducible",
            mu0 - muq,
            m * (m - 1)
        )));
    }
    let tau0 = invariants::tjurina(x, cfg)?.require("the Tjurina number")? as i64;
    let tauq = invariants::tjurina(&xq, cfg)?.require("the Tjurina number at q")? as i64;
    Ok(tau0 - tauq - m * (m - 1) / 2)
}

/// Both sides of the blow-up formulas for `μ_BR` and `μ_BR⁻`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlowupReport {
    pub dicritical: bool,
    pub q: DivisorPoint,
    pub mu_br_0: u64,
    pub mu_br_q: u64,
    pub nu: u32,
    pub m: u32,
    /// `Σ μ_p` over divisor singularities other than `q`.
    pub sigma: u64,
    pub d: i64,
    /// Right-hand side of the `μ_BR` formula.
    pub rhs: i64,
    pub mu_br_rel_0: u64,
    pub mu_br_rel_q: u64,
    pub rel_rhs: i64,
    /// `μ₀(F)` and `ν² - ν - 1 + Σ_p μ_p` (or `(ν+1)² - (ν+2) + Σ_p μ_p`).
    pub mu0: u64,
    pub mu0_rhs: i64,
}

impl BlowupReport {
    pub fn holds(&self) -> bool {
        self.mu_br_0 as i64 == self.rhs
    }

    pub fn relative_holds(&self) -> bool {
        self.mu_br_rel_0 as i64 == self.rel_rhs
    }

    pub fn milnor_holds(&self) -> bool {
        self.mu0 as i64 == self.mu0_rhs
    }

    /// The constant `ν² ∓ ν - 1` of the formula.
    pub fn nu_term(&self) -> i64 {
        let nu = self.nu as i64;
        if self.dicritical {
            nu * nu + nu - 1
        } else {
            nu * nu - nu - 1
        }
    }

    /// `νm` or `(ν+1)m`.
    pub fn order_term(&self) -> i64 {
        let nu = self.nu as i64 + self.dicritical as i64;
        nu * self.m as i64
    }

    pub fn half_m(&self) -> i64 {
        let m = self.m as i64;
        m * (m - 1) / 2
    }

    /// The formula with every summand spelled out.
    pub fn ledger(&self) -> String {
        format!(
            "{} = {} + {} + {} + {} + {} - {} = {}",
            self.mu_br_0,
            self.mu_br_q,
            self.nu_term(),
            self.order_term(),
            self.sigma,
            self.half_m(),
            self.d,
            self.rhs
        )
    }
}

/// Checks the blow-up formulas for an irreducible curve `X`, taking `q` to
/// be the unique point of the strict transform on the divisor.
pub fn verify_blowup_formula(f: &PlaneFoliation, x: &HypersurfaceGerm, cfg: &Config) -> Result<BlowupReport> {
    f.ring().check_same(x.ring())?;
    let w = f.form();
    if invariants::is_invariant(&w, x)? {
        return Err(Error::InvariantHypersurface);
    }
    let b = blowup(f)?;
    let c = strict_transform_curve(x)?;
    let [q] = c.points.as_slice() else {
        return Err(Error::Consistency(format!(
            "the strict transform meets the divisor in {} points; an irreducible germ is required",
            c.points.len()
        )));
    };
    let fq = b.at(q).form();
    let xq = c.germ_at(q)?;
    let mu_br_0 = invariants::bruce_roberts(&w, x, cfg)?;
    let mu_br_q = invariants::bruce_roberts(&fq, &xq, cfg)?;
    let mu_br_rel_0 = invariants::br_relative(&w, x, cfg)?;
    let mu_br_rel_q = invariants::br_relative(&fq, &xq, cfg)?;
    let sings = exceptional_singularities(&b, None, cfg)?;
    let sigma_all: u64 = sings.iter().map(|s| s.mu).sum();
    let sigma: u64 = sings.iter().filter(|s| &s.point != q).map(|s| s.mu).sum();
    let d = delta_d(x, q, cfg)?;
    let mu0 = f.milnor(cfg)?.require("the Milnor number of the foliation")?;
    let mut rep = BlowupReport {
        dicritical: b.dicritical,
        q: q.clone(),
        mu_br_0,
        mu_br_q,
        nu: b.nu,
        m: c.m,
        sigma,
        d,
        rhs: 0,
        mu_br_rel_0,
        mu_br_rel_q,
        rel_rhs: 0,
        mu0,
        mu0_rhs: 0,
    };
    rep.rhs = mu_br_q as i64 + rep.nu_term() + rep.order_term() + sigma as i64 + rep.half_m() - d;
    rep.rel_rhs = mu_br_rel_q as i64 + rep.order_term() + rep.half_m() - d;
    rep.mu0_rhs = rep.nu_term() + sigma_all as i64;
    Ok(rep)
}
