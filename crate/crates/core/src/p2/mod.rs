//! Foliations and curves on the projective plane, through the three
//! standard affine charts.

mod solve;

use std::fmt;

use num_traits::{One, Zero};

use crate::config::Config;
use crate::error::{Error, Result};
use crate::foliation::{tangency_order, PlaneFoliation};
use crate::invariants::{self, HypersurfaceGerm};
use crate::poly::{Coeff, MPoly, Monomial, Ring, UPoly};

pub use solve::common_zeros;

/// Standard affine charts, named by the coordinate set to one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum P2Chart {
    /// `z = 1`, coordinates `(x, y)`.
    Z,
    /// `x = 1`, coordinates `(y, z)`.
    X,
    /// `y = 1`, coordinates `(x, z)`.
    Y,
}

impl P2Chart {
    pub const ALL: [P2Chart; 3] = [P2Chart::Z, P2Chart::X, P2Chart::Y];

    /// Index of the homogeneous coordinate set to one.
    fn fixed(self) -> usize {
        match self {
            P2Chart::Z => 2,
            P2Chart::X => 0,
            P2Chart::Y => 1,
        }
    }

    /// Homogeneous indices of the two chart coordinates.
    fn free(self) -> [usize; 2] {
        match self {
            P2Chart::Z => [0, 1],
            P2Chart::X => [1, 2],
            P2Chart::Y => [0, 2],
        }
    }
}

impl fmt::Display for P2Chart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            P2Chart::Z => f.write_str("z=1"),
            P2Chart::X => f.write_str("x=1"),
            P2Chart::Y => f.write_str("y=1"),
        }
    }
}

/// Homogeneous coordinate names derived from an affine ring `(a, b)`.
fn homogeneous_ring(affine: &Ring) -> Result<Ring> {
    if affine.dim() != 2 {
        return Err(Error::UnsupportedDimension(affine.dim()));
    }
    let (a, b) = (affine.var_name(0), affine.var_name(1));
    let mut w = "z".to_string();
    while w == a || w == b {
        w.push('1');
    }
    Ring::new([a.to_string(), b.to_string(), w])
}

fn chart_ring(h: &Ring, c: P2Chart) -> Ring {
    let [i, j] = c.free();
    Ring::new([h.var_name(i).to_string(), h.var_name(j).to_string()]).expect("valid names")
}

/// `p(x_i/x_c, x_j/x_c) · x_c^deg` for a chart polynomial `p`.
fn homogenize(p: &MPoly, c: P2Chart, deg: u32, h: &Ring) -> MPoly {
    let [i, j] = c.free();
    MPoly::from_terms(
        h,
        p.terms().iter().map(|(m, k)| {
            let e = m.exponents();
            let mut v = [0u32; 3];
            v[i] = e[0];
            v[j] = e[1];
            v[c.fixed()] = deg - e[0] - e[1];
            (Monomial::from_exponents(&v), k.clone())
        }),
    )
}

/// Sets the fixed coordinate of `c` to one.
fn dehomogenize(p: &MPoly, c: P2Chart, ring: &Ring) -> MPoly {
    let [i, j] = c.free();
    MPoly::from_terms(
        ring,
        p.terms().iter().map(|(m, k)| {
            let e = m.exponents();
            (Monomial::from_exponents(&[e[i], e[j]]), k.clone())
        }),
    )
}

fn strip_power(ps: &mut [MPoly], var: usize) {
    let k = ps
        .iter()
        .flat_map(|p| p.terms().iter().map(|(m, _)| m.exponents()[var]))
        .min()
        .unwrap_or(0);
    if k == 0 {
        return;
    }
    let d = Monomial::var(3, var, k);
    for p in ps.iter_mut() {
        *p = MPoly::from_terms(
            p.ring(),
            p.terms().iter().map(|(m, c)| (m.checked_div(&d).unwrap(), c.clone())),
        );
    }
}

/// A foliation of `P^2` as a homogeneous 1-form `Ω = Σ Ω_i dx_i` with
/// `Σ x_i Ω_i = 0` and no common factor.
#[derive(Clone, PartialEq, Eq)]
pub struct ProjectiveFoliation {
    ring: Ring,
    omega: [MPoly; 3],
}

impl ProjectiveFoliation {
    /// Extends a saturated form on the chart `z = 1`.
    pub fn from_affine(f: &PlaneFoliation) -> Result<Self> {
        let h = homogeneous_ring(f.ring())?;
        Self::from_chart(f, P2Chart::Z, &h)
    }

    /// Extends a form given on chart `c`; `h` names the homogeneous
    /// coordinates.
    pub fn from_chart(f: &PlaneFoliation, c: P2Chart, h: &Ring) -> Result<Self> {
        let m = [f.a(), f.b()]
            .iter()
            .filter_map(|p| p.degree())
            .max()
            .unwrap_or(0);
        let ah = homogenize(f.a(), c, m, h);
        let bh = homogenize(f.b(), c, m, h);
        let [i, j] = c.free();
        let k = c.fixed();
        let xk = h.var(k);
        let mut omega = [MPoly::zero(h), MPoly::zero(h), MPoly::zero(h)];
        omega[i] = &xk * &ah;
        omega[j] = &xk * &bh;
        omega[k] = -&(&(&h.var(i) * &ah) + &(&h.var(j) * &bh));
        strip_power(&mut omega, k);
        Ok(ProjectiveFoliation { ring: h.clone(), omega })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn coeffs(&self) -> &[MPoly; 3] {
        &self.omega
    }

    /// Degree `d`: the coefficients of `Ω` have degree `d + 1`.
    pub fn degree(&self) -> u32 {
        self.omega
            .iter()
            .filter_map(|p| p.degree())
            .max()
            .expect("nonzero form")
            - 1
    }

    /// The saturated form on chart `c`.
    pub fn chart(&self, c: P2Chart) -> Result<PlaneFoliation> {
        let r = chart_ring(&self.ring, c);
        let [i, j] = c.free();
        PlaneFoliation::saturate(
            dehomogenize(&self.omega[i], c, &r),
            dehomogenize(&self.omega[j], c, &r),
        )
    }

    /// Number of tangencies with the line through `p` and `q`, counted with
    /// multiplicity, read off the binary form `Ω(s p + t q)·q / s`.
    pub fn line_tangencies(&self, p: &[Coeff; 3], q: &[Coeff; 3]) -> Result<u32> {
        let st = Ring::new(["s", "t"])?;
        let (s, t) = (st.var(0), st.var(1));
        let pt: Vec<MPoly> = (0..3)
            .map(|i| &s.scale(&p[i]) + &t.scale(&q[i]))
            .collect();
        let mut form = MPoly::zero(&st);
        for (w, qi) in self.omega.iter().zip(q) {
            form = &form + &w.compose(&pt).scale(qi);
        }
        if form.is_zero() {
            return Err(Error::InvariantHypersurface);
        }
        Ok(form.degree().expect("nonzero") - 1)
    }
}

impl fmt::Display for ProjectiveFoliation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = crate::form::OneForm::new(self.omega.to_vec()).expect("same ring");
        w.fmt(f)
    }
}

impl fmt::Debug for ProjectiveFoliation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ProjectiveFoliation({self})")
    }
}

/// Degree of the projective extension of an affine foliation.
pub fn foliation_degree(f: &PlaneFoliation) -> Result<u32> {
    Ok(ProjectiveFoliation::from_affine(f)?.degree())
}

/// The same foliation written on another chart.
pub fn chart_transform(f: &PlaneFoliation, target: P2Chart) -> Result<PlaneFoliation> {
    ProjectiveFoliation::from_affine(f)?.chart(target)
}

/// `d² + d + 1 + r(d + r - 1) - τ`.
pub fn p2_rhs(d: u32, r: u32, tau_global: u64) -> i64 {
    let (d, r) = (d as i64, r as i64);
    d * d + d + 1 + r * (d + r - 1) - tau_global as i64
}

/// A reduced projective curve `Φ = 0` of degree `r`.
#[derive(Clone, PartialEq, Eq)]
pub struct ProjectiveCurve {
    ring: Ring,
    phi: MPoly,
}

impl ProjectiveCurve {
    pub fn new(phi: MPoly) -> Result<Self> {
        if phi.ring().dim() != 3 {
            return Err(Error::UnsupportedDimension(phi.ring().dim()));
        }
        if phi.is_zero() || phi.is_constant() || !phi.is_homogeneous() {
            return Err(Error::InvalidInput(format!(
                "{phi} is not a homogeneous form of positive degree"
            )));
        }
        Ok(ProjectiveCurve {
            ring: phi.ring().clone(),
            phi,
        })
    }

    /// Closure of an affine curve in the chart `z = 1`.
    pub fn from_affine(phi: &MPoly) -> Result<Self> {
        let h = homogeneous_ring(phi.ring())?;
        let r = phi.degree().unwrap_or(0);
        Self::new(homogenize(phi, P2Chart::Z, r, &h))
    }

    pub fn degree(&self) -> u32 {
        self.phi.degree().expect("nonzero")
    }

    pub fn equation(&self) -> &MPoly {
        &self.phi
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn chart(&self, c: P2Chart) -> MPoly {
        dehomogenize(&self.phi, c, &chart_ring(&self.ring, c))
    }
}

impl fmt::Display for ProjectiveCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.phi.fmt(f)
    }
}

impl fmt::Debug for ProjectiveCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ProjectiveCurve({self})")
    }
}

/// A rational point of `P^2` in one chart's coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct P2Point {
    pub chart: P2Chart,
    pub coords: [Coeff; 2],
}

impl P2Point {
    /// Homogeneous coordinates `[x : y : z]`.
    pub fn homogeneous(&self) -> [Coeff; 3] {
        let mut v = [Coeff::zero(), Coeff::zero(), Coeff::zero()];
        let [i, j] = self.chart.free();
        v[i] = self.coords[0].clone();
        v[j] = self.coords[1].clone();
        v[self.chart.fixed()] = Coeff::one();
        v
    }
}

impl fmt::Display for P2Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.homogeneous();
        write!(f, "[{a}:{b}:{c}]")
    }
}

/// Zeros of a system on chart `c` that are not seen by earlier charts: all
/// of chart `z = 1`, the points with `z = 0` of chart `x = 1`, and the
/// origin of chart `y = 1`.
fn chart_points(f: &MPoly, g: &MPoly, c: P2Chart, what: &str) -> Result<Vec<[Coeff; 2]>> {
    match c {
        P2Chart::Z => common_zeros(f, g, what),
        P2Chart::X => {
            let restrict = |p: &MPoly| {
                let kept = MPoly::from_terms(
                    p.ring(),
                    p.terms().iter().filter(|(m, _)| m.exponents()[1] == 0).cloned(),
                );
                UPoly::from_mpoly(&kept, 0).expect("univariate")
            };
            let (rf, rg) = (restrict(f), restrict(g));
            let common = if rf.is_zero() {
                rg
            } else if rg.is_zero() {
                rf
            } else {
                rf.gcd(&rg)
            };
            match solve::line_zeros(&common, what)? {
                Some(ys) => Ok(ys.into_iter().map(|y| [y, Coeff::zero()]).collect()),
                None => Ok(common_zeros(f, g, what)?
                    .into_iter()
                    .filter(|p| p[1].is_zero())
                    .collect()),
            }
        }
        P2Chart::Y => {
            if f.vanishes_at_origin() && g.vanishes_at_origin() {
                Ok(vec![[Coeff::zero(), Coeff::zero()]])
            } else {
                Ok(Vec::new())
            }
        }
    }
}

/// Contribution `μ_p + tang_p - τ_p` of one point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointContribution {
    pub point: P2Point,
    pub mu: u64,
    pub tang: u64,
    pub tau: u64,
}

impl PointContribution {
    pub fn value(&self) -> i64 {
        self.mu as i64 + self.tang as i64 - self.tau as i64
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlobalReport {
    pub d: u32,
    pub r: u32,
    pub tau_global: u64,
    pub points: Vec<PointContribution>,
    pub lhs: i64,
    pub rhs: i64,
    /// `Σ μ_p` over the singular points of the foliation.
    pub mu_total: u64,
}

impl GlobalReport {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }

    /// `τ(X) ≤ d² + d + 1 + r(d + r - 1)`.
    pub fn tjurina_bound_holds(&self) -> bool {
        p2_rhs(self.d, self.r, 0) >= self.tau_global as i64
    }

    /// `Σ μ_p = d² + d + 1`.
    pub fn milnor_sum_holds(&self) -> bool {
        let d = self.d as u64;
        self.mu_total == d * d + d + 1
    }
}

/// Sums the local Bruce–Roberts numbers over the singular points of `F` and
/// the tangency points with `X`, and compares with the global count.
pub fn global_br_check(f: &ProjectiveFoliation, x: &ProjectiveCurve, cfg: &Config) -> Result<GlobalReport> {
    if f.ring() != x.ring() {
        return Err(Error::RingMismatch {
            expected: f.ring().to_string(),
            found: x.ring().to_string(),
        });
    }
    let mut points: Vec<PointContribution> = Vec::new();
    let mut mu_total = 0u64;
    let mut tau_global = 0u64;
    for c in P2Chart::ALL {
        let fc = f.chart(c)?;
        let phi = x.chart(c);
        let [p, q] = fc.vector_field();
        let vphi = &(&p * &phi.partial(0)?) + &(&q * &phi.partial(1)?);
        let mut pts = chart_points(fc.a(), fc.b(), c, "the singular set")?;
        let tangencies = match chart_points(&phi, &vphi, c, "the tangency locus") {
            Err(Error::NonIsolated(_)) => return Err(Error::InvariantHypersurface),
            other => other?,
        };
        for t in tangencies {
            if !pts.contains(&t) {
                pts.push(t);
            }
        }
        pts.sort();
        for at in pts {
            let local = fc.translate(&at);
            let mu = local.milnor(cfg)?.require("a local Milnor number")?;
            mu_total += mu;
            let phi_p = phi.translate(&at);
            let (tang, tau) = if phi_p.vanishes_at_origin() {
                let germ = HypersurfaceGerm::new(phi_p)?;
                let tang = tangency_order(&local, &germ, cfg)?.require("a tangency order")?;
                let tau = invariants::tjurina(&germ, cfg)?.require("a Tjurina number")?;
                (tang, tau)
            } else {
                (0, 0)
            };
            tau_global += tau;
            points.push(PointContribution {
                point: P2Point { chart: c, coords: at },
                mu,
                tang,
                tau,
            });
        }
    }
    let d = f.degree();
    let r = x.degree();
    let lhs = points.iter().map(PointContribution::value).sum();
    Ok(GlobalReport {
        d,
        r,
        tau_global,
        points,
        lhs,
        rhs: p2_rhs(d, r, tau_global),
        mu_total,
    })
}

/// `Σ μ_p` over all singular points of a projective foliation.
pub fn milnor_sum(f: &ProjectiveFoliation, cfg: &Config) -> Result<u64> {
    let mut total = 0;
    for c in P2Chart::ALL {
        let fc = f.chart(c)?;
        for at in chart_points(fc.a(), fc.b(), c, "the singular set")? {
            total += fc.translate(&at).milnor(cfg)?.require("a local Milnor number")?;
        }
    }
    Ok(total)
}
