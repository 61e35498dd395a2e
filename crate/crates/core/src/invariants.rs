//! Local invariants of a hypersurface germ `X = {φ = 0}` and a 1-form `ω`.

use crate::config::Config;
use crate::error::{Error, Result};
use crate::form::OneForm;
use crate::local::{colength, minors, Colength, LocalIdeal};
use crate::poly::{gcd_all, MPoly, Ring};

/// Germ at the origin of a reduced hypersurface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypersurfaceGerm {
    phi: MPoly,
}

impl HypersurfaceGerm {
    /// Checks `φ(0) = 0`; in two variables also that `φ` has no repeated
    /// factor through the origin. Reducedness is trusted for `n >= 3`.
    pub fn new(phi: MPoly) -> Result<Self> {
        if phi.is_zero() {
            return Err(Error::InvalidInput("the zero polynomial defines no hypersurface".into()));
        }
        if !phi.vanishes_at_origin() {
            return Err(Error::InvalidInput(format!("{phi} does not vanish at the origin")));
        }
        if phi.ring().dim() == 2 {
            let mut all = vec![phi.clone()];
            all.extend(phi.gradient());
            let g = gcd_all(all.iter());
            if !g.is_constant() && g.vanishes_at_origin() {
                return Err(Error::InvalidInput(format!(
                    "{phi} is not reduced: repeated factor {g}"
                )));
            }
        }
        Ok(HypersurfaceGerm { phi })
    }

    pub fn parse(text: &str, ring: &Ring) -> Result<Self> {
        Self::new(ring.parse(text)?)
    }

    pub fn phi(&self) -> &MPoly {
        &self.phi
    }

    pub fn ring(&self) -> &Ring {
        self.phi.ring()
    }

    /// Multiplicity `ord φ`.
    pub fn multiplicity(&self) -> u32 {
        self.phi.ord().expect("nonzero")
    }
}

/// Vector fields given by their components along `∂/∂x_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaGenerators {
    fields: Vec<Vec<MPoly>>,
}

impl ThetaGenerators {
    /// Accepts fields tangent to `X`: `dφ(ξ) ∈ ⟨φ⟩`.
    pub fn new(fields: Vec<Vec<MPoly>>, x: &HypersurfaceGerm) -> Result<Self> {
        let d = OneForm::exact(x.phi());
        for (i, f) in fields.iter().enumerate() {
            let v = d.evaluate(f)?;
            if !v.is_divisible_by(x.phi())? {
                return Err(Error::GeneratorNotTangent(i + 1));
            }
        }
        Ok(ThetaGenerators { fields })
    }

    /// Fields taken on trust, for use without a hypersurface.
    pub fn unchecked(fields: Vec<Vec<MPoly>>) -> Self {
        ThetaGenerators { fields }
    }

    /// The coordinate fields `∂/∂x_i`.
    pub fn coordinate(ring: &Ring) -> Self {
        let n = ring.dim();
        ThetaGenerators {
            fields: (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| if i == j { MPoly::one(ring) } else { MPoly::zero(ring) })
                        .collect()
                })
                .collect(),
        }
    }

    /// Generators of the tangent fields of a weighted homogeneous plane
    /// curve: the Euler field and the Hamiltonian field.
    pub fn quasi_homogeneous(x: &HypersurfaceGerm, weights: [i64; 2]) -> Result<Self> {
        let r = x.ring();
        if r.dim() != 2 {
            return Err(Error::UnsupportedDimension(r.dim()));
        }
        let (px, py) = (x.phi().partial(0)?, x.phi().partial(1)?);
        let euler = vec![
            &MPoly::from_int(r, weights[0]) * &r.var(0),
            &MPoly::from_int(r, weights[1]) * &r.var(1),
        ];
        let hamilton = vec![py, -px];
        // the Euler field must reproduce a multiple of φ
        let e = OneForm::exact(x.phi()).evaluate(&euler)?;
        let Some(q) = e.exact_divide(x.phi())? else {
            return Err(Error::GeneratorNotTangent(1));
        };
        if !q.is_constant() || q.is_zero() {
            return Err(Error::InvalidInput(format!(
                "{} is not weighted homogeneous for weights {weights:?}",
                x.phi()
            )));
        }
        Self::new(vec![euler, hamilton], x)
    }

    pub fn fields(&self) -> &[Vec<MPoly>] {
        &self.fields
    }
}

fn require_plane_or_more(r: &Ring) -> Result<()> {
    if r.dim() < 2 {
        return Err(Error::UnsupportedDimension(r.dim()));
    }
    Ok(())
}

fn same_ring(w: &OneForm, x: &HypersurfaceGerm) -> Result<()> {
    w.ring().check_same(x.ring())
}

/// `⟨A_1, …, A_n⟩`.
pub fn form_ideal(w: &OneForm) -> Result<LocalIdeal> {
    LocalIdeal::new(w.ring(), w.coeffs().iter().cloned())
}

pub fn jacobian_ideal(x: &HypersurfaceGerm) -> Result<LocalIdeal> {
    LocalIdeal::new(x.ring(), x.phi().gradient())
}

pub fn tjurina_ideal(x: &HypersurfaceGerm) -> Result<LocalIdeal> {
    jacobian_ideal(x)?.with([x.phi().clone()])
}

/// `⟨φ⟩` plus the `2 x 2` minors of the matrix with rows `dφ` and `ω`.
pub fn gsv_ideal(w: &OneForm, x: &HypersurfaceGerm) -> Result<LocalIdeal> {
    same_ring(w, x)?;
    LocalIdeal::new(
        x.ring(),
        std::iter::once(x.phi().clone()).chain(w.wedge_coeffs(x.phi())?),
    )
}

/// `ω(Θ_X^T)`: the values of `ω` on the trivial fields `φ ∂/∂x_i` and
/// `∂_k φ ∂/∂x_j - ∂_j φ ∂/∂x_k`.
pub fn trivial_theta_ideal(w: &OneForm, x: &HypersurfaceGerm) -> Result<LocalIdeal> {
    same_ring(w, x)?;
    let phi = x.phi();
    LocalIdeal::new(
        x.ring(),
        w.coeffs()
            .iter()
            .map(|a| phi * a)
            .chain(w.wedge_coeffs(phi)?),
    )
}

/// `ω(Θ)` for the given generators.
pub fn theta_ideal(w: &OneForm, gens: &ThetaGenerators) -> Result<LocalIdeal> {
    let vals = gens
        .fields()
        .iter()
        .map(|f| w.evaluate(f))
        .collect::<Result<Vec<_>>>()?;
    LocalIdeal::new(w.ring(), vals)
}

/// Milnor number `μ₀(ω) = dim O/⟨A_i⟩`.
pub fn milnor_form(w: &OneForm, cfg: &Config) -> Result<Colength> {
    colength(&form_ideal(w)?, cfg.max_steps)
}

/// Milnor number `μ₀(X)` of the hypersurface.
pub fn milnor_hyp(x: &HypersurfaceGerm, cfg: &Config) -> Result<Colength> {
    colength(&jacobian_ideal(x)?, cfg.max_steps)
}

/// Tjurina number `τ₀(X)`.
pub fn tjurina(x: &HypersurfaceGerm, cfg: &Config) -> Result<Colength> {
    colength(&tjurina_ideal(x)?, cfg.max_steps)
}

/// True when `X` is invariant by `ω`, i.e. `φ` divides every coefficient
/// of `ω ∧ dφ`.
pub fn is_invariant(w: &OneForm, x: &HypersurfaceGerm) -> Result<bool> {
    same_ring(w, x)?;
    require_plane_or_more(x.ring())?;
    for c in w.wedge_coeffs(x.phi())? {
        if !c.is_divisible_by(x.phi())? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Algebraic GSV index of `ω` on the hypersurface.
pub fn gsv_hyp(w: &OneForm, x: &HypersurfaceGerm, cfg: &Config) -> Result<Colength> {
    colength(&gsv_ideal(w, x)?, cfg.max_steps)
}

/// The ideal `⟨f_1, …, f_k⟩` plus the maximal minors of `(df_1; …; df_k; ω)`.
pub fn gsv_icis_ideal(w: &OneForm, fs: &[MPoly]) -> Result<LocalIdeal> {
    let n = w.ring().dim();
    if fs.is_empty() || fs.len() >= n {
        return Err(Error::ShapeMismatch(format!(
            "need 1 <= k < {n} equations, got {}",
            fs.len()
        )));
    }
    let mut rows: Vec<Vec<MPoly>> = Vec::with_capacity(fs.len() + 1);
    for f in fs {
        w.ring().check_same(f.ring())?;
        rows.push(f.gradient());
    }
    rows.push(w.coeffs().to_vec());
    let m = minors(&rows, fs.len() + 1)?;
    m.with(fs.iter().cloned())
}

/// GSV index on the complete intersection `f_1 = … = f_k = 0`.
pub fn gsv_icis(w: &OneForm, fs: &[MPoly], cfg: &Config) -> Result<Colength> {
    colength(&gsv_icis_ideal(w, fs)?, cfg.max_steps)
}

/// Finite ingredients shared by the Bruce–Roberts type invariants.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Ingredients {
    pub gsv: u64,
    pub mu0_omega: u64,
    pub tau: u64,
}

fn ingredients(w: &OneForm, x: &HypersurfaceGerm, cfg: &Config) -> Result<Ingredients> {
    if is_invariant(w, x)? {
        return Err(Error::InvariantHypersurface);
    }
    let mu0_omega = milnor_form(w, cfg)?.require("the Milnor number of the 1-form")?;
    let tau = tjurina(x, cfg)?.require("the Tjurina number of the hypersurface")?;
    let gsv = gsv_hyp(w, x, cfg)?.require("the GSV index")?;
    Ok(Ingredients { gsv, mu0_omega, tau })
}

fn minus(a: u64, b: u64, what: &str) -> Result<u64> {
    a.checked_sub(b)
        .ok_or_else(|| Error::Consistency(format!("{what} would be negative ({a} - {b})")))
}

/// Bruce–Roberts number `μ_BR(ω, X) = GSV + μ₀(ω) - τ₀(X)`.
pub fn bruce_roberts(w: &OneForm, x: &HypersurfaceGerm, cfg: &Config) -> Result<u64> {
    let i = ingredients(w, x, cfg)?;
    minus(i.gsv + i.mu0_omega, i.tau, "the Bruce-Roberts number")
}

/// `μ_BR` from the colength of `ω(Θ_X^T)` minus `τ₀(X)`.
pub fn bruce_roberts_trivial_direct(w: &OneForm, x: &HypersurfaceGerm, cfg: &Config) -> Result<u64> {
    let i = ingredients(w, x, cfg)?;
    let c = colength(&trivial_theta_ideal(w, x)?, cfg.max_steps)?
        .require("the colength of the trivial-field ideal")?;
    minus(c, i.tau, "the Bruce-Roberts number")
}

/// `dim O/ω(Θ)` for user supplied generators of `Θ`.
pub fn bruce_roberts_user_theta(w: &OneForm, gens: &ThetaGenerators, cfg: &Config) -> Result<Colength> {
    colength(&theta_ideal(w, gens)?, cfg.max_steps)
}

/// `dim O/(ω(Θ) + ⟨φ⟩)` for user supplied generators.
pub fn br_relative_user_theta(
    w: &OneForm,
    gens: &ThetaGenerators,
    x: &HypersurfaceGerm,
    cfg: &Config,
) -> Result<Colength> {
    colength(&theta_ideal(w, gens)?.with([x.phi().clone()])?, cfg.max_steps)
}

/// Relative Bruce–Roberts number `μ_BR⁻ = GSV - τ₀(X)`.
pub fn br_relative(w: &OneForm, x: &HypersurfaceGerm, cfg: &Config) -> Result<u64> {
    let i = ingredients(w, x, cfg)?;
    minus(i.gsv, i.tau, "the relative Bruce-Roberts number")
}

/// `μ_BR⁻` from `dim O/(ω(Θ_X^T) + ⟨φ⟩) - τ₀(X)`.
pub fn br_relative_trivial_direct(w: &OneForm, x: &HypersurfaceGerm, cfg: &Config) -> Result<u64> {
    let i = ingredients(w, x, cfg)?;
    let ideal = trivial_theta_ideal(w, x)?.with([x.phi().clone()])?;
    let c = colength(&ideal, cfg.max_steps)?.require("the relative trivial-field colength")?;
    minus(c, i.tau, "the relative Bruce-Roberts number")
}

/// Radial index `GSV - μ₀(X)`.
pub fn radial_index(w: &OneForm, x: &HypersurfaceGerm, cfg: &Config) -> Result<i64> {
    let i = ingredients(w, x, cfg)?;
    let mu = milnor_hyp(x, cfg)?.require("the Milnor number of the hypersurface")?;
    Ok(i.gsv as i64 - mu as i64)
}

/// Euler obstruction of `ω` on a plane curve: radial index minus `m - 1`.
pub fn euler_obstruction_curve(w: &OneForm, x: &HypersurfaceGerm, cfg: &Config) -> Result<i64> {
    if x.ring().dim() != 2 {
        return Err(Error::UnsupportedDimension(x.ring().dim()));
    }
    let rad = radial_index(w, x, cfg)?;
    Ok(rad - (x.multiplicity() as i64 - 1))
}

/// Milnor number `μ₀(φ, f)` of the complete intersection, as
/// `GSV(df) - μ₀(X)`.
pub fn icis_pair_milnor(x: &HypersurfaceGerm, f: &MPoly, cfg: &Config) -> Result<u64> {
    let df = OneForm::exact(f);
    if df.is_zero() {
        return Err(Error::ZeroForm);
    }
    let gsv = gsv_hyp(&df, x, cfg)?;
    let Some(gsv) = gsv.finite() else {
        return Err(Error::NonIsolated("not an isolated complete intersection pair".into()));
    };
    let mu = milnor_hyp(x, cfg)?.require("the Milnor number of the hypersurface")?;
    minus(gsv, mu, "the complete intersection Milnor number")
}

/// Both routes to the Bruce–Roberts number of a function on `X`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BrFunction {
    pub mu0_f: u64,
    pub mu0_x: u64,
    pub mu_pair: u64,
    pub tau: u64,
    /// `μ_BR(df, X)` through the 1-form formula.
    pub via_form: u64,
    /// `μ₀(f) + μ₀(X) + μ₀(φ, f) - τ₀(X)`.
    pub via_parts: u64,
}

pub fn br_function(f: &MPoly, x: &HypersurfaceGerm, cfg: &Config) -> Result<BrFunction> {
    let df = OneForm::exact(f);
    let via_form = bruce_roberts(&df, x, cfg)?;
    let mu0_f = milnor_form(&df, cfg)?.require("the Milnor number of the function")?;
    let mu0_x = milnor_hyp(x, cfg)?.require("the Milnor number of the hypersurface")?;
    let mu_pair = icis_pair_milnor(x, f, cfg)?;
    let tau = tjurina(x, cfg)?.require("the Tjurina number")?;
    let via_parts = minus(mu0_f + mu0_x + mu_pair, tau, "the Bruce-Roberts number")?;
    Ok(BrFunction {
        mu0_f,
        mu0_x,
        mu_pair,
        tau,
        via_form,
        via_parts,
    })
}

/// Every invariant of a pair; entries are `None` when undefined.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub invariant: bool,
    pub mu0_omega: Colength,
    pub mu0_x: Colength,
    pub tau0: Colength,
    pub gsv: Colength,
    pub tang: Option<Colength>,
    pub mu_br: Option<u64>,
    pub mu_br_rel: Option<u64>,
    pub rad: Option<i64>,
    pub eu: Option<i64>,
}

impl InvariantReport {
    pub fn compute(w: &OneForm, x: &HypersurfaceGerm, cfg: &Config) -> Result<Self> {
        same_ring(w, x)?;
        let invariant = is_invariant(w, x)?;
        let mu0_omega = milnor_form(w, cfg)?;
        let mu0_x = milnor_hyp(x, cfg)?;
        let tau0 = tjurina(x, cfg)?;
        let gsv = gsv_hyp(w, x, cfg)?;
        let plane = x.ring().dim() == 2;
        let tang = if plane { Some(gsv) } else { None };
        let mut rep = InvariantReport {
            invariant,
            mu0_omega,
            mu0_x,
            tau0,
            gsv,
            tang,
            mu_br: None,
            mu_br_rel: None,
            rad: None,
            eu: None,
        };
        if let (false, Some(g), Some(m0), Some(t)) =
            (invariant, gsv.finite(), mu0_omega.finite(), tau0.finite())
        {
            rep.mu_br = (g + m0).checked_sub(t);
            rep.mu_br_rel = g.checked_sub(t);
            if let Some(mx) = mu0_x.finite() {
                let rad = g as i64 - mx as i64;
                rep.rad = Some(rad);
                if plane {
                    rep.eu = Some(rad - (x.multiplicity() as i64 - 1));
                }
            }
        }
        Ok(rep)
    }
}

/// Named ideals whose colengths enter the invariants of a pair, for
/// cross-checking against the linear-algebra oracle.
pub fn ideals_for(w: &OneForm, x: &HypersurfaceGerm) -> Result<Vec<(&'static str, LocalIdeal)>> {
    let triv = trivial_theta_ideal(w, x)?;
    Ok(vec![
        ("mu0_omega", form_ideal(w)?),
        ("mu0_x", jacobian_ideal(x)?),
        ("tau0", tjurina_ideal(x)?),
        ("gsv", gsv_ideal(w, x)?),
        ("trivial_theta", triv.clone()),
        ("trivial_theta_rel", triv.with([x.phi().clone()])?),
    ])
}

/// `ν = min(ord A_i)`, the algebraic multiplicity of the form.
pub fn algebraic_multiplicity(w: &OneForm) -> Option<u32> {
    w.coeffs().iter().filter_map(MPoly::ord).min()
}

/// Lower bound `ν(ν+1)/2` for the Milnor number of a plane form.
pub fn milnor_lower_bound(nu: u32) -> u64 {
    let nu = nu as u64;
    nu * (nu + 1) / 2
}
