//! Seeded property suites over random plane data.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use singinv::foliation::{order_pullback, tangency_order, PlaneFoliation};
use singinv::invariants::*;
use singinv::local::{colength, colength_oracle_auto, OracleValue};
use singinv::poly::{gcd, rat, Parametrization};
use singinv::{Colength, Config, Error, LocalIdeal, MPoly, Monomial, OneForm, Ring};

use crate::record::Record;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub name: &'static str,
    pub holds: u64,
    pub total: u64,
    pub first_failure: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OracleTally {
    pub compared: u64,
    pub agreed: u64,
    /// The oracle ran out of degree room before deciding.
    pub undecided: u64,
    pub first_mismatch: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub seed: u64,
    pub evaluated: u64,
    pub skipped: u64,
    pub properties: Vec<Tally>,
    pub oracle: OracleTally,
    /// Errors other than the expected skips.
    pub errors: Vec<String>,
}

impl SuiteReport {
    pub fn property(&self, name: &str) -> &Tally {
        self.properties.iter().find(|t| t.name == name).expect("known property")
    }

    pub fn passed(&self) -> bool {
        self.errors.is_empty() && self.properties.iter().all(|t| t.holds == t.total)
    }

    pub fn oracle_passed(&self) -> bool {
        self.oracle.compared > 0 && self.oracle.agreed == self.oracle.compared && self.oracle.undecided == 0
    }

    pub fn record(&self) -> Record {
        let mut r = Record::new(format!("suite {} seed {}", self.name, self.seed));
        r.value("evaluated", self.evaluated);
        r.value("skipped", self.skipped);
        r.value("oracle_compared", self.oracle.compared);
        r.value("oracle_undecided", self.oracle.undecided);
        for t in &self.properties {
            r.check(t.name, t.holds, t.total);
            if let Some(f) = &t.first_failure {
                r.details.push(format!("{}: {f}", t.name));
            }
        }
        r.check("oracle agreement", self.oracle.agreed, self.oracle.compared);
        if let Some(m) = &self.oracle.first_mismatch {
            r.details.push(format!("oracle: {m}"));
        }
        r.check("unexpected errors", self.errors.len(), 0usize);
        r.details.extend(self.errors.iter().cloned());
        r
    }

    fn tally(&mut self, name: &'static str, ok: bool, case: impl FnOnce() -> String) {
        let t = match self.properties.iter_mut().position(|t| t.name == name) {
            Some(i) => &mut self.properties[i],
            None => {
                self.properties.push(Tally { name, ..Tally::default() });
                self.properties.last_mut().unwrap()
            }
        };
        t.total += 1;
        if ok {
            t.holds += 1;
        } else if t.first_failure.is_none() {
            t.first_failure = Some(case());
        }
    }

    fn oracle(&mut self, ideal: &LocalIdeal, c: Colength, bound: u32) {
        let Colength::Finite(n) = c else { return };
        self.oracle.compared += 1;
        match colength_oracle_auto(ideal, bound) {
            OracleValue::Value(v) if v == n => self.oracle.agreed += 1,
            OracleValue::Value(v) => {
                if self.oracle.first_mismatch.is_none() {
                    self.oracle.first_mismatch = Some(format!("{ideal}: {n} vs {v}"));
                }
            }
            OracleValue::ExceedsBound => self.oracle.undecided += 1,
        }
    }
}

pub const SUITE_A: &[&str] = &[
    "mu_br two routes",
    "mu_br_rel two routes",
    "mu_br = mu0 + mu_br_rel",
    "trivial colength = gsv + mu0",
    "colength additivity",
    "tang = gsv",
    "mu0 >= nu(nu+1)/2",
];

pub const SUITE_B: &[&str] = &["tang = ord + mu_x", "radial = ord"];

fn plane() -> Ring {
    Ring::new(["x", "y"]).expect("valid ring")
}

/// A polynomial without constant term, degree at most `deg`, sparse small
/// integer coefficients.
fn random_poly(r: &Ring, rng: &mut ChaCha8Rng, deg: u32) -> MPoly {
    let mut terms = Vec::new();
    for d in 1..=deg {
        for i in 0..=d {
            if rng.random_bool(0.4) {
                let c = rng.random_range(-3i64..=3);
                terms.push((Monomial::from_exponents(&[i, d - i]), rat(c)));
            }
        }
    }
    MPoly::from_terms(r, terms)
}

fn expected_skip(e: &Error) -> bool {
    matches!(e, Error::InvariantHypersurface | Error::NonIsolated(_))
}

fn col(r: &Ring, gens: Vec<MPoly>, cfg: &Config) -> singinv::Result<(LocalIdeal, Colength)> {
    let i = LocalIdeal::new(r, gens)?;
    let c = colength(&i, cfg.max_steps)?;
    Ok((i, c))
}

struct CaseA {
    w: OneForm,
    x: HypersurfaceGerm,
    extra: [MPoly; 4],
}

fn eval_a(rep: &mut SuiteReport, c: &CaseA, cfg: &Config) -> singinv::Result<()> {
    let (w, x) = (&c.w, &c.x);
    let name = || format!("{w} on {}", x.phi());
    let br = bruce_roberts(w, x, cfg)?;
    let gsv = gsv_hyp(w, x, cfg)?.require("gsv")?;
    let mu0 = milnor_form(w, cfg)?.require("mu0")?;
    let rel = br_relative(w, x, cfg)?;
    rep.evaluated += 1;
    rep.tally("mu_br two routes", bruce_roberts_trivial_direct(w, x, cfg)? == br, name);
    rep.tally("mu_br_rel two routes", br_relative_trivial_direct(w, x, cfg)? == rel, name);
    rep.tally("mu_br = mu0 + mu_br_rel", br == mu0 + rel, name);
    let r = x.ring().clone();
    let triv = trivial_theta_ideal(w, x)?;
    let triv_c = colength(&triv, cfg.max_steps)?;
    rep.tally("trivial colength = gsv + mu0", triv_c == Colength::Finite(gsv + mu0), name);
    // the trivial-field ideal is <C, phi A, phi B> with C the wedge coefficient
    let (a, b, phi) = (w.coeff(0).clone(), w.coeff(1).clone(), x.phi().clone());
    let wedge = w.wedge_coeffs(&phi)?.remove(0);
    let (i1, c1) = col(&r, vec![wedge.clone(), &phi * &a, &phi * &b], cfg)?;
    let (i2, c2) = col(&r, vec![wedge.clone(), a.clone(), b.clone()], cfg)?;
    let (i3, c3) = col(&r, vec![wedge, phi.clone()], cfg)?;
    rep.tally("colength additivity", c1 == c2 + c3, name);
    for (i, c) in [(i1, c1), (i2, c2), (i3, c3)] {
        rep.oracle(&i, c, cfg.oracle_bound);
    }
    let [f, g, p1, p2] = &c.extra;
    if !f.is_zero() && !g.is_zero() && gcd(f, g).is_constant() {
        let (j1, d1) = col(&r, vec![f.clone(), g * p1, g * p2], cfg)?;
        let (j2, d2) = col(&r, vec![f.clone(), p1.clone(), p2.clone()], cfg)?;
        let (j3, d3) = col(&r, vec![f.clone(), g.clone()], cfg)?;
        if d2.is_finite() && d3.is_finite() {
            rep.tally("colength additivity", d1 == d2 + d3, || format!("f={f}, g={g}, p=({p1}, {p2})"));
            for (i, c) in [(j1, d1), (j2, d2), (j3, d3)] {
                rep.oracle(&i, c, cfg.oracle_bound);
            }
        }
    }
    let fol = PlaneFoliation::from_form(w)?;
    rep.tally("tang = gsv", tangency_order(&fol, x, cfg)? == Colength::Finite(gsv), name);
    let nu = algebraic_multiplicity(w).unwrap_or(0);
    rep.tally("mu0 >= nu(nu+1)/2", mu0 >= milnor_lower_bound(nu), name);
    for (_, ideal) in ideals_for(w, x)? {
        let c = colength(&ideal, cfg.max_steps)?;
        rep.oracle(&ideal, c, cfg.oracle_bound);
    }
    Ok(())
}

fn empty(name: &'static str, seed: u64, props: &[&'static str]) -> SuiteReport {
    SuiteReport {
        name,
        seed,
        evaluated: 0,
        skipped: 0,
        properties: props.iter().map(|&n| Tally { name: n, ..Tally::default() }).collect(),
        oracle: OracleTally::default(),
        errors: Vec::new(),
    }
}

/// Random forms and curves of degree at most 4 in the plane, until `cases`
/// of them were evaluated.
pub fn suite_a(seed: u64, cases: u64, cfg: &Config) -> SuiteReport {
    let r = plane();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rep = empty("a", seed, SUITE_A);
    let mut attempts = 0u64;
    while rep.evaluated < cases && attempts < cases * 50 {
        attempts += 1;
        let (a, b, phi) = (random_poly(&r, &mut rng, 4), random_poly(&r, &mut rng, 4), random_poly(&r, &mut rng, 4));
        let extra = std::array::from_fn(|_| random_poly(&r, &mut rng, 4));
        if phi.is_zero() || (a.is_zero() && b.is_zero()) {
            rep.skipped += 1;
            continue;
        }
        let Ok(x) = HypersurfaceGerm::new(phi) else {
            rep.skipped += 1;
            continue;
        };
        let w = OneForm::new(vec![a, b]).expect("two coefficients");
        let case = CaseA { w, x, extra };
        let before = rep.clone();
        if let Err(e) = eval_a(&mut rep, &case, cfg) {
            // partial tallies of a skipped case are dropped
            rep = before;
            if expected_skip(&e) {
                rep.skipped += 1;
            } else {
                rep.errors.push(format!("{} on {}: {e}", case.w, case.x.phi()));
            }
        }
    }
    rep
}

/// Irreducible curves with exact parametrizations.
pub fn branch_corpus() -> Vec<(String, [String; 2])> {
    let mut out: Vec<(String, [String; 2])> = [
        ("(y^2 - x^3)^2 - 4*x^5*y - x^7", ["t^4", "t^6 + t^7"]),
        ("(y - x^3)^2 - x^5", ["t^2", "t^5 + t^6"]),
        ("y^2 - x*(1 + x)^2", ["t^2", "t + t^3"]),
        ("y^2 - x^3*(1 + x)^2", ["t^2", "t^3 + t^5"]),
        ("y^3 - x^4*(1 + x)^3", ["t^3", "t^4 + t^7"]),
    ]
    .iter()
    .map(|(c, [a, b])| (c.to_string(), [a.to_string(), b.to_string()]))
    .collect();
    let mut pairs: Vec<(u32, u32)> = (2..=9u32)
        .flat_map(|p| (p + 1..=13).map(move |q| (p, q)))
        .filter(|&(p, q)| num_integer::gcd(p, q) == 1)
        .collect();
    pairs.sort_by_key(|&(p, q)| ((p - 1) * (q - 1), p));
    for (p, q) in pairs.into_iter().take(20) {
        out.push((format!("y^{p} - x^{q}"), [format!("t^{p}"), format!("t^{q}")]));
    }
    out
}

/// Random foliations against every curve of [`branch_corpus`].
pub fn suite_b(seed: u64, per_curve: u64, cfg: &Config) -> SuiteReport {
    let r = plane();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rep = empty("b", seed, SUITE_B);
    for (c, [pa, pb]) in branch_corpus() {
        let x = match HypersurfaceGerm::parse(&c, &r) {
            Ok(x) => x,
            Err(e) => {
                rep.errors.push(format!("{c}: {e}"));
                continue;
            }
        };
        let par = Parametrization::parse(&[&pa, &pb], "t").expect("valid parametrization");
        if !par.on_curve(x.phi()).unwrap_or(false) {
            rep.errors.push(format!("({pa}, {pb}) does not lie on {c}"));
            continue;
        }
        let mu = match milnor_hyp(&x, cfg).and_then(|m| m.require("mu")) {
            Ok(m) => m,
            Err(e) => {
                rep.errors.push(format!("{c}: {e}"));
                continue;
            }
        };
        let mut done = 0;
        let mut attempts = 0;
        while done < per_curve && attempts < per_curve * 10 {
            attempts += 1;
            let (a, b) = (random_poly(&r, &mut rng, 3), random_poly(&r, &mut rng, 3));
            let Ok(f) = PlaneFoliation::saturate(a, b) else {
                rep.skipped += 1;
                continue;
            };
            let res = (|| -> singinv::Result<(Colength, u32, i64, LocalIdeal)> {
                let t = tangency_order(&f, &x, cfg)?;
                let ord = order_pullback(&f.form(), &par, cfg)?;
                let rad = radial_index(&f.form(), &x, cfg)?;
                Ok((t, ord, rad, gsv_ideal(&f.form(), &x)?))
            })();
            match res {
                Ok((t, ord, rad, ideal)) => {
                    done += 1;
                    rep.evaluated += 1;
                    let name = || format!("{f} on {c}");
                    rep.tally("tang = ord + mu_x", t == Colength::Finite(ord as u64 + mu), name);
                    rep.tally("radial = ord", rad == ord as i64, name);
                    rep.oracle(&ideal, t, cfg.oracle_bound);
                }
                Err(e) if expected_skip(&e) => rep.skipped += 1,
                Err(e) => rep.errors.push(format!("{f} on {c}: {e}")),
            }
        }
        if let Ok(j) = jacobian_ideal(&x) {
            rep.oracle(&j, Colength::Finite(mu), cfg.oracle_bound);
        }
    }
    rep
}
