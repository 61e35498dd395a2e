//! Running directives against session bindings.

use std::time::Instant;

use singinv::foliation::{
    blowup, check_parametrization, exceptional_singularities, generalized_curve_check, order_pullback,
    tangency_order, verify_blowup_formula, PlaneFoliation,
};
use singinv::invariants::*;
use singinv::p2::{global_br_check, p2_rhs, ProjectiveCurve, ProjectiveFoliation};
use singinv::poly::Parametrization;
use singinv::{Colength, Config, Error, MPoly, OneForm, Result};

use crate::record::Record;
use crate::session::{parse_session, Binding, Directive, ParseError, Session};

struct Args<'a> {
    s: &'a Session,
    d: &'a Directive,
}

impl Args<'_> {
    fn binding(&self, i: usize) -> &Binding {
        self.s.get(&self.d.args[i]).expect("checked by the parser")
    }

    fn has(&self, i: usize) -> bool {
        i < self.d.args.len()
    }

    fn form(&self, i: usize) -> OneForm {
        match self.binding(i) {
            Binding::Form(w) => w.clone(),
            _ => unreachable!("checked by the parser"),
        }
    }

    fn poly(&self, i: usize) -> MPoly {
        match self.binding(i) {
            Binding::Poly(p) | Binding::Curve(p) => p.clone(),
            _ => unreachable!("checked by the parser"),
        }
    }

    fn curve(&self, i: usize) -> Result<HypersurfaceGerm> {
        HypersurfaceGerm::new(self.poly(i))
    }

    fn foliation(&self, i: usize) -> Result<PlaneFoliation> {
        PlaneFoliation::from_form(&self.form(i))
    }

    fn theta(&self, i: usize) -> Vec<Vec<singinv::MPoly>> {
        match self.binding(i) {
            Binding::Theta(t) => t.clone(),
            _ => unreachable!("checked by the parser"),
        }
    }

    fn param(&self, i: usize) -> Parametrization {
        match self.binding(i) {
            Binding::Param(p) => p.clone(),
            _ => unreachable!("checked by the parser"),
        }
    }
}

fn invariants(a: &Args, cfg: &Config, r: &mut Record) -> Result<()> {
    let (w, x) = (a.form(0), a.curve(1)?);
    let rep = InvariantReport::compute(&w, &x, cfg)?;
    r.value("invariant", rep.invariant);
    r.value("mu0", rep.mu0_omega);
    r.value("mu_x", rep.mu0_x);
    r.value("tau", rep.tau0);
    r.value("gsv", rep.gsv);
    if let Some(t) = rep.tang {
        r.value("tang", t);
    }
    if let Some(v) = rep.mu_br {
        r.value("mu_br", v);
    }
    if let Some(v) = rep.mu_br_rel {
        r.value("mu_br_rel", v);
    }
    if let Some(v) = rep.rad {
        r.value("rad", v);
    }
    if let Some(v) = rep.eu {
        r.value("eu", v);
    }
    if let (Some(br), Some(rel)) = (rep.mu_br, rep.mu_br_rel) {
        let (g, m0, t) = (rep.gsv.finite().unwrap(), rep.mu0_omega.finite().unwrap(), rep.tau0.finite().unwrap());
        r.check("mu_br by colength", bruce_roberts_trivial_direct(&w, &x, cfg)?, br);
        r.check("mu_br_rel by colength", br_relative_trivial_direct(&w, &x, cfg)?, rel);
        r.check("mu_br = mu0 + mu_br_rel", br, m0 + rel);
        r.details.push(format!("{br} = {g} + {m0} - {t}"));
    }
    Ok(())
}

fn br(a: &Args, cfg: &Config, r: &mut Record, relative: bool) -> Result<()> {
    let (w, x) = (a.form(0), a.curve(1)?);
    let (key, formula, direct) = if relative {
        ("mu_br_rel", br_relative(&w, &x, cfg)?, br_relative_trivial_direct(&w, &x, cfg)?)
    } else {
        ("mu_br", bruce_roberts(&w, &x, cfg)?, bruce_roberts_trivial_direct(&w, &x, cfg)?)
    };
    r.value(key, formula);
    r.check("trivial fields", direct, formula);
    if a.has(2) {
        let th = ThetaGenerators::new(a.theta(2), &x)?;
        let c = if relative {
            br_relative_user_theta(&w, &th, &x, cfg)?
        } else {
            bruce_roberts_user_theta(&w, &th, cfg)?
        };
        r.value(&format!("{key}_theta"), c);
        r.check("given fields", c, Colength::Finite(formula));
    }
    Ok(())
}

fn tang(a: &Args, cfg: &Config, r: &mut Record) -> Result<()> {
    let (f, x) = (a.foliation(0)?, a.curve(1)?);
    let t = tangency_order(&f, &x, cfg)?;
    r.value("tang", t);
    r.check("tang = gsv", t, gsv_hyp(&a.form(0), &x, cfg)?);
    Ok(())
}

fn blowup_directive(a: &Args, cfg: &Config, r: &mut Record) -> Result<()> {
    let f = a.foliation(0)?;
    let b = blowup(&f)?;
    r.value("nu", b.nu);
    r.value("divisor_power", b.divisor_power);
    r.value("dicritical", b.dicritical);
    let sing = exceptional_singularities(&b, None, cfg)?;
    let mut sigma = 0u64;
    for s in &sing {
        r.value(&format!("mu {}", s.point), s.mu);
        sigma += s.mu;
    }
    r.value("sigma", sigma);
    r.check("charts agree", b.charts_agree()?, true);
    r.details.push(format!("chart 1: {}", b.chart1));
    r.details.push(format!("chart 2: {}", b.chart2));
    Ok(())
}

fn blowup_verify(a: &Args, cfg: &Config, r: &mut Record) -> Result<()> {
    let (f, x) = (a.foliation(0)?, a.curve(1)?);
    let rep = verify_blowup_formula(&f, &x, cfg)?;
    r.value("dicritical", rep.dicritical);
    r.value("mu_br_0", rep.mu_br_0);
    r.value("mu_br_q", rep.mu_br_q);
    r.value("nu", rep.nu);
    r.value("m", rep.m);
    r.value("sigma", rep.sigma);
    r.value("d", rep.d);
    r.value("mu_br_rel_0", rep.mu_br_rel_0);
    r.value("mu_br_rel_q", rep.mu_br_rel_q);
    r.value("mu0", rep.mu0);
    r.check("blow-up formula", rep.mu_br_0 as i64, rep.rhs);
    r.check("relative blow-up formula", rep.mu_br_rel_0 as i64, rep.rel_rhs);
    r.check("milnor conservation", rep.mu0 as i64, rep.mu0_rhs);
    r.details.push(format!("q = {}", rep.q));
    r.details.push(rep.ledger());
    Ok(())
}

fn pullback(a: &Args, cfg: &Config, r: &mut Record) -> Result<()> {
    let (w, p) = (a.form(0), a.param(1));
    let ord = order_pullback(&w, &p, cfg)?;
    r.value("ord", ord);
    if a.has(2) {
        let x = a.curve(2)?;
        check_parametrization(&x, &p)?;
        let f = PlaneFoliation::from_form(&w)?;
        let t = tangency_order(&f, &x, cfg)?;
        let mu = milnor_hyp(&x, cfg)?.require("the Milnor number of the curve")?;
        r.value("tang", t);
        r.value("mu_x", mu);
        r.check("tang = ord + mu_x", t, Colength::Finite(ord as u64 + mu));
        r.check("radial = ord", radial_index(&w, &x, cfg)?, ord as i64);
    }
    Ok(())
}

fn gc_check(a: &Args, cfg: &Config, r: &mut Record) -> Result<()> {
    let (f, sep, x) = (a.foliation(0)?, a.poly(1), a.curve(2)?);
    let rep = generalized_curve_check(&f, &sep, &x, cfg)?;
    r.value("mu_br", rep.mu_br);
    r.value("mu_br_sep", rep.mu_br_sep);
    r.value("mu_br_rel", rep.mu_br_rel);
    r.value("mu_br_rel_sep", rep.mu_br_rel_sep);
    r.value("mu0", rep.mu0);
    r.value("mu0_sep", rep.mu0_sep);
    r.value("delta", rep.delta);
    r.check("delta = mu0 - mu0_sep", rep.delta, rep.mu0 as i64 - rep.mu0_sep as i64);
    r.check_with("delta >= 0", rep.delta, 0i64, rep.delta >= 0);
    Ok(())
}

fn p2_check(a: &Args, cfg: &Config, r: &mut Record) -> Result<()> {
    let f = ProjectiveFoliation::from_affine(&a.foliation(0)?)?;
    let x = ProjectiveCurve::from_affine(&a.poly(1))?;
    let rep = global_br_check(&f, &x, cfg)?;
    r.value("d", rep.d);
    r.value("r", rep.r);
    r.value("tau", rep.tau_global);
    for p in &rep.points {
        r.value(&format!("mu_br {}", p.point), p.value());
    }
    r.value("lhs", rep.lhs);
    r.value("rhs", rep.rhs);
    r.check("global sum", rep.lhs, rep.rhs);
    let bound = p2_rhs(rep.d, rep.r, 0);
    r.check_with("tjurina bound", rep.tau_global as i64, bound, rep.tjurina_bound_holds());
    let d = rep.d as u64;
    r.check("milnor sum", rep.mu_total, d * d + d + 1);
    Ok(())
}

fn dispatch(a: &Args, cfg: &Config, r: &mut Record) -> Result<()> {
    match a.d.name.as_str() {
        "invariants" => invariants(a, cfg, r),
        "br" => br(a, cfg, r, false),
        "br-rel" => br(a, cfg, r, true),
        "gsv" => {
            r.value("gsv", gsv_hyp(&a.form(0), &a.curve(1)?, cfg)?);
            Ok(())
        }
        "milnor" => {
            let mu = match a.binding(0) {
                Binding::Form(w) => milnor_form(w, cfg)?,
                _ => milnor_hyp(&a.curve(0)?, cfg)?,
            };
            r.value("mu", mu);
            Ok(())
        }
        "tjurina" => {
            r.value("tau", tjurina(&a.curve(0)?, cfg)?);
            Ok(())
        }
        "tang" => tang(a, cfg, r),
        "radial" => {
            r.value("rad", radial_index(&a.form(0), &a.curve(1)?, cfg)?);
            Ok(())
        }
        "euler" => {
            r.value("eu", euler_obstruction_curve(&a.form(0), &a.curve(1)?, cfg)?);
            Ok(())
        }
        "blowup" => blowup_directive(a, cfg, r),
        "blowup-verify" => blowup_verify(a, cfg, r),
        "pullback-order" => pullback(a, cfg, r),
        "gc-check" => gc_check(a, cfg, r),
        "p2-check" => p2_check(a, cfg, r),
        other => Err(Error::InvalidInput(format!("unknown directive {other}"))),
    }
}

/// Runs one directive; failures end up in the record.
pub fn run_directive(s: &Session, d: &Directive, cfg: &Config, timing: bool) -> Record {
    let mut r = Record::new(d.to_string());
    for name in &d.args {
        if !r.inputs.contains_key(name) {
            r.input(name, s.get(name).expect("checked by the parser").render());
        }
    }
    let start = Instant::now();
    if let Err(e) = dispatch(&Args { s, d }, cfg, &mut r) {
        r.values.clear();
        r.checks.clear();
        r.details.clear();
        r.fail(&e);
    }
    if timing {
        r.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    }
    r
}

/// Parses and runs a whole session, in order.
pub fn run_session(text: &str, cfg: &Config, timing: bool) -> std::result::Result<Vec<Record>, ParseError> {
    let s = parse_session(text)?;
    Ok(s.directives.iter().map(|d| run_directive(&s, d, cfg, timing)).collect())
}
