use singinv::invariants::*;
use singinv::local::colength;
use singinv::{Colength, Config, Error, MPoly, OneForm, Ring};

fn xyz() -> Ring {
    Ring::new(["x", "y", "z"]).unwrap()
}

fn xy() -> Ring {
    Ring::new(["x", "y"]).unwrap()
}

fn fin(n: u64) -> Colength {
    Colength::Finite(n)
}

const PHI3: &str = "x^3 + y*z^2 + y^3 + x*y^4";
const OMEGA7: &str = "(y^3 + y^2 - x*y) dx - (2*x*y^2 + x*y - x^2) dy";
const ETA: &str = "(2*y^2 + x^3) dx - 2*x*y dy";

#[test]
fn three_variable_example() {
    let r = xyz();
    let cfg = Config::default();
    let x = HypersurfaceGerm::parse(PHI3, &r).unwrap();
    let w = OneForm::parse("z dx + x dy + y dz", &r).unwrap();
    assert!(!is_invariant(&w, &x).unwrap());
    assert_eq!(milnor_form(&w, &cfg).unwrap(), fin(1));
    assert_eq!(gsv_hyp(&w, &x, &cfg).unwrap(), fin(21));
    assert_eq!(tjurina(&x, &cfg).unwrap(), fin(8));
    assert_eq!(bruce_roberts(&w, &x, &cfg).unwrap(), 14);
    assert_eq!(bruce_roberts_trivial_direct(&w, &x, &cfg).unwrap(), 14);
    let triv = trivial_theta_ideal(&w, &x).unwrap();
    assert_eq!(colength(&triv, cfg.max_steps).unwrap(), fin(22));
    assert_eq!(gsv_icis(&w, &[x.phi().clone()], &cfg).unwrap(), fin(21));
}

#[test]
fn three_variable_wedge() {
    let r = xyz();
    let x = HypersurfaceGerm::parse(PHI3, &r).unwrap();
    let w = OneForm::parse("z dx + x dy + y dz", &r).unwrap();
    let c = w.wedge_coeffs(x.phi()).unwrap();
    // coefficients of dx^dy, dx^dz, dy^dz in w ^ dphi
    assert_eq!(c[0], r.parse("z^3 + 3*y^2*z + 4*x*y^3*z - 3*x^3 - x*y^4").unwrap());
    assert_eq!(c[1], r.parse("2*y*z^2 - 3*x^2*y - y^5").unwrap());
    assert_eq!(c[2], r.parse("2*x*y*z - y*z^2 - 3*y^3 - 4*x*y^4").unwrap());
}

fn hamiltonians(phi: &MPoly) -> Vec<Vec<MPoly>> {
    let g = phi.gradient();
    let n = g.len();
    let zero = MPoly::zero(phi.ring());
    let mut out = Vec::new();
    for j in 0..n {
        for k in j + 1..n {
            let mut v = vec![zero.clone(); n];
            v[j] = g[k].clone();
            v[k] = -&g[j];
            out.push(v);
        }
    }
    out
}

#[test]
fn three_variable_user_theta() {
    let r = xyz();
    let cfg = Config::default();
    let x = HypersurfaceGerm::parse(PHI3, &r).unwrap();
    let w = OneForm::parse("z dx + x dy + y dz", &r).unwrap();
    let p = |s: &str| r.parse(s).unwrap();
    let euler_like = vec![p("-4/3*x^2*y - x"), p("-2/3*x*y^2 - y"), p("-5/3*x*y*z - z")];
    let d = OneForm::exact(x.phi());
    // ξ(φ) = (-3 - 4xy) φ with a unit factor, so ξ with the Hamiltonian fields generates Θ
    assert_eq!(
        d.evaluate(&euler_like).unwrap().exact_divide(x.phi()).unwrap(),
        Some(p("-3 - 4*x*y"))
    );
    let mut fields = vec![euler_like];
    fields.extend(hamiltonians(x.phi()));
    let th = ThetaGenerators::new(fields, &x).unwrap();
    assert_eq!(bruce_roberts_user_theta(&w, &th, &cfg).unwrap(), fin(14));
}

#[test]
fn listed_generators_fit_neighbouring_germ() {
    // the first four printed fields are tangent to x^3 + yz^2 + y^3 + xy^3,
    // not to the germ carrying y^4
    let r = xyz();
    let cfg = Config::default();
    let p = |s: &str| r.parse(s).unwrap();
    let listed = vec![
        vec![p("3*x*y^2 + 3*y^2 + z^2"), p("-3*x^2 - y^3"), p("0")],
        vec![p("2*z^3"), p("-6*x^2*z"), p("9*x^3*y + 9*x^2*y - y^2*z^2")],
        vec![p("2*y*z"), p("0"), p("-3*x^2 - y^3")],
        vec![p("0"), p("2*y*z"), p("-3*x*y^2 - 3*y^2 - z^2")],
    ];
    let x4 = HypersurfaceGerm::parse(PHI3, &r).unwrap();
    assert_eq!(ThetaGenerators::new(listed.clone(), &x4), Err(Error::GeneratorNotTangent(1)));
    let x3 = HypersurfaceGerm::parse("x^3 + y*z^2 + y^3 + x*y^3", &r).unwrap();
    assert!(ThetaGenerators::new(listed, &x3).is_ok());
    let w = OneForm::parse("z dx + x dy + y dz", &r).unwrap();
    assert_eq!(bruce_roberts(&w, &x3, &cfg).unwrap(), 14);
}

#[test]
fn weighted_homogeneous_family() {
    let r = xy();
    let cfg = Config::default();
    let w = OneForm::parse("x dy + y dx", &r).unwrap();
    for (p, q) in [(2u64, 5u64), (7, 3), (11, 13), (3, 4), (2, 3)] {
        let x = HypersurfaceGerm::parse(&format!("y^{p} - x^{q}"), &r).unwrap();
        assert_eq!(milnor_form(&w, &cfg).unwrap(), fin(1));
        assert_eq!(gsv_hyp(&w, &x, &cfg).unwrap(), fin(p * q));
        assert_eq!(tjurina(&x, &cfg).unwrap(), fin((p - 1) * (q - 1)));
        assert_eq!(milnor_hyp(&x, &cfg).unwrap(), fin((p - 1) * (q - 1)));
        assert_eq!(bruce_roberts(&w, &x, &cfg).unwrap(), p + q);
        assert_eq!(bruce_roberts_trivial_direct(&w, &x, &cfg).unwrap(), p + q);
        assert_eq!(br_relative(&w, &x, &cfg).unwrap(), p + q - 1);
        assert_eq!(br_relative_trivial_direct(&w, &x, &cfg).unwrap(), p + q - 1);
        assert_eq!(radial_index(&w, &x, &cfg).unwrap(), (p + q - 1) as i64);
        // y^p - x^q has weights (p, q)
        let th = ThetaGenerators::quasi_homogeneous(&x, [p as i64, q as i64]).unwrap();
        assert_eq!(bruce_roberts_user_theta(&w, &th, &cfg).unwrap(), fin(p + q));
        assert_eq!(br_relative_user_theta(&w, &th, &x, &cfg).unwrap(), fin(p + q - 1));
    }
}

#[test]
fn relative_values() {
    let r = xy();
    let cfg = Config::default();
    let w = OneForm::parse("x dy + y dx", &r).unwrap();
    let x = HypersurfaceGerm::parse("y^2 - x^5", &r).unwrap();
    assert_eq!(br_relative(&w, &x, &cfg).unwrap(), 6);
    let x = HypersurfaceGerm::parse("y^11 - x^13", &r).unwrap();
    assert_eq!(br_relative(&w, &x, &cfg).unwrap(), 23);
}

#[test]
fn two_forms_on_same_cusp() {
    let r = xy();
    let cfg = Config::default();
    let x = HypersurfaceGerm::parse("y^7 - x^3", &r).unwrap();
    for text in [OMEGA7, ETA] {
        let w = OneForm::parse(text, &r).unwrap();
        assert_eq!(milnor_form(&w, &cfg).unwrap(), fin(5), "{text}");
        assert_eq!(gsv_hyp(&w, &x, &cfg).unwrap(), fin(24), "{text}");
        assert_eq!(tjurina(&x, &cfg).unwrap(), fin(12));
        assert_eq!(bruce_roberts(&w, &x, &cfg).unwrap(), 17, "{text}");
        assert_eq!(br_relative(&w, &x, &cfg).unwrap(), 12, "{text}");
        assert_eq!(euler_obstruction_curve(&w, &x, &cfg).unwrap(), 10, "{text}");
    }
}

#[test]
fn euler_obstruction_values() {
    let r = xy();
    let cfg = Config::default();
    let w = OneForm::parse("x dy + y dx", &r).unwrap();
    let x = HypersurfaceGerm::parse("y^2 - x^5", &r).unwrap();
    assert_eq!(euler_obstruction_curve(&w, &x, &cfg).unwrap(), 5);
    let r3 = xyz();
    let x3 = HypersurfaceGerm::parse(PHI3, &r3).unwrap();
    let w3 = OneForm::parse("z dx + x dy + y dz", &r3).unwrap();
    assert_eq!(
        euler_obstruction_curve(&w3, &x3, &cfg),
        Err(Error::UnsupportedDimension(3))
    );
}

#[test]
fn complete_intersection_pairs() {
    let r = xy();
    let cfg = Config::default();
    for (p, q) in [(2u64, 3u64), (2, 5), (3, 4), (5, 7)] {
        let x = HypersurfaceGerm::parse(&format!("y^{p} - x^{q}"), &r).unwrap();
        assert_eq!(icis_pair_milnor(&x, &r.parse("x").unwrap(), &cfg).unwrap(), p - 1);
    }
    let x = HypersurfaceGerm::parse("y^2 - x^3", &r).unwrap();
    assert_eq!(icis_pair_milnor(&x, &r.parse("y").unwrap(), &cfg).unwrap(), 2);
    assert_eq!(icis_pair_milnor(&x, &r.parse("x + 3*y").unwrap(), &cfg).unwrap(), 1);
}

#[test]
fn function_routes_agree() {
    let r = xy();
    let cfg = Config::default();
    let cases = [("x", "y^2 - x^3"), ("x^2 + y^2", "y^2 - x^5"), ("x*y + y^3", "y^3 - x^4")];
    for (f, phi) in cases {
        let x = HypersurfaceGerm::parse(phi, &r).unwrap();
        let rep = br_function(&r.parse(f).unwrap(), &x, &cfg).unwrap();
        assert_eq!(rep.via_form, rep.via_parts, "{f} on {phi}");
    }
    let x = HypersurfaceGerm::parse("y^2 - x^3", &r).unwrap();
    let rep = br_function(&r.parse("x").unwrap(), &x, &cfg).unwrap();
    assert_eq!((rep.mu0_f, rep.mu0_x, rep.mu_pair, rep.tau), (0, 2, 1, 2));
    assert_eq!(rep.via_form, 1);
}

#[test]
fn report_is_consistent() {
    let r = xy();
    let cfg = Config::default();
    let x = HypersurfaceGerm::parse("y^7 - x^3", &r).unwrap();
    let w = OneForm::parse(OMEGA7, &r).unwrap();
    let rep = InvariantReport::compute(&w, &x, &cfg).unwrap();
    assert_eq!(rep.mu_br, Some(17));
    assert_eq!(rep.mu_br_rel, Some(12));
    assert_eq!(rep.tang, Some(fin(24)));
    assert_eq!(rep.rad, Some(12));
    assert_eq!(rep.eu, Some(10));
    let w = OneForm::exact(x.phi());
    let rep = InvariantReport::compute(&w, &x, &cfg).unwrap();
    assert!(rep.invariant);
    assert_eq!(rep.gsv, Colength::Infinite);
    assert_eq!(rep.mu_br, None);
}
