use proptest::prelude::*;
use proptest::test_runner::RngAlgorithm;
use singinv::foliation::{order_pullback, tangency_order, PlaneFoliation};
use singinv::invariants::*;
use singinv::local::{colength, colength_oracle_auto, OracleValue};
use singinv::poly::{rat, Parametrization};
use singinv::{Colength, Config, Error, LocalIdeal, MPoly, Monomial, OneForm, Ring};

fn plane() -> Ring {
    Ring::new(["x", "y"]).unwrap()
}

/// Monomials of degree 1 to 4 in two variables.
fn low_monomials() -> Vec<[u32; 2]> {
    let mut v = Vec::new();
    for d in 1..=4u32 {
        for i in 0..=d {
            v.push([i, d - i]);
        }
    }
    v
}

fn poly_from(r: &Ring, coeffs: &[i64]) -> MPoly {
    MPoly::from_terms(
        r,
        low_monomials()
            .iter()
            .zip(coeffs)
            .map(|(m, &c)| (Monomial::from_exponents(m), rat(c))),
    )
}

fn coeffs() -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec(prop_oneof![3 => Just(0i64), 2 => -3i64..=3], 14)
}

fn cfg() -> ProptestConfig {
    ProptestConfig {
        cases: 64,
        rng_algorithm: RngAlgorithm::ChaCha,
        ..ProptestConfig::default()
    }
}

fn agrees_with_oracle(ideal: &LocalIdeal, c: Colength) -> bool {
    match c {
        Colength::Finite(n) => match colength_oracle_auto(ideal, 64) {
            OracleValue::Value(v) => v == n,
            // the oracle may run out of room on large colengths
            OracleValue::ExceedsBound => n > 60,
        },
        Colength::Infinite => true,
    }
}

fn skip(e: &Error) -> bool {
    matches!(e, Error::InvariantHypersurface | Error::NonIsolated(_))
}

proptest! {
    #![proptest_config(cfg())]

    #[test]
    fn bruce_roberts_routes(a in coeffs(), b in coeffs(), p in coeffs()) {
        let r = plane();
        let conf = Config::default();
        let (a, b, phi) = (poly_from(&r, &a), poly_from(&r, &b), poly_from(&r, &p));
        prop_assume!(!phi.is_zero() && !(a.is_zero() && b.is_zero()));
        let Ok(x) = HypersurfaceGerm::new(phi) else { return Ok(()); };
        let w = OneForm::new(vec![a, b]).unwrap();
        let br = match bruce_roberts(&w, &x, &conf) {
            Ok(v) => v,
            Err(e) if skip(&e) => return Ok(()),
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        };
        let gsv = gsv_hyp(&w, &x, &conf).unwrap().finite().unwrap();
        let mu0 = milnor_form(&w, &conf).unwrap().finite().unwrap();
        let tau = tjurina(&x, &conf).unwrap().finite().unwrap();
        prop_assert_eq!(br, gsv + mu0 - tau);
        prop_assert_eq!(bruce_roberts_trivial_direct(&w, &x, &conf).unwrap(), br);
        let rel = br_relative(&w, &x, &conf).unwrap();
        prop_assert_eq!(br, mu0 + rel);
        prop_assert_eq!(br_relative_trivial_direct(&w, &x, &conf).unwrap(), rel);
        let triv = colength(&trivial_theta_ideal(&w, &x).unwrap(), conf.max_steps).unwrap();
        prop_assert_eq!(triv, Colength::Finite(gsv + mu0));
        let f = PlaneFoliation::from_form(&w).unwrap();
        if f.form() == w {
            prop_assert_eq!(tangency_order(&f, &x, &conf).unwrap(), Colength::Finite(gsv));
            prop_assert!(mu0 >= milnor_lower_bound(f.nu()));
        }
        let m = x.multiplicity() as i64;
        let mux = milnor_hyp(&x, &conf).unwrap().finite().unwrap() as i64;
        let eu = euler_obstruction_curve(&w, &x, &conf).unwrap();
        prop_assert_eq!(br as i64 - mu0 as i64 + tau as i64 - mux - eu, m - 1);
        for (name, ideal) in ideals_for(&w, &x).unwrap() {
            let c = colength(&ideal, conf.max_steps).unwrap();
            prop_assert!(agrees_with_oracle(&ideal, c), "{} of {}", name, ideal);
        }
    }

    #[test]
    fn colength_additivity(f in coeffs(), g in coeffs(), p1 in coeffs(), p2 in coeffs()) {
        let r = plane();
        let conf = Config::default();
        let (f, g, p1, p2) = (poly_from(&r, &f), poly_from(&r, &g), poly_from(&r, &p1), poly_from(&r, &p2));
        prop_assume!(!f.is_zero() && !g.is_zero());
        prop_assume!(singinv::poly::gcd(&f, &g).is_constant());
        let col = |gens: Vec<MPoly>| colength(&LocalIdeal::new(&r, gens).unwrap(), conf.max_steps).unwrap();
        let lhs = col(vec![f.clone(), &g * &p1, &g * &p2]);
        let a = col(vec![f.clone(), p1, p2]);
        let b = col(vec![f, g]);
        if let (Some(a), Some(b)) = (a.finite(), b.finite()) {
            prop_assert_eq!(lhs, Colength::Finite(a + b));
        }
    }

    #[test]
    fn parametrized_branches(p in 2u32..=6, q in 2u32..=9, a in coeffs(), b in coeffs()) {
        prop_assume!(num_integer::gcd(p, q) == 1);
        let r = plane();
        let conf = Config::default();
        let x = HypersurfaceGerm::parse(&format!("y^{p} - x^{q}"), &r).unwrap();
        let par = Parametrization::parse(&[&format!("t^{p}"), &format!("t^{q}")], "t").unwrap();
        prop_assert!(par.on_curve(x.phi()).unwrap());
        let (a, b) = (poly_from(&r, &a), poly_from(&r, &b));
        prop_assume!(!(a.is_zero() && b.is_zero()));
        let Ok(f) = PlaneFoliation::saturate(a, b) else { return Ok(()); };
        let tang = match tangency_order(&f, &x, &conf) {
            Ok(t) => t.finite().unwrap(),
            Err(Error::InvariantHypersurface) => return Ok(()),
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        };
        let ord = order_pullback(&f.form(), &par, &conf).unwrap() as u64;
        let mu = milnor_hyp(&x, &conf).unwrap().finite().unwrap();
        prop_assert_eq!(tang, ord + mu);
    }
}

const BRANCHES: [(&str, [&str; 2]); 5] = [
    ("(y^2 - x^3)^2 - 4*x^5*y - x^7", ["t^4", "t^6 + t^7"]),
    ("(y - x^3)^2 - x^5", ["t^2", "t^5 + t^6"]),
    ("y^2 - x*(1 + x)^2", ["t^2", "t + t^3"]),
    ("y^2 - x^3*(1 + x)^2", ["t^2", "t^3 + t^5"]),
    ("y^3 - x^4*(1 + x)^3", ["t^3", "t^4 + t^7"]),
];

const FORMS: [&str; 6] = [
    "(y + x^2) dx + (x - y^3) dy",
    "-2*y dx + x dy",
    "x dx + y dy",
    "(x^2 + y) dx + (x + 3*y^2) dy",
    "(3*x + x*y) dx + (-2*y + x^3) dy",
    "(y^2 - x) dx + (x*y + y) dy",
];

#[test]
fn listed_branches() {
    let r = plane();
    let conf = Config::default();
    let mut curves: Vec<(String, Vec<String>)> = BRANCHES
        .iter()
        .map(|(c, p)| (c.to_string(), p.iter().map(|s| s.to_string()).collect()))
        .collect();
    for p in 2..=7u32 {
        for q in p + 1..=11u32 {
            if num_integer::gcd(p, q) == 1 && curves.len() < 25 {
                curves.push((format!("y^{p} - x^{q}"), vec![format!("t^{p}"), format!("t^{q}")]));
            }
        }
    }
    assert_eq!(curves.len(), 25);
    let mut checked = 0;
    for (c, p) in &curves {
        let x = HypersurfaceGerm::parse(c, &r).unwrap();
        let par = Parametrization::parse(&[&p[0], &p[1]], "t").unwrap();
        assert!(par.on_curve(x.phi()).unwrap(), "{c}");
        let mu = milnor_hyp(&x, &conf).unwrap().finite().unwrap();
        for w in FORMS {
            let f = PlaneFoliation::parse(w, &r).unwrap();
            let Ok(t) = tangency_order(&f, &x, &conf) else { continue };
            let ord = order_pullback(&f.form(), &par, &conf).unwrap();
            assert_eq!(t.finite().unwrap(), ord as u64 + mu, "{w} on {c}");
            assert_eq!(radial_index(&f.form(), &x, &conf).unwrap(), ord as i64, "{w} on {c}");
            checked += 1;
        }
    }
    assert!(checked >= 120, "{checked}");
}
