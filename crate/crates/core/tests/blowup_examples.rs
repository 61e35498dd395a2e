use singinv::foliation::*;
use singinv::invariants::HypersurfaceGerm;
use singinv::{Config, Ring};

fn plane() -> Ring {
    Ring::new(["x", "y"]).unwrap()
}

#[test]
fn non_dicritical_example() {
    let r = plane();
    let cfg = Config::default();
    let f = PlaneFoliation::parse("2*x dy - 3*y dx", &r).unwrap();
    let x = HypersurfaceGerm::parse("y^2 - x^5", &r).unwrap();
    let b = blowup(&f).unwrap();
    assert_eq!(b.chart1.to_string(), "-t dx + 2*x dt");
    assert_eq!(b.chart2.to_string(), "-3*y du - u dy");
    let c = strict_transform_curve(&x).unwrap();
    assert_eq!(c.chart1.to_string(), "t^2 - x^3");
    let rep = verify_blowup_formula(&f, &x, &cfg).unwrap();
    assert!(!rep.dicritical);
    assert_eq!(
        (rep.mu_br_0, rep.mu_br_q, rep.nu, rep.m, rep.sigma, rep.d),
        (7, 5, 1, 2, 1, 1)
    );
    assert!(rep.holds() && rep.relative_holds() && rep.milnor_holds());
    assert_eq!(rep.ledger(), "7 = 5 + -1 + 2 + 1 + 1 - 1 = 7");
}

#[test]
fn dicritical_example() {
    let r = plane();
    let cfg = Config::default();
    let f = PlaneFoliation::parse("(2*x^7 + 5*y^5) dx - x*y^2*(5*y^2 + 3*x^5) dy", &r).unwrap();
    let x = HypersurfaceGerm::parse("y^3 - x^7", &r).unwrap();
    let b = blowup(&f).unwrap();
    assert!(b.dicritical);
    assert_eq!((b.nu, b.divisor_power), (5, 6));
    let exact = PlaneFoliation::parse("(2*x - 3*t^3*x^2) dx - (5*t^4 + 3*t^2*x^3) dt", b.chart1.ring()).unwrap();
    assert!(b.chart1.same_as(&exact));
    assert!(b.charts_agree().unwrap());
    let c = strict_transform_curve(&x).unwrap();
    assert_eq!(c.chart1.to_string(), "t^3 - x^4");
    let rep = verify_blowup_formula(&f, &x, &cfg).unwrap();
    assert_eq!(
        (rep.mu_br_0, rep.mu_br_q, rep.nu, rep.m, rep.sigma, rep.d),
        (56, 9, 5, 3, 0, 3)
    );
    assert_eq!((rep.nu_term(), rep.order_term(), rep.half_m()), (29, 18, 3));
    assert!(rep.holds() && rep.relative_holds() && rep.milnor_holds());
    assert_eq!(rep.mu0, 33);
}

#[test]
fn printed_transform_is_a_different_foliation() {
    // the printed chart 1 form belongs to the blow-up of another form
    let r = plane();
    let f = PlaneFoliation::parse("(2*x^7 + 5*y^5) dx - x*y^2*(5*y^2 + 3*x^5) dy", &r).unwrap();
    let b = blowup(&f).unwrap();
    let printed = PlaneFoliation::parse("-t^3 dx - (2*x*t^2 + t - 1) dt", b.chart1.ring()).unwrap();
    assert!(!b.chart1.same_as(&printed));
    let omega7 = PlaneFoliation::parse("(y^3 + y^2 - x*y) dx - (2*x*y^2 + x*y - x^2) dy", &r).unwrap();
    let bs = blowup(&omega7).unwrap();
    assert!(bs.chart1.same_as(&printed));
}

#[test]
fn charts_agree_on_small_forms() {
    let r = plane();
    for text in [
        "x dy + y dx",
        "(x^2 + y^3) dx + (x*y - y^2) dy",
        "y^2 dx + x^3 dy",
        "(x + y) dx + (x - 2*y) dy",
    ] {
        let f = PlaneFoliation::parse(text, &r).unwrap();
        let b = blowup(&f).unwrap();
        assert!(b.charts_agree().unwrap(), "{text}");
        assert!(b.divisor_power == b.nu || b.divisor_power == b.nu + 1);
    }
}
