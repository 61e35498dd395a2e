//! One line per acceptance criterion; exact integer comparisons throughout.

use std::process::{Command, ExitCode};

use singinv::Config;
use singinv_cli::corpus::{run_corpus, SUITE_SEED};
use singinv_cli::suites::{branch_corpus, suite_a, suite_b, SUITE_A, SUITE_B};
use singinv_cli::{run_session, Record};

type Outcome = Result<String, String>;

fn session(text: &str) -> Result<Vec<Record>, String> {
    let rs = run_session(text, &Config::default(), false).map_err(|e| e.to_string())?;
    for r in &rs {
        if let Some(e) = &r.error {
            return Err(format!("{}: {}", r.directive, e.message));
        }
    }
    Ok(rs)
}

fn get(r: &Record, key: &str) -> Result<i64, String> {
    r.values
        .get(key)
        .and_then(|v| v.as_i64())
        .ok_or_else(|| format!("{}: no integer {key}", r.directive))
}

fn expect(r: &Record, pairs: &[(&str, i64)]) -> Result<(), String> {
    for &(k, want) in pairs {
        let got = get(r, k)?;
        if got != want {
            return Err(format!("{}: {k} = {got}, expected {want}", r.directive));
        }
    }
    Ok(())
}

fn checks_pass(r: &Record) -> Result<(), String> {
    match r.checks.iter().find(|c| !c.pass) {
        Some(c) => Err(format!("{}: {} ({} vs {})", r.directive, c.name, c.lhs, c.rhs)),
        None => Ok(()),
    }
}

fn criterion1() -> Outcome {
    let rs = session(
        "ring x, y, z\ncurve X = x^3 + y*z^2 + y^3 + x*y^4\nform w = z dx + x dy + y dz\ncompute invariants w X\n",
    )?;
    expect(&rs[0], &[("mu_br", 14), ("gsv", 21), ("mu0", 1), ("tau", 8)])?;
    checks_pass(&rs[0])?;
    let ledger = rs[0].details.first().cloned().unwrap_or_default();
    if ledger != "14 = 21 + 1 - 8" {
        return Err(format!("ledger {ledger}"));
    }
    Ok(ledger)
}

fn criterion2() -> Outcome {
    let mut seen = Vec::new();
    for (p, q) in [(2i64, 5i64), (7, 3), (11, 13)] {
        let rs = session(&format!(
            "ring x, y\ncurve X = y^{p} - x^{q}\nform w = x dy + y dx\ntheta T = [{p}*x, {q}*y; {p}*y^{}, {q}*x^{}]\n\
             compute invariants w X\ncompute br w X T\n",
            p - 1,
            q - 1
        ))?;
        expect(&rs[0], &[("mu0", 1), ("tang", p * q), ("tau", (p - 1) * (q - 1)), ("mu_br", p + q)])?;
        expect(&rs[1], &[("mu_br", p + q), ("mu_br_theta", p + q)])?;
        checks_pass(&rs[0])?;
        checks_pass(&rs[1])?;
        seen.push(format!("({p},{q}) -> {}", p + q));
    }
    Ok(seen.join(", "))
}

fn criterion3() -> Outcome {
    for form in ["(y^3 + y^2 - x*y) dx - (2*x*y^2 + x*y - x^2) dy", "(2*y^2 + x^3) dx - 2*x*y dy"] {
        let rs = session(&format!("ring x, y\ncurve X = y^7 - x^3\nform w = {form}\ncompute invariants w X\n"))?;
        expect(&rs[0], &[("mu_br", 17), ("mu0", 5), ("tang", 24), ("tau", 12), ("mu_br_rel", 12)])?;
        checks_pass(&rs[0])?;
        if get(&rs[0], "mu_br")? != get(&rs[0], "mu0")? + get(&rs[0], "mu_br_rel")? {
            return Err("17 != 5 + 12".into());
        }
    }
    Ok("both forms: 17 = 5 + 12".into())
}

fn criterion4() -> Outcome {
    for (p, q, want) in [(2, 5, 6), (11, 13, 23)] {
        let rs = session(&format!("ring x, y\ncurve X = y^{p} - x^{q}\nform w = x dy + y dx\ncompute br-rel w X\n"))?;
        expect(&rs[0], &[("mu_br_rel", want)])?;
        checks_pass(&rs[0])?;
    }
    Ok("6 and 23".into())
}

fn criterion5() -> Outcome {
    let cases = [
        (
            "2*x dy - 3*y dx",
            "y^2 - x^5",
            [("mu_br_0", 7), ("mu_br_q", 5), ("nu", 1), ("m", 2), ("sigma", 1), ("d", 1)],
            "7 = 5 + -1 + 2 + 1 + 1 - 1 = 7",
        ),
        (
            "(2*x^7 + 5*y^5) dx - x*y^2*(5*y^2 + 3*x^5) dy",
            "y^3 - x^7",
            [("mu_br_0", 56), ("mu_br_q", 9), ("nu", 5), ("m", 3), ("sigma", 0), ("d", 3)],
            "56 = 9 + 29 + 18 + 0 + 3 - 3 = 56",
        ),
    ];
    let mut ledgers = Vec::new();
    for (f, x, values, ledger) in cases {
        let rs = session(&format!("ring x, y\nform F = {f}\ncurve X = {x}\ncompute blowup-verify F X\n"))?;
        expect(&rs[0], &values)?;
        checks_pass(&rs[0])?;
        if !rs[0].details.iter().any(|d| d == ledger) {
            return Err(format!("ledger {:?}", rs[0].details));
        }
        ledgers.push(ledger);
    }
    Ok(ledgers.join("; "))
}

fn suite_summary(rep: &singinv_cli::suites::SuiteReport, names: &[&str], need: u64) -> Outcome {
    if !rep.errors.is_empty() {
        return Err(rep.errors[0].clone());
    }
    for &n in names {
        let t = rep.property(n);
        if t.holds != t.total {
            return Err(format!("{n}: {} of {} ({})", t.holds, t.total, t.first_failure.clone().unwrap_or_default()));
        }
        if t.total < need {
            return Err(format!("{n}: only {} cases", t.total));
        }
    }
    Ok(format!("{} cases, {} skipped, {} properties", rep.evaluated, rep.skipped, names.len()))
}

fn criterion6(rep: &singinv_cli::suites::SuiteReport) -> Outcome {
    suite_summary(rep, SUITE_A, 200)
}

fn criterion7(rep: &singinv_cli::suites::SuiteReport) -> Outcome {
    let curves = branch_corpus().len();
    if curves < 25 {
        return Err(format!("{curves} curves"));
    }
    suite_summary(rep, SUITE_B, 100).map(|s| format!("{curves} curves, {s}"))
}

fn criterion8(a: &singinv_cli::suites::SuiteReport, b: &singinv_cli::suites::SuiteReport) -> Outcome {
    let mut total = 0;
    for rep in [a, b] {
        let o = &rep.oracle;
        if !rep.oracle_passed() {
            return Err(format!(
                "suite {}: {} of {} agree, {} undecided {}",
                rep.name,
                o.agreed,
                o.compared,
                o.undecided,
                o.first_mismatch.clone().unwrap_or_default()
            ));
        }
        total += o.compared;
    }
    Ok(format!("{total} ideals"))
}

fn criterion9() -> Outcome {
    let rs = session(
        "ring x, y\nform P = y dx + x dy\ncurve L = x + y - 1\nform R = x dy - y dx\ncurve G = x + 2*y - 1\n\
         compute p2-check P L\ncompute p2-check R G\n",
    )?;
    expect(&rs[0], &[("lhs", 4), ("rhs", 4), ("d", 1), ("r", 1), ("tau", 0)])?;
    expect(&rs[1], &[("lhs", 1), ("rhs", 1), ("d", 0)])?;
    let out = run_corpus(Some("p2"), &Config::default(), false);
    let mut pairs = 0;
    for o in &out {
        for r in &o.records {
            if let Some(e) = &r.error {
                return Err(format!("{}: {}", r.directive, e.message));
            }
            if !r.checks.iter().any(|c| c.name == "tjurina bound") {
                return Err(format!("{}: no bound check", r.directive));
            }
            checks_pass(r)?;
            pairs += 1;
        }
    }
    Ok(format!("4 = 4, 1 = 1, bound on {pairs} pairs"))
}

fn criterion10() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_singinv"))
            .args(["corpus", "--json"])
            .output()
            .map_err(|e| e.to_string())
    };
    let (a, b) = (run()?, run()?);
    if a.status.code() != Some(0) {
        return Err(format!("corpus exit status {:?}", a.status.code()));
    }
    if a.stdout.is_empty() || a.stdout != b.stdout {
        return Err("outputs differ".into());
    }
    Ok(format!("{} bytes, {} records", a.stdout.len(), a.stdout.iter().filter(|&&c| c == b'\n').count()))
}

fn main() -> ExitCode {
    let cfg = Config::default();
    let a = suite_a(SUITE_SEED, 200, &cfg);
    let b = suite_b(SUITE_SEED, 8, &cfg);
    let results: Vec<(u32, &str, Outcome)> = vec![
        (1, "surface germ invariants", criterion1()),
        (2, "weighted cusps", criterion2()),
        (3, "two forms on y^7 - x^3", criterion3()),
        (4, "relative values", criterion4()),
        (5, "blow-up formulas", criterion5()),
        (6, "random plane suite", criterion6(&a)),
        (7, "parametrized branches", criterion7(&b)),
        (8, "oracle equivalence", criterion8(&a, &b)),
        (9, "projective plane", criterion9()),
        (10, "determinism", criterion10()),
    ];
    let mut failed = 0;
    for (n, what, r) in &results {
        match r {
            Ok(msg) => println!("criterion {n:>2} PASS  {what}: {msg}"),
            Err(msg) => {
                failed += 1;
                println!("criterion {n:>2} FAIL  {what}: {msg}");
            }
        }
    }
    println!("{} of {} criteria pass", results.len() - failed, results.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
