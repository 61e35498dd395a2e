//! Built-in example corpus with expected values.

use singinv::Config;

use crate::exec::run_session;
use crate::record::Record;
use crate::suites::{suite_a, suite_b};

pub const SUITE_SEED: u64 = 20_240_917;
pub const SUITE_A_CASES: u64 = 200;
pub const SUITE_B_PER_CURVE: u64 = 8;

enum Expect {
    /// Directive index, value key, expected integer.
    Value(usize, &'static str, i64),
    /// Directive index and a detail line that must appear verbatim.
    Detail(usize, &'static str),
}

enum Body {
    Session(String, Vec<Expect>),
    SuiteA,
    SuiteB,
}

pub struct Case {
    pub name: String,
    pub group: &'static str,
    body: Body,
}

#[derive(Clone, Debug)]
pub struct CaseOutcome {
    pub name: String,
    pub group: &'static str,
    pub records: Vec<Record>,
}

impl CaseOutcome {
    pub fn passed(&self) -> bool {
        !self.records.is_empty() && self.records.iter().all(Record::passed)
    }

    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        for r in &self.records {
            if let Some(e) = &r.error {
                out.push(format!("{}: {} error: {}", r.directive, e.kind, e.message));
            }
            for c in r.checks.iter().filter(|c| !c.pass) {
                out.push(format!("{}: {} ({} vs {})", r.directive, c.name, c.lhs, c.rhs));
            }
        }
        out
    }
}

const CUBIC: &str = "\
ring x, y, z
curve X = x^3 + y*z^2 + y^3 + x*y^4
form w = z dx + x dy + y dz
theta T = [-4/3*x^2*y - x, -2/3*x*y^2 - y, -5/3*x*y*z - z; \
z^2 + 3*y^2 + 4*x*y^3, -3*x^2 - y^4, 0; \
2*y*z, 0, -3*x^2 - y^4; \
0, 2*y*z, -z^2 - 3*y^2 - 4*x*y^3]
compute invariants w X
compute br w X T
";

fn weighted(p: i64, q: i64) -> Case {
    let text = format!(
        "ring x, y\ncurve X = y^{p} - x^{q}\nform w = x dy + y dx\n\
         theta T = [{p}*x, {q}*y; {p}*y^{}, {q}*x^{}]\n\
         compute invariants w X\ncompute br w X T\ncompute br-rel w X T\n",
        p - 1,
        q - 1
    );
    // the pairs with a quoted relative value get it as well
    let mut ex = vec![
        Expect::Value(0, "mu0", 1),
        Expect::Value(0, "tang", p * q),
        Expect::Value(0, "tau", (p - 1) * (q - 1)),
        Expect::Value(0, "mu_br", p + q),
        Expect::Value(1, "mu_br_theta", p + q),
    ];
    match (p, q) {
        (2, 5) => ex.push(Expect::Value(2, "mu_br_rel", 6)),
        (11, 13) => ex.push(Expect::Value(2, "mu_br_rel", 23)),
        _ => {}
    }
    Case {
        name: format!("weighted-{p}-{q}"),
        group: "invariants",
        body: Body::Session(text, ex),
    }
}

fn septic_pair(name: &str, form: &str) -> Case {
    let text = format!(
        "ring x, y\ncurve X = y^7 - x^3\nform w = {form}\n\
         compute invariants w X\ncompute euler w X\ncompute blowup w\n"
    );
    Case {
        name: name.to_string(),
        group: "invariants",
        body: Body::Session(
            text,
            vec![
                Expect::Value(0, "mu_br", 17),
                Expect::Value(0, "mu0", 5),
                Expect::Value(0, "tang", 24),
                Expect::Value(0, "tau", 12),
                Expect::Value(0, "mu_br_rel", 12),
                Expect::Value(1, "eu", 10),
            ],
        ),
    }
}

const P2_PAIRS: &[(&str, &str)] = &[
    ("y dx + x dy", "x + y - 1"),
    ("y dx + x dy", "x + 2*y - 1"),
    ("y dx + x dy", "y^2 - x^3"),
    ("y dx + x dy", "y - x^2"),
    ("y dx + x dy", "y - 2"),
    ("x dy - y dx", "x + y - 1"),
    ("x dy - y dx", "x + 2*y - 1"),
    ("x dy - y dx", "y^2 - x^3"),
    ("x dy - y dx", "y - x^2"),
    ("x dy - y dx", "y^2 - x^2 - x^3"),
    ("x dy - y dx", "x*y - 1"),
    ("x dy - 2*y dx", "x + y - 1"),
    ("x dy - 2*y dx", "y^2 - x^3"),
    ("x dy - 2*y dx", "x*y - 1"),
    ("(x^2 - 1) dy - y dx", "x + 2*y - 1"),
    ("(x^2 - 1) dy - y dx", "x^2 + y^2 - 1"),
    ("(x^2 - 1) dy - y dx", "x^2 - 2*y^2 - 1"),
    ("y dx - (x + y^2) dy", "y - 2"),
    ("(y - x^2) dx + x dy", "y^2 - x^3"),
    ("(y - x^2) dx + x dy", "y - x^2"),
    ("(y - x^2) dx + x dy", "x*y - 1"),
    ("x*(1 - x) dy + y dx", "x + y - 1"),
    ("x*(1 - x) dy + y dx", "y - x^2"),
    ("2*x dy + 3*y dx", "y^2 - x^3"),
    ("2*x dy + 3*y dx", "x*y - 1"),
    ("dx + x^2 dy", "x + y - 1"),
];

fn p2_corpus() -> Case {
    let mut text = String::from("ring x, y\n");
    for (i, (f, x)) in P2_PAIRS.iter().enumerate() {
        text += &format!("form F{i} = {f}\ncurve C{i} = {x}\ncompute p2-check F{i} C{i}\n");
    }
    Case {
        name: "p2-pairs".into(),
        group: "p2",
        body: Body::Session(text, Vec::new()),
    }
}

pub fn cases() -> Vec<Case> {
    let mut out = vec![Case {
        name: "cubic-surface".into(),
        group: "invariants",
        body: Body::Session(
            CUBIC.into(),
            vec![
                Expect::Value(0, "mu_br", 14),
                Expect::Value(0, "gsv", 21),
                Expect::Value(0, "mu0", 1),
                Expect::Value(0, "tau", 8),
                Expect::Detail(0, "14 = 21 + 1 - 8"),
                Expect::Value(1, "mu_br_theta", 14),
            ],
        ),
    }];
    for (p, q) in [(2, 5), (7, 3), (11, 13)] {
        out.push(weighted(p, q));
    }
    out.push(septic_pair("septic-omega", "(y^3 + y^2 - x*y) dx - (2*x*y^2 + x*y - x^2) dy"));
    out.push(septic_pair("septic-eta", "(2*y^2 + x^3) dx - 2*x*y dy"));
    out.push(Case {
        name: "blowup-linear".into(),
        group: "blowup",
        body: Body::Session(
            "ring x, y\nform F = 2*x dy - 3*y dx\ncurve X = y^2 - x^5\ncompute blowup-verify F X\ncompute blowup F\n".into(),
            vec![
                Expect::Value(0, "mu_br_0", 7),
                Expect::Value(0, "mu_br_q", 5),
                Expect::Value(0, "nu", 1),
                Expect::Value(0, "m", 2),
                Expect::Value(0, "sigma", 1),
                Expect::Value(0, "d", 1),
                Expect::Detail(0, "7 = 5 + -1 + 2 + 1 + 1 - 1 = 7"),
            ],
        ),
    });
    out.push(Case {
        name: "blowup-order-five".into(),
        group: "blowup",
        body: Body::Session(
            "ring x, y\nform F = (2*x^7 + 5*y^5) dx - x*y^2*(5*y^2 + 3*x^5) dy\ncurve X = y^3 - x^7\n\
             compute blowup-verify F X\n"
                .into(),
            vec![
                Expect::Value(0, "mu_br_0", 56),
                Expect::Value(0, "mu_br_q", 9),
                Expect::Value(0, "nu", 5),
                Expect::Value(0, "m", 3),
                Expect::Value(0, "sigma", 0),
                Expect::Value(0, "d", 3),
                Expect::Detail(0, "56 = 9 + 29 + 18 + 0 + 3 - 3 = 56"),
            ],
        ),
    });
    out.push(Case {
        name: "pullback-cusp".into(),
        group: "branches",
        body: Body::Session(
            "ring x, y\nform w = x dy + y dx\nparam g = (t^2, t^5)\ncurve X = y^2 - x^5\n\
             compute pullback-order w g X\n"
                .into(),
            vec![Expect::Value(0, "ord", 6), Expect::Value(0, "mu_x", 4)],
        ),
    });
    out.push(Case {
        name: "generalized-curves".into(),
        group: "blowup",
        body: Body::Session(
            "ring x, y\nform E = -3*x^2 dx + 2*y dy\ncurve S = y^2 - x^3\ncurve L = y - x\n\
             form R = x dy + 2*y dx\ncurve N = x*y\ncurve X = y^2 - x^5\n\
             compute gc-check E S L\ncompute gc-check R N X\n"
                .into(),
            vec![Expect::Value(0, "delta", 0), Expect::Value(1, "delta", 0), Expect::Value(1, "mu0", 1)],
        ),
    });
    out.push(Case {
        name: "p2-pencil-line".into(),
        group: "p2",
        body: Body::Session(
            "ring x, y\nform F = y dx + x dy\ncurve X = x + y - 1\ncompute p2-check F X\n".into(),
            vec![Expect::Value(0, "lhs", 4), Expect::Value(0, "rhs", 4), Expect::Value(0, "d", 1)],
        ),
    });
    out.push(Case {
        name: "p2-radial-line".into(),
        group: "p2",
        body: Body::Session(
            "ring x, y\nform F = x dy - y dx\ncurve X = x + 2*y - 1\ncompute p2-check F X\n".into(),
            vec![Expect::Value(0, "lhs", 1), Expect::Value(0, "rhs", 1), Expect::Value(0, "d", 0)],
        ),
    });
    out.push(p2_corpus());
    out.push(Case {
        name: "suite-a".into(),
        group: "suites",
        body: Body::SuiteA,
    });
    out.push(Case {
        name: "suite-b".into(),
        group: "suites",
        body: Body::SuiteB,
    });
    out
}

fn apply(records: &mut [Record], ex: &[Expect], perturb: bool) {
    let bump = if perturb { 1 } else { 0 };
    for e in ex {
        match *e {
            Expect::Value(i, key, want) => {
                let r = &mut records[i];
                let got = r.values.get(key).cloned().unwrap_or(serde_json::Value::Null);
                r.check(&format!("expected {key}"), got, want + bump);
            }
            Expect::Detail(i, line) => {
                let r = &mut records[i];
                let found = r.details.iter().any(|d| d == line);
                r.check_with(
                    "expected ledger",
                    line.to_string(),
                    r.details.last().cloned().unwrap_or_default(),
                    found && !perturb,
                );
            }
        }
    }
}

pub fn run_case(c: &Case, cfg: &Config, perturb: bool) -> CaseOutcome {
    let records = match &c.body {
        Body::Session(text, ex) => match run_session(text, cfg, false) {
            Ok(mut rs) => {
                apply(&mut rs, ex, perturb);
                rs
            }
            Err(e) => {
                let mut r = Record::new(format!("session {}", c.name));
                r.fail(&singinv::Error::InvalidInput(e.to_string()));
                vec![r]
            }
        },
        Body::SuiteA => vec![suite_a(SUITE_SEED, SUITE_A_CASES, cfg).record()],
        Body::SuiteB => vec![suite_b(SUITE_SEED, SUITE_B_PER_CURVE, cfg).record()],
    };
    let mut records = records;
    for r in &mut records {
        r.case = Some(c.name.clone());
    }
    CaseOutcome {
        name: c.name.clone(),
        group: c.group,
        records,
    }
}

/// Runs every case whose name or group contains `filter`.
pub fn run_corpus(filter: Option<&str>, cfg: &Config, perturb: bool) -> Vec<CaseOutcome> {
    cases()
        .iter()
        .filter(|c| filter.is_none_or(|f| c.name.contains(f) || c.group.contains(f)))
        .map(|c| run_case(c, cfg, perturb))
        .collect()
}

/// One line per case.
pub fn matrix(outcomes: &[CaseOutcome]) -> String {
    let w = outcomes.iter().map(|o| o.name.len()).max().unwrap_or(0);
    let mut out = String::new();
    for o in outcomes {
        let checks: usize = o.records.iter().map(|r| r.checks.len()).sum();
        out += &format!(
            "{:<w$}  {:<10}  {}  {checks} checks\n",
            o.name,
            o.group,
            if o.passed() { "pass" } else { "FAIL" }
        );
        for f in o.failures() {
            out += &format!("    {f}\n");
        }
    }
    out
}
