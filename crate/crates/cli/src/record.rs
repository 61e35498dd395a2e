//! Result records and their two renderings.

use serde::Serialize;
use serde_json::{Map, Value};
use singinv::{Colength, Error, ErrorKind};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub lhs: Value,
    pub rhs: Value,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Failure {
    pub kind: &'static str,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Record {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub case: Option<String>,
    pub directive: String,
    pub inputs: Map<String, Value>,
    pub values: Map<String, Value>,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub details: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<Failure>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

pub trait IntoValue {
    fn into_value(self) -> Value;
}

impl IntoValue for Colength {
    fn into_value(self) -> Value {
        match self {
            Colength::Finite(v) => Value::from(v),
            Colength::Infinite => Value::from("infinity"),
        }
    }
}

macro_rules! plain {
    ($($t:ty),*) => {$(
        impl IntoValue for $t {
            fn into_value(self) -> Value {
                Value::from(self)
            }
        }
    )*};
}
plain!(u32, u64, i64, usize, String);

impl IntoValue for Value {
    fn into_value(self) -> Value {
        self
    }
}

impl IntoValue for bool {
    fn into_value(self) -> Value {
        Value::from(self as u8)
    }
}

impl Record {
    pub fn new(directive: impl Into<String>) -> Self {
        Record {
            case: None,
            directive: directive.into(),
            inputs: Map::new(),
            values: Map::new(),
            checks: Vec::new(),
            details: Vec::new(),
            error: None,
            elapsed_ms: None,
        }
    }

    pub fn input(&mut self, name: &str, text: String) {
        self.inputs.insert(name.to_string(), Value::from(text));
    }

    pub fn value(&mut self, key: &str, v: impl IntoValue) {
        self.values.insert(key.to_string(), v.into_value());
    }

    pub fn check(&mut self, name: &str, lhs: impl IntoValue, rhs: impl IntoValue) {
        let (lhs, rhs) = (lhs.into_value(), rhs.into_value());
        let pass = lhs == rhs;
        self.checks.push(Check {
            name: name.to_string(),
            lhs,
            rhs,
            pass,
        });
    }

    /// A check whose verdict is not plain equality, e.g. an inequality.
    pub fn check_with(&mut self, name: &str, lhs: impl IntoValue, rhs: impl IntoValue, pass: bool) {
        self.checks.push(Check {
            name: name.to_string(),
            lhs: lhs.into_value(),
            rhs: rhs.into_value(),
            pass,
        });
    }

    pub fn fail(&mut self, e: &Error) {
        self.error = Some(Failure {
            kind: match e.kind() {
                ErrorKind::Parse => "parse",
                ErrorKind::Domain => "domain",
                ErrorKind::Resource => "resource",
            },
            message: e.to_string(),
        });
    }

    pub fn passed(&self) -> bool {
        self.error.is_none() && self.checks.iter().all(|c| c.pass)
    }

    /// Exit status contributed by this record.
    pub fn status(&self) -> i32 {
        match &self.error {
            Some(f) => match f.kind {
                "parse" => 1,
                "resource" => 3,
                _ => 2,
            },
            None if self.checks.iter().any(|c| !c.pass) => 4,
            None => 0,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }

    pub fn to_table(&self) -> String {
        let mut out = format!("== {}\n", self.directive);
        let width = self
            .values
            .keys()
            .chain(self.inputs.keys())
            .map(|k| k.len())
            .max()
            .unwrap_or(0);
        for (k, v) in &self.inputs {
            out += &format!("  {k:<width$}  {}\n", show(v));
        }
        for (k, v) in &self.values {
            out += &format!("  {k:<width$}  {}\n", show(v));
        }
        for c in &self.checks {
            out += &format!(
                "  [{}] {}: {} vs {}\n",
                if c.pass { "pass" } else { "FAIL" },
                c.name,
                show(&c.lhs),
                show(&c.rhs)
            );
        }
        for d in &self.details {
            out += &format!("  {d}\n");
        }
        if let Some(e) = &self.error {
            out += &format!("  error ({}): {}\n", e.kind, e.message);
        }
        if let Some(ms) = self.elapsed_ms {
            out += &format!("  {ms} ms\n");
        }
        out
    }
}

fn show(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        v => v.to_string(),
    }
}

/// Combined exit status: the first nonzero one.
pub fn exit_status<'a>(records: impl IntoIterator<Item = &'a Record>) -> i32 {
    records
        .into_iter()
        .map(Record::status)
        .find(|&s| s != 0)
        .unwrap_or(0)
}
