use serde::Serialize;
use serde_json::Value;

/// One named comparison. Passes exactly when `expected == actual`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: Value,
    pub actual: Value,
    pub pass: bool,
}

impl Check {
    pub fn equal(name: impl Into<String>, expected: impl Into<Value>, actual: impl Into<Value>) -> Self {
        let (expected, actual) = (expected.into(), actual.into());
        Check {
            name: name.into(),
            pass: expected == actual,
            expected,
            actual,
        }
    }

    pub fn holds(name: impl Into<String>, actual: bool) -> Self {
        Check::equal(name, true, actual)
    }
}

/// A value that is computed and reported but not asserted.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Observation {
    pub name: String,
    pub value: Value,
}

impl Observation {
    pub fn new(name: impl Into<String>, value: impl Into<Value>) -> Self {
        Observation {
            name: name.into(),
            value: value.into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Params {
    pub k: usize,
    pub l: usize,
    pub n: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ArithmeticInfo {
    pub mode: crate::exact_linalg::Arithmetic,
    pub fields: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub theorem: String,
    pub params: Params,
    pub arithmetic: ArithmeticInfo,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub observations: Vec<Observation>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Checks and observations produced by one run, before timing and
/// arithmetic metadata are attached.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Outcome {
    pub checks: Vec<Check>,
    pub observations: Vec<Observation>,
}

impl Outcome {
    pub fn check(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn observe(&mut self, name: impl Into<String>, value: impl Into<Value>) {
        self.observations.push(Observation::new(name, value));
    }
}
