//! A catalog of identities between symmetric functions and operators, each
//! verified by exact computation over a finite range of parameters.

mod catalog;
pub mod ops;
mod report;
mod runner;

use crate::qfield::Rat;
use crate::symfunc::SymFunc;
use std::fmt;

pub use catalog::builtin_catalog;
pub use report::{render_json, render_list_json, render_list_text, render_text, Report};
pub use runner::{find_check, run_all, run_check, run_check_named, select, Summary};

/// Parameter bounds shared by all checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    /// Bound on partition sizes and integer parameters.
    pub n: u32,
    /// Bound on the parameters of the one-variable q-identities.
    pub q: u32,
}

impl Bounds {
    pub fn new(n: u32, q: u32) -> Bounds {
        Bounds { n, q }
    }

    /// Largest symmetric-function degree any instance may reach.
    pub fn degree_cap(&self) -> u32 {
        (2 * self.n).min(8)
    }
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { n: 4, q: 8 }
    }
}

/// One side of a comparison.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Sym(SymFunc),
    Scalar(Rat),
}

impl Value {
    /// `self - other`, rendered canonically.
    pub fn difference(&self, other: &Value) -> String {
        match (self, other) {
            (Value::Sym(a), Value::Sym(b)) => a.sub(b).serialize(),
            (Value::Scalar(a), Value::Scalar(b)) => (a - b).to_string(),
            (Value::Sym(a), Value::Scalar(b)) => a.sub(&SymFunc::scalar(b.clone())).serialize(),
            (Value::Scalar(a), Value::Sym(b)) => SymFunc::scalar(a.clone()).sub(b).serialize(),
        }
    }

    fn agrees(&self, other: &Value) -> bool {
        match (self, other) {
            (Value::Sym(a), Value::Sym(b)) => a == b,
            (Value::Scalar(a), Value::Scalar(b)) => a == b,
            (Value::Sym(a), Value::Scalar(b)) | (Value::Scalar(b), Value::Sym(a)) => *a == SymFunc::scalar(b.clone()),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Sym(x) => write!(f, "{}", x.serialize()),
            Value::Scalar(x) => write!(f, "{x}"),
        }
    }
}

impl From<SymFunc> for Value {
    fn from(f: SymFunc) -> Self {
        Value::Sym(f)
    }
}

impl From<Rat> for Value {
    fn from(r: Rat) -> Self {
        Value::Scalar(r)
    }
}

/// A labelled equation `lhs = rhs` produced by one instance.
#[derive(Clone, Debug)]
pub struct Comparison {
    pub label: String,
    pub lhs: Value,
    pub rhs: Value,
}

impl Comparison {
    pub fn new(label: impl Into<String>, lhs: impl Into<Value>, rhs: impl Into<Value>) -> Comparison {
        Comparison { label: label.into(), lhs: lhs.into(), rhs: rhs.into() }
    }

    pub fn holds(&self) -> bool {
        self.lhs.agrees(&self.rhs)
    }
}

type Job = Box<dyn Fn() -> crate::Result<Vec<Comparison>> + Send + Sync>;

/// A single parameter assignment together with the computation it triggers.
pub struct Instance {
    pub params: String,
    job: Job,
}

impl Instance {
    pub fn new(params: impl Into<String>, job: impl Fn() -> crate::Result<Vec<Comparison>> + Send + Sync + 'static) -> Instance {
        Instance { params: params.into(), job: Box::new(job) }
    }

    pub fn evaluate(&self) -> crate::Result<Vec<Comparison>> {
        (self.job)()
    }
}

/// A registered identity.
#[derive(Clone, Copy)]
pub struct Check {
    pub name: &'static str,
    pub tag: &'static str,
    /// The statement being verified.
    pub statement: &'static str,
    /// Parameter ranges in terms of the bounds.
    pub params: &'static str,
    pub instances: fn(&Bounds) -> Vec<Instance>,
}

impl fmt::Debug for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Check").field("name", &self.name).field("tag", &self.tag).finish()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Counterexample {
    pub params: String,
    pub equation: String,
    pub lhs: String,
    pub rhs: String,
    pub difference: String,
}

#[derive(Clone, Debug, PartialEq, serde::Serialize)]
pub struct CheckResult {
    pub name: String,
    #[serde(rename = "ref")]
    pub statement: String,
    pub instances: usize,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    pub ms: u64,
}
