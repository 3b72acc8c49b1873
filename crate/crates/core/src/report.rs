//! Pass/fail records produced by every identity checker.

use std::fmt;

use serde::Serialize;

use crate::exactmat::{format_scalar, Scalar, Vector};

/// The first identity found to fail, with both sides evaluated.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub identity: String,
    pub location: String,
    #[serde(serialize_with = "ser_vec")]
    pub lhs: Vector,
    #[serde(serialize_with = "ser_vec")]
    pub rhs: Vector,
}

fn ser_vec<S: serde::Serializer>(v: &Vector, s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(format_scalar))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub name: String,
    /// Number of identity instances evaluated before stopping.
    pub checked: usize,
    pub violation: Option<Violation>,
}

impl Report {
    pub fn pass(name: impl Into<String>, checked: usize) -> Self {
        Report { name: name.into(), checked, violation: None }
    }

    pub fn fail(name: impl Into<String>, violation: Violation) -> Self {
        Report { name: name.into(), checked: 0, violation: Some(violation) }
    }

    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }

    /// First failing report of a sequence, or a pass summing the counts.
    pub fn combine(name: impl Into<String>, reports: impl IntoIterator<Item = Report>) -> Report {
        let name = name.into();
        let mut checked = 0;
        for r in reports {
            checked += r.checked;
            if let Some(v) = r.violation {
                let identity = if r.name == name { v.identity } else { format!("{}: {}", r.name, v.identity) };
                return Report { name, checked, violation: Some(Violation { identity, ..v }) };
            }
        }
        Report::pass(name, checked)
    }

    /// The identity name of the violation, if any.
    pub fn failed_identity(&self) -> Option<&str> {
        self.violation.as_ref().map(|v| v.identity.as_str())
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.violation {
            None => write!(f, "{}: pass ({} checks)", self.name, self.checked),
            Some(v) => {
                let show = |x: &Vector| x.iter().map(format_scalar).collect::<Vec<_>>().join(", ");
                write!(
                    f,
                    "{}: FAIL {} at {}\n  lhs = [{}]\n  rhs = [{}]",
                    self.name,
                    v.identity,
                    v.location,
                    show(&v.lhs),
                    show(&v.rhs)
                )
            }
        }
    }
}

/// Accumulates identity comparisons and stops at the first mismatch.
pub(crate) struct Checker {
    name: String,
    checked: usize,
    violation: Option<Violation>,
}

impl Checker {
    pub fn new(name: impl Into<String>) -> Self {
        Checker { name: name.into(), checked: 0, violation: None }
    }

    /// Records one instance; returns `false` once a violation has been seen.
    pub fn eq(&mut self, identity: &str, location: impl FnOnce() -> String, lhs: Vector, rhs: Vector) -> bool {
        if self.violation.is_some() {
            return false;
        }
        self.checked += 1;
        if lhs != rhs {
            self.violation = Some(Violation { identity: identity.to_string(), location: location(), lhs, rhs });
            return false;
        }
        true
    }

    pub fn scalar_eq(&mut self, identity: &str, location: impl FnOnce() -> String, lhs: Scalar, rhs: Scalar) -> bool {
        self.eq(identity, location, vec![lhs], vec![rhs])
    }

    pub fn failed(&self) -> bool {
        self.violation.is_some()
    }

    pub fn finish(self) -> Report {
        Report { name: self.name, checked: self.checked, violation: self.violation }
    }
}
