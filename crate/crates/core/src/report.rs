//! Structured pass/fail records shared by every verifier.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt::Display;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub got: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Report {
    pub topic: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(topic: impl Into<String>) -> Self {
        Report {
            topic: topic.into(),
            checks: Vec::new(),
        }
    }

    /// Records `expected == got`; the strings are only for display.
    pub fn check<T: PartialEq + Display>(
        &mut self,
        name: impl Into<String>,
        expected: T,
        got: T,
    ) -> bool {
        let pass = expected == got;
        self.checks.push(Check {
            name: name.into(),
            expected: expected.to_string(),
            got: got.to_string(),
            pass,
        });
        pass
    }

    pub fn truth(&mut self, name: impl Into<String>, cond: bool, detail: impl Display) -> bool {
        self.checks.push(Check {
            name: name.into(),
            expected: "true".to_string(),
            got: if cond {
                "true".to_string()
            } else {
                alloc::format!("false ({detail})")
            },
            pass: cond,
        });
        cond
    }

    /// Records an informational value that always passes.
    pub fn note(&mut self, name: impl Into<String>, value: impl Display) {
        let v = value.to_string();
        self.checks.push(Check {
            name: name.into(),
            expected: v.clone(),
            got: v,
            pass: true,
        });
    }

    pub fn extend(&mut self, other: Report) {
        for mut c in other.checks {
            if !other.topic.is_empty() {
                c.name = alloc::format!("{}/{}", other.topic, c.name);
            }
            self.checks.push(c);
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}
