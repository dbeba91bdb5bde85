use std::fmt;

/// A failed check: which rule, where, and what went wrong.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub rule: String,
    pub point: String,
    pub detail: String,
}

impl Violation {
    pub fn new(rule: impl Into<String>, point: impl Into<String>, detail: impl Into<String>) -> Self {
        Violation {
            rule: rule.into(),
            point: point.into(),
            detail: detail.into(),
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] at {}: {}", self.rule, self.point, self.detail)
    }
}
