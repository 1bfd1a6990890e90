use serde::Serialize;

/// One named property of a design, with a counterexample when it fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DesignReport {
    pub design: String,
    pub checks: Vec<PropertyCheck>,
}

impl DesignReport {
    pub(crate) fn new(design: impl Into<String>) -> Self {
        DesignReport {
            design: design.into(),
            checks: Vec::new(),
        }
    }

    pub(crate) fn push(&mut self, name: &str, detail: impl Into<String>, failure: Option<String>) {
        self.checks.push(PropertyCheck {
            name: name.to_string(),
            passed: failure.is_none(),
            detail: detail.into(),
            counterexample: failure,
        });
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&PropertyCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}
