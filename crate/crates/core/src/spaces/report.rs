//! Validation reports: axiom violations as data.
//!
//! Clauses are evaluated in definition order and evaluation stops at the
//! first violation, whose witnesses are the least ones in index order.
//! Clauses whose content is purely topological are recorded as
//! "vacuous (finite)" rather than silently skipped.

use std::fmt;

/// A named element or set that witnesses a violation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub role: String,
    pub value: String,
}

impl Witness {
    pub fn new(role: impl Into<String>, value: impl Into<String>) -> Self {
        Witness {
            role: role.into(),
            value: value.into(),
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.role, self.value)
    }
}

/// The outcome of one clause.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClauseStatus {
    /// Checked and satisfied.
    Holds,
    /// Only topological content, automatically true on finite carriers.
    Vacuous,
    /// Not evaluated (carrier above the configured size guard).
    Skipped(String),
    /// Checked and violated.
    Violated(Vec<Witness>),
    /// Not evaluated because an earlier clause was violated.
    NotReached,
}

/// One clause of a definition with its outcome.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClauseOutcome {
    /// Stable identifier, e.g. `gvg.separation-by-stable-upsets`.
    pub id: &'static str,
    pub description: &'static str,
    pub status: ClauseStatus,
}

/// The result of validating a space or morphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub subject: String,
    pub outcomes: Vec<ClauseOutcome>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violation().is_none()
    }

    /// The first violated clause, if any.
    pub fn violation(&self) -> Option<&ClauseOutcome> {
        self.outcomes
            .iter()
            .find(|o| matches!(o.status, ClauseStatus::Violated(_)))
    }

    /// Identifier of the first violated clause.
    pub fn violated_clause(&self) -> Option<&'static str> {
        self.violation().map(|o| o.id)
    }

    pub fn skipped(&self) -> impl Iterator<Item = &ClauseOutcome> {
        self.outcomes
            .iter()
            .filter(|o| matches!(o.status, ClauseStatus::Skipped(_)))
    }

    /// `Ok(())` or [`crate::Error::NotValidated`] naming the clause.
    pub fn into_result(self) -> crate::Result<()> {
        match self.violation() {
            None => Ok(()),
            Some(o) => Err(crate::Error::NotValidated(format!(
                "{}: {}",
                self.subject,
                describe(o)
            ))),
        }
    }
}

fn describe(o: &ClauseOutcome) -> String {
    match &o.status {
        ClauseStatus::Holds => format!("{}: holds", o.id),
        ClauseStatus::Vacuous => format!("{}: vacuous (finite)", o.id),
        ClauseStatus::Skipped(why) => format!("{}: skipped ({why})", o.id),
        ClauseStatus::NotReached => format!("{}: not reached", o.id),
        ClauseStatus::Violated(ws) => {
            let ws: Vec<String> = ws.iter().map(Witness::to_string).collect();
            format!("{}: VIOLATED ({}) [{}]", o.id, o.description, ws.join("; "))
        }
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}: {}",
            self.subject,
            if self.is_ok() { "ok" } else { "violation" }
        )?;
        for o in &self.outcomes {
            writeln!(f, "  {}", describe(o))?;
        }
        Ok(())
    }
}

/// Accumulates clause outcomes in definition order.
pub(crate) struct Checker {
    subject: String,
    outcomes: Vec<ClauseOutcome>,
    violated: bool,
}

impl Checker {
    pub(crate) fn new(subject: impl Into<String>) -> Self {
        Checker {
            subject: subject.into(),
            outcomes: Vec::new(),
            violated: false,
        }
    }

    /// Evaluate a clause; `check` returns the witnesses of a violation.
    pub(crate) fn clause(
        &mut self,
        id: &'static str,
        description: &'static str,
        check: impl FnOnce() -> Option<Vec<Witness>>,
    ) {
        let status = if self.violated {
            ClauseStatus::NotReached
        } else {
            match check() {
                None => ClauseStatus::Holds,
                Some(w) => {
                    self.violated = true;
                    ClauseStatus::Violated(w)
                }
            }
        };
        self.outcomes.push(ClauseOutcome {
            id,
            description,
            status,
        });
    }

    pub(crate) fn vacuous(&mut self, id: &'static str, description: &'static str) {
        let status = if self.violated {
            ClauseStatus::NotReached
        } else {
            ClauseStatus::Vacuous
        };
        self.outcomes.push(ClauseOutcome {
            id,
            description,
            status,
        });
    }

    pub(crate) fn skipped(&mut self, id: &'static str, description: &'static str, why: String) {
        let status = if self.violated {
            ClauseStatus::NotReached
        } else {
            ClauseStatus::Skipped(why)
        };
        self.outcomes.push(ClauseOutcome {
            id,
            description,
            status,
        });
    }

    pub(crate) fn has_failed(&self) -> bool {
        self.violated
    }

    pub(crate) fn finish(self) -> ValidationReport {
        ValidationReport {
            subject: self.subject,
            outcomes: self.outcomes,
        }
    }
}
