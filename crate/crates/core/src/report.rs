//! Certification reports: named identity checks with replayable witnesses.

use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::linalg::{decode_index, format_scalar, Mat, Scalar};

/// Where an identity fails: the basis input (one index per tensor factor of
/// the domain) and both sides evaluated on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub indices: Vec<usize>,
    pub lhs: Vec<Scalar>,
    pub rhs: Vec<Scalar>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    /// The identity being checked, written out.
    pub anchor: String,
    pub passed: bool,
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub subject: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Self {
        Report {
            subject: subject.into(),
            checks: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn first_failure_name(&self) -> Option<&str> {
        self.failures().next().map(|c| c.name.as_str())
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Records `lhs == rhs` as linear maps out of a tensor product whose
    /// factor dimensions are `domain`. On failure the witness is the first
    /// basis input on which the two maps disagree.
    pub fn check_maps(
        &mut self,
        name: impl Into<String>,
        anchor: impl Into<String>,
        lhs: &Mat,
        rhs: &Mat,
        domain: &[usize],
    ) -> bool {
        let (name, anchor) = (name.into(), anchor.into());
        if lhs.shape() != rhs.shape() {
            self.checks.push(Check {
                name,
                anchor: format!("{anchor} (shapes {:?} vs {:?})", lhs.shape(), rhs.shape()),
                passed: false,
                witness: Some(Witness {
                    indices: vec![],
                    lhs: vec![],
                    rhs: vec![],
                }),
            });
            return false;
        }
        let witness = lhs.first_difference(rhs).map(|(_, col)| Witness {
            indices: decode_index(col, domain),
            lhs: lhs.col(col),
            rhs: rhs.col(col),
        });
        let passed = witness.is_none();
        self.checks.push(Check {
            name,
            anchor,
            passed,
            witness,
        });
        passed
    }

    /// Records equality of two vectors computed for a specific basis input.
    pub fn check_values(
        &mut self,
        name: impl Into<String>,
        anchor: impl Into<String>,
        indices: Vec<usize>,
        lhs: Vec<Scalar>,
        rhs: Vec<Scalar>,
    ) -> bool {
        let passed = lhs == rhs;
        self.checks.push(Check {
            name: name.into(),
            anchor: anchor.into(),
            passed,
            witness: (!passed).then_some(Witness { indices, lhs, rhs }),
        });
        passed
    }

    /// Like [`Report::check_values`] but over many inputs at once: only the
    /// first failing input is kept as witness.
    pub fn check_all<I>(&mut self, name: impl Into<String>, anchor: impl Into<String>, cases: I) -> bool
    where
        I: IntoIterator<Item = (Vec<usize>, Vec<Scalar>, Vec<Scalar>)>,
    {
        let witness = cases
            .into_iter()
            .find(|(_, l, r)| l != r)
            .map(|(indices, lhs, rhs)| Witness { indices, lhs, rhs });
        let passed = witness.is_none();
        self.checks.push(Check {
            name: name.into(),
            anchor: anchor.into(),
            passed,
            witness,
        });
        passed
    }

    /// A yes/no condition, witnessed by `indices` alone.
    pub fn check_condition(
        &mut self,
        name: impl Into<String>,
        anchor: impl Into<String>,
        ok: bool,
        indices: Vec<usize>,
    ) -> bool {
        self.checks.push(Check {
            name: name.into(),
            anchor: anchor.into(),
            passed: ok,
            witness: (!ok).then(|| Witness {
                indices,
                lhs: vec![],
                rhs: vec![],
            }),
        });
        ok
    }

    /// Appends another report's checks, prefixing their names.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            c.name = format!("{prefix}/{}", c.name);
            self.checks.push(c);
        }
    }

    /// `Ok(self)` when every check passed.
    pub fn into_result(self, what: &str) -> Result<Report> {
        if self.passed() {
            Ok(self)
        } else {
            Err(Error::check_failed(what, self))
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "subject": self.subject,
            "passed": self.passed(),
            "checks": self.checks.iter().map(Check::to_json).collect::<Vec<_>>(),
        })
    }
}

impl Check {
    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "name": self.name,
            "anchor": self.anchor,
            "passed": self.passed,
        });
        if let Some(w) = &self.witness {
            v["witness"] = json!({
                "indices": w.indices,
                "lhs": w.lhs.iter().map(format_scalar).collect::<Vec<_>>(),
                "rhs": w.rhs.iter().map(format_scalar).collect::<Vec<_>>(),
            });
        }
        v
    }
}

fn fmt_vec(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(format_scalar).collect();
    format!("[{}]", parts.join(", "))
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let failed = self.failures().count();
        writeln!(
            f,
            "{}: {} ({} checks, {} failed)",
            self.subject,
            if failed == 0 { "PASS" } else { "FAIL" },
            self.checks.len(),
            failed
        )?;
        for c in &self.checks {
            write!(
                f,
                "  {} {}  [{}]",
                if c.passed { "ok  " } else { "FAIL" },
                c.name,
                c.anchor
            )?;
            if let Some(w) = &c.witness {
                write!(
                    f,
                    "\n       at {:?}: lhs = {}, rhs = {}",
                    w.indices,
                    fmt_vec(&w.lhs),
                    fmt_vec(&w.rhs)
                )?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::int;

    #[test]
    fn map_witness_decodes_tensor_index() {
        let mut r = Report::new("t");
        let lhs = Mat::identity(6);
        let mut rhs = Mat::identity(6);
        rhs.set(4, 4, int(2));
        assert!(!r.check_maps("x", "id = id", &lhs, &rhs, &[2, 3]));
        let w = r.checks[0].witness.as_ref().unwrap();
        assert_eq!(w.indices, vec![1, 1]);
        assert_eq!(w.lhs[4], int(1));
        assert_eq!(w.rhs[4], int(2));
    }

    #[test]
    fn pass_entries_carry_no_witness() {
        let mut r = Report::new("t");
        assert!(r.check_maps("x", "", &Mat::identity(2), &Mat::identity(2), &[2]));
        assert!(r.checks[0].witness.is_none());
        assert!(r.passed());
        assert!(r.into_result("t").is_ok());
    }
}
