//! Machine checks of the identities, examples and tables of the algebra
//! catalog, plus the exhaustive oracle used to validate normalization.

mod checks;
mod corpus;
mod oracle;
mod random;
mod report;

use rayon::prelude::*;

pub use checks::{
    power_identity_sides, spot_check, verify_ore, verify_poly_identity,
    verify_relation_set_equivalence, verify_specialization, CheckOutcome, OreExpectation, PowerSide,
    Specialization, SPOT_CHECK_POINTS,
};
pub use corpus::{corpus, Claim, Reading, Source, VerificationCase};
pub use oracle::{brute_force_reduce, Oracle, DEFAULT_ORACLE_CAP};
pub use random::{random_coefficient, random_point, random_poly, random_word, rng_for, seed_for, SuiteRng};
pub use report::{Expected, Status, Summary, SuiteReport, VerificationReport, REPORT_SCHEMA_VERSION};

use crate::error::{Error, Result};

/// Default upper power for the power identities.
pub const DEFAULT_K: u32 = 10;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Selection {
    All,
    Family(String),
    Cases(Vec<String>),
}

impl Selection {
    /// `all`, a family id, or a comma-separated list of case ids.
    pub fn parse(text: &str) -> Self {
        let t = text.trim();
        if t == "all" {
            Selection::All
        } else if crate::families::family_info(t).is_some() {
            Selection::Family(t.to_string())
        } else {
            Selection::Cases(t.split(',').map(|s| s.trim().to_string()).collect())
        }
    }

    fn label(&self) -> String {
        match self {
            Selection::All => "all".into(),
            Selection::Family(f) => f.clone(),
            Selection::Cases(c) => c.join(","),
        }
    }

    fn matches(&self, case: &VerificationCase) -> bool {
        match self {
            Selection::All => true,
            Selection::Family(f) => case.family == f,
            Selection::Cases(ids) => ids.contains(&case.id),
        }
    }
}

pub fn select(selection: &Selection, k_max: u32) -> Result<Vec<VerificationCase>> {
    let all = corpus(k_max);
    if let Selection::Cases(ids) = selection {
        if let Some(missing) = ids.iter().find(|i| !all.iter().any(|c| c.id == **i)) {
            return Err(Error::EmptySelection(missing.clone()));
        }
    }
    let picked: Vec<_> = all.into_iter().filter(|c| selection.matches(c)).collect();
    if picked.is_empty() {
        return Err(Error::EmptySelection(selection.label()));
    }
    Ok(picked)
}

fn outcome_line(name: &str, o: &Result<CheckOutcome>) -> String {
    match o {
        Ok(o) if o.passed => format!("{name}: pass"),
        Ok(o) => format!("{name}: fails ({})", o.witness.as_deref().unwrap_or("no witness")),
        Err(e) => format!("{name}: error ({e})"),
    }
}

/// Runs one case. Engine errors become an `error` status, never a panic.
pub fn run_case(case: &VerificationCase) -> VerificationReport {
    let mut rng = rng_for(&case.id);
    let mut annotations = case.notes.clone();
    let witness;
    let mut units = Vec::new();
    let mut trace = None;
    let status = match case.claim.check(&mut rng) {
        Err(e) => {
            witness = Some(e.to_string());
            Status::Error
        }
        Ok(o) => {
            annotations.extend(o.notes.iter().cloned());
            witness = o.witness.clone();
            trace = o.trace.clone();
            if o.passed {
                units = o.units;
                Status::Pass
            } else if o.numeric_mismatch {
                annotations.push("numeric spot check contradicts the symbolic verdict".into());
                Status::Fail
            } else {
                let mut status = Status::Fail;
                for r in &case.readings {
                    match r.claim.check(&mut rng) {
                        Ok(ro) if ro.passed => {
                            annotations.push(format!("passes with reading: {}", r.name));
                            annotations.extend(ro.notes);
                            units = ro.units;
                            status = Status::Discrepancy;
                            break;
                        }
                        _ => {}
                    }
                }
                if status == Status::Fail && !case.readings.is_empty() {
                    annotations.push(format!(
                        "none of {} alternative readings passes",
                        case.readings.len()
                    ));
                }
                status
            }
        }
    };
    for p in &case.probes {
        annotations.push(outcome_line(&p.name, &p.claim.check(&mut rng)));
    }
    let unexpected = !matches!(
        (status, case.expected),
        (Status::Pass, Expected::Pass) | (Status::Discrepancy, Expected::Discrepancy)
    );
    VerificationReport {
        id: case.id.clone(),
        family: case.family.to_string(),
        claim: case.claim.kind(),
        status,
        expected: case.expected,
        unexpected,
        witness,
        units,
        annotations,
        trace,
    }
}

/// Runs the selected cases concurrently; reports come back in corpus order.
pub fn run_suite(selection: &Selection, k_max: u32) -> Result<SuiteReport> {
    if k_max == 0 {
        return Err(Error::Param("K must be at least 1".into()));
    }
    let cases = select(selection, k_max)?;
    let reports: Vec<VerificationReport> = cases.par_iter().map(run_case).collect();
    Ok(SuiteReport::new(&selection.label(), k_max, reports))
}
