use std::fmt;

use crate::partition::Partition;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Exhaustive,
    Sampled { seed: u64, samples: u64 },
}

/// Evidence that a claimed property does not hold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// A column partition that no row separates (or, for fractality, that
    /// too few rows separate).
    Partition(Partition),
    /// A `t`-set of columns of a covering array missing a symbol tuple.
    MissingTuple {
        columns: Vec<usize>,
        tuple: Vec<u32>,
    },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Partition(p) => write!(f, "{p}"),
            Witness::MissingTuple { columns, tuple } => {
                let cols: Vec<String> = columns.iter().map(ToString::to_string).collect();
                let tup: Vec<String> = tuple.iter().map(ToString::to_string).collect();
                write!(f, "columns=[{}] tuple=[{}]", cols.join(","), tup.join(","))
            }
        }
    }
}

/// Outcome of a verification run.
///
/// `checks_performed` counts the (column set, partition) pairs, or
/// (column set, tuple) pairs for covering arrays, decided by the run. A
/// failing run counts through the witness in enumeration order, so the count
/// is reproducible regardless of thread count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub checks_performed: u128,
    pub mode: Mode,
}

impl VerifyReport {
    pub(crate) fn pass(checks_performed: u128, mode: Mode) -> Self {
        Self {
            verdict: Verdict::Pass,
            witness: None,
            checks_performed,
            mode,
        }
    }

    pub(crate) fn fail(witness: Witness, checks_performed: u128, mode: Mode) -> Self {
        Self {
            verdict: Verdict::Fail,
            witness: Some(witness),
            checks_performed,
            mode,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn partition_witness(&self) -> Option<&Partition> {
        match &self.witness {
            Some(Witness::Partition(p)) => Some(p),
            _ => None,
        }
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = match self.verdict {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
        };
        write!(f, "{verdict} checks={}", self.checks_performed)?;
        match self.mode {
            Mode::Exhaustive => write!(f, " mode=exhaustive")?,
            Mode::Sampled { seed, samples } => {
                write!(f, " mode=sampled seed={seed} samples={samples}")?
            }
        }
        if let Some(w) = &self.witness {
            write!(f, " witness {w}")?;
        }
        Ok(())
    }
}
