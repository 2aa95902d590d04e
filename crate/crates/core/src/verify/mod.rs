//! Exhaustive and randomized verification sweeps.
//!
//! Every check walks a family of words level by level (one level per word
//! length), evaluates each word independently and folds the outcomes into a
//! [`CheckReport`]. Reports depend only on the configuration and seed: the
//! number of worker threads and checkpoint resumption never change a byte of
//! the serialized output.

mod checkpoint;
mod checks;
pub mod enumerate;
mod report;
mod search;
mod sweep;

use std::collections::BTreeSet;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use checks::{
    check_case_bounds, check_class_circuit_bijection, check_class_parity, check_independence,
    check_large_circuit_conclusion, check_large_circuit_sweep, check_main_bound,
    check_nonprimitive_bound, check_power_chain, check_split_observations, classify_case,
    power_chain, CaseRoute, PowerChain,
};
pub use report::{BoundRatio, CheckReport, Finding};
pub use search::search_extremal;

use crate::error::{Error, Result};
use crate::rauzy::DEFAULT_CIRCUIT_CAP;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckId {
    /// `3 Sq([w]) <= 5 n`.
    MainBound,
    /// `2 Sq([w]) <= 3 n` for non-primitive `w`.
    NonprimitiveBound,
    /// Small circuits are independent and `sc(w) <= |w| - |Alph(w)|`.
    Independence,
    /// `|O_p| <= |E_p| <= |O_p| + l`, `|O_p| >= (t - l)/2` and the exact
    /// counts for downward-closed classes.
    ClassParity,
    /// Each class of size `t` yields small circuits `C(p, l..l+t-1)`.
    ClassCircuit,
    /// Split components sum to `|p|`; small circuits never split one
    /// order below.
    SplitObservations,
    /// Sub-`n/2` circuits cannot span `Γ_i(w^2)` near the top orders when
    /// `w` carries a high power.
    LargeCircuit,
    /// The bound of the proof route each primitive word falls into.
    CaseBounds,
    /// `|Power'(W)| = |sc'(W)| <= |sc(W)| <= Indep(Γ(W)) <= 2n`.
    PowerChain,
}

impl CheckId {
    pub const ALL: [CheckId; 9] = [
        CheckId::MainBound,
        CheckId::NonprimitiveBound,
        CheckId::Independence,
        CheckId::ClassParity,
        CheckId::ClassCircuit,
        CheckId::SplitObservations,
        CheckId::LargeCircuit,
        CheckId::CaseBounds,
        CheckId::PowerChain,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckId::MainBound => "main-bound",
            CheckId::NonprimitiveBound => "nonprimitive-bound",
            CheckId::Independence => "independence",
            CheckId::ClassParity => "class-parity",
            CheckId::ClassCircuit => "class-circuit",
            CheckId::SplitObservations => "split-observations",
            CheckId::LargeCircuit => "large-circuit",
            CheckId::CaseBounds => "case-bounds",
            CheckId::PowerChain => "power-chain",
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CheckId::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| {
                let known: Vec<_> = CheckId::ALL.iter().map(|c| c.as_str()).collect();
                Error::InvalidArgument(format!("unknown check {s:?}; known: {}", known.join(", ")))
            })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    pub alphabet_size: usize,
    pub max_length: usize,
    pub checks: BTreeSet<CheckId>,
    /// Enumerate one representative per symmetry class (symbol renaming,
    /// plus rotation for checks about circular words).
    pub canonicalize: bool,
    pub checkpoint_path: Option<PathBuf>,
    pub jobs: usize,
    pub seed: u64,
    pub circuit_cap: usize,
}

impl SweepConfig {
    pub fn new(alphabet_size: usize, max_length: usize) -> Self {
        Self {
            alphabet_size,
            max_length,
            checks: CheckId::ALL.into_iter().collect(),
            canonicalize: true,
            checkpoint_path: None,
            jobs: 1,
            seed: 0,
            circuit_cap: DEFAULT_CIRCUIT_CAP,
        }
    }

    pub fn with_checks(mut self, checks: impl IntoIterator<Item = CheckId>) -> Self {
        self.checks = checks.into_iter().collect();
        self
    }

    pub fn with_jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_checkpoint(mut self, path: impl Into<PathBuf>) -> Self {
        self.checkpoint_path = Some(path.into());
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.alphabet_size == 0 || self.alphabet_size > 26 {
            return Err(Error::InvalidArgument(format!(
                "alphabet size must lie in 1..=26, got {}",
                self.alphabet_size
            )));
        }
        if self.max_length == 0 {
            return Err(Error::InvalidArgument("maximum length must be >= 1".into()));
        }
        if self.checks.is_empty() {
            return Err(Error::InvalidArgument("no checks selected".into()));
        }
        if self.jobs == 0 {
            return Err(Error::InvalidArgument("jobs must be >= 1".into()));
        }
        Ok(())
    }
}

/// Runs one check.
pub fn run_check(cfg: &SweepConfig, check: CheckId) -> Result<CheckReport> {
    cfg.validate()?;
    match check {
        CheckId::MainBound => check_main_bound(cfg),
        CheckId::NonprimitiveBound => check_nonprimitive_bound(cfg),
        CheckId::Independence => check_independence(cfg),
        CheckId::ClassParity => check_class_parity(cfg),
        CheckId::ClassCircuit => check_class_circuit_bijection(cfg),
        CheckId::SplitObservations => check_split_observations(cfg),
        CheckId::LargeCircuit => check_large_circuit_sweep(cfg),
        CheckId::CaseBounds => check_case_bounds(cfg),
        CheckId::PowerChain => check_power_chain(cfg),
    }
}

/// Runs every selected check in a fixed order.
pub fn run_checks(cfg: &SweepConfig) -> Result<Vec<CheckReport>> {
    cfg.validate()?;
    cfg.checks.iter().map(|&c| run_check(cfg, c)).collect()
}
