use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_rational::Ratio;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Stored flagged findings per report; the tallies still count all of them.
const MAX_FLAGGED: usize = 64;

/// An exact ratio such as `Sq([w]) / n`, printed as `num/den`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BoundRatio(Ratio<u64>);

impl BoundRatio {
    pub fn new(num: u64, den: u64) -> Self {
        Self(Ratio::new(num, den))
    }

    pub fn numer(&self) -> u64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> u64 {
        *self.0.denom()
    }

    pub fn to_f64(self) -> f64 {
        self.numer() as f64 / self.denom() as f64
    }
}

impl PartialOrd for BoundRatio {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BoundRatio {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }
}

impl fmt::Display for BoundRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl std::str::FromStr for BoundRatio {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (n, d) = s
            .split_once('/')
            .ok_or_else(|| format!("not a ratio: {s:?}"))?;
        let n: u64 = n.parse().map_err(|e| format!("{s:?}: {e}"))?;
        let d: u64 = d.parse().map_err(|e| format!("{s:?}: {e}"))?;
        if d == 0 {
            return Err(format!("{s:?}: zero denominator"));
        }
        Ok(Self::new(n, d))
    }
}

impl Serialize for BoundRatio {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BoundRatio {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(D::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    pub word: String,
    pub detail: String,
}

/// Outcome of one check. It passed iff `violations` is empty; `flagged`
/// holds report-worthy observations that are not failures.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check_id: String,
    pub words_tested: u64,
    pub skipped: u64,
    pub violations: Vec<Finding>,
    pub flagged: Vec<Finding>,
    pub max_ratio: Option<BoundRatio>,
    pub witness: Option<String>,
    pub tallies: BTreeMap<String, u64>,
}

impl CheckReport {
    pub fn new(check_id: impl Into<String>) -> Self {
        Self {
            check_id: check_id.into(),
            words_tested: 0,
            skipped: 0,
            violations: Vec::new(),
            flagged: Vec::new(),
            max_ratio: None,
            witness: None,
            tallies: BTreeMap::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn tally(&self, key: &str) -> u64 {
        self.tallies.get(key).copied().unwrap_or(0)
    }

    pub(crate) fn bump(&mut self, key: impl Into<String>, by: u64) {
        *self.tallies.entry(key.into()).or_insert(0) += by;
    }

    pub(crate) fn violation(&mut self, word: impl Into<String>, detail: impl Into<String>) {
        self.violations.push(Finding {
            word: word.into(),
            detail: detail.into(),
        });
    }

    pub(crate) fn flag(&mut self, word: impl Into<String>, detail: impl Into<String>) {
        self.bump("flagged", 1);
        if self.flagged.len() < MAX_FLAGGED {
            self.flagged.push(Finding {
                word: word.into(),
                detail: detail.into(),
            });
        }
    }

    /// Records a ratio; on ties the earlier witness stays.
    pub(crate) fn observe_ratio(&mut self, ratio: BoundRatio, witness: impl fmt::Display) {
        if self.max_ratio.is_none_or(|m| ratio > m) {
            self.max_ratio = Some(ratio);
            self.witness = Some(witness.to_string());
        }
    }

    /// Folds `other`, which covers words enumerated after ours, into `self`.
    pub fn merge(&mut self, other: CheckReport) {
        self.words_tested += other.words_tested;
        self.skipped += other.skipped;
        self.violations.extend(other.violations);
        for f in other.flagged {
            if self.flagged.len() < MAX_FLAGGED {
                self.flagged.push(f);
            }
        }
        if let (Some(r), Some(w)) = (other.max_ratio, other.witness) {
            self.observe_ratio(r, w);
        }
        for (k, v) in other.tallies {
            self.bump(k, v);
        }
    }

    /// One line per report: status, id, counts and the maximum ratio.
    pub fn summary_line(&self) -> String {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let ratio = match (&self.max_ratio, &self.witness) {
            (Some(r), Some(w)) => format!("  max ratio {r} ({:.4}) at {w}", r.to_f64()),
            _ => String::new(),
        };
        format!(
            "{status}  {:<20} tested {:>8}  skipped {:>4}  violations {:>4}{ratio}",
            self.check_id,
            self.words_tested,
            self.skipped,
            self.violations.len()
        )
    }
}
