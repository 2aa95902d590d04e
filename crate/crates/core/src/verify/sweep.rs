//! The level-by-level sweep driver shared by all checks.

use rayon::prelude::*;

use super::checkpoint::{Checkpoint, LevelRecord};
use super::enumerate;
use super::report::{BoundRatio, CheckReport};
use super::SweepConfig;
use crate::error::{Error, Result};
use crate::words::{format_symbols, slice, Symbol};

/// Words per unit of parallel work and per checkpoint write.
const CHUNK: usize = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Family {
    /// Circular words: one per rotation-and-renaming class.
    Necklaces,
    /// Linear words: one per renaming class.
    Linear,
    /// Primitive circular words.
    Primitive,
    /// Non-primitive circular words.
    NonPrimitive,
    /// `p^e x` with `e >= 4` and `0 < |x| < |p|`.
    HighPower,
}

impl Family {
    fn words(self, k: usize, n: usize, canonical: bool) -> Vec<Vec<Symbol>> {
        use enumerate::*;
        match (self, canonical) {
            (Family::Necklaces, true) => canonical_necklaces(k, n),
            (Family::Linear, true) => renaming_canonical(k, n),
            (Family::Necklaces | Family::Linear, false) => all_words(k, n),
            (Family::Primitive, true) => canonical_lyndon(k, n),
            (Family::NonPrimitive, true) => canonical_nonprimitive(k, n),
            (Family::Primitive, false) => all_words(k, n)
                .into_iter()
                .filter(|w| slice::is_primitive(w))
                .collect(),
            (Family::NonPrimitive, false) => all_words(k, n)
                .into_iter()
                .filter(|w| !slice::is_primitive(w))
                .collect(),
            (Family::HighPower, c) => high_power_instances(k, n, c),
        }
    }
}

/// What one word contributed.
#[derive(Clone, Debug, Default)]
pub(crate) struct Outcome {
    /// `(numerator, denominator)` of the word's bound ratio.
    pub ratio: Option<(u64, u64)>,
    pub violations: Vec<String>,
    pub flags: Vec<String>,
    pub tallies: Vec<String>,
    pub skipped: bool,
}

impl Outcome {
    pub fn violation(&mut self, detail: impl Into<String>) {
        self.violations.push(detail.into());
    }

    pub fn tally(&mut self, key: impl Into<String>) {
        self.tallies.push(key.into());
    }

    pub fn flag(&mut self, detail: impl Into<String>) {
        self.flags.push(detail.into());
    }

    /// Marks the word skipped when `err` is a circuit-cap overflow; any
    /// other error becomes a violation.
    pub fn absorb_error(&mut self, err: Error) {
        match err {
            Error::CircuitCapExceeded { .. } => self.skipped = true,
            other => self.violation(other.to_string()),
        }
    }
}

pub(crate) type Eval<'a> = dyn Fn(&[Symbol]) -> Outcome + Sync + 'a;

pub(crate) struct Phase<'a> {
    /// Checkpoint key; distinct per phase.
    pub key: &'static str,
    pub family: Family,
    pub min_len: usize,
    pub eval: &'a Eval<'a>,
}

fn absorb(report: &mut CheckReport, word: &[Symbol], outcome: Outcome) {
    let name = format_symbols(word);
    report.words_tested += 1;
    if outcome.skipped {
        report.skipped += 1;
    }
    for t in outcome.tallies {
        report.bump(t, 1);
    }
    for v in outcome.violations {
        report.violation(name.clone(), v);
    }
    for f in outcome.flags {
        report.flag(name.clone(), f);
    }
    if let Some((num, den)) = outcome.ratio.filter(|&(_, d)| d > 0) {
        report.observe_ratio(BoundRatio::new(num, den), &name);
    }
}

fn open_checkpoint(cfg: &SweepConfig) -> Checkpoint {
    let path = cfg.checkpoint_path.as_deref();
    Checkpoint::open(path).unwrap_or_else(|e| {
        log::warn!("{e}; starting the sweep from scratch");
        Checkpoint::fresh(path)
    })
}

/// Runs the phases in order over lengths `min_len..=cfg.max_length`.
pub(crate) fn run(cfg: &SweepConfig, check_id: &str, phases: &[Phase<'_>]) -> Result<CheckReport> {
    let k = cfg.alphabet_size;
    let mut checkpoint = open_checkpoint(cfg);
    let pool = if cfg.jobs > 1 {
        Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(cfg.jobs)
                .build()
                .map_err(|e| Error::InvalidState(format!("thread pool: {e}")))?,
        )
    } else {
        None
    };

    let mut total = CheckReport::new(check_id);
    for phase in phases {
        let key = if cfg.canonicalize {
            phase.key.to_string()
        } else {
            format!("{}/all", phase.key)
        };
        for n in phase.min_len.max(1)..=cfg.max_length {
            let words = phase.family.words(k, n, cfg.canonicalize);
            let (start, mut level) = match checkpoint.get(&key, k, n) {
                Some(rec) => {
                    match words
                        .iter()
                        .position(|w| format_symbols(w) == rec.last_word)
                    {
                        Some(i) => (i + 1, rec.report.clone()),
                        None => {
                            log::warn!("checkpoint word {} not found for {key} k={k} n={n}; redoing the level", rec.last_word);
                            (0, CheckReport::new(check_id))
                        }
                    }
                }
                None => (0, CheckReport::new(check_id)),
            };
            for chunk in words[start..].chunks(CHUNK) {
                let outcomes: Vec<Outcome> = match &pool {
                    Some(pool) => {
                        pool.install(|| chunk.par_iter().map(|w| (phase.eval)(w)).collect())
                    }
                    None => chunk.iter().map(|w| (phase.eval)(w)).collect(),
                };
                for (w, o) in chunk.iter().zip(outcomes) {
                    absorb(&mut level, w, o);
                }
                if checkpoint.is_enabled() {
                    let record = LevelRecord {
                        last_word: format_symbols(chunk.last().unwrap()),
                        report: level.clone(),
                    };
                    checkpoint.set(&key, k, n, record);
                    if let Err(e) = checkpoint.save() {
                        log::warn!("{e}; continuing without saving progress");
                    }
                }
            }
            total.merge(level);
        }
    }
    Ok(total)
}
