//! Search for circular words with many distinct squares.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::enumerate::canonical_necklaces;
use super::report::{BoundRatio, CheckReport};
use crate::error::{Error, Result};
use crate::squares::circular_square_count;
use crate::words::{format_symbols, Symbol};

/// Failed mutations in a row before a hill climb restarts.
fn patience(n: usize, k: usize) -> usize {
    4 * n * k
}

/// Maximizes `Sq([w])` over words of length `n` on `k` letters within
/// `budget` evaluations: exhaustively over canonical necklaces when
/// `k^n <= budget`, otherwise by hill climbing over single-symbol mutations
/// with random restarts. Fails the report if the best word beats `5n/3`;
/// tallies record whether it beats `5n/4` and `3n/2`.
pub fn search_extremal(n: usize, k: usize, budget: u64, seed: u64) -> Result<CheckReport> {
    if n == 0 {
        return Err(Error::InvalidArgument("length must be >= 1".into()));
    }
    if k == 0 || k > 26 {
        return Err(Error::InvalidArgument(format!(
            "alphabet size must lie in 1..=26, got {k}"
        )));
    }
    if budget == 0 {
        return Err(Error::InvalidArgument("budget must be >= 1".into()));
    }
    let mut report = CheckReport::new("search");
    let mut best: Option<(usize, Vec<Symbol>)> = None;
    let mut consider = |w: &[Symbol], report: &mut CheckReport| -> usize {
        let sq = circular_square_count(w);
        report.words_tested += 1;
        if best.as_ref().is_none_or(|(b, _)| sq > *b) {
            best = Some((sq, w.to_vec()));
        }
        sq
    };

    let exhaustive = (k as f64).powi(n as i32) <= budget as f64;
    if exhaustive {
        report.bump("exhaustive", 1);
        for w in canonical_necklaces(k, n) {
            consider(&w, &mut report);
        }
    } else {
        report.bump("hill-climb", 1);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        'search: while report.words_tested < budget {
            report.bump("restarts", 1);
            let mut w: Vec<Symbol> = (0..n).map(|_| rng.random_range(0..k) as Symbol).collect();
            let mut score = consider(&w, &mut report);
            let mut stale = 0;
            while stale < patience(n, k) {
                if report.words_tested >= budget {
                    break 'search;
                }
                let i = rng.random_range(0..n);
                let old = w[i];
                // any symbol but the current one
                let c = rng.random_range(0..k - 1) as Symbol;
                w[i] = if c >= old { c + 1 } else { c };
                let s = consider(&w, &mut report);
                if s > score {
                    score = s;
                    stale = 0;
                } else {
                    // sideways moves are kept to drift across plateaus
                    if s < score {
                        w[i] = old;
                    }
                    stale += 1;
                }
            }
        }
    }

    let (sq, w) = best.expect("at least one word is evaluated");
    report.observe_ratio(BoundRatio::new(sq as u64, n as u64), format_symbols(&w));
    if 4 * sq > 5 * n {
        report.bump("exceeds-5/4", 1);
    }
    if 2 * sq > 3 * n {
        report.bump("exceeds-3/2", 1);
    }
    if 3 * sq > 5 * n {
        report.violation(
            format_symbols(&w),
            format!("Sq([w]) = {sq} > 5n/3 for n = {n}"),
        );
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exhaustive_examples() {
        let r = search_extremal(4, 2, 1 << 20, 0).unwrap();
        assert_eq!(r.max_ratio.unwrap().to_string(), "1/2");
        assert_eq!(r.tally("exhaustive"), 1);
        let r = search_extremal(6, 1, 10, 0).unwrap();
        assert_eq!(r.max_ratio.unwrap().to_string(), "1/2");
        assert_eq!(r.witness.as_deref(), Some("aaaaaa"));
        let r = search_extremal(2, 2, 10, 0).unwrap();
        assert_eq!(r.witness.as_deref(), Some("aa"));
    }

    #[test]
    fn hill_climbing_respects_the_budget_and_seed() {
        let a = search_extremal(30, 3, 2000, 7).unwrap();
        assert_eq!(a.words_tested, 2000);
        assert_eq!(a.tally("hill-climb"), 1);
        assert!(a.passed());
        assert_eq!(a, search_extremal(30, 3, 2000, 7).unwrap());
    }
}
