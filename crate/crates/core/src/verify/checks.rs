//! The individual checks. Each sweep check pairs a word family with a
//! per-word evaluation; the evaluations are plain functions of the word so
//! that they can run on any thread.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::report::CheckReport;
use super::sweep::{self, Family, Outcome, Phase};
use super::{CheckId, SweepConfig};
use crate::error::{Error, Result};
use crate::rauzy::{
    build_rauzy_graph, decompose_split, elementary_circuits, elementary_circuits_up_to,
    independent_rank, small_circuits, split_point_of, vector_cycle, Circuit, FactorIndex,
};
use crate::squares::{
    circular_square_count, class_decomposition, odd_even_formula, power_factors_circular,
    square_count,
};
use crate::words::{circular_factor_count, format_symbols, slice, CircularWord, Symbol, Word};

/// Random pairs per main-bound sweep used to spot-check that `Sq([w])` is
/// invariant under rotation, renaming and reversal.
const SPOT_CHECKS: usize = 1000;

fn word(s: &[Symbol]) -> Word {
    Word::new(s.to_vec()).expect("sweep words are nonempty")
}

fn ratio_outcome(sq: usize, n: usize) -> Outcome {
    Outcome {
        ratio: Some((sq as u64, n as u64)),
        ..Outcome::default()
    }
}

// ---------------------------------------------------------------- bounds

fn main_bound_eval(s: &[Symbol]) -> Outcome {
    let (n, sq) = (s.len(), circular_square_count(s));
    let mut o = ratio_outcome(sq, n);
    if 3 * sq > 5 * n {
        o.violation(format!("3·Sq([w]) = {} > 5n = {}", 3 * sq, 5 * n));
    }
    if 2 * sq > 3 * n {
        o.tally("above-3/2");
        o.flag(format!("Sq([w]) = {sq} exceeds 3n/2 for n = {n}"));
    }
    o
}

fn spot_check_symmetry(cfg: &SweepConfig, report: &mut CheckReport) {
    let k = cfg.alphabet_size;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..SPOT_CHECKS {
        let n = rng.random_range(1..=cfg.max_length);
        let w: Vec<Symbol> = (0..n).map(|_| rng.random_range(0..k) as Symbol).collect();
        let mut perm: Vec<Symbol> = (0..k as Symbol).collect();
        perm.shuffle(&mut rng);
        let mut v: Vec<Symbol> = slice::rotate(&w, rng.random_range(0..n))
            .iter()
            .map(|&c| perm[c as usize])
            .collect();
        if rng.random_bool(0.5) {
            v.reverse();
        }
        let (a, b) = (circular_square_count(&w), circular_square_count(&v));
        if a != b {
            report.violation(
                format_symbols(&w),
                format!(
                    "Sq differs on the equivalent word {}: {a} vs {b}",
                    format_symbols(&v)
                ),
            );
        }
    }
    report.bump("spot-checks", SPOT_CHECKS as u64);
}

/// `3 Sq([w]) <= 5 |w|` over circular words, plus the symmetry spot-check.
pub fn check_main_bound(cfg: &SweepConfig) -> Result<CheckReport> {
    cfg.validate()?;
    let eval = main_bound_eval;
    let mut report = sweep::run(
        cfg,
        CheckId::MainBound.as_str(),
        &[Phase {
            key: "main-bound",
            family: Family::Necklaces,
            min_len: 1,
            eval: &eval,
        }],
    )?;
    spot_check_symmetry(cfg, &mut report);
    Ok(report)
}

/// `2 Sq([w]) <= 3 |w|` over non-primitive circular words.
pub fn check_nonprimitive_bound(cfg: &SweepConfig) -> Result<CheckReport> {
    cfg.validate()?;
    let eval = |s: &[Symbol]| {
        let (n, sq) = (s.len(), circular_square_count(s));
        let mut o = ratio_outcome(sq, n);
        if 2 * sq > 3 * n {
            o.violation(format!("2·Sq([w]) = {} > 3n = {}", 2 * sq, 3 * n));
        }
        o
    };
    sweep::run(
        cfg,
        CheckId::NonprimitiveBound.as_str(),
        &[Phase {
            key: "nonprimitive-bound",
            family: Family::NonPrimitive,
            min_len: 2,
            eval: &eval,
        }],
    )
}

// ---------------------------------------------------------- independence

fn independence_eval(s: &[Symbol], cap: usize) -> Result<Outcome> {
    let w = word(s);
    let mut o = Outcome::default();
    let mut sc = 0;
    for i in 1..w.len() {
        let g = build_rauzy_graph(&w, i)?;
        let small = small_circuits(&g, cap)?;
        let vectors = small
            .iter()
            .map(|c| vector_cycle(c, &g))
            .collect::<Result<Vec<_>>>()?;
        let rank = independent_rank(&vectors)?;
        if rank != small.len() {
            o.violation(format!(
                "order {i}: {} small circuits span rank {rank}",
                small.len()
            ));
        }
        let all = elementary_circuits(&g, cap)?;
        let vectors = all
            .iter()
            .map(|c| vector_cycle(c, &g))
            .collect::<Result<Vec<_>>>()?;
        let chi = g.cyclomatic_number()?;
        let rank = independent_rank(&vectors)?;
        if rank > chi {
            o.violation(format!(
                "order {i}: circuits span rank {rank} > cyclomatic number {chi}"
            ));
        }
        sc += small.len();
    }
    let limit = w.len() - w.alphabet_size();
    if sc > limit {
        o.violation(format!("sc(w) = {sc} > |w| - |Alph(w)| = {limit}"));
    }
    o.ratio = Some((sc as u64, limit.max(1) as u64));
    Ok(o)
}

/// Small circuits are linearly independent at every order, no circuit
/// family exceeds the cyclomatic number, and `sc(w) <= |w| - |Alph(w)|`.
pub fn check_independence(cfg: &SweepConfig) -> Result<CheckReport> {
    cfg.validate()?;
    let cap = cfg.circuit_cap;
    let eval = |s: &[Symbol]| independence_eval(s, cap).unwrap_or_else(error_outcome);
    sweep::run(
        cfg,
        CheckId::Independence.as_str(),
        &[Phase {
            key: "independence",
            family: Family::Linear,
            min_len: 1,
            eval: &eval,
        }],
    )
}

fn error_outcome(e: Error) -> Outcome {
    let mut o = Outcome::default();
    o.absorb_error(e);
    o
}

// --------------------------------------------------------------- classes

fn class_parity_eval(s: &[Symbol]) -> Outcome {
    let w = word(s);
    let mut o = Outcome::default();
    let decomposition = class_decomposition(&w);
    for class in &decomposition.classes {
        let (l, t) = (class.root_length(), class.size());
        let (odd, even) = (class.odd.len(), class.even.len());
        let tag = format!(
            "class {} (l = {l}, t = {t}, |O| = {odd}, |E| = {even})",
            class.root
        );
        if !class.satisfies_parity_bounds() {
            o.violation(format!("{tag}: |O| <= |E| <= |O| + l fails"));
        }
        if !class.satisfies_odd_lower_bound() {
            o.violation(format!("{tag}: 2|O| + l >= t fails"));
        }
        if class.is_downward_closed() {
            o.tally("downward-closed");
            if odd_even_formula(t, l) != (odd, even) {
                o.violation(format!(
                    "{tag}: formula predicts {:?}",
                    odd_even_formula(t, l)
                ));
            }
        } else {
            o.tally("not-downward-closed");
        }
        o.tally("classes");
    }
    let sq = square_count(s);
    if decomposition.even_count() != sq {
        o.violation(format!(
            "sum |E_p| = {} but Sq(w) = {sq}",
            decomposition.even_count()
        ));
    }
    if sq > s.len() {
        o.violation(format!("Sq(w) = {sq} > |w|"));
    }
    o.ratio = Some((sq as u64, s.len() as u64));
    o
}

/// Per-class parity inequalities and the closed form for downward-closed
/// classes, over linear words.
pub fn check_class_parity(cfg: &SweepConfig) -> Result<CheckReport> {
    cfg.validate()?;
    let eval = class_parity_eval;
    sweep::run(
        cfg,
        CheckId::ClassParity.as_str(),
        &[Phase {
            key: "class-parity",
            family: Family::Linear,
            min_len: 1,
            eval: &eval,
        }],
    )
}

fn class_circuit_eval(s: &[Symbol], cap: usize) -> Result<Outcome> {
    let w = word(s);
    let n = w.len();
    let index = FactorIndex::new(s);
    let mut o = Outcome::default();
    // small circuits of every order, as (order, canonical label)
    let mut small: BTreeSet<(usize, Word)> = BTreeSet::new();
    for i in 1..n {
        for c in small_circuits(&build_rauzy_graph(&w, i)?, cap)? {
            small.insert((i, c.label().canonical_rotation()));
        }
    }
    let mut matched = BTreeSet::new();
    let mut expected = 0;
    for class in class_decomposition(&w).classes {
        let (p, l, t) = (&class.root, class.root_length(), class.size());
        expected += t;
        for order in l..l + t {
            let at = format!("C({p}, {order})");
            if order >= n {
                o.violation(format!("{at}: order exceeds |w| - 1"));
            } else if !index.contains_class_circuit(p.symbols(), order) {
                o.violation(format!("{at} is not contained in Γ_{order}(w)"));
            } else if circular_factor_count(p.symbols(), order) != l {
                o.violation(format!("{at} is not elementary"));
            } else if !small.contains(&(order, p.clone())) {
                o.violation(format!(
                    "{at} is missing from the small circuits of Γ_{order}(w)"
                ));
            } else {
                matched.insert((order, p.clone()));
            }
        }
    }
    if o.violations.is_empty() && matched.len() != expected {
        o.violation(format!(
            "{} class circuits for {expected} powers",
            matched.len()
        ));
    }
    o.tallies
        .extend(matched.iter().map(|_| "class-circuits".to_string()));
    Ok(o)
}

/// Every class of size `t` with root length `l` yields the small circuits
/// `C(p, l), ..., C(p, l + t - 1)`, one per power.
pub fn check_class_circuit_bijection(cfg: &SweepConfig) -> Result<CheckReport> {
    cfg.validate()?;
    let cap = cfg.circuit_cap;
    let eval = |s: &[Symbol]| class_circuit_eval(s, cap).unwrap_or_else(error_outcome);
    sweep::run(
        cfg,
        CheckId::ClassCircuit.as_str(),
        &[Phase {
            key: "class-circuit",
            family: Family::Linear,
            min_len: 1,
            eval: &eval,
        }],
    )
}

// ----------------------------------------------------------------- splits

fn split_sum_eval(s: &[Symbol]) -> Outcome {
    let mut o = Outcome::default();
    let Some(m) = split_point_of(s) else {
        o.tally("no-split");
        return o;
    };
    let p = word(s);
    match decompose_split(&p, m) {
        Ok(parts) => {
            let total: usize = parts.iter().map(Circuit::len).sum();
            if total != p.len() {
                o.violation(format!("C(p, {m}) splits into lengths summing to {total}"));
            }
            o.tally(format!("components-{}", parts.len()));
        }
        Err(e) => o.violation(e.to_string()),
    }
    o
}

fn small_no_split_eval(s: &[Symbol], cap: usize) -> Result<Outcome> {
    let w = word(s);
    let mut o = Outcome::default();
    for m in 2..w.len() {
        for c in small_circuits(&build_rauzy_graph(&w, m)?, cap)? {
            let q = c.label();
            o.tally("small-circuits");
            if circular_factor_count(q.symbols(), m - 1) != q.len() {
                o.violation(format!(
                    "small circuit C({q}, {m}) has |[q]_{}| < |q|",
                    m - 1
                ));
            }
        }
    }
    Ok(o)
}

/// Split components sum to `|p|` for primitive `p`; a small circuit
/// `C(p, m)` never has `|[p]_{m-1}| < |p|`.
pub fn check_split_observations(cfg: &SweepConfig) -> Result<CheckReport> {
    cfg.validate()?;
    let cap = cfg.circuit_cap;
    let sum = split_sum_eval;
    let no_split = |s: &[Symbol]| small_no_split_eval(s, cap).unwrap_or_else(error_outcome);
    sweep::run(
        cfg,
        CheckId::SplitObservations.as_str(),
        &[
            Phase {
                key: "split-sum",
                family: Family::Primitive,
                min_len: 1,
                eval: &sum,
            },
            Phase {
                key: "small-no-split",
                family: Family::Linear,
                min_len: 2,
                eval: &no_split,
            },
        ],
    )
}

// --------------------------------------------------------- large circuits

/// `(order, rank of sub-n/2 circuits, cyclomatic number)` for the top `l`
/// orders of `Γ(w^2)`.
fn large_circuit_orders(w: &[Symbol], l: usize, cap: usize) -> Result<Vec<(usize, usize, usize)>> {
    let n = w.len();
    let big = Word::new(slice::power(w, 2))?;
    let mut out = Vec::new();
    for i in n + 1 - l..=n {
        let g = build_rauzy_graph(&big, i)?;
        let circuits = elementary_circuits_up_to(&g, n / 2, cap)?;
        let vectors = circuits
            .iter()
            .map(|c| vector_cycle(c, &g))
            .collect::<Result<Vec<_>>>()?;
        out.push((i, independent_rank(&vectors)?, g.cyclomatic_number()?));
    }
    Ok(out)
}

fn large_circuit_hypotheses(w: &[Symbol], p: &[Symbol], k: usize) -> Result<()> {
    let (n, l) = (w.len(), p.len());
    let fail = |clause: &str| Err(Error::Precondition(format!("hypothesis fails: {clause}")));
    if l == 0 || !slice::is_primitive(p) {
        return fail("p is primitive");
    }
    if k < 4 {
        return fail("k >= 4");
    }
    if k * l >= n || n - k * l >= l {
        return fail("0 < n - k·l < l");
    }
    let power = slice::power(p, k);
    if !FactorIndex::new(&slice::power(w, 2)).contains(&power) {
        return fail("p^k is a factor of [w]");
    }
    Ok(())
}

fn large_circuit_outcome(w: &[Symbol], p: &[Symbol], k: usize, cap: usize) -> Result<Outcome> {
    large_circuit_hypotheses(w, p, k)?;
    let mut o = Outcome::default();
    for (i, rank, chi) in large_circuit_orders(w, p.len(), cap)? {
        o.tally("orders");
        if rank >= chi {
            o.violation(format!(
                "Γ_{i}(W): circuits of length <= n/2 span rank {rank}, cyclomatic number {chi}"
            ));
        }
    }
    Ok(o)
}

/// For one instance `(w, p, k)`: at every order `i` in `n-l+1..=n`, the
/// elementary circuits of `Γ_i(w^2)` of length at most `n/2` do not span
/// its cycle space, so every basis needs a longer circuit.
pub fn check_large_circuit_conclusion(
    w: &Word,
    p: &Word,
    k: usize,
    cap: usize,
) -> Result<CheckReport> {
    let outcome = large_circuit_outcome(w.symbols(), p.symbols(), k, cap)?;
    let mut report = CheckReport::new(CheckId::LargeCircuit.as_str());
    report.words_tested = 1;
    report.bump("instances", 1);
    for t in outcome.tallies {
        report.bump(t, 1);
    }
    let name = format!("{w} (p = {p}, k = {k})");
    for v in outcome.violations {
        report.violation(name.clone(), v);
    }
    Ok(report)
}

fn large_circuit_eval(s: &[Symbol], cap: usize) -> Outcome {
    let n = s.len();
    let mut o = Outcome::default();
    for l in 2..n {
        let (k, r) = (n / l, n % l);
        let p = &s[..l];
        if k < 4 || r == 0 || !slice::is_primitive(p) || s[..k * l] != slice::power(p, k)[..] {
            continue;
        }
        o.tally("instances");
        match large_circuit_outcome(s, p, k, cap) {
            Ok(sub) => {
                o.tallies.extend(sub.tallies);
                o.violations.extend(
                    sub.violations
                        .into_iter()
                        .map(|v| format!("p = {}: {v}", format_symbols(p))),
                );
            }
            Err(e) => {
                o.absorb_error(e);
            }
        }
    }
    o
}

/// [`check_large_circuit_conclusion`] over every `p^k x` with `k >= 4` and
/// `0 < |x| < |p|`.
pub fn check_large_circuit_sweep(cfg: &SweepConfig) -> Result<CheckReport> {
    cfg.validate()?;
    let cap = cfg.circuit_cap;
    let eval = |s: &[Symbol]| large_circuit_eval(s, cap);
    sweep::run(
        cfg,
        CheckId::LargeCircuit.as_str(),
        &[Phase {
            key: "large-circuit",
            family: Family::HighPower,
            min_len: 9,
            eval: &eval,
        }],
    )
}

// ------------------------------------------------------------------ cases

/// Which branch of the case analysis a circular word falls into.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "route", rename_all = "kebab-case")]
pub enum CaseRoute {
    /// `w` is a proper power: `Sq([w]) <= 3n/2`.
    NonPrimitive,
    /// Large circuits at every order from `n/2` up: `Sq([w]) <= 3n/2`.
    /// `split` is the split point of `C(w, .)`, `inner` that of the larger
    /// component when the split is two-way.
    Large {
        split: Option<usize>,
        inner: Option<usize>,
    },
    /// A circuit of length at most `n/4` at a split: `Sq([w]) <= 13n/8`.
    Quarter { split: usize, circuit: usize },
    /// A circuit of length in `(n/4, n/3]` at a split: `Sq([w]) <= 5n/3`.
    Third { split: usize, circuit: usize },
    /// None of the above; held to `5n/3`.
    Unclassified { reason: String },
}

impl CaseRoute {
    /// The bound `(num, den)`, meaning `den·Sq([w]) <= num·n`.
    pub fn bound(&self) -> (usize, usize) {
        match self {
            CaseRoute::NonPrimitive | CaseRoute::Large { .. } => (3, 2),
            CaseRoute::Quarter { .. } => (13, 8),
            CaseRoute::Third { .. } | CaseRoute::Unclassified { .. } => (5, 3),
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            CaseRoute::NonPrimitive => "nonprimitive",
            CaseRoute::Large { .. } => "case1",
            CaseRoute::Quarter { .. } => "case2",
            CaseRoute::Third { .. } => "case3",
            CaseRoute::Unclassified { .. } => "unclassified",
        }
    }
}

/// Routes by the shortest circuit among split components.
fn route_small(n: usize, split: usize, shortest: usize) -> CaseRoute {
    if 4 * shortest <= n {
        CaseRoute::Quarter {
            split,
            circuit: shortest,
        }
    } else if 3 * shortest <= n {
        CaseRoute::Third {
            split,
            circuit: shortest,
        }
    } else {
        CaseRoute::Unclassified {
            reason: format!("shortest circuit at the split {split} has length {shortest} > n/3"),
        }
    }
}

/// Classifies `w` by the split structure of `C(w, .)` in `Γ(w^2)`. Splits
/// at exactly `n/2` take the `3n/2` branch.
pub fn classify_case(w: &Word) -> Result<CaseRoute> {
    let n = w.len();
    if !w.is_primitive() {
        return Ok(CaseRoute::NonPrimitive);
    }
    let m = match split_point_of(w.symbols()) {
        Some(m) if 2 * m > n => m,
        split => return Ok(CaseRoute::Large { split, inner: None }),
    };
    let parts = decompose_split(w, m)?;
    if parts.len() > 2 {
        let shortest = parts.iter().map(Circuit::len).min().unwrap_or(0);
        return Ok(route_small(n, m, shortest));
    }
    let q1 = parts
        .iter()
        .max_by_key(|c| c.len())
        .expect("a split has components")
        .label();
    let inner = match split_point_of(q1.symbols()) {
        Some(m2) if 2 * m2 > n => m2,
        inner => {
            return Ok(CaseRoute::Large {
                split: Some(m),
                inner,
            })
        }
    };
    let shortest = decompose_split(&q1, inner)?
        .iter()
        .map(Circuit::len)
        .min()
        .unwrap_or(0);
    Ok(route_small(n, inner, shortest))
}

fn case_bounds_eval(s: &[Symbol]) -> Outcome {
    let (n, sq) = (s.len(), circular_square_count(s));
    let mut o = ratio_outcome(sq, n);
    let route = match classify_case(&word(s)) {
        Ok(route) => route,
        Err(e) => {
            o.violation(format!("classification failed: {e}"));
            return o;
        }
    };
    o.tally(route.tag());
    if let CaseRoute::Unclassified { reason } = &route {
        o.flag(reason.clone());
    }
    let (num, den) = route.bound();
    if den * sq > num * n {
        o.violation(format!(
            "{} route: Sq([w]) = {sq} > {num}n/{den} for n = {n}",
            route.tag()
        ));
    }
    o
}

/// The bound of each circular word's case route.
pub fn check_case_bounds(cfg: &SweepConfig) -> Result<CheckReport> {
    cfg.validate()?;
    let eval = case_bounds_eval;
    sweep::run(
        cfg,
        CheckId::CaseBounds.as_str(),
        &[Phase {
            key: "case-bounds",
            family: Family::Necklaces,
            min_len: 1,
            eval: &eval,
        }],
    )
}

// ------------------------------------------------------------ power chain

/// The quantities of the chain `|Power'(W)| = |sc'(W)| <= |sc(W)| <=
/// Indep(Γ(W)) <= 2n` for `W = w^2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerChain {
    pub n: usize,
    pub sq_circular: usize,
    /// Powers in `W` whose primitive root is shorter than `n/2`.
    pub power_prime: usize,
    /// Class circuits `C(q, l)` with `|q| < n/2` and
    /// `|q| <= l < |q| + |Class_q(W)|`, found in `Γ_l(W)`.
    pub sc_prime: usize,
    /// Small circuits of `Γ_l(W)`, `l <= n`, shorter than `n/2`.
    pub sc: usize,
    /// `sum_i χ(Γ_i(W))`.
    pub indep: usize,
    /// Structural facts that failed, if any.
    pub issues: Vec<String>,
}

impl PowerChain {
    pub fn holds(&self) -> bool {
        self.issues.is_empty()
            && self.sq_circular <= self.power_prime
            && self.power_prime == self.sc_prime
            && self.sc_prime <= self.sc
            && self.sc <= self.indep
            && self.indep <= 2 * self.n
    }
}

/// Computes the chain for a primitive `w`.
pub fn power_chain(w: &Word, cap: usize) -> Result<PowerChain> {
    if !w.is_primitive() {
        return Err(Error::Precondition(format!("{w} is not primitive")));
    }
    let n = w.len();
    let big = w.pow(2)?;
    let mut issues = Vec::new();

    let classes: Vec<_> = class_decomposition(&big)
        .classes
        .into_iter()
        .filter(|c| 2 * c.root_length() < n)
        .collect();
    let power_prime: usize = classes.iter().map(|c| c.size()).sum();
    let members: BTreeSet<&Word> = classes.iter().flat_map(|c| &c.members).collect();
    for q in power_factors_circular(&CircularWord::new(w)) {
        if !members.contains(&q) {
            issues.push(format!("{q} is in Power([w]) but not in Power'(W)"));
        }
    }

    let mut sc = BTreeSet::new();
    let mut indep = 0;
    for l in 1..2 * n {
        let g = build_rauzy_graph(&big, l)?;
        let chi = g.cyclomatic_number()?;
        indep += chi;
        if l > n {
            if chi != 0 {
                issues.push(format!(
                    "Γ_{l}(W) has cyclomatic number {chi} above order n"
                ));
            }
            continue;
        }
        if l == n {
            let all = elementary_circuits(&g, cap)?;
            if chi != 1 || all.len() != 1 || all[0].len() != n {
                issues.push(format!(
                    "Γ_n(W) is not a single circuit of length n ({} circuits)",
                    all.len()
                ));
            }
        }
        for c in elementary_circuits_up_to(&g, l.min((n - 1) / 2), cap)? {
            sc.insert((c.label().canonical_rotation(), l));
        }
    }

    let index = FactorIndex::new(big.symbols());
    let mut sc_prime = 0;
    for class in &classes {
        let (p, len) = (&class.root, class.root_length());
        for l in len..len + class.size() {
            if index.contains_class_circuit(p.symbols(), l) && sc.contains(&(p.clone(), l)) {
                sc_prime += 1;
            } else {
                issues.push(format!("C({p}, {l}) is not a small circuit of Γ_{l}(W)"));
            }
        }
    }

    Ok(PowerChain {
        n,
        sq_circular: circular_square_count(w.symbols()),
        power_prime,
        sc_prime,
        sc: sc.len(),
        indep,
        issues,
    })
}

fn power_chain_eval(s: &[Symbol], cap: usize) -> Outcome {
    let chain = match power_chain(&word(s), cap) {
        Ok(chain) => chain,
        Err(e) => return error_outcome(e),
    };
    let mut o = ratio_outcome(chain.indep, 2 * chain.n);
    if !chain.holds() {
        let PowerChain {
            n,
            sq_circular,
            power_prime,
            sc_prime,
            sc,
            indep,
            ..
        } = chain;
        o.violation(format!(
            "Sq = {sq_circular}, |Power'| = {power_prime}, |sc'| = {sc_prime}, |sc| = {sc}, Indep = {indep}, 2n = {}",
            2 * n
        ));
        o.violations.extend(chain.issues);
    }
    o
}

/// The chain for every primitive circular word.
pub fn check_power_chain(cfg: &SweepConfig) -> Result<CheckReport> {
    cfg.validate()?;
    let cap = cfg.circuit_cap;
    let eval = |s: &[Symbol]| power_chain_eval(s, cap);
    sweep::run(
        cfg,
        CheckId::PowerChain.as_str(),
        &[Phase {
            key: "power-chain",
            family: Family::Primitive,
            min_len: 1,
            eval: &eval,
        }],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rauzy::DEFAULT_CIRCUIT_CAP;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn cfg(k: usize, n: usize) -> SweepConfig {
        SweepConfig::new(k, n)
    }

    #[test]
    fn main_bound_small_sweeps() {
        let r = check_main_bound(&cfg(2, 4)).unwrap();
        assert!(r.passed());
        assert_eq!(r.max_ratio.unwrap().to_string(), "1/2");
        let r = check_main_bound(&cfg(1, 6)).unwrap();
        assert!(r.passed());
        assert_eq!(r.max_ratio.unwrap().to_string(), "1/2");
        let r = check_main_bound(&cfg(2, 1)).unwrap();
        assert_eq!(r.max_ratio.unwrap().to_string(), "0/1");
        assert_eq!(r.tally("spot-checks"), 1000);
    }

    #[test]
    fn nonprimitive_bound_sweep() {
        let r = check_nonprimitive_bound(&cfg(2, 10)).unwrap();
        assert!(r.passed());
        assert!(r.words_tested > 0);
    }

    #[test]
    fn word_level_evaluations() {
        let o = independence_eval(w("aaa").symbols(), DEFAULT_CIRCUIT_CAP).unwrap();
        assert!(o.violations.is_empty());
        assert_eq!(o.ratio, Some((2, 2)));
        let o = independence_eval(w("abc").symbols(), DEFAULT_CIRCUIT_CAP).unwrap();
        assert_eq!(o.ratio, Some((0, 1)));

        for s in ["aaaaaa", "abacabacabac", "abc", "aabb"] {
            let o = class_circuit_eval(w(s).symbols(), DEFAULT_CIRCUIT_CAP).unwrap();
            assert!(o.violations.is_empty(), "{s}: {:?}", o.violations);
            assert!(class_parity_eval(w(s).symbols()).violations.is_empty());
        }
        // a^6: one class of size 5
        assert_eq!(
            class_circuit_eval(w("aaaaaa").symbols(), DEFAULT_CIRCUIT_CAP)
                .unwrap()
                .tallies
                .len(),
            5
        );
    }

    #[test]
    fn case_routes() {
        assert_eq!(
            classify_case(&w("abc")).unwrap(),
            CaseRoute::Large {
                split: None,
                inner: None
            }
        );
        assert_eq!(classify_case(&w("abab")).unwrap(), CaseRoute::NonPrimitive);
        let route = classify_case(&w("aabb")).unwrap();
        assert!(
            case_bounds_eval(w("aabb").symbols()).violations.is_empty(),
            "{route:?}"
        );
    }

    #[test]
    fn power_chain_examples() {
        let c = power_chain(&w("ab"), DEFAULT_CIRCUIT_CAP).unwrap();
        assert!(c.holds(), "{c:?}");
        let c = power_chain(&w("aab"), DEFAULT_CIRCUIT_CAP).unwrap();
        assert!(c.holds(), "{c:?}");
        assert_eq!(c.power_prime, 1);
        assert!(power_chain(&w("abab"), DEFAULT_CIRCUIT_CAP).is_err());
    }

    #[test]
    fn large_circuit_examples() {
        let r = check_large_circuit_conclusion(&w("ababababc"), &w("ab"), 4, DEFAULT_CIRCUIT_CAP)
            .unwrap();
        assert!(r.passed(), "{:?}", r.violations);
        assert_eq!(r.tally("orders"), 2);
        let r =
            check_large_circuit_conclusion(&w("abcabcabcabca"), &w("abc"), 4, DEFAULT_CIRCUIT_CAP)
                .unwrap();
        assert!(r.passed(), "{:?}", r.violations);
        assert_eq!(r.tally("orders"), 3);
        let err = check_large_circuit_conclusion(&w("abababc"), &w("ab"), 3, DEFAULT_CIRCUIT_CAP)
            .unwrap_err();
        assert!(matches!(err, Error::Precondition(m) if m.contains("k >= 4")));
    }

    #[test]
    fn split_observations_small() {
        let r = check_split_observations(&cfg(2, 6)).unwrap();
        assert!(r.passed(), "{:?}", r.violations);
    }
}
