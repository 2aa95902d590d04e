//! Finite words, circular words and their elementary algebra.
//!
//! A [`Word`] is a nonempty sequence of dense symbol ids. Words parsed from
//! text keep the original characters so they print back unchanged; every
//! word derived from them (factors, rotations, powers) inherits the labels.

pub mod slice;

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;
use std::sync::Arc;

use num_integer::Integer;

use crate::error::{Error, Result};

/// A symbol id. Ids are dense from zero within a word's alphabet.
pub type Symbol = u8;

#[derive(Clone)]
pub struct Word {
    symbols: Vec<Symbol>,
    labels: Option<Arc<[char]>>,
}

impl Word {
    /// Builds a word from raw symbol ids.
    pub fn new(symbols: Vec<Symbol>) -> Result<Self> {
        if symbols.is_empty() {
            return Err(Error::InvalidInput("the empty word is not allowed".into()));
        }
        Ok(Self {
            symbols,
            labels: None,
        })
    }

    /// Parses an ASCII string, one character per symbol. Distinct characters
    /// are numbered by their sorted order, so `"cab"` gets ids `[2, 0, 1]`.
    pub fn parse(text: &str) -> Result<Self> {
        if text.is_empty() {
            return Err(Error::InvalidInput("the empty word is not allowed".into()));
        }
        if let Some(c) = text.chars().find(|c| !c.is_ascii_graphic()) {
            return Err(Error::InvalidInput(format!(
                "word must be printable ASCII without whitespace, found {c:?}"
            )));
        }
        let labels: Vec<char> = text.chars().collect::<BTreeSet<_>>().into_iter().collect();
        let symbols = text
            .chars()
            .map(|c| labels.binary_search(&c).unwrap() as Symbol)
            .collect();
        Ok(Self {
            symbols,
            labels: Some(labels.into()),
        })
    }

    /// Derives a word sharing this word's labels. `symbols` must be nonempty.
    pub(crate) fn derive(&self, symbols: Vec<Symbol>) -> Self {
        debug_assert!(!symbols.is_empty());
        Self {
            symbols,
            labels: self.labels.clone(),
        }
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    /// Always `false`; present for API symmetry with slices.
    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn labels(&self) -> Option<&[char]> {
        self.labels.as_deref()
    }

    /// Alph(w): the distinct symbol ids occurring in the word.
    pub fn alphabet(&self) -> BTreeSet<Symbol> {
        self.symbols.iter().copied().collect()
    }

    pub fn alphabet_size(&self) -> usize {
        slice::alphabet_size(&self.symbols)
    }

    /// The factor of length `len` starting at `start` (0-based).
    pub fn factor(&self, start: usize, len: usize) -> Result<Self> {
        if len == 0 || start + len > self.len() {
            return Err(Error::InvalidArgument(format!(
                "factor [{start}, {start}+{len}) out of range for length {}",
                self.len()
            )));
        }
        Ok(self.derive(self.symbols[start..start + len].to_vec()))
    }

    pub fn concat(&self, other: &Word) -> Self {
        let mut symbols = self.symbols.clone();
        symbols.extend_from_slice(&other.symbols);
        self.derive(symbols)
    }

    /// u^k for k >= 1.
    pub fn pow(&self, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidArgument("power exponent must be >= 1".into()));
        }
        Ok(self.derive(slice::power(&self.symbols, k)))
    }

    /// The n rotations `w_s(i) w_p(i-1)` for i = 1..n, in rotation order.
    pub fn rotations(&self) -> Vec<Word> {
        (0..self.len())
            .map(|i| self.derive(slice::rotate(&self.symbols, i)))
            .collect()
    }

    /// Lexicographically least rotation, in linear time.
    pub fn canonical_rotation(&self) -> Word {
        self.derive(slice::canonical_rotation(&self.symbols))
    }

    pub fn is_primitive(&self) -> bool {
        slice::is_primitive(&self.symbols)
    }

    pub fn primitive_root(&self) -> PrimitiveRoot {
        let l = slice::primitive_root_len(&self.symbols);
        PrimitiveRoot {
            root: self.derive(self.symbols[..l].to_vec()),
            exponent: self.len() / l,
        }
    }

    pub fn smallest_period(&self) -> usize {
        slice::smallest_period(&self.symbols)
    }

    pub fn has_period(&self, p: usize) -> bool {
        slice::has_period(&self.symbols, p)
    }

    /// Fac_m(w): the distinct factors of length `m`.
    pub fn factors(&self, m: usize) -> Result<BTreeSet<Word>> {
        if m == 0 || m > self.len() {
            return Err(Error::InvalidArgument(format!(
                "factor length {m} out of range 1..={}",
                self.len()
            )));
        }
        Ok(self
            .symbols
            .windows(m)
            .collect::<BTreeSet<_>>()
            .into_iter()
            .map(|s| self.derive(s.to_vec()))
            .collect())
    }

    /// [w]_m: the length-`m` factors of the periodic extension of `w`.
    ///
    /// Computed as `Fac_m(w^(floor(m/n) + 2))`, the least power of `w` in
    /// which every one of the `n` windows of length `m` starts.
    pub fn circular_factors(&self, m: usize) -> Result<BTreeSet<Word>> {
        if m == 0 {
            return Err(Error::InvalidArgument("factor length must be >= 1".into()));
        }
        self.pow(m / self.len() + 2)?.factors(m)
    }

    /// `|[w]_m|` without materializing the words.
    pub fn circular_factor_count(&self, m: usize) -> usize {
        circular_factor_count(&self.symbols, m)
    }

    /// The alpha-power `u^(num/|u|)`: the first `num` symbols of `u u u ...`.
    pub fn rational_power(&self, num: usize) -> Result<Word> {
        if num < self.len() {
            return Err(Error::InvalidArgument(format!(
                "rational power length {num} is shorter than the base length {}",
                self.len()
            )));
        }
        Ok(self.derive(slice::periodic_prefix(&self.symbols, num)))
    }

    pub fn reversed(&self) -> Word {
        self.derive(self.symbols.iter().rev().copied().collect())
    }

    /// Applies a symbol permutation. `perm[i]` is the new id of symbol `i`.
    pub fn permuted(&self, perm: &[Symbol]) -> Result<Word> {
        let symbols = self
            .symbols
            .iter()
            .map(|&c| perm.get(c as usize).copied())
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| {
                Error::InvalidArgument("permutation does not cover the alphabet".into())
            })?;
        Ok(Word {
            symbols,
            labels: None,
        })
    }
}

/// `|[s]_m|` for a nonempty slice `s`.
pub(crate) fn circular_factor_count(s: &[Symbol], m: usize) -> usize {
    let n = s.len();
    let ext = slice::periodic_prefix(s, n + m - 1);
    ext.windows(m)
        .collect::<std::collections::HashSet<_>>()
        .len()
}

/// Checks one instance of the Fine–Wilf periodicity theorem: if `w` has
/// periods `p` and `q` and `|w| >= p + q - gcd(p, q)`, then `gcd(p, q)` is
/// also a period. Returns whether the implication holds for this instance.
pub fn fine_wilf_check(w: &Word, p: usize, q: usize) -> Result<bool> {
    let n = w.len();
    if p == 0 || q == 0 || p > n || q > n {
        return Err(Error::InvalidArgument(format!(
            "periods must lie in 1..={n}, got {p} and {q}"
        )));
    }
    let g = p.gcd(&q);
    let hypotheses = w.has_period(p) && w.has_period(q) && n + g >= p + q;
    Ok(!hypotheses || w.has_period(g))
}

impl PartialEq for Word {
    fn eq(&self, other: &Self) -> bool {
        self.symbols == other.symbols
    }
}

impl Eq for Word {}

impl Hash for Word {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.symbols.hash(state);
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.symbols.cmp(&other.symbols)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.labels {
            Some(labels) => self
                .symbols
                .iter()
                .try_for_each(|&c| write!(f, "{}", labels[c as usize])),
            None => f.write_str(&format_symbols(&self.symbols)),
        }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Word::parse(s)
    }
}

/// Renders unlabeled symbols: letters `a..z` when every id fits, otherwise
/// `a0 a1 ...` tokens separated by dots.
pub fn format_symbols(symbols: &[Symbol]) -> String {
    if symbols.iter().all(|&c| c < 26) {
        symbols.iter().map(|&c| (b'a' + c) as char).collect()
    } else {
        symbols
            .iter()
            .map(|c| format!("a{c}"))
            .collect::<Vec<_>>()
            .join(".")
    }
}

/// The unique primitive `root` with `root^exponent = w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimitiveRoot {
    pub root: Word,
    pub exponent: usize,
}

/// A conjugacy class `[w]`, stored by its least rotation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CircularWord {
    canonical: Word,
}

impl CircularWord {
    pub fn new(w: &Word) -> Self {
        Self {
            canonical: w.canonical_rotation(),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        Ok(Self::new(&Word::parse(text)?))
    }

    pub fn canonical(&self) -> &Word {
        &self.canonical
    }

    pub fn len(&self) -> usize {
        self.canonical.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The distinct conjugates of the class.
    pub fn conjugates(&self) -> BTreeSet<Word> {
        self.canonical.rotations().into_iter().collect()
    }
}

impl From<&Word> for CircularWord {
    fn from(w: &Word) -> Self {
        Self::new(w)
    }
}

impl fmt::Display for CircularWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.canonical)
    }
}
