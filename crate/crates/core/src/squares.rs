//! Distinct squares and power factors of linear and circular words, and
//! the decomposition of power factors into classes of conjugate roots.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use crate::words::{slice, CircularWord, Symbol, Word};

/// A set of distinct nonempty squares `uu`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SquareSet {
    squares: BTreeSet<Word>,
}

impl SquareSet {
    pub fn count(&self) -> usize {
        self.squares.len()
    }

    pub fn squares(&self) -> &BTreeSet<Word> {
        &self.squares
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.squares.contains(w)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Word> {
        self.squares.iter()
    }
}

impl IntoIterator for SquareSet {
    type Item = Word;
    type IntoIter = std::collections::btree_set::IntoIter<Word>;

    fn into_iter(self) -> Self::IntoIter {
        self.squares.into_iter()
    }
}

/// Naive scan: every factor `s[i..i+2h]` whose halves agree.
fn squares_in<'a>(s: &'a [Symbol], max_len: usize, out: &mut HashSet<&'a [Symbol]>) {
    let n = s.len();
    for i in 0..n {
        let mut h = 1;
        while i + 2 * h <= n && 2 * h <= max_len {
            if s[i..i + h] == s[i + h..i + 2 * h] {
                out.insert(&s[i..i + 2 * h]);
            }
            h += 1;
        }
    }
}

fn collect(host: &Word, found: HashSet<&[Symbol]>) -> SquareSet {
    SquareSet {
        squares: found.into_iter().map(|s| host.derive(s.to_vec())).collect(),
    }
}

/// Sq(w): the distinct nonempty squares occurring in `w`.
pub fn distinct_squares(w: &Word) -> SquareSet {
    let mut found = HashSet::new();
    squares_in(w.symbols(), w.len(), &mut found);
    collect(w, found)
}

/// Sq([w]): the union of the distinct squares of every conjugate.
pub fn distinct_squares_circular(cw: &CircularWord) -> SquareSet {
    let conjugates = cw.canonical().rotations();
    let mut found = HashSet::new();
    for v in &conjugates {
        squares_in(v.symbols(), v.len(), &mut found);
    }
    let squares = found
        .into_iter()
        .map(|s| cw.canonical().derive(s.to_vec()))
        .collect();
    SquareSet { squares }
}

/// The squares of `w^2` of length at most `|w|`. Equal to
/// [`distinct_squares_circular`] and kept as its independent oracle.
pub fn distinct_squares_circular_via_doubling(cw: &CircularWord) -> SquareSet {
    let w = cw.canonical();
    let doubled = slice::power(w.symbols(), 2);
    let mut found = HashSet::new();
    squares_in(&doubled, w.len(), &mut found);
    collect(w, found)
}

/// `Sq([s])` for a raw nonempty slice; the sweep hot path.
pub fn circular_square_count(s: &[Symbol]) -> usize {
    let n = s.len();
    let mut found: HashSet<&[Symbol]> = HashSet::new();
    let rotations: Vec<Vec<Symbol>> = (0..n).map(|i| slice::rotate(s, i)).collect();
    for v in &rotations {
        squares_in(v, n, &mut found);
    }
    found.len()
}

/// `Sq(s)` for a raw slice.
pub fn square_count(s: &[Symbol]) -> usize {
    let mut found = HashSet::new();
    squares_in(s, s.len(), &mut found);
    found.len()
}

/// Power(w): factors `p^k` with `k >= 2`.
pub fn power_factors(w: &Word) -> BTreeSet<Word> {
    let mut out = BTreeSet::new();
    insert_powers(w, w.symbols(), &mut out);
    out
}

fn insert_powers(host: &Word, s: &[Symbol], out: &mut BTreeSet<Word>) {
    let distinct: HashSet<&[Symbol]> = (2..=s.len()).flat_map(|m| s.windows(m)).collect();
    for f in distinct {
        if !slice::is_primitive(f) {
            out.insert(host.derive(f.to_vec()));
        }
    }
}

/// Power([w]): the union of `Power(v)` over the conjugates `v` of `w`.
pub fn power_factors_circular(cw: &CircularWord) -> BTreeSet<Word> {
    let mut out = BTreeSet::new();
    for v in cw.canonical().rotations() {
        insert_powers(cw.canonical(), v.symbols(), &mut out);
    }
    out
}

/// `Class_p(w)` for one conjugacy class `[p]` of primitive roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerClass {
    /// Canonical (least) rotation of the primitive root.
    pub root: Word,
    pub members: BTreeSet<Word>,
    /// Members with even exponent over the primitive root.
    pub even: BTreeSet<Word>,
    pub odd: BTreeSet<Word>,
}

impl PowerClass {
    /// `l = |p|`.
    pub fn root_length(&self) -> usize {
        self.root.len()
    }

    /// `t = |Class_p(w)|`.
    pub fn size(&self) -> usize {
        self.members.len()
    }

    /// `|O_p| <= |E_p| <= |O_p| + l`.
    pub fn satisfies_parity_bounds(&self) -> bool {
        let (o, e) = (self.odd.len(), self.even.len());
        o <= e && e <= o + self.root_length()
    }

    /// `|O_p| >= (t - l) / 2`, compared in integers.
    pub fn satisfies_odd_lower_bound(&self) -> bool {
        2 * self.odd.len() + self.root_length() >= self.size()
    }

    /// Member counts indexed by exponent over the primitive root.
    pub fn exponent_histogram(&self) -> BTreeMap<usize, usize> {
        let mut hist = BTreeMap::new();
        for m in &self.members {
            *hist.entry(m.len() / self.root_length()).or_insert(0) += 1;
        }
        hist
    }

    /// Whether the class consists of every `q^i` with `q` conjugate to `p`
    /// and `2 <= i <= r + 1`, plus `s` powers of exponent `r + 2`, where
    /// `t = r l + s` with `0 <= s < l`.
    pub fn is_downward_closed(&self) -> bool {
        let (l, t) = (self.root_length(), self.size());
        let (r, s) = (t / l, t % l);
        let hist = self.exponent_histogram();
        let expected = (2..=r + 1)
            .map(|i| (i, l))
            .chain((s > 0).then_some((r + 2, s)));
        hist.into_iter().eq(expected)
    }
}

/// The partition of `Power(host)` into classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassDecomposition {
    pub host: Word,
    /// Sorted by canonical root.
    pub classes: Vec<PowerClass>,
}

impl ClassDecomposition {
    pub fn power_count(&self) -> usize {
        self.classes.iter().map(PowerClass::size).sum()
    }

    /// `sum |E_p|`, which equals `Sq(host)`.
    pub fn even_count(&self) -> usize {
        self.classes.iter().map(|c| c.even.len()).sum()
    }

    pub fn class_of(&self, root: &Word) -> Option<&PowerClass> {
        let key = root.canonical_rotation();
        self.classes.iter().find(|c| c.root == key)
    }
}

/// Splits `Power(w)` into classes keyed by the least rotation of the
/// primitive root; the even/odd split is by exponent parity.
pub fn class_decomposition(w: &Word) -> ClassDecomposition {
    let mut classes: BTreeMap<Word, PowerClass> = BTreeMap::new();
    for q in power_factors(w) {
        let root = q.primitive_root();
        let key = root.root.canonical_rotation();
        let class = classes.entry(key.clone()).or_insert_with(|| PowerClass {
            root: key,
            members: BTreeSet::new(),
            even: BTreeSet::new(),
            odd: BTreeSet::new(),
        });
        if root.exponent % 2 == 0 {
            class.even.insert(q.clone());
        } else {
            class.odd.insert(q.clone());
        }
        class.members.insert(q);
    }
    ClassDecomposition {
        host: w.clone(),
        classes: classes.into_values().collect(),
    }
}

/// Predicted `(|O_p|, |E_p|)` for a downward-closed class of size `t` with
/// root length `l`: write `t = r l + s`; if `r` is even the answer is
/// `(r/2 l, r/2 l + s)`, otherwise `((r-1)/2 l + s, (r+1)/2 l)`.
pub fn odd_even_formula(t: usize, l: usize) -> (usize, usize) {
    assert!(l >= 1, "root length must be positive");
    let (r, s) = (t / l, t % l);
    if r % 2 == 0 {
        (r / 2 * l, r / 2 * l + s)
    } else {
        ((r - 1) / 2 * l + s, r.div_ceil(2) * l)
    }
}

/// Machine-readable summary of one word's squares and classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SquareReport {
    pub word: String,
    pub n: usize,
    pub sq: usize,
    pub sq_circular: usize,
    pub classes: Vec<ClassSummary>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassSummary {
    pub root: String,
    pub l: usize,
    pub t: usize,
    pub even: usize,
    pub odd: usize,
}

impl SquareReport {
    pub fn new(w: &Word) -> Self {
        let decomposition = class_decomposition(w);
        Self {
            word: w.to_string(),
            n: w.len(),
            sq: distinct_squares(w).count(),
            sq_circular: distinct_squares_circular(&CircularWord::new(w)).count(),
            classes: decomposition
                .classes
                .iter()
                .map(|c| ClassSummary {
                    root: c.root.to_string(),
                    l: c.root_length(),
                    t: c.size(),
                    even: c.even.len(),
                    odd: c.odd.len(),
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn cw(s: &str) -> CircularWord {
        CircularWord::parse(s).unwrap()
    }

    fn names<'a>(it: impl IntoIterator<Item = &'a Word>) -> BTreeSet<String> {
        it.into_iter().map(ToString::to_string).collect()
    }

    fn set(items: &[&str]) -> BTreeSet<String> {
        items.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn linear_square_examples() {
        assert_eq!(names(distinct_squares(&w("aabaa")).iter()), set(&["aa"]));
        assert_eq!(distinct_squares(&w("ab")).count(), 0);
        let p3 = distinct_squares(&w("abacabacabac"));
        assert_eq!(
            names(p3.iter()),
            set(&["abacabac", "bacabaca", "acabacab", "cabacaba"])
        );
    }

    #[test]
    fn circular_square_examples() {
        assert_eq!(distinct_squares_circular(&cw("ab")).count(), 0);
        assert_eq!(
            names(distinct_squares_circular(&cw("aabb")).iter()),
            set(&["aa", "bb"])
        );
        assert_eq!(
            names(distinct_squares_circular(&cw("aa")).iter()),
            set(&["aa"])
        );
        assert_eq!(circular_square_count(&[0, 0, 1, 1]), 2);
    }

    #[test]
    fn doubling_oracle_examples() {
        let d = |s: &str| names(distinct_squares_circular_via_doubling(&cw(s)).iter());
        assert_eq!(d("aabb"), set(&["aa", "bb"]));
        assert!(d("ab").is_empty());
        assert_eq!(d("aaa"), set(&["aa"]));
    }

    #[test]
    fn power_factor_examples() {
        assert_eq!(names(&power_factors(&w("aaa"))), set(&["aa", "aaa"]));
        assert_eq!(names(&power_factors(&w("abab"))), set(&["abab"]));
        assert!(power_factors(&w("abc")).is_empty());
        assert_eq!(
            names(&power_factors_circular(&cw("abab"))),
            set(&["abab", "baba"])
        );
        assert!(power_factors_circular(&cw("abc")).is_empty());
        assert_eq!(
            names(&power_factors_circular(&cw("aaa"))),
            set(&["aa", "aaa"])
        );
    }

    #[test]
    fn class_decomposition_examples() {
        let d = class_decomposition(&w("aaaaaa"));
        assert_eq!(d.classes.len(), 1);
        let c = &d.classes[0];
        assert_eq!(c.root.to_string(), "a");
        assert_eq!(c.size(), 5);
        assert_eq!(names(&c.even), set(&["aa", "aaaa", "aaaaaa"]));
        assert_eq!(names(&c.odd), set(&["aaa", "aaaaa"]));
        assert!(c.is_downward_closed());
        assert_eq!(odd_even_formula(5, 1), (c.odd.len(), c.even.len()));

        let d = class_decomposition(&w("abacabacabac"));
        assert_eq!(d.classes.len(), 1);
        let c = &d.classes[0];
        assert_eq!(c.root.to_string(), "abac");
        assert_eq!((c.size(), c.even.len(), c.odd.len()), (5, 4, 1));
        assert!(c.is_downward_closed());
        assert_eq!(odd_even_formula(5, 4), (1, 4));

        assert!(class_decomposition(&w("abc")).classes.is_empty());
    }

    #[test]
    fn odd_even_formula_examples() {
        assert_eq!(odd_even_formula(5, 1), (2, 3));
        assert_eq!(odd_even_formula(5, 4), (1, 4));
        assert_eq!(odd_even_formula(0, 3), (0, 0));
    }

    #[test]
    fn downward_closed_detection() {
        // Class of [ab] in "abab": only abab (t = 1 = 0*2 + 1), i.e. one
        // square with exponent 2 out of the two conjugates.
        let d = class_decomposition(&w("abab"));
        assert!(d.classes[0].is_downward_closed());
        // "aabaa": class [a] = {aa} (t = 1, l = 1): r = 1, s = 0, needs a^2 only.
        let d = class_decomposition(&w("aabaa"));
        assert!(d.classes[0].is_downward_closed());
    }

    #[test]
    fn report_fields() {
        let r = SquareReport::new(&w("aabb"));
        assert_eq!((r.n, r.sq, r.sq_circular), (4, 2, 2));
        assert_eq!(r.classes.len(), 2);
        assert_eq!(r.classes[0].root, "a");
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(serde_json::from_str::<SquareReport>(&json).unwrap(), r);
    }
}
