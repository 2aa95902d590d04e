//! Algorithms over raw symbol slices.
//!
//! These are the hot paths used by the sweeps; the [`Word`](super::Word)
//! methods are thin wrappers around them.

use super::Symbol;

/// Border array (KMP failure function): `border[i]` is the length of the
/// longest proper border of `s[..=i]`.
pub fn borders(s: &[Symbol]) -> Vec<usize> {
    let mut border = vec![0; s.len()];
    let mut k = 0;
    for i in 1..s.len() {
        while k > 0 && s[i] != s[k] {
            k = border[k - 1];
        }
        if s[i] == s[k] {
            k += 1;
        }
        border[i] = k;
    }
    border
}

/// Least `p >= 1` such that `s[i] == s[i + p]` wherever both sides exist.
pub fn smallest_period(s: &[Symbol]) -> usize {
    match s.len() {
        0 => 0,
        n => n - borders(s)[n - 1],
    }
}

pub fn has_period(s: &[Symbol], p: usize) -> bool {
    p >= 1 && s.iter().zip(s.iter().skip(p)).all(|(a, b)| a == b)
}

/// Length of the primitive root of a nonempty slice.
pub fn primitive_root_len(s: &[Symbol]) -> usize {
    let n = s.len();
    let p = smallest_period(s);
    if n % p == 0 {
        p
    } else {
        n
    }
}

pub fn is_primitive(s: &[Symbol]) -> bool {
    primitive_root_len(s) == s.len()
}

/// Start index of the lexicographically least rotation (Booth's algorithm).
///
/// For periodic inputs the smallest such index is returned.
pub fn least_rotation(s: &[Symbol]) -> usize {
    let n = s.len();
    if n == 0 {
        return 0;
    }
    let at = |i: usize| s[i % n];
    let mut failure: Vec<isize> = vec![-1; 2 * n];
    let mut k = 0usize;
    for j in 1..2 * n {
        let sj = at(j);
        let mut i = failure[j - k - 1];
        while i != -1 && sj != at(k + i as usize + 1) {
            if sj < at(k + i as usize + 1) {
                k = j - i as usize - 1;
            }
            i = failure[i as usize];
        }
        if i == -1 && sj != at(k) {
            if sj < at(k) {
                k = j;
            }
            failure[j - k] = -1;
        } else {
            failure[j - k] = i + 1;
        }
    }
    k
}

pub fn rotate(s: &[Symbol], start: usize) -> Vec<Symbol> {
    let mut out = Vec::with_capacity(s.len());
    out.extend_from_slice(&s[start..]);
    out.extend_from_slice(&s[..start]);
    out
}

pub fn canonical_rotation(s: &[Symbol]) -> Vec<Symbol> {
    rotate(s, least_rotation(s))
}

/// `s` repeated `times` times.
pub fn power(s: &[Symbol], times: usize) -> Vec<Symbol> {
    s.repeat(times)
}

/// The first `len` symbols of the infinite periodic word `s s s ...`.
pub fn periodic_prefix(s: &[Symbol], len: usize) -> Vec<Symbol> {
    s.iter().copied().cycle().take(len).collect()
}

/// `true` iff `s` has the form `uu`.
pub fn is_square(s: &[Symbol]) -> bool {
    let n = s.len();
    n >= 2 && n % 2 == 0 && s[..n / 2] == s[n / 2..]
}

/// Relabels symbols in first-occurrence order (`baab` -> `abba`).
pub fn rename_first_occurrence(s: &[Symbol]) -> Vec<Symbol> {
    let mut map = [Symbol::MAX; 256];
    let mut next = 0;
    s.iter()
        .map(|&c| {
            let slot = &mut map[c as usize];
            if *slot == Symbol::MAX {
                *slot = next;
                next += 1;
            }
            *slot
        })
        .collect()
}

pub fn alphabet_size(s: &[Symbol]) -> usize {
    let mut seen = [false; 256];
    s.iter().for_each(|&c| seen[c as usize] = true);
    seen.iter().filter(|&&b| b).count()
}
