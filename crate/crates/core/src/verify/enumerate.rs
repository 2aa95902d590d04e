//! Word families for the sweeps. Every generator returns its words in
//! lexicographic order, which checkpoints rely on.

use std::collections::BTreeSet;

use crate::words::{slice, Symbol};

/// All `k^n` words of length `n` over `0..k`.
pub fn all_words(k: usize, n: usize) -> Vec<Vec<Symbol>> {
    let mut out = Vec::new();
    if k == 0 {
        return out;
    }
    let mut w = vec![0 as Symbol; n];
    loop {
        out.push(w.clone());
        // odometer, last position fastest
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if (w[i] as usize) + 1 < k {
                w[i] += 1;
                w[i + 1..].iter_mut().for_each(|c| *c = 0);
                break;
            }
        }
    }
}

/// Words whose symbols first appear in the order `0, 1, 2, ...`: one
/// representative per orbit under renaming the alphabet.
pub fn renaming_canonical(k: usize, n: usize) -> Vec<Vec<Symbol>> {
    fn extend(k: usize, n: usize, w: &mut Vec<Symbol>, used: usize, out: &mut Vec<Vec<Symbol>>) {
        if w.len() == n {
            out.push(w.clone());
            return;
        }
        for c in 0..k.min(used + 1) {
            w.push(c as Symbol);
            extend(k, n, w, used.max(c + 1), out);
            w.pop();
        }
    }
    let mut out = Vec::new();
    if k > 0 {
        extend(k, n, &mut Vec::with_capacity(n), 0, &mut out);
    }
    out
}

/// Canonical form under rotation and renaming: the least first-occurrence
/// renaming over all rotations.
pub fn necklace_canonical_form(s: &[Symbol]) -> Vec<Symbol> {
    (0..s.len())
        .map(|i| slice::rename_first_occurrence(&slice::rotate(s, i)))
        .min()
        .unwrap_or_default()
}

/// Necklaces of length `n` over `0..k` in lexicographic order
/// (Fredricksen–Kessler–Maiorana). With `lyndon_only`, aperiodic ones only.
pub fn necklaces(k: usize, n: usize, lyndon_only: bool) -> Vec<Vec<Symbol>> {
    fn gen(
        t: usize,
        p: usize,
        k: usize,
        n: usize,
        lyndon: bool,
        a: &mut [Symbol],
        out: &mut Vec<Vec<Symbol>>,
    ) {
        if t > n {
            if (lyndon && p == n) || (!lyndon && n % p == 0) {
                out.push(a[1..].to_vec());
            }
            return;
        }
        a[t] = a[t - p];
        gen(t + 1, p, k, n, lyndon, a, out);
        for j in (a[t - p] as usize + 1)..k {
            a[t] = j as Symbol;
            gen(t + 1, t, k, n, lyndon, a, out);
        }
    }
    let mut out = Vec::new();
    if k == 0 || n == 0 {
        return out;
    }
    let mut a = vec![0 as Symbol; n + 1];
    gen(1, 1, k, n, lyndon_only, &mut a, &mut out);
    out
}

/// One word per class under rotation and renaming.
pub fn canonical_necklaces(k: usize, n: usize) -> Vec<Vec<Symbol>> {
    necklaces(k, n, false)
        .into_iter()
        .filter(|w| necklace_canonical_form(w) == *w)
        .collect()
}

/// Primitive members of [`canonical_necklaces`].
pub fn canonical_lyndon(k: usize, n: usize) -> Vec<Vec<Symbol>> {
    necklaces(k, n, true)
        .into_iter()
        .filter(|w| necklace_canonical_form(w) == *w)
        .collect()
}

/// Non-primitive members of [`canonical_necklaces`], built as `u^e` from
/// canonical primitive roots `u` with `e >= 2`.
pub fn canonical_nonprimitive(k: usize, n: usize) -> Vec<Vec<Symbol>> {
    let mut out: Vec<Vec<Symbol>> = (1..n)
        .filter(|d| n % d == 0)
        .flat_map(|d| {
            canonical_lyndon(k, d)
                .into_iter()
                .map(move |u| slice::power(&u, n / d))
        })
        .collect();
    out.sort();
    out
}

/// Words `p^e x` with `p` primitive of length `l >= 2` (renaming canonical),
/// `e >= 4` and `x` any word with `0 < |x| < l`, of total length `n`.
pub fn high_power_instances(k: usize, n: usize, canonical: bool) -> Vec<Vec<Symbol>> {
    let mut out = BTreeSet::new();
    for l in 2..n {
        let (e, r) = (n / l, n % l);
        if e < 4 || r == 0 {
            continue;
        }
        let roots = if canonical {
            renaming_canonical(k, l)
        } else {
            all_words(k, l)
        };
        for p in roots.into_iter().filter(|p| slice::is_primitive(p)) {
            let head = slice::power(&p, e);
            for x in all_words(k, r) {
                let mut w = head.clone();
                w.extend_from_slice(&x);
                out.insert(w);
            }
        }
    }
    out.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn necklace_count(k: u64, n: u64) -> u64 {
        // (1/n) sum_{d | n} phi(d) k^{n/d}
        let phi = |d: u64| (1..=d).filter(|&i| num_integer::gcd(i, d) == 1).count() as u64;
        (1..=n)
            .filter(|d| n % d == 0)
            .map(|d| phi(d) * k.pow((n / d) as u32))
            .sum::<u64>()
            / n
    }

    #[test]
    fn counts_match_closed_forms() {
        assert_eq!(all_words(3, 4).len(), 81);
        assert_eq!(all_words(1, 5), vec![vec![0; 5]]);
        for n in 1..=10 {
            assert_eq!(
                necklaces(2, n, false).len() as u64,
                necklace_count(2, n as u64)
            );
            assert_eq!(
                necklaces(3, n, false).len() as u64,
                necklace_count(3, n as u64)
            );
        }
        // Lyndon words of length 6 over 2 letters: 9
        assert_eq!(necklaces(2, 6, true).len(), 9);
        // Stirling numbers: S(5,1)+S(5,2) = 1 + 15
        assert_eq!(renaming_canonical(2, 5).len(), 16);
        // Bell-like: S(5,1)+S(5,2)+S(5,3) = 1 + 15 + 25
        assert_eq!(renaming_canonical(3, 5).len(), 41);
    }

    #[test]
    fn generators_are_sorted() {
        for k in 1..=3 {
            for n in 1..=8 {
                for family in [
                    all_words(k, n),
                    renaming_canonical(k, n),
                    canonical_necklaces(k, n),
                    canonical_lyndon(k, n),
                    canonical_nonprimitive(k, n),
                    high_power_instances(k, n + 6, true),
                ] {
                    assert!(family.windows(2).all(|p| p[0] < p[1]), "k={k} n={n}");
                }
            }
        }
    }

    #[test]
    fn canonical_necklaces_cover_every_orbit_once() {
        for k in 1..=3 {
            for n in 1..=8 {
                let orbits: BTreeSet<_> = all_words(k, n)
                    .iter()
                    .map(|w| necklace_canonical_form(w))
                    .collect();
                let reps = canonical_necklaces(k, n);
                assert_eq!(reps.len(), orbits.len(), "k={k} n={n}");
                assert!(reps.iter().all(|r| orbits.contains(r)));

                let prim: Vec<_> = reps
                    .iter()
                    .filter(|w| slice::is_primitive(w))
                    .cloned()
                    .collect();
                assert_eq!(canonical_lyndon(k, n), prim);
                let nonprim: Vec<_> = reps
                    .iter()
                    .filter(|w| !slice::is_primitive(w))
                    .cloned()
                    .collect();
                assert_eq!(canonical_nonprimitive(k, n), nonprim);
            }
        }
    }

    #[test]
    fn high_power_instance_shapes() {
        // (ab)^4 followed by one letter
        let words = high_power_instances(2, 9, true);
        assert_eq!(
            words,
            vec![
                vec![0, 1, 0, 1, 0, 1, 0, 1, 0],
                vec![0, 1, 0, 1, 0, 1, 0, 1, 1]
            ]
        );
        assert!(high_power_instances(2, 8, true).is_empty());
    }
}
