//! Class circuits `C(p, l) = ([p]_l, [p]_{l+1})`, small-circuit counts and
//! splits.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use super::{build_rauzy_graph, elementary_circuits_up_to, Circuit, RauzyGraph};
use crate::error::{Error, Result};
use crate::words::{circular_factor_count, slice, Symbol, Word};

/// The subgraph `([p]_l, [p]_{l+1})` induced by a primitive word `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassCircuit {
    pub root: Word,
    pub order: usize,
    pub vertex_set: BTreeSet<Word>,
    pub edge_set: BTreeSet<Word>,
    /// `|[p]_l| = |p|`.
    pub is_elementary: bool,
    /// `|p| <= l`.
    pub is_small: bool,
}

fn require_primitive(p: &Word) -> Result<()> {
    if p.is_primitive() {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("{p} is not primitive")))
    }
}

pub fn class_circuit(p: &Word, l: usize) -> Result<ClassCircuit> {
    require_primitive(p)?;
    if l == 0 {
        return Err(Error::InvalidArgument(
            "class circuit order must be >= 1".into(),
        ));
    }
    let vertex_set = p.circular_factors(l)?;
    let edge_set = p.circular_factors(l + 1)?;
    Ok(ClassCircuit {
        root: p.clone(),
        order: l,
        is_elementary: vertex_set.len() == p.len(),
        is_small: p.len() <= l,
        vertex_set,
        edge_set,
    })
}

impl ClassCircuit {
    pub fn graph(&self) -> Result<RauzyGraph> {
        RauzyGraph::from_factors(self.order, self.vertex_set.clone(), self.edge_set.clone())
    }
}

/// Factor sets of one word, by length.
pub struct FactorIndex<'a> {
    word: &'a [Symbol],
    by_len: Vec<HashSet<&'a [Symbol]>>,
}

impl<'a> FactorIndex<'a> {
    pub fn new(word: &'a [Symbol]) -> Self {
        let by_len = (0..=word.len())
            .map(|m| {
                if m == 0 {
                    HashSet::new()
                } else {
                    word.windows(m).collect()
                }
            })
            .collect();
        Self { word, by_len }
    }

    pub fn word(&self) -> &'a [Symbol] {
        self.word
    }

    pub fn count(&self, m: usize) -> usize {
        self.by_len.get(m).map_or(0, HashSet::len)
    }

    pub fn contains(&self, f: &[Symbol]) -> bool {
        self.by_len.get(f.len()).is_some_and(|s| s.contains(f))
    }

    /// `[p]_m ⊆ Fac_m(word)`.
    pub fn contains_circular_factors(&self, p: &[Symbol], m: usize) -> bool {
        if m > self.word.len() {
            return false;
        }
        let ext = slice::periodic_prefix(p, p.len() + m - 1);
        ext.windows(m).all(|f| self.by_len[m].contains(f))
    }

    /// Whether `C(p, l)` lies in `Γ_l(word)`.
    pub fn contains_class_circuit(&self, p: &[Symbol], l: usize) -> bool {
        l >= 1 && self.contains_circular_factors(p, l) && self.contains_circular_factors(p, l + 1)
    }
}

/// Whether `[p]_l ⊆ Fac_l(w)` and `[p]_{l+1} ⊆ Fac_{l+1}(w)`.
pub fn contains_class_circuit(w: &Word, p: &Word, l: usize) -> Result<bool> {
    require_primitive(p)?;
    if l == 0 || l >= w.len() {
        return Err(Error::InvalidArgument(format!(
            "order {l} out of range 1..={} for a word of length {}",
            w.len() - 1,
            w.len()
        )));
    }
    Ok(FactorIndex::new(w.symbols()).contains_class_circuit(p.symbols(), l))
}

/// sc_i(w) per order and their sum sc(w).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SmallCircuitProfile {
    pub per_order: BTreeMap<usize, usize>,
    pub total: usize,
}

/// Elementary circuits of length at most the graph's order.
pub fn small_circuits(g: &RauzyGraph, cap: usize) -> Result<Vec<Circuit>> {
    elementary_circuits_up_to(g, g.order(), cap)
}

/// Counts small circuits of `Γ_i(w)` for every order `1 <= i < |w|`;
/// `Γ_{|w|}(w)` has no edges and contributes nothing.
pub fn small_circuit_profile(w: &Word, cap: usize) -> Result<SmallCircuitProfile> {
    let mut profile = SmallCircuitProfile::default();
    for i in 1..w.len() {
        let count = small_circuits(&build_rauzy_graph(w, i)?, cap)?.len();
        profile.per_order.insert(i, count);
        profile.total += count;
    }
    Ok(profile)
}

/// The largest `m` with `|[p]_m| < |p|`, i.e. where `C(p, m)` stops being
/// elementary while `C(p, l)` is elementary for every `l > m`. `None` when
/// `|[p]_1| = |p|`.
pub fn split_point(p: &Word) -> Result<Option<usize>> {
    require_primitive(p)?;
    Ok(split_point_of(p.symbols()))
}

pub(crate) fn split_point_of(p: &[Symbol]) -> Option<usize> {
    (1..p.len())
        .rev()
        .find(|&m| circular_factor_count(p, m) < p.len())
}

/// Decomposes `C(p, m)` at the split point `m` into pairwise edge-disjoint
/// elementary circuits covering every edge. The decomposition follows the
/// closed walk spelled by the least rotation of `p`, cutting off a circuit
/// whenever the walk revisits a vertex; the lengths therefore sum to `|p|`.
/// (The set of all elementary circuits of `C(p, m)` can overlap, e.g. for
/// `p = aababb`, so it is not used.)
pub fn decompose_split(p: &Word, m: usize) -> Result<Vec<Circuit>> {
    match split_point(p)? {
        Some(split) if split == m => {}
        other => {
            return Err(Error::InvalidArgument(format!(
                "C({p}, .) splits at {}, not at {m}",
                other.map_or("no order".to_string(), |s| s.to_string())
            )))
        }
    }
    let q = p.canonical_rotation();
    let len = q.len();
    let ext = slice::periodic_prefix(q.symbols(), len + m + 1);
    let vertex = |j: usize| &ext[j % len..j % len + m];
    let edge = |j: usize| q.derive(ext[j..j + m + 1].to_vec());

    let mut path: Vec<&[Symbol]> = vec![vertex(0)];
    let mut pending: Vec<Word> = Vec::new();
    let mut circuits = Vec::new();
    for j in 0..len {
        pending.push(edge(j));
        let next = vertex(j + 1);
        match path.iter().position(|&v| v == next) {
            Some(at) => {
                let cut = pending.len() - (path.len() - at);
                circuits.push(Circuit::from_edges(pending.split_off(cut))?);
                path.truncate(at + 1);
            }
            None => path.push(next),
        }
    }
    if !pending.is_empty() {
        return Err(Error::InvalidState(format!(
            "the walk of {q} at order {m} does not close"
        )));
    }
    let edges: BTreeSet<&Word> = circuits.iter().flat_map(|c| c.edges()).collect();
    if edges.len() != len || circular_factor_count(q.symbols(), m + 1) != len {
        return Err(Error::InvalidState(format!(
            "circuits of C({p}, {m}) are not edge-disjoint"
        )));
    }
    Ok(circuits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rauzy::DEFAULT_CIRCUIT_CAP;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn lengths(cs: &[Circuit]) -> Vec<usize> {
        cs.iter().map(Circuit::len).collect()
    }

    #[test]
    fn class_circuit_examples() {
        let c = class_circuit(&w("abac"), 2).unwrap();
        assert!(c.is_elementary && !c.is_small);
        assert_eq!(c.vertex_set.len(), 4);
        let c = class_circuit(&w("abac"), 1).unwrap();
        assert!(!c.is_elementary);
        assert_eq!(c.vertex_set.len(), 3);
        let c = class_circuit(&w("a"), 1).unwrap();
        assert!(c.is_elementary && c.is_small);
        assert!(matches!(
            class_circuit(&w("abab"), 2),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn contains_class_circuit_examples() {
        let p3 = w("abacabacabac");
        let p = w("abac");
        assert!(contains_class_circuit(&p3, &p, 4).unwrap());
        assert_eq!(p3.factors(10).unwrap().len(), 3);
        assert!(!contains_class_circuit(&p3, &p, 9).unwrap());
        assert!(contains_class_circuit(&w("abab"), &w("ab"), 2).unwrap());
        assert!(contains_class_circuit(&w("abab"), &w("ab"), 4).is_err());
        assert!(contains_class_circuit(&w("abab"), &w("abab"), 1).is_err());
    }

    #[test]
    fn small_circuit_profile_examples() {
        assert_eq!(
            small_circuit_profile(&w("ab"), DEFAULT_CIRCUIT_CAP)
                .unwrap()
                .total,
            0
        );

        let aaa = small_circuit_profile(&w("aaa"), DEFAULT_CIRCUIT_CAP).unwrap();
        assert_eq!(aaa.per_order, BTreeMap::from([(1, 1), (2, 1)]));
        assert_eq!(aaa.total, 2);

        // p^3 for p = abac: C(p, l) is small in Γ_l for l = 4..8.
        let p3 = w("abacabacabac");
        let profile = small_circuit_profile(&p3, DEFAULT_CIRCUIT_CAP).unwrap();
        for l in 4..=8 {
            assert_eq!(profile.per_order[&l], 1, "order {l}");
            let g = build_rauzy_graph(&p3, l).unwrap();
            let cs = small_circuits(&g, DEFAULT_CIRCUIT_CAP).unwrap();
            assert_eq!(cs[0].label().canonical_rotation().to_string(), "abac");
        }
        assert!(profile.total >= 5);
        assert!(profile.total <= p3.len() - p3.alphabet_size());
    }

    #[test]
    fn split_point_examples() {
        assert_eq!(split_point(&w("abac")).unwrap(), Some(1));
        assert_eq!(split_point(&w("ab")).unwrap(), None);
        assert_eq!(split_point(&w("aab")).unwrap(), Some(1));
        assert_eq!(split_point(&w("aabab")).unwrap(), Some(3));
        assert!(matches!(
            split_point(&w("aa")),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn decompose_split_examples() {
        let cs = decompose_split(&w("abac"), 1).unwrap();
        assert_eq!(lengths(&cs), [2, 2]);

        let cs = decompose_split(&w("aab"), 1).unwrap();
        let mut ls = lengths(&cs);
        ls.sort();
        assert_eq!(ls, [1, 2]);

        let m = split_point(&w("aabab")).unwrap().unwrap();
        let cs = decompose_split(&w("aabab"), m).unwrap();
        assert_eq!(lengths(&cs).iter().sum::<usize>(), 5);

        // its elementary circuits overlap; the walk still splits cleanly
        let cs = decompose_split(&w("aababb"), 2).unwrap();
        assert_eq!(lengths(&cs).iter().sum::<usize>(), 6);
        assert!(
            crate::rauzy::elementary_circuits(
                &class_circuit(&w("aababb"), 2).unwrap().graph().unwrap(),
                100
            )
            .unwrap()
            .len()
                > cs.len()
        );

        assert!(matches!(
            decompose_split(&w("abac"), 2),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(
            decompose_split(&w("ab"), 1),
            Err(Error::InvalidArgument(_))
        ));
    }
}
