//! Rauzy graphs of finite words.
//!
//! `Γ_i(w)` has the length-`i` factors of `w` as vertices and the
//! length-`i+1` factors as edges; an edge runs from its length-`i` prefix to
//! its length-`i` suffix. Between two vertices there is at most one edge, so
//! a circuit is determined by its vertex sequence.

mod circuits;
mod classes;
mod dot;
mod rank;

use std::collections::BTreeSet;

pub use circuits::{elementary_circuits, elementary_circuits_up_to, Circuit, DEFAULT_CIRCUIT_CAP};
pub use classes::{
    class_circuit, contains_class_circuit, decompose_split, small_circuit_profile, small_circuits,
    split_point, ClassCircuit, FactorIndex, SmallCircuitProfile,
};
pub use rank::{independent_rank, vector_cycle};

pub(crate) use classes::split_point_of;

use crate::error::{Error, Result};
use crate::words::Word;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RauzyGraph {
    order: usize,
    /// Sorted lexicographically.
    vertices: Vec<Word>,
    /// Sorted lexicographically; this is the edge order of vector-cycles.
    edges: Vec<Word>,
    source: Vec<usize>,
    target: Vec<usize>,
    /// Outgoing edge ids per vertex.
    out_edges: Vec<Vec<usize>>,
}

/// Γ_i(w) for `1 <= i <= |w| - 1`.
pub fn build_rauzy_graph(w: &Word, i: usize) -> Result<RauzyGraph> {
    if i == 0 || i >= w.len() {
        return Err(Error::InvalidArgument(format!(
            "Rauzy graph order {i} out of range 1..={} for a word of length {}",
            w.len().saturating_sub(1),
            w.len()
        )));
    }
    RauzyGraph::from_factors(i, w.factors(i)?, w.factors(i + 1)?)
}

impl RauzyGraph {
    /// Builds the graph on an explicit vertex and edge set, e.g. the class
    /// subgraph `([p]_l, [p]_{l+1})`.
    pub fn from_factors(
        order: usize,
        vertices: BTreeSet<Word>,
        edges: BTreeSet<Word>,
    ) -> Result<Self> {
        let vertices: Vec<Word> = vertices.into_iter().collect();
        let edges: Vec<Word> = edges.into_iter().collect();
        if let Some(v) = vertices.iter().find(|v| v.len() != order) {
            return Err(Error::InvalidArgument(format!(
                "vertex {v} is not of length {order}"
            )));
        }
        let mut source = Vec::with_capacity(edges.len());
        let mut target = Vec::with_capacity(edges.len());
        let mut out_edges = vec![Vec::new(); vertices.len()];
        for (id, e) in edges.iter().enumerate() {
            if e.len() != order + 1 {
                return Err(Error::InvalidArgument(format!(
                    "edge {e} is not of length {}",
                    order + 1
                )));
            }
            let find = |s: &[u8]| {
                vertices
                    .binary_search_by(|v| v.symbols().cmp(s))
                    .map_err(|_| {
                        Error::InvalidArgument(format!(
                            "edge {e} has an endpoint outside the vertex set"
                        ))
                    })
            };
            let from = find(&e.symbols()[..order])?;
            let to = find(&e.symbols()[1..])?;
            source.push(from);
            target.push(to);
            out_edges[from].push(id);
        }
        Ok(Self {
            order,
            vertices,
            edges,
            source,
            target,
            out_edges,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn vertices(&self) -> &[Word] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Word] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_index(&self, v: &Word) -> Option<usize> {
        self.vertices.binary_search(v).ok()
    }

    pub fn edge_index(&self, e: &Word) -> Option<usize> {
        self.edges.binary_search(e).ok()
    }

    /// Start vertex of edge `e` (its prefix).
    pub fn source(&self, e: usize) -> usize {
        self.source[e]
    }

    /// End vertex of edge `e` (its suffix).
    pub fn target(&self, e: usize) -> usize {
        self.target[e]
    }

    pub fn out_edges(&self, v: usize) -> &[usize] {
        &self.out_edges[v]
    }

    /// The edge from `u` to `v`, if any.
    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        self.out_edges[u]
            .iter()
            .copied()
            .find(|&e| self.target[e] == v)
    }

    /// Whether the underlying undirected graph is connected.
    pub fn is_weakly_connected(&self) -> bool {
        let n = self.vertices.len();
        if n <= 1 {
            return true;
        }
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut components = n;
        for e in 0..self.edges.len() {
            let (a, b) = (
                find(&mut parent, self.source[e]),
                find(&mut parent, self.target[e]),
            );
            if a != b {
                parent[a] = b;
                components -= 1;
            }
        }
        components == 1
    }

    /// χ(G) = |E| - |V| + 1.
    pub fn cyclomatic_number(&self) -> Result<usize> {
        if !self.is_weakly_connected() {
            return Err(Error::InvalidState(
                "the cyclomatic number needs a weakly connected graph".into(),
            ));
        }
        Ok(self.edges.len() + 1 - self.vertices.len())
    }

    pub fn to_dot(&self) -> String {
        dot::to_dot(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn names(ws: &[Word]) -> Vec<String> {
        ws.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn abac_graphs_match_the_worked_example() {
        let p3 = w("abacabacabac");
        let g1 = build_rauzy_graph(&p3, 1).unwrap();
        assert_eq!(names(g1.vertices()), ["a", "b", "c"]);
        assert_eq!(names(g1.edges()), ["ab", "ac", "ba", "ca"]);
        assert_eq!(g1.cyclomatic_number().unwrap(), 2);
        assert!(g1.is_weakly_connected());

        let g2 = build_rauzy_graph(&p3, 2).unwrap();
        assert_eq!(names(g2.vertices()), ["ab", "ac", "ba", "ca"]);
        assert_eq!(names(g2.edges()), ["aba", "aca", "bac", "cab"]);
        assert_eq!(g2.cyclomatic_number().unwrap(), 1);
        // aba: ab -> ba
        let e = g2.edge_index(&w("aba")).unwrap();
        assert_eq!(g2.vertices()[g2.source(e)].to_string(), "ab");
        assert_eq!(g2.vertices()[g2.target(e)].to_string(), "ba");

        let g = build_rauzy_graph(&w("ab"), 1).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (2, 1));
        assert_eq!(g.cyclomatic_number().unwrap(), 0);
    }

    #[test]
    fn order_out_of_range() {
        assert!(matches!(
            build_rauzy_graph(&w("ab"), 0),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(
            build_rauzy_graph(&w("ab"), 2),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn connectivity_of_explicit_graphs() {
        let single = RauzyGraph::from_factors(1, [w("a")].into(), BTreeSet::new()).unwrap();
        assert!(single.is_weakly_connected());
        assert_eq!(single.cyclomatic_number().unwrap(), 0);

        // a path a -> b -> c has no cycle
        let path = RauzyGraph::from_factors(
            1,
            [
                w("abc").factor(0, 1).unwrap(),
                w("abc").factor(1, 1).unwrap(),
                w("abc").factor(2, 1).unwrap(),
            ]
            .into(),
            [
                w("abc").factor(0, 2).unwrap(),
                w("abc").factor(1, 2).unwrap(),
            ]
            .into(),
        )
        .unwrap();
        assert_eq!(path.cyclomatic_number().unwrap(), 0);

        let split = RauzyGraph::from_factors(
            1,
            [w("ab").factor(0, 1).unwrap(), w("ab").factor(1, 1).unwrap()].into(),
            BTreeSet::new(),
        )
        .unwrap();
        assert!(!split.is_weakly_connected());
        assert!(matches!(
            split.cyclomatic_number(),
            Err(Error::InvalidState(_))
        ));
    }

    #[test]
    fn rejects_dangling_edges() {
        let r = RauzyGraph::from_factors(1, [w("a")].into(), [w("ab")].into());
        assert!(matches!(r, Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn every_rauzy_graph_is_weakly_connected() {
        for n in 2..=10u32 {
            for code in 0..2usize.pow(n) {
                let s: Vec<u8> = (0..n).map(|i| ((code >> i) & 1) as u8).collect();
                let word = Word::new(s).unwrap();
                for i in 1..word.len() {
                    assert!(
                        build_rauzy_graph(&word, i).unwrap().is_weakly_connected(),
                        "{word} {i}"
                    );
                }
            }
        }
    }
}
