//! Elementary circuit enumeration.

use std::fmt;

use super::RauzyGraph;
use crate::error::{Error, Result};
use crate::words::Word;

/// Enumeration aborts past this many circuits unless told otherwise.
pub const DEFAULT_CIRCUIT_CAP: usize = 1_000_000;

/// An elementary directed circuit, stored as its edge words in traversal
/// order starting from its least vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Circuit {
    edges: Vec<Word>,
}

impl Circuit {
    /// Builds a circuit from edge words, checking that they chain and close
    /// up and that no vertex repeats. The sequence is rotated to start at
    /// the least vertex.
    pub fn from_edges(edges: Vec<Word>) -> Result<Self> {
        let Some(first) = edges.first() else {
            return Err(Error::InvalidArgument(
                "a circuit needs at least one edge".into(),
            ));
        };
        let order = first.len() - 1;
        if order == 0 || edges.iter().any(|e| e.len() != order + 1) {
            return Err(Error::InvalidArgument(
                "circuit edges must share one length >= 2".into(),
            ));
        }
        let k = edges.len();
        for j in 0..k {
            let (a, b) = (&edges[j], &edges[(j + 1) % k]);
            if a.symbols()[1..] != b.symbols()[..order] {
                return Err(Error::InvalidArgument(format!(
                    "edges {a} and {b} do not chain"
                )));
            }
        }
        let mut starts: Vec<&[u8]> = edges.iter().map(|e| &e.symbols()[..order]).collect();
        starts.sort_unstable();
        if starts.windows(2).any(|p| p[0] == p[1]) {
            return Err(Error::InvalidArgument("circuit is not elementary".into()));
        }
        Ok(Self::canonical(edges))
    }

    fn canonical(mut edges: Vec<Word>) -> Self {
        let start = (0..edges.len())
            .min_by(|&a, &b| {
                let order = edges[a].len() - 1;
                edges[a].symbols()[..order].cmp(&edges[b].symbols()[..order])
            })
            .unwrap_or(0);
        edges.rotate_left(start);
        Self { edges }
    }

    fn from_vertex_cycle(g: &RauzyGraph, cycle: &[usize]) -> Self {
        let k = cycle.len();
        let edges = (0..k)
            .map(|j| {
                let e = g
                    .edge_between(cycle[j], cycle[(j + 1) % k])
                    .expect("enumerated cycles follow graph edges");
                g.edges()[e].clone()
            })
            .collect();
        Self::canonical(edges)
    }

    /// Number of edges, which equals the number of vertices.
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[Word] {
        &self.edges
    }

    pub fn order(&self) -> usize {
        self.edges[0].len() - 1
    }

    /// Start vertices in traversal order.
    pub fn vertices(&self) -> Vec<Word> {
        let order = self.order();
        self.edges
            .iter()
            .map(|e| e.derive(e.symbols()[..order].to_vec()))
            .collect()
    }

    /// Small means no longer than the order of the graph it lives in.
    pub fn is_small(&self) -> bool {
        self.len() <= self.order()
    }

    /// The primitive word `q` spelled by the circuit: the first symbols of
    /// its vertices in order, so that the circuit is `C(q, order)`.
    pub fn label(&self) -> Word {
        let first = &self.edges[0];
        first.derive(self.edges.iter().map(|e| e.symbols()[0]).collect())
    }
}

impl fmt::Display for Circuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in self.vertices() {
            write!(f, "{v} -> ")?;
        }
        write!(f, "{}", self.vertices()[0])
    }
}

/// All elementary circuits of `g` (Johnson's algorithm), each once, in
/// order of their least vertex. Fails once more than `cap` are found.
pub fn elementary_circuits(g: &RauzyGraph, cap: usize) -> Result<Vec<Circuit>> {
    let mut search = Johnson::new(g, cap);
    for s in 0..g.vertex_count() {
        let scc = search.component_of(s);
        if scc.len() > 1 || g.edge_between(s, s).is_some() {
            search.start = s;
            search.in_scc = vec![false; g.vertex_count()];
            for &v in &scc {
                search.in_scc[v] = true;
                search.blocked[v] = false;
                search.blocked_by[v].clear();
            }
            search.circuit(s)?;
        }
    }
    let mut out = search.found;
    out.sort();
    Ok(out)
}

/// Elementary circuits of length at most `max_len`, by bounded depth-first
/// search from each start vertex over larger vertices only.
pub fn elementary_circuits_up_to(
    g: &RauzyGraph,
    max_len: usize,
    cap: usize,
) -> Result<Vec<Circuit>> {
    let mut found = Vec::new();
    let mut on_path = vec![false; g.vertex_count()];
    let mut path = Vec::new();
    for s in 0..g.vertex_count() {
        path.push(s);
        on_path[s] = true;
        bounded(g, s, max_len, cap, &mut path, &mut on_path, &mut found)?;
        on_path[s] = false;
        path.pop();
    }
    found.sort();
    Ok(found)
}

fn bounded(
    g: &RauzyGraph,
    start: usize,
    max_len: usize,
    cap: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    found: &mut Vec<Circuit>,
) -> Result<()> {
    let v = *path.last().unwrap();
    for &e in g.out_edges(v) {
        let t = g.target(e);
        if t == start {
            if found.len() == cap {
                return Err(Error::CircuitCapExceeded { cap });
            }
            found.push(Circuit::from_vertex_cycle(g, path));
        } else if t > start && !on_path[t] && path.len() < max_len {
            path.push(t);
            on_path[t] = true;
            bounded(g, start, max_len, cap, path, on_path, found)?;
            on_path[t] = false;
            path.pop();
        }
    }
    Ok(())
}

struct Johnson<'g> {
    g: &'g RauzyGraph,
    cap: usize,
    start: usize,
    in_scc: Vec<bool>,
    blocked: Vec<bool>,
    blocked_by: Vec<Vec<usize>>,
    stack: Vec<usize>,
    found: Vec<Circuit>,
}

impl<'g> Johnson<'g> {
    fn new(g: &'g RauzyGraph, cap: usize) -> Self {
        let n = g.vertex_count();
        Self {
            g,
            cap,
            start: 0,
            in_scc: vec![false; n],
            blocked: vec![false; n],
            blocked_by: vec![Vec::new(); n],
            stack: Vec::new(),
            found: Vec::new(),
        }
    }

    fn successors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.g
            .out_edges(v)
            .iter()
            .map(|&e| self.g.target(e))
            .filter(|&t| self.in_scc[t])
    }

    /// Strongly connected component of `s` within the subgraph induced by
    /// vertices `>= s`: the vertices reachable from `s` that reach back.
    fn component_of(&self, s: usize) -> Vec<usize> {
        let n = self.g.vertex_count();
        let mut forward = vec![false; n];
        let mut todo = vec![s];
        forward[s] = true;
        while let Some(v) = todo.pop() {
            for &e in self.g.out_edges(v) {
                let t = self.g.target(e);
                if t >= s && !forward[t] {
                    forward[t] = true;
                    todo.push(t);
                }
            }
        }
        // reverse reachability restricted to the forward set
        let mut backward = vec![false; n];
        backward[s] = true;
        let mut changed = true;
        while changed {
            changed = false;
            for e in 0..self.g.edge_count() {
                let (a, b) = (self.g.source(e), self.g.target(e));
                if forward[a] && backward[b] && !backward[a] {
                    backward[a] = true;
                    changed = true;
                }
            }
        }
        (s..n).filter(|&v| forward[v] && backward[v]).collect()
    }

    fn unblock(&mut self, u: usize) {
        self.blocked[u] = false;
        for w in std::mem::take(&mut self.blocked_by[u]) {
            if self.blocked[w] {
                self.unblock(w);
            }
        }
    }

    fn circuit(&mut self, v: usize) -> Result<bool> {
        let mut closed = false;
        self.stack.push(v);
        self.blocked[v] = true;
        let successors: Vec<usize> = self.successors(v).collect();
        for &w in &successors {
            if w == self.start {
                if self.found.len() == self.cap {
                    return Err(Error::CircuitCapExceeded { cap: self.cap });
                }
                self.found
                    .push(Circuit::from_vertex_cycle(self.g, &self.stack));
                closed = true;
            } else if !self.blocked[w] && self.circuit(w)? {
                closed = true;
            }
        }
        if closed {
            self.unblock(v);
        } else {
            for &w in &successors {
                if !self.blocked_by[w].contains(&v) {
                    self.blocked_by[w].push(v);
                }
            }
        }
        self.stack.pop();
        Ok(closed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rauzy::build_rauzy_graph;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn lengths(cs: &[Circuit]) -> Vec<usize> {
        cs.iter().map(Circuit::len).collect()
    }

    #[test]
    fn abac_circuits() {
        let p3 = w("abacabacabac");
        let g1 = build_rauzy_graph(&p3, 1).unwrap();
        let cs = elementary_circuits(&g1, DEFAULT_CIRCUIT_CAP).unwrap();
        assert_eq!(
            cs.iter().map(ToString::to_string).collect::<Vec<_>>(),
            ["a -> b -> a", "a -> c -> a"]
        );
        assert_eq!(lengths(&cs), [2, 2]);
        assert_eq!(cs[0].label().to_string(), "ab");

        let g2 = build_rauzy_graph(&p3, 2).unwrap();
        let cs = elementary_circuits(&g2, DEFAULT_CIRCUIT_CAP).unwrap();
        assert_eq!(lengths(&cs), [4]);
        assert_eq!(cs[0].to_string(), "ab -> ba -> ac -> ca -> ab");
        assert_eq!(cs[0].label().to_string(), "abac");

        let g = build_rauzy_graph(&w("abab"), 1).unwrap();
        let cs = elementary_circuits(&g, DEFAULT_CIRCUIT_CAP).unwrap();
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].to_string(), "a -> b -> a");
    }

    #[test]
    fn loops_are_circuits_of_length_one() {
        let g = build_rauzy_graph(&w("aaa"), 1).unwrap();
        let cs = elementary_circuits(&g, 10).unwrap();
        assert_eq!(lengths(&cs), [1]);
        assert!(cs[0].is_small());
    }

    #[test]
    fn cap_aborts_enumeration() {
        // Γ_1 of a de Bruijn-like word over 3 letters has many circuits.
        let g = build_rauzy_graph(&w("aabacbbcca"), 1).unwrap();
        let all = elementary_circuits(&g, DEFAULT_CIRCUIT_CAP).unwrap();
        assert!(all.len() > 2);
        assert!(matches!(
            elementary_circuits(&g, 2),
            Err(Error::CircuitCapExceeded { cap: 2 })
        ));
        assert!(matches!(
            elementary_circuits_up_to(&g, 3, 2),
            Err(Error::CircuitCapExceeded { cap: 2 })
        ));
    }

    #[test]
    fn from_edges_validates_and_canonicalizes() {
        let ids = |s: &[u8]| Word::new(s.to_vec()).unwrap();
        // a = 0, b = 1, c = 2
        let c = Circuit::from_edges(vec![ids(&[2, 0]), ids(&[0, 2])]).unwrap();
        assert_eq!(c.edges()[0].to_string(), "ac");
        assert!(Circuit::from_edges(vec![ids(&[0, 1]), ids(&[2, 0])]).is_err());
        assert!(
            Circuit::from_edges(vec![ids(&[0, 1]), ids(&[1, 0]), ids(&[0, 1]), ids(&[1, 0])])
                .is_err()
        );
        assert!(Circuit::from_edges(vec![]).is_err());
    }

    /// Brute force: every closed vertex sequence without repeats, found by
    /// trying all ordered subsets. Independent of both search routines.
    fn brute_force(g: &RauzyGraph) -> Vec<Circuit> {
        fn extend(g: &RauzyGraph, path: &mut Vec<usize>, out: &mut Vec<Circuit>) {
            let last = *path.last().unwrap();
            if g.edge_between(last, path[0]).is_some() {
                out.push(Circuit::from_vertex_cycle(g, path));
            }
            for t in path[0] + 1..g.vertex_count() {
                if !path.contains(&t) && g.edge_between(last, t).is_some() {
                    path.push(t);
                    extend(g, path, out);
                    path.pop();
                }
            }
        }
        let mut out = Vec::new();
        for s in 0..g.vertex_count() {
            extend(g, &mut vec![s], &mut out);
        }
        out.sort();
        out
    }

    #[test]
    fn johnson_and_bounded_search_agree_with_brute_force() {
        for n in 2..=9u32 {
            for code in 0..3usize.pow(n) {
                let s: Vec<u8> = (0..n).map(|i| ((code / 3usize.pow(i)) % 3) as u8).collect();
                let word = Word::new(s).unwrap();
                for i in 1..word.len() {
                    let g = build_rauzy_graph(&word, i).unwrap();
                    let expected = brute_force(&g);
                    let all = elementary_circuits(&g, DEFAULT_CIRCUIT_CAP).unwrap();
                    assert_eq!(all, expected, "{word} order {i}");
                    let short = elementary_circuits_up_to(&g, i, DEFAULT_CIRCUIT_CAP).unwrap();
                    let filtered: Vec<_> = expected.into_iter().filter(|c| c.len() <= i).collect();
                    assert_eq!(short, filtered, "{word} order {i}");
                }
            }
        }
    }
}
