//! Simple undirected graphs over qubit vertices.
//!
//! Adjacency is stored as one [`VertexSet`] row per vertex, so neighbourhood
//! comparisons (twins, adjacent twins, leaves) and the symmetric-difference
//! folds used by the correlator rules are word-parallel bit operations.

mod families;
pub mod io;
mod vertex_set;

use rand::Rng;

use crate::error::{Error, Result};

pub use families::{standard_corpus, NamedGraph};
pub use vertex_set::{Iter as VertexSetIter, VertexSet};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

/// Neighbourhood relations between an ordered pair `(ν, μ)`.
///
/// The flags are independent: in a single-edge graph the pair is adjacent
/// twins and each endpoint is a leaf of the other.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PairRelation {
    /// `N(ν) = N(μ)`
    pub twins: bool,
    /// `N(ν) ∪ {ν} = N(μ) ∪ {μ}`
    pub adjacent_twins: bool,
    /// `N(ν) = {μ}`
    pub first_is_leaf_of_second: bool,
    /// `N(μ) = {ν}`
    pub second_is_leaf_of_first: bool,
}

impl PairRelation {
    pub fn is_none(&self) -> bool {
        *self == Self::default()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Self {
            n,
            adj: vec![VertexSet::empty(n); n],
        }
    }

    /// Builds a graph from an edge list. Self-loops and repeated edges are errors.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::new(n);
        for (a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<()> {
        self.check(a)?;
        self.check(b)?;
        if a == b {
            return Err(Error::SelfLoop(a.to_string()));
        }
        if self.adj[a].contains(b) {
            return Err(Error::DuplicateEdge(a.to_string(), b.to_string()));
        }
        self.adj[a].insert(b)?;
        self.adj[b].insert(a)?;
        Ok(())
    }

    /// Returns whether the edge existed.
    pub fn remove_edge(&mut self, a: usize, b: usize) -> Result<bool> {
        self.check(a)?;
        self.check(b)?;
        let had = self.adj[a].remove(b)?;
        self.adj[b].remove(a)?;
        Ok(had)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// `N(ν)`, the open neighbourhood.
    pub fn neighbors(&self, v: usize) -> Result<&VertexSet> {
        self.check(v)?;
        Ok(&self.adj[v])
    }

    /// `N(ν) ∪ {ν}`
    pub fn closed_neighbors(&self, v: usize) -> Result<VertexSet> {
        let mut s = self.neighbors(v)?.clone();
        s.insert(v)?;
        Ok(s)
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        Ok(self.neighbors(v)?.len())
    }

    pub fn has_edge(&self, a: usize, b: usize) -> Result<bool> {
        self.check(b)?;
        Ok(self.neighbors(a)?.contains(b))
    }

    /// Edges as `(a, b)` with `a < b`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(a, row)| row.iter().filter(move |&b| b > a).map(move |b| (a, b)))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    pub fn is_isolated(&self, v: usize) -> Result<bool> {
        Ok(self.neighbors(v)?.is_empty())
    }

    pub fn relation(&self, nu: usize, mu: usize) -> Result<PairRelation> {
        self.check(nu)?;
        self.check(mu)?;
        if nu == mu {
            return Err(Error::SameVertex(nu));
        }
        let (a, b) = (&self.adj[nu], &self.adj[mu]);
        Ok(PairRelation {
            twins: a == b,
            adjacent_twins: self.closed_neighbors(nu)? == self.closed_neighbors(mu)?,
            first_is_leaf_of_second: a.len() == 1 && a.contains(mu),
            second_is_leaf_of_first: b.len() == 1 && b.contains(nu),
        })
    }

    /// `G \ a`: vertex `a` stays in the universe but loses every incident edge,
    /// so qubit indices are stable across measurement sequences.
    pub fn remove_vertex(&self, a: usize) -> Result<Self> {
        self.check(a)?;
        let mut g = self.clone();
        for b in self.adj[a].iter() {
            g.adj[b].remove(a)?;
        }
        g.adj[a] = VertexSet::empty(self.n);
        Ok(g)
    }

    /// Number of edges with both endpoints in `s`.
    pub fn internal_edge_count(&self, s: &VertexSet) -> Result<usize> {
        if s.universe() != self.n {
            return Err(Error::SizeMismatch {
                left: s.universe(),
                right: self.n,
            });
        }
        let mut twice = 0;
        for v in s.iter() {
            twice += self.adj[v].intersection(s)?.len();
        }
        Ok(twice / 2)
    }

    /// `△_{μ∈V} N(μ)`; empty iff every degree is even.
    pub fn neighborhood_sym_diff(&self) -> VertexSet {
        let mut acc = VertexSet::empty(self.n);
        for row in &self.adj {
            acc.sym_diff_assign(row).expect("rows share the universe");
        }
        acc
    }

    /// `△_{μ∈V} (N(μ) ∪ {μ})`; empty iff every degree is odd.
    pub fn closed_neighborhood_sym_diff(&self) -> VertexSet {
        let mut acc = self.neighborhood_sym_diff();
        for v in self.vertices() {
            acc.toggle(v).expect("vertex in range");
        }
        acc
    }

    pub fn odd_degree_count(&self) -> usize {
        self.adj.iter().filter(|row| row.len() % 2 == 1).count()
    }

    /// Erdős–Rényi `G(n, p)`.
    pub fn random_gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Self {
        let mut g = Self::new(n);
        for a in 0..n {
            for b in a + 1..n {
                if rng.random_bool(p) {
                    g.add_edge(a, b).expect("fresh pair");
                }
            }
        }
        g
    }

    fn check(&self, v: usize) -> Result<()> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        Ok(())
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied()).unwrap()
    }

    // path 1–2–3 relabelled to 0–1–2
    fn p3() -> Graph {
        Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap()
    }

    fn c4() -> Graph {
        Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    fn k3() -> Graph {
        Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn neighbors_examples() {
        assert_eq!(p3().neighbors(1).unwrap(), &set(3, &[0, 2]));
        assert!(Graph::new(5).neighbors(3).unwrap().is_empty());
        assert_eq!(c4().neighbors(0).unwrap(), &set(4, &[1, 3]));
        assert_eq!(p3().degree(1).unwrap(), 2);
        assert!(matches!(
            p3().neighbors(3),
            Err(Error::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn c4_neighborhoods_cancel() {
        assert!(c4().neighborhood_sym_diff().is_empty());
    }

    #[test]
    fn relation_examples() {
        let r = p3().relation(0, 2).unwrap();
        assert_eq!(
            r,
            PairRelation {
                twins: true,
                ..Default::default()
            }
        );
        for (a, b) in [(0, 1), (1, 2), (0, 2)] {
            assert_eq!(
                k3().relation(a, b).unwrap(),
                PairRelation {
                    adjacent_twins: true,
                    ..Default::default()
                }
            );
        }
        assert_eq!(
            p3().relation(0, 1).unwrap(),
            PairRelation {
                first_is_leaf_of_second: true,
                ..Default::default()
            }
        );
        assert!(c4().relation(0, 1).unwrap().is_none());
        assert_eq!(p3().relation(1, 1), Err(Error::SameVertex(1)));
    }

    #[test]
    fn k2_relation_sets_all_matching_flags() {
        let k2 = Graph::from_edges(2, [(0, 1)]).unwrap();
        let r = k2.relation(0, 1).unwrap();
        assert!(
            !r.twins && r.adjacent_twins && r.first_is_leaf_of_second && r.second_is_leaf_of_first
        );
    }

    #[test]
    fn remove_vertex_examples() {
        assert_eq!(p3().remove_vertex(1).unwrap().edge_count(), 0);
        assert_eq!(p3().remove_vertex(1).unwrap().n(), 3);
        assert_eq!(k3().remove_vertex(0).unwrap().edges(), vec![(1, 2)]);
        let star = Graph::from_edges(5, (1..5).map(|v| (0, v))).unwrap();
        assert_eq!(star.remove_vertex(0).unwrap(), Graph::new(5));
    }

    #[test]
    fn internal_edge_count_examples() {
        assert_eq!(k3().internal_edge_count(&VertexSet::full(3)).unwrap(), 3);
        assert_eq!(c4().internal_edge_count(&set(4, &[0, 2])).unwrap(), 0);
        let k2 = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert_eq!(k2.internal_edge_count(&VertexSet::full(2)).unwrap(), 1);
    }

    #[test]
    fn rejects_self_loops_and_multi_edges() {
        assert!(matches!(
            Graph::from_edges(3, [(1, 1)]),
            Err(Error::SelfLoop(_))
        ));
        assert!(matches!(
            Graph::from_edges(3, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(..))
        ));
        assert!(matches!(
            Graph::from_edges(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
    }

    #[test]
    fn closed_sym_diff_on_k2_and_k4() {
        let k2 = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert!(k2.closed_neighborhood_sym_diff().is_empty());
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(k4.closed_neighborhood_sym_diff().is_empty());
        assert!(!k3().closed_neighborhood_sym_diff().is_empty());
    }
}
