use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Graph;

impl Graph {
    /// Path `P_n` on vertices `0..n`.
    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("valid path")
    }

    /// Cycle `C_n`; needs `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least three vertices");
        Self::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).expect("valid cycle")
    }

    /// Star `K_{1,k}` with centre 0 and leaves `1..=k`.
    pub fn star(k: usize) -> Self {
        Self::from_edges(k + 1, (1..=k).map(|v| (0, v))).expect("valid star")
    }

    pub fn complete(n: usize) -> Self {
        Self::from_edges(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))))
            .expect("valid complete graph")
    }

    /// `rows x cols` square lattice patch, row-major numbering.
    pub fn grid(rows: usize, cols: usize) -> Self {
        let mut g = Self::new(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                let v = r * cols + c;
                if c + 1 < cols {
                    g.add_edge(v, v + 1).expect("fresh edge");
                }
                if r + 1 < rows {
                    g.add_edge(v, v + cols).expect("fresh edge");
                }
            }
        }
        g
    }
}

#[derive(Debug, Clone)]
pub struct NamedGraph {
    pub name: String,
    pub graph: Graph,
}

impl NamedGraph {
    pub fn new(name: impl Into<String>, graph: Graph) -> Self {
        Self {
            name: name.into(),
            graph,
        }
    }
}

/// P2..P5, C3..C6, K1,1..K1,5, K4, followed by `random` seeded `G(n, p)`
/// graphs with `2 <= n <= 10` and `p` drawn from `[0.2, 0.8]`.
pub fn standard_corpus(random: usize, seed: u64) -> Vec<NamedGraph> {
    let mut out = Vec::new();
    for n in 2..=5 {
        out.push(NamedGraph::new(format!("P{n}"), Graph::path(n)));
    }
    for n in 3..=6 {
        out.push(NamedGraph::new(format!("C{n}"), Graph::cycle(n)));
    }
    for k in 1..=5 {
        out.push(NamedGraph::new(format!("K1,{k}"), Graph::star(k)));
    }
    out.push(NamedGraph::new("K4", Graph::complete(4)));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..random {
        let n = rng.random_range(2..=10);
        let p = rng.random_range(0.2..=0.8);
        out.push(NamedGraph::new(
            format!("G{i}(n={n},p={p:.2})"),
            Graph::random_gnp(n, p, &mut rng),
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_sizes() {
        assert_eq!(Graph::path(5).edge_count(), 4);
        assert_eq!(Graph::cycle(6).edge_count(), 6);
        assert_eq!(Graph::star(4).degree(0).unwrap(), 4);
        assert_eq!(Graph::complete(4).edge_count(), 6);
        assert_eq!(Graph::grid(3, 3).edge_count(), 12);
    }

    #[test]
    fn corpus_is_deterministic() {
        let a = standard_corpus(5, 7);
        let b = standard_corpus(5, 7);
        assert_eq!(a.len(), 14 + 5);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.graph, y.graph);
        }
    }
}
