//! Simple undirected graphs stored as adjacency bitset rows.

use std::fmt;

use crate::error::{Error, Result};

const WORD: usize = 64;

/// Simple undirected graph on vertices `0..n`.
///
/// Row `i` is a bitset of the neighbours of `i`; the diagonal is always clear
/// and the rows are kept symmetric by every mutating method.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n ≥ 1` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let words = n.div_ceil(WORD);
        Ok(Graph {
            n,
            words,
            bits: vec![0; n * words],
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for u in 0..n {
            for v in u + 1..n {
                g.set(u, v, true);
            }
        }
        Ok(g)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Precondition(format!("cycle needs n >= 3, got {n}")));
        }
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn path(n: usize) -> Result<Self> {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    /// Star `K_{1,leaves}` centred at vertex 0.
    pub fn star(leaves: usize) -> Result<Self> {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i)))
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self> {
        let mut g = Graph::empty(a + b)?;
        for u in 0..a {
            for v in a..a + b {
                g.set(u, v, true);
            }
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of 64-bit words per adjacency row.
    #[inline]
    pub fn words_per_row(&self) -> usize {
        self.words
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && (self.bits[u * self.words + v / WORD] >> (v % WORD)) & 1 == 1
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        Ok(())
    }

    #[inline]
    fn set(&mut self, u: usize, v: usize, on: bool) {
        let (wu, bu) = (u * self.words + v / WORD, 1u64 << (v % WORD));
        let (wv, bv) = (v * self.words + u / WORD, 1u64 << (u % WORD));
        if on {
            self.bits[wu] |= bu;
            self.bits[wv] |= bv;
        } else {
            self.bits[wu] &= !bu;
            self.bits[wv] &= !bv;
        }
    }

    /// Adds `uv`; adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::Loop(u));
        }
        self.set(u, v, true);
        Ok(())
    }

    /// Removes `uv`; removing a missing edge is a no-op.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u != v {
            self.set(u, v, false);
        }
        Ok(())
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let mut g = self.clone();
        g.remove_edge(u, v)?;
        Ok(g)
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let mut g = self.clone();
        g.add_edge(u, v)?;
        Ok(g)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Minimum degree δ(G).
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// e(G), computed as half the degree sum.
    pub fn edge_count(&self) -> usize {
        self.bits
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().flat_map(|(wi, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * WORD + b)
            })
        })
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            out.extend(self.neighbors(u).filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    /// Neighbourhood of `v` as a single word; only valid when `n ≤ 64`.
    #[inline]
    pub(crate) fn mask64(&self, v: usize) -> u64 {
        debug_assert!(self.n <= WORD);
        self.bits[v * self.words]
    }

    /// Subgraph induced on `vertices`, relabelled `0..len` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Graph> {
        let mut g = Graph::empty(vertices.len())?;
        for (i, &u) in vertices.iter().enumerate() {
            self.check_vertex(u)?;
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.set(i, j, true);
                }
            }
        }
        Ok(g)
    }

    /// Connected components of `G - removed`, each sorted, ordered by smallest vertex.
    pub fn components_without(&self, removed: &[bool]) -> Vec<Vec<usize>> {
        let mut seen: Vec<bool> = removed.to_vec();
        seen.resize(self.n, false);
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut head = 0;
            while head < comp.len() {
                let u = comp[head];
                head += 1;
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_without(&[])
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// `self ∨ other`: disjoint union plus every cross edge. `self` keeps labels `0..n1`.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut g = self.disjoint_union(other);
        let n1 = self.n;
        for u in 0..n1 {
            for v in n1..g.n {
                g.set(u, v, true);
            }
        }
        g
    }

    /// `self + other`, with `other` relabelled to `n1..n1+n2`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n1 = self.n;
        let mut g = Graph::empty(n1 + other.n).expect("both operands are nonempty");
        for (u, v) in self.edges() {
            g.set(u, v, true);
        }
        for (u, v) in other.edges() {
            g.set(n1 + u, n1 + v, true);
        }
        g
    }

    /// Kelmans operation: every neighbour `x` of `v` with `x ∉ N(u) ∪ {u}` is moved
    /// from `v` to `u` (edge `vx` replaced by `ux`).
    pub fn kelmans(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SameVertex(u));
        }
        let mut g = self.clone();
        let moved: Vec<usize> = self
            .neighbors(v)
            .filter(|&x| x != u && !self.has_edge(u, x))
            .collect();
        for x in moved {
            g.set(v, x, false);
            g.set(u, x, true);
        }
        Ok(g)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Side of a vertex in a bipartite graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    A,
    B,
}

/// Balanced bipartite graph: a graph on `2n` vertices with a two-colouring whose
/// colour classes both have `n` vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BipartiteGraph {
    graph: Graph,
    side: Vec<Side>,
}

impl BipartiteGraph {
    pub fn new(graph: Graph, side: Vec<Side>) -> Result<Self> {
        if side.len() != graph.order() {
            return Err(Error::LengthMismatch {
                expected: graph.order(),
                found: side.len(),
            });
        }
        let a = side.iter().filter(|&&s| s == Side::A).count();
        let b = side.len() - a;
        if a != b {
            return Err(Error::Unbalanced { a, b });
        }
        if let Some((u, v)) = graph.edges().into_iter().find(|&(u, v)| side[u] == side[v]) {
            return Err(Error::IntraSideEdge(u, v));
        }
        Ok(BipartiteGraph { graph, side })
    }

    /// Uses the convention that the first half of the vertices form side A.
    pub fn from_halves(graph: Graph) -> Result<Self> {
        let order = graph.order();
        if order % 2 == 1 {
            return Err(Error::Unbalanced {
                a: order.div_ceil(2),
                b: order / 2,
            });
        }
        let side = (0..order)
            .map(|v| if v < order / 2 { Side::A } else { Side::B })
            .collect();
        BipartiteGraph::new(graph, side)
    }

    /// `K_{n,n}` with side A = `0..n`.
    pub fn complete(n: usize) -> Result<Self> {
        BipartiteGraph::from_halves(Graph::complete_bipartite(n, n)?)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    /// Size `n` of each side; the graph has order `2n`.
    pub fn half_order(&self) -> usize {
        self.graph.order() / 2
    }

    pub fn side(&self, v: usize) -> Side {
        self.side[v]
    }

    pub fn sides(&self) -> &[Side] {
        &self.side
    }

    pub fn vertices_on(&self, s: Side) -> Vec<usize> {
        (0..self.graph.order())
            .filter(|&v| self.side[v] == s)
            .collect()
    }

    /// Adds a cross edge; same-side pairs are rejected.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        if u < self.side.len() && v < self.side.len() && self.side[u] == self.side[v] {
            return Err(Error::IntraSideEdge(u, v));
        }
        Ok(BipartiteGraph {
            graph: self.graph.with_edge(u, v)?,
            side: self.side.clone(),
        })
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Result<Self> {
        Ok(BipartiteGraph {
            graph: self.graph.without_edge(u, v)?,
            side: self.side.clone(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_edge_counts() {
        assert_eq!(Graph::complete(1).unwrap().edge_count(), 0);
        assert_eq!(Graph::complete(4).unwrap().edge_count(), 6);
        assert_eq!(Graph::complete(70).unwrap().edge_count(), 70 * 69 / 2);
        assert_eq!(Graph::complete(0), Err(Error::EmptyGraph));
    }

    #[test]
    fn join_examples() {
        let k1 = Graph::complete(1).unwrap();
        assert_eq!(k1.join(&k1), Graph::complete(2).unwrap());

        let k2 = Graph::complete(2).unwrap();
        let two_k1 = Graph::empty(2).unwrap();
        let g = k2.join(&two_k1);
        assert_eq!(g.edge_count(), 5);
        assert!(!g.has_edge(2, 3));
    }

    #[test]
    fn disjoint_union_examples() {
        let k3 = Graph::complete(3).unwrap();
        let k1 = Graph::complete(1).unwrap();
        let g = k3.disjoint_union(&k1);
        assert_eq!((g.order(), g.edge_count()), (4, 3));
        let g = k1.disjoint_union(&k1);
        assert_eq!((g.order(), g.edge_count()), (2, 0));
    }

    #[test]
    fn kelmans_turns_p4_into_star() {
        // a=0, b=1, c=2, d=3
        let p4 = Graph::path(4).unwrap();
        let g = p4.kelmans(1, 2).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2), (1, 3)]);
    }

    #[test]
    fn kelmans_fixed_points_and_errors() {
        let k5 = Graph::complete(5).unwrap();
        assert_eq!(k5.kelmans(0, 3).unwrap(), k5);
        // N(v) \ {u} ⊆ N(u): nothing moves
        let g = Graph::from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3)]).unwrap();
        assert_eq!(g.kelmans(0, 1).unwrap(), g);
        assert_eq!(k5.kelmans(2, 2), Err(Error::SameVertex(2)));
        assert!(matches!(
            k5.kelmans(0, 9),
            Err(Error::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn loops_rejected() {
        let mut g = Graph::empty(3).unwrap();
        assert_eq!(g.add_edge(1, 1), Err(Error::Loop(1)));
    }

    #[test]
    fn components_after_removal() {
        let g = Graph::path(5).unwrap();
        let mut removed = vec![false; 5];
        removed[2] = true;
        assert_eq!(g.components_without(&removed), vec![vec![0, 1], vec![3, 4]]);
        assert!(g.is_connected());
    }

    #[test]
    fn wide_rows_span_words() {
        let mut g = Graph::empty(130).unwrap();
        g.add_edge(3, 129).unwrap();
        g.add_edge(64, 65).unwrap();
        assert!(g.has_edge(129, 3));
        assert_eq!(g.neighbors(3).collect::<Vec<_>>(), vec![129]);
        assert_eq!(g.edges(), vec![(3, 129), (64, 65)]);
    }

    #[test]
    fn bipartite_validation() {
        let g = Graph::complete_bipartite(3, 3).unwrap();
        let bg = BipartiteGraph::from_halves(g).unwrap();
        assert_eq!(bg.half_order(), 3);
        assert!(matches!(
            bg.with_edge(0, 1),
            Err(Error::IntraSideEdge(0, 1))
        ));
        let tri = Graph::complete(4).unwrap();
        assert!(BipartiteGraph::from_halves(tri).is_err());
        let odd = Graph::empty(3).unwrap();
        assert!(matches!(
            BipartiteGraph::from_halves(odd),
            Err(Error::Unbalanced { .. })
        ));
    }
}
