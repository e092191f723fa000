//! The three extremal non-Hamiltonian families and their canonical vertex layouts.
//!
//! * `L^k_n = K_1 ∨ (K_k + K_{n-k-1})`: classes `X` (the `K_k`), `w`, `Z`.
//! * `N^k_n = K_k ∨ (K_{n-2k} + kK_1)`: classes `X` (the `kK_1`), `Y` (the `K_k`), `Z`.
//! * `B^k_n = K_{n,n} - K_{k,n-k}` on `2n` vertices: `W` (degree-`k` vertices of side A),
//!   `X = N(W)` on side B, `Y = N(X) - W` on side A and `Z = N(Y) - X` on side B.
//!
//! Classes are laid out contiguously. For `L` and `N` the order is `X`, then `Y`/`w`,
//! then `Z`. For `B` side A is `0..n` (holding `W = 0..k`, then `Y`) and side B is
//! `n..2n` (holding `X = n..n+k`, then `Z`).

use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Graph, Side};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    L,
    N,
    B,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::L => "L",
            Family::N => "N",
            Family::B => "B",
        })
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "L" | "l" => Ok(Family::L),
            "N" | "n" => Ok(Family::N),
            "B" | "b" => Ok(Family::B),
            other => Err(format!("unknown family {other:?}, expected L, N or B")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilyParams {
    pub family: Family,
    pub n: usize,
    pub k: usize,
}

/// A named, contiguous block of vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexClass {
    pub label: &'static str,
    pub range: Range<usize>,
}

impl VertexClass {
    pub fn len(&self) -> usize {
        self.range.len()
    }

    pub fn is_empty(&self) -> bool {
        self.range.is_empty()
    }
}

/// Which single edge is removed from a family graph.
///
/// `DropZZ` applies to `L` and `N`; `DropXY` (u ∈ X, v ∈ Y) and `DropYZ` (u ∈ Y, v ∈ Z)
/// apply to `B`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Perturbation {
    Intact,
    DropZZ,
    DropXY,
    DropYZ,
}

impl Perturbation {
    pub fn name(self) -> &'static str {
        match self {
            Perturbation::Intact => "none",
            Perturbation::DropZZ => "Z-Z",
            Perturbation::DropXY => "X-Y",
            Perturbation::DropYZ => "Y-Z",
        }
    }

    /// Perturbations that are meaningful for `family`, `Intact` first.
    pub fn allowed(family: Family) -> &'static [Perturbation] {
        match family {
            Family::L | Family::N => &[Perturbation::Intact, Perturbation::DropZZ],
            Family::B => &[
                Perturbation::Intact,
                Perturbation::DropXY,
                Perturbation::DropYZ,
            ],
        }
    }
}

/// Either a plain graph (`L`, `N`) or a balanced bipartite one (`B`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyGraph {
    Plain(Graph),
    Bipartite(BipartiteGraph),
}

impl FamilyGraph {
    pub fn graph(&self) -> &Graph {
        match self {
            FamilyGraph::Plain(g) => g,
            FamilyGraph::Bipartite(b) => b.graph(),
        }
    }

    pub fn into_graph(self) -> Graph {
        match self {
            FamilyGraph::Plain(g) => g,
            FamilyGraph::Bipartite(b) => b.into_graph(),
        }
    }
}

/// A (possibly perturbed) family graph together with the equitable partition
/// that its quotient matrix is taken over. Empty classes are omitted.
#[derive(Debug, Clone)]
pub struct LabelledFamily {
    pub params: FamilyParams,
    pub perturbation: Perturbation,
    pub graph: FamilyGraph,
    pub labels: Vec<&'static str>,
    pub classes: Vec<Vec<usize>>,
    pub deleted: Option<(usize, usize)>,
}

impl LabelledFamily {
    /// Class index of every vertex.
    pub fn class_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.graph.graph().order()];
        for (c, members) in self.classes.iter().enumerate() {
            for &v in members {
                out[v] = c;
            }
        }
        out
    }
}

fn binom2(m: usize) -> usize {
    m * m.saturating_sub(1) / 2
}

impl FamilyParams {
    pub fn new(family: Family, n: usize, k: usize) -> Result<Self> {
        let p = FamilyParams { family, n, k };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |reason| {
            Err(Error::FamilyParams {
                family: self.family,
                n: self.n,
                k: self.k,
                reason,
            })
        };
        if self.k < 1 {
            return fail("k must be at least 1");
        }
        if self.n < 2 * self.k + 1 {
            return match self.family {
                Family::B => fail("requires n >= 2k+1"),
                _ => fail("requires 1 <= k <= (n-1)/2"),
            };
        }
        Ok(())
    }

    /// Order of the graph: `n` for `L`/`N`, `2n` for `B`.
    pub fn order(&self) -> usize {
        match self.family {
            Family::B => 2 * self.n,
            _ => self.n,
        }
    }

    /// Closed-form edge count.
    pub fn edge_count(&self) -> usize {
        let (n, k) = (self.n, self.k);
        match self.family {
            Family::L => binom2(k) + binom2(n - k - 1) + (n - 1),
            Family::N => binom2(k) + binom2(n - 2 * k) + k * (n - k),
            Family::B => n * n - k * (n - k),
        }
    }

    /// Canonical class layout of the unperturbed graph.
    pub fn classes(&self) -> Vec<VertexClass> {
        let (n, k) = (self.n, self.k);
        let c = |label, range| VertexClass { label, range };
        match self.family {
            Family::L => vec![c("X", 0..k), c("w", k..k + 1), c("Z", k + 1..n)],
            Family::N => vec![c("X", 0..k), c("Y", k..2 * k), c("Z", 2 * k..n)],
            Family::B => vec![
                c("W", 0..k),
                c("X", n..n + k),
                c("Y", k..n),
                c("Z", n + k..2 * n),
            ],
        }
    }

    fn class(&self, label: &str) -> Range<usize> {
        self.classes()
            .into_iter()
            .find(|c| c.label == label)
            .map(|c| c.range)
            .expect("label belongs to this family")
    }

    /// Builds the family graph with its canonical labelling.
    pub fn build(&self) -> Result<FamilyGraph> {
        self.validate()?;
        let (n, k) = (self.n, self.k);
        match self.family {
            Family::L => {
                // K_k on X, K_{n-k-1} on Z, w joined to everything
                let mut g = Graph::empty(n)?;
                let w = k;
                for a in 0..n {
                    for b in a + 1..n {
                        let both_x = b < k;
                        let both_z = a > k;
                        if both_x || both_z || a == w || b == w {
                            g.add_edge(a, b)?;
                        }
                    }
                }
                Ok(FamilyGraph::Plain(g))
            }
            Family::N => {
                // X independent, Y universal, Z a clique
                let mut g = Graph::empty(n)?;
                for a in 0..n {
                    for b in a + 1..n {
                        let in_y = |v: usize| (k..2 * k).contains(&v);
                        let both_z = a >= 2 * k;
                        if in_y(a) || in_y(b) || both_z {
                            g.add_edge(a, b)?;
                        }
                    }
                }
                Ok(FamilyGraph::Plain(g))
            }
            Family::B => {
                let mut g = Graph::complete_bipartite(n, n)?;
                for wv in self.class("W") {
                    for zv in self.class("Z") {
                        g.remove_edge(wv, zv)?;
                    }
                }
                Ok(FamilyGraph::Bipartite(BipartiteGraph::from_halves(g)?))
            }
        }
    }

    /// Family graph with the canonical edge of `perturbation` removed, plus the
    /// equitable partition used by the quotient matrix.
    ///
    /// Partition orders: `L`: X, w, Z, T; `N`: X, Y, Z, T; `B` intact: W, X, Y, Z;
    /// `B − YZ`: W, X, Y, Z, s, t; `B − XY`: W, X, Y, Z, u, v. Here `T` holds the
    /// two endpoints of the removed `Z–Z` edge and `s,t` / `u,v` are singletons.
    pub fn labelled(&self, perturbation: Perturbation) -> Result<LabelledFamily> {
        let base = self.build()?;
        let invalid = || Error::InvalidPerturbation {
            family: self.family,
            perturbation: perturbation.name(),
            n: self.n,
            k: self.k,
        };
        if !Perturbation::allowed(self.family).contains(&perturbation) {
            return Err(invalid());
        }
        let classes = self.classes();
        let mut labels: Vec<&'static str> = classes.iter().map(|c| c.label).collect();
        let mut members: Vec<Vec<usize>> =
            classes.iter().map(|c| c.range.clone().collect()).collect();
        let idx = |l: &str| labels.iter().position(|&x| x == l).expect("known label");

        let deleted = match perturbation {
            Perturbation::Intact => None,
            Perturbation::DropZZ => {
                let z = idx("Z");
                if members[z].len() < 2 {
                    return Err(invalid());
                }
                let pair = (members[z][0], members[z][1]);
                members[z].drain(0..2);
                labels.push("T");
                members.push(vec![pair.0, pair.1]);
                Some(pair)
            }
            Perturbation::DropYZ => {
                let (y, z) = (idx("Y"), idx("Z"));
                let pair = (members[y][0], members[z][0]);
                members[y].remove(0);
                members[z].remove(0);
                labels.extend(["s", "t"]);
                members.push(vec![pair.0]);
                members.push(vec![pair.1]);
                Some(pair)
            }
            Perturbation::DropXY => {
                let (x, y) = (idx("X"), idx("Y"));
                let pair = (members[x][0], members[y][0]);
                members[x].remove(0);
                members[y].remove(0);
                labels.extend(["u", "v"]);
                members.push(vec![pair.0]);
                members.push(vec![pair.1]);
                Some(pair)
            }
        };

        let graph = match (base, deleted) {
            (g, None) => g,
            (FamilyGraph::Plain(g), Some((a, b))) => FamilyGraph::Plain(g.without_edge(a, b)?),
            (FamilyGraph::Bipartite(g), Some((a, b))) => {
                FamilyGraph::Bipartite(g.without_edge(a, b)?)
            }
        };

        let (labels, classes): (Vec<_>, Vec<_>) = labels
            .into_iter()
            .zip(members)
            .filter(|(_, m)| !m.is_empty())
            .unzip();

        Ok(LabelledFamily {
            params: *self,
            perturbation,
            graph,
            labels,
            classes,
            deleted,
        })
    }

    /// Side of each vertex of `B^k_n` under the canonical layout.
    pub fn bipartite_side(&self, v: usize) -> Side {
        if v < self.n {
            Side::A
        } else {
            Side::B
        }
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}_{}", self.family, self.k, self.n)
    }
}

/// Builds `make_family(p)`.
pub fn make_family(p: FamilyParams) -> Result<FamilyGraph> {
    p.build()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn relabel(g: &Graph, perm: &[usize]) -> Graph {
        Graph::from_edges(
            g.order(),
            g.edges().into_iter().map(|(a, b)| (perm[a], perm[b])),
        )
        .unwrap()
    }

    #[test]
    fn n_family_matches_join_definition() {
        // K_k ∨ (K_{n-2k} + kK_1) puts Y first, then Z, then X
        for (n, k) in [(10, 2), (7, 3), (5, 1), (12, 4)] {
            let joined = Graph::complete(k).unwrap().join(
                &Graph::complete(n - 2 * k)
                    .unwrap()
                    .disjoint_union(&Graph::empty(k).unwrap()),
            );
            let perm: Vec<usize> = (k..2 * k).chain(2 * k..n).chain(0..k).collect();
            let built = FamilyParams::new(Family::N, n, k).unwrap().build().unwrap();
            assert_eq!(&relabel(&joined, &perm), built.graph());
        }
    }

    #[test]
    fn l_family_matches_join_definition() {
        for (n, k) in [(5, 1), (9, 3), (11, 2)] {
            let joined = Graph::complete(1).unwrap().join(
                &Graph::complete(k)
                    .unwrap()
                    .disjoint_union(&Graph::complete(n - k - 1).unwrap()),
            );
            // joined: w=0, X=1..=k, Z=k+1..n
            let perm: Vec<usize> = std::iter::once(k).chain(0..k).chain(k + 1..n).collect();
            let built = FamilyParams::new(Family::L, n, k).unwrap().build().unwrap();
            assert_eq!(&relabel(&joined, &perm), built.graph());
        }
    }

    #[test]
    fn n_10_2_degrees() {
        let g = FamilyParams::new(Family::N, 10, 2)
            .unwrap()
            .build()
            .unwrap()
            .into_graph();
        assert_eq!(g.edge_count(), 32);
        assert_eq!(g.degrees().iter().filter(|&&d| d == 2).count(), 2);
        assert_eq!(g.min_degree(), 2);
    }

    #[test]
    fn b_3_1_shape() {
        let p = FamilyParams::new(Family::B, 3, 1).unwrap();
        let FamilyGraph::Bipartite(bg) = p.build().unwrap() else {
            panic!("B family is bipartite");
        };
        assert_eq!(bg.graph().order(), 6);
        assert_eq!(bg.graph().edge_count(), 7);
        assert_eq!(bg.graph().min_degree(), 1);
        // W = {0} sees only X = {3}
        assert_eq!(bg.graph().neighbors(0).collect::<Vec<_>>(), vec![3]);
    }

    #[test]
    fn parameter_validation() {
        assert!(FamilyParams::new(Family::N, 4, 2).is_err());
        assert!(FamilyParams::new(Family::L, 5, 0).is_err());
        assert!(FamilyParams::new(Family::B, 6, 3).is_err());
        assert!(FamilyParams::new(Family::B, 7, 3).is_ok());
    }

    #[test]
    fn perturbation_layouts() {
        let p = FamilyParams::new(Family::N, 6, 2).unwrap();
        let lf = p.labelled(Perturbation::DropZZ).unwrap();
        // Z had two vertices, both moved to T
        assert_eq!(lf.labels, vec!["X", "Y", "T"]);
        assert_eq!(lf.deleted, Some((4, 5)));
        assert!(!lf.graph.graph().has_edge(4, 5));

        let p = FamilyParams::new(Family::N, 5, 2).unwrap();
        assert!(matches!(
            p.labelled(Perturbation::DropZZ),
            Err(Error::InvalidPerturbation { .. })
        ));
        assert!(p.labelled(Perturbation::DropYZ).is_err());

        let p = FamilyParams::new(Family::B, 5, 1).unwrap();
        let lf = p.labelled(Perturbation::DropXY).unwrap();
        assert_eq!(lf.labels, vec!["W", "Y", "Z", "u", "v"]);
        assert_eq!(lf.deleted, Some((5, 1)));
    }
}
