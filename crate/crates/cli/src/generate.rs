//! Seeded random graphs with a guaranteed minimum degree.

use hamspec::{BipartiteGraph, Graph, Side};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Independent generator for sample `index` of a run seeded with `seed`.
pub fn sample_rng(seed: u64, stream: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng.set_word_pos(u128::from(index) << 32);
    rng
}

/// Raises every degree below `k` by joining to random allowed non-neighbours.
fn repair<R: Rng>(g: &mut Graph, k: usize, allowed: impl Fn(usize, usize) -> bool, rng: &mut R) {
    let n = g.order();
    for v in 0..n {
        while g.degree(v) < k {
            let options: Vec<usize> = (0..n)
                .filter(|&w| w != v && allowed(v, w) && !g.has_edge(v, w))
                .collect();
            let Some(&w) = options.choose(rng) else { break };
            g.add_edge(v, w).expect("in range, distinct");
        }
    }
}

/// `G(n, p)` repaired to minimum degree `k`. Needs `n > k`.
pub fn min_degree_graph<R: Rng>(n: usize, k: usize, p: f64, rng: &mut R) -> Graph {
    assert!(n > k, "minimum degree {k} is impossible on {n} vertices");
    let mut g = Graph::empty(n).expect("n >= 1");
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).expect("in range");
            }
        }
    }
    repair(&mut g, k, |_, _| true, rng);
    g
}

/// Balanced bipartite graph on `2h` vertices: `k` random perfect matchings, then
/// each remaining cross pair with probability `p`, then degree repair.
pub fn min_degree_bipartite<R: Rng>(h: usize, k: usize, p: f64, rng: &mut R) -> BipartiteGraph {
    assert!(
        h >= k,
        "minimum degree {k} is impossible with {h} vertices per side"
    );
    let mut g = Graph::empty(2 * h).expect("h >= 1");
    let mut perm: Vec<usize> = (0..h).collect();
    for _ in 0..k {
        perm.shuffle(rng);
        for (a, &b) in perm.iter().enumerate() {
            g.add_edge(a, h + b).expect("in range");
        }
    }
    for a in 0..h {
        for b in h..2 * h {
            if !g.has_edge(a, b) && rng.gen_bool(p) {
                g.add_edge(a, b).expect("in range");
            }
        }
    }
    repair(&mut g, k, |u, w| (u < h) != (w < h), rng);
    BipartiteGraph::from_halves(g).expect("edges only cross the halves")
}

/// `K_{h,h}` with a few edges removed, keeping every degree at least 1. One
/// draw in four strips a single vertex down to one edge, which is `B^1_h`.
pub fn near_complete_bipartite<R: Rng>(h: usize, rng: &mut R) -> BipartiteGraph {
    let mut b = BipartiteGraph::complete(h).expect("h >= 1");
    if rng.gen_bool(0.25) {
        let side = if rng.gen_bool(0.5) { Side::A } else { Side::B };
        let v = *b.vertices_on(side).choose(rng).expect("nonempty side");
        let mut nbrs: Vec<usize> = b.graph().neighbors(v).collect();
        nbrs.shuffle(rng);
        for &w in &nbrs[1..] {
            b = b.without_edge(v, w).expect("edge present");
        }
        return b;
    }
    let deletions = rng.gen_range(1..=h);
    for _ in 0..deletions {
        let edges: Vec<(usize, usize)> = b
            .graph()
            .edges()
            .into_iter()
            .filter(|&(u, v)| b.graph().degree(u) > 1 && b.graph().degree(v) > 1)
            .collect();
        let Some(&(u, v)) = edges.choose(rng) else {
            break;
        };
        b = b.without_edge(u, v).expect("edge present");
    }
    b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimum_degree_is_met() {
        for i in 0..200 {
            let mut rng = sample_rng(7, 0, i);
            let n = rng.gen_range(4..=12);
            let k = rng.gen_range(1..=3.min(n - 1));
            let g = min_degree_graph(n, k, 0.1, &mut rng);
            assert!(g.min_degree() >= k);
            let b = min_degree_bipartite(n, k, 0.1, &mut rng);
            assert!(b.graph().min_degree() >= k);
            let c = near_complete_bipartite(n, &mut rng);
            assert!(c.graph().min_degree() >= 1);
        }
    }

    #[test]
    fn seeding_is_reproducible() {
        let a = min_degree_graph(10, 2, 0.4, &mut sample_rng(42, 0, 3));
        let b = min_degree_graph(10, 2, 0.4, &mut sample_rng(42, 0, 3));
        let c = min_degree_graph(10, 2, 0.4, &mut sample_rng(42, 0, 4));
        assert_eq!(a, b);
        assert_ne!(a, c);
    }
}
