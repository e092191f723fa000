use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Graph};

use super::spectral_dense;

const BOUND_TOL: f64 = 1e-9;

/// Outcome of checking `value ≤ bound` with a small tolerance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundCheck {
    pub value: f64,
    pub bound: f64,
    pub holds: bool,
}

impl BoundCheck {
    fn at_most(value: f64, bound: f64) -> Self {
        BoundCheck {
            value,
            bound,
            holds: value <= bound + BOUND_TOL,
        }
    }
}

/// `(n − 2) / 2`, the ceiling for the second adjacency eigenvalue.
pub fn hong_bound(n: usize) -> f64 {
    (n as f64 - 2.0) / 2.0
}

/// `(k−1)/2 + sqrt(2e − nk + (k+1)²/4)` for a graph with minimum degree at least `k`.
pub fn nikiforov_bound(n: usize, e: usize, k: usize) -> f64 {
    let (n, e, k) = (n as f64, e as f64, k as f64);
    (k - 1.0) / 2.0 + (2.0 * e - n * k + (k + 1.0) * (k + 1.0) / 4.0).sqrt()
}

/// `λ₂(G) ≤ (n−2)/2`.
pub fn check_hong(g: &Graph) -> Result<BoundCheck> {
    if g.order() < 2 {
        return Err(Error::Precondition("second eigenvalue needs n >= 2".into()));
    }
    let s = spectral_dense(g);
    Ok(BoundCheck::at_most(s.lambda2, hong_bound(g.order())))
}

/// `λ(G) ≤ (k−1)/2 + sqrt(2e(G) − nk + (k+1)²/4)` when `δ(G) ≥ k`.
pub fn check_bound_nikiforov(g: &Graph, k: usize) -> Result<BoundCheck> {
    let delta = g.min_degree();
    if delta < k {
        return Err(Error::Precondition(format!(
            "minimum degree {delta} is below k = {k}"
        )));
    }
    let s = spectral_dense(g);
    Ok(BoundCheck::at_most(
        s.lambda1,
        nikiforov_bound(g.order(), g.edge_count(), k),
    ))
}

/// `λ(G) ≤ sqrt(e(G))` for bipartite `G`.
pub fn check_bound_bfp(g: &BipartiteGraph) -> BoundCheck {
    let s = spectral_dense(g.graph());
    BoundCheck::at_most(s.lambda1, (g.graph().edge_count() as f64).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hong_on_cliques() {
        let k7 = Graph::complete(7).unwrap();
        let c = check_hong(&k7).unwrap();
        assert!(c.holds && (c.value + 1.0).abs() < 1e-12);

        // 2K_5 attains the bound
        let k5 = Graph::complete(5).unwrap();
        let c = check_hong(&k5.disjoint_union(&k5)).unwrap();
        assert!(c.holds);
        assert!((c.value - 4.0).abs() < 1e-12 && c.bound == 4.0);
        assert!(check_hong(&Graph::empty(1).unwrap()).is_err());
    }

    #[test]
    fn nikiforov_equality_on_complete_graph() {
        // with k = n−1 and e = n(n−1)/2 the radicand is exactly (n/2)²
        for n in 2..15usize {
            let k = n - 1;
            let radicand_x4 = 4 * n * (n - 1) - 4 * n * k + (k + 1) * (k + 1);
            assert_eq!(radicand_x4, n * n);
            let c = check_bound_nikiforov(&Graph::complete(n).unwrap(), k).unwrap();
            assert!(c.holds);
            assert!((c.value - c.bound).abs() < 1e-9);
        }
    }

    #[test]
    fn nikiforov_precondition() {
        let p = Graph::path(5).unwrap();
        assert!(matches!(
            check_bound_nikiforov(&p, 2),
            Err(Error::Precondition(_))
        ));
        assert!(check_bound_nikiforov(&p, 1).unwrap().holds);
    }

    #[test]
    fn bfp_equality_on_complete_bipartite() {
        for n in 1..8 {
            let c = check_bound_bfp(&BipartiteGraph::complete(n).unwrap());
            assert!(c.holds && (c.value - c.bound).abs() < 1e-9);
        }
    }
}
