//! Adjacency spectra: dense and iterative solvers, equitable quotients, the
//! quartic `f` with its companion `g`, and the classical eigenvalue bounds.

mod bounds;
mod poly;
mod quotient;

pub use bounds::{
    check_bound_bfp, check_bound_nikiforov, check_hong, hong_bound, nikiforov_bound, BoundCheck,
};
pub use poly::{
    eval_f, eval_f_f64, eval_g, isolate_f_root, largest_f_root, CharPolyF, RootInterval,
};
pub use quotient::{perron_class_values, quotient_lambda, quotient_of_family, QuotientMatrix};

use nalgebra::{DMatrix, SymmetricEigen};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Residual target for the solvers.
pub const SOLVER_TOL: f64 = 1e-9;
/// Agreement expected between two independent methods.
pub const AGREEMENT_TOL: f64 = 1e-8;
/// Largest order handled by the dense solver in [`spectral_radius`].
pub const DENSE_LIMIT: usize = 512;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Dense,
    Power,
    Quotient,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectralResult {
    pub lambda1: f64,
    /// Second largest eigenvalue; equals `lambda1` for a single vertex.
    pub lambda2: f64,
    /// Unit eigenvector for `lambda1`, oriented to have nonnegative sum.
    pub perron: Vec<f64>,
    /// `‖A·perron − lambda1·perron‖∞`.
    pub residual: f64,
    pub method: Method,
}

pub fn adjacency_matrix(g: &Graph) -> DMatrix<f64> {
    let n = g.order();
    let mut a = DMatrix::zeros(n, n);
    for (u, v) in g.edges() {
        a[(u, v)] = 1.0;
        a[(v, u)] = 1.0;
    }
    a
}

fn adjacency_lists(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.order()).map(|v| g.neighbors(v).collect()).collect()
}

fn matvec(adj: &[Vec<usize>], x: &[f64], out: &mut [f64]) {
    for (o, nbrs) in out.iter_mut().zip(adj) {
        *o = nbrs.iter().map(|&j| x[j]).sum();
    }
}

fn norm2(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum::<f64>().sqrt()
}

fn dot(x: &[f64], y: &[f64]) -> f64 {
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

fn residual_inf(g: &Graph, v: &[f64], lambda: f64) -> f64 {
    (0..g.order())
        .map(|i| (g.neighbors(i).map(|j| v[j]).sum::<f64>() - lambda * v[i]).abs())
        .fold(0.0, f64::max)
}

fn orient(v: &mut [f64]) {
    if v.iter().sum::<f64>() < 0.0 {
        v.iter_mut().for_each(|x| *x = -*x);
    }
}

/// Full symmetric eigendecomposition of `A(G)`.
pub fn spectral_dense(g: &Graph) -> SpectralResult {
    let eig = SymmetricEigen::new(adjacency_matrix(g));
    let mut order: Vec<usize> = (0..g.order()).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[b].total_cmp(&eig.eigenvalues[a]));
    let lambda1 = eig.eigenvalues[order[0]];
    let lambda2 = order.get(1).map_or(lambda1, |&i| eig.eigenvalues[i]);
    let mut perron: Vec<f64> = eig.eigenvectors.column(order[0]).iter().copied().collect();
    orient(&mut perron);
    let residual = residual_inf(g, &perron, lambda1);
    SpectralResult {
        lambda1,
        lambda2,
        perron,
        residual,
        method: Method::Dense,
    }
}

/// Dense solve up to [`DENSE_LIMIT`] vertices, power iteration above.
pub fn spectral_radius(g: &Graph) -> Result<SpectralResult> {
    if g.order() <= DENSE_LIMIT {
        Ok(spectral_dense(g))
    } else {
        spectral_power(g, SOLVER_TOL, 100_000)
    }
}

struct ComponentSpectrum {
    lambda1: f64,
    lambda2: Option<f64>,
    vector: Vec<f64>,
}

fn start_vector(n: usize, centred: bool) -> Vec<f64> {
    // deterministic, aperiodic: fractional parts of multiples of the plastic number
    (0..n)
        .map(|i| {
            let frac = ((i + 1) as f64 * 0.754_877_666_246_692_7).fract();
            if centred {
                frac - 0.5
            } else {
                1.0 + 0.5 * frac
            }
        })
        .collect()
}

fn power_component(g: &Graph, tol: f64, max_iter: usize) -> Result<ComponentSpectrum> {
    let n = g.order();
    if n == 1 {
        return Ok(ComponentSpectrum {
            lambda1: 0.0,
            lambda2: None,
            vector: vec![1.0],
        });
    }
    let adj = adjacency_lists(g);
    let mut av = vec![0.0; n];

    // Perron pair of A + I; the shift separates λ₁ from −λ₁ on bipartite graphs.
    let mut v = start_vector(n, false);
    let nv = norm2(&v);
    v.iter_mut().for_each(|x| *x /= nv);
    let mut lambda1 = 0.0;
    let mut converged = false;
    let mut res = f64::INFINITY;
    for _ in 0..max_iter {
        matvec(&adj, &v, &mut av);
        lambda1 = dot(&v, &av);
        res = norm2(
            &av.iter()
                .zip(&v)
                .map(|(a, x)| a - lambda1 * x)
                .collect::<Vec<_>>(),
        );
        if res <= tol {
            converged = true;
            break;
        }
        let mut next: Vec<f64> = av.iter().zip(&v).map(|(a, x)| a + x).collect();
        let nn = norm2(&next);
        next.iter_mut().for_each(|x| *x /= nn);
        v = next;
    }
    if !converged {
        return Err(Error::NoConvergence {
            iterations: max_iter,
            residual: res,
        });
    }

    // Second eigenvalue: A + σI − (λ₁+σ)vvᵀ is positive semidefinite with top
    // eigenvalue λ₂ + σ when σ = λ₁.
    let sigma = lambda1;
    let mut w = start_vector(n, true);
    let project = |w: &mut Vec<f64>| {
        let c = dot(w, &v);
        w.iter_mut().zip(&v).for_each(|(a, b)| *a -= c * b);
        let nw = norm2(w);
        w.iter_mut().for_each(|a| *a /= nw);
    };
    project(&mut w);
    let mut lambda2 = 0.0;
    converged = false;
    for _ in 0..max_iter {
        matvec(&adj, &w, &mut av);
        lambda2 = dot(&w, &av);
        res = norm2(
            &av.iter()
                .zip(&w)
                .map(|(a, x)| a - lambda2 * x)
                .collect::<Vec<_>>(),
        );
        if res <= 10.0 * tol {
            converged = true;
            break;
        }
        let mut next: Vec<f64> = av.iter().zip(&w).map(|(a, x)| a + sigma * x).collect();
        project(&mut next);
        w = next;
    }
    if !converged {
        return Err(Error::NoConvergence {
            iterations: max_iter,
            residual: res,
        });
    }
    Ok(ComponentSpectrum {
        lambda1,
        lambda2: Some(lambda2),
        vector: v,
    })
}

/// Power iteration with deflation, run per connected component.
///
/// `lambda1` is the maximum over components and `perron` is supported on the
/// component attaining it.
pub fn spectral_power(g: &Graph, tol: f64, max_iter: usize) -> Result<SpectralResult> {
    if tol <= 0.0 {
        return Err(Error::Precondition("tolerance must be positive".into()));
    }
    let comps = g.components();
    let mut spectra = Vec::with_capacity(comps.len());
    for comp in &comps {
        spectra.push(power_component(&g.induced(comp)?, tol, max_iter)?);
    }
    let best = (0..spectra.len())
        .max_by(|&a, &b| spectra[a].lambda1.total_cmp(&spectra[b].lambda1))
        .expect("at least one component");
    let lambda1 = spectra[best].lambda1;
    let lambda2 = spectra
        .iter()
        .enumerate()
        .filter_map(|(i, s)| {
            if i == best {
                s.lambda2
            } else {
                Some(s.lambda1)
            }
        })
        .fold(f64::NEG_INFINITY, f64::max);
    let lambda2 = if lambda2.is_finite() {
        lambda2
    } else {
        lambda1
    };

    let mut perron = vec![0.0; g.order()];
    for (&v, &x) in comps[best].iter().zip(&spectra[best].vector) {
        perron[v] = x;
    }
    orient(&mut perron);
    let residual = residual_inf(g, &perron, lambda1);
    Ok(SpectralResult {
        lambda1,
        lambda2,
        perron,
        residual,
        method: Method::Power,
    })
}

/// `⟨Av, v⟩ / ⟨v, v⟩`.
pub fn rayleigh(g: &Graph, v: &[f64]) -> Result<f64> {
    if v.len() != g.order() {
        return Err(Error::LengthMismatch {
            expected: g.order(),
            found: v.len(),
        });
    }
    let vv = dot(v, v);
    if vv == 0.0 {
        return Err(Error::ZeroVector);
    }
    let num: f64 = g.edges().iter().map(|&(a, b)| 2.0 * v[a] * v[b]).sum();
    Ok(num / vv)
}
