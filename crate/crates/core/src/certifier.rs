//! Theorem-driven Hamiltonicity certification.
//!
//! Each rule is a sufficient condition for a Hamiltonian cycle with a short list
//! of extremal exceptions. Rules are tried strongest first; a rule only certifies
//! Hamiltonicity when its hypotheses hold with a `1e-9` margin, and every such
//! verdict on a desk-scale graph is confirmed by exact search before it is
//! returned.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::family::{Family, FamilyParams, Perturbation};
use crate::graph::{BipartiteGraph, Graph, Side};
use crate::hamiltonicity::{
    find_cut_witness, is_hamiltonian, is_hamiltonian_bipartite, HamOutcome, HamWitness,
    BIPARTITE_DP_LIMIT, DP_LIMIT,
};
use crate::spectral::{quotient_lambda, quotient_of_family, spectral_radius};

/// Margin applied to every spectral threshold comparison.
pub const GUARD: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    HamiltonianByTheorem,
    HamiltonianWithCycle,
    ExceptionalExtremal,
    NonHamiltonianWitness,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    /// `λ > n − 2`; the only exception is `N^1_n`.
    SpectralAboveNMinus2,
    /// `λ ≥ n − k − 1`, `δ ≥ k`, `n ≥ max(k³/2 + k + 5/2, 6k + 5)`; exceptions `L^k_n`, `N^k_n`.
    SpectralMinDegree,
    /// `λ ≥ λ(N^k_n)`, `δ ≥ k`, `n ≥ max(6k + 5, (k² + 6k + 4)/2)`; exception `N^k_n`.
    SpectralVsNFamily,
    /// `e > C(n−k−1, 2) + (k+1)²`, `δ ≥ k`, `n ≥ 6k + 5`; exceptions are spanning
    /// subgraphs of `L^k_n` or `N^k_n`.
    EdgesMinDegree,
    /// Balanced bipartite, `λ ≥ sqrt(n(n−k))`, `δ ≥ k`, `n ≥ k³ + 2k + 4`; exception `B^k_n`.
    BipartiteSpectralMinDegree,
    /// Balanced bipartite, `λ ≥ λ(B^k_n)`, `δ ≥ k`, `n ≥ (k+1)²`; exception `B^k_n`.
    BipartiteVsBFamily,
    /// Balanced bipartite, `e > n(n−k−1) + (k+1)²`, `δ ≥ k`, `n ≥ 2k + 1`; exceptions
    /// are spanning subgraphs of `B^k_n`.
    BipartiteEdgesMinDegree,
    ExactSearch,
}

impl Rule {
    pub fn id(self) -> &'static str {
        match self {
            Rule::SpectralAboveNMinus2 => "spectral-gt-n-2",
            Rule::SpectralMinDegree => "spectral-min-degree",
            Rule::SpectralVsNFamily => "spectral-vs-N-family",
            Rule::EdgesMinDegree => "edges-min-degree",
            Rule::BipartiteSpectralMinDegree => "bip-spectral-min-degree",
            Rule::BipartiteVsBFamily => "bip-spectral-vs-B-family",
            Rule::BipartiteEdgesMinDegree => "bip-edges-min-degree",
            Rule::ExactSearch => "exact-search",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CertDetails {
    /// Order for plain graphs, part size for bipartite ones.
    pub n: usize,
    pub k: Option<usize>,
    pub lambda: f64,
    pub edges: usize,
    pub min_degree: usize,
    pub threshold: Option<f64>,
    pub family: Option<FamilyParams>,
    pub witness: Option<HamWitness>,
    /// Exact-search confirmation of a theorem verdict; `None` when not run or
    /// out of budget.
    pub validated: Option<bool>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Certificate {
    pub verdict: Verdict,
    pub rule: Rule,
    pub details: CertDetails,
}

fn fmt_witness(w: &HamWitness) -> String {
    let join = |v: &[usize]| {
        v.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",")
    };
    match w {
        HamWitness::Cycle(c) => format!("cycle:{}", join(c)),
        HamWitness::Cut { set, components } => {
            format!("cut:{{{}}}/components={}", join(set), components)
        }
        HamWitness::Exhausted => "exhausted".into(),
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = &self.details;
        let opt = |o: Option<String>| o.unwrap_or_else(|| "-".into());
        write!(
            f,
            "verdict={} rule={} n={} k={} e={} delta={} lambda={:.12} threshold={} family={} validated={} witness={}",
            self.verdict,
            self.rule,
            d.n,
            opt(d.k.map(|k| k.to_string())),
            d.edges,
            d.min_degree,
            d.lambda,
            opt(d.threshold.map(|t| format!("{t:.12}"))),
            opt(d.family.map(|p| p.to_string())),
            opt(d.validated.map(|v| v.to_string())),
            opt(d.witness.as_ref().map(fmt_witness)),
        )
    }
}

fn is_clique(g: &Graph, vs: &[usize]) -> bool {
    vs.iter()
        .enumerate()
        .all(|(i, &a)| vs[i + 1..].iter().all(|&b| g.has_edge(a, b)))
}

/// Families among `L^k_n`, `N^k_n` that `g` is isomorphic to. `L^1_n` and
/// `N^1_n` coincide, so both are reported for `k = 1`.
pub fn recognize_family(g: &Graph) -> Vec<FamilyParams> {
    let n = g.order();
    let mut out = Vec::new();
    if n < 3 {
        return out;
    }
    let universal: Vec<usize> = (0..n).filter(|&v| g.degree(v) == n - 1).collect();

    // L: one universal vertex w, and G − w is two cliques
    if universal.len() == 1 {
        let mut removed = vec![false; n];
        removed[universal[0]] = true;
        let comps = g.components_without(&removed);
        if comps.len() == 2 && comps.iter().all(|c| is_clique(g, c)) {
            let k = comps[0].len().min(comps[1].len());
            out.push(FamilyParams {
                family: Family::L,
                n,
                k,
            });
        }
    }

    // N: k universal vertices, and G − T is one clique of n − 2k plus k isolated vertices
    let k = universal.len();
    if k >= 1 && n > 2 * k {
        let mut removed = vec![false; n];
        for &v in &universal {
            removed[v] = true;
        }
        let comps = g.components_without(&removed);
        let singles = comps.iter().filter(|c| c.len() == 1).count();
        let big: Vec<&Vec<usize>> = comps.iter().filter(|c| c.len() > 1).collect();
        let shape_ok = if n - 2 * k == 1 {
            big.is_empty() && singles == k + 1
        } else {
            big.len() == 1 && big[0].len() == n - 2 * k && singles == k && is_clique(g, big[0])
        };
        if shape_ok {
            out.push(FamilyParams {
                family: Family::N,
                n,
                k,
            });
        }
    }
    out
}

/// `Some(B^k_n)` when `g` is `K_{n,n}` minus a `K_{k,n−k}` with `n ≥ 2k + 1`.
pub fn recognize_bipartite_family(g: &BipartiteGraph) -> Option<FamilyParams> {
    let n = g.half_order();
    let graph = g.graph();
    let deficient = |s: Side| -> Vec<usize> {
        g.vertices_on(s)
            .into_iter()
            .filter(|&v| graph.degree(v) < n)
            .collect()
    };
    let (sa, sb) = (deficient(Side::A), deficient(Side::B));
    if sa.is_empty() || sb.is_empty() || sa.len() + sb.len() != n {
        return None;
    }
    let degrees_ok = sa.iter().all(|&v| graph.degree(v) == n - sb.len())
        && sb.iter().all(|&v| graph.degree(v) == n - sa.len());
    if !degrees_ok {
        return None;
    }
    let k = sa.len().min(sb.len());
    (n > 2 * k).then_some(FamilyParams {
        family: Family::B,
        n,
        k,
    })
}

/// How `g` sits inside a family graph: the cut that separates the embedded copy
/// of the low-degree class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Containment {
    /// The `k` low-degree vertices.
    pub low: Vec<usize>,
    /// Their neighbourhood outside `low` (`Y`/`X` class for `N`/`B`, `{w}` for `L`).
    pub cut: Vec<usize>,
}

fn require_min_degree(g: &Graph, k: usize) -> Result<()> {
    let delta = g.min_degree();
    if delta < k {
        return Err(Error::Precondition(format!(
            "containment test needs minimum degree >= {k}, got {delta}"
        )));
    }
    Ok(())
}

fn shared_neighbourhood(
    g: &Graph,
    candidates: impl Iterator<Item = usize>,
    k: usize,
) -> Option<Containment> {
    let mut groups: HashMap<Vec<u64>, Vec<usize>> = HashMap::new();
    let mut order = Vec::new();
    for v in candidates {
        let key = g.row(v).to_vec();
        let entry = groups.entry(key.clone()).or_default();
        if entry.is_empty() {
            order.push(key);
        }
        entry.push(v);
    }
    order.into_iter().find_map(|key| {
        let members = &groups[&key];
        (members.len() >= k).then(|| Containment {
            low: members[..k].to_vec(),
            cut: g.neighbors(members[0]).collect(),
        })
    })
}

/// Spanning-subgraph test for `L^k_n` or `N^k_n`, returning the embedding cut.
pub fn family_containment(g: &Graph, family: Family, k: usize) -> Result<Option<Containment>> {
    require_min_degree(g, k)?;
    let n = g.order();
    if k == 0 || n < 2 * k + 1 {
        return Ok(None);
    }
    let low = (0..n).filter(|&v| g.degree(v) == k);
    match family {
        Family::N => Ok(shared_neighbourhood(g, low, k)),
        Family::L => {
            for s in low {
                for w in g.neighbors(s) {
                    let block: Vec<usize> = std::iter::once(s)
                        .chain(g.neighbors(s).filter(|&x| x != w))
                        .collect();
                    let closed = block
                        .iter()
                        .all(|&x| g.neighbors(x).all(|y| y == w || block.contains(&y)));
                    if closed {
                        let mut low = block;
                        low.sort_unstable();
                        return Ok(Some(Containment { low, cut: vec![w] }));
                    }
                }
            }
            Ok(None)
        }
        Family::B => Err(Error::Precondition(
            "B-family containment needs a bipartite graph".into(),
        )),
    }
}

/// Spanning-subgraph test for `B^k_n`.
pub fn bipartite_family_containment(g: &BipartiteGraph, k: usize) -> Result<Option<Containment>> {
    let graph = g.graph();
    require_min_degree(graph, k)?;
    if k == 0 || g.half_order() < 2 * k + 1 {
        return Ok(None);
    }
    for side in [Side::A, Side::B] {
        let low = g
            .vertices_on(side)
            .into_iter()
            .filter(|&v| graph.degree(v) == k);
        if let Some(c) = shared_neighbourhood(graph, low, k) {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

/// Whether `g` is a spanning subgraph of the named family member of its order.
pub fn is_spanning_subgraph_of_family(g: &Graph, family: Family, k: usize) -> Result<bool> {
    Ok(family_containment(g, family, k)?.is_some())
}

pub fn is_spanning_subgraph_of_bipartite_family(g: &BipartiteGraph, k: usize) -> Result<bool> {
    Ok(bipartite_family_containment(g, k)?.is_some())
}

fn containment_witness(g: &Graph, c: &Containment) -> HamWitness {
    let components = crate::hamiltonicity::components_after_removal(g, &c.cut);
    HamWitness::Cut {
        set: c.cut.clone(),
        components,
    }
}

fn exact_budget_ok(g: &Graph, limit: usize) -> bool {
    g.order() <= limit
}

/// Half-integer thresholds compared as `2n ≥ …` to stay in integers.
fn prop_order_ok(n: usize, k: usize) -> bool {
    2 * n >= k * k * k + 2 * k + 5 && n >= 6 * k + 5
}

struct Context<'a> {
    g: &'a Graph,
    bipartite: Option<&'a BipartiteGraph>,
    lambda: f64,
    base: CertDetails,
    budget: u64,
}

impl Context<'_> {
    fn details(
        &self,
        k: Option<usize>,
        threshold: Option<f64>,
        family: Option<FamilyParams>,
    ) -> CertDetails {
        CertDetails {
            k,
            threshold,
            family,
            ..self.base.clone()
        }
    }

    fn exceptional(
        &self,
        rule: Rule,
        k: usize,
        threshold: Option<f64>,
        family: FamilyParams,
    ) -> Certificate {
        let mut details = self.details(Some(k), threshold, Some(family));
        let max_size = 3.max(k + 1);
        details.witness = find_cut_witness(self.g, max_size)
            .map(|(set, components)| HamWitness::Cut { set, components });
        Certificate {
            verdict: Verdict::ExceptionalExtremal,
            rule,
            details,
        }
    }

    fn by_theorem(
        &self,
        rule: Rule,
        k: Option<usize>,
        threshold: Option<f64>,
    ) -> Result<Certificate> {
        let mut details = self.details(k, threshold, None);
        let limit = if self.bipartite.is_some() {
            BIPARTITE_DP_LIMIT
        } else {
            DP_LIMIT
        };
        if exact_budget_ok(self.g, limit) {
            let outcome = match self.bipartite {
                Some(b) => is_hamiltonian_bipartite(b, self.budget)?,
                None => is_hamiltonian(self.g, self.budget)?,
            };
            match outcome {
                HamOutcome::Decided {
                    hamiltonian: true,
                    witness,
                } => {
                    details.validated = Some(true);
                    details.witness = Some(witness);
                }
                HamOutcome::Decided {
                    hamiltonian: false,
                    witness,
                } => {
                    return Err(Error::SoundnessViolation(format!(
                        "rule {rule} certified a graph that exact search refutes ({})",
                        fmt_witness(&witness)
                    )));
                }
                HamOutcome::Unknown { .. } => {}
            }
        }
        Ok(Certificate {
            verdict: Verdict::HamiltonianByTheorem,
            rule,
            details,
        })
    }

    fn exact(&self) -> Result<Certificate> {
        let outcome = match self.bipartite {
            Some(b) => is_hamiltonian_bipartite(b, self.budget)?,
            None => is_hamiltonian(self.g, self.budget)?,
        };
        let mut details = self.details(None, None, None);
        let verdict = match outcome {
            HamOutcome::Decided {
                hamiltonian,
                witness,
            } => {
                details.witness = Some(witness);
                if hamiltonian {
                    Verdict::HamiltonianWithCycle
                } else {
                    Verdict::NonHamiltonianWitness
                }
            }
            HamOutcome::Unknown { .. } => Verdict::Inconclusive,
        };
        Ok(Certificate {
            verdict,
            rule: Rule::ExactSearch,
            details,
        })
    }
}

fn base_details(g: &Graph, n: usize, lambda: f64) -> CertDetails {
    CertDetails {
        n,
        k: None,
        lambda,
        edges: g.edge_count(),
        min_degree: g.min_degree(),
        threshold: None,
        family: None,
        witness: None,
        validated: None,
    }
}

/// Certifies a simple graph on `n ≥ 3` vertices.
pub fn certify(g: &Graph, budget: u64) -> Result<Certificate> {
    let n = g.order();
    if n < 3 {
        return Err(Error::Precondition(format!(
            "certify needs n >= 3, got {n}"
        )));
    }
    let lambda = spectral_radius(g)?.lambda1;
    let ctx = Context {
        g,
        bipartite: None,
        lambda,
        base: base_details(g, n, lambda),
        budget,
    };
    let families = recognize_family(g);
    let is_family = |f: Family, k: usize| families.iter().any(|p| p.family == f && p.k == k);
    let delta = g.min_degree();
    let nf = n as f64;

    // λ > n − 2
    let thr = nf - 2.0;
    if ctx.lambda > thr + GUARD {
        if is_family(Family::N, 1) {
            let p = FamilyParams {
                family: Family::N,
                n,
                k: 1,
            };
            return Ok(ctx.exceptional(Rule::SpectralAboveNMinus2, 1, Some(thr), p));
        }
        return ctx.by_theorem(Rule::SpectralAboveNMinus2, None, Some(thr));
    }

    // λ ≥ n − k − 1 with the cubic order bound
    for k in (1..=delta).rev() {
        if !prop_order_ok(n, k) {
            continue;
        }
        let thr = nf - k as f64 - 1.0;
        if ctx.lambda >= thr - GUARD {
            for f in [Family::L, Family::N] {
                if is_family(f, k) {
                    let p = FamilyParams { family: f, n, k };
                    return Ok(ctx.exceptional(Rule::SpectralMinDegree, k, Some(thr), p));
                }
            }
            if ctx.lambda >= thr + GUARD {
                return ctx.by_theorem(Rule::SpectralMinDegree, Some(k), Some(thr));
            }
        }
    }

    // λ ≥ λ(N^k_n)
    for k in (1..=delta).rev() {
        if n < 6 * k + 5 || 2 * n < k * k + 6 * k + 4 {
            continue;
        }
        let p = FamilyParams::new(Family::N, n, k)?;
        let thr = quotient_lambda(&quotient_of_family(p, Perturbation::Intact)?)?;
        if ctx.lambda >= thr - GUARD {
            if is_family(Family::N, k) {
                return Ok(ctx.exceptional(Rule::SpectralVsNFamily, k, Some(thr), p));
            }
            if ctx.lambda >= thr + GUARD {
                return ctx.by_theorem(Rule::SpectralVsNFamily, Some(k), Some(thr));
            }
        }
    }

    // e > C(n−k−1, 2) + (k+1)²
    let e = g.edge_count();
    for k in (1..=delta).rev() {
        if n < 6 * k + 5 {
            continue;
        }
        let m = n - k - 1;
        let thr = m * (m - 1) / 2 + (k + 1) * (k + 1);
        if e <= thr {
            continue;
        }
        for f in [Family::L, Family::N] {
            if let Some(c) = family_containment(g, f, k)? {
                let p = FamilyParams { family: f, n, k };
                if is_family(f, k) {
                    return Ok(ctx.exceptional(Rule::EdgesMinDegree, k, Some(thr as f64), p));
                }
                let mut details = ctx.details(Some(k), Some(thr as f64), Some(p));
                details.witness = Some(containment_witness(g, &c));
                return Ok(Certificate {
                    verdict: Verdict::NonHamiltonianWitness,
                    rule: Rule::EdgesMinDegree,
                    details,
                });
            }
        }
        return ctx.by_theorem(Rule::EdgesMinDegree, Some(k), Some(thr as f64));
    }

    ctx.exact()
}

/// Certifies a balanced bipartite graph with `n ≥ 2` vertices per side.
pub fn certify_bipartite(g: &BipartiteGraph, budget: u64) -> Result<Certificate> {
    let n = g.half_order();
    if n < 2 {
        return Err(Error::Precondition(format!(
            "certify_bipartite needs n >= 2 per side, got {n}"
        )));
    }
    let graph = g.graph();
    let lambda = spectral_radius(graph)?.lambda1;
    let ctx = Context {
        g: graph,
        bipartite: Some(g),
        lambda,
        base: base_details(graph, n, lambda),
        budget,
    };
    let family = recognize_bipartite_family(g);
    let is_family = |k: usize| family.is_some_and(|p| p.k == k);
    let delta = graph.min_degree();
    let e = graph.edge_count();

    // λ ≥ sqrt(n(n − k)) with n ≥ k³ + 2k + 4
    for k in (1..=delta).rev() {
        if n < k * k * k + 2 * k + 4 {
            continue;
        }
        let thr = ((n * (n - k)) as f64).sqrt();
        if ctx.lambda >= thr - GUARD {
            if is_family(k) {
                let p = FamilyParams {
                    family: Family::B,
                    n,
                    k,
                };
                return Ok(ctx.exceptional(Rule::BipartiteSpectralMinDegree, k, Some(thr), p));
            }
            if ctx.lambda >= thr + GUARD {
                // the edge count forced by λ ≤ sqrt(e) must clear the edge rule's bar
                let forced = n * (n - k);
                let edge_bar = n * (n - k - 1) + (k + 1) * (k + 1);
                if e < forced || (n > (k + 1) * (k + 1) && forced <= edge_bar) {
                    return Err(Error::SoundnessViolation(format!(
                        "e = {e} with lambda >= sqrt(n(n-k)) = {thr} (n={n}, k={k})"
                    )));
                }
                return ctx.by_theorem(Rule::BipartiteSpectralMinDegree, Some(k), Some(thr));
            }
        }
    }

    // λ ≥ λ(B^k_n) with n ≥ (k+1)²
    for k in (1..=delta).rev() {
        if n < (k + 1) * (k + 1) || n < 2 * k + 1 {
            continue;
        }
        let p = FamilyParams::new(Family::B, n, k)?;
        let thr = quotient_lambda(&quotient_of_family(p, Perturbation::Intact)?)?;
        if ctx.lambda >= thr - GUARD {
            if is_family(k) {
                return Ok(ctx.exceptional(Rule::BipartiteVsBFamily, k, Some(thr), p));
            }
            if ctx.lambda >= thr + GUARD {
                return ctx.by_theorem(Rule::BipartiteVsBFamily, Some(k), Some(thr));
            }
        }
    }

    // e > n(n − k − 1) + (k+1)²
    for k in (1..=delta).rev() {
        if n < 2 * k + 1 {
            continue;
        }
        let thr = n * (n - k - 1) + (k + 1) * (k + 1);
        if e <= thr {
            continue;
        }
        if let Some(c) = bipartite_family_containment(g, k)? {
            let p = FamilyParams {
                family: Family::B,
                n,
                k,
            };
            if is_family(k) {
                return Ok(ctx.exceptional(Rule::BipartiteEdgesMinDegree, k, Some(thr as f64), p));
            }
            let mut details = ctx.details(Some(k), Some(thr as f64), Some(p));
            details.witness = Some(containment_witness(graph, &c));
            return Ok(Certificate {
                verdict: Verdict::NonHamiltonianWitness,
                rule: Rule::BipartiteEdgesMinDegree,
                details,
            });
        }
        return ctx.by_theorem(Rule::BipartiteEdgesMinDegree, Some(k), Some(thr as f64));
    }

    ctx.exact()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::FamilyGraph;

    const BUDGET: u64 = 1 << 32;

    fn plain(f: Family, n: usize, k: usize) -> Graph {
        FamilyParams::new(f, n, k)
            .unwrap()
            .build()
            .unwrap()
            .into_graph()
    }

    fn bip(n: usize, k: usize) -> BipartiteGraph {
        match FamilyParams::new(Family::B, n, k).unwrap().build().unwrap() {
            FamilyGraph::Bipartite(b) => b,
            FamilyGraph::Plain(_) => unreachable!(),
        }
    }

    #[test]
    fn recognition_examples() {
        assert_eq!(
            recognize_family(&plain(Family::N, 10, 2)),
            vec![FamilyParams {
                family: Family::N,
                n: 10,
                k: 2
            }]
        );
        let both = recognize_family(&plain(Family::L, 5, 1));
        assert_eq!(both.len(), 2);
        assert!(both.contains(&FamilyParams {
            family: Family::N,
            n: 5,
            k: 1
        }));
        assert!(recognize_family(&Graph::cycle(6).unwrap()).is_empty());
        assert!(recognize_family(&Graph::complete(6).unwrap()).is_empty());
        assert_eq!(
            recognize_bipartite_family(&bip(7, 2)),
            Some(FamilyParams {
                family: Family::B,
                n: 7,
                k: 2
            })
        );
        assert_eq!(
            recognize_bipartite_family(&BipartiteGraph::complete(5).unwrap()),
            None
        );
    }

    #[test]
    fn n_family_with_singleton_clique_part() {
        // N^k_{2k+1} = K_k ∨ (k+1)K_1
        let g = plain(Family::N, 7, 3);
        assert_eq!(
            recognize_family(&g),
            vec![FamilyParams {
                family: Family::N,
                n: 7,
                k: 3
            }]
        );
    }

    #[test]
    fn containment_examples() {
        let g = plain(Family::N, 12, 2).without_edge(10, 11).unwrap();
        assert!(is_spanning_subgraph_of_family(&g, Family::N, 2).unwrap());
        let k8 = Graph::complete(8).unwrap();
        for f in [Family::L, Family::N] {
            assert!(!is_spanning_subgraph_of_family(&k8, f, 2).unwrap());
        }
        let l = plain(Family::L, 11, 3).without_edge(8, 9).unwrap();
        assert!(is_spanning_subgraph_of_family(&l, Family::L, 3).unwrap());
        assert!(!is_spanning_subgraph_of_family(&l, Family::N, 3).unwrap());

        // B^2_7 minus a Y–Z edge keeps δ = 2
        let b = bip(7, 2).without_edge(2, 9).unwrap();
        assert!(is_spanning_subgraph_of_bipartite_family(&b, 2).unwrap());
        assert!(!is_spanning_subgraph_of_bipartite_family(
            &BipartiteGraph::complete(7).unwrap(),
            2
        )
        .unwrap());

        assert!(matches!(
            is_spanning_subgraph_of_family(&Graph::path(5).unwrap(), Family::N, 2),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn complete_graph_by_spectral_rule() {
        let c = certify(&Graph::complete(7).unwrap(), BUDGET).unwrap();
        assert_eq!(c.verdict, Verdict::HamiltonianByTheorem);
        assert_eq!(c.rule, Rule::SpectralAboveNMinus2);
        assert_eq!(c.details.validated, Some(true));
    }

    #[test]
    fn n1_family_is_the_exception() {
        for n in 3..12 {
            let c = certify(&plain(Family::N, n, 1), BUDGET).unwrap();
            assert_eq!(c.verdict, Verdict::ExceptionalExtremal, "n={n}");
            assert_eq!(c.rule, Rule::SpectralAboveNMinus2);
        }
    }

    #[test]
    fn n_14_2_falls_back_to_exact_search() {
        let c = certify(&plain(Family::N, 14, 2), BUDGET).unwrap();
        assert_eq!(c.verdict, Verdict::NonHamiltonianWitness);
        assert_eq!(
            c.details.witness,
            Some(HamWitness::Cut {
                set: vec![2, 3],
                components: 3
            })
        );
    }

    #[test]
    fn n_20_2_is_exceptional_by_spectral_rule() {
        let c = certify(&plain(Family::N, 20, 2), BUDGET).unwrap();
        assert_eq!(c.verdict, Verdict::ExceptionalExtremal);
        assert_eq!(c.rule, Rule::SpectralMinDegree);
        assert_eq!(
            c.details.family,
            Some(FamilyParams {
                family: Family::N,
                n: 20,
                k: 2
            })
        );
    }

    #[test]
    fn bipartite_examples() {
        let c = certify_bipartite(&bip(7, 1), BUDGET).unwrap();
        assert_eq!(c.verdict, Verdict::ExceptionalExtremal);
        assert_eq!(c.rule, Rule::BipartiteSpectralMinDegree);

        // W = {0}, Y = 1..7 on side A; adding a W–Z edge breaks the family
        let plus = bip(7, 1).with_edge(0, 8).unwrap();
        assert_eq!(recognize_bipartite_family(&plus), None);
        let c = certify_bipartite(&plus, BUDGET).unwrap();
        assert!(matches!(
            c.verdict,
            Verdict::HamiltonianByTheorem | Verdict::HamiltonianWithCycle
        ));

        for n in 2..8 {
            let c = certify_bipartite(&BipartiteGraph::complete(n).unwrap(), BUDGET).unwrap();
            assert!(matches!(
                c.verdict,
                Verdict::HamiltonianByTheorem | Verdict::HamiltonianWithCycle
            ));
        }
    }

    #[test]
    fn display_record() {
        let c = certify(&Graph::complete(3).unwrap(), BUDGET).unwrap();
        let s = c.to_string();
        assert!(s.starts_with("verdict=HamiltonianByTheorem rule=spectral-gt-n-2 n=3"));
        assert!(s.contains("witness=cycle:0,1,2"));
    }
}
