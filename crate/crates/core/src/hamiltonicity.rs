//! Exact Hamiltonian-cycle decision with checkable certificates.
//!
//! Positive answers carry the cycle. Negative answers carry a cut witness, a
//! set `S` whose removal leaves more than `|S|` components, whenever one is
//! found among small sets and neighbourhoods of minimum-degree vertices;
//! otherwise the exhaustive search itself is the certificate.

use crate::error::{Error, Result};
use crate::graph::{BipartiteGraph, Graph};

/// Largest order handled by the subset dynamic programme.
pub const DP_LIMIT: usize = 22;
/// Largest order handled by the bipartite dynamic programme.
pub const BIPARTITE_DP_LIMIT: usize = 24;
/// Largest order handled by backtracking.
pub const BACKTRACK_LIMIT: usize = 128;

/// Total subsets of size four and up tried by the cut search.
const CUT_SUBSET_CAP: u64 = 20_000;
/// Backtracking steps tried before the dynamic programme, which always pays for
/// every subset even when a cycle is easy to find.
const PROBE_STEPS: u64 = 20_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HamWitness {
    Cycle(Vec<usize>),
    Cut { set: Vec<usize>, components: usize },
    Exhausted,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HamOutcome {
    Decided {
        hamiltonian: bool,
        witness: HamWitness,
    },
    /// Search effort exceeded the budget before an answer was found.
    Unknown { work: u64 },
}

impl HamOutcome {
    pub fn is_hamiltonian(&self) -> Option<bool> {
        match self {
            HamOutcome::Decided { hamiltonian, .. } => Some(*hamiltonian),
            HamOutcome::Unknown { .. } => None,
        }
    }

    pub fn witness(&self) -> Option<&HamWitness> {
        match self {
            HamOutcome::Decided { witness, .. } => Some(witness),
            HamOutcome::Unknown { .. } => None,
        }
    }
}

/// Result of one exact search routine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Search {
    Found(Vec<usize>),
    Absent,
    OutOfBudget { work: u64 },
}

/// Whether `cycle` visits every vertex once along edges of `g`, closing up.
pub fn verify_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let n = g.order();
    if cycle.len() != n || n < 3 {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in cycle {
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    (0..n).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % n]))
}

/// Number of components of `g − set`.
pub fn components_after_removal(g: &Graph, set: &[usize]) -> usize {
    let mut removed = vec![false; g.order()];
    for &v in set {
        removed[v] = true;
    }
    g.components_without(&removed).len()
}

/// A Hamiltonian graph minus a nonempty `S` has at most `|S|` components, and is
/// connected to begin with.
fn breaks_hamiltonicity(components: usize, set_size: usize) -> bool {
    components > set_size.max(1)
}

/// Whether `set` is a valid cut witness: removal leaves more than `|set|`
/// components (more than one when `set` is empty).
pub fn verify_cut(g: &Graph, set: &[usize], components: usize) -> bool {
    let c = components_after_removal(g, set);
    c == components && breaks_hamiltonicity(c, set.len())
}

fn binomial(n: usize, r: usize) -> u64 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    (0..r).fold(1u64, |acc, i| {
        acc.saturating_mul((n - i) as u64) / (i as u64 + 1)
    })
}

fn for_each_subset(n: usize, size: usize, mut visit: impl FnMut(&[usize]) -> bool) -> bool {
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        if visit(&idx) {
            return true;
        }
        // advance to the next combination in lexicographic order
        let mut i = size;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            if idx[i] < n - size + i {
                idx[i] += 1;
                for j in i + 1..size {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Cut witness search: every set of size at most 3, the neighbourhoods of the
/// minimum-degree vertices, then larger sets up to `max_size` while a shared
/// subset budget lasts. Sizes are tried in increasing order.
pub fn find_cut_witness(g: &Graph, max_size: usize) -> Option<(Vec<usize>, usize)> {
    let n = g.order();
    let mut found = None;
    let mut try_set = |set: &[usize]| {
        let c = components_after_removal(g, set);
        if breaks_hamiltonicity(c, set.len()) {
            found = Some((set.to_vec(), c));
            true
        } else {
            false
        }
    };
    for size in 0..=max_size.min(n.saturating_sub(1)) {
        if size > 3 {
            break;
        }
        if for_each_subset(n, size, &mut try_set) {
            return found;
        }
    }

    // neighbourhood of all minimum-degree vertices, then of each one
    let delta = g.min_degree();
    let low: Vec<usize> = (0..n).filter(|&v| g.degree(v) == delta).collect();
    let mut union: Vec<usize> = low.iter().flat_map(|&v| g.neighbors(v)).collect();
    union.sort_unstable();
    union.dedup();
    let mut candidates = vec![union];
    candidates.extend(low.iter().map(|&v| g.neighbors(v).collect::<Vec<_>>()));
    for cand in candidates {
        if try_set(&cand) {
            return found;
        }
    }

    let mut remaining = CUT_SUBSET_CAP;
    for size in 4..=max_size.min(n.saturating_sub(1)) {
        let count = binomial(n, size);
        if count > remaining {
            break;
        }
        remaining -= count;
        if for_each_subset(n, size, &mut try_set) {
            return found;
        }
    }
    None
}

/// Bitmask dynamic programme over subsets containing vertex 0.
pub fn hamiltonian_dp(g: &Graph, budget: u64) -> Search {
    dp_search(g, None, budget)
}

/// The same programme restricted to subsets whose two sides can lie on an
/// alternating path from vertex 0.
pub fn hamiltonian_dp_bipartite(g: &BipartiteGraph, budget: u64) -> Search {
    let side0 = g.side(0);
    let mask: u32 = (1..g.graph().order())
        .filter(|&v| g.side(v) == side0)
        .map(|v| 1u32 << (v - 1))
        .sum();
    dp_search(g.graph(), Some(mask), budget)
}

fn dp_search(g: &Graph, same_side_as_start: Option<u32>, budget: u64) -> Search {
    let n = g.order();
    assert!(
        (3..=BIPARTITE_DP_LIMIT).contains(&n),
        "dp handles 3..=24 vertices"
    );
    let m = n - 1;
    let full: u32 = (1u32 << m) - 1;
    let adj: Vec<u32> = (1..n).map(|v| ((g.mask64(v) >> 1) as u32) & full).collect();
    let adj0 = ((g.mask64(0) >> 1) as u32) & full;

    let states = 1u64 << m;
    let cost = states * m as u64;
    if cost > budget {
        return Search::OutOfBudget { work: cost };
    }

    let mut dp = vec![0u32; states as usize];
    for w in 0..m {
        if adj0 >> w & 1 == 1 {
            dp[1 << w] = 1 << w;
        }
    }
    for mask in 1..=full {
        let ends = dp[mask as usize];
        if ends == 0 {
            continue;
        }
        if let Some(side) = same_side_as_start {
            // a path 0, b, a, b, ... covering mask holds ⌊|mask|/2⌋ start-side vertices
            if (mask & side).count_ones() != mask.count_ones() / 2 {
                continue;
            }
        }
        let mut rest = !mask & full;
        while rest != 0 {
            let w = rest.trailing_zeros();
            rest &= rest - 1;
            if adj[w as usize] & ends != 0 {
                dp[(mask | 1 << w) as usize] |= 1 << w;
            }
        }
    }

    let closing = dp[full as usize] & adj0;
    if closing == 0 {
        return Search::Absent;
    }
    // walk back from the lowest-index closing vertex, lowest index first
    let mut cur = closing.trailing_zeros();
    let mut mask = full;
    let mut back = vec![cur as usize + 1];
    while mask.count_ones() > 1 {
        let prev = mask ^ (1 << cur);
        let choices = dp[prev as usize] & adj[cur as usize];
        cur = choices.trailing_zeros();
        back.push(cur as usize + 1);
        mask = prev;
    }
    let mut cycle = vec![0];
    cycle.extend(back.into_iter().rev());
    Search::Found(cycle)
}

struct Backtracker {
    n: usize,
    adj: Vec<u128>,
    budget: u64,
    work: u64,
}

impl Backtracker {
    fn feasible(&self, cur: usize, visited: u128) -> bool {
        let all: u128 = if self.n == 128 {
            u128::MAX
        } else {
            (1u128 << self.n) - 1
        };
        let unvisited = all & !visited;
        if unvisited == 0 {
            return self.adj[cur] & 1 == 1;
        }
        if self.adj[0] & unvisited == 0 {
            return false;
        }
        // every unvisited vertex needs two usable neighbours
        let usable = unvisited | (1u128 << cur) | 1;
        let mut rest = unvisited;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if (self.adj[u] & usable).count_ones() < 2 {
                return false;
            }
        }
        // the unvisited part must hang together off the current endpoint
        let mut reach = self.adj[cur] & unvisited;
        let mut frontier = reach;
        while frontier != 0 {
            let u = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = self.adj[u] & unvisited & !reach;
            reach |= new;
            frontier |= new;
        }
        reach == unvisited
    }

    fn extend(&mut self, path: &mut Vec<usize>, visited: u128) -> Option<bool> {
        self.work += 1;
        if self.work > self.budget {
            return None;
        }
        let cur = *path.last().expect("path starts at 0");
        if path.len() == self.n {
            return Some(self.adj[cur] & 1 == 1);
        }
        if !self.feasible(cur, visited) {
            return Some(false);
        }
        // fewest onward options first, ties by index
        let mut next: Vec<(u32, usize)> = Vec::new();
        let mut cand = self.adj[cur] & !visited;
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            next.push(((self.adj[v] & !visited).count_ones(), v));
        }
        next.sort_unstable();
        for (_, v) in next {
            path.push(v);
            match self.extend(path, visited | 1u128 << v) {
                Some(true) => return Some(true),
                None => return None,
                Some(false) => {}
            }
            path.pop();
        }
        Some(false)
    }
}

/// Depth-first search from vertex 0 with degree and connectivity pruning.
pub fn hamiltonian_backtrack(g: &Graph, budget: u64) -> Search {
    let n = g.order();
    assert!(
        (3..=BACKTRACK_LIMIT).contains(&n),
        "backtracking handles 3..=128 vertices"
    );
    let adj = (0..n)
        .map(|v| g.neighbors(v).fold(0u128, |m, u| m | 1u128 << u))
        .collect();
    let mut bt = Backtracker {
        n,
        adj,
        budget,
        work: 0,
    };
    let mut path = vec![0];
    match bt.extend(&mut path, 1) {
        Some(true) => Search::Found(path),
        Some(false) => Search::Absent,
        None => Search::OutOfBudget { work: bt.work },
    }
}

/// Rotates `cycle` to start at its smallest vertex and orients it so the second
/// entry is below the last.
pub fn canonical_cycle(cycle: &[usize]) -> Vec<usize> {
    let Some(start) = cycle
        .iter()
        .enumerate()
        .min_by_key(|&(_, v)| *v)
        .map(|(i, _)| i)
    else {
        return Vec::new();
    };
    let mut out: Vec<usize> = cycle[start..]
        .iter()
        .chain(&cycle[..start])
        .copied()
        .collect();
    if out.len() > 2 && out[1] > out[out.len() - 1] {
        out[1..].reverse();
    }
    out
}

fn finish(g: &Graph, search: Search) -> HamOutcome {
    match search {
        Search::Found(cycle) => {
            let cycle = canonical_cycle(&cycle);
            assert!(
                verify_cycle(g, &cycle),
                "search returned an invalid cycle {cycle:?}"
            );
            HamOutcome::Decided {
                hamiltonian: true,
                witness: HamWitness::Cycle(cycle),
            }
        }
        Search::Absent => HamOutcome::Decided {
            hamiltonian: false,
            witness: HamWitness::Exhausted,
        },
        Search::OutOfBudget { work } => HamOutcome::Unknown { work },
    }
}

fn cut_outcome(g: &Graph) -> Option<HamOutcome> {
    let max_size = 3.max(g.min_degree() + 1);
    find_cut_witness(g, max_size).map(|(set, components)| {
        debug_assert!(verify_cut(g, &set, components));
        HamOutcome::Decided {
            hamiltonian: false,
            witness: HamWitness::Cut { set, components },
        }
    })
}

fn probe_then(g: &Graph, budget: u64, exhaustive: impl FnOnce(u64) -> Search) -> Search {
    match hamiltonian_backtrack(g, PROBE_STEPS.min(budget)) {
        Search::Found(cycle) => Search::Found(cycle),
        Search::Absent => Search::Absent,
        Search::OutOfBudget { work } => match exhaustive(budget.saturating_sub(work)) {
            Search::OutOfBudget { work: more } => Search::OutOfBudget { work: work + more },
            other => other,
        },
    }
}

/// Exact Hamiltonicity of `g`. `budget` bounds the number of elementary search
/// steps; exceeding it yields [`HamOutcome::Unknown`].
pub fn is_hamiltonian(g: &Graph, budget: u64) -> Result<HamOutcome> {
    let n = g.order();
    if n < 3 {
        return Err(Error::Precondition(format!(
            "Hamiltonicity needs n >= 3, got {n}"
        )));
    }
    if let Some(out) = cut_outcome(g) {
        return Ok(out);
    }
    let search = if n <= DP_LIMIT {
        probe_then(g, budget, |rest| hamiltonian_dp(g, rest))
    } else if n <= BACKTRACK_LIMIT {
        hamiltonian_backtrack(g, budget)
    } else {
        return Err(Error::Precondition(format!(
            "exact search is limited to {BACKTRACK_LIMIT} vertices, got {n}"
        )));
    };
    Ok(finish(g, search))
}

/// Exact Hamiltonicity of a balanced bipartite graph.
pub fn is_hamiltonian_bipartite(g: &BipartiteGraph, budget: u64) -> Result<HamOutcome> {
    let n = g.half_order();
    if n < 2 {
        return Err(Error::Precondition(format!(
            "bipartite Hamiltonicity needs n >= 2 per side, got {n}"
        )));
    }
    let graph = g.graph();
    // a side-A vertex of degree 0 is a cut witness already (S = ∅)
    if let Some(out) = cut_outcome(graph) {
        return Ok(out);
    }
    let search = if graph.order() <= BIPARTITE_DP_LIMIT {
        probe_then(graph, budget, |rest| hamiltonian_dp_bipartite(g, rest))
    } else if graph.order() <= BACKTRACK_LIMIT {
        hamiltonian_backtrack(graph, budget)
    } else {
        return Err(Error::Precondition(format!(
            "exact search is limited to {BACKTRACK_LIMIT} vertices"
        )));
    };
    debug_assert!(match &search {
        Search::Found(c) => c.windows(2).all(|w| g.side(w[0]) != g.side(w[1])),
        _ => true,
    });
    Ok(finish(graph, search))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{Family, FamilyParams};

    const BUDGET: u64 = 1 << 32;

    #[test]
    fn cycle_graph_is_its_own_witness() {
        for n in 3..10 {
            let out = is_hamiltonian(&Graph::cycle(n).unwrap(), BUDGET).unwrap();
            assert_eq!(
                out,
                HamOutcome::Decided {
                    hamiltonian: true,
                    witness: HamWitness::Cycle((0..n).collect())
                }
            );
        }
    }

    #[test]
    fn n_10_2_cut_is_join_vertices() {
        let g = FamilyParams::new(Family::N, 10, 2)
            .unwrap()
            .build()
            .unwrap()
            .into_graph();
        let out = is_hamiltonian(&g, BUDGET).unwrap();
        let Some(HamWitness::Cut { set, components }) = out.witness() else {
            panic!("expected a cut, got {out:?}");
        };
        assert_eq!(set, &vec![2, 3]);
        assert_eq!(*components, 3);
        assert_eq!(hamiltonian_dp(&g, BUDGET), Search::Absent);
    }

    #[test]
    fn l_family_cut_vertex() {
        let p = FamilyParams::new(Family::L, 9, 3).unwrap();
        let g = p.build().unwrap().into_graph();
        let out = is_hamiltonian(&g, BUDGET).unwrap();
        assert_eq!(
            out.witness(),
            Some(&HamWitness::Cut {
                set: vec![3],
                components: 2
            })
        );
    }

    #[test]
    fn complete_bipartite_is_hamiltonian() {
        for n in 2..8 {
            let g = BipartiteGraph::complete(n).unwrap();
            let out = is_hamiltonian_bipartite(&g, BUDGET).unwrap();
            assert_eq!(out.is_hamiltonian(), Some(true));
        }
    }

    #[test]
    fn b_family_cut_is_x() {
        for (n, k) in [(5, 1), (7, 2), (8, 3)] {
            let p = FamilyParams::new(Family::B, n, k).unwrap();
            let crate::family::FamilyGraph::Bipartite(bg) = p.build().unwrap() else {
                unreachable!()
            };
            let out = is_hamiltonian_bipartite(&bg, BUDGET).unwrap();
            let Some(HamWitness::Cut { set, components }) = out.witness() else {
                panic!("expected a cut for B^{k}_{n}");
            };
            assert!(set.len() <= k);
            assert!(*components > set.len());
            assert_eq!(hamiltonian_dp_bipartite(&bg, BUDGET), Search::Absent);
        }
    }

    #[test]
    fn isolated_side_vertex() {
        let g = BipartiteGraph::complete(4).unwrap();
        let mut g = g;
        for b in 4..8 {
            g = g.without_edge(0, b).unwrap();
        }
        let out = is_hamiltonian_bipartite(&g, BUDGET).unwrap();
        assert_eq!(out.is_hamiltonian(), Some(false));
    }

    #[test]
    fn petersen_has_no_cut_but_is_not_hamiltonian() {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        let g = Graph::from_edges(10, outer.chain(spokes).chain(inner)).unwrap();
        let out = is_hamiltonian(&g, BUDGET).unwrap();
        assert_eq!(
            out,
            HamOutcome::Decided {
                hamiltonian: false,
                witness: HamWitness::Exhausted
            }
        );
        assert_eq!(hamiltonian_backtrack(&g, BUDGET), Search::Absent);
    }

    #[test]
    fn budget_exhaustion_is_unknown() {
        let g = Graph::complete(20).unwrap();
        assert!(matches!(
            is_hamiltonian(&g, 10).unwrap(),
            HamOutcome::Unknown { .. }
        ));
        let petersen_like = Graph::cycle(30).unwrap();
        assert!(matches!(
            hamiltonian_backtrack(&petersen_like, 5),
            Search::OutOfBudget { .. }
        ));
    }

    #[test]
    fn backtracking_beyond_dp_limit() {
        let g = Graph::cycle(40).unwrap();
        let out = is_hamiltonian(&g, BUDGET).unwrap();
        assert_eq!(out.is_hamiltonian(), Some(true));
        let p = FamilyParams::new(Family::N, 30, 3)
            .unwrap()
            .build()
            .unwrap()
            .into_graph();
        assert_eq!(
            is_hamiltonian(&p, BUDGET).unwrap().is_hamiltonian(),
            Some(false)
        );
    }

    #[test]
    fn tiny_graphs_rejected() {
        assert!(is_hamiltonian(&Graph::complete(2).unwrap(), BUDGET).is_err());
    }

    #[test]
    fn verify_cut_rejects_false_claims() {
        let g = Graph::cycle(6).unwrap();
        assert!(!verify_cut(&g, &[0], 1));
        assert!(!verify_cut(&g, &[0, 3], 2));
        assert!(verify_cycle(&g, &[0, 1, 2, 3, 4, 5]));
        assert!(!verify_cycle(&g, &[0, 2, 1, 3, 4, 5]));
    }
}
