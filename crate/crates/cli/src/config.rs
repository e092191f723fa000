use std::path::PathBuf;

use crate::error::{CliError, CliResult};

pub const DEFAULT_TOL: f64 = 1e-9;
pub const DEFAULT_BUDGET: u64 = 1 << 32;

/// Everything an experiment needs; the seed alone fixes every random choice.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub experiment: String,
    pub ks: Vec<usize>,
    pub n_min: usize,
    pub n_max: usize,
    pub seed: u64,
    /// Random plain graphs in a suite.
    pub samples: usize,
    /// Random balanced bipartite graphs in a suite.
    pub bipartite_samples: usize,
    /// Accepted near-complete bipartite samples above the spectral threshold.
    pub backbone_samples: usize,
    /// Largest part size for bipartite samples.
    pub half_max: usize,
    pub tol: f64,
    pub all_edges: bool,
    pub force: bool,
    pub budget: u64,
    pub out: Option<PathBuf>,
}

impl ExperimentConfig {
    pub fn new(experiment: &str) -> Self {
        ExperimentConfig {
            experiment: experiment.to_string(),
            ks: vec![1, 2],
            n_min: 3,
            n_max: 16,
            seed: 42,
            samples: 1000,
            bipartite_samples: 500,
            backbone_samples: 200,
            half_max: 10,
            tol: DEFAULT_TOL,
            all_edges: false,
            force: false,
            budget: DEFAULT_BUDGET,
            out: None,
        }
    }

    pub fn with_ks(mut self, ks: &[usize]) -> Self {
        self.ks = ks.to_vec();
        self
    }

    pub fn with_range(mut self, n_min: usize, n_max: usize) -> Self {
        self.n_min = n_min;
        self.n_max = n_max;
        self
    }

    pub fn ns(&self) -> std::ops::RangeInclusive<usize> {
        self.n_min..=self.n_max
    }
}

/// Parses `3`, `1,2,4`, `1..3`, `1..=3` or `1-3` into a sorted list without repeats.
pub fn parse_k_list(s: &str) -> CliResult<Vec<usize>> {
    let bad = || CliError::Usage(format!("cannot read k list {s:?}; try 2, 1,2 or 1..3"));
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    let mut out = Vec::new();
    for part in s.split(',').filter(|p| !p.trim().is_empty()) {
        let range = part
            .split_once("..=")
            .or_else(|| part.split_once(".."))
            .or_else(|| part.split_once('-'));
        match range {
            Some((a, b)) => {
                let (a, b) = (num(a)?, num(b)?);
                if a > b {
                    return Err(bad());
                }
                out.extend(a..=b);
            }
            None => out.push(num(part)?),
        }
    }
    if out.is_empty() || out.contains(&0) {
        return Err(bad());
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k_lists() {
        assert_eq!(parse_k_list("2").unwrap(), vec![2]);
        assert_eq!(parse_k_list("3,1,2,1").unwrap(), vec![1, 2, 3]);
        assert_eq!(parse_k_list("1..3").unwrap(), vec![1, 2, 3]);
        assert_eq!(parse_k_list("1..=3").unwrap(), vec![1, 2, 3]);
        assert_eq!(parse_k_list("2-4,6").unwrap(), vec![2, 3, 4, 6]);
        for bad in ["", "0", "a", "3..1", "1,,x"] {
            assert!(parse_k_list(bad).is_err(), "{bad}");
        }
    }
}
