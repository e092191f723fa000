//! Threshold grid: family spectral radii against the bounds they sharpen.

use std::io::Write;

use hamspec::spectral::{quotient_lambda, quotient_of_family};
use hamspec::{Family, FamilyParams, Perturbation};

use crate::config::ExperimentConfig;
use crate::error::CliResult;
use crate::report::fmt_sig;

pub const SWEEP_HEADER: [&str; 9] = [
    "n",
    "k",
    "lambda_N",
    "lambda_L",
    "lambda_B",
    "n_minus_k_minus_1",
    "sqrt_n_n_minus_k",
    "edge_threshold",
    "bipartite_edge_threshold",
];

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub n: usize,
    pub k: usize,
    pub lambda_n: f64,
    pub lambda_l: f64,
    pub lambda_b: f64,
    pub n_minus_k_minus_1: usize,
    pub sqrt_n_n_minus_k: f64,
    /// `C(n−k−1, 2) + (k+1)²`
    pub edge_threshold: usize,
    /// `n(n−k−1) + (k+1)²`
    pub bipartite_edge_threshold: usize,
}

fn family_lambda(family: Family, n: usize, k: usize) -> CliResult<f64> {
    let p = FamilyParams::new(family, n, k)?;
    Ok(quotient_lambda(&quotient_of_family(
        p,
        Perturbation::Intact,
    )?)?)
}

/// One row per `(n, k)` with `n ≥ 2k + 1`, ordered by `n` then `k`.
pub fn sweep(cfg: &ExperimentConfig) -> CliResult<Vec<SweepRow>> {
    let mut rows = Vec::new();
    for n in cfg.ns() {
        for &k in cfg.ks.iter().filter(|&&k| n > 2 * k) {
            let m = n - k - 1;
            rows.push(SweepRow {
                n,
                k,
                lambda_n: family_lambda(Family::N, n, k)?,
                lambda_l: family_lambda(Family::L, n, k)?,
                lambda_b: family_lambda(Family::B, n, k)?,
                n_minus_k_minus_1: m,
                sqrt_n_n_minus_k: ((n * (n - k)) as f64).sqrt(),
                edge_threshold: m * (m - 1) / 2 + (k + 1) * (k + 1),
                bipartite_edge_threshold: n * m + (k + 1) * (k + 1),
            });
        }
    }
    Ok(rows)
}

pub fn write_sweep_csv<W: Write>(rows: &[SweepRow], out: W) -> CliResult<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(SWEEP_HEADER)?;
    for r in rows {
        w.write_record([
            r.n.to_string(),
            r.k.to_string(),
            fmt_sig(r.lambda_n),
            fmt_sig(r.lambda_l),
            fmt_sig(r.lambda_b),
            r.n_minus_k_minus_1.to_string(),
            fmt_sig(r.sqrt_n_n_minus_k),
            r.edge_threshold.to_string(),
            r.bipartite_edge_threshold.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example_rows() {
        let cfg = ExperimentConfig::new("sweep")
            .with_ks(&[1, 2])
            .with_range(10, 10);
        let rows = sweep(&cfg).unwrap();
        assert_eq!(rows.len(), 2);
        assert!(rows[0].lambda_n > 8.0);
        assert!(rows[1].lambda_b > 80f64.sqrt());
        assert_eq!(rows[1].edge_threshold, 21 + 9);
        assert_eq!(rows[1].bipartite_edge_threshold, 70 + 9);
    }

    #[test]
    fn empty_range_is_header_only() {
        let cfg = ExperimentConfig::new("sweep").with_range(10, 9);
        let rows = sweep(&cfg).unwrap();
        let mut buf = Vec::new();
        write_sweep_csv(&rows, &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            SWEEP_HEADER.join(",") + "\n"
        );
    }
}
