//! Single-edge deletions from `N^k_n` and `L^k_n` stay below `n − k − 1`, and
//! the order bound that makes this true cannot be lowered.

use std::collections::BTreeSet;

use hamspec::spectral::{eval_f, eval_g, isolate_f_root};
use hamspec::spectral::{quotient_lambda, quotient_of_family, spectral_dense};
use hamspec::{Family, FamilyParams, Perturbation};
use num_rational::Ratio;

use crate::config::ExperimentConfig;
use crate::error::{CliError, CliResult};
use crate::report::{Relation, ReportRow};

const PROP: &str = "verify-prop11";
const SHARP: &str = "verify-sharpness";

/// Smallest integer `n` with `n ≥ k³/2 + k + 5/2`.
pub fn prop_order_threshold(k: usize) -> usize {
    (k * k * k + 2 * k + 5).div_ceil(2)
}

type Q = Ratio<i128>;

fn q(v: i64) -> Q {
    Q::from_integer(v as i128)
}

/// One edge per pair of vertex classes, or every edge with `all`.
fn deletion_candidates(p: FamilyParams, all: bool) -> CliResult<Vec<(usize, usize)>> {
    let lab = p.labelled(Perturbation::Intact)?;
    let g = lab.graph.graph();
    if all {
        return Ok(g.edges());
    }
    let class = lab.class_of();
    let mut seen = BTreeSet::new();
    Ok(g.edges()
        .into_iter()
        .filter(|&(u, v)| {
            let key = (class[u].min(class[v]), class[u].max(class[v]));
            seen.insert(key)
        })
        .collect())
}

fn edge_label(p: FamilyParams, u: usize, v: usize) -> CliResult<String> {
    let lab = p.labelled(Perturbation::Intact)?;
    let class = lab.class_of();
    Ok(format!(
        "lambda({p} - {}{}~{}{})",
        lab.labels[class[u]], u, lab.labels[class[v]], v
    ))
}

fn deletion_rows(p: FamilyParams, cfg: &ExperimentConfig) -> CliResult<Vec<ReportRow>> {
    let (n, k) = (p.n, p.k);
    let g = p.build()?.into_graph();
    let bound = (n - k - 1) as f64;
    let mut rows = Vec::new();
    for (u, v) in deletion_candidates(p, cfg.all_edges)? {
        let h = g.without_edge(u, v)?;
        if h.min_degree() < k {
            continue;
        }
        let lambda = spectral_dense(&h).lambda1;
        let label = edge_label(p, u, v)?;
        rows.push(ReportRow::check(
            PROP,
            n,
            k,
            &label,
            lambda,
            Relation::Lt,
            bound,
            cfg.tol,
        ));

        // deleting a further edge cannot raise λ, which is why single deletions suffice
        let rest = h.edges();
        let picks: BTreeSet<usize> = [0, rest.len() / 2, rest.len().saturating_sub(1)].into();
        for i in picks.into_iter().filter(|&i| i < rest.len()) {
            let (a, b) = rest[i];
            let smaller = spectral_dense(&h.without_edge(a, b)?).lambda1;
            rows.push(ReportRow::check(
                PROP,
                n,
                k,
                format!("{label} - {a}~{b}"),
                smaller,
                Relation::Le,
                lambda,
                cfg.tol,
            ));
        }
    }
    Ok(rows)
}

fn sign_rows(n: usize, k: usize) -> CliResult<Vec<ReportRow>> {
    let (ni, ki) = (n as i64, k as i64);
    let mut rows = vec![
        ReportRow::exact(
            PROP,
            n,
            k,
            "f(n-k-2)",
            eval_f(ni, ki, q(ni - ki - 2)),
            Relation::Lt,
            q(0),
        ),
        ReportRow::exact(
            PROP,
            n,
            k,
            "f(n-k-1)",
            eval_f(ni, ki, q(ni - ki - 1)),
            Relation::Gt,
            q(0),
        ),
    ];
    match isolate_f_root(ni, ki) {
        Ok(r) => {
            rows.push(ReportRow::check(
                PROP,
                n,
                k,
                "f-root-lo",
                r.lo,
                Relation::Ge,
                (n - k - 2) as f64,
                0.0,
            ));
            rows.push(ReportRow::check(
                PROP,
                n,
                k,
                "f-root-hi",
                r.hi,
                Relation::Le,
                (n - k - 1) as f64,
                0.0,
            ));
            rows.push(ReportRow::check(
                PROP,
                n,
                k,
                "f-root-width",
                r.width(),
                Relation::Le,
                1e-10,
                0.0,
            ));
            if n >= 2 * k + 2 {
                let p = FamilyParams::new(Family::N, n, k)?;
                let lq = quotient_lambda(&quotient_of_family(p, Perturbation::DropZZ)?)?;
                rows.push(ReportRow::check(
                    PROP,
                    n,
                    k,
                    "f-root vs quotient lambda(N-ZZ)",
                    r.midpoint(),
                    Relation::Eq,
                    lq,
                    1e-8,
                ));
            }
        }
        Err(e) => rows.push(ReportRow::flag(
            PROP,
            n,
            k,
            format!("f-root isolation: {e}"),
            false,
        )),
    }
    Ok(rows)
}

/// Checks every `(n, k)` in the configured grid. Below the order threshold the
/// grid point is reported as excluded unless `force` is set.
pub fn verify_prop11(cfg: &ExperimentConfig) -> CliResult<Vec<ReportRow>> {
    let mut rows = Vec::new();
    for &k in &cfg.ks {
        let n0 = prop_order_threshold(k);
        for n in cfg.ns() {
            if n < 2 * k + 1 {
                rows.push(ReportRow::excluded(
                    PROP,
                    n,
                    k,
                    "n < 2k+1: families undefined",
                ));
                continue;
            }
            if n < n0 && !cfg.force {
                rows.push(ReportRow::excluded(
                    PROP,
                    n,
                    k,
                    format!("n < ceil(k^3/2+k+5/2) = {n0}"),
                ));
                continue;
            }
            for family in [Family::N, Family::L] {
                rows.extend(deletion_rows(FamilyParams::new(family, n, k)?, cfg)?);
            }
            rows.extend(sign_rows(n, k)?);
        }
    }
    Ok(rows)
}

/// The order at which the threshold is shown to be tight, `k³/2 + k + 2`.
pub fn sharpness_order(k: usize) -> CliResult<usize> {
    if k < 2 || k % 2 == 1 {
        return Err(CliError::Usage(format!(
            "k = {k}: sharpness needs an even k >= 2 so that n = k^3/2 + k + 2 is an integer"
        )));
    }
    Ok(k * k * k / 2 + k + 2)
}

/// Exact `g(n) = 4 − 2k²` at `n = k³/2 + k + 2`, and `λ(N^k_n − uv) > n − k − 1`
/// by at least `1e-6` for a `Z–Z` edge `uv`.
pub fn verify_sharpness(k: usize) -> CliResult<Vec<ReportRow>> {
    let n = sharpness_order(k)?;
    let (ni, ki) = (n as i64, k as i64);
    let mut rows = vec![
        ReportRow::exact(
            SHARP,
            n,
            k,
            "g(n)",
            eval_g(ni, ki, q(ni)),
            Relation::Eq,
            q(4 - 2 * ki * ki),
        ),
        ReportRow::exact(
            SHARP,
            n,
            k,
            "f(n-k-1) - g(n)",
            eval_f(ni, ki, q(ni - ki - 1)) - eval_g(ni, ki, q(ni)),
            Relation::Eq,
            q(0),
        ),
    ];
    let p = FamilyParams::new(Family::N, n, k)?;
    let lab = p.labelled(Perturbation::DropZZ)?;
    let lq = quotient_lambda(&quotient_of_family(p, Perturbation::DropZZ)?)?;
    let label = format!("lambda({p} - Z~Z) quotient");
    rows.push(ReportRow::check(
        SHARP,
        n,
        k,
        label,
        lq,
        Relation::Gt,
        (n - k - 1) as f64,
        1e-6,
    ));
    let dense = spectral_dense(lab.graph.graph()).lambda1;
    rows.push(ReportRow::check(
        SHARP,
        n,
        k,
        "dense vs quotient lambda",
        dense,
        Relation::Eq,
        lq,
        1e-8,
    ));
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::all_pass;

    #[test]
    fn thresholds() {
        assert_eq!(prop_order_threshold(1), 4);
        assert_eq!(prop_order_threshold(2), 9);
        assert_eq!(prop_order_threshold(3), 19);
        assert_eq!(sharpness_order(2).unwrap(), 8);
        assert_eq!(sharpness_order(4).unwrap(), 38);
        assert!(matches!(sharpness_order(3), Err(CliError::Usage(_))));
    }

    #[test]
    fn orbit_representatives() {
        let p = FamilyParams::new(Family::N, 10, 2).unwrap();
        // X–Y, Y–Y, Y–Z, Z–Z
        assert_eq!(deletion_candidates(p, false).unwrap().len(), 4);
        assert_eq!(deletion_candidates(p, true).unwrap().len(), 32);
    }

    #[test]
    fn below_threshold_is_reported_as_failure_when_forced() {
        let mut cfg = ExperimentConfig::new(PROP).with_ks(&[2]).with_range(8, 8);
        let rows = verify_prop11(&cfg).unwrap();
        assert!(rows.iter().all(|r| r.relation == Relation::Excluded));
        cfg.force = true;
        let rows = verify_prop11(&cfg).unwrap();
        assert!(!all_pass(&rows));
        let zz = rows
            .iter()
            .find(|r| r.quantity.starts_with("lambda(N^2_8 - Z") && r.relation == Relation::Lt)
            .unwrap();
        assert!(!zz.pass && zz.value > 5.0);
    }

    #[test]
    fn sharpness_k2() {
        let rows = verify_sharpness(2).unwrap();
        assert!(all_pass(&rows), "{rows:#?}");
        assert_eq!(rows[0].value, -4.0);
    }
}
