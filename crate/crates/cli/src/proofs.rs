//! Numerical replay of the Rayleigh-quotient contradictions on the largest
//! proper subgraphs of `L^k_n` and `B^k_n`.
//!
//! On `L^k_n − uv` (`uv` inside `Z`) the Perron class values `x, y, t` on `X`,
//! the hub `w` and `{u, v}` must give `φ = 2t² − 2kxy − k(k−1)x² > 0`, while the
//! restriction to the big clique forces `λ + φ < n − k − 1`.
//!
//! On `B^k_n − uv` (`u ∈ Y`, `v ∈ Z`) with values `w, x, y, z, s, t` the sandwich
//! `(1 − k/n − 1/n²)y < z < y` and `λst − k³x² > 0` must hold.

use hamspec::spectral::{perron_class_values, quotient_lambda, quotient_of_family, QuotientMatrix};
use hamspec::{Family, FamilyParams, Perturbation};

use crate::config::ExperimentConfig;
use crate::error::CliResult;
use crate::prop::prop_order_threshold;
use crate::report::{Relation, ReportRow};

const EXP: &str = "verify-proofs";

/// Lower bounds for `φ/y²` at `λ ≥ n − k − 1`: the `k = 1` value and the `k ≥ 2` value.
pub fn phi_floor(k: usize) -> f64 {
    if k == 1 {
        2.0 * (4.0f64 / 5.0).powi(2) * (11.0f64 / 12.0).powi(2) - 2.0 / 3.0
    } else {
        2.0 * (11.0 / 15.0) * (101.0 / 117.0) - 10.0 / 9.0
    }
}

/// `φ/y²` written through the eigen-equations of `L^k_n − uv` as a function of `λ`.
pub fn phi_over_y2(k: usize, lambda: f64) -> f64 {
    let k = k as f64;
    let a = lambda - k + 1.0;
    let ratio = (lambda + 1.0) / (lambda + 2.0);
    let inner = 1.0 - k / (a * (lambda + 1.0));
    2.0 * ratio * ratio * inner * inner - 2.0 * k / a - (k * k - k) / (a * a)
}

fn class(q: &QuotientMatrix, values: &[f64], label: &str) -> f64 {
    values[q.index_of(label).expect("class present")]
}

fn l_rows(n: usize, k: usize, tol: f64) -> CliResult<Vec<ReportRow>> {
    if n < prop_order_threshold(k) || n < 2 * k + 1 {
        return Ok(vec![ReportRow::excluded(
            EXP,
            n,
            k,
            "L: n < ceil(k^3/2+k+5/2)",
        )]);
    }
    if n < k + 3 {
        return Ok(vec![ReportRow::excluded(EXP, n, k, "L: no Z-Z edge")]);
    }
    if k == 1 && n == 4 {
        // L^1_4 − uv is the claw, whose λ is already below n − k − 1
        return Ok(vec![ReportRow::excluded(
            EXP,
            n,
            k,
            "L: L^1_4 - uv is the claw",
        )]);
    }
    let p = FamilyParams::new(Family::L, n, k)?;
    let q = quotient_of_family(p, Perturbation::DropZZ)?;
    let lambda = quotient_lambda(&q)?;
    let v = perron_class_values(&q, lambda);
    let (x, y, t) = (class(&q, &v, "X"), class(&q, &v, "w"), class(&q, &v, "T"));
    let kf = k as f64;
    let phi = 2.0 * t * t - 2.0 * kf * x * y - kf * (kf - 1.0) * x * x;
    let target = (n - k - 1) as f64;
    let mut rows = vec![
        ReportRow::check(
            EXP,
            n,
            k,
            "L-uv: phi/y^2",
            phi / (y * y),
            Relation::Gt,
            0.0,
            tol,
        ),
        ReportRow::check(
            EXP,
            n,
            k,
            "L-uv: lambda + phi",
            lambda + phi,
            Relation::Lt,
            target,
            tol,
        ),
        ReportRow::check(
            EXP,
            n,
            k,
            "L-uv: phi/y^2 closed form at lambda",
            phi_over_y2(k, lambda),
            Relation::Eq,
            phi / (y * y),
            1e-8,
        ),
        ReportRow::check(
            EXP,
            n,
            k,
            "L-uv: phi/y^2 closed form at n-k-1",
            phi_over_y2(k, target),
            Relation::Ge,
            phi_floor(k),
            tol,
        ),
        ReportRow::check(
            EXP,
            n,
            k,
            "L-uv: phi/y^2 floor",
            phi_floor(k),
            Relation::Gt,
            0.0,
            0.0,
        ),
    ];
    rows.push(ReportRow::check(
        EXP,
        n,
        k,
        "L-uv: lambda",
        lambda,
        Relation::Lt,
        target,
        tol,
    ));
    Ok(rows)
}

fn b_rows(n: usize, k: usize, tol: f64) -> CliResult<Vec<ReportRow>> {
    if n < k * k * k + 2 * k + 4 {
        return Ok(vec![ReportRow::excluded(EXP, n, k, "B: n < k^3+2k+4")]);
    }
    let p = FamilyParams::new(Family::B, n, k)?;
    let q = quotient_of_family(p, Perturbation::DropYZ)?;
    let lambda = quotient_lambda(&q)?;
    let v = perron_class_values(&q, lambda);
    let get = |l| class(&q, &v, l);
    let (x, y, z, s, t) = (get("X"), get("Y"), get("Z"), get("s"), get("t"));
    let (nf, kf) = (n as f64, k as f64);
    let root = (nf * (nf - kf)).sqrt();
    let intact = quotient_lambda(&quotient_of_family(p, Perturbation::Intact)?)?;
    let other = quotient_lambda(&quotient_of_family(p, Perturbation::DropXY)?)?;
    let mid = nf - kf / 2.0 - 1.0 / 12.0;
    Ok(vec![
        ReportRow::check(
            EXP,
            n,
            k,
            "B-uv: z/y",
            z / y,
            Relation::Gt,
            1.0 - kf / nf - 1.0 / (nf * nf),
            tol,
        ),
        ReportRow::check(EXP, n, k, "B-uv: z/y", z / y, Relation::Lt, 1.0, tol),
        ReportRow::check(
            EXP,
            n,
            k,
            "B-uv: (lambda*s*t - k^3*x^2)/y^2",
            (lambda * s * t - kf.powi(3) * x * x) / (y * y),
            Relation::Gt,
            0.0,
            tol,
        ),
        ReportRow::check(
            EXP,
            n,
            k,
            "B-uv: lambda",
            lambda,
            Relation::Gt,
            nf - kf,
            tol,
        ),
        ReportRow::check(EXP, n, k, "B-uv: lambda", lambda, Relation::Lt, nf, tol),
        ReportRow::check(EXP, n, k, "B-uv: lambda", lambda, Relation::Lt, root, tol),
        ReportRow::check(
            EXP,
            n,
            k,
            "B-XY vs B-YZ lambda",
            other,
            Relation::Le,
            lambda,
            tol,
        ),
        ReportRow::check(EXP, n, k, "B: lambda", intact, Relation::Gt, root, tol),
        ReportRow::check(EXP, n, k, "n-k/2-1/12", mid, Relation::Gt, nf - kf, 0.0),
        ReportRow::check(EXP, n, k, "sqrt(n(n-k))", root, Relation::Gt, mid, 0.0),
    ])
}

/// Both replays over the configured grid; grid points outside a regime are
/// reported as excluded.
pub fn verify_proofs(cfg: &ExperimentConfig) -> CliResult<Vec<ReportRow>> {
    let mut rows = Vec::new();
    for &k in &cfg.ks {
        for n in cfg.ns() {
            if n < 2 * k + 1 {
                rows.push(ReportRow::excluded(
                    EXP,
                    n,
                    k,
                    "n < 2k+1: families undefined",
                ));
                continue;
            }
            rows.extend(l_rows(n, k, cfg.tol)?);
            rows.extend(b_rows(n, k, cfg.tol)?);
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::all_pass;

    #[test]
    fn floors_are_positive() {
        assert!((phi_floor(1) - 0.408888889).abs() < 1e-8);
        assert!(phi_floor(2) > 0.0);
        // at λ = 3 the closed form meets the k = 1 floor exactly
        assert!((phi_over_y2(1, 3.0) - phi_floor(1)).abs() < 1e-12);
    }

    #[test]
    fn small_cases() {
        let cfg = ExperimentConfig::new(EXP)
            .with_ks(&[1, 2])
            .with_range(4, 12);
        let rows = verify_proofs(&cfg).unwrap();
        assert!(all_pass(&rows), "{rows:#?}");
        let l14 = rows.iter().find(|r| r.n == 4 && r.k == 1).unwrap();
        assert_eq!(l14.relation, Relation::Excluded);
        assert!(rows
            .iter()
            .any(|r| r.n == 9 && r.k == 2 && r.quantity == "L-uv: phi/y^2" && r.pass));
        assert!(rows
            .iter()
            .any(|r| r.n == 7 && r.k == 1 && r.quantity.starts_with("B-uv: (lambda") && r.pass));
    }
}
