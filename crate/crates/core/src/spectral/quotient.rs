use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::family::{Family, FamilyParams, Perturbation};
use crate::graph::Graph;

/// Quotient matrix of an equitable partition.
///
/// Entry `(i, j)` is the number of neighbours in class `j` of any vertex of class
/// `i`. The Perron vector of the source graph is constant on classes, so the
/// spectral radius of the graph is the largest eigenvalue of this matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientMatrix {
    entries: Vec<Vec<usize>>,
    class_sizes: Vec<usize>,
    labels: Vec<&'static str>,
}

impl QuotientMatrix {
    pub fn new(
        entries: Vec<Vec<usize>>,
        class_sizes: Vec<usize>,
        labels: Vec<&'static str>,
    ) -> Result<Self> {
        let d = entries.len();
        if d == 0 || class_sizes.len() != d || labels.len() != d {
            return Err(Error::MalformedQuotient(format!(
                "{} rows, {} sizes, {} labels",
                d,
                class_sizes.len(),
                labels.len()
            )));
        }
        if entries.iter().any(|r| r.len() != d) {
            return Err(Error::MalformedQuotient("matrix is not square".into()));
        }
        if class_sizes.contains(&0) {
            return Err(Error::MalformedQuotient("empty class".into()));
        }
        for i in 0..d {
            for j in 0..d {
                // a class cannot send more edges than the target holds
                let cap = class_sizes[j] - usize::from(i == j);
                if entries[i][j] > cap {
                    return Err(Error::MalformedQuotient(format!(
                        "entry ({i},{j}) = {} exceeds class capacity {cap}",
                        entries[i][j]
                    )));
                }
                // edge counts between classes must balance
                if entries[i][j] * class_sizes[i] != entries[j][i] * class_sizes[j] {
                    return Err(Error::MalformedQuotient(format!(
                        "edge counts between classes {i} and {j} do not balance"
                    )));
                }
            }
        }
        Ok(QuotientMatrix {
            entries,
            class_sizes,
            labels,
        })
    }

    /// Quotient of `g` over `classes`, checking that the partition is equitable.
    pub fn from_partition(
        g: &Graph,
        classes: &[Vec<usize>],
        labels: &[&'static str],
    ) -> Result<Self> {
        let d = classes.len();
        let mut class_of = vec![usize::MAX; g.order()];
        for (c, members) in classes.iter().enumerate() {
            for &v in members {
                if v >= g.order() {
                    return Err(Error::VertexOutOfRange {
                        vertex: v,
                        n: g.order(),
                    });
                }
                class_of[v] = c;
            }
        }
        if class_of.contains(&usize::MAX) {
            return Err(Error::MalformedQuotient(
                "partition does not cover the graph".into(),
            ));
        }
        let count = |v: usize| {
            let mut row = vec![0usize; d];
            for u in g.neighbors(v) {
                row[class_of[u]] += 1;
            }
            row
        };
        let mut entries = Vec::with_capacity(d);
        for (c, members) in classes.iter().enumerate() {
            let first = members
                .first()
                .ok_or_else(|| Error::MalformedQuotient("empty class".into()))?;
            let row = count(*first);
            for &v in &members[1..] {
                let other = count(v);
                if let Some(j) = (0..d).find(|&j| other[j] != row[j]) {
                    return Err(Error::NotEquitable {
                        class: c,
                        other: j,
                        vertex: v,
                        found: other[j],
                        expected: row[j],
                    });
                }
            }
            entries.push(row);
        }
        QuotientMatrix::new(
            entries,
            classes.iter().map(Vec::len).collect(),
            labels.to_vec(),
        )
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<usize>] {
        &self.entries
    }

    pub fn class_sizes(&self) -> &[usize] {
        &self.class_sizes
    }

    pub fn labels(&self) -> &[&'static str] {
        &self.labels
    }

    pub fn order(&self) -> usize {
        self.class_sizes.iter().sum()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    pub fn to_dmatrix(&self) -> DMatrix<f64> {
        let d = self.dim();
        DMatrix::from_fn(d, d, |i, j| self.entries[i][j] as f64)
    }

    /// Coefficients of `det(xI − M)`, constant term first, computed exactly by
    /// the Faddeev–LeVerrier recursion.
    pub fn char_poly(&self) -> Vec<i128> {
        let d = self.dim();
        let m: Vec<Vec<i128>> = self
            .entries
            .iter()
            .map(|r| r.iter().map(|&x| x as i128).collect())
            .collect();
        let mul = |a: &Vec<Vec<i128>>, b: &Vec<Vec<i128>>| -> Vec<Vec<i128>> {
            (0..d)
                .map(|i| {
                    (0..d)
                        .map(|j| (0..d).map(|l| a[i][l] * b[l][j]).sum())
                        .collect()
                })
                .collect()
        };
        // coefficients c_d = 1, c_{d-1}, ..., c_0
        let mut coeffs = vec![0i128; d + 1];
        coeffs[d] = 1;
        let mut mk: Vec<Vec<i128>> = (0..d)
            .map(|i| (0..d).map(|j| i128::from(i == j)).collect())
            .collect();
        for step in 1..=d {
            let am = mul(&m, &mk);
            let trace: i128 = (0..d).map(|i| am[i][i]).sum();
            let c = -trace / step as i128;
            coeffs[d - step] = c;
            mk = am;
            for (i, row) in mk.iter_mut().enumerate() {
                row[i] += c;
            }
        }
        coeffs
    }

    /// Whether every leading principal minor of `xI − M` is positive, which for a
    /// nonnegative `M` holds exactly when `x` exceeds its spectral radius.
    fn exceeds_spectral_radius(&self, x: f64) -> bool {
        self.eliminate(x).iter().all(|&p| p > 0.0)
    }

    /// Pivots of Gaussian elimination without pivoting on `xI − M`, followed by
    /// the eliminated matrix.
    fn eliminate_full(&self, x: f64) -> (Vec<f64>, Vec<Vec<f64>>) {
        let d = self.dim();
        let mut a: Vec<Vec<f64>> = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| if i == j { x } else { 0.0 } - self.entries[i][j] as f64)
                    .collect()
            })
            .collect();
        let mut pivots = Vec::with_capacity(d);
        for c in 0..d {
            let p = a[c][c];
            pivots.push(p);
            if p <= 0.0 {
                break;
            }
            let (top, rest) = a.split_at_mut(c + 1);
            let pivot_row = &top[c];
            for row in rest.iter_mut() {
                let factor = row[c] / p;
                for (x, y) in row[c..d].iter_mut().zip(&pivot_row[c..d]) {
                    *x -= factor * y;
                }
            }
        }
        (pivots, a)
    }

    fn eliminate(&self, x: f64) -> Vec<f64> {
        self.eliminate_full(x).0
    }
}

/// Largest eigenvalue of the quotient, by bisection on the sign pattern of the
/// leading principal minors of `xI − M`, refined to width `1e-12`.
pub fn quotient_lambda(q: &QuotientMatrix) -> Result<f64> {
    let max_row = q
        .entries
        .iter()
        .map(|r| r.iter().sum::<usize>())
        .max()
        .unwrap_or(0) as f64;
    let (mut lo, mut hi) = (0.0f64, max_row + 1.0);
    if q.exceeds_spectral_radius(lo) || !q.exceeds_spectral_radius(hi) {
        return Err(Error::MalformedQuotient(format!(
            "no bracket for the spectral radius on [0, {hi}]"
        )));
    }
    while hi - lo > 1e-12 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if q.exceeds_spectral_radius(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Perron vector of the source graph restricted to classes: one value per
/// class, positive, normalised so that the full vector has unit length.
pub fn perron_class_values(q: &QuotientMatrix, lambda: f64) -> Vec<f64> {
    let d = q.dim();
    // leading d−1 pivots of λI − M are positive at the Perron root, the last
    // vanishes; back-substitute with the last value fixed to 1.
    let (_, a) = q.eliminate_full(lambda);
    let mut v = vec![0.0; d];
    v[d - 1] = 1.0;
    for i in (0..d - 1).rev() {
        let s: f64 = (i + 1..d).map(|j| a[i][j] * v[j]).sum();
        v[i] = -s / a[i][i];
    }
    let norm: f64 = v
        .iter()
        .zip(&q.class_sizes)
        .map(|(x, &s)| s as f64 * x * x)
        .sum::<f64>()
        .sqrt();
    v.iter().map(|x| x / norm).collect()
}

fn drop_empty(
    rows: Vec<Vec<i64>>,
    sizes: Vec<i64>,
    labels: Vec<&'static str>,
) -> Result<QuotientMatrix> {
    let keep: Vec<usize> = (0..sizes.len()).filter(|&i| sizes[i] > 0).collect();
    let entries = keep
        .iter()
        .map(|&i| keep.iter().map(|&j| rows[i][j] as usize).collect())
        .collect();
    QuotientMatrix::new(
        entries,
        keep.iter().map(|&i| sizes[i] as usize).collect(),
        keep.iter().map(|&i| labels[i]).collect(),
    )
}

/// Closed-form quotient matrix of a family graph, intact or with one edge removed.
///
/// Class orders follow [`FamilyParams::labelled`]; classes that turn out empty are
/// dropped together with their rows and columns.
pub fn quotient_of_family(p: FamilyParams, perturbation: Perturbation) -> Result<QuotientMatrix> {
    p.validate()?;
    let (n, k) = (p.n as i64, p.k as i64);
    let invalid = || Error::InvalidPerturbation {
        family: p.family,
        perturbation: perturbation.name(),
        n: p.n,
        k: p.k,
    };
    let (rows, sizes, labels): (Vec<Vec<i64>>, Vec<i64>, Vec<&'static str>) =
        match (p.family, perturbation) {
            (Family::N, Perturbation::Intact) => (
                vec![
                    vec![0, k, 0],
                    vec![k, k - 1, n - 2 * k],
                    vec![0, k, n - 2 * k - 1],
                ],
                vec![k, k, n - 2 * k],
                vec!["X", "Y", "Z"],
            ),
            (Family::N, Perturbation::DropZZ) => {
                if n - 2 * k < 2 {
                    return Err(invalid());
                }
                (
                    vec![
                        vec![0, k, 0, 0],
                        vec![k, k - 1, n - 2 * k - 2, 2],
                        vec![0, k, n - 2 * k - 3, 2],
                        vec![0, k, n - 2 * k - 2, 0],
                    ],
                    vec![k, k, n - 2 * k - 2, 2],
                    vec!["X", "Y", "Z", "T"],
                )
            }
            (Family::L, Perturbation::Intact) => (
                vec![
                    vec![k - 1, 1, 0],
                    vec![k, 0, n - k - 1],
                    vec![0, 1, n - k - 2],
                ],
                vec![k, 1, n - k - 1],
                vec!["X", "w", "Z"],
            ),
            (Family::L, Perturbation::DropZZ) => {
                if n - k - 1 < 2 {
                    return Err(invalid());
                }
                (
                    vec![
                        vec![k - 1, 1, 0, 0],
                        vec![k, 0, n - k - 3, 2],
                        vec![0, 1, n - k - 4, 2],
                        vec![0, 1, n - k - 3, 0],
                    ],
                    vec![k, 1, n - k - 3, 2],
                    vec!["X", "w", "Z", "T"],
                )
            }
            (Family::B, Perturbation::Intact) => (
                vec![
                    vec![0, k, 0, 0],
                    vec![k, 0, n - k, 0],
                    vec![0, k, 0, n - k],
                    vec![0, 0, n - k, 0],
                ],
                vec![k, k, n - k, n - k],
                vec!["W", "X", "Y", "Z"],
            ),
            (Family::B, Perturbation::DropYZ) => (
                // s = x_u with u ∈ Y, t = x_v with v ∈ Z
                vec![
                    vec![0, k, 0, 0, 0, 0],
                    vec![k, 0, n - k - 1, 0, 1, 0],
                    vec![0, k, 0, n - k - 1, 0, 1],
                    vec![0, 0, n - k - 1, 0, 1, 0],
                    vec![0, k, 0, n - k - 1, 0, 0],
                    vec![0, 0, n - k - 1, 0, 0, 0],
                ],
                vec![k, k, n - k - 1, n - k - 1, 1, 1],
                vec!["W", "X", "Y", "Z", "s", "t"],
            ),
            (Family::B, Perturbation::DropXY) => (
                // u ∈ X, v ∈ Y
                vec![
                    vec![0, k - 1, 0, 0, 1, 0],
                    vec![k, 0, n - k - 1, 0, 0, 1],
                    vec![0, k - 1, 0, n - k, 1, 0],
                    vec![0, 0, n - k - 1, 0, 0, 1],
                    vec![k, 0, n - k - 1, 0, 0, 0],
                    vec![0, k - 1, 0, n - k, 0, 0],
                ],
                vec![k, k - 1, n - k - 1, n - k, 1, 1],
                vec!["W", "X", "Y", "Z", "u", "v"],
            ),
            _ => return Err(invalid()),
        };
    drop_empty(rows, sizes, labels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::spectral_dense;

    fn family(f: Family, n: usize, k: usize) -> FamilyParams {
        FamilyParams::new(f, n, k).unwrap()
    }

    #[test]
    fn n_10_2_rows() {
        let q = quotient_of_family(family(Family::N, 10, 2), Perturbation::Intact).unwrap();
        assert_eq!(q.entries(), &[vec![0, 2, 0], vec![2, 1, 6], vec![0, 2, 5]]);
        let g = family(Family::N, 10, 2).build().unwrap().into_graph();
        let lam = quotient_lambda(&q).unwrap();
        assert!((lam - spectral_dense(&g).lambda1).abs() < 1e-9);
    }

    #[test]
    fn single_class_complete_graph() {
        let q = QuotientMatrix::new(vec![vec![6]], vec![7], vec!["K"]).unwrap();
        assert!((quotient_lambda(&q).unwrap() - 6.0).abs() < 1e-11);
        assert_eq!(perron_class_values(&q, 6.0), vec![1.0 / 7f64.sqrt()]);
    }

    #[test]
    fn closed_forms_match_partition_of_built_graph() {
        for f in [Family::L, Family::N, Family::B] {
            for k in 1..=3 {
                for n in (2 * k + 1)..=12 {
                    let p = family(f, n, k);
                    for &pert in Perturbation::allowed(f) {
                        let Ok(lf) = p.labelled(pert) else {
                            assert!(quotient_of_family(p, pert).is_err());
                            continue;
                        };
                        let from_graph = QuotientMatrix::from_partition(
                            lf.graph.graph(),
                            &lf.classes,
                            &lf.labels,
                        )
                        .unwrap();
                        assert_eq!(
                            quotient_of_family(p, pert).unwrap(),
                            from_graph,
                            "{p} {pert:?}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn b_3_1_agrees_with_dense() {
        let p = family(Family::B, 3, 1);
        let q = quotient_of_family(p, Perturbation::Intact).unwrap();
        let g = p.build().unwrap().into_graph();
        assert!((quotient_lambda(&q).unwrap() - spectral_dense(&g).lambda1).abs() < 1e-9);
    }

    #[test]
    fn class_values_match_dense_perron_vector() {
        let p = family(Family::B, 7, 1);
        let lf = p.labelled(Perturbation::DropYZ).unwrap();
        let q = quotient_of_family(p, Perturbation::DropYZ).unwrap();
        let lam = quotient_lambda(&q).unwrap();
        let vals = perron_class_values(&q, lam);
        let dense = spectral_dense(lf.graph.graph());
        for (c, members) in lf.classes.iter().enumerate() {
            for &v in members {
                assert!((dense.perron[v] - vals[c]).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn malformed_quotients_rejected() {
        assert!(
            QuotientMatrix::new(vec![vec![0, 1], vec![0, 0]], vec![1, 1], vec!["a", "b"]).is_err()
        );
        assert!(QuotientMatrix::new(vec![vec![3]], vec![3], vec!["a"]).is_err());
        assert!(QuotientMatrix::new(vec![], vec![], vec![]).is_err());
    }

    #[test]
    fn non_equitable_partition_detected() {
        let g = Graph::path(4).unwrap();
        let err = QuotientMatrix::from_partition(&g, &[vec![0, 1, 2, 3]], &["all"]).unwrap_err();
        assert!(matches!(err, Error::NotEquitable { .. }));
    }

    #[test]
    fn invalid_perturbations() {
        assert!(quotient_of_family(family(Family::N, 10, 2), Perturbation::DropYZ).is_err());
        assert!(quotient_of_family(family(Family::B, 10, 2), Perturbation::DropZZ).is_err());
        assert!(quotient_of_family(family(Family::N, 5, 2), Perturbation::DropZZ).is_err());
    }
}
