//! The quartic `f` whose largest root is `λ(N^k_n − uv)` for an edge `uv`
//! inside the clique part, and its value-at-a-point companion `g`.
//!
//! `f(x) = x(x+1)(x+2)·[(x − n + 2k + 1 + 2/(x+2))·(1 − k²/(x(x+1))) − k]`
//! clears to the integer polynomial
//! `((x − n + 2k + 1)(x + 2) + 2)(x² + x − k²) − k·x(x+1)(x+2)`,
//! which is what is stored.

use nalgebra::DMatrix;
use num_rational::Ratio;
use num_traits::Zero;

use crate::error::{Error, Result};

type Q = Ratio<i128>;

fn poly_mul(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_sub(a: &[i128], b: &[i128]) -> Vec<i128> {
    let len = a.len().max(b.len());
    (0..len)
        .map(|i| a.get(i).copied().unwrap_or(0) - b.get(i).copied().unwrap_or(0))
        .collect()
}

/// `f` for fixed `(n, k)`, expanded as a monic quartic with integer coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CharPolyF {
    pub n: i64,
    pub k: i64,
    /// Constant term first; `coeffs[4] == 1`.
    pub coeffs: [i128; 5],
}

impl CharPolyF {
    pub fn new(n: i64, k: i64) -> Self {
        let (n, k) = (n as i128, k as i128);
        let m = n - 2 * k - 1;
        // (x − m)(x + 2) + 2
        let first = [2 - 2 * m, 2 - m, 1];
        let second = [-k * k, 1, 1];
        let lhs = poly_mul(&first, &second);
        let rhs = poly_mul(&poly_mul(&[0, k], &[1, 1]), &[2, 1]);
        let c = poly_sub(&lhs, &rhs);
        CharPolyF {
            n: n as i64,
            k: k as i64,
            coeffs: [c[0], c[1], c[2], c[3], c[4]],
        }
    }

    pub fn eval(&self, x: Q) -> Q {
        self.coeffs
            .iter()
            .rev()
            .fold(Q::zero(), |acc, &c| acc * x + Q::from_integer(c))
    }

    pub fn eval_int(&self, x: i128) -> i128 {
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, &c| acc * x + c as f64)
    }
}

/// Exact `f(x)` at a rational point.
pub fn eval_f(n: i64, k: i64, x: Q) -> Q {
    CharPolyF::new(n, k).eval(x)
}

pub fn eval_f_f64(n: i64, k: i64, x: f64) -> f64 {
    CharPolyF::new(n, k).eval_f64(x)
}

/// `g(x) = 2x² − (k³ + 4k + 2)x + k⁴ − k³ + 2k`, exactly. Does not depend on `n`;
/// the parameter is kept so `f` and `g` share a signature.
pub fn eval_g(_n: i64, k: i64, x: Q) -> Q {
    let k = k as i128;
    let b = Q::from_integer(k * k * k + 4 * k + 2);
    let c = Q::from_integer(k.pow(4) - k.pow(3) + 2 * k);
    Q::from_integer(2) * x * x - b * x + c
}

/// Interval known to contain a root of `f`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootInterval {
    pub lo: f64,
    pub hi: f64,
}

impl RootInterval {
    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }
}

fn bisect(p: &CharPolyF, mut lo: f64, mut hi: f64, width: f64) -> RootInterval {
    let lo_sign = p.eval_f64(lo).signum();
    while hi - lo > width {
        let mid = 0.5 * (lo + hi);
        let v = p.eval_f64(mid);
        if v == 0.0 {
            return RootInterval { lo: mid, hi: mid };
        }
        if v.signum() == lo_sign {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    RootInterval { lo, hi }
}

/// A root of `f` inside `(n−k−2, n−k−1)`, certified by the exact sign change
/// `f(n−k−2) < 0 < f(n−k−1)` and refined to width at most `1e-10`.
pub fn isolate_f_root(n: i64, k: i64) -> Result<RootInterval> {
    let p = CharPolyF::new(n, k);
    let (lo, hi) = (n - k - 2, n - k - 1);
    let (f_lo, f_hi) = (p.eval_int(lo as i128), p.eval_int(hi as i128));
    if !(f_lo < 0 && f_hi > 0) {
        return Err(Error::NoSignChange {
            n,
            k,
            lo,
            hi,
            f_lo,
            f_hi,
        });
    }
    Ok(bisect(&p, lo as f64, hi as f64, 1e-10))
}

/// Largest real root of `f`, from the companion-matrix eigenvalues polished by
/// bisection to width `1e-12`.
pub fn largest_f_root(n: i64, k: i64) -> f64 {
    let p = CharPolyF::new(n, k);
    let companion = DMatrix::from_fn(4, 4, |i, j| {
        if j == 3 {
            -(p.coeffs[i] as f64)
        } else if i == j + 1 {
            1.0
        } else {
            0.0
        }
    });
    let approx = companion
        .complex_eigenvalues()
        .iter()
        .filter(|z| z.im.abs() <= 1e-7 * (1.0 + z.re.abs()))
        .map(|z| z.re)
        .fold(f64::NEG_INFINITY, f64::max);
    let mut half = 1e-6 * (1.0 + approx.abs());
    let mut hi = approx + half;
    while p.eval_f64(hi) <= 0.0 {
        hi += half;
        half *= 2.0;
    }
    let lo = approx - half;
    if p.eval_f64(lo) > 0.0 {
        // double root: nothing to bisect
        return approx;
    }
    bisect(&p, lo, hi, 1e-12).midpoint()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i128) -> Q {
        Q::from_integer(v)
    }

    /// `f` straight from its product form, in rational arithmetic.
    fn f_product_form(n: i128, k: i128, x: Q) -> Q {
        let one = q(1);
        let two = q(2);
        let bracket =
            (x - q(n) + q(2 * k + 1) + two / (x + two)) * (one - q(k * k) / (x * (x + one))) - q(k);
        x * (x + one) * (x + two) * bracket
    }

    #[test]
    fn expansion_matches_product_form() {
        for k in 1..=6i64 {
            for n in (k + 2)..=40 {
                let p = CharPolyF::new(n, k);
                assert_eq!(p.coeffs[4], 1);
                for x in [q(3), q(7), Q::new(5, 2), Q::new(-13, 3), q(n as i128)] {
                    assert_eq!(
                        p.eval(x),
                        f_product_form(n as i128, k as i128, x),
                        "n={n} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn g_at_sharpness_point() {
        // n = k³/2 + k + 2 with k = 2 gives n = 8
        assert_eq!(eval_g(8, 2, q(8)), q(-4));
        assert_eq!(eval_g(38, 4, q(38)), q(-28));
    }

    #[test]
    fn sign_change_intervals() {
        let r = isolate_f_root(10, 1).unwrap();
        assert!(r.lo >= 7.0 && r.hi <= 8.0 && r.width() <= 1e-10);
        let r = isolate_f_root(12, 2).unwrap();
        assert!(r.lo >= 8.0 && r.hi <= 9.0);
        let fm = eval_f_f64(12, 2, r.midpoint());
        assert!(fm.abs() < 1e-4);
    }

    #[test]
    fn below_threshold_has_no_sign_change() {
        let err = isolate_f_root(8, 2).unwrap_err();
        match err {
            Error::NoSignChange { f_hi, .. } => assert_eq!(f_hi, -4),
            other => panic!("unexpected {other:?}"),
        }
        assert!(largest_f_root(8, 2) > 5.0);
    }
}
