//! Report rows, their CSV form and an aligned text rendering.
//!
//! Every row carries the value, the relation it must satisfy, the bound and the
//! tolerance, so `pass` can be recomputed from the printed columns.

use std::fmt;
use std::io::Write;

use num_rational::Ratio;

use crate::error::CliResult;

pub const CSV_HEADER: [&str; 9] = [
    "experiment",
    "n",
    "k",
    "quantity",
    "value",
    "relation",
    "bound",
    "tol",
    "pass",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    /// `value < bound − tol`
    Lt,
    /// `value ≤ bound + tol`
    Le,
    /// `value > bound + tol`
    Gt,
    /// `value ≥ bound − tol`
    Ge,
    /// `|value − bound| ≤ tol`
    Eq,
    /// Parameters outside the range where the claim is made; always passes.
    Excluded,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Lt => "<",
            Relation::Le => "<=",
            Relation::Gt => ">",
            Relation::Ge => ">=",
            Relation::Eq => "=",
            Relation::Excluded => "regime-excluded",
        }
    }

    pub fn from_symbol(s: &str) -> Option<Self> {
        [
            Relation::Lt,
            Relation::Le,
            Relation::Gt,
            Relation::Ge,
            Relation::Eq,
            Relation::Excluded,
        ]
        .into_iter()
        .find(|r| r.symbol() == s)
    }

    pub fn holds(self, value: f64, bound: f64, tol: f64) -> bool {
        match self {
            Relation::Lt => value < bound - tol,
            Relation::Le => value <= bound + tol,
            Relation::Gt => value > bound + tol,
            Relation::Ge => value >= bound - tol,
            Relation::Eq => (value - bound).abs() <= tol,
            Relation::Excluded => true,
        }
    }

    fn holds_exact(self, value: Ratio<i128>, bound: Ratio<i128>) -> bool {
        match self {
            Relation::Lt => value < bound,
            Relation::Le => value <= bound,
            Relation::Gt => value > bound,
            Relation::Ge => value >= bound,
            Relation::Eq => value == bound,
            Relation::Excluded => true,
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReportRow {
    pub experiment: String,
    pub n: usize,
    pub k: usize,
    pub quantity: String,
    pub value: f64,
    pub relation: Relation,
    pub bound: f64,
    pub tol: f64,
    pub pass: bool,
}

fn ratio_f64(r: Ratio<i128>) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

impl ReportRow {
    #[allow(clippy::too_many_arguments)]
    pub fn check(
        experiment: &str,
        n: usize,
        k: usize,
        quantity: impl Into<String>,
        value: f64,
        relation: Relation,
        bound: f64,
        tol: f64,
    ) -> Self {
        ReportRow {
            experiment: experiment.to_string(),
            n,
            k,
            quantity: quantity.into(),
            value,
            relation,
            bound,
            tol,
            pass: !value.is_nan() && !bound.is_nan() && relation.holds(value, bound, tol),
        }
    }

    /// Comparison decided in rational arithmetic with zero tolerance.
    pub fn exact(
        experiment: &str,
        n: usize,
        k: usize,
        quantity: impl Into<String>,
        value: Ratio<i128>,
        relation: Relation,
        bound: Ratio<i128>,
    ) -> Self {
        ReportRow {
            experiment: experiment.to_string(),
            n,
            k,
            quantity: quantity.into(),
            value: ratio_f64(value),
            relation,
            bound: ratio_f64(bound),
            tol: 0.0,
            pass: relation.holds_exact(value, bound),
        }
    }

    pub fn excluded(experiment: &str, n: usize, k: usize, reason: impl Into<String>) -> Self {
        ReportRow {
            experiment: experiment.to_string(),
            n,
            k,
            quantity: reason.into(),
            value: f64::NAN,
            relation: Relation::Excluded,
            bound: f64::NAN,
            tol: 0.0,
            pass: true,
        }
    }

    /// A check that has no numeric content, such as "this call returned an error".
    pub fn flag(
        experiment: &str,
        n: usize,
        k: usize,
        quantity: impl Into<String>,
        ok: bool,
    ) -> Self {
        let v = if ok { 1.0 } else { 0.0 };
        ReportRow::check(experiment, n, k, quantity, v, Relation::Eq, 1.0, 0.0)
    }

    fn csv_fields(&self) -> [String; 9] {
        [
            self.experiment.clone(),
            self.n.to_string(),
            self.k.to_string(),
            self.quantity.clone(),
            fmt_sig(self.value),
            self.relation.symbol().to_string(),
            fmt_sig(self.bound),
            format!("{:e}", self.tol),
            self.pass.to_string(),
        ]
    }
}

/// Decimal rendering with 12 significant digits; NaN prints as an empty field.
pub fn fmt_sig(x: f64) -> String {
    if x.is_nan() {
        return String::new();
    }
    if x == 0.0 {
        return "0".to_string();
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (11 - magnitude).max(0) as usize;
    let s = format!("{x:.decimals$}");
    if s == "-0" {
        "0".to_string()
    } else {
        s
    }
}

pub fn write_csv<W: Write>(rows: &[ReportRow], out: W) -> CliResult<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in rows {
        w.write_record(r.csv_fields())?;
    }
    w.flush()?;
    Ok(())
}

pub fn to_csv_string(rows: &[ReportRow]) -> String {
    let mut buf = Vec::new();
    write_csv(rows, &mut buf).expect("writing to memory");
    String::from_utf8(buf).expect("csv output is utf-8")
}

/// Aligned text table followed by a one-line summary.
pub fn render_text(rows: &[ReportRow]) -> String {
    let cells: Vec<[String; 9]> = rows.iter().map(|r| r.csv_fields()).collect();
    let mut widths = CSV_HEADER.map(str::len);
    for row in &cells {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.len());
        }
    }
    let mut out = String::new();
    let line = |fields: &[&str], out: &mut String| {
        let parts: Vec<String> = fields
            .iter()
            .zip(widths)
            .map(|(f, w)| format!("{f:<w$}"))
            .collect();
        out.push_str(parts.join("  ").trim_end());
        out.push('\n');
    };
    line(&CSV_HEADER, &mut out);
    for row in &cells {
        let refs: Vec<&str> = row.iter().map(String::as_str).collect();
        line(&refs, &mut out);
    }
    out.push_str(&summary(rows));
    out.push('\n');
    out
}

pub fn summary(rows: &[ReportRow]) -> String {
    let failed = rows.iter().filter(|r| !r.pass).count();
    let excluded = rows
        .iter()
        .filter(|r| r.relation == Relation::Excluded)
        .count();
    format!(
        "{} rows, {} failed, {} regime-excluded",
        rows.len(),
        failed,
        excluded
    )
}

pub fn all_pass(rows: &[ReportRow]) -> bool {
    rows.iter().all(|r| r.pass)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digits() {
        assert_eq!(fmt_sig(17.0), "17.0000000000");
        assert_eq!(fmt_sig(-4.0), "-4.00000000000");
        assert_eq!(fmt_sig(0.5), "0.500000000000");
        assert_eq!(fmt_sig(8.94427190999916), "8.94427191000");
        assert_eq!(fmt_sig(0.0), "0");
        assert_eq!(fmt_sig(f64::NAN), "");
        assert_eq!(fmt_sig(1234.5e12), "1234500000000000");
    }

    #[test]
    fn relations_with_tolerance() {
        assert!(Relation::Lt.holds(1.0, 2.0, 1e-9));
        assert!(!Relation::Lt.holds(2.0 - 1e-12, 2.0, 1e-9));
        assert!(Relation::Le.holds(2.0 + 1e-12, 2.0, 1e-9));
        assert!(Relation::Gt.holds(5.000002, 5.0, 1e-6));
        assert!(!Relation::Gt.holds(5.0000005, 5.0, 1e-6));
        assert!(Relation::Eq.holds(1.0, 1.0, 0.0));
        for r in [
            Relation::Lt,
            Relation::Le,
            Relation::Gt,
            Relation::Ge,
            Relation::Eq,
            Relation::Excluded,
        ] {
            assert_eq!(Relation::from_symbol(r.symbol()), Some(r));
        }
    }

    #[test]
    fn exact_rows_and_csv() {
        let r = ReportRow::exact(
            "x",
            8,
            2,
            "g(n)",
            Ratio::from_integer(-4),
            Relation::Eq,
            Ratio::from_integer(-4),
        );
        assert!(r.pass && r.tol == 0.0);
        let nan = ReportRow::check("x", 1, 1, "q", f64::NAN, Relation::Le, 1.0, 0.0);
        assert!(!nan.pass);
        let csv = to_csv_string(&[r, ReportRow::excluded("x", 4, 1, "below threshold")]);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(
            lines[0],
            "experiment,n,k,quantity,value,relation,bound,tol,pass"
        );
        assert_eq!(
            lines[1],
            "x,8,2,g(n),-4.00000000000,=,-4.00000000000,0e0,true"
        );
        assert_eq!(lines[2], "x,4,1,below threshold,,regime-excluded,,0e0,true");
    }

    #[test]
    fn text_table_summary() {
        let rows = vec![
            ReportRow::check("x", 5, 1, "lambda", 2.9, Relation::Lt, 3.0, 1e-9),
            ReportRow::check("x", 5, 1, "lambda", 3.1, Relation::Lt, 3.0, 1e-9),
        ];
        let t = render_text(&rows);
        assert!(t.ends_with("2 rows, 1 failed, 0 regime-excluded\n"));
        assert!(!all_pass(&rows));
    }
}
