//! Serialization of results: JSON, CSV and plain text.

use std::fmt::Write as _;

use matching_harmonics::formulas::DegreeHistogram;
use matching_harmonics::{Partition, QPoly, SchurSeries};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub q: usize,
    pub lambda: Vec<usize>,
    /// Decimal string, so arbitrarily large coefficients survive JSON.
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub n: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QPolyJson {
    pub coefficients: Vec<String>,
}

pub fn series_to_json(s: &SchurSeries) -> SeriesJson {
    let terms = s
        .terms()
        .map(|(q, lambda, c)| TermJson { q, lambda: lambda.parts().to_vec(), coeff: c.to_string() })
        .collect();
    SeriesJson { n: s.degree_n(), terms }
}

pub fn series_from_json(j: &SeriesJson) -> Result<SchurSeries, CliError> {
    let mut s = SchurSeries::zero(j.n);
    for t in &j.terms {
        let c: BigInt = t.coeff.parse().map_err(|_| CliError::Usage(format!("bad coefficient {:?}", t.coeff)))?;
        s.add_term(t.q, Partition::new(t.lambda.clone())?, c)?;
    }
    Ok(s)
}

pub fn qpoly_to_json(p: &QPoly) -> QPolyJson {
    QPolyJson { coefficients: p.coefficients().iter().map(BigInt::to_string).collect() }
}

pub fn qpoly_from_json(j: &QPolyJson) -> Result<QPoly, CliError> {
    let coeffs = j
        .coefficients
        .iter()
        .map(|c| c.parse::<BigInt>().map_err(|_| CliError::Usage(format!("bad coefficient {c:?}"))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(QPoly::new(coeffs))
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("result types serialize");
    s.push('\n');
    s
}

fn partition_cell(lambda: &Partition) -> String {
    lambda.parts().iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

/// One line per grade: `q^d: c·s(λ) + ...`.
pub fn series_text(s: &SchurSeries) -> String {
    if s.is_zero() {
        return "0\n".into();
    }
    let mut out = String::new();
    for d in s.grades() {
        let piece = s.grade(d);
        let terms: Vec<String> = piece
            .terms()
            .map(|(_, l, c)| if *c == BigInt::from(1) { format!("s{l}") } else { format!("{c}·s{l}") })
            .collect();
        writeln!(out, "q^{d}: {}", terms.join(" + ")).unwrap();
    }
    out
}

/// `q,lambda,coeff` with the parts of `λ` separated by spaces.
pub fn series_csv(s: &SchurSeries) -> String {
    let mut out = String::from("q,lambda,coeff\n");
    for (q, l, c) in s.terms() {
        writeln!(out, "{q},{},{c}", partition_cell(l)).unwrap();
    }
    out
}

pub fn render_series(s: &SchurSeries, format: Format) -> String {
    match format {
        Format::Json => to_json(&series_to_json(s)),
        Format::Csv => series_csv(s),
        Format::Text => series_text(s),
    }
}

/// CSV `degree,dimension`, one row per nonzero coefficient.
pub fn histogram_csv(h: &DegreeHistogram) -> String {
    let mut out = String::from("degree,dimension\n");
    for (d, c) in &h.counts {
        writeln!(out, "{d},{c}").unwrap();
    }
    out
}

/// Coefficients separated by commas, lowest degree first.
pub fn qpoly_text(p: &QPoly) -> String {
    if p.is_zero() {
        return "0\n".into();
    }
    let cells: Vec<String> = p.coefficients().iter().map(BigInt::to_string).collect();
    format!("{}\n", cells.join(","))
}

pub fn render_qpoly(n: usize, p: &QPoly, format: Format) -> Result<String, CliError> {
    Ok(match format {
        Format::Json => to_json(&qpoly_to_json(p)),
        Format::Csv => histogram_csv(&DegreeHistogram::from_qpoly(n, p)?),
        Format::Text => qpoly_text(p),
    })
}

/// A plain table, rendered as aligned text or as CSV.
#[derive(Clone, Debug, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Table { header: header.iter().map(|s| s.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }

    pub fn csv(&self) -> String {
        let mut out = self.header.join(",");
        out.push('\n');
        for r in &self.rows {
            out.push_str(&r.join(","));
            out.push('\n');
        }
        out
    }

    pub fn text(&self) -> String {
        let mut widths: Vec<usize> = self.header.iter().map(|h| h.chars().count()).collect();
        for r in &self.rows {
            for (w, cell) in widths.iter_mut().zip(r) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let line = |cells: &[String]| -> String {
            let padded: Vec<String> =
                cells.iter().zip(&widths).map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count()))).collect();
            format!("{}\n", padded.join("  ").trim_end())
        };
        let mut out = line(&self.header);
        for r in &self.rows {
            out.push_str(&line(r));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use matching_harmonics::formulas::{grfrob_matchings, hilb_matchings};

    #[test]
    fn hilbert_text_and_csv() {
        assert_eq!(qpoly_text(&hilb_matchings(4)), "1,6,3\n");
        assert_eq!(qpoly_text(&hilb_matchings(0)), "1\n");
        let csv = render_qpoly(4, &hilb_matchings(4), Format::Csv).unwrap();
        assert_eq!(csv, "degree,dimension\n0,1\n1,6\n2,3\n");
    }

    #[test]
    fn series_json_shape() {
        let json = to_json(&series_to_json(&grfrob_matchings(2)));
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(value["n"], 2);
        assert_eq!(value["terms"][0]["q"], 0);
        assert_eq!(value["terms"][0]["lambda"], serde_json::json!([2]));
        assert_eq!(value["terms"][0]["coeff"], "1");
    }

    #[test]
    fn series_text_lines() {
        assert_eq!(series_text(&grfrob_matchings(2)), "q^0: s(2)\nq^1: s(2)\n");
    }

    #[test]
    fn table_rendering() {
        let mut t = Table::new(&["n", "ok"]);
        t.push(vec!["10".into(), "true".into()]);
        assert_eq!(t.csv(), "n,ok\n10,true\n");
        assert_eq!(t.text(), "n   ok\n10  true\n");
    }
}
