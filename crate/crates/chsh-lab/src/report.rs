//! Machine-readable report documents.
//!
//! One `Report` holds an ordered list of tables; every table row is the same
//! flat shape `{id, computed, paper_value?, delta?, uncertainty?, reference?}`
//! so CSV and JSON stay trivially scriptable. Rendering is deterministic:
//! identical inputs produce byte-identical documents. All output is UTF-8
//! with LF line endings and "." as the decimal separator.

use serde::Serialize;

use crate::error::{Error, Result};

/// JSON schema version tag carried by every report.
pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
    Markdown,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            "markdown" | "md" => Ok(Format::Markdown),
            other => Err(Error::Usage(format!(
                "unknown format '{other}' (expected csv, json, or markdown)"
            ))),
        }
    }
}

/// One fact: a computed value, optionally paired with the published value it
/// reproduces, the delta between them, an uncertainty, and a citation.
#[derive(Debug, Clone, Serialize)]
pub struct ReportRow {
    pub id: String,
    /// `None` renders as an explicitly absent cell (null / empty / em dash),
    /// used where a model defines no value rather than a value of zero.
    pub computed: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub paper_value: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub uncertainty: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reference: Option<String>,
}

impl ReportRow {
    pub fn computed(id: impl Into<String>, value: f64) -> Self {
        Self {
            id: id.into(),
            computed: Some(value),
            paper_value: None,
            delta: None,
            uncertainty: None,
            reference: None,
        }
    }

    pub fn absent(id: impl Into<String>) -> Self {
        Self {
            id: id.into(),
            computed: None,
            paper_value: None,
            delta: None,
            uncertainty: None,
            reference: None,
        }
    }

    /// Attaches the published value and records delta = computed - published.
    pub fn with_paper(mut self, paper: f64) -> Self {
        self.paper_value = Some(paper);
        self.delta = self.computed.map(|c| c - paper);
        self
    }

    pub fn with_uncertainty(mut self, u: f64) -> Self {
        self.uncertainty = Some(u);
        self
    }

    pub fn with_reference(mut self, citation: impl Into<String>) -> Self {
        self.reference = Some(citation.into());
        self
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportTable {
    pub id: String,
    pub title: String,
    pub rows: Vec<ReportRow>,
}

impl ReportTable {
    pub fn new(id: impl Into<String>, title: impl Into<String>) -> Self {
        Self {
            id: id.into(),
            title: title.into(),
            rows: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct GridMeta {
    pub n_states: usize,
}

/// Metadata echoed whenever a stochastic estimator contributed to a report.
#[derive(Debug, Clone, Serialize)]
pub struct McMeta {
    pub seed: u64,
    pub rng: &'static str,
    pub samples: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema_version: &'static str,
    pub grid: GridMeta,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mc: Option<McMeta>,
    pub tables: Vec<ReportTable>,
}

impl Report {
    pub fn new(n_states: usize) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            grid: GridMeta { n_states },
            mc: None,
            tables: Vec::new(),
        }
    }

    pub fn push(&mut self, table: ReportTable) {
        self.tables.push(table);
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Csv => self.to_csv_concat(),
            Format::Markdown => self.to_markdown(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// One CSV document per table: (table id, csv text). Header row first,
    /// "." decimals, LF line endings.
    pub fn to_csv_tables(&self) -> Vec<(String, String)> {
        self.tables
            .iter()
            .map(|t| {
                let mut out = String::from("id,computed,paper_value,delta,uncertainty,reference\n");
                for row in &t.rows {
                    out.push_str(&csv_field(&row.id));
                    out.push(',');
                    out.push_str(&opt_num(row.computed));
                    out.push(',');
                    out.push_str(&opt_num(row.paper_value));
                    out.push(',');
                    out.push_str(&opt_num(row.delta));
                    out.push(',');
                    out.push_str(&opt_num(row.uncertainty));
                    out.push(',');
                    out.push_str(&csv_field(row.reference.as_deref().unwrap_or("")));
                    out.push('\n');
                }
                (t.id.clone(), out)
            })
            .collect()
    }

    /// Tables concatenated into one stream, each preceded by a
    /// `# table: <id>` marker line (used when writing to stdout).
    fn to_csv_concat(&self) -> String {
        let mut out = String::new();
        for (id, csv) in self.to_csv_tables() {
            out.push_str("# table: ");
            out.push_str(&id);
            out.push('\n');
            out.push_str(&csv);
        }
        out
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        for t in &self.tables {
            out.push_str("## ");
            out.push_str(&t.title);
            out.push_str("\n\n");
            out.push_str("| id | computed | published | delta | uncertainty | reference |\n");
            out.push_str("|---|---|---|---|---|---|\n");
            for row in &t.rows {
                out.push_str(&format!(
                    "| {} | {} | {} | {} | {} | {} |\n",
                    row.id,
                    md_num(row.computed),
                    md_num(row.paper_value),
                    md_num(row.delta),
                    md_num(row.uncertainty),
                    row.reference.as_deref().unwrap_or(""),
                ));
            }
            out.push('\n');
        }
        out
    }
}

fn opt_num(v: Option<f64>) -> String {
    match v {
        Some(x) => fmt_f64(x),
        None => String::new(),
    }
}

fn md_num(v: Option<f64>) -> String {
    match v {
        Some(x) => format!("{x:.4}"),
        None => "—".to_string(),
    }
}

/// Shortest round-trip representation, same as the JSON encoding.
fn fmt_f64(x: f64) -> String {
    let mut buf = ryu_like(x);
    if !buf.contains('.') && !buf.contains('e') && !buf.contains("inf") && !buf.contains("nan") {
        buf.push_str(".0");
    }
    buf
}

fn ryu_like(x: f64) -> String {
    // serde_json uses ryu; going through it keeps CSV and JSON identical
    serde_json::to_string(&x).unwrap_or_else(|_| x.to_string())
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        let mut r = Report::new(32);
        let mut t = ReportTable::new("demo", "Demo table");
        t.rows.push(ReportRow::computed("x", 2.82842712474619).with_paper(2.794));
        t.rows.push(ReportRow::absent("absent_cell"));
        t.rows.push(
            ReportRow::computed("ref_s", 2.697)
                .with_uncertainty(0.015)
                .with_reference("somebody, somewhere (1982)"),
        );
        r.push(t);
        r
    }

    #[test]
    fn json_has_schema_and_grid() {
        let json = sample().to_json();
        assert!(json.contains("\"schema_version\": \"1\""));
        assert!(json.contains("\"n_states\": 32"));
        assert!(json.contains("\"computed\": null"));
        assert!(json.contains("2.697"));
        assert!(json.contains("0.015"));
    }

    #[test]
    fn empty_report_is_valid_in_every_format() {
        let r = Report::new(32);
        let json = r.to_json();
        assert!(json.contains("\"tables\": []"));
        assert_eq!(r.render(Format::Csv), "");
        assert_eq!(r.render(Format::Markdown), "");

        let mut r = Report::new(32);
        r.push(ReportTable::new("empty", "Zero rows"));
        assert!(r.render(Format::Csv).contains("id,computed"));
        assert!(r.render(Format::Markdown).contains("## Zero rows"));
    }

    #[test]
    fn rendering_is_deterministic() {
        let r = sample();
        for format in [Format::Csv, Format::Json, Format::Markdown] {
            assert_eq!(r.render(format), r.render(format));
        }
    }

    #[test]
    fn csv_quotes_fields_with_commas() {
        let mut r = Report::new(1);
        let mut t = ReportTable::new("t", "T");
        t.rows
            .push(ReportRow::computed("x", 1.0).with_reference("a, b & c"));
        r.push(t);
        let csv = r.render(Format::Csv);
        assert!(csv.contains("\"a, b & c\""));
        assert!(csv.ends_with('\n'));
        assert!(!csv.contains('\r'));
    }

    #[test]
    fn format_parsing() {
        assert_eq!("json".parse::<Format>().unwrap(), Format::Json);
        assert_eq!("CSV".parse::<Format>().unwrap(), Format::Csv);
        assert_eq!("markdown".parse::<Format>().unwrap(), Format::Markdown);
        assert!("yaml".parse::<Format>().is_err());
    }

    #[test]
    fn delta_is_computed_minus_published() {
        let row = ReportRow::computed("x", 2.82842712474619).with_paper(2.7941);
        assert!((row.delta.unwrap() - 0.0343271247461899).abs() < 1e-12);
    }
}
