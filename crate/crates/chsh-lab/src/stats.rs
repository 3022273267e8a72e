//! Grouped descriptive statistics over ingested CSV records, plus the
//! embedded completion-time reference table rendered alongside any user
//! dataset for comparison.
//!
//! Conventions fixed here because the source material leaves them open:
//! standard deviation uses the sample (n-1) denominator, and the median of
//! an even-sized group is the midpoint of the two central order statistics.
//! Both are flagged in report metadata ids.

use std::io::Read;

use crate::error::{Error, Result};
use crate::report::{ReportRow, ReportTable};

/// Column mapping for ingestion: which columns form the group identity and
/// which column holds the numeric value.
#[derive(Debug, Clone)]
pub struct ColumnSchema {
    pub group_by: Vec<String>,
    pub value: String,
}

/// One ingested observation.
#[derive(Debug, Clone, PartialEq)]
pub struct Record {
    pub group_keys: Vec<String>,
    pub value: f64,
}

/// A rejected data row, reported with its 1-based line number.
#[derive(Debug, Clone, PartialEq)]
pub struct RowDiagnostic {
    pub line: u64,
    pub message: String,
}

#[derive(Debug, Clone, Default)]
pub struct Ingest {
    pub records: Vec<Record>,
    pub diagnostics: Vec<RowDiagnostic>,
}

/// Reads CSV with a header row, mapping columns through `schema`. Malformed
/// rows are collected as diagnostics; with `strict` the first one is fatal.
pub fn ingest_csv<R: Read>(reader: R, schema: &ColumnSchema, strict: bool) -> Result<Ingest> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(true)
        .flexible(true)
        .from_reader(reader);

    let headers = rdr.headers()?.clone();
    let column_index = |name: &str| -> Result<usize> {
        headers
            .iter()
            .position(|h| h == name)
            .ok_or_else(|| Error::MissingColumn(name.to_string()))
    };
    let group_idx: Vec<usize> = schema
        .group_by
        .iter()
        .map(|c| column_index(c))
        .collect::<Result<_>>()?;
    let value_idx = column_index(&schema.value)?;

    let mut out = Ingest::default();
    for record in rdr.records() {
        let record = record?;
        let line = record.position().map(|p| p.line()).unwrap_or(0);
        let mut reject = |message: String| -> Result<()> {
            if strict {
                return Err(Error::StrictRow { line, message });
            }
            out.diagnostics.push(RowDiagnostic { line, message });
            Ok(())
        };

        let raw = match record.get(value_idx) {
            Some(v) => v,
            None => {
                reject(format!("missing value field '{}'", schema.value))?;
                continue;
            }
        };
        let value = match raw.trim().parse::<f64>() {
            Ok(v) if v.is_finite() => v,
            Ok(v) => {
                reject(format!("non-finite value {v}"))?;
                continue;
            }
            Err(_) => {
                reject(format!("non-numeric value '{raw}'"))?;
                continue;
            }
        };
        let mut group_keys = Vec::with_capacity(group_idx.len());
        let mut missing_key = false;
        for (&idx, name) in group_idx.iter().zip(&schema.group_by) {
            match record.get(idx) {
                Some(k) => group_keys.push(k.trim().to_string()),
                None => {
                    reject(format!("missing group field '{name}'"))?;
                    missing_key = true;
                    break;
                }
            }
        }
        if missing_key {
            continue;
        }
        out.records.push(Record { group_keys, value });
    }
    Ok(out)
}

/// Per-group count, mean, sample standard deviation, and median.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupSummary {
    pub keys: Vec<String>,
    pub n: usize,
    pub mean: f64,
    pub std_dev: f64,
    pub median: f64,
}

/// Summarizes records per group, groups sorted by key. Errors on empty input.
pub fn group_summary(records: &[Record]) -> Result<Vec<GroupSummary>> {
    if records.is_empty() {
        return Err(Error::Domain("no records to summarize".into()));
    }
    let mut groups: std::collections::BTreeMap<Vec<String>, Vec<f64>> = Default::default();
    for r in records {
        groups.entry(r.group_keys.clone()).or_default().push(r.value);
    }
    Ok(groups
        .into_iter()
        .map(|(keys, mut values)| {
            let n = values.len();
            let mean = values.iter().sum::<f64>() / n as f64;
            let std_dev = if n > 1 {
                let ss: f64 = values.iter().map(|v| (v - mean) * (v - mean)).sum();
                (ss / (n - 1) as f64).sqrt()
            } else {
                0.0
            };
            values.sort_by(|a, b| a.partial_cmp(b).expect("finite values"));
            let median = if n % 2 == 1 {
                values[n / 2]
            } else {
                (values[n / 2 - 1] + values[n / 2]) / 2.0
            };
            GroupSummary {
                keys,
                n,
                mean,
                std_dev,
                median,
            }
        })
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sex {
    Men,
    Women,
}

impl Sex {
    pub fn label(self) -> &'static str {
        match self {
            Sex::Men => "men",
            Sex::Women => "women",
        }
    }
}

/// One embedded completion-time reference row: counts, mean and standard
/// deviation in minutes, and median, per age group and sex.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CompletionTimeRow {
    pub age_group: &'static str,
    pub sex: Sex,
    pub n: u32,
    pub mean: f64,
    pub std_dev: f64,
    pub median: f64,
}

const fn row(
    age_group: &'static str,
    sex: Sex,
    n: u32,
    mean: f64,
    std_dev: f64,
    median: f64,
) -> CompletionTimeRow {
    CompletionTimeRow {
        age_group,
        sex,
        n,
        mean,
        std_dev,
        median,
    }
}

/// Published marathon completion-time statistics (26,260 finishers, seven
/// age groups, both sexes). Display-only reference data: the raw dataset is
/// not shipped and these numbers are never asserted against computation.
pub const COMPLETION_TIME_REFERENCE: [CompletionTimeRow; 14] = [
    row("18-39", Sex::Men, 5285, 196.50, 42.50, 179.60),
    row("18-39", Sex::Women, 4884, 227.91, 42.76, 212.38),
    row("40-44", Sex::Men, 2241, 203.00, 39.15, 189.28),
    row("40-44", Sex::Women, 1878, 230.76, 37.57, 219.21),
    row("45-49", Sex::Men, 2252, 210.26, 37.09, 198.97),
    row("45-49", Sex::Women, 1817, 235.87, 33.18, 227.17),
    row("50-54", Sex::Men, 2052, 221.32, 40.38, 207.39),
    row("50-54", Sex::Women, 1207, 244.61, 35.03, 233.92),
    row("55-59", Sex::Men, 1422, 228.29, 37.27, 217.36),
    row("55-59", Sex::Women, 815, 253.28, 35.01, 244.13),
    row("60-64", Sex::Men, 1110, 239.82, 36.79, 229.95),
    row("60-64", Sex::Women, 527, 258.9, 31.50, 252.77),
    row("65-69", Sex::Men, 549, 252.95, 37.06, 242.58),
    row("65-69", Sex::Women, 221, 272.10, 30.34, 267.75),
];

/// Embedded reference rows for rendering next to a user dataset.
pub fn reference_table() -> &'static [CompletionTimeRow] {
    &COMPLETION_TIME_REFERENCE
}

pub fn summaries_to_table(summaries: &[GroupSummary]) -> ReportTable {
    let mut table = ReportTable::new(
        "group_summary",
        "Grouped summary (sample std dev, midpoint median)",
    );
    for s in summaries {
        let key = s.keys.join("/");
        table
            .rows
            .push(ReportRow::computed(format!("{key}/n"), s.n as f64));
        table
            .rows
            .push(ReportRow::computed(format!("{key}/mean"), s.mean));
        table
            .rows
            .push(ReportRow::computed(format!("{key}/std_dev"), s.std_dev));
        table
            .rows
            .push(ReportRow::computed(format!("{key}/median"), s.median));
    }
    table
}

pub fn reference_to_table() -> ReportTable {
    let mut table = ReportTable::new(
        "reference_completion_times",
        "Published completion-time statistics by age group and sex (minutes)",
    );
    for r in reference_table() {
        let key = format!("{}/{}", r.age_group, r.sex.label());
        table
            .rows
            .push(ReportRow::computed(format!("{key}/n"), r.n as f64));
        table
            .rows
            .push(ReportRow::computed(format!("{key}/mean"), r.mean));
        table
            .rows
            .push(ReportRow::computed(format!("{key}/std_dev"), r.std_dev));
        table
            .rows
            .push(ReportRow::computed(format!("{key}/median"), r.median));
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn schema() -> ColumnSchema {
        ColumnSchema {
            group_by: vec!["age_group".into(), "sex".into()],
            value: "minutes".into(),
        }
    }

    #[test]
    fn header_only_file_is_empty() {
        let ingest = ingest_csv("age_group,sex,minutes\n".as_bytes(), &schema(), false).unwrap();
        assert!(ingest.records.is_empty());
        assert!(ingest.diagnostics.is_empty());
    }

    #[test]
    fn malformed_rows_become_diagnostics() {
        let data = "age_group,sex,minutes\n18-39,M,200.5\n18-39,M,oops\n40-44,F,190\n40-44,F,210\n";
        let ingest = ingest_csv(data.as_bytes(), &schema(), false).unwrap();
        assert_eq!(ingest.records.len(), 3);
        assert_eq!(ingest.diagnostics.len(), 1);
        assert_eq!(ingest.diagnostics[0].line, 3);
        assert!(ingest.diagnostics[0].message.contains("oops"));
    }

    #[test]
    fn strict_mode_fails_on_first_bad_row() {
        let data = "age_group,sex,minutes\n18-39,M,abc\n";
        match ingest_csv(data.as_bytes(), &schema(), true) {
            Err(Error::StrictRow { line: 2, .. }) => {}
            other => panic!("expected strict row error, got {other:?}"),
        }
    }

    #[test]
    fn missing_column_is_schema_error() {
        let data = "age_group,minutes\n18-39,200\n";
        match ingest_csv(data.as_bytes(), &schema(), false) {
            Err(Error::MissingColumn(c)) => assert_eq!(c, "sex"),
            other => panic!("expected missing column, got {other:?}"),
        }
    }

    #[test]
    fn records_keyed_by_mapped_columns() {
        let data = "minutes,sex,age_group\n200,M,18-39\n";
        let ingest = ingest_csv(data.as_bytes(), &schema(), false).unwrap();
        assert_eq!(
            ingest.records[0],
            Record {
                group_keys: vec!["18-39".into(), "M".into()],
                value: 200.0
            }
        );
    }

    #[test]
    fn summary_examples() {
        let recs: Vec<Record> = [1.0, 2.0, 3.0]
            .iter()
            .map(|&v| Record {
                group_keys: vec!["g".into()],
                value: v,
            })
            .collect();
        let s = &group_summary(&recs).unwrap()[0];
        assert_eq!(s.n, 3);
        assert_eq!(s.mean, 2.0);
        assert_eq!(s.median, 2.0);
        assert!((s.std_dev - 1.0).abs() < 1e-12);

        let recs: Vec<Record> = (1..=101)
            .map(|v| Record {
                group_keys: vec!["g".into()],
                value: v as f64,
            })
            .collect();
        assert_eq!(group_summary(&recs).unwrap()[0].median, 51.0);

        let recs: Vec<Record> = [1.0, 2.0, 3.0, 4.0]
            .iter()
            .map(|&v| Record {
                group_keys: vec!["g".into()],
                value: v,
            })
            .collect();
        assert_eq!(group_summary(&recs).unwrap()[0].median, 2.5);

        assert!(group_summary(&[]).is_err());
    }

    #[test]
    fn groups_sorted_and_counts_add_up() {
        let data = "age_group,sex,minutes\n40-44,M,210\n18-39,F,220\n18-39,F,230\n40-44,M,190\n18-39,M,180\n";
        let ingest = ingest_csv(data.as_bytes(), &schema(), false).unwrap();
        let summaries = group_summary(&ingest.records).unwrap();
        let keys: Vec<String> = summaries.iter().map(|s| s.keys.join("/")).collect();
        assert_eq!(keys, vec!["18-39/F", "18-39/M", "40-44/M"]);
        let total: usize = summaries.iter().map(|s| s.n).sum();
        assert_eq!(total, ingest.records.len());
    }

    #[test]
    fn reference_rows_match_published_values() {
        let first = reference_table()[0];
        assert_eq!(
            (first.n, first.mean, first.std_dev, first.median),
            (5285, 196.50, 42.50, 179.60)
        );
        let last = reference_table()[13];
        assert_eq!(last.age_group, "65-69");
        assert_eq!(last.sex, Sex::Women);
        assert_eq!(
            (last.n, last.mean, last.std_dev, last.median),
            (221, 272.10, 30.34, 267.75)
        );

        let men_total: u32 = reference_table()
            .iter()
            .filter(|r| r.sex == Sex::Men)
            .map(|r| r.n)
            .sum();
        assert_eq!(men_total, 14_911);
        let women_total: u32 = reference_table()
            .iter()
            .filter(|r| r.sex == Sex::Women)
            .map(|r| r.n)
            .sum();
        assert_eq!(women_total, 11_349);
    }

    #[test]
    fn reference_rows_are_left_skewed() {
        // median below mean on every published row
        for r in reference_table() {
            assert!(r.median <= r.mean, "{} {}", r.age_group, r.sex.label());
        }
    }

    proptest! {
        #[test]
        fn shift_invariance(
            values in proptest::collection::vec(-1e3f64..1e3, 2..60),
            shift in -1e3f64..1e3,
        ) {
            let recs: Vec<Record> = values.iter().map(|&v| Record {
                group_keys: vec!["g".into()], value: v,
            }).collect();
            let shifted: Vec<Record> = values.iter().map(|&v| Record {
                group_keys: vec!["g".into()], value: v + shift,
            }).collect();
            let a = &group_summary(&recs).unwrap()[0];
            let b = &group_summary(&shifted).unwrap()[0];
            prop_assert!((b.mean - a.mean - shift).abs() < 1e-9);
            prop_assert!((b.median - a.median - shift).abs() < 1e-9);
            prop_assert!((b.std_dev - a.std_dev).abs() < 1e-9);
        }

        #[test]
        fn median_within_bounds(values in proptest::collection::vec(-1e6f64..1e6, 1..80)) {
            let recs: Vec<Record> = values.iter().map(|&v| Record {
                group_keys: vec!["g".into()], value: v,
            }).collect();
            let s = &group_summary(&recs).unwrap()[0];
            let min = values.iter().cloned().fold(f64::INFINITY, f64::min);
            let max = values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
            prop_assert!(min <= s.median && s.median <= max);
            prop_assert!(s.std_dev >= 0.0);
            prop_assert!(s.n >= 1);
        }
    }
}
