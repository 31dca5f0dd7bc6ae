//! Text renderings of tables, chain counts and verification reports.
//!
//! Every renderer is a pure function of its input, so output is byte-for-byte stable.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use serde_json::{json, Map, Number, Value};

use crate::combinatorics::RankSet;
use crate::error::{Error, Result};
use crate::poset::{chain_count, chain_count_alternating, GradedPoset};
use crate::rank_selection::BetaTable;
use crate::report::{Report, Status};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Md,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "md" => Ok(Format::Md),
            other => Err(Error::InvalidArgument(format!("unknown format `{other}`"))),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Md => "md",
        })
    }
}

/// `a_P(S)` and `b_P(S)` for one rank set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainRow {
    pub set: RankSet,
    pub a: BigUint,
    pub b: BigInt,
}

pub fn chain_rows<P: GradedPoset>(poset: &P, sets: &[RankSet]) -> Result<Vec<ChainRow>> {
    sets.iter()
        .map(|s| {
            Ok(ChainRow {
                set: s.clone(),
                a: chain_count(poset, s)?,
                b: chain_count_alternating(poset, s)?,
            })
        })
        .collect()
}

fn number(x: impl ToString) -> Value {
    Value::Number(Number::from_str(&x.to_string()).expect("integers are valid JSON numbers"))
}

fn set_json(s: &RankSet) -> Value {
    Value::Array(s.elements().iter().map(|&e| json!(e)).collect())
}

fn pretty(v: &Value) -> String {
    let mut out = serde_json::to_string_pretty(v).expect("JSON values serialise");
    out.push('\n');
    out
}

fn csv_string(header: &[String], rows: &[Vec<String>]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::InvalidArgument(format!("csv: {e}"));
    w.write_record(header).map_err(io)?;
    for row in rows {
        w.write_record(row).map_err(io)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Error::InvalidArgument(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

/// A markdown table whose columns are padded to a common width.
fn markdown(header: &[String], rows: &[Vec<String>]) -> String {
    let widths: Vec<usize> = (0..header.len())
        .map(|c| {
            rows.iter()
                .map(|r| r[c].chars().count())
                .chain(std::iter::once(header[c].chars().count()))
                .max()
                .unwrap_or(0)
                .max(3)
        })
        .collect();
    let line = |cells: &[String]| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        format!("| {} |\n", padded.join(" | "))
    };
    let mut out = line(header);
    let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
    out.push_str(&format!("|-{}-|\n", rule.join("-|-")));
    for row in rows {
        out.push_str(&line(row));
    }
    out
}

/// Renders a [`BetaTable`]. JSON rows carry every partition, zero multiplicities included.
pub fn render_table(table: &BetaTable, format: Format) -> Result<String> {
    match format {
        Format::Json => {
            let rows: Vec<Value> = table
                .rows
                .iter()
                .map(|row| {
                    let mut mults = Map::new();
                    for (lambda, m) in table.shapes.iter().zip(&row.multiplicities) {
                        mults.insert(lambda.to_csv_key(), number(m));
                    }
                    json!({
                        "S": set_json(&row.set),
                        "multiplicities": Value::Object(mults),
                        "dimension": number(row.dimension(&table.shapes)),
                    })
                })
                .collect();
            Ok(pretty(&json!({
                "n": table.n,
                "r": table.r,
                "method": table.method.name(),
                "rows": rows,
            })))
        }
        Format::Csv | Format::Md => {
            let mut header = vec!["S".to_string()];
            header.extend(table.shapes.iter().map(|l| match format {
                Format::Csv => l.to_csv_key(),
                _ => l.to_string(),
            }));
            header.push("dimension".into());
            let rows: Vec<Vec<String>> = table
                .rows
                .iter()
                .map(|row| {
                    let mut cells = vec![match format {
                        Format::Csv => row.set.to_csv_key(),
                        _ => row.set.to_string(),
                    }];
                    cells.extend(row.multiplicities.iter().map(|m| m.to_string()));
                    cells.push(row.dimension(&table.shapes).to_string());
                    cells
                })
                .collect();
            if format == Format::Csv {
                csv_string(&header, &rows)
            } else {
                Ok(markdown(&header, &rows))
            }
        }
    }
}

pub fn render_chains(n: usize, r: usize, rows: &[ChainRow], format: Format) -> Result<String> {
    match format {
        Format::Json => {
            let rows: Vec<Value> = rows
                .iter()
                .map(|row| json!({"S": set_json(&row.set), "a": number(&row.a), "b": number(&row.b)}))
                .collect();
            Ok(pretty(&json!({"n": n, "r": r, "rows": rows})))
        }
        Format::Csv | Format::Md => {
            let header = vec!["S".to_string(), "a".into(), "b".into()];
            let cells: Vec<Vec<String>> = rows
                .iter()
                .map(|row| {
                    let set = if format == Format::Csv {
                        row.set.to_csv_key()
                    } else {
                        row.set.to_string()
                    };
                    vec![set, row.a.to_string(), row.b.to_string()]
                })
                .collect();
            if format == Format::Csv {
                csv_string(&header, &cells)
            } else {
                Ok(markdown(&header, &cells))
            }
        }
    }
}

fn joined(v: &[BigInt]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn render_report(report: &Report, format: Format) -> Result<String> {
    match format {
        Format::Json => {
            let checks: Vec<Value> = report
                .checks
                .iter()
                .map(|c| {
                    json!({
                        "name": c.name,
                        "identity": c.anchor,
                        "parameters": c.parameters,
                        "status": c.status.to_string(),
                        "expected": c.expected.iter().map(number).collect::<Vec<_>>(),
                        "actual": c.actual.iter().map(number).collect::<Vec<_>>(),
                        "note": c.note,
                    })
                })
                .collect();
            Ok(pretty(&json!({
                "summary": {
                    "pass": report.count(Status::Pass),
                    "fail": report.count(Status::Fail),
                    "skipped": report.count(Status::Skipped),
                },
                "checks": checks,
            })))
        }
        Format::Csv => {
            let header: Vec<String> = [
                "status",
                "name",
                "parameters",
                "identity",
                "expected",
                "actual",
                "note",
            ]
            .iter()
            .map(|s| s.to_string())
            .collect();
            let rows: Vec<Vec<String>> = report
                .checks
                .iter()
                .map(|c| {
                    vec![
                        c.status.to_string(),
                        c.name.clone(),
                        c.parameters.clone(),
                        c.anchor.clone(),
                        joined(&c.expected),
                        joined(&c.actual),
                        c.note.clone().unwrap_or_default(),
                    ]
                })
                .collect();
            csv_string(&header, &rows)
        }
        Format::Md => {
            let header: Vec<String> = ["status", "name", "parameters", "identity", "note"]
                .iter()
                .map(|s| s.to_string())
                .collect();
            let rows: Vec<Vec<String>> = report
                .checks
                .iter()
                .map(|c| {
                    vec![
                        c.status.to_string(),
                        c.name.clone(),
                        c.parameters.clone(),
                        c.anchor.replace('|', "\\|"),
                        c.note.clone().unwrap_or_default(),
                    ]
                })
                .collect();
            let mut out = markdown(&header, &rows);
            out.push_str(&format!(
                "\n{} passed, {} failed, {} skipped\n",
                report.count(Status::Pass),
                report.count(Status::Fail),
                report.count(Status::Skipped)
            ));
            Ok(out)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::{InjectiveWordPoset, DEFAULT_BUDGET};
    use crate::rank_selection::Method;

    #[test]
    fn table_json_shape() {
        let t = BetaTable::compute(2, 1, Method::Tau, DEFAULT_BUDGET).unwrap();
        let v: Value = serde_json::from_str(&render_table(&t, Format::Json).unwrap()).unwrap();
        assert_eq!(v["method"], "tau");
        assert_eq!(v["rows"].as_array().unwrap().len(), 4);
        assert_eq!(v["rows"][1]["S"], json!([1]));
        assert_eq!(v["rows"][1]["multiplicities"]["1,1"], json!(1));
        assert_eq!(v["rows"][1]["multiplicities"]["2"], json!(0));
        assert_eq!(v["rows"][3]["dimension"], json!(1));
    }

    #[test]
    fn table_csv_and_md() {
        let t = BetaTable::compute(2, 1, Method::Closed, DEFAULT_BUDGET).unwrap();
        let csv = render_table(&t, Format::Csv).unwrap();
        assert_eq!(
            csv,
            "S,2,\"1,1\",dimension\n,1,0,1\n1,0,1,1\n2,0,1,1\n\"1,2\",1,0,1\n"
        );
        let md = render_table(&t, Format::Md).unwrap();
        assert!(md.starts_with("| S     | (2) | (1,1) | dimension |\n"));
        assert!(md.contains("| {1,2} | 1   | 0     | 1         |"));
    }

    #[test]
    fn chains_render() {
        let p = InjectiveWordPoset::build(3, 1, DEFAULT_BUDGET).unwrap();
        let rows = chain_rows(&p, &[RankSet::full(3)]).unwrap();
        let text = render_chains(3, 1, &rows, Format::Csv).unwrap();
        assert_eq!(text, "S,a,b\n\"1,2,3\",36,2\n");
    }

    #[test]
    fn big_numbers_stay_exact() {
        assert_eq!(
            number(BigInt::from(10u8).pow(30)).to_string(),
            "1000000000000000000000000000000"
        );
    }
}
