//! CSV and JSON emission. Numbers are rounded to 15 significant digits so
//! output is stable across platforms; missing values are empty CSV cells
//! and JSON `null`.

use std::io::Write;

use serde_json::{Map, Value};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<Option<f64>>>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Output {
    /// A single flat object.
    Record(Map<String, Value>),
    /// Rows, plus summary fields emitted as a trailing `# {json}` line in
    /// CSV and as top-level keys next to `rows` in JSON.
    Table { table: Table, footer: Option<Map<String, Value>> },
}

pub fn round15(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.14e}").parse().unwrap_or(x)
}

pub fn fmt15(x: f64) -> String {
    let r = round15(x);
    if r == 0.0 {
        "0".into()
    } else if (1e-5..1e15).contains(&r.abs()) {
        format!("{r}")
    } else {
        format!("{r:e}")
    }
}

pub fn number(x: f64) -> Value {
    let r = round15(x);
    serde_json::Number::from_f64(r).map(Value::Number).unwrap_or(Value::Null)
}

pub fn cell(x: Option<f64>) -> Value {
    x.filter(|v| v.is_finite()).map(number).unwrap_or(Value::Null)
}

pub fn write(out: &Output, format: Format, sink: &mut dyn Write) -> Result<(), CliError> {
    match format {
        Format::Csv => write_csv(out, sink),
        Format::Json => {
            serde_json::to_writer_pretty(&mut *sink, &to_json(out)).map_err(std::io::Error::other)?;
            writeln!(sink)?;
            Ok(())
        }
    }
}

fn to_json(out: &Output) -> Value {
    match out {
        Output::Record(m) => Value::Object(m.clone()),
        Output::Table { table, footer } => {
            let rows: Vec<Value> = table
                .rows
                .iter()
                .map(|row| {
                    Value::Object(
                        table
                            .headers
                            .iter()
                            .zip(row)
                            .map(|(h, v)| (h.clone(), cell(*v)))
                            .collect(),
                    )
                })
                .collect();
            match footer {
                None => Value::Array(rows),
                Some(f) => {
                    let mut m = f.clone();
                    m.insert("rows".into(), Value::Array(rows));
                    Value::Object(m)
                }
            }
        }
    }
}

fn write_csv(out: &Output, sink: &mut dyn Write) -> Result<(), CliError> {
    match out {
        Output::Record(m) => {
            let mut w = csv::Writer::from_writer(&mut *sink);
            w.write_record(m.keys())?;
            w.write_record(m.values().map(|v| match v {
                Value::Number(n) => n.as_f64().map(fmt15).unwrap_or_else(|| n.to_string()),
                Value::String(s) => s.clone(),
                Value::Null => String::new(),
                other => other.to_string(),
            }))?;
            w.flush()?;
        }
        Output::Table { table, footer } => {
            {
                let mut w = csv::Writer::from_writer(&mut *sink);
                w.write_record(&table.headers)?;
                for row in &table.rows {
                    w.write_record(row.iter().map(|v| v.filter(|x| x.is_finite()).map(fmt15).unwrap_or_default()))?;
                }
                w.flush()?;
            }
            if let Some(f) = footer {
                writeln!(sink, "# {}", Value::Object(f.clone()))?;
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fifteen_significant_digits() {
        assert_eq!(fmt15(0.5), "0.5");
        assert_eq!(fmt15(std::f64::consts::SQRT_2), "1.4142135623731");
        assert_eq!(fmt15(0.0), "0");
        assert_eq!(fmt15(-0.0), "0");
        assert_eq!(fmt15(3.26e-29), "3.26e-29");
        assert_eq!(fmt15(1.0 / 3.0), "0.333333333333333");
        assert_eq!(fmt15(2e20), "2e20");
    }

    fn sample() -> Output {
        let mut footer = Map::new();
        footer.insert("max_dev".into(), number(0.25));
        Output::Table {
            table: Table {
                headers: vec!["t".into(), "p".into()],
                rows: vec![vec![Some(0.0), Some(0.1)], vec![Some(1.0), None]],
            },
            footer: Some(footer),
        }
    }

    #[test]
    fn csv_layout() {
        let mut buf = Vec::new();
        write(&sample(), Format::Csv, &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "t,p\n0,0.1\n1,\n# {\"max_dev\":0.25}\n");
    }

    #[test]
    fn json_layout() {
        let mut buf = Vec::new();
        write(&sample(), Format::Json, &mut buf).unwrap();
        let v: Value = serde_json::from_slice(&buf).unwrap();
        assert_eq!(v["max_dev"], 0.25);
        assert_eq!(v["rows"][1]["p"], Value::Null);
        assert_eq!(v["rows"][0]["p"], 0.1);
    }
}
