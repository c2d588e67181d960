use num_bigint::BigUint;
use serde::Serialize;
use serde_json::{Map, Value};

use super::args::Format;

pub const FORMAT_VERSION: &str = "1";

/// One machine-readable result. Keys of `params` and `result` are sorted.
#[derive(Debug, Serialize)]
pub struct OutputRecord {
    pub version: &'static str,
    pub command: String,
    pub params: Map<String, Value>,
    pub result: Value,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    /// Cut short by the time budget.
    Incomplete,
    /// A regression or conjecture check failed.
    Mismatch,
}

/// A command's output: the structured record plus a flat table view.
#[derive(Debug)]
pub struct Report {
    pub record: OutputRecord,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub status: Status,
    /// Lines for stderr.
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(command: &str, params: Map<String, Value>, result: Value, header: &[&str]) -> Self {
        Report {
            record: OutputRecord {
                version: FORMAT_VERSION,
                command: command.to_string(),
                params,
                result,
            },
            header: header.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
            status: Status::Ok,
            notes: Vec::new(),
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Jsonl => {
                let mut s = serde_json::to_string(&self.record).expect("serializable record");
                s.push('\n');
                s
            }
            Format::Csv => {
                let mut out = String::new();
                for row in std::iter::once(&self.header).chain(&self.rows) {
                    let cells: Vec<String> = row.iter().map(|c| csv_cell(c)).collect();
                    out.push_str(&cells.join(","));
                    out.push('\n');
                }
                out
            }
            Format::Table => {
                let cols = self.header.len();
                let mut width = vec![0; cols];
                for row in std::iter::once(&self.header).chain(&self.rows) {
                    for (w, c) in width.iter_mut().zip(row) {
                        *w = (*w).max(c.chars().count());
                    }
                }
                let mut out = String::new();
                for row in std::iter::once(&self.header).chain(&self.rows) {
                    let mut line = String::new();
                    for (i, c) in row.iter().enumerate() {
                        if i + 1 == row.len() {
                            line.push_str(c);
                        } else {
                            line.push_str(&format!("{c:<w$}  ", w = width[i]));
                        }
                    }
                    out.push_str(line.trim_end());
                    out.push('\n');
                }
                out
            }
        }
    }
}

fn csv_cell(c: &str) -> String {
    if c.contains([',', '"', '\n']) {
        format!("\"{}\"", c.replace('"', "\"\""))
    } else {
        c.to_string()
    }
}

/// Exact integer as a JSON number.
pub fn big(v: &BigUint) -> Value {
    Value::Number(v.to_string().parse().expect("decimal integer"))
}

/// Builds a JSON object from key/value pairs.
pub fn object<I, K>(pairs: I) -> Value
where
    I: IntoIterator<Item = (K, Value)>,
    K: Into<String>,
{
    Value::Object(pairs.into_iter().map(|(k, v)| (k.into(), v)).collect())
}

pub fn params<I, K>(pairs: I) -> Map<String, Value>
where
    I: IntoIterator<Item = (K, Value)>,
    K: Into<String>,
{
    pairs.into_iter().map(|(k, v)| (k.into(), v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn sample() -> Report {
        let mut r = Report::new("count", params([("n", json!(3))]), json!({"b": 1, "a": 2}), &["n", "count"]);
        r.rows.push(vec!["1".into(), "1".into()]);
        r.rows.push(vec!["10".into(), "a,b".into()]);
        r
    }

    #[test]
    fn table_is_aligned() {
        assert_eq!(sample().render(Format::Table), "n   count\n1   1\n10  a,b\n");
    }

    #[test]
    fn csv_quotes() {
        assert_eq!(sample().render(Format::Csv), "n,count\n1,1\n10,\"a,b\"\n");
    }

    #[test]
    fn json_keys_sorted() {
        assert_eq!(
            sample().render(Format::Jsonl),
            "{\"version\":\"1\",\"command\":\"count\",\"params\":{\"n\":3},\"result\":{\"a\":2,\"b\":1}}\n"
        );
    }

    #[test]
    fn big_numbers_stay_exact() {
        let v: BigUint = "123456789012345678901234567890".parse().unwrap();
        assert_eq!(big(&v).to_string(), "123456789012345678901234567890");
    }
}
