//! The `{manifest, results}` envelope written by every command, and its
//! CSV projection.

use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::cache::SCHEMA_VERSION;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timestamps {
    /// Seconds since the Unix epoch.
    pub started: u64,
    pub finished: u64,
}

/// Everything needed to rerun a command and get the same bytes back.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub schema_version: u32,
    /// Arguments that influence results, in the order given.
    pub command: Vec<String>,
    pub tool_version: String,
    pub config: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timestamps: Option<Timestamps>,
    /// Cache files read or written, by file name.
    pub cache_files: Vec<String>,
    pub outputs: Vec<String>,
}

impl RunManifest {
    pub fn new(command: Vec<String>, config: Value) -> Self {
        RunManifest {
            schema_version: SCHEMA_VERSION,
            command,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            config,
            timestamps: None,
            cache_files: Vec::new(),
            outputs: Vec::new(),
        }
    }
}

pub fn unix_now() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub manifest: RunManifest,
    pub results: Vec<Value>,
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    /// One row per result; columns are the union of top-level keys in order
    /// of first appearance. Nested values are written as compact JSON. The
    /// manifest precedes the table as a `# manifest:` comment.
    pub fn to_csv(&self) -> Result<String> {
        let mut columns: Vec<String> = Vec::new();
        for r in &self.results {
            if let Value::Object(map) = r {
                for k in map.keys() {
                    if !columns.contains(k) {
                        columns.push(k.clone());
                    }
                }
            }
        }
        let manifest = serde_json::to_string(&self.manifest).expect("manifests serialize");
        let mut out = format!("# manifest: {manifest}\n").into_bytes();
        {
            let mut w = csv::Writer::from_writer(&mut out);
            let csv_err = |e: csv::Error| Error::Io(e.to_string());
            if !columns.is_empty() {
                w.write_record(&columns).map_err(csv_err)?;
            }
            let empty = Map::new();
            for r in &self.results {
                let map = r.as_object().unwrap_or(&empty);
                let row: Vec<String> = columns
                    .iter()
                    .map(|c| map.get(c).map(cell).unwrap_or_default())
                    .collect();
                w.write_record(&row).map_err(csv_err)?;
            }
            w.flush().map_err(|e| Error::Io(e.to_string()))?;
        }
        Ok(String::from_utf8(out).expect("csv output is utf-8"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn sample() -> Report {
        Report {
            manifest: RunManifest::new(vec!["enumerate".into(), "--d".into(), "2".into()], json!({"d": 2})),
            results: vec![
                json!({"n": 1, "count": "1", "rigor": "exact"}),
                json!({"n": 2, "count": "2", "rigor": "exact", "note": "a, \"b\""}),
                json!({"n": 3, "value": 0.5, "list": [1, 2]}),
            ],
        }
    }

    #[test]
    fn json_round_trips() {
        let r = sample();
        let back: Report = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
        assert!(!r.to_json().contains("timestamps"));
    }

    #[test]
    fn csv_projection() {
        let text = sample().to_csv().unwrap();
        let mut lines = text.lines();
        let first = lines.next().unwrap();
        assert!(first.starts_with("# manifest: {"));
        let rest: String = lines.map(|l| format!("{l}\n")).collect();
        let mut rdr = csv::Reader::from_reader(rest.as_bytes());
        let headers: Vec<String> = rdr.headers().unwrap().iter().map(String::from).collect();
        assert_eq!(headers, ["n", "count", "rigor", "note", "value", "list"]);
        let rows: Vec<csv::StringRecord> = rdr.records().map(|r| r.unwrap()).collect();
        assert_eq!(&rows[1][3], "a, \"b\"");
        assert_eq!(&rows[2][4], "0.5");
        assert_eq!(&rows[2][5], "[1,2]");
        assert_eq!(&rows[0][4], "");
    }
}
