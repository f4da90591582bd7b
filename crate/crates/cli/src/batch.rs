use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use braid3_core::invariants::report;
use braid3_core::sweep::par_map;
use serde_json::{json, Map, Value};

use crate::{max_word_len, parse_word, CliError};

const REPORT_KEYS: [&str; 19] = [
    "components",
    "is_knot",
    "upsilon",
    "signature",
    "s",
    "genus3",
    "genus4",
    "tau",
    "alt",
    "dalt",
    "turaev",
    "minimal_r",
    "ballinger_t",
    "fdtc",
    "homogenized_upsilon",
    "gamma4_lower",
    "garside_form",
    "murasugi_form",
    "flags",
];

struct Row {
    name: String,
    word: String,
    input_error: Option<String>,
}

fn evaluate(row: &Row, limit: usize) -> Value {
    let mut out = Map::new();
    out.insert("name".into(), json!(row.name));
    out.insert("word".into(), json!(row.word));
    let result = match &row.input_error {
        Some(e) => Err(e.clone()),
        None => parse_word(&row.word, limit)
            .and_then(|w| report(&w).map_err(CliError::from))
            .map_err(|e| e.to_string()),
    };
    match result {
        Ok(r) => out.insert("report".into(), serde_json::to_value(&r).expect("json")),
        Err(e) => out.insert("error".into(), json!(e)),
    };
    Value::Object(out)
}

fn read_rows(path: &Path) -> Result<Vec<Row>, CliError> {
    let bytes = std::fs::read(path)
        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
    let mut reader = csv::ReaderBuilder::new()
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(bytes.as_slice());
    let headers = reader
        .headers()
        .map_err(|e| CliError::Io(format!("cannot read header of {}: {e}", path.display())))?
        .clone();
    let column = |name: &str| headers.iter().position(|h| h == name);
    let (name_col, word_col) = match (column("name"), column("word")) {
        (Some(n), Some(w)) => (n, w),
        _ if headers.is_empty() => return Ok(Vec::new()),
        _ => {
            return Err(CliError::Io(format!(
                "{} has no name,word header",
                path.display()
            )))
        }
    };
    let mut rows = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let line = i + 2;
        let row = match record {
            Ok(r) => match (r.get(name_col), r.get(word_col)) {
                (Some(n), Some(w)) => Row {
                    name: n.to_string(),
                    word: w.to_string(),
                    input_error: None,
                },
                (n, _) => Row {
                    name: n.unwrap_or_default().to_string(),
                    word: String::new(),
                    input_error: Some(format!("line {line}: missing word field")),
                },
            },
            Err(e) => Row {
                name: String::new(),
                word: String::new(),
                input_error: Some(format!("line {line}: {e}")),
            },
        };
        rows.push(row);
    }
    Ok(rows)
}

fn csv_cell(v: Option<&Value>) -> String {
    match v {
        None | Some(Value::Null) => String::new(),
        Some(Value::String(s)) => s.clone(),
        Some(Value::Object(o)) if o.contains_key("lo") => {
            format!("[{},{}]", o["lo"], o["hi"])
        }
        Some(Value::Object(o)) => o
            .iter()
            .map(|(k, v)| format!("{k}={}", v.as_str().unwrap_or_default()))
            .collect::<Vec<_>>()
            .join(";"),
        Some(other) => other.to_string(),
    }
}

fn write_csv(records: &[Value], sink: impl Write) -> io::Result<()> {
    let mut w = csv::Writer::from_writer(sink);
    let mut header = vec!["name", "word", "error"];
    header.extend(REPORT_KEYS);
    w.write_record(&header)?;
    for r in records {
        let mut cells = vec![
            csv_cell(r.get("name")),
            csv_cell(r.get("word")),
            csv_cell(r.get("error")),
        ];
        let rep = r.get("report");
        cells.extend(REPORT_KEYS.iter().map(|k| csv_cell(rep.and_then(|x| x.get(*k)))));
        w.write_record(&cells)?;
    }
    w.flush()
}

fn write_jsonl(records: &[Value], mut sink: impl Write) -> io::Result<()> {
    for r in records {
        writeln!(sink, "{r}")?;
    }
    sink.flush()
}

pub fn run(csv_path: &Path, out: Option<&Path>) -> Result<(), CliError> {
    let limit = max_word_len()?;
    let rows = read_rows(csv_path)?;
    let records = par_map(&rows, |r| evaluate(r, limit));
    let errors = records.iter().filter(|r| r.get("error").is_some()).count();
    let as_csv = out.is_some_and(|p| p.extension().is_some_and(|e| e.eq_ignore_ascii_case("csv")));
    let written = match out {
        Some(path) => {
            let file = File::create(path)
                .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display())))?;
            let sink = BufWriter::new(file);
            if as_csv {
                write_csv(&records, sink)
            } else {
                write_jsonl(&records, sink)
            }
        }
        None => write_jsonl(&records, io::stdout().lock()),
    };
    written.map_err(|e| CliError::Io(format!("write failed: {e}")))?;
    eprintln!("{} processed, {} errors", records.len(), errors);
    Ok(())
}
