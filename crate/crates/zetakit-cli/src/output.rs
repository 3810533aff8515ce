//! Row-oriented result tables, emitted as CSV (header `inputs,re,im,err,
//! method`) or JSON (array of objects with the same fields).

use std::io::Write;

use serde::{Deserialize, Serialize};
use zetakit::eval::EvalResult;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct Row {
    pub inputs: String,
    pub re: f64,
    pub im: f64,
    pub err: f64,
    pub method: String,
}

impl Row {
    pub fn from_eval(inputs: impl Into<String>, v: &EvalResult) -> Self {
        Row {
            inputs: inputs.into(),
            re: v.value.re,
            im: v.value.im,
            err: v.err,
            method: v.method.as_str().to_string(),
        }
    }

    pub fn plain(inputs: impl Into<String>, re: f64, method: &str) -> Self {
        Row {
            inputs: inputs.into(),
            re,
            im: 0.0,
            err: 0.0,
            method: method.to_string(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn write_rows(out: &mut dyn Write, rows: &[Row], format: Format) -> std::io::Result<()> {
    match format {
        Format::Csv => {
            writeln!(out, "inputs,re,im,err,method")?;
            for r in rows {
                // {:?} prints f64 with round-trip precision
                writeln!(
                    out,
                    "{},{:?},{:?},{:?},{}",
                    csv_field(&r.inputs),
                    r.re,
                    r.im,
                    r.err,
                    csv_field(&r.method)
                )?;
            }
        }
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, rows)?;
            writeln!(out)?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip_bit_exact() {
        let rows = vec![
            Row {
                inputs: "s=2".into(),
                re: std::f64::consts::PI * std::f64::consts::PI / 6.0,
                im: -1.234e-17,
                err: 3.077e-14,
                method: "theta-mellin".into(),
            },
            Row::plain("count q=4 a=1 x=100", 11.0, "sieve"),
        ];
        let mut buf = Vec::new();
        write_rows(&mut buf, &rows, Format::Json).unwrap();
        let back: Vec<Row> = serde_json::from_slice(&buf).unwrap();
        assert_eq!(back, rows);
        for (a, b) in back.iter().zip(&rows) {
            assert_eq!(a.re.to_bits(), b.re.to_bits());
            assert_eq!(a.im.to_bits(), b.im.to_bits());
            assert_eq!(a.err.to_bits(), b.err.to_bits());
        }
    }

    #[test]
    fn csv_escapes_commas() {
        let rows = vec![Row::plain("a,b", 1.0, "m")];
        let mut buf = Vec::new();
        write_rows(&mut buf, &rows, Format::Csv).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.contains("\"a,b\""));
        assert!(text.starts_with("inputs,re,im,err,method\n"));
    }
}
