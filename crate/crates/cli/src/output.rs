//! CSV output: `#` comment lines (provenance and input echo), a header row
//! with units, then data rows.

use std::io::Write;
use std::path::Path;

use crate::error::{CliError, CliResult};

/// Shortest decimal that round-trips to the same `f64`; exponent form
/// outside `[1e-4, 1e15)`.
pub fn format_number(x: f64) -> String {
    if x == 0.0 {
        return if x.is_sign_negative() {
            "-0".into()
        } else {
            "0".into()
        };
    }
    if !x.is_finite() {
        return if x.is_nan() {
            "nan".into()
        } else if x > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        };
    }
    let a = x.abs();
    if (1e-4..1e15).contains(&a) {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

#[derive(Debug, Clone)]
pub struct Table {
    pub comments: Vec<String>,
    pub header: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Self {
            comments: Vec::new(),
            header: header.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn comment(&mut self, text: &str) {
        for line in text.lines() {
            self.comments.push(line.to_string());
        }
    }

    pub fn push(&mut self, row: Vec<f64>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let mut buf = Vec::new();
        for c in &self.comments {
            if c.is_empty() {
                buf.extend_from_slice(b"#\n");
            } else {
                writeln!(buf, "# {c}").expect("writing to memory");
            }
        }
        {
            let mut w = csv::WriterBuilder::new()
                .terminator(csv::Terminator::Any(b'\n'))
                .from_writer(&mut buf);
            w.write_record(&self.header).expect("writing to memory");
            for row in &self.rows {
                w.write_record(row.iter().map(|&v| format_number(v)))
                    .expect("writing to memory");
            }
            w.flush().expect("writing to memory");
        }
        buf
    }

    /// Writes to `path`, or to stdout when `path` is `None`.
    pub fn emit(&self, path: Option<&Path>) -> CliResult<()> {
        let bytes = self.to_bytes();
        match path {
            Some(p) => std::fs::write(p, bytes)
                .map_err(|e| CliError::Io(format!("cannot write {}: {e}", p.display()))),
            None => std::io::stdout()
                .write_all(&bytes)
                .map_err(|e| CliError::Io(format!("cannot write to stdout: {e}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn number_format_round_trips() {
        assert_eq!(format_number(80.0), "80");
        assert_eq!(format_number(1.75), "1.75");
        assert_eq!(format_number(0.1 + 0.2), "0.30000000000000004");
        assert_eq!(format_number(1e-5), "1e-5");
        assert_eq!(format_number(6.02e23), "6.02e23");
        assert_eq!(format_number(f64::NEG_INFINITY), "-inf");
        for x in [
            1.234_567_890_123_456_7e-300,
            3.3e-4,
            12345.678,
            9.99e14,
            1e15,
        ] {
            assert_eq!(format_number(x).parse::<f64>().unwrap(), x);
        }
    }

    #[test]
    fn layout() {
        let mut t = Table::new(&["a_m", "b"]);
        t.comment("first\nsecond");
        t.push(vec![1.0, 0.5]);
        assert_eq!(
            String::from_utf8(t.to_bytes()).unwrap(),
            "# first\n# second\na_m,b\n1,0.5\n"
        );
    }
}
