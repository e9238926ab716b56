//! Table and JSON rendering.

use serde::Serialize;

use crate::Format;

/// Output settings shared by every command.
#[derive(Debug, Clone, Copy)]
pub struct Envelope {
    pub format: Format,
    pub precision: usize,
}

#[derive(Serialize)]
struct Document<'a, T: Serialize> {
    command: &'a str,
    format: &'a str,
    precision: usize,
    payload: &'a T,
}

impl Envelope {
    pub fn new(format: Format, precision: usize) -> Self {
        Envelope { format, precision }
    }

    /// Fixed-precision decimal.
    pub fn num(&self, x: f64) -> String {
        format!("{:.*}", self.precision, x)
    }

    pub fn nums(&self, xs: &[f64]) -> String {
        xs.iter()
            .map(|x| self.num(*x))
            .collect::<Vec<_>>()
            .join(", ")
    }

    /// Renders `payload` as JSON, or calls `table` for the human-readable form.
    pub fn render<T, F>(&self, command: &str, payload: &T, table: F) -> String
    where
        T: Serialize,
        F: FnOnce(&Envelope) -> String,
    {
        match self.format {
            Format::Table => table(self),
            Format::Json => {
                let doc = Document {
                    command,
                    format: "json",
                    precision: self.precision,
                    payload,
                };
                let mut s = serde_json::to_string_pretty(&doc).expect("payloads serialize");
                s.push('\n');
                s
            }
        }
    }
}

/// The first `left` columns are left-aligned, the rest right-aligned.
pub fn table(header: &[&str], left: usize, rows: &[Vec<String>]) -> String {
    let cols = header.len();
    let mut width: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, cell) in width.iter_mut().zip(r) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let mut s = String::new();
        for (c, cell) in cells.iter().enumerate() {
            if c > 0 {
                s.push_str("  ");
            }
            if c < left {
                s.push_str(&format!("{cell:<w$}", w = width[c]));
            } else {
                s.push_str(&format!("{cell:>w$}", w = width[c]));
            }
        }
        s.truncate(s.trim_end().len());
        s.push('\n');
        s
    };
    let mut out = line(header.to_vec());
    for r in rows {
        debug_assert_eq!(r.len(), cols);
        out.push_str(&line(r.iter().map(String::as_str).collect()));
    }
    out
}

/// Two-column `label  value` listing.
pub fn listing(rows: &[(&str, String)]) -> String {
    let w = rows.iter().map(|(l, _)| l.len()).max().unwrap_or(0);
    rows.iter()
        .map(|(l, v)| format!("{l:<w$}  {v}\n"))
        .collect()
}
