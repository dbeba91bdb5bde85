use std::collections::BTreeMap;
use std::fmt::Write;

use clap::ValueEnum;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Aligned columns.
    Text,
    /// One `key=value` record per line.
    Records,
    /// Tab-separated values with a header line.
    Tsv,
}

/// A homogeneous list of records with named columns.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: Into<String>>(headers: impl IntoIterator<Item = S>) -> Self {
        Table {
            headers: headers.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push<S: ToString>(&mut self, row: impl IntoIterator<Item = S>) {
        let row: Vec<String> = row.into_iter().map(|c| c.to_string()).collect();
        assert_eq!(row.len(), self.headers.len(), "row width does not match the header");
        self.rows.push(row);
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.render_text(),
            Format::Records => self.render_records(),
            Format::Tsv => self.render_tsv(),
        }
    }

    fn render_text(&self) -> String {
        let mut widths: Vec<usize> = self.headers.iter().map(|h| h.chars().count()).collect();
        for row in &self.rows {
            for (w, c) in widths.iter_mut().zip(row) {
                *w = (*w).max(c.chars().count());
            }
        }
        let mut out = String::new();
        let line = |out: &mut String, cells: &[String]| {
            let mut s = String::new();
            for (i, (c, w)) in cells.iter().zip(&widths).enumerate() {
                if i > 0 {
                    s.push_str("  ");
                }
                s.push_str(c);
                if i + 1 < cells.len() {
                    s.extend(std::iter::repeat_n(' ', w - c.chars().count()));
                }
            }
            out.push_str(s.trim_end());
            out.push('\n');
        };
        line(&mut out, &self.headers);
        for row in &self.rows {
            line(&mut out, row);
        }
        out
    }

    fn render_tsv(&self) -> String {
        let mut out = self.headers.join("\t");
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.join("\t"));
            out.push('\n');
        }
        out
    }

    fn render_records(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let fields: Vec<String> = self
                .headers
                .iter()
                .zip(row)
                .map(|(k, v)| format!("{}={}", k, quote(v)))
                .collect();
            writeln!(out, "{}", fields.join(" ")).unwrap();
        }
        out
    }
}

fn quote(v: &str) -> String {
    if !v.is_empty() && !v.chars().any(|c| c.is_whitespace() || c == '"' || c == '\\') {
        return v.to_string();
    }
    let mut s = String::from("\"");
    for c in v.chars() {
        if c == '"' || c == '\\' {
            s.push('\\');
        }
        s.push(c);
    }
    s.push('"');
    s
}

/// Parses output of the records format back into key/value maps.
pub fn parse_records(text: &str) -> Result<Vec<BTreeMap<String, String>>, String> {
    let mut out = Vec::new();
    for line in text.lines().filter(|l| !l.trim().is_empty()) {
        let mut rec = BTreeMap::new();
        let mut chars = line.chars().peekable();
        loop {
            while chars.peek().is_some_and(|c| c.is_whitespace()) {
                chars.next();
            }
            if chars.peek().is_none() {
                break;
            }
            let key: String = chars.by_ref().take_while(|&c| c != '=').collect();
            let mut value = String::new();
            if chars.peek() == Some(&'"') {
                chars.next();
                loop {
                    match chars.next() {
                        Some('\\') => value.push(chars.next().ok_or("dangling escape")?),
                        Some('"') => break,
                        Some(c) => value.push(c),
                        None => return Err(format!("unterminated quote in {:?}", line)),
                    }
                }
            } else {
                while let Some(&c) = chars.peek() {
                    if c.is_whitespace() {
                        break;
                    }
                    value.push(c);
                    chars.next();
                }
            }
            if key.is_empty() {
                return Err(format!("missing key in {:?}", line));
            }
            rec.insert(key, value);
        }
        out.push(rec);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_table_is_header_only() {
        let t = Table::new(["v1", "H"]);
        assert_eq!(t.render(Format::Text), "v1  H\n");
        assert_eq!(t.render(Format::Tsv), "v1\tH\n");
        assert_eq!(t.render(Format::Records), "");
    }

    #[test]
    fn text_alignment() {
        let mut t = Table::new(["a", "bbb"]);
        t.push(["1/2", "x"]);
        t.push(["-10", "yy"]);
        assert_eq!(t.render(Format::Text), "a    bbb\n1/2  x\n-10  yy\n");
    }

    #[test]
    fn records_roundtrip() {
        let mut t = Table::new(["rule", "point", "detail"]);
        t.push(["duality", "(1/2,-3)", "H(-v) = 2, \"H(v)\" + |v| = 3"]);
        t.push(["x", "", "a\\b"]);
        let parsed = parse_records(&t.render(Format::Records)).unwrap();
        assert_eq!(parsed.len(), 2);
        for (rec, row) in parsed.iter().zip(&t.rows) {
            for (k, v) in t.headers.iter().zip(row) {
                assert_eq!(&rec[k], v);
            }
        }
    }
}
