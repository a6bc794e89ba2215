//! Line-oriented records and the table view over them.
//!
//! A record is one line of space-separated `key=value` pairs in a fixed
//! field order. Values never contain whitespace; infinity is `inf`.

use std::fmt;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Record {
    fields: Vec<(String, String)>,
}

fn clean(s: &str) -> String {
    s.split_whitespace().collect::<Vec<_>>().join("_")
}

impl Record {
    pub fn new() -> Self {
        Record::default()
    }

    pub fn push(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.fields
            .push((key.to_string(), clean(&value.to_string())));
        self
    }

    pub fn with(mut self, key: &str, value: impl ToString) -> Self {
        self.push(key, value);
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.fields
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    /// Appends every field of `other`.
    pub fn extend(&mut self, other: &Record) {
        self.fields.extend(other.fields.iter().cloned());
    }

    pub fn parse(line: &str) -> Option<Record> {
        let mut r = Record::new();
        for tok in line.split(' ').filter(|t| !t.is_empty()) {
            let (k, v) = tok.split_once('=')?;
            r.fields.push((k.to_string(), v.to_string()));
        }
        Some(r)
    }
}

impl fmt::Display for Record {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (k, v)) in self.fields.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{k}={v}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    Records,
}

/// Aligned columns; a missing field shows as `-`, and a record carrying
/// `skipped=cap` shows `skipped: cap` in its first missing column.
pub fn table(records: &[Record], columns: &[&str]) -> String {
    let rows: Vec<Vec<String>> = records
        .iter()
        .map(|r| {
            let mut marked = false;
            columns
                .iter()
                .map(|c| match r.get(c) {
                    Some(v) => v.to_string(),
                    None if r.get("skipped").is_some() && !marked => {
                        marked = true;
                        format!("skipped: {}", r.get("skipped").unwrap_or("cap"))
                    }
                    None => "-".to_string(),
                })
                .collect()
        })
        .collect();
    let widths: Vec<usize> = columns
        .iter()
        .enumerate()
        .map(|(i, c)| {
            rows.iter()
                .map(|r| r[i].len())
                .max()
                .unwrap_or(0)
                .max(c.len())
        })
        .collect();
    let line = |cells: Vec<&str>| {
        cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
    };
    let mut out = line(columns.to_vec());
    out.push('\n');
    for r in &rows {
        out.push_str(&line(r.iter().map(String::as_str).collect()));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let r = Record::new().with("group", "sym(4)").with("sigma", "a b");
        assert_eq!(r.to_string(), "group=sym(4) sigma=a_b");
        assert_eq!(Record::parse(&r.to_string()), Some(r));
        assert_eq!(Record::parse("novalue"), None);
    }

    #[test]
    fn table_marks_skips() {
        let a = Record::new().with("group", "x").with("sigma", 4);
        let b = Record::new().with("group", "y").with("skipped", "cap");
        let t = table(&[a, b], &["group", "sigma", "gamma"]);
        assert_eq!(
            t,
            "group  sigma         gamma\nx      4             -\ny      skipped: cap  -\n"
        );
    }
}
