//! Tables, JSON and atomic file output.

use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use serde::Serialize;

use crate::args::Format;

/// Rows of strings under a header. Emitted as TSV, or as a JSON list of
/// objects keyed by the header.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: Into<String>>(header: impl IntoIterator<Item = S>) -> Self {
        Table {
            header: header.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push<S: ToString>(&mut self, row: impl IntoIterator<Item = S>) {
        let row: Vec<String> = row.into_iter().map(|x| x.to_string()).collect();
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    /// Header line first; tabs and newlines inside cells become spaces.
    pub fn to_tsv(&self) -> String {
        let clean = |s: &String| s.replace(['\t', '\n'], " ");
        let mut out = String::new();
        for line in std::iter::once(&self.header).chain(&self.rows) {
            out.push_str(&line.iter().map(clean).collect::<Vec<_>>().join("\t"));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = self
            .rows
            .iter()
            .map(|r| {
                let m: serde_json::Map<String, serde_json::Value> = self
                    .header
                    .iter()
                    .cloned()
                    .zip(r.iter().map(|x| serde_json::Value::String(x.clone())))
                    .collect();
                serde_json::Value::Object(m)
            })
            .collect();
        serde_json::Value::Array(rows)
    }
}

/// What a command produced.
#[derive(Clone, Debug)]
pub struct Output {
    /// File stem used under `--out-dir`.
    pub name: String,
    pub json: serde_json::Value,
    pub table: Table,
    pub svg: Option<String>,
    /// False when a check the command ran did not pass.
    pub holds: bool,
}

impl Output {
    pub fn new<T: Serialize>(name: &str, report: &T, table: Table, holds: bool) -> Result<Self> {
        Ok(Output {
            name: name.into(),
            json: serde_json::to_value(report).context("serializing report")?,
            table,
            svg: None,
            holds,
        })
    }

    pub fn render(&self, format: Format) -> Result<String> {
        Ok(match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json)?;
                s.push('\n');
                s
            }
            Format::Tsv => self.table.to_tsv(),
            Format::Svg => match &self.svg {
                Some(s) => s.clone(),
                None => bail!("{} has no svg rendering", self.name),
            },
        })
    }
}

/// Writes through a temporary file in the target directory and renames it
/// into place, so readers never see a partial file.
pub fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d.to_path_buf(),
        _ => PathBuf::from("."),
    };
    std::fs::create_dir_all(&dir).with_context(|| format!("creating {}", dir.display()))?;
    let mut tmp = tempfile::NamedTempFile::new_in(&dir).with_context(|| format!("temporary file in {}", dir.display()))?;
    tmp.write_all(contents.as_bytes())?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

/// Where the output goes: --out, else <out-dir>/<name>.<ext>, else stdout.
pub fn destination(out: Option<&Path>, out_dir: Option<&Path>, name: &str, format: Format) -> Option<PathBuf> {
    match (out, out_dir) {
        (Some(p), _) => Some(p.to_path_buf()),
        (None, Some(d)) => Some(d.join(format!("{name}.{}", format.extension()))),
        (None, None) => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_rows_give_header_only() {
        let t = Table::new(["degree", "rank"]);
        assert_eq!(t.to_tsv(), "degree\trank\n");
        assert_eq!(t.to_json(), serde_json::json!([]));
    }

    #[test]
    fn cells_are_sanitized() {
        let mut t = Table::new(["a"]);
        t.push(["x\ty"]);
        assert_eq!(t.to_tsv(), "a\nx y\n");
    }

    #[test]
    fn atomic_write_replaces() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("sub/out.txt");
        write_atomic(&p, "one").unwrap();
        write_atomic(&p, "two").unwrap();
        assert_eq!(std::fs::read_to_string(&p).unwrap(), "two");
        assert_eq!(std::fs::read_dir(p.parent().unwrap()).unwrap().count(), 1);
    }
}
