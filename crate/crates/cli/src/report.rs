//! Output sections rendered as aligned text or CSV.

use std::io::{self, Write};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Csv,
}

pub enum Section {
    Fields(Vec<(String, String)>),
    Table { title: String, headers: Vec<String>, rows: Vec<Vec<String>> },
}

#[derive(Default)]
pub struct Report {
    sections: Vec<Section>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn field(&mut self, key: &str, value: impl ToString) -> &mut Self {
        match self.sections.last_mut() {
            Some(Section::Fields(f)) => f.push((key.into(), value.to_string())),
            _ => self.sections.push(Section::Fields(vec![(key.into(), value.to_string())])),
        }
        self
    }

    pub fn table(&mut self, title: &str, headers: &[&str], rows: Vec<Vec<String>>) -> &mut Self {
        self.sections.push(Section::Table {
            title: title.into(),
            headers: headers.iter().map(|h| h.to_string()).collect(),
            rows,
        });
        self
    }

    pub fn write(&self, format: Format, out: &mut impl Write) -> io::Result<()> {
        for (i, section) in self.sections.iter().enumerate() {
            if i > 0 {
                writeln!(out)?;
            }
            match format {
                Format::Text => write_text(section, out)?,
                Format::Csv => write_csv(section, out)?,
            }
        }
        Ok(())
    }
}

fn write_text(section: &Section, out: &mut impl Write) -> io::Result<()> {
    match section {
        Section::Fields(fields) => {
            let width = fields.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
            for (k, v) in fields {
                writeln!(out, "{k:<width$}  {v}")?;
            }
        }
        Section::Table { title, headers, rows } => {
            writeln!(out, "{title}")?;
            let mut widths: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
            for row in rows {
                for (w, cell) in widths.iter_mut().zip(row) {
                    *w = (*w).max(cell.chars().count());
                }
            }
            // numbers right-aligned, anything else left-aligned
            let numeric: Vec<bool> = (0..headers.len())
                .map(|i| rows.iter().all(|r| r.get(i).map_or(true, |c| c == "-" || c.parse::<i64>().is_ok())))
                .collect();
            let line = |cells: &[String]| {
                cells
                    .iter()
                    .zip(&widths)
                    .zip(&numeric)
                    .map(|((c, &w), &num)| if num { format!("{c:>w$}") } else { format!("{c:<w$}") })
                    .collect::<Vec<_>>()
                    .join("  ")
            };
            writeln!(out, "{}", line(headers).trim_end())?;
            for row in rows {
                writeln!(out, "{}", line(row).trim_end())?;
            }
        }
    }
    Ok(())
}

fn write_csv(section: &Section, out: &mut impl Write) -> io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    match section {
        Section::Fields(fields) => {
            w.write_record(["key", "value"])?;
            for (k, v) in fields {
                w.write_record([k, v])?;
            }
        }
        Section::Table { headers, rows, .. } => {
            w.write_record(headers)?;
            for row in rows {
                w.write_record(row)?;
            }
        }
    }
    w.flush()
}
