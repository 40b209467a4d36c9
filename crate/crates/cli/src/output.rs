use std::io::{self, Write};

use clap::ValueEnum;
use num_complex::Complex64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Int(u64),
    Bool(bool),
    Text(String),
    Null,
}

impl Cell {
    pub fn opt(x: Option<f64>) -> Cell {
        x.map_or(Cell::Null, Cell::Num)
    }

    fn json(&self) -> String {
        match self {
            Cell::Num(x) => number(*x),
            Cell::Int(n) => n.to_string(),
            Cell::Bool(b) => b.to_string(),
            Cell::Text(s) => serde_json::to_string(s).expect("strings serialize"),
            Cell::Null => "null".into(),
        }
    }

    fn plain(&self) -> String {
        match self {
            Cell::Text(s) => s.clone(),
            Cell::Null => String::new(),
            other => other.json(),
        }
    }
}

/// Shortest decimal form that parses back to the same double; the same
/// string is used by every format.
pub fn number(x: f64) -> String {
    if x.is_finite() {
        serde_json::to_string(&x).expect("finite floats serialize")
    } else {
        "null".into()
    }
}

pub fn complex_text(w: Complex64) -> String {
    if w.im == 0.0 {
        number(w.re)
    } else {
        let im = number(w.im);
        let sign = if im.starts_with('-') { "" } else { "+" };
        format!("{}{sign}{im}i", number(w.re))
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

const TEXT_WIDTH: usize = 24;

/// Writes records as they are produced: a JSON array, CSV with a header
/// row, or whitespace-aligned text.
pub struct Emitter<W: Write> {
    out: W,
    format: Format,
    columns: Vec<&'static str>,
    rows: usize,
}

impl<W: Write> Emitter<W> {
    pub fn new(out: W, format: Format, columns: Vec<&'static str>) -> io::Result<Self> {
        let mut e = Self { out, format, columns, rows: 0 };
        match format {
            Format::Json => {}
            Format::Csv => writeln!(e.out, "{}", e.columns.join(","))?,
            Format::Text => {
                let header: Vec<String> = e.columns.iter().map(|c| format!("{c:<TEXT_WIDTH$}")).collect();
                writeln!(e.out, "{}", header.join(" ").trim_end())?;
            }
        }
        Ok(e)
    }

    pub fn row(&mut self, cells: &[Cell]) -> io::Result<()> {
        debug_assert_eq!(cells.len(), self.columns.len());
        match self.format {
            Format::Json => {
                let fields: Vec<String> = self
                    .columns
                    .iter()
                    .zip(cells)
                    .map(|(k, v)| format!("\"{k}\":{}", v.json()))
                    .collect();
                let lead = if self.rows == 0 { "[\n" } else { ",\n" };
                write!(self.out, "{lead}  {{{}}}", fields.join(","))?;
            }
            Format::Csv => {
                let fields: Vec<String> = cells.iter().map(|c| csv_field(&c.plain())).collect();
                writeln!(self.out, "{}", fields.join(","))?;
            }
            Format::Text => {
                let fields: Vec<String> = cells.iter().map(|c| format!("{:<TEXT_WIDTH$}", c.plain())).collect();
                writeln!(self.out, "{}", fields.join(" ").trim_end())?;
            }
        }
        self.rows += 1;
        self.out.flush()
    }

    pub fn finish(mut self) -> io::Result<()> {
        if self.format == Format::Json {
            let tail = if self.rows == 0 { "[]\n" } else { "\n]\n" };
            write!(self.out, "{tail}")?;
        }
        self.out.flush()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn render(format: Format) -> String {
        let mut buf = Vec::new();
        let mut e = Emitter::new(&mut buf, format, vec!["name", "x"]).unwrap();
        e.row(&[Cell::Text("a,b".into()), Cell::Num(0.1)]).unwrap();
        e.row(&[Cell::Text("c".into()), Cell::Null]).unwrap();
        e.finish().unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn json_is_one_array() {
        let v: serde_json::Value = serde_json::from_str(&render(Format::Json)).unwrap();
        assert_eq!(v.as_array().unwrap().len(), 2);
        assert_eq!(v[0]["x"], 0.1);
        assert!(v[1]["x"].is_null());
    }

    #[test]
    fn csv_quotes_commas() {
        assert_eq!(render(Format::Csv), "name,x\n\"a,b\",0.1\nc,\n");
    }

    #[test]
    fn empty_json_array() {
        let mut buf = Vec::new();
        Emitter::new(&mut buf, Format::Json, vec!["x"]).unwrap().finish().unwrap();
        assert_eq!(buf, b"[]\n");
    }

    #[test]
    fn numbers_round_trip() {
        for x in [1.0, 0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, f64::MIN_POSITIVE] {
            assert_eq!(number(x).parse::<f64>().unwrap().to_bits(), x.to_bits());
        }
        assert_eq!(number(1.0), "1.0");
        assert_eq!(complex_text(Complex64::new(0.5, -2.0)), "0.5-2.0i");
    }
}
