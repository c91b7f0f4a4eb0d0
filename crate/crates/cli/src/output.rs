use anyhow::Result;
use clap::ValueEnum;
use serde::Serialize;
use serde_json::{Map, Value};
use std::io::Write;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    JsonLines,
    Csv,
}

/// Writes tagged records to stdout. Every record gets a leading `record`
/// field naming its kind.
pub struct Emitter<W: Write> {
    format: Format,
    out: W,
    header: Vec<String>,
}

impl<W: Write> Emitter<W> {
    pub fn new(format: Format, out: W) -> Self {
        Self { format, out, header: Vec::new() }
    }

    pub fn emit<T: Serialize>(&mut self, kind: &str, value: &T) -> Result<()> {
        let mut rec = Map::new();
        rec.insert("record".into(), Value::String(kind.into()));
        match serde_json::to_value(value)? {
            Value::Object(m) => rec.extend(m),
            v => {
                rec.insert("value".into(), v);
            }
        }
        match self.format {
            Format::JsonLines => writeln!(self.out, "{}", Value::Object(rec))?,
            Format::Csv => self.emit_csv(rec)?,
        }
        Ok(())
    }

    fn emit_csv(&mut self, rec: Map<String, Value>) -> Result<()> {
        let mut flat = Vec::new();
        flatten("", &Value::Object(rec), &mut flat);
        let header: Vec<String> = flat.iter().map(|(k, _)| k.clone()).collect();
        let mut w = csv::WriterBuilder::new().flexible(true).from_writer(&mut self.out);
        if header != self.header {
            w.write_record(&header)?;
            self.header = header;
        }
        w.write_record(flat.iter().map(|(_, v)| v))?;
        w.flush()?;
        Ok(())
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&key, x, out);
            }
        }
        Value::Null => out.push((prefix.into(), String::new())),
        Value::String(s) => out.push((prefix.into(), s.clone())),
        Value::Array(_) => out.push((prefix.into(), v.to_string())),
        _ => out.push((prefix.into(), v.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[derive(Serialize)]
    struct R {
        a: u32,
        inner: Inner,
        xs: Vec<i32>,
        s: Option<String>,
    }

    #[derive(Serialize)]
    struct Inner {
        b: bool,
    }

    fn sample() -> R {
        R { a: 1, inner: Inner { b: true }, xs: vec![1, -2], s: None }
    }

    #[test]
    fn json_lines_tagged_in_field_order() {
        let mut buf = Vec::new();
        Emitter::new(Format::JsonLines, &mut buf).emit("demo", &sample()).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "{\"record\":\"demo\",\"a\":1,\"inner\":{\"b\":true},\"xs\":[1,-2],\"s\":null}\n"
        );
    }

    #[test]
    fn csv_flattens_and_repeats_header_only_on_change() {
        let mut buf = Vec::new();
        let mut e = Emitter::new(Format::Csv, &mut buf);
        e.emit("demo", &sample()).unwrap();
        e.emit("demo", &sample()).unwrap();
        e.emit("other", &Inner { b: false }).unwrap();
        drop(e);
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "record,a,inner.b,xs,s");
        assert_eq!(lines[1], "demo,1,true,\"[1,-2]\",");
        assert_eq!(lines[2], lines[1]);
        assert_eq!(lines[3], "record,b");
        assert_eq!(lines.len(), 5);
    }
}
