//! Rendering of value tables as plain text, CSV and JSON.

use clap::ValueEnum;
use serde_json::{Map, Value as Json};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Plain,
    Csv,
    Json,
}

/// Rows of integer parameters, each with its value in canonical text form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<(Vec<i64>, String)>,
}

impl Table {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Plain => self.plain(),
            Format::Csv => self.csv(),
            Format::Json => self.json(),
        }
    }

    fn plain(&self) -> String {
        let mut out = String::new();
        if !self.columns.is_empty() {
            out.push_str(&self.columns.join("\t"));
            out.push_str("\tvalue\n");
        }
        for (params, value) in &self.rows {
            for p in params {
                out.push_str(&p.to_string());
                out.push('\t');
            }
            out.push_str(value);
            out.push('\n');
        }
        out
    }

    fn csv(&self) -> String {
        let mut writer = csv::Writer::from_writer(Vec::new());
        let header = self.columns.iter().copied().chain(std::iter::once("value"));
        writer.write_record(header).expect("in-memory write");
        for (params, value) in &self.rows {
            let record = params
                .iter()
                .map(|p| p.to_string())
                .chain(std::iter::once(value.clone()));
            writer.write_record(record).expect("in-memory write");
        }
        let bytes = writer.into_inner().expect("in-memory flush");
        String::from_utf8(bytes).expect("csv output is UTF-8")
    }

    fn json(&self) -> String {
        let rows: Vec<Json> = self
            .rows
            .iter()
            .map(|(params, value)| {
                let mut obj = Map::new();
                for (name, p) in self.columns.iter().zip(params) {
                    obj.insert((*name).to_string(), Json::from(*p));
                }
                obj.insert("value".into(), Json::from(value.as_str()));
                Json::Object(obj)
            })
            .collect();
        let mut text = serde_json::to_string_pretty(&rows).expect("JSON of strings and integers");
        text.push('\n');
        text
    }
}
