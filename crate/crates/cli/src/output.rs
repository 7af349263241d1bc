use invsq_core::config::fmt_f64;
use invsq_core::{OutputFormat, SolverConfig};
use serde_json::{Map, Value};

use crate::Failure;

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Int(usize),
    Bool(bool),
    Text(String),
    Empty,
}

impl Cell {
    pub fn opt(v: Option<f64>) -> Cell {
        v.map_or(Cell::Empty, Cell::Num)
    }

    fn csv(&self) -> String {
        match self {
            Cell::Num(v) => fmt_f64(*v),
            Cell::Int(v) => v.to_string(),
            Cell::Bool(v) => v.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Num(v) => serde_json::Number::from_f64(*v).map_or(Value::Null, Value::Number),
            Cell::Int(v) => Value::from(*v),
            Cell::Bool(v) => Value::Bool(*v),
            Cell::Text(s) => Value::String(s.clone()),
            Cell::Empty => Value::Null,
        }
    }
}

/// Rows of one command's output plus everything needed to reproduce them.
pub struct Table {
    pub command: &'static str,
    pub config: SolverConfig,
    /// sweep settings that live outside [`SolverConfig`]
    pub extra: Vec<(&'static str, String)>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(command: &'static str, config: SolverConfig, columns: &[&str]) -> Self {
        Self {
            command,
            config,
            extra: Vec::new(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn render(&self) -> Result<String, Failure> {
        match self.config.output_format {
            OutputFormat::Csv => self.csv(),
            OutputFormat::Json => self.json(),
        }
    }

    fn header(&self) -> String {
        let mut line = format!("# invsq {} {}", env!("CARGO_PKG_VERSION"), self.command);
        for (k, v) in self
            .config
            .key_values()
            .into_iter()
            .chain(self.extra.iter().cloned())
        {
            line.push_str(&format!(" {k}={v}"));
        }
        line.push('\n');
        line
    }

    fn csv(&self) -> Result<String, Failure> {
        let io = |e: csv::Error| Failure::Compute(format!("CSV output: {e}"));
        let mut writer = csv::WriterBuilder::new().from_writer(Vec::new());
        writer.write_record(&self.columns).map_err(io)?;
        for row in &self.rows {
            writer.write_record(row.iter().map(Cell::csv)).map_err(io)?;
        }
        let body = writer
            .into_inner()
            .map_err(|e| Failure::Compute(format!("CSV output: {e}")))?;
        let body = String::from_utf8(body).map_err(|e| Failure::Compute(e.to_string()))?;
        Ok(self.header() + &body)
    }

    fn json(&self) -> Result<String, Failure> {
        let mut config = Map::new();
        config.insert("version".into(), Value::from(env!("CARGO_PKG_VERSION")));
        config.insert("command".into(), Value::from(self.command));
        let solver =
            serde_json::to_value(self.config).map_err(|e| Failure::Compute(e.to_string()))?;
        if let Value::Object(fields) = solver {
            config.extend(fields);
        }
        for (k, v) in &self.extra {
            config.insert((*k).into(), Value::from(v.as_str()));
        }
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> = self
                    .columns
                    .iter()
                    .cloned()
                    .zip(row.iter().map(Cell::json))
                    .collect();
                Value::Object(obj)
            })
            .collect();
        let mut top = Map::new();
        top.insert("config".into(), Value::Object(config));
        top.insert("rows".into(), Value::Array(rows));
        let mut text = serde_json::to_string_pretty(&Value::Object(top))
            .map_err(|e| Failure::Compute(e.to_string()))?;
        text.push('\n');
        Ok(text)
    }
}

pub fn join(values: &[f64]) -> String {
    values
        .iter()
        .map(|v| fmt_f64(*v))
        .collect::<Vec<_>>()
        .join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(format: OutputFormat) -> Table {
        let config = SolverConfig {
            output_format: format,
            ..SolverConfig::default()
        };
        let mut t = Table::new("test", config, &["x", "label", "missing"]);
        t.push(vec![Cell::Num(0.1), Cell::Text("a,b".into()), Cell::Empty]);
        t
    }

    #[test]
    fn csv_layout() {
        let text = table(OutputFormat::Csv).render().unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert!(lines[0].starts_with("# invsq "));
        assert!(lines[0].contains(" n_max=400"));
        assert_eq!(lines[1], "x,label,missing");
        assert_eq!(lines[2], "1.0000000000000001e-1,\"a,b\",");
        assert_eq!(
            lines[2].split(',').next().unwrap().parse::<f64>().unwrap(),
            0.1
        );
    }

    #[test]
    fn json_layout() {
        let text = table(OutputFormat::Json).render().unwrap();
        let v: Value = serde_json::from_str(&text).unwrap();
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        assert_eq!(keys, ["config", "rows"]);
        assert_eq!(v["rows"][0]["x"], 0.1);
        assert!(v["rows"][0]["missing"].is_null());
        assert_eq!(v["config"]["n_max"], 400);
    }
}
