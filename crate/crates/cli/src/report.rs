use std::time::Instant;

use serde::Serialize;
use serde_json::{Map, Value};

pub const SCHEMA: &str = "1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Serialize)]
pub struct Verdict {
    pub name: String,
    pub pass: bool,
    pub measured: Value,
    pub tolerance: Value,
}

/// Everything one command run produced. Serialized field order is fixed and
/// all maps are key-sorted, so equal runs give equal bytes outside `timing`.
#[derive(Debug, Serialize)]
pub struct RunReport {
    schema: &'static str,
    pub command: String,
    pub inputs: Map<String, Value>,
    pub results: Map<String, Value>,
    pub verdicts: Vec<Verdict>,
    timing: Map<String, Value>,
    #[serde(skip)]
    text: Vec<String>,
    #[serde(skip)]
    phase_start: Option<(String, Instant)>,
}

impl RunReport {
    pub fn new(command: impl Into<String>) -> Self {
        Self {
            schema: SCHEMA,
            command: command.into(),
            inputs: Map::new(),
            results: Map::new(),
            verdicts: Vec::new(),
            timing: Map::new(),
            text: Vec::new(),
            phase_start: None,
        }
    }

    pub fn input(&mut self, key: &str, value: impl Serialize) {
        self.inputs.insert(key.into(), to_value(value));
    }

    pub fn result(&mut self, key: &str, value: impl Serialize) {
        self.results.insert(key.into(), to_value(value));
    }

    pub fn verdict(&mut self, name: &str, pass: bool, measured: impl Serialize, tolerance: impl Serialize) {
        self.line(format!(
            "{} {name}: measured {}, tolerance {}",
            if pass { "PASS" } else { "FAIL" },
            to_value(&measured),
            to_value(&tolerance)
        ));
        self.verdicts.push(Verdict {
            name: name.into(),
            pass,
            measured: to_value(measured),
            tolerance: to_value(tolerance),
        });
    }

    /// A line of human-readable output.
    pub fn line(&mut self, line: impl Into<String>) {
        self.text.push(line.into());
    }

    /// Starts timing a named phase, closing any open one.
    pub fn phase(&mut self, name: &str) {
        self.end_phase();
        self.phase_start = Some((name.into(), Instant::now()));
    }

    fn end_phase(&mut self) {
        if let Some((name, start)) = self.phase_start.take() {
            let ms = start.elapsed().as_secs_f64() * 1e3;
            self.timing.insert(format!("{name}_ms"), to_value(ms));
        }
    }

    pub fn all_pass(&self) -> bool {
        self.verdicts.iter().all(|v| v.pass)
    }

    pub fn render(&mut self, format: Format) -> String {
        self.end_phase();
        match format {
            Format::Text => {
                let mut out = self.text.join("\n");
                out.push('\n');
                out
            }
            Format::Json => {
                let mut out = serde_json::to_string_pretty(self).expect("report is serializable");
                out.push('\n');
                out
            }
        }
    }
}

fn to_value(v: impl Serialize) -> Value {
    serde_json::to_value(v).expect("report values are serializable")
}
