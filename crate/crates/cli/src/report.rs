//! Reports shared by every subcommand, rendered as text or JSON.

use std::fmt::Write as _;

use doublelift::LawReport;
use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub law: String,
    pub passed: bool,
    pub witness: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Section {
    pub structure: String,
    pub checks: Vec<Check>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Fact {
    pub name: String,
    pub value: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub subject: String,
    pub sections: Vec<Section>,
    pub facts: Vec<Fact>,
    pub passed: bool,
}

impl Report {
    pub fn new(command: &str, subject: impl Into<String>) -> Self {
        Report { command: command.into(), subject: subject.into(), sections: vec![], facts: vec![], passed: true }
    }

    pub fn laws(&mut self, r: &LawReport) {
        let checks: Vec<Check> = r
            .checks
            .iter()
            .map(|c| Check { law: c.law.clone(), passed: c.passed(), witness: c.witness.clone() })
            .collect();
        self.passed &= checks.iter().all(|c| c.passed);
        self.sections.push(Section { structure: r.structure.clone(), checks });
    }

    pub fn fact(&mut self, name: &str, value: impl Into<Value>) {
        self.facts.push(Fact { name: name.into(), value: value.into() });
    }

    pub fn fact_value(&self, name: &str) -> Option<&Value> {
        self.facts.iter().find(|f| f.name == name).map(|f| &f.value)
    }

    /// `(structure, law, witness)` of the first failing check.
    pub fn first_failure(&self) -> Option<(&str, &Check)> {
        self.sections
            .iter()
            .find_map(|s| s.checks.iter().find(|c| !c.passed).map(|c| (s.structure.as_str(), c)))
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.command, self.subject);
        for s in &self.sections {
            let _ = writeln!(out, "{}:", s.structure);
            for c in &s.checks {
                match &c.witness {
                    None => {
                        let _ = writeln!(out, "  pass  {}", c.law);
                    }
                    Some(w) => {
                        let _ = writeln!(out, "  FAIL  {} at {:?}", c.law, w);
                    }
                }
            }
        }
        for f in &self.facts {
            let v = match &f.value {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            let _ = writeln!(out, "{}: {}", f.name, v);
        }
        let _ = writeln!(out, "passed: {}", self.passed);
        out
    }

    pub fn render_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }
}
