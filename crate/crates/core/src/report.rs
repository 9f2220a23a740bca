//! Structured experiment reports.

use std::collections::BTreeMap;
use std::fmt::Display;

use serde::Serialize;
use serde_json::Value;

use crate::field::FieldTag;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub experiment: String,
    pub degree: usize,
    pub modulus: Option<u32>,
    pub field: String,
    pub matrix_shape: Option<[usize; 2]>,
    pub rank: Option<usize>,
    pub nullity: Option<usize>,
    pub generators: Vec<String>,
    pub rank_trajectory: Vec<usize>,
    /// One-based positions of the accepted candidates.
    pub accepted_indices: Vec<usize>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub details: BTreeMap<String, Value>,
    pub checks: Vec<Check>,
    /// Named tab-separated tables, written only in TSV output.
    #[serde(skip)]
    pub tables: Vec<(String, String)>,
}

impl Report {
    pub fn new(experiment: &str, degree: usize, field: FieldTag) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            experiment: experiment.to_string(),
            degree,
            modulus: match field {
                FieldTag::Prime(p) => Some(p),
                FieldTag::Rational => None,
            },
            field: match field {
                FieldTag::Prime(_) => "prime".into(),
                FieldTag::Rational => "rational".into(),
            },
            matrix_shape: None,
            rank: None,
            nullity: None,
            generators: Vec::new(),
            rank_trajectory: Vec::new(),
            accepted_indices: Vec::new(),
            details: BTreeMap::new(),
            checks: Vec::new(),
            tables: Vec::new(),
        }
    }

    /// Records a check of `actual` against the expected value.
    pub fn check<T: PartialEq + Display>(&mut self, name: &str, expected: T, actual: T) -> bool {
        let pass = expected == actual;
        self.checks.push(Check {
            name: name.to_string(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            pass,
        });
        pass
    }

    /// Like `check` for values shown through `Debug`, such as lists.
    pub fn check_list<T: PartialEq + std::fmt::Debug>(
        &mut self,
        name: &str,
        expected: &[T],
        actual: &[T],
    ) -> bool {
        let pass = expected == actual;
        self.checks.push(Check {
            name: name.to_string(),
            expected: format!("{expected:?}"),
            actual: format!("{actual:?}"),
            pass,
        });
        pass
    }

    pub fn check_true(&mut self, name: &str, actual: bool) -> bool {
        self.check(name, true, actual)
    }

    pub fn detail(&mut self, key: &str, value: impl Serialize) {
        self.details.insert(
            key.to_string(),
            serde_json::to_value(value).expect("serializable detail"),
        );
    }

    pub fn table(&mut self, name: &str, tsv: String) {
        self.tables.push((name.to_string(), tsv));
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failed_checks(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_tsv(&self) -> String {
        let mut s = String::new();
        let mut line = |k: &str, v: String| {
            s.push_str(k);
            s.push('\t');
            s.push_str(&v);
            s.push('\n');
        };
        let list = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        line("schema_version", self.schema_version.to_string());
        line("experiment", self.experiment.clone());
        line("degree", self.degree.to_string());
        line("field", self.field.clone());
        if let Some(p) = self.modulus {
            line("modulus", p.to_string());
        }
        if let Some([r, c]) = self.matrix_shape {
            line("matrix_shape", format!("{r}x{c}"));
        }
        if let Some(r) = self.rank {
            line("rank", r.to_string());
        }
        if let Some(n) = self.nullity {
            line("nullity", n.to_string());
        }
        if !self.rank_trajectory.is_empty() {
            line("rank_trajectory", list(&self.rank_trajectory));
            line("accepted_indices", list(&self.accepted_indices));
        }
        for g in &self.generators {
            line("generator", g.clone());
        }
        for (k, v) in &self.details {
            line(&format!("detail.{k}"), v.to_string());
        }
        for c in &self.checks {
            line(
                "check",
                format!(
                    "{}\t{}\texpected={}\tactual={}",
                    if c.pass { "pass" } else { "FAIL" },
                    c.name,
                    c.expected,
                    c.actual
                ),
            );
        }
        for (name, t) in &self.tables {
            s.push_str(&format!("\n# {name}\n{t}"));
        }
        s
    }
}
