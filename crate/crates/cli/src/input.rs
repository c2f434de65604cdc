//! The JSON ring description.

use std::fs;
use std::path::Path;

use mhproj::ring::DEFAULT_EXPONENT_BOX;
use mhproj::RingSpec;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    pub grading_rank: usize,
    /// One column per variable, each of length `grading_rank`.
    pub degrees: Vec<Vec<i64>>,
    #[serde(default)]
    pub names: Option<Vec<String>>,
    #[serde(default)]
    pub options: Options,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Options {
    pub exponent_box: u32,
    pub veronese_bound: usize,
    pub ray_multiple_bound: u32,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            exponent_box: DEFAULT_EXPONENT_BOX,
            veronese_bound: 6,
            ray_multiple_bound: mhproj::git::DEFAULT_RAY_MULTIPLE_BOUND,
        }
    }
}

impl InputDocument {
    pub fn read(path: &Path) -> Result<Self, CliError> {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        Self::parse(&text).map_err(|e| match e {
            CliError::Input(msg) => {
                // `file:line:col: message` for syntax errors
                let sep = if msg.starts_with(|c: char| c.is_ascii_digit()) { ":" } else { ": " };
                CliError::Input(format!("{}{sep}{msg}", path.display()))
            },
            other => other,
        })
    }

    /// Parse and validate. Diagnostics carry `line:column` for syntax errors
    /// and a field path for shape errors.
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let doc: InputDocument = serde_json::from_str(text)
            .map_err(|e| CliError::Input(format!("{}:{}: {}", e.line(), e.column(), strip_position(&e))))?;
        doc.validate()?;
        Ok(doc)
    }

    fn validate(&self) -> Result<(), CliError> {
        let field = |f: String| Err(CliError::Input(f));
        if self.grading_rank == 0 {
            return field("grading_rank: must be at least 1".into());
        }
        if self.degrees.is_empty() {
            return field("degrees: at least one variable is required".into());
        }
        for (i, col) in self.degrees.iter().enumerate() {
            if col.len() != self.grading_rank {
                return field(format!(
                    "degrees[{i}]: expected {} entries, found {}",
                    self.grading_rank,
                    col.len()
                ));
            }
        }
        if let Some(names) = &self.names {
            if names.len() != self.degrees.len() {
                return field(format!(
                    "names: expected {} names, found {}",
                    self.degrees.len(),
                    names.len()
                ));
            }
        }
        let o = &self.options;
        if o.exponent_box == 0 {
            return field("options.exponent_box: must be at least 1".into());
        }
        if o.veronese_bound == 0 {
            return field("options.veronese_bound: must be at least 1".into());
        }
        if o.ray_multiple_bound == 0 {
            return field("options.ray_multiple_bound: must be at least 1".into());
        }
        Ok(())
    }

    pub fn ring(&self) -> Result<RingSpec, CliError> {
        RingSpec::new(self.grading_rank, self.degrees.clone(), self.names.clone()).map_err(|e| match e {
            mhproj::Error::ZeroDegree { index, name } => CliError::Input(format!(
                "degrees[{index}]: variable {name} has degree zero; the standing assumption A_0 = k \
                 (no nonconstant invariants) requires every degree to be nonzero"
            )),
            other => CliError::Input(other.to_string()),
        })
    }
}

fn strip_position(e: &serde_json::Error) -> String {
    let s = e.to_string();
    match s.rfind(" at line ") {
        Some(i) => s[..i].to_string(),
        None => s,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_fill_in() {
        let doc = InputDocument::parse(r#"{"grading_rank": 1, "degrees": [[1], [2]]}"#).unwrap();
        assert_eq!(doc.options, Options::default());
        assert_eq!(doc.options.exponent_box, 12);
        assert_eq!(doc.options.veronese_bound, 6);
        assert_eq!(doc.options.ray_multiple_bound, 24);
        assert_eq!(doc.ring().unwrap().names(), &["x1".to_string(), "x2".to_string()]);
    }

    #[test]
    fn syntax_errors_have_positions() {
        let err = InputDocument::parse("{\n  \"grading_rank\": 1,\n  \"degrees\": [[1],]\n}").unwrap_err();
        let CliError::Input(msg) = err else { panic!() };
        assert!(msg.starts_with("3:"), "{msg}");
    }

    #[test]
    fn shape_errors_name_the_field() {
        let err = InputDocument::parse(r#"{"grading_rank": 2, "degrees": [[1, 0], [1]]}"#).unwrap_err();
        assert_eq!(err, CliError::Input("degrees[1]: expected 2 entries, found 1".into()));
        let err = InputDocument::parse(r#"{"grading_rank": 1, "degrees": [[1]], "names": ["a", "b"]}"#).unwrap_err();
        assert!(matches!(err, CliError::Input(m) if m.contains("names")));
        let err = InputDocument::parse(r#"{"grading_rank": 1, "degrees": [[1]], "options": {"exponent_box": 0}}"#)
            .unwrap_err();
        assert!(matches!(err, CliError::Input(m) if m.contains("exponent_box")));
        let err = InputDocument::parse(r#"{"grading_rank": 1, "degrees": [[1]], "extra": 1}"#).unwrap_err();
        assert!(matches!(err, CliError::Input(m) if m.contains("extra")));
    }

    #[test]
    fn zero_degree_is_an_input_error() {
        let doc = InputDocument::parse(r#"{"grading_rank": 2, "degrees": [[1, 0], [0, 0]]}"#).unwrap();
        let err = doc.ring().unwrap_err();
        assert!(matches!(err, CliError::Input(m) if m.contains("degrees[1]") && m.contains("A_0 = k")));
    }
}
