//! JSON fan documents.
//!
//! ```json
//! {"dim": 2, "rays": [[0,1],[1,0]], "chambers": [[0,1]], "name": "example"}
//! ```

use serde::{Deserialize, Serialize};
use std::fs;
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("schema error: {0}")]
    Schema(String),
    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

/// Raw fan description, before validation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FanDocument {
    pub dim: usize,
    pub rays: Vec<Vec<i64>>,
    pub chambers: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl FanDocument {
    pub fn from_json(text: &str) -> Result<FanDocument, DocumentError> {
        let doc: FanDocument = serde_json::from_str(text).map_err(|e| {
            use serde_json::error::Category;
            match e.classify() {
                Category::Data => DocumentError::Schema(e.to_string()),
                _ => DocumentError::Parse {
                    line: e.line(),
                    column: e.column(),
                    message: e.to_string(),
                },
            }
        })?;
        doc.check_schema()?;
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("fan documents always serialize")
    }

    /// Shape checks that do not need geometry: vector lengths and index ranges.
    pub fn check_schema(&self) -> Result<(), DocumentError> {
        if self.dim == 0 {
            return Err(DocumentError::Schema("field `dim` must be positive".into()));
        }
        for (i, r) in self.rays.iter().enumerate() {
            if r.len() != self.dim {
                return Err(DocumentError::Schema(format!(
                    "field `rays`: ray {i} has {} coordinates, expected {}",
                    r.len(),
                    self.dim
                )));
            }
        }
        for (i, c) in self.chambers.iter().enumerate() {
            if c.len() != self.dim {
                return Err(DocumentError::Schema(format!(
                    "field `chambers`: chamber {i} has {} rays, expected {}",
                    c.len(),
                    self.dim
                )));
            }
            if let Some(&bad) = c.iter().find(|&&k| k >= self.rays.len()) {
                return Err(DocumentError::Schema(format!(
                    "field `chambers`: chamber {i} references ray {bad}, but only {} rays exist",
                    self.rays.len()
                )));
            }
        }
        Ok(())
    }
}

pub fn load_fan(path: impl AsRef<Path>) -> Result<FanDocument, DocumentError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| DocumentError::Io {
        path: path.display().to_string(),
        source,
    })?;
    FanDocument::from_json(&text)
}

pub fn save_fan(doc: &FanDocument, path: impl AsRef<Path>) -> Result<(), DocumentError> {
    let path = path.as_ref();
    let mut text = doc.to_json();
    text.push('\n');
    fs::write(path, text).map_err(|source| DocumentError::Io {
        path: path.display().to_string(),
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_field_is_a_schema_error_naming_the_field() {
        let err = FanDocument::from_json(r#"{"dim": 2, "rayz": [], "chambers": []}"#).unwrap_err();
        match err {
            DocumentError::Schema(msg) => assert!(msg.contains("rayz"), "{msg}"),
            other => panic!("expected schema error, got {other:?}"),
        }
    }

    #[test]
    fn syntax_error_reports_position() {
        let err = FanDocument::from_json("{\n  \"dim\": 2,\n  \"rays\": [[0,1]\n").unwrap_err();
        match err {
            DocumentError::Parse { line, .. } => assert!(line >= 3),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn index_out_of_range() {
        let err = FanDocument::from_json(r#"{"dim": 1, "rays": [[1]], "chambers": [[1]]}"#)
            .unwrap_err();
        assert!(matches!(err, DocumentError::Schema(m) if m.contains("chambers")));
    }

    #[test]
    fn wrong_ray_length() {
        let err = FanDocument::from_json(r#"{"dim": 2, "rays": [[1]], "chambers": []}"#)
            .unwrap_err();
        assert!(matches!(err, DocumentError::Schema(m) if m.contains("rays")));
    }
}
