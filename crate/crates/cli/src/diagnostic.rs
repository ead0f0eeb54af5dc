use std::fmt;

use ncinterp::Error;
use serde::Serialize;

/// Machine-readable failure report, written to stderr as JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Diagnostic {
    pub code: &'static str,
    pub message: String,
    pub location: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
}

impl Diagnostic {
    pub fn new(code: &'static str, message: impl Into<String>, location: impl Into<String>) -> Diagnostic {
        Diagnostic { code, message: message.into(), location: location.into(), order: None }
    }

    /// Process exit status for this diagnostic.
    pub fn exit_code(&self) -> i32 {
        match self.code {
            "ParseError" | "SchemaError" | "IoError" => 2,
            "NonGeneric" => 3,
            _ => 4,
        }
    }

    pub fn from_json(err: &serde_json::Error, location: &str) -> Diagnostic {
        use serde_json::error::Category;
        let code = match err.classify() {
            Category::Data => "SchemaError",
            Category::Syntax | Category::Eof | Category::Io => "ParseError",
        };
        let at = format!("{location}:{}:{}", err.line(), err.column());
        Diagnostic::new(code, err.to_string(), at)
    }

    /// Classify a library error raised while processing `location`.
    pub fn from_core(err: Error, location: &str) -> Diagnostic {
        let message = err.to_string();
        match err {
            Error::NonGeneric { order } => {
                Diagnostic { order: Some(order), ..Diagnostic::new("NonGeneric", message, location) }
            }
            Error::NotInvertible => Diagnostic { order: Some(0), ..Diagnostic::new("NonGeneric", message, location) },
            Error::DuplicateNode(_) => Diagnostic::new("DuplicateNode", message, location),
            Error::NotPositiveDefinite { .. } => Diagnostic::new("NotPositiveDefinite", message, location),
            Error::NotSymmetric => Diagnostic::new("NotSymmetric", message, location),
            Error::VariantMismatch(_)
            | Error::IndexOutOfBounds { .. }
            | Error::DuplicateIndex(_)
            | Error::Shape(_)
            | Error::Parse(_) => Diagnostic::new("SchemaError", message, location),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain struct")
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {}: {}", self.code, self.location, self.message)
    }
}
