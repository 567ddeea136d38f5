use kfield::FIELD_BASIS;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::CliError;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Tss,
    Arrangement,
    System,
    Report,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Tss => "tss",
            Kind::Arrangement => "arrangement",
            Kind::System => "system",
            Kind::Report => "report",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Meta {
    pub field_basis: String,
    pub version: String,
}

impl Default for Meta {
    fn default() -> Self {
        Meta { field_basis: FIELD_BASIS.to_string(), version: SCHEMA_VERSION.to_string() }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Document {
    pub kind: Kind,
    pub payload: Value,
    pub meta: Meta,
}

impl Document {
    pub fn new<T: Serialize>(kind: Kind, payload: &T) -> Document {
        let payload = serde_json::to_value(payload).expect("payload types serialize");
        Document { kind, payload, meta: Meta::default() }
    }

    pub fn parse(text: &str) -> Result<Document, CliError> {
        let doc: Document = serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
        if doc.meta.field_basis != FIELD_BASIS {
            return Err(CliError::Parse(format!("unsupported field basis {:?}", doc.meta.field_basis)));
        }
        if doc.meta.version != SCHEMA_VERSION {
            return Err(CliError::Parse(format!("unsupported schema version {:?}", doc.meta.version)));
        }
        Ok(doc)
    }

    /// Pretty JSON with a trailing newline.
    pub fn emit(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents serialize");
        s.push('\n');
        s
    }

    pub fn payload_as<T: DeserializeOwned>(&self, kind: Kind) -> Result<T, CliError> {
        if self.kind != kind {
            return Err(CliError::KindMismatch { expected: kind.as_str(), found: self.kind.as_str() });
        }
        serde_json::from_value(self.payload.clone()).map_err(|e| CliError::Parse(e.to_string()))
    }
}
