//! Command implementations behind the `tss` binary. Every command maps an
//! input [`Document`] (or catalog parameters) to an output document and a
//! verdict flag; the binary turns the flag into the exit code.

pub mod catalog;
mod document;
pub mod suite;

use constructions::{ConstructionError, DecompositionSystem};
use serde::Serialize;
use serde_json::json;
use spectral::{classify_commutative, SpectralError};
use tss_core::{stabilizer_dimension, verify_arrangement, verify_tss, Arrangement, Tss};

pub use catalog::{construct, Params, CATALOG};
pub use document::{Document, Kind, Meta, SCHEMA_VERSION};
pub use suite::paper_suite;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("expected kind {expected}, found {found}")]
    KindMismatch { expected: &'static str, found: &'static str },
    #[error("unknown construction {0:?}")]
    UnknownConstruction(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

/// Outcome of a command: the document to write and whether the verdict is
/// positive.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub document: Document,
    pub ok: bool,
}

fn report<T: Serialize>(command: &str, subject: Kind, body: &T) -> Document {
    Document::new(Kind::Report, &json!({ "command": command, "subject": subject, "result": body }))
}

pub fn verify(doc: &Document) -> Result<Outcome, CliError> {
    match doc.kind {
        Kind::Tss => {
            let t: Tss = doc.payload_as(Kind::Tss)?;
            let cert = verify_tss(&t);
            Ok(Outcome { ok: cert.is_symmetric(), document: report("verify", Kind::Tss, &cert) })
        }
        Kind::Arrangement => {
            let a: Arrangement = doc.payload_as(Kind::Arrangement)?;
            let cert = verify_arrangement(&a);
            Ok(Outcome { ok: cert.is_symmetric(), document: report("verify", Kind::Arrangement, &cert) })
        }
        Kind::System => {
            let d: DecompositionSystem = doc.payload_as(Kind::System)?;
            let direct = d.rows_are_direct_sums();
            let failing = d.check_witness().err();
            let body = json!({ "rows_are_direct_sums": direct, "failing_transposition": failing });
            Ok(Outcome { ok: direct && failing.is_none(), document: report("verify", Kind::System, &body) })
        }
        Kind::Report => Err(CliError::KindMismatch { expected: "tss, arrangement or system", found: "report" }),
    }
}

pub fn classify(doc: &Document) -> Result<Outcome, CliError> {
    let t: Tss = doc.payload_as(Kind::Tss)?;
    match classify_commutative(&t, &[]) {
        Ok(r) => Ok(Outcome { ok: r.is_irreducible(), document: report("classify", Kind::Tss, &r) }),
        Err(SpectralError::NotCommutative) => {
            Ok(Outcome { ok: false, document: report("classify", Kind::Tss, &json!({ "error": "NotCommutative" })) })
        }
        Err(e) => Err(CliError::BadParams(e.to_string())),
    }
}

pub fn stabilizer(doc: &Document) -> Result<Outcome, CliError> {
    let a: Arrangement = doc.payload_as(Kind::Arrangement)?;
    let st = stabilizer_dimension(&a);
    Ok(Outcome { ok: true, document: report("stabilizer", Kind::Arrangement, &st) })
}

pub fn run_paper_suite() -> Outcome {
    let r = paper_suite();
    Outcome { ok: r.all_passed(), document: Document::new(Kind::Report, &r) }
}

/// Re-emits a document in canonical form by parsing its payload into the
/// typed object and serializing it again.
pub fn export(doc: &Document) -> Result<Outcome, CliError> {
    let document = match doc.kind {
        Kind::Tss => Document::new(Kind::Tss, &doc.payload_as::<Tss>(Kind::Tss)?),
        Kind::Arrangement => Document::new(Kind::Arrangement, &doc.payload_as::<Arrangement>(Kind::Arrangement)?),
        Kind::System => Document::new(Kind::System, &doc.payload_as::<DecompositionSystem>(Kind::System)?),
        Kind::Report => doc.clone(),
    };
    Ok(Outcome { ok: true, document })
}

/// One line per check: status, name and anchor.
pub fn suite_lines(r: &spectral::Report) -> Vec<String> {
    r.checks
        .iter()
        .map(|c| format!("{} {} [{}]", if c.passed { "PASS" } else { "FAIL" }, c.name, c.anchor))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use kfield::Scalar;

    fn params() -> Params {
        Params::default()
    }

    #[test]
    fn standard_round_trips() {
        let p = Params { k: Some(3), lambda: Some(Scalar::from_i64(2)), nu: Some(Scalar::one()), ..params() };
        let (doc, ok) = construct("standard", &p).unwrap();
        assert!(ok);
        let text = doc.emit();
        let back = Document::parse(&text).unwrap();
        assert_eq!(back.emit(), text);
        assert_eq!(export(&back).unwrap().document.emit(), text);
        assert!(verify(&back).unwrap().ok);
    }

    #[test]
    fn kind_mismatch_is_reported() {
        let (doc, _) = construct("simplex", &Params { n: Some(2), ..params() }).unwrap();
        assert!(matches!(classify(&doc), Err(CliError::KindMismatch { .. })));
        assert!(matches!(construct("nope", &params()), Err(CliError::UnknownConstruction(_))));
    }

    #[test]
    fn field_basis_is_checked() {
        let (doc, _) = construct("standard", &params()).unwrap();
        let text = doc.emit().replace("sqrt6", "sqrt5");
        assert!(matches!(Document::parse(&text), Err(CliError::Parse(_))));
    }

    #[test]
    fn classify_two_two() {
        let w = ["1", "1", "2", "2"].iter().map(|x| x.parse().unwrap()).collect();
        let (doc, _) = construct("partition", &Params { weight: Some(w), ..params() }).unwrap();
        let out = classify(&doc).unwrap();
        assert!(out.ok);
        assert_eq!(out.document.payload["result"]["partition"], "2≤2");
        assert_eq!(out.document.payload["result"]["dimension"], 6);
    }

    #[test]
    fn s5_stabilizer_is_scalar() {
        let (doc, ok) = construct("s5-arrangement", &params()).unwrap();
        assert!(ok);
        assert_eq!(stabilizer(&doc).unwrap().document.payload["result"]["dimension"], 1);
    }

    #[test]
    fn suite_has_enough_sorted_checks() {
        let r = paper_suite();
        assert!(r.checks.len() >= 25);
        assert!(r.checks.windows(2).all(|w| w[0].name <= w[1].name));
    }
}
