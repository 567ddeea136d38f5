use constructions::{
    defaults, dual_simplex_arrangement, induction, ncsimplex, partition_construction, permutation_type,
    simplex_arrangement, simplex_construction, sporadic4, standard, tilde_sigma5_arrangement,
    tilde_sigma5_construction, tilde_sigma5_rep, Weight,
};
use kfield::Scalar;
use serde::Serialize;
use spectral::suites::basic_relation_checks;
use spectral::Report;
use tss_core::{verify_arrangement, verify_tss, Arrangement, Tss};

use crate::document::{Document, Kind};
use crate::CliError;

pub const CATALOG: [&str; 12] = [
    "standard",
    "partition",
    "induction",
    "perm",
    "simplex",
    "dual-simplex",
    "suspension-simplex",
    "ncsimplex",
    "s5-rep",
    "s5-arrangement",
    "s5-construction",
    "sporadic4",
];

#[derive(Clone, Debug, Default)]
pub struct Params {
    pub k: Option<usize>,
    pub p: Option<usize>,
    pub n: Option<usize>,
    pub lambda: Option<Scalar>,
    pub mu: Option<Scalar>,
    pub nu: Option<Scalar>,
    pub weight: Option<Vec<Scalar>>,
    pub input: Option<Document>,
}

#[derive(Serialize)]
struct Generators<'a> {
    generators: &'a [exact_linalg::Matrix],
    checks: &'a Report,
}

fn bad(msg: impl Into<String>) -> CliError {
    CliError::BadParams(msg.into())
}

fn tss_doc(t: Tss) -> Result<(Document, bool), CliError> {
    let cert = verify_tss(&t);
    let ok = cert.is_symmetric() && t.check_witness().is_ok();
    Ok((Document::new(Kind::Tss, &t), ok))
}

fn arrangement_doc(a: Arrangement) -> Result<(Document, bool), CliError> {
    let ok = verify_arrangement(&a).is_symmetric();
    Ok((Document::new(Kind::Arrangement, &a), ok))
}

/// Builds a catalog object and re-verifies it. The flag is false when the
/// verification failed.
pub fn construct(name: &str, p: &Params) -> Result<(Document, bool), CliError> {
    let lambda = p.lambda.clone().unwrap_or_else(defaults::lambda);
    let nu = p.nu.clone().unwrap_or_else(defaults::nu);
    let mu = p.mu.clone().unwrap_or_else(defaults::mu);
    match name {
        "standard" => tss_doc(standard(p.k.unwrap_or(3), &lambda, &nu)?),
        "partition" => {
            let w = p.weight.clone().ok_or_else(|| bad("partition needs --weight"))?;
            tss_doc(partition_construction(&Weight::new(w)))
        }
        "induction" => {
            let doc = p.input.as_ref().ok_or_else(|| bad("induction needs --in"))?;
            let base: Tss = doc.payload_as(Kind::Tss)?;
            tss_doc(induction(&base, p.p.unwrap_or(1), &lambda)?)
        }
        "perm" => {
            let values = match &p.weight {
                Some(w) => w.clone(),
                None => (1..=p.k.unwrap_or(3) as i64).map(Scalar::from_i64).collect(),
            };
            tss_doc(permutation_type(&values)?)
        }
        "simplex" => arrangement_doc(simplex_arrangement(p.n.unwrap_or(2))?),
        "dual-simplex" => arrangement_doc(dual_simplex_arrangement(p.n.unwrap_or(2))?),
        "suspension-simplex" => tss_doc(simplex_construction(p.n.unwrap_or(2), &lambda)?),
        "ncsimplex" => tss_doc(ncsimplex(p.k.unwrap_or(3), &lambda, &mu)?),
        "s5-rep" => {
            let ts = tilde_sigma5_rep();
            let report = Report::new(basic_relation_checks(&ts));
            let ok = report.all_passed();
            Ok((Document::new(Kind::Report, &Generators { generators: &ts, checks: &report }), ok))
        }
        "s5-arrangement" => arrangement_doc(tilde_sigma5_arrangement()),
        "s5-construction" => {
            let mu = p.mu.clone().unwrap_or_else(|| Scalar::from_i64(-1));
            let lambda = p.lambda.clone().unwrap_or_else(Scalar::one);
            tss_doc(tilde_sigma5_construction(&lambda, &mu)?)
        }
        "sporadic4" => tss_doc(sporadic4(&nu)?),
        other => Err(CliError::UnknownConstruction(other.to_string())),
    }
}
