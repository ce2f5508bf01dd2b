//! Factorization certificate files.
//!
//! ```text
//! {
//!   "format": "slicecert-factorization/1",
//!   "input_sha256": "<sha256 of the canonical input document>",
//!   "unit_scalar": ["1/1", …],
//!   "t_power": 0,
//!   "input": { <polynomial document> },
//!   "factors": [
//!     { "multiplicity": 1, "poly": { <polynomial document> } }
//!   ]
//! }
//! ```
//!
//! Loading re-checks the checksum and the re-multiplication identity.

use std::path::{Path, PathBuf};

use serde::Deserialize;

use super::format::{format_rational, parse_rational, poly_checksum, poly_from_doc, serialize_poly_indented, PolyDoc};
use crate::cyclo::CycNum;
use crate::error::{Error, Result};
use crate::factor::FactorizationCertificate;

pub const CERTIFICATE_FORMAT: &str = "slicecert-factorization/1";

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FactorDoc {
    multiplicity: u32,
    poly: PolyDoc,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CertDoc {
    format: String,
    input_sha256: String,
    unit_scalar: Vec<String>,
    t_power: i64,
    input: PolyDoc,
    factors: Vec<FactorDoc>,
}

fn quoted_list(items: &[String]) -> String {
    let inner: Vec<String> = items.iter().map(|s| format!("\"{s}\"")).collect();
    format!("[{}]", inner.join(", "))
}

pub fn serialize_certificate(cert: &FactorizationCertificate) -> String {
    let unit: Vec<String> = cert.unit_scalar().coords().iter().map(format_rational).collect();
    let mut out = String::new();
    out.push_str("{\n");
    out.push_str(&format!("  \"format\": \"{CERTIFICATE_FORMAT}\",\n"));
    out.push_str(&format!("  \"input_sha256\": \"{}\",\n", poly_checksum(cert.input())));
    out.push_str(&format!("  \"unit_scalar\": {},\n", quoted_list(&unit)));
    out.push_str(&format!("  \"t_power\": {},\n", cert.t_power()));
    out.push_str(&format!("  \"input\": {},\n", serialize_poly_indented(cert.input(), 2)));
    out.push_str("  \"factors\": [");
    for (i, (f, m)) in cert.factors().iter().enumerate() {
        out.push_str(if i == 0 { "\n" } else { ",\n" });
        out.push_str(&format!(
            "    {{\n      \"multiplicity\": {m},\n      \"poly\": {}\n    }}",
            serialize_poly_indented(f, 6)
        ));
    }
    out.push_str(if cert.factors().is_empty() { "]\n" } else { "\n  ]\n" });
    out.push_str("}\n");
    out
}

pub fn parse_certificate(text: &str) -> Result<FactorizationCertificate> {
    let doc: CertDoc = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    if doc.format != CERTIFICATE_FORMAT {
        return Err(Error::Certificate(format!("unknown certificate format `{}`", doc.format)));
    }
    let input = poly_from_doc(&doc.input)?;
    if poly_checksum(&input) != doc.input_sha256 {
        return Err(Error::Certificate("input checksum mismatch".into()));
    }
    let coords = doc.unit_scalar.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>()?;
    let unit = CycNum::from_coords(input.field(), coords)?;
    let factors =
        doc.factors.iter().map(|f| Ok((poly_from_doc(&f.poly)?, f.multiplicity))).collect::<Result<Vec<_>>>()?;
    FactorizationCertificate::new(input, unit, doc.t_power, factors)
}

/// File name under a certificate directory for a given input.
pub fn certificate_file_name(cert_input: &crate::poly::LaurentPoly) -> String {
    format!("factor-{}.json", poly_checksum(cert_input))
}

pub fn certificate_path(dir: &Path, input: &crate::poly::LaurentPoly) -> PathBuf {
    dir.join(certificate_file_name(input))
}

/// Write a certificate into `dir`, named by its input checksum.
pub fn store_certificate(dir: &Path, cert: &FactorizationCertificate) -> Result<PathBuf> {
    std::fs::create_dir_all(dir).map_err(|e| Error::Precondition(format!("{}: {e}", dir.display())))?;
    let path = certificate_path(dir, cert.input());
    std::fs::write(&path, serialize_certificate(cert))
        .map_err(|e| Error::Precondition(format!("{}: {e}", path.display())))?;
    Ok(path)
}

/// Load the certificate for `input` from `dir`, if present.
pub fn load_certificate(dir: &Path, input: &crate::poly::LaurentPoly) -> Result<Option<FactorizationCertificate>> {
    let path = certificate_path(dir, input);
    match std::fs::read_to_string(&path) {
        Ok(text) => {
            let cert = parse_certificate(&text).map_err(|e| Error::Certificate(format!("{}: {e}", path.display())))?;
            if cert.input() != input {
                return Err(Error::Certificate(format!("{}: certificate is for a different input", path.display())));
            }
            Ok(Some(cert))
        }
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(None),
        Err(e) => Err(Error::Precondition(format!("{}: {e}", path.display()))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::CycField;
    use crate::factor::factor_rational;
    use crate::poly::LaurentPoly;

    #[test]
    fn round_trip() {
        let f = LaurentPoly::from_ints(CycField::RATIONALS, -1, &[-2, 0, 0, 0, 2]);
        let cert = factor_rational(&f).unwrap();
        let text = serialize_certificate(&cert);
        assert_eq!(parse_certificate(&text).unwrap(), cert);
        assert_eq!(serialize_certificate(&parse_certificate(&text).unwrap()), text);
    }

    #[test]
    fn tampering_is_detected() {
        let f = LaurentPoly::from_ints(CycField::RATIONALS, 0, &[-1, 0, 1]);
        let text = serialize_certificate(&factor_rational(&f).unwrap());
        let bad_factor = text.replacen("\"1/1\"]\n", "\"2/1\"]\n", 1);
        assert!(parse_certificate(&bad_factor).is_err());
        let bad_sum = text.replace("\"-1/1\"", "\"-2/1\"");
        assert!(matches!(parse_certificate(&bad_sum), Err(Error::Certificate(_))));
        assert!(parse_certificate("{}").is_err());
    }
}
