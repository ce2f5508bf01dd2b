//! The polynomial document format.
//!
//! ```text
//! {
//!   "field_conductor": 13,
//!   "variable": "t",
//!   "min_degree": 0,
//!   "coefficients": [
//!     ["1/1", "0/1", …],
//!     …
//!   ]
//! }
//! ```
//!
//! Each inner list holds the power-basis coordinates `1, ω, …, ω^{p-2}` of one
//! coefficient (a single rational over ℚ). The optional key
//! `"basis": "normal"` declares coordinates on `ω, …, ω^{p-1}` instead; they
//! are re-expressed in the power basis on load.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Deserialize;
use sha2::{Digest, Sha256};

use crate::cyclo::{CycField, CycNum, Rational};
use crate::error::{Error, Result};
use crate::poly::LaurentPoly;

/// Largest accepted `|min_degree|`.
pub const MAX_ABS_MIN_DEGREE: i64 = 1 << 32;
/// Largest accepted number of digits in one rational component.
pub const MAX_DIGITS: usize = 20_000;
/// Largest accepted number of coefficients.
pub const MAX_COEFFICIENTS: usize = 1 << 16;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub(crate) struct PolyDoc {
    pub field_conductor: u64,
    #[serde(default)]
    pub variable: Option<String>,
    #[serde(default)]
    pub basis: Option<String>,
    pub min_degree: i64,
    pub coefficients: Vec<Vec<String>>,
}

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn parse_integer(s: &str) -> Result<BigInt> {
    let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(parse_err(format!("malformed integer `{s}`")));
    }
    if digits.len() > MAX_DIGITS {
        return Err(parse_err("integer has too many digits"));
    }
    s.parse::<BigInt>().map_err(|e| parse_err(format!("malformed integer `{s}`: {e}")))
}

/// `"num/den"` or `"num"`, exact; the denominator must be positive.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_integer(s)?)),
        Some((n, d)) => {
            let n = parse_integer(n.trim())?;
            let d = d.trim();
            if d.starts_with(['-', '+']) {
                return Err(parse_err(format!("denominator must be unsigned in `{s}`")));
            }
            let d = parse_integer(d)?;
            if d.is_zero() {
                return Err(parse_err(format!("zero denominator in `{s}`")));
            }
            Ok(Rational::new(n, d))
        }
    }
}

/// Canonical `"num/den"` spelling.
pub fn format_rational(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

pub(crate) fn poly_from_doc(doc: &PolyDoc) -> Result<LaurentPoly> {
    let field = CycField::new(doc.field_conductor)?;
    if let Some(v) = &doc.variable {
        if v != "t" {
            return Err(parse_err(format!("unsupported variable `{v}` (expected `t`)")));
        }
    }
    let normal = match doc.basis.as_deref() {
        None | Some("power") => false,
        Some("normal") => true,
        Some(other) => return Err(parse_err(format!("unknown basis `{other}`"))),
    };
    if normal && field.is_rationals() {
        return Err(parse_err("the normal basis needs a cyclotomic field"));
    }
    if doc.min_degree.abs() > MAX_ABS_MIN_DEGREE {
        return Err(parse_err("min_degree out of range"));
    }
    if doc.coefficients.len() > MAX_COEFFICIENTS {
        return Err(parse_err("too many coefficients"));
    }
    let width = field.degree();
    let mut coeffs = Vec::with_capacity(doc.coefficients.len());
    for (i, row) in doc.coefficients.iter().enumerate() {
        if row.len() != width {
            return Err(parse_err(format!("coefficient {i}: expected {width} coordinates, got {}", row.len())));
        }
        let coords = row.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>()?;
        coeffs.push(if normal {
            let mut raw = vec![Rational::zero()];
            raw.extend(coords);
            CycNum::reduce(field, &raw)
        } else {
            CycNum::from_coords(field, coords)?
        });
    }
    LaurentPoly::new(field, doc.min_degree, coeffs)
}

/// Parse a polynomial document.
pub fn parse_poly(text: &str) -> Result<LaurentPoly> {
    let doc: PolyDoc = serde_json::from_str(text).map_err(|e| parse_err(e.to_string()))?;
    poly_from_doc(&doc)
}

fn push_coords(out: &mut String, c: &CycNum) {
    out.push('[');
    for (k, q) in c.coords().iter().enumerate() {
        if k > 0 {
            out.push_str(", ");
        }
        out.push('"');
        out.push_str(&format_rational(q));
        out.push('"');
    }
    out.push(']');
}

/// Canonical document for `f`, indented by `indent` spaces (nested use).
pub(crate) fn serialize_poly_indented(f: &LaurentPoly, indent: usize) -> String {
    let pad = " ".repeat(indent);
    let mut out = String::new();
    out.push_str("{\n");
    out.push_str(&format!("{pad}  \"field_conductor\": {},\n", f.field().conductor()));
    out.push_str(&format!("{pad}  \"variable\": \"t\",\n"));
    out.push_str(&format!("{pad}  \"min_degree\": {},\n", f.min_degree()));
    if f.is_zero() {
        out.push_str(&format!("{pad}  \"coefficients\": []\n"));
    } else {
        out.push_str(&format!("{pad}  \"coefficients\": [\n"));
        for (i, c) in f.coeffs().iter().enumerate() {
            out.push_str(&format!("{pad}    "));
            push_coords(&mut out, c);
            out.push_str(if i + 1 < f.coeffs().len() { ",\n" } else { "\n" });
        }
        out.push_str(&format!("{pad}  ]\n"));
    }
    out.push_str(&format!("{pad}}}"));
    out
}

/// Canonical document; `parse_poly(serialize_poly(f)) == f`.
pub fn serialize_poly(f: &LaurentPoly) -> String {
    let mut s = serialize_poly_indented(f, 0);
    s.push('\n');
    s
}

/// SHA-256 of the canonical document, lowercase hex.
pub fn poly_checksum(f: &LaurentPoly) -> String {
    sha256_hex(serialize_poly(f).as_bytes())
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Coordinates of an element as JSON-ready strings.
pub fn format_element(c: &CycNum) -> Vec<String> {
    c.coords().iter().map(format_rational).collect()
}

/// An evaluation point: a rational (`"3/2"`), a root-of-unity power (`"w"`,
/// `"-w^5"`) or a bracketed coordinate list (`"[1, 0, -1/2, …]"`).
pub fn parse_point(text: &str, field: CycField) -> Result<CycNum> {
    let s = text.trim();
    if s.starts_with('[') {
        let items: Vec<String> = serde_json::from_str::<Vec<serde_json::Value>>(s)
            .map_err(|e| parse_err(e.to_string()))?
            .into_iter()
            .map(|v| match v {
                serde_json::Value::String(s) => Ok(s),
                serde_json::Value::Number(n) => Ok(n.to_string()),
                other => Err(parse_err(format!("bad coordinate {other}"))),
            })
            .collect::<Result<_>>()?;
        let coords = items.iter().map(|x| parse_rational(x)).collect::<Result<Vec<_>>>()?;
        return CycNum::from_coords(field, coords);
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) if rest.trim_start().starts_with('w') => (true, rest.trim_start()),
        _ => (false, s),
    };
    if let Some(rest) = body.strip_prefix('w') {
        if field.is_rationals() {
            return Err(parse_err("`w` needs a cyclotomic field"));
        }
        let k = if rest.is_empty() {
            1
        } else {
            let e = rest.strip_prefix('^').ok_or_else(|| parse_err(format!("malformed point `{s}`")))?;
            let e = parse_integer(e.trim())?;
            let p = BigInt::from(field.conductor());
            let r: BigInt = ((e % &p) + &p) % &p;
            i64::try_from(r).map_err(|_| parse_err("exponent out of range"))?
        };
        let w = CycNum::omega_pow(field, k);
        return Ok(if neg { -w } else { w });
    }
    Ok(CycNum::from_rational(field, parse_rational(s)?))
}
