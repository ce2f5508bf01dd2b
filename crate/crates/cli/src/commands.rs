use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use slicecert::data::{
    bundled_checksum, bundled_names, bundled_poly, certificate_file_name, parse_point, parse_poly, poly_checksum,
    serialize_poly, store_certificate,
};
use slicecert::factor::factor_cyclotomic;
use slicecert::obstruction::{
    branched_cover_order, certify_pair, norm_form_test, screen_primes_with, ScreenOptions, ScreenStatus, Verdict,
};
use slicecert::roots::unit_circle_root_count_with_cap;
use slicecert::{CycField, Error, LaurentPoly, Result};

use crate::report::{element_value, poly_value, Outcome};

#[derive(Parser, Debug)]
#[command(name = "slicecert", version, about = "Exact cyclotomic polynomial algebra and norm-form slice obstructions")]
pub struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Single-polynomial operations.
    #[command(subcommand)]
    Poly(PolyCommand),
    /// Count roots on the unit circle.
    CircleRoots {
        /// Polynomial file or bundled name.
        file: String,
        /// Precision cap for the numeric fallback, in bits.
        #[arg(long, default_value_t = 4096)]
        max_bits: u32,
    },
    /// Order of H_1 of the q-fold branched cover.
    BranchedOrder {
        #[arg(long)]
        poly: String,
        #[arg(short = 'q')]
        q: u32,
    },
    /// Decide whether a polynomial is a norm up to t^k (1-t)^j.
    NormCheck { file: String },
    /// Settle irreducibility of f(t^p) for primes p up to a bound.
    ScreenPrimes {
        file: String,
        #[arg(long, default_value_t = 100)]
        bound: u64,
        /// Read and write factorization certificates here.
        #[arg(long)]
        cert_dir: Option<PathBuf>,
    },
    /// Run the product enumeration for a pair of exponents.
    CertifyPair {
        #[arg(long)]
        alpha: u32,
        #[arg(long)]
        beta: u32,
        #[arg(long, default_value = "data/certs")]
        cert_dir: PathBuf,
    },
    /// Bundled polynomials.
    #[command(subcommand)]
    Data(DataCommand),
}

#[derive(Subcommand, Debug)]
pub enum PolyCommand {
    /// Evaluate at a rational, `w^k`, or a coordinate list.
    Eval {
        file: String,
        #[arg(long, allow_hyphen_values = true)]
        at: String,
    },
    /// Factor over the coefficient field (or `--field`), with a certificate.
    Factor {
        file: String,
        /// `q` or `cycP` for a prime P.
        #[arg(long)]
        field: Option<String>,
        #[arg(long)]
        cert_dir: Option<PathBuf>,
    },
    /// Substitute t -> t^n.
    ComposePower {
        file: String,
        #[arg(short = 'n')]
        n: u32,
    },
    /// Split into unit, t-power and monic part.
    Normalize { file: String },
}

#[derive(Subcommand, Debug)]
pub enum DataCommand {
    List,
    Show { name: String },
}

/// A path to a polynomial document, or the name of a bundled polynomial.
fn load_input(arg: &str) -> Result<LaurentPoly> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Precondition(format!("{arg}: {e}")))?;
        return parse_poly(&text);
    }
    match bundled_poly(arg) {
        Ok(r) => Ok(r.poly),
        Err(Error::UnknownName(_)) => Err(Error::Precondition(format!("{arg}: no such file or bundled polynomial"))),
        Err(e) => Err(e),
    }
}

fn parse_field(s: &str) -> Result<CycField> {
    let s = s.trim().to_ascii_lowercase();
    if s == "q" || s == "rationals" {
        return Ok(CycField::RATIONALS);
    }
    let p = s
        .strip_prefix("cyc")
        .and_then(|n| n.parse::<u64>().ok())
        .ok_or_else(|| Error::Precondition(format!("unknown field `{s}` (expected `q` or `cycP`)")))?;
    CycField::new(p)
}

fn outcome(command: &str, inputs: Value, result: Value, certified: bool, text: String) -> Outcome {
    Outcome { command: command.to_string(), inputs, result, certified, text }
}

pub fn run(cmd: &Command) -> Result<Outcome> {
    match cmd {
        Command::Poly(p) => run_poly(p),
        Command::CircleRoots { file, max_bits } => {
            let f = load_input(file)?;
            let r = unit_circle_root_count_with_cap(&f, *max_bits)?;
            let text = format!(
                "count {} ({}, {})\n",
                r.count,
                r.method,
                if r.certified { "certified" } else { "uncertified" }
            );
            Ok(outcome(
                "circle-roots",
                json!({ "file": file, "max_bits": max_bits }),
                json!({ "count": r.count, "method": r.method, "certified": r.certified }),
                r.certified,
                text,
            ))
        }
        Command::BranchedOrder { poly, q } => {
            let f = load_input(poly)?;
            let order = branched_cover_order(&f, *q)?;
            let text = if order == 0u32.into() { "infinite (0)\n".to_string() } else { format!("{order}\n") };
            Ok(outcome(
                "branched-order",
                json!({ "poly": poly, "q": q }),
                json!({ "order": order.to_string(), "infinite": order == 0u32.into() }),
                true,
                text,
            ))
        }
        Command::NormCheck { file } => {
            let f = load_input(file)?;
            let (is_norm, desc) = norm_form_test(&f)?;
            let mut text = format!("norm: {}\n", if is_norm { "yes" } else { "no" });
            let _ = writeln!(text, "t^{} (1 - t)^{}", desc.t_power, desc.one_minus_t_power);
            for e in &desc.entries {
                let partner = e.partner.as_deref().unwrap_or("itself");
                let _ = writeln!(
                    text,
                    "{} [x{}] with {} [x{}]: {}",
                    e.factor,
                    e.multiplicity,
                    partner,
                    e.partner_multiplicity,
                    if e.ok { "ok" } else { "unmatched" }
                );
            }
            Ok(outcome(
                "norm-check",
                json!({ "file": file }),
                json!({ "is_norm": is_norm, "pairing": desc }),
                true,
                text,
            ))
        }
        Command::ScreenPrimes { file, bound, cert_dir } => {
            let f = load_input(file)?;
            let opts = ScreenOptions { cert_dir: cert_dir.clone() };
            let r = screen_primes_with(&f, *bound, &opts)?;
            let mut text = format!("N(f(0)) = {}{}\n", r.constant_norm, if r.unit_case { " (unit case)" } else { "" });
            if !r.unit_case {
                let _ = writeln!(text, "candidates: {:?}", r.candidates);
            }
            for v in &r.primes {
                let status = match v.status {
                    ScreenStatus::CertifiedIrreducibleByNorm => "irreducible (norm screen)",
                    ScreenStatus::CertifiedIrreducibleByFactoring => "irreducible (factored)",
                    ScreenStatus::ReducibleWithCertificate => "reducible",
                };
                let _ = write!(text, "p = {}: {status}", v.prime);
                if !v.factor_degrees.is_empty() {
                    let _ = write!(text, " degrees {:?}", v.factor_degrees);
                }
                let _ = writeln!(text);
            }
            Ok(outcome(
                "screen-primes",
                json!({ "file": file, "bound": bound, "cert_dir": cert_dir }),
                serde_json::to_value(&r).expect("report serializes"),
                true,
                text,
            ))
        }
        Command::CertifyPair { alpha, beta, cert_dir } => {
            let r = certify_pair(*alpha, *beta, cert_dir)?;
            let mut text = format!("L_{alpha} # L_{beta}: {}\n", r.verdict);
            if let Some(w) = &r.witness {
                let s = &w.selector;
                let _ = writeln!(
                    text,
                    "witness: (x, y, z, w) = ({}, {}, {}, {}), (a, b, c, d) = ({}, {}, {}, {})",
                    s.x, s.y, s.z, s.w, s.a, s.b, s.c, s.d
                );
                for line in &w.pairing {
                    let _ = writeln!(text, "  {line}");
                }
            }
            let _ = writeln!(text, "selectors: {} evaluated of {}", r.selectors_evaluated, r.selectors_total);
            for a in &r.assumptions {
                let _ = writeln!(text, "assumes: {a}");
            }
            let certified = r.verdict != Verdict::Inconclusive;
            Ok(outcome(
                "certify-pair",
                json!({ "alpha": alpha, "beta": beta, "cert_dir": cert_dir }),
                serde_json::to_value(&r).expect("report serializes"),
                certified,
                text,
            ))
        }
        Command::Data(DataCommand::List) => {
            let names = bundled_names();
            let text = names.iter().map(|n| format!("{n}\n")).collect();
            Ok(outcome("data list", json!({}), json!({ "names": names }), true, text))
        }
        Command::Data(DataCommand::Show { name }) => {
            let r = bundled_poly(name)?;
            let text = format!(
                "{}: knot {}, cover degree {}, character {} mod {}, (1 - t) stripped {}\n{}\n",
                r.name, r.knot, r.cover_degree, r.character, r.character_modulus, r.stripped_1_minus_t, r.poly
            );
            Ok(outcome(
                "data show",
                json!({ "name": name }),
                json!({
                    "name": r.name,
                    "knot": r.knot,
                    "cover_degree": r.cover_degree,
                    "character": r.character,
                    "character_modulus": r.character_modulus,
                    "stripped_1_minus_t": r.stripped_1_minus_t,
                    "sha256": bundled_checksum(name)?,
                    "poly": poly_value(&r.poly),
                }),
                true,
                text,
            ))
        }
    }
}

fn run_poly(cmd: &PolyCommand) -> Result<Outcome> {
    match cmd {
        PolyCommand::Eval { file, at } => {
            let f = load_input(file)?;
            let a = parse_point(at, f.field())?;
            let v = f.evaluate(&a)?;
            Ok(outcome("poly eval", json!({ "file": file, "at": at }), element_value(&v), true, format!("{v}\n")))
        }
        PolyCommand::Factor { file, field, cert_dir } => {
            let mut f = load_input(file)?;
            if let Some(name) = field {
                f = f.embed(parse_field(name)?)?;
            }
            let cert = factor_cyclotomic(&f)?;
            let stored = match cert_dir {
                Some(dir) => Some(store_certificate(dir, &cert)?.display().to_string()),
                None => None,
            };
            let mut text = format!("unit {} t^{}\n", cert.unit_scalar(), cert.t_power());
            let mut factors = Vec::new();
            for (p, m) in cert.factors() {
                let _ = writeln!(text, "({p})^{m}");
                factors.push(json!({ "multiplicity": m, "degree": p.span(), "poly": poly_value(p) }));
            }
            let _ = writeln!(text, "irreducible: {}", if cert.is_irreducible() { "yes" } else { "no" });
            Ok(outcome(
                "poly factor",
                json!({ "file": file, "field": field, "cert_dir": cert_dir }),
                json!({
                    "input_sha256": poly_checksum(cert.input()),
                    "irreducible": cert.is_irreducible(),
                    "unit_scalar": element_value(cert.unit_scalar()),
                    "t_power": cert.t_power(),
                    "factors": factors,
                    "certificate": certificate_file_name(cert.input()),
                    "stored": stored,
                }),
                true,
                text,
            ))
        }
        PolyCommand::ComposePower { file, n } => {
            let f = load_input(file)?;
            let g = f.compose_power(*n)?;
            Ok(outcome("poly compose-power", json!({ "file": file, "n": n }), poly_value(&g), true, serialize_poly(&g)))
        }
        PolyCommand::Normalize { file } => {
            let f = load_input(file)?;
            let nf = f.normalize()?;
            let text = format!("{} * t^{} * ({})\n", nf.unit_scalar, nf.t_power, nf.monic_part);
            Ok(outcome(
                "poly normalize",
                json!({ "file": file }),
                json!({
                    "unit_scalar": element_value(&nf.unit_scalar),
                    "t_power": nf.t_power,
                    "monic_part": poly_value(&nf.monic_part),
                }),
                true,
                text,
            ))
        }
    }
}
