//! Which `f(t^p)` stay irreducible: the constant-term norm screen, with direct
//! factoring for the primes it cannot settle.

use std::path::PathBuf;

use serde::Serialize;

use super::{primes_up_to, rational_power_primes, PerfectPowerPrimes};
use crate::data::{certificate_file_name, format_rational, load_certificate, poly_checksum, store_certificate};
use crate::error::{Error, Result};
use crate::factor::{factor_cyclotomic, FactorizationCertificate};
use crate::poly::LaurentPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ScreenStatus {
    CertifiedIrreducibleByNorm,
    CertifiedIrreducibleByFactoring,
    ReducibleWithCertificate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeVerdict {
    pub prime: u64,
    pub status: ScreenStatus,
    /// `(degree, multiplicity)` of each factor of `f(t^p)`, when factored.
    pub factor_degrees: Vec<(usize, u32)>,
    /// Certificate file name, when factored.
    pub certificate: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScreenReport {
    pub input_sha256: String,
    /// `N(f(0))`.
    pub constant_norm: String,
    pub unit_case: bool,
    /// Primes the norm screen could not settle (empty in the unit case).
    pub candidates: Vec<u64>,
    pub primes: Vec<PrimeVerdict>,
}

#[derive(Clone, Debug, Default)]
pub struct ScreenOptions {
    /// Certificates are read from and written to this directory.
    pub cert_dir: Option<PathBuf>,
}

/// [`screen_primes_with`] without a certificate cache.
pub fn screen_primes(f: &LaurentPoly, bound: u64) -> Result<ScreenReport> {
    screen_primes_with(f, bound, &ScreenOptions::default())
}

fn factor_cached(g: &LaurentPoly, opts: &ScreenOptions) -> Result<FactorizationCertificate> {
    if let Some(dir) = &opts.cert_dir {
        if let Some(cert) = load_certificate(dir, g)? {
            return Ok(cert);
        }
        let cert = factor_cyclotomic(g)?;
        store_certificate(dir, &cert)?;
        return Ok(cert);
    }
    factor_cyclotomic(g)
}

fn degrees(cert: &FactorizationCertificate) -> Vec<(usize, u32)> {
    cert.factors().iter().map(|(p, m)| (p.span(), *m)).collect()
}

/// Settle irreducibility of `f(t^p)` for every prime `p ≤ bound`, for an
/// irreducible `f` with nonzero constant term.
pub fn screen_primes_with(f: &LaurentPoly, bound: u64, opts: &ScreenOptions) -> Result<ScreenReport> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.is_ordinary() && f.min_degree() > 0 {
        return Err(Error::Precondition("f(0) = 0".into()));
    }
    let m = f.monic_part()?;
    if m.span() == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let base = factor_cached(&m, opts)?;
    if !base.is_irreducible() {
        return Err(Error::Precondition(format!("f is not irreducible (factor degrees {:?})", degrees(&base))));
    }
    let c = m.coeff(0).norm();
    let screen = rational_power_primes(&c)?;
    let (unit_case, candidates) = match &screen {
        PerfectPowerPrimes::Unit => (true, Vec::new()),
        PerfectPowerPrimes::Primes(ps) => (false, ps.clone()),
    };
    let mut primes = Vec::new();
    for p in primes_up_to(bound) {
        if !unit_case && !candidates.contains(&p) {
            primes.push(PrimeVerdict {
                prime: p,
                status: ScreenStatus::CertifiedIrreducibleByNorm,
                factor_degrees: Vec::new(),
                certificate: None,
            });
            continue;
        }
        let g = m.compose_power(p as u32)?;
        let cert = factor_cached(&g, opts)?;
        let status = if cert.is_irreducible() {
            ScreenStatus::CertifiedIrreducibleByFactoring
        } else {
            ScreenStatus::ReducibleWithCertificate
        };
        primes.push(PrimeVerdict {
            prime: p,
            status,
            factor_degrees: degrees(&cert),
            certificate: Some(certificate_file_name(&g)),
        });
    }
    Ok(ScreenReport {
        input_sha256: poly_checksum(&m),
        constant_norm: format_rational(&c),
        unit_case,
        candidates,
        primes,
    })
}
