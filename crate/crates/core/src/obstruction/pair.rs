//! Symbolic enumeration of the products
//! `σ_a(Δ_3(t^α))^x σ_b(Δ_9(t^α))^y σ_c(Δ_3(t^β))^z σ_d(Δ_9(t^β))^w`.
//!
//! `Δ_i(t^n) = (1 - t)·J_n(t)·F_i(t^n)` with `J_n = (1 - t^n)/(1 - t)` and
//! `F_i` the bundled polynomial. Given certificates that the `F_i(t^n)` are
//! irreducible, and a factorization of `J_n`, a product is a norm iff its
//! irreducible factors pair up under `ι`, which is decided on factor labels
//! without multiplying anything out.

use std::fmt;
use std::path::Path;

use serde::Serialize;

use crate::cyclo::GaloisMap;
use crate::data::{bundled_poly, certificate_file_name, load_certificate};
use crate::error::{Error, Result};
use crate::factor::{factor_cyclotomic, FactorizationCertificate};
use crate::poly::LaurentPoly;

const GALOIS_ORDER: u32 = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PairFamily {
    Rho3,
    Rho9,
}

impl PairFamily {
    pub fn record_name(self) -> &'static str {
        match self {
            PairFamily::Rho3 => "8_17.rho3",
            PairFamily::Rho9 => "8_17.rho9",
        }
    }
}

impl fmt::Display for PairFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PairFamily::Rho3 => "rho3",
            PairFamily::Rho9 => "rho9",
        })
    }
}

/// `F(t^n)` for the bundled polynomial `F = Δ/(1 - t)` of the family.
pub fn family_polynomial(family: PairFamily, n: u32) -> Result<LaurentPoly> {
    bundled_poly(family.record_name())?.poly.compose_power(n)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EqOneSelector {
    pub alpha: u32,
    pub beta: u32,
    pub x: u8,
    pub y: u8,
    pub z: u8,
    pub w: u8,
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub d: u32,
}

impl EqOneSelector {
    pub fn new(alpha: u32, beta: u32, exps: [u8; 4], galois: [u32; 4]) -> Result<Self> {
        check_pair(alpha, beta)?;
        if exps.iter().any(|&e| e > 1) || exps.iter().all(|&e| e == 0) {
            return Err(Error::Precondition(format!("exponents {exps:?} must be 0/1, not all 0")));
        }
        if galois.iter().any(|&g| g == 0 || g > GALOIS_ORDER) {
            return Err(Error::Precondition(format!("Galois indices {galois:?} must lie in 1..=12")));
        }
        let [x, y, z, w] = exps;
        let [a, b, c, d] = galois;
        Ok(EqOneSelector { alpha, beta, x, y, z, w, a, b, c, d })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Obstructed,
    NormWitnessFound,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Obstructed => "obstructed",
            Verdict::NormWitnessFound => "norm-witness-found",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub selector: EqOneSelector,
    /// One line per factor class of the product.
    pub pairing: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObstructionReport {
    pub alpha: u32,
    pub beta: u32,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    /// Certificates and conventions the verdict rests on.
    pub assumptions: Vec<String>,
    /// `15 · 12^4`.
    pub selectors_total: u64,
    /// Selectors actually examined; Galois indices of zero exponents are
    /// fixed to 1, since they do not change the product.
    pub selectors_evaluated: u64,
    /// Distinct classes among the 48 polynomials `σ_ν(F_i(t^n))`.
    pub distinct_family_conjugates: usize,
}

fn check_pair(alpha: u32, beta: u32) -> Result<()> {
    for (name, n) in [("alpha", alpha), ("beta", beta)] {
        if n == 0 || n % 2 == 0 || n % 3 == 0 {
            return Err(Error::Precondition(format!("{name} = {n} must be odd, positive and prime to 3")));
        }
    }
    Ok(())
}

const SLOTS: [(PairFamily, bool); 4] =
    [(PairFamily::Rho3, false), (PairFamily::Rho9, false), (PairFamily::Rho3, true), (PairFamily::Rho9, true)];

/// Load the four certificates from `cert_dir` and run [`certify_pair_with`].
pub fn certify_pair(alpha: u32, beta: u32, cert_dir: &Path) -> Result<ObstructionReport> {
    check_pair(alpha, beta)?;
    let mut certs = Vec::with_capacity(4);
    for (family, second) in SLOTS {
        let n = if second { beta } else { alpha };
        let f = family_polynomial(family, n)?;
        let cert = load_certificate(cert_dir, &f)?.ok_or_else(|| {
            Error::Precondition(format!(
                "missing certificate {} for {family}(t^{n}) in {}",
                certificate_file_name(&f),
                cert_dir.display()
            ))
        })?;
        certs.push(cert);
    }
    let certs: [FactorizationCertificate; 4] = certs.try_into().expect("four certificates");
    certify_pair_with(alpha, beta, &certs)
}

struct Classes {
    polys: Vec<LaurentPoly>,
    names: Vec<String>,
}

impl Classes {
    fn id(&mut self, p: &LaurentPoly, name: impl FnOnce() -> String) -> usize {
        if let Some(i) = self.polys.iter().position(|q| q == p) {
            return i;
        }
        self.polys.push(p.clone());
        self.names.push(name());
        self.polys.len() - 1
    }
}

/// Run the enumeration with certificates for `ρ3(t^α)`, `ρ9(t^α)`,
/// `ρ3(t^β)`, `ρ9(t^β)`, in that order.
pub fn certify_pair_with(alpha: u32, beta: u32, certs: &[FactorizationCertificate; 4]) -> Result<ObstructionReport> {
    check_pair(alpha, beta)?;
    let mut report = ObstructionReport {
        alpha,
        beta,
        verdict: Verdict::Inconclusive,
        witness: None,
        assumptions: Vec::new(),
        selectors_total: 15 * (GALOIS_ORDER as u64).pow(4),
        selectors_evaluated: 0,
        distinct_family_conjugates: 0,
    };
    let mut families = Vec::with_capacity(4);
    for ((family, second), cert) in SLOTS.iter().zip(certs) {
        let n = if *second { beta } else { alpha };
        let f = family_polynomial(*family, n)?;
        if cert.input() != &f {
            return Err(Error::Certificate(format!("certificate is not for {family}(t^{n})")));
        }
        let file = certificate_file_name(&f);
        if !cert.is_irreducible() {
            report.assumptions.push(format!("{family}(t^{n}) is reducible: {file}"));
            continue;
        }
        report.assumptions.push(format!("{family}(t^{n}) irreducible: {file}"));
        families.push((format!("{family}(t^{n})"), f));
    }
    if families.len() < 4 {
        return Ok(report);
    }

    let field = families[0].1.field();
    let mut classes = Classes { polys: Vec::new(), names: Vec::new() };
    let mut fam_ids = [[0usize; GALOIS_ORDER as usize]; 4];
    for (slot, (label, f)) in families.iter().enumerate() {
        for nu in 1..=GALOIS_ORDER {
            let g = f.galois(&GaloisMap::new(field, nu as i64)?)?.monic_part()?;
            fam_ids[slot][nu as usize - 1] = classes.id(&g, || format!("sigma_{nu}({label})"));
        }
    }
    report.distinct_family_conjugates = classes.polys.len();

    let mut junk = [Vec::new(), Vec::new()];
    for (k, n) in [alpha, beta].into_iter().enumerate() {
        if n == 1 {
            continue;
        }
        let j = LaurentPoly::from_ints(field, 0, &vec![1; n as usize]);
        let cert = factor_cyclotomic(&j)?;
        for (p, m) in cert.factors() {
            let id = classes.id(p, || format!("factor of (1 - t^{n})/(1 - t): {p}"));
            junk[k].push((id, *m));
        }
        report
            .assumptions
            .push(format!("(1 - t^{n})/(1 - t) has {} irreducible factor(s) over Q(omega_13)", cert.factors().len()));
    }
    report
        .assumptions
        .push("(Δ_J(t^alpha) Δ_J(t^beta))^2 is a square of a rational polynomial, hence a norm; skipped".into());

    let base = classes.polys.len();
    let mut iota = Vec::with_capacity(base);
    for i in 0..base {
        let image = classes.polys[i].conj_reciprocal()?;
        let name = format!("iota({})", classes.names[i]);
        iota.push(classes.id(&image, || name));
    }

    let mut mult = vec![0u32; classes.polys.len()];
    let mut patterns: Vec<[u8; 4]> = (1u8..16).map(|c| [c & 1, (c >> 1) & 1, (c >> 2) & 1, (c >> 3) & 1]).collect();
    patterns.sort_by_key(|e| e[0] as u32 + 2 * e[1] as u32 + 4 * e[2] as u32 + 8 * e[3] as u32);
    for exps in patterns {
        let ranges: Vec<u32> = exps.iter().map(|&e| if e == 1 { GALOIS_ORDER } else { 1 }).collect();
        for a in 1..=ranges[0] {
            for b in 1..=ranges[1] {
                for c in 1..=ranges[2] {
                    for d in 1..=ranges[3] {
                        let galois = [a, b, c, d];
                        report.selectors_evaluated += 1;
                        let mut touched = Vec::with_capacity(8);
                        for slot in 0..4 {
                            if exps[slot] == 1 {
                                let id = fam_ids[slot][galois[slot] as usize - 1];
                                mult[id] += 1;
                                touched.push(id);
                            }
                        }
                        let counts = [(exps[0] + exps[1]) as u32, (exps[2] + exps[3]) as u32];
                        for k in 0..2 {
                            if counts[k] > 0 {
                                for &(id, m) in &junk[k] {
                                    mult[id] += m * counts[k];
                                    touched.push(id);
                                }
                            }
                        }
                        touched.sort_unstable();
                        touched.dedup();
                        let is_norm = touched.iter().all(|&id| {
                            let j = iota[id];
                            if j == id {
                                mult[id].is_multiple_of(2)
                            } else {
                                mult.get(j).copied().unwrap_or(0) == mult[id]
                            }
                        });
                        if is_norm {
                            let pairing = touched
                                .iter()
                                .map(|&id| {
                                    let j = iota[id];
                                    if j == id {
                                        format!("{} x{}: self-paired", classes.names[id], mult[id])
                                    } else {
                                        format!("{} x{}: paired with {}", classes.names[id], mult[id], classes.names[j])
                                    }
                                })
                                .collect();
                            report.verdict = Verdict::NormWitnessFound;
                            report.witness =
                                Some(Witness { selector: EqOneSelector::new(alpha, beta, exps, galois)?, pairing });
                            return Ok(report);
                        }
                        for &id in &touched {
                            mult[id] = 0;
                        }
                    }
                }
            }
        }
    }
    report.verdict = Verdict::Obstructed;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factor::irreducibility_certificate;

    fn certs(alpha: u32, beta: u32) -> [FactorizationCertificate; 4] {
        SLOTS.map(|(family, second)| {
            let f = family_polynomial(family, if second { beta } else { alpha }).unwrap();
            irreducibility_certificate(&f).unwrap().1
        })
    }

    #[test]
    fn base_pair_is_obstructed() {
        let r = certify_pair_with(1, 1, &certs(1, 1)).unwrap();
        // α = β: the diagonal product σ_a(Δ_3)^2 is a norm.
        assert_eq!(r.verdict, Verdict::NormWitnessFound);
        let s = r.witness.unwrap().selector;
        assert_eq!((s.x, s.y, s.z, s.w), (1, 0, 1, 0));
        assert_eq!(s.a, s.c);
    }

    #[test]
    fn distinct_exponents() {
        let r = certify_pair_with(1, 5, &certs(1, 5)).unwrap();
        assert_eq!(r.verdict, Verdict::Obstructed);
        assert_eq!(r.selectors_evaluated, 4 * 12 + 6 * 144 + 4 * 1728 + 20736);
        assert_eq!(r.selectors_total, 311_040);
        // The coefficients lie in the cubic subfield, so each family has three conjugates.
        assert_eq!(r.distinct_family_conjugates, 12);
    }

    #[test]
    fn preconditions_and_tampering() {
        assert!(check_pair(3, 5).is_err());
        assert!(check_pair(5, 4).is_err());
        assert!(check_pair(5, 7).is_ok());
        let mut c = certs(1, 1);
        c.swap(0, 1);
        assert!(matches!(certify_pair_with(1, 1, &c), Err(Error::Certificate(_))));
        assert!(EqOneSelector::new(5, 7, [0, 0, 0, 0], [1; 4]).is_err());
        assert!(EqOneSelector::new(5, 7, [1, 0, 0, 0], [13, 1, 1, 1]).is_err());
    }
}
