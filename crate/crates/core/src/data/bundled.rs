//! The bundled `8_17` polynomials: the Alexander polynomial and the twisted
//! polynomials for the trivial character and the two characters of the
//! 3-fold branched cover onto ℤ₁₃.

use std::fmt;

use serde::Serialize;

use super::format::{parse_poly, sha256_hex};
use crate::error::{Error, Result};
use crate::poly::LaurentPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Character {
    /// Untwisted (Alexander polynomial).
    Plain,
    Rho0,
    Rho3,
    Rho9,
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Character::Plain => "plain",
            Character::Rho0 => "rho0",
            Character::Rho3 => "rho3",
            Character::Rho9 => "rho9",
        })
    }
}

/// A named polynomial with where it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedPolyRecord {
    pub name: String,
    pub poly: LaurentPoly,
    pub knot: String,
    pub cover_degree: u32,
    pub character: Character,
    pub character_modulus: u32,
    /// Factors `(1 - t)` removed before the polynomial was written down.
    pub stripped_1_minus_t: u32,
}

struct Entry {
    name: &'static str,
    text: &'static str,
    sha256: &'static str,
    cover_degree: u32,
    character: Character,
    stripped: u32,
}

const ENTRIES: [Entry; 4] = [
    Entry {
        name: "8_17.alex",
        text: include_str!("../../../../data/8_17.alex"),
        sha256: "2c1697b6b489ec2ae9e8f15072a2bf95076431cabc138daed62ea53c32dfee42",
        cover_degree: 1,
        character: Character::Plain,
        stripped: 0,
    },
    Entry {
        name: "8_17.rho0",
        text: include_str!("../../../../data/8_17.rho0"),
        sha256: "98ea30260b0306b8a36133b253d598483ba2cfb72741691ae28e7b04b87719af",
        cover_degree: 3,
        character: Character::Rho0,
        stripped: 0,
    },
    Entry {
        name: "8_17.rho3",
        text: include_str!("../../../../data/8_17.rho3"),
        sha256: "bc2237cf96fd860a5b596a08ffe8fdcfc76e9ac5c77018f2190d193e6daba2ad",
        cover_degree: 3,
        character: Character::Rho3,
        stripped: 1,
    },
    Entry {
        name: "8_17.rho9",
        text: include_str!("../../../../data/8_17.rho9"),
        sha256: "ee981aa458ca02917ee6b8e8c578418341ba3a77a5ebeda95e876256e77f5724",
        cover_degree: 3,
        character: Character::Rho9,
        stripped: 1,
    },
];

pub fn bundled_names() -> Vec<&'static str> {
    ENTRIES.iter().map(|e| e.name).collect()
}

/// Raw document text of a bundled polynomial.
pub fn bundled_text(name: &str) -> Result<&'static str> {
    ENTRIES.iter().find(|e| e.name == name).map(|e| e.text).ok_or_else(|| Error::UnknownName(name.to_string()))
}

/// Recorded SHA-256 of a bundled document.
pub fn bundled_checksum(name: &str) -> Result<&'static str> {
    ENTRIES.iter().find(|e| e.name == name).map(|e| e.sha256).ok_or_else(|| Error::UnknownName(name.to_string()))
}

pub fn bundled_poly(name: &str) -> Result<TwistedPolyRecord> {
    let e = ENTRIES.iter().find(|e| e.name == name).ok_or_else(|| Error::UnknownName(name.to_string()))?;
    if sha256_hex(e.text.as_bytes()) != e.sha256 {
        return Err(Error::Internal(format!("bundled file {name} does not match its checksum")));
    }
    Ok(TwistedPolyRecord {
        name: e.name.to_string(),
        poly: parse_poly(e.text)?,
        knot: "8_17".to_string(),
        cover_degree: e.cover_degree,
        character: e.character,
        character_modulus: 13,
        stripped_1_minus_t: e.stripped,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::{CycField, CycNum, GaloisMap, Rational};

    fn normal(c: &CycNum) -> Vec<i64> {
        c.normal_coords().iter().map(|q| i64::try_from(q.to_integer()).unwrap()).collect()
    }

    #[test]
    fn checksums_match() {
        for name in bundled_names() {
            assert_eq!(sha256_hex(bundled_text(name).unwrap().as_bytes()), bundled_checksum(name).unwrap());
        }
    }

    #[test]
    fn alexander_polynomial() {
        let r = bundled_poly("8_17.alex").unwrap();
        assert_eq!(r.poly, LaurentPoly::from_ints(CycField::RATIONALS, 0, &[1, -4, 8, -11, 8, -4, 1]));
        assert_eq!(r.character, Character::Plain);
        assert_eq!(
            r.poly.evaluate_rational(&Rational::from_integer(1.into())).unwrap(),
            CycNum::from_int(CycField::RATIONALS, -1)
        );
        assert!(r.poly.is_palindromic());
    }

    #[test]
    fn rho0_transcription() {
        let r = bundled_poly("8_17.rho0").unwrap();
        assert_eq!(r.poly, LaurentPoly::from_ints(CycField::RATIONALS, 0, &[1, -1, -34, -101, -34, -1, 1]));
        assert_eq!(r.stripped_1_minus_t, 0);
    }

    #[test]
    fn rho3_rho9_transcription() {
        let r3 = bundled_poly("8_17.rho3").unwrap();
        let r9 = bundled_poly("8_17.rho9").unwrap();
        assert_eq!(r3.stripped_1_minus_t, 1);
        assert_eq!((r3.knot.as_str(), r3.cover_degree, r3.character_modulus), ("8_17", 3, 13));
        let p3 = &r3.poly;
        assert_eq!(p3.span(), 4);
        assert!(p3.coeff(0).is_one() && p3.coeff(4).is_one());
        assert_eq!(normal(&p3.coeff(1)), vec![2, 2, 2, 4, 2, 2, 1, 1, 2, 4, 1, 4]);
        assert_eq!(normal(&p3.coeff(2)), vec![-15, -10, -15, -15, -10, -10, -10, -10, -15, -15, -10, -15]);
        assert_eq!(normal(&p3.coeff(3)), vec![4, 1, 4, 2, 1, 1, 2, 2, 4, 2, 2, 2]);
        // In the power basis 1, ω, …, ω^11 the ω^4 coordinate is 4 - 4.
        assert!(p3.coeff(1).coords()[4] == Rational::from_integer(0.into()));
        let p9 = &r9.poly;
        assert_eq!(normal(&p9.coeff(1)), vec![6, 5, 6, 6, 5, 5, 5, 5, 6, 6, 5, 6]);
        assert_eq!(normal(&p9.coeff(2)), vec![-13, -12, -13, -13, -12, -12, -12, -12, -13, -13, -12, -13]);
        assert_eq!(p9.coeff(3), p9.coeff(1));
    }

    #[test]
    fn conjugate_self_reciprocal_and_not_conjugate() {
        let p3 = bundled_poly("8_17.rho3").unwrap().poly;
        let p9 = bundled_poly("8_17.rho9").unwrap().poly;
        assert!(p3.is_conj_self_reciprocal());
        assert!(p9.is_conj_self_reciprocal());
        assert_eq!(p3.coeff(3), p3.coeff(1).conj());
        let k = p3.field();
        for nu in 1..13 {
            let s = p3.galois(&GaloisMap::new(k, nu).unwrap()).unwrap();
            assert!(!s.is_associate(&p9), "sigma_{nu}");
        }
        assert!(p3.gcd(&p9).unwrap().is_one());
    }

    #[test]
    fn unknown_name() {
        assert_eq!(bundled_poly("8_17.rho5"), Err(Error::UnknownName("8_17.rho5".into())));
    }
}
