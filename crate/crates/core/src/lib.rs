//! Exact algebra for Casson–Gordon style slice obstructions.
//!
//! The crate is layered bottom-up:
//!
//! * [`cyclo`]: exact arithmetic in ℚ and in prime-conductor cyclotomic
//!   fields ℚ(ω_p), Galois maps, norms and certified complex embeddings.
//! * [`poly`]: Laurent polynomials over those fields, normalization up to
//!   units `a·t^k`, gcd, resultants, evaluation.
//! * [`factor`]: factorization over ℚ (Zassenhaus) and over ℚ(ω_p)
//!   (Trager's norm method) with re-multiplication checked certificates.
//! * [`roots`]: Sturm counting, the `x = t + 1/t` transform and unit circle
//!   root counting.
//! * [`obstruction`]: branched cover orders, satellite formulas, the norm
//!   form test, prime screening and the pairwise product enumeration.
//! * [`data`]: the polynomial file format, certificate files and the
//!   bundled `8_17` polynomials.

pub mod cyclo;
pub mod data;
mod dense;
mod error;
pub mod factor;
pub mod interval;
pub mod obstruction;
pub mod poly;
pub mod roots;

pub use cyclo::{CycField, CycNum, GaloisMap, Rational};
pub use error::{Error, Result};
pub use factor::FactorizationCertificate;
pub use poly::{LaurentPoly, NormalForm};
