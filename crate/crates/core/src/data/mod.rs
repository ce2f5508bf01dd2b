//! Polynomial documents, certificate files and the bundled `8_17` data.

mod bundled;
mod certificate;
mod format;

pub use bundled::{bundled_checksum, bundled_names, bundled_poly, bundled_text, Character, TwistedPolyRecord};
pub use certificate::{
    certificate_file_name, certificate_path, load_certificate, parse_certificate, serialize_certificate,
    store_certificate, CERTIFICATE_FORMAT,
};
pub use format::{
    format_element, format_rational, parse_point, parse_poly, parse_rational, poly_checksum, serialize_poly,
    sha256_hex, MAX_ABS_MIN_DEGREE, MAX_COEFFICIENTS, MAX_DIGITS,
};
