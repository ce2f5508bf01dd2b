//! The structured report printed by `--json`.

use serde::Serialize;
use serde_json::{json, Value};
use slicecert::data::{format_element, serialize_poly};
use slicecert::{CycNum, Error, LaurentPoly};

/// Top-level `--json` output. Field order is fixed; only `elapsed_ms` varies
/// between identical runs.
#[derive(Debug, Serialize)]
pub struct CommandReport {
    pub command: String,
    pub inputs: Value,
    pub result: Value,
    pub certified: bool,
    pub elapsed_ms: u64,
}

/// What a subcommand produced, before timing.
pub struct Outcome {
    pub command: String,
    pub inputs: Value,
    pub result: Value,
    pub certified: bool,
    pub text: String,
}

pub fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Internal(_) => 1,
        _ => 2,
    }
}

/// A polynomial as its canonical document plus a readable form.
pub fn poly_value(f: &LaurentPoly) -> Value {
    let doc: Value = serde_json::from_str(&serialize_poly(f)).expect("canonical document is JSON");
    json!({ "display": f.to_string(), "document": doc })
}

pub fn element_value(c: &CycNum) -> Value {
    json!({ "display": c.to_string(), "coordinates": format_element(c) })
}
