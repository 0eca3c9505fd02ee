//! JSON-lines output helpers shared by the library and the command line.

use num_rational::Ratio;
use serde::Serialize;

/// Bumped whenever a field of a serialized report changes meaning.
pub const SCHEMA_VERSION: u32 = 1;

pub fn ratio_string(r: Ratio<u64>) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// One compact JSON object, no trailing newline.
pub fn json_line<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("report types serialize infallibly")
}

/// Integers outside the `f64`-safe range are emitted as decimal strings.
pub fn decimal_strings<I: IntoIterator<Item = i128>>(values: I) -> Vec<String> {
    values.into_iter().map(|v| v.to_string()).collect()
}
