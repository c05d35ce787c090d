use serde_json::{json, Value};

use seqforge_core::corr::GaussianInt;
use seqforge_core::error::{Error, Result};
use seqforge_core::fields::BinaryFieldSpec;

pub(crate) fn gaussian_json(v: GaussianInt) -> Value {
    json!({ "re": v.re, "im": v.im })
}

pub(crate) fn field_from_options(m: usize, poly: Option<&str>) -> Result<BinaryFieldSpec> {
    match poly {
        Some(bits) => {
            let field = BinaryFieldSpec::from_bit_string(bits)?;
            if field.degree() != m {
                return Err(Error::InvalidParameter(format!(
                    "polynomial {bits} has degree {}, expected {m}",
                    field.degree()
                )));
            }
            Ok(field)
        }
        None => BinaryFieldSpec::with_default_polynomial(m),
    }
}

/// First index where two symbol slices differ.
pub(crate) fn first_diff(a: &[u8], b: &[u8]) -> Option<usize> {
    if a.len() != b.len() {
        return Some(a.len().min(b.len()));
    }
    a.iter().zip(b).position(|(x, y)| x != y)
}
