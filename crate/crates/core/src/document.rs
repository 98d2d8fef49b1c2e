//! JSON form of a completed design.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::band::{Band, BandMapping};
use crate::design::{DesignSpec, FilterDesign};
use crate::error::{Error, Result};
use crate::prototype::{DesignTrace, Family, PoleZeroSet, PrototypeSpec};
use crate::response::RationalResponse;

/// Serialized design. Coefficient vectors are in ascending powers of
/// `λ / lambda_ref` (prototype variable) and include the gain in the
/// numerator; they are `null` for orders where they are not formed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DesignDocument {
    pub spec: DesignSpec,
    pub family: Family,
    pub band: Band,
    pub order: usize,
    pub composed_order: usize,
    pub poles: Vec<[f64; 2]>,
    pub zeros: Vec<[f64; 2]>,
    pub gain: f64,
    pub num_coeffs: Option<Vec<f64>>,
    pub den_coeffs: Option<Vec<f64>>,
    pub lambda_ref: f64,
    pub prototype: PrototypeSpec,
    pub mapping: BandMapping,
    pub trace: DesignTrace,
}

fn pairs(v: &[Complex64]) -> Vec<[f64; 2]> {
    v.iter().map(|z| [z.re, z.im]).collect()
}

fn complex(v: &[[f64; 2]]) -> Vec<Complex64> {
    v.iter().map(|&[re, im]| Complex64::new(re, im)).collect()
}

impl DesignDocument {
    pub fn from_design(d: &FilterDesign) -> Self {
        let set = d.pole_zero();
        let r = d.rational();
        Self {
            spec: *d.spec(),
            family: d.family(),
            band: d.band(),
            order: d.order(),
            composed_order: d.composed_order(),
            poles: pairs(&set.poles),
            zeros: pairs(&set.zeros),
            gain: set.gain,
            num_coeffs: r.num_coeffs().map(<[f64]>::to_vec),
            den_coeffs: r.den_coeffs().map(<[f64]>::to_vec),
            lambda_ref: r.lambda_ref(),
            prototype: *d.prototype(),
            mapping: d.mapping().clone(),
            trace: d.trace().clone(),
        }
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("design document: {e}")))
    }

    /// Rebuilds the design. The response is recomposed from the stored
    /// poles and zeros, so it evaluates bit-for-bit as the original did.
    pub fn into_design(self) -> Result<FilterDesign> {
        let inconsistent = |what: &str| Error::Parse(format!("design document: inconsistent {what}"));
        if self.poles.len() != 2 * self.order || self.composed_order != 2 * self.order {
            return Err(inconsistent("order and pole count"));
        }
        if self.family != self.spec.family || self.band != self.spec.band.band() {
            return Err(inconsistent("family or band"));
        }
        if self.mapping.kind != self.band {
            return Err(inconsistent("band mapping"));
        }
        let set = PoleZeroSet {
            poles: complex(&self.poles),
            zeros: complex(&self.zeros),
            order: self.order,
            gain: self.gain,
        };
        let response = RationalResponse::compose(&set, self.lambda_ref)?;
        Ok(FilterDesign::from_parts(
            self.spec,
            self.mapping,
            self.prototype,
            self.trace,
            response,
        ))
    }
}
