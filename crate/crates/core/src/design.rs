//! End-to-end design: band specification → prototype → composed response.

use serde::{Deserialize, Serialize};

use crate::band::{transform_variable, Band, BandMapping, BandSpec};
use crate::error::{spec, Error, Result};
use crate::prototype::{design_prototype, DesignTrace, Family, PoleZeroSet, PrototypeSpec};
use crate::response::{attenuation_db, RationalResponse};

/// Largest order the designer will build.
pub const MAX_ORDER: usize = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DesignSpec {
    pub family: Family,
    #[serde(flatten)]
    pub band: BandSpec,
    pub rp_db: f64,
    pub as_db: f64,
    #[serde(default)]
    pub order_override: Option<usize>,
}

impl DesignSpec {
    pub fn highpass(family: Family, lambda_p: f64, lambda_s: f64, rp_db: f64, as_db: f64) -> Self {
        Self {
            family,
            band: BandSpec::HighPass { lambda_p, lambda_s },
            rp_db,
            as_db,
            order_override: None,
        }
    }

    pub fn with_order(mut self, order: usize) -> Self {
        self.order_override = Some(order);
        self
    }

    /// Prototype specification after the band mapping.
    pub fn prototype(&self) -> Result<(PrototypeSpec, BandMapping)> {
        if self.order_override == Some(0) {
            return Err(spec("order override must be positive"));
        }
        let mapping = self.band.mapping()?;
        let proto = PrototypeSpec {
            family: self.family,
            lambda_p: mapping.proto_lambda_p,
            lambda_s: mapping.proto_lambda_s,
            rp_db: self.rp_db,
            as_db: self.as_db,
        };
        proto.validate()?;
        Ok((proto, mapping))
    }
}

/// A completed design.
#[derive(Debug, Clone, PartialEq)]
pub struct FilterDesign {
    spec: DesignSpec,
    mapping: BandMapping,
    prototype: PrototypeSpec,
    trace: DesignTrace,
    response: RationalResponse,
}

/// Attenuation at one declared band edge.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EdgeAttenuation {
    pub lambda: f64,
    pub attenuation_db: f64,
    pub passband: bool,
}

/// Designs the filter described by `spec`.
pub fn design(spec: &DesignSpec) -> Result<FilterDesign> {
    let (prototype, mapping) = spec.prototype()?;
    if let Some(n) = spec.order_override {
        check_order(n)?;
    }
    let (set, trace) = design_prototype_checked(&prototype, spec.order_override)?;
    let response = RationalResponse::compose(&set, prototype.lambda_p)?;
    response.check_stability()?;
    Ok(FilterDesign {
        spec: *spec,
        mapping,
        prototype,
        trace,
        response,
    })
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_ORDER {
        return Err(Error::Degenerate(format!(
            "order {n} exceeds the supported maximum {MAX_ORDER}"
        )));
    }
    Ok(())
}

fn design_prototype_checked(
    proto: &PrototypeSpec,
    order: Option<usize>,
) -> Result<(PoleZeroSet, DesignTrace)> {
    if order.is_none() {
        let (n, _) = crate::prototype::min_order(proto)?;
        check_order(n)?;
    }
    design_prototype(proto, order)
}

impl FilterDesign {
    pub(crate) fn from_parts(
        spec: DesignSpec,
        mapping: BandMapping,
        prototype: PrototypeSpec,
        trace: DesignTrace,
        response: RationalResponse,
    ) -> Self {
        Self {
            spec,
            mapping,
            prototype,
            trace,
            response,
        }
    }

    pub fn spec(&self) -> &DesignSpec {
        &self.spec
    }

    pub fn family(&self) -> Family {
        self.spec.family
    }

    pub fn band(&self) -> Band {
        self.mapping.kind
    }

    pub fn mapping(&self) -> &BandMapping {
        &self.mapping
    }

    pub fn prototype(&self) -> &PrototypeSpec {
        &self.prototype
    }

    pub fn trace(&self) -> &DesignTrace {
        &self.trace
    }

    /// Composed prototype response (in the prototype variable).
    pub fn rational(&self) -> &RationalResponse {
        &self.response
    }

    pub fn pole_zero(&self) -> &PoleZeroSet {
        self.response.source()
    }

    pub fn order(&self) -> usize {
        self.pole_zero().order
    }

    pub fn composed_order(&self) -> usize {
        2 * self.order()
    }

    /// Whether the response is the prototype itself (no band mapping), the
    /// only case that can be applied as a rational function of `L`.
    pub fn is_prototype(&self) -> bool {
        self.mapping.kind == Band::HighPass
    }

    /// `H(λ)` in the graph-frequency variable.
    pub fn response(&self, lambda: f64) -> f64 {
        if self.is_prototype() {
            self.response.evaluate(lambda)
        } else {
            self.response.evaluate(transform_variable(lambda, &self.mapping))
        }
    }

    pub fn attenuation_db(&self, lambda: f64) -> f64 {
        attenuation_db(self.response(lambda))
    }

    /// Attenuation at every declared passband and stopband edge.
    pub fn edge_report(&self) -> Vec<EdgeAttenuation> {
        let pass = self.spec.band.passband_edges().into_iter().map(|l| (l, true));
        let stop = self.spec.band.stopband_edges().into_iter().map(|l| (l, false));
        pass.chain(stop)
            .map(|(lambda, passband)| EdgeAttenuation {
                lambda,
                attenuation_db: self.attenuation_db(lambda),
                passband,
            })
            .collect()
    }

    /// Whether every edge meets its attenuation bound within `slack_db`.
    pub fn meets_spec(&self, slack_db: f64) -> bool {
        self.edge_report().iter().all(|e| {
            if e.passband {
                e.attenuation_db <= self.spec.rp_db + slack_db
            } else {
                e.attenuation_db >= self.spec.as_db - slack_db
            }
        })
    }
}
