//! Reduction of low-pass, band-pass and band-stop specifications to the
//! decaying prototype, and the matching frequency substitution.

use serde::{Deserialize, Serialize};

use crate::error::{spec, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Band {
    HighPass,
    LowPass,
    BandPass,
    BandStop,
}

impl Band {
    pub fn name(&self) -> &'static str {
        match self {
            Band::HighPass => "highpass",
            Band::LowPass => "lowpass",
            Band::BandPass => "bandpass",
            Band::BandStop => "bandstop",
        }
    }
}

impl std::fmt::Display for Band {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Band {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [Band::HighPass, Band::LowPass, Band::BandPass, Band::BandStop]
            .into_iter()
            .find(|b| b.name() == s.to_ascii_lowercase())
            .ok_or_else(|| spec(format!("unknown band type '{s}'")))
    }
}

/// Cutoffs of a band specification.
///
/// Band-pass edges are `(λ_s1, λ_p1, λ_p2, λ_s2)`, band-stop edges
/// `(λ_p1, λ_s1, λ_s2, λ_p2)`; both strictly increasing.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "band", rename_all = "lowercase")]
pub enum BandSpec {
    HighPass { lambda_p: f64, lambda_s: f64 },
    LowPass { lambda_p: f64, lambda_s: f64 },
    BandPass { edges: [f64; 4] },
    BandStop { edges: [f64; 4] },
}

impl BandSpec {
    pub fn band(&self) -> Band {
        match self {
            BandSpec::HighPass { .. } => Band::HighPass,
            BandSpec::LowPass { .. } => Band::LowPass,
            BandSpec::BandPass { .. } => Band::BandPass,
            BandSpec::BandStop { .. } => Band::BandStop,
        }
    }

    pub fn mapping(&self) -> Result<BandMapping> {
        match *self {
            BandSpec::HighPass { lambda_p, lambda_s } => map_highpass(lambda_p, lambda_s),
            BandSpec::LowPass { lambda_p, lambda_s } => map_lowpass(lambda_p, lambda_s),
            BandSpec::BandPass { edges } => map_bandpass(edges),
            BandSpec::BandStop { edges } => map_bandstop(edges),
        }
    }

    /// Declared passband and stopband edges in the graph-frequency variable.
    pub fn passband_edges(&self) -> Vec<f64> {
        match *self {
            BandSpec::HighPass { lambda_p, .. } | BandSpec::LowPass { lambda_p, .. } => {
                vec![lambda_p]
            }
            BandSpec::BandPass { edges } => vec![edges[1], edges[2]],
            BandSpec::BandStop { edges } => vec![edges[0], edges[3]],
        }
    }

    pub fn stopband_edges(&self) -> Vec<f64> {
        match *self {
            BandSpec::HighPass { lambda_s, .. } | BandSpec::LowPass { lambda_s, .. } => {
                vec![lambda_s]
            }
            BandSpec::BandPass { edges } => vec![edges[0], edges[3]],
            BandSpec::BandStop { edges } => vec![edges[1], edges[2]],
        }
    }
}

/// A band specification reduced to prototype cutoffs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BandMapping {
    pub kind: Band,
    /// Source cutoffs in the order they were given.
    pub params: Vec<f64>,
    pub proto_lambda_p: f64,
    pub proto_lambda_s: f64,
}

impl BandMapping {
    /// `λ_p1·λ_p2` for band-pass, `λ_s1·λ_s2` for band-stop.
    fn centre_sq(&self) -> f64 {
        match self.kind {
            Band::BandPass => self.params[1] * self.params[2],
            Band::BandStop => self.params[1] * self.params[2],
            _ => 0.0,
        }
    }

    /// Geometric band centre, where the substitution is `0` (band-pass) or
    /// singular (band-stop).
    pub fn centre(&self) -> Option<f64> {
        matches!(self.kind, Band::BandPass | Band::BandStop).then(|| self.centre_sq().sqrt())
    }
}

fn check_cutoff(name: &str, v: f64) -> Result<()> {
    if v.is_finite() && v > 0.0 {
        Ok(())
    } else {
        Err(spec(format!("{name} = {v} must be positive and finite")))
    }
}

fn check_increasing(edges: &[f64; 4], names: [&str; 4]) -> Result<()> {
    for (v, n) in edges.iter().zip(names) {
        check_cutoff(n, *v)?;
    }
    for i in 0..3 {
        if edges[i] >= edges[i + 1] {
            return Err(spec(format!(
                "band edges must satisfy {} < {} < {} < {}; got {:?}",
                names[0], names[1], names[2], names[3], edges
            )));
        }
    }
    Ok(())
}

fn finish(kind: Band, params: Vec<f64>, lp: f64, ls: f64) -> Result<BandMapping> {
    if lp == ls {
        return Err(Error::Degenerate(format!(
            "{kind} edges map to coinciding prototype cutoffs {lp}"
        )));
    }
    if lp > ls {
        return Err(spec(format!(
            "{kind} edges map to prototype lambda_p = {lp} >= lambda_s = {ls}"
        )));
    }
    Ok(BandMapping {
        kind,
        params,
        proto_lambda_p: lp,
        proto_lambda_s: ls,
    })
}

/// Identity mapping for a prototype specification.
pub fn map_highpass(lambda_p: f64, lambda_s: f64) -> Result<BandMapping> {
    check_cutoff("lambda_p", lambda_p)?;
    check_cutoff("lambda_s", lambda_s)?;
    finish(Band::HighPass, vec![lambda_p, lambda_s], lambda_p, lambda_s)
}

/// `λ ↦ 1/λ`: prototype cutoffs are the reciprocals of the given ones.
pub fn map_lowpass(lambda_p_lp: f64, lambda_s_lp: f64) -> Result<BandMapping> {
    check_cutoff("lambda_p", lambda_p_lp)?;
    check_cutoff("lambda_s", lambda_s_lp)?;
    finish(
        Band::LowPass,
        vec![lambda_p_lp, lambda_s_lp],
        1.0 / lambda_p_lp,
        1.0 / lambda_s_lp,
    )
}

/// `λ ↦ |λ - λ_p1·λ_p2/λ|` for edges `(λ_s1, λ_p1, λ_p2, λ_s2)`.
pub fn map_bandpass(edges: [f64; 4]) -> Result<BandMapping> {
    check_increasing(&edges, ["lambda_s1", "lambda_p1", "lambda_p2", "lambda_s2"])?;
    let [s1, p1, p2, s2] = edges;
    let c = p1 * p2;
    let lp = p2 - p1;
    let ls = (s1 - c / s1).abs().min((s2 - c / s2).abs());
    finish(Band::BandPass, edges.to_vec(), lp, ls)
}

/// `λ ↦ 1/|λ - λ_s1·λ_s2/λ|` for edges `(λ_p1, λ_s1, λ_s2, λ_p2)`.
///
/// The prototype passband edge is the larger of the two passband images, so
/// both declared passband edges land inside the prototype passband.
pub fn map_bandstop(edges: [f64; 4]) -> Result<BandMapping> {
    check_increasing(&edges, ["lambda_p1", "lambda_s1", "lambda_s2", "lambda_p2"])?;
    let [p1, s1, s2, p2] = edges;
    let c = s1 * s2;
    let ls = 1.0 / (s2 - s1);
    let lp = (1.0 / (p1 - c / p1).abs()).max(1.0 / (p2 - c / p2).abs());
    finish(Band::BandStop, edges.to_vec(), lp, ls)
}

/// Prototype frequency `|T(λ)|` for graph frequency `λ`.
///
/// Points where the substitution blows up (λ = 0 for low-pass and
/// band-pass, the band-stop centre) give `+∞`.
pub fn transform_variable(lambda: f64, mapping: &BandMapping) -> f64 {
    match mapping.kind {
        Band::HighPass => lambda.abs(),
        Band::LowPass => 1.0 / lambda.abs(),
        Band::BandPass => (lambda - mapping.centre_sq() / lambda).abs(),
        Band::BandStop => 1.0 / (lambda - mapping.centre_sq() / lambda).abs(),
    }
}
