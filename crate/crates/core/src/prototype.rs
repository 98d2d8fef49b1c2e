//! Decaying ("high-pass") prototype design for the four families.
//!
//! Every prototype has the squared-magnitude form
//!
//! ```text
//! H(λ) = 1 / (1 + ε_p² F²(λ / λ_p))
//! ```
//!
//! with `F` the Butterworth, Chebyshev or elliptic rational function. The
//! functions here produce the full set of `2N` poles (and the finite zeros)
//! of `H`, which is the product of a filter built from the upper-half-plane
//! poles and its conjugate.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::error::{domain, spec, Error, Result};
use crate::special::{
    adjust_modulus_cheb2, adjust_modulus_elliptic, complete_elliptic_k, complete_elliptic_k_comp,
    inverse_sn, jacobi_cd, Modulus,
};

/// A bound this close to an integer is taken as that integer, not rounded up.
const ORDER_SNAP: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Butterworth,
    #[serde(rename = "chebyshev1")]
    ChebyshevI,
    #[serde(rename = "chebyshev2")]
    ChebyshevII,
    Elliptic,
}

impl Family {
    pub const ALL: [Family; 4] = [
        Family::Butterworth,
        Family::ChebyshevI,
        Family::ChebyshevII,
        Family::Elliptic,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Family::Butterworth => "butterworth",
            Family::ChebyshevI => "chebyshev1",
            Family::ChebyshevII => "chebyshev2",
            Family::Elliptic => "elliptic",
        }
    }

    /// Whether the response has finite transfer zeros.
    pub fn has_zeros(&self) -> bool {
        matches!(self, Family::ChebyshevII | Family::Elliptic)
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s.to_ascii_lowercase())
            .ok_or_else(|| spec(format!("unknown filter family '{s}'")))
    }
}

/// Band specification of the decaying prototype: passband `[0, λ_p]`,
/// stopband `[λ_s, ∞)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PrototypeSpec {
    pub family: Family,
    pub lambda_p: f64,
    pub lambda_s: f64,
    pub rp_db: f64,
    pub as_db: f64,
}

impl PrototypeSpec {
    pub fn validate(&self) -> Result<()> {
        let (lp, ls) = (self.lambda_p, self.lambda_s);
        if !(lp.is_finite() && lp > 0.0) {
            return Err(spec(format!("passband edge lambda_p = {lp} must be positive")));
        }
        if !(ls.is_finite() && ls > 0.0) {
            return Err(spec(format!("stopband edge lambda_s = {ls} must be positive")));
        }
        if lp == ls {
            return Err(Error::Degenerate(format!(
                "lambda_p = lambda_s = {lp} needs an infinite order"
            )));
        }
        if lp > ls {
            return Err(spec(format!(
                "prototype needs lambda_p < lambda_s, got {lp} >= {ls}"
            )));
        }
        check_attenuations(self.rp_db, self.as_db)
    }

    /// `k = λ_p / λ_s`.
    pub fn selectivity(&self) -> Result<Modulus> {
        Modulus::from_ratio(self.lambda_p, self.lambda_s)
    }
}

fn check_attenuations(rp_db: f64, as_db: f64) -> Result<()> {
    if !(rp_db.is_finite() && rp_db > 0.0) {
        return Err(spec(format!("passband attenuation Rp = {rp_db} dB must be positive")));
    }
    if !(as_db.is_finite() && as_db > rp_db) {
        return Err(spec(format!(
            "stopband attenuation As = {as_db} dB must exceed Rp = {rp_db} dB"
        )));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RippleParams {
    pub eps_p: f64,
    pub eps_s: f64,
    /// Discrimination `k₁ = ε_p / ε_s`.
    pub k1: f64,
}

impl RippleParams {
    /// `k₁` as a modulus, with `k₁'` computed without cancellation.
    pub fn discrimination(&self) -> Result<Modulus> {
        Modulus::from_ratio(self.eps_p, self.eps_s)
    }
}

/// Ripple parameters for a maximum passband attenuation `rp_db` and a
/// minimum stopband attenuation `as_db`:
/// `ε = √(10^(A/20) - 1)`.
pub fn ripple_from_attenuation(rp_db: f64, as_db: f64) -> Result<RippleParams> {
    check_attenuations(rp_db, as_db)?;
    let eps = |a: f64| (a / 20.0 * std::f64::consts::LN_10).exp_m1().sqrt();
    let (eps_p, eps_s) = (eps(rp_db), eps(as_db));
    Ok(RippleParams {
        eps_p,
        eps_s,
        k1: eps_p / eps_s,
    })
}

/// Poles and finite zeros of a prototype response.
///
/// The response is `gain · Π(1 - λ/zᵢ) / Π(1 - λ/pᵢ)`, so `gain = H(0)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PoleZeroSet {
    pub poles: Vec<Complex64>,
    pub zeros: Vec<Complex64>,
    pub order: usize,
    pub gain: f64,
}

impl PoleZeroSet {
    pub fn composed_order(&self) -> usize {
        2 * self.order
    }

    /// Smallest `|Im p|` over all poles.
    pub fn min_pole_imag(&self) -> f64 {
        self.poles
            .iter()
            .map(|p| p.im.abs())
            .fold(f64::INFINITY, f64::min)
    }
}

/// Intermediate design quantities, kept for diagnostics and tests.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DesignTrace {
    pub ripple: RippleParams,
    /// `k = λ_p / λ_s` of the prototype.
    pub selectivity: f64,
    #[serde(rename = "K")]
    pub quarter_period: Option<f64>,
    #[serde(rename = "K_comp")]
    pub quarter_period_comp: Option<f64>,
    #[serde(rename = "K1")]
    pub quarter_period1: Option<f64>,
    #[serde(rename = "K1_comp")]
    pub quarter_period1_comp: Option<f64>,
    pub v0: Option<f64>,
    pub u_m: Vec<f64>,
    pub c_m: Vec<f64>,
    pub d_m: Vec<f64>,
    /// Selectivity after the equiripple adjustment (Chebyshev II, elliptic).
    pub adjusted_k: Option<f64>,
    /// Right-hand side of the order bound before rounding up.
    pub min_order_real: f64,
}

impl DesignTrace {
    fn new(ripple: RippleParams, selectivity: f64, min_order_real: f64) -> Self {
        Self {
            ripple,
            selectivity,
            quarter_period: None,
            quarter_period_comp: None,
            quarter_period1: None,
            quarter_period1_comp: None,
            v0: None,
            u_m: Vec::new(),
            c_m: Vec::new(),
            d_m: Vec::new(),
            adjusted_k: None,
            min_order_real,
        }
    }
}

/// `ch⁻¹(1 + x)` without cancellation for small `x`.
fn acosh_1p(x: f64) -> f64 {
    (x + (x * (2.0 + x)).sqrt()).ln_1p()
}

fn order_from_bound(rhs: f64) -> Result<usize> {
    if !rhs.is_finite() {
        return Err(Error::Degenerate(format!("order bound {rhs} is not finite")));
    }
    let nearest = rhs.round();
    let n = if (rhs - nearest).abs() <= ORDER_SNAP {
        nearest
    } else {
        rhs.ceil()
    };
    Ok(n.max(1.0) as usize)
}

/// Minimal order meeting `spec`, with the quantities used to get there.
pub fn min_order(spec: &PrototypeSpec) -> Result<(usize, DesignTrace)> {
    spec.validate()?;
    let ripple = ripple_from_attenuation(spec.rp_db, spec.as_db)?;
    let sel = spec.selectivity()?;
    // λ_s/λ_p - 1 and ε_s/ε_p - 1, kept separate for small transition bands.
    let band_excess = (spec.lambda_s - spec.lambda_p) / spec.lambda_p;
    let ripple_ratio = ripple.eps_s / ripple.eps_p;

    let mut trace;
    let rhs = match spec.family {
        Family::Butterworth => {
            let rhs = ripple_ratio.ln() / band_excess.ln_1p();
            trace = DesignTrace::new(ripple, sel.k(), rhs);
            rhs
        }
        Family::ChebyshevI | Family::ChebyshevII => {
            let rhs = ripple_ratio.acosh() / acosh_1p(band_excess);
            trace = DesignTrace::new(ripple, sel.k(), rhs);
            rhs
        }
        Family::Elliptic => {
            let k1 = ripple.discrimination()?;
            let quarter = complete_elliptic_k(sel);
            let quarter_comp = complete_elliptic_k_comp(sel)?;
            let quarter1 = complete_elliptic_k(k1);
            let quarter1_comp = complete_elliptic_k_comp(k1)?;
            let rhs = quarter * quarter1_comp / (quarter_comp * quarter1);
            trace = DesignTrace::new(ripple, sel.k(), rhs);
            trace.quarter_period = Some(quarter);
            trace.quarter_period_comp = Some(quarter_comp);
            trace.quarter_period1 = Some(quarter1);
            trace.quarter_period1_comp = Some(quarter1_comp);
            rhs
        }
    };
    let n = order_from_bound(rhs)?;
    match spec.family {
        Family::ChebyshevII => {
            trace.adjusted_k = Some(adjust_modulus_cheb2(n, ripple.k1)?.k());
        }
        Family::Elliptic => {
            trace.adjusted_k = Some(adjust_modulus_elliptic(n, ripple.discrimination()?)?.k());
        }
        _ => {}
    }
    Ok((n, trace))
}

fn check_pole_args(n: usize, eps: f64, edge: f64) -> Result<()> {
    if n == 0 {
        return Err(domain("filter order must be positive"));
    }
    if !(eps.is_finite() && eps > 0.0) {
        return Err(domain(format!("ripple parameter {eps} must be positive")));
    }
    if !(edge.is_finite() && edge > 0.0) {
        return Err(domain(format!("band edge {edge} must be positive")));
    }
    Ok(())
}

/// Angle `(2m-1)π / 2N`.
fn half_angle(m: usize, n: usize) -> f64 {
    (2 * m - 1) as f64 * PI / (2 * n) as f64
}

/// Index `m ∈ 1..=2N` whose zero sits at infinity (odd `N` only).
fn is_infinite_zero(m: usize, n: usize) -> bool {
    n % 2 == 1 && (2 * m - 1 == n || 2 * m - 1 == 3 * n)
}

/// Butterworth poles `λ_p ε_p^(-1/N) e^(jπ(2m-1)/2N)`, `m = 1..2N`.
pub fn poles_butterworth(n: usize, eps_p: f64, lambda_p: f64) -> Result<PoleZeroSet> {
    check_pole_args(n, eps_p, lambda_p)?;
    let radius = lambda_p * eps_p.powf(-1.0 / n as f64);
    let poles = (1..=2 * n)
        .map(|m| Complex64::from_polar(radius, half_angle(m, n)))
        .collect();
    Ok(PoleZeroSet {
        poles,
        zeros: Vec::new(),
        order: n,
        gain: 1.0,
    })
}

/// Chebyshev I poles on the ellipse with semi-axes `λ_p·ch a`, `λ_p·sh a`,
/// `a = sh⁻¹(1/ε_p) / N`.
pub fn poles_cheb1(n: usize, eps_p: f64, lambda_p: f64) -> Result<PoleZeroSet> {
    check_pole_args(n, eps_p, lambda_p)?;
    let a = (1.0 / eps_p).asinh() / n as f64;
    let poles = (1..=2 * n)
        .map(|m| {
            let theta = half_angle(m, n);
            lambda_p * Complex64::new(theta.cos() * a.cosh(), theta.sin() * a.sinh())
        })
        .collect();
    // C_N(0) is 0 for odd N and ±1 for even N.
    let gain = if n.is_multiple_of(2) { 1.0 / (1.0 + eps_p * eps_p) } else { 1.0 };
    Ok(PoleZeroSet {
        poles,
        zeros: Vec::new(),
        order: n,
        gain,
    })
}

/// Chebyshev II poles `λ_s (c_m + j d_m) / (c_m² + d_m²)` and zeros
/// `λ_s / cos((2m-1)π / 2N)`. Returns the set along with `c_m` and `d_m`.
///
/// `lambda_s` is the stopband edge at which the attenuation equals `A_s`
/// exactly; with the adjusted modulus that is `λ_p / k`.
pub fn poles_zeros_cheb2(
    n: usize,
    eps_s: f64,
    lambda_s: f64,
) -> Result<(PoleZeroSet, Vec<f64>, Vec<f64>)> {
    check_pole_args(n, eps_s, lambda_s)?;
    let a = eps_s.asinh() / n as f64;
    let mut poles = Vec::with_capacity(2 * n);
    let mut zeros = Vec::with_capacity(2 * n);
    let (mut c_m, mut d_m) = (Vec::with_capacity(2 * n), Vec::with_capacity(2 * n));
    for m in 1..=2 * n {
        let theta = half_angle(m, n);
        let c = theta.cos() * a.cosh();
        let d = theta.sin() * a.sinh();
        poles.push(lambda_s * Complex64::new(c, d) / (c * c + d * d));
        c_m.push(c);
        d_m.push(d);
        if !is_infinite_zero(m, n) {
            zeros.push(Complex64::new(lambda_s / theta.cos(), 0.0));
        }
    }
    let set = PoleZeroSet {
        poles,
        zeros,
        order: n,
        gain: 1.0,
    };
    Ok((set, c_m, d_m))
}

/// Extra elliptic quantities produced alongside the pole/zero set.
#[derive(Debug, Clone, PartialEq)]
pub struct EllipticParts {
    pub v0: f64,
    pub u_m: Vec<f64>,
}

/// Elliptic poles `λ_p cd((u_m - j v₀)K, k)` and transfer zeros
/// `λ_p / (k cd(u_m K, k))`, `u_m = (2m-1)/N`, with
/// `v₀ = -(j / N K₁) sn⁻¹(j/ε_p, k₁)`.
///
/// `cd(u_m K, k)` themselves are where the ripple function vanishes (the
/// response maxima); the zeros of `H` are their images under `w ↦ 1/(k w)`.
pub fn zeros_poles_elliptic(
    n: usize,
    ripple: &RippleParams,
    lambda_p: f64,
    adjusted_k: Modulus,
) -> Result<(PoleZeroSet, EllipticParts)> {
    check_pole_args(n, ripple.eps_p, lambda_p)?;
    if adjusted_k.k() == 0.0 {
        return Err(domain("elliptic selectivity must be positive"));
    }
    let k1 = ripple.discrimination()?;
    let quarter1 = complete_elliptic_k(k1);
    let quarter = complete_elliptic_k(adjusted_k);
    let j = Complex64::new(0.0, 1.0);
    let v0 = (-j / (n as f64 * quarter1) * inverse_sn(j / ripple.eps_p, k1)?).re;

    let nf = n as f64;
    let u_m: Vec<f64> = (1..=2 * n).map(|m| (2 * m - 1) as f64 / nf).collect();
    let mut poles = Vec::with_capacity(2 * n);
    let mut zeros = Vec::with_capacity(2 * n);
    for (idx, &u) in u_m.iter().enumerate() {
        let m = idx + 1;
        poles.push(lambda_p * jacobi_cd(Complex64::new(u, -v0) * quarter, adjusted_k)?);
        if !is_infinite_zero(m, n) {
            let peak = jacobi_cd(Complex64::new(u * quarter, 0.0), adjusted_k)?.re;
            zeros.push(Complex64::new(lambda_p / (adjusted_k.k() * peak), 0.0));
        }
    }
    // F(0) = cd(N K₁, k₁) is 0 for odd N and ±1 for even N.
    let gain = if n.is_multiple_of(2) {
        1.0 / (1.0 + ripple.eps_p * ripple.eps_p)
    } else {
        1.0
    };
    let set = PoleZeroSet {
        poles,
        zeros,
        order: n,
        gain,
    };
    Ok((set, EllipticParts { v0, u_m }))
}

/// Designs the prototype at the minimal order, or at `order` when given.
pub fn design_prototype(
    spec: &PrototypeSpec,
    order: Option<usize>,
) -> Result<(PoleZeroSet, DesignTrace)> {
    let (n_min, mut trace) = min_order(spec)?;
    let n = match order {
        Some(0) => return Err(self::spec("order override must be positive")),
        Some(n) => n,
        None => n_min,
    };
    let ripple = trace.ripple;
    let set = match spec.family {
        Family::Butterworth => poles_butterworth(n, ripple.eps_p, spec.lambda_p)?,
        Family::ChebyshevI => poles_cheb1(n, ripple.eps_p, spec.lambda_p)?,
        Family::ChebyshevII => {
            let k = adjust_modulus_cheb2(n, ripple.k1)?;
            let (set, c_m, d_m) = poles_zeros_cheb2(n, ripple.eps_s, spec.lambda_p / k.k())?;
            trace.adjusted_k = Some(k.k());
            trace.c_m = c_m;
            trace.d_m = d_m;
            set
        }
        Family::Elliptic => {
            let k = adjust_modulus_elliptic(n, ripple.discrimination()?)?;
            let (set, parts) = zeros_poles_elliptic(n, &ripple, spec.lambda_p, k)?;
            trace.adjusted_k = Some(k.k());
            trace.v0 = Some(parts.v0);
            trace.u_m = parts.u_m;
            set
        }
    };
    Ok((set, trace))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn proto(family: Family, lp: f64, ls: f64, rp: f64, a_s: f64) -> PrototypeSpec {
        PrototypeSpec {
            family,
            lambda_p: lp,
            lambda_s: ls,
            rp_db: rp,
            as_db: a_s,
        }
    }

    #[test]
    fn ripple_values() {
        let r = ripple_from_attenuation(1.0, 30.0).unwrap();
        assert!((r.eps_p - 0.349_311_400_188_948_1).abs() < 1e-14);
        assert!((r.eps_s - 5.533_785_015_853_416).abs() < 1e-13);
        assert!((r.k1 - r.eps_p / r.eps_s).abs() < 1e-16);

        let r = ripple_from_attenuation(0.1, 40.0).unwrap();
        assert!((r.eps_p - 0.107_607_872_666_912_83).abs() < 1e-14);
        assert!((r.eps_s - 9.949_874_371_066_2).abs() < 1e-12);

        let r = ripple_from_attenuation(1e-12, 40.0).unwrap();
        assert!(r.eps_p < 1e-6 && r.eps_p > 0.0);
    }

    #[test]
    fn ripple_rejects_bad_attenuations() {
        assert!(ripple_from_attenuation(0.0, 30.0).is_err());
        assert!(ripple_from_attenuation(-1.0, 30.0).is_err());
        assert!(ripple_from_attenuation(30.0, 30.0).is_err());
        assert!(ripple_from_attenuation(3.0, 1.0).is_err());
    }

    #[test]
    fn default_orders() {
        let orders: Vec<usize> = Family::ALL
            .iter()
            .map(|&f| min_order(&proto(f, 1.0, 1.2, 1.0, 30.0)).unwrap().0)
            .collect();
        assert_eq!(orders, vec![16, 6, 6, 4]);
        let (_, trace) = min_order(&proto(Family::Butterworth, 1.0, 1.2, 1.0, 30.0)).unwrap();
        assert!((trace.min_order_real - 15.152_698_187_604_664).abs() < 1e-9);
    }

    #[test]
    fn sharp_spec_orders() {
        let expected = [(455, 454.941_796_383_341_3), (37, 36.941_260_308_772_07), (37, 36.941_260_308_772_07), (9, 8.015_750_380_451_478)];
        for (f, (n, rhs)) in Family::ALL.iter().zip(expected) {
            let (got, trace) = min_order(&proto(*f, 1.0, 1.01, 0.1, 40.0)).unwrap();
            assert_eq!(got, n, "{f}");
            assert!((trace.min_order_real - rhs).abs() < 1e-8, "{f}: {}", trace.min_order_real);
        }
    }

    #[test]
    fn order_snaps_to_integer() {
        assert_eq!(order_from_bound(3.0 + 5e-10).unwrap(), 3);
        assert_eq!(order_from_bound(3.0 - 5e-10).unwrap(), 3);
        assert_eq!(order_from_bound(3.000_001).unwrap(), 4);
        assert_eq!(order_from_bound(0.2).unwrap(), 1);
    }

    #[test]
    fn degenerate_and_inverted_specs() {
        let same = proto(Family::Butterworth, 1.0, 1.0, 1.0, 30.0);
        assert!(matches!(min_order(&same), Err(Error::Degenerate(_))));
        let inverted = proto(Family::Elliptic, 1.2, 1.0, 1.0, 30.0);
        assert!(matches!(min_order(&inverted), Err(Error::Spec(_))));
    }

    #[test]
    fn butterworth_first_orders() {
        let set = poles_butterworth(1, 1.0, 1.0).unwrap();
        assert!((set.poles[0] - Complex64::new(0.0, 1.0)).norm() < 1e-15);
        assert!((set.poles[1] - Complex64::new(0.0, -1.0)).norm() < 1e-15);

        let set = poles_butterworth(2, 1.0, 1.0).unwrap();
        for (m, p) in set.poles.iter().enumerate() {
            let expected = Complex64::from_polar(1.0, (2 * m + 1) as f64 * PI / 4.0);
            assert!((p - expected).norm() < 1e-15);
        }

        let set = poles_butterworth(16, 0.25, 1.0).unwrap();
        for (m, p) in set.poles.iter().enumerate() {
            assert!((p.norm() - 2f64.powf(0.125)).abs() < 1e-14);
            assert!((p.arg().rem_euclid(2.0 * PI) - (2 * m + 1) as f64 * PI / 32.0).abs() < 1e-12);
        }
    }

    #[test]
    fn cheb1_poles() {
        let set = poles_cheb1(1, 1.0, 1.0).unwrap();
        assert!((set.poles[0] - Complex64::new(0.0, 1.0)).norm() < 1e-15);
        assert!((set.poles[1] - Complex64::new(0.0, -1.0)).norm() < 1e-15);

        let set = poles_cheb1(6, 0.5, 1.0).unwrap();
        let a = 2f64.asinh() / 6.0;
        for p in &set.poles {
            // on the ellipse (x/ch a)² + (y/sh a)² = 1
            let r = (p.re / a.cosh()).powi(2) + (p.im / a.sinh()).powi(2);
            assert!((r - 1.0).abs() < 1e-14);
            assert!(p.im.abs() > 0.0);
        }
    }

    #[test]
    fn cheb2_zero_counts() {
        let (set, _, _) = poles_zeros_cheb2(2, 1.0, 1.0).unwrap();
        let s2 = 2f64.sqrt();
        let mut z: Vec<f64> = set.zeros.iter().map(|z| z.re).collect();
        z.sort_by(f64::total_cmp);
        for (got, want) in z.iter().zip([-s2, -s2, s2, s2]) {
            assert!((got - want).abs() < 1e-14);
        }

        let (set, c_m, d_m) = poles_zeros_cheb2(3, 1.0, 1.0).unwrap();
        assert_eq!(set.zeros.len(), 4);
        assert_eq!(set.poles.len(), 6);
        assert_eq!((c_m.len(), d_m.len()), (6, 6));

        let (set, _, _) = poles_zeros_cheb2(10, 5.533_87, 1.2).unwrap();
        assert_eq!(set.zeros.len(), 20);
        assert!(set.zeros.iter().all(|z| z.re.abs() >= 1.2));
    }

    #[test]
    fn elliptic_structure() {
        let r = ripple_from_attenuation(1.0, 30.0).unwrap();
        for n in 1..=8 {
            let k = adjust_modulus_elliptic(n, r.discrimination().unwrap()).unwrap();
            let (set, parts) = zeros_poles_elliptic(n, &r, 1.0, k).unwrap();
            assert_eq!(set.poles.len(), 2 * n);
            assert_eq!(set.zeros.len(), if n.is_multiple_of(2) { 2 * n } else { 2 * n - 2 });
            assert!(set.min_pole_imag() > 1e-6);
            assert!(parts.v0 > 0.0);
        }
    }

    #[test]
    fn design_with_override_fills_trace() {
        let spec = proto(Family::Elliptic, 1.0, 1.2, 1.0, 30.0);
        let (set, trace) = design_prototype(&spec, Some(8)).unwrap();
        assert_eq!(set.order, 8);
        assert_eq!(trace.u_m.len(), 16);
        assert!(trace.adjusted_k.unwrap() > 1.0 / 1.2);
        assert!(design_prototype(&spec, Some(0)).is_err());

        let spec = proto(Family::ChebyshevII, 1.0, 1.2, 1.0, 30.0);
        let (_, trace) = design_prototype(&spec, None).unwrap();
        let k = trace.adjusted_k.unwrap();
        assert!(k > 1.0 / 1.2 && k < 1.0);
        assert!((k - 0.854_404_976_907_581_2).abs() < 1e-12);
    }
}
