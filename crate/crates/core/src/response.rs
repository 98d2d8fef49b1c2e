//! Real rational response `H(λ) = gain · Π zeros / Π poles` built from a
//! conjugate-closed pole/zero multiset.
//!
//! The response is kept in cascade form: a product of real quadratic
//! sections in λ. Expanded coefficient vectors are produced as well, in
//! ascending powers of `λ / λ_ref`, but only the cascade is used for
//! evaluation.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::poly;
use crate::prototype::PoleZeroSet;

/// Up to this many roots the coefficients come from direct expansion.
const DIRECT_EXPANSION_MAX: usize = 128;
/// Coefficients are not formed above this order.
pub const COEFF_MAX_ORDER: usize = 1024;
/// Relative distance below which two roots count as conjugates.
const CONJ_TOL: f64 = 1e-9;
/// Relative imaginary part below which a root counts as real.
const REAL_TOL: f64 = 1e-12;
/// Smallest admissible `|Im p|` for a pole.
pub const POLE_IMAG_MIN: f64 = 1e-9;

/// One real factor `num(λ) / den(λ)`, coefficients ascending, with
/// `num[0] = den[0] = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Section {
    pub num: [f64; 3],
    pub den: [f64; 3],
}

impl Section {
    fn ratio(&self, lambda: f64) -> f64 {
        let [n0, n1, n2] = self.num;
        let [d0, d1, d2] = self.den;
        if lambda.abs() <= 1.0 {
            return (n0 + lambda * (n1 + lambda * n2)) / (d0 + lambda * (d1 + lambda * d2));
        }
        // Both polynomials divided by λ², so nothing overflows for large λ.
        let mu = 1.0 / lambda;
        let num = n2 + mu * (n1 + mu * n0);
        let den = d2 + mu * (d1 + mu * d0);
        num / den
    }

    fn limit_at_infinity(&self) -> f64 {
        let deg = |c: &[f64; 3]| c.iter().rposition(|&x| x != 0.0).unwrap_or(0);
        let (dn, dd) = (deg(&self.num), deg(&self.den));
        match dn.cmp(&dd) {
            std::cmp::Ordering::Less => 0.0,
            std::cmp::Ordering::Equal => self.num[dn] / self.den[dd],
            std::cmp::Ordering::Greater => f64::INFINITY,
        }
    }

    pub fn den_value(&self, lambda: f64) -> f64 {
        poly::horner(&self.den, lambda)
    }

    pub fn num_value(&self, lambda: f64) -> f64 {
        poly::horner(&self.num, lambda)
    }
}

/// A real quadratic (or linear) factor and the roots it came from.
#[derive(Debug, Clone, Copy)]
struct Factor {
    coeffs: [f64; 3],
    roots: [Complex64; 2],
}

impl Factor {
    fn pair(a: Complex64, b: Complex64) -> Self {
        // (1 - λ/a)(1 - λ/b) with a, b conjugate or both real.
        let (ia, ib) = (a.inv(), b.inv());
        Factor {
            coeffs: [1.0, -(ia + ib).re, (ia * ib).re],
            roots: [a, b],
        }
    }

    fn single(r: f64) -> Self {
        let r = Complex64::new(r, 0.0);
        Factor {
            coeffs: [1.0, -1.0 / r.re, 0.0],
            roots: [r, r],
        }
    }

    fn distance_to(&self, p: Complex64) -> f64 {
        self.roots
            .iter()
            .map(|r| (r - p).norm())
            .fold(f64::INFINITY, f64::min)
    }
}

/// Groups roots into real factors: conjugate pairs into quadratics, real
/// roots paired outermost-first (so `±z` end up as `1 - λ²/z²`).
fn real_factors(roots: &[Complex64], what: &str) -> Result<Vec<Factor>> {
    let mut reals = Vec::new();
    let mut upper = Vec::new();
    let mut lower = Vec::new();
    for &r in roots {
        if !(r.re.is_finite() && r.im.is_finite()) || r == Complex64::new(0.0, 0.0) {
            return Err(Error::Composition(format!("{what} {r} is not a finite nonzero value")));
        }
        if r.im.abs() <= REAL_TOL * r.norm() {
            reals.push(r.re);
        } else if r.im > 0.0 {
            upper.push(r);
        } else {
            lower.push((r.conj(), false));
        }
    }
    if upper.len() != lower.len() {
        return Err(Error::Composition(format!(
            "{what}s are not closed under conjugation ({} above, {} below the real axis)",
            upper.len(),
            lower.len()
        )));
    }
    lower.sort_by(|a, b| a.0.re.total_cmp(&b.0.re));

    let mut factors = Vec::with_capacity(roots.len() / 2 + 1);
    for p in upper {
        let tol = CONJ_TOL * p.norm().max(1.0);
        let start = lower.partition_point(|(q, _)| q.re < p.re - tol);
        let mut best: Option<(usize, f64)> = None;
        for (i, (q, used)) in lower.iter().enumerate().skip(start) {
            if q.re > p.re + tol {
                break;
            }
            let dist = (q - p).norm();
            if !used && dist <= tol && best.is_none_or(|(_, d)| dist < d) {
                best = Some((i, dist));
            }
        }
        let Some((i, _)) = best else {
            return Err(Error::Composition(format!(
                "{what} {p} has no conjugate partner"
            )));
        };
        lower[i].1 = true;
        // Use the exact conjugate so the factor is real.
        factors.push(Factor::pair(p, p.conj()));
    }

    reals.sort_by(f64::total_cmp);
    let (mut lo, mut hi) = (0usize, reals.len());
    while hi > lo + 1 {
        factors.push(Factor::pair(
            Complex64::new(reals[lo], 0.0),
            Complex64::new(reals[hi - 1], 0.0),
        ));
        lo += 1;
        hi -= 1;
    }
    if hi == lo + 1 {
        factors.push(Factor::single(reals[lo]));
    }
    Ok(factors)
}

/// Running product kept as mantissa times a power of two.
struct ScaledProduct {
    mant: f64,
    exp: i32,
}

impl ScaledProduct {
    const STEP: i32 = 256;

    fn new(x: f64) -> Self {
        Self { mant: x, exp: 0 }
    }

    fn mul(&mut self, x: f64) {
        self.mant *= x;
        let a = self.mant.abs();
        if a == 0.0 || !a.is_finite() {
            return;
        }
        let big = 2f64.powi(Self::STEP);
        if a > big {
            self.mant /= big;
            self.exp += Self::STEP;
        } else if a < 1.0 / big {
            self.mant *= big;
            self.exp -= Self::STEP;
        }
    }

    fn value(&self) -> f64 {
        let mut v = self.mant;
        let mut e = self.exp;
        while e != 0 && v != 0.0 && v.is_finite() {
            let step = e.clamp(-512, 512);
            v *= 2f64.powi(step);
            e -= step;
        }
        v
    }
}

/// Order in which to multiply roots so that partial products stay well
/// scaled: recursive even/odd decimation of the index.
fn decimated_order(n: usize) -> Vec<usize> {
    fn rec(idx: Vec<usize>, out: &mut Vec<usize>) {
        if idx.len() <= 1 {
            out.extend(idx);
            return;
        }
        let (even, odd): (Vec<_>, Vec<_>) = idx.iter().enumerate().partition(|(i, _)| i % 2 == 0);
        rec(even.into_iter().map(|(_, &v)| v).collect(), out);
        rec(odd.into_iter().map(|(_, &v)| v).collect(), out);
    }
    let mut out = Vec::with_capacity(n);
    rec((0..n).collect(), &mut out);
    out
}

fn direct_coefficients(roots: &[Complex64], lambda_ref: f64, what: &str) -> Result<Vec<f64>> {
    let ordered: Vec<Complex64> = decimated_order(roots.len()).into_iter().map(|i| roots[i]).collect();
    let coeffs = poly::expand_linear_factors(&ordered, lambda_ref);
    let scale = coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
    let residue = coeffs.iter().map(|c| c.im.abs()).fold(0.0, f64::max);
    if residue > CONJ_TOL * scale {
        return Err(Error::Composition(format!(
            "{what} polynomial has imaginary residue {residue:e} (scale {scale:e})"
        )));
    }
    Ok(coeffs.iter().map(|c| c.re).collect())
}

fn product_coefficients(factors: &[Factor], lambda_ref: f64) -> Vec<f64> {
    let scaled = factors
        .iter()
        .map(|f| {
            let c = f.coeffs;
            let mut v = vec![c[0], c[1] * lambda_ref, c[2] * lambda_ref * lambda_ref];
            if v[2] == 0.0 {
                v.pop();
            }
            v
        })
        .collect();
    poly::product(scaled)
}

#[derive(Debug, Clone, PartialEq)]
pub struct RationalResponse {
    gain: f64,
    sections: Vec<Section>,
    num_coeffs: Option<Vec<f64>>,
    den_coeffs: Option<Vec<f64>>,
    lambda_ref: f64,
    source: PoleZeroSet,
}

impl RationalResponse {
    /// Composes `H = G·G*` from the full pole/zero multiset of `set`.
    ///
    /// Coefficient vectors are in powers of `λ / lambda_ref`.
    pub fn compose(set: &PoleZeroSet, lambda_ref: f64) -> Result<Self> {
        if !(lambda_ref.is_finite() && lambda_ref > 0.0) {
            return Err(Error::Domain(format!("reference frequency {lambda_ref} must be positive")));
        }
        if !(set.gain.is_finite() && set.gain > 0.0) {
            return Err(Error::Composition(format!("gain {} must be positive", set.gain)));
        }
        if set.zeros.len() > set.poles.len() {
            return Err(Error::Composition(format!(
                "{} zeros exceed {} poles",
                set.zeros.len(),
                set.poles.len()
            )));
        }
        let pole_factors = real_factors(&set.poles, "pole")?;
        let zero_factors = real_factors(&set.zeros, "zero")?;
        if let Some(p) = set.poles.iter().find(|p| p.im.abs() <= POLE_IMAG_MIN) {
            return Err(Error::Stability(format!("pole {p} lies on the real axis")));
        }
        let sections = pair_sections(&pole_factors, &zero_factors);

        let order = set.poles.len() / 2;
        let (num_coeffs, den_coeffs) = if set.poles.len() <= DIRECT_EXPANSION_MAX {
            let mut num = direct_coefficients(&set.zeros, lambda_ref, "numerator")?;
            num.iter_mut().for_each(|c| *c *= set.gain);
            let den = direct_coefficients(&set.poles, lambda_ref, "denominator")?;
            (Some(num), Some(den))
        } else if order <= COEFF_MAX_ORDER {
            let mut num = product_coefficients(&zero_factors, lambda_ref);
            num.iter_mut().for_each(|c| *c *= set.gain);
            let den = product_coefficients(&pole_factors, lambda_ref);
            let finite = |v: &Vec<f64>| v.iter().all(|c| c.is_finite());
            (Some(num).filter(finite), Some(den).filter(finite))
        } else {
            (None, None)
        };

        Ok(Self {
            gain: set.gain,
            sections,
            num_coeffs,
            den_coeffs,
            lambda_ref,
            source: set.clone(),
        })
    }

    /// The constant response `H ≡ c`.
    pub fn constant(c: f64) -> Result<Self> {
        if !(c.is_finite() && c >= 0.0) {
            return Err(Error::Domain(format!("constant response {c} must be finite and nonnegative")));
        }
        Ok(Self {
            gain: c,
            sections: Vec::new(),
            num_coeffs: Some(vec![c]),
            den_coeffs: Some(vec![1.0]),
            lambda_ref: 1.0,
            source: PoleZeroSet {
                poles: Vec::new(),
                zeros: Vec::new(),
                order: 0,
                gain: c,
            },
        })
    }

    pub fn gain(&self) -> f64 {
        self.gain
    }

    pub fn sections(&self) -> &[Section] {
        &self.sections
    }

    pub fn num_coeffs(&self) -> Option<&[f64]> {
        self.num_coeffs.as_deref()
    }

    pub fn den_coeffs(&self) -> Option<&[f64]> {
        self.den_coeffs.as_deref()
    }

    pub fn lambda_ref(&self) -> f64 {
        self.lambda_ref
    }

    pub fn source(&self) -> &PoleZeroSet {
        &self.source
    }

    /// `H(λ)` in cascade form. Infinite `λ` gives the limit.
    pub fn evaluate(&self, lambda: f64) -> f64 {
        if lambda.is_nan() {
            return f64::NAN;
        }
        if lambda.is_infinite() {
            return self.at_infinity();
        }
        let mut acc = ScaledProduct::new(self.gain);
        for s in &self.sections {
            acc.mul(s.ratio(lambda));
        }
        acc.value().max(0.0)
    }

    /// `lim H(λ)` as `λ → ∞`.
    pub fn at_infinity(&self) -> f64 {
        let mut acc = ScaledProduct::new(self.gain);
        for s in &self.sections {
            acc.mul(s.limit_at_infinity());
        }
        acc.value().max(0.0)
    }

    /// `H(λ)` from the expanded coefficients, when they exist.
    pub fn evaluate_coefficients(&self, lambda: f64) -> Option<f64> {
        let (num, den) = (self.num_coeffs.as_ref()?, self.den_coeffs.as_ref()?);
        let x = lambda / self.lambda_ref;
        Some(poly::horner(num, x) / poly::horner(den, x))
    }

    pub fn attenuation_db(&self, lambda: f64) -> f64 {
        attenuation_db(self.evaluate(lambda))
    }

    /// Checks that no pole is within `POLE_IMAG_MIN` of the real axis and
    /// that every denominator section is positive on the real line.
    pub fn check_stability(&self) -> Result<()> {
        if let Some(p) = self.source.poles.iter().find(|p| p.im.abs() <= POLE_IMAG_MIN) {
            return Err(Error::Stability(format!("pole {p} lies on the real axis")));
        }
        for s in &self.sections {
            let [d0, d1, d2] = s.den;
            if d1 * d1 - 4.0 * d0 * d2 >= 0.0 {
                return Err(Error::Stability(format!(
                    "denominator section {:?} has a real root",
                    s.den
                )));
            }
        }
        Ok(())
    }
}

/// Attenuation `-20 log₁₀ H` relative to the unit passband peak; `+∞` where
/// `H = 0`.
pub fn attenuation_db(h: f64) -> f64 {
    if h <= 0.0 {
        f64::INFINITY
    } else {
        -20.0 * h.log10()
    }
}

/// Assigns each zero factor to a pole factor and orders the sections.
///
/// Poles closest to the real axis (relative to their modulus) are served
/// first and get the nearest zero pair; the resulting sections are ordered
/// from least to most resonant.
fn pair_sections(poles: &[Factor], zeros: &[Factor]) -> Vec<Section> {
    let damping = |f: &Factor| f.roots[0].im.abs() / f.roots[0].norm();
    let mut order: Vec<usize> = (0..poles.len()).collect();
    order.sort_by(|&a, &b| damping(&poles[a]).total_cmp(&damping(&poles[b])));

    let mut free: Vec<bool> = vec![true; zeros.len()];
    let mut sections: Vec<(f64, Section)> = Vec::with_capacity(poles.len());
    for idx in order {
        let pole = &poles[idx];
        let p = pole.roots[0];
        let chosen = zeros
            .iter()
            .enumerate()
            .filter(|(i, _)| free[*i])
            .min_by(|(_, a), (_, b)| a.distance_to(p).total_cmp(&b.distance_to(p)))
            .map(|(i, _)| i);
        let num = match chosen {
            Some(i) => {
                free[i] = false;
                zeros[i].coeffs
            }
            None => [1.0, 0.0, 0.0],
        };
        sections.push((
            damping(pole),
            Section {
                num,
                den: pole.coeffs,
            },
        ));
    }
    // Leftover zeros (more zero factors than pole factors cannot happen for
    // the designed families, but keep the product exact regardless).
    for (i, z) in zeros.iter().enumerate() {
        if free[i] {
            sections.push((
                f64::INFINITY,
                Section {
                    num: z.coeffs,
                    den: [1.0, 0.0, 0.0],
                },
            ));
        }
    }
    sections.sort_by(|a, b| b.0.total_cmp(&a.0));
    sections.into_iter().map(|(_, s)| s).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::prototype::{poles_butterworth, poles_cheb1, poles_zeros_cheb2};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn butterworth_first_order() {
        let set = poles_butterworth(1, 1.0, 1.0).unwrap();
        let r = RationalResponse::compose(&set, 1.0).unwrap();
        let den = r.den_coeffs().unwrap();
        assert!((den[0] - 1.0).abs() < 1e-15 && den[1].abs() < 1e-15 && (den[2] - 1.0).abs() < 1e-15);
        assert_eq!(r.num_coeffs().unwrap(), &[1.0]);
        for x in [0.0, 0.5, 1.0, 3.0] {
            assert!((r.evaluate(x) - 1.0 / (1.0 + x * x)).abs() < 1e-15);
        }
        assert_eq!(r.at_infinity(), 0.0);
        assert_eq!(r.evaluate(f64::INFINITY), 0.0);
    }

    #[test]
    fn cheb2_second_order_numerator() {
        let (set, _, _) = poles_zeros_cheb2(2, 1.0, 1.0).unwrap();
        let r = RationalResponse::compose(&set, 1.0).unwrap();
        let num = r.num_coeffs().unwrap();
        for (got, want) in num.iter().zip([1.0, 0.0, -1.0, 0.0, 0.25]) {
            assert!((got - want).abs() < 1e-14, "{num:?}");
        }
    }

    #[test]
    fn butterworth_denominator_is_binomial() {
        let eps: f64 = 0.349_311_400_188_948_1;
        for n in 1..=12 {
            let set = poles_butterworth(n, eps, 1.0).unwrap();
            let r = RationalResponse::compose(&set, 1.0).unwrap();
            let den = r.den_coeffs().unwrap();
            assert_eq!(den.len(), 2 * n + 1);
            assert!((den[0] - 1.0).abs() < 1e-12);
            assert!((den[2 * n] - eps * eps).abs() < 1e-12 * eps * eps);
            assert!(den[1..2 * n].iter().all(|c| c.abs() < 1e-12), "{n}: {den:?}");
        }
    }

    #[test]
    fn product_tree_matches_direct_expansion() {
        let set = poles_butterworth(100, 0.5, 1.0).unwrap();
        let r = RationalResponse::compose(&set, 1.0).unwrap();
        let den = r.den_coeffs().unwrap();
        assert_eq!(den.len(), 201);
        assert!((den[0] - 1.0).abs() < 1e-12 && (den[200] - 0.25).abs() < 1e-12);
        assert!(den[1..200].iter().all(|c| c.abs() < 1e-12));

        let set = poles_cheb1(70, 0.5, 1.0).unwrap();
        let r = RationalResponse::compose(&set, 1.0).unwrap();
        let tree = r.den_coeffs().unwrap();
        let direct = direct_coefficients(&set.poles, 1.0, "denominator").unwrap();
        let scale = direct.iter().fold(0.0f64, |m, c| m.max(c.abs()));
        for (a, b) in tree.iter().zip(&direct) {
            assert!((a - b).abs() < 1e-10 * scale);
        }
    }

    #[test]
    fn no_coefficients_for_huge_orders() {
        let set = poles_butterworth(2000, 0.5, 1.0).unwrap();
        let r = RationalResponse::compose(&set, 1.0).unwrap();
        assert!(r.num_coeffs().is_none() && r.den_coeffs().is_none());
        assert!((r.evaluate(0.0) - 1.0).abs() < 1e-12);
        let at_edge = r.evaluate(1.0);
        assert!((at_edge - 1.0 / 1.25).abs() < 1e-10);
    }

    #[test]
    fn rejects_unpaired_pole() {
        let set = PoleZeroSet {
            poles: vec![c(0.1, 1.0), c(0.2, -1.0)],
            zeros: vec![],
            order: 1,
            gain: 1.0,
        };
        assert!(matches!(
            RationalResponse::compose(&set, 1.0),
            Err(Error::Composition(_))
        ));
    }

    #[test]
    fn real_pole_is_unstable() {
        let set = PoleZeroSet {
            poles: vec![c(0.5, 0.0), c(-0.5, 0.0)],
            zeros: vec![],
            order: 1,
            gain: 1.0,
        };
        assert!(matches!(
            RationalResponse::compose(&set, 1.0),
            Err(Error::Stability(_))
        ));
    }

    #[test]
    fn constant_response() {
        let r = RationalResponse::constant(0.25).unwrap();
        assert_eq!(r.evaluate(1.7), 0.25);
        assert_eq!(r.at_infinity(), 0.25);
        assert!(r.check_stability().is_ok());
        assert!(RationalResponse::constant(-1.0).is_err());
    }

    #[test]
    fn attenuation_values() {
        assert_eq!(attenuation_db(1.0), 0.0);
        assert_eq!(attenuation_db(0.0), f64::INFINITY);
        assert!((attenuation_db(0.1) - 20.0).abs() < 1e-12);
    }

    #[test]
    fn scaled_product_survives_extremes() {
        let mut p = ScaledProduct::new(1.0);
        for _ in 0..2000 {
            p.mul(1e-3);
        }
        for _ in 0..2000 {
            p.mul(1e3);
        }
        assert!((p.value() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn decimation_is_a_permutation() {
        let mut d = decimated_order(13);
        assert_eq!(&d[..4], &[0, 8, 4, 12]);
        d.sort();
        assert_eq!(d, (0..13).collect::<Vec<_>>());
    }
}
