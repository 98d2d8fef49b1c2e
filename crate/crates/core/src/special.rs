//! Complete elliptic integrals and Jacobi elliptic functions.
//!
//! `K(k)` is computed with the arithmetic-geometric mean. `sn`, `cn` and `dn`
//! use the descending Landen transformation down to the trigonometric limit
//! and recover the original modulus on the way back up, which works for
//! complex arguments unchanged. The inverse `sn⁻¹` runs the Landen recursion
//! on the argument instead.
//!
//! Everything here takes a [`Modulus`], which stores `k` and `k' = √(1-k²)`
//! independently so that nothing loses precision when `k` is close to one.

use num_complex::Complex64;
use std::f64::consts::FRAC_PI_2;

use crate::error::{domain, Error, Result};

/// Moduli below this are treated as zero at the bottom of the Landen descent.
const LANDEN_FLOOR: f64 = 1e-14;
/// The descent converges quadratically; this is far more than ever needed.
const LANDEN_MAX_STEPS: usize = 32;
const AGM_MAX_STEPS: usize = 64;
/// `|dn| / |cn|` below which `cd` is reported as a pole.
const POLE_RATIO: f64 = 1e-13;

/// Elliptic modulus `k ∈ [0, 1)` together with its complement `k'`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Modulus {
    k: f64,
    k_comp: f64,
}

impl Modulus {
    pub fn new(k: f64) -> Result<Self> {
        if !(0.0..1.0).contains(&k) {
            return Err(domain(format!("modulus k = {k} must lie in [0, 1)")));
        }
        Ok(Self {
            k,
            k_comp: ((1.0 - k) * (1.0 + k)).sqrt(),
        })
    }

    /// Builds the modulus from its complement `k' ∈ (0, 1]`.
    pub fn from_complement(k_comp: f64) -> Result<Self> {
        if !(k_comp > 0.0 && k_comp <= 1.0) {
            return Err(domain(format!(
                "complementary modulus k' = {k_comp} must lie in (0, 1]"
            )));
        }
        Ok(Self {
            k: ((1.0 - k_comp) * (1.0 + k_comp)).sqrt(),
            k_comp,
        })
    }

    /// Selectivity `k = a / b` for `0 < a < b`, with `k'` computed as
    /// `√((b-a)(b+a)) / b` to avoid cancellation when `a ≈ b`.
    pub fn from_ratio(a: f64, b: f64) -> Result<Self> {
        if !(a >= 0.0 && a < b && b.is_finite()) {
            return Err(domain(format!("ratio {a}/{b} is not in [0, 1)")));
        }
        Ok(Self {
            k: a / b,
            k_comp: ((b - a) * (b + a)).sqrt() / b,
        })
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    pub fn k_comp(&self) -> f64 {
        self.k_comp
    }

    /// The complementary modulus `k'` as a modulus in its own right.
    ///
    /// Fails when `k = 0`, whose complement `k' = 1` has an infinite `K`.
    pub fn complement(&self) -> Result<Self> {
        if self.k == 0.0 {
            return Err(domain("complement of k = 0 has k' = 1"));
        }
        Ok(Self {
            k: self.k_comp,
            k_comp: self.k,
        })
    }

    /// `ln k'`, accurate for small `k` as well as for small `k'`.
    fn ln_k_comp(&self) -> f64 {
        if self.k < 0.5 {
            0.5 * (-self.k * self.k).ln_1p()
        } else {
            self.k_comp.ln()
        }
    }

    /// Descending Landen moduli `k₁, k₂, …` with `kₙ₊₁ = kₙ² / (1 + kₙ')²`.
    fn landen_sequence(&self) -> Vec<f64> {
        let mut seq = Vec::new();
        let (mut k, mut kc) = (self.k, self.k_comp);
        while k > LANDEN_FLOOR && seq.len() < LANDEN_MAX_STEPS {
            let next = (k / (1.0 + kc)).powi(2);
            kc = 2.0 * kc.sqrt() / (1.0 + kc);
            k = next;
            seq.push(k);
        }
        seq
    }
}

/// Complete elliptic integral of the first kind, `K(k) = π / (2·AGM(1, k'))`.
pub fn complete_elliptic_k(m: Modulus) -> f64 {
    let (mut a, mut b) = (1.0_f64, m.k_comp);
    for _ in 0..AGM_MAX_STEPS {
        if (a - b).abs() <= f64::EPSILON * a {
            break;
        }
        let mean = 0.5 * (a + b);
        b = (a * b).sqrt();
        a = mean;
    }
    FRAC_PI_2 / a
}

/// `K(k')`, the quarter period along the imaginary axis.
pub fn complete_elliptic_k_comp(m: Modulus) -> Result<f64> {
    Ok(complete_elliptic_k(m.complement()?))
}

fn ensure_finite(u: Complex64) -> Result<()> {
    if u.re.is_finite() && u.im.is_finite() {
        Ok(())
    } else {
        Err(domain(format!("non-finite argument {u}")))
    }
}

fn all_finite(values: &[Complex64]) -> bool {
    values.iter().all(|z| z.re.is_finite() && z.im.is_finite())
}

/// Jacobi `sn`, `cn` and `dn` at complex `u`.
pub fn jacobi_sn_cn_dn(u: Complex64, m: Modulus) -> Result<(Complex64, Complex64, Complex64)> {
    ensure_finite(u)?;
    let seq = m.landen_sequence();
    let scale: f64 = seq.iter().map(|k| 1.0 + k).product();
    let w = u / scale;
    let (mut sn, mut cn, mut dn) = (w.sin(), w.cos(), Complex64::new(1.0, 0.0));
    for &k in seq.iter().rev() {
        let ks2 = k * sn * sn;
        let denom = 1.0 + ks2;
        let next_sn = (1.0 + k) * sn / denom;
        cn = cn * dn / denom;
        dn = (1.0 - ks2) / denom;
        sn = next_sn;
    }
    if !all_finite(&[sn, cn, dn]) {
        return Err(Error::Pole { re: u.re, im: u.im });
    }
    Ok((sn, cn, dn))
}

/// Jacobi `cd = cn / dn`.
pub fn jacobi_cd(u: Complex64, m: Modulus) -> Result<Complex64> {
    let (_, cn, dn) = jacobi_sn_cn_dn(u, m)?;
    // At a pole of cd, dn vanishes while cn stays finite; round-off leaves
    // dn at the level of machine epsilon relative to cn.
    if dn.norm() <= POLE_RATIO * cn.norm() {
        return Err(Error::Pole { re: u.re, im: u.im });
    }
    let cd = cn / dn;
    if !all_finite(&[cd]) {
        return Err(Error::Pole { re: u.re, im: u.im });
    }
    Ok(cd)
}

/// Inverse of `sn(·, k)`.
///
/// Principal branch: real `w ∈ [-1, 1]` maps into `[-K, K]`, and purely
/// imaginary `w = j·y` maps to `j·t` with `t` of the same sign as `y` and
/// `|t| < K'`.
pub fn inverse_sn(w: Complex64, m: Modulus) -> Result<Complex64> {
    ensure_finite(w)?;
    let seq = m.landen_sequence();
    let mut w = w;
    let mut prev = m.k;
    for &k in &seq {
        let root = (1.0 - prev * prev * w * w).sqrt();
        w = 2.0 * w / ((1.0 + k) * (1.0 + root));
        prev = k;
    }
    Ok(w.asin() * (complete_elliptic_k(m) / FRAC_PI_2))
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        Err(domain("filter order must be positive"))
    } else {
        Ok(())
    }
}

/// Chebyshev II modulus making the passband edge exact for order `n`:
/// `k = 1 / ch(ch⁻¹(1/k₁) / n)`.
pub fn adjust_modulus_cheb2(n: usize, k1: f64) -> Result<Modulus> {
    check_order(n)?;
    if !(k1 > 0.0 && k1 < 1.0) {
        return Err(domain(format!("discrimination k1 = {k1} must lie in (0, 1)")));
    }
    let a = (1.0 / k1).acosh() / n as f64;
    // 1/ch(a) and th(a) are exactly the modulus and its complement.
    Ok(Modulus {
        k: 1.0 / a.cosh(),
        k_comp: a.tanh(),
    })
}

/// Elliptic selectivity modulus solving the degree equation for order `n`
/// and discrimination `k₁`:
///
/// ```text
/// k' = (k₁')ᴺ · Π_{i=1..⌊N/2⌋} sn⁴(uᵢ·K₁', k₁'),   uᵢ = (2i-1)/N
/// ```
///
/// The product is accumulated in log space.
pub fn adjust_modulus_elliptic(n: usize, k1: Modulus) -> Result<Modulus> {
    check_order(n)?;
    if k1.k == 0.0 {
        return Err(domain("discrimination k1 must be positive"));
    }
    let dual = k1.complement()?;
    let dual_quarter = complete_elliptic_k(dual);
    let nf = n as f64;
    let mut log_kc = nf * k1.ln_k_comp();
    for i in 1..=n / 2 {
        let u = (2 * i - 1) as f64 / nf;
        let (sn, cn, _) = jacobi_sn_cn_dn(Complex64::new(u * dual_quarter, 0.0), dual)?;
        // Near sn = 1 the logarithm is taken from cn, which is still accurate.
        let ln_sn = if sn.re > 0.5 {
            0.5 * (-cn.re * cn.re).ln_1p()
        } else {
            sn.re.ln()
        };
        log_kc += 4.0 * ln_sn;
    }
    let k_comp = log_kc.exp();
    if k_comp.is_nan() || k_comp <= 0.0 {
        return Err(domain(format!(
            "degree equation underflow for N = {n}, k1 = {}",
            k1.k
        )));
    }
    // k² = 1 - exp(2 ln k'), without cancellation when k is small.
    Ok(Modulus {
        k: (-(2.0 * log_kc).exp_m1()).sqrt(),
        k_comp: k_comp.min(1.0),
    })
}
