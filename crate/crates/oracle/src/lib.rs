//! Reference implementations used only by tests.
//!
//! Everything here is computed along a different route from the main crate:
//! elliptic integrals use Carlson's symmetric form `R_F` (duplication
//! theorem), real Jacobi functions come from inverting the incomplete
//! integral, and magnitude responses are evaluated straight from their
//! defining formulas rather than from poles and zeros.

use std::f64::consts::FRAC_PI_2;

/// Carlson's `R_F(x, y, z)` by the duplication theorem.
pub fn carlson_rf(x: f64, y: f64, z: f64) -> f64 {
    let (mut x, mut y, mut z) = (x, y, z);
    for _ in 0..200 {
        let mu = (x + y + z) / 3.0;
        let dev = [(mu - x).abs(), (mu - y).abs(), (mu - z).abs()]
            .into_iter()
            .fold(0.0, f64::max);
        if dev < 1e-4 * mu {
            // Fifth-order Taylor tail.
            let (dx, dy, dz) = (1.0 - x / mu, 1.0 - y / mu, 1.0 - z / mu);
            let e2 = dx * dy - dz * dz;
            let e3 = dx * dy * dz;
            return (1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 - 3.0 * e2 * e3 / 44.0)
                / mu.sqrt();
        }
        let (sx, sy, sz) = (x.sqrt(), y.sqrt(), z.sqrt());
        let lam = sx * sy + sy * sz + sz * sx;
        x = (x + lam) / 4.0;
        y = (y + lam) / 4.0;
        z = (z + lam) / 4.0;
    }
    let mu = (x + y + z) / 3.0;
    1.0 / mu.sqrt()
}

/// `F(φ, k)` for `φ ∈ [0, π/2]`, given the complementary modulus
/// `kc = √(1-k²)`.
pub fn incomplete_f(phi: f64, kc: f64) -> f64 {
    let (s, c) = phi.sin_cos();
    // 1 - k² sin²φ written without cancellation.
    s * carlson_rf(c * c, c * c + kc * kc * s * s, 1.0)
}

/// `K(k)` with `kc = √(1-k²)`.
pub fn complete_k(kc: f64) -> f64 {
    carlson_rf(0.0, kc * kc, 1.0)
}

/// Complement computed as `√((1-k)(1+k))`.
pub fn complement(k: f64) -> f64 {
    ((1.0 - k) * (1.0 + k)).sqrt()
}

/// Amplitude `φ ∈ [0, π/2]` with `F(φ, k) = u`, for `0 ≤ u ≤ K`.
fn amplitude(u: f64, kc: f64) -> f64 {
    let quarter = complete_k(kc);
    if u <= 0.0 {
        return 0.0;
    }
    if u >= quarter {
        return FRAC_PI_2;
    }
    let (mut lo, mut hi) = (0.0, FRAC_PI_2);
    let mut phi = u.min(FRAC_PI_2) * 0.5 + 0.25 * FRAC_PI_2;
    for _ in 0..200 {
        let f = incomplete_f(phi, kc) - u;
        if f > 0.0 {
            hi = phi;
        } else {
            lo = phi;
        }
        let (s, c) = phi.sin_cos();
        let slope = 1.0 / (c * c + kc * kc * s * s).sqrt();
        let mut next = phi - f / slope;
        if !(next > lo && next < hi) {
            next = 0.5 * (lo + hi);
        }
        if next == phi || (next - phi).abs() <= 1e-16 * phi || hi - lo <= 1e-17 {
            return next;
        }
        phi = next;
    }
    phi
}

/// Real `(sn, cn, dn)` at `x·K(k)`, for any real `x`, given `kc = √(1-k²)`.
pub fn sn_cn_dn_scaled(x: f64, kc: f64) -> (f64, f64, f64) {
    // sn(xK) has period 4 in x, is odd, and sn((2-x)K) = sn(xK);
    // cn(xK) is even with cn((2-x)K) = -cn(xK); dn(xK) has period 2 and is even.
    let mut r = x.rem_euclid(4.0);
    let mut sign_s = 1.0;
    let mut sign_c = 1.0;
    if r > 2.0 {
        r = 4.0 - r;
        sign_s = -1.0;
    }
    if r > 1.0 {
        r = 2.0 - r;
        sign_c = -1.0;
    }
    let phi = amplitude(r * complete_k(kc), kc);
    let (s, c) = phi.sin_cos();
    let dn = (c * c + kc * kc * s * s).sqrt();
    (sign_s * s, sign_c * c, dn)
}

/// Real `sn(u)`, `cn(u)`, `dn(u)` for `u ∈ [0, K]`.
pub fn sn_cn_dn(u: f64, k: f64) -> (f64, f64, f64) {
    let kc = complement(k);
    sn_cn_dn_scaled(u / complete_k(kc), kc)
}

/// `cd(xK, k)` for real `x`, given `kc = √(1-k²)`.
pub fn cd_scaled(x: f64, kc: f64) -> f64 {
    let (_, c, d) = sn_cn_dn_scaled(x, kc);
    c / d
}

/// Butterworth response `1 / (1 + ε² (λ/λ_p)^{2N})`.
pub fn butterworth(lambda: f64, n: usize, eps_p: f64, lambda_p: f64) -> f64 {
    let w = lambda / lambda_p;
    1.0 / (1.0 + eps_p * eps_p * w.powi(2 * n as i32))
}

/// Chebyshev polynomial `C_N(x)` in trigonometric/hyperbolic form.
pub fn chebyshev_poly(n: usize, x: f64) -> f64 {
    let nf = n as f64;
    if x.abs() <= 1.0 {
        (nf * x.acos()).cos()
    } else {
        let v = (nf * x.abs().acosh()).cosh();
        if x < 0.0 && n % 2 == 1 {
            -v
        } else {
            v
        }
    }
}

pub fn chebyshev1(lambda: f64, n: usize, eps_p: f64, lambda_p: f64) -> f64 {
    let c = chebyshev_poly(n, lambda / lambda_p);
    1.0 / (1.0 + eps_p * eps_p * c * c)
}

/// Chebyshev II response with selectivity `k = λ_p / λ_s`.
pub fn chebyshev2(lambda: f64, n: usize, eps_p: f64, k1: f64, k: f64, lambda_p: f64) -> f64 {
    let g = lambda / lambda_p;
    if g == 0.0 {
        return 1.0;
    }
    let c = k1 * chebyshev_poly(n, 1.0 / (k * g));
    1.0 / (1.0 + eps_p * eps_p / (c * c))
}

/// Elliptic rational function `F_E(ω)` of order `n`, selectivity `k` and
/// discrimination `k1`, evaluated from `F_E = cd(N u K₁, k₁)`,
/// `ω = cd(u K, k)` along the three real branches of `u`.
pub fn elliptic_rational(omega: f64, n: usize, k: f64, k1: f64) -> f64 {
    let (kc, k1c) = (complement(k), complement(k1));
    let nf = n as f64;
    let w = omega.abs();
    let value = if w <= 1.0 {
        // u real in [0, 1]: ω = sn((1-u)K).
        let u = 1.0 - incomplete_f(w.asin(), kc) / complete_k(kc);
        cd_scaled(nf * u, k1c)
    } else if w <= 1.0 / k {
        // u = j t K'/K: ω = 1/dn(t K', k'), F_E = 1/dn(N t K' K₁ / K, k₁').
        let s = ((1.0 - 1.0 / (w * w)).sqrt() / kc).min(1.0);
        let y = incomplete_f(s.asin(), k);
        let arg = nf * y * complete_k(k1c) / complete_k(kc);
        let (_, _, dn) = sn_cn_dn_scaled(arg / complete_k(k1), k1);
        1.0 / dn
    } else {
        // u = s + j K'/K: ω = 1/(k cd(sK, k)), F_E = 1/(k₁ cd(N s K₁, k₁)).
        let c = 1.0 / (k * w);
        let s = 1.0 - incomplete_f(c.asin(), kc) / complete_k(kc);
        1.0 / (k1 * cd_scaled(nf * s, k1c))
    };
    if omega < 0.0 && n % 2 == 1 {
        -value
    } else {
        value
    }
}

pub fn elliptic(lambda: f64, n: usize, eps_p: f64, k: f64, k1: f64, lambda_p: f64) -> f64 {
    let f = elliptic_rational(lambda / lambda_p, n, k, k1);
    1.0 / (1.0 + eps_p * eps_p * f * f)
}

/// Selectivity `k` solving the degree equation `N K'(k)/K(k) = K'(k₁)/K(k₁)`,
/// found by bisection on `ln k'`.
pub fn elliptic_selectivity(n: usize, k1: f64) -> f64 {
    let target = complete_k(k1) / complete_k(complement(k1));
    let ratio = |t: f64| {
        // k' = e^t, k = √(1 - e^{2t})
        let k = (-(2.0 * t).exp_m1()).sqrt();
        n as f64 * complete_k(k) / complete_k(t.exp())
    };
    // ratio grows with k'.
    let (mut lo, mut hi) = (-700.0, 0.0);
    for _ in 0..300 {
        let mid = 0.5 * (lo + hi);
        if mid == lo || mid == hi {
            break;
        }
        if ratio(mid) > target {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let t = 0.5 * (lo + hi);
    (-(2.0 * t).exp_m1()).sqrt()
}

/// Coefficients of `1 + ε² (λ/λ_p)^{2N}`, ascending in `λ`.
pub fn butterworth_den_coeffs(n: usize, eps_p: f64, lambda_p: f64) -> Vec<f64> {
    let mut c = vec![0.0; 2 * n + 1];
    c[0] = 1.0;
    c[2 * n] = eps_p * eps_p / lambda_p.powi(2 * n as i32);
    c
}

/// Brute-force product `Π (1 - λ/rᵢ)` with real and imaginary parts kept
/// separately, coefficients ascending.
pub fn expand_roots(roots: &[(f64, f64)]) -> Vec<(f64, f64)> {
    let mut c = vec![(1.0, 0.0)];
    for &(re, im) in roots {
        let d = re * re + im * im;
        // -1/r
        let (sr, si) = (-re / d, im / d);
        let mut next = vec![(0.0, 0.0); c.len() + 1];
        for (i, &(a, b)) in c.iter().enumerate() {
            next[i].0 += a;
            next[i].1 += b;
            next[i + 1].0 += a * sr - b * si;
            next[i + 1].1 += a * si + b * sr;
        }
        c = next;
    }
    c
}

/// Interior local maxima of `f` on `[a, b]`: bracketed on a uniform grid of
/// `samples` points, then refined by golden-section search.
pub fn local_maxima(f: impl Fn(f64) -> f64, a: f64, b: f64, samples: usize) -> Vec<(f64, f64)> {
    let h = (b - a) / (samples - 1) as f64;
    let xs: Vec<f64> = (0..samples).map(|i| a + h * i as f64).collect();
    let ys: Vec<f64> = xs.iter().map(|&x| f(x)).collect();
    let mut out = Vec::new();
    for i in 1..samples - 1 {
        if ys[i] > ys[i - 1] && ys[i] >= ys[i + 1] {
            let x = golden_max(&f, xs[i - 1], xs[i + 1]);
            out.push((x, f(x)));
        }
    }
    out
}

fn golden_max(f: &impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> f64 {
    let r = 0.5 * (5f64.sqrt() - 1.0);
    let mut c = b - r * (b - a);
    let mut d = a + r * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    for _ in 0..200 {
        if (b - a).abs() <= 1e-15 * (a.abs() + b.abs()) {
            break;
        }
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - r * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + r * (b - a);
            fd = f(d);
        }
    }
    0.5 * (a + b)
}
