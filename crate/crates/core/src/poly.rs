//! Polynomial expansion helpers. Coefficients are in ascending powers.

use num_complex::Complex64;
use rustfft::FftPlanner;

/// Below this many output coefficients schoolbook multiplication is faster.
const FFT_CUTOFF: usize = 64;

/// Expands `Π (1 - x / rᵢ)` by sequential convolution with each linear factor.
pub(crate) fn expand_linear_factors(roots: &[Complex64], scale: f64) -> Vec<Complex64> {
    let mut coeffs = vec![Complex64::new(1.0, 0.0)];
    for &r in roots {
        let slope = -scale / r;
        coeffs.push(Complex64::new(0.0, 0.0));
        for i in (1..coeffs.len()).rev() {
            let prev = coeffs[i - 1];
            coeffs[i] += slope * prev;
        }
    }
    coeffs
}

pub(crate) fn multiply(a: &[f64], b: &[f64]) -> Vec<f64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let len = a.len() + b.len() - 1;
    if a.len().min(b.len()) < 8 || len < FFT_CUTOFF {
        let mut out = vec![0.0; len];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        return out;
    }
    let size = len.next_power_of_two();
    let mut planner = FftPlanner::<f64>::new();
    let fwd = planner.plan_fft_forward(size);
    let inv = planner.plan_fft_inverse(size);
    // Pack both real inputs into one complex transform: z = a + j·b.
    let mut z: Vec<Complex64> = (0..size)
        .map(|i| {
            Complex64::new(
                a.get(i).copied().unwrap_or(0.0),
                b.get(i).copied().unwrap_or(0.0),
            )
        })
        .collect();
    fwd.process(&mut z);
    let mut prod = vec![Complex64::new(0.0, 0.0); size];
    for i in 0..size {
        let zi = z[i];
        let zc = z[(size - i) % size].conj();
        let fa = 0.5 * (zi + zc);
        let fb = Complex64::new(0.0, -0.5) * (zi - zc);
        prod[i] = fa * fb;
    }
    inv.process(&mut prod);
    let norm = 1.0 / size as f64;
    prod.iter().take(len).map(|v| v.re * norm).collect()
}

/// Multiplies all factors with a balanced product tree.
///
/// Factors are combined by index decimation (even positions with even, odd
/// with odd) so that factors whose roots are evenly spread in angle end up
/// in each subproduct. For roots on a circle this keeps the intermediate
/// coefficients close to the size of the final ones.
pub(crate) fn product(factors: Vec<Vec<f64>>) -> Vec<f64> {
    match factors.len() {
        0 => vec![1.0],
        1 => factors.into_iter().next().unwrap_or_else(|| vec![1.0]),
        _ => {
            let (even, odd): (Vec<_>, Vec<_>) = factors
                .into_iter()
                .enumerate()
                .partition(|(i, _)| i % 2 == 0);
            let left = product(even.into_iter().map(|(_, f)| f).collect());
            let right = product(odd.into_iter().map(|(_, f)| f).collect());
            multiply(&left, &right)
        }
    }
}

pub(crate) fn horner(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}
