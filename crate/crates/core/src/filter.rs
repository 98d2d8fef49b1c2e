//! Applying frequency responses to graph signals.

use nalgebra::DVector;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphSignal};
use crate::linalg::{Matrix, SpectralDecomposition, SymmetricSolver};
use crate::response::RationalResponse;

/// Largest admissible condition estimate of a denominator section.
pub const MAX_CONDITION: f64 = 1e12;

/// Graph Fourier transform `x̂ = Uᵀ x`.
pub fn graph_fourier(d: &SpectralDecomposition, x: &GraphSignal) -> Result<Vec<f64>> {
    x.check_len(d.len())?;
    let v = d.eigenvectors().tr_mul(&DVector::from_column_slice(&x.values));
    Ok(v.as_slice().to_vec())
}

/// Inverse transform `x = U x̂`.
pub fn inverse_graph_fourier(d: &SpectralDecomposition, spectrum: &[f64]) -> Result<GraphSignal> {
    if spectrum.len() != d.len() {
        return Err(Error::Dimension {
            expected: d.len(),
            found: spectrum.len(),
        });
    }
    let v = d.eigenvectors() * DVector::from_column_slice(spectrum);
    Ok(GraphSignal::new(v.as_slice().to_vec()))
}

/// `y = U h(Λ) Uᵀ x`.
pub fn apply_spectral_filter(
    d: &SpectralDecomposition,
    h: impl Fn(f64) -> f64,
    x: &GraphSignal,
) -> Result<GraphSignal> {
    let mut spectrum = graph_fourier(d, x)?;
    for (s, &lambda) in spectrum.iter_mut().zip(d.eigenvalues()) {
        *s *= h(lambda);
    }
    inverse_graph_fourier(d, &spectrum)
}

/// `y = den(L)⁻¹ num(L) x` with `L` the normalized Laplacian of `g`.
///
/// The rational function is applied one real section at a time: a linear
/// solve with the section's denominator polynomial in `L`, then a
/// multiplication by its numerator polynomial. A section whose denominator
/// matrix has a condition estimate above [`MAX_CONDITION`] is reported as a
/// stability error.
pub fn apply_rational_matrix_filter(
    g: &Graph,
    r: &RationalResponse,
    x: &GraphSignal,
) -> Result<GraphSignal> {
    let n = g.node_count();
    x.check_len(n)?;
    let l = g.normalized_laplacian();
    let l2 = &l * &l;
    let identity = Matrix::identity(n, n);
    let poly = |c: &[f64; 3]| &identity * c[0] + &l * c[1] + &l2 * c[2];

    let mut y = DVector::from_column_slice(&x.values) * r.gain();
    for (i, s) in r.sections().iter().enumerate() {
        let solver = SymmetricSolver::new(poly(&s.den))?;
        let cond = solver.condition_estimate()?;
        if cond.is_nan() || cond > MAX_CONDITION {
            return Err(Error::Stability(format!(
                "denominator section {i} is numerically singular (condition estimate {cond:e})"
            )));
        }
        let z = DVector::from_vec(solver.solve(y.as_slice())?);
        let lz = &l * &z;
        let l2z = &l * &lz;
        y = z * s.num[0] + lz * s.num[1] + l2z * s.num[2];
    }
    Ok(GraphSignal::new(y.as_slice().to_vec()))
}
