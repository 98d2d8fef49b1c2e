//! Dense symmetric eigendecomposition and linear solves.

use nalgebra::{DMatrix, DVector, Dyn, LU};

use crate::error::{domain, Error, Result};

pub type Matrix = DMatrix<f64>;

const SYMMETRY_TOL: f64 = 1e-12;
const OFF_DIAGONAL_TOL: f64 = 1e-12;
const MAX_SWEEPS: usize = 100;
/// Components within this relative distance of the largest one count as ties
/// for the sign convention.
const SIGN_TIE: f64 = 1e-9;

/// Eigenvalues in ascending order and the matching orthonormal eigenvectors
/// (as the columns of `eigenvectors`).
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralDecomposition {
    eigenvalues: Vec<f64>,
    eigenvectors: Matrix,
}

impl SpectralDecomposition {
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn eigenvectors(&self) -> &Matrix {
        &self.eigenvectors
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    /// `U Λ Uᵀ`.
    pub fn reconstruct(&self) -> Matrix {
        let u = &self.eigenvectors;
        let scaled = u * Matrix::from_diagonal(&DVector::from_column_slice(&self.eigenvalues));
        scaled * u.transpose()
    }

    pub(crate) fn clamp_eigenvalues(&mut self, lo: f64, hi: f64, slack: f64) {
        for v in &mut self.eigenvalues {
            if *v < lo && *v >= lo - slack {
                *v = lo;
            } else if *v > hi && *v <= hi + slack {
                *v = hi;
            }
        }
    }
}

fn check_symmetric(m: &Matrix) -> Result<()> {
    if !m.is_square() {
        return Err(domain(format!(
            "eigendecomposition needs a square matrix, got {}x{}",
            m.nrows(),
            m.ncols()
        )));
    }
    if m.iter().any(|v| !v.is_finite()) {
        return Err(domain("matrix has non-finite entries"));
    }
    let scale = m.amax().max(1.0);
    let n = m.nrows();
    for i in 0..n {
        for j in i + 1..n {
            if (m[(i, j)] - m[(j, i)]).abs() > SYMMETRY_TOL * scale {
                return Err(domain(format!("matrix is not symmetric at ({i}, {j})")));
            }
        }
    }
    Ok(())
}

fn off_diagonal_norm(a: &Matrix) -> f64 {
    let n = a.nrows();
    let mut sum = 0.0;
    for j in 0..n {
        for i in 0..n {
            if i != j {
                sum += a[(i, j)] * a[(i, j)];
            }
        }
    }
    sum.sqrt()
}

/// Symmetric eigendecomposition by cyclic Jacobi rotations.
///
/// Sweeps stop once the off-diagonal Frobenius norm drops below
/// `1e-12 · ‖A‖_F`. Each eigenvector is signed so that its first
/// largest-magnitude component is positive.
pub fn eig_sym(m: &Matrix) -> Result<SpectralDecomposition> {
    check_symmetric(m)?;
    let n = m.nrows();
    // Average the two triangles so rotations act on an exactly symmetric matrix.
    let mut a = (m + m.transpose()) * 0.5;
    let mut v = Matrix::identity(n, n);
    let threshold = OFF_DIAGONAL_TOL * a.norm();

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(&a) <= threshold {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[(q, q)] - a[(p, p)]) / (2.0 * apq);
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[(k, p)], a[(k, q)]);
                    a[(k, p)] = c * akp - s * akq;
                    a[(k, q)] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[(p, k)], a[(q, k)]);
                    a[(p, k)] = c * apk - s * aqk;
                    a[(q, k)] = s * apk + c * aqk;
                }
                a[(p, q)] = 0.0;
                a[(q, p)] = 0.0;
                for k in 0..n {
                    let (vkp, vkq) = (v[(k, p)], v[(k, q)]);
                    v[(k, p)] = c * vkp - s * vkq;
                    v[(k, q)] = s * vkp + c * vkq;
                }
            }
        }
    }
    if !converged && off_diagonal_norm(&a) > threshold {
        return Err(Error::Stability(format!(
            "Jacobi iteration did not converge in {MAX_SWEEPS} sweeps"
        )));
    }

    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&i, &j| a[(i, i)].total_cmp(&a[(j, j)]));
    let eigenvalues = idx.iter().map(|&i| a[(i, i)]).collect();
    let mut eigenvectors = Matrix::zeros(n, n);
    for (col, &i) in idx.iter().enumerate() {
        let mut vec = v.column(i).clone_owned();
        let peak = vec.amax();
        if let Some(lead) = vec.iter().find(|x| x.abs() >= peak * (1.0 - SIGN_TIE)) {
            if *lead < 0.0 {
                vec.neg_mut();
            }
        }
        eigenvectors.set_column(col, &vec);
    }
    Ok(SpectralDecomposition {
        eigenvalues,
        eigenvectors,
    })
}

/// LU factorization of a symmetric matrix with a 1-norm condition estimate.
pub struct SymmetricSolver {
    lu: LU<f64, Dyn, Dyn>,
    n: usize,
    norm1: f64,
}

impl SymmetricSolver {
    pub fn new(m: Matrix) -> Result<Self> {
        if !m.is_square() {
            return Err(domain("solver needs a square matrix"));
        }
        let norm1 = m
            .column_iter()
            .map(|c| c.iter().map(|x| x.abs()).sum::<f64>())
            .fold(0.0, f64::max);
        Ok(Self {
            n: m.nrows(),
            lu: m.lu(),
            norm1,
        })
    }

    pub fn solve(&self, b: &[f64]) -> Result<Vec<f64>> {
        let n = self.n;
        if b.len() != n {
            return Err(Error::Dimension {
                expected: n,
                found: b.len(),
            });
        }
        self.lu
            .solve(&DVector::from_column_slice(b))
            .map(|x| x.as_slice().to_vec())
            .ok_or_else(|| Error::Stability("matrix is singular".into()))
    }

    /// Estimate of `‖A‖₁ ‖A⁻¹‖₁` by Hager's method. Relies on symmetry, so
    /// solves with `A` stand in for solves with `Aᵀ`.
    pub fn condition_estimate(&self) -> Result<f64> {
        let n = self.n;
        if n == 0 {
            return Ok(1.0);
        }
        let mut x = vec![1.0 / n as f64; n];
        let mut estimate = 0.0;
        for _ in 0..5 {
            let y = self.solve(&x)?;
            estimate = y.iter().map(|v| v.abs()).sum::<f64>();
            let sign: Vec<f64> = y.iter().map(|v| if *v >= 0.0 { 1.0 } else { -1.0 }).collect();
            let z = self.solve(&sign)?;
            let (j, zmax) = z
                .iter()
                .enumerate()
                .map(|(i, v)| (i, v.abs()))
                .fold((0, f64::NEG_INFINITY), |acc, c| if c.1 > acc.1 { c } else { acc });
            let ztx: f64 = z.iter().zip(&x).map(|(a, b)| a * b).sum();
            if zmax <= ztx {
                break;
            }
            x = vec![0.0; n];
            x[j] = 1.0;
        }
        // Higham's alternating test vector guards against Hager's method
        // stopping early on a poor local maximum.
        if n > 1 {
            let alt: Vec<f64> = (0..n)
                .map(|i| {
                    let mag = 1.0 + i as f64 / (n - 1) as f64;
                    if i % 2 == 0 { mag } else { -mag }
                })
                .collect();
            let y = self.solve(&alt)?;
            let alt_estimate = 2.0 * y.iter().map(|v| v.abs()).sum::<f64>() / (3 * n) as f64;
            estimate = estimate.max(alt_estimate);
        }
        Ok(self.norm1 * estimate)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(n: usize, f: impl Fn(usize, usize) -> f64) -> Matrix {
        Matrix::from_fn(n, n, |i, j| if i <= j { f(i, j) } else { f(j, i) })
    }

    #[test]
    fn identity() {
        let d = eig_sym(&Matrix::identity(4, 4)).unwrap();
        assert_eq!(d.eigenvalues(), &[1.0; 4]);
        assert_eq!(d.eigenvectors(), &Matrix::identity(4, 4));
    }

    #[test]
    fn two_node_path() {
        let m = Matrix::from_row_slice(2, 2, &[1.0, -1.0, -1.0, 1.0]);
        let d = eig_sym(&m).unwrap();
        assert!(d.eigenvalues()[0].abs() < 1e-15);
        assert!((d.eigenvalues()[1] - 2.0).abs() < 1e-15);
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let u = d.eigenvectors();
        assert!((u[(0, 0)] - h).abs() < 1e-15 && (u[(1, 0)] - h).abs() < 1e-15);
        assert!((u[(0, 1)] - h).abs() < 1e-15 && (u[(1, 1)] + h).abs() < 1e-15);
    }

    #[test]
    fn reconstruction_and_orthogonality() {
        let m = sym(12, |i, j| ((i * 31 + j * 17) % 7) as f64 - 3.0 + if i == j { 2.0 } else { 0.0 });
        let d = eig_sym(&m).unwrap();
        assert!((d.reconstruct() - &m).amax() < 1e-12);
        let u = d.eigenvectors();
        assert!((u.transpose() * u - Matrix::identity(12, 12)).amax() < 1e-13);
        assert!(d.eigenvalues().windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn rejects_asymmetric() {
        let m = Matrix::from_row_slice(2, 2, &[1.0, 2.0, 0.0, 1.0]);
        assert!(matches!(eig_sym(&m), Err(Error::Domain(_))));
        assert!(eig_sym(&Matrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn solver_and_condition() {
        let m = Matrix::from_row_slice(2, 2, &[2.0, 1.0, 1.0, 2.0]);
        let s = SymmetricSolver::new(m).unwrap();
        let x = s.solve(&[3.0, 3.0]).unwrap();
        assert!((x[0] - 1.0).abs() < 1e-15 && (x[1] - 1.0).abs() < 1e-15);
        // ‖A‖₁ = 3, ‖A⁻¹‖₁ = 1
        assert!((s.condition_estimate().unwrap() - 3.0).abs() < 1e-12);

        let near = Matrix::from_row_slice(2, 2, &[1.0, 1.0, 1.0, 1.0 + 1e-14]);
        let s = SymmetricSolver::new(near).unwrap();
        assert!(s.condition_estimate().unwrap() > 1e12);
        assert!(matches!(s.solve(&[1.0]), Err(Error::Dimension { .. })));
    }
}
