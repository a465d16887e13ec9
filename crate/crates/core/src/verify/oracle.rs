//! Eigenvalue oracle independent of the Jacobi solver: roots of the
//! characteristic polynomial located by a sign scan and refined by bisection.

use num_complex::Complex64;

use crate::linalg::SquareMatrix;

const SCAN_STEPS: usize = 20_000;
const BISECTION_STEPS: usize = 200;

/// Coefficients `c₀ … c_n` of `det(λ·1 − A)` (with `c_n = 1`) by the
/// Faddeev-LeVerrier recursion.
pub fn characteristic_polynomial(a: &SquareMatrix) -> Vec<Complex64> {
    let n = a.dim();
    let identity = SquareMatrix::identity(n).expect("valid dimension");
    let mut coeffs = vec![Complex64::new(0.0, 0.0); n + 1];
    coeffs[n] = Complex64::new(1.0, 0.0);
    let mut m = SquareMatrix::zeros(n).expect("valid dimension");
    for k in 1..=n {
        let shifted = &m + &scaled(&identity, coeffs[n - k + 1]);
        m = a * &shifted;
        coeffs[n - k] = -m.trace() / k as f64;
    }
    coeffs
}

fn scaled(m: &SquareMatrix, factor: Complex64) -> SquareMatrix {
    let entries = m.entries().iter().map(|z| z * factor).collect();
    SquareMatrix::from_entries(m.dim(), entries).expect("same shape")
}

fn eval(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c)
}

/// Real roots of the characteristic polynomial of a Hermitian matrix,
/// ascending. Roots closer together than the scan resolution may be missed,
/// so callers should check the count.
pub fn eigenvalues_by_bisection(a: &SquareMatrix) -> Vec<f64> {
    let coeffs: Vec<f64> = characteristic_polynomial(a).iter().map(|c| c.re).collect();
    let n = a.dim();
    // Gershgorin bound on the spectrum
    let radius = (0..n)
        .map(|i| (0..n).map(|j| a[(i, j)].norm()).sum::<f64>())
        .fold(0.0, f64::max)
        + 1.0;
    let step = 2.0 * radius / SCAN_STEPS as f64;

    let mut roots = Vec::new();
    let mut lo = -radius;
    let mut f_lo = eval(&coeffs, lo);
    for i in 1..=SCAN_STEPS {
        let hi = -radius + step * i as f64;
        let f_hi = eval(&coeffs, hi);
        if f_lo == 0.0 {
            roots.push(lo);
        } else if f_lo.signum() != f_hi.signum() && f_hi != 0.0 {
            let (mut a_, mut b_, mut fa) = (lo, hi, f_lo);
            for _ in 0..BISECTION_STEPS {
                let mid = 0.5 * (a_ + b_);
                if mid <= a_ || mid >= b_ {
                    break;
                }
                let fm = eval(&coeffs, mid);
                if fm == 0.0 {
                    a_ = mid;
                    b_ = mid;
                    break;
                }
                if fm.signum() == fa.signum() {
                    a_ = mid;
                    fa = fm;
                } else {
                    b_ = mid;
                }
            }
            roots.push(0.5 * (a_ + b_));
        }
        lo = hi;
        f_lo = f_hi;
    }
    roots
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_of_diagonal() {
        let d = SquareMatrix::from_diagonal(&[1.0, 2.0]).unwrap();
        let c = characteristic_polynomial(&d);
        // λ² − 3λ + 2
        assert_eq!(
            c.iter().map(|z| z.re).collect::<Vec<_>>(),
            vec![2.0, -3.0, 1.0]
        );
    }

    #[test]
    fn roots_of_simple_matrix() {
        let d = SquareMatrix::from_diagonal(&[-0.3, 0.1, 0.45, 0.9]).unwrap();
        let r = eigenvalues_by_bisection(&d);
        assert_eq!(r.len(), 4);
        for (x, e) in r.iter().zip([-0.3, 0.1, 0.45, 0.9]) {
            assert!((x - e).abs() < 1e-12);
        }
    }
}
