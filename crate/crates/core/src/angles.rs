//! Preparation of the two ancilla qubits and the angle system that drives it.
//!
//! The five-gate preparation network (see [`PreparationAngles::network_on`])
//! maps `|00>` to a real state
//! `C₁|00> + C₂|01> + C₃|10> + C₄|11>` whose amplitudes are trigonometric
//! polynomials in the three angles. [`solve_preparation_angles`] inverts that
//! map numerically.

use std::f64::consts::{FRAC_PI_4, PI};

use crate::error::{Error, Result};
use crate::gates::GateNetwork;
use crate::linalg::STRUCTURAL_TOL;

/// Largest component-wise mismatch accepted from the angle solver.
pub const ANGLE_RESIDUAL_TOL: f64 = 1e-10;

const MAX_ITERATIONS: usize = 200;

/// Real amplitudes `(C₁, C₂, C₃, C₄)` of a two-qubit preparation target, in
/// the order `|00>, |01>, |10>, |11>`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PreparationAmplitudes([f64; 4]);

impl PreparationAmplitudes {
    pub fn new(c: [f64; 4]) -> Result<Self> {
        if c.iter().any(|x| !x.is_finite()) {
            return Err(Error::NonFinite("preparation amplitudes"));
        }
        let norm_sqr: f64 = c.iter().map(|x| x * x).sum();
        if (norm_sqr - 1.0).abs() > STRUCTURAL_TOL {
            return Err(Error::NotNormalized(norm_sqr));
        }
        Ok(Self(c))
    }

    /// Scales `c` to unit norm first.
    pub fn normalized(c: [f64; 4]) -> Result<Self> {
        let norm = c.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::NotNormalized(norm * norm));
        }
        Self::new(c.map(|x| x / norm))
    }

    /// `(2|00> + |01> + |10>)/√6`.
    pub fn duplicator() -> Self {
        let k = 6f64.sqrt().recip();
        Self([2.0 * k, k, k, 0.0])
    }

    /// `(3|00> + |01> + |10> + |11>)/√12`.
    pub fn triplicator() -> Self {
        let k = 12f64.sqrt().recip();
        Self([3.0 * k, k, k, k])
    }

    pub fn values(&self) -> [f64; 4] {
        self.0
    }
}

/// Rotation angles `(θ₁, θ₂, θ₃)` of the preparation network.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PreparationAngles {
    pub theta1: f64,
    pub theta2: f64,
    pub theta3: f64,
}

/// `arcsin √(1/2 − √2/3)`, the magnitude of the middle angle used by both
/// copier variants.
pub fn middle_angle_magnitude() -> f64 {
    (0.5 - 2f64.sqrt() / 3.0).sqrt().asin()
}

impl PreparationAngles {
    pub fn new(theta1: f64, theta2: f64, theta3: f64) -> Self {
        Self {
            theta1,
            theta2,
            theta3,
        }
    }

    /// Closed-form angles for [`PreparationAmplitudes::duplicator`].
    pub fn duplicator() -> Self {
        Self::new(PI / 8.0, -middle_angle_magnitude(), PI / 8.0)
    }

    /// Closed-form angles for [`PreparationAmplitudes::triplicator`]: the
    /// duplicator angles with the middle rotation reversed.
    pub fn triplicator() -> Self {
        Self::new(PI / 8.0, middle_angle_magnitude(), PI / 8.0)
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.theta1, self.theta2, self.theta3]
    }

    pub fn norm(&self) -> f64 {
        self.as_array().iter().map(|t| t * t).sum::<f64>().sqrt()
    }

    /// Amplitudes produced on `|00>`, evaluated in closed form.
    pub fn amplitudes(&self) -> [f64; 4] {
        amplitude_map(self.as_array())
    }

    /// Max component-wise mismatch against `target`.
    pub fn residual(&self, target: &PreparationAmplitudes) -> f64 {
        self.amplitudes()
            .iter()
            .zip(target.0)
            .map(|(a, c)| (a - c).abs())
            .fold(0.0, f64::max)
    }

    /// The five-gate preparation acting on qubits `first` (the high-order
    /// ancilla) and `second`: `R_first(θ₁)`, `CNOT(first→second)`,
    /// `R_second(θ₂)`, `CNOT(second→first)`, `R_first(θ₃)`.
    pub fn network_on(&self, first: usize, second: usize) -> GateNetwork {
        GateNetwork::default()
            .rotation(first, self.theta1)
            .cnot(first, second)
            .rotation(second, self.theta2)
            .cnot(second, first)
            .rotation(first, self.theta3)
    }
}

/// Preparation network on the copier ancillas (qubits 1 and 2 of a
/// three-qubit register).
pub fn preparation_network(angles: &PreparationAngles) -> GateNetwork {
    angles.network_on(1, 2)
}

fn amplitude_map([t1, t2, t3]: [f64; 3]) -> [f64; 4] {
    let (s1, c1) = t1.sin_cos();
    let (s2, c2) = t2.sin_cos();
    let (s3, c3) = t3.sin_cos();
    [
        c1 * c2 * c3 + s1 * s2 * s3,
        -c1 * s2 * s3 + s1 * c2 * c3,
        c1 * c2 * s3 - s1 * s2 * c3,
        c1 * s2 * c3 + s1 * c2 * s3,
    ]
}

/// Rows are amplitudes, columns are derivatives by θ₁, θ₂, θ₃.
fn amplitude_jacobian([t1, t2, t3]: [f64; 3]) -> [[f64; 3]; 4] {
    let (s1, c1) = t1.sin_cos();
    let (s2, c2) = t2.sin_cos();
    let (s3, c3) = t3.sin_cos();
    [
        [
            -s1 * c2 * c3 + c1 * s2 * s3,
            -c1 * s2 * c3 + s1 * c2 * s3,
            -c1 * c2 * s3 + s1 * s2 * c3,
        ],
        [
            s1 * s2 * s3 + c1 * c2 * c3,
            -c1 * c2 * s3 - s1 * s2 * c3,
            -c1 * s2 * c3 - s1 * c2 * s3,
        ],
        [
            -s1 * c2 * s3 - c1 * s2 * c3,
            -c1 * s2 * s3 - s1 * c2 * c3,
            c1 * c2 * c3 + s1 * s2 * s3,
        ],
        [
            -s1 * s2 * c3 + c1 * c2 * s3,
            c1 * c2 * c3 - s1 * s2 * s3,
            -c1 * s2 * s3 + s1 * c2 * c3,
        ],
    ]
}

fn wrap_angle(t: f64) -> f64 {
    let w = (t + PI).rem_euclid(2.0 * PI) - PI;
    // keep +π rather than -π so the representative is stable
    if w <= -PI + 1e-15 {
        PI
    } else {
        w
    }
}

/// Shifting an even number of angles by π leaves every amplitude unchanged;
/// returns the wrapped variant with the smallest norm.
fn canonical(theta: [f64; 3]) -> [f64; 3] {
    const SHIFTS: [[f64; 3]; 4] = [[0.0, 0.0, 0.0], [PI, PI, 0.0], [PI, 0.0, PI], [0.0, PI, PI]];
    SHIFTS
        .iter()
        .map(|s| [0, 1, 2].map(|i| wrap_angle(theta[i] + s[i])))
        .min_by(|a, b| norm3(a).total_cmp(&norm3(b)))
        .expect("nonempty")
}

fn norm3(t: &[f64; 3]) -> f64 {
    t.iter().map(|x| x * x).sum::<f64>().sqrt()
}

fn sum_sq(r: &[f64; 4]) -> f64 {
    r.iter().map(|x| x * x).sum()
}

fn residual_vec(theta: [f64; 3], target: &[f64; 4]) -> [f64; 4] {
    let f = amplitude_map(theta);
    [0, 1, 2, 3].map(|i| f[i] - target[i])
}

/// Solves the symmetric 3×3 system `a x = b` by Gaussian elimination with
/// partial pivoting.
#[allow(clippy::needless_range_loop)]
fn solve3(mut a: [[f64; 3]; 3], mut b: [f64; 3]) -> Option<[f64; 3]> {
    for col in 0..3 {
        let pivot = (col..3).max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))?;
        if a[pivot][col].abs() < 1e-300 {
            return None;
        }
        a.swap(col, pivot);
        b.swap(col, pivot);
        for row in (col + 1)..3 {
            let f = a[row][col] / a[col][col];
            for k in col..3 {
                a[row][k] -= f * a[col][k];
            }
            b[row] -= f * b[col];
        }
    }
    let mut x = [0.0; 3];
    for row in (0..3).rev() {
        let tail: f64 = ((row + 1)..3).map(|k| a[row][k] * x[k]).sum();
        x[row] = (b[row] - tail) / a[row][row];
    }
    Some(x)
}

/// Damped Gauss-Newton (Levenberg-Marquardt) from one start point.
#[allow(clippy::needless_range_loop)]
fn descend(start: [f64; 3], target: &[f64; 4]) -> [f64; 3] {
    let mut theta = start;
    let mut r = residual_vec(theta, target);
    let mut cost = sum_sq(&r);
    let mut damping = 1e-3;

    for _ in 0..MAX_ITERATIONS {
        if cost < 1e-30 {
            break;
        }
        let jac = amplitude_jacobian(theta);
        let mut jtj = [[0.0; 3]; 3];
        let mut jtr = [0.0; 3];
        for i in 0..3 {
            for k in 0..4 {
                jtr[i] += jac[k][i] * r[k];
            }
            for j in 0..3 {
                for k in 0..4 {
                    jtj[i][j] += jac[k][i] * jac[k][j];
                }
            }
        }
        let mut improved = false;
        while damping < 1e12 {
            let mut lhs = jtj;
            for (i, row) in lhs.iter_mut().enumerate() {
                row[i] += damping * (1.0 + jtj[i][i]);
            }
            let Some(step) = solve3(lhs, jtr.map(|x| -x)) else {
                damping *= 4.0;
                continue;
            };
            let candidate = [0, 1, 2].map(|i| theta[i] + step[i]);
            let rc = residual_vec(candidate, target);
            let cc = sum_sq(&rc);
            if cc < cost {
                theta = candidate;
                r = rc;
                cost = cc;
                damping = (damping / 3.0).max(1e-15);
                improved = true;
                break;
            }
            damping *= 4.0;
        }
        if !improved {
            break;
        }
    }
    theta
}

/// The 16 deterministic start points: `θ₁, θ₃ ∈ {−π/4, π/4}`,
/// `θ₂ ∈ {−3π/4, −π/4, π/4, 3π/4}`.
pub fn start_lattice() -> Vec<[f64; 3]> {
    let outer = [-FRAC_PI_4, FRAC_PI_4];
    let middle = [-3.0 * FRAC_PI_4, -FRAC_PI_4, FRAC_PI_4, 3.0 * FRAC_PI_4];
    let mut starts = Vec::with_capacity(16);
    for &t1 in &outer {
        for &t2 in &middle {
            for &t3 in &outer {
                starts.push([t1, t2, t3]);
            }
        }
    }
    starts
}

/// Finds angles whose preparation output matches `target` to
/// [`ANGLE_RESIDUAL_TOL`]. Among converged starts the solution with the
/// smallest Euclidean norm (after wrapping to `[−π, π]` and folding the
/// paired-π symmetry) wins.
pub fn solve_preparation_angles(target: &PreparationAmplitudes) -> Result<PreparationAngles> {
    let mut best: Option<[f64; 3]> = None;
    let mut best_residual = f64::INFINITY;

    for start in start_lattice() {
        let theta = canonical(descend(start, &target.0));
        let angles = PreparationAngles::new(theta[0], theta[1], theta[2]);
        let res = angles.residual(target);
        best_residual = best_residual.min(res);
        if res > ANGLE_RESIDUAL_TOL {
            continue;
        }
        // near-ties go to the earlier start so the choice is deterministic
        if best.is_none_or(|b| norm3(&theta) < norm3(&b) - 1e-9) {
            best = Some(theta);
        }
    }

    best.map(|t| PreparationAngles::new(t[0], t[1], t[2]))
        .ok_or(Error::NoAngleSolution { best_residual })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jacobian_matches_central_differences() {
        let theta = [0.3, -1.1, 2.0];
        let jac = amplitude_jacobian(theta);
        let h = 1e-6;
        for j in 0..3 {
            let mut plus = theta;
            let mut minus = theta;
            plus[j] += h;
            minus[j] -= h;
            let (fp, fm) = (amplitude_map(plus), amplitude_map(minus));
            for i in 0..4 {
                let fd = (fp[i] - fm[i]) / (2.0 * h);
                assert!(
                    (fd - jac[i][j]).abs() < 1e-8,
                    "d{i}/d{j}: {fd} vs {}",
                    jac[i][j]
                );
            }
        }
    }

    #[test]
    fn closed_form_angles_reproduce_targets() {
        let dup = PreparationAngles::duplicator();
        assert!(dup.residual(&PreparationAmplitudes::duplicator()) < 1e-15);
        let tri = PreparationAngles::triplicator();
        assert!(tri.residual(&PreparationAmplitudes::triplicator()) < 1e-15);
    }

    #[test]
    fn trivial_target_gives_zero_angles() {
        let a =
            solve_preparation_angles(&PreparationAmplitudes::new([1.0, 0.0, 0.0, 0.0]).unwrap())
                .unwrap();
        assert!(a.norm() < 1e-9, "{a:?}");
    }

    #[test]
    fn amplitudes_validation() {
        assert!(PreparationAmplitudes::new([1.0, 1.0, 0.0, 0.0]).is_err());
        assert!(PreparationAmplitudes::normalized([0.0; 4]).is_err());
        let n = PreparationAmplitudes::normalized([1.0, 1.0, 0.0, 0.0]).unwrap();
        assert!((n.values()[0] - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-15);
    }

    #[test]
    fn canonical_preserves_amplitudes() {
        let t = [2.5, -3.0, 1.9];
        let c = canonical(t);
        let (a, b) = (amplitude_map(t), amplitude_map(c));
        assert!(a.iter().zip(b).all(|(x, y)| (x - y).abs() < 1e-14));
        assert!(norm3(&c) <= norm3(&t));
    }
}
