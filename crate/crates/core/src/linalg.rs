//! Dense complex linear algebra for one to three qubits.
//!
//! Basis states are ordered by ascending binary index with qubit 0 as the most
//! significant bit, so for two qubits the order is `|00>, |01>, |10>, |11>`.
//! Literature often writes two-qubit matrices in the descending order
//! `|11>, |10>, |01>, |00>`; [`SquareMatrix::reversed_basis`] converts between
//! the two.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Tolerance for structural invariants (hermiticity, trace, normalization).
pub const STRUCTURAL_TOL: f64 = 1e-12;
/// Tolerance on computed eigenvalues.
pub const EIGEN_TOL: f64 = 1e-10;
/// Slack allowed below zero before a spectrum counts as not positive.
pub const PSD_SLACK: f64 = 1e-10;

const MAX_DIM: usize = 8;
const JACOBI_OFF_TOL: f64 = 1e-14;
const JACOBI_MAX_SWEEPS: usize = 64;

fn check_dim(dim: usize) -> Result<()> {
    if (2..=MAX_DIM).contains(&dim) && dim.is_power_of_two() {
        Ok(())
    } else {
        Err(Error::InvalidDimension(dim))
    }
}

/// Row-major `dim × dim` complex matrix with `dim ∈ {2, 4, 8}`.
#[derive(Clone, PartialEq)]
pub struct SquareMatrix {
    dim: usize,
    entries: Vec<Complex64>,
}

impl SquareMatrix {
    pub fn zeros(dim: usize) -> Result<Self> {
        check_dim(dim)?;
        Ok(Self {
            dim,
            entries: vec![Complex64::new(0.0, 0.0); dim * dim],
        })
    }

    pub fn identity(dim: usize) -> Result<Self> {
        let mut m = Self::zeros(dim)?;
        for i in 0..dim {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        Ok(m)
    }

    pub fn from_entries(dim: usize, entries: Vec<Complex64>) -> Result<Self> {
        check_dim(dim)?;
        if entries.len() != dim * dim {
            return Err(Error::EntryCount {
                expected: dim * dim,
                got: entries.len(),
            });
        }
        if entries
            .iter()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::NonFinite("matrix"));
        }
        Ok(Self { dim, entries })
    }

    /// Builds a matrix from real entries given row by row.
    pub fn from_real_rows(rows: &[&[f64]]) -> Result<Self> {
        let dim = rows.len();
        let entries = rows
            .iter()
            .flat_map(|r| r.iter().map(|&x| Complex64::new(x, 0.0)))
            .collect();
        Self::from_entries(dim, entries)
    }

    pub fn from_diagonal(diag: &[f64]) -> Result<Self> {
        let mut m = Self::zeros(diag.len())?;
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = Complex64::new(d, 0.0);
        }
        Ok(m)
    }

    /// Outer product `|v><v|`.
    pub fn outer(v: &[Complex64]) -> Result<Self> {
        let dim = v.len();
        let mut m = Self::zeros(dim)?;
        for i in 0..dim {
            for j in 0..dim {
                m[(i, j)] = v[i] * v[j].conj();
            }
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn num_qubits(&self) -> usize {
        self.dim.trailing_zeros() as usize
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self[(i, i)]).sum()
    }

    pub fn adjoint(&self) -> Self {
        self.map_indices(|i, j| self[(j, i)].conj())
    }

    pub fn transpose(&self) -> Self {
        self.map_indices(|i, j| self[(j, i)])
    }

    pub fn scale(&self, factor: f64) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.iter().map(|z| z * factor).collect(),
        }
    }

    /// Largest entry-wise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim, other.dim, "max_abs_diff on different dimensions");
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn hermiticity_error(&self) -> f64 {
        self.max_abs_diff(&self.adjoint())
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermiticity_error() <= tol
    }

    /// Re-expresses the matrix in the basis with reversed index order
    /// (`i -> dim - 1 - i`). The map is its own inverse.
    pub fn reversed_basis(&self) -> Self {
        let n = self.dim - 1;
        self.map_indices(|i, j| self[(n - i, n - j)])
    }

    fn map_indices(&self, f: impl Fn(usize, usize) -> Complex64) -> Self {
        let dim = self.dim;
        let entries = (0..dim * dim).map(|k| f(k / dim, k % dim)).collect();
        Self { dim, entries }
    }
}

impl Index<(usize, usize)> for SquareMatrix {
    type Output = Complex64;

    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.entries[i * self.dim + j]
    }
}

impl IndexMut<(usize, usize)> for SquareMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.entries[i * self.dim + j]
    }
}

impl Add for &SquareMatrix {
    type Output = SquareMatrix;

    fn add(self, rhs: &SquareMatrix) -> SquareMatrix {
        assert_eq!(self.dim, rhs.dim);
        self.map_indices(|i, j| self[(i, j)] + rhs[(i, j)])
    }
}

impl Sub for &SquareMatrix {
    type Output = SquareMatrix;

    fn sub(self, rhs: &SquareMatrix) -> SquareMatrix {
        assert_eq!(self.dim, rhs.dim);
        self.map_indices(|i, j| self[(i, j)] - rhs[(i, j)])
    }
}

impl Mul for &SquareMatrix {
    type Output = SquareMatrix;

    fn mul(self, rhs: &SquareMatrix) -> SquareMatrix {
        assert_eq!(self.dim, rhs.dim);
        self.map_indices(|i, j| (0..self.dim).map(|k| self[(i, k)] * rhs[(k, j)]).sum())
    }
}

impl fmt::Debug for SquareMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SquareMatrix({}x{}) [", self.dim, self.dim)?;
        for i in 0..self.dim {
            write!(f, "  ")?;
            for j in 0..self.dim {
                let z = self[(i, j)];
                write!(f, "{:+.6}{:+.6}i  ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Hermitian, unit-trace, positive semidefinite operator on 1 to 3 qubits.
#[derive(Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: SquareMatrix,
}

impl DensityMatrix {
    /// Validates the density-matrix invariants at the crate tolerances.
    pub fn new(matrix: SquareMatrix) -> Result<Self> {
        let herm = matrix.hermiticity_error();
        if herm > STRUCTURAL_TOL {
            return Err(Error::NotHermitian(herm));
        }
        let tr = matrix.trace();
        if (tr - 1.0).norm() > STRUCTURAL_TOL {
            return Err(Error::NotUnitTrace(tr.re));
        }
        let min = hermitian_eigenvalues(&matrix)?[0];
        if min < -PSD_SLACK {
            return Err(Error::NotPositive(min));
        }
        Ok(Self { matrix })
    }

    /// Pure-state projector `|v><v|`; `v` must be normalized.
    pub fn pure(v: &[Complex64]) -> Result<Self> {
        let norm_sqr: f64 = v.iter().map(|z| z.norm_sqr()).sum();
        if (norm_sqr - 1.0).abs() > STRUCTURAL_TOL {
            return Err(Error::NotNormalized(norm_sqr));
        }
        // rank one and normalized, so the invariants hold by construction
        Ok(Self {
            matrix: SquareMatrix::outer(v)?,
        })
    }

    pub fn maximally_mixed(num_qubits: usize) -> Result<Self> {
        let dim = 1usize << num_qubits;
        Ok(Self {
            matrix: SquareMatrix::identity(dim)?.scale(1.0 / dim as f64),
        })
    }

    pub fn matrix(&self) -> &SquareMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> SquareMatrix {
        self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim
    }

    pub fn num_qubits(&self) -> usize {
        self.matrix.num_qubits()
    }

    /// `Tr ρ²`, equal to one for pure states.
    pub fn purity(&self) -> f64 {
        self.matrix.entries.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn eigenvalues(&self) -> Vec<f64> {
        hermitian_eigenvalues(&self.matrix).expect("density matrices are Hermitian")
    }

    /// Expectation value `Tr(ρ A)`.
    pub fn expectation(&self, observable: &SquareMatrix) -> Complex64 {
        (&self.matrix * observable).trace()
    }
}

impl Index<(usize, usize)> for DensityMatrix {
    type Output = Complex64;

    fn index(&self, idx: (usize, usize)) -> &Complex64 {
        &self.matrix[idx]
    }
}

impl fmt::Debug for DensityMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Density{:?}", self.matrix)
    }
}

/// Tensor product with `a` as the high-order subsystem.
pub fn kron(a: &SquareMatrix, b: &SquareMatrix) -> Result<SquareMatrix> {
    let dim = a.dim * b.dim;
    if dim > MAX_DIM {
        return Err(Error::DimensionOverflow(dim));
    }
    let mut out = SquareMatrix::zeros(dim)?;
    for (i, j) in (0..a.dim).flat_map(|i| (0..a.dim).map(move |j| (i, j))) {
        let aij = a[(i, j)];
        for k in 0..b.dim {
            for l in 0..b.dim {
                out[(i * b.dim + k, j * b.dim + l)] = aij * b[(k, l)];
            }
        }
    }
    Ok(out)
}

/// Tensor product of two density matrices.
pub fn kron_density(a: &DensityMatrix, b: &DensityMatrix) -> Result<DensityMatrix> {
    Ok(DensityMatrix {
        matrix: kron(&a.matrix, &b.matrix)?,
    })
}

/// Reduced density matrix on the qubits in `keep`, listed in output order
/// (the first kept qubit becomes the most significant one).
pub fn partial_trace(rho: &DensityMatrix, keep: &[usize]) -> Result<DensityMatrix> {
    let n = rho.num_qubits();
    let invalid = || Error::InvalidSelection {
        keep: keep.to_vec(),
        num_qubits: n,
    };
    if keep.is_empty() || keep.iter().any(|&q| q >= n) {
        return Err(invalid());
    }
    for (i, q) in keep.iter().enumerate() {
        if keep[..i].contains(q) {
            return Err(invalid());
        }
    }
    let traced: Vec<usize> = (0..n).filter(|q| !keep.contains(q)).collect();
    let bit = |q: usize| 1usize << (n - 1 - q);
    // scatter the bits of `value` onto the listed qubits
    let place = |qubits: &[usize], value: usize| -> usize {
        let m = qubits.len();
        qubits
            .iter()
            .enumerate()
            .filter(|(pos, _)| value >> (m - 1 - pos) & 1 == 1)
            .map(|(_, &q)| bit(q))
            .sum()
    };

    let out_dim = 1usize << keep.len();
    let mut out = SquareMatrix::zeros(out_dim)?;
    for r in 0..out_dim {
        let row_base = place(keep, r);
        for c in 0..out_dim {
            let col_base = place(keep, c);
            let mut acc = Complex64::new(0.0, 0.0);
            for t in 0..(1usize << traced.len()) {
                let env = place(&traced, t);
                acc += rho.matrix[(row_base | env, col_base | env)];
            }
            out[(r, c)] = acc;
        }
    }
    Ok(DensityMatrix { matrix: out })
}

/// Partial transpose of a 4×4 matrix on `subsystem` (0 = first, 1 = second).
///
/// For the second subsystem this is `ρ^{T₂}_{mμ,nν} = ρ_{mν,nμ}`.
pub fn partial_transpose_matrix(m: &SquareMatrix, subsystem: usize) -> Result<SquareMatrix> {
    if m.dim != 4 {
        return Err(Error::WrongQubitCount {
            expected: 2,
            got: m.num_qubits(),
        });
    }
    if subsystem > 1 {
        return Err(Error::QubitOutOfRange {
            index: subsystem,
            num_qubits: 2,
        });
    }
    let idx = |a: usize, b: usize| 2 * a + b;
    let mut out = SquareMatrix::zeros(4)?;
    for (m1, mu) in (0..2).flat_map(|x| (0..2).map(move |y| (x, y))) {
        for (n1, nu) in (0..2).flat_map(|x| (0..2).map(move |y| (x, y))) {
            out[(idx(m1, mu), idx(n1, nu))] = if subsystem == 1 {
                m[(idx(m1, nu), idx(n1, mu))]
            } else {
                m[(idx(n1, mu), idx(m1, nu))]
            };
        }
    }
    Ok(out)
}

/// Partial transpose of a two-qubit density matrix. The result is Hermitian
/// with unit trace but may have negative eigenvalues.
pub fn partial_transpose(rho: &DensityMatrix, subsystem: usize) -> Result<SquareMatrix> {
    partial_transpose_matrix(&rho.matrix, subsystem)
}

/// All eigenvalues of a Hermitian matrix in ascending order, repeated
/// according to multiplicity. Uses cyclic complex Jacobi rotations.
pub fn hermitian_eigenvalues(h: &SquareMatrix) -> Result<Vec<f64>> {
    let herm = h.hermiticity_error();
    if herm > EIGEN_TOL {
        return Err(Error::NotHermitian(herm));
    }
    // symmetrize so rounding in the input cannot bias the rotations
    let mut a = (h + &h.adjoint()).scale(0.5);
    let n = a.dim;
    let scale = a
        .entries
        .iter()
        .map(|z| z.norm_sqr())
        .sum::<f64>()
        .sqrt()
        .max(1.0);

    for _ in 0..JACOBI_MAX_SWEEPS {
        if off_diagonal_norm(&a) <= JACOBI_OFF_TOL * scale {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                jacobi_rotate(&mut a, p, q);
            }
        }
    }

    let mut eig: Vec<f64> = (0..n).map(|i| a[(i, i)].re).collect();
    eig.sort_by(f64::total_cmp);
    Ok(eig)
}

fn off_diagonal_norm(a: &SquareMatrix) -> f64 {
    let n = a.dim;
    (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .map(|ij| a[ij].norm_sqr())
        .sum::<f64>()
        .sqrt()
}

/// Annihilates `a[p][q]` with the unitary `J = diag-phase · real rotation`,
/// replacing `a` by `J† a J`.
fn jacobi_rotate(a: &mut SquareMatrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let g = apq.norm();
    if g == 0.0 {
        return;
    }
    let phase = (apq / g).conj();
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    let tau = (aqq - app) / (2.0 * g);
    let t = if tau == 0.0 {
        1.0
    } else {
        tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    let jpp = Complex64::new(c, 0.0);
    let jpq = Complex64::new(s, 0.0);
    let jqp = -phase * s;
    let jqq = phase * c;

    let n = a.dim;
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * jpp + akq * jqp;
        a[(k, q)] = akp * jpq + akq * jqq;
    }
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = jpp.conj() * apk + jqp.conj() * aqk;
        a[(q, k)] = jpq.conj() * apk + jqq.conj() * aqk;
    }
    a[(p, q)] = Complex64::new(0.0, 0.0);
    a[(q, p)] = Complex64::new(0.0, 0.0);
    a[(p, p)] = Complex64::new(a[(p, p)].re, 0.0);
    a[(q, q)] = Complex64::new(a[(q, q)].re, 0.0);
}

/// Squared Hilbert-Schmidt distance `Tr[(ρ₁ − ρ₂)²]`.
pub fn hs_distance(rho1: &DensityMatrix, rho2: &DensityMatrix) -> Result<f64> {
    hs_distance_matrix(&rho1.matrix, &rho2.matrix)
}

/// `Tr[(A − B)²]` for Hermitian `A`, `B`, evaluated as the entry-wise sum
/// `Σ |A_ij − B_ij|²`.
pub fn hs_distance_matrix(a: &SquareMatrix, b: &SquareMatrix) -> Result<f64> {
    if a.dim != b.dim {
        return Err(Error::DimensionMismatch {
            left: a.dim,
            right: b.dim,
        });
    }
    Ok(a.entries
        .iter()
        .zip(&b.entries)
        .map(|(x, y)| (x - y).norm_sqr())
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_1_SQRT_2;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn bell() -> DensityMatrix {
        DensityMatrix::pure(&[c(FRAC_1_SQRT_2), c(0.0), c(0.0), c(FRAC_1_SQRT_2)]).unwrap()
    }

    #[test]
    fn kron_identities_and_projectors() {
        let i2 = SquareMatrix::identity(2).unwrap();
        assert_eq!(kron(&i2, &i2).unwrap(), SquareMatrix::identity(4).unwrap());
        let p0 = SquareMatrix::from_diagonal(&[1.0, 0.0]).unwrap();
        assert_eq!(
            kron(&p0, &p0).unwrap(),
            SquareMatrix::from_diagonal(&[1.0, 0.0, 0.0, 0.0]).unwrap()
        );
    }

    #[test]
    fn kron_uniform_superposition() {
        let plus = SquareMatrix::outer(&[c(FRAC_1_SQRT_2), c(FRAC_1_SQRT_2)]).unwrap();
        let k = kron(&plus, &plus).unwrap();
        assert!(k.entries().iter().all(|z| (z - 0.25).norm() < 1e-15));
    }

    #[test]
    fn kron_rejects_overflow() {
        let i4 = SquareMatrix::identity(4).unwrap();
        assert_eq!(kron(&i4, &i4), Err(Error::DimensionOverflow(16)));
    }

    #[test]
    fn kron_is_high_order_left() {
        // |1><1| ⊗ |0><0| puts weight on index 0b10
        let p1 = SquareMatrix::from_diagonal(&[0.0, 1.0]).unwrap();
        let p0 = SquareMatrix::from_diagonal(&[1.0, 0.0]).unwrap();
        let k = kron(&p1, &p0).unwrap();
        assert_eq!(k[(2, 2)], c(1.0));
    }

    #[test]
    fn partial_trace_product_and_bell() {
        let p00 = DensityMatrix::pure(&[c(1.0), c(0.0), c(0.0), c(0.0)]).unwrap();
        let r = partial_trace(&p00, &[0]).unwrap();
        assert_eq!(
            r.matrix(),
            &SquareMatrix::from_diagonal(&[1.0, 0.0]).unwrap()
        );

        let mixed = SquareMatrix::identity(2).unwrap().scale(0.5);
        for q in 0..2 {
            let r = partial_trace(&bell(), &[q]).unwrap();
            assert!(r.matrix().max_abs_diff(&mixed) < 1e-15);
        }
    }

    #[test]
    fn partial_trace_respects_keep_order() {
        // |01> reduced onto (1, 0) reads |10>
        let s = DensityMatrix::pure(&[c(0.0), c(1.0), c(0.0), c(0.0)]).unwrap();
        let swapped = partial_trace(&s, &[1, 0]).unwrap();
        assert_eq!(swapped[(2, 2)], c(1.0));
        let same = partial_trace(&s, &[0, 1]).unwrap();
        assert_eq!(same, s);
    }

    #[test]
    fn partial_trace_rejects_bad_selection() {
        let b = bell();
        assert!(partial_trace(&b, &[]).is_err());
        assert!(partial_trace(&b, &[2]).is_err());
        assert!(partial_trace(&b, &[0, 0]).is_err());
    }

    #[test]
    fn partial_transpose_of_bell_is_not_positive() {
        let pt = partial_transpose(&bell(), 1).unwrap();
        let eig = hermitian_eigenvalues(&pt).unwrap();
        assert!((eig[0] + 0.5).abs() < 1e-12);
        assert!(eig[1..].iter().all(|e| (e - 0.5).abs() < 1e-12));
    }

    #[test]
    fn partial_transpose_wrong_dimension() {
        let r = DensityMatrix::maximally_mixed(1).unwrap();
        assert!(matches!(
            partial_transpose(&r, 1),
            Err(Error::WrongQubitCount { .. })
        ));
        assert!(partial_transpose(&bell(), 2).is_err());
    }

    #[test]
    fn partial_transpose_of_real_product_is_unchanged() {
        let a = SquareMatrix::from_real_rows(&[&[0.7, 0.2], &[0.2, 0.3]]).unwrap();
        let b = SquareMatrix::from_real_rows(&[&[0.4, -0.1], &[-0.1, 0.6]]).unwrap();
        let prod = DensityMatrix::new(kron(&a, &b).unwrap()).unwrap();
        let pt = partial_transpose(&prod, 1).unwrap();
        assert!(pt.max_abs_diff(prod.matrix()) < 1e-15);
        assert!(hermitian_eigenvalues(&pt).unwrap()[0] >= -PSD_SLACK);
    }

    #[test]
    fn eigenvalues_of_diagonal() {
        let d = SquareMatrix::from_diagonal(&[4.0 / 6.0, 1.0 / 6.0, 1.0 / 6.0, 0.0]).unwrap();
        let eig = hermitian_eigenvalues(&d).unwrap();
        let expected = [0.0, 1.0 / 6.0, 1.0 / 6.0, 2.0 / 3.0];
        for (e, x) in eig.iter().zip(expected) {
            assert!((e - x).abs() < 1e-15);
        }
    }

    #[test]
    fn eigenvalues_reject_non_hermitian() {
        let m = SquareMatrix::from_real_rows(&[&[1.0, 1.0], &[0.0, 1.0]]).unwrap();
        assert!(matches!(
            hermitian_eigenvalues(&m),
            Err(Error::NotHermitian(_))
        ));
    }

    #[test]
    fn eigenvalues_of_complex_two_by_two() {
        // [[1, i], [-i, 1]] has eigenvalues 0 and 2
        let m =
            SquareMatrix::from_entries(2, vec![c(1.0), Complex64::i(), -Complex64::i(), c(1.0)])
                .unwrap();
        let eig = hermitian_eigenvalues(&m).unwrap();
        assert!(eig[0].abs() < 1e-14 && (eig[1] - 2.0).abs() < 1e-14);
    }

    #[test]
    fn hs_distance_basics() {
        let p0 = DensityMatrix::pure(&[c(1.0), c(0.0)]).unwrap();
        let p1 = DensityMatrix::pure(&[c(0.0), c(1.0)]).unwrap();
        assert_eq!(hs_distance(&p0, &p0).unwrap(), 0.0);
        assert!((hs_distance(&p0, &p1).unwrap() - 2.0).abs() < 1e-15);
        assert!(matches!(
            hs_distance(&p0, &bell()),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn density_validation() {
        let not_unit = SquareMatrix::identity(2).unwrap();
        assert!(matches!(
            DensityMatrix::new(not_unit),
            Err(Error::NotUnitTrace(_))
        ));
        let negative = SquareMatrix::from_diagonal(&[1.5, -0.5]).unwrap();
        assert!(matches!(
            DensityMatrix::new(negative),
            Err(Error::NotPositive(_))
        ));
        let non_herm = SquareMatrix::from_real_rows(&[&[0.5, 0.1], &[0.0, 0.5]]).unwrap();
        assert!(matches!(
            DensityMatrix::new(non_herm),
            Err(Error::NotHermitian(_))
        ));
        assert!(SquareMatrix::zeros(3).is_err());
        assert!(SquareMatrix::zeros(16).is_err());
    }

    #[test]
    fn reversed_basis_is_involution() {
        let m = SquareMatrix::from_entries(4, (0..16).map(|k| c(k as f64)).collect()).unwrap();
        assert_eq!(m.reversed_basis()[(0, 0)], c(15.0));
        assert_eq!(m.reversed_basis().reversed_basis(), m);
    }
}
