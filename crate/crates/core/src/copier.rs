//! Duplicator and triplicator networks and the characterization of their
//! output: reduced states, scaled-form fits, fidelity splits and
//! Hilbert-Schmidt distances to the ideal copies.
//!
//! Register layout: qubit 0 is the original (`a₁`), qubits 1 and 2 are the
//! ancillas (`a₂`, `a₃`) that start in `|00>` and carry the copies.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;

use crate::angles::{preparation_network, PreparationAmplitudes, PreparationAngles};
use crate::error::{Error, Result};
use crate::gates::{GateNetwork, PureState};
use crate::linalg::{
    hs_distance, hs_distance_matrix, kron, partial_trace, DensityMatrix, SquareMatrix,
};

/// Residual allowed when fitting or checking closed-form output laws.
pub const LAW_TOL: f64 = 1e-10;

/// Normalization slack accepted for raw `(α, β)` input.
pub const AMPLITUDE_NORM_TOL: f64 = 1e-9;

/// Input qubit `α|0> + β|1>` with `α = sin ϑ e^{iφ}` and `β = cos ϑ`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct InputQubit {
    theta: f64,
    phi: f64,
}

impl InputQubit {
    pub fn new(theta: f64, phi: f64) -> Result<Self> {
        if !theta.is_finite() || !phi.is_finite() {
            return Err(Error::NonFinite("input angles"));
        }
        Ok(Self { theta, phi })
    }

    /// Converts raw amplitudes, discarding the global phase that makes `β`
    /// real and non-negative. `|α|² + |β|²` must be within
    /// [`AMPLITUDE_NORM_TOL`] of one.
    pub fn from_amplitudes(alpha: Complex64, beta: Complex64) -> Result<Self> {
        let norm_sqr = alpha.norm_sqr() + beta.norm_sqr();
        if !norm_sqr.is_finite() {
            return Err(Error::NonFinite("input amplitudes"));
        }
        if (norm_sqr - 1.0).abs() > AMPLITUDE_NORM_TOL {
            return Err(Error::NotNormalized(norm_sqr));
        }
        let global = if beta.norm() > 0.0 {
            (beta / beta.norm()).conj()
        } else {
            Complex64::new(1.0, 0.0)
        };
        let alpha = alpha * global;
        let theta = alpha.norm().atan2(beta.norm());
        let phi = if alpha.norm() > 0.0 { alpha.arg() } else { 0.0 };
        Self::new(theta, phi)
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    pub fn alpha(&self) -> Complex64 {
        Complex64::from_polar(self.theta.sin(), self.phi)
    }

    pub fn beta(&self) -> Complex64 {
        Complex64::new(self.theta.cos(), 0.0)
    }

    /// `|ψ> = α|0> + β|1>`.
    pub fn state(&self) -> PureState {
        PureState::new(vec![self.alpha(), self.beta()]).expect("normalized by construction")
    }

    /// `|ψ⊥> = β*|0> − α*|1>`.
    pub fn orthogonal_state(&self) -> PureState {
        PureState::new(vec![self.beta().conj(), -self.alpha().conj()])
            .expect("normalized by construction")
    }

    /// `|α|²|β|²`.
    pub fn amplitude_product(&self) -> f64 {
        self.alpha().norm_sqr() * self.beta().norm_sqr()
    }

    /// `|α|²|β|² sin²φ`, the factor that controls how far the triplicator
    /// and the duplicator's original qubit drift from their real-input
    /// behaviour.
    pub fn phase_sensitivity(&self) -> f64 {
        self.amplitude_product() * self.phi.sin().powi(2)
    }

    /// `(|ψ><ψ|)^{⊗n}`.
    pub fn ideal_density(&self, n: usize) -> Result<DensityMatrix> {
        ideal_density(self, n)
    }
}

impl fmt::Display for InputQubit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ϑ={}, φ={}", self.theta, self.phi)
    }
}

pub fn ideal_density(input: &InputQubit, n: usize) -> Result<DensityMatrix> {
    if !(1..=3).contains(&n) {
        return Err(Error::CopyCount(n));
    }
    let single = input.state().density();
    let mut acc = single.matrix().clone();
    for _ in 1..n {
        acc = kron(&acc, single.matrix())?;
    }
    DensityMatrix::new(acc)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CopyVariant {
    Duplicator,
    Triplicator,
}

impl CopyVariant {
    pub const ALL: [CopyVariant; 2] = [CopyVariant::Duplicator, CopyVariant::Triplicator];

    pub fn name(&self) -> &'static str {
        match self {
            CopyVariant::Duplicator => "duplicator",
            CopyVariant::Triplicator => "triplicator",
        }
    }

    pub fn preparation_amplitudes(&self) -> PreparationAmplitudes {
        match self {
            CopyVariant::Duplicator => PreparationAmplitudes::duplicator(),
            CopyVariant::Triplicator => PreparationAmplitudes::triplicator(),
        }
    }

    pub fn preparation_angles(&self) -> PreparationAngles {
        match self {
            CopyVariant::Duplicator => PreparationAngles::duplicator(),
            CopyVariant::Triplicator => PreparationAngles::triplicator(),
        }
    }

    /// Preparation followed by the copy stage.
    pub fn network(&self) -> GateNetwork {
        preparation_network(&self.preparation_angles()).then(&copy_stage_network())
    }
}

impl fmt::Display for CopyVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for CopyVariant {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "duplicator" | "dup" => Ok(CopyVariant::Duplicator),
            "triplicator" | "tri" => Ok(CopyVariant::Triplicator),
            other => Err(format!("unknown variant `{other}`")),
        }
    }
}

/// The four controlled-NOTs that spread the original over the ancillas, in
/// application order: `a₁→a₂`, `a₁→a₃`, `a₂→a₁`, `a₃→a₁`.
pub fn copy_stage_network() -> GateNetwork {
    GateNetwork::default()
        .cnot(0, 1)
        .cnot(0, 2)
        .cnot(1, 0)
        .cnot(2, 0)
}

/// Qubit pairs of the three-qubit output. The first-listed qubit is the
/// high-order subsystem of the pair's reduced matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pair {
    A2A3,
    A1A2,
    A1A3,
}

impl Pair {
    pub const ALL: [Pair; 3] = [Pair::A2A3, Pair::A1A2, Pair::A1A3];

    pub fn qubits(&self) -> [usize; 2] {
        match self {
            Pair::A2A3 => [1, 2],
            Pair::A1A2 => [0, 1],
            Pair::A1A3 => [0, 2],
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Pair::A2A3 => "a2a3",
            Pair::A1A2 => "a1a2",
            Pair::A1A3 => "a1a3",
        }
    }

    fn index(&self) -> usize {
        *self as usize
    }
}

pub const QUBIT_LABELS: [&str; 3] = ["a1", "a2", "a3"];

/// Weights of a single-qubit state on `|ψ>` and on `|ψ⊥>`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FidelitySplit {
    pub ideal: f64,
    pub orthogonal: f64,
}

/// Best scaled-form fit `ρ ≈ s·ρ_id + (1 − s)/2 · 1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScalingFit {
    pub s: f64,
    /// Hilbert-Schmidt norm of the fit residual.
    pub residual: f64,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Distances {
    /// Per qubit, in register order.
    pub d1: [f64; 3],
    /// Per pair, in [`Pair::ALL`] order.
    pub d2: [f64; 3],
    /// Three-qubit distance; only defined for the triplicator and custom
    /// networks.
    pub d3: Option<f64>,
}

impl Distances {
    pub fn d2(&self, pair: Pair) -> f64 {
        self.d2[pair.index()]
    }
}

/// Everything derived from one run of a copier (or any three-qubit network
/// fed with `|ψ>|00>`).
#[derive(Clone, Debug)]
pub struct CopyReport {
    pub variant: Option<CopyVariant>,
    pub input: InputQubit,
    pub output_state: PureState,
    /// Single-qubit reductions for `a₁`, `a₂`, `a₃`.
    pub rho: [DensityMatrix; 3],
    /// Pair reductions in [`Pair::ALL`] order.
    pub rho_pairs: [DensityMatrix; 3],
    pub scaling: [Option<f64>; 3],
    pub fidelity: [FidelitySplit; 3],
    pub distances: Distances,
}

impl CopyReport {
    /// Analyzes a three-qubit output state. `d3` is left unset for the
    /// duplicator, which has no three-copy ideal.
    pub fn from_output(
        input: InputQubit,
        variant: Option<CopyVariant>,
        output_state: PureState,
    ) -> Result<Self> {
        if output_state.num_qubits() != 3 {
            return Err(Error::WrongQubitCount {
                expected: 3,
                got: output_state.num_qubits(),
            });
        }
        let full = output_state.density();
        let rho = [
            partial_trace(&full, &[0])?,
            partial_trace(&full, &[1])?,
            partial_trace(&full, &[2])?,
        ];
        let rho_pairs = [
            partial_trace(&full, &Pair::A2A3.qubits())?,
            partial_trace(&full, &Pair::A1A2.qubits())?,
            partial_trace(&full, &Pair::A1A3.qubits())?,
        ];
        let ideal = input.ideal_density(1)?;
        let mut scaling = [None; 3];
        let mut fidelity = [FidelitySplit {
            ideal: 0.0,
            orthogonal: 0.0,
        }; 3];
        for q in 0..3 {
            scaling[q] = scaling_decompose(&rho[q], &ideal)?;
            fidelity[q] = fidelity_split(&rho[q], &input)?;
        }
        let mut report = Self {
            variant,
            input,
            output_state,
            rho,
            rho_pairs,
            scaling,
            fidelity,
            distances: Distances {
                d1: [0.0; 3],
                d2: [0.0; 3],
                d3: None,
            },
        };
        report.distances = distances_report(&report, &input)?;
        Ok(report)
    }

    pub fn rho_pair(&self, pair: Pair) -> &DensityMatrix {
        &self.rho_pairs[pair.index()]
    }
}

/// Runs the chosen copier on `|ψ>|00>`.
pub fn run_copier(input: &InputQubit, variant: CopyVariant) -> Result<CopyReport> {
    let register = input.state().tensor(&PureState::basis(2, 0)?)?;
    let output = variant.network().run(&register)?;
    CopyReport::from_output(*input, Some(variant), output)
}

/// d₁ per qubit, d₂ per pair and (except for the duplicator) d₃ against the
/// ideal product states.
pub fn distances_report(report: &CopyReport, input: &InputQubit) -> Result<Distances> {
    let ideal1 = input.ideal_density(1)?;
    let ideal2 = input.ideal_density(2)?;
    let mut d1 = [0.0; 3];
    for (d, rho) in d1.iter_mut().zip(&report.rho) {
        *d = hs_distance(rho, &ideal1)?;
    }
    let mut d2 = [0.0; 3];
    for (d, rho) in d2.iter_mut().zip(&report.rho_pairs) {
        *d = hs_distance(rho, &ideal2)?;
    }
    let d3 = match report.variant {
        Some(CopyVariant::Duplicator) => None,
        _ => {
            let ideal3 = input.ideal_density(3)?;
            Some(hs_distance(&report.output_state.density(), &ideal3)?)
        }
    };
    Ok(Distances { d1, d2, d3 })
}

/// Least-squares scaled-form fit of a single-qubit state against a pure
/// reference.
pub fn scaling_fit(rho_out: &DensityMatrix, rho_id: &DensityMatrix) -> Result<ScalingFit> {
    for rho in [rho_out, rho_id] {
        if rho.num_qubits() != 1 {
            return Err(Error::WrongQubitCount {
                expected: 1,
                got: rho.num_qubits(),
            });
        }
    }
    let purity = rho_id.purity();
    if purity < 1.0 - LAW_TOL {
        return Err(Error::NotPure(purity));
    }
    let half_identity = SquareMatrix::identity(2)?.scale(0.5);
    // ρ − 1/2 = s (ρ_id − 1/2) is linear in s
    let x = rho_id.matrix() - &half_identity;
    let y = rho_out.matrix() - &half_identity;
    let xy: f64 = x
        .entries()
        .iter()
        .zip(y.entries())
        .map(|(a, b)| (a.conj() * b).re)
        .sum();
    let xx: f64 = x.entries().iter().map(|a| a.norm_sqr()).sum();
    let s = xy / xx;
    let residual = hs_distance_matrix(&y, &x.scale(s))?.sqrt();
    Ok(ScalingFit { s, residual })
}

/// Scaling factor `s` if `rho_out` has the scaled form within [`LAW_TOL`].
pub fn scaling_decompose(rho_out: &DensityMatrix, rho_id: &DensityMatrix) -> Result<Option<f64>> {
    let fit = scaling_fit(rho_out, rho_id)?;
    Ok((fit.residual <= LAW_TOL).then_some(fit.s))
}

/// `(<ψ|ρ|ψ>, <ψ⊥|ρ|ψ⊥>)` for a single-qubit state.
pub fn fidelity_split(rho_out: &DensityMatrix, input: &InputQubit) -> Result<FidelitySplit> {
    if rho_out.num_qubits() != 1 {
        return Err(Error::WrongQubitCount {
            expected: 1,
            got: rho_out.num_qubits(),
        });
    }
    let weight = |v: &PureState| -> f64 {
        let a = v.amplitudes();
        let mut acc = Complex64::new(0.0, 0.0);
        for i in 0..2 {
            for j in 0..2 {
                acc += a[i].conj() * rho_out[(i, j)] * a[j];
            }
        }
        acc.re
    };
    Ok(FidelitySplit {
        ideal: weight(&input.state()),
        orthogonal: weight(&input.orthogonal_state()),
    })
}

/// Outcome of comparing the duplicator's original qubit with
/// `ρᵀ/3 + 1/3`.
#[derive(Clone, Debug, PartialEq)]
pub struct TransposeCheck {
    pub holds: bool,
    /// Largest entry-wise deviation.
    pub residual: f64,
    pub predicted: SquareMatrix,
}

/// `(1/3)(ρ_in)ᵀ + (1/3)·1`, transposed in the computational basis.
pub fn transposed_original_prediction(input: &InputQubit) -> Result<SquareMatrix> {
    let rho_in = input.ideal_density(1)?;
    let third = SquareMatrix::identity(2)?.scale(1.0 / 3.0);
    Ok(&rho_in.matrix().transpose().scale(1.0 / 3.0) + &third)
}

pub fn original_transpose_check(report: &CopyReport, input: &InputQubit) -> Result<TransposeCheck> {
    if report.variant != Some(CopyVariant::Duplicator) {
        return Err(Error::Precondition(
            "transpose law applies to the duplicator only".into(),
        ));
    }
    let predicted = transposed_original_prediction(input)?;
    let residual = report.rho[0].matrix().max_abs_diff(&predicted);
    Ok(TransposeCheck {
        holds: residual <= LAW_TOL,
        residual,
        predicted,
    })
}

/// `(Tr(ρ A), Tr(ρᵀ Aᵀ))`. The two agree for any `ρ` and `A`, so measuring
/// `Aᵀ` on a transposed state recovers `<A>` of the original.
pub fn expectation_recovery(
    rho: &DensityMatrix,
    observable: &SquareMatrix,
) -> (Complex64, Complex64) {
    let direct = rho.expectation(observable);
    let transposed = (&rho.matrix().transpose() * &observable.transpose()).trace();
    (direct, transposed)
}

/// Closed-form distance laws as functions of the input.
pub mod laws {
    use super::InputQubit;

    /// Duplicator copies: `(1 − s)²/2` with `s = 2/3`.
    pub const DUPLICATOR_D1: f64 = 1.0 / 18.0;
    /// Duplicator copy pair: `s²/2`.
    pub const DUPLICATOR_D2: f64 = 2.0 / 9.0;
    pub const SCALING: f64 = 2.0 / 3.0;
    pub const FIDELITY_IDEAL: f64 = 5.0 / 6.0;
    pub const FIDELITY_ORTHOGONAL: f64 = 1.0 / 6.0;

    fn growth(input: &InputQubit) -> f64 {
        1.0 + 12.0 * input.phase_sensitivity()
    }

    /// Duplicator original qubit `a₁`.
    pub fn duplicator_original_d1(input: &InputQubit) -> f64 {
        2.0 / 9.0 * growth(input)
    }

    pub fn triplicator_d1(input: &InputQubit) -> f64 {
        growth(input) / 18.0
    }

    pub fn triplicator_d2(input: &InputQubit) -> f64 {
        2.0 / 9.0 * growth(input)
    }

    pub fn triplicator_d3(input: &InputQubit) -> f64 {
        0.5 * growth(input)
    }
}

/// `ϑ` grid on `[0, π/2]` and `φ` grid on `[0, 2π)` with `n` points each.
pub fn input_grid(n: usize) -> Vec<InputQubit> {
    let mut out = Vec::with_capacity(n * n);
    for i in 0..n {
        let theta = if n == 1 {
            0.0
        } else {
            PI / 2.0 * i as f64 / (n - 1) as f64
        };
        for j in 0..n {
            let phi = 2.0 * PI * j as f64 / n as f64;
            out.push(InputQubit { theta, phi });
        }
    }
    out
}
