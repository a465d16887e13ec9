//! Peres-Horodecki analysis of two-qubit states: a two-qubit state is
//! separable exactly when its partial transpose has no negative eigenvalue.

use std::f64::consts::{FRAC_PI_2, PI};

use rayon::prelude::*;

use crate::copier::{laws, run_copier, CopyVariant, InputQubit, Pair};
use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigenvalues, partial_transpose, DensityMatrix};

/// An eigenvalue counts as negative below `-NEGATIVITY_TOL`.
pub const NEGATIVITY_TOL: f64 = 1e-10;
/// Slack on the triplicator negativity bound.
pub const BOUND_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Separable,
    Inseparable,
    /// Smallest eigenvalue lies in `[-NEGATIVITY_TOL, 0)`.
    Indeterminate,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Separable => "separable",
            Verdict::Inseparable => "inseparable",
            Verdict::Indeterminate => "indeterminate",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PptReport {
    /// Partial-transpose eigenvalues, ascending, repeated by multiplicity.
    pub spectrum: [f64; 4],
    pub min_eigenvalue: f64,
    pub verdict: Verdict,
    pub tag: String,
}

impl PptReport {
    pub fn inseparable(&self) -> bool {
        self.verdict == Verdict::Inseparable
    }

    pub fn with_tag(mut self, tag: impl Into<String>) -> Self {
        self.tag = tag.into();
        self
    }
}

/// PPT analysis transposing the second subsystem.
pub fn ppt_verdict(rho: &DensityMatrix) -> Result<PptReport> {
    ppt_verdict_on(rho, 1)
}

pub fn ppt_verdict_on(rho: &DensityMatrix, subsystem: usize) -> Result<PptReport> {
    let pt = partial_transpose(rho, subsystem)?;
    let eig = hermitian_eigenvalues(&pt)?;
    let spectrum: [f64; 4] = eig.try_into().expect("4x4 spectrum");
    let min = spectrum[0];
    let verdict = if min < -NEGATIVITY_TOL {
        Verdict::Inseparable
    } else if min < 0.0 {
        Verdict::Indeterminate
    } else {
        Verdict::Separable
    };
    Ok(PptReport {
        spectrum,
        min_eigenvalue: min,
        verdict,
        tag: String::new(),
    })
}

/// Duplicator pair spectrum `{(2−√5)/6, 1/6, 1/6, (2+√5)/6}`, ascending.
pub fn duplicator_pair_spectrum() -> [f64; 4] {
    let r5 = 5f64.sqrt();
    [(2.0 - r5) / 6.0, 1.0 / 6.0, 1.0 / 6.0, (2.0 + r5) / 6.0]
}

/// Triplicator pair spectrum for real input
/// `{−1/6, (5−√17)/12, 1/3, (5+√17)/12}`, ascending.
pub fn triplicator_pair_spectrum() -> [f64; 4] {
    let r17 = 17f64.sqrt();
    [
        -1.0 / 6.0,
        (5.0 - r17) / 12.0,
        1.0 / 3.0,
        (5.0 + r17) / 12.0,
    ]
}

/// Smallest partial-transpose eigenvalue of the triplicator's `a₂a₃` pair.
pub fn triplicator_negativity(input: &InputQubit) -> Result<f64> {
    let report = run_copier(input, CopyVariant::Triplicator)?;
    Ok(ppt_verdict(report.rho_pair(Pair::A2A3))?.min_eigenvalue)
}

/// `Ē = −(1 + 4(√5 − 2)|α|²|β|²)/6`.
pub fn negativity_upper_bound(input: &InputQubit) -> f64 {
    -(1.0 + 4.0 * (5f64.sqrt() - 2.0) * input.amplitude_product()) / 6.0
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundCheck {
    pub e: f64,
    pub e_bar: f64,
    /// `Ē − E`; non-negative when the bound holds.
    pub gap: f64,
    pub satisfied: bool,
}

/// Compares the triplicator negativity with its upper bound `Ē`. The input
/// must have `sin²φ = 1`.
pub fn negativity_bound_check(input: &InputQubit) -> Result<BoundCheck> {
    if (input.phi().sin().powi(2) - 1.0).abs() > 1e-12 {
        return Err(Error::Precondition(format!(
            "negativity bound needs φ = π/2, got φ = {}",
            input.phi()
        )));
    }
    let e = triplicator_negativity(input)?;
    let e_bar = negativity_upper_bound(input);
    Ok(BoundCheck {
        e,
        e_bar,
        gap: e_bar - e,
        satisfied: e <= e_bar + BOUND_TOL,
    })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CorrelationRow {
    pub theta: f64,
    pub phi: f64,
    /// d₁ of a triplicator copy.
    pub d1: f64,
    /// Smallest partial-transpose eigenvalue of a triplicator pair.
    pub e: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CorrelationTable {
    /// ϑ-major rows.
    pub rows: Vec<CorrelationRow>,
    /// Largest `|E + 1/6|` over ϑ at φ ∈ {0, π}.
    pub real_phase_deviation: f64,
    /// `E(ϑ, π/2) ≤ E(ϑ, φ)` for every grid row.
    pub minimal_at_half_pi: bool,
    /// d₁ at φ = 0 stays at 1/18 for every ϑ.
    pub real_phase_d1_deviation: f64,
}

impl CorrelationTable {
    pub fn real_phase_flat(&self) -> bool {
        self.real_phase_deviation <= NEGATIVITY_TOL
    }
}

/// Pairs copy distance d₁ with negativity E over a triplicator sweep and
/// checks how E depends on the phase.
pub fn entanglement_distance_correlation(thetas: &[f64], phis: &[f64]) -> Result<CorrelationTable> {
    let points: Vec<(f64, f64)> = thetas
        .iter()
        .flat_map(|&t| phis.iter().map(move |&p| (t, p)))
        .collect();
    let rows = points
        .par_iter()
        .map(|&(theta, phi)| {
            let input = InputQubit::new(theta, phi)?;
            let report = run_copier(&input, CopyVariant::Triplicator)?;
            Ok(CorrelationRow {
                theta,
                phi,
                d1: report.distances.d1[1],
                e: ppt_verdict(report.rho_pair(Pair::A2A3))?.min_eigenvalue,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let mut real_phase_deviation: f64 = 0.0;
    let mut real_phase_d1_deviation: f64 = 0.0;
    let mut minimal_at_half_pi = true;
    for (i, &theta) in thetas.iter().enumerate() {
        for phi in [0.0, PI] {
            let e = triplicator_negativity(&InputQubit::new(theta, phi)?)?;
            real_phase_deviation = real_phase_deviation.max((e + 1.0 / 6.0).abs());
        }
        let d1 = run_copier(&InputQubit::new(theta, 0.0)?, CopyVariant::Triplicator)?
            .distances
            .d1[1];
        real_phase_d1_deviation = real_phase_d1_deviation.max((d1 - laws::DUPLICATOR_D1).abs());

        let e_half = triplicator_negativity(&InputQubit::new(theta, FRAC_PI_2)?)?;
        let row_slice = &rows[i * phis.len()..(i + 1) * phis.len()];
        if row_slice.iter().any(|r| r.e < e_half - 1e-12) {
            minimal_at_half_pi = false;
        }
    }

    Ok(CorrelationTable {
        rows,
        real_phase_deviation,
        minimal_at_half_pi,
        real_phase_d1_deviation,
    })
}
