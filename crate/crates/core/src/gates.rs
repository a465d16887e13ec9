//! Pure-state simulation of one to three qubits under rotations and
//! controlled-NOT gates.
//!
//! Qubit 0 is the most significant bit of a basis index. Gates update
//! amplitude pairs in place by bit masking; no gate matrices are built.
//!
//! Networks have a plain-text form, one gate per line:
//!
//! ```text
//! # comments and blank lines are ignored
//! R 1 0.39269908169872414
//! CNOT 1 2
//! ```

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{DensityMatrix, STRUCTURAL_TOL};

pub const MAX_QUBITS: usize = 3;

/// Normalized state vector on `1..=3` qubits.
#[derive(Clone, Debug, PartialEq)]
pub struct PureState {
    num_qubits: usize,
    amplitudes: Vec<Complex64>,
}

impl PureState {
    pub fn new(amplitudes: Vec<Complex64>) -> Result<Self> {
        let len = amplitudes.len();
        if !len.is_power_of_two() || !(2..=1 << MAX_QUBITS).contains(&len) {
            return Err(Error::InvalidDimension(len));
        }
        if amplitudes
            .iter()
            .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(Error::NonFinite("state"));
        }
        let norm_sqr: f64 = amplitudes.iter().map(|z| z.norm_sqr()).sum();
        if (norm_sqr - 1.0).abs() > STRUCTURAL_TOL {
            return Err(Error::NotNormalized(norm_sqr));
        }
        Ok(Self {
            num_qubits: len.trailing_zeros() as usize,
            amplitudes,
        })
    }

    /// Computational basis state `|index>`.
    pub fn basis(num_qubits: usize, index: usize) -> Result<Self> {
        if !(1..=MAX_QUBITS).contains(&num_qubits) {
            return Err(Error::WrongQubitCount {
                expected: MAX_QUBITS,
                got: num_qubits,
            });
        }
        let dim = 1usize << num_qubits;
        if index >= dim {
            return Err(Error::InvalidDimension(index));
        }
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); dim];
        amplitudes[index] = Complex64::new(1.0, 0.0);
        Ok(Self {
            num_qubits,
            amplitudes,
        })
    }

    /// `|self> ⊗ |other>`, with `self` on the low qubit indices.
    pub fn tensor(&self, other: &PureState) -> Result<Self> {
        let n = self.num_qubits + other.num_qubits;
        if n > MAX_QUBITS {
            return Err(Error::DimensionOverflow(1 << n));
        }
        let amplitudes = self
            .amplitudes
            .iter()
            .flat_map(|a| other.amplitudes.iter().map(move |b| a * b))
            .collect();
        Ok(Self {
            num_qubits: n,
            amplitudes,
        })
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn amplitude(&self, index: usize) -> Complex64 {
        self.amplitudes[index]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|z| z.norm_sqr()).sum()
    }

    /// Largest amplitude-wise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &PureState) -> f64 {
        assert_eq!(self.num_qubits, other.num_qubits);
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    fn mask(&self, qubit: usize) -> Result<usize> {
        if qubit >= self.num_qubits {
            return Err(Error::QubitOutOfRange {
                index: qubit,
                num_qubits: self.num_qubits,
            });
        }
        Ok(1 << (self.num_qubits - 1 - qubit))
    }

    /// `|0> -> cos θ |0> + sin θ |1>`, `|1> -> −sin θ |0> + cos θ |1>` on
    /// `target`.
    pub fn apply_rotation(&self, target: usize, theta: f64) -> Result<PureState> {
        let mask = self.mask(target)?;
        let (sin, cos) = theta.sin_cos();
        let mut out = self.clone();
        for i in (0..self.amplitudes.len()).filter(|i| i & mask == 0) {
            let zero = self.amplitudes[i];
            let one = self.amplitudes[i | mask];
            out.amplitudes[i] = zero * cos - one * sin;
            out.amplitudes[i | mask] = zero * sin + one * cos;
        }
        Ok(out)
    }

    /// Flips `target` on every basis component whose `control` bit is set.
    pub fn apply_cnot(&self, control: usize, target: usize) -> Result<PureState> {
        let cmask = self.mask(control)?;
        let tmask = self.mask(target)?;
        if control == target {
            return Err(Error::ControlIsTarget(control));
        }
        let mut out = self.clone();
        for i in (0..self.amplitudes.len()).filter(|i| i & cmask != 0 && i & tmask == 0) {
            out.amplitudes.swap(i, i | tmask);
        }
        Ok(out)
    }

    /// `|ψ><ψ|`.
    pub fn density(&self) -> DensityMatrix {
        DensityMatrix::pure(&self.amplitudes).expect("pure states are normalized")
    }
}

/// Outer product of a pure state with itself.
pub fn density_of(state: &PureState) -> DensityMatrix {
    state.density()
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum GateOp {
    Rotation { target: usize, theta: f64 },
    Cnot { control: usize, target: usize },
}

impl GateOp {
    pub fn apply(&self, state: &PureState) -> Result<PureState> {
        match *self {
            GateOp::Rotation { target, theta } => state.apply_rotation(target, theta),
            GateOp::Cnot { control, target } => state.apply_cnot(control, target),
        }
    }

    pub fn qubits(&self) -> Vec<usize> {
        match *self {
            GateOp::Rotation { target, .. } => vec![target],
            GateOp::Cnot { control, target } => vec![control, target],
        }
    }
}

impl fmt::Display for GateOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            // `{:?}` on f64 prints the shortest representation that round-trips
            GateOp::Rotation { target, theta } => write!(f, "R {target} {theta:?}"),
            GateOp::Cnot { control, target } => write!(f, "CNOT {control} {target}"),
        }
    }
}

/// Ordered list of gates, applied first to last.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct GateNetwork {
    gates: Vec<GateOp>,
}

impl GateNetwork {
    pub fn new(gates: Vec<GateOp>) -> Self {
        Self { gates }
    }

    pub fn gates(&self) -> &[GateOp] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn push(&mut self, gate: GateOp) -> &mut Self {
        self.gates.push(gate);
        self
    }

    pub fn rotation(mut self, target: usize, theta: f64) -> Self {
        self.gates.push(GateOp::Rotation { target, theta });
        self
    }

    pub fn cnot(mut self, control: usize, target: usize) -> Self {
        self.gates.push(GateOp::Cnot { control, target });
        self
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &GateNetwork) -> GateNetwork {
        let mut gates = self.gates.clone();
        gates.extend_from_slice(&other.gates);
        GateNetwork { gates }
    }

    /// Left fold of the gates over `state`. Errors carry the 1-based gate
    /// position.
    pub fn run(&self, state: &PureState) -> Result<PureState> {
        self.gates
            .iter()
            .enumerate()
            .try_fold(state.clone(), |s, (i, gate)| {
                gate.apply(&s).map_err(|e| Error::Gate {
                    position: i + 1,
                    gate: gate.to_string(),
                    source: Box::new(e),
                })
            })
    }

    /// Highest qubit index referenced plus one.
    pub fn min_qubits(&self) -> usize {
        self.gates
            .iter()
            .flat_map(GateOp::qubits)
            .max()
            .map_or(0, |q| q + 1)
    }
}

pub fn run_network(state: &PureState, net: &GateNetwork) -> Result<PureState> {
    net.run(state)
}

impl fmt::Display for GateNetwork {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for gate in &self.gates {
            writeln!(f, "{gate}")?;
        }
        Ok(())
    }
}

impl FromStr for GateNetwork {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut gates = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line = n + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let err = |message: String| Error::Parse { line, message };
            let fields: Vec<&str> = content.split_whitespace().collect();
            let index = |s: &str| {
                s.parse::<usize>()
                    .map_err(|_| err(format!("invalid qubit index `{s}`")))
            };
            let gate = match fields.as_slice() {
                [op, target, theta] if op.eq_ignore_ascii_case("R") => {
                    let theta = theta
                        .parse::<f64>()
                        .ok()
                        .filter(|t| t.is_finite())
                        .ok_or_else(|| err(format!("invalid angle `{theta}`")))?;
                    GateOp::Rotation {
                        target: index(target)?,
                        theta,
                    }
                }
                [op, control, target] if op.eq_ignore_ascii_case("CNOT") => {
                    let (control, target) = (index(control)?, index(target)?);
                    if control == target {
                        return Err(err(format!("CNOT control and target are both {control}")));
                    }
                    GateOp::Cnot { control, target }
                }
                [op, ..] if op.eq_ignore_ascii_case("R") => {
                    return Err(err("expected `R <qubit> <theta>`".into()))
                }
                [op, ..] if op.eq_ignore_ascii_case("CNOT") => {
                    return Err(err("expected `CNOT <control> <target>`".into()))
                }
                [op, ..] => return Err(err(format!("unknown gate `{op}`"))),
                [] => unreachable!(),
            };
            gates.push(gate);
        }
        Ok(GateNetwork { gates })
    }
}
