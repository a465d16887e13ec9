//! Exact simulation of few-qubit quantum copying networks.
//!
//! The crate builds the duplicator (universal quantum copier) and the
//! triplicator out of single-qubit rotations and controlled-NOTs, runs them
//! on pure three-qubit states, and characterizes the output: reduced density
//! matrices, fidelity splits, scaled-form fits, Hilbert-Schmidt distances to
//! the ideal copies and partial-transpose spectra.
//!
//! ```
//! use qcopier::{run_copier, CopyVariant, InputQubit};
//!
//! let input = InputQubit::new(0.7, 1.2).unwrap();
//! let report = run_copier(&input, CopyVariant::Duplicator).unwrap();
//! assert!((report.distances.d1[1] - 1.0 / 18.0).abs() < 1e-12);
//! ```

pub mod angles;
pub mod cli;
pub mod copier;
pub mod error;
pub mod gates;
pub mod linalg;
pub mod report;
pub mod separability;
pub mod verify;

pub use angles::{
    preparation_network, solve_preparation_angles, PreparationAmplitudes, PreparationAngles,
};
pub use copier::{
    copy_stage_network, distances_report, fidelity_split, ideal_density, original_transpose_check,
    run_copier, scaling_decompose, CopyReport, CopyVariant, InputQubit, Pair,
};
pub use error::{Error, Result};
pub use gates::{density_of, run_network, GateNetwork, GateOp, PureState};
pub use linalg::{
    hermitian_eigenvalues, hs_distance, kron, partial_trace, partial_transpose, DensityMatrix,
    SquareMatrix,
};
pub use separability::{
    entanglement_distance_correlation, negativity_bound_check, ppt_verdict, PptReport, Verdict,
};
