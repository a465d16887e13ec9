//! Solves for the three rotation angles that prepare a given two-qubit
//! state, for the built-in copiers and for an arbitrary real target.

use qcopier::report::sig17;
use qcopier::{solve_preparation_angles, PreparationAmplitudes, PreparationAngles, Result};

pub fn run_example() -> Result<Vec<(PreparationAmplitudes, PreparationAngles, f64)>> {
    let targets = [
        PreparationAmplitudes::duplicator(),
        PreparationAmplitudes::triplicator(),
        PreparationAmplitudes::normalized([0.3, -0.5, 0.7, 0.1])?,
    ];
    targets
        .into_iter()
        .map(|t| {
            let a = solve_preparation_angles(&t)?;
            Ok((t, a, a.residual(&t)))
        })
        .collect()
}

fn main() -> Result<()> {
    for (target, angles, residual) in run_example()? {
        println!("target {:?}", target.values());
        for (name, v) in ["theta1", "theta2", "theta3"].iter().zip(angles.as_array()) {
            println!("  {name} = {}", sig17(v));
        }
        println!("  residual = {}", sig17(residual));
    }
    Ok(())
}
