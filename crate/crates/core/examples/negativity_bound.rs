//! Compares the triplicator pair negativity at phi = pi/2 with its
//! closed-form upper bound.

use std::f64::consts::FRAC_PI_2;

use qcopier::report::human;
use qcopier::separability::BoundCheck;
use qcopier::{negativity_bound_check, InputQubit, Result};

pub fn run_example() -> Result<Vec<(f64, BoundCheck)>> {
    (0..=10)
        .map(|k| {
            let theta = FRAC_PI_2 * k as f64 / 10.0;
            Ok((
                theta,
                negativity_bound_check(&InputQubit::new(theta, FRAC_PI_2)?)?,
            ))
        })
        .collect()
}

fn main() -> Result<()> {
    println!("theta     E          bound      gap");
    for (theta, b) in run_example()? {
        println!(
            "{:<9} {:<10} {:<10} {}",
            human(theta),
            human(b.e),
            human(b.e_bar),
            human(b.gap)
        );
    }
    Ok(())
}
