//! Triplicator: copy quality is flat for real amplitudes and degrades as
//! the relative phase moves toward pi/2.

use std::f64::consts::{FRAC_PI_4, PI};

use qcopier::report::human;
use qcopier::{run_copier, CopyVariant, InputQubit, Result};

pub struct Row {
    pub phi: f64,
    pub d1: f64,
    pub d2: f64,
    pub d3: f64,
    pub s: Option<f64>,
}

/// One row per phase at `theta = pi/4`.
pub fn run_example() -> Result<Vec<Row>> {
    (0..=8)
        .map(|k| {
            let phi = PI * k as f64 / 8.0;
            let r = run_copier(&InputQubit::new(FRAC_PI_4, phi)?, CopyVariant::Triplicator)?;
            Ok(Row {
                phi,
                d1: r.distances.d1[1],
                d2: r.distances.d2[0],
                d3: r.distances.d3.unwrap_or(f64::NAN),
                s: r.scaling[1],
            })
        })
        .collect()
}

fn main() -> Result<()> {
    println!("phi       d1        d2        d3        s");
    for Row { phi, d1, d2, d3, s } in run_example()? {
        let s = s.map_or_else(|| "-".to_string(), human);
        println!(
            "{:<9} {:<9} {:<9} {:<9} {s}",
            human(phi),
            human(d1),
            human(d2),
            human(d3)
        );
    }
    Ok(())
}
