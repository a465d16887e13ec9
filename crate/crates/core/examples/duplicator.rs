//! Runs the duplicator on a few inputs and shows that both copies have the
//! same quality whatever the input, while the original qubit does not.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

use qcopier::report::human;
use qcopier::{run_copier, CopyVariant, InputQubit, Pair, Result};

pub struct Row {
    pub theta: f64,
    pub phi: f64,
    pub d1_original: f64,
    pub d1_copy: f64,
    pub d2_copies: f64,
    pub fidelity: f64,
}

pub fn run_example() -> Result<Vec<Row>> {
    let mut rows = Vec::new();
    for (theta, phi) in [
        (0.0, 0.0),
        (FRAC_PI_4, 0.0),
        (FRAC_PI_4, FRAC_PI_2),
        (1.1, 2.5),
    ] {
        let r = run_copier(&InputQubit::new(theta, phi)?, CopyVariant::Duplicator)?;
        rows.push(Row {
            theta,
            phi,
            d1_original: r.distances.d1[0],
            d1_copy: r.distances.d1[1],
            d2_copies: r.distances.d2(Pair::A2A3),
            fidelity: r.fidelity[1].ideal,
        });
    }
    Ok(rows)
}

fn main() -> Result<()> {
    println!("theta     phi       d1(a1)    d1(a2)    d2(a2a3)  fidelity");
    for r in run_example()? {
        println!(
            "{:<9} {:<9} {:<9} {:<9} {:<9} {}",
            human(r.theta),
            human(r.phi),
            human(r.d1_original),
            human(r.d1_copy),
            human(r.d2_copies),
            human(r.fidelity)
        );
    }
    Ok(())
}
