//! Sweeps the triplicator over a grid and prints the CSV report.

use qcopier::report::{run_sweep, Grid, Metric, ReportDocument, SweepSpec};
use qcopier::{CopyVariant, Result};

pub fn run_example() -> Result<ReportDocument> {
    let spec = SweepSpec::new(
        CopyVariant::Triplicator,
        Grid::new(0.0, std::f64::consts::FRAC_PI_2, 3)?,
        Grid::new(0.0, std::f64::consts::PI, 5)?,
    )
    .with_metrics(&[Metric::D1, Metric::D3, Metric::E]);
    run_sweep(&spec)
}

fn main() -> Result<()> {
    print!("{}", run_example()?.to_csv()?);
    Ok(())
}
