//! Partial-transpose spectra of the copy pairs. Both copiers leave their
//! copies entangled with each other.

use qcopier::report::human;
use qcopier::{ppt_verdict, run_copier, CopyVariant, InputQubit, Pair, PptReport, Result};

pub fn run_example() -> Result<Vec<(CopyVariant, Pair, PptReport)>> {
    let input = InputQubit::new(0.6, 0.0)?;
    let mut out = Vec::new();
    for variant in CopyVariant::ALL {
        let report = run_copier(&input, variant)?;
        for pair in Pair::ALL {
            out.push((variant, pair, ppt_verdict(report.rho_pair(pair))?));
        }
    }
    Ok(out)
}

fn main() -> Result<()> {
    for (variant, pair, ppt) in run_example()? {
        let spectrum: Vec<String> = ppt.spectrum.iter().map(|x| human(*x)).collect();
        println!(
            "{variant:<12} {:<5} [{}] {}",
            pair.label(),
            spectrum.join(", "),
            ppt.verdict.as_str()
        );
    }
    Ok(())
}
