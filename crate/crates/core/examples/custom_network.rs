//! Loads a network from its text description and analyzes its output like a
//! copier run. The description here is the duplicator itself, so the result
//! matches `run_copier`.

use qcopier::{run_copier, CopyReport, CopyVariant, GateNetwork, InputQubit, PureState, Result};

pub const NETWORK: &str = include_str!("../networks/uqcm.net");

pub fn run_example() -> Result<(CopyReport, CopyReport)> {
    let net: GateNetwork = NETWORK.parse()?;
    let input = InputQubit::new(0.9, 0.4)?;
    let register = input.state().tensor(&PureState::basis(2, 0)?)?;
    let custom = CopyReport::from_output(input, None, net.run(&register)?)?;
    let builtin = run_copier(&input, CopyVariant::Duplicator)?;
    Ok((custom, builtin))
}

fn main() -> Result<()> {
    let (custom, builtin) = run_example()?;
    println!("{} gates parsed", NETWORK.parse::<GateNetwork>()?.len());
    println!(
        "max amplitude difference from the built-in duplicator: {:e}",
        custom.output_state.max_abs_diff(&builtin.output_state)
    );
    println!("copy distances d1 = {:?}", custom.distances.d1);
    Ok(())
}
