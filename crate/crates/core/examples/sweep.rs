//! Seeded parameter sweep through the same entry point as the binary.

use pastro::cli::{run as run_cli, Command, Format, RunConfig};

pub fn run() -> pastro::Result<()> {
    let mut config = RunConfig::new(Command::Sweep);
    config.seed = 42;
    config.draws = 3;
    config.n_max = 5;
    let (report, code) = run_cli(&config);
    print!("{}", report.emit(Format::Text));
    assert_eq!(code, 0);

    // same seed, same bytes
    let again = run_cli(&config).0;
    assert_eq!(report.to_json(), again.to_json());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run().unwrap();
}
