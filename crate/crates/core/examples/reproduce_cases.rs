// The three reference constructions, evaluated under both readings of their inputs.

use jones_pauli::reproduction::discrepancy_report;
use jones_pauli::{Result, DEFAULT_TOL};

pub fn run_example() -> Result<()> {
    let report = discrepancy_report(DEFAULT_TOL)?;
    for r in report.cases.iter().chain(&report.supplementary) {
        println!(
            "{} / {} / {}: {}",
            r.case_id,
            r.reading.name(),
            r.variant.name(),
            r.finding()
        );
    }
    for c in &report.closed_forms {
        println!(
            "{} / {}: pair closed form residual {:e}, projector entry gap {:.4}",
            c.case_id,
            c.reading.name(),
            c.pair_residual,
            c.projector_entry.discrepancy()
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
