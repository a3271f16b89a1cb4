// Pauli matrices, spin-½ operators and ladder operators.

use jones_pauli::algebra::commutator;
use jones_pauli::pauli::{
    ladder, ladder_coefficient, pauli, spin_operator, spin_squared, verify_algebra, LadderSign,
    PauliIndex, SpinConfig,
};
use jones_pauli::{c64, Result};

pub fn run_example() -> Result<()> {
    for i in PauliIndex::ALL {
        println!("σ_{i} = {}", pauli(i));
    }
    let report = verify_algebra(1e-12)?;
    println!(
        "squares {} anticommutation {} commutation {} (max residual {:e})",
        report.squares_ok, report.anticommutation_ok, report.commutation_ok, report.max_residual
    );

    let cfg = SpinConfig::default();
    let sx = spin_operator(PauliIndex::X, &cfg);
    let sy = spin_operator(PauliIndex::Y, &cfg);
    println!(
        "[S_x, S_y] = {}  (iħ S_z = {})",
        commutator(&sx, &sy)?,
        spin_operator(PauliIndex::Z, &cfg).scale(c64(0.0, 1.0))
    );
    println!("S² = {}", spin_squared(&cfg));

    let plus = ladder(LadderSign::Plus, &cfg);
    let down = [c64(0.0, 0.0), c64(1.0, 0.0)];
    println!("S+ = {plus}, S+|−½⟩ = {:?}", plus.apply(&down)?);
    println!(
        "√(s(s+1) − m(m+1)) at s=1, m=0: {}",
        ladder_coefficient(1.0, 0.0, LadderSign::Plus)?
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
