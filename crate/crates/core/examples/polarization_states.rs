// Standard polarization states, normalization, and the physical field they trace out.

use std::f64::consts::PI;

use jones_pauli::jones::{
    evaluate_field, make_jones, standard_state, PlaneWaveParams, StandardState,
};
use jones_pauli::{c64, Result};

pub fn run_example() -> Result<()> {
    for s in StandardState::ALL {
        let j = standard_state(s);
        println!(
            "{} {:<15} {}  J·J* = {}",
            s.label(),
            s.name(),
            j,
            j.inner_norm()
        );
    }

    // raw amplitudes are normalized on construction
    let j = make_jones(c64(3.0, 0.0), c64(0.0, 4.0))?;
    println!("make_jones(3, 4i) = {j}");

    // left circular light: the field point stays on a circle of radius 1/√2
    let wave = PlaneWaveParams::new(2.0 * PI, 2.0 * PI)?;
    let left = standard_state(StandardState::CircularLeft);
    for step in 0..4 {
        let t = step as f64 / 8.0;
        let (fx, fy) = evaluate_field(&left, &wave, 0.0, t);
        println!(
            "t = {t:.3}  E = ({fx:+.4}, {fy:+.4})  |E|² = {:.4}",
            fx * fx + fy * fy
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
