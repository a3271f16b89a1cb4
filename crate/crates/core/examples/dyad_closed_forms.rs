// Dyads from two Jones vectors and the closed-form commutator entries.

use jones_pauli::algebra::commutator;
use jones_pauli::dyadics::{
    build_pair, build_projectors, commutator_closed_form, outer, projector_commutator_closed_form,
    DyadParams,
};
use jones_pauli::{c64, Result};

pub fn run_example() -> Result<()> {
    // nonic (3×3) form
    let u = [c64(1.0, 0.0), c64(0.0, 1.0), c64(2.0, 0.0)];
    let v = [c64(0.5, 0.0), c64(1.0, 0.0), c64(0.0, -1.0)];
    println!("nonic dyad uv = {}", outer(&u, &v)?);

    let p = DyadParams::new(1.0, 2.0, 0.5, 0.3, 1.0, 1.2);
    let (d1, d2) = build_pair(&p)?;
    println!("D1 = {d1}\nD2 = {d2}");

    let direct = commutator(&d1, &d2)?;
    let predicted = commutator_closed_form(&p).scaled(p.normalizers()?.e);
    println!("[D1, D2]        = {direct}");
    println!("E²·(a_ij)       = {predicted}");
    println!("max entry gap   = {:e}", direct.max_abs_diff(&predicted)?);

    let (d_i, d_ii) = build_projectors(&p)?;
    println!("D_I = {d_i}\nD_II = {d_ii}");
    let entry = projector_commutator_closed_form(&p)?;
    println!(
        "[D_I, D_II]_12 published {} vs derived {} (gap {:.4})",
        entry.printed,
        entry.derived,
        entry.discrepancy()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
