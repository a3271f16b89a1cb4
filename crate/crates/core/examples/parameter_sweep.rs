// Grid search over dyad parameters for multiples of Pauli matrices.

use jones_pauli::dyadics::Construction;
use jones_pauli::sweep::{summarize, sweep, Combinator, SweepConfig, Target};
use jones_pauli::Result;

pub fn run_example() -> Result<()> {
    let cfg = SweepConfig::default();
    let out = sweep(&cfg)?;
    let s = summarize(&out, cfg.tol);
    println!(
        "{} tuples ({} degenerate), {} candidates, {} matches",
        out.parameter_tuples, out.skipped_degenerate, out.candidates, s.total
    );
    for (t, n) in &s.per_target {
        println!("  {t}: {n}");
    }

    // a narrower grid written in the config format
    let small: SweepConfig = "amplitudes = [0, 1]\n\
                              phases_deg = [0]\n\
                              combinators = [\"commutator\"]\n\
                              constructions = [\"pair\"]\n\
                              targets = [\"sigma_z\"]\n"
        .parse()?;
    for m in sweep(&small)?.matches {
        assert_eq!(
            (m.construction, m.combinator, m.target),
            (
                Construction::PairDyads,
                Combinator::Commutator,
                Target::SigmaZ
            )
        );
        println!(
            "A={} B={} C={} D={}  [D1, D2] = {} σ_z",
            m.params.a.re, m.params.b.re, m.params.c.re, m.params.d.re, m.scale.re
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
