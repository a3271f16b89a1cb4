//! Command-line surface.
//!
//! [`run`] parses arguments and returns the rendered output together with
//! the process exit code, so the binary is a thin wrapper and everything
//! here is testable in-process.
//!
//! Exit codes: 0 success, 1 a check failed (with `--strict`, any case that
//! does not reproduce exactly), 2 invalid input or config.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use num_complex::Complex64;
use serde_json::{json, Value};

use crate::algebra::{format_complex, mat_mul, CMatrix};
use crate::dyadics::{outer_conj, DyadParams};
use crate::jones::{standard_state, JonesVector, StandardState};
use crate::pauli::{verify_algebra, AlgebraReport};
use crate::reproduction::{
    discrepancy_report, CaseId, CaseReport, ClosedFormCheck, DiscrepancyReport,
};
use crate::sweep::{summarize, sweep_with_workers, SweepConfig, SweepOutcome, DEFAULT_CONFIG};
use crate::{Error, DEFAULT_TOL};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "jones-pauli",
    version,
    about = "Jones vectors, dyads and the Pauli algebra"
)]
pub struct Cli {
    /// Emit a single JSON document instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Numerical tolerance for checks and matching.
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub tol: Option<f64>,

    /// Treat every non-reproducing case as a failure (exit 1).
    #[arg(long, global = true)]
    pub strict: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the four standard polarization states.
    States,
    /// Check the Pauli algebra and projector-dyad invariants.
    Verify,
    /// Evaluate the reference constructions and print the discrepancy ledger.
    Reproduce {
        /// 1, 2, 3 or all.
        #[arg(long = "case", default_value = "all", value_parser = parse_case_filter)]
        case: CaseFilter,
    },
    /// Search a parameter grid for dyad combinations proportional to Pauli matrices.
    Sweep {
        /// Grid config; the bundled default grid is used when omitted.
        #[arg(long)]
        config: Option<PathBuf>,
        /// Worker threads (0 = one per core).
        #[arg(long, default_value_t = 0)]
        workers: usize,
    },
    /// Real field components of a standard state at propagation phase kz − wt.
    Field {
        #[arg(value_parser = parse_state)]
        state: StandardState,
        /// Phase in radians.
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        phase: f64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseFilter {
    All,
    One(CaseId),
}

fn parse_case_filter(s: &str) -> std::result::Result<CaseFilter, String> {
    if s.eq_ignore_ascii_case("all") {
        return Ok(CaseFilter::All);
    }
    s.parse::<u8>()
        .map_err(|_| format!("unknown case `{s}` (expected 1, 2, 3 or all)"))
        .and_then(|n| CaseId::from_number(n).map_err(|e| e.to_string()))
        .map(CaseFilter::One)
}

fn parse_state(s: &str) -> std::result::Result<StandardState, String> {
    s.parse().map_err(|e: Error| {
        format!("{e} (expected linear-x, linear-y, circular-right or circular-left)")
    })
}

/// Rendered result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutput {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl CliOutput {
    fn ok(stdout: String, code: i32) -> Self {
        CliOutput {
            stdout,
            stderr: String::new(),
            code,
        }
    }

    fn invalid(message: impl Into<String>) -> Self {
        let mut stderr = message.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        CliOutput {
            stdout: String::new(),
            stderr,
            code: EXIT_INVALID,
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                CliOutput::ok(text, 0)
            } else {
                CliOutput::invalid(text)
            }
        }
    }
}

pub fn execute(cli: &Cli) -> CliOutput {
    let tol = cli.tol.unwrap_or(DEFAULT_TOL);
    if !(tol > 0.0 && tol.is_finite()) {
        return CliOutput::invalid(Error::InvalidTolerance(tol).to_string());
    }
    match &cli.command {
        Command::States => cmd_states(cli.json),
        Command::Verify => cmd_verify(tol, cli.json),
        Command::Reproduce { case } => cmd_reproduce(*case, tol, cli.json, cli.strict),
        Command::Sweep { config, workers } => {
            let text = match config {
                Some(path) => match std::fs::read_to_string(path) {
                    Ok(t) => t,
                    Err(e) => return CliOutput::invalid(format!("{}: {e}", path.display())),
                },
                None => DEFAULT_CONFIG.to_string(),
            };
            let label = config
                .as_ref()
                .map_or_else(|| "<default>".to_string(), |p| p.display().to_string());
            cmd_sweep(&text, &label, cli.tol, *workers, cli.json)
        }
        Command::Field { state, phase } => cmd_field(*state, *phase, cli.json),
    }
}

/// Parses and re-emits a JSON document the way this module writes it.
///
/// Every document produced by [`run`] is a fixed point of this function.
pub fn reformat_json(text: &str) -> serde_json::Result<String> {
    let v: Value = serde_json::from_str(text)?;
    Ok(render_json(&v))
}

fn render_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

// -0.0 is folded into 0.0 so identical values always print identically.
fn num(x: f64) -> Value {
    json!(x + 0.0)
}

fn complex_json(z: Complex64) -> Value {
    json!({ "re": num(z.re), "im": num(z.im) })
}

fn matrix_json(m: &CMatrix) -> Value {
    Value::Array(
        m.rows()
            .into_iter()
            .map(|r| Value::Array(r.into_iter().map(complex_json).collect()))
            .collect(),
    )
}

fn params_json(p: &DyadParams) -> Value {
    json!({
        "a": complex_json(p.a),
        "b": complex_json(p.b),
        "alpha": num(p.alpha),
        "c": complex_json(p.c),
        "d": complex_json(p.d),
        "beta": num(p.beta),
    })
}

fn fmt6(x: f64) -> String {
    format_complex(Complex64::new(x, 0.0), 6)
}

fn params_text(p: &DyadParams) -> String {
    format!(
        "A={} B={} α={} C={} D={} β={}",
        format_complex(p.a, 6),
        format_complex(p.b, 6),
        fmt6(p.alpha),
        format_complex(p.c, 6),
        format_complex(p.d, 6),
        fmt6(p.beta)
    )
}

pub fn cmd_states(as_json: bool) -> CliOutput {
    let states: Vec<(StandardState, JonesVector)> = StandardState::ALL
        .iter()
        .map(|&s| (s, standard_state(s)))
        .collect();
    if as_json {
        let arr: Vec<Value> = states
            .iter()
            .map(|(s, j)| {
                json!({
                    "name": s.name(),
                    "label": s.label(),
                    "description": s.description(),
                    "ex_re": num(j.ex().re),
                    "ex_im": num(j.ex().im),
                    "ey_re": num(j.ey().re),
                    "ey_im": num(j.ey().im),
                    "inner_norm": num(j.inner_norm()),
                })
            })
            .collect();
        return CliOutput::ok(render_json(&Value::Array(arr)), EXIT_OK);
    }
    let mut out = String::new();
    for (s, j) in &states {
        let _ = writeln!(
            out,
            "{:<3} {:<15} {:<24} J·J* = {}   {}",
            s.label(),
            s.name(),
            j.to_string(),
            fmt6(j.inner_norm()),
            s.description()
        );
    }
    CliOutput::ok(out, EXIT_OK)
}

/// Projector invariants over the standard states and a fixed sample of
/// amplitude/phase states. Returns the worst residual.
fn projector_residual() -> f64 {
    let mut states: Vec<JonesVector> = StandardState::ALL
        .iter()
        .map(|&s| standard_state(s))
        .collect();
    for a in [1.0, -0.5, 0.0, 2.0] {
        for b in [0.3, 1.0, -1.5] {
            for k in 0..8 {
                let delta = k as f64 * std::f64::consts::FRAC_PI_4;
                states.push(JonesVector::from_amplitude_phase(a, b, delta).expect("nonzero"));
            }
        }
    }
    states
        .iter()
        .map(|j| {
            let d = outer_conj(j, j);
            let herm = d.max_abs_diff(&d.dagger()).expect("2x2");
            let idem = mat_mul(&d, &d).expect("2x2").max_abs_diff(&d).expect("2x2");
            let trace = (d.trace() - Complex64::new(1.0, 0.0)).norm();
            herm.max(idem).max(trace)
        })
        .fold(0.0, f64::max)
}

pub fn cmd_verify(tol: f64, as_json: bool) -> CliOutput {
    let report: AlgebraReport = match verify_algebra(tol) {
        Ok(r) => r,
        Err(e) => return CliOutput::invalid(e.to_string()),
    };
    let proj = projector_residual();
    let projectors_ok = proj <= tol;
    let all_ok = report.all_ok() && projectors_ok;
    let code = if all_ok { EXIT_OK } else { EXIT_FAILED };
    if as_json {
        let v = json!({
            "tol": num(tol),
            "squares_ok": report.squares_ok,
            "anticommutation_ok": report.anticommutation_ok,
            "commutation_ok": report.commutation_ok,
            "max_residual": num(report.max_residual),
            "projectors_ok": projectors_ok,
            "projector_max_residual": num(proj),
            "all_ok": all_ok,
        });
        return CliOutput::ok(render_json(&v), code);
    }
    let flag = |b: bool| if b { "ok" } else { "FAILED" };
    let mut out = String::new();
    let _ = writeln!(out, "tolerance                    {tol:e}");
    let _ = writeln!(
        out,
        "σ_j² = I                     {}",
        flag(report.squares_ok)
    );
    let _ = writeln!(
        out,
        "{{σ_j, σ_k}} = 2δ_jk I         {}",
        flag(report.anticommutation_ok)
    );
    let _ = writeln!(
        out,
        "[σ_j, σ_k] = 2i ε_jkl σ_l    {}",
        flag(report.commutation_ok)
    );
    let _ = writeln!(
        out,
        "algebra max residual         {:e}",
        report.max_residual
    );
    let _ = writeln!(
        out,
        "projectors J J* (herm/idem/tr) {}",
        flag(projectors_ok)
    );
    let _ = writeln!(out, "projector max residual       {proj:e}");
    let _ = writeln!(
        out,
        "{}",
        if all_ok {
            "all checks passed"
        } else {
            "checks FAILED"
        }
    );
    CliOutput::ok(out, code)
}

fn case_json(r: &CaseReport) -> Value {
    json!({
        "case": r.case_id.number(),
        "reading": r.reading.name(),
        "variant": r.variant.name(),
        "construction": r.construction.name(),
        "prefactor": num(r.prefactor),
        "params": params_json(&r.params),
        "computed": matrix_json(&r.computed),
        "claimed": matrix_json(&r.claimed),
        "claimed_label": r.claimed_label,
        "exact_match": r.exact_match,
        "exact_residual": num(r.exact_residual),
        "scalar_matched": r.scalar_match.matched,
        "scale": r.scalar_match.scale.map_or(Value::Null, complex_json),
        "coefficient": complex_json(r.scalar_match.coefficient),
        "residual": num(r.scalar_match.residual),
        "anti_hermitian": r.anti_hermitian,
        "finding": r.finding(),
    })
}

fn closed_form_json(c: &ClosedFormCheck, tol: f64) -> Value {
    json!({
        "case": c.case_id.number(),
        "reading": c.reading.name(),
        "pair_commutator_residual": num(c.pair_residual),
        "pair_closed_form_holds": c.pair_residual < tol,
        "projector_entry_printed": complex_json(c.projector_entry.printed),
        "projector_entry_derived": complex_json(c.projector_entry.derived),
        "projector_entry_agrees": c.projector_entry.agrees(tol),
        "printed_projector_ii_error": num(c.printed_projector_ii_error),
    })
}

fn case_text(out: &mut String, r: &CaseReport) {
    let _ = writeln!(
        out,
        "{} [{} reading, {}] {}",
        r.case_id,
        r.reading.name(),
        r.variant.name(),
        params_text(&r.params)
    );
    let _ = writeln!(out, "  computed  {}", r.computed);
    let _ = writeln!(out, "  claimed   {} = {}", r.claimed_label, r.claimed);
    let _ = writeln!(
        out,
        "  exact {}  scalar {}  anti-Hermitian {}",
        if r.exact_match { "yes" } else { "no" },
        r.scalar_match
            .scale
            .map_or_else(|| "none".to_string(), |s| format_complex(s, 6)),
        if r.anti_hermitian { "yes" } else { "no" },
    );
    let _ = writeln!(out, "  {}", r.finding());
}

pub fn cmd_reproduce(filter: CaseFilter, tol: f64, as_json: bool, strict: bool) -> CliOutput {
    let report: DiscrepancyReport = match discrepancy_report(tol) {
        Ok(r) => r,
        Err(e) => return CliOutput::invalid(e.to_string()),
    };
    let report = match filter {
        CaseFilter::All => report,
        CaseFilter::One(c) => report.only(c),
    };
    let closed_ok = report.closed_forms.iter().all(|c| c.pair_residual < tol);
    let all_exact = report.all_exact();
    let code = if strict && !(all_exact && closed_ok) {
        EXIT_FAILED
    } else {
        EXIT_OK
    };
    if as_json {
        let v = json!({
            "tol": num(tol),
            "strict": strict,
            "all_exact": all_exact,
            "cases": report.cases.iter().map(case_json).collect::<Vec<_>>(),
            "supplementary": report.supplementary.iter().map(case_json).collect::<Vec<_>>(),
            "closed_forms": report.closed_forms.iter().map(|c| closed_form_json(c, tol)).collect::<Vec<_>>(),
        });
        return CliOutput::ok(render_json(&v), code);
    }
    let mut out = String::new();
    for r in &report.cases {
        case_text(&mut out, r);
    }
    if !report.supplementary.is_empty() {
        let _ = writeln!(out, "\nsupplementary");
        for r in &report.supplementary {
            case_text(&mut out, r);
        }
    }
    let _ = writeln!(out, "\nclosed forms");
    for c in &report.closed_forms {
        let _ = writeln!(
            out,
            "{} [{}]: [D1,D2] vs E²·a_ij residual {:e}; [D_I,D_II]_12 printed {} derived {} ({}); printed D_II off by {}",
            c.case_id,
            c.reading.name(),
            c.pair_residual,
            format_complex(c.projector_entry.printed, 6),
            format_complex(c.projector_entry.derived, 6),
            if c.projector_entry.agrees(tol) { "agree" } else { "DIFFER" },
            fmt6(c.printed_projector_ii_error),
        );
    }
    let reproduced = report.cases.iter().filter(|c| c.exact_match).count();
    let _ = writeln!(
        out,
        "\n{reproduced} of {} case evaluations reproduce exactly",
        report.cases.len()
    );
    CliOutput::ok(out, code)
}

fn sweep_json(label: &str, cfg: &SweepConfig, out: &SweepOutcome) -> Value {
    let s = summarize(out, cfg.tol);
    let counts = |m: Vec<(&str, usize)>| {
        Value::Object(
            m.into_iter()
                .map(|(k, v)| (k.to_string(), json!(v)))
                .collect(),
        )
    };
    json!({
        "config": {
            "source": label,
            "amplitudes": cfg.amplitudes.iter().map(|&x| num(x)).collect::<Vec<_>>(),
            "phases_rad": cfg.phases.iter().map(|&x| num(x)).collect::<Vec<_>>(),
            "combinators": cfg.combinators.iter().map(|c| c.name()).collect::<Vec<_>>(),
            "constructions": cfg.constructions.iter().map(|c| c.name()).collect::<Vec<_>>(),
            "targets": cfg.targets.iter().map(|t| t.name()).collect::<Vec<_>>(),
            "tol": num(cfg.tol),
        },
        "grid": {
            "parameter_tuples": out.parameter_tuples,
            "skipped_degenerate": out.skipped_degenerate,
            "candidates": out.candidates,
        },
        "summary": {
            "total": s.total,
            "per_target": counts(s.per_target.iter().map(|(t, n)| (t.name(), *n)).collect()),
            "per_combinator": counts(s.per_combinator.iter().map(|(c, n)| (c.name(), *n)).collect()),
            "projector_commutator": s.projector_commutator,
            "projector_commutator_imaginary": s.projector_commutator_imaginary,
            "skipped_degenerate": s.skipped_degenerate,
        },
        "matches": out.matches.iter().map(|m| json!({
            "params": params_json(&m.params),
            "construction": m.construction.name(),
            "combinator": m.combinator.name(),
            "target": m.target.name(),
            "scale": complex_json(m.scale),
        })).collect::<Vec<_>>(),
    })
}

pub fn cmd_sweep(
    config_text: &str,
    label: &str,
    tol: Option<f64>,
    workers: usize,
    as_json: bool,
) -> CliOutput {
    let mut cfg: SweepConfig = match config_text.parse() {
        Ok(c) => c,
        Err(e) => return CliOutput::invalid(format!("{label}: {e}")),
    };
    if let Some(t) = tol {
        cfg.tol = t;
    }
    let out = match sweep_with_workers(&cfg, workers) {
        Ok(o) => o,
        Err(e) => return CliOutput::invalid(format!("{label}: {e}")),
    };
    if as_json {
        return CliOutput::ok(render_json(&sweep_json(label, &cfg, &out)), EXIT_OK);
    }
    let s = summarize(&out, cfg.tol);
    let mut text = String::new();
    let _ = writeln!(
        text,
        "grid: {} parameter tuples, {} degenerate skipped, {} candidates",
        out.parameter_tuples, out.skipped_degenerate, out.candidates
    );
    for m in &out.matches {
        let _ = writeln!(
            text,
            "{}  {:<9} {:<14} = ({}) × {}",
            params_text(&m.params),
            m.construction.name(),
            m.combinator.name(),
            format_complex(m.scale, 6),
            m.target
        );
    }
    let _ = writeln!(text, "matches: {}", s.total);
    for (t, n) in &s.per_target {
        let _ = writeln!(text, "  {:<15} {n}", t.name());
    }
    for (c, n) in &s.per_combinator {
        let _ = writeln!(text, "  {:<15} {n}", c.name());
    }
    let _ = writeln!(
        text,
        "projector commutator matches: {} ({} with purely imaginary scale)",
        s.projector_commutator, s.projector_commutator_imaginary
    );
    CliOutput::ok(text, EXIT_OK)
}

pub fn cmd_field(state: StandardState, phase: f64, as_json: bool) -> CliOutput {
    if !phase.is_finite() {
        return CliOutput::invalid(Error::NonFinite.to_string());
    }
    let (fx, fy) = standard_state(state).field_at_phase(phase);
    if as_json {
        let v = json!({
            "state": state.name(),
            "phase": num(phase),
            "field_x": num(fx),
            "field_y": num(fy),
        });
        return CliOutput::ok(render_json(&v), EXIT_OK);
    }
    CliOutput::ok(format!("({}, {})\n", fmt6(fx), fmt6(fy)), EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> CliOutput {
        run(std::iter::once("jones-pauli").chain(args.iter().copied()))
    }

    #[test]
    fn states_text_and_json() {
        let out = run_args(&["states"]);
        assert_eq!(out.code, 0);
        assert_eq!(out.stdout.lines().count(), 4);
        assert!(out.stdout.lines().next().unwrap().contains("(1, 0)"));

        let out = run_args(&["states", "--json"]);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        let arr = v.as_array().unwrap();
        assert_eq!(arr.len(), 4);
        for key in ["name", "ex_re", "ex_im", "ey_re", "ey_im"] {
            assert!(arr[0].get(key).is_some());
        }
    }

    #[test]
    fn verify_codes() {
        assert_eq!(run_args(&["verify"]).code, 0);
        assert_eq!(run_args(&["verify", "--tol", "-1"]).code, 2);
        assert_eq!(run_args(&["verify", "--tol", "abc"]).code, 2);
        let v: Value = serde_json::from_str(&run_args(&["--json", "verify"]).stdout).unwrap();
        assert_eq!(v["squares_ok"], true);
        assert_eq!(v["max_residual"], 0.0);
    }

    #[test]
    fn reproduce_codes() {
        assert_eq!(run_args(&["reproduce"]).code, 0);
        assert_eq!(run_args(&["reproduce", "--strict"]).code, 1);
        assert_eq!(run_args(&["reproduce", "--strict", "--case", "3"]).code, 0);
        assert_eq!(run_args(&["reproduce", "--case", "4"]).code, 2);
        let out = run_args(&["reproduce", "--case", "3", "--json"]);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["cases"][0]["exact_match"], true);
        assert_eq!(v["cases"][0]["scale"]["re"], 1.0);
        assert!(v["cases"][0]["computed"][1][1]["re"] == -1.0);
    }

    #[test]
    fn field_values() {
        assert_eq!(run_args(&["field", "linear-x"]).stdout, "(1, 0)\n");
        let out = run_args(&["field", "linear-x", "--phase", "1.5707963267948966"]);
        assert_eq!(out.stdout, "(0, 0)\n");
        assert_eq!(
            run_args(&["field", "circular-left"]).stdout,
            "(0.707107, 0)\n"
        );
        assert_eq!(run_args(&["field", "elliptic"]).code, 2);
        assert_eq!(run_args(&["field", "J3", "--phase", "-1"]).code, 0);
    }

    #[test]
    fn sweep_config_errors() {
        let out = cmd_sweep(
            "amplitudes = []\nphases_deg = [0]\n",
            "t.toml",
            None,
            1,
            false,
        );
        assert_eq!(out.code, 2);
        assert!(out.stderr.contains("line 1"), "{}", out.stderr);
        assert_eq!(
            run_args(&["sweep", "--config", "/nonexistent/grid.toml"]).code,
            2
        );
    }

    #[test]
    fn outputs_are_fixed_points() {
        for args in [
            vec!["states", "--json"],
            vec!["verify", "--json"],
            vec!["reproduce", "--json"],
            vec!["field", "circular-right", "--phase", "0.3", "--json"],
        ] {
            let out = run_args(&args);
            assert_eq!(reformat_json(&out.stdout).unwrap(), out.stdout, "{args:?}");
        }
    }

    #[test]
    fn help_exits_zero() {
        let out = run_args(&["--help"]);
        assert_eq!(out.code, 0);
        assert!(out.stdout.contains("reproduce"));
    }
}
