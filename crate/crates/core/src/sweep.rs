//! Grid search for dyad combinations proportional to Pauli matrices.
//!
//! Every tuple of the grid `amplitudes⁴ × phases²` is turned into dyad
//! parameters, each requested construction is built, each combinator is
//! applied to the resulting pair, and the candidate is tested against each
//! target up to a complex scalar. Work is spread over a rayon pool; the
//! merged output is sorted, so the worker count never changes the result.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Deserialize;

use crate::algebra::{anticommutator, commutator, scalar_multiple_of, CMatrix};
use crate::dyadics::{Construction, DyadParams};
use crate::pauli::{pauli, PauliIndex};
use crate::{Error, Result, DEFAULT_TOL};

/// Bundled default grid.
pub const DEFAULT_CONFIG: &str = include_str!("../configs/default_sweep.toml");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Combinator {
    /// `M·N − N·M`
    Commutator,
    /// `M·N + N·M`
    Anticommutator,
    /// `M − N`
    Difference,
}

impl Combinator {
    pub const ALL: [Combinator; 3] = [
        Combinator::Commutator,
        Combinator::Anticommutator,
        Combinator::Difference,
    ];

    pub fn apply(self, m: &CMatrix, n: &CMatrix) -> Result<CMatrix> {
        match self {
            Combinator::Commutator => commutator(m, n),
            Combinator::Anticommutator => anticommutator(m, n),
            Combinator::Difference => m.sub(n),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Combinator::Commutator => "commutator",
            Combinator::Anticommutator => "anticommutator",
            Combinator::Difference => "difference",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Target {
    SigmaX,
    SigmaY,
    SigmaZ,
    Identity,
}

impl Target {
    pub const ALL: [Target; 4] = [
        Target::SigmaX,
        Target::SigmaY,
        Target::SigmaZ,
        Target::Identity,
    ];

    pub fn matrix(self) -> CMatrix {
        match self {
            Target::SigmaX => pauli(PauliIndex::X),
            Target::SigmaY => pauli(PauliIndex::Y),
            Target::SigmaZ => pauli(PauliIndex::Z),
            Target::Identity => CMatrix::identity(2).expect("2x2"),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Target::SigmaX => "sigma_x",
            Target::SigmaY => "sigma_y",
            Target::SigmaZ => "sigma_z",
            Target::Identity => "identity",
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Grid definition. Phases are stored in radians.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub amplitudes: Vec<f64>,
    pub phases: Vec<f64>,
    pub combinators: Vec<Combinator>,
    pub constructions: Vec<Construction>,
    pub targets: Vec<Target>,
    pub tol: f64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        DEFAULT_CONFIG.parse().expect("bundled config parses")
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    amplitudes: Vec<f64>,
    phases_deg: Option<Vec<f64>>,
    phases_rad: Option<Vec<f64>>,
    combinators: Option<Vec<Combinator>>,
    constructions: Option<Vec<RawConstruction>>,
    targets: Option<Vec<Target>>,
    tol: Option<f64>,
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(rename_all = "snake_case")]
enum RawConstruction {
    #[serde(alias = "pair_dyads")]
    Pair,
    #[serde(alias = "projector_dyads")]
    Projector,
}

fn line_of(text: &str, offset: usize) -> usize {
    text[..offset.min(text.len())].matches('\n').count() + 1
}

/// Line on which `key = ...` appears, or the last line when absent.
fn key_line(text: &str, key: &str) -> usize {
    text.lines()
        .position(|l| {
            let l = l.trim_start();
            l.strip_prefix(key)
                .is_some_and(|rest| rest.trim_start().starts_with('='))
        })
        .map_or_else(|| text.lines().count().max(1), |i| i + 1)
}

impl FromStr for SweepConfig {
    type Err = Error;

    /// Parses the flat `key = [list]` format (TOML). Comment lines start with `#`.
    fn from_str(text: &str) -> Result<Self> {
        let raw: RawConfig = toml::from_str(text).map_err(|e| Error::Config {
            line: e.span().map_or(1, |s| line_of(text, s.start)),
            message: e.message().to_string(),
        })?;
        let err = |key: &str, message: String| Error::Config {
            line: key_line(text, key),
            message,
        };

        let phases = match (raw.phases_deg, raw.phases_rad) {
            (Some(_), Some(_)) => {
                return Err(err(
                    "phases_rad",
                    "give either phases_deg or phases_rad, not both".into(),
                ))
            }
            (Some(d), None) => d.into_iter().map(f64::to_radians).collect(),
            (None, Some(r)) => r,
            (None, None) => {
                return Err(err("amplitudes", "missing phases_deg or phases_rad".into()))
            }
        };
        let cfg = SweepConfig {
            amplitudes: raw.amplitudes,
            phases,
            combinators: raw.combinators.unwrap_or_else(|| Combinator::ALL.to_vec()),
            constructions: raw
                .constructions
                .map(|v| {
                    v.into_iter()
                        .map(|c| match c {
                            RawConstruction::Pair => Construction::PairDyads,
                            RawConstruction::Projector => Construction::ProjectorDyads,
                        })
                        .collect()
                })
                .unwrap_or_else(|| Construction::ALL.to_vec()),
            targets: raw.targets.unwrap_or_else(|| Target::ALL.to_vec()),
            tol: raw.tol.unwrap_or(DEFAULT_TOL),
        };
        cfg.validate().map_err(|e| match e {
            Error::EmptyGrid(what) => {
                let key = if what == "phases" {
                    if text.contains("phases_rad") {
                        "phases_rad"
                    } else {
                        "phases_deg"
                    }
                } else {
                    what.as_str()
                };
                err(key, format!("`{what}` must not be empty"))
            }
            Error::InvalidTolerance(t) => {
                err("tol", format!("tol must be positive and finite, got {t}"))
            }
            other => err("amplitudes", other.to_string()),
        })?;
        Ok(cfg)
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        let empty = |name: &str, len: usize| {
            if len == 0 {
                Err(Error::EmptyGrid(name.to_string()))
            } else {
                Ok(())
            }
        };
        empty("amplitudes", self.amplitudes.len())?;
        empty("phases", self.phases.len())?;
        empty("combinators", self.combinators.len())?;
        empty("constructions", self.constructions.len())?;
        empty("targets", self.targets.len())?;
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            return Err(Error::InvalidTolerance(self.tol));
        }
        if !self
            .amplitudes
            .iter()
            .chain(&self.phases)
            .all(|x| x.is_finite())
        {
            return Err(Error::NonFinite);
        }
        Ok(())
    }
}

fn sorted_unique<T: Copy>(v: &[T], cmp: impl Fn(&T, &T) -> Ordering) -> Vec<T> {
    let mut v = v.to_vec();
    v.sort_by(&cmp);
    v.dedup_by(|a, b| cmp(a, b) == Ordering::Equal);
    v
}

/// One grid point whose candidate is a nonzero multiple of a target.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepMatch {
    pub params: DyadParams,
    pub construction: Construction,
    pub combinator: Combinator,
    pub target: Target,
    pub scale: Complex64,
}

impl SweepMatch {
    /// Rebuilds the candidate from scratch.
    pub fn candidate(&self) -> Result<CMatrix> {
        let (m, n) = self.construction.build(&self.params)?;
        self.combinator.apply(&m, &n)
    }

    /// Max-entry residual `|candidate − scale·target|`, recomputed.
    pub fn residual(&self) -> Result<f64> {
        self.candidate()?
            .max_abs_diff(&self.target.matrix().scale(self.scale))
    }

    fn cmp_key(&self, other: &Self) -> Ordering {
        let (a, b) = (self.params.sort_key(), other.params.sort_key());
        a.iter()
            .zip(&b)
            .map(|(x, y)| x.total_cmp(y))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
            .then(self.construction.cmp(&other.construction))
            .then(self.combinator.cmp(&other.combinator))
            .then(self.target.cmp(&other.target))
    }
}

/// Everything a sweep produced.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepOutcome {
    pub matches: Vec<SweepMatch>,
    /// Parameter tuples in the grid, degenerate ones included.
    pub parameter_tuples: usize,
    pub skipped_degenerate: usize,
    /// Candidate matrices evaluated (non-degenerate tuples × constructions × combinators).
    pub candidates: usize,
}

/// Runs the sweep on rayon's default pool.
pub fn sweep(cfg: &SweepConfig) -> Result<SweepOutcome> {
    sweep_with_workers(cfg, 0)
}

/// Runs the sweep on a dedicated pool of `workers` threads (0 = rayon default).
pub fn sweep_with_workers(cfg: &SweepConfig, workers: usize) -> Result<SweepOutcome> {
    cfg.validate()?;
    let amps = sorted_unique(&cfg.amplitudes, |a, b| a.total_cmp(b));
    let phases = sorted_unique(&cfg.phases, |a, b| a.total_cmp(b));
    let constructions = sorted_unique(&cfg.constructions, Ord::cmp);
    let combinators = sorted_unique(&cfg.combinators, Ord::cmp);
    let targets: Vec<(Target, CMatrix)> = sorted_unique(&cfg.targets, Ord::cmp)
        .into_iter()
        .map(|t| (t, t.matrix()))
        .collect();

    let mut grid = Vec::with_capacity(amps.len().pow(4) * phases.len().pow(2));
    for &a in &amps {
        for &b in &amps {
            for &alpha in &phases {
                for &c in &amps {
                    for &d in &amps {
                        for &beta in &phases {
                            grid.push(DyadParams::new(a, b, alpha, c, d, beta));
                        }
                    }
                }
            }
        }
    }
    let parameter_tuples = grid.len();
    grid.retain(|p| !p.is_degenerate());
    let skipped_degenerate = parameter_tuples - grid.len();
    if grid.is_empty() {
        return Err(Error::EmptyGrid(
            "every parameter tuple is degenerate".to_string(),
        ));
    }

    let evaluate = |p: &DyadParams| -> Result<Vec<SweepMatch>> {
        let mut found = Vec::new();
        for &construction in &constructions {
            let (m, n) = construction.build(p)?;
            for &combinator in &combinators {
                let candidate = combinator.apply(&m, &n)?;
                for (target, t) in &targets {
                    let sm = scalar_multiple_of(&candidate, t, cfg.tol)?;
                    if let Some(scale) = sm.scale {
                        found.push(SweepMatch {
                            params: *p,
                            construction,
                            combinator,
                            target: *target,
                            scale,
                        });
                    }
                }
            }
        }
        Ok(found)
    };

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .expect("thread pool");
    let chunks: Vec<Vec<SweepMatch>> =
        pool.install(|| grid.par_iter().map(evaluate).collect::<Result<_>>())?;
    let mut matches: Vec<SweepMatch> = chunks.into_iter().flatten().collect();
    matches.sort_by(SweepMatch::cmp_key);

    Ok(SweepOutcome {
        matches,
        parameter_tuples,
        skipped_degenerate,
        candidates: grid.len() * constructions.len() * combinators.len(),
    })
}

/// Aggregate counts over a sweep.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct SweepSummary {
    pub total: usize,
    pub per_target: BTreeMap<Target, usize>,
    pub per_combinator: BTreeMap<Combinator, usize>,
    /// Projector-commutator matches (all targets are Hermitian).
    pub projector_commutator: usize,
    /// Of those, how many have a purely imaginary scale.
    pub projector_commutator_imaginary: usize,
    pub skipped_degenerate: usize,
}

pub fn summarize(outcome: &SweepOutcome, tol: f64) -> SweepSummary {
    let mut s = SweepSummary {
        total: outcome.matches.len(),
        skipped_degenerate: outcome.skipped_degenerate,
        ..SweepSummary::default()
    };
    for m in &outcome.matches {
        *s.per_target.entry(m.target).or_default() += 1;
        *s.per_combinator.entry(m.combinator).or_default() += 1;
        if m.construction == Construction::ProjectorDyads && m.combinator == Combinator::Commutator
        {
            s.projector_commutator += 1;
            if m.scale.re.abs() < tol {
                s.projector_commutator_imaginary += 1;
            }
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c64;

    fn find(
        out: &SweepOutcome,
        p: DyadParams,
        cons: Construction,
        comb: Combinator,
        t: Target,
    ) -> Option<Complex64> {
        out.matches
            .iter()
            .find(|m| {
                m.params == p && m.construction == cons && m.combinator == comb && m.target == t
            })
            .map(|m| m.scale)
    }

    #[test]
    fn default_config_parses() {
        let cfg = SweepConfig::default();
        assert_eq!(cfg.amplitudes, vec![0.0, 1.0, -1.0]);
        assert_eq!(cfg.phases.len(), 4);
        assert_eq!(cfg.phases[0], 0.0);
        assert!((cfg.phases[1] - std::f64::consts::FRAC_PI_2).abs() < 1e-15);
        assert_eq!(cfg.combinators, Combinator::ALL.to_vec());
        assert_eq!(cfg.constructions, Construction::ALL.to_vec());
        assert_eq!(cfg.targets, Target::ALL.to_vec());
        assert_eq!(cfg.tol, 1e-9);
    }

    #[test]
    fn config_errors_carry_lines() {
        let text = "# comment\namplitudes = []\nphases_deg = [0]\n";
        match text.parse::<SweepConfig>() {
            Err(Error::Config { line, message }) => {
                assert_eq!(line, 2);
                assert!(message.contains("amplitudes"));
            }
            other => panic!("unexpected {other:?}"),
        }

        let text = "amplitudes = [1]\nphases_deg = [0]\ntargets = [\"sigma_w\"]\n";
        assert!(matches!(
            text.parse::<SweepConfig>(),
            Err(Error::Config { line: 3, .. })
        ));

        let text = "amplitudes = [1]\nphases_deg = [0]\nphases_rad = [0]\n";
        assert!(matches!(
            text.parse::<SweepConfig>(),
            Err(Error::Config { line: 3, .. })
        ));

        let text = "amplitudes = [1]\n";
        assert!(matches!(
            text.parse::<SweepConfig>(),
            Err(Error::Config { .. })
        ));

        let text = "amplitudes = [1]\nphases_rad = [0]\ntol = -1\n";
        assert!(matches!(
            text.parse::<SweepConfig>(),
            Err(Error::Config { line: 3, .. })
        ));

        let text = "amplitudes = [1]\nphases_rad = [0]\nbogus = 1\n";
        assert!(matches!(
            text.parse::<SweepConfig>(),
            Err(Error::Config { line: 3, .. })
        ));

        let text = "amplitudes = [1, \nphases_rad = [0]\n";
        assert!(matches!(
            text.parse::<SweepConfig>(),
            Err(Error::Config { .. })
        ));
    }

    #[test]
    fn radians_and_construction_aliases() {
        let text = "amplitudes = [1, 0]\nphases_rad = [0.5]\nconstructions = [\"pair_dyads\", \"projector\"]\n";
        let cfg: SweepConfig = text.parse().unwrap();
        assert_eq!(cfg.phases, vec![0.5]);
        assert_eq!(cfg.constructions, Construction::ALL.to_vec());
    }

    #[test]
    fn default_grid_findings() {
        let out = sweep(&SweepConfig::default()).unwrap();
        assert_eq!(out.parameter_tuples, 81 * 16);
        assert_eq!(out.skipped_degenerate, 81 * 16 - 64 * 16);
        let p = DyadParams::new(1.0, 0.0, 0.0, 0.0, 1.0, 0.0);
        use Combinator::*;
        use Construction::*;
        assert_eq!(
            find(&out, p, PairDyads, Commutator, Target::SigmaZ),
            Some(c64(1.0, 0.0))
        );
        assert_eq!(
            find(&out, p, PairDyads, Difference, Target::SigmaY),
            Some(c64(0.0, 1.0))
        );
        assert_eq!(
            find(&out, p, PairDyads, Anticommutator, Target::Identity),
            Some(c64(1.0, 0.0))
        );
        for m in &out.matches {
            assert!(m.residual().unwrap() < 1e-9);
            assert!(m.scale.norm() > 1e-9);
        }
        let s = summarize(&out, 1e-9);
        assert_eq!(s.projector_commutator, s.projector_commutator_imaginary);
        assert_eq!(s.total, out.matches.len());
        assert_eq!(s.per_target.values().sum::<usize>(), s.total);
    }

    #[test]
    fn restricted_to_case3_parameters() {
        let cfg = SweepConfig {
            amplitudes: vec![0.0, 1.0],
            phases: vec![0.0],
            combinators: vec![Combinator::Commutator],
            constructions: vec![Construction::PairDyads],
            targets: Target::ALL.to_vec(),
            tol: 1e-9,
        };
        let out = sweep(&cfg).unwrap();
        let got: Vec<_> = out
            .matches
            .iter()
            .map(|m| (m.params, m.target, m.scale))
            .collect();
        assert_eq!(
            got,
            vec![
                (
                    DyadParams::new(0.0, 1.0, 0.0, 1.0, 0.0, 0.0),
                    Target::SigmaZ,
                    c64(-1.0, 0.0)
                ),
                (
                    DyadParams::new(1.0, 0.0, 0.0, 0.0, 1.0, 0.0),
                    Target::SigmaZ,
                    c64(1.0, 0.0)
                ),
            ]
        );
    }

    #[test]
    fn empty_grids_rejected() {
        let mut cfg = SweepConfig::default();
        cfg.targets.clear();
        assert!(matches!(sweep(&cfg), Err(Error::EmptyGrid(_))));
        let mut cfg = SweepConfig::default();
        cfg.amplitudes = vec![0.0];
        assert!(matches!(sweep(&cfg), Err(Error::EmptyGrid(_))));
    }

    #[test]
    fn summary_of_nothing() {
        let out = SweepOutcome {
            matches: vec![],
            parameter_tuples: 0,
            skipped_degenerate: 0,
            candidates: 0,
        };
        assert_eq!(summarize(&out, 1e-9), SweepSummary::default());
    }
}
