//! Pauli matrices and spin-½ operators.

use std::fmt;

use num_complex::Complex64;

use crate::algebra::{anticommutator, commutator, mat_mul, CMatrix};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PauliIndex {
    X,
    Y,
    Z,
}

impl PauliIndex {
    pub const ALL: [PauliIndex; 3] = [PauliIndex::X, PauliIndex::Y, PauliIndex::Z];

    fn position(self) -> usize {
        self as usize
    }
}

impl fmt::Display for PauliIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            PauliIndex::X => "x",
            PauliIndex::Y => "y",
            PauliIndex::Z => "z",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LadderSign {
    Plus,
    Minus,
}

impl LadderSign {
    fn value(self) -> f64 {
        match self {
            LadderSign::Plus => 1.0,
            LadderSign::Minus => -1.0,
        }
    }
}

/// Spin scale. `hbar` defaults to 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinConfig {
    hbar: f64,
}

impl Default for SpinConfig {
    fn default() -> Self {
        SpinConfig { hbar: 1.0 }
    }
}

impl SpinConfig {
    pub fn new(hbar: f64) -> Result<Self> {
        if hbar > 0.0 && hbar.is_finite() {
            Ok(SpinConfig { hbar })
        } else {
            Err(Error::InvalidHbar(hbar))
        }
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }
}

const fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn pauli(i: PauliIndex) -> CMatrix {
    let z = c(0.0, 0.0);
    match i {
        PauliIndex::X => CMatrix::from_rows2([[z, c(1.0, 0.0)], [c(1.0, 0.0), z]]),
        PauliIndex::Y => CMatrix::from_rows2([[z, c(0.0, -1.0)], [c(0.0, 1.0), z]]),
        PauliIndex::Z => CMatrix::from_rows2([[c(1.0, 0.0), z], [z, c(-1.0, 0.0)]]),
    }
}

/// `S_i = (ħ/2)·σ_i`.
pub fn spin_operator(i: PauliIndex, cfg: &SpinConfig) -> CMatrix {
    pauli(i).scale(c(cfg.hbar / 2.0, 0.0))
}

/// `S± = S_x ± i·S_y`.
pub fn ladder(sign: LadderSign, cfg: &SpinConfig) -> CMatrix {
    let sx = spin_operator(PauliIndex::X, cfg);
    let sy = spin_operator(PauliIndex::Y, cfg);
    sx.add(&sy.scale(c(0.0, sign.value()))).expect("2x2")
}

/// `S² = S_x² + S_y² + S_z²`.
pub fn spin_squared(cfg: &SpinConfig) -> CMatrix {
    PauliIndex::ALL
        .iter()
        .map(|&i| {
            let s = spin_operator(i, cfg);
            mat_mul(&s, &s).expect("2x2")
        })
        .reduce(|a, b| a.add(&b).expect("2x2"))
        .expect("three terms")
}

/// `√(s(s+1) − m(m±1))`; multiply by ħ for the matrix element of `S±`.
pub fn ladder_coefficient(s: f64, m: f64, sign: LadderSign) -> Result<f64> {
    let two_s = 2.0 * s;
    let steps = s - m;
    let on_ladder =
        s >= 0.0 && two_s.fract() == 0.0 && steps.fract() == 0.0 && (0.0..=two_s).contains(&steps);
    if !on_ladder {
        return Err(Error::InvalidLadder { s, m });
    }
    let value = s * (s + 1.0) - m * (m + sign.value());
    Ok(value.max(0.0).sqrt())
}

/// Levi-Civita symbol over `(x, y, z)`.
pub fn levi_civita(j: PauliIndex, k: PauliIndex, l: PauliIndex) -> i32 {
    let (j, k, l) = (
        j.position() as i32,
        k.position() as i32,
        l.position() as i32,
    );
    // (j−k)(k−l)(l−j)/2 is ±1 on permutations and 0 on repeats
    (j - k) * (k - l) * (l - j) / 2
}

/// Result of checking the Pauli algebra.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlgebraReport {
    pub squares_ok: bool,
    pub anticommutation_ok: bool,
    pub commutation_ok: bool,
    pub max_residual: f64,
}

impl AlgebraReport {
    pub fn all_ok(&self) -> bool {
        self.squares_ok && self.anticommutation_ok && self.commutation_ok
    }
}

/// Checks `σ_j² = I`, `{σ_j, σ_k} = 2δ_jk I` and `[σ_j, σ_k] = 2i ε_jkl σ_l`
/// over every index combination.
pub fn verify_algebra(tol: f64) -> Result<AlgebraReport> {
    verify_algebra_of(&PauliIndex::ALL.map(pauli), tol)
}

/// Same checks for an arbitrary triple taken as `(σ_x, σ_y, σ_z)`.
pub fn verify_algebra_of(sigma: &[CMatrix; 3], tol: f64) -> Result<AlgebraReport> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::InvalidTolerance(tol));
    }
    let id = CMatrix::identity(2)?;
    let mut max_residual: f64 = 0.0;
    let mut track = |r: f64| {
        max_residual = max_residual.max(r);
        r <= tol
    };

    let mut squares_ok = true;
    for s in sigma {
        squares_ok &= track(mat_mul(s, s)?.max_abs_diff(&id)?);
    }

    let mut anticommutation_ok = true;
    let mut commutation_ok = true;
    for j in PauliIndex::ALL {
        for k in PauliIndex::ALL {
            let (sj, sk) = (&sigma[j.position()], &sigma[k.position()]);
            let delta = if j == k { 2.0 } else { 0.0 };
            let expected = id.scale(c(delta, 0.0));
            anticommutation_ok &= track(anticommutator(sj, sk)?.max_abs_diff(&expected)?);

            let mut expected = CMatrix::zero(2)?;
            for l in PauliIndex::ALL {
                let eps = levi_civita(j, k, l) as f64;
                expected = expected.add(&sigma[l.position()].scale(c(0.0, 2.0 * eps)))?;
            }
            commutation_ok &= track(commutator(sj, sk)?.max_abs_diff(&expected)?);
        }
    }

    Ok(AlgebraReport {
        squares_ok,
        anticommutation_ok,
        commutation_ok,
        max_residual,
    })
}
