//! The three reference constructions and their discrepancy ledger.
//!
//! Each case names four amplitudes and claims that a (prefactored)
//! commutator of dyads equals one Pauli matrix:
//!
//! | case | inputs                    | claim                 |
//! |------|---------------------------|-----------------------|
//! | 1    | A = 1, B = i, C = 1, D = i  | ½[D1, D2] = σ_x     |
//! | 2    | A = −1, B = i, C = 0, D = i | 2[D_I, D_II] = σ_y  |
//! | 3    | A = 1, B = 0, C = 0, D = 1  | [D1, D2] = σ_z      |
//!
//! The inputs mix "B = i" with "B real, α = π/2", so every case is
//! evaluated under two readings. The claimed matrix is only ever a
//! comparison target; the computed matrix always comes from building the
//! Jones vectors and multiplying the dyads out.

use std::f64::consts::FRAC_PI_2;
use std::fmt;

use num_complex::Complex64;

use crate::algebra::{commutator, is_antihermitian, scalar_multiple_of, CMatrix, ScalarMatch};
use crate::dyadics::{
    build_pair, commutator_closed_form, printed_projectors, projector_commutator_closed_form,
    Construction, DyadParams, ProjectorOffDiagonal,
};
use crate::pauli::{pauli, PauliIndex};
use crate::{Error, Result, DEFAULT_TOL};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseId {
    Case1,
    Case2,
    Case3,
}

impl CaseId {
    pub const ALL: [CaseId; 3] = [CaseId::Case1, CaseId::Case2, CaseId::Case3];

    pub fn number(self) -> u8 {
        self as u8 + 1
    }

    pub fn from_number(n: u8) -> Result<Self> {
        match n {
            1 => Ok(CaseId::Case1),
            2 => Ok(CaseId::Case2),
            3 => Ok(CaseId::Case3),
            _ => Err(Error::UnknownName {
                kind: "case",
                name: n.to_string(),
            }),
        }
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "case {}", self.number())
    }
}

/// How printed case inputs such as `B = i` become dyad parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Reading {
    /// Amplitudes are real moduli; a printed `i` becomes a phase of π/2.
    Phase,
    /// Complex literals go straight into the `(A, B e^{iα})` form, with
    /// the π/2 phase attached to an imaginary literal kept as well.
    LiteralComplex,
}

impl Reading {
    pub const ALL: [Reading; 2] = [Reading::Phase, Reading::LiteralComplex];

    pub fn name(self) -> &'static str {
        match self {
            Reading::Phase => "phase",
            Reading::LiteralComplex => "literal-complex",
        }
    }
}

/// Which inputs of a case are being evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    /// The amplitudes listed for the case.
    StatedParameters,
    /// The polarization states named in the prose of case 2,
    /// `(i/√2)(1, i)` and `i(0, 1)`.
    StatedStates,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::StatedParameters => "stated-parameters",
            Variant::StatedStates => "stated-states",
        }
    }
}

/// One evaluated claim.
#[derive(Debug, Clone, PartialEq)]
pub struct CaseReport {
    pub case_id: CaseId,
    pub reading: Reading,
    pub variant: Variant,
    pub construction: Construction,
    pub params: DyadParams,
    pub prefactor: f64,
    /// `prefactor · [first, second]`.
    pub computed: CMatrix,
    pub claimed: CMatrix,
    pub claimed_label: &'static str,
    /// `computed` equals `claimed` entrywise within tolerance.
    pub exact_match: bool,
    pub exact_residual: f64,
    /// `computed` against `claimed` up to a complex scalar.
    pub scalar_match: ScalarMatch,
    pub anti_hermitian: bool,
    pub tol: f64,
}

impl CaseReport {
    /// One-line verdict for the ledger.
    pub fn finding(&self) -> String {
        let claim = format!(
            "claim {}·[{}] = {}",
            self.prefactor,
            match self.construction {
                Construction::PairDyads => "D1, D2",
                Construction::ProjectorDyads => "D_I, D_II",
            },
            self.claimed_label
        );
        if self.exact_match {
            return format!("{claim} reproduces exactly");
        }
        let mut out = format!("{claim} does not reproduce: computed {}", self.computed);
        if self.computed.is_zero(self.tol) {
            out.push_str(" (zero matrix)");
        } else if let Some(s) = self.scalar_match.scale {
            out.push_str(&format!(
                "; equals ({}) × {}",
                crate::algebra::format_complex(s, 6),
                self.claimed_label
            ));
        } else {
            out.push_str(&format!("; not proportional to {}", self.claimed_label));
        }
        if self.anti_hermitian && !self.computed.is_zero(self.tol) {
            out.push_str(&format!(
                "; commutator is anti-Hermitian, so no real multiple equals Hermitian {}",
                self.claimed_label
            ));
        }
        out
    }
}

struct CaseClaim {
    construction: Construction,
    prefactor: f64,
    target: PauliIndex,
}

fn claim(case: CaseId) -> CaseClaim {
    match case {
        CaseId::Case1 => CaseClaim {
            construction: Construction::PairDyads,
            prefactor: 0.5,
            target: PauliIndex::X,
        },
        CaseId::Case2 => CaseClaim {
            construction: Construction::ProjectorDyads,
            prefactor: 2.0,
            target: PauliIndex::Y,
        },
        CaseId::Case3 => CaseClaim {
            construction: Construction::PairDyads,
            prefactor: 1.0,
            target: PauliIndex::Z,
        },
    }
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Dyad parameters for a case under a reading.
pub fn case_params(case: CaseId, reading: Reading, variant: Variant) -> Result<DyadParams> {
    let i = c(0.0, 1.0);
    let r = |x: f64| c(x, 0.0);
    let p = match (case, reading, variant) {
        (CaseId::Case1, Reading::Phase, Variant::StatedParameters) => {
            DyadParams::new(1.0, 1.0, FRAC_PI_2, 1.0, 1.0, FRAC_PI_2)
        }
        (CaseId::Case1, Reading::LiteralComplex, Variant::StatedParameters) => {
            DyadParams::literal(r(1.0), i, FRAC_PI_2, r(1.0), i, FRAC_PI_2)
        }
        (CaseId::Case2, Reading::Phase, Variant::StatedParameters) => {
            DyadParams::new(-1.0, 1.0, FRAC_PI_2, 0.0, 1.0, FRAC_PI_2)
        }
        (CaseId::Case2, Reading::LiteralComplex, Variant::StatedParameters) => {
            DyadParams::literal(r(-1.0), i, FRAC_PI_2, r(0.0), i, FRAC_PI_2)
        }
        // (i/√2)(1, i) and i(0, 1), written as literal amplitudes with no extra phase
        (CaseId::Case2, Reading::LiteralComplex, Variant::StatedStates) => {
            DyadParams::literal(i, r(-1.0), 0.0, r(0.0), i, 0.0)
        }
        // B = 0 and C = 0 carry no phase, so both readings coincide
        (CaseId::Case3, _, Variant::StatedParameters) => {
            DyadParams::new(1.0, 0.0, 0.0, 0.0, 1.0, 0.0)
        }
        _ => {
            return Err(Error::UnknownName {
                kind: "case variant",
                name: format!("{case} / {} / {}", reading.name(), variant.name()),
            })
        }
    };
    Ok(p)
}

/// Evaluates one case at the default tolerance.
pub fn run_case(case: CaseId, reading: Reading) -> Result<CaseReport> {
    run_case_variant(case, reading, Variant::StatedParameters, DEFAULT_TOL)
}

pub fn run_case_variant(
    case: CaseId,
    reading: Reading,
    variant: Variant,
    tol: f64,
) -> Result<CaseReport> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::InvalidTolerance(tol));
    }
    let s = claim(case);
    let params = case_params(case, reading, variant)?;
    let (first, second) = s.construction.build(&params)?;
    let raw = commutator(&first, &second)?;
    let computed = raw.scale(c(s.prefactor, 0.0));
    let claimed = pauli(s.target);
    let exact_residual = computed.max_abs_diff(&claimed)?;
    let scalar_match = scalar_multiple_of(&computed, &claimed, tol)?;
    Ok(CaseReport {
        case_id: case,
        reading,
        variant,
        construction: s.construction,
        params,
        prefactor: s.prefactor,
        computed,
        claimed,
        claimed_label: match s.target {
            PauliIndex::X => "σ_x",
            PauliIndex::Y => "σ_y",
            PauliIndex::Z => "σ_z",
        },
        exact_match: exact_residual < tol,
        exact_residual,
        scalar_match,
        anti_hermitian: is_antihermitian(&raw, tol),
        tol,
    })
}

/// Closed-form cross-checks at one case's parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct ClosedFormCheck {
    pub case_id: CaseId,
    pub reading: Reading,
    pub params: DyadParams,
    /// Max-entry gap between `[D1, D2]` and `E²·(a_ij)`.
    pub pair_residual: f64,
    /// Published versus derived (1,2) entry of `[D_I, D_II]`.
    pub projector_entry: ProjectorOffDiagonal,
    /// Max-entry gap between the published `D_II` grid and `J₂J₂*`.
    pub printed_projector_ii_error: f64,
}

pub fn closed_form_check(case: CaseId, reading: Reading) -> Result<ClosedFormCheck> {
    let params = case_params(case, reading, Variant::StatedParameters)?;
    let (d1, d2) = build_pair(&params)?;
    let predicted = commutator_closed_form(&params).scaled(params.normalizers()?.e);
    let (_, d_ii) = Construction::ProjectorDyads.build(&params)?;
    let (_, printed_ii) = printed_projectors(&params)?;
    Ok(ClosedFormCheck {
        case_id: case,
        reading,
        params,
        pair_residual: commutator(&d1, &d2)?.max_abs_diff(&predicted)?,
        projector_entry: projector_commutator_closed_form(&params)?,
        printed_projector_ii_error: printed_ii.max_abs_diff(&d_ii)?,
    })
}

/// The full ledger: six case reports, supplementary variants, and the
/// closed-form comparisons.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscrepancyReport {
    /// Ordered by case, then reading.
    pub cases: Vec<CaseReport>,
    pub supplementary: Vec<CaseReport>,
    pub closed_forms: Vec<ClosedFormCheck>,
}

impl DiscrepancyReport {
    pub fn all_exact(&self) -> bool {
        self.cases.iter().all(|c| c.exact_match)
    }

    /// Restricts every section to one case.
    pub fn only(mut self, case: CaseId) -> Self {
        self.cases.retain(|c| c.case_id == case);
        self.supplementary.retain(|c| c.case_id == case);
        self.closed_forms.retain(|c| c.case_id == case);
        self
    }
}

pub fn discrepancy_report(tol: f64) -> Result<DiscrepancyReport> {
    let mut cases = Vec::with_capacity(6);
    let mut closed_forms = Vec::with_capacity(6);
    for case in CaseId::ALL {
        for reading in Reading::ALL {
            cases.push(run_case_variant(
                case,
                reading,
                Variant::StatedParameters,
                tol,
            )?);
            closed_forms.push(closed_form_check(case, reading)?);
        }
    }
    let supplementary = vec![run_case_variant(
        CaseId::Case2,
        Reading::LiteralComplex,
        Variant::StatedStates,
        tol,
    )?];
    Ok(DiscrepancyReport {
        cases,
        supplementary,
        closed_forms,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{is_hermitian, mat_mul};

    // Independent 2×2 oracle: raw Jones components, hand-normalized, with
    // the commutator written out entry by entry.
    fn oracle_commutator(u: [Complex64; 2], v: [Complex64; 2], conj: bool) -> [[Complex64; 2]; 2] {
        let n = |w: [Complex64; 2]| {
            let s = (w[0].norm_sqr() + w[1].norm_sqr()).sqrt();
            [w[0] / s, w[1] / s]
        };
        let (u, v) = (n(u), n(v));
        let dy = |x: [Complex64; 2], y: [Complex64; 2]| {
            let y = if conj { [y[0].conj(), y[1].conj()] } else { y };
            [[x[0] * y[0], x[0] * y[1]], [x[1] * y[0], x[1] * y[1]]]
        };
        let (m, k) = if conj {
            (dy(u, u), dy(v, v))
        } else {
            (dy(u, v), dy(v, u))
        };
        let mut out = [[c(0.0, 0.0); 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                out[i][j] =
                    m[i][0] * k[0][j] + m[i][1] * k[1][j] - k[i][0] * m[0][j] - k[i][1] * m[1][j];
            }
        }
        out
    }

    fn max_gap(m: &CMatrix, o: [[Complex64; 2]; 2], prefactor: f64) -> f64 {
        let o = CMatrix::from_rows2(o).scale(c(prefactor, 0.0));
        m.max_abs_diff(&o).unwrap()
    }

    #[test]
    fn case3_reproduces_exactly() {
        for reading in Reading::ALL {
            let r = run_case(CaseId::Case3, reading).unwrap();
            assert_eq!(r.computed, CMatrix::real2([[1.0, 0.0], [0.0, -1.0]]));
            assert!(r.exact_match);
            assert_eq!(r.exact_residual, 0.0);
            assert_eq!(r.scalar_match.scale, Some(c(1.0, 0.0)));
        }
    }

    #[test]
    fn case1_is_zero_under_both_readings() {
        let i = c(0.0, 1.0);
        let one = c(1.0, 0.0);
        // phase reading: (1, e^{iπ/2}) twice; literal: (1, i·e^{iπ/2}) = (1, −1) twice
        let phase = oracle_commutator([one, i], [one, i], false);
        let literal = oracle_commutator([one, -one], [one, -one], false);
        for (reading, o) in [(Reading::Phase, phase), (Reading::LiteralComplex, literal)] {
            let r = run_case(CaseId::Case1, reading).unwrap();
            assert!(r.computed.is_zero(1e-12));
            assert!(max_gap(&r.computed, o, 0.5) < 1e-12);
            assert!(!r.exact_match);
            assert!(!r.scalar_match.matched);
            assert!(r.finding().contains("zero matrix"));
        }
    }

    #[test]
    fn case2_is_anti_hermitian() {
        let i = c(0.0, 1.0);
        let one = c(1.0, 0.0);
        let zero = c(0.0, 0.0);
        let phase = oracle_commutator([-one, i], [zero, i], true);
        let literal = oracle_commutator([-one, -one], [zero, -one], true);
        for (reading, o) in [(Reading::Phase, phase), (Reading::LiteralComplex, literal)] {
            let r = run_case(CaseId::Case2, reading).unwrap();
            assert!(max_gap(&r.computed, o, 2.0) < 1e-12);
            assert!(r.anti_hermitian);
            assert!(!r.exact_match);
            assert!(r.scalar_match.coefficient.re.abs() < 1e-9);
            if let Some(s) = r.scalar_match.scale {
                assert!(s.re.abs() < 1e-9);
            }
        }
        // phase reading lands on i·σ_x, the literal reading on i·σ_y
        let r = run_case(CaseId::Case2, Reading::Phase).unwrap();
        let i_sx = pauli(PauliIndex::X).scale(i);
        assert!(r.computed.max_abs_diff(&i_sx).unwrap() < 1e-12);
        let r = run_case(CaseId::Case2, Reading::LiteralComplex).unwrap();
        assert!((r.scalar_match.scale.unwrap() - i).norm() < 1e-12);
    }

    #[test]
    fn stated_states_variant() {
        let r = run_case_variant(
            CaseId::Case2,
            Reading::LiteralComplex,
            Variant::StatedStates,
            1e-9,
        )
        .unwrap();
        let (j1, j2) = r.params.jones_pair().unwrap();
        let h = std::f64::consts::FRAC_1_SQRT_2;
        assert!((j1.ex() - c(0.0, h)).norm() < 1e-15 && (j1.ey() - c(-h, 0.0)).norm() < 1e-15);
        assert!((j2.ey() - c(0.0, 1.0)).norm() < 1e-15);
        assert!(!r.exact_match);
        assert!(r.anti_hermitian);
        assert!(case_params(CaseId::Case1, Reading::Phase, Variant::StatedStates).is_err());
    }

    #[test]
    fn projectors_in_case2_are_projectors() {
        for reading in Reading::ALL {
            let p = case_params(CaseId::Case2, reading, Variant::StatedParameters).unwrap();
            let (a, b) = Construction::ProjectorDyads.build(&p).unwrap();
            for d in [a, b] {
                assert!(is_hermitian(&d, 1e-12));
                assert!(mat_mul(&d, &d).unwrap().max_abs_diff(&d).unwrap() < 1e-12);
            }
        }
    }

    #[test]
    fn ledger_shape() {
        let rep = discrepancy_report(1e-9).unwrap();
        assert_eq!(rep.cases.len(), 6);
        let order: Vec<_> = rep.cases.iter().map(|c| (c.case_id, c.reading)).collect();
        let mut sorted = order.clone();
        sorted.sort();
        assert_eq!(order, sorted);
        assert!(!rep.all_exact());
        let c3: Vec<_> = rep
            .cases
            .iter()
            .filter(|c| c.case_id == CaseId::Case3)
            .collect();
        assert_eq!(c3[0].computed, c3[1].computed);
        for cf in &rep.closed_forms {
            assert!(cf.pair_residual < 1e-12);
        }
        let only = rep.only(CaseId::Case3);
        assert_eq!(only.cases.len(), 2);
        assert!(only.all_exact());
        assert!(only.supplementary.is_empty());
    }

    #[test]
    fn bad_tolerance() {
        assert!(run_case_variant(
            CaseId::Case3,
            Reading::Phase,
            Variant::StatedParameters,
            0.0
        )
        .is_err());
    }
}
