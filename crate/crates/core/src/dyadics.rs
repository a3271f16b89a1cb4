//! Dyads (outer products) built from Jones vectors.
//!
//! Two Jones vectors
//!
//! ```text
//! J₁ = (A x̂ + B e^{iα} ŷ) / √(|A|² + |B|²)
//! J₂ = (C x̂ + D e^{iβ} ŷ) / √(|C|² + |D|²)
//! ```
//!
//! give the pair dyads `D1 = J₁J₂`, `D2 = J₂J₁` (plain outer products, so
//! `D2 = D1ᵀ`) and the projector dyads `D_I = J₁J₁*`, `D_II = J₂J₂*`.
//! The commutator `[D1, D2]` has a closed form `E²·(a_ij)`, evaluated here
//! numerically so it can be checked against the direct matrix product.

use num_complex::Complex64;

use crate::algebra::CMatrix;
use crate::jones::JonesVector;
use crate::{Error, Result};

/// Pair norms below this are rejected as degenerate.
pub const DEGENERATE_NORM: f64 = 1e-12;

/// Amplitudes `A, B, C, D` and phases `α, β` of the two Jones vectors.
///
/// Amplitudes are complex so that literal substitutions such as `B = i`
/// can be represented; [`DyadParams::new`] covers the usual real case.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DyadParams {
    pub a: Complex64,
    pub b: Complex64,
    pub alpha: f64,
    pub c: Complex64,
    pub d: Complex64,
    pub beta: f64,
}

/// `E = 1/(√(|A|²+|B|²)·√(|C|²+|D|²))`, `F = 1/(|A|²+|B|²)`, `G = 1/(|C|²+|D|²)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Normalizers {
    pub e: f64,
    pub f: f64,
    pub g: f64,
}

/// The four closed-form entries of `[D1, D2] / E²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClosedFormEntries {
    pub a11: Complex64,
    pub a12: Complex64,
    pub a21: Complex64,
    pub a22: Complex64,
}

/// Off-diagonal entry (row 1, column 2) of `[D_I, D_II]`, two ways.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProjectorOffDiagonal {
    /// `FG · AB e^{−i(α+β)} [(A²−B²)e^{iα} + (D²−C²)e^{iβ}]`, the published expression.
    pub printed: Complex64,
    /// `FG · [C D̄ e^{−iβ}(|A|²−|B|²) + A B̄ e^{−iα}(|D|²−|C|²)]`, from direct multiplication.
    pub derived: Complex64,
}

impl ProjectorOffDiagonal {
    pub fn discrepancy(&self) -> f64 {
        (self.printed - self.derived).norm()
    }

    pub fn agrees(&self, tol: f64) -> bool {
        self.discrepancy() < tol
    }
}

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn cis(theta: f64) -> Complex64 {
    Complex64::from_polar(1.0, theta)
}

impl DyadParams {
    /// Real amplitudes with separate phases.
    pub fn new(a: f64, b: f64, alpha: f64, c: f64, d: f64, beta: f64) -> Self {
        DyadParams {
            a: re(a),
            b: re(b),
            alpha,
            c: re(c),
            d: re(d),
            beta,
        }
    }

    /// Complex amplitudes substituted as given.
    pub fn literal(
        a: Complex64,
        b: Complex64,
        alpha: f64,
        c: Complex64,
        d: Complex64,
        beta: f64,
    ) -> Self {
        DyadParams {
            a,
            b,
            alpha,
            c,
            d,
            beta,
        }
    }

    pub fn is_real(&self) -> bool {
        [self.a, self.b, self.c, self.d].iter().all(|z| z.im == 0.0)
    }

    /// `(|A|² + |B|², |C|² + |D|²)`.
    pub fn squared_norms(&self) -> (f64, f64) {
        (
            self.a.norm_sqr() + self.b.norm_sqr(),
            self.c.norm_sqr() + self.d.norm_sqr(),
        )
    }

    pub fn is_degenerate(&self) -> bool {
        let (n1, n2) = self.squared_norms();
        n1.sqrt() < DEGENERATE_NORM || n2.sqrt() < DEGENERATE_NORM
    }

    pub fn normalizers(&self) -> Result<Normalizers> {
        let (n1, n2) = self.squared_norms();
        if n1.sqrt() < DEGENERATE_NORM {
            return Err(Error::DegenerateParams("|A|² + |B|² is zero"));
        }
        if n2.sqrt() < DEGENERATE_NORM {
            return Err(Error::DegenerateParams("|C|² + |D|² is zero"));
        }
        Ok(Normalizers {
            e: 1.0 / (n1.sqrt() * n2.sqrt()),
            f: 1.0 / n1,
            g: 1.0 / n2,
        })
    }

    /// The raw (unnormalized) vectors `(A, B e^{iα})` and `(C, D e^{iβ})`.
    pub fn raw_vectors(&self) -> ([Complex64; 2], [Complex64; 2]) {
        (
            [self.a, self.b * cis(self.alpha)],
            [self.c, self.d * cis(self.beta)],
        )
    }

    /// The normalized Jones vectors `J₁`, `J₂`.
    pub fn jones_pair(&self) -> Result<(JonesVector, JonesVector)> {
        self.normalizers()?;
        let (u, v) = self.raw_vectors();
        Ok((JonesVector::new(u[0], u[1])?, JonesVector::new(v[0], v[1])?))
    }

    /// Lexicographic key used to order sweep output.
    pub fn sort_key(&self) -> [f64; 10] {
        [
            self.a.re, self.a.im, self.b.re, self.b.im, self.alpha, self.c.re, self.c.im,
            self.d.re, self.d.im, self.beta,
        ]
    }
}

/// Which pair of dyads a construction starts from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Construction {
    /// `(D1, D2) = (J₁J₂, J₂J₁)`.
    PairDyads,
    /// `(D_I, D_II) = (J₁J₁*, J₂J₂*)`.
    ProjectorDyads,
}

impl Construction {
    pub const ALL: [Construction; 2] = [Construction::PairDyads, Construction::ProjectorDyads];

    pub fn build(self, p: &DyadParams) -> Result<(CMatrix, CMatrix)> {
        match self {
            Construction::PairDyads => build_pair(p),
            Construction::ProjectorDyads => build_projectors(p),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Construction::PairDyads => "pair",
            Construction::ProjectorDyads => "projector",
        }
    }
}

/// Outer product `M_ij = u_i v_j` without conjugation.
///
/// Two-vectors give the quartic (2×2) form, three-vectors the nonic (3×3) form.
pub fn outer(u: &[Complex64], v: &[Complex64]) -> Result<CMatrix> {
    if u.len() != v.len() {
        return Err(Error::DimensionMismatch {
            left: u.len(),
            right: v.len(),
        });
    }
    let entries: Vec<Complex64> = u
        .iter()
        .flat_map(|x| v.iter().map(move |y| x * y))
        .collect();
    CMatrix::new(u.len(), &entries)
}

/// Outer product with the second factor conjugated, `M_ij = u_i v̄_j`.
pub fn outer_conj(u: &JonesVector, v: &JonesVector) -> CMatrix {
    let v = v.components().map(|z| z.conj());
    outer(&u.components(), &v).expect("2-vectors")
}

/// `(D1, D2) = (J₁J₂, J₂J₁)`.
pub fn build_pair(p: &DyadParams) -> Result<(CMatrix, CMatrix)> {
    let (j1, j2) = p.jones_pair()?;
    Ok((
        outer(&j1.components(), &j2.components())?,
        outer(&j2.components(), &j1.components())?,
    ))
}

/// `(D_I, D_II) = (J₁J₁*, J₂J₂*)`.
pub fn build_projectors(p: &DyadParams) -> Result<(CMatrix, CMatrix)> {
    let (j1, j2) = p.jones_pair()?;
    Ok((outer_conj(&j1, &j1), outer_conj(&j2, &j2)))
}

/// The pair dyads written out entry by entry as
/// `D1 = E [[AC, AD e^{iβ}], [BC e^{iα}, BD e^{i(α+β)}]]` and
/// `D2 = E [[AC, CB e^{iα}], [DA e^{iβ}, BD e^{i(α+β)}]]`.
pub fn printed_pair(p: &DyadParams) -> Result<(CMatrix, CMatrix)> {
    let e = re(p.normalizers()?.e);
    let (a, b, c, d) = (p.a, p.b, p.c, p.d);
    let (ea, eb, eab) = (cis(p.alpha), cis(p.beta), cis(p.alpha + p.beta));
    let d1 = CMatrix::from_rows2([[a * c, a * d * eb], [b * c * ea, b * d * eab]]).scale(e);
    let d2 = CMatrix::from_rows2([[a * c, c * b * ea], [d * a * eb, b * d * eab]]).scale(e);
    Ok((d1, d2))
}

/// The projector dyads exactly as published:
/// `D_I = F [[A², AB e^{−iα}], [AB e^{iα}, B²]]` and
/// `D_II = E [[C², AB e^{−iβ}], [AB e^{iβ}, D²]]`.
///
/// The `D_II` form carries `A, B` and the prefactor `E` where `C, D` and
/// `G` belong; it is kept only so reports can measure the discrepancy.
pub fn printed_projectors(p: &DyadParams) -> Result<(CMatrix, CMatrix)> {
    let n = p.normalizers()?;
    let (a, b, c, d) = (p.a, p.b, p.c, p.d);
    let d_i = CMatrix::from_rows2([
        [a * a, a * b * cis(-p.alpha)],
        [a * b * cis(p.alpha), b * b],
    ])
    .scale(re(n.f));
    let d_ii = CMatrix::from_rows2([[c * c, a * b * cis(-p.beta)], [a * b * cis(p.beta), d * d]])
        .scale(re(n.e));
    Ok((d_i, d_ii))
}

/// Evaluates the published closed-form entries of `[D1, D2] / E²`.
pub fn commutator_closed_form(p: &DyadParams) -> ClosedFormEntries {
    let (a, b, c, d) = (p.a, p.b, p.c, p.d);
    let (al, be) = (p.alpha, p.beta);
    let a11 = a * a * cis(2.0 * be) * d * d - cis(2.0 * al) * b * b * c * c;
    let off = -a * a * cis(be) * c * d + cis(al) * a * b * (c * c + cis(2.0 * be) * d * d)
        - b * b * c * d * cis(2.0 * al + be);
    let a22 = b * b * c * c * cis(2.0 * al) - a * a * d * d * cis(2.0 * be);
    ClosedFormEntries {
        a11,
        a12: off,
        a21: off,
        a22,
    }
}

impl ClosedFormEntries {
    pub fn to_matrix(&self) -> CMatrix {
        CMatrix::from_rows2([[self.a11, self.a12], [self.a21, self.a22]])
    }

    /// `E²·(a_ij)`, the predicted commutator.
    pub fn scaled(&self, e: f64) -> CMatrix {
        self.to_matrix().scale(re(e * e))
    }
}

/// The (1,2) entry of `[D_I, D_II]` from the published expression and from
/// direct multiplication of the Hermitian projectors.
pub fn projector_commutator_closed_form(p: &DyadParams) -> Result<ProjectorOffDiagonal> {
    let n = p.normalizers()?;
    let fg = re(n.f * n.g);
    let (a, b, c, d) = (p.a, p.b, p.c, p.d);
    let (al, be) = (p.alpha, p.beta);

    let printed =
        fg * a * b * cis(-(al + be)) * ((a * a - b * b) * cis(al) + (d * d - c * c) * cis(be));

    let derived = fg
        * (c * d.conj() * cis(-be) * re(a.norm_sqr() - b.norm_sqr())
            + a * b.conj() * cis(-al) * re(d.norm_sqr() - c.norm_sqr()));

    Ok(ProjectorOffDiagonal { printed, derived })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{commutator, is_hermitian, mat_mul};
    use crate::c64;
    use proptest::prelude::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    const Z: Complex64 = Complex64::new(0.0, 0.0);

    #[test]
    fn outer_products() {
        let m = outer(&[c64(1.0, 0.0), Z], &[Z, c64(1.0, 0.0)]).unwrap();
        assert_eq!(m, CMatrix::real2([[0.0, 1.0], [0.0, 0.0]]));

        let u = [c64(1.0, 0.0), c64(2.0, 0.0), c64(3.0, 0.0)];
        let v = [c64(5.0, 0.0), c64(7.0, 0.0), c64(11.0, 0.0)];
        let m = outer(&u, &v).unwrap();
        assert_eq!(m.dim(), 3);
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(m.get(i, j), u[i] * v[j]);
            }
        }

        let m = outer(
            &[c64(1.0, 0.0), c64(0.0, 1.0)],
            &[c64(1.0, 0.0), c64(0.0, -1.0)],
        )
        .unwrap();
        assert_eq!(
            m,
            CMatrix::from_rows2([
                [c64(1.0, 0.0), c64(0.0, -1.0)],
                [c64(0.0, 1.0), c64(1.0, 0.0)]
            ])
        );

        assert!(outer(&u, &[Z, Z]).is_err());
        assert_eq!(outer(&[Z], &[Z]), Err(Error::UnsupportedDimension(1)));
    }

    #[test]
    fn conjugated_outer_products() {
        let x = JonesVector::new(c64(1.0, 0.0), Z).unwrap();
        assert_eq!(outer_conj(&x, &x), CMatrix::real2([[1.0, 0.0], [0.0, 0.0]]));

        let l = JonesVector::new(c64(1.0, 0.0), c64(0.0, 1.0)).unwrap();
        let expected = CMatrix::from_rows2([
            [c64(0.5, 0.0), c64(0.0, -0.5)],
            [c64(0.0, 0.5), c64(0.5, 0.0)],
        ]);
        assert!(outer_conj(&l, &l).max_abs_diff(&expected).unwrap() < 1e-15);

        let iy = JonesVector::new(Z, c64(0.0, 1.0)).unwrap();
        assert_eq!(
            outer_conj(&iy, &iy),
            CMatrix::real2([[0.0, 0.0], [0.0, 1.0]])
        );
    }

    #[test]
    fn pair_for_linear_inputs() {
        let p = DyadParams::new(1.0, 0.0, 0.0, 0.0, 1.0, 0.0);
        let (d1, d2) = build_pair(&p).unwrap();
        assert_eq!(d1, CMatrix::real2([[0.0, 1.0], [0.0, 0.0]]));
        assert_eq!(d2, CMatrix::real2([[0.0, 0.0], [1.0, 0.0]]));
    }

    #[test]
    fn symmetric_params_give_equal_dyads() {
        let p = DyadParams::new(0.7, -1.3, 0.4, 0.7, -1.3, 0.4);
        let (d1, d2) = build_pair(&p).unwrap();
        assert_eq!(d1, d2);
    }

    #[test]
    fn degenerate_params_rejected() {
        let p = DyadParams::new(0.0, 0.0, 0.0, 1.0, 1.0, 0.0);
        assert!(matches!(build_pair(&p), Err(Error::DegenerateParams(_))));
        let p = DyadParams::new(1.0, 1.0, 0.0, 0.0, 1e-13, 0.0);
        assert!(p.is_degenerate());
        assert!(build_projectors(&p).is_err());
        assert!(projector_commutator_closed_form(&p).is_err());
    }

    #[test]
    fn projector_examples() {
        let (d_i, _) = build_projectors(&DyadParams::new(1.0, 0.0, 0.0, 1.0, 1.0, 0.0)).unwrap();
        assert_eq!(d_i, CMatrix::real2([[1.0, 0.0], [0.0, 0.0]]));

        let (d_i, _) =
            build_projectors(&DyadParams::new(1.0, 1.0, FRAC_PI_2, 1.0, 0.0, 0.0)).unwrap();
        let expected = CMatrix::from_rows2([
            [c64(0.5, 0.0), c64(0.0, -0.5)],
            [c64(0.0, 0.5), c64(0.5, 0.0)],
        ]);
        assert!(d_i.max_abs_diff(&expected).unwrap() < 1e-15);
    }

    #[test]
    fn closed_form_examples() {
        let e = commutator_closed_form(&DyadParams::new(1.0, 0.0, 0.0, 0.0, 1.0, 0.0));
        assert_eq!(
            [e.a11, e.a12, e.a21, e.a22],
            [c64(1.0, 0.0), Z, Z, c64(-1.0, 0.0)]
        );
        let e = commutator_closed_form(&DyadParams::new(1.0, 1.0, FRAC_PI_2, 1.0, 1.0, FRAC_PI_2));
        assert!(e.to_matrix().is_zero(1e-15));
    }

    #[test]
    fn projector_closed_form_examples() {
        let r = projector_commutator_closed_form(&DyadParams::new(1.0, 1.0, 0.3, 1.0, 1.0, 1.1))
            .unwrap();
        assert!(r.agrees(1e-15));

        let r = projector_commutator_closed_form(&DyadParams::new(1.0, 0.0, 0.0, 0.0, 1.0, 0.0))
            .unwrap();
        assert_eq!(r.derived, Z);

        let p = DyadParams::new(1.0, 2.0, 0.5, 0.3, 1.0, 1.2);
        let r = projector_commutator_closed_form(&p).unwrap();
        let (d_i, d_ii) = build_projectors(&p).unwrap();
        let direct = commutator(&d_i, &d_ii).unwrap().get(0, 1);
        assert!((r.derived - direct).norm() < 1e-14);
        assert!(!r.agrees(1e-6));
    }

    #[test]
    fn printed_projectors_carry_typo() {
        // with C, D ≠ A, B the published D_II is not J₂J₂*
        let p = DyadParams::new(1.0, 2.0, 0.5, 0.3, 1.0, 1.2);
        let (pi, pii) = printed_projectors(&p).unwrap();
        let (d_i, d_ii) = build_projectors(&p).unwrap();
        assert!(pi.max_abs_diff(&d_i).unwrap() < 1e-15);
        assert!(pii.max_abs_diff(&d_ii).unwrap() > 0.1);
    }

    fn arb_amp() -> impl Strategy<Value = f64> {
        (-2.0..2.0f64).prop_filter("away from zero", |x| x.abs() > 1e-3)
    }

    prop_compose! {
        fn arb_params()(a in arb_amp(), b in arb_amp(), c in arb_amp(), d in arb_amp(),
                        alpha in 0.0..(2.0 * PI), beta in 0.0..(2.0 * PI)) -> DyadParams {
            DyadParams::new(a, b, alpha, c, d, beta)
        }
    }

    prop_compose! {
        fn arb_literal()(v in proptest::collection::vec(-2.0..2.0f64, 8),
                         alpha in 0.0..(2.0 * PI), beta in 0.0..(2.0 * PI)) -> DyadParams {
            DyadParams::literal(c64(v[0], v[1]), c64(v[2], v[3]), alpha, c64(v[4], v[5]), c64(v[6], v[7]), beta)
        }
    }

    proptest! {
        #[test]
        fn pair_matches_printed_grid(p in arb_params()) {
            let (d1, d2) = build_pair(&p).unwrap();
            let (g1, g2) = printed_pair(&p).unwrap();
            prop_assert!(d1.max_abs_diff(&g1).unwrap() < 1e-12);
            prop_assert!(d2.max_abs_diff(&g2).unwrap() < 1e-12);
            prop_assert_eq!(d2, d1.transpose());
        }

        #[test]
        fn closed_form_holds_for_complex_literals(p in arb_literal()) {
            prop_assume!(!p.is_degenerate());
            let (d1, d2) = build_pair(&p).unwrap();
            let predicted = commutator_closed_form(&p).scaled(p.normalizers().unwrap().e);
            prop_assert!(commutator(&d1, &d2).unwrap().max_abs_diff(&predicted).unwrap() < 1e-10);
        }

        #[test]
        fn projectors_are_hermitian_idempotent_trace_one(p in arb_literal()) {
            prop_assume!(!p.is_degenerate());
            let (d_i, d_ii) = build_projectors(&p).unwrap();
            for d in [d_i, d_ii] {
                prop_assert!(is_hermitian(&d, 1e-12));
                prop_assert!(mat_mul(&d, &d).unwrap().max_abs_diff(&d).unwrap() < 1e-12);
                prop_assert!((d.trace() - c64(1.0, 0.0)).norm() < 1e-12);
            }
        }

        #[test]
        fn derived_projector_entry_matches_direct(p in arb_literal()) {
            prop_assume!(!p.is_degenerate());
            let (d_i, d_ii) = build_projectors(&p).unwrap();
            let direct = commutator(&d_i, &d_ii).unwrap().get(0, 1);
            let r = projector_commutator_closed_form(&p).unwrap();
            prop_assert!((r.derived - direct).norm() < 1e-12);
        }
    }
}
