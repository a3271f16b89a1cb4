//! Jones vectors for fully polarized light.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::{Error, Result};

/// A normalized polarization state `(E_x, E_y)` with `|E_x|² + |E_y|² = 1`.
///
/// The global phase is kept as given.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JonesVector {
    ex: Complex64,
    ey: Complex64,
}

impl JonesVector {
    /// Normalizes a raw complex amplitude pair.
    pub fn new(ex: Complex64, ey: Complex64) -> Result<Self> {
        let finite = |z: Complex64| z.re.is_finite() && z.im.is_finite();
        if !finite(ex) || !finite(ey) {
            return Err(Error::NonFinite);
        }
        // hypot keeps very small and very large inputs from under/overflowing
        let norm = ex.norm().hypot(ey.norm());
        if norm == 0.0 {
            return Err(Error::ZeroVector);
        }
        Ok(JonesVector {
            ex: ex / norm,
            ey: ey / norm,
        })
    }

    /// Builds `a x̂ + b e^{iδ} ŷ`, normalized.
    pub fn from_amplitude_phase(a: f64, b: f64, delta: f64) -> Result<Self> {
        Self::new(Complex64::new(a, 0.0), Complex64::from_polar(b, delta))
    }

    pub fn standard(state: StandardState) -> Self {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let (ex, ey) = match state {
            StandardState::LinearX => (Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)),
            StandardState::LinearY => (Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)),
            StandardState::CircularRight => (Complex64::new(h, 0.0), Complex64::new(0.0, -h)),
            StandardState::CircularLeft => (Complex64::new(h, 0.0), Complex64::new(0.0, h)),
        };
        JonesVector { ex, ey }
    }

    pub fn ex(&self) -> Complex64 {
        self.ex
    }

    pub fn ey(&self) -> Complex64 {
        self.ey
    }

    pub fn components(&self) -> [Complex64; 2] {
        [self.ex, self.ey]
    }

    /// `J·J* = |E_x|² + |E_y|²`.
    pub fn inner_norm(&self) -> f64 {
        (self.ex * self.ex.conj() + self.ey * self.ey.conj()).re
    }

    /// Multiplies both components by `e^{iφ}`.
    pub fn with_global_phase(&self, phi: f64) -> Self {
        let u = Complex64::from_polar(1.0, phi);
        JonesVector {
            ex: u * self.ex,
            ey: u * self.ey,
        }
    }

    /// True when the two states differ only by a global phase.
    pub fn eq_up_to_phase(&self, other: &JonesVector, tol: f64) -> bool {
        // |⟨u, v⟩| = 1 for unit vectors iff they are parallel
        let overlap = self.ex.conj() * other.ex + self.ey.conj() * other.ey;
        (1.0 - overlap.norm()).abs() <= tol
    }

    /// Physical field `(Re E_x e^{iθ}, Re E_y e^{iθ})` at propagation phase `θ = kz − wt`.
    pub fn field_at_phase(&self, theta: f64) -> (f64, f64) {
        let carrier = Complex64::from_polar(1.0, theta);
        ((self.ex * carrier).re, (self.ey * carrier).re)
    }
}

impl fmt::Display for JonesVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use crate::algebra::format_complex;
        write!(
            f,
            "({}, {})",
            format_complex(self.ex, 6),
            format_complex(self.ey, 6)
        )
    }
}

/// `make_jones`: normalize a raw complex pair.
pub fn make_jones(ex: Complex64, ey: Complex64) -> Result<JonesVector> {
    JonesVector::new(ex, ey)
}

pub fn from_amplitude_phase(a: f64, b: f64, delta: f64) -> Result<JonesVector> {
    JonesVector::from_amplitude_phase(a, b, delta)
}

pub fn standard_state(state: StandardState) -> JonesVector {
    JonesVector::standard(state)
}

pub fn inner_norm(j: &JonesVector) -> f64 {
    j.inner_norm()
}

/// The four textbook polarization states.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StandardState {
    /// J1, linear along +x.
    LinearX,
    /// J2, linear along +y.
    LinearY,
    /// J3, `(1, −i)/√2`.
    CircularRight,
    /// J4, `(1, i)/√2`.
    CircularLeft,
}

impl StandardState {
    pub const ALL: [StandardState; 4] = [
        StandardState::LinearX,
        StandardState::LinearY,
        StandardState::CircularRight,
        StandardState::CircularLeft,
    ];

    pub fn label(&self) -> &'static str {
        match self {
            StandardState::LinearX => "J1",
            StandardState::LinearY => "J2",
            StandardState::CircularRight => "J3",
            StandardState::CircularLeft => "J4",
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            StandardState::LinearX => "linear-x",
            StandardState::LinearY => "linear-y",
            StandardState::CircularRight => "circular-right",
            StandardState::CircularLeft => "circular-left",
        }
    }

    pub fn description(&self) -> &'static str {
        match self {
            StandardState::LinearX => "linear polarization along +x",
            StandardState::LinearY => "linear polarization along +y",
            StandardState::CircularRight => "right circular polarization",
            StandardState::CircularLeft => "left circular polarization",
        }
    }
}

impl FromStr for StandardState {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace(['_', ' '], "-");
        StandardState::ALL
            .into_iter()
            .find(|st| {
                key == st.name()
                    || key == st.label().to_ascii_lowercase()
                    || key == format!("{:?}", st).to_ascii_lowercase()
            })
            .ok_or(Error::UnknownName {
                kind: "polarization state",
                name: s.to_string(),
            })
    }
}

/// Plane-wave propagation constants: wave number `k` and angular frequency `w`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlaneWaveParams {
    k: f64,
    w: f64,
}

impl PlaneWaveParams {
    pub fn new(k: f64, w: f64) -> Result<Self> {
        if k > 0.0 && w > 0.0 && k.is_finite() && w.is_finite() {
            Ok(PlaneWaveParams { k, w })
        } else {
            Err(Error::InvalidPlaneWave { k, w })
        }
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    pub fn w(&self) -> f64 {
        self.w
    }

    pub fn phase(&self, z: f64, t: f64) -> f64 {
        self.k * z - self.w * t
    }
}

/// Real part of `(E_x x̂ + E_y ŷ) e^{i(kz − wt)}`.
pub fn evaluate_field(j: &JonesVector, p: &PlaneWaveParams, z: f64, t: f64) -> (f64, f64) {
    j.field_at_phase(p.phase(z, t))
}
