//! Far-field electric field and time-averaged intensity of an antenna array.
//!
//! Each element is a driven oscillating charge radiating like a Hertzian
//! dipole. All elements share one drive direction `f0` and angular frequency
//! `omega`, differing only by a per-element phase offset. In the far field
//! the complex field at an observation point `x` is
//!
//! ```text
//! E(x, t) = k_el e^{-i w t} / |x - y_s| * (I - n_s (x) n_s) f0
//!           * sum_j e^{i phi_j} e^{i (w/c) |x - y_j|}
//! ```
//!
//! with `y_s` the mean element position and `n_s` the unit vector from `y_s`
//! to `x`. The measured intensity is the time-averaged Poynting magnitude,
//! which reduces to `c eps0 |E|^2 / 2`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::vec3::{ComplexVec3, Vec3};

/// Exact SI speed of light in vacuum, m/s.
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;

/// Vacuum permittivity, F/m (CODATA 2018).
pub const VACUUM_PERMITTIVITY: f64 = 8.854_187_812_8e-12;

/// Observation points closer than this to a source are degenerate.
pub const COINCIDENCE_EPS: f64 = 1e-12;

/// Distance margin below which the far-field approximation is flagged:
/// results are computed anyway but carry `far_field_warning = true` when
/// `|x - y_s| < FAR_FIELD_MARGIN * aperture`.
pub const FAR_FIELD_MARGIN: f64 = 10.0;

/// Propagation medium constants. Must satisfy `c^2 mu0 eps0 = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MediumConstants {
    pub c: f64,
    pub eps0: f64,
    pub mu0: f64,
}

impl MediumConstants {
    /// Free-space constants; `mu0` derived from `c^2 mu0 eps0 = 1`.
    pub fn vacuum() -> Self {
        let c = SPEED_OF_LIGHT;
        let eps0 = VACUUM_PERMITTIVITY;
        Self { c, eps0, mu0: 1.0 / (c * c * eps0) }
    }

    pub fn new(c: f64, eps0: f64, mu0: f64) -> Result<Self> {
        if !(c > 0.0 && eps0 > 0.0 && mu0 > 0.0)
            || !(c.is_finite() && eps0.is_finite() && mu0.is_finite())
        {
            return Err(Error::validation("medium", "constants must be positive and finite"));
        }
        let product = c * c * mu0 * eps0;
        if (product - 1.0).abs() > 1e-12 {
            return Err(Error::validation(
                "medium",
                format!("c^2 * mu0 * eps0 = {product:.17} violates c^2 = 1/(mu0 eps0)"),
            ));
        }
        Ok(Self { c, eps0, mu0 })
    }
}

impl Default for MediumConstants {
    fn default() -> Self {
        Self::vacuum()
    }
}

/// One radiating element: position in meters and drive phase in radians.
///
/// Phases are stored unreduced (not wrapped to `[0, 2pi)`); wrapping is
/// irrelevant to `e^{i phi}` and would lose information for reporting.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AntennaElement {
    pub position: Vec3,
    pub phase: f64,
}

impl AntennaElement {
    pub fn new(position: Vec3, phase: f64) -> Self {
        Self { position, phase }
    }
}

/// Immutable description of a full array: elements, common drive direction,
/// angular frequency, amplitude constant and medium.
///
/// `k_el` absorbs the physical prefactor `-e / (4 pi eps0 c^2 m)`; it
/// defaults to 1 in the normalized-units constructor, and callers working in
/// SI set it themselves.
#[derive(Debug, Clone, PartialEq)]
pub struct ArrayConfig {
    elements: Vec<AntennaElement>,
    f0: Vec3,
    omega: f64,
    k_el: f64,
    medium: MediumConstants,
    aperture: f64,
}

impl ArrayConfig {
    pub fn new(
        elements: Vec<AntennaElement>,
        f0: Vec3,
        omega: f64,
        k_el: f64,
        medium: MediumConstants,
    ) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::validation("elements", "array must have at least one element"));
        }
        for (j, e) in elements.iter().enumerate() {
            if !e.position.is_finite() || !e.phase.is_finite() {
                return Err(Error::validation(
                    "elements",
                    format!("element {j} has non-finite position or phase"),
                ));
            }
        }
        if !(f0.is_finite() && f0.norm() > 0.0) {
            return Err(Error::validation("f0", "drive direction must be finite and non-zero"));
        }
        if !(omega > 0.0 && omega.is_finite()) {
            return Err(Error::validation("omega", "angular frequency must be positive"));
        }
        if !k_el.is_finite() {
            return Err(Error::validation("k_el", "amplitude constant must be finite"));
        }
        let aperture = max_pairwise_distance(elements.iter().map(|e| e.position));
        Ok(Self { elements, f0, omega, k_el, medium, aperture })
    }

    /// Normalized-units config: `k_el = 1`, vacuum medium.
    pub fn normalized(elements: Vec<AntennaElement>, f0: Vec3, omega: f64) -> Result<Self> {
        Self::new(elements, f0, omega, 1.0, MediumConstants::vacuum())
    }

    /// Same geometry and drive with replaced per-element phases.
    pub fn with_phases(&self, phases: &[f64]) -> Result<Self> {
        if phases.len() != self.elements.len() {
            return Err(Error::validation(
                "phases",
                format!("expected {} phases, got {}", self.elements.len(), phases.len()),
            ));
        }
        let elements = self
            .elements
            .iter()
            .zip(phases)
            .map(|(e, &phase)| AntennaElement::new(e.position, phase))
            .collect();
        Self::new(elements, self.f0, self.omega, self.k_el, self.medium)
    }

    pub fn elements(&self) -> &[AntennaElement] {
        &self.elements
    }

    pub fn n_elements(&self) -> usize {
        self.elements.len()
    }

    pub fn f0(&self) -> Vec3 {
        self.f0
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn k_el(&self) -> f64 {
        self.k_el
    }

    pub fn medium(&self) -> MediumConstants {
        self.medium
    }

    /// Maximum pairwise element distance.
    pub fn aperture(&self) -> f64 {
        self.aperture
    }

    /// Wavenumber `omega / c`.
    pub fn wavenumber(&self) -> f64 {
        self.omega / self.medium.c
    }
}

/// Complex field sample; `far_field_warning` is set when the observation
/// point violates the 10x-aperture far-field margin.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldSample {
    pub e: ComplexVec3,
    pub far_field_warning: bool,
}

/// Scalar intensity sample, W/m^2 when SI constants are used.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntensitySample {
    pub value: f64,
    pub far_field_warning: bool,
}

pub(crate) fn max_pairwise_distance(positions: impl Iterator<Item = Vec3> + Clone) -> f64 {
    let pts: Vec<Vec3> = positions.collect();
    let mut max = 0.0_f64;
    for (i, a) in pts.iter().enumerate() {
        for b in &pts[i + 1..] {
            max = max.max(a.distance(*b));
        }
    }
    max
}

/// Arithmetic mean of the element positions (`y_s`).
pub fn mean_position(config: &ArrayConfig) -> Vec3 {
    let sum = config
        .elements
        .iter()
        .fold(Vec3::ZERO, |acc, e| acc + e.position);
    sum / config.elements.len() as f64
}

/// Projection of `f0` onto the plane transverse to the unit direction `n_s`:
/// `(I - n_s (x) n_s) f0 = f0 - (n_s . f0) n_s`.
pub fn transverse_project(f0: Vec3, n_s: Vec3) -> Result<Vec3> {
    let norm = n_s.norm();
    if (norm - 1.0).abs() > 1e-12 {
        return Err(Error::NonUnitDirection { norm });
    }
    Ok(f0 - n_s * n_s.dot(f0))
}

/// Coherent phasor sum `sum_j e^{i (phi_j + k |x - y_j|)}`.
fn phasor_sum(config: &ArrayConfig, x: Vec3) -> Result<Complex64> {
    let k = config.wavenumber();
    let mut sum = Complex64::new(0.0, 0.0);
    for (j, e) in config.elements.iter().enumerate() {
        let r = x.distance(e.position);
        if r < COINCIDENCE_EPS {
            return Err(Error::DegenerateGeometry(format!(
                "observation point coincides with element {j}"
            )));
        }
        let arg = e.phase + k * r;
        sum += Complex64::new(arg.cos(), arg.sin());
    }
    Ok(sum)
}

/// Array factor `|sum_j e^{i(phi_j + (w/c)|x - y_j|)}|^2`, in `[0, N^2]`.
pub fn array_factor(config: &ArrayConfig, x: Vec3) -> Result<f64> {
    Ok(phasor_sum(config, x)?.norm_sqr())
}

/// Complex far-field electric field at `(x, t)`.
pub fn far_field_e(config: &ArrayConfig, x: Vec3, t: f64) -> Result<FieldSample> {
    let y_s = mean_position(config);
    let r_s = x.distance(y_s);
    if r_s < COINCIDENCE_EPS {
        return Err(Error::DegenerateGeometry(
            "observation point coincides with the mean antenna position".into(),
        ));
    }
    let n_s = (x - y_s) / r_s;
    let projected = transverse_project(config.f0, n_s)?;
    let sum = phasor_sum(config, x)?;
    let wt = config.omega * t;
    let time_factor = Complex64::new(wt.cos(), -wt.sin()); // e^{-i w t}
    let scale = time_factor * sum * (config.k_el / r_s);
    Ok(FieldSample {
        e: ComplexVec3::from_real(projected) * scale,
        far_field_warning: r_s < FAR_FIELD_MARGIN * config.aperture,
    })
}

/// Time-averaged intensity at `x`, closed form:
/// `c eps0 k_el^2 / (2 |x - y_s|^2) * |(I - n_s n_s) f0|^2 * AF(x)`.
pub fn intensity(config: &ArrayConfig, x: Vec3) -> Result<IntensitySample> {
    let y_s = mean_position(config);
    let r_s = x.distance(y_s);
    if r_s < COINCIDENCE_EPS {
        return Err(Error::DegenerateGeometry(
            "observation point coincides with the mean antenna position".into(),
        ));
    }
    let n_s = (x - y_s) / r_s;
    let projected = transverse_project(config.f0, n_s)?;
    let af = array_factor(config, x)?;
    let m = config.medium;
    let prefactor = m.c * m.eps0 * config.k_el * config.k_el / (2.0 * r_s * r_s);
    Ok(IntensitySample {
        value: prefactor * projected.norm_sq() * af,
        far_field_warning: r_s < FAR_FIELD_MARGIN * config.aperture,
    })
}
