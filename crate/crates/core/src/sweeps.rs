//! Parameter sweeps over `(k1, k2)`, peak detection with sub-cell
//! refinement, directional gain patterns, and deployment verification.

use crate::error::{Error, Result};
use crate::fieldcore::{
    array_factor, intensity, mean_position, AntennaElement, ArrayConfig, MediumConstants,
    FAR_FIELD_MARGIN,
};
use crate::geometry::{aperture, orthonormal_frame, IndexedArray};
use crate::phases::{assign_family_phases, classify_interference, InterferenceReport, PhaseFamily};
use crate::vec3::Vec3;

/// Inclusive sampling of `[min, max]` with `steps` points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxisSpec {
    pub min: f64,
    pub max: f64,
    pub steps: usize,
}

impl AxisSpec {
    pub fn new(min: f64, max: f64, steps: usize) -> Self {
        Self { min, max, steps }
    }

    fn validate(&self, name: &str) -> Result<()> {
        if !(self.min.is_finite() && self.max.is_finite() && self.min < self.max) {
            return Err(Error::validation(name, "range must be finite with min < max"));
        }
        if self.steps < 2 {
            return Err(Error::validation(name, "steps must be at least 2"));
        }
        Ok(())
    }

    /// Sample values `min + (max - min) * i / (steps - 1)`. This form hits
    /// integer lattice points exactly when the bounds are integers.
    pub fn values(&self) -> Vec<f64> {
        let span = self.max - self.min;
        let denom = (self.steps - 1) as f64;
        (0..self.steps).map(|i| self.min + span * (i as f64 / denom)).collect()
    }

    pub fn spacing(&self) -> f64 {
        (self.max - self.min) / (self.steps - 1) as f64
    }
}

/// What the sweep records per grid cell.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SweepUnits {
    /// Bare array factor: geometry and phase effects only.
    ArrayFactor,
    /// Full intensity, W/m^2; requires the drive direction and amplitude
    /// constant that the array factor deliberately omits.
    Si { f0: Vec3, k_el: f64 },
}

/// Full description of one `(k1, k2)` sweep.
#[derive(Debug, Clone)]
pub struct SweepSpec {
    pub k1: AxisSpec,
    pub k2: AxisSpec,
    pub family: PhaseFamily,
    pub array: IndexedArray,
    pub receiver: Vec3,
    pub omega: f64,
    /// Include the propagation-compensation term `-(w/c)|x - y_j|` in every
    /// element phase (on by default in the CLI).
    pub compensation: bool,
    pub medium: MediumConstants,
    pub units: SweepUnits,
}

impl SweepSpec {
    fn validate(&self) -> Result<()> {
        self.k1.validate("k1_range")?;
        self.k2.validate("k2_range")?;
        if !(self.omega > 0.0 && self.omega.is_finite()) {
            return Err(Error::validation("omega", "must be positive"));
        }
        if !self.receiver.is_finite() {
            return Err(Error::validation("receiver", "must be finite"));
        }
        Ok(())
    }

    fn base_config(&self) -> Result<ArrayConfig> {
        let (f0, k_el) = match self.units {
            SweepUnits::ArrayFactor => (Vec3::Z, 1.0),
            SweepUnits::Si { f0, k_el } => (f0, k_el),
        };
        let elements = self
            .array
            .positions()
            .iter()
            .map(|&p| AntennaElement::new(p, 0.0))
            .collect();
        ArrayConfig::new(elements, f0, self.omega, k_el, self.medium)
    }
}

/// Rectangular grid of sweep results, row-major with `k1` outer.
#[derive(Debug, Clone)]
pub struct IntensityMap {
    k1_axis: Vec<f64>,
    k2_axis: Vec<f64>,
    values: Vec<f64>,
    spec: SweepSpec,
    far_field_warning: bool,
}

impl IntensityMap {
    /// Assemble a map from an existing spec and row-major values. Used by
    /// [`sweep_k1k2`] and by tests that need synthetic maps.
    pub fn from_spec_values(spec: SweepSpec, values: Vec<f64>) -> Result<Self> {
        let k1_axis = spec.k1.values();
        let k2_axis = spec.k2.values();
        if values.len() != k1_axis.len() * k2_axis.len() {
            return Err(Error::validation(
                "values",
                format!(
                    "expected {} values, got {}",
                    k1_axis.len() * k2_axis.len(),
                    values.len()
                ),
            ));
        }
        if values.iter().any(|v| !v.is_finite() || *v < 0.0) {
            return Err(Error::validation("values", "must be finite and non-negative"));
        }
        let receiver_dist = spec.receiver.distance(spec.array.centroid());
        let far_field_warning = receiver_dist < FAR_FIELD_MARGIN * aperture(&spec.array);
        Ok(Self { k1_axis, k2_axis, values, spec, far_field_warning })
    }

    pub fn k1_axis(&self) -> &[f64] {
        &self.k1_axis
    }

    pub fn k2_axis(&self) -> &[f64] {
        &self.k2_axis
    }

    /// Row-major values, `k1` outer, `k2` inner.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn value(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.k2_axis.len() + j]
    }

    pub fn spec(&self) -> &SweepSpec {
        &self.spec
    }

    pub fn far_field_warning(&self) -> bool {
        self.far_field_warning
    }

    /// Conversion factor from map units to bare array factor: 1 for
    /// array-factor maps, the geometric intensity prefactor for SI maps.
    pub fn af_scale(&self) -> f64 {
        match self.spec.units {
            SweepUnits::ArrayFactor => 1.0,
            SweepUnits::Si { f0, k_el } => {
                let centroid = self.spec.array.centroid();
                let r = self.spec.receiver.distance(centroid);
                if r <= 0.0 {
                    return 0.0;
                }
                let n_s = (self.spec.receiver - centroid) / r;
                let projected = f0 - n_s * n_s.dot(f0);
                let m = self.spec.medium;
                m.c * m.eps0 * k_el * k_el * projected.norm_sq() / (2.0 * r * r)
            }
        }
    }
}

/// Evaluate the array factor (or SI intensity) at the receiver for every
/// grid point, with element phases assigned by the spec's family.
///
/// Cells are independent pure evaluations in deterministic row-major order:
/// identical specs produce bitwise-identical maps.
pub fn sweep_k1k2(spec: &SweepSpec) -> Result<IntensityMap> {
    spec.validate()?;
    let base = spec.base_config()?;
    let c = spec.medium.c;
    let k1s = spec.k1.values();
    let k2s = spec.k2.values();
    let mut values = Vec::with_capacity(k1s.len() * k2s.len());
    for &k1 in &k1s {
        for &k2 in &k2s {
            let phases = assign_family_phases(
                &spec.array,
                &spec.family,
                k1,
                k2,
                spec.receiver,
                spec.omega,
                c,
                spec.compensation,
            )?;
            let cfg = base.with_phases(&phases)?;
            let v = match spec.units {
                SweepUnits::ArrayFactor => array_factor(&cfg, spec.receiver)?,
                SweepUnits::Si { .. } => intensity(&cfg, spec.receiver)?.value,
            };
            values.push(v);
        }
    }
    IntensityMap::from_spec_values(spec.clone(), values)
}

/// A detected sweep peak, refined within its grid cell.
#[derive(Debug, Clone)]
pub struct Peak {
    pub k1: f64,
    pub k2: f64,
    pub value: f64,
    pub regime: InterferenceReport,
}

/// Vertex offset (in cell units, clamped to half a cell) and value gain of
/// the parabola through three samples with a strict center maximum.
fn parabolic_refine(vm: f64, v0: f64, vp: f64) -> (f64, f64) {
    let denom = vm - 2.0 * v0 + vp;
    if denom >= 0.0 {
        return (0.0, 0.0);
    }
    let delta = (0.5 * (vm - vp) / denom).clamp(-0.5, 0.5);
    let gain = -0.125 * (vm - vp) * (vm - vp) / denom;
    (delta, gain)
}

/// Find strict local maxima over 8-neighborhoods at or above
/// `min_prominence_fraction` of the global maximum, refine each within one
/// grid cell by a per-axis quadratic fit, and classify the interference
/// regime of the refined value. Sorted descending by value.
pub fn find_peaks(map: &IntensityMap, min_prominence_fraction: f64) -> Result<Vec<Peak>> {
    if !(min_prominence_fraction > 0.0 && min_prominence_fraction <= 1.0) {
        return Err(Error::validation(
            "min_prominence_fraction",
            "must be in (0, 1]",
        ));
    }
    let n1 = map.k1_axis.len();
    let n2 = map.k2_axis.len();
    let global_max = map.values.iter().cloned().fold(0.0_f64, f64::max);
    let threshold = min_prominence_fraction * global_max;
    let af_scale = map.af_scale();
    let n_total = map.spec.array.len();
    let bound = (n_total * n_total) as f64;

    let mut peaks = Vec::new();
    for i in 0..n1 {
        for j in 0..n2 {
            let v = map.value(i, j);
            if v < threshold {
                continue;
            }
            let mut strict_max = true;
            'scan: for di in -1i64..=1 {
                for dj in -1i64..=1 {
                    if di == 0 && dj == 0 {
                        continue;
                    }
                    let (ni, nj) = (i as i64 + di, j as i64 + dj);
                    if ni < 0 || nj < 0 || ni >= n1 as i64 || nj >= n2 as i64 {
                        continue;
                    }
                    if map.value(ni as usize, nj as usize) >= v {
                        strict_max = false;
                        break 'scan;
                    }
                }
            }
            if !strict_max {
                continue;
            }

            let (d1, g1) = if i > 0 && i + 1 < n1 {
                parabolic_refine(map.value(i - 1, j), v, map.value(i + 1, j))
            } else {
                (0.0, 0.0)
            };
            let (d2, g2) = if j > 0 && j + 1 < n2 {
                parabolic_refine(map.value(i, j - 1), v, map.value(i, j + 1))
            } else {
                (0.0, 0.0)
            };
            let value = v + g1 + g2;
            let af_equiv = if af_scale > 0.0 { value / af_scale } else { 0.0 };
            let regime = classify_interference(af_equiv.min(bound), n_total)?;
            peaks.push(Peak {
                k1: map.k1_axis[i] + d1 * map.spec.k1.spacing(),
                k2: map.k2_axis[j] + d2 * map.spec.k2.spacing(),
                value,
                regime,
            });
        }
    }
    peaks.sort_by(|a, b| b.value.partial_cmp(&a.value).expect("finite values"));
    Ok(peaks)
}

/// Sampling plane for a gain pattern.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PlaneSpec {
    Xy,
    Xz,
    Yz,
    /// Arbitrary plane through the array centroid with the given normal.
    Normal(Vec3),
}

impl PlaneSpec {
    /// In-plane orthonormal basis; samples go `b1 cos(angle) + b2 sin(angle)`.
    fn basis(&self) -> Result<(Vec3, Vec3)> {
        match self {
            PlaneSpec::Xy => Ok((Vec3::X, Vec3::Y)),
            PlaneSpec::Xz => Ok((Vec3::X, Vec3::Z)),
            PlaneSpec::Yz => Ok((Vec3::Y, Vec3::Z)),
            PlaneSpec::Normal(n) => {
                let unit = n
                    .normalized()
                    .ok_or_else(|| Error::validation("plane", "normal must be non-zero"))?;
                Ok(orthonormal_frame(unit))
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GainSample {
    pub angle: f64,
    pub intensity: f64,
    /// `10 log10(intensity / max intensity)`; the maximum entry is exactly 0.
    pub gain_db: f64,
}

#[derive(Debug, Clone)]
pub struct GainPattern {
    pub plane: PlaneSpec,
    pub samples: Vec<GainSample>,
    pub radius: f64,
    pub far_field_warning: bool,
}

/// Sample the intensity at `n_samples` equally spaced angles on a circle of
/// the given radius around the array centroid, normalized to the peak.
pub fn gain_pattern(
    config: &ArrayConfig,
    plane: PlaneSpec,
    radius: f64,
    n_samples: usize,
) -> Result<GainPattern> {
    if n_samples < 8 {
        return Err(Error::validation("n_samples", "must be at least 8"));
    }
    if !(radius > 0.0 && radius.is_finite()) {
        return Err(Error::validation("radius", "must be positive"));
    }
    let (b1, b2) = plane.basis()?;
    let center = mean_position(config);
    let mut intensities = Vec::with_capacity(n_samples);
    for i in 0..n_samples {
        let angle = std::f64::consts::TAU * i as f64 / n_samples as f64;
        let x = center + (b1 * angle.cos() + b2 * angle.sin()) * radius;
        intensities.push((angle, intensity(config, x)?.value));
    }
    let max = intensities.iter().map(|&(_, v)| v).fold(0.0_f64, f64::max);
    if max <= 0.0 {
        return Err(Error::Inconsistent(
            "pattern is identically zero; gain is undefined".into(),
        ));
    }
    let samples = intensities
        .into_iter()
        .map(|(angle, v)| GainSample { angle, intensity: v, gain_db: 10.0 * (v / max).log10() })
        .collect();
    Ok(GainPattern {
        plane,
        samples,
        radius,
        far_field_warning: radius < FAR_FIELD_MARGIN * config.aperture(),
    })
}

/// Outcome of a deployment check.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerificationRecord {
    pub passed: bool,
    /// Array factor of the actual geometry under the nominal phases,
    /// relative to the nominal coherent peak `N^2`.
    pub af_ratio: f64,
}

/// Evaluate the actual geometry with the phases engineered for the nominal
/// one. A correctly deployed array reproduces `af_ratio = 1`; deviations
/// break the co-phasing and lower the ratio.
///
/// If the actual array has fewer elements than the nominal config (elements
/// lost), nominal phases are truncated to match; more elements than phases
/// is an error.
pub fn verify_deployment(
    nominal: &ArrayConfig,
    actual: &IndexedArray,
    receiver: Vec3,
    pass_fraction: f64,
) -> Result<VerificationRecord> {
    if !(pass_fraction > 0.0 && pass_fraction <= 1.0) {
        return Err(Error::validation("pass_fraction", "must be in (0, 1]"));
    }
    let n_nominal = nominal.n_elements();
    if actual.len() > n_nominal {
        return Err(Error::validation(
            "actual_array",
            format!("{} elements but only {} nominal phases", actual.len(), n_nominal),
        ));
    }
    let elements: Vec<AntennaElement> = actual
        .positions()
        .iter()
        .zip(nominal.elements())
        .map(|(&p, e)| AntennaElement::new(p, e.phase))
        .collect();
    let cfg = ArrayConfig::new(
        elements,
        nominal.f0(),
        nominal.omega(),
        nominal.k_el(),
        nominal.medium(),
    )?;
    let af = array_factor(&cfg, receiver)?;
    let af_ratio = af / (n_nominal * n_nominal) as f64;
    Ok(VerificationRecord { passed: af_ratio >= pass_fraction, af_ratio })
}
