//! Antenna layout generation: planar grids, stent-mounted cylindrical
//! arrangements, and deployment perturbations for sensitivity studies.

use crate::error::{Error, Result};
use crate::fieldcore::max_pairwise_distance;
use crate::rng::SplitMix64;
use crate::vec3::Vec3;

/// Deterministic orthonormal frame `(u, v)` transverse to `axis` (unit):
/// `u = normalize(h - (h.a) a)` with `h = x-hat` unless `|a.x| > 0.9`, in
/// which case `h = y-hat`; `v = a x u`.
pub fn orthonormal_frame(axis: Vec3) -> (Vec3, Vec3) {
    let h = if axis.dot(Vec3::X).abs() > 0.9 { Vec3::Y } else { Vec3::X };
    let u = (h - axis * axis.dot(h)).normalized().expect("axis must be unit");
    (u, axis.cross(u))
}

/// Cylinder reference frame a stent layout was built on. Kept alongside the
/// positions so radial/tilt perturbations can recover the axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CylinderFrame {
    pub origin: Vec3,
    pub axis: Vec3,
    pub u: Vec3,
    pub v: Vec3,
}

/// Elements on an `(l, m)` grid: `l` indexes longitudinal rings, `m`
/// circumferential positions. Positions are stored row-major with `l` outer.
#[derive(Debug, Clone, PartialEq)]
pub struct IndexedArray {
    l_count: usize,
    m_count: usize,
    positions: Vec<Vec3>,
    cylinder: Option<CylinderFrame>,
}

impl IndexedArray {
    pub fn new(l_count: usize, m_count: usize, positions: Vec<Vec3>) -> Result<Self> {
        if l_count == 0 || m_count == 0 {
            return Err(Error::validation("counts", "l and m counts must be at least 1"));
        }
        if positions.len() != l_count * m_count {
            return Err(Error::validation(
                "positions",
                format!("expected {} positions, got {}", l_count * m_count, positions.len()),
            ));
        }
        for (i, p) in positions.iter().enumerate() {
            if !p.is_finite() {
                return Err(Error::validation("positions", format!("position {i} is not finite")));
            }
        }
        for i in 0..positions.len() {
            for j in i + 1..positions.len() {
                if positions[i] == positions[j] {
                    return Err(Error::validation(
                        "positions",
                        format!("positions {i} and {j} coincide"),
                    ));
                }
            }
        }
        Ok(Self { l_count, m_count, positions, cylinder: None })
    }

    fn with_cylinder(mut self, frame: CylinderFrame) -> Self {
        self.cylinder = Some(frame);
        self
    }

    pub fn l_count(&self) -> usize {
        self.l_count
    }

    pub fn m_count(&self) -> usize {
        self.m_count
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn position(&self, l: usize, m: usize) -> Vec3 {
        self.positions[l * self.m_count + m]
    }

    pub fn positions(&self) -> &[Vec3] {
        &self.positions
    }

    /// Iterate `(l, m, position)` in storage order.
    pub fn iter_indexed(&self) -> impl Iterator<Item = (usize, usize, Vec3)> + '_ {
        self.positions
            .iter()
            .enumerate()
            .map(|(i, &p)| (i / self.m_count, i % self.m_count, p))
    }

    pub fn centroid(&self) -> Vec3 {
        let sum = self.positions.iter().fold(Vec3::ZERO, |a, &p| a + p);
        sum / self.positions.len() as f64
    }

    pub fn cylinder(&self) -> Option<&CylinderFrame> {
        self.cylinder.as_ref()
    }
}

/// Cylindrical stent layout: rings of `n_circ` elements at the given
/// longitudinal positions along an axis.
#[derive(Debug, Clone, PartialEq)]
pub struct StentLayoutSpec {
    /// Cylinder radius, m.
    pub radius: f64,
    /// Longitudinal ring positions along the axis, strictly increasing, m.
    pub ring_z: Vec<f64>,
    /// Elements per ring.
    pub n_circ: usize,
    /// Extra rotation of ring `l` by `l * angular_offset_per_ring`, rad.
    pub angular_offset_per_ring: f64,
    pub axis_origin: Vec3,
    /// Need not be unit; normalized during layout.
    pub axis_direction: Vec3,
}

impl StentLayoutSpec {
    fn validate(&self) -> Result<Vec3> {
        if !(self.radius > 0.0 && self.radius.is_finite()) {
            return Err(Error::validation("radius", "must be positive"));
        }
        if self.ring_z.is_empty() {
            return Err(Error::validation("ring_z", "at least one ring required"));
        }
        if !self.ring_z.iter().all(|z| z.is_finite()) {
            return Err(Error::validation("ring_z", "ring positions must be finite"));
        }
        if self.ring_z.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::validation("ring_z", "ring positions must be strictly increasing"));
        }
        if self.n_circ < 1 {
            return Err(Error::validation("n_circ", "must be at least 1"));
        }
        if !self.angular_offset_per_ring.is_finite() {
            return Err(Error::validation("angular_offset_per_ring", "must be finite"));
        }
        if !self.axis_origin.is_finite() {
            return Err(Error::validation("axis_origin", "must be finite"));
        }
        self.axis_direction
            .normalized()
            .filter(|_| self.axis_direction.is_finite())
            .ok_or_else(|| Error::validation("axis_direction", "must be a non-zero finite vector"))
    }
}

/// Build the stent layout: element `(l, m)` sits at
/// `origin + ring_z[l] a + radius (cos th u + sin th v)` with
/// `th = 2 pi m / n_circ + l * angular_offset_per_ring`.
pub fn stent_layout(spec: &StentLayoutSpec) -> Result<IndexedArray> {
    let axis = spec.validate()?;
    let (u, v) = orthonormal_frame(axis);
    let mut positions = Vec::with_capacity(spec.ring_z.len() * spec.n_circ);
    for (l, &z) in spec.ring_z.iter().enumerate() {
        let ring_center = spec.axis_origin + axis * z;
        for m in 0..spec.n_circ {
            let theta = std::f64::consts::TAU * m as f64 / spec.n_circ as f64
                + l as f64 * spec.angular_offset_per_ring;
            positions.push(ring_center + (u * theta.cos() + v * theta.sin()) * spec.radius);
        }
    }
    let array = IndexedArray::new(spec.ring_z.len(), spec.n_circ, positions)?;
    Ok(array.with_cylinder(CylinderFrame { origin: spec.axis_origin, axis, u, v }))
}

/// Regular planar grid: element `(l, m)` at `origin + l s b1 + m s b2`.
/// The basis must be orthonormal.
pub fn planar_grid(
    rows: usize,
    cols: usize,
    spacing: f64,
    origin: Vec3,
    basis: (Vec3, Vec3),
) -> Result<IndexedArray> {
    if rows < 1 || cols < 1 {
        return Err(Error::validation("rows/cols", "must be at least 1"));
    }
    if !(spacing > 0.0 && spacing.is_finite()) {
        return Err(Error::validation("spacing", "must be positive"));
    }
    let (b1, b2) = basis;
    let tol = 1e-9;
    if (b1.norm() - 1.0).abs() > tol || (b2.norm() - 1.0).abs() > tol || b1.dot(b2).abs() > tol {
        return Err(Error::validation("basis", "in-plane basis must be orthonormal"));
    }
    let mut positions = Vec::with_capacity(rows * cols);
    for l in 0..rows {
        for m in 0..cols {
            positions.push(origin + b1 * (l as f64 * spacing) + b2 * (m as f64 * spacing));
        }
    }
    IndexedArray::new(rows, cols, positions)
}

/// Deployment perturbation: uniform radial over/under-expansion, whole-array
/// tilt, and per-element gaussian jitter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PerturbationSpec {
    /// Multiplies each element's distance from the cylinder axis.
    pub radial_scale: f64,
    /// Rotation about an axis through the centroid, perpendicular to the
    /// stent axis (the cylinder frame's `u` direction), rad.
    pub axial_tilt: f64,
    /// Std deviation of the zero-mean gaussian displacement per component, m.
    pub jitter_sigma: f64,
    pub seed: u64,
}

impl PerturbationSpec {
    /// No-op perturbation with the given seed.
    pub fn identity(seed: u64) -> Self {
        Self { radial_scale: 1.0, axial_tilt: 0.0, jitter_sigma: 0.0, seed }
    }

    fn validate(&self) -> Result<()> {
        if !(self.radial_scale > 0.0 && self.radial_scale.is_finite()) {
            return Err(Error::validation("radial_scale", "must be positive"));
        }
        if !self.axial_tilt.is_finite() {
            return Err(Error::validation("axial_tilt", "must be finite"));
        }
        if !(self.jitter_sigma >= 0.0 && self.jitter_sigma.is_finite()) {
            return Err(Error::validation("jitter_sigma", "must be non-negative"));
        }
        Ok(())
    }
}

fn rotate_about(p: Vec3, center: Vec3, axis: Vec3, angle: f64) -> Vec3 {
    // Rodrigues rotation of (p - center) about the unit axis.
    let r = p - center;
    let (s, c) = angle.sin_cos();
    center + r * c + axis.cross(r) * s + axis * (axis.dot(r) * (1.0 - c))
}

/// Apply a perturbation. Radial scaling and tilt require the array to carry
/// its cylinder frame (i.e. come from [`stent_layout`]); jitter applies to
/// any array. Each stage is skipped entirely when its parameter is the
/// identity value, so the identity spec reproduces the input bitwise.
///
/// Jitter draws three gaussians per element (row-major element order, one
/// [`SplitMix64`] Box-Muller pair plus the first half of a second pair, the
/// fourth draw discarded) so the displacement field is reproducible from the
/// seed alone.
pub fn perturb_layout(array: &IndexedArray, pert: &PerturbationSpec) -> Result<IndexedArray> {
    pert.validate()?;
    let needs_frame = pert.radial_scale != 1.0 || pert.axial_tilt != 0.0;
    let frame = match (needs_frame, array.cylinder()) {
        (true, None) => {
            return Err(Error::validation(
                "array",
                "radial_scale/axial_tilt require a stent-layout array with a cylinder frame",
            ))
        }
        (_, f) => f.copied(),
    };

    let mut positions: Vec<Vec3> = array.positions().to_vec();
    let mut out_frame = frame;

    if pert.radial_scale != 1.0 {
        let f = frame.expect("checked above");
        for p in &mut positions {
            let rel = *p - f.origin;
            let axial = f.axis * f.axis.dot(rel);
            let radial = rel - axial;
            *p = f.origin + axial + radial * pert.radial_scale;
        }
    }

    if pert.axial_tilt != 0.0 {
        let f = frame.expect("checked above");
        let centroid = positions.iter().fold(Vec3::ZERO, |a, &p| a + p) / positions.len() as f64;
        for p in &mut positions {
            *p = rotate_about(*p, centroid, f.u, pert.axial_tilt);
        }
        // The cylinder axis tilts with the array.
        out_frame = Some(CylinderFrame {
            origin: rotate_about(f.origin, centroid, f.u, pert.axial_tilt),
            axis: rotate_about(f.axis, Vec3::ZERO, f.u, pert.axial_tilt),
            u: f.u,
            v: rotate_about(f.v, Vec3::ZERO, f.u, pert.axial_tilt),
        });
    }

    if pert.jitter_sigma > 0.0 {
        let mut rng = SplitMix64::new(pert.seed);
        for p in &mut positions {
            let (gx, gy) = rng.next_gaussian_pair();
            let (gz, _) = rng.next_gaussian_pair();
            *p = *p + Vec3::new(gx, gy, gz) * pert.jitter_sigma;
        }
    }

    let mut out = IndexedArray::new(array.l_count(), array.m_count(), positions)?;
    if let Some(f) = out_frame {
        out = out.with_cylinder(f);
    }
    Ok(out)
}

/// Maximum pairwise element distance; 0 for a single element.
pub fn aperture(array: &IndexedArray) -> f64 {
    max_pairwise_distance(array.positions().iter().copied())
}
