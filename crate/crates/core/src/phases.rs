//! Phase engineering: the optimal per-element phase rule, parameterized
//! phase families over `(k1, k2)`, and interference-regime classification.
//!
//! The propagation term `e^{i (w/c) |x - y_j|}` delays each element's
//! contribution; choosing `phi_j = -(w/c) |x - y_j|` cancels the delays so
//! all contributions arrive in phase. The parameterized families add a
//! structured offset `varphi_lm(k1, k2)` on top of that compensation, which
//! turns the receiver intensity into a function of two tunable parameters.

use std::f64::consts::TAU;
use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fieldcore::COINCIDENCE_EPS;
use crate::geometry::IndexedArray;
use crate::vec3::Vec3;

/// User-supplied phase formula over `(l, m, k1, k2)`.
#[derive(Clone)]
pub struct CustomFamily(Arc<dyn Fn(i64, i64, f64, f64) -> f64 + Send + Sync>);

impl fmt::Debug for CustomFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("CustomFamily(..)")
    }
}

/// Parameterized per-element phase offset families.
///
/// * `A`: `2 pi ((m + l) k1 + l k2)`
/// * `B`: `2 pi ((m + l) k1 + (l - m) sqrt(k1^2 + (k2 + 4)^2))` — the
///   literal constant 4 is part of the family definition
/// * `C`: `2 pi (m k1 + l k2 + l sqrt(k1^2 + k2^2))`
/// * `Optimal`: zero offset; combined with propagation compensation this is
///   exactly the in-phase rule
/// * `Custom`: arbitrary formula
#[derive(Debug, Clone)]
pub enum PhaseFamily {
    A,
    B,
    C,
    Optimal,
    Custom(CustomFamily),
}

impl PhaseFamily {
    pub fn custom(f: impl Fn(i64, i64, f64, f64) -> f64 + Send + Sync + 'static) -> Self {
        PhaseFamily::Custom(CustomFamily(Arc::new(f)))
    }
}

/// Evaluate the family offset `varphi_lm(k1, k2)` in radians.
pub fn family_phase(family: &PhaseFamily, l: i64, m: i64, k1: f64, k2: f64) -> f64 {
    let (lf, mf) = (l as f64, m as f64);
    match family {
        PhaseFamily::A => TAU * ((mf + lf) * k1 + lf * k2),
        PhaseFamily::B => {
            TAU * ((mf + lf) * k1 + (lf - mf) * (k1 * k1 + (k2 + 4.0) * (k2 + 4.0)).sqrt())
        }
        PhaseFamily::C => TAU * (mf * k1 + lf * k2 + lf * (k1 * k1 + k2 * k2).sqrt()),
        PhaseFamily::Optimal => 0.0,
        PhaseFamily::Custom(CustomFamily(f)) => f(l, m, k1, k2),
    }
}

/// Phases that maximize the array factor at `x`:
/// `phi_j = -(omega / c) |x - y_j|`.
pub fn optimal_phases(positions: &[Vec3], x: Vec3, omega: f64, c: f64) -> Result<Vec<f64>> {
    let k = omega / c;
    positions
        .iter()
        .enumerate()
        .map(|(j, &p)| {
            let r = x.distance(p);
            if r < COINCIDENCE_EPS {
                return Err(Error::DegenerateGeometry(format!(
                    "receiver coincides with element {j}"
                )));
            }
            Ok(-(k * r))
        })
        .collect()
}

/// Full element phases for an indexed array under a family at `(k1, k2)`:
/// element `(l, m)` receives `varphi_lm(k1, k2) - (omega/c) |x - y_lm|`.
/// With `compensation = false` the propagation term is omitted, leaving the
/// raw family offsets.
#[allow(clippy::too_many_arguments)]
pub fn assign_family_phases(
    array: &IndexedArray,
    family: &PhaseFamily,
    k1: f64,
    k2: f64,
    x: Vec3,
    omega: f64,
    c: f64,
    compensation: bool,
) -> Result<Vec<f64>> {
    let k = omega / c;
    array
        .iter_indexed()
        .map(|(l, m, p)| {
            let offset = family_phase(family, l as i64, m as i64, k1, k2);
            if !offset.is_finite() {
                return Err(Error::validation(
                    "family",
                    format!("phase formula not finite at l={l}, m={m}, k1={k1}, k2={k2}"),
                ));
            }
            if compensation {
                let r = x.distance(p);
                if r < COINCIDENCE_EPS {
                    return Err(Error::DegenerateGeometry(format!(
                        "receiver coincides with element ({l}, {m})"
                    )));
                }
                Ok(offset - k * r)
            } else {
                Ok(offset)
            }
        })
        .collect()
}

/// Predicted array factor on a partial-interference line:
/// `L^2 |sum_m e^{i m f_m}|^2`, with `f_m` the supplied per-index values.
pub fn predicted_partial_af(l_count: usize, f_m_values: &[f64]) -> f64 {
    let sum: Complex64 = f_m_values
        .iter()
        .enumerate()
        .map(|(m, &f)| {
            let arg = m as f64 * f;
            Complex64::new(arg.cos(), arg.sin())
        })
        .sum();
    (l_count * l_count) as f64 * sum.norm_sqr()
}

/// Interference regimes of an array factor value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InterferenceRegime {
    /// All phasors aligned; AF at the coherent bound N^2.
    Full,
    /// Aligned subsets; between the incoherent level and the bound.
    Partial,
    /// At or below the incoherent (random-phase) level N.
    Destructive,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InterferenceReport {
    pub regime: InterferenceRegime,
    pub array_factor_value: f64,
    pub n_total: usize,
    /// `n_total^2`.
    pub coherent_bound: f64,
    /// `n_total`, the expected AF of uniformly random phases.
    pub incoherent_level: f64,
}

/// Classify an array factor value: FULL at or above `0.99 n^2` (the 1%
/// headroom tolerates grid discretization near peaks), DESTRUCTIVE at or
/// below the incoherent level `n`, PARTIAL between.
pub fn classify_interference(af: f64, n_total: usize) -> Result<InterferenceReport> {
    let n = n_total as f64;
    let bound = n * n;
    if !(af >= 0.0 && af <= bound * (1.0 + 1e-9)) {
        return Err(Error::Inconsistent(format!(
            "array factor {af} outside [0, {bound}] for {n_total} elements"
        )));
    }
    let regime = if af >= 0.99 * bound {
        InterferenceRegime::Full
    } else if af <= n {
        InterferenceRegime::Destructive
    } else {
        InterferenceRegime::Partial
    };
    Ok(InterferenceReport {
        regime,
        array_factor_value: af,
        n_total,
        coherent_bound: bound,
        incoherent_level: n,
    })
}
