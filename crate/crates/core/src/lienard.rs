//! Full Liénard–Wiechert field of a moving point charge: retarded-time
//! solution, Coulomb and acceleration terms, and the low-velocity limit.
//!
//! The retarded time solves `t_r = t - |x - y(t_r)| / c`. The full field of
//! a charge `q` with trajectory `y(t)` is
//!
//! ```text
//! E(x, t) = q/(4 pi eps0) [ (n - b) / (g^2 (1 - n.b)^3 r^2)
//!                         + n x ((n - b) x db/dt) / (c (1 - n.b)^3 r) ]_{t_r}
//! ```
//!
//! with `b = v/c`, `g` the Lorentz factor, `n` the unit vector from the
//! retarded charge position to `x`, and `r` the retarded distance. The first
//! term is the Coulomb (1/r^2) field, the second the radiation (1/r) field.
//! For `|b| << 1` the radiation term reduces to
//! `-q/(4 pi eps0 c^2 r) (I - n n) d^2y/dt^2`, which is what the far-field
//! array model in [`crate::fieldcore`] superposes; this module is the
//! independent oracle for that model.
//!
//! Trajectories are supplied analytically through the [`Motion`] trait so
//! the oracle carries no interpolation error.

use crate::error::{Error, Result};
use crate::fieldcore::{MediumConstants, COINCIDENCE_EPS};
use crate::vec3::Vec3;

/// Analytic trajectory: position, velocity and acceleration as closed-form
/// functions of time, plus a global speed bound used for the superluminal
/// check and the low-velocity warning.
pub trait Motion {
    fn position(&self, t: f64) -> Vec3;
    fn velocity(&self, t: f64) -> Vec3;
    fn acceleration(&self, t: f64) -> Vec3;
    /// Supremum of `|velocity(t)|` over all t, m/s.
    fn max_speed(&self) -> f64;
}

/// Charge at rest.
#[derive(Debug, Clone, Copy)]
pub struct StaticMotion {
    pub position: Vec3,
}

impl Motion for StaticMotion {
    fn position(&self, _t: f64) -> Vec3 {
        self.position
    }
    fn velocity(&self, _t: f64) -> Vec3 {
        Vec3::ZERO
    }
    fn acceleration(&self, _t: f64) -> Vec3 {
        Vec3::ZERO
    }
    fn max_speed(&self) -> f64 {
        0.0
    }
}

/// Constant-velocity drift: `y(t) = start + v t`.
#[derive(Debug, Clone, Copy)]
pub struct UniformMotion {
    pub start: Vec3,
    pub velocity: Vec3,
}

impl Motion for UniformMotion {
    fn position(&self, t: f64) -> Vec3 {
        self.start + self.velocity * t
    }
    fn velocity(&self, _t: f64) -> Vec3 {
        self.velocity
    }
    fn acceleration(&self, _t: f64) -> Vec3 {
        Vec3::ZERO
    }
    fn max_speed(&self) -> f64 {
        self.velocity.norm()
    }
}

/// Harmonically driven charge: `y(t) = center - A cos(w t - phase)` so that
/// the acceleration is `A w^2 cos(w t - phase)`, the real part of the
/// complex drive `(F0/m) e^{i(phase - w t)}` with `A = F0 / (m w^2)`.
#[derive(Debug, Clone, Copy)]
pub struct HarmonicMotion {
    pub center: Vec3,
    /// Displacement amplitude vector `A`, m.
    pub amplitude: Vec3,
    pub omega: f64,
    pub phase: f64,
}

impl HarmonicMotion {
    /// Motion of a charge of mass `m` under the drive `f0 e^{i(phase - w t)}`.
    pub fn from_drive(center: Vec3, f0: Vec3, phase: f64, omega: f64, mass: f64) -> Self {
        Self { center, amplitude: f0 / (mass * omega * omega), omega, phase }
    }
}

impl Motion for HarmonicMotion {
    fn position(&self, t: f64) -> Vec3 {
        self.center - self.amplitude * (self.omega * t - self.phase).cos()
    }
    fn velocity(&self, t: f64) -> Vec3 {
        self.amplitude * (self.omega * (self.omega * t - self.phase).sin())
    }
    fn acceleration(&self, t: f64) -> Vec3 {
        self.amplitude * (self.omega * self.omega * (self.omega * t - self.phase).cos())
    }
    fn max_speed(&self) -> f64 {
        self.amplitude.norm() * self.omega
    }
}

/// A point charge on an analytic trajectory.
#[derive(Debug, Clone, Copy)]
pub struct ChargeTrajectory<M> {
    pub motion: M,
    /// Charge, C.
    pub charge: f64,
    /// Mass, kg.
    pub mass: f64,
}

/// One field evaluation: total field and its two parts, which satisfy
/// `e_field = coulomb_part + acceleration_part` componentwise.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LwFieldSample {
    pub e_field: Vec3,
    pub t_retarded: f64,
    pub coulomb_part: Vec3,
    pub acceleration_part: Vec3,
}

/// Low-velocity field sample. `beta_warning` is set when the trajectory's
/// speed bound exceeds 0.01 c (the approximation degrades, but the value is
/// still returned).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LowVelSample {
    pub e_field: Vec3,
    pub t_retarded: f64,
    pub beta_warning: bool,
}

const MAX_ITERS: usize = 200;

fn residual_tolerance(t: f64) -> f64 {
    1e-15 * t.abs().max(1.0)
}

/// Solve `t_r = t - |x - y(t_r)| / c` by damped fixed-point iteration with a
/// bisection fallback.
///
/// The map `s -> t - |x - y(s)|/c` contracts with constant `v_max/c < 1`, so
/// the iteration converges whenever the trajectory is subluminal; when it
/// stalls (contraction constant near 1) the solver brackets the root of the
/// strictly increasing residual `g(s) = s - t + |x - y(s)|/c` and bisects.
pub fn retarded_time<M: Motion>(
    traj: &ChargeTrajectory<M>,
    medium: &MediumConstants,
    x: Vec3,
    t: f64,
) -> Result<f64> {
    let c = medium.c;
    let v_max = traj.motion.max_speed();
    if !v_max.is_finite() || v_max >= c {
        return Err(Error::SolverFailure(format!(
            "trajectory speed bound {v_max} m/s is not below c; retarded time is not unique"
        )));
    }
    let f = |s: f64| t - x.distance(traj.motion.position(s)) / c;
    let tol = residual_tolerance(t);

    let mut s = f(t);
    let mut prev_step = f64::INFINITY;
    let mut stalled = false;
    for _ in 0..MAX_ITERS {
        let next = f(s);
        let step = (next - s).abs();
        if step == 0.0 {
            return Ok(next);
        }
        // Geometric convergence means each step shrinks; a step that fails
        // to shrink twice in a row signals a float limit cycle or a
        // contraction constant too close to 1.
        if step >= prev_step && prev_step.is_finite() {
            if stalled {
                s = next;
                break;
            }
            stalled = true;
        } else {
            stalled = false;
        }
        prev_step = step;
        s = next;
    }
    if (s - f(s)).abs() <= tol {
        return Ok(s);
    }
    bisect_retarded(&f, s, tol)
}

fn bisect_retarded(f: &impl Fn(f64) -> f64, s0: f64, tol: f64) -> Result<f64> {
    // g(s) = s - f(s) is strictly increasing with g(t_r) = 0.
    let g = |s: f64| s - f(s);
    let mut delta = 1e-12 * s0.abs().max(1.0);
    let mut lo = s0;
    let mut hi = s0;
    for _ in 0..MAX_ITERS {
        if g(lo) > 0.0 {
            lo -= delta;
        } else if g(hi) < 0.0 {
            hi += delta;
        } else {
            break;
        }
        delta *= 2.0;
    }
    if g(lo) > 0.0 || g(hi) < 0.0 {
        return Err(Error::SolverFailure("could not bracket the retarded time".into()));
    }
    for _ in 0..MAX_ITERS {
        let mid = 0.5 * (lo + hi);
        if mid == lo || mid == hi {
            break;
        }
        if g(mid) > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let s = if g(lo).abs() <= g(hi).abs() { lo } else { hi };
    if (s - f(s)).abs() <= tol {
        Ok(s)
    } else {
        Err(Error::SolverFailure(format!(
            "retarded-time residual {:.3e} above tolerance {:.3e}",
            (s - f(s)).abs(),
            tol
        )))
    }
}

fn retarded_geometry<M: Motion>(
    traj: &ChargeTrajectory<M>,
    x: Vec3,
    t_r: f64,
) -> Result<(Vec3, f64, Vec3)> {
    let y = traj.motion.position(t_r);
    let r = x.distance(y);
    if r < COINCIDENCE_EPS {
        return Err(Error::DegenerateGeometry(
            "observation point coincides with the retarded charge position".into(),
        ));
    }
    Ok((y, r, (x - y) / r))
}

/// Full relativistic Liénard–Wiechert electric field at `(x, t)`.
pub fn lw_field_full<M: Motion>(
    traj: &ChargeTrajectory<M>,
    medium: &MediumConstants,
    x: Vec3,
    t: f64,
) -> Result<LwFieldSample> {
    let c = medium.c;
    let t_r = retarded_time(traj, medium, x, t)?;
    let (_, r, n) = retarded_geometry(traj, x, t_r)?;
    let beta = traj.motion.velocity(t_r) / c;
    let beta_dot = traj.motion.acceleration(t_r) / c;
    let inv_gamma_sq = 1.0 - beta.norm_sq();
    let doppler = 1.0 - n.dot(beta);
    let d3 = doppler * doppler * doppler;
    let pref = traj.charge / (4.0 * std::f64::consts::PI * medium.eps0);

    let coulomb_part = (n - beta) * (pref * inv_gamma_sq / (d3 * r * r));
    let acceleration_part = n.cross((n - beta).cross(beta_dot)) * (pref / (c * d3 * r));
    Ok(LwFieldSample {
        e_field: coulomb_part + acceleration_part,
        t_retarded: t_r,
        coulomb_part,
        acceleration_part,
    })
}

/// Low-velocity limit of the radiation field:
/// `-q/(4 pi eps0 c^2 |x - y|) (I - n n) d^2y/dt^2` at the retarded time.
/// The Coulomb term is dropped (it vanishes in the far field).
pub fn lw_field_lowvel<M: Motion>(
    traj: &ChargeTrajectory<M>,
    medium: &MediumConstants,
    x: Vec3,
    t: f64,
) -> Result<LowVelSample> {
    let c = medium.c;
    let t_r = retarded_time(traj, medium, x, t)?;
    let (_, r, n) = retarded_geometry(traj, x, t_r)?;
    let acc = traj.motion.acceleration(t_r);
    let transverse = acc - n * n.dot(acc);
    let scale = -traj.charge / (4.0 * std::f64::consts::PI * medium.eps0 * c * c * r);
    Ok(LowVelSample {
        e_field: transverse * scale,
        t_retarded: t_r,
        beta_warning: traj.motion.max_speed() >= 0.01 * c,
    })
}
