//! Configuration document parsing and validation.
//!
//! The config format is TOML; `docs/config.md` holds the full schema. All
//! units are SI (meters, hertz); the angular frequency is derived as
//! `omega = 2 pi frequency_hz`. Every field beyond `frequency_hz` and the
//! array source has a documented default, and the fully resolved
//! configuration is echoed into every emitted artifact so any output can be
//! reproduced from its own metadata.

use std::f64::consts::TAU;
use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use arraybeam::geometry::{planar_grid, stent_layout, IndexedArray, StentLayoutSpec};
use arraybeam::phases::PhaseFamily;
use arraybeam::sweeps::{AxisSpec, PlaneSpec};
use arraybeam::vec3::Vec3;

use crate::error::{CliError, Result};
use crate::expr::compile_custom_family;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Workflow {
    Sweep,
    Optimize,
    Pattern,
    Verify,
}

impl Workflow {
    pub fn name(self) -> &'static str {
        match self {
            Workflow::Sweep => "sweep",
            Workflow::Optimize => "optimize",
            Workflow::Pattern => "pattern",
            Workflow::Verify => "verify",
        }
    }

    fn from_name(s: &str) -> Result<Self> {
        match s {
            "sweep" => Ok(Workflow::Sweep),
            "optimize" => Ok(Workflow::Optimize),
            "pattern" => Ok(Workflow::Pattern),
            "verify" => Ok(Workflow::Verify),
            other => Err(CliError::validation(
                "workflow",
                format!("unknown workflow `{other}` (expected sweep|optimize|pattern|verify)"),
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnitsFlag {
    ArrayFactor,
    Si,
}

impl UnitsFlag {
    pub fn name(self) -> &'static str {
        match self {
            UnitsFlag::ArrayFactor => "af",
            UnitsFlag::Si => "si",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScaleFlag {
    Linear,
    Log10,
}

impl ScaleFlag {
    pub fn name(self) -> &'static str {
        match self {
            ScaleFlag::Linear => "linear",
            ScaleFlag::Log10 => "log10",
        }
    }
}

// ---------------------------------------------------------------------------
// Raw (serde) document
// ---------------------------------------------------------------------------

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    workflow: Option<String>,
    frequency_hz: f64,
    seed: Option<u64>,
    units: Option<String>,
    out_dir: Option<String>,
    scale: Option<String>,
    receiver: Option<[f64; 3]>,
    array: RawArray,
    phase: Option<RawPhase>,
    sweep: Option<RawSweep>,
    pattern: Option<RawPattern>,
    verify: Option<RawVerify>,
    field: Option<RawField>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawArray {
    planar: Option<RawPlanar>,
    stent: Option<RawStent>,
    explicit: Option<RawExplicit>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPlanar {
    rows: usize,
    cols: usize,
    spacing: f64,
    origin: Option<[f64; 3]>,
    b1: Option<[f64; 3]>,
    b2: Option<[f64; 3]>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawStent {
    radius: f64,
    ring_z: Vec<f64>,
    n_circ: usize,
    angular_offset_per_ring: Option<f64>,
    axis_origin: Option<[f64; 3]>,
    axis_direction: Option<[f64; 3]>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawExplicit {
    positions: Vec<[f64; 3]>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPhase {
    family: Option<String>,
    custom_expr: Option<String>,
    k1: Option<f64>,
    k2: Option<f64>,
    compensation: Option<bool>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSweep {
    k1_min: Option<f64>,
    k1_max: Option<f64>,
    k1_steps: Option<usize>,
    k2_min: Option<f64>,
    k2_max: Option<f64>,
    k2_steps: Option<usize>,
    min_prominence_fraction: Option<f64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPattern {
    plane: Option<String>,
    normal: Option<[f64; 3]>,
    radius: Option<f64>,
    n_samples: Option<usize>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawVerify {
    pass_fraction: Option<f64>,
    radial_scale: Option<f64>,
    axial_tilt: Option<f64>,
    jitter_sigma: Option<f64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawField {
    k_el: Option<f64>,
    f0: Option<[f64; 3]>,
}

// ---------------------------------------------------------------------------
// Effective (validated) configuration
// ---------------------------------------------------------------------------

/// Echo of the array source, kept for the effective-config metadata.
#[derive(Debug, Clone, Serialize)]
pub enum ArraySourceEcho {
    #[serde(rename = "planar")]
    Planar { rows: usize, cols: usize, spacing: f64, origin: [f64; 3], b1: [f64; 3], b2: [f64; 3] },
    #[serde(rename = "stent")]
    Stent {
        radius: f64,
        ring_z: Vec<f64>,
        n_circ: usize,
        angular_offset_per_ring: f64,
        axis_origin: [f64; 3],
        axis_direction: [f64; 3],
    },
    #[serde(rename = "explicit")]
    Explicit { positions: Vec<[f64; 3]> },
}

#[derive(Debug, Clone)]
pub struct SweepSettings {
    pub k1: AxisSpec,
    pub k2: AxisSpec,
    pub min_prominence_fraction: f64,
}

#[derive(Debug, Clone)]
pub struct PatternSettings {
    pub plane: PlaneSpec,
    pub plane_name: String,
    pub radius: f64,
    pub n_samples: usize,
}

#[derive(Debug, Clone, Copy)]
pub struct VerifySettings {
    pub pass_fraction: f64,
    pub radial_scale: f64,
    pub axial_tilt: f64,
    pub jitter_sigma: f64,
}

#[derive(Debug, Clone, Copy)]
pub struct FieldSettings {
    pub k_el: f64,
    pub f0: Vec3,
}

/// Fully resolved run configuration with all defaults filled.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub workflow: Workflow,
    pub frequency_hz: f64,
    /// `2 pi frequency_hz`, rad/s.
    pub omega: f64,
    pub seed: u64,
    pub units: UnitsFlag,
    pub out_dir: PathBuf,
    pub scale: ScaleFlag,
    pub receiver: Option<Vec3>,
    pub array: IndexedArray,
    pub array_echo: ArraySourceEcho,
    pub family: PhaseFamily,
    pub family_name: String,
    pub custom_expr: Option<String>,
    pub k1: f64,
    pub k2: f64,
    pub compensation: bool,
    pub sweep: SweepSettings,
    pub pattern: PatternSettings,
    pub verify: VerifySettings,
    pub field: FieldSettings,
}

fn vec3(a: [f64; 3]) -> Vec3 {
    Vec3::new(a[0], a[1], a[2])
}

fn arr3(v: Vec3) -> [f64; 3] {
    [v.x, v.y, v.z]
}

/// Parse and validate a configuration document.
///
/// `cli_workflow` is the subcommand the user invoked; a `workflow` key in
/// the document must agree with it when both are present.
pub fn parse_config(text: &str, cli_workflow: Option<Workflow>) -> Result<RunConfig> {
    let raw: RawConfig = toml::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;

    let doc_workflow = raw.workflow.as_deref().map(Workflow::from_name).transpose()?;
    let workflow = match (doc_workflow, cli_workflow) {
        (Some(a), Some(b)) if a != b => {
            return Err(CliError::validation(
                "workflow",
                format!("document says `{}` but the `{}` subcommand was invoked", a.name(), b.name()),
            ))
        }
        (Some(a), _) => a,
        (None, Some(b)) => b,
        (None, None) => {
            return Err(CliError::validation(
                "workflow",
                "not set in the document and no subcommand given",
            ))
        }
    };

    if !(raw.frequency_hz > 0.0 && raw.frequency_hz.is_finite()) {
        return Err(CliError::validation("frequency_hz", "must be positive"));
    }

    let units = match raw.units.as_deref() {
        None | Some("af") => UnitsFlag::ArrayFactor,
        Some("si") => UnitsFlag::Si,
        Some(other) => {
            return Err(CliError::validation("units", format!("unknown `{other}` (af|si)")))
        }
    };
    let scale = match raw.scale.as_deref() {
        None | Some("linear") => ScaleFlag::Linear,
        Some("log10") => ScaleFlag::Log10,
        Some(other) => {
            return Err(CliError::validation("scale", format!("unknown `{other}` (linear|log10)")))
        }
    };

    let (array, array_echo) = build_array(&raw.array)?;

    let phase = raw.phase.unwrap_or(RawPhase {
        family: None,
        custom_expr: None,
        k1: None,
        k2: None,
        compensation: None,
    });
    let family_name = phase.family.unwrap_or_else(|| "optimal".into());
    let custom_expr = phase.custom_expr;
    let family = match family_name.as_str() {
        "A" | "a" => PhaseFamily::A,
        "B" | "b" => PhaseFamily::B,
        "C" | "c" => PhaseFamily::C,
        "optimal" => PhaseFamily::Optimal,
        "custom" => {
            let expr = custom_expr.as_deref().ok_or_else(|| {
                CliError::validation("phase.custom_expr", "required when family = \"custom\"")
            })?;
            compile_custom_family(expr)?
        }
        other => {
            return Err(CliError::validation(
                "phase.family",
                format!("unknown `{other}` (A|B|C|optimal|custom)"),
            ))
        }
    };
    if !matches!(family, PhaseFamily::Custom(_)) && custom_expr.is_some() {
        return Err(CliError::validation(
            "phase.custom_expr",
            "only allowed with family = \"custom\"",
        ));
    }

    let sweep_raw = raw.sweep.unwrap_or(RawSweep {
        k1_min: None,
        k1_max: None,
        k1_steps: None,
        k2_min: None,
        k2_max: None,
        k2_steps: None,
        min_prominence_fraction: None,
    });
    let sweep = SweepSettings {
        k1: AxisSpec::new(
            sweep_raw.k1_min.unwrap_or(-2.0),
            sweep_raw.k1_max.unwrap_or(2.0),
            sweep_raw.k1_steps.unwrap_or(201),
        ),
        k2: AxisSpec::new(
            sweep_raw.k2_min.unwrap_or(-2.0),
            sweep_raw.k2_max.unwrap_or(2.0),
            sweep_raw.k2_steps.unwrap_or(201),
        ),
        min_prominence_fraction: sweep_raw.min_prominence_fraction.unwrap_or(0.5),
    };

    let pattern_raw = raw.pattern.unwrap_or(RawPattern {
        plane: None,
        normal: None,
        radius: None,
        n_samples: None,
    });
    let plane_name = pattern_raw.plane.unwrap_or_else(|| "yz".into());
    let plane = match plane_name.as_str() {
        "xy" => PlaneSpec::Xy,
        "xz" => PlaneSpec::Xz,
        "yz" => PlaneSpec::Yz,
        "normal" => {
            let n = pattern_raw.normal.ok_or_else(|| {
                CliError::validation("pattern.normal", "required when plane = \"normal\"")
            })?;
            PlaneSpec::Normal(vec3(n))
        }
        other => {
            return Err(CliError::validation(
                "pattern.plane",
                format!("unknown `{other}` (xy|xz|yz|normal)"),
            ))
        }
    };
    let pattern = PatternSettings {
        plane,
        plane_name,
        radius: pattern_raw.radius.unwrap_or(1.0),
        n_samples: pattern_raw.n_samples.unwrap_or(360),
    };

    let verify_raw = raw.verify.unwrap_or(RawVerify {
        pass_fraction: None,
        radial_scale: None,
        axial_tilt: None,
        jitter_sigma: None,
    });
    let verify = VerifySettings {
        pass_fraction: verify_raw.pass_fraction.unwrap_or(0.5),
        radial_scale: verify_raw.radial_scale.unwrap_or(1.0),
        axial_tilt: verify_raw.axial_tilt.unwrap_or(0.0),
        jitter_sigma: verify_raw.jitter_sigma.unwrap_or(0.0),
    };

    let field_raw = raw.field.unwrap_or(RawField { k_el: None, f0: None });
    let field = FieldSettings {
        k_el: field_raw.k_el.unwrap_or(1.0),
        f0: field_raw.f0.map(vec3).unwrap_or(Vec3::Z),
    };

    let config = RunConfig {
        workflow,
        frequency_hz: raw.frequency_hz,
        omega: TAU * raw.frequency_hz,
        seed: raw.seed.unwrap_or(0),
        units,
        out_dir: PathBuf::from(raw.out_dir.unwrap_or_else(|| "out".into())),
        scale,
        receiver: raw.receiver.map(vec3),
        array,
        array_echo,
        family,
        family_name,
        custom_expr,
        k1: phase.k1.unwrap_or(0.0),
        k2: phase.k2.unwrap_or(0.0),
        compensation: phase.compensation.unwrap_or(true),
        sweep,
        pattern,
        verify,
        field,
    };
    config.validate_for_workflow()?;
    Ok(config)
}

fn build_array(raw: &RawArray) -> Result<(IndexedArray, ArraySourceEcho)> {
    let sources =
        raw.planar.is_some() as u8 + raw.stent.is_some() as u8 + raw.explicit.is_some() as u8;
    if sources != 1 {
        return Err(CliError::validation(
            "array",
            format!("exactly one of array.planar / array.stent / array.explicit required, found {sources}"),
        ));
    }
    if let Some(p) = &raw.planar {
        let origin = p.origin.map(vec3).unwrap_or(Vec3::ZERO);
        let b1 = p.b1.map(vec3).unwrap_or(Vec3::X);
        let b2 = p.b2.map(vec3).unwrap_or(Vec3::Y);
        let array = planar_grid(p.rows, p.cols, p.spacing, origin, (b1, b2))?;
        let echo = ArraySourceEcho::Planar {
            rows: p.rows,
            cols: p.cols,
            spacing: p.spacing,
            origin: arr3(origin),
            b1: arr3(b1),
            b2: arr3(b2),
        };
        return Ok((array, echo));
    }
    if let Some(s) = &raw.stent {
        let spec = StentLayoutSpec {
            radius: s.radius,
            ring_z: s.ring_z.clone(),
            n_circ: s.n_circ,
            angular_offset_per_ring: s.angular_offset_per_ring.unwrap_or(0.0),
            axis_origin: s.axis_origin.map(vec3).unwrap_or(Vec3::ZERO),
            axis_direction: s.axis_direction.map(vec3).unwrap_or(Vec3::Z),
        };
        let array = stent_layout(&spec)?;
        let echo = ArraySourceEcho::Stent {
            radius: spec.radius,
            ring_z: spec.ring_z.clone(),
            n_circ: spec.n_circ,
            angular_offset_per_ring: spec.angular_offset_per_ring,
            axis_origin: arr3(spec.axis_origin),
            axis_direction: arr3(spec.axis_direction),
        };
        return Ok((array, echo));
    }
    let e = raw.explicit.as_ref().expect("one source checked above");
    if e.positions.is_empty() {
        return Err(CliError::validation("array.explicit.positions", "must be non-empty"));
    }
    let positions: Vec<Vec3> = e.positions.iter().map(|&p| vec3(p)).collect();
    let array = IndexedArray::new(1, positions.len(), positions)?;
    let echo = ArraySourceEcho::Explicit { positions: e.positions.clone() };
    Ok((array, echo))
}

impl RunConfig {
    fn validate_for_workflow(&self) -> Result<()> {
        let needs_receiver = match self.workflow {
            Workflow::Sweep | Workflow::Optimize | Workflow::Verify => true,
            // A pattern only references the receiver through the
            // propagation-compensation term.
            Workflow::Pattern => self.compensation,
        };
        if needs_receiver && self.receiver.is_none() {
            return Err(CliError::validation(
                "receiver",
                format!("required for workflow `{}`", self.workflow.name()),
            ));
        }
        Ok(())
    }

    /// The resolved configuration as canonical TOML, embedded into every
    /// emitted artifact.
    pub fn effective_toml(&self) -> String {
        #[derive(Serialize)]
        struct EffPhase<'a> {
            family: &'a str,
            #[serde(skip_serializing_if = "Option::is_none")]
            custom_expr: Option<&'a str>,
            k1: f64,
            k2: f64,
            compensation: bool,
        }
        #[derive(Serialize)]
        struct EffSweep {
            k1_min: f64,
            k1_max: f64,
            k1_steps: usize,
            k2_min: f64,
            k2_max: f64,
            k2_steps: usize,
            min_prominence_fraction: f64,
        }
        #[derive(Serialize)]
        struct EffPattern<'a> {
            plane: &'a str,
            radius: f64,
            n_samples: usize,
        }
        #[derive(Serialize)]
        struct EffVerify {
            pass_fraction: f64,
            radial_scale: f64,
            axial_tilt: f64,
            jitter_sigma: f64,
        }
        #[derive(Serialize)]
        struct EffField {
            k_el: f64,
            f0: [f64; 3],
        }
        #[derive(Serialize)]
        struct Effective<'a> {
            workflow: &'a str,
            frequency_hz: f64,
            seed: u64,
            units: &'a str,
            out_dir: &'a str,
            scale: &'a str,
            /// Generator family behind `seed`, recorded for reproducibility.
            rng: &'a str,
            #[serde(skip_serializing_if = "Option::is_none")]
            receiver: Option<[f64; 3]>,
            array: &'a ArraySourceEcho,
            phase: EffPhase<'a>,
            sweep: EffSweep,
            pattern: EffPattern<'a>,
            verify: EffVerify,
            field: EffField,
        }
        let eff = Effective {
            workflow: self.workflow.name(),
            frequency_hz: self.frequency_hz,
            seed: self.seed,
            units: self.units.name(),
            out_dir: self.out_dir.to_str().unwrap_or("out"),
            scale: self.scale.name(),
            rng: "splitmix64+box-muller",
            receiver: self.receiver.map(arr3),
            array: &self.array_echo,
            phase: EffPhase {
                family: &self.family_name,
                custom_expr: self.custom_expr.as_deref(),
                k1: self.k1,
                k2: self.k2,
                compensation: self.compensation,
            },
            sweep: EffSweep {
                k1_min: self.sweep.k1.min,
                k1_max: self.sweep.k1.max,
                k1_steps: self.sweep.k1.steps,
                k2_min: self.sweep.k2.min,
                k2_max: self.sweep.k2.max,
                k2_steps: self.sweep.k2.steps,
                min_prominence_fraction: self.sweep.min_prominence_fraction,
            },
            pattern: EffPattern {
                plane: &self.pattern.plane_name,
                radius: self.pattern.radius,
                n_samples: self.pattern.n_samples,
            },
            verify: EffVerify {
                pass_fraction: self.verify.pass_fraction,
                radial_scale: self.verify.radial_scale,
                axial_tilt: self.verify.axial_tilt,
                jitter_sigma: self.verify.jitter_sigma,
            },
            field: EffField { k_el: self.field.k_el, f0: arr3(self.field.f0) },
        };
        toml::to_string(&eff).expect("effective config serializes")
    }

    /// Effective config as `# `-prefixed comment lines for artifact headers.
    pub fn comment_block(&self) -> Vec<String> {
        let mut lines = vec!["effective configuration:".to_string()];
        lines.extend(self.effective_toml().lines().map(|l| l.to_string()));
        lines
    }
}
