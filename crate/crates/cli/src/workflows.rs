//! The four batch workflows behind the CLI verbs.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use arraybeam::fieldcore::{array_factor, AntennaElement, ArrayConfig, MediumConstants};
use arraybeam::geometry::{perturb_layout, PerturbationSpec};
use arraybeam::phases::{assign_family_phases, optimal_phases, InterferenceRegime, PhaseFamily};
use arraybeam::sweeps::{
    find_peaks, gain_pattern, sweep_k1k2, verify_deployment, SweepSpec, SweepUnits,
};
use arraybeam::vec3::Vec3;

use crate::config::{RunConfig, UnitsFlag, Workflow};
use crate::emit::{emit_csv, emit_heatmap, emit_pattern};
use crate::error::{CliError, Result};

fn fmt(v: f64) -> String {
    format!("{v:.16e}")
}

/// Run the configured workflow; returns the paths written.
pub fn run(config: &RunConfig) -> Result<Vec<PathBuf>> {
    std::fs::create_dir_all(&config.out_dir)
        .map_err(|e| CliError::io(config.out_dir.clone(), e))?;
    match config.workflow {
        Workflow::Sweep => run_sweep(config),
        Workflow::Optimize => run_optimize(config),
        Workflow::Pattern => run_pattern(config),
        Workflow::Verify => run_verify(config),
    }
}

fn sweep_units(config: &RunConfig) -> SweepUnits {
    match config.units {
        UnitsFlag::ArrayFactor => SweepUnits::ArrayFactor,
        UnitsFlag::Si => SweepUnits::Si { f0: config.field.f0, k_el: config.field.k_el },
    }
}

fn receiver(config: &RunConfig) -> Result<Vec3> {
    config
        .receiver
        .ok_or_else(|| CliError::validation("receiver", "required for this workflow"))
}

fn run_sweep(config: &RunConfig) -> Result<Vec<PathBuf>> {
    let spec = SweepSpec {
        k1: config.sweep.k1,
        k2: config.sweep.k2,
        family: config.family.clone(),
        array: config.array.clone(),
        receiver: receiver(config)?,
        omega: config.omega,
        compensation: config.compensation,
        medium: MediumConstants::vacuum(),
        units: sweep_units(config),
    };
    let map = sweep_k1k2(&spec)?;
    let peaks = find_peaks(&map, config.sweep.min_prominence_fraction)?;
    let comments = config.comment_block();

    let csv_path = config.out_dir.join("map.csv");
    emit_csv(&map, &comments, &csv_path)?;
    let ppm_path = config.out_dir.join("map.ppm");
    emit_heatmap(&map, config.scale, &comments, &ppm_path)?;

    let peaks_path = config.out_dir.join("peaks.csv");
    let file = File::create(&peaks_path).map_err(|e| CliError::io(&peaks_path, e))?;
    let mut w = BufWriter::new(file);
    let mut inner = || -> std::io::Result<()> {
        for line in &comments {
            writeln!(w, "# {line}")?;
        }
        writeln!(w, "k1,k2,value,regime")?;
        for p in &peaks {
            let regime = match p.regime.regime {
                InterferenceRegime::Full => "full",
                InterferenceRegime::Partial => "partial",
                InterferenceRegime::Destructive => "destructive",
            };
            writeln!(w, "{},{},{},{regime}", fmt(p.k1), fmt(p.k2), fmt(p.value))?;
        }
        w.flush()
    };
    inner().map_err(|e| CliError::io(&peaks_path, e))?;
    Ok(vec![csv_path, ppm_path, peaks_path])
}

fn run_optimize(config: &RunConfig) -> Result<Vec<PathBuf>> {
    let x = receiver(config)?;
    let medium = MediumConstants::vacuum();
    let phases = optimal_phases(config.array.positions(), x, config.omega, medium.c)?;
    let elements: Vec<AntennaElement> = config
        .array
        .positions()
        .iter()
        .zip(&phases)
        .map(|(&p, &phi)| AntennaElement::new(p, phi))
        .collect();
    let cfg = ArrayConfig::new(elements, config.field.f0, config.omega, config.field.k_el, medium)?;
    let af = array_factor(&cfg, x)?;
    let n = config.array.len();

    let path = config.out_dir.join("phases.csv");
    let file = File::create(&path).map_err(|e| CliError::io(&path, e))?;
    let mut w = BufWriter::new(file);
    let mut inner = || -> std::io::Result<()> {
        for line in config.comment_block() {
            writeln!(w, "# {line}")?;
        }
        writeln!(w, "# achieved_array_factor = {}", fmt(af))?;
        writeln!(w, "# coherent_bound = {}", fmt((n * n) as f64))?;
        writeln!(w, "l,m,x,y,z,phase_rad")?;
        for ((l, m, p), phi) in config.array.iter_indexed().zip(&phases) {
            writeln!(w, "{l},{m},{},{},{},{}", fmt(p.x), fmt(p.y), fmt(p.z), fmt(*phi))?;
        }
        w.flush()
    };
    inner().map_err(|e| CliError::io(&path, e))?;
    Ok(vec![path])
}

fn run_pattern(config: &RunConfig) -> Result<Vec<PathBuf>> {
    let medium = MediumConstants::vacuum();
    let phases = match (config.receiver, &config.family) {
        (Some(x), PhaseFamily::Optimal) if config.compensation => {
            optimal_phases(config.array.positions(), x, config.omega, medium.c)?
        }
        (Some(x), family) => assign_family_phases(
            &config.array,
            family,
            config.k1,
            config.k2,
            x,
            config.omega,
            medium.c,
            config.compensation,
        )?,
        (None, family) if !config.compensation => {
            assign_family_phases(
                &config.array,
                family,
                config.k1,
                config.k2,
                Vec3::ZERO,
                config.omega,
                medium.c,
                false,
            )?
        }
        (None, _) => {
            return Err(CliError::validation(
                "receiver",
                "required for pattern phases unless compensation = false",
            ))
        }
    };
    let elements: Vec<AntennaElement> = config
        .array
        .positions()
        .iter()
        .zip(&phases)
        .map(|(&p, &phi)| AntennaElement::new(p, phi))
        .collect();
    let cfg = ArrayConfig::new(
        elements,
        config.field.f0,
        config.omega,
        config.field.k_el,
        medium,
    )?;
    let pattern = gain_pattern(&cfg, config.pattern.plane, config.pattern.radius, config.pattern.n_samples)?;

    let path = config.out_dir.join("pattern.csv");
    emit_pattern(
        &pattern,
        &config.pattern.plane_name,
        config.frequency_hz,
        &config.comment_block(),
        &path,
    )?;
    Ok(vec![path])
}

fn run_verify(config: &RunConfig) -> Result<Vec<PathBuf>> {
    let x = receiver(config)?;
    let medium = MediumConstants::vacuum();
    let phases = optimal_phases(config.array.positions(), x, config.omega, medium.c)?;
    let elements: Vec<AntennaElement> = config
        .array
        .positions()
        .iter()
        .zip(&phases)
        .map(|(&p, &phi)| AntennaElement::new(p, phi))
        .collect();
    let nominal =
        ArrayConfig::new(elements, config.field.f0, config.omega, config.field.k_el, medium)?;

    let pert = PerturbationSpec {
        radial_scale: config.verify.radial_scale,
        axial_tilt: config.verify.axial_tilt,
        jitter_sigma: config.verify.jitter_sigma,
        seed: config.seed,
    };
    let actual = perturb_layout(&config.array, &pert)?;
    let record = verify_deployment(&nominal, &actual, x, config.verify.pass_fraction)?;

    let path = config.out_dir.join("verify.csv");
    let file = File::create(&path).map_err(|e| CliError::io(&path, e))?;
    let mut w = BufWriter::new(file);
    let mut inner = || -> std::io::Result<()> {
        for line in config.comment_block() {
            writeln!(w, "# {line}")?;
        }
        writeln!(w, "passed,af_ratio")?;
        writeln!(w, "{},{}", record.passed, fmt(record.af_ratio))?;
        w.flush()
    };
    inner().map_err(|e| CliError::io(&path, e))?;
    Ok(vec![path])
}
