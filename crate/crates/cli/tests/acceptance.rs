//! Acceptance suite: one test per criterion, each printing a PASS line and
//! enforcing its stated tolerance and runtime budget.
//!
//! Run with `cargo test -p arraybeam-cli --test acceptance -- --nocapture`.

use std::f64::consts::TAU;
use std::time::Instant;

use num_complex::Complex64;

use arraybeam::fieldcore::{
    array_factor, far_field_e, intensity, mean_position, AntennaElement, ArrayConfig,
    MediumConstants,
};
use arraybeam::geometry::{
    perturb_layout, planar_grid, stent_layout, PerturbationSpec, StentLayoutSpec,
};
use arraybeam::lienard::{lw_field_lowvel, ChargeTrajectory, HarmonicMotion};
use arraybeam::phases::{optimal_phases, InterferenceRegime, PhaseFamily};
use arraybeam::rng::SplitMix64;
use arraybeam::sweeps::{
    find_peaks, gain_pattern, sweep_k1k2, verify_deployment, AxisSpec, PlaneSpec, SweepSpec,
    SweepUnits,
};
use arraybeam::vec3::{ComplexVec3, Vec3};

use arraybeam_cli::config::ScaleFlag;
use arraybeam_cli::emit::{emit_csv, emit_heatmap, emit_pattern, parse_csv_map, parse_csv_pattern, read_ppm};

const FREQ: f64 = 2.5e9;

fn vacuum() -> MediumConstants {
    MediumConstants::vacuum()
}

fn ball_point(rng: &mut SplitMix64, radius: f64) -> Vec3 {
    loop {
        let p = Vec3::new(
            2.0 * rng.next_unit() - 1.0,
            2.0 * rng.next_unit() - 1.0,
            2.0 * rng.next_unit() - 1.0,
        );
        if p.norm() <= 1.0 {
            return p * radius;
        }
    }
}

fn unit_vector(rng: &mut SplitMix64) -> Vec3 {
    loop {
        let v = Vec3::new(
            2.0 * rng.next_unit() - 1.0,
            2.0 * rng.next_unit() - 1.0,
            2.0 * rng.next_unit() - 1.0,
        );
        if v.norm() > 0.2 && v.norm() <= 1.0 {
            return v.normalized().unwrap();
        }
    }
}

fn config_from(positions: &[Vec3], phases: &[f64], f0: Vec3, omega: f64) -> ArrayConfig {
    let elements = positions
        .iter()
        .zip(phases)
        .map(|(&p, &phi)| AntennaElement::new(p, phi))
        .collect();
    ArrayConfig::normalized(elements, f0, omega).unwrap()
}

#[test]
fn criterion_1_coherent_peak_law() {
    let start = Instant::now();
    let omega = TAU * FREQ;
    let medium = vacuum();
    let mut rng = SplitMix64::new(101);
    for trial in 0..50 {
        let n = 2 + (rng.next_u64() % 63) as usize; // N in {2..64}
        let positions: Vec<Vec3> = (0..n).map(|_| ball_point(&mut rng, 5e-3)).collect();
        let receiver = unit_vector(&mut rng) * 0.5;
        let phases = optimal_phases(&positions, receiver, omega, medium.c).unwrap();
        let cfg = config_from(&positions, &phases, Vec3::Z, omega);
        let af = array_factor(&cfg, receiver).unwrap();
        let bound = (n * n) as f64;
        assert!(
            (af - bound).abs() <= 1e-9 * bound,
            "trial {trial}: N = {n}, AF = {af}"
        );
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "runtime {elapsed:?} exceeds 1 s");
    println!("acceptance 1: PASS — optimal phases reach AF = N^2 (1e-9 rel) on 50 random arrays in {elapsed:?}");
}

#[test]
fn criterion_2_closed_form_vs_time_average() {
    let start = Instant::now();
    let medium = vacuum();
    let mut rng = SplitMix64::new(202);
    let mut accepted = 0;
    while accepted < 20 {
        let n = 2 + (rng.next_u64() % 7) as usize;
        let omega = TAU * (1.0 + 2.0 * rng.next_unit()) * 1e9;
        let positions: Vec<Vec3> = (0..n).map(|_| ball_point(&mut rng, 5e-3)).collect();
        let phases: Vec<f64> = (0..n).map(|_| TAU * rng.next_unit()).collect();
        let f0 = unit_vector(&mut rng);
        let x = unit_vector(&mut rng) * (0.3 + 0.7 * rng.next_unit());
        let cfg = config_from(&positions, &phases, f0, omega);

        let closed = intensity(&cfg, x).unwrap().value;
        // Skip near-degenerate draws where both routes sit at the float
        // noise floor and a relative comparison is meaningless.
        let n_s = (x - mean_position(&cfg)).normalized().unwrap();
        let projected = f0 - n_s * n_s.dot(f0);
        if projected.norm() < 1e-2 || array_factor(&cfg, x).unwrap() < 1e-3 * n as f64 {
            continue;
        }
        accepted += 1;

        let period = TAU / omega;
        let steps = 10_000;
        let mut sum = 0.0;
        for i in 0..=steps {
            let t = period * i as f64 / steps as f64;
            let re = far_field_e(&cfg, x, t).unwrap().e.re();
            let w = if i == 0 || i == steps { 0.5 } else { 1.0 };
            sum += w * medium.c * medium.eps0 * re.norm_sq();
        }
        let oracle = sum / steps as f64;
        assert!(
            (closed - oracle).abs() <= 1e-6 * oracle,
            "config {accepted}: closed = {closed:e}, oracle = {oracle:e}"
        );
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 5.0, "runtime {elapsed:?} exceeds 5 s");
    println!("acceptance 2: PASS — closed-form intensity matches 1e4-step Poynting average (1e-6 rel) on 20 configs in {elapsed:?}");
}

#[test]
fn criterion_3_lw_oracle_consistency() {
    let start = Instant::now();
    let medium = vacuum();
    let omega = TAU * FREQ;
    let beta_max = 1e-4;
    let mass = 1.0;
    let f0_mag = beta_max * mass * omega * medium.c;
    let f0 = Vec3::Z * f0_mag;
    let phase = 0.4;
    // k_el = 1 maps to q = -4 pi eps0 c^2 m.
    let charge = -4.0 * std::f64::consts::PI * medium.eps0 * medium.c * medium.c * mass;
    let cfg = ArrayConfig::new(
        vec![AntennaElement::new(Vec3::ZERO, phase)],
        f0,
        omega,
        1.0,
        medium,
    )
    .unwrap();
    let traj = ChargeTrajectory {
        motion: HarmonicMotion::from_drive(Vec3::ZERO, f0, phase, omega, mass),
        charge,
        mass,
    };
    // Transverse to the oscillation: the canonical dipole observation
    // direction, where the low-velocity model is cleanest.
    let dir = Vec3::new(0.6, 0.8, 0.0);

    let demod_steps = 512;
    let mut deviations = Vec::new();
    for decade in [10.0, 1e2, 1e3, 1e4] {
        let x = dir * (decade * medium.c / omega);
        let period = TAU / omega;
        let mut acc = ComplexVec3::zero();
        for k in 0..demod_steps {
            let t = period * k as f64 / demod_steps as f64;
            let e = lw_field_lowvel(&traj, &medium, x, t).unwrap().e_field;
            let carrier = Complex64::new((omega * t).cos(), (omega * t).sin());
            acc = acc + ComplexVec3::from_real(e) * carrier;
        }
        let lw_phasor = acc * (2.0 / demod_steps as f64);
        let fc_phasor = far_field_e(&cfg, x, 0.0).unwrap().e;
        deviations.push((lw_phasor - fc_phasor).norm() / fc_phasor.norm());
    }
    assert!(
        deviations[2] < 1e-3,
        "deviation at r = 1e3 c/w: {:e}",
        deviations[2]
    );
    for w in deviations.windows(2) {
        assert!(w[1] < w[0], "deviations not decreasing: {deviations:?}");
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 10.0, "runtime {elapsed:?} exceeds 10 s");
    println!("acceptance 3: PASS — LW low-velocity field matches far-field model, deviations {deviations:?} decreasing over 4 decades in {elapsed:?}");
}

fn family_sweep(family: PhaseFamily) -> arraybeam::sweeps::IntensityMap {
    let array = planar_grid(4, 4, 2e-3, Vec3::ZERO, (Vec3::X, Vec3::Y)).unwrap();
    let spec = SweepSpec {
        k1: AxisSpec::new(-2.0, 2.0, 161),
        k2: AxisSpec::new(-2.0, 2.0, 161),
        family,
        array,
        receiver: Vec3::new(0.5, 0.1, 0.4),
        omega: TAU * FREQ,
        compensation: true,
        medium: vacuum(),
        units: SweepUnits::ArrayFactor,
    };
    sweep_k1k2(&spec).unwrap()
}

#[test]
fn criterion_4_family_a_lattice() {
    let start = Instant::now();
    let map = family_sweep(PhaseFamily::A);
    let peaks = find_peaks(&map, 0.5).unwrap();

    assert_eq!(peaks.len(), 25, "expected the 5x5 integer lattice");
    for p in &peaks {
        assert!(
            (p.k1 - p.k1.round()).abs() <= 1e-9 && (p.k2 - p.k2.round()).abs() <= 1e-9,
            "peak off lattice: ({}, {})",
            p.k1,
            p.k2
        );
        assert!((p.value - 256.0).abs() <= 1e-6, "peak value {}", p.value);
        assert_eq!(p.regime.regime, InterferenceRegime::Full);
    }

    // Periodicity under unit parameter shifts: 1 unit = 40 grid cells.
    let shift = 40;
    let n = 161;
    for i in 0..n {
        for j in 0..n {
            let v = map.value(i, j);
            if i + shift < n {
                let w = map.value(i + shift, j);
                assert!(
                    (v - w).abs() <= 1e-9 * v.max(w).max(16.0),
                    "k1-shift mismatch at ({i}, {j}): {v} vs {w}"
                );
            }
            if j + shift < n {
                let w = map.value(i, j + shift);
                assert!(
                    (v - w).abs() <= 1e-9 * v.max(w).max(16.0),
                    "k2-shift mismatch at ({i}, {j}): {v} vs {w}"
                );
            }
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 30.0, "runtime {elapsed:?} exceeds 30 s");
    println!("acceptance 4: PASS — family A: 25 integer-lattice peaks at 256 (1e-6), unit-shift periodic (1e-9) in {elapsed:?}");
}

#[test]
fn criterion_5_family_c_line_intersections() {
    let start = Instant::now();
    let map = family_sweep(PhaseFamily::C);
    let peaks = find_peaks(&map, 0.5).unwrap();
    let full: Vec<_> = peaks
        .iter()
        .filter(|p| p.regime.regime == InterferenceRegime::Full)
        .collect();

    // Analytic transversal intersections of k1 = p with
    // k2 + sqrt(k1^2 + k2^2) = n inside the window: k2 = (n^2 - p^2) / (2n),
    // n >= 1. The n = 0 curve degenerates onto the ray k1 = 0, k2 <= 0, a
    // flat ridge rather than an isolated intersection; it is checked
    // directly below.
    let mut analytic = Vec::new();
    for p in -2i64..=2 {
        for n in 1i64..=8 {
            let k2 = ((n * n - p * p) as f64) / (2.0 * n as f64);
            if (-2.0..=2.0).contains(&k2) {
                analytic.push((p as f64, k2));
            }
        }
    }
    assert_eq!(analytic.len(), 20);

    let cell1 = map.spec().k1.spacing();
    let cell2 = map.spec().k2.spacing();
    let on_ray = |k1: f64, k2: f64| k1.abs() <= cell1 && k2 <= cell2;

    // Every FULL peak sits within one grid cell of a point satisfying both
    // lattice conditions.
    for p in &full {
        let near_transversal = analytic
            .iter()
            .any(|&(a1, a2)| (p.k1 - a1).abs() <= cell1 && (p.k2 - a2).abs() <= cell2);
        assert!(
            near_transversal || on_ray(p.k1, p.k2),
            "stray FULL peak at ({}, {})",
            p.k1,
            p.k2
        );
    }
    // Every analytic intersection is matched by a FULL peak.
    for &(a1, a2) in &analytic {
        let matched = full
            .iter()
            .any(|p| (p.k1 - a1).abs() <= cell1 && (p.k2 - a2).abs() <= cell2);
        assert!(matched, "no FULL peak near analytic point ({a1}, {a2})");
    }

    // The degenerate n = 0 branch: along k1 = 0, every k2 <= 0 satisfies
    // k2 + |k2| = 0, so the whole ray carries the coherent bound.
    let i0 = 80; // k1 = 0 exactly
    assert_eq!(map.k1_axis()[i0], 0.0);
    for (j, &k2) in map.k2_axis().iter().enumerate() {
        if k2 <= 0.0 {
            let v = map.value(i0, j);
            assert!((v - 256.0).abs() <= 1e-6, "ridge value {v} at k2 = {k2}");
        }
    }

    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 30.0, "runtime {elapsed:?} exceeds 30 s");
    println!(
        "acceptance 5: PASS — family C: {} FULL peaks all on the analytic lattice, all 20 intersections matched, n=0 ridge at the bound in {elapsed:?}",
        full.len()
    );
}

#[test]
fn criterion_6_dipole_pattern() {
    let start = Instant::now();
    let omega = TAU * FREQ;
    let cfg = ArrayConfig::normalized(
        vec![AntennaElement::new(Vec3::ZERO, 0.0)],
        Vec3::Z,
        omega,
    )
    .unwrap();

    // YZ plane: normalized intensity equals sin^2(theta) pointwise, theta
    // measured from the dipole axis z.
    let yz = gain_pattern(&cfg, PlaneSpec::Yz, 1.0, 720).unwrap();
    let max_i = yz.samples.iter().map(|s| s.intensity).fold(0.0_f64, f64::max);
    for s in &yz.samples {
        let dir = Vec3::new(0.0, s.angle.cos(), s.angle.sin());
        let cos_theta = dir.dot(Vec3::Z);
        let expected = 1.0 - cos_theta * cos_theta;
        assert!(
            (s.intensity / max_i - expected).abs() <= 1e-9,
            "YZ sample at angle {}: {} vs sin^2 = {}",
            s.angle,
            s.intensity / max_i,
            expected
        );
    }
    // Nulls along +-f0 (angle pi/2 and 3 pi/2 in the YZ parameterization).
    assert!(yz.samples[180].intensity / max_i <= 1e-12);
    assert!(yz.samples[540].intensity / max_i <= 1e-12);

    // XY plane: isotropic within 1e-12.
    let xy = gain_pattern(&cfg, PlaneSpec::Xy, 1.0, 256).unwrap();
    let (min, max) = xy
        .samples
        .iter()
        .fold((f64::INFINITY, 0.0_f64), |(lo, hi), s| (lo.min(s.intensity), hi.max(s.intensity)));
    assert!((max / min - 1.0).abs() <= 1e-12, "XY anisotropy {max} / {min}");

    let elapsed = start.elapsed();
    println!("acceptance 6: PASS — single-element pattern is sin^2(theta) in YZ (1e-9), isotropic in XY (1e-12), nulls on the axis in {elapsed:?}");
}

struct RandomInstance {
    positions: Vec<Vec3>,
    phases: Vec<f64>,
    f0: Vec3,
    omega: f64,
    x: Vec3,
}

/// Random instances for the invariance suites. Draws where the array factor
/// or the transverse drive nearly cancel are re-drawn: there both sides of
/// the comparison sit at the float noise floor and relative tolerances are
/// meaningless.
fn random_instances(seed: u64, count: usize) -> Vec<RandomInstance> {
    let mut rng = SplitMix64::new(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let n = 2 + (rng.next_u64() % 15) as usize;
        let inst = RandomInstance {
            positions: (0..n).map(|_| ball_point(&mut rng, 2.5e-3)).collect(),
            phases: (0..n).map(|_| TAU * rng.next_unit()).collect(),
            f0: unit_vector(&mut rng),
            omega: TAU * (1.0 + 1.5 * rng.next_unit()) * 1e9,
            x: unit_vector(&mut rng) * (0.3 + 0.5 * rng.next_unit()),
        };
        let cfg = config_from(&inst.positions, &inst.phases, inst.f0, inst.omega);
        let af = array_factor(&cfg, inst.x).unwrap();
        let n_s = (inst.x - mean_position(&cfg)).normalized().unwrap();
        let projected = inst.f0 - n_s * n_s.dot(inst.f0);
        if af >= 0.1 * n as f64 && projected.norm() >= 1e-2 {
            out.push(inst);
        }
    }
    out
}

fn rotate(v: Vec3, axis: Vec3, angle: f64) -> Vec3 {
    let (s, c) = angle.sin_cos();
    v * c + axis.cross(v) * s + axis * (axis.dot(v) * (1.0 - c))
}

#[test]
fn criterion_7_invariance_suites() {
    let start = Instant::now();

    // Transversality, 100 instances, 1e-10 relative.
    for inst in random_instances(701, 100) {
        let cfg = config_from(&inst.positions, &inst.phases, inst.f0, inst.omega);
        let e = far_field_e(&cfg, inst.x, 0.1e-9).unwrap().e;
        let n_s = (inst.x - mean_position(&cfg)).normalized().unwrap();
        assert!(e.dot_real(n_s).norm() <= 1e-10 * e.norm());
    }

    // Global phase invariance, 100 instances, 1e-12 relative.
    let mut rng = SplitMix64::new(702);
    for inst in random_instances(703, 100) {
        let delta = 20.0 * rng.next_unit() - 10.0;
        let cfg = config_from(&inst.positions, &inst.phases, inst.f0, inst.omega);
        let shifted: Vec<f64> = inst.phases.iter().map(|p| p + delta).collect();
        let cfg2 = cfg.with_phases(&shifted).unwrap();
        let (af, af2) = (
            array_factor(&cfg, inst.x).unwrap(),
            array_factor(&cfg2, inst.x).unwrap(),
        );
        assert!((af - af2).abs() <= 1e-12 * af.max(af2));
        let (i1, i2) = (
            intensity(&cfg, inst.x).unwrap().value,
            intensity(&cfg2, inst.x).unwrap().value,
        );
        assert!((i1 - i2).abs() <= 1e-12 * i1.max(i2));
    }

    // Rigid-motion invariance, 100 instances, 1e-10 relative.
    let mut rng = SplitMix64::new(704);
    for inst in random_instances(705, 100) {
        let cfg = config_from(&inst.positions, &inst.phases, inst.f0, inst.omega);
        let i0 = intensity(&cfg, inst.x).unwrap().value;

        let t = ball_point(&mut rng, 2.0);
        let translated = config_from(
            &inst.positions.iter().map(|&p| p + t).collect::<Vec<_>>(),
            &inst.phases,
            inst.f0,
            inst.omega,
        );
        let i_t = intensity(&translated, inst.x + t).unwrap().value;
        assert!((i_t - i0).abs() <= 1e-10 * i0);

        let axis = unit_vector(&mut rng);
        let angle = TAU * rng.next_unit();
        let rotated = config_from(
            &inst.positions.iter().map(|&p| rotate(p, axis, angle)).collect::<Vec<_>>(),
            &inst.phases,
            rotate(inst.f0, axis, angle),
            inst.omega,
        );
        let i_r = intensity(&rotated, rotate(inst.x, axis, angle)).unwrap().value;
        assert!((i_r - i0).abs() <= 1e-10 * i0);
    }

    let elapsed = start.elapsed();
    println!("acceptance 7: PASS — transversality (1e-10), global-phase (1e-12) and rigid-motion (1e-10) hold on 100 instances each in {elapsed:?}");
}

#[test]
fn criterion_8_deployment_sensitivity() {
    let start = Instant::now();
    let omega = TAU * FREQ;
    let medium = vacuum();
    let lambda = medium.c / FREQ;
    let array = stent_layout(&StentLayoutSpec {
        radius: 2e-3,
        ring_z: vec![0.0, 4e-3, 8e-3],
        n_circ: 6,
        angular_offset_per_ring: 0.0,
        axis_origin: Vec3::ZERO,
        axis_direction: Vec3::Z,
    })
    .unwrap();
    assert_eq!(array.len(), 18);
    let receiver = Vec3::new(0.5, 0.0, 0.0);
    let phases = optimal_phases(array.positions(), receiver, omega, medium.c).unwrap();
    let nominal = config_from(array.positions(), &phases, Vec3::Z, omega);

    // Nominal geometry: exactly coherent.
    let rec = verify_deployment(&nominal, &array, receiver, 0.5).unwrap();
    assert!((rec.af_ratio - 1.0).abs() <= 1e-12, "nominal ratio {}", rec.af_ratio);

    // 5% radial over-expansion: strictly below the coherent peak.
    let pert = PerturbationSpec { radial_scale: 1.05, ..PerturbationSpec::identity(0) };
    let expanded = perturb_layout(&array, &pert).unwrap();
    let rec = verify_deployment(&nominal, &expanded, receiver, 0.5).unwrap();
    assert!(rec.af_ratio < 1.0, "expanded ratio {}", rec.af_ratio);

    // Mean ratio over 50 seeds is non-increasing as jitter grows.
    let sigmas = [lambda / 200.0, lambda / 100.0, lambda / 50.0, lambda / 25.0];
    let mut means = Vec::new();
    for &sigma in &sigmas {
        let mut total = 0.0;
        for seed in 0..50 {
            let pert = PerturbationSpec { jitter_sigma: sigma, ..PerturbationSpec::identity(seed) };
            let jittered = perturb_layout(&array, &pert).unwrap();
            total += verify_deployment(&nominal, &jittered, receiver, 0.5).unwrap().af_ratio;
        }
        means.push(total / 50.0);
    }
    for w in means.windows(2) {
        assert!(w[1] <= w[0], "mean af_ratio increased with jitter: {means:?}");
    }

    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 20.0, "runtime {elapsed:?} exceeds 20 s");
    println!("acceptance 8: PASS — deployment verification: nominal = 1, expanded < 1, jitter means {means:?} non-increasing in {elapsed:?}");
}

#[test]
fn criterion_9_io_round_trips() {
    let start = Instant::now();
    let dir = tempfile::tempdir().unwrap();
    let map = family_sweep(PhaseFamily::A);

    // Map CSV: bitwise round-trip, with and without a metadata block.
    let csv_path = dir.path().join("map.csv");
    emit_csv(&map, &["frequency_hz = 2.5e9".into()], &csv_path).unwrap();
    let text = std::fs::read_to_string(&csv_path).unwrap();
    let (k1, k2, values) = parse_csv_map(&text).unwrap();
    let bits = |v: &[f64]| v.iter().map(|x| x.to_bits()).collect::<Vec<_>>();
    assert_eq!(bits(&k1), bits(map.k1_axis()));
    assert_eq!(bits(&k2), bits(map.k2_axis()));
    assert_eq!(bits(&values), bits(map.values()));
    assert_eq!(
        text.lines().filter(|l| !l.starts_with('#')).count(),
        1 + 161 * 161,
        "header + one row per cell"
    );

    // Pattern CSV: bitwise round-trip including -inf gains if present.
    let omega = TAU * FREQ;
    let cfg = ArrayConfig::normalized(
        vec![AntennaElement::new(Vec3::ZERO, 0.0)],
        Vec3::Z,
        omega,
    )
    .unwrap();
    let pattern = gain_pattern(&cfg, PlaneSpec::Yz, 1.0, 64).unwrap();
    let pat_path = dir.path().join("pattern.csv");
    emit_pattern(&pattern, "yz", FREQ, &[], &pat_path).unwrap();
    let rows = parse_csv_pattern(&std::fs::read_to_string(&pat_path).unwrap()).unwrap();
    assert_eq!(rows.len(), pattern.samples.len());
    for (row, s) in rows.iter().zip(&pattern.samples) {
        assert_eq!(row.0.to_bits(), s.angle.to_bits());
        assert_eq!(row.1.to_bits(), s.intensity.to_bits());
        assert_eq!(row.2.to_bits(), s.gain_db.to_bits());
    }

    // PPM: header dimensions and payload byte count match exactly.
    let ppm_path = dir.path().join("map.ppm");
    emit_heatmap(&map, ScaleFlag::Linear, &["scale = linear".into()], &ppm_path).unwrap();
    let ppm = read_ppm(&ppm_path).unwrap();
    assert_eq!((ppm.width, ppm.height, ppm.maxval), (161, 161, 255));
    assert_eq!(ppm.pixels.len(), 161 * 161 * 3);

    let elapsed = start.elapsed();
    println!("acceptance 9: PASS — CSV and pattern emitters round-trip bitwise; PPM is 161x161x3 bytes exactly in {elapsed:?}");
}
