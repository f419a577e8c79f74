//! File emitters: CSV for sweep maps and gain patterns, binary PPM (P6)
//! heatmaps, and the CSV parsers used for round-trip checks.
//!
//! Floats are rendered with 17 significant digits (`{:.16e}`), which
//! round-trips every f64 bit-exactly. Metadata travels as `# `-prefixed
//! comment lines before the header; parsers skip them.

use std::fs::File;
use std::io::{BufWriter, Read, Write};
use std::path::Path;

use arraybeam::sweeps::{GainPattern, IntensityMap};

use crate::colormap::colorize;
use crate::config::ScaleFlag;
use crate::error::{CliError, Result};

fn fmt(v: f64) -> String {
    format!("{v:.16e}")
}

fn write_comments(w: &mut impl Write, comments: &[String]) -> std::io::Result<()> {
    for line in comments {
        writeln!(w, "# {line}")?;
    }
    Ok(())
}

/// Write an intensity map as `k1,k2,value` rows, row-major with `k1` outer.
/// `comments` (typically the effective config) go first as `#` lines; with
/// no comments the file is exactly the header plus one row per cell.
pub fn emit_csv(map: &IntensityMap, comments: &[String], path: &Path) -> Result<()> {
    let file = File::create(path).map_err(|e| CliError::io(path, e))?;
    let mut w = BufWriter::new(file);
    let mut inner = || -> std::io::Result<()> {
        write_comments(&mut w, comments)?;
        writeln!(w, "k1,k2,value")?;
        for (i, &k1) in map.k1_axis().iter().enumerate() {
            for (j, &k2) in map.k2_axis().iter().enumerate() {
                writeln!(w, "{},{},{}", fmt(k1), fmt(k2), fmt(map.value(i, j)))?;
            }
        }
        w.flush()
    };
    inner().map_err(|e| CliError::io(path, e))
}

/// Parse a map CSV back into `(k1_axis, k2_axis, row-major values)`.
pub fn parse_csv_map(text: &str) -> Result<(Vec<f64>, Vec<f64>, Vec<f64>)> {
    let mut rows = Vec::new();
    let mut saw_header = false;
    for (idx, line) in text.lines().enumerate() {
        if line.starts_with('#') || line.is_empty() {
            continue;
        }
        if !saw_header {
            if line != "k1,k2,value" {
                return Err(CliError::Parse(format!(
                    "line {}: expected header `k1,k2,value`, got `{line}`",
                    idx + 1
                )));
            }
            saw_header = true;
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 3 {
            return Err(CliError::Parse(format!("line {}: expected 3 fields", idx + 1)));
        }
        let parse = |s: &str| {
            s.parse::<f64>()
                .map_err(|e| CliError::Parse(format!("line {}: {e}", idx + 1)))
        };
        rows.push((parse(fields[0])?, parse(fields[1])?, parse(fields[2])?));
    }
    if rows.is_empty() {
        return Err(CliError::Parse("no data rows".into()));
    }
    let mut k1_axis = Vec::new();
    for &(k1, _, _) in &rows {
        if k1_axis.last() != Some(&k1) {
            k1_axis.push(k1);
        }
    }
    let k2_len = rows.len() / k1_axis.len();
    let k2_axis: Vec<f64> = rows[..k2_len].iter().map(|&(_, k2, _)| k2).collect();
    let values = rows.iter().map(|&(_, _, v)| v).collect();
    Ok((k1_axis, k2_axis, values))
}

/// Write a gain pattern as `angle_rad,intensity,gain_db` rows behind a
/// metadata comment block (plane, radius, frequency, plus caller comments).
pub fn emit_pattern(
    pattern: &GainPattern,
    plane_name: &str,
    frequency_hz: f64,
    comments: &[String],
    path: &Path,
) -> Result<()> {
    let file = File::create(path).map_err(|e| CliError::io(path, e))?;
    let mut w = BufWriter::new(file);
    let mut inner = || -> std::io::Result<()> {
        writeln!(w, "# plane = {plane_name}")?;
        writeln!(w, "# radius_m = {}", fmt(pattern.radius))?;
        writeln!(w, "# frequency_hz = {}", fmt(frequency_hz))?;
        writeln!(w, "# far_field_warning = {}", pattern.far_field_warning)?;
        write_comments(&mut w, comments)?;
        writeln!(w, "angle_rad,intensity,gain_db")?;
        for s in &pattern.samples {
            writeln!(w, "{},{},{}", fmt(s.angle), fmt(s.intensity), fmt(s.gain_db))?;
        }
        w.flush()
    };
    inner().map_err(|e| CliError::io(path, e))
}

/// Parse a pattern CSV back into `(angle, intensity, gain_db)` rows.
pub fn parse_csv_pattern(text: &str) -> Result<Vec<(f64, f64, f64)>> {
    let mut out = Vec::new();
    let mut saw_header = false;
    for (idx, line) in text.lines().enumerate() {
        if line.starts_with('#') || line.is_empty() {
            continue;
        }
        if !saw_header {
            if line != "angle_rad,intensity,gain_db" {
                return Err(CliError::Parse(format!("line {}: bad header", idx + 1)));
            }
            saw_header = true;
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 3 {
            return Err(CliError::Parse(format!("line {}: expected 3 fields", idx + 1)));
        }
        let parse = |s: &str| {
            s.parse::<f64>()
                .map_err(|e| CliError::Parse(format!("line {}: {e}", idx + 1)))
        };
        out.push((parse(fields[0])?, parse(fields[1])?, parse(fields[2])?));
    }
    Ok(out)
}

/// Write the map as a binary PPM (P6), one pixel per grid cell: width is the
/// k1 axis, height the k2 axis with the largest k2 in the top row. Linear
/// scale maps `v / max` onto the colormap; log10 clamps at `max / 1e6` and
/// spans those six decades.
pub fn emit_heatmap(
    map: &IntensityMap,
    scale: ScaleFlag,
    comments: &[String],
    path: &Path,
) -> Result<()> {
    let width = map.k1_axis().len();
    let height = map.k2_axis().len();
    let max = map.values().iter().cloned().fold(0.0_f64, f64::max);
    let normalize = |v: f64| -> f64 {
        if max <= 0.0 {
            return 0.0;
        }
        match scale {
            ScaleFlag::Linear => v / max,
            ScaleFlag::Log10 => {
                let floor = max / 1e6;
                (v.max(floor) / floor).log10() / 6.0
            }
        }
    };

    let file = File::create(path).map_err(|e| CliError::io(path, e))?;
    let mut w = BufWriter::new(file);
    let mut inner = || -> std::io::Result<()> {
        writeln!(w, "P6")?;
        write_comments(&mut w, comments)?;
        writeln!(w, "{width} {height}")?;
        writeln!(w, "255")?;
        for row in 0..height {
            let j = height - 1 - row;
            for i in 0..width {
                w.write_all(&colorize(normalize(map.value(i, j))))?;
            }
        }
        w.flush()
    };
    inner().map_err(|e| CliError::io(path, e))
}

/// Parsed PPM header plus payload, for format checks.
pub struct PpmContents {
    pub width: usize,
    pub height: usize,
    pub maxval: usize,
    pub pixels: Vec<u8>,
}

/// Read back a P6 file, skipping `#` comments in the header.
pub fn read_ppm(path: &Path) -> Result<PpmContents> {
    let mut bytes = Vec::new();
    File::open(path)
        .and_then(|mut f| f.read_to_end(&mut bytes))
        .map_err(|e| CliError::io(path, e))?;
    let bad = |msg: &str| CliError::Parse(format!("{}: {msg}", path.display()));

    // Tokenize the header: magic, width, height, maxval; comments run from
    // `#` to end of line.
    let mut pos = 0;
    let mut tokens = Vec::new();
    while tokens.len() < 4 && pos < bytes.len() {
        match bytes[pos] {
            b'#' => {
                while pos < bytes.len() && bytes[pos] != b'\n' {
                    pos += 1;
                }
            }
            c if c.is_ascii_whitespace() => pos += 1,
            _ => {
                let start = pos;
                while pos < bytes.len()
                    && !bytes[pos].is_ascii_whitespace()
                    && bytes[pos] != b'#'
                {
                    pos += 1;
                }
                tokens.push(String::from_utf8_lossy(&bytes[start..pos]).into_owned());
            }
        }
    }
    if tokens.len() != 4 || tokens[0] != "P6" {
        return Err(bad("not a P6 file"));
    }
    // Exactly one whitespace byte separates the maxval from the raster.
    pos += 1;
    let parse = |s: &str| s.parse::<usize>().map_err(|_| bad("bad header number"));
    let (width, height, maxval) = (parse(&tokens[1])?, parse(&tokens[2])?, parse(&tokens[3])?);
    if pos > bytes.len() {
        return Err(bad("truncated header"));
    }
    Ok(PpmContents { width, height, maxval, pixels: bytes[pos..].to_vec() })
}
