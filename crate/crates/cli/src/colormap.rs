//! Heatmap colormap.
//!
//! Monochrome-to-hot ramp with monotonically increasing luminance: black
//! through red and yellow to white. Entry `i` of the 256-entry table is
//!
//! ```text
//! t = i / 255
//! r = round(255 * min(1, 3t))
//! g = round(255 * clamp(3t - 1, 0, 1))
//! b = round(255 * clamp(3t - 2, 0, 1))
//! ```
//!
//! The full table is listed in `docs/colormap.md`; a test keeps the listing
//! and this implementation in sync.

/// RGB for a normalized intensity index.
pub fn hot_rgb(index: u8) -> [u8; 3] {
    let t = index as f64 / 255.0;
    let channel = |x: f64| (255.0 * x.clamp(0.0, 1.0)).round() as u8;
    [channel(3.0 * t), channel(3.0 * t - 1.0), channel(3.0 * t - 2.0)]
}

/// Map a normalized value in [0, 1] to a color.
pub fn colorize(t: f64) -> [u8; 3] {
    hot_rgb((t.clamp(0.0, 1.0) * 255.0).round() as u8)
}
