//! SVG rendering of one-dimensional tiling patches.
//!
//! A patch is drawn as a horizontal line split into a-intervals (length τ,
//! blue) and b-intervals (length 1, red) with letter labels, tick marks at
//! every patch point, and emphasized black markers with labels at the
//! origin and at caller-selected points. All coordinates are derived from
//! exact surds via the deterministic decimal printer, so the same spec
//! always produces byte-identical output.

use crate::error::Error;
use crate::model_set::Patch;
use crate::ring::RingElement;
use crate::surd::HalfSurd;
use num_bigint::BigInt;
use std::fmt::Write as _;

const COLOR_A: &str = "#1f4fd8"; // a-intervals, length τ
const COLOR_B: &str = "#d82f2f"; // b-intervals, length 1

#[derive(Debug, Clone)]
pub struct RenderSpec {
    /// Patch iterations to render (doubled substitutions of a|a).
    pub iterations: u32,
    /// Points to emphasize, each with a text label. Must lie within the
    /// patch hull.
    pub markers: Vec<(RingElement, String)>,
    /// Horizontal scale in pixels per unit length.
    pub px_per_unit: u32,
    /// Total image height in pixels.
    pub height: u32,
    /// Optional explicit image width; the intrinsic width is used when
    /// absent (content scales to fit when present).
    pub width: Option<u32>,
}

impl RenderSpec {
    pub fn new(iterations: u32) -> Self {
        RenderSpec {
            iterations,
            markers: Vec::new(),
            px_per_unit: 40,
            height: 120,
            width: None,
        }
    }
}

/// Pixel offset of `value` from the hull's left end, in exact hundredths
/// of a pixel: round((value − origin)·px·100) + margin·100.
fn px_hundredths(value: &HalfSurd, origin: &HalfSurd, px_per_unit: u32, margin: u32) -> BigInt {
    (value - origin)
        .scale(&BigInt::from(100 * px_per_unit as u64))
        .round()
        + BigInt::from(100 * margin as u64)
}

fn format_hundredths(h: &BigInt) -> String {
    let hundred = BigInt::from(100);
    let (int_part, frac_part) = (h / &hundred, h % &hundred);
    format!("{int_part}.{:02}", frac_part)
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

/// Render the patch described by `spec` to SVG text.
pub fn render_svg(spec: &RenderSpec) -> Result<String, Error> {
    let patch = Patch::generate(spec.iterations)?;
    let origin = patch.hull_lo().embed();
    let span = &patch.hull_hi().embed() - &origin;

    let margin: u32 = 30;
    // intrinsic width = span·px_per_unit + 2·margin, rounded up
    let span_px = span.scale(&BigInt::from(spec.px_per_unit));
    let intrinsic_width: BigInt = span_px.floor() + BigInt::from(1) + BigInt::from(2 * margin);
    let width_attr = match spec.width {
        Some(w) => w.to_string(),
        None => intrinsic_width.to_string(),
    };
    let height = spec.height;
    let baseline = height / 2;

    for (marker, label) in &spec.markers {
        let e = marker.embed();
        if e < patch.hull_lo().embed() || e > patch.hull_hi().embed() {
            return Err(Error::MarkerOutsideInterval(label.clone()));
        }
    }

    let coord = |value: &HalfSurd| {
        format_hundredths(&px_hundredths(value, &origin, spec.px_per_unit, margin))
    };
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<?xml version="1.0" encoding="UTF-8" standalone="no"?>"#
    );
    let _ = writeln!(
        svg,
        r#"<svg width="{width_attr}" height="{height}" viewBox="0 0 {intrinsic_width} {height}" xmlns="http://www.w3.org/2000/svg">"#
    );
    let _ = writeln!(
        svg,
        r#"<g font-family="monospace" font-size="12" text-anchor="middle">"#
    );

    // intervals with letter labels
    let points = patch.points();
    let tau = RingElement::tau();
    let mut interval_colors = Vec::with_capacity(points.len().saturating_sub(1));
    for pair in points.windows(2) {
        let is_a = &pair[1] - &pair[0] == tau;
        let (color, letter) = if is_a { (COLOR_A, "a") } else { (COLOR_B, "b") };
        interval_colors.push(color);
        let x1 = coord(&pair[0].embed());
        let x2 = coord(&pair[1].embed());
        let mid_h = (px_hundredths(&pair[0].embed(), &origin, spec.px_per_unit, margin)
            + px_hundredths(&pair[1].embed(), &origin, spec.px_per_unit, margin))
            / BigInt::from(2);
        let mid = format_hundredths(&mid_h);
        let _ = writeln!(
            svg,
            r#"<line x1="{x1}" y1="{baseline}" x2="{x2}" y2="{baseline}" stroke="{color}" stroke-width="4"/>"#
        );
        let _ = writeln!(
            svg,
            r#"<text x="{mid}" y="{label_y}" fill="{color}">{letter}</text>"#,
            label_y = baseline - 12
        );
    }

    // tick marks, colored like the interval they close (the first tick
    // takes the color of the interval it opens)
    for (i, point) in points.iter().enumerate() {
        let color = if i == 0 {
            interval_colors[0]
        } else {
            interval_colors[i - 1]
        };
        let x = coord(&point.embed());
        let _ = writeln!(
            svg,
            r#"<line x1="{x}" y1="{y1}" x2="{x}" y2="{y2}" stroke="{color}" stroke-width="2"/>"#,
            y1 = baseline - 6,
            y2 = baseline + 6
        );
    }

    // emphasized markers: the origin plus the requested points
    let mut emphasized: Vec<(RingElement, String)> = vec![(RingElement::zero(), "0".to_string())];
    emphasized.extend(spec.markers.iter().cloned());
    for (i, (point, label)) in emphasized.iter().enumerate() {
        let x = coord(&point.embed());
        let _ = writeln!(
            svg,
            r##"<line x1="{x}" y1="{y1}" x2="{x}" y2="{y2}" stroke="#000000" stroke-width="2"/>"##,
            y1 = baseline - 10,
            y2 = baseline + 10
        );
        // alternate label rows above and below the line to limit overlap
        let text_y = if i % 2 == 0 {
            baseline + 26
        } else {
            baseline - 22
        };
        let _ = writeln!(
            svg,
            r##"<text x="{x}" y="{text_y}" fill="#000000">{}</text>"##,
            xml_escape(label)
        );
    }

    let _ = writeln!(svg, "</g>");
    let _ = writeln!(svg, "</svg>");
    Ok(svg)
}
