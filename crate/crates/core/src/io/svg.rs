//! Static SVG line chart of temperature profiles.

use std::fmt::Write as _;

use crate::error::{HeatError, Result};
use crate::field::TemperatureField;
use crate::grid::Grid1D;

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 500.0;
const MARGIN_LEFT: f64 = 70.0;
const MARGIN_RIGHT: f64 = 170.0;
const MARGIN_TOP: f64 = 30.0;
const MARGIN_BOTTOM: f64 = 50.0;
const TICKS: usize = 5;

const PALETTE: [&str; 8] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#17becf",
];

fn escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            _ => out.push(c),
        }
    }
    out
}

fn tick_label(v: f64) -> String {
    let s = format!("{v:.3}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}

/// Data range over finite values, padded 5%; a flat range `c` maps to
/// `[c − 1, c + 1]` and no finite data to `[−1, 1]`.
fn y_range(fields: &[TemperatureField]) -> (f64, f64) {
    let (lo, hi) = fields
        .iter()
        .flat_map(|f| f.values.iter().copied())
        .filter(|v| v.is_finite())
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
            (lo.min(v), hi.max(v))
        });
    if !lo.is_finite() {
        return (-1.0, 1.0);
    }
    let span = hi - lo;
    if span == 0.0 {
        return (lo - 1.0, hi + 1.0);
    }
    (lo - 0.05 * span, hi + 0.05 * span)
}

pub fn render_svg_profile(
    fields: &[TemperatureField],
    labels: &[String],
    grid: &Grid1D,
) -> Result<String> {
    if fields.is_empty() {
        return Err(HeatError::Config("nothing to plot".into()));
    }
    if fields.len() != labels.len() {
        return Err(HeatError::Config(format!(
            "{} fields but {} labels",
            fields.len(),
            labels.len()
        )));
    }
    if let Some(f) = fields.iter().find(|f| f.len() != grid.nodes()) {
        return Err(HeatError::Config(format!(
            "field has {} values, grid has {} nodes",
            f.len(),
            grid.nodes()
        )));
    }

    let plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
    let plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM;
    let length = grid.length();
    let (y_lo, y_hi) = y_range(fields);
    let sx = |x: f64| MARGIN_LEFT + x / length * plot_w;
    let sy = |y: f64| MARGIN_TOP + (y_hi - y) / (y_hi - y_lo) * plot_h;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(
        svg,
        r#"<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#
    );
    let _ = writeln!(
        svg,
        r#"<rect x="{MARGIN_LEFT}" y="{MARGIN_TOP}" width="{plot_w}" height="{plot_h}" fill="none" stroke="black"/>"#
    );

    svg.push_str("<g font-family=\"sans-serif\" font-size=\"12\" fill=\"black\">\n");
    for i in 0..TICKS {
        let frac = i as f64 / (TICKS - 1) as f64;
        let x = frac * length;
        let px = sx(x);
        let _ = writeln!(
            svg,
            r#"<line x1="{px:.2}" y1="{b:.2}" x2="{px:.2}" y2="{b2:.2}" stroke="black"/><text x="{px:.2}" y="{t:.2}" text-anchor="middle">{}</text>"#,
            tick_label(x),
            b = MARGIN_TOP + plot_h,
            b2 = MARGIN_TOP + plot_h + 5.0,
            t = MARGIN_TOP + plot_h + 20.0,
        );
        let y = y_lo + frac * (y_hi - y_lo);
        let py = sy(y);
        let _ = writeln!(
            svg,
            r#"<line x1="{l:.2}" y1="{py:.2}" x2="{MARGIN_LEFT:.2}" y2="{py:.2}" stroke="black"/><text x="{t:.2}" y="{ty:.2}" text-anchor="end">{}</text>"#,
            tick_label(y),
            l = MARGIN_LEFT - 5.0,
            t = MARGIN_LEFT - 8.0,
            ty = py + 4.0,
        );
    }
    let _ = writeln!(
        svg,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">position</text>"#,
        MARGIN_LEFT + plot_w / 2.0,
        HEIGHT - 8.0
    );
    let _ = writeln!(
        svg,
        r#"<text x="16" y="{y:.2}" text-anchor="middle" transform="rotate(-90 16 {y:.2})">temperature</text>"#,
        y = MARGIN_TOP + plot_h / 2.0
    );
    svg.push_str("</g>\n");

    for (idx, field) in fields.iter().enumerate() {
        let color = PALETTE[idx % PALETTE.len()];
        let mut points = String::new();
        for (i, v) in field.values.iter().enumerate() {
            if !v.is_finite() {
                continue;
            }
            if !points.is_empty() {
                points.push(' ');
            }
            let _ = write!(points, "{:.2},{:.2}", sx(grid.position(i)), sy(*v));
        }
        let _ = writeln!(
            svg,
            r#"<polyline fill="none" stroke="{color}" stroke-width="1.5" points="{points}"/>"#
        );
    }

    svg.push_str("<g font-family=\"sans-serif\" font-size=\"12\">\n");
    let legend_x = WIDTH - MARGIN_RIGHT + 15.0;
    for (idx, label) in labels.iter().enumerate() {
        let color = PALETTE[idx % PALETTE.len()];
        let y = MARGIN_TOP + 10.0 + 18.0 * idx as f64;
        let _ = writeln!(
            svg,
            r#"<line x1="{legend_x:.2}" y1="{y:.2}" x2="{x2:.2}" y2="{y:.2}" stroke="{color}" stroke-width="2"/><text x="{tx:.2}" y="{ty:.2}">{}</text>"#,
            escape(label),
            x2 = legend_x + 20.0,
            tx = legend_x + 26.0,
            ty = y + 4.0,
        );
    }
    svg.push_str("</g>\n</svg>\n");
    Ok(svg)
}
