//! Deterministic SVG rendering of drawings.

use std::fmt::Write;

use crate::drawing::Drawing;
use crate::validator::scan;

#[derive(Clone, Debug)]
pub struct SvgOptions {
    /// Width and height of the viewport in pixels.
    pub size: f64,
    /// Digits after the decimal point for rendered coordinates.
    pub precision: usize,
    pub mark_crossings: bool,
    pub show_labels: bool,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions {
            size: 600.0,
            precision: 3,
            mark_crossings: true,
            show_labels: true,
        }
    }
}

/// Renders `d`; coordinates are rounded only for display.
pub fn to_svg(d: &Drawing, opts: &SvgOptions) -> String {
    let points: Vec<(f64, f64)> = d
        .polylines()
        .iter()
        .flatten()
        .chain(d.positions())
        .map(|p| p.to_f64())
        .collect();
    let (mut xmin, mut xmax, mut ymin, mut ymax) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    if let Some(&(x0, y0)) = points.first() {
        (xmin, xmax, ymin, ymax) = (x0, x0, y0, y0);
        for &(x, y) in &points {
            xmin = xmin.min(x);
            xmax = xmax.max(x);
            ymin = ymin.min(y);
            ymax = ymax.max(y);
        }
    }
    let margin = 0.05 * opts.size;
    let span = (xmax - xmin).max(ymax - ymin);
    let scale = if span > 0.0 {
        (opts.size - 2.0 * margin) / span
    } else {
        1.0
    };
    let prec = opts.precision;
    // y grows downward in SVG.
    let map = |(x, y): (f64, f64)| {
        (
            format!("{:.prec$}", margin + (x - xmin) * scale),
            format!("{:.prec$}", margin + (ymax - y) * scale),
        )
    };

    let mut out = String::new();
    let size = format!("{:.prec$}", opts.size);
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#
    )
    .unwrap();
    writeln!(out, r#"<g fill="none" stroke="black" stroke-width="1">"#).unwrap();
    for (e, line) in d.polylines().iter().enumerate() {
        let pts: Vec<String> = line
            .iter()
            .map(|p| {
                let (x, y) = map(p.to_f64());
                format!("{x},{y}")
            })
            .collect();
        writeln!(
            out,
            r#"<polyline data-edge="{}" points="{}"/>"#,
            d.graph().edge_key(e),
            pts.join(" ")
        )
        .unwrap();
    }
    writeln!(out, "</g>").unwrap();
    if opts.mark_crossings {
        writeln!(out, r#"<g fill="red" class="crossings">"#).unwrap();
        for r in scan(d).records {
            let (x, y) = map(r.point.to_f64());
            writeln!(out, r#"<circle class="crossing" cx="{x}" cy="{y}" r="4"/>"#).unwrap();
        }
        writeln!(out, "</g>").unwrap();
    }
    writeln!(out, r#"<g fill="white" stroke="black">"#).unwrap();
    for (v, p) in d.positions().iter().enumerate() {
        let (x, y) = map(p.to_f64());
        writeln!(
            out,
            r#"<circle data-vertex="{}" cx="{x}" cy="{y}" r="5"/>"#,
            d.graph().label(v)
        )
        .unwrap();
    }
    writeln!(out, "</g>").unwrap();
    if opts.show_labels {
        writeln!(
            out,
            r#"<g font-family="sans-serif" font-size="11" fill="blue">"#
        )
        .unwrap();
        for (v, p) in d.positions().iter().enumerate() {
            let (x, y) = map(p.to_f64());
            writeln!(
                out,
                r#"<text x="{x}" y="{y}" dx="6" dy="-6">{}</text>"#,
                d.graph().label(v)
            )
            .unwrap();
        }
        writeln!(out, "</g>").unwrap();
    }
    out.push_str("</svg>\n");
    out
}
