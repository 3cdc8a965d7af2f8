//! SVG 1.1 figures of walls in the `(x, y)` half-plane.

use std::fmt::Write;

use k3walls::rational::to_f64;
use k3walls::WallCurve;

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 420.0;
const MARGIN_LEFT: f64 = 56.0;
const MARGIN_RIGHT: f64 = 170.0;
const MARGIN_TOP: f64 = 24.0;
const MARGIN_BOTTOM: f64 = 44.0;
const PALETTE: [&str; 8] =
    ["#1b9e77", "#d95f02", "#7570b3", "#e7298a", "#66a61e", "#e6ab02", "#a6761d", "#666666"];

pub struct Figure {
    pub title: String,
    /// Legend label and curve for each wall, drawn in order.
    pub walls: Vec<(String, WallCurve)>,
    pub x_range: Option<(f64, f64)>,
    pub y_range: Option<(f64, f64)>,
    /// Height of the dashed horizontal marker.
    pub marker_y: f64,
    pub precision: usize,
}

fn num(value: f64, precision: usize) -> String {
    let s = format!("{value:.precision$}");
    let s = if s.contains('.') { s.trim_end_matches('0').trim_end_matches('.') } else { &s };
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}

fn extent(curve: &WallCurve) -> (f64, f64, f64) {
    match curve {
        WallCurve::Semicircle { center, radius_sq } => {
            let (c, r) = (to_f64(center), to_f64(radius_sq).sqrt());
            (c - r, c + r, r)
        }
        WallCurve::VerticalLine { x0 } => {
            let x = to_f64(x0);
            (x, x, 0.0)
        }
    }
}

fn default_ranges(fig: &Figure) -> ((f64, f64), (f64, f64)) {
    let (mut lo, mut hi, mut top) = (f64::MAX, f64::MIN, fig.marker_y);
    for (_, curve) in &fig.walls {
        let (a, b, r) = extent(curve);
        lo = lo.min(a);
        hi = hi.max(b);
        top = top.max(r);
    }
    if lo > hi {
        (lo, hi) = (-1.0, 1.0);
    }
    let pad = ((hi - lo) * 0.05).max(0.25);
    let x = fig.x_range.unwrap_or((lo - pad, hi + pad));
    let y = fig.y_range.unwrap_or((0.0, (top * 1.15).max(1.0)));
    (x, y)
}

/// A step of the form `{1, 2, 5}·10^k` giving about eight ticks.
fn tick_step(span: f64) -> f64 {
    let raw = span / 8.0;
    let magnitude = 10f64.powf(raw.log10().floor());
    [1.0, 2.0, 5.0, 10.0].into_iter().map(|k| k * magnitude).find(|s| *s >= raw).unwrap_or(magnitude)
}

fn ticks(lo: f64, hi: f64) -> Vec<f64> {
    let step = tick_step(hi - lo);
    let first = (lo / step).ceil() as i64;
    let last = (hi / step).floor() as i64;
    (first..=last).map(|k| k as f64 * step).collect()
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

pub fn render(fig: &Figure) -> String {
    let ((x0, x1), (y0, y1)) = default_ranges(fig);
    let plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
    let plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM;
    let sx = plot_w / (x1 - x0);
    let sy = plot_h / (y1 - y0);
    let px = |x: f64| MARGIN_LEFT + (x - x0) * sx;
    let py = |y: f64| MARGIN_TOP + plot_h - (y - y0) * sy;
    let n = |v: f64| num(v, fig.precision);

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = n(WIDTH),
        h = n(HEIGHT)
    );
    let _ = writeln!(out, "  <title>{}</title>", escape(&fig.title));
    let _ = writeln!(
        out,
        r#"  <defs><clipPath id="plot"><rect x="{}" y="{}" width="{}" height="{}"/></clipPath></defs>"#,
        n(MARGIN_LEFT),
        n(MARGIN_TOP),
        n(plot_w),
        n(plot_h)
    );
    let _ = writeln!(out, r#"  <rect width="100%" height="100%" fill="white"/>"#);

    // axes and ticks
    let _ = writeln!(out, r#"  <g stroke="black" stroke-width="1" font-family="sans-serif" font-size="11">"#);
    let axis_y = py(y0.max(0.0).min(y1));
    let _ = writeln!(
        out,
        r#"    <line x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
        n(px(x0)),
        n(axis_y),
        n(px(x1)),
        n(axis_y)
    );
    let _ = writeln!(
        out,
        r#"    <line x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
        n(px(x0)),
        n(py(y0)),
        n(px(x0)),
        n(py(y1))
    );
    for t in ticks(x0, x1) {
        let x = px(t);
        let _ = writeln!(
            out,
            r#"    <line x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            n(x),
            n(axis_y),
            n(x),
            n(axis_y + 5.0)
        );
        let _ = writeln!(
            out,
            r#"    <text x="{}" y="{}" text-anchor="middle" stroke="none">{}</text>"#,
            n(x),
            n(axis_y + 18.0),
            n(t)
        );
    }
    for t in ticks(y0, y1) {
        let y = py(t);
        let _ = writeln!(
            out,
            r#"    <line x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            n(px(x0) - 5.0),
            n(y),
            n(px(x0)),
            n(y)
        );
        let _ = writeln!(
            out,
            r#"    <text x="{}" y="{}" text-anchor="end" stroke="none">{}</text>"#,
            n(px(x0) - 8.0),
            n(y + 4.0),
            n(t)
        );
    }
    let _ = writeln!(
        out,
        r#"    <text x="{}" y="{}" text-anchor="middle" stroke="none">x</text>"#,
        n(MARGIN_LEFT + plot_w / 2.0),
        n(HEIGHT - 6.0)
    );
    let _ = writeln!(out, r#"    <text x="14" y="{}" stroke="none">y</text>"#, n(MARGIN_TOP + plot_h / 2.0));
    let _ = writeln!(out, "  </g>");

    // walls and the marker line
    let _ = writeln!(out, r#"  <g clip-path="url(#plot)" fill="none" stroke-width="1.5">"#);
    for (i, (label, curve)) in fig.walls.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let path = match curve {
            WallCurve::Semicircle { center, radius_sq } => {
                let (c, r) = (to_f64(center), to_f64(radius_sq).sqrt());
                format!(
                    "M {} {} A {} {} 0 0 1 {} {}",
                    n(px(c - r)),
                    n(py(0.0)),
                    n(r * sx),
                    n(r * sy),
                    n(px(c + r)),
                    n(py(0.0))
                )
            }
            WallCurve::VerticalLine { x0: line } => {
                let x = px(to_f64(line));
                format!("M {} {} L {} {}", n(x), n(py(y0)), n(x), n(py(y1)))
            }
        };
        let _ =
            writeln!(out, r#"    <path d="{path}" stroke="{color}"><title>{}</title></path>"#, escape(label));
    }
    let _ = writeln!(
        out,
        r#"    <line x1="{}" y1="{m}" x2="{}" y2="{m}" stroke="black" stroke-dasharray="6 4"/>"#,
        n(px(x0)),
        n(px(x1)),
        m = n(py(fig.marker_y))
    );
    let _ = writeln!(out, "  </g>");

    // legend
    let lx = WIDTH - MARGIN_RIGHT + 16.0;
    let _ = writeln!(out, r#"  <g font-family="sans-serif" font-size="12">"#);
    for (i, (label, _)) in fig.walls.iter().enumerate() {
        let y = MARGIN_TOP + 10.0 + 18.0 * i as f64;
        let color = PALETTE[i % PALETTE.len()];
        let _ = writeln!(
            out,
            r#"    <line x1="{}" y1="{}" x2="{}" y2="{}" stroke="{color}" stroke-width="2"/>"#,
            n(lx),
            n(y),
            n(lx + 22.0),
            n(y)
        );
        let _ =
            writeln!(out, r#"    <text x="{}" y="{}">{}</text>"#, n(lx + 28.0), n(y + 4.0), escape(label));
    }
    let _ = writeln!(out, "  </g>");
    out.push_str("</svg>\n");
    out
}
