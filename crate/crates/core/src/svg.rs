//! Deterministic SVG figures of the disc geometry: the interval, the
//! bounding circles (three-circles layout or an Obreshkoff pair for a given
//! k), and a set of plotted points.
//!
//! Rendering is presentation only, so circle parameters may pass through
//! f64; nothing certificate-bearing happens here.

use num_traits::ToPrimitive;

use crate::rat::ComplexRational;
use crate::regions::IntervalLR;

struct Circle {
    cx: f64,
    cy: f64,
    radius: f64,
    class: &'static str,
}

fn rational_f64(x: &crate::rat::Rational) -> f64 {
    x.to_f64().unwrap_or(0.0)
}

fn cot_f64(k: u32) -> f64 {
    match k {
        0 => 0.0,
        1 => 1.0 / 3f64.sqrt(),
        2 => 1.0,
        4 => 3f64.sqrt(),
        _ => {
            // midpoint of the certified enclosure keeps the figure
            // independent of the platform's libm
            let (lo, hi) = crate::regions::cot_pi_over(k + 2, 64);
            (rational_f64(&lo) + rational_f64(&hi)) / 2.0
        }
    }
}

fn scene_circles(iv: &IntervalLR, k: Option<u32>) -> Vec<Circle> {
    let mid = rational_f64(&iv.midpoint());
    let delta = rational_f64(&iv.width()) / 2.0;
    let pair = |h: f64, class: &'static str| -> Vec<Circle> {
        let radius = (delta * delta + h * h).sqrt();
        if h == 0.0 {
            vec![Circle {
                cx: mid,
                cy: 0.0,
                radius,
                class,
            }]
        } else {
            vec![
                Circle {
                    cx: mid,
                    cy: h,
                    radius,
                    class,
                },
                Circle {
                    cx: mid,
                    cy: -h,
                    radius,
                    class,
                },
            ]
        }
    };
    match k {
        None => {
            let mut circles = pair(0.0, "disc-diameter");
            circles.extend(pair(delta * cot_f64(1), "disc-equilateral"));
            circles
        }
        Some(k) => pair(delta * cot_f64(k), "disc-obreshkoff"),
    }
}

fn fmt2(x: f64) -> String {
    let mut v = (x * 100.0).round() / 100.0;
    if v == 0.0 {
        v = 0.0; // avoid "-0.00"
    }
    format!("{v:.2}")
}

/// Renders the interval, its discs, and the given points to a standalone
/// SVG document. Output is byte-identical for identical inputs.
pub fn render_scene(iv: &IntervalLR, k: Option<u32>, points: &[ComplexRational]) -> String {
    let circles = scene_circles(iv, k);
    let mut x_min = f64::INFINITY;
    let mut x_max = f64::NEG_INFINITY;
    let mut y_min = f64::INFINITY;
    let mut y_max = f64::NEG_INFINITY;
    let mut take = |x: f64, y: f64| {
        x_min = x_min.min(x);
        x_max = x_max.max(x);
        y_min = y_min.min(y);
        y_max = y_max.max(y);
    };
    for c in &circles {
        take(c.cx - c.radius, c.cy - c.radius);
        take(c.cx + c.radius, c.cy + c.radius);
    }
    for p in points {
        take(rational_f64(&p.re), rational_f64(&p.im));
    }
    take(rational_f64(iv.l()), 0.0);
    take(rational_f64(iv.r()), 0.0);

    let pad = 0.15 * (x_max - x_min).max(y_max - y_min).max(1e-9);
    x_min -= pad;
    x_max += pad;
    y_min -= pad;
    y_max += pad;
    let scale = 440.0 / (x_max - x_min).max(y_max - y_min);
    let width = (x_max - x_min) * scale;
    let height = (y_max - y_min) * scale;
    let sx = |x: f64| (x - x_min) * scale;
    let sy = |y: f64| (y_max - y) * scale; // SVG y axis points down

    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">\n",
        fmt2(width),
        fmt2(height),
        fmt2(width),
        fmt2(height)
    ));
    out.push_str(
        "  <style>\n    .axis { stroke: #999; stroke-width: 1; }\n    .interval { stroke: #000; stroke-width: 3; }\n    .disc-diameter { stroke: #000; fill: none; stroke-width: 1.5; }\n    .disc-equilateral { stroke: #1f6feb; fill: none; stroke-width: 1.5; }\n    .disc-obreshkoff { stroke: #8250df; fill: none; stroke-width: 1.5; }\n    .point { fill: #d1242f; }\n  </style>\n",
    );
    // real axis
    out.push_str(&format!(
        "  <line class=\"axis\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>\n",
        fmt2(sx(x_min)),
        fmt2(sy(0.0)),
        fmt2(sx(x_max)),
        fmt2(sy(0.0))
    ));
    // the interval (l, r) with end ticks
    let lx = sx(rational_f64(iv.l()));
    let rx = sx(rational_f64(iv.r()));
    let y0 = sy(0.0);
    out.push_str(&format!(
        "  <line class=\"interval\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>\n",
        fmt2(lx),
        fmt2(y0),
        fmt2(rx),
        fmt2(y0)
    ));
    for tick in [lx, rx] {
        out.push_str(&format!(
            "  <line class=\"interval\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>\n",
            fmt2(tick),
            fmt2(y0 - 6.0),
            fmt2(tick),
            fmt2(y0 + 6.0)
        ));
    }
    // circles drawn as two-arc paths
    for c in &circles {
        let r = c.radius * scale;
        let x_left = sx(c.cx - c.radius);
        let x_right = sx(c.cx + c.radius);
        let cy = sy(c.cy);
        out.push_str(&format!(
            "  <path class=\"{}\" d=\"M {} {} A {} {} 0 1 0 {} {} A {} {} 0 1 0 {} {} Z\"/>\n",
            c.class,
            fmt2(x_left),
            fmt2(cy),
            fmt2(r),
            fmt2(r),
            fmt2(x_right),
            fmt2(cy),
            fmt2(r),
            fmt2(r),
            fmt2(x_left),
            fmt2(cy)
        ));
    }
    for p in points {
        out.push_str(&format!(
            "  <circle class=\"point\" cx=\"{}\" cy=\"{}\" r=\"3\"/>\n",
            fmt2(sx(rational_f64(&p.re))),
            fmt2(sy(rational_f64(&p.im)))
        ));
    }
    out.push_str("</svg>\n");
    out
}
