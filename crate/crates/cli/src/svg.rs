//! Deterministic SVG rendering of planar pipeline stages, one panel per stage.

use std::fmt::Write;

use latpolar::{LatticeSet, PolarResult, Rational};
use num_traits::ToPrimitive;

const PANEL: f64 = 240.0;
const MARGIN: f64 = 16.0;
const CAPTION: f64 = 24.0;

/// What a panel draws: a lattice set with its hull, or a rational polygon.
pub enum Shape {
    Lattice(LatticeSet),
    Polygon(Vec<(Rational, Rational)>),
}

pub struct Panel {
    pub caption: String,
    pub shape: Shape,
}

fn to_f64(q: &Rational) -> f64 {
    q.to_f64().expect("finite rational")
}

fn outline(shape: &Shape) -> Vec<(f64, f64)> {
    let corners: Vec<(f64, f64)> = match shape {
        Shape::Lattice(s) => match s.hull() {
            Ok(h) => h
                .vertices()
                .iter()
                .map(|v| (to_f64(&v.coords()[0]), to_f64(&v.coords()[1])))
                .collect(),
            Err(_) => Vec::new(),
        },
        Shape::Polygon(vs) => vs.iter().map(|(x, y)| (to_f64(x), to_f64(y))).collect(),
    };
    counter_clockwise(corners)
}

fn counter_clockwise(mut pts: Vec<(f64, f64)>) -> Vec<(f64, f64)> {
    if pts.is_empty() {
        return pts;
    }
    let k = pts.len() as f64;
    let cx = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let cy = pts.iter().map(|p| p.1).sum::<f64>() / k;
    pts.sort_by(|a, b| {
        let ta = (a.1 - cy).atan2(a.0 - cx);
        let tb = (b.1 - cy).atan2(b.0 - cx);
        ta.total_cmp(&tb)
    });
    pts
}

fn lattice_points(shape: &Shape) -> Vec<(f64, f64)> {
    match shape {
        Shape::Lattice(s) => s
            .points()
            .iter()
            .map(|p| {
                let c = p.coords();
                (
                    c[0].to_f64().expect("finite"),
                    c[1].to_f64().expect("finite"),
                )
            })
            .collect(),
        Shape::Polygon(_) => Vec::new(),
    }
}

/// Integer window `[lo, hi]²` holding every panel, padded by one.
fn window(panels: &[Panel]) -> (i64, i64) {
    let mut lo = -1.0f64;
    let mut hi = 1.0f64;
    for p in panels {
        for (x, y) in outline(&p.shape)
            .into_iter()
            .chain(lattice_points(&p.shape))
        {
            lo = lo.min(x).min(y);
            hi = hi.max(x).max(y);
        }
    }
    (lo.floor() as i64 - 1, hi.ceil() as i64 + 1)
}

pub fn render(panels: &[Panel]) -> String {
    let (lo, hi) = window(panels);
    let span = (hi - lo) as f64;
    let unit = (PANEL - 2.0 * MARGIN) / span;
    let width = PANEL * panels.len() as f64;
    let height = PANEL + CAPTION;
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.0} {height:.0}">"#
    )
    .unwrap();
    writeln!(out, r#"  <rect width="100%" height="100%" fill="white"/>"#).unwrap();
    for (i, panel) in panels.iter().enumerate() {
        let ox = PANEL * i as f64;
        let sx = |x: f64| ox + MARGIN + (x - lo as f64) * unit;
        let sy = |y: f64| MARGIN + (hi as f64 - y) * unit;
        writeln!(out, r#"  <g id="panel-{i}">"#).unwrap();
        for gx in lo..=hi {
            for gy in lo..=hi {
                writeln!(
                    out,
                    r##"    <circle cx="{:.2}" cy="{:.2}" r="1.2" fill="#bbbbbb"/>"##,
                    sx(gx as f64),
                    sy(gy as f64)
                )
                .unwrap();
            }
        }
        writeln!(
            out,
            r#"    <line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="black" stroke-width="0.8"/>"#,
            sx(lo as f64),
            sy(0.0),
            sx(hi as f64),
            sy(0.0)
        )
        .unwrap();
        writeln!(
            out,
            r#"    <line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="black" stroke-width="0.8"/>"#,
            sx(0.0),
            sy(lo as f64),
            sx(0.0),
            sy(hi as f64)
        )
        .unwrap();
        let ring: Vec<String> = outline(&panel.shape)
            .iter()
            .map(|&(x, y)| format!("{:.2},{:.2}", sx(x), sy(y)))
            .collect();
        if !ring.is_empty() {
            writeln!(
                out,
                r##"    <polygon points="{}" fill="#4477aa" fill-opacity="0.15" stroke="#4477aa" stroke-width="1.5"/>"##,
                ring.join(" ")
            )
            .unwrap();
        }
        for (x, y) in lattice_points(&panel.shape) {
            writeln!(
                out,
                r##"    <circle cx="{:.2}" cy="{:.2}" r="3.5" fill="#aa3377"/>"##,
                sx(x),
                sy(y)
            )
            .unwrap();
        }
        writeln!(
            out,
            r#"    <text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="14" text-anchor="middle">{}</text>"#,
            ox + PANEL / 2.0,
            PANEL + CAPTION / 2.0,
            panel.caption
        )
        .unwrap();
        writeln!(out, "  </g>").unwrap();
    }
    writeln!(out, "</svg>").unwrap();
    out
}

/// The quartet `K`, `K_L`, `K_Q*`, `K_Z*`.
pub fn pipeline_panels(r: &PolarResult) -> Vec<Panel> {
    let q_star = r
        .k_q_star
        .vertices()
        .iter()
        .map(|v| (v.coords()[0].clone(), v.coords()[1].clone()))
        .collect();
    vec![
        Panel {
            caption: "K".into(),
            shape: Shape::Lattice(r.k.clone()),
        },
        Panel {
            caption: "K_L".into(),
            shape: Shape::Lattice(r.k_l.clone()),
        },
        Panel {
            caption: "K_Q*".into(),
            shape: Shape::Polygon(q_star),
        },
        Panel {
            caption: "K_Z*".into(),
            shape: Shape::Lattice(r.k_z_star.clone()),
        },
    ]
}
