use std::fmt::Write as _;

use cubiclines::lines::{Line, LineConfiguration, Realness};
use cubiclines::poly::{QuadExt, Rational};
use num_traits::{Signed, ToPrimitive};

const SIZE: f64 = 440.0;
const C: f64 = SIZE / 2.0;
const R: f64 = 200.0;
const SAMPLES: usize = 96;

fn rf(r: &Rational) -> f64 {
    r.to_f64().expect("finite rational")
}

/// (real part, imaginary part) of a + b·√d.
fn parts(z: &QuadExt) -> (f64, f64) {
    let root = z.d.abs().to_f64().expect("small radicand").sqrt();
    if z.d.is_negative() {
        (rf(&z.a), rf(&z.b) * root)
    } else {
        (rf(&z.a) + rf(&z.b) * root, 0.0)
    }
}

// Poincaré compactification onto the drawing canvas (y axis up)
fn disc(x: f64, y: f64) -> (f64, f64) {
    let n = (1.0 + x * x + y * y).sqrt();
    (C + R * x / n, C - R * y / n)
}

type Point = (f64, f64);

/// Image of the real line u·x + v·y + w = 0: a chord between antipodal boundary
/// points, and where to put its label.
fn chord(u: f64, v: f64, w: f64) -> Option<(Vec<Point>, Point)> {
    let nn = u * u + v * v;
    if nn < 1e-24 {
        return None;
    }
    let (px, py) = (-w * u / nn, -w * v / nn);
    let len = nn.sqrt();
    let (dx, dy) = (-v / len, u / len);
    let scale = 1.0 + (px * px + py * py).sqrt();
    let mut pts = vec![(C - R * dx, C + R * dy)];
    for k in 1..SAMPLES {
        let th = -std::f64::consts::FRAC_PI_2 + std::f64::consts::PI * k as f64 / SAMPLES as f64;
        let t = th.tan() * scale;
        pts.push(disc(px + t * dx, py + t * dy));
    }
    pts.push((C + R * dx, C - R * dy));
    let (lx, ly) = disc(px + 0.6 * scale * dx, py + 0.6 * scale * dy);
    // label just off the chord, on its left side
    Some((pts, (lx - 12.0 * dy, ly - 12.0 * dx)))
}

struct Stroke {
    pts: Vec<Point>,
    label_at: Point,
    dashed: bool,
    multiplicity: u32,
    title: String,
}

fn strokes_of_line(l: &Line) -> Vec<Stroke> {
    let (u, v, w) = (parts(&l.u), parts(&l.v), parts(&l.w));
    // a complex line L = L_r + i·L_i is drawn through its real shadows L_r ± L_i
    let shadows: Vec<(f64, f64, f64)> = match l.realness {
        Realness::Real => vec![(u.0, v.0, w.0)],
        Realness::ComplexConjugatePair => [1.0, -1.0]
            .iter()
            .map(|s| {
                let cand = (u.0 + s * u.1, v.0 + s * v.1, w.0 + s * w.1);
                if cand.0.abs() + cand.1.abs() < 1e-12 { (u.0, v.0, w.0 + s * w.1) } else { cand }
            })
            .collect(),
    };
    shadows
        .into_iter()
        .filter_map(|(a, b, c)| chord(a, b, c))
        .map(|(pts, label_at)| Stroke {
            pts,
            label_at,
            dashed: l.realness == Realness::ComplexConjugatePair,
            multiplicity: l.multiplicity,
            title: l.equation(),
        })
        .collect()
}

fn esc(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// SVG 1.1 picture of the configuration in the Poincaré disc: real lines solid,
/// complex lines dashed, multiplicities above 1 labelled and drawn thicker; the
/// boundary circle is the infinite line.
pub fn render(c: &LineConfiguration, caption: &str) -> String {
    let mut strokes: Vec<Stroke> = c.lines.iter().flat_map(strokes_of_line).collect();
    let width = Rational::new(1.into(), 1_000_000.into());
    for b in &c.blocks {
        let (al, be) = (rf(&b.direction.0), rf(&b.direction.1));
        for theta in b.real_offsets(&width) {
            if let Some((pts, label_at)) = chord(al, be, -rf(&theta)) {
                strokes.push(Stroke {
                    pts,
                    label_at,
                    dashed: false,
                    multiplicity: b.multiplicity,
                    title: format!("{al}x + {be}y = {:.6}", rf(&theta)),
                });
            }
        }
    }
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(out, "  <title>{}</title>", esc(caption));
    let _ = writeln!(out, r#"  <rect width="{SIZE}" height="{SIZE}" fill="white"/>"#);
    let inf = c.infinite_multiplicity;
    let _ = writeln!(
        out,
        r#"  <circle cx="{C}" cy="{C}" r="{R}" fill="none" stroke="black" stroke-width="{}"><title>infinite line</title></circle>"#,
        if inf > 1 { 3.0 } else { 1.5 }
    );
    if inf > 1 {
        let (x, y) = (C + (R + 14.0) * std::f64::consts::FRAC_1_SQRT_2, C - (R + 14.0) * std::f64::consts::FRAC_1_SQRT_2);
        let _ = writeln!(out, r#"  <text x="{x:.2}" y="{y:.2}" font-family="sans-serif" font-size="14">{inf}</text>"#);
    }
    for s in &strokes {
        let pts: Vec<String> = s.pts.iter().map(|(x, y)| format!("{x:.2},{y:.2}")).collect();
        let _ = writeln!(
            out,
            r#"  <polyline points="{}" fill="none" stroke="{}" stroke-width="{}"{}><title>{}</title></polyline>"#,
            pts.join(" "),
            if s.dashed { "#1f5fbf" } else { "black" },
            if s.multiplicity > 1 { 2.6 } else { 1.2 },
            if s.dashed { r#" stroke-dasharray="6 4""# } else { "" },
            esc(&s.title)
        );
        if s.multiplicity > 1 {
            let _ = writeln!(
                out,
                r#"  <text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="14">{}</text>"#,
                s.label_at.0, s.label_at.1, s.multiplicity
            );
        }
    }
    let _ = writeln!(out, "</svg>");
    out
}
