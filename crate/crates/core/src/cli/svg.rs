//! SVG rendering of a boundary triple on the unit square of turns.

use std::fmt::Write;

use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::pieces::BoundaryTriple;
use crate::torus_sets::{qi, Point, TorusLine, Q};

pub const SIZE: i64 = 512;
pub const A_COLOR: &str = "blue";
pub const H_COLOR: &str = "red";
pub const P_COLOR: &str = "lightblue";

type Segment = ((Q, Q), (Q, Q));

fn floor(x: Q) -> Q {
    Q::from_integer(x.numer().div_floor(x.denom()))
}

/// Straight pieces of the parameter range `[t0, t0 + len]` of `line` inside `[0,1]²`.
pub fn line_segments(line: &TorusLine, t0: Q, len: Q) -> Vec<Segment> {
    let (b0, b1) = line.base();
    let (u0, v0) = (b0.value(), b1.value());
    let (du, dv) = line.direction();
    let at = |t: Q| (u0 + t * qi(du), v0 + t * qi(dv));
    let t1 = t0 + len;
    let mut cuts = vec![t0, t1];
    for (c0, d) in [(u0, du), (v0, dv)] {
        if d == 0 {
            continue;
        }
        let (a, b) = (c0 + t0 * qi(d), c0 + t1 * qi(d));
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        let mut k = floor(lo);
        while k <= hi {
            let t = (k - c0) / qi(d);
            if t > t0 && t < t1 {
                cuts.push(t);
            }
            k += Q::from_integer(1);
        }
    }
    cuts.sort();
    cuts.dedup();
    cuts.windows(2)
        .map(|w| {
            let m = at((w[0] + w[1]) / qi(2));
            let shift = (floor(m.0), floor(m.1));
            let (s, e) = (at(w[0]), at(w[1]));
            ((s.0 - shift.0, s.1 - shift.1), (e.0 - shift.0, e.1 - shift.1))
        })
        .collect()
}

fn sx(u: Q) -> String {
    format!("{:.6}", (u * qi(SIZE)).to_f64().unwrap_or(f64::NAN))
}

fn sy(v: Q) -> String {
    sx(Q::from_integer(1) - v)
}

fn push_segments(out: &mut String, segs: &[Segment], color: &str, width: u32) {
    for ((a, b), (c, d)) in segs {
        let _ = writeln!(
            out,
            r#"  <line x1="{}" y1="{}" x2="{}" y2="{}" stroke="{color}" stroke-width="{width}"/>"#,
            sx(*a),
            sy(*b),
            sx(*c),
            sy(*d)
        );
    }
}

fn push_point(out: &mut String, p: Point, color: &str) {
    let (u, v) = (p.0.value(), p.1.value());
    let _ = writeln!(out, r#"  <circle cx="{}" cy="{}" r="6" fill="{color}" stroke="black" stroke-width="1"/>"#, sx(u), sy(v));
}

/// `A` blue, `H` red, `P` light blue; ticks at `0`, `π`, `2π` on both axes.
pub fn render_svg(t: &BoundaryTriple, title: &str) -> String {
    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(s, "  <title>{}</title>", xml_escape(title));
    let _ = writeln!(s, r#"  <rect x="0" y="0" width="{SIZE}" height="{SIZE}" fill="white" stroke="black" stroke-width="2"/>"#);
    let half = Q::new(1, 2);
    for (k, label) in [(Q::zero(), "0"), (half, "π"), (Q::from_integer(1), "2π")] {
        let (x, y) = (sx(k), sy(k));
        let _ = writeln!(s, r#"  <line x1="{x}" y1="{SIZE}" x2="{x}" y2="{}" stroke="black" stroke-width="1"/>"#, SIZE - 8);
        let _ = writeln!(s, r#"  <line x1="0" y1="{y}" x2="8" y2="{y}" stroke="black" stroke-width="1"/>"#);
        let _ = writeln!(s, r#"  <text x="{x}" y="{}" font-size="12" text-anchor="middle">{label}</text>"#, SIZE - 12);
        let _ = writeln!(s, r#"  <text x="12" y="{y}" font-size="12" dominant-baseline="middle">{label}</text>"#);
    }
    let full = Q::from_integer(1);
    let a: Vec<Segment> = t.a.lines().iter().flat_map(|l| line_segments(l, Q::zero(), full)).collect();
    push_segments(&mut s, &a, A_COLOR, 2);
    let mut h: Vec<Segment> = t.h.lines().iter().flat_map(|l| line_segments(l, Q::zero(), full)).collect();
    h.extend(t.h.arcs().iter().flat_map(|arc| line_segments(&arc.line, arc.t_start.value(), arc.length())));
    push_segments(&mut s, &h, H_COLOR, 3);
    for p in t.h.points() {
        push_point(&mut s, p, H_COLOR);
    }
    for p in t.p.points() {
        push_point(&mut s, p, P_COLOR);
    }
    s.push_str("</svg>\n");
    s
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
