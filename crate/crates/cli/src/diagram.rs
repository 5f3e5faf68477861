//! Hand-written SVG and DOT output.
//!
//! Vertices sit on a regular `n`-gon of circumradius 100 px, vertex 1 at the
//! top and numbering clockwise.

use std::fmt::Write as _;

use sixlines::joins::{diagram_edges, Perm};

const RADIUS: f64 = 100.0;
const CENTER: f64 = 130.0;
const SIZE: f64 = 2.0 * CENTER;

fn vertex(k: usize, n: usize, radius: f64) -> (f64, f64) {
    let angle = std::f64::consts::TAU * (k as f64 - 1.0) / n as f64 - std::f64::consts::FRAC_PI_2;
    (CENTER + radius * angle.cos(), CENTER + radius * angle.sin())
}

fn header(s: &mut String) {
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
}

fn points_attr(vs: &[usize], n: usize) -> String {
    vs.iter()
        .map(|&k| {
            let (x, y) = vertex(k, n, RADIUS);
            format!("{x:.3},{y:.3}")
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn labels(s: &mut String, n: usize, prefix: &str) {
    for k in 1..=n {
        let (x, y) = vertex(k, n, RADIUS);
        let _ = writeln!(s, r#"  <circle cx="{x:.3}" cy="{y:.3}" r="3" fill="black"/>"#);
        let (lx, ly) = vertex(k, n, RADIUS + 16.0);
        let _ = writeln!(
            s,
            r#"  <text x="{lx:.3}" y="{ly:.3}" font-family="sans-serif" font-size="14" text-anchor="middle" dominant-baseline="middle">{prefix}{k}</text>"#
        );
    }
}

/// The `n`-gon in light gray, then the closed broken line through
/// `σ(1), …, σ(n)` in input order.
pub fn permutation_svg(sigma: &Perm) -> String {
    let n = sigma.len();
    let mut s = String::new();
    header(&mut s);
    let outline: Vec<usize> = (1..=n).collect();
    let _ = writeln!(
        s,
        r##"  <polygon points="{}" fill="none" stroke="#cccccc" stroke-dasharray="4 3"/>"##,
        points_attr(&outline, n)
    );
    let route: Vec<usize> = sigma.images().iter().map(|&v| v as usize).collect();
    let _ = writeln!(
        s,
        r#"  <polygon class="broken-line" points="{}" fill="none" stroke="black" stroke-width="2"/>"#,
        points_attr(&route, n)
    );
    labels(&mut s, n, "");
    s.push_str("</svg>\n");
    s
}

pub fn permutation_dot(sigma: &Perm) -> String {
    let n = sigma.len();
    let edges: Vec<(u8, u8)> = diagram_edges(sigma);
    graph_dot(&format!("J{sigma}"), "v", n, &edges)
}

pub fn graph_svg(prefix: &str, n: usize, edges: &[(u8, u8)]) -> String {
    let mut s = String::new();
    header(&mut s);
    for &(a, b) in edges {
        let (x1, y1) = vertex(a as usize, n, RADIUS);
        let (x2, y2) = vertex(b as usize, n, RADIUS);
        let _ = writeln!(
            s,
            r#"  <line x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}" stroke="black" stroke-width="2"/>"#
        );
    }
    labels(&mut s, n, prefix);
    s.push_str("</svg>\n");
    s
}

/// Undirected graph with vertices `{prefix}1 … {prefix}n`.
pub fn graph_dot(name: &str, prefix: &str, n: usize, edges: &[(u8, u8)]) -> String {
    let mut s = format!("graph {name} {{\n");
    for k in 1..=n {
        let _ = writeln!(s, "  {prefix}{k};");
    }
    for &(a, b) in edges {
        let _ = writeln!(s, "  {prefix}{a} -- {prefix}{b};");
    }
    s.push_str("}\n");
    s
}
