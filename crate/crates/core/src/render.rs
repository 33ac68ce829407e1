//! DOT and SVG drawings of meanders.

use std::fmt::Write;

use crate::meander::{DirectedMeander, Meander, Side};

const UNIT: f64 = 40.0;
const MARGIN: f64 = 20.0;

/// Undirected meander as a DOT graph with vertices pinned on a line.
pub fn to_dot(m: &Meander) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph meander {{");
    let _ = writeln!(out, "  label=\"{}\";", m.seaweed_type());
    write_vertices(&mut out, m.n());
    for side in [Side::Top, Side::Bottom] {
        for &(u, v) in m.arcs(side) {
            let _ = writeln!(out, "  v{u} -- v{v} [side={}];", side_name(side));
        }
    }
    out.push_str("}\n");
    out
}

/// Directed meander as a DOT digraph.
pub fn to_dot_directed(dm: &DirectedMeander) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph meander {{");
    let _ = writeln!(out, "  label=\"{}\";", dm.seaweed_type());
    write_vertices(&mut out, dm.n());
    for (side, edges) in [(Side::Top, dm.top_edges()), (Side::Bottom, dm.bottom_edges())] {
        for &(u, v) in edges {
            let _ = writeln!(out, "  v{u} -> v{v} [side={}];", side_name(side));
        }
    }
    out.push_str("}\n");
    out
}

fn write_vertices(out: &mut String, n: usize) {
    for v in 1..=n {
        let _ = writeln!(out, "  v{v} [label=\"{v}\", pos=\"{v},0!\"];");
    }
}

fn side_name(side: Side) -> &'static str {
    match side {
        Side::Top => "top",
        Side::Bottom => "bottom",
    }
}

fn x_of(v: usize) -> f64 {
    MARGIN + UNIT * (v as f64 - 1.0)
}

/// Semicircle from `from` to `to`, above the line for top arcs.
fn arc_path(from: usize, to: usize, side: Side, baseline: f64) -> String {
    let (x1, x2) = (x_of(from), x_of(to));
    let r = (x2 - x1).abs() / 2.0;
    // SVG y grows downward: sweep 1 runs clockwise, which is above the line
    // when travelling left to right.
    let left_to_right = x2 > x1;
    let sweep = u8::from((side == Side::Top) == left_to_right);
    format!("M {x1} {baseline} A {r} {r} 0 0 {sweep} {x2} {baseline}")
}

fn svg(n: usize, arcs: &[(usize, usize, Side)], directed: bool, title: &str) -> String {
    let longest = arcs.iter().map(|&(u, v, _)| u.abs_diff(v)).max().unwrap_or(1) as f64;
    let half = UNIT * longest / 2.0 + MARGIN;
    let width = 2.0 * MARGIN + UNIT * (n as f64 - 1.0);
    let height = 2.0 * half;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(out, "  <title>{title}</title>");
    if directed {
        out.push_str(concat!(
            r#"  <defs><marker id="head" viewBox="0 0 10 10" refX="10" refY="5" markerWidth="6" markerHeight="6" orient="auto">"#,
            r#"<path d="M 0 0 L 10 5 L 0 10 z"/></marker></defs>"#,
            "\n"
        ));
    }
    let marker = if directed { r#" marker-end="url(#head)""# } else { "" };
    for &(u, v, side) in arcs {
        let _ = writeln!(
            out,
            r#"  <path class="{}" d="{}" fill="none" stroke="black"{marker}/>"#,
            side_name(side),
            arc_path(u, v, side, half)
        );
    }
    for v in 1..=n {
        let _ = writeln!(out, r#"  <circle cx="{}" cy="{half}" r="4" fill="white" stroke="black"/>"#, x_of(v));
    }
    out.push_str("</svg>\n");
    out
}

pub fn to_svg(m: &Meander) -> String {
    let arcs: Vec<_> = [Side::Top, Side::Bottom]
        .into_iter()
        .flat_map(|s| m.arcs(s).iter().map(move |&(u, v)| (u, v, s)))
        .collect();
    svg(m.n(), &arcs, false, &m.seaweed_type().to_string())
}

pub fn to_svg_directed(dm: &DirectedMeander) -> String {
    let arcs: Vec<_> = dm
        .top_edges()
        .iter()
        .map(|&(u, v)| (u, v, Side::Top))
        .chain(dm.bottom_edges().iter().map(|&(u, v)| (u, v, Side::Bottom)))
        .collect();
    svg(dm.n(), &arcs, true, &dm.seaweed_type().to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::meander::{build_meander, orient};
    use crate::typesym::parse_type;

    #[test]
    fn dot_lists_every_arc() {
        let m = build_meander(&parse_type("2|4/1|2|3").unwrap());
        let dot = to_dot(&m);
        assert!(dot.starts_with("graph meander {"));
        assert_eq!(dot.matches(" -- ").count(), 5);
        assert!(dot.contains("v1 -- v2 [side=top];"));
        let directed = to_dot_directed(&orient(&m));
        assert!(directed.contains("v2 -> v1 [side=top];"));
        assert!(directed.contains("v4 -> v6 [side=bottom];"));
    }

    #[test]
    fn svg_shapes() {
        let m = build_meander(&parse_type("2|4/1|2|3").unwrap());
        let s = to_svg(&m);
        assert_eq!(s.matches("<path").count(), 5);
        assert_eq!(s.matches("<circle").count(), 6);
        assert!(!s.contains("marker"));
        let d = to_svg_directed(&orient(&m));
        assert_eq!(d.matches(r#"marker-end="url(#head)""#).count(), 5);
    }

    #[test]
    fn arcs_bend_to_their_side() {
        // Top arc 1 -> 2 runs clockwise; bottom arc 1 -> 2 counterclockwise.
        assert!(arc_path(1, 2, Side::Top, 0.0).ends_with("0 0 1 60 0"));
        assert!(arc_path(1, 2, Side::Bottom, 0.0).ends_with("0 0 0 60 0"));
        assert!(arc_path(2, 1, Side::Top, 0.0).ends_with("0 0 0 20 0"));
    }
}
