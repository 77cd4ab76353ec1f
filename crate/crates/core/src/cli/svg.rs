//! SVG rendering of a node set: nodes as circles, census lines through at
//! least three nodes as segments clipped to the bounding box with a 10%
//! margin, maximal lines highlighted.

use std::fmt::Write;

use num_traits::{ToPrimitive, Zero};

use crate::gc::LineCensus;
use crate::geometry::{int, rat, Line, NodeSet, Point, Scalar};

const CANVAS: f64 = 600.0;

struct Frame {
    x0: Scalar,
    x1: Scalar,
    y0: Scalar,
    y1: Scalar,
}

impl Frame {
    fn around(nodes: &NodeSet) -> Frame {
        let pts = nodes.nodes();
        let min = |f: fn(&Point) -> &Scalar| {
            pts.iter()
                .map(f)
                .min()
                .cloned()
                .unwrap_or_else(Scalar::zero)
        };
        let max = |f: fn(&Point) -> &Scalar| {
            pts.iter()
                .map(f)
                .max()
                .cloned()
                .unwrap_or_else(Scalar::zero)
        };
        let (xmin, xmax) = (min(|p| &p.x), max(|p| &p.x));
        let (ymin, ymax) = (min(|p| &p.y), max(|p| &p.y));
        let mut side = (&xmax - &xmin).max(&ymax - &ymin);
        if side.is_zero() {
            side = int(1);
        }
        let margin = side * rat(1, 10);
        Frame {
            x0: xmin - &margin,
            x1: xmax + &margin,
            y0: ymin - &margin,
            y1: ymax + margin,
        }
    }

    fn inside(&self, p: &Point) -> bool {
        p.x >= self.x0 && p.x <= self.x1 && p.y >= self.y0 && p.y <= self.y1
    }

    /// Exact intersection of `line` with the frame, as a segment.
    fn clip(&self, line: &Line) -> Option<(Point, Point)> {
        let edges = [
            Line::vertical(&self.x0),
            Line::vertical(&self.x1),
            Line::horizontal(&self.y0),
            Line::horizontal(&self.y1),
        ];
        let mut hits: Vec<Point> = edges
            .iter()
            .filter_map(|e| line.intersection(e))
            .filter(|p| self.inside(p))
            .collect();
        hits.sort();
        hits.dedup();
        match hits.len() {
            0 => None,
            _ => Some((hits[0].clone(), hits[hits.len() - 1].clone())),
        }
    }

    fn to_canvas(&self, p: &Point) -> (f64, f64) {
        let w = (&self.x1 - &self.x0).max(&self.y1 - &self.y0);
        let sx = ((&p.x - &self.x0) / &w).to_f64().unwrap_or(0.0) * CANVAS;
        let sy = ((&self.y1 - &p.y) / &w).to_f64().unwrap_or(0.0) * CANVAS;
        (sx, sy)
    }
}

pub fn render(nodes: &NodeSet) -> String {
    let frame = Frame::around(nodes);
    let census = LineCensus::of(nodes);
    let maximal = nodes.degree() + 1;
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{CANVAS}" height="{CANVAS}" viewBox="0 0 {CANVAS} {CANVAS}">"#
    );
    let _ = writeln!(
        out,
        r#"  <rect x="0" y="0" width="{CANVAS}" height="{CANVAS}" fill="white"/>"#
    );
    for e in census.entries() {
        let is_max = e.count() >= maximal;
        if e.count() < 3 && !is_max {
            continue;
        }
        let Some((p, q)) = frame.clip(&e.line) else {
            continue;
        };
        let (x1, y1) = frame.to_canvas(&p);
        let (x2, y2) = frame.to_canvas(&q);
        let (class, stroke, width) = if is_max {
            ("maximal", "#c0392b", 2.5)
        } else {
            ("line", "#7f8c8d", 1.0)
        };
        let _ = writeln!(
            out,
            r#"  <line class="{class}" x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}" stroke="{stroke}" stroke-width="{width}"><title>{} ({} nodes)</title></line>"#,
            e.line,
            e.count()
        );
    }
    for (i, p) in nodes.nodes().iter().enumerate() {
        let (cx, cy) = frame.to_canvas(p);
        let _ = writeln!(
            out,
            r#"  <circle class="node" cx="{cx:.3}" cy="{cy:.3}" r="5" fill="black"><title>{i}: {p}</title></circle>"#
        );
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::principal_lattice;

    #[test]
    fn triangle_highlights_its_edges() {
        let svg = render(&principal_lattice(1));
        assert_eq!(svg.matches("<circle").count(), 3);
        assert_eq!(svg.matches(r#"class="maximal""#).count(), 3);
    }

    #[test]
    fn lattice4_draws_every_node() {
        let svg = render(&principal_lattice(4));
        assert_eq!(svg.matches("<circle").count(), 15);
        // three edges carry five nodes
        assert_eq!(svg.matches(r#"class="maximal""#).count(), 3);
        assert!(svg.contains(r#"class="line""#));
    }

    #[test]
    fn clipping_stays_in_frame() {
        let nodes = principal_lattice(2);
        let frame = Frame::around(&nodes);
        let (p, q) = frame.clip(&Line::new(1, 1, -2).unwrap()).unwrap();
        assert!(frame.inside(&p) && frame.inside(&q));
        assert_ne!(p, q);
    }
}
