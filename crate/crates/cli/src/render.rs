//! ASCII and SVG pictures of a vertex set on a lattice.

use std::fmt::Write;

use anyhow::{bail, Result};
use clap::ValueEnum;
use latdom::{DominationReport, Lattice, LatticeKind, Topology, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Ascii,
    Svg,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenderStyle {
    pub dominator: char,
    pub dominated: char,
    pub void: char,
    /// Vertices covered more than once.
    pub conflict: char,
    pub format: Format,
}

impl Default for RenderStyle {
    fn default() -> Self {
        RenderStyle {
            dominator: '@',
            dominated: '.',
            void: 'o',
            conflict: 'x',
            format: Format::Ascii,
        }
    }
}

impl RenderStyle {
    pub fn validate(&self) -> Result<()> {
        let g = [self.dominator, self.dominated, self.void, self.conflict];
        for (a, &x) in g.iter().enumerate() {
            if x.is_whitespace() {
                bail!("glyphs must be visible characters");
            }
            if g[a + 1..].contains(&x) {
                bail!("glyph {x:?} is used twice; dominator, dominated, void and conflict glyphs must differ");
            }
        }
        Ok(())
    }

    pub fn render(&self, lat: &Lattice, set: &VertexSet, report: &DominationReport) -> String {
        match self.format {
            Format::Ascii => self.ascii(lat, set, report),
            Format::Svg => svg(lat, set, report),
        }
    }

    fn glyph(&self, member: bool, count: u32) -> char {
        match (member, count) {
            (_, c) if c >= 2 => self.conflict,
            (true, _) => self.dominator,
            (false, 0) => self.void,
            _ => self.dominated,
        }
    }

    fn ascii(&self, lat: &Lattice, set: &VertexSet, report: &DominationReport) -> String {
        let mut out = String::new();
        let mut row = 0;
        for &(c, count) in &report.coverage {
            if c.i != row {
                if row != 0 {
                    out.push('\n');
                }
                row = c.i;
                // triangular rows lean right, one half cell per row
                if lat.kind() == LatticeKind::Triangular {
                    out.extend(std::iter::repeat_n(' ', c.i - 1));
                }
            } else {
                out.push(' ');
            }
            out.push(self.glyph(set.contains(c), count));
        }
        out.push('\n');
        out
    }
}

const STEP: f64 = 40.0;
const MARGIN: f64 = 30.0;

fn position(lat: &Lattice, i: usize, j: usize) -> (f64, f64) {
    let (i, j) = (i as f64 - 1.0, j as f64 - 1.0);
    match lat.kind() {
        LatticeKind::Triangular => (MARGIN + STEP * (j + i / 2.0), MARGIN + STEP * i * 0.866),
        _ => (MARGIN + STEP * j, MARGIN + STEP * i),
    }
}

/// Edges plus one circle per vertex; torus wrap-around edges are left out.
fn svg(lat: &Lattice, set: &VertexSet, report: &DominationReport) -> String {
    let verts = lat.vertices();
    let (mut w, mut h) = (0.0f64, 0.0f64);
    for v in &verts {
        let (x, y) = position(lat, v.i, v.j);
        w = w.max(x);
        h = h.max(y);
    }
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{:.0}" height="{:.0}" viewBox="0 0 {:.0} {:.0}">"#,
        w + MARGIN,
        h + MARGIN,
        w + MARGIN,
        h + MARGIN
    );
    let _ = writeln!(out, r#"<title>{lat}</title>"#);
    let _ = writeln!(out, r##"<g stroke="#999" stroke-width="1">"##);
    for &v in &verts {
        for w in lat.neighbors(v).expect("vertex of the lattice") {
            if w <= v {
                continue;
            }
            let (x1, y1) = position(lat, v.i, v.j);
            let (x2, y2) = position(lat, w.i, w.j);
            if lat.topology() == Topology::Torus && (x1 - x2).hypot(y1 - y2) > 1.5 * STEP {
                continue;
            }
            let _ = writeln!(
                out,
                r#"<line x1="{x1:.1}" y1="{y1:.1}" x2="{x2:.1}" y2="{y2:.1}"/>"#
            );
        }
    }
    out.push_str("</g>\n");
    for &(c, count) in &report.coverage {
        let (x, y) = position(lat, c.i, c.j);
        let (r, fill, stroke) = match (set.contains(c), count) {
            (_, n) if n >= 2 => (7.0, "#d62728", "#d62728"),
            (true, _) => (10.0, "#333", "#333"),
            (false, 0) => (6.0, "#fff", "#333"),
            _ => (6.0, "#bbb", "#bbb"),
        };
        let _ = writeln!(
            out,
            r#"<circle cx="{x:.1}" cy="{y:.1}" r="{r:.0}" fill="{fill}" stroke="{stroke}"><title>({}, {}) covered {count}</title></circle>"#,
            c.i, c.j
        );
    }
    out.push_str("</svg>\n");
    out
}
