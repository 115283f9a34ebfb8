//! SVG drawing: arcs as semicircles over unit-spaced axis positions.

use std::fmt::Write as _;

use super::{Lamination, NONE};

const STEP: f64 = 16.0;
const PALETTE: [&str; 8] = [
    "#1b1b1b", "#c0392b", "#2471a3", "#1e8449", "#9a7d0a", "#7d3c98", "#ca6f1e", "#5d6d7e",
];

impl Lamination {
    pub fn to_svg(&self) -> String {
        let len = self.upper.len();
        let width = (len as f64 + 1.0) * STEP;
        let half = (len as f64 / 2.0 + 1.0) * STEP;
        let height = 2.0 * half;
        let x = |p: usize| (p as f64 + 1.0) * STEP;
        let labels = self.curve_labels();
        let mut out = String::new();
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.0} {height:.0}">"#
        );
        let _ = writeln!(
            out,
            r##"<line x1="0" y1="{half:.1}" x2="{width:.1}" y2="{half:.1}" stroke="#999" stroke-width="0.5"/>"##
        );
        for (m, sweep) in [(&self.upper, 1), (&self.lower, 0)] {
            for p in 0..len {
                let q = m[p];
                if q == NONE || (q as usize) < p {
                    continue;
                }
                let r = (x(q as usize) - x(p)) / 2.0;
                let colour = PALETTE[labels[p].unwrap_or(0) % PALETTE.len()];
                let _ = writeln!(
                    out,
                    r#"<path d="M {:.1} {half:.1} A {r:.1} {r:.1} 0 0 {sweep} {:.1} {half:.1}" fill="none" stroke="{colour}" stroke-width="1.5"/>"#,
                    x(p),
                    x(q as usize)
                );
            }
        }
        for (j, &p) in self.punct.iter().enumerate() {
            let fill = if j == 0 { "#777" } else { "#fff" };
            let _ = writeln!(
                out,
                r##"<circle cx="{:.1}" cy="{half:.1}" r="4" fill="{fill}" stroke="#333"/>"##,
                x(p as usize)
            );
        }
        out.push_str("</svg>\n");
        out
    }
}
