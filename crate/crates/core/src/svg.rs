//! Standalone SVG drawing of a meander in canonical form.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::meander::Side;
use crate::perm::SturmPermutation;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SvgStyle {
    /// Distance in pixels between neighbouring crossings on the axis.
    pub scale: u32,
    /// Print the Morse index next to every crossing.
    pub show_morse: bool,
}

impl Default for SvgStyle {
    fn default() -> Self {
        SvgStyle {
            scale: 40,
            show_morse: true,
        }
    }
}

const MARGIN: f64 = 30.0;
const STUB: f64 = 18.0;

/// Renders the canonical meander of `p`: axis, one dot per crossing at
/// abscissa `position(j)` labelled `j`, and semicircular arcs alternating
/// sides. Output is byte-identical for identical inputs.
pub fn render_svg(p: &SturmPermutation, style: &SvgStyle) -> Result<String> {
    if !p.is_meander() {
        return Err(Error::NotMeander);
    }
    let n = p.len();
    let unit = f64::from(style.scale.max(1));
    let diagram = p.diagram();
    let morse = p.morse_indices();

    let reach = |side: Side| {
        diagram
            .arcs_on(side)
            .map(|a| {
                let (lo, hi) = a.interval();
                (hi - lo) as f64 * unit / 2.0
            })
            .fold(0.0f64, f64::max)
    };
    let above = reach(Side::Above).max(STUB);
    let below = reach(Side::Below).max(STUB);
    let x_of = |pos: usize| MARGIN + (pos - 1) as f64 * unit;
    let width = 2.0 * MARGIN + (n - 1) as f64 * unit;
    let height = 2.0 * MARGIN + above + below;
    let axis_y = MARGIN + above;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.1}" height="{height:.1}" viewBox="0 0 {width:.1} {height:.1}">"#
    );
    let _ = writeln!(
        out,
        r#"<line class="axis" x1="0.0" y1="{axis_y:.1}" x2="{width:.1}" y2="{axis_y:.1}" stroke="gray" stroke-width="1"/>"#
    );

    // incoming ray from the southwest, outgoing ray to the northeast
    let (x_first, x_last) = (x_of(1), x_of(n));
    let _ = writeln!(
        out,
        r#"<path class="ray" d="M {:.1} {:.1} L {x_first:.1} {axis_y:.1}" fill="none" stroke="black" stroke-width="1.5"/>"#,
        x_first - STUB,
        axis_y + STUB,
    );
    let _ = writeln!(
        out,
        r#"<path class="ray" d="M {x_last:.1} {axis_y:.1} L {:.1} {:.1}" fill="none" stroke="black" stroke-width="1.5"/>"#,
        x_last + STUB,
        axis_y - STUB,
    );

    for arc in &diagram.arcs {
        let (x1, x2) = (x_of(arc.from_pos), x_of(arc.to_pos));
        let r = (x2 - x1).abs() / 2.0;
        // screen y grows downward: over the top left-to-right is a positive sweep
        let sweep = match (arc.side, arc.is_rightward()) {
            (Side::Above, true) | (Side::Below, false) => 1,
            _ => 0,
        };
        let _ = writeln!(
            out,
            r#"<path class="arc" data-step="{}" d="M {x1:.1} {axis_y:.1} A {r:.1} {r:.1} 0 0 {sweep} {x2:.1} {axis_y:.1}" fill="none" stroke="black" stroke-width="1.5"/>"#,
            arc.curve_step
        );
    }

    for pos in 1..=n {
        let label = p.sigma(pos);
        let x = x_of(pos);
        let _ = writeln!(
            out,
            r#"<circle class="crossing" data-label="{label}" cx="{x:.1}" cy="{axis_y:.1}" r="3.0" fill="black"/>"#
        );
        let _ = writeln!(
            out,
            r#"<text class="label" x="{:.1}" y="{:.1}" font-family="sans-serif" font-size="11">{label}</text>"#,
            x + 4.0,
            axis_y + 13.0
        );
        if style.show_morse {
            let _ = writeln!(
                out,
                r#"<text class="morse" x="{:.1}" y="{:.1}" font-family="sans-serif" font-size="9" fill="firebrick">i={}</text>"#,
                x + 4.0,
                axis_y - 5.0,
                morse.get(label)
            );
        }
    }
    out.push_str("</svg>\n");
    Ok(out)
}
