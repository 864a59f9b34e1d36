//! Deterministic SVG rendering of planar (marked) polytopes.
//!
//! The view box is the bounding box plus one lattice unit on every side, at
//! 32 px per unit, with the y axis pointing up. Lattice points are drawn as a
//! grid, the hull as a filled outline, marked vertices as filled dots and
//! unmarked vertices as hollow ones.

use std::fmt::Write as _;

use std::collections::BTreeSet;

use polyinv_core::IntegralPolytope;

use crate::error::CliError;

const UNIT: i64 = 32;
const MARGIN: i64 = 1;
const DOT_RADIUS: i64 = 5;

/// Planar coordinates of the vertices; lines are drawn on the x axis.
fn planar(p: &IntegralPolytope) -> Result<Vec<(i64, i64)>, CliError> {
    if p.dim() > 2 {
        return Err(CliError::unsupported(
            "unsupported_dimension",
            format!("rendering needs dimension <= 2, got {}", p.dim()),
        ));
    }
    p.points()
        .iter()
        .map(|v| {
            let c: Vec<i64> = v
                .coords()
                .iter()
                .map(|x| {
                    i64::try_from(x)
                        .ok()
                        .filter(|x| x.abs() <= 1 << 20)
                        .ok_or_else(|| {
                            CliError::unsupported("too_large", format!("coordinate {x} is too large to render"))
                        })
                })
                .collect::<Result<_, _>>()?;
            Ok((c[0], c.get(1).copied().unwrap_or(0)))
        })
        .collect()
}

pub fn render(p: &IntegralPolytope, marked: &BTreeSet<usize>) -> Result<String, CliError> {
    let pts = planar(p)?;
    let min_x = pts.iter().map(|p| p.0).min().expect("nonempty") - MARGIN;
    let max_x = pts.iter().map(|p| p.0).max().expect("nonempty") + MARGIN;
    let min_y = pts.iter().map(|p| p.1).min().expect("nonempty") - MARGIN;
    let max_y = pts.iter().map(|p| p.1).max().expect("nonempty") + MARGIN;
    let width = (max_x - min_x) * UNIT;
    let height = (max_y - min_y) * UNIT;
    let sx = |x: i64| (x - min_x) * UNIT;
    let sy = |y: i64| (max_y - y) * UNIT;

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    )
    .unwrap();
    writeln!(out, r##"<rect x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>"##).unwrap();
    out.push_str(r##"<g stroke="#d0d0d0" stroke-width="1">"##);
    out.push('\n');
    for x in min_x..=max_x {
        writeln!(out, r#"<line x1="{0}" y1="0" x2="{0}" y2="{height}"/>"#, sx(x)).unwrap();
    }
    for y in min_y..=max_y {
        writeln!(out, r#"<line x1="0" y1="{0}" x2="{width}" y2="{0}"/>"#, sy(y)).unwrap();
    }
    out.push_str("</g>\n");
    if min_x < 0 && 0 < max_x {
        writeln!(out, r##"<line x1="{0}" y1="0" x2="{0}" y2="{height}" stroke="#909090" stroke-width="1"/>"##, sx(0)).unwrap();
    }
    if min_y < 0 && 0 < max_y {
        writeln!(out, r##"<line x1="0" y1="{0}" x2="{width}" y2="{0}" stroke="#909090" stroke-width="1"/>"##, sy(0)).unwrap();
    }
    let outline: Vec<String> = pts.iter().map(|&(x, y)| format!("{},{}", sx(x), sy(y))).collect();
    writeln!(
        out,
        r##"<polygon points="{}" fill="#4a7ab5" fill-opacity="0.25" stroke="#1f3f6e" stroke-width="2"/>"##,
        outline.join(" ")
    )
    .unwrap();
    for (i, &(x, y)) in pts.iter().enumerate() {
        let fill = if marked.contains(&i) { "#000000" } else { "#ffffff" };
        writeln!(
            out,
            r##"<circle cx="{}" cy="{}" r="{DOT_RADIUS}" fill="{fill}" stroke="#000000" stroke-width="2"/>"##,
            sx(x),
            sy(y)
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    Ok(out)
}
