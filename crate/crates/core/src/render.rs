//! Standalone SVG drawings of a tiling on its region.
//!
//! The output is plain text built with `write!`, so identical inputs give
//! byte-identical files. Negative lozenges are filled dark, the other two
//! orientations light; removed boundary triangles get a red marker.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{invalid, Result};
use crate::lattice::{Orientation, Triangle};
use crate::regions::Region;
use crate::tilings::Tiling;

const UNIT: f64 = 36.0;
const MARGIN: f64 = 16.0;

struct Frame {
    min_x: i32,
    max_y: i32,
}

impl Frame {
    fn point(&self, (x, y): (i32, i32)) -> (f64, f64) {
        let px = MARGIN + (x - self.min_x) as f64 * UNIT * 3f64.sqrt() / 2.0;
        let py = MARGIN + (self.max_y - y) as f64 * UNIT / 2.0;
        (px, py)
    }

    fn points(&self, corners: &[(i32, i32)]) -> String {
        corners
            .iter()
            .map(|&c| {
                let (x, y) = self.point(c);
                format!("{x:.2},{y:.2}")
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn fill(orientation: Orientation) -> &'static str {
    match orientation {
        Orientation::Negative => "#4a4a4a",
        Orientation::Positive => "#d9d9d9",
        Orientation::Horizontal => "#f4f4f4",
    }
}

/// SVG source for `tiling` drawn over the unit triangles of `region`.
pub fn render_svg(tiling: &Tiling, region: &Region) -> Result<String> {
    let cells = region.triangles();
    if cells.is_empty() || tiling.is_empty() {
        return invalid(format!("region {region} has nothing to draw"));
    }
    if !tiling.partitions(&cells) {
        return invalid(format!("the given lozenges do not tile {region}"));
    }
    let dents = region.dent_triangles();
    let corners: Vec<(i32, i32)> =
        cells.iter().chain(&dents).flat_map(Triangle::vertices).collect();
    let min_x = corners.iter().map(|c| c.0).min().unwrap_or(0);
    let max_x = corners.iter().map(|c| c.0).max().unwrap_or(0);
    let min_y = corners.iter().map(|c| c.1).min().unwrap_or(0);
    let max_y = corners.iter().map(|c| c.1).max().unwrap_or(0);
    let frame = Frame { min_x, max_y };
    let (w, h) = frame.point((max_x, min_y));

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{:.2}" height="{:.2}" viewBox="0 0 {:.2} {:.2}">"#,
        w + MARGIN,
        h + MARGIN,
        w + MARGIN,
        h + MARGIN
    );
    let _ = writeln!(svg, "<title>{region}</title>");
    let _ = writeln!(svg, r##"<g class="lattice" fill="none" stroke="#c8c8c8" stroke-width="0.6">"##);
    for t in &cells {
        let _ = writeln!(svg, r#"<polygon points="{}"/>"#, frame.points(&t.vertices()));
    }
    let _ = writeln!(svg, "</g>");
    let _ = writeln!(svg, r##"<g class="lozenges" stroke="#000000" stroke-width="1.2">"##);
    for l in tiling.lozenges() {
        let _ = writeln!(
            svg,
            r#"<polygon class="{}" fill="{}" points="{}"/>"#,
            orientation_name(l.orientation),
            fill(l.orientation),
            frame.points(&l.outline())
        );
    }
    let _ = writeln!(svg, "</g>");
    if !dents.is_empty() {
        let _ = writeln!(svg, r##"<g class="dents" fill="#d62728" fill-opacity="0.35" stroke="#d62728">"##);
        for t in &dents {
            let _ = writeln!(svg, r#"<polygon class="dent" points="{}"/>"#, frame.points(&t.vertices()));
        }
        let _ = writeln!(svg, "</g>");
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

fn orientation_name(o: Orientation) -> &'static str {
    match o {
        Orientation::Horizontal => "horizontal",
        Orientation::Positive => "positive",
        Orientation::Negative => "negative",
    }
}

/// Writes [`render_svg`] output to `path`.
pub fn emit_svg(tiling: &Tiling, region: &Region, path: &Path) -> Result<()> {
    let svg = render_svg(tiling, region)?;
    std::fs::write(path, svg)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::regions::{HexagonRegion, TrapezoidRegion};
    use crate::shapes::DentSet;
    use crate::tilings::{enumerate_tilings, DEFAULT_TILING_LIMIT};

    #[test]
    fn single_lozenge_trapezoid() {
        let region: Region =
            TrapezoidRegion::with_right_dents(1, 1, DentSet::new(vec![2]).unwrap()).unwrap().into();
        let tilings = enumerate_tilings(&region, DEFAULT_TILING_LIMIT).unwrap();
        assert_eq!(tilings.len(), 1);
        let svg = render_svg(&tilings[0], &region).unwrap();
        assert_eq!(svg.matches(r#"class="negative""#).count(), 1);
        assert_eq!(svg.matches("<polygon class=\"").count(), 1 + svg.matches("class=\"dent\"").count());
        assert!(svg.contains("class=\"dent\""));
    }

    #[test]
    fn hexagon_is_deterministic() {
        let region: Region = HexagonRegion::new(2, 2, 2).unwrap().into();
        let tilings = enumerate_tilings(&region, DEFAULT_TILING_LIMIT).unwrap();
        let a = render_svg(&tilings[7], &region).unwrap();
        assert_eq!(a, render_svg(&tilings[7], &region).unwrap());
        assert_eq!(a.matches("class=\"horizontal\"").count()
            + a.matches("class=\"positive\"").count()
            + a.matches("class=\"negative\"").count(), 12);
        assert!(render_svg(&tilings[0], &HexagonRegion::new(1, 1, 1).unwrap().into()).is_err());
    }
}
