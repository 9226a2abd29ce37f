use std::fmt::Write;

use super::{DrawingFile, FormatError, LoadedDrawing};
use crate::model::Edge;

/// Pixels per grid unit.
const GRID_UNIT: f64 = 40.0;
/// Pixel size of the longer side of a real drawing.
const REAL_SPAN: f64 = 600.0;

fn num(v: f64) -> String {
    let s = format!("{v:.4}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".into()
    } else {
        s.into()
    }
}

struct Frame {
    lo: (f64, f64),
    hi: (f64, f64),
    unit: f64,
}

impl Frame {
    fn new(points: &[(f64, f64)], grid: bool) -> Self {
        let mut lo = (f64::INFINITY, f64::INFINITY);
        let mut hi = (f64::NEG_INFINITY, f64::NEG_INFINITY);
        for &(x, y) in points {
            lo = (lo.0.min(x), lo.1.min(y));
            hi = (hi.0.max(x), hi.1.max(y));
        }
        if points.is_empty() {
            lo = (0.0, 0.0);
            hi = (0.0, 0.0);
        }
        let span = (hi.0 - lo.0).max(hi.1 - lo.1);
        let unit = if grid || span == 0.0 { GRID_UNIT } else { REAL_SPAN / span };
        Self { lo, hi, unit }
    }

    /// One unit of margin on every side; `y` grows upward.
    fn map(&self, (x, y): (f64, f64)) -> (f64, f64) {
        ((x - self.lo.0 + 1.0) * self.unit, (self.hi.1 - y + 1.0) * self.unit)
    }

    fn size(&self) -> (f64, f64) {
        ((self.hi.0 - self.lo.0 + 2.0) * self.unit, (self.hi.1 - self.lo.1 + 2.0) * self.unit)
    }
}

fn line(out: &mut String, frame: &Frame, class: &str, a: (f64, f64), b: (f64, f64)) {
    let (a, b) = (frame.map(a), frame.map(b));
    let _ = writeln!(out, r#"  <line class="{class}" x1="{}" y1="{}" x2="{}" y2="{}"/>"#, num(a.0), num(a.1), num(b.0), num(b.1));
}

type Scene<'a> = (Vec<(f64, f64)>, &'a [Edge], &'a [Edge], Vec<(f64, f64)>, Vec<(usize, usize)>);

/// SVG 1.1 picture of a drawing: first edge set solid, second bold, dual
/// edges dashed, vertices as disks and face points as squares.
pub fn render_svg(file: &DrawingFile) -> Result<String, FormatError> {
    let loaded = file.load()?;
    let (vertices, edges_a, edges_b, faces, dual): Scene =
        match &loaded {
            LoadedDrawing::Grid(d) => {
                (d.positions.iter().map(|p| (p.x as f64, p.y as f64)).collect(), &d.edges_a, &d.edges_b, Vec::new(), Vec::new())
            }
            LoadedDrawing::Real(d) => (d.positions.iter().map(|p| (p.x, p.y)).collect(), &d.edges_a, &d.edges_b, Vec::new(), Vec::new()),
            LoadedDrawing::Dual(d) => (
                d.positions.iter().map(|p| (p.x, p.y)).collect(),
                &d.edges,
                &[],
                d.face_points.iter().map(|p| (p.x, p.y)).collect(),
                d.dual.adjacency.iter().map(|e| (e.a, e.b)).collect(),
            ),
        };
    let all: Vec<(f64, f64)> = vertices.iter().chain(&faces).copied().collect();
    let frame = Frame::new(&all, matches!(loaded, LoadedDrawing::Grid(_)));
    let (w, h) = frame.size();
    let r = 4.0;

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{}" height="{}" viewBox="0 0 {} {}">"#,
        num(w),
        num(h),
        num(w),
        num(h)
    );
    out.push_str("  <style>\n");
    out.push_str("    .edge-a { stroke: #222; stroke-width: 1.5; }\n");
    out.push_str("    .edge-b { stroke: #c33; stroke-width: 4; }\n");
    out.push_str("    .dual { stroke: #36c; stroke-width: 1.5; stroke-dasharray: 6 4; }\n");
    out.push_str("    .vertex { fill: #000; }\n");
    out.push_str("    .face-point { fill: #fff; stroke: #36c; stroke-width: 1.5; }\n");
    out.push_str("    .label { font: 11px sans-serif; fill: #555; }\n");
    out.push_str("  </style>\n");
    let _ = writeln!(out, "  <title>{} ({})</title>", file.metadata.algorithm.replace(['<', '>', '&'], "_"), file.mode.as_str());
    for e in edges_a {
        line(&mut out, &frame, "edge-a", vertices[e.u.index()], vertices[e.v.index()]);
    }
    for e in edges_b {
        line(&mut out, &frame, "edge-b", vertices[e.u.index()], vertices[e.v.index()]);
    }
    for &(a, b) in &dual {
        line(&mut out, &frame, "dual", faces[a], faces[b]);
    }
    for (f, &p) in faces.iter().enumerate() {
        let (x, y) = frame.map(p);
        let _ = writeln!(
            out,
            r#"  <rect class="face-point" id="f{f}" x="{}" y="{}" width="{}" height="{}"/>"#,
            num(x - r),
            num(y - r),
            num(2.0 * r),
            num(2.0 * r)
        );
    }
    for (i, &p) in vertices.iter().enumerate() {
        let (x, y) = frame.map(p);
        let _ = writeln!(out, r#"  <circle class="vertex" id="v{}" cx="{}" cy="{}" r="{}"/>"#, i + 1, num(x), num(y), num(r));
        let _ = writeln!(out, r#"  <text class="label" x="{}" y="{}">{}</text>"#, num(x + r + 1.0), num(y - r - 1.0), i + 1);
    }
    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::Metadata;
    use crate::layout::{layout_dual_outerplanar, layout_path_matching};
    use crate::model::{OuterplaneEmbedding, SimInstance};

    fn grid_file() -> DrawingFile {
        let d = layout_path_matching(&SimInstance::path_matching(6, &[(1, 4), (2, 6), (3, 5)])).unwrap();
        DrawingFile::from_grid(&d, Metadata::new("path-matching"))
    }

    #[test]
    fn output_is_deterministic() {
        let f = grid_file();
        assert_eq!(render_svg(&f).unwrap(), render_svg(&f).unwrap());
    }

    #[test]
    fn numbers_are_trimmed() {
        assert_eq!(num(40.0), "40");
        assert_eq!(num(2.5), "2.5");
        assert_eq!(num(-0.00001), "0");
        assert_eq!(num(1.0 / 3.0), "0.3333");
    }

    #[test]
    fn grid_lines_sit_on_unit_multiples() {
        let svg = render_svg(&grid_file()).unwrap();
        for l in svg.lines().filter(|l| l.contains("<line")) {
            for attr in ["x1", "y1", "x2", "y2"] {
                let v: f64 = l.split(&format!("{attr}=\"")).nth(1).unwrap().split('"').next().unwrap().parse().unwrap();
                assert_eq!(v % GRID_UNIT, 0.0, "{l}");
            }
        }
    }

    #[test]
    fn y_axis_points_up() {
        let d = crate::Drawing::new(
            vec![crate::Point::new(1i64, 1), crate::Point::new(1, 3)],
            vec![Edge::new(1, 2)],
            vec![],
        );
        let svg = render_svg(&DrawingFile::from_grid(&d, Metadata::new("m"))).unwrap();
        let cy = |id: &str| -> f64 {
            let l = svg.lines().find(|l| l.contains(&format!("id=\"{id}\""))).unwrap();
            l.split("cy=\"").nth(1).unwrap().split('"').next().unwrap().parse().unwrap()
        };
        assert!(cy("v2") < cy("v1"));
    }

    #[test]
    fn dual_edges_are_dashed() {
        let d = layout_dual_outerplanar::<f64>(&OuterplaneEmbedding::polygon(6, &[(1, 3), (3, 5), (1, 5)])).unwrap();
        let svg = render_svg(&DrawingFile::from_dual(&d, Metadata::new("dual-outerplanar"))).unwrap();
        assert_eq!(svg.matches("class=\"dual\"").count(), d.dual.adjacency.len());
        assert_eq!(svg.matches("class=\"face-point\"").count(), 4);
        assert_eq!(svg.matches("class=\"edge-b\"").count(), 0);
    }
}
