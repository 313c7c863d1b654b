//! Static SVG drawings of tours.
//!
//! A 2-D tour is drawn as one closed path over a chequered board with
//! `(0,0)` at the bottom left. On boards of more dimensions every floor
//! (fixed values of the axes beyond the first two) gets its own panel:
//! steps inside a floor are lines, steps leaving a floor are dots.

use std::collections::BTreeMap;
use std::fmt::Write;

use crate::tour::Tour;

const PANELS_PER_ROW: usize = 8;
const GAP: f64 = 16.0;

fn cell_size(w: u32, h: u32) -> f64 {
    (640.0 / w.max(h) as f64).clamp(2.0, 24.0)
}

pub fn to_svg(t: &Tour) -> String {
    let board = t.board();
    let dims = board.dims();
    let (w, h) = (dims[0], dims[1]);
    let cs = cell_size(w, h);
    let (pw, ph) = (w as f64 * cs, h as f64 * cs);
    let coords: Vec<Vec<i64>> = t.coords().map(|c| c.0).collect();
    let mut floors: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
    for c in &coords {
        let next = floors.len();
        floors.entry(c[2..].to_vec()).or_insert(next);
    }
    for (k, slot) in floors.values_mut().enumerate() {
        *slot = k;
    }
    let labelled = dims.len() > 2;
    let head = if labelled { 14.0 } else { 0.0 };
    let cols = floors.len().min(PANELS_PER_ROW);
    let rows = floors.len().div_ceil(PANELS_PER_ROW);
    let total_w = cols as f64 * (pw + GAP) + GAP;
    let total_h = rows as f64 * (ph + head + GAP) + GAP;
    let origin = |k: usize| {
        let (col, row) = (k % PANELS_PER_ROW, k / PANELS_PER_ROW);
        (GAP + col as f64 * (pw + GAP), GAP + head + row as f64 * (ph + head + GAP))
    };
    let centre = |c: &[i64]| ((c[0] as f64 + 0.5) * cs, (h as f64 - 1.0 - c[1] as f64 + 0.5) * cs);

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<?xml version="1.0" encoding="UTF-8"?>
<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{total_w:.0}" height="{total_h:.0}" viewBox="0 0 {total_w:.1} {total_h:.1}">
<title>({}) tour on {}</title>
<rect width="100%" height="100%" fill="white"/>"#,
        t.mv(),
        board
    );
    let chequer = w * h <= 160 * 160;
    let stroke = (cs / 8.0).max(0.4);
    for (floor, &k) in &floors {
        let (ox, oy) = origin(k);
        let _ = writeln!(s, r#"<g transform="translate({ox:.1},{oy:.1})">"#);
        if labelled {
            let name: Vec<String> = floor.iter().map(i64::to_string).collect();
            let _ = writeln!(s, r#"<text x="0" y="-4" font-family="sans-serif" font-size="11">floor ({})</text>"#, name.join(","));
        }
        let _ = writeln!(s, r##"<rect width="{pw:.1}" height="{ph:.1}" fill="#f4f1ea" stroke="#777" stroke-width="0.5"/>"##);
        if chequer {
            let _ = write!(s, r##"<path fill="#ddd6c6" d=""##);
            for x in 0..w {
                for y in 0..h {
                    if (x + y) % 2 == 1 {
                        let (px, py) = (x as f64 * cs, (h - 1 - y) as f64 * cs);
                        let _ = write!(s, "M{px:.1} {py:.1}h{cs:.1}v{cs:.1}h-{cs:.1}z");
                    }
                }
            }
            let _ = writeln!(s, r#""/>"#);
        }
        let _ = write!(s, r##"<path fill="none" stroke="#b03020" stroke-width="{stroke:.2}" stroke-linejoin="round" d=""##);
        let mut dots = Vec::new();
        let n = coords.len();
        for i in 0..n {
            let (p, q) = (&coords[i], &coords[(i + 1) % n]);
            if p[2..] != floor[..] {
                continue;
            }
            let (x1, y1) = centre(p);
            if q[2..] == floor[..] {
                let (x2, y2) = centre(q);
                let _ = write!(s, "M{x1:.1} {y1:.1}L{x2:.1} {y2:.1}");
            } else {
                dots.push((x1, y1));
            }
            if (coords[(i + n - 1) % n])[2..] != floor[..] {
                dots.push((x1, y1));
            }
        }
        let _ = writeln!(s, r#""/>"#);
        for (x, y) in dots {
            let _ = writeln!(s, r##"<circle cx="{x:.1}" cy="{y:.1}" r="{:.2}" fill="#2050b0"/>"##, cs / 4.0);
        }
        let _ = writeln!(s, "</g>");
    }
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::board::{BoardSpec, Coord, MoveSpec};

    fn small() -> Tour {
        // the eight outer squares of 3x3
        let c: Vec<Coord> = [(0, 0), (2, 1), (0, 2), (1, 0), (2, 2), (0, 1), (2, 0), (1, 2)]
            .iter()
            .map(|&(x, y)| Coord::xy(x, y))
            .collect();
        Tour::from_coords(BoardSpec::rect(3, 3).unwrap(), MoveSpec::new(2, 1).unwrap(), &c).unwrap()
    }

    #[test]
    fn plane_drawing() {
        let svg = to_svg(&small());
        assert!(svg.starts_with("<?xml"));
        assert!(svg.trim_end().ends_with("</svg>"));
        assert_eq!(svg.matches("<g ").count(), 1);
        assert!(!svg.contains("floor"));
        // (0,0) is drawn at the bottom left
        let cs = cell_size(3, 3);
        assert!(svg.contains(&format!("M{:.1} {:.1}L", cs / 2.0, 2.5 * cs)));
    }

    #[test]
    fn one_panel_per_floor() {
        let t = crate::multidim::extend_a1_to_d(2, 28, 3).unwrap();
        let svg = to_svg(&t);
        assert_eq!(svg.matches("<g ").count(), 28);
        assert!(svg.contains("floor (27)"));
        assert!(svg.matches("<circle").count() >= 2 * 28);
    }
}
