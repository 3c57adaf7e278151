//! SVG and ASCII renderings of HN polygons on shared axes.

use std::collections::BTreeSet;
use std::fmt::Write;

use hncalc_core::{q, HnPolygon, Rational};

const UNIT: i64 = 40;
const MARGIN: i64 = 48;
const PALETTE: [&str; 6] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf",
];
const MARKERS: [char; 6] = ['*', '+', 'x', 'o', '#', '%'];

/// Integer bounding box `(width, y_min, y_max)` of all polygons, always
/// containing the origin and at least one unit tall and wide.
fn bounds(polygons: &[(String, HnPolygon)]) -> (i64, i64, i64) {
    let pts = polygons
        .iter()
        .flat_map(|(_, p)| p.vertices().iter().copied());
    let (mut w, mut lo, mut hi) = (1, 0, 0);
    for (x, y) in pts {
        w = w.max(x);
        lo = lo.min(y);
        hi = hi.max(y);
    }
    if lo == hi {
        hi += 1;
    }
    (w, lo, hi)
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

/// An SVG 1.1 document. The y axis points up; gridlines sit on integer
/// coordinates and every vertex is labelled with its coordinates.
pub fn svg(polygons: &[(String, HnPolygon)]) -> String {
    let (w, lo, hi) = bounds(polygons);
    let px = |x: i64| MARGIN + x * UNIT;
    let py = |y: i64| MARGIN + (hi - y) * UNIT;
    let legend_height = 18 * polygons.len() as i64;
    let width = 2 * MARGIN + w * UNIT;
    let height = 2 * MARGIN + (hi - lo) * UNIT + legend_height;

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(
        out,
        r#"<rect width="{width}" height="{height}" fill="white"/>"#
    );

    let _ = writeln!(out, r##"<g stroke="#dddddd" stroke-width="1">"##);
    for x in 0..=w {
        let _ = writeln!(
            out,
            r#"<line x1="{0}" y1="{1}" x2="{0}" y2="{2}"/>"#,
            px(x),
            py(hi),
            py(lo)
        );
    }
    for y in lo..=hi {
        let _ = writeln!(
            out,
            r#"<line x1="{1}" y1="{0}" x2="{2}" y2="{0}"/>"#,
            py(y),
            px(0),
            px(w)
        );
    }
    let _ = writeln!(out, "</g>");
    let (x0, x1, y0) = (px(0), px(w), py(0));
    let (top, bottom) = (py(hi), py(lo));
    let _ = writeln!(
        out,
        r##"<g stroke="#555555" stroke-width="1.5"><line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y0}"/><line x1="{x0}" y1="{top}" x2="{x0}" y2="{bottom}"/></g>"##
    );

    let _ = writeln!(
        out,
        r##"<g font-family="monospace" font-size="11" fill="#555555">"##
    );
    for x in 0..=w {
        let _ = writeln!(
            out,
            r#"<text x="{}" y="{}" text-anchor="middle">{x}</text>"#,
            px(x),
            py(lo) + 16
        );
    }
    for y in lo..=hi {
        let _ = writeln!(
            out,
            r#"<text x="{}" y="{}" text-anchor="end">{y}</text>"#,
            px(0) - 8,
            py(y) + 4
        );
    }
    let _ = writeln!(out, "</g>");

    let mut labelled = BTreeSet::new();
    for (i, (name, p)) in polygons.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let points: Vec<String> = p
            .vertices()
            .iter()
            .map(|&(x, y)| format!("{},{}", px(x), py(y)))
            .collect();
        let _ = writeln!(
            out,
            r#"<polyline points="{}" fill="none" stroke="{color}" stroke-width="2.5"><title>{}</title></polyline>"#,
            points.join(" "),
            escape(name)
        );
        for &(x, y) in p.vertices() {
            let _ = writeln!(
                out,
                r#"<circle cx="{}" cy="{}" r="3.5" fill="{color}"/>"#,
                px(x),
                py(y)
            );
            if labelled.insert((x, y)) {
                let _ = writeln!(
                    out,
                    r#"<text x="{}" y="{}" font-family="monospace" font-size="11">({x}, {y})</text>"#,
                    px(x) + 6,
                    py(y) - 6
                );
            }
        }
    }

    let legend_top = py(lo) + 36;
    for (i, (name, _)) in polygons.iter().enumerate() {
        let y = legend_top + 18 * i as i64;
        let color = PALETTE[i % PALETTE.len()];
        let _ = writeln!(
            out,
            r#"<text x="{}" y="{y}" font-family="monospace" font-size="12" fill="{color}">HN({})</text>"#,
            MARGIN,
            escape(name)
        );
    }
    out.push_str("</svg>\n");
    out
}

const COLUMNS_PER_UNIT: i64 = 4;

fn round_half_up(r: Rational) -> i64 {
    (r + q(1, 2)).floor()
}

/// A character plot, one row per unit of degree and four columns per unit
/// of rank, followed by a legend.
pub fn ascii(polygons: &[(String, HnPolygon)]) -> String {
    let (w, lo, hi) = bounds(polygons);
    let cols = (w * COLUMNS_PER_UNIT + 1) as usize;
    let rows = (hi - lo + 1) as usize;
    let row_of = |y: i64| (hi - y) as usize;
    let mut grid = vec![vec![' '; cols]; rows];
    for (c, cell) in grid[row_of(0)].iter_mut().enumerate() {
        *cell = if c as i64 % COLUMNS_PER_UNIT == 0 {
            '+'
        } else {
            '-'
        };
    }
    for row in grid.iter_mut() {
        if row[0] == ' ' {
            row[0] = '|';
        }
    }
    for (i, (_, p)) in polygons.iter().enumerate() {
        let marker = MARKERS[i % MARKERS.len()];
        for c in 0..=p.width() * COLUMNS_PER_UNIT {
            let x = Rational::new(c, COLUMNS_PER_UNIT).expect("nonzero");
            let y = round_half_up(p.evaluate(x).expect("inside the polygon"));
            grid[row_of(y)][c as usize] = marker;
        }
    }
    let label_width = lo.to_string().len().max(hi.to_string().len());
    let mut out = String::new();
    for (r, row) in grid.iter().enumerate() {
        let y = hi - r as i64;
        let line: String = row.iter().collect();
        let _ = writeln!(out, "{y:>label_width$} {}", line.trim_end());
    }
    let mut axis = String::new();
    for x in 0..=w {
        let _ = write!(axis, "{:<width$}", x, width = COLUMNS_PER_UNIT as usize);
    }
    let _ = writeln!(out, "{:label_width$} {}", "", axis.trim_end());
    for (i, (name, _)) in polygons.iter().enumerate() {
        let _ = writeln!(out, "{} HN({name})", MARKERS[i % MARKERS.len()]);
    }
    out
}
