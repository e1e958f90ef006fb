//! SVG rendering of bigraded charts in Adams coordinates: x = t − s
//! horizontally, y = s vertically. A box stands for a copy of Z, a dot for
//! Z/2 and a labeled dot for any other cyclic order.

use std::fmt::Write;

use anyhow::{bail, Result};
use mcub_core::hopf::{BigradedChart, ChartCell};
use serde::{Deserialize, Serialize};

const UNIT: i64 = 40;
const MARGIN: i64 = 48;
const SPACING: i64 = 12;
/// Largest window drawn, in columns and rows.
pub const MAX_COLUMNS: i64 = 512;
pub const MAX_ROWS: i64 = 256;

/// A differential or extension drawn between two cells, given as (s, t).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub from: (usize, i64),
    pub to: (usize, i64),
    #[serde(default)]
    pub label: Option<String>,
}

#[derive(Clone, Debug)]
pub struct ChartRender {
    pub chart: BigradedChart,
    pub arrows: Vec<Arrow>,
    /// Inclusive window in t − s.
    pub x_range: (i64, i64),
    pub s_max: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Glyph {
    Box,
    Dot,
    Labeled(u64),
}

impl Glyph {
    pub fn name(self) -> String {
        match self {
            Glyph::Box => "box".into(),
            Glyph::Dot => "dot".into(),
            Glyph::Labeled(n) => format!("dot:{n}"),
        }
    }
}

/// Free summands first, then torsion in the listed order.
pub fn glyphs(cell: &ChartCell) -> Vec<Glyph> {
    let mut g = vec![Glyph::Box; cell.rank];
    g.extend(cell.torsion.iter().map(|&n| if n == 2 { Glyph::Dot } else { Glyph::Labeled(n) }));
    g
}

impl ChartRender {
    /// The chart's full extent: t − s over [t_min − s_max, t_max].
    pub fn new(chart: BigradedChart) -> Self {
        let s_max = chart.s_max;
        let x_range = (chart.t_min - s_max as i64, chart.t_max);
        ChartRender {
            chart,
            arrows: Vec::new(),
            x_range,
            s_max,
        }
    }

    fn in_window(&self, s: usize, t: i64) -> bool {
        let x = t - s as i64;
        s <= self.s_max && x >= self.x_range.0 && x <= self.x_range.1
    }

    fn px(&self, x: i64) -> i64 {
        MARGIN + (x - self.x_range.0) * UNIT + UNIT / 2
    }

    fn py(&self, s: usize) -> i64 {
        MARGIN + (self.s_max as i64 - s as i64) * UNIT + UNIT / 2
    }

    /// Deterministic SVG: cells in (s, t) order, then arrows in input order.
    pub fn to_svg(&self) -> Result<String> {
        let (x0, x1) = self.x_range;
        let cols = x1 - x0 + 1;
        let rows = self.s_max as i64 + 1;
        if cols <= 0 {
            bail!("empty horizontal window {x0}..{x1}");
        }
        if cols > MAX_COLUMNS || rows > MAX_ROWS {
            bail!("chart window {cols}x{rows} exceeds render bounds {MAX_COLUMNS}x{MAX_ROWS}");
        }
        let width = cols * UNIT + 2 * MARGIN;
        let height = rows * UNIT + 2 * MARGIN;
        let mut o = String::new();
        writeln!(
            o,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
        )?;
        writeln!(
            o,
            "<title>{}</title>",
            escape(&format!("{} / {} / {}", self.chart.algebroid, self.chart.comodule, self.chart.coefficients))
        )?;
        o.push_str(concat!(
            "<defs><marker id=\"head\" markerWidth=\"8\" markerHeight=\"8\" refX=\"7\" refY=\"4\" orient=\"auto\">",
            "<path d=\"M0,0 L8,4 L0,8 z\"/></marker></defs>\n"
        ));
        writeln!(o, r##"<rect width="{width}" height="{height}" fill="#ffffff"/>"##)?;

        // Grid and axis labels.
        writeln!(o, r##"<g class="grid" stroke="#dddddd" stroke-width="1">"##)?;
        for x in x0..=x1 + 1 {
            let gx = MARGIN + (x - x0) * UNIT;
            writeln!(o, r#"<line x1="{gx}" y1="{MARGIN}" x2="{gx}" y2="{}"/>"#, MARGIN + rows * UNIT)?;
        }
        for y in 0..=rows {
            let gy = MARGIN + y * UNIT;
            writeln!(o, r#"<line x1="{MARGIN}" y1="{gy}" x2="{}" y2="{gy}"/>"#, MARGIN + cols * UNIT)?;
        }
        o.push_str("</g>\n");
        writeln!(o, r#"<g class="axes" font-family="sans-serif" font-size="11" text-anchor="middle">"#)?;
        for x in x0..=x1 {
            writeln!(o, r#"<text x="{}" y="{}">{x}</text>"#, self.px(x), MARGIN + rows * UNIT + 16)?;
        }
        for s in 0..=self.s_max {
            writeln!(o, r#"<text x="{}" y="{}">{s}</text>"#, MARGIN - 14, self.py(s) + 4)?;
        }
        writeln!(o, r#"<text x="{}" y="{}">t−s</text>"#, MARGIN + cols * UNIT / 2, height - 8)?;
        writeln!(o, r#"<text x="12" y="{}">s</text>"#, MARGIN + rows * UNIT / 2)?;
        o.push_str("</g>\n");

        let mut cells: Vec<&ChartCell> = self.chart.cells.iter().filter(|c| self.in_window(c.s, c.t)).collect();
        cells.sort_by_key(|c| (c.s, c.t));
        for c in cells {
            let x = c.t - c.s as i64;
            let (cx, cy) = (self.px(x), self.py(c.s));
            let g = glyphs(c);
            let names: Vec<String> = g.iter().map(|x| x.name()).collect();
            writeln!(
                o,
                r#"<g class="cell" data-s="{}" data-t="{}" data-x="{x}" data-y="{}" data-glyphs="{}">"#,
                c.s,
                c.t,
                c.s,
                names.join(" ")
            )?;
            let n = g.len() as i64;
            for (k, glyph) in g.iter().enumerate() {
                let gx = cx + k as i64 * SPACING - (n - 1) * SPACING / 2;
                match glyph {
                    Glyph::Box => writeln!(o, r#"<rect x="{}" y="{}" width="10" height="10"/>"#, gx - 5, cy - 5)?,
                    Glyph::Dot => writeln!(o, r#"<circle cx="{gx}" cy="{cy}" r="4"/>"#)?,
                    Glyph::Labeled(m) => {
                        writeln!(o, r#"<circle cx="{gx}" cy="{cy}" r="4"/>"#)?;
                        writeln!(
                            o,
                            r#"<text x="{gx}" y="{}" font-family="sans-serif" font-size="9" text-anchor="middle">{m}</text>"#,
                            cy - 7
                        )?;
                    }
                }
            }
            o.push_str("</g>\n");
        }

        for a in &self.arrows {
            if !self.in_window(a.from.0, a.from.1) || !self.in_window(a.to.0, a.to.1) {
                continue;
            }
            let (x1, y1) = (self.px(a.from.1 - a.from.0 as i64), self.py(a.from.0));
            let (x2, y2) = (self.px(a.to.1 - a.to.0 as i64), self.py(a.to.0));
            writeln!(
                o,
                r##"<line class="arrow" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="#000000" marker-end="url(#head)"/>"##
            )?;
            if let Some(l) = &a.label {
                writeln!(
                    o,
                    r#"<text class="arrow-label" x="{}" y="{}" font-family="sans-serif" font-size="9">{}</text>"#,
                    (x1 + x2) / 2 + 4,
                    (y1 + y2) / 2 - 4,
                    escape(l)
                )?;
            }
        }
        o.push_str("</svg>\n");
        Ok(o)
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chart(cells: Vec<ChartCell>) -> BigradedChart {
        BigradedChart {
            algebroid: "test".into(),
            comodule: "unit".into(),
            coefficients: "Z".into(),
            s_max: 2,
            t_min: 0,
            t_max: 4,
            cells,
        }
    }

    #[test]
    fn empty_chart_is_grid_only() {
        let svg = ChartRender::new(chart(Vec::new())).to_svg().unwrap();
        assert!(svg.contains(r#"class="grid""#));
        assert!(!svg.contains(r#"class="cell""#));
        assert!(!svg.contains("<circle"));
    }

    #[test]
    fn glyph_kinds() {
        let c = ChartCell {
            s: 1,
            t: 2,
            rank: 1,
            torsion: vec![2, 3],
        };
        assert_eq!(glyphs(&c), vec![Glyph::Box, Glyph::Dot, Glyph::Labeled(3)]);
        let svg = ChartRender::new(chart(vec![c])).to_svg().unwrap();
        assert_eq!(svg.matches(r#"class="cell""#).count(), 1);
        assert!(svg.contains(r#"data-glyphs="box dot dot:3""#));
    }

    #[test]
    fn arrows_only_from_input() {
        let mut r = ChartRender::new(chart(Vec::new()));
        assert!(!r.to_svg().unwrap().contains(r#"class="arrow""#));
        r.arrows.push(Arrow {
            from: (0, 4),
            to: (2, 3),
            label: Some("d2".into()),
        });
        assert_eq!(r.to_svg().unwrap().matches(r#"class="arrow""#).count(), 1);
    }

    #[test]
    fn oversized_window_rejected() {
        let mut r = ChartRender::new(chart(Vec::new()));
        r.x_range = (0, MAX_COLUMNS + 1);
        assert!(r.to_svg().is_err());
    }
}
