//! Lattice diagrams of reducible parameter points.
//!
//! The plot has `z1` horizontal and `z2` vertical. Reducible rational points
//! are filled circles. A whole column `z1 = a` is drawn as a line when every
//! rational point in it is reducible and so is every point `(a, g)` with `g`
//! generic; rows likewise. Coupled generic points `(a + tau, b - tau)` that
//! are reducible for every pair with the same sum give an anti-diagonal line
//! `z1 + z2 = a + b`. Other generic findings only appear in the legend.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Write};

use gvm_core::harness::SweepReport;
use gvm_core::{ExactScalar, Rational};
use thiserror::Error;

/// User units per lattice unit.
pub const SCALE: f64 = 40.0;
const MARGIN: f64 = 60.0;
const LEGEND_LINE: f64 = 18.0;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("unsupported grid: {0}")]
    UnsupportedGrid(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum BranchKind {
    /// `z1 = value`, any `z2`.
    Vertical,
    /// `z2 = value`, any `z1`.
    Horizontal,
    /// `z1 + z2 = value`.
    AntiDiagonal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Branch {
    pub kind: BranchKind,
    pub value: Rational,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = ExactScalar::from_rational(self.value);
        match self.kind {
            BranchKind::Vertical => write!(f, "z1 = {v}, z2 arbitrary"),
            BranchKind::Horizontal => write!(f, "z2 = {v}, z1 arbitrary"),
            BranchKind::AntiDiagonal => write!(f, "z1 + z2 = {v}, z1 and z2 generic"),
        }
    }
}

/// What a diagram shows, independent of the output format.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeView {
    pub title: String,
    /// Distinct rational `z1` values, ascending.
    pub xs: Vec<Rational>,
    /// Distinct rational `z2` values, ascending.
    pub ys: Vec<Rational>,
    /// Reducibility of each rational point `(z1, z2)`.
    pub points: BTreeMap<(Rational, Rational), bool>,
    pub branches: Vec<Branch>,
    /// `(reducible, total)` over points with a generic coordinate.
    pub generic_counts: (usize, usize),
}

impl LatticeView {
    pub fn reducible_points(&self) -> impl Iterator<Item = (Rational, Rational)> + '_ {
        self.points.iter().filter(|(_, &r)| r).map(|(&k, _)| k)
    }

    /// Reducible points on `z1 = z2`, ascending.
    pub fn diagonal_points(&self) -> Vec<Rational> {
        self.reducible_points().filter(|&(x, y)| x == y).map(|(x, _)| x).collect()
    }

    pub fn branches_of(&self, kind: BranchKind) -> Vec<Rational> {
        self.branches.iter().filter(|b| b.kind == kind).map(|b| b.value).collect()
    }

    pub fn legend(&self) -> Vec<String> {
        let mut out: Vec<String> = self.branches.iter().map(|b| format!("line: {b}")).collect();
        let diagonal = self.diagonal_points();
        if !diagonal.is_empty() {
            let list: Vec<String> = diagonal.iter().map(|v| ExactScalar::from_rational(*v).to_string()).collect();
            out.push(format!("diagonal z1 = z2 reducible at {}", list.join(", ")));
        }
        let (reducible, total) = self.generic_counts;
        if total > 0 {
            out.push(format!("generic points: {reducible} of {total} reducible"));
        }
        out
    }
}

fn all_true<'a>(mut it: impl Iterator<Item = &'a bool>, fallback: bool) -> bool {
    match it.next() {
        None => fallback,
        Some(&first) => first && it.all(|&b| b),
    }
}

/// Collects rational points and detects line branches.
pub fn analyze(report: &SweepReport) -> Result<LatticeView, DiagramError> {
    let mut points = BTreeMap::new();
    let mut column_witness: BTreeMap<Rational, Vec<bool>> = BTreeMap::new();
    let mut row_witness: BTreeMap<Rational, Vec<bool>> = BTreeMap::new();
    let mut coupled: BTreeMap<Rational, Vec<bool>> = BTreeMap::new();
    let mut generic_counts = (0, 0);

    for v in &report.rows {
        match (v.z1.as_rational(), v.z2.as_rational()) {
            (Some(x), Some(y)) => {
                if points.insert((x, y), v.reducible).is_some_and(|old| old != v.reducible) {
                    return Err(DiagramError::UnsupportedGrid(format!("conflicting rows at ({x}, {y})")));
                }
                continue;
            }
            (Some(x), None) => column_witness.entry(x).or_default().push(v.reducible),
            (None, Some(y)) => row_witness.entry(y).or_default().push(v.reducible),
            (None, None) => {
                if let Some(s) = (&v.z1 + &v.z2).as_rational() {
                    coupled.entry(s).or_default().push(v.reducible);
                }
            }
        }
        generic_counts.1 += 1;
        generic_counts.0 += usize::from(v.reducible);
    }

    let xs: Vec<Rational> = points.keys().map(|k| k.0).collect::<BTreeSet<_>>().into_iter().collect();
    let ys: Vec<Rational> = points.keys().map(|k| k.1).collect::<BTreeSet<_>>().into_iter().collect();
    if points.len() != xs.len() * ys.len() {
        return Err(DiagramError::UnsupportedGrid(format!(
            "{} rational points do not fill a {}x{} cartesian grid",
            points.len(),
            xs.len(),
            ys.len()
        )));
    }

    let mut branches = Vec::new();
    for &x in &xs {
        let column = ys.iter().all(|&y| points[&(x, y)]);
        if column && all_true(column_witness.get(&x).into_iter().flatten(), true) {
            branches.push(Branch { kind: BranchKind::Vertical, value: x });
        }
    }
    for &y in &ys {
        let row = xs.iter().all(|&x| points[&(x, y)]);
        if row && all_true(row_witness.get(&y).into_iter().flatten(), true) {
            branches.push(Branch { kind: BranchKind::Horizontal, value: y });
        }
    }
    for (&s, found) in &coupled {
        if all_true(found.iter(), false) {
            branches.push(Branch { kind: BranchKind::AntiDiagonal, value: s });
        }
    }

    Ok(LatticeView { title: report.setup.to_string(), xs, ys, points, branches, generic_counts })
}

fn to_f64(r: Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

fn num(v: f64) -> String {
    let s = format!("{v:.2}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" { "0".to_string() } else { s.to_string() }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

struct Frame {
    x0: f64,
    x1: f64,
    y0: f64,
    y1: f64,
}

impl Frame {
    fn of(view: &LatticeView) -> Frame {
        let f = |r: &Rational| to_f64(*r);
        match (view.xs.first(), view.xs.last(), view.ys.first(), view.ys.last()) {
            (Some(a), Some(b), Some(c), Some(d)) => Frame { x0: f(a), x1: f(b), y0: f(c), y1: f(d) },
            _ => Frame { x0: -1.0, x1: 1.0, y0: -1.0, y1: 1.0 },
        }
    }

    fn px(&self, x: f64) -> f64 {
        MARGIN + (x - self.x0) * SCALE
    }

    fn py(&self, y: f64) -> f64 {
        MARGIN + (self.y1 - y) * SCALE
    }

    fn width(&self) -> f64 {
        2.0 * MARGIN + (self.x1 - self.x0) * SCALE
    }

    fn plot_height(&self) -> f64 {
        2.0 * MARGIN + (self.y1 - self.y0) * SCALE
    }
}

fn branch_segment(b: &Branch, fr: &Frame) -> Option<(f64, f64, f64, f64)> {
    let v = to_f64(b.value);
    match b.kind {
        BranchKind::Vertical => Some((v, fr.y0, v, fr.y1)),
        BranchKind::Horizontal => Some((fr.x0, v, fr.x1, v)),
        BranchKind::AntiDiagonal => {
            let lo = fr.x0.max(v - fr.y1);
            let hi = fr.x1.min(v - fr.y0);
            (lo <= hi).then_some((lo, v - lo, hi, v - hi))
        }
    }
}

/// Standalone SVG document.
pub fn render_svg(view: &LatticeView) -> String {
    let fr = Frame::of(view);
    let legend = view.legend();
    let width = fr.width();
    let height = fr.plot_height() + LEGEND_LINE * (legend.len() as f64 + 1.0);
    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = num(width),
        h = num(height)
    );
    let _ = writeln!(s, "<title>{}</title>", escape(&view.title));
    let _ = writeln!(
        s,
        "<style>.axis{{stroke:#888;stroke-width:1;fill:none}} .branch{{stroke:#c33;stroke-width:2}} \
         .point{{fill:#222}} .diagonal{{fill:#36c}} text{{font-family:sans-serif;font-size:11px}}</style>"
    );

    let ax = 0f64.clamp(fr.x0, fr.x1);
    let ay = 0f64.clamp(fr.y0, fr.y1);
    let _ = writeln!(s, r#"<g id="axes">"#);
    let _ = writeln!(
        s,
        r#"<path class="axis" d="M {} {} H {}"/>"#,
        num(fr.px(fr.x0) - SCALE / 2.0),
        num(fr.py(ay)),
        num(fr.px(fr.x1) + SCALE / 2.0)
    );
    let _ = writeln!(
        s,
        r#"<path class="axis" d="M {} {} V {}"/>"#,
        num(fr.px(ax)),
        num(fr.py(fr.y0) + SCALE / 2.0),
        num(fr.py(fr.y1) - SCALE / 2.0)
    );
    let _ = writeln!(
        s,
        r#"<text x="{}" y="{}">z1</text>"#,
        num(fr.px(fr.x1) + SCALE / 2.0 + 4.0),
        num(fr.py(ay) + 4.0)
    );
    let _ = writeln!(s, r#"<text x="{}" y="{}">z2</text>"#, num(fr.px(ax) - 6.0), num(fr.py(fr.y1) - SCALE / 2.0 - 6.0));
    for t in (fr.x0.ceil() as i64)..=(fr.x1.floor() as i64) {
        let _ = writeln!(s, r#"<text x="{}" y="{}">{t}</text>"#, num(fr.px(t as f64) - 3.0), num(fr.py(ay) + 14.0));
    }
    for t in (fr.y0.ceil() as i64)..=(fr.y1.floor() as i64) {
        let _ = writeln!(s, r#"<text x="{}" y="{}">{t}</text>"#, num(fr.px(ax) - 22.0), num(fr.py(t as f64) + 4.0));
    }
    let _ = writeln!(s, "</g>");

    let _ = writeln!(s, r#"<g id="branches">"#);
    for b in &view.branches {
        if let Some((x1, y1, x2, y2)) = branch_segment(b, &fr) {
            let _ = writeln!(
                s,
                r#"<line class="branch" x1="{}" y1="{}" x2="{}" y2="{}"><title>{}</title></line>"#,
                num(fr.px(x1)),
                num(fr.py(y1)),
                num(fr.px(x2)),
                num(fr.py(y2)),
                escape(&b.to_string())
            );
        }
    }
    let _ = writeln!(s, "</g>");

    let _ = writeln!(s, r#"<g id="points">"#);
    for (x, y) in view.reducible_points() {
        let class = if x == y { "diagonal" } else { "point" };
        let _ = writeln!(
            s,
            r#"<circle class="{class}" cx="{}" cy="{}" r="4"><title>({}, {})</title></circle>"#,
            num(fr.px(to_f64(x))),
            num(fr.py(to_f64(y))),
            ExactScalar::from_rational(x),
            ExactScalar::from_rational(y)
        );
    }
    let _ = writeln!(s, "</g>");

    let _ = writeln!(s, r#"<g id="legend">"#);
    let top = fr.plot_height();
    let _ = writeln!(s, r#"<text x="{}" y="{}">{}</text>"#, num(MARGIN), num(top), escape(&view.title));
    for (i, line) in legend.iter().enumerate() {
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{}">{}</text>"#,
            num(MARGIN),
            num(top + LEGEND_LINE * (i as f64 + 1.0)),
            escape(line)
        );
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(s, "</svg>");
    s
}

/// Character grid: `R` reducible, `·` irreducible, top row is the largest
/// `z2`.
pub fn render_ascii(view: &LatticeView) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{}", view.title);
    let labels: Vec<String> = view.ys.iter().map(|y| ExactScalar::from_rational(*y).to_string()).collect();
    let pad = labels.iter().map(String::len).max().unwrap_or(0).max(2);
    for (y, label) in view.ys.iter().zip(&labels).rev() {
        let cells: Vec<&str> =
            view.xs.iter().map(|x| if view.points[&(*x, *y)] { "R" } else { "·" }).collect();
        let _ = writeln!(s, "{label:>pad$} | {}", cells.join(" "));
    }
    let _ = writeln!(s, "{:>pad$} +{}", "", "-".repeat(2 * view.xs.len()));
    match (view.xs.first(), view.xs.last()) {
        (Some(a), Some(b)) => {
            let _ = writeln!(
                s,
                "{:>pad$}   z1 from {} to {} ({} columns); z2 upward",
                "",
                ExactScalar::from_rational(*a),
                ExactScalar::from_rational(*b),
                view.xs.len()
            );
        }
        _ => {
            let _ = writeln!(s, "{:>pad$}   no rational points", "");
        }
    }
    for line in view.legend() {
        let _ = writeln!(s, "{line}");
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use gvm_core::harness::{sweep, GridBlock, Pairing, ParameterGrid};
    use gvm_core::{LieKind, ParabolicSetup};

    fn ints(lo: i64, hi: i64) -> Vec<ExactScalar> {
        (lo..=hi).map(ExactScalar::from_int).collect()
    }

    #[test]
    fn empty_report_has_axes_only() {
        let s = ParabolicSetup::of(LieKind::A, 4, 1, 3).unwrap();
        let view = analyze(&SweepReport::from_outcomes(s, [])).unwrap();
        let svg = render_svg(&view);
        assert!(svg.contains(r#"class="axis""#));
        assert!(!svg.contains("<circle"));
        assert!(!svg.contains("<line"));
        assert!(render_ascii(&view).contains("no rational points"));
    }

    #[test]
    fn non_cartesian_rational_points_are_rejected() {
        let s = ParabolicSetup::of(LieKind::A, 4, 1, 3).unwrap();
        let grid = ParameterGrid {
            blocks: vec![GridBlock::new(ints(0, 2), ints(0, 2), Pairing::Diagonal).unwrap()],
        };
        assert!(matches!(analyze(&sweep(&s, &grid)), Err(DiagramError::UnsupportedGrid(_))));
    }

    #[test]
    fn ascii_grid_shape() {
        let s = ParabolicSetup::of(LieKind::D, 6, 1, 5).unwrap();
        let grid = ParameterGrid {
            blocks: vec![GridBlock::new(ints(-1, 1), ints(-2, 0), Pairing::Cartesian).unwrap()],
        };
        let text = render_ascii(&analyze(&sweep(&s, &grid)).unwrap());
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "so(12) (p,q)=(1,5)");
        // top row is z2 = 0; z1 = 0 and z1 = 1 are always reducible
        assert!(lines[1].starts_with(" 0 | "));
        assert!(lines[1].ends_with("R R"));
        assert!(lines[4].starts_with("   +------"));
        assert!(text.contains("line: z1 = 0, z2 arbitrary"));
    }

    #[test]
    fn number_formatting() {
        assert_eq!(num(40.0), "40");
        assert_eq!(num(13.3333), "13.33");
        assert_eq!(num(-0.001), "0");
        assert_eq!(num(2.5), "2.5");
    }
}
