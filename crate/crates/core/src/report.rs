//! Human-readable, JSON and DOT renderings of classifications, the band
//! tables, and survey records.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::classify::{
    self, Classification, Compression, CountMethod, Filling, LongitudinalTerm, RatioBand,
    SpanningSurface, SurveyEntry,
};
use crate::error::{Error, Result};
use crate::slope::{Frame, Slope};
use crate::tree::{self, EvenSlope};

/// Process exit status for a failed command.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::NotASlope(..) | Error::InvalidFrame { .. } | Error::NotEvenSlope(..) => 2,
        Error::Overflow => 2,
        Error::ExceptionalFilling { .. } => 3,
        Error::OddFilling { .. } => 4,
        Error::Inconsistent(_) | Error::BoundTooSmall { .. } => 5,
    }
}

/// Exit status for output that could not be written.
pub const EXIT_IO: i32 = 10;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrameReport {
    pub a: i64,
    pub b: i64,
    /// Torus to knot coordinates.
    pub matrix: [[i64; 2]; 2],
    /// Knot to torus coordinates.
    pub inverse: [[i64; 2]; 2],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateRow {
    pub surface: SpanningSurface,
    pub knot_slope: Slope,
    pub torus_slope: EvenSlope,
    pub bands: u32,
    pub genus: u32,
}

/// Intersection magnitudes of the three candidate torus slopes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Intersections {
    pub k41_k01: u64,
    pub k4m1_k01: u64,
    pub k41_k4m1: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderTerm {
    pub term: LongitudinalTerm,
    pub value: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub band: RatioBand,
    pub z2_classes: u32,
    pub minimal: Vec<SpanningSurface>,
    pub isotopy_classes: Vec<Vec<SpanningSurface>>,
    pub compressions: Vec<Compression>,
    pub unique_surface: SpanningSurface,
    pub unique_genus: u32,
}

/// Position of a vertex in the emitted chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Role {
    #[serde(rename = "root")]
    Root,
    #[serde(rename = "K(4,1)")]
    K41,
    /// One move between `K(4,1)` and `K(0,1)`.
    #[serde(rename = "K(4,1)|K(0,1)")]
    Between41,
    #[serde(rename = "K(0,1)")]
    K01,
    /// One move between `K(0,1)` and `K(4,-1)`.
    #[serde(rename = "K(0,1)|K(4,-1)")]
    Between4m1,
    #[serde(rename = "K(4,-1)")]
    K4m1,
}

impl Role {
    pub fn label(self) -> &'static str {
        match self {
            Role::Root => "root",
            Role::K41 => "K(4,1)",
            Role::Between41 => "K(4,1)|K(0,1)",
            Role::K01 => "K(0,1)",
            Role::Between4m1 => "K(0,1)|K(4,-1)",
            Role::K4m1 => "K(4,-1)",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FigureVertex {
    pub role: Role,
    pub slope: EvenSlope,
    pub bands: u32,
}

/// `from` lies `length` edges of the tree below `to`. Every edge except the
/// one leaving the root has length one; the root edge stands for the whole
/// compression path from the lowest chain vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FigureEdge {
    pub from: EvenSlope,
    pub to: EvenSlope,
    pub length: u32,
}

/// The root together with the five-slope chain
/// `K(4,1) - * - K(0,1) - * - K(4,-1)` in the Möbius-band tree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Figure {
    pub filling: Filling,
    pub band: RatioBand,
    /// Root first, then the chain in the order above.
    pub vertices: Vec<FigureVertex>,
    pub edges: Vec<FigureEdge>,
}

impl Figure {
    pub fn for_filling(f: Filling, method: CountMethod) -> Result<Figure> {
        let frame = Frame::for_filling(f.two_p(), f.q())?;
        let cands = classify::candidates_in(f, &frame, method)?;
        let (i1, i2) = classify::intermediate_slopes_in(&frame)?;
        let vertex = |role, slope| -> Result<FigureVertex> {
            Ok(FigureVertex {
                role,
                slope,
                bands: method.count(slope)?,
            })
        };
        let vertices = vec![
            vertex(Role::Root, EvenSlope::ROOT)?,
            vertex(Role::K41, cands[1].torus_slope)?,
            vertex(Role::Between41, i1)?,
            vertex(Role::K01, cands[0].torus_slope)?,
            vertex(Role::Between4m1, i2)?,
            vertex(Role::K4m1, cands[2].torus_slope)?,
        ];

        let chain = &vertices[1..];
        let mut edges = Vec::new();
        let mut detached = Vec::new();
        for v in chain {
            let up = tree::parent(v.slope).expect("chain avoids the root");
            if up.is_root() || chain.iter().any(|w| w.slope == up) {
                edges.push(FigureEdge {
                    from: up,
                    to: v.slope,
                    length: 1,
                });
            } else {
                detached.push(*v);
            }
        }
        match detached.as_slice() {
            [] => {}
            [low] => edges.push(FigureEdge {
                from: EvenSlope::ROOT,
                to: low.slope,
                length: low.bands,
            }),
            _ => {
                return Err(Error::Inconsistent(format!(
                    "chain of {f} is not connected in the tree"
                )))
            }
        }
        edges.sort_by_key(|e| (vertex_order(&vertices, e.from), vertex_order(&vertices, e.to)));

        let fig = Figure {
            filling: f,
            band: f.band(),
            vertices,
            edges,
        };
        fig.check()?;
        Ok(fig)
    }

    /// The five non-root vertices in chain order.
    pub fn chain(&self) -> &[FigureVertex] {
        &self.vertices[1..]
    }

    /// The chain vertex nearest the root.
    pub fn lowest(&self) -> FigureVertex {
        *self.chain().iter().min_by_key(|v| v.bands).expect("non-empty chain")
    }

    pub fn bands_of(&self, slope: EvenSlope) -> Option<u32> {
        self.vertices.iter().find(|v| v.slope == slope).map(|v| v.bands)
    }

    /// Six vertices, five edges, unit edges join adjacent slopes one band
    /// apart, and the root edge spans exactly the bands of its endpoint.
    pub fn check(&self) -> Result<()> {
        let fail = |what: String| Err(Error::Inconsistent(format!("figure for {}: {what}", self.filling)));
        if self.vertices.len() != 6 || self.edges.len() != 5 {
            return fail(format!("{} vertices, {} edges", self.vertices.len(), self.edges.len()));
        }
        for w in self.chain().windows(2) {
            if !tree::is_adjacent(w[0].slope, w[1].slope) {
                return fail(format!("{} and {} are not adjacent", w[0].slope, w[1].slope));
            }
        }
        for e in &self.edges {
            let (Some(lo), Some(hi)) = (self.bands_of(e.from), self.bands_of(e.to)) else {
                return fail(format!("edge {} -> {} leaves the figure", e.from, e.to));
            };
            if hi != lo + e.length {
                return fail(format!("edge {} -> {} spans {} bands", e.from, e.to, e.length));
            }
            if e.length == 1 && !tree::is_adjacent(e.from, e.to) {
                return fail(format!("edge {} -> {} is not an adjacency", e.from, e.to));
            }
            if e.length != 1 {
                let path = tree::compression_path(e.to);
                if !e.from.is_root() || path.len() != e.length as usize {
                    return fail(format!("descent {} -> {} has the wrong length", e.from, e.to));
                }
            }
        }
        Ok(())
    }

    pub fn render_text(&self) -> String {
        let lowest = self.lowest();
        let mut chain: Vec<_> = self.chain().to_vec();
        if chain.last().map(|v| v.slope) == Some(lowest.slope) {
            chain.reverse();
        }
        let link = |v: &FigureVertex| format!("{}:{}", v.slope, v.bands);
        let joined = chain.iter().map(link).collect::<Vec<_>>().join(" — ");
        let mut out = format!(
            "Relative position in the Möbius-band tree for {} ({})\n",
            self.filling,
            self.band.describe()
        );
        if chain[0].slope == lowest.slope {
            let _ = writeln!(out, "0/1 … {joined}");
        } else {
            let _ = writeln!(out, "0/1 … {}", link(&lowest));
            let _ = writeln!(out, "{joined}");
        }
        for v in self.chain() {
            let _ = writeln!(out, "  {:<16} {:>10}  bands {}", v.role.label(), v.slope.to_string(), v.bands);
        }
        out
    }

    /// Deterministic `digraph` with node IDs `sx_y`.
    pub fn render_dot(&self) -> String {
        let id = |s: EvenSlope| format!("\"s{}_{}\"", s.x(), s.y());
        let mut out = String::from("digraph gamma {\n");
        let _ = writeln!(
            out,
            "  label=\"{} {}\";",
            self.filling,
            self.band.describe()
        );
        out.push_str("  node [shape=box];\n");
        for v in &self.vertices {
            let _ = writeln!(
                out,
                "  {} [label=\"{}\\n{}\\n{}\"];",
                id(v.slope),
                v.slope,
                v.role.label(),
                v.bands
            );
        }
        for e in &self.edges {
            if e.length == 1 {
                let _ = writeln!(out, "  {} -> {};", id(e.from), id(e.to));
            } else {
                let _ = writeln!(
                    out,
                    "  {} -> {} [style=dashed, label=\"{}\"];",
                    id(e.from),
                    id(e.to),
                    e.length
                );
            }
        }
        out.push_str("}\n");
        out
    }
}

fn vertex_order(vertices: &[FigureVertex], s: EvenSlope) -> usize {
    vertices.iter().position(|v| v.slope == s).unwrap_or(usize::MAX)
}

/// Everything computed for one filling.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub filling: Filling,
    pub ratio: [i64; 2],
    pub frame: FrameReport,
    pub candidates: Vec<CandidateRow>,
    pub intersections: Intersections,
    pub longitudinal_order: Vec<Vec<OrderTerm>>,
    pub verdict: Verdict,
    pub figure: Figure,
}

impl Report {
    pub fn build(f: Filling, method: CountMethod) -> Result<Report> {
        let frame = Frame::for_filling(f.two_p(), f.q())?;
        let c = classify::classify_in(f, &frame, method)?;
        Report::assemble(&c, &frame, method)
    }

    fn assemble(c: &Classification, frame: &Frame, method: CountMethod) -> Result<Report> {
        let f = c.filling;
        let mag = |a: EvenSlope, b: EvenSlope| -> Result<u64> {
            u64::try_from(a.slope().intersection(b.slope()).abs()).map_err(|_| Error::Overflow)
        };
        let [k01, k41, k4m1] = c.candidates.map(|x| x.torus_slope);
        let intersections = Intersections {
            k41_k01: mag(k41, k01)?,
            k4m1_k01: mag(k4m1, k01)?,
            k41_k4m1: mag(k41, k4m1)?,
        };
        if (intersections.k41_k01, intersections.k4m1_k01, intersections.k41_k4m1) != (4, 4, 8) {
            return Err(Error::Inconsistent(format!("{f}: intersections {intersections:?}")));
        }
        let (rp, rq) = f.ratio();
        Ok(Report {
            filling: f,
            ratio: [rp, rq],
            frame: FrameReport {
                a: frame.a(),
                b: frame.b(),
                matrix: frame.matrix(),
                inverse: frame.inverse_matrix(),
            },
            candidates: c
                .candidates
                .iter()
                .map(|x| CandidateRow {
                    surface: x.base,
                    knot_slope: x.base.knot_slope(),
                    torus_slope: x.torus_slope,
                    bands: x.bands,
                    genus: x.genus,
                })
                .collect(),
            intersections,
            longitudinal_order: classify::longitudinal_order(f)?
                .into_iter()
                .map(|chain| {
                    chain
                        .into_iter()
                        .map(|(term, value)| OrderTerm { term, value })
                        .collect()
                })
                .collect(),
            verdict: Verdict {
                band: c.band,
                z2_classes: classify::z2_class_count(f),
                minimal: c.minimal.clone(),
                isotopy_classes: c.isotopy_classes.clone(),
                compressions: c.compressions.clone(),
                unique_surface: c.unique_surface,
                unique_genus: c.unique().genus,
            },
            figure: Figure::for_filling(f, method)?,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn render_text(&self) -> String {
        let f = self.filling;
        let v = &self.verdict;
        let mut out = String::new();
        let _ = writeln!(
            out,
            "Filling {f}   p/q = {}/{}   {}",
            self.ratio[0],
            self.ratio[1],
            v.band.describe()
        );
        let _ = writeln!(out, "Non-zero classes in H2(M; Z2): {}", v.z2_classes);
        let m = self.frame.matrix;
        let inv = self.frame.inverse;
        let _ = writeln!(out, "Frame a = {}, b = {}", self.frame.a, self.frame.b);
        let _ = writeln!(out, "  A    = [{:>5} {:>5} ]   A^-1 = [{:>5} {:>5} ]", m[0][0], m[0][1], inv[0][0], inv[0][1]);
        let _ = writeln!(out, "         [{:>5} {:>5} ]          [{:>5} {:>5} ]", m[1][0], m[1][1], inv[1][0], inv[1][1]);
        let _ = writeln!(out, "Candidates");
        let _ = writeln!(out, "  {:<9} {:>6} {:>12} {:>6} {:>6}", "surface", "knot", "torus", "bands", "genus");
        for r in &self.candidates {
            let _ = writeln!(
                out,
                "  {:<9} {:>6} {:>12} {:>6} {:>6}",
                r.surface.closed_name(),
                r.knot_slope.to_string(),
                r.torus_slope.to_string(),
                r.bands,
                r.genus
            );
        }
        let i = &self.intersections;
        let _ = writeln!(
            out,
            "Intersections  |K(4,1).K(0,1)| = {}  |K(4,-1).K(0,1)| = {}  |K(4,1).K(4,-1)| = {}",
            i.k41_k01, i.k4m1_k01, i.k41_k4m1
        );
        let _ = writeln!(out, "Longitudinal coordinates");
        for chain in &self.longitudinal_order {
            let parts: Vec<_> = chain.iter().map(|t| format!("{} = {}", t.term, t.value)).collect();
            let _ = writeln!(out, "  {}", parts.join(" < "));
        }
        let names = |v: &[SpanningSurface]| {
            v.iter().map(|s| s.closed_name()).collect::<Vec<_>>().join(", ")
        };
        let _ = writeln!(out, "Minimal genus: {}", names(&v.minimal));
        let classes: Vec<_> = v.isotopy_classes.iter().map(|c| format!("{{{}}}", names(c))).collect();
        let _ = writeln!(out, "Isotopy classes: {}", classes.join(" "));
        let comps: Vec<_> = v
            .compressions
            .iter()
            .map(|c| format!("{} -> {}", c.from, c.to))
            .collect();
        let _ = writeln!(out, "Compressions: {}", if comps.is_empty() { "none".to_string() } else { comps.join(", ") });
        let _ = writeln!(
            out,
            "Unique geometrically incompressible splitting surface: {} (crosscap number {})",
            v.unique_surface, v.unique_genus
        );
        out.push_str(&self.figure.render_text());
        out
    }
}

/// One row of the band tables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub filling: Filling,
    pub a: i64,
    pub b: i64,
    pub order: Vec<Vec<OrderTerm>>,
    pub genera: [u32; 3],
    pub minimal: Vec<SpanningSurface>,
    pub unique_surface: SpanningSurface,
}

/// A filling whose computed data contradicts its band's table rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub two_p: i64,
    pub q: i64,
    pub reason: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Table {
    pub groups: Vec<(RatioBand, Vec<TableRow>)>,
    pub violations: Vec<Violation>,
}

/// Fillings with `0 <= 2p <= 2 * max_p` and `|q| <= max_q`, optionally
/// restricted to one band.
pub fn build_table(max_p: u32, max_q: u32, only: Option<RatioBand>, method: CountMethod) -> Table {
    let entries = classify::survey(0..=2 * i64::from(max_p), -i64::from(max_q)..=i64::from(max_q), method);
    let mut table = Table {
        groups: RatioBand::ALL
            .into_iter()
            .filter(|b| only.is_none_or(|o| o == *b))
            .map(|b| (b, Vec::new()))
            .collect(),
        violations: Vec::new(),
    };
    for entry in entries {
        match entry {
            SurveyEntry::Classified(c) => {
                let Some(group) = table.groups.iter_mut().find(|g| g.0 == c.band) else {
                    continue;
                };
                let frame = Frame::for_filling(c.filling.two_p(), c.filling.q())
                    .expect("classified fillings have frames");
                let order = classify::longitudinal_order(c.filling)
                    .expect("classified fillings satisfy the order table");
                group.1.push(TableRow {
                    filling: c.filling,
                    a: frame.a(),
                    b: frame.b(),
                    order: order
                        .into_iter()
                        .map(|ch| ch.into_iter().map(|(term, value)| OrderTerm { term, value }).collect())
                        .collect(),
                    genera: c.candidates.map(|x| x.genus),
                    minimal: c.minimal.clone(),
                    unique_surface: c.unique_surface,
                });
            }
            SurveyEntry::Skipped {
                two_p,
                q,
                reason: reason @ (Error::Inconsistent(_) | Error::BoundTooSmall { .. } | Error::Overflow),
            } => {
                let band_matches = classify::validate(two_p, q)
                    .map(|f| only.is_none_or(|o| o == f.band()))
                    .unwrap_or(true);
                if band_matches {
                    table.violations.push(Violation {
                        two_p,
                        q,
                        reason: reason.to_string(),
                    });
                }
            }
            SurveyEntry::Skipped { .. } => {}
        }
    }
    table
}

impl Table {
    pub fn is_empty(&self) -> bool {
        self.groups.iter().all(|g| g.1.is_empty()) && self.violations.is_empty()
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for (band, rows) in &self.groups {
            if rows.is_empty() {
                continue;
            }
            let minimal: Vec<_> = band.table_minimal().iter().map(|s| s.closed_name()).collect();
            let _ = writeln!(out, "== {} ==", band.describe());
            for chain in band.longitudinal_chains() {
                let labels: Vec<_> = chain.iter().map(|t| t.label()).collect();
                let _ = writeln!(out, "   {}", labels.join(" < "));
            }
            let _ = writeln!(out, "   minimal genus: {}", minimal.join(", "));
            let _ = writeln!(
                out,
                "  {:>5} {:>5} {:>5} {:>5}   {:<12} {:<18} {:<8}",
                "2p", "q", "a", "b", "genera", "minimal", "unique"
            );
            for r in rows {
                let genera = format!("{}/{}/{}", r.genera[0], r.genera[1], r.genera[2]);
                let minimal: Vec<_> = r.minimal.iter().map(|s| s.closed_name()).collect();
                let _ = writeln!(
                    out,
                    "  {:>5} {:>5} {:>5} {:>5}   {:<12} {:<18} {:<8}",
                    r.filling.two_p(),
                    r.filling.q(),
                    r.a,
                    r.b,
                    genera,
                    minimal.join(","),
                    r.unique_surface.closed_name()
                );
            }
        }
        for v in &self.violations {
            let _ = writeln!(out, "VIOLATION ({}, {}): {}", v.two_p, v.q, v.reason);
        }
        out
    }
}

/// A survey cell that could not be classified.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkipRecord {
    pub two_p: i64,
    pub q: i64,
    pub code: i32,
    pub reason: String,
}

/// One line of a survey file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "record", rename_all = "lowercase")]
pub enum SurveyRecord {
    Report(Box<Report>),
    Skip(SkipRecord),
}

/// Survey box with `0 <= 2p <= 2 * p_max` and `|q| <= q_max`.
pub fn survey_records(p_max: u32, q_max: u32, method: CountMethod) -> Vec<SurveyRecord> {
    let q_max = i64::from(q_max);
    classify::survey(0..=2 * i64::from(p_max), -q_max..=q_max, method)
        .into_iter()
        .map(|entry| match entry {
            SurveyEntry::Classified(c) => {
                let frame = Frame::for_filling(c.filling.two_p(), c.filling.q())
                    .expect("classified fillings have frames");
                match Report::assemble(&c, &frame, method) {
                    Ok(r) => SurveyRecord::Report(Box::new(r)),
                    Err(e) => skip(c.filling.two_p(), c.filling.q(), &e),
                }
            }
            SurveyEntry::Skipped { two_p, q, reason } => skip(two_p, q, &reason),
        })
        .collect()
}

fn skip(two_p: i64, q: i64, reason: &Error) -> SurveyRecord {
    SurveyRecord::Skip(SkipRecord {
        two_p,
        q,
        code: exit_code(reason),
        reason: reason.to_string(),
    })
}

/// JSON lines, one record per line, trailing newline.
pub fn render_jsonl(records: &[SurveyRecord]) -> String {
    let mut out = String::new();
    for r in records {
        out.push_str(&serde_json::to_string(r).expect("record serializes"));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fill(tp: i64, q: i64) -> Filling {
        classify::validate(tp, q).unwrap()
    }

    fn e(x: i64, y: i64) -> EvenSlope {
        EvenSlope::new(x, y).unwrap()
    }

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(&classify::validate(6, 2).unwrap_err()), 2);
        assert_eq!(exit_code(&classify::validate(4, 1).unwrap_err()), 3);
        assert_eq!(exit_code(&classify::validate(3, 2).unwrap_err()), 4);
    }

    #[test]
    fn figure_outer_band_is_a_path_from_the_root() {
        let fig = Figure::for_filling(fill(10, 3), CountMethod::Descent).unwrap();
        let chain: Vec<_> = fig.chain().iter().map(|v| (v.slope, v.bands)).collect();
        assert_eq!(
            chain,
            vec![(e(2, 1), 1), (e(4, 1), 2), (e(10, 3), 3), (e(16, 5), 4), (e(22, 7), 5)]
        );
        assert!(fig.edges.iter().all(|e| e.length == 1));
        assert!(fig.render_text().contains("0/1 … 2/1:1 — 4/1:2 — 10/3:3 — 16/5:4 — 22/7:5"));
    }

    #[test]
    fn figure_inner_band_dot() {
        let fig = Figure::for_filling(fill(8, 3), CountMethod::Descent).unwrap();
        let dot = fig.render_dot();
        assert_eq!(dot.matches("[label=").count(), 6);
        assert_eq!(dot.matches("->").count(), 5);
        assert!(dot.contains("\"s0_1\" -> \"s2_-1\";"));
        assert!(dot.contains("\"s2_-1\" -> \"s4_-1\";"));
        assert!(dot.contains("\"s2_-1\" -> \"s8_-3\";"));
    }

    #[test]
    fn figure_with_detached_root() {
        let fig = Figure::for_filling(fill(6, 5), CountMethod::Descent).unwrap();
        assert_eq!(fig.lowest().slope, e(4, 1));
        let root_edge = fig.edges.iter().find(|x| x.from.is_root()).unwrap();
        assert_eq!((root_edge.to, root_edge.length), (e(4, 1), 2));
        assert!(fig.render_dot().contains("[style=dashed, label=\"2\"]"));
    }

    #[test]
    fn report_json_round_trip() {
        let r = Report::build(fill(8, 3), CountMethod::Descent).unwrap();
        let json = r.to_json();
        let back: Report = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
        assert_eq!(serde_json::to_string_pretty(&back).unwrap(), json);
        assert!(!json.contains('.'), "no floats in reports");
    }

    #[test]
    fn report_text_mentions_the_verdict() {
        let text = Report::build(fill(8, 3), CountMethod::Descent).unwrap().render_text();
        assert!(text.contains("Minimal genus: K(0,1), K(4,1)"));
        assert!(text.contains("surface: K(0,1) (crosscap number 4)"));
    }

    #[test]
    fn table_band_filter() {
        let t = build_table(10, 9, Some(RatioBand::Mid), CountMethod::Descent);
        assert_eq!(t.groups.len(), 1);
        assert!(!t.groups[0].1.is_empty());
        assert!(t.groups[0].1.iter().all(|r| r.minimal == vec![SpanningSurface::P01]));
        assert!(t.violations.is_empty());
        assert!(build_table(0, 9, None, CountMethod::Descent).is_empty());
    }

    #[test]
    fn survey_record_round_trip() {
        let records = survey_records(3, 3, CountMethod::Descent);
        let text = render_jsonl(&records);
        let back: Vec<SurveyRecord> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
        assert_eq!(back, records);
        assert!(survey_records(0, 5, CountMethod::Descent)
            .iter()
            .all(|r| matches!(r, SurveyRecord::Skip(_))));
    }
}
