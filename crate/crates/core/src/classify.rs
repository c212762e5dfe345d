//! One-sided splitting surfaces of the even fillings `M(2p, q)` of the
//! figure-eight knot exterior.
//!
//! Every geometrically incompressible one-sided splitting surface meets the
//! knot exterior in one of three spanning surfaces and the filling torus in
//! the unique incompressible surface with the matching boundary slope. The
//! classifier computes all three closures, their crosscap numbers, and which
//! of them survives as the unique splitting surface.

use std::cmp::Ordering;
use std::fmt;
use std::ops::RangeInclusive;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::slope::{Frame, Slope};
use crate::tree::{self, EvenSlope};

/// A validated even filling slope, normalised so that `two_p > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawFilling")]
pub struct Filling {
    two_p: i64,
    q: i64,
}

#[derive(Deserialize)]
struct RawFilling {
    two_p: i64,
    q: i64,
}

impl TryFrom<RawFilling> for Filling {
    type Error = Error;

    fn try_from(raw: RawFilling) -> Result<Filling> {
        let f = validate(raw.two_p, raw.q)?;
        if (f.two_p, f.q) != (raw.two_p, raw.q) {
            return Err(Error::Inconsistent(format!(
                "serialized filling ({}, {}) is not normalised",
                raw.two_p, raw.q
            )));
        }
        Ok(f)
    }
}

impl Filling {
    pub fn new(two_p: i64, q: i64) -> Result<Filling> {
        validate(two_p, q)
    }

    pub fn two_p(&self) -> i64 {
        self.two_p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    /// The filling slope as a knot-space slope.
    pub fn slope(&self) -> Slope {
        Slope::new(self.two_p, self.q).expect("validated filling is primitive")
    }

    /// `p/q` in lowest terms, as `(p, q)` with `q > 0`.
    pub fn ratio(&self) -> (i64, i64) {
        let (p, q) = (self.two_p / 2, self.q);
        let g = p.gcd(&q);
        let (p, q) = (p / g, q / g);
        if q < 0 {
            (-p, -q)
        } else {
            (p, q)
        }
    }

    pub fn band(&self) -> RatioBand {
        RatioBand::of(*self)
    }

    /// `(2p, -q)`: the mirror-image filling.
    pub fn mirror(&self) -> Filling {
        Filling {
            two_p: self.two_p,
            q: -self.q,
        }
    }
}

impl fmt::Display for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M({},{})", self.two_p, self.q)
    }
}

/// Checks and normalises a filling `(2p, q)`.
///
/// Odd first coordinates carry no non-zero class in `H_2(M; Z_2)`, so no
/// one-sided surface exists at all.
pub fn validate(two_p: i64, q: i64) -> Result<Filling> {
    if two_p == 0 && q == 0 {
        return Err(Error::NotASlope(0, 0));
    }
    if two_p % 2 != 0 {
        return Err(Error::OddFilling { two_p, q });
    }
    let slope = Slope::new(two_p, q)?;
    let (two_p, q) = (slope.x(), slope.y());
    if two_p <= 4 && q.abs() == 1 {
        return Err(Error::ExceptionalFilling { two_p, q });
    }
    let filling = Filling { two_p, q };
    debug_assert!(filling.two_p > 0);
    Ok(filling)
}

/// Order of `H_1(M(2p, q))`, which is cyclic.
pub fn first_homology_order(f: Filling) -> u64 {
    f.two_p.unsigned_abs()
}

/// Non-zero classes of `H_2(M; Z_2) = Hom(H_1(M), Z_2)`; always one for an
/// even filling.
pub fn z2_class_count(f: Filling) -> u32 {
    let order = first_homology_order(f);
    let rank = u32::from(order.is_multiple_of(2));
    (1 << rank) - 1
}

/// Where the filling ratio `r = p/q` falls relative to `±1/2` and `±3/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RatioBand {
    /// r < -3/2
    NegOuter,
    /// -3/2 < r < -1/2
    NegInner,
    /// -1/2 < r < 1/2
    Mid,
    /// 1/2 < r < 3/2
    PosInner,
    /// r > 3/2
    PosOuter,
}

impl RatioBand {
    pub const ALL: [RatioBand; 5] = [
        RatioBand::NegOuter,
        RatioBand::NegInner,
        RatioBand::Mid,
        RatioBand::PosInner,
        RatioBand::PosOuter,
    ];

    /// Compares `|p|/|q|` with `1/2` and `3/2` by cross-multiplying. With
    /// `2p` even and `q` odd neither boundary can be hit.
    pub fn of(f: Filling) -> RatioBand {
        let tp = i128::from(f.two_p).abs();
        let q = i128::from(f.q).abs();
        assert!(tp != q && tp != 3 * q, "{f} sits on a band boundary");
        let positive = (f.two_p > 0) == (f.q > 0);
        match (tp < q, tp < 3 * q, positive) {
            (true, _, _) => RatioBand::Mid,
            (false, true, true) => RatioBand::PosInner,
            (false, true, false) => RatioBand::NegInner,
            (false, false, true) => RatioBand::PosOuter,
            (false, false, false) => RatioBand::NegOuter,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            RatioBand::NegOuter => "neg-outer",
            RatioBand::NegInner => "neg-inner",
            RatioBand::Mid => "mid",
            RatioBand::PosInner => "pos-inner",
            RatioBand::PosOuter => "pos-outer",
        }
    }

    pub fn from_name(name: &str) -> Option<RatioBand> {
        RatioBand::ALL.into_iter().find(|b| b.name() == name)
    }

    pub fn describe(self) -> &'static str {
        match self {
            RatioBand::NegOuter => "p/q < -3/2",
            RatioBand::NegInner => "-3/2 < p/q < -1/2",
            RatioBand::Mid => "-1/2 < p/q < 1/2",
            RatioBand::PosInner => "1/2 < p/q < 3/2",
            RatioBand::PosOuter => "3/2 < p/q",
        }
    }

    pub fn mirror(self) -> RatioBand {
        match self {
            RatioBand::NegOuter => RatioBand::PosOuter,
            RatioBand::NegInner => RatioBand::PosInner,
            RatioBand::Mid => RatioBand::Mid,
            RatioBand::PosInner => RatioBand::NegInner,
            RatioBand::PosOuter => RatioBand::NegOuter,
        }
    }

    /// The minimal-genus surfaces predicted for this band.
    pub fn table_minimal(self) -> &'static [SpanningSurface] {
        use SpanningSurface::*;
        match self {
            RatioBand::NegOuter => &[P4m1],
            RatioBand::NegInner => &[P01, P4m1],
            RatioBand::Mid => &[P01],
            RatioBand::PosInner => &[P01, P41],
            RatioBand::PosOuter => &[P41],
        }
    }

    /// The strict orderings of longitudinal coordinates predicted for this
    /// band, each chain listed from smallest to largest.
    pub fn longitudinal_chains(self) -> &'static [&'static [LongitudinalTerm]] {
        use LongitudinalTerm::*;
        match self {
            RatioBand::NegOuter => &[&[FourQPlus, TwoQPlus, TwoP, TwoQMinus, FourQMinus]],
            RatioBand::NegInner => &[
                &[TwoQPlus, TwoP, TwoQMinus, FourQMinus],
                &[TwoQPlus, FourQPlus],
            ],
            RatioBand::Mid => &[&[TwoP, TwoQMinus, FourQMinus], &[TwoP, TwoQPlus, FourQPlus]],
            RatioBand::PosInner => &[
                &[TwoQMinus, TwoP, TwoQPlus, FourQPlus],
                &[TwoQMinus, FourQMinus],
            ],
            RatioBand::PosOuter => &[&[FourQMinus, TwoQMinus, TwoP, TwoQPlus, FourQPlus]],
        }
    }
}

impl fmt::Display for RatioBand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The three incompressible, boundary-incompressible spanning surfaces of the
/// figure-eight knot exterior, named by their knot-space boundary slope.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SpanningSurface {
    /// The fibre: a punctured torus with boundary `(0, 1)_K`.
    P01,
    /// Punctured Klein bottle with boundary `(4, 1)_K`.
    P41,
    /// Punctured Klein bottle with boundary `(4, -1)_K`.
    P4m1,
}

impl SpanningSurface {
    pub const ALL: [SpanningSurface; 3] =
        [SpanningSurface::P01, SpanningSurface::P41, SpanningSurface::P4m1];

    pub fn knot_slope(self) -> Slope {
        let (x, y) = match self {
            SpanningSurface::P01 => (0, 1),
            SpanningSurface::P41 => (4, 1),
            SpanningSurface::P4m1 => (4, -1),
        };
        Slope::new(x, y).expect("fixed slope")
    }

    pub fn euler(self) -> i64 {
        -1
    }

    /// Crosscaps contributed once the closed surface is non-orientable.
    pub fn crosscap_base(self) -> u32 {
        2
    }

    /// Exchanges the two Klein bottles.
    pub fn mirror(self) -> SpanningSurface {
        match self {
            SpanningSurface::P01 => SpanningSurface::P01,
            SpanningSurface::P41 => SpanningSurface::P4m1,
            SpanningSurface::P4m1 => SpanningSurface::P41,
        }
    }

    /// Name of the closed surface built from this spanning surface.
    pub fn closed_name(self) -> &'static str {
        match self {
            SpanningSurface::P01 => "K(0,1)",
            SpanningSurface::P41 => "K(4,1)",
            SpanningSurface::P4m1 => "K(4,-1)",
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for SpanningSurface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.closed_name())
    }
}

/// How band counts are obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CountMethod {
    /// Parent descent in the tree.
    #[default]
    Descent,
    /// Exhaustive breadth-first search; slow, for cross-validation.
    Oracle,
}

impl CountMethod {
    /// `Oracle` when `MOEBIUS_ORACLE=1` is set in the environment.
    pub fn from_env() -> CountMethod {
        match std::env::var("MOEBIUS_ORACLE").as_deref() {
            Ok("1") => CountMethod::Oracle,
            _ => CountMethod::Descent,
        }
    }

    pub fn count(self, e: EvenSlope) -> Result<u32> {
        match self {
            CountMethod::Descent => Ok(tree::moebius_count(e)),
            CountMethod::Oracle => tree::bfs_oracle(e, tree::default_oracle_bound(e)),
        }
    }
}

/// A closed one-sided surface in `M(2p, q)`: a spanning surface capped off
/// by the incompressible surface in the filling torus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CandidateSurface {
    pub base: SpanningSurface,
    pub torus_slope: EvenSlope,
    /// Möbius bands in the filling torus.
    pub bands: u32,
    /// Crosscap number of the closed surface.
    pub genus: u32,
}

impl CandidateSurface {
    /// Euler characteristic: the spanning surface plus the torus part.
    pub fn euler(&self) -> i64 {
        self.base.euler() + (1 - i64::from(self.bands))
    }
}

/// The three candidates in the order `K(0,1)`, `K(4,1)`, `K(4,-1)`.
pub fn candidates(f: Filling) -> Result<[CandidateSurface; 3]> {
    candidates_in(f, &Frame::for_filling(f.two_p, f.q)?, CountMethod::Descent)
}

/// [`candidates`] with an explicit frame and counting method.
pub fn candidates_in(
    f: Filling,
    frame: &Frame,
    method: CountMethod,
) -> Result<[CandidateSurface; 3]> {
    check_frame(f, frame)?;
    let build = |base: SpanningSurface| -> Result<CandidateSurface> {
        let torus_slope = EvenSlope::try_from(frame.to_torus(base.knot_slope())?)
            .map_err(|_| Error::Inconsistent(format!("{base} has odd torus slope in {f}")))?;
        let bands = method.count(torus_slope)?;
        Ok(CandidateSurface {
            base,
            torus_slope,
            bands,
            genus: base.crosscap_base() + bands,
        })
    };
    Ok([
        build(SpanningSurface::P01)?,
        build(SpanningSurface::P41)?,
        build(SpanningSurface::P4m1)?,
    ])
}

fn check_frame(f: Filling, frame: &Frame) -> Result<()> {
    if frame.two_p() != f.two_p || frame.q() != f.q {
        return Err(Error::Inconsistent(format!(
            "frame for ({}, {}) used with {f}",
            frame.two_p(),
            frame.q()
        )));
    }
    Ok(())
}

/// The single-move surfaces between `K(4,1)` and `K(0,1)` and between
/// `K(0,1)` and `K(4,-1)`: torus slopes `(2q - 2p, -2a + b)` and
/// `(2q + 2p, -2a - b)`.
pub fn intermediate_slopes(f: Filling) -> Result<(EvenSlope, EvenSlope)> {
    intermediate_slopes_in(&Frame::for_filling(f.two_p, f.q)?)
}

pub fn intermediate_slopes_in(frame: &Frame) -> Result<(EvenSlope, EvenSlope)> {
    let w = i128::from;
    let (tp, q, a, b) = (w(frame.two_p()), w(frame.q()), w(frame.a()), w(frame.b()));
    let first = Slope::from_wide(2 * q - tp, -2 * a + b)?;
    let second = Slope::from_wide(2 * q + tp, -2 * a - b)?;
    Ok((EvenSlope::try_from(first)?, EvenSlope::try_from(second)?))
}

/// One of the five longitudinal (first) torus coordinates compared across
/// the three candidates and two intermediate surfaces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LongitudinalTerm {
    /// `|4q - 2p|`, boundary of `K(4,1)`.
    #[serde(rename = "|4q-2p|")]
    FourQMinus,
    /// `|2q - 2p|`, between `K(4,1)` and `K(0,1)`.
    #[serde(rename = "|2q-2p|")]
    TwoQMinus,
    /// `|-2p|`, boundary of `K(0,1)`.
    #[serde(rename = "|-2p|")]
    TwoP,
    /// `|2q + 2p|`, between `K(0,1)` and `K(4,-1)`.
    #[serde(rename = "|2q+2p|")]
    TwoQPlus,
    /// `|-4q - 2p|`, boundary of `K(4,-1)`.
    #[serde(rename = "|-4q-2p|")]
    FourQPlus,
}

impl LongitudinalTerm {
    pub fn label(self) -> &'static str {
        match self {
            LongitudinalTerm::FourQMinus => "|4q-2p|",
            LongitudinalTerm::TwoQMinus => "|2q-2p|",
            LongitudinalTerm::TwoP => "|-2p|",
            LongitudinalTerm::TwoQPlus => "|2q+2p|",
            LongitudinalTerm::FourQPlus => "|-4q-2p|",
        }
    }

    pub fn value(self, f: Filling) -> u64 {
        let (tp, q) = (i128::from(f.two_p), i128::from(f.q));
        let v = match self {
            LongitudinalTerm::FourQMinus => 4 * q - tp,
            LongitudinalTerm::TwoQMinus => 2 * q - tp,
            LongitudinalTerm::TwoP => -tp,
            LongitudinalTerm::TwoQPlus => 2 * q + tp,
            LongitudinalTerm::FourQPlus => -4 * q - tp,
        };
        u64::try_from(v.abs()).expect("bounded by 6 * i64::MAX")
    }
}

impl fmt::Display for LongitudinalTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// The band's predicted strict chains, evaluated at the filling.
pub type OrderChains = Vec<Vec<(LongitudinalTerm, u64)>>;

/// Evaluates the band's predicted chains and checks every strict inequality.
pub fn longitudinal_order(f: Filling) -> Result<OrderChains> {
    let band = f.band();
    let chains: OrderChains = band
        .longitudinal_chains()
        .iter()
        .map(|chain| chain.iter().map(|&t| (t, t.value(f))).collect())
        .collect();
    for chain in &chains {
        for w in chain.windows(2) {
            if w[0].1 >= w[1].1 {
                return Err(Error::Inconsistent(format!(
                    "{f} ({}): expected {} = {} < {} = {}",
                    band.describe(),
                    w[0].0,
                    w[0].1,
                    w[1].0,
                    w[1].1
                )));
            }
        }
    }
    Ok(chains)
}

/// `from` compresses to `to`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Compression {
    pub from: SpanningSurface,
    pub to: SpanningSurface,
}

/// Outcome of the classification of one filling.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub filling: Filling,
    pub band: RatioBand,
    pub candidates: [CandidateSurface; 3],
    pub minimal: Vec<SpanningSurface>,
    pub isotopy_classes: Vec<Vec<SpanningSurface>>,
    pub compressions: Vec<Compression>,
    pub unique_surface: SpanningSurface,
}

impl Classification {
    pub fn candidate(&self, s: SpanningSurface) -> &CandidateSurface {
        &self.candidates[s.index()]
    }

    pub fn unique(&self) -> &CandidateSurface {
        self.candidate(self.unique_surface)
    }

    /// The classification expected for `(2p, -q)`: the two Klein bottles
    /// trade places and torus slopes reflect.
    pub fn mirrored(&self) -> Classification {
        let mut candidates = self.candidates;
        for c in candidates.iter_mut() {
            c.base = c.base.mirror();
            c.torus_slope = c.torus_slope.mirror();
        }
        candidates.sort_by_key(|c| c.base);
        let swap = |v: &[SpanningSurface]| {
            let mut v: Vec<_> = v.iter().map(|s| s.mirror()).collect();
            v.sort();
            v
        };
        let mut isotopy_classes: Vec<_> = self.isotopy_classes.iter().map(|c| swap(c)).collect();
        isotopy_classes.sort();
        let mut compressions: Vec<_> = self
            .compressions
            .iter()
            .map(|c| Compression {
                from: c.from.mirror(),
                to: c.to.mirror(),
            })
            .collect();
        compressions.sort();
        Classification {
            filling: self.filling.mirror(),
            band: self.band.mirror(),
            candidates,
            minimal: swap(&self.minimal),
            isotopy_classes,
            compressions,
            unique_surface: self.unique_surface.mirror(),
        }
    }
}

pub fn classify(f: Filling) -> Result<Classification> {
    classify_with(f, CountMethod::Descent)
}

pub fn classify_with(f: Filling, method: CountMethod) -> Result<Classification> {
    classify_in(f, &Frame::for_filling(f.two_p, f.q)?, method)
}

/// Classifies `f` in a caller-supplied frame. Any frame with determinant one
/// gives the same result.
pub fn classify_in(f: Filling, frame: &Frame, method: CountMethod) -> Result<Classification> {
    use SpanningSurface::*;

    let band = f.band();
    longitudinal_order(f)?;
    let candidates = candidates_in(f, frame, method)?;

    let least = candidates.iter().map(|c| c.genus).min().expect("three candidates");
    let minimal: Vec<_> = candidates
        .iter()
        .filter(|c| c.genus == least)
        .map(|c| c.base)
        .collect();
    if minimal != band.table_minimal() {
        return Err(Error::Inconsistent(format!(
            "{f} ({}): minimal genus set {minimal:?} disagrees with {:?}",
            band.describe(),
            band.table_minimal()
        )));
    }

    let (r_num, r_den) = f.ratio();
    // r > bound, with bound = n/2 and r_den > 0
    let above = |n: i64| (2 * i128::from(r_num)).cmp(&(i128::from(n) * i128::from(r_den)));
    let mut compressions = Vec::new();
    if above(-1) == Ordering::Greater {
        compressions.push(Compression { from: P4m1, to: P01 });
    }
    if above(1) == Ordering::Less {
        compressions.push(Compression { from: P41, to: P01 });
    }
    if above(3) == Ordering::Greater {
        compressions.push(Compression { from: P01, to: P41 });
    }
    if above(-3) == Ordering::Less {
        compressions.push(Compression { from: P01, to: P4m1 });
    }
    compressions.sort();

    let isotopy_classes = match band {
        RatioBand::PosInner => vec![vec![P01, P41], vec![P4m1]],
        RatioBand::NegInner => vec![vec![P01, P4m1], vec![P41]],
        _ => vec![vec![P01], vec![P41], vec![P4m1]],
    };

    let unique_surface = match band {
        RatioBand::PosOuter => P41,
        RatioBand::NegOuter => P4m1,
        _ => P01,
    };

    let out = Classification {
        filling: f,
        band,
        candidates,
        minimal,
        isotopy_classes,
        compressions,
        unique_surface,
    };
    check_consistency(&out)?;
    Ok(out)
}

fn check_consistency(c: &Classification) -> Result<()> {
    let fail = |what: String| Err(Error::Inconsistent(format!("{}: {what}", c.filling)));
    let genus = |s: SpanningSurface| c.candidate(s).genus;
    let same_class = |a: SpanningSurface, b: SpanningSurface| {
        c.isotopy_classes.iter().any(|k| k.contains(&a) && k.contains(&b))
    };
    for cand in &c.candidates {
        if i64::from(cand.genus) != 2 - cand.euler() {
            return fail(format!("{} has genus {} but euler {}", cand.base, cand.genus, cand.euler()));
        }
    }
    for class in &c.isotopy_classes {
        if class.windows(2).any(|w| genus(w[0]) != genus(w[1])) {
            return fail(format!("isotopy class {class:?} mixes genera"));
        }
    }
    for comp in &c.compressions {
        let ok = genus(comp.from) > genus(comp.to)
            || (genus(comp.from) == genus(comp.to) && same_class(comp.from, comp.to));
        if !ok {
            return fail(format!("{} -> {} does not lower genus", comp.from, comp.to));
        }
    }
    if !c.minimal.contains(&c.unique_surface) {
        return fail(format!("{} is not of minimal genus", c.unique_surface));
    }
    if c.minimal.iter().any(|&m| !same_class(m, c.unique_surface)) {
        return fail("minimal surfaces span more than one isotopy class".into());
    }
    Ok(())
}

/// One cell of a survey box.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SurveyEntry {
    Classified(Classification),
    Skipped { two_p: i64, q: i64, reason: Error },
}

/// Classifies every pair in the box, `two_p` ascending then `q` ascending.
/// Invalid and exceptional pairs become skip entries.
pub fn survey(
    two_p: RangeInclusive<i64>,
    q: RangeInclusive<i64>,
    method: CountMethod,
) -> Vec<SurveyEntry> {
    let mut out = Vec::new();
    for tp in two_p {
        for qq in q.clone() {
            let entry = validate(tp, qq).and_then(|f| classify_with(f, method));
            out.push(match entry {
                Ok(c) => SurveyEntry::Classified(c),
                Err(reason) => SurveyEntry::Skipped {
                    two_p: tp,
                    q: qq,
                    reason,
                },
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use SpanningSurface::*;

    fn fill(tp: i64, q: i64) -> Filling {
        validate(tp, q).unwrap()
    }

    fn genera(f: Filling) -> [u32; 3] {
        candidates(f).unwrap().map(|c| c.genus)
    }

    fn e(x: i64, y: i64) -> EvenSlope {
        EvenSlope::new(x, y).unwrap()
    }

    #[test]
    fn validate_examples() {
        assert_eq!(fill(8, 3), Filling { two_p: 8, q: 3 });
        assert_eq!(validate(4, 1), Err(Error::ExceptionalFilling { two_p: 4, q: 1 }));
        assert_eq!(validate(7, 2), Err(Error::OddFilling { two_p: 7, q: 2 }));
        assert!(validate(7, 2).unwrap_err().to_string().starts_with("not an even filling"));
        assert!(validate(4, 1).unwrap_err().to_string().starts_with("excluded exceptional filling"));
        assert!(validate(6, 3).unwrap_err().to_string().starts_with("not a slope"));
    }

    #[test]
    fn validate_normalises_sign() {
        assert_eq!(fill(-8, -3), fill(8, 3));
        assert_eq!(fill(-8, 3), fill(8, -3));
        assert_eq!(validate(-2, 1), Err(Error::ExceptionalFilling { two_p: 2, q: -1 }));
        for (tp, q) in [(0, 1), (0, -1), (2, 1), (2, -1), (4, 1), (4, -1), (-4, 1)] {
            assert!(matches!(validate(tp, q), Err(Error::ExceptionalFilling { .. })), "({tp}, {q})");
        }
        assert!(validate(0, 0).is_err());
        assert!(validate(6, 1).is_ok());
    }

    #[test]
    fn homology_classes() {
        assert_eq!(z2_class_count(fill(8, 3)), 1);
        assert_eq!(z2_class_count(fill(2, 3)), 1);
        assert_eq!(z2_class_count(fill(30, 7)), 1);
        assert_eq!(first_homology_order(fill(30, 7)), 30);
    }

    #[test]
    fn bands() {
        assert_eq!(fill(10, 3).band(), RatioBand::PosOuter);
        assert_eq!(fill(8, 3).band(), RatioBand::PosInner);
        assert_eq!(fill(6, 5).band(), RatioBand::PosInner);
        assert_eq!(fill(2, 3).band(), RatioBand::Mid);
        assert_eq!(fill(6, -5).band(), RatioBand::NegInner);
        assert_eq!(fill(10, -3).band(), RatioBand::NegOuter);
        assert_eq!(fill(8, 3).ratio(), (4, 3));
        assert_eq!(fill(8, -3).ratio(), (-4, 3));
    }

    #[test]
    fn candidate_examples() {
        assert_eq!(genera(fill(8, 3)), [4, 4, 6]);
        assert_eq!(genera(fill(10, 3)), [5, 3, 7]);
        assert_eq!(genera(fill(6, 5)), [5, 5, 7]);
        let c = candidates(fill(8, 3)).unwrap();
        assert_eq!(c.map(|c| c.torus_slope), [e(8, -3), e(4, -1), e(20, -7)]);
        assert_eq!(c.map(|c| c.bands), [2, 2, 4]);
    }

    #[test]
    fn oracle_counting_agrees() {
        for f in [fill(8, 3), fill(10, 3), fill(6, 5), fill(26, -9)] {
            let frame = Frame::for_filling(f.two_p(), f.q()).unwrap();
            assert_eq!(
                candidates_in(f, &frame, CountMethod::Oracle).unwrap(),
                candidates(f).unwrap()
            );
        }
    }

    #[test]
    fn intermediate_examples() {
        assert_eq!(intermediate_slopes(fill(10, 3)).unwrap(), (e(4, 1), e(16, 5)));
        assert_eq!(intermediate_slopes(fill(8, 3)).unwrap(), (e(2, -1), e(14, -5)));
        let (i1, _) = intermediate_slopes(fill(10, 3)).unwrap();
        assert!(tree::is_adjacent(i1, e(2, 1)) && tree::is_adjacent(i1, e(10, 3)));
    }

    #[test]
    fn intermediates_are_images_of_two_one() {
        for f in [fill(8, 3), fill(10, -3), fill(14, 9), fill(40, 13)] {
            let frame = Frame::for_filling(f.two_p(), f.q()).unwrap();
            let (i1, i2) = intermediate_slopes(f).unwrap();
            assert_eq!(i1.slope(), frame.to_torus(Slope::new(2, 1).unwrap()).unwrap());
            assert_eq!(i2.slope(), frame.to_torus(Slope::new(2, -1).unwrap()).unwrap());
        }
    }

    #[test]
    fn longitudinal_examples() {
        let values = |f| -> Vec<Vec<u64>> {
            longitudinal_order(f)
                .unwrap()
                .into_iter()
                .map(|c| c.into_iter().map(|(_, v)| v).collect())
                .collect()
        };
        assert_eq!(values(fill(10, 3)), vec![vec![2, 4, 10, 16, 22]]);
        assert_eq!(values(fill(2, 3)), vec![vec![2, 4, 10], vec![2, 8, 14]]);
        assert_eq!(values(fill(6, 5)), vec![vec![4, 6, 16, 26], vec![4, 14]]);
    }

    #[test]
    fn classify_worked_example() {
        let c = classify(fill(8, 3)).unwrap();
        assert_eq!(c.band, RatioBand::PosInner);
        assert_eq!(c.minimal, vec![P01, P41]);
        assert_eq!(c.isotopy_classes, vec![vec![P01, P41], vec![P4m1]]);
        assert_eq!(c.unique_surface, P01);
        assert_eq!(c.unique().genus, 4);
        assert_eq!(c.compressions, vec![Compression { from: P4m1, to: P01 }]);
    }

    #[test]
    fn classify_mid_band() {
        let c = classify(fill(2, 3)).unwrap();
        assert_eq!(c.minimal, vec![P01]);
        assert_eq!(c.unique_surface, P01);
        assert_eq!(
            c.compressions,
            vec![Compression { from: P41, to: P01 }, Compression { from: P4m1, to: P01 }]
        );
    }

    #[test]
    fn classify_outer_band() {
        let c = classify(fill(10, 3)).unwrap();
        assert_eq!(c.minimal, vec![P41]);
        assert_eq!(c.unique_surface, P41);
        assert_eq!(c.unique().genus, 3);
        assert_eq!(
            c.compressions,
            vec![Compression { from: P01, to: P41 }, Compression { from: P4m1, to: P01 }]
        );
    }

    #[test]
    fn mirror_of_an_example() {
        let pos = classify(fill(10, 3)).unwrap();
        let neg = classify(fill(10, -3)).unwrap();
        assert_eq!(neg, pos.mirrored());
        assert_eq!(neg.unique_surface, P4m1);
    }

    #[test]
    fn rejects_foreign_frame() {
        let frame = Frame::for_filling(10, 3).unwrap();
        assert!(matches!(
            classify_in(fill(8, 3), &frame, CountMethod::Descent),
            Err(Error::Inconsistent(_))
        ));
    }

    #[test]
    fn survey_small_box() {
        let entries = survey(2..=8, 1..=3, CountMethod::Descent);
        assert_eq!(entries.len(), 21);
        let classified: Vec<_> = entries
            .iter()
            .filter_map(|e| match e {
                SurveyEntry::Classified(c) => Some((c.filling.two_p(), c.filling.q())),
                _ => None,
            })
            .collect();
        assert_eq!(classified, vec![(2, 3), (4, 3), (6, 1), (8, 1), (8, 3)]);
        let skipped = |tp, q| {
            entries.iter().any(
                |e| matches!(e, SurveyEntry::Skipped { two_p, q: qq, .. } if *two_p == tp && *qq == q),
            )
        };
        for (tp, q) in [(2, 1), (4, 1), (6, 3), (2, 2), (3, 1)] {
            assert!(skipped(tp, q), "({tp}, {q})");
        }
    }

    #[test]
    fn survey_degenerate_boxes() {
        #[allow(clippy::reversed_empty_ranges)]
        let empty = survey(5..=4, 1..=3, CountMethod::Descent);
        assert!(empty.is_empty());
        let one = survey(8..=8, 3..=3, CountMethod::Descent);
        assert_eq!(one, vec![SurveyEntry::Classified(classify(fill(8, 3)).unwrap())]);
    }
}
