//! The Möbius-band tree: even slopes on the boundary of a solid torus, joined
//! when they meet twice.
//!
//! The geometrically incompressible one-sided surface in a solid torus is
//! determined by its boundary slope, and one boundary compression removes a
//! single Möbius band while moving the slope to an adjacent vertex. Distance
//! to the meridian `0/1` therefore counts the bands of the surface.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::slope::Slope;

/// A vertex of the tree: a slope with even first coordinate (so odd second).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Slope", into = "Slope")]
pub struct EvenSlope(Slope);

impl EvenSlope {
    /// The meridian, which bounds a disc.
    pub const ROOT: EvenSlope = EvenSlope(Slope::MERIDIAN);

    pub fn new(x: i64, y: i64) -> Result<Self> {
        Self::try_from(Slope::new(x, y)?)
    }

    pub fn slope(self) -> Slope {
        self.0
    }

    pub fn x(self) -> i64 {
        self.0.x()
    }

    pub fn y(self) -> i64 {
        self.0.y()
    }

    pub fn is_root(self) -> bool {
        self == Self::ROOT
    }

    pub fn mirror(self) -> EvenSlope {
        EvenSlope(self.0.mirror())
    }
}

impl TryFrom<Slope> for EvenSlope {
    type Error = Error;

    fn try_from(slope: Slope) -> Result<Self> {
        if slope.is_even() {
            Ok(EvenSlope(slope))
        } else {
            Err(Error::NotEvenSlope(slope.x(), slope.y()))
        }
    }
}

impl From<EvenSlope> for Slope {
    fn from(e: EvenSlope) -> Slope {
        e.0
    }
}

impl fmt::Display for EvenSlope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Two vertices are joined iff their slopes intersect exactly twice.
pub fn is_adjacent(e1: EvenSlope, e2: EvenSlope) -> bool {
    e1.0.intersection(e2.0).abs() == 2
}

/// The unique neighbour with strictly smaller `|x|`; `None` at the root.
///
/// Writing `x = 2X`, adjacency to `(2X', y')` is `X*y' - X'*y = ±1`. The
/// solutions of `+1` form the family `(X'0 + kX, y'0 + ky)`, so exactly two
/// have `|X'| < X`, and since `y` is odd exactly one of those has odd `y'`.
pub fn parent(e: EvenSlope) -> Option<EvenSlope> {
    if e.is_root() {
        return None;
    }
    let half = i128::from(e.x() / 2);
    let y = i128::from(e.y());
    let eg = half.extended_gcd(&y);
    debug_assert_eq!(eg.gcd.abs(), 1);
    let sign = eg.gcd.signum();
    // half*y0 - x0*y = 1
    let (y0, x0) = (eg.x * sign, -eg.y * sign);

    let r = x0.rem_euclid(half);
    let k = (r - x0) / half;
    let near = (r, y0 + k * y);
    let far = (r - half, near.1 - y);

    let mut odd = [near, far]
        .into_iter()
        .filter(|&(xh, yy)| yy.is_odd() && xh.abs() < half);
    let (xh, yy) = odd.next().expect("an odd neighbour below every non-root vertex");
    assert!(odd.next().is_none(), "parent of {e} is not unique");

    let slope = Slope::from_wide(2 * xh, yy).expect("parent is primitive");
    Some(EvenSlope(slope))
}

/// Möbius bands in the incompressible one-sided surface bounded by `e`:
/// its distance from the root. The surface has Euler characteristic
/// `1 - moebius_count(e)`.
pub fn moebius_count(e: EvenSlope) -> u32 {
    let mut count = 0;
    let mut cur = e;
    while let Some(up) = parent(cur) {
        count += 1;
        cur = up;
    }
    count
}

/// The descent from a vertex to the root through successive boundary
/// compressions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CompressionPath {
    vertices: Vec<EvenSlope>,
}

impl CompressionPath {
    pub fn vertices(&self) -> &[EvenSlope] {
        &self.vertices
    }

    pub fn head(&self) -> EvenSlope {
        self.vertices[0]
    }

    /// Edge count.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

pub fn compression_path(e: EvenSlope) -> CompressionPath {
    let mut vertices = vec![e];
    let mut cur = e;
    while let Some(up) = parent(cur) {
        vertices.push(up);
        cur = up;
    }
    CompressionPath { vertices }
}

/// Bound used by the oracle when the caller does not supply one.
pub fn default_oracle_bound(e: EvenSlope) -> u64 {
    3 * e.x().unsigned_abs() + 3
}

/// Breadth-first distance from `e` to the root in the graph of all even
/// slopes with `|x| <= bound`, discovering neighbours by scanning every
/// admissible first coordinate. Independent of [`parent`].
pub fn bfs_oracle(e: EvenSlope, bound: u64) -> Result<u32> {
    let too_small = || Error::BoundTooSmall {
        x: e.x(),
        y: e.y(),
        bound,
    };
    if e.x().unsigned_abs() > bound {
        return Err(too_small());
    }
    let mut seen = HashSet::from([e]);
    let mut queue = VecDeque::from([(e, 0u32)]);
    while let Some((v, d)) = queue.pop_front() {
        if v.is_root() {
            return Ok(d);
        }
        for n in oracle_neighbours(v, bound) {
            if seen.insert(n) {
                queue.push_back((n, d + 1));
            }
        }
    }
    Err(too_small())
}

// Neighbours of a non-root vertex: for each even x' the equation
// x*y' - x'*y = ±2 has at most one solution y' per sign.
fn oracle_neighbours(v: EvenSlope, bound: u64) -> Vec<EvenSlope> {
    let (x, y) = (i128::from(v.x()), i128::from(v.y()));
    let mut out = Vec::new();
    for xn in (0..=i128::from(bound)).step_by(2) {
        for rhs in [2i128, -2] {
            let num = xn * y + rhs;
            if num % x != 0 {
                continue;
            }
            let Ok(slope) = Slope::from_wide(xn, num / x) else {
                continue;
            };
            if let Ok(n) = EvenSlope::try_from(slope) {
                if is_adjacent(v, n) {
                    out.push(n);
                }
            }
        }
    }
    out
}

/// Pairs each slope with its band count, ordered by count then `|x|`.
pub fn chain_positions(slopes: &[EvenSlope]) -> Vec<(EvenSlope, u32)> {
    let mut out: Vec<_> = slopes.iter().map(|&e| (e, moebius_count(e))).collect();
    out.sort_by_key(|&(e, c)| (c, e.x().unsigned_abs()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn e(x: i64, y: i64) -> EvenSlope {
        EvenSlope::new(x, y).unwrap()
    }

    #[test]
    fn rejects_odd_slopes() {
        assert_eq!(EvenSlope::new(3, 2), Err(Error::NotEvenSlope(3, 2)));
        assert!(serde_json::from_str::<EvenSlope>("[3,2]").is_err());
        assert_eq!(serde_json::from_str::<EvenSlope>("[8,-3]").unwrap(), e(8, -3));
    }

    #[test]
    fn adjacency_examples() {
        assert!(is_adjacent(e(2, 1), e(0, 1)));
        assert!(!is_adjacent(e(4, -1), e(8, -3)));
        assert_eq!(e(4, -1).slope().intersection(e(8, -3).slope()).abs(), 4);
        assert!(!is_adjacent(e(2, 1), e(2, 1)));
    }

    #[test]
    fn parent_examples() {
        assert_eq!(parent(e(8, 3)), Some(e(2, 1)));
        assert_eq!(parent(e(2, 1)), Some(EvenSlope::ROOT));
        assert_eq!(parent(e(2, -1)), Some(EvenSlope::ROOT));
        assert_eq!(parent(e(20, -7)), Some(e(14, -5)));
        assert_eq!(parent(EvenSlope::ROOT), None);
    }

    #[test]
    fn count_examples() {
        assert_eq!(moebius_count(EvenSlope::ROOT), 0);
        assert_eq!(moebius_count(e(2, 1)), 1);
        assert_eq!(moebius_count(e(8, -3)), 2);
        assert_eq!(moebius_count(e(20, -7)), 4);
    }

    #[test]
    fn path_examples() {
        let path = compression_path(e(20, -7));
        assert_eq!(
            path.vertices(),
            &[e(20, -7), e(14, -5), e(8, -3), e(2, -1), EvenSlope::ROOT]
        );
        assert_eq!(path.len(), 4);
        assert_eq!(compression_path(EvenSlope::ROOT).vertices(), &[EvenSlope::ROOT]);
        assert!(compression_path(EvenSlope::ROOT).is_empty());
        assert_eq!(
            compression_path(e(10, 3)).vertices(),
            &[e(10, 3), e(4, 1), e(2, 1), EvenSlope::ROOT]
        );
        assert_eq!(
            serde_json::to_string(&compression_path(e(10, 3))).unwrap(),
            "[[10,3],[4,1],[2,1],[0,1]]"
        );
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(bfs_oracle(e(8, 3), 10), Ok(2));
        assert_eq!(bfs_oracle(e(2, 1), 2), Ok(1));
        assert_eq!(bfs_oracle(e(26, 5), 30), Ok(5));
        assert_eq!(bfs_oracle(EvenSlope::ROOT, 0), Ok(0));
    }

    #[test]
    fn oracle_bound_too_small() {
        let err = bfs_oracle(e(8, 3), 6).unwrap_err();
        assert!(err.to_string().starts_with("bound too small"), "{err}");
    }

    #[test]
    fn chain_position_examples() {
        assert_eq!(
            chain_positions(&[e(2, 1), e(10, 3), e(4, 1)]),
            vec![(e(2, 1), 1), (e(4, 1), 2), (e(10, 3), 3)]
        );
        assert!(chain_positions(&[]).is_empty());
        assert_eq!(chain_positions(&[EvenSlope::ROOT]), vec![(EvenSlope::ROOT, 0)]);
    }

    fn all_even(max_x: i64, max_y: i64) -> impl Iterator<Item = EvenSlope> {
        (0..=max_x)
            .step_by(2)
            .flat_map(move |x| (-max_y..=max_y).map(move |y| (x, y)))
            .filter_map(|(x, y)| EvenSlope::new(x, y).ok().filter(|v| v.y() == y))
    }

    #[test]
    fn parent_is_the_only_smaller_neighbour() {
        for v in all_even(40, 40).filter(|v| !v.is_root()) {
            let smaller: Vec<_> = all_even(v.x() - 1, 200)
                .filter(|&n| n.x() < v.x() && is_adjacent(v, n))
                .collect();
            assert_eq!(smaller, vec![parent(v).unwrap()], "{v}");
        }
    }

    #[test]
    fn euler_characteristic_at_the_bottom() {
        let chi = |v: EvenSlope| 1 - i64::from(moebius_count(v));
        assert_eq!(chi(EvenSlope::ROOT), 1);
        assert_eq!(chi(e(2, 1)), 0);
        assert_eq!(chi(e(2, -1)), 0);
    }

    fn even_slope() -> impl Strategy<Value = EvenSlope> {
        (0i64..=5_000, -20_001i64..=20_001)
            .prop_filter_map("even primitive", |(h, y)| EvenSlope::new(2 * h, y).ok())
    }

    proptest! {
        #[test]
        fn descent_is_monotone(v in even_slope()) {
            let path = compression_path(v);
            prop_assert_eq!(path.len() as u32, moebius_count(v));
            for w in path.vertices().windows(2) {
                prop_assert!(is_adjacent(w[0], w[1]));
                prop_assert!(w[1].x().abs() < w[0].x().abs());
                prop_assert_eq!(moebius_count(w[0]), moebius_count(w[1]) + 1);
            }
        }

        #[test]
        fn meridian_twist_invariance(v in even_slope()) {
            let twisted = EvenSlope::new(v.x(), v.y() + v.x()).unwrap();
            prop_assert_eq!(moebius_count(twisted), moebius_count(v));
        }

        #[test]
        fn mirror_symmetry(v in even_slope()) {
            prop_assert_eq!(moebius_count(v.mirror()), moebius_count(v));
        }
    }
}
