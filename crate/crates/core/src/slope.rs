//! Exact arithmetic on torus slopes and the unimodular frame of a filling.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An unoriented essential simple closed curve on a torus, stored as a
/// primitive integer pair in canonical form: `x > 0`, or `(0, 1)`.
///
/// The same type carries both knot-space pairs `(m, l)_K` and solid-torus
/// pairs `(l', m')_T`; which system a value lives in is up to the caller.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "[i64; 2]", into = "[i64; 2]")]
pub struct Slope {
    x: i64,
    y: i64,
}

impl Slope {
    /// The meridian of the filling solid torus, `0/1`.
    pub const MERIDIAN: Slope = Slope { x: 0, y: 1 };

    /// Canonicalises `(x, y)`. Non-primitive pairs (including the zero vector)
    /// are rejected rather than reduced: `(6, 2)` is a multicurve, not a slope.
    pub fn new(x: i64, y: i64) -> Result<Self> {
        Self::from_wide(i128::from(x), i128::from(y))
    }

    pub(crate) fn from_wide(x: i128, y: i128) -> Result<Self> {
        if x.gcd(&y) != 1 {
            return Err(Error::NotASlope(x, y));
        }
        let (x, y) = if x < 0 || (x == 0 && y < 0) { (-x, -y) } else { (x, y) };
        Ok(Slope {
            x: narrow(x)?,
            y: narrow(y)?,
        })
    }

    pub fn x(self) -> i64 {
        self.x
    }

    pub fn y(self) -> i64 {
        self.y
    }

    pub fn is_even(self) -> bool {
        self.x % 2 == 0
    }

    /// Reflection `(x, y) -> (x, -y)`.
    pub fn mirror(self) -> Slope {
        Slope::from_wide(i128::from(self.x), -i128::from(self.y))
            .expect("mirror of a slope is a slope")
    }

    /// Signed algebraic intersection `x1*y2 - x2*y1` of the canonical
    /// representatives. Only the magnitude is independent of orientation.
    pub fn intersection(self, other: Slope) -> i128 {
        i128::from(self.x) * i128::from(other.y) - i128::from(other.x) * i128::from(self.y)
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.x, self.y)
    }
}

impl TryFrom<[i64; 2]> for Slope {
    type Error = Error;

    fn try_from(pair: [i64; 2]) -> Result<Self> {
        let slope = Slope::new(pair[0], pair[1])?;
        if slope.x != pair[0] || slope.y != pair[1] {
            // serialized slopes are canonical only
            return Err(Error::NotASlope(pair[0].into(), pair[1].into()));
        }
        Ok(slope)
    }
}

impl From<Slope> for [i64; 2] {
    fn from(s: Slope) -> Self {
        [s.x, s.y]
    }
}

/// See [`Slope::new`].
pub fn make_slope(x: i64, y: i64) -> Result<Slope> {
    Slope::new(x, y)
}

/// See [`Slope::intersection`].
pub fn intersection(s1: Slope, s2: Slope) -> i128 {
    s1.intersection(s2)
}

pub(crate) fn narrow(v: i128) -> Result<i64> {
    i64::try_from(v).map_err(|_| Error::Overflow)
}

/// Coordinate change between the filling solid torus and the knot exterior
/// for the `(2p, q)` filling.
///
/// Torus to knot is `[[b, 2p], [a, q]]`, with `q*b - 2p*a = 1`, so the torus
/// meridian `(0, 1)_T` lands on the filling curve `(2p, q)_K`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Frame {
    two_p: i64,
    q: i64,
    a: i64,
    b: i64,
}

impl Frame {
    /// The frame whose `(a, b)` has least Euclidean norm among all solutions
    /// of `q*b - 2p*a = 1`. Ties would be broken towards `b > 0`, then
    /// `a > 0`; with `q` odd the two nearest solutions never tie.
    pub fn for_filling(two_p: i64, q: i64) -> Result<Frame> {
        check_filling_pair(two_p, q)?;
        let (tp, qq) = (i128::from(two_p), i128::from(q));
        let eg = qq.extended_gcd(&tp);
        let sign = eg.gcd.signum();
        // q*b0 - 2p*a0 = 1
        let (b0, a0) = (eg.x * sign, -eg.y * sign);

        // (a0 + k q, b0 + k 2p): the norm is a convex quadratic in k
        let num = -(a0 * qq + b0 * tp);
        let den = qq * qq + tp * tp;
        let k = Integer::div_floor(&num, &den);
        let pick = |k: i128| (a0 + k * qq, b0 + k * tp);
        let (a, b) = [pick(k), pick(k + 1)]
            .into_iter()
            .min_by_key(|&(a, b)| (a * a + b * b, b <= 0, a <= 0))
            .expect("two candidates");

        let frame = Frame {
            two_p,
            q,
            a: narrow(a)?,
            b: narrow(b)?,
        };
        if !frame.is_reduced() {
            return Err(Error::Inconsistent(format!(
                "minimal frame ({a}, {b}) for ({two_p}, {q}) fails the norm bound"
            )));
        }
        Ok(frame)
    }

    /// A frame with caller-chosen `(a, b)`. Only the determinant is checked;
    /// the norm bound of [`Frame::for_filling`] need not hold.
    pub fn with_coefficients(two_p: i64, q: i64, a: i64, b: i64) -> Result<Frame> {
        check_filling_pair(two_p, q)?;
        let det = i128::from(q) * i128::from(b) - i128::from(two_p) * i128::from(a);
        if det != 1 {
            return Err(Error::InvalidFrame { two_p, q });
        }
        Ok(Frame { two_p, q, a, b })
    }

    /// Shifts `(a, b)` by `k` multiples of `(q, 2p)`: a meridional re-framing
    /// of the solid torus.
    pub fn reframed(self, k: i64) -> Result<Frame> {
        let a = i128::from(self.a) + i128::from(k) * i128::from(self.q);
        let b = i128::from(self.b) + i128::from(k) * i128::from(self.two_p);
        Frame::with_coefficients(self.two_p, self.q, narrow(a)?, narrow(b)?)
    }

    pub fn two_p(&self) -> i64 {
        self.two_p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    /// `a^2 + b^2 < (2p)^2 + q^2`.
    pub fn is_reduced(&self) -> bool {
        let sq = |v: i64| i128::from(v) * i128::from(v);
        sq(self.a) + sq(self.b) < sq(self.two_p) + sq(self.q)
    }

    /// Torus-to-knot matrix, row major.
    pub fn matrix(&self) -> [[i64; 2]; 2] {
        [[self.b, self.two_p], [self.a, self.q]]
    }

    /// Knot-to-torus matrix, row major.
    pub fn inverse_matrix(&self) -> [[i64; 2]; 2] {
        [[self.q, -self.two_p], [-self.a, self.b]]
    }

    /// Rewrites a knot-space slope in solid-torus coordinates.
    pub fn to_torus(&self, knot: Slope) -> Result<Slope> {
        apply(self.inverse_matrix(), knot)
    }

    /// Rewrites a solid-torus slope in knot-space coordinates.
    pub fn to_knot(&self, torus: Slope) -> Result<Slope> {
        apply(self.matrix(), torus)
    }
}

/// See [`Frame::for_filling`].
pub fn frame_for(two_p: i64, q: i64) -> Result<Frame> {
    Frame::for_filling(two_p, q)
}

fn check_filling_pair(two_p: i64, q: i64) -> Result<()> {
    if two_p == 0 || two_p % 2 != 0 || i128::from(two_p).gcd(&i128::from(q)) != 1 {
        return Err(Error::InvalidFrame { two_p, q });
    }
    Ok(())
}

fn apply(m: [[i64; 2]; 2], s: Slope) -> Result<Slope> {
    let w = |v: i64| i128::from(v);
    let x = w(m[0][0]) * w(s.x) + w(m[0][1]) * w(s.y);
    let y = w(m[1][0]) * w(s.x) + w(m[1][1]) * w(s.y);
    Slope::from_wide(x, y).map_err(|e| match e {
        Error::NotASlope(..) => {
            Error::Inconsistent(format!("unimodular image of {s} is not primitive"))
        }
        other => other,
    })
}
