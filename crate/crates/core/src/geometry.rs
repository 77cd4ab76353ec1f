//! Exact rational points, canonical lines and node sets.
//!
//! Every coordinate is a [`Scalar`] (an arbitrary-precision rational), so
//! incidence and collinearity are decided exactly. Lines are stored as
//! integer triples `(a, b, c)` for `ax + by + c = 0` in a canonical form:
//! gcd-reduced with the first nonzero coefficient positive. Two lines are
//! therefore geometrically equal exactly when they compare equal, and the
//! derived `Ord` is the lexicographic order on `(a, b, c)`.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number. Always reduced with a positive denominator.
pub type Scalar = BigRational;

/// `num / den` as a [`Scalar`]. Panics when `den == 0`.
pub fn rat(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(value: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(value))
}

/// Parses `"p"` or `"p/q"`. A zero denominator is [`Error::DivisionByZero`].
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let text = text.trim();
    let malformed = || Error::MalformedRational(text.to_string());
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| malformed())?;
    let den: BigInt = den.parse().map_err(|_| malformed())?;
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Scalar::new(num, den))
}

pub fn checked_div(num: &Scalar, den: &Scalar) -> Result<Scalar> {
    if den.is_zero() {
        Err(Error::DivisionByZero)
    } else {
        Ok(num / den)
    }
}

/// A point of the rational affine plane.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: Scalar,
    pub y: Scalar,
}

impl Point {
    pub fn new(x: Scalar, y: Scalar) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(int(x), int(y))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// True iff `det [[px, py, 1], [qx, qy, 1], [rx, ry, 1]] == 0`.
pub fn collinear(p: &Point, q: &Point, r: &Point) -> bool {
    let det = (&q.x - &p.x) * (&r.y - &p.y) - (&q.y - &p.y) * (&r.x - &p.x);
    det.is_zero()
}

/// Affine line `a x + b y + c = 0` with canonical integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Line {
    a: BigInt,
    b: BigInt,
    c: BigInt,
}

impl Line {
    /// Canonicalizes an integer triple. Fails when `a = b = 0`.
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>) -> Result<Self> {
        let (mut a, mut b, mut c) = (a.into(), b.into(), c.into());
        if a.is_zero() && b.is_zero() {
            return Err(Error::DegenerateLine);
        }
        let g = a.gcd(&b).gcd(&c);
        if !g.is_one() {
            a /= &g;
            b /= &g;
            c /= &g;
        }
        let leading = if a.is_zero() { &b } else { &a };
        if leading.is_negative() {
            a = -a;
            b = -b;
            c = -c;
        }
        Ok(Line { a, b, c })
    }

    /// Canonical line from rational coefficients (denominators are cleared).
    pub fn from_scalars(a: &Scalar, b: &Scalar, c: &Scalar) -> Result<Self> {
        let l = a.denom().lcm(b.denom()).lcm(c.denom());
        let scale = |s: &Scalar| s.numer() * (&l / s.denom());
        Line::new(scale(a), scale(b), scale(c))
    }

    /// The unique line through two distinct points.
    pub fn through(p: &Point, q: &Point) -> Result<Self> {
        if p == q {
            return Err(Error::IdenticalPoints);
        }
        let a = &p.y - &q.y;
        let b = &q.x - &p.x;
        let c = -(&a * &p.x + &b * &p.y);
        Line::from_scalars(&a, &b, &c)
    }

    /// Horizontal line `y = value`.
    pub fn horizontal(value: &Scalar) -> Self {
        Line::from_scalars(&Scalar::zero(), &Scalar::one(), &-value).expect("b = 1")
    }

    /// Vertical line `x = value`.
    pub fn vertical(value: &Scalar) -> Self {
        Line::from_scalars(&Scalar::one(), &Scalar::zero(), &-value).expect("a = 1")
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn c(&self) -> &BigInt {
        &self.c
    }

    /// `(a, b, c)` as scalars.
    pub fn scalars(&self) -> (Scalar, Scalar, Scalar) {
        (
            Scalar::from_integer(self.a.clone()),
            Scalar::from_integer(self.b.clone()),
            Scalar::from_integer(self.c.clone()),
        )
    }

    /// Value of the linear form `a x + b y + c` at `p`.
    pub fn eval(&self, p: &Point) -> Scalar {
        let (a, b, c) = self.scalars();
        a * &p.x + b * &p.y + c
    }

    /// Exact incidence test.
    pub fn contains(&self, p: &Point) -> bool {
        self.eval(p).is_zero()
    }

    pub fn is_parallel(&self, other: &Line) -> bool {
        (&self.a * &other.b - &self.b * &other.a).is_zero()
    }

    /// Intersection point, or `None` for parallel (or equal) lines.
    pub fn intersection(&self, other: &Line) -> Option<Point> {
        let det = &self.a * &other.b - &self.b * &other.a;
        if det.is_zero() {
            return None;
        }
        let x = &self.b * &other.c - &self.c * &other.b;
        let y = &self.c * &other.a - &self.a * &other.c;
        Some(Point::new(Scalar::new(x, det.clone()), Scalar::new(y, det)))
    }

    /// A base point and direction vector parametrizing the line:
    /// `(0, -c/b)` and `(b, -a)` when `b != 0`, otherwise `(-c/a, 0)` and `(0, 1)`.
    pub fn parametrization(&self) -> (Point, Point) {
        let (a, b, c) = self.scalars();
        if !b.is_zero() {
            (Point::new(Scalar::zero(), -c / &b), Point::new(b, -a))
        } else {
            (
                Point::new(-c / &a, Scalar::zero()),
                Point::new(Scalar::zero(), Scalar::one()),
            )
        }
    }

    /// The point `base + t * direction` of [`Line::parametrization`].
    pub fn point_at(&self, t: &Scalar) -> Point {
        let (base, dir) = self.parametrization();
        Point::new(base.x + t * dir.x, base.y + t * dir.y)
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (coef, var) in [(&self.a, "x"), (&self.b, "y"), (&self.c, "")] {
            if coef.is_zero() {
                continue;
            }
            let mag = coef.abs();
            if wrote {
                f.write_str(if coef.is_negative() { " - " } else { " + " })?;
            } else if coef.is_negative() {
                f.write_str("-")?;
            }
            if !mag.is_one() || var.is_empty() {
                write!(f, "{mag}")?;
            }
            f.write_str(var)?;
            wrote = true;
        }
        f.write_str(" = 0")
    }
}

/// An ordered, duplicate-free set of interpolation nodes together with the
/// polynomial degree `n` it is meant for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodeSet {
    nodes: Vec<Point>,
    degree: usize,
}

impl NodeSet {
    pub fn new(nodes: Vec<Point>, degree: usize) -> Result<Self> {
        let mut seen = HashMap::with_capacity(nodes.len());
        for (index, p) in nodes.iter().enumerate() {
            if let Some(&first) = seen.get(p) {
                return Err(Error::DuplicateNode { first, index });
            }
            seen.insert(p, index);
        }
        Ok(NodeSet { nodes, degree })
    }

    pub fn nodes(&self) -> &[Point] {
        &self.nodes
    }

    pub fn node(&self, index: usize) -> Result<&Point> {
        self.nodes.get(index).ok_or(Error::IndexOutOfRange {
            index,
            len: self.nodes.len(),
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Fails unless the set has exactly `C(n + 2, 2)` nodes.
    pub fn require_poised_cardinality(&self) -> Result<()> {
        let expected = crate::poly::dimension(self.degree);
        if self.nodes.len() != expected {
            return Err(Error::WrongCardinality {
                degree: self.degree,
                expected,
                found: self.nodes.len(),
            });
        }
        Ok(())
    }

    /// Indices of the nodes lying on `line`.
    pub fn incident_indices(&self, line: &Line) -> Vec<usize> {
        self.nodes
            .iter()
            .enumerate()
            .filter(|(_, p)| line.contains(p))
            .map(|(i, _)| i)
            .collect()
    }

    pub fn into_nodes(self) -> Vec<Point> {
        self.nodes
    }
}
