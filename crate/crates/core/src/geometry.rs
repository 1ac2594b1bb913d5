//! Exact rational points and segment intersection.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> Rational {
    BigRational::from_integer(BigInt::from(v))
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Point {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Point {
        Point::new(int(x), int(y))
    }

    pub fn scaled(&self, k: &Rational) -> Point {
        Point::new(&self.x * k, &self.y * k)
    }

    pub fn translated(&self, dx: &Rational, dy: &Rational) -> Point {
        Point::new(&self.x + dx, &self.y + dy)
    }

    pub fn midpoint(&self, other: &Point) -> Point {
        let half = rat(1, 2);
        Point::new((&self.x + &other.x) * &half, (&self.y + &other.y) * &half)
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (
            self.x.to_f64().unwrap_or(f64::NAN),
            self.y.to_f64().unwrap_or(f64::NAN),
        )
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Sign of the cross product `(b - a) × (c - a)`.
pub fn orient(a: &Point, b: &Point, c: &Point) -> Ordering {
    let lhs = (&b.x - &a.x) * (&c.y - &a.y);
    let rhs = (&b.y - &a.y) * (&c.x - &a.x);
    lhs.cmp(&rhs)
}

/// How two closed segments meet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Contact {
    Disjoint,
    /// Interiors cross transversally in exactly one point.
    Proper(Point),
    /// A single common point that is an endpoint of at least one segment.
    Touch(Point),
    /// Collinear with a common part of positive length.
    Overlap,
}

fn in_box(p: &Point, a: &Point, b: &Point) -> bool {
    let (xlo, xhi) = if a.x <= b.x {
        (&a.x, &b.x)
    } else {
        (&b.x, &a.x)
    };
    let (ylo, yhi) = if a.y <= b.y {
        (&a.y, &b.y)
    } else {
        (&b.y, &a.y)
    };
    xlo <= &p.x && &p.x <= xhi && ylo <= &p.y && &p.y <= yhi
}

fn boxes_disjoint(a: &Point, b: &Point, c: &Point, d: &Point) -> bool {
    let (axl, axh) = if a.x <= b.x {
        (&a.x, &b.x)
    } else {
        (&b.x, &a.x)
    };
    let (cxl, cxh) = if c.x <= d.x {
        (&c.x, &d.x)
    } else {
        (&d.x, &c.x)
    };
    if axh < cxl || cxh < axl {
        return true;
    }
    let (ayl, ayh) = if a.y <= b.y {
        (&a.y, &b.y)
    } else {
        (&b.y, &a.y)
    };
    let (cyl, cyh) = if c.y <= d.y {
        (&c.y, &d.y)
    } else {
        (&d.y, &c.y)
    };
    ayh < cyl || cyh < ayl
}

/// Classifies the intersection of segments `ab` and `cd` exactly.
pub fn segment_contact(a: &Point, b: &Point, c: &Point, d: &Point) -> Contact {
    if boxes_disjoint(a, b, c, d) {
        return Contact::Disjoint;
    }
    let o1 = orient(a, b, c);
    let o2 = orient(a, b, d);
    let o3 = orient(c, d, a);
    let o4 = orient(c, d, b);

    if o1 == Ordering::Equal && o2 == Ordering::Equal {
        return collinear_contact(a, b, c, d);
    }
    if o1 != Ordering::Equal
        && o2 != Ordering::Equal
        && o3 != Ordering::Equal
        && o4 != Ordering::Equal
    {
        if o1 != o2 && o3 != o4 {
            return Contact::Proper(line_intersection(a, b, c, d));
        }
        return Contact::Disjoint;
    }
    // Exactly one endpoint lies on the other segment's line (or a shared endpoint).
    for (p, q0, q1, o) in [(c, a, b, o1), (d, a, b, o2), (a, c, d, o3), (b, c, d, o4)] {
        if o == Ordering::Equal && in_box(p, q0, q1) {
            return Contact::Touch(p.clone());
        }
    }
    Contact::Disjoint
}

fn collinear_contact(a: &Point, b: &Point, c: &Point, d: &Point) -> Contact {
    // Project on the dominant axis.
    let key = |p: &Point| -> (Rational, Rational) {
        if a.x != b.x || c.x != d.x {
            (p.x.clone(), p.y.clone())
        } else {
            (p.y.clone(), p.x.clone())
        }
    };
    let (mut s0, mut s1) = (key(a), key(b));
    if s1 < s0 {
        std::mem::swap(&mut s0, &mut s1);
    }
    let (mut t0, mut t1) = (key(c), key(d));
    if t1 < t0 {
        std::mem::swap(&mut t0, &mut t1);
    }
    let lo = if s0 > t0 { s0 } else { t0 };
    let hi = if s1 < t1 { s1 } else { t1 };
    match lo.cmp(&hi) {
        Ordering::Greater => Contact::Disjoint,
        Ordering::Equal => {
            let touch = [a, b, c, d]
                .into_iter()
                .find(|p| key(p) == lo)
                .expect("touch point is an endpoint");
            Contact::Touch(touch.clone())
        }
        Ordering::Less => Contact::Overlap,
    }
}

fn line_intersection(a: &Point, b: &Point, c: &Point, d: &Point) -> Point {
    let rx = &b.x - &a.x;
    let ry = &b.y - &a.y;
    let sx = &d.x - &c.x;
    let sy = &d.y - &c.y;
    let denom = &rx * &sy - &ry * &sx;
    debug_assert!(!denom.is_zero());
    let t = ((&c.x - &a.x) * &sy - (&c.y - &a.y) * &sx) / denom;
    Point::new(&a.x + &t * &rx, &a.y + &t * &ry)
}

/// Whether `p` lies on segment `ab` (endpoints included).
pub fn on_segment(p: &Point, a: &Point, b: &Point) -> bool {
    orient(a, b, p) == Ordering::Equal && in_box(p, a, b)
}

/// The lattice point nearest to `radius · (cos θ, sin θ)`.
pub fn lattice_circle_point(theta: f64, radius: i64) -> Point {
    let r = radius as f64;
    Point::from_ints(
        (r * theta.cos()).round() as i64,
        (r * theta.sin()).round() as i64,
    )
}
