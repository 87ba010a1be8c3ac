use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;


use crate::error::{Error, Result};

/// Exact rationals used throughout the symbolic core.
pub type Q = Ratio<i64>;

/// Shorthand for the rational `n/d`.
pub fn q(n: i64, d: i64) -> Q {
    Ratio::new(n, d)
}

/// An angle measured in full turns, reduced into `[0, 1)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Turn(Q);

impl Turn {
    pub const ZERO: Turn = Turn(Ratio::new_raw(0, 1));
    pub const HALF: Turn = Turn(Ratio::new_raw(1, 2));

    pub fn new(value: Q) -> Turn {
        Turn(value - value.floor())
    }

    pub fn frac(n: i64, d: i64) -> Turn {
        Turn::new(q(n, d))
    }

    pub fn value(self) -> Q {
        self.0
    }

    pub fn is_central(self) -> bool {
        self == Turn::ZERO || self == Turn::HALF
    }

    pub fn degrees(self) -> f64 {
        360.0 * (*self.0.numer() as f64) / (*self.0.denom() as f64)
    }

    pub fn to_f64(self) -> f64 {
        (*self.0.numer() as f64) / (*self.0.denom() as f64)
    }
}

impl std::ops::Add for Turn {
    type Output = Turn;
    fn add(self, rhs: Turn) -> Turn {
        Turn::new(self.0 + rhs.0)
    }
}

impl std::ops::Sub for Turn {
    type Output = Turn;
    fn sub(self, rhs: Turn) -> Turn {
        Turn::new(self.0 - rhs.0)
    }
}

impl std::ops::Neg for Turn {
    type Output = Turn;
    fn neg(self) -> Turn {
        Turn::new(-self.0)
    }
}

impl fmt::Display for Turn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_q(f, self.0)
    }
}

impl fmt::Debug for Turn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_q(f, self.0)
    }
}

fn write_q(f: &mut fmt::Formatter<'_>, v: Q) -> fmt::Result {
    if v.is_integer() {
        write!(f, "{}", v.numer())
    } else {
        write!(f, "{}/{}", v.numer(), v.denom())
    }
}

/// Renders a rational as `n` or `n/d`.
pub fn fmt_q(v: Q) -> String {
    if v.is_integer() {
        format!("{}", v.numer())
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

/// Reduces any rational modulo 1.
pub fn turn_normalize(value: Q) -> Turn {
    Turn::new(value)
}

/// A torus point `(u, v)` in turns.
pub type Point = (Turn, Turn);

/// Renders a torus point as `(u, v)`.
pub fn fmt_point(p: Point) -> String {
    format!("({}, {})", p.0, p.1)
}

/// A primitive integer class `(a, b)` with canonical sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slope {
    pub a: i64,
    pub b: i64,
}

impl Slope {
    /// Builds a primitive slope, flipping the sign into canonical form.
    pub fn new(a: i64, b: i64) -> Result<Slope> {
        if a.gcd(&b) != 1 {
            return Err(Error::NonPrimitive(a, b));
        }
        Ok(Slope::canonical_with_sign(a, b).0)
    }

    /// Divides out the gcd and fixes the sign; returns the sign applied.
    /// Panics on `(0, 0)`.
    pub fn canonical_with_sign(a: i64, b: i64) -> (Slope, i64) {
        let g = a.gcd(&b);
        assert!(g != 0, "zero vector has no slope");
        let (a, b) = (a / g, b / g);
        if a > 0 || (a == 0 && b > 0) {
            (Slope { a, b }, 1)
        } else {
            (Slope { a: -a, b: -b }, -1)
        }
    }

    pub fn from_vector(a: i64, b: i64) -> Slope {
        Slope::canonical_with_sign(a, b).0
    }

    pub fn is_horizontal_normal(self) -> bool {
        self.a == 0
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// Geometric intersection number `|a·d − b·c|` of two classes.
pub fn distance(s1: Slope, s2: Slope) -> i64 {
    (s1.a * s2.b - s1.b * s2.a).abs()
}

/// Turns an integer into a rational.
pub fn qi(n: i64) -> Q {
    Ratio::from_integer(n)
}
