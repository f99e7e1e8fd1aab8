use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact rational number with arbitrary-precision numerator and denominator.
///
/// `BigRational` keeps itself in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// A point of `Z^n`. Ordering is lexicographic on the coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePoint(Vec<BigInt>);

impl LatticePoint {
    pub fn new(coords: Vec<BigInt>) -> Self {
        LatticePoint(coords)
    }

    pub fn origin(dim: usize) -> Self {
        LatticePoint(vec![BigInt::zero(); dim])
    }

    /// The `i`-th unit vector scaled by `sign`.
    pub fn unit(dim: usize, i: usize, sign: i64) -> Self {
        let mut coords = vec![BigInt::zero(); dim];
        coords[i] = BigInt::from(sign);
        LatticePoint(coords)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<BigInt> {
        self.0
    }

    pub fn dot(&self, other: &LatticePoint) -> BigInt {
        dot(&self.0, &other.0)
    }

    pub fn neg(&self) -> LatticePoint {
        LatticePoint(self.0.iter().map(|c| -c).collect())
    }

    pub fn to_rational(&self) -> RationalPoint {
        RationalPoint(self.0.iter().cloned().map(Rational::from_integer).collect())
    }

    pub fn is_origin(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Coordinates `x_1..x_{n-1}`.
    pub fn head(&self) -> &[BigInt] {
        &self.0[..self.0.len() - 1]
    }

    /// The last coordinate `x_n`.
    pub fn last(&self) -> &BigInt {
        &self.0[self.0.len() - 1]
    }
}

impl From<Vec<i64>> for LatticePoint {
    fn from(coords: Vec<i64>) -> Self {
        LatticePoint(coords.into_iter().map(BigInt::from).collect())
    }
}

impl<const N: usize> From<[i64; N]> for LatticePoint {
    fn from(coords: [i64; N]) -> Self {
        LatticePoint(coords.iter().map(|&c| BigInt::from(c)).collect())
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A point of `Q^n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RationalPoint(Vec<Rational>);

impl RationalPoint {
    pub fn new(coords: Vec<Rational>) -> Self {
        RationalPoint(coords)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn scale(&self, factor: &Rational) -> RationalPoint {
        RationalPoint(self.0.iter().map(|c| c * factor).collect())
    }

    /// Returns the point as a lattice point when every coordinate is integral.
    pub fn to_lattice(&self) -> Option<LatticePoint> {
        self.0
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(LatticePoint)
    }
}

impl From<Vec<(i64, i64)>> for RationalPoint {
    fn from(coords: Vec<(i64, i64)>) -> Self {
        RationalPoint(
            coords
                .into_iter()
                .map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
                .collect(),
        )
    }
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

pub(crate) fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn dot_q(a: &[BigInt], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .fold(Rational::zero(), |acc, (x, y)| acc + y * x)
}

/// Formats a rational as `"p/q"`, or `"p"` when integral.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `"p/q"` or `"p"` into a canonical rational.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rational::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}
