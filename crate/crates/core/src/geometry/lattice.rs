use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::hull::{convex_hull, convex_hull_lattice, Facet, RationalPolytope};
use super::linalg;
use super::point::{dot, LatticePoint, Rational, RationalPoint};
use crate::error::{Error, Result};

/// A finite set of lattice points in `Z^dim`, kept sorted and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticeSet {
    dim: usize,
    points: Vec<LatticePoint>,
}

impl LatticeSet {
    pub fn empty(dim: usize) -> Self {
        LatticeSet {
            dim,
            points: Vec::new(),
        }
    }

    /// Builds a set from arbitrary points; no saturation is performed.
    pub fn new(dim: usize, points: impl IntoIterator<Item = LatticePoint>) -> Result<Self> {
        let points: BTreeSet<LatticePoint> = points.into_iter().collect();
        if let Some(p) = points.iter().find(|p| p.dim() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: p.dim(),
            });
        }
        Ok(LatticeSet {
            dim,
            points: points.into_iter().collect(),
        })
    }

    pub(crate) fn from_sorted(dim: usize, points: Vec<LatticePoint>) -> Self {
        debug_assert!(points.windows(2).all(|w| w[0] < w[1]));
        LatticeSet { dim, points }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[LatticePoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &LatticePoint) -> bool {
        self.points.binary_search(p).is_ok()
    }

    pub fn is_subset(&self, other: &LatticeSet) -> bool {
        self.dim == other.dim && self.points.iter().all(|p| other.contains(p))
    }

    pub fn union(&self, other: &LatticeSet) -> LatticeSet {
        let merged: BTreeSet<LatticePoint> =
            self.points.iter().chain(&other.points).cloned().collect();
        LatticeSet::from_sorted(self.dim, merged.into_iter().collect())
    }

    pub fn intersection(&self, other: &LatticeSet) -> LatticeSet {
        let common = self
            .points
            .iter()
            .filter(|p| other.contains(p))
            .cloned()
            .collect();
        LatticeSet::from_sorted(self.dim, common)
    }

    /// Applies a coordinate map and re-sorts.
    pub fn map(&self, f: impl Fn(&LatticePoint) -> LatticePoint) -> LatticeSet {
        let mapped: BTreeSet<LatticePoint> = self.points.iter().map(f).collect();
        LatticeSet::from_sorted(self.dim, mapped.into_iter().collect())
    }

    /// `{-x : x ∈ S}`.
    pub fn negate(&self) -> LatticeSet {
        self.map(LatticePoint::neg)
    }

    pub fn hull(&self) -> Result<RationalPolytope> {
        convex_hull_lattice(&self.points, self.dim)
    }

    /// Whether `conv(S) ∩ Z^n = S`.
    pub fn is_saturated(&self) -> bool {
        match saturate(&self.points, self.dim) {
            Ok(s) => s == *self,
            Err(_) => self.is_empty(),
        }
    }
}

impl fmt::Display for LatticeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.points.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

/// Extreme points of `conv(S)`, sorted.
pub fn vertices(s: &LatticeSet) -> Result<Vec<LatticePoint>> {
    let hull = s.hull()?;
    Ok(hull
        .vertices()
        .iter()
        .map(|v| {
            v.to_lattice()
                .expect("hull of lattice points has lattice vertices")
        })
        .collect())
}

/// All integer points of a polytope.
pub fn lattice_points_in(p: &RationalPolytope) -> LatticeSet {
    let dim = p.dim();
    let mut lo = Vec::with_capacity(dim);
    let mut hi = Vec::with_capacity(dim);
    for c in 0..dim {
        let coords = p.vertices().iter().map(|v| &v.coords()[c]);
        lo.push(linalg::ceil(
            coords.clone().min().expect("polytope has a vertex"),
        ));
        hi.push(linalg::floor(coords.max().expect("polytope has a vertex")));
    }
    if lo.iter().zip(&hi).any(|(l, h)| l > h) {
        return LatticeSet::empty(dim);
    }

    let mut out = Vec::new();
    if p.is_full_dimensional() {
        // Fix the leading coordinates and solve every facet inequality for
        // the last one, which leaves an exact integer interval.
        let rows: Vec<(Vec<BigInt>, BigInt)> = p
            .facets()
            .iter()
            .map(|f| {
                let den = f.offset.denom();
                (
                    f.normal.iter().map(|a| a * den).collect(),
                    f.offset.numer().clone(),
                )
            })
            .collect();
        let last = dim - 1;
        for_each_in_box(&lo[..last], &hi[..last], |head| {
            let mut low = lo[last].clone();
            let mut high = hi[last].clone();
            for (a, c) in &rows {
                let rest = c - dot(&a[..last], head);
                let an = &a[last];
                if an.is_zero() {
                    if rest.is_negative() {
                        return;
                    }
                } else if an.is_positive() {
                    high = high.min(linalg::floor(&Rational::new(rest, an.clone())));
                } else {
                    low = low.max(linalg::ceil(&Rational::new(rest, an.clone())));
                }
            }
            let mut x = low;
            while x <= high {
                let mut coords = head.to_vec();
                coords.push(x.clone());
                out.push(LatticePoint::new(coords));
                x += 1;
            }
        });
    } else {
        for_each_in_box(&lo, &hi, |coords| {
            let q = LatticePoint::new(coords.to_vec());
            if p.contains(&q) {
                out.push(q);
            }
        });
    }
    out.sort();
    LatticeSet::from_sorted(dim, out)
}

/// Calls `f` on every integer vector of the box `[lo, hi]`, in lexicographic order.
pub(crate) fn for_each_in_box(lo: &[BigInt], hi: &[BigInt], mut f: impl FnMut(&[BigInt])) {
    if lo.iter().zip(hi).any(|(l, h)| l > h) {
        return;
    }
    let mut cur = lo.to_vec();
    loop {
        f(&cur);
        let mut i = cur.len();
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if cur[i] < hi[i] {
                cur[i] += 1;
                cur[i + 1..].clone_from_slice(&lo[i + 1..]);
                break;
            }
        }
    }
}

/// `conv(points) ∩ Z^dim`.
pub fn saturate(points: &[LatticePoint], dim: usize) -> Result<LatticeSet> {
    Ok(lattice_points_in(&convex_hull_lattice(points, dim)?))
}

/// Whether the origin lies strictly inside every facet.
pub fn contains_origin_interior(p: &RationalPolytope) -> Result<bool> {
    if !p.is_full_dimensional() {
        return Err(Error::LowerDimensional);
    }
    Ok(p.facets().iter().all(|f| f.offset.is_positive()))
}

pub fn count(s: &LatticeSet) -> usize {
    s.len()
}

/// The polytope `{x : normal · x ≤ offset for every facet}`.
///
/// Fails with `Unbounded` when the normals do not positively span `Q^dim`
/// and with `Empty` when the system is infeasible.
pub fn halfspace_polytope(dim: usize, halfspaces: &[Facet]) -> Result<RationalPolytope> {
    if let Some(h) = halfspaces.iter().find(|h| h.normal.len() != dim) {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: h.normal.len(),
        });
    }
    let normals: Vec<LatticePoint> = halfspaces
        .iter()
        .map(|h| LatticePoint::new(h.normal.clone()))
        .chain(std::iter::once(LatticePoint::origin(dim)))
        .collect();
    let cone = convex_hull_lattice(&normals, dim)?;
    if !cone.is_full_dimensional() || !contains_origin_interior(&cone)? {
        return Err(Error::Unbounded);
    }

    // Scale each row to integers so vertex candidates come from integer systems.
    let rows: Vec<(Vec<BigInt>, BigInt)> = halfspaces
        .iter()
        .map(|h| {
            let den = h.offset.denom();
            (
                h.normal.iter().map(|a| a * den).collect(),
                h.offset.numer().clone(),
            )
        })
        .collect();
    let mut candidates: BTreeSet<RationalPoint> = BTreeSet::new();
    for subset in super::hull::combinations(rows.len(), dim) {
        let a: Vec<Vec<BigInt>> = subset.iter().map(|&i| rows[i].0.clone()).collect();
        let b: Vec<BigInt> = subset.iter().map(|&i| rows[i].1.clone()).collect();
        let Some(x) = linalg::solve(&a, &b) else {
            continue;
        };
        let x = RationalPoint::new(x);
        if halfspaces.iter().all(|h| h.admits_rational(&x)) {
            candidates.insert(x);
        }
    }
    if candidates.is_empty() {
        return Err(Error::Empty);
    }
    let pts: Vec<RationalPoint> = candidates.into_iter().collect();
    convex_hull(&pts, dim)
}

/// Lattice points of a bounded halfspace system; empty when infeasible.
pub fn lattice_points_in_halfspaces(dim: usize, halfspaces: &[Facet]) -> Result<LatticeSet> {
    match halfspace_polytope(dim, halfspaces) {
        Ok(p) => Ok(lattice_points_in(&p)),
        Err(Error::Empty) => Ok(LatticeSet::empty(dim)),
        Err(e) => Err(e),
    }
}

pub(crate) fn unit_facet(normal: Vec<BigInt>, offset: BigInt) -> Facet {
    Facet {
        normal,
        offset: Rational::from_integer(offset),
    }
}
