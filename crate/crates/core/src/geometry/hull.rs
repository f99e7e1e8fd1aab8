//! Exact convex hulls in small dimension.
//!
//! Points are rescaled to a common integer grid first, so every predicate is an
//! integer sign test. The plane uses a monotone chain; higher dimensions
//! enumerate candidate facets through `n`-subsets of the points that survive a
//! midpoint filter, which is fine for the few hundred points handled here.

use std::collections::{BTreeSet, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use super::linalg;
use super::point::{dot, dot_q, LatticePoint, Rational, RationalPoint};
use crate::error::{Error, Result};

/// A supporting hyperplane `{x : normal · x = offset}` with the polytope on the
/// side `normal · x ≤ offset`. The normal is a primitive integer vector.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Facet {
    pub normal: Vec<BigInt>,
    pub offset: Rational,
}

impl Facet {
    /// `normal · x ≤ offset` for a lattice point.
    pub fn admits(&self, x: &LatticePoint) -> bool {
        dot(&self.normal, x.coords()) * self.offset.denom() <= *self.offset.numer()
    }

    pub fn admits_rational(&self, x: &RationalPoint) -> bool {
        dot_q(&self.normal, x.coords()) <= self.offset
    }

    /// Whether the point lies on the hyperplane.
    pub fn touches(&self, x: &LatticePoint) -> bool {
        dot(&self.normal, x.coords()) * self.offset.denom() == *self.offset.numer()
    }

    pub fn touches_rational(&self, x: &RationalPoint) -> bool {
        dot_q(&self.normal, x.coords()) == self.offset
    }
}

/// Data needed to test membership in a hull that does not span `Q^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Section {
    /// `normal · x = offset` for every point of the affine span.
    equalities: Vec<Facet>,
    /// Coordinates onto which the affine span projects bijectively.
    coords: Vec<usize>,
    /// Facets of the projected hull, in the projected coordinates.
    facets: Vec<Facet>,
}

/// V-representation (plus H-representation when full-dimensional) of a
/// polytope with rational vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPolytope {
    dim: usize,
    vertices: Vec<RationalPoint>,
    facets: Vec<Facet>,
    affine_dim: usize,
    section: Option<Section>,
}

impl RationalPolytope {
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Extreme points, sorted lexicographically.
    pub fn vertices(&self) -> &[RationalPoint] {
        &self.vertices
    }

    /// Facets, sorted; empty unless the polytope is full-dimensional.
    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.affine_dim == self.dim
    }

    /// Dimension of the affine span of the vertices.
    pub fn affine_dim(&self) -> usize {
        self.affine_dim
    }

    pub fn contains(&self, x: &LatticePoint) -> bool {
        match &self.section {
            None => self.facets.iter().all(|f| f.admits(x)),
            Some(s) => {
                if !s.equalities.iter().all(|e| e.touches(x)) {
                    return false;
                }
                let projected =
                    LatticePoint::new(s.coords.iter().map(|&c| x.coords()[c].clone()).collect());
                s.facets.iter().all(|f| f.admits(&projected))
            }
        }
    }

    pub fn contains_rational(&self, x: &RationalPoint) -> bool {
        match &self.section {
            None => self.facets.iter().all(|f| f.admits_rational(x)),
            Some(s) => {
                if !s.equalities.iter().all(|e| e.touches_rational(x)) {
                    return false;
                }
                let projected =
                    RationalPoint::new(s.coords.iter().map(|&c| x.coords()[c].clone()).collect());
                s.facets.iter().all(|f| f.admits_rational(&projected))
            }
        }
    }

    /// Vertices lying on the given facet.
    pub fn facet_vertices(&self, facet: &Facet) -> Vec<&RationalPoint> {
        self.vertices
            .iter()
            .filter(|v| facet.touches_rational(v))
            .collect()
    }
}

/// Convex hull of a finite set of rational points in `Q^dim`.
pub fn convex_hull(points: &[RationalPoint], dim: usize) -> Result<RationalPolytope> {
    if points.is_empty() {
        return Err(Error::Empty);
    }
    if let Some(p) = points.iter().find(|p| p.dim() != dim) {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: p.dim(),
        });
    }
    let unique: Vec<RationalPoint> = points
        .iter()
        .cloned()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();

    let scale = unique
        .iter()
        .flat_map(|p| p.coords())
        .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let grid: Vec<Vec<BigInt>> = unique
        .iter()
        .map(|p| {
            p.coords()
                .iter()
                .map(|c| (c * &scale).to_integer())
                .collect()
        })
        .collect();

    let hull = int_hull(&grid, dim);
    let unscale = |f: Facet| Facet {
        offset: f.offset / Rational::from_integer(scale.clone()),
        normal: f.normal,
    };

    let vertices: Vec<RationalPoint> = hull.vertices.iter().map(|&i| unique[i].clone()).collect();
    let mut facets: Vec<Facet> = hull.facets.into_iter().map(unscale).collect();
    facets.sort();
    let section = hull.section.map(|s| Section {
        equalities: s.equalities.into_iter().map(unscale).collect(),
        coords: s.coords,
        facets: s.facets.into_iter().map(unscale).collect(),
    });
    let mut vertices = vertices;
    vertices.sort();
    Ok(RationalPolytope {
        dim,
        vertices,
        facets,
        affine_dim: hull.affine_dim,
        section,
    })
}

/// Convex hull of lattice points.
pub fn convex_hull_lattice(points: &[LatticePoint], dim: usize) -> Result<RationalPolytope> {
    let rational: Vec<RationalPoint> = points.iter().map(LatticePoint::to_rational).collect();
    convex_hull(&rational, dim)
}

struct IntHull {
    vertices: Vec<usize>,
    facets: Vec<Facet>,
    affine_dim: usize,
    section: Option<Section>,
}

fn int_facet(normal: Vec<BigInt>, offset: BigInt) -> Facet {
    Facet {
        normal,
        offset: Rational::from_integer(offset),
    }
}

/// Hull of distinct integer points.
fn int_hull(points: &[Vec<BigInt>], dim: usize) -> IntHull {
    let base = &points[0];
    let mut diffs: Vec<Vec<Rational>> = points[1..]
        .iter()
        .map(|p| {
            p.iter()
                .zip(base)
                .map(|(a, b)| Rational::from_integer(a - b))
                .collect()
        })
        .collect();
    let span_rows = diffs.clone();
    let pivots = linalg::rref(&mut diffs);
    let rank = pivots.len();

    if rank == dim {
        let (vertices, facets) = full_hull(points, dim);
        return IntHull {
            vertices,
            facets,
            affine_dim: dim,
            section: None,
        };
    }

    let equalities: Vec<Facet> = linalg::nullspace(&span_rows, dim)
        .iter()
        .map(|v| {
            let normal = linalg::primitive_from_rational(v);
            let offset = dot(&normal, base);
            int_facet(normal, offset)
        })
        .collect();

    if rank == 0 {
        return IntHull {
            vertices: vec![0],
            facets: Vec::new(),
            affine_dim: 0,
            section: Some(Section {
                equalities,
                coords: Vec::new(),
                facets: Vec::new(),
            }),
        };
    }

    let projected: Vec<Vec<BigInt>> = points
        .iter()
        .map(|p| pivots.iter().map(|&c| p[c].clone()).collect())
        .collect();
    let (vertices, facets) = full_hull(&projected, rank);
    IntHull {
        vertices,
        facets: Vec::new(),
        affine_dim: rank,
        section: Some(Section {
            equalities,
            coords: pivots,
            facets,
        }),
    }
}

/// Hull of distinct integer points whose affine span is all of `Q^dim`.
fn full_hull(points: &[Vec<BigInt>], dim: usize) -> (Vec<usize>, Vec<Facet>) {
    match dim {
        1 => hull_1d(points),
        2 => hull_2d(points),
        _ => hull_nd(points, dim),
    }
}

fn hull_1d(points: &[Vec<BigInt>]) -> (Vec<usize>, Vec<Facet>) {
    let (lo, _) = points
        .iter()
        .enumerate()
        .min_by(|a, b| a.1[0].cmp(&b.1[0]))
        .unwrap();
    let (hi, _) = points
        .iter()
        .enumerate()
        .max_by(|a, b| a.1[0].cmp(&b.1[0]))
        .unwrap();
    let facets = vec![
        int_facet(vec![BigInt::one()], points[hi][0].clone()),
        int_facet(vec![-BigInt::one()], -points[lo][0].clone()),
    ];
    (vec![lo, hi], facets)
}

fn cross(o: &[BigInt], a: &[BigInt], b: &[BigInt]) -> BigInt {
    (&a[0] - &o[0]) * (&b[1] - &o[1]) - (&a[1] - &o[1]) * (&b[0] - &o[0])
}

/// Andrew's monotone chain; strictly convex counter-clockwise output.
fn hull_2d(points: &[Vec<BigInt>]) -> (Vec<usize>, Vec<Facet>) {
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&a, &b| points[a].cmp(&points[b]));

    let mut chain: Vec<usize> = Vec::with_capacity(2 * order.len());
    for pass in 0..2 {
        let start = chain.len();
        let seq: Box<dyn Iterator<Item = &usize>> = if pass == 0 {
            Box::new(order.iter())
        } else {
            Box::new(order.iter().rev())
        };
        for &i in seq {
            while chain.len() >= start + 2 {
                let o = &points[chain[chain.len() - 2]];
                let a = &points[chain[chain.len() - 1]];
                if cross(o, a, &points[i]).is_positive() {
                    break;
                }
                chain.pop();
            }
            chain.push(i);
        }
        chain.pop();
    }

    let facets = (0..chain.len())
        .map(|k| {
            let a = &points[chain[k]];
            let b = &points[chain[(k + 1) % chain.len()]];
            let normal = linalg::primitive_int(vec![&b[1] - &a[1], &a[0] - &b[0]]);
            let offset = dot(&normal, a);
            int_facet(normal, offset)
        })
        .collect();
    (chain, facets)
}

fn hull_nd(points: &[Vec<BigInt>], dim: usize) -> (Vec<usize>, Vec<Facet>) {
    // A midpoint of two other points is never extreme; dropping such points
    // leaves the hull unchanged.
    let present: HashSet<&Vec<BigInt>> = points.iter().collect();
    let candidates: Vec<usize> = (0..points.len())
        .filter(|&i| {
            let p = &points[i];
            !points.iter().any(|q| {
                q != p && {
                    let mirror: Vec<BigInt> = p.iter().zip(q).map(|(a, b)| a * 2 - b).collect();
                    present.contains(&mirror)
                }
            })
        })
        .collect();

    let mut facets: BTreeSet<Facet> = BTreeSet::new();
    let mut rejected: HashSet<Facet> = HashSet::new();
    for subset in combinations(candidates.len(), dim) {
        let anchor = &points[candidates[subset[0]]];
        let spans: Vec<Vec<BigInt>> = subset[1..]
            .iter()
            .map(|&s| {
                points[candidates[s]]
                    .iter()
                    .zip(anchor)
                    .map(|(a, b)| a - b)
                    .collect()
            })
            .collect();
        let Some(normal) = linalg::cross_normal(&spans) else {
            continue;
        };
        let offset = dot(&normal, anchor);
        let up = int_facet(normal.clone(), offset.clone());
        let down = int_facet(normal.iter().map(|x| -x).collect(), -offset.clone());
        if facets.contains(&up) || facets.contains(&down) || rejected.contains(&up) {
            continue;
        }
        let (mut above, mut below) = (false, false);
        for &c in &candidates {
            let s = dot(&normal, &points[c]) - &offset;
            if s.is_positive() {
                above = true;
            } else if s.is_negative() {
                below = true;
            }
            if above && below {
                break;
            }
        }
        match (above, below) {
            (false, true) => {
                facets.insert(up);
            }
            (true, false) => {
                facets.insert(down);
            }
            _ => {
                rejected.insert(up);
            }
        }
    }

    let facets: Vec<Facet> = facets.into_iter().collect();
    let vertices = candidates
        .into_iter()
        .filter(|&c| {
            let p = LatticePoint::new(points[c].clone());
            let mut normals: Vec<Vec<Rational>> = facets
                .iter()
                .filter(|f| f.touches(&p))
                .map(|f| {
                    f.normal
                        .iter()
                        .cloned()
                        .map(Rational::from_integer)
                        .collect()
                })
                .collect();
            linalg::rref(&mut normals).len() == dim
        })
        .collect();
    (vertices, facets)
}

/// All `k`-subsets of `0..n`, in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut state: Option<Vec<usize>> = if k <= n { Some((0..k).collect()) } else { None };
    std::iter::from_fn(move || {
        let current = state.clone()?;
        let mut next = current.clone();
        let mut i = k;
        loop {
            if i == 0 {
                state = None;
                break;
            }
            i -= 1;
            if next[i] < n - k + i {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
                state = Some(next);
                break;
            }
        }
        Some(current)
    })
}
