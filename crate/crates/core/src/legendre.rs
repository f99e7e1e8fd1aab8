//! The discrete Legendre transform and the polar pipeline
//! `K → K_L → K_Q* → K_Z*`.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::geometry::{
    convex_hull, dot, for_each_in_box, lattice_points_in, lattice_points_in_halfspaces, saturate,
    vertices, Facet, LatticePoint, LatticeSet, Rational, RationalPoint, RationalPolytope,
};
use crate::hrep::{extract_graph_hrep, GraphHyperplane, Side};

/// An element of `Z ∪ {+∞}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtInt {
    Finite(BigInt),
    PlusInfinity,
}

impl ExtInt {
    pub fn finite(&self) -> Option<&BigInt> {
        match self {
            ExtInt::Finite(v) => Some(v),
            ExtInt::PlusInfinity => None,
        }
    }
}

impl From<i64> for ExtInt {
    fn from(v: i64) -> Self {
        ExtInt::Finite(BigInt::from(v))
    }
}

impl fmt::Display for ExtInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtInt::Finite(v) => write!(f, "{v}"),
            ExtInt::PlusInfinity => write!(f, "+inf"),
        }
    }
}

/// Conjugate of an affine function `b·x + β`: finite only at `p = b`, where it equals `-β`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffineConjugate {
    pub support_point: LatticePoint,
    pub value: BigInt,
}

impl AffineConjugate {
    pub fn eval(&self, p: &LatticePoint) -> ExtInt {
        if *p == self.support_point {
            ExtInt::Finite(self.value.clone())
        } else {
            ExtInt::PlusInfinity
        }
    }

    /// The point `(b, -β)` of `Z^n`.
    pub fn point(&self) -> LatticePoint {
        let mut coords = self.support_point.coords().to_vec();
        coords.push(self.value.clone());
        LatticePoint::new(coords)
    }
}

/// A function on the integer box `[lo, hi] ⊂ Z^d` with values in `Z ∪ {+∞}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoxFunction {
    lo: Vec<BigInt>,
    hi: Vec<BigInt>,
    values: Vec<(LatticePoint, ExtInt)>,
}

impl BoxFunction {
    pub fn from_fn(lo: Vec<BigInt>, hi: Vec<BigInt>, f: impl Fn(&LatticePoint) -> ExtInt) -> Self {
        let mut values = Vec::new();
        for_each_in_box(&lo, &hi, |x| {
            let p = LatticePoint::new(x.to_vec());
            let v = f(&p);
            values.push((p, v));
        });
        BoxFunction { lo, hi, values }
    }

    /// The cube `[-r, r]^d`.
    pub fn on_cube(d: usize, r: i64, f: impl Fn(&LatticePoint) -> ExtInt) -> Self {
        BoxFunction::from_fn(vec![BigInt::from(-r); d], vec![BigInt::from(r); d], f)
    }

    pub fn dim(&self) -> usize {
        self.lo.len()
    }

    pub fn lo(&self) -> &[BigInt] {
        &self.lo
    }

    pub fn hi(&self) -> &[BigInt] {
        &self.hi
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(LatticePoint, ExtInt)> {
        self.values.iter()
    }

    pub fn get(&self, x: &LatticePoint) -> Option<&ExtInt> {
        self.values
            .binary_search_by(|(p, _)| p.cmp(x))
            .ok()
            .map(|i| &self.values[i].1)
    }
}

/// `b·x + β` as the conjugate pair `(b, -β)`.
pub fn dlt_affine(h: &GraphHyperplane) -> AffineConjugate {
    AffineConjugate {
        support_point: LatticePoint::new(h.b.clone()),
        value: -h.beta.clone(),
    }
}

/// `f*(p) = max{⟨x, p⟩ - f(x)}` over the finite values of `f`; `+∞` when `f` has none.
pub fn dlt_finite(f: &BoxFunction, p: &LatticePoint) -> Result<ExtInt> {
    if f.is_empty() {
        return Err(Error::EmptyDomain);
    }
    if p.dim() != f.dim() {
        return Err(Error::DimensionMismatch {
            expected: f.dim(),
            found: p.dim(),
        });
    }
    let best = f
        .iter()
        .filter_map(|(x, v)| v.finite().map(|v| x.dot(p) - v))
        .max();
    Ok(best.map_or(ExtInt::PlusInfinity, ExtInt::Finite))
}

/// Conjugate points `B_i = (b_i, -β_i)` of the hyperplanes and their saturation `K_L`.
pub fn build_kl(k: &LatticeSet) -> Result<(LatticeSet, Vec<LatticePoint>)> {
    let hrep = extract_graph_hrep(k)?;
    let k0: Vec<LatticePoint> = hrep
        .facets
        .iter()
        .map(|h| dlt_affine(h).point())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let k_l = saturate(&k0, k.dim())?;
    Ok((k_l, k0))
}

/// `λ = 1 / max_{r,i} ⟨A_r, B_i⟩`.
pub fn compute_lambda(kv: &[LatticePoint], k0: &[LatticePoint]) -> Result<Rational> {
    if kv.is_empty() || k0.is_empty() {
        return Err(Error::Empty);
    }
    let max = kv
        .iter()
        .flat_map(|a| k0.iter().map(move |b| a.dot(b)))
        .max()
        .expect("both lists are non-empty");
    if !max.is_positive() {
        return Err(Error::LambdaUndefined);
    }
    Ok(Rational::new(BigInt::from(1), max))
}

/// Which construction produced a polar.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    /// Graph facets of `K` conjugated to points.
    Forward,
    /// Vertices of `K` read as conjugate points and transformed back to hyperplanes.
    Biconjugate,
}

/// Every stage of one polar computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolarResult {
    pub route: Route,
    pub k: LatticeSet,
    /// Vertices `A_r` of `conv(K)`.
    pub kv: Vec<LatticePoint>,
    /// Hyperplanes paired with the points of `k0`.
    pub hyperplanes: Vec<GraphHyperplane>,
    /// Points `B_i` spanning `K_L`.
    pub k0: Vec<LatticePoint>,
    pub k_l: LatticeSet,
    pub lambda: Rational,
    pub k_q_star: RationalPolytope,
    pub k_z_star: LatticeSet,
}

impl PolarResult {
    pub fn k_l_vertices(&self) -> Vec<LatticePoint> {
        vertices(&self.k_l).expect("K_L is non-empty")
    }

    pub fn k_z_star_vertices(&self) -> Vec<LatticePoint> {
        vertices(&self.k_z_star).expect("K_Z* is non-empty")
    }
}

/// Finishes the pipeline once `K_0` is known: `λ`, `K_Q* = λ·conv(K_0)` and
/// `K_Z* = conv(K_Q*/λ) ∩ Z^n`.
fn finish(
    route: Route,
    k: &LatticeSet,
    kv: Vec<LatticePoint>,
    hyperplanes: Vec<GraphHyperplane>,
    k0: Vec<LatticePoint>,
    k_l: LatticeSet,
) -> Result<PolarResult> {
    let n = k.dim();
    let lambda = compute_lambda(&kv, &k0)?;
    let scaled: Vec<RationalPoint> = k0.iter().map(|b| b.to_rational().scale(&lambda)).collect();
    let k_q_star = convex_hull(&scaled, n)?;
    let inverse = lambda.recip();
    let unscaled: Vec<RationalPoint> = k_q_star
        .vertices()
        .iter()
        .map(|c| c.scale(&inverse))
        .collect();
    let k_z_star = lattice_points_in(&convex_hull(&unscaled, n)?);
    Ok(PolarResult {
        route,
        k: k.clone(),
        kv,
        hyperplanes,
        k0,
        k_l,
        lambda,
        k_q_star,
        k_z_star,
    })
}

/// `K_Q* = λ · conv(K_0)`.
pub fn polar_q(k: &LatticeSet) -> Result<RationalPolytope> {
    Ok(polar_z(k)?.k_q_star)
}

/// The full pipeline from the graph facets of `K`.
pub fn polar_z(k: &LatticeSet) -> Result<PolarResult> {
    let hrep = extract_graph_hrep(k)?;
    let kv = vertices(k)?;
    let (k_l, k0) = build_kl(k)?;
    finish(Route::Forward, k, kv, hrep.facets, k0, k_l)
}

/// The hyperplane whose conjugate is the point `(p, c)`: `x_n = p·x' - c`, with
/// the side holding the origin.
pub fn biconjugate_hyperplane(b: &LatticePoint) -> Result<GraphHyperplane> {
    let beta = -b.last().clone();
    let side = match beta.sign() {
        num_bigint::Sign::Plus => Side::Below,
        num_bigint::Sign::Minus => Side::Above,
        num_bigint::Sign::NoSign => return Err(Error::OriginNotInterior),
    };
    Ok(GraphHyperplane::new(b.head().to_vec(), beta, side))
}

/// Polar of a set whose points are conjugates of hyperplanes.
///
/// Each vertex `(p, c)` of `conv(S)` is the conjugate of an affine function;
/// transforming it back yields the hyperplane `x_n = p·x' - c`. These
/// hyperplanes bound `S_L`, whose vertices `A_r` play the role of `K_0`, and the
/// pipeline continues with `λ` and `T` as usual. This is the route by which a
/// polar `K*` is polarized again, since `K*` need not have graph facets.
pub fn polar_biconjugate(s: &LatticeSet) -> Result<PolarResult> {
    let hull = s.hull()?;
    if !hull.is_full_dimensional() {
        return Err(Error::NotFullDimensional);
    }
    let kv = vertices(s)?;
    let hyperplanes: Vec<GraphHyperplane> = kv
        .iter()
        .map(biconjugate_hyperplane)
        .collect::<Result<_>>()?;
    let hs: Vec<Facet> = hyperplanes.iter().map(GraphHyperplane::halfspace).collect();
    let k_l = lattice_points_in_halfspaces(s.dim(), &hs)?;
    if k_l.is_empty() {
        return Err(Error::Empty);
    }
    let k0 = vertices(&k_l)?;
    finish(Route::Biconjugate, s, kv, hyperplanes, k0, k_l)
}

/// `(#K, #K*, #K · #K*)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mahler {
    pub count_k: usize,
    pub count_k_star: usize,
    pub product: u128,
}

impl PartialOrd for Mahler {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Mahler {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.product, self.count_k, self.count_k_star).cmp(&(
            other.product,
            other.count_k,
            other.count_k_star,
        ))
    }
}

pub fn mahler(k: &LatticeSet) -> Result<Mahler> {
    let r = polar_z(k)?;
    Ok(mahler_of(&r))
}

pub fn mahler_of(r: &PolarResult) -> Mahler {
    let count_k = r.k.len();
    let count_k_star = r.k_z_star.len();
    Mahler {
        count_k,
        count_k_star,
        product: count_k as u128 * count_k_star as u128,
    }
}

/// `max_p ⟨x, p⟩ - g(p)` over the finite values of `g`, evaluated on every point of `xs`.
pub fn conjugate_on(g: &BoxFunction, xs: &BoxFunction) -> Result<BoxFunction> {
    if g.is_empty() {
        return Err(Error::EmptyDomain);
    }
    Ok(BoxFunction::from_fn(xs.lo.clone(), xs.hi.clone(), |x| {
        dlt_finite(g, x).expect("domain checked above")
    }))
}

/// Restriction of `x ↦ b·x + β` to the cube `[-r, r]^{n-1}`.
pub fn affine_on_cube(h: &GraphHyperplane, r: i64) -> BoxFunction {
    BoxFunction::on_cube(h.b.len(), r, |x| {
        ExtInt::Finite(dot(&h.b, x.coords()) + &h.beta)
    })
}

impl PolarResult {
    /// Whether `K_Z*` equals `K_L`, as the pipeline guarantees.
    pub fn is_consistent(&self) -> bool {
        self.k_z_star == self.k_l
    }
}
