//! Graph-hyperplane representations `x_n = b·x' + β` and the C-class.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::geometry::{
    contains_origin_interior, dot, lattice_points_in_halfspaces, saturate, unit_facet, Facet,
    LatticePoint, LatticeSet,
};

/// Which side of a graph hyperplane the halfspace keeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    /// `x_n ≤ b·x' + β`
    Below,
    /// `x_n ≥ b·x' + β`
    Above,
}

impl Side {
    pub fn as_str(self) -> &'static str {
        match self {
            Side::Below => "below",
            Side::Above => "above",
        }
    }
}

/// The hyperplane `x_n = b·x' + β` together with the halfspace containing the set.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GraphHyperplane {
    pub b: Vec<BigInt>,
    pub beta: BigInt,
    pub side: Side,
}

impl GraphHyperplane {
    pub fn new(b: Vec<BigInt>, beta: BigInt, side: Side) -> Self {
        GraphHyperplane { b, beta, side }
    }

    pub fn from_ints(b: &[i64], beta: i64, side: Side) -> Self {
        GraphHyperplane {
            b: b.iter().map(|&x| BigInt::from(x)).collect(),
            beta: BigInt::from(beta),
            side,
        }
    }

    /// Ambient dimension `n`.
    pub fn dim(&self) -> usize {
        self.b.len() + 1
    }

    /// `b·x' + β`.
    pub fn value(&self, head: &[BigInt]) -> BigInt {
        dot(&self.b, head) + &self.beta
    }

    pub fn admits(&self, x: &LatticePoint) -> bool {
        let h = self.value(x.head());
        match self.side {
            Side::Below => *x.last() <= h,
            Side::Above => *x.last() >= h,
        }
    }

    /// The halfspace as `normal · x ≤ offset`.
    pub fn halfspace(&self) -> Facet {
        match self.side {
            Side::Below => {
                let mut normal: Vec<BigInt> = self.b.iter().map(|x| -x).collect();
                normal.push(BigInt::from(1));
                unit_facet(normal, self.beta.clone())
            }
            Side::Above => {
                let mut normal = self.b.clone();
                normal.push(BigInt::from(-1));
                unit_facet(normal, -self.beta.clone())
            }
        }
    }
}

impl fmt::Display for GraphHyperplane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = match self.side {
            Side::Below => "<=",
            Side::Above => ">=",
        };
        write!(f, "x_n {op} ")?;
        for (j, b) in self.b.iter().enumerate() {
            write!(f, "{b}*x_{} + ", j + 1)?;
        }
        write!(f, "{}", self.beta)
    }
}

/// One graph hyperplane per facet of `conv(K)`, sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphHRep {
    pub dim: usize,
    pub facets: Vec<GraphHyperplane>,
}

impl GraphHRep {
    /// `(⋂ h_i^-) ∩ Z^n`.
    pub fn lattice_points(&self) -> Result<LatticeSet> {
        let hs: Vec<Facet> = self.facets.iter().map(GraphHyperplane::halfspace).collect();
        lattice_points_in_halfspaces(self.dim, &hs)
    }

    pub fn below(&self) -> impl Iterator<Item = &GraphHyperplane> {
        self.facets.iter().filter(|h| h.side == Side::Below)
    }

    pub fn above(&self) -> impl Iterator<Item = &GraphHyperplane> {
        self.facets.iter().filter(|h| h.side == Side::Above)
    }
}

/// Rewrites every facet of `conv(K)` as a graph hyperplane with integer coefficients.
pub fn extract_graph_hrep(k: &LatticeSet) -> Result<GraphHRep> {
    if k.is_empty() {
        return Err(Error::Empty);
    }
    let hull = k.hull()?;
    if !hull.is_full_dimensional() {
        return Err(Error::NotFullDimensional);
    }
    if !contains_origin_interior(&hull)? {
        return Err(Error::OriginNotInterior);
    }
    let n = k.dim();
    let mut facets = Vec::with_capacity(hull.facets().len());
    for f in hull.facets() {
        let nn = &f.normal[n - 1];
        let strings = || f.normal.iter().map(ToString::to_string).collect::<Vec<_>>();
        if nn.is_zero() {
            return Err(Error::VerticalFacet { normal: strings() });
        }
        // Lattice hulls have integer offsets for primitive normals.
        let offset = f.offset.to_integer();
        let integral = f.offset.is_integer()
            && f.normal[..n - 1].iter().all(|a| a.is_multiple_of(nn))
            && offset.is_multiple_of(nn);
        if !integral {
            return Err(Error::NonIntegerCoefficient {
                normal: strings(),
                offset: crate::geometry::format_rational(&f.offset),
            });
        }
        let b = f.normal[..n - 1].iter().map(|a| -(a / nn)).collect();
        let side = if nn.is_positive() {
            Side::Below
        } else {
            Side::Above
        };
        facets.push(GraphHyperplane::new(b, offset / nn, side));
    }
    facets.sort();
    Ok(GraphHRep { dim: n, facets })
}

/// Upper family `x_n ≤ b_i·x' + β_1` on `x_n ≥ 0` and lower family
/// `x_n ≥ d_l·x' + β_2` on `x_n < 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CClassSpec {
    pub dim: usize,
    pub beta1: BigInt,
    pub beta2: BigInt,
    pub upper: Vec<Vec<BigInt>>,
    pub lower: Vec<Vec<BigInt>>,
}

impl CClassSpec {
    pub fn new(
        dim: usize,
        beta1: BigInt,
        beta2: BigInt,
        mut upper: Vec<Vec<BigInt>>,
        mut lower: Vec<Vec<BigInt>>,
    ) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidConfig("dimension must be positive".into()));
        }
        if !beta1.is_positive() || !beta2.is_negative() {
            return Err(Error::InvalidConfig(format!(
                "need beta1 > 0 and beta2 < 0, got {beta1} and {beta2}"
            )));
        }
        if upper.is_empty() || lower.is_empty() {
            return Err(Error::InvalidConfig(
                "both slope families must be non-empty".into(),
            ));
        }
        if let Some(s) = upper.iter().chain(&lower).find(|s| s.len() != dim - 1) {
            return Err(Error::DimensionMismatch {
                expected: dim - 1,
                found: s.len(),
            });
        }
        upper.sort();
        upper.dedup();
        lower.sort();
        lower.dedup();
        Ok(CClassSpec {
            dim,
            beta1,
            beta2,
            upper,
            lower,
        })
    }

    pub fn from_ints(
        dim: usize,
        beta1: i64,
        beta2: i64,
        upper: &[&[i64]],
        lower: &[&[i64]],
    ) -> Result<Self> {
        let conv = |v: &[&[i64]]| -> Vec<Vec<BigInt>> {
            v.iter()
                .map(|s| s.iter().map(|&x| BigInt::from(x)).collect())
                .collect()
        };
        CClassSpec::new(dim, beta1.into(), beta2.into(), conv(upper), conv(lower))
    }

    pub fn upper_hyperplanes(&self) -> impl Iterator<Item = GraphHyperplane> + '_ {
        self.upper
            .iter()
            .map(|b| GraphHyperplane::new(b.clone(), self.beta1.clone(), Side::Below))
    }

    pub fn lower_hyperplanes(&self) -> impl Iterator<Item = GraphHyperplane> + '_ {
        self.lower
            .iter()
            .map(|d| GraphHyperplane::new(d.clone(), self.beta2.clone(), Side::Above))
    }
}

/// The lattice points of the displayed union region, without any certification.
fn union_region(spec: &CClassSpec) -> Result<LatticeSet> {
    let n = spec.dim;
    let axis = |sign: i64, offset: i64| {
        let mut normal = vec![BigInt::zero(); n];
        normal[n - 1] = BigInt::from(sign);
        unit_facet(normal, BigInt::from(offset))
    };
    let mut top: Vec<Facet> = spec.upper_hyperplanes().map(|h| h.halfspace()).collect();
    top.push(axis(-1, 0));
    let mut bottom: Vec<Facet> = spec.lower_hyperplanes().map(|h| h.halfspace()).collect();
    bottom.push(axis(1, -1));
    let upper_part = lattice_points_in_halfspaces(n, &top)?;
    let lower_part = lattice_points_in_halfspaces(n, &bottom)?;
    Ok(upper_part.union(&lower_part))
}

/// Realizes a C-class specification as a lattice set and certifies membership.
pub fn realize_cclass(spec: &CClassSpec) -> Result<LatticeSet> {
    let k = union_region(spec)?;
    if k.is_empty() {
        return Err(Error::Empty);
    }
    if saturate(k.points(), k.dim())? != k {
        return Err(Error::NotConvex);
    }
    let hull = k.hull()?;
    if !hull.is_full_dimensional() {
        return Err(Error::NotFullDimensional);
    }
    if !contains_origin_interior(&hull)? {
        return Err(Error::OriginNotInterior);
    }
    certify_cclass(&k)?;
    Ok(k)
}

/// Certifies C-class membership of `K` from its hull: every facet of
/// `conv(K)` is a graph hyperplane with integer coefficients, the upper facets
/// share one intercept `β_1 > 0` and the lower facets share one intercept
/// `β_2 < 0`. Returns the facet slopes as a specification.
pub fn certify_cclass(k: &LatticeSet) -> Result<CClassSpec> {
    let hrep = extract_graph_hrep(k)?;
    let shared = |hs: &[&GraphHyperplane], what: &str| -> Result<BigInt> {
        let beta = hs[0].beta.clone();
        if hs.iter().any(|h| h.beta != beta) {
            let all: Vec<String> = hs.iter().map(|h| h.beta.to_string()).collect();
            return Err(Error::NotCClass(format!(
                "{what} facets have distinct intercepts {}",
                all.join(", ")
            )));
        }
        Ok(beta)
    };
    let upper: Vec<&GraphHyperplane> = hrep.below().collect();
    let lower: Vec<&GraphHyperplane> = hrep.above().collect();
    let beta1 = shared(&upper, "upper")?;
    let beta2 = shared(&lower, "lower")?;
    CClassSpec::new(
        k.dim(),
        beta1,
        beta2,
        upper.iter().map(|h| h.b.clone()).collect(),
        lower.iter().map(|h| h.b.clone()).collect(),
    )
    .map_err(|e| Error::NotCClass(e.to_string()))
}

/// Whether the union region of the certified specification reproduces `K`.
pub fn is_union_realizable(k: &LatticeSet) -> bool {
    certify_cclass(k)
        .and_then(|spec| union_region(&spec))
        .is_ok_and(|u| u == *k)
}

/// Coefficient pattern of a Table-2 pair.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Table2Config {
    pub dim: usize,
    pub beta1: BigInt,
    pub beta2: BigInt,
    pub bj1: Vec<BigInt>,
    pub bj2: Vec<BigInt>,
}

impl Table2Config {
    pub fn new(
        dim: usize,
        beta1: BigInt,
        beta2: BigInt,
        bj1: Vec<BigInt>,
        bj2: Vec<BigInt>,
    ) -> Result<Self> {
        let cfg = Table2Config {
            dim,
            beta1,
            beta2,
            bj1,
            bj2,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn from_ints(dim: usize, beta1: i64, beta2: i64, bj1: &[i64], bj2: &[i64]) -> Result<Self> {
        let conv = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect();
        Table2Config::new(dim, beta1.into(), beta2.into(), conv(bj1), conv(bj2))
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidConfig(m));
        if self.dim < 2 {
            return bad("Table-2 pairs need dimension at least 2".into());
        }
        if self.bj1.len() != self.dim - 1 || self.bj2.len() != self.dim - 1 {
            return bad(format!("slope vectors must have length {}", self.dim - 1));
        }
        if !self.beta1.is_positive() || !self.beta2.is_negative() {
            return bad("need beta1 > 0 and beta2 < 0".into());
        }
        for (j, (a, b)) in self.bj1.iter().zip(&self.bj2).enumerate() {
            if *a < BigInt::from(1) || *b > BigInt::from(-1) {
                return bad(format!("coordinate {}: need bj1 >= 1 and bj2 <= -1", j + 1));
            }
            if (a + b).is_zero() {
                return bad(format!("coordinate {}: |bj1| = |bj2| = {a}", j + 1));
            }
        }
        Ok(())
    }

    /// The `2^{n-1}` upper and `2^{n-1}` lower hyperplanes of `K`, one per
    /// sign pattern of `x_1..x_{n-1}`.
    pub fn hyperplanes(&self) -> Vec<GraphHyperplane> {
        let m = self.dim - 1;
        let mut out = Vec::with_capacity(2 << m);
        for mask in 0..1u64 << m {
            let positive = |j: usize| mask >> j & 1 == 0;
            let upper = (0..m)
                .map(|j| {
                    if positive(j) {
                        self.bj2[j].clone()
                    } else {
                        self.bj1[j].clone()
                    }
                })
                .collect();
            let lower = (0..m)
                .map(|j| {
                    if positive(j) {
                        self.bj1[j].clone()
                    } else {
                        self.bj2[j].clone()
                    }
                })
                .collect();
            out.push(GraphHyperplane::new(upper, self.beta1.clone(), Side::Below));
            out.push(GraphHyperplane::new(lower, self.beta2.clone(), Side::Above));
        }
        out
    }
}

/// Builds `K` from the Table-2 pattern and `L` as its mirror image in the `x_n`-axis.
pub fn build_table2_pair(cfg: &Table2Config) -> Result<(LatticeSet, LatticeSet)> {
    cfg.validate()?;
    let hs: Vec<Facet> = cfg
        .hyperplanes()
        .iter()
        .map(GraphHyperplane::halfspace)
        .collect();
    let k = lattice_points_in_halfspaces(cfg.dim, &hs)?;
    if k.is_empty() {
        return Err(Error::Empty);
    }
    certify_cclass(&k)?;
    let l = reflect_about_xn_axis(&k);
    certify_cclass(&l)?;
    Ok((k, l))
}

/// `{0, ±e_1, …, ±e_n}`.
pub fn cross_polytope(n: usize) -> LatticeSet {
    let mut pts = vec![LatticePoint::origin(n)];
    for i in 0..n {
        pts.push(LatticePoint::unit(n, i, 1));
        pts.push(LatticePoint::unit(n, i, -1));
    }
    LatticeSet::new(n, pts).expect("unit vectors share the dimension")
}

/// Negates `x_1..x_{n-1}`.
pub fn reflect_about_xn_axis(k: &LatticeSet) -> LatticeSet {
    k.map(|p| {
        let n = p.dim();
        LatticePoint::new(
            p.coords()
                .iter()
                .enumerate()
                .map(|(i, c)| if i + 1 < n { -c } else { c.clone() })
                .collect(),
        )
    })
}
