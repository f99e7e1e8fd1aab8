use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geometry::{contains_origin_interior, convex_hull_lattice, LatticePoint, LatticeSet};
use crate::hrep::{
    build_table2_pair, realize_cclass, CClassSpec, GraphHyperplane, Side, Table2Config,
};

/// Attempts a generator makes before giving up.
pub const RETRY_BUDGET: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PairKind {
    /// `K ⊊ L`.
    Nested,
    /// Neither set contains the other and `conv(K ∩ L)` has the origin in its interior.
    Crossing,
}

fn check_bounds(n: usize, coeff_bound: i64, intercept_bound: i64) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidConfig("dimension must be positive".into()));
    }
    if coeff_bound < 1 || intercept_bound < 1 {
        return Err(Error::InvalidConfig(
            "need coeff_bound >= 1 and intercept_bound >= 1".into(),
        ));
    }
    Ok(())
}

fn slope(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> Vec<BigInt> {
    (0..n - 1)
        .map(|_| BigInt::from(rng.gen_range(-bound..=bound)))
        .collect()
}

/// Slope families whose hull has the origin in its interior, so the region
/// they bound over `x'` is bounded.
fn slopes(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> Vec<Vec<BigInt>> {
    loop {
        let m = rng.gen_range(n..=n + 2);
        let family: Vec<Vec<BigInt>> = (0..m).map(|_| slope(rng, n, bound)).collect();
        if n == 1 || surrounds_origin(&family, n - 1) {
            return family;
        }
    }
}

fn surrounds_origin(family: &[Vec<BigInt>], d: usize) -> bool {
    let pts: Vec<LatticePoint> = family.iter().cloned().map(LatticePoint::new).collect();
    convex_hull_lattice(&pts, d)
        .and_then(|h| contains_origin_interior(&h))
        .unwrap_or(false)
}

fn intercepts(rng: &mut ChaCha8Rng, bound: i64) -> (BigInt, BigInt) {
    (
        BigInt::from(rng.gen_range(1..=bound)),
        BigInt::from(-rng.gen_range(1..=bound)),
    )
}

fn spec_with(
    rng: &mut ChaCha8Rng,
    n: usize,
    coeff_bound: i64,
    (beta1, beta2): &(BigInt, BigInt),
) -> Result<CClassSpec> {
    CClassSpec::new(
        n,
        beta1.clone(),
        beta2.clone(),
        slopes(rng, n, coeff_bound),
        slopes(rng, n, coeff_bound),
    )
}

fn merged(a: &CClassSpec, b: &CClassSpec) -> Result<CClassSpec> {
    let cat = |x: &[Vec<BigInt>], y: &[Vec<BigInt>]| [x, y].concat();
    CClassSpec::new(
        a.dim,
        a.beta1.clone(),
        a.beta2.clone(),
        cat(&a.upper, &b.upper),
        cat(&a.lower, &b.lower),
    )
}

/// A random certified member of the C-class with slopes in
/// `[-coeff_bound, coeff_bound]^{n-1}` and intercepts in `[1, intercept_bound]`
/// and `[-intercept_bound, -1]`.
pub fn random_cclass(
    n: usize,
    seed: u64,
    coeff_bound: i64,
    intercept_bound: i64,
) -> Result<(CClassSpec, LatticeSet)> {
    check_bounds(n, coeff_bound, intercept_bound)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RETRY_BUDGET {
        let betas = intercepts(&mut rng, intercept_bound);
        let spec = spec_with(&mut rng, n, coeff_bound, &betas)?;
        if let Ok(k) = realize_cclass(&spec) {
            return Ok((spec, k));
        }
    }
    Err(Error::GenerationExhausted {
        attempts: RETRY_BUDGET,
    })
}

fn meets_around_origin(k: &LatticeSet, l: &LatticeSet) -> bool {
    k.intersection(l)
        .hull()
        .and_then(|h| contains_origin_interior(&h))
        .unwrap_or(false)
}

/// A random pair of certified members sharing both intercepts. Nested pairs
/// are obtained by adding constraints to the larger set.
pub fn random_cclass_pair(
    n: usize,
    seed: u64,
    kind: PairKind,
    coeff_bound: i64,
    intercept_bound: i64,
) -> Result<(LatticeSet, LatticeSet)> {
    check_bounds(n, coeff_bound, intercept_bound)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RETRY_BUDGET {
        let betas = intercepts(&mut rng, intercept_bound);
        let a = spec_with(&mut rng, n, coeff_bound, &betas)?;
        let b = spec_with(&mut rng, n, coeff_bound, &betas)?;
        let pair = match kind {
            PairKind::Nested => realize_cclass(&merged(&a, &b)?)
                .and_then(|k| realize_cclass(&a).map(|l| (k, l)))
                .ok()
                .filter(|(k, l)| k != l && k.is_subset(l)),
            PairKind::Crossing => realize_cclass(&a)
                .and_then(|k| realize_cclass(&b).map(|l| (k, l)))
                .ok()
                .filter(|(k, l)| !k.is_subset(l) && !l.is_subset(k) && meets_around_origin(k, l)),
        };
        if let Some(p) = pair {
            return Ok(p);
        }
    }
    Err(Error::GenerationExhausted {
        attempts: RETRY_BUDGET,
    })
}

/// `(K, L)` with `K ⊆ L ⊆ [-bound, bound]^n`, `#L = size` and `#K` random.
/// Neither set need be convex.
pub fn random_point_pair(
    n: usize,
    seed: u64,
    bound: i64,
    size: usize,
) -> Result<(LatticeSet, LatticeSet)> {
    if n == 0 || bound < 0 || size == 0 {
        return Err(Error::InvalidConfig(
            "need n >= 1, bound >= 0 and size >= 1".into(),
        ));
    }
    let cells = (2 * bound as u128 + 1).checked_pow(n as u32);
    if cells.is_some_and(|c| c < size as u128) {
        return Err(Error::InvalidConfig(format!(
            "box holds fewer than {size} points"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut l: Vec<LatticePoint> = Vec::with_capacity(size);
    while l.len() < size {
        let p = LatticePoint::new(
            (0..n)
                .map(|_| BigInt::from(rng.gen_range(-bound..=bound)))
                .collect(),
        );
        if !l.contains(&p) {
            l.push(p);
        }
    }
    let k: Vec<LatticePoint> = l.iter().filter(|_| rng.gen_bool(0.5)).cloned().collect();
    Ok((LatticeSet::new(n, k)?, LatticeSet::new(n, l)?))
}

/// Draws from `make(seed), make(seed + 1), …` until `count` values are
/// collected; seeds whose generation is exhausted are skipped.
pub fn corpus<T>(seed: u64, count: usize, mut make: impl FnMut(u64) -> Result<T>) -> Vec<T> {
    let cap = 10 * count as u64 + 100;
    (0..cap)
        .filter_map(|i| make(seed.wrapping_add(i)).ok())
        .take(count)
        .collect()
}

/// A random Table-2 configuration whose pair builds and is not nested.
pub fn random_table2_config(
    n: usize,
    seed: u64,
    coeff_bound: i64,
    intercept_bound: i64,
) -> Result<Table2Config> {
    if n < 2 || coeff_bound < 2 || intercept_bound < 1 {
        return Err(Error::InvalidConfig(
            "need n >= 2, coeff_bound >= 2 and intercept_bound >= 1".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RETRY_BUDGET {
        let (beta1, beta2) = intercepts(&mut rng, intercept_bound);
        let mut bj1 = Vec::with_capacity(n - 1);
        let mut bj2 = Vec::with_capacity(n - 1);
        for _ in 1..n {
            let a = rng.gen_range(1..=coeff_bound);
            let mut b = rng.gen_range(1..=coeff_bound);
            while b == a {
                b = rng.gen_range(1..=coeff_bound);
            }
            bj1.push(BigInt::from(a));
            bj2.push(BigInt::from(-b));
        }
        let Ok(cfg) = Table2Config::new(n, beta1, beta2, bj1, bj2) else {
            continue;
        };
        if let Ok((k, l)) = build_table2_pair(&cfg) {
            if !k.is_subset(&l) && !l.is_subset(&k) {
                return Ok(cfg);
            }
        }
    }
    Err(Error::GenerationExhausted {
        attempts: RETRY_BUDGET,
    })
}

/// A random graph hyperplane with slopes and intercept in `[-bound, bound]`.
pub fn random_graph_hyperplane(n: usize, seed: u64, bound: i64) -> Result<GraphHyperplane> {
    if n == 0 || bound < 0 {
        return Err(Error::InvalidConfig("need n >= 1 and bound >= 0".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let b = slope(&mut rng, n, bound);
    let beta = BigInt::from(rng.gen_range(-bound..=bound));
    let side = if rng.gen_bool(0.5) {
        Side::Below
    } else {
        Side::Above
    };
    Ok(GraphHyperplane::new(b, beta, side))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hrep::certify_cclass;

    #[test]
    fn generators_are_deterministic() {
        let a = random_cclass(2, 7, 3, 4).unwrap();
        let b = random_cclass(2, 7, 3, 4).unwrap();
        assert_eq!(a, b);
        assert_eq!(
            random_table2_config(3, 1, 3, 4).unwrap(),
            random_table2_config(3, 1, 3, 4).unwrap()
        );
    }

    #[test]
    fn generated_members_certify() {
        for seed in 0..20 {
            for n in 2..=3 {
                let (_, k) = random_cclass(n, seed, 2, 4).unwrap();
                certify_cclass(&k).unwrap();
            }
        }
    }

    #[test]
    fn pair_shapes() {
        let mut made = 0;
        for seed in 0..10 {
            if let Ok((k, l)) = random_cclass_pair(2, seed, PairKind::Nested, 2, 4) {
                assert!(k.is_subset(&l) && k != l);
                made += 1;
            }
            if let Ok((k, l)) = random_cclass_pair(2, seed, PairKind::Crossing, 2, 4) {
                assert!(!k.is_subset(&l) && !l.is_subset(&k));
                assert!(k.intersection(&l).len() > 3);
                made += 1;
            }
            let (k, l) = random_point_pair(3, seed, 2, 8).unwrap();
            assert!(k.is_subset(&l) && l.len() == 8);
        }
        assert!(made >= 15);
    }

    #[test]
    fn bad_bounds_are_rejected() {
        assert!(matches!(
            random_cclass(0, 0, 1, 1),
            Err(Error::InvalidConfig(_))
        ));
        assert!(matches!(
            random_point_pair(1, 0, 1, 4),
            Err(Error::InvalidConfig(_))
        ));
        assert!(matches!(
            random_table2_config(1, 0, 3, 3),
            Err(Error::InvalidConfig(_))
        ));
    }
}
