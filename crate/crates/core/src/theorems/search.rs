use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::geometry::{LatticePoint, LatticeSet};
use crate::hrep::certify_cclass;
use crate::legendre::{mahler, Mahler};

/// Minimum of `#K · #K*` over the origin-symmetric members of the C-class
/// inside `[-R, R]^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub dim: usize,
    pub radius: i64,
    pub minimum_product: u128,
    pub minimizers: Vec<(LatticeSet, Mahler)>,
    pub candidates_examined: usize,
}

type Bits = Vec<u64>;

struct Grid {
    n: usize,
    points: Vec<Vec<i64>>,
    shell: Bits,
}

impl Grid {
    fn new(n: usize, r: i64) -> Self {
        let side = 2 * r + 3;
        let total = (side as usize).pow(n as u32);
        let mut points = Vec::with_capacity(total);
        let mut shell = vec![0u64; total.div_ceil(64)];
        for idx in 0..total {
            let mut rem = idx;
            let p: Vec<i64> = (0..n)
                .map(|_| {
                    let c = (rem % side as usize) as i64 - (r + 1);
                    rem /= side as usize;
                    c
                })
                .collect();
            if p.iter().any(|c| c.abs() > r) {
                shell[idx / 64] |= 1 << (idx % 64);
            }
            points.push(p);
        }
        Grid { n, points, shell }
    }

    fn mask(&self, keep: impl Fn(&[i64]) -> bool) -> Bits {
        let mut m = vec![0u64; self.shell.len()];
        for (idx, p) in self.points.iter().enumerate() {
            if keep(p) {
                m[idx / 64] |= 1 << (idx % 64);
            }
        }
        m
    }

    fn set(&self, bits: &Bits) -> LatticeSet {
        let pts = self
            .points
            .iter()
            .enumerate()
            .filter(|(idx, _)| bits[idx / 64] >> (idx % 64) & 1 == 1)
            .map(|(_, p)| LatticePoint::from(p.clone()));
        LatticeSet::new(self.n, pts).expect("grid points share the dimension")
    }
}

fn det(m: &[Vec<i64>]) -> i64 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        k => (0..k)
            .map(|j| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, &v)| v)
                            .collect()
                    })
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * m[0][j] * det(&minor)
            })
            .sum(),
    }
}

fn combinations_of(len: usize, k: usize, f: &mut impl FnMut(&[usize])) {
    fn go(start: usize, len: usize, k: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..len {
            cur.push(i);
            go(i + 1, len, k, cur, f);
            cur.pop();
        }
    }
    go(0, len, k, &mut Vec::with_capacity(k), f);
}

/// Integral slopes `b` of hyperplanes `x_n = t + b·x'` through `(0', t)` and
/// `n - 1` further lattice points of the box with independent heads.
fn candidate_slopes(n: usize, r: i64, t: i64) -> BTreeSet<Vec<i64>> {
    let m = n - 1;
    let mut out = BTreeSet::new();
    if m == 0 {
        return out;
    }
    let side = 2 * r + 1;
    let pts: Vec<Vec<i64>> = (0..(side as usize).pow(n as u32))
        .map(|mut idx| {
            (0..n)
                .map(|_| {
                    let c = (idx % side as usize) as i64 - r;
                    idx /= side as usize;
                    c
                })
                .collect()
        })
        .filter(|p: &Vec<i64>| p[..m].iter().any(|&c| c != 0))
        .collect();
    combinations_of(pts.len(), m, &mut |sel| {
        let a: Vec<Vec<i64>> = sel.iter().map(|&i| pts[i][..m].to_vec()).collect();
        let rhs: Vec<i64> = sel.iter().map(|&i| pts[i][m] - t).collect();
        let d = det(&a);
        if d == 0 {
            return;
        }
        let mut b = Vec::with_capacity(m);
        for j in 0..m {
            let aj: Vec<Vec<i64>> = a
                .iter()
                .zip(&rhs)
                .map(|(row, &v)| {
                    let mut row = row.clone();
                    row[j] = v;
                    row
                })
                .collect();
            let num = det(&aj);
            if num % d != 0 {
                return;
            }
            b.push(num / d);
        }
        out.insert(b);
    });
    out
}

/// Exhaustive search over origin-symmetric members of the C-class contained
/// in `[-radius, radius]^n`. Such a member is `{|x_n - b·x'| ≤ t : b ∈ Π}`
/// for an apex height `t` and a slope family `Π`, so every candidate is an
/// intersection of symmetric slabs.
pub fn search_min_mahler(n: usize, radius: i64) -> Result<SearchResult> {
    if n == 0 || radius < 1 {
        return Err(Error::InvalidConfig("need n >= 1 and radius >= 1".into()));
    }
    let grid = Grid::new(n, radius);
    let m = n - 1;
    let mut found: Vec<(LatticeSet, Mahler)> = Vec::new();
    let mut candidates = 0usize;
    for t in 1..=radius {
        let slabs: Vec<Bits> = candidate_slopes(n, radius, t)
            .into_iter()
            .map(|b| {
                grid.mask(move |p| {
                    let lin: i64 = b.iter().zip(p).map(|(x, y)| x * y).sum();
                    (p[m] - lin).abs() <= t
                })
            })
            .collect();
        let root = grid.mask(|p| p[m].abs() <= t);
        let mut seen: HashSet<Bits> = HashSet::new();
        let mut stack = vec![root.clone()];
        seen.insert(root);
        while let Some(s) = stack.pop() {
            for slab in &slabs {
                let child: Bits = s.iter().zip(slab).map(|(a, b)| a & b).collect();
                if child != s && !seen.contains(&child) {
                    seen.insert(child.clone());
                    stack.push(child);
                }
            }
        }
        let mut states: Vec<Bits> = seen
            .into_iter()
            .filter(|s| s.iter().zip(&grid.shell).all(|(a, b)| a & b == 0))
            .collect();
        states.sort();
        for s in states {
            let k = grid.set(&s);
            if certify_cclass(&k).is_err() {
                continue;
            }
            let Ok(mp) = mahler(&k) else { continue };
            candidates += 1;
            found.push((k, mp));
        }
    }
    let minimum_product = found
        .iter()
        .map(|(_, mp)| mp.product)
        .min()
        .expect("the cross-polytope lies in every box of radius at least 1");
    let mut minimizers: Vec<(LatticeSet, Mahler)> = found
        .into_iter()
        .filter(|(_, mp)| mp.product == minimum_product)
        .collect();
    minimizers.sort_by(|a, b| a.0.points().cmp(b.0.points()));
    Ok(SearchResult {
        dim: n,
        radius,
        minimum_product,
        minimizers,
        candidates_examined: candidates,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hrep::cross_polytope;

    #[test]
    fn planar_slopes() {
        let s = candidate_slopes(2, 1, 1);
        let v: Vec<i64> = s.into_iter().map(|b| b[0]).collect();
        assert_eq!(v, vec![-2, -1, 0, 1, 2]);
    }

    #[test]
    fn planar_minimum_radius_one() {
        let r = search_min_mahler(2, 1).unwrap();
        assert_eq!(r.minimum_product, 45);
        assert_eq!(r.minimizers.len(), 3);
        assert!(r.minimizers.iter().any(|(k, _)| *k == cross_polytope(2)));
    }

    #[test]
    fn spatial_minimum_undercuts_cross_polytope() {
        let r = search_min_mahler(3, 1).unwrap();
        assert_eq!(r.minimum_product, 162);
        let mut pts = cross_polytope(3).points().to_vec();
        pts.push(LatticePoint::from([1, 1, 1]));
        pts.push(LatticePoint::from([-1, -1, -1]));
        let witness = LatticeSet::new(3, pts).unwrap();
        assert!(r.minimizers.iter().any(|(k, _)| *k == witness));
        assert!(r.minimizers.iter().all(|(k, _)| *k != cross_polytope(3)));
        assert_eq!(mahler(&cross_polytope(3)).unwrap().product, 189);
    }

    #[test]
    fn line_minimum() {
        let r = search_min_mahler(1, 3).unwrap();
        assert_eq!(r.minimum_product, 9);
        assert_eq!(r.minimizers.len(), 1);
    }
}
