//! Small exact linear-algebra kernels over `Z` and `Q`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::point::Rational;

/// Determinant of a square integer matrix by fraction-free (Bareiss) elimination.
pub(crate) fn det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Integer normal orthogonal to `n-1` vectors of `Z^n` (generalised cross product).
///
/// Returns `None` when the vectors are linearly dependent.
pub(crate) fn cross_normal(vectors: &[Vec<BigInt>]) -> Option<Vec<BigInt>> {
    let n = vectors.len() + 1;
    let mut normal = Vec::with_capacity(n);
    for j in 0..n {
        let minor: Vec<Vec<BigInt>> = vectors
            .iter()
            .map(|v| {
                v.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let d = det(minor);
        normal.push(if j % 2 == 0 { d } else { -d });
    }
    if normal.iter().all(Zero::is_zero) {
        None
    } else {
        Some(primitive_int(normal))
    }
}

/// Divides an integer vector by the gcd of its entries.
pub(crate) fn primitive_int(v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() || g.is_one() {
        return v;
    }
    v.into_iter().map(|x| x / &g).collect()
}

/// Clears denominators and reduces to a primitive integer vector (sign preserved).
pub(crate) fn primitive_from_rational(v: &[Rational]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    primitive_int(v.iter().map(|x| (x * &l).to_integer()).collect())
}

/// Reduced row echelon form in place; returns pivot columns.
pub(crate) fn rref(rows: &mut [Vec<Rational>]) -> Vec<usize> {
    let nrows = rows.len();
    if nrows == 0 {
        return Vec::new();
    }
    let ncols = rows[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot) {
                    *x -= p * &f;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Basis of `{x : rows · x = 0}`.
pub(crate) fn nullspace(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![Rational::zero(); ncols];
            x[f] = Rational::one();
            for (r, &p) in pivots.iter().enumerate() {
                x[p] = -m[r][f].clone();
            }
            x
        })
        .collect()
}

/// Unique solution of a square system, if the matrix is nonsingular.
pub(crate) fn solve(a: &[Vec<BigInt>], b: &[BigInt]) -> Option<Vec<Rational>> {
    let n = a.len();
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            row.iter()
                .chain(std::iter::once(rhs))
                .cloned()
                .map(Rational::from_integer)
                .collect()
        })
        .collect();
    let pivots = rref(&mut m);
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
        return None;
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

pub(crate) fn floor(q: &Rational) -> BigInt {
    q.floor().to_integer()
}

pub(crate) fn ceil(q: &Rational) -> BigInt {
    q.ceil().to_integer()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        let m = vec![ints(&[2, -1, 0]), ints(&[1, 3, 4]), ints(&[0, 5, -2])];
        // 2*(3*-2 - 4*5) - (-1)*(1*-2 - 0) + 0 = -52 - 2 = -54
        assert_eq!(det(m), BigInt::from(-54));
        let singular = vec![ints(&[1, 2]), ints(&[2, 4])];
        assert!(det(singular).is_zero());
        let needs_swap = vec![ints(&[0, 1]), ints(&[1, 0])];
        assert_eq!(det(needs_swap), BigInt::from(-1));
    }

    #[test]
    fn cross_normal_is_orthogonal() {
        let vs = vec![ints(&[1, 0, 2]), ints(&[0, 3, 1])];
        let n = cross_normal(&vs).unwrap();
        for v in &vs {
            let d: BigInt = v.iter().zip(&n).map(|(a, b)| a * b).sum();
            assert!(d.is_zero());
        }
        assert!(cross_normal(&[ints(&[1, 2, 3]), ints(&[2, 4, 6])]).is_none());
    }

    #[test]
    fn solve_and_nullspace() {
        let a = vec![ints(&[2, 1]), ints(&[1, -1])];
        let x = solve(&a, &ints(&[3, 0])).unwrap();
        assert_eq!(x, vec![Rational::one(), Rational::one()]);
        assert!(solve(&[ints(&[1, 1]), ints(&[2, 2])], &ints(&[1, 2])).is_none());

        let rows = vec![vec![Rational::one(), Rational::one(), Rational::zero()]];
        let ns = nullspace(&rows, 3);
        assert_eq!(ns.len(), 2);
    }
}
