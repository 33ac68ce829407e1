//! Fraction-free (Bareiss) elimination over the integers.
//!
//! Every intermediate entry is a minor of the input matrix, so the division
//! in the update `(p * a - b * c) / prev` is exact. Elimination runs in
//! `i128` first and restarts in `BigInt` if any product overflows.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::rational::Rational;

trait Scalar: Clone + PartialEq + Zero + One {
    /// `(p * a - b * c) / prev`, or `None` on overflow.
    fn update(p: &Self, a: &Self, b: &Self, c: &Self, prev: &Self) -> Option<Self>;
    fn to_big(&self) -> BigInt;
}

impl Scalar for i128 {
    #[inline]
    fn update(p: &i128, a: &i128, b: &i128, c: &i128, prev: &i128) -> Option<i128> {
        let num = p.checked_mul(*a)?.checked_sub(b.checked_mul(*c)?)?;
        let (q, r) = num.div_rem(prev);
        assert!(r == 0, "Bareiss division was not exact");
        Some(q)
    }

    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Scalar for BigInt {
    fn update(p: &BigInt, a: &BigInt, b: &BigInt, c: &BigInt, prev: &BigInt) -> Option<BigInt> {
        let num = p * a - b * c;
        let (q, r) = num.div_rem(prev);
        assert!(r.is_zero(), "Bareiss division was not exact");
        Some(q)
    }

    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

/// Result of forward elimination: the echelon form and its pivot columns.
struct Echelon<T> {
    rows: Vec<Vec<T>>,
    pivots: Vec<usize>,
}

/// Forward elimination restricted to the first `pivot_cols` columns.
fn eliminate<T: Scalar>(mut rows: Vec<Vec<T>>, pivot_cols: usize) -> Option<Echelon<T>> {
    let height = rows.len();
    let width = rows.first().map_or(0, Vec::len);
    let mut prev = T::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..pivot_cols {
        if r == height {
            break;
        }
        let Some(pr) = (r..height).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, pr);
        let (head, tail) = rows.split_at_mut(r + 1);
        let pivot_row = &head[r];
        let p = pivot_row[c].clone();
        for row in tail.iter_mut() {
            let b = row[c].clone();
            for k in c + 1..width {
                if row[k].is_zero() && (b.is_zero() || pivot_row[k].is_zero()) {
                    continue;
                }
                row[k] = T::update(&p, &row[k], &b, &pivot_row[k], &prev)?;
            }
            row[c] = T::zero();
        }
        prev = p;
        pivots.push(c);
        r += 1;
    }
    Some(Echelon { rows, pivots })
}

fn widen(m: &[Vec<i64>]) -> Vec<Vec<i128>> {
    m.iter().map(|row| row.iter().map(|&v| v as i128).collect()).collect()
}

fn widen_big(m: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    m.iter().map(|row| row.iter().map(|&v| BigInt::from(v)).collect()).collect()
}

/// Exact rank of an integer matrix.
pub fn rank(m: &[Vec<i64>]) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    match eliminate(widen(m), cols) {
        Some(e) => e.pivots.len(),
        None => eliminate(widen_big(m), cols).expect("BigInt elimination cannot overflow").pivots.len(),
    }
}

/// Solve the square system `a * x = b` exactly; `None` if `a` is singular.
pub fn solve(a: &[Vec<i64>], b: &[i64]) -> Option<Vec<Rational>> {
    let n = a.len();
    assert_eq!(b.len(), n, "right-hand side length mismatch");
    let augmented: Vec<Vec<i64>> = a
        .iter()
        .zip(b)
        .map(|(row, &rhs)| {
            assert_eq!(row.len(), n, "matrix is not square");
            row.iter().copied().chain(std::iter::once(rhs)).collect()
        })
        .collect();
    let echelon: Echelon<BigInt> = match eliminate(widen(&augmented), n) {
        Some(e) => Echelon {
            rows: e.rows.iter().map(|r| r.iter().map(Scalar::to_big).collect()).collect(),
            pivots: e.pivots,
        },
        None => eliminate(widen_big(&augmented), n)?,
    };
    if echelon.pivots.len() < n {
        return None;
    }
    let u = echelon.rows;
    let mut x = vec![Rational::zero(); n];
    for k in (0..n).rev() {
        let mut acc = Rational::from_integer(u[k][n].clone());
        for j in k + 1..n {
            if !u[k][j].is_zero() {
                acc -= Rational::from_integer(u[k][j].clone()) * &x[j];
            }
        }
        x[k] = acc / Rational::from_integer(u[k][k].clone());
    }
    Some(x)
}

/// `2^61 - 1`
pub const MERSENNE_61: u64 = (1 << 61) - 1;

/// Rank over `Z/pZ` for a prime `p < 2^63`. Never exceeds the rational rank.
pub fn rank_mod_prime(m: &[Vec<i64>], p: u64) -> usize {
    let mut rows: Vec<Vec<u64>> = m.iter().map(|r| r.iter().map(|&v| v.rem_euclid(p as i64) as u64).collect()).collect();
    let width = rows.first().map_or(0, Vec::len);
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % p as u128) as u64;
    let inverse = |a: u64| {
        let (mut base, mut e, mut acc) = (a, p - 2, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(acc, base);
            }
            base = mulmod(base, base);
            e >>= 1;
        }
        acc
    };
    let mut r = 0;
    for c in 0..width {
        let Some(pr) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(r, pr);
        let inv = inverse(rows[r][c]);
        let (head, tail) = rows.split_at_mut(r + 1);
        let pivot = &head[r];
        for row in tail.iter_mut() {
            if row[c] == 0 {
                continue;
            }
            let f = mulmod(row[c], inv);
            for k in c..width {
                if pivot[k] != 0 {
                    row[k] = (row[k] + p - mulmod(f, pivot[k])) % p;
                }
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    /// Rank by plain rational Gaussian elimination.
    fn rational_rank(m: &[Vec<i64>]) -> usize {
        let mut rows: Vec<Vec<Rational>> = m.iter().map(|r| r.iter().map(|&v| ratio(v, 1)).collect()).collect();
        let width = rows.first().map_or(0, Vec::len);
        let mut r = 0;
        for c in 0..width {
            let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
            rows.swap(r, p);
            for i in 0..rows.len() {
                if i != r && !rows[i][c].is_zero() {
                    let f = &rows[i][c] / &rows[r][c];
                    let pivot = rows[r].clone();
                    for (x, p) in rows[i].iter_mut().zip(&pivot) {
                        *x -= &f * p;
                    }
                }
            }
            r += 1;
        }
        r
    }

    #[test]
    fn small_ranks() {
        assert_eq!(rank(&[vec![0]]), 0);
        assert_eq!(rank(&[vec![0, 2], vec![-2, 0]]), 2);
        assert_eq!(rank(&[vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]), 2);
        assert_eq!(rank(&[]), 0);
        assert_eq!(rank_mod_prime(&[vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]], 7), 2);
        assert_eq!(rank_mod_prime(&[vec![7, 0], vec![0, 1]], 7), 1);
    }

    #[test]
    fn solves() {
        let a = vec![vec![2, 1], vec![1, 3]];
        let x = solve(&a, &[3, 5]).unwrap();
        assert_eq!(x, vec![ratio(4, 5), ratio(7, 5)]);
        assert!(solve(&[vec![1, 2], vec![2, 4]], &[1, 1]).is_none());
    }

    #[test]
    fn overflow_falls_back_to_bigint() {
        // Entries near 2^40 overflow i128 products after a few steps.
        let big = 1i64 << 40;
        let m: Vec<Vec<i64>> = (0..6)
            .map(|i| (0..6).map(|j| if i == j { big + i as i64 } else { (i * 7 + j * 3) as i64 + big / 3 }).collect())
            .collect();
        assert_eq!(rank(&m), rational_rank(&m));
        let b: Vec<i64> = (0..6).map(|i| i as i64 - 2).collect();
        let x = solve(&m, &b).unwrap();
        for (row, &rhs) in m.iter().zip(&b) {
            let lhs: Rational = row.iter().zip(&x).map(|(&a, xi)| ratio(a, 1) * xi).sum();
            assert_eq!(lhs, ratio(rhs, 1));
        }
    }

    proptest::proptest! {
        #[test]
        fn rank_matches_rational_elimination(
            rows in 1usize..7,
            cols in 1usize..7,
            seed in proptest::collection::vec(-3i64..=3, 49),
        ) {
            let m: Vec<Vec<i64>> = (0..rows).map(|i| (0..cols).map(|j| seed[i * 7 + j]).collect()).collect();
            proptest::prop_assert_eq!(rank(&m), rational_rank(&m));
            proptest::prop_assert_eq!(rank_mod_prime(&m, MERSENNE_61), rational_rank(&m));
        }
    }
}
