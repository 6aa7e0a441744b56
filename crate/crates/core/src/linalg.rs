//! Exact linear algebra: fraction-free elimination over the integers and
//! canonical residuals modulo a column space.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Fraction-free (Bareiss) row echelon form in place. Pivot columns are
/// searched in `col_order`. Returns the pivot columns in row order; their
/// count is the rank.
pub fn bareiss_echelon(rows: &mut [Vec<BigInt>], col_order: &[usize]) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for &c in col_order {
        if r == rows.len() {
            break;
        }
        let Some(found) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, found);
        let (head, tail) = rows.split_at_mut(r + 1);
        let pivot_row = &head[r];
        let pivot = pivot_row[c].clone();
        for row in tail.iter_mut() {
            let factor = row[c].clone();
            for k in 0..row.len() {
                let v = &pivot * &row[k] - &factor * &pivot_row[k];
                // Sylvester's identity guarantees exact division.
                row[k] = v / &prev;
            }
        }
        prev = pivot;
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn integer_rank(rows: &[Vec<BigInt>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let width = rows[0].len();
    let mut work = rows.to_vec();
    bareiss_echelon(&mut work, &(0..width).collect::<Vec<_>>()).len()
}

/// Multiplies a rational vector by the lcm of its denominators.
pub fn clear_denominators(v: &[BigRational]) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    v.iter().map(|q| q.numer() * (&lcm / q.denom())).collect()
}

/// Residues modulo the span of a fixed set of integer vectors.
///
/// The span is held in reduced row echelon form with pivots taken from the
/// highest coordinate downwards, so the residual of a vector keeps the
/// lowest-index coordinates. Residuals are canonical coset representatives:
/// two vectors reduce to the same residual iff their difference lies in the
/// span.
#[derive(Debug, Clone)]
pub struct SpanReducer {
    dim: usize,
    generators: Vec<Vec<BigInt>>,
    /// `(pivot coordinate, row)`; each row is 1 at its pivot and 0 at every
    /// other pivot.
    basis: Vec<(usize, Vec<BigRational>)>,
}

impl SpanReducer {
    pub fn new(dim: usize, generators: Vec<Vec<BigInt>>) -> Self {
        debug_assert!(generators.iter().all(|g| g.len() == dim));
        let mut rows = generators.clone();
        let order: Vec<usize> = (0..dim).rev().collect();
        let pivots = bareiss_echelon(&mut rows, &order);
        let mut basis: Vec<(usize, Vec<BigRational>)> = pivots
            .iter()
            .zip(rows)
            .map(|(&p, row)| {
                let lead = BigRational::from_integer(row[p].clone());
                let row = row.into_iter().map(|x| BigRational::from_integer(x) / &lead).collect();
                (p, row)
            })
            .collect();
        // back substitution
        for i in (0..basis.len()).rev() {
            let (p, pivot_row) = basis[i].clone();
            for (_, row) in basis.iter_mut().take(i) {
                let c = row[p].clone();
                if !c.is_zero() {
                    for (x, y) in row.iter_mut().zip(&pivot_row) {
                        *x -= &c * y;
                    }
                }
            }
        }
        SpanReducer { dim, generators, basis }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.basis.iter().map(|(p, _)| *p)
    }

    pub fn reduce(&self, v: &[BigRational]) -> Vec<BigRational> {
        let mut out = v.to_vec();
        for (p, row) in &self.basis {
            let c = out[*p].clone();
            if !c.is_zero() {
                for (x, y) in out.iter_mut().zip(row) {
                    *x -= &c * y;
                }
            }
        }
        out
    }

    /// Membership by the rank test `rank [M | v] = rank M`, computed
    /// fraction-free on the integer-scaled vector.
    pub fn contains(&self, v: &[BigRational]) -> bool {
        if v.iter().all(Zero::is_zero) {
            return true;
        }
        let mut rows = self.generators.clone();
        rows.push(clear_denominators(v));
        integer_rank(&rows) == self.rank()
    }
}

/// Determinant over the rationals by Gaussian elimination.
#[allow(clippy::needless_range_loop)]
pub fn determinant(matrix: &[Vec<BigRational>]) -> BigRational {
    let k = matrix.len();
    let mut a = matrix.to_vec();
    let mut det = BigRational::one();
    for c in 0..k {
        let Some(r) = (c..k).find(|&r| !a[r][c].is_zero()) else {
            return BigRational::zero();
        };
        if r != c {
            a.swap(r, c);
            det = -det;
        }
        let pivot = a[c][c].clone();
        det *= &pivot;
        for i in c + 1..k {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] / &pivot;
            for j in c..k {
                let sub = &f * &a[c][j];
                a[i][j] -= sub;
            }
        }
    }
    det
}

pub fn is_zero_vector(v: &[BigRational]) -> bool {
    v.iter().all(|x| x.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    fn rats(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| BigRational::from_integer(x.into())).collect()
    }

    #[test]
    fn rank_of_small_matrices() {
        assert_eq!(integer_rank(&ints(&[&[1, 1], &[2, 2]])), 1);
        assert_eq!(integer_rank(&ints(&[&[1, 0, 1], &[0, 1, 1], &[1, 1, 2]])), 2);
        assert_eq!(integer_rank(&ints(&[&[2, 3], &[5, 7]])), 2);
    }

    #[test]
    fn reducer_keeps_leading_coordinates() {
        // pivot on coordinate 1, so (0,1) -> (0,1) - (1,1)
        let r = SpanReducer::new(2, ints(&[&[1, 1]]));
        assert_eq!(r.reduce(&rats(&[1, 0])), rats(&[1, 0]));
        assert_eq!(r.reduce(&rats(&[0, 1])), rats(&[-1, 0]));
        assert!(r.contains(&rats(&[3, 3])));
        assert!(!r.contains(&rats(&[1, 0])));
    }

    #[test]
    fn reduce_is_idempotent() {
        let r = SpanReducer::new(4, ints(&[&[1, 1, 0, 0], &[0, 1, 1, 1], &[0, 0, 1, 1]]));
        let v = rats(&[3, -2, 5, 7]);
        let once = r.reduce(&v);
        assert_eq!(r.reduce(&once), once);
    }

    #[test]
    fn determinant_small() {
        let m = vec![rats(&[2, 1]), rats(&[7, 4])];
        assert_eq!(determinant(&m), BigRational::one());
        let m = vec![rats(&[0, 1, 0]), rats(&[1, 0, 0]), rats(&[0, 0, 5])];
        assert_eq!(determinant(&m), BigRational::from_integer((-5).into()));
    }
}
