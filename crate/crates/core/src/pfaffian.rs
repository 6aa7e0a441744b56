//! Pfaffians of antisymmetric rational matrices and the Roberts
//! classification of the Pfaffian rings `B_m(n)`.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::chow::ChowRing;
use crate::cone::{roberts_report, ReportMode};
use crate::error::{Error, Result};
use crate::linalg;
use crate::partition::{binomial, GrassmannShape};

/// A square rational matrix with `z_ij = -z_ji` and zero diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AntisymmetricMatrix {
    entries: Vec<Vec<BigRational>>,
}

#[allow(clippy::needless_range_loop)]
impl AntisymmetricMatrix {
    /// Validates shape and antisymmetry; the error names the first
    /// offending entry, 1-based.
    pub fn new(entries: Vec<Vec<BigRational>>) -> Result<Self> {
        let k = entries.len();
        for (row, r) in entries.iter().enumerate() {
            if r.len() != k {
                return Err(Error::NotSquare {
                    row: row + 1,
                    len: r.len(),
                    expected: k,
                });
            }
        }
        for i in 0..k {
            for j in i..k {
                if entries[i][j] != -entries[j][i].clone() {
                    return Err(Error::NotAntisymmetric { i: i + 1, j: j + 1 });
                }
            }
        }
        Ok(AntisymmetricMatrix { entries })
    }

    /// Builds from the strict upper triangle, row by row.
    pub fn from_upper(k: usize, upper: &[BigRational]) -> Self {
        assert_eq!(upper.len(), k * k.saturating_sub(1) / 2, "upper triangle length");
        let mut entries = vec![vec![BigRational::zero(); k]; k];
        let mut it = upper.iter();
        for i in 0..k {
            for j in i + 1..k {
                let v = it.next().expect("length checked").clone();
                entries[j][i] = -v.clone();
                entries[i][j] = v;
            }
        }
        AntisymmetricMatrix { entries }
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<BigRational>] {
        &self.entries
    }

    pub fn determinant(&self) -> BigRational {
        linalg::determinant(&self.entries)
    }

    pub fn pfaffian(&self) -> BigRational {
        pfaffian(self)
    }
}

/// Expansion along the first remaining index, memoized on the index subset:
/// `Pf(S) = Σ_{j ∈ S, j > i} (-1)^{pos(j)-1} z_ij Pf(S \ {i, j})` with `i`
/// the smallest index of `S`.
pub fn pfaffian(z: &AntisymmetricMatrix) -> BigRational {
    let k = z.size();
    if k % 2 == 1 {
        return BigRational::zero();
    }
    assert!(k < 64, "Pfaffian size limited to 63");
    let full: u64 = if k == 0 { 0 } else { u64::MAX >> (64 - k) };
    let mut memo = HashMap::new();
    pf_subset(z, full, &mut memo)
}

fn pf_subset(z: &AntisymmetricMatrix, set: u64, memo: &mut HashMap<u64, BigRational>) -> BigRational {
    if set == 0 {
        return BigRational::one();
    }
    if let Some(v) = memo.get(&set) {
        return v.clone();
    }
    let i = set.trailing_zeros() as usize;
    let rest = set & !(1u64 << i);
    let mut acc = BigRational::zero();
    let mut position = 0;
    let mut bits = rest;
    while bits != 0 {
        let j = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        position += 1;
        let zij = z.entry(i, j);
        if zij.is_zero() {
            continue;
        }
        let minor = pf_subset(z, rest & !(1u64 << j), memo);
        let term = zij * minor;
        if position % 2 == 1 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    memo.insert(set, acc.clone());
    acc
}

/// Generator count, height, and verdicts for `B_m(n) = S / Pf_{2m}(Y)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PfaffianClassification {
    pub m: usize,
    pub n: usize,
    /// Minimal generators of the ideal: `C(n, 2m)`.
    pub generators: BigUint,
    /// Height of the ideal: `(n-2m+1)(n-2m+2)/2`.
    pub height: BigUint,
    /// `dim S - dim B_m(n)`, equal to the height.
    pub dimension_deficit: BigUint,
    pub is_complete_intersection: bool,
    pub is_roberts: bool,
}

pub fn classify_b(m: usize, n: usize) -> Result<PfaffianClassification> {
    if m == 0 || n < 2 * m {
        return Err(Error::InvalidPfaffianParameters { m, n });
    }
    let generators = binomial(n, 2 * m);
    let height = binomial(n - 2 * m + 2, 2);
    Ok(PfaffianClassification {
        m,
        n,
        is_complete_intersection: generators == height,
        dimension_deficit: height.clone(),
        generators,
        height,
        is_roberts: n == 2 * m || m == 1,
    })
}

/// `B_2(n)` is the Plücker cone of `G_2(n)`: its classification must match
/// the Schubert-calculus verdict.
pub fn cross_check_b2(n: usize) -> Result<bool> {
    let b = classify_b(2, n)?;
    let shape = GrassmannShape::new(2, n)?;
    let report = roberts_report(&ChowRing::new(shape), ReportMode::VerdictOnly);
    Ok(b.is_roberts == report.verdict)
}
