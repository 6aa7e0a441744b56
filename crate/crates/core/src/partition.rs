//! Integer partitions, the `d x (n-d)` box they index Schubert classes in,
//! and the tableau counts used for Plücker-relation bookkeeping.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// Trailing zeros are trimmed on construction, so `(2, 1, 0)` and `(2, 1)`
/// are the same key. The ordering is graded: lower weight first, and within
/// a weight the lexicographically larger partition comes first. That is the
/// basis order used for every Chow-ring matrix.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(m)`; empty for `m = 0`.
    pub fn row(m: usize) -> Self {
        if m == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![m] }
        }
    }

    /// `k` parts equal to `m`.
    pub fn rectangle(k: usize, m: usize) -> Self {
        if m == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![m; k] }
        }
    }

    /// Builds from parts already known to be weakly decreasing; zeros are
    /// dropped.
    pub(crate) fn from_decreasing(parts: impl IntoIterator<Item = usize>) -> Self {
        let parts: Vec<usize> = parts.into_iter().filter(|&p| p > 0).collect();
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `|λ|`
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (1..=width).map(|c| self.parts.iter().take_while(|&&p| p >= c).count());
        Partition::from_decreasing(parts)
    }

    pub fn fits_box(&self, shape: GrassmannShape) -> bool {
        self.len() <= shape.d() && self.part(0) <= shape.cols()
    }

    /// Complement inside the box: `μ_i = (n-d) - λ_{d+1-i}`.
    pub fn box_complement(&self, shape: GrassmannShape) -> Partition {
        let d = shape.d();
        Partition::from_decreasing((0..d).map(|i| shape.cols() - self.part(d - 1 - i)))
    }

    /// One row of cells per part, using a fixed monospace glyph.
    pub fn young_diagram(&self) -> String {
        if self.is_empty() {
            return "∅".to_string();
        }
        self.parts.iter().map(|&p| "□".repeat(p)).collect::<Vec<_>>().join("\n")
    }
}

/// Accepts `[2,1]`, `2,1`, `2 1`, and `[]`, `∅` or the empty string for the
/// empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim();
        let inner = inner
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .unwrap_or(inner)
            .trim();
        if inner.is_empty() || inner == "∅" {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Parse(format!("partition {s:?}")))?;
        Partition::new(parts)
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The Grassmannian `G_d(n)` of `d`-planes in `n`-space.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GrassmannShape {
    d: usize,
    n: usize,
}

impl GrassmannShape {
    pub fn new(d: usize, n: usize) -> Result<Self> {
        if d == 0 || d >= n {
            return Err(Error::InvalidShape { d, n });
        }
        Ok(GrassmannShape { d, n })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Column bound `n - d`, also the rank of the quotient bundle.
    pub fn cols(&self) -> usize {
        self.n - self.d
    }

    /// `t = d(n-d)`, the dimension of the Grassmannian.
    pub fn dim(&self) -> usize {
        self.d * (self.n - self.d)
    }

    /// `G_{n-d}(n)`, the dual Grassmannian.
    pub fn dual(&self) -> GrassmannShape {
        GrassmannShape {
            d: self.n - self.d,
            n: self.n,
        }
    }

    pub fn full_box(&self) -> Partition {
        Partition::rectangle(self.d, self.cols())
    }
}

impl fmt::Display for GrassmannShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G({},{})", self.d, self.n)
    }
}

impl fmt::Debug for GrassmannShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub fn fits_box(lambda: &Partition, shape: GrassmannShape) -> bool {
    lambda.fits_box(shape)
}

pub fn conjugate(lambda: &Partition) -> Partition {
    lambda.conjugate()
}

/// All boxed partitions of weight `degree`, largest first part first.
/// Empty when `degree > t`.
pub fn enumerate_box(shape: GrassmannShape, degree: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    if degree > shape.dim() {
        return out;
    }
    let mut current = Vec::with_capacity(shape.d());
    fill(degree, shape.cols(), shape.d(), &mut current, &mut out);
    out
}

fn fill(remaining: usize, max_part: usize, rows_left: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition { parts: current.clone() });
        return;
    }
    if rows_left == 0 || remaining > max_part * rows_left {
        return;
    }
    for p in (1..=max_part.min(remaining)).rev() {
        current.push(p);
        fill(remaining - p, p, rows_left - 1, current, out);
        current.pop();
    }
}

/// Every boxed partition, degree by degree.
pub fn full_basis(shape: GrassmannShape) -> Vec<Vec<Partition>> {
    (0..=shape.dim()).map(|k| enumerate_box(shape, k)).collect()
}

/// Pairs `(λ, μ)` of boxed partitions with `|λ| + |μ| = total`.
pub fn partition_weight_pairs(shape: GrassmannShape, total: usize) -> Vec<(Partition, Partition)> {
    (0..=total.min(shape.dim()))
        .flat_map(|k| {
            let left = enumerate_box(shape, k);
            let right = enumerate_box(shape, total - k);
            left.into_iter()
                .flat_map(move |l| right.clone().into_iter().map(move |r| (l.clone(), r)))
        })
        .collect()
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Semistandard tableaux of shape `λ` with entries in `1..=n`, by the
/// hook-content formula `Π (n + c(u)) / h(u)`.
pub fn ssyt_count(lambda: &Partition, n: usize) -> BigUint {
    if lambda.len() > n {
        return BigUint::zero();
    }
    let conj = lambda.conjugate();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row {
            // content j - i is >= -(n-1) here, so n + c > 0
            num *= BigUint::from(n + j - i);
            let hook = (row - j - 1) + (conj.part(j) - i - 1) + 1;
            den *= BigUint::from(hook);
        }
    }
    num / den
}

/// Independent quadrics among the Plücker coordinates: all quadratic
/// monomials minus the degree-2 part of the coordinate ring, which is the
/// irreducible representation indexed by `d` rows of length 2.
pub fn plucker_relation_count(shape: GrassmannShape) -> BigUint {
    let coords = binomial(shape.n(), shape.d());
    let quadrics = binomial(
        usize::try_from(&coords + 1u32).expect("Plücker count overflows usize"),
        2,
    );
    quadrics - ssyt_count(&Partition::rectangle(shape.d(), 2), shape.n())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn shape(d: usize, n: usize) -> GrassmannShape {
        GrassmannShape::new(d, n).unwrap()
    }

    #[test]
    fn parsing() {
        assert_eq!("[2,1]".parse::<Partition>().unwrap(), p(&[2, 1]));
        assert_eq!(" 3 1 1 ".parse::<Partition>().unwrap(), p(&[3, 1, 1]));
        assert_eq!("2,1,0".parse::<Partition>().unwrap(), p(&[2, 1]));
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert!(matches!("1,2".parse::<Partition>(), Err(Error::InvalidPartition(_))));
        assert!(matches!("2,x".parse::<Partition>(), Err(Error::Parse(_))));
    }

    #[test]
    fn canonical_encoding_trims_zeros() {
        assert_eq!(p(&[2, 1, 0, 0]).parts(), &[2, 1]);
        assert_eq!(p(&[0, 0]), Partition::empty());
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0, 1]).is_err());
    }

    #[test]
    fn shape_bounds() {
        assert!(GrassmannShape::new(0, 4).is_err());
        assert!(GrassmannShape::new(4, 4).is_err());
        assert_eq!(shape(3, 6).dim(), 9);
        assert_eq!(shape(2, 5).dual(), shape(3, 5));
    }

    #[test]
    fn box_membership() {
        assert!(fits_box(&p(&[2, 1]), shape(2, 4)));
        assert!(!fits_box(&p(&[3]), shape(2, 4)));
        assert!(!fits_box(&p(&[1, 1, 1]), shape(2, 6)));
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_box(shape(2, 4), 2), vec![p(&[2]), p(&[1, 1])]);
        assert_eq!(enumerate_box(shape(3, 6), 0), vec![Partition::empty()]);
        let total: usize = (0..=9).map(|k| enumerate_box(shape(3, 6), k).len()).sum();
        assert_eq!(total, 20);
        assert!(enumerate_box(shape(2, 4), 5).is_empty());
        assert_eq!(
            enumerate_box(shape(3, 6), 4),
            vec![p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1])]
        );
    }

    #[test]
    fn enumeration_is_sorted_in_basis_order() {
        for k in 0..=9 {
            let b = enumerate_box(shape(3, 6), k);
            assert!(b.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[2, 2, 2]).conjugate(), p(&[3, 3]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
    }

    #[test]
    fn ssyt_examples() {
        assert_eq!(ssyt_count(&p(&[2, 2, 2]), 6), BigUint::from(175u32));
        assert_eq!(ssyt_count(&p(&[1]), 7), BigUint::from(7u32));
        assert_eq!(ssyt_count(&p(&[1, 1]), 3), BigUint::from(3u32));
        assert_eq!(ssyt_count(&p(&[1, 1, 1]), 2), BigUint::zero());
        assert_eq!(ssyt_count(&Partition::empty(), 4), BigUint::one());
    }

    #[test]
    fn plucker_examples() {
        assert_eq!(plucker_relation_count(shape(3, 6)), BigUint::from(35u32));
        assert_eq!(plucker_relation_count(shape(2, 4)), BigUint::one());
        for n in 2..9 {
            assert!(plucker_relation_count(shape(1, n)).is_zero());
        }
    }

    #[test]
    fn complement_and_diagram() {
        assert_eq!(p(&[2, 1]).box_complement(shape(2, 5)), p(&[2, 1]));
        assert_eq!(p(&[3]).box_complement(shape(2, 5)), p(&[3]));
        assert_eq!(Partition::empty().box_complement(shape(2, 4)), p(&[2, 2]));
        assert_eq!(p(&[2, 1]).young_diagram(), "□□\n□");
    }
}
