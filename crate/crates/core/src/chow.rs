//! The rational Chow ring of a Grassmannian on the Schubert basis.
//!
//! Multiplication by a special class `σ_m` is Pieri's rule; products of two
//! arbitrary Schubert classes expand one factor as a Giambelli determinant in
//! special classes and apply Pieri repeatedly to the other. Basis-pair
//! products are memoized per ring.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::SpanReducer;
use crate::partition::{enumerate_box, GrassmannShape, Partition};
use crate::series::GradedAlgebra;

/// A finite rational combination of Schubert classes `{λ}` of one
/// Grassmannian. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct ChowElement {
    shape: GrassmannShape,
    terms: BTreeMap<Partition, BigRational>,
}

impl ChowElement {
    pub fn zero(shape: GrassmannShape) -> Self {
        ChowElement {
            shape,
            terms: BTreeMap::new(),
        }
    }

    pub fn unit(shape: GrassmannShape) -> Self {
        Self::zero(shape).with_term(Partition::empty(), BigRational::one())
    }

    /// The Schubert class `{λ}`.
    pub fn schubert(shape: GrassmannShape, lambda: Partition) -> Result<Self> {
        Self::from_terms(shape, [(lambda, BigRational::one())])
    }

    /// `σ_m = {(m)}`; the unit for `m = 0` and zero outside `0..=n-d`.
    pub fn special(shape: GrassmannShape, m: usize) -> Self {
        if m > shape.cols() {
            Self::zero(shape)
        } else {
            Self::zero(shape).with_term(Partition::row(m), BigRational::one())
        }
    }

    pub fn from_terms(
        shape: GrassmannShape,
        terms: impl IntoIterator<Item = (Partition, BigRational)>,
    ) -> Result<Self> {
        let mut out = Self::zero(shape);
        for (lambda, q) in terms {
            if !lambda.fits_box(shape) {
                return Err(Error::OutsideBox {
                    partition: lambda,
                    shape,
                });
            }
            out.add_term(lambda, q);
        }
        Ok(out)
    }

    fn with_term(mut self, lambda: Partition, q: BigRational) -> Self {
        self.add_term(lambda, q);
        self
    }

    pub(crate) fn add_term(&mut self, lambda: Partition, q: BigRational) {
        if q.is_zero() {
            return;
        }
        let entry = self.terms.entry(lambda);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(q);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += q;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn shape(&self) -> GrassmannShape {
        self.shape
    }

    pub fn terms(&self) -> &BTreeMap<Partition, BigRational> {
        &self.terms
    }

    pub fn coefficient(&self, lambda: &Partition) -> BigRational {
        self.terms.get(lambda).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degrees(&self) -> BTreeSet<usize> {
        self.terms.keys().map(Partition::weight).collect()
    }

    /// The degree if every term has the same weight; `None` for zero or
    /// mixed elements.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let degrees = self.degrees();
        if degrees.len() == 1 {
            degrees.into_iter().next()
        } else {
            None
        }
    }

    /// Graded component of degree `k`.
    pub fn component(&self, k: usize) -> ChowElement {
        ChowElement {
            shape: self.shape,
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| p.weight() == k)
                .map(|(p, q)| (p.clone(), q.clone()))
                .collect(),
        }
    }

    /// Drops every component above degree `k`.
    pub fn truncate(&self, k: usize) -> ChowElement {
        ChowElement {
            shape: self.shape,
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| p.weight() <= k)
                .map(|(p, q)| (p.clone(), q.clone()))
                .collect(),
        }
    }

    pub fn add(&self, other: &ChowElement) -> Result<ChowElement> {
        self.check_shape(other)?;
        let mut out = self.clone();
        for (p, q) in &other.terms {
            out.add_term(p.clone(), q.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &ChowElement) -> Result<ChowElement> {
        self.add(&other.neg())
    }

    pub fn scale(&self, q: &BigRational) -> ChowElement {
        if q.is_zero() {
            return Self::zero(self.shape);
        }
        ChowElement {
            shape: self.shape,
            terms: self.terms.iter().map(|(p, c)| (p.clone(), c * q)).collect(),
        }
    }

    pub fn neg(&self) -> ChowElement {
        ChowElement {
            shape: self.shape,
            terms: self.terms.iter().map(|(p, c)| (p.clone(), -c)).collect(),
        }
    }

    fn check_shape(&self, other: &ChowElement) -> Result<()> {
        if self.shape != other.shape {
            return Err(Error::ShapeMismatch(self.shape, other.shape));
        }
        Ok(())
    }
}

impl fmt::Display for ChowElement {
    /// `[2] + [1,1]`, `-1/12·[2]`, `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (p, q)) in self.terms.iter().enumerate() {
            let negative = q.is_negative();
            let abs = q.abs();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if abs.is_one() {
                write!(f, "{p}")?;
            } else {
                write!(f, "{abs}·{p}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ChowElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.shape, self)
    }
}

/// Partitions `μ` in the box with `μ ⊇ λ`, `|μ| = |λ| + m`, and the
/// interlacing `n-d >= μ_1 >= λ_1 >= μ_2 >= λ_2 >= ...` (a horizontal strip).
/// Parses one term, `"[2,1]:-1/2"`, `"2,1:3"` or `"[2]"` (coefficient 1).
pub fn parse_term(spec: &str) -> Result<(Partition, BigRational)> {
    let (part, coeff) = match spec.rsplit_once(':') {
        Some((p, c)) => (p, c.trim()),
        None => (spec, "1"),
    };
    let coeff = coeff
        .parse::<BigRational>()
        .map_err(|_| Error::Parse(format!("coefficient {coeff:?} in {spec:?}")))?;
    Ok((part.parse()?, coeff))
}

/// A class from whitespace-separated terms, e.g. `"[2]:1 [1,1]:-1/2"`.
pub fn parse_class(shape: GrassmannShape, spec: &str) -> Result<ChowElement> {
    let terms = spec.split_whitespace().map(parse_term).collect::<Result<Vec<_>>>()?;
    ChowElement::from_terms(shape, terms)
}

pub fn pieri_terms(lambda: &Partition, m: usize, shape: GrassmannShape) -> Vec<Partition> {
    let mut out = Vec::new();
    if m == 0 {
        out.push(lambda.clone());
        return out;
    }
    if m > shape.cols() || !lambda.fits_box(shape) {
        return out;
    }
    let d = shape.d();
    let mut mu = vec![0usize; d];
    strip(lambda, shape, 0, m, &mut mu, &mut out);
    out.sort();
    out
}

fn strip(
    lambda: &Partition,
    shape: GrassmannShape,
    row: usize,
    left: usize,
    mu: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    let d = shape.d();
    if row == d {
        if left == 0 {
            out.push(Partition::from_decreasing(mu.iter().copied()));
        }
        return;
    }
    let low = lambda.part(row);
    let high = if row == 0 { shape.cols() } else { lambda.part(row - 1) };
    // remaining rows can absorb at most this much
    let capacity: usize = (row + 1..d).map(|r| lambda.part(r - 1) - lambda.part(r)).sum();
    for v in low..=high {
        let added = v - low;
        if added > left {
            break;
        }
        if left - added > capacity {
            continue;
        }
        mu[row] = v;
        strip(lambda, shape, row + 1, left - added, mu, out);
    }
}

/// A product of special classes, `σ_{k_1} σ_{k_2} ...`, with indices sorted
/// in decreasing order. The empty monomial is the unit.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SigmaMonomial(pub Vec<usize>);

impl fmt::Display for SigmaMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let names: Vec<String> = self.0.iter().map(|k| format!("σ{k}")).collect();
        write!(f, "{}", names.join("·"))
    }
}

/// Expansion of `det(σ_{λ_i + j - i})` into signed monomials, with
/// `σ_0 = 1` and `σ_k = 0` for `k < 0` or `k > n-d`. Monomials are listed in
/// the order their first permutation is met, identity first; equal
/// monomials are merged and cancelled ones dropped.
pub fn giambelli_expand(lambda: &Partition, shape: GrassmannShape) -> Vec<(i64, SigmaMonomial)> {
    let len = lambda.len();
    let mut acc: Vec<(i64, SigmaMonomial)> = Vec::new();
    let mut used = vec![false; len];
    let mut chosen = Vec::with_capacity(len);
    expand_rows(lambda, shape.cols() as i64, 0, 1, &mut used, &mut chosen, &mut acc);
    acc.retain(|(c, _)| *c != 0);
    acc
}

fn expand_rows(
    lambda: &Partition,
    cols: i64,
    row: usize,
    sign: i64,
    used: &mut [bool],
    chosen: &mut Vec<usize>,
    acc: &mut Vec<(i64, SigmaMonomial)>,
) {
    let len = lambda.len();
    if row == len {
        let mut mono: Vec<usize> = chosen.iter().copied().filter(|&k| k > 0).collect();
        mono.sort_unstable_by(|a, b| b.cmp(a));
        let mono = SigmaMonomial(mono);
        match acc.iter_mut().find(|(_, m)| *m == mono) {
            Some((c, _)) => *c += sign,
            None => acc.push((sign, mono)),
        }
        return;
    }
    for col in 0..len {
        if used[col] {
            continue;
        }
        let k = lambda.part(row) as i64 + col as i64 - row as i64;
        if k < 0 || k > cols {
            continue;
        }
        // sign of the permutation: count inversions against later columns
        let inversions = used[col + 1..].iter().filter(|&&u| u).count();
        let s = if inversions % 2 == 0 { sign } else { -sign };
        used[col] = true;
        chosen.push(k as usize);
        expand_rows(lambda, cols, row + 1, s, used, chosen, acc);
        chosen.pop();
        used[col] = false;
    }
}

type SparseInt = Vec<(usize, i64)>;

/// The Chow ring `CH(G_d(n))_Q` with its Schubert basis, a Pieri table, and
/// a memo of basis-pair products.
pub struct ChowRing {
    shape: GrassmannShape,
    by_degree: Vec<Vec<Partition>>,
    all: Vec<Partition>,
    index: HashMap<Partition, usize>,
    /// `pieri[i][m - 1]`: basis indices of `{all[i]} · σ_m`.
    pieri: Vec<Vec<Vec<usize>>>,
    products: RwLock<HashMap<(usize, usize), Arc<SparseInt>>>,
    h_matrices: OnceLock<HMatrixSet>,
}

impl fmt::Debug for ChowRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ChowRing")
            .field("shape", &self.shape)
            .field("rank", &self.all.len())
            .finish()
    }
}

impl ChowRing {
    pub fn new(shape: GrassmannShape) -> Self {
        let by_degree: Vec<Vec<Partition>> = (0..=shape.dim()).map(|k| enumerate_box(shape, k)).collect();
        let all: Vec<Partition> = by_degree.iter().flatten().cloned().collect();
        let index: HashMap<Partition, usize> = all.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let pieri = all
            .iter()
            .map(|lambda| {
                (1..=shape.cols())
                    .map(|m| pieri_terms(lambda, m, shape).iter().map(|mu| index[mu]).collect())
                    .collect()
            })
            .collect();
        ChowRing {
            shape,
            by_degree,
            all,
            index,
            pieri,
            products: RwLock::new(HashMap::new()),
            h_matrices: OnceLock::new(),
        }
    }

    pub fn shape(&self) -> GrassmannShape {
        self.shape
    }

    /// Ordered Schubert basis of `CH^k`; empty above `t`.
    pub fn basis(&self, k: usize) -> &[Partition] {
        self.by_degree.get(k).map(Vec::as_slice).unwrap_or(&[])
    }

    /// `binomial(n, d)`.
    pub fn rank(&self) -> usize {
        self.all.len()
    }

    pub fn zero(&self) -> ChowElement {
        ChowElement::zero(self.shape)
    }

    pub fn unit(&self) -> ChowElement {
        ChowElement::unit(self.shape)
    }

    pub fn special(&self, m: usize) -> ChowElement {
        ChowElement::special(self.shape, m)
    }

    pub fn schubert(&self, lambda: Partition) -> Result<ChowElement> {
        ChowElement::schubert(self.shape, lambda)
    }

    fn check(&self, a: &ChowElement) -> Result<()> {
        if a.shape != self.shape {
            return Err(Error::ShapeMismatch(self.shape, a.shape));
        }
        Ok(())
    }

    /// `a · σ_m` by Pieri's rule; zero for `m` outside `1..=n-d`.
    pub fn pieri(&self, a: &ChowElement, m: usize) -> Result<ChowElement> {
        self.check(a)?;
        let mut out = self.zero();
        if m == 0 || m > self.shape.cols() {
            return Ok(out);
        }
        for (lambda, q) in &a.terms {
            for &j in &self.pieri[self.index[lambda]][m - 1] {
                out.add_term(self.all[j].clone(), q.clone());
            }
        }
        Ok(out)
    }

    fn pieri_int(&self, v: &BTreeMap<usize, i64>, m: usize) -> BTreeMap<usize, i64> {
        let mut out = BTreeMap::new();
        for (&i, &c) in v {
            for &j in &self.pieri[i][m - 1] {
                *out.entry(j).or_insert(0) += c;
            }
        }
        out.retain(|_, c| *c != 0);
        out
    }

    /// `{all[i]} · {all[j]}` with integer coefficients.
    fn basis_product(&self, i: usize, j: usize) -> Arc<SparseInt> {
        // expand the factor with fewer rows
        let (a, b) = if self.all[i].len() >= self.all[j].len() {
            (i, j)
        } else {
            (j, i)
        };
        let key = (i.min(j), i.max(j));
        if let Some(hit) = self.products.read().expect("product memo poisoned").get(&key) {
            return Arc::clone(hit);
        }
        let mut total: BTreeMap<usize, i64> = BTreeMap::new();
        let target = self.all[a].weight() + self.all[b].weight();
        if target <= self.shape.dim() {
            for (coeff, mono) in giambelli_expand(&self.all[b], self.shape) {
                let mut v = BTreeMap::from([(a, 1i64)]);
                for &k in &mono.0 {
                    v = self.pieri_int(&v, k);
                    if v.is_empty() {
                        break;
                    }
                }
                for (idx, c) in v {
                    *total.entry(idx).or_insert(0) += coeff * c;
                }
            }
        }
        let result: SparseInt = total.into_iter().filter(|(_, c)| *c != 0).collect();
        let result = Arc::new(result);
        self.products
            .write()
            .expect("product memo poisoned")
            .entry(key)
            .or_insert_with(|| Arc::clone(&result));
        result
    }

    pub fn multiply(&self, a: &ChowElement, b: &ChowElement) -> Result<ChowElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.multiply_truncated(a, b, self.shape.dim()))
    }

    /// Product with every component above degree `top` dropped.
    pub fn multiply_truncated(&self, a: &ChowElement, b: &ChowElement, top: usize) -> ChowElement {
        let mut acc: BTreeMap<usize, BigRational> = BTreeMap::new();
        for (p, x) in &a.terms {
            let i = self.index[p];
            for (r, y) in &b.terms {
                if p.weight() + r.weight() > top {
                    continue;
                }
                let j = self.index[r];
                let xy = x * y;
                for &(k, c) in self.basis_product(i, j).iter() {
                    let term = &xy * BigInt::from(c);
                    let slot = acc.entry(k).or_insert_with(BigRational::zero);
                    *slot += term;
                }
            }
        }
        ChowElement {
            shape: self.shape,
            terms: acc
                .into_iter()
                .filter(|(_, q)| !q.is_zero())
                .map(|(k, q)| (self.all[k].clone(), q))
                .collect(),
        }
    }

    pub fn power(&self, a: &ChowElement, e: usize) -> Result<ChowElement> {
        self.check(a)?;
        let mut out = self.unit();
        for _ in 0..e {
            out = self.multiply(&out, a)?;
        }
        Ok(out)
    }

    pub fn memo_size(&self) -> usize {
        self.products.read().expect("product memo poisoned").len()
    }

    /// Multiplication-by-`h` matrices, built on first use.
    pub fn h_matrices(&self) -> &HMatrixSet {
        self.h_matrices.get_or_init(|| HMatrixSet::from_ring(self))
    }

    /// Coordinates of the degree-`k` component in the ordered basis.
    pub fn coordinates(&self, a: &ChowElement, k: usize) -> Vec<BigRational> {
        self.basis(k).iter().map(|p| a.coefficient(p)).collect()
    }

    pub fn from_coordinates(&self, k: usize, v: &[BigRational]) -> ChowElement {
        let mut out = self.zero();
        for (p, q) in self.basis(k).iter().zip(v) {
            out.add_term(p.clone(), q.clone());
        }
        out
    }

    /// Reduction modulo `h · CH^{k-1}`; see [`HMatrixSet::reduce`].
    pub fn reduce_mod_h(&self, a: &ChowElement) -> Result<Reduction> {
        self.check(a)?;
        self.h_matrices().reduce(self, a)
    }
}

pub fn unit(shape: GrassmannShape) -> ChowElement {
    ChowElement::unit(shape)
}

/// Littlewood-Richardson coefficient `c^ν_{λμ}`: the coefficient of `{ν}` in
/// `{λ}·{μ}`, computed in a box large enough that nothing is truncated.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> BigInt {
    if nu.weight() != lambda.weight() + mu.weight() {
        return BigInt::zero();
    }
    let rows = (lambda.len() + mu.len()).max(nu.len()).max(1);
    let cols = (lambda.part(0) + mu.part(0)).max(nu.part(0)).max(1);
    let shape = GrassmannShape::new(rows, rows + cols).expect("rows, cols >= 1");
    let ring = ChowRing::new(shape);
    let a = ring.schubert(lambda.clone()).expect("fits by construction");
    let b = ring.schubert(mu.clone()).expect("fits by construction");
    let c = ring.multiply(&a, &b).expect("same ring").coefficient(nu);
    debug_assert!(c.is_integer());
    c.to_integer()
}

/// The 0/1 matrices of multiplication by `h = σ_1` between consecutive
/// graded pieces, with a canonical reducer for each cokernel.
#[derive(Debug, Clone)]
pub struct HMatrixSet {
    shape: GrassmannShape,
    /// `matrices[i - 1]`: rows index `basis(i)`, columns index `basis(i-1)`.
    matrices: Vec<Vec<Vec<u8>>>,
    reducers: Vec<SpanReducer>,
}

/// Canonical representative of a class modulo `h · CH^{k-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub representative: ChowElement,
    pub is_zero: bool,
}

impl HMatrixSet {
    fn from_ring(ring: &ChowRing) -> Self {
        let shape = ring.shape;
        let mut matrices = Vec::new();
        let mut reducers = Vec::new();
        for i in 1..=shape.dim() {
            let rows = ring.basis(i);
            let cols = ring.basis(i - 1);
            let mut m = vec![vec![0u8; cols.len()]; rows.len()];
            let mut generators = Vec::with_capacity(cols.len());
            for (c, lambda) in cols.iter().enumerate() {
                let mut column = vec![BigInt::zero(); rows.len()];
                for mu in pieri_terms(lambda, 1, shape) {
                    let r = rows.iter().position(|p| *p == mu).expect("Pieri stays in the box");
                    m[r][c] = 1;
                    column[r] = BigInt::one();
                }
                generators.push(column);
            }
            reducers.push(SpanReducer::new(rows.len(), generators));
            matrices.push(m);
        }
        HMatrixSet {
            shape,
            matrices,
            reducers,
        }
    }

    pub fn shape(&self) -> GrassmannShape {
        self.shape
    }

    /// The matrix into degree `i`, `1 <= i <= t`.
    pub fn matrix(&self, i: usize) -> Option<&Vec<Vec<u8>>> {
        i.checked_sub(1).and_then(|k| self.matrices.get(k))
    }

    pub fn rank(&self, i: usize) -> usize {
        i.checked_sub(1)
            .and_then(|k| self.reducers.get(k))
            .map_or(0, SpanReducer::rank)
    }

    /// `dim CH^i / h CH^{i-1}`.
    pub fn cokernel_dim(&self, i: usize) -> usize {
        match i.checked_sub(1).and_then(|k| self.reducers.get(k)) {
            Some(r) => r.dim() - r.rank(),
            None if i == 0 => 1,
            None => 0,
        }
    }

    /// Reduces a homogeneous class of degree `i >= 1`. `is_zero` comes from
    /// the rank test; the representative is the residual against a fixed
    /// echelon basis of the image of `h`, which pivots on the trailing basis
    /// classes so that leading classes such as `σ_2` survive.
    pub fn reduce(&self, ring: &ChowRing, a: &ChowElement) -> Result<Reduction> {
        if a.is_zero() {
            return Ok(Reduction {
                representative: a.clone(),
                is_zero: true,
            });
        }
        let Some(i) = a.homogeneous_degree() else {
            return Err(Error::NotHomogeneous(a.degrees().into_iter().collect()));
        };
        if i == 0 || i > self.shape.dim() {
            return Err(Error::DegreeOutOfRange {
                degree: i,
                top: self.shape.dim(),
            });
        }
        let reducer = &self.reducers[i - 1];
        let v = ring.coordinates(a, i);
        let residual = reducer.reduce(&v);
        let is_zero = reducer.contains(&v);
        let representative = ring.from_coordinates(i, &residual);
        debug_assert_eq!(is_zero, representative.is_zero());
        Ok(Reduction {
            representative,
            is_zero,
        })
    }
}

pub fn build_h_matrices(shape: GrassmannShape) -> HMatrixSet {
    HMatrixSet::from_ring(&ChowRing::new(shape))
}

/// A view of a [`ChowRing`] as a graded algebra truncated at `top`.
#[derive(Debug, Clone, Copy)]
pub struct ChowAlgebra<'a> {
    pub ring: &'a ChowRing,
    pub top: usize,
}

impl<'a> ChowAlgebra<'a> {
    pub fn new(ring: &'a ChowRing) -> Self {
        ChowAlgebra {
            ring,
            top: ring.shape().dim(),
        }
    }

    pub fn truncated(ring: &'a ChowRing, top: usize) -> Self {
        ChowAlgebra {
            ring,
            top: top.min(ring.shape().dim()),
        }
    }
}

impl GradedAlgebra for ChowAlgebra<'_> {
    type Element = ChowElement;

    fn top_degree(&self) -> usize {
        self.top
    }

    fn zero(&self) -> ChowElement {
        self.ring.zero()
    }

    fn one(&self) -> ChowElement {
        self.ring.unit()
    }

    fn add(&self, a: &ChowElement, b: &ChowElement) -> ChowElement {
        a.add(b).expect("elements of one ring")
    }

    fn scale(&self, q: &BigRational, a: &ChowElement) -> ChowElement {
        a.scale(q)
    }

    fn mul(&self, a: &ChowElement, b: &ChowElement) -> ChowElement {
        self.ring.multiply_truncated(a, b, self.top)
    }

    fn component(&self, a: &ChowElement, k: usize) -> ChowElement {
        a.component(k)
    }

    fn is_zero(&self, a: &ChowElement) -> bool {
        a.is_zero()
    }
}
