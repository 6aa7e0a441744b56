//! Graded power-series combinators over commutative graded Q-algebras:
//! Newton's identities, truncated exp/log, Bernoulli numbers, and the
//! logarithmic Todd coefficients.

use std::collections::BTreeMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A commutative graded algebra over Q, truncated above `top_degree`.
pub trait GradedAlgebra {
    type Element: Clone;

    fn top_degree(&self) -> usize;
    fn zero(&self) -> Self::Element;
    fn one(&self) -> Self::Element;
    fn add(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;
    fn scale(&self, q: &BigRational, a: &Self::Element) -> Self::Element;
    /// Product with components above `top_degree` dropped.
    fn mul(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;
    fn component(&self, a: &Self::Element, k: usize) -> Self::Element;
    fn is_zero(&self, a: &Self::Element) -> bool;

    fn sub(&self, a: &Self::Element, b: &Self::Element) -> Self::Element {
        self.add(a, &self.scale(&-BigRational::one(), b))
    }

    fn sum<'e, I>(&self, items: I) -> Self::Element
    where
        I: IntoIterator<Item = &'e Self::Element>,
        Self::Element: 'e,
    {
        items.into_iter().fold(self.zero(), |acc, x| self.add(&acc, x))
    }
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

fn binomial_int(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// Bernoulli number `B_k` with `B_1 = -1/2`, from
/// `Σ_{j=0}^{k} C(k+1, j) B_j = 0`.
pub fn bernoulli(k: usize) -> BigRational {
    static CACHE: OnceLock<Mutex<Vec<BigRational>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(vec![BigRational::one()]));
    let mut b = cache.lock().expect("bernoulli cache poisoned");
    while b.len() <= k {
        let m = b.len();
        let s: BigRational = (0..m)
            .map(|j| BigRational::from_integer(binomial_int(m + 1, j)) * &b[j])
            .sum();
        let next = -s / BigRational::from_integer(BigInt::from(m + 1));
        b.push(next);
    }
    b[k].clone()
}

/// Coefficients `a_1..a_D` of `log(x / (1 - e^{-x})) = Σ a_m x^m`, so that
/// `td(E) = exp(Σ a_m p_m(E))` with `p_m = m!·ch_m` the power sums of the
/// Chern roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ToddLogCoeffs {
    coeffs: Vec<BigRational>,
}

impl ToddLogCoeffs {
    /// `a_m`, `1 <= m <= D`.
    pub fn get(&self, m: usize) -> &BigRational {
        &self.coeffs[m - 1]
    }

    pub fn max_degree(&self) -> usize {
        self.coeffs.len()
    }

    pub fn as_slice(&self) -> &[BigRational] {
        &self.coeffs
    }
}

pub fn todd_log_coeffs(max_degree: usize) -> ToddLogCoeffs {
    static CACHE: OnceLock<Mutex<BTreeMap<usize, ToddLogCoeffs>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(BTreeMap::new()));
    if let Some(hit) = cache.lock().expect("todd cache poisoned").get(&max_degree) {
        return hit.clone();
    }
    let alg = free::FreeAlgebra::univariate(max_degree);
    let x = alg.generator(0);
    // (1 - e^{-x}) / x = Σ_k (-1)^k x^k / (k+1)!
    let mut denom = alg.zero();
    let mut x_pow = alg.one();
    for k in 0..=max_degree {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let c = rat(sign) / BigRational::from_integer(factorial(k + 1));
        denom = alg.add(&denom, &alg.scale(&c, &x_pow));
        x_pow = alg.mul(&x_pow, &x);
    }
    let todd = invert_unit(&alg, &denom).expect("constant term is 1");
    let log = log_graded(&alg, &todd).expect("constant term is 1");
    let coeffs = (1..=max_degree).map(|m| alg.coefficient(&log, &[m])).collect();
    let out = ToddLogCoeffs { coeffs };
    cache
        .lock()
        .expect("todd cache poisoned")
        .insert(max_degree, out.clone());
    out
}

/// Homogeneous components `0..=top` of `a`.
fn components<A: GradedAlgebra>(alg: &A, a: &A::Element) -> Vec<A::Element> {
    (0..=alg.top_degree()).map(|k| alg.component(a, k)).collect()
}

fn has_unit_constant<A: GradedAlgebra>(alg: &A, a: &A::Element) -> bool {
    alg.is_zero(&alg.sub(&alg.component(a, 0), &alg.one()))
}

/// `Σ x^k / k!`, truncated at the algebra's top degree. The degree-0 part
/// of `x` must vanish.
pub fn exp_graded<A: GradedAlgebra>(alg: &A, x: &A::Element) -> Result<A::Element> {
    if !alg.is_zero(&alg.component(x, 0)) {
        return Err(Error::ConstantTerm("exp needs a zero degree-0 part".into()));
    }
    let top = alg.top_degree();
    let xs = components(alg, x);
    // k·E_k = Σ_{j=1}^{k} j·x_j·E_{k-j}
    let mut e: Vec<A::Element> = vec![alg.one()];
    for k in 1..=top {
        let mut acc = alg.zero();
        for j in 1..=k {
            if alg.is_zero(&xs[j]) || alg.is_zero(&e[k - j]) {
                continue;
            }
            let term = alg.mul(&xs[j], &e[k - j]);
            acc = alg.add(&acc, &alg.scale(&rat(j as i64), &term));
        }
        e.push(alg.scale(&(BigRational::one() / rat(k as i64)), &acc));
    }
    Ok(alg.sum(e.iter()))
}

/// `Σ (-1)^{k-1} (u-1)^k / k`, truncated. The degree-0 part of `u` must be 1.
pub fn log_graded<A: GradedAlgebra>(alg: &A, u: &A::Element) -> Result<A::Element> {
    if !has_unit_constant(alg, u) {
        return Err(Error::ConstantTerm("log needs degree-0 part equal to 1".into()));
    }
    let top = alg.top_degree();
    let us = components(alg, u);
    // k·L_k = k·u_k - Σ_{j=1}^{k-1} j·L_j·u_{k-j}
    let mut l: Vec<A::Element> = vec![alg.zero()];
    for k in 1..=top {
        let mut acc = alg.scale(&rat(k as i64), &us[k]);
        for j in 1..k {
            if alg.is_zero(&l[j]) || alg.is_zero(&us[k - j]) {
                continue;
            }
            let term = alg.mul(&l[j], &us[k - j]);
            acc = alg.sub(&acc, &alg.scale(&rat(j as i64), &term));
        }
        l.push(alg.scale(&(BigRational::one() / rat(k as i64)), &acc));
    }
    Ok(alg.sum(l.iter()))
}

/// Multiplicative inverse of an element with degree-0 part 1.
pub fn invert_unit<A: GradedAlgebra>(alg: &A, u: &A::Element) -> Result<A::Element> {
    if !has_unit_constant(alg, u) {
        return Err(Error::ConstantTerm("inverse needs degree-0 part equal to 1".into()));
    }
    Ok(inverse_components(alg, u)
        .iter()
        .fold(alg.zero(), |acc, x| alg.add(&acc, x)))
}

/// Homogeneous components `0..=top` of `u^{-1}` for `u` with constant 1.
pub fn inverse_components<A: GradedAlgebra>(alg: &A, u: &A::Element) -> Vec<A::Element> {
    let top = alg.top_degree();
    let us = components(alg, u);
    let mut inv: Vec<A::Element> = vec![alg.one()];
    for k in 1..=top {
        let mut acc = alg.zero();
        for j in 1..=k {
            if alg.is_zero(&us[j]) || alg.is_zero(&inv[k - j]) {
                continue;
            }
            acc = alg.sub(&acc, &alg.mul(&us[j], &inv[k - j]));
        }
        inv.push(acc);
    }
    inv
}

/// Newton's identities: from `e_1, e_2, ...` (slice index `i` holds
/// `e_{i+1}`, and `e_i = 0` past the end) to power sums `p_1..p_D`,
/// `p_m = Σ_{i=1}^{m-1} (-1)^{i-1} e_i p_{m-i} + (-1)^{m-1} m e_m`.
pub fn power_sums_from_elementary<A: GradedAlgebra>(alg: &A, e: &[A::Element], max_degree: usize) -> Vec<A::Element> {
    let zero = alg.zero();
    let e_at = |i: usize| -> &A::Element { e.get(i - 1).unwrap_or(&zero) };
    let mut p: Vec<A::Element> = Vec::with_capacity(max_degree);
    for m in 1..=max_degree {
        let mut acc = alg.scale(&rat(if m % 2 == 1 { m as i64 } else { -(m as i64) }), e_at(m));
        for i in 1..m {
            let ei = e_at(i);
            if alg.is_zero(ei) {
                continue;
            }
            let term = alg.mul(ei, &p[m - i - 1]);
            acc = if i % 2 == 1 {
                alg.add(&acc, &term)
            } else {
                alg.sub(&acc, &term)
            };
        }
        p.push(acc);
    }
    p
}

/// Inverse Newton: `m e_m = Σ_{i=1}^{m} (-1)^{i-1} e_{m-i} p_i`, `e_0 = 1`.
pub fn elementary_from_power_sums<A: GradedAlgebra>(alg: &A, p: &[A::Element]) -> Vec<A::Element> {
    let mut e: Vec<A::Element> = vec![alg.one()];
    for m in 1..=p.len() {
        let mut acc = alg.zero();
        for i in 1..=m {
            let pi = &p[i - 1];
            if alg.is_zero(pi) || alg.is_zero(&e[m - i]) {
                continue;
            }
            let term = alg.mul(&e[m - i], pi);
            acc = if i % 2 == 1 {
                alg.add(&acc, &term)
            } else {
                alg.sub(&acc, &term)
            };
        }
        e.push(alg.scale(&(BigRational::one() / rat(m as i64)), &acc));
    }
    e.remove(0);
    e
}

/// `exp(Σ a_m p_m)` for power sums `p_1..p_D` (slice index `m-1`).
pub fn todd_from_power_sums<A: GradedAlgebra>(alg: &A, p: &[A::Element]) -> A::Element {
    let a = todd_log_coeffs(p.len().max(1));
    let mut x = alg.zero();
    for (m, pm) in p.iter().enumerate() {
        let am = a.get(m + 1);
        if am.is_zero() || alg.is_zero(pm) {
            continue;
        }
        x = alg.add(&x, &alg.scale(am, pm));
    }
    exp_graded(alg, &x).expect("power sums have no degree-0 part")
}

/// `Σ p_m / m!` without the rank term.
pub fn character_from_power_sums<A: GradedAlgebra>(alg: &A, p: &[A::Element]) -> A::Element {
    p.iter().enumerate().fold(alg.zero(), |acc, (i, pm)| {
        let c = BigRational::new(BigInt::one(), factorial(i + 1));
        alg.add(&acc, &alg.scale(&c, pm))
    })
}

/// A free commutative graded polynomial algebra on weighted generators,
/// used to check universal identities apart from any Chow ring.
pub mod free {
    use super::*;

    /// Exponent vector over the generators.
    pub type Monomial = Vec<usize>;

    #[derive(Debug, Clone)]
    pub struct FreeAlgebra {
        weights: Vec<usize>,
        top: usize,
    }

    #[derive(Debug, Clone, PartialEq, Eq, Default)]
    pub struct Poly {
        pub terms: BTreeMap<Monomial, BigRational>,
    }

    impl FreeAlgebra {
        pub fn new(weights: Vec<usize>, top: usize) -> Self {
            assert!(weights.iter().all(|&w| w > 0), "generator weights must be positive");
            FreeAlgebra { weights, top }
        }

        /// One generator of weight 1: truncated power series in `x`.
        pub fn univariate(top: usize) -> Self {
            Self::new(vec![1], top)
        }

        pub fn generator_count(&self) -> usize {
            self.weights.len()
        }

        pub fn generator(&self, i: usize) -> Poly {
            let mut m = vec![0; self.weights.len()];
            m[i] = 1;
            self.monomial(m, BigRational::one())
        }

        pub fn monomial(&self, m: Monomial, q: BigRational) -> Poly {
            let mut terms = BTreeMap::new();
            if !q.is_zero() && self.weight(&m) <= self.top {
                terms.insert(m, q);
            }
            Poly { terms }
        }

        pub fn weight(&self, m: &[usize]) -> usize {
            m.iter().zip(&self.weights).map(|(e, w)| e * w).sum()
        }

        pub fn coefficient(&self, a: &Poly, m: &[usize]) -> BigRational {
            let mut key = m.to_vec();
            key.resize(self.weights.len(), 0);
            a.terms.get(&key).cloned().unwrap_or_else(BigRational::zero)
        }

        fn insert(terms: &mut BTreeMap<Monomial, BigRational>, m: Monomial, q: BigRational) {
            let slot = terms.entry(m).or_insert_with(BigRational::zero);
            *slot += q;
        }
    }

    impl GradedAlgebra for FreeAlgebra {
        type Element = Poly;

        fn top_degree(&self) -> usize {
            self.top
        }

        fn zero(&self) -> Poly {
            Poly::default()
        }

        fn one(&self) -> Poly {
            self.monomial(vec![0; self.weights.len()], BigRational::one())
        }

        fn add(&self, a: &Poly, b: &Poly) -> Poly {
            let mut terms = a.terms.clone();
            for (m, q) in &b.terms {
                Self::insert(&mut terms, m.clone(), q.clone());
            }
            terms.retain(|_, q| !q.is_zero());
            Poly { terms }
        }

        fn scale(&self, q: &BigRational, a: &Poly) -> Poly {
            if q.is_zero() {
                return Poly::default();
            }
            Poly {
                terms: a.terms.iter().map(|(m, c)| (m.clone(), c * q)).collect(),
            }
        }

        fn mul(&self, a: &Poly, b: &Poly) -> Poly {
            let mut terms = BTreeMap::new();
            for (ma, qa) in &a.terms {
                let wa = self.weight(ma);
                for (mb, qb) in &b.terms {
                    if wa + self.weight(mb) > self.top {
                        continue;
                    }
                    let m: Monomial = ma.iter().zip(mb).map(|(x, y)| x + y).collect();
                    Self::insert(&mut terms, m, qa * qb);
                }
            }
            terms.retain(|_, q| !q.is_zero());
            Poly { terms }
        }

        fn component(&self, a: &Poly, k: usize) -> Poly {
            Poly {
                terms: a
                    .terms
                    .iter()
                    .filter(|(m, _)| self.weight(m) == k)
                    .map(|(m, q)| (m.clone(), q.clone()))
                    .collect(),
            }
        }

        fn is_zero(&self, a: &Poly) -> bool {
            a.terms.is_empty()
        }
    }
}
