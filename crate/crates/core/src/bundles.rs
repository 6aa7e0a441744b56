//! Characteristic classes of the tautological bundles on `G_d(n)`.
//!
//! `0 -> S -> O^n -> Q -> 0`, with `c_m(Q) = σ_m` and tangent bundle
//! `S^∨ ⊗ Q`. Chern roots are never materialized: characters come from
//! Newton's identities, Chern classes from inverse Newton, and the Todd
//! class from `exp(Σ a_m p_m)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::chow::{ChowAlgebra, ChowElement, ChowRing};
use crate::series::{self, factorial, GradedAlgebra};

/// Chern classes `c_1..c_r`; `c_i = 0` for `i > r` is implicit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BundleChern {
    pub rank: usize,
    /// `c[i - 1] = c_i`
    pub c: Vec<ChowElement>,
}

impl BundleChern {
    /// `c_i`, zero outside `1..=len`.
    pub fn class(&self, i: usize, ring: &ChowRing) -> ChowElement {
        match i {
            0 => ring.unit(),
            _ => self.c.get(i - 1).cloned().unwrap_or_else(|| ring.zero()),
        }
    }

    /// `1 + c_1 + c_2 + ...`
    pub fn total(&self, ring: &ChowRing) -> ChowElement {
        self.c.iter().fold(ring.unit(), |acc, x| acc.add(x).expect("one ring"))
    }
}

/// Rank and the graded pieces `ch_1..ch_D` of the Chern character.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BundleCharacter {
    pub rank: usize,
    /// `ch[m - 1] = ch_m`
    pub ch: Vec<ChowElement>,
}

impl BundleCharacter {
    pub fn component(&self, m: usize, ring: &ChowRing) -> ChowElement {
        match m {
            0 => ring.unit().scale(&BigRational::from_integer(self.rank.into())),
            _ => self.ch.get(m - 1).cloned().unwrap_or_else(|| ring.zero()),
        }
    }

    /// `rank + ch_1 + ch_2 + ...`
    pub fn total(&self, ring: &ChowRing) -> ChowElement {
        self.ch
            .iter()
            .fold(self.component(0, ring), |acc, x| acc.add(x).expect("one ring"))
    }

    /// Power sums of the Chern roots, `p_m = m!·ch_m`.
    pub fn power_sums(&self) -> Vec<ChowElement> {
        self.ch
            .iter()
            .enumerate()
            .map(|(i, c)| c.scale(&BigRational::from_integer(factorial(i + 1))))
            .collect()
    }

    pub fn dual(&self) -> BundleCharacter {
        BundleCharacter {
            rank: self.rank,
            ch: self
                .ch
                .iter()
                .enumerate()
                .map(|(i, c)| if (i + 1) % 2 == 0 { c.clone() } else { c.neg() })
                .collect(),
        }
    }
}

fn from_power_sums(rank: usize, p: Vec<ChowElement>) -> BundleCharacter {
    let ch = p
        .into_iter()
        .enumerate()
        .map(|(i, pm)| pm.scale(&BigRational::new(BigInt::one(), factorial(i + 1))))
        .collect();
    BundleCharacter { rank, ch }
}

/// `c(Q)`: the special Schubert classes.
pub fn chern_q(ring: &ChowRing) -> BundleChern {
    let cols = ring.shape().cols();
    BundleChern {
        rank: cols,
        c: (1..=cols).map(|m| ring.special(m)).collect(),
    }
}

pub fn ch_q(ring: &ChowRing) -> BundleCharacter {
    ch_q_upto(ring, ring.shape().dim())
}

/// `ch(Q)` through degree `top`.
pub fn ch_q_upto(ring: &ChowRing, top: usize) -> BundleCharacter {
    let alg = ChowAlgebra::truncated(ring, top);
    let c = chern_q(ring);
    let p = series::power_sums_from_elementary(&alg, &c.c, alg.top_degree());
    from_power_sums(c.rank, p)
}

/// `ch(S) = n - ch(Q)`.
pub fn ch_s(ring: &ChowRing) -> BundleCharacter {
    let q = ch_q(ring);
    BundleCharacter {
        rank: ring.shape().d(),
        ch: q.ch.iter().map(ChowElement::neg).collect(),
    }
}

pub fn ch_s_dual(ring: &ChowRing) -> BundleCharacter {
    ch_s(ring).dual()
}

/// Degrees `1..=t` of `(1 + σ_1 + ... + σ_{n-d})^{-1}`. Degrees `1..=d` are
/// `c_i(S)`; the rest are relations of the Chow ring and vanish.
pub fn chern_s_inverse_series(ring: &ChowRing) -> Vec<ChowElement> {
    let alg = ChowAlgebra::new(ring);
    let mut inv = series::inverse_components(&alg, &chern_q(ring).total(ring));
    inv.remove(0);
    inv
}

/// Chern classes from a character by inverse Newton. Classes above the
/// rank are dropped.
pub fn chern_from_character(ring: &ChowRing, ch: &BundleCharacter) -> BundleChern {
    let alg = ChowAlgebra::new(ring);
    let mut c = series::elementary_from_power_sums(&alg, &ch.power_sums());
    c.truncate(ch.rank);
    BundleChern { rank: ch.rank, c }
}

/// `c(S)` a second way: `(-1)^i` applied to the Newton-recovered classes of
/// `ch(S^∨)`.
pub fn chern_s_via_dual_character(ring: &ChowRing) -> BundleChern {
    let dual = chern_from_character(ring, &ch_s_dual(ring));
    BundleChern {
        rank: dual.rank,
        c: dual
            .c
            .iter()
            .enumerate()
            .map(|(i, c)| if (i + 1) % 2 == 0 { c.clone() } else { c.neg() })
            .collect(),
    }
}

pub fn ch_tangent(ring: &ChowRing) -> BundleCharacter {
    ch_tangent_upto(ring, ring.shape().dim())
}

/// `ch(S^∨ ⊗ Q) = ch(S^∨)·ch(Q)` through degree `top`.
pub fn ch_tangent_upto(ring: &ChowRing, top: usize) -> BundleCharacter {
    let alg = ChowAlgebra::truncated(ring, top);
    let shape = ring.shape();
    let q = ch_q_upto(ring, alg.top_degree());
    let s_dual = BundleCharacter {
        rank: shape.d(),
        ch: q.ch.iter().map(ChowElement::neg).collect(),
    }
    .dual();
    let product = alg.mul(&s_dual.total(ring), &q.total(ring));
    let rank = shape.dim();
    debug_assert_eq!(
        product.component(0),
        ring.unit().scale(&BigRational::from_integer(rank.into()))
    );
    BundleCharacter {
        rank,
        ch: (1..=alg.top_degree()).map(|m| product.component(m)).collect(),
    }
}

/// Chern classes of the tangent bundle.
pub fn chern_tangent(ring: &ChowRing) -> BundleChern {
    chern_from_character(ring, &ch_tangent(ring))
}

/// `td(S^∨ ⊗ Q)` in degrees `0..=t`.
pub fn todd_tangent(ring: &ChowRing) -> ChowElement {
    todd_tangent_upto(ring, ring.shape().dim())
}

/// `td` of the tangent bundle through degree `top`; higher components are
/// not computed.
pub fn todd_tangent_upto(ring: &ChowRing, top: usize) -> ChowElement {
    let alg = ChowAlgebra::truncated(ring, top);
    let ch = ch_tangent_upto(ring, alg.top_degree());
    series::todd_from_power_sums(&alg, &ch.power_sums())
}

/// `td` from Chern classes, for cross-checks against the character route.
pub fn todd_from_chern(ring: &ChowRing, c: &BundleChern) -> ChowElement {
    let alg = ChowAlgebra::new(ring);
    let p = series::power_sums_from_elementary(&alg, &c.c, alg.top_degree());
    series::todd_from_power_sums(&alg, &p)
}

pub fn is_zero_everywhere(classes: &[ChowElement]) -> bool {
    classes.iter().all(|c| c.is_zero())
}
