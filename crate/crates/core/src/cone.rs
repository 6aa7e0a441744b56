//! The affine cone over the Plücker embedding of `G_d(n)`.
//!
//! Its rational Chow groups are `A_i ≅ CH^{t+1-i} / h·CH^{t-i}` and the
//! Riemann-Roch class of the ring is the image of `td(T_G)` there. The ring
//! is Roberts iff every component below the top vanishes modulo `h`.
//!
//! Records are keyed on the cohomological degree `j` of the Todd component;
//! the matching homological index is `t + 1 - j`.

use rayon::prelude::*;

use crate::bundles::todd_tangent_upto;
use crate::chow::{ChowElement, ChowRing};
use crate::partition::GrassmannShape;

/// `dim_Q A_i` of the cone for `i = 0..=t+1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeChowDims {
    pub shape: GrassmannShape,
    pub dims: Vec<usize>,
}

pub fn cone_chow_dims(shape: GrassmannShape) -> ConeChowDims {
    cone_chow_dims_in(&ChowRing::new(shape))
}

pub fn cone_chow_dims_in(ring: &ChowRing) -> ConeChowDims {
    let t = ring.shape().dim();
    let h = ring.h_matrices();
    let mut dims = vec![0; t + 2];
    for (i, dim) in dims.iter_mut().enumerate().take(t + 1).skip(1) {
        *dim = h.cokernel_dim(t + 1 - i);
    }
    dims[t + 1] = 1;
    ConeChowDims {
        shape: ring.shape(),
        dims,
    }
}

/// One graded piece of the Riemann-Roch class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TauRecord {
    /// Cohomological degree `j` of the Todd component.
    pub degree: usize,
    /// `t + 1 - j`, the index of `τ` in `A_*` of the cone.
    pub homological_index: usize,
    /// `td_j(T_G)` before reduction.
    pub todd_component: ChowElement,
    /// Canonical representative modulo `h·CH^{j-1}`.
    pub representative: ChowElement,
    pub is_zero: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportMode {
    /// Every degree `1..=t` is computed.
    Full,
    /// Even degrees first, then odd; stops at the first nonzero component.
    VerdictOnly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RobertsReport {
    pub shape: GrassmannShape,
    /// `t + 1`
    pub cone_dimension: usize,
    /// Sorted by degree. In verdict-only mode only the scanned degrees
    /// appear.
    pub records: Vec<TauRecord>,
    pub verdict: bool,
    /// Smallest degree with a nonzero reduced component, if any.
    pub witness: Option<usize>,
    pub mode: ReportMode,
}

impl RobertsReport {
    pub fn record(&self, degree: usize) -> Option<&TauRecord> {
        self.records.iter().find(|r| r.degree == degree)
    }

    pub fn summary(&self) -> VerdictSummary {
        VerdictSummary {
            d: self.shape.d(),
            n: self.shape.n(),
            verdict: self.verdict,
            witness: self.witness,
        }
    }
}

fn record(ring: &ChowRing, todd: &ChowElement, degree: usize) -> TauRecord {
    let t = ring.shape().dim();
    let component = todd.component(degree);
    let reduction = ring
        .reduce_mod_h(&component)
        .expect("Todd components are homogeneous of degree 1..=t");
    TauRecord {
        degree,
        homological_index: t + 1 - degree,
        todd_component: component,
        representative: reduction.representative,
        is_zero: reduction.is_zero,
    }
}

/// Reduced Todd components for `j = 1..=t`.
pub fn tau_components(shape: GrassmannShape) -> Vec<TauRecord> {
    roberts_report(&ChowRing::new(shape), ReportMode::Full).records
}

pub fn roberts_verdict(shape: GrassmannShape) -> RobertsReport {
    roberts_report(&ChowRing::new(shape), ReportMode::Full)
}

pub fn roberts_report(ring: &ChowRing, mode: ReportMode) -> RobertsReport {
    let shape = ring.shape();
    let t = shape.dim();
    let mut records = Vec::new();
    match mode {
        ReportMode::Full => {
            let todd = todd_tangent_upto(ring, t);
            records.extend((1..=t).map(|j| record(ring, &todd, j)));
        }
        ReportMode::VerdictOnly => {
            let order = (2..=t).step_by(2).chain((1..=t).step_by(2));
            let mut computed_to = 0;
            let mut todd = ring.unit();
            for j in order {
                if j > computed_to {
                    // low degrees decide most shapes; only go to t if needed
                    computed_to = if j <= 2 {
                        2
                    } else if j <= 4 {
                        4
                    } else {
                        t
                    }
                    .min(t);
                    todd = todd_tangent_upto(ring, computed_to);
                }
                let r = record(ring, &todd, j);
                let stop = !r.is_zero;
                records.push(r);
                if stop {
                    break;
                }
            }
            records.sort_by_key(|r| r.degree);
        }
    }
    let witness = records.iter().find(|r| !r.is_zero).map(|r| r.degree);
    RobertsReport {
        shape,
        cone_dimension: t + 1,
        verdict: witness.is_none(),
        witness,
        records,
        mode,
    }
}

/// Every odd-degree reduced component vanishes, as it must for a
/// Gorenstein cone.
pub fn gorenstein_parity_check(shape: GrassmannShape) -> bool {
    parity_holds(&roberts_verdict(shape))
}

pub fn parity_holds(report: &RobertsReport) -> bool {
    report.records.iter().filter(|r| r.degree % 2 == 1).all(|r| r.is_zero)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerdictSummary {
    pub d: usize,
    pub n: usize,
    pub verdict: bool,
    pub witness: Option<usize>,
}

/// All shapes `1 <= d <= n-1`, `2 <= n <= max_n`, ordered by `n` then `d`.
pub fn table_shapes(max_n: usize) -> Vec<GrassmannShape> {
    (2..=max_n)
        .flat_map(|n| (1..n).map(move |d| GrassmannShape::new(d, n).expect("1 <= d < n")))
        .collect()
}

/// Verdicts for every shape up to `max_n`, computed in parallel; the order
/// is that of [`table_shapes`].
pub fn verdict_table(max_n: usize) -> Vec<VerdictSummary> {
    table_shapes(max_n)
        .into_par_iter()
        .map(|shape| roberts_report(&ChowRing::new(shape), ReportMode::VerdictOnly).summary())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn shape(d: usize, n: usize) -> GrassmannShape {
        GrassmannShape::new(d, n).unwrap()
    }

    #[test]
    fn cone_dims_examples() {
        assert_eq!(cone_chow_dims(shape(1, 2)).dims, vec![0, 0, 1]);
        assert_eq!(cone_chow_dims(shape(2, 4)).dims, vec![0, 0, 0, 1, 0, 1]);
        let c = cone_chow_dims(shape(3, 7));
        assert_eq!(c.dims[12], 0);
        assert_eq!(c.dims[13], 1);
    }

    #[test]
    fn tau_examples() {
        let recs = tau_components(shape(2, 5));
        let r2 = &recs[1];
        assert_eq!((r2.degree, r2.homological_index), (2, 5));
        assert!(!r2.is_zero);
        let ring = ChowRing::new(shape(2, 5));
        assert_eq!(
            r2.representative,
            ring.special(2).scale(&BigRational::new((-1).into(), 12.into()))
        );

        assert!(tau_components(shape(3, 6))[1].is_zero);
    }

    #[test]
    fn verdict_examples() {
        assert!(roberts_verdict(shape(1, 5)).verdict);
        let r = roberts_verdict(shape(2, 5));
        assert!(!r.verdict);
        assert_eq!(r.witness, Some(2));
        assert!(roberts_verdict(shape(3, 6)).verdict);
        assert!(roberts_verdict(shape(2, 4)).verdict);
    }

    #[test]
    fn verdict_only_agrees_with_full_report() {
        for s in table_shapes(7) {
            let ring = ChowRing::new(s);
            let fast = roberts_report(&ring, ReportMode::VerdictOnly);
            let full = roberts_report(&ring, ReportMode::Full);
            assert_eq!(fast.verdict, full.verdict, "{s}");
            assert_eq!(fast.witness, full.witness, "{s}");
        }
    }

    #[test]
    fn parity_examples() {
        assert!(gorenstein_parity_check(shape(2, 5)));
        assert!(gorenstein_parity_check(shape(3, 7)));
        for n in 2..7 {
            assert!(gorenstein_parity_check(shape(1, n)));
        }
    }

    #[test]
    fn small_table() {
        let rows = verdict_table(4);
        let roberts: Vec<(usize, usize)> = rows.iter().filter(|r| r.verdict).map(|r| (r.d, r.n)).collect();
        assert_eq!(roberts, vec![(1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4)]);
    }
}
