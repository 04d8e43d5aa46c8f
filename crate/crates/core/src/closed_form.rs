//! Direct evaluators of the closed-form cohomology tables.
//!
//! For a real system with profile `d1 >= ... >= dn` the reduced integer
//! cohomology of the complement of the resultant variety is a direct sum of
//! two blocks:
//!
//! * per-column block, one clause for each `p = 1..=d3`: if `Υ(p)` is even,
//!   `Z` in dimensions `N(p)-2p` and `N(p)-2p+1`; if odd, a single `Z/2` in
//!   dimension `N(p)-2p+1`;
//! * boundary block: `d1-d2` odd contributes `Z` in dimension `D-d1-d2-2`;
//!   `d1-d2` even contributes `Z^(d2-d3+1)` in dimension `D-d1-d2-1` and,
//!   when `d2 != d3`, `Z^(d2-d3)` in dimension `D-d1-d2-2`.
//!
//! Absent degrees extend as zero, which reproduces the one- and two-form
//! degenerations (two contractible components for a single even-degree form,
//! `d2+1` circle-like components for two forms of equal parity, a two-point
//! homotopy type for mixed parity). A single odd-degree form always has a
//! real root, so that complement is empty and flagged rather than tabulated.

use crate::algebra::{DegreeProfile, FinAbGroup, GradedGroup};
use crate::{Error, Result};

/// Reduced integer cohomology of the complement of the real resultant
/// variety, plus the component count it implies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealCohomology {
    pub reduced: GradedGroup,
    pub complement_empty: bool,
    /// `rank H~^0 + 1` when the complement is non-empty.
    pub component_count: Option<u32>,
}

impl RealCohomology {
    pub(crate) fn empty() -> Self {
        RealCohomology {
            reduced: GradedGroup::new(),
            complement_empty: true,
            component_count: None,
        }
    }
}

/// Evaluates the real closed-form table for `profile`.
pub fn real_cohomology(profile: &DegreeProfile) -> RealCohomology {
    if profile.n() == 1 && profile.degree(1) % 2 == 1 {
        return RealCohomology::empty();
    }

    let d1 = i64::from(profile.degree(1));
    let d2 = i64::from(profile.degree(2));
    let d3 = i64::from(profile.degree(3));
    let total = i64::from(profile.total_dim());

    let mut reduced = GradedGroup::new();

    for p in 1..=d3 {
        let base = i64::from(profile.young_area(p as u32)) - 2 * p;
        debug_assert!(base >= 1, "per-column dimensions are positive for p <= d3");
        if profile.parity_matches(p as u32).is_multiple_of(2) {
            reduced = reduced
                .put(base as u32, FinAbGroup::free(1))
                .put(base as u32 + 1, FinAbGroup::free(1));
        } else {
            reduced = reduced.put(base as u32 + 1, FinAbGroup::cyclic(2));
        }
    }

    if (d1 - d2) % 2 == 1 {
        let dim = total - d1 - d2 - 2;
        debug_assert!(dim >= 0);
        reduced = reduced.put(dim as u32, FinAbGroup::free(1));
    } else {
        let dim = total - d1 - d2 - 1;
        debug_assert!(dim >= 0);
        reduced = reduced.put(dim as u32, FinAbGroup::free((d2 - d3 + 1) as u32));
        if d2 != d3 {
            let dim = total - d1 - d2 - 2;
            debug_assert!(dim >= 0);
            reduced = reduced.put(dim as u32, FinAbGroup::free((d2 - d3) as u32));
        }
    }

    let h0 = reduced.get(0).cloned().unwrap_or_default();
    debug_assert!(h0.torsion().is_empty(), "H~^0 is torsion free");
    RealCohomology {
        component_count: Some(h0.free_rank() + 1),
        reduced,
        complement_empty: false,
    }
}

/// Number of connected components of the real complement, `None` when it is
/// empty.
pub fn predicted_b0_real(profile: &DegreeProfile) -> Option<u32> {
    real_cohomology(profile).component_count
}

/// Reduced rational cohomology of the complement of the complex resultant
/// variety: rank one in dimensions `2n-3`, `2n-1` and `4n-4`.
///
/// A single complex form of positive degree always has a root, so `n = 1` is
/// refused rather than extrapolated.
pub fn complex_cohomology(profile: &DegreeProfile) -> Result<GradedGroup> {
    let n = profile.n() as u32;
    if n == 1 {
        return Err(Error::ComplexComplementEmpty);
    }
    Ok(GradedGroup::new()
        .put(2 * n - 3, FinAbGroup::free(1))
        .put(2 * n - 1, FinAbGroup::free(1))
        .put(4 * n - 4, FinAbGroup::free(1)))
}

/// Parameters of the space of complex binary forms of degree `d` with a root
/// of multiplicity at least `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MDiscParams {
    pub d: u32,
    pub m: u32,
}

impl MDiscParams {
    pub fn new(d: i64, m: i64) -> Result<Self> {
        if m < 2 || d < m {
            return Err(Error::InvalidMDisc { d, m });
        }
        Ok(MDiscParams {
            d: d as u32,
            m: m as u32,
        })
    }
}

/// Reduced rational cohomology of the complement of the m-discriminant.
///
/// Rank one in dimensions `2m-3`, `2m-1`, and `4m-4` when `d >= 2m`, or
/// `2d-2` when `m <= d <= 2m-1`. At the regime boundary `d = 2m-1` both
/// formulas agree (`2d-2 = 4m-4`), and no two listed dimensions ever collide.
pub fn m_discriminant_cohomology(params: &MDiscParams) -> GradedGroup {
    let m = params.m;
    let d = params.d;
    let top = if d >= 2 * m { 4 * m - 4 } else { 2 * d - 2 };
    GradedGroup::new()
        .put(2 * m - 3, FinAbGroup::free(1))
        .put(2 * m - 1, FinAbGroup::free(1))
        .put(top, FinAbGroup::free(1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn profile(raw: &[i64]) -> DegreeProfile {
        DegreeProfile::new(raw.iter().copied()).unwrap()
    }

    fn z(rank: u32) -> FinAbGroup {
        FinAbGroup::free(rank)
    }

    fn z2() -> FinAbGroup {
        FinAbGroup::cyclic(2)
    }

    #[test]
    fn two_forms_even_difference() {
        let r = real_cohomology(&profile(&[7, 3]));
        assert!(!r.complement_empty);
        let expected = GradedGroup::new().put(0, z(3)).put(1, z(4));
        assert_eq!(r.reduced, expected);
        assert_eq!(r.component_count, Some(4));
    }

    #[test]
    fn two_forms_odd_difference() {
        let r = real_cohomology(&profile(&[6, 3]));
        let expected = GradedGroup::new().put(0, z(1));
        assert_eq!(r.reduced, expected);
        assert_eq!(r.component_count, Some(2));
    }

    #[test]
    fn single_even_form() {
        let r = real_cohomology(&profile(&[4]));
        assert_eq!(r.reduced, GradedGroup::new().put(0, z(1)));
        assert_eq!(r.component_count, Some(2));
    }

    #[test]
    fn single_odd_form_is_empty() {
        let r = real_cohomology(&profile(&[3]));
        assert!(r.complement_empty);
        assert!(r.reduced.is_empty());
        assert_eq!(r.component_count, None);
        assert_eq!(predicted_b0_real(&profile(&[3])), None);
    }

    #[test]
    fn three_quadrics() {
        let r = real_cohomology(&profile(&[2, 2, 2]));
        let expected = GradedGroup::new()
            .put(1, z(1))
            .put(2, z(1))
            .put(3, z2())
            .put(4, z(1));
        assert_eq!(r.reduced, expected);
        assert_eq!(r.component_count, Some(1));
    }

    #[test]
    fn predicted_b0_examples() {
        assert_eq!(predicted_b0_real(&profile(&[7, 3])), Some(4));
        assert_eq!(predicted_b0_real(&profile(&[6, 3])), Some(2));
        assert_eq!(predicted_b0_real(&profile(&[2, 2, 2])), Some(1));
    }

    #[test]
    fn two_form_table_matches_circle_components() {
        // equal parity: d2+1 components, each with the homology of a circle;
        // mixed parity: the homology of a two-point set
        for d1 in 1i64..=9 {
            for d2 in 1..=d1 {
                let r = real_cohomology(&profile(&[d1, d2]));
                if (d1 - d2) % 2 == 0 {
                    let expected = GradedGroup::new()
                        .put(0, z(d2 as u32))
                        .put(1, z(d2 as u32 + 1));
                    assert_eq!(r.reduced, expected, "profile ({d1},{d2})");
                    assert_eq!(r.component_count, Some(d2 as u32 + 1));
                } else {
                    assert_eq!(r.reduced, GradedGroup::new().put(0, z(1)));
                    assert_eq!(r.component_count, Some(2));
                }
            }
        }
    }

    #[test]
    fn single_form_table() {
        for d in 1i64..=10 {
            let r = real_cohomology(&profile(&[d]));
            if d % 2 == 0 {
                assert_eq!(r.reduced, GradedGroup::new().put(0, z(1)));
            } else {
                assert!(r.complement_empty);
            }
        }
    }

    #[test]
    fn codimension_bound_and_torsion_placement() {
        for a in 1i64..=5 {
            for b in 1..=a {
                for c in 1..=b {
                    let p = profile(&[a, b, c]);
                    let r = real_cohomology(&p);
                    for (dim, g) in r.reduced.iter() {
                        assert!(
                            g.free_rank() == 0 || dim >= 1,
                            "free part below codimension bound for {p}"
                        );
                        // n = 3: everything sits in dimension >= n - 2 = 1
                        assert!(dim >= 1, "entry below n-2 for {p}");
                        for &t in g.torsion() {
                            assert_eq!(t, 2, "only 2-torsion can appear, found Z/{t} in {p}");
                        }
                    }
                    // torsion exactly at N(p)-2p+1 for odd-parity columns
                    for q in 1..=c {
                        let dim = p.young_area(q as u32) - 2 * q as u32 + 1;
                        let has_torsion = r
                            .reduced
                            .get(dim)
                            .is_some_and(|g| !g.torsion().is_empty());
                        if p.parity_matches(q as u32) % 2 == 1 {
                            assert!(has_torsion, "missing Z/2 at dim {dim} for {p}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn complex_table() {
        let q = complex_cohomology(&profile(&[3, 3])).unwrap();
        assert_eq!(
            q,
            GradedGroup::new().put(1, z(1)).put(3, z(1)).put(4, z(1))
        );
        let q = complex_cohomology(&profile(&[2, 2, 2])).unwrap();
        assert_eq!(
            q,
            GradedGroup::new().put(3, z(1)).put(5, z(1)).put(8, z(1))
        );
        assert_eq!(
            complex_cohomology(&profile(&[5])).unwrap_err(),
            Error::ComplexComplementEmpty
        );
    }

    #[test]
    fn complex_rank_and_euler() {
        for n in 2..=5 {
            let p = profile(&vec![3i64; n]);
            let q = complex_cohomology(&p).unwrap();
            let total: u32 = q.iter().map(|(_, g)| g.free_rank()).sum();
            assert_eq!(total, 3);
            assert_eq!(q.euler_char(), -1);
        }
    }

    #[test]
    fn m_discriminant_examples() {
        let g = m_discriminant_cohomology(&MDiscParams::new(5, 2).unwrap());
        assert_eq!(
            g,
            GradedGroup::new().put(1, z(1)).put(3, z(1)).put(4, z(1))
        );
        let g = m_discriminant_cohomology(&MDiscParams::new(3, 2).unwrap());
        assert_eq!(
            g,
            GradedGroup::new().put(1, z(1)).put(3, z(1)).put(4, z(1))
        );
        let g = m_discriminant_cohomology(&MDiscParams::new(2, 2).unwrap());
        assert_eq!(
            g,
            GradedGroup::new().put(1, z(1)).put(2, z(1)).put(3, z(1))
        );
        assert_eq!(
            MDiscParams::new(1, 2).unwrap_err(),
            Error::InvalidMDisc { d: 1, m: 2 }
        );
        assert_eq!(
            MDiscParams::new(4, 1).unwrap_err(),
            Error::InvalidMDisc { d: 4, m: 1 }
        );
    }

    #[test]
    fn m_discriminant_regime_boundary() {
        for m in 2i64..=4 {
            let d = 2 * m - 1;
            let small = m_discriminant_cohomology(&MDiscParams::new(d, m).unwrap());
            // force the large-regime formula at the boundary and compare
            let large = GradedGroup::new()
                .put(2 * m as u32 - 3, z(1))
                .put(2 * m as u32 - 1, z(1))
                .put(4 * m as u32 - 4, z(1));
            assert_eq!(small, large, "regimes disagree at d = 2m-1 for m = {m}");
        }
    }
}
