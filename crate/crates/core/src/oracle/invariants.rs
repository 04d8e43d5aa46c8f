//! Component-separating invariants, evaluated in exact arithmetic.
//!
//! For a pair of forms of equal parity off the resultant variety, the map
//! `v -> (f1(v), f2(v))` sends the unit circle into the punctured plane and
//! its topological degree separates components. The degree is computed by
//! signed axis-crossing counting along the rational parametrization
//! `(x, y) = (1 - t^2, 2t) / (1 + t^2)`: each crossing of a coordinate axis
//! is located by root isolation, its direction read off from exact signs,
//! and the lost point `(-1, 0)` is spliced back through the leading
//! coefficients. Four quarter-turns make one full turn.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::form::{in_resultant_variety, real_root_count, BinaryForm, PolySystem};
use super::poly::{self, IntPoly};
use crate::{Error, Result};

/// Crossing events contributed by the roots of `f` (the polynomial whose
/// sign flip is being tracked), with `other` supplying the off-axis sign.
/// `orientation` is `+1` when `f` tracks the first coordinate, `-1` for the
/// second.
fn crossing_sum(f: &IntPoly, other: &IntPoly, orientation: i64) -> i64 {
    let sqf = poly::squarefree_part(f);
    let mut total = 0;
    for interval in poly::isolate_roots(&sqf) {
        let before = i64::from(f.sign_at(&interval.0));
        let after = i64::from(f.sign_at(&interval.1));
        debug_assert!(before != 0 && after != 0);
        if before == after {
            // even multiplicity: the path touches the axis without crossing
            continue;
        }
        let side = i64::from(poly::sign_at_root(&sqf, &interval, other));
        debug_assert!(side != 0, "forms share no circle zero off the variety");
        total += orientation * side * (before - after) / 2;
    }
    total
}

/// Topological degree of `v -> (f1(v), f2(v))` on the unit circle.
///
/// Requires both forms non-zero, degrees of equal parity, and no common real
/// root (the map must avoid the origin).
pub fn winding_index(f1: &BinaryForm, f2: &BinaryForm) -> Result<i64> {
    if f1.is_zero() || f2.is_zero() {
        return Err(Error::ZeroForm);
    }
    if f1.degree() % 2 != f2.degree() % 2 {
        return Err(Error::ParityMismatch(f1.degree(), f2.degree()));
    }
    let pair = if f1.degree() >= f2.degree() {
        PolySystem::new(vec![f1.clone(), f2.clone()])
    } else {
        PolySystem::new(vec![f2.clone(), f1.clone()])
    };
    if in_resultant_variety(&pair) {
        return Err(Error::OnResultantVariety);
    }

    let big_f1 = f1.circle_pullback();
    let big_f2 = f2.circle_pullback();

    let mut total = crossing_sum(&big_f1, &big_f2, 1) + crossing_sum(&big_f2, &big_f1, -1);

    // splice the parametrization back together across t = +-infinity, where
    // the circle passes through (-1, 0)
    let s1 = (big_f1.sign_at_pos_inf(), big_f1.sign_at_neg_inf());
    let s2 = (big_f2.sign_at_pos_inf(), big_f2.sign_at_neg_inf());
    let flip1 = s1.0 != s1.1;
    let flip2 = s2.0 != s2.1;
    debug_assert!(
        !(flip1 && flip2),
        "both coordinates flipping at (-1, 0) means a common root there"
    );
    if flip1 {
        total += i64::from(s2.0) * i64::from(s1.0 - s1.1) / 2;
    } else if flip2 {
        total += -i64::from(s1.0) * i64::from(s2.0 - s2.1) / 2;
    }

    debug_assert_eq!(total.rem_euclid(4), 0, "crossings come in whole turns");
    Ok(total / 4)
}

/// `(Re, Im)` of `(x + iy)^a (x - iy)^b` as a pair of integer forms of
/// degree `a + b`.
fn complex_power(a: u32, b: u32) -> (BinaryForm, BinaryForm) {
    let x = BinaryForm::from_i64(&[1, 0]);
    let y = BinaryForm::from_i64(&[0, 1]);
    let mut re = BinaryForm::one();
    let mut im = BinaryForm::from_i64(&[0]);
    for _ in 0..a {
        let new_re = re.mul(&x).sub(&im.mul(&y)).expect("degrees match");
        let new_im = re.mul(&y).add(&im.mul(&x)).expect("degrees match");
        re = new_re;
        im = new_im;
    }
    for _ in 0..b {
        let new_re = re.mul(&x).add(&im.mul(&y)).expect("degrees match");
        let new_im = im.mul(&x).sub(&re.mul(&y)).expect("degrees match");
        re = new_re;
        im = new_im;
    }
    (re, im)
}

/// `(x^2 + y^2)^e`.
pub(super) fn radius_power(e: u32) -> BinaryForm {
    let r2 = BinaryForm::from_i64(&[1, 0, 1]);
    let mut out = BinaryForm::one();
    for _ in 0..e {
        out = out.mul(&r2);
    }
    out
}

/// System of degrees `(d1, d2)` with winding index exactly `k`, off the
/// resultant variety by construction.
///
/// For `k != 0` the pair is `(Re(h) (x^2+y^2)^((d1-d2)/2), Im(h))` with
/// `h = (x + iy)^a (x - iy)^b`, `a - b = k`, `a + b = d2`; on the circle
/// this is the map `theta -> e^(ik theta)` up to a positive stretch of the
/// first coordinate. For `k = 0` that construction degenerates (`Im(h)` is
/// identically zero), so a positive-definite first form is paired with
/// `x^d2` instead: the image never leaves the right half-plane.
pub fn witness_system(d1: u32, d2: u32, k: i64) -> Result<PolySystem> {
    let illegal = Error::IllegalIndex { d1, d2, k };
    if d1 < 1 || d2 < 1 || d1 < d2 || !(d1 - d2).is_multiple_of(2) {
        return Err(illegal);
    }
    if k.unsigned_abs() > u64::from(d2) || (k - i64::from(d2)).rem_euclid(2) != 0 {
        return Err(illegal);
    }
    if k == 0 {
        let f1 = radius_power(d1 / 2);
        let mut coeffs = vec![BigInt::from(1)];
        coeffs.resize(d2 as usize + 1, BigInt::from(0));
        return Ok(PolySystem::new(vec![f1, BinaryForm::new(coeffs)]));
    }
    let a = ((i64::from(d2) + k) / 2) as u32;
    let b = ((i64::from(d2) - k) / 2) as u32;
    let (re, im) = complex_power(a, b);
    let f1 = re.mul(&radius_power((d1 - d2) / 2));
    Ok(PolySystem::new(vec![f1, im]))
}

/// `x (x^2 - y^2)(x^2 - 4y^2) ...`: an odd-degree form with all roots real,
/// simple, and away from the positive-definite radius forms.
fn split_odd_form(degree: u32) -> BinaryForm {
    debug_assert!(degree % 2 == 1);
    let mut out = BinaryForm::from_i64(&[1, 0]);
    for j in 1..=i64::from((degree - 1) / 2) {
        out = out.mul(&BinaryForm::from_i64(&[1, 0, -j * j]));
    }
    out
}

/// Parity of the number of real zeros of the odd-degree form lying where
/// the even-degree form is positive. Defined for two forms of different
/// parities off the resultant variety; the odd form must have no repeated
/// real zero.
pub fn parity_invariant(sys: &PolySystem) -> Result<i64> {
    debug_assert_eq!(sys.n(), 2);
    let (odd, even) = if sys.form(0).degree() % 2 == 1 {
        (sys.form(0), sys.form(1))
    } else {
        (sys.form(1), sys.form(0))
    };
    debug_assert!(odd.degree() % 2 == 1 && even.degree() % 2 == 0);
    real_root_count(odd, Some(even)).map(|c| (c % 2) as i64)
}

/// Global sign class of a rootless even-degree form: `1` for positive,
/// `0` for negative.
pub fn sign_invariant(form: &BinaryForm) -> Result<i64> {
    let v = form.coeff(0); // value at the point (1, 0)
    if v.is_zero() {
        return Err(Error::OnResultantVariety);
    }
    Ok(i64::from(v.is_positive()))
}

/// Hand-built parity-class witnesses: a split odd form against a definite
/// even form whose sign picks the class.
pub fn parity_witness(d1: u32, d2: u32, class: i64) -> PolySystem {
    debug_assert!(d1 > d2 && (d1 - d2) % 2 == 1 && (class == 0 || class == 1));
    let positive = class == 1;
    if d1 % 2 == 1 {
        let even = radius_power(d2 / 2);
        let even = if positive { even } else { even.neg() };
        PolySystem::new(vec![split_odd_form(d1), even])
    } else {
        let even = radius_power(d1 / 2);
        let even = if positive { even } else { even.neg() };
        PolySystem::new(vec![even, split_odd_form(d2)])
    }
}

/// Sign-class witnesses for a single even-degree form.
pub fn sign_witness(d: u32, class: i64) -> PolySystem {
    debug_assert!(d.is_multiple_of(2) && (class == 0 || class == 1));
    let f = radius_power(d / 2);
    PolySystem::new(vec![if class == 1 { f } else { f.neg() }])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(coeffs: &[i64]) -> BinaryForm {
        BinaryForm::from_i64(coeffs)
    }

    #[test]
    fn winding_of_complex_powers() {
        // (x + iy)^3: Re = x^3 - 3xy^2, Im = 3x^2 y - y^3
        assert_eq!(
            winding_index(&f(&[1, 0, -3, 0]), &f(&[0, 3, 0, -1])).unwrap(),
            3
        );
        // (x + iy)^2 (x - iy): degree stays 3, index drops to 1
        assert_eq!(
            winding_index(&f(&[1, 0, 1, 0]), &f(&[0, 1, 0, 1])).unwrap(),
            1
        );
        // (x + iy)^2: Re = x^2 - y^2, Im = 2xy
        assert_eq!(winding_index(&f(&[1, 0, -1]), &f(&[0, 2, 0])).unwrap(), 2);
        // conjugate squares wind backwards
        assert_eq!(winding_index(&f(&[1, 0, -1]), &f(&[0, -2, 0])).unwrap(), -2);
    }

    #[test]
    fn winding_rejects_bad_input() {
        assert_eq!(
            winding_index(&f(&[1, 0, -1]), &f(&[1, -1])).unwrap_err(),
            Error::ParityMismatch(2, 1)
        );
        // x^2 - y^2 and x(x - y) share the root line x = y
        assert_eq!(
            winding_index(&f(&[1, 0, -1]), &f(&[1, -1, 0])).unwrap_err(),
            Error::OnResultantVariety
        );
        assert_eq!(
            winding_index(&f(&[0, 0]), &f(&[0, 1])).unwrap_err(),
            Error::ZeroForm
        );
    }

    #[test]
    fn winding_is_scale_invariant() {
        let a = f(&[1, 0, -3, 0]);
        let b = f(&[0, 3, 0, -1]);
        let k = winding_index(&a, &b).unwrap();
        assert_eq!(winding_index(&a.scale(&BigInt::from(7)), &b).unwrap(), k);
        let r2 = radius_power(1);
        assert_eq!(winding_index(&a.mul(&r2), &b.mul(&r2)).unwrap(), k);
    }

    #[test]
    fn winding_invariance_on_random_systems() {
        use rand::{RngExt, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let mut checked = 0;
        while checked < 40 {
            let d2 = rng.random_range(1..=3usize);
            let d1 = d2 + 2 * rng.random_range(0..=1usize);
            let draw = |rng: &mut rand_chacha::ChaCha8Rng, d: usize| {
                BinaryForm::new((0..=d).map(|_| BigInt::from(rng.random_range(-6i64..=6))).collect())
            };
            let f1 = draw(&mut rng, d1);
            let f2 = draw(&mut rng, d2);
            let Ok(k) = winding_index(&f1, &f2) else {
                continue;
            };
            assert!(k.unsigned_abs() as usize <= d2);
            assert_eq!((k - d2 as i64).rem_euclid(2), 0);
            // positive scaling of one form
            assert_eq!(winding_index(&f1.scale(&BigInt::from(3)), &f2).unwrap(), k);
            // a common radius factor
            let r2 = radius_power(1);
            assert_eq!(winding_index(&f1.mul(&r2), &f2.mul(&r2)).unwrap(), k);
            checked += 1;
        }
    }

    #[test]
    fn witness_examples() {
        let w = witness_system(3, 3, 3).unwrap();
        assert_eq!(w.form(0), &f(&[1, 0, -3, 0]));
        assert_eq!(w.form(1), &f(&[0, 3, 0, -1]));

        let w = witness_system(5, 3, -3).unwrap();
        let expected_f1 = f(&[1, 0, -3, 0]).mul(&radius_power(1));
        assert_eq!(w.form(0), &expected_f1);
        assert_eq!(w.form(1), &f(&[0, -3, 0, 1]));

        assert_eq!(
            witness_system(3, 3, 5).unwrap_err(),
            Error::IllegalIndex { d1: 3, d2: 3, k: 5 }
        );
        assert_eq!(
            witness_system(3, 3, 2).unwrap_err(),
            Error::IllegalIndex { d1: 3, d2: 3, k: 2 }
        );
        assert_eq!(
            witness_system(4, 3, 1).unwrap_err(),
            Error::IllegalIndex { d1: 4, d2: 3, k: 1 }
        );
    }

    #[test]
    fn witness_round_trip_small() {
        for (d1, d2) in [(2u32, 2u32), (3, 3), (4, 2), (5, 3)] {
            let mut k = -i64::from(d2);
            while k <= i64::from(d2) {
                let w = witness_system(d1, d2, k).unwrap();
                assert!(!in_resultant_variety(&w), "witness ({d1},{d2},{k}) on variety");
                assert_eq!(
                    winding_index(w.form(0), w.form(1)).unwrap(),
                    k,
                    "winding mismatch for ({d1},{d2},{k})"
                );
                k += 2;
            }
        }
    }

    #[test]
    fn parity_invariant_examples() {
        // (x^2 + y^2, x): the lone zero of x lies where x^2 + y^2 > 0
        let sys = PolySystem::new(vec![f(&[1, 0, 1]), f(&[1, 0])]);
        assert_eq!(parity_invariant(&sys).unwrap(), 1);
        let sys = PolySystem::new(vec![f(&[-1, 0, -1]), f(&[1, 0])]);
        assert_eq!(parity_invariant(&sys).unwrap(), 0);
    }

    #[test]
    fn parity_witnesses_verify() {
        for (d1, d2) in [(2u32, 1u32), (3, 2), (4, 3), (5, 2), (7, 4)] {
            for class in [0i64, 1] {
                let w = parity_witness(d1, d2, class);
                assert!(!in_resultant_variety(&w));
                assert_eq!(parity_invariant(&w).unwrap(), class, "({d1},{d2}) class {class}");
            }
        }
    }

    #[test]
    fn sign_invariant_and_witnesses() {
        assert_eq!(sign_invariant(&radius_power(2)).unwrap(), 1);
        assert_eq!(sign_invariant(&radius_power(2).neg()).unwrap(), 0);
        for class in [0i64, 1] {
            let w = sign_witness(4, class);
            assert!(!in_resultant_variety(&w));
            assert_eq!(sign_invariant(w.form(0)).unwrap(), class);
        }
    }
}
