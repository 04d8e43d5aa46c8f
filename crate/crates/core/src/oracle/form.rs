//! Binary forms with exact integer coefficients, resultants, and membership
//! in the real resultant variety.
//!
//! A form of degree `d` is stored as `a_0 x^d + a_1 x^(d-1) y + ... + a_d y^d`.
//! Dehomogenizing at `x = 1` turns it into the univariate `a_0 + a_1 t + ...`;
//! the line `x = 0` corresponds to the lost point at infinity and is always
//! handled separately through the `y^d` coefficient.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::{self, IntPoly};
use crate::{Error, Result};

/// Homogeneous polynomial in `(x, y)` with integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryForm {
    coeffs: Vec<BigInt>,
}

impl BinaryForm {
    /// `coeffs[j]` multiplies `x^(d-j) y^j`; the length fixes the formal
    /// degree, so zero padding matters.
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a form needs at least one coefficient");
        BinaryForm { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        BinaryForm::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The constant 1 as a degree-zero form.
    pub fn one() -> Self {
        BinaryForm::new(vec![BigInt::one()])
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> &BigInt {
        &self.coeffs[j]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, x: &BigRational, y: &BigRational) -> BigRational {
        let d = self.degree();
        let mut acc = BigRational::zero();
        for (j, c) in self.coeffs.iter().enumerate() {
            let term = BigRational::from_integer(c.clone())
                * x.pow((d - j) as i32)
                * y.pow(j as i32);
            acc += term;
        }
        acc
    }

    pub fn eval_int(&self, x: &BigInt, y: &BigInt) -> BigInt {
        let d = self.degree();
        let mut acc = BigInt::zero();
        for (j, c) in self.coeffs.iter().enumerate() {
            acc += c * x.pow((d - j) as u32) * y.pow(j as u32);
        }
        acc
    }

    pub fn neg(&self) -> BinaryForm {
        BinaryForm::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn scale(&self, c: &BigInt) -> BinaryForm {
        BinaryForm::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Product of homogeneous forms; degrees add.
    pub fn mul(&self, other: &BinaryForm) -> BinaryForm {
        let mut out = vec![BigInt::zero(); self.degree() + other.degree() + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        BinaryForm::new(out)
    }

    /// Sum of forms of the same degree.
    pub fn add(&self, other: &BinaryForm) -> Result<BinaryForm> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(BinaryForm::new(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        ))
    }

    pub fn sub(&self, other: &BinaryForm) -> Result<BinaryForm> {
        self.add(&other.neg())
    }

    /// `f(1, t)` as a univariate polynomial.
    pub fn dehomogenized(&self) -> IntPoly {
        IntPoly::new(self.coeffs.clone())
    }

    /// Value on the line `x = 0`, i.e. the `y^d` coefficient.
    pub fn at_infinity(&self) -> &BigInt {
        self.coeffs.last().unwrap()
    }

    /// `f(1 - t^2, 2t)`: the pullback along the rational parametrization of
    /// the unit circle. Signs along the circle are preserved because the
    /// parametrization differs from a genuine circle point by the positive
    /// factor `(1 + t^2)^d`.
    pub fn circle_pullback(&self) -> IntPoly {
        let d = self.degree();
        // powers of (1 - t^2)
        let base = IntPoly::from_i64(&[1, 0, -1]);
        let mut xpow = Vec::with_capacity(d + 1);
        xpow.push(IntPoly::from_i64(&[1]));
        for k in 1..=d {
            xpow.push(xpow[k - 1].mul(&base));
        }
        let mut acc = IntPoly::zero();
        let two = BigInt::from(2);
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            // c * (1 - t^2)^(d-j) * (2t)^j
            let mut term = vec![BigInt::zero(); j];
            term.push(c * two.pow(j as u32));
            acc = acc.add(&xpow[d - j].mul(&IntPoly::new(term)));
        }
        acc
    }
}

impl std::fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for (j, c) in self.coeffs.iter().enumerate() {
            if j > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// Tuple of forms, stored in profile order (degrees non-increasing).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolySystem {
    forms: Vec<BinaryForm>,
}

impl PolySystem {
    pub fn new(forms: Vec<BinaryForm>) -> Self {
        assert!(!forms.is_empty(), "a system needs at least one form");
        debug_assert!(
            forms.windows(2).all(|w| w[0].degree() >= w[1].degree()),
            "forms must follow the profile order"
        );
        PolySystem { forms }
    }

    pub fn forms(&self) -> &[BinaryForm] {
        &self.forms
    }

    pub fn form(&self, i: usize) -> &BinaryForm {
        &self.forms[i]
    }

    pub fn n(&self) -> usize {
        self.forms.len()
    }
}

/// Determinant by fraction-free Gaussian elimination; all divisions are
/// exact.
fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Sylvester resultant of two non-zero forms, taken on their coefficient
/// sequences (rows of `f` first, then rows of `g`). Zero exactly when the
/// forms share a projective root over the complex numbers, the root `(0, 1)`
/// included.
pub fn sylvester_resultant(f: &BinaryForm, g: &BinaryForm) -> Result<BigInt> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroForm);
    }
    let m = f.degree();
    let n = g.degree();
    let size = m + n;
    if size == 0 {
        return Ok(BigInt::one());
    }
    let mut matrix = vec![vec![BigInt::zero(); size]; size];
    for row in 0..n {
        for (j, c) in f.coeffs().iter().enumerate() {
            matrix[row][row + j] = c.clone();
        }
    }
    for row in 0..m {
        for (j, c) in g.coeffs().iter().enumerate() {
            matrix[n + row][row + j] = c.clone();
        }
    }
    Ok(bareiss_det(matrix))
}

/// Whether the system has a common real projective root.
///
/// The all-zero system vanishes everywhere and counts as inside. Identically
/// zero forms impose no condition and are skipped; the rest are tested on
/// the line `x = 0` through their `y^d` coefficients, and on the affine
/// chart through the gcd of their dehomogenizations, which must have a real
/// root for the system to lie inside.
pub fn in_resultant_variety(sys: &PolySystem) -> bool {
    let nonzero: Vec<&BinaryForm> = sys.forms().iter().filter(|f| !f.is_zero()).collect();
    if nonzero.is_empty() {
        return true;
    }
    if nonzero.iter().all(|f| f.at_infinity().is_zero()) {
        return true;
    }
    let mut g = nonzero[0].dehomogenized();
    for f in &nonzero[1..] {
        g = poly::gcd(&g, &f.dehomogenized());
        if g.degree() == Some(0) {
            return false;
        }
    }
    poly::count_real_roots(&g) > 0
}

/// Number of distinct real projective roots of `form`, the line `x = 0`
/// included, optionally restricted to roots where `predicate > 0`.
///
/// The form must have no repeated real zero (simple complex multiplicities
/// are harmless), and the predicate must not vanish at any counted root.
pub fn real_root_count(form: &BinaryForm, predicate: Option<&BinaryForm>) -> Result<usize> {
    if form.is_zero() {
        return Err(Error::ZeroForm);
    }
    let aff = form.dehomogenized();
    // multiplicity of the root at infinity = degree drop of f(1, t)
    let inf_mult = form.degree() - aff.degree().expect("non-zero form");
    if inf_mult >= 2 {
        return Err(Error::NonSquarefree);
    }
    let repeated = poly::gcd(&aff, &aff.derivative());
    if poly::count_real_roots(&repeated) > 0 {
        return Err(Error::NonSquarefree);
    }
    let sqf = poly::squarefree_part(&aff);
    let intervals = poly::isolate_roots(&sqf);

    let Some(pred) = predicate else {
        return Ok(intervals.len() + usize::from(inf_mult == 1));
    };

    let pred_aff = pred.dehomogenized();
    let common = poly::gcd(&sqf, &pred_aff);
    if poly::count_real_roots(&common) > 0 {
        return Err(Error::PredicateVanishesAtRoot);
    }
    let mut count = 0;
    if inf_mult == 1 {
        let v = pred.at_infinity();
        if v.is_zero() {
            return Err(Error::PredicateVanishesAtRoot);
        }
        if v.is_positive() {
            count += 1;
        }
    }
    for interval in &intervals {
        if poly::sign_at_root(&sqf, interval, &pred_aff) > 0 {
            count += 1;
        }
    }
    Ok(count)
}
