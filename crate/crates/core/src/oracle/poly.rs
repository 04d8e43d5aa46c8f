//! Exact univariate integer polynomials: gcd, squarefree parts, Sturm
//! chains, root isolation, and sign evaluation at isolated roots.
//!
//! Every operation is sign-exact. Chains are normalized by positive content
//! only, and pseudo-remainders are scaled by positive powers of the absolute
//! leading coefficient, so the sign pattern of a Sturm chain is never
//! disturbed. No floating point appears anywhere.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Polynomial over the integers, little-endian: `coeffs[k]` multiplies `t^k`.
/// No trailing zero coefficients are stored; the zero polynomial is empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn eval_q(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Sign of the value at a rational point, computed entirely in integers:
    /// for `x = n/d` with `d > 0`, `sign p(x) = sign sum a_k n^k d^(deg-k)`.
    pub fn sign_at(&self, x: &BigRational) -> i32 {
        if self.is_zero() {
            return 0;
        }
        let n = x.numer();
        let d = x.denom();
        debug_assert!(d.is_positive());
        let deg = self.coeffs.len() - 1;
        let mut acc = self.coeffs[deg].clone();
        let mut dpow = BigInt::one();
        for k in (0..deg).rev() {
            dpow *= d;
            acc = acc * n + &self.coeffs[k] * &dpow;
        }
        sign_i32(&acc)
    }

    /// Signs of the value in the limits `t -> +inf` / `t -> -inf`.
    pub fn sign_at_pos_inf(&self) -> i32 {
        self.leading().map_or(0, sign_i32)
    }

    pub fn sign_at_neg_inf(&self) -> i32 {
        match self.degree() {
            None => 0,
            Some(d) => {
                let s = sign_i32(self.leading().unwrap());
                if d % 2 == 0 {
                    s
                } else {
                    -s
                }
            }
        }
    }

    pub fn derivative(&self) -> IntPoly {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        IntPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(k, c)| c * BigInt::from(k + 1))
                .collect(),
        )
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub fn mul_scalar(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigInt::zero(); n];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[k] += c;
        }
        for (k, c) in other.coeffs.iter().enumerate() {
            out[k] += c;
        }
        IntPoly::new(out)
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        self.add(&other.neg())
    }

    /// Positive gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = num_integer::gcd(g, c.abs());
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the (positive) content, preserving signs.
    pub fn primitive(&self) -> IntPoly {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
        }
    }
}

fn sign_i32(x: &BigInt) -> i32 {
    match x.sign() {
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
        num_bigint::Sign::Plus => 1,
    }
}

/// Pseudo-remainder of `a` by `b`, scaled so that the result is a *positive*
/// rational multiple of the true remainder. Requires `b` non-zero.
pub fn pseudo_rem_pos(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let db = b.degree().expect("pseudo-remainder by the zero polynomial");
    let lb = b.leading().unwrap().clone();
    let lb_abs = lb.abs();
    let lb_neg = lb.is_negative();
    let mut r = a.clone();
    while let Some(dr) = r.degree() {
        if dr < db {
            break;
        }
        let lr = r.leading().unwrap().clone();
        // eliminate the leading term: |lb| * r - sign(lb) * lr * t^(dr-db) * b
        let mut shifted = vec![BigInt::zero(); dr - db];
        let factor = if lb_neg { -&lr } else { lr.clone() };
        shifted.extend(b.coeffs().iter().map(|c| c * &factor));
        r = r.mul_scalar(&lb_abs).sub(&IntPoly::new(shifted));
        debug_assert!(r.degree().is_none_or(|d| d < dr));
    }
    r
}

/// Primitive polynomial gcd with positive leading coefficient.
pub fn gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let mut a = a.primitive();
    let mut b = b.primitive();
    while !b.is_zero() {
        let r = pseudo_rem_pos(&a, &b).primitive();
        a = b;
        b = r;
    }
    if a.leading().is_some_and(Signed::is_negative) {
        a = a.neg();
    }
    a
}

/// `f / gcd(f, f')`: same real roots, all simple. Primitive, positive
/// leading coefficient. Zero input stays zero.
pub fn squarefree_part(f: &IntPoly) -> IntPoly {
    if f.is_zero() {
        return IntPoly::zero();
    }
    let g = gcd(f, &f.derivative());
    let mut q = exact_div(&f.primitive(), &g);
    if q.leading().is_some_and(Signed::is_negative) {
        q = q.neg();
    }
    q
}

/// Exact quotient `f / g` for primitive `g` dividing `f` over the rationals.
/// The quotient of primitive polynomials is integral, so every coefficient
/// produced by long division must come out an integer.
fn exact_div(f: &IntPoly, g: &IntPoly) -> IntPoly {
    let dg = g.degree().expect("division by the zero polynomial");
    let lg = BigRational::from_integer(g.leading().unwrap().clone());
    let mut rem: Vec<BigRational> = f
        .coeffs()
        .iter()
        .map(|c| BigRational::from_integer(c.clone()))
        .collect();
    let df = f.degree().unwrap_or(0);
    if f.is_zero() || df < dg {
        assert!(f.is_zero(), "exact division with a smaller dividend");
        return IntPoly::zero();
    }
    let mut quot = vec![BigRational::zero(); df - dg + 1];
    for k in (0..=df - dg).rev() {
        let c = &rem[k + dg] / &lg;
        for (j, gc) in g.coeffs().iter().enumerate() {
            let delta = &c * BigRational::from_integer(gc.clone());
            rem[k + j] -= delta;
        }
        quot[k] = c;
    }
    assert!(
        rem.iter().all(Zero::is_zero),
        "exact division left a remainder"
    );
    IntPoly::new(
        quot.into_iter()
            .map(|c| {
                assert!(c.is_integer(), "exact division produced a fraction");
                c.to_integer()
            })
            .collect(),
    )
}

/// Strict upper bound on the absolute value of every real root.
pub fn cauchy_bound(f: &IntPoly) -> BigRational {
    let lead = f.leading().expect("root bound of the zero polynomial").abs();
    let max = f
        .coeffs()
        .iter()
        .map(Signed::abs)
        .max()
        .unwrap_or_else(BigInt::zero);
    BigRational::one() + BigRational::new(max, lead)
}

/// Sturm chain of a squarefree polynomial.
pub struct SturmChain {
    seq: Vec<IntPoly>,
}

impl SturmChain {
    /// `f` must be squarefree (all real roots simple).
    pub fn new(f: &IntPoly) -> Self {
        let mut seq = vec![f.primitive()];
        let d = f.derivative().primitive();
        if !d.is_zero() {
            seq.push(d);
            loop {
                let n = seq.len();
                let r = pseudo_rem_pos(&seq[n - 2], &seq[n - 1]).primitive();
                if r.is_zero() {
                    break;
                }
                seq.push(r.neg());
            }
        }
        SturmChain { seq }
    }

    fn variations<F: Fn(&IntPoly) -> i32>(&self, sign_of: F) -> usize {
        let mut count = 0;
        let mut last = 0;
        for p in &self.seq {
            let s = sign_of(p);
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    }

    pub fn variations_at(&self, x: &BigRational) -> usize {
        self.variations(|p| p.sign_at(x))
    }

    /// Number of distinct real roots in the half-open interval `(a, b]`.
    /// Endpoints must not be roots of the chain's first polynomial.
    pub fn count_in(&self, a: &BigRational, b: &BigRational) -> usize {
        debug_assert!(a <= b);
        self.variations_at(a) - self.variations_at(b)
    }

    /// Number of distinct real roots on the whole line.
    pub fn count_all(&self) -> usize {
        let lo = self.variations(IntPoly::sign_at_neg_inf);
        let hi = self.variations(IntPoly::sign_at_pos_inf);
        lo - hi
    }
}

/// Number of distinct real roots of an arbitrary non-zero polynomial.
pub fn count_real_roots(f: &IntPoly) -> usize {
    if f.degree().is_none_or(|d| d == 0) {
        return 0;
    }
    SturmChain::new(&squarefree_part(f)).count_all()
}

/// A point in `(a, b)` that is not a root of any of the given polynomials,
/// found on a progressively finer dyadic grid.
fn interior_non_root(polys: &[&IntPoly], a: &BigRational, b: &BigRational) -> BigRational {
    let two = BigRational::from_integer(BigInt::from(2));
    let mut step = (b - a) / &two;
    for _ in 0..64 {
        // odd multiples of the current step stay inside (a, b)
        let mut m = a + &step;
        while &m < b {
            if polys.iter().all(|p| p.sign_at(&m) != 0) {
                return m;
            }
            m += &step + &step;
        }
        step /= &two;
    }
    unreachable!("polynomials have finitely many roots");
}

/// Isolating intervals `(a, b]` for every real root of a squarefree
/// polynomial: exactly one root per interval, endpoints never roots,
/// sorted ascending.
pub fn isolate_roots(f: &IntPoly) -> Vec<(BigRational, BigRational)> {
    if f.degree().is_none_or(|d| d == 0) {
        return Vec::new();
    }
    let chain = SturmChain::new(f);
    let bound = cauchy_bound(f);
    let lo = -bound.clone();
    let hi = bound;
    debug_assert!(f.sign_at(&lo) != 0 && f.sign_at(&hi) != 0);
    let total = chain.count_in(&lo, &hi);
    let mut out = Vec::with_capacity(total);
    let mut stack = vec![(lo, hi, total)];
    while let Some((a, b, count)) = stack.pop() {
        match count {
            0 => {}
            1 => out.push((a, b)),
            _ => {
                let m = interior_non_root(&[f], &a, &b);
                let left = chain.count_in(&a, &m);
                // push right first so the final list comes out ascending
                stack.push((m.clone(), b, count - left));
                stack.push((a, m, left));
            }
        }
    }
    debug_assert!(out.windows(2).all(|w| w[0].1 <= w[1].0));
    out
}

/// Sign of `g` at the unique root of `f` inside `(a, b]`.
///
/// `f` must be squarefree with exactly one root in the interval and
/// non-vanishing endpoints, and `g` must not vanish at that root. The
/// interval is shrunk until `g` is root-free on it, at which point the sign
/// at either endpoint is the sign at the root.
pub fn sign_at_root(
    f: &IntPoly,
    interval: &(BigRational, BigRational),
    g: &IntPoly,
) -> i32 {
    let f_chain = SturmChain::new(f);
    let g_sqf = squarefree_part(g);
    let g_chain = SturmChain::new(&g_sqf);
    let (mut a, mut b) = interval.clone();
    loop {
        let ga = g.sign_at(&a);
        if ga != 0 && g.sign_at(&b) != 0 && g_chain.count_in(&a, &b) == 0 {
            return ga;
        }
        let m = interior_non_root(&[f, g], &a, &b);
        if f_chain.count_in(&a, &m) == 1 {
            b = m;
        } else {
            a = m;
        }
    }
}
