//! Cyclotomic polynomials and the quotient field `Q[q] / Phi_d(q)`.
//!
//! A primitive `d`-th root of unity is represented by the class of `q` in that
//! field. Values are stored as rational coordinates on `1, q, ..., q^{phi(d)-1}`.

use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{AlgebraError, IntPoly, RatPoly};

fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|d| n % d == 0).collect()
}

pub fn euler_phi(n: usize) -> usize {
    (1..=n).filter(|&k| num_integer::gcd(k, n) == 1).count()
}

/// The `d`-th cyclotomic polynomial: `q^d - 1` divided by every `Phi_e` with
/// `e | d`, `e < d`.
pub fn cyclotomic(d: usize) -> IntPoly {
    assert!(d >= 1, "cyclotomic polynomial of order 0");
    let mut p = IntPoly::monomial(BigInt::one(), d);
    p = &p - &IntPoly::one();
    for e in divisors(d) {
        if e < d {
            p = p
                .exact_div(&cyclotomic(e))
                .expect("q^d - 1 is divisible by each lower cyclotomic factor");
        }
    }
    p
}

/// An element of `Q[q] / Phi_d(q)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycloValue {
    d: usize,
    coords: Vec<BigRational>,
}

impl CycloValue {
    fn from_reduced(d: usize, r: &RatPoly) -> Self {
        let len = euler_phi(d);
        let coords = (0..len).map(|i| r.coeff(i)).collect();
        CycloValue { d, coords }
    }

    pub fn from_integer(d: usize, v: BigInt) -> Self {
        let mut coords = vec![BigRational::zero(); euler_phi(d)];
        coords[0] = BigRational::from_integer(v);
        CycloValue { d, coords }
    }

    pub fn order(&self) -> usize {
        self.d
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// All coordinates past the first vanish and the first is an integer.
    pub fn is_rational_integer(&self) -> bool {
        self.coords[0].is_integer() && self.coords[1..].iter().all(Zero::is_zero)
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_rational_integer().then(|| self.coords[0].to_integer())
    }

    fn as_poly(&self) -> RatPoly {
        RatPoly::new(self.coords.clone())
    }

    fn check(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.d == other.d {
            Ok(())
        } else {
            Err(AlgebraError::OrderMismatch(self.d, other.d))
        }
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check(other)?;
        Ok(eval_rat_at_root(&(&self.as_poly() * &other.as_poly()), self.d))
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// `Phi_d`, which is irreducible over the rationals.
    pub fn inverse(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::PoleAtRoot { d: self.d });
        }
        let modulus = cyclotomic(self.d).to_rat();
        // invariant: s_i * a = r_i (mod modulus)
        let (mut r0, mut r1) = (modulus, self.as_poly());
        let (mut s0, mut s1) = (RatPoly::zero(), RatPoly::one());
        while !r1.is_zero() {
            let (quot, rem) = r0.div_rem(&r1)?;
            let s2 = &s0 - &(&quot * &s1);
            r0 = std::mem::replace(&mut r1, rem);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // r0 is a nonzero constant gcd
        let c = r0.coeff(0);
        debug_assert_eq!(r0.degree(), Some(0));
        Ok(eval_rat_at_root(&s0.scale(&(BigRational::one() / c)), self.d))
    }
}

impl Add for &CycloValue {
    type Output = CycloValue;
    fn add(self, rhs: &CycloValue) -> CycloValue {
        assert_eq!(self.d, rhs.d, "adding cyclotomic values of different orders");
        CycloValue {
            d: self.d,
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &CycloValue {
    type Output = CycloValue;
    fn sub(self, rhs: &CycloValue) -> CycloValue {
        assert_eq!(self.d, rhs.d, "subtracting cyclotomic values of different orders");
        CycloValue {
            d: self.d,
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Mul for &CycloValue {
    type Output = CycloValue;
    fn mul(self, rhs: &CycloValue) -> CycloValue {
        self.try_mul(rhs).expect("multiplying cyclotomic values of different orders")
    }
}

/// Fold exponents modulo `d`; valid because `Phi_d` divides `q^d - 1`.
fn fold_mod_qd<T: Clone + Zero + for<'a> std::ops::AddAssign<&'a T>>(coeffs: &[T], d: usize) -> Vec<T> {
    let mut out = vec![T::zero(); d.min(coeffs.len())];
    for (i, c) in coeffs.iter().enumerate() {
        out[i % d] += c;
    }
    out
}

/// Reduce `p` modulo `Phi_d`: the value of `p` at a primitive `d`-th root of unity.
pub fn eval_rat_at_root(p: &RatPoly, d: usize) -> CycloValue {
    assert!(d >= 1, "root of unity of order 0");
    let folded = RatPoly::new(fold_mod_qd(p.coeffs(), d));
    let (_, rem) = folded
        .div_rem(&cyclotomic(d).to_rat())
        .expect("cyclotomic polynomials are nonzero");
    CycloValue::from_reduced(d, &rem)
}

/// Integer-polynomial form of [`eval_rat_at_root`].
pub fn eval_at_root(p: &IntPoly, d: usize) -> CycloValue {
    eval_rat_at_root(&p.to_rat(), d)
}

/// Limit of `num / den` as `q` tends to a primitive `d`-th root of unity.
///
/// Common factors of `Phi_d` are cancelled by exact division before the ratio
/// is evaluated in the quotient field.
pub fn eval_limit_at_root(num: &IntPoly, den: &IntPoly, d: usize) -> Result<CycloValue, AlgebraError> {
    if den.is_zero() {
        return Err(AlgebraError::DivisionByZero);
    }
    if num.is_zero() {
        return Ok(CycloValue::from_integer(d, BigInt::zero()));
    }
    let (num, den) = cancel_cyclotomic(num, den, d);
    let den_val = eval_at_root(&den, d);
    if den_val.is_zero() {
        return Err(AlgebraError::PoleAtRoot { d });
    }
    eval_at_root(&num, d).try_mul(&den_val.inverse()?)
}

/// Strip the largest common power of `Phi_d` from both polynomials.
pub(crate) fn cancel_cyclotomic(num: &IntPoly, den: &IntPoly, d: usize) -> (IntPoly, IntPoly) {
    let phi = cyclotomic(d);
    let (mut num, mut den) = (num.clone(), den.clone());
    while !num.is_zero() {
        match (num.exact_div(&phi), den.exact_div(&phi)) {
            (Ok(n2), Ok(d2)) => {
                num = n2;
                den = d2;
            }
            _ => break,
        }
    }
    (num, den)
}
