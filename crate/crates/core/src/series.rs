//! Truncated power series in `z` whose coefficients are polynomials in `w`
//! over the rationals, and the generating-function identities for
//! non-crossing connected graphs.
//!
//! A series carries two bounds: `order` (highest z-power kept) and `wcap`
//! (highest w-power kept). Every product truncates at both, which keeps
//! all coefficients up to those bounds exact. Binary operations on series of
//! different orders keep the smaller order.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::RatPoly;
use crate::formulas::{closed_d, count_connected, y_coefficient, y_squared_coefficient};
use crate::ncgraph::{count_antipodal_pairs, count_two_components_separated, count_with_edge_1n};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("phi must have a nonzero constant term")]
    InvalidPhi,
    #[error("constant term is not an invertible rational")]
    NotInvertible,
    #[error("operation needs a zero constant term")]
    NonZeroConstant,
}

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivarSeries {
    order: usize,
    wcap: usize,
    coeffs: Vec<RatPoly>,
}

impl BivarSeries {
    pub fn zero(order: usize, wcap: usize) -> Self {
        BivarSeries { order, wcap, coeffs: vec![RatPoly::zero(); order + 1] }
    }

    /// The series whose only term is `p(w)` at `z^0`.
    pub fn constant(order: usize, wcap: usize, p: RatPoly) -> Self {
        let mut s = Self::zero(order, wcap);
        s.coeffs[0] = p.truncate(wcap);
        s
    }

    pub fn one(order: usize, wcap: usize) -> Self {
        Self::constant(order, wcap, RatPoly::one())
    }

    /// The variable `z` itself.
    pub fn var(order: usize, wcap: usize) -> Self {
        let mut s = Self::zero(order, wcap);
        if order >= 1 {
            s.coeffs[1] = RatPoly::one();
        }
        s
    }

    pub fn from_coeffs(order: usize, wcap: usize, coeffs: Vec<RatPoly>) -> Self {
        let mut s = Self::zero(order, wcap);
        for (slot, c) in s.coeffs.iter_mut().zip(coeffs) {
            *slot = c.truncate(wcap);
        }
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn wcap(&self) -> usize {
        self.wcap
    }

    /// Coefficient of `z^n` as a polynomial in `w`; zero past the order.
    pub fn coeff(&self, n: usize) -> RatPoly {
        self.coeffs.get(n).cloned().unwrap_or_default()
    }

    /// Coefficient of `z^n w^k`.
    pub fn coeff_at(&self, n: usize, k: usize) -> BigRational {
        self.coeffs.get(n).map_or_else(BigRational::zero, |p| p.coeff(k))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(RatPoly::is_zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        BivarSeries { order, wcap: self.wcap, coeffs: self.coeffs[..=order].to_vec() }
    }

    fn common(&self, other: &Self) -> (usize, usize) {
        (self.order.min(other.order), self.wcap.min(other.wcap))
    }

    pub fn add(&self, other: &Self) -> Self {
        let (order, wcap) = self.common(other);
        let coeffs = (0..=order).map(|i| (&self.coeffs[i] + &other.coeffs[i]).truncate(wcap)).collect();
        BivarSeries { order, wcap, coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let (order, wcap) = self.common(other);
        let coeffs = (0..=order).map(|i| (&self.coeffs[i] - &other.coeffs[i]).truncate(wcap)).collect();
        BivarSeries { order, wcap, coeffs }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (order, wcap) = self.common(other);
        let mut out = Self::zero(order, wcap);
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=order - i {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                let prod = self.coeffs[i].mul_truncated(&other.coeffs[j], wcap);
                out.coeffs[i + j] = &out.coeffs[i + j] + &prod;
            }
        }
        out
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one(self.order, self.wcap);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiply every coefficient by a polynomial in `w`.
    pub fn scale_w(&self, p: &RatPoly) -> Self {
        let coeffs = self.coeffs.iter().map(|c| c.mul_truncated(p, self.wcap)).collect();
        BivarSeries { order: self.order, wcap: self.wcap, coeffs }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let coeffs = self.coeffs.iter().map(|p| p.scale(c)).collect();
        BivarSeries { order: self.order, wcap: self.wcap, coeffs }
    }

    /// Multiply by `z`; the top coefficient falls off.
    pub fn mul_z(&self) -> Self {
        let mut out = Self::zero(self.order, self.wcap);
        for i in 1..=self.order {
            out.coeffs[i] = self.coeffs[i - 1].clone();
        }
        out
    }

    /// Divide by `z`; the order drops by one.
    pub fn div_z(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::NonZeroConstant);
        }
        let order = self.order.saturating_sub(1);
        let coeffs = (0..=order).map(|i| self.coeff(i + 1)).collect();
        Ok(BivarSeries { order, wcap: self.wcap, coeffs })
    }

    /// Derivative in `z`; the order drops by one.
    pub fn derivative(&self) -> Self {
        let order = self.order.saturating_sub(1);
        let coeffs = (0..=order).map(|i| self.coeff(i + 1).scale(&rat(i as i64 + 1))).collect();
        BivarSeries { order, wcap: self.wcap, coeffs }
    }

    /// Reciprocal; the `z^0` coefficient must be a nonzero rational constant.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        let c0 = &self.coeffs[0];
        if c0.degree() != Some(0) {
            return Err(SeriesError::NotInvertible);
        }
        let inv0 = BigRational::one() / c0.coeff(0);
        let mut out = Self::zero(self.order, self.wcap);
        out.coeffs[0] = RatPoly::constant(inv0.clone());
        for n in 1..=self.order {
            let mut acc = RatPoly::zero();
            for i in 1..=n {
                if self.coeffs[i].is_zero() {
                    continue;
                }
                acc = &acc + &self.coeffs[i].mul_truncated(&out.coeffs[n - i], self.wcap);
            }
            out.coeffs[n] = acc.scale(&-inv0.clone());
        }
        Ok(out)
    }

    /// `log(1 + self)` as `sum_{m >= 1} (-1)^{m+1} self^m / m`; needs a zero
    /// constant term.
    pub fn log1p(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::NonZeroConstant);
        }
        let mut out = Self::zero(self.order, self.wcap);
        let mut power = self.clone();
        for m in 1..=self.order {
            let sign = if m % 2 == 1 { 1 } else { -1 };
            out = out.add(&power.scale(&BigRational::new(BigInt::from(sign), BigInt::from(m))));
            power = power.mul(self);
        }
        Ok(out)
    }
}

/// Default w-cap for a given z-order: the coefficient of `z^n` in any series
/// used here has w-degree at most `2n`.
pub fn default_wcap(order: usize) -> usize {
    2 * order + 2
}

fn w() -> RatPoly {
    RatPoly::from_i64(&[0, 1])
}

/// The series `y` with zero constant term solving `y = z w (1+y)^3 / (1 - w y)`,
/// by `order` rounds of fixed-point iteration.
pub fn solve_y(order: usize) -> BivarSeries {
    let wcap = default_wcap(order);
    let one = BivarSeries::one(order, wcap);
    let z = BivarSeries::var(order, wcap);
    let mut y = BivarSeries::zero(order, wcap);
    // each round fixes one more power of z
    for _ in 0..order {
        let base = one.add(&y).pow(3);
        let denom = one.sub(&y.scale_w(&w())).inverse().expect("constant term is 1");
        y = z.mul(&base).mul(&denom).scale_w(&w());
    }
    y
}

/// `C = z + z y`, the generating function of connected graphs.
pub fn connected_gf(order: usize) -> BivarSeries {
    let y = solve_y(order);
    let wcap = y.wcap();
    BivarSeries::one(order, wcap).add(&y).mul_z()
}

/// `w C^3 + w C^2 - z(1+2w) C + z^2 (1+w)`, identically zero for the true `C`.
pub fn cubic_residual(order: usize) -> BivarSeries {
    let c = connected_gf(order);
    let wcap = c.wcap();
    let z = BivarSeries::var(order, wcap);
    let c2 = c.mul(&c);
    let c3 = c2.mul(&c);
    let lhs = c3.add(&c2).scale_w(&w());
    let mid = z.mul(&c).scale_w(&RatPoly::from_i64(&[1, 2]));
    let tail = z.mul(&z).scale_w(&RatPoly::from_i64(&[1, 1]));
    lhs.sub(&mid).add(&tail)
}

/// `F = w/(1+w) (z^2 (1+y)^2 + z y)`, the generating function of connected
/// graphs containing the chord `{1, n}`. `1/(1+w)` is expanded up to the w-cap.
pub fn build_f(order: usize) -> BivarSeries {
    let y = solve_y(order);
    let wcap = y.wcap();
    let one = BivarSeries::one(order, wcap);
    let z = BivarSeries::var(order, wcap);
    let one_y = one.add(&y);
    let g = z.mul(&z).mul(&one_y).mul(&one_y).add(&z.mul(&y));
    let geometric = RatPoly::new((0..=wcap).map(|j| rat(if j % 2 == 0 { 1 } else { -1 })).collect());
    g.scale_w(&geometric).scale_w(&w())
}

/// Outcome of one exact identity check.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl IdentityCheck {
    pub fn new(name: impl Into<String>) -> Self {
        IdentityCheck { name: name.into(), checked: 0, failures: Vec::new() }
    }

    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    /// Record one comparison.
    pub fn compare<T: PartialEq + std::fmt::Display>(&mut self, what: impl FnOnce() -> String, got: T, want: T) {
        self.checked += 1;
        if got != want {
            let mut msg = what();
            let _ = write!(msg, ": got {got}, expected {want}");
            self.failures.push(msg);
        }
    }

    pub fn require(&mut self, what: impl FnOnce() -> String, cond: bool) {
        self.checked += 1;
        if !cond {
            self.failures.push(what());
        }
    }
}

fn ratio(v: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// The cubic vanishes through the truncation order.
pub fn check_cubic(order: usize) -> IdentityCheck {
    let mut chk = IdentityCheck::new(format!("cubic residual vanishes through z^{order}"));
    let r = cubic_residual(order);
    for n in 0..=order {
        chk.require(|| format!("[z^{n}] residual = {}", r.coeff(n)), r.coeff(n).is_zero());
    }
    chk
}

/// `[z^n w^k] C` equals the closed count for every `1 <= n <= order`.
pub fn check_c_coefficients(order: usize) -> IdentityCheck {
    let mut chk = IdentityCheck::new(format!("[z^n w^k] C = c(n,k) for n <= {order}"));
    let c = connected_gf(order);
    for n in 1..=order {
        for k in 0..=c.wcap() {
            let want = if n == 1 {
                BigInt::from(u8::from(k == 0))
            } else {
                count_connected(n, k)
            };
            chk.compare(|| format!("[z^{n} w^{k}] C"), c.coeff_at(n, k), BigRational::from_integer(want));
        }
    }
    chk
}

/// `[z^n w^k] C^2` equals the closed form of `d(n,k)` for `3 <= n <= order`
/// and the enumerated count for `n <= enum_max_n`.
pub fn check_d_is_c_squared(order: usize, enum_max_n: usize) -> IdentityCheck {
    let mut chk = IdentityCheck::new(format!("[z^n w^k] C^2 = d(n,k) for n <= {order}"));
    let c = connected_gf(order);
    let d = c.mul(&c);
    chk.compare(|| "[z^2 w^0] C^2".into(), d.coeff_at(2, 0), BigRational::one());
    for n in 3..=order {
        for k in 0..=d.wcap() {
            let got = d.coeff_at(n, k);
            chk.compare(|| format!("[z^{n} w^{k}] C^2 vs closed form"), got.clone(), BigRational::from_integer(closed_d(n, k)));
            if n <= enum_max_n && k <= 2 * n {
                chk.compare(
                    || format!("[z^{n} w^{k}] C^2 vs enumeration"),
                    got,
                    ratio(count_two_components_separated(n, k)),
                );
            }
        }
    }
    chk
}

/// `[z^n w^k] F` equals the enumerated `f(n,k)` for `n <= enum_max_n`, and
/// vanishes past w-degree `2n - 3` up to the cap.
pub fn check_f_coefficients(order: usize, enum_max_n: usize) -> IdentityCheck {
    let mut chk = IdentityCheck::new(format!("[z^n w^k] F = f(n,k) for n <= {}", enum_max_n.min(order)));
    let f = build_f(order);
    for k in 0..=f.wcap() {
        chk.compare(|| format!("[z^1 w^{k}] F"), f.coeff_at(1, k), BigRational::zero());
    }
    for n in 2..=order {
        for k in 0..=f.wcap() {
            if n <= enum_max_n {
                chk.compare(|| format!("[z^{n} w^{k}] F"), f.coeff_at(n, k), ratio(count_with_edge_1n(n, k)));
            } else if k + 3 > 2 * n {
                chk.compare(|| format!("[z^{n} w^{k}] F above degree 2n-3"), f.coeff_at(n, k), BigRational::zero());
            }
        }
    }
    chk
}

/// The three identities around `A = z (dH/dz) / (1 - H)` with `H = F/z`.
#[derive(Clone, Debug)]
pub struct ARelationReport {
    /// `[z^n w^k] A` against enumerated antipodal-pair counts.
    pub antipodal: IdentityCheck,
    /// `sum a(n,k)/n z^n w^k = log(1 + y)`.
    pub log_identity: IdentityCheck,
    /// `1 - H = 1/(1 + y)`.
    pub h_identity: IdentityCheck,
}

impl ARelationReport {
    pub fn ok(&self) -> bool {
        self.antipodal.ok() && self.log_identity.ok() && self.h_identity.ok()
    }

    pub fn checks(&self) -> [&IdentityCheck; 3] {
        [&self.antipodal, &self.log_identity, &self.h_identity]
    }
}

pub fn check_a_relation(order: usize, enum_max_n: usize) -> ARelationReport {
    let f = build_f(order);
    let wcap = f.wcap();
    let h = f.div_z().expect("F has no z^0 term");
    let one = BivarSeries::one(h.order(), wcap);
    let one_minus_h = one.sub(&h);
    let a = BivarSeries::var(h.order(), wcap)
        .mul(&h.derivative())
        .mul(&one_minus_h.inverse().expect("H has no z^0 term"));
    let valid = a.order();

    let mut antipodal = IdentityCheck::new(format!("[z^n w^k] A = a(n,k) for n <= {}", enum_max_n.min(valid)));
    for n in 1..=enum_max_n.min(valid) {
        for k in 0..=wcap {
            antipodal.compare(|| format!("[z^{n} w^{k}] A"), a.coeff_at(n, k), ratio(count_antipodal_pairs(n, k)));
        }
    }

    let y = solve_y(order);
    let log = y.log1p().expect("y has no z^0 term");
    let mut log_identity = IdentityCheck::new(format!("sum a(n,k)/n z^n w^k = log(1+y) through z^{valid}"));
    for n in 1..=valid {
        let scaled = a.coeff(n).scale(&BigRational::new(BigInt::one(), BigInt::from(n)));
        log_identity.compare(|| format!("[z^{n}] log(1+y)"), log.coeff(n), scaled);
    }

    let recip = BivarSeries::one(order, wcap).add(&y).inverse().expect("constant term is 1");
    let mut h_identity = IdentityCheck::new(format!("1 - H = 1/(1+y) through z^{}", one_minus_h.order()));
    for n in 0..=one_minus_h.order() {
        h_identity.compare(|| format!("[z^{n}] (1 - H)"), one_minus_h.coeff(n), recip.coeff(n));
    }
    ARelationReport { antipodal, log_identity, h_identity }
}

/// `(1/n) [u^{n-1}] phi(u)^n psi'(u)`, the z^n coefficient of `psi(y)` when
/// `y = z phi(y)`. Both inputs are series in `u` with w-polynomial coefficients.
pub fn lagrange_coefficient(phi: &BivarSeries, psi: &BivarSeries, n: usize) -> Result<RatPoly, SeriesError> {
    assert!(n >= 1, "coefficient index must be positive");
    if phi.coeff(0).is_zero() {
        return Err(SeriesError::InvalidPhi);
    }
    let top = n - 1;
    assert!(phi.order() >= top && psi.order() >= n, "inputs truncated too early");
    let phi = phi.truncate(top);
    let dpsi = psi.derivative().truncate(top);
    let prod = phi.pow(n).mul(&dpsi);
    Ok(prod.coeff(top).scale(&BigRational::new(BigInt::one(), BigInt::from(n))))
}

/// `phi(u) = w (1+u)^3 / (1 - u w)` expanded as a series in `u`.
pub fn connected_phi(order: usize, wcap: usize) -> BivarSeries {
    let one = BivarSeries::one(order, wcap);
    let u = BivarSeries::var(order, wcap);
    let cube = one.add(&u).pow(3);
    let denom = one.sub(&u.scale_w(&w())).inverse().expect("constant term is 1");
    cube.mul(&denom).scale_w(&w())
}

/// Lagrange extraction with `psi = u` reproduces the iterated `y`, and with
/// `psi = log(1+u)` reproduces `log(1+y)`.
pub fn check_lagrange_agreement(order: usize) -> IdentityCheck {
    let mut chk = IdentityCheck::new(format!("Lagrange extraction matches iteration through z^{order}"));
    let y = solve_y(order);
    let wcap = y.wcap();
    let phi = connected_phi(order, wcap);
    let u = BivarSeries::var(order, wcap);
    let log_u = u.log1p().expect("u has no constant term");
    let log_y = y.log1p().expect("y has no constant term");
    for n in 1..=order {
        chk.compare(|| format!("[z^{n}] y"), lagrange_coefficient(&phi, &u, n).expect("phi(0) = w"), y.coeff(n));
        chk.compare(|| format!("[z^{n}] log(1+y)"), lagrange_coefficient(&phi, &log_u, n).expect("phi(0) = w"), log_y.coeff(n));
    }
    chk
}

/// `[z^{n-2} w^k] y` and `[z^{n-2} w^k] y^2` against their closed forms for
/// `3 <= n <= order + 2`.
pub fn check_y_extractions(order: usize) -> IdentityCheck {
    let mut chk = IdentityCheck::new(format!("closed forms of [z^(n-2) w^k] y and y^2 for n <= {}", order + 2));
    let y = solve_y(order);
    let y2 = y.mul(&y);
    for n in 3..=order + 2 {
        for k in 0..=y.wcap() {
            chk.compare(|| format!("[z^{} w^{k}] y", n - 2), y.coeff_at(n - 2, k), y_coefficient(n, k));
            chk.compare(|| format!("[z^{} w^{k}] y^2", n - 2), y2.coeff_at(n - 2, k), y_squared_coefficient(n, k));
        }
    }
    chk
}
