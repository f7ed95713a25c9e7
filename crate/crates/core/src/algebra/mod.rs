//! Exact arithmetic: big integers, polynomials in `q`, q-analogues, and
//! evaluation at primitive roots of unity through cyclotomic reduction.
//!
//! Nothing in here touches floating point.

mod cyclo;
mod poly;
mod qanalog;

pub use cyclo::{cyclotomic, eval_at_root, eval_limit_at_root, eval_rat_at_root, euler_phi, CycloValue};
pub use poly::{poly_exact_div, IntPoly, RatPoly};
pub use qanalog::{q_binomial, q_binomial_by_division, q_factorial, q_integer};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("polynomial division is not exact")]
    DivisionNotExact,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("limit diverges at a primitive {d}-th root of unity")]
    PoleAtRoot { d: usize },
    #[error("cyclotomic values of different orders ({0} and {1})")]
    OrderMismatch(usize, usize),
}

/// Binomial coefficient for any integer arguments.
///
/// Zero when `k < 0`, or when `0 <= n < k`. For negative `n` the extension
/// `C(n, k) = (-1)^k C(k - n - 1, k)` is used.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    if n < 0 {
        let v = binomial(k - n - 1, k);
        return if k % 2 == 0 { v } else { -v };
    }
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(4, 2), 6.into());
        assert_eq!(binomial(9, 7), 36.into());
        assert_eq!(binomial(3, 5), 0.into());
        assert_eq!(binomial(0, 0), 1.into());
        assert_eq!(binomial(5, -1), 0.into());
    }

    #[test]
    fn negative_upper_index() {
        // C(-1, k) = (-1)^k, C(-2, k) = (-1)^k (k + 1)
        for k in 0..6 {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            assert_eq!(binomial(-1, k), sign.into());
            assert_eq!(binomial(-2, k), (sign * (k + 1)).into());
        }
        // the identity C(n,k) = (-1)^k C(k-n-1,k) holds in both directions
        for n in -6..7i64 {
            for k in 0..7i64 {
                let rhs = binomial(k - n - 1, k) * if k % 2 == 0 { 1 } else { -1 };
                assert_eq!(binomial(n, k), rhs, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn pascal_rule_everywhere() {
        for n in -8..12i64 {
            for k in 1..12i64 {
                assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
            }
        }
    }
}
