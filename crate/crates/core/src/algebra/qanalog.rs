use num_bigint::BigInt;
use num_traits::One;

use super::IntPoly;

/// `[n]_q = 1 + q + ... + q^{n-1}`; `[0]_q = 0`.
pub fn q_integer(n: usize) -> IntPoly {
    IntPoly::new(vec![BigInt::one(); n])
}

/// `[n]!_q = [n]_q [n-1]_q ... [1]_q`.
pub fn q_factorial(n: usize) -> IntPoly {
    (1..=n).fold(IntPoly::one(), |acc, i| &acc * &q_integer(i))
}

/// Gaussian binomial `[n choose k]_q`, built from the recurrence
/// `[n, k] = [n-1, k-1] + q^k [n-1, k]`.
///
/// Zero when `k < 0` or `k > n`.
pub fn q_binomial(n: usize, k: i64) -> IntPoly {
    if k < 0 || k as usize > n {
        return IntPoly::zero();
    }
    let k = k as usize;
    // row[j] holds [i, j] for j in 0..=k; entries with j > i stay zero.
    let mut row = vec![IntPoly::zero(); k + 1];
    row[0] = IntPoly::one();
    for i in 1..=n {
        // only columns that can still reach [n, k] are needed
        let lo = k.saturating_sub(n - i);
        let hi = i.min(k);
        for j in (lo.max(1)..=hi).rev() {
            row[j] = &row[j - 1] + &row[j].shift(j);
        }
    }
    std::mem::take(&mut row[k])
}

/// Gaussian binomial through the product of ratios `(1 - q^{n-i}) / (1 - q^{i+1})`,
/// one exact division per factor.
pub fn q_binomial_by_division(n: usize, k: i64) -> IntPoly {
    if k < 0 || k as usize > n {
        return IntPoly::zero();
    }
    let k = (k as usize).min(n - k as usize);
    let mut acc = IntPoly::one();
    for i in 0..k {
        acc = &acc * &q_integer(n - i);
        acc = acc
            .exact_div(&q_integer(i + 1))
            .expect("partial products of q-binomials are polynomials");
    }
    acc
}
