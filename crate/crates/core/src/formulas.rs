//! Closed-form counts of non-crossing structures, their q-analogues, and exact
//! evaluation of the q-analogues at roots of unity.
//!
//! Parameters outside a formula's natural domain give 0, so callers can sweep
//! rectangular grids.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::{
    self, eval_at_root, eval_limit_at_root, poly_exact_div, q_binomial, q_integer, AlgebraError, CycloValue, IntPoly,
};
use crate::ncgraph::{count_with_edge_1n, Family};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("value of {name}({n},{k}) at a primitive {d}-th root of unity is not a rational integer")]
    NotRationalInteger { name: &'static str, n: usize, k: usize, d: usize },
    #[error("rotation order {d} does not divide {n}")]
    InvalidOrder { n: usize, d: usize },
    #[error("non-integer result: {0}")]
    NonIntegerResult(String),
}

/// Binomial coefficient that vanishes whenever the top index is negative.
fn choose(n: i64, k: i64) -> BigInt {
    if n < 0 {
        BigInt::zero()
    } else {
        algebra::binomial(n, k)
    }
}

fn exact(num: BigInt, den: i64, what: impl FnOnce() -> String) -> Result<BigInt, FormulaError> {
    let (q, r) = num.div_rem(&BigInt::from(den));
    if r.is_zero() {
        Ok(q)
    } else {
        Err(FormulaError::NonIntegerResult(what()))
    }
}

fn qb(n: i64, k: i64) -> IntPoly {
    if n < 0 {
        IntPoly::zero()
    } else {
        q_binomial(n as usize, k)
    }
}

fn in_connected_range(n: usize, k: usize) -> bool {
    n >= 2 && k + 1 >= n && k + 3 <= 2 * n
}

/// `c(n, k)`: non-crossing connected graphs on `n` vertices with `k` edges.
pub fn count_connected(n: usize, k: usize) -> BigInt {
    if !in_connected_range(n, k) {
        return BigInt::zero();
    }
    let (n, k) = (n as i64, k as i64);
    let v = choose(3 * n - 3, n + k) * choose(k - 1, n - 2);
    exact(v, n - 1, || format!("c({n},{k})")).expect("connected-graph counts are integers")
}

/// `[3n-3, n+k]_q [k-1, n-2]_q / [n-1]_q` as an explicit polynomial.
pub fn qpoly_connected(n: usize, k: usize) -> Result<IntPoly, FormulaError> {
    if !in_connected_range(n, k) {
        return Ok(IntPoly::zero());
    }
    let (ni, ki) = (n as i64, k as i64);
    let num = &qb(3 * ni - 3, ni + ki) * &qb(ki - 1, ni - 2);
    Ok(poly_exact_div(&num, &q_integer(n - 1))?)
}

/// The same q-analogue written with `[k-1, k-n+1]_q` as its second factor.
pub fn qpoly_connected_alt(n: usize, k: usize) -> Result<IntPoly, FormulaError> {
    if !in_connected_range(n, k) {
        return Ok(IntPoly::zero());
    }
    let (ni, ki) = (n as i64, k as i64);
    let num = &qb(3 * ni - 3, ni + ki) * &qb(ki - 1, ki - ni + 1);
    Ok(poly_exact_div(&num, &q_integer(n - 1))?)
}

fn check_order(n: usize, d: usize) -> Result<(), FormulaError> {
    if d == 0 || n % d != 0 {
        Err(FormulaError::InvalidOrder { n, d })
    } else {
        Ok(())
    }
}

/// `c(n, k; omega)` for a primitive `d`-th root of unity `omega`.
pub fn connected_at_root(n: usize, k: usize, d: usize) -> Result<BigInt, FormulaError> {
    check_order(n, d)?;
    eval_at_root(&qpoly_connected(n, k)?, d)
        .to_integer()
        .ok_or(FormulaError::NotRationalInteger { name: "C", n, k, d })
}

/// Half-turn value for even `n` and odd `k`, with `n' = n/2`, `k' = (k+1)/2`:
/// `C(3n'-2, n'+k'-1) C(k'-1, n'-1)`.
pub fn closed_s2_odd(n: usize, k: usize) -> BigInt {
    if n % 2 != 0 || k % 2 != 1 || n == 0 {
        return BigInt::zero();
    }
    let (np, kp) = ((n / 2) as i64, ((k + 1) / 2) as i64);
    choose(3 * np - 2, np + kp - 1) * choose(kp - 1, np - 1)
}

/// Half-turn value for even `n` and even `k`:
/// `C((3n-4)/2, (n+k)/2) C((k-2)/2, (n-2)/2)`.
pub fn closed_s2_even(n: usize, k: usize) -> BigInt {
    if n % 2 != 0 || k % 2 != 0 || n == 0 || k == 0 {
        return BigInt::zero();
    }
    let (n, k) = (n as i64, k as i64);
    choose((3 * n - 4) / 2, (n + k) / 2) * choose((k - 2) / 2, (n - 2) / 2)
}

/// `a(n, k) = C(3n-1, n+k) C(k-1, n-1)`: connected graphs on `2n` vertices
/// fixed by the half-turn with `k` edge orbits.
pub fn closed_a(n: usize, k: usize) -> BigInt {
    if n == 0 || k == 0 {
        return BigInt::zero();
    }
    let (n, k) = (n as i64, k as i64);
    choose(3 * n - 1, n + k) * choose(k - 1, n - 1)
}

/// `d(n, k) = 2/(n-2) C(3n-5, n+k) C(k-1, n-3)`.
pub fn closed_d(n: usize, k: usize) -> BigInt {
    if n < 3 || k == 0 {
        return BigInt::zero();
    }
    let (n, k) = (n as i64, k as i64);
    let v = 2 * choose(3 * n - 5, n + k) * choose(k - 1, n - 3);
    exact(v, n - 2, || format!("d({n},{k})")).expect("two-component counts are integers")
}

/// `f(m, j)`, the count of connected graphs containing the chord `{1, m}`,
/// obtained by back-solving `s_2(2m-2, 2j-1) = (m-1) f(m, j)`.
pub fn closed_f(m: usize, j: usize) -> Result<BigInt, FormulaError> {
    if m < 2 || j == 0 {
        return Ok(BigInt::zero());
    }
    let s = closed_s2_odd(2 * m - 2, 2 * j - 1);
    exact(s, m as i64 - 1, || format!("f({m},{j})"))
}

/// Value for rotation of order `d >= 3`: zero unless `d | k`, otherwise
/// `C(3n'-1, n'+k') C(k'-1, n'-1)` with `n' = n/d`, `k' = k/d`.
pub fn closed_sd(n: usize, k: usize, d: usize) -> Result<BigInt, FormulaError> {
    check_order(n, d)?;
    if k % d != 0 {
        return Ok(BigInt::zero());
    }
    Ok(closed_a(n / d, k / d))
}

/// `a(n, k)` from the composition sum over inner polygons,
/// `sum_m sum (n_m - 1) f(n_m, k_m) prod_{i<m} f(n_i, k_i)` with
/// `n_1 + ... + n_m = n + m` and `k_1 + ... + k_m = k`, using `f` as given.
pub fn a_convolution_with<F: FnMut(usize, usize) -> BigInt>(n: usize, k: usize, mut f: F) -> BigInt {
    if n == 0 || k == 0 {
        return BigInt::zero();
    }
    // every part has n_i >= 2, hence n_i <= n + 1
    let max_part = n + 1;
    let mut table = vec![vec![BigInt::zero(); k + 1]; max_part + 1];
    for (a, row) in table.iter_mut().enumerate().skip(2) {
        for (b, v) in row.iter_mut().enumerate() {
            *v = f(a, b);
        }
    }
    let width = 2 * n + 1;
    // prefix[s][t]: sum over sequences of the current length with sizes summing
    // to s and edges summing to t
    let mut prefix = vec![vec![BigInt::zero(); k + 1]; width + 1];
    prefix[0][0] = BigInt::one();
    let mut total = BigInt::zero();
    for m in 1..=n {
        let target = n + m;
        for (s, row) in prefix.iter().enumerate() {
            if s >= target || target - s > max_part {
                continue;
            }
            let a = target - s;
            for (t, pv) in row.iter().enumerate() {
                if pv.is_zero() {
                    continue;
                }
                let fv = &table[a][k - t];
                if !fv.is_zero() {
                    total += pv * fv * BigInt::from(a - 1);
                }
            }
        }
        let mut next = vec![vec![BigInt::zero(); k + 1]; width + 1];
        for (s, row) in prefix.iter().enumerate() {
            for (t, pv) in row.iter().enumerate() {
                if pv.is_zero() {
                    continue;
                }
                for a in 2..=max_part {
                    if s + a > width {
                        break;
                    }
                    for b in 0..=k - t {
                        let fv = &table[a][b];
                        if !fv.is_zero() {
                            next[s + a][t + b] += pv * fv;
                        }
                    }
                }
            }
        }
        prefix = next;
    }
    total
}

/// [`a_convolution_with`] fed by enumerated `f(n, k)` values.
pub fn a_convolution(n: usize, k: usize) -> BigInt {
    a_convolution_with(n, k, |a, b| BigInt::from(count_with_edge_1n(a, b)))
}

/// Closed form of the z-coefficient `[z^{n-2} w^k] y`:
/// `1/(n-2) C(3n-6, n+k-1) C(k-1, n-3)`.
pub fn y_coefficient(n: usize, k: usize) -> BigRational {
    if n < 3 {
        return BigRational::zero();
    }
    let (n, k) = (n as i64, k as i64);
    BigRational::new(choose(3 * n - 6, n + k - 1) * choose(k - 1, n - 3), BigInt::from(n - 2))
}

/// Closed form of `[z^{n-2} w^k] y^2`: `2/(n-2) C(3n-6, n+k) C(k-1, n-3)`.
pub fn y_squared_coefficient(n: usize, k: usize) -> BigRational {
    if n < 3 {
        return BigRational::zero();
    }
    let (n, k) = (n as i64, k as i64);
    BigRational::new(2 * choose(3 * n - 6, n + k) * choose(k - 1, n - 3), BigInt::from(n - 2))
}

/// A q-analogue `numerator / denominator`, with the quotient when the division
/// is exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QFormula {
    pub name: &'static str,
    pub numerator: IntPoly,
    pub denominator: IntPoly,
    pub quotient: Option<IntPoly>,
}

impl QFormula {
    fn new(name: &'static str, numerator: IntPoly, denominator: IntPoly) -> Self {
        let quotient = poly_exact_div(&numerator, &denominator).ok();
        QFormula { name, numerator, denominator, quotient }
    }

    /// Value at `q = 1`.
    pub fn at_one(&self) -> Result<BigInt, FormulaError> {
        self.at_root(1)?
            .to_integer()
            .ok_or_else(|| FormulaError::NonIntegerResult(format!("{} at q=1", self.name)))
    }

    /// Division first; the limit is taken only when the quotient is not a
    /// polynomial.
    pub fn at_root(&self, d: usize) -> Result<CycloValue, FormulaError> {
        match &self.quotient {
            Some(p) => Ok(eval_at_root(p, d)),
            None => Ok(eval_limit_at_root(&self.numerator, &self.denominator, d)?),
        }
    }
}

/// Closed-form count for a family. The meaning of `k` depends on the family:
/// edges for connected graphs, dissections (diagonals) and arbitrary graphs;
/// ignored for trees, forests and partitions, whose parameter lives in the
/// [`Family`] value.
pub fn family_count(family: Family, n: usize, k: usize) -> BigInt {
    let ni = n as i64;
    match family {
        Family::Connected => {
            if n == 1 {
                return BigInt::from(u8::from(k == 0));
            }
            count_connected(n, k)
        }
        Family::Tree => {
            if n == 0 {
                return BigInt::zero();
            }
            exact(choose(3 * ni - 3, ni - 1), 2 * ni - 1, || format!("T({n})")).expect("tree counts are integers")
        }
        Family::Forest(c) => {
            if c == 0 || c > n {
                return BigInt::zero();
            }
            let ci = c as i64;
            let v = choose(ni, ci - 1) * choose(3 * ni - 2 * ci - 1, ni - ci);
            exact(v, 2 * ni - ci, || format!("F({n},{c})")).expect("forest counts are integers")
        }
        Family::Dissection => {
            if n < 3 || k + 3 > n {
                return BigInt::zero();
            }
            let ki = k as i64;
            let v = choose(ni - 3, ki) * choose(ni + ki - 1, ki);
            exact(v, ki + 1, || format!("D({n},{k})")).expect("dissection counts are integers")
        }
        Family::Partition(b) => {
            if b == 0 || b > n {
                return BigInt::zero();
            }
            let kp = (n - b) as i64;
            let v = choose(ni, kp) * choose(ni, kp + 1);
            exact(v, ni, || format!("P({n},{kp})")).expect("partition counts are integers")
        }
        Family::AnyGraph => {
            if n == 1 {
                return BigInt::from(u8::from(k == 0));
            }
            if n == 0 {
                return BigInt::zero();
            }
            let ki = k as i64;
            let v: BigInt = (0..=ni - 2)
                .map(|j| choose(ni - 1, ki - j) * choose(ni - 1, j + 1) * choose(ni - 2 + j, ni - 2))
                .sum();
            exact(v, ni - 1, || format!("G({n},{k})")).expect("graph counts are integers")
        }
    }
}

/// The q-analogue of [`family_count`], as numerator and denominator.
pub fn family_qpoly(family: Family, n: usize, k: usize) -> QFormula {
    let ni = n as i64;
    let zero = || QFormula::new("0", IntPoly::zero(), IntPoly::one());
    match family {
        Family::Connected => {
            if n == 1 {
                return QFormula::new("C", if k == 0 { IntPoly::one() } else { IntPoly::zero() }, IntPoly::one());
            }
            if !in_connected_range(n, k) {
                return zero();
            }
            let ki = k as i64;
            QFormula::new("C", &qb(3 * ni - 3, ni + ki) * &qb(ki - 1, ni - 2), q_integer(n - 1))
        }
        Family::Tree => {
            if n == 0 {
                return zero();
            }
            QFormula::new("T", qb(3 * ni - 3, ni - 1), q_integer(2 * n - 1))
        }
        Family::Forest(c) => {
            if c == 0 || c > n {
                return zero();
            }
            let ci = c as i64;
            QFormula::new(
                "F",
                &qb(ni, ci - 1) * &qb(3 * ni - 2 * ci - 1, ni - ci),
                q_integer(2 * n - c),
            )
        }
        Family::Dissection => {
            if n < 3 || k + 3 > n {
                return zero();
            }
            let ki = k as i64;
            QFormula::new("D", &qb(ni - 3, ki) * &qb(ni + ki - 1, ki), q_integer(k + 1))
        }
        Family::Partition(b) => {
            if b == 0 || b > n {
                return zero();
            }
            let kp = n - b;
            let num = (&qb(ni, kp as i64) * &qb(ni, kp as i64 + 1)).shift(kp * (kp + 1));
            QFormula::new("P", num, q_integer(n))
        }
        Family::AnyGraph => {
            if n == 1 {
                return QFormula::new("G", if k == 0 { IntPoly::one() } else { IntPoly::zero() }, IntPoly::one());
            }
            if n == 0 {
                return zero();
            }
            let ki = k as i64;
            let mut num = IntPoly::zero();
            for j in 0..=ni - 2 {
                let term = &(&qb(ni - 1, ki - j) * &qb(ni - 1, j + 1)) * &qb(ni - 2 + j, ni - 2);
                if term.is_zero() {
                    continue;
                }
                let e = j * (j + ni - ki + 2);
                assert!(e >= 0, "nonzero term with negative q-exponent");
                num = &num + &term.shift(e as usize);
            }
            QFormula::new("G", num, q_integer(n - 1))
        }
    }
}
