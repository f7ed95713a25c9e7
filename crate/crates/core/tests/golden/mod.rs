//! Golden constants, each recomputed by the brute-force oracle and by the
//! library.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use nccsp::algebra::{binomial, cyclotomic, eval_at_root, eval_limit_at_root, poly_exact_div, q_binomial, IntPoly};
use nccsp::formulas::{
    a_convolution, closed_a, closed_d, closed_f, closed_s2_even, closed_s2_odd, closed_sd, connected_at_root,
    count_connected, family_count, family_qpoly, qpoly_connected,
};
use nccsp::ncgraph::{
    count_antipodal_pairs, count_fixed, count_two_components_separated, count_with_edge_1n, Family,
};
use nccsp::series::{build_f, connected_gf, solve_y};

use super::oracle::{self as o, Fam};

pub struct Golden {
    pub name: &'static str,
    pub constant: i128,
    pub oracle: i128,
    pub library: i128,
}

impl Golden {
    pub fn ok(&self) -> bool {
        self.constant == self.oracle && self.oracle == self.library
    }
}

pub struct PolyGolden {
    pub name: &'static str,
    pub constant: Vec<i128>,
    pub oracle: Vec<i128>,
    pub library: Vec<i128>,
}

impl PolyGolden {
    pub fn ok(&self) -> bool {
        self.constant == self.oracle && self.oracle == self.library
    }
}

fn big(v: BigInt) -> i128 {
    v.to_i128().expect("fits in i128")
}

fn rat(v: BigRational) -> i128 {
    assert!(v.is_integer(), "{v} is not an integer");
    big(v.to_integer())
}

fn ip(p: &IntPoly) -> Vec<i128> {
    p.coeffs().iter().map(|c| c.to_i128().unwrap()).collect()
}

fn fixed(n: usize, k: usize, d: usize, f: Family) -> i128 {
    count_fixed(n, k, d, f).unwrap() as i128
}

fn root_int(p: &IntPoly, d: usize) -> i128 {
    big(eval_at_root(p, d).to_integer().expect("integer at root"))
}

pub fn scalars() -> Vec<Golden> {
    let g = |name, constant, oracle, library| Golden { name, constant, oracle, library };
    let one_plus_q2 = IntPoly::from_i64(&[1, 0, 1]);
    let c = connected_gf(8);
    let f = build_f(8);
    let y = solve_y(8);
    let c2 = c.mul(&c);
    let log = y.log1p().unwrap();
    let t4 = family_qpoly(Family::Tree, 4, 3).at_root(2).unwrap().to_integer().unwrap();
    let d525 = family_qpoly(Family::Dissection, 5, 2).at_root(5).unwrap().to_integer().unwrap();
    vec![
        g("binomial(9,7)", 36, o::binom(9, 7), big(binomial(9, 7))),
        g("1+q^2 at i", 0, o::at_root(&[1, 0, 1], 4).unwrap(), root_int(&one_plus_q2, 4)),
        g("1+q^2 at -1", 2, o::at_root(&[1, 0, 1], 2).unwrap(), root_int(&one_plus_q2, 2)),
        g(
            "limit (q^2-1)/(q-1) at 1",
            2,
            o::at_root(&o::divmod(&[-1, 0, 1], &[-1, 1]).0, 1).unwrap(),
            big(eval_limit_at_root(&IntPoly::from_i64(&[-1, 0, 1]), &IntPoly::from_i64(&[-1, 1]), 1).unwrap().to_integer().unwrap()),
        ),
        g("c(4,3)", 12, o::count(Fam::Connected, 4, 3, 1) as i128, big(count_connected(4, 3))),
        g("c(4,4)", 9, o::count(Fam::Connected, 4, 4, 1) as i128, big(count_connected(4, 4))),
        g("c(4,5)", 2, o::count(Fam::Connected, 4, 5, 1) as i128, big(count_connected(4, 5))),
        g("s_2(4,3)", 4, o::count(Fam::Connected, 4, 3, 2) as i128, fixed(4, 3, 2, Family::Connected)),
        g("s_2(4,4)", 1, o::count(Fam::Connected, 4, 4, 2) as i128, fixed(4, 4, 2, Family::Connected)),
        g("s_3(6,6)", 5, o::count(Fam::Connected, 6, 6, 3) as i128, fixed(6, 6, 3, Family::Connected)),
        g("s_4(4,5)", 0, o::count(Fam::Connected, 4, 5, 4) as i128, fixed(4, 5, 4, Family::Connected)),
        g("s_1(4,3)", 12, o::count(Fam::Connected, 4, 3, 1) as i128, fixed(4, 3, 1, Family::Connected)),
        g("s_1(4,5)", 2, o::count(Fam::Connected, 4, 5, 1) as i128, fixed(4, 5, 1, Family::Connected)),
        g("s_3(3,3)", 1, o::count(Fam::Connected, 3, 3, 3) as i128, big(closed_sd(3, 3, 3).unwrap())),
        g("closed s_3(6,6)", 5, o::count(Fam::Connected, 6, 6, 3) as i128, big(closed_sd(6, 6, 3).unwrap())),
        g("c(4,5) at -1", 2, o::count(Fam::Connected, 4, 5, 2) as i128, big(connected_at_root(4, 5, 2).unwrap())),
        g("c(4,5) at i", 0, o::count(Fam::Connected, 4, 5, 4) as i128, big(connected_at_root(4, 5, 4).unwrap())),
        g("closed s_2 odd (4,3)", 4, o::count(Fam::Connected, 4, 3, 2) as i128, big(closed_s2_odd(4, 3))),
        g("closed s_2 odd (4,5)", 2, o::count(Fam::Connected, 4, 5, 2) as i128, big(closed_s2_odd(4, 5))),
        g("closed s_2 even (4,4)", 1, o::count(Fam::Connected, 4, 4, 2) as i128, big(closed_s2_even(4, 4))),
        g("closed s_2 even (4,6)", 0, o::count(Fam::Connected, 4, 6, 2) as i128, big(closed_s2_even(4, 6))),
        g("closed s_2 even (6,8)", 3, o::count(Fam::Connected, 6, 8, 2) as i128, big(closed_s2_even(6, 8))),
        g("f(3,2)", 2, o::count_f(3, 2) as i128, count_with_edge_1n(3, 2) as i128),
        g("f(4,5)", 2, o::count_f(4, 5) as i128, count_with_edge_1n(4, 5) as i128),
        g("closed f(3,2)", 2, o::count_f(3, 2) as i128, big(closed_f(3, 2).unwrap())),
        g("closed f(4,5)", 2, o::count_f(4, 5) as i128, big(closed_f(4, 5).unwrap())),
        g("d(4,2)", 7, o::count_d(4, 2) as i128, count_two_components_separated(4, 2) as i128),
        g("d(3,1)", 2, o::count_d(3, 1) as i128, count_two_components_separated(3, 1) as i128),
        g("d(3,2)", 0, o::count_d(3, 2) as i128, count_two_components_separated(3, 2) as i128),
        g("d(4,3)", 2, o::count_d(4, 3) as i128, count_two_components_separated(4, 3) as i128),
        g("closed d(4,2)", 7, o::count_d(4, 2) as i128, big(closed_d(4, 2))),
        g("closed d(3,1)", 2, o::count_d(3, 1) as i128, big(closed_d(3, 1))),
        g("closed d(3,2)", 0, o::count_d(3, 2) as i128, big(closed_d(3, 2))),
        g("a(2,2)", 5, o::count_pairs(2, 2) as i128, count_antipodal_pairs(2, 2) as i128),
        g("a(2,3)", 2, o::count_pairs(2, 3) as i128, count_antipodal_pairs(2, 3) as i128),
        g("a(1,1)", 1, o::count_pairs(1, 1) as i128, count_antipodal_pairs(1, 1) as i128),
        g("closed a(2,2)", 5, o::count_pairs(2, 2) as i128, big(closed_a(2, 2))),
        g("closed a(2,3)", 2, o::count_pairs(2, 3) as i128, big(closed_a(2, 3))),
        g("composition sum a(2,2)", 5, o::count_pairs(2, 2) as i128, big(a_convolution(2, 2))),
        g("s_2(4,5) base case", 2, o::count(Fam::Connected, 4, 5, 2) as i128, fixed(4, 5, 2, Family::Connected)),
        g("T_4", 12, o::count(Fam::Tree, 4, 3, 1) as i128, big(family_count(Family::Tree, 4, 3))),
        g("T_8", 7752, o::binom(21, 7) / 15, big(family_count(Family::Tree, 8, 7))),
        g("D(5,2)", 5, o::count(Fam::Dissection, 5, 2, 1) as i128, big(family_count(Family::Dissection, 5, 2))),
        g("P(4, 2 blocks)", 6, o::count_partitions(4, 2, 1) as i128, big(family_count(Family::Partition(2), 4, 2))),
        g("F(4, 2 components)", 14, o::count(Fam::Forest(2), 4, 2, 1) as i128, big(family_count(Family::Forest(2), 4, 2))),
        g("G(3,2)", 3, o::count(Fam::Graph, 3, 2, 1) as i128, big(family_count(Family::AnyGraph, 3, 2))),
        g("T(4;q) at -1", o::count(Fam::Tree, 4, 3, 2) as i128, o::count(Fam::Tree, 4, 3, 2) as i128, big(t4)),
        g("D(5,2;q) at 5th root", o::count(Fam::Dissection, 5, 2, 5) as i128, o::count(Fam::Dissection, 5, 2, 5) as i128, big(d525)),
        g("[z^3 w^3] C", 1, o::count(Fam::Connected, 3, 3, 1) as i128, rat(c.coeff_at(3, 3))),
        g("[z^4 w^5] C", 2, o::count(Fam::Connected, 4, 5, 1) as i128, rat(c.coeff_at(4, 5))),
        g("[z^3 w^2] F", 2, o::count_f(3, 2) as i128, rat(f.coeff_at(3, 2))),
        g("2 [z^2 w^2] log(1+y)", 5, o::count_pairs(2, 2) as i128, rat(log.coeff_at(2, 2) * BigRational::from_integer(2.into()))),
        g("[z^4 w^2] C^2", 7, o::count_d(4, 2) as i128, rat(c2.coeff_at(4, 2))),
        g("[z^3 w^1] C^2", 2, o::count_d(3, 1) as i128, rat(c2.coeff_at(3, 1))),
    ]
}

pub fn polys() -> Vec<PolyGolden> {
    let g = |name, constant: &[i128], oracle, library| PolyGolden { name, constant: constant.to_vec(), oracle, library };
    let qb42 = q_binomial(4, 2);
    let cyclo3 = IntPoly::from_i64(&[1, 1, 1]);
    vec![
        g("[4,2]_q", &[1, 1, 2, 1, 1], o::qbinom(4, 2), ip(&qb42)),
        g(
            "[4,2]_q / [3]_q",
            &[1, 0, 1],
            o::divmod(&o::qbinom(4, 2), &[1, 1, 1]).0,
            ip(&poly_exact_div(&qb42, &cyclo3).unwrap()),
        ),
        g("Phi_6", &[1, -1, 1], o::cyclotomic(6), ip(&cyclotomic(6))),
        g("c(4,5;q)", &[1, 0, 1], o::connected_qpoly(4, 5), ip(&qpoly_connected(4, 5).unwrap())),
        g("c(3,3;q)", &[1], o::connected_qpoly(3, 3), ip(&qpoly_connected(3, 3).unwrap())),
    ]
}

/// Every fixed-point count of every graph family and of partitions for
/// `n <= n_max`, library against oracle. Returns the mismatches.
pub fn cross_check_counts(n_max: usize) -> (usize, Vec<String>) {
    let mut checked = 0;
    let mut bad = Vec::new();
    for n in 1..=n_max {
        let graphs = o::all_graphs(n);
        for d in (1..=n).filter(|d| n % d == 0) {
            let sym: Vec<&Vec<o::Edge>> = graphs.iter().filter(|g| o::fixed(n, g, d)).collect();
            let mut fams = vec![(Fam::Connected, Family::Connected), (Fam::Tree, Family::Tree), (Fam::Dissection, Family::Dissection), (Fam::Graph, Family::AnyGraph)];
            fams.extend((1..=n).map(|c| (Fam::Forest(c), Family::Forest(c))));
            for (of, lf) in fams {
                for k in 0..=2 * n {
                    let want = sym.iter().filter(|g| g.len() == k && o::accepts(of, n, g)).count() as u64;
                    let got = count_fixed(n, k, d, lf).unwrap();
                    checked += 1;
                    if got != want {
                        bad.push(format!("{lf:?} n={n} k={k} d={d}: library {got}, oracle {want}"));
                    }
                }
            }
            for b in 1..=n {
                let want = o::count_partitions(n, b, d);
                let got = count_fixed(n, 0, d, Family::Partition(b)).unwrap();
                checked += 1;
                if got != want {
                    bad.push(format!("partition n={n} blocks={b} d={d}: library {got}, oracle {want}"));
                }
            }
        }
        if n >= 2 {
            for k in 0..=2 * n {
                checked += 2;
                if count_with_edge_1n(n, k) != o::count_f(n, k) {
                    bad.push(format!("f({n},{k})"));
                }
                if count_two_components_separated(n, k) != o::count_d(n, k) {
                    bad.push(format!("d({n},{k})"));
                }
            }
        }
    }
    for n in 1..=(n_max / 2).min(4) {
        for k in 0..=2 * n + 1 {
            checked += 1;
            if count_antipodal_pairs(n, k) != o::count_pairs(n, k) {
                bad.push(format!("a({n},{k})"));
            }
        }
    }
    (checked, bad)
}

/// `c(n,k;q)` coefficients and its values at every `d | n`, library against
/// oracle, for `2 <= n <= n_max`.
pub fn cross_check_qpoly(n_max: usize) -> (usize, Vec<String>) {
    let mut checked = 0;
    let mut bad = Vec::new();
    for n in 2..=n_max {
        for k in n - 1..=2 * n - 3 {
            let want = o::connected_qpoly(n, k);
            let got = qpoly_connected(n, k).unwrap();
            checked += 1;
            if ip(&got) != want {
                bad.push(format!("c({n},{k};q)"));
            }
            for d in (1..=n).filter(|d| n % d == 0) {
                checked += 1;
                if o::at_root(&want, d) != Some(big(connected_at_root(n, k, d).unwrap())) {
                    bad.push(format!("c({n},{k};q) at order {d}"));
                }
            }
            checked += 1;
            if o::connected_formula(n, k) != big(count_connected(n, k)) {
                bad.push(format!("c({n},{k})"));
            }
        }
    }
    (checked, bad)
}
