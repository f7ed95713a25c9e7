//! Brute-force reference implementation, written without any code from the
//! library: plain vectors of chords, pairwise crossing tests, union-find,
//! i128 polynomial arithmetic.

#![allow(dead_code)]

pub type Edge = (usize, usize);

pub fn chords(n: usize) -> Vec<Edge> {
    let mut out = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            out.push((a, b));
        }
    }
    out
}

pub fn cross(e: Edge, f: Edge) -> bool {
    let (a, b) = e;
    let (c, d) = f;
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

/// Every non-crossing graph on `n` points (include/exclude over all chords).
pub fn all_graphs(n: usize) -> Vec<Vec<Edge>> {
    fn go(cs: &[Edge], i: usize, cur: &mut Vec<Edge>, out: &mut Vec<Vec<Edge>>) {
        if i == cs.len() {
            out.push(cur.clone());
            return;
        }
        go(cs, i + 1, cur, out);
        if cur.iter().all(|&e| !cross(e, cs[i])) {
            cur.push(cs[i]);
            go(cs, i + 1, cur, out);
            cur.pop();
        }
    }
    let cs = chords(n);
    let mut out = Vec::new();
    go(&cs, 0, &mut Vec::new(), &mut out);
    out
}

fn find(p: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while p[r] != r {
        r = p[r];
    }
    p[x] = r;
    r
}

/// Union-find labels (root of each vertex, 1-based vertices).
pub fn roots(n: usize, g: &[Edge]) -> Vec<usize> {
    let mut p: Vec<usize> = (0..=n).collect();
    for &(a, b) in g {
        let (ra, rb) = (find(&mut p, a), find(&mut p, b));
        p[ra] = rb;
    }
    (0..=n).map(|v| find(&mut p, v)).collect()
}

pub fn components(n: usize, g: &[Edge]) -> usize {
    let r = roots(n, g);
    (1..=n).filter(|&v| r[v] == v).count()
}

pub fn rotate(n: usize, g: &[Edge], s: usize) -> Vec<Edge> {
    let mut out: Vec<Edge> = g
        .iter()
        .map(|&(a, b)| {
            let (x, y) = ((a - 1 + s) % n + 1, (b - 1 + s) % n + 1);
            (x.min(y), x.max(y))
        })
        .collect();
    out.sort();
    out
}

pub fn fixed(n: usize, g: &[Edge], d: usize) -> bool {
    let mut s = g.to_vec();
    s.sort();
    rotate(n, g, n / d) == s
}

pub fn is_side(n: usize, e: Edge) -> bool {
    e.1 - e.0 == 1 || (e.0 == 1 && e.1 == n)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fam {
    Connected,
    Tree,
    Forest(usize),
    Dissection,
    Graph,
}

pub fn accepts(f: Fam, n: usize, g: &[Edge]) -> bool {
    let c = components(n, g);
    match f {
        Fam::Connected => c == 1,
        Fam::Tree => c == 1 && g.len() + 1 == n,
        Fam::Forest(k) => c == k && g.len() + k == n,
        Fam::Dissection => g.iter().all(|&e| !is_side(n, e)),
        Fam::Graph => true,
    }
}

/// Members of `f` with `k` edges, fixed by rotation by `n/d`.
pub fn count(f: Fam, n: usize, k: usize, d: usize) -> u64 {
    all_graphs(n)
        .iter()
        .filter(|g| g.len() == k && accepts(f, n, g) && fixed(n, g, d))
        .count() as u64
}

pub fn count_f(n: usize, k: usize) -> u64 {
    all_graphs(n)
        .iter()
        .filter(|g| g.len() == k && g.contains(&(1, n)) && components(n, g) == 1)
        .count() as u64
}

pub fn count_d(n: usize, k: usize) -> u64 {
    all_graphs(n)
        .iter()
        .filter(|g| {
            let r = roots(n, g);
            g.len() == k && components(n, g) == 2 && r[1] != r[n]
        })
        .count() as u64
}

/// Connected half-turn symmetric graphs on `2n` points with `k` orbits.
pub fn count_pairs(n: usize, k: usize) -> u64 {
    let m = 2 * n;
    all_graphs(m)
        .iter()
        .filter(|g| {
            let diam = g.iter().filter(|&&(a, b)| b - a == n).count();
            (g.len() + diam) / 2 == k && components(m, g) == 1 && fixed(m, g, 2)
        })
        .count() as u64
}

/// Non-crossing partitions of `{1..n}` as block-label vectors.
pub fn nc_partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, cur: &mut Vec<usize>, max: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for l in 0..=max + 1 {
            cur.push(l);
            go(n, cur, max.max(l), out);
            cur.pop();
        }
    }
    let mut all = Vec::new();
    if n > 0 {
        go(n, &mut vec![0], 0, &mut all);
    }
    all.retain(|p| {
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    for d in c + 1..n {
                        if p[a] == p[c] && p[b] == p[d] && p[a] != p[b] {
                            return false;
                        }
                    }
                }
            }
        }
        true
    });
    all
}

pub fn blocks(p: &[usize]) -> usize {
    p.iter().max().map_or(0, |m| m + 1)
}

/// Partition with `b` blocks fixed by rotation by `n/d`.
pub fn count_partitions(n: usize, b: usize, d: usize) -> u64 {
    let s = n / d;
    nc_partitions(n)
        .iter()
        .filter(|p| {
            if blocks(p) != b {
                return false;
            }
            // i and j share a block iff i+s and j+s do
            (0..n).all(|i| (0..n).all(|j| (p[i] == p[j]) == (p[(i + s) % n] == p[(j + s) % n])))
        })
        .count() as u64
}

pub fn binom(n: i64, k: i64) -> i128 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: i128 = 1;
    for i in 0..k {
        r = r * (n - i) as i128 / (i + 1) as i128;
    }
    r
}

pub type Poly = Vec<i128>;

pub fn trim(mut p: Poly) -> Poly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

pub fn mul(a: &[i128], b: &[i128]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

/// Quotient and remainder by a monic divisor.
pub fn divmod(a: &[i128], b: &[i128]) -> (Poly, Poly) {
    let mut r = trim(a.to_vec());
    let b = trim(b.to_vec());
    assert_eq!(b.last(), Some(&1), "monic divisor");
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![0; r.len() - b.len() + 1];
    for i in (0..q.len()).rev() {
        let c = r[i + b.len() - 1];
        q[i] = c;
        for (j, y) in b.iter().enumerate() {
            r[i + j] -= c * y;
        }
    }
    (trim(q), trim(r))
}

pub fn qint(n: usize) -> Poly {
    vec![1; n]
}

pub fn qfact(n: usize) -> Poly {
    (1..=n).fold(vec![1], |acc, i| mul(&acc, &qint(i)))
}

pub fn qbinom(n: i64, k: i64) -> Poly {
    if k < 0 || n < 0 || k > n {
        return Vec::new();
    }
    let (n, k) = (n as usize, k as usize);
    let (q, r) = divmod(&qfact(n), &mul(&qfact(k), &qfact(n - k)));
    assert!(r.is_empty());
    q
}

pub fn cyclotomic(d: usize) -> Poly {
    let mut p = vec![0; d + 1];
    p[0] = -1;
    p[d] = 1;
    for e in (1..d).filter(|e| d % e == 0) {
        let (q, r) = divmod(&p, &cyclotomic(e));
        assert!(r.is_empty());
        p = q;
    }
    p
}

/// `p(omega)` for a primitive `d`-th root of unity, when it is an integer.
pub fn at_root(p: &[i128], d: usize) -> Option<i128> {
    let (_, r) = divmod(p, &cyclotomic(d));
    match r.len() {
        0 => Some(0),
        1 => Some(r[0]),
        _ => None,
    }
}

/// `c(n, k; q)` as an exact quotient.
pub fn connected_qpoly(n: usize, k: usize) -> Poly {
    let (n, k) = (n as i64, k as i64);
    let num = mul(&qbinom(3 * n - 3, n + k), &qbinom(k - 1, n - 2));
    let (q, r) = divmod(&num, &qint(n as usize - 1));
    assert!(r.is_empty(), "c(n,k;q) is a polynomial");
    q
}

pub fn connected_formula(n: usize, k: usize) -> i128 {
    let (n, k) = (n as i64, k as i64);
    binom(3 * n - 3, n + k) * binom(k - 1, n - 2) / (n as i128 - 1)
}
