//! Fixed-point counters.

use super::partition::enumerate_partitions;
use super::{ChordSpace, Family, GraphError, NcGraph, MAX_VERTICES};

fn check(n: usize, d: usize) -> Result<(), GraphError> {
    if n > MAX_VERTICES {
        return Err(GraphError::TooLarge(n));
    }
    if d == 0 || n % d != 0 {
        return Err(GraphError::InvalidOrder { n, d });
    }
    Ok(())
}

/// Number of members of `family` with `k` edges on `n` vertices fixed by the
/// rotation of order `d` (rotation by `n / d` positions).
///
/// `k` is ignored for partitions, whose block count comes from the family.
pub fn count_fixed(n: usize, k: usize, d: usize, family: Family) -> Result<u64, GraphError> {
    check(n, d)?;
    let step = n / d;
    if let Family::Partition(blocks) = family {
        return Ok(enumerate_partitions(n, blocks)
            .filter(|p| &p.rotate(step as i64) == p)
            .count() as u64);
    }
    let space = ChordSpace::new(n);
    let sides = space.sides();
    let mut count = 0;
    space.for_each_fixed(step, k, |mask, edges, _| {
        if edges == k {
            let (comps, _) = space.components(mask);
            if family.accepts(n, edges, comps, mask & sides != 0) {
                count += 1;
            }
        }
    });
    Ok(count)
}

/// Members of a graph family with `k` edges fixed by the rotation of order
/// `d`, sorted lexicographically.
pub fn enumerate_fixed(n: usize, k: usize, d: usize, family: Family) -> Result<Vec<NcGraph>, GraphError> {
    check(n, d)?;
    if !family.is_graph_family() {
        return Ok(Vec::new());
    }
    let space = ChordSpace::new(n);
    let sides = space.sides();
    let mut out = Vec::new();
    space.for_each_fixed(n / d, k, |mask, edges, _| {
        if edges == k && family.accepts(n, edges, space.components(mask).0, mask & sides != 0) {
            out.push(space.graph(mask));
        }
    });
    out.sort();
    Ok(out)
}

/// `f(n, k)`: connected graphs with `k` edges that contain the chord `{1, n}`.
pub fn count_with_edge_1n(n: usize, k: usize) -> u64 {
    assert!((2..=MAX_VERTICES).contains(&n), "n out of range");
    let space = ChordSpace::new(n);
    let outer = 1u128 << space.index_of(super::Chord::new(1, n)).expect("chord exists");
    let mut count = 0;
    space.for_each_fixed(n, k, |mask, edges, _| {
        if edges == k && mask & outer != 0 && space.components(mask).0 == 1 {
            count += 1;
        }
    });
    count
}

/// `d(n, k)`: graphs with `k` edges and exactly two components, with vertices
/// 1 and `n` in different components.
pub fn count_two_components_separated(n: usize, k: usize) -> u64 {
    assert!((2..=MAX_VERTICES).contains(&n), "n out of range");
    let space = ChordSpace::new(n);
    let mut count = 0;
    space.for_each_fixed(n, k, |mask, edges, _| {
        if edges == k {
            let (comps, first) = space.components(mask);
            if comps == 2 && first >> (n - 1) & 1 == 0 {
                count += 1;
            }
        }
    });
    count
}

/// `a(n, k)`: connected graphs on `2n` vertices fixed by the half-turn whose
/// edges form exactly `k` half-turn orbits (a diameter is its own orbit).
pub fn count_antipodal_pairs(n: usize, k: usize) -> u64 {
    assert!((1..=MAX_VERTICES / 2).contains(&n), "n out of range");
    let space = ChordSpace::new(2 * n);
    let mut count = 0;
    space.for_each_fixed(n, 2 * k, |mask, _, orbits| {
        if orbits == k && space.components(mask).0 == 1 {
            count += 1;
        }
    });
    count
}

/// Counts of every graph fixed by one rotation, bucketed by edge count and
/// component count, computed in a single traversal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedCounts {
    n: usize,
    d: usize,
    /// `by_comps[e][c]`: fixed graphs with `e` edges and `c` components.
    by_comps: Vec<Vec<u64>>,
    /// `dissections[e]`: fixed graphs with `e` edges, none of them a side.
    dissections: Vec<u64>,
}

impl FixedCounts {
    pub fn compute(n: usize, d: usize) -> Result<Self, GraphError> {
        check(n, d)?;
        let space = ChordSpace::new(n);
        let sides = space.sides();
        let max_e = space.len();
        let mut by_comps = vec![vec![0u64; n + 1]; max_e + 1];
        let mut dissections = vec![0u64; max_e + 1];
        space.for_each_fixed(n / d, usize::MAX, |mask, edges, _| {
            let (comps, _) = space.components(mask);
            by_comps[edges][comps] += 1;
            if mask & sides == 0 {
                dissections[edges] += 1;
            }
        });
        Ok(FixedCounts { n, d, by_comps, dissections })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// Same value as [`count_fixed`] for graph families.
    pub fn get(&self, k: usize, family: Family) -> u64 {
        let n = self.n;
        let row = |e: usize| self.by_comps.get(e);
        match family {
            Family::Connected => row(k).map_or(0, |r| r[1]),
            Family::Tree => if k + 1 == n { row(k).map_or(0, |r| r[1]) } else { 0 },
            Family::Forest(c) => {
                if k + c == n {
                    row(k).and_then(|r| r.get(c).copied()).unwrap_or(0)
                } else {
                    0
                }
            }
            Family::Dissection => self.dissections.get(k).copied().unwrap_or(0),
            Family::AnyGraph => row(k).map_or(0, |r| r.iter().sum()),
            Family::Partition(_) => panic!("partition counts are not tabulated"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_count_examples() {
        assert_eq!(count_fixed(4, 3, 2, Family::Connected), Ok(4));
        assert_eq!(count_fixed(4, 4, 2, Family::Connected), Ok(1));
        assert_eq!(count_fixed(6, 6, 3, Family::Connected), Ok(5));
        assert_eq!(count_fixed(4, 5, 4, Family::Connected), Ok(0));
        assert_eq!(count_fixed(4, 3, 1, Family::Connected), Ok(12));
        assert_eq!(count_fixed(4, 5, 1, Family::Connected), Ok(2));
        assert_eq!(count_fixed(2, 1, 1, Family::Connected), Ok(1));
        assert_eq!(count_fixed(2, 1, 2, Family::Connected), Ok(1));
    }

    #[test]
    fn fixed_enumeration_matches_filtered_stream() {
        use crate::ncgraph::enumerate_graphs;
        for n in 2..=8 {
            for d in (1..=n).filter(|d| n % d == 0) {
                for k in n - 1..=2 * n - 3 {
                    let direct = enumerate_fixed(n, k, d, Family::Connected).unwrap();
                    let filtered: Vec<NcGraph> = enumerate_graphs(n, k, Family::Connected)
                        .filter(|g| g.rotate((n / d) as i64) == *g)
                        .collect();
                    assert_eq!(direct, filtered, "n={n} k={k} d={d}");
                }
            }
        }
    }

    #[test]
    fn invalid_order() {
        assert_eq!(count_fixed(6, 6, 4, Family::Connected), Err(GraphError::InvalidOrder { n: 6, d: 4 }));
        assert_eq!(count_fixed(6, 6, 0, Family::Connected), Err(GraphError::InvalidOrder { n: 6, d: 0 }));
        assert!(FixedCounts::compute(5, 2).is_err());
    }

    #[test]
    fn statistic_examples() {
        assert_eq!(count_with_edge_1n(3, 2), 2);
        assert_eq!(count_with_edge_1n(2, 1), 1);
        assert_eq!(count_with_edge_1n(4, 5), 2);
        assert_eq!(count_two_components_separated(4, 2), 7);
        assert_eq!(count_two_components_separated(3, 1), 2);
        assert_eq!(count_two_components_separated(3, 2), 0);
        assert_eq!(count_antipodal_pairs(2, 2), 5);
        assert_eq!(count_antipodal_pairs(2, 3), 2);
        assert_eq!(count_antipodal_pairs(1, 1), 1);
    }

    #[test]
    fn table_matches_direct_counts() {
        let families = [Family::Connected, Family::Tree, Family::Forest(2), Family::Forest(3), Family::Dissection, Family::AnyGraph];
        for n in 1..=7 {
            for d in (1..=n).filter(|d| n % d == 0) {
                let t = FixedCounts::compute(n, d).unwrap();
                for k in 0..=2 * n {
                    for f in families {
                        assert_eq!(t.get(k, f), count_fixed(n, k, d, f).unwrap(), "n={n} d={d} k={k} {f:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn antipodal_pairs_split_by_parity() {
        for n in 1..=4usize {
            for k in n..=2 * n - 1 {
                let direct = count_antipodal_pairs(n, k);
                let odd = count_fixed(2 * n, 2 * k - 1, 2, Family::Connected).unwrap();
                let even = count_fixed(2 * n, 2 * k, 2, Family::Connected).unwrap();
                assert_eq!(direct, odd + even, "n={n} k={k}");
            }
        }
    }
}
