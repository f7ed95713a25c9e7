//! Bitmask model of all chords on `n` vertices.
//!
//! Chords are indexed in lexicographic order of `(a, b)`, so a depth-first
//! search that adds chords by increasing index visits edge sets in
//! lexicographic order of their sorted edge lists.

use super::{crosses, Chord, NcGraph};

/// `C(16, 2) = 120` chords fit in a `u128`.
pub const MAX_VERTICES: usize = 16;

pub(crate) struct ChordSpace {
    n: usize,
    chords: Vec<Chord>,
    /// `conflict[i]` has bit `j` set iff chords `i` and `j` cross.
    conflict: Vec<u128>,
    /// Index of chord `i` rotated by one position.
    rot1: Vec<usize>,
    /// Chords that are polygon sides.
    sides: u128,
}

/// A rotation orbit of chords that do not cross one another.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Orbit {
    pub mask: u128,
    pub size: usize,
    pub conflict: u128,
}

pub(crate) fn bits(mut m: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

impl ChordSpace {
    pub fn new(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "at most {MAX_VERTICES} vertices supported");
        let mut chords = Vec::new();
        for a in 1..=n {
            for b in a + 1..=n {
                chords.push(Chord::new(a, b));
            }
        }
        let conflict = chords
            .iter()
            .map(|c| {
                chords
                    .iter()
                    .enumerate()
                    .filter(|(_, d)| crosses(c, d))
                    .fold(0u128, |m, (j, _)| m | 1 << j)
            })
            .collect();
        let space_idx = |c: Chord| chords.binary_search(&c).expect("rotated chord exists");
        let rot1 = chords.iter().map(|c| space_idx(c.rotate(n, 1))).collect();
        let sides = chords
            .iter()
            .enumerate()
            .filter(|(_, c)| c.length(n) == 1)
            .fold(0u128, |m, (j, _)| m | 1 << j);
        ChordSpace { n, chords, conflict, rot1, sides }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.chords.len()
    }

    #[cfg(test)]
    pub fn chord(&self, i: usize) -> Chord {
        self.chords[i]
    }

    pub fn conflict(&self, i: usize) -> u128 {
        self.conflict[i]
    }

    pub fn sides(&self) -> u128 {
        self.sides
    }

    pub fn index_of(&self, c: Chord) -> Option<usize> {
        self.chords.binary_search(&c).ok()
    }

    #[cfg(test)]
    pub fn mask_of(&self, g: &NcGraph) -> u128 {
        g.edges()
            .iter()
            .map(|&e| 1u128 << self.index_of(e).expect("edge within range"))
            .fold(0, |m, b| m | b)
    }

    pub fn graph(&self, mask: u128) -> NcGraph {
        NcGraph::from_sorted_unchecked(self.n, bits(mask).map(|i| self.chords[i]).collect())
    }

    /// Number of components and the vertex set (bitmask, vertex `v` at bit
    /// `v - 1`) of the component containing vertex 1.
    pub fn components(&self, mask: u128) -> (usize, u32) {
        let mut adj = [0u32; MAX_VERTICES];
        for i in bits(mask) {
            let c = self.chords[i];
            adj[c.a() - 1] |= 1 << (c.b() - 1);
            adj[c.b() - 1] |= 1 << (c.a() - 1);
        }
        let mut unseen: u32 = (1u32 << self.n) - 1;
        let mut comps = 0;
        let mut first = 0;
        while unseen != 0 {
            let v = unseen.trailing_zeros();
            let mut seen = 1u32 << v;
            let mut frontier = seen;
            while frontier != 0 {
                let mut next = 0;
                let mut f = frontier;
                while f != 0 {
                    let u = f.trailing_zeros() as usize;
                    f &= f - 1;
                    next |= adj[u];
                }
                frontier = next & !seen;
                seen |= frontier;
            }
            if comps == 0 {
                first = seen;
            }
            unseen &= !seen;
            comps += 1;
        }
        (comps, first)
    }

    /// Orbits of chords under rotation by `step` positions, dropping orbits
    /// whose chords cross each other. Sorted by smallest member.
    pub fn orbits(&self, step: usize) -> Vec<Orbit> {
        let mut seen = 0u128;
        let mut out = Vec::new();
        for i in 0..self.len() {
            if seen >> i & 1 == 1 {
                continue;
            }
            let mut mask = 0u128;
            let mut j = i;
            loop {
                mask |= 1 << j;
                for _ in 0..step {
                    j = self.rot1[j];
                }
                if j == i {
                    break;
                }
            }
            seen |= mask;
            let conflict = bits(mask).fold(0u128, |m, c| m | self.conflict[c]);
            if conflict & mask == 0 {
                out.push(Orbit { mask, size: mask.count_ones() as usize, conflict });
            }
        }
        out
    }

    /// Visit every non-crossing edge set fixed by rotation by `step` with at
    /// most `max_edges` edges. The visitor receives the mask, its edge count
    /// and the number of rotation orbits it is made of.
    pub fn for_each_fixed<F: FnMut(u128, usize, usize)>(&self, step: usize, max_edges: usize, mut visit: F) {
        let orbits = self.orbits(step);
        fn dfs<F: FnMut(u128, usize, usize)>(
            orbits: &[Orbit],
            start: usize,
            mask: u128,
            blocked: u128,
            edges: usize,
            count: usize,
            max_edges: usize,
            visit: &mut F,
        ) {
            visit(mask, edges, count);
            for (i, o) in orbits.iter().enumerate().skip(start) {
                if o.mask & blocked == 0 && edges + o.size <= max_edges {
                    dfs(orbits, i + 1, mask | o.mask, blocked | o.conflict, edges + o.size, count + 1, max_edges, visit);
                }
            }
        }
        dfs(&orbits, 0, 0, 0, 0, 0, max_edges, &mut visit);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lexicographic_indexing() {
        let s = ChordSpace::new(5);
        assert_eq!(s.len(), 10);
        assert_eq!(s.chord(0), Chord::new(1, 2));
        assert_eq!(s.chord(9), Chord::new(4, 5));
        assert_eq!(s.sides().count_ones(), 5);
    }

    #[test]
    fn four_vertex_diagonals_are_the_only_crossing() {
        let s = ChordSpace::new(4);
        let total: u32 = (0..s.len()).map(|i| s.conflict(i).count_ones()).sum();
        assert_eq!(total, 2);
    }

    #[test]
    fn component_counts() {
        let s = ChordSpace::new(6);
        assert_eq!(s.components(0), (6, 1));
        let g = NcGraph::from_pairs(6, &[(1, 2), (2, 6), (3, 4)]).unwrap();
        let (c, first) = s.components(s.mask_of(&g));
        assert_eq!(c, 3);
        assert_eq!(first, 0b100011);
    }

    #[test]
    fn half_turn_orbits_of_hexagon() {
        // 3 diameters plus 12 / 2 paired chords
        let s = ChordSpace::new(6);
        let orbits = s.orbits(3);
        assert_eq!(orbits.iter().filter(|o| o.size == 1).count(), 3);
        assert_eq!(orbits.iter().filter(|o| o.size == 2).count(), 6);
    }

    #[test]
    fn full_enumeration_counts_all_noncrossing_graphs() {
        // 1, 2, 8, 48, 352, 2880 graphs on 1..6 points
        let expected = [1u64, 2, 8, 48, 352, 2880];
        for (n, &e) in (1..=6).zip(&expected) {
            let s = ChordSpace::new(n);
            let mut c = 0;
            s.for_each_fixed(n, usize::MAX, |_, _, _| c += 1);
            assert_eq!(c, e, "n={n}");
        }
    }
}
