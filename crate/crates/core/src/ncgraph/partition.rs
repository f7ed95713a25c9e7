use std::fmt;

use serde::{Deserialize, Serialize};

/// A non-crossing set partition of `1..=n`. Blocks are sorted internally and
/// ordered by their minimum.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct NcPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl NcPartition {
    /// `None` unless the blocks are disjoint, nonempty, cover `1..=n` and do
    /// not cross.
    pub fn new(n: usize, mut blocks: Vec<Vec<usize>>) -> Option<Self> {
        let mut owner = vec![usize::MAX; n + 1];
        for b in blocks.iter_mut() {
            if b.is_empty() {
                return None;
            }
            b.sort_unstable();
        }
        blocks.sort();
        for (i, b) in blocks.iter().enumerate() {
            for &v in b {
                if v == 0 || v > n || owner[v] != usize::MAX {
                    return None;
                }
                owner[v] = i;
            }
        }
        if owner[1..].contains(&usize::MAX) {
            return None;
        }
        // a < b < c < d with a, c in one block and b, d in another
        for a in 1..=n {
            for b in a + 1..=n {
                for c in b + 1..=n {
                    for d in c + 1..=n {
                        if owner[a] == owner[c] && owner[b] == owner[d] && owner[a] != owner[b] {
                            return None;
                        }
                    }
                }
            }
        }
        Some(NcPartition { n, blocks })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn rotate(&self, steps: i64) -> NcPartition {
        let n = self.n as i64;
        let mut blocks: Vec<Vec<usize>> = self
            .blocks
            .iter()
            .map(|b| {
                let mut r: Vec<usize> = b.iter().map(|&v| ((v as i64 - 1 + steps).rem_euclid(n)) as usize + 1).collect();
                r.sort_unstable();
                r
            })
            .collect();
        blocks.sort();
        NcPartition { n: self.n, blocks }
    }
}

impl fmt::Display for NcPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}; ", self.n)?;
        for b in &self.blocks {
            let items: Vec<String> = b.iter().map(ToString::to_string).collect();
            write!(f, "{{{}}}", items.join(","))?;
        }
        Ok(())
    }
}

/// All non-crossing partitions of `1..=n` with exactly `blocks` blocks, in
/// lexicographic order of their restricted growth strings.
pub fn enumerate_partitions(n: usize, blocks: usize) -> impl Iterator<Item = NcPartition> {
    let mut out = Vec::new();
    let mut assign = vec![0usize; n + 1];
    // per open block: its last element so far
    let mut last: Vec<usize> = Vec::new();
    let mut min: Vec<usize> = Vec::new();
    fn go(
        i: usize,
        n: usize,
        target: usize,
        assign: &mut [usize],
        last: &mut Vec<usize>,
        min: &mut Vec<usize>,
        out: &mut Vec<NcPartition>,
    ) {
        if last.len() > target || last.len() + (n + 1 - i) < target {
            return;
        }
        if i > n {
            let mut bl = vec![Vec::new(); last.len()];
            for v in 1..=n {
                bl[assign[v]].push(v);
            }
            out.push(NcPartition { n, blocks: bl });
            return;
        }
        for b in 0..last.len() {
            // joining b is safe iff nothing between last[b] and i belongs to
            // a block that started before last[b]
            let l = last[b];
            if (l + 1..i).all(|c| min[assign[c]] > l) {
                assign[i] = b;
                let prev = std::mem::replace(&mut last[b], i);
                go(i + 1, n, target, assign, last, min, out);
                last[b] = prev;
            }
        }
        assign[i] = last.len();
        last.push(i);
        min.push(i);
        go(i + 1, n, target, assign, last, min, out);
        last.pop();
        min.pop();
    }
    if n == 0 {
        if blocks == 0 {
            out.push(NcPartition { n: 0, blocks: Vec::new() });
        }
    } else {
        go(1, n, blocks, &mut assign, &mut last, &mut min, &mut out);
    }
    out.into_iter()
}
