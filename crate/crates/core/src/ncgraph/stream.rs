use std::fmt;

use serde::Serialize;

use super::partition::enumerate_partitions;
use super::{ChordSpace, Family, NcGraph, NcPartition};

/// Lazy lexicographic stream of the non-crossing graphs with exactly `k`
/// edges that belong to a graph family.
pub struct GraphStream {
    space: ChordSpace,
    family: Family,
    k: usize,
    chosen: Vec<usize>,
    mask: u128,
    blocked_stack: Vec<u128>,
    fresh: bool,
    done: bool,
}

impl GraphStream {
    fn new(n: usize, k: usize, family: Family) -> Self {
        let space = ChordSpace::new(n);
        let done = !family.is_graph_family() || k > space.len();
        GraphStream {
            space,
            family,
            k,
            chosen: Vec::with_capacity(k),
            mask: 0,
            blocked_stack: vec![0],
            fresh: true,
            done,
        }
    }

    fn blocked(&self) -> u128 {
        *self.blocked_stack.last().expect("stack holds a root entry")
    }

    fn push(&mut self, c: usize) {
        let b = self.blocked() | self.space.conflict(c);
        self.chosen.push(c);
        self.mask |= 1 << c;
        self.blocked_stack.push(b);
    }

    fn pop(&mut self) -> Option<usize> {
        let c = self.chosen.pop()?;
        self.mask &= !(1 << c);
        self.blocked_stack.pop();
        Some(c)
    }

    /// Move to the next compatible chord set of size `k`.
    fn advance(&mut self) -> bool {
        let m = self.space.len();
        let mut start = if self.fresh {
            self.fresh = false;
            0
        } else {
            match self.pop() {
                Some(c) => c + 1,
                None => return false,
            }
        };
        loop {
            if self.chosen.len() == self.k {
                return true;
            }
            let need = self.k - self.chosen.len();
            let blocked = self.blocked();
            let next = (start..m)
                .take_while(|&c| m - c >= need)
                .find(|&c| blocked >> c & 1 == 0);
            match next {
                Some(c) => {
                    self.push(c);
                    start = c + 1;
                }
                None => match self.pop() {
                    Some(c) => start = c + 1,
                    None => return false,
                },
            }
        }
    }
}

impl Iterator for GraphStream {
    type Item = NcGraph;

    fn next(&mut self) -> Option<NcGraph> {
        while !self.done {
            if !self.advance() {
                self.done = true;
                break;
            }
            let (comps, _) = self.space.components(self.mask);
            let sides = self.mask & self.space.sides() != 0;
            if self.family.accepts(self.space.n(), self.k, comps, sides) {
                return Some(self.space.graph(self.mask));
            }
        }
        None
    }
}

/// Graph-family members on `n` vertices with `k` edges, lexicographic by sorted
/// edge list. Empty for the partition family.
pub fn enumerate_graphs(n: usize, k: usize, family: Family) -> GraphStream {
    GraphStream::new(n, k, family)
}

/// Either kind of enumerated object.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum NcObject {
    Graph(NcGraph),
    Partition(NcPartition),
}

impl NcObject {
    pub fn rotate(&self, steps: i64) -> NcObject {
        match self {
            NcObject::Graph(g) => NcObject::Graph(g.rotate(steps)),
            NcObject::Partition(p) => NcObject::Partition(p.rotate(steps)),
        }
    }
}

impl fmt::Display for NcObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NcObject::Graph(g) => g.fmt(f),
            NcObject::Partition(p) => p.fmt(f),
        }
    }
}

/// Every member of `family` on `n` vertices with `k` edges; for partitions
/// `k` is ignored and the block count comes from the family.
pub fn enumerate(n: usize, k: usize, family: Family) -> Box<dyn Iterator<Item = NcObject>> {
    match family {
        Family::Partition(b) => Box::new(enumerate_partitions(n, b).map(NcObject::Partition)),
        _ => Box::new(enumerate_graphs(n, k, family).map(NcObject::Graph)),
    }
}
