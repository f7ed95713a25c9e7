//! Non-crossing graphs on `1..=n` placed on a circle, the rotation action, and
//! exhaustive counting of family members fixed by a rotation.

mod count;
mod partition;
mod space;
mod stream;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use count::{
    count_antipodal_pairs, count_fixed, count_two_components_separated, count_with_edge_1n, enumerate_fixed,
    FixedCounts,
};
pub use partition::{enumerate_partitions, NcPartition};
pub use stream::{enumerate, enumerate_graphs, GraphStream, NcObject};

pub(crate) use space::{ChordSpace, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("rotation order {d} does not divide {n}")]
    InvalidOrder { n: usize, d: usize },
    #[error("chord {0}-{1} is not a pair of distinct vertices in range")]
    InvalidChord(usize, usize),
    #[error("chords {0} and {1} cross")]
    Crossing(Chord, Chord),
    #[error("duplicate chord {0}")]
    Duplicate(Chord),
    #[error("at most {MAX_VERTICES} vertices are supported, got {0}")]
    TooLarge(usize),
    #[error("parse error: {0}")]
    Parse(String),
}

/// An edge `{a, b}` between circle vertices, stored with `a < b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Chord {
    a: usize,
    b: usize,
}

impl Chord {
    /// Normalizes the endpoint order. Panics on a loop.
    pub fn new(x: usize, y: usize) -> Self {
        assert_ne!(x, y, "a chord needs two distinct endpoints");
        Chord { a: x.min(y), b: x.max(y) }
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn has_endpoint(&self, v: usize) -> bool {
        self.a == v || self.b == v
    }

    /// Cyclic distance between the endpoints on an `n`-cycle.
    pub fn length(&self, n: usize) -> usize {
        let l = self.b - self.a;
        l.min(n - l)
    }

    /// Rotate both endpoints by `steps` positions on an `n`-cycle.
    pub fn rotate(&self, n: usize, steps: i64) -> Chord {
        let r = |v: usize| ((v as i64 - 1 + steps).rem_euclid(n as i64)) as usize + 1;
        Chord::new(r(self.a), r(self.b))
    }
}

impl fmt::Display for Chord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.a, self.b)
    }
}

impl FromStr for Chord {
    type Err = GraphError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (x, y) = s
            .split_once('-')
            .ok_or_else(|| GraphError::Parse(format!("expected a-b, got {s:?}")))?;
        let parse = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|e| GraphError::Parse(format!("{t:?}: {e}")))
        };
        let (x, y) = (parse(x)?, parse(y)?);
        if x == y {
            return Err(GraphError::InvalidChord(x, y));
        }
        Ok(Chord::new(x, y))
    }
}

/// True iff the endpoints strictly interleave around the circle. Chords that
/// share an endpoint never cross.
pub fn crosses(e1: &Chord, e2: &Chord) -> bool {
    let (a, b, c, d) = (e1.a, e1.b, e2.a, e2.b);
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

/// A set of pairwise non-crossing chords on vertices `1..=n`, sorted.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct NcGraph {
    n: usize,
    edges: Vec<Chord>,
}

impl NcGraph {
    /// Validates range, duplicates and crossings; sorts the edges.
    pub fn new(n: usize, mut edges: Vec<Chord>) -> Result<Self, GraphError> {
        for e in &edges {
            if e.a < 1 || e.b > n {
                return Err(GraphError::InvalidChord(e.a, e.b));
            }
        }
        edges.sort();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::Duplicate(w[0]));
        }
        for (i, e) in edges.iter().enumerate() {
            if let Some(f) = edges[i + 1..].iter().find(|f| crosses(e, f)) {
                return Err(GraphError::Crossing(*e, *f));
            }
        }
        Ok(NcGraph { n, edges })
    }

    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut edges = Vec::with_capacity(pairs.len());
        for &(x, y) in pairs {
            if x == y {
                return Err(GraphError::InvalidChord(x, y));
            }
            edges.push(Chord::new(x, y));
        }
        Self::new(n, edges)
    }

    /// For callers that already hold sorted, valid chords.
    pub(crate) fn from_sorted_unchecked(n: usize, edges: Vec<Chord>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        NcGraph { n, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Chord] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, x: usize, y: usize) -> bool {
        x != y && self.edges.binary_search(&Chord::new(x, y)).is_ok()
    }

    /// Relabel every vertex `i` as `((i - 1 + steps) mod n) + 1`.
    pub fn rotate(&self, steps: i64) -> NcGraph {
        let mut edges: Vec<Chord> = self.edges.iter().map(|e| e.rotate(self.n, steps)).collect();
        edges.sort();
        NcGraph { n: self.n, edges }
    }

    /// Connected components; an isolated vertex is a component of its own.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..=self.n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut x = x;
            while p[x] != r {
                let nx = p[x];
                p[x] = r;
                x = nx;
            }
            r
        }
        for e in &self.edges {
            let (ra, rb) = (find(&mut parent, e.a), find(&mut parent, e.b));
            parent[ra.max(rb)] = ra.min(rb);
        }
        let mut comps: Vec<Vec<usize>> = Vec::new();
        let mut root_slot = vec![usize::MAX; self.n + 1];
        for v in 1..=self.n {
            let r = find(&mut parent, v);
            if root_slot[r] == usize::MAX {
                root_slot[r] = comps.len();
                comps.push(Vec::new());
            }
            comps[root_slot[r]].push(v);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Acyclic with exactly one component.
    pub fn is_spanning_tree(&self) -> bool {
        self.edges.len() + 1 == self.n && self.is_connected()
    }
}

impl fmt::Display for NcGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={};", self.n)?;
        for e in &self.edges {
            write!(f, " {e}")?;
        }
        Ok(())
    }
}

impl FromStr for NcGraph {
    type Err = GraphError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (head, tail) = s
            .split_once(';')
            .ok_or_else(|| GraphError::Parse("missing ';' after n=N".into()))?;
        let n = head
            .trim()
            .strip_prefix("n=")
            .and_then(|t| t.trim().parse::<usize>().ok())
            .ok_or_else(|| GraphError::Parse(format!("bad header {head:?}")))?;
        let edges = tail
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<Vec<Chord>, _>>()?;
        NcGraph::new(n, edges)
    }
}

/// The graph families whose members are counted and enumerated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    /// One connected component.
    Connected,
    /// Connected with `n - 1` edges.
    Tree,
    /// Acyclic with the given number of components.
    Forest(usize),
    /// Every edge is a diagonal; polygon sides are never stored.
    Dissection,
    /// Non-crossing set partitions with the given number of blocks.
    Partition(usize),
    /// Any non-crossing graph.
    AnyGraph,
}

impl Family {
    pub fn is_graph_family(&self) -> bool {
        !matches!(self, Family::Partition(_))
    }

    /// Membership from precomputed statistics of a graph on `n` vertices.
    pub(crate) fn accepts(&self, n: usize, edges: usize, comps: usize, sides: bool) -> bool {
        match *self {
            Family::Connected => comps == 1,
            Family::Tree => comps == 1 && edges + 1 == n,
            Family::Forest(c) => comps == c && edges + c == n,
            Family::Dissection => !sides,
            Family::AnyGraph => true,
            Family::Partition(_) => false,
        }
    }

    pub fn accepts_graph(&self, g: &NcGraph) -> bool {
        let n = g.n();
        let sides = g.edges().iter().any(|e| e.length(n) == 1);
        self.accepts(n, g.edge_count(), g.components().len(), sides)
    }
}
