//! Bijections between families of non-crossing objects.
//!
//! * Non-crossing spanning trees on `n` vertices and quadrangulations of the
//!   `2n`-gon: tree vertex `i` sits at polygon vertex `2i - 1`, and each tree
//!   edge is the odd-odd diagonal of one quadrilateral.
//! * Graphs fixed by a rotation of order `d` that contain a central polygon
//!   (a diameter when `d = 2`) fold to one sector on `n/d + 1` vertices.
//! * Graphs fixed by a rotation of order `d >= 3` without a central polygon
//!   fold to centrally symmetric graphs on `2n/d` vertices.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::ncgraph::{crosses, Chord, GraphError, NcGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error("malformed quadrangulation: {0}")]
    MalformedQuadrangulation(String),
    #[error("input is not a non-crossing spanning tree")]
    NotSpanningTree,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("the center lies in a polygon of graph edges")]
    CentralPolygonPresent,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn malformed(msg: impl Into<String>) -> BijectionError {
    BijectionError::MalformedQuadrangulation(msg.into())
}

fn violated(msg: impl Into<String>) -> BijectionError {
    BijectionError::PreconditionViolated(msg.into())
}

/// Faces of the `n`-gon cut by non-crossing diagonals. Each face is listed by
/// its vertices in increasing (= circular) order.
pub fn faces(n: usize, diagonals: &[Chord]) -> Vec<Vec<usize>> {
    fn split(poly: Vec<usize>, diags: &[Chord], out: &mut Vec<Vec<usize>>) {
        let Some((d, rest)) = diags.split_first() else {
            out.push(poly);
            return;
        };
        let inside = |v: usize| d.a() <= v && v <= d.b();
        let left: Vec<usize> = poly.iter().copied().filter(|&v| inside(v)).collect();
        let right: Vec<usize> = poly.iter().copied().filter(|&v| v <= d.a() || v >= d.b()).collect();
        let (l, r): (Vec<Chord>, Vec<Chord>) = rest.iter().partition(|c| inside(c.a()) && inside(c.b()));
        split(left, &l, out);
        split(right, &r, out);
    }
    let mut out = Vec::new();
    split((1..=n).collect(), diagonals, &mut out);
    out.sort();
    out
}

/// A subdivision of the `n2`-gon into quadrilaterals by non-crossing diagonals.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Quadrangulation {
    n2: usize,
    diagonals: Vec<Chord>,
}

impl Quadrangulation {
    pub fn new(n2: usize, mut diagonals: Vec<Chord>) -> Result<Self, BijectionError> {
        if n2 < 4 || n2 % 2 != 0 {
            return Err(malformed(format!("{n2}-gon cannot be quadrangulated")));
        }
        diagonals.sort();
        diagonals.dedup();
        for d in &diagonals {
            if d.b() > n2 || d.length(n2) < 2 {
                return Err(malformed(format!("{d} is not a diagonal of the {n2}-gon")));
            }
        }
        if diagonals.len() != n2 / 2 - 2 {
            return Err(malformed(format!("{} diagonals, expected {}", diagonals.len(), n2 / 2 - 2)));
        }
        for (i, d) in diagonals.iter().enumerate() {
            if let Some(e) = diagonals[i + 1..].iter().find(|e| crosses(d, e)) {
                return Err(malformed(format!("{d} crosses {e}")));
            }
        }
        if let Some(f) = faces(n2, &diagonals).iter().find(|f| f.len() != 4) {
            return Err(malformed(format!("face {f:?} is not a quadrilateral")));
        }
        Ok(Quadrangulation { n2, diagonals })
    }

    pub fn n2(&self) -> usize {
        self.n2
    }

    pub fn diagonals(&self) -> &[Chord] {
        &self.diagonals
    }

    pub fn faces(&self) -> Vec<Vec<usize>> {
        faces(self.n2, &self.diagonals)
    }

    pub fn rotate(&self, steps: i64) -> Quadrangulation {
        let mut diagonals: Vec<Chord> = self.diagonals.iter().map(|d| d.rotate(self.n2, steps)).collect();
        diagonals.sort();
        Quadrangulation { n2: self.n2, diagonals }
    }
}

impl fmt::Display for Quadrangulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n2={}; diag", self.n2)?;
        for d in &self.diagonals {
            write!(f, " {d}")?;
        }
        Ok(())
    }
}

impl FromStr for Quadrangulation {
    type Err = BijectionError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || BijectionError::Graph(GraphError::Parse(format!("expected `n2=N; diag a-b ...`, got {s:?}")));
        let (head, tail) = s.split_once(';').ok_or_else(bad)?;
        let n2 = head
            .trim()
            .strip_prefix("n2=")
            .and_then(|t| t.trim().parse::<usize>().ok())
            .ok_or_else(bad)?;
        let tail = tail.trim().strip_prefix("diag").ok_or_else(bad)?;
        let diagonals = tail
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<Vec<Chord>, _>>()?;
        Quadrangulation::new(n2, diagonals)
    }
}

/// Every quadrangulation of the `n2`-gon, sorted.
pub fn enumerate_quadrangulations(n2: usize) -> Vec<Quadrangulation> {
    use crate::ncgraph::{enumerate_graphs, Family};
    if n2 < 4 || n2 % 2 != 0 {
        return Vec::new();
    }
    enumerate_graphs(n2, n2 / 2 - 2, Family::Dissection)
        .filter(|g| faces(n2, g.edges()).iter().all(|f| f.len() == 4))
        .map(|g| Quadrangulation { n2, diagonals: g.edges().to_vec() })
        .collect()
}

/// Each quadrilateral `c0 < c1 < c2 < c3` contributes the tree edge joining
/// the halves of its odd-odd diagonal.
pub fn quad_to_tree(q: &Quadrangulation) -> Result<NcGraph, BijectionError> {
    let n = q.n2 / 2;
    let mut edges = Vec::with_capacity(n - 1);
    for f in q.faces() {
        if f.len() != 4 {
            return Err(malformed(format!("face {f:?} is not a quadrilateral")));
        }
        let odd = |v: usize| v % 2 == 1;
        let (x, y) = match (odd(f[0]) && odd(f[2]), odd(f[1]) && odd(f[3])) {
            (true, false) => (f[0], f[2]),
            (false, true) => (f[1], f[3]),
            _ => return Err(malformed(format!("face {f:?} has no unique odd-odd diagonal"))),
        };
        edges.push(Chord::new(x.div_ceil(2), y.div_ceil(2)));
    }
    let t = NcGraph::new(n, edges)?;
    if !t.is_spanning_tree() {
        return Err(malformed("odd diagonals do not form a spanning tree"));
    }
    Ok(t)
}

/// Inverse of [`quad_to_tree`]. Each tree edge `{i, j}` becomes the chord
/// `(2i-1, 2j-1)`; its quadrilateral adds, on each side, the single even vertex
/// of the adjacent face of the chord subdivision.
pub fn tree_to_quad(t: &NcGraph) -> Result<Quadrangulation, BijectionError> {
    let n = t.n();
    if n < 2 || !t.is_spanning_tree() {
        return Err(BijectionError::NotSpanningTree);
    }
    let n2 = 2 * n;
    let dotted: Vec<Chord> = t.edges().iter().map(|e| Chord::new(2 * e.a() - 1, 2 * e.b() - 1)).collect();
    let fs = faces(n2, &dotted);
    let mut diagonals = BTreeSet::new();
    for c in &dotted {
        let mut corners = vec![c.a(), c.b()];
        let adjacent = fs.iter().filter(|f| f.contains(&c.a()) && f.contains(&c.b()));
        for f in adjacent {
            let evens: Vec<usize> = f.iter().copied().filter(|v| v % 2 == 0).collect();
            if evens.len() != 1 {
                return Err(malformed(format!("face {f:?} next to {c} has {} even vertices", evens.len())));
            }
            corners.push(evens[0]);
        }
        if corners.len() != 4 {
            return Err(malformed(format!("chord {c} does not separate two faces")));
        }
        corners.sort_unstable();
        for i in 0..4 {
            let side = Chord::new(corners[i], corners[(i + 1) % 4]);
            if side.length(n2) >= 2 {
                diagonals.insert(side);
            }
        }
    }
    Quadrangulation::new(n2, diagonals.into_iter().collect())
}

fn require_fixed(g: &NcGraph, d: usize) -> Result<usize, BijectionError> {
    let n = g.n();
    if d < 2 || n % d != 0 {
        return Err(violated(format!("rotation order {d} must be at least 2 and divide n = {n}")));
    }
    let step = n / d;
    if g.rotate(step as i64) != *g {
        return Err(violated(format!("graph is not fixed by rotation by {step}")));
    }
    if !g.is_connected() {
        return Err(violated("graph is not connected"));
    }
    Ok(step)
}

/// True iff some edge has cyclic length `n/d`: the rotation orbit of such an
/// edge is a regular `d`-gon (a diameter when `d = 2`) around the center.
pub fn has_central_polygon(g: &NcGraph, d: usize) -> bool {
    let n = g.n();
    n % d == 0 && g.edges().iter().any(|e| e.length(n) == n / d)
}

/// Restrict a rotation-fixed graph with a central polygon to the sector
/// `1..=n/d + 1`, after rotating a central edge onto `{1, n/d + 1}`.
pub fn fold_central(g: &NcGraph, d: usize) -> Result<NcGraph, BijectionError> {
    let step = require_fixed(g, d)?;
    let n = g.n();
    let first = g
        .edges()
        .iter()
        .filter(|e| e.length(n) == step)
        .map(|e| if e.b() - e.a() == step { e.a() } else { e.b() })
        .min()
        .ok_or_else(|| violated(format!("no central edge of length {step}")))?;
    let g = g.rotate(1 - first as i64);
    let edges = g.edges().iter().copied().filter(|e| e.b() <= step + 1).collect();
    Ok(NcGraph::new(step + 1, edges)?)
}

/// Inverse of [`fold_central`]: replicate a sector graph containing
/// `{1, m + 1}` around the `d m`-gon.
pub fn unfold_central(h: &NcGraph, d: usize) -> Result<NcGraph, BijectionError> {
    let m = h.n().checked_sub(1).filter(|&m| m >= 1).ok_or_else(|| violated("sector needs 2 vertices"))?;
    if !h.has_edge(1, m + 1) {
        return Err(violated(format!("sector lacks the edge 1-{}", m + 1)));
    }
    replicate(h.edges(), d * m, m, d)
}

fn replicate(edges: &[Chord], n: usize, step: usize, copies: usize) -> Result<NcGraph, BijectionError> {
    let mut all = BTreeSet::new();
    for j in 0..copies {
        for e in edges {
            all.insert(e.rotate(n, (j * step) as i64));
        }
    }
    Ok(NcGraph::new(n, all.into_iter().collect())?)
}

/// Half-turn folding for odd edge counts: the graph must contain exactly one
/// diameter; the result lives on `n/2 + 1` vertices and contains `{1, n/2 + 1}`.
pub fn fold_diameter(g: &NcGraph) -> Result<NcGraph, BijectionError> {
    if g.n() % 2 != 0 || g.n() < 2 {
        return Err(violated("n must be even"));
    }
    if g.edge_count() % 2 != 1 {
        return Err(violated("edge count must be odd"));
    }
    fold_central(g, 2)
}

pub fn unfold_diameter(h: &NcGraph) -> Result<NcGraph, BijectionError> {
    unfold_central(h, 2)
}

/// Fold a graph fixed by rotation of order `d >= 3` without a central polygon
/// onto `2n/d` vertices: keep the edges inside the first two blocks of `n/d`
/// vertices and send each edge from block 2 to block 3 back to block 1.
pub fn fold_d(g: &NcGraph, d: usize) -> Result<NcGraph, BijectionError> {
    if d < 3 {
        return Err(violated("fold_d needs d >= 3"));
    }
    let step = require_fixed(g, d)?;
    if has_central_polygon(g, d) {
        return Err(BijectionError::CentralPolygonPresent);
    }
    let m = 2 * step;
    let mut edges = Vec::new();
    for e in g.edges() {
        if e.b() <= m {
            edges.push(*e);
        } else if e.a() > step && e.a() <= m && e.b() <= 3 * step {
            edges.push(Chord::new(e.a(), e.b() - m));
        }
    }
    Ok(NcGraph::new(m, edges)?)
}

/// Inverse of [`fold_d`] for a half-turn symmetric graph on `2m` vertices
/// without diameters.
pub fn unfold_d(h: &NcGraph, d: usize) -> Result<NcGraph, BijectionError> {
    let m2 = h.n();
    if m2 % 2 != 0 || m2 == 0 {
        return Err(violated("folded graph needs an even vertex count"));
    }
    let m = m2 / 2;
    if has_central_polygon(h, 2) {
        return Err(violated("folded graph has a diameter"));
    }
    // short chords lift as they are; long ones wrap from block 2 into block 3
    let lifted: Vec<Chord> = h
        .edges()
        .iter()
        .map(|e| if e.b() - e.a() < m { *e } else { Chord::new(e.b(), e.a() + m2) })
        .collect();
    replicate(&lifted, d * m, m, d)
}
