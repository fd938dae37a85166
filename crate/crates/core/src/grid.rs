//! Lattice graphs and their vertex/adjacency structure.
//!
//! Every lattice is addressed with 1-based `(row, column)` coordinates.
//!
//! * Rectangular: `(i, j)` is adjacent to `(i ± 1, j)` and `(i, j ± 1)`.
//! * Triangular: axial coordinates. `(i, j)` is adjacent to `(i, j ± 1)`,
//!   `(i - 1, j)`, `(i - 1, j + 1)`, `(i + 1, j - 1)` and `(i + 1, j)`. The
//!   bounded patch is a triangle of side `s` whose row `i` holds `s - i + 1`
//!   vertices; the torus wraps a rows x cols rhombus.
//! * Hexagonal: brick-wall coordinates. `(i, j)` is adjacent to `(i, j ± 1)`
//!   and to `(i + 1, j)` when `i + j` is even, `(i - 1, j)` otherwise.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LatticeKind {
    Rectangular,
    Triangular,
    Hexagonal,
}

impl LatticeKind {
    /// Degree of every vertex in the infinite lattice.
    pub fn regular_degree(self) -> usize {
        match self {
            LatticeKind::Rectangular => 4,
            LatticeKind::Triangular => 6,
            LatticeKind::Hexagonal => 3,
        }
    }

    fn prefix(self) -> &'static str {
        match self {
            LatticeKind::Rectangular => "rect",
            LatticeKind::Triangular => "tri",
            LatticeKind::Hexagonal => "hex",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Topology {
    Bounded,
    Torus,
}

/// A vertex address `v_{i,j}`: row `i`, column `j`, both starting at 1.
///
/// Ordering is row-major.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coord {
    pub i: usize,
    pub j: usize,
}

impl Coord {
    pub const fn new(i: usize, j: usize) -> Self {
        Coord { i, j }
    }

    pub fn transpose(self) -> Self {
        Coord {
            i: self.j,
            j: self.i,
        }
    }
}

impl From<(usize, usize)> for Coord {
    fn from((i, j): (usize, usize)) -> Self {
        Coord { i, j }
    }
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

// Serialized as a bare `[i, j]` pair.
impl Serialize for Coord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.i, self.j].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Coord {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [i, j] = <[usize; 2]>::deserialize(d)?;
        Ok(Coord { i, j })
    }
}

/// A finite lattice graph. Immutable once built.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Lattice {
    kind: LatticeKind,
    rows: usize,
    cols: usize,
    topology: Topology,
}

impl Lattice {
    pub fn new(kind: LatticeKind, rows: usize, cols: usize, topology: Topology) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidLattice(msg));
        if rows == 0 || cols == 0 {
            return bad(format!("dimensions must be positive, got {rows}x{cols}"));
        }
        match (kind, topology) {
            (LatticeKind::Triangular, Topology::Bounded) if rows != cols => {
                return bad(format!(
                    "a bounded triangular patch has one side length, got {rows}x{cols}"
                ));
            }
            (LatticeKind::Rectangular | LatticeKind::Triangular, Topology::Torus)
                if rows < 3 || cols < 3 =>
            {
                return bad(format!(
                    "torus dimensions must both be at least 3, got {rows}x{cols}"
                ));
            }
            (LatticeKind::Hexagonal, Topology::Torus)
                if !rows.is_multiple_of(2) || !cols.is_multiple_of(2) || cols < 4 =>
            {
                return bad(format!(
                    "hexagonal torus needs even periods with at least 4 columns, got {rows}x{cols}"
                ));
            }
            _ => {}
        }
        Ok(Lattice {
            kind,
            rows,
            cols,
            topology,
        })
    }

    pub fn rect(rows: usize, cols: usize) -> Result<Self> {
        Self::new(LatticeKind::Rectangular, rows, cols, Topology::Bounded)
    }

    pub fn rect_torus(rows: usize, cols: usize) -> Result<Self> {
        Self::new(LatticeKind::Rectangular, rows, cols, Topology::Torus)
    }

    /// Triangular patch of side `side`.
    pub fn tri(side: usize) -> Result<Self> {
        Self::new(LatticeKind::Triangular, side, side, Topology::Bounded)
    }

    pub fn tri_torus(rows: usize, cols: usize) -> Result<Self> {
        Self::new(LatticeKind::Triangular, rows, cols, Topology::Torus)
    }

    pub fn hex(rows: usize, cols: usize) -> Result<Self> {
        Self::new(LatticeKind::Hexagonal, rows, cols, Topology::Bounded)
    }

    pub fn hex_torus(rows: usize, cols: usize) -> Result<Self> {
        Self::new(LatticeKind::Hexagonal, rows, cols, Topology::Torus)
    }

    pub fn kind(&self) -> LatticeKind {
        self.kind
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn topology(&self) -> Topology {
        self.topology
    }

    pub fn is_torus(&self) -> bool {
        self.topology == Topology::Torus
    }

    fn is_triangle(&self) -> bool {
        self.kind == LatticeKind::Triangular && self.topology == Topology::Bounded
    }

    /// Number of vertices in row `i` (1-based).
    fn row_len(&self, i: usize) -> usize {
        if self.is_triangle() {
            self.cols + 1 - i
        } else {
            self.cols
        }
    }

    pub fn vertex_count(&self) -> usize {
        if self.is_triangle() {
            self.cols * (self.cols + 1) / 2
        } else {
            self.rows * self.cols
        }
    }

    pub fn contains(&self, c: Coord) -> bool {
        c.i >= 1 && c.i <= self.rows && c.j >= 1 && c.j <= self.row_len(c.i)
    }

    pub fn check(&self, c: Coord) -> Result<()> {
        if self.contains(c) {
            Ok(())
        } else {
            Err(Error::InvalidCoordinate {
                coord: c,
                lattice: self.to_string(),
            })
        }
    }

    /// Position of `c` in the row-major enumeration returned by [`vertices`](Self::vertices).
    pub fn index_of(&self, c: Coord) -> Option<usize> {
        if !self.contains(c) {
            return None;
        }
        let before = if self.is_triangle() {
            let r = c.i - 1;
            r * self.cols - r * r.saturating_sub(1) / 2
        } else {
            (c.i - 1) * self.cols
        };
        Some(before + c.j - 1)
    }

    /// All vertices in row-major order.
    pub fn vertices(&self) -> Vec<Coord> {
        let mut out = Vec::with_capacity(self.vertex_count());
        for i in 1..=self.rows {
            for j in 1..=self.row_len(i) {
                out.push(Coord { i, j });
            }
        }
        out
    }

    fn offsets(&self, c: Coord) -> &'static [(isize, isize)] {
        const RECT: [(isize, isize); 4] = [(-1, 0), (0, -1), (0, 1), (1, 0)];
        const TRI: [(isize, isize); 6] = [(-1, 0), (-1, 1), (0, -1), (0, 1), (1, -1), (1, 0)];
        const HEX_DOWN: [(isize, isize); 3] = [(0, -1), (0, 1), (1, 0)];
        const HEX_UP: [(isize, isize); 3] = [(-1, 0), (0, -1), (0, 1)];
        match self.kind {
            LatticeKind::Rectangular => &RECT,
            LatticeKind::Triangular => &TRI,
            LatticeKind::Hexagonal if (c.i + c.j).is_multiple_of(2) => &HEX_DOWN,
            LatticeKind::Hexagonal => &HEX_UP,
        }
    }

    /// Applies an offset, wrapping on a torus. `None` if the result leaves a bounded lattice.
    pub fn step(&self, c: Coord, di: isize, dj: isize) -> Option<Coord> {
        let i = c.i as isize + di;
        let j = c.j as isize + dj;
        match self.topology {
            Topology::Torus => Some(Coord {
                i: (i - 1).rem_euclid(self.rows as isize) as usize + 1,
                j: (j - 1).rem_euclid(self.cols as isize) as usize + 1,
            }),
            Topology::Bounded => {
                if i < 1 || j < 1 {
                    return None;
                }
                let n = Coord {
                    i: i as usize,
                    j: j as usize,
                };
                self.contains(n).then_some(n)
            }
        }
    }

    /// Open neighborhood of `c`, sorted row-major.
    pub fn neighbors(&self, c: Coord) -> Result<Vec<Coord>> {
        self.check(c)?;
        Ok(self.neighbors_unchecked(c))
    }

    fn neighbors_unchecked(&self, c: Coord) -> Vec<Coord> {
        let mut out: Vec<Coord> = self
            .offsets(c)
            .iter()
            .filter_map(|&(di, dj)| self.step(c, di, dj))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn degree(&self, c: Coord) -> Result<usize> {
        Ok(self.neighbors(c)?.len())
    }

    /// Shortest-path distance. Closed form on bounded rectangular grids, BFS otherwise.
    pub fn distance(&self, u: Coord, v: Coord) -> Result<usize> {
        self.check(u)?;
        self.check(v)?;
        if self.kind == LatticeKind::Rectangular && self.topology == Topology::Bounded {
            return Ok(u.i.abs_diff(v.i) + u.j.abs_diff(v.j));
        }
        Ok(self.bfs_distance(u, v))
    }

    pub(crate) fn bfs_distance(&self, u: Coord, v: Coord) -> usize {
        let g = self.graph();
        let src = self.index_of(u).expect("checked");
        let dst = self.index_of(v).expect("checked");
        g.bfs(src)[dst].expect("lattices are connected")
    }

    /// Materializes the adjacency structure, vertices indexed as in [`vertices`](Self::vertices).
    pub fn graph(&self) -> Graph {
        let adjacency = self
            .vertices()
            .into_iter()
            .map(|c| {
                self.neighbors_unchecked(c)
                    .into_iter()
                    .map(|n| self.index_of(n).expect("neighbor inside lattice"))
                    .collect()
            })
            .collect();
        Graph { adjacency }
    }
}

impl fmt::Display for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let torus = if self.is_torus() { "-torus" } else { "" };
        if self.is_triangle() {
            write!(f, "tri:{}", self.cols)
        } else {
            write!(
                f,
                "{}{}:{}x{}",
                self.kind.prefix(),
                torus,
                self.rows,
                self.cols
            )
        }
    }
}

impl FromStr for Lattice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadDescriptor(s.to_string());
        let (head, dims) = s.trim().split_once(':').ok_or_else(bad)?;
        let (kind, topology) = match head.to_ascii_lowercase().as_str() {
            "rect" => (LatticeKind::Rectangular, Topology::Bounded),
            "rect-torus" => (LatticeKind::Rectangular, Topology::Torus),
            "tri" => (LatticeKind::Triangular, Topology::Bounded),
            "tri-torus" => (LatticeKind::Triangular, Topology::Torus),
            "hex" => (LatticeKind::Hexagonal, Topology::Bounded),
            "hex-torus" => (LatticeKind::Hexagonal, Topology::Torus),
            _ => return Err(bad()),
        };
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
        let (rows, cols) = match dims.split_once(['x', 'X']) {
            Some((r, c)) => (num(r)?, num(c)?),
            None if kind == LatticeKind::Triangular && topology == Topology::Bounded => {
                let s = num(dims)?;
                (s, s)
            }
            None => return Err(bad()),
        };
        Lattice::new(kind, rows, cols, topology)
    }
}

impl Serialize for Lattice {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Lattice {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// Plain adjacency lists over vertex indices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    pub fn from_adjacency(adjacency: Vec<Vec<usize>>) -> Self {
        Graph { adjacency }
    }

    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Appends a vertex adjacent to `to`, returning its index.
    pub fn add_pendant(&mut self, to: usize) -> usize {
        let id = self.adjacency.len();
        self.adjacency.push(vec![to]);
        self.adjacency[to].push(id);
        id
    }

    pub fn bfs(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order()];
        let mut queue = VecDeque::from([src]);
        dist[src] = Some(0);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for &w in &self.adjacency[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }
}
