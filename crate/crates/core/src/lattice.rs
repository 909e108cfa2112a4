//! The three lattice families, the shell-by-shell vertex order and the finite
//! prefix graphs the search runs on.
//!
//! Coordinates use `x` for the column and `y` for the row, with rows growing
//! downward from the seed block at the top-left corner. Shell `s` adds the
//! column `x = s` from top to bottom, then the row `y = s` from right to left.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Largest absolute coordinate value accepted anywhere.
pub const COORD_CAP: i32 = 1 << 15;

/// Largest graph the bitset-based search supports.
pub const MAX_VERTICES: usize = 128;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coord {
    pub x: i32,
    pub y: i32,
}

impl Coord {
    pub fn new(x: i32, y: i32) -> Result<Coord> {
        let c = Coord { x, y };
        if c.in_range() {
            Ok(c)
        } else {
            Err(Error::CoordinateOutOfRange(c))
        }
    }

    fn in_range(self) -> bool {
        self.x.abs() <= COORD_CAP && self.y.abs() <= COORD_CAP
    }

    fn offset(self, (dx, dy): (i32, i32)) -> Result<Coord> {
        Coord::new(self.x + dx, self.y + dy)
    }
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

const CARTESIAN_OFFSETS: [(i32, i32); 4] = [(1, 0), (-1, 0), (0, 1), (0, -1)];

const STRONG_OFFSETS: [(i32, i32); 8] = [
    (1, 0),
    (-1, 0),
    (0, 1),
    (0, -1),
    (1, 1),
    (-1, -1),
    (1, -1),
    (-1, 1),
];

// The anti-diagonal joins (1, 0) and (0, 1) inside the seed block.
const TRIANGULAR_OFFSETS: [(i32, i32); 6] = [(1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1)];

/// An infinite lattice graph on ℤ².
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// P □ P, the square grid.
    Cartesian,
    /// P ⊠ P, the king graph.
    Strong,
    /// T₃, the triangular tiling: the grid plus one diagonal direction.
    Triangular,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Cartesian, Family::Strong, Family::Triangular];

    pub fn offsets(self) -> &'static [(i32, i32)] {
        match self {
            Family::Cartesian => &CARTESIAN_OFFSETS,
            Family::Strong => &STRONG_OFFSETS,
            Family::Triangular => &TRIANGULAR_OFFSETS,
        }
    }

    pub fn degree(self) -> usize {
        self.offsets().len()
    }

    pub fn is_adjacent(self, a: Coord, b: Coord) -> bool {
        let d = (a.x - b.x, a.y - b.y);
        self.offsets().contains(&d)
    }

    /// Stable id used by the checkpoint format.
    pub fn id(self) -> u8 {
        match self {
            Family::Cartesian => 0,
            Family::Strong => 1,
            Family::Triangular => 2,
        }
    }

    pub fn from_id(id: u8) -> Option<Family> {
        match id {
            0 => Some(Family::Cartesian),
            1 => Some(Family::Strong),
            2 => Some(Family::Triangular),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Cartesian => "cartesian",
            Family::Strong => "strong",
            Family::Triangular => "triangular",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "cartesian" => Ok(Family::Cartesian),
            "strong" => Ok(Family::Strong),
            "triangular" => Ok(Family::Triangular),
            other => Err(format!("unknown family `{other}`")),
        }
    }
}

/// All lattice neighbors of `a`, in the family's offset order.
pub fn neighbors(family: Family, a: Coord) -> Result<Vec<Coord>> {
    if !a.in_range() {
        return Err(Error::CoordinateOutOfRange(a));
    }
    family.offsets().iter().map(|&d| a.offset(d)).collect()
}

/// The seed block followed by square shells, truncated to a fixed length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexOrder {
    family: Family,
    coords: Vec<Coord>,
}

impl VertexOrder {
    pub fn family(&self) -> Family {
        self.family
    }

    pub fn coords(&self) -> &[Coord] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }
}

pub fn build_order(family: Family, n: usize) -> Result<VertexOrder> {
    if n < 4 {
        return Err(Error::OrderTooShort(n));
    }
    let mut coords = Vec::with_capacity(n);
    for (x, y) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
        coords.push(Coord::new(x, y)?);
    }
    let mut shell = 2;
    while coords.len() < n {
        for y in 0..=shell {
            coords.push(Coord::new(shell, y)?);
        }
        for x in (0..shell).rev() {
            coords.push(Coord::new(x, shell)?);
        }
        shell += 1;
    }
    coords.truncate(n);
    Ok(VertexOrder { family, coords })
}

/// A finite graph on vertex indices `0..n` with both sorted neighbor lists
/// and bitset rows, so that the search can iterate neighbors and test
/// adjacency in constant time.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrefixGraph {
    adjacency: Vec<Vec<u8>>,
    rows: Vec<VertexSet>,
}

impl PrefixGraph {
    /// Induced subgraph of the family on the first `i` coordinates of `order`.
    pub fn from_order(order: &VertexOrder, i: usize) -> Result<PrefixGraph> {
        if i < 4 || i > order.len() {
            return Err(Error::PrefixOutOfRange {
                requested: i,
                available: order.len(),
            });
        }
        let coords = &order.coords[..i];
        let family = order.family;
        let mut edges = Vec::new();
        for (a, &ca) in coords.iter().enumerate() {
            for (b, &cb) in coords.iter().enumerate().skip(a + 1) {
                if family.is_adjacent(ca, cb) {
                    edges.push((a, b));
                }
            }
        }
        PrefixGraph::from_edges(i, &edges)
    }

    /// Arbitrary simple graph on `n` vertices. Loops and out-of-range
    /// endpoints are rejected; duplicate edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<PrefixGraph> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let mut rows = vec![VertexSet::EMPTY; n];
        for &(a, b) in edges {
            if a == b || a >= n || b >= n {
                return Err(Error::InvalidEdge(a, b));
            }
            rows[a].insert(b);
            rows[b].insert(a);
        }
        let adjacency = rows
            .iter()
            .map(|row| row.iter().map(|v| v as u8).collect())
            .collect();
        Ok(PrefixGraph { adjacency, rows })
    }

    pub fn path(n: usize) -> Result<PrefixGraph> {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        PrefixGraph::from_edges(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<PrefixGraph> {
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        if n >= 3 {
            edges.push((n - 1, 0));
        }
        PrefixGraph::from_edges(n, &edges)
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    /// Sorted neighbor indices of `v`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &[u8] {
        &self.adjacency[v]
    }

    #[inline]
    pub fn row(&self, v: usize) -> VertexSet {
        self.rows[v]
    }

    #[inline]
    pub fn is_adjacent(&self, a: usize, b: usize) -> bool {
        self.rows[a].contains(b)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(a, nbrs)| {
            nbrs.iter()
                .map(|&b| b as usize)
                .filter(move |&b| a < b)
                .map(move |b| (a, b))
        })
    }
}
