//! Repetition detection by growing two equally colored vertex sequences in
//! lockstep.
//!
//! Both checkers keep a pair of sequences `x₁…x_k` and `y₁…y_k` with
//! `f(x_j) = f(y_j)` for every `j`, all `2k` vertices distinct. The pair is a
//! repetitive path as soon as `x_k ~ y₁` (path `x₁…x_k y₁…y_k`) or
//! `y_k ~ x₁` (path `y₁…y_k x₁…x_k`).

use std::fmt;

use crate::error::{Error, Result};
use crate::lattice::{PrefixGraph, MAX_VERTICES};
use crate::vertex_set::VertexSet;

/// A vertex coloring with ids in `0..colors`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coloring {
    colors: Vec<u8>,
    palette: u8,
}

impl Coloring {
    pub fn new(colors: Vec<u8>, palette: usize) -> Result<Coloring> {
        let palette = validate_palette(palette)?;
        if let Some(&bad) = colors.iter().find(|&&col| col >= palette) {
            return Err(Error::ColorOutOfRange {
                color: bad as usize,
                colors: palette as usize,
            });
        }
        Ok(Coloring { colors, palette })
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.colors
    }

    pub fn palette(&self) -> usize {
        self.palette as usize
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }
}

pub(crate) fn validate_palette(palette: usize) -> Result<u8> {
    match u8::try_from(palette) {
        Ok(p) if p >= 1 => Ok(p),
        _ => Err(Error::InvalidColorCount(palette)),
    }
}

/// Which end adjacency closes the two halves into a path.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Join {
    /// Last vertex of the first half is adjacent to the first of the second.
    FirstThenSecond,
    /// Last vertex of the second half is adjacent to the first of the first.
    SecondThenFirst,
}

impl fmt::Display for Join {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Join::FirstThenSecond => "first-then-second",
            Join::SecondThenFirst => "second-then-first",
        })
    }
}

/// Certificate of a repetitively colored path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub first_half: Vec<usize>,
    pub second_half: Vec<usize>,
    pub joined_at: Join,
}

impl Witness {
    pub fn half_len(&self) -> usize {
        self.first_half.len()
    }

    /// The repetitive path in traversal order.
    pub fn path(&self) -> Vec<usize> {
        let (a, b) = match self.joined_at {
            Join::FirstThenSecond => (&self.first_half, &self.second_half),
            Join::SecondThenFirst => (&self.second_half, &self.first_half),
        };
        a.iter().chain(b).copied().collect()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.first_half.contains(&v) || self.second_half.contains(&v)
    }

    /// Checks every certificate condition directly against `g` and `colors`.
    pub fn validate(&self, g: &PrefixGraph, colors: &[u8]) -> std::result::Result<(), String> {
        let k = self.first_half.len();
        if k == 0 || self.second_half.len() != k {
            return Err(format!(
                "halves have lengths {} and {}",
                k,
                self.second_half.len()
            ));
        }
        let path = self.path();
        if let Some(&v) = path.iter().find(|&&v| v >= g.n() || v >= colors.len()) {
            return Err(format!("vertex {v} out of range"));
        }
        let distinct: VertexSet = path.iter().copied().collect();
        if distinct.len() != path.len() {
            return Err("path repeats a vertex".into());
        }
        for w in path.windows(2) {
            if !g.is_adjacent(w[0], w[1]) {
                return Err(format!("{} and {} are not adjacent", w[0], w[1]));
            }
        }
        for j in 0..k {
            if colors[path[j]] != colors[path[j + k]] {
                return Err(format!("colors differ at position {j}"));
            }
        }
        Ok(())
    }
}

fn check_inputs(g: &PrefixGraph, f: &Coloring) -> Result<()> {
    if f.len() != g.n() {
        return Err(Error::LengthMismatch {
            expected: g.n(),
            found: f.len(),
        });
    }
    Ok(())
}

/// Finds a repetitively colored path anywhere in `g`, or `None` if `f` is
/// non-repetitive.
pub fn find_repetitive(g: &PrefixGraph, f: &Coloring) -> Result<Option<Witness>> {
    check_inputs(g, f)?;
    Ok(repetition(g, f.as_slice()))
}

/// Finds a repetitively colored path through vertex `v`, or `None` if every
/// repetitive path of `g` avoids `v`.
pub fn find_repetitive_through(g: &PrefixGraph, f: &Coloring, v: usize) -> Result<Option<Witness>> {
    check_inputs(g, f)?;
    if v >= g.n() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: g.n(),
        });
    }
    Ok(repetition_through(g, f.as_slice(), v))
}

pub(crate) fn repetition(g: &PrefixGraph, colors: &[u8]) -> Option<Witness> {
    for (a, b) in g.edges() {
        if colors[a] == colors[b] {
            return Some(Witness {
                first_half: vec![a],
                second_half: vec![b],
                joined_at: Join::FirstThenSecond,
            });
        }
    }
    let n = g.n();
    let mut pair = PairSearch::new(g, colors);
    for u in 0..n {
        for v in u + 1..n {
            if colors[u] == colors[v] {
                pair.start(u, v);
                if pair.grow_tails() {
                    return Some(pair.witness());
                }
            }
        }
    }
    None
}

pub(crate) fn repetition_through(g: &PrefixGraph, colors: &[u8], v: usize) -> Option<Witness> {
    let mut pair = PairSearch::new(g, colors);
    if pair.any_through(v) {
        Some(pair.witness())
    } else {
        None
    }
}

/// Allocation-free test used by the enumerator's inner loop.
#[inline]
pub(crate) fn has_repetition_through(g: &PrefixGraph, colors: &[u8], v: usize) -> bool {
    PairSearch::new(g, colors).any_through(v)
}

// Each half holds at most MAX_VERTICES / 2 vertices and may grow from either
// end of its slot window, so the window starts in the middle.
const SLOTS: usize = MAX_VERTICES + 2;
const CENTER: usize = MAX_VERTICES / 2 + 1;

struct PairSearch<'a> {
    g: &'a PrefixGraph,
    colors: &'a [u8],
    first: [u8; SLOTS],
    second: [u8; SLOTS],
    head: usize,
    tail: usize,
    used: VertexSet,
    join: Join,
}

impl<'a> PairSearch<'a> {
    fn new(g: &'a PrefixGraph, colors: &'a [u8]) -> Self {
        PairSearch {
            g,
            colors,
            first: [0; SLOTS],
            second: [0; SLOTS],
            head: CENTER,
            tail: CENTER,
            used: VertexSet::EMPTY,
            join: Join::FirstThenSecond,
        }
    }

    fn start(&mut self, u: usize, v: usize) {
        self.head = CENTER;
        self.tail = CENTER + 1;
        self.first[CENTER] = u as u8;
        self.second[CENTER] = v as u8;
        self.used = VertexSet::EMPTY;
        self.used.insert(u);
        self.used.insert(v);
    }

    fn any_through(&mut self, v: usize) -> bool {
        let target = self.colors[v];
        for &u in self.g.neighbors(v) {
            let u = u as usize;
            if self.colors[u] == target {
                self.start(u, v);
                self.join = Join::FirstThenSecond;
                return true;
            }
        }
        for u in 0..self.g.n() {
            if u != v && self.colors[u] == target {
                self.start(u, v);
                if self.grow_both(true) {
                    return true;
                }
            }
        }
        false
    }

    #[inline]
    fn half_len(&self) -> usize {
        self.tail - self.head
    }

    #[inline]
    fn joined(&mut self) -> bool {
        let x1 = self.first[self.head] as usize;
        let xk = self.first[self.tail - 1] as usize;
        let y1 = self.second[self.head] as usize;
        let yk = self.second[self.tail - 1] as usize;
        if self.g.is_adjacent(xk, y1) {
            self.join = Join::FirstThenSecond;
            true
        } else if self.g.is_adjacent(yk, x1) {
            self.join = Join::SecondThenFirst;
            true
        } else {
            false
        }
    }

    #[inline]
    fn room_to_grow(&self) -> bool {
        2 * (self.half_len() + 1) <= self.g.n()
    }

    /// Tries every same-colored, distinct, unused pair `(x, y)` with
    /// `x ~ from_x` and `y ~ from_y`, in increasing index order.
    #[inline]
    fn for_each_pair(
        &mut self,
        from_x: usize,
        from_y: usize,
        mut visit: impl FnMut(&mut Self, u8, u8) -> bool,
    ) -> bool {
        let g = self.g;
        for &x in g.neighbors(from_x) {
            if self.used.contains(x as usize) {
                continue;
            }
            let cx = self.colors[x as usize];
            for &y in g.neighbors(from_y) {
                if x == y || self.used.contains(y as usize) || self.colors[y as usize] != cx {
                    continue;
                }
                if visit(self, x, y) {
                    return true;
                }
            }
        }
        false
    }

    fn push_back(&mut self, x: u8, y: u8) {
        self.first[self.tail] = x;
        self.second[self.tail] = y;
        self.tail += 1;
        self.used.insert(x as usize);
        self.used.insert(y as usize);
    }

    fn pop_back(&mut self) {
        self.tail -= 1;
        self.used.remove(self.first[self.tail] as usize);
        self.used.remove(self.second[self.tail] as usize);
    }

    fn push_front(&mut self, x: u8, y: u8) {
        self.head -= 1;
        self.first[self.head] = x;
        self.second[self.head] = y;
        self.used.insert(x as usize);
        self.used.insert(y as usize);
    }

    fn pop_front(&mut self) {
        self.used.remove(self.first[self.head] as usize);
        self.used.remove(self.second[self.head] as usize);
        self.head += 1;
    }

    /// One-ended search: extend both sequences at their tails only.
    fn grow_tails(&mut self) -> bool {
        if self.joined() {
            return true;
        }
        if !self.room_to_grow() {
            return false;
        }
        let xk = self.first[self.tail - 1] as usize;
        let yk = self.second[self.tail - 1] as usize;
        self.for_each_pair(xk, yk, |s, x, y| {
            s.push_back(x, y);
            if s.grow_tails() {
                return true;
            }
            s.pop_back();
            false
        })
    }

    /// Two-ended search. Every pair state containing the start pair can be
    /// reached by first prepending and then appending, so once a branch has
    /// appended it only appends.
    fn grow_both(&mut self, may_prepend: bool) -> bool {
        if self.joined() {
            return true;
        }
        if !self.room_to_grow() {
            return false;
        }
        if may_prepend {
            let x1 = self.first[self.head] as usize;
            let y1 = self.second[self.head] as usize;
            let found = self.for_each_pair(x1, y1, |s, x, y| {
                s.push_front(x, y);
                if s.grow_both(true) {
                    return true;
                }
                s.pop_front();
                false
            });
            if found {
                return true;
            }
        }
        let xk = self.first[self.tail - 1] as usize;
        let yk = self.second[self.tail - 1] as usize;
        self.for_each_pair(xk, yk, |s, x, y| {
            s.push_back(x, y);
            if s.grow_both(false) {
                return true;
            }
            s.pop_back();
            false
        })
    }

    fn witness(&self) -> Witness {
        let span = self.head..self.tail;
        Witness {
            first_half: self.first[span.clone()]
                .iter()
                .map(|&v| v as usize)
                .collect(),
            second_half: self.second[span].iter().map(|&v| v as usize).collect(),
            joined_at: self.join,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{build_order, Family};

    fn coloring(colors: &[u8], palette: usize) -> Coloring {
        Coloring::new(colors.to_vec(), palette).unwrap()
    }

    #[test]
    fn single_edge_same_color() {
        let g = PrefixGraph::path(2).unwrap();
        let w = find_repetitive(&g, &coloring(&[0, 0], 1)).unwrap().unwrap();
        assert_eq!(w.half_len(), 1);
        w.validate(&g, &[0, 0]).unwrap();
    }

    #[test]
    fn four_cycle_xyxy() {
        let g = PrefixGraph::cycle(4).unwrap();
        let f = [0, 1, 0, 1];
        let w = find_repetitive(&g, &coloring(&f, 2)).unwrap().unwrap();
        assert_eq!(w.half_len(), 2);
        w.validate(&g, &f).unwrap();
    }

    #[test]
    fn recolored_vertex_is_caught_at_k1() {
        let g = PrefixGraph::path(5).unwrap();
        let f = [0, 1, 2, 2, 1];
        let w = find_repetitive_through(&g, &coloring(&f, 3), 3)
            .unwrap()
            .unwrap();
        assert_eq!(w.half_len(), 1);
        assert!(w.contains(3));
        w.validate(&g, &f).unwrap();
    }

    #[test]
    fn through_finds_v_in_either_half_and_position() {
        // 0 1 2 0 1 2 on a path: the only repetition is the whole path.
        let g = PrefixGraph::path(6).unwrap();
        let f = [0, 1, 2, 0, 1, 2];
        for v in 0..6 {
            let w = repetition_through(&g, &f, v).unwrap();
            assert_eq!(w.half_len(), 3);
            assert!(w.contains(v));
            w.validate(&g, &f).unwrap();
        }
    }

    #[test]
    fn input_validation() {
        let g = PrefixGraph::path(3).unwrap();
        assert!(matches!(
            find_repetitive(&g, &coloring(&[0, 1], 2)),
            Err(Error::LengthMismatch { .. })
        ));
        assert!(matches!(
            find_repetitive_through(&g, &coloring(&[0, 1, 0], 2), 3),
            Err(Error::VertexOutOfRange { .. })
        ));
        assert!(matches!(
            Coloring::new(vec![0, 5], 5),
            Err(Error::ColorOutOfRange {
                color: 5,
                colors: 5
            })
        ));
        assert!(Coloring::new(vec![], 0).is_err());
        assert!(Coloring::new(vec![], 256).is_err());
        assert!(Coloring::new(vec![254], 255).is_ok());
    }

    #[test]
    fn cartesian_seed_plus_first_vertex() {
        let order = build_order(Family::Cartesian, 5).unwrap();
        let g = PrefixGraph::from_order(&order, 5).unwrap();
        assert!(repetition_through(&g, &[0, 1, 2, 3, 0], 4).is_none());
        // (0,1,1,2) then 0: path (2,0),(1,0),(0,0),(0,1) reads 0 1 0 1.
        let f = [0, 1, 1, 2, 0];
        let w = repetition_through(&g, &f, 4).unwrap();
        assert_eq!(w.path(), vec![2, 0, 1, 4]);
        w.validate(&g, &f).unwrap();
    }

    #[test]
    fn witness_validate_rejects_bad_certificates() {
        let g = PrefixGraph::path(4).unwrap();
        let f = [0, 1, 0, 1];
        let bad_color = Witness {
            first_half: vec![0, 1],
            second_half: vec![2, 3],
            joined_at: Join::SecondThenFirst,
        };
        assert!(bad_color.validate(&g, &f).is_err());
        let uneven = Witness {
            first_half: vec![0],
            second_half: vec![2, 3],
            joined_at: Join::FirstThenSecond,
        };
        assert!(uneven.validate(&g, &f).is_err());
        let good = Witness {
            first_half: vec![0, 1],
            second_half: vec![2, 3],
            joined_at: Join::FirstThenSecond,
        };
        good.validate(&g, &f).unwrap();
    }
}
