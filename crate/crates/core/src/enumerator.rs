//! Frontier enumeration: every non-repetitive coloring of the current prefix,
//! grown one vertex at a time.
//!
//! Seed colorings are taken up to relabeling (first-occurrence form on the
//! four seed vertices). Every later vertex tries all colors, so counts are
//! "up to permutation of the seed" and nothing more.

use rayon::prelude::*;

use crate::checker::{has_repetition_through, repetition, validate_palette};
use crate::error::{Error, Result};
use crate::lattice::{build_order, Family, PrefixGraph, VertexOrder};

pub const SEED_LEN: usize = 4;

/// Rows handed to one parallel task during [`extend`].
const CHUNK_ROWS: usize = 512;

/// All surviving colorings of one prefix, stored as contiguous rows of one
/// byte per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Frontier {
    len: usize,
    palette: u8,
    data: Vec<u8>,
}

impl Frontier {
    /// Builds a frontier from raw rows. Only shape and color range are checked.
    pub fn from_rows(len: usize, palette: usize, data: Vec<u8>) -> Result<Frontier> {
        let palette = validate_palette(palette)?;
        if len == 0 || !data.len().is_multiple_of(len) {
            return Err(Error::LengthMismatch {
                expected: len,
                found: data.len() % len.max(1),
            });
        }
        if let Some(&bad) = data.iter().find(|&&c| c >= palette) {
            return Err(Error::ColorOutOfRange {
                color: bad as usize,
                colors: palette as usize,
            });
        }
        Ok(Frontier { len, palette, data })
    }

    /// Prefix length `i` shared by every row.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn palette(&self) -> usize {
        self.palette as usize
    }

    pub fn count(&self) -> usize {
        self.data.len() / self.len
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn rows(&self) -> std::slice::ChunksExact<'_, u8> {
        self.data.chunks_exact(self.len)
    }

    pub fn row(&self, r: usize) -> &[u8] {
        &self.data[r * self.len..(r + 1) * self.len]
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.data
    }
}

/// Relabels the first four colors by order of first appearance.
pub fn canonical_seed_form(prefix: &[u8]) -> Result<[u8; SEED_LEN]> {
    if prefix.len() < SEED_LEN {
        return Err(Error::LengthMismatch {
            expected: SEED_LEN,
            found: prefix.len(),
        });
    }
    let mut relabel = [u8::MAX; 256];
    let mut next = 0u8;
    let mut out = [0u8; SEED_LEN];
    for (slot, &c) in out.iter_mut().zip(prefix) {
        if relabel[c as usize] == u8::MAX {
            relabel[c as usize] = next;
            next += 1;
        }
        *slot = relabel[c as usize];
    }
    Ok(out)
}

pub fn is_seed_canonical(row: &[u8]) -> bool {
    canonical_seed_form(row).is_ok_and(|canon| canon[..] == row[..SEED_LEN])
}

/// Canonical non-repetitive colorings of the seed block, lexicographically.
pub fn seed_colorings(family: Family, palette: usize) -> Result<Frontier> {
    let p = validate_palette(palette)?;
    let order = build_order(family, SEED_LEN)?;
    let g = PrefixGraph::from_order(&order, SEED_LEN)?;
    let mut data = Vec::new();
    // Restricted growth strings: each entry is at most one above the
    // running maximum, which enumerates first-occurrence forms in order.
    let mut word = [0u8; SEED_LEN];
    fn fill(pos: usize, max: u8, p: u8, word: &mut [u8; SEED_LEN], out: &mut Vec<[u8; SEED_LEN]>) {
        if pos == SEED_LEN {
            out.push(*word);
            return;
        }
        for c in 0..=(max + 1).min(p - 1) {
            word[pos] = c;
            fill(pos + 1, max.max(c), p, word, out);
        }
    }
    let mut words = Vec::new();
    fill(1, 0, p, &mut word, &mut words);
    for w in words {
        if repetition(&g, &w).is_none() {
            data.extend_from_slice(&w);
        }
    }
    Frontier::from_rows(SEED_LEN, palette, data)
}

/// Appends every color to every row and keeps the extensions with no
/// repetitive path through the new vertex. Output order is row-major,
/// color-minor regardless of how many threads run the chunks.
pub fn extend(frontier: &Frontier, order: &VertexOrder) -> Result<Frontier> {
    let i = frontier.len();
    if order.len() <= i {
        return Err(Error::OrderExhausted(order.len()));
    }
    let g = PrefixGraph::from_order(order, i + 1)?;
    let palette = frontier.palette;
    let chunks: Vec<Vec<u8>> = frontier
        .data
        .par_chunks(CHUNK_ROWS * i)
        .map(|chunk| extend_chunk(&g, chunk, i, palette))
        .collect();
    Ok(Frontier {
        len: i + 1,
        palette,
        data: chunks.concat(),
    })
}

fn extend_chunk(g: &PrefixGraph, chunk: &[u8], i: usize, palette: u8) -> Vec<u8> {
    let mut out = Vec::new();
    let mut candidate = vec![0u8; i + 1];
    for row in chunk.chunks_exact(i) {
        candidate[..i].copy_from_slice(row);
        for c in 0..palette {
            candidate[i] = c;
            if !has_repetition_through(g, &candidate, i) {
                out.extend_from_slice(&candidate);
            }
        }
    }
    out
}

/// Per-step counts of one search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountsTable {
    pub family: Family,
    pub palette: usize,
    /// `(i, n(i))` for every step this run computed, consecutive in `i`.
    pub rows: Vec<(usize, u64)>,
    /// `palette + 1` once the frontier has emptied.
    pub derived_bound: Option<usize>,
}

impl CountsTable {
    /// Two-column CSV with header `i,n`.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        let to_err = |e: csv::Error| Error::Table(e.to_string());
        w.write_record(["i", "n"]).map_err(to_err)?;
        for &(i, n) in &self.rows {
            w.write_record([i.to_string(), n.to_string()])
                .map_err(to_err)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Table(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Table(e.to_string()))
    }

    /// Parses `to_csv` output back into `(i, n)` rows.
    pub fn parse_csv_rows(text: &str) -> Result<Vec<(usize, u64)>> {
        let mut r = csv::ReaderBuilder::new().from_reader(text.as_bytes());
        let headers = r.headers().map_err(|e| Error::Table(e.to_string()))?;
        if headers != vec!["i", "n"] {
            return Err(Error::Table(format!("unexpected header {headers:?}")));
        }
        r.deserialize::<(usize, u64)>()
            .map(|rec| rec.map_err(|e| Error::Table(e.to_string())))
            .collect()
    }
}

/// Receives every completed frontier, in step order.
pub trait StepSink {
    fn step(&mut self, frontier: &Frontier) -> Result<()>;
}

impl<F: FnMut(&Frontier) -> Result<()>> StepSink for F {
    fn step(&mut self, frontier: &Frontier) -> Result<()> {
        self(frontier)
    }
}

/// Seeds and grows the frontier until it empties or reaches `max_vertices`.
pub fn run(
    family: Family,
    palette: usize,
    max_vertices: usize,
    sink: &mut impl StepSink,
) -> Result<CountsTable> {
    if max_vertices < SEED_LEN {
        return Err(Error::MaxVerticesTooSmall(max_vertices));
    }
    let seeds = seed_colorings(family, palette)?;
    let mut table = CountsTable {
        family,
        palette,
        rows: Vec::new(),
        derived_bound: None,
    };
    record(&mut table, &seeds, sink)?;
    grow(seeds, family, max_vertices, table, sink)
}

/// Continues a search from a saved frontier. The returned table holds only
/// the steps computed after `frontier`.
pub fn resume(
    frontier: Frontier,
    family: Family,
    max_vertices: usize,
    sink: &mut impl StepSink,
) -> Result<CountsTable> {
    let table = CountsTable {
        family,
        palette: frontier.palette(),
        rows: Vec::new(),
        derived_bound: frontier.is_empty().then(|| frontier.palette() + 1),
    };
    grow(frontier, family, max_vertices, table, sink)
}

fn record(table: &mut CountsTable, frontier: &Frontier, sink: &mut impl StepSink) -> Result<()> {
    table.rows.push((frontier.len(), frontier.count() as u64));
    if frontier.is_empty() {
        table.derived_bound = Some(table.palette + 1);
    }
    sink.step(frontier)
}

fn grow(
    mut frontier: Frontier,
    family: Family,
    max_vertices: usize,
    mut table: CountsTable,
    sink: &mut impl StepSink,
) -> Result<CountsTable> {
    if frontier.len() >= max_vertices || frontier.is_empty() {
        return Ok(table);
    }
    let order = build_order(family, max_vertices)?;
    while !frontier.is_empty() && frontier.len() < max_vertices {
        frontier = extend(&frontier, &order)?;
        record(&mut table, &frontier, sink)?;
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(f: &Frontier) -> Vec<Vec<u8>> {
        f.rows().map(<[u8]>::to_vec).collect()
    }

    #[test]
    fn canonical_examples() {
        assert_eq!(canonical_seed_form(&[3, 1, 4, 3]).unwrap(), [0, 1, 2, 0]);
        assert_eq!(canonical_seed_form(&[0, 1, 2, 3]).unwrap(), [0, 1, 2, 3]);
        assert_eq!(canonical_seed_form(&[7, 7, 2, 5]).unwrap(), [0, 0, 1, 2]);
        assert_eq!(
            canonical_seed_form(&[9, 8, 9, 8, 1, 2]).unwrap(),
            [0, 1, 0, 1]
        );
        assert!(canonical_seed_form(&[0, 1, 2]).is_err());
    }

    #[test]
    fn canonical_is_idempotent() {
        for a in 0..5u8 {
            for b in 0..5u8 {
                for c in 0..5u8 {
                    for d in 0..5u8 {
                        let once = canonical_seed_form(&[a, b, c, d]).unwrap();
                        assert_eq!(canonical_seed_form(&once).unwrap(), once);
                    }
                }
            }
        }
    }

    #[test]
    fn seeds_per_family() {
        let s = seed_colorings(Family::Cartesian, 5).unwrap();
        assert_eq!(
            rows(&s),
            vec![vec![0, 1, 1, 2], vec![0, 1, 2, 0], vec![0, 1, 2, 3]]
        );
        let s = seed_colorings(Family::Strong, 8).unwrap();
        assert_eq!(rows(&s), vec![vec![0, 1, 2, 3]]);
        let s = seed_colorings(Family::Triangular, 8).unwrap();
        assert_eq!(rows(&s), vec![vec![0, 1, 2, 0], vec![0, 1, 2, 3]]);
    }

    #[test]
    fn seeds_with_few_colors() {
        assert!(seed_colorings(Family::Cartesian, 2).unwrap().is_empty());
        assert!(seed_colorings(Family::Strong, 3).unwrap().is_empty());
        assert_eq!(seed_colorings(Family::Cartesian, 3).unwrap().count(), 2);
        assert!(seed_colorings(Family::Cartesian, 0).is_err());
    }

    #[test]
    fn first_cartesian_counts() {
        let order = build_order(Family::Cartesian, 10).unwrap();
        let mut f = seed_colorings(Family::Cartesian, 5).unwrap();
        let mut counts = vec![f.count()];
        for _ in 0..6 {
            f = extend(&f, &order).unwrap();
            counts.push(f.count());
        }
        assert_eq!(counts, vec![3, 10, 22, 77, 146, 238, 730]);

        let order = build_order(Family::Strong, 6).unwrap();
        let f = extend(&seed_colorings(Family::Strong, 8).unwrap(), &order).unwrap();
        assert_eq!(f.count(), 6);
    }

    #[test]
    fn extend_rejects_exhausted_order() {
        let order = build_order(Family::Cartesian, 4).unwrap();
        let seeds = seed_colorings(Family::Cartesian, 5).unwrap();
        assert!(matches!(
            extend(&seeds, &order),
            Err(Error::OrderExhausted(4))
        ));
    }

    #[test]
    fn run_stops_at_zero() {
        // Three colors cannot even color the king graph's 2x2 seed block.
        let mut seen = Vec::new();
        let t = run(Family::Strong, 3, 10, &mut |f: &Frontier| {
            seen.push(f.count());
            Ok(())
        })
        .unwrap();
        assert_eq!(t.rows, vec![(4, 0)]);
        assert_eq!(t.derived_bound, Some(4));
        assert_eq!(seen, vec![0]);
    }

    #[test]
    fn run_without_bound_stops_at_max() {
        let t = run(Family::Cartesian, 5, 6, &mut |_: &Frontier| Ok(())).unwrap();
        assert_eq!(t.rows, vec![(4, 3), (5, 10), (6, 22)]);
        assert_eq!(t.derived_bound, None);
        assert!(run(Family::Cartesian, 5, 3, &mut |_: &Frontier| Ok(())).is_err());
    }

    #[test]
    fn csv_round_trip() {
        let t = run(Family::Cartesian, 5, 8, &mut |_: &Frontier| Ok(())).unwrap();
        let text = t.to_csv().unwrap();
        assert!(text.starts_with("i,n\n4,3\n5,10\n"));
        assert_eq!(CountsTable::parse_csv_rows(&text).unwrap(), t.rows);
    }
}
