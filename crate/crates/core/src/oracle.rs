//! Slow reference implementations. Nothing here shares code with the
//! checker's pair search or the enumerator's frontier; both are validated
//! against these.

use crate::checker::{Coloring, Join, Witness};
use crate::error::{Error, Result};
use crate::lattice::{build_order, Family, PrefixGraph};

/// Upper bound on the number of colorings [`oracle_count`] will test.
pub const ORACLE_GUARD: u128 = 100_000_000;

/// Enumerates every simple path by plain depth-first search and reports the
/// first one of even length whose halves carry the same color sequence.
pub fn oracle_find_repetitive(g: &PrefixGraph, f: &Coloring) -> Result<Option<Witness>> {
    if f.len() != g.n() {
        return Err(Error::LengthMismatch {
            expected: g.n(),
            found: f.len(),
        });
    }
    let colors = f.as_slice();
    let mut on_path = vec![false; g.n()];
    let mut path = Vec::with_capacity(g.n());
    for start in 0..g.n() {
        path.push(start);
        on_path[start] = true;
        if let Some(w) = walk(g, colors, &mut path, &mut on_path) {
            return Ok(Some(w));
        }
        on_path[start] = false;
        path.pop();
    }
    Ok(None)
}

fn walk(
    g: &PrefixGraph,
    colors: &[u8],
    path: &mut Vec<usize>,
    on_path: &mut [bool],
) -> Option<Witness> {
    if path.len().is_multiple_of(2) {
        let k = path.len() / 2;
        if (0..k).all(|j| colors[path[j]] == colors[path[j + k]]) {
            return Some(Witness {
                first_half: path[..k].to_vec(),
                second_half: path[k..].to_vec(),
                joined_at: Join::FirstThenSecond,
            });
        }
    }
    let last = *path.last().unwrap();
    for &next in g.neighbors(last) {
        let next = next as usize;
        if on_path[next] {
            continue;
        }
        on_path[next] = true;
        path.push(next);
        let found = walk(g, colors, path, on_path);
        path.pop();
        on_path[next] = false;
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Counts the non-repetitive `c`-colorings of the `i`-vertex prefix whose
/// first four colors are in first-occurrence form, by testing every one.
pub fn oracle_count(family: Family, c: usize, i: usize) -> Result<u64> {
    if c == 0 || c > 255 {
        return Err(Error::InvalidColorCount(c));
    }
    let order = build_order(family, i)?;
    let g = PrefixGraph::from_order(&order, i)?;

    let seeds: Vec<Vec<u8>> = all_words(c, 4)
        .into_iter()
        .filter(|w| is_first_occurrence_form(w))
        .collect();
    let work = (seeds.len() as u128).saturating_mul((c as u128).saturating_pow((i - 4) as u32));
    if work > ORACLE_GUARD {
        return Err(Error::OracleIntractable(work));
    }

    let tails = all_words(c, i - 4);
    let mut count = 0;
    for seed in &seeds {
        for tail in &tails {
            let colors: Vec<u8> = seed.iter().chain(tail).copied().collect();
            let f = Coloring::new(colors, c)?;
            if oracle_find_repetitive(&g, &f)?.is_none() {
                count += 1;
            }
        }
    }
    Ok(count)
}

fn is_first_occurrence_form(word: &[u8]) -> bool {
    let mut next = 0;
    for &col in word {
        if col > next {
            return false;
        }
        if col == next {
            next += 1;
        }
    }
    true
}

/// Every word of length `len` over `0..c`, lexicographically.
fn all_words(c: usize, len: usize) -> Vec<Vec<u8>> {
    let mut words = vec![Vec::new()];
    for _ in 0..len {
        words = words
            .into_iter()
            .flat_map(|w| {
                (0..c as u8).map(move |col| {
                    let mut next = w.clone();
                    next.push(col);
                    next
                })
            })
            .collect();
    }
    words
}
