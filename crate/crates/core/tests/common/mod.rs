#![allow(dead_code)]

use thue_grid::cli::run_cli;
use thue_grid::{build_order, Family, PrefixGraph};

pub const TABLE_CARTESIAN_5: &[(usize, u64)] = &[
    (4, 3),
    (5, 10),
    (6, 22),
    (7, 77),
    (8, 146),
    (9, 238),
    (10, 730),
    (11, 1279),
    (12, 1627),
    (13, 4619),
    (14, 6691),
    (15, 7405),
    (16, 6881),
    (17, 17196),
    (18, 19680),
    (19, 14702),
    (20, 8497),
    (21, 21241),
    (22, 20825),
    (23, 12625),
    (24, 5425),
    (25, 2666),
    (26, 6692),
    (27, 5517),
    (28, 2956),
    (29, 988),
    (30, 489),
    (31, 1139),
    (32, 773),
    (33, 396),
    (34, 127),
    (35, 37),
    (36, 14),
    (37, 26),
    (38, 25),
    (39, 7),
    (40, 2),
    (41, 0),
];

pub const TABLE_STRONG_8: &[(usize, u64)] = &[
    (4, 1),
    (5, 6),
    (6, 24),
    (7, 136),
    (8, 456),
    (9, 1860),
    (10, 8064),
    (11, 16392),
    (12, 32568),
    (13, 90144),
    (14, 183384),
    (15, 102816),
    (16, 127512),
    (17, 250104),
    (18, 35280),
    (19, 3144),
    (20, 0),
];

pub const TABLE_TRIANGULAR_8: &[(usize, u64)] = &[
    (4, 2),
    (5, 11),
    (6, 44),
    (7, 216),
    (8, 756),
    (9, 3000),
    (10, 13284),
    (11, 28872),
    (12, 59868),
    (13, 177384),
    (14, 387984),
    (15, 320736),
    (16, 557112),
    (17, 1103904),
    (18, 245520),
    (19, 38304),
    (20, 1800),
    (21, 3480),
    (22, 960),
    (23, 0),
];

/// Prefix of the fixed point of 0 -> 012, 1 -> 02, 2 -> 1.
pub fn ternary_square_free(len: usize) -> Vec<u8> {
    let mut word = vec![0u8];
    while word.len() < len {
        word = word
            .iter()
            .flat_map(|&a| match a {
                0 => &[0u8, 1, 2][..],
                1 => &[0, 2][..],
                _ => &[1][..],
            })
            .copied()
            .collect();
    }
    word.truncate(len);
    word
}

/// Direct factor comparison, independent of any graph search.
pub fn is_square_free(word: &[u8]) -> bool {
    (0..word.len()).all(|start| {
        (1..=(word.len() - start) / 2)
            .all(|k| word[start..start + k] != word[start + k..start + 2 * k])
    })
}

/// Every word of length `len` over `0..c`.
pub fn words(c: u8, len: usize) -> impl Iterator<Item = Vec<u8>> {
    let total = (c as u64).pow(len as u32);
    (0..total).map(move |mut code| {
        let mut w = vec![0u8; len];
        for slot in w.iter_mut().rev() {
            *slot = (code % c as u64) as u8;
            code /= c as u64;
        }
        w
    })
}

pub fn prefix(family: Family, i: usize) -> PrefixGraph {
    PrefixGraph::from_order(&build_order(family, i).unwrap(), i).unwrap()
}

/// Runs the CLI in-process.
pub fn cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run_cli(
        std::iter::once("thue-grid").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}
