//! Exhaustive search for non-repetitive vertex colorings of finite prefixes
//! of the square grid, the king graph and the triangular lattice.
//!
//! A coloring is non-repetitive when no simple path `v₁…v₂ₖ` has
//! `f(vⱼ) = f(vₖ₊ⱼ)` for all `j`. The enumerator keeps every non-repetitive
//! coloring of a growing prefix; when none survive, the lattice needs more
//! colors than were offered.

pub mod checker;
pub mod checkpoint;
pub mod cli;
pub mod enumerator;
pub mod error;
pub mod lattice;
pub mod oracle;
pub mod vertex_set;

pub use checker::{find_repetitive, find_repetitive_through, Coloring, Join, Witness};
pub use enumerator::{
    canonical_seed_form, extend, resume, run, seed_colorings, CountsTable, Frontier, StepSink,
};
pub use error::{CheckpointError, Error, Result};
pub use lattice::{build_order, neighbors, Coord, Family, PrefixGraph, VertexOrder};
