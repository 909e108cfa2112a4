//! Binary frontier snapshots.
//!
//! Layout, little-endian:
//!
//! ```text
//! magic "NRCF" | version u16 | family u8 | colors u8 | i u32 | rows u64 | rows × i bytes
//! ```

use std::fs;
use std::io::{self, Read, Write};
use std::path::Path;

use crate::enumerator::{is_seed_canonical, Frontier};
use crate::error::{CheckpointError, Error, Result};
use crate::lattice::Family;

pub const MAGIC: &[u8; 4] = b"NRCF";
pub const FORMAT_VERSION: u16 = 1;

const HEADER_LEN: usize = 4 + 2 + 1 + 1 + 4 + 8;

pub fn save_checkpoint(frontier: &Frontier, family: Family, mut out: impl Write) -> Result<()> {
    let mut header = Vec::with_capacity(HEADER_LEN);
    header.extend_from_slice(MAGIC);
    header.extend_from_slice(&FORMAT_VERSION.to_le_bytes());
    header.push(family.id());
    header.push(frontier.palette() as u8);
    header.extend_from_slice(&(frontier.len() as u32).to_le_bytes());
    header.extend_from_slice(&(frontier.count() as u64).to_le_bytes());
    out.write_all(&header)?;
    out.write_all(frontier.as_bytes())?;
    out.flush()?;
    Ok(())
}

pub fn load_checkpoint(mut input: impl Read) -> Result<(Frontier, Family)> {
    let mut header = [0u8; HEADER_LEN];
    read_exact(&mut input, &mut header)?;
    if &header[0..4] != MAGIC {
        return Err(CheckpointError::BadMagic.into());
    }
    let version = u16::from_le_bytes([header[4], header[5]]);
    if version != FORMAT_VERSION {
        return Err(CheckpointError::VersionMismatch(version).into());
    }
    let family = Family::from_id(header[6]).ok_or(CheckpointError::UnknownFamily(header[6]))?;
    let palette = header[7];
    let len = u32::from_le_bytes(header[8..12].try_into().unwrap()) as usize;
    let rows = u64::from_le_bytes(header[12..20].try_into().unwrap());
    if palette == 0 || len < 4 {
        return Err(CheckpointError::CorruptRecord {
            row: 0,
            reason: format!("header declares {palette} colors and prefix length {len}"),
        }
        .into());
    }

    let body_len = rows
        .checked_mul(len as u64)
        .and_then(|b| usize::try_from(b).ok())
        .ok_or(CheckpointError::Truncated)?;
    let mut data = Vec::new();
    input
        .by_ref()
        .take(body_len as u64)
        .read_to_end(&mut data)?;
    if data.len() != body_len {
        return Err(CheckpointError::Truncated.into());
    }
    let mut probe = [0u8; 1];
    if input.read(&mut probe)? != 0 {
        return Err(CheckpointError::TrailingBytes.into());
    }

    for (r, row) in data.chunks_exact(len).enumerate() {
        if let Some(&c) = row.iter().find(|&&c| c >= palette) {
            return Err(CheckpointError::CorruptRecord {
                row: r as u64,
                reason: format!("color id {c} with {palette} colors"),
            }
            .into());
        }
        if !is_seed_canonical(row) {
            return Err(CheckpointError::InvariantViolation {
                row: r as u64,
                reason: "seed colors are not in first-occurrence form".into(),
            }
            .into());
        }
    }
    Ok((Frontier::from_rows(len, palette as usize, data)?, family))
}

fn read_exact(input: &mut impl Read, buf: &mut [u8]) -> Result<()> {
    input.read_exact(buf).map_err(|e| match e.kind() {
        io::ErrorKind::UnexpectedEof => CheckpointError::Truncated.into(),
        _ => Error::Io(e),
    })
}

/// Rejects a checkpoint taken for a different family or color count.
pub fn expect_run(
    frontier: &Frontier,
    found: Family,
    family: Family,
    palette: usize,
) -> Result<()> {
    if found != family {
        return Err(CheckpointError::FamilyMismatch {
            expected: family,
            found,
        }
        .into());
    }
    if frontier.palette() != palette {
        return Err(CheckpointError::ColorsMismatch {
            expected: palette as u8,
            found: frontier.palette() as u8,
        }
        .into());
    }
    Ok(())
}

/// Writes to a sibling temporary file and renames it over `path`, so a
/// crash mid-write leaves the previous checkpoint intact.
pub fn write_checkpoint_file(path: &Path, frontier: &Frontier, family: Family) -> Result<()> {
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    let tmp = Path::new(&tmp);
    {
        let file = fs::File::create(tmp)?;
        save_checkpoint(frontier, family, io::BufWriter::new(file))?;
    }
    fs::rename(tmp, path)?;
    Ok(())
}

pub fn read_checkpoint_file(path: &Path) -> Result<(Frontier, Family)> {
    let file = fs::File::open(path)?;
    load_checkpoint(io::BufReader::new(file))
}
