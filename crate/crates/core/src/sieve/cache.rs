//! Binary σ-table cache.
//!
//! Layout (little endian): `b"SGMA"`, `version: u32`, `lo: u32`, `hi: u32`,
//! then `hi - lo + 1` values `σ(n): u64` for `n = lo..=hi`.

use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::{Path, PathBuf};

use super::segment::SigmaTable;
use crate::error::{Error, Result};

pub const CACHE_MAGIC: [u8; 4] = *b"SGMA";
pub const CACHE_VERSION: u32 = 1;
pub const CACHE_HEADER_LEN: usize = 16;

/// Environment variable naming the cache directory.
pub const CACHE_DIR_ENV: &str = "DDL_CACHE_DIR";

pub fn cache_file_name(lo: u64, hi: u64) -> String {
    format!("sigma_{lo}_{hi}.sgma")
}

pub fn encode_header(lo: u32, hi: u32) -> [u8; CACHE_HEADER_LEN] {
    let mut h = [0u8; CACHE_HEADER_LEN];
    h[..4].copy_from_slice(&CACHE_MAGIC);
    h[4..8].copy_from_slice(&CACHE_VERSION.to_le_bytes());
    h[8..12].copy_from_slice(&lo.to_le_bytes());
    h[12..16].copy_from_slice(&hi.to_le_bytes());
    h
}

/// Returns `(lo, hi)`.
pub fn decode_header(h: &[u8; CACHE_HEADER_LEN]) -> Result<(u64, u64)> {
    if h[..4] != CACHE_MAGIC {
        return Err(Error::CacheFormat("bad magic".into()));
    }
    let version = u32::from_le_bytes(h[4..8].try_into().unwrap());
    if version != CACHE_VERSION {
        return Err(Error::CacheFormat(format!("unsupported version {version}")));
    }
    let lo = u32::from_le_bytes(h[8..12].try_into().unwrap()) as u64;
    let hi = u32::from_le_bytes(h[12..16].try_into().unwrap()) as u64;
    if lo == 0 || lo > hi {
        return Err(Error::CacheFormat(format!("bad range [{lo}, {hi}]")));
    }
    Ok((lo, hi))
}

pub fn write_sigma_cache(path: &Path, lo: u64, sigma: &[u64]) -> Result<()> {
    if sigma.is_empty() {
        return Err(Error::CacheFormat("empty table".into()));
    }
    let hi = lo + sigma.len() as u64 - 1;
    let (lo32, hi32) = match (u32::try_from(lo), u32::try_from(hi)) {
        (Ok(a), Ok(b)) if a >= 1 => (a, b),
        _ => return Err(Error::CacheFormat(format!("range [{lo}, {hi}] does not fit the header"))),
    };
    let mut w = BufWriter::new(File::create(path)?);
    w.write_all(&encode_header(lo32, hi32))?;
    for s in sigma {
        w.write_all(&s.to_le_bytes())?;
    }
    w.flush()?;
    Ok(())
}

/// Returns `(lo, hi, σ values)`.
pub fn read_sigma_cache(path: &Path) -> Result<(u64, u64, Vec<u64>)> {
    let mut r = BufReader::new(File::open(path)?);
    let mut h = [0u8; CACHE_HEADER_LEN];
    r.read_exact(&mut h)?;
    let (lo, hi) = decode_header(&h)?;
    let len = (hi - lo + 1) as usize;
    let mut bytes = Vec::with_capacity(len * 8);
    r.read_to_end(&mut bytes)?;
    if bytes.len() != len * 8 {
        return Err(Error::CacheFormat(format!("expected {} payload bytes, found {}", len * 8, bytes.len())));
    }
    let sigma = bytes.chunks_exact(8).map(|c| u64::from_le_bytes(c.try_into().unwrap())).collect();
    Ok((lo, hi, sigma))
}

impl SigmaTable {
    pub fn save(&self, path: &Path) -> Result<()> {
        write_sigma_cache(path, 1, self.as_slice())
    }

    pub fn load(path: &Path) -> Result<Self> {
        let (lo, _, sigma) = read_sigma_cache(path)?;
        if lo != 1 {
            return Err(Error::CacheFormat(format!("table starts at {lo}, expected 1")));
        }
        Ok(SigmaTable::from_vec(sigma))
    }

    /// Reuse `dir/sigma_1_<hi>.sgma` when present, otherwise sieve (and
    /// write the file when a directory is given).
    pub fn load_or_build(hi: u64, segment_size: usize, dir: Option<&Path>) -> Result<Self> {
        if let Some(dir) = dir {
            let path: PathBuf = dir.join(cache_file_name(1, hi));
            if path.exists() {
                return Self::load(&path);
            }
            let table = Self::build(hi, segment_size)?;
            std::fs::create_dir_all(dir)?;
            table.save(&path)?;
            return Ok(table);
        }
        Self::build(hi, segment_size)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn header_is_sixteen_bytes() {
        let h = encode_header(1, 1000);
        assert_eq!(&h[..4], b"SGMA");
        assert_eq!(decode_header(&h).unwrap(), (1, 1000));
        let mut bad = h;
        bad[0] = b'X';
        assert!(decode_header(&bad).is_err());
        let mut badv = h;
        badv[4] = 9;
        assert!(decode_header(&badv).is_err());
    }
}
