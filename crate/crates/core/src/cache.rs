//! On-disk cache of enumerated group tables, keyed by the Cartan matrix.
//!
//! The format is a little-endian binary dump of the table arrays with a
//! version field and a SHA-256 checksum of the inversion-set array. A
//! reload must be bit-identical to a fresh build; the checksum certifies
//! the stored array, and the loader re-derives everything else from it.

use crate::error::{Error, Result};
use crate::rootdata::{CoxeterDiagram, RootSystem};
use crate::weyl::GroupTable;
use sha2::{Digest, Sha256};
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

const MAGIC: &[u8; 4] = b"WGT1";
const FORMAT_VERSION: u32 = 1;

/// Environment variable naming the default cache directory.
pub const CACHE_DIR_ENV: &str = "BALANCED_IDEALS_CACHE_DIR";

/// Content key of a diagram: format version plus the Cartan matrix.
pub fn cache_key(diagram: &CoxeterDiagram) -> String {
    let mut hasher = Sha256::new();
    hasher.update(FORMAT_VERSION.to_le_bytes());
    hasher.update((diagram.rank() as u64).to_le_bytes());
    for row in diagram.cartan_matrix() {
        for &v in row {
            hasher.update(v.to_le_bytes());
        }
    }
    let digest = hasher.finalize();
    digest[..16].iter().map(|b| format!("{b:02x}")).collect()
}

fn cache_path(dir: &Path, diagram: &CoxeterDiagram) -> PathBuf {
    dir.join(format!("{}-{}.wgt", diagram.label(), cache_key(diagram)))
}

/// Serialize the table into the cache directory; returns the file path.
pub fn save_table(dir: &Path, table: &GroupTable) -> Result<PathBuf> {
    std::fs::create_dir_all(dir)?;
    let path = cache_path(dir, table.root_system().diagram());
    let (inv_words, lengths, left, inverse) = table.raw_parts();
    let rank = table.rank();

    let mut out: Vec<u8> = Vec::new();
    out.extend_from_slice(MAGIC);
    out.extend_from_slice(&FORMAT_VERSION.to_le_bytes());
    out.extend_from_slice(&(rank as u32).to_le_bytes());
    out.extend_from_slice(&(table.num_positive() as u32).to_le_bytes());
    out.extend_from_slice(&(table.size() as u64).to_le_bytes());
    for row in table.root_system().diagram().cartan_matrix() {
        for &v in row {
            out.extend_from_slice(&v.to_le_bytes());
        }
    }
    for &w in inv_words {
        out.extend_from_slice(&w.to_le_bytes());
    }
    for &l in lengths {
        out.extend_from_slice(&l.to_le_bytes());
    }
    for &x in left {
        out.extend_from_slice(&x.to_le_bytes());
    }
    for &x in inverse {
        out.extend_from_slice(&x.to_le_bytes());
    }
    out.extend_from_slice(&table.inversion_checksum());
    // Whole-payload checksum, so any corruption is caught before the
    // arrays are interpreted.
    let file_digest: [u8; 32] = Sha256::digest(&out).into();
    out.extend_from_slice(&file_digest);

    // Write atomically so a crashed run never leaves a torn file behind.
    let tmp = path.with_extension("wgt.tmp");
    {
        let mut f = std::fs::File::create(&tmp)?;
        f.write_all(&out)?;
        f.sync_all()?;
    }
    std::fs::rename(&tmp, &path)?;
    Ok(path)
}

/// Load the cached table for a diagram, if present. The checksum of the
/// loaded inversion-set array must match the stored one.
pub fn load_table(dir: &Path, diagram: &CoxeterDiagram) -> Result<Option<GroupTable>> {
    let path = cache_path(dir, diagram);
    let mut data = Vec::new();
    match std::fs::File::open(&path) {
        Ok(mut f) => {
            f.read_to_end(&mut data)?;
        }
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(e.into()),
    }
    if data.len() < 32 {
        return Err(Error::CacheFormat("truncated file".into()));
    }
    let (payload, file_digest) = data.split_at(data.len() - 32);
    let expected: [u8; 32] = Sha256::digest(payload).into();
    if file_digest != expected {
        return Err(Error::CacheFormat("file checksum mismatch".into()));
    }
    let mut cur = Cursor {
        data: payload,
        at: 0,
    };
    if cur.bytes(4)? != MAGIC {
        return Err(Error::CacheFormat("bad magic".into()));
    }
    if cur.u32()? != FORMAT_VERSION {
        return Err(Error::CacheFormat("format version mismatch".into()));
    }
    let rank = cur.u32()? as usize;
    let num_roots = cur.u32()? as usize;
    let size = cur.u64()? as usize;
    if rank != diagram.rank() {
        return Err(Error::CacheFormat("rank mismatch".into()));
    }
    let mut cartan = vec![vec![0i64; rank]; rank];
    for row in cartan.iter_mut() {
        for v in row.iter_mut() {
            *v = cur.i64()?;
        }
    }
    if cartan != diagram.cartan_matrix() {
        return Err(Error::CacheFormat("Cartan matrix mismatch".into()));
    }
    let wps = num_roots.div_ceil(64);
    let inv_words: Vec<u64> = (0..size * wps).map(|_| cur.u64()).collect::<Result<_>>()?;
    let lengths: Vec<u16> = (0..size).map(|_| cur.u16()).collect::<Result<_>>()?;
    let left: Vec<u32> = (0..size * rank).map(|_| cur.u32()).collect::<Result<_>>()?;
    let inverse: Vec<u32> = (0..size).map(|_| cur.u32()).collect::<Result<_>>()?;
    let stored_checksum: Vec<u8> = cur.bytes(32)?.to_vec();
    if cur.at != payload.len() {
        return Err(Error::CacheFormat("trailing bytes".into()));
    }

    let root_system = RootSystem::new(diagram.clone());
    if root_system.num_positive() != num_roots {
        return Err(Error::CacheFormat("positive-root count mismatch".into()));
    }
    // Validate array shapes and indices before trusting the tables.
    if size == 0
        || inv_words.len() != size * wps
        || left.len() != size * rank
        || inverse.len() != size
    {
        return Err(Error::CacheFormat("array sizes inconsistent".into()));
    }
    if left.iter().chain(inverse.iter()).any(|&x| x as usize >= size) {
        return Err(Error::CacheFormat("element index out of range".into()));
    }
    let w0 = (size - 1) as u32;
    let table = GroupTable::from_parts(root_system, inv_words, lengths, left, inverse, w0);
    if table.inversion_checksum() != stored_checksum.as_slice() {
        return Err(Error::CacheFormat("inversion-set checksum mismatch".into()));
    }
    Ok(Some(table))
}

/// Load from cache when possible, otherwise build (and save when a cache
/// directory is given). Returns the table and whether it was a cache hit.
pub fn load_or_build(
    dir: Option<&Path>,
    diagram: &CoxeterDiagram,
    capacity: u64,
) -> Result<(GroupTable, bool)> {
    if let Some(dir) = dir {
        match load_table(dir, diagram) {
            Ok(Some(table)) => return Ok((table, true)),
            Ok(None) => {}
            // A corrupt cache entry falls back to a fresh build.
            Err(Error::CacheFormat(_)) => {}
            Err(e) => return Err(e),
        }
    }
    let table =
        GroupTable::enumerate_with_capacity(RootSystem::new(diagram.clone()), capacity)?;
    if let Some(dir) = dir {
        save_table(dir, &table)?;
    }
    Ok((table, false))
}

struct Cursor<'a> {
    data: &'a [u8],
    at: usize,
}

impl<'a> Cursor<'a> {
    fn bytes(&mut self, n: usize) -> Result<&'a [u8]> {
        if self.at + n > self.data.len() {
            return Err(Error::CacheFormat("truncated file".into()));
        }
        let s = &self.data[self.at..self.at + n];
        self.at += n;
        Ok(s)
    }

    fn u16(&mut self) -> Result<u16> {
        Ok(u16::from_le_bytes(self.bytes(2)?.try_into().unwrap()))
    }

    fn u32(&mut self) -> Result<u32> {
        Ok(u32::from_le_bytes(self.bytes(4)?.try_into().unwrap()))
    }

    fn u64(&mut self) -> Result<u64> {
        Ok(u64::from_le_bytes(self.bytes(8)?.try_into().unwrap()))
    }

    fn i64(&mut self) -> Result<i64> {
        Ok(i64::from_le_bytes(self.bytes(8)?.try_into().unwrap()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_is_bit_identical() {
        let dir = std::env::temp_dir().join(format!("wgt-cache-test-{}", std::process::id()));
        let diagram = CoxeterDiagram::parse("B3").unwrap();
        let fresh = GroupTable::enumerate(RootSystem::new(diagram.clone())).unwrap();
        let path = save_table(&dir, &fresh).unwrap();
        assert!(path.exists());
        let loaded = load_table(&dir, &diagram).unwrap().unwrap();
        assert_eq!(loaded.size(), fresh.size());
        assert_eq!(loaded.inversion_checksum(), fresh.inversion_checksum());
        assert_eq!(loaded.raw_parts().0, fresh.raw_parts().0);
        assert_eq!(loaded.raw_parts().2, fresh.raw_parts().2);
        assert_eq!(loaded.iota(), fresh.iota());
        for w in 0..fresh.size() as u32 {
            assert_eq!(loaded.w0_left(w), fresh.w0_left(w));
        }
        std::fs::remove_dir_all(&dir).ok();
    }

    #[test]
    fn corrupt_cache_detected() {
        let dir = std::env::temp_dir().join(format!("wgt-corrupt-test-{}", std::process::id()));
        let diagram = CoxeterDiagram::parse("A2").unwrap();
        let fresh = GroupTable::enumerate(RootSystem::new(diagram.clone())).unwrap();
        let path = save_table(&dir, &fresh).unwrap();
        let mut bytes = std::fs::read(&path).unwrap();
        let mid = bytes.len() / 2;
        bytes[mid] ^= 0xff;
        std::fs::write(&path, &bytes).unwrap();
        assert!(matches!(
            load_table(&dir, &diagram),
            Err(Error::CacheFormat(_))
        ));
        // load_or_build falls back to a fresh build.
        let (rebuilt, hit) = load_or_build(Some(&dir), &diagram, 1000).unwrap();
        assert!(!hit);
        assert_eq!(rebuilt.size(), 6);
        std::fs::remove_dir_all(&dir).ok();
    }

    #[test]
    fn miss_then_hit() {
        let dir = std::env::temp_dir().join(format!("wgt-hit-test-{}", std::process::id()));
        std::fs::remove_dir_all(&dir).ok();
        let diagram = CoxeterDiagram::parse("A3").unwrap();
        let (_, hit) = load_or_build(Some(&dir), &diagram, 1000).unwrap();
        assert!(!hit);
        let (table, hit) = load_or_build(Some(&dir), &diagram, 1000).unwrap();
        assert!(hit);
        assert_eq!(table.size(), 24);
        std::fs::remove_dir_all(&dir).ok();
    }
}
