//! Small shared helpers: subsets of the simple roots and word formatting.

use crate::error::{Error, Result};
use std::fmt;

/// A subset of the simple roots Δ, as a bitmask over 0-based indices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleSet(u64);

impl SimpleSet {
    pub const EMPTY: SimpleSet = SimpleSet(0);

    pub fn full(rank: usize) -> SimpleSet {
        debug_assert!(rank <= 64);
        if rank == 64 {
            SimpleSet(!0)
        } else {
            SimpleSet((1u64 << rank) - 1)
        }
    }

    pub fn from_indices(indices: impl IntoIterator<Item = usize>) -> SimpleSet {
        let mut mask = 0u64;
        for i in indices {
            mask |= 1 << i;
        }
        SimpleSet(mask)
    }

    /// Parse 1-based comma-separated indices, or `all` for the full set.
    pub fn parse(text: &str, rank: usize) -> Result<SimpleSet> {
        let text = text.trim();
        if text.eq_ignore_ascii_case("all") {
            return Ok(SimpleSet::full(rank));
        }
        let mut mask = 0u64;
        for tok in text.split(',') {
            let tok = tok.trim();
            let i: usize = tok
                .parse()
                .map_err(|_| Error::MalformedInput(format!("bad simple-root index {tok:?}")))?;
            if i < 1 || i > rank {
                return Err(Error::MalformedInput(format!(
                    "simple-root index {i} out of range 1..={rank}"
                )));
            }
            mask |= 1 << (i - 1);
        }
        if mask == 0 {
            return Err(Error::MalformedInput("empty simple-root set".into()));
        }
        Ok(SimpleSet(mask))
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.0 >> i & 1 != 0
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn complement(&self, rank: usize) -> SimpleSet {
        SimpleSet(!self.0 & SimpleSet::full(rank).0)
    }

    pub fn is_subset(&self, other: &SimpleSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let mask = self.0;
        (0..64).filter(move |i| mask >> i & 1 != 0)
    }

    /// 1-based indices, sorted.
    pub fn to_one_based(&self) -> Vec<usize> {
        self.iter().map(|i| i + 1).collect()
    }

    /// Render as `{1,3}` with 1-based indices, `{}` when empty.
    pub fn display_one_based(&self) -> String {
        let items: Vec<String> = self.iter().map(|i| (i + 1).to_string()).collect();
        format!("{{{}}}", items.join(","))
    }
}

impl fmt::Debug for SimpleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimpleSet{}", self.display_one_based())
    }
}

/// Render a reduced word as space-separated 1-based generator indices;
/// the identity prints as `e`.
pub fn format_word(word: &[u8]) -> String {
    if word.is_empty() {
        return "e".to_string();
    }
    word.iter()
        .map(|&i| (i as usize + 1).to_string())
        .collect::<Vec<_>>()
        .join(" ")
}
