use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A multiple zeta value index `[k1,...,kr]`: a finite sequence of positive
/// integers. The empty sequence is the unit symbol `[]`.
///
/// Indices are ordered canonically: by weight, then by depth (deeper first),
/// then lexicographically on entries. Every sorted collection in this crate
/// (and therefore every printed combination) follows this order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Index(Vec<u32>);

impl Index {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if let Some(&bad) = parts.iter().find(|&&k| k == 0) {
            return Err(Error::InvalidIndexEntry(bad as u64));
        }
        Ok(Index(parts))
    }

    pub fn empty() -> Self {
        Index(Vec::new())
    }

    /// `[k, k, ..., k]` with `n` copies.
    pub fn repeated(k: u32, n: usize) -> Self {
        assert!(k >= 1, "index entries must be positive");
        Index(vec![k; n])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u64 {
        self.0.iter().map(|&k| k as u64).sum()
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Empty, or last entry at least 2. Exactly the indices whose zeta value converges.
    pub fn is_admissible(&self) -> bool {
        self.0.last().is_none_or(|&k| k >= 2)
    }

    pub fn last(&self) -> Option<u32> {
        self.0.last().copied()
    }

    /// The index with its last entry removed (`k_` in the stuffle recursion).
    pub fn init(&self) -> Index {
        let n = self.0.len().saturating_sub(1);
        Index(self.0[..n].to_vec())
    }

    pub fn pushed(&self, k: u32) -> Index {
        let mut parts = Vec::with_capacity(self.0.len() + 1);
        parts.extend_from_slice(&self.0);
        parts.push(k);
        Index(parts)
    }
}

impl Ord for Index {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.depth().cmp(&self.depth()))
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Index {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<u32>> for Index {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Index::new(parts)
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, k) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{k}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for Index {
    type Err = Error;

    /// Parses `[k1,k2,...]`; whitespace is ignored and `[]` is the empty index.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = compact
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::IndexSyntax(s.to_string()))?;
        if inner.is_empty() {
            return Ok(Index::empty());
        }
        let parts = inner
            .split(',')
            .map(|tok| tok.parse::<u64>().map_err(|_| Error::IndexSyntax(s.to_string())))
            .collect::<Result<Vec<u64>>>()?;
        let parts = parts
            .into_iter()
            .map(|k| match k {
                0 => Err(Error::InvalidIndexEntry(0)),
                k => u32::try_from(k).map_err(|_| Error::IndexSyntax(s.to_string())),
            })
            .collect::<Result<Vec<u32>>>()?;
        Index::new(parts)
    }
}

impl Serialize for Index {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Index {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
