use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::QgrError;

/// A Maya diagram of virtual cardinality 0: a strictly increasing sequence
/// `a_1 < a_2 < ...` with `a_i = i` from the order on. Only the prefix before
/// the order is stored, and it is kept minimal.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MayaDiagram {
    prefix: Vec<i32>,
}

impl MayaDiagram {
    /// The identity diagram `a_i = i`.
    pub fn identity() -> Self {
        Self::default()
    }

    /// Validates a prefix `(a_1, ..., a_{r-1})` and canonicalizes it.
    pub fn from_prefix(prefix: Vec<i32>) -> Result<Self, QgrError> {
        if !prefix.windows(2).all(|w| w[0] < w[1]) {
            return Err(QgrError::InvalidMaya(format!(
                "{prefix:?} is not strictly increasing"
            )));
        }
        if let Some(&last) = prefix.last() {
            if last > prefix.len() as i32 {
                return Err(QgrError::InvalidMaya(format!(
                    "entry {last} at position {} exceeds its position",
                    prefix.len()
                )));
            }
        }
        let mut prefix = prefix;
        while prefix.last() == Some(&(prefix.len() as i32)) {
            prefix.pop();
        }
        Ok(Self { prefix })
    }

    /// The tilde map: `a_i = l_i` for `i <= m`, `a_i = i` beyond.
    pub fn from_rows(l: &[i32], m: usize) -> Result<Self, QgrError> {
        if l.len() != m {
            return Err(QgrError::InvalidMaya(format!(
                "expected {m} entries, found {}",
                l.len()
            )));
        }
        Self::from_prefix(l.to_vec())
    }

    pub fn prefix(&self) -> &[i32] {
        &self.prefix
    }

    /// The smallest `r` with `a_i = i` for all `i >= r`.
    pub fn order(&self) -> usize {
        self.prefix.len() + 1
    }

    pub fn entry(&self, i: usize) -> i32 {
        assert!(i >= 1, "Maya diagrams are indexed from 1");
        self.prefix.get(i - 1).copied().unwrap_or(i as i32)
    }

    /// `(a_1, ..., a_m)`.
    pub fn truncate(&self, m: usize) -> Vec<i32> {
        (1..=m).map(|i| self.entry(i)).collect()
    }

    /// The row set `{-a_m, ..., -a_1}` of the stable minor at a level with
    /// `m` rows below zero, ascending.
    pub fn row_set(&self, m: usize) -> Vec<i32> {
        self.truncate(m).into_iter().rev().map(|a| -a).collect()
    }

    /// Inverse of [`row_set`](Self::row_set) for an ascending `m`-subset of
    /// `-m..`.
    pub fn from_row_set(rows: &[i32]) -> Result<Self, QgrError> {
        let l: Vec<i32> = rows.iter().rev().map(|r| -r).collect();
        Self::from_rows(&l, rows.len())
    }

    /// All diagrams of order at most `max_order` with entries at least `min`.
    pub fn enumerate(max_order: usize, min: i32) -> Vec<Self> {
        let mut out = Vec::new();
        for r in 1..=max_order {
            let top = r as i32 - 2;
            for prefix in (min..=top).combinations(r - 1) {
                out.push(Self { prefix });
            }
        }
        out
    }
}

impl fmt::Display for MayaDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.prefix.iter().map(i32::to_string).collect();
        write!(f, "[{}|{}]", parts.join(","), self.order())
    }
}

impl FromStr for MayaDiagram {
    type Err = QgrError;

    fn from_str(s: &str) -> Result<Self, QgrError> {
        let bad = |why: &str| QgrError::InvalidMaya(format!("{s:?}: {why}"));
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| bad("expected [a1,...|r]"))?;
        let (list, order) = inner.split_once('|').ok_or_else(|| bad("missing '|'"))?;
        let prefix: Vec<i32> = if list.trim().is_empty() {
            Vec::new()
        } else {
            list.split(',')
                .map(|t| t.trim().parse::<i32>())
                .collect::<Result<_, _>>()
                .map_err(|_| bad("entries must be integers"))?
        };
        let order: usize = order.trim().parse().map_err(|_| bad("order must be a positive integer"))?;
        let d = Self::from_prefix(prefix.clone())?;
        if d.prefix != prefix || order != prefix.len() + 1 {
            return Err(bad("prefix is not canonical or order does not match its length"));
        }
        Ok(d)
    }
}

#[derive(Serialize, Deserialize)]
struct MayaJson {
    prefix: Vec<i32>,
    order: usize,
}

impl Serialize for MayaDiagram {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        MayaJson {
            prefix: self.prefix.clone(),
            order: self.order(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MayaDiagram {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = MayaJson::deserialize(d)?;
        let m = Self::from_prefix(j.prefix).map_err(serde::de::Error::custom)?;
        if m.order() != j.order {
            return Err(serde::de::Error::custom("order does not match prefix"));
        }
        Ok(m)
    }
}
