use std::fmt;
use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::error::QgrError;

/// Which columns a level's algebra uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ColumnWindow {
    /// Square matrix algebra: columns `-m..=n-1`.
    Full,
    /// Rectangular algebra `k_q[b_ij]`: columns `-m..=-1` only.
    Leading,
}

/// A finite level `(m, n)`: rows run over `-m..=n-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Level {
    m: i32,
    n: i32,
    window: ColumnWindow,
}

impl Level {
    /// Square level. `n = 0` is allowed so that `SL_{m,0}` can be built.
    pub fn new(m: i32, n: i32) -> Result<Self, QgrError> {
        Self::with_window(m, n, ColumnWindow::Full)
    }

    /// Rectangular level whose columns are restricted to `-m..=-1`.
    pub fn rect(m: i32, n: i32) -> Result<Self, QgrError> {
        Self::with_window(m, n, ColumnWindow::Leading)
    }

    pub fn with_window(m: i32, n: i32, window: ColumnWindow) -> Result<Self, QgrError> {
        if m < 1 || n < 0 {
            return Err(QgrError::InvalidLevel { m, n });
        }
        Ok(Self { m, n, window })
    }

    pub fn m(&self) -> i32 {
        self.m
    }

    pub fn n(&self) -> i32 {
        self.n
    }

    pub fn window(&self) -> ColumnWindow {
        self.window
    }

    /// Total matrix size `m + n`.
    pub fn size(&self) -> usize {
        (self.m + self.n) as usize
    }

    pub fn as_full(&self) -> Self {
        Self {
            window: ColumnWindow::Full,
            ..*self
        }
    }

    pub fn as_rect(&self) -> Self {
        Self {
            window: ColumnWindow::Leading,
            ..*self
        }
    }

    pub fn rows(&self) -> RangeInclusive<i32> {
        -self.m..=self.n - 1
    }

    pub fn cols(&self) -> RangeInclusive<i32> {
        match self.window {
            ColumnWindow::Full => -self.m..=self.n - 1,
            ColumnWindow::Leading => -self.m..=-1,
        }
    }

    pub fn contains(&self, g: Gen) -> bool {
        self.rows().contains(&g.row) && self.cols().contains(&g.col)
    }

    /// All generators in ascending order.
    pub fn generators(&self) -> Vec<Gen> {
        self.rows()
            .flat_map(|i| self.cols().map(move |j| Gen::new(i, j)))
            .collect()
    }

    /// `self >= other` componentwise with the same column window.
    pub fn dominates(&self, other: &Level) -> bool {
        self.window == other.window && self.m >= other.m && self.n >= other.n
    }

    pub(crate) fn require_dominates(&self, to: &Level) -> Result<(), QgrError> {
        if self.dominates(to) {
            Ok(())
        } else {
            Err(QgrError::NotDominating {
                from: *self,
                to: *to,
            })
        }
    }

    pub(crate) fn require_same(&self, other: &Level) -> Result<(), QgrError> {
        if self == other {
            Ok(())
        } else {
            Err(QgrError::LevelMismatch {
                left: *self,
                right: *other,
            })
        }
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.window {
            ColumnWindow::Full => write!(f, "({},{})", self.m, self.n),
            ColumnWindow::Leading => write!(f, "({},{};rect)", self.m, self.n),
        }
    }
}

/// A generator `a_ij`; the derived order is lexicographic on `(row, col)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Gen {
    pub row: i32,
    pub col: i32,
}

impl Gen {
    pub const fn new(row: i32, col: i32) -> Self {
        Self { row, col }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a[{},{}]", self.row, self.col)
    }
}

/// A monomial: an ordered sequence of generators. The empty word is the unit.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub(crate) Vec<Gen>);

impl Word {
    pub fn unit() -> Self {
        Self(Vec::new())
    }

    pub fn new(letters: Vec<Gen>) -> Self {
        Self(letters)
    }

    pub fn letters(&self) -> &[Gen] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sorted ascending, i.e. a PBW normal word.
    pub fn is_normal(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.0.iter().map(Gen::to_string).collect();
        f.write_str(&parts.join("*"))
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let pairs: Vec<[i32; 2]> = self.0.iter().map(|g| [g.row, g.col]).collect();
        pairs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let pairs = Vec::<[i32; 2]>::deserialize(d)?;
        Ok(Word(pairs.into_iter().map(|[i, j]| Gen::new(i, j)).collect()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn windows() {
        let sq = Level::new(2, 1).unwrap();
        assert_eq!(sq.rows(), -2..=0);
        assert_eq!(sq.cols(), -2..=0);
        assert_eq!(sq.generators().len(), 9);
        let rect = Level::rect(2, 1).unwrap();
        assert_eq!(rect.cols(), -2..=-1);
        assert_eq!(rect.generators().len(), 6);
        assert!(!rect.contains(Gen::new(0, 0)));
    }

    #[test]
    fn validation_and_dominance() {
        assert!(Level::new(0, 1).is_err());
        assert!(Level::new(2, 0).is_ok());
        let hi = Level::new(2, 2).unwrap();
        let lo = Level::new(1, 2).unwrap();
        assert!(hi.dominates(&lo));
        assert!(!lo.dominates(&hi));
        assert!(!hi.dominates(&lo.as_rect()));
    }
}
