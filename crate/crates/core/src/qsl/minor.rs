use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};

use itertools::Itertools;

use crate::coeff::LaurentScalar;
use crate::error::QgrError;
use crate::qmatrix::{Gen, Level, NCPoly, Word};

/// Row and column sets of a quantum minor.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MinorKey {
    level: Level,
    rows: Vec<i32>,
    cols: Vec<i32>,
}

impl MinorKey {
    pub fn new(level: Level, rows: Vec<i32>, cols: Vec<i32>) -> Result<Self, QgrError> {
        if rows.is_empty() {
            return Err(QgrError::InvalidMinor("rank must be at least 1".into()));
        }
        Self::new_allow_empty(level, rows, cols)
    }

    /// Columns default to `-p..=-1`.
    pub fn leading(level: Level, rows: Vec<i32>) -> Result<Self, QgrError> {
        let p = rows.len() as i32;
        Self::new(level, rows, (-p..0).collect())
    }

    fn new_allow_empty(level: Level, rows: Vec<i32>, cols: Vec<i32>) -> Result<Self, QgrError> {
        if rows.len() != cols.len() {
            return Err(QgrError::InvalidMinor(format!(
                "{} rows but {} columns",
                rows.len(),
                cols.len()
            )));
        }
        for (name, set) in [("rows", &rows), ("columns", &cols)] {
            if !set.windows(2).all(|w| w[0] < w[1]) {
                return Err(QgrError::InvalidMinor(format!(
                    "{name} {set:?} are not strictly increasing"
                )));
            }
        }
        for (&r, &c) in rows.iter().zip(&cols) {
            if !level.rows().contains(&r) || !level.cols().contains(&c) {
                let (row, col) = if level.rows().contains(&r) {
                    (rows[0], c)
                } else {
                    (r, cols[0])
                };
                return Err(QgrError::IndexOutOfRange { row, col, level });
            }
        }
        Ok(Self { level, rows, cols })
    }

    pub fn level(&self) -> Level {
        self.level
    }

    pub fn rows(&self) -> &[i32] {
        &self.rows
    }

    pub fn cols(&self) -> &[i32] {
        &self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }
}

fn inversions(p: &[i32]) -> i32 {
    let mut n = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                n += 1;
            }
        }
    }
    n
}

thread_local! {
    static MINOR_CACHE: RefCell<HashMap<MinorKey, NCPoly>> = RefCell::new(HashMap::new());
}

/// `Σ_σ (-q)^{-l(σ)} a_{i_1 σ(i_1)} ... a_{i_p σ(i_p)}`. The words are sorted
/// by row, so every term is already normal.
pub fn quantum_minor(key: &MinorKey) -> NCPoly {
    if let Some(hit) = MINOR_CACHE.with(|c| c.borrow().get(key).cloned()) {
        return hit;
    }
    let mut terms = BTreeMap::new();
    for perm in key.cols.iter().copied().permutations(key.cols.len()) {
        let word: Vec<Gen> = key
            .rows
            .iter()
            .zip(&perm)
            .map(|(&r, &c)| Gen::new(r, c))
            .collect();
        terms.insert(Word::new(word), LaurentScalar::neg_q_pow(-inversions(&perm)));
    }
    let minor = NCPoly::from_normal_terms(key.level, terms);
    MINOR_CACHE.with(|c| c.borrow_mut().insert(key.clone(), minor.clone()));
    minor
}

/// Minor on possibly empty index sets; the empty minor is 1.
pub(crate) fn minor_or_unit(level: Level, rows: Vec<i32>, cols: Vec<i32>) -> NCPoly {
    let key = MinorKey::new_allow_empty(level, rows, cols).expect("indices come from the level");
    quantum_minor(&key)
}

/// The full minor `D_full` of a square level.
pub fn quantum_det(level: Level) -> NCPoly {
    let level = level.as_full();
    let all: Vec<i32> = level.rows().collect();
    minor_or_unit(level, all.clone(), all)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_minors() {
        let l = Level::new(2, 2).unwrap();
        let k = MinorKey::new(l, vec![-1], vec![-1]).unwrap();
        assert_eq!(quantum_minor(&k), NCPoly::gen(l, -1, -1).unwrap());
        let k = MinorKey::leading(l, vec![-2, -1]).unwrap();
        assert_eq!(
            quantum_minor(&k).to_string(),
            "a[-2,-2]*a[-1,-1] - q^-1*a[-2,-1]*a[-1,-2]"
        );
    }

    #[test]
    fn det_one_one() {
        let l = Level::new(1, 1).unwrap();
        assert_eq!(
            quantum_det(l).to_string(),
            "a[-1,-1]*a[0,0] - q^-1*a[-1,0]*a[0,-1]"
        );
    }

    #[test]
    fn invalid_keys() {
        let l = Level::new(1, 1).unwrap();
        assert!(MinorKey::new(l, vec![], vec![]).is_err());
        assert!(MinorKey::new(l, vec![0, -1], vec![-1, 0]).is_err());
        assert!(MinorKey::new(l, vec![-1], vec![-1, 0]).is_err());
        assert!(MinorKey::new(l, vec![1], vec![0]).is_err());
        assert!(MinorKey::new(l.as_rect(), vec![-1], vec![0]).is_err());
    }
}
