use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::coeff::LaurentScalar;
use crate::error::QgrError;
use crate::qmatrix::{Level, NCPoly};
use crate::qsl::{quantum_minor, MinorKey};

/// An ordered product of maximal minors, each given by its row set; the
/// columns are always `-m..=-1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct MinorWord(pub Vec<Vec<i32>>);

impl MinorWord {
    pub fn unit() -> Self {
        Self(Vec::new())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn factors(&self) -> &[Vec<i32>] {
        &self.0
    }
}

impl fmt::Display for MinorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|rows| {
                let r: Vec<String> = rows.iter().map(i32::to_string).collect();
                format!("D[{}]", r.join(","))
            })
            .collect();
        f.write_str(&parts.join("*"))
    }
}

/// A linear combination of minor words at a rectangular level.
///
/// Two expressions are congruent iff their evaluations agree; the term
/// maps themselves are not canonical.
#[derive(Clone, PartialEq, Eq)]
pub struct MinorExpr {
    level: Level,
    terms: BTreeMap<MinorWord, LaurentScalar>,
}

pub(crate) fn check_rows(level: Level, rows: &[i32]) -> Result<(), QgrError> {
    if rows.len() != level.m() as usize {
        return Err(QgrError::InvalidMinor(format!(
            "row set {rows:?} must have {} elements at level {level}",
            level.m()
        )));
    }
    MinorKey::leading(level, rows.to_vec()).map(|_| ())
}

impl MinorExpr {
    pub fn zero(level: Level) -> Self {
        Self {
            level: level.as_rect(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(level: Level) -> Self {
        Self::scalar(level, LaurentScalar::one())
    }

    pub fn scalar(level: Level, c: LaurentScalar) -> Self {
        let mut x = Self::zero(level);
        x.add_term(MinorWord::unit(), c);
        x
    }

    /// The generator `D_rows`.
    pub fn generator(level: Level, rows: Vec<i32>) -> Result<Self, QgrError> {
        Self::from_words(level, [(MinorWord(vec![rows]), LaurentScalar::one())])
    }

    pub fn from_words<I>(level: Level, words: I) -> Result<Self, QgrError>
    where
        I: IntoIterator<Item = (MinorWord, LaurentScalar)>,
    {
        let mut x = Self::zero(level);
        for (w, c) in words {
            for rows in &w.0 {
                check_rows(x.level, rows)?;
            }
            x.add_term(w, c);
        }
        Ok(x)
    }

    pub fn level(&self) -> Level {
        self.level
    }

    pub fn terms(&self) -> &BTreeMap<MinorWord, LaurentScalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn add_term(&mut self, w: MinorWord, c: LaurentScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(slot) => {
                *slot += &c;
                if slot.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn scale(&self, c: &LaurentScalar) -> Self {
        let mut out = Self::zero(self.level);
        for (w, x) in &self.terms {
            out.add_term(w.clone(), x * c);
        }
        out
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, QgrError> {
        self.level.require_same(&other.level)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, QgrError> {
        self.try_add(&other.scale(&LaurentScalar::from_int(-1)))
    }

    /// Concatenation product of minor words.
    pub fn try_mul(&self, other: &Self) -> Result<Self, QgrError> {
        self.level.require_same(&other.level)?;
        let mut out = Self::zero(self.level);
        for (u, cu) in &self.terms {
            for (v, cv) in &other.terms {
                let mut w = u.0.clone();
                w.extend(v.0.iter().cloned());
                out.add_term(MinorWord(w), cu * cv);
            }
        }
        Ok(out)
    }

    /// Applies a map on generators (row set ↦ expression at `target`),
    /// extended multiplicatively and linearly.
    pub fn map_generators<F>(&self, target: Level, mut f: F) -> Result<Self, QgrError>
    where
        F: FnMut(&[i32]) -> Result<MinorExpr, QgrError>,
    {
        let mut out = Self::zero(target);
        for (w, c) in &self.terms {
            let mut acc = Self::scalar(target, c.clone());
            for rows in &w.0 {
                acc = acc.try_mul(&f(rows)?)?;
                if acc.is_zero() {
                    break;
                }
            }
            out = out.try_add(&acc)?;
        }
        Ok(out)
    }
}

/// Replaces each row set by its quantum minor and multiplies in order.
pub fn eval_embed(x: &MinorExpr) -> NCPoly {
    let level = x.level;
    let mut out = NCPoly::zero(level);
    for (w, c) in &x.terms {
        out = &out + &eval_word(level, w).scale(c);
    }
    out
}

pub(crate) fn eval_word(level: Level, w: &MinorWord) -> NCPoly {
    w.0.iter().fold(NCPoly::one(level), |acc, rows| {
        let key = MinorKey::leading(level, rows.clone()).expect("validated row set");
        &acc * &quantum_minor(&key)
    })
}

/// Congruence in the Grassmannian ring: equal evaluations.
pub fn minor_expr_equal(x: &MinorExpr, y: &MinorExpr) -> Result<bool, QgrError> {
    Ok(eval_embed(&x.try_sub(y)?).is_zero())
}

impl fmt::Display for MinorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::qmatrix::fmt_sum(
            f,
            self.terms.iter().map(|(w, c)| {
                let body = if w.0.is_empty() { String::new() } else { w.to_string() };
                (body, c)
            }),
        )
    }
}

impl fmt::Debug for MinorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MinorExpr{}[{self}]", self.level)
    }
}
