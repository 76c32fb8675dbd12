use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::BigRational;
use serde::{Deserialize, Serialize};

use super::level::{Gen, Level, Word};
use super::rewrite::{self, Terms};
use crate::coeff::LaurentScalar;
use crate::error::QgrError;

/// An element of the level algebra `k_q[a_ij]` in PBW normal form.
///
/// Keys are sorted words and coefficients are nonzero, so two values are
/// equal exactly when their term maps are equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NCPoly {
    level: Level,
    terms: BTreeMap<Word, LaurentScalar>,
}

impl NCPoly {
    pub fn zero(level: Level) -> Self {
        Self {
            level,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(level: Level) -> Self {
        Self::scalar(level, LaurentScalar::one())
    }

    pub fn scalar(level: Level, c: LaurentScalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Word::unit(), c);
        }
        Self { level, terms }
    }

    /// The generator `a_ij`.
    pub fn gen(level: Level, row: i32, col: i32) -> Result<Self, QgrError> {
        Self::normalize(level, &[Gen::new(row, col)], LaurentScalar::one())
    }

    /// Normal form of `c * w` modulo the quantum matrix relations.
    pub fn normalize(level: Level, letters: &[Gen], c: LaurentScalar) -> Result<Self, QgrError> {
        check_letters(&level, letters)?;
        Ok(Self::from_terms(
            level,
            rewrite::normalize_letters(letters, &c),
        ))
    }

    /// Sums `c * w` over arbitrary (not necessarily sorted) words.
    pub fn from_words<I>(level: Level, words: I) -> Result<Self, QgrError>
    where
        I: IntoIterator<Item = (Vec<Gen>, LaurentScalar)>,
    {
        let mut acc = Terms::new();
        for (w, c) in words {
            check_letters(&level, &w)?;
            rewrite::mul_into(&mut acc, &[], &w, &c);
        }
        Ok(Self::from_terms(level, acc))
    }

    pub(crate) fn from_terms(level: Level, terms: Terms) -> Self {
        Self {
            level,
            terms: terms.into_iter().map(|(w, c)| (Word(w), c)).collect(),
        }
    }

    /// Builds from words already known to be normal.
    pub(crate) fn from_normal_terms(level: Level, terms: BTreeMap<Word, LaurentScalar>) -> Self {
        debug_assert!(terms.keys().all(Word::is_normal));
        debug_assert!(terms.values().all(|c| !c.is_zero()));
        Self { level, terms }
    }

    pub fn level(&self) -> Level {
        self.level
    }

    pub fn terms(&self) -> &BTreeMap<Word, LaurentScalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> LaurentScalar {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &LaurentScalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.level);
        }
        Self {
            level: self.level,
            terms: self
                .terms
                .iter()
                .map(|(w, x)| (w.clone(), x * c))
                .collect(),
        }
    }

    /// Same terms viewed at another level; errors if a letter falls outside.
    pub fn relevel(&self, level: Level) -> Result<Self, QgrError> {
        for w in self.terms.keys() {
            check_letters(&level, w.letters())?;
        }
        Ok(Self {
            level,
            terms: self.terms.clone(),
        })
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
        self.try_add(&-other)
    }

    /// Normalized product.
    pub fn nc_mul(&self, other: &Self) -> Result<Self, QgrError> {
        self.level.require_same(&other.level)?;
        let mut acc = Terms::new();
        for (u, cu) in &self.terms {
            for (v, cv) in &other.terms {
                rewrite::mul_into(&mut acc, &u.0, &v.0, &(cu * cv));
            }
        }
        Ok(Self::from_terms(self.level, acc))
    }

    /// Commutator `xy - yx`.
    pub fn commutator(&self, other: &Self) -> Result<Self, QgrError> {
        self.nc_mul(other)?.try_sub(&other.nc_mul(self)?)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.level);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    pub(crate) fn add_term(&mut self, w: Word, c: LaurentScalar) {
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

    /// Largest word length, or `None` for zero.
    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(Word::len).max()
    }

    /// Splits by word length.
    pub fn homogeneous_parts(&self) -> BTreeMap<usize, NCPoly> {
        let mut parts: BTreeMap<usize, NCPoly> = BTreeMap::new();
        for (w, c) in &self.terms {
            parts
                .entry(w.len())
                .or_insert_with(|| NCPoly::zero(self.level))
                .terms
                .insert(w.clone(), c.clone());
        }
        parts
    }

    /// Value at `q = 1`, where the algebra is commutative; keys are sorted
    /// words, i.e. commutative monomials.
    pub fn at_one(&self) -> BTreeMap<Word, BigRational> {
        let mut out: BTreeMap<Word, BigRational> = BTreeMap::new();
        for (w, c) in &self.terms {
            let v = c.at_one();
            let slot = out.entry(w.clone()).or_default();
            *slot += v;
        }
        out.retain(|_, v| *v != BigRational::default());
        out
    }
}

fn check_letters(level: &Level, letters: &[Gen]) -> Result<(), QgrError> {
    match letters.iter().find(|g| !level.contains(**g)) {
        Some(g) => Err(QgrError::IndexOutOfRange {
            row: g.row,
            col: g.col,
            level: *level,
        }),
        None => Ok(()),
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, c: &LaurentScalar, body: &str, first: bool) -> fmt::Result {
    let text = c.to_string();
    let (neg, mag) = if c.term_count() == 1 && text.starts_with('-') {
        (true, text[1..].to_string())
    } else {
        (false, text)
    };
    match (first, neg) {
        (true, true) => f.write_str("-")?,
        (true, false) => {}
        (false, true) => f.write_str(" - ")?,
        (false, false) => f.write_str(" + ")?,
    }
    let coeff = if c.term_count() > 1 {
        format!("({mag})")
    } else {
        mag
    };
    if body.is_empty() {
        f.write_str(&coeff)
    } else if coeff == "1" {
        f.write_str(body)
    } else {
        write!(f, "{coeff}*{body}")
    }
}

/// Renders a sum of `coeff*body` terms in the expression grammar.
pub(crate) fn fmt_sum<'a, I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    I: IntoIterator<Item = (String, &'a LaurentScalar)>,
{
    let mut first = true;
    for (body, c) in terms {
        write_term(f, c, &body, first)?;
        first = false;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_sum(
            f,
            self.terms.iter().map(|(w, c)| {
                let body = if w.is_empty() { String::new() } else { w.to_string() };
                (body, c)
            }),
        )
    }
}

impl fmt::Debug for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NCPoly{}[{}]", self.level, self)
    }
}

// Operator forms panic on level mismatch; use the `try_*` methods when the
// levels are not known to agree.

impl Add<&NCPoly> for &NCPoly {
    type Output = NCPoly;
    fn add(self, rhs: &NCPoly) -> NCPoly {
        self.try_add(rhs).expect("adding polynomials of different levels")
    }
}

impl Sub<&NCPoly> for &NCPoly {
    type Output = NCPoly;
    fn sub(self, rhs: &NCPoly) -> NCPoly {
        self.try_sub(rhs)
            .expect("subtracting polynomials of different levels")
    }
}

impl Mul<&NCPoly> for &NCPoly {
    type Output = NCPoly;
    fn mul(self, rhs: &NCPoly) -> NCPoly {
        self.nc_mul(rhs)
            .expect("multiplying polynomials of different levels")
    }
}

impl Neg for &NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        NCPoly {
            level: self.level,
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    coeff: LaurentScalar,
    word: Word,
}

#[derive(Serialize, Deserialize)]
struct JsonPoly {
    level: [i32; 2],
    terms: Vec<JsonTerm>,
}

impl Serialize for NCPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        JsonPoly {
            level: [self.level.m(), self.level.n()],
            terms: self
                .terms
                .iter()
                .map(|(w, c)| JsonTerm {
                    coeff: c.clone(),
                    word: w.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl NCPoly {
    /// Reads the JSON form. The column window is not part of the wire format,
    /// so the caller supplies it through `window_hint`.
    pub fn from_json_value<'de, D>(d: D, window_hint: super::ColumnWindow) -> Result<Self, D::Error>
    where
        D: serde::Deserializer<'de>,
    {
        use serde::de::Error;
        let raw = JsonPoly::deserialize(d)?;
        let level = Level::with_window(raw.level[0], raw.level[1], window_hint)
            .map_err(D::Error::custom)?;
        NCPoly::from_words(level, raw.terms.into_iter().map(|t| (t.word.0, t.coeff)))
            .map_err(D::Error::custom)
    }
}

impl Mul<LaurentScalar> for NCPoly {
    type Output = NCPoly;
    fn mul(self, rhs: LaurentScalar) -> NCPoly {
        self.scale(&rhs)
    }
}
